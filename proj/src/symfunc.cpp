#include "dtv/symfunc.hpp"

#include "dtv/errors.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace dtv {

namespace {

Partition merge_parts(const Partition& a, const Partition& b) {
    std::vector<int> p = a.parts();
    p.insert(p.end(), b.parts().begin(), b.parts().end());
    std::sort(p.begin(), p.end(), std::greater<int>());
    return Partition(std::move(p));
}

ExactScalar zpart(const Partition& la) {
    return ExactScalar(Rat(la.centralizer_order(), 1));
}

// h_n expanded in power sums: sum_{|la|=n} p_la / z(la)
std::map<Partition, ExactScalar> h_in_p(int n) {
    std::map<Partition, ExactScalar> out;
    for (auto& la : Partition::all_of(n))
        out[la] = ExactScalar(Rat(1)) / zpart(la);
    return out;
}

struct DegreeTables {
    // transition matrices per degree, rows/cols indexed by Partition::basis(n)
    Matrix h2p, p2h, s2p, p2s, m2p, p2m;
    std::vector<Partition> parts;
    std::map<Partition, size_t> index;
};

std::map<Partition, ExactScalar> mul_p_maps(const std::map<Partition, ExactScalar>& a,
                                            const std::map<Partition, ExactScalar>& b) {
    std::map<Partition, ExactScalar> out;
    for (auto& [la, ca] : a)
        for (auto& [mu, cb] : b) out[merge_parts(la, mu)] += ca * cb;
    return out;
}

std::map<Partition, ExactScalar> hmono_in_p(const Partition& mu) {
    std::map<Partition, ExactScalar> acc{{Partition{}, ExactScalar(1L)}};
    for (int part : mu.parts()) acc = mul_p_maps(acc, h_in_p(part));
    return acc;
}

// number of nonnegative integer matrices with row sums mu, column sums la
long matrix_count(const std::vector<int>& rows, const std::vector<int>& cols) {
    std::function<long(size_t, std::vector<int>)> rec = [&](size_t r, std::vector<int> rem) -> long {
        if (r == rows.size()) {
            for (int x : rem)
                if (x) return 0;
            return 1;
        }
        // distribute rows[r] over columns bounded by rem
        std::function<long(size_t, int)> fill = [&](size_t c, int left) -> long {
            if (c == rem.size()) return left == 0 ? rec(r + 1, rem) : 0;
            long total = 0;
            int old = rem[c];
            for (int take = 0; take <= std::min(left, old); ++take) {
                rem[c] = old - take;
                total += fill(c + 1, left - take);
            }
            rem[c] = old;
            return total;
        };
        return fill(0, rows[r]);
    };
    return rec(0, cols);
}

std::map<int, DegreeTables>& registry() {
    static std::map<int, DegreeTables> reg;
    return reg;
}

// Jacobi-Trudi in h for a straight shape, as a p-expansion
std::map<Partition, ExactScalar> schur_in_p(const Partition& la);

const DegreeTables& tables(int n) {
    auto& reg = registry();
    auto it = reg.find(n);
    if (it != reg.end()) return it->second;
    DegreeTables t;
    t.parts = Partition::basis(n);
    size_t k = t.parts.size();
    for (size_t i = 0; i < k; ++i) t.index[t.parts[i]] = i;
    auto index = [&](const Partition& la) { return t.index.at(la); };
    // h2p: column j = expansion of h_{parts[j]} in p
    t.h2p = Matrix(k, k);
    for (size_t j = 0; j < k; ++j)
        for (auto& [la, c] : hmono_in_p(t.parts[j])) t.h2p.at(index(la), j) = c;
    t.p2h = *t.h2p.inverse();
    t.s2p = Matrix(k, k);
    for (size_t j = 0; j < k; ++j)
        for (auto& [la, c] : schur_in_p(t.parts[j])) t.s2p.at(index(la), j) = c;
    t.p2s = *t.s2p.inverse();
    // m2p via h = N * m with N_{mu,la} = #matrices(mu, la)
    Matrix N(k, k);
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j)
            N.at(i, j) = ExactScalar((long)matrix_count(t.parts[i].parts(), t.parts[j].parts()));
    Matrix Ninv = *N.inverse();
    // m-column in p: m = N^{-1} h (as expansions): m2p = h2p * (N^{-1})^T? Careful:
    // h_mu = sum_la N_{mu,la} m_la  =>  column of m_la in h-basis is (N^{-1})_{la,mu}^T.
    // m_la = sum_mu (N^{-1})_{la,mu}^... solve: m-vector = N^{-1} applied on h expansions.
    // Writing H, M for column collections: H = M N^T  =>  M = H (N^T)^{-1}.
    t.m2p = t.h2p * (*N.transpose().inverse());
    t.p2m = *t.m2p.inverse();
    return reg.emplace(n, std::move(t)).first->second;
}

std::map<Partition, ExactScalar> schur_in_p(const Partition& la) {
    // det(h_{la_i - i + j}) over permutations, small degrees only
    int l = la.length();
    std::map<Partition, ExactScalar> acc;
    if (l == 0) {
        acc[Partition{}] = ExactScalar(1L);
        return acc;
    }
    std::vector<int> perm(l);
    for (int i = 0; i < l; ++i) perm[i] = i;
    do {
        int sign = 1;
        {
            std::vector<int> p = perm;
            for (int i = 0; i < l; ++i)
                while (p[i] != i) {
                    std::swap(p[i], p[p[i]]);
                    sign = -sign;
                }
        }
        std::vector<int> rows;
        bool ok = true;
        for (int i = 0; i < l && ok; ++i) {
            int e = la.part(i) - i + perm[i];
            if (e < 0) ok = false;
            else if (e > 0) rows.push_back(e);
        }
        if (!ok) continue;
        std::sort(rows.begin(), rows.end(), std::greater<int>());
        auto term = hmono_in_p(Partition(rows));
        for (auto& [mu, c] : term) {
            if (sign > 0)
                acc[mu] += c;
            else
                acc[mu] -= c;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (auto it = acc.begin(); it != acc.end();)
        it = it->second.is_zero() ? acc.erase(it) : std::next(it);
    return acc;
}

} // namespace

SymFunc SymFunc::one() {
    return SymFunc(SymBasis::P, {{Partition{}, ExactScalar(1L)}});
}

SymFunc SymFunc::generator(SymBasis b, const Partition& la) {
    return SymFunc(b, {{la, ExactScalar(1L)}});
}

void SymFunc::prune() {
    for (auto it = terms_.begin(); it != terms_.end();)
        it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
}

int SymFunc::degree() const {
    int d = 0;
    for (auto& [la, c] : terms_) d = std::max(d, la.size());
    return d;
}

SymFunc SymFunc::to_basis(SymBasis b) const {
    if (b == basis_) return *this;
    // route everything through p
    if (basis_ != SymBasis::P) {
        std::map<Partition, ExactScalar> out;
        for (auto& [la, c] : terms_) {
            int n = la.size();
            if (n == 0) {
                out[la] += c;
                continue;
            }
            const auto& t = tables(n);
            const Matrix* conv = basis_ == SymBasis::H   ? &t.h2p
                                 : basis_ == SymBasis::S ? &t.s2p
                                                         : &t.m2p;
            size_t idx = t.index.at(la);
            for (size_t i = 0; i < t.parts.size(); ++i) {
                const ExactScalar& e = conv->at(i, idx);
                if (!e.is_zero()) out[t.parts[i]] += c * e;
            }
        }
        return SymFunc(SymBasis::P, std::move(out)).to_basis(b);
    }
    if (b == SymBasis::P) return *this;
    std::map<Partition, ExactScalar> out;
    for (auto& [la, c] : terms_) {
        int n = la.size();
        if (n == 0) {
            out[la] += c;
            continue;
        }
        const auto& t = tables(n);
        const Matrix* conv = b == SymBasis::H   ? &t.p2h
                             : b == SymBasis::S ? &t.p2s
                                                : &t.p2m;
        size_t idx = t.index.at(la);
        for (size_t i = 0; i < t.parts.size(); ++i) {
            const ExactScalar& e = conv->at(i, idx);
            if (!e.is_zero()) out[t.parts[i]] += c * e;
        }
    }
    return SymFunc(b, std::move(out));
}

SymFunc SymFunc::operator+(const SymFunc& o) const {
    if (basis_ != o.basis_) return to_basis(SymBasis::P) + o.to_basis(SymBasis::P);
    std::map<Partition, ExactScalar> out = terms_;
    for (auto& [la, c] : o.terms_) out[la] += c;
    return SymFunc(basis_, std::move(out));
}

SymFunc SymFunc::operator-(const SymFunc& o) const { return *this + o.scaled(ExactScalar(-1L)); }

SymFunc SymFunc::operator*(const SymFunc& o) const {
    auto a = to_basis(SymBasis::P), b = o.to_basis(SymBasis::P);
    return SymFunc(SymBasis::P, mul_p_maps(a.terms_, b.terms_));
}

SymFunc SymFunc::scaled(const ExactScalar& c) const {
    std::map<Partition, ExactScalar> out;
    for (auto& [la, x] : terms_) out[la] = x * c;
    return SymFunc(basis_, std::move(out));
}

bool SymFunc::operator==(const SymFunc& o) const {
    auto a = to_basis(SymBasis::P).terms_;
    auto b = o.to_basis(SymBasis::P).terms_;
    return a == b;
}

std::string SymFunc::str() const {
    static const char* names[] = {"p", "h", "m", "s"};
    std::ostringstream os;
    bool first = true;
    for (auto& [la, c] : terms_) {
        if (!first) os << " + ";
        os << "(" << c.str() << ")*" << names[(int)basis_] << la.str();
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

ExactScalar hall_pairing(const SymFunc& f, const SymFunc& g) {
    auto a = f.to_basis(SymBasis::P).terms();
    auto b = g.to_basis(SymBasis::P).terms();
    ExactScalar out;
    for (auto& [la, c] : a) {
        auto it = b.find(la);
        if (it != b.end()) out += c * it->second * zpart(la);
    }
    return out;
}

SymFunc skew_schur(const Partition& la, const Partition& eta) {
    if (!la.contains(eta)) return SymFunc::zero();
    int l = la.length();
    if (l == 0) return SymFunc::one();
    std::vector<int> perm(l);
    for (int i = 0; i < l; ++i) perm[i] = i;
    std::map<Partition, ExactScalar> acc;
    do {
        int sign = 1;
        {
            std::vector<int> p = perm;
            for (int i = 0; i < l; ++i)
                while (p[i] != i) {
                    std::swap(p[i], p[p[i]]);
                    sign = -sign;
                }
        }
        std::vector<int> rows;
        bool ok = true;
        for (int i = 0; i < l && ok; ++i) {
            int e = la.part(i) - eta.part(perm[i]) - i + perm[i];
            if (e < 0) ok = false;
            else if (e > 0) rows.push_back(e);
        }
        if (!ok) continue;
        std::sort(rows.begin(), rows.end(), std::greater<int>());
        acc[Partition(rows)] += ExactScalar((long)sign);
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::map<Partition, ExactScalar> terms;
    for (auto& [mu, c] : acc)
        if (!c.is_zero()) terms[mu] += c;
    return SymFunc(SymBasis::H, std::move(terms)).to_basis(SymBasis::S);
}

SymFunc adjoint_apply(const SymFunc& f, const SymFunc& g) {
    auto fp = f.to_basis(SymBasis::P).terms();
    auto gp = g.to_basis(SymBasis::P).terms();
    std::map<Partition, ExactScalar> out;
    for (auto& [la, cf] : fp) {
        for (auto& [mu, cg] : gp) {
            // apply prod_i la_i d/dp_{la_i} to p_mu
            Partition cur = mu;
            ExactScalar coef = cf * cg;
            bool ok = true;
            for (int part : la.parts()) {
                int m = cur.multiplicity(part);
                if (m == 0) {
                    ok = false;
                    break;
                }
                coef = coef * ExactScalar((long)part * m);
                cur = cur.without_part(part);
            }
            if (ok) out[cur] += coef;
        }
    }
    return SymFunc(SymBasis::P, std::move(out));
}

ExactScalar specialize_qrho(const SymFunc& f) {
    auto fh = f.to_basis(SymBasis::H).terms();
    // h_n(q^rho) = q^{n^2/2} / prod_{k=1..n} (q^k - 1)
    auto h_val = [](int n) {
        ExactScalar v = ExactScalar::qh(n * n);
        for (int k = 1; k <= n; ++k)
            v = v / (ExactScalar::q(k) - ExactScalar(1L));
        return v;
    };
    ExactScalar out;
    for (auto& [mu, c] : fh) {
        ExactScalar term = c;
        for (int part : mu.parts()) term = term * h_val(part);
        out += term;
    }
    return out;
}

std::vector<Partition> two_leg_rows(int n) { return Partition::basis(n); }

std::vector<Partition> two_leg_cols(int n) {
    std::vector<Partition> cols;
    for (int m = 0; m < n; ++m)
        for (auto& mu : Partition::basis(m)) cols.push_back(mu);
    return cols;
}

Matrix two_leg_matrix(int n) {
    auto rows = two_leg_rows(n);
    auto cols = two_leg_cols(n);
    Matrix M(rows.size(), cols.size());
    for (size_t i = 0; i < rows.size(); ++i) {
        Partition lat = rows[i].transpose();
        for (size_t j = 0; j < cols.size(); ++j) {
            ExactScalar entry;
            int bound = std::min(lat.size(), cols[j].size());
            for (int m = 0; m <= bound; ++m)
                for (auto& eta : Partition::all_of(m)) {
                    SymFunc a = skew_schur(lat, eta);
                    if (a.is_zero()) continue;
                    SymFunc b = skew_schur(cols[j], eta);
                    if (b.is_zero()) continue;
                    entry += specialize_qrho(a) * specialize_qrho(b);
                }
            M.at(i, j) = entry;
        }
    }
    return M;
}

SymFunc skew_schur_tableaux(const Partition& la, const Partition& eta) {
    // sum over semistandard tableaux of shape la/eta, recorded by content
    if (!la.contains(eta)) return SymFunc::zero();
    int n = la.size() - eta.size();
    if (n == 0) return SymFunc::one();
    int l = la.length();
    // fill cells row by row with entries 1..n, rows weakly increasing,
    // columns strictly increasing
    std::vector<std::vector<int>> grid(l);
    for (int i = 0; i < l; ++i) grid[i] = std::vector<int>(la.part(i), 0);
    std::map<Partition, ExactScalar> acc;
    std::function<void(int, int)> rec = [&](int r, int c) {
        if (r == l) {
            std::vector<long> content(n + 1, 0);
            for (int i = 0; i < l; ++i)
                for (int j = eta.part(i); j < la.part(i); ++j) ++content[grid[i][j]];
            std::vector<int> comp;
            for (int v = 1; v <= n; ++v)
                if (content[v]) comp.push_back((int)content[v]);
            std::sort(comp.begin(), comp.end(), std::greater<int>());
            // monomial-basis bookkeeping: tableaux counted by content give the
            // monomial expansion; collecting sorted contents overcounts unless
            // we only accept weakly decreasing content vectors.
            bool sorted_ok = true;
            for (int v = 1; v + 1 <= n; ++v)
                if (content[v] < content[v + 1]) sorted_ok = false;
            if (!sorted_ok) return;
            std::vector<int> parts;
            for (int v = 1; v <= n; ++v)
                if (content[v]) parts.push_back((int)content[v]);
            acc[Partition(parts)] += ExactScalar(1L);
            return;
        }
        if (c >= la.part(r)) {
            rec(r + 1, r + 1 < l ? eta.part(r + 1) : 0);
            return;
        }
        int lo = 1;
        if (c > eta.part(r) && c > 0) lo = std::max(lo, grid[r][c - 1]);
        if (r > 0 && c < la.part(r - 1) && c >= eta.part(r - 1)) lo = std::max(lo, grid[r - 1][c] + 1);
        for (int v = lo; v <= n; ++v) {
            grid[r][c] = v;
            rec(r, c + 1);
        }
        grid[r][c] = 0;
    };
    rec(0, eta.part(0));
    return SymFunc(SymBasis::M, std::move(acc));
}

} // namespace dtv
