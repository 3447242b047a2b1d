#include "dtv/poly.hpp"

#include <algorithm>
#include <sstream>

namespace dtv {

const std::array<const char*, NVARS> VAR_NAMES = {"t1", "t2", "t3", "qh"};

Poly Poly::linear_form(const Rat& a1, const Rat& a2, const Rat& a3) {
    Poly p;
    if (a1 != 0) p.terms_.push_back({Mono{1, 0, 0, 0}, a1});
    if (a2 != 0) p.terms_.push_back({Mono{0, 1, 0, 0}, a2});
    if (a3 != 0) p.terms_.push_back({Mono{0, 0, 1, 0}, a3});
    std::sort(p.terms_.begin(), p.terms_.end(),
              [](const Term& x, const Term& y) { return mono_less(x.m, y.m); });
    return p;
}

void Poly::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& x, const Term& y) { return mono_less(x.m, y.m); });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().m == t.m)
            out.back().c += t.c;
        else
            out.push_back(t);
        if (!out.empty() && out.back().c == 0) out.pop_back();
    }
    terms_ = std::move(out);
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& t : r.terms_) t.c = -t.c;
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r;
    r.terms_.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j >= o.terms_.size() ||
            (i < terms_.size() && mono_less(terms_[i].m, o.terms_[j].m))) {
            r.terms_.push_back(terms_[i++]);
        } else if (i >= terms_.size() || mono_less(o.terms_[j].m, terms_[i].m)) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            Rat c = terms_[i].c + o.terms_[j].c;
            if (c != 0) r.terms_.push_back({terms_[i].m, c});
            ++i, ++j;
        }
    }
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    // few-term side drives sorted merges; keeps everything allocation-light
    const Poly& small = terms_.size() <= o.terms_.size() ? *this : o;
    const Poly& big = terms_.size() <= o.terms_.size() ? o : *this;
    if (small.terms_.size() <= 6) {
        Poly acc;
        for (auto& t : small.terms_) acc = acc + big.mul_mono(t.m, t.c);
        return acc;
    }
    std::map<Mono, Rat, bool (*)(const Mono&, const Mono&)> acc(mono_less);
    for (auto& a : terms_)
        for (auto& b : o.terms_) {
            Mono m;
            for (int k = 0; k < NVARS; ++k) m[k] = a.m[k] + b.m[k];
            acc[m] += a.c * b.c;
        }
    Poly r;
    r.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c != 0) r.terms_.push_back({m, c});
    return r;
}

Poly Poly::scaled(const Rat& s) const {
    Rat ss = s;
    ss.canonicalize();
    if (ss == 0) return Poly();
    Poly r = *this;
    for (auto& t : r.terms_) t.c *= ss;
    return r;
}

Poly Poly::mul_mono(const Mono& m, const Rat& c) const {
    if (c == 0) return Poly();
    // callers pass canonical rationals; products below stay canonical
    Poly r = *this;
    for (auto& t : r.terms_) {
        for (int k = 0; k < NVARS; ++k) t.m[k] += m[k];
        t.c *= c;
    }
    return r;
}

Poly Poly::pow(int e) const {
    Poly r(Rat(1));
    Poly b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

namespace {

// cheap certificate that a linear polynomial does not divide f: evaluate f at
// deterministic pseudo-random points on the hyperplane lin = 0 modulo a prime
constexpr unsigned long long DIV_P = 2305843009213693951ull; // 2^61 - 1
unsigned long long mulmod(unsigned long long a, unsigned long long b) {
    return (unsigned long long)((unsigned __int128)a * b % DIV_P);
}
unsigned long long powmod(unsigned long long a, unsigned long long e) {
    unsigned long long r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a);
        a = mulmod(a, a);
        e >>= 1;
    }
    return r;
}
unsigned long long invmod(unsigned long long a) { return powmod(a % DIV_P, DIV_P - 2); }

unsigned long long rat_mod(const Rat& c) {
    if (mpz_cmp_ui(c.get_den_mpz_t(), 1) == 0 && mpz_fits_slong_p(c.get_num_mpz_t())) {
        long n = mpz_get_si(c.get_num_mpz_t());
        return n >= 0 ? (unsigned long long)n % DIV_P
                      : DIV_P - ((unsigned long long)(-n) % DIV_P);
    }
    unsigned long long n = mpz_fdiv_ui(c.get_num_mpz_t(), DIV_P);
    unsigned long long d = mpz_fdiv_ui(c.get_den_mpz_t(), DIV_P);
    if (d == 0) return 0; // degenerate; caller treats as inconclusive
    return mulmod(n, invmod(d));
}

bool linear_reject(const Poly& f, const Poly& lin) {
    // pick the variable carried by the leading term of lin
    int v = -1;
    for (int k = 0; k < NVARS; ++k)
        if (lin.leading().m[k] > 0) v = k;
    if (v < 0 || lin.leading().m[v] != 1 || lin.total_degree() != 1) return false;
    unsigned long long state = 88172645463325252ull;
    auto next = [&state] {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state % (DIV_P - 2) + 1;
    };
    for (int trial = 0; trial < 2; ++trial) {
        unsigned long long pt[NVARS];
        for (int k = 0; k < NVARS; ++k) pt[k] = next();
        // solve lin = 0 for variable v
        unsigned long long rhs = 0, coef = 0;
        for (auto& t : lin.terms()) {
            unsigned long long c = rat_mod(t.c);
            if (t.m[v] == 1)
                coef = c;
            else {
                unsigned long long val = c;
                for (int k = 0; k < NVARS; ++k)
                    for (int e = 0; e < t.m[k]; ++e) val = mulmod(val, pt[k]);
                rhs = (rhs + val) % DIV_P;
            }
        }
        if (coef == 0) return false; // inconclusive
        pt[v] = mulmod(DIV_P - rhs % DIV_P, invmod(coef));
        // power tables per variable
        std::array<std::vector<unsigned long long>, NVARS> pw;
        for (int k = 0; k < NVARS; ++k) {
            pw[k].assign(f.degree(k) + 1, 1);
            for (size_t e = 1; e < pw[k].size(); ++e) pw[k][e] = mulmod(pw[k][e - 1], pt[k]);
        }
        unsigned long long acc = 0;
        for (auto& t : f.terms()) {
            unsigned long long val = rat_mod(t.c);
            for (int k = 0; k < NVARS; ++k)
                if (t.m[k]) val = mulmod(val, pw[k][t.m[k]]);
            acc = (acc + val) % DIV_P;
        }
        if (acc != 0) return true; // certainly not divisible
    }
    return false;
}

} // namespace

std::optional<Poly> Poly::divide_exact(const Poly& d) const {
    if (d.is_zero()) return std::nullopt;
    if (is_zero()) return Poly();
    if (d.total_degree() == 1 && mono_total(d.mono_content()) == 0 && linear_reject(*this, d))
        return std::nullopt;
    std::map<Mono, Rat, bool (*)(const Mono&, const Mono&)> rem(mono_less);
    for (auto& t : terms_) rem[t.m] = t.c;
    Poly quot;
    const Term& lead = d.leading();
    while (!rem.empty()) {
        auto rl = std::prev(rem.end());
        Mono qm;
        for (int k = 0; k < NVARS; ++k) {
            qm[k] = rl->first[k] - lead.m[k];
            if (qm[k] < 0) return std::nullopt;
        }
        Rat qc = rl->second / lead.c;
        quot.terms_.push_back({qm, qc});
        for (auto& t : d.terms_) {
            Mono m;
            for (int k = 0; k < NVARS; ++k) m[k] = t.m[k] + qm[k];
            auto it = rem.find(m);
            if (it == rem.end()) {
                rem.emplace(m, -(t.c * qc));
            } else {
                it->second -= t.c * qc;
                if (it->second == 0) rem.erase(it);
            }
        }
    }
    quot.normalize();
    return quot;
}

std::pair<Rat, Poly> Poly::primitive() const {
    if (is_zero()) return {Rat(0), Poly()};
    // content = gcd of numerators / lcm of denominators, signed by leading coeff
    Int num_gcd = 0, den_lcm = 1;
    for (auto& t : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.c.get_num_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.c.get_den_mpz_t());
    }
    Rat content(num_gcd, den_lcm);
    content.canonicalize();
    if (leading().c < 0) content = -content;
    Poly prim = scaled(Rat(1) / content);
    return {content, prim};
}

Mono Poly::mono_content() const {
    if (is_zero()) return Mono{0, 0, 0, 0};
    Mono m = terms_[0].m;
    for (auto& t : terms_)
        for (int k = 0; k < NVARS; ++k) m[k] = std::min(m[k], t.m[k]);
    return m;
}

Poly Poly::shift_mono(const Mono& m) const {
    Poly r = *this;
    for (auto& t : r.terms_)
        for (int k = 0; k < NVARS; ++k) t.m[k] -= m[k];
    return r;
}

std::map<int, Poly> Poly::coeffs_in(int v) const {
    std::map<int, Poly> out;
    for (auto& t : terms_) {
        Mono m = t.m;
        int e = m[v];
        m[v] = 0;
        out[e].terms_.push_back({m, t.c});
    }
    for (auto& [e, p] : out) p.normalize();
    return out;
}

Poly Poly::from_coeffs_in(int v, const std::map<int, Poly>& c) {
    Poly r;
    for (auto& [e, p] : c)
        for (auto& t : p.terms()) {
            Mono m = t.m;
            m[v] += e;
            r.terms_.push_back({m, t.c});
        }
    r.normalize();
    return r;
}

Poly Poly::substitute(int v, const Poly& p) const {
    auto cs = coeffs_in(v);
    Poly r;
    Poly pw(Rat(1));
    int last = 0;
    for (auto& [e, c] : cs) {
        while (last < e) {
            pw = pw * p;
            ++last;
        }
        r += c * pw;
    }
    return r;
}

int Poly::t_degree() const {
    int d = 0;
    for (auto& t : terms_) d = std::max(d, t.m[0] + t.m[1] + t.m[2]);
    return d;
}

bool Poly::t_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_[0].m[0] + terms_[0].m[1] + terms_[0].m[2];
    for (auto& t : terms_)
        if (t.m[0] + t.m[1] + t.m[2] != d) return false;
    return true;
}

Poly Poly::t_homogenized(int v) const {
    int d = t_degree();
    Poly r = *this;
    for (auto& t : r.terms_) t.m[v] += d - (t.m[0] + t.m[1] + t.m[2]);
    r.normalize();
    return r;
}

int Poly::cmp(const Poly& a, const Poly& b) {
    size_t n = std::min(a.terms_.size(), b.terms_.size());
    for (size_t i = 0; i < n; ++i) {
        if (a.terms_[i].m != b.terms_[i].m)
            return mono_less(a.terms_[i].m, b.terms_[i].m) ? -1 : 1;
        if (a.terms_[i].c != b.terms_[i].c)
            return a.terms_[i].c < b.terms_[i].c ? -1 : 1;
    }
    if (a.terms_.size() != b.terms_.size())
        return a.terms_.size() < b.terms_.size() ? -1 : 1;
    return 0;
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    // print highest term first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Rat& c = it->c;
        if (it != terms_.rbegin())
            os << (c > 0 ? " + " : " - ");
        else if (c < 0)
            os << "-";
        Rat ac = abs(c);
        bool unit = ac == 1 && mono_total(it->m) > 0;
        bool printed = false;
        if (!unit) {
            os << ac.get_str();
            printed = true;
        }
        for (int v = 0; v < NVARS; ++v) {
            if (it->m[v] == 0) continue;
            if (printed) os << "*";
            os << VAR_NAMES[v];
            if (it->m[v] > 1) os << "^" << it->m[v];
            printed = true;
        }
    }
    return os.str();
}

namespace {

// pseudo-remainder of a by b as univariate polys in v (Poly coefficients)
std::map<int, Poly> prem_uni(std::map<int, Poly> a, const std::map<int, Poly>& b, int v) {
    auto deg = [](const std::map<int, Poly>& u) {
        int d = -1;
        for (auto& [e, c] : u)
            if (!c.is_zero()) d = std::max(d, e);
        return d;
    };
    int db = deg(b);
    Poly lb = b.at(db);
    int da = deg(a);
    while (da >= db && da >= 0) {
        Poly la = a.at(da);
        // a = a*lb - la * x^(da-db) * b
        std::map<int, Poly> next;
        for (auto& [e, c] : a)
            if (e != da) next[e] = c * lb;
        for (auto& [e, c] : b)
            if (e != db) {
                auto& slot = next[e + da - db];
                slot = slot - la * c;
            }
        // drop zero entries
        for (auto it = next.begin(); it != next.end();)
            it = it->second.is_zero() ? next.erase(it) : std::next(it);
        a = std::move(next);
        da = deg(a);
    }
    return a;
}

Poly content_in(const std::map<int, Poly>& u) {
    Poly g;
    for (auto& [e, c] : u) g = Poly::gcd(g, c);
    return g;
}

} // namespace

Poly Poly::gcd(const Poly& A, const Poly& B) {
    if (A.is_zero()) return B.is_zero() ? Poly() : B.primitive().second;
    if (B.is_zero()) return A.primitive().second;

    Mono ma = A.mono_content(), mb = B.mono_content(), mg;
    for (int k = 0; k < NVARS; ++k) mg[k] = std::min(ma[k], mb[k]);
    Poly a = A.shift_mono(A.mono_content()).primitive().second;
    Poly b = B.shift_mono(B.mono_content()).primitive().second;

    Poly g;
    if (a.is_constant() || b.is_constant()) {
        g = Poly(Rat(1));
    } else if (a == b) {
        g = a;
    } else if (a.total_degree() == 1 || b.total_degree() == 1) {
        // primitive linear polynomials are irreducible
        const Poly& lin = a.total_degree() == 1 ? a : b;
        const Poly& other = a.total_degree() == 1 ? b : a;
        g = other.divisible_by(lin) ? lin : Poly(Rat(1));
    } else if (a.divisible_by(b)) {
        g = b;
    } else if (b.divisible_by(a)) {
        g = a;
    } else if ([&] {
                   int va = -1, vb = -1;
                   for (int k = 0; k < NVARS; ++k) {
                       if (a.involves(k)) va = va == -1 ? k : -2;
                       if (b.involves(k)) vb = vb == -1 ? k : -2;
                   }
                   return va >= 0 && va == vb;
               }()) {
        // both univariate in the same variable: Euclid with primitive
        // normalization per step to keep coefficients small
        int v = 0;
        while (!a.involves(v)) ++v;
        Poly x = a, y = b;
        while (!y.is_zero()) {
            while (!x.is_zero() && x.degree(v) >= y.degree(v)) {
                Mono qm{0, 0, 0, 0};
                qm[v] = x.degree(v) - y.degree(v);
                Rat qc = x.leading().c / y.leading().c;
                x = x - y.mul_mono(qm, qc);
            }
            if (!x.is_zero()) x = x.primitive().second;
            std::swap(x, y);
        }
        g = x.is_zero() ? Poly(Rat(1)) : x.primitive().second;
    } else {
        // primitive PRS in the shared variable of least max-degree
        int v = -1, best = 0;
        for (int k = 0; k < NVARS; ++k) {
            int d = std::max(a.degree(k), b.degree(k));
            if (a.involves(k) && b.involves(k) && (v < 0 || d < best)) {
                v = k;
                best = d;
            }
        }
        if (v < 0) {
            g = Poly(Rat(1)); // no shared variable
        } else {
            auto ua = a.coeffs_in(v), ub = b.coeffs_in(v);
            Poly ca = content_in(ua), cb = content_in(ub);
            Poly cg = gcd(ca, cb);
            auto strip = [&](std::map<int, Poly>& u, const Poly& c) {
                for (auto& [e, p] : u) p = *p.divide_exact(c);
            };
            strip(ua, ca);
            strip(ub, cb);
            auto deg = [](const std::map<int, Poly>& u) {
                int d = -1;
                for (auto& [e, c] : u)
                    if (!c.is_zero()) d = std::max(d, e);
                return d;
            };
            if (deg(ua) < deg(ub)) std::swap(ua, ub);
            while (true) {
                auto r = prem_uni(ua, ub, v);
                if (r.empty()) {
                    Poly pp = from_coeffs_in(v, ub);
                    pp = pp.shift_mono(pp.mono_content()).primitive().second;
                    Poly c2 = content_in(pp.coeffs_in(v));
                    if (!c2.is_one()) pp = *pp.divide_exact(c2);
                    g = cg * pp;
                    break;
                }
                if (deg(r) <= 0) {
                    g = cg;
                    break;
                }
                Poly cr = content_in(r);
                for (auto& [e, p] : r) p = *p.divide_exact(cr);
                ua = std::move(ub);
                ub = std::move(r);
            }
        }
    }
    g = g.mul_mono(mg, Rat(1));
    return g.primitive().second;
}

Poly poly_gcd(const Poly& a, const Poly& b) { return Poly::gcd(a, b); }

} // namespace dtv
