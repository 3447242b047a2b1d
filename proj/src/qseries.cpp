#include "dtv/qseries.hpp"

#include "dtv/errors.hpp"
#include "dtv/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace dtv {

QSeries::QSeries(int offset, std::vector<ExactScalar> coeffs, int trunc)
    : offset_(offset), coeffs_(std::move(coeffs)), trunc_(trunc) {
    if ((int)coeffs_.size() != trunc_ - offset_ + 1)
        throw ValidationError("QSeries coefficient count does not match offset/truncation");
}

QSeries QSeries::one(int trunc) {
    std::vector<ExactScalar> c(trunc + 1);
    c[0] = ExactScalar(1L);
    return QSeries(0, std::move(c), trunc);
}

QSeries QSeries::monomial_q(int qpow, const ExactScalar& c, int trunc) {
    return monomial_qh(2 * qpow, c, trunc);
}

QSeries QSeries::monomial_qh(int qhpow, const ExactScalar& c, int trunc) {
    if (qhpow > trunc) throw ValidationError("monomial beyond truncation");
    std::vector<ExactScalar> v(trunc - qhpow + 1);
    v[0] = c;
    return QSeries(qhpow, std::move(v), trunc);
}

ExactScalar QSeries::coeff_qh(int n) const {
    if (n > trunc_) throw ValidationError("coefficient beyond truncation order");
    if (n < offset_) return ExactScalar();
    return coeffs_[n - offset_];
}

bool QSeries::is_zero() const {
    for (auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

int QSeries::valuation() const {
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero()) return offset_ + (int)i;
    return trunc_ + 1;
}

QSeries QSeries::operator+(const QSeries& o) const {
    int tr = std::min(trunc_, o.trunc_);
    int off = std::min(offset_, o.offset_);
    std::vector<ExactScalar> c(tr - off + 1);
    for (int n = off; n <= tr; ++n) {
        ExactScalar v;
        if (n >= offset_ && n <= trunc_) v += coeffs_[n - offset_];
        if (n >= o.offset_ && n <= o.trunc_) v += o.coeffs_[n - o.offset_];
        c[n - off] = v;
    }
    return QSeries(off, std::move(c), tr);
}

QSeries QSeries::operator-() const {
    QSeries r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

QSeries QSeries::operator-(const QSeries& o) const { return *this + (-o); }

QSeries QSeries::operator*(const QSeries& o) const {
    int tr = std::min(trunc_ + o.offset_, o.trunc_ + offset_);
    int off = offset_ + o.offset_;
    if (tr < off) tr = off - 1; // empty window
    std::vector<ExactScalar> c(std::max(0, tr - off + 1));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j) {
            int n = offset_ + (int)i + o.offset_ + (int)j;
            if (n > tr) break;
            if (o.coeffs_[j].is_zero()) continue;
            c[n - off] += coeffs_[i] * o.coeffs_[j];
        }
    }
    return QSeries(off, std::move(c), tr);
}

QSeries QSeries::scaled(const ExactScalar& s) const {
    QSeries r = *this;
    for (auto& c : r.coeffs_) c = c * s;
    return r;
}

QSeries QSeries::shifted_qh(int n) const {
    QSeries r = *this;
    r.offset_ += n;
    r.trunc_ += n;
    return r;
}

QSeries QSeries::inverse() const {
    int v = valuation();
    if (v > trunc_) throw DivisionByZero("inverse of zero series");
    int K = trunc_ - v; // relative precision
    const int base = v - offset_;
    std::vector<ExactScalar> inv(K + 1);
    ExactScalar lead = coeffs_[base].inverse();
    inv[0] = lead;
    for (int k = 1; k <= K; ++k) {
        ExactScalar acc;
        for (int j = 1; j <= k; ++j) {
            const ExactScalar& aj = coeffs_[base + j];
            if (aj.is_zero()) continue;
            acc += aj * inv[k - j];
        }
        inv[k] = -(lead * acc);
    }
    return QSeries(-v, std::move(inv), -v + K);
}

QSeries QSeries::truncated(int tr) const {
    if (tr > trunc_) throw ValidationError("cannot extend truncation");
    if (tr < offset_) return QSeries(tr, {}, tr - 1).shifted_qh(0); // empty zero window
    std::vector<ExactScalar> c(coeffs_.begin(), coeffs_.begin() + (tr - offset_ + 1));
    return QSeries(offset_, std::move(c), tr);
}

QSeries QSeries::q_dq() const {
    QSeries r = *this;
    for (size_t i = 0; i < r.coeffs_.size(); ++i) {
        int n = offset_ + (int)i;
        Rat h(n, 2);
        h.canonicalize();
        r.coeffs_[i] = r.coeffs_[i] * ExactScalar(h);
    }
    return r;
}

QSeries QSeries::exp() const {
    if (valuation() < 1) throw ValidationError("exp needs positive valuation");
    QSeries result = QSeries::one(trunc_);
    QSeries term = QSeries::one(trunc_);
    // valuation >= 1 means at most trunc_ powers contribute
    for (int k = 1; k <= trunc_; ++k) {
        term = (term * *this).truncated(trunc_).scaled(ExactScalar(Rat(1, k)));
        if (term.is_zero()) break;
        result = result + term;
    }
    return result;
}

bool QSeries::same_series(const QSeries& o) const {
    int tr = std::min(trunc_, o.trunc_);
    for (int n = std::min(offset_, o.offset_); n <= tr; ++n)
        if (coeff_qh(n) != o.coeff_qh(n)) return false;
    return true;
}

bool QSeries::even_support() const {
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero() && (offset_ + (int)i) % 2 != 0) return false;
    return true;
}

std::string QSeries::str() const {
    std::ostringstream os;
    bool first = true;
    for (int n = offset_; n <= trunc_; ++n) {
        ExactScalar c = coeff_qh(n);
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        os << "(" << c.str() << ")";
        if (n != 0) {
            if (n % 2 == 0)
                os << "*q^" << (n / 2);
            else
                os << "*qh^" << n;
        }
        first = false;
    }
    if (first) os << "0";
    os << " + O(qh^" << trunc_ + 1 << ")";
    return os.str();
}

QSeries expand_qh(const ExactScalar& f, int trunc_qh) {
    if (f.is_zero()) return QSeries::zero(trunc_qh);
    auto [num, den] = f.expanded();
    if (den.is_zero()) throw NonLaurent("denominator is identically zero");
    auto nc = num.coeffs_in(VQH);
    auto dc = den.coeffs_in(VQH);
    int dval = dc.begin()->first;
    const Poly& d0 = dc.begin()->second;
    int nval = nc.begin()->first;
    int dmax = dc.rbegin()->first;

    // invert den/qh^dval as a power series in qh
    int K = trunc_qh - (nval - dval);
    if (K < 0) return QSeries::zero(trunc_qh);
    std::vector<ExactScalar> inv(K + 1);
    ExactScalar lead = ExactScalar(d0).inverse();
    inv[0] = lead;
    for (int k = 1; k <= K; ++k) {
        ExactScalar acc;
        for (int j = 1; j <= std::min(k, dmax - dval); ++j) {
            auto it = dc.find(dval + j);
            if (it == dc.end()) continue;
            acc += ExactScalar(it->second) * inv[k - j];
        }
        inv[k] = -(lead * acc);
    }
    int off = nval - dval;
    std::vector<ExactScalar> out(trunc_qh - off + 1);
    for (auto& [e, p] : nc) {
        ExactScalar pc(p);
        for (int k = 0; k <= K; ++k) {
            int n = e - dval + k;
            if (n > trunc_qh) break;
            if (!inv[k].is_zero()) out[n - off] += pc * inv[k];
        }
    }
    return QSeries(off, std::move(out), trunc_qh);
}

QSeries series_expand(const ExactScalar& f, int order_q) { return expand_qh(f, 2 * order_q); }

namespace {

ExactScalar reconstruct_impl(const QSeries& s, int nmax, int dmax, int step) {
    if (s.is_zero()) return ExactScalar();
    int val = s.valuation();
    if (step == 2) {
        if (!s.even_support() || val % 2 != 0)
            throw ValidationError("series has half-integer support; reconstruct in q impossible");
    }
    int k0 = val / step;
    if ((val % step + step) % step != 0)
        throw ValidationError("series support does not align with reconstruction variable");
    int K = s.trunc() / step; // highest complete index
    int shift = std::min(0, k0);
    int n_eff = nmax - shift;
    auto coeff = [&](int k) { return s.coeff_qh(step * k); };
    // known indices shift..K relative; re-index j = k - shift from 0
    int total = K - shift + 1;
    if (total < n_eff + dmax + 1)
        throw ValidationError("not enough known coefficients for the requested degree bounds");
    // homogeneous rows j = n_eff+1 .. total-1 : sum_m r_m c_{j-m} = 0
    int rows = total - 1 - n_eff;
    if (rows < dmax)
        throw ValidationError("not enough verification rows");
    Matrix M(rows, dmax + 1);
    for (int r = 0; r < rows; ++r) {
        int j = n_eff + 1 + r;
        for (int m = 0; m <= dmax; ++m) {
            int idx = j - m + shift; // absolute index
            M.at(r, m) = (idx >= k0 && idx <= K) ? coeff(idx)
                         : (idx < k0 ? ExactScalar() : ExactScalar());
        }
    }
    auto ker = M.kernel();
    if (ker.empty()) throw NoFit("no rational function matches within the degree bounds");

    ExactScalar z = ExactScalar::qh(step);
    auto build = [&](const std::vector<ExactScalar>& r) {
        ExactScalar den, num;
        for (int m = 0; m <= dmax; ++m) den += r[m] * z.pow(m);
        for (int j = 0; j <= n_eff; ++j) {
            ExactScalar pj;
            for (int m = 0; m <= std::min(j, dmax); ++m) {
                int idx = j - m + shift;
                if (idx >= k0 && idx <= K && !r[m].is_zero()) pj += r[m] * coeff(idx);
            }
            num += pj * z.pow(j);
        }
        if (den.is_zero()) throw NoFit("degenerate denominator in reconstruction");
        return (num / den) * z.pow(shift);
    };
    ExactScalar result = build(ker[0]);
    for (size_t i = 1; i < ker.size(); ++i) {
        if (build(ker[i]) != result)
            throw AmbiguousFit("degree bounds admit no unique minimal solution");
    }
    // verify against every known coefficient
    QSeries back = expand_qh(result, s.trunc());
    if (!back.same_series(s)) throw NoFit("reconstruction fails on verification coefficients");
    return result;
}

} // namespace

ExactScalar rational_reconstruct(const QSeries& s, int max_num_deg, int max_den_deg) {
    return reconstruct_impl(s, max_num_deg, max_den_deg, 2);
}

ExactScalar rational_reconstruct_qh(const QSeries& s, int max_num_deg, int max_den_deg) {
    return reconstruct_impl(s, max_num_deg, max_den_deg, 1);
}

QSeries log_mcmahon_neg(int order_q) {
    int trunc = 2 * order_q;
    std::vector<ExactScalar> c(trunc + 1);
    for (int m = 1; m <= order_q; ++m) {
        long s2 = 0;
        for (int d = 1; d <= m; ++d)
            if (m % d == 0) s2 += (long)d * d;
        Rat v(s2, m);
        v.canonicalize();
        if (m % 2 != 0) v = -v;
        c[2 * m] = ExactScalar(v);
    }
    return QSeries(0, std::move(c), trunc);
}

QSeries mcmahon_neg_pow(const ExactScalar& c, int order_q) {
    return log_mcmahon_neg(order_q).scaled(c).exp();
}

QSeries phi_series(int order_q, bool plain_derivative) {
    if (!plain_derivative) return log_mcmahon_neg(order_q).q_dq();
    return mcmahon_neg_pow(ExactScalar(1L), order_q).q_dq();
}

ExactScalar sum_balanced(std::vector<ExactScalar> xs) {
    if (xs.empty()) return ExactScalar();
    while (xs.size() > 1) {
        std::vector<ExactScalar> next;
        next.reserve((xs.size() + 1) / 2);
        for (size_t i = 0; i + 1 < xs.size(); i += 2) next.push_back(xs[i] + xs[i + 1]);
        if (xs.size() % 2) next.push_back(xs.back());
        xs = std::move(next);
    }
    return xs[0];
}

ExactScalar sum_homogeneous(std::vector<ExactScalar> xs) {
    int h = 0;
    bool found = false, ok = true;
    for (auto& x : xs) {
        if (x.is_zero()) continue;
        auto hx = x.homogeneity();
        if (!hx) {
            ok = false;
            break;
        }
        if (!found) {
            h = *hx;
            found = true;
        } else if (*hx != h) {
            ok = false;
            break;
        }
    }
    if (!ok) return sum_balanced(std::move(xs));
    if (!found) return ExactScalar();
    // dehomogenize against the highest t variable actually present
    int v = -1;
    for (auto& x : xs)
        for (int k = VT3; k >= 0 && k > v; --k)
            if (x.involves(k)) v = std::max(v, k);
    if (v < 0) {
        // constants in t
        return ExactScalar::sum(xs);
    }
    for (auto& x : xs) x = x.dehomogenize(v);
    return ExactScalar::sum(xs).rehomogenize(v, h);
}

bool poles_only_roots_of_unity(const ExactScalar& f, int max_order) {
    for (auto& [fac, e] : f.den_factors()) {
        if (!fac.involves(VQH)) continue;
        for (int v = 0; v < VQH; ++v)
            if (fac.involves(v)) return false;
        Poly rem = fac.shift_mono(fac.mono_content());
        for (int k = 1; k <= max_order && !rem.is_constant(); ++k) {
            Poly cyc = Poly::var(VQH, k) - Poly(Rat(1));
            while (!rem.is_constant()) {
                Poly g = Poly::gcd(rem, cyc);
                if (g.is_constant()) break;
                rem = *rem.divide_exact(g);
            }
        }
        if (!rem.is_constant()) return false;
    }
    return true;
}

} // namespace dtv
