#include "dtv/scalar.hpp"

#include <sstream>

namespace dtv {

ExactScalar::ExactScalar(const Poly& p) : scalar_(0) {
    if (p.is_zero()) return;
    scalar_ = 1;
    insert(num_, p, 1);
}

ExactScalar::ExactScalar(const Poly& num, const Poly& den) : scalar_(0) {
    if (den.is_zero()) throw DivisionByZero("zero denominator");
    if (num.is_zero()) return;
    scalar_ = 1;
    insert(num_, num, 1);
    insert(den_, den, 1);
    reduce();
}

ExactScalar ExactScalar::var(int v, int e) {
    ExactScalar x;
    x.scalar_ = 1;
    if (e > 0)
        x.num_[Poly::var(v)] = e;
    else if (e < 0)
        x.den_[Poly::var(v)] = -e;
    return x;
}

ExactScalar ExactScalar::q(int e) { return var(VQH, 2 * e); }

ExactScalar ExactScalar::from_factors(const Rat& scalar, const std::map<Poly, int>& num,
                                      const std::map<Poly, int>& den) {
    ExactScalar x;
    x.scalar_ = scalar;
    if (scalar == 0) return x;
    for (auto& [f, e] : num) x.insert(x.num_, f, e);
    for (auto& [f, e] : den) x.insert(x.den_, f, e);
    x.reduce();
    return x;
}

void ExactScalar::insert(std::map<Poly, int>& side, const Poly& f, int e) {
    if (e == 0) return;
    if (f.is_zero()) {
        if (&side == &den_) throw DivisionByZero("zero denominator factor");
        scalar_ = 0;
        num_.clear();
        den_.clear();
        return;
    }
    Mono mc = f.mono_content();
    auto [content, prim] = f.shift_mono(mc).primitive();
    bool den_side = (&side == &den_);
    scalar_ *= den_side ? rat_pow(Rat(1) / content, e) : rat_pow(content, e);
    for (int v = 0; v < NVARS; ++v)
        if (mc[v] > 0) side[Poly::var(v)] += e * mc[v];
    if (!prim.is_one()) side[prim] += e;
}

void ExactScalar::reduce() {
    if (scalar_ == 0) {
        num_.clear();
        den_.clear();
        return;
    }
    for (auto it = num_.begin(); it != num_.end();)
        it = (it->second == 0) ? num_.erase(it) : std::next(it);
    for (auto it = den_.begin(); it != den_.end();)
        it = (it->second == 0) ? den_.erase(it) : std::next(it);

    bool changed = true;
    while (changed) {
        changed = false;
        for (auto ni = num_.begin(); ni != num_.end() && !changed; ++ni) {
            for (auto di = den_.begin(); di != den_.end() && !changed; ++di) {
                if (ni->first == di->first) {
                    int c = std::min(ni->second, di->second);
                    ni->second -= c;
                    di->second -= c;
                    if (ni->second == 0) num_.erase(ni);
                    if (di->second == 0) den_.erase(di);
                    changed = true;
                    break;
                }
                // distinct primitive linear factors are coprime
                if (ni->first.total_degree() == 1 && di->first.total_degree() == 1) continue;
                Poly g = Poly::gcd(ni->first, di->first);
                if (!g.is_constant()) {
                    Poly fn = ni->first, fd = di->first;
                    int en = ni->second, ed = di->second;
                    num_.erase(ni);
                    den_.erase(di);
                    insert(num_, *fn.divide_exact(g), en);
                    insert(num_, g, en);
                    insert(den_, *fd.divide_exact(g), ed);
                    insert(den_, g, ed);
                    for (auto it = num_.begin(); it != num_.end();)
                        it = (it->second == 0) ? num_.erase(it) : std::next(it);
                    for (auto it = den_.begin(); it != den_.end();)
                        it = (it->second == 0) ? den_.erase(it) : std::next(it);
                    changed = true;
                    break;
                }
            }
        }
    }
}

ExactScalar ExactScalar::operator-() const {
    ExactScalar r = *this;
    r.scalar_ = -r.scalar_;
    return r;
}

ExactScalar ExactScalar::operator*(const ExactScalar& o) const {
    if (is_zero() || o.is_zero()) return ExactScalar();
    ExactScalar r;
    r.scalar_ = scalar_ * o.scalar_;
    r.num_ = num_;
    r.den_ = den_;
    for (auto& [f, e] : o.num_) r.num_[f] += e;
    for (auto& [f, e] : o.den_) r.den_[f] += e;
    r.reduce();
    return r;
}

ExactScalar ExactScalar::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    ExactScalar r;
    r.scalar_ = Rat(1) / scalar_;
    r.num_ = den_;
    r.den_ = num_;
    return r;
}

ExactScalar ExactScalar::operator/(const ExactScalar& o) const { return *this * o.inverse(); }

ExactScalar ExactScalar::pow(int e) const {
    if (e == 0) return ExactScalar(1L);
    if (e < 0) return inverse().pow(-e);
    ExactScalar r;
    r.scalar_ = rat_pow(scalar_, e);
    r.num_ = num_;
    r.den_ = den_;
    for (auto& [f, k] : r.num_) k *= e;
    for (auto& [f, k] : r.den_) k *= e;
    return r;
}

namespace {
Poly expand_side(const std::map<Poly, int>& side) {
    Poly p(Rat(1));
    for (auto& [f, e] : side) p = p * f.pow(e);
    return p;
}
} // namespace

ExactScalar ExactScalar::operator+(const ExactScalar& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    // lcm of denominators by factor key
    std::map<Poly, int> lcm = den_;
    for (auto& [f, e] : o.den_) {
        auto it = lcm.find(f);
        if (it == lcm.end())
            lcm[f] = e;
        else
            it->second = std::max(it->second, e);
    }
    auto complement = [&](const std::map<Poly, int>& d) {
        std::map<Poly, int> c;
        for (auto& [f, e] : lcm) {
            auto it = d.find(f);
            int have = it == d.end() ? 0 : it->second;
            if (e - have > 0) c[f] = e - have;
        }
        return c;
    };
    Poly na = expand_side(num_).scaled(scalar_) * expand_side(complement(den_));
    Poly nb = expand_side(o.num_).scaled(o.scalar_) * expand_side(complement(o.den_));
    Poly sum = na + nb;
    if (sum.is_zero()) return ExactScalar();
    ExactScalar r;
    r.scalar_ = 1;
    r.insert(r.num_, sum, 1);
    r.den_ = lcm;
    r.reduce();
    return r;
}

ExactScalar ExactScalar::operator-(const ExactScalar& o) const { return *this + (-o); }

ExactScalar ExactScalar::sum(const std::vector<ExactScalar>& xs) {
    std::map<Poly, int> lcm;
    bool any = false;
    for (auto& x : xs) {
        if (x.is_zero()) continue;
        any = true;
        for (auto& [f, e] : x.den_) {
            auto it = lcm.find(f);
            if (it == lcm.end())
                lcm[f] = e;
            else
                it->second = std::max(it->second, e);
        }
    }
    if (!any) return ExactScalar();
    // integer-primitive numerators with the rational scales pulled out keeps
    // every coefficient operation in cheap integer arithmetic
    std::vector<Poly> nums;
    std::vector<Rat> scales;
    Int denom_lcm = 1;
    for (auto& x : xs) {
        if (x.is_zero()) continue;
        Poly n(Rat(1));
        for (auto& [f, e] : x.num_)
            for (int k = 0; k < e; ++k) n = n * f;
        for (auto& [f, e] : lcm) {
            auto it = x.den_.find(f);
            int have = it == x.den_.end() ? 0 : it->second;
            for (int k = 0; k < e - have; ++k) n = n * f;
        }
        nums.push_back(std::move(n));
        scales.push_back(x.scalar_);
        mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), scales.back().get_den_mpz_t());
    }
    for (size_t i = 0; i < nums.size(); ++i) {
        Rat s = scales[i] * Rat(denom_lcm);
        s.canonicalize();
        nums[i] = nums[i].scaled(s);
    }
    while (nums.size() > 1) {
        std::vector<Poly> next;
        next.reserve((nums.size() + 1) / 2);
        for (size_t i = 0; i + 1 < nums.size(); i += 2) next.push_back(nums[i] + nums[i + 1]);
        if (nums.size() % 2) next.push_back(std::move(nums.back()));
        nums = std::move(next);
    }
    if (nums[0].is_zero()) return ExactScalar();
    ExactScalar r;
    r.scalar_ = Rat(1) / Rat(denom_lcm);
    r.insert(r.num_, nums[0], 1);
    r.den_ = std::move(lcm);
    r.reduce();
    return r;
}

bool ExactScalar::operator==(const ExactScalar& o) const {
    if (scalar_ == 0 || o.scalar_ == 0) return scalar_ == o.scalar_;
    // cross-multiply expanded forms
    auto [an, ad] = expanded();
    auto [bn, bd] = o.expanded();
    return an * bd == bn * ad;
}

std::pair<Poly, Poly> ExactScalar::expanded() const {
    if (scalar_ == 0) return {Poly(), Poly(Rat(1))};
    Poly n = expand_side(num_).scaled(scalar_);
    Poly d = expand_side(den_);
    // make denominator monic under graded lex
    Rat lead = d.leading().c;
    if (lead != 1) {
        d = d.scaled(Rat(1) / lead);
        n = n.scaled(Rat(1) / lead);
    }
    return {n, d};
}

std::string ExactScalar::str() const {
    auto [n, d] = expanded();
    if (d.is_one()) return n.str();
    std::ostringstream os;
    os << "(" << n.str() << ")/(" << d.str() << ")";
    return os.str();
}

ExactScalar ExactScalar::substitute_cy() const {
    Poly repl = Poly::linear_form(Rat(-1), Rat(-1), Rat(0));
    return substitute(VT3, ExactScalar(repl));
}

ExactScalar ExactScalar::substitute(int v, const ExactScalar& value) const {
    if (is_zero()) return ExactScalar();
    auto [vn, vd] = value.expanded();
    ExactScalar r(scalar_);
    auto apply = [&](const std::map<Poly, int>& side, bool den_side) {
        for (auto& [f, e] : side) {
            int dv = f.degree(v);
            // f(v -> vn/vd) = F / vd^dv with F polynomial
            Poly F;
            auto cs = f.coeffs_in(v);
            for (auto& [k, c] : cs) F += c * vn.pow(k) * vd.pow(dv - k);
            if (F.is_zero()) {
                if (den_side) throw SpecializationPole("denominator factor vanishes under substitution");
                r = ExactScalar();
                return;
            }
            ExactScalar piece = ExactScalar(F, vd.pow(dv)).pow(e);
            r = den_side ? r / piece : r * piece;
            if (r.is_zero()) return;
        }
    };
    apply(num_, false);
    if (r.is_zero()) return r;
    apply(den_, true);
    return r;
}

bool ExactScalar::involves(int v) const {
    for (auto& [f, e] : num_)
        if (f.involves(v)) return true;
    for (auto& [f, e] : den_)
        if (f.involves(v)) return true;
    return false;
}

std::optional<int> ExactScalar::homogeneity() const {
    if (is_zero()) return 0;
    int h = 0;
    for (auto& [f, e] : num_) {
        if (!f.t_homogeneous()) return std::nullopt;
        h += e * f.t_degree();
    }
    for (auto& [f, e] : den_) {
        if (!f.t_homogeneous()) return std::nullopt;
        h -= e * f.t_degree();
    }
    return h;
}

ExactScalar ExactScalar::dehomogenize(int v) const {
    return substitute(v, ExactScalar(1L));
}

ExactScalar ExactScalar::rehomogenize(int v, int h) const {
    if (is_zero()) return ExactScalar();
    ExactScalar r;
    r.scalar_ = scalar_;
    int net = 0;
    for (auto& [f, e] : num_) {
        Poly g = f.t_homogenized(v);
        net += e * g.t_degree();
        r.insert(r.num_, g, e);
    }
    for (auto& [f, e] : den_) {
        Poly g = f.t_homogenized(v);
        net -= e * g.t_degree();
        r.insert(r.den_, g, e);
    }
    int pad = h - net;
    if (pad > 0)
        r.num_[Poly::var(v)] += pad;
    else if (pad < 0)
        r.den_[Poly::var(v)] += -pad;
    r.reduce();
    return r;
}

int ExactScalar::cmp(const ExactScalar& a, const ExactScalar& b) {
    auto [an, ad] = a.expanded();
    auto [bn, bd] = b.expanded();
    int c = Poly::cmp(an, bn);
    if (c != 0) return c;
    return Poly::cmp(ad, bd);
}

} // namespace dtv
