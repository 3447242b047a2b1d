#pragma once

#include "dtv/rational.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dtv {

// Sparse multivariate polynomials over Q in t1, t2, t3 and qh, where qh
// stands for q^{1/2}.  Terms are kept sorted in graded-lex order.
constexpr int NVARS = 4;
constexpr int VT1 = 0, VT2 = 1, VT3 = 2, VQH = 3;

using Mono = std::array<int, NVARS>;

inline int mono_total(const Mono& m) { return m[0] + m[1] + m[2] + m[3]; }

// graded lex: compare total degree, then exponents from t1 down.
inline bool mono_less(const Mono& a, const Mono& b) {
    int ta = mono_total(a), tb = mono_total(b);
    if (ta != tb) return ta < tb;
    for (int i = 0; i < NVARS; ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

class Poly {
public:
    struct Term {
        Mono m;
        Rat c;
    };

    Poly() = default;
    explicit Poly(const Rat& c) {
        Rat cc = c;
        cc.canonicalize();
        if (cc != 0) terms_.push_back({Mono{0, 0, 0, 0}, cc});
    }
    explicit Poly(long c) : Poly(Rat(c)) {}

    static Poly var(int v, int e = 1) {
        Poly p;
        Mono m{0, 0, 0, 0};
        m[v] = e;
        p.terms_.push_back({m, Rat(1)});
        return p;
    }
    static Poly monomial(const Mono& m, const Rat& c) {
        Poly p;
        Rat cc = c;
        cc.canonicalize();
        if (cc != 0) p.terms_.push_back({m, cc});
        return p;
    }
    // a1*t1 + a2*t2 + a3*t3
    static Poly linear_form(const Rat& a1, const Rat& a2, const Rat& a3);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && mono_total(terms_[0].m) == 0);
    }
    Rat constant_value() const {
        if (terms_.empty()) return Rat(0);
        return terms_.back().m == Mono{0, 0, 0, 0} ? terms_.back().c : Rat(0);
    }
    bool is_one() const { return is_constant() && constant_value() == 1; }

    size_t n_terms() const { return terms_.size(); }
    const Term& leading() const { return terms_.back(); } // largest in grlex

    int degree(int v) const {
        int d = 0;
        for (auto& t : terms_) d = std::max(d, t.m[v]);
        return d;
    }
    int min_degree(int v) const {
        if (terms_.empty()) return 0;
        int d = terms_[0].m[v];
        for (auto& t : terms_) d = std::min(d, t.m[v]);
        return d;
    }
    int total_degree() const { return terms_.empty() ? 0 : mono_total(terms_.back().m); }
    bool involves(int v) const { return degree(v) > 0; }

    // degree in the t variables only (qh ignored)
    int t_degree() const;
    // true if every term has the same t-degree
    bool t_homogeneous() const;
    // pad exponents of variable v so every term reaches the maximal t-degree
    Poly t_homogenized(int v = VT3) const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    bool operator==(const Poly& o) const { return cmp(*this, o) == 0; }
    bool operator!=(const Poly& o) const { return cmp(*this, o) != 0; }
    bool operator<(const Poly& o) const { return cmp(*this, o) < 0; }

    Poly scaled(const Rat& s) const;
    Poly mul_mono(const Mono& m, const Rat& c) const;
    Poly pow(int e) const;

    // Exact division; nullopt if not divisible.
    std::optional<Poly> divide_exact(const Poly& d) const;
    bool divisible_by(const Poly& d) const { return divide_exact(d).has_value(); }

    // f = content * primitive, primitive has coprime integer coefficients and
    // positive leading coefficient.
    std::pair<Rat, Poly> primitive() const;

    // per-variable minimal exponents (the monomial content)
    Mono mono_content() const;
    Poly shift_mono(const Mono& m) const; // divide every term by x^m (m <= content)

    // view as univariate in v with Poly coefficients
    std::map<int, Poly> coeffs_in(int v) const;
    static Poly from_coeffs_in(int v, const std::map<int, Poly>& c);

    // substitute variable v by polynomial p
    Poly substitute(int v, const Poly& p) const;

    std::string str() const;

    static int cmp(const Poly& a, const Poly& b);
    static Poly gcd(const Poly& a, const Poly& b);

private:
    // sorted ascending by mono_less, no zero coefficients
    std::vector<Term> terms_;
    void normalize();
    friend struct PolyBuilder;
};

// gcd helper exposed for tests
Poly poly_gcd(const Poly& a, const Poly& b);

extern const std::array<const char*, NVARS> VAR_NAMES;

} // namespace dtv
