#pragma once

#include "dtv/errors.hpp"
#include "dtv/poly.hpp"

#include <map>
#include <string>

namespace dtv {

// Element of Q(t1,t2,t3,qh).  Kept in partially factored form: a rational
// prefactor times products of primitive integer polynomials.  Localization
// weights are products of linear forms, so cancellation by factor lookup
// does nearly all reduction work; a gcd pass catches the rest.
class ExactScalar {
public:
    ExactScalar() : scalar_(0) {}
    explicit ExactScalar(const Rat& r) : scalar_(r) { scalar_.canonicalize(); }
    explicit ExactScalar(long n) : scalar_(n) {}
    explicit ExactScalar(const Poly& p);
    ExactScalar(const Poly& num, const Poly& den);

    static ExactScalar var(int v, int e = 1);
    static ExactScalar t1() { return var(VT1); }
    static ExactScalar t2() { return var(VT2); }
    static ExactScalar t3() { return var(VT3); }
    static ExactScalar qh(int e = 1) { return var(VQH, e); }
    static ExactScalar q(int e = 1);
    static ExactScalar from_factors(const Rat& scalar, const std::map<Poly, int>& num,
                                    const std::map<Poly, int>& den);

    bool is_zero() const { return scalar_ == 0; }
    bool is_rational() const { return num_.empty() && den_.empty(); }
    const Rat& rational_value() const { return scalar_; } // valid when is_rational

    ExactScalar operator+(const ExactScalar& o) const;
    ExactScalar operator-(const ExactScalar& o) const;
    ExactScalar operator*(const ExactScalar& o) const;
    ExactScalar operator/(const ExactScalar& o) const;
    ExactScalar operator-() const;
    ExactScalar& operator+=(const ExactScalar& o) { return *this = *this + o; }
    ExactScalar& operator-=(const ExactScalar& o) { return *this = *this - o; }
    ExactScalar& operator*=(const ExactScalar& o) { return *this = *this * o; }
    ExactScalar& operator/=(const ExactScalar& o) { return *this = *this / o; }

    ExactScalar inverse() const;
    ExactScalar pow(int e) const;

    bool operator==(const ExactScalar& o) const;
    bool operator!=(const ExactScalar& o) const { return !(*this == o); }

    // Expanded numerator and denominator, reduced, denominator monic in the
    // graded-lex order.  Basis of the canonical serialization.
    std::pair<Poly, Poly> expanded() const;
    std::string str() const;

    // t3 -> -(t1+t2); throws SpecializationPole if a denominator factor dies.
    ExactScalar substitute_cy() const;
    // general variable substitution (numerator factors only may vanish)
    ExactScalar substitute(int v, const ExactScalar& value) const;

    bool involves(int v) const;
    const Rat& prefactor() const { return scalar_; }
    const std::map<Poly, int>& num_factors() const { return num_; }
    const std::map<Poly, int>& den_factors() const { return den_; }

    // ordering usable as map key (compares canonical expanded forms)
    static int cmp(const ExactScalar& a, const ExactScalar& b);
    bool operator<(const ExactScalar& o) const { return cmp(*this, o) < 0; }

    // single-common-denominator summation; much cheaper than folded adds
    static ExactScalar sum(const std::vector<ExactScalar>& xs);

    // t-homogeneity degree (num minus den); nullopt if some factor is mixed
    std::optional<int> homogeneity() const;
    ExactScalar dehomogenize(int v) const; // t_v -> 1
    // inverse of dehomogenize on a value of known homogeneity degree h
    ExactScalar rehomogenize(int v, int h) const;

private:
    Rat scalar_;
    std::map<Poly, int> num_, den_;

    void insert(std::map<Poly, int>& side, const Poly& f, int e);
    void reduce();
    friend class QSeries;
};

inline ExactScalar operator*(const Rat& r, const ExactScalar& x) {
    return ExactScalar(r) * x;
}

} // namespace dtv
