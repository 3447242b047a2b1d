#pragma once

#include "dtv/scalar.hpp"

#include <functional>
#include <string>
#include <vector>

namespace dtv {

// Truncated Laurent series in qh (= q^{1/2}).  Exponents are measured in
// half-integer units: the coefficient of qh^n sits at index n - offset.
// Coefficients are exact scalars free of qh.
class QSeries {
public:
    QSeries() : offset_(0), trunc_(-1) {}
    QSeries(int offset, std::vector<ExactScalar> coeffs, int trunc);

    static QSeries zero(int trunc) { return QSeries(0, std::vector<ExactScalar>(trunc + 1), trunc); }
    static QSeries one(int trunc);
    static QSeries monomial_q(int qpow, const ExactScalar& c, int trunc);
    static QSeries monomial_qh(int qhpow, const ExactScalar& c, int trunc);

    int offset() const { return offset_; }
    int trunc() const { return trunc_; }
    const std::vector<ExactScalar>& coeffs() const { return coeffs_; }

    // coefficient of qh^n (zero if below offset, error if beyond trunc)
    ExactScalar coeff_qh(int n) const;
    ExactScalar coeff_q(int n) const { return coeff_qh(2 * n); }
    bool is_zero() const;
    int valuation() const; // lowest qh power with nonzero coefficient; trunc+1 if none

    QSeries operator+(const QSeries& o) const;
    QSeries operator-(const QSeries& o) const;
    QSeries operator*(const QSeries& o) const;
    QSeries operator-() const;
    QSeries scaled(const ExactScalar& s) const;
    QSeries shifted_qh(int n) const; // multiply by qh^n
    QSeries inverse() const;
    QSeries operator/(const QSeries& o) const { return *this * o.inverse(); }

    QSeries truncated(int trunc) const;
    // q d/dq (= (n/2) per qh^n coefficient)
    QSeries q_dq() const;
    // exp of a series with positive valuation
    QSeries exp() const;

    bool same_series(const QSeries& o) const; // equal through min trunc

    std::string str() const;

    // supported only on even qh powers (an honest series in q)
    bool even_support() const;

private:
    int offset_;
    std::vector<ExactScalar> coeffs_;
    int trunc_;
};

// Laurent expansion of f at q = 0 through qh^trunc_qh.
QSeries expand_qh(const ExactScalar& f, int trunc_qh);
// Spec-facing wrapper: order counted in integer q powers.
QSeries series_expand(const ExactScalar& f, int order_q);

// Unique rational function in q with deg num <= max_num_deg and
// deg den <= max_den_deg matching s; remaining known coefficients verified.
ExactScalar rational_reconstruct(const QSeries& s, int max_num_deg, int max_den_deg);
// Same in the qh variable (used by the capped calculus).
ExactScalar rational_reconstruct_qh(const QSeries& s, int max_num_deg, int max_den_deg);

// log M(-q) = sum_m sigma_2(m)/m (-q)^m, truncated at q^order.
QSeries log_mcmahon_neg(int order_q);
// M(-q)^c
QSeries mcmahon_neg_pow(const ExactScalar& c, int order_q);
// Phi(q) = q d/dq log M(-q); the switch selects the plain derivative reading.
QSeries phi_series(int order_q, bool plain_derivative = false);

// balanced pairwise summation; far cheaper than a linear fold for the large
// rational-function sums produced by localization
ExactScalar sum_balanced(std::vector<ExactScalar> xs);

// summation of t-homogeneous values of a common degree: works with t3 set to
// 1 and restores the grading afterwards; falls back to sum_balanced
ExactScalar sum_homogeneous(std::vector<ExactScalar> xs);

// Poles of the denominator of f, as q-polynomial roots-of-unity check:
// true if the squarefree part of the qh-denominator divides a product of
// qh^a * prod (1 - qh^k) factors (poles confined to 0 and roots of unity).
bool poles_only_roots_of_unity(const ExactScalar& f, int max_order = 64);

} // namespace dtv
