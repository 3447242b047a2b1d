#pragma once

#include "dtv/linalg.hpp"
#include "dtv/partition.hpp"
#include "dtv/qseries.hpp"

#include <map>
#include <tuple>
#include <vector>

namespace dtv {

// Fock space of Hilb(C^2) in the Nakajima basis |mu>, realized on power sums:
// alpha_{-k} multiplies by p_k, alpha_k applies k d/dp_k.  The geometric
// input (t1 t2 factors, signs) lives in the pairing and the gluing factors.
class FockVector {
public:
    FockVector() = default;
    explicit FockVector(std::map<Partition, ExactScalar> terms) : terms_(std::move(terms)) {
        prune();
    }
    static FockVector vacuum() { return basis_vector(Partition{}); }
    static FockVector basis_vector(const Partition& mu);

    const std::map<Partition, ExactScalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    // nonzero terms must share one energy |mu|; -1 for the zero vector
    int energy() const;

    FockVector operator+(const FockVector& o) const;
    FockVector scaled(const ExactScalar& c) const;
    bool operator==(const FockVector& o) const { return terms_ == o.terms_; }

private:
    std::map<Partition, ExactScalar> terms_;
    void prune();
};

// alpha_{-k} for k > 0 adds a part (raising); alpha_k removes parts.
FockVector alpha_apply(int k, const FockVector& v);

// <lambda | mu> on Hilb(C^2, d): (-1)^{|la|-l(la)} delta / (z(la) (w1 w2)^{l(la)})
ExactScalar pairing_c2(const Partition& la, const Partition& mu,
                       const ExactScalar& w1, const ExactScalar& w2);
ExactScalar pairing_c2(const Partition& la, const Partition& mu);

// Energy-graded operator with exact rational-function entries.  Block d is a
// p(d) x p(d) matrix in the basis Partition::basis(d) (reverse-lex order).
class GradedOperator {
public:
    GradedOperator() : max_grade_(-1) {}
    explicit GradedOperator(int max_grade);
    static GradedOperator identity(int max_grade);

    int max_grade() const { return max_grade_; }
    Matrix& block(int d) { return blocks_.at(d); }
    const Matrix& block(int d) const { return blocks_.at(d); }

    GradedOperator operator*(const GradedOperator& o) const; // composition
    GradedOperator operator+(const GradedOperator& o) const;
    GradedOperator operator-(const GradedOperator& o) const;
    GradedOperator scaled(const ExactScalar& c) const;
    bool operator==(const GradedOperator& o) const;

    FockVector apply(const FockVector& v) const;

    std::string str() const;

private:
    std::map<int, Matrix> blocks_;
    int max_grade_;
};

// the fundamental tube operator:
//   (w1+w2) sum_k (k/2) A_k(q) a_{-k} a_k
//   + 1/2 sum_{k,l} [ w1 w2 a_{k+l} a_{-k} a_{-l} - a_{-k-l} a_k a_l ]
// with A_k = ((-q)^k + 1)/((-q)^k - 1); entries exact in q.
GradedOperator m_operator(const ExactScalar& w1, const ExactScalar& w2, int max_grade);

// series-valued operator blocks (entries truncated at qh order)
using SeriesMatrix = std::vector<std::vector<QSeries>>;
std::map<int, SeriesMatrix> sigma1F_tube_operator(const ExactScalar& w1, const ExactScalar& w2,
                                                  int max_grade, int q_order,
                                                  bool phi_plain_derivative = false);

// coproduct of 1: all labelled partitions of d with coefficient
// (-1)^{|mu|-l(mu)} z(mu) and their duals
struct CoproductTerm {
    WeightedPartition mu;
    ExactScalar coefficient;
    WeightedPartition mu_dual;
};
std::vector<CoproductTerm> coproduct_one(int d, const LabelBasis& labels);
std::vector<CoproductTerm> coproduct_one(int d);

// DT gluing factor at a half-edge: (-1)^{|la|-l} z(la) (t1t2t3/t_axis)^l, q^{-|la|}
std::pair<ExactScalar, long> gluing_factor_dt(const Partition& la, int axis,
                                              const std::array<Poly, 3>& frame);
// GW version: z(la) (t1t2t3/t_axis)^l, u^{2 l}
std::pair<ExactScalar, long> gluing_factor_gw(const Partition& la, int axis,
                                              const std::array<Poly, 3>& frame);

} // namespace dtv
