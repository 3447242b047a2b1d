#pragma once

#include "dtv/linalg.hpp"
#include "dtv/partition.hpp"
#include "dtv/scalar.hpp"

#include <map>

namespace dtv {

enum class SymBasis { P, H, M, S };

// Symmetric function with exact-scalar coefficients, stored as a finite
// expansion in one of the classical bases.  The power sums are the working
// basis; conversions go through exact per-degree transition matrices.
class SymFunc {
public:
    SymFunc() : basis_(SymBasis::P) {}
    SymFunc(SymBasis b, std::map<Partition, ExactScalar> terms)
        : basis_(b), terms_(std::move(terms)) { prune(); }

    static SymFunc zero() { return {}; }
    static SymFunc one();
    static SymFunc generator(SymBasis b, const Partition& la); // p_la, h_la, ...

    SymBasis basis() const { return basis_; }
    const std::map<Partition, ExactScalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const; // max |la|

    SymFunc to_basis(SymBasis b) const;

    SymFunc operator+(const SymFunc& o) const;
    SymFunc operator-(const SymFunc& o) const;
    SymFunc operator*(const SymFunc& o) const; // multiplicative in p
    SymFunc scaled(const ExactScalar& c) const;
    bool operator==(const SymFunc& o) const;

    std::string str() const;

private:
    SymBasis basis_;
    std::map<Partition, ExactScalar> terms_;
    void prune();
};

// Hall pairing <p_la, p_mu> = delta z(la); general via p-expansions.
ExactScalar hall_pairing(const SymFunc& f, const SymFunc& g);

// Skew Schur function s_{la/eta} by the Jacobi-Trudi determinant in h's;
// zero when eta is not contained in la.
SymFunc skew_schur(const Partition& la, const Partition& eta);

// f^perp g computed in the power-sum basis.
SymFunc adjoint_apply(const SymFunc& f, const SymFunc& g);

// Evaluation at x_i = q^{-(2i-1)/2}, i.e. the principal specialization q^rho.
// h_n |-> q^{n^2/2} / prod_{k=1..n} (q^k - 1).
ExactScalar specialize_qrho(const SymFunc& f);

// entry (la, mu) = sum_eta s_{la^t/eta}(q^rho) s_{mu/eta}(q^rho),
// rows: |la| = n; columns: all mu with |mu| < n.
Matrix two_leg_matrix(int n);
std::vector<Partition> two_leg_rows(int n);
std::vector<Partition> two_leg_cols(int n);

// semistandard-tableau expansion oracle for tests
SymFunc skew_schur_tableaux(const Partition& la, const Partition& eta);

} // namespace dtv
