#pragma once

#include "dtv/boxconfig.hpp"
#include "dtv/scalar.hpp"

#include <array>
#include <map>

namespace dtv {

// ---------------------------------------------------------------------------
// Laurent polynomials in k1,k2,k3 (k_i = e^{-t_i}) and their localizations at
// the (1-k_i) denominators.  This is the exact carrier of all character
// regularization: geometric leg sums stay closed forms, no truncation.
// ---------------------------------------------------------------------------

using KExp = std::array<int, 3>;

class KPoly {
public:
    KPoly() = default;
    explicit KPoly(long c) {
        if (c) t_[{0, 0, 0}] = c;
    }
    static KPoly mono(const KExp& e, long long c = 1) {
        KPoly p;
        if (c) p.t_[e] = c;
        return p;
    }

    const std::map<KExp, long long>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    KPoly operator+(const KPoly& o) const;
    KPoly operator-(const KPoly& o) const;
    KPoly operator*(const KPoly& o) const;
    KPoly operator-() const;
    KPoly& operator+=(const KPoly& o) { return *this = *this + o; }
    KPoly& operator-=(const KPoly& o) { return *this = *this - o; }
    bool operator==(const KPoly& o) const { return t_ == o.t_; }

    KPoly shifted(const KExp& e) const; // multiply by k^e
    KPoly bar() const;                  // k -> k^{-1}

    // exact division by (1 - k_v); nullopt if not divisible
    std::optional<KPoly> divide_one_minus(int v) const;

private:
    std::map<KExp, long long> t_;
};

// num / prod_i (1 - k_i)^{den[i]}
class RatChar {
public:
    RatChar() : den_{0, 0, 0} {}
    explicit RatChar(KPoly num, KExp den = {0, 0, 0}) : num_(std::move(num)), den_(den) {
        normalize();
    }
    static RatChar one() { return RatChar(KPoly(1)); }

    const KPoly& num() const { return num_; }
    const KExp& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_finite() const { return den_ == KExp{0, 0, 0}; }

    RatChar operator+(const RatChar& o) const;
    RatChar operator-(const RatChar& o) const;
    RatChar operator*(const RatChar& o) const;
    RatChar operator-() const;
    RatChar bar() const;

private:
    KPoly num_;
    KExp den_;
    void normalize();
};

// ---------------------------------------------------------------------------
// Finite equivariant characters: integer multiplicities on torus weights
// (a1 t1 + a2 t2 + a3 t3) / den_scale.
// ---------------------------------------------------------------------------

class EquivCharacter {
public:
    EquivCharacter() = default;

    long den_scale() const { return den_scale_; }
    const std::map<std::array<long, 3>, long long>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    void add(const std::array<long, 3>& weight_num, long long mult, long scale = 1);
    EquivCharacter operator+(const EquivCharacter& o) const;
    EquivCharacter operator-() const;
    EquivCharacter bar() const; // negate all weights
    bool operator==(const EquivCharacter& o) const;

    static EquivCharacter from_ratchar(const RatChar& r); // must be finite

    std::string str() const;

private:
    std::map<std::array<long, 3>, long long> terms_;
    long den_scale_ = 1;
    void reduce();
};

// weights expressed through a frame of linear forms for t1,t2,t3
using WeightFrame = std::array<Poly, 3>;
WeightFrame standard_frame();
// frame at the far end of an (a,b)-edge along the given axis order:
// (t1' , t2', t3') = (t1 - a t3, t2 - b t3, -t3) in the frame's coordinates
WeightFrame edge_far_frame(const WeightFrame& f, int a, int b);

// prod over terms of (weight linear form)^multiplicity
ExactScalar weight_product(const EquivCharacter& ch, const WeightFrame& frame = standard_frame());

// ---------------------------------------------------------------------------
// characters of box configurations
// ---------------------------------------------------------------------------

// sum_{p in pi, p < N} e^{-(t,p)} (spec op; truncated window)
EquivCharacter chi_character(const LeggedBoxConfig& c, int N);
// exact rational form of the full character
RatChar chi_character_rational(const LeggedBoxConfig& c);

// the finite virtual character Ext^2 - Ext^1 of the vertex, legs regularized
EquivCharacter vertex_virtual_character(const LeggedBoxConfig& c);

// DT edge: finite virtual character of the pure (a,b)-edge ideal I_lambda
// with the two cylinder vertex halves removed.
EquivCharacter edge_virtual_character_dt(const Partition& la, int a, int b);
// chi(lambda; a, b) = sum over boxes (1 - a i - b j)
long edge_chi_dt(const Partition& la, int a, int b);
// q^chi * weight product of the edge character
std::pair<ExactScalar, long> edge_weight_dt(const Partition& la, int a, int b,
                                            const WeightFrame& frame = standard_frame());

// GW edge character (finite telescoped form, weights carry den_scale la_i)
EquivCharacter edge_character_gw(const Partition& la, int a, int b);
// value and power of u: u^{-chi(C)} z(la)^{-1} * weights * endpoint factors
std::pair<ExactScalar, long> edge_weight_gw(const Partition& la, int a, int b,
                                            const WeightFrame& frame = standard_frame());

// degree-k homogeneous part of prod(1 - e^{-t_i}) * chi as a t-polynomial;
// k = 2 gives the second Chern class of the ideal at the fixed point.
ExactScalar chern_restriction(const LeggedBoxConfig& c, int k);

} // namespace dtv
