#include "dtv/poly.hpp"

#include <doctest.h>

using namespace dtv;

namespace {
Poly T1 = Poly::var(VT1);
Poly T2 = Poly::var(VT2);
Poly T3 = Poly::var(VT3);
Poly QH = Poly::var(VQH);

// deterministic little generator for property checks
Poly random_poly(unsigned& state, int max_terms = 4, int max_deg = 3) {
    auto next = [&state] {
        state = state * 1664525u + 1013904223u;
        return state >> 16;
    };
    Poly p;
    int terms = 1 + next() % max_terms;
    for (int t = 0; t < terms; ++t) {
        Mono m{};
        for (int v = 0; v < NVARS; ++v) m[v] = next() % (max_deg + 1);
        long c = (long)(next() % 9) - 4;
        p += Poly::monomial(m, Rat(c));
    }
    return p;
}
} // namespace

TEST_CASE("polynomial arithmetic basics") {
    Poly a = T1 + T2;
    Poly b = T1 - T2;
    CHECK(a * b == T1 * T1 - T2 * T2);
    CHECK((a * a).n_terms() == 3);
    CHECK(a.pow(3) == a * a * a);
    CHECK((a - a).is_zero());
}

TEST_CASE("exact division") {
    Poly a = (T1 + T2) * (T2 + T3) * (T1 + T3);
    auto q = a.divide_exact(T2 + T3);
    REQUIRE(q.has_value());
    CHECK(*q == (T1 + T2) * (T1 + T3));
    CHECK(!a.divisible_by(T1 + T2 + T3));
}

TEST_CASE("gcd of linear form products") {
    Poly a = (T1 + T2).pow(3) * (T2 + T3) * Poly(Rat(6));
    Poly b = (T1 + T2).pow(2) * (T1 + T3) * Poly(Rat(4));
    Poly g = poly_gcd(a, b);
    CHECK(g == (T1 + T2).pow(2));
}

TEST_CASE("gcd with q polynomials and monomial content") {
    Poly a = QH.pow(2) * (QH.pow(2) - Poly(Rat(1))); // qh^2 (q - 1)
    Poly b = QH.pow(3) * (QH - Poly(Rat(1)));
    Poly g = poly_gcd(a, b);
    CHECK(g == QH.pow(2) * (QH - Poly(Rat(1))));
}

TEST_CASE("gcd properties on random inputs") {
    unsigned state = 12345;
    for (int trial = 0; trial < 40; ++trial) {
        Poly a = random_poly(state), b = random_poly(state), c = random_poly(state);
        if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
        Poly g = poly_gcd(a * c, b * c);
        CHECK(g.divisible_by(c.shift_mono(c.mono_content()).primitive().second));
        CHECK((a * c).divisible_by(g));
        CHECK((b * c).divisible_by(g));
    }
}

TEST_CASE("substitution") {
    Poly f = T1 + T2 + T3;
    Poly g = f.substitute(VT3, -(T1 + T2));
    CHECK(g.is_zero());
    Poly h = (T1 + T3).substitute(VT3, -(T1 + T2));
    CHECK(h == -T2);
}

TEST_CASE("canonical text form") {
    Poly f = (T1 + T2) * (T1 + T2);
    CHECK(f.str() == "t1^2 + 2*t1*t2 + t2^2");
    CHECK(Poly().str() == "0");
}
