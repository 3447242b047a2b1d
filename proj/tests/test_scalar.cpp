#include "dtv/scalar.hpp"

#include <doctest.h>

using namespace dtv;

namespace {
ExactScalar t1() { return ExactScalar::t1(); }
ExactScalar t2() { return ExactScalar::t2(); }
ExactScalar t3() { return ExactScalar::t3(); }

ExactScalar random_scalar(unsigned& state) {
    auto next = [&state] {
        state = state * 1664525u + 1013904223u;
        return state >> 16;
    };
    Poly vars[] = {Poly::var(VT1), Poly::var(VT2), Poly::var(VT3), Poly::var(VQH)};
    Poly num(Rat((long)(next() % 7) - 3));
    Poly den(Rat(1 + (long)(next() % 5)));
    for (int i = 0; i < 3; ++i) {
        Poly lin = vars[next() % 4] + Poly(Rat((long)(next() % 5) - 2));
        if (next() % 2)
            num = num * lin;
        else
            den = den * lin;
    }
    if (num.is_zero()) num = Poly(Rat(1));
    return ExactScalar(num, den);
}
} // namespace

TEST_CASE("field axioms on randomized scalars") {
    unsigned state = 987;
    for (int trial = 0; trial < 30; ++trial) {
        ExactScalar a = random_scalar(state), b = random_scalar(state), c = random_scalar(state);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        if (!a.is_zero()) CHECK(a * a.inverse() == ExactScalar(1L));
        CHECK(a - a == ExactScalar());
    }
}

TEST_CASE("reduction keeps numerator and denominator coprime") {
    ExactScalar a((Poly::var(VT1) + Poly::var(VT2)) * Poly::var(VT1),
                  (Poly::var(VT1) + Poly::var(VT2)) * Poly::var(VT2));
    auto [n, d] = a.expanded();
    CHECK(n == Poly::var(VT1));
    CHECK(d == Poly::var(VT2));
    // partial overlap with a composite factor: (q^2-1) vs (q-1)
    Poly q2m1 = Poly::var(VQH, 4) - Poly(Rat(1));
    Poly qm1 = Poly::var(VQH, 2) - Poly(Rat(1));
    ExactScalar b(qm1, q2m1);
    auto [bn, bd] = b.expanded();
    CHECK(bn == Poly(Rat(1)));
    CHECK(bd == (Poly::var(VQH, 2) + Poly(Rat(1))));
}

TEST_CASE("denominator is monic in the expanded form") {
    ExactScalar a(Poly::var(VT1), Poly(Rat(3)) * Poly::var(VT2));
    auto [n, d] = a.expanded();
    CHECK(d.leading().c == 1);
    CHECK(a == ExactScalar(Poly::var(VT1), Poly::var(VT2)) * ExactScalar(Rat(1, 3)));
}

TEST_CASE("substitute_cy") {
    ExactScalar s = t1() + t2() + t3();
    CHECK(s.substitute_cy().is_zero());

    ExactScalar prod = (t1() + t2()) * (t2() + t3()) * (t1() + t3());
    ExactScalar expect = (-t3()).substitute_cy() * (-t1()) * (-t2());
    // (t1+t2) = -t3 etc: product becomes t1 t2 (t1+t2)
    CHECK(prod.substitute_cy() == t1() * t2() * (t1() + t2()));
    CHECK(expect == prod.substitute_cy());

    ExactScalar pole = ExactScalar(1L) / (t1() + t2() + t3());
    CHECK_THROWS_AS((void)pole.substitute_cy(), SpecializationPole);
}

TEST_CASE("canonical serialization is stable") {
    ExactScalar a = (t1() + t2()).pow(2) / (t3() * ExactScalar(2L));
    CHECK(a.str() == "(1/2*t1^2 + t1*t2 + 1/2*t2^2)/(t3)");
}
