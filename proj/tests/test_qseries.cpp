#include "dtv/qseries.hpp"

#include <doctest.h>

using namespace dtv;

namespace {
ExactScalar one() { return ExactScalar(1L); }
ExactScalar q() { return ExactScalar::q(); }
} // namespace

TEST_CASE("geometric series expansion") {
    // 1/(1+q) -> 1 - q + q^2 - q^3
    ExactScalar f = one() / (one() + q());
    QSeries s = series_expand(f, 3);
    CHECK(s.coeff_q(0) == one());
    CHECK(s.coeff_q(1) == -one());
    CHECK(s.coeff_q(2) == one());
    CHECK(s.coeff_q(3) == -one());

    // q/(1+q)^2 -> q - 2q^2 + 3q^3
    ExactScalar g = q() / (one() + q()).pow(2);
    QSeries t = series_expand(g, 3);
    CHECK(t.coeff_q(0).is_zero());
    CHECK(t.coeff_q(1) == one());
    CHECK(t.coeff_q(2) == ExactScalar(-2L));
    CHECK(t.coeff_q(3) == ExactScalar(3L));

    // t1/(t2(1-q)) -> (t1/t2)(1+q+q^2)
    ExactScalar h = ExactScalar::t1() / (ExactScalar::t2() * (one() - q()));
    QSeries u = series_expand(h, 2);
    ExactScalar r = ExactScalar::t1() / ExactScalar::t2();
    CHECK(u.coeff_q(0) == r);
    CHECK(u.coeff_q(1) == r);
    CHECK(u.coeff_q(2) == r);
}

TEST_CASE("series arithmetic is a ring homomorphism up to truncation") {
    ExactScalar a = (one() + q()) / (one() - q());
    ExactScalar b = q() / (one() + q() + q().pow(2));
    QSeries sa = series_expand(a, 6), sb = series_expand(b, 6);
    CHECK((sa * sb).same_series(series_expand(a * b, 6)));
    CHECK((sa + sb).same_series(series_expand(a + b, 6)));
    CHECK(sa.inverse().same_series(series_expand(a.inverse(), 6)));
}

TEST_CASE("degenerate series inputs") {
    // a zero denominator is rejected at construction time, before NonLaurent
    // could ever trigger
    CHECK_THROWS_AS((void)ExactScalar(Poly(Rat(1)), Poly()), DivisionByZero);
    CHECK(expand_qh(ExactScalar(), 4).is_zero());
    // negative q powers expand as honest Laurent series
    ExactScalar f = one() / (q() * (one() + q()));
    QSeries s = expand_qh(f, 4);
    CHECK(s.coeff_qh(-2) == one());
    CHECK(s.coeff_qh(0) == -one());
    CHECK(s.coeff_qh(2) == one());
}

TEST_CASE("rational reconstruction round trips") {
    ExactScalar f = one() / (one() + q());
    QSeries s = series_expand(f, 8);
    CHECK(rational_reconstruct(s, 0, 1) == f);

    ExactScalar g = q() / (one() + q()).pow(2);
    QSeries t = series_expand(g, 8);
    CHECK(rational_reconstruct(t, 1, 2) == g);
}

TEST_CASE("rational reconstruction with t coefficients and errors") {
    ExactScalar h = (ExactScalar::t1() * q() + ExactScalar(2L)) /
                    ((one() - q() * ExactScalar::t2()) * (one() + q()));
    QSeries s = series_expand(h, 12);
    CHECK(rational_reconstruct(s, 1, 2) == h);

    // not rational within the bounds
    QSeries mac = mcmahon_neg_pow(ExactScalar(1L), 9);
    CHECK_THROWS_AS((void)rational_reconstruct(mac, 1, 2), NoFit);
}

TEST_CASE("round trip property: reconstruct after expand") {
    unsigned state = 555;
    auto next = [&state] {
        state = state * 1664525u + 1013904223u;
        return state >> 16;
    };
    for (int trial = 0; trial < 10; ++trial) {
        // small rational function of q with rational coefficients
        ExactScalar num, den = one();
        int nd = next() % 3, dd = next() % 3;
        for (int i = 0; i <= nd; ++i) num += ExactScalar((long)(next() % 7) - 3) * q().pow(i);
        for (int i = 1; i <= dd; ++i) den += ExactScalar((long)(next() % 5) - 2) * q().pow(i);
        if (num.is_zero() || den.is_zero()) continue;
        ExactScalar f = num / den;
        QSeries s = series_expand(f, 2 * (nd + dd) + 4);
        CHECK(rational_reconstruct(s, nd, dd) == f);
    }
}

TEST_CASE("McMahon series") {
    QSeries m = mcmahon_neg_pow(ExactScalar(-1L), 5); // M(-q)^{-1}
    QSeries mm = mcmahon_neg_pow(ExactScalar(1L), 5);
    CHECK((m * mm).same_series(QSeries::one(10)));
    // M(q) coefficients 1,1,3,6,13,24 -> M(-q): alternating signs
    CHECK(mm.coeff_q(0) == one());
    CHECK(mm.coeff_q(1) == ExactScalar(-1L));
    CHECK(mm.coeff_q(2) == ExactScalar(3L));
    CHECK(mm.coeff_q(3) == ExactScalar(-6L));
    CHECK(mm.coeff_q(4) == ExactScalar(13L));
    CHECK(mm.coeff_q(5) == ExactScalar(-24L));
}

TEST_CASE("pole location diagnostic") {
    ExactScalar f = one() / ((one() + q()) * (one() - q()).pow(2));
    CHECK(poles_only_roots_of_unity(f));
    ExactScalar g = one() / (one() - q() * ExactScalar(2L));
    CHECK(!poles_only_roots_of_unity(g));
    ExactScalar h = one() / (q().pow(3) * (one() + q() + q().pow(2)));
    CHECK(poles_only_roots_of_unity(h));
    ExactScalar k = one() / (one() - q() * ExactScalar::t1());
    CHECK(!poles_only_roots_of_unity(k));
}
