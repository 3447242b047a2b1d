#include "dtv/character.hpp"
#include "dtv/vertexseries.hpp"

#include <doctest.h>

using namespace dtv;

namespace {
ExactScalar one() { return ExactScalar(1L); }
ExactScalar t1() { return ExactScalar::t1(); }
ExactScalar t2() { return ExactScalar::t2(); }
ExactScalar t3() { return ExactScalar::t3(); }
} // namespace

TEST_CASE("chi_character small cases") {
    LeggedBoxConfig box({Partition{}, Partition{}, Partition{}}, {{0, 0, 0}});
    EquivCharacter ch = chi_character(box, 2);
    EquivCharacter expect;
    expect.add({0, 0, 0}, 1);
    CHECK(ch == expect);

    LeggedBoxConfig leg({Partition{}, Partition{}, Partition{1}}, {});
    EquivCharacter ch3 = chi_character(leg, 3);
    EquivCharacter e3;
    e3.add({0, 0, 0}, 1);
    e3.add({0, 0, -1}, 1);
    e3.add({0, 0, -2}, 1);
    CHECK(ch3 == e3);

    LeggedBoxConfig empty({Partition{}, Partition{}, Partition{}}, {});
    CHECK(chi_character(empty, 2).empty());
    CHECK_THROWS_AS((void)chi_character(box, 1), TruncationTooSmall);
}

TEST_CASE("rational chi matches the truncated window") {
    LeggedBoxConfig c({Partition{2, 1}, Partition{1}, Partition{}}, {});
    RatChar q = chi_character_rational(c);
    // multiply by (1-k1)(1-k2)(1-k3) twice over: check via a window instead:
    // compare the finite window sum against expansion is implicit in the
    // vertex tests; here check bar involution on the finite overlap piece
    EquivCharacter w = chi_character(c, c.support_bound());
    CHECK(!w.empty());
    CHECK(w.bar().bar() == w);
}

TEST_CASE("single box virtual character") {
    LeggedBoxConfig box({Partition{}, Partition{}, Partition{}}, {{0, 0, 0}});
    EquivCharacter v = vertex_virtual_character(box);
    CHECK(v.terms().size() == 6);
    ExactScalar w = weight_product(v);
    ExactScalar expect = (t1() + t2()) * (t1() + t3()) * (t2() + t3()) / (t1() * t2() * t3());
    CHECK(w == expect);
}

TEST_CASE("empty configuration virtual character") {
    LeggedBoxConfig empty({Partition{}, Partition{}, Partition{}}, {});
    EquivCharacter v = vertex_virtual_character(empty);
    CHECK(v.empty());
    CHECK(weight_product(v) == one());
}

TEST_CASE("weight_product basics") {
    EquivCharacter ch;
    ch.add({1, 0, 0}, 1);
    ch.add({0, 1, 0}, 1);
    CHECK(weight_product(ch) == t1() * t2());
    EquivCharacter inv;
    inv.add({1, 0, 0}, -1);
    CHECK(weight_product(inv) == one() / t1());
    EquivCharacter zero;
    zero.add({0, 0, 0}, 1);
    CHECK_THROWS_AS((void)weight_product(zero), ZeroWeight);
}

TEST_CASE("degree zero vertex matches the McMahon power") {
    // dt_vertex_series(empty legs) == M(-q)^{c3 localization} through q^4
    int cutoff = 4;
    QSeries series = dt_vertex_series({Partition{}, Partition{}, Partition{}},
                                      standard_frame(), cutoff);
    ExactScalar c3 = vertex_c3_term(standard_frame());
    CHECK(c3 == -(t1() + t2()) * (t1() + t3()) * (t2() + t3()) / (t1() * t2() * t3()));
    QSeries closed = mcmahon_neg_pow(c3, cutoff);
    CHECK(series.same_series(closed));
}

TEST_CASE("degree zero vertex at the CY specialization") {
    int cutoff = 4;
    QSeries series = dt_vertex_series({Partition{}, Partition{}, Partition{}},
                                      standard_frame(), cutoff);
    // specialize every coefficient: should match M(-q)^{+1} or M(-q)^{-1}
    QSeries plus = mcmahon_neg_pow(one(), cutoff);
    QSeries minus = mcmahon_neg_pow(-one(), cutoff);
    bool is_plus = true, is_minus = true;
    for (int n = 0; n <= cutoff; ++n) {
        ExactScalar c = series.coeff_q(n).substitute_cy();
        if (c != plus.coeff_q(n)) is_plus = false;
        if (c != minus.coeff_q(n)) is_minus = false;
    }
    // the realized sign convention: recorded by this test
    CHECK(is_plus);
    CHECK(!is_minus);
}

TEST_CASE("vertex S(3) covariance") {
    // permuting legs and weight frame together leaves the series invariant
    std::array<Partition, 3> legs{Partition{2}, Partition{1}, Partition{}};
    int cutoff = enumerate_legged(legs, 10).minimal_volume + 3;
    QSeries base = dt_vertex_series(legs, standard_frame(), cutoff);
    struct P {
        int p[3];
        bool odd;
    };
    P perms[6] = {{{0, 1, 2}, false}, {{1, 2, 0}, false}, {{2, 0, 1}, false},
                  {{0, 2, 1}, true},  {{1, 0, 2}, true},  {{2, 1, 0}, true}};
    WeightFrame f = standard_frame();
    for (auto& s : perms) {
        std::array<Partition, 3> pl;
        WeightFrame pf;
        for (int a = 0; a < 3; ++a) {
            Partition l = legs[a];
            if (s.odd) l = l.transpose();
            pl[s.p[a]] = l;
            pf[s.p[a]] = f[a];
        }
        QSeries other = dt_vertex_series(pl, pf, cutoff);
        CHECK(other.same_series(base));
    }
}

TEST_CASE("vertex series deterministic under threading") {
    std::array<Partition, 3> legs{Partition{1}, Partition{}, Partition{}};
    QSeries a = dt_vertex_series(legs, standard_frame(), 3, 1);
    QSeries b = dt_vertex_series(legs, standard_frame(), 3, 4);
    for (int n = a.offset(); n <= a.trunc(); ++n) CHECK(a.coeff_qh(n) == b.coeff_qh(n));
}

TEST_CASE("one leg reduced vertex reconstructs to a rational function") {
    QSeries red = dt_vertex_series_reduced({Partition{1}, Partition{}, Partition{}},
                                           standard_frame(), 6);
    // Prop: capped/reduced vertices are rational; poles at roots of unity & 0
    ExactScalar r = rational_reconstruct(red, 2, 2);
    CHECK(poles_only_roots_of_unity(r));
    QSeries back = series_expand(r, 6);
    CHECK(back.same_series(red));
}

TEST_CASE("two leg topological vertex values") {
    CHECK(two_leg_topvertex(Partition{}, Partition{}) == one());
    ExactScalar s1 = ExactScalar::qh(1) / (ExactScalar::q() - one());
    CHECK(two_leg_topvertex(Partition{1}, Partition{}) == s1);
    CHECK(two_leg_topvertex(Partition{1}, Partition{1}) == s1 * s1 + one());
}

TEST_CASE("GW edge character and weights") {
    // la = (1), a = b = 0: multiplicity -1 at t1, t2, t3, -t3
    EquivCharacter ch = edge_character_gw(Partition{1}, 0, 0);
    EquivCharacter expect;
    expect.add({1, 0, 0}, -1);
    expect.add({0, 1, 0}, -1);
    expect.add({0, 0, 1}, -1);
    expect.add({0, 0, -1}, -1);
    CHECK(ch == expect);
    CHECK(edge_character_gw(Partition{}, 0, 0).empty());

    // independent oracle: multiply through by (y - 1)(y^{-1} - 1) per part and
    // compare polynomial characters, for a couple of twisted cases
    auto oracle_check = [](const Partition& la, int a, int b) {
        EquivCharacter ch = edge_character_gw(la, a, b);
        long L = ch.den_scale();
        // lhs: ch * (e^{t3/m_scale...}) checked per part is awkward globally;
        // instead verify the defining identity numerically on exponents:
        // reconstruct the rational generating identity by clearing one part.
        // For single-part partitions the telescoped sum must satisfy
        // (e^{t3/m} - 1)(e^{-t3/m} - 1) * ch = the defining numerator.
        REQUIRE(la.length() == 1);
        int m = la.parts()[0];
        // Build both sides as KPoly in a single variable y = e^{t3/m} plus
        // formal symbols for e^{t1}, e^{t2}: encode exponents as triples
        // (c1, c2, k): e^{c1 t1 + c2 t2 + k t3/m}.
        std::map<std::array<long, 3>, long long> lhs;
        auto mul_add = [&](const std::array<long, 3>& e, long long c) {
            auto it = lhs.find(e);
            if (it == lhs.end())
                lhs[e] = c;
            else {
                it->second += c;
                if (!it->second) lhs.erase(it);
            }
        };
        for (auto& [e, c] : ch.terms()) {
            long c1 = e[0] / L, c2 = e[1] / L, k = e[2]; // t1,t2 integral here
            // multiply by (y-1)(y^{-1}-1) = -y + 2 - y^{-1}
            mul_add({c1, c2, k + 1}, -c);
            mul_add({c1, c2, k}, 2 * c);
            mul_add({c1, c2, k - 1}, -c);
        }
        // rhs: (e^{t1}+e^{t2}+e^{t3})(1-y) + (e^{t1'}+e^{t2'}+e^{-t3})(1-y^{-1})
        //      + (y-1)(y^{-1}-1), all in the same encoding; t3 = m*(t3/m)
        std::map<std::array<long, 3>, long long> rhs;
        auto radd = [&](const std::array<long, 3>& e, long long c) {
            auto it = rhs.find(e);
            if (it == rhs.end())
                rhs[e] = c;
            else {
                it->second += c;
                if (!it->second) rhs.erase(it);
            }
        };
        // note 1/(y^{-1}-1) * (y-1)(y^{-1}-1) = (y-1), etc.
        auto add_block = [&](long c1, long c2, long k0, long long s, bool at_zero) {
            // term X/(y^{-1}-1) contributes X*(y-1)*(y^{-1}-1)/(y^{-1}-1) = X(y-1)
            // term X/(y-1) contributes X*(y^{-1}-1)
            if (at_zero) {
                radd({c1, c2, k0 + 1}, s);
                radd({c1, c2, k0}, -s);
            } else {
                radd({c1, c2, k0 - 1}, s);
                radd({c1, c2, k0}, -s);
            }
        };
        // (e^{t1}+e^{t2}+e^{t3}) / (e^{-t3/m}-1): note e^{-t3/m} = y^{-1}
        add_block(1, 0, 0, 1, false);
        add_block(0, 1, 0, 1, false);
        add_block(0, 0, m, 1, false);
        // (e^{t1'}+e^{t2'}+e^{-t3}) / (e^{t3/m}-1), t1' = t1 - a t3, etc.
        add_block(1, 0, -a * m, 1, true);
        add_block(0, 1, -b * m, 1, true);
        add_block(0, 0, -m, 1, true);
        // + 1 * (y-1)(y^{-1}-1)
        radd({0, 0, 1}, -1);
        radd({0, 0, 0}, 2);
        radd({0, 0, -1}, -1);
        CHECK(lhs == rhs);
    };
    oracle_check(Partition{1}, 0, 0);
    oracle_check(Partition{2}, 0, -1);
    oracle_check(Partition{3}, -1, -1);
    oracle_check(Partition{2}, 1, -2);

    CHECK(edge_weight_gw(Partition{}, 0, 0).first == one());
    CHECK(edge_weight_gw(Partition{1}, -1, -1).second == -2);
}

TEST_CASE("DT edge chi exponents") {
    CHECK(edge_chi_dt(Partition{1}, 0, 0) == 1);
    CHECK(edge_chi_dt(Partition{1}, -1, -1) == 1);
    CHECK(edge_chi_dt(Partition{2}, 0, 0) == 2);
    CHECK(edge_chi_dt(Partition{2}, 0, -1) == 2); // boxes (0,0),(1,0): i along a-axis
    CHECK(edge_chi_dt(Partition{1, 1}, 0, -1) == 3);
}

TEST_CASE("chern restriction") {
    // ideal (x,y): leg along axis 3 of size 1 -> t1 t2
    LeggedBoxConfig c({Partition{}, Partition{}, Partition{1}}, {});
    CHECK(chern_restriction(c, 2) == t1() * t2());
    // general legs: t1 t2 d3 + t1 d2 t3 + d1 t2 t3
    LeggedBoxConfig d({Partition{2}, Partition{1, 1}, Partition{3}}, {});
    ExactScalar expect = t1() * t2() * ExactScalar(3L) + t1() * ExactScalar(2L) * t3() +
                         ExactScalar(2L) * t2() * t3();
    CHECK(chern_restriction(d, 2) == expect);
    // empty -> 0
    LeggedBoxConfig e({Partition{}, Partition{}, Partition{}}, {});
    CHECK(chern_restriction(e, 2).is_zero());
}
