#include "quadmod/extcalc.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace quadmod;

namespace {

SheafPtr oq() { return make_curve_sheaf({2, 3}, {0, 0}); }
SheafPtr quintic_ext() { return make_resolution({{-2, -2}, {-1, -3}}, {{-1, -2}, {0, 0}}); }
SheafPtr ol(int a, int b) { return make_line_sheaf(LineClass::Deg01, {a, b}); }

PairExpr p1() { return PairExpr{1, oq(), {}}; }
PairExpr p2() { return PairExpr{0, ol(1, 0), {}}; }
PairExpr p3() { return PairExpr{1, quintic_ext(), {}}; }
PairExpr p4() { return PairExpr{0, ol(0, 0), {}}; }
PairExpr p5() { return PairExpr{0, ol(-1, 0), {}}; }

} // namespace

TEST_CASE("serre_reduce moves the twist and toggles the dual flag") {
    ExtProblem p{1, ol(-1, 0), make_curve_sheaf({2, 3}, {0, 1}), false};
    ExtProblem q = serre_reduce(p);
    CHECK(q.degree == 1);
    CHECK(to_sexpr(q.source) == "(curve 2 3 0 1)");
    CHECK(to_sexpr(q.target) == "(line 0 1 -3 -2)");
    CHECK(q.dual_applied);

    ExtProblem p2{1, ol(1, 0), oq(), false};
    ExtProblem q2 = serre_reduce(p2);
    CHECK(to_sexpr(q2.source) == "(curve 2 3 0 0)");
    CHECK(to_sexpr(q2.target) == "(line 0 1 -1 -2)");

    // involution up to the square of the canonical twist
    ExtProblem r = serre_reduce(q);
    CHECK(r.degree == p.degree);
    CHECK_FALSE(r.dual_applied);
    CHECK(to_sexpr(r.source) == to_sexpr(twist(p.source, {-2, -2})));
    CHECK(to_sexpr(r.target) == to_sexpr(twist(p.target, {-2, -2})));
}

TEST_CASE("Ext from a line bundle source is plain cohomology") {
    auto o = make_line_bundle({0, 0});
    ExtDims e = ext_dims_sheaf(o, o);
    CHECK(e.e0 == 1);
    CHECK(e.e1 == 0);
    CHECK(e.e2 == 0);
    // Ext^0(O,O) = Ext^2(O, O(-2,-2)) = h^2(O(-2,-2)) = 1
    ExtDims dual = ext_dims_sheaf(o, make_line_bundle({-2, -2}));
    CHECK(dual.e2 == 1);
}

TEST_CASE("sheaf-level Ext dimensions used by the classification") {
    // Ext^1(O_Q, O_L(-3,0)) = 2
    ExtDims a = ext_dims_sheaf(oq(), ol(-3, 0));
    CHECK(a.e0 == 0);
    CHECK(a.e1 == 2);
    CHECK(a.e2 == 0);

    // Ext^1(E, O_L(-2,-2)) = 2
    ExtDims b = ext_dims_sheaf(quintic_ext(), ol(-2, -2));
    CHECK(b.e1 == 2);
    CHECK(b.e2 == 0);

    // Ext^1(O_C, C_p) = 1 for the (2,4)-curve, via the evaluation fact
    ExtDims c = ext_dims_sheaf(make_curve_sheaf({2, 4}, {0, 0}), make_skyscraper(1));
    CHECK(c.e0 == 1);
    CHECK(c.e1 == 1);
    CHECK(c.e2 == 0);

    // Ext^1(O_Q, O_L(-1,0)) = 2 with vanishing Hom (the M_4' fiber count)
    ExtDims d = ext_dims_sheaf(oq(), ol(-1, 0));
    CHECK(d.e0 == 0);
    CHECK(d.e1 == 2);

    // Ext^1(O_Q(0,1), O_L(-3,-2)) = 2 (the M_4 fiber count after duality)
    ExtDims f = ext_dims_sheaf(make_curve_sheaf({2, 3}, {0, 1}), ol(-3, -2));
    CHECK(f.e1 == 2);

    // the direct route alone leaves Ext^1(O_L(-1,0), O_Q) open; the
    // joint Serre route forces it
    ExtDims direct = ext_dims_sheaf(ol(-1, 0), oq(), HomFacts::standard(), ExtRoute::DirectOnly);
    CHECK_FALSE(direct.e1.has_value());
    ExtDims joint = ext_dims_sheaf(ol(-1, 0), oq());
    CHECK(joint.e1 == 2);
}

TEST_CASE("self-extensions of the quintic sheaves") {
    ExtDims qq = ext_dims_sheaf(oq(), oq());
    CHECK(qq.e0 == 1);
    CHECK(qq.e1 == 13);
    CHECK(qq.e2 == 0);

    ExtDims ee = ext_dims_sheaf(quintic_ext(), quintic_ext());
    CHECK(ee.e0 == 1);
    CHECK(ee.e1 == 13);
    CHECK(ee.e2 == 0);

    // chi identity behind the dimension count:
    // 1 - chi(E(1,2)) - chi(E) + chi(E(2,2)) + chi(E(1,3)) = 13
    BiPoly pe = hilbert(quintic_ext());
    Rat val = Rat(1) - pe.eval(1, 2) - pe.eval(0, 0) + pe.eval(2, 2) + pe.eval(1, 3);
    CHECK(val == Rat(13));
}

TEST_CASE("Serre pairing between the two routes") {
    struct Case { SheafPtr f, g; };
    const std::vector<Case> cases = {
        {oq(), ol(-3, 0)},
        {oq(), ol(-1, 0)},
        {oq(), ol(1, 0)},
        {quintic_ext(), ol(-2, -2)},
        {quintic_ext(), ol(0, 0)},
        {make_curve_sheaf({2, 3}, {0, 1}), ol(-3, -2)},
    };
    for (const auto& c : cases) {
        ExtDims lhs = ext_dims_sheaf(c.f, c.g);
        ExtDims rhs = ext_dims_sheaf(c.g, twist(c.f, {-2, -2}));
        for (int i = 0; i <= 2; ++i) {
            auto a = lhs.at(i), b = rhs.at(2 - i);
            if (a && b) CHECK(*a == *b);
        }
    }
}

TEST_CASE("Euler form is route independent where both routes resolve") {
    ExtDims direct = ext_dims_sheaf(oq(), ol(-3, 0), HomFacts::standard(), ExtRoute::DirectOnly);
    ExtDims serre = ext_dims_sheaf(oq(), ol(-3, 0), HomFacts::standard(), ExtRoute::SerreOnly);
    REQUIRE(direct.e0.has_value());
    REQUIRE(serre.e0.has_value());
    long long chi_direct = *direct.e0 - *direct.e1 + *direct.e2;
    long long chi_serre = *serre.e0 - *serre.e1 + *serre.e2;
    CHECK(chi_direct == chi_serre);
}

TEST_CASE("pair Ext^1 dimensions across the walls") {
    CHECK(ext_dims_pair(p1(), p2()).e1 == 4);
    CHECK(ext_dims_pair(p2(), p1()).e1 == 2);
    CHECK(ext_dims_pair(p3(), p4()).e1 == 3);
    CHECK(ext_dims_pair(p4(), p3()).e1 == 2);
    CHECK(ext_dims_pair(p1(), p5()).e1 == 2);
    CHECK(ext_dims_pair(p5(), p1()).e1 == 2);
}

TEST_CASE("pair Ext^2 vanishing along the flipping loci") {
    const std::vector<std::pair<PairExpr, PairExpr>> pairs = {
        {p1(), p1()}, {p1(), p2()}, {p2(), p1()}, {p2(), p2()},
        {p3(), p3()}, {p3(), p4()}, {p4(), p3()}, {p4(), p4()},
        {p1(), p5()}, {p5(), p1()}, {p5(), p5()},
    };
    for (const auto& [a, b] : pairs) {
        ExtDims e = ext_dims_pair(a, b);
        CHECK(e.e2 == 0);
    }
}

TEST_CASE("the stability facts are load bearing") {
    // without Hom(L1, L2) = 0 the nine-term chase cannot pin Ext^1 = 4
    HomFacts empty;
    ExtDims e = ext_dims_pair(p1(), p2(), empty);
    CHECK_FALSE(e.e1.has_value());
    CHECK(e.range1.contains(4));
}

TEST_CASE("gamma is validated against the section count") {
    CHECK_THROWS_AS(ext_dims_pair(PairExpr{1, ol(-1, 0), {}}, p1()), std::invalid_argument);
    CHECK_THROWS_AS(ext_dims_pair(p1(), PairExpr{1, ol(-1, 0), {}}), std::invalid_argument);
    CHECK_THROWS_AS(ext_dims_pair(PairExpr{2, oq(), {}}, p1()), std::invalid_argument);
}
