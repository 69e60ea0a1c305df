#include "quadmod/surfcoh.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace quadmod;

TEST_CASE("cohomology of line bundles on P^1") {
    CHECK(h_p1(0) == std::pair<long long, long long>{1, 0});
    CHECK(h_p1(-1) == std::pair<long long, long long>{0, 0});
    CHECK(h_p1(-3) == std::pair<long long, long long>{0, 2});
    CHECK(h_p1(4) == std::pair<long long, long long>{5, 0});
}

TEST_CASE("Kunneth cohomology on the quadric") {
    CHECK(h_surface({0, 0}) == CohDims{1, 0, 0});
    CHECK(h_surface({-2, -3}) == CohDims{0, 0, 2});
    CHECK(h_surface({2, 3}) == CohDims{12, 0, 0});
    CHECK(h_surface({0, -3}) == CohDims{0, 2, 0});
}

TEST_CASE("chi and the Kunneth alternating sum agree everywhere") {
    CHECK(chi_surface({0, 0}) == 1);
    CHECK(chi_surface({-1, 7}) == 0);
    CHECK(chi_surface({2, 4}) == 15);
    for (int a = -6; a <= 6; ++a)
        for (int b = -6; b <= 6; ++b) {
            CohDims h = h_surface({a, b});
            CHECK(*h.h0 - *h.h1 + *h.h2 == chi_surface({a, b}));
        }
}

TEST_CASE("Serre duality") {
    CHECK(serre_dual({-1, -1}) == BiDegree{-1, -1});
    CHECK(serre_dual({0, 0}) == BiDegree{-2, -2});
    CHECK(serre_dual({1, 3}) == BiDegree{-3, -5});
    for (int a = -6; a <= 6; ++a)
        for (int b = -6; b <= 6; ++b) {
            CohDims h = h_surface({a, b});
            CohDims d = h_surface(serre_dual({a, b}));
            CHECK(*h.h0 == *d.h2);
            CHECK(*h.h1 == *d.h1);
            CHECK(*h.h2 == *d.h0);
        }
}

TEST_CASE("restriction to the rulings") {
    CHECK(h_line(LineClass::Deg01, {1, 3}) == std::pair<long long, long long>{2, 0});
    CHECK(h_line(LineClass::Deg01, {-3, 0}) == std::pair<long long, long long>{0, 2});
    CHECK(h_line(LineClass::Deg01, {-1, 0}) == std::pair<long long, long long>{0, 0});
    CHECK(h_line(LineClass::Deg10, {1, 3}) == std::pair<long long, long long>{4, 0});
}

TEST_CASE("cohomology of twisted curve structure sheaves") {
    CHECK(h_curve({2, 3}, {0, 0}) == CohDims{1, 2, 0});
    CHECK(h_curve({2, 3}, {2, 3}) == CohDims{11, 0, 0});
    CHECK(h_curve({2, 4}, {0, 1}) == CohDims{2, 2, 0});
    CHECK_THROWS_AS(h_curve({0, 0}, {0, 0}), std::invalid_argument);
}

TEST_CASE("Hilbert polynomials") {
    CHECK(hilbert_curve({2, 4}, {0, 0}) == BiPoly::linear(4, 2, -2));
    CHECK(hilbert_line(LineClass::Deg01, {-1, 0}) == BiPoly::linear(1, 0, 0));
    CHECK(hilbert_line(LineClass::Deg10, {0, 2}) == BiPoly::linear(0, 1, 3));
    CHECK(hilbert_skyscraper(1) == BiPoly::constant(1));
    CHECK(hilbert_skyscraper(3) == BiPoly::constant(3));

    // chi of a twisted line bundle is the Hilbert polynomial evaluated there
    for (int a = -2; a <= 2; ++a)
        for (int b = -2; b <= 2; ++b) {
            BiPoly p = hilbert_line_bundle({a, b});
            for (int u = -4; u <= 4; ++u)
                for (int v = -4; v <= 4; ++v)
                    CHECK(p.eval(u, v) == Rat(chi_surface({a + u, b + v})));
        }
}

TEST_CASE("curve chase matches the curve Hilbert polynomial when fully forced") {
    for (int c = 0; c <= 3; ++c)
        for (int d = 0; d <= 5; ++d) {
            if (c == 0 && d == 0) continue;
            for (int a = -4; a <= 4; ++a)
                for (int b = -4; b <= 4; ++b) {
                    CohDims h = h_curve({c, d}, {a, b});
                    if (!h.all_known()) continue;
                    Rat chi = hilbert_curve({c, d}, {a, b}).eval(0, 0);
                    CHECK(Rat(*h.h0 - *h.h1 + *h.h2) == chi);
                }
        }
}
