#include "quadmod/wallfind.hpp"

#include <doctest.h>

#include <stdexcept>

#include <algorithm>

using namespace quadmod;

TEST_CASE("pair slopes") {
    Rat alpha(7, 3);
    CHECK(pair_slope({{4, 2, 1}, 1}, alpha) == (alpha + 1) / 6);
    CHECK(pair_slope({{3, 2, 0}, 1}, alpha) == alpha / 5);
    CHECK(pair_slope({{1, 0, 2}, 0}, alpha) == Rat(2));
    CHECK_THROWS_AS(pair_slope({{0, 0, 1}, 0}, alpha), std::invalid_argument);
}

TEST_CASE("walls of 4m+2n+1 are 5 and 11, with alpha = 2 filtered by emptiness") {
    WallSearch ws = find_walls(PairPoly{{4, 2, 1}, 1}, 4, 2);
    REQUIRE(ws.walls.size() == 2);
    CHECK(ws.walls[0].alpha == 5);
    CHECK(ws.walls[0].sub.P == LinPoly{3, 2, 0});
    CHECK(ws.walls[0].quot.P == LinPoly{1, 0, 1});
    CHECK(ws.walls[1].alpha == 11);
    CHECK(ws.walls[1].sub.P == LinPoly{3, 2, -1});
    CHECK(ws.walls[1].quot.P == LinPoly{1, 0, 2});

    REQUIRE(ws.candidates.size() == 3);
    CHECK(ws.candidates[0].alpha == 2);
    CHECK(ws.candidates[0].sub.P == LinPoly{2, 2, 0});
    CHECK(ws.candidates[0].quot.P == LinPoly{2, 0, 1});
    CHECK(ws.candidates[0].outcome == WallCandidate::Outcome::RejectedEmpty);

    for (const auto& w : ws.walls) {
        CHECK(w.verified);
        // wall condition holds exactly at alpha
        CHECK(pair_slope(w.sub, w.alpha) == pair_slope(ws.whole, w.alpha));
        // complementary, section-free side gives the same alpha
        Rat alpha_c = Rat(ws.bound_r + ws.bound_s) * Rat(w.quot.P.t) / Rat(w.quot.P.r + w.quot.P.s) -
                      Rat(ws.whole.P.t);
        CHECK(alpha_c == w.alpha);
    }
}

TEST_CASE("the twisted polynomial has a single wall at alpha = 1") {
    WallSearch ws = find_walls(PairPoly{{4, 2, -1}, 1}, 4, 2);
    REQUIRE(ws.walls.size() == 1);
    CHECK(ws.walls[0].alpha == 1);
    CHECK(ws.walls[0].sub.P == LinPoly{3, 2, -1});
    CHECK(ws.walls[0].quot.P == LinPoly{1, 0, 0});
}

TEST_CASE("brute-force grid finds no wall outside the returned sets") {
    for (long long t : {1LL, -1LL}) {
        WallSearch ws = find_walls(PairPoly{{4, 2, t}, 1}, 4, 2);
        std::vector<Rat> returned;
        for (const auto& w : ws.walls) returned.push_back(w.alpha);
        for (const Rat& alpha : brute_force_wall_grid(PairPoly{{4, 2, t}, 1}, 4, 2))
            CHECK(std::find(returned.begin(), returned.end(), alpha) != returned.end());
    }
}

TEST_CASE("removing the emptiness fact resurrects the alpha = 2 wall") {
    ModuliTable table = ModuliTable::standard();
    REQUIRE(table.remove({2, 0, 1}, {}));
    WallSearch ws = find_walls(PairPoly{{4, 2, 1}, 1}, 4, 2, table);
    REQUIRE(ws.walls.size() == 3);
    CHECK(ws.walls[0].alpha == 2);
    CHECK_FALSE(ws.walls[0].verified); // quotient moduli no longer in the table
    CHECK(ws.walls[1].alpha == 5);
    CHECK(ws.walls[2].alpha == 11);
}

TEST_CASE("curated moduli lookups") {
    const ModuliTable& t = ModuliTable::standard();
    auto empty = t.lookup({2, 0, 1});
    REQUIRE(empty.has_value());
    CHECK(empty->desc.is_empty());

    auto p11 = t.lookup({3, 2, -1}, 1, Chamber::ZeroPlus);
    REQUIRE(p11.has_value());
    CHECK(p11->desc.str() == "P^11");
    CHECK(p11->desc.dim() == 11);

    auto quintic = t.lookup({3, 2, 0}, 1, Chamber::ZeroPlus);
    REQUIRE(quintic.has_value());
    CHECK(quintic->desc.dim() == 12);

    auto lines = t.lookup({1, 0, 2});
    REQUIRE(lines.has_value());
    CHECK(lines->desc.dim() == 1);

    CHECK_FALSE(t.lookup({5, 1, 1}).has_value()); // NOT_IN_TABLE is a value

    auto relhilb = t.lookup({4, 2, 1}, 1, Chamber::Infinity);
    REQUIRE(relhilb.has_value());
    CHECK(relhilb->desc.dim() == 17);

    auto univ = t.lookup({4, 2, -1}, 1, Chamber::Infinity);
    REQUIRE(univ.has_value());
    CHECK(univ->desc.dim() == 15);
}

TEST_CASE("flip data fills the projective fibers across each wall") {
    WallSearch plus = find_walls(PairPoly{{4, 2, 1}, 1}, 4, 2);
    Wall w5 = flip_data(plus.walls[0]);
    CHECK(w5.fiber_above == 2);
    CHECK(w5.fiber_below == 1);
    REQUIRE(w5.sub_base.has_value());
    CHECK(w5.sub_base->dim() == 12);
    REQUIRE(w5.quot_base.has_value());
    CHECK(w5.quot_base->dim() == 1);

    Wall w11 = flip_data(plus.walls[1]);
    CHECK(w11.fiber_above == 3);
    CHECK(w11.fiber_below == 1);
    CHECK(w11.sub_base->str() == "P^11");
    CHECK(w11.quot_base->str() == "P^1");

    WallSearch minus = find_walls(PairPoly{{4, 2, -1}, 1}, 4, 2);
    Wall w1 = flip_data(minus.walls[0]);
    CHECK(w1.fiber_above == 1);
    CHECK(w1.fiber_below == 1);
}

TEST_CASE("find_walls validates its input") {
    CHECK_THROWS_AS(find_walls(PairPoly{{4, 2, 1}, 0}, 4, 2), std::invalid_argument);
    CHECK_THROWS_AS(find_walls(PairPoly{{0, 0, 1}, 1}, 4, 2), std::invalid_argument);
}
