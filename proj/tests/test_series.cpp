#include "quadmod/trunc_series.hpp"

#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <random>

using namespace quadmod;

TEST_CASE("geometric series 1/(1-z)") {
    TruncSeries s = trunc_product({SeriesFactor{true, UPoly::constant(1), 1}}, 3);
    for (int k = 0; k <= 3; ++k) CHECK(s.coeff(k) == UPoly::constant(1));
}

TEST_CASE("convolution 1/((1-z)(1-xz))") {
    TruncSeries s = trunc_product({SeriesFactor{true, UPoly::constant(1), 1},
                                   SeriesFactor{true, UPoly::monomial(1), 1}},
                                  2);
    CHECK(s.coeff(0) == UPoly({1}));
    CHECK(s.coeff(1) == UPoly({1, 1}));
    CHECK(s.coeff(2) == UPoly({1, 1, 1}));
}

namespace {

std::vector<SeriesFactor> quadric_hilb_factors(int order) {
    std::vector<SeriesFactor> fs;
    for (int k = 1; k <= order; ++k) {
        fs.push_back({true, UPoly::monomial(k - 1), k});
        fs.push_back({true, UPoly::monomial(k), k});
        fs.push_back({true, UPoly::monomial(k), k});
        fs.push_back({true, UPoly::monomial(k + 1), k});
    }
    return fs;
}

} // namespace

TEST_CASE("Hilbert-scheme generating product to order 3") {
    TruncSeries s = trunc_product(quadric_hilb_factors(3), 3);
    CHECK(s.coeff(0) == UPoly({1}));
    CHECK(s.coeff(1) == UPoly({1, 2, 1}));
    CHECK(s.coeff(2) == UPoly({1, 3, 6, 3, 1}));
    CHECK(s.coeff(3) == UPoly({1, 3, 9, 14, 9, 3, 1}));
}

TEST_CASE("denominator with zero constant term is rejected") {
    CHECK_THROWS_AS(trunc_product({SeriesFactor{true, UPoly::constant(1), 0}}, 2),
                    std::invalid_argument);
}

TEST_CASE("numerator cancels its geometric inverse") {
    TruncSeries s = trunc_product({SeriesFactor{false, UPoly::monomial(2), 1},
                                   SeriesFactor{true, UPoly::monomial(2), 1}},
                                  4);
    CHECK(s.coeff(0) == UPoly({1}));
    for (int k = 1; k <= 4; ++k) CHECK(s.coeff(k).is_zero());
}

TEST_CASE("product is invariant under factor reordering") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> w(0, 3), k(1, 3), flag(0, 3);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<SeriesFactor> fs;
        int count = 2 + trial % 5;
        for (int i = 0; i < count; ++i)
            fs.push_back({flag(rng) != 0, UPoly::monomial(w(rng)), k(rng)});
        TruncSeries a = trunc_product(fs, 5);
        std::shuffle(fs.begin(), fs.end(), rng);
        TruncSeries b = trunc_product(fs, 5);
        CHECK(a == b);
    }
}
