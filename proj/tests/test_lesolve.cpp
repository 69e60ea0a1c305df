#include "quadmod/lesolve.hpp"

#include <doctest.h>

#include <stdexcept>

#include <random>

using namespace quadmod;

namespace {

SeqTerm known(const char* l, long long d) { return SeqTerm{l, d}; }
SeqTerm unknown(const char* l) { return SeqTerm{l, std::nullopt}; }

} // namespace

TEST_CASE("rank-nullity: 0 -> C^1 -> ? -> C^2 -> 0") {
    ExactSeq seq{{known("a", 1), unknown("b"), known("c", 2)}, {}, true};
    Solution sol = solve(seq);
    REQUIRE(sol.status == SolveStatus::Unique);
    CHECK(sol.dims[1].lo == 3);
}

TEST_CASE("two flanking zeros force the middle: 0 -> X -> C^2 -> 0") {
    ExactSeq seq{{unknown("X"), known("H1(O_L(-3,0))", 2)}, {}, true};
    Solution sol = solve(seq);
    REQUIRE(sol.status == SolveStatus::Unique);
    CHECK(sol.dims[0].lo == 2);
}

TEST_CASE("underdetermined middle pair reports unbounded intervals") {
    ExactSeq seq{{known("a", 1), unknown("u"), unknown("w"), known("d", 1)}, {}, true};
    Solution sol = solve(seq);
    REQUIRE(sol.status == SolveStatus::Ambiguous);
    CHECK(sol.dims[1].lo == 1);
    CHECK(sol.dims[1].unbounded);
    CHECK(sol.dims[2].lo == 1);
    CHECK(sol.dims[2].unbounded);
}

TEST_CASE("solving a fully known consistent sequence is the identity") {
    // ranks 0 ->2 ->1 ->0: dims 2, 3, 1
    ExactSeq seq{{known("a", 2), known("b", 3), known("c", 1)}, {}, true};
    Solution sol = solve(seq);
    REQUIRE(sol.status == SolveStatus::Unique);
    CHECK(sol.dims[0].lo == 2);
    CHECK(sol.dims[1].lo == 3);
    CHECK(sol.dims[2].lo == 1);
}

TEST_CASE("inconsistency is a value") {
    ExactSeq seq{{known("a", 2), known("b", 1)}, {}, true}; // 2 = r, 1 = r impossible
    CHECK(solve(seq).status == SolveStatus::Inconsistent);
}

TEST_CASE("malformed input throws") {
    ExactSeq seq{{known("a", 1), known("b", 1)}, {MapNote::None, MapNote::None}, true};
    CHECK_THROWS_AS(solve(seq), std::invalid_argument);
    CHECK_THROWS_AS(solve(ExactSeq{{}, {}, true}), std::invalid_argument);
}

TEST_CASE("annotations translate to rank constraints") {
    // 0 -> C^2 -> C^5 -> X -> 0 with the first map injective is implied;
    // an explicit Zero annotation on it must instead be inconsistent.
    ExactSeq seq{{known("a", 2), known("b", 5), unknown("X")},
                 {MapNote::None, MapNote::None},
                 true};
    Solution sol = solve(seq);
    REQUIRE(sol.status == SolveStatus::Unique);
    CHECK(sol.dims[2].lo == 3);

    ExactSeq zeroed{{known("a", 2), known("b", 5), unknown("X")},
                    {MapNote::Zero, MapNote::None},
                    true};
    CHECK(solve(zeroed).status == SolveStatus::Inconsistent);

    // surjectivity pins an open-ended tail
    ExactSeq surj{{known("a", 3), unknown("X")}, {MapNote::Surjective}, false};
    Solution ssol = solve(surj);
    REQUIRE(ssol.status == SolveStatus::Unique);
    CHECK(ssol.dims[1].lo == 3);
}

namespace {

struct TrueSeq {
    std::vector<long long> ranks; // r_i between term i and i+1, flanked by zeros
    std::vector<long long> dims;
};

TrueSeq random_true_seq(std::mt19937& rng) {
    std::uniform_int_distribution<int> len(2, 9), rank(0, 6);
    int n = len(rng);
    TrueSeq ts;
    ts.ranks.assign(static_cast<size_t>(n) + 1, 0);
    for (int i = 1; i < n; ++i) ts.ranks[static_cast<size_t>(i)] = rank(rng);
    for (int i = 0; i < n; ++i)
        ts.dims.push_back(ts.ranks[static_cast<size_t>(i)] + ts.ranks[static_cast<size_t>(i) + 1]);
    return ts;
}

} // namespace

TEST_CASE("oracle: hiding dimensions of true exact sequences never lies") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> coin(0, 1), anno(0, 9);
    int unique_count = 0;
    for (int trial = 0; trial < 1200; ++trial) {
        TrueSeq ts = random_true_seq(rng);
        ExactSeq seq;
        for (size_t i = 0; i < ts.dims.size(); ++i) {
            bool hide = coin(rng) == 1;
            seq.terms.push_back(SeqTerm{"t" + std::to_string(i),
                                        hide ? std::nullopt : std::optional<long long>(ts.dims[i])});
        }
        seq.maps.assign(ts.dims.size() - 1, MapNote::None);
        // sprinkle truthful annotations
        for (size_t i = 0; i + 1 < ts.dims.size(); ++i) {
            long long r = ts.ranks[i + 1];
            int a = anno(rng);
            if (a == 0 && r == 0) seq.maps[i] = MapNote::Zero;
            if (a == 1 && r == ts.dims[i]) seq.maps[i] = MapNote::Injective;
            if (a == 2 && r == ts.dims[i + 1]) seq.maps[i] = MapNote::Surjective;
        }
        Solution sol = solve(seq);
        REQUIRE(sol.status != SolveStatus::Inconsistent);
        for (size_t i = 0; i < ts.dims.size(); ++i) {
            CHECK(sol.dims[i].contains(ts.dims[i]));
            if (sol.status == SolveStatus::Unique) CHECK(sol.dims[i].lo == ts.dims[i]);
        }
        if (sol.status == SolveStatus::Unique) ++unique_count;
    }
    CHECK(unique_count > 0);
}

TEST_CASE("reversing a sequence mirrors its solution") {
    std::mt19937 rng(777);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int trial = 0; trial < 200; ++trial) {
        TrueSeq ts = random_true_seq(rng);
        ExactSeq seq;
        for (size_t i = 0; i < ts.dims.size(); ++i) {
            bool hide = coin(rng) == 1;
            seq.terms.push_back(SeqTerm{"t" + std::to_string(i),
                                        hide ? std::nullopt : std::optional<long long>(ts.dims[i])});
        }
        seq.maps.assign(ts.dims.size() - 1, MapNote::None);

        ExactSeq rev = seq;
        std::reverse(rev.terms.begin(), rev.terms.end());
        std::reverse(rev.maps.begin(), rev.maps.end());
        for (auto& m : rev.maps) {
            if (m == MapNote::Injective)
                m = MapNote::Surjective;
            else if (m == MapNote::Surjective)
                m = MapNote::Injective;
        }

        Solution a = solve(seq), b = solve(rev);
        REQUIRE(a.status == b.status);
        for (size_t i = 0; i < seq.terms.size(); ++i) {
            const DimRange& x = a.dims[i];
            const DimRange& y = b.dims[seq.terms.size() - 1 - i];
            CHECK(x.lo == y.lo);
            CHECK(x.hi == y.hi);
            CHECK(x.unbounded == y.unbounded);
        }
    }
}

TEST_CASE("chase systems share unknowns across sequences") {
    // u appears in two sequences; only their conjunction pins it.
    ChaseSystem sys;
    int u = sys.add_var("u");
    int w = sys.add_var("w");
    // 0 -> C^2 -> U -> W -> 0   (u = 2 + w - ... underdetermined alone)
    sys.add_seq({sys.known("a", 2), sys.var_ref("u", u), sys.var_ref("w", w)});
    // 0 -> W -> C^1 -> 0
    sys.add_seq({sys.var_ref("w", w), sys.known("b", 1)});
    auto res = sys.solve();
    REQUIRE(res.status == SolveStatus::Unique);
    CHECK(res.vars[static_cast<size_t>(w)].lo == 1);
    CHECK(res.vars[static_cast<size_t>(u)].lo == 3);
}

namespace {

// splice ranks so that seq B's term j has the prescribed dimension
TrueSeq random_true_seq_with(std::mt19937& rng, long long shared_dim, size_t& j_out) {
    std::uniform_int_distribution<int> len(2, 7), rank(0, 6);
    int n = len(rng);
    std::uniform_int_distribution<int> pos(0, n - 1);
    size_t j = static_cast<size_t>(pos(rng));
    TrueSeq ts;
    ts.ranks.assign(static_cast<size_t>(n) + 1, 0);
    for (int i = 1; i < n; ++i) ts.ranks[static_cast<size_t>(i)] = rank(rng);
    std::uniform_int_distribution<long long> split(0, shared_dim);
    long long in_rank = j == 0 ? 0 : split(rng);
    ts.ranks[j] = in_rank;
    ts.ranks[j + 1] = shared_dim - in_rank;
    if (j + 1 == static_cast<size_t>(n) ) {
        // keep the sequence exact at the closed right end
        ts.ranks[j + 1] = 0;
        ts.ranks[j] = shared_dim;
        if (j == 0 && shared_dim != 0) {
            // a single splice cannot meet both closed ends; retry upstream
            j_out = static_cast<size_t>(-1);
            return ts;
        }
    }
    for (int i = 0; i < n; ++i)
        ts.dims.push_back(ts.ranks[static_cast<size_t>(i)] + ts.ranks[static_cast<size_t>(i) + 1]);
    j_out = j;
    return ts;
}

} // namespace

TEST_CASE("system oracle: two sequences sharing a dimension never lie") {
    std::mt19937 rng(555);
    std::uniform_int_distribution<int> coin(0, 1);
    int done = 0, unique_count = 0;
    while (done < 400) {
        TrueSeq a = random_true_seq(rng);
        std::uniform_int_distribution<int> pos(0, static_cast<int>(a.dims.size()) - 1);
        size_t i = static_cast<size_t>(pos(rng));
        size_t j = 0;
        TrueSeq b = random_true_seq_with(rng, a.dims[i], j);
        if (j == static_cast<size_t>(-1)) continue;
        if (b.dims[j] != a.dims[i]) continue; // splice failed near a closed end
        ++done;

        ChaseSystem sys;
        int shared = sys.add_var("shared");
        auto build = [&](const TrueSeq& ts, size_t shared_at) {
            std::vector<ChaseSystem::TermRef> refs;
            for (size_t k = 0; k < ts.dims.size(); ++k) {
                if (k == shared_at)
                    refs.push_back(sys.var_ref("shared", shared));
                else if (coin(rng))
                    refs.push_back(sys.known("t", ts.dims[k]));
                else
                    refs.push_back(sys.unknown("t"));
            }
            sys.add_seq(std::move(refs));
        };
        build(a, i);
        build(b, j);

        auto res = sys.solve();
        REQUIRE(res.status != SolveStatus::Inconsistent);
        CHECK(res.vars[static_cast<size_t>(shared)].contains(a.dims[i]));
        for (size_t k = 0; k < a.dims.size(); ++k) {
            CHECK(res.seq_dims[0][k].contains(a.dims[k]));
            if (res.status == SolveStatus::Unique) CHECK(res.seq_dims[0][k].lo == a.dims[k]);
        }
        for (size_t k = 0; k < b.dims.size(); ++k) {
            CHECK(res.seq_dims[1][k].contains(b.dims[k]));
            if (res.status == SolveStatus::Unique) CHECK(res.seq_dims[1][k].lo == b.dims[k]);
        }
        if (res.status == SolveStatus::Unique) ++unique_count;
    }
    CHECK(unique_count > 0);
}

TEST_CASE("open-ended sequences leave the final rank free") {
    std::mt19937 rng(808);
    std::uniform_int_distribution<int> coin(0, 1), rank(0, 5);
    for (int trial = 0; trial < 300; ++trial) {
        // exact rows with a possibly nonzero rank out of the last term
        int n = 2 + trial % 6;
        std::vector<long long> ranks(static_cast<size_t>(n) + 1, 0);
        for (int i = 1; i <= n; ++i) ranks[static_cast<size_t>(i)] = rank(rng);
        std::vector<long long> dims;
        for (int i = 0; i < n; ++i)
            dims.push_back(ranks[static_cast<size_t>(i)] + ranks[static_cast<size_t>(i) + 1]);

        ChaseSystem sys;
        std::vector<ChaseSystem::TermRef> refs;
        for (int i = 0; i < n; ++i) {
            if (coin(rng))
                refs.push_back(sys.known("t", dims[static_cast<size_t>(i)]));
            else
                refs.push_back(sys.unknown("t"));
        }
        sys.add_seq(std::move(refs), {}, /*right_exact=*/false);
        auto res = sys.solve();
        REQUIRE(res.status != SolveStatus::Inconsistent);
        for (int i = 0; i < n; ++i)
            CHECK(res.seq_dims[0][static_cast<size_t>(i)].contains(dims[static_cast<size_t>(i)]));
    }
}
