#ifndef QUADMOD_BETTICALC_HPP
#define QUADMOD_BETTICALC_HPP

#include "quadmod/trunc_series.hpp"
#include "quadmod/wallfind.hpp"

#include <array>
#include <memory>
#include <optional>
#include <variant>
#include <vector>

namespace quadmod {

struct SpaceExpr;
using SpacePtr = std::shared_ptr<const SpaceExpr>;

// Symbolic space whose Poincare polynomial is computable: projective
// spaces, products, (Zariski-locally trivial) bundles, Hilbert schemes
// of points via the Goettsche product, blow-ups, and wall crossings
// that trade a P^from-bundle locus for a P^to-bundle locus over the
// same base.
struct SpaceExpr {
    struct Proj { int n = 0; };
    struct Prod { std::vector<SpacePtr> parts; };
    struct Bundle { SpacePtr fiber, base; };
    struct Hilb { std::array<long long, 5> betti{1, 0, 2, 0, 1}; int n = 0; };
    struct Blowup { SpacePtr total, center; int codim = 0; };
    struct CrossWall { SpacePtr from; long long fiber_from = 0, fiber_to = 0; SpacePtr base; };
    struct Literal { UPoly p; };

    using Node = std::variant<Proj, Prod, Bundle, Hilb, Blowup, CrossWall, Literal>;
    Node node;
};

SpacePtr space_proj(int n);
SpacePtr space_prod(std::vector<SpacePtr> parts);
SpacePtr space_bundle(SpacePtr fiber, SpacePtr base);
SpacePtr space_hilb(int n, std::array<long long, 5> betti = {1, 0, 2, 0, 1});
SpacePtr space_blowup(SpacePtr total, SpacePtr center, int codim);
SpacePtr space_cross_wall(SpacePtr from, long long fiber_from, long long fiber_to, SpacePtr base);
SpacePtr space_literal(UPoly p);

// Converts a moduli-table descriptor into a space expression.
SpacePtr space_of(const Descriptor& d);

// Betti numbers of Hilb^n(S) for a surface S without odd homology,
// extracted from the truncated Goettsche product
//   prod_k (1-x^{k-1} z^k)^{-b0} (1-x^k z^k)^{-b2} (1-x^{k+1} z^k)^{-b4}.
// Nonzero odd Betti input is rejected.
UPoly gottsche_hilb(const std::array<long long, 5>& betti, int n);

UPoly poincare(const SpacePtr& x);

// One wall crossed while descending alpha.
struct WallStep {
    Rat alpha;
    long long fiber_from = 0, fiber_to = 0;
    UPoly base_poincare;
    UPoly delta; // (P(P^to) - P(P^from)) * P(base)
};

// P(M^{0+}) for the pair moduli of the given polynomial: starts from
// the table's alpha = infinity description and crosses every wall in
// decreasing order. Unknown flip data surfaces in `issues` and leaves
// `result` empty instead of guessing.
struct Assembly {
    std::optional<UPoly> result;
    UPoly start;
    WallSearch search;
    std::vector<WallStep> steps;
    std::vector<std::string> issues;
};

Assembly assemble_m0plus(const PairPoly& whole, int R, int S,
                         const ModuliTable& table = ModuliTable::standard(),
                         const HomFacts& facts = HomFacts::standard());

// The target polynomial of the computation, stored as literal data and
// read only for comparison, never during assembly.
const UPoly& expected_moduli_poincare();

// End-to-end check: P(M) = P(M^{0+}(4m+2n+1)) - x * P(M^{0+}(4m+2n-1)),
// compared coefficientwise against the stored target.
struct PoincareComparison {
    std::optional<UPoly> computed;
    UPoly expected;
    UPoly m0plus_plus, m0plus_minus;
    bool pass = false;
    std::optional<int> first_mismatch; // highest exponent that disagrees
    std::vector<std::string> issues;
};

PoincareComparison compare_moduli_poincare(const ModuliTable& table = ModuliTable::standard(),
                                           const HomFacts& facts = HomFacts::standard());

// The same wall-crossing delta computed the long way: blow up the
// P^from-bundle locus (codimension fiber_to + 1), then contract the
// exceptional divisor in the other ruling. Used to cross-check the
// CROSS_WALL formula.
UPoly cross_via_blowup(const UPoly& p_from_side, long long fiber_from, long long fiber_to,
                       const UPoly& p_base);

} // namespace quadmod

#endif
