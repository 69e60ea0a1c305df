#ifndef QUADMOD_WALLFIND_HPP
#define QUADMOD_WALLFIND_HPP

#include "quadmod/extcalc.hpp"

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace quadmod {

// Hilbert polynomial of a pair together with the dimension of its
// section space (0 or 1).
struct PairPoly {
    LinPoly P;
    int gamma = 1;
    friend bool operator==(const PairPoly&, const PairPoly&) = default;
};

// alpha-slope (t + gamma*alpha)/(r+s).
Rat pair_slope(const PairPoly& pp, const Rat& alpha);

enum class Chamber { ZeroPlus, Infinity };

// Shape of a known moduli space, rich enough to produce a dimension and
// (in betticalc) a Poincare polynomial.
struct Descriptor {
    struct Empty {};
    struct Proj { int n = 0; };
    struct Prod { std::vector<Descriptor> parts; };
    struct Bundle { std::vector<Descriptor> fiber_base; }; // exactly {fiber, base}
    struct Hilb { std::array<long long, 5> betti{1, 0, 2, 0, 1}; int n = 0; };
    struct UnivCurve { CurveClass cls; };

    std::variant<Empty, Proj, Prod, Bundle, Hilb, UnivCurve> node;

    bool is_empty() const { return std::holds_alternative<Empty>(node); }
    long long dim() const; // throws for Empty
    std::string str() const;
};

Descriptor desc_empty();
Descriptor desc_proj(int n);
Descriptor desc_prod(std::vector<Descriptor> parts);
Descriptor desc_bundle(Descriptor fiber, Descriptor base);
Descriptor desc_hilb(int n, std::array<long long, 5> betti = {1, 0, 2, 0, 1});
Descriptor desc_univ_curve(CurveClass cls);

// One curated fact: the moduli space of (pairs with) Hilbert polynomial
// P is the described space. Pair entries carry the chamber.
struct ModuliFact {
    LinPoly P;
    std::optional<int> gamma;        // nullopt: sheaf moduli
    std::optional<Chamber> chamber;  // set for pair moduli
    Descriptor desc;
    std::string citation;
    std::optional<PairExpr> representative; // a generic member, for Ext computations
};

// Absence from the table is an explicit NOT_IN_TABLE outcome (nullopt),
// never a silent decision.
class ModuliTable {
public:
    void add(ModuliFact f) { entries_.push_back(std::move(f)); }
    bool remove(const LinPoly& p, std::optional<int> gamma);
    std::optional<ModuliFact> lookup(const LinPoly& p, std::optional<int> gamma = {},
                                     std::optional<Chamber> chamber = {}) const;
    const std::vector<ModuliFact>& entries() const { return entries_; }

    static const ModuliTable& standard();

private:
    std::vector<ModuliFact> entries_;
};

// A positive rational alpha where a sub-pair achieves equal alpha-slope,
// together with the destabilizing decomposition and, once filled by
// flip_data, the projective fiber dimensions on both sides of the wall.
struct Wall {
    Rat alpha;
    PairPoly sub;  // section-carrying side
    PairPoly quot;
    std::optional<long long> fiber_above; // P^k on the alpha > wall side
    std::optional<long long> fiber_below; // P^k on the alpha < wall side
    std::optional<Descriptor> sub_base, quot_base;
    bool verified = true; // false: a factor was not in the moduli table
    std::string note;
};

struct WallCandidate {
    Rat alpha;
    PairPoly sub, quot;
    enum class Outcome { Accepted, RejectedEmpty, AcceptedUnverified } outcome;
    std::string note;
};

struct WallSearch {
    PairPoly whole;
    int bound_r = 0, bound_s = 0;
    std::vector<WallCandidate> candidates; // pre-filter, sorted by alpha
    std::vector<Wall> walls;               // post-filter, sorted by alpha
    std::vector<std::string> notes;
};

// Enumerates destabilizing sub-pair polynomials (r,s,t) with
// 0 <= r <= R, 0 <= s <= S, (r,s) not in {(0,0),(R,S)}, t >= r+s-rs,
// solves pair_slope(sub, alpha) = pair_slope(whole, alpha) exactly and
// keeps alpha > 0 (which bounds the t-scan). Candidates whose sub or
// quotient factor is EMPTY in the table are rejected; factors missing
// from the table leave the wall flagged unverified rather than dropped.
WallSearch find_walls(const PairPoly& whole, int R, int S,
                      const ModuliTable& table = ModuliTable::standard());

// Independent oracle grid for the exhaustiveness property: t scanned
// over [r+s-rs, t_whole - (rq+sq-rq*sq)] with the quotient-side bound
// imposed symmetrically.
std::vector<Rat> brute_force_wall_grid(const PairPoly& whole, int R, int S);

// Fills the fiber dimensions of a wall: P(Ext^1(sub-pair, quot-pair))
// above, P(Ext^1(quot-pair, sub-pair)) below, both via the nine-term
// pair sequence. Unknown Ext dimensions propagate as absent fibers.
Wall flip_data(const Wall& w, const ModuliTable& table = ModuliTable::standard(),
               const HomFacts& facts = HomFacts::standard());

} // namespace quadmod

#endif
