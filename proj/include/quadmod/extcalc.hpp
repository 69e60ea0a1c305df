#ifndef QUADMOD_EXTCALC_HPP
#define QUADMOD_EXTCALC_HPP

#include "quadmod/sheafalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace quadmod {

// Ext^degree(source, target), with a flag recording whether Serre
// duality has been applied an odd number of times (the dimensions are
// unaffected; the flag keeps the involution honest).
struct ExtProblem {
    int degree = 0;
    SheafPtr source, target;
    bool dual_applied = false;
};

// Ext^i(F,G) -> Ext^{2-i}(G, F(-2,-2)); the canonical class of the
// quadric is O(-2,-2).
ExtProblem serre_reduce(const ExtProblem& p);

// A pair (coherent system): a sheaf together with a section subspace of
// dimension gamma in {0,1}.
struct PairExpr {
    int gamma = 0;
    SheafPtr sheaf;
    std::optional<CohDims> known_h; // optional override for H*(sheaf)
};

std::string pair_key(const PairExpr& p);

// Provenance of an externally supplied Hom/Ext dimension.
enum class FactTag { Stability, Asserted, Computed };

struct HomFact {
    int degree = 0;
    bool is_pair = false;
    std::string src, dst; // canonical expression keys
    long long dim = 0;
    FactTag tag = FactTag::Asserted;
    std::string citation;
};

// Curated table of known Hom/Ext dimensions. Stability-based vanishing
// and tangent-space identifications are recorded inputs with citations,
// never derived by the solver.
class HomFacts {
public:
    void add_sheaf(int degree, const SheafPtr& f, const SheafPtr& g, long long dim, FactTag tag,
                   std::string citation);
    void add_pair(int degree, const PairExpr& a, const PairExpr& b, long long dim, FactTag tag,
                  std::string citation);
    std::optional<HomFact> find_sheaf(int degree, const SheafPtr& f, const SheafPtr& g) const;
    std::optional<HomFact> find_pair(int degree, const PairExpr& a, const PairExpr& b) const;
    const std::vector<HomFact>& entries() const { return entries_; }

    // The facts used throughout: simplicity of the stable quintic
    // structure sheaf, vanishing of Hom between stable pairs of
    // different slopes, and the two tangent-space dimensions.
    static const HomFacts& standard();

private:
    std::vector<HomFact> entries_;
};

// Ext dimensions in degrees 0..2; an entry is UNKNOWN when the chase
// leaves it ambiguous. Ranges keep the tight intervals for reporting.
struct ExtDims {
    std::optional<long long> e0, e1, e2;
    DimRange range0, range1, range2;
    SolveStatus status = SolveStatus::Ambiguous;

    std::optional<long long> at(int degree) const;
    const DimRange& range(int degree) const;
};

enum class ExtRoute { Both, DirectOnly, SerreOnly };

// Ext^*(F,G) for F carrying a resolution (two-term, curve or line);
// applies Hom(-,G) to it and chases. When G also carries a resolution
// the Serre-dual route is solved jointly with the direct one, which is
// exactly the "combine the last two exact sequences" step.
ExtDims ext_dims_sheaf(const SheafPtr& f, const SheafPtr& g,
                       const HomFacts& facts = HomFacts::standard(),
                       ExtRoute route = ExtRoute::Both);

// Ext^*(Lambda, Lambda') for pairs via the nine-term sequence
//   0 -> Hom(L,L') -> Hom(F,F') -> Hom(Gamma, H0(F')/Gamma')
//     -> Ext1(L,L') -> Ext1(F,F') -> Hom(Gamma, H1(F'))
//     -> Ext2(L,L') -> Ext2(F,F') -> Hom(Gamma, H2(F'))
// solved jointly with the sheaf-level sequences for Ext^*(F,F').
ExtDims ext_dims_pair(const PairExpr& a, const PairExpr& b,
                      const HomFacts& facts = HomFacts::standard());

} // namespace quadmod

#endif
