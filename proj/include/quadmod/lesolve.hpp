#ifndef QUADMOD_LESOLVE_HPP
#define QUADMOD_LESOLVE_HPP

#include <optional>
#include <string>
#include <vector>

namespace quadmod {

// Annotation on a map of an exact sequence. Translates to a rank
// constraint: ZERO forces rank 0, INJECTIVE forces rank = dim(source),
// SURJECTIVE forces rank = dim(target).
enum class MapNote { None, Zero, Injective, Surjective };

enum class SolveStatus { Unique, Ambiguous, Inconsistent };

// Integer interval [lo, hi]; hi absent means unbounded above.
struct DimRange {
    long long lo = 0;
    std::optional<long long> hi;
    bool unbounded = false;

    bool is_point() const { return hi.has_value() && *hi == lo; }
    bool contains(long long v) const { return v >= lo && (!hi || v <= *hi); }
};

struct SeqTerm {
    std::string label;
    std::optional<long long> dim; // nullopt = UNKNOWN
};

// A finite exact sequence 0 -> T0 -> T1 -> ... -> Tk (-> 0). The solver
// variables are the ranks r_i of the maps; exactness says
// dim T_i = r_{i-1} + r_i with virtual zero ranks at the closed ends.
// right_exact = false drops the trailing zero (exactness is asserted at
// every displayed term but the last map need not be surjective).
struct ExactSeq {
    std::vector<SeqTerm> terms;
    std::vector<MapNote> maps; // size terms-1, or empty for all-None
    bool right_exact = true;
};

struct Solution {
    SolveStatus status = SolveStatus::Ambiguous;
    std::vector<DimRange> dims;  // per term, tight hulls over feasible chases
    std::vector<DimRange> ranks; // per map
};

// Propagates the rank constraints to a fixed point, then searches the
// remaining freedom for tight per-term intervals. INCONSISTENT is a
// value, not an error; malformed input (length mismatch) throws.
Solution solve(const ExactSeq& seq);

// A system of exact sequences sharing unknown dimensions. This is the
// engine behind every "combining the last two exact sequences" step:
// the shared unknowns (Hom/Ext dims that appear in several sequences)
// are solved jointly.
class ChaseSystem {
public:
    // Reference to a term dimension: a known constant or a shared variable.
    struct TermRef {
        std::string label;
        bool is_var = false;
        long long value = 0; // constant when !is_var
        int var = -1;        // variable id when is_var
    };

    int add_var(std::string name);
    TermRef known(std::string label, long long dim) const;
    TermRef var_ref(std::string label, int var) const;
    // fresh anonymous unknown, used once
    TermRef unknown(std::string label);

    void add_seq(std::vector<TermRef> terms, std::vector<MapNote> notes = {},
                 bool right_exact = true);

    struct Result {
        SolveStatus status = SolveStatus::Ambiguous;
        std::vector<DimRange> vars;                  // per shared variable
        std::vector<std::vector<DimRange>> seq_dims; // per sequence per term
    };

    Result solve() const;

    int var_count() const { return static_cast<int>(var_names_.size()); }
    const std::string& var_name(int v) const { return var_names_.at(static_cast<size_t>(v)); }

private:
    struct StoredSeq {
        std::vector<TermRef> terms;
        std::vector<MapNote> notes;
        bool right_exact;
    };
    std::vector<std::string> var_names_;
    std::vector<StoredSeq> seqs_;
};

} // namespace quadmod

#endif
