#include "quadmod/lesolve.hpp"

#include <algorithm>
#include <stdexcept>

namespace quadmod {

namespace {

constexpr long long kClip = 24;       // search width for unbounded variables
constexpr long long kNodeCap = 200000; // per-component DFS safety valve

struct Range {
    long long lo = 0;
    std::optional<long long> hi; // nullopt = unbounded
    bool empty() const { return hi.has_value() && *hi < lo; }
    bool point() const { return hi.has_value() && *hi == lo; }
};

// Reference to a dimension: known constant or variable index.
struct Ref {
    bool is_var = false;
    long long c = 0;
    int var = -1;
};

struct SumC { Ref d; int ra; int rb; }; // d = r_a + r_b; index -1 means the constant 0
struct EqC { int rank; Ref d; };        // rank = d

struct Model {
    std::vector<Range> vars;
    std::vector<SumC> sums;
    std::vector<EqC> eqs;
    // lower bounds past this level can only come from a positive cycle
    // (x >= x + c with c > 0), which has no finite solution
    long long divergence_bound = 1 << 20;
};

bool tighten(Range& r, long long lo, const std::optional<long long>& hi, bool& changed) {
    if (lo > r.lo) { r.lo = lo; changed = true; }
    if (hi && (!r.hi || *hi < *r.hi)) { r.hi = *hi; changed = true; }
    return !r.empty();
}

Range get(const std::vector<Range>& vars, const Ref& d) {
    if (d.is_var) return vars[static_cast<size_t>(d.var)];
    return Range{d.c, d.c};
}

Range get_rank(const std::vector<Range>& vars, int idx) {
    if (idx < 0) return Range{0, 0};
    return vars[static_cast<size_t>(idx)];
}

std::optional<long long> add_hi(const std::optional<long long>& a, const std::optional<long long>& b) {
    if (!a || !b) return std::nullopt;
    return *a + *b;
}

// interval propagation to a fixed point; false = proven infeasible
bool propagate(const Model& m, std::vector<Range>& vars) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& r : vars)
            if (r.lo > m.divergence_bound) return false;
        for (const auto& s : m.sums) {
            Range a = get_rank(vars, s.ra), b = get_rank(vars, s.rb), d = get(vars, s.d);
            if (s.d.is_var) {
                if (!tighten(vars[static_cast<size_t>(s.d.var)], a.lo + b.lo, add_hi(a.hi, b.hi), changed))
                    return false;
                d = get(vars, s.d);
            } else {
                if (d.lo < a.lo + b.lo) return false;
                auto hi = add_hi(a.hi, b.hi);
                if (hi && *hi < d.lo) return false;
            }
            if (s.ra >= 0) {
                long long lo = b.hi ? std::max(0LL, d.lo - *b.hi) : 0;
                std::optional<long long> hi = d.hi ? std::optional<long long>(*d.hi - b.lo) : std::nullopt;
                if (!tighten(vars[static_cast<size_t>(s.ra)], lo, hi, changed)) return false;
                a = get_rank(vars, s.ra);
            }
            if (s.rb >= 0) {
                long long lo = a.hi ? std::max(0LL, d.lo - *a.hi) : 0;
                std::optional<long long> hi = d.hi ? std::optional<long long>(*d.hi - a.lo) : std::nullopt;
                if (!tighten(vars[static_cast<size_t>(s.rb)], lo, hi, changed)) return false;
            }
        }
        for (const auto& e : m.eqs) {
            Range d = get(vars, e.d);
            if (!tighten(vars[static_cast<size_t>(e.rank)], d.lo, d.hi, changed)) return false;
            if (e.d.is_var) {
                Range r = vars[static_cast<size_t>(e.rank)];
                if (!tighten(vars[static_cast<size_t>(e.d.var)], r.lo, r.hi, changed)) return false;
            }
        }
    }
    return true;
}

// union-find over variables; vars sharing a constraint are solved together
struct Components {
    std::vector<int> parent;
    explicit Components(size_t n) : parent(n) {
        for (size_t i = 0; i < n; ++i) parent[i] = static_cast<int>(i);
    }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[static_cast<size_t>(a)] = b;
    }
};

struct ProbeBudget {
    long long nodes = 0;
    bool blown = false;
};

// first-solution search: true when some completion of the free ranks
// satisfies every constraint
bool find_feasible(const Model& m, const std::vector<Range>& vars,
                   const std::vector<int>& free_ranks, ProbeBudget& b) {
    if (++b.nodes > kNodeCap) {
        b.blown = true;
        return false;
    }
    int pick = -1;
    for (int rv : free_ranks)
        if (!vars[static_cast<size_t>(rv)].point()) { pick = rv; break; }
    if (pick < 0) return true; // propagation has pinned the component
    Range r = vars[static_cast<size_t>(pick)];
    long long top = r.hi ? *r.hi : r.lo + kClip;
    for (long long v = r.lo; v <= top; ++v) {
        auto copy = vars;
        copy[static_cast<size_t>(pick)] = Range{v, v};
        if (propagate(m, copy) && find_feasible(m, copy, free_ranks, b)) return true;
        if (b.blown) return false;
    }
    return false;
}

// feasibility of the component with one variable pinned to a value
bool probe(const Model& m, const std::vector<Range>& vars, const std::vector<int>& free_ranks,
           int var, long long value, ProbeBudget& b) {
    auto copy = vars;
    copy[static_cast<size_t>(var)] = Range{value, value};
    if (!propagate(m, copy)) return false;
    return find_feasible(m, copy, free_ranks, b);
}

} // namespace

int ChaseSystem::add_var(std::string name) {
    var_names_.push_back(std::move(name));
    return static_cast<int>(var_names_.size()) - 1;
}

ChaseSystem::TermRef ChaseSystem::known(std::string label, long long dim) const {
    if (dim < 0) throw std::invalid_argument("ChaseSystem: negative dimension");
    TermRef t;
    t.label = std::move(label);
    t.value = dim;
    return t;
}

ChaseSystem::TermRef ChaseSystem::var_ref(std::string label, int var) const {
    if (var < 0 || var >= var_count()) throw std::invalid_argument("ChaseSystem: bad variable id");
    TermRef t;
    t.label = std::move(label);
    t.is_var = true;
    t.var = var;
    return t;
}

ChaseSystem::TermRef ChaseSystem::unknown(std::string label) {
    TermRef t;
    t.label = label;
    t.is_var = true;
    t.var = add_var(std::move(label));
    return t;
}

void ChaseSystem::add_seq(std::vector<TermRef> terms, std::vector<MapNote> notes, bool right_exact) {
    if (terms.empty()) throw std::invalid_argument("ChaseSystem: empty sequence");
    if (!notes.empty() && notes.size() != terms.size() - 1)
        throw std::invalid_argument("ChaseSystem: map annotation count mismatch");
    if (notes.empty()) notes.assign(terms.size() - 1, MapNote::None);
    seqs_.push_back(StoredSeq{std::move(terms), std::move(notes), right_exact});
}

ChaseSystem::Result ChaseSystem::solve() const {
    Model m;
    m.vars.assign(var_names_.size(), Range{});

    std::vector<int> rank_vars;
    for (const auto& sq : seqs_) {
        size_t T = sq.terms.size();
        std::vector<int> ids(T + 1, -1); // ids[i] = rank of the map out of term i-1 into term i
        for (size_t i = 0; i + 1 < T; ++i) {
            ids[i + 1] = static_cast<int>(m.vars.size());
            m.vars.push_back(Range{});
            rank_vars.push_back(ids[i + 1]);
        }
        if (!sq.right_exact) {
            ids[T] = static_cast<int>(m.vars.size());
            m.vars.push_back(Range{});
            rank_vars.push_back(ids[T]);
        }

        auto ref_of = [](const TermRef& t) {
            Ref r;
            r.is_var = t.is_var;
            r.c = t.value;
            r.var = t.var;
            return r;
        };
        for (size_t i = 0; i < T; ++i)
            m.sums.push_back(SumC{ref_of(sq.terms[i]), ids[i], ids[i + 1]});
        for (size_t i = 0; i + 1 < T; ++i) {
            switch (sq.notes[i]) {
            case MapNote::None: break;
            case MapNote::Zero:
                m.vars[static_cast<size_t>(ids[i + 1])] = Range{0, 0};
                break;
            case MapNote::Injective:
                m.eqs.push_back(EqC{ids[i + 1], ref_of(sq.terms[i])});
                break;
            case MapNote::Surjective:
                m.eqs.push_back(EqC{ids[i + 1], ref_of(sq.terms[i + 1])});
                break;
            }
        }
    }

    long long const_mass = 0;
    for (const auto& s : m.sums)
        if (!s.d.is_var) const_mass += s.d.c;
    for (const auto& e : m.eqs)
        if (!e.d.is_var) const_mass += e.d.c;
    m.divergence_bound = (const_mass + kClip + 8) * (static_cast<long long>(m.vars.size()) + 4) + 64;

    Result out;
    auto vars = m.vars;
    if (!propagate(m, vars)) {
        out.status = SolveStatus::Inconsistent;
        return out;
    }

    // A dimension variable that occurs in exactly one constraint and has
    // no upper bound never restricts its ranks: it simply records their
    // sum. Such variables are left out of the search graph, which is
    // what decouples chains at fully unknown terms.
    std::vector<int> occurrences(m.vars.size(), 0);
    for (const auto& s : m.sums)
        if (s.d.is_var) ++occurrences[static_cast<size_t>(s.d.var)];
    for (const auto& e : m.eqs)
        if (e.d.is_var) ++occurrences[static_cast<size_t>(e.d.var)];
    std::vector<char> is_rank(m.vars.size(), 0);
    for (int rv : rank_vars) is_rank[static_cast<size_t>(rv)] = 1;
    auto eliminable = [&](int v) {
        return !is_rank[static_cast<size_t>(v)] && occurrences[static_cast<size_t>(v)] == 1;
    };

    // constraint-graph components; disjoint components are independent
    Components comps(m.vars.size());
    for (const auto& s : m.sums) {
        bool d_live = s.d.is_var && !eliminable(s.d.var);
        if (!s.d.is_var || d_live) {
            // a known or shared dimension couples its two ranks
            if (s.ra >= 0 && s.rb >= 0) comps.unite(s.ra, s.rb);
            if (d_live) {
                if (s.ra >= 0) comps.unite(s.d.var, s.ra);
                if (s.rb >= 0) comps.unite(s.d.var, s.rb);
            }
        }
    }
    for (const auto& e : m.eqs)
        if (e.d.is_var) comps.unite(e.rank, e.d.var);

    std::vector<char> searched(m.vars.size(), 0);
    for (size_t v = 0; v < m.vars.size(); ++v)
        if (!eliminable(static_cast<int>(v))) searched[v] = 1;

    std::vector<std::vector<int>> members_of(m.vars.size());
    for (size_t v = 0; v < m.vars.size(); ++v)
        if (searched[v])
            members_of[static_cast<size_t>(comps.find(static_cast<int>(v)))].push_back(
                static_cast<int>(v));

    // eliminable dims whose rank endpoints land in one component are
    // recorded there so their hulls stay tight
    std::vector<const SumC*> split_dims;
    for (const auto& s : m.sums) {
        if (!s.d.is_var || !eliminable(s.d.var)) continue;
        int ca = s.ra >= 0 ? comps.find(s.ra) : -1;
        int cb = s.rb >= 0 ? comps.find(s.rb) : -1;
        if (ca >= 0 && (cb < 0 || cb == ca)) {
            members_of[static_cast<size_t>(ca)].push_back(s.d.var);
        } else if (cb >= 0 && ca < 0) {
            members_of[static_cast<size_t>(cb)].push_back(s.d.var);
        } else if (ca < 0 && cb < 0) {
            members_of[static_cast<size_t>(s.d.var)].push_back(s.d.var); // pinned to 0+0
        } else {
            split_dims.push_back(&s); // endpoints in different components
        }
    }

    std::vector<DimRange> ranges(m.vars.size());
    bool infeasible = false;
    for (size_t root = 0; root < m.vars.size() && !infeasible; ++root) {
        const auto& members = members_of[root];
        if (members.empty()) continue;

        std::vector<int> free_ranks;
        for (int rv : rank_vars)
            if (comps.find(rv) == static_cast<int>(root) && !vars[static_cast<size_t>(rv)].point())
                free_ranks.push_back(rv);

        auto fallback = [&] {
            for (int v : members) {
                const Range& r = vars[static_cast<size_t>(v)];
                ranges[static_cast<size_t>(v)] = DimRange{r.lo, r.hi, !r.hi.has_value()};
            }
        };

        ProbeBudget base;
        bool base_ok = find_feasible(m, vars, free_ranks, base);
        if (base.blown) {
            fallback();
            continue;
        }
        if (!base_ok) {
            infeasible = true;
            break;
        }

        // tight hull per variable via feasibility probes at the extremes
        bool budget_blown = false;
        for (int v : members) {
            const Range& rv = vars[static_cast<size_t>(v)];
            if (rv.point()) {
                ranges[static_cast<size_t>(v)] = DimRange{rv.lo, rv.lo, false};
                continue;
            }
            long long scan_top = rv.hi ? *rv.hi : rv.lo + kClip;
            long long alo = rv.lo;
            bool found_lo = false;
            for (long long val = rv.lo; val <= scan_top; ++val) {
                ProbeBudget b;
                if (probe(m, vars, free_ranks, v, val, b)) {
                    alo = val;
                    found_lo = true;
                    break;
                }
                if (b.blown) { budget_blown = true; break; }
            }
            if (budget_blown || !found_lo) {
                ranges[static_cast<size_t>(v)] = DimRange{rv.lo, rv.hi, !rv.hi.has_value()};
                budget_blown = false;
                continue;
            }
            DimRange result;
            result.lo = alo;
            if (rv.hi) {
                for (long long val = *rv.hi; val >= alo; --val) {
                    ProbeBudget b;
                    if (probe(m, vars, free_ranks, v, val, b)) {
                        result.hi = val;
                        break;
                    }
                    if (b.blown) break;
                }
                if (!result.hi) result.hi = *rv.hi; // budget blown: propagated bound
            } else {
                ProbeBudget b;
                if (probe(m, vars, free_ranks, v, alo + kClip, b)) {
                    result.hi = std::nullopt;
                    result.unbounded = true;
                } else if (b.blown) {
                    result.hi = std::nullopt;
                    result.unbounded = true;
                } else {
                    for (long long val = alo + kClip - 1; val >= alo; --val) {
                        ProbeBudget b2;
                        if (probe(m, vars, free_ranks, v, val, b2)) {
                            result.hi = val;
                            break;
                        }
                        if (b2.blown) break;
                    }
                    if (!result.hi) result.hi = alo;
                }
            }
            ranges[static_cast<size_t>(v)] = result;
        }
    }
    if (infeasible) {
        out.status = SolveStatus::Inconsistent;
        return out;
    }

    // hulls of eliminable dims with independent endpoints: interval sums
    for (const SumC* s : split_dims) {
        const DimRange& a = ranges[static_cast<size_t>(s->ra)];
        const DimRange& b = ranges[static_cast<size_t>(s->rb)];
        DimRange d;
        d.lo = a.lo + b.lo;
        if (a.hi && b.hi) {
            d.hi = *a.hi + *b.hi;
        } else {
            d.hi = std::nullopt;
            d.unbounded = true;
        }
        d.unbounded = d.unbounded || a.unbounded || b.unbounded;
        ranges[static_cast<size_t>(s->d.var)] = d;
    }
    // variables outside every constraint keep their propagated hulls
    for (size_t v = 0; v < m.vars.size(); ++v)
        if (occurrences[v] == 0 && !is_rank[v])
            ranges[v] = DimRange{vars[v].lo, vars[v].hi, !vars[v].hi.has_value()};

    out.vars.assign(ranges.begin(), ranges.begin() + static_cast<long>(var_names_.size()));
    bool all_dims_point = true;
    for (const auto& sq : seqs_) {
        std::vector<DimRange> dims;
        for (const auto& t : sq.terms) {
            if (t.is_var) {
                dims.push_back(ranges[static_cast<size_t>(t.var)]);
            } else {
                dims.push_back(DimRange{t.value, t.value, false});
            }
            if (!dims.back().is_point()) all_dims_point = false;
        }
        out.seq_dims.push_back(std::move(dims));
    }
    for (const auto& v : out.vars)
        if (!v.is_point()) all_dims_point = false;

    out.status = all_dims_point ? SolveStatus::Unique : SolveStatus::Ambiguous;
    return out;
}

Solution solve(const ExactSeq& seq) {
    if (seq.terms.empty()) throw std::invalid_argument("solve: empty sequence");
    if (!seq.maps.empty() && seq.maps.size() != seq.terms.size() - 1)
        throw std::invalid_argument("solve: map annotation count mismatch");

    ChaseSystem sys;
    std::vector<ChaseSystem::TermRef> refs;
    for (const auto& t : seq.terms) {
        if (t.dim) {
            if (*t.dim < 0) throw std::invalid_argument("solve: negative dimension");
            refs.push_back(sys.known(t.label, *t.dim));
        } else {
            refs.push_back(sys.unknown(t.label));
        }
    }
    sys.add_seq(refs, seq.maps, seq.right_exact);
    auto res = sys.solve();

    Solution sol;
    sol.status = res.status;
    if (res.status == SolveStatus::Inconsistent) return sol;
    sol.dims = res.seq_dims[0];

    // ranks telescope from the closed left end once the dims are unique
    sol.ranks.assign(seq.terms.size() - 1, DimRange{});
    if (res.status == SolveStatus::Unique) {
        long long carry = 0;
        for (size_t i = 0; i + 1 < seq.terms.size(); ++i) {
            long long r = sol.dims[i].lo - carry;
            sol.ranks[i] = DimRange{r, r, false};
            carry = r;
        }
    } else {
        for (auto& r : sol.ranks) r = DimRange{0, std::nullopt, true};
    }
    return sol;
}

} // namespace quadmod
