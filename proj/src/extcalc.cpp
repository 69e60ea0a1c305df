#include "quadmod/extcalc.hpp"

#include <stdexcept>

namespace quadmod {

ExtProblem serre_reduce(const ExtProblem& p) {
    if (p.degree < 0 || p.degree > 2) throw std::invalid_argument("serre_reduce: degree out of range");
    ExtProblem out;
    out.degree = 2 - p.degree;
    out.source = p.target;
    out.target = twist(p.source, BiDegree{-2, -2});
    out.dual_applied = !p.dual_applied;
    return out;
}

std::string pair_key(const PairExpr& p) {
    if (p.gamma != 0 && p.gamma != 1) throw std::invalid_argument("pair_key: gamma must be 0 or 1");
    return "(pair " + std::to_string(p.gamma) + " " + to_sexpr(p.sheaf) + ")";
}

void HomFacts::add_sheaf(int degree, const SheafPtr& f, const SheafPtr& g, long long dim,
                         FactTag tag, std::string citation) {
    entries_.push_back(HomFact{degree, false, to_sexpr(f), to_sexpr(g), dim, tag, std::move(citation)});
}

void HomFacts::add_pair(int degree, const PairExpr& a, const PairExpr& b, long long dim,
                        FactTag tag, std::string citation) {
    entries_.push_back(HomFact{degree, true, pair_key(a), pair_key(b), dim, tag, std::move(citation)});
}

std::optional<HomFact> HomFacts::find_sheaf(int degree, const SheafPtr& f, const SheafPtr& g) const {
    std::string fs = to_sexpr(f), gs = to_sexpr(g);
    for (const auto& e : entries_)
        if (!e.is_pair && e.degree == degree && e.src == fs && e.dst == gs) return e;
    return std::nullopt;
}

std::optional<HomFact> HomFacts::find_pair(int degree, const PairExpr& a, const PairExpr& b) const {
    std::string as = pair_key(a), bs = pair_key(b);
    for (const auto& e : entries_)
        if (e.is_pair && e.degree == degree && e.src == as && e.dst == bs) return e;
    return std::nullopt;
}

const HomFacts& HomFacts::standard() {
    static const HomFacts table = [] {
        HomFacts t;
        auto oq = make_curve_sheaf({2, 3}, {0, 0});
        auto quintic_ext = make_resolution({{-2, -2}, {-1, -3}}, {{-1, -2}, {0, 0}});
        auto ol = make_line_sheaf(LineClass::Deg01, {0, 0});
        auto ol10 = make_line_sheaf(LineClass::Deg01, {1, 0});
        auto c24 = make_curve_sheaf({2, 4}, {0, 0});
        auto point = make_skyscraper(1);
        PairExpr q1{1, oq, {}}, l2{0, ol10, {}}, q3{1, quintic_ext, {}}, l4{0, ol, {}};

        t.add_pair(0, q1, l2, 0, FactTag::Stability,
                   "stable pairs of different reduced slopes admit no nonzero morphism");
        t.add_pair(0, q3, l4, 0, FactTag::Stability,
                   "stable pairs of different reduced slopes admit no nonzero morphism");
        t.add_sheaf(0, oq, oq, 1, FactTag::Stability,
                    "the structure sheaf of a quintic of class (2,3) is stable, hence simple");
        t.add_sheaf(0, quintic_ext, quintic_ext, 1, FactTag::Asserted,
                    "endomorphisms of the pointed-quintic extension sheaf reduce to scalars");
        t.add_pair(1, q1, q1, 11, FactTag::Asserted,
                   "tangent space of the 11-dimensional projective moduli of quintic pairs");
        t.add_pair(1, q3, q3, 12, FactTag::Asserted,
                   "tangent space of the 12-dimensional universal-quintic pair moduli");
        t.add_sheaf(0, c24, point, 1, FactTag::Asserted,
                    "Hom(O_C, C_p) is spanned by evaluation at the point p of C");
        return t;
    }();
    return table;
}

std::optional<long long> ExtDims::at(int degree) const {
    switch (degree) {
    case 0: return e0;
    case 1: return e1;
    case 2: return e2;
    default: throw std::invalid_argument("ExtDims::at: degree out of range");
    }
}

const DimRange& ExtDims::range(int degree) const {
    switch (degree) {
    case 0: return range0;
    case 1: return range1;
    case 2: return range2;
    default: throw std::invalid_argument("ExtDims::range: degree out of range");
    }
}

namespace {

struct ShortRes {
    std::vector<BiDegree> left, right;
};

// A sheaf usable as the resolved side of Hom(-, G): an explicit
// two-column resolution, or the tautological one of a curve or line.
std::optional<ShortRes> resolution_of(const SheafPtr& f) {
    return std::visit(
        [](const auto& n) -> std::optional<ShortRes> {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, SheafExpr::Resolution>) {
                return ShortRes{n.left, n.right};
            } else if constexpr (std::is_same_v<T, SheafExpr::CurveSheaf>) {
                return ShortRes{{n.t - BiDegree{n.cls.c, n.cls.d}}, {n.t}};
            } else if constexpr (std::is_same_v<T, SheafExpr::LineSheaf>) {
                CurveClass c = curve_class(n.cls);
                return ShortRes{{n.t - BiDegree{c.c, c.d}}, {n.t}};
            } else {
                return std::nullopt;
            }
        },
        f->node);
}

// H^i of (sum of G(-d) over d in ds); UNKNOWN as soon as one part is.
CohDims coh_of_neg_twists(const SheafPtr& g, const std::vector<BiDegree>& ds) {
    CohDims acc{0, 0, 0};
    for (const auto& d : ds) {
        CohDims h = h_dims(twist(g, BiDegree{-d.a, -d.b}));
        auto add = [](std::optional<long long>& a, const std::optional<long long>& b) {
            if (a && b)
                *a += *b;
            else
                a = std::nullopt;
        };
        add(acc.h0, h.h0);
        add(acc.h1, h.h1);
        add(acc.h2, h.h2);
    }
    return acc;
}

struct ExtRefs {
    ChaseSystem::TermRef e0, e1, e2;
};

ChaseSystem::TermRef coh_term(ChaseSystem& sys, const std::string& label,
                              const std::optional<long long>& v) {
    if (v) return sys.known(label, *v);
    return sys.unknown(label);
}

// Appends the long exact sequence obtained by applying Hom(-, g) to the
// resolution of f, with the Ext terms given by the shared refs.
bool add_direct_seq(ChaseSystem& sys, const SheafPtr& f, const SheafPtr& g, const ExtRefs& refs) {
    auto res = resolution_of(f);
    if (!res) return false;
    CohDims rt = coh_of_neg_twists(g, res->right);
    CohDims lt = coh_of_neg_twists(g, res->left);
    sys.add_seq({refs.e0,
                 coh_term(sys, "H0(G-right)", rt.h0), coh_term(sys, "H0(G-left)", lt.h0),
                 refs.e1,
                 coh_term(sys, "H1(G-right)", rt.h1), coh_term(sys, "H1(G-left)", lt.h1),
                 refs.e2,
                 coh_term(sys, "H2(G-right)", rt.h2), coh_term(sys, "H2(G-left)", lt.h2)});
    return true;
}

// Same sequence on the Serre-dual problem Ext^{2-i}(G, F(-2,-2)); the
// shared refs enter in reverse order.
bool add_serre_seq(ChaseSystem& sys, const SheafPtr& f, const SheafPtr& g, const ExtRefs& refs) {
    auto res = resolution_of(g);
    if (!res) return false;
    SheafPtr fw = twist(f, BiDegree{-2, -2});
    CohDims rt = coh_of_neg_twists(fw, res->right);
    CohDims lt = coh_of_neg_twists(fw, res->left);
    sys.add_seq({refs.e2,
                 coh_term(sys, "H0(Fw-right)", rt.h0), coh_term(sys, "H0(Fw-left)", lt.h0),
                 refs.e1,
                 coh_term(sys, "H1(Fw-right)", rt.h1), coh_term(sys, "H1(Fw-left)", lt.h1),
                 refs.e0,
                 coh_term(sys, "H2(Fw-right)", rt.h2), coh_term(sys, "H2(Fw-left)", lt.h2)});
    return true;
}

DimRange range_of(const ChaseSystem::Result& res, const ChaseSystem::TermRef& ref) {
    if (ref.is_var) return res.vars.at(static_cast<size_t>(ref.var));
    return DimRange{ref.value, ref.value, false};
}

ExtDims extract(const ChaseSystem::Result& res, const ExtRefs& refs) {
    ExtDims out;
    out.status = res.status;
    out.range0 = range_of(res, refs.e0);
    out.range1 = range_of(res, refs.e1);
    out.range2 = range_of(res, refs.e2);
    if (res.status != SolveStatus::Inconsistent) {
        if (out.range0.is_point()) out.e0 = out.range0.lo;
        if (out.range1.is_point()) out.e1 = out.range1.lo;
        if (out.range2.is_point()) out.e2 = out.range2.lo;
    }
    return out;
}

ExtRefs make_refs(ChaseSystem& sys, const HomFacts& facts, const SheafPtr& f, const SheafPtr& g) {
    auto ref_for = [&](int degree, const char* label) {
        if (auto fact = facts.find_sheaf(degree, f, g)) return sys.known(label, fact->dim);
        return sys.unknown(label);
    };
    return ExtRefs{ref_for(0, "Hom(F,G)"), ref_for(1, "Ext1(F,G)"), ref_for(2, "Ext2(F,G)")};
}

} // namespace

ExtDims ext_dims_sheaf(const SheafPtr& f, const SheafPtr& g, const HomFacts& facts, ExtRoute route) {
    if (!f || !g) throw std::invalid_argument("ext_dims_sheaf: null sheaf");

    // Ext^i(O(a,b), G) is plain cohomology of G(-a,-b).
    if (const auto* lb = std::get_if<SheafExpr::LineBundle>(&f->node)) {
        CohDims h = h_dims(twist(g, BiDegree{-lb->t.a, -lb->t.b}));
        ExtDims out;
        out.e0 = h.h0;
        out.e1 = h.h1;
        out.e2 = h.h2;
        auto rng = [](const std::optional<long long>& v) {
            return v ? DimRange{*v, *v, false} : DimRange{0, std::nullopt, true};
        };
        out.range0 = rng(h.h0);
        out.range1 = rng(h.h1);
        out.range2 = rng(h.h2);
        out.status = h.all_known() ? SolveStatus::Unique : SolveStatus::Ambiguous;
        return out;
    }

    ChaseSystem sys;
    ExtRefs refs = make_refs(sys, facts, f, g);
    bool any = false;
    if (route != ExtRoute::SerreOnly) any = add_direct_seq(sys, f, g, refs) || any;
    if (route != ExtRoute::DirectOnly) any = add_serre_seq(sys, f, g, refs) || any;
    if (!any) {
        ExtDims out;
        out.status = SolveStatus::Ambiguous;
        out.range0 = out.range1 = out.range2 = DimRange{0, std::nullopt, true};
        // facts may still pin individual degrees
        if (!refs.e0.is_var) { out.e0 = refs.e0.value; out.range0 = DimRange{refs.e0.value, refs.e0.value, false}; }
        if (!refs.e1.is_var) { out.e1 = refs.e1.value; out.range1 = DimRange{refs.e1.value, refs.e1.value, false}; }
        if (!refs.e2.is_var) { out.e2 = refs.e2.value; out.range2 = DimRange{refs.e2.value, refs.e2.value, false}; }
        return out;
    }
    return extract(sys.solve(), refs);
}

ExtDims ext_dims_pair(const PairExpr& a, const PairExpr& b, const HomFacts& facts) {
    if (!a.sheaf || !b.sheaf) throw std::invalid_argument("ext_dims_pair: null sheaf");
    if ((a.gamma != 0 && a.gamma != 1) || (b.gamma != 0 && b.gamma != 1))
        throw std::invalid_argument("ext_dims_pair: gamma must be 0 or 1");

    CohDims hb = b.known_h ? *b.known_h : h_dims(b.sheaf);
    if (hb.h0 && b.gamma > *hb.h0)
        throw std::invalid_argument("ext_dims_pair: gamma exceeds h0 of the sheaf");
    if (a.gamma == 1) {
        CohDims ha = a.known_h ? *a.known_h : h_dims(a.sheaf);
        if (ha.h0 && a.gamma > *ha.h0)
            throw std::invalid_argument("ext_dims_pair: gamma exceeds h0 of the sheaf");
    }

    ChaseSystem sys;
    ExtRefs sheaf_refs = make_refs(sys, facts, a.sheaf, b.sheaf);

    auto pair_ref = [&](int degree, const char* label) {
        if (auto fact = facts.find_pair(degree, a, b)) return sys.known(label, fact->dim);
        return sys.unknown(label);
    };
    ExtRefs pair_refs{pair_ref(0, "Hom(L,L')"), pair_ref(1, "Ext1(L,L')"), pair_ref(2, "Ext2(L,L')")};

    // Hom(Gamma, V) has dimension gamma * dim V.
    auto gamma_term = [&](const char* label, const std::optional<long long>& dim_v,
                          long long minus = 0) {
        if (a.gamma == 0) return sys.known(label, 0);
        if (dim_v) return sys.known(label, a.gamma * (*dim_v - minus));
        return sys.unknown(label);
    };

    std::vector<ChaseSystem::TermRef> he = {
        pair_refs.e0,
        sheaf_refs.e0,
        gamma_term("Hom(G,H0/G')", hb.h0, b.gamma),
        pair_refs.e1,
        sheaf_refs.e1,
        gamma_term("Hom(G,H1)", hb.h1),
        pair_refs.e2,
        sheaf_refs.e2,
        gamma_term("Hom(G,H2)", hb.h2),
    };
    sys.add_seq(std::move(he), {}, /*right_exact=*/false);

    add_direct_seq(sys, a.sheaf, b.sheaf, sheaf_refs);
    add_serre_seq(sys, a.sheaf, b.sheaf, sheaf_refs);

    return extract(sys.solve(), pair_refs);
}

} // namespace quadmod
