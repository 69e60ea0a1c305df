#include "quadmod/wallfind.hpp"

#include <algorithm>
#include <stdexcept>

namespace quadmod {

Rat pair_slope(const PairPoly& pp, const Rat& alpha) {
    if (pp.P.r + pp.P.s <= 0) throw std::invalid_argument("pair_slope: r+s must be positive");
    if (pp.gamma != 0 && pp.gamma != 1) throw std::invalid_argument("pair_slope: gamma must be 0 or 1");
    return (Rat(pp.P.t) + Rat(pp.gamma) * alpha) / Rat(pp.P.r + pp.P.s);
}

long long Descriptor::dim() const {
    return std::visit(
        [](const auto& n) -> long long {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Empty>) {
                throw std::invalid_argument("Descriptor::dim: empty space");
            } else if constexpr (std::is_same_v<T, Proj>) {
                return n.n;
            } else if constexpr (std::is_same_v<T, Prod>) {
                long long d = 0;
                for (const auto& p : n.parts) d += p.dim();
                return d;
            } else if constexpr (std::is_same_v<T, Bundle>) {
                return n.fiber_base.at(0).dim() + n.fiber_base.at(1).dim();
            } else if constexpr (std::is_same_v<T, Hilb>) {
                return 2LL * n.n;
            } else {
                // universal curve: P^(chi-2)-bundle over the surface
                return chi_surface(BiDegree{n.cls.c, n.cls.d});
            }
        },
        node);
}

std::string Descriptor::str() const {
    return std::visit(
        [](const auto& n) -> std::string {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Empty>) {
                return "EMPTY";
            } else if constexpr (std::is_same_v<T, Proj>) {
                return "P^" + std::to_string(n.n);
            } else if constexpr (std::is_same_v<T, Prod>) {
                std::string out;
                for (size_t i = 0; i < n.parts.size(); ++i) {
                    if (i) out += " x ";
                    out += n.parts[i].str();
                }
                return out;
            } else if constexpr (std::is_same_v<T, Bundle>) {
                return "(" + n.fiber_base.at(0).str() + "-bundle over " +
                       n.fiber_base.at(1).str() + ")";
            } else if constexpr (std::is_same_v<T, Hilb>) {
                return "Hilb^" + std::to_string(n.n) + "(P^1xP^1)";
            } else {
                return "universal (" + std::to_string(n.cls.c) + "," + std::to_string(n.cls.d) +
                       ")-curve";
            }
        },
        node);
}

Descriptor desc_empty() { return Descriptor{Descriptor::Empty{}}; }
Descriptor desc_proj(int n) { return Descriptor{Descriptor::Proj{n}}; }
Descriptor desc_prod(std::vector<Descriptor> parts) {
    return Descriptor{Descriptor::Prod{std::move(parts)}};
}
Descriptor desc_bundle(Descriptor fiber, Descriptor base) {
    Descriptor::Bundle b;
    b.fiber_base.push_back(std::move(fiber));
    b.fiber_base.push_back(std::move(base));
    return Descriptor{std::move(b)};
}
Descriptor desc_hilb(int n, std::array<long long, 5> betti) {
    return Descriptor{Descriptor::Hilb{betti, n}};
}
Descriptor desc_univ_curve(CurveClass cls) { return Descriptor{Descriptor::UnivCurve{cls}}; }

bool ModuliTable::remove(const LinPoly& p, std::optional<int> gamma) {
    auto it = std::remove_if(entries_.begin(), entries_.end(), [&](const ModuliFact& f) {
        return f.P == p && f.gamma == gamma;
    });
    bool removed = it != entries_.end();
    entries_.erase(it, entries_.end());
    return removed;
}

std::optional<ModuliFact> ModuliTable::lookup(const LinPoly& p, std::optional<int> gamma,
                                              std::optional<Chamber> chamber) const {
    for (const auto& f : entries_) {
        if (!(f.P == p) || f.gamma != gamma) continue;
        if (gamma && chamber && f.chamber != chamber) continue;
        return f;
    }
    return std::nullopt;
}

const ModuliTable& ModuliTable::standard() {
    static const ModuliTable table = [] {
        ModuliTable t;
        auto oq = make_curve_sheaf({2, 3}, {0, 0});
        auto quintic_ext = make_resolution({{-2, -2}, {-1, -3}}, {{-1, -2}, {0, 0}});

        t.add(ModuliFact{{2, 0, 1}, {}, {}, desc_empty(),
                         "no semistable sheaf on the quadric has Hilbert polynomial 2m+1", {}});
        t.add(ModuliFact{{1, 0, 0}, {}, {}, desc_proj(1),
                         "ruling sheaves O_L(-1,0) over the P^1 of (0,1)-lines",
                         PairExpr{0, make_line_sheaf(LineClass::Deg01, {-1, 0}), {}}});
        t.add(ModuliFact{{1, 0, 1}, {}, {}, desc_proj(1),
                         "structure sheaves of (0,1)-lines over the P^1 of such lines",
                         PairExpr{0, make_line_sheaf(LineClass::Deg01, {0, 0}), {}}});
        t.add(ModuliFact{{1, 0, 2}, {}, {}, desc_proj(1),
                         "ruling sheaves O_L(1,0) over the P^1 of (0,1)-lines",
                         PairExpr{0, make_line_sheaf(LineClass::Deg01, {1, 0}), {}}});
        t.add(ModuliFact{{3, 2, -1}, 1, Chamber::ZeroPlus, desc_proj(11),
                         "pairs (H0(O_Q), O_Q) over the P^11 of quintics of class (2,3)",
                         PairExpr{1, oq, {}}});
        t.add(ModuliFact{{3, 2, 0}, 1, Chamber::ZeroPlus,
                         desc_bundle(desc_proj(10), desc_prod({desc_proj(1), desc_proj(1)})),
                         "the universal quintic of class (2,3), a P^10-bundle over the surface",
                         PairExpr{1, quintic_ext, {}}});
        t.add(ModuliFact{{4, 2, 1}, 1, Chamber::Infinity,
                         desc_bundle(desc_proj(11), desc_hilb(3)),
                         "relative Hilbert scheme of three points on curves of class (2,4)", {}});
        t.add(ModuliFact{{4, 2, -1}, 1, Chamber::Infinity, desc_univ_curve({2, 4}),
                         "the universal curve of class (2,4), a P^13-bundle over the surface", {}});
        return t;
    }();
    return table;
}

WallSearch find_walls(const PairPoly& whole, int R, int S, const ModuliTable& table) {
    if (whole.gamma != 1) throw std::invalid_argument("find_walls: whole pair must have gamma = 1");
    if (whole.P.r + whole.P.s <= 0) throw std::invalid_argument("find_walls: degenerate polynomial");
    if (R < 0 || S < 0) throw std::invalid_argument("find_walls: negative bounds");

    WallSearch out;
    out.whole = whole;
    out.bound_r = R;
    out.bound_s = S;
    out.notes.push_back(
        "decompositions with (r,s) = (" + std::to_string(R) + "," + std::to_string(S) +
        ") on the section side are excluded from the scan");

    const long long tw = whole.P.t;
    const long long RS = R + S;
    for (int r = 0; r <= R; ++r) {
        for (int s = 0; s <= S; ++s) {
            if ((r == 0 && s == 0) || (r == R && s == S)) continue;
            long long denom = RS - (r + s);
            if (denom == 0) {
                out.notes.push_back("sub class (" + std::to_string(r) + "," + std::to_string(s) +
                                    ") has the slope of the whole; no finite wall");
                continue;
            }
            if (denom < 0) continue; // r+s beyond the whole cannot destabilize with gamma = 1
            // chi of a structure sheaf on an (s,r)-support bounds t below
            for (long long t = r + s - static_cast<long long>(r) * s;; ++t) {
                Rat alpha = Rat((r + s) * tw - RS * t) / Rat(denom);
                if (alpha <= 0) break;
                PairPoly sub{LinPoly{r, s, t}, 1};
                PairPoly quot{LinPoly{R - r, S - s, tw - t}, 0};
                // same wall from the complementary, section-free side
                Rat alpha_c = Rat(RS) * Rat(quot.P.t) / Rat(quot.P.r + quot.P.s) - Rat(tw);
                if (alpha_c != alpha)
                    throw std::logic_error("find_walls: complementary slope equation disagrees");
                WallCandidate cand{alpha, sub, quot, WallCandidate::Outcome::Accepted, ""};

                auto sub_fact = table.lookup(sub.P, 1, Chamber::ZeroPlus);
                auto quot_fact = table.lookup(quot.P, {}, {});
                if (sub_fact && sub_fact->desc.is_empty()) {
                    cand.outcome = WallCandidate::Outcome::RejectedEmpty;
                    cand.note = "sub factor empty: " + sub_fact->citation;
                } else if (quot_fact && quot_fact->desc.is_empty()) {
                    cand.outcome = WallCandidate::Outcome::RejectedEmpty;
                    cand.note = "quotient factor empty: " + quot_fact->citation;
                } else if (!sub_fact || !quot_fact) {
                    cand.outcome = WallCandidate::Outcome::AcceptedUnverified;
                    cand.note = std::string("UNVERIFIED: ") +
                                (!sub_fact ? "pair moduli " + sub.P.str() : "moduli " + quot.P.str()) +
                                " not in the table";
                }
                out.candidates.push_back(cand);
                if (cand.outcome != WallCandidate::Outcome::RejectedEmpty) {
                    Wall w;
                    w.alpha = alpha;
                    w.sub = sub;
                    w.quot = quot;
                    if (sub_fact) w.sub_base = sub_fact->desc;
                    if (quot_fact) w.quot_base = quot_fact->desc;
                    w.verified = cand.outcome == WallCandidate::Outcome::Accepted;
                    w.note = cand.note;
                    out.walls.push_back(std::move(w));
                }
            }
        }
    }

    auto by_alpha = [](const auto& a, const auto& b) { return a.alpha < b.alpha; };
    std::sort(out.candidates.begin(), out.candidates.end(), by_alpha);
    std::sort(out.walls.begin(), out.walls.end(), by_alpha);

    // merge exact duplicates
    out.walls.erase(std::unique(out.walls.begin(), out.walls.end(),
                                [](const Wall& a, const Wall& b) {
                                    return a.alpha == b.alpha && a.sub == b.sub && a.quot == b.quot;
                                }),
                    out.walls.end());
    return out;
}

std::vector<Rat> brute_force_wall_grid(const PairPoly& whole, int R, int S) {
    std::vector<Rat> alphas;
    const long long tw = whole.P.t;
    const long long RS = R + S;
    for (int r = 0; r <= R; ++r) {
        for (int s = 0; s <= S; ++s) {
            if ((r == 0 && s == 0) || (r == R && s == S)) continue;
            long long denom = RS - (r + s);
            if (denom <= 0) continue;
            long long rq = R - r, sq = S - s;
            long long lo = r + s - static_cast<long long>(r) * s;
            long long hi = tw - (rq + sq - rq * sq);
            for (long long t = lo; t <= hi; ++t) {
                Rat alpha = Rat((r + s) * tw - RS * t) / Rat(denom);
                if (alpha > 0) alphas.push_back(alpha);
            }
        }
    }
    std::sort(alphas.begin(), alphas.end());
    alphas.erase(std::unique(alphas.begin(), alphas.end()), alphas.end());
    return alphas;
}

Wall flip_data(const Wall& w, const ModuliTable& table, const HomFacts& facts) {
    Wall out = w;
    auto sub_fact = table.lookup(w.sub.P, 1, Chamber::ZeroPlus);
    auto quot_fact = table.lookup(w.quot.P, {}, {});
    if (sub_fact) out.sub_base = sub_fact->desc;
    if (quot_fact) out.quot_base = quot_fact->desc;
    if (!sub_fact || !sub_fact->representative || !quot_fact || !quot_fact->representative) {
        out.note = "flip_data: no representative pair available";
        return out;
    }
    const PairExpr& lsub = *sub_fact->representative;
    const PairExpr& lquot = *quot_fact->representative;

    ExtDims above = ext_dims_pair(lsub, lquot, facts);
    ExtDims below = ext_dims_pair(lquot, lsub, facts);
    if (above.e1 && *above.e1 >= 1) out.fiber_above = *above.e1 - 1;
    if (below.e1 && *below.e1 >= 1) out.fiber_below = *below.e1 - 1;
    if (!out.fiber_above || !out.fiber_below)
        out.note = "flip_data: Ext^1 across the wall not forced";
    return out;
}

} // namespace quadmod
