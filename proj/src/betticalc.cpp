#include "quadmod/betticalc.hpp"

#include <algorithm>
#include <stdexcept>

namespace quadmod {

SpacePtr space_proj(int n) {
    if (n < 0) throw std::invalid_argument("space_proj: negative dimension");
    return std::make_shared<SpaceExpr>(SpaceExpr{SpaceExpr::Proj{n}});
}
SpacePtr space_prod(std::vector<SpacePtr> parts) {
    if (parts.empty()) throw std::invalid_argument("space_prod: empty product");
    return std::make_shared<SpaceExpr>(SpaceExpr{SpaceExpr::Prod{std::move(parts)}});
}
SpacePtr space_bundle(SpacePtr fiber, SpacePtr base) {
    if (!fiber || !base) throw std::invalid_argument("space_bundle: null part");
    return std::make_shared<SpaceExpr>(SpaceExpr{SpaceExpr::Bundle{std::move(fiber), std::move(base)}});
}
SpacePtr space_hilb(int n, std::array<long long, 5> betti) {
    if (n < 0) throw std::invalid_argument("space_hilb: negative n");
    return std::make_shared<SpaceExpr>(SpaceExpr{SpaceExpr::Hilb{betti, n}});
}
SpacePtr space_blowup(SpacePtr total, SpacePtr center, int codim) {
    if (!total || !center) throw std::invalid_argument("space_blowup: null part");
    if (codim < 1) throw std::invalid_argument("space_blowup: codimension must be >= 1");
    return std::make_shared<SpaceExpr>(
        SpaceExpr{SpaceExpr::Blowup{std::move(total), std::move(center), codim}});
}
SpacePtr space_cross_wall(SpacePtr from, long long fiber_from, long long fiber_to, SpacePtr base) {
    if (!from || !base) throw std::invalid_argument("space_cross_wall: null part");
    if (fiber_from < 0 || fiber_to < 0)
        throw std::invalid_argument("space_cross_wall: negative fiber dimension");
    return std::make_shared<SpaceExpr>(
        SpaceExpr{SpaceExpr::CrossWall{std::move(from), fiber_from, fiber_to, std::move(base)}});
}
SpacePtr space_literal(UPoly p) {
    return std::make_shared<SpaceExpr>(SpaceExpr{SpaceExpr::Literal{std::move(p)}});
}

SpacePtr space_of(const Descriptor& d) {
    return std::visit(
        [](const auto& n) -> SpacePtr {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Descriptor::Empty>) {
                throw std::invalid_argument("space_of: empty moduli space");
            } else if constexpr (std::is_same_v<T, Descriptor::Proj>) {
                return space_proj(n.n);
            } else if constexpr (std::is_same_v<T, Descriptor::Prod>) {
                std::vector<SpacePtr> parts;
                for (const auto& p : n.parts) parts.push_back(space_of(p));
                return space_prod(std::move(parts));
            } else if constexpr (std::is_same_v<T, Descriptor::Bundle>) {
                return space_bundle(space_of(n.fiber_base.at(0)), space_of(n.fiber_base.at(1)));
            } else if constexpr (std::is_same_v<T, Descriptor::Hilb>) {
                return space_hilb(n.n, n.betti);
            } else {
                // universal curve of class (c,d): P^(chi-2)-bundle over the quadric
                long long chi = chi_surface(BiDegree{n.cls.c, n.cls.d});
                if (chi < 2) throw std::invalid_argument("space_of: degenerate universal curve");
                return space_bundle(space_proj(static_cast<int>(chi) - 2),
                                    space_prod({space_proj(1), space_proj(1)}));
            }
        },
        d.node);
}

UPoly gottsche_hilb(const std::array<long long, 5>& betti, int n) {
    if (betti[1] != 0 || betti[3] != 0)
        throw std::invalid_argument("gottsche_hilb: nonzero odd Betti numbers are not supported");
    if (betti[0] < 0 || betti[2] < 0 || betti[4] < 0)
        throw std::invalid_argument("gottsche_hilb: negative Betti number");
    if (n < 0) throw std::invalid_argument("gottsche_hilb: negative n");
    std::vector<SeriesFactor> factors;
    for (int k = 1; k <= n; ++k) {
        auto push = [&](int weight, long long count) {
            for (long long j = 0; j < count; ++j)
                factors.push_back(SeriesFactor{true, UPoly::monomial(weight), k});
        };
        push(k - 1, betti[0]);
        push(k, betti[2]);
        push(k + 1, betti[4]);
    }
    return trunc_product(factors, n).coeff(n);
}

UPoly poincare(const SpacePtr& x) {
    if (!x) throw std::invalid_argument("poincare: null space");
    return std::visit(
        [](const auto& n) -> UPoly {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, SpaceExpr::Proj>) {
                return geometric_poly(n.n);
            } else if constexpr (std::is_same_v<T, SpaceExpr::Prod>) {
                UPoly acc = UPoly::constant(1);
                for (const auto& p : n.parts) acc = acc * poincare(p);
                return acc;
            } else if constexpr (std::is_same_v<T, SpaceExpr::Bundle>) {
                return poincare(n.fiber) * poincare(n.base);
            } else if constexpr (std::is_same_v<T, SpaceExpr::Hilb>) {
                return gottsche_hilb(n.betti, n.n);
            } else if constexpr (std::is_same_v<T, SpaceExpr::Blowup>) {
                UPoly excess = geometric_poly(n.codim - 1) - UPoly::constant(1);
                return poincare(n.total) + excess * poincare(n.center);
            } else if constexpr (std::is_same_v<T, SpaceExpr::CrossWall>) {
                UPoly delta = geometric_poly(static_cast<int>(n.fiber_to)) -
                              geometric_poly(static_cast<int>(n.fiber_from));
                return poincare(n.from) + delta * poincare(n.base);
            } else {
                return n.p;
            }
        },
        x->node);
}

Assembly assemble_m0plus(const PairPoly& whole, int R, int S, const ModuliTable& table,
                         const HomFacts& facts) {
    Assembly out;
    auto inf = table.lookup(whole.P, whole.gamma, Chamber::Infinity);
    if (!inf) {
        out.issues.push_back("no alpha = infinity description in the moduli table for " +
                             whole.P.str());
        return out;
    }
    SpacePtr space = space_of(inf->desc);
    out.start = poincare(space);
    out.search = find_walls(whole, R, S, table);

    // cross every wall from alpha = infinity down to 0+
    std::vector<Wall> walls = out.search.walls;
    std::sort(walls.begin(), walls.end(), [](const Wall& a, const Wall& b) { return a.alpha > b.alpha; });
    for (const auto& raw : walls) {
        Wall w = flip_data(raw, table, facts);
        if (!w.fiber_above || !w.fiber_below || !w.sub_base || !w.quot_base) {
            out.issues.push_back("wall at alpha = " + to_string(w.alpha) +
                                 ": flip data incomplete (" + w.note + ")");
            continue;
        }
        SpacePtr base = space_prod({space_of(*w.sub_base), space_of(*w.quot_base)});
        UPoly base_p = poincare(base);
        UPoly delta = (geometric_poly(static_cast<int>(*w.fiber_below)) -
                       geometric_poly(static_cast<int>(*w.fiber_above))) *
                      base_p;
        space = space_cross_wall(space, *w.fiber_above, *w.fiber_below, base);
        out.steps.push_back(WallStep{w.alpha, *w.fiber_above, *w.fiber_below, base_p, delta});
    }
    if (out.issues.empty()) out.result = poincare(space);
    return out;
}

const UPoly& expected_moduli_poincare() {
    // coefficients of the degree-17 target, low to high
    static const UPoly target({1, 3, 8, 16, 21, 23, 24, 24, 24, 24, 24, 24, 23, 21, 16, 8, 3, 1});
    return target;
}

PoincareComparison compare_moduli_poincare(const ModuliTable& table, const HomFacts& facts) {
    PoincareComparison out;
    out.expected = expected_moduli_poincare();

    Assembly plus = assemble_m0plus(PairPoly{{4, 2, 1}, 1}, 4, 2, table, facts);
    Assembly minus = assemble_m0plus(PairPoly{{4, 2, -1}, 1}, 4, 2, table, facts);
    out.issues = plus.issues;
    out.issues.insert(out.issues.end(), minus.issues.begin(), minus.issues.end());
    if (!plus.result || !minus.result) return out;

    out.m0plus_plus = *plus.result;
    out.m0plus_minus = *minus.result;
    out.computed = *plus.result - UPoly::monomial(1) * *minus.result;

    out.pass = *out.computed == out.expected;
    if (!out.pass) {
        int top = std::max(out.computed->degree(), out.expected.degree());
        for (int e = top; e >= 0; --e) {
            if (out.computed->coeff(e) != out.expected.coeff(e)) {
                out.first_mismatch = e;
                break;
            }
        }
    }
    return out;
}

UPoly cross_via_blowup(const UPoly& p_from_side, long long fiber_from, long long fiber_to,
                       const UPoly& p_base) {
    // flipping locus on the from-side: P^from-bundle, codim fiber_to + 1
    int codim = static_cast<int>(fiber_to) + 1;
    UPoly p_locus_from = geometric_poly(static_cast<int>(fiber_from)) * p_base;
    UPoly p_locus_to = geometric_poly(static_cast<int>(fiber_to)) * p_base;
    UPoly blown = p_from_side + (geometric_poly(codim - 1) - UPoly::constant(1)) * p_locus_from;
    // contracting the exceptional P^from x P^to-bundle onto its P^to ruling
    return blown - (geometric_poly(static_cast<int>(fiber_from)) - UPoly::constant(1)) * p_locus_to;
}

} // namespace quadmod
