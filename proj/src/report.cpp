#include "quadmod/report.hpp"

#include <nlohmann/json.hpp>

#include <set>
#include <sstream>

namespace quadmod {

namespace {

const char* status_name(CheckStatus s) {
    switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::NotForced: return "NOT_FORCED";
    }
    return "?";
}

CheckResult make_check(std::string id, std::string description, bool ok, std::string computed,
                       std::string expected, std::string citation) {
    CheckResult c;
    c.id = std::move(id);
    c.description = std::move(description);
    c.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
    c.computed = std::move(computed);
    c.expected = std::move(expected);
    c.citation = std::move(citation);
    return c;
}

std::string opt_str(const std::optional<long long>& v) {
    return v ? std::to_string(*v) : std::string("UNKNOWN");
}

struct NamedPair {
    std::string name;
    PairExpr pair;
};

// The five pairs appearing across the walls: quintic pair, three ruling
// sheaves, and the pointed-quintic extension pair.
std::vector<NamedPair> wall_pairs() {
    auto oq = make_curve_sheaf({2, 3}, {0, 0});
    auto quintic_ext = make_resolution({{-2, -2}, {-1, -3}}, {{-1, -2}, {0, 0}});
    return {
        {"L1", PairExpr{1, oq, {}}},
        {"L2", PairExpr{0, make_line_sheaf(LineClass::Deg01, {1, 0}), {}}},
        {"L3", PairExpr{1, quintic_ext, {}}},
        {"L4", PairExpr{0, make_line_sheaf(LineClass::Deg01, {0, 0}), {}}},
        {"L5", PairExpr{0, make_line_sheaf(LineClass::Deg01, {-1, 0}), {}}},
    };
}

std::string alpha_list(const std::vector<Wall>& walls) {
    std::string out = "{";
    for (size_t i = 0; i < walls.size(); ++i) {
        if (i) out += ", ";
        out += to_string(walls[i].alpha);
    }
    return out + "}";
}

} // namespace

const std::vector<Stratum>& stratum_registry() {
    static const std::vector<Stratum> registry = [] {
        std::vector<Stratum> r;

        Stratum m0;
        m0.name = "M_0";
        m0.defining = make_resolution({{-1, -3}, {0, -3}, {-1, -2}},
                                      {{0, -2}, {0, -2}, {0, 0}},
                                      {Hypothesis::H1LeftRightInjective});
        m0.description = desc_bundle(desc_proj(11), desc_hilb(3));
        m0.expected_dim = 17;
        m0.expected_codim = 0;
        m0.expected_h0 = 1;
        m0.citation = "open stratum: P^11-bundle over the Hilbert scheme of three points";
        r.push_back(m0);

        Stratum m2;
        m2.name = "M_2";
        m2.defining = make_resolution({{-2, -2}, {-1, -3}}, {{-1, -2}, {0, 1}});
        m2.description = desc_univ_curve({2, 4});
        m2.expected_dim = 15;
        m2.expected_codim = 2;
        m2.expected_h0 = 3;
        m2.brill_noether_discrepancy = true;
        m2.citation = "codimension-2 stratum: the universal curve of class (2,4)";
        r.push_back(m2);

        Stratum m2p;
        m2p.name = "M_2'";
        m2p.defining = make_resolution({{-2, -1}, {-1, -4}}, {{-1, -1}, {0, 0}});
        m2p.expected_dim = 15;
        m2p.expected_codim = 2;
        m2p.expected_h0 = 1;
        m2p.citation = "codimension-2 stratum given by resolutions with a (1,0) x (0,3) point scheme";
        r.push_back(m2p);

        Stratum m4;
        m4.name = "M_4";
        m4.defining = make_extension(make_curve_sheaf({2, 3}, {0, 1}),
                                     make_line_sheaf(LineClass::Deg01, {-1, 0}),
                                     {Hypothesis::NonSplit});
        m4.description = desc_bundle(desc_proj(1), desc_prod({desc_proj(11), desc_proj(1)}));
        m4.expected_dim = 13;
        m4.expected_codim = 4;
        m4.expected_h0 = 2;
        m4.citation = "codimension-4 stratum: P^1-bundle over P^11 x P^1";
        r.push_back(m4);

        Stratum m4p;
        m4p.name = "M_4'";
        m4p.defining = make_extension(make_curve_sheaf({2, 3}, {0, 0}),
                                      make_line_sheaf(LineClass::Deg01, {1, 0}),
                                      {Hypothesis::ConnectingH0H1Injective});
        m4p.description = desc_bundle(desc_proj(1), desc_prod({desc_proj(11), desc_proj(1)}));
        m4p.expected_dim = 13;
        m4p.expected_codim = 4;
        m4p.expected_h0 = 1;
        m4p.citation = "codimension-4 stratum: open in a P^1-bundle over P^11 x P^1, cut out by h0 = 1";
        r.push_back(m4p);

        Stratum m4pp;
        m4pp.name = "M_4''";
        m4pp.defining = make_extension(
            make_resolution({{-2, -2}, {-1, -3}}, {{-1, -2}, {0, 0}}),
            make_line_sheaf(LineClass::Deg01, {0, 0}), {Hypothesis::ConnectingH0H1Injective});
        m4pp.description =
            desc_bundle(desc_proj(1), desc_bundle(desc_proj(10), desc_prod({desc_proj(1), desc_proj(1)})));
        m4pp.expected_dim = 13;
        m4pp.expected_codim = 4;
        m4pp.expected_h0 = 1;
        m4pp.citation = "codimension-4 stratum: P^1-bundle over the universal quintic, cut out by h0 = 1";
        r.push_back(m4pp);

        return r;
    }();
    return registry;
}

std::vector<CheckResult> stratum_report() {
    std::vector<CheckResult> checks;
    const BiPoly target = LinPoly{4, 2, 1}.to_bipoly();

    for (const auto& st : stratum_registry()) {
        BiPoly hp = hilbert(st.defining);
        checks.push_back(make_check(
            "stratum." + st.name + ".hilbert",
            "Hilbert polynomial of the defining expression of " + st.name, hp == target, hp.str(),
            target.str(), st.citation));

        if (st.description) {
            long long d = st.description->dim();
            bool ok = d == st.expected_dim && st.expected_dim + st.expected_codim == 17;
            checks.push_back(make_check(
                "stratum." + st.name + ".dim",
                "bundle dimension arithmetic for " + st.name + " (" + st.description->str() + ")",
                ok, std::to_string(d) + " (codim " + std::to_string(17 - d) + ")",
                std::to_string(st.expected_dim) + " (codim " + std::to_string(st.expected_codim) + ")",
                st.citation));
        } else {
            bool ok = st.expected_dim + st.expected_codim == 17;
            checks.push_back(make_check(
                "stratum." + st.name + ".dim",
                "dimension of " + st.name + " is asserted without a bundle description; "
                "internal consistency dim + codim = 17 only",
                ok, std::to_string(st.expected_dim) + " + " + std::to_string(st.expected_codim),
                "17", st.citation + " (asserted)"));
        }

        CohDims h = h_dims(st.defining);
        if (st.brill_noether_discrepancy) {
            checks.push_back(make_check(
                "stratum." + st.name + ".h0.forced",
                "section count forced by the chase on the defining expression of " + st.name,
                h.h0.has_value(), opt_str(h.h0), opt_str(h.h0),
                "forced by the restriction chase on the defining resolution"));
            CheckResult bn;
            bn.id = "stratum." + st.name + ".h0.brill_noether";
            bn.description = "claimed Brill-Noether section count for " + st.name +
                             " vs the value forced by its defining resolution";
            bn.status = CheckStatus::NotForced;
            bn.computed = opt_str(h.h0);
            bn.expected = std::to_string(st.expected_h0);
            bn.citation =
                "Brill-Noether clause of the classification: the codimension-2 stratum is the "
                "locus with h0 = 3, while the chase on its defining resolution forces h0 = 2; "
                "the discrepancy is documented, not adjudicated";
            checks.push_back(bn);
        } else {
            bool ok = h.h0.has_value() && *h.h0 == st.expected_h0;
            CheckResult c = make_check("stratum." + st.name + ".h0",
                                       "section count of the defining expression of " + st.name, ok,
                                       opt_str(h.h0), std::to_string(st.expected_h0), st.citation);
            if (!h.h0.has_value()) c.status = CheckStatus::NotForced;
            checks.push_back(c);
        }
    }
    return checks;
}

std::vector<CheckResult> verify_all(const ModuliTable& table, const HomFacts& facts) {
    std::vector<CheckResult> checks;

    // Serre duality sweep
    {
        int total = 0, good = 0;
        for (int a = -6; a <= 6; ++a)
            for (int b = -6; b <= 6; ++b) {
                CohDims h = h_surface({a, b});
                CohDims hd = h_surface(serre_dual({a, b}));
                long long lhs[3] = {*h.h0, *h.h1, *h.h2};
                long long rhs[3] = {*hd.h2, *hd.h1, *hd.h0};
                for (int i = 0; i < 3; ++i) {
                    ++total;
                    if (lhs[i] == rhs[i]) ++good;
                }
            }
        checks.push_back(make_check(
            "coh.serre_duality", "h^i(a,b) = h^{2-i}(-2-a,-2-b) over the sweep [-6,6]^2",
            good == total, std::to_string(good) + "/" + std::to_string(total) + " identities",
            "all", "Serre duality with canonical class O(-2,-2)"));
    }

    // Kunneth alternating sums
    {
        int total = 0, good = 0;
        for (int a = -6; a <= 6; ++a)
            for (int b = -6; b <= 6; ++b) {
                CohDims h = h_surface({a, b});
                ++total;
                if (*h.h0 - *h.h1 + *h.h2 == chi_surface({a, b})) ++good;
            }
        checks.push_back(make_check(
            "coh.kunneth_chi", "alternating sum of Kunneth cohomology equals (a+1)(b+1)",
            good == total, std::to_string(good) + "/" + std::to_string(total) + " identities",
            "all", "Euler characteristic of line bundles on the quadric"));
    }

    // the seven kernel-classification rows
    {
        struct Row { int g1, g2, i, j; LinPoly coker; };
        const std::vector<Row> rows = {
            {0, 1, -2, -3, {3, 2, -1}}, {1, 0, -1, -4, {4, 1, 1}},  {0, 2, -2, -2, {2, 2, 0}},
            {1, 1, -1, -3, {3, 1, 1}},  {0, 3, -2, -1, {1, 2, 1}},  {1, 2, -1, -2, {2, 1, 1}},
            {1, 3, -1, -1, {1, 1, 1}},
        };
        for (const auto& row : rows) {
            Table1Row got = table1_kernel({row.g1, row.g2});
            bool ok = got.kernel == BiDegree{row.i, row.j} && got.coker_phi5 == row.coker.to_bipoly();
            checks.push_back(make_check(
                "table1.g(" + std::to_string(row.g1) + "," + std::to_string(row.g2) + ")",
                "kernel class and middle cokernel for deg(g) = (" + std::to_string(row.g1) + "," +
                    std::to_string(row.g2) + ")",
                ok, got.kernel.str() + "; " + got.coker_phi5.str(),
                BiDegree{row.i, row.j}.str() + "; " + row.coker.to_bipoly().str(),
                "kernel classification by the gcd degree of the maximal minors"));
        }
    }

    // wall lists
    WallSearch ws_plus = find_walls(PairPoly{{4, 2, 1}, 1}, 4, 2, table);
    WallSearch ws_minus = find_walls(PairPoly{{4, 2, -1}, 1}, 4, 2, table);
    {
        bool ok = ws_plus.walls.size() == 2 && ws_plus.walls[0].alpha == 5 &&
                  ws_plus.walls[1].alpha == 11;
        checks.push_back(make_check("walls.4m+2n+1", "wall list for pairs with P = 4m+2n+1", ok,
                                    alpha_list(ws_plus.walls), "{5, 11}",
                                    "the alpha-slope equation over the admissible sub-pair grid"));

        bool seen2 = false, rejected2 = false;
        for (const auto& c : ws_plus.candidates) {
            if (c.alpha == 2) {
                seen2 = true;
                rejected2 = c.outcome == WallCandidate::Outcome::RejectedEmpty;
            }
        }
        checks.push_back(make_check(
            "walls.4m+2n+1.alpha2",
            "the alpha = 2 candidate appears before emptiness filtering and is rejected by it",
            seen2 && rejected2,
            seen2 ? (rejected2 ? "candidate present, rejected empty" : "candidate present, kept")
                  : "candidate missing",
            "candidate present, rejected empty",
            "no semistable sheaf has Hilbert polynomial 2m+1, so alpha = 2 is not a wall"));

        bool okm = ws_minus.walls.size() == 1 && ws_minus.walls[0].alpha == 1;
        checks.push_back(make_check("walls.4m+2n-1", "wall list for pairs with P = 4m+2n-1", okm,
                                    alpha_list(ws_minus.walls), "{1}",
                                    "the alpha-slope equation over the admissible sub-pair grid"));
    }

    // pair Ext^1 dimensions across the walls
    auto pairs = wall_pairs();
    auto pair_of = [&](const std::string& name) -> const PairExpr& {
        for (const auto& np : pairs)
            if (np.name == name) return np.pair;
        throw std::logic_error("unknown pair name");
    };
    {
        struct E1 { const char* a; const char* b; long long expect; };
        const std::vector<E1> wanted = {
            {"L1", "L2", 4}, {"L2", "L1", 2}, {"L3", "L4", 3},
            {"L4", "L3", 2}, {"L1", "L5", 2}, {"L5", "L1", 2},
        };
        for (const auto& w : wanted) {
            ExtDims e = ext_dims_pair(pair_of(w.a), pair_of(w.b), facts);
            bool ok = e.e1.has_value() && *e.e1 == w.expect;
            checks.push_back(make_check(
                std::string("ext1.") + w.a + "." + w.b,
                std::string("Ext^1(") + w.a + ", " + w.b + ") between the wall factors", ok,
                opt_str(e.e1), std::to_string(w.expect),
                "nine-term pair sequence combined with the sheaf-level chases"));
        }
    }

    // Ext^2 vanishings
    {
        const std::vector<std::pair<const char*, const char*>> wanted = {
            {"L1", "L1"}, {"L1", "L2"}, {"L2", "L1"}, {"L2", "L2"},
            {"L3", "L3"}, {"L3", "L4"}, {"L4", "L3"}, {"L4", "L4"},
            {"L1", "L5"}, {"L5", "L1"}, {"L5", "L5"},
        };
        for (const auto& [a, b] : wanted) {
            ExtDims e = ext_dims_pair(pair_of(a), pair_of(b), facts);
            bool ok = e.e2.has_value() && *e.e2 == 0;
            checks.push_back(make_check(
                std::string("ext2.") + a + "." + b,
                std::string("Ext^2(") + a + ", " + b + ") vanishes", ok, opt_str(e.e2), "0",
                "smoothness of the pair moduli along the flipping loci"));
        }
    }

    // Goettsche values for 1, 2, 3 points
    {
        const UPoly h1({1, 2, 1});
        const UPoly h2({1, 3, 6, 3, 1});
        const UPoly h3({1, 3, 9, 14, 9, 3, 1});
        const UPoly got1 = gottsche_hilb({1, 0, 2, 0, 1}, 1);
        const UPoly got2 = gottsche_hilb({1, 0, 2, 0, 1}, 2);
        const UPoly got3 = gottsche_hilb({1, 0, 2, 0, 1}, 3);
        checks.push_back(make_check("gottsche.hilb1", "P(Hilb^1) equals P(P^1 x P^1)", got1 == h1,
                                    got1.str(), h1.str(), "Hilb^1 of a surface is the surface"));
        checks.push_back(make_check("gottsche.hilb2", "P(Hilb^2) equals the hand-expanded product",
                                    got2 == h2, got2.str(), h2.str(),
                                    "independent hand expansion of the product to order 2"));
        checks.push_back(make_check("gottsche.hilb3", "P(Hilb^3) equals the degree-6 value",
                                    got3 == h3, got3.str(), h3.str(),
                                    "generating function for Betti numbers of Hilbert schemes"));
    }

    // wall-crossing assemblies
    Assembly plus = assemble_m0plus(PairPoly{{4, 2, 1}, 1}, 4, 2, table, facts);
    Assembly minus = assemble_m0plus(PairPoly{{4, 2, -1}, 1}, 4, 2, table, facts);
    {
        UPoly d11_expected =
            (geometric_poly(1) - geometric_poly(3)) * geometric_poly(11) * geometric_poly(1);
        UPoly d5_expected = (geometric_poly(1) - geometric_poly(2)) * geometric_poly(10) *
                            geometric_poly(1) * geometric_poly(1) * geometric_poly(1);
        UPoly d11, d5;
        for (const auto& s : plus.steps) {
            if (s.alpha == 11) d11 = s.delta;
            if (s.alpha == 5) d5 = s.delta;
        }
        checks.push_back(make_check(
            "assembly.delta.wall11",
            "flip delta at alpha = 11 from Ext fibers equals (P(P^1)-P(P^3)) P(P^11) P(P^1)",
            d11 == d11_expected, d11.str(), d11_expected.str(),
            "fibers P^3 and P^1 over P^11 x P^1 from the pair Ext^1 dimensions 4 and 2"));
        checks.push_back(make_check(
            "assembly.delta.wall5",
            "flip delta at alpha = 5 from Ext fibers equals (P(P^1)-P(P^2)) P(P^10) P(P^1xP^1) P(P^1)",
            d5 == d5_expected, d5.str(), d5_expected.str(),
            "fibers P^2 and P^1 over the universal quintic times P^1 from Ext^1 dimensions 3 and 2"));

        bool ok_plus = plus.result && plus.result->eval_int(1) == 344 &&
                       plus.result->degree() == 17 && plus.result->coeff(17) == 1;
        checks.push_back(make_check(
            "assembly.m0plus.4m+2n+1",
            "P(M^0+(4m+2n+1)): degree 17, monic, value 344 at 1", ok_plus,
            plus.result ? plus.result->str() : "(incomplete)",
            "degree 17, leading coefficient 1, value 344 at x = 1",
            "P^11-bundle over Hilb^3 crossed at alpha = 11 and alpha = 5"));

        UPoly minus_expected = geometric_poly(13) * geometric_poly(1) * geometric_poly(1);
        bool zero_delta = minus.steps.size() == 1 && minus.steps[0].delta.is_zero();
        bool ok_minus = minus.result && *minus.result == minus_expected && zero_delta;
        checks.push_back(make_check(
            "assembly.m0plus.4m+2n-1",
            "P(M^0+(4m+2n-1)) equals P(P^13) P(P^1 x P^1) with a zero flip delta at alpha = 1",
            ok_minus, minus.result ? minus.result->str() : "(incomplete)", minus_expected.str(),
            "equal P^1 fibers on both sides of the single wall"));
    }

    // final comparison
    {
        PoincareComparison cmp = compare_moduli_poincare(table, facts);
        std::string computed = cmp.computed ? cmp.computed->str() : "(incomplete)";
        std::string detail = computed;
        if (!cmp.pass && cmp.first_mismatch)
            detail += " (first mismatch at exponent " + std::to_string(*cmp.first_mismatch) + ")";
        checks.push_back(make_check(
            "poincare.moduli.equality",
            "P(M^0+(4m+2n+1)) - x P(M^0+(4m+2n-1)) reproduces the stored target coefficientwise",
            cmp.pass, detail, cmp.expected.str(),
            "the pair-to-sheaf comparison of Poincare polynomials"));
        bool pal = cmp.computed && cmp.computed->palindromic();
        checks.push_back(make_check("poincare.moduli.palindromic",
                                    "the computed Poincare polynomial is palindromic", pal,
                                    pal ? "palindromic" : "not palindromic", "palindromic",
                                    "Poincare duality for the smooth projective moduli space"));
        bool at1 = cmp.computed && cmp.computed->eval_int(1) == 288;
        checks.push_back(make_check(
            "poincare.moduli.value_at_1", "total Betti number 344 - 56 = 288", at1,
            cmp.computed ? to_string(cmp.computed->eval_int(1)) : "(incomplete)", "288",
            "sum of the eighteen target coefficients"));
        bool deg = cmp.computed && cmp.computed->degree() == 17;
        checks.push_back(make_check(
            "poincare.moduli.degree", "degree 17 = 2rs+1 for (r,s) = (4,2)", deg,
            cmp.computed ? std::to_string(cmp.computed->degree()) : "(incomplete)", "17",
            "dimension 2rs+1 of the moduli space"));
    }

    // strata
    auto strata = stratum_report();
    checks.insert(checks.end(), strata.begin(), strata.end());
    return checks;
}

ReportSummary summarize(const std::vector<CheckResult>& checks) {
    ReportSummary s;
    for (const auto& c : checks) {
        switch (c.status) {
        case CheckStatus::Pass: ++s.pass; break;
        case CheckStatus::Fail: ++s.fail; break;
        case CheckStatus::NotForced: ++s.not_forced; break;
        }
    }
    return s;
}

std::string report_text(const std::vector<CheckResult>& checks) {
    std::ostringstream os;
    for (const auto& c : checks) {
        os << status_name(c.status) << "  " << c.id << ": " << c.description << "\n";
        if (c.status != CheckStatus::Pass || c.computed != c.expected)
            os << "        computed: " << c.computed << "\n        expected: " << c.expected << "\n";
        os << "        [" << c.citation << "]\n";
    }
    ReportSummary s = summarize(checks);
    os << "summary: " << s.pass << " pass, " << s.fail << " fail, " << s.not_forced
       << " not forced\n";
    return os.str();
}

std::string report_json(const std::vector<CheckResult>& checks) {
    nlohmann::json doc;
    doc["checks"] = nlohmann::json::array();
    for (const auto& c : checks) {
        doc["checks"].push_back({{"id", c.id},
                                 {"description", c.description},
                                 {"status", status_name(c.status)},
                                 {"computed", c.computed},
                                 {"expected", c.expected},
                                 {"citation", c.citation}});
    }
    ReportSummary s = summarize(checks);
    doc["summary"] = {{"pass", s.pass}, {"fail", s.fail}, {"not_forced", s.not_forced}};
    return doc.dump(2);
}

int report_exit_code(const std::vector<CheckResult>& checks) {
    return summarize(checks).fail == 0 ? 0 : 1;
}

} // namespace quadmod
