#include "quadmod/cli.hpp"

#include "quadmod/report.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <sstream>

namespace quadmod::cli {

namespace {

using nlohmann::json;

json coh_json(const CohDims& h) {
    auto one = [](const std::optional<long long>& v) -> json {
        if (v) return *v;
        return "UNKNOWN";
    };
    return json{{"h0", one(h.h0)}, {"h1", one(h.h1)}, {"h2", one(h.h2)}};
}

std::string coh_text(const CohDims& h) {
    auto one = [](const std::optional<long long>& v) {
        return v ? std::to_string(*v) : std::string("UNKNOWN");
    };
    return "h0 = " + one(h.h0) + ", h1 = " + one(h.h1) + ", h2 = " + one(h.h2);
}

json bipoly_json(const BiPoly& p) {
    json terms = json::array();
    for (const auto& [k, c] : p.terms())
        terms.push_back({{"m", k.first},
                         {"n", k.second},
                         {"num", numerator(c).str()},
                         {"den", denominator(c).str()}});
    return json{{"text", p.str()}, {"terms", terms}};
}

json upoly_json(const UPoly& p) {
    // array of integer coefficients, index = exponent
    json arr = json::array();
    for (const auto& c : p.coeffs()) arr.push_back(c.convert_to<long long>());
    return arr;
}

json rat_json(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return to_string(r);
}

// --- space expression parser ------------------------------------------------

struct SpaceLexer {
    std::vector<std::string> toks;
    size_t pos = 0;

    explicit SpaceLexer(const std::string& text) {
        std::string cur;
        auto flush = [&] {
            if (!cur.empty()) toks.push_back(cur);
            cur.clear();
        };
        for (char ch : text) {
            if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') {
                flush();
            } else if (ch == '(' || ch == ')') {
                flush();
                toks.push_back(std::string(1, ch));
            } else {
                cur += ch;
            }
        }
        flush();
    }
    bool done() const { return pos >= toks.size(); }
    const std::string& peek() const {
        if (done()) throw std::invalid_argument("space parse: unexpected end of input");
        return toks[pos];
    }
    std::string next() {
        auto t = peek();
        ++pos;
        return t;
    }
    void expect(const std::string& t) {
        if (next() != t) throw std::invalid_argument("space parse: expected '" + t + "'");
    }
    long long next_int() {
        auto t = next();
        try {
            size_t used = 0;
            long long v = std::stoll(t, &used);
            if (used != t.size()) throw std::invalid_argument("");
            return v;
        } catch (...) {
            throw std::invalid_argument("space parse: expected integer, got '" + t + "'");
        }
    }
};

SpacePtr parse_space_expr(SpaceLexer& lx) {
    lx.expect("(");
    std::string head = lx.next();
    if (head == "proj") {
        long long n = lx.next_int();
        lx.expect(")");
        return space_proj(static_cast<int>(n));
    }
    if (head == "hilb") {
        long long n = lx.next_int();
        std::array<long long, 5> betti{1, 0, 2, 0, 1};
        if (lx.peek() != ")")
            for (auto& b : betti) b = lx.next_int();
        lx.expect(")");
        return space_hilb(static_cast<int>(n), betti);
    }
    if (head == "prod") {
        std::vector<SpacePtr> parts;
        while (lx.peek() != ")") parts.push_back(parse_space_expr(lx));
        lx.next();
        return space_prod(std::move(parts));
    }
    if (head == "bundle") {
        SpacePtr fiber = parse_space_expr(lx);
        SpacePtr base = parse_space_expr(lx);
        lx.expect(")");
        return space_bundle(std::move(fiber), std::move(base));
    }
    if (head == "blowup") {
        SpacePtr total = parse_space_expr(lx);
        SpacePtr center = parse_space_expr(lx);
        long long codim = lx.next_int();
        lx.expect(")");
        return space_blowup(std::move(total), std::move(center), static_cast<int>(codim));
    }
    if (head == "cross") {
        SpacePtr from = parse_space_expr(lx);
        long long f = lx.next_int();
        long long t = lx.next_int();
        SpacePtr base = parse_space_expr(lx);
        lx.expect(")");
        return space_cross_wall(std::move(from), f, t, std::move(base));
    }
    if (head == "lit") {
        std::vector<Int> coeffs;
        while (lx.peek() != ")") coeffs.push_back(Int(lx.next_int()));
        lx.next();
        return space_literal(UPoly(std::move(coeffs)));
    }
    throw std::invalid_argument("space parse: unknown form '" + head + "'");
}

SpacePtr parse_space(const std::string& text) {
    std::string t = text;
    // bare shorthand like "hilb 3" or "proj 11"
    if (t.find('(') == std::string::npos) t = "(" + t + ")";
    SpaceLexer lx(t);
    SpacePtr s = parse_space_expr(lx);
    if (!lx.done()) throw std::invalid_argument("space parse: trailing tokens");
    return s;
}

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += " ";
        out += parts[i];
    }
    return out;
}

} // namespace

std::string space_grammar_help() {
    return "space expressions: (proj n) | (prod S...) | (bundle F B) | (hilb n [b0 b1 b2 b3 b4])"
           " | (blowup X Z codim) | (cross X from to B) | (lit c0 c1 ...);"
           " bare 'proj n' / 'hilb n' also accepted";
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const ModuliTable& table, const HomFacts& facts) {
    CLI::App app{"exact cohomology, Ext, wall and Poincare calculators for 1-dimensional "
                 "sheaf moduli on the quadric surface"};
    app.require_subcommand(1);
    // --json / --format are accepted before or after the subcommand
    app.fallthrough();

    bool json_flag = false;
    std::string format = "text";
    app.add_flag("--json", json_flag, "shorthand for --format json");
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    auto* coh = app.add_subcommand("cohomology", "h^0, h^1, h^2 of a sheaf expression");
    std::string coh_expr;
    coh->add_option("expr", coh_expr, "sheaf expression, e.g. O(2,3) or (curve 2 3 0 0)")
        ->required();

    auto* hil = app.add_subcommand("hilbert", "Hilbert polynomial of a sheaf expression");
    std::string hil_expr;
    hil->add_option("expr", hil_expr, "sheaf expression")->required();

    auto* ext = app.add_subcommand("ext", "dim Ext^i(F, G)");
    int ext_i = 0;
    std::string ext_f, ext_g;
    ext->add_option("i", ext_i, "degree (0, 1 or 2)")->required()->check(CLI::Range(0, 2));
    ext->add_option("F", ext_f, "source sheaf expression")->required();
    ext->add_option("G", ext_g, "target sheaf expression")->required();

    auto* walls = app.add_subcommand("walls", "walls for alpha-semistable pairs with P = rm+sn+t");
    std::vector<long long> wall_args;
    walls->add_option("rst", wall_args, "r s t [R S]")->expected(3, 5);

    auto* poin = app.add_subcommand("poincare", "Poincare polynomial of a space expression");
    std::vector<std::string> poin_args;
    poin->add_option("expr", poin_args, space_grammar_help())->required()->expected(-1);

    auto* ver = app.add_subcommand("verify", "run the full verification report");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        std::ostringstream os;
        int code = app.exit(e, os, os);
        (code == 0 ? out : err) << os.str();
        return code == 0 ? 0 : 2;
    }
    const bool as_json = json_flag || format == "json";

    try {
        if (coh->parsed()) {
            CohDims h = h_dims(parse_sheaf(coh_expr));
            if (as_json)
                out << coh_json(h).dump() << "\n";
            else
                out << coh_text(h) << "\n";
            return 0;
        }
        if (hil->parsed()) {
            BiPoly p = hilbert(parse_sheaf(hil_expr));
            if (as_json)
                out << bipoly_json(p).dump() << "\n";
            else
                out << p.str() << "\n";
            return 0;
        }
        if (ext->parsed()) {
            ExtDims dims = ext_dims_sheaf(parse_sheaf(ext_f), parse_sheaf(ext_g));
            auto v = dims.at(ext_i);
            if (as_json) {
                json doc{{"degree", ext_i}};
                if (v)
                    doc["dim"] = *v;
                else
                    doc["dim"] = "UNKNOWN";
                out << doc.dump() << "\n";
            } else {
                out << "Ext^" << ext_i << " = " << (v ? std::to_string(*v) : "UNKNOWN") << "\n";
            }
            return 0;
        }
        if (walls->parsed()) {
            if (wall_args.size() != 3 && wall_args.size() != 5)
                throw std::invalid_argument("walls: expected r s t or r s t R S");
            LinPoly whole{wall_args[0], wall_args[1], wall_args[2]};
            int R = static_cast<int>(wall_args.size() == 5 ? wall_args[3] : wall_args[0]);
            int S = static_cast<int>(wall_args.size() == 5 ? wall_args[4] : wall_args[1]);
            WallSearch ws = find_walls(PairPoly{whole, 1}, R, S, table);
            if (as_json) {
                json jwalls = json::array();
                for (const auto& w : ws.walls)
                    jwalls.push_back({{"alpha", rat_json(w.alpha)},
                                      {"sub", w.sub.P.str()},
                                      {"quot", w.quot.P.str()},
                                      {"verified", w.verified}});
                json jrej = json::array();
                for (const auto& c : ws.candidates)
                    if (c.outcome == WallCandidate::Outcome::RejectedEmpty)
                        jrej.push_back({{"alpha", rat_json(c.alpha)},
                                        {"sub", c.sub.P.str()},
                                        {"quot", c.quot.P.str()},
                                        {"reason", c.note}});
                out << json{{"whole", whole.str()}, {"walls", jwalls}, {"rejected", jrej}}.dump()
                    << "\n";
            } else {
                std::string line;
                for (const auto& w : ws.walls) {
                    if (!line.empty()) line += ", ";
                    line += "alpha = " + to_string(w.alpha) + " [sub " + w.sub.P.str() + " | quot " +
                            w.quot.P.str() + "]";
                }
                out << (line.empty() ? "no walls" : line) << "\n";
                for (const auto& c : ws.candidates)
                    if (c.outcome == WallCandidate::Outcome::RejectedEmpty)
                        out << "rejected: alpha = " << to_string(c.alpha) << " [sub "
                            << c.sub.P.str() << " | quot " << c.quot.P.str() << "] (" << c.note
                            << ")\n";
            }
            return 0;
        }
        if (poin->parsed()) {
            UPoly p = poincare(parse_space(join(poin_args)));
            if (as_json)
                out << upoly_json(p).dump() << "\n";
            else
                out << p.str() << "\n";
            return 0;
        }
        if (ver->parsed()) {
            auto checks = verify_all(table, facts);
            if (as_json)
                out << report_json(checks) << "\n";
            else
                out << report_text(checks);
            return report_exit_code(checks);
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

} // namespace quadmod::cli
