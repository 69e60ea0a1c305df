#include "quadmod/sheafalg.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace quadmod {

SheafPtr make_line_bundle(BiDegree t) {
    return std::make_shared<SheafExpr>(SheafExpr{SheafExpr::LineBundle{t}});
}
SheafPtr make_curve_sheaf(CurveClass cls, BiDegree t) {
    if ((cls.c == 0 && cls.d == 0) || cls.c < 0 || cls.d < 0)
        throw std::invalid_argument("make_curve_sheaf: bad curve class");
    return std::make_shared<SheafExpr>(SheafExpr{SheafExpr::CurveSheaf{cls, t}});
}
SheafPtr make_line_sheaf(LineClass cls, BiDegree t) {
    return std::make_shared<SheafExpr>(SheafExpr{SheafExpr::LineSheaf{cls, t}});
}
SheafPtr make_skyscraper(long long len) {
    if (len < 0) throw std::invalid_argument("make_skyscraper: negative length");
    return std::make_shared<SheafExpr>(SheafExpr{SheafExpr::Skyscraper{len}});
}
SheafPtr make_direct_sum(std::vector<SheafPtr> parts) {
    return std::make_shared<SheafExpr>(SheafExpr{SheafExpr::DirectSum{std::move(parts)}});
}
SheafPtr make_resolution(std::vector<BiDegree> left, std::vector<BiDegree> right,
                         std::vector<Hypothesis> hyps) {
    if (left.empty() || right.empty())
        throw std::invalid_argument("make_resolution: empty column");
    return std::make_shared<SheafExpr>(
        SheafExpr{SheafExpr::Resolution{std::move(left), std::move(right), std::move(hyps)}});
}
SheafPtr make_extension(SheafPtr sub, SheafPtr quot, std::vector<Hypothesis> hyps) {
    if (!sub || !quot) throw std::invalid_argument("make_extension: null part");
    return std::make_shared<SheafExpr>(
        SheafExpr{SheafExpr::Extension{std::move(sub), std::move(quot), std::move(hyps)}});
}

BiPoly hilbert(const SheafPtr& f) {
    if (!f) throw std::invalid_argument("hilbert: null sheaf");
    return std::visit(
        [](const auto& n) -> BiPoly {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, SheafExpr::LineBundle>) {
                return hilbert_line_bundle(n.t);
            } else if constexpr (std::is_same_v<T, SheafExpr::CurveSheaf>) {
                return hilbert_curve(n.cls, n.t);
            } else if constexpr (std::is_same_v<T, SheafExpr::LineSheaf>) {
                return hilbert_line(n.cls, n.t);
            } else if constexpr (std::is_same_v<T, SheafExpr::Skyscraper>) {
                return hilbert_skyscraper(n.length);
            } else if constexpr (std::is_same_v<T, SheafExpr::DirectSum>) {
                BiPoly acc;
                for (const auto& p : n.parts) acc += hilbert(p);
                return acc;
            } else if constexpr (std::is_same_v<T, SheafExpr::Resolution>) {
                BiPoly acc;
                for (const auto& d : n.right) acc += hilbert_line_bundle(d);
                for (const auto& d : n.left) acc -= hilbert_line_bundle(d);
                return acc;
            } else {
                return hilbert(n.sub) + hilbert(n.quot);
            }
        },
        f->node);
}

namespace {

CohDims sum_coh(const CohDims& x, const CohDims& y) {
    auto add = [](const std::optional<long long>& a, const std::optional<long long>& b)
        -> std::optional<long long> {
        if (a && b) return *a + *b;
        return std::nullopt;
    };
    return CohDims{add(x.h0, y.h0), add(x.h1, y.h1), add(x.h2, y.h2)};
}

CohDims coh_of_bundle_sum(const std::vector<BiDegree>& ds) {
    CohDims acc{0, 0, 0};
    for (const auto& d : ds) acc = sum_coh(acc, h_surface(d));
    return acc;
}

SeqTerm term(std::string label, const std::optional<long long>& dim) {
    return SeqTerm{std::move(label), dim};
}

} // namespace

CohDims h_dims(const SheafPtr& f) {
    if (!f) throw std::invalid_argument("h_dims: null sheaf");
    return std::visit(
        [&](const auto& n) -> CohDims {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, SheafExpr::LineBundle>) {
                return h_surface(n.t);
            } else if constexpr (std::is_same_v<T, SheafExpr::CurveSheaf>) {
                return h_curve(n.cls, n.t);
            } else if constexpr (std::is_same_v<T, SheafExpr::LineSheaf>) {
                auto [h0, h1] = h_line(n.cls, n.t);
                return CohDims{h0, h1, 0};
            } else if constexpr (std::is_same_v<T, SheafExpr::Skyscraper>) {
                return CohDims{n.length, 0, 0};
            } else if constexpr (std::is_same_v<T, SheafExpr::DirectSum>) {
                CohDims acc{0, 0, 0};
                for (const auto& p : n.parts) acc = sum_coh(acc, h_dims(p));
                return acc;
            } else if constexpr (std::is_same_v<T, SheafExpr::Resolution>) {
                CohDims a = coh_of_bundle_sum(n.left);
                CohDims b = coh_of_bundle_sum(n.right);
                ExactSeq seq;
                seq.terms = {term("H0(A)", a.h0), term("H0(B)", b.h0), term("h0", {}),
                             term("H1(A)", a.h1), term("H1(B)", b.h1), term("h1", {}),
                             term("H2(A)", a.h2), term("H2(B)", b.h2), term("h2", {})};
                seq.maps.assign(8, MapNote::None);
                for (auto h : n.hyps)
                    if (h == Hypothesis::H1LeftRightInjective) seq.maps[3] = MapNote::Injective;
                Solution sol = solve(seq);
                if (sol.status == SolveStatus::Inconsistent)
                    throw std::logic_error("h_dims: resolution sequence inconsistent");
                auto pick = [&](size_t i) -> std::optional<long long> {
                    return sol.dims[i].is_point() ? std::optional<long long>(sol.dims[i].lo)
                                                  : std::nullopt;
                };
                return CohDims{pick(2), pick(5), pick(8)};
            } else {
                const SheafExpr::Extension& e = n;
                CohDims s = h_dims(e.sub);
                CohDims q = h_dims(e.quot);
                ExactSeq seq;
                seq.terms = {term("h0(sub)", s.h0),  term("h0(F)", {}), term("h0(quot)", q.h0),
                             term("h1(sub)", s.h1),  term("h1(F)", {}), term("h1(quot)", q.h1),
                             term("h2(sub)", s.h2),  term("h2(F)", {}), term("h2(quot)", q.h2)};
                seq.maps.assign(8, MapNote::None);
                for (auto h : e.hyps) {
                    if (h == Hypothesis::ConnectingH0H1Injective) seq.maps[2] = MapNote::Injective;
                    if (h == Hypothesis::ConnectingH0H1Zero) seq.maps[2] = MapNote::Zero;
                }
                Solution sol = solve(seq);
                if (sol.status == SolveStatus::Inconsistent)
                    throw std::logic_error("h_dims: extension sequence inconsistent");
                auto pick = [&](size_t i) -> std::optional<long long> {
                    return sol.dims[i].is_point() ? std::optional<long long>(sol.dims[i].lo)
                                                  : std::nullopt;
                };
                return CohDims{pick(1), pick(4), pick(7)};
            }
        },
        f->node);
}

SheafPtr twist(const SheafPtr& f, BiDegree by) {
    if (!f) throw std::invalid_argument("twist: null sheaf");
    return std::visit(
        [&](const auto& n) -> SheafPtr {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, SheafExpr::LineBundle>) {
                return make_line_bundle(n.t + by);
            } else if constexpr (std::is_same_v<T, SheafExpr::CurveSheaf>) {
                return make_curve_sheaf(n.cls, n.t + by);
            } else if constexpr (std::is_same_v<T, SheafExpr::LineSheaf>) {
                return make_line_sheaf(n.cls, n.t + by);
            } else if constexpr (std::is_same_v<T, SheafExpr::Skyscraper>) {
                return make_skyscraper(n.length);
            } else if constexpr (std::is_same_v<T, SheafExpr::DirectSum>) {
                std::vector<SheafPtr> parts;
                for (const auto& p : n.parts) parts.push_back(twist(p, by));
                return make_direct_sum(std::move(parts));
            } else if constexpr (std::is_same_v<T, SheafExpr::Resolution>) {
                auto left = n.left;
                auto right = n.right;
                for (auto& d : left) d = d + by;
                for (auto& d : right) d = d + by;
                return make_resolution(std::move(left), std::move(right), n.hyps);
            } else {
                return make_extension(twist(n.sub, by), twist(n.quot, by), n.hyps);
            }
        },
        f->node);
}

namespace {

const char* hyp_name(Hypothesis h) {
    switch (h) {
    case Hypothesis::H1LeftRightInjective: return "h1-lr-injective";
    case Hypothesis::ConnectingH0H1Injective: return "connecting-injective";
    case Hypothesis::ConnectingH0H1Zero: return "connecting-zero";
    case Hypothesis::NonSplit: return "non-split";
    }
    return "?";
}

std::string hyp_suffix(const std::vector<Hypothesis>& hyps) {
    if (hyps.empty()) return "";
    std::string out = " (hyp";
    for (auto h : hyps) out += std::string(" ") + hyp_name(h);
    return out + ")";
}

std::string bd_sexpr(BiDegree d) {
    return "(O " + std::to_string(d.a) + " " + std::to_string(d.b) + ")";
}

} // namespace

std::string to_sexpr(const SheafPtr& f) {
    if (!f) throw std::invalid_argument("to_sexpr: null sheaf");
    return std::visit(
        [](const auto& n) -> std::string {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, SheafExpr::LineBundle>) {
                return bd_sexpr(n.t);
            } else if constexpr (std::is_same_v<T, SheafExpr::CurveSheaf>) {
                return "(curve " + std::to_string(n.cls.c) + " " + std::to_string(n.cls.d) + " " +
                       std::to_string(n.t.a) + " " + std::to_string(n.t.b) + ")";
            } else if constexpr (std::is_same_v<T, SheafExpr::LineSheaf>) {
                CurveClass c = curve_class(n.cls);
                return "(line " + std::to_string(c.c) + " " + std::to_string(c.d) + " " +
                       std::to_string(n.t.a) + " " + std::to_string(n.t.b) + ")";
            } else if constexpr (std::is_same_v<T, SheafExpr::Skyscraper>) {
                return "(sky " + std::to_string(n.length) + ")";
            } else if constexpr (std::is_same_v<T, SheafExpr::DirectSum>) {
                std::string out = "(sum";
                for (const auto& p : n.parts) out += " " + to_sexpr(p);
                return out + ")";
            } else if constexpr (std::is_same_v<T, SheafExpr::Resolution>) {
                std::string out = "(res";
                for (const auto& d : n.left) out += " " + bd_sexpr(d);
                out += " =>";
                for (const auto& d : n.right) out += " " + bd_sexpr(d);
                return out + hyp_suffix(n.hyps) + ")";
            } else {
                return "(ext " + to_sexpr(n.sub) + " " + to_sexpr(n.quot) + hyp_suffix(n.hyps) +
                       ")";
            }
        },
        f->node);
}

namespace {

struct Lexer {
    std::vector<std::string> toks;
    size_t pos = 0;

    explicit Lexer(const std::string& text) {
        std::string s;
        // shorthand O(a,b) -> (O a b); commas are whitespace
        for (size_t i = 0; i < text.size(); ++i) {
            if (text[i] == 'O' && i + 1 < text.size() && text[i + 1] == '(') {
                s += "(O ";
                ++i;
            } else if (text[i] == ',') {
                s += ' ';
            } else {
                s += text[i];
            }
        }
        std::string cur;
        auto flush = [&] {
            if (!cur.empty()) toks.push_back(cur);
            cur.clear();
        };
        for (char ch : s) {
            if (std::isspace(static_cast<unsigned char>(ch))) {
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
        if (done()) throw std::invalid_argument("sheaf parse: unexpected end of input");
        return toks[pos];
    }
    std::string next() {
        auto t = peek();
        ++pos;
        return t;
    }
    void expect(const std::string& t) {
        if (next() != t) throw std::invalid_argument("sheaf parse: expected '" + t + "'");
    }
    int next_int() {
        auto t = next();
        try {
            size_t used = 0;
            int v = std::stoi(t, &used);
            if (used != t.size()) throw std::invalid_argument("");
            return v;
        } catch (...) {
            throw std::invalid_argument("sheaf parse: expected integer, got '" + t + "'");
        }
    }
};

Hypothesis parse_hyp_name(const std::string& name) {
    if (name == "h1-lr-injective") return Hypothesis::H1LeftRightInjective;
    if (name == "connecting-injective") return Hypothesis::ConnectingH0H1Injective;
    if (name == "connecting-zero") return Hypothesis::ConnectingH0H1Zero;
    if (name == "non-split") return Hypothesis::NonSplit;
    throw std::invalid_argument("sheaf parse: unknown hypothesis '" + name + "'");
}

BiDegree parse_bd(Lexer& lx) {
    lx.expect("(");
    lx.expect("O");
    int a = lx.next_int();
    int b = lx.next_int();
    lx.expect(")");
    return {a, b};
}

std::vector<Hypothesis> parse_hyps(Lexer& lx) {
    // optional trailing (hyp name...) group
    std::vector<Hypothesis> out;
    if (!lx.done() && lx.peek() == "(") {
        size_t save = lx.pos;
        lx.next();
        if (!lx.done() && lx.peek() == "hyp") {
            lx.next();
            while (lx.peek() != ")") out.push_back(parse_hyp_name(lx.next()));
            lx.next();
        } else {
            lx.pos = save;
        }
    }
    return out;
}

SheafPtr parse_expr(Lexer& lx) {
    lx.expect("(");
    std::string head = lx.next();
    if (head == "O") {
        int a = lx.next_int();
        int b = lx.next_int();
        lx.expect(")");
        return make_line_bundle({a, b});
    }
    if (head == "curve") {
        int c = lx.next_int(), d = lx.next_int(), a = lx.next_int(), b = lx.next_int();
        lx.expect(")");
        return make_curve_sheaf({c, d}, {a, b});
    }
    if (head == "line") {
        int c = lx.next_int(), d = lx.next_int(), a = lx.next_int(), b = lx.next_int();
        lx.expect(")");
        if (c == 0 && d == 1) return make_line_sheaf(LineClass::Deg01, {a, b});
        if (c == 1 && d == 0) return make_line_sheaf(LineClass::Deg10, {a, b});
        throw std::invalid_argument("sheaf parse: line class must be (0 1) or (1 0)");
    }
    if (head == "sky") {
        int len = lx.next_int();
        lx.expect(")");
        return make_skyscraper(len);
    }
    if (head == "sum") {
        std::vector<SheafPtr> parts;
        while (lx.peek() != ")") parts.push_back(parse_expr(lx));
        lx.next();
        if (parts.empty()) throw std::invalid_argument("sheaf parse: empty sum");
        return make_direct_sum(std::move(parts));
    }
    if (head == "ext") {
        SheafPtr sub = parse_expr(lx);
        SheafPtr quot = parse_expr(lx);
        auto hyps = parse_hyps(lx);
        lx.expect(")");
        return make_extension(std::move(sub), std::move(quot), std::move(hyps));
    }
    if (head == "res") {
        std::vector<BiDegree> left, right;
        while (lx.peek() != "=>") left.push_back(parse_bd(lx));
        lx.next();
        while (lx.peek() == "(") {
            size_t save = lx.pos;
            lx.next();
            bool is_hyp = !lx.done() && lx.peek() == "hyp";
            lx.pos = save;
            if (is_hyp) break;
            right.push_back(parse_bd(lx));
        }
        auto hyps = parse_hyps(lx);
        lx.expect(")");
        return make_resolution(std::move(left), std::move(right), std::move(hyps));
    }
    throw std::invalid_argument("sheaf parse: unknown form '" + head + "'");
}

} // namespace

SheafPtr parse_sheaf(const std::string& text) {
    Lexer lx(text);
    SheafPtr f = parse_expr(lx);
    if (!lx.done()) throw std::invalid_argument("sheaf parse: trailing tokens");
    return f;
}

BiPoly LinPoly::to_bipoly() const { return BiPoly::linear(Rat(r), Rat(s), Rat(t)); }

std::string LinPoly::str() const {
    if (r == 0 && s == 0) return std::to_string(t);
    std::ostringstream os;
    bool lead = true;
    auto emit = [&](long long c, const char* v) {
        if (c == 0) return;
        if (lead) {
            if (c < 0) os << '-';
            lead = false;
        } else {
            os << (c < 0 ? '-' : '+');
        }
        long long mag = c < 0 ? -c : c;
        if (mag != 1) os << mag;
        os << v;
    };
    emit(r, "m");
    emit(s, "n");
    os << (t < 0 ? '-' : '+') << (t < 0 ? -t : t);
    return os.str();
}

LinPoly lin_from_bipoly(const BiPoly& p) {
    if (p.total_degree() > 1) throw std::invalid_argument("lin_from_bipoly: not linear");
    auto as_ll = [](const Rat& q) -> long long {
        if (denominator(q) != 1) throw std::invalid_argument("lin_from_bipoly: non-integer coefficient");
        return static_cast<long long>(numerator(q));
    };
    return LinPoly{as_ll(p.coeff(1, 0)), as_ll(p.coeff(0, 1)), as_ll(p.coeff(0, 0))};
}

Rat slope(const LinPoly& p) {
    if (p.r + p.s <= 0) throw std::invalid_argument("slope: r+s must be positive");
    return Rat(p.t) / Rat(p.r + p.s);
}

std::strong_ordering compare_reduced(const LinPoly& a, const LinPoly& b) {
    Rat sa = slope(a), sb = slope(b);
    if (sa < sb) return std::strong_ordering::less;
    if (sa > sb) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

LinPoly twist_hilbert(const LinPoly& p, int u, int v) {
    return LinPoly{p.r, p.s, p.t + p.r * u + p.s * v};
}

Table1Row table1_kernel(std::pair<int, int> deg_g) {
    auto [g1, g2] = deg_g;
    if (g1 < 0 || g2 < 0 || g1 > 1 || g2 > 3 || (g1 == 0 && g2 == 0))
        throw std::invalid_argument("table1_kernel: deg(g) out of range");
    BiDegree ij{g1 - 2, g2 - 4};
    BiPoly coker = hilbert_line_bundle({0, 0}) - hilbert_line_bundle(ij);
    return Table1Row{ij, coker};
}

} // namespace quadmod
