#include "quadmod/surfcoh.hpp"

#include <stdexcept>

namespace quadmod {

std::string BiDegree::str() const {
    return "O(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

std::string CohDims::str() const {
    auto one = [](const std::optional<long long>& v) {
        return v ? std::to_string(*v) : std::string("UNKNOWN");
    };
    return "(" + one(h0) + "," + one(h1) + "," + one(h2) + ")";
}

CurveClass curve_class(LineClass l) {
    return l == LineClass::Deg01 ? CurveClass{0, 1} : CurveClass{1, 0};
}

std::pair<long long, long long> h_p1(int a) {
    long long h0 = a >= 0 ? a + 1 : 0;
    long long h1 = a <= -2 ? -a - 1 : 0;
    return {h0, h1};
}

CohDims h_surface(BiDegree t) {
    auto [a0, a1] = h_p1(t.a);
    auto [b0, b1] = h_p1(t.b);
    return CohDims{a0 * b0, a0 * b1 + a1 * b0, a1 * b1};
}

long long chi_surface(BiDegree t) {
    return static_cast<long long>(t.a + 1) * static_cast<long long>(t.b + 1);
}

BiDegree serre_dual(BiDegree t) { return {-2 - t.a, -2 - t.b}; }

std::pair<long long, long long> h_line(LineClass l, BiDegree t) {
    return h_p1(l == LineClass::Deg01 ? t.a : t.b);
}

namespace {

std::optional<long long> from_range(const DimRange& r) {
    if (r.is_point()) return r.lo;
    return std::nullopt;
}

} // namespace

CohDims h_curve(CurveClass cls, BiDegree t) {
    if (cls.c == 0 && cls.d == 0) throw std::invalid_argument("h_curve: (0,0) is not a curve class");
    if (cls.c < 0 || cls.d < 0) throw std::invalid_argument("h_curve: negative curve class");
    BiDegree k = t - BiDegree{cls.c, cls.d};
    CohDims hk = h_surface(k);
    CohDims ht = h_surface(t);

    ExactSeq seq;
    seq.terms = {
        {"H0(K)", hk.h0}, {"H0(O)", ht.h0}, {"h0", std::nullopt},
        {"H1(K)", hk.h1}, {"H1(O)", ht.h1}, {"h1", std::nullopt},
        {"H2(K)", hk.h2}, {"H2(O)", ht.h2}, {"h2", std::nullopt},
    };
    seq.maps.assign(seq.terms.size() - 1, MapNote::None);
    // multiplication by the defining section of C
    seq.maps[0] = MapNote::Injective;
    Solution sol = solve(seq);
    if (sol.status == SolveStatus::Inconsistent)
        throw std::logic_error("h_curve: restriction sequence inconsistent");
    return CohDims{from_range(sol.dims[2]), from_range(sol.dims[5]), from_range(sol.dims[8])};
}

BiPoly hilbert_line_bundle(BiDegree t) {
    // (m + a + 1)(n + b + 1)
    BiPoly mfac = BiPoly::var_m() + BiPoly::constant(Rat(t.a) + 1);
    BiPoly nfac = BiPoly::var_n() + BiPoly::constant(Rat(t.b) + 1);
    return mfac * nfac;
}

BiPoly hilbert_curve(CurveClass cls, BiDegree t) {
    if (cls.c == 0 && cls.d == 0) throw std::invalid_argument("hilbert_curve: (0,0) class");
    return hilbert_line_bundle(t) - hilbert_line_bundle(t - BiDegree{cls.c, cls.d});
}

BiPoly hilbert_line(LineClass l, BiDegree t) {
    if (l == LineClass::Deg01) return BiPoly::var_m() + BiPoly::constant(Rat(t.a) + 1);
    return BiPoly::var_n() + BiPoly::constant(Rat(t.b) + 1);
}

BiPoly hilbert_skyscraper(long long len) {
    if (len < 0) throw std::invalid_argument("hilbert_skyscraper: negative length");
    return BiPoly::constant(Rat(len));
}

} // namespace quadmod
