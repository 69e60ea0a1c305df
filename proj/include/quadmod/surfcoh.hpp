#ifndef QUADMOD_SURFCOH_HPP
#define QUADMOD_SURFCOH_HPP

#include "quadmod/bipoly.hpp"
#include "quadmod/lesolve.hpp"

#include <optional>
#include <string>
#include <utility>

namespace quadmod {

// Twist O(a,b) on the quadric P^1 x P^1, polarization O(1,1).
struct BiDegree {
    int a = 0, b = 0;
    friend BiDegree operator+(BiDegree x, BiDegree y) { return {x.a + y.a, x.b + y.b}; }
    friend BiDegree operator-(BiDegree x, BiDegree y) { return {x.a - y.a, x.b - y.b}; }
    friend bool operator==(BiDegree, BiDegree) = default;
    std::string str() const;
};

// Divisor class of a curve cut out by a section of O(c,d). Convention:
// the structure sheaf of such a curve has Hilbert polynomial
// d*m + c*n + (c+d-cd).
struct CurveClass {
    int c = 0, d = 0;
    friend bool operator==(CurveClass, CurveClass) = default;
};

// The two rulings: zero loci of sections of O(0,1) resp. O(1,0).
// O(a,b) restricts to the first as O_{P^1}(a), to the second as O_{P^1}(b).
enum class LineClass { Deg01, Deg10 };

CurveClass curve_class(LineClass l);

// Cohomology dimensions; an entry not forced by the chase is UNKNOWN.
struct CohDims {
    std::optional<long long> h0, h1, h2;
    bool all_known() const { return h0 && h1 && h2; }
    friend bool operator==(const CohDims&, const CohDims&) = default;
    std::string str() const;
};

// (h^0, h^1) of O_{P^1}(a).
std::pair<long long, long long> h_p1(int a);

// Kunneth cohomology of O(a,b) on the quadric; always fully known.
CohDims h_surface(BiDegree t);

// Euler characteristic (a+1)(b+1).
long long chi_surface(BiDegree t);

// Serre duality twist: h^i(t) = h^{2-i}(serre_dual(t)); the canonical
// class is O(-2,-2).
BiDegree serre_dual(BiDegree t);

// (h^0, h^1) of O(a,b) restricted to a line.
std::pair<long long, long long> h_line(LineClass l, BiDegree t);

// Cohomology of O_C(t) for C in |O(c,d)|, via the restriction sequence
// 0 -> O(t - (c,d)) -> O(t) -> O_C(t) -> 0 and the chase solver. The
// first map is multiplication by the (nonzero) defining section, hence
// injective on sections; no other rank assumption is made, and entries
// the chase does not force come back UNKNOWN.
CohDims h_curve(CurveClass cls, BiDegree t);

// Hilbert polynomials chi(F(m,n)).
BiPoly hilbert_line_bundle(BiDegree t);            // (m+a+1)(n+b+1)
BiPoly hilbert_curve(CurveClass cls, BiDegree t);  // line bundle minus the kernel term
BiPoly hilbert_line(LineClass l, BiDegree t);      // m+a+1 resp. n+b+1
BiPoly hilbert_skyscraper(long long len);          // constant

} // namespace quadmod

#endif
