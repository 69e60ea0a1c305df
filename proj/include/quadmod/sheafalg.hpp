#ifndef QUADMOD_SHEAFALG_HPP
#define QUADMOD_SHEAFALG_HPP

#include "quadmod/surfcoh.hpp"

#include <compare>
#include <memory>
#include <variant>
#include <vector>

namespace quadmod {

// Named cohomological facts carried by a resolution or extension and
// translated into rank annotations of the associated long exact
// sequence. These model stated genericity conditions (for instance
// "the two top-row entries of the matrix are linearly independent",
// which says exactly that H1 of the left column injects into H1 of the
// right column). NonSplit is a bookkeeping tag with no rank content.
enum class Hypothesis {
    H1LeftRightInjective,   // resolution: H1(sum left) -> H1(sum right) injective
    ConnectingH0H1Injective, // extension: H0(quot) -> H1(sub) injective
    ConnectingH0H1Zero,      // extension: H0(quot) -> H1(sub) zero
    NonSplit,
};

struct SheafExpr;
using SheafPtr = std::shared_ptr<const SheafExpr>;

// Symbolic sheaf on the quadric: enough structure to compute Hilbert
// polynomials and run cohomology chases, never an actual module.
struct SheafExpr {
    struct LineBundle { BiDegree t; };
    struct CurveSheaf { CurveClass cls; BiDegree t; };
    struct LineSheaf { LineClass cls; BiDegree t; };
    struct Skyscraper { long long length; };
    struct DirectSum { std::vector<SheafPtr> parts; };
    // 0 -> sum O(left_i) -> sum O(right_j) -> F -> 0 (injective sheaf map)
    struct Resolution {
        std::vector<BiDegree> left, right;
        std::vector<Hypothesis> hyps;
    };
    struct Extension {
        SheafPtr sub, quot;
        std::vector<Hypothesis> hyps;
    };

    using Node = std::variant<LineBundle, CurveSheaf, LineSheaf, Skyscraper,
                              DirectSum, Resolution, Extension>;
    Node node;
};

SheafPtr make_line_bundle(BiDegree t);
SheafPtr make_curve_sheaf(CurveClass cls, BiDegree t);
SheafPtr make_line_sheaf(LineClass cls, BiDegree t);
SheafPtr make_skyscraper(long long len);
SheafPtr make_direct_sum(std::vector<SheafPtr> parts);
SheafPtr make_resolution(std::vector<BiDegree> left, std::vector<BiDegree> right,
                         std::vector<Hypothesis> hyps = {});
SheafPtr make_extension(SheafPtr sub, SheafPtr quot, std::vector<Hypothesis> hyps = {});

// chi(F(m,n)); additive over sums and extensions, alternating over resolutions.
BiPoly hilbert(const SheafPtr& f);

// Cohomology dimensions via the chase solver; atoms delegate to surfcoh,
// resolutions and extensions build their long exact sequence with the
// carried hypotheses as annotations. Unforced entries are UNKNOWN.
CohDims h_dims(const SheafPtr& f);

// F(u,v): shifts every twist; skyscrapers are unchanged.
SheafPtr twist(const SheafPtr& f, BiDegree by);

// Canonical s-expression form, e.g.
// (res (O -1 -3) (O 0 -3) (O -1 -2) => (O 0 -2) (O 0 -2) (O 0 0)).
std::string to_sexpr(const SheafPtr& f);

// Parses the s-expression form (whitespace-insensitive); also accepts
// the shorthand O(a,b). Throws std::invalid_argument on bad input.
SheafPtr parse_sheaf(const std::string& text);

// Linear Hilbert polynomial r*m + s*n + t of a 1-dimensional sheaf.
struct LinPoly {
    long long r = 0, s = 0, t = 0;
    friend bool operator==(LinPoly, LinPoly) = default;
    BiPoly to_bipoly() const;
    std::string str() const; // "3m+2n-1", constant kept explicit: "3m+2n+0"
};

// Extracts a LinPoly; throws if the polynomial is not linear with
// integer coefficients.
LinPoly lin_from_bipoly(const BiPoly& p);

// Reduced slope t/(r+s); rejects r+s <= 0.
Rat slope(const LinPoly& p);
std::strong_ordering compare_reduced(const LinPoly& a, const LinPoly& b);

// rm+sn+t -> rm+sn+(t+ru+sv), the Hilbert polynomial of F(u,v).
LinPoly twist_hilbert(const LinPoly& p, int u, int v);

// Classification of the destabilizing kernel by the gcd degree of the
// 4x4 minors of the 5 O(-1,-1) -> O(0,-1) + 3 O(-1,0) matrix:
// kernel = O(deg_g - (2,4)), and the middle cokernel picks up the
// complementary Hilbert polynomial.
struct Table1Row {
    BiDegree kernel;
    BiPoly coker_phi5;
};
Table1Row table1_kernel(std::pair<int, int> deg_g);

} // namespace quadmod

#endif
