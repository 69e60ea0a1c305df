#ifndef QUADMOD_UPOLY_HPP
#define QUADMOD_UPOLY_HPP

#include "quadmod/numeric.hpp"

#include <initializer_list>
#include <vector>

namespace quadmod {

// Dense univariate polynomial with integer coefficients in the Betti
// variable, stored low-to-high. The top stored coefficient is nonzero
// unless the polynomial is zero (empty coefficient vector).
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<Int> coeffs);
    UPoly(std::initializer_list<Int> coeffs);

    static UPoly zero() { return UPoly{}; }
    static UPoly constant(Int c);
    static UPoly monomial(int exp, Int c = 1);

    bool is_zero() const { return coeffs_.empty(); }
    // degree of the zero polynomial is -1 by convention
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Int coeff(int exp) const;
    const std::vector<Int>& coeffs() const { return coeffs_; }

    Rat eval(const Rat& x) const;
    Int eval_int(const Int& x) const;

    bool palindromic() const;

    UPoly& operator+=(const UPoly& o);
    UPoly& operator-=(const UPoly& o);
    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const Int& c, const UPoly& p);
    friend bool operator==(const UPoly& a, const UPoly& b) = default;

    // Canonical text form: descending powers, variable spelled `x`,
    // e.g. "x^6+3*x^5+9*x^4+14*x^3+9*x^2+3*x+1".
    std::string str() const;

private:
    void trim();
    std::vector<Int> coeffs_;
};

// 1 + x + ... + x^n, the Poincare polynomial of n-dimensional projective space.
UPoly geometric_poly(int n);

} // namespace quadmod

#endif
