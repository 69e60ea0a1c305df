#ifndef QUADMOD_BIPOLY_HPP
#define QUADMOD_BIPOLY_HPP

#include "quadmod/numeric.hpp"

#include <map>
#include <string>
#include <utility>

namespace quadmod {

// Bivariate polynomial with rational coefficients in the twist variables
// m, n. Sparse: no zero coefficients are stored. Hilbert polynomials on
// the quadric live here (they are linear, but chi of a twisted line
// bundle is the full product (m+a+1)(n+b+1)).
class BiPoly {
public:
    using Key = std::pair<int, int>; // (exponent of m, exponent of n)

    BiPoly() = default;

    static BiPoly zero() { return BiPoly{}; }
    static BiPoly constant(Rat c);
    static BiPoly monomial(int i, int j, Rat c = 1);
    static BiPoly var_m() { return monomial(1, 0); }
    static BiPoly var_n() { return monomial(0, 1); }
    // r*m + s*n + t
    static BiPoly linear(Rat r, Rat s, Rat t);

    bool is_zero() const { return terms_.empty(); }
    Rat coeff(int i, int j) const;
    const std::map<Key, Rat>& terms() const { return terms_; }
    int total_degree() const;
    bool is_linear() const { return total_degree() <= 1; }

    Rat eval(const Rat& m, const Rat& n) const;

    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    friend bool operator==(const BiPoly& a, const BiPoly& b) = default;

    // "m*n+4*m+2*n-2" style, terms in descending (total degree, m-degree).
    std::string str() const;

private:
    void add_term(int i, int j, const Rat& c);
    std::map<Key, Rat> terms_;
};

} // namespace quadmod

#endif
