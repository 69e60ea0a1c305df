#ifndef QUADMOD_TRUNC_SERIES_HPP
#define QUADMOD_TRUNC_SERIES_HPP

#include "quadmod/upoly.hpp"

#include <vector>

namespace quadmod {

// Power series in a counting variable z with UPoly coefficients,
// truncated at order N: every operation discards powers of z above N.
class TruncSeries {
public:
    explicit TruncSeries(int order);

    static TruncSeries one(int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const UPoly& coeff(int k) const { return coeffs_.at(static_cast<size_t>(k)); }
    UPoly& coeff(int k) { return coeffs_.at(static_cast<size_t>(k)); }

    TruncSeries& operator+=(const TruncSeries& o);
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
    friend bool operator==(const TruncSeries& a, const TruncSeries& b) = default;

private:
    std::vector<UPoly> coeffs_; // index = power of z, length order+1
};

// One factor of a truncated product: the rational expression
// (1 - pattern(x) * z^z_power)^(+1 or -1). Denominator factors are
// expanded as geometric series up to the truncation order.
struct SeriesFactor {
    bool denominator = true;
    UPoly pattern;
    int z_power = 1;
};

// Exact truncated expansion of the product of the given factors.
// Denominator factors must have constant term 1 in z (z_power >= 1);
// a zero z-power there is rejected.
TruncSeries trunc_product(const std::vector<SeriesFactor>& factors, int order);

} // namespace quadmod

#endif
