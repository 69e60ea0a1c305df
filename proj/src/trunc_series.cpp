#include "quadmod/trunc_series.hpp"

#include <stdexcept>

namespace quadmod {

TruncSeries::TruncSeries(int order) {
    if (order < 0) throw std::invalid_argument("TruncSeries: negative order");
    coeffs_.assign(static_cast<size_t>(order) + 1, UPoly{});
}

TruncSeries TruncSeries::one(int order) {
    TruncSeries s(order);
    s.coeff(0) = UPoly::constant(1);
    return s;
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
    if (o.order() != order()) throw std::invalid_argument("TruncSeries: order mismatch");
    for (int k = 0; k <= order(); ++k) coeff(k) += o.coeff(k);
    return *this;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    if (a.order() != b.order()) throw std::invalid_argument("TruncSeries: order mismatch");
    TruncSeries out(a.order());
    for (int i = 0; i <= a.order(); ++i) {
        if (a.coeff(i).is_zero()) continue;
        for (int j = 0; i + j <= a.order(); ++j)
            out.coeff(i + j) += a.coeff(i) * b.coeff(j);
    }
    return out;
}

TruncSeries trunc_product(const std::vector<SeriesFactor>& factors, int order) {
    TruncSeries acc = TruncSeries::one(order);
    for (const auto& f : factors) {
        if (f.z_power < 0) throw std::invalid_argument("trunc_product: negative z power");
        if (f.denominator && f.z_power == 0)
            throw std::invalid_argument("trunc_product: denominator factor with zero constant term");
        TruncSeries factor(order);
        if (f.denominator) {
            // 1/(1 - P z^k) = sum_j P^j z^{kj}
            UPoly pj = UPoly::constant(1);
            for (int j = 0; j * f.z_power <= order; ++j) {
                factor.coeff(j * f.z_power) += pj;
                if (f.z_power == 0) break;
                pj = pj * f.pattern;
            }
        } else {
            factor.coeff(0) = UPoly::constant(1);
            if (f.z_power <= order) factor.coeff(f.z_power) -= f.pattern;
        }
        acc = acc * factor;
    }
    return acc;
}

} // namespace quadmod
