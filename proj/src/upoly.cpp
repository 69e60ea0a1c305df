#include "quadmod/upoly.hpp"

#include <sstream>
#include <stdexcept>

namespace quadmod {

UPoly::UPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UPoly::UPoly(std::initializer_list<Int> coeffs) : coeffs_(coeffs) { trim(); }

UPoly UPoly::constant(Int c) {
    UPoly p;
    if (c != 0) p.coeffs_.push_back(std::move(c));
    return p;
}

UPoly UPoly::monomial(int exp, Int c) {
    if (exp < 0) throw std::invalid_argument("UPoly::monomial: negative exponent");
    UPoly p;
    if (c != 0) {
        p.coeffs_.assign(static_cast<size_t>(exp) + 1, 0);
        p.coeffs_.back() = std::move(c);
    }
    return p;
}

Int UPoly::coeff(int exp) const {
    if (exp < 0 || exp >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<size_t>(exp)];
}

Rat UPoly::eval(const Rat& x) const {
    Rat acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Int UPoly::eval_int(const Int& x) const {
    Int acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

bool UPoly::palindromic() const {
    size_t n = coeffs_.size();
    for (size_t i = 0; i < n / 2; ++i)
        if (coeffs_[i] != coeffs_[n - 1 - i]) return false;
    return true;
}

UPoly& UPoly::operator+=(const UPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly{};
    UPoly out;
    out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
        for (size_t j = 0; j < b.coeffs_.size(); ++j)
            out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    out.trim();
    return out;
}

UPoly operator*(const Int& c, const UPoly& p) {
    UPoly out = p;
    for (auto& v : out.coeffs_) v *= c;
    out.trim();
    return out;
}

std::string UPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int e = degree(); e >= 0; --e) {
        const Int& c = coeffs_[static_cast<size_t>(e)];
        if (c == 0) continue;
        Int mag = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) os << '-';
            first = false;
        } else {
            os << (c < 0 ? '-' : '+');
        }
        if (e == 0) {
            os << mag;
        } else {
            if (mag != 1) os << mag << '*';
            os << 'x';
            if (e > 1) os << '^' << e;
        }
    }
    return os.str();
}

void UPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UPoly geometric_poly(int n) {
    if (n < 0) throw std::invalid_argument("geometric_poly: n must be nonnegative");
    return UPoly(std::vector<Int>(static_cast<size_t>(n) + 1, 1));
}

} // namespace quadmod
