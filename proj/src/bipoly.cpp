#include "quadmod/bipoly.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace quadmod {

BiPoly BiPoly::constant(Rat c) {
    BiPoly p;
    p.add_term(0, 0, c);
    return p;
}

BiPoly BiPoly::monomial(int i, int j, Rat c) {
    BiPoly p;
    p.add_term(i, j, c);
    return p;
}

BiPoly BiPoly::linear(Rat r, Rat s, Rat t) {
    BiPoly p;
    p.add_term(1, 0, r);
    p.add_term(0, 1, s);
    p.add_term(0, 0, t);
    return p;
}

Rat BiPoly::coeff(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? Rat(0) : it->second;
}

int BiPoly::total_degree() const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, k.first + k.second);
    return d;
}

Rat BiPoly::eval(const Rat& m, const Rat& n) const {
    Rat acc = 0;
    for (const auto& [k, c] : terms_) {
        Rat t = c;
        for (int i = 0; i < k.first; ++i) t *= m;
        for (int j = 0; j < k.second; ++j) t *= n;
        acc += t;
    }
    return acc;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
    return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly out;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_)
            out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return out;
}

void BiPoly::add_term(int i, int j, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace({i, j}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

std::string BiPoly::str() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Key, Rat>> ts(terms_.begin(), terms_.end());
    std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
        int da = a.first.first + a.first.second, db = b.first.first + b.first.second;
        if (da != db) return da > db;
        return a.first.first > b.first.first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : ts) {
        Rat mag = c < 0 ? Rat(-c) : c;
        if (first) {
            if (c < 0) os << '-';
            first = false;
        } else {
            os << (c < 0 ? '-' : '+');
        }
        bool has_var = k.first > 0 || k.second > 0;
        if (!has_var) {
            os << to_string(mag);
        } else {
            bool need_star = false;
            if (mag != 1) {
                os << to_string(mag);
                need_star = true;
            }
            if (k.first > 0) {
                if (need_star) os << '*';
                os << 'm';
                if (k.first > 1) os << '^' << k.first;
                need_star = true;
            }
            if (k.second > 0) {
                if (need_star) os << '*';
                os << 'n';
                if (k.second > 1) os << '^' << k.second;
            }
        }
    }
    return os.str();
}

} // namespace quadmod
