#ifndef QUADMOD_NUMERIC_HPP
#define QUADMOD_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace quadmod {

// Exact coefficient types. Everything in this library is integer or
// rational arithmetic; there is no floating point anywhere.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline std::string to_string(const Int& v) { return v.str(); }

// Renders p/q, omitting the denominator when it is 1.
inline std::string to_string(const Rat& v) {
    if (denominator(v) == 1) return numerator(v).str();
    return numerator(v).str() + "/" + denominator(v).str();
}

} // namespace quadmod

#endif
