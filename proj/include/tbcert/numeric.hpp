#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace tbcert {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// cpp_int division truncates toward zero; these are the floor/ceil versions.
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    Int r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

inline Int ceil_div(const Int& a, const Int& b) { return -floor_div(-a, b); }

inline Int rat_floor(const Rat& x) {
    return floor_div(boost::multiprecision::numerator(x), boost::multiprecision::denominator(x));
}

// inverse of a modulo m (m > 1), requires gcd(a, m) = 1
inline Int mod_inverse(const Int& a, const Int& m) {
    Int r0 = m, r1 = ((a % m) + m) % m;
    Int s0 = 0, s1 = 1;
    while (r1 != 0) {
        Int q = r0 / r1;
        r0 -= q * r1;
        std::swap(r0, r1);
        s0 -= q * s1;
        std::swap(s0, s1);
    }
    if (r0 != 1) throw std::invalid_argument("mod_inverse: arguments are not coprime");
    return ((s0 % m) + m) % m;
}

inline std::int64_t to_int64(const Int& v, const char* what) {
    if (v < std::numeric_limits<std::int64_t>::min() || v > std::numeric_limits<std::int64_t>::max())
        throw std::overflow_error(std::string(what) + ": value does not fit in 64 bits");
    return v.convert_to<std::int64_t>();
}

}  // namespace tbcert
