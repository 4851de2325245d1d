#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace cqg {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

/// gcd of absolute values over a range; 0 for an all-zero (or empty) range.
inline Int content_of(const std::vector<Int>& v) {
    Int g = 0;
    for (const Int& x : v) {
        g = gcd(g, x);
        if (g == 1) break;
    }
    return g;
}

/// Divide each entry by the content and make the first nonzero entry
/// positive. No-op on the zero vector.
inline void make_primitive(std::vector<Int>& v) {
    Int g = content_of(v);
    if (g == 0) return;
    for (Int& x : v) x /= g;
    for (const Int& x : v) {
        if (x == 0) continue;
        if (x < 0)
            for (Int& y : v) y = -y;
        break;
    }
}

inline Int int_pow(Int base, unsigned exp) {
    Int r = 1;
    while (exp > 0) {
        if (exp & 1u) r *= base;
        base *= base;
        exp >>= 1u;
    }
    return r;
}

}  // namespace cqg
