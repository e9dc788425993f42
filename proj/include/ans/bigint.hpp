#ifndef ANS_BIGINT_HPP
#define ANS_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace ans {

// All counts and numerical values are exact; no floating point anywhere.
using Int = boost::multiprecision::cpp_int;

inline Int isqrt(const Int& n) {
    if (n < 0) throw std::invalid_argument("isqrt of negative value");
    return boost::multiprecision::sqrt(n);
}

inline bool is_perfect_square(const Int& n) {
    if (n < 0) return false;
    Int r = isqrt(n);
    return r * r == n;
}

// Largest l with l(l+1)/2 <= n.
inline Int triangular_root(const Int& n) {
    if (n < 0) throw std::invalid_argument("triangular_root of negative value");
    Int l = (isqrt(8 * n + 1) - 1) / 2;
    while (l * (l + 1) / 2 > n) --l;
    while ((l + 1) * (l + 2) / 2 <= n) ++l;
    return l;
}

// Floor division with sign handling (cpp_int / truncates toward zero).
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

inline Int ceil_div(const Int& a, const Int& b) { return -floor_div(-a, b); }

// Non-negative remainder of a mod m, m > 0.
inline Int pos_mod(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

inline long to_long(const Int& n) {
    return n.convert_to<long>();
}

}  // namespace ans

#endif
