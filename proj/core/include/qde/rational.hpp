/**
 * @file rational.hpp
 * @brief Arbitrary-precision rational scalar, backed by GMP.
 *
 * Rat is the engine's ground scalar: gcd-reduced, denominator > 0,
 * maintained canonical by GMP itself.
 */
#ifndef QDE_RATIONAL_HPP
#define QDE_RATIONAL_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace qde {

struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

using Rat = mpq_class;

inline Rat rat_zero() { return Rat(0); }
inline Rat rat_one() { return Rat(1); }

inline bool is_zero(const Rat& a) { return sgn(a) == 0; }
inline bool is_one(const Rat& a) { return a == 1; }

inline Rat rat_from(long num, long den = 1) {
    if (den == 0) throw error("division by zero");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rat& a) { return a.get_str(); }

inline Rat rat_parse(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw error("bad rational literal: " + s);
    r.canonicalize();
    return r;
}

} // namespace qde

#endif
