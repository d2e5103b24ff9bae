#ifndef SPHEREDIV_SCALAR_HPP
#define SPHEREDIV_SCALAR_HPP

#include "spherediv/cyclotomic.hpp"
#include "spherediv/quadratic.hpp"
#include "spherediv/rational.hpp"

#include <cmath>
#include <cstdio>
#include <string>
#include <type_traits>

namespace spherediv {

// Uniform access to the four scalar kinds: Rational, QuadraticNumber, CyclotomicNumber
// (exact fields) and double (floating, tolerance-based).

template <class T>
inline constexpr bool is_exact_v = !std::is_floating_point_v<T>;

template <class T>
T from_rational(const Rational& q)
{
    if constexpr (std::is_floating_point_v<T>) {
        return q.get_d();
    } else {
        return T(q);
    }
}

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero(const QuadraticNumber& x) { return x.is_zero(); }
inline bool is_zero(const CyclotomicNumber& x) { return x.is_zero(); }
inline bool is_zero(double x) { return x == 0.0; }

inline double to_double(const Rational& x) { return x.get_d(); }
inline double to_double(const QuadraticNumber& x) { return x.to_double(); }
inline double to_double(const CyclotomicNumber& x) { return x.to_double(); }
inline double to_double(double x) { return x; }

/// Canonical string used for exact deduplication.
inline std::string scalar_key(const Rational& x) { return x.get_str(); }
inline std::string scalar_key(const QuadraticNumber& x) { return x.key(); }
inline std::string scalar_key(const CyclotomicNumber& x) { return x.key(); }
inline std::string scalar_key(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

/// Scalar kinds whose real ordering is decidable exactly.
template <class T>
inline constexpr bool is_ordered_v = std::is_same_v<T, Rational> || std::is_same_v<T, QuadraticNumber>
                                     || std::is_floating_point_v<T>;

inline int scalar_sign(const Rational& x) { return sgn(x); }
inline int scalar_sign(const QuadraticNumber& x) { return x.sign(); }

} // namespace spherediv

#endif
