#pragma once

#include <gmpxx.h>

#include <cmath>
#include <string>

namespace rising {

using Rational = mpq_class;

enum class Mode { exact, floating };

const char* mode_name(Mode mode);
Mode parse_mode(const std::string& text);

/// Parses "p/q", integers and finite decimals ("0.375", "-1e-3") exactly.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& q);
/// Shortest decimal text that reads back to the same double.
std::string to_string(double x);

inline double to_double(double x) { return x; }
/// Nearest double, ties to even (mpq_get_d truncates).
double to_double(const Rational& q);

template <class S>
S from_rational(const Rational& q);

template <>
inline Rational from_rational<Rational>(const Rational& q) { return q; }

template <>
inline double from_rational<double>(const Rational& q) { return to_double(q); }

template <class S>
S from_int(long num, long den = 1) {
    if constexpr (std::is_same_v<S, double>) {
        return static_cast<double>(num) / static_cast<double>(den);
    } else {
        Rational q(num, den);
        q.canonicalize();
        return q;
    }
}

/// x * 2^e, exact in both modes (doubles may underflow to zero).
inline double times_pow2(double x, long e) { return std::ldexp(x, static_cast<int>(e)); }
Rational times_pow2(const Rational& x, long e);

/// floor(log2(x)) for x > 0.
long floor_log2(double x);
long floor_log2(const Rational& x);

inline double abs_value(double x) { return std::fabs(x); }
inline Rational abs_value(const Rational& x) { return abs(x); }

/// Size in bits of numerator plus denominator; 0 for doubles.
inline std::size_t bit_size(double) { return 0; }
std::size_t bit_size(const Rational& q);

template <class S>
constexpr bool is_exact_v = std::is_same_v<S, Rational>;

}  // namespace rising
