#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cstdint>
#include <string>

namespace towerlab {

// Exact integers and rationals for all census and invariant arithmetic.
// Counting paths never touch floating point; the decimal type below is
// used only where q^{r/2} is irrational.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// 50-digit decimals via MPFR; the default rounding mode is round to
// nearest, ties to even. Comparisons against decimal values carry kDecEps.
using Dec = boost::multiprecision::mpfr_float_50;

inline const Dec kDecEps{"1e-30"};

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline Dec to_dec(const Rat& r) { return Dec(rat_num(r)) / Dec(rat_den(r)); }

inline std::string rat_str(const Rat& r) { return r.str(); }

/// Decimal rendering with the given number of significant digits.
std::string dec_str(const Dec& d, int digits = 30);

/// Floor of the integer square root; exact.
Int isqrt(const Int& n);

/// True iff n is a perfect square (then *root is set).
bool is_square(const Int& n, Int* root = nullptr);

/// q^{r/2} - 1 as an exact rational when r is even or q is a perfect
/// square; otherwise empty.
bool half_power_minus_one(const Int& q, int r, Rat* out);

/// q^{r/2} - 1 as a decimal, always available.
Dec half_power_minus_one_dec(const Int& q, int r);

Int int_pow(const Int& base, unsigned exp);

}  // namespace towerlab
