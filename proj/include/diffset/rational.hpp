#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace diffset {

// Exact rationals for every certificate-bearing quantity.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Accepts "p/q", "p", and finite decimals such as "0.45" (converted exactly).
Rational parse_rational(std::string_view text);

// Always "p/q" in lowest terms, including integers ("1/1").
std::string to_string(const Rational& r);

std::int64_t numerator_i64(const Rational& r);
std::int64_t denominator_i64(const Rational& r);

// floor(r) as int64; throws InputError when it does not fit.
std::int64_t floor_i64(const Rational& r);

inline Rational ratio(std::int64_t num, std::int64_t den) { return Rational(num, den); }

// hits/den > r, evaluated by cross-multiplication.
bool fraction_greater(std::int64_t hits, std::int64_t den, std::int64_t rnum, std::int64_t rden);
bool fraction_greater_equal(std::int64_t hits, std::int64_t den, std::int64_t rnum,
                            std::int64_t rden);

double to_double(const Rational& r);

}  // namespace diffset
