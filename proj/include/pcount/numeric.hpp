#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace pcount {

using Count = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// C(a, b), zero when b < 0 or b > a.
Count binomial(std::int64_t a, std::int64_t b);
Count factorial(std::int64_t n);
// n (n-1) ... (n-k+1); one when k == 0.
Count fallingFactorial(std::int64_t n, std::int64_t k);

std::string toDecimal(const Count& value);
// "p/q" in lowest terms; "p" alone is never emitted so the format is fixed.
std::string toFraction(const Rational& value);

}  // namespace pcount
