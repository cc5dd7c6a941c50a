#include "pcount/numeric.hpp"

namespace pcount {

Count binomial(std::int64_t a, std::int64_t b) {
  if (b < 0 || a < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  Count result = 1;
  for (std::int64_t i = 1; i <= b; ++i) {
    result *= a - b + i;
    result /= i;
  }
  return result;
}

Count factorial(std::int64_t n) { return fallingFactorial(n, n); }

Count fallingFactorial(std::int64_t n, std::int64_t k) {
  Count result = 1;
  for (std::int64_t i = 0; i < k; ++i) result *= n - i;
  return result;
}

std::string toDecimal(const Count& value) { return value.str(); }

std::string toFraction(const Rational& value) {
  return boost::multiprecision::numerator(value).str() + "/" +
         boost::multiprecision::denominator(value).str();
}

}  // namespace pcount
