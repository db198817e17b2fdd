#include "insets/exactmath.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace insets {

BigInt binomial(std::int64_t a, std::int64_t b) {
  if (a < 0) {
    throw std::invalid_argument("binomial: negative upper index " + std::to_string(a));
  }
  if (b < 0 || b > a) return 0;
  b = std::min(b, a - b);
  // After step i the accumulator holds C(a - b + i, i), so each division is exact.
  BigInt result = 1;
  for (std::int64_t i = 1; i <= b; ++i) {
    result *= (a - b + i);
    result /= i;
  }
  return result;
}

BigInt power(std::int64_t base, std::int64_t exp) {
  if (exp < 0) throw std::invalid_argument("power: negative exponent");
  BigInt result = 1;
  BigInt b = base;
  while (exp > 0) {
    if (exp & 1) result *= b;
    b *= b;
    exp >>= 1;
  }
  return result;
}

bool divides(const BigInt& divisor, const BigInt& value) {
  if (divisor == 0) throw std::invalid_argument("divides: zero divisor");
  return value % divisor == 0;
}

bool isPrime(std::int64_t q) {
  if (q < 2) return false;
  for (std::int64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) return false;
  }
  return true;
}

std::string toString(const BigInt& value) { return value.str(); }

BigInt parseBigInt(const std::string& text) {
  std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
  if (start == text.size() ||
      !std::all_of(text.begin() + static_cast<std::ptrdiff_t>(start), text.end(),
                   [](unsigned char c) { return std::isdigit(c) != 0; })) {
    throw std::invalid_argument("not an integer: '" + text + "'");
  }
  BigInt value(text.substr(start));
  return text[0] == '-' ? BigInt(-value) : value;
}

}  // namespace insets
