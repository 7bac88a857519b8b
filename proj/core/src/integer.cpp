#include "avq/integer.hpp"

#include <stdexcept>

namespace avq {

Int isqrt(const Int& x) {
  if (x < 0) {
    throw std::domain_error("isqrt: negative argument");
  }
  return boost::multiprecision::sqrt(x);
}

bool is_perfect_square(const Int& x, Int& root) {
  if (x < 0) {
    return false;
  }
  Int remainder;
  root = boost::multiprecision::sqrt(x, remainder);
  return remainder == 0;
}

Int binomial(int n, int k) {
  if (k < 0 || k > n) {
    return 0;
  }
  if (k > n - k) {
    k = n - k;
  }
  Int result = 1;
  for (int i = 0; i < k; ++i) {
    result *= n - i;
    result /= i + 1;  // exact: product of i+1 consecutive integers
  }
  return result;
}

Int parse_int(const std::string& text) {
  if (text.empty()) {
    throw std::invalid_argument("parse_int: empty string");
  }
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) {
    throw std::invalid_argument("parse_int: sign without digits");
  }
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw std::invalid_argument("parse_int: malformed integer '" + text + "'");
    }
  }
  return Int(text);
}

std::string to_decimal(const Int& x) { return x.str(); }

}  // namespace avq
