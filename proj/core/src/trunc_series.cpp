#include "avq/trunc_series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace avq {

TruncSeries::TruncSeries(std::vector<Int> coeffs, int order) {
  if (order < 0) {
    throw std::invalid_argument("TruncSeries: negative order");
  }
  if (static_cast<int>(coeffs.size()) > order + 1) {
    throw std::invalid_argument(
        "TruncSeries: " + std::to_string(coeffs.size()) +
        " coefficients exceed order " + std::to_string(order));
  }
  coeffs_ = std::move(coeffs);
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

TruncSeries TruncSeries::zero(int order) { return TruncSeries({}, order); }

TruncSeries TruncSeries::one(int order) { return TruncSeries({Int(1)}, order); }

const Int& TruncSeries::coeff(int k) const {
  if (k < 0 || k > order()) {
    throw std::out_of_range("TruncSeries::coeff: degree " + std::to_string(k) +
                            " outside order " + std::to_string(order()));
  }
  return coeffs_[static_cast<std::size_t>(k)];
}

static void require_same_order(const TruncSeries& x, const TruncSeries& y) {
  if (x.order() != y.order()) {
    throw std::invalid_argument("truncation order mismatch: " +
                                std::to_string(x.order()) + " vs " +
                                std::to_string(y.order()));
  }
}

TruncSeries operator+(const TruncSeries& x, const TruncSeries& y) {
  require_same_order(x, y);
  std::vector<Int> sum(x.coeffs());
  for (int k = 0; k <= y.order(); ++k) {
    sum[static_cast<std::size_t>(k)] += y.coeff(k);
  }
  return TruncSeries(std::move(sum), x.order());
}

TruncSeries operator*(const TruncSeries& x, const TruncSeries& y) {
  require_same_order(x, y);
  const int n = x.order();
  std::vector<Int> prod(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    const Int& xi = x.coeff(i);
    if (xi == 0) {
      continue;
    }
    for (int j = 0; i + j <= n; ++j) {
      prod[static_cast<std::size_t>(i + j)] += xi * y.coeff(j);
    }
  }
  return TruncSeries(std::move(prod), n);
}

TruncSeries TruncSeries::invert() const {
  if (coeffs_[0] != 1) {
    throw std::domain_error(
        "TruncSeries::invert: constant coefficient must be 1, got " +
        coeffs_[0].str());
  }
  // Back-substitution: with x_0 = 1 the inverse y satisfies
  // y_k = -sum_{i=1..k} x_i y_{k-i}.
  const int n = order();
  std::vector<Int> inv(static_cast<std::size_t>(n) + 1);
  inv[0] = 1;
  for (int k = 1; k <= n; ++k) {
    Int acc = 0;
    for (int i = 1; i <= k; ++i) {
      acc += coeffs_[static_cast<std::size_t>(i)] *
             inv[static_cast<std::size_t>(k - i)];
    }
    inv[static_cast<std::size_t>(k)] = -acc;
  }
  return TruncSeries(std::move(inv), n);
}

TruncSeries binomial_power(const Int& c, int m, int order) {
  if (m < 0) {
    throw std::invalid_argument("binomial_power: negative exponent");
  }
  std::vector<Int> coeffs(static_cast<std::size_t>(order) + 1);
  Int term = 1;  // binom(m, k) * c^k
  const int top = std::min(m, order);
  for (int k = 0; k <= top; ++k) {
    coeffs[static_cast<std::size_t>(k)] = term;
    term *= m - k;
    term /= k + 1;
    term *= c;
  }
  return TruncSeries(std::move(coeffs), order);
}

std::ostream& operator<<(std::ostream& os, const TruncSeries& s) {
  os << '[';
  for (int k = 0; k <= s.order(); ++k) {
    if (k > 0) {
      os << ", ";
    }
    os << s.coeff(k);
  }
  return os << ']';
}

}  // namespace avq
