#pragma once

#include <ostream>
#include <vector>

#include "avq/integer.hpp"

namespace avq {

/// Polynomial in one variable h, truncated at a fixed degree, with exact
/// integer coefficients. This is the graded ring Z[h]/(h^{order+1}) in which
/// all total Chern classes are computed.
///
/// Values are immutable after construction and every operation is a pure
/// function, so unrestricted concurrent use is safe.
class TruncSeries {
 public:
  /// Builds a series from the coefficients of h^0, h^1, ... Shorter input is
  /// zero-padded up to the truncation order.
  TruncSeries(std::vector<Int> coeffs, int order);

  static TruncSeries zero(int order);
  static TruncSeries one(int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }

  /// Coefficient of h^k; throws std::out_of_range when k exceeds the order.
  const Int& coeff(int k) const;

  const std::vector<Int>& coeffs() const { return coeffs_; }

  /// Multiplicative inverse in the truncated ring. Only series with constant
  /// coefficient exactly 1 are invertible here; that is the only inversion the
  /// Chern class computations need.
  TruncSeries invert() const;

  bool operator==(const TruncSeries&) const = default;

 private:
  std::vector<Int> coeffs_;  // length order+1, index = degree
};

/// Coefficient-wise sum. Both operands must have the same truncation order.
TruncSeries operator+(const TruncSeries& x, const TruncSeries& y);

/// Truncated convolution: degree-k coefficient is sum_{i+j=k} x_i y_j.
TruncSeries operator*(const TruncSeries& x, const TruncSeries& y);

/// (1 + c h)^m truncated at the given order, computed from binomial
/// coefficients directly rather than by repeated multiplication.
TruncSeries binomial_power(const Int& c, int m, int order);

std::ostream& operator<<(std::ostream& os, const TruncSeries& s);

}  // namespace avq
