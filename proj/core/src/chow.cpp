#include "avq/chow.hpp"

#include <stdexcept>
#include <string>

namespace avq {

MiddleClass::MiddleClass(Int a_, Int b_, int d_)
    : a(std::move(a_)), b(std::move(b_)), d(d_) {
  if (d < 1) {
    throw std::invalid_argument("MiddleClass: d must be >= 1, got " +
                                std::to_string(d));
  }
}

static TruncSeries quadric_tangent_class(int exponent, int order) {
  // (1+h)^exponent * (1+2h)^{-1} in Z[h]/(h^{order+1})
  const TruncSeries numerator = binomial_power(Int(1), exponent, order);
  const TruncSeries denominator({Int(1), Int(2)}, order);
  return numerator * denominator.invert();
}

TruncSeries chern_total_tangent_quadric(int n) {
  if (n < 1) {
    throw std::invalid_argument("chern_total_tangent_quadric: n must be >= 1");
  }
  return quadric_tangent_class(n + 2, n);
}

TruncSeries chern_total_normal(int d) {
  if (d < 1) {
    throw std::invalid_argument("chern_total_normal: d must be >= 1");
  }
  return quadric_tangent_class(2 * d + 2, d);
}

Int f_closed(int d) {
  if (d < 1) {
    throw std::invalid_argument("f_closed: d must be >= 1");
  }
  // sum_{k=0}^{d} binom(2d+2, k) (-2)^{d-k}, with the binomial updated by the
  // usual multiply/divide recurrence and the power of -2 divided down from
  // (-2)^d, so the whole sum costs O(d) big-integer operations.
  const int n = 2 * d + 2;
  Int binom = 1;           // binom(n, k)
  Int power = Int(1) << d; // (-2)^{d-k}
  if (d % 2 != 0) {
    power = -power;
  }
  Int sum = 0;
  for (int k = 0; k <= d; ++k) {
    sum += binom * power;
    binom *= n - k;
    binom /= k + 1;
    power /= -2;
  }
  return sum;
}

Int f_series(int d) {
  return chern_total_normal(d).coeff(d);
}

Int intersect_middle(const MiddleClass& x, const MiddleClass& y) {
  if (x.d != y.d) {
    throw std::invalid_argument("intersect_middle: quadric dimension mismatch (" +
                                std::to_string(x.d) + " vs " +
                                std::to_string(y.d) + ")");
  }
  // alpha^2 = beta^2 = 1, alpha.beta = 0
  return x.a * y.a + x.b * y.b;
}

Int degree_middle(const MiddleClass& x) { return x.a + x.b; }

bool is_effective(const MiddleClass& x) { return x.a >= 0 && x.b >= 0; }

bool self_intersection_check(const MiddleClass& x) {
  return intersect_middle(x, x) == f_closed(x.d) * degree_middle(x);
}

}  // namespace avq
