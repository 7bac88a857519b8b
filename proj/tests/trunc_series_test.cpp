#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "avq/trunc_series.hpp"

using avq::Int;
using avq::TruncSeries;

TEST_CASE("construction pads short input and remembers the order") {
  const TruncSeries s({1, 2}, 4);
  CHECK(s.order() == 4);
  CHECK(s.coeff(0) == 1);
  CHECK(s.coeff(1) == 2);
  CHECK(s.coeff(2) == 0);
  CHECK(s.coeff(4) == 0);
}

TEST_CASE("construction rejects bad shapes") {
  CHECK_THROWS_AS(TruncSeries({1}, -1), std::invalid_argument);
  CHECK_THROWS_AS(TruncSeries({1, 2, 3, 4}, 2), std::invalid_argument);
  CHECK_THROWS_AS(TruncSeries({1, 2}, 1).coeff(2), std::out_of_range);
  CHECK_THROWS_AS(TruncSeries({1, 2}, 1).coeff(-1), std::out_of_range);
}

TEST_CASE("zero and one are the ring constants") {
  CHECK(TruncSeries::zero(3) == TruncSeries({0}, 3));
  CHECK(TruncSeries::one(3) == TruncSeries({1}, 3));
  const TruncSeries s({5, -2, 7}, 2);
  CHECK(s + TruncSeries::zero(2) == s);
  CHECK(s * TruncSeries::one(2) == s);
}

TEST_CASE("multiplication is truncated convolution") {
  const TruncSeries one_plus_h({1, 1}, 2);
  CHECK(one_plus_h * one_plus_h == TruncSeries({1, 2, 1}, 2));

  const TruncSeries t({1, 1}, 1);
  CHECK(t * t == TruncSeries({1, 2}, 1));
}

TEST_CASE("operands of mixed order are rejected") {
  const TruncSeries a({1, 1}, 2);
  const TruncSeries b({1, 1}, 3);
  CHECK_THROWS_AS(a + b, std::invalid_argument);
  CHECK_THROWS_AS(a * b, std::invalid_argument);
}

TEST_CASE("binomial_power expands (1 + ch)^m") {
  CHECK(avq::binomial_power(Int(1), 6, 2) == TruncSeries({1, 6, 15}, 2));
  CHECK(avq::binomial_power(Int(2), 3, 3) == TruncSeries({1, 6, 12, 8}, 3));
  CHECK(avq::binomial_power(Int(-1), 2, 4) == TruncSeries({1, -2, 1, 0, 0}, 4));
  CHECK(avq::binomial_power(Int(5), 0, 2) == TruncSeries::one(2));
  CHECK_THROWS_AS(avq::binomial_power(Int(1), -1, 2), std::invalid_argument);
}

TEST_CASE("inverse of 1 + 2h is the alternating geometric series") {
  const TruncSeries s({1, 2}, 4);
  CHECK(s.invert() == TruncSeries({1, -2, 4, -8, 16}, 4));
}

TEST_CASE("only constant coefficient one is invertible") {
  CHECK_THROWS_AS(TruncSeries({2, 1}, 2).invert(), std::domain_error);
  CHECK_THROWS_AS(TruncSeries::zero(2).invert(), std::domain_error);
}

TEST_CASE("random series satisfy the ring laws") {
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<int> coeff_dist(-9, 9);
  std::uniform_int_distribution<int> order_dist(0, 32);
  for (int trial = 0; trial < 60; ++trial) {
    const int order = order_dist(rng);
    auto random_series = [&] {
      std::vector<Int> c(static_cast<std::size_t>(order) + 1);
      for (auto& x : c) {
        x = coeff_dist(rng);
      }
      return TruncSeries(std::move(c), order);
    };
    const TruncSeries a = random_series();
    const TruncSeries b = random_series();
    const TruncSeries c = random_series();
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("random unit series invert and round-trip") {
  std::mt19937 rng(20240818);
  std::uniform_int_distribution<int> coeff_dist(-9, 9);
  std::uniform_int_distribution<int> order_dist(0, 32);
  for (int trial = 0; trial < 60; ++trial) {
    const int order = order_dist(rng);
    std::vector<Int> c(static_cast<std::size_t>(order) + 1);
    c[0] = 1;
    for (std::size_t k = 1; k < c.size(); ++k) {
      c[k] = coeff_dist(rng);
    }
    const TruncSeries s(std::move(c), order);
    const TruncSeries inv = s.invert();
    CHECK(s * inv == TruncSeries::one(order));
    CHECK(inv.invert() == s);
  }
}

TEST_CASE("streaming prints the coefficient list") {
  std::ostringstream out;
  out << TruncSeries({1, 2, 2}, 2);
  CHECK(out.str() == "[1, 2, 2]");
}
