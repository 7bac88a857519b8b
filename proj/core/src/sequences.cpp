#include "avq/sequences.hpp"

#include <stdexcept>
#include <string>

#include "avq/chow.hpp"
#include "avq/errors.hpp"

namespace avq {

Int factorial(int n) {
  if (n < 0) {
    throw std::invalid_argument("factorial: negative argument");
  }
  Int result = 1;
  for (int i = 2; i <= n; ++i) {
    result *= i;
  }
  return result;
}

Int crude_bound(int d) {
  if (d < 1) {
    throw std::invalid_argument("crude_bound: d must be >= 1");
  }
  return Int(1) << (3 * d + 1);
}

int counting_crossover(int limit) {
  if (limit < 17) {
    throw std::invalid_argument("counting_crossover: limit must be >= 17");
  }
  Int fact = 2;   // (d+1)! at d = 1
  Int crude = 16; // 2^{3d+1} at d = 1
  int first = 0;
  for (int d = 1; d <= limit; ++d) {
    const bool wins = fact > crude;
    if (first == 0 && wins) {
      first = d;
    } else if (first != 0 && !wins) {
      throw InvariantError("counting_crossover: (d+1)! > 2^{3d+1} fails at d=" +
                           std::to_string(d) +
                           " after holding at d=" + std::to_string(first));
    }
    fact *= d + 2;
    crude <<= 3;
  }
  if (first == 0) {
    throw InvariantError("counting_crossover: no crossover up to limit " +
                         std::to_string(limit));
  }
  return first;
}

namespace {

// Walks every Dyck path of semilength n (up = +1, down = -1), records it, and
// counts the completed paths that contain no hill, i.e. no up step from the
// ground followed immediately by a down step.
class DyckWalker {
 public:
  explicit DyckWalker(int n) : n_(n), steps_(2 * n) {}

  long long count_hill_free() {
    count_ = 0;
    if (n_ == 0) {
      return 1;  // the empty path has no hill
    }
    walk(0, 0);
    return count_;
  }

 private:
  void walk(int pos, int height) {
    if (pos == 2 * n_) {
      if (!has_hill()) {
        ++count_;
      }
      return;
    }
    if (height < 2 * n_ - pos) {  // room to come back down
      steps_[pos] = +1;
      walk(pos + 1, height + 1);
    }
    if (height > 0) {
      steps_[pos] = -1;
      walk(pos + 1, height - 1);
    }
  }

  bool has_hill() const {
    int height = 0;
    for (int i = 0; i + 1 < 2 * n_; ++i) {
      if (height == 0 && steps_[i] == +1 && steps_[i + 1] == -1) {
        return true;
      }
      height += steps_[i];
    }
    return false;
  }

  int n_;
  std::vector<int> steps_;
  long long count_ = 0;
};

}  // namespace

Int fine_oracle(int n) {
  if (n < 0) {
    throw std::invalid_argument("fine_oracle: negative argument");
  }
  if (n > 14) {
    throw std::invalid_argument(
        "fine_oracle: n = " + std::to_string(n) +
        " exceeds the exhaustive enumeration budget (n <= 14)");
  }
  return Int(DyckWalker(n).count_hill_free());
}

Int fine(int n) {
  if (n < 0) {
    throw std::invalid_argument("fine: negative argument");
  }
  // Dynamic program over height profiles. State: current height plus whether
  // the previous step was an up step from the ground (the only situation in
  // which a down step would complete a hill).
  const int steps = 2 * n;
  // state[h][flag]
  std::vector<std::vector<Int>> cur(static_cast<std::size_t>(n) + 1,
                                    std::vector<Int>(2));
  auto next = cur;
  cur[0][0] = 1;
  for (int s = 0; s < steps; ++s) {
    for (auto& row : next) {
      row[0] = 0;
      row[1] = 0;
    }
    const int hmax = std::min(s, n);
    for (int h = 0; h <= hmax; ++h) {
      for (int flag = 0; flag < 2; ++flag) {
        const Int& ways = cur[static_cast<std::size_t>(h)][flag];
        if (ways == 0) {
          continue;
        }
        if (h + 1 <= n) {  // up step; reaching height 1 from the ground arms the flag
          next[static_cast<std::size_t>(h + 1)][h == 0 ? 1 : 0] += ways;
        }
        if (h > 0 && !(flag == 1 && h == 1)) {  // down step; forbidden if it closes a hill
          next[static_cast<std::size_t>(h - 1)][0] += ways;
        }
      }
    }
    std::swap(cur, next);
  }
  return cur[0][0] + cur[0][1];
}

BoundReport bound_report(int d) {
  if (d < 1) {
    throw std::invalid_argument("bound_report: d must be >= 1");
  }
  BoundReport report;
  report.d = d;
  report.f_d = f_closed(d);
  report.crude = crude_bound(d);
  report.factorial_next = factorial(d + 1);
  report.crude_dominates = report.f_d <= report.crude;
  report.factorial_wins_exact = report.factorial_next > report.f_d;
  report.factorial_wins_crude = report.factorial_next > report.crude;
  return report;
}

std::vector<FineRow> fine_comparison_report(int d_max) {
  if (d_max < 1) {
    throw std::invalid_argument("fine_comparison_report: d_max must be >= 1");
  }
  std::vector<FineRow> rows;
  rows.reserve(static_cast<std::size_t>(d_max));
  for (int n = 1; n <= d_max; ++n) {
    rows.push_back({n, f_closed(n), fine(n)});
  }
  return rows;
}

}  // namespace avq
