// Acceptance gate: one line of output per criterion, nonzero exit when any
// criterion fails. The first program argument must be the path to the avq
// command line binary, which the last criterion drives end to end.

#include <sys/wait.h>

#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "avq/chow.hpp"
#include "avq/feasibility.hpp"
#include "avq/sequences.hpp"
#include "avq/serialize.hpp"
#include "avq/trunc_series.hpp"

using avq::Int;
using avq::IntPair;
using avq::PolarizationType;
using avq::TruncSeries;

namespace {

std::string cli_path;

struct RunResult {
  std::string out;
  int exit_code = -1;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = "'" + cli_path + "' " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) {
    throw std::runtime_error("popen failed for: " + cmd);
  }
  RunResult result;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) {
    result.out.append(buf, n);
  }
  const int status = pclose(pipe);
  if (WIFEXITED(status)) {
    result.exit_code = WEXITSTATUS(status);
  }
  return result;
}

bool criterion_1_fd_both_routes(std::string& why) {
  const std::pair<int, int> cases[] = {{2, 7}, {3, 24}};
  for (const auto& [d, expected] : cases) {
    if (avq::f_closed(d) != expected) {
      why = "f_closed(" + std::to_string(d) + ") != " + std::to_string(expected);
      return false;
    }
    if (avq::f_series(d) != expected) {
      why = "f_series(" + std::to_string(d) + ") != " + std::to_string(expected);
      return false;
    }
  }
  return true;
}

bool criterion_2_unique_positive_solution(std::string& why) {
  const auto sols = avq::circle_solutions(7);
  std::vector<IntPair> positive;
  for (const auto& p : sols) {
    if (p.first > 0 && p.second > 0) {
      positive.push_back(p);
    }
  }
  if (positive != std::vector<IntPair>{{7, 7}}) {
    why = "positive solutions of F=7 are not exactly (7,7)";
    return false;
  }
  const Int degree = positive[0].first + positive[0].second;
  if (degree != 14) {
    why = "degree of (7,7) is not 14";
    return false;
  }
  if (avq::h0_from_degree(degree, 2) != 7) {
    why = "h0 of degree 14 at d=2 is not 7";
    return false;
  }
  const auto types = avq::enumerate_polarization_types(2, 7);
  if (types != std::vector<PolarizationType>{PolarizationType({1, 7})}) {
    why = "types of (g=2, h0=7) are not exactly (1,7)";
    return false;
  }
  return true;
}

bool criterion_3_quadric_count(std::string& why) {
  const Int quadrics = avq::quadric_space_dimension(6);
  const Int sections = avq::double_type(PolarizationType({1, 7})).second;
  if (quadrics != 28 || sections != 28 || quadrics - sections != 0) {
    why = "quadric count 28 - 28 = 0 fails";
    return false;
  }
  const auto apps = avq::apply_rules(2, {PolarizationType({1, 7})});
  if (apps.size() != 1 || apps[0].rule_id != avq::RuleId::R3_LAZARSFELD_17) {
    why = "R3 did not fire on (1,7) at d=2";
    return false;
  }
  if (avq::eliminate(2).verdict != avq::Verdict::ELIMINATED_BY_RULES) {
    why = "eliminate(2) verdict is not ELIMINATED_BY_RULES";
    return false;
  }
  return true;
}

bool criterion_4_threefold_case(std::string& why) {
  if (avq::min_degree(3) != 48 || avq::max_degree(24).first != 48) {
    why = "degree window at d=3 is not [48, 48]";
    return false;
  }
  const auto rec = avq::eliminate(3);
  if (rec.surviving_candidates.size() != 1 ||
      rec.surviving_candidates[0].pair != IntPair{24, 24}) {
    why = "surviving candidate at d=3 is not exactly (24,24)";
    return false;
  }
  const auto& types = rec.surviving_candidates[0].types;
  if (types.size() != 3) {
    why = "type enumeration for (g=3, h0=8) did not return three types";
    return false;
  }
  const bool r1 = types[0].type == PolarizationType({1, 1, 8}) &&
                  types[0].status == avq::TypeStatus::Eliminated &&
                  types[0].rule == avq::RuleId::R1_IYER_ONES_N;
  const bool r2 = types[1].type == PolarizationType({1, 2, 4}) &&
                  types[1].status == avq::TypeStatus::Eliminated &&
                  types[1].rule == avq::RuleId::R2_IYER_124;
  const bool omitted = types[2].type == PolarizationType({2, 2, 2}) &&
                       types[2].status == avq::TypeStatus::PaperOmitted &&
                       types[2].note == "paper-omitted; no shipped rule applies";
  if (!r1) {
    why = "R1 did not strike (1,1,8)";
    return false;
  }
  if (!r2) {
    why = "R2 did not strike (1,2,4)";
    return false;
  }
  if (!omitted) {
    why = "(2,2,2) is not reported as paper-omitted";
    return false;
  }
  return true;
}

bool criterion_5_crossover(std::string& why) {
  if (avq::counting_crossover(200) != 17) {
    why = "counting_crossover(200) != 17";
    return false;
  }
  if (!(avq::factorial(17) < Int(1) << 49)) {
    why = "d=16 does not fail: 17! >= 2^49";
    return false;
  }
  return true;
}

bool criterion_6_factorial_vs_fd(std::string& why) {
  for (int d = 1; d <= 200; ++d) {
    const bool wins = avq::factorial(d + 1) > avq::f_closed(d);
    if (wins != (d >= 4)) {
      why = "(d+1)! > F_d has the wrong truth value at d=" + std::to_string(d);
      return false;
    }
    if (avq::f_closed(d) > avq::crude_bound(d)) {
      why = "F_d exceeds 2^{3d+1} at d=" + std::to_string(d);
      return false;
    }
  }
  return true;
}

bool criterion_7_table_verdicts(std::string& why) {
  for (int d = 1; d <= 100; ++d) {
    const auto rec = avq::eliminate(d);
    avq::Verdict expected = avq::Verdict::ELIMINATED_BY_COUNTING;
    if (d == 1) {
      expected = avq::Verdict::ALLOWED_CLASSICAL;
    } else if (d <= 3) {
      expected = avq::Verdict::ELIMINATED_BY_RULES;
    }
    if (rec.verdict != expected) {
      why = "verdict at d=" + std::to_string(d) + " is " +
            avq::verdict_name(rec.verdict) + ", expected " +
            avq::verdict_name(expected);
      return false;
    }
    if (d == 1 && (rec.surviving_candidates.size() != 1 ||
                   rec.surviving_candidates[0].pair != IntPair{2, 2})) {
      why = "d=1 candidate is not (2,2)";
      return false;
    }
  }
  return true;
}

bool series_laws(std::string& why) {
  std::mt19937 rng(987654321);
  std::uniform_int_distribution<int> coeff_dist(-20, 20);
  std::uniform_int_distribution<int> order_dist(0, 32);
  for (int trial = 0; trial < 200; ++trial) {
    const int order = order_dist(rng);
    auto random_series = [&](bool unit) {
      std::vector<Int> c(static_cast<std::size_t>(order) + 1);
      for (auto& x : c) {
        x = coeff_dist(rng);
      }
      if (unit) {
        c[0] = 1;
      }
      return TruncSeries(std::move(c), order);
    };
    const TruncSeries a = random_series(false);
    const TruncSeries b = random_series(false);
    const TruncSeries c = random_series(false);
    if (!(a * b == b * a && (a * b) * c == a * (b * c) &&
          a * (b + c) == a * b + a * c && a + b == b + a)) {
      why = "series ring law failed at trial " + std::to_string(trial);
      return false;
    }
    const TruncSeries u = random_series(true);
    if (!(u * u.invert() == TruncSeries::one(order) &&
          u.invert().invert() == u)) {
      why = "series inverse round-trip failed at trial " + std::to_string(trial);
      return false;
    }
  }
  return true;
}

// The equation a^2 + b^2 = F(a+b) rearranged as a(a-F) + b(b-F) = 0, scanned
// as a literal double loop in 32-bit arithmetic. The magnitudes stay under
// 2 * 6000 * 8000 < 2^31 for F <= 2000, and the branch-free inner loop
// vectorizes, which is what makes the full sweep affordable.
bool circle_oracle_sweep(std::string& why) {
  long total = 0;
  for (int f = 1; f <= 2000; ++f) {
    std::vector<IntPair> expected;
    const int lo = -2 * f;
    const int hi = 3 * f;
    for (int a = lo; a <= hi; ++a) {
      const int t = a * (a - f);
      int count = 0;
      for (int b = lo; b <= hi; ++b) {
        count += static_cast<int>(b * (b - f) + t == 0);
      }
      if (count > 0) {
        for (int b = lo; b <= hi; ++b) {
          if (b * (b - f) + t == 0) {
            expected.emplace_back(a, b);
          }
        }
      }
    }
    const auto got = avq::circle_solutions(f);
    if (got != expected) {
      why = "circle_solutions(" + std::to_string(f) +
            ") disagrees with the brute-force oracle";
      return false;
    }
    const std::set<IntPair> set(got.begin(), got.end());
    if (set.count({Int(0), Int(0)}) == 0 || set.count({Int(f), Int(f)}) == 0) {
      why = "mandatory solutions missing for F=" + std::to_string(f);
      return false;
    }
    for (const auto& [a, b] : set) {
      if (set.count({b, a}) == 0 || set.count({f - a, f - b}) == 0) {
        why = "symmetry violated for F=" + std::to_string(f);
        return false;
      }
      if (a + b < 0 || a + b > 2 * f) {
        why = "degree out of range for F=" + std::to_string(f);
        return false;
      }
    }
    total += static_cast<long>(got.size());
  }
  if (total != 23848) {
    why = "total solution count over F <= 2000 is " + std::to_string(total) +
          ", expected 23848";
    return false;
  }
  return true;
}

bool criterion_8_property_suites(std::string& why) {
  if (!series_laws(why)) {
    return false;
  }
  if (!circle_oracle_sweep(why)) {
    return false;
  }
  for (int n = 0; n <= 12; ++n) {
    if (avq::fine(n) != avq::fine_oracle(n)) {
      why = "fine(" + std::to_string(n) + ") disagrees with the Dyck oracle";
      return false;
    }
  }
  for (int n = 1; n <= 64; ++n) {
    if (avq::chern_total_tangent_quadric(n).coeff(1) != n) {
      why = "degree-1 Chern coefficient wrong at n=" + std::to_string(n);
      return false;
    }
  }
  return true;
}

bool criterion_9_cli_golden(std::string& why) {
  if (cli_path.empty()) {
    why = "no CLI path given on the command line";
    return false;
  }
  const RunResult first = run_cli("table --max-d 20 --format json");
  const RunResult second = run_cli("table --max-d 20 --format json");
  if (first.exit_code != 0 || second.exit_code != 0) {
    why = "table --max-d 20 --format json did not exit 0";
    return false;
  }
  if (first.out != second.out) {
    why = "two identical table invocations differ byte-wise";
    return false;
  }
  const auto parsed = nlohmann::json::parse(first.out);
  if (parsed.size() != 20) {
    why = "json table does not have 20 rows";
    return false;
  }
  for (int d = 1; d <= 20; ++d) {
    if (avq::record_from_json(parsed[d - 1]) != avq::eliminate(d)) {
      why = "json row for d=" + std::to_string(d) +
            " does not round-trip to the library record";
      return false;
    }
  }
  if (run_cli("table --max-d 2").exit_code != 2) {
    why = "table --max-d 2 did not exit 2";
    return false;
  }
  if (run_cli("chern --dim 0").exit_code != 2) {
    why = "chern --dim 0 did not exit 2";
    return false;
  }
  if (run_cli("fd --d 3").exit_code != 0) {
    why = "fd --d 3 did not exit 0";
    return false;
  }
  return true;
}

struct Criterion {
  int id;
  const char* summary;
  std::function<bool(std::string&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) {
    cli_path = argv[1];
  }
  const std::vector<Criterion> criteria = {
      {1, "F_2 = 7 and F_3 = 24 by both the closed sum and the series route",
       criterion_1_fd_both_routes},
      {2, "F = 7 has the unique positive solution (7,7) with degree 14, h0 7, "
          "type (1,7)",
       criterion_2_unique_positive_solution},
      {3, "quadric count 28 - 28 = 0 fires R3 and eliminates d=2 by rules",
       criterion_3_quadric_count},
      {4, "d=3 window [48,48], candidate (24,24), R1 and R2 strike, (2,2,2) "
          "reported paper-omitted",
       criterion_4_threefold_case},
      {5, "counting crossover at d=17 with d=16 failing exactly",
       criterion_5_crossover},
      {6, "(d+1)! > F_d exactly for 4 <= d <= 200 and F_d <= 2^{3d+1} "
          "throughout",
       criterion_6_factorial_vs_fd},
      {7, "verdict table for d = 1..100 matches the theorem",
       criterion_7_table_verdicts},
      {8, "property suites: ring laws, circle oracle to F = 2000, symmetries, "
          "fine numbers, Chern linear term",
       criterion_8_property_suites},
      {9, "CLI json table is byte-stable, round-trips, and exit codes conform",
       criterion_9_cli_golden},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    std::string why;
    bool ok = false;
    try {
      ok = criterion.run(why);
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    if (ok) {
      std::cout << "criterion " << criterion.id << ": PASS  "
                << criterion.summary << '\n';
    } else {
      ++failures;
      std::cout << "criterion " << criterion.id << ": FAIL  "
                << criterion.summary << "  [" << why << "]" << '\n';
    }
  }
  return failures == 0 ? 0 : 1;
}
