#pragma once

#include <vector>

#include "avq/integer.hpp"

namespace avq {

/// Exact n!.
Int factorial(int n);

/// The crude exponential bound 2^{3d+1} on F_d.
Int crude_bound(int d);

/// Minimal d with (d+1)! > 2^{3d+1}. The inequality is then re-verified
/// exhaustively for every d up to `limit` (replacing the usual inductive
/// argument with exact checks); a failure anywhere raises InvariantError.
/// Requires limit >= 17.
int counting_crossover(int limit);

/// Number of Dyck paths of semilength n with no hill (no peak at height 1),
/// counted by literally enumerating every Dyck path and scanning it.
/// Exhaustive, so n is capped at 14; larger n throws.
Int fine_oracle(int n);

/// Same count as fine_oracle, computed by a dynamic program over path height
/// profiles. Polynomial time, no cap.
Int fine(int n);

/// Bounds summary for one dimension: how F_d compares against the crude
/// exponential bound and against (d+1)!.
struct BoundReport {
  int d = 0;
  Int f_d;
  Int crude;                         // 2^{3d+1}
  Int factorial_next;                // (d+1)!
  bool crude_dominates = false;      // f_d <= crude
  bool factorial_wins_exact = false; // (d+1)! > f_d
  bool factorial_wins_crude = false; // (d+1)! > crude

  bool operator==(const BoundReport&) const = default;
};

BoundReport bound_report(int d);

/// One row of the F_d / Fine side-by-side report.
struct FineRow {
  int n = 0;
  Int f_d;     // F_n
  Int fine_n;  // fine(n)

  bool operator==(const FineRow&) const = default;
};

/// The two sequences side by side for n = 1..d_max, for inspection only.
/// No identity between them is asserted anywhere in this library.
std::vector<FineRow> fine_comparison_report(int d_max);

}  // namespace avq
