#pragma once

#include "avq/integer.hpp"
#include "avq/trunc_series.hpp"

namespace avq {

/// Class of a half-dimensional cycle on a smooth even-dimensional quadric
/// Q^{2d}: the middle Chow group is generated by two classes alpha and beta,
/// and a cycle is a*alpha + b*beta. The relations used throughout are
/// alpha^2 = beta^2 = 1 and alpha.beta = 0, for every d. (Some references
/// state middle relations that alternate with d mod 2; this library fixes
/// the convention above unconditionally.)
struct MiddleClass {
  Int a;
  Int b;
  int d;  // half-dimension of the ambient quadric, >= 1

  MiddleClass(Int a_, Int b_, int d_);
};

/// Total Chern class of the tangent bundle of a smooth n-dimensional quadric:
/// (1+h)^{n+2} (1+2h)^{-1}, truncated at order n since classes above the
/// dimension vanish. h is the restricted hyperplane class.
TruncSeries chern_total_tangent_quadric(int n);

/// Total Chern class of the normal bundle of a d-dimensional abelian variety
/// embedded in Q^{2d}. The tangent bundle of an abelian variety is trivial,
/// so this is the restricted tangent class of the quadric itself:
/// (1+h)^{2d+2} (1+2h)^{-1} truncated at order d.
TruncSeries chern_total_normal(int d);

/// F_d = sum_{k=0}^{d} binom(2d+2, k) (-2)^{d-k}, the coefficient of the top
/// normal bundle Chern class. Evaluated with an incremental binomial
/// recurrence, so the cost is linear in d and d in the thousands is fine.
Int f_closed(int d);

/// F_d extracted as the top coefficient of chern_total_normal(d).
/// Independent route; must agree with f_closed for every d.
Int f_series(int d);

/// Intersection number of two middle classes: a1*a2 + b1*b2.
Int intersect_middle(const MiddleClass& x, const MiddleClass& y);

/// Degree of the cycle, i.e. its pairing with the d-th power of the
/// hyperplane class: a + b.
Int degree_middle(const MiddleClass& x);

/// Whether a middle class is effective in the sense used by the elimination
/// engine: both coordinates nonnegative.
bool is_effective(const MiddleClass& x);

/// True iff x.x == F_d * deg(x), the self-intersection constraint every
/// abelian subvariety class must satisfy.
bool self_intersection_check(const MiddleClass& x);

}  // namespace avq
