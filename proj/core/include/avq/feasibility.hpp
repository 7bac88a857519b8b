#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "avq/integer.hpp"

namespace avq {

using IntPair = std::pair<Int, Int>;

/// Polarization type of an ample line bundle on a g-dimensional abelian
/// variety: a chain of elementary divisors d_1 | d_2 | ... | d_g. The number
/// of sections h^0 is the product of the parts.
struct PolarizationType {
  std::vector<Int> parts;

  /// Validates that parts is nonempty, positive and adjacent-divisible.
  explicit PolarizationType(std::vector<Int> parts_);

  int g() const { return static_cast<int>(parts.size()); }
  Int product() const;

  bool operator==(const PolarizationType&) const = default;
};

/// All integer pairs (a, b), negatives included, with a^2 + b^2 = F(a + b).
/// Geometrically these are the lattice points of a circle centered at
/// (F/2, F/2); arithmetically the scan uses the identity
/// (2a-F)^2 + (2b-F)^2 = 2F^2 and integer square roots, never reals.
/// Result is sorted lexicographically and duplicate-free.
std::vector<IntPair> circle_solutions(const Int& f);

/// The degree bound deg(A) <= 2F together with the pair attaining it.
/// Verifies that (F, F) actually solves the constraint.
std::pair<Int, IntPair> max_degree(const Int& f);

/// The Riemann-Roch degree lower bound 2*(d+1)!. Only a valid bound when the
/// variety spans the ambient projective space, which holds for d > 2;
/// elimination records carry that annotation explicitly.
Int min_degree(int d);

/// h^0 of the restricted hyperplane bundle: deg / d!, exactly. A degree not
/// divisible by d! cannot belong to any candidate and raises
/// ArithmeticConsistencyError.
Int h0_from_degree(const Int& deg, int d);

/// All divisor chains d_1 | ... | d_g with product h0, sorted
/// lexicographically, complete and duplicate-free.
std::vector<PolarizationType> enumerate_polarization_types(int g, const Int& h0);

/// Doubling the bundle doubles every part; returns the doubled type and its
/// h^0 = 2^g * product(parts).
std::pair<PolarizationType, Int> double_type(const PolarizationType& t);

/// Dimension of the space of quadrics in projective N-space: binom(N+2, 2).
Int quadric_space_dimension(int n);

// ---------------------------------------------------------------------------
// Citation-carrying rule base
//
// The three external theorems the elimination argument leans on are encoded
// as data, not code branches: each rule carries a fixed verbatim quote from
// the result it invokes and is matched structurally against candidate types.
// None of them is re-derived here.
// ---------------------------------------------------------------------------

enum class RuleId {
  R1_IYER_ONES_N,    // Iyer: type (1,...,1,N) never very ample
  R2_IYER_124,       // Iyer + openness of very ampleness: (1,2,4) on threefolds
  R3_LAZARSFELD_17,  // Lazarsfeld: (1,7) projectively normal; quadric count
};

struct RuleApplication {
  RuleId rule_id = RuleId::R1_IYER_ONES_N;
  std::string citation;      // fixed verbatim quote carried by the rule
  PolarizationType subject;  // the matched type
  std::string conclusion;

  bool operator==(const RuleApplication&) const = default;
};

/// Applies the rule base to candidate types, deterministically in the order
/// R3, R1, R2. A type struck by an earlier rule is not offered to later ones.
///
/// Matching:
///  - R3: the type (1,7) in dimension 2. Fires only after recomputing the
///    quadric count: the doubled type has h^0 = 28 and the space of quadrics
///    in projective 6-space has dimension 28, difference 0.
///  - R1: any type of shape (1,...,1,N) with N > 1. The quoted statement is
///    for the trailing part N = 2d+1 specifically; the broader structural
///    match reproduces how the published argument uses it.
///  - R2: exactly (1,2,4) in dimension 3.
std::vector<RuleApplication> apply_rules(
    int d, const std::vector<PolarizationType>& candidates);

// ---------------------------------------------------------------------------
// Per-dimension elimination
// ---------------------------------------------------------------------------

enum class Verdict {
  ALLOWED_CLASSICAL,       // d = 1: the classical bidegree (2,2) elliptic curve
  ELIMINATED_BY_COUNTING,  // (d+1)! > F_d forces min degree > max degree
  ELIMINATED_BY_RULES,     // every surviving candidate struck by the rule base
  UNRESOLVED,              // must never happen with the shipped rule base
};

enum class TypeStatus {
  Eliminated,    // struck by a rule application
  PaperOmitted,  // absent from the published case analysis; no rule applies
  Open,          // no rule applies and no omission is recorded
};

/// One polarization type of a surviving candidate together with what the rule
/// stage concluded about it.
struct TypeAssessment {
  PolarizationType type;
  TypeStatus status = TypeStatus::Open;
  std::optional<RuleId> rule;  // set when status == Eliminated
  std::string note;            // set when status == PaperOmitted

  explicit TypeAssessment(PolarizationType type_) : type(std::move(type_)) {}

  bool operator==(const TypeAssessment&) const = default;
};

/// A candidate class that passed the degree and divisibility filters, with
/// its derived invariants and assessed polarization types.
struct Candidate {
  IntPair pair;
  Int degree;
  Int h0;
  std::vector<TypeAssessment> types;

  bool operator==(const Candidate&) const = default;
};

/// Full audit of one dimension.
///
/// all_solutions lists integer solutions of a^2 + b^2 = F_d (a+b). The list
/// is exhaustive whenever F_d is small enough to scan (solutions_complete is
/// then true); for dimensions eliminated by counting with F_d beyond the scan
/// budget it carries the four solutions (0,0), (0,F), (F,0), (F,F) that exist
/// for every F. Every listed pair is verified against the equation either
/// way, and (F, F) must be present.
///
/// min_degree is the Riemann-Roch bound 2(d+1)!; min_degree_applies records
/// whether the span hypothesis (d > 2) backing it holds.
struct EliminationRecord {
  int d = 0;
  Int f_d;
  std::vector<IntPair> all_solutions;
  bool solutions_complete = true;
  std::vector<IntPair> effective_solutions;  // a >= 0 and b >= 0
  Int max_degree;                            // 2 F_d
  Int min_degree;                            // 2 (d+1)!
  bool min_degree_applies = false;           // d > 2
  std::vector<Candidate> surviving_candidates;
  std::vector<RuleApplication> rules_applied;
  Verdict verdict = Verdict::UNRESOLVED;

  bool operator==(const EliminationRecord&) const = default;
};

/// Dimensions with F_d above this bound do not get a full solution scan in
/// their elimination record; they are all counting-eliminated long before the
/// scan would matter. (The scan is linear in F_d, so exhausting it for, say,
/// d = 100 with F_d around 10^60 is not a computation that terminates.)
inline const Int kSolutionScanBudget = 100000;

/// Runs the whole per-dimension pipeline: F_d, solutions of the
/// self-intersection constraint, degree bounds, candidate filtering, h^0 and
/// polarization types, rule application, verdict. Pure; calls for distinct d
/// are independent and may run concurrently.
EliminationRecord eliminate(int d);

}  // namespace avq
