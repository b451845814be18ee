#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pg/errors.hpp"
#include "pg/powergraph.hpp"

namespace pg::theory {

using arith::i64;

// Degree of the residue a in the power graph of Z_n, for composite
// non-prime-power n and a neither 0 nor coprime to n:
//   deg(a) = n/b + sum over proper divisors d of b of phi(n/d) - 1,
// with b = gcd(a, n).
i64 degree_formula_cyclic(i64 n, i64 a);

struct MinDegreeCyclic {
  i64 delta = 0;
  // Divisor c of n whose residue attains the minimum (smallest such c);
  // equals n when the power graph is complete.
  i64 witness_divisor = 0;
};

// Minimum degree of the power graph of Z_n (n >= 2). For prime powers the
// graph is complete. Otherwise the minimum is attained at a proper divisor,
// so only divisors are scanned; min_degree on the built graph provides the
// brute-force check in tests.
MinDegreeCyclic min_degree_cyclic(i64 n);

// Closed-form minimum degree when one is known for the group's shape:
//   Cyclic p^a            -> n - 1
//   Cyclic p1^a1 p2^a2    -> (p2^a2 - 1) phi(p1^a1) + p1^a1 - 1
//   Cyclic p1 p2 p3       -> phi(n) + p1 p2 - 1
//   Cyclic p1 p2 p3 p4    -> phi(n) + p1 p2 p3 - 1   when n is odd or
//                            (p4 - p3)(p2 - 1) >= 2 (p3 - 1);
//                            (p2 - 1)(p3 p4 + 1) + 1 otherwise
//   AbelianP              -> tau - 1
//   Dihedral              -> 1
//   Dicyclic              -> 3
// nullopt for cyclic shapes not listed.
std::optional<i64> min_degree_closed_form(const groups::GroupSpec& spec);

struct EtaBounds {
  i64 eta1 = 0;  // deg of p_r^a_r:      n/p_r^a_r + (p_r^a_r - 1) phi(n/p_r^a_r) - 1
  i64 eta2 = 0;  // deg of p_{r-1} p_r:  n/(p_{r-1} p_r) + phi(n) + phi(n/p_r) + phi(n/p_{r-1}) - 1
};

// Upper bounds for the minimum degree of the power graph of Z_n; requires n
// with at least two distinct prime factors. Both are degrees of actual
// vertices, and each is attained: eta1 whenever n has two distinct primes
// (and for some wider n), eta2 on part of the four-prime squarefree family.
EtaBounds eta_bounds(i64 n);

struct DegCompareViolation {
  int clause = 0;      // 1..4
  i64 lhs = 0;         // residue whose degree should dominate
  i64 rhs = 0;
  i64 lhs_degree = 0;
  i64 rhs_degree = 0;
};

// Checks the degree-domination inequalities between prime-power divisors of
// n (at least two distinct primes required):
//   (1) deg(p1^a1) >= deg(pr^ar)
//   (2) deg(pi^g) >= deg(pi^b) for g < b
//   (3) deg(pi^b) >= deg(pj^b) for i < j, b <= min(ai, aj)
//   (4) deg(p1^b1 ... pr^br) >= deg(p2^b2 ... pr^br) for 1 <= bi <= ai,
//       sum(bi) < sum(ai)
// Returns every violated instance; expected empty.
std::vector<DegCompareViolation> degcompare_check(i64 n);

// E[x, N(x)] for a minimum-degree vertex x: a minimum disconnecting edge
// set of the power graph (checked; size equals the edge connectivity).
graphcore::EdgeSet min_disconnecting_set(const powergraph::PowerGraphBundle& bundle);
graphcore::EdgeSet min_disconnecting_set(const groups::GroupSpec& spec);

struct KappaDeltaCyclic {
  bool equal = false;
  std::optional<i64> value;  // the common value of kappa and delta when equal
};

// kappa equals delta for Z_n exactly when n = p^a (value n-1) or n = 2 q^b
// for an odd prime q (value n - n/2^v2(n)).
KappaDeltaCyclic kappa_delta_classify_cyclic(i64 n);

// kappa of the power graph of Z_n for n = p^a q^b with two distinct primes:
// phi(n) + p^(a-1) q^(b-1).
i64 kappa_closed_form_cyclic(i64 n);

struct SeparatingSetCyclic {
  graphcore::VertexSet vertices;  // {0} plus the classes [a] for a | n/2, a != n/2
  i64 expected_kappa = 0;         // n - n/2^v2(n)
  i64 isolated_vertex = 0;        // n/2; removal leaves it alone
};

// The written-out minimum separating set for the equality family n = 2 q^b.
SeparatingSetCyclic min_separating_set_cyclic(i64 n);

struct KappaDeltaEqual {
  bool equal = false;
  std::string reason;
};

// Family-level classification of kappa == delta, no graph needed:
// Cyclic by shape of n; AbelianP iff sigma = 1 or tau = 2; Dihedral always;
// Dicyclic never. Odd group order rules equality out unless the power graph
// is complete.
KappaDeltaEqual kappa_delta_equal(const groups::GroupSpec& spec);

enum class Provenance { closed_form, algorithmic, both_agree };
std::string to_string(Provenance p);

struct AnalysisReport {
  groups::GroupSpec spec;
  i64 order = 0;
  i64 delta = 0;
  std::string delta_witness;
  i64 kappa_prime = 0;
  std::optional<i64> kappa;  // absent when skipped for size
  std::optional<i64> eta1, eta2;
  std::optional<bool> kappa_equals_delta;
  std::string kappa_equals_delta_reason;
  std::vector<std::array<std::string, 2>> min_disconnecting;  // edge label pairs
  std::optional<std::vector<std::string>> min_separating;     // vertex labels
  std::map<std::string, Provenance> provenance;
  std::vector<std::string> annotations;
};

struct AnalyzeOptions {
  // Exact vertex connectivity runs automatically up to this order and only
  // with force_kappa above it.
  i64 kappa_auto_limit = 300;
  bool force_kappa = false;
  i64 vertex_cap = powergraph::kDefaultVertexCap;
};

// Builds the power graph, computes delta / kappa' / kappa and witness sets,
// and cross-checks every applicable closed form against the graph
// algorithms. A disagreement throws invariant_violation.
AnalysisReport analyze(const groups::GroupSpec& spec, const AnalyzeOptions& options = {});

// JSON serialization (schema_version 1) and a plain-text rendering.
std::string report_to_json(const AnalysisReport& report, int indent = 2);
std::string report_to_text(const AnalysisReport& report);

}  // namespace pg::theory
