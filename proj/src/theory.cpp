#include "pg/theory.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <variant>

namespace pg::theory {

namespace {

using arith::checked_add;
using arith::checked_mul;
using arith::checked_pow;
using arith::divisors;
using arith::euler_phi;
using arith::Factorization;
using arith::factorize;
using groups::AbelianP;
using groups::Cyclic;
using groups::Dicyclic;
using groups::Dihedral;
using groups::GroupSpec;

void require_multiprime(const Factorization& f, i64 n, const char* who) {
  if (f.size() < 2)
    throw std::invalid_argument(std::string(who) + ": n = " + std::to_string(n) +
                                " must have at least two distinct prime factors");
}

bool is_squarefree(const Factorization& f) {
  for (const auto& pp : f)
    if (pp.exponent != 1) return false;
  return true;
}

std::string join_labels(const std::vector<i64>& xs, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(xs[i]);
  }
  return out;
}

}  // namespace

i64 degree_formula_cyclic(i64 n, i64 a) {
  const auto f = factorize(n);  // validates n >= 1
  require_multiprime(f, n, "degree_formula_cyclic");
  if (a <= 0 || a >= n)
    throw std::invalid_argument("degree_formula_cyclic: residue must be in (0, n)");
  const i64 b = std::gcd(a, n);
  if (b == 1)
    throw std::invalid_argument("degree_formula_cyclic: residue must not be coprime to n");
  i64 deg = n / b - 1;
  for (i64 d : divisors(b))
    if (d != b) deg = checked_add(deg, euler_phi(n / d));
  return deg;
}

MinDegreeCyclic min_degree_cyclic(i64 n) {
  if (n < 2) throw std::invalid_argument("min_degree_cyclic: n must be >= 2");
  const auto f = factorize(n);
  if (f.size() == 1) return {n - 1, n};  // complete power graph

  MinDegreeCyclic best{0, 0};
  for (i64 c : divisors(n)) {
    if (c == 1 || c == n) continue;
    const i64 deg = degree_formula_cyclic(n, c);
    if (best.witness_divisor == 0 || deg < best.delta) best = {deg, c};
  }

  // delta >= phi(n) + 1, with equality exactly at n = 2p.
  const i64 floor_value = checked_add(euler_phi(n), 1);
  const bool is_2p = (n % 2 == 0) && arith::is_prime(n / 2);
  if (best.delta < floor_value || (best.delta == floor_value) != is_2p)
    throw invariant_violation("min_degree_cyclic: floor phi(n)+1 check failed at n = " +
                              std::to_string(n));
  return best;
}

std::optional<i64> min_degree_closed_form(const GroupSpec& spec) {
  if (const auto* c = std::get_if<Cyclic>(&spec)) {
    const i64 n = c->n;
    if (n == 1) return i64{0};
    const auto f = factorize(n);
    if (f.size() == 1) return n - 1;
    if (f.size() == 2) {
      const i64 q1 = checked_pow(f[0].prime, f[0].exponent);
      const i64 q2 = checked_pow(f[1].prime, f[1].exponent);
      return checked_add(checked_mul(q2 - 1, euler_phi(q1)), q1 - 1);
    }
    if (f.size() == 3 && is_squarefree(f))
      return checked_add(euler_phi(n), f[0].prime * f[1].prime - 1);
    if (f.size() == 4 && is_squarefree(f)) {
      const i64 p2 = f[1].prime, p3 = f[2].prime, p4 = f[3].prime;
      // p4 >= p3 + 2(p3-1)/(p2-1), cross-multiplied to stay in integers
      const bool first_case = (n % 2 == 1) || (p4 - p3) * (p2 - 1) >= 2 * (p3 - 1);
      if (first_case) return checked_add(euler_phi(n), f[0].prime * p2 * p3 - 1);
      return checked_add(checked_mul(p2 - 1, checked_mul(p3, p4) + 1), 1);
    }
    return std::nullopt;
  }
  if (const auto* a = std::get_if<AbelianP>(&spec)) return groups::tau(*a) - 1;
  if (std::holds_alternative<Dihedral>(spec)) return i64{1};
  return i64{3};  // dicyclic
}

EtaBounds eta_bounds(i64 n) {
  const auto f = factorize(n);
  require_multiprime(f, n, "eta_bounds");
  const std::size_t r = f.size();
  const i64 qr = checked_pow(f[r - 1].prime, f[r - 1].exponent);
  EtaBounds out;
  out.eta1 = checked_add(n / qr, checked_mul(qr - 1, euler_phi(n / qr))) - 1;
  const i64 pr = f[r - 1].prime, pr1 = f[r - 2].prime;
  out.eta2 = n / (pr1 * pr);
  out.eta2 = checked_add(out.eta2, euler_phi(n));
  out.eta2 = checked_add(out.eta2, euler_phi(n / pr));
  out.eta2 = checked_add(out.eta2, euler_phi(n / pr1)) - 1;
  return out;
}

std::vector<DegCompareViolation> degcompare_check(i64 n) {
  const auto f = factorize(n);
  require_multiprime(f, n, "degcompare_check");
  const int r = static_cast<int>(f.size());

  std::vector<DegCompareViolation> out;
  const auto check = [&](int clause, i64 lhs, i64 rhs) {
    const i64 dl = degree_formula_cyclic(n, lhs);
    const i64 dr = degree_formula_cyclic(n, rhs);
    if (dl < dr) out.push_back({clause, lhs, rhs, dl, dr});
  };

  check(1, checked_pow(f[0].prime, f[0].exponent), checked_pow(f[r - 1].prime, f[r - 1].exponent));

  for (int i = 0; i < r; ++i)
    for (int g = 1; g < f[i].exponent; ++g)
      for (int bb = g + 1; bb <= f[i].exponent; ++bb)
        check(2, checked_pow(f[i].prime, g), checked_pow(f[i].prime, bb));

  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      for (int bb = 1; bb <= std::min(f[i].exponent, f[j].exponent); ++bb)
        check(3, checked_pow(f[i].prime, bb), checked_pow(f[j].prime, bb));

  // Clause 4 walks every exponent tuple (b1..br) with 1 <= bi <= ai except
  // the full tuple.
  std::vector<int> beta(r, 1);
  int total_alpha = 0;
  for (const auto& pp : f) total_alpha += pp.exponent;
  while (true) {
    int total_beta = 0;
    for (int b : beta) total_beta += b;
    if (total_beta < total_alpha) {
      i64 lhs = 1, rhs = 1;
      for (int i = 0; i < r; ++i) {
        lhs = checked_mul(lhs, checked_pow(f[i].prime, beta[i]));
        if (i > 0) rhs = checked_mul(rhs, checked_pow(f[i].prime, beta[i]));
      }
      check(4, lhs, rhs);
    }
    int i = r - 1;
    while (i >= 0 && beta[i] == f[i].exponent) beta[i--] = 1;
    if (i < 0) break;
    ++beta[i];
  }
  return out;
}

graphcore::EdgeSet min_disconnecting_set(const powergraph::PowerGraphBundle& bundle) {
  const auto& g = bundle.graph;
  if (g.vertex_count() < 2)
    throw std::invalid_argument("min_disconnecting_set: group must have order >= 2");
  const auto md = graphcore::min_degree(g);
  auto cut = graphcore::incident_edges(g, md.vertex);
  if (!graphcore::is_disconnecting(g, cut))
    throw invariant_violation("min_disconnecting_set: E[x, N(x)] failed to disconnect " +
                              groups::format_spec(bundle.spec));
  return cut;
}

graphcore::EdgeSet min_disconnecting_set(const groups::GroupSpec& spec) {
  return min_disconnecting_set(powergraph::build_power_graph(spec));
}

KappaDeltaCyclic kappa_delta_classify_cyclic(i64 n) {
  if (n < 2) throw std::invalid_argument("kappa_delta_classify_cyclic: n must be >= 2");
  const auto f = factorize(n);
  if (f.size() == 1) return {true, n - 1};
  if (f.size() == 2 && f[0].prime == 2 && f[0].exponent == 1)
    return {true, n - n / checked_pow(2, arith::valuation(n, 2))};
  return {false, std::nullopt};
}

i64 kappa_closed_form_cyclic(i64 n) {
  const auto f = factorize(n);
  if (f.size() != 2)
    throw std::invalid_argument(
        "kappa_closed_form_cyclic: n must have exactly two distinct prime factors");
  const i64 rad = checked_mul(f[0].prime, f[1].prime);
  return checked_add(euler_phi(n), n / rad);
}

SeparatingSetCyclic min_separating_set_cyclic(i64 n) {
  const auto cls = kappa_delta_classify_cyclic(n);
  if (!cls.equal || arith::is_prime_power(n))
    throw std::invalid_argument(
        "min_separating_set_cyclic: n must be 2q^b with q an odd prime");

  SeparatingSetCyclic out;
  out.expected_kappa = *cls.value;
  out.isolated_vertex = n / 2;
  out.vertices.push_back(0);
  for (i64 a : divisors(n / 2)) {
    if (a == n / 2) continue;
    // [a] = residues with gcd = a, since a | n
    for (i64 y = a; y < n; y += a)
      if (std::gcd(y, n) == a) out.vertices.push_back(static_cast<int>(y));
  }
  std::sort(out.vertices.begin(), out.vertices.end());
  return out;
}

KappaDeltaEqual kappa_delta_equal(const GroupSpec& spec) {
  if (const auto* c = std::get_if<Cyclic>(&spec)) {
    const i64 n = c->n;
    if (n == 1) return {true, "trivial group"};
    const auto f = factorize(n);
    if (f.size() == 1)
      return {true, "n is a prime power, the power graph is complete and kappa = delta = n-1"};
    if (f[0].prime == 2 && f[0].exponent == 1 && f.size() == 2)
      return {true, "n = 2q^b, kappa = delta = n - n/2"};
    if (n % 2 == 1)
      return {false, "n is odd and not a prime power; equality would force an order-2 element"};
    return {false, "n is neither a prime power nor 2q^b"};
  }
  if (const auto* a = std::get_if<AbelianP>(&spec)) {
    if (groups::sigma(*a) == 1)
      return {true, "sigma = 1, the group is cyclic of prime-power order"};
    if (groups::tau(*a) == 2) return {true, "tau = 2, kappa = delta = 1"};
    if (a->p % 2 == 1)
      return {false,
              "group order is odd and the group is not cyclic; kappa = 1 < tau - 1 = delta"};
    return {false, "sigma >= 2 and tau > 2, kappa = 1 < tau - 1 = delta"};
  }
  if (std::holds_alternative<Dihedral>(spec)) return {true, "kappa = delta = 1"};
  return {false, "dicyclic groups have kappa = 2 and delta = 3"};
}

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::closed_form: return "closed_form";
    case Provenance::algorithmic: return "algorithmic";
    case Provenance::both_agree: return "both_agree";
  }
  return "?";
}

namespace {

// N(b) for a divisor b of n splits into <b> and the classes [d] over proper
// divisors d of b, which is exactly how the degree formula counts it. Spell
// that out for the minimum-degree witness.
void annotate_cyclic_witness(AnalysisReport& report, i64 n) {
  if (arith::is_prime_power(n)) return;
  const i64 b = min_degree_cyclic(n).witness_divisor;
  std::vector<i64> classes;
  for (i64 d : divisors(b))
    if (d != b) classes.push_back(d);
  std::string text = "min disconnecting set: edges from " + std::to_string(b) + " to <" +
                     std::to_string(b) + "> and the classes [" + join_labels(classes, "], [") +
                     "], minus " + std::to_string(b) + " itself";
  report.annotations.push_back(std::move(text));
}

}  // namespace

AnalysisReport analyze(const GroupSpec& spec, const AnalyzeOptions& options) {
  groups::validate(spec);
  const auto bundle = powergraph::build_power_graph(spec, options.vertex_cap);
  const auto& g = bundle.graph;
  const i64 n = g.vertex_count();

  AnalysisReport report;
  report.spec = spec;
  report.order = n;

  const auto* cyclic = std::get_if<Cyclic>(&spec);

  // delta: graph scan, checked against every formula that applies
  const auto md = graphcore::min_degree(g);
  report.delta = md.degree;
  report.delta_witness = g.label(md.vertex);
  report.provenance["delta"] = Provenance::algorithmic;
  if (const auto closed = min_degree_closed_form(spec)) {
    if (*closed != report.delta)
      throw invariant_violation("analyze: closed-form delta " + std::to_string(*closed) +
                                " != graph delta " + std::to_string(report.delta) + " for " +
                                groups::format_spec(spec));
    report.provenance["delta"] = Provenance::both_agree;
  }
  if (cyclic && cyclic->n >= 2) {
    const auto mdc = min_degree_cyclic(cyclic->n);
    if (mdc.delta != report.delta)
      throw invariant_violation("analyze: divisor-scan delta " + std::to_string(mdc.delta) +
                                " != graph delta " + std::to_string(report.delta) +
                                " for n = " + std::to_string(cyclic->n));
    report.provenance["delta"] = Provenance::both_agree;
  }

  // kappa': the algorithm must land on delta
  report.kappa_prime = graphcore::edge_connectivity(g);
  if (report.kappa_prime != report.delta)
    throw invariant_violation("analyze: edge connectivity " + std::to_string(report.kappa_prime) +
                              " != delta " + std::to_string(report.delta) + " for " +
                              groups::format_spec(spec));
  report.provenance["kappa_prime"] = Provenance::both_agree;

  const auto equality = kappa_delta_equal(spec);
  report.kappa_equals_delta = equality.equal;
  report.kappa_equals_delta_reason = equality.reason;

  const bool complete = graphcore::is_complete(g);
  if (complete) report.annotations.push_back("power graph is complete");

  // kappa: exact max-flow, cross-checked against whatever closed forms exist
  graphcore::VertexCut cut;
  const bool do_kappa = options.force_kappa || n <= options.kappa_auto_limit;
  if (do_kappa) {
    cut = graphcore::vertex_connectivity_witness(g);
    report.kappa = cut.kappa;
    report.provenance["kappa"] = Provenance::algorithmic;

    if (*report.kappa > report.kappa_prime)
      throw invariant_violation("analyze: kappa exceeds kappa' for " + groups::format_spec(spec));
    if (equality.equal != (*report.kappa == report.delta))
      throw invariant_violation("analyze: kappa/delta classification disagrees with exact kappa for " +
                                groups::format_spec(spec));

    if (cyclic && cyclic->n >= 2) {
      const auto cls = kappa_delta_classify_cyclic(cyclic->n);
      if (cls.value && *cls.value != *report.kappa)
        throw invariant_violation("analyze: classified kappa value disagrees for n = " +
                                  std::to_string(cyclic->n));
      if (factorize(cyclic->n).size() == 2) {
        if (kappa_closed_form_cyclic(cyclic->n) != *report.kappa)
          throw invariant_violation("analyze: two-prime kappa formula disagrees for n = " +
                                    std::to_string(cyclic->n));
        report.provenance["kappa"] = Provenance::both_agree;
      }
      if (cls.value) report.provenance["kappa"] = Provenance::both_agree;
    } else if (complete) {
      report.provenance["kappa"] = Provenance::both_agree;
    }
  }

  // eta bounds only exist for cyclic n with two or more primes
  if (cyclic && cyclic->n >= 2 && factorize(cyclic->n).size() >= 2) {
    const auto eta = eta_bounds(cyclic->n);
    if (eta.eta1 < report.delta || eta.eta2 < report.delta)
      throw invariant_violation("analyze: eta bound below delta for n = " +
                                std::to_string(cyclic->n));
    report.eta1 = eta.eta1;
    report.eta2 = eta.eta2;
    report.provenance["eta1"] = Provenance::closed_form;
    report.provenance["eta2"] = Provenance::closed_form;
  }

  // witnesses
  if (n >= 2) {
    const auto disconnecting = min_disconnecting_set(bundle);
    if (static_cast<i64>(disconnecting.size()) != report.kappa_prime)
      throw invariant_violation("analyze: disconnecting witness size != kappa' for " +
                                groups::format_spec(spec));
    for (const auto& [u, v] : disconnecting)
      report.min_disconnecting.push_back({g.label(u), g.label(v)});
    report.provenance["min_disconnecting"] = Provenance::both_agree;
  }

  if (do_kappa && !complete && n >= 2) {
    std::vector<std::string> sep_labels;
    graphcore::VertexSet sep = cut.cut;
    report.provenance["min_separating"] = Provenance::algorithmic;
    if (cyclic && equality.equal) {
      // Prefer the written-out set; it must match the exact kappa.
      const auto literal = min_separating_set_cyclic(cyclic->n);
      if (static_cast<i64>(literal.vertices.size()) == *report.kappa &&
          graphcore::is_separating(g, literal.vertices)) {
        sep = literal.vertices;
        report.provenance["min_separating"] = Provenance::both_agree;
        report.annotations.push_back("min separating set: 0 together with the classes [a] for "
                                     "divisors a of n/2 except n/2; removal isolates " +
                                     std::to_string(literal.isolated_vertex));
      } else {
        report.annotations.push_back(
            "written-out separating set disagrees with exact kappa; reporting the max-flow cut");
      }
    }
    if (static_cast<i64>(sep.size()) != *report.kappa)
      throw invariant_violation("analyze: separating witness size != kappa for " +
                                groups::format_spec(spec));
    if (!graphcore::is_separating(g, sep))
      throw invariant_violation("analyze: separating witness fails to separate " +
                                groups::format_spec(spec));
    for (int v : sep) sep_labels.push_back(g.label(v));
    report.min_separating = std::move(sep_labels);
  }

  if (cyclic && cyclic->n >= 2) annotate_cyclic_witness(report, cyclic->n);
  return report;
}

}  // namespace pg::theory
