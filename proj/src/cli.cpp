#include "pg/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pg/theory.hpp"

namespace pg::cli {

namespace {

using arith::i64;
using groups::GroupSpec;

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << text;
}

constexpr const char* kCheckNames[] = {
    "degree-formula",  "min-degree",          "min-deg-basic", "eta-bounds",
    "degcompare",      "edge-connectivity",   "kappa-classification",
    "kappa-value",     "structural",          "disconnecting-set",
    "separating-set",
};

struct CheckContext {
  std::vector<std::string> enabled;  // empty = run everything applicable
  i64 kappa_limit = 300;
  i64 vertex_cap = powergraph::kDefaultVertexCap;
  int ran = 0;
  int failed = 0;
  int skipped = 0;

  bool wants(const char* name) const {
    return enabled.empty() ||
           std::find(enabled.begin(), enabled.end(), name) != enabled.end();
  }
  void ok(const char* name, const std::string& spec) {
    ++ran;
    std::cout << "ok   " << name << "  " << spec << "\n";
  }
  void fail(const char* name, const std::string& spec, const std::string& detail) {
    ++ran;
    ++failed;
    std::cout << "FAIL " << name << "  " << spec << ": " << detail << "\n";
  }
  void skip(const char* name, const std::string& spec, const std::string& why) {
    ++skipped;
    std::cout << "skip " << name << "  " << spec << " (" << why << ")\n";
  }
};

void run_checks(CheckContext& ctx, const GroupSpec& spec) {
  const std::string id = groups::format_spec(spec);
  const auto bundle = powergraph::build_power_graph(spec, ctx.vertex_cap);
  const auto& g = bundle.graph;
  const i64 order = g.vertex_count();
  const auto* cyc = std::get_if<groups::Cyclic>(&spec);
  const i64 n = cyc ? cyc->n : 0;
  // n >= 2 with two or more distinct primes, i.e. composite non-prime-power
  const bool multi_prime = n >= 2 && !arith::is_prime_power(n);

  const i64 delta = graphcore::min_degree(g).degree;

  i64 kappa_prime_cache = -1;
  const auto kappa_prime = [&] {
    if (kappa_prime_cache < 0) kappa_prime_cache = graphcore::edge_connectivity(g);
    return kappa_prime_cache;
  };
  std::optional<i64> kappa_cache;
  const auto kappa_exact = [&] {
    if (!kappa_cache) kappa_cache = graphcore::vertex_connectivity(g);
    return *kappa_cache;
  };

  if (cyc && ctx.wants("degree-formula")) {
    if (multi_prime) {
      bool good = true;
      for (i64 a = 1; a < n && good; ++a) {
        if (std::gcd(a, n) == 1) continue;
        const i64 want = theory::degree_formula_cyclic(n, a);
        const i64 got = g.degree(static_cast<int>(a));
        if (want != got) {
          ctx.fail("degree-formula", id,
                   "residue " + std::to_string(a) + ": formula " + std::to_string(want) +
                       ", graph " + std::to_string(got));
          good = false;
        }
      }
      if (good) ctx.ok("degree-formula", id);
    }
  }

  if (cyc && ctx.wants("min-degree") && n >= 2) {
    const auto mdc = theory::min_degree_cyclic(n);
    if (mdc.delta == delta)
      ctx.ok("min-degree", id);
    else
      ctx.fail("min-degree", id,
               "divisor scan " + std::to_string(mdc.delta) + ", graph " + std::to_string(delta));
  }

  if (ctx.wants("min-deg-basic")) {
    std::string detail;
    if (const auto closed = theory::min_degree_closed_form(spec); closed && *closed != delta)
      detail = "closed form " + std::to_string(*closed) + ", graph " + std::to_string(delta);
    if (cyc && n >= 4 && !arith::is_prime(n) && detail.empty()) {
      const i64 floor_value = arith::euler_phi(n) + 1;
      const bool is_2p = n % 2 == 0 && arith::is_prime(n / 2);
      if (delta < floor_value)
        detail = "delta below phi(n)+1";
      else if ((delta == floor_value) != is_2p)
        detail = "phi(n)+1 equality should hold exactly at n = 2p";
    }
    if (detail.empty())
      ctx.ok("min-deg-basic", id);
    else
      ctx.fail("min-deg-basic", id, detail);
  }

  if (cyc && ctx.wants("eta-bounds") && multi_prime) {
    const auto eta = theory::eta_bounds(n);
    const bool two_primes = arith::factorize(n).size() == 2;
    if (eta.eta1 < delta || eta.eta2 < delta)
      ctx.fail("eta-bounds", id, "bound fell below the minimum degree");
    else if (two_primes && eta.eta1 != delta)
      ctx.fail("eta-bounds", id, "eta1 must match the minimum degree for two distinct primes");
    else
      ctx.ok("eta-bounds", id);
  }

  if (cyc && ctx.wants("degcompare") && multi_prime) {
    const auto violations = theory::degcompare_check(n);
    if (violations.empty())
      ctx.ok("degcompare", id);
    else
      ctx.fail("degcompare", id,
               "clause " + std::to_string(violations[0].clause) + " at " +
                   std::to_string(violations[0].lhs) + " vs " +
                   std::to_string(violations[0].rhs));
  }

  if (ctx.wants("edge-connectivity") && order >= 2) {
    const i64 kp = kappa_prime();
    if (kp != delta) {
      ctx.fail("edge-connectivity", id,
               "kappa' " + std::to_string(kp) + " != delta " + std::to_string(delta));
    } else if (order <= 400) {
      const i64 sw = graphcore::edge_connectivity_stoer_wagner(g);
      if (sw == kp)
        ctx.ok("edge-connectivity", id);
      else
        ctx.fail("edge-connectivity", id,
                 "max-flow " + std::to_string(kp) + " != stoer-wagner " + std::to_string(sw));
    } else {
      ctx.ok("edge-connectivity", id);
    }
  }

  if (ctx.wants("kappa-classification")) {
    if (order > ctx.kappa_limit) {
      ctx.skip("kappa-classification", id, "order above kappa limit");
    } else {
      const auto cls = theory::kappa_delta_equal(spec);
      const bool equal = kappa_exact() == delta;
      if (equal == cls.equal)
        ctx.ok("kappa-classification", id);
      else
        ctx.fail("kappa-classification", id,
                 "classification says " + std::string(cls.equal ? "equal" : "unequal") +
                     " but kappa = " + std::to_string(kappa_exact()) + ", delta = " +
                     std::to_string(delta));
    }
  }

  if (cyc && ctx.wants("kappa-value") && n >= 2) {
    const auto cls = theory::kappa_delta_classify_cyclic(n);
    const bool two_primes = arith::factorize(n).size() == 2;
    if (!cls.value && !two_primes) {
      // no closed value for this shape
    } else if (order > ctx.kappa_limit) {
      ctx.skip("kappa-value", id, "order above kappa limit");
    } else {
      std::string detail;
      if (cls.value && *cls.value != kappa_exact())
        detail = "classified value " + std::to_string(*cls.value) + " != kappa " +
                 std::to_string(kappa_exact());
      if (detail.empty() && two_primes &&
          theory::kappa_closed_form_cyclic(n) != kappa_exact())
        detail = "two-prime formula " + std::to_string(theory::kappa_closed_form_cyclic(n)) +
                 " != kappa " + std::to_string(kappa_exact());
      if (detail.empty())
        ctx.ok("kappa-value", id);
      else
        ctx.fail("kappa-value", id, detail);
    }
  }

  if (ctx.wants("structural")) {
    bool expect_complete = false;
    if (cyc) expect_complete = n == 1 || arith::is_prime_power(n);
    if (const auto* a = std::get_if<groups::AbelianP>(&spec))
      expect_complete = groups::sigma(*a) == 1;
    std::string detail;
    if (!graphcore::is_connected(g))
      detail = "power graph is disconnected";
    else if (graphcore::is_complete(g) != expect_complete)
      detail = expect_complete ? "expected a complete power graph" : "unexpectedly complete";
    else if (order <= 512 && order >= 2) {
      const auto diam = graphcore::diameter(g);
      if (!diam || *diam > 2) detail = "diameter above 2";
    }
    if (detail.empty())
      ctx.ok("structural", id);
    else
      ctx.fail("structural", id, detail);
  }

  if (ctx.wants("disconnecting-set") && order >= 2) {
    try {
      const auto cut = theory::min_disconnecting_set(bundle);
      if (static_cast<i64>(cut.size()) == kappa_prime())
        ctx.ok("disconnecting-set", id);
      else
        ctx.fail("disconnecting-set", id, "witness size != edge connectivity");
    } catch (const std::exception& e) {
      ctx.fail("disconnecting-set", id, e.what());
    }
  }

  if (cyc && ctx.wants("separating-set") && multi_prime) {
    const auto cls = theory::kappa_delta_classify_cyclic(n);
    if (cls.equal) {
      const auto sep = theory::min_separating_set_cyclic(n);
      std::string detail;
      if (!graphcore::is_separating(g, sep.vertices))
        detail = "written-out set does not separate";
      else if (static_cast<i64>(sep.vertices.size()) != sep.expected_kappa)
        detail = "written-out set has the wrong size";
      else if (order <= ctx.kappa_limit && kappa_exact() != sep.expected_kappa)
        detail = "expected kappa " + std::to_string(sep.expected_kappa) + " but graph gives " +
                 std::to_string(kappa_exact());
      if (detail.empty())
        ctx.ok("separating-set", id);
      else
        ctx.fail("separating-set", id, detail);
    }
  }
}

std::vector<GroupSpec> sweep_specs(const std::string& family, i64 max_order) {
  std::vector<GroupSpec> specs;
  const bool all = family == "all";
  if (all || family == "cyclic")
    for (i64 n = 2; n <= max_order; ++n) specs.push_back(groups::Cyclic{n});
  if (all || family == "abelianp")
    for (const auto& a : groups::abelian_p_specs_up_to(max_order)) specs.push_back(a);
  if (all || family == "dihedral")
    for (i64 n = 3; 2 * n <= max_order; ++n) specs.push_back(groups::Dihedral{n});
  if (all || family == "dicyclic")
    for (i64 n = 2; 4 * n <= max_order; ++n) specs.push_back(groups::Dicyclic{n});
  return specs;
}

std::string classify_text(const GroupSpec& spec) {
  std::ostringstream out;
  out << "group: " << groups::format_spec(spec) << "  (order " << groups::order(spec) << ")\n";
  const auto eq = theory::kappa_delta_equal(spec);
  out << "kappa == delta: " << (eq.equal ? "yes" : "no") << "  (" << eq.reason << ")\n";
  if (const auto closed = theory::min_degree_closed_form(spec))
    out << "min degree: " << *closed << "\n";
  if (const auto* cyc = std::get_if<groups::Cyclic>(&spec)) {
    const i64 n = cyc->n;
    if (n >= 2) {
      const auto mdc = theory::min_degree_cyclic(n);
      out << "min degree (divisor scan): " << mdc.delta << "  at residue "
          << mdc.witness_divisor << "\n";
      const auto f = arith::factorize(n);
      const auto cls = theory::kappa_delta_classify_cyclic(n);
      if (cls.value) out << "kappa: " << *cls.value << "\n";
      if (!cls.value && f.size() == 2)
        out << "kappa: " << theory::kappa_closed_form_cyclic(n) << "\n";
      if (f.size() >= 2) {
        const auto eta = theory::eta_bounds(n);
        out << "eta1: " << eta.eta1 << "  eta2: " << eta.eta2 << "\n";
      }
    }
  }
  return out.str();
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
  CLI::App app{"connectivity of power graphs of finite groups"};
  app.require_subcommand(1);

  std::string group_text;
  std::string format = "text";
  std::string output;
  i64 vertex_cap = powergraph::kDefaultVertexCap;
  bool force_kappa = false;

  int exit_code = 0;

  auto* analyze = app.add_subcommand("analyze", "full report for one group");
  analyze->add_option("--group", group_text, "cyclic:<n> | abelianp:<p>:<e1>,<e2>,... | dihedral:<n> | dicyclic:<n>")
      ->required();
  analyze->add_flag("--kappa", force_kappa, "compute exact vertex connectivity regardless of order");
  analyze->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  analyze->add_option("--output", output, "write to a file instead of stdout");
  analyze->add_option("--vertex-cap", vertex_cap, "largest group order to accept")
      ->envname("PG_VERTEX_CAP");
  analyze->callback([&] {
    theory::AnalyzeOptions opts;
    opts.force_kappa = force_kappa;
    opts.vertex_cap = vertex_cap;
    const auto report = theory::analyze(groups::parse_spec(group_text), opts);
    write_output(output, format == "json" ? theory::report_to_json(report)
                                          : theory::report_to_text(report));
  });

  auto* classify = app.add_subcommand("classify", "closed-form classification, no graph is built");
  classify->add_option("--group", group_text, "group spec")->required();
  classify->callback([&] { write_output(output, classify_text(groups::parse_spec(group_text))); });

  std::string family = "cyclic";
  i64 max_order = 60;
  CheckContext ctx;
  std::vector<std::string> checks;

  auto* sweep = app.add_subcommand("sweep", "cross-check formulas against graph algorithms over a family");
  sweep->add_option("--family", family, "cyclic, abelianp, dihedral, dicyclic, or all")
      ->check(CLI::IsMember({"cyclic", "abelianp", "dihedral", "dicyclic", "all"}));
  sweep->add_option("--max", max_order, "largest group order to sweep")->check(CLI::PositiveNumber);
  sweep->add_option("--checks", checks, "comma-separated subset of checks to run")
      ->delimiter(',');
  sweep->add_option("--kappa-limit", ctx.kappa_limit, "largest order for exact vertex connectivity");
  sweep->add_option("--vertex-cap", ctx.vertex_cap, "largest group order to accept")
      ->envname("PG_VERTEX_CAP");
  sweep->callback([&] {
    for (const auto& c : checks) {
      if (std::find(std::begin(kCheckNames), std::end(kCheckNames), c) == std::end(kCheckNames))
        throw CLI::ValidationError("--checks", "unknown check: " + c);
    }
    ctx.enabled = checks;
    for (const auto& spec : sweep_specs(family, max_order)) run_checks(ctx, spec);
    std::cout << ctx.ran << " checks, " << ctx.failed << " failures, " << ctx.skipped
              << " skipped\n";
    if (ctx.failed > 0) exit_code = 2;
  });

  bool dot_proper = false;
  bool dot_tilde = false;
  auto* dot = app.add_subcommand("export-dot", "write the power graph in Graphviz form");
  dot->add_option("--group", group_text, "group spec")->required();
  dot->add_flag("--proper", dot_proper, "drop the identity vertex");
  dot->add_flag("--tilde", dot_tilde, "cyclic only: keep residues neither 0 nor coprime to n");
  dot->add_option("--output", output, "write to a file instead of stdout");
  dot->add_option("--vertex-cap", vertex_cap, "largest group order to accept")
      ->envname("PG_VERTEX_CAP");
  dot->callback([&] {
    if (dot_proper && dot_tilde)
      throw CLI::ValidationError("--tilde", "--proper and --tilde exclude each other");
    const auto bundle = powergraph::build_power_graph(groups::parse_spec(group_text), vertex_cap);
    const graphcore::Graph* g = &bundle.graph;
    graphcore::InducedSubgraph sub;
    if (dot_proper) {
      sub = powergraph::proper_power_graph(bundle);
      g = &sub.graph;
    } else if (dot_tilde) {
      sub = powergraph::tilde_graph(bundle);
      g = &sub.graph;
    }
    write_output(output, graphcore::to_dot(*g));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  } catch (const invariant_violation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}

}  // namespace pg::cli
