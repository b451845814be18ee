#include <sstream>

#include "json.hpp"
#include "pg/theory.hpp"

namespace pg::theory {

namespace {

using nlohmann::json;

json spec_to_json(const groups::GroupSpec& spec) {
  json j;
  j["text"] = groups::format_spec(spec);
  if (const auto* c = std::get_if<groups::Cyclic>(&spec)) {
    j["family"] = "cyclic";
    j["n"] = c->n;
  } else if (const auto* a = std::get_if<groups::AbelianP>(&spec)) {
    j["family"] = "abelianp";
    j["p"] = a->p;
    j["exponents"] = a->exponents;
  } else if (const auto* d = std::get_if<groups::Dihedral>(&spec)) {
    j["family"] = "dihedral";
    j["n"] = d->n;
  } else {
    j["family"] = "dicyclic";
    j["n"] = std::get<groups::Dicyclic>(spec).n;
  }
  return j;
}

}  // namespace

std::string report_to_json(const AnalysisReport& report, int indent) {
  json j;
  j["schema_version"] = 1;
  j["group"] = spec_to_json(report.spec);
  j["order"] = report.order;
  j["min_degree"] = report.delta;
  j["min_degree_witness"] = report.delta_witness;
  j["edge_connectivity"] = report.kappa_prime;
  if (report.kappa)
    j["vertex_connectivity"] = *report.kappa;
  else
    j["vertex_connectivity"] = nullptr;
  if (report.eta1) j["eta1"] = *report.eta1;
  if (report.eta2) j["eta2"] = *report.eta2;
  if (report.kappa_equals_delta) {
    j["kappa_equals_delta"] = *report.kappa_equals_delta;
    j["kappa_equals_delta_reason"] = report.kappa_equals_delta_reason;
  }
  j["min_disconnecting_set"] = json::array();
  for (const auto& e : report.min_disconnecting) j["min_disconnecting_set"].push_back({e[0], e[1]});
  if (report.min_separating)
    j["min_separating_set"] = *report.min_separating;
  else
    j["min_separating_set"] = nullptr;
  j["provenance"] = json::object();
  for (const auto& [key, p] : report.provenance) j["provenance"][key] = to_string(p);
  j["annotations"] = report.annotations;
  return j.dump(indent) + "\n";
}

std::string report_to_text(const AnalysisReport& report) {
  std::ostringstream out;
  out << "group: " << groups::format_spec(report.spec) << "  (order " << report.order << ")\n";
  out << "min degree:          " << report.delta << "  at " << report.delta_witness << "\n";
  out << "edge connectivity:   " << report.kappa_prime << "\n";
  out << "vertex connectivity: ";
  if (report.kappa)
    out << *report.kappa;
  else
    out << "skipped (order above limit; pass --kappa to force)";
  out << "\n";
  if (report.eta1) out << "eta1: " << *report.eta1 << "  eta2: " << *report.eta2 << "\n";
  if (report.kappa_equals_delta)
    out << "kappa == delta: " << (*report.kappa_equals_delta ? "yes" : "no") << "  ("
        << report.kappa_equals_delta_reason << ")\n";
  if (!report.min_disconnecting.empty()) {
    out << "min disconnecting set (" << report.min_disconnecting.size() << " edges):";
    for (const auto& e : report.min_disconnecting) out << " {" << e[0] << "," << e[1] << "}";
    out << "\n";
  }
  if (report.min_separating) {
    out << "min separating set (" << report.min_separating->size() << " vertices):";
    for (const auto& v : *report.min_separating) out << " " << v;
    out << "\n";
  }
  for (const auto& a : report.annotations) out << "note: " << a << "\n";
  return out.str();
}

}  // namespace pg::theory
