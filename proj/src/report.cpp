#include "bavn/report.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "bavn/graph_io.hpp"

namespace bavn {

using ordered_json = nlohmann::ordered_json;

ReportFormat parse_report_format(const std::string& name) {
  if (name == "text") return ReportFormat::text;
  if (name == "json") return ReportFormat::json;
  if (name == "dot") return ReportFormat::dot;
  throw std::invalid_argument("report: unknown format '" + name + "'");
}

namespace {

ordered_json distribution_json(const DistributionRecord& rec) {
  ordered_json j;
  j["graph"] = format_edge_list(rec.canonical.graph);
  j["partition"] = format_partition(Bipartition{rec.canonical.part_a});
  j["merged_cuts"] = rec.merged_cut_count;
  j["cert_ref"] = rec.cert_ref;
  j["contradiction"] = ordered_json::array();
  for (const auto& eq : rec.certificate.contradiction.equations)
    j["contradiction"].push_back(render(eq));
  return j;
}

std::string classification_text(const ClassificationReport& r) {
  std::ostringstream out;
  out << "classification n=" << r.n << '\n';
  if (!r.reason.empty()) out << "no distributions: " << r.reason << '\n';
  for (const auto& row : r.rows) {
    out << "class " << row.class_id << "  representative " << format_edge_list(row.representative)
        << "  orbit_size " << row.orbit_size << "  distributions " << row.distributions.size()
        << '\n';
    for (const auto& rec : row.distributions)
      out << "  " << rec.cert_ref << "  " << format_edge_list(rec.canonical.graph) << "  "
          << format_partition(Bipartition{rec.canonical.part_a}) << "  merged_cuts "
          << rec.merged_cut_count << '\n';
  }
  out << "classes_with_proofs " << r.classes_with_proofs << '\n';
  out << "distinct_distributions " << r.distinct_distributions << '\n';
  out << "distinct_distributions_no_party_swap " << r.distinct_distributions_no_swap << '\n';
  if (!r.psi4a_note.empty()) out << r.psi4a_note << '\n';
  return out.str();
}

std::string classification_json(const ClassificationReport& r) {
  ordered_json j;
  j["n"] = r.n;
  if (!r.reason.empty()) j["reason"] = r.reason;
  j["rows"] = ordered_json::array();
  for (const auto& row : r.rows) {
    ordered_json rj;
    rj["class_id"] = row.class_id;
    rj["representative_edges"] = format_edge_list(row.representative);
    rj["orbit_size"] = row.orbit_size;
    rj["passing_distributions"] = ordered_json::array();
    for (const auto& rec : row.distributions)
      rj["passing_distributions"].push_back(distribution_json(rec));
    j["rows"].push_back(std::move(rj));
  }
  j["totals"] = {{"classes_with_proofs", r.classes_with_proofs},
                 {"distinct_distributions", r.distinct_distributions},
                 {"distinct_distributions_no_party_swap", r.distinct_distributions_no_swap}};
  if (!r.psi4a_note.empty()) j["psi4a"] = r.psi4a_note;
  return j.dump(2) + "\n";
}

std::string classification_dot(const ClassificationReport& r) {
  std::ostringstream out;
  for (const auto& row : r.rows)
    for (const auto& rec : row.distributions) {
      std::string name = rec.cert_ref;
      for (auto& c : name)
        if (c == '-') c = '_';
      out << to_dot(rec.canonical.graph, rec.canonical.part_a, name);
    }
  return out.str();
}

}  // namespace

std::string report_render(const ClassificationReport& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::text: return classification_text(report);
    case ReportFormat::json: return classification_json(report);
    case ReportFormat::dot: return classification_dot(report);
  }
  throw std::invalid_argument("report: unknown format");
}

std::string orbit_report_render(int n, const std::vector<LcOrbit>& orbits, ReportFormat format) {
  if (format == ReportFormat::text) {
    std::ostringstream out;
    out << "lc classes n=" << n << '\n';
    for (const auto& orbit : orbits)
      out << "class " << orbit.class_id << "  representative "
          << format_edge_list(orbit.representative) << "  orbit_size " << orbit.members.size()
          << '\n';
    out << "total " << orbits.size() << '\n';
    return out.str();
  }
  if (format == ReportFormat::json) {
    ordered_json j;
    j["n"] = n;
    j["classes"] = ordered_json::array();
    for (const auto& orbit : orbits) {
      ordered_json oj;
      oj["class_id"] = orbit.class_id;
      oj["n"] = n;
      oj["representative_edges"] = format_edge_list(orbit.representative);
      oj["orbit_size"] = orbit.members.size();
      j["classes"].push_back(std::move(oj));
    }
    j["total"] = orbits.size();
    return j.dump(2) + "\n";
  }
  if (format == ReportFormat::dot) {
    std::ostringstream out;
    for (const auto& orbit : orbits) {
      std::ostringstream name;
      name << "class_" << orbit.class_id;
      out << to_dot(orbit.representative, 0, name.str());
    }
    return out.str();
  }
  throw std::invalid_argument("report: unknown format");
}

}  // namespace bavn
