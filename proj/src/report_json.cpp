#include "drd/report_json.hpp"

#include <json.hpp>

namespace drd {

namespace {

using Json = nlohmann::ordered_json;

Json pairs(const std::vector<std::pair<Vertex, Vertex>>& assignment) {
  Json out = Json::array();
  for (auto [u, v] : assignment) out.push_back(Json::array({u, v}));
  return out;
}

Json report_object(const TheoremReport& report) {
  Json j;
  j["theorem"] = to_string(report.id);
  j["digest"] = report.digest;
  j["verdict"] = to_string(report.verdict);
  if (report.verdict == Verdict::NotApplicable) {
    j["unmet"] = report.unmet;
  } else {
    j["claim"] = report.claim;
    Json values = Json::object();
    for (const auto& [name, value] : report.values) values[name] = value;
    j["values"] = std::move(values);
  }
  return j;
}

}  // namespace

std::string to_json(const SolveResult& result) {
  Json j;
  j["rule"] = to_string(result.rule);
  j["gamma"] = result.gamma;
  j["set"] = result.witness.set;
  j["assignment"] = pairs(result.witness.assignment);
  j["method"] = to_string(result.method);
  j["explored"] = result.explored;
  return j.dump();
}

std::string to_json(const Coverage& coverage, std::optional<bool> minimal) {
  Json j;
  j["feasible"] = coverage.feasible;
  if (coverage.feasible) {
    j["rule"] = to_string(coverage.certificate.rule);
    j["set"] = coverage.certificate.set;
    j["assignment"] = pairs(coverage.certificate.assignment);
    if (minimal) j["minimal"] = *minimal;
  } else {
    j["uncovered"] = coverage.uncovered;
    j["deficient"] = coverage.deficient;
    j["rule"] = to_string(coverage.certificate.rule);
    j["set"] = coverage.certificate.set;
  }
  return j.dump();
}

std::string to_json(const Certificate& cert) {
  Json j;
  j["rule"] = to_string(cert.rule);
  j["set"] = cert.set;
  j["assignment"] = pairs(cert.assignment);
  return j.dump();
}

std::string to_json(const TheoremReport& report) { return report_object(report).dump(); }

std::string to_json(const CorpusSummary& summary) {
  Json j;
  j["instances"] = summary.instances;
  j["skipped"] = summary.skipped;
  Json results = Json::object();
  for (const auto& [id, tally] : summary.tallies) {
    results[std::string(to_string(id))] = Json{{"pass", tally.pass}, {"fail", tally.fail},
                                               {"not_applicable", tally.not_applicable}};
  }
  j["results"] = std::move(results);
  Json cxs = Json::array();
  for (const auto& cx : summary.counterexamples) {
    Json c = report_object(cx.report);
    c["instance"] = cx.instance_text;
    cxs.push_back(std::move(c));
  }
  j["counterexamples"] = std::move(cxs);
  return j.dump();
}

std::string radius_json(std::span<const Vertex> subset, std::optional<int> radius) {
  Json j;
  j["subset"] = std::vector<Vertex>(subset.begin(), subset.end());
  j["radius"] = radius ? Json(*radius) : Json(nullptr);
  return j.dump();
}

}  // namespace drd
