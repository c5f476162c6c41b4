#include "rps/json_io.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "rps/error.hpp"

namespace rps {

namespace {

const nlohmann::json& require_array(const nlohmann::json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw ValidationError(std::string("document is missing \"") + key + "\"");
  }
  const nlohmann::json& value = doc.at(key);
  if (!value.is_array()) {
    throw ValidationError(std::string("\"") + key + "\" must be an array");
  }
  return value;
}

FrameOfDiscernment frame_from_json(const nlohmann::json& doc) {
  const nlohmann::json& elements = require_array(doc, "elements");
  std::vector<std::string> labels;
  for (const auto& label : elements) {
    if (!label.is_string()) {
      throw ValidationError("\"elements\" must be an array of strings");
    }
    labels.push_back(label.get<std::string>());
  }
  return FrameOfDiscernment(std::move(labels));
}

struct ParsedEntry {
  std::vector<std::string> labels;
  double mass;
};

ParsedEntry parse_entry(const nlohmann::json& entry, std::size_t position) {
  const std::string where = "pmf[" + std::to_string(position) + "]";
  if (!entry.is_object() || !entry.contains("event") || !entry.contains("mass")) {
    throw ValidationError(where + " must be an object with \"event\" and \"mass\"");
  }
  const nlohmann::json& event = entry.at("event");
  if (!event.is_array()) {
    throw ValidationError(where + ".event must be an array of labels");
  }
  ParsedEntry parsed;
  for (const auto& label : event) {
    if (!label.is_string()) {
      throw ValidationError(where + ".event must be an array of labels");
    }
    parsed.labels.push_back(label.get<std::string>());
  }
  const nlohmann::json& mass = entry.at("mass");
  if (!mass.is_number()) {
    throw ValidationError(where + ".mass must be a number");
  }
  parsed.mass = mass.get<double>();
  if (!std::isfinite(parsed.mass) || parsed.mass < 0.0) {
    throw ValidationError(where + ".mass must be finite and non-negative, got " +
                          mass.dump());
  }
  return parsed;
}

const nlohmann::json& pmf_array(const nlohmann::json& doc) {
  return require_array(doc, "pmf");
}

nlohmann::json labels_json(const std::vector<std::string>& labels) {
  return nlohmann::json(labels);
}

}  // namespace

PermutationMassFunction pmf_from_json(const nlohmann::json& doc) {
  FrameOfDiscernment frame = frame_from_json(doc);
  PermutationMassFunction::MassMap masses;
  std::size_t position = 0;
  for (const auto& entry : pmf_array(doc)) {
    ParsedEntry parsed = parse_entry(entry, position++);
    PermutationEvent event = event_from_labels(parsed.labels, frame);
    if (!masses.emplace(event, parsed.mass).second) {
      throw ValidationError("duplicate event " + event_to_string(event, frame));
    }
  }
  return PermutationMassFunction(std::move(frame), std::move(masses));
}

MassFunction mass_function_from_json(const nlohmann::json& doc) {
  FrameOfDiscernment frame = frame_from_json(doc);
  MassFunction::MassMap masses;
  std::size_t position = 0;
  for (const auto& entry : pmf_array(doc)) {
    ParsedEntry parsed = parse_entry(entry, position++);
    IndexSubset subset = forget_order(event_from_labels(parsed.labels, frame));
    if (!masses.emplace(subset, parsed.mass).second) {
      throw ValidationError("duplicate subset " + subset_to_string(subset, frame));
    }
  }
  return MassFunction(std::move(frame), std::move(masses));
}

nlohmann::json to_json(const PermutationMassFunction& pmf) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [event, mass] : pmf.masses()) {
    entries.push_back({{"event", labels_json(event_labels(event, pmf.frame()))},
                       {"mass", mass}});
  }
  return {{"elements", labels_json(pmf.frame().labels())}, {"pmf", entries}};
}

nlohmann::json to_json(const MassFunction& m) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [subset, mass] : m.masses()) {
    std::vector<std::string> labels;
    for (unsigned index : subset) labels.push_back(m.frame().label(index));
    entries.push_back({{"event", labels_json(labels)}, {"mass", mass}});
  }
  return {{"elements", labels_json(m.frame().labels())}, {"pmf", entries}};
}

nlohmann::json to_json(const ProbabilityDistribution& p) {
  nlohmann::json entries = nlohmann::json::array();
  for (std::size_t k = 0; k < p.probs().size(); ++k) {
    entries.push_back({{"event", nlohmann::json::array({p.frame().label(k)})},
                       {"mass", p.probs()[k]}});
  }
  return {{"elements", labels_json(p.frame().labels())}, {"pmf", entries}};
}

nlohmann::json entropy_report_to_json(const EntropyReport& report,
                                      const FrameOfDiscernment& frame) {
  nlohmann::json out = {{"value", report.value}, {"base", report.base}};
  if (report.terms) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& term : *report.terms) {
      terms.push_back({{"event", labels_json(event_labels(term.event, frame))},
                       {"contribution", term.contribution}});
    }
    out["terms"] = std::move(terms);
  }
  return out;
}

nlohmann::json verification_result_to_json(const VerificationResult& result) {
  return {{"converged", result.converged},
          {"iterations_used", result.iterations_used},
          {"achieved_entropy", result.achieved_entropy},
          {"entropy_gap", result.entropy_gap},
          {"pmf_sup_distance", result.pmf_sup_distance},
          {"kkt_residual", result.kkt_residual}};
}

}  // namespace rps
