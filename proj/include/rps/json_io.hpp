#pragma once

#include "json.hpp"
#include "rps/entropy.hpp"
#include "rps/maxent_verifier.hpp"
#include "rps/rps_core.hpp"

namespace rps {

/// Document shape shared by every distribution kind:
///   { "elements": ["R","B","G"],
///     "pmf": [ {"event": ["R","B"], "mass": 0.3}, ... ] }
/// Events are label tuples in order; [] is the empty event. Duplicate events,
/// unknown labels, and non-finite or negative masses are load errors
/// (ValidationError). Normalization is checked by validate(), not the loader.
PermutationMassFunction pmf_from_json(const nlohmann::json& doc);

/// Same document read with order ignored: each event is sorted into a subset,
/// and two entries naming the same subset are a load error rather than being
/// merged silently.
MassFunction mass_function_from_json(const nlohmann::json& doc);

nlohmann::json to_json(const PermutationMassFunction& pmf);
nlohmann::json to_json(const MassFunction& m);
/// A distribution serializes as the equivalent singleton-support document.
nlohmann::json to_json(const ProbabilityDistribution& p);

nlohmann::json entropy_report_to_json(const EntropyReport& report,
                                      const FrameOfDiscernment& frame);

nlohmann::json verification_result_to_json(const VerificationResult& result);

}  // namespace rps
