#pragma once

#include <string>

#include <json.hpp>

#include "dilates/bounds.hpp"
#include "dilates/fourier.hpp"
#include "dilates/localize.hpp"
#include "dilates/rectify.hpp"
#include "dilates/search.hpp"

namespace dilates {

/// Rounds through a 15-significant-digit decimal representation; the
/// JSON renderings use this so that parse(render(x)) round-trips.
double round15(double x);

nlohmann::json to_json(const BoundProfile& p);
BoundProfile bound_profile_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ConcentrationBound& m);

/// Bias summary {p, sizeA, bias, argmax, eta}.
nlohmann::json bias_summary_json(const FourierSpectrum& s);

nlohmann::json to_json(const IntervalWindow& w);
IntervalWindow interval_window_from_json(const nlohmann::json& j);

/// Window report {p, sizeA, beta, L, start, count, eta, M, holds, margin}.
nlohmann::json to_json(const LevCheckResult& r, std::int64_t size_a);

nlohmann::json to_json(const RectificationResult& r);

nlohmann::json to_json(const StepRecord& s);
nlohmann::json to_json(const PipelineTrace& t);
PipelineTrace pipeline_trace_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SearchReport& r);
SearchReport search_report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const VerifyReport& r);
VerifyReport verify_report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ConjectureTable& t);

// CSV renderings
std::string spectrum_csv(const FourierSpectrum& s);
std::string bound_profile_csv(const BoundProfile& p);
std::string search_report_csv(const SearchReport& r);
std::string conjecture_csv(const ConjectureTable& t);

}  // namespace dilates
