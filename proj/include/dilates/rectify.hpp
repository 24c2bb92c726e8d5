#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dilates/bounds.hpp"
#include "dilates/localize.hpp"
#include "dilates/residue_core.hpp"

namespace dilates {

/// Maps each residue of A0 to its unique integer representative inside
/// the window, unwrapping across 0. Throws ElementOutsideWindow if some
/// element is not covered by the window.
IntegerSet lift_to_integers(const ResidueSet& a0, const IntervalWindow& window);

struct RectificationResult {
    bool isomorphic = false;
    std::int64_t residue_size = 0;
    std::int64_t integer_size = 0;
    bool guarantee_applies = false;  // (1+|t|)(L-1) < p
};

/// Compares |A0 + t*A0| computed mod p against the sumset of the integer
/// lift. Equality is guaranteed when (1+|t|)(L-1) < p; the checker
/// verifies rather than assumes this.
RectificationResult rectification_check(const ResidueSet& a0, std::int64_t t,
                                        const IntervalWindow& window);

enum class StepVerdict { Holds, Fails, Vacuous };

std::string to_string(StepVerdict v);

struct StepRecord {
    std::string name;
    double value = 0;  // observed quantity
    double bound = 0;  // what it is compared against
    StepVerdict verdict = StepVerdict::Vacuous;
    std::string detail;
};

/// Full record of one proof-pipeline run.
struct PipelineTrace {
    std::int64_t p = 0;
    std::vector<std::int64_t> input_elements;
    std::int64_t t = 0;
    std::int64_t size_a = 0;
    std::int64_t s_size = 0;
    double x = 0;  // from |S| = x|A| - w(t)
    double c = 0;
    double eta_at_1 = 0;  // after normalization
    std::int64_t normalizing_unit = 1;
    std::optional<IntervalWindow> window;
    std::vector<std::int64_t> a0_elements;
    std::vector<std::int64_t> a0_lift_elements;
    std::optional<double> b_value;  // B_t(x,c); absent when vacuous
    bool short_circuited_cauchy_davenport = false;
    bool borninf_holds = false;  // x >= (|t|+1) B_t(x,c); false when vacuous
    bool any_failure = false;    // a non-vacuous step failed (bug detector)
    std::vector<StepRecord> notes;
};

/// Replays the Fourier-bias / interval-concentration / rectification
/// chain on a concrete set. beta defaults to 1/(|t|+1); a general-beta
/// variant is available for experimentation.
PipelineTrace run_proof_pipeline(const ResidueSet& a, std::int64_t t,
                                 const WTable& table = WTable{});
PipelineTrace run_proof_pipeline_with_beta(const ResidueSet& a, std::int64_t t,
                                           double beta,
                                           const WTable& table = WTable{});

}  // namespace dilates
