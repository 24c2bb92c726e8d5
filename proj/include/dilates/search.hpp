#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dilates/bounds.hpp"
#include "dilates/residue_core.hpp"

namespace dilates {

struct BoundComparison {
    std::string name;
    double value = 0;
    bool satisfied = false;
};

struct SearchReport {
    std::optional<std::int64_t> p;  // absent for integer-side searches
    std::int64_t t = 0;
    std::int64_t k = 0;
    std::int64_t min_sumset_size = 0;
    std::vector<std::vector<std::int64_t>> witnesses;  // canonical, capped
    bool witnesses_truncated = false;
    std::int64_t sets_examined = 0;
    std::vector<BoundComparison> bound_comparisons;
    double seconds = 0;
    std::optional<std::int64_t> diameter_cap;  // integer-side searches only
};

inline constexpr std::size_t kWitnessCap = 16;

/// Exact minimum of |A + t*A| over all k-subsets of Z/pZ, with affine
/// orbit deduplication. Throws InfeasibleEnumeration when C(p, k) is out
/// of desk range.
SearchReport exhaustive_min_sumset_modp(std::int64_t p, std::int64_t t,
                                        std::int64_t k, int threads = 1);

/// Exact minimum of |A + t*A| over integer k-sets normalized to min = 0
/// and max <= diameter_cap. A capped search is a witness search, not a
/// proof of the global minimum; the report records the cap.
SearchReport exhaustive_min_sumset_integers(std::int64_t k, std::int64_t t,
                                            std::int64_t diameter_cap);

struct Violation {
    std::vector<std::int64_t> elements;
    std::int64_t sumset_size = 0;
    double bound = 0;
};

struct VerifyReport {
    std::int64_t p = 0;
    std::int64_t t = 0;
    std::string mode;  // "exhaustive" or "sample"
    std::int64_t sets_checked = 0;
    std::vector<Violation> violations;  // must stay empty
    double min_slack = 0;               // min over sets of size - bound
    std::uint64_t seed = 0;
    double seconds = 0;
};

/// Checks |A + t*A| >= min(f_|t|(c)|A| - w(t), p) over every non-empty
/// subset of Z/pZ.
VerifyReport verify_theorem1_exhaustive(std::int64_t p, std::int64_t t,
                                        const WTable& table = WTable{});

/// Same check over n seeded random subsets (size uniform in [1, p],
/// uniform k-subsets via partial shuffle).
VerifyReport verify_theorem1_sampled(std::int64_t p, std::int64_t t,
                                     std::int64_t n, std::uint64_t seed,
                                     const WTable& table = WTable{});

struct ConjectureRow {
    std::int64_t k = 0;
    std::int64_t min_size = 0;
    bool capped_at_p = false;   // min hit p; deficiency not meaningful
    std::int64_t deficiency = 0;  // max(0, (|t|+1)k - min) when min < p
    bool degenerate = false;      // k = 1 artifact
};

struct ConjectureTable {
    std::int64_t p = 0;
    std::int64_t t = 0;
    std::vector<ConjectureRow> rows;
    std::int64_t empirical_c_lower_bound = 0;  // running max deficiency
};

/// Empirical deficiency table for Conjecture 1; reports a lower bound on
/// c(t), never a proof.
ConjectureTable conjecture1_explorer(std::int64_t p, std::int64_t t,
                                     std::int64_t k_min, std::int64_t k_max,
                                     int threads = 1);

}  // namespace dilates
