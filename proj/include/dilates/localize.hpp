#pragma once

#include <cstdint>

#include "dilates/bounds.hpp"
#include "dilates/residue_core.hpp"

namespace dilates {

/// A cyclic window of `length` consecutive residues starting at `start`,
/// together with |A ∩ I| for the set it was scanned against.
struct IntervalWindow {
    std::int64_t modulus = 0;
    std::int64_t start = 0;
    std::int64_t length = 0;  // number of consecutive residues, wrap allowed
    std::int64_t count = 0;

    bool contains(std::int64_t r) const {
        std::int64_t off = (r - start) % modulus;
        if (off < 0) off += modulus;
        return off < length;
    }
};

/// The window of `length` residues maximizing |A ∩ I| over all p cyclic
/// starts; ties resolve to the smallest start.
IntervalWindow best_interval(const ResidueSet& a, std::int64_t length);

/// Window length for the lemma's "interval of length beta*p": a real
/// interval of that length covers floor(beta*p) + 1 residues.
std::int64_t window_length_for_beta(double beta, std::int64_t p);

struct LevCheckResult {
    double beta = 0;
    double eta = 0;           // |1_A^(1)| / |A|, at frequency 1
    std::int64_t length = 0;  // window length used
    ConcentrationBound m;
    IntervalWindow window;
    bool holds = false;
    double margin = 0;  // count - M * |A|
};

/// Checks |A ∩ I| >= M(beta, eta) |A| with eta read at frequency 1.
/// Callers wanting the bias frequency normalize first.
LevCheckResult lev_guarantee_check(const ResidueSet& a, double beta);

enum class RemarkBranch {
    CosineBranchImpliesBetaGeQuarter,
    SincBranchImpliesBetaLeQuarter,
    NeitherTriggered,
};

/// Evaluates the two dichotomy hypotheses (term/beta >= 2) on the stated
/// domain eta in [0, 1/sqrt(2)], beta in (0, 1/3] and reports which fires;
/// the implied position of beta relative to 1/4 is asserted internally.
RemarkBranch remark_dichotomy(double eta, double beta);

}  // namespace dilates
