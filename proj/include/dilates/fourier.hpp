#pragma once

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include "dilates/bounds.hpp"
#include "dilates/residue_core.hpp"

namespace dilates {

/// Magnitudes |1_A^(r)| of the indicator transform on Z/pZ, with the
/// Fourier bias (max over non-zero frequencies) and its argmax.
struct FourierSpectrum {
    std::int64_t modulus = 0;
    std::int64_t size_a = 0;
    std::vector<double> magnitudes;  // index r = 0..p-1
    double bias = 0;                 // max over r in [1, p-1]
    std::int64_t bias_argmax = 0;    // smallest maximizing r

    /// eta = bias / |A|, the normalized bias.
    double eta() const { return bias / static_cast<double>(size_a); }
};

/// Complex transform values 1_A^(r) = sum_a exp(2 pi i a r / p).
std::vector<std::complex<double>> dft_values(const ResidueSet& a);

FourierSpectrum indicator_dft(const ResidueSet& a);

/// Relative residual of p|A|^2 = sum_r 1_A^(r) 1_{tA}^(r) conj(1_S^(r))
/// with S = A + t*A. Expected at rounding level.
double counting_identity_residual(const ResidueSet& a, std::int64_t t);

/// ((1 - xc)/sqrt(x)) |A| with x = (|A + t*A| + w(t)) / |A|. May be
/// negative (vacuous); returned as-is.
double bias_lower_bound(const ResidueSet& a, std::int64_t t,
                        const WTable& table = WTable{});

/// Dilates A by its bias argmax r* so the bias moves to frequency 1.
/// Returns (r* . A, r*).
std::pair<ResidueSet, std::int64_t> normalize_bias_to_one(const ResidueSet& a);

}  // namespace dilates
