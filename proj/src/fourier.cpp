#include "dilates/fourier.hpp"

#include <cmath>

namespace dilates {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Kahan-compensated accumulator; keeps Parseval residuals at rounding
// level for p up to 1e6.
struct Kahan {
    double sum = 0;
    double comp = 0;
    void add(double x) {
        const double y = x - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
};

// p-th root table: roots[k] = exp(2 pi i k / p)
std::vector<std::complex<double>> root_table(std::int64_t p) {
    std::vector<std::complex<double>> roots(p);
    for (std::int64_t k = 0; k < p; ++k) {
        const double ang = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(p);
        roots[k] = {std::cos(ang), std::sin(ang)};
    }
    return roots;
}

std::vector<std::complex<double>> dft_with_table(
    const ResidueSet& a, const std::vector<std::complex<double>>& roots) {
    const std::int64_t p = a.modulus();
    std::vector<std::complex<double>> out(p);
    for (std::int64_t r = 0; r < p; ++r) {
        Kahan re, im;
        for (const std::int64_t e : a.elements()) {
            const auto& w = roots[(e * r) % p];
            re.add(w.real());
            im.add(w.imag());
        }
        out[r] = {re.sum, im.sum};
    }
    return out;
}

}  // namespace

std::vector<std::complex<double>> dft_values(const ResidueSet& a) {
    if (a.empty()) throw EmptyInput("dft_values: empty set");
    return dft_with_table(a, root_table(a.modulus()));
}

FourierSpectrum indicator_dft(const ResidueSet& a) {
    if (a.empty()) throw EmptyInput("indicator_dft: empty set");
    const auto values = dft_values(a);
    FourierSpectrum spec;
    spec.modulus = a.modulus();
    spec.size_a = a.size();
    spec.magnitudes.resize(values.size());
    spec.magnitudes[0] = static_cast<double>(a.size());  // exact by construction
    spec.bias = -1;
    spec.bias_argmax = 1;
    for (std::int64_t r = 1; r < spec.modulus; ++r) {
        spec.magnitudes[r] = std::abs(values[r]);
        if (spec.magnitudes[r] > spec.bias) {  // ties keep the smallest r
            spec.bias = spec.magnitudes[r];
            spec.bias_argmax = r;
        }
    }
    return spec;
}

double counting_identity_residual(const ResidueSet& a, std::int64_t t) {
    if (a.empty()) throw EmptyInput("counting_identity_residual: empty set");
    const std::int64_t p = a.modulus();
    const auto roots = root_table(p);
    const auto ta = dilate(a, t);
    const auto fa = dft_with_table(a, roots);
    const auto fta = dft_with_table(ta, roots);
    const auto fs = dft_with_table(sum_of_dilates(a, t), roots);
    Kahan re, im;
    for (std::int64_t r = 0; r < p; ++r) {
        const auto term = fa[r] * fta[r] * std::conj(fs[r]);
        re.add(term.real());
        im.add(term.imag());
    }
    // every pair sum lands in S, so the identity totals p |A| |tA|
    // (|tA| < |A| when t = 0 mod p)
    const double lhs = static_cast<double>(p) * static_cast<double>(a.size()) *
                       static_cast<double>(ta.size());
    return std::abs(std::complex<double>(lhs - re.sum, -im.sum)) / lhs;
}

double bias_lower_bound(const ResidueSet& a, std::int64_t t, const WTable& table) {
    if (a.empty()) throw EmptyInput("bias_lower_bound: empty set");
    const double w = static_cast<double>(table.lookup(t));
    const double k = static_cast<double>(a.size());
    const double s = static_cast<double>(sum_of_dilates(a, t).size());
    const double x = (s + w) / k;
    const double c = a.density();
    return (1.0 - x * c) / std::sqrt(x) * k;
}

std::pair<ResidueSet, std::int64_t> normalize_bias_to_one(const ResidueSet& a) {
    if (a.empty()) throw EmptyInput("normalize_bias_to_one: empty set");
    const auto spec = indicator_dft(a);
    const std::int64_t unit = spec.bias_argmax;
    return {dilate(a, unit), unit};
}

}  // namespace dilates
