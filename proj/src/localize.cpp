#include "dilates/localize.hpp"

#include <cmath>
#include <stdexcept>

#include "dilates/fourier.hpp"

namespace dilates {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

IntervalWindow best_interval(const ResidueSet& a, std::int64_t length) {
    if (a.empty()) throw EmptyInput("best_interval: empty set");
    const std::int64_t p = a.modulus();
    if (length < 1 || length > p)
        throw DomainError("best_interval: window length outside [1, p]");
    // prefix[i] = |A ∩ [0, i)|
    std::vector<std::int64_t> prefix(p + 1, 0);
    for (std::int64_t i = 0; i < p; ++i)
        prefix[i + 1] = prefix[i] + (a.contains(i) ? 1 : 0);
    const std::int64_t total = prefix[p];
    IntervalWindow best{p, 0, length, -1};
    for (std::int64_t start = 0; start < p; ++start) {
        const std::int64_t end = start + length;
        const std::int64_t count =
            end <= p ? prefix[end] - prefix[start]
                     : (total - prefix[start]) + prefix[end - p];
        if (count > best.count) {
            best.start = start;
            best.count = count;
        }
    }
    return best;
}

std::int64_t window_length_for_beta(double beta, std::int64_t p) {
    const auto points =
        static_cast<std::int64_t>(std::floor(beta * static_cast<double>(p))) + 1;
    return std::min(points, p);
}

LevCheckResult lev_guarantee_check(const ResidueSet& a, double beta) {
    if (a.empty()) throw EmptyInput("lev_guarantee_check: empty set");
    if (!(beta > 0) || beta > 0.5)
        throw DomainError("lev_guarantee_check: beta outside (0, 1/2]");
    const auto spec = indicator_dft(a);
    LevCheckResult res;
    res.beta = beta;
    res.eta = spec.magnitudes[1] / static_cast<double>(a.size());
    if (res.eta > 1) res.eta = 1;  // rounding guard
    res.length = window_length_for_beta(beta, a.modulus());
    res.m = concentration_M(beta, res.eta);
    res.window = best_interval(a, res.length);
    const double required = res.m.m * static_cast<double>(a.size());
    res.margin = static_cast<double>(res.window.count) - required;
    res.holds = res.margin >= -1e-9;
    return res;
}

RemarkBranch remark_dichotomy(double eta, double beta) {
    if (!(eta >= 0) || eta > 1.0 / std::sqrt(2.0) + 1e-12)
        throw DomainError("remark_dichotomy: eta outside [0, 1/sqrt(2)]");
    if (!(beta > 0) || beta > 1.0 / 3.0 + 1e-12)
        throw DomainError("remark_dichotomy: beta outside (0, 1/3]");
    const ConcentrationBound m = concentration_M(beta, eta);
    const bool cosine_fires = m.term_cosine / beta >= 2.0;
    const bool sinc_fires = kPi / sinc_g_inverse(eta * sinc_g(kPi * beta)) >= 2.0;
    if (cosine_fires && beta < 0.25 - 1e-12)
        throw std::logic_error("remark_dichotomy: cosine branch fired with beta < 1/4");
    if (sinc_fires && beta > 0.25 + 1e-12)
        throw std::logic_error("remark_dichotomy: sinc branch fired with beta > 1/4");
    if (cosine_fires) return RemarkBranch::CosineBranchImpliesBetaGeQuarter;
    if (sinc_fires) return RemarkBranch::SincBranchImpliesBetaLeQuarter;
    return RemarkBranch::NeitherTriggered;
}

}  // namespace dilates
