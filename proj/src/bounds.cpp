#include "dilates/bounds.hpp"

#include <cmath>
#include <functional>

#include "dilates/residue_core.hpp"

namespace dilates {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kAbsTol = 1e-13;
constexpr int kMaxIter = 200;

// Bisection on a bracket with f(lo) >= 0 >= f(hi) (decreasing f).
// Asserts the sign configuration before iterating.
double bisect_decreasing(const std::function<double(double)>& f, double lo,
                         double hi, const char* what) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0) return lo;
    if (fhi == 0) return hi;
    if (flo < 0 || fhi > 0)
        throw BracketFailure(std::string(what) + ": no sign change on bracket");
    for (int i = 0; i < kMaxIter && hi - lo > kAbsTol; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm > 0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

// Leading constant L_t and the right-hand side of the defining equation
// L_t (1 - cx) = rhs(x). For |t| = 2 the paper's equation has no sinc term.
double leading_constant(std::int64_t abs_t) {
    if (abs_t == 2) return 3.0;
    return (abs_t + 1) * std::sin(kPi / (abs_t + 1));
}

double defining_rhs(std::int64_t abs_t, double x) {
    if (abs_t == 2) return std::pow(x, 1.5);
    return std::pow(x, 1.5) * std::sin(kPi / x);
}

std::int64_t require_abs_t(std::int64_t t) {
    const std::int64_t a = t < 0 ? -t : t;
    if (a < 2) throw DomainError("bound functions require |t| >= 2, got t = " +
                                 std::to_string(t));
    return a;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

}  // namespace

double sinc_g(double u) {
    if (!(u > 0) || u > kPi) throw DomainError("sinc_g: argument outside (0, pi]");
    return std::sin(u) / u;
}

double sinc_g_inverse(double y) {
    if (!(y >= 0) || y >= 1) throw DomainError("sinc_g_inverse: argument outside [0, 1)");
    // sin(pi) is not exactly 0 in doubles; anything at or below g(pi)
    // already has the answer pi
    if (y <= std::sin(kPi) / kPi) return kPi;
    return bisect_decreasing([y](double u) { return std::sin(u) / u - y; }, 1e-9,
                             kPi, "sinc_g_inverse");
}

double critical_density(std::int64_t t) {
    const std::int64_t a = require_abs_t(t);
    if (a == 2) return (1.0 - std::pow(2.0, 1.5) / 3.0) / 2.0;
    const double v = 0.5 * (1.0 - std::pow(2.0, 1.5) / leading_constant(a));
    // |t| = 3 gives exactly 0 up to rounding noise
    return v < 0 ? 0.0 : v;
}

double f_t(std::int64_t t, double c) {
    const std::int64_t a = require_abs_t(t);
    if (!(c >= 0) || c > 1) throw DomainError("f_t: density outside [0, 1]");
    const double c0 = critical_density(t);
    if (c >= c0) return 2.0;
    const double big_l = leading_constant(a);
    // upper end of the bracket: the c = 0 root of L = rhs(x)
    const double x_hi = bisect_decreasing(
        [&](double x) { return big_l - defining_rhs(a, x); }, 2.0, 4.0, "f_t(c=0)");
    if (c == 0) return x_hi;
    return bisect_decreasing(
        [&](double x) { return big_l * (1.0 - c * x) - defining_rhs(a, x); }, 2.0,
        x_hi, "f_t");
}

double f_t_inverse_density(std::int64_t t, double x_target) {
    const std::int64_t a = require_abs_t(t);
    const double x_max = f_t(t, 0.0);
    if (!(x_target >= 2.0) || x_target > x_max + 1e-12)
        throw DomainError("f_t_inverse_density: target outside [2, f_t(0)]");
    // the defining equation is linear in c
    return (1.0 - defining_rhs(a, x_target) / leading_constant(a)) / x_target;
}

ConcentrationBound concentration_M(double beta, double eta) {
    if (!(beta > 0) || beta > 0.5)
        throw DomainError("concentration_M: beta outside (0, 1/2]");
    if (!(eta >= 0) || eta > 1 + 1e-12)
        throw DomainError("concentration_M: eta outside [0, 1]");
    if (eta > 1) eta = 1;
    ConcentrationBound b;
    b.beta = beta;
    b.eta = eta;
    const double pb = kPi * beta;
    const double cospb = std::cos(pb);
    b.term_cosine = (eta + 1.0 - 2.0 * cospb) / (2.0 * (1.0 - cospb));
    b.term_sinc = eta == 1.0 ? 1.0 : pb / sinc_g_inverse(eta * sinc_g(pb));
    b.m = std::max(b.term_cosine, b.term_sinc);
    return b;
}

std::int64_t WTable::lookup(std::int64_t t) const {
    const auto v = try_lookup(t);
    if (!v) throw UnknownConstant(t);
    return *v;
}

std::optional<std::int64_t> WTable::try_lookup(std::int64_t t) const {
    const std::int64_t a = t < 0 ? -t : t;
    if (const auto it = extra_.find(a); it != extra_.end()) return it->second;
    switch (a) {
        case 2: return 2;
        case 3: return 4;
        case 4: return 10;
        default: return std::nullopt;
    }
}

std::int64_t w_constant(std::int64_t t) { return WTable{}.lookup(t); }
std::int64_t w_constant(std::int64_t t, const WTable& table) { return table.lookup(t); }

double theorem1_bound(std::int64_t p, std::int64_t size_a, std::int64_t t,
                      const WTable& table) {
    if (size_a < 1) throw DomainError("theorem1_bound: |A| must be >= 1");
    const double c = static_cast<double>(size_a) / static_cast<double>(p);
    const double f = f_t(t, c);
    const double w = static_cast<double>(table.lookup(t));
    return std::min(f * static_cast<double>(size_a) - w, static_cast<double>(p));
}

std::int64_t integer_reference_bound(std::int64_t t, std::int64_t k,
                                     IntegerBoundRule rule, const WTable& table) {
    if (k < 1) throw DomainError("integer_reference_bound: |A| must be >= 1");
    const std::int64_t a = require_abs_t(t);
    switch (rule) {
        case IntegerBoundRule::trivial3:
            return 3 * k - 2;
        case IntegerBoundRule::nathanson:
            if (a < 3) throw RuleNotApplicable("nathanson bound needs |t| >= 3");
            return ceil_div(7 * k - 5, 2);
        case IntegerBoundRule::exact_t3:
            if (a != 3) throw RuleNotApplicable("exact_t3 bound needs |t| = 3");
            return 4 * k - 4;
        case IntegerBoundRule::prime_t:
            if (!is_prime(a)) throw RuleNotApplicable("prime_t bound needs t prime");
            return (1 + a) * k - ceil_div(a * (a + 2), 4);
        case IntegerBoundRule::universal:
            return (1 + a) * k - table.lookup(t);
    }
    throw RuleNotApplicable("unknown rule");
}

BoundProfile make_bound_profile(std::int64_t t, double c, const WTable& table) {
    BoundProfile prof;
    prof.t = t;
    prof.c = c;
    prof.critical_density = critical_density(t);
    prof.f_value = f_t(t, c);
    prof.w = table.try_lookup(t);
    prof.improves_on_cauchy_davenport = prof.f_value > 2.0;
    return prof;
}

BoundProfile make_bound_profile(std::int64_t t, std::int64_t p, std::int64_t size_a,
                                const WTable& table) {
    const double c = static_cast<double>(size_a) / static_cast<double>(p);
    BoundProfile prof = make_bound_profile(t, c, table);
    prof.p = p;
    prof.size_a = size_a;
    if (prof.w) prof.theorem_bound = theorem1_bound(p, size_a, t, table);
    return prof;
}

}  // namespace dilates
