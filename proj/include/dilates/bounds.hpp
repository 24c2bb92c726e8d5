#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "dilates/errors.hpp"

namespace dilates {

/// g(u) = sin(u)/u on (0, pi]; strictly decreasing there.
double sinc_g(double u);

/// Inverse of g on [0, 1): the unique u in (0, pi] with g(u) = y.
double sinc_g_inverse(double y);

/// c_t^(0), the density below which the transcendental bound beats 2.
/// Zero exactly when |t| = 3. Requires |t| >= 2.
double critical_density(std::int64_t t);

/// f_|t|(c): the root x >= 2 of the defining equation for c <= c_t^(0),
/// and 2 otherwise.
double f_t(std::int64_t t, double c);

/// The density c with f_|t|(c) = x_target (closed form: the defining
/// equation is linear in c).
double f_t_inverse_density(std::int64_t t, double x_target);

struct ConcentrationBound {
    double beta = 0;
    double eta = 0;
    double term_cosine = 0;
    double term_sinc = 0;
    double m = 0;  // max of the two terms
};

/// M(beta, eta) = max((eta + 1 - 2cos(pi beta)) / (2(1 - cos(pi beta))),
///                    pi beta / g^{-1}(eta g(pi beta))).
ConcentrationBound concentration_M(double beta, double eta);

/// Table of the universal integer-bound constants w(t). Built-in entries
/// cover |t| in {2, 3, 4}; further values may be configured but are never
/// invented. Negative t resolves through |t|.
class WTable {
  public:
    WTable() = default;

    void set(std::int64_t abs_t, std::int64_t w) { extra_[abs_t] = w; }
    std::int64_t lookup(std::int64_t t) const;
    std::optional<std::int64_t> try_lookup(std::int64_t t) const;

  private:
    std::map<std::int64_t, std::int64_t> extra_;
};

std::int64_t w_constant(std::int64_t t);
std::int64_t w_constant(std::int64_t t, const WTable& table);

/// min(f_|t|(|A|/p) * |A| - w(t), p).
double theorem1_bound(std::int64_t p, std::int64_t size_a, std::int64_t t,
                      const WTable& table = WTable{});

enum class IntegerBoundRule { trivial3, nathanson, exact_t3, prime_t, universal };

/// Classical lower bounds for |A + t*A| over the integers, |A| = k.
std::int64_t integer_reference_bound(std::int64_t t, std::int64_t k,
                                     IntegerBoundRule rule,
                                     const WTable& table = WTable{});

struct BoundProfile {
    std::int64_t t = 0;
    double c = 0;
    double critical_density = 0;
    double f_value = 0;
    std::optional<std::int64_t> w;          // absent if not in the table
    std::optional<double> theorem_bound;    // needs w and (p, |A|)
    std::optional<std::int64_t> p;
    std::optional<std::int64_t> size_a;
    bool improves_on_cauchy_davenport = false;  // false for |t| = 3 and c >= c0
};

BoundProfile make_bound_profile(std::int64_t t, double c,
                                const WTable& table = WTable{});
BoundProfile make_bound_profile(std::int64_t t, std::int64_t p, std::int64_t size_a,
                                const WTable& table = WTable{});

}  // namespace dilates
