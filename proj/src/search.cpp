#include "dilates/search.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <future>
#include <random>
#include <stdexcept>
#include <unordered_set>

namespace dilates {

namespace {

constexpr double kEnumLimit = 2e7;

double binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    double r = 1;
    for (std::int64_t i = 0; i < k; ++i)
        r *= static_cast<double>(n - i) / static_cast<double>(i + 1);
    return r;
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

struct PartitionResult {
    std::int64_t min_size = 0;
    std::vector<std::uint64_t> witness_masks;  // canonical, capped
    bool truncated = false;
    std::int64_t examined = 0;
};

// Minimum sumset size over all k-subsets of Z/pZ whose smallest element
// is `smallest`; dedupes affine orbits locally.
PartitionResult scan_partition(std::int64_t p, std::int64_t t, std::int64_t k,
                               std::int64_t smallest) {
    PartitionResult res;
    res.min_size = p + 1;
    std::unordered_set<std::uint64_t> seen;
    // remaining k-1 elements drawn from (smallest, p)
    std::vector<std::int64_t> idx(k - 1);
    for (std::int64_t i = 0; i < k - 1; ++i) idx[i] = smallest + 1 + i;
    if (k - 1 > p - 1 - smallest) return res;
    const std::uint64_t base = std::uint64_t{1} << smallest;
    while (true) {
        std::uint64_t mask = base;
        for (const std::int64_t v : idx) mask |= std::uint64_t{1} << v;
        ++res.examined;
        const std::uint64_t canon = canonical_mask(mask, p);
        if (seen.insert(canon).second) {
            const std::int64_t size =
                std::popcount(sum_of_dilates_mask(canon, t, p));
            if (size < res.min_size) {
                res.min_size = size;
                res.witness_masks.assign(1, canon);
                res.truncated = false;
            } else if (size == res.min_size) {
                if (res.witness_masks.size() < kWitnessCap)
                    res.witness_masks.push_back(canon);
                else
                    res.truncated = true;
            }
        }
        // next combination (lexicographic)
        std::int64_t i = k - 2;
        while (i >= 0 && idx[i] == p - (k - 1 - i)) --i;
        if (i < 0) break;
        ++idx[i];
        for (std::int64_t j = i + 1; j < k - 1; ++j) idx[j] = idx[j - 1] + 1;
    }
    return res;
}

void add_modp_bound_comparisons(SearchReport& rep, std::int64_t p, std::int64_t t,
                                std::int64_t k) {
    std::int64_t tm = t % p;
    if (tm < 0) tm += p;
    if (tm == 0) return;  // t collapses; the classical bounds do not apply
    const auto cd = cauchy_davenport_bound(k, k, p);
    rep.bound_comparisons.push_back(
        {"cauchy_davenport", static_cast<double>(cd),
         rep.min_sumset_size >= cd});
    const std::int64_t abs_t = t < 0 ? -t : t;
    if (abs_t >= 2) {
        if (WTable{}.try_lookup(t)) {
            const double th = theorem1_bound(p, k, t);
            rep.bound_comparisons.push_back(
                {"theorem1", th,
                 static_cast<double>(rep.min_sumset_size) >= th - 1e-9});
        }
    }
}

}  // namespace

SearchReport exhaustive_min_sumset_modp(std::int64_t p, std::int64_t t,
                                        std::int64_t k, int threads) {
    if (!is_prime(p)) throw CompositeModulus(p);
    if (k < 1 || k > p) throw DomainError("exhaustive_min_sumset_modp: k outside [1, p]");
    if (p > 61)
        throw InfeasibleEnumeration(
            "exhaustive_min_sumset_modp: p > 61 exceeds the single-word kernel",
            binomial(p, k));
    if (binomial(p, k) > kEnumLimit)
        throw InfeasibleEnumeration(
            "exhaustive_min_sumset_modp: C(p,k) too large; switch to sampling",
            binomial(p, k));

    Timer timer;
    std::vector<PartitionResult> parts(p - k + 1);
    if (threads <= 1) {
        for (std::int64_t s = 0; s + k <= p; ++s)
            parts[s] = scan_partition(p, t, k, s);
    } else {
        std::vector<std::future<PartitionResult>> futures;
        futures.reserve(parts.size());
        for (std::int64_t s = 0; s + k <= p; ++s)
            futures.push_back(std::async(std::launch::async, scan_partition, p, t,
                                         k, s));
        for (std::size_t i = 0; i < futures.size(); ++i) parts[i] = futures[i].get();
    }

    SearchReport rep;
    rep.p = p;
    rep.t = t;
    rep.k = k;
    rep.min_sumset_size = p + 1;
    std::vector<std::uint64_t> masks;
    for (const auto& part : parts) {
        rep.sets_examined += part.examined;
        if (part.examined == 0) continue;
        if (part.min_size < rep.min_sumset_size) {
            rep.min_sumset_size = part.min_size;
            masks = part.witness_masks;
            rep.witnesses_truncated = part.truncated;
        } else if (part.min_size == rep.min_sumset_size) {
            masks.insert(masks.end(), part.witness_masks.begin(),
                         part.witness_masks.end());
            rep.witnesses_truncated = rep.witnesses_truncated || part.truncated;
        }
    }
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    if (masks.size() > kWitnessCap) {
        masks.resize(kWitnessCap);
        rep.witnesses_truncated = true;
    }
    for (const std::uint64_t m : masks) {
        // witness re-verification
        if (std::popcount(sum_of_dilates_mask(m, t, p)) != rep.min_sumset_size)
            throw std::logic_error("witness re-verification failed");
        rep.witnesses.push_back(mask_to_elements(m));
    }
    add_modp_bound_comparisons(rep, p, t, k);
    rep.seconds = timer.seconds();
    return rep;
}

SearchReport exhaustive_min_sumset_integers(std::int64_t k, std::int64_t t,
                                            std::int64_t diameter_cap) {
    if (k < 1) throw DomainError("exhaustive_min_sumset_integers: k >= 1 required");
    if (diameter_cap < k - 1)
        throw DomainError("exhaustive_min_sumset_integers: cap below k - 1");
    if (binomial(diameter_cap, k - 1) > kEnumLimit)
        throw InfeasibleEnumeration(
            "exhaustive_min_sumset_integers: C(cap, k-1) too large",
            binomial(diameter_cap, k - 1));

    Timer timer;
    SearchReport rep;
    rep.t = t;
    rep.k = k;
    rep.diameter_cap = diameter_cap;
    rep.min_sumset_size = -1;

    // all k-sets with min 0 and max <= cap: {0} plus k-1 values from [1, cap]
    std::vector<std::int64_t> idx(k - 1);
    for (std::int64_t i = 0; i < k - 1; ++i) idx[i] = i + 1;
    std::vector<std::int64_t> elems(k);
    while (true) {
        elems[0] = 0;
        std::copy(idx.begin(), idx.end(), elems.begin() + 1);
        ++rep.sets_examined;
        const IntegerSet a(elems);
        const std::int64_t size = integer_sum_of_dilates(a, t).size();
        if (rep.min_sumset_size < 0 || size < rep.min_sumset_size) {
            rep.min_sumset_size = size;
            rep.witnesses.assign(1, a.elements());
            rep.witnesses_truncated = false;
        } else if (size == rep.min_sumset_size) {
            if (rep.witnesses.size() < kWitnessCap)
                rep.witnesses.push_back(a.elements());
            else
                rep.witnesses_truncated = true;
        }
        if (k == 1) break;
        std::int64_t i = k - 2;
        while (i >= 0 && idx[i] == diameter_cap - (k - 2 - i)) --i;
        if (i < 0) break;
        ++idx[i];
        for (std::int64_t j = i + 1; j < k - 1; ++j) idx[j] = idx[j - 1] + 1;
    }

    for (const auto& w : rep.witnesses)
        if (integer_sum_of_dilates(IntegerSet(w), t).size() != rep.min_sumset_size)
            throw std::logic_error("witness re-verification failed");

    const std::int64_t abs_t = t < 0 ? -t : t;
    if (abs_t >= 2) {
        const auto add = [&](const char* name, IntegerBoundRule rule) {
            try {
                const auto b = integer_reference_bound(t, k, rule);
                rep.bound_comparisons.push_back(
                    {name, static_cast<double>(b), rep.min_sumset_size >= b});
            } catch (const RuleNotApplicable&) {
            } catch (const UnknownConstant&) {
            }
        };
        add("trivial3", IntegerBoundRule::trivial3);
        add("nathanson", IntegerBoundRule::nathanson);
        add("exact_t3", IntegerBoundRule::exact_t3);
        add("prime_t", IntegerBoundRule::prime_t);
        add("universal", IntegerBoundRule::universal);
    }
    rep.seconds = timer.seconds();
    return rep;
}

namespace {

void record_check(VerifyReport& rep, const std::vector<std::int64_t>& elems,
                  std::int64_t sumset_size, double bound) {
    const double slack = static_cast<double>(sumset_size) - bound;
    if (rep.sets_checked == 1 || slack < rep.min_slack) rep.min_slack = slack;
    if (slack < -1e-9) rep.violations.push_back({elems, sumset_size, bound});
}

}  // namespace

VerifyReport verify_theorem1_exhaustive(std::int64_t p, std::int64_t t,
                                        const WTable& table) {
    if (!is_prime(p)) throw CompositeModulus(p);
    if (p > 25)
        throw InfeasibleEnumeration("verify_theorem1_exhaustive: 2^p too large for p > 25",
                                    std::ldexp(1.0, static_cast<int>(p)));
    Timer timer;
    VerifyReport rep;
    rep.p = p;
    rep.t = t;
    rep.mode = "exhaustive";
    std::vector<double> bound_by_k(p + 1);
    for (std::int64_t k = 1; k <= p; ++k) bound_by_k[k] = theorem1_bound(p, k, t, table);
    const std::uint64_t end = std::uint64_t{1} << p;
    for (std::uint64_t mask = 1; mask < end; ++mask) {
        ++rep.sets_checked;
        const std::int64_t k = std::popcount(mask);
        const std::int64_t size = std::popcount(sum_of_dilates_mask(mask, t, p));
        const double bound = bound_by_k[k];
        const double slack = static_cast<double>(size) - bound;
        if (rep.sets_checked == 1 || slack < rep.min_slack) rep.min_slack = slack;
        if (slack < -1e-9)
            rep.violations.push_back({mask_to_elements(mask), size, bound});
    }
    rep.seconds = timer.seconds();
    return rep;
}

VerifyReport verify_theorem1_sampled(std::int64_t p, std::int64_t t,
                                     std::int64_t n, std::uint64_t seed,
                                     const WTable& table) {
    if (!is_prime(p)) throw CompositeModulus(p);
    Timer timer;
    VerifyReport rep;
    rep.p = p;
    rep.t = t;
    rep.mode = "sample";
    rep.seed = seed;
    std::mt19937_64 rng(seed);
    std::vector<std::int64_t> pool(p);
    std::vector<double> bound_by_k(p + 1, -1);
    for (std::int64_t i = 0; i < n; ++i) {
        // explicit modulo keeps the stream identical across platforms
        const std::int64_t k = 1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(p));
        for (std::int64_t j = 0; j < p; ++j) pool[j] = j;
        for (std::int64_t j = 0; j < k; ++j) {
            const std::int64_t r =
                j + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(p - j));
            std::swap(pool[j], pool[r]);
        }
        const ResidueSet a(p, {pool.begin(), pool.begin() + k});
        const std::int64_t size = sum_of_dilates(a, t).size();
        if (bound_by_k[k] < 0) bound_by_k[k] = theorem1_bound(p, k, t, table);
        ++rep.sets_checked;
        record_check(rep, a.elements(), size, bound_by_k[k]);
    }
    rep.seconds = timer.seconds();
    return rep;
}

ConjectureTable conjecture1_explorer(std::int64_t p, std::int64_t t,
                                     std::int64_t k_min, std::int64_t k_max,
                                     int threads) {
    if (k_min < 1 || k_max < k_min || k_max > p)
        throw DomainError("conjecture1_explorer: bad k range");
    ConjectureTable table;
    table.p = p;
    table.t = t;
    const std::int64_t abs_t = t < 0 ? -t : t;
    for (std::int64_t k = k_min; k <= k_max; ++k) {
        const SearchReport rep = exhaustive_min_sumset_modp(p, t, k, threads);
        ConjectureRow row;
        row.k = k;
        row.min_size = rep.min_sumset_size;
        row.capped_at_p = rep.min_sumset_size >= p;
        row.degenerate = k == 1;
        if (!row.capped_at_p) {
            row.deficiency = std::max<std::int64_t>(0, (abs_t + 1) * k - row.min_size);
            if (!row.degenerate)
                table.empirical_c_lower_bound =
                    std::max(table.empirical_c_lower_bound, row.deficiency);
        }
        table.rows.push_back(row);
    }
    return table;
}

}  // namespace dilates
