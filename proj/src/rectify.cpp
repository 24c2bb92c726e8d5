#include "dilates/rectify.hpp"

#include <cmath>

#include "dilates/fourier.hpp"

namespace dilates {

namespace {
constexpr double kSlack = 1e-9;  // fp guard on exact-arithmetic inequalities
}

IntegerSet lift_to_integers(const ResidueSet& a0, const IntervalWindow& window) {
    const std::int64_t p = a0.modulus();
    std::vector<std::int64_t> out;
    out.reserve(a0.size());
    for (const std::int64_t e : a0.elements()) {
        std::int64_t off = (e - window.start) % p;
        if (off < 0) off += p;
        if (off >= window.length)
            throw ElementOutsideWindow("residue " + std::to_string(e) +
                                       " lies outside the window");
        out.push_back(window.start + off);
    }
    return IntegerSet(std::move(out));
}

RectificationResult rectification_check(const ResidueSet& a0, std::int64_t t,
                                        const IntervalWindow& window) {
    if (a0.empty()) throw EmptyInput("rectification_check: empty set");
    const std::int64_t abs_t = t < 0 ? -t : t;
    RectificationResult res;
    res.residue_size = sum_of_dilates(a0, t).size();
    res.integer_size = integer_sum_of_dilates(lift_to_integers(a0, window), t).size();
    res.isomorphic = res.residue_size == res.integer_size;
    res.guarantee_applies = (1 + abs_t) * (window.length - 1) < a0.modulus();
    return res;
}

std::string to_string(StepVerdict v) {
    switch (v) {
        case StepVerdict::Holds: return "holds";
        case StepVerdict::Fails: return "fails";
        case StepVerdict::Vacuous: return "vacuous";
    }
    return "?";
}

namespace {

StepVerdict check(double value, double bound) {
    return value >= bound - kSlack ? StepVerdict::Holds : StepVerdict::Fails;
}

void push(PipelineTrace& tr, std::string name, double value, double bound,
          StepVerdict v, std::string detail = {}) {
    if (v == StepVerdict::Fails) tr.any_failure = true;
    tr.notes.push_back({std::move(name), value, bound, v, std::move(detail)});
}

}  // namespace

PipelineTrace run_proof_pipeline(const ResidueSet& a, std::int64_t t,
                                 const WTable& table) {
    const std::int64_t abs_t = t < 0 ? -t : t;
    return run_proof_pipeline_with_beta(a, t, 1.0 / static_cast<double>(abs_t + 1),
                                        table);
}

PipelineTrace run_proof_pipeline_with_beta(const ResidueSet& a, std::int64_t t,
                                           double beta, const WTable& table) {
    if (a.empty()) throw EmptyInput("run_proof_pipeline: empty set");
    const std::int64_t abs_t = t < 0 ? -t : t;
    if (abs_t < 2) throw DomainError("run_proof_pipeline: |t| >= 2 required");
    const std::int64_t w = table.lookup(t);

    PipelineTrace tr;
    tr.p = a.modulus();
    tr.input_elements = a.elements();
    tr.t = t;
    tr.size_a = a.size();
    tr.c = a.density();
    const double k = static_cast<double>(a.size());

    const ResidueSet s = sum_of_dilates(a, t);
    tr.s_size = s.size();
    tr.x = (static_cast<double>(tr.s_size) + static_cast<double>(w)) / k;

    const double c0 = critical_density(t);
    if (tr.c > c0) {
        // dense regime: the paper's chain is replaced by Cauchy-Davenport
        tr.short_circuited_cauchy_davenport = true;
        const auto cd = cauchy_davenport_bound(a.size(), a.size(), tr.p);
        push(tr, "cauchy_davenport", static_cast<double>(tr.s_size),
             static_cast<double>(cd), check(tr.s_size, cd),
             "c > c_t^(0): short-circuit branch");
        return tr;
    }

    // Fourier bias lower bound, expressed per |A| (eta scale).
    const double eta_bound = (1.0 - tr.x * tr.c) / std::sqrt(tr.x);
    const auto spec = indicator_dft(a);
    tr.normalizing_unit = spec.bias_argmax;
    const ResidueSet a_norm = dilate(a, tr.normalizing_unit);
    tr.eta_at_1 = std::min(spec.bias / k, 1.0);
    push(tr, "fourier_bias_lower_bound", tr.eta_at_1, eta_bound,
         eta_bound <= 0 ? StepVerdict::Vacuous : check(tr.eta_at_1, eta_bound),
         eta_bound <= 0 ? "bound non-positive: not binding for this instance" : "");

    const std::int64_t length = window_length_for_beta(beta, tr.p);
    const IntervalWindow window = best_interval(a_norm, length);
    tr.window = window;
    std::vector<std::int64_t> a0_elems;
    for (const std::int64_t e : a_norm.elements())
        if (window.contains(e)) a0_elems.push_back(e);
    const ResidueSet a0(tr.p, a0_elems);
    tr.a0_elements = a0.elements();

    // observed concentration against the lemma with the observed eta
    const ConcentrationBound m_obs = concentration_M(beta, tr.eta_at_1);
    push(tr, "lev_concentration", static_cast<double>(a0.size()), m_obs.m * k,
         check(static_cast<double>(a0.size()), m_obs.m * k));

    // B_t(x, c) uses the theoretical eta bound; vacuous when non-positive
    if (eta_bound > 0) {
        const ConcentrationBound b = concentration_M(beta, std::min(eta_bound, 1.0));
        tr.b_value = b.m;
        push(tr, "a0_count_vs_B", static_cast<double>(a0.size()), b.m * k,
             check(static_cast<double>(a0.size()), b.m * k));
    } else {
        push(tr, "a0_count_vs_B", static_cast<double>(a0.size()), 0.0,
             StepVerdict::Vacuous, "eta bound non-positive");
    }

    const RectificationResult rect = rectification_check(a0, t, window);
    tr.a0_lift_elements = lift_to_integers(a0, window).elements();
    push(tr, "rectification", static_cast<double>(rect.integer_size),
         static_cast<double>(rect.residue_size),
         rect.isomorphic ? StepVerdict::Holds : StepVerdict::Fails,
         rect.guarantee_applies ? "guarantee (1+|t|)(L-1) < p applies"
                                : "guarantee condition not met");

    const double int_bound =
        static_cast<double>((abs_t + 1) * a0.size() - w);
    push(tr, "integer_reference_bound", static_cast<double>(rect.integer_size),
         int_bound, check(static_cast<double>(rect.integer_size), int_bound));

    push(tr, "sumset_dominates_a0_sumset", static_cast<double>(tr.s_size),
         static_cast<double>(rect.residue_size),
         check(static_cast<double>(tr.s_size),
               static_cast<double>(rect.residue_size)));

    if (tr.b_value) {
        const double rhs = static_cast<double>(abs_t + 1) * *tr.b_value;
        const StepVerdict v = check(tr.x, rhs);
        tr.borninf_holds = v == StepVerdict::Holds;
        push(tr, "borninf", tr.x, rhs, v);
    } else {
        push(tr, "borninf", tr.x, 0.0, StepVerdict::Vacuous,
             "B_t(x,c) vacuous for this instance");
    }
    return tr;
}

}  // namespace dilates
