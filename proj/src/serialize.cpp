#include "dilates/serialize.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace dilates {

using nlohmann::json;

double round15(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return std::strtod(buf, nullptr);
}

json to_json(const BoundProfile& p) {
    json j{{"t", p.t},
           {"c", round15(p.c)},
           {"c0", round15(p.critical_density)},
           {"f", round15(p.f_value)},
           {"improves_on_cauchy_davenport", p.improves_on_cauchy_davenport}};
    j["w"] = p.w ? json(*p.w) : json(nullptr);
    j["bound"] = p.theorem_bound ? json(round15(*p.theorem_bound)) : json(nullptr);
    if (p.p) j["p"] = *p.p;
    if (p.size_a) j["sizeA"] = *p.size_a;
    return j;
}

BoundProfile bound_profile_from_json(const json& j) {
    BoundProfile p;
    p.t = j.at("t");
    p.c = j.at("c");
    p.critical_density = j.at("c0");
    p.f_value = j.at("f");
    p.improves_on_cauchy_davenport = j.at("improves_on_cauchy_davenport");
    if (!j.at("w").is_null()) p.w = j.at("w").get<std::int64_t>();
    if (!j.at("bound").is_null()) p.theorem_bound = j.at("bound").get<double>();
    if (j.contains("p")) p.p = j.at("p").get<std::int64_t>();
    if (j.contains("sizeA")) p.size_a = j.at("sizeA").get<std::int64_t>();
    return p;
}

json to_json(const ConcentrationBound& m) {
    return json{{"beta", round15(m.beta)},
                {"eta", round15(m.eta)},
                {"term_cosine", round15(m.term_cosine)},
                {"term_sinc", round15(m.term_sinc)},
                {"M", round15(m.m)}};
}

json bias_summary_json(const FourierSpectrum& s) {
    return json{{"p", s.modulus},
                {"sizeA", s.size_a},
                {"bias", round15(s.bias)},
                {"argmax", s.bias_argmax},
                {"eta", round15(s.eta())}};
}

json to_json(const IntervalWindow& w) {
    return json{{"p", w.modulus}, {"start", w.start}, {"length", w.length},
                {"count", w.count}};
}

IntervalWindow interval_window_from_json(const json& j) {
    return {j.at("p"), j.at("start"), j.at("length"), j.at("count")};
}

json to_json(const LevCheckResult& r, std::int64_t size_a) {
    return json{{"p", r.window.modulus}, {"sizeA", size_a},
                {"beta", round15(r.beta)}, {"L", r.length},
                {"start", r.window.start}, {"count", r.window.count},
                {"eta", round15(r.eta)},   {"M", round15(r.m.m)},
                {"holds", r.holds},        {"margin", round15(r.margin)}};
}

json to_json(const RectificationResult& r) {
    return json{{"isomorphic", r.isomorphic},
                {"residue_size", r.residue_size},
                {"integer_size", r.integer_size},
                {"guarantee_applies", r.guarantee_applies}};
}

json to_json(const StepRecord& s) {
    json j{{"name", s.name},
           {"value", round15(s.value)},
           {"bound", round15(s.bound)},
           {"verdict", to_string(s.verdict)}};
    if (!s.detail.empty()) j["detail"] = s.detail;
    return j;
}

json to_json(const PipelineTrace& t) {
    json steps = json::array();
    for (const auto& s : t.notes) steps.push_back(to_json(s));
    json j{{"p", t.p},
           {"A", t.input_elements},
           {"t", t.t},
           {"sizeA", t.size_a},
           {"S_size", t.s_size},
           {"x", round15(t.x)},
           {"c", round15(t.c)},
           {"eta_at_1", round15(t.eta_at_1)},
           {"normalizing_unit", t.normalizing_unit},
           {"A0", t.a0_elements},
           {"A0_lift", t.a0_lift_elements},
           {"short_circuited_cauchy_davenport", t.short_circuited_cauchy_davenport},
           {"borninf_holds", t.borninf_holds},
           {"any_failure", t.any_failure},
           {"steps", steps}};
    j["window"] = t.window ? to_json(*t.window) : json(nullptr);
    j["B"] = t.b_value ? json(round15(*t.b_value)) : json(nullptr);
    return j;
}

namespace {

StepVerdict verdict_from_string(const std::string& s) {
    if (s == "holds") return StepVerdict::Holds;
    if (s == "fails") return StepVerdict::Fails;
    return StepVerdict::Vacuous;
}

}  // namespace

PipelineTrace pipeline_trace_from_json(const json& j) {
    PipelineTrace t;
    t.p = j.at("p");
    t.input_elements = j.at("A").get<std::vector<std::int64_t>>();
    t.t = j.at("t");
    t.size_a = j.at("sizeA");
    t.s_size = j.at("S_size");
    t.x = j.at("x");
    t.c = j.at("c");
    t.eta_at_1 = j.at("eta_at_1");
    t.normalizing_unit = j.at("normalizing_unit");
    t.a0_elements = j.at("A0").get<std::vector<std::int64_t>>();
    t.a0_lift_elements = j.at("A0_lift").get<std::vector<std::int64_t>>();
    t.short_circuited_cauchy_davenport = j.at("short_circuited_cauchy_davenport");
    t.borninf_holds = j.at("borninf_holds");
    t.any_failure = j.at("any_failure");
    if (!j.at("window").is_null()) t.window = interval_window_from_json(j.at("window"));
    if (!j.at("B").is_null()) t.b_value = j.at("B").get<double>();
    for (const auto& s : j.at("steps")) {
        StepRecord rec;
        rec.name = s.at("name");
        rec.value = s.at("value");
        rec.bound = s.at("bound");
        rec.verdict = verdict_from_string(s.at("verdict"));
        if (s.contains("detail")) rec.detail = s.at("detail");
        t.notes.push_back(std::move(rec));
    }
    return t;
}

json to_json(const SearchReport& r) {
    json comps = json::array();
    for (const auto& c : r.bound_comparisons)
        comps.push_back(json{{"name", c.name},
                             {"value", round15(c.value)},
                             {"satisfied", c.satisfied}});
    json j{{"t", r.t},
           {"k", r.k},
           {"min", r.min_sumset_size},
           {"witnesses", r.witnesses},
           {"witnesses_truncated", r.witnesses_truncated},
           {"sets_examined", r.sets_examined},
           {"bound_comparisons", comps},
           {"seconds", round15(r.seconds)}};
    j["p"] = r.p ? json(*r.p) : json("integers");
    if (r.diameter_cap) j["diameter_cap"] = *r.diameter_cap;
    return j;
}

SearchReport search_report_from_json(const json& j) {
    SearchReport r;
    if (j.at("p").is_number()) r.p = j.at("p").get<std::int64_t>();
    r.t = j.at("t");
    r.k = j.at("k");
    r.min_sumset_size = j.at("min");
    r.witnesses = j.at("witnesses").get<std::vector<std::vector<std::int64_t>>>();
    r.witnesses_truncated = j.at("witnesses_truncated");
    r.sets_examined = j.at("sets_examined");
    for (const auto& c : j.at("bound_comparisons"))
        r.bound_comparisons.push_back({c.at("name"), c.at("value"), c.at("satisfied")});
    r.seconds = j.at("seconds");
    if (j.contains("diameter_cap")) r.diameter_cap = j.at("diameter_cap").get<std::int64_t>();
    return r;
}

json to_json(const VerifyReport& r) {
    json viols = json::array();
    for (const auto& v : r.violations)
        viols.push_back(json{{"A", v.elements},
                             {"sumset_size", v.sumset_size},
                             {"bound", round15(v.bound)}});
    return json{{"p", r.p},
                {"t", r.t},
                {"mode", r.mode},
                {"sets_checked", r.sets_checked},
                {"violations", viols},
                {"min_slack", round15(r.min_slack)},
                {"seed", r.seed},
                {"seconds", round15(r.seconds)}};
}

VerifyReport verify_report_from_json(const json& j) {
    VerifyReport r;
    r.p = j.at("p");
    r.t = j.at("t");
    r.mode = j.at("mode");
    r.sets_checked = j.at("sets_checked");
    for (const auto& v : j.at("violations"))
        r.violations.push_back({v.at("A").get<std::vector<std::int64_t>>(),
                                v.at("sumset_size"), v.at("bound")});
    r.min_slack = j.at("min_slack");
    r.seed = j.at("seed");
    r.seconds = j.at("seconds");
    return r;
}

json to_json(const ConjectureTable& t) {
    json rows = json::array();
    for (const auto& r : t.rows)
        rows.push_back(json{{"k", r.k},
                            {"min", r.min_size},
                            {"capped_at_p", r.capped_at_p},
                            {"deficiency", r.deficiency},
                            {"degenerate", r.degenerate}});
    return json{{"p", t.p},
                {"t", t.t},
                {"rows", rows},
                {"empirical_c_lower_bound", t.empirical_c_lower_bound}};
}

// --- CSV --------------------------------------------------------------------

namespace {

std::string fmt15(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return buf;
}

}  // namespace

std::string spectrum_csv(const FourierSpectrum& s) {
    std::ostringstream os;
    os << "r,magnitude\n";
    for (std::size_t r = 0; r < s.magnitudes.size(); ++r)
        os << r << ',' << fmt15(s.magnitudes[r]) << '\n';
    return os.str();
}

std::string bound_profile_csv(const BoundProfile& p) {
    std::ostringstream os;
    os << "t,c,c0,f,w,bound\n";
    os << p.t << ',' << fmt15(p.c) << ',' << fmt15(p.critical_density) << ','
       << fmt15(p.f_value) << ',';
    if (p.w) os << *p.w;
    os << ',';
    if (p.theorem_bound) os << fmt15(*p.theorem_bound);
    os << '\n';
    return os.str();
}

std::string search_report_csv(const SearchReport& r) {
    std::ostringstream os;
    os << "p,t,k,min,deficiency,witnesses_truncated,sets_examined,seconds\n";
    const std::int64_t abs_t = r.t < 0 ? -r.t : r.t;
    const std::int64_t def =
        std::max<std::int64_t>(0, (abs_t + 1) * r.k - r.min_sumset_size);
    if (r.p)
        os << *r.p;
    else
        os << "integers";
    os << ',' << r.t << ',' << r.k << ',' << r.min_sumset_size << ',' << def << ','
       << (r.witnesses_truncated ? 1 : 0) << ',' << r.sets_examined << ','
       << fmt15(r.seconds) << '\n';
    return os.str();
}

std::string conjecture_csv(const ConjectureTable& t) {
    std::ostringstream os;
    os << "p,t,k,min,deficiency,capped_at_p,degenerate\n";
    for (const auto& r : t.rows)
        os << t.p << ',' << t.t << ',' << r.k << ',' << r.min_size << ','
           << r.deficiency << ',' << (r.capped_at_p ? 1 : 0) << ','
           << (r.degenerate ? 1 : 0) << '\n';
    return os.str();
}

}  // namespace dilates
