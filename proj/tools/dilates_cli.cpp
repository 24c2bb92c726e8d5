// Command-line front door: every subcommand is a thin adapter over the
// library (parse flags, call, render). Exit codes: 0 ok, 1 verification
// violation, 2 usage error, 3 infeasible enumeration.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dilates/serialize.hpp"

using nlohmann::json;

namespace {

enum class Format { json, csv, text };

struct Global {
    Format format = Format::text;
    std::uint64_t seed = 0;
    int threads = 1;
    std::string output;
};

void emit(const Global& g, const std::string& s) {
    if (g.output.empty()) {
        std::cout << s;
        if (!s.empty() && s.back() != '\n') std::cout << '\n';
    } else {
        std::ofstream out(g.output);
        out << s;
        if (!s.empty() && s.back() != '\n') out << '\n';
    }
}

std::string fmt6(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

dilates::WTable parse_w_entries(const std::vector<std::string>& entries) {
    dilates::WTable table;
    for (const auto& e : entries) {
        const auto eq = e.find('=');
        if (eq == std::string::npos)
            throw dilates::ParseError("--w expects T=W, got '" + e + "'");
        table.set(std::stoll(e.substr(0, eq)), std::stoll(e.substr(eq + 1)));
    }
    return table;
}

int run_bounds(const Global& g, std::int64_t t, std::optional<double> c,
               std::optional<std::int64_t> p, std::optional<std::int64_t> size_a,
               std::optional<double> solve_f, const dilates::WTable& wtable) {
    if (solve_f) {
        const double cc = dilates::f_t_inverse_density(t, *solve_f);
        if (g.format == Format::text) {
            emit(g, "c = " + fmt6(cc) + "  (1/c = " + fmt6(1.0 / cc) + ")");
        } else {
            json j{{"t", t}, {"f_target", dilates::round15(*solve_f)},
                   {"c", dilates::round15(cc)}};
            emit(g, j.dump());
        }
        return 0;
    }
    dilates::BoundProfile prof;
    if (p && size_a)
        prof = dilates::make_bound_profile(t, *p, *size_a, wtable);
    else if (c)
        prof = dilates::make_bound_profile(t, *c, wtable);
    else
        throw CLI::ValidationError("bounds", "need either -c or both -p and --size");
    switch (g.format) {
        case Format::json: emit(g, dilates::to_json(prof).dump()); break;
        case Format::csv: emit(g, dilates::bound_profile_csv(prof)); break;
        case Format::text: {
            std::string s = "t = " + std::to_string(prof.t) +
                            "\nc = " + fmt6(prof.c) +
                            "\nc0 = " + fmt6(prof.critical_density) +
                            "\nf = " + fmt6(prof.f_value);
            s += "\nw = " + (prof.w ? std::to_string(*prof.w) : std::string("unknown"));
            if (prof.theorem_bound) s += "\nbound = " + fmt6(*prof.theorem_bound);
            if (!prof.improves_on_cauchy_davenport)
                s += "\nnote: no improvement over Cauchy-Davenport" +
                     std::string(std::llabs(prof.t) == 3 ? " for |t| = 3" : " at this density");
            emit(g, s);
            break;
        }
    }
    return 0;
}

int run_sumset(const Global& g, const std::string& literal, std::int64_t t) {
    const auto parsed = dilates::parse_set_literal(literal);
    std::string result_lit;
    std::int64_t size = 0;
    if (std::holds_alternative<dilates::ResidueSet>(parsed)) {
        const auto s = dilates::sum_of_dilates(std::get<dilates::ResidueSet>(parsed), t);
        result_lit = dilates::to_literal(s);
        size = s.size();
    } else {
        const auto s =
            dilates::integer_sum_of_dilates(std::get<dilates::IntegerSet>(parsed), t);
        result_lit = dilates::to_literal(s);
        size = s.size();
    }
    if (g.format == Format::json)
        emit(g, json{{"t", t}, {"sumset", result_lit}, {"size", size}}.dump());
    else
        emit(g, result_lit + "\nsize = " + std::to_string(size));
    return 0;
}

int run_fourier(const Global& g, const std::string& literal) {
    const auto a = dilates::parse_residue_set(literal);
    const auto spec = dilates::indicator_dft(a);
    switch (g.format) {
        case Format::csv: emit(g, dilates::spectrum_csv(spec)); break;
        case Format::json: emit(g, dilates::bias_summary_json(spec).dump()); break;
        case Format::text:
            emit(g, "p = " + std::to_string(spec.modulus) +
                        "\n|A| = " + std::to_string(spec.size_a) +
                        "\nbias = " + fmt6(spec.bias) +
                        "\nargmax = " + std::to_string(spec.bias_argmax) +
                        "\neta = " + fmt6(spec.eta()));
            break;
    }
    return 0;
}

int run_localize(const Global& g, const std::string& literal, double beta) {
    const auto a = dilates::parse_residue_set(literal);
    const auto res = dilates::lev_guarantee_check(a, beta);
    if (g.format == Format::text)
        emit(g, "L = " + std::to_string(res.length) +
                    "\nstart = " + std::to_string(res.window.start) +
                    "\ncount = " + std::to_string(res.window.count) +
                    "\neta = " + fmt6(res.eta) + "\nM = " + fmt6(res.m.m) +
                    "\nholds = " + (res.holds ? "true" : "false") +
                    "\nmargin = " + fmt6(res.margin));
    else
        emit(g, dilates::to_json(res, a.size()).dump());
    return 0;
}

int run_rectify(const Global& g, const std::string& literal, std::int64_t t,
                std::int64_t start, std::int64_t length) {
    const auto a0 = dilates::parse_residue_set(literal);
    dilates::IntervalWindow window{a0.modulus(), start, length, 0};
    const auto res = dilates::rectification_check(a0, t, window);
    if (g.format == Format::text)
        emit(g, std::string("isomorphic = ") + (res.isomorphic ? "true" : "false") +
                    "\nresidue_size = " + std::to_string(res.residue_size) +
                    "\ninteger_size = " + std::to_string(res.integer_size) +
                    "\nguarantee_applies = " +
                    (res.guarantee_applies ? "true" : "false"));
    else
        emit(g, dilates::to_json(res).dump());
    return 0;
}

std::string trace_text(const dilates::PipelineTrace& tr) {
    std::string s = "p = " + std::to_string(tr.p) + ", |A| = " +
                    std::to_string(tr.size_a) + ", t = " + std::to_string(tr.t) +
                    ", |S| = " + std::to_string(tr.s_size) + ", x = " + fmt6(tr.x) +
                    ", c = " + fmt6(tr.c) + "\n";
    if (tr.short_circuited_cauchy_davenport)
        s += "short-circuit: c > c_t^(0), Cauchy-Davenport branch\n";
    for (const auto& step : tr.notes) {
        s += "  " + step.name + ": value " + fmt6(step.value) + " vs bound " +
             fmt6(step.bound) + " -> " + dilates::to_string(step.verdict);
        if (!step.detail.empty()) s += "  (" + step.detail + ")";
        s += "\n";
    }
    s += std::string("borninf_holds = ") + (tr.borninf_holds ? "true" : "false") +
         ", any_failure = " + (tr.any_failure ? "true" : "false");
    return s;
}

int run_pipeline(const Global& g, const std::string& literal, std::int64_t t,
                 const dilates::WTable& wtable) {
    const auto a = dilates::parse_residue_set(literal);
    const auto tr = dilates::run_proof_pipeline(a, t, wtable);
    if (g.format == Format::text)
        emit(g, trace_text(tr));
    else
        emit(g, dilates::to_json(tr).dump());
    return tr.any_failure ? 1 : 0;
}

int run_search(const Global& g, std::optional<std::int64_t> p, bool integers,
               std::int64_t t, std::int64_t k, std::int64_t cap,
               const std::string& k_range) {
    if (!k_range.empty()) {
        if (!p) throw CLI::ValidationError("search", "--k-range needs -p");
        const auto colon = k_range.find(':');
        if (colon == std::string::npos)
            throw CLI::ValidationError("search", "--k-range expects MIN:MAX");
        const auto table = dilates::conjecture1_explorer(
            *p, t, std::stoll(k_range.substr(0, colon)),
            std::stoll(k_range.substr(colon + 1)), g.threads);
        if (g.format == Format::csv)
            emit(g, dilates::conjecture_csv(table));
        else if (g.format == Format::json)
            emit(g, dilates::to_json(table).dump());
        else {
            std::string s = "k\tmin\tdeficiency\n";
            for (const auto& r : table.rows)
                s += std::to_string(r.k) + "\t" + std::to_string(r.min_size) + "\t" +
                     std::to_string(r.deficiency) +
                     (r.capped_at_p ? " (capped at p)" : "") +
                     (r.degenerate ? " (degenerate)" : "") + "\n";
            s += "empirical c(t) >= " + std::to_string(table.empirical_c_lower_bound);
            emit(g, s);
        }
        return 0;
    }
    dilates::SearchReport rep;
    if (integers) {
        if (cap <= 0) cap = 3 * k;  // default diameter cap
        rep = dilates::exhaustive_min_sumset_integers(k, t, cap);
    } else {
        if (!p) throw CLI::ValidationError("search", "need -p or --integers");
        rep = dilates::exhaustive_min_sumset_modp(*p, t, k, g.threads);
    }
    if (g.format == Format::csv)
        emit(g, dilates::search_report_csv(rep));
    else if (g.format == Format::json)
        emit(g, dilates::to_json(rep).dump());
    else {
        std::string s = "min |A + t.A| = " + std::to_string(rep.min_sumset_size) +
                        " over " + std::to_string(rep.sets_examined) + " sets\n";
        s += "witnesses:";
        for (const auto& w : rep.witnesses) {
            s += " {";
            for (std::size_t i = 0; i < w.size(); ++i)
                s += (i ? "," : "") + std::to_string(w[i]);
            s += "}";
        }
        if (rep.witnesses_truncated) s += " ...";
        for (const auto& b : rep.bound_comparisons)
            s += "\n" + b.name + " = " + fmt6(b.value) +
                 (b.satisfied ? " (satisfied)" : " (VIOLATED)");
        emit(g, s);
    }
    return 0;
}

int run_verify(const Global& g, std::int64_t p, std::int64_t t,
               const std::string& mode, std::int64_t n,
               const dilates::WTable& wtable) {
    dilates::VerifyReport rep;
    if (mode == "exhaustive")
        rep = dilates::verify_theorem1_exhaustive(p, t, wtable);
    else if (mode == "sample")
        rep = dilates::verify_theorem1_sampled(p, t, n, g.seed, wtable);
    else
        throw CLI::ValidationError("verify", "--mode must be exhaustive or sample");
    if (g.format == Format::text)
        emit(g, "sets_checked = " + std::to_string(rep.sets_checked) +
                    "\nviolations = " + std::to_string(rep.violations.size()) +
                    "\nmin_slack = " + fmt6(rep.min_slack));
    else
        emit(g, dilates::to_json(rep).dump());
    return rep.violations.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sums-of-dilates toolkit: bounds, spectra, localization, "
                 "rectification pipeline, and brute-force verification over Z/pZ"};
    app.require_subcommand(1);

    Global g;
    std::string format = "text";
    app.add_option("--format", format, "output format: json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--seed", g.seed, "RNG seed for sampled runs");
    app.add_option("--threads", g.threads, "worker threads for searches");
    app.add_option("--output", g.output, "write output to FILE instead of stdout");

    std::vector<std::string> w_entries;
    app.add_option("--w", w_entries, "extra w(t) table entries, T=W (repeatable)");

    std::int64_t t = 2;
    std::optional<double> c, solve_f;
    std::optional<std::int64_t> popt, size_a;
    auto* bounds = app.add_subcommand("bounds", "evaluate the bound functions");
    bounds->add_option("-t", t, "dilation coefficient")->required();
    bounds->add_option("-c", c, "density |A|/p");
    bounds->add_option("-p", popt, "prime modulus");
    bounds->add_option("--size", size_a, "|A|");
    bounds->add_option("--solve-f", solve_f, "solve f_t(c) = X for c");

    std::string literal;
    auto* sumset = app.add_subcommand("sumset", "compute A + t.A");
    sumset->add_option("set", literal, "set literal, e.g. \"p=11;{0,1,2}\"")->required();
    sumset->add_option("-t", t, "dilation coefficient")->required();

    auto* fourier = app.add_subcommand("fourier", "indicator DFT and bias");
    fourier->add_option("set", literal, "residue set literal")->required();

    double beta = 1.0 / 3.0;
    auto* localize = app.add_subcommand("localize", "best interval and the concentration check");
    localize->add_option("set", literal, "residue set literal")->required();
    localize->add_option("--beta", beta, "interval length fraction in (0, 1/2]")->required();

    std::int64_t start = 0, length = 1;
    auto* rectify = app.add_subcommand("rectify", "Freiman-isomorphism check against the integer lift");
    rectify->add_option("set", literal, "residue set literal (A0)")->required();
    rectify->add_option("-t", t, "dilation coefficient")->required();
    rectify->add_option("--start", start, "window start")->required();
    rectify->add_option("--length", length, "window length")->required();

    auto* pipeline = app.add_subcommand("pipeline", "run the full proof pipeline on a set");
    pipeline->add_option("set", literal, "residue set literal")->required();
    pipeline->add_option("-t", t, "dilation coefficient")->required();

    std::int64_t k = 1, cap = 0;
    bool integers = false;
    std::string k_range;
    auto* search = app.add_subcommand("search", "exhaustive minimal-sumset search");
    search->add_option("-p", popt, "prime modulus");
    search->add_flag("--integers", integers, "search integer sets instead of Z/pZ");
    search->add_option("-t", t, "dilation coefficient")->required();
    search->add_option("-k", k, "set size");
    search->add_option("--cap", cap, "diameter cap for integer searches (default 3k)");
    search->add_option("--k-range", k_range, "MIN:MAX — conjecture deficiency table");

    std::string mode = "exhaustive";
    std::int64_t nsamples = 10000;
    auto* verify = app.add_subcommand("verify", "verify the main sumset lower bound");
    verify->add_option("-p", popt, "prime modulus")->required();
    verify->add_option("-t", t, "dilation coefficient")->required();
    verify->add_option("--mode", mode, "exhaustive or sample");
    verify->add_option("-n", nsamples, "sample count");

    // allow the global flags after a subcommand name
    for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        g.format = format == "json" ? Format::json
                   : format == "csv" ? Format::csv
                                     : Format::text;
        const dilates::WTable wtable = parse_w_entries(w_entries);
        if (bounds->parsed()) return run_bounds(g, t, c, popt, size_a, solve_f, wtable);
        if (sumset->parsed()) return run_sumset(g, literal, t);
        if (fourier->parsed()) return run_fourier(g, literal);
        if (localize->parsed()) return run_localize(g, literal, beta);
        if (rectify->parsed()) return run_rectify(g, literal, t, start, length);
        if (pipeline->parsed()) return run_pipeline(g, literal, t, wtable);
        if (search->parsed()) return run_search(g, popt, integers, t, k, cap, k_range);
        if (verify->parsed()) return run_verify(g, *popt, t, mode, nsamples, wtable);
    } catch (const dilates::InfeasibleEnumeration& e) {
        std::cerr << "error: " << e.what()
                  << " (estimated count " << e.estimated_count << ")\n";
        return 3;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const dilates::ParseError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const dilates::DomainError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const dilates::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
