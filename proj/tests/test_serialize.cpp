#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "dilates/serialize.hpp"

using namespace dilates;
using nlohmann::json;

TEST_CASE("round15 is idempotent and injective enough") {
    for (const double x : {0.1, 1.0 / 3.0, 2.080083823051904, 1e-300, -0.0,
                           2.9060707365524685e-05, 34410.7}) {
        const double once = round15(x);
        CHECK(round15(once) == once);
    }
    CHECK(round15(2.0) == 2.0);
}

TEST_CASE("json doubles round-trip through text") {
    const auto prof = make_bound_profile(2, 1e-4);
    const json j = to_json(prof);
    const json reparsed = json::parse(j.dump());
    CHECK(reparsed == j);
    CHECK(reparsed.at("f").get<double>() == j.at("f").get<double>());
}

TEST_CASE("bound profile round trip") {
    const auto prof = make_bound_profile(2, std::int64_t{1000003}, std::int64_t{10});
    const json j = to_json(prof);
    const auto back = bound_profile_from_json(j);
    CHECK(to_json(back) == j);
    CHECK(back.t == prof.t);
    CHECK(back.w == prof.w);
    CHECK(back.p == prof.p);
    CHECK(back.theorem_bound.has_value());

    // t outside the w table: nullable fields serialize as null
    const auto p5 = make_bound_profile(5, 0.001);
    const json j5 = to_json(p5);
    CHECK(j5.at("w").is_null());
    CHECK(j5.at("bound").is_null());
    CHECK(to_json(bound_profile_from_json(j5)) == j5);
}

TEST_CASE("concentration bound json fields") {
    const json j = to_json(concentration_M(0.25, 0.5));
    for (const char* key : {"beta", "eta", "term_cosine", "term_sinc", "M"})
        CHECK(j.contains(key));
    CHECK(j.at("beta").get<double>() == 0.25);
}

TEST_CASE("bias summary json") {
    const auto s = indicator_dft(make_residue_set(11, {0, 1, 2}));
    const json j = bias_summary_json(s);
    CHECK(j.at("p") == 11);
    CHECK(j.at("sizeA") == 3);
    CHECK(j.at("argmax").get<std::int64_t>() >= 1);
    CHECK(j.at("eta").get<double>() ==
          doctest::Approx(s.bias / 3.0).epsilon(1e-12));
}

TEST_CASE("interval window round trip") {
    const IntervalWindow w{101, 40, 34, 12};
    const auto back = interval_window_from_json(to_json(w));
    CHECK(back.modulus == 101);
    CHECK(back.start == 40);
    CHECK(back.length == 34);
    CHECK(back.count == 12);
}

TEST_CASE("lev check json fields") {
    const auto a = make_residue_set(101, {0, 1, 2, 3, 4});
    const auto r = lev_guarantee_check(a, 0.2);
    const json j = to_json(r, a.size());
    CHECK(j.at("p") == 101);
    CHECK(j.at("sizeA") == 5);
    CHECK(j.at("L") == r.length);
    CHECK(j.at("holds") == true);
    CHECK(j.at("M").get<double>() == round15(r.m.m));
}

TEST_CASE("pipeline trace round trip") {
    const auto tr = run_proof_pipeline(make_residue_set(10007, {0, 1, 2, 5, 40}), 2);
    const json j = to_json(tr);
    const auto back = pipeline_trace_from_json(json::parse(j.dump()));
    CHECK(to_json(back) == j);
    CHECK(back.notes.size() == tr.notes.size());
    for (std::size_t i = 0; i < tr.notes.size(); ++i)
        CHECK(back.notes[i].verdict == tr.notes[i].verdict);

    // short-circuit branch: window and B are null
    const auto dense = run_proof_pipeline(make_residue_set(11, {0, 1, 2, 3}), 2);
    const json jd = to_json(dense);
    CHECK(jd.at("window").is_null());
    CHECK(jd.at("B").is_null());
    CHECK(to_json(pipeline_trace_from_json(jd)) == jd);
}

TEST_CASE("search report round trip, residue and integer sides") {
    const auto modp = exhaustive_min_sumset_modp(11, 2, 3);
    const json jm = to_json(modp);
    CHECK(jm.at("p") == 11);
    CHECK(to_json(search_report_from_json(json::parse(jm.dump()))) == jm);

    const auto ints = exhaustive_min_sumset_integers(3, 2, 9);
    const json ji = to_json(ints);
    CHECK(ji.at("p") == "integers");
    CHECK(ji.at("diameter_cap") == 9);
    const auto back = search_report_from_json(ji);
    CHECK_FALSE(back.p.has_value());
    CHECK(to_json(back) == ji);
}

TEST_CASE("verify report round trip") {
    const auto rep = verify_theorem1_sampled(101, 2, 50, 42);
    const json j = to_json(rep);
    CHECK(j.at("violations").empty());
    CHECK(j.at("seed") == 42);
    CHECK(to_json(verify_report_from_json(json::parse(j.dump()))) == j);

    // a fabricated violation must survive the trip too
    VerifyReport bad;
    bad.p = 7;
    bad.t = 2;
    bad.mode = "exhaustive";
    bad.sets_checked = 1;
    bad.violations.push_back({{0, 1, 3}, 4, 5.5});
    bad.min_slack = -1.5;
    const json jb = to_json(bad);
    const auto back = verify_report_from_json(jb);
    CHECK(back.violations.size() == 1);
    CHECK(back.violations[0].elements == std::vector<std::int64_t>{0, 1, 3});
    CHECK(to_json(back) == jb);
}

TEST_CASE("conjecture table json") {
    const auto table = conjecture1_explorer(11, 2, 1, 3);
    const json j = to_json(table);
    CHECK(j.at("rows").size() == 3);
    CHECK(j.at("rows")[0].at("degenerate") == true);
    CHECK(j.at("empirical_c_lower_bound") ==
          table.empirical_c_lower_bound);
}

TEST_CASE("csv renderings") {
    const auto s = indicator_dft(make_residue_set(7, {0, 1}));
    const std::string sc = spectrum_csv(s);
    CHECK(sc.rfind("r,magnitude\n", 0) == 0);
    CHECK(std::count(sc.begin(), sc.end(), '\n') == 8);  // header + 7 rows

    const std::string bc = bound_profile_csv(make_bound_profile(2, 1e-4));
    CHECK(bc.rfind("t,c,c0,f,w,bound\n", 0) == 0);

    const std::string rc = search_report_csv(exhaustive_min_sumset_modp(11, 2, 3));
    CHECK(rc.rfind("p,t,k,min,deficiency,witnesses_truncated,sets_examined,seconds\n",
                   0) == 0);
    std::istringstream is(rc);
    std::string header, row;
    std::getline(is, header);
    std::getline(is, row);
    CHECK(row.rfind("11,2,3,7,2,", 0) == 0);

    const std::string ic = search_report_csv(exhaustive_min_sumset_integers(3, 2, 9));
    CHECK(ic.find("\nintegers,2,3,7,") != std::string::npos);

    const std::string cc = conjecture_csv(conjecture1_explorer(11, 2, 2, 3));
    CHECK(cc.rfind("p,t,k,min,deficiency,capped_at_p,degenerate\n", 0) == 0);
    CHECK(std::count(cc.begin(), cc.end(), '\n') == 3);
}
