#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cornerhom/report.hpp"

using namespace cornerhom;

static std::string fx(const std::string& n) { return std::string(FIXTURE_DIR) + "/" + n; }

TEST_CASE("serialization round-trips byte-for-byte")
{
    for (const char* name : {"fix_a.qalg", "fix_b.qalg", "fix_n_2_2.qalg", "a2.qalg"}) {
        CAPTURE(name);
        AnalyzeOptions opts;
        auto rep = analyze_file(fx(name), opts);
        auto j = reportjson::to_json(rep);
        auto text = reportjson::serialize(j);
        auto back = reportjson::from_json(nlohmann::json::parse(text));
        CHECK(reportjson::serialize(reportjson::to_json(back)) == text);
    }
}

TEST_CASE("analysis is deterministic across runs")
{
    AnalyzeOptions opts;
    auto a = reportjson::serialize(reportjson::to_json(analyze_file(fx("fix_b.qalg"), opts)));
    auto b = reportjson::serialize(reportjson::to_json(analyze_file(fx("fix_b.qalg"), opts)));
    CHECK(a == b);
}

TEST_CASE("canonical form: keys sorted, no floating point, trailing newline")
{
    AnalyzeOptions opts;
    auto text =
        reportjson::serialize(reportjson::to_json(analyze_file(fx("fix_n_2_2.qalg"), opts)));
    CHECK(text.back() == '\n');
    auto j = nlohmann::json::parse(text);
    std::vector<std::string> top;
    for (auto it = j.begin(); it != j.end(); ++it)
        top.push_back(it.key());
    CHECK(top == std::vector<std::string>({"conditions", "hochschild", "input", "meta",
                                           "ordered_simples", "stratifying", "verdicts"}));
    std::function<void(const nlohmann::json&)> no_floats = [&](const nlohmann::json& v) {
        CHECK(!v.is_number_float());
        if (v.is_structured())
            for (const auto& c : v)
                no_floats(c);
    };
    no_floats(j);
}

TEST_CASE("verdicts are monotone in the cutoff: decided stays decided")
{
    AnalyzeOptions lo, hi;
    lo.cutoff = 5;
    hi.cutoff = 30;
    lo.no_hh = hi.no_hh = true;
    auto rl = analyze_file(fx("fix_b.qalg"), lo);
    auto rh = analyze_file(fx("fix_b.qalg"), hi);
    CHECK(rl.evt_iso.status == Tri::holds);
    CHECK(rh.evt_iso.status == Tri::holds);
    CHECK(rl.evt_iso.bound == rh.evt_iso.bound);
    CHECK(rl.conditions.alpha.value == rh.conditions.alpha.value);

    // the two-vertex cycle is undecided at every cutoff, with growing bounds
    auto al = analyze_file(fx("fix_a.qalg"), lo);
    auto ah = analyze_file(fx("fix_a.qalg"), hi);
    CHECK(al.evt_iso.status == Tri::unknown);
    CHECK(ah.evt_iso.status == Tri::unknown);
    CHECK(al.conditions.beta.value.value <= ah.conditions.beta.value.value);
}

TEST_CASE("options thread through: field override, no_hh, hh cap")
{
    AnalyzeOptions opts;
    opts.field_override = FieldSpec::prime(2);
    auto rep = analyze_file(fx("fix_b.qalg"), opts);
    CHECK(rep.field == "F_2");
    CHECK(rep.hh_ran);

    AnalyzeOptions off;
    off.no_hh = true;
    auto rep2 = analyze_file(fx("fix_b.qalg"), off);
    CHECK(!rep2.hh_ran);
    CHECK(!rep2.hh_notes.empty());

    // a cap below the algebra dimension skips HH with a note instead of throwing
    AnalyzeOptions tiny;
    tiny.enveloping_cap = 4;
    auto rep3 = analyze_file(fx("fix_b.qalg"), tiny);
    CHECK(!rep3.hh_ran);
    REQUIRE(!rep3.hh_notes.empty());
    CHECK(rep3.hh_notes[0].find("cap") != std::string::npos);
}

TEST_CASE("named idempotent resolution")
{
    AnalyzeOptions opts;
    opts.no_hh = true;
    opts.idempotent = "a";
    auto rep = analyze_file(fx("fix_a.qalg"), opts);
    CHECK(rep.idempotent_name == "a");
    CHECK(rep.idempotent_vertices == std::vector<std::string>{"1"});
    opts.idempotent = "missing";
    CHECK_THROWS(analyze_file(fx("fix_a.qalg"), opts));
}

TEST_CASE("input block carries a stable digest")
{
    CHECK(content_digest("abc") == content_digest("abc"));
    CHECK(content_digest("abc") != content_digest("abd"));
    AnalyzeOptions opts;
    opts.no_hh = true;
    auto rep = analyze_file(fx("fix_a.qalg"), opts);
    CHECK(rep.digest == content_digest(read_text_file(fx("fix_a.qalg"))));
    CHECK(rep.path == "fix_a.qalg");
}

TEST_CASE("triangular-spec analysis: load, analyze, serialize")
{
    auto t = analyze_triangular_file(fx("fix_t.json"), 30);
    CHECK(t.dim_sigma == 1);
    CHECK(t.dim_gamma == 2);
    CHECK(t.dim_bimodule == 1);
    CHECK(t.dim_total == 4);
    CHECK(t.field == "F_101");
    CHECK(t.report.sing_equiv_with_gamma == Tri::holds);
    CHECK(t.gorenstein_sigma.status == Tri::holds);
    CHECK(t.gorenstein_gamma.status == Tri::holds);
    CHECK(t.gorenstein_total.status == Tri::unknown);
    CHECK(t.gorenstein_total.left_self_injective_dim.certified_infinite);

    auto j = reportjson::to_json(t);
    CHECK(j.contains("input"));
    CHECK(j.contains("triangular"));
    CHECK(j.contains("gorenstein"));
    auto again = analyze_triangular_file(fx("fix_t.json"), 30);
    CHECK(reportjson::serialize(reportjson::to_json(again)) == reportjson::serialize(j));

    // field override applies to the whole gluing
    auto t2 = analyze_triangular_file(fx("fix_t.json"), 30, FieldSpec::prime(2));
    CHECK(t2.field == "F_2");
}

TEST_CASE("human summary mentions the headline facts")
{
    AnalyzeOptions opts;
    auto rep = analyze_file(fx("fix_b.qalg"), opts);
    auto s = render_summary(rep);
    CHECK(s.find("dim Lambda = 13") != std::string::npos);
    CHECK(s.find("k[x]/x^2") != std::string::npos);
    CHECK(s.find("alpha 3") != std::string::npos);
    CHECK(s.find("holds") != std::string::npos);
}
