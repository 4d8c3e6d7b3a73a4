#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>

#include "cornerhom/report.hpp"

using namespace cornerhom;
namespace fs = std::filesystem;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitAdmissibility = 3;
constexpr int kExitScope = 4;

std::optional<FieldSpec> parse_field_override(const std::string& s)
{
    if (s.empty())
        return std::nullopt;
    if (s == "rational")
        return FieldSpec::rational();
    return FieldSpec::prime(std::stoll(s));
}

int guarded(const std::function<int()>& body)
{
    try {
        return body();
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const NotAdmissibleWithinBound& e) {
        std::cerr << "admissibility: " << e.what() << "\n";
        return kExitAdmissibility;
    } catch (const ScopeError& e) {
        std::cerr << "scope: " << e.what() << "\n";
        return kExitScope;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

int cmd_analyze(const std::string& file, AnalyzeOptions opts, const std::string& json_path)
{
    if (file.size() > 5 && file.substr(file.size() - 5) == ".json") {
        auto t = analyze_triangular_file(file, opts.cutoff, opts.field_override);
        auto j = reportjson::to_json(t);
        std::cout << t.path << " (triangular) over " << t.field << ": dim Sigma = " << t.dim_sigma
                  << ", dim Gamma = " << t.dim_gamma << ", total " << t.dim_total << "\n"
                  << "  gldim Sigma " << t.report.gldim_sigma.str() << ", gldim Gamma "
                  << t.report.gldim_gamma.str() << "\n"
                  << "  singular equivalence with Gamma: "
                  << tri_name(t.report.sing_equiv_with_gamma) << ", with Sigma: "
                  << tri_name(t.report.sing_equiv_with_sigma) << "\n"
                  << "  Gorenstein (total): " << tri_name(t.gorenstein_total.status) << " (id "
                  << t.gorenstein_total.left_self_injective_dim.str() << " / "
                  << t.gorenstein_total.right_self_injective_dim.str() << ")\n";
        if (!json_path.empty())
            std::ofstream(json_path) << reportjson::serialize(j);
        return 0;
    }
    auto rep = analyze_file(file, opts);
    std::cout << render_summary(rep);
    if (!json_path.empty())
        std::ofstream(json_path) << reportjson::serialize(reportjson::to_json(rep));
    return 0;
}

template <class F>
int resolve_with(const QuiverPresentation& qp, F field, const std::string& spec,
                 std::size_t degree, std::size_t maxlen)
{
    auto built = build_algebra(qp, field, maxlen ? maxlen : qp.default_maxlen());
    auto alg = std::make_shared<const Algebra<F>>(std::move(built.algebra));
    auto colon = spec.find(':');
    std::string kind = colon == std::string::npos ? spec : spec.substr(0, colon);
    std::string vname = colon == std::string::npos ? "" : spec.substr(colon + 1);
    ModuleRep<F> m;
    if (kind == "regular") {
        m = regular_bimodule(alg).as_left_module();
    } else {
        int v = qp.vertex_index(vname);
        if (v < 0)
            throw std::invalid_argument("unknown vertex '" + vname + "' in module spec");
        if (kind == "simple")
            m = simple_module(alg, v);
        else if (kind == "projective")
            m = projective_module(alg, v);
        else if (kind == "injective")
            m = injective_module(alg, v);
        else
            throw std::invalid_argument("module spec must be simple:v, projective:v, injective:v or regular");
    }
    MinimalResolution<F> res(m);
    DimBound pd = res.pd(degree);
    std::cout << "module " << spec << " (dim " << m.dim << ")\n";
    for (std::size_t s = 0; s < res.stages().size(); ++s) {
        std::vector<std::size_t> mult(alg->n_vertices(), 0);
        for (int v : res.stages()[s].summand_vertices)
            ++mult[v];
        std::cout << "  P_" << s << ":";
        for (std::size_t v = 0; v < mult.size(); ++v)
            if (mult[v])
                std::cout << " " << mult[v] << "*P(" << qp.vertices[v] << ")";
        std::cout << "\n";
    }
    std::cout << "  pd = " << pd.str();
    if (pd.is_finite())
        std::cout << " (resolution terminated: minimality certified by radical covers)";
    else if (pd.certified_infinite)
        std::cout << " (periodic syzygy: infinite)";
    std::cout << "\n";
    return 0;
}

int cmd_resolve(const std::string& file, const std::string& spec, std::size_t degree,
                const std::string& field_override, std::size_t maxlen)
{
    auto qp = parse_algebra_text(read_text_file(file));
    FieldSpec fsp = parse_field_override(field_override).value_or(qp.field);
    if (fsp.kind == FieldSpec::Kind::prime)
        return resolve_with(qp, Fp(fsp.p), spec, degree, maxlen);
    return resolve_with(qp, Rationals{}, spec, degree, maxlen);
}

template <class F>
int hochschild_with(const QuiverPresentation& qp, F field, std::size_t max_degree,
                    const std::string& idem, std::size_t cutoff, std::size_t maxlen,
                    std::size_t cap)
{
    auto built = build_algebra(qp, field, maxlen ? maxlen : qp.default_maxlen());
    auto alg = std::make_shared<const Algebra<F>>(std::move(built.algebra));
    auto dims = hh_dims(alg, max_degree, cap);
    std::cout << "HH over " << field.spec().str() << ":";
    for (auto d : dims)
        std::cout << " " << d;
    std::cout << "\n";
    if (!idem.empty()) {
        auto it = qp.idempotents.find(idem);
        if (it == qp.idempotents.end())
            throw std::invalid_argument("idempotent '" + idem + "' not declared");
        auto ctx = make_context(alg, it->second);
        auto cmp = hh_compare(ctx, max_degree, cutoff, cap);
        std::cout << "corner HH:";
        for (auto d : cmp.dims_corner)
            std::cout << " " << d;
        std::cout << "\n";
        if (cmp.applicable)
            std::cout << "agreement predicted from degree " << cmp.predicted_agreement_from
                      << ", observed from " << cmp.observed_agreement_from << "\n";
        for (const auto& n : cmp.notes)
            std::cout << "note: " << n << "\n";
    }
    return 0;
}

int cmd_hochschild(const std::string& file, std::size_t max_degree, const std::string& idem,
                   const std::string& field_override, std::size_t cutoff, std::size_t maxlen,
                   std::size_t cap)
{
    auto qp = parse_algebra_text(read_text_file(file));
    FieldSpec fsp = parse_field_override(field_override).value_or(qp.field);
    if (fsp.kind == FieldSpec::Kind::prime)
        return hochschild_with(qp, Fp(fsp.p), max_degree, idem, cutoff, maxlen, cap);
    return hochschild_with(qp, Rationals{}, max_degree, idem, cutoff, maxlen, cap);
}

struct CorpusEntry {
    std::string file;       // fixture file name
    std::string idempotent; // empty: triangular json
    bool with_hh = false;
};

// the bundled corpus; HH is enabled where the enveloping algebra stays small
const std::vector<CorpusEntry> kCorpus = {
    {"fix_a.qalg", "a", true},       {"fix_b.qalg", "a", true},
    {"fix_c.qalg", "all", true},     {"fix_n_2_2.qalg", "a", true},
    {"fix_n_3_2.qalg", "a", false},  {"a2.qalg", "a", true},
    {"kxk.qalg", "a", true},         {"trivial_k.qalg", "all", true},
    {"fix_t.json", "", false},
};

std::string golden_name(const std::string& fixture)
{
    auto dot = fixture.find_last_of('.');
    return fixture.substr(0, dot) + ".report.json";
}

nlohmann::json run_entry(const std::string& dir, const CorpusEntry& e, std::size_t cutoff)
{
    if (e.idempotent.empty())
        return reportjson::to_json(analyze_triangular_file(dir + "/" + e.file, cutoff));
    AnalyzeOptions o;
    o.idempotent = e.idempotent;
    o.cutoff = cutoff;
    o.no_hh = !e.with_hh;
    return reportjson::to_json(analyze_file(dir + "/" + e.file, o));
}

int cmd_corpus(const std::string& fixture_dir, const std::string& golden_dir, bool run_all,
               bool update, std::size_t cutoff)
{
    std::vector<std::pair<std::string, std::future<nlohmann::json>>> jobs;
    for (const auto& e : kCorpus)
        jobs.emplace_back(e.file,
                          std::async(run_all ? std::launch::async : std::launch::deferred,
                                     [&, e] { return run_entry(fixture_dir, e, cutoff); }));
    int failures = 0;
    for (auto& [name, fut] : jobs) {
        nlohmann::json got;
        try {
            got = fut.get();
        } catch (const std::exception& ex) {
            std::cout << "FAIL " << name << " (exception: " << ex.what() << ")\n";
            ++failures;
            continue;
        }
        fs::path gpath = fs::path(golden_dir) / golden_name(name);
        if (update) {
            std::ofstream(gpath) << reportjson::serialize(got);
            std::cout << "WROTE " << gpath.string() << "\n";
            continue;
        }
        if (!fs::exists(gpath)) {
            std::cout << "FAIL " << name << " (missing golden " << gpath.string() << ")\n";
            ++failures;
            continue;
        }
        auto want = nlohmann::json::parse(read_text_file(gpath.string()));
        if (got == want) {
            std::cout << "PASS " << name << "\n";
        } else {
            ++failures;
            std::cout << "FAIL " << name << "\n";
            auto diff = nlohmann::json::diff(want, got);
            for (const auto& d : diff)
                std::cout << "  diff " << d.dump() << "\n";
        }
    }
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"homological analysis of bound quiver algebras at an idempotent corner"};
    app.require_subcommand(1);

    std::string file, idem, json_path, field_override, module_spec;
    std::size_t cutoff = 30, maxlen = 0, hh_degree = 6, degree = 6, cap = kDefaultEnvelopingCap;
    bool no_hh = false;

    auto* an = app.add_subcommand("analyze", "full condition/verdict report for one input");
    an->add_option("file", file)->required();
    an->add_option("--idempotent", idem, "declared idempotent name");
    an->add_option("--cutoff", cutoff, "resolution cutoff");
    an->add_option("--maxlen", maxlen, "path-length truncation bound (0: automatic)");
    an->add_option("--hh-degree", hh_degree, "top Hochschild degree");
    an->add_option("--field-override", field_override, "prime p or 'rational'");
    an->add_option("--json", json_path, "write the canonical JSON report here");
    an->add_flag("--no-hh", no_hh, "skip the Hochschild comparison");

    auto* re = app.add_subcommand("resolve", "print a minimal projective resolution");
    re->add_option("file", file)->required();
    re->add_option("--module", module_spec, "simple:v | projective:v | injective:v | regular")
        ->required();
    re->add_option("--degree", degree, "number of stages to compute");
    re->add_option("--field-override", field_override);
    re->add_option("--maxlen", maxlen);

    auto* hh = app.add_subcommand("hochschild", "Hochschild cohomology dimension table");
    hh->add_option("file", file)->required();
    hh->add_option("--max-degree", hh_degree);
    hh->add_option("--idempotent", idem, "also compare against this corner");
    hh->add_option("--field-override", field_override);
    hh->add_option("--cutoff", cutoff);
    hh->add_option("--maxlen", maxlen);
    hh->add_option("--enveloping-cap", cap);

    std::string fixture_dir = "tests/fixtures", golden_dir = "tests/golden";
    bool run_all = false, update = false;
    auto* co = app.add_subcommand("corpus", "run the bundled fixtures against golden reports");
    co->add_option("--fixtures", fixture_dir);
    co->add_option("--golden", golden_dir);
    co->add_option("--cutoff", cutoff);
    co->add_flag("--run-all", run_all, "run fixtures concurrently");
    co->add_flag("--update", update, "rewrite the golden files");

    CLI11_PARSE(app, argc, argv);

    return guarded([&]() -> int {
        if (an->parsed()) {
            AnalyzeOptions o;
            o.idempotent = idem;
            o.cutoff = cutoff;
            o.maxlen = maxlen;
            o.hh_degree = hh_degree;
            o.no_hh = no_hh;
            o.field_override = parse_field_override(field_override);
            return cmd_analyze(file, o, json_path);
        }
        if (re->parsed())
            return cmd_resolve(file, module_spec, degree, field_override, maxlen);
        if (hh->parsed())
            return cmd_hochschild(file, hh_degree, idem, field_override, cutoff, maxlen, cap);
        return cmd_corpus(fixture_dir, golden_dir, run_all, update, cutoff);
    });
}
