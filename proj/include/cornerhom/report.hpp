#pragma once

#include <fstream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>

#include "cornerhom/hochschild.hpp"

namespace cornerhom {

inline constexpr const char* kToolVersion = "0.1.0";

/// FNV-1a over the raw input text; cheap, stable, good enough as a digest.
inline std::string content_digest(const std::string& text)
{
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

struct AnalyzeOptions {
    std::string idempotent;             // empty: sole declared idempotent
    std::size_t cutoff = 30;
    std::size_t maxlen = 0;             // 0: presentation default
    std::size_t hh_degree = 6;
    bool no_hh = false;
    std::optional<FieldSpec> field_override;
    std::size_t enveloping_cap = kDefaultEnvelopingCap;
};

/// Field-free summary of one idempotent analysis; everything the CLI prints
/// and the golden corpus pins down.
struct AnalysisReport {
    // input block
    std::string path;
    std::string digest;
    std::string field;
    std::size_t dim_lambda = 0, dim_corner = 0, dim_quotient = 0;
    std::string idempotent_name;
    std::vector<std::string> idempotent_vertices;
    std::string corner_pretty;

    ConditionReport conditions;
    Verdict evt_iso, singular, cm;
    GorensteinTransfer gorenstein;
    bool fg_asserted = false;
    std::string fg_disclaimer;

    StratifyingReport stratifying;
    OrderedSimples ordered;
    ShortcutOrder shortcut;

    bool hh_ran = false;
    HHReport hh;
    std::vector<std::string> hh_notes;  // why HH was skipped, when it was

    std::size_t cutoff = 0, maxlen = 0, hh_degree = 0;
};

// ---------------------------------------------------------------------------
// canonical JSON (sorted keys via nlohmann's std::map backing; integers only)

namespace reportjson {

using nlohmann::json;

inline json dump(const DimBound& d)
{
    return json{{"certified_infinite", d.certified_infinite},
                {"finite", d.finite},
                {"value", d.value}};
}

inline DimBound load_dim(const json& j)
{
    DimBound d;
    d.finite = j.at("finite").get<bool>();
    d.value = j.at("value").get<std::size_t>();
    d.certified_infinite = j.at("certified_infinite").get<bool>();
    return d;
}

inline Tri load_tri(const json& j)
{
    auto s = j.get<std::string>();
    if (s == "holds")
        return Tri::holds;
    if (s == "fails")
        return Tri::fails;
    return Tri::unknown;
}

inline json dump(const Condition& c)
{
    return json{{"status", tri_name(c.status)}, {"value", dump(c.value)}};
}

inline Condition load_condition(const json& j)
{
    return Condition{load_dim(j.at("value")), load_tri(j.at("status"))};
}

inline json dump(const Verdict& v)
{
    json j{{"status", tri_name(v.status)}, {"notes", v.notes}};
    j["bound"] = v.bound ? json(*v.bound) : json(nullptr);
    return j;
}

inline Verdict load_verdict(const json& j)
{
    Verdict v;
    v.status = load_tri(j.at("status"));
    if (!j.at("bound").is_null())
        v.bound = j.at("bound").get<std::size_t>();
    v.notes = j.at("notes").get<std::vector<std::string>>();
    return v;
}

inline json dump(const GorensteinReport& g)
{
    return json{{"left_self_injective_dim", dump(g.left_self_injective_dim)},
                {"right_self_injective_dim", dump(g.right_self_injective_dim)},
                {"status", tri_name(g.status)}};
}

inline GorensteinReport load_gorenstein(const json& j)
{
    GorensteinReport g;
    g.left_self_injective_dim = load_dim(j.at("left_self_injective_dim"));
    g.right_self_injective_dim = load_dim(j.at("right_self_injective_dim"));
    g.status = load_tri(j.at("status"));
    return g;
}

inline json to_json(const AnalysisReport& r)
{
    json j;
    j["input"] = {{"path", r.path},
                  {"digest", r.digest},
                  {"field", r.field},
                  {"dim_lambda", r.dim_lambda},
                  {"dim_corner", r.dim_corner},
                  {"dim_quotient", r.dim_quotient},
                  {"idempotent", {{"name", r.idempotent_name}, {"vertices", r.idempotent_vertices}}},
                  {"corner_pretty", r.corner_pretty}};
    j["conditions"] = {{"alpha", dump(r.conditions.alpha)},
                       {"beta", dump(r.conditions.beta)},
                       {"gamma", dump(r.conditions.gamma)},
                       {"delta", dump(r.conditions.delta)}};
    j["verdicts"] = {
        {"evt_homological_iso", dump(r.evt_iso)},
        {"singular_equivalence", dump(r.singular)},
        {"gorenstein",
         {{"lambda", dump(r.gorenstein.lambda)},
          {"corner", dump(r.gorenstein.corner)},
          {"transfer_asserted", r.gorenstein.transfer_asserted},
          {"notes", r.gorenstein.notes}}},
        {"cm_equivalence", dump(r.cm)},
        {"fg_precondition",
         {{"transfer_asserted", r.fg_asserted}, {"disclaimer", r.fg_disclaimer}}}};
    j["stratifying"] = {{"tensor_dim", r.stratifying.tensor_dim},
                        {"ideal_dim", r.stratifying.ideal_dim},
                        {"mult_map_bijective", r.stratifying.mult_map_bijective},
                        {"tor_vanishing", tri_name(r.stratifying.tor_vanishing)},
                        {"first_nonzero_tor", r.stratifying.first_nonzero_tor},
                        {"status", tri_name(r.stratifying.stratifying)}};
    j["ordered_simples"] = {{"order", r.ordered.order ? json(*r.ordered.order) : json(nullptr)},
                            {"certified", r.ordered.certified},
                            {"notes", r.ordered.notes},
                            {"shortcut_pd_route", r.shortcut.pd_route},
                            {"shortcut_id_route", r.shortcut.id_route}};
    j["hochschild"] = {{"ran", r.hh_ran},
                       {"applicable", r.hh.applicable},
                       {"scope_ok", r.hh.scope_ok},
                       {"max_degree", r.hh.max_degree},
                       {"dims_lambda", r.hh.dims_lambda},
                       {"dims_corner", r.hh.dims_corner},
                       {"predicted_agreement_from", r.hh.predicted_agreement_from},
                       {"observed_agreement_from", r.hh.observed_agreement_from},
                       {"notes", r.hh.notes},
                       {"skip_notes", r.hh_notes}};
    j["meta"] = {{"cutoff", r.cutoff},
                 {"maxlen", r.maxlen},
                 {"hh_degree", r.hh_degree},
                 {"tool", "cornerhom"},
                 {"version", kToolVersion}};
    return j;
}

inline AnalysisReport from_json(const json& j)
{
    AnalysisReport r;
    const auto& in = j.at("input");
    r.path = in.at("path").get<std::string>();
    r.digest = in.at("digest").get<std::string>();
    r.field = in.at("field").get<std::string>();
    r.dim_lambda = in.at("dim_lambda").get<std::size_t>();
    r.dim_corner = in.at("dim_corner").get<std::size_t>();
    r.dim_quotient = in.at("dim_quotient").get<std::size_t>();
    r.idempotent_name = in.at("idempotent").at("name").get<std::string>();
    r.idempotent_vertices = in.at("idempotent").at("vertices").get<std::vector<std::string>>();
    r.corner_pretty = in.at("corner_pretty").get<std::string>();

    const auto& c = j.at("conditions");
    r.conditions.alpha = load_condition(c.at("alpha"));
    r.conditions.beta = load_condition(c.at("beta"));
    r.conditions.gamma = load_condition(c.at("gamma"));
    r.conditions.delta = load_condition(c.at("delta"));

    const auto& v = j.at("verdicts");
    r.evt_iso = load_verdict(v.at("evt_homological_iso"));
    r.singular = load_verdict(v.at("singular_equivalence"));
    r.cm = load_verdict(v.at("cm_equivalence"));
    r.gorenstein.lambda = load_gorenstein(v.at("gorenstein").at("lambda"));
    r.gorenstein.corner = load_gorenstein(v.at("gorenstein").at("corner"));
    r.gorenstein.transfer_asserted = v.at("gorenstein").at("transfer_asserted").get<bool>();
    r.gorenstein.notes = v.at("gorenstein").at("notes").get<std::vector<std::string>>();
    r.fg_asserted = v.at("fg_precondition").at("transfer_asserted").get<bool>();
    r.fg_disclaimer = v.at("fg_precondition").at("disclaimer").get<std::string>();

    const auto& s = j.at("stratifying");
    r.stratifying.tensor_dim = s.at("tensor_dim").get<std::size_t>();
    r.stratifying.ideal_dim = s.at("ideal_dim").get<std::size_t>();
    r.stratifying.mult_map_bijective = s.at("mult_map_bijective").get<bool>();
    r.stratifying.tor_vanishing = load_tri(s.at("tor_vanishing"));
    r.stratifying.first_nonzero_tor = s.at("first_nonzero_tor").get<std::size_t>();
    r.stratifying.stratifying = load_tri(s.at("status"));

    const auto& o = j.at("ordered_simples");
    if (!o.at("order").is_null())
        r.ordered.order = o.at("order").get<std::vector<int>>();
    r.ordered.certified = o.at("certified").get<bool>();
    r.ordered.notes = o.at("notes").get<std::vector<std::string>>();
    r.shortcut.pd_route = o.at("shortcut_pd_route").get<bool>();
    r.shortcut.id_route = o.at("shortcut_id_route").get<bool>();

    const auto& h = j.at("hochschild");
    r.hh_ran = h.at("ran").get<bool>();
    r.hh.applicable = h.at("applicable").get<bool>();
    r.hh.scope_ok = h.at("scope_ok").get<bool>();
    r.hh.max_degree = h.at("max_degree").get<std::size_t>();
    r.hh.dims_lambda = h.at("dims_lambda").get<std::vector<std::size_t>>();
    r.hh.dims_corner = h.at("dims_corner").get<std::vector<std::size_t>>();
    r.hh.predicted_agreement_from = h.at("predicted_agreement_from").get<std::size_t>();
    r.hh.observed_agreement_from = h.at("observed_agreement_from").get<std::size_t>();
    r.hh.notes = h.at("notes").get<std::vector<std::string>>();
    r.hh_notes = h.at("skip_notes").get<std::vector<std::string>>();

    const auto& m = j.at("meta");
    r.cutoff = m.at("cutoff").get<std::size_t>();
    r.maxlen = m.at("maxlen").get<std::size_t>();
    r.hh_degree = m.at("hh_degree").get<std::size_t>();
    return r;
}

inline std::string serialize(const json& j) { return j.dump(2) + "\n"; }

}  // namespace reportjson

// ---------------------------------------------------------------------------
// analysis driver

template <class F>
AnalysisReport analyze_presentation(const QuiverPresentation& qp, F field,
                                    const AnalyzeOptions& opts, const std::string& path,
                                    const std::string& digest)
{
    AnalysisReport rep;
    rep.path = path;
    rep.digest = digest;
    rep.field = field.spec().str();
    rep.cutoff = opts.cutoff;
    rep.maxlen = opts.maxlen ? opts.maxlen : qp.default_maxlen();
    rep.hh_degree = opts.hh_degree;

    auto built = build_algebra(qp, field, rep.maxlen);
    auto lambda = std::make_shared<const Algebra<F>>(std::move(built.algebra));
    rep.dim_lambda = lambda->dim;

    std::string iname = opts.idempotent;
    if (iname.empty()) {
        if (qp.idempotents.size() != 1)
            throw std::invalid_argument("analyze: idempotent name required (declared: " +
                                        std::to_string(qp.idempotents.size()) + ")");
        iname = qp.idempotents.begin()->first;
    }
    auto it = qp.idempotents.find(iname);
    if (it == qp.idempotents.end())
        throw std::invalid_argument("analyze: idempotent '" + iname + "' not declared");
    rep.idempotent_name = iname;
    for (int v : it->second.vertex_set)
        rep.idempotent_vertices.push_back(qp.vertices[v]);

    auto ctx = make_context(lambda, it->second);
    rep.dim_corner = ctx.corner_alg->dim;
    rep.dim_quotient = ctx.quotient->dim;
    rep.corner_pretty = quiver_of_algebra(*ctx.corner_alg, ctx.corner_alg->dim + 1).pretty;

    rep.conditions = condition_report(ctx, opts.cutoff);
    rep.evt_iso = verdict_evt_homological_iso(rep.conditions);
    rep.singular = verdict_singular_equivalence(rep.conditions);
    rep.gorenstein = verdict_gorenstein_transfer(ctx, opts.cutoff);
    rep.cm = verdict_cm_equivalence(ctx, opts.cutoff);
    rep.stratifying = stratifying_check(ctx, opts.cutoff);
    rep.ordered = ordered_simples(ctx, opts.cutoff);
    rep.shortcut = shortcut_order_exists(qp, it->second);

    rep.fg_asserted = rep.evt_iso.status == Tri::holds &&
                      semisimple_scope_check(*lambda) && semisimple_scope_check(*ctx.corner_alg);
    rep.fg_disclaimer =
        "FG itself (noetherianness of HH* and finite generation of Ext*(Lambda/rad)) is not "
        "decided; only the transfer equivalence's hypotheses and dimension-level consequences "
        "are certified";

    if (opts.no_hh) {
        rep.hh_notes.push_back("skipped by flag");
    } else if (lambda->dim > opts.enveloping_cap || ctx.corner_alg->dim > opts.enveloping_cap) {
        rep.hh_notes.push_back("skipped: algebra dimension exceeds the enveloping cap " +
                               std::to_string(opts.enveloping_cap));
    } else {
        rep.hh = hh_compare(ctx, opts.hh_degree, opts.cutoff, opts.enveloping_cap);
        rep.hh_ran = true;
    }
    return rep;
}

inline std::string read_text_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

/// Parse, build and analyze one .qalg file; dispatches on the ground field.
inline AnalysisReport analyze_file(const std::string& path, const AnalyzeOptions& opts)
{
    auto text = read_text_file(path);
    auto qp = parse_algebra_text(text);
    FieldSpec fs = opts.field_override.value_or(qp.field);
    std::string base = path;
    if (auto slash = base.find_last_of('/'); slash != std::string::npos)
        base = base.substr(slash + 1);
    if (fs.kind == FieldSpec::Kind::prime)
        return analyze_presentation(qp, Fp(fs.p), opts, base, content_digest(text));
    return analyze_presentation(qp, Rationals{}, opts, base, content_digest(text));
}

// ---------------------------------------------------------------------------
// triangular-spec input (sigma/gamma corners plus a connecting bimodule)

struct TriangularAnalysis {
    std::string path, digest, field;
    std::size_t dim_sigma = 0, dim_gamma = 0, dim_bimodule = 0, dim_total = 0;
    TriangularReport report;
    GorensteinReport gorenstein_total, gorenstein_sigma, gorenstein_gamma;
    std::size_t cutoff = 0;
};

namespace reportjson {

inline json to_json(const TriangularAnalysis& t)
{
    auto tri = [&](Tri x) { return std::string(tri_name(x)); };
    json j;
    j["input"] = {{"path", t.path},
                  {"digest", t.digest},
                  {"field", t.field},
                  {"dim_sigma", t.dim_sigma},
                  {"dim_gamma", t.dim_gamma},
                  {"dim_bimodule", t.dim_bimodule},
                  {"dim_total", t.dim_total}};
    j["triangular"] = {{"gldim_sigma", dump(t.report.gldim_sigma)},
                       {"gldim_gamma", dump(t.report.gldim_gamma)},
                       {"pd_gamma_m", dump(t.report.pd_gamma_m)},
                       {"pd_sigma_m", dump(t.report.pd_sigma_m)},
                       {"sing_equiv_with_gamma", tri(t.report.sing_equiv_with_gamma)},
                       {"gorenstein_iff_gamma", tri(t.report.gorenstein_iff_gamma)},
                       {"fg_iff_gamma", tri(t.report.fg_iff_gamma)},
                       {"sing_equiv_with_sigma", tri(t.report.sing_equiv_with_sigma)},
                       {"gorenstein_iff_sigma", tri(t.report.gorenstein_iff_sigma)},
                       {"fg_iff_sigma", tri(t.report.fg_iff_sigma)},
                       {"notes", t.report.notes}};
    j["gorenstein"] = {{"total", dump(t.gorenstein_total)},
                       {"sigma", dump(t.gorenstein_sigma)},
                       {"gamma", dump(t.gorenstein_gamma)}};
    j["meta"] = {{"cutoff", t.cutoff}, {"tool", "cornerhom"}, {"version", kToolVersion}};
    return j;
}

}  // namespace reportjson

/// Load the triangular-spec JSON; paths inside resolve relative to the spec
/// file's directory.
template <class F>
struct TriangularInput {
    AlgebraPtr<F> sigma, gamma, total;
    BimoduleData<F> bimodule;
};

template <class F>
TriangularInput<F> load_triangular(const nlohmann::json& j, F field, const std::string& dir,
                                   std::size_t maxlen = 0)
{
    TriangularInput<F> t;
    auto load_alg = [&](const std::string& rel) {
        auto qp = parse_algebra_text(read_text_file(dir + rel));
        auto r = build_algebra(qp, field, maxlen ? maxlen : qp.default_maxlen());
        return std::make_shared<const Algebra<F>>(std::move(r.algebra));
    };
    t.sigma = load_alg(j.at("sigma").get<std::string>());
    t.gamma = load_alg(j.at("gamma").get<std::string>());
    const auto& bm = j.at("bimodule");
    t.bimodule.dim = bm.at("dim").get<std::size_t>();
    auto load_mats = [&](const nlohmann::json& arr) {
        std::vector<Matrix<F>> out;
        for (const auto& mj : arr) {
            Matrix<F> m(field, t.bimodule.dim, t.bimodule.dim);
            for (std::size_t r = 0; r < t.bimodule.dim; ++r)
                for (std::size_t c = 0; c < t.bimodule.dim; ++c)
                    m.at(r, c) = field.from_int(mj.at(r).at(c).template get<std::int64_t>());
            out.push_back(std::move(m));
        }
        return out;
    };
    t.bimodule.left = load_mats(bm.at("left_actions"));
    t.bimodule.right = load_mats(bm.at("right_actions"));
    t.total = std::make_shared<const Algebra<F>>(triangular(*t.sigma, *t.gamma, t.bimodule));
    return t;
}

template <class F>
TriangularAnalysis analyze_triangular(const TriangularInput<F>& in, F field,
                                      const std::string& path, const std::string& digest,
                                      std::size_t cutoff)
{
    TriangularAnalysis t;
    t.path = path;
    t.digest = digest;
    t.field = field.spec().str();
    t.dim_sigma = in.sigma->dim;
    t.dim_gamma = in.gamma->dim;
    t.dim_bimodule = in.bimodule.dim;
    t.dim_total = in.total->dim;
    t.cutoff = cutoff;
    t.report = triangular_verdicts(in.sigma, in.gamma, in.bimodule, cutoff);
    auto rep = [&](AlgebraPtr<F> a) {
        auto op = std::make_shared<const Algebra<F>>(opposite(*a));
        return gorenstein_report(a, op, cutoff);
    };
    t.gorenstein_total = rep(in.total);
    t.gorenstein_sigma = rep(in.sigma);
    t.gorenstein_gamma = rep(in.gamma);
    return t;
}

inline TriangularAnalysis analyze_triangular_file(const std::string& path, std::size_t cutoff,
                                                  std::optional<FieldSpec> field_override = {})
{
    auto text = read_text_file(path);
    auto j = nlohmann::json::parse(text);
    std::string dir, base = path;
    if (auto slash = path.find_last_of('/'); slash != std::string::npos) {
        dir = path.substr(0, slash + 1);
        base = path.substr(slash + 1);
    }
    FieldSpec fs = field_override.value_or(FieldSpec::prime(101));
    if (j.contains("field")) {
        auto fv = j.at("field");
        if (fv.is_string() && fv.get<std::string>() == "rational")
            fs = FieldSpec::rational();
        else if (fv.is_number_integer())
            fs = FieldSpec::prime(fv.get<std::int64_t>());
    }
    if (field_override)
        fs = *field_override;
    if (fs.kind == FieldSpec::Kind::prime) {
        Fp f(fs.p);
        return analyze_triangular(load_triangular(j, f, dir), f, base, content_digest(text),
                                  cutoff);
    }
    Rationals f;
    return analyze_triangular(load_triangular(j, f, dir), f, base, content_digest(text), cutoff);
}

// ---------------------------------------------------------------------------
// human-readable rendering

inline std::string render_summary(const AnalysisReport& r)
{
    std::ostringstream os;
    os << r.path << " over " << r.field << ": dim Lambda = " << r.dim_lambda
       << ", corner '" << r.idempotent_name << "' dim " << r.dim_corner << " (" << r.corner_pretty
       << "), quotient dim " << r.dim_quotient << "\n";
    os << "  conditions: alpha " << r.conditions.alpha.value.str() << ", beta "
       << r.conditions.beta.value.str() << ", gamma " << r.conditions.gamma.value.str()
       << ", delta " << r.conditions.delta.value.str() << " (cutoff " << r.cutoff << ")\n";
    auto verd = [&](const char* name, const Verdict& v) {
        os << "  " << name << ": " << tri_name(v.status);
        if (v.bound)
            os << " (bound " << *v.bound << ")";
        for (const auto& n : v.notes)
            os << "; " << n;
        os << "\n";
    };
    verd("eventually homological iso", r.evt_iso);
    verd("singular equivalence", r.singular);
    os << "  Gorenstein: Lambda " << tri_name(r.gorenstein.lambda.status) << " (id "
       << r.gorenstein.lambda.left_self_injective_dim.str() << " / "
       << r.gorenstein.lambda.right_self_injective_dim.str() << "), corner "
       << tri_name(r.gorenstein.corner.status)
       << (r.gorenstein.transfer_asserted ? "; transfer asserted" : "; transfer not asserted")
       << "\n";
    verd("CM equivalence", r.cm);
    os << "  FG precondition: " << (r.fg_asserted ? "hypotheses certified" : "hypotheses fail")
       << "\n";
    os << "  stratifying ideal: " << tri_name(r.stratifying.stratifying) << " (tensor dim "
       << r.stratifying.tensor_dim << " vs ideal dim " << r.stratifying.ideal_dim << ")\n";
    os << "  ordered simples: "
       << (r.ordered.order ? "found (" + std::to_string(r.ordered.order->size()) + " simples)"
                           : "none");
    for (const auto& n : r.ordered.notes)
        os << "; " << n;
    os << "\n";
    if (r.hh_ran) {
        os << "  HH dims Lambda:";
        for (auto d : r.hh.dims_lambda)
            os << " " << d;
        os << " | corner:";
        for (auto d : r.hh.dims_corner)
            os << " " << d;
        os << " | predicted agreement from " << r.hh.predicted_agreement_from
           << ", observed from " << r.hh.observed_agreement_from << "\n";
    } else {
        for (const auto& n : r.hh_notes)
            os << "  HH: " << n << "\n";
    }
    return os.str();
}

}  // namespace cornerhom
