#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cornerhom/report.hpp"

using namespace cornerhom;

static std::string fx(const std::string& n) { return std::string(FIXTURE_DIR) + "/" + n; }

template <class F>
static IdempotentContext<F> ctx_of(const std::string& name, F field,
                                   const std::string& idem = "a")
{
    auto qp = parse_algebra_text(read_text_file(fx(name)));
    auto alg = std::make_shared<const Algebra<F>>(
        build_algebra(qp, field, std::max<std::size_t>(qp.default_maxlen(), 12)).algebra);
    return make_context(alg, qp.idempotents.at(idem));
}

TEST_CASE("context invariants: corner + quotient pieces account for the algebra")
{
    auto ctx = ctx_of("fix_b.qalg", Fp(101));
    CHECK(ctx.lambda->dim == 13);
    CHECK(ctx.corner_alg->dim == 2);
    CHECK(ctx.ideal.dim() + ctx.quotient->dim == ctx.lambda->dim);
    CHECK(ctx.outside == std::vector<int>({1, 2}));
    CHECK(ctx.semisimple_part.dim == 2);
    CHECK(verify_axioms(*ctx.corner_alg).empty());
    CHECK(verify_axioms(*ctx.quotient).empty());
    CHECK(verify_bimodule(ctx.aL).empty());
    CHECK(verify_bimodule(ctx.La).empty());
    CHECK(verify_bimodule(ctx.q_l).empty());
    CHECK(verify_bimodule(ctx.l_q).empty());
}

TEST_CASE("functor oracles on the corner and quotient sides")
{
    auto ctx = ctx_of("fix_a.qalg", Fp(101));
    // e(P(v in a)) is the corner regular representation
    auto ep = functor_e(ctx, projective_module(ctx.lambda, 0));
    CHECK(modules_isomorphic(ep, regular_bimodule(ctx.corner_alg).as_left_module()));
    // e kills simples outside a, q kills everything induced from the corner
    CHECK(functor_e(ctx, simple_module(ctx.lambda, 1)).dim == 0);
    for (int v = 0; v < 2; ++v) {
        auto lp = functor_l(ctx, functor_e(ctx, projective_module(ctx.lambda, v)));
        CHECK(functor_q(ctx, lp).dim == 0);
        auto rp = functor_r(ctx, functor_e(ctx, injective_module(ctx.lambda, v)));
        CHECK(functor_p(ctx, rp).dim == 0);
    }
    // i embeds quotient modules with zero corner part
    auto iq = functor_i(ctx, simple_module(ctx.quotient, 0));
    CHECK(iq.dim == 1);
    CHECK(functor_e(ctx, iq).dim == 0);
    CHECK(modules_isomorphic(iq, simple_module(ctx.lambda, 1)));
}

TEST_CASE("conditions on the two-vertex cycle: outer pair holds, corner pair does not")
{
    auto ctx = ctx_of("fix_a.qalg", Fp(101));
    auto r = condition_report(ctx, 30);
    CHECK(r.alpha.value == DimBound::make_finite(2));
    CHECK(r.gamma.value == DimBound::make_finite(2));
    CHECK(r.alpha.status == Tri::holds);
    CHECK(!r.beta.value.finite);
    CHECK(r.beta.value.certified_infinite);
    CHECK(!r.delta.value.finite);
    CHECK(r.delta.value.certified_infinite);

    auto evt = verdict_evt_homological_iso(r);
    CHECK(evt.status == Tri::unknown);
    CHECK(!evt.bound.has_value());
    auto sing = verdict_singular_equivalence(r);
    CHECK(sing.status == Tri::unknown);
}

TEST_CASE("conditions on the loop-plus-triangle algebra: all four hold, bound 3")
{
    auto ctx = ctx_of("fix_b.qalg", Fp(101));
    auto r = condition_report(ctx, 30);
    CHECK(r.alpha.value == DimBound::make_finite(3));
    CHECK(r.beta.value == DimBound::make_finite(0));
    CHECK(r.gamma.value == DimBound::make_finite(3));
    CHECK(r.delta.value == DimBound::make_finite(0));

    auto evt = verdict_evt_homological_iso(r);
    CHECK(evt.status == Tri::holds);
    CHECK(evt.bound == 3);
    CHECK(evt.notes.empty());
    CHECK(verdict_singular_equivalence(r).status == Tri::holds);
    CHECK(verdict_cm_equivalence(ctx, 30).status == Tri::holds);
}

TEST_CASE("truncated-cycle fixtures: singular equivalence with the dual numbers")
{
    for (const char* name : {"fix_n_2_2.qalg", "fix_n_3_2.qalg"}) {
        CAPTURE(name);
        auto ctx = ctx_of(name, Fp(101));
        CHECK(quiver_of_algebra(*ctx.corner_alg, 6).pretty == "k[x]/x^2");
        auto r = condition_report(ctx, 30);
        CHECK(r.alpha.value == DimBound::make_finite(1));
        CHECK(r.beta.value == DimBound::make_finite(0));
        CHECK(r.gamma.value == DimBound::make_finite(1));
        CHECK(r.delta.value == DimBound::make_finite(0));
        CHECK(verdict_singular_equivalence(r).status == Tri::holds);
        CHECK(verdict_evt_homological_iso(r).bound == 1);
    }
}

TEST_CASE("Gorenstein transfer: asserted and consistent on the triangle fixture")
{
    auto ctx = ctx_of("fix_b.qalg", Fp(101));
    auto g = verdict_gorenstein_transfer(ctx, 30);
    CHECK(g.transfer_asserted);
    CHECK(g.lambda.status == Tri::holds);
    CHECK(g.lambda.left_self_injective_dim == DimBound::make_finite(3));
    CHECK(g.lambda.right_self_injective_dim == DimBound::make_finite(3));
    CHECK(g.corner.status == Tri::holds);
    CHECK(g.notes.empty());

    // not asserted when the evt-iso hypothesis is open
    auto ctxa = ctx_of("fix_a.qalg", Fp(101));
    CHECK(!verdict_gorenstein_transfer(ctxa, 30).transfer_asserted);
}

TEST_CASE("stratifying ideal: dimension defect detected, tor vanishing separate")
{
    auto ctx = ctx_of("fix_b.qalg", Fp(101));
    auto s = stratifying_check(ctx, 30);
    CHECK(s.tensor_dim == 12);
    CHECK(s.ideal_dim == 10);
    CHECK(!s.mult_map_bijective);
    CHECK(s.tor_vanishing == Tri::holds);
    CHECK(s.stratifying == Tri::fails);

    auto ctxn = ctx_of("fix_n_2_2.qalg", Fp(101));
    auto sn = stratifying_check(ctxn, 30);
    CHECK(sn.tensor_dim == 8);
    CHECK(sn.ideal_dim == 8);
    CHECK(sn.stratifying == Tri::holds);

    auto ctxa = ctx_of("fix_a.qalg", Fp(101));
    auto sa = stratifying_check(ctxa, 30);
    CHECK(sa.tensor_dim == 5);
    CHECK(sa.ideal_dim == 4);
    CHECK(sa.tor_vanishing == Tri::fails);
    CHECK(sa.first_nonzero_tor == 1);
    CHECK(sa.stratifying == Tri::fails);
}

TEST_CASE("ordered simples: found on the truncated cycles, blocked by self-extension")
{
    auto ctxn = ctx_of("fix_n_3_2.qalg", Fp(101));
    auto on = ordered_simples(ctxn, 30);
    REQUIRE(on.order.has_value());
    CHECK(on.certified);
    CHECK(on.order->size() == 2);

    // the triangle fixture has a simple with a positive-degree self-extension,
    // so no qualifying order exists
    auto ctxb = ctx_of("fix_b.qalg", Fp(101));
    auto ob = ordered_simples(ctxb, 30);
    CHECK(!ob.order.has_value());
    CHECK(ob.certified);
    REQUIRE(!ob.notes.empty());
    CHECK(ob.notes[0].find("self-extension") != std::string::npos);

    // empty outside set: the empty order, certified
    auto ctxc = ctx_of("fix_c.qalg", Fp(101), "all");
    auto oc = ordered_simples(ctxc, 30);
    REQUIRE(oc.order.has_value());
    CHECK(oc.order->empty());
}

TEST_CASE("syntactic shortcut for the order")
{
    auto qpn = parse_algebra_text(read_text_file(fx("fix_n_2_2.qalg")));
    auto sn = shortcut_order_exists(qpn, qpn.idempotents.at("a"));
    CHECK(sn.pd_route);
    CHECK(sn.id_route);

    auto qpb = parse_algebra_text(read_text_file(fx("fix_b.qalg")));
    auto sb = shortcut_order_exists(qpb, qpb.idempotents.at("a"));
    CHECK(!sb.pd_route);
    CHECK(!sb.id_route);
}

TEST_CASE("ext agreement beyond the certified bound, both fields")
{
    auto ctx = ctx_of("fix_b.qalg", Fp(101));
    auto res = verify_ext_agreement(ctx, 3, 3, default_ext_samples(ctx));
    CHECK(res.pass);
    CHECK(res.failures.empty());

    auto ctx2 = ctx_of("fix_b.qalg", Fp(2));
    CHECK(verify_ext_agreement(ctx2, 3, 3, default_ext_samples(ctx2)).pass);
}

TEST_CASE("triangular verdicts: one-sided hypotheses from the sample gluing")
{
    Fp f(101);
    auto qps = parse_algebra_text(read_text_file(fx("trivial_k.qalg")));
    auto sigma = std::make_shared<const Algebra<Fp>>(
        build_algebra(qps, f, qps.default_maxlen()).algebra);
    auto qpg = parse_algebra_text(read_text_file(fx("dualnum.qalg")));
    auto gamma = std::make_shared<const Algebra<Fp>>(
        build_algebra(qpg, f, qpg.default_maxlen()).algebra);
    BimoduleData<Fp> m;
    m.dim = 1;
    m.left = {Matrix<Fp>::identity(f, 1), Matrix<Fp>(f, 1, 1)};
    m.right = {Matrix<Fp>::identity(f, 1)};

    auto rep = triangular_verdicts<Fp>(sigma, gamma, m, 30);
    CHECK(rep.gldim_sigma == DimBound::make_finite(0));
    CHECK(!rep.gldim_gamma.finite);
    CHECK(rep.gldim_gamma.certified_infinite);
    CHECK(!rep.pd_gamma_m.finite);
    CHECK(rep.pd_sigma_m == DimBound::make_finite(0));
    CHECK(rep.sing_equiv_with_gamma == Tri::holds);
    CHECK(rep.gorenstein_iff_gamma == Tri::unknown);
    CHECK(rep.sing_equiv_with_sigma == Tri::unknown);
    CHECK(rep.gorenstein_iff_sigma == Tri::unknown);

    // the glued algebra itself is consistent and not Gorenstein within cutoff
    auto total = std::make_shared<const Algebra<Fp>>(triangular(*sigma, *gamma, m));
    CHECK(verify_axioms(*total).empty());
    auto top = std::make_shared<const Algebra<Fp>>(opposite(*total));
    auto g = gorenstein_report<Fp>(total, top, 30);
    CHECK(g.status == Tri::unknown);
    CHECK(g.left_self_injective_dim.certified_infinite);
    CHECK(g.right_self_injective_dim.certified_infinite);
}
