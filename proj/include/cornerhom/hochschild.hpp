#pragma once

#include <limits>
#include <string>
#include <vector>

#include "cornerhom/recollement.hpp"

namespace cornerhom {

/// Raised when an operation is outside the supported scope (too large for the
/// enveloping-algebra engine, or not split basic).
struct ScopeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr std::size_t kDefaultEnvelopingCap = 16;

/// The semisimplicity hypothesis of the comparison results: Lambda/rad must be
/// a product of copies of the ground field, which the split basic invariant
/// encodes as dim = #vertices + dim rad.
template <class F>
bool semisimple_scope_check(const Algebra<F>& a)
{
    return a.radical_basis.size() + a.n_vertices() == a.dim;
}

template <class F>
struct Enveloping {
    AlgebraPtr<F> env;        // A (x) A^op
    AlgebraPtr<F> a_op;       // the opposite factor, kept for duals
    ModuleRep<F> regular;     // A as a left module over env: (a(x)b).m = a m b
};

template <class F>
Enveloping<F> enveloping(AlgebraPtr<F> a, std::size_t cap = kDefaultEnvelopingCap)
{
    if (!semisimple_scope_check(*a))
        throw ScopeError("enveloping: algebra is not split basic");
    if (a->dim > cap)
        throw ScopeError("enveloping: dim " + std::to_string(a->dim) + " exceeds the cap " +
                         std::to_string(cap) + "; raise the cap explicitly if intended");
    Enveloping<F> e;
    e.a_op = std::make_shared<const Algebra<F>>(opposite(*a));
    e.env = std::make_shared<const Algebra<F>>(tensor_algebra(*a, *e.a_op));
    e.regular.alg = e.env;
    e.regular.dim = a->dim;
    e.regular.act.reserve(e.env->dim);
    for (std::size_t i = 0; i < a->dim; ++i) {
        auto li = a->left_mult_matrix(static_cast<int>(i));
        for (std::size_t j = 0; j < a->dim; ++j)
            e.regular.act.push_back(li * a->right_mult_matrix(static_cast<int>(j)));
    }
    return e;
}

/// The idempotent of the enveloping algebra matching a corner idempotent a:
/// the vertex pairs {(u, v) : u, v in a}.
template <class F>
Idempotent epsilon_idempotent(const Algebra<F>& a, const Idempotent& idem)
{
    Idempotent eps;
    const int n = static_cast<int>(a.n_vertices());
    for (int u : idem.vertex_set)
        for (int v : idem.vertex_set)
            eps.vertex_set.push_back(u * n + v);
    std::sort(eps.vertex_set.begin(), eps.vertex_set.end());
    return eps;
}

/// dim HH^j(A) for j = 0..max_degree.
template <class F>
std::vector<std::size_t> hh_dims(AlgebraPtr<F> a, std::size_t max_degree,
                                 std::size_t cap = kDefaultEnvelopingCap)
{
    auto e = enveloping(a, cap);
    MinimalResolution<F> res(e.regular, /*detect_periodicity=*/false);
    return ext_dims(res, e.regular, max_degree);
}

/// Independent degree-0 oracle: dim of the center of A, from the commutation
/// equations z b = b z.
template <class F>
std::size_t center_dim_oracle(const Algebra<F>& a)
{
    const F& f = a.field;
    Matrix<F> sys(f, a.dim * a.dim, a.dim);
    for (std::size_t i = 0; i < a.dim; ++i) {
        auto d = a.left_mult_matrix(static_cast<int>(i)) - a.right_mult_matrix(static_cast<int>(i));
        for (std::size_t r = 0; r < a.dim; ++r)
            for (std::size_t c = 0; c < a.dim; ++c)
                sys.at(i * a.dim + r, c) = d.at(r, c);
    }
    return kernel_basis(sys).cols();
}

// ---------------------------------------------------------------------------
// comparison between HH(Lambda) and HH(corner)

struct HHReport {
    std::size_t max_degree = 0;
    std::vector<std::size_t> dims_lambda;
    std::vector<std::size_t> dims_corner;
    std::size_t predicted_agreement_from = 0;
    std::size_t observed_agreement_from = 0;  // > max_degree means inconclusive
    bool scope_ok = false;
    bool applicable = false;  // hypotheses (evt-iso) established
    std::vector<std::string> notes;
};

/// Dimension comparison of HH(Lambda) and HH(aLambdaa): the comparison theorem
/// promises equality in every degree strictly above
/// max(alpha, gamma) + beta + delta + 1.
template <class F>
HHReport hh_compare(const IdempotentContext<F>& ctx, std::size_t max_degree, std::size_t cutoff,
                    std::size_t cap = kDefaultEnvelopingCap)
{
    HHReport rep;
    rep.max_degree = max_degree;
    rep.scope_ok =
        semisimple_scope_check(*ctx.lambda) && semisimple_scope_check(*ctx.corner_alg);
    auto conditions = condition_report(ctx, cutoff);
    auto evt = verdict_evt_homological_iso(conditions);
    if (!rep.scope_ok || evt.status != Tri::holds) {
        rep.applicable = false;
        if (!rep.scope_ok)
            rep.notes.push_back("scope check failed: not split basic");
        if (evt.status != Tri::holds)
            for (const auto& n : evt.notes)
                rep.notes.push_back(n);
        return rep;
    }
    rep.applicable = true;
    rep.predicted_agreement_from = std::max(conditions.alpha.value.value,
                                            conditions.gamma.value.value) +
                                   conditions.beta.value.value + conditions.delta.value.value + 2;
    rep.dims_lambda = hh_dims(ctx.lambda, max_degree, cap);
    rep.dims_corner = hh_dims(ctx.corner_alg, max_degree, cap);
    std::size_t from = max_degree + 1;
    for (std::size_t t = max_degree + 1; t-- > 0;) {
        if (rep.dims_lambda[t] != rep.dims_corner[t])
            break;
        from = t;
    }
    rep.observed_agreement_from = from;
    if (from > max_degree)
        rep.notes.push_back("no agreement window observed up to max_degree");
    return rep;
}

// ---------------------------------------------------------------------------
// duality and pd inequalities

/// dim Ext^j_{Ae}(A, M (x) D(N)) = dim Ext^j_A(N, M), both sides computed
/// independently. Returns the two values.
template <class F>
std::pair<std::size_t, std::size_t> ext_duality_values(AlgebraPtr<F> a, const ModuleRep<F>& m,
                                                       const ModuleRep<F>& n, std::size_t j,
                                                       std::size_t cap = kDefaultEnvelopingCap)
{
    auto e = enveloping(a, cap);
    auto coef = outer_tensor(m, dual_module(n, e.a_op), e.env);
    MinimalResolution<F> renv(e.regular, /*detect_periodicity=*/false);
    std::size_t lhs = ext_dims(renv, coef, j)[j];
    MinimalResolution<F> ra(n, /*detect_periodicity=*/false);
    std::size_t rhs = ext_dims(ra, m, j)[j];
    return {lhs, rhs};
}

template <class F>
bool ext_duality_check(AlgebraPtr<F> a, const ModuleRep<F>& m, const ModuleRep<F>& n,
                       std::size_t j, std::size_t cap = kDefaultEnvelopingCap)
{
    auto [lhs, rhs] = ext_duality_values(a, m, n, j, cap);
    return lhs == rhs;
}

/// pd_{Sigma (x) Gamma}(M (x) N) <= pd M + pd N whenever both are finite.
template <class F>
bool check_tensor_pd_inequality(const ModuleRep<F>& m, const ModuleRep<F>& n,
                                AlgebraPtr<F> tensor_alg, std::size_t cutoff)
{
    MinimalResolution<F> rm(m, false), rn(n, false);
    DimBound pm = rm.pd(cutoff), pn = rn.pd(cutoff);
    if (!pm.is_finite() || !pn.is_finite())
        return true;  // inequality only asserted for finite inputs
    MinimalResolution<F> rt(outer_tensor(m, n, tensor_alg), false);
    DimBound pt = rt.pd(cutoff + pm.value + pn.value);
    return pt.is_finite() && pt.value <= pm.value + pn.value;
}

struct EnvelopeCornerPd {
    DimBound pd_eps_env;  // pd of eps Lambda-e over eps Lambda-e eps
    DimBound beta, delta;
    bool inequality_ok = false;  // pd_eps <= beta + delta (when all finite)
};

/// pd over the eps-corner of the enveloping algebra of eps·Lambda-e, bounded by
/// beta + delta.
template <class F>
EnvelopeCornerPd check_envelope_corner_pd(const IdempotentContext<F>& ctx, std::size_t cutoff,
                                          std::size_t cap = kDefaultEnvelopingCap)
{
    EnvelopeCornerPd out;
    auto conditions = condition_report(ctx, cutoff);
    out.beta = conditions.beta.value;
    out.delta = conditions.delta.value;
    auto e = enveloping(ctx.lambda, cap);
    auto eps = epsilon_idempotent(*ctx.lambda, ctx.a);
    auto envctx = make_context(e.env, eps);
    MinimalResolution<F> r(envctx.aL.as_left_module(), /*detect_periodicity=*/false);
    out.pd_eps_env = r.pd(cutoff);
    if (out.beta.is_finite() && out.delta.is_finite())
        out.inequality_ok = out.pd_eps_env.is_finite() &&
                            out.pd_eps_env.value <= out.beta.value + out.delta.value;
    else
        out.inequality_ok = true;  // nothing asserted
    return out;
}

// ---------------------------------------------------------------------------
// FG transfer preconditions

struct FGReport {
    bool scope_ok = false;
    Verdict evt_iso;
    HHReport hh;
    bool transfer_asserted = false;
    std::string disclaimer;
};

/// The FG property itself is not decidable from finite data; this reports the
/// transfer theorem's checkable hypotheses and its dimension-level
/// consequences only.
template <class F>
FGReport fg_transfer_report(const IdempotentContext<F>& ctx, std::size_t cutoff,
                            std::size_t max_degree, std::size_t cap = kDefaultEnvelopingCap)
{
    FGReport rep;
    rep.scope_ok =
        semisimple_scope_check(*ctx.lambda) && semisimple_scope_check(*ctx.corner_alg);
    rep.evt_iso = verdict_evt_homological_iso(condition_report(ctx, cutoff));
    rep.hh = hh_compare(ctx, max_degree, cutoff, cap);
    rep.transfer_asserted = rep.scope_ok && rep.evt_iso.status == Tri::holds;
    rep.disclaimer =
        "FG itself (noetherianness of HH* and finite generation of Ext*(Lambda/rad)) is not "
        "decided; only the transfer equivalence's hypotheses and dimension-level consequences "
        "are certified";
    return rep;
}

}  // namespace cornerhom
