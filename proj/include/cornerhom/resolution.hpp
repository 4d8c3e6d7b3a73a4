#pragma once

#include <string>
#include <vector>

#include "cornerhom/module.hpp"

namespace cornerhom {

/// Three-valued answer for questions decided only up to a cutoff.
enum class Tri { holds, fails, unknown };

inline const char* tri_name(Tri t)
{
    switch (t) {
        case Tri::holds: return "holds";
        case Tri::fails: return "fails";
        case Tri::unknown: return "unknown";
    }
    return "?";
}

inline Tri tri_and(Tri a, Tri b)
{
    if (a == Tri::fails || b == Tri::fails)
        return Tri::fails;
    if (a == Tri::unknown || b == Tri::unknown)
        return Tri::unknown;
    return Tri::holds;
}

inline Tri tri_or(Tri a, Tri b)
{
    if (a == Tri::holds || b == Tri::holds)
        return Tri::holds;
    if (a == Tri::unknown || b == Tri::unknown)
        return Tri::unknown;
    return Tri::fails;
}

/// A homological dimension: either an exact finite value or a lower bound
/// reached at the cutoff. When a syzygy repeats up to isomorphism the bound is
/// additionally certified infinite, but its verdict status stays Unknown —
/// the certification is diagnostic, never a refutation by itself.
struct DimBound {
    bool finite = true;
    std::size_t value = 0;            // the dimension, or the cutoff
    bool certified_infinite = false;  // periodic syzygies found (only when !finite)

    static DimBound make_finite(std::size_t d) { return {true, d, false}; }
    static DimBound at_least(std::size_t c, bool periodic = false) { return {false, c, periodic}; }

    bool is_finite() const { return finite; }

    /// Finite means holds; a cutoff (even a certified-infinite one) is Unknown.
    Tri as_condition() const { return finite ? Tri::holds : Tri::unknown; }

    std::string str() const
    {
        if (finite)
            return std::to_string(value);
        std::string s = ">=" + std::to_string(value);
        if (certified_infinite)
            s += " (periodic: infinite)";
        return s;
    }

    bool operator==(const DimBound&) const = default;
};

inline DimBound dim_add(const DimBound& a, const DimBound& b)
{
    DimBound r;
    r.finite = a.finite && b.finite;
    r.value = a.value + b.value;
    r.certified_infinite = a.certified_infinite || b.certified_infinite;
    return r;
}

/// Max over a family: exact only when all members are exact.
inline DimBound dim_max(const DimBound& a, const DimBound& b)
{
    DimBound r;
    r.finite = a.finite && b.finite;
    r.value = std::max(a.value, b.value);
    r.certified_infinite = a.certified_infinite || b.certified_infinite;
    return r;
}

// ---------------------------------------------------------------------------
// minimal projective resolutions

/// Minimal projective resolution computed stage by stage. Each stage is a sum
/// of indecomposable projectives P(v) determined by the top of the current
/// syzygy, with the differential given explicitly into the previous stage's
/// coordinates (stage 0 maps onto the module itself).
template <class F>
class MinimalResolution {
public:
    struct Stage {
        std::vector<int> summand_vertices;
        std::vector<std::size_t> gen_offsets;  // block offset per summand
        ModuleRep<F> proj;
        Matrix<F> d;  // proj -> previous stage space (stage 0: -> module)
    };

    explicit MinimalResolution(ModuleRep<F> m, bool detect_periodicity = true)
        : module_(std::move(m)), detect_periodicity_(detect_periodicity)
    {
        current_ = module_;
        if (module_.dim == 0)
            finished_ = true;
    }

    const ModuleRep<F>& module() const { return module_; }
    const std::vector<Stage>& stages() const { return stages_; }
    bool finished() const { return finished_; }
    bool periodic() const { return periodic_; }

    /// Ensure stages 0..n-1 exist (or the resolution has terminated earlier).
    /// A detected period only stops extension when the caller allows it: ext
    /// and tor still need the later stages.
    void extend_to(std::size_t n, bool stop_on_periodic = false)
    {
        while (!finished_ && !(stop_on_periodic && periodic_) && stages_.size() < n)
            step();
    }

    /// pd as certified within the cutoff: Finite when the resolution stops,
    /// otherwise a lower bound, flagged when a repeating syzygy proves it
    /// will never stop.
    DimBound pd(std::size_t cutoff)
    {
        if (module_.dim == 0)
            return DimBound::make_finite(0);
        extend_to(cutoff + 1, /*stop_on_periodic=*/true);
        if (finished_)
            return DimBound::make_finite(stages_.size() - 1);
        return DimBound::at_least(cutoff, periodic_);
    }

    /// Syzygy after the last built stage (the module itself before stage 0).
    const ModuleRep<F>& current_syzygy() const { return current_; }

private:
    void step()
    {
        const auto& algp = module_.alg;
        const auto& a = *algp;
        const F& f = a.field;

        // projective cover of the current syzygy
        auto rad = radical_span(current_);
        auto top = quotient_module(current_, rad);
        std::vector<std::size_t> keep;
        {
            std::vector<bool> pivot(current_.dim, false);
            for (auto p : rad.pivots())
                pivot[p] = true;
            for (std::size_t j = 0; j < current_.dim; ++j)
                if (!pivot[j])
                    keep.push_back(j);
        }

        Stage st;
        std::vector<std::vector<typename F::Elem>> gens;  // lifted top generators
        for (std::size_t v = 0; v < a.n_vertices(); ++v) {
            auto block = SpanBasis<F>::from_columns(top.act[a.vertex_idempotents[v]]);
            for (std::size_t r = 0; r < block.dim(); ++r) {
                std::vector<typename F::Elem> lift(current_.dim, f.zero());
                for (std::size_t c = 0; c < top.dim; ++c)
                    lift[keep[c]] = block.basis_rows().at(r, c);
                // force the generator into the e_v component
                auto x = current_.act[a.vertex_idempotents[v]].apply(lift);
                st.summand_vertices.push_back(static_cast<int>(v));
                gens.push_back(std::move(x));
            }
        }

        std::vector<ModuleRep<F>> parts;
        std::size_t off = 0;
        for (int v : st.summand_vertices) {
            st.gen_offsets.push_back(off);
            parts.push_back(projective_module(algp, v));
            off += parts.back().dim;
        }
        st.proj = direct_sum(algp, parts);

        // cover map into the current syzygy's coordinates
        Matrix<F> cover(f, current_.dim, st.proj.dim);
        for (std::size_t s = 0; s < st.summand_vertices.size(); ++s) {
            auto idx = projective_basis_indices(a, st.summand_vertices[s]);
            for (std::size_t c = 0; c < idx.size(); ++c)
                cover.set_column(st.gen_offsets[s] + c, current_.act[idx[c]].apply(gens[s]));
        }

        // differential into the previous stage's coordinates
        if (stages_.empty()) {
            st.d = cover;
        } else {
            // current_ sits inside the previous projective via prev_embed_
            Matrix<F> embed = prev_embed_;
            st.d = embed * cover;
        }

        // next syzygy = kernel of the cover
        auto ker = SpanBasis<F>::from_columns(kernel_basis(cover));
        ModuleRep<F> syz = submodule(st.proj, ker);

        // embedding of the new syzygy into the new projective
        prev_embed_ = Matrix<F>(f, st.proj.dim, syz.dim);
        for (std::size_t i = 0; i < ker.dim(); ++i)
            for (std::size_t j = 0; j < st.proj.dim; ++j)
                prev_embed_.at(j, i) = ker.basis_rows().at(i, j);

        stages_.push_back(std::move(st));
        current_ = std::move(syz);
        if (current_.dim == 0) {
            finished_ = true;
            return;
        }
        if (detect_periodicity_ && !periodic_) {
            for (const auto& old : syzygy_history_)
                if (modules_isomorphic(old, current_)) {
                    periodic_ = true;
                    return;
                }
            syzygy_history_.push_back(current_);
        }
    }

    ModuleRep<F> module_;
    bool detect_periodicity_;
    std::vector<Stage> stages_;
    ModuleRep<F> current_;          // syzygy after the last stage
    Matrix<F> prev_embed_;          // current syzygy -> last stage's projective
    std::vector<ModuleRep<F>> syzygy_history_;
    bool finished_ = false;
    bool periodic_ = false;
};

// ---------------------------------------------------------------------------
// ext and tor dimensions from a resolution

namespace detail {

/// Coordinates on Hom(P_j, N): one block e_v N per summand, with a fixed
/// reduced basis of each e_v N.
template <class F>
struct VertexSlices {
    std::vector<SpanBasis<F>> slice;  // per vertex: basis of e_v N (resp. N e_v)

    static VertexSlices left_slices(const ModuleRep<F>& n)
    {
        VertexSlices s;
        for (std::size_t v = 0; v < n.alg->n_vertices(); ++v)
            s.slice.push_back(
                SpanBasis<F>::from_columns(n.act[n.alg->vertex_idempotents[v]]));
        return s;
    }

    std::size_t dim(int v) const { return slice[v].dim(); }

    std::vector<typename F::Elem> basis_vec(int v, std::size_t r, std::size_t ambient) const
    {
        std::vector<typename F::Elem> x(ambient);
        for (std::size_t j = 0; j < ambient; ++j)
            x[j] = slice[v].basis_rows().at(r, j);
        return x;
    }

    /// Coordinates of a vector known to lie in e_v N (pivot read-off).
    std::vector<typename F::Elem> coords(int v, const std::vector<typename F::Elem>& x) const
    {
        std::vector<typename F::Elem> c(slice[v].dim());
        for (std::size_t k = 0; k < slice[v].dim(); ++k)
            c[k] = x[slice[v].pivots()[k]];
        return c;
    }
};

}  // namespace detail

/// dim Ext^j(M, N) for j = 0..maxdeg, from the minimal resolution of M.
template <class F>
std::vector<std::size_t> ext_dims(MinimalResolution<F>& res, const ModuleRep<F>& n,
                                  std::size_t maxdeg)
{
    const auto& a = *res.module().alg;
    const F& f = a.field;
    if (n.alg.get() != res.module().alg.get())
        throw std::invalid_argument("ext_dims: modules over different algebras");
    res.extend_to(maxdeg + 2);
    auto slices = detail::VertexSlices<F>::left_slices(n);

    const auto& stages = res.stages();
    auto hom_dim = [&](std::size_t j) -> std::size_t {
        if (j >= stages.size())
            return 0;
        std::size_t d = 0;
        for (int v : stages[j].summand_vertices)
            d += slices.dim(v);
        return d;
    };

    // D_j : Hom(P_j, N) -> Hom(P_{j+1}, N), precomposition with d_{j+1}
    auto hom_diff = [&](std::size_t j) -> Matrix<F> {
        std::size_t rows = hom_dim(j + 1), cols = hom_dim(j);
        Matrix<F> d(f, rows, cols);
        if (rows == 0 || cols == 0 || j + 1 >= stages.size())
            return d;
        const auto& sj = stages[j];
        const auto& sj1 = stages[j + 1];

        // input coordinate (s, r): phi sends the generator of summand s to the
        // r-th basis vector of e_{v_s} N, and all other generators to zero.
        std::size_t col = 0;
        for (std::size_t s = 0; s < sj.summand_vertices.size(); ++s) {
            int v = sj.summand_vertices[s];
            auto idx = projective_basis_indices(a, v);
            for (std::size_t r = 0; r < slices.dim(v); ++r, ++col) {
                auto y = slices.basis_vec(v, r, n.dim);
                // evaluate phi on d(g_t) for every generator t of P_{j+1}
                std::size_t rowoff = 0;
                for (std::size_t t = 0; t < sj1.summand_vertices.size(); ++t) {
                    int w = sj1.summand_vertices[t];
                    auto widx = projective_basis_indices(a, w);
                    std::size_t gencol = 0;
                    for (std::size_t c = 0; c < widx.size(); ++c)
                        if (widx[c] == a.vertex_idempotents[w])
                            gencol = sj1.gen_offsets[t] + c;
                    std::vector<typename F::Elem> z(n.dim, f.zero());
                    for (std::size_t c = 0; c < idx.size(); ++c) {
                        const auto& coeff = sj1.d.at(sj.gen_offsets[s] + c, gencol);
                        if (f.is_zero(coeff))
                            continue;
                        auto img = n.act[idx[c]].apply(y);
                        for (std::size_t k = 0; k < n.dim; ++k)
                            z[k] = f.add(z[k], f.mul(coeff, img[k]));
                    }
                    auto zc = slices.coords(w, z);
                    for (std::size_t k = 0; k < zc.size(); ++k)
                        d.at(rowoff + k, col) = zc[k];
                    rowoff += slices.dim(w);
                }
            }
        }
        return d;
    };

    std::vector<std::size_t> out;
    std::size_t prev_rank = 0;
    for (std::size_t j = 0; j <= maxdeg; ++j) {
        std::size_t hd = hom_dim(j);
        std::size_t r = hd == 0 ? 0 : rank(hom_diff(j));
        out.push_back(hd - r - prev_rank);
        prev_rank = r;
    }
    return out;
}

/// dim Tor_j(X, M) for j = 0..maxdeg: X a right module over the base algebra,
/// given as a left module over the opposite algebra; M resolved minimally.
template <class F>
std::vector<std::size_t> tor_dims(MinimalResolution<F>& res, const ModuleRep<F>& x_over_op,
                                  std::size_t maxdeg)
{
    const auto& a = *res.module().alg;
    const F& f = a.field;
    res.extend_to(maxdeg + 2);
    // X e_v = image of the right action of e_v (same vertex indexing)
    auto slices = detail::VertexSlices<F>::left_slices(x_over_op);

    const auto& stages = res.stages();
    auto chain_dim = [&](std::size_t j) -> std::size_t {
        if (j >= stages.size())
            return 0;
        std::size_t d = 0;
        for (int v : stages[j].summand_vertices)
            d += slices.dim(v);
        return d;
    };

    // boundary X (x) P_{j+1} -> X (x) P_j induced by d_{j+1}:
    // x (x) g_t |-> sum coeff_(s,c) (x . b_c) (x) g_s
    auto boundary = [&](std::size_t j) -> Matrix<F> {
        std::size_t rows = chain_dim(j), cols = chain_dim(j + 1);
        Matrix<F> d(f, rows, cols);
        if (rows == 0 || cols == 0 || j + 1 >= stages.size())
            return d;
        const auto& sj = stages[j];
        const auto& sj1 = stages[j + 1];
        std::size_t col = 0;
        for (std::size_t t = 0; t < sj1.summand_vertices.size(); ++t) {
            int w = sj1.summand_vertices[t];
            auto widx = projective_basis_indices(a, w);
            std::size_t gencol = 0;
            for (std::size_t c = 0; c < widx.size(); ++c)
                if (widx[c] == a.vertex_idempotents[w])
                    gencol = sj1.gen_offsets[t] + c;
            for (std::size_t r = 0; r < slices.dim(w); ++r, ++col) {
                auto xv = slices.basis_vec(w, r, x_over_op.dim);
                std::size_t rowoff = 0;
                for (std::size_t s = 0; s < sj.summand_vertices.size(); ++s) {
                    int v = sj.summand_vertices[s];
                    auto idx = projective_basis_indices(a, v);
                    std::vector<typename F::Elem> z(x_over_op.dim, f.zero());
                    for (std::size_t c = 0; c < idx.size(); ++c) {
                        const auto& coeff = sj1.d.at(sj.gen_offsets[s] + c, gencol);
                        if (f.is_zero(coeff))
                            continue;
                        auto img = x_over_op.act[idx[c]].apply(xv);  // x . b
                        for (std::size_t k = 0; k < x_over_op.dim; ++k)
                            z[k] = f.add(z[k], f.mul(coeff, img[k]));
                    }
                    auto zc = slices.coords(v, z);
                    for (std::size_t k = 0; k < zc.size(); ++k)
                        d.at(rowoff + k, col) = zc[k];
                    rowoff += slices.dim(v);
                }
            }
        }
        return d;
    };

    std::vector<std::size_t> out;
    Matrix<F> next = boundary(0);
    std::size_t rank_in = rank(next);  // rank of boundary into degree 0
    // Tor_0 = chain_0 - rank(d_1)
    out.push_back(chain_dim(0) - rank_in);
    for (std::size_t j = 1; j <= maxdeg; ++j) {
        Matrix<F> bj1 = boundary(j);
        std::size_t r1 = rank(bj1);  // rank of d_{j+1} into degree j
        out.push_back(chain_dim(j) - rank_in - r1);
        rank_in = r1;
    }
    return out;
}

// ---------------------------------------------------------------------------
// derived dimension invariants

template <class F>
DimBound pd_dim(AlgebraPtr<F> alg, const ModuleRep<F>& m, std::size_t cutoff,
                bool detect_periodicity = true)
{
    (void)alg;
    MinimalResolution<F> r(m, detect_periodicity);
    return r.pd(cutoff);
}

/// id over A computed as pd of the dual module over A^op.
template <class F>
DimBound id_dim(const ModuleRep<F>& m, AlgebraPtr<F> op, std::size_t cutoff,
                bool detect_periodicity = true)
{
    MinimalResolution<F> r(dual_module(m, op), detect_periodicity);
    return r.pd(cutoff);
}

/// Global dimension: max over pd of the simples.
template <class F>
DimBound global_dimension(AlgebraPtr<F> alg, std::size_t cutoff)
{
    DimBound g = DimBound::make_finite(0);
    for (std::size_t v = 0; v < alg->n_vertices(); ++v) {
        MinimalResolution<F> r(simple_module(alg, static_cast<int>(v)));
        g = dim_max(g, r.pd(cutoff));
    }
    return g;
}

/// spli = sup of pd over the injectives; silp = sup of id over the projectives.
template <class F>
DimBound spli_dim(AlgebraPtr<F> alg, std::size_t cutoff)
{
    DimBound g = DimBound::make_finite(0);
    for (std::size_t v = 0; v < alg->n_vertices(); ++v) {
        MinimalResolution<F> r(injective_module(alg, static_cast<int>(v)));
        g = dim_max(g, r.pd(cutoff));
    }
    return g;
}

template <class F>
DimBound silp_dim(AlgebraPtr<F> alg, AlgebraPtr<F> op, std::size_t cutoff)
{
    DimBound g = DimBound::make_finite(0);
    for (std::size_t v = 0; v < alg->n_vertices(); ++v)
        g = dim_max(g, id_dim(projective_module(alg, static_cast<int>(v)), op, cutoff));
    return g;
}

struct GorensteinReport {
    DimBound left_self_injective_dim;   // id of the left regular module
    DimBound right_self_injective_dim;  // id of the right regular module
    Tri status;                         // Gorenstein iff both finite
};

template <class F>
GorensteinReport gorenstein_report(AlgebraPtr<F> alg, AlgebraPtr<F> op, std::size_t cutoff)
{
    ModuleRep<F> left_reg;
    {
        std::vector<ModuleRep<F>> parts;
        for (std::size_t v = 0; v < alg->n_vertices(); ++v)
            parts.push_back(projective_module(alg, static_cast<int>(v)));
        left_reg = direct_sum(alg, parts);
    }
    ModuleRep<F> right_reg;
    {
        std::vector<ModuleRep<F>> parts;
        for (std::size_t v = 0; v < op->n_vertices(); ++v)
            parts.push_back(projective_module(op, static_cast<int>(v)));
        right_reg = direct_sum(op, parts);
    }
    GorensteinReport g;
    g.left_self_injective_dim = id_dim(left_reg, op, cutoff);
    g.right_self_injective_dim = id_dim(right_reg, alg, cutoff);
    g.status = tri_and(g.left_self_injective_dim.as_condition(),
                       g.right_self_injective_dim.as_condition());
    return g;
}

}  // namespace cornerhom
