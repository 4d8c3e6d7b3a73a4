#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "cornerhom/matrix.hpp"

namespace cornerhom {

enum class Provenance { quiver, corner, tensor, quotient, triangular, opposite };

inline const char* provenance_name(Provenance p)
{
    switch (p) {
        case Provenance::quiver: return "quiver";
        case Provenance::corner: return "corner";
        case Provenance::tensor: return "tensor";
        case Provenance::quotient: return "quotient";
        case Provenance::triangular: return "triangular";
        case Provenance::opposite: return "opposite";
    }
    return "?";
}

/// A finite-dimensional split basic algebra given by structure constants.
///
/// The basis is vertex-bigraded: every basis element b satisfies
/// e_{tgt(b)} * b * e_{src(b)} = b (paths act right-to-left, so a basis
/// element "from u to v" maps the u-component of a module into the
/// v-component). The radical is spanned by a subset of the basis; it is
/// carried constructively by every construction rather than recomputed.
template <class F>
struct Algebra {
    using Elem = typename F::Elem;
    using SparseRow = std::vector<std::pair<int, Elem>>;

    F field;
    std::size_t dim = 0;
    std::vector<std::string> basis_labels;
    std::vector<SparseRow> prod;  // prod[i*dim+j] = coords of b_i * b_j
    std::vector<int> vertex_idempotents;  // basis index of e_v per vertex
    std::vector<std::string> vertex_names;
    std::vector<int> radical_basis;  // basis indices spanning J
    std::vector<int> src, tgt;       // vertex index per basis element
    Provenance provenance = Provenance::quiver;

    std::size_t n_vertices() const { return vertex_idempotents.size(); }

    const SparseRow& product(int i, int j) const { return prod[i * dim + j]; }

    std::vector<Elem> mult(const std::vector<Elem>& x, const std::vector<Elem>& y) const
    {
        std::vector<Elem> r(dim, field.zero());
        for (std::size_t i = 0; i < dim; ++i) {
            if (field.is_zero(x[i]))
                continue;
            for (std::size_t j = 0; j < dim; ++j) {
                if (field.is_zero(y[j]))
                    continue;
                Elem c = field.mul(x[i], y[j]);
                for (const auto& [k, v] : product(i, j))
                    r[k] = field.add(r[k], field.mul(c, v));
            }
        }
        return r;
    }

    std::vector<Elem> basis_vector(int i) const
    {
        std::vector<Elem> v(dim, field.zero());
        v[i] = field.one();
        return v;
    }

    std::vector<Elem> identity_vector() const
    {
        std::vector<Elem> v(dim, field.zero());
        for (int e : vertex_idempotents)
            v[e] = field.one();
        return v;
    }

    /// Matrix of left multiplication by basis element i.
    Matrix<F> left_mult_matrix(int i) const
    {
        Matrix<F> m(field, dim, dim);
        for (std::size_t j = 0; j < dim; ++j)
            for (const auto& [k, v] : product(i, j))
                m.at(k, j) = v;
        return m;
    }

    /// Matrix of right multiplication by basis element i.
    Matrix<F> right_mult_matrix(int i) const
    {
        Matrix<F> m(field, dim, dim);
        for (std::size_t j = 0; j < dim; ++j)
            for (const auto& [k, v] : product(j, i))
                m.at(k, j) = v;
        return m;
    }

    bool in_radical(int basis_index) const
    {
        return std::find(radical_basis.begin(), radical_basis.end(), basis_index) !=
               radical_basis.end();
    }
};

template <class F>
using AlgebraPtr = std::shared_ptr<const Algebra<F>>;

/// An idempotent a = sum of the vertex idempotents over a vertex subset.
struct Idempotent {
    std::vector<int> vertex_set;  // sorted vertex indices

    bool contains(int v) const
    {
        return std::binary_search(vertex_set.begin(), vertex_set.end(), v);
    }
};

template <class F>
std::vector<typename F::Elem> idempotent_vector(const Algebra<F>& a, const Idempotent& e)
{
    std::vector<typename F::Elem> v(a.dim, a.field.zero());
    for (int vx : e.vertex_set)
        v[a.vertex_idempotents[vx]] = a.field.one();
    return v;
}

// ---------------------------------------------------------------------------
// verify_axioms

/// Diagnostic check of all Algebra invariants; empty report means valid.
template <class F>
std::vector<std::string> verify_axioms(const Algebra<F>& a)
{
    std::vector<std::string> report;
    const F& f = a.field;
    const std::size_t n = a.dim;

    if (a.basis_labels.size() != n || a.src.size() != n || a.tgt.size() != n ||
        a.prod.size() != n * n) {
        report.push_back("structural sizes inconsistent with dim");
        return report;
    }

    // associativity on all basis triples
    for (std::size_t i = 0; i < n && report.size() < 8; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            // (b_i b_j) as dense vector
            std::vector<typename F::Elem> ij(n, f.zero());
            for (const auto& [k, v] : a.product(i, j))
                ij[k] = v;
            for (std::size_t k = 0; k < n; ++k) {
                std::vector<typename F::Elem> lhs(n, f.zero());
                for (std::size_t m = 0; m < n; ++m) {
                    if (f.is_zero(ij[m]))
                        continue;
                    for (const auto& [t, v] : a.product(m, k))
                        lhs[t] = f.add(lhs[t], f.mul(ij[m], v));
                }
                std::vector<typename F::Elem> jk(n, f.zero());
                for (const auto& [m, v] : a.product(j, k))
                    jk[m] = v;
                std::vector<typename F::Elem> rhs(n, f.zero());
                for (std::size_t m = 0; m < n; ++m) {
                    if (f.is_zero(jk[m]))
                        continue;
                    for (const auto& [t, v] : a.product(i, m))
                        rhs[t] = f.add(rhs[t], f.mul(jk[m], v));
                }
                if (lhs != rhs) {
                    report.push_back("associativity fails on basis triple (" +
                                     a.basis_labels[i] + "," + a.basis_labels[j] + "," +
                                     a.basis_labels[k] + ")");
                    break;
                }
            }
        }

    // identity and orthogonal idempotents
    auto one = a.identity_vector();
    for (std::size_t i = 0; i < n; ++i) {
        if (a.mult(one, a.basis_vector(i)) != a.basis_vector(i) ||
            a.mult(a.basis_vector(i), one) != a.basis_vector(i)) {
            report.push_back("sum of vertex idempotents is not a two-sided identity (on " +
                             a.basis_labels[i] + ")");
            break;
        }
    }
    for (std::size_t u = 0; u < a.n_vertices(); ++u)
        for (std::size_t v = 0; v < a.n_vertices(); ++v) {
            auto pr = a.mult(a.basis_vector(a.vertex_idempotents[u]),
                             a.basis_vector(a.vertex_idempotents[v]));
            auto want = u == v ? a.basis_vector(a.vertex_idempotents[u])
                               : std::vector<typename F::Elem>(n, f.zero());
            if (pr != want) {
                report.push_back("vertex idempotents not orthogonal idempotents");
                u = a.n_vertices();
                break;
            }
        }

    // bigrading: e_tgt(b) * b * e_src(b) = b
    for (std::size_t i = 0; i < n; ++i) {
        auto x = a.mult(a.basis_vector(a.vertex_idempotents[a.tgt[i]]), a.basis_vector(i));
        x = a.mult(x, a.basis_vector(a.vertex_idempotents[a.src[i]]));
        if (x != a.basis_vector(i)) {
            report.push_back("basis element " + a.basis_labels[i] + " is not vertex-bigraded");
            break;
        }
    }

    // radical: two-sided ideal, nilpotent
    {
        std::vector<std::vector<typename F::Elem>> jvecs;
        for (int r : a.radical_basis)
            jvecs.push_back(a.basis_vector(r));
        auto jspan = SpanBasis<F>::from_vectors(f, n, jvecs);
        bool ideal_ok = true;
        for (int r : a.radical_basis)
            for (std::size_t i = 0; i < n && ideal_ok; ++i) {
                if (!jspan.contains(a.mult(a.basis_vector(i), a.basis_vector(r))) ||
                    !jspan.contains(a.mult(a.basis_vector(r), a.basis_vector(i))))
                    ideal_ok = false;
            }
        if (!ideal_ok)
            report.push_back("radical_basis does not span a two-sided ideal");

        // nilpotence: powers of J must reach zero within dim steps
        std::vector<std::vector<typename F::Elem>> power = jvecs;
        bool nilpotent = power.empty();
        for (std::size_t step = 0; step < n && !nilpotent; ++step) {
            std::vector<std::vector<typename F::Elem>> next;
            for (const auto& x : power)
                for (const auto& y : jvecs)
                    next.push_back(a.mult(x, y));
            auto span = SpanBasis<F>::from_vectors(f, n, next);
            if (span.dim() == 0) {
                nilpotent = true;
                break;
            }
            // keep a reduced spanning set to bound growth
            power.clear();
            for (std::size_t i = 0; i < span.dim(); ++i) {
                std::vector<typename F::Elem> row(n);
                for (std::size_t j = 0; j < n; ++j)
                    row[j] = span.basis_rows().at(i, j);
                power.push_back(std::move(row));
            }
        }
        if (!nilpotent)
            report.push_back("radical is not nilpotent");

        // split basic: dim(A/J) equals number of vertices
        if (a.radical_basis.size() + a.n_vertices() != n)
            report.push_back("not split basic: dim A != dim J + #vertices");
        for (int r : a.radical_basis)
            for (int e : a.vertex_idempotents)
                if (r == e)
                    report.push_back("vertex idempotent listed in radical");
    }

    return report;
}

// ---------------------------------------------------------------------------
// opposite

template <class F>
Algebra<F> opposite(const Algebra<F>& a)
{
    Algebra<F> op = a;
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j)
            op.prod[i * a.dim + j] = a.prod[j * a.dim + i];
    std::swap(op.src, op.tgt);
    op.provenance = Provenance::opposite;
    return op;
}

// ---------------------------------------------------------------------------
// tensor product

/// Tensor product algebra A ⊗_k B (both split basic over the same field).
/// Basis = pairs (b_i, b'_j) flattened as i * dim(B) + j.
template <class F>
Algebra<F> tensor_algebra(const Algebra<F>& a, const Algebra<F>& b)
{
    if (!(a.field == b.field))
        throw std::invalid_argument("tensor_algebra: field mismatch");
    const F& f = a.field;
    Algebra<F> t;
    t.field = f;
    t.dim = a.dim * b.dim;
    t.provenance = Provenance::tensor;
    const std::size_t db = b.dim;

    t.basis_labels.resize(t.dim);
    t.src.resize(t.dim);
    t.tgt.resize(t.dim);
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < db; ++j) {
            t.basis_labels[i * db + j] = a.basis_labels[i] + "(x)" + b.basis_labels[j];
            t.src[i * db + j] = a.src[i] * static_cast<int>(b.n_vertices()) + b.src[j];
            t.tgt[i * db + j] = a.tgt[i] * static_cast<int>(b.n_vertices()) + b.tgt[j];
        }
    for (std::size_t u = 0; u < a.n_vertices(); ++u)
        for (std::size_t v = 0; v < b.n_vertices(); ++v) {
            t.vertex_idempotents.push_back(a.vertex_idempotents[u] * static_cast<int>(db) +
                                           b.vertex_idempotents[v]);
            t.vertex_names.push_back(a.vertex_names[u] + "|" + b.vertex_names[v]);
        }
    // radical = J(A) ⊗ B + A ⊗ J(B): all pairs with at least one radical factor
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < db; ++j)
            if (a.in_radical(static_cast<int>(i)) || b.in_radical(static_cast<int>(j)))
                t.radical_basis.push_back(static_cast<int>(i * db + j));

    t.prod.resize(t.dim * t.dim);
    for (std::size_t i1 = 0; i1 < a.dim; ++i1)
        for (std::size_t j1 = 0; j1 < db; ++j1)
            for (std::size_t i2 = 0; i2 < a.dim; ++i2)
                for (std::size_t j2 = 0; j2 < db; ++j2) {
                    auto& row = t.prod[(i1 * db + j1) * t.dim + (i2 * db + j2)];
                    for (const auto& [ka, va] : a.product(static_cast<int>(i1), static_cast<int>(i2)))
                        for (const auto& [kb, vb] : b.product(static_cast<int>(j1), static_cast<int>(j2)))
                            row.emplace_back(ka * static_cast<int>(db) + kb, f.mul(va, vb));
                }
    return t;
}

// ---------------------------------------------------------------------------
// corner algebra

template <class F>
struct CornerResult {
    Algebra<F> algebra;
    std::vector<int> inclusion;  // corner basis index -> ambient basis index
};

/// Corner algebra aAa: the bigraded basis makes this a subset selection.
template <class F>
CornerResult<F> corner(const Algebra<F>& a, const Idempotent& e)
{
    if (e.vertex_set.empty())
        throw std::invalid_argument("corner: empty vertex set");
    std::vector<int> incl;
    std::vector<int> back(a.dim, -1);
    for (std::size_t i = 0; i < a.dim; ++i)
        if (e.contains(a.src[i]) && e.contains(a.tgt[i])) {
            back[i] = static_cast<int>(incl.size());
            incl.push_back(static_cast<int>(i));
        }
    Algebra<F> c;
    c.field = a.field;
    c.dim = incl.size();
    c.provenance = Provenance::corner;
    std::vector<int> vmap(a.n_vertices(), -1);
    for (int v : e.vertex_set) {
        vmap[v] = static_cast<int>(c.vertex_idempotents.size());
        c.vertex_idempotents.push_back(back[a.vertex_idempotents[v]]);
        c.vertex_names.push_back(a.vertex_names[v]);
    }
    for (std::size_t ci = 0; ci < incl.size(); ++ci) {
        c.basis_labels.push_back(a.basis_labels[incl[ci]]);
        c.src.push_back(vmap[a.src[incl[ci]]]);
        c.tgt.push_back(vmap[a.tgt[incl[ci]]]);
        if (a.in_radical(incl[ci]))
            c.radical_basis.push_back(static_cast<int>(ci));
    }
    c.prod.resize(c.dim * c.dim);
    for (std::size_t ci = 0; ci < incl.size(); ++ci)
        for (std::size_t cj = 0; cj < incl.size(); ++cj) {
            auto& row = c.prod[ci * c.dim + cj];
            for (const auto& [k, v] : a.product(incl[ci], incl[cj])) {
                // bigrading guarantees every term stays inside the corner
                row.emplace_back(back[k], v);
            }
        }
    return CornerResult<F>{std::move(c), std::move(incl)};
}

// ---------------------------------------------------------------------------
// two-sided ideal <a> and quotient algebra

/// Basis of the two-sided ideal generated by the idempotent, as a SpanBasis
/// over the algebra's coordinate space.
template <class F>
SpanBasis<F> two_sided_ideal(const Algebra<F>& a, const Idempotent& e)
{
    auto av = idempotent_vector(a, e);
    std::vector<std::vector<typename F::Elem>> gens;
    for (std::size_t i = 0; i < a.dim; ++i) {
        auto bi_a = a.mult(a.basis_vector(static_cast<int>(i)), av);
        for (std::size_t j = 0; j < a.dim; ++j)
            gens.push_back(a.mult(bi_a, a.basis_vector(static_cast<int>(j))));
    }
    return SpanBasis<F>::from_vectors(a.field, a.dim, gens);
}

/// Quotient algebra A / I for a two-sided ideal I. The quotient basis is the
/// set of non-pivot original basis elements; reduction happens blockwise per
/// (src, tgt) pair so the bigrading survives.
template <class F>
Algebra<F> quotient_algebra(const Algebra<F>& a, const SpanBasis<F>& ideal)
{
    const F& f = a.field;
    // closure check: I must be two-sided
    for (std::size_t i = 0; i < ideal.dim(); ++i) {
        std::vector<typename F::Elem> x(a.dim);
        for (std::size_t j = 0; j < a.dim; ++j)
            x[j] = ideal.basis_rows().at(i, j);
        for (std::size_t b = 0; b < a.dim; ++b) {
            if (!ideal.contains(a.mult(a.basis_vector(static_cast<int>(b)), x)) ||
                !ideal.contains(a.mult(x, a.basis_vector(static_cast<int>(b)))))
                throw std::invalid_argument("quotient_algebra: ideal is not two-sided");
        }
    }
    std::vector<bool> pivot(a.dim, false);
    for (auto p : ideal.pivots())
        pivot[p] = true;

    Algebra<F> q;
    q.field = f;
    q.provenance = Provenance::quotient;
    std::vector<int> keep;  // quotient basis -> ambient basis index
    std::vector<int> back(a.dim, -1);
    for (std::size_t i = 0; i < a.dim; ++i)
        if (!pivot[i]) {
            back[i] = static_cast<int>(keep.size());
            keep.push_back(static_cast<int>(i));
        }
    q.dim = keep.size();

    // surviving vertices: those whose idempotent coset is nonzero
    std::vector<int> vmap(a.n_vertices(), -1);
    for (std::size_t v = 0; v < a.n_vertices(); ++v) {
        int ei = a.vertex_idempotents[v];
        if (!pivot[ei] && !ideal.contains(a.basis_vector(ei))) {
            vmap[v] = static_cast<int>(q.vertex_idempotents.size());
            q.vertex_idempotents.push_back(back[ei]);
            q.vertex_names.push_back(a.vertex_names[v]);
        }
    }
    for (int k : keep) {
        q.basis_labels.push_back(a.basis_labels[k]);
        if (vmap[a.src[k]] < 0 || vmap[a.tgt[k]] < 0)
            throw std::logic_error("quotient_algebra: surviving basis element at removed vertex");
        q.src.push_back(vmap[a.src[k]]);
        q.tgt.push_back(vmap[a.tgt[k]]);
    }

    // structure constants: multiply representatives, reduce modulo I
    q.prod.resize(q.dim * q.dim);
    for (std::size_t i = 0; i < q.dim; ++i)
        for (std::size_t j = 0; j < q.dim; ++j) {
            auto pr = ideal.residue(a.mult(a.basis_vector(keep[i]), a.basis_vector(keep[j])));
            auto& row = q.prod[i * q.dim + j];
            for (std::size_t k = 0; k < a.dim; ++k)
                if (!f.is_zero(pr[k])) {
                    if (back[k] < 0)
                        throw std::logic_error("quotient_algebra: residue hits pivot coordinate");
                    row.emplace_back(back[k], pr[k]);
                }
        }

    // radical = image of J: kept basis elements lying in J + I
    {
        std::vector<std::vector<typename F::Elem>> jvecs;
        for (int r : a.radical_basis)
            jvecs.push_back(a.basis_vector(r));
        for (std::size_t i = 0; i < ideal.dim(); ++i) {
            std::vector<typename F::Elem> row(a.dim);
            for (std::size_t j = 0; j < a.dim; ++j)
                row[j] = ideal.basis_rows().at(i, j);
            jvecs.push_back(std::move(row));
        }
        auto jplusi = SpanBasis<F>::from_vectors(f, a.dim, jvecs);
        for (std::size_t i = 0; i < q.dim; ++i)
            if (jplusi.contains(a.basis_vector(keep[i])))
                q.radical_basis.push_back(static_cast<int>(i));
    }
    return q;
}

// ---------------------------------------------------------------------------
// triangular matrix algebra

/// Bimodule data for the triangular construction: M is a Gamma-Sigma-bimodule
/// given by a left action matrix per Gamma basis element and a right action
/// matrix per Sigma basis element, all acting on column vectors of length dim.
template <class F>
struct BimoduleData {
    std::size_t dim = 0;
    std::vector<Matrix<F>> left;   // per Gamma basis element
    std::vector<Matrix<F>> right;  // per Sigma basis element
};

/// Triangular matrix algebra (Sigma 0; M Gamma) on the space Sigma ⊕ M ⊕ Gamma
/// with (s,m,g)(s',m',g') = (ss', m s' + g m', gg'). The bimodule basis is
/// regraded internally so the result is vertex-bigraded.
template <class F>
Algebra<F> triangular(const Algebra<F>& sigma, const Algebra<F>& gamma, const BimoduleData<F>& m)
{
    if (!(sigma.field == gamma.field))
        throw std::invalid_argument("triangular: field mismatch");
    const F& f = sigma.field;
    if (m.left.size() != gamma.dim || m.right.size() != sigma.dim)
        throw std::invalid_argument("triangular: bimodule action count mismatch");

    // bimodule axioms
    auto check_rep = [&](const std::vector<Matrix<F>>& act, const Algebra<F>& alg, bool left_side) {
        for (std::size_t i = 0; i < alg.dim; ++i)
            for (std::size_t j = 0; j < alg.dim; ++j) {
                Matrix<F> got = left_side ? act[i] * act[j] : act[j] * act[i];
                Matrix<F> want(f, m.dim, m.dim);
                for (const auto& [k, v] : alg.product(static_cast<int>(i), static_cast<int>(j)))
                    want = want + act[k].scaled(v);
                if (!(got == want))
                    throw std::invalid_argument("triangular: bimodule action violates structure constants");
            }
        Matrix<F> id(f, m.dim, m.dim);
        for (int e : alg.vertex_idempotents)
            id = id + act[e];
        if (!(id == Matrix<F>::identity(f, m.dim)))
            throw std::invalid_argument("triangular: bimodule identity does not act as identity");
    };
    check_rep(m.left, gamma, true);
    check_rep(m.right, sigma, false);
    for (std::size_t i = 0; i < gamma.dim; ++i)
        for (std::size_t j = 0; j < sigma.dim; ++j)
            if (!(m.left[i] * m.right[j] == m.right[j] * m.left[i]))
                throw std::invalid_argument("triangular: left and right actions do not commute");

    // regrade M: pick a basis of each block e_v M e_u (v in Gamma, u in Sigma)
    struct GradedVec {
        std::vector<typename F::Elem> vec;
        int gv, su;
    };
    std::vector<GradedVec> mbasis;
    for (std::size_t gv = 0; gv < gamma.n_vertices(); ++gv)
        for (std::size_t su = 0; su < sigma.n_vertices(); ++su) {
            Matrix<F> projector =
                m.left[gamma.vertex_idempotents[gv]] * m.right[sigma.vertex_idempotents[su]];
            auto block = SpanBasis<F>::from_columns(projector);
            for (std::size_t i = 0; i < block.dim(); ++i) {
                std::vector<typename F::Elem> row(m.dim);
                for (std::size_t j = 0; j < m.dim; ++j)
                    row[j] = block.basis_rows().at(i, j);
                mbasis.push_back({std::move(row), static_cast<int>(gv), static_cast<int>(su)});
            }
        }
    if (mbasis.size() != m.dim)
        throw std::invalid_argument("triangular: bimodule does not decompose over the vertex idempotents");
    // coordinate map M -> graded basis coords
    Matrix<F> mb(f, m.dim, m.dim);
    for (std::size_t j = 0; j < m.dim; ++j)
        mb.set_column(j, mbasis[j].vec);
    auto coords_of = [&](const std::vector<typename F::Elem>& v) {
        auto x = solve(mb, v);
        if (!x)
            throw std::logic_error("triangular: graded basis not spanning");
        return *x;
    };

    Algebra<F> t;
    t.field = f;
    t.dim = sigma.dim + m.dim + gamma.dim;
    t.provenance = Provenance::triangular;
    const int soff = 0;
    const int moff = static_cast<int>(sigma.dim);
    const int goff = static_cast<int>(sigma.dim + m.dim);
    const int snv = static_cast<int>(sigma.n_vertices());

    for (std::size_t i = 0; i < sigma.dim; ++i) {
        t.basis_labels.push_back("S:" + sigma.basis_labels[i]);
        t.src.push_back(sigma.src[i]);
        t.tgt.push_back(sigma.tgt[i]);
    }
    for (std::size_t i = 0; i < m.dim; ++i) {
        t.basis_labels.push_back("M:" + std::to_string(i));
        t.src.push_back(mbasis[i].su);               // Sigma vertex
        t.tgt.push_back(snv + mbasis[i].gv);         // Gamma vertex
    }
    for (std::size_t i = 0; i < gamma.dim; ++i) {
        t.basis_labels.push_back("G:" + gamma.basis_labels[i]);
        t.src.push_back(snv + gamma.src[i]);
        t.tgt.push_back(snv + gamma.tgt[i]);
    }
    for (std::size_t v = 0; v < sigma.n_vertices(); ++v) {
        t.vertex_idempotents.push_back(soff + sigma.vertex_idempotents[v]);
        t.vertex_names.push_back("S:" + sigma.vertex_names[v]);
    }
    for (std::size_t v = 0; v < gamma.n_vertices(); ++v) {
        t.vertex_idempotents.push_back(goff + gamma.vertex_idempotents[v]);
        t.vertex_names.push_back("G:" + gamma.vertex_names[v]);
    }
    for (int r : sigma.radical_basis)
        t.radical_basis.push_back(soff + r);
    for (std::size_t i = 0; i < m.dim; ++i)
        t.radical_basis.push_back(moff + static_cast<int>(i));
    for (int r : gamma.radical_basis)
        t.radical_basis.push_back(goff + r);

    t.prod.assign(t.dim * t.dim, {});
    auto& P = t.prod;
    const std::size_t D = t.dim;
    // Sigma * Sigma
    for (std::size_t i = 0; i < sigma.dim; ++i)
        for (std::size_t j = 0; j < sigma.dim; ++j)
            for (const auto& [k, v] : sigma.product(static_cast<int>(i), static_cast<int>(j)))
                P[(soff + i) * D + (soff + j)].emplace_back(soff + k, v);
    // Gamma * Gamma
    for (std::size_t i = 0; i < gamma.dim; ++i)
        for (std::size_t j = 0; j < gamma.dim; ++j)
            for (const auto& [k, v] : gamma.product(static_cast<int>(i), static_cast<int>(j)))
                P[(goff + i) * D + (goff + j)].emplace_back(goff + k, v);
    // M * Sigma (right action) and Gamma * M (left action)
    for (std::size_t i = 0; i < m.dim; ++i)
        for (std::size_t j = 0; j < sigma.dim; ++j) {
            auto img = m.right[j].apply(mbasis[i].vec);
            auto c = coords_of(img);
            for (std::size_t k = 0; k < m.dim; ++k)
                if (!f.is_zero(c[k]))
                    P[(moff + i) * D + (soff + j)].emplace_back(moff + static_cast<int>(k), c[k]);
        }
    for (std::size_t i = 0; i < gamma.dim; ++i)
        for (std::size_t j = 0; j < m.dim; ++j) {
            auto img = m.left[i].apply(mbasis[j].vec);
            auto c = coords_of(img);
            for (std::size_t k = 0; k < m.dim; ++k)
                if (!f.is_zero(c[k]))
                    P[(goff + i) * D + (moff + j)].emplace_back(moff + static_cast<int>(k), c[k]);
        }
    // all other block products are zero
    return t;
}

// ---------------------------------------------------------------------------
// quiver skeleton of an algebra (pretty-printing aid)

struct QuiverSkeleton {
    std::vector<std::string> vertices;
    struct Arrow {
        std::string name;
        int src, tgt;
    };
    std::vector<Arrow> arrows;
    std::vector<std::size_t> relation_degrees;  // lengths of leading terms
    std::size_t maxlen = 0;
    std::string pretty;  // human-readable presentation summary
};

/// Recover the Gabriel quiver (arrows = basis of e_u (J/J^2) e_v) and relations
/// valid up to the given path length.
template <class F>
QuiverSkeleton quiver_of_algebra(const Algebra<F>& a, std::size_t maxlen)
{
    const F& f = a.field;
    QuiverSkeleton out;
    out.maxlen = maxlen;
    out.vertices = a.vertex_names;

    // J^2 span
    std::vector<std::vector<typename F::Elem>> j2;
    for (int r : a.radical_basis)
        for (int s : a.radical_basis)
            j2.push_back(a.mult(a.basis_vector(r), a.basis_vector(s)));
    auto j2span = SpanBasis<F>::from_vectors(f, a.dim, j2);

    // arrows: per (src u, tgt v) block of J/J^2, choose radical basis elements
    // independent modulo J^2
    struct ArrowRep {
        std::vector<typename F::Elem> vec;
        int src, tgt;
    };
    std::vector<ArrowRep> arrows;
    for (std::size_t u = 0; u < a.n_vertices(); ++u)
        for (std::size_t v = 0; v < a.n_vertices(); ++v) {
            std::vector<std::vector<typename F::Elem>> block = j2;
            std::vector<int> cands;
            for (int r : a.radical_basis)
                if (a.src[r] == static_cast<int>(u) && a.tgt[r] == static_cast<int>(v))
                    cands.push_back(r);
            auto cur = SpanBasis<F>::from_vectors(f, a.dim, block);
            std::size_t base = cur.dim();
            std::vector<std::vector<typename F::Elem>> acc = block;
            for (int r : cands) {
                acc.push_back(a.basis_vector(r));
                auto s = SpanBasis<F>::from_vectors(f, a.dim, acc);
                if (s.dim() > base) {
                    base = s.dim();
                    arrows.push_back({a.basis_vector(r), static_cast<int>(u), static_cast<int>(v)});
                }
            }
        }
    for (std::size_t i = 0; i < arrows.size(); ++i)
        out.arrows.push_back({"a" + std::to_string(i), arrows[i].src, arrows[i].tgt});

    // relations: kernel of the path-space surjection, per length
    // paths as (word of arrow indices, value, src, tgt)
    struct PathVal {
        std::vector<int> word;
        std::vector<typename F::Elem> value;
        int src, tgt;
    };
    std::vector<PathVal> prev;
    for (std::size_t v = 0; v < a.n_vertices(); ++v)
        prev.push_back({{}, a.basis_vector(a.vertex_idempotents[v]), static_cast<int>(v),
                        static_cast<int>(v)});
    std::vector<PathVal> all = prev;
    for (std::size_t len = 1; len <= maxlen; ++len) {
        std::vector<PathVal> next;
        for (const auto& p : prev)
            for (std::size_t ai = 0; ai < arrows.size(); ++ai)
                if (arrows[ai].src == p.tgt)
                    next.push_back({[&] {
                                        auto w = p.word;
                                        w.push_back(static_cast<int>(ai));
                                        return w;
                                    }(),
                                    a.mult(arrows[ai].vec, p.value), p.src, arrows[ai].tgt});
        all.insert(all.end(), next.begin(), next.end());
        prev = std::move(next);
        if (prev.empty())
            break;
    }
    // relation count: dim of kernel of span map over paths of length >= 2
    std::vector<std::vector<typename F::Elem>> imgs;
    std::vector<std::size_t> lens;
    for (const auto& p : all)
        if (p.word.size() >= 2) {
            imgs.push_back(p.value);
            lens.push_back(p.word.size());
        }
    if (!imgs.empty()) {
        Matrix<F> m = Matrix<F>::from_columns(f, a.dim, imgs);
        auto k = kernel_basis(m);
        for (std::size_t c = 0; c < k.cols(); ++c) {
            std::size_t deg = 0;
            for (std::size_t r = 0; r < k.rows(); ++r)
                if (!f.is_zero(k.at(r, c)))
                    deg = std::max(deg, lens[r]);
            out.relation_degrees.push_back(deg);
        }
    }

    // pretty print for the common single-loop case
    if (a.n_vertices() == 1 && out.arrows.size() == 1 && out.arrows[0].src == out.arrows[0].tgt) {
        // k[x]/<x^n> when dim = n and the loop is nilpotent of degree n
        out.pretty = "k[x]/x^" + std::to_string(a.dim);
    } else if (out.arrows.empty()) {
        out.pretty = a.n_vertices() == 1 ? "k" : "k^" + std::to_string(a.n_vertices());
    } else {
        out.pretty = std::to_string(a.n_vertices()) + " vertices, " +
                     std::to_string(out.arrows.size()) + " arrows, " +
                     std::to_string(out.relation_degrees.size()) + " relations (up to length " +
                     std::to_string(maxlen) + ")";
    }
    return out;
}

}  // namespace cornerhom
