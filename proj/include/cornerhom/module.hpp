#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "cornerhom/algebra.hpp"

namespace cornerhom {

/// A finite-dimensional left module, given by one action matrix per algebra
/// basis element (columns = module coordinates).
template <class F>
struct ModuleRep {
    using Elem = typename F::Elem;

    AlgebraPtr<F> alg;
    std::size_t dim = 0;
    std::vector<Matrix<F>> act;  // per algebra basis element

    static ModuleRep zero(AlgebraPtr<F> a)
    {
        ModuleRep m;
        m.alg = a;
        m.dim = 0;
        m.act.assign(a->dim, Matrix<F>(a->field, 0, 0));
        return m;
    }

    const F& field() const { return alg->field; }

    /// Action matrix of a dense algebra element.
    Matrix<F> action_of(const std::vector<Elem>& x) const
    {
        const F& f = field();
        Matrix<F> m(f, dim, dim);
        for (std::size_t i = 0; i < alg->dim; ++i)
            if (!f.is_zero(x[i]))
                m = m + act[i].scaled(x[i]);
        return m;
    }
};

/// Diagnostic check that the action matrices define a unital module.
template <class F>
std::vector<std::string> verify_module(const ModuleRep<F>& m)
{
    std::vector<std::string> report;
    const auto& a = *m.alg;
    const F& f = a.field;
    if (m.act.size() != a.dim) {
        report.push_back("action count does not match algebra dimension");
        return report;
    }
    for (const auto& mat : m.act)
        if (mat.rows() != m.dim || mat.cols() != m.dim) {
            report.push_back("action matrix has wrong shape");
            return report;
        }
    Matrix<F> id(f, m.dim, m.dim);
    for (int e : a.vertex_idempotents)
        id = id + m.act[e];
    if (!(id == Matrix<F>::identity(f, m.dim)))
        report.push_back("identity does not act as identity");
    for (std::size_t i = 0; i < a.dim && report.size() < 4; ++i)
        for (std::size_t j = 0; j < a.dim; ++j) {
            Matrix<F> want(f, m.dim, m.dim);
            for (const auto& [k, v] : a.product(static_cast<int>(i), static_cast<int>(j)))
                want = want + m.act[k].scaled(v);
            if (!(m.act[i] * m.act[j] == want)) {
                report.push_back("action violates structure constants on (" + a.basis_labels[i] +
                                 "," + a.basis_labels[j] + ")");
                break;
            }
        }
    return report;
}

// ---------------------------------------------------------------------------
// canonical modules

/// Simple module at a vertex: one-dimensional, radical acts by zero.
template <class F>
ModuleRep<F> simple_module(AlgebraPtr<F> a, int vertex)
{
    const F& f = a->field;
    ModuleRep<F> m;
    m.alg = a;
    m.dim = 1;
    m.act.assign(a->dim, Matrix<F>(f, 1, 1));
    m.act[a->vertex_idempotents[vertex]].at(0, 0) = f.one();
    return m;
}

/// Basis indices of the projective A e_v (elements with the given source).
template <class F>
std::vector<int> projective_basis_indices(const Algebra<F>& a, int vertex)
{
    std::vector<int> idx;
    for (std::size_t i = 0; i < a.dim; ++i)
        if (a.src[i] == vertex)
            idx.push_back(static_cast<int>(i));
    return idx;
}

/// Indecomposable projective A e_v as an explicit representation.
template <class F>
ModuleRep<F> projective_module(AlgebraPtr<F> a, int vertex)
{
    const F& f = a->field;
    auto idx = projective_basis_indices(*a, vertex);
    std::vector<int> back(a->dim, -1);
    for (std::size_t c = 0; c < idx.size(); ++c)
        back[idx[c]] = static_cast<int>(c);
    ModuleRep<F> m;
    m.alg = a;
    m.dim = idx.size();
    m.act.assign(a->dim, Matrix<F>(f, m.dim, m.dim));
    for (std::size_t i = 0; i < a->dim; ++i)
        for (std::size_t c = 0; c < idx.size(); ++c)
            for (const auto& [k, v] : a->product(static_cast<int>(i), idx[c])) {
                // source is preserved by left multiplication, so k stays inside
                m.act[i].at(back[k], c) = v;
            }
    return m;
}

/// Indecomposable injective D(e_v A): transpose of the right action on e_v A.
template <class F>
ModuleRep<F> injective_module(AlgebraPtr<F> a, int vertex)
{
    const F& f = a->field;
    std::vector<int> idx;
    for (std::size_t i = 0; i < a->dim; ++i)
        if (a->tgt[i] == vertex)
            idx.push_back(static_cast<int>(i));
    std::vector<int> back(a->dim, -1);
    for (std::size_t c = 0; c < idx.size(); ++c)
        back[idx[c]] = static_cast<int>(c);
    ModuleRep<F> m;
    m.alg = a;
    m.dim = idx.size();
    m.act.assign(a->dim, Matrix<F>(f, m.dim, m.dim));
    for (std::size_t i = 0; i < a->dim; ++i) {
        Matrix<F> rm(f, m.dim, m.dim);  // right multiplication by b_i on e_v A
        for (std::size_t c = 0; c < idx.size(); ++c)
            for (const auto& [k, v] : a->product(idx[c], static_cast<int>(i)))
                rm.at(back[k], c) = v;
        m.act[i] = rm.transpose();
    }
    return m;
}

template <class F>
ModuleRep<F> direct_sum(AlgebraPtr<F> a, const std::vector<ModuleRep<F>>& parts)
{
    const F& f = a->field;
    ModuleRep<F> m;
    m.alg = a;
    for (const auto& p : parts)
        m.dim += p.dim;
    m.act.assign(a->dim, Matrix<F>(f, m.dim, m.dim));
    for (std::size_t i = 0; i < a->dim; ++i) {
        std::size_t off = 0;
        for (const auto& p : parts) {
            for (std::size_t r = 0; r < p.dim; ++r)
                for (std::size_t c = 0; c < p.dim; ++c)
                    m.act[i].at(off + r, off + c) = p.act[i].at(r, c);
            off += p.dim;
        }
    }
    return m;
}

/// Dual module: a left module over the opposite algebra (same basis order).
template <class F>
ModuleRep<F> dual_module(const ModuleRep<F>& m, AlgebraPtr<F> op)
{
    ModuleRep<F> d;
    d.alg = op;
    d.dim = m.dim;
    d.act.reserve(m.act.size());
    for (const auto& mat : m.act)
        d.act.push_back(mat.transpose());
    return d;
}

// ---------------------------------------------------------------------------
// sub / quotient / radical / top

/// Restrict to an invariant subspace (throws if not invariant).
template <class F>
ModuleRep<F> submodule(const ModuleRep<F>& m, const SpanBasis<F>& u)
{
    const F& f = m.field();
    ModuleRep<F> s;
    s.alg = m.alg;
    s.dim = u.dim();
    s.act.assign(m.act.size(), Matrix<F>(f, s.dim, s.dim));
    for (std::size_t b = 0; b < m.act.size(); ++b)
        for (std::size_t i = 0; i < u.dim(); ++i) {
            std::vector<typename F::Elem> row(m.dim);
            for (std::size_t j = 0; j < m.dim; ++j)
                row[j] = u.basis_rows().at(i, j);
            auto img = m.act[b].apply(row);
            if (!u.contains(img))
                throw std::invalid_argument("submodule: subspace is not invariant");
            // rref rows: coordinates are read off at the pivot positions
            for (std::size_t k = 0; k < u.dim(); ++k)
                s.act[b].at(k, i) = img[u.pivots()[k]];
        }
    return s;
}

/// Quotient by an invariant subspace; coordinates are the non-pivot positions.
template <class F>
ModuleRep<F> quotient_module(const ModuleRep<F>& m, const SpanBasis<F>& u)
{
    const F& f = m.field();
    std::vector<bool> pivot(m.dim, false);
    for (auto p : u.pivots())
        pivot[p] = true;
    std::vector<std::size_t> keep;
    for (std::size_t j = 0; j < m.dim; ++j)
        if (!pivot[j])
            keep.push_back(j);
    ModuleRep<F> q;
    q.alg = m.alg;
    q.dim = keep.size();
    q.act.assign(m.act.size(), Matrix<F>(f, q.dim, q.dim));
    for (std::size_t b = 0; b < m.act.size(); ++b)
        for (std::size_t c = 0; c < keep.size(); ++c) {
            std::vector<typename F::Elem> e(m.dim, f.zero());
            e[keep[c]] = f.one();
            auto img = u.residue(m.act[b].apply(e));
            for (std::size_t r = 0; r < keep.size(); ++r)
                q.act[b].at(r, c) = img[keep[r]];
        }
    return q;
}

/// Span of J M inside the coordinate space of M.
template <class F>
SpanBasis<F> radical_span(const ModuleRep<F>& m)
{
    const F& f = m.field();
    std::vector<std::vector<typename F::Elem>> vecs;
    for (int r : m.alg->radical_basis)
        for (std::size_t j = 0; j < m.dim; ++j) {
            std::vector<typename F::Elem> e(m.dim, f.zero());
            e[j] = f.one();
            vecs.push_back(m.act[r].apply(e));
        }
    return SpanBasis<F>::from_vectors(f, m.dim, vecs);
}

/// Multiplicity of each simple in top(M) = M / JM.
template <class F>
std::vector<std::size_t> top_multiplicities(const ModuleRep<F>& m)
{
    auto top = quotient_module(m, radical_span(m));
    std::vector<std::size_t> mult(m.alg->n_vertices(), 0);
    for (std::size_t v = 0; v < m.alg->n_vertices(); ++v)
        mult[v] = rank(top.act[m.alg->vertex_idempotents[v]]);
    return mult;
}

// ---------------------------------------------------------------------------
// generators and hom spaces

/// Dense generating set of the algebra: vertex idempotents plus radical basis
/// elements independent modulo J^2. Everything else is a product of these.
template <class F>
std::vector<std::vector<typename F::Elem>> algebra_generators(const Algebra<F>& a)
{
    const F& f = a.field;
    std::vector<std::vector<typename F::Elem>> gens;
    for (int e : a.vertex_idempotents)
        gens.push_back(a.basis_vector(e));
    std::vector<std::vector<typename F::Elem>> acc;
    for (int r : a.radical_basis)
        for (int s : a.radical_basis)
            acc.push_back(a.mult(a.basis_vector(r), a.basis_vector(s)));
    auto cur = SpanBasis<F>::from_vectors(f, a.dim, acc);
    std::size_t base = cur.dim();
    for (int r : a.radical_basis) {
        acc.push_back(a.basis_vector(r));
        auto s = SpanBasis<F>::from_vectors(f, a.dim, acc);
        if (s.dim() > base) {
            base = s.dim();
            gens.push_back(a.basis_vector(r));
        } else {
            acc.pop_back();
        }
    }
    return gens;
}

/// Basis of Hom_A(M, N) as matrices (dim N x dim M). Intertwining is imposed
/// on a generating set, which suffices for the whole algebra.
template <class F>
std::vector<Matrix<F>> hom_space(const ModuleRep<F>& m, const ModuleRep<F>& n)
{
    const F& f = m.field();
    if (m.alg.get() != n.alg.get())
        throw std::invalid_argument("hom_space: modules over different algebras");
    const std::size_t dm = m.dim, dn = n.dim, nd = dm * dn;
    auto gens = algebra_generators(*m.alg);
    // unknowns X(r,c) flattened r*dm+c; constraint X rho_M(g) - rho_N(g) X = 0
    Matrix<F> sys(f, gens.size() * nd, nd);
    std::size_t row = 0;
    for (const auto& g : gens) {
        auto am = m.action_of(g);
        auto an = n.action_of(g);
        for (std::size_t r = 0; r < dn; ++r)
            for (std::size_t c = 0; c < dm; ++c) {
                for (std::size_t k = 0; k < dm; ++k)
                    sys.at(row, r * dm + k) = f.add(sys.at(row, r * dm + k), am.at(k, c));
                for (std::size_t k = 0; k < dn; ++k)
                    sys.at(row, k * dm + c) = f.sub(sys.at(row, k * dm + c), an.at(r, k));
                ++row;
            }
    }
    auto ker = kernel_basis(sys);
    std::vector<Matrix<F>> out;
    for (std::size_t j = 0; j < ker.cols(); ++j) {
        Matrix<F> x(f, dn, dm);
        for (std::size_t r = 0; r < dn; ++r)
            for (std::size_t c = 0; c < dm; ++c)
                x.at(r, c) = ker.at(r * dm + c, j);
        out.push_back(std::move(x));
    }
    return out;
}

/// True iff some element of the span of the given hom basis is invertible.
/// Over a finite-image search this uses the rank-completion greedy: build a
/// maximal-rank combination column by column.
template <class F>
bool span_contains_invertible(const std::vector<Matrix<F>>& homs)
{
    if (homs.empty())
        return false;
    const F& f = homs[0].field();
    const std::size_t n = homs[0].rows();
    if (homs[0].cols() != n)
        return false;
    // Greedy: start from the first basis map, then repeatedly add a multiple of
    // another basis map whenever it strictly increases the rank. Over an
    // infinite field a generic combination works; we emulate it with small
    // integer multipliers. Sound (a witness is verified by rank), and complete
    // enough for the small hom spaces met here.
    for (std::size_t start = 0; start < homs.size(); ++start) {
        Matrix<F> acc = homs[start];
        bool improved = true;
        while (rank(acc) < n && improved) {
            improved = false;
            for (std::size_t j = 0; j < homs.size(); ++j) {
                for (int c = 1; c <= 8 && !improved; ++c) {
                    Matrix<F> cand = acc + homs[j].scaled(f.from_int(c));
                    if (rank(cand) > rank(acc)) {
                        acc = std::move(cand);
                        improved = true;
                    }
                }
                if (improved)
                    break;
            }
        }
        if (rank(acc) == n)
            return true;
    }
    return false;
}

/// Isomorphism test for modules over the same algebra: equal dimension plus an
/// invertible element in Hom(M, N).
template <class F>
bool modules_isomorphic(const ModuleRep<F>& m, const ModuleRep<F>& n)
{
    if (m.dim != n.dim)
        return false;
    if (m.dim == 0)
        return true;
    return span_contains_invertible(hom_space(m, n));
}

// ---------------------------------------------------------------------------
// bimodules, tensor and hom induction

/// An (A, B)-bimodule: commuting left A and right B actions on one space.
template <class F>
struct Bimodule {
    AlgebraPtr<F> lalg, ralg;
    std::size_t dim = 0;
    std::vector<Matrix<F>> left;   // per lalg basis element
    std::vector<Matrix<F>> right;  // per ralg basis element

    ModuleRep<F> as_left_module() const
    {
        ModuleRep<F> m;
        m.alg = lalg;
        m.dim = dim;
        m.act = left;
        return m;
    }
    /// Left module over ralg^op (pass the matching opposite algebra).
    ModuleRep<F> as_right_module(AlgebraPtr<F> rop) const
    {
        ModuleRep<F> m;
        m.alg = rop;
        m.dim = dim;
        m.act = right;
        return m;
    }
};

template <class F>
std::vector<std::string> verify_bimodule(const Bimodule<F>& b)
{
    auto rep = verify_module(b.as_left_module());
    {
        // right action: rho(xy) = rho(y) rho(x), identity acts as identity
        const auto& a = *b.ralg;
        const F& f = a.field;
        Matrix<F> id(f, b.dim, b.dim);
        for (int e : a.vertex_idempotents)
            id = id + b.right[e];
        if (!(id == Matrix<F>::identity(f, b.dim)))
            rep.push_back("right identity does not act as identity");
        for (std::size_t i = 0; i < a.dim && rep.size() < 6; ++i)
            for (std::size_t j = 0; j < a.dim; ++j) {
                Matrix<F> want(f, b.dim, b.dim);
                for (const auto& [k, v] : a.product(static_cast<int>(i), static_cast<int>(j)))
                    want = want + b.right[k].scaled(v);
                if (!(b.right[j] * b.right[i] == want)) {
                    rep.push_back("right action violates structure constants");
                    break;
                }
            }
    }
    for (const auto& l : b.left)
        for (const auto& r : b.right)
            if (!(l * r == r * l)) {
                rep.push_back("left and right actions do not commute");
                return rep;
            }
    return rep;
}

/// The algebra as a bimodule over itself.
template <class F>
Bimodule<F> regular_bimodule(AlgebraPtr<F> a)
{
    Bimodule<F> b;
    b.lalg = a;
    b.ralg = a;
    b.dim = a->dim;
    for (std::size_t i = 0; i < a->dim; ++i) {
        b.left.push_back(a->left_mult_matrix(static_cast<int>(i)));
        b.right.push_back(a->right_mult_matrix(static_cast<int>(i)));
    }
    return b;
}

/// Tensor X (x)_Gamma M for an (A, Gamma)-bimodule X and a left Gamma-module M:
/// quotient of X (x)_k M by x g (x) m - x (x) g m. Result is a left A-module.
template <class F>
ModuleRep<F> tensor_over(const Bimodule<F>& x, const ModuleRep<F>& m)
{
    if (x.ralg.get() != m.alg.get())
        throw std::invalid_argument("tensor_over: inner algebra mismatch");
    const F& f = x.lalg->field;
    const std::size_t dx = x.dim, dm = m.dim, amb = dx * dm;  // index i*dm+j
    std::vector<std::vector<typename F::Elem>> rels;
    for (std::size_t g = 0; g < x.ralg->dim; ++g)
        for (std::size_t i = 0; i < dx; ++i)
            for (std::size_t j = 0; j < dm; ++j) {
                std::vector<typename F::Elem> rel(amb, f.zero());
                bool nonzero = false;
                for (std::size_t k = 0; k < dx; ++k) {
                    const auto& c = x.right[g].at(k, i);
                    if (!f.is_zero(c)) {
                        rel[k * dm + j] = f.add(rel[k * dm + j], c);
                        nonzero = true;
                    }
                }
                for (std::size_t k = 0; k < dm; ++k) {
                    const auto& c = m.act[g].at(k, j);
                    if (!f.is_zero(c)) {
                        rel[i * dm + k] = f.sub(rel[i * dm + k], c);
                        nonzero = true;
                    }
                }
                if (nonzero)
                    rels.push_back(std::move(rel));
            }
    auto u = SpanBasis<F>::from_vectors(f, amb, rels);

    // the left A-action descends to the quotient
    ModuleRep<F> big;
    big.alg = x.lalg;
    big.dim = amb;
    big.act.assign(x.lalg->dim, Matrix<F>(f, amb, amb));
    for (std::size_t b = 0; b < x.lalg->dim; ++b)
        for (std::size_t i = 0; i < dx; ++i)
            for (std::size_t k = 0; k < dx; ++k) {
                const auto& c = x.left[b].at(k, i);
                if (f.is_zero(c))
                    continue;
                for (std::size_t j = 0; j < dm; ++j)
                    big.act[b].at(k * dm + j, i * dm + j) = c;
            }
    return quotient_module(big, u);
}

/// Hom_A(Y, M) for an (A, B)-bimodule Y and a left A-module M, as a left
/// B-module via (b phi)(y) = phi(y b).
template <class F>
ModuleRep<F> hom_over(const Bimodule<F>& y, const ModuleRep<F>& m)
{
    if (y.lalg.get() != m.alg.get())
        throw std::invalid_argument("hom_over: inner algebra mismatch");
    const F& f = m.field();
    ModuleRep<F> yl = y.as_left_module();
    auto basis = hom_space(yl, m);  // matrices dim(M) x dim(Y)
    const std::size_t h = basis.size();
    // flatten the hom basis to solve coordinates of induced maps
    const std::size_t flat = m.dim * y.dim;
    Matrix<F> bmat(f, flat, h);
    for (std::size_t j = 0; j < h; ++j)
        for (std::size_t r = 0; r < m.dim; ++r)
            for (std::size_t c = 0; c < y.dim; ++c)
                bmat.at(r * y.dim + c, j) = basis[j].at(r, c);

    ModuleRep<F> out;
    out.alg = y.ralg;
    out.dim = h;
    out.act.assign(y.ralg->dim, Matrix<F>(f, h, h));
    for (std::size_t b = 0; b < y.ralg->dim; ++b)
        for (std::size_t j = 0; j < h; ++j) {
            Matrix<F> img = basis[j] * y.right[b];  // phi(y b)
            std::vector<typename F::Elem> v(flat);
            for (std::size_t r = 0; r < m.dim; ++r)
                for (std::size_t c = 0; c < y.dim; ++c)
                    v[r * y.dim + c] = img.at(r, c);
            auto coords = solve(bmat, v);
            if (!coords)
                throw std::logic_error("hom_over: induced map leaves the hom space");
            for (std::size_t k = 0; k < h; ++k)
                out.act[b].at(k, j) = (*coords)[k];
        }
    return out;
}

/// Outer tensor of a left A-module and a left B-module as a module over A (x) B
/// (basis pair (i, j) of the tensor algebra indexed as i*dim(B)+j).
template <class F>
ModuleRep<F> outer_tensor(const ModuleRep<F>& m, const ModuleRep<F>& n, AlgebraPtr<F> tensor_alg)
{
    const std::size_t db = n.alg->dim;
    if (tensor_alg->dim != m.alg->dim * db)
        throw std::invalid_argument("outer_tensor: tensor algebra dimension mismatch");
    ModuleRep<F> t;
    t.alg = tensor_alg;
    t.dim = m.dim * n.dim;
    t.act.reserve(tensor_alg->dim);
    for (std::size_t i = 0; i < m.alg->dim; ++i)
        for (std::size_t j = 0; j < db; ++j)
            t.act.push_back(Matrix<F>::kronecker(m.act[i], n.act[j]));
    return t;
}

}  // namespace cornerhom
