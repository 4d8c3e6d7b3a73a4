#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cornerhom/algebra.hpp"

namespace cornerhom {

struct ParseError : std::runtime_error {
    std::size_t line;
    ParseError(std::size_t line_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_)
    {
    }
};

struct NotAdmissibleWithinBound : std::runtime_error {
    std::size_t maxlen;
    explicit NotAdmissibleWithinBound(std::size_t maxlen_)
        : std::runtime_error("irreducible paths of length " + std::to_string(maxlen_) +
                             " remain; retry with a larger maxlen or reject the input"),
          maxlen(maxlen_)
    {
    }
};

/// A quiver with relations. Words compose right to left: in the word
/// alpha.beta, beta acts first, and alpha.beta is defined when
/// target(beta) = source(alpha).
struct QuiverPresentation {
    FieldSpec field;
    std::vector<std::string> vertices;

    struct Arrow {
        std::string name;
        int src, tgt;
    };
    std::vector<Arrow> arrows;

    struct RelTerm {
        std::vector<int> word;  // arrow indices in written order (rightmost acts first)
        std::int64_t num = 1, den = 1;
    };
    struct Relation {
        std::vector<RelTerm> terms;
        int src, tgt;  // common endpoints of all terms
        std::size_t line = 0;
    };
    std::vector<Relation> relations;

    std::map<std::string, Idempotent> idempotents;

    int vertex_index(const std::string& name) const
    {
        for (std::size_t i = 0; i < vertices.size(); ++i)
            if (vertices[i] == name)
                return static_cast<int>(i);
        return -1;
    }
    int arrow_index(const std::string& name) const
    {
        for (std::size_t i = 0; i < arrows.size(); ++i)
            if (arrows[i].name == name)
                return static_cast<int>(i);
        return -1;
    }

    int word_source(const std::vector<int>& w) const { return arrows[w.back()].src; }
    int word_target(const std::vector<int>& w) const { return arrows[w.front()].tgt; }

    /// Default truncation bound: generous for desk-scale inputs.
    std::size_t default_maxlen() const { return 2 * (arrows.size() + 1); }
};

// ---------------------------------------------------------------------------
// .qalg parsing

namespace detail {
inline std::vector<std::string> split_ws(const std::string& s)
{
    std::istringstream is(s);
    std::vector<std::string> out;
    std::string tok;
    while (is >> tok)
        out.push_back(tok);
    return out;
}

inline std::vector<std::string> split_on(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}
}  // namespace detail

/// Parse the .qalg text format. Grammar (newline-delimited, "#" comments):
///   field <p|rational>
///   vertex <name>...
///   arrow <name> <source> <target>
///   relation <term> [+<coeff> <term> | -<coeff> <term>]...
///   idempotent <name> = <vertex>[,<vertex>...]
/// where <term> = arrow names joined by "." in right-to-left composition order.
inline QuiverPresentation parse_algebra_text(const std::string& text)
{
    QuiverPresentation qp;
    bool field_seen = false;
    std::istringstream is(text);
    std::string raw;
    std::size_t lineno = 0;

    auto parse_word = [&](const std::string& term, std::size_t ln) {
        std::vector<int> word;
        for (const auto& name : detail::split_on(term, '.')) {
            int ai = qp.arrow_index(name);
            if (ai < 0)
                throw ParseError(ln, "unknown arrow '" + name + "'");
            word.push_back(ai);
        }
        for (std::size_t i = 0; i + 1 < word.size(); ++i)
            if (qp.arrows[word[i]].src != qp.arrows[word[i + 1]].tgt)
                throw ParseError(ln, "non-composable path '" + term + "' (target of '" +
                                         qp.arrows[word[i + 1]].name + "' is not source of '" +
                                         qp.arrows[word[i]].name + "')");
        return word;
    };

    while (std::getline(is, raw)) {
        ++lineno;
        auto hash = raw.find('#');
        std::string line = hash == std::string::npos ? raw : raw.substr(0, hash);
        auto toks = detail::split_ws(line);
        if (toks.empty())
            continue;
        const std::string& kw = toks[0];
        if (kw == "field") {
            if (toks.size() != 2)
                throw ParseError(lineno, "expected 'field <p|rational>'");
            if (toks[1] == "rational") {
                qp.field = FieldSpec::rational();
            } else {
                std::int64_t p = 0;
                try {
                    p = std::stoll(toks[1]);
                } catch (...) {
                    throw ParseError(lineno, "bad field modulus '" + toks[1] + "'");
                }
                if (!FieldSpec::is_prime(p))
                    throw ParseError(lineno, "field modulus " + toks[1] + " is not prime");
                qp.field = FieldSpec::prime(p);
            }
            field_seen = true;
        } else if (kw == "vertex") {
            if (toks.size() < 2)
                throw ParseError(lineno, "expected 'vertex <name>...'");
            for (std::size_t i = 1; i < toks.size(); ++i) {
                if (qp.vertex_index(toks[i]) >= 0)
                    throw ParseError(lineno, "duplicate vertex '" + toks[i] + "'");
                qp.vertices.push_back(toks[i]);
            }
        } else if (kw == "arrow") {
            if (toks.size() != 4)
                throw ParseError(lineno, "expected 'arrow <name> <source> <target>'");
            if (qp.arrow_index(toks[1]) >= 0)
                throw ParseError(lineno, "duplicate arrow '" + toks[1] + "'");
            int s = qp.vertex_index(toks[2]);
            int t = qp.vertex_index(toks[3]);
            if (s < 0)
                throw ParseError(lineno, "unknown vertex '" + toks[2] + "'");
            if (t < 0)
                throw ParseError(lineno, "unknown vertex '" + toks[3] + "'");
            qp.arrows.push_back({toks[1], s, t});
        } else if (kw == "relation") {
            if (toks.size() < 2)
                throw ParseError(lineno, "expected 'relation <term> ...'");
            QuiverPresentation::Relation rel;
            rel.line = lineno;
            QuiverPresentation::RelTerm first;
            first.word = parse_word(toks[1], lineno);
            rel.terms.push_back(first);
            std::size_t i = 2;
            while (i < toks.size()) {
                std::string sign_coeff = toks[i];
                if (sign_coeff.empty() || (sign_coeff[0] != '+' && sign_coeff[0] != '-'))
                    throw ParseError(lineno, "expected signed coefficient, got '" + sign_coeff + "'");
                if (i + 1 >= toks.size())
                    throw ParseError(lineno, "missing term after coefficient");
                QuiverPresentation::RelTerm term;
                std::string body = sign_coeff.substr(1);
                auto slash = body.find('/');
                try {
                    term.num = std::stoll(slash == std::string::npos ? body : body.substr(0, slash));
                    term.den = slash == std::string::npos ? 1 : std::stoll(body.substr(slash + 1));
                } catch (...) {
                    throw ParseError(lineno, "bad coefficient '" + sign_coeff + "'");
                }
                if (term.den == 0)
                    throw ParseError(lineno, "zero denominator in coefficient");
                if (sign_coeff[0] == '-')
                    term.num = -term.num;
                term.word = parse_word(toks[i + 1], lineno);
                rel.terms.push_back(term);
                i += 2;
            }
            rel.src = qp.word_source(rel.terms[0].word);
            rel.tgt = qp.word_target(rel.terms[0].word);
            for (const auto& t : rel.terms) {
                if (t.word.size() < 2)
                    throw ParseError(lineno, "relation term of length < 2 (admissibility requires I within J^2)");
                if (qp.word_source(t.word) != rel.src || qp.word_target(t.word) != rel.tgt)
                    throw ParseError(lineno, "relation terms do not share source and target");
            }
            qp.relations.push_back(std::move(rel));
        } else if (kw == "idempotent") {
            // idempotent <name> = v1,v2
            if (toks.size() < 4 || toks[2] != "=")
                throw ParseError(lineno, "expected 'idempotent <name> = <vertex>[,<vertex>...]'");
            std::string verts;
            for (std::size_t i = 3; i < toks.size(); ++i)
                verts += toks[i];
            Idempotent idem;
            for (const auto& vn : detail::split_on(verts, ',')) {
                int v = qp.vertex_index(vn);
                if (v < 0)
                    throw ParseError(lineno, "unknown vertex '" + vn + "' in idempotent");
                idem.vertex_set.push_back(v);
            }
            std::sort(idem.vertex_set.begin(), idem.vertex_set.end());
            idem.vertex_set.erase(std::unique(idem.vertex_set.begin(), idem.vertex_set.end()),
                                  idem.vertex_set.end());
            if (idem.vertex_set.empty())
                throw ParseError(lineno, "empty idempotent");
            qp.idempotents[toks[1]] = idem;
        } else {
            throw ParseError(lineno, "unknown keyword '" + kw + "'");
        }
    }
    if (!field_seen)
        throw ParseError(0, "missing 'field' declaration");
    if (qp.vertices.empty())
        throw ParseError(0, "no vertices declared");
    return qp;
}

// ---------------------------------------------------------------------------
// build_algebra: truncated reduction system by linear algebra

template <class F>
struct BuildResult {
    Algebra<F> algebra;
    // basis-path table: arrow-index word per basis element (empty = vertex path)
    std::vector<std::vector<int>> basis_paths;
};

namespace detail {

// Paths ordered by (length, lexicographic word); used both for enumeration
// and for the length-lex elimination order.
struct PathKey {
    std::vector<int> word;
    int src = -1, tgt = -1;  // src/tgt vertex (trivial path: the vertex itself)

    bool operator<(const PathKey& o) const
    {
        if (word.size() != o.word.size())
            return word.size() < o.word.size();
        if (word != o.word)
            return word < o.word;
        return src < o.src;  // distinguishes trivial paths
    }
    bool operator==(const PathKey& o) const { return word == o.word && src == o.src; }
};

}  // namespace detail

/// Build the bound quiver algebra kQ/<relations> by length-lex linear closure
/// of the relations on the truncated path space. The algebra is certified
/// finite-dimensional iff no irreducible path of length maxlen remains.
template <class F>
BuildResult<F> build_algebra(const QuiverPresentation& qp, F field, std::size_t maxlen,
                             std::size_t path_cap = 200000)
{
    using detail::PathKey;
    const F& f = field;

    // enumerate all paths of length <= maxlen
    std::vector<PathKey> paths;
    for (std::size_t v = 0; v < qp.vertices.size(); ++v)
        paths.push_back({{}, static_cast<int>(v), static_cast<int>(v)});
    std::size_t layer_begin = 0;
    for (std::size_t len = 1; len <= maxlen; ++len) {
        std::size_t layer_end = paths.size();
        for (std::size_t i = layer_begin; i < layer_end; ++i)
            for (std::size_t ai = 0; ai < qp.arrows.size(); ++ai) {
                if (qp.arrows[ai].src != paths[i].tgt)
                    continue;
                PathKey p;
                p.word = paths[i].word;
                p.word.insert(p.word.begin(), static_cast<int>(ai));  // new arrow acts last
                p.src = paths[i].src;
                p.tgt = qp.arrows[ai].tgt;
                paths.push_back(std::move(p));
                if (paths.size() > path_cap)
                    throw NotAdmissibleWithinBound(maxlen);
            }
        if (paths.size() == layer_end)
            break;  // no longer paths exist
        layer_begin = layer_end;
    }
    std::sort(paths.begin(), paths.end());
    std::map<PathKey, std::size_t> index;
    for (std::size_t i = 0; i < paths.size(); ++i)
        index[paths[i]] = i;

    // relation rows u * r * v, coordinates over the path basis
    std::vector<std::vector<typename F::Elem>> rows;
    for (const auto& rel : qp.relations) {
        std::size_t min_term = rel.terms[0].word.size();
        std::size_t max_term = min_term;
        for (const auto& t : rel.terms) {
            min_term = std::min(min_term, t.word.size());
            max_term = std::max(max_term, t.word.size());
        }
        for (const auto& u : paths) {
            if (u.src != rel.tgt)
                continue;
            for (const auto& v : paths) {
                if (v.tgt != rel.src)
                    continue;
                if (u.word.size() + max_term + v.word.size() > maxlen)
                    continue;
                std::vector<typename F::Elem> row(paths.size(), f.zero());
                for (const auto& t : rel.terms) {
                    PathKey p;
                    p.word = u.word;
                    p.word.insert(p.word.end(), t.word.begin(), t.word.end());
                    p.word.insert(p.word.end(), v.word.begin(), v.word.end());
                    p.src = v.src;
                    p.tgt = u.tgt;
                    auto it = index.find(p);
                    if (it == index.end())
                        throw std::logic_error("build_algebra: composed path not enumerated");
                    row[it->second] = f.add(row[it->second], f.from_fraction(t.num, t.den));
                }
                rows.push_back(std::move(row));
            }
        }
    }

    // eliminate with pivots on the largest (length-lex) path in each row:
    // reverse the column order so ordinary rref pivots on leading terms.
    const std::size_t np = paths.size();
    Matrix<F> m(f, rows.size(), np);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < np; ++j)
            m.at(i, j) = rows[i][np - 1 - j];
    auto rr = rref(m);
    std::vector<bool> reducible(np, false);
    for (auto p : rr.pivots)
        reducible[np - 1 - p] = true;

    // normal forms: path index -> coordinates over irreducible paths
    std::vector<std::size_t> basis;  // irreducible path indices, ascending
    std::vector<int> basis_of_path(np, -1);
    for (std::size_t i = 0; i < np; ++i)
        if (!reducible[i]) {
            basis_of_path[i] = static_cast<int>(basis.size());
            basis.push_back(i);
        }
    for (std::size_t b : basis)
        if (paths[b].word.size() >= maxlen && maxlen > 0)
            throw NotAdmissibleWithinBound(maxlen);
    if (maxlen == 0 && !qp.arrows.empty())
        throw NotAdmissibleWithinBound(maxlen);

    const std::size_t dim = basis.size();
    std::vector<std::vector<typename F::Elem>> normal(np);
    for (std::size_t i = 0; i < np; ++i)
        normal[i].assign(dim, f.zero());
    for (std::size_t i = 0; i < np; ++i)
        if (!reducible[i])
            normal[i][basis_of_path[i]] = f.one();
    // pivot rows express each reducible path in terms of smaller ones; rows are
    // in RREF so non-pivot columns are all irreducible... not necessarily:
    // non-pivot columns may still be reducible paths pivoted in other rows.
    // Resolve by processing paths in increasing length-lex order.
    {
        // map pivot path -> its rref row
        std::vector<int> row_of_path(np, -1);
        for (std::size_t r = 0; r < rr.rank; ++r)
            row_of_path[np - 1 - rr.pivots[r]] = static_cast<int>(r);
        for (std::size_t i = 0; i < np; ++i) {
            if (!reducible[i])
                continue;
            int r = row_of_path[i];
            // leading term = column np-1-i; remaining terms are strictly smaller
            for (std::size_t c = np - 1 - i + 1; c < np; ++c) {
                auto coeff = rr.reduced.at(r, c);
                if (f.is_zero(coeff))
                    continue;
                std::size_t smaller = np - 1 - c;
                // smaller path already resolved (strictly smaller in order)
                for (std::size_t k = 0; k < dim; ++k)
                    normal[i][k] = f.sub(normal[i][k], f.mul(coeff, normal[smaller][k]));
            }
        }
    }

    // left multiplication by one arrow on a basis path, as basis coordinates
    auto arrow_times_basis = [&](int ai, std::size_t b) -> const std::vector<typename F::Elem>& {
        static const std::vector<typename F::Elem> empty;
        const PathKey& p = paths[basis[b]];
        thread_local std::vector<typename F::Elem> zero_tl;
        if (qp.arrows[ai].src != p.tgt) {
            zero_tl.assign(dim, f.zero());
            return zero_tl;
        }
        PathKey q;
        q.word = p.word;
        q.word.insert(q.word.begin(), ai);
        q.src = p.src;
        q.tgt = qp.arrows[ai].tgt;
        auto it = index.find(q);
        if (it == index.end())
            throw std::logic_error("build_algebra: arrow extension not enumerated");
        return normal[it->second];
    };

    // structure constants: multiply basis paths arrow by arrow, reducing each step
    Algebra<F> alg;
    alg.field = f;
    alg.dim = dim;
    alg.provenance = Provenance::quiver;
    alg.vertex_names = qp.vertices;
    std::vector<std::vector<int>> basis_words;
    for (std::size_t b = 0; b < dim; ++b) {
        const PathKey& p = paths[basis[b]];
        basis_words.push_back(p.word);
        alg.src.push_back(p.src);
        alg.tgt.push_back(p.tgt);
        if (p.word.empty()) {
            alg.basis_labels.push_back("e_" + qp.vertices[p.src]);
            alg.vertex_idempotents.push_back(static_cast<int>(b));
        } else {
            std::string lbl;
            for (std::size_t i = 0; i < p.word.size(); ++i)
                lbl += (i ? "." : "") + qp.arrows[p.word[i]].name;
            alg.basis_labels.push_back(lbl);
            alg.radical_basis.push_back(static_cast<int>(b));
        }
    }
    alg.prod.assign(dim * dim, {});
    for (std::size_t i = 0; i < dim; ++i) {
        const PathKey& p = paths[basis[i]];
        for (std::size_t j = 0; j < dim; ++j) {
            const PathKey& q = paths[basis[j]];
            std::vector<typename F::Elem> acc(dim, f.zero());
            if (p.word.empty()) {
                if (p.src == q.tgt)
                    acc[j] = f.one();
            } else if (p.src != q.tgt) {
                // not composable
            } else {
                acc[j] = f.one();
                for (auto it = p.word.rbegin(); it != p.word.rend(); ++it) {
                    std::vector<typename F::Elem> next(dim, f.zero());
                    for (std::size_t b = 0; b < dim; ++b) {
                        if (f.is_zero(acc[b]))
                            continue;
                        const auto& ext = arrow_times_basis(*it, b);
                        for (std::size_t k = 0; k < dim; ++k)
                            next[k] = f.add(next[k], f.mul(acc[b], ext[k]));
                    }
                    acc = std::move(next);
                }
            }
            auto& row = alg.prod[i * dim + j];
            for (std::size_t k = 0; k < dim; ++k)
                if (!f.is_zero(acc[k]))
                    row.emplace_back(static_cast<int>(k), acc[k]);
        }
    }
    return BuildResult<F>{std::move(alg), std::move(basis_words)};
}

// ---------------------------------------------------------------------------
// syntactic vertex tests

struct RelationEndpoints {
    std::vector<bool> starts_here;  // some relation's common source is this vertex
    std::vector<bool> ends_here;
};

inline RelationEndpoints relation_endpoints(const QuiverPresentation& qp)
{
    RelationEndpoints r;
    r.starts_here.assign(qp.vertices.size(), false);
    r.ends_here.assign(qp.vertices.size(), false);
    for (const auto& rel : qp.relations) {
        r.starts_here[rel.src] = true;
        r.ends_here[rel.tgt] = true;
    }
    return r;
}

enum class RemovalMode { singular, fg };

/// Maximal vertex set removable under the syntactic criteria: mode singular
/// keeps relations from starting at removed vertices; mode fg additionally
/// forbids relations ending there. The complement defines the idempotent to keep.
inline std::vector<int> removable_vertices(const QuiverPresentation& qp, RemovalMode mode)
{
    auto ep = relation_endpoints(qp);
    std::vector<int> out;
    for (std::size_t v = 0; v < qp.vertices.size(); ++v) {
        bool ok = !ep.starts_here[v];
        if (mode == RemovalMode::fg)
            ok = ok && !ep.ends_here[v];
        if (ok)
            out.push_back(static_cast<int>(v));
    }
    return out;
}

}  // namespace cornerhom
