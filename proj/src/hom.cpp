#include "polylin/hom.hpp"

#include "polylin/errors.hpp"
#include "polylin/semigroup.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace polylin {

namespace {

void check_shape(const GradedHom& f) {
    if (f.matrix.rows() != f.target.point_count() || f.matrix.cols() != f.source.point_count())
        throw DomainError(errc::shape_mismatch, "hom matrix shape does not match the polytopes");
}

long long effective_degree(const LatticePolytope& p, long long relation_degree) {
    if (relation_degree > 0) return relation_degree;
    if (p.point_count() == 0) return 2;
    return generation_degree(p);
}

// Product of degree-1 images over a multiset of source points, expanded in
// the target's graded monoid: sum vector -> coefficient.
std::map<Point, Scalar> multiset_image(const GradedHom& f, const std::vector<Point>& xs) {
    const Field& fld = f.matrix.field();
    std::map<Point, Scalar> acc;
    acc.emplace(Point(f.target.ambient_dim(), 0), fld.one());
    for (const auto& x : xs) {
        std::size_t col = f.source.point_index(x);
        std::map<Point, Scalar> next;
        for (std::size_t row = 0; row < f.target.point_count(); ++row) {
            const Scalar& c = f.matrix.at(row, col);
            if (c.is_zero()) continue;
            const Point& y = f.target.lattice_points()[row];
            for (const auto& [vec, coeff] : acc) {
                Point s = vec;
                for (std::size_t i = 0; i < s.size(); ++i) s[i] += y[i];
                Scalar v = coeff * c;
                auto [it, fresh] = next.emplace(std::move(s), v);
                if (!fresh) {
                    it->second += v;
                    if (it->second.is_zero()) next.erase(it);
                }
            }
        }
        acc = std::move(next);
    }
    return acc;
}

} // namespace

GradedHom identity_hom(const LatticePolytope& p, const Field& f) {
    GradedHom h;
    h.source = p;
    h.target = p;
    h.matrix = ExactMatrix::identity(p.point_count(), f);
    h.verified = true;
    return h;
}

GradedHom compose(const GradedHom& g, const GradedHom& f) {
    check_shape(f);
    check_shape(g);
    if (f.target != g.source)
        throw DomainError(errc::dimension_mismatch, "composition through mismatched polytopes");
    GradedHom h;
    h.source = f.source;
    h.target = g.target;
    h.matrix = g.matrix * f.matrix;
    h.verified = f.verified && g.verified;
    return h;
}

LaurentPoly column_laurent(const GradedHom& f, const Point& x) {
    check_shape(f);
    std::size_t col = f.source.point_index(x);
    LaurentPoly out(f.target.ambient_dim(), f.matrix.field());
    for (std::size_t row = 0; row < f.target.point_count(); ++row) {
        const Scalar& c = f.matrix.at(row, col);
        if (c.is_zero()) continue;
        const Point& y = f.target.lattice_points()[row];
        out.add_term(Exponent(y.begin(), y.end()), c);
    }
    return out;
}

GradedHom hom_from_columns(const LatticePolytope& p, const LatticePolytope& q,
                           const std::vector<LaurentPoly>& columns, const Field& field) {
    if (columns.size() != p.point_count())
        throw DomainError(errc::shape_mismatch, "one column per source lattice point required");
    GradedHom h;
    h.source = p;
    h.target = q;
    h.matrix = ExactMatrix(q.point_count(), p.point_count(), field);
    for (std::size_t col = 0; col < columns.size(); ++col) {
        for (const auto& [e, c] : columns[col].terms()) {
            Point y(e.begin(), e.end());
            if (!q.has_lattice_point(y))
                throw DomainError(errc::image_escapes_target,
                                  "column " + std::to_string(col) + " has support outside the target");
            h.matrix.at(q.point_index(y), col) = c;
        }
    }
    return h;
}

bool is_homomorphism(const GradedHom& f, long long relation_degree) {
    check_shape(f);
    long long d = effective_degree(f.source, relation_degree);
    for (const auto& r : binomial_relations(f.source, d)) {
        if (multiset_image(f, r.left) != multiset_image(f, r.right)) return false;
    }
    return true;
}

RankInfo degree1_rank(const GradedHom& f) {
    check_shape(f);
    RankInfo info;
    info.rank = f.matrix.rank();
    info.injective = info.rank == f.source.point_count();
    info.surjective = info.rank == f.target.point_count();
    return info;
}

bool is_idempotent(const GradedHom& f) {
    check_shape(f);
    if (f.source != f.target)
        throw DomainError(errc::shape_mismatch, "idempotence needs an endomorphism");
    return f.matrix * f.matrix == f.matrix;
}

namespace {

// Formal product of linear forms prod_{x in xs} (sum_y X_{x,y} y), expanded
// as: target sum vector -> polynomial in the X variables.
std::map<Point, IntPoly> symbolic_multiset_image(const HomEquations& eq,
                                                 const std::vector<Point>& xs) {
    std::map<Point, IntPoly> acc;
    acc[Point(eq.target.ambient_dim(), 0)].terms[{}] = 1;
    for (const auto& x : xs) {
        std::size_t x_idx = eq.source.point_index(x);
        std::map<Point, IntPoly> next;
        for (std::size_t y_idx = 0; y_idx < eq.target.point_count(); ++y_idx) {
            const Point& y = eq.target.lattice_points()[y_idx];
            std::size_t var = eq.var_index(x_idx, y_idx);
            for (const auto& [vec, poly] : acc) {
                Point s = vec;
                for (std::size_t i = 0; i < s.size(); ++i) s[i] += y[i];
                IntPoly& dst = next[s];
                for (const auto& [mono, coeff] : poly.terms) {
                    std::vector<std::size_t> m = mono;
                    m.insert(std::upper_bound(m.begin(), m.end(), var), var);
                    dst.terms[m] += coeff;
                }
            }
        }
        for (auto it = next.begin(); it != next.end();) {
            auto& terms = it->second.terms;
            for (auto t = terms.begin(); t != terms.end();)
                t = (t->second == 0) ? terms.erase(t) : std::next(t);
            it = terms.empty() ? next.erase(it) : std::next(it);
        }
        acc = std::move(next);
    }
    return acc;
}

std::string poly_key(const IntPoly& p) {
    std::string key;
    for (const auto& [mono, coeff] : p.terms) {
        for (auto v : mono) key += std::to_string(v) + ",";
        key += ":" + coeff.str() + ";";
    }
    return key;
}

} // namespace

HomEquations hom_equations(const LatticePolytope& p, const LatticePolytope& q,
                           long long relation_degree) {
    HomEquations eq;
    eq.source = p;
    eq.target = q;
    eq.relation_degree = effective_degree(p, relation_degree);
    std::set<std::string> seen;
    for (const auto& r : binomial_relations(p, eq.relation_degree)) {
        auto lhs = symbolic_multiset_image(eq, r.left);
        auto rhs = symbolic_multiset_image(eq, r.right);
        std::set<Point> sums;
        for (const auto& [s, poly] : lhs) sums.insert(s);
        for (const auto& [s, poly] : rhs) sums.insert(s);
        for (const auto& s : sums) {
            IntPoly g;
            if (auto it = lhs.find(s); it != lhs.end()) g = it->second;
            if (auto it = rhs.find(s); it != rhs.end())
                for (const auto& [mono, coeff] : it->second.terms) {
                    auto [t, fresh] = g.terms.emplace(mono, -coeff);
                    if (!fresh) {
                        t->second -= coeff;
                        if (t->second == 0) g.terms.erase(t);
                    }
                }
            if (g.terms.empty()) continue;
            if (seen.insert(poly_key(g)).second) eq.polys.push_back(std::move(g));
        }
    }
    return eq;
}

bool equations_vanish(const HomEquations& eq, const ExactMatrix& m) {
    if (m.rows() != eq.target.point_count() || m.cols() != eq.source.point_count())
        throw DomainError(errc::shape_mismatch, "matrix shape does not match the equations");
    const Field& f = m.field();
    const std::size_t nq = eq.target.point_count();
    for (const auto& poly : eq.polys) {
        Scalar total = f.zero();
        for (const auto& [mono, coeff] : poly.terms) {
            Scalar term = f.from_integer(coeff);
            for (auto var : mono) term *= m.at(var % nq, var / nq);
            total += term;
        }
        if (!total.is_zero()) return false;
    }
    return true;
}

std::size_t tangent_dim(const LatticePolytope& p, long long relation_degree) {
    HomEquations eq = hom_equations(p, p, relation_degree);
    const std::size_t m = p.point_count();
    const std::size_t vars = m * m;
    const Field q = Field::rationals();
    // Differentiate each polynomial at the identity matrix: a monomial
    // contributes to variable w only when all its other factors are
    // diagonal entries.
    auto is_diagonal = [&](std::size_t var) { return var / m == var % m; };
    ExactMatrix jac(eq.polys.size(), vars, q);
    for (std::size_t i = 0; i < eq.polys.size(); ++i) {
        for (const auto& [mono, coeff] : eq.polys[i].terms) {
            for (std::size_t k = 0; k < mono.size(); ++k) {
                bool rest_diagonal = true;
                for (std::size_t l = 0; l < mono.size(); ++l)
                    if (l != k && !is_diagonal(mono[l])) { rest_diagonal = false; break; }
                if (rest_diagonal) jac.at(i, mono[k]) += q.from_integer(coeff);
            }
        }
    }
    return vars - jac.rank();
}

} // namespace polylin
