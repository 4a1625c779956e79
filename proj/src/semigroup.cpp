#include "polylin/semigroup.hpp"

#include "polylin/errors.hpp"
#include "polylin/matrix.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace polylin {

namespace {

std::set<Point> sumset_of_degree(const LatticePolytope& p, long long e) {
    std::set<Point> cur;
    if (e == 0) {
        cur.insert(Point(p.ambient_dim(), 0));
        return cur;
    }
    if (p.is_empty()) return cur;
    for (const auto& x : p.lattice_points()) cur.insert(x);
    for (long long k = 2; k <= e; ++k) {
        std::set<Point> next;
        for (const auto& s : cur)
            for (const auto& x : p.lattice_points()) {
                Point t = s;
                for (std::size_t i = 0; i < t.size(); ++i) t[i] += x[i];
                next.insert(std::move(t));
            }
        cur = std::move(next);
    }
    return cur;
}

void enumerate_multisets(std::size_t n, long long e,
                         const std::function<void(const std::vector<std::size_t>&)>& visit) {
    std::vector<std::size_t> pick(static_cast<std::size_t>(e), 0);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t lo) {
        if (pos == pick.size()) {
            visit(pick);
            return;
        }
        for (std::size_t i = lo; i < n; ++i) {
            pick[pos] = i;
            rec(pos + 1, i);
        }
    };
    if (n == 0 && e > 0) return;
    rec(0, 0);
}

Point multiset_sum(const LatticePolytope& p, const std::vector<std::size_t>& idx) {
    Point s(p.ambient_dim(), 0);
    for (auto i : idx) {
        const Point& x = p.lattice_points()[i];
        for (std::size_t j = 0; j < s.size(); ++j) s[j] += x[j];
    }
    return s;
}

std::vector<Point> multiset_points(const LatticePolytope& p, const std::vector<std::size_t>& idx) {
    std::vector<Point> out;
    out.reserve(idx.size());
    for (auto i : idx) out.push_back(p.lattice_points()[i]);
    return out;
}

} // namespace

std::vector<GradedMonomial> degree_piece(const LatticePolytope& p, long long e) {
    if (e < 0) throw DomainError(errc::degenerate_input, "negative degree");
    std::vector<GradedMonomial> out;
    for (auto& v : sumset_of_degree(p, e)) out.push_back({v, e});
    return out;
}

std::size_t hilbert(const LatticePolytope& p, long long e) {
    if (e < 0) throw DomainError(errc::degenerate_input, "negative degree");
    return sumset_of_degree(p, e).size();
}

std::vector<BinomialRelation> binomial_relations(const LatticePolytope& p, long long max_degree) {
    if (max_degree < 2)
        throw DomainError(errc::degenerate_input, "relation degree bound must be at least 2");
    std::vector<BinomialRelation> out;
    const std::size_t n = p.point_count();
    for (long long e = 2; e <= max_degree; ++e) {
        std::map<Point, std::vector<std::size_t>> groups;  // sum -> lex-least multiset
        std::map<Point, std::vector<BinomialRelation>> rels;
        enumerate_multisets(n, e, [&](const std::vector<std::size_t>& idx) {
            Point s = multiset_sum(p, idx);
            auto [it, fresh] = groups.try_emplace(s, idx);
            if (!fresh) {
                BinomialRelation r;
                r.degree = e;
                r.left = multiset_points(p, it->second);
                r.right = multiset_points(p, idx);
                rels[s].push_back(std::move(r));
            }
        });
        for (auto& [s, list] : rels)
            for (auto& r : list) out.push_back(std::move(r));
    }
    return out;
}

namespace {

// Incremental rank of integer rows over the rationals, with early exit once
// a target rank is reached.
class RankAccumulator {
public:
    explicit RankAccumulator(std::size_t cols) : cols_(cols) {}

    std::size_t rank() const { return basis_.size(); }

    bool add_row(std::vector<Scalar> row) {
        for (const auto& [lead, vec] : basis_) {
            if (row[lead].is_zero()) continue;
            Scalar f = row[lead];
            for (std::size_t j = 0; j < cols_; ++j) row[j] -= f * vec[j];
        }
        std::size_t lead = cols_;
        for (std::size_t j = 0; j < cols_; ++j)
            if (!row[j].is_zero()) { lead = j; break; }
        if (lead == cols_) return false;
        Scalar inv = row[lead].inverse();
        for (std::size_t j = 0; j < cols_; ++j) row[j] *= inv;
        basis_.emplace_back(lead, std::move(row));
        return true;
    }

private:
    std::size_t cols_;
    std::vector<std::pair<std::size_t, std::vector<Scalar>>> basis_;
};

} // namespace

bool is_generated_in_degree(const LatticePolytope& p, long long d, long long check_up_to) {
    if (d < 2 || check_up_to < d)
        throw DomainError(errc::degenerate_input, "need check_up_to >= d >= 2");
    const std::size_t n = p.point_count();
    if (n == 0) return true;
    auto rels = binomial_relations(p, d);
    const Field q = Field::rationals();
    for (long long e = d + 1; e <= check_up_to; ++e) {
        // index the degree-e monomial basis by multiset
        std::map<std::vector<std::size_t>, std::size_t> basis;
        enumerate_multisets(n, e, [&](const std::vector<std::size_t>& idx) {
            std::size_t k = basis.size();
            basis.emplace(idx, k);
        });
        const std::size_t target = basis.size() - hilbert(p, e);
        if (target == 0) continue;
        RankAccumulator acc(basis.size());
        bool done = false;
        for (const auto& r : rels) {
            if (done) break;
            std::vector<std::size_t> left_idx, right_idx;
            for (const auto& x : r.left) left_idx.push_back(p.point_index(x));
            for (const auto& x : r.right) right_idx.push_back(p.point_index(x));
            enumerate_multisets(n, e - r.degree, [&](const std::vector<std::size_t>& idx) {
                if (done) return;
                std::vector<std::size_t> a = left_idx, b = right_idx;
                a.insert(a.end(), idx.begin(), idx.end());
                b.insert(b.end(), idx.begin(), idx.end());
                std::sort(a.begin(), a.end());
                std::sort(b.begin(), b.end());
                if (a == b) return;
                std::vector<Scalar> row(basis.size(), q.zero());
                row[basis.at(a)] += q.one();
                row[basis.at(b)] -= q.one();
                acc.add_row(std::move(row));
                if (acc.rank() == target) done = true;
            });
        }
        if (acc.rank() < target) return false;
    }
    return true;
}

long long generation_degree(const LatticePolytope& p, long long limit) {
    for (long long d = 2; d <= limit; ++d)
        if (is_generated_in_degree(p, d, d + 1)) return d;
    throw DomainError(errc::degenerate_input, "no generation degree up to the limit");
}

std::vector<GradedMonomial> normalization_degree_piece(const LatticePolytope& p, long long c) {
    if (c < 1) throw DomainError(errc::degenerate_input, "degree must be positive");
    if (!is_normalized(p))
        throw DomainError(errc::not_normalized, "polytope is not lattice-normalized");
    LatticePolytope dil = dilate(p, c);
    std::vector<GradedMonomial> out;
    for (const auto& x : dil.lattice_points()) out.push_back({x, c});
    return out;
}

std::optional<std::vector<Point>> monomial_product_rep(const LatticePolytope& p,
                                                       const Point& w, long long e) {
    if (e < 0) return std::nullopt;
    if (e == 0) {
        if (w == Point(p.ambient_dim(), 0)) return std::vector<Point>{};
        return std::nullopt;
    }
    std::vector<std::set<Point>> pieces(static_cast<std::size_t>(e) + 1);
    for (long long k = 1; k <= e; ++k) pieces[static_cast<std::size_t>(k)] = sumset_of_degree(p, k);
    if (!pieces[static_cast<std::size_t>(e)].count(w)) return std::nullopt;
    std::vector<Point> rep;
    Point rest = w;
    for (long long k = e; k >= 1; --k) {
        for (const auto& x : p.lattice_points()) {
            Point next = rest;
            for (std::size_t i = 0; i < next.size(); ++i) next[i] -= x[i];
            bool ok = (k == 1) ? (next == Point(p.ambient_dim(), 0))
                               : pieces[static_cast<std::size_t>(k - 1)].count(next) > 0;
            if (ok) {
                rep.push_back(x);
                rest = std::move(next);
                break;
            }
        }
    }
    std::sort(rep.begin(), rep.end());
    return rep;
}

} // namespace polylin
