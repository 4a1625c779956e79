#include "polylin/laurent.hpp"

#include "polylin/errors.hpp"

#include <algorithm>
#include <numeric>

namespace polylin {

namespace {

void check_dims(const LaurentPoly& a, const LaurentPoly& b, const char* what) {
    if (a.dim() != b.dim())
        throw DomainError(errc::dimension_mismatch, std::string(what) + ": ambient dimensions differ");
    if (!a.is_zero() && !b.is_zero() && a.field() != b.field())
        throw DomainError(errc::field_mismatch, std::string(what) + ": coefficient fields differ");
}

std::int64_t total_degree(const Exponent& e) {
    return std::accumulate(e.begin(), e.end(), static_cast<std::int64_t>(0));
}

} // namespace

bool GlexLess::operator()(const Exponent& a, const Exponent& b) const {
    std::int64_t da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a < b;
}

LaurentPoly LaurentPoly::constant(std::size_t dim, const Scalar& c) {
    LaurentPoly p(dim, c.field());
    p.add_term(Exponent(dim, 0), c);
    return p;
}

LaurentPoly LaurentPoly::monomial(Exponent e, const Scalar& c) {
    LaurentPoly p(e.size(), c.field());
    p.add_term(e, c);
    return p;
}

void LaurentPoly::add_term(const Exponent& e, const Scalar& c) {
    if (e.size() != dim_)
        throw DomainError(errc::dimension_mismatch, "term exponent length mismatch");
    if (c.field() != field_)
        throw DomainError(errc::field_mismatch, "term coefficient field mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Scalar LaurentPoly::coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? field_.zero() : it->second;
}

const Exponent& LaurentPoly::leading_exponent() const {
    if (is_zero()) throw DomainError(errc::zero_polynomial, "leading term of zero");
    return terms_.begin()->first;
}

const Scalar& LaurentPoly::leading_coefficient() const {
    if (is_zero()) throw DomainError(errc::zero_polynomial, "leading term of zero");
    return terms_.begin()->second;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(dim_, field_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    check_dims(*this, o, "sum");
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    check_dims(*this, o, "difference");
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    check_dims(*this, o, "product");
    LaurentPoly r(dim_, is_zero() ? o.field_ : field_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            Exponent e = e1;
            for (std::size_t i = 0; i < dim_; ++i) e[i] += e2[i];
            r.add_term(e, c1 * c2);
        }
    return r;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
    if (dim_ != o.dim_) return false;
    if (terms_.size() != o.terms_.size()) return false;
    auto it = terms_.begin(), jt = o.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt)
        if (it->first != jt->first || it->second != jt->second) return false;
    return true;
}

LaurentPoly LaurentPoly::scaled(const Scalar& c) const {
    LaurentPoly r(dim_, field_);
    if (c.is_zero()) return r;
    for (const auto& [e, coeff] : terms_) r.terms_.emplace(e, coeff * c);
    return r;
}

LaurentPoly LaurentPoly::shifted(const Exponent& s) const {
    if (s.size() != dim_)
        throw DomainError(errc::dimension_mismatch, "shift exponent length mismatch");
    LaurentPoly r(dim_, field_);
    for (const auto& [e, c] : terms_) {
        Exponent e2 = e;
        for (std::size_t i = 0; i < dim_; ++i) e2[i] += s[i];
        r.terms_.emplace(std::move(e2), c);
    }
    return r;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
    LaurentPoly acc = constant(dim_, field_.one());
    LaurentPoly base = *this;
    while (e > 0) {
        if (e & 1u) acc *= base;
        base *= base;
        e >>= 1u;
    }
    return acc;
}

Exponent LaurentPoly::min_exponents() const {
    if (is_zero()) throw DomainError(errc::zero_polynomial, "min exponents of zero");
    Exponent m = terms_.begin()->first;
    for (const auto& [e, c] : terms_)
        for (std::size_t i = 0; i < dim_; ++i) m[i] = std::min(m[i], e[i]);
    return m;
}

Exponent LaurentPoly::max_exponents() const {
    if (is_zero()) throw DomainError(errc::zero_polynomial, "max exponents of zero");
    Exponent m = terms_.begin()->first;
    for (const auto& [e, c] : terms_)
        for (std::size_t i = 0; i < dim_; ++i) m[i] = std::max(m[i], e[i]);
    return m;
}

LaurentPoly::CanonicalParts LaurentPoly::canonical_parts() const {
    if (is_zero()) throw DomainError(errc::zero_polynomial, "canonical parts of zero");
    CanonicalParts parts;
    parts.scale = leading_coefficient();
    parts.shift = min_exponents();
    Exponent neg = parts.shift;
    for (auto& v : neg) v = -v;
    parts.unit_part = scaled(parts.scale.inverse()).shifted(neg);
    return parts;
}

std::vector<Exponent> LaurentPoly::support() const {
    std::vector<Exponent> s;
    s.reserve(terms_.size());
    for (const auto& [e, c] : terms_) s.push_back(e);
    return s;
}

std::string LaurentPoly::to_string() const {
    if (is_zero()) return "0";
    auto var_name = [&](std::size_t i) {
        return dim_ == 1 ? std::string("Y") : "Y" + std::to_string(i + 1);
    };
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::string coeff = c.to_string();
        bool neg = !coeff.empty() && coeff[0] == '-';
        std::string mag = neg ? coeff.substr(1) : coeff;
        std::string mono;
        for (std::size_t i = 0; i < dim_; ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += var_name(i);
            if (e[i] != 1) mono += "^" + std::to_string(e[i]);
        }
        std::string body;
        if (mono.empty())
            body = mag;
        else if (mag == "1")
            body = mono;
        else
            body = mag + "*" + mono;
        if (first) {
            out = (neg ? "-" : "") + body;
            first = false;
        } else {
            out += (neg ? " - " : " + ") + body;
        }
    }
    return out;
}

LaurentPoly laurent_exact_div(const LaurentPoly& f, const LaurentPoly& g) {
    check_dims(f, g, "quotient");
    if (g.is_zero()) throw DomainError(errc::division_by_zero, "division by zero polynomial");
    if (f.is_zero()) return LaurentPoly(f.dim(), g.field());
    auto fp = f.canonical_parts();
    auto gp = g.canonical_parts();
    const std::size_t d = f.dim();
    LaurentPoly quotient(d, f.field());
    LaurentPoly r = fp.unit_part;
    const LaurentPoly& g0 = gp.unit_part;
    const Exponent& ge = g0.leading_exponent();
    while (!r.is_zero()) {
        Exponent u = r.leading_exponent();
        for (std::size_t i = 0; i < d; ++i) {
            u[i] -= ge[i];
            if (u[i] < 0)
                throw DomainError(errc::not_divisible, "leading term not divisible");
        }
        Scalar cb = r.leading_coefficient();  // g0 is monic
        quotient.add_term(u, cb);
        r -= LaurentPoly::monomial(u, cb) * g0;
    }
    Exponent shift(d, 0);
    for (std::size_t i = 0; i < d; ++i) shift[i] = fp.shift[i] - gp.shift[i];
    return quotient.scaled(fp.scale / gp.scale).shifted(shift);
}

namespace {

// n-th root of a polynomial with zero min-exponents, leading coefficient 1,
// in characteristic not dividing n.
LaurentPoly unit_nth_root(const LaurentPoly& f0, unsigned n) {
    const std::size_t d = f0.dim();
    const Field& field = f0.field();
    Exponent le = f0.leading_exponent();
    Exponent le_root(d, 0);
    for (std::size_t i = 0; i < d; ++i) {
        if (le[i] % static_cast<std::int64_t>(n) != 0)
            throw DomainError(errc::no_exact_root, "leading exponent not divisible");
        le_root[i] = le[i] / n;
    }
    Exponent box = f0.max_exponents();
    LaurentPoly eta = LaurentPoly::monomial(le_root, field.one());
    Scalar n_inv = field.from_int(static_cast<long long>(n)).inverse();
    for (std::size_t iter = 0; iter < 200000; ++iter) {
        LaurentPoly r = f0 - eta.pow(n);
        if (r.is_zero()) return eta;
        Exponent w = r.leading_exponent();
        Exponent u(d, 0);
        for (std::size_t i = 0; i < d; ++i) {
            u[i] = w[i] - static_cast<std::int64_t>(n - 1) * le_root[i];
            if (u[i] < 0 || u[i] * static_cast<std::int64_t>(n) > box[i])
                throw DomainError(errc::no_exact_root, "no exact root");
        }
        if (!eta.coefficient(u).is_zero())
            throw DomainError(errc::no_exact_root, "no exact root");
        eta.add_term(u, r.leading_coefficient() * n_inv);
    }
    throw DomainError(errc::no_exact_root, "root iteration bound exceeded");
}

} // namespace

LaurentPoly laurent_nth_root(const LaurentPoly& f, unsigned n) {
    if (n == 0) throw DomainError(errc::no_exact_root, "0-th root");
    if (f.is_zero() || n == 1) return f;
    auto parts = f.canonical_parts();
    if (!parts.scale.is_one())
        throw DomainError(errc::no_exact_root, "polynomial is not monic");
    const std::size_t d = f.dim();
    Exponent shift(d, 0);
    for (std::size_t i = 0; i < d; ++i) {
        if (parts.shift[i] % static_cast<std::int64_t>(n) != 0)
            throw DomainError(errc::no_exact_root, "monomial content not an n-th power");
        shift[i] = parts.shift[i] / n;
    }
    LaurentPoly f0 = parts.unit_part;
    unsigned m = n;
    const std::uint64_t p = f.field().characteristic();
    // In characteristic p, p-th roots come from dividing exponents by p.
    while (p > 0 && m % p == 0) {
        LaurentPoly g(d, f.field());
        for (const auto& [e, c] : f0.terms()) {
            Exponent e2(d, 0);
            for (std::size_t i = 0; i < d; ++i) {
                if (e[i] % static_cast<std::int64_t>(p) != 0)
                    throw DomainError(errc::no_exact_root, "no exact root");
                e2[i] = e[i] / p;
            }
            g.add_term(e2, c);
        }
        f0 = g;
        m = static_cast<unsigned>(m / p);
    }
    LaurentPoly root = (m == 1) ? f0 : unit_nth_root(f0, m);
    return root.shifted(shift);
}

namespace {

std::int64_t degree_in(const LaurentPoly& f, std::size_t v) {
    std::int64_t d = 0;
    for (const auto& [e, c] : f.terms()) d = std::max(d, e[v]);
    return d;
}

bool uses_variable(const LaurentPoly& f, std::size_t v) {
    for (const auto& [e, c] : f.terms())
        if (e[v] != 0) return true;
    return false;
}

// Coefficient of x_v^k, as a polynomial with the v-exponent zeroed out.
LaurentPoly coefficient_in(const LaurentPoly& f, std::size_t v, std::int64_t k) {
    LaurentPoly r(f.dim(), f.field());
    for (const auto& [e, c] : f.terms()) {
        if (e[v] != k) continue;
        Exponent e2 = e;
        e2[v] = 0;
        r.add_term(e2, c);
    }
    return r;
}

LaurentPoly leading_coefficient_in(const LaurentPoly& f, std::size_t v) {
    return coefficient_in(f, v, degree_in(f, v));
}

LaurentPoly variable_power(std::size_t dim, std::size_t v, std::int64_t k, const Field& field) {
    Exponent e(dim, 0);
    e[v] = k;
    return LaurentPoly::monomial(e, field.one());
}

// Pseudo-remainder of a by b with respect to variable v.
LaurentPoly pseudo_remainder(LaurentPoly a, const LaurentPoly& b, std::size_t v) {
    const LaurentPoly lb = leading_coefficient_in(b, v);
    const std::int64_t db = degree_in(b, v);
    while (!a.is_zero() && degree_in(a, v) >= db) {
        LaurentPoly la = leading_coefficient_in(a, v);
        std::int64_t da = degree_in(a, v);
        a = lb * a - la * variable_power(a.dim(), v, da - db, a.field()) * b;
    }
    return a;
}

LaurentPoly gcd_impl(const LaurentPoly& f, const LaurentPoly& g);

// Content of f with respect to variable v: gcd of its v-coefficients.
LaurentPoly content_in(const LaurentPoly& f, std::size_t v) {
    LaurentPoly c(f.dim(), f.field());
    for (std::int64_t k = 0; k <= degree_in(f, v); ++k) {
        LaurentPoly coeff = coefficient_in(f, v, k);
        if (coeff.is_zero()) continue;
        c = c.is_zero() ? coeff.canonical_parts().unit_part : gcd_impl(c, coeff);
    }
    return c;
}

LaurentPoly primitive_part_in(const LaurentPoly& f, std::size_t v) {
    if (f.is_zero()) return f;
    return laurent_exact_div(f, content_in(f, v)).canonical_parts().unit_part;
}

// Both inputs nonzero with zero min-exponents; result monic with zero
// min-exponents.
LaurentPoly gcd_impl(const LaurentPoly& f, const LaurentPoly& g) {
    const std::size_t d = f.dim();
    std::size_t v = d;
    for (std::size_t i = 0; i < d; ++i)
        if (uses_variable(f, i) || uses_variable(g, i)) { v = i; break; }
    if (v == d) return LaurentPoly::constant(d, f.field().one());

    LaurentPoly cf = content_in(f, v), cg = content_in(g, v);
    LaurentPoly c = gcd_impl(cf, cg);
    LaurentPoly a = laurent_exact_div(f, cf).canonical_parts().unit_part;
    LaurentPoly b = laurent_exact_div(g, cg).canonical_parts().unit_part;
    if (degree_in(a, v) < degree_in(b, v)) std::swap(a, b);
    while (!b.is_zero()) {
        LaurentPoly r = pseudo_remainder(a, b, v);
        a = b;
        b = r.is_zero() ? r : primitive_part_in(r, v);
    }
    LaurentPoly result = c * primitive_part_in(a, v);
    return result.canonical_parts().unit_part;
}

} // namespace

LaurentPoly laurent_gcd(const LaurentPoly& f, const LaurentPoly& g) {
    if (f.is_zero() && g.is_zero()) return f.dim() >= g.dim() ? f : g;
    if (f.is_zero()) return g.canonical_parts().unit_part;
    if (g.is_zero()) return f.canonical_parts().unit_part;
    check_dims(f, g, "gcd");
    return gcd_impl(f.canonical_parts().unit_part, g.canonical_parts().unit_part);
}

LaurentPoly laurent_gcd(const std::vector<LaurentPoly>& fs) {
    if (fs.empty()) throw DomainError(errc::zero_polynomial, "gcd of empty list");
    LaurentPoly acc = fs.front().is_zero() ? fs.front() : fs.front().canonical_parts().unit_part;
    for (std::size_t i = 1; i < fs.size(); ++i) {
        acc = laurent_gcd(acc, fs[i]);
        if (!acc.is_zero() && acc.term_count() == 1 && acc.leading_exponent() == Exponent(acc.dim(), 0))
            break;  // gcd is already 1
    }
    return acc;
}

} // namespace polylin
