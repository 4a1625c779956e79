#pragma once

#include "polylin/scalar.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace polylin {

using Exponent = std::vector<std::int64_t>;

// Graded lexicographic order: total degree first, then lex. Used as the
// canonical term order everywhere (leading terms, serialization).
struct GlexLess {
    bool operator()(const Exponent& a, const Exponent& b) const;
};
struct GlexGreater {
    bool operator()(const Exponent& a, const Exponent& b) const { return GlexLess{}(b, a); }
};

// Laurent polynomial in `dim` variables over the session field. Exponents may
// be negative. Terms are kept in descending graded-lex order, so begin() is
// the leading term; zero coefficients are never stored.
class LaurentPoly {
public:
    using TermMap = std::map<Exponent, Scalar, GlexGreater>;

    LaurentPoly() = default;
    LaurentPoly(std::size_t dim, const Field& f) : dim_(dim), field_(f) {}
    static LaurentPoly constant(std::size_t dim, const Scalar& c);
    static LaurentPoly monomial(Exponent e, const Scalar& c);

    std::size_t dim() const { return dim_; }
    const Field& field() const { return field_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    void add_term(const Exponent& e, const Scalar& c);
    Scalar coefficient(const Exponent& e) const;

    const Exponent& leading_exponent() const;  // throws ZeroPolynomial
    const Scalar& leading_coefficient() const;
    bool is_monic() const { return !is_zero() && leading_coefficient().is_one(); }

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
    bool operator==(const LaurentPoly& o) const;
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    LaurentPoly scaled(const Scalar& c) const;
    LaurentPoly shifted(const Exponent& e) const;  // multiply by the monomial t^e
    LaurentPoly pow(unsigned e) const;

    // Componentwise min/max of the support. Throws ZeroPolynomial when empty.
    Exponent min_exponents() const;
    Exponent max_exponents() const;

    // Canonical split f = scalar * t^shift * unit_part, where unit_part has
    // zero componentwise-min exponents and leading coefficient 1.
    struct CanonicalParts;
    CanonicalParts canonical_parts() const;  // throws ZeroPolynomial

    std::vector<Exponent> support() const;

    // Human-readable form with variables Y (dim 1) or Y1..Yd, terms in
    // descending graded-lex order.
    std::string to_string() const;

private:
    std::size_t dim_ = 0;
    Field field_;
    TermMap terms_;
};

struct LaurentPoly::CanonicalParts {
    Scalar scale;
    Exponent shift;
    LaurentPoly unit_part;
};

// Exact quotient f / g; throws NotDivisible if g does not divide f exactly,
// DivisionByZero if g = 0.
LaurentPoly laurent_exact_div(const LaurentPoly& f, const LaurentPoly& g);

// Exact n-th root of a monic f (graded-lex leading coefficient 1, monomial
// content allowed). Throws NoExactRoot when f is not monic or not an exact
// n-th power over the session field.
LaurentPoly laurent_nth_root(const LaurentPoly& f, unsigned n);

// Greatest common divisor, monic-normalized with zero componentwise-min
// exponents; computed by primitive polynomial remainder sequences.
// gcd(0, 0) = 0.
LaurentPoly laurent_gcd(const LaurentPoly& f, const LaurentPoly& g);
LaurentPoly laurent_gcd(const std::vector<LaurentPoly>& fs);

} // namespace polylin
