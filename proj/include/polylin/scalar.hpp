#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace polylin {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

class Scalar;

// Coefficient field for a session: the rationals (characteristic 0) or a
// prime field F_p. Every Scalar carries its field tag; mixing fields throws.
class Field {
public:
    Field() = default;
    static Field rationals() { return Field(); }
    static Field prime(std::uint64_t p);

    std::uint64_t characteristic() const { return p_; }
    bool is_rationals() const { return p_ == 0; }
    bool operator==(const Field&) const = default;

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(long long v) const;
    Scalar from_integer(const Int& v) const;
    Scalar from_rational(const Rat& v) const;
    // Accepts "a" and "a/b" with optional sign, e.g. "-3/7".
    Scalar parse(const std::string& text) const;

    std::string describe() const;

private:
    explicit Field(std::uint64_t p) : p_(p) {}
    std::uint64_t p_ = 0;
};

// An element of the session field, exact. Rationals are kept reduced; prime
// field elements are canonical residues in [0, p).
class Scalar {
public:
    Scalar() = default;  // zero over the rationals

    const Field& field() const { return field_; }
    bool is_zero() const { return value_ == 0; }
    bool is_one() const { return value_ == 1; }

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;  // throws DivisionByZero
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    Scalar inverse() const;
    // Integer power, negative exponents allowed on nonzero elements.
    Scalar pow(long long e) const;
    // Exact n-th root in the field if one exists. Even roots of rationals
    // prefer the nonnegative choice; F_p picks the smallest residue.
    std::optional<Scalar> nth_root(unsigned n) const;

    // Only meaningful over the rationals.
    const Rat& rational_value() const { return value_; }

    std::string to_string() const;

private:
    friend class Field;
    Scalar(Field f, Rat v) : field_(f), value_(std::move(v)) {}
    void check_same_field(const Scalar& o) const;

    Field field_;
    Rat value_ = 0;
};

// Exact binomial coefficient; zero for k < 0 or k > n.
Int binomial(const Int& n, const Int& k);

// Floor of the n-th root of a nonnegative integer.
Int integer_nth_root(const Int& v, unsigned n);

} // namespace polylin
