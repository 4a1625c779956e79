#include "polylin/scalar.hpp"

#include "polylin/errors.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

namespace polylin {

namespace {

Int mod_reduce(const Int& v, std::uint64_t p) {
    Int m = v % Int(p);
    if (m < 0) m += p;
    return m;
}

// Modular inverse via extended Euclid; a must be nonzero mod p.
Int mod_inverse(const Int& a, std::uint64_t p) {
    Int r0 = Int(p), r1 = mod_reduce(a, p);
    Int s0 = 0, s1 = 1;
    while (r1 != 0) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        Int s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    if (r0 != 1)
        throw DomainError(errc::division_by_zero, "element has no inverse mod " + std::to_string(p));
    return mod_reduce(s0, p);
}

} // namespace

Field Field::prime(std::uint64_t p) {
    if (p < 2 || !boost::multiprecision::miller_rabin_test(Int(p), 32))
        throw DomainError(errc::not_prime, std::to_string(p) + " is not prime");
    return Field(p);
}

Scalar Field::zero() const { return Scalar(*this, Rat(0)); }
Scalar Field::one() const { return Scalar(*this, Rat(1)); }

Scalar Field::from_int(long long v) const { return from_integer(Int(v)); }

Scalar Field::from_integer(const Int& v) const {
    if (p_ == 0) return Scalar(*this, Rat(v));
    return Scalar(*this, Rat(mod_reduce(v, p_)));
}

Scalar Field::from_rational(const Rat& v) const {
    if (p_ == 0) return Scalar(*this, v);
    Int den = mod_reduce(denominator(v), p_);
    if (den == 0)
        throw DomainError(errc::division_by_zero,
                          "denominator vanishes in F_" + std::to_string(p_));
    Int num = mod_reduce(numerator(v), p_);
    return Scalar(*this, Rat(mod_reduce(num * mod_inverse(den, p_), p_)));
}

Scalar Field::parse(const std::string& text) const {
    auto bad = [&]() {
        return DomainError(errc::parse_error, "not a scalar literal: '" + text + "'");
    };
    if (text.empty()) throw bad();
    std::string s = text;
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return from_integer(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw bad();
        return from_rational(Rat(num, den));
    } catch (const std::runtime_error&) {
        throw bad();
    }
}

std::string Field::describe() const {
    return p_ == 0 ? "Q" : "F_" + std::to_string(p_);
}

void Scalar::check_same_field(const Scalar& o) const {
    if (field_ != o.field_)
        throw DomainError(errc::field_mismatch,
                          field_.describe() + " vs " + o.field_.describe());
}

Scalar Scalar::operator-() const {
    if (field_.is_rationals()) return Scalar(field_, -value_);
    return field_.from_integer(-numerator(value_));
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    if (field_.is_rationals()) return Scalar(field_, value_ + o.value_);
    return field_.from_integer(numerator(value_) + numerator(o.value_));
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same_field(o);
    if (field_.is_rationals()) return Scalar(field_, value_ - o.value_);
    return field_.from_integer(numerator(value_) - numerator(o.value_));
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    if (field_.is_rationals()) return Scalar(field_, value_ * o.value_);
    return field_.from_integer(numerator(value_) * numerator(o.value_));
}

Scalar Scalar::operator/(const Scalar& o) const {
    check_same_field(o);
    return *this * o.inverse();
}

bool Scalar::operator==(const Scalar& o) const {
    return field_ == o.field_ && value_ == o.value_;
}

Scalar Scalar::inverse() const {
    if (is_zero())
        throw DomainError(errc::division_by_zero, "inverse of zero");
    if (field_.is_rationals()) return Scalar(field_, Rat(1) / value_);
    return Scalar(field_, Rat(mod_inverse(numerator(value_), field_.characteristic())));
}

Scalar Scalar::pow(long long e) const {
    Scalar base = *this;
    if (e < 0) {
        base = base.inverse();
        e = -e;
    }
    Scalar acc = field_.one();
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

std::optional<Scalar> Scalar::nth_root(unsigned n) const {
    if (n == 0) throw DomainError(errc::no_exact_root, "0-th root");
    if (n == 1 || is_zero()) return *this;
    if (field_.is_rationals()) {
        Int num = numerator(value_), den = denominator(value_);
        bool neg = num < 0;
        if (neg) {
            if (n % 2 == 0) return std::nullopt;
            num = -num;
        }
        Int rn = integer_nth_root(num, n);
        Int rd = integer_nth_root(den, n);
        if (boost::multiprecision::pow(rn, n) != num) return std::nullopt;
        if (boost::multiprecision::pow(rd, n) != den) return std::nullopt;
        if (neg) rn = -rn;
        return Scalar(field_, Rat(rn, rd));
    }
    std::uint64_t p = field_.characteristic();
    for (std::uint64_t u = 0; u < p; ++u) {
        Scalar cand = field_.from_integer(Int(u));
        if (cand.pow(n) == *this) return cand;
    }
    return std::nullopt;
}

std::string Scalar::to_string() const {
    Int num = numerator(value_), den = denominator(value_);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Int binomial(const Int& n, const Int& k) {
    if (k < 0 || k > n) return 0;
    Int kk = k;
    if (n - k < kk) kk = n - k;
    Int result = 1;
    for (Int i = 0; i < kk; ++i) {
        result *= (n - i);
        result /= (i + 1);
    }
    return result;
}

Int integer_nth_root(const Int& v, unsigned n) {
    if (v < 0) throw DomainError(errc::no_exact_root, "n-th root of negative integer");
    if (v == 0 || v == 1 || n == 1) return v;
    Int lo = 0, hi = v;
    while (lo < hi) {
        Int mid = (lo + hi + 1) / 2;
        if (boost::multiprecision::pow(mid, n) <= v)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

} // namespace polylin
