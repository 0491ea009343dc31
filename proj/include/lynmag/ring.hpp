#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace lynmag {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact coefficient domains. All arithmetic in the library is exact: big
/// integers, residues mod m (canonical representatives 0..m-1), or rationals
/// in lowest terms. There is no floating point anywhere.
enum class RingKind { integers, integers_mod, rationals };

class Ring {
  public:
    static Ring integers() { return Ring(RingKind::integers, 0); }
    static Ring integers_mod(BigInt m);
    static Ring rationals() { return Ring(RingKind::rationals, 0); }

    RingKind kind() const { return kind_; }
    bool is_mod() const { return kind_ == RingKind::integers_mod; }
    const BigInt& modulus() const { return modulus_; }

    bool operator==(const Ring& o) const {
        return kind_ == o.kind_ && modulus_ == o.modulus_;
    }
    bool operator!=(const Ring& o) const { return !(*this == o); }

    /// "Z", "Z/8", or "Q".
    std::string name() const;

    /// Bring a raw value into canonical form for this ring. Over Z the value
    /// must be integral; over Z/m non-integral values are accepted only when
    /// the denominator is a unit mod m.
    Rational normalize(const Rational& c) const;

    Rational add(const Rational& a, const Rational& b) const { return normalize(a + b); }
    Rational sub(const Rational& a, const Rational& b) const { return normalize(a - b); }
    Rational mul(const Rational& a, const Rational& b) const { return normalize(a * b); }
    Rational neg(const Rational& a) const { return normalize(-a); }

    bool is_zero(const Rational& c) const { return normalize(c) == 0; }
    bool is_one(const Rational& c) const { return normalize(c) == 1; }

    /// Whether c is a unit (invertible) in this ring.
    bool is_unit(const Rational& c) const;
    /// Multiplicative inverse of a unit; throws std::domain_error otherwise.
    Rational invert(const Rational& c) const;

  private:
    Ring(RingKind k, BigInt m) : kind_(k), modulus_(std::move(m)) {}
    RingKind kind_;
    BigInt modulus_;
};

/// Numerator of an integral value; throws if c has a denominator.
BigInt as_integer(const Rational& c);

/// d | c, for integral c and d != 0.
bool divides(const BigInt& d, const Rational& c);

/// Inverse of a mod m (gcd(a,m) = 1 required).
BigInt mod_inverse(BigInt a, const BigInt& m);

/// Exact binomial coefficient C(n, k), with C(n, k) = 0 for k < 0 or k > n.
BigInt binomial(const BigInt& n, const BigInt& k);

/// base^exp for exp >= 0.
BigInt pow_big(const BigInt& base, unsigned long exp);

}  // namespace lynmag
