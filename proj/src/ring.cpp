#include "lynmag/ring.hpp"

#include <stdexcept>
#include <utility>

namespace lynmag {

namespace mp = boost::multiprecision;

Ring Ring::integers_mod(BigInt m) {
    if (m < 2)
        throw std::invalid_argument("Ring::integers_mod: modulus must be >= 2");
    return Ring(RingKind::integers_mod, std::move(m));
}

std::string Ring::name() const {
    switch (kind_) {
    case RingKind::integers: return "Z";
    case RingKind::integers_mod: return "Z/" + modulus_.str();
    case RingKind::rationals: return "Q";
    }
    return "?";
}

Rational Ring::normalize(const Rational& c) const {
    switch (kind_) {
    case RingKind::rationals:
        return c;
    case RingKind::integers:
        if (mp::denominator(c) != 1)
            throw std::domain_error("non-integral coefficient in ring Z");
        return c;
    case RingKind::integers_mod: {
        BigInt num = mp::numerator(c);
        const BigInt& den = mp::denominator(c);
        if (den != 1)
            num *= mod_inverse(den, modulus_);
        BigInt r = num % modulus_;
        if (r < 0)
            r += modulus_;
        return Rational(r);
    }
    }
    throw std::logic_error("unreachable");
}

bool Ring::is_unit(const Rational& c) const {
    Rational v = normalize(c);
    switch (kind_) {
    case RingKind::rationals: return v != 0;
    case RingKind::integers: return v == 1 || v == -1;
    case RingKind::integers_mod: return mp::gcd(as_integer(v), modulus_) == 1;
    }
    return false;
}

Rational Ring::invert(const Rational& c) const {
    if (!is_unit(c))
        throw std::domain_error("not a unit in " + name());
    Rational v = normalize(c);
    if (kind_ == RingKind::integers_mod)
        return Rational(mod_inverse(as_integer(v), modulus_));
    return Rational(1) / v;
}

BigInt as_integer(const Rational& c) {
    if (mp::denominator(c) != 1)
        throw std::domain_error("value is not an integer");
    return mp::numerator(c);
}

bool divides(const BigInt& d, const Rational& c) {
    if (d == 0)
        throw std::invalid_argument("divides: zero divisor");
    return as_integer(c) % d == 0;
}

BigInt mod_inverse(BigInt a, const BigInt& m) {
    // extended Euclid
    a %= m;
    if (a < 0)
        a += m;
    BigInt r0 = m, r1 = a, s0 = 0, s1 = 1;
    while (r1 != 0) {
        BigInt q = r0 / r1;
        BigInt r2 = r0 - q * r1;
        BigInt s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    if (r0 != 1)
        throw std::domain_error("mod_inverse: value not invertible");
    if (s0 < 0)
        s0 += m;
    return s0;
}

BigInt binomial(const BigInt& n, const BigInt& k) {
    if (k < 0 || k > n)
        return 0;
    BigInt kk = k;
    if (n - k < kk)
        kk = n - k;
    BigInt r = 1;
    for (BigInt i = 1; i <= kk; ++i) {
        r *= n - kk + i;
        r /= i;  // exact: r is C(n-kk+i, i) after this step
    }
    return r;
}

BigInt pow_big(const BigInt& base, unsigned long exp) {
    BigInt r = 1, b = base;
    while (exp) {
        if (exp & 1)
            r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

}  // namespace lynmag
