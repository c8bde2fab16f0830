#pragma once

#include <string>

#include "deltaprod/rational.hpp"

namespace deltaprod {

// Exact value of the form q * pi^(e/2) with q rational and e a (possibly
// negative) integer.  Since sqrt(pi) is transcendental the representation is
// unique, so equality is plain (q, e) comparison.  Canonical form: q == 0
// implies e == 0.
struct PiScaled {
    BigRational q;
    long e = 0;

    PiScaled() = default;
    PiScaled(BigRational q_, long e_) : q(std::move(q_)), e(e_) {
        if (q.is_zero()) e = 0;
    }

    static PiScaled zero() { return PiScaled(); }
    static PiScaled one() { return PiScaled(BigRational(1), 0); }
    // pi^(e/2)
    static PiScaled pi_pow(long e) { return PiScaled(BigRational(1), e); }

    bool is_zero() const { return q.is_zero(); }

    friend PiScaled operator*(const PiScaled& a, const PiScaled& b) {
        return PiScaled(a.q * b.q, a.e + b.e);
    }
    friend PiScaled operator*(const PiScaled& a, const BigRational& r) {
        return PiScaled(a.q * r, a.e);
    }
    friend PiScaled operator*(const BigRational& r, const PiScaled& a) { return a * r; }

    PiScaled inverse() const {
        if (is_zero()) throw std::invalid_argument("PiScaled: inverse of zero");
        return PiScaled(BigRational(1) / q, -e);
    }
    friend PiScaled operator/(const PiScaled& a, const PiScaled& b) { return a * b.inverse(); }

    friend bool operator==(const PiScaled& a, const PiScaled& b) {
        return a.e == b.e && a.q == b.q;
    }
    friend bool operator!=(const PiScaled& a, const PiScaled& b) { return !(a == b); }

    double to_double() const;

    // "1/2 * pi^-1", "3/4 * pi^(1/2)", "0"
    std::string to_string() const;
};

// n!! with the empty-product convention (-1)!! = 0!! = 1.  Rejects n < -1.
BigInt double_factorial(long n);

// Binomial coefficient; 0 when k < 0 or k > n.  Rejects n < 0.
BigInt binomial(long n, long k);

// Exact Gamma(a) for a = two_a/2 > 0: (m-1)! at integer a = m, and
// ((2m-1)!!/2^m) * sqrt(pi) at a = m + 1/2.  Rejects two_a < 1.
PiScaled gamma_half(long two_a);

// Gamma(a)/Gamma(a+m) for a = two_a/2 > 0 and integer m >= 0, evaluated as
// the reciprocal rising factorial 1/(a (a+1) ... (a+m-1)).  Always rational.
BigRational gamma_ratio(long two_a, long m);

}  // namespace deltaprod
