#pragma once

#include <gmp.h>

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>

namespace deltaprod {

// Arbitrary-precision signed integer, a thin RAII wrapper over GMP's mpz_t.
class BigInt {
public:
    BigInt() { mpz_init(v_); }
    BigInt(long n) { mpz_init_set_si(v_, n); }  // NOLINT: implicit by design
    explicit BigInt(const std::string& s) {
        if (mpz_init_set_str(v_, s.c_str(), 10) != 0) {
            mpz_clear(v_);
            throw std::invalid_argument("BigInt: cannot parse \"" + s + "\"");
        }
    }
    BigInt(const BigInt& o) { mpz_init_set(v_, o.v_); }
    BigInt(BigInt&& o) noexcept {
        mpz_init(v_);
        mpz_swap(v_, o.v_);
    }
    BigInt& operator=(const BigInt& o) {
        if (this != &o) mpz_set(v_, o.v_);
        return *this;
    }
    BigInt& operator=(BigInt&& o) noexcept {
        mpz_swap(v_, o.v_);
        return *this;
    }
    ~BigInt() { mpz_clear(v_); }

    static BigInt factorial(unsigned long n) {
        BigInt r;
        mpz_fac_ui(r.v_, n);
        return r;
    }
    static BigInt pow2(unsigned long e) {
        BigInt r{1};
        mpz_mul_2exp(r.v_, r.v_, e);
        return r;
    }

    BigInt& operator+=(const BigInt& o) {
        mpz_add(v_, v_, o.v_);
        return *this;
    }
    BigInt& operator-=(const BigInt& o) {
        mpz_sub(v_, v_, o.v_);
        return *this;
    }
    BigInt& operator*=(const BigInt& o) {
        mpz_mul(v_, v_, o.v_);
        return *this;
    }
    BigInt& operator*=(long n) {
        mpz_mul_si(v_, v_, n);
        return *this;
    }
    friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
    friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
    friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }
    friend BigInt operator*(BigInt a, long b) { return a *= b; }
    friend BigInt operator*(long a, BigInt b) { return b *= a; }
    BigInt operator-() const {
        BigInt r(*this);
        mpz_neg(r.v_, r.v_);
        return r;
    }

    // Exact quotient; caller guarantees divisibility.
    BigInt divexact(const BigInt& d) const {
        BigInt r;
        mpz_divexact(r.v_, v_, d.v_);
        return r;
    }

    friend bool operator==(const BigInt& a, const BigInt& b) { return mpz_cmp(a.v_, b.v_) == 0; }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b) { return mpz_cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }
    friend bool operator==(const BigInt& a, long b) { return mpz_cmp_si(a.v_, b) == 0; }
    friend bool operator!=(const BigInt& a, long b) { return !(a == b); }

    int sign() const { return mpz_sgn(v_); }
    bool is_zero() const { return mpz_sgn(v_) == 0; }
    double to_double() const { return mpz_get_d(v_); }

    std::string to_string() const {
        char* s = mpz_get_str(nullptr, 10, v_);
        std::string r(s);
        std::free(s);
        return r;
    }

    mpz_srcptr raw() const { return v_; }
    mpz_ptr raw() { return v_; }

private:
    mpz_t v_;
};

// Arbitrary-precision rational, always canonical: denominator > 0 and
// gcd(|num|, den) = 1 after every operation (GMP maintains this for the
// arithmetic entry points; constructors canonicalize explicitly).
class BigRational {
public:
    BigRational() { mpq_init(v_); }
    BigRational(long n) {  // NOLINT: implicit by design
        mpq_init(v_);
        mpq_set_si(v_, n, 1);
    }
    BigRational(long num, long den) {
        mpq_init(v_);
        if (den == 0) {
            mpq_clear(v_);
            throw std::invalid_argument("BigRational: zero denominator");
        }
        mpz_set_si(mpq_numref(v_), num);
        mpz_set_si(mpq_denref(v_), den);
        mpq_canonicalize(v_);
    }
    explicit BigRational(const BigInt& n) {
        mpq_init(v_);
        mpq_set_z(v_, n.raw());
    }
    BigRational(const BigInt& num, const BigInt& den) {
        mpq_init(v_);
        if (den.is_zero()) {
            mpq_clear(v_);
            throw std::invalid_argument("BigRational: zero denominator");
        }
        mpz_set(mpq_numref(v_), num.raw());
        mpz_set(mpq_denref(v_), den.raw());
        mpq_canonicalize(v_);
    }
    // Parses "num/den" or a plain integer string.
    explicit BigRational(const std::string& s) {
        mpq_init(v_);
        if (mpq_set_str(v_, s.c_str(), 10) != 0 || mpz_sgn(mpq_denref(v_)) == 0) {
            mpq_clear(v_);
            throw std::invalid_argument("BigRational: cannot parse \"" + s + "\"");
        }
        mpq_canonicalize(v_);
    }
    BigRational(const BigRational& o) {
        mpq_init(v_);
        mpq_set(v_, o.v_);
    }
    BigRational(BigRational&& o) noexcept {
        mpq_init(v_);
        mpq_swap(v_, o.v_);
    }
    BigRational& operator=(const BigRational& o) {
        if (this != &o) mpq_set(v_, o.v_);
        return *this;
    }
    BigRational& operator=(BigRational&& o) noexcept {
        mpq_swap(v_, o.v_);
        return *this;
    }
    ~BigRational() { mpq_clear(v_); }

    BigRational& operator+=(const BigRational& o) {
        mpq_add(v_, v_, o.v_);
        return *this;
    }
    BigRational& operator-=(const BigRational& o) {
        mpq_sub(v_, v_, o.v_);
        return *this;
    }
    BigRational& operator*=(const BigRational& o) {
        mpq_mul(v_, v_, o.v_);
        return *this;
    }
    BigRational& operator/=(const BigRational& o) {
        if (o.is_zero()) throw std::invalid_argument("BigRational: division by zero");
        mpq_div(v_, v_, o.v_);
        return *this;
    }
    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
    BigRational operator-() const {
        BigRational r(*this);
        mpq_neg(r.v_, r.v_);
        return r;
    }

    BigRational& mul_2exp(unsigned long e) {
        mpq_mul_2exp(v_, v_, e);
        return *this;
    }
    BigRational& div_2exp(unsigned long e) {
        mpq_div_2exp(v_, v_, e);
        return *this;
    }

    friend bool operator==(const BigRational& a, const BigRational& b) {
        return mpq_equal(a.v_, b.v_) != 0;
    }
    friend bool operator!=(const BigRational& a, const BigRational& b) { return !(a == b); }
    friend bool operator<(const BigRational& a, const BigRational& b) {
        return mpq_cmp(a.v_, b.v_) < 0;
    }
    friend bool operator>(const BigRational& a, const BigRational& b) { return b < a; }
    friend bool operator<=(const BigRational& a, const BigRational& b) { return !(b < a); }
    friend bool operator>=(const BigRational& a, const BigRational& b) { return !(a < b); }

    int sign() const { return mpq_sgn(v_); }
    bool is_zero() const { return mpq_sgn(v_) == 0; }

    BigInt numerator() const {
        BigInt r;
        mpz_set(r.raw(), mpq_numref(v_));
        return r;
    }
    BigInt denominator() const {
        BigInt r;
        mpz_set(r.raw(), mpq_denref(v_));
        return r;
    }

    double to_double() const { return mpq_get_d(v_); }

    // Canonical "num/den" form, denominator always present ("0/1", "-1/6").
    std::string to_fraction_string() const {
        return numerator().to_string() + "/" + denominator().to_string();
    }
    // Human form: omits the denominator when it is 1.
    std::string to_string() const {
        char* s = mpq_get_str(nullptr, 10, v_);
        std::string r(s);
        std::free(s);
        return r;
    }

    mpq_srcptr raw() const { return v_; }
    mpq_ptr raw() { return v_; }

private:
    mpq_t v_;
};

}  // namespace deltaprod
