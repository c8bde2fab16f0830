#include "deltaprod/exactnum.hpp"

#include <cmath>

namespace deltaprod {

double PiScaled::to_double() const {
    if (is_zero()) return 0.0;
    return q.to_double() * std::pow(M_PI, static_cast<double>(e) / 2.0);
}

std::string PiScaled::to_string() const {
    if (is_zero()) return "0";
    std::string s = q.to_string();
    if (e == 0) return s;
    s += " * pi^";
    if (e % 2 == 0) {
        s += std::to_string(e / 2);
    } else {
        s += "(" + std::to_string(e) + "/2)";
    }
    return s;
}

BigInt double_factorial(long n) {
    if (n < -1) throw std::invalid_argument("double_factorial: n must be >= -1");
    if (n <= 0) return BigInt(1);
    BigInt r;
    mpz_2fac_ui(r.raw(), static_cast<unsigned long>(n));
    return r;
}

BigInt binomial(long n, long k) {
    if (n < 0) throw std::invalid_argument("binomial: n must be >= 0");
    if (k < 0 || k > n) return BigInt(0);
    BigInt r;
    mpz_bin_uiui(r.raw(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

PiScaled gamma_half(long two_a) {
    if (two_a < 1) throw std::invalid_argument("gamma_half: argument must be positive");
    if (two_a % 2 == 0) {
        long m = two_a / 2;
        return PiScaled(BigRational(BigInt::factorial(static_cast<unsigned long>(m - 1))), 0);
    }
    long m = (two_a - 1) / 2;  // a = m + 1/2
    BigRational q(double_factorial(2 * m - 1), BigInt::pow2(static_cast<unsigned long>(m)));
    return PiScaled(std::move(q), 1);
}

BigRational gamma_ratio(long two_a, long m) {
    if (two_a < 1) throw std::invalid_argument("gamma_ratio: argument must be positive");
    if (m < 0) throw std::invalid_argument("gamma_ratio: m must be >= 0");
    if (m == 0) return BigRational(1);
    // 1/prod_{i=0}^{m-1} (a+i) = 2^m / prod_{i=0}^{m-1} (two_a + 2i)
    BigInt den(1);
    for (long i = 0; i < m; ++i) den *= (two_a + 2 * i);
    return BigRational(BigInt::pow2(static_cast<unsigned long>(m)), den);
}

}  // namespace deltaprod
