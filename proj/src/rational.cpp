#include "rvf/rational.hpp"

#include <mutex>
#include <ostream>
#include <vector>

namespace rvf {

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

BigInt binomial(unsigned long n, unsigned long k) {
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

Rational bernoulli(unsigned n) {
    static std::vector<Rational> cache{Rational(1), Rational(-1, 2)};
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    while (cache.size() <= n) {
        // B_m = -1/(m+1) * sum_{k=0}^{m-1} C(m+1,k) B_k
        unsigned m = static_cast<unsigned>(cache.size());
        Rational acc;
        for (unsigned k = 0; k < m; ++k)
            acc += Rational(binomial(m + 1, k)) * cache[k];
        cache.push_back(-acc / Rational(static_cast<long long>(m) + 1));
    }
    return cache[n];
}

BigInt divisor_sigma(unsigned mu, const BigInt& n) {
    if (n <= 0) throw InvalidArgument("divisor_sigma: n must be positive");
    BigInt total = 0;
    BigInt d = 1;
    for (; d * d <= n; ++d) {
        if (n % d != 0) continue;
        BigInt dp, qp;
        mpz_pow_ui(dp.get_mpz_t(), d.get_mpz_t(), mu);
        total += dp;
        BigInt q = n / d;
        if (q != d) {
            mpz_pow_ui(qp.get_mpz_t(), q.get_mpz_t(), mu);
            total += qp;
        }
    }
    return total;
}

BigInt divisor_sigma(unsigned mu, unsigned long n) {
    return divisor_sigma(mu, BigInt(n));
}

} // namespace rvf
