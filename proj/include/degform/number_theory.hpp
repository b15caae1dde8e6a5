#pragma once

#include <vector>

#include "degform/rational.hpp"

namespace degform {

inline BigInt factorial(int n) {
    if (n < 0)
        throw invalid_operand_error("factorial: negative argument");
    BigInt r = 1;
    for (int i = 2; i <= n; ++i)
        r *= i;
    return r;
}

/* binomial(n, k) = 0 for k < 0 or k > n. */
inline BigInt binomial(int n, int k) {
    if (k < 0 || k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i; // exact at every step: r is C(n-k+i, i)
    }
    return r;
}

inline bool is_prime(int p) {
    if (p < 2)
        return false;
    for (int q = 2; q * q <= p; ++q)
        if (p % q == 0)
            return false;
    return true;
}

inline std::vector<int> primes_up_to(int n) {
    std::vector<int> ps;
    for (int p = 2; p <= n; ++p)
        if (is_prime(p))
            ps.push_back(p);
    return ps;
}

/* Largest e with p^e dividing n. Undefined at n = 0. */
inline int p_adic_valuation(const BigInt& n, int p) {
    if (!is_prime(p))
        throw invalid_operand_error("p_adic_valuation: p = " +
                                    std::to_string(p) + " is not prime");
    if (n == 0)
        throw invalid_operand_error("p_adic_valuation: undefined at n = 0");
    BigInt m = n < 0 ? BigInt(-n) : n;
    int e = 0;
    while (m % p == 0) {
        m /= p;
        ++e;
    }
    return e;
}

/* d-th Todd number: the denominator of the degree-d Todd polynomial,
 * tau_d = prod over primes p of p^floor(d/(p-1)). Only primes p <= d+1
 * contribute. tau_0 = 1 (empty product). */
inline BigInt todd_number(int d) {
    if (d < 0)
        throw invalid_operand_error("todd_number: negative index");
    BigInt tau = 1;
    for (int p : primes_up_to(d + 1)) {
        int e = d / (p - 1);
        for (int i = 0; i < e; ++i)
            tau *= p;
    }
    return tau;
}

/* Bernoulli numbers in the convention B_1 = -1/2, via the recurrence
 * sum_{j=0}^{r} C(r+1, j) B_j = 0 with B_0 = 1. */
inline Rational bernoulli(int r) {
    if (r < 0)
        throw invalid_operand_error("bernoulli: negative index");
    std::vector<Rational> b;
    b.reserve(r + 1);
    b.push_back(Rational(1));
    for (int m = 1; m <= r; ++m) {
        Rational acc(0);
        for (int j = 0; j < m; ++j)
            acc += Rational(binomial(m + 1, j)) * b[j];
        b.push_back(-acc / Rational(m + 1));
    }
    return b[r];
}

} // namespace degform
