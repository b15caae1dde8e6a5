#pragma once

#include <utility>
#include <vector>

#include "degform/number_theory.hpp"
#include "degform/rational.hpp"

namespace degform {

/* Truncated univariate formal power series over Rational. A series of
 * truncation order N stores exactly the coefficients of z^0..z^N; binary
 * operations require equal orders and never fabricate coefficients beyond N.
 */
class PowerSeries {
  public:
    /* Zero series of the given truncation order. */
    explicit PowerSeries(int order) : coeffs_(check_order(order) + 1) {}

    /* Series from its coefficient list c_0..c_N (order = size - 1). */
    explicit PowerSeries(std::vector<Rational> coeffs)
        : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty())
            throw invalid_operand_error("PowerSeries: empty coefficient list");
    }

    static PowerSeries constant(const Rational& c, int order) {
        PowerSeries s(order);
        s.coeffs_[0] = c;
        return s;
    }
    static PowerSeries one(int order) { return constant(Rational(1), order); }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }

    const Rational& coefficient(int k) const {
        if (k < 0 || k > order())
            throw invalid_operand_error("PowerSeries: coefficient index " +
                                        std::to_string(k) +
                                        " out of range for order " +
                                        std::to_string(order()));
        return coeffs_[k];
    }

    void set_coefficient(int k, Rational v) {
        coefficient(k); // range check
        coeffs_[k] = std::move(v);
    }

    friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
        require_same_order(a, b);
        PowerSeries r(a.order());
        for (int k = 0; k <= a.order(); ++k)
            r.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
        return r;
    }

    friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
        require_same_order(a, b);
        PowerSeries r(a.order());
        for (int k = 0; k <= a.order(); ++k)
            r.coeffs_[k] = a.coeffs_[k] - b.coeffs_[k];
        return r;
    }

    PowerSeries operator-() const {
        PowerSeries r(order());
        for (int k = 0; k <= order(); ++k)
            r.coeffs_[k] = -coeffs_[k];
        return r;
    }

    /* Cauchy product truncated at the common order. */
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
        require_same_order(a, b);
        const int n = a.order();
        PowerSeries r(n);
        for (int i = 0; i <= n; ++i) {
            if (a.coeffs_[i].is_zero())
                continue;
            for (int j = 0; i + j <= n; ++j)
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return r;
    }

    friend PowerSeries operator*(const Rational& c, const PowerSeries& a) {
        PowerSeries r(a.order());
        for (int k = 0; k <= a.order(); ++k)
            r.coeffs_[k] = c * a.coeffs_[k];
        return r;
    }
    friend PowerSeries operator*(const PowerSeries& a, const Rational& c) {
        return c * a;
    }

    friend bool operator==(const PowerSeries& a, const PowerSeries& b) {
        return a.coeffs_ == b.coeffs_;
    }

    /* Multiplicative inverse up to the truncation order; requires a unit
     * constant term. */
    PowerSeries invert() const {
        if (coeffs_[0].is_zero())
            throw invalid_operand_error(
                "PowerSeries: non-invertible series (zero constant term)");
        const int n = order();
        PowerSeries r(n);
        const Rational c0inv = Rational(1) / coeffs_[0];
        r.coeffs_[0] = c0inv;
        for (int k = 1; k <= n; ++k) {
            Rational acc(0);
            for (int j = 1; j <= k; ++j)
                acc += coeffs_[j] * r.coeffs_[k - j];
            r.coeffs_[k] = -c0inv * acc;
        }
        return r;
    }

    /* Integer power by repeated squaring; negative exponents require an
     * invertible series. */
    PowerSeries pow(int e) const {
        if (e < 0)
            return invert().pow(-e);
        PowerSeries base = *this;
        PowerSeries acc = one(order());
        while (e > 0) {
            if (e & 1)
                acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

  private:
    static int check_order(int order) {
        if (order < 0)
            throw invalid_operand_error("PowerSeries: negative order");
        return order;
    }
    static void require_same_order(const PowerSeries& a, const PowerSeries& b) {
        if (a.order() != b.order())
            throw invalid_operand_error(
                "PowerSeries: order mismatch (" + std::to_string(a.order()) +
                " vs " + std::to_string(b.order()) + ")");
    }

    std::vector<Rational> coeffs_; // c_0..c_N
};

/* (1 - e^{-d z}) / z: the unit part left after factoring one z out of
 * 1 - e^{-d z}. Coefficient of z^k is (-1)^k d^{k+1} / (k+1)!. */
inline PowerSeries reduced_exp_series(int d, int order) {
    if (d < 1)
        throw invalid_operand_error("reduced_exp_series: d must be positive");
    PowerSeries s(order);
    BigInt dpow = d;
    for (int k = 0; k <= order; ++k) {
        Rational c(dpow, factorial(k + 1));
        s.set_coefficient(k, k % 2 == 0 ? c : -c);
        dpow *= d;
    }
    return s;
}

/* z / (1 - e^{-z}), the Todd generating series. Coefficient of z^r equals
 * bernoulli(r)/r! except at r = 1 where the sign flips to +1/2. */
inline PowerSeries todd_series(int order) {
    return reduced_exp_series(1, order).invert();
}

} // namespace degform
