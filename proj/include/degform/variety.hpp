#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

#include "degform/number_theory.hpp"
#include "degform/partition.hpp"
#include "degform/power_series.hpp"
#include "degform/symfun.hpp"

namespace degform {

/* Smooth complete intersection of m hypersurfaces of degrees d_1..d_m in
 * projective space of dimension n (m = 0 gives projective space itself).
 * The point index n_X is the gcd of degrees of closed points; a generic
 * linear section gives a zero-cycle of degree prod d_i, so n_X must divide
 * prod d_i, and that product is the default when no index is given. */
class CompleteIntersection {
  public:
    CompleteIntersection(int ambient_dim, std::vector<int> degrees,
                         std::optional<BigInt> point_index = std::nullopt)
        : ambient_(ambient_dim), degrees_(std::move(degrees)) {
        if (ambient_ < 1)
            throw invalid_operand_error(
                "CompleteIntersection: ambient dimension must be positive");
        for (int d : degrees_)
            if (d < 1)
                throw invalid_operand_error(
                    "CompleteIntersection: degrees must be positive");
        if (dim() < 1)
            throw invalid_operand_error(
                "CompleteIntersection: dim = ambient - m must be >= 1 (got " +
                std::to_string(dim()) + ")");
        std::sort(degrees_.begin(), degrees_.end());
        const BigInt prod = degree_product();
        if (point_index) {
            point_index_ = *point_index;
            if (point_index_ < 1)
                throw invalid_operand_error(
                    "CompleteIntersection: point index must be >= 1");
            if (prod % point_index_ != 0)
                throw invalid_operand_error(
                    "CompleteIntersection: point index " + point_index_.str() +
                    " does not divide the degree product " + prod.str());
        } else {
            point_index_ = prod;
        }
    }

    int ambient() const { return ambient_; }
    const std::vector<int>& degrees() const { return degrees_; }
    int codim() const { return static_cast<int>(degrees_.size()); }
    int dim() const { return ambient_ - codim(); }
    const BigInt& point_index() const { return point_index_; }

    BigInt degree_product() const {
        BigInt p = 1;
        for (int d : degrees_)
            p *= d;
        return p;
    }

    std::string to_string() const {
        std::string s = "P^" + std::to_string(ambient_) + ", degrees (";
        for (size_t i = 0; i < degrees_.size(); ++i) {
            if (i)
                s += ",";
            s += std::to_string(degrees_[i]);
        }
        return s + "), n_X = " + point_index_.str();
    }

    friend bool operator==(const CompleteIntersection&,
                           const CompleteIntersection&) = default;

  private:
    int ambient_;
    std::vector<int> degrees_; // sorted ascending
    BigInt point_index_;
};

/* chi(O_X) as the residue at z = 0 of prod_i (1-e^{-d_i z}) / (1-e^{-z})^{n+1}.
 * The integrand pre-factors as z^{m-n-1} times a unit series, so the residue
 * is the coefficient of z^{dim X} in prod_i [(1-e^{-d_i z})/z] * [z/(1-e^{-z})]^{n+1}.
 */
inline BigInt euler_char_residue(const CompleteIntersection& X) {
    const int N = X.dim();
    PowerSeries prod = todd_series(N).pow(X.ambient() + 1);
    for (int d : X.degrees())
        prod = prod * reduced_exp_series(d, N);
    const Rational chi = prod.coefficient(N);
    if (!chi.is_integer())
        throw internal_inconsistency_error(
            "euler_char_residue: non-integer value " + chi.to_string() +
            " for " + X.to_string());
    return chi.as_integer();
}

/* Chern classes of the virtual bundle -T_X, as scalars in the hyperplane
 * class h: coefficient k of the returned series is c_k(-T_X) / h^k. Equals
 * prod_i (1 + d_i h) * (1 + h)^{-(n+1)} truncated at order dim X. */
inline PowerSeries chern_class_coeffs(const CompleteIntersection& X) {
    const int N = X.dim();
    PowerSeries hyper(N); // 1 + h
    hyper.set_coefficient(0, Rational(1));
    if (N >= 1)
        hyper.set_coefficient(1, Rational(1));
    PowerSeries prod = hyper.pow(-(X.ambient() + 1));
    for (int d : X.degrees()) {
        PowerSeries f(N); // 1 + d h
        f.set_coefficient(0, Rational(1));
        if (N >= 1)
            f.set_coefficient(1, Rational(d));
        prod = prod * f;
    }
    return prod;
}

/* Power sum p_k of the Chern roots of -T_X, as a scalar (p_k(-T_X) = s_k h^k).
 * Additivity over [-T_X] = sum O(d_i) + O - (n+1) O(1) gives
 * s_k = sum_i d_i^k - (n+1) for every k >= 1 (the trivial summand adds 0). */
inline Rational power_sums(const CompleteIntersection& X, int k) {
    if (k < 1)
        throw invalid_operand_error("power_sums: k must be positive");
    BigInt s = 0;
    for (int d : X.degrees()) {
        BigInt dk = 1;
        for (int i = 0; i < k; ++i)
            dk *= d;
        s += dk;
    }
    s -= X.ambient() + 1;
    return Rational(s);
}

namespace detail {

inline BigInt scalar_to_char_number(const Rational& scalar,
                                    const CompleteIntersection& X,
                                    const Partition& alpha) {
    const Rational total = scalar * Rational(X.degree_product());
    if (!total.is_integer())
        throw internal_inconsistency_error(
            "char_number: non-integer value " + total.to_string() + " at " +
            alpha.to_string() + " for " + X.to_string());
    return total.as_integer();
}

inline void require_top_degree(const CompleteIntersection& X,
                               const Partition& alpha) {
    if (alpha.degree() != X.dim())
        throw invalid_operand_error(
            "char_number: degree-mismatch: |alpha| = " +
            std::to_string(alpha.degree()) + " but dim X = " +
            std::to_string(X.dim()));
}

} // namespace detail

/* alpha-characteristic number c_alpha = deg Q_alpha(c_1, c_2, ...) with
 * c_i = c_i(-T_X), for |alpha| = dim X. Computed through the powersum basis:
 * expand m_alpha in power sums, substitute the scalars s_k, and apply the
 * degree map deg(h^{dim X}) = prod d_i. */
inline BigInt char_number(const CompleteIntersection& X,
                          const Partition& alpha) {
    detail::require_top_degree(X, alpha);
    const SymPolyInBasis q = monomial_in_basis(alpha, Basis::powersum);
    std::map<int, Rational> values;
    for (int k = 1; k <= X.dim(); ++k)
        values[k] = power_sums(X, k);
    return detail::scalar_to_char_number(evaluate_in_powersums(q, values), X,
                                         alpha);
}

/* Independent route to c_alpha through the elementary basis: e_i are exactly
 * the Chern class scalars of -T_X. Kept as a cross-checking oracle for
 * char_number. */
inline BigInt char_number_via_chern(const CompleteIntersection& X,
                                    const Partition& alpha) {
    detail::require_top_degree(X, alpha);
    const SymPolyInBasis q = monomial_in_basis(alpha, Basis::elementary);
    const PowerSeries chern = chern_class_coeffs(X);
    std::map<int, Rational> values;
    for (int k = 1; k <= X.dim(); ++k)
        values[k] = chern.coefficient(k);
    return detail::scalar_to_char_number(evaluate_multiplicative(q, values),
                                         X, alpha);
}

/* All characteristic numbers of X: one entry per partition of dim X. */
struct CharNumberTable {
    CompleteIntersection variety;
    std::map<Partition, BigInt> entries;

    friend bool operator==(const CharNumberTable&,
                           const CharNumberTable&) = default;
};

inline CharNumberTable compute_char_numbers(const CompleteIntersection& X) {
    // Entries depend only on (ambient, degrees), not on the point index;
    // reports and sweeps revisit the same varieties, so memoize.
    using Key = std::pair<int, std::vector<int>>;
    static std::shared_mutex mutex;
    static std::map<Key, std::map<Partition, BigInt>> cache;
    const Key key{X.ambient(), X.degrees()};
    {
        std::shared_lock lock(mutex);
        if (auto it = cache.find(key); it != cache.end())
            return CharNumberTable{X, it->second};
    }
    std::map<Partition, BigInt> entries;
    for (const Partition& alpha : partitions_of(X.dim()))
        entries[alpha] = char_number(X, alpha);
    {
        std::unique_lock lock(mutex);
        cache.try_emplace(key, entries);
    }
    return CharNumberTable{X, std::move(entries)};
}

/* chi(O_X) = (-1)^d sum over |alpha| = d of c_alpha / prod (alpha_i + 1)!.
 * Independent of the residue route; the two must agree. */
inline BigInt euler_char_via_charnumbers(const CharNumberTable& table) {
    const int d = table.variety.dim();
    Rational sum(0);
    for (const auto& [alpha, c] : table.entries) {
        BigInt denom = 1;
        for (int part : alpha.parts())
            denom *= factorial(part + 1);
        sum += Rational(c, denom);
    }
    if (d % 2 != 0)
        sum = -sum;
    if (!sum.is_integer())
        throw internal_inconsistency_error(
            "euler_char_via_charnumbers: non-integer value " +
            sum.to_string() + " for " + table.variety.to_string());
    return sum.as_integer();
}

inline BigInt euler_char_via_charnumbers(const CompleteIntersection& X) {
    return euler_char_via_charnumbers(compute_char_numbers(X));
}

/* Rost number eta_p = c_{(p-1,...,p-1)} / p, defined when (p-1) | dim X. */
inline BigInt rost_number(const CharNumberTable& table, int p) {
    if (!is_prime(p))
        throw invalid_operand_error("rost_number: p = " + std::to_string(p) +
                                    " is not prime");
    const int d = table.variety.dim();
    if (d % (p - 1) != 0)
        throw not_applicable_error("rost_number: p - 1 = " +
                                   std::to_string(p - 1) +
                                   " does not divide dim X = " +
                                   std::to_string(d));
    const Partition alpha(std::vector<int>(d / (p - 1), p - 1));
    const BigInt c = table.entries.at(alpha);
    if (c % p != 0)
        throw internal_inconsistency_error(
            "rost_number: c_" + alpha.to_string() + " = " + c.str() +
            " is not divisible by " + std::to_string(p));
    return c / p;
}

inline BigInt rost_number(const CompleteIntersection& X, int p) {
    return rost_number(compute_char_numbers(X), p);
}

/* u_p = sum over alpha in Lambda_p of degree d of
 * tau_{d-1} / prod (alpha_i + 1)! * c_alpha. Each weight equals n_alpha / p
 * with n_alpha an integer prime to p, and each c_alpha is divisible by p, so
 * the sum is an exact integer (computed as sum n_alpha * (c_alpha / p)). */
inline BigInt u_p(const CharNumberTable& table, int p) {
    if (!is_prime(p))
        throw invalid_operand_error("u_p: p = " + std::to_string(p) +
                                    " is not prime");
    const int d = table.variety.dim();
    const BigInt tau = todd_number(d - 1);
    BigInt total = 0;
    for (const Partition& alpha : lambda_p_partitions(d, p)) {
        BigInt denom = 1;
        for (int part : alpha.parts())
            denom *= factorial(part + 1);
        const Rational weight = Rational(BigInt(p) * tau, denom);
        if (!weight.is_integer() || weight.as_integer() % p == 0)
            throw internal_inconsistency_error(
                "u_p: weight p*tau_{d-1}/prod(alpha_i+1)! = " +
                weight.to_string() + " at " + alpha.to_string() +
                " is not an integer prime to " + std::to_string(p));
        const BigInt c = table.entries.at(alpha);
        if (c % p != 0)
            throw internal_inconsistency_error(
                "u_p: c_" + alpha.to_string() + " = " + c.str() +
                " is not divisible by " + std::to_string(p));
        total += weight.as_integer() * (c / p);
    }
    return total;
}

inline BigInt u_p(const CompleteIntersection& X, int p) {
    return u_p(compute_char_numbers(X), p);
}

} // namespace degform
