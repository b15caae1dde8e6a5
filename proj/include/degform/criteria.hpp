#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "degform/number_theory.hpp"
#include "degform/partition.hpp"
#include "degform/variety.hpp"

namespace degform {

/* Data of a hypothetical rational map f: Y -> X, carried as plain
 * arithmetic. deg_f = 0 encodes a non-dominant map. Nothing here is
 * validated against actual field extensions; the checker decides
 * congruences, not geometry. */
struct MapHypothesis {
    BigInt chi_Y;
    int dim_Y = 1;
    BigInt chi_X;
    BigInt deg_f = 1;
    BigInt n_X = 1;

    friend bool operator==(const MapHypothesis&,
                           const MapHypothesis&) = default;
};

/* The degree-formula congruence obstructing rational maps Y -> X:
 * chi(O_Y) * tau_{dim Y - 1} == deg_f * chi(O_X) * tau_{dim Y - 1} mod n_X. */
inline bool degree_formula_holds(const MapHypothesis& h) {
    if (h.dim_Y < 1)
        throw invalid_operand_error(
            "degree_formula_holds: dim_Y must be positive");
    if (h.n_X < 1)
        throw invalid_operand_error("degree_formula_holds: n_X must be >= 1");
    if (h.deg_f < 0)
        throw invalid_operand_error(
            "degree_formula_holds: deg_f must be >= 0");
    const BigInt lhs = (h.chi_Y - h.deg_f * h.chi_X) * todd_number(h.dim_Y - 1);
    return lhs % h.n_X == 0;
}

/* Specializations of the degree formula to the variety itself:
 * (i)  n_X | chi * tau_{dim X}   -- holds unconditionally (projection from
 *      X x P^1), so a failure certifies an inconsistent point-index input;
 * (ii) n_X not dividing chi * tau_{dim X - 1} proves X incompressible
 *      (identity map). */
struct ToddCriterionResult {
    bool point_index_consistent; // (i)
    bool incompressible;         // (ii)

    friend bool operator==(const ToddCriterionResult&,
                           const ToddCriterionResult&) = default;
};

inline ToddCriterionResult todd_criterion(const CompleteIntersection& X) {
    const BigInt chi = euler_char_residue(X);
    const int d = X.dim();
    return ToddCriterionResult{
        (chi * todd_number(d)) % X.point_index() == 0,
        (chi * todd_number(d - 1)) % X.point_index() != 0,
    };
}

/* Criterion for complete intersections of dimension p - 1: with m_p the
 * number of degrees divisible by p, if p divides neither m_p nor
 * prod d_i / n_X then X is incompressible. Absent when dim X != p - 1
 * (the p-adic estimate behind it needs the dimension gate). */
inline std::optional<bool>
prime_dimension_criterion(const CompleteIntersection& X, int p) {
    if (!is_prime(p))
        throw invalid_operand_error("prime_dimension_criterion: p = " +
                                    std::to_string(p) + " is not prime");
    if (X.dim() != p - 1)
        return std::nullopt;
    int m_p = 0;
    for (int deg : X.degrees())
        if (deg % p == 0)
            ++m_p;
    const BigInt cofactor = X.degree_product() / X.point_index();
    return m_p % p != 0 && cofactor % p != 0;
}

namespace detail {

// parts of Lambda_p partitions have the form p^i - 1, i >= 1
inline bool is_lambda_p_part(int part, int p) {
    long long q = static_cast<long long>(part) + 1;
    if (q < p)
        return false;
    while (q % p == 0)
        q /= p;
    return q == 1;
}

} // namespace detail

inline bool is_lambda_p_partition(const Partition& alpha, int p) {
    if (!is_prime(p))
        throw invalid_operand_error("is_lambda_p_partition: p = " +
                                    std::to_string(p) + " is not prime");
    for (int part : alpha.parts())
        if (!detail::is_lambda_p_part(part, p))
            return false;
    return true;
}

/* Classical congruence at a prime p and a Lambda_p partition alpha:
 * c_alpha(Y)/p == deg_f * c_alpha(X)/p mod n_X. Takes plain scalars so
 * literature values can be checked without a variety model. Both inputs
 * must be divisible by p (they are characteristic numbers at a Lambda_p
 * partition). */
inline bool rost_congruence_holds(const BigInt& c_alpha_Y,
                                  const BigInt& c_alpha_X,
                                  const Partition& alpha, int p,
                                  const BigInt& deg_f, const BigInt& n_X) {
    if (!is_lambda_p_partition(alpha, p))
        throw invalid_operand_error(
            "rost_congruence_holds: " + alpha.to_string() +
            " has a part not of the form p^i - 1 for p = " +
            std::to_string(p));
    if (n_X < 1)
        throw invalid_operand_error("rost_congruence_holds: n_X must be >= 1");
    if (deg_f < 0)
        throw invalid_operand_error(
            "rost_congruence_holds: deg_f must be >= 0");
    if (c_alpha_Y % p != 0 || c_alpha_X % p != 0)
        throw invalid_operand_error(
            "rost_congruence_holds: characteristic numbers at a Lambda_p "
            "partition must be divisible by p = " +
            std::to_string(p));
    return (c_alpha_Y / p - deg_f * (c_alpha_X / p)) % n_X == 0;
}

/* Parity condition on 3-folds at the default point index n_X = prod d_i:
 * exact_parity asks whether c_(1,1,1)/n_X or c_(3)/n_X is even (when it
 * holds, the tau-divisibility criterion and the classical congruences
 * detect incompressibility equally well); table_case is the closed-form
 * classification of the same condition by m mod 4 and the parities of the
 * first three elementary symmetric functions of the degrees. The two must
 * agree.
 *
 * Derivation: C_(3) = sum d_i^3 - (m+4) == sigma_1 + m (mod 2), and
 * C_(1,1,1), the z^3 coefficient of prod (1+d_i z) * (1+z)^{-(m+4)}, is
 * sigma_3 - (m+4) sigma_2 + C(m+5,2) sigma_1 - C(m+6,3)
 *   == sigma_3 + m sigma_2 + C(m+1,2) sigma_1 + C(m+2,3)  (mod 2),
 * the binomial parities having period 4 in m. The sigma_3 term is often
 * dropped in the literature; it vanishes only when fewer than three degrees
 * are odd (mod 2 it equals C(#odd degrees, 3)), and without it the m = 4k
 * row would wrongly accept e.g. degrees (1,1,1,2) or (2,3,3,3). */
struct ThreefoldParity {
    bool exact_parity;
    bool table_case;

    friend bool operator==(const ThreefoldParity&,
                           const ThreefoldParity&) = default;
};

inline ThreefoldParity threefold_parity_check(const CompleteIntersection& X) {
    if (X.dim() != 3)
        throw not_applicable_error("threefold_parity_check: dim X = " +
                                   std::to_string(X.dim()) +
                                   ", the parity condition concerns 3-folds");
    if (X.codim() < 1)
        throw not_applicable_error(
            "threefold_parity_check: at least one hypersurface required");
    if (X.point_index() != X.degree_product())
        throw not_applicable_error(
            "threefold_parity_check: the parity table assumes the default "
            "point index prod d_i");

    const CharNumberTable table = compute_char_numbers(X);
    const BigInt nx = X.point_index();
    const auto normalized = [&](const Partition& alpha) {
        const BigInt c = table.entries.at(alpha);
        if (c % nx != 0)
            throw internal_inconsistency_error(
                "threefold_parity_check: point index does not divide c_" +
                alpha.to_string() + " for " + X.to_string());
        return BigInt(c / nx);
    };
    const bool exact = normalized(Partition{1, 1, 1}) % 2 == 0 ||
                       normalized(Partition{3}) % 2 == 0;

    long long sigma1 = 0, sigma2 = 0, odd_degrees = 0;
    const std::vector<int>& ds = X.degrees();
    for (size_t i = 0; i < ds.size(); ++i) {
        sigma1 += ds[i];
        odd_degrees += ds[i] % 2;
        for (size_t j = i + 1; j < ds.size(); ++j)
            sigma2 += static_cast<long long>(ds[i]) * ds[j];
    }
    const bool s1_odd = sigma1 % 2 != 0;
    const bool s2_odd = sigma2 % 2 != 0;
    // sigma_3 == C(#odd degrees, 3) (mod 2): a triple product is odd
    // exactly when all three factors are.
    const bool s3_odd =
        odd_degrees >= 3 &&
        (odd_degrees * (odd_degrees - 1) * (odd_degrees - 2) / 6) % 2 != 0;
    bool by_table = false;
    switch (X.codim() % 4) {
    case 0: by_table = !s1_odd || !s3_odd; break;
    case 1: by_table = s1_odd || (s2_odd != s3_odd); break;
    case 2: by_table = !s1_odd || s3_odd; break;
    case 3: by_table = s1_odd || (s2_odd == s3_odd); break;
    }
    if (exact != by_table)
        throw internal_inconsistency_error(
            "threefold_parity_check: exact parity and the m mod 4 table "
            "disagree for " +
            X.to_string());
    return ThreefoldParity{exact, by_table};
}

/* Everything the criteria know about one prime. rost_incompressible is the
 * classical-congruence verdict: some alpha in Lambda_p has c_alpha/p not
 * divisible by n_X (identity-map specialization). */
struct PrimeData {
    std::optional<BigInt> rost_number; // absent when (p-1) does not divide d
    BigInt u_value = 0;
    bool rost_incompressible = false;

    friend bool operator==(const PrimeData&, const PrimeData&) = default;
};

/* Aggregated verdicts for one variety. Every criterion here is a
 * sufficient condition: false means "not decided", never "compressible". */
struct IncompressibilityReport {
    CompleteIntersection variety;
    BigInt chi;
    BigInt tau_dim;
    BigInt tau_dim_minus_1;
    CharNumberTable charnumbers;
    std::map<int, PrimeData> per_prime; // primes p <= dim X + 1
    bool point_index_consistent = false;
    bool incompressible_by_todd = false;
    std::optional<int> prime_criterion_p; // dim X + 1 when that is prime
    std::optional<bool> prime_criterion;
    std::optional<ThreefoldParity> threefold_parity;

    friend bool operator==(const IncompressibilityReport&,
                           const IncompressibilityReport&) = default;
};

inline bool report_proves_incompressible(const IncompressibilityReport& r) {
    if (r.incompressible_by_todd)
        return true;
    if (r.prime_criterion && *r.prime_criterion)
        return true;
    for (const auto& [p, data] : r.per_prime)
        if (data.rost_incompressible)
            return true;
    return false;
}

inline IncompressibilityReport build_report(const CompleteIntersection& X) {
    const int d = X.dim();
    const CharNumberTable table = compute_char_numbers(X);
    const BigInt chi = euler_char_residue(X);
    if (chi != euler_char_via_charnumbers(table))
        throw internal_inconsistency_error(
            "build_report: Euler characteristic routes disagree for " +
            X.to_string());

    IncompressibilityReport r{X,  chi, todd_number(d), todd_number(d - 1),
                              table, {},  false,          false,
                              {},    {},  {}};

    const ToddCriterionResult tc = todd_criterion(X);
    if (!tc.point_index_consistent)
        throw invalid_operand_error(
            "build_report: inconsistent point index: " +
            X.point_index().str() + " does not divide chi * tau_dim = " +
            BigInt(chi * todd_number(d)).str() + " for " + X.to_string());
    r.point_index_consistent = true;
    r.incompressible_by_todd = tc.incompressible;

    const BigInt nx = X.point_index();
    for (int p : primes_up_to(d + 1)) {
        PrimeData data;
        if (d % (p - 1) == 0)
            data.rost_number = rost_number(table, p);
        data.u_value = u_p(table, p);
        for (const Partition& alpha : lambda_p_partitions(d, p)) {
            const BigInt c = table.entries.at(alpha);
            if (c % p != 0)
                throw internal_inconsistency_error(
                    "build_report: c_" + alpha.to_string() + " = " + c.str() +
                    " is not divisible by " + std::to_string(p) + " for " +
                    X.to_string());
            if ((c / p) % nx != 0) {
                data.rost_incompressible = true;
                break;
            }
        }
        r.per_prime.emplace(p, std::move(data));
    }

    if (is_prime(d + 1)) {
        r.prime_criterion_p = d + 1;
        r.prime_criterion = prime_dimension_criterion(X, d + 1);
    }

    if (d == 3 && X.codim() >= 1 && nx == X.degree_product())
        r.threefold_parity = threefold_parity_check(X);

    return r;
}

} // namespace degform
