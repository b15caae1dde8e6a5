#pragma once

#include <random>
#include <string>
#include <vector>

#include "degform/criteria.hpp"
#include "degform/number_theory.hpp"
#include "degform/partition.hpp"
#include "degform/symfun.hpp"
#include "degform/variety.hpp"

namespace degform {

/* Bounds for the exhaustive complete-intersection sweeps. The defaults are
 * the acceptance ranges: every CI with dim <= 5, codim <= 3, degrees <= 5. */
struct SweepBounds {
    int max_dim = 5;
    int max_degree = 5;
    int max_codim = 3;
};

struct CheckResult {
    std::string name;
    bool passed = true;
    long long cases = 0;
    long long failures = 0;
    std::string detail; // first failure, empty while passing
};

namespace detail {

inline void record(CheckResult& r, bool ok, const std::string& what) {
    ++r.cases;
    if (ok)
        return;
    ++r.failures;
    if (r.passed) {
        r.passed = false;
        r.detail = what;
    }
}

inline void extend_degree_tuples(std::vector<std::vector<int>>& out,
                                 std::vector<int>& cur, int remaining,
                                 int min_d, int max_d) {
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    for (int d = min_d; d <= max_d; ++d) {
        cur.push_back(d);
        extend_degree_tuples(out, cur, remaining - 1, d, max_d);
        cur.pop_back();
    }
}

inline Rational evaluate_at(const ExponentPolynomial& poly,
                            const std::vector<Rational>& x) {
    if (static_cast<int>(x.size()) != poly.num_vars())
        throw invalid_operand_error("evaluate_at: point dimension mismatch");
    Rational total(0);
    for (const auto& [exps, coeff] : poly.terms()) {
        Rational term = coeff;
        for (size_t v = 0; v < x.size(); ++v)
            for (int e = 0; e < exps[v]; ++e)
                term *= x[v];
        total += term;
    }
    return total;
}

} // namespace detail

/* Every complete intersection with 1 <= dim <= max_dim, 0 <= codim <=
 * max_codim, and a weakly increasing degree vector with entries in
 * [1, max_degree], at the default point index. */
inline std::vector<CompleteIntersection>
enumerate_complete_intersections(const SweepBounds& b) {
    if (b.max_dim < 1 || b.max_degree < 1 || b.max_codim < 0)
        throw invalid_operand_error(
            "enumerate_complete_intersections: bounds must be positive");
    std::vector<CompleteIntersection> out;
    std::vector<std::vector<int>> tuples;
    std::vector<int> cur;
    for (int m = 0; m <= b.max_codim; ++m) {
        tuples.clear();
        detail::extend_degree_tuples(tuples, cur, m, 1, b.max_degree);
        for (int dim = 1; dim <= b.max_dim; ++dim)
            for (const std::vector<int>& ds : tuples)
                out.emplace_back(dim + m, ds);
    }
    return out;
}

/* 1. The universal denominators tau_0..tau_5. */
inline CheckResult check_todd_numbers() {
    CheckResult r{"todd-numbers"};
    const BigInt expected[] = {1, 2, 12, 24, 720, 1440};
    for (int d = 0; d <= 5; ++d)
        detail::record(r, todd_number(d) == expected[d],
                       "tau_" + std::to_string(d) + " = " +
                           todd_number(d).str() + ", expected " +
                           expected[d].str());
    return r;
}

/* 2. chi(O_X) by the residue route equals the characteristic-number route
 * on the whole sweep. */
inline CheckResult check_chi_route_agreement(const SweepBounds& b) {
    CheckResult r{"chi-route-agreement"};
    for (const CompleteIntersection& X : enumerate_complete_intersections(b)) {
        const BigInt a = euler_char_residue(X);
        const BigInt c = euler_char_via_charnumbers(compute_char_numbers(X));
        detail::record(r, a == c,
                       X.to_string() + ": residue " + a.str() +
                           " != charnumber " + c.str());
    }
    return r;
}

/* 3. Low-dimensional closed forms: chi = -1/2 c_(1) on curves,
 * 1/4 c_(1,1) + 1/6 c_(2) on surfaces,
 * -1/8 c_(1,1,1) - 1/12 c_(1,2) - 1/24 c_(3) on 3-folds. */
inline CheckResult check_chi_closed_forms(const SweepBounds& b) {
    CheckResult r{"chi-closed-forms"};
    for (const CompleteIntersection& X : enumerate_complete_intersections(b)) {
        const int d = X.dim();
        if (d > 3)
            continue;
        const CharNumberTable t = compute_char_numbers(X);
        const Rational chi(euler_char_residue(X));
        Rational rhs;
        if (d == 1) {
            rhs = Rational(-t.entries.at(Partition{1}), 2);
        } else if (d == 2) {
            rhs = Rational(t.entries.at(Partition{1, 1}), 4) +
                  Rational(t.entries.at(Partition{2}), 6);
        } else {
            rhs = Rational(-t.entries.at(Partition{1, 1, 1}), 8) +
                  Rational(-t.entries.at(Partition{1, 2}), 12) +
                  Rational(-t.entries.at(Partition{3}), 24);
        }
        detail::record(r, chi == rhs,
                       X.to_string() + ": chi = " + chi.to_string() +
                           " but closed form gives " + rhs.to_string());
    }
    return r;
}

/* 4. u_p on low dimensions matches its explicit coefficient combinations:
 * d=1: u_2 = 1/2 c_(1); d=2: u_2 = 1/2 c_(1,1), u_3 = 1/3 c_(2);
 * d=3: u_2 = 3/2 c_(1,1,1) + 1/2 c_(3). */
inline CheckResult check_u_p_closed_forms(const SweepBounds& b) {
    CheckResult r{"u-p-closed-forms"};
    const auto expect = [&r](const CompleteIntersection& X,
                             const CharNumberTable& t, int p,
                             const Rational& rhs) {
        const Rational lhs(u_p(t, p));
        detail::record(r, lhs == rhs,
                       X.to_string() + ": u_" + std::to_string(p) + " = " +
                           lhs.to_string() + " but the closed form gives " +
                           rhs.to_string());
    };
    for (const CompleteIntersection& X : enumerate_complete_intersections(b)) {
        const int d = X.dim();
        if (d > 3)
            continue;
        const CharNumberTable t = compute_char_numbers(X);
        if (d == 1) {
            expect(X, t, 2, Rational(t.entries.at(Partition{1}), 2));
        } else if (d == 2) {
            expect(X, t, 2, Rational(t.entries.at(Partition{1, 1}), 2));
            expect(X, t, 3, Rational(t.entries.at(Partition{2}), 3));
        } else {
            expect(X, t, 2,
                   Rational(3 * t.entries.at(Partition{1, 1, 1}), 2) +
                       Rational(t.entries.at(Partition{3}), 2));
        }
    }
    return r;
}

/* 5. p divides c_alpha for every alpha in Lambda_p, over the sweep and all
 * primes p <= dim + 1. */
inline CheckResult check_lambda_p_divisibility(const SweepBounds& b) {
    CheckResult r{"lambda-p-divisibility"};
    for (const CompleteIntersection& X : enumerate_complete_intersections(b)) {
        const CharNumberTable t = compute_char_numbers(X);
        for (int p : primes_up_to(X.dim() + 1))
            for (const Partition& alpha : lambda_p_partitions(X.dim(), p)) {
                const BigInt c = t.entries.at(alpha);
                detail::record(r, c % p == 0,
                               X.to_string() + ": c_" + alpha.to_string() +
                                   " = " + c.str() +
                                   " is not divisible by " +
                                   std::to_string(p));
            }
    }
    return r;
}

/* 6. The valuation estimate behind the u_p coefficients: for every
 * partition alpha of d <= 12 and every prime p <= 13,
 * v_p(tau_{d-1}) + 1 >= v_p(prod (alpha_i + 1)!), with equality exactly
 * when alpha lies in Lambda_p. */
inline CheckResult check_valuation_lemma() {
    CheckResult r{"valuation-lemma"};
    for (int d = 1; d <= 12; ++d) {
        const BigInt tau = todd_number(d - 1);
        for (const Partition& alpha : partitions_of(d)) {
            BigInt denom = 1;
            for (int part : alpha.parts())
                denom *= factorial(part + 1);
            for (int p : primes_up_to(13)) {
                const int lhs = p_adic_valuation(tau, p) + 1;
                const int rhs = p_adic_valuation(denom, p);
                const bool in_lambda = is_lambda_p_partition(alpha, p);
                detail::record(
                    r, lhs >= rhs && (lhs == rhs) == in_lambda,
                    "d=" + std::to_string(d) + ", p=" + std::to_string(p) +
                        ", alpha=" + alpha.to_string() + ": v_p(tau)+1=" +
                        std::to_string(lhs) + ", v_p(denom)=" +
                        std::to_string(rhs) +
                        (in_lambda ? " (in Lambda_p)" : " (not in Lambda_p)"));
            }
        }
    }
    return r;
}

/* 7. Detection equivalence: for every sweep variety and every divisor n of
 * prod d_i, n fails to divide chi * tau_{d-1} exactly when some prime
 * p <= d+1 has n not dividing u_p. */
inline CheckResult check_u_p_detection(const SweepBounds& b) {
    CheckResult r{"u-p-detection"};
    for (const CompleteIntersection& X : enumerate_complete_intersections(b)) {
        const int d = X.dim();
        const CharNumberTable t = compute_char_numbers(X);
        const BigInt edge = euler_char_residue(X) * todd_number(d - 1);
        std::vector<BigInt> u_values;
        for (int p : primes_up_to(d + 1))
            u_values.push_back(u_p(t, p));
        const long long prod = X.degree_product().convert_to<long long>();
        for (long long n = 1; n <= prod; ++n) {
            if (prod % n != 0)
                continue;
            const bool lhs = edge % n != 0;
            bool rhs = false;
            for (const BigInt& u : u_values)
                if (u % n != 0) {
                    rhs = true;
                    break;
                }
            detail::record(r, lhs == rhs,
                           X.to_string() + ", n=" + std::to_string(n) +
                               ": chi*tau test " + (lhs ? "fails" : "holds") +
                               " but u_p test " + (rhs ? "fails" : "holds"));
        }
    }
    return r;
}

/* 8. Pinned Euler characteristics: projective spaces, plane curves by the
 * genus formula, the quartic surface, and the degree-p Calabi-Yau
 * hypersurfaces at p = 3, 5. */
inline CheckResult check_known_chi_values() {
    CheckResult r{"known-chi-values"};
    const auto expect = [&r](const CompleteIntersection& X,
                             const BigInt& want) {
        const BigInt got = euler_char_residue(X);
        detail::record(r, got == want,
                       X.to_string() + ": chi = " + got.str() +
                           ", expected " + want.str());
    };
    for (int n = 1; n <= 6; ++n)
        expect(CompleteIntersection(n, {}), 1);
    for (int d = 1; d <= 8; ++d)
        expect(CompleteIntersection(2, {d}),
               BigInt(1) - BigInt((d - 1) * (d - 2)) / 2);
    expect(CompleteIntersection(3, {4}), 2);
    expect(CompleteIntersection(2, {3}), 0);
    expect(CompleteIntersection(4, {5}), 0);
    return r;
}

/* 9. Named incompressibility verdicts: the anisotropic-conic shape, the
 * quintic 4-fold, and the degree-p^r hypersurfaces in P^p for p in {2,3},
 * r in {1,2}. */
inline CheckResult check_incompressibility_verdicts() {
    CheckResult r{"incompressibility-verdicts"};

    const IncompressibilityReport conic =
        build_report(CompleteIntersection(2, {2}, BigInt(2)));
    detail::record(r, conic.incompressible_by_todd,
                   "conic: tau-divisibility criterion did not fire");
    detail::record(r,
                   conic.prime_criterion_p == 2 && conic.prime_criterion &&
                       *conic.prime_criterion,
                   "conic: prime-dimension criterion at p=2 did not fire");

    const IncompressibilityReport quintic =
        build_report(CompleteIntersection(5, {5}, BigInt(5)));
    detail::record(r,
                   quintic.prime_criterion_p == 5 && quintic.prime_criterion &&
                       *quintic.prime_criterion,
                   "quintic 4-fold: prime-dimension criterion at p=5 did not "
                   "fire");

    for (int p : {2, 3})
        for (int q = p; q <= p * p; q *= p) {
            const IncompressibilityReport chain =
                build_report(CompleteIntersection(p, {q}, BigInt(q)));
            detail::record(r, chain.incompressible_by_todd,
                           "degree-" + std::to_string(q) + " hypersurface in "
                           "P^" + std::to_string(p) + ": " + BigInt(q).str() +
                               " unexpectedly divides chi * tau_{dim-1}");
        }
    return r;
}

/* 10. The 3-fold parity condition: the exact-characteristic-number route
 * equals the m mod 4 classification for every 3-fold CI with codim <= 4 and
 * degrees <= 6 (the checker itself asserts agreement; disagreement throws).
 */
inline CheckResult check_threefold_parity_table() {
    CheckResult r{"threefold-parity-table"};
    std::vector<std::vector<int>> tuples;
    std::vector<int> cur;
    for (int m = 1; m <= 4; ++m) {
        tuples.clear();
        detail::extend_degree_tuples(tuples, cur, m, 1, 6);
        for (const std::vector<int>& ds : tuples) {
            const CompleteIntersection X(3 + m, ds);
            try {
                const ThreefoldParity parity = threefold_parity_check(X);
                detail::record(r, parity.exact_parity == parity.table_case,
                               X.to_string() + ": parity routes disagree");
            } catch (const internal_inconsistency_error& e) {
                detail::record(r, false, X.to_string() + ": " + e.what());
            }
        }
    }
    return r;
}

/* 11. The Todd generating series against the Bernoulli recurrence:
 * r! * coefficient r is B_r, except the sign flip at r = 1. */
inline CheckResult check_todd_series_bernoulli() {
    CheckResult r{"todd-series-bernoulli"};
    const PowerSeries t = todd_series(20);
    for (int k = 0; k <= 20; ++k) {
        const Rational got = t.coefficient(k) * Rational(factorial(k));
        const Rational want =
            k == 1 ? Rational(BigInt(1), BigInt(2)) : bernoulli(k);
        detail::record(r, got == want,
                       "order " + std::to_string(k) + ": series gives " +
                           got.to_string() + ", recurrence gives " +
                           want.to_string());
    }
    return r;
}

/* 12. The two symmetric-function expansion routes agree with direct
 * evaluation: for every partition of degree <= 8 and 50 pseudo-random
 * rational points, m_alpha(x) computed directly, through the elementary
 * basis, and through the powersum basis coincide. */
inline CheckResult check_symfun_routes() {
    CheckResult r{"symfun-route-agreement"};
    std::mt19937 rng(20260819u);
    const auto draw = [&rng]() {
        const int num = static_cast<int>(rng() % 19) - 9;
        const int den = static_cast<int>(rng() % 9) + 1;
        return Rational(BigInt(num), BigInt(den));
    };
    for (int d = 1; d <= 8; ++d) {
        const std::vector<Partition> parts = partitions_of(d);
        std::vector<ExponentPolynomial> monomials;
        monomials.reserve(parts.size());
        for (const Partition& alpha : parts)
            monomials.push_back(
                ExponentPolynomial::monomial_symmetric(alpha, d));
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<Rational> x(d);
            for (Rational& xi : x)
                xi = draw();
            std::map<int, Rational> e_values, p_values;
            for (int k = 1; k <= d; ++k) {
                e_values[k] = detail::evaluate_at(
                    ExponentPolynomial::elementary(k, d), x);
                Rational pk(0);
                for (const Rational& xi : x) {
                    Rational power(1);
                    for (int i = 0; i < k; ++i)
                        power *= xi;
                    pk += power;
                }
                p_values[k] = pk;
            }
            for (size_t a = 0; a < parts.size(); ++a) {
                const Rational direct = detail::evaluate_at(monomials[a], x);
                const Rational via_e = evaluate_multiplicative(
                    monomial_in_basis(parts[a], Basis::elementary), e_values);
                const Rational via_p = evaluate_in_powersums(
                    monomial_in_basis(parts[a], Basis::powersum), p_values);
                detail::record(r, direct == via_e && direct == via_p,
                               "m_" + parts[a].to_string() + " trial " +
                                   std::to_string(trial) + ": direct " +
                                   direct.to_string() + ", elementary " +
                                   via_e.to_string() + ", powersum " +
                                   via_p.to_string());
            }
        }
    }
    return r;
}

/* 13. The default point index prod d_i divides chi * tau_dim on the whole
 * sweep (unconditional theorem; a failure blocks release). */
inline CheckResult check_point_index_divisibility(const SweepBounds& b) {
    CheckResult r{"point-index-divisibility"};
    for (const CompleteIntersection& X : enumerate_complete_intersections(b)) {
        const BigInt value = euler_char_residue(X) * todd_number(X.dim());
        detail::record(r, value % X.degree_product() == 0,
                       X.to_string() + ": " + X.degree_product().str() +
                           " does not divide chi * tau_dim = " + value.str());
    }
    return r;
}

/* Extra: the two characteristic-number routes (powersum evaluation vs
 * Chern-coefficient evaluation) agree for every partition on the sweep. */
inline CheckResult check_char_number_routes(const SweepBounds& b) {
    CheckResult r{"char-number-route-agreement"};
    for (const CompleteIntersection& X : enumerate_complete_intersections(b))
        for (const Partition& alpha : partitions_of(X.dim())) {
            const BigInt a = char_number(X, alpha);
            const BigInt c = char_number_via_chern(X, alpha);
            detail::record(r, a == c,
                           X.to_string() + ", alpha=" + alpha.to_string() +
                               ": powersum route " + a.str() +
                               " != chern route " + c.str());
        }
    return r;
}

/* All checks in acceptance order (the numbered thirteen, then extras). */
inline std::vector<CheckResult> run_all_checks(const SweepBounds& b = {}) {
    return {
        check_todd_numbers(),
        check_chi_route_agreement(b),
        check_chi_closed_forms(b),
        check_u_p_closed_forms(b),
        check_lambda_p_divisibility(b),
        check_valuation_lemma(),
        check_u_p_detection(b),
        check_known_chi_values(),
        check_incompressibility_verdicts(),
        check_threefold_parity_table(),
        check_todd_series_bernoulli(),
        check_symfun_routes(),
        check_point_index_divisibility(b),
        check_char_number_routes(b),
    };
}

} // namespace degform
