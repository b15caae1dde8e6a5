#include <catch2/catch_amalgamated.hpp>

#include <thread>

#include "degform/symfun.hpp"

using degform::Basis;
using degform::ExponentPolynomial;
using degform::Partition;
using degform::Rational;
using degform::SymPolyInBasis;

TEST_CASE("exponent polynomials") {
    // m_(1,1) in 3 variables: x1x2 + x1x3 + x2x3
    const ExponentPolynomial m11 =
        ExponentPolynomial::monomial_symmetric(Partition{1, 1}, 3);
    REQUIRE(m11.terms().size() == 3);
    REQUIRE(m11.coefficient({1, 1, 0}) == Rational(1));
    REQUIRE(m11.coefficient({1, 0, 1}) == Rational(1));
    REQUIRE(m11.coefficient({2, 0, 0}) == Rational(0));

    // m_(1,2) in 2 variables: x1 x2^2 + x1^2 x2
    const ExponentPolynomial m12 =
        ExponentPolynomial::monomial_symmetric(Partition{1, 2}, 2);
    REQUIRE(m12.terms().size() == 2);
    REQUIRE(m12.coefficient({1, 2}) == Rational(1));
    REQUIRE(m12.coefficient({2, 1}) == Rational(1));

    // more parts than variables: zero polynomial
    REQUIRE(ExponentPolynomial::monomial_symmetric(Partition{1, 1, 1}, 2)
                .terms()
                .empty());

    REQUIRE(ExponentPolynomial::elementary(2, 3) ==
            ExponentPolynomial::monomial_symmetric(Partition{1, 1}, 3));
    const ExponentPolynomial p2 = ExponentPolynomial::power_sum(2, 3);
    REQUIRE(p2.terms().size() == 3);
    REQUIRE(p2.coefficient({0, 2, 0}) == Rational(1));

    // e_1 * e_1 = p_2 + 2 e_2 (classic Newton baby case)
    const ExponentPolynomial e1 = ExponentPolynomial::elementary(1, 3);
    const ExponentPolynomial lhs = e1 * e1;
    const ExponentPolynomial rhs =
        ExponentPolynomial::power_sum(2, 3) +
        Rational(2) * ExponentPolynomial::elementary(2, 3);
    REQUIRE(lhs == rhs);

    REQUIRE_THROWS_AS(ExponentPolynomial(0), degform::invalid_operand_error);
    REQUIRE_THROWS_AS(e1 * ExponentPolynomial::elementary(1, 2),
                      degform::invalid_operand_error);
}

TEST_CASE("monomial expansions in the elementary basis") {
    using degform::monomial_in_basis;

    // m_(1) = e_1
    REQUIRE(monomial_in_basis(Partition{1}, Basis::elementary).terms ==
            std::map<Partition, Rational>{{Partition{1}, Rational(1)}});
    // m_(1,1) = e_2
    REQUIRE(monomial_in_basis(Partition{1, 1}, Basis::elementary).terms ==
            std::map<Partition, Rational>{{Partition{2}, Rational(1)}});
    // m_(2) = e_1^2 - 2 e_2
    REQUIRE(monomial_in_basis(Partition{2}, Basis::elementary).terms ==
            std::map<Partition, Rational>{{Partition{1, 1}, Rational(1)},
                                          {Partition{2}, Rational(-2)}});
    // m_(1,1,1) = e_3
    REQUIRE(monomial_in_basis(Partition{1, 1, 1}, Basis::elementary).terms ==
            std::map<Partition, Rational>{{Partition{3}, Rational(1)}});
    // m_(1,2) = e_1 e_2 - 3 e_3
    REQUIRE(monomial_in_basis(Partition{1, 2}, Basis::elementary).terms ==
            std::map<Partition, Rational>{{Partition{1, 2}, Rational(1)},
                                          {Partition{3}, Rational(-3)}});
    // m_(3) = e_1^3 - 3 e_1 e_2 + 3 e_3
    REQUIRE(monomial_in_basis(Partition{3}, Basis::elementary).terms ==
            std::map<Partition, Rational>{{Partition{1, 1, 1}, Rational(1)},
                                          {Partition{1, 2}, Rational(-3)},
                                          {Partition{3}, Rational(3)}});
}

TEST_CASE("monomial expansions in the powersum basis") {
    using degform::monomial_in_basis;

    // m_(1) = p_1, m_(2) = p_2, m_(3) = p_3
    for (int k = 1; k <= 3; ++k)
        REQUIRE(monomial_in_basis(Partition{k}, Basis::powersum).terms ==
                std::map<Partition, Rational>{{Partition{k}, Rational(1)}});
    // m_(1,1) = (p_1^2 - p_2)/2
    REQUIRE(monomial_in_basis(Partition{1, 1}, Basis::powersum).terms ==
            std::map<Partition, Rational>{{Partition{1, 1}, Rational(1, 2)},
                                          {Partition{2}, Rational(-1, 2)}});
    // m_(1,2) = p_1 p_2 - p_3
    REQUIRE(monomial_in_basis(Partition{1, 2}, Basis::powersum).terms ==
            std::map<Partition, Rational>{{Partition{1, 2}, Rational(1)},
                                          {Partition{3}, Rational(-1)}});
    // m_(1,1,1) = (p_1^3 - 3 p_1 p_2 + 2 p_3)/6
    REQUIRE(monomial_in_basis(Partition{1, 1, 1}, Basis::powersum).terms ==
            std::map<Partition, Rational>{
                {Partition{1, 1, 1}, Rational(1, 6)},
                {Partition{1, 2}, Rational(-1, 2)},
                {Partition{3}, Rational(1, 3)}});
}

TEST_CASE("expansions reproduce the defining polynomials") {
    // substituting the basis polynomials back into each expansion must give
    // exactly m_alpha, in degree-many variables
    for (int d = 1; d <= 6; ++d)
        for (Basis basis : {Basis::elementary, Basis::powersum})
            for (const Partition& alpha : degform::partitions_of(d)) {
                const SymPolyInBasis q =
                    degform::monomial_in_basis(alpha, basis);
                ExponentPolynomial sum =
                    ExponentPolynomial::constant(Rational(0), d);
                for (const auto& [lambda, coeff] : q.terms)
                    sum = sum + coeff * degform::basis_element_polynomial(
                                            basis, lambda, d);
                REQUIRE(sum == ExponentPolynomial::monomial_symmetric(alpha,
                                                                      d));
            }
}

TEST_CASE("evaluation helpers") {
    using degform::evaluate_in_powersums;
    using degform::evaluate_multiplicative;

    // m_(2) = p_2 at p-values {p_1 = 3, p_2 = 7} is 7
    const SymPolyInBasis m2 =
        degform::monomial_in_basis(Partition{2}, Basis::powersum);
    std::map<int, Rational> values{{1, Rational(3)}, {2, Rational(7)}};
    REQUIRE(evaluate_in_powersums(m2, values) == Rational(7));

    // m_(1,1) = (p_1^2 - p_2)/2 -> (9 - 7)/2 = 1
    const SymPolyInBasis m11 =
        degform::monomial_in_basis(Partition{1, 1}, Basis::powersum);
    REQUIRE(evaluate_in_powersums(m11, values) == Rational(1));

    SymPolyInBasis monomial{Basis::monomial, 1,
                            {{Partition{1}, Rational(1)}}};
    REQUIRE_THROWS_AS(evaluate_multiplicative(monomial, values),
                      degform::invalid_operand_error);
    SymPolyInBasis elem = degform::monomial_in_basis(Partition{2},
                                                     Basis::elementary);
    REQUIRE_THROWS_AS(evaluate_in_powersums(elem, values),
                      degform::invalid_operand_error);
    std::map<int, Rational> missing{{1, Rational(3)}};
    REQUIRE_THROWS_AS(evaluate_in_powersums(m2, missing),
                      degform::invalid_operand_error);
}

TEST_CASE("expansion table caching") {
    const auto& first = degform::monomial_expansion_table(4, Basis::powersum);
    const auto& second = degform::monomial_expansion_table(4, Basis::powersum);
    REQUIRE(&first == &second); // same object: memoized
    REQUIRE(first.size() == 5); // partitions of 4

    REQUIRE_THROWS_AS(degform::monomial_expansion_table(3, Basis::monomial),
                      degform::invalid_operand_error);
    REQUIRE_THROWS_AS(degform::monomial_expansion_table(-1, Basis::powersum),
                      degform::invalid_operand_error);

    // concurrent first-touch on fresh degrees must be safe and consistent
    std::vector<std::thread> workers;
    std::vector<const std::map<Partition, SymPolyInBasis>*> seen(8, nullptr);
    for (int i = 0; i < 8; ++i)
        workers.emplace_back([i, &seen] {
            seen[i] = &degform::monomial_expansion_table(7, Basis::elementary);
        });
    for (std::thread& w : workers)
        w.join();
    for (int i = 1; i < 8; ++i)
        REQUIRE(seen[i] == seen[0]);
}
