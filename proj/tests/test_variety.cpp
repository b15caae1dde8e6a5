#include <catch2/catch_amalgamated.hpp>

#include "degform/variety.hpp"

using degform::BigInt;
using degform::CompleteIntersection;
using degform::Partition;
using degform::Rational;

TEST_CASE("complete intersection model") {
    const CompleteIntersection conic(2, {2});
    REQUIRE(conic.ambient() == 2);
    REQUIRE(conic.codim() == 1);
    REQUIRE(conic.dim() == 1);
    REQUIRE(conic.degree_product() == 2);
    REQUIRE(conic.point_index() == 2); // default: the degree product
    REQUIRE(conic.to_string() == "P^2, degrees (2), n_X = 2");

    const CompleteIntersection with_point(2, {2}, BigInt(1));
    REQUIRE(with_point.point_index() == 1);
    REQUIRE(with_point != conic);

    const CompleteIntersection proj3(3, {});
    REQUIRE(proj3.dim() == 3);
    REQUIRE(proj3.degree_product() == 1);
    REQUIRE(proj3.to_string() == "P^3, degrees (), n_X = 1");

    // degrees are kept sorted, so listing order does not matter
    REQUIRE(CompleteIntersection(5, {3, 2}).degrees() ==
            std::vector<int>{2, 3});
    REQUIRE(CompleteIntersection(5, {3, 2}) ==
            CompleteIntersection(5, {2, 3}));

    REQUIRE_THROWS_AS(CompleteIntersection(0, {}),
                      degform::invalid_operand_error);
    REQUIRE_THROWS_AS(CompleteIntersection(2, {0}),
                      degform::invalid_operand_error);
    REQUIRE_THROWS_AS(CompleteIntersection(3, {2, 2, 2}), // dim 0
                      degform::invalid_operand_error);
    REQUIRE_THROWS_AS(CompleteIntersection(2, {2}, BigInt(3)), // 3 ∤ 2
                      degform::invalid_operand_error);
    REQUIRE_THROWS_AS(CompleteIntersection(2, {2}, BigInt(0)),
                      degform::invalid_operand_error);
}

TEST_CASE("Euler characteristic: residue route on known varieties") {
    for (int n = 1; n <= 6; ++n)
        REQUIRE(degform::euler_char_residue(CompleteIntersection(n, {})) ==
                1);

    // plane curves: chi = 1 - genus, genus (d-1)(d-2)/2
    for (int d = 1; d <= 8; ++d)
        REQUIRE(degform::euler_char_residue(CompleteIntersection(2, {d})) ==
                1 - (d - 1) * (d - 2) / 2);

    // surfaces in P^3: chi = d(d^2 - 6d + 11)/6
    for (int d = 1; d <= 9; ++d)
        REQUIRE(degform::euler_char_residue(CompleteIntersection(3, {d})) ==
                d * (d * d - 6 * d + 11) / 6);

    REQUIRE(degform::euler_char_residue(CompleteIntersection(3, {4})) == 2);
    REQUIRE(degform::euler_char_residue(CompleteIntersection(2, {3})) == 0);
    REQUIRE(degform::euler_char_residue(CompleteIntersection(4, {5})) == 0);
    REQUIRE(degform::euler_char_residue(CompleteIntersection(4, {2})) == 1);
    REQUIRE(degform::euler_char_residue(CompleteIntersection(4, {3})) == 1);
    REQUIRE(degform::euler_char_residue(CompleteIntersection(5, {2})) == 1);
    REQUIRE(degform::euler_char_residue(CompleteIntersection(4, {2, 2})) ==
            1);
    // (2,2) in P^3 is the elliptic quartic curve: trivial canonical class by
    // adjunction, genus 1, so chi vanishes.
    REQUIRE(degform::euler_char_residue(CompleteIntersection(3, {2, 2})) ==
            0);
}

TEST_CASE("Chern class scalars of -T_X") {
    const degform::PowerSeries line =
        degform::chern_class_coeffs(CompleteIntersection(1, {}));
    REQUIRE(line.coefficient(0) == Rational(1));
    REQUIRE(line.coefficient(1) == Rational(-2));

    REQUIRE(degform::chern_class_coeffs(CompleteIntersection(2, {2}))
                .coefficient(1) == Rational(-1));

    const degform::PowerSeries k3 =
        degform::chern_class_coeffs(CompleteIntersection(3, {4}));
    REQUIRE(k3.coefficient(1) == Rational(0));
    REQUIRE(k3.coefficient(2) == Rational(-6));

    const degform::PowerSeries cubic3 =
        degform::chern_class_coeffs(CompleteIntersection(4, {3}));
    REQUIRE(cubic3.coefficient(1) == Rational(-2));
    REQUIRE(cubic3.coefficient(2) == Rational(0));
    REQUIRE(cubic3.coefficient(3) == Rational(10));
}

TEST_CASE("power sums of -T_X") {
    const CompleteIntersection conic(2, {2});
    REQUIRE(degform::power_sums(conic, 1) == Rational(-1));
    REQUIRE(degform::power_sums(conic, 2) == Rational(1));

    const CompleteIntersection k3(3, {4});
    REQUIRE(degform::power_sums(k3, 1) == Rational(0));
    REQUIRE(degform::power_sums(k3, 2) == Rational(12));

    const CompleteIntersection x(7, {2, 3, 4});
    REQUIRE(degform::power_sums(x, 1) == Rational(1));
    REQUIRE(degform::power_sums(x, 2) == Rational(21));
    REQUIRE(degform::power_sums(x, 3) == Rational(91));

    REQUIRE_THROWS_AS(degform::power_sums(conic, 0),
                      degform::invalid_operand_error);

    // Newton's identities tie the power sums to the Chern scalars e_i:
    // p_k = (-1)^{k-1} k e_k + sum_{i<k} (-1)^{k-1-i} e_{k-i} p_i
    for (const CompleteIntersection& v :
         {CompleteIntersection(4, {3}), CompleteIntersection(5, {2, 4}),
          CompleteIntersection(6, {})}) {
        const degform::PowerSeries chern = degform::chern_class_coeffs(v);
        std::vector<Rational> p(v.dim() + 1, Rational(0));
        for (int k = 1; k <= v.dim(); ++k) {
            Rational pk =
                Rational(k % 2 == 0 ? -k : k) * chern.coefficient(k);
            for (int i = 1; i < k; ++i) {
                Rational term = chern.coefficient(k - i) * p[i];
                pk += ((k - 1 - i) % 2 != 0) ? -term : term;
            }
            p[k] = pk;
        }
        for (int k = 1; k <= v.dim(); ++k)
            REQUIRE(degform::power_sums(v, k) == p[k]);
    }
}

TEST_CASE("characteristic numbers") {
    REQUIRE(degform::char_number(CompleteIntersection(1, {}), Partition{1}) ==
            -2);
    REQUIRE(degform::char_number(CompleteIntersection(2, {2}),
                                 Partition{1}) == -2);

    const CompleteIntersection k3(3, {4});
    REQUIRE(degform::char_number(k3, Partition{1, 1}) == -24);
    REQUIRE(degform::char_number(k3, Partition{2}) == 48);

    const CompleteIntersection quadric3(4, {2});
    REQUIRE(degform::char_number(quadric3, Partition{1, 1, 1}) == -10);
    REQUIRE(degform::char_number(quadric3, Partition{1, 2}) == 0);
    REQUIRE(degform::char_number(quadric3, Partition{3}) == 6);

    const CompleteIntersection cubic3(4, {3});
    REQUIRE(degform::char_number(cubic3, Partition{1, 1, 1}) == 30);
    REQUIRE(degform::char_number(cubic3, Partition{1, 2}) == -90);
    REQUIRE(degform::char_number(cubic3, Partition{3}) == 66);

    REQUIRE_THROWS_AS(degform::char_number(k3, Partition{1}),
                      degform::invalid_operand_error);
    REQUIRE_THROWS_AS(degform::char_number_via_chern(k3, Partition{1, 1, 1}),
                      degform::invalid_operand_error);
}

TEST_CASE("characteristic number routes agree") {
    for (const CompleteIntersection& v :
         {CompleteIntersection(3, {4}), CompleteIntersection(4, {2, 3}),
          CompleteIntersection(5, {}), CompleteIntersection(6, {2, 2, 3}),
          CompleteIntersection(7, {3, 5})})
        for (const Partition& alpha : degform::partitions_of(v.dim()))
            REQUIRE(degform::char_number(v, alpha) ==
                    degform::char_number_via_chern(v, alpha));
}

TEST_CASE("characteristic number tables") {
    const CompleteIntersection k3(3, {4});
    const degform::CharNumberTable table = degform::compute_char_numbers(k3);
    REQUIRE(table.variety == k3);
    REQUIRE(table.entries.size() == 2); // partitions of 2
    REQUIRE(table.entries.at(Partition{1, 1}) == -24);
    REQUIRE(table.entries.at(Partition{2}) == 48);

    // memoized: a second call and a different point index give equal entries
    REQUIRE(degform::compute_char_numbers(k3) == table);
    const degform::CharNumberTable half =
        degform::compute_char_numbers(CompleteIntersection(3, {4}, BigInt(2)));
    REQUIRE(half.entries == table.entries);
    REQUIRE(half.variety != table.variety);

    // the degree product divides every characteristic number
    const CompleteIntersection x(6, {2, 2, 3});
    const BigInt prod = x.degree_product();
    for (const auto& [alpha, c] : degform::compute_char_numbers(x).entries)
        REQUIRE(c % prod == 0);
}

TEST_CASE("Euler characteristic via characteristic numbers") {
    // closed forms in low dimension
    const CompleteIntersection quartic_curve(2, {4});
    REQUIRE(degform::euler_char_via_charnumbers(quartic_curve) ==
            Rational(-degform::char_number(quartic_curve, Partition{1}), 2)
                .as_integer());

    const CompleteIntersection k3(3, {4});
    REQUIRE(degform::euler_char_via_charnumbers(k3) ==
            (Rational(degform::char_number(k3, Partition{1, 1}), 4) +
             Rational(degform::char_number(k3, Partition{2}), 6))
                .as_integer());

    const CompleteIntersection cubic3(4, {3});
    REQUIRE(degform::euler_char_via_charnumbers(cubic3) ==
            (Rational(-30, 8) - Rational(-90, 12) - Rational(66, 24))
                .as_integer());

    // agreement with the residue route across a mixed sample
    for (const CompleteIntersection& v :
         {CompleteIntersection(2, {5}), CompleteIntersection(4, {2, 2}),
          CompleteIntersection(5, {3}), CompleteIntersection(6, {}),
          CompleteIntersection(7, {2, 2, 2, 2})})
        REQUIRE(degform::euler_char_via_charnumbers(v) ==
                degform::euler_char_residue(v));
}

TEST_CASE("Rost numbers") {
    REQUIRE(degform::rost_number(CompleteIntersection(2, {2}), 2) == -1);
    REQUIRE(degform::rost_number(CompleteIntersection(2, {3}), 2) == 0);

    const CompleteIntersection k3(3, {4});
    REQUIRE(degform::rost_number(k3, 2) == -12);
    REQUIRE(degform::rost_number(k3, 3) == 16);

    REQUIRE(degform::rost_number(CompleteIntersection(4, {2}), 2) == -5);
    REQUIRE(degform::rost_number(CompleteIntersection(4, {3}), 2) == 15);
    REQUIRE(degform::rost_number(CompleteIntersection(5, {5}), 5) == 619);

    // (p-1) must divide the dimension
    REQUIRE_THROWS_AS(degform::rost_number(k3, 5),
                      degform::not_applicable_error);
    REQUIRE_THROWS_AS(degform::rost_number(CompleteIntersection(2, {2}), 3),
                      degform::not_applicable_error);
    REQUIRE_THROWS_AS(degform::rost_number(k3, 4),
                      degform::invalid_operand_error);
}

TEST_CASE("u_p combinations") {
    // curves: u_2 = c_(1)/2
    REQUIRE(degform::u_p(CompleteIntersection(2, {2}), 2) == -1);
    REQUIRE(degform::u_p(CompleteIntersection(2, {3}), 2) == 0);
    REQUIRE(degform::u_p(CompleteIntersection(2, {4}), 2) == 2);

    // surfaces: u_2 = c_(1,1)/2, u_3 = c_(2)/3
    const CompleteIntersection k3(3, {4});
    REQUIRE(degform::u_p(k3, 2) == -12);
    REQUIRE(degform::u_p(k3, 3) == 16);

    // 3-folds: u_2 = 3/2 c_(1,1,1) + 1/2 c_(3); no Lambda_3 partitions, so
    // u_3 vanishes identically
    REQUIRE(degform::u_p(CompleteIntersection(4, {2}), 2) == -12);
    REQUIRE(degform::u_p(CompleteIntersection(4, {3}), 2) == 78);
    REQUIRE(degform::u_p(CompleteIntersection(4, {2}), 3) == 0);
    REQUIRE(degform::u_p(CompleteIntersection(4, {3}), 3) == 0);

    // 4-folds at p=5: single partition (4), weight 1/5
    REQUIRE(degform::u_p(CompleteIntersection(5, {5}), 5) == 619);

    REQUIRE_THROWS_AS(degform::u_p(k3, 6), degform::invalid_operand_error);
}
