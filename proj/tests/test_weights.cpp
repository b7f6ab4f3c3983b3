#include <random>

#include "doctest.h"
#include "dualgap/weights.hpp"

using namespace dualgap;

namespace {

FieldWeight euclidean_f5() {
    auto f = FiniteField::build(5, 1);
    return FieldWeight(std::move(f), {Rational(0), Rational(1), Rational(4), Rational(4), Rational(1)});
}

}  // namespace

TEST_CASE("Euclidean weight on F_5") {
    const auto w = euclidean_f5();
    REQUIRE(w.symmetry_group().size() == 2);
    CHECK(w.symmetry_group()[0].code == 1);
    CHECK(w.symmetry_group()[1].code == 4);
    CHECK(w.coset_count() == 2);
    CHECK(w.min_positive() == Rational(1));
    CHECK(w.max_value() == Rational(4));
    CHECK(w.coset_sum() == Rational(5));

    const ExactMatrix m = w.coset_matrix();
    CHECK(m(0, 0) == Rational(1));
    CHECK(m(0, 1) == Rational(4));
    CHECK(m(1, 0) == Rational(4));
    CHECK(m(1, 1) == Rational(1));

    const auto nd = w.nondegeneracy();
    CHECK(nd.nondegenerate);
    CHECK(nd.det == Rational(-15));
}

TEST_CASE("Hamming weight has full symmetry") {
    const auto f = FiniteField::build(7, 1);
    const auto w = FieldWeight::from_coset_values(f, {Rational(1)});
    CHECK(w.symmetry_group().size() == 6);
    CHECK(w.coset_count() == 1);
    const ExactMatrix m = w.coset_matrix();
    CHECK(m.rows() == 1);
    CHECK(m(0, 0) == Rational(1));
}

TEST_CASE("two-valued weight on F_25") {
    const auto f = FiniteField::build(5, 2, std::vector<long>{2, 4, 1});
    const auto w = FieldWeight::from_coset_values(f, {Rational(3), Rational(2)});
    CHECK(w.coset_count() == 2);
    CHECK(w.symmetry_group().size() == 12);
    const ExactMatrix m = w.coset_matrix();
    CHECK(m(0, 0) == Rational(3));
    CHECK(m(0, 1) == Rational(2));
    CHECK(m(1, 1) == Rational(3));
}

TEST_CASE("weight validation") {
    auto f = FiniteField::build(5, 1);
    CHECK_THROWS_AS(FieldWeight(f, {Rational(1), Rational(1), Rational(1), Rational(1), Rational(1)}), DomainError);
    CHECK_THROWS_AS(FieldWeight(f, {Rational(0), Rational(0), Rational(1), Rational(1), Rational(1)}), DomainError);
    CHECK_THROWS_AS(FieldWeight(f, {Rational(0), Rational(-1), Rational(1), Rational(1), Rational(1)}), DomainError);
}

TEST_CASE("correlations of the Euclidean weight and its inverse table") {
    const auto w = euclidean_f5();
    const auto inv = w.invariant();
    CHECK(correlation(inv, inv, 0) == Rational(17));
    CHECK(correlation(inv, inv, 1) == Rational(8));
    CHECK(w.coset_sum() == Rational(5));

    // table generating -75 * W^{-1}
    const InvariantTable b{Rational(6), {Rational(1), Rational(-4)}};
    CHECK(b.coset_sum() == Rational(-3));
    CHECK(correlation(b, b, 0) == Rational(17));
    CHECK(correlation(b, b, 1) == Rational(-8));
}

TEST_CASE("correlation identities") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> val(-6, 6);
    for (int t : {2, 3, 5, 6}) {
        InvariantTable a{Rational(val(rng))}, b{Rational(val(rng))};
        for (int j = 0; j < t; ++j) {
            a.coset.emplace_back(val(rng));
            b.coset.emplace_back(val(rng));
        }
        for (int m = 0; m < t; ++m) {
            CHECK(correlation(a, b, m + t) == correlation(a, b, m));
            CHECK(correlation(a, b, t - m) == correlation(b, a, m));
            CHECK(correlation(a, a, t - m) == correlation(a, a, m));
        }
        CHECK(correlation(a, a, 0) == [&] {
            Rational s(0);
            for (const auto& v : a.coset) s += v * v;
            return s;
        }());
    }
}

TEST_CASE("main theorem hypotheses") {
    SUBCASE("Euclidean on F_5: all five hold") {
        const auto r = main_theorem_hypotheses(euclidean_f5());
        CHECK(r.all_hold());
        CHECK(r.integer_valued);
        // q c_1 = 40, ((q-1)/t) w_sum^2 = 50
        REQUIRE(r.comparison_values.size() == 2);
        CHECK(r.comparison_values[0] == Rational(40));
        CHECK(r.comparison_values[1] == Rational(50));
    }
    SUBCASE("F_9 weight (1 on aH, 2 on H): equality kills the last hypothesis") {
        const auto f = FiniteField::build(3, 2, std::vector<long>{2, 2, 1});
        const auto w = FieldWeight::from_coset_values(f, {Rational(2), Rational(1)});
        const auto r = main_theorem_hypotheses(w);
        CHECK(r.nondegenerate);
        CHECK(r.minus_one_in_sym);
        CHECK(r.proper_symmetry);
        CHECK(r.minimum_on_unique_coset);
        CHECK_FALSE(r.comparison_values_distinct);
        REQUIRE(r.comparison_values.size() == 2);
        CHECK(r.comparison_values[0] == Rational(36));
        CHECK(r.comparison_values[1] == Rational(36));
        CHECK_FALSE(r.all_hold());
        CHECK(r.first_failure() == "q c_m(w,w) and ((q-1)/t) w_sum^2 are all equal");
    }
    SUBCASE("Hamming on F_5: symmetry group is everything") {
        const auto f = FiniteField::build(5, 1);
        const auto w = FieldWeight::from_coset_values(f, {Rational(1)});
        const auto r = main_theorem_hypotheses(w);
        CHECK_FALSE(r.proper_symmetry);
        CHECK_FALSE(r.all_hold());
    }
}

TEST_CASE("t = 2 equality roots") {
    const auto r9 = t2_equality_roots(9);
    REQUIRE(r9.has_value());
    CHECK(r9->first == Rational(2));
    CHECK(r9->second == Rational(1, 2));
    const auto r25 = t2_equality_roots(25);
    REQUIRE(r25.has_value());
    CHECK(r25->first == Rational(3, 2));
    CHECK(r25->second == Rational(2, 3));
    CHECK_FALSE(t2_equality_roots(5).has_value());
    CHECK_FALSE(t2_equality_roots(7).has_value());
    CHECK_THROWS_AS(t2_equality_roots(16), DomainError);
}

TEST_CASE("every t = 2 weight with distinct values is nondegenerate") {
    for (long q : {5L, 9L, 13L}) {
        const auto f = q == 9 ? FiniteField::build(3, 2) : FiniteField::build(q, 1);
        std::mt19937_64 rng(q);
        std::uniform_int_distribution<int> val(1, 30);
        for (int trial = 0; trial < 20; ++trial) {
            const int w1 = val(rng);
            int w2 = val(rng);
            if (w1 == w2) continue;
            const auto w = FieldWeight::from_coset_values(f, {Rational(w1), Rational(w2)});
            const auto nd = w.nondegeneracy();
            CHECK(nd.nondegenerate);
            CHECK(nd.det == Rational(w1) * Rational(w1) - Rational(w2) * Rational(w2));
        }
    }
}

TEST_CASE("odd non-square q with t = 2 always separates the comparison values") {
    for (long q : {5L, 7L, 11L, 13L}) {
        const auto f = FiniteField::build(q, 1);
        for (int w1 = 1; w1 <= 20; ++w1) {
            for (int w2 = 1; w2 <= 20; ++w2) {
                if (w1 == w2) continue;
                const auto w = FieldWeight::from_coset_values(f, {Rational(w1), Rational(w2)});
                if (w.coset_count() != 2) continue;
                const auto r = main_theorem_hypotheses(w);
                CHECK(r.comparison_values_distinct);
            }
        }
    }
}

TEST_CASE("ring weights and the orbit matrix") {
    const auto lee4 = power_weight(4, 1);
    CHECK(lee4.values() == std::vector<Rational>{Rational(0), Rational(1), Rational(2), Rational(1)});
    CHECK(lee4.symmetry_group() == std::vector<long>{1, 3});
    CHECK(lee4.orbit_reps() == std::vector<long>{1, 2});

    const auto e5 = power_weight(5, 2);
    CHECK(e5.values() == std::vector<Rational>{Rational(0), Rational(1), Rational(4), Rational(4), Rational(1)});

    const auto p7 = power_weight(7, 3);
    CHECK(p7.values() == std::vector<Rational>{Rational(0), Rational(1), Rational(8), Rational(27), Rational(27),
                                               Rational(8), Rational(1)});

    CHECK(power_weight(9, 0).values()[4] == Rational(1));  // Hamming
}

TEST_CASE("exhaustive search over small tables hits degenerate orbit matrices") {
    // Free positive tables with values <= 3.  Asymmetric tables on small
    // moduli do go singular (e.g. 0,1,1,2,2 on Z/5Z); mirror-symmetric
    // tables on Z/9Z never do: the determinant there factors as
    // (3 w3^2 / 2) [(w1-w2)^2 + (w1-w4)^2 + (w2-w4)^2], and collapsing the
    // values enlarges the symmetry group, which rescues full rank.
    auto search = [](long m) {
        long singular = 0;
        std::vector<long> v(m - 1, 1);
        while (true) {
            std::vector<Rational> vals;
            vals.emplace_back(0);
            for (long x : v) vals.emplace_back(x);
            const RingWeight w(m, vals);
            const auto nd = w.nondegeneracy();
            if (!nd.nondegenerate) {
                ++singular;
                REQUIRE(nd.kernel.has_value());
                const ExactVector prod = w.orbit_matrix() * (*nd.kernel);
                bool kernel_nonzero = false;
                for (Eigen::Index i = 0; i < prod.rows(); ++i) {
                    REQUIRE(prod(i) == Rational(0));
                    kernel_nonzero = kernel_nonzero || !(*nd.kernel)(i).is_zero();
                }
                REQUIRE(kernel_nonzero);
            }
            size_t i = 0;
            while (i < v.size() && ++v[i] > 3) v[i++] = 1;
            if (i == v.size()) break;
        }
        return singular;
    };
    CHECK(search(5) > 0);
    CHECK(search(6) > 0);

    long z9_mirror_singular = 0;
    for (int v1 = 1; v1 <= 3; ++v1) {
        for (int v2 = 1; v2 <= 3; ++v2) {
            for (int v3 = 1; v3 <= 3; ++v3) {
                for (int v4 = 1; v4 <= 3; ++v4) {
                    const std::vector<Rational> vals = {Rational(0),  Rational(v1), Rational(v2),
                                                        Rational(v3), Rational(v4), Rational(v4),
                                                        Rational(v3), Rational(v2), Rational(v1)};
                    if (!RingWeight(9, vals).nondegeneracy().nondegenerate) ++z9_mirror_singular;
                }
            }
        }
    }
    CHECK(z9_mirror_singular == 0);
}

TEST_CASE("power weight scan cells") {
    const auto cell = scan_power_weight_cell(5, 1);
    CHECK(cell.t == 2);
    CHECK(cell.nondegenerate);
    CHECK_FALSE(cell.c1_ne_c2.has_value());

    const auto cell11 = scan_power_weight_cell(11, 1);
    CHECK(cell11.t == 5);
    REQUIRE(cell11.c1_ne_c2.has_value());
    CHECK(*cell11.c1_ne_c2);

    const auto rows = scan_power_weights({5, 7, 11, 13}, 1, 3);
    CHECK(rows.size() == 12);
    CHECK(rows == scan_power_weights({5, 7, 11, 13}, 1, 3));  // deterministic
    for (const auto& r : rows) CHECK(r.nondegenerate);
    CHECK_THROWS_AS(scan_power_weights({4}, 1, 2), DomainError);
}
