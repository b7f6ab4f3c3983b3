#include <random>

#include "doctest.h"
#include "dualgap/code_builder.hpp"
#include "dualgap/reference_examples.hpp"

using namespace dualgap;

namespace {

FieldWeight euclidean_f5() {
    auto f = FiniteField::build(5, 1);
    return FieldWeight(std::move(f), {Rational(0), Rational(1), Rational(4), Rational(4), Rational(1)});
}

FieldWeight two_valued_f25() {
    auto f = FiniteField::build(5, 2, std::vector<long>{2, 4, 1});
    return FieldWeight::from_coset_values(std::move(f), {Rational(3), Rational(2)});
}

struct F5Setup {
    OrbitFrame frame;
    FieldWeight w;
    OrbitMatrix big;
    OrbitMatrix inv;

    F5Setup()
        : frame(FiniteField::build(5, 1), 2),
          w(euclidean_f5()),
          big(weight_orbit_matrix(frame, w)),
          inv(invert_orbit_matrix(frame, w.invariant()).second) {}
};

std::vector<Int> to_mult(const std::vector<int>& v) { return std::vector<Int>(v.begin(), v.end()); }

}  // namespace

TEST_CASE("two-valued targets") {
    const F5Setup s;
    const Rational rho(5, 8);
    const ExactVector omega = two_valued_targets(s.frame, {2, 3}, rho);
    for (Eigen::Index i = 0; i < 12; ++i) CHECK(omega(i) == (i == 2 || i == 3 ? rho : Rational(1)));
    CHECK_THROWS_AS(two_valued_targets(s.frame, {12}, rho), DomainError);
}

TEST_CASE("affine multiplicity solutions match the reference forms") {
    const F5Setup s;
    const auto sol = solve_multiplicity(s.inv, {2, 3});
    const auto sol_p = solve_multiplicity(s.inv, {0, 2});
    for (Eigen::Index i = 0; i < 12; ++i) {
        CHECK(sol.base(i) * Rational(75) == Rational(golden::kF5EtaConst[i]));
        CHECK(sol.slope(i) * Rational(75) == Rational(golden::kF5EtaSlope[i]));
        CHECK(sol_p.base(i) * Rational(75) == Rational(golden::kF5EtaPrimeConst[i]));
        CHECK(sol_p.slope(i) * Rational(75) == Rational(golden::kF5EtaPrimeSlope[i]));
        // row-sum identity: P + Q = 1/(q w~)
        CHECK(sol.base(i) + sol.slope(i) == Rational(1, 25));
        CHECK(sol_p.base(i) + sol_p.slope(i) == Rational(1, 25));
    }
    // solving the linear system directly gives the same evaluation
    const Rational rho(5, 8);
    const ExactVector eta = sol.eval(rho);
    const ExactMatrix direct =
        linalg::solve(s.big.matrix(), two_valued_targets(s.frame, {2, 3}, rho));
    for (Eigen::Index i = 0; i < 12; ++i) CHECK(eta(i) == direct(i, 0));

    CHECK_THROWS_AS(solve_multiplicity(s.inv, {2, 2}), DomainError);
}

TEST_CASE("nonnegativity interval") {
    const F5Setup s;
    const auto iv = nonnegativity_interval(s.inv, 2);
    CHECK(iv.lo == Rational(5, 8));
    CHECK(iv.hi == Rational(5, 4));

    const auto w25 = two_valued_f25();
    const OrbitFrame frame25(w25.field(), 2);
    const auto inv25 = invert_orbit_matrix(frame25, w25.invariant()).second;
    const auto iv25 = nonnegativity_interval(inv25, 2);
    CHECK(iv25.lo == Rational(5, 6));
    CHECK(iv25.hi == Rational(25, 24));

    CHECK_THROWS_AS(nonnegativity_interval(s.inv, 0), DomainError);
    CHECK_THROWS_AS(nonnegativity_interval(s.inv, 12), DomainError);
}

TEST_CASE("subset selection") {
    const F5Setup s;
    const auto choice = select_subsets(s.inv);
    CHECK(choice.case_tag == 1);
    CHECK(choice.m1 == 1);
    CHECK(choice.s == std::vector<long>{2, 3});
    std::vector<long> sp = choice.s_prime;
    std::sort(sp.begin(), sp.end());
    CHECK(sp == std::vector<long>{0, 2});

    // F_25 only qualifies under the looser comparison
    const auto w25 = two_valued_f25();
    const OrbitFrame frame25(w25.field(), 2);
    const auto inv25 = invert_orbit_matrix(frame25, w25.invariant()).second;
    const auto choice25 = select_subsets(inv25);
    CHECK(choice25.case_tag == 3);
    CHECK(choice25.m1 == 1);
}

TEST_CASE("difference quadratic") {
    const F5Setup s;
    const auto sol = solve_multiplicity(s.inv, {2, 3});
    const auto sol_p = solve_multiplicity(s.inv, {0, 2});
    const auto f = rho_polynomial(sol, sol_p, s.inv);
    // 5625 f = 100 (rho - 1)^2
    CHECK(f.c2 * Rational(5625) == Rational(100));
    CHECK(f.c1 * Rational(5625) == Rational(-200));
    CHECK(f.c0 * Rational(5625) == Rational(100));
    // rho = 1 is a double zero: f(1) = 0 and f'(1) = 0
    CHECK(f.eval(Rational(1)).is_zero());
    CHECK((f.c1 + Rational(2) * f.c2).is_zero());

    CHECK(choose_rho(Rational(5, 8), Rational(5, 4), f) == Rational(5, 8));
    CHECK_THROWS_AS(choose_rho(Rational(1), Rational(1), f), DomainError);

    // the double zero holds for every same-size subset pair
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<long> a, b;
        while (a.size() < 3) {
            const long idx = static_cast<long>(rng() % 12);
            if (std::find(a.begin(), a.end(), idx) == a.end()) a.push_back(idx);
        }
        while (b.size() < 3) {
            const long idx = static_cast<long>(rng() % 12);
            if (std::find(b.begin(), b.end(), idx) == b.end()) b.push_back(idx);
        }
        const auto fa = solve_multiplicity(s.inv, a);
        const auto fb = solve_multiplicity(s.inv, b);
        const auto q = rho_polynomial(fa, fb, s.inv);
        CHECK(q.eval(Rational(1)).is_zero());
        CHECK((q.c1 + Rational(2) * q.c2).is_zero());
    }
}

TEST_CASE("same-size subsets conserve total multiplicity") {
    const F5Setup s;
    std::mt19937_64 rng(23);
    const Rational rho(7, 8);
    for (int size = 1; size <= 4; ++size) {
        Rational expected(-1);
        for (int trial = 0; trial < 6; ++trial) {
            std::vector<long> subset;
            while (static_cast<int>(subset.size()) < size) {
                const long idx = static_cast<long>(rng() % 12);
                if (std::find(subset.begin(), subset.end(), idx) == subset.end()) subset.push_back(idx);
            }
            const ExactVector eta = solve_multiplicity(s.inv, subset).eval(rho);
            Rational total(0);
            for (Eigen::Index i = 0; i < eta.rows(); ++i) total += eta(i);
            if (expected.sign() < 0) {
                expected = total;
            } else {
                CHECK(total == expected);
            }
        }
    }
}

TEST_CASE("doubleton form scaling identity") {
    std::mt19937_64 rng(37);
    std::uniform_int_distribution<int> num(0, 9);
    for (int trial = 0; trial < 10; ++trial) {
        ExactVector a(6), b(6);
        Rational sa(0), sb(0);
        for (Eigen::Index i = 0; i < 6; ++i) {
            a(i) = Rational(Int(num(rng)), Int(1 + num(rng)));
            b(i) = Rational(Int(num(rng)), Int(1 + num(rng)));
            sa += a(i);
            sb += b(i);
        }
        // rescale b to share a's sum
        if (sb.is_zero()) continue;
        for (Eigen::Index i = 0; i < 6; ++i) b(i) *= sa / sb;
        const Rational n(5);
        ExactVector na = a, nb = b;
        for (Eigen::Index i = 0; i < 6; ++i) {
            na(i) *= n;
            nb(i) *= n;
        }
        CHECK(doubleton_form(na) - doubleton_form(nb) == n * n * (doubleton_form(a) - doubleton_form(b)));
    }
}

TEST_CASE("integer scaling reproduces the reference code pairs") {
    const F5Setup s;
    const auto sol = solve_multiplicity(s.inv, {2, 3});
    const auto sol_p = solve_multiplicity(s.inv, {0, 2});

    SUBCASE("lower endpoint") {
        const auto scaled = scale_to_integers(sol.eval(Rational(5, 8)), sol_p.eval(Rational(5, 8)));
        CHECK(scaled.scaling == 40);
        CHECK(scaled.length == 18);
        CHECK(scaled.mult_c == to_mult(golden::kF5EtaCMinus));
        CHECK(scaled.mult_d == to_mult(golden::kF5EtaDMinus));

        const ExactVector omega_c = orbit_weights(s.big, scaled.mult_c);
        const ExactVector omega_d = orbit_weights(s.big, scaled.mult_d);
        for (Eigen::Index i = 0; i < 12; ++i) {
            CHECK(omega_c(i) == Rational(golden::kF5OmegaCMinus[i]));
            CHECK(omega_d(i) == Rational(golden::kF5OmegaDMinus[i]));
        }
    }
    SUBCASE("upper endpoint") {
        const auto scaled = scale_to_integers(sol.eval(Rational(5, 4)), sol_p.eval(Rational(5, 4)));
        CHECK(scaled.scaling == 60);
        CHECK(scaled.length == 30);
        CHECK(scaled.mult_c == to_mult(golden::kF5EtaCPlus));
        CHECK(scaled.mult_d == to_mult(golden::kF5EtaDPlus));

        const ExactVector omega_c = orbit_weights(s.big, scaled.mult_c);
        const ExactVector omega_d = orbit_weights(s.big, scaled.mult_d);
        for (Eigen::Index i = 0; i < 12; ++i) {
            CHECK(omega_c(i) == Rational(golden::kF5OmegaCPlus[i]));
            CHECK(omega_d(i) == Rational(golden::kF5OmegaDPlus[i]));
        }
    }
    SUBCASE("negative entries rejected") {
        CHECK_THROWS_AS(scale_to_integers(sol.eval(Rational(3)), sol_p.eval(Rational(3))), DomainError);
    }
}

TEST_CASE("weight distributions and the exhaustive oracle") {
    const F5Setup s;
    const auto dist_c = weight_distribution(s.frame, to_mult(golden::kF5EtaCMinus), s.big);
    CHECK(dist_c == std::map<Rational, Int>{{Rational(0), 1}, {Rational(25), 4}, {Rational(40), 20}});
    const auto dist_d = weight_distribution(s.frame, to_mult(golden::kF5EtaDMinus), s.big);
    CHECK(dist_c == dist_d);

    const auto dist_cp = weight_distribution(s.frame, to_mult(golden::kF5EtaCPlus), s.big);
    CHECK(dist_cp == std::map<Rational, Int>{{Rational(0), 1}, {Rational(60), 20}, {Rational(75), 4}});

    for (const auto* mult : {&golden::kF5EtaCMinus, &golden::kF5EtaDMinus, &golden::kF5EtaCPlus,
                             &golden::kF5EtaDPlus}) {
        CHECK(weight_distribution(s.frame, to_mult(*mult), s.big) ==
              weight_distribution_by_enumeration(s.frame, s.w, to_mult(*mult)));
    }
}

TEST_CASE("egalitarian identity") {
    const F5Setup s;
    const auto mult = to_mult(golden::kF5EtaCMinus);
    const auto dist = weight_distribution(s.frame, mult, s.big);
    const auto check = egalitarian_check(s.frame, s.w, mult, dist);
    CHECK(check.holds);
    CHECK(check.zeta == Rational(2));
    CHECK(check.effective_length == 18);
    CHECK(check.codeword_weight_sum == Rational(900));

    // all-zero multiplicity: both sides vanish
    const std::vector<Int> zero(12, 0);
    const auto zdist = weight_distribution(s.frame, zero, s.big);
    CHECK(egalitarian_check(s.frame, s.w, zero, zdist).holds);
}

TEST_CASE("dual small-weight counts") {
    const F5Setup s;
    CHECK(doubleton_dual_count(s.frame, s.w, to_mult(golden::kF5EtaCMinus)) == golden::kF5DualCountCMinus);
    CHECK(doubleton_dual_count(s.frame, s.w, to_mult(golden::kF5EtaDMinus)) == golden::kF5DualCountDMinus);
    CHECK(doubleton_dual_count(s.frame, s.w, to_mult(golden::kF5EtaCPlus)) == golden::kF5DualCountCPlus);
    CHECK(doubleton_dual_count(s.frame, s.w, to_mult(golden::kF5EtaDPlus)) == golden::kF5DualCountDPlus);

    // padding with zero columns adds |H|^2 binom(n0, 2) doubletons
    CHECK(doubleton_dual_count(s.frame, s.w, to_mult(golden::kF5EtaCMinus), Int(3)) ==
          golden::kF5DualCountCMinus + 4 * 3);

    // cross-coset count requires t = 2 with values {2, 3}
    CHECK_THROWS_AS(cross_coset_dual_count(s.frame, s.w, to_mult(golden::kF5EtaCMinus)), DomainError);

    const auto w25 = two_valued_f25();
    const OrbitFrame frame25(w25.field(), 2);
    std::vector<Int> mult(52, 1);
    mult[2] = 3;
    Int expected = 0;
    for (long block = 0; block < 26; ++block) expected += mult[2 * block] * mult[2 * block + 1] * 24;
    CHECK(cross_coset_dual_count(frame25, w25, mult) == expected);
}
