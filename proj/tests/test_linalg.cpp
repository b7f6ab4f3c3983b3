#include <random>

#include "doctest.h"
#include "dualgap/exact_linalg.hpp"

using namespace dualgap;

namespace {

ExactMatrix random_rational_matrix(std::mt19937_64& rng, Eigen::Index n) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 7);
    ExactMatrix m(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) m(i, j) = Rational(Int(num(rng)), Int(den(rng)));
    }
    return m;
}

}  // namespace

TEST_CASE("determinant, rank, kernel") {
    ExactMatrix a(2, 2);
    a << Rational(1), Rational(4), Rational(4), Rational(1);
    CHECK(linalg::det(a) == Rational(-15));
    CHECK(linalg::rank(a) == 2);

    ExactMatrix s(3, 3);
    s << Rational(1), Rational(2), Rational(3),
         Rational(2), Rational(4), Rational(6),
         Rational(1), Rational(0), Rational(1);
    const auto an = linalg::analyze(s);
    CHECK(an.rank == 2);
    CHECK(an.det == Rational(0));
    REQUIRE(an.kernel_vector.has_value());
    ExactVector k = *an.kernel_vector;
    bool nonzero = false;
    for (Eigen::Index i = 0; i < 3; ++i) nonzero = nonzero || !k(i).is_zero();
    CHECK(nonzero);
    const ExactVector sk = s * k;
    for (Eigen::Index i = 0; i < 3; ++i) CHECK(sk(i) == Rational(0));
}

TEST_CASE("solve and inverse round-trip on random matrices") {
    std::mt19937_64 rng(20240811);
    int solved = 0;
    while (solved < 12) {
        const Eigen::Index n = 1 + static_cast<Eigen::Index>(rng() % 8);
        const ExactMatrix a = random_rational_matrix(rng, n);
        if (linalg::det(a).is_zero()) continue;
        const ExactMatrix inv = linalg::inverse(a);
        CHECK(linalg::is_identity(a * inv));
        CHECK(linalg::is_identity(inv * a));

        ExactMatrix rhs = random_rational_matrix(rng, n).col(0);
        const ExactMatrix x = linalg::solve(a, rhs);
        CHECK(linalg::equal(a * x, rhs));
        ++solved;
    }
}

TEST_CASE("singular solve throws") {
    ExactMatrix a = ExactMatrix::Constant(2, 2, Rational(3));
    ExactMatrix rhs(2, 1);
    rhs << Rational(1), Rational(0);
    CHECK_THROWS_AS(linalg::solve(a, rhs), SingularMatrixError);
}

TEST_CASE("dump and parse round-trip") {
    ExactMatrix a(2, 3);
    a << Rational(1, 2), Rational(-3), Rational(0),
         Rational(7, 5), Rational(2), Rational(-1, 9);
    const std::string text = linalg::dump(a);
    CHECK(linalg::equal(linalg::parse_matrix(text), a));
    CHECK(text == "1/2 -3 0\n7/5 2 -1/9\n");
}
