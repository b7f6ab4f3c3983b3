#include <random>

#include "doctest.h"
#include "dualgap/reference_examples.hpp"
#include "dualgap/structured.hpp"

using namespace dualgap;

namespace {

OrbitFrame f5_frame() { return OrbitFrame(FiniteField::build(5, 1), 2); }

FieldWeight euclidean_f5() {
    auto f = FiniteField::build(5, 1);
    return FieldWeight(std::move(f), {Rational(0), Rational(1), Rational(4), Rational(4), Rational(1)});
}

}  // namespace

TEST_CASE("two-level determinant closed form") {
    CHECK(two_level_det({5, Rational(1), Rational(0)}) == Rational(1));
    CHECK(two_level_det({2, Rational(85), Rational(40)}) == Rational(5625));
    CHECK(two_level_det({4, Rational(3), Rational(3)}) == Rational(0));

    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> num(-8, 8);
    std::uniform_int_distribution<int> den(1, 5);
    for (int trial = 0; trial < 24; ++trial) {
        const Eigen::Index n = 1 + static_cast<Eigen::Index>(rng() % 12);
        const TwoLevelMatrix m{n, Rational(Int(num(rng)), Int(den(rng))), Rational(Int(num(rng)), Int(den(rng)))};
        CHECK(two_level_det(m) == linalg::det(m.expand()));
    }
}

TEST_CASE("two-level inverse closed form") {
    const auto id = two_level_inverse({3, Rational(1), Rational(0)});
    CHECK(id.diag == Rational(1));
    CHECK(id.off == Rational(0));

    const auto inv = two_level_inverse({2, Rational(85), Rational(40)});
    CHECK(inv.diag == Rational(85, 5625));
    CHECK(inv.off == Rational(-40, 5625));

    CHECK_THROWS_AS(two_level_inverse({3, Rational(2), Rational(2)}), SingularMatrixError);

    std::mt19937_64 rng(1234);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 6);
    int done = 0;
    while (done < 16) {
        const Eigen::Index n = 1 + static_cast<Eigen::Index>(rng() % 12);
        const TwoLevelMatrix m{n, Rational(Int(num(rng)), Int(den(rng))), Rational(Int(num(rng)), Int(den(rng)))};
        if (two_level_det(m).is_zero()) continue;
        const auto mi = two_level_inverse(m);
        CHECK(linalg::is_identity(m.expand() * mi.expand()));
        ++done;
    }
}

TEST_CASE("orbit matrix of the Euclidean weight reproduces the reference") {
    const auto frame = f5_frame();
    const auto w = euclidean_f5();
    const auto W = weight_orbit_matrix(frame, w);
    CHECK(linalg::equal(W.matrix(), linalg::parse_matrix(golden::kF5WeightMatrix)));
}

TEST_CASE("generic orbit matrix has the reference block pattern") {
    const auto frame = f5_frame();
    // distinct markers reveal which coset value lands where
    const InvariantTable a{Rational(10), {Rational(11), Rational(12)}};
    const auto A = build_orbit_matrix(frame, a);
    const ExactMatrix pattern = linalg::parse_matrix(golden::kF5GenericPattern);
    for (Eigen::Index i = 0; i < 12; ++i) {
        for (Eigen::Index j = 0; j < 12; ++j) {
            const long digit = pattern(i, j).to_integer().get_si();
            CHECK(A.matrix()(i, j) == Rational(10 + digit));
        }
    }
    // symmetric, and each row has t entries a(0) and q of each coset value
    for (Eigen::Index i = 0; i < 12; ++i) {
        long zeros = 0, ones = 0, twos = 0;
        for (Eigen::Index j = 0; j < 12; ++j) {
            CHECK(A.matrix()(i, j) == A.matrix()(j, i));
            zeros += A.matrix()(i, j) == Rational(10);
            ones += A.matrix()(i, j) == Rational(11);
            twos += A.matrix()(i, j) == Rational(12);
        }
        CHECK(zeros == 2);
        CHECK(ones == 5);
        CHECK(twos == 5);
    }
}

TEST_CASE("row sums: all-ones is an eigenvector") {
    const auto frame = f5_frame();
    const auto W = weight_orbit_matrix(frame, euclidean_f5());
    const ExactVector ones = ExactVector::Constant(12, Rational(1));
    const ExactVector rs = W.matrix() * ones;
    for (Eigen::Index i = 0; i < 12; ++i) CHECK(rs(i) == Rational(25));  // q * coset sum
}

TEST_CASE("product blocks of W * W") {
    const auto frame = f5_frame();
    const auto W = weight_orbit_matrix(frame, euclidean_f5());
    const auto pb = product_blocks(W, W);
    CHECK(pb.off_diagonal == Rational(50));
    CHECK(pb.diagonal_block(0, 0) == Rational(85));
    CHECK(pb.diagonal_block(0, 1) == Rational(40));
    CHECK(pb.diagonal_block(1, 0) == Rational(40));
    CHECK(pb.diagonal_block(1, 1) == Rational(85));
}

TEST_CASE("structured inverse of W") {
    const auto frame = f5_frame();
    const auto w = euclidean_f5();
    const auto [b, Winv] = invert_orbit_matrix(frame, w.invariant());

    // -75 * W^{-1} is generated by (6; 1, -4)
    CHECK(b.at_zero * Rational(-75) == Rational(6));
    CHECK(b.coset[0] * Rational(-75) == Rational(1));
    CHECK(b.coset[1] * Rational(-75) == Rational(-4));

    ExactMatrix scaled = Winv.matrix() * Rational(-75);
    CHECK(linalg::equal(scaled, linalg::parse_matrix(golden::kF5ScaledInverse)));

    // row sums of W^{-1} are 1/(q * coset sum) = 1/25
    const ExactVector rs = Winv.matrix() * ExactVector::Constant(12, Rational(1));
    for (Eigen::Index i = 0; i < 12; ++i) CHECK(rs(i) == Rational(1, 25));

    // the elimination oracle agrees with the structured route entry-for-entry
    const auto W = weight_orbit_matrix(frame, w);
    CHECK(linalg::equal(Winv.matrix(), linalg::inverse(W.matrix())));

    // 5625 * W^{-2} blocks
    const auto pb = product_blocks(Winv, Winv);
    CHECK(pb.diagonal_block(0, 0) * Rational(5625) == Rational(157));
    CHECK(pb.diagonal_block(0, 1) * Rational(5625) == Rational(32));
    CHECK(pb.off_diagonal * Rational(5625) == Rational(-18));

    // all-ones eigenvector on the inverse as well
    const ExactVector ones = ExactVector::Constant(12, Rational(1));
    for (Eigen::Index i = 0; i < 12; ++i) CHECK((Winv.matrix() * ones)(i) == Rational(1, 25));
}

TEST_CASE("structured inverse requires an invertible coset matrix") {
    const auto frame = f5_frame();
    const InvariantTable flat{Rational(0), {Rational(1), Rational(1)}};
    CHECK_THROWS_AS(invert_orbit_matrix(frame, flat), SingularMatrixError);
    const InvariantTable nonzero{Rational(2), {Rational(1), Rational(4)}};
    CHECK_THROWS_AS(invert_orbit_matrix(frame, nonzero), DomainError);
}

TEST_CASE("product block law on F_9 frames with two functions") {
    const auto f9 = FiniteField::build(3, 2, std::vector<long>{2, 2, 1});
    for (int t : {2, 4}) {
        const OrbitFrame frame(f9, t);
        std::mt19937_64 rng(t);
        std::uniform_int_distribution<int> val(-5, 5);
        InvariantTable a{Rational(val(rng))}, b{Rational(val(rng))};
        for (int j = 0; j < t; ++j) {
            a.coset.emplace_back(val(rng));
            b.coset.emplace_back(val(rng));
        }
        const auto A = build_orbit_matrix(frame, a);
        const auto B = build_orbit_matrix(frame, b);
        CHECK_NOTHROW(product_blocks(A, B));  // closed forms verified inside
    }
}
