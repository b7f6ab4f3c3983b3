// Dense exact matrices (Eigen with the Rational scalar) and a fraction-free
// Gaussian elimination kernel used for determinants, ranks, solving, and
// inversion.  The elimination path is independent of every structured
// closed-form inverse in this project, so the two can cross-validate.
#pragma once

#include <optional>
#include <string>

#include "dualgap/numbers.hpp"

namespace dualgap {

using ExactMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using ExactVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

namespace linalg {

struct Analysis {
    Eigen::Index rank = 0;
    Rational det;  // meaningful for square input only
    /// A nonzero vector in the kernel when rank < cols.
    std::optional<ExactVector> kernel_vector;
};

/// Fraction-free (Bareiss) elimination after clearing row denominators.
/// Pivots are chosen by largest absolute value in the current column.
Analysis analyze(const ExactMatrix& a);

Rational det(const ExactMatrix& a);
Eigen::Index rank(const ExactMatrix& a);

/// Solves a * x = rhs for square invertible a; throws SingularMatrixError.
ExactMatrix solve(const ExactMatrix& a, const ExactMatrix& rhs);
ExactMatrix inverse(const ExactMatrix& a);

/// Row-major dump, entries as "num/den" separated by single spaces,
/// one row per line.
std::string dump(const ExactMatrix& a);
ExactMatrix parse_matrix(const std::string& text);

ExactVector int_vector(const std::vector<Int>& v);

bool equal(const ExactMatrix& a, const ExactMatrix& b);
bool is_identity(const ExactMatrix& a);

}  // namespace linalg
}  // namespace dualgap
