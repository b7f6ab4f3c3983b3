// The two structured matrix families: x-on-diagonal / y-elsewhere matrices
// with closed-form determinant and inverse, and the orbit-indexed matrices
// generated by H-invariant functions, with block product laws and the
// structured inverse.
#pragma once

#include "dualgap/exact_linalg.hpp"
#include "dualgap/orbit_frame.hpp"
#include "dualgap/weights.hpp"

namespace dualgap {

/// (x - y) I_n + y J_n.
struct TwoLevelMatrix {
    Eigen::Index n = 0;
    Rational diag;
    Rational off;

    ExactMatrix expand() const;
};

/// det = (x + (n-1) y)(x - y)^{n-1}.
Rational two_level_det(const TwoLevelMatrix& m);

/// The inverse is again a two-level matrix; throws SingularMatrixError.
TwoLevelMatrix two_level_inverse(const TwoLevelMatrix& m);

/// If the matrix is two-level, returns it in that form.
std::optional<TwoLevelMatrix> as_two_level(const ExactMatrix& m);

/// A dense orbit-indexed matrix carrying its frame and, when built from an
/// H-invariant function, that function (needed for block diagnostics).
class OrbitMatrix {
public:
    OrbitMatrix(OrbitFrame frame, ExactMatrix m, std::optional<InvariantTable> source = std::nullopt);

    const OrbitFrame& frame() const { return frame_; }
    const ExactMatrix& matrix() const { return m_; }
    const InvariantTable& source() const;
    bool has_source() const { return source_.has_value(); }

    /// t x t block at line-block position (bi, bj).
    ExactMatrix block(long bi, long bj) const;

    /// Entry addressed by representative indices.
    const Rational& at(long rep_row, long rep_col) const { return m_(rep_row, rep_col); }

private:
    OrbitFrame frame_;
    ExactMatrix m_;
    std::optional<InvariantTable> source_;
};

/// The tau x tau matrix with entry a(rep_i . rep_j); requires a's coset
/// count to match the frame.
OrbitMatrix build_orbit_matrix(const OrbitFrame& frame, const InvariantTable& a);

OrbitMatrix weight_orbit_matrix(const OrbitFrame& frame, const FieldWeight& w);

/// Block shape of a product A*B of orbit matrices: all diagonal blocks are a
/// common correlation circulant, all off-diagonal blocks a common constant.
struct ProductBlocks {
    ExactMatrix diagonal_block;  // t x t; entry (i,j) = t a0 b0 + q c_{j-i}(a,b)
    Rational off_diagonal;       // a0 b~ + a~ b0 + ((q-1)/t) a~ b~
    ExactMatrix product;         // the literal product, for downstream use
};

/// Computes A*B literally and verifies it against the closed forms; throws
/// InternalError on any deviation.
ProductBlocks product_blocks(const OrbitMatrix& a, const OrbitMatrix& b);

/// Structured inverse: for a(0) = 0 with invertible coset circulant, solves
/// the correlation system for the generating function of A^{-1} and verifies
/// B*A = I exactly.  Returns the generating function and the inverse.
std::pair<InvariantTable, OrbitMatrix> invert_orbit_matrix(const OrbitFrame& frame, const InvariantTable& a);

}  // namespace dualgap
