#include "dualgap/structured.hpp"

namespace dualgap {

ExactMatrix TwoLevelMatrix::expand() const {
    ExactMatrix m = ExactMatrix::Constant(n, n, off);
    for (Eigen::Index i = 0; i < n; ++i) m(i, i) = diag;
    return m;
}

Rational two_level_det(const TwoLevelMatrix& m) {
    if (m.n == 0) return Rational(1);
    Rational r = m.diag + Rational(m.n - 1) * m.off;
    const Rational d = m.diag - m.off;
    for (Eigen::Index i = 1; i < m.n; ++i) r *= d;
    return r;
}

TwoLevelMatrix two_level_inverse(const TwoLevelMatrix& m) {
    if (two_level_det(m).is_zero()) throw SingularMatrixError("two_level_inverse: singular matrix");
    // Solve x z + (n-1) y w = 1, x w + y z + (n-2) y w = 0 for (z, w).
    const Rational& x = m.diag;
    const Rational& y = m.off;
    const Rational n1 = Rational(m.n - 1);
    ExactMatrix sys(2, 2);
    sys << x, n1 * y, y, x + (n1 - Rational(1)) * y;
    ExactMatrix rhs(2, 1);
    rhs << Rational(1), Rational(0);
    const ExactMatrix zw = linalg::solve(sys, rhs);
    return {m.n, zw(0, 0), zw(1, 0)};
}

std::optional<TwoLevelMatrix> as_two_level(const ExactMatrix& m) {
    if (m.rows() != m.cols() || m.rows() == 0) return std::nullopt;
    TwoLevelMatrix t{m.rows(), m(0, 0), m.rows() > 1 ? m(0, 1) : m(0, 0)};
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (!(m(i, j) == (i == j ? t.diag : t.off))) return std::nullopt;
        }
    }
    return t;
}

OrbitMatrix::OrbitMatrix(OrbitFrame frame, ExactMatrix m, std::optional<InvariantTable> source)
    : frame_(std::move(frame)), m_(std::move(m)), source_(std::move(source)) {
    if (m_.rows() != frame_.rep_count() || m_.cols() != frame_.rep_count()) {
        throw DomainError("orbit matrix: dimensions do not match the frame");
    }
}

const InvariantTable& OrbitMatrix::source() const {
    if (!source_) throw DomainError("orbit matrix: no generating function recorded");
    return *source_;
}

ExactMatrix OrbitMatrix::block(long bi, long bj) const {
    const int t = frame_.coset_count();
    return m_.block(bi * t, bj * t, t, t);
}

OrbitMatrix build_orbit_matrix(const OrbitFrame& frame, const InvariantTable& a) {
    if (a.coset_count() != frame.coset_count()) throw DomainError("orbit matrix: function/frame coset mismatch");
    const FiniteField& f = frame.field();
    const long tau = frame.rep_count();
    const auto& reps = frame.reps();

    ExactMatrix m(tau, tau);
    for (long i = 0; i < tau; ++i) {
        for (long j = i; j < tau; ++j) {
            const FieldElem d = f.add(f.mul(reps[i].x0, reps[j].x0), f.mul(reps[i].x1, reps[j].x1));
            const Rational& v = d.code == 0 ? a.at_zero : a.value_of_power(f.dlog(d));
            m(i, j) = v;
            m(j, i) = v;
        }
    }
    return OrbitMatrix(frame, std::move(m), a);
}

OrbitMatrix weight_orbit_matrix(const OrbitFrame& frame, const FieldWeight& w) {
    if (!w.field().same_field(frame.field())) throw DomainError("orbit matrix: weight built on a different field");
    return build_orbit_matrix(frame, w.invariant());
}

ProductBlocks product_blocks(const OrbitMatrix& a, const OrbitMatrix& b) {
    if (!a.frame().same_frame(b.frame())) throw DomainError("product_blocks: frame mismatch");
    const OrbitFrame& frame = a.frame();
    const int t = frame.coset_count();
    const long q = frame.field().q();
    const InvariantTable& fa = a.source();
    const InvariantTable& fb = b.source();

    ProductBlocks out;
    out.product = a.matrix() * b.matrix();

    const Rational taa = Rational(t) * fa.at_zero * fb.at_zero;
    out.diagonal_block = ExactMatrix(t, t);
    for (int i = 0; i < t; ++i) {
        for (int j = 0; j < t; ++j) {
            out.diagonal_block(i, j) = taa + Rational(q) * correlation(fa, fb, j - i);
        }
    }
    out.off_diagonal = fa.at_zero * fb.coset_sum() + fa.coset_sum() * fb.at_zero +
                       Rational(q - 1, t) * fa.coset_sum() * fb.coset_sum();

    const long blocks = frame.line_count();
    for (long bi = 0; bi < blocks; ++bi) {
        for (long bj = 0; bj < blocks; ++bj) {
            const ExactMatrix blk = out.product.block(bi * t, bj * t, t, t);
            if (bi == bj) {
                if (!linalg::equal(blk, out.diagonal_block)) {
                    throw InternalError("product_blocks: diagonal block deviates from the correlation form");
                }
            } else {
                for (int i = 0; i < t; ++i) {
                    for (int j = 0; j < t; ++j) {
                        if (!(blk(i, j) == out.off_diagonal)) {
                            throw InternalError("product_blocks: off-diagonal block is not constant");
                        }
                    }
                }
            }
        }
    }
    return out;
}

std::pair<InvariantTable, OrbitMatrix> invert_orbit_matrix(const OrbitFrame& frame, const InvariantTable& a) {
    if (!a.at_zero.is_zero()) throw DomainError("invert_orbit_matrix: requires a(0) = 0");
    const int t = frame.coset_count();
    if (a.coset_count() != t) throw DomainError("invert_orbit_matrix: function/frame coset mismatch");
    const long q = frame.field().q();

    // Correlation system c_m(b, a) = [m == 0]/q: the coefficient of b_j in
    // row m is a(alpha^{m+j}), which is the coset circulant.
    ExactMatrix sys(t, t);
    for (int m = 0; m < t; ++m) {
        for (int j = 0; j < t; ++j) sys(m, j) = a.value_of_power(m + j);
    }
    ExactMatrix rhs = ExactMatrix::Constant(t, 1, Rational(0));
    rhs(0, 0) = Rational(1, q);

    ExactMatrix sol;
    try {
        sol = linalg::solve(sys, rhs);
    } catch (const SingularMatrixError&) {
        throw SingularMatrixError("invert_orbit_matrix: degenerate generating function");
    }

    InvariantTable b;
    b.coset.assign(t, Rational(0));
    for (int j = 0; j < t; ++j) b.coset[j] = sol(j, 0);
    b.at_zero = -Rational(q - 1, t) * b.coset_sum();

    OrbitMatrix inv = build_orbit_matrix(frame, b);
    const OrbitMatrix orig = build_orbit_matrix(frame, a);
    if (!linalg::is_identity(inv.matrix() * orig.matrix())) {
        throw InternalError("invert_orbit_matrix: B*A != I");
    }
    return {std::move(b), std::move(inv)};
}

}  // namespace dualgap
