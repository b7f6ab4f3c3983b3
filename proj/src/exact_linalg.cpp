#include "dualgap/exact_linalg.hpp"

#include <sstream>
#include <vector>

namespace dualgap {
namespace linalg {
namespace {

// Scales each row to integers; returns the integer matrix plus the product of
// all row scale factors (det of the original = det(integer)/scale_product).
struct IntegerForm {
    std::vector<std::vector<Int>> m;
    Int scale_product = 1;
};

IntegerForm clear_denominators(const ExactMatrix& a) {
    IntegerForm f;
    f.m.assign(a.rows(), std::vector<Int>(a.cols()));
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        Int l = 1;
        for (Eigen::Index j = 0; j < a.cols(); ++j) l = lcm(l, a(i, j).den());
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            const Rational scaled = a(i, j) * Rational(l);
            f.m[i][j] = scaled.to_integer();
        }
        f.scale_product *= l;
    }
    return f;
}

struct Echelon {
    std::vector<std::vector<Int>> m;   // row echelon, fraction-free entries
    std::vector<Eigen::Index> pivot_cols;
    int det_sign = 1;                  // sign change from row swaps
};

// Bareiss elimination.  Each round divides exactly by the previous pivot,
// keeping entries as minors of the original integer matrix.  Pivots are
// searched within the first pivot_limit columns; row updates span all
// columns, so augmented right-hand sides ride along.
Echelon eliminate(std::vector<std::vector<Int>> m, Eigen::Index pivot_limit) {
    Echelon e;
    const Eigen::Index rows = static_cast<Eigen::Index>(m.size());
    const Eigen::Index cols = rows ? static_cast<Eigen::Index>(m[0].size()) : 0;
    Int prev_pivot = 1;
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < pivot_limit && row < rows; ++col) {
        Eigen::Index best = -1;
        for (Eigen::Index i = row; i < rows; ++i) {
            if (m[i][col] != 0 &&
                (best < 0 || mpz_cmpabs(m[i][col].get_mpz_t(), m[best][col].get_mpz_t()) > 0)) {
                best = i;
            }
        }
        if (best < 0) continue;
        if (best != row) {
            std::swap(m[best], m[row]);
            e.det_sign = -e.det_sign;
        }
        const Int pivot = m[row][col];
        for (Eigen::Index i = row + 1; i < rows; ++i) {
            for (Eigen::Index j = col + 1; j < cols; ++j) {
                Int t = pivot * m[i][j] - m[i][col] * m[row][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev_pivot.get_mpz_t());
                m[i][j] = t;
            }
            m[i][col] = 0;
        }
        prev_pivot = pivot;
        e.pivot_cols.push_back(col);
        ++row;
    }
    e.m = std::move(m);
    return e;
}

}  // namespace

Analysis analyze(const ExactMatrix& a) {
    Analysis out;
    if (a.rows() == 0 || a.cols() == 0) {
        out.det = Rational(1);
        return out;
    }
    IntegerForm f = clear_denominators(a);
    Echelon e = eliminate(std::move(f.m), a.cols());
    out.rank = static_cast<Eigen::Index>(e.pivot_cols.size());

    if (a.rows() == a.cols()) {
        if (out.rank == a.rows()) {
            const Eigen::Index r = out.rank - 1;
            Int d = e.m[r][e.pivot_cols[r]];
            if (e.det_sign < 0) d = -d;
            out.det = Rational(d, f.scale_product);
        } else {
            out.det = Rational(0);
        }
    }

    if (out.rank < a.cols()) {
        // Back-substitute for a kernel vector with one free coordinate set to 1.
        std::vector<bool> is_pivot(a.cols(), false);
        for (auto c : e.pivot_cols) is_pivot[c] = true;
        Eigen::Index free_col = 0;
        while (is_pivot[free_col]) ++free_col;

        ExactVector k = ExactVector::Constant(a.cols(), Rational(0));
        k(free_col) = Rational(1);
        for (Eigen::Index i = out.rank - 1; i >= 0; --i) {
            const Eigen::Index pc = e.pivot_cols[i];
            Rational s(0);
            for (Eigen::Index j = pc + 1; j < a.cols(); ++j) {
                if (!(k(j) == Rational(0))) s += Rational(e.m[i][j]) * k(j);
            }
            k(pc) = -s / Rational(e.m[i][pc]);
        }
        out.kernel_vector = std::move(k);
    }
    return out;
}

Rational det(const ExactMatrix& a) {
    if (a.rows() != a.cols()) throw DomainError("det: matrix not square");
    return analyze(a).det;
}

Eigen::Index rank(const ExactMatrix& a) { return analyze(a).rank; }

ExactMatrix solve(const ExactMatrix& a, const ExactMatrix& rhs) {
    if (a.rows() != a.cols()) throw DomainError("solve: matrix not square");
    if (a.rows() != rhs.rows()) throw DomainError("solve: dimension mismatch");
    const Eigen::Index n = a.rows();
    const Eigen::Index w = rhs.cols();

    ExactMatrix aug(n, n + w);
    aug << a, rhs;
    IntegerForm f = clear_denominators(aug);
    Echelon e = eliminate(std::move(f.m), n);
    if (static_cast<Eigen::Index>(e.pivot_cols.size()) < n) throw SingularMatrixError("solve: singular matrix");

    ExactMatrix x(n, w);
    for (Eigen::Index c = 0; c < w; ++c) {
        for (Eigen::Index i = n - 1; i >= 0; --i) {
            Rational s = Rational(e.m[i][n + c]);
            for (Eigen::Index j = i + 1; j < n; ++j) s -= Rational(e.m[i][j]) * x(j, c);
            x(i, c) = s / Rational(e.m[i][i]);
        }
    }
    return x;
}

ExactMatrix inverse(const ExactMatrix& a) {
    return solve(a, ExactMatrix::Identity(a.rows(), a.cols()));
}

std::string dump(const ExactMatrix& a) {
    std::ostringstream os;
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            if (j) os << ' ';
            os << a(i, j).str();
        }
        os << '\n';
    }
    return os.str();
}

ExactMatrix parse_matrix(const std::string& text) {
    std::vector<std::vector<Rational>> rows;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::vector<Rational> row;
        std::string tok;
        while (ls >> tok) row.push_back(Rational::parse(tok));
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty()) return ExactMatrix(0, 0);
    ExactMatrix m(rows.size(), rows[0].size());
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows[0].size()) throw ConfigError("parse_matrix: ragged rows");
        for (size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    }
    return m;
}

ExactVector int_vector(const std::vector<Int>& v) {
    ExactVector out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out(static_cast<Eigen::Index>(i)) = Rational(v[i]);
    return out;
}

bool equal(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            if (a(i, j) != b(i, j)) return false;
        }
    }
    return true;
}

bool is_identity(const ExactMatrix& a) {
    if (a.rows() != a.cols()) return false;
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            if (a(i, j) != Rational(i == j ? 1 : 0)) return false;
        }
    }
    return true;
}

}  // namespace linalg
}  // namespace dualgap
