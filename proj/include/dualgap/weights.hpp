// Weights on F_q and Z/mZ: symmetry groups, the coset circulant matrix,
// correlations, the theorem hypothesis checks, and the power-weight family
// with its evidence scans.
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "dualgap/exact_linalg.hpp"
#include "dualgap/finite_field.hpp"

namespace dualgap {

/// A function on F_q constant on the cosets of H = <alpha^t>: determined by
/// its value at 0 and its values on alpha^0 H, ..., alpha^{t-1} H.  Weights
/// are the a(0) = 0, positive case; matrix inverses produce general ones.
struct InvariantTable {
    Rational at_zero;
    std::vector<Rational> coset;

    int coset_count() const { return static_cast<int>(coset.size()); }
    Rational coset_sum() const {
        Rational s(0);
        for (const auto& v : coset) s += v;
        return s;
    }
    /// Value on the coset of alpha^i, any integer i.
    const Rational& value_of_power(long i) const {
        const long t = coset_count();
        return coset[static_cast<size_t>((i % t + t) % t)];
    }
};

/// c_m(a,b) = sum_j a(alpha^j) b(alpha^{m+j}); index arithmetic is mod t.
Rational correlation(const InvariantTable& a, const InvariantTable& b, long m);

struct NondegeneracyReport {
    bool nondegenerate = false;
    Eigen::Index rank = 0;
    Rational det;  // of the (square) orbit matrix
    std::optional<ExactVector> kernel;
};

class FieldWeight {
public:
    /// Full value table indexed by element code; validates w(0) = 0 and
    /// w(r) > 0 for r != 0, and derives the symmetry group by brute force.
    FieldWeight(FiniteField f, std::vector<Rational> values);

    /// Table filled from values on alpha^0..alpha^{k-1} by periodicity.
    static FieldWeight from_coset_values(FiniteField f, const std::vector<Rational>& coset_values);

    const FiniteField& field() const { return field_; }
    const std::vector<Rational>& values() const { return values_; }
    const Rational& value(FieldElem x) const { return values_[x.code]; }

    /// sym(w), sorted by element code.
    const std::vector<FieldElem>& symmetry_group() const { return sym_; }
    /// t: the index of sym(w) in the unit group; alpha^t generates sym(w).
    int coset_count() const { return t_; }

    const Rational& coset_value(long i) const;  // w(alpha^i)
    Rational coset_sum() const;                 // sum of the t coset values
    const Rational& min_positive() const { return min_positive_; }
    const Rational& max_value() const { return max_value_; }
    bool integer_valued() const;
    bool minimum_on_unique_coset() const;

    InvariantTable invariant() const { return {Rational(0), coset_values_}; }

    /// t x t circulant with entry (i, j) = w(alpha^{i+j}).
    ExactMatrix coset_matrix() const;

    NondegeneracyReport nondegeneracy() const;

private:
    FiniteField field_;
    std::vector<Rational> values_;
    std::vector<FieldElem> sym_;
    std::vector<Rational> coset_values_;
    int t_ = 0;
    Rational min_positive_;
    Rational max_value_;
};

struct HypothesisReport {
    bool nondegenerate = false;
    bool minus_one_in_sym = false;
    bool proper_symmetry = false;      // sym(w) != F_q^x
    bool minimum_on_unique_coset = false;
    bool comparison_values_distinct = false;

    bool integer_valued = false;  // informational; not one of the five verdicts

    int t = 0;
    Rational det;
    Rational coset_sum;
    std::vector<Rational> correlations;       // c_m(w,w), m = 0..t-1
    std::vector<Rational> comparison_values;  // q c_1..q c_{t/2}, ((q-1)/t) w_sum^2

    bool all_hold() const {
        return nondegenerate && minus_one_in_sym && proper_symmetry && minimum_on_unique_coset &&
               comparison_values_distinct;
    }
    std::string first_failure() const;
};

HypothesisReport main_theorem_hypotheses(const FieldWeight& w);

/// For odd q: the rational roots x, 1/x of (q-1) - 2(q+1)x + (q-1)x^2 when q
/// is a perfect square, nullopt (irrational) otherwise.  Throws on even q.
std::optional<std::pair<Rational, Rational>> t2_equality_roots(long q);

class RingWeight {
public:
    RingWeight(long m, std::vector<Rational> values);

    long modulus() const { return m_; }
    const std::vector<Rational>& values() const { return values_; }
    const Rational& value(long r) const;  // r any integer, reduced mod m

    const std::vector<long>& units() const { return units_; }
    const std::vector<long>& symmetry_group() const { return sym_; }
    /// Smallest representative of each nonzero sym(w)-orbit, ascending.
    const std::vector<long>& orbit_reps() const { return reps_; }

    /// Orbit matrix with rows/columns indexed by orbit_reps(), entry (x, a)
    /// equal to w(x * a); functionals are identified with ring elements.
    ExactMatrix orbit_matrix() const;

    NondegeneracyReport nondegeneracy() const;

private:
    long m_;
    std::vector<Rational> values_;
    std::vector<long> units_;
    std::vector<long> sym_;
    std::vector<long> reps_;
};

/// w(r) = |r|^ell on canonical representatives; ell = 0 is Hamming.
RingWeight power_weight(long m, int ell);

/// Same values read as a weight on the prime field F_p.
FieldWeight power_weight_on_prime_field(const FiniteField& f, int ell);

struct ScanRow {
    long p = 0;
    int ell = 0;
    int t = 0;
    bool nondegenerate = false;
    std::optional<bool> c1_ne_c2;  // defined only when floor(t/2) >= 2

    friend bool operator==(const ScanRow& a, const ScanRow& b) {
        return a.p == b.p && a.ell == b.ell && a.t == b.t && a.nondegenerate == b.nondegenerate &&
               a.c1_ne_c2 == b.c1_ne_c2;
    }
};

/// Evaluates every (p, ell) cell; the report is sorted by (p, ell) and
/// independent of evaluation order.
std::vector<ScanRow> scan_power_weights(const std::vector<long>& primes, int ell_lo, int ell_hi);
ScanRow scan_power_weight_cell(long p, int ell);

}  // namespace dualgap
