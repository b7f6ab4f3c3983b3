// The constructive pipeline: two-valued orbit-weight targets, affine
// multiplicity solutions, the nonnegativity interval for the free ratio,
// subset selection, integer scaling, weight distributions, and the dual
// small-weight counts that witness a duality violation.
#pragma once

#include <map>

#include "dualgap/structured.hpp"

namespace dualgap {

/// Target orbit-weight list: rho on the subset, 1 elsewhere.
ExactVector two_valued_targets(const OrbitFrame& frame, const std::vector<long>& subset, const Rational& rho);

/// Multiplicities as affine functions of rho: eta = base + slope * rho,
/// where slope(row) sums the inverse-matrix entries over subset columns and
/// base(row) sums the rest.  base + slope = 1/(q * coset sum) per row.
struct AffineSolution {
    std::vector<long> subset;  // sorted representative indices
    ExactVector base;          // P
    ExactVector slope;         // Q

    ExactVector eval(const Rational& rho) const;
};

AffineSolution solve_multiplicity(const OrbitMatrix& winv, std::vector<long> subset);

/// [lo, hi]: rho values keeping every multiplicity nonnegative for every
/// subset of the given size, with the extremal subsets recorded.
struct RhoInterval {
    Rational lo, hi;
    std::vector<long> lo_witness, hi_witness;
};

RhoInterval nonnegativity_interval(const OrbitMatrix& winv, int subset_size);

/// Subsets S, S' from the inverse-matrix entry comparison.  Case 1 pairs a
/// diagonal-block entry of W^{-2} against the off-block constant; case 2
/// pairs two diagonal-block shifts.  Case 3 is the looser coset comparison
/// (((q-1)/t) b~^2 vs t b0^2 + q c_m(b,b)) used by demonstrations outside
/// the strict hypotheses; its selections may have an identically zero
/// difference quadratic.
struct SubsetChoice {
    std::vector<long> s, s_prime;
    int case_tag = 0;  // 1, 2, or 3
    long m1 = 0, m2 = 0;
};

SubsetChoice select_subsets(const OrbitMatrix& winv);

/// sum eta (eta - 1).
Rational doubleton_form(const ExactVector& eta);

struct Quadratic {
    Rational c0, c1, c2;
    Rational eval(const Rational& x) const { return c0 + c1 * x + c2 * x * x; }
    bool is_zero() const { return c0.is_zero() && c1.is_zero() && c2.is_zero(); }
};

/// f(rho) = doubleton_form(eta) - doubleton_form(eta') as an exact
/// quadratic; the leading coefficient is checked against twice the
/// difference of the two W^{-2} entries the subsets address.
Quadratic rho_polynomial(const AffineSolution& a, const AffineSolution& b, const OrbitMatrix& winv);

/// A rational in [lo, hi] avoiding the zeros of f: lo, then hi, then
/// midpoints of successive bisections.
Rational choose_rho(const Rational& lo, const Rational& hi, const Quadratic& f);

/// Minimal integer scaling: N = lcm of the denominators across both
/// vectors.  Throws DomainError on negative entries.
struct ScaledPair {
    Int scaling;              // N
    std::vector<Int> mult_c;  // N * eta
    std::vector<Int> mult_d;  // N * eta'
    Int length;               // common column count
};

ScaledPair scale_to_integers(const ExactVector& eta_c, const ExactVector& eta_d);

/// Orbit weights W * multiplicity.
ExactVector orbit_weights(const OrbitMatrix& w, const std::vector<Int>& multiplicity);

/// Weight -> codeword count; includes the zero codeword, each orbit
/// contributes (q-1)/t at its orbit weight, total q^2.
std::map<Rational, Int> weight_distribution(const OrbitFrame& frame, const std::vector<Int>& multiplicity,
                                            const OrbitMatrix& w);

/// Exhaustive q^2-message oracle for the same distribution, computed from
/// the weight table without the orbit-weight shortcut.
std::map<Rational, Int> weight_distribution_by_enumeration(const OrbitFrame& frame, const FieldWeight& w,
                                                           const std::vector<Int>& multiplicity);

/// sum_c w(c) = zeta |C| efflength(C) with zeta = (sum_r w(r)) / q.
struct EgalitarianCheck {
    Rational zeta;
    Rational codeword_weight_sum;
    Int effective_length;
    bool holds = false;
};

EgalitarianCheck egalitarian_check(const OrbitFrame& frame, const FieldWeight& w,
                                   const std::vector<Int>& multiplicity,
                                   const std::map<Rational, Int>& distribution);

/// A_{2 min}(dual) = |H| sum_i binom(eta_i, 2); requires -1 in sym(w) and
/// the minimum on a unique coset.  zero_columns adds the |H|^2 binom(n0, 2)
/// correction for codes padded with zero positions.
Int doubleton_dual_count(const OrbitFrame& frame, const FieldWeight& w, const std::vector<Int>& multiplicity,
                         const Int& zero_columns = 0);

/// Cross-coset doubleton count sum_mu (q-1) eta(l_mu) eta(alpha l_mu),
/// valid when t = 2 and the two coset values are 2 and 3 (the only weight-5
/// vectors are doubletons straddling the cosets).
Int cross_coset_dual_count(const OrbitFrame& frame, const FieldWeight& w, const std::vector<Int>& multiplicity);

}  // namespace dualgap
