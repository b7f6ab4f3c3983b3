// Enumerator algebra: generating characters, Kravchuk matrices over Q(zeta_p),
// symmetrized enumerators, the MacWilliams transform, specializations, and
// the brute-force dual oracle.
#pragma once

#include <map>

#include "dualgap/cyclotomic.hpp"
#include "dualgap/orbit_frame.hpp"
#include "dualgap/poly.hpp"
#include "dualgap/weights.hpp"

namespace dualgap {

/// chi(r) = zeta^{tr(r)} in Q(zeta_p).
Cyclotomic generating_character(const FiniteField& f, FieldElem r);

struct KravchukMatrix {
    long conductor = 0;
    int t = 0;
    std::vector<std::vector<Cyclotomic>> entries;  // (t+1) x (t+1)
    std::vector<Int> class_sizes;                  // |P_0| .. |P_t|
};

/// K_{0,j} = |P_j|, K_{i,j} = sum_{s in P_j} chi(alpha^i s) for i >= 1,
/// where P_0 = {0} and P_i = alpha^i H.
KravchukMatrix kravchuk(const OrbitFrame& frame);

/// Partition class of an element: 0 for zero, otherwise i in 1..t with
/// r in alpha^i H (so elements of H land in class t).
int coset_class(const OrbitFrame& frame, FieldElem r);

/// Z-form enumerator of the dimension-2 code presented by a multiplicity
/// function, computed orbit-by-orbit without expanding codeword vectors.
/// Coefficients sum to q^2; throws DomainError if the presented code is
/// rank-deficient (some nonzero message kills every column).
SparsePoly symmetrized_enumerator(const OrbitFrame& frame, const std::vector<Int>& multiplicity);

struct TransformLimits {
    std::size_t max_monomials = 200'000;
};

/// (1/|C|) se with Z_i replaced by sum_j K_{i,j} Z_j, expanded exactly over
/// Z[zeta_p].  Asserts every output coefficient is a nonnegative rational
/// integer and that the coefficients sum to q^n / |C|.
SparsePoly macwilliams_transform(const SparsePoly& se, const KravchukMatrix& k, const Int& code_size,
                                 const TransformLimits& limits = {});

/// Z_0 -> 1, Z_i -> y^{w(alpha^i)}.
UnivariatePoly specialize_to_wwe(const SparsePoly& se, const FieldWeight& w);

/// (1/|C|) hwe(X + (q-1)Y, X - Y) for homogeneous two-variable input.
SparsePoly hamming_macwilliams(const SparsePoly& hwe, long q, const Int& code_size);

/// Weight distribution of the dual code by exhaustive enumeration of the
/// null space; requires q^{n-rank} <= cap.
std::map<Rational, Int> brute_force_dual(const FiniteField& f,
                                         const std::vector<std::vector<FieldElem>>& generator_rows,
                                         const FieldWeight& w, const Int& cap = Int(10000000));

/// Distribution -> polynomial in y; requires integer weights.
UnivariatePoly distribution_to_poly(const std::map<Rational, Int>& dist);

}  // namespace dualgap
