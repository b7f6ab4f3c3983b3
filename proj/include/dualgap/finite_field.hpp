// Arithmetic in F_q = F_{p^l} with a designated primitive element, plus the
// residue rings Z/mZ used by the power-weight family.
//
// Elements are carried as packed codes: the element with coordinate vector
// (c_0, ..., c_{l-1}) in the basis 1, alpha, ..., alpha^{l-1} has code
// sum c_i * p^i.  For l = 1 the code is just the residue.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dualgap/numbers.hpp"

namespace dualgap {

struct FieldElem {
    std::uint32_t code = 0;
    friend bool operator==(FieldElem a, FieldElem b) { return a.code == b.code; }
    friend bool operator!=(FieldElem a, FieldElem b) { return a.code != b.code; }
    friend bool operator<(FieldElem a, FieldElem b) { return a.code < b.code; }
};

class FiniteField {
public:
    /// Builds F_{p^l}.  Without a modulus, the lexicographically smallest
    /// monic irreducible of degree l making x primitive is chosen (smallest
    /// irreducible with a searched primitive element as fallback).  For
    /// l = 1 there is no modulus and alpha defaults to the smallest
    /// primitive root; alpha may be overridden by its coefficient vector.
    static FiniteField build(long p, int l,
                             std::optional<std::vector<long>> modulus = std::nullopt,
                             std::optional<std::vector<long>> alpha = std::nullopt);

    long p() const { return p_; }
    int degree() const { return l_; }
    long q() const { return q_; }
    /// Modulus coefficients c_0..c_l (monic); empty for l = 1.
    const std::vector<long>& modulus() const { return modulus_; }

    FieldElem zero() const { return {0}; }
    FieldElem one() const { return {1}; }
    FieldElem alpha() const { return alpha_; }

    FieldElem add(FieldElem a, FieldElem b) const;
    FieldElem sub(FieldElem a, FieldElem b) const;
    FieldElem neg(FieldElem a) const;
    FieldElem mul(FieldElem a, FieldElem b) const;
    FieldElem inv(FieldElem a) const;
    FieldElem pow(FieldElem a, long e) const;

    /// alpha^i for any integer i (exponent taken mod q-1).
    FieldElem alpha_pow(long i) const;

    /// Exponent in [0, q-2] with alpha^result = x; throws DomainError on 0.
    long dlog(FieldElem x) const;

    /// Absolute trace to F_p, returned as an integer in [0, p-1].
    long trace(FieldElem x) const;

    FieldElem from_coeffs(const std::vector<long>& coeffs) const;
    std::vector<long> coeffs(FieldElem x) const;

    /// Element from its packed code; validates range.
    FieldElem element(std::uint32_t code) const;

    /// "c0,c1,..." serialization.
    std::string str(FieldElem x) const;
    FieldElem parse(const std::string& s) const;

    bool same_field(const FiniteField& o) const {
        return p_ == o.p_ && l_ == o.l_ && modulus_ == o.modulus_ && alpha_ == o.alpha_;
    }

private:
    FiniteField() = default;

    long p_ = 0;
    int l_ = 0;
    long q_ = 0;
    std::vector<long> modulus_;        // c_0..c_l, monic; empty for l = 1
    FieldElem alpha_;
    std::vector<std::uint32_t> exp_;   // exp_[i] = code of alpha^i, i in [0, q-2]
    std::vector<long> log_;            // log_[code] = i, log_[0] unused
    std::vector<long> trace_;          // trace_[code] in [0, p-1]
    std::vector<std::uint32_t> inv_;   // inv_[code], inv_[0] unused
};

/// Standard dot product over F_q; throws on length mismatch.
FieldElem dot(const FiniteField& f, const std::vector<FieldElem>& x, const std::vector<FieldElem>& y);

bool is_prime(long n);

/// Canonical representative r of a residue class mod m with -m/2 < r <= m/2.
long canonical_residue(long r, long m);

}  // namespace dualgap
