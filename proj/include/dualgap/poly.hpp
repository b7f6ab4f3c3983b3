// Sparse polynomial containers for enumerators.  Exponents are big integers
// because multiplicity scalings can push weights far past machine range.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "dualgap/numbers.hpp"

namespace dualgap {

/// Multivariate sparse polynomial, nonzero Int coefficients only.
class SparsePoly {
public:
    explicit SparsePoly(int arity) : arity_(arity) {}

    int arity() const { return arity_; }
    const std::map<std::vector<Int>, Int>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    void add_term(std::vector<Int> exps, const Int& coeff);
    const Int* coefficient(const std::vector<Int>& exps) const;

    Int coefficient_sum() const;
    /// Common total degree; throws if terms are not homogeneous.
    Int homogeneous_degree() const;

    friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
        return a.arity_ == b.arity_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const SparsePoly& a, const SparsePoly& b) { return !(a == b); }

    /// Sorted "[e0,e1,...]: coeff" lines.
    std::string dump() const;
    static SparsePoly parse(int arity, const std::string& text);

    /// Human form like "Z0^18 + 4 Z0^8 Z1^5 Z2^5"; var stems Z0, Z1, ...
    std::string str(const std::string& stem = "Z") const;

private:
    int arity_;
    std::map<std::vector<Int>, Int> terms_;
};

/// Univariate polynomial with Int exponents, rendered "1 + 24y^2 + ...".
class UnivariatePoly {
public:
    UnivariatePoly() = default;
    explicit UnivariatePoly(std::map<Int, Int> terms);

    const std::map<Int, Int>& terms() const { return terms_; }
    void add_term(const Int& exp, const Int& coeff);
    const Int* coefficient(const Int& exp) const;
    Int coefficient_sum() const;

    /// Terms with exponent <= bound.
    UnivariatePoly prefix(const Int& bound) const;

    friend bool operator==(const UnivariatePoly& a, const UnivariatePoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const UnivariatePoly& a, const UnivariatePoly& b) { return !(a == b); }

    std::string str(const std::string& var = "y") const;

private:
    std::map<Int, Int> terms_;
};

}  // namespace dualgap
