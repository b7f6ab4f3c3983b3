// Exact arithmetic in Q(zeta_p) for prime p: numbers are coordinate vectors
// in the basis 1, zeta, ..., zeta^{p-2}, reduced eagerly with
// zeta^{p-1} = -(1 + zeta + ... + zeta^{p-2}).  No floating point.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dualgap/numbers.hpp"

namespace dualgap {

class Cyclotomic {
public:
    /// Zero in Q(zeta_p).
    explicit Cyclotomic(long conductor);

    static Cyclotomic root_power(long conductor, long k);  // zeta^k
    static Cyclotomic from_rational(long conductor, const Rational& r);

    long conductor() const { return p_; }
    const std::vector<Rational>& coords() const { return c_; }

    bool is_zero() const;
    /// The rational value when all coordinates past the first vanish.
    std::optional<Rational> as_rational() const;
    bool is_integral() const;  // all coordinates are rational integers

    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator*(const Rational& s, Cyclotomic a);
    Cyclotomic operator-() const;

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) { return a.p_ == b.p_ && a.c_ == b.c_; }
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    std::string str() const;  // "(c0, c1, ...)"

private:
    long p_;
    std::vector<Rational> c_;  // length p-1
};

}  // namespace dualgap
