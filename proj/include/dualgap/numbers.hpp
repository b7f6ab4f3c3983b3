// Exact arbitrary-precision integers and rationals on top of GMP, with the
// glue needed to use Rational as an Eigen scalar.
#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace dualgap {

using Int = mpz_class;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad user input (config files, CLI fragments, malformed certificates).
class ConfigError : public Error {
public:
    using Error::Error;
};

// Mathematically invalid request (log of zero, non-prime p, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

class SingularMatrixError : public Error {
public:
    using Error::Error;
};

// A closed-form structure check failed; indicates a bug, never user error.
class InternalError : public Error {
public:
    using Error::Error;
};

// A computation was declined because it exceeds a configured size cap.
class CapExceededError : public Error {
public:
    using Error::Error;
};

/// Exact rational with eager evaluation.  gmpxx's expression templates are
/// hidden behind this wrapper so the type composes with Eigen.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    Rational(const Int& n) : v_(n) {}
    Rational(const Int& num, const Int& den) : v_(num, den) {
        if (den == 0) throw DomainError("Rational: zero denominator");
        v_.canonicalize();
    }

    /// Parses "num", "num/den", or a decimal integer with sign.
    static Rational parse(const std::string& s);

    Int num() const { return v_.get_num(); }
    Int den() const { return v_.get_den(); }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    /// The exact integer value; throws DomainError if not an integer.
    Int to_integer() const {
        if (!is_integer()) throw DomainError("Rational: " + str() + " is not an integer");
        return v_.get_num();
    }

    std::string str() const;

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw DomainError("Rational: division by zero");
        return Rational(mpq_class(a.v_ / b.v_));
    }
    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend Rational abs(const Rational& a) { return Rational(mpq_class(::abs(a.v_))); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    explicit Rational(const mpq_class& q) : v_(q) {}
    mpq_class v_;
};

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);
Int pow(const Int& base, unsigned long e);
Int binomial(const Int& n, unsigned long k);
Int factorial(unsigned long n);

/// Exact square root when n is a perfect square.
bool perfect_square(const Int& n, Int& root);

Int parse_int(const std::string& s);

}  // namespace dualgap

namespace Eigen {

template <>
struct NumTraits<dualgap::Rational> : GenericNumTraits<dualgap::Rational> {
    typedef dualgap::Rational Real;
    typedef dualgap::Rational NonInteger;
    typedef dualgap::Rational Nested;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 60,
        MulCost = 100,
    };
    static inline Real epsilon() { return dualgap::Rational(0); }
    static inline Real dummy_precision() { return dualgap::Rational(0); }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen
