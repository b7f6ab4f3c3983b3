#include "dualgap/cyclotomic.hpp"

#include <sstream>

#include "dualgap/finite_field.hpp"

namespace dualgap {

Cyclotomic::Cyclotomic(long conductor) : p_(conductor) {
    if (conductor < 2 || !is_prime(conductor)) throw DomainError("cyclotomic: conductor must be prime");
    c_.assign(p_ - 1, Rational(0));
}

Cyclotomic Cyclotomic::root_power(long conductor, long k) {
    Cyclotomic z(conductor);
    const long p = conductor;
    long e = ((k % p) + p) % p;
    if (e < p - 1) {
        z.c_[e] = Rational(1);
    } else {
        for (auto& v : z.c_) v = Rational(-1);
    }
    return z;
}

Cyclotomic Cyclotomic::from_rational(long conductor, const Rational& r) {
    Cyclotomic z(conductor);
    z.c_[0] = r;
    return z;
}

bool Cyclotomic::is_zero() const {
    for (const auto& v : c_) {
        if (!v.is_zero()) return false;
    }
    return true;
}

std::optional<Rational> Cyclotomic::as_rational() const {
    for (size_t i = 1; i < c_.size(); ++i) {
        if (!c_[i].is_zero()) return std::nullopt;
    }
    return c_[0];
}

bool Cyclotomic::is_integral() const {
    for (const auto& v : c_) {
        if (!v.is_integer()) return false;
    }
    return true;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    if (p_ != o.p_) throw DomainError("cyclotomic: mixed conductors");
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
    if (p_ != o.p_) throw DomainError("cyclotomic: mixed conductors");
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.p_ != b.p_) throw DomainError("cyclotomic: mixed conductors");
    const long p = a.p_;
    // cyclic convolution mod zeta^p = 1, then eliminate the zeta^{p-1} slot
    std::vector<Rational> full(p, Rational(0));
    for (long i = 0; i < p - 1; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (long j = 0; j < p - 1; ++j) {
            if (b.c_[j].is_zero()) continue;
            full[(i + j) % p] += a.c_[i] * b.c_[j];
        }
    }
    Cyclotomic r(p);
    for (long i = 0; i < p - 1; ++i) r.c_[i] = full[i] - full[p - 1];
    return r;
}

Cyclotomic operator*(const Rational& s, Cyclotomic a) {
    for (auto& v : a.c_) v *= s;
    return a;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r(p_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = -c_[i];
    return r;
}

std::string Cyclotomic::str() const {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ", ";
        os << c_[i].str();
    }
    os << ')';
    return os.str();
}

}  // namespace dualgap
