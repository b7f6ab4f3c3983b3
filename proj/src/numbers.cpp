#include "dualgap/numbers.hpp"

#include <ostream>

namespace dualgap {

Rational Rational::parse(const std::string& s) {
    auto bad = [&] { return ConfigError("bad rational literal: '" + s + "'"); };
    if (s.empty()) throw bad();
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(s));
        std::string num = s.substr(0, slash);
        std::string den = s.substr(slash + 1);
        if (num.empty() || den.empty()) throw bad();
        Int d(den);
        if (d == 0) throw bad();
        return Rational(Int(num), d);
    } catch (const std::invalid_argument&) {
        throw bad();
    }
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Int gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Int lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Int pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Int binomial(const Int& n, unsigned long k) {
    if (n < 0) throw DomainError("binomial: negative n");
    Int r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

bool perfect_square(const Int& n, Int& root) {
    if (n < 0) return false;
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return false;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    return true;
}

Int parse_int(const std::string& s) {
    try {
        return Int(s);
    } catch (const std::invalid_argument&) {
        throw ConfigError("bad integer literal: '" + s + "'");
    }
}

}  // namespace dualgap
