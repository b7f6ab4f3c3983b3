#include "dualgap/finite_field.hpp"

#include <algorithm>
#include <sstream>

namespace dualgap {
namespace {

long mod(long a, long p) {
    long r = a % p;
    return r < 0 ? r + p : r;
}

// Polynomials over F_p as coefficient vectors, lowest degree first, no
// trailing zeros.  Only what construction needs: this never runs in inner
// loops.
using Poly = std::vector<long>;

Poly trim(Poly f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

Poly poly_mod(Poly f, const Poly& g, long p) {
    // g monic
    while (f.size() >= g.size()) {
        const long lead = f.back();
        const size_t shift = f.size() - g.size();
        if (lead != 0) {
            for (size_t i = 0; i < g.size(); ++i) {
                f[shift + i] = mod(f[shift + i] - lead * g[i], p);
            }
        }
        f.pop_back();
        f = trim(std::move(f));
        if (f.size() < g.size()) break;
    }
    return trim(std::move(f));
}

Poly poly_mul(const Poly& a, const Poly& b, long p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        for (size_t j = 0; j < b.size(); ++j) {
            r[i + j] = mod(r[i + j] + a[i] * b[j], p);
        }
    }
    return trim(std::move(r));
}

// Irreducibility by trial division against all monic polynomials of degree
// up to deg/2.
bool irreducible(const Poly& f, long p) {
    const int deg = static_cast<int>(f.size()) - 1;
    if (deg <= 0) return false;
    if (deg == 1) return true;
    for (int d = 1; d <= deg / 2; ++d) {
        // enumerate monic polynomials of degree d: d free coefficients
        std::vector<long> c(d, 0);
        while (true) {
            Poly g(c.begin(), c.end());
            g.push_back(1);
            Poly r = poly_mod(f, g, p);
            if (r.empty()) return false;
            int i = 0;
            while (i < d && ++c[i] == p) c[i++] = 0;
            if (i == d) break;
        }
    }
    return true;
}

std::uint32_t pack(const Poly& f, long p, int l) {
    std::uint32_t code = 0;
    for (int i = l - 1; i >= 0; --i) {
        const long c = i < static_cast<int>(f.size()) ? f[i] : 0;
        code = static_cast<std::uint32_t>(code * p + c);
    }
    return code;
}

Poly unpack(std::uint32_t code, long p, int l) {
    Poly f(l);
    for (int i = 0; i < l; ++i) {
        f[i] = static_cast<long>(code % p);
        code = static_cast<std::uint32_t>(code / p);
    }
    return trim(std::move(f));
}

// Multiplicative order of the residue class of `elem` in F_p[x]/(modulus);
// returns 0 if not invertible.  Used only to test primitivity.
bool generates_units(const Poly& elem, const Poly& modulus, long p, long q) {
    if (elem.empty()) return false;
    Poly acc = {1};
    for (long i = 1; i < q; ++i) {
        acc = poly_mod(poly_mul(acc, elem, p), modulus, p);
        if (acc.size() == 1 && acc[0] == 1) return i == q - 1;
        if (acc.empty()) return false;
    }
    return false;
}

std::vector<long> primitive_root_candidates(long p) {
    std::vector<long> out;
    for (long g = 2; g < p; ++g) out.push_back(g);
    return out;
}

bool is_primitive_root(long g, long p) {
    long acc = 1;
    for (long i = 1; i < p - 1; ++i) {
        acc = mod(acc * g, p);
        if (acc == 1) return false;
    }
    return mod(acc * g, p) == 1;
}

}  // namespace

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

long canonical_residue(long r, long m) {
    long x = mod(r, m);
    if (2 * x > m) x -= m;
    return x;
}

FiniteField FiniteField::build(long p, int l, std::optional<std::vector<long>> modulus,
                               std::optional<std::vector<long>> alpha) {
    if (!is_prime(p)) throw DomainError("build_field: p = " + std::to_string(p) + " is not prime");
    if (l < 1) throw DomainError("build_field: extension degree must be >= 1");

    FiniteField f;
    f.p_ = p;
    f.l_ = l;
    long q = 1;
    for (int i = 0; i < l; ++i) {
        q *= p;
        if (q > (1L << 26)) throw DomainError("build_field: field too large");
    }
    f.q_ = q;

    if (l == 1) {
        if (modulus) throw DomainError("build_field: modulus not accepted for prime fields");
        long a;
        if (alpha) {
            if (alpha->size() != 1) throw DomainError("build_field: alpha must be a single residue");
            a = mod((*alpha)[0], p);
            if (p > 2 && !is_primitive_root(a, p)) {
                throw DomainError("build_field: alpha = " + std::to_string(a) + " is not a primitive root mod " +
                                  std::to_string(p));
            }
            if (p == 2 && a != 1) throw DomainError("build_field: alpha must be 1 for F_2");
        } else {
            a = 1;
            if (p > 2) {
                for (long g : primitive_root_candidates(p)) {
                    if (is_primitive_root(g, p)) {
                        a = g;
                        break;
                    }
                }
            }
        }
        f.alpha_ = {static_cast<std::uint32_t>(a)};
    } else {
        Poly m;
        if (modulus) {
            m = *modulus;
            if (static_cast<int>(m.size()) != l + 1 || m.back() % p != 1) {
                throw DomainError("build_field: modulus must be monic of degree l");
            }
            for (auto& c : m) c = mod(c, p);
            if (!irreducible(m, p)) throw DomainError("build_field: modulus is reducible over F_p");
        } else {
            // Lexicographically smallest monic irreducible (coefficients
            // low-to-high) making x primitive; fall back to the smallest
            // irreducible if none does.
            std::vector<Poly> irreducibles;
            std::vector<long> c(l, 0);
            std::vector<Poly> all;
            while (true) {
                Poly g(c.begin(), c.end());
                g.push_back(1);
                all.push_back(g);
                int i = l - 1;  // last coefficient varies fastest in lex order
                while (i >= 0 && ++c[i] == p) c[i--] = 0;
                if (i < 0) break;
            }
            std::sort(all.begin(), all.end());
            for (const auto& g : all) {
                if (irreducible(g, p)) irreducibles.push_back(g);
            }
            if (irreducibles.empty()) throw InternalError("build_field: no irreducible polynomial found");
            m.clear();
            for (const auto& g : irreducibles) {
                if (generates_units({0, 1}, g, p, q)) {
                    m = g;
                    break;
                }
            }
            if (m.empty()) m = irreducibles.front();
        }
        f.modulus_ = m;

        Poly a;
        if (alpha) {
            a = trim(*alpha);
            for (auto& c : a) c = mod(c, p);
            a = trim(std::move(a));
            if (static_cast<int>(a.size()) > l) throw DomainError("build_field: alpha out of range");
        } else if (generates_units({0, 1}, m, p, q)) {
            a = {0, 1};
        } else {
            // smallest primitive element by packed code
            for (std::uint32_t code = 2; code < static_cast<std::uint32_t>(q); ++code) {
                Poly cand = unpack(code, p, l);
                if (generates_units(cand, m, p, q)) {
                    a = cand;
                    break;
                }
            }
        }
        if (a.empty()) throw DomainError("build_field: no primitive element");
        if (!generates_units(a, m, p, q)) throw DomainError("build_field: alpha is not primitive");
        f.alpha_ = {pack(a, p, l)};
    }

    // Exponent and log tables; primitivity is revalidated by construction
    // (all q-1 powers distinct).
    f.exp_.assign(q - 1, 0);
    f.log_.assign(q, -1);
    f.exp_[0] = 1;
    f.log_[1] = 0;
    if (l == 1) {
        const long a = f.alpha_.code;
        long acc = 1;
        for (long i = 1; i < q - 1; ++i) {
            acc = mod(acc * a, p);
            if (f.log_[acc] != -1) throw DomainError("build_field: alpha is not primitive");
            f.exp_[i] = static_cast<std::uint32_t>(acc);
            f.log_[acc] = i;
        }
    } else {
        const Poly a = unpack(f.alpha_.code, p, l);
        Poly acc = {1};
        for (long i = 1; i < q - 1; ++i) {
            acc = poly_mod(poly_mul(acc, a, p), f.modulus_, p);
            const std::uint32_t code = pack(acc, p, l);
            if (code == 0 || f.log_[code] != -1) throw DomainError("build_field: alpha is not primitive");
            f.exp_[i] = code;
            f.log_[code] = i;
        }
    }

    f.inv_.assign(q, 0);
    for (long i = 0; i < q - 1; ++i) {
        f.inv_[f.exp_[i]] = f.exp_[(q - 1 - i) % (q - 1)];
    }

    // trace(x) = x + x^p + ... + x^{p^{l-1}}
    f.trace_.assign(q, 0);
    for (std::uint32_t code = 0; code < static_cast<std::uint32_t>(q); ++code) {
        if (l == 1) {
            f.trace_[code] = code;
            continue;
        }
        FieldElem x{code};
        FieldElem s = f.zero();
        FieldElem frob = x;
        for (int i = 0; i < l; ++i) {
            s = f.add(s, frob);
            frob = f.pow(frob, p);
        }
        const Poly sp = unpack(s.code, p, l);
        if (sp.size() > 1) throw InternalError("build_field: trace left the prime field");
        f.trace_[code] = sp.empty() ? 0 : sp[0];
    }

    return f;
}

FieldElem FiniteField::add(FieldElem a, FieldElem b) const {
    if (l_ == 1) return {static_cast<std::uint32_t>(mod(static_cast<long>(a.code) + b.code, p_))};
    std::uint32_t ca = a.code, cb = b.code, out = 0, mult = 1;
    for (int i = 0; i < l_; ++i) {
        const long s = mod(static_cast<long>(ca % p_) + static_cast<long>(cb % p_), p_);
        out += static_cast<std::uint32_t>(s) * mult;
        mult *= static_cast<std::uint32_t>(p_);
        ca /= p_;
        cb /= p_;
    }
    return {out};
}

FieldElem FiniteField::neg(FieldElem a) const {
    if (l_ == 1) return {static_cast<std::uint32_t>(mod(-static_cast<long>(a.code), p_))};
    std::uint32_t ca = a.code, out = 0, mult = 1;
    for (int i = 0; i < l_; ++i) {
        const long s = mod(-static_cast<long>(ca % p_), p_);
        out += static_cast<std::uint32_t>(s) * mult;
        mult *= static_cast<std::uint32_t>(p_);
        ca /= p_;
    }
    return {out};
}

FieldElem FiniteField::sub(FieldElem a, FieldElem b) const { return add(a, neg(b)); }

FieldElem FiniteField::mul(FieldElem a, FieldElem b) const {
    if (a.code == 0 || b.code == 0) return {0};
    return {exp_[(log_[a.code] + log_[b.code]) % (q_ - 1)]};
}

FieldElem FiniteField::inv(FieldElem a) const {
    if (a.code == 0) throw DomainError("inv: zero element");
    return {inv_[a.code]};
}

FieldElem FiniteField::pow(FieldElem a, long e) const {
    if (a.code == 0) {
        if (e <= 0) throw DomainError("pow: 0 to nonpositive power");
        return {0};
    }
    const long m = q_ - 1;
    long k = ((log_[a.code] * (e % m)) % m + m) % m;
    return {exp_[k]};
}

FieldElem FiniteField::alpha_pow(long i) const {
    const long m = q_ - 1;
    return {exp_[(i % m + m) % m]};
}

long FiniteField::dlog(FieldElem x) const {
    if (x.code == 0) throw DomainError("dlog: zero element");
    return log_[x.code];
}

long FiniteField::trace(FieldElem x) const { return trace_[x.code]; }

FieldElem FiniteField::from_coeffs(const std::vector<long>& coeffs) const {
    if (static_cast<int>(coeffs.size()) > l_) throw DomainError("from_coeffs: too many coordinates");
    std::uint32_t out = 0, mult = 1;
    for (int i = 0; i < l_; ++i) {
        const long c = i < static_cast<int>(coeffs.size()) ? mod(coeffs[i], p_) : 0;
        out += static_cast<std::uint32_t>(c) * mult;
        mult *= static_cast<std::uint32_t>(p_);
    }
    return {out};
}

std::vector<long> FiniteField::coeffs(FieldElem x) const {
    std::vector<long> out(l_);
    std::uint32_t c = x.code;
    for (int i = 0; i < l_; ++i) {
        out[i] = static_cast<long>(c % p_);
        c /= static_cast<std::uint32_t>(p_);
    }
    return out;
}

FieldElem FiniteField::element(std::uint32_t code) const {
    if (code >= static_cast<std::uint32_t>(q_)) throw DomainError("element: code out of range");
    return {code};
}

std::string FiniteField::str(FieldElem x) const {
    const auto c = coeffs(x);
    std::ostringstream os;
    for (int i = 0; i < l_; ++i) {
        if (i) os << ',';
        os << c[i];
    }
    return os.str();
}

FieldElem FiniteField::parse(const std::string& s) const {
    std::vector<long> c;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) c.push_back(std::stol(tok));
    if (c.empty() || static_cast<int>(c.size()) > l_) throw ConfigError("bad element literal: '" + s + "'");
    return from_coeffs(c);
}

FieldElem dot(const FiniteField& f, const std::vector<FieldElem>& x, const std::vector<FieldElem>& y) {
    if (x.size() != y.size()) throw DomainError("dot: length mismatch");
    FieldElem s = f.zero();
    for (size_t i = 0; i < x.size(); ++i) s = f.add(s, f.mul(x[i], y[i]));
    return s;
}

}  // namespace dualgap
