#include "dualgap/poly.hpp"

#include <sstream>

namespace dualgap {

void SparsePoly::add_term(std::vector<Int> exps, const Int& coeff) {
    if (static_cast<int>(exps.size()) != arity_) throw DomainError("poly: exponent arity mismatch");
    if (coeff == 0) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(std::move(exps), coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

const Int* SparsePoly::coefficient(const std::vector<Int>& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? nullptr : &it->second;
}

Int SparsePoly::coefficient_sum() const {
    Int s = 0;
    for (const auto& [_, c] : terms_) s += c;
    return s;
}

Int SparsePoly::homogeneous_degree() const {
    if (terms_.empty()) return 0;
    Int deg = -1;
    for (const auto& [e, _] : terms_) {
        Int d = 0;
        for (const auto& x : e) d += x;
        if (deg < 0) {
            deg = d;
        } else if (d != deg) {
            throw DomainError("poly: not homogeneous");
        }
    }
    return deg;
}

std::string SparsePoly::dump() const {
    std::ostringstream os;
    for (const auto& [e, c] : terms_) {
        os << '[';
        for (size_t i = 0; i < e.size(); ++i) {
            if (i) os << ',';
            os << e[i];
        }
        os << "]: " << c << '\n';
    }
    return os.str();
}

SparsePoly SparsePoly::parse(int arity, const std::string& text) {
    SparsePoly p(arity);
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        const auto lb = line.find('[');
        const auto rb = line.find(']');
        const auto colon = line.find(':', rb);
        if (lb == std::string::npos || rb == std::string::npos || colon == std::string::npos) {
            throw ConfigError("poly: bad term line '" + line + "'");
        }
        std::vector<Int> exps;
        std::istringstream es(line.substr(lb + 1, rb - lb - 1));
        std::string tok;
        while (std::getline(es, tok, ',')) exps.push_back(parse_int(tok));
        p.add_term(std::move(exps), parse_int(line.substr(colon + 1)));
    }
    return p;
}

std::string SparsePoly::str(const std::string& stem) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        bool printed = false;
        if (c != 1) {
            os << c;
            printed = true;
        }
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (printed) os << ' ';
            os << stem << i;
            if (e[i] != 1) os << '^' << e[i];
            printed = true;
        }
        if (!printed) os << c;  // constant term 1
    }
    return os.str();
}

UnivariatePoly::UnivariatePoly(std::map<Int, Int> terms) : terms_(std::move(terms)) {
    for (auto it = terms_.begin(); it != terms_.end();) {
        it = it->second == 0 ? terms_.erase(it) : std::next(it);
    }
}

void UnivariatePoly::add_term(const Int& exp, const Int& coeff) {
    if (coeff == 0) return;
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
        terms_.emplace(exp, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

const Int* UnivariatePoly::coefficient(const Int& exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? nullptr : &it->second;
}

Int UnivariatePoly::coefficient_sum() const {
    Int s = 0;
    for (const auto& [_, c] : terms_) s += c;
    return s;
}

UnivariatePoly UnivariatePoly::prefix(const Int& bound) const {
    UnivariatePoly out;
    for (const auto& [e, c] : terms_) {
        if (e <= bound) out.terms_.emplace(e, c);
    }
    return out;
}

std::string UnivariatePoly::str(const std::string& var) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        if (e == 0) {
            os << c;
            continue;
        }
        if (c != 1) os << c;
        os << var;
        if (e != 1) os << '^' << e;
    }
    return os.str();
}

}  // namespace dualgap
