#include "dualgap/code_builder.hpp"

#include <algorithm>

namespace dualgap {

ExactVector two_valued_targets(const OrbitFrame& frame, const std::vector<long>& subset, const Rational& rho) {
    ExactVector omega = ExactVector::Constant(frame.rep_count(), Rational(1));
    for (long idx : subset) {
        if (idx < 0 || idx >= frame.rep_count()) throw DomainError("targets: subset index out of range");
        omega(idx) = rho;
    }
    return omega;
}

ExactVector AffineSolution::eval(const Rational& rho) const {
    ExactVector out = base;
    for (Eigen::Index i = 0; i < out.rows(); ++i) out(i) += slope(i) * rho;
    return out;
}

AffineSolution solve_multiplicity(const OrbitMatrix& winv, std::vector<long> subset) {
    std::sort(subset.begin(), subset.end());
    if (std::adjacent_find(subset.begin(), subset.end()) != subset.end()) {
        throw DomainError("solve_multiplicity: repeated subset index");
    }
    const long tau = winv.frame().rep_count();
    AffineSolution sol;
    sol.base = ExactVector::Constant(tau, Rational(0));
    sol.slope = ExactVector::Constant(tau, Rational(0));
    for (long row = 0; row < tau; ++row) {
        Rational in_subset(0), outside(0);
        size_t k = 0;
        for (long col = 0; col < tau; ++col) {
            if (k < subset.size() && subset[k] == col) {
                in_subset += winv.at(row, col);
                ++k;
            } else {
                outside += winv.at(row, col);
            }
        }
        sol.base(row) = outside;
        sol.slope(row) = in_subset;
    }
    sol.subset = std::move(subset);
    return sol;
}

RhoInterval nonnegativity_interval(const OrbitMatrix& winv, int subset_size) {
    const long tau = winv.frame().rep_count();
    if (subset_size <= 0 || subset_size >= tau) throw DomainError("interval: subset size out of range");

    // Row sums of the inverse are constant, so per-subset constraints come
    // from the subset-column sums Q(row) and their complements P(row):
    //   P < 0 forces rho >= |P|/Q, Q < 0 forces rho <= P/|Q|.
    RhoInterval out;
    bool have_lo = false, have_hi = false;

    std::vector<long> subset(subset_size);
    for (int i = 0; i < subset_size; ++i) subset[i] = i;
    while (true) {
        const AffineSolution sol = solve_multiplicity(winv, subset);
        for (long row = 0; row < tau; ++row) {
            const Rational& p = sol.base(row);
            const Rational& q = sol.slope(row);
            if (p.sign() < 0) {
                const Rational bound = -p / q;  // q > 0 here since p + q > 0
                if (!have_lo || out.lo < bound) {
                    out.lo = bound;
                    out.lo_witness = subset;
                    have_lo = true;
                }
            } else if (q.sign() < 0) {
                const Rational bound = p / -q;
                if (!have_hi || bound < out.hi) {
                    out.hi = bound;
                    out.hi_witness = subset;
                    have_hi = true;
                }
            }
        }
        // next subset in lexicographic order
        int i = subset_size - 1;
        while (i >= 0 && subset[i] == tau - subset_size + i) --i;
        if (i < 0) break;
        ++subset[i];
        for (int j = i + 1; j < subset_size; ++j) subset[j] = subset[j - 1] + 1;
    }

    if (!have_lo) out.lo = Rational(0);
    if (!have_hi) throw InternalError("interval: no upper bound found");
    if (!(Rational(0) < out.lo && out.lo < Rational(1) && Rational(1) < out.hi)) {
        throw InternalError("interval: bounds violate 0 < lo < 1 < hi");
    }
    return out;
}

namespace {

// Representative index of alpha^i l_mu.
long rep_index(const OrbitFrame& frame, const LineIndex& mu, long power) {
    return frame.line_block(mu) * frame.coset_count() + power;
}

}  // namespace

SubsetChoice select_subsets(const OrbitMatrix& winv) {
    const OrbitFrame& frame = winv.frame();
    const int t = frame.coset_count();
    const long q = frame.field().q();
    const InvariantTable& b = winv.source();

    // W^{-2} entries through the block law: diag(m) inside a line block,
    // the constant elsewhere.
    const Rational tb0b0 = Rational(t) * b.at_zero * b.at_zero;
    auto diag_entry = [&](long m) { return tb0b0 + Rational(q) * correlation(b, b, m); };
    const Rational off_entry = Rational(2) * b.at_zero * b.coset_sum() +
                               Rational(q - 1, t) * b.coset_sum() * b.coset_sum();

    const long l0 = rep_index(frame, {false, 0}, 0);
    const long linf = rep_index(frame, {true, 0}, 0);

    SubsetChoice choice;
    for (long m = 1; m <= t / 2; ++m) {
        if (diag_entry(m) != off_entry) {
            choice.case_tag = 1;
            choice.m1 = m;
            choice.s = {l0, rep_index(frame, {false, 0}, m)};
            choice.s_prime = {l0, linf};
            return choice;
        }
    }
    for (long m1 = 1; m1 <= t / 2; ++m1) {
        for (long m2 = m1 + 1; m2 <= t / 2; ++m2) {
            if (diag_entry(m1) != diag_entry(m2)) {
                choice.case_tag = 2;
                choice.m1 = m1;
                choice.m2 = m2;
                choice.s = {l0, rep_index(frame, {false, 0}, m1)};
                choice.s_prime = {l0, rep_index(frame, {false, 0}, m2)};
                return choice;
            }
        }
    }
    // Looser comparison: ((q-1)/t) b~^2 vs the diagonal entries.  This can
    // select subsets whose difference quadratic vanishes identically; such
    // pairs still produce equal-enumerator code pairs, witnessed elsewhere.
    const Rational loose = Rational(q - 1, t) * b.coset_sum() * b.coset_sum();
    for (long m = 1; m <= t / 2; ++m) {
        if (diag_entry(m) != loose) {
            choice.case_tag = 3;
            choice.m1 = m;
            choice.s = {l0, rep_index(frame, {false, 0}, m)};
            choice.s_prime = {l0, linf};
            return choice;
        }
    }
    throw DomainError("select_subsets: every comparison entry coincides; no subset pair available");
}

Rational doubleton_form(const ExactVector& eta) {
    Rational s(0);
    for (Eigen::Index i = 0; i < eta.rows(); ++i) s += eta(i) * (eta(i) - Rational(1));
    return s;
}

Quadratic rho_polynomial(const AffineSolution& a, const AffineSolution& b, const OrbitMatrix& winv) {
    const Eigen::Index tau = a.base.rows();
    if (b.base.rows() != tau) throw DomainError("rho polynomial: mismatched solutions");
    // Same-size subsets give equal multiplicity sums, so the linear parts of
    // sum eta cancel and f(rho) = sum eta^2 - sum eta'^2.
    Quadratic f;
    for (Eigen::Index i = 0; i < tau; ++i) {
        f.c0 += a.base(i) * a.base(i) - b.base(i) * b.base(i);
        f.c1 += Rational(2) * (a.base(i) * a.slope(i) - b.base(i) * b.slope(i));
        f.c2 += a.slope(i) * a.slope(i) - b.slope(i) * b.slope(i);
    }

    // Leading coefficient check: 2 * (difference of the two W^{-2} entries
    // addressed by the subsets).  Subsets here always share one common
    // index; the differing indices address the entries.
    if (a.subset.size() == 2 && b.subset.size() == 2) {
        const ExactMatrix& m = winv.matrix();
        auto entry = [&](const std::vector<long>& s) {
            Rational v(0);
            for (Eigen::Index r = 0; r < tau; ++r) v += m(r, s[0]) * m(r, s[1]);
            return v;
        };
        const Rational expected = Rational(2) * (entry(a.subset) - entry(b.subset));
        if (f.c2 != expected) throw InternalError("rho polynomial: leading coefficient mismatch");
    }
    return f;
}

Rational choose_rho(const Rational& lo, const Rational& hi, const Quadratic& f) {
    if (hi < lo) throw DomainError("choose_rho: empty interval");
    if (!f.eval(lo).is_zero()) return lo;
    if (!f.eval(hi).is_zero()) return hi;
    // f has at most two zeros; bisection midpoints must escape them.
    Rational a = lo, b = hi;
    for (int round = 0; round < 8; ++round) {
        const Rational mid = (a + b) / Rational(2);
        if (!f.eval(mid).is_zero()) return mid;
        b = mid;
    }
    throw DomainError("choose_rho: difference quadratic vanishes on the interval");
}

ScaledPair scale_to_integers(const ExactVector& eta_c, const ExactVector& eta_d) {
    if (eta_c.rows() != eta_d.rows()) throw DomainError("scale: mismatched vectors");
    Int n = 1;
    for (const ExactVector* v : {&eta_c, &eta_d}) {
        for (Eigen::Index i = 0; i < v->rows(); ++i) {
            if ((*v)(i).sign() < 0) throw DomainError("scale: negative multiplicity (rho outside the interval)");
            n = lcm(n, (*v)(i).den());
        }
    }
    ScaledPair out;
    out.scaling = n;
    out.length = 0;
    for (Eigen::Index i = 0; i < eta_c.rows(); ++i) {
        out.mult_c.push_back((eta_c(i) * Rational(n)).to_integer());
        out.mult_d.push_back((eta_d(i) * Rational(n)).to_integer());
        out.length += out.mult_c.back();
    }
    Int check = 0;
    for (const auto& m : out.mult_d) check += m;
    if (check != out.length) throw InternalError("scale: scaled codes have different lengths");
    return out;
}

ExactVector orbit_weights(const OrbitMatrix& w, const std::vector<Int>& multiplicity) {
    if (static_cast<long>(multiplicity.size()) != w.frame().rep_count()) {
        throw DomainError("orbit weights: multiplicity length mismatch");
    }
    return w.matrix() * linalg::int_vector(multiplicity);
}

std::map<Rational, Int> weight_distribution(const OrbitFrame& frame, const std::vector<Int>& multiplicity,
                                            const OrbitMatrix& w) {
    const ExactVector omega = orbit_weights(w, multiplicity);
    std::map<Rational, Int> dist;
    dist[Rational(0)] += 1;
    const Int orbit_size(frame.orbit_size());
    for (Eigen::Index i = 0; i < omega.rows(); ++i) dist[omega(i)] += orbit_size;
    return dist;
}

std::map<Rational, Int> weight_distribution_by_enumeration(const OrbitFrame& frame, const FieldWeight& w,
                                                           const std::vector<Int>& multiplicity) {
    const FiniteField& f = frame.field();
    const auto& reps = frame.reps();
    std::map<Rational, Int> dist;
    for (std::uint32_t v0 = 0; v0 < f.q(); ++v0) {
        for (std::uint32_t v1 = 0; v1 < f.q(); ++v1) {
            Rational weight(0);
            for (size_t col = 0; col < reps.size(); ++col) {
                if (multiplicity[col] == 0) continue;
                const FieldElem d = f.add(f.mul(f.element(v0), reps[col].x0), f.mul(f.element(v1), reps[col].x1));
                weight += w.value(d) * Rational(multiplicity[col]);
            }
            dist[weight] += 1;
        }
    }
    return dist;
}

EgalitarianCheck egalitarian_check(const OrbitFrame& frame, const FieldWeight& w,
                                   const std::vector<Int>& multiplicity,
                                   const std::map<Rational, Int>& distribution) {
    EgalitarianCheck out;
    const long q = frame.field().q();
    Rational total(0);
    for (std::uint32_t c = 0; c < q; ++c) total += w.value(frame.field().element(c));
    out.zeta = total / Rational(q);

    out.effective_length = 0;
    for (const auto& m : multiplicity) out.effective_length += m;

    out.codeword_weight_sum = Rational(0);
    Int codewords = 0;
    for (const auto& [weight, count] : distribution) {
        out.codeword_weight_sum += weight * Rational(count);
        codewords += count;
    }
    out.holds = out.codeword_weight_sum == out.zeta * Rational(codewords) * Rational(out.effective_length);
    return out;
}

Int doubleton_dual_count(const OrbitFrame& frame, const FieldWeight& w, const std::vector<Int>& multiplicity,
                         const Int& zero_columns) {
    if (!w.minimum_on_unique_coset()) {
        throw DomainError("doubleton count: minimum weight not on a unique orbit");
    }
    const FiniteField& f = frame.field();
    const FieldElem minus_one = f.neg(f.one());
    const auto& sym = w.symmetry_group();
    if (!std::binary_search(sym.begin(), sym.end(), minus_one)) {
        throw DomainError("doubleton count: -1 not in the symmetry group");
    }
    const Int h(sym.size());
    Int total = 0;
    for (const auto& m : multiplicity) total += m * (m - 1) / 2;
    total *= h;
    total += h * h * (zero_columns * (zero_columns - 1) / 2);
    return total;
}

Int cross_coset_dual_count(const OrbitFrame& frame, const FieldWeight& w, const std::vector<Int>& multiplicity) {
    const int t = frame.coset_count();
    if (t != 2) throw DomainError("cross-coset count: requires t = 2");
    std::vector<Rational> vals = {w.coset_value(0), w.coset_value(1)};
    std::sort(vals.begin(), vals.end());
    if (!(vals[0] == Rational(2) && vals[1] == Rational(3))) {
        throw DomainError("cross-coset count: requires coset values {2, 3}");
    }
    const long q = frame.field().q();
    Int total = 0;
    for (long block = 0; block < frame.line_count(); ++block) {
        total += multiplicity[block * t] * multiplicity[block * t + 1] * Int(q - 1);
    }
    return total;
}

}  // namespace dualgap
