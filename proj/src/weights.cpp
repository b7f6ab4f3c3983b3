#include "dualgap/weights.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <set>

namespace dualgap {

Rational correlation(const InvariantTable& a, const InvariantTable& b, long m) {
    if (a.coset_count() != b.coset_count()) throw DomainError("correlation: mismatched symmetry groups");
    const int t = a.coset_count();
    Rational s(0);
    for (int j = 0; j < t; ++j) s += a.coset[j] * b.value_of_power(m + j);
    return s;
}

FieldWeight::FieldWeight(FiniteField f, std::vector<Rational> values)
    : field_(std::move(f)), values_(std::move(values)) {
    const long q = field_.q();
    if (static_cast<long>(values_.size()) != q) throw DomainError("weight: value table must have q entries");
    if (!values_[0].is_zero()) throw DomainError("weight: w(0) must be 0");
    for (long c = 1; c < q; ++c) {
        if (values_[c].sign() <= 0) throw DomainError("weight: w(r) must be positive for r != 0");
    }

    for (long c = 1; c < q; ++c) {
        const FieldElem u{static_cast<std::uint32_t>(c)};
        bool fixes = true;
        for (long r = 1; r < q && fixes; ++r) {
            const FieldElem x{static_cast<std::uint32_t>(r)};
            fixes = values_[field_.mul(u, x).code] == values_[r];
        }
        if (fixes) sym_.push_back(u);
    }
    std::sort(sym_.begin(), sym_.end());

    t_ = static_cast<int>((q - 1) / static_cast<long>(sym_.size()));

    // alpha^t must generate sym(w): its powers are exactly the subgroup.
    std::set<std::uint32_t> gen;
    FieldElem g = field_.alpha_pow(t_);
    FieldElem acc = field_.one();
    for (size_t i = 0; i < sym_.size(); ++i) {
        gen.insert(acc.code);
        acc = field_.mul(acc, g);
    }
    for (const auto& h : sym_) {
        if (!gen.count(h.code)) throw InternalError("weight: symmetry group is not generated by alpha^t");
    }

    coset_values_.reserve(t_);
    for (int i = 0; i < t_; ++i) coset_values_.push_back(values_[field_.alpha_pow(i).code]);

    min_positive_ = coset_values_[0];
    max_value_ = coset_values_[0];
    for (const auto& v : coset_values_) {
        if (v < min_positive_) min_positive_ = v;
        if (max_value_ < v) max_value_ = v;
    }
}

FieldWeight FieldWeight::from_coset_values(FiniteField f, const std::vector<Rational>& coset_values) {
    const long q = f.q();
    const int k = static_cast<int>(coset_values.size());
    if (k < 1 || (q - 1) % k != 0) throw DomainError("weight: coset value count must divide q-1");
    std::vector<Rational> values(q, Rational(0));
    for (long i = 0; i < q - 1; ++i) {
        values[f.alpha_pow(i).code] = coset_values[static_cast<size_t>(i % k)];
    }
    return FieldWeight(std::move(f), std::move(values));
}

const Rational& FieldWeight::coset_value(long i) const {
    return coset_values_[static_cast<size_t>((i % t_ + t_) % t_)];
}

Rational FieldWeight::coset_sum() const {
    Rational s(0);
    for (const auto& v : coset_values_) s += v;
    return s;
}

bool FieldWeight::integer_valued() const {
    return std::all_of(values_.begin(), values_.end(), [](const Rational& v) { return v.is_integer(); });
}

bool FieldWeight::minimum_on_unique_coset() const {
    int hits = 0;
    for (const auto& v : coset_values_) hits += (v == min_positive_);
    return hits == 1;
}

ExactMatrix FieldWeight::coset_matrix() const {
    ExactMatrix m(t_, t_);
    for (int i = 0; i < t_; ++i) {
        for (int j = 0; j < t_; ++j) m(i, j) = coset_value(i + j);
    }
    return m;
}

NondegeneracyReport FieldWeight::nondegeneracy() const {
    const ExactMatrix m = coset_matrix();
    auto a = linalg::analyze(m);
    return {a.rank == m.rows(), a.rank, a.det, std::move(a.kernel_vector)};
}

std::string HypothesisReport::first_failure() const {
    if (!nondegenerate) return "weight is degenerate (orbit matrix is singular)";
    if (!minus_one_in_sym) return "-1 is not in sym(w)";
    if (!proper_symmetry) return "sym(w) is the full unit group (Hamming multiple)";
    if (!minimum_on_unique_coset) return "minimum value achieved on more than one orbit";
    if (!comparison_values_distinct) return "q c_m(w,w) and ((q-1)/t) w_sum^2 are all equal";
    return "";
}

HypothesisReport main_theorem_hypotheses(const FieldWeight& w) {
    HypothesisReport r;
    const FiniteField& f = w.field();
    const long q = f.q();
    r.t = w.coset_count();
    r.integer_valued = w.integer_valued();

    auto nd = w.nondegeneracy();
    r.nondegenerate = nd.nondegenerate;
    r.det = nd.det;

    const FieldElem minus_one = f.neg(f.one());
    r.minus_one_in_sym =
        std::binary_search(w.symmetry_group().begin(), w.symmetry_group().end(), minus_one);
    r.proper_symmetry = r.t >= 2;
    r.minimum_on_unique_coset = w.minimum_on_unique_coset();

    const InvariantTable inv = w.invariant();
    for (int m = 0; m < r.t; ++m) r.correlations.push_back(correlation(inv, inv, m));

    r.coset_sum = w.coset_sum();
    for (int m = 1; m <= r.t / 2; ++m) r.comparison_values.push_back(Rational(q) * r.correlations[m]);
    r.comparison_values.push_back(Rational(q - 1, r.t) * r.coset_sum * r.coset_sum);

    r.comparison_values_distinct = false;
    for (const auto& v : r.comparison_values) {
        if (v != r.comparison_values.front()) r.comparison_values_distinct = true;
    }
    return r;
}

std::optional<std::pair<Rational, Rational>> t2_equality_roots(long q) {
    if (q % 2 == 0) throw DomainError("t2_equality_roots: q must be odd");
    Int root;
    if (!perfect_square(Int(q), root)) return std::nullopt;
    // (q+1 +- 2 sqrt(q)) / (q-1) = (sqrt(q)+1)/(sqrt(q)-1) and its reciprocal
    const Rational big(root + 1, root - 1);
    return std::make_pair(big, Rational(root - 1, root + 1));
}

RingWeight::RingWeight(long m, std::vector<Rational> values) : m_(m), values_(std::move(values)) {
    if (m_ < 2) throw DomainError("ring weight: modulus must be >= 2");
    if (static_cast<long>(values_.size()) != m_) throw DomainError("ring weight: value table must have m entries");
    if (!values_[0].is_zero()) throw DomainError("ring weight: w(0) must be 0");
    for (long r = 1; r < m_; ++r) {
        if (values_[r].sign() <= 0) throw DomainError("ring weight: w(r) must be positive for r != 0");
    }

    for (long u = 1; u < m_; ++u) {
        if (std::gcd(u, m_) == 1) units_.push_back(u);
    }
    for (long u : units_) {
        bool fixes = true;
        for (long r = 1; r < m_ && fixes; ++r) fixes = values_[(u * r) % m_] == values_[r];
        if (fixes) sym_.push_back(u);
    }

    std::vector<bool> seen(m_, false);
    for (long r = 1; r < m_; ++r) {
        if (seen[r]) continue;
        reps_.push_back(r);
        for (long h : sym_) seen[(h * r) % m_] = true;
    }
}

const Rational& RingWeight::value(long r) const {
    long x = r % m_;
    if (x < 0) x += m_;
    return values_[x];
}

ExactMatrix RingWeight::orbit_matrix() const {
    const Eigen::Index n = static_cast<Eigen::Index>(reps_.size());
    ExactMatrix w(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) w(i, j) = values_[(reps_[i] * reps_[j]) % m_];
    }
    return w;
}

NondegeneracyReport RingWeight::nondegeneracy() const {
    const ExactMatrix m = orbit_matrix();
    auto a = linalg::analyze(m);
    return {a.rank == m.rows(), a.rank, a.det, std::move(a.kernel_vector)};
}

RingWeight power_weight(long m, int ell) {
    if (ell < 0) throw DomainError("power_weight: exponent must be >= 0");
    std::vector<Rational> values;
    values.reserve(m);
    values.emplace_back(0);
    for (long r = 1; r < m; ++r) {
        const Int a = std::abs(canonical_residue(r, m));
        values.emplace_back(ell == 0 ? Int(1) : pow(a, static_cast<unsigned long>(ell)));
    }
    return RingWeight(m, std::move(values));
}

FieldWeight power_weight_on_prime_field(const FiniteField& f, int ell) {
    if (f.degree() != 1) throw DomainError("power weight on fields requires a prime field");
    RingWeight rw = power_weight(f.p(), ell);
    return FieldWeight(f, rw.values());
}

ScanRow scan_power_weight_cell(long p, int ell) {
    const FiniteField f = FiniteField::build(p, 1);
    const FieldWeight w = power_weight_on_prime_field(f, ell);
    ScanRow row;
    row.p = p;
    row.ell = ell;
    row.t = w.coset_count();
    row.nondegenerate = w.nondegeneracy().nondegenerate;
    if (row.t / 2 >= 2) {
        const InvariantTable inv = w.invariant();
        row.c1_ne_c2 = correlation(inv, inv, 1) != correlation(inv, inv, 2);
    }
    return row;
}

std::vector<ScanRow> scan_power_weights(const std::vector<long>& primes, int ell_lo, int ell_hi) {
    if (ell_lo > ell_hi) throw DomainError("scan: empty exponent range");
    for (long p : primes) {
        if (!is_prime(p) || p < 5) throw DomainError("scan: primes must be >= 5");
    }

    // One task per prime; cells are independent and the merge below sorts,
    // so the report does not depend on scheduling.
    std::vector<std::future<std::vector<ScanRow>>> futures;
    futures.reserve(primes.size());
    for (long p : primes) {
        futures.push_back(std::async(std::launch::async, [p, ell_lo, ell_hi] {
            std::vector<ScanRow> out;
            for (int ell = ell_lo; ell <= ell_hi; ++ell) out.push_back(scan_power_weight_cell(p, ell));
            return out;
        }));
    }
    std::vector<ScanRow> rows;
    for (auto& fu : futures) {
        auto part = fu.get();
        rows.insert(rows.end(), part.begin(), part.end());
    }
    std::sort(rows.begin(), rows.end(),
              [](const ScanRow& a, const ScanRow& b) { return std::tie(a.p, a.ell) < std::tie(b.p, b.ell); });
    return rows;
}

}  // namespace dualgap
