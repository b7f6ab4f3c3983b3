#include "dualgap/enumerators.hpp"

#include <algorithm>
#include <numeric>

namespace dualgap {

Cyclotomic generating_character(const FiniteField& f, FieldElem r) {
    return Cyclotomic::root_power(f.p(), f.trace(r));
}

int coset_class(const OrbitFrame& frame, FieldElem r) {
    if (r.code == 0) return 0;
    const int t = frame.coset_count();
    const int i = static_cast<int>(frame.field().dlog(r) % t);
    return i == 0 ? t : i;
}

KravchukMatrix kravchuk(const OrbitFrame& frame) {
    const FiniteField& f = frame.field();
    const int t = frame.coset_count();
    KravchukMatrix k;
    k.conductor = f.p();
    k.t = t;

    // partition classes P_0 = {0}, P_i = alpha^i H
    std::vector<std::vector<FieldElem>> classes(t + 1);
    classes[0].push_back(f.zero());
    for (int i = 1; i <= t; ++i) {
        for (const auto& h : frame.subgroup()) classes[i].push_back(f.mul(f.alpha_pow(i), h));
    }
    for (const auto& cl : classes) k.class_sizes.emplace_back(cl.size());

    k.entries.assign(t + 1, std::vector<Cyclotomic>(t + 1, Cyclotomic(k.conductor)));
    for (int j = 0; j <= t; ++j) {
        k.entries[0][j] = Cyclotomic::from_rational(k.conductor, Rational(k.class_sizes[j]));
    }
    for (int i = 1; i <= t; ++i) {
        const FieldElem m = f.alpha_pow(i);
        for (int j = 0; j <= t; ++j) {
            Cyclotomic sum(k.conductor);
            for (const auto& s : classes[j]) sum += generating_character(f, f.mul(m, s));
            k.entries[i][j] = std::move(sum);
        }
    }
    return k;
}

SparsePoly symmetrized_enumerator(const OrbitFrame& frame, const std::vector<Int>& multiplicity) {
    const int t = frame.coset_count();
    const long tau = frame.rep_count();
    if (static_cast<long>(multiplicity.size()) != tau) throw DomainError("enumerator: multiplicity length mismatch");
    for (const auto& m : multiplicity) {
        if (m < 0) throw DomainError("enumerator: negative multiplicity");
    }
    const FiniteField& f = frame.field();
    const auto& reps = frame.reps();

    Int n = 0;
    for (const auto& m : multiplicity) n += m;
    if (n == 0) throw DomainError("enumerator: empty code presentation");

    SparsePoly se(t + 1);
    {
        std::vector<Int> exps(t + 1, 0);
        exps[0] = n;
        se.add_term(std::move(exps), 1);  // zero codeword
    }
    const Int orbit_size(frame.orbit_size());
    for (long v = 0; v < tau; ++v) {
        std::vector<Int> exps(t + 1, 0);
        for (long col = 0; col < tau; ++col) {
            if (multiplicity[col] == 0) continue;
            const FieldElem d = f.add(f.mul(reps[v].x0, reps[col].x0), f.mul(reps[v].x1, reps[col].x1));
            exps[coset_class(frame, d)] += multiplicity[col];
        }
        if (n > 0 && exps[0] == n) {
            throw DomainError("enumerator: multiplicity function presents a rank-deficient code");
        }
        se.add_term(std::move(exps), orbit_size);
    }
    return se;
}

namespace {

// Composition tuples (b_1..b_t) with sum <= n, ordered by total degree then
// lexicographically; ranks are contiguous per degree.
struct CompositionTable {
    int t = 0;
    long n = 0;
    std::vector<std::vector<int>> tuples;
    std::vector<size_t> degree_offset;       // degree_offset[d] = first index of degree d
    std::vector<std::vector<long>> down;     // down[cell][j] = rank of tuple - e_j, or -1

    CompositionTable(int t_, long n_, size_t max_cells) : t(t_), n(n_) {
        std::map<std::vector<int>, long> rank_of;
        degree_offset.assign(n + 2, 0);
        for (long d = 0; d <= n; ++d) {
            degree_offset[d] = tuples.size();
            // lex enumeration of the compositions of d into t parts
            std::vector<int> c(t, 0);
            c[t - 1] = static_cast<int>(d);
            while (true) {
                rank_of.emplace(c, static_cast<long>(tuples.size()));
                tuples.push_back(c);
                if (tuples.size() > max_cells) throw CapExceededError("transform: monomial count exceeds the cap");
                // successor: increment the rightmost position (before the
                // last) with mass after it, dumping the remainder rightward
                int i = t - 2;
                long suffix = c[t - 1];
                while (i >= 0 && suffix == 0) {
                    suffix += c[i];
                    --i;
                }
                if (i < 0) break;
                ++c[i];
                for (int j = i + 1; j < t - 1; ++j) c[j] = 0;
                c[t - 1] = static_cast<int>(suffix - 1);
            }
        }
        degree_offset[n + 1] = tuples.size();

        down.assign(tuples.size(), std::vector<long>(t, -1));
        for (size_t idx = 0; idx < tuples.size(); ++idx) {
            std::vector<int> c = tuples[idx];
            for (int j = 0; j < t; ++j) {
                if (c[j] == 0) continue;
                --c[j];
                down[idx][j] = rank_of.at(c);
                ++c[j];
            }
        }
    }

    long degree_of(size_t idx) const {
        return static_cast<long>(std::accumulate(tuples[idx].begin(), tuples[idx].end(), 0));
    }
    size_t size() const { return tuples.size(); }
};

// Linear forms 1 + sum_j K_{i,j} Z_j with the cyclotomic coefficients held
// as root-of-unity multiplicity counts; multiplication then reduces to
// rotate-and-add over Z[x]/(x^p - 1).
struct FormRow {
    // counts[j][e]: multiplicity of zeta^e in K_{i,j}, j = 1..t (index j-1)
    std::vector<std::vector<unsigned long>> counts;
};

class TransformWorkspace {
public:
    TransformWorkspace(const CompositionTable& table, long p)
        : table_(table), p_(p), cur_(table.size() * p, Int(0)), acc_(table.size() * p, Int(0)) {}

    // cur <- cur * (1 + sum_j K_j Z_j), degree cur_deg_ -> cur_deg_ + 1
    void multiply(const FormRow& row) {
        for (long d = cur_deg_ + 1; d >= 1; --d) {
            for (size_t cell = table_.degree_offset[d]; cell < table_.degree_offset[d + 1]; ++cell) {
                Int* out = &cur_[cell * p_];
                for (int j = 0; j < table_.t; ++j) {
                    const long nb = table_.down[cell][j];
                    if (nb < 0) continue;
                    rotate_add(out, &cur_[static_cast<size_t>(nb) * p_], row.counts[j]);
                }
            }
        }
        ++cur_deg_;
    }

    // cur <- cur / (1 + sum_j K_j Z_j); the division must be exact
    void divide(const FormRow& row) {
        for (long d = 1; d < cur_deg_; ++d) {
            for (size_t cell = table_.degree_offset[d]; cell < table_.degree_offset[d + 1]; ++cell) {
                Int* out = &cur_[cell * p_];
                for (int j = 0; j < table_.t; ++j) {
                    const long nb = table_.down[cell][j];
                    if (nb < 0) continue;
                    rotate_sub(out, &cur_[static_cast<size_t>(nb) * p_], row.counts[j]);
                }
            }
        }
        // top-degree cells must now reproduce exactly from the quotient
        for (size_t cell = table_.degree_offset[cur_deg_]; cell < table_.degree_offset[cur_deg_ + 1]; ++cell) {
            Int* out = &cur_[cell * p_];
            for (int j = 0; j < table_.t; ++j) {
                const long nb = table_.down[cell][j];
                if (nb < 0) continue;
                rotate_sub(out, &cur_[static_cast<size_t>(nb) * p_], row.counts[j]);
            }
            for (long e = 0; e < p_; ++e) {
                if (out[e] != 0) throw InternalError("transform: inexact division by a linear form");
                out[e] = 0;
            }
        }
        --cur_deg_;
    }

    // cur <- (1 + s Z_1 + ... + s Z_t)^e via the multinomial closed form
    // (the class sizes of the nonzero cosets are all s = |H|).
    void seed_row_zero_power(long e, unsigned long class_size) {
        std::fill(cur_.begin(), cur_.end(), Int(0));
        for (size_t cell = 0; cell < table_.size(); ++cell) {
            const long d = table_.degree_of(cell);
            if (d > e) break;  // degree-major ordering
            Int coeff = factorial(static_cast<unsigned long>(e));
            coeff /= factorial(static_cast<unsigned long>(e - d));
            for (int j = 0; j < table_.t; ++j) coeff /= factorial(static_cast<unsigned long>(table_.tuples[cell][j]));
            coeff *= pow(Int(class_size), static_cast<unsigned long>(d));
            cur_[cell * p_] = std::move(coeff);
        }
        cur_deg_ = e;
    }

    void accumulate(const Int& coeff) {
        for (size_t i = 0; i < cur_.size(); ++i) {
            if (cur_[i] != 0) acc_[i] += coeff * cur_[i];
        }
    }

    // canonical rational value of an accumulated cell, if it is rational
    std::optional<Int> rational_value(size_t cell) const {
        const Int* v = &acc_[cell * p_];
        for (long e = 2; e < p_; ++e) {
            if (v[e] != v[1]) return std::nullopt;
        }
        return v[0] - v[1];
    }

    long cur_deg() const { return cur_deg_; }

private:
    void rotate_add(Int* out, const Int* src, const std::vector<unsigned long>& counts) {
        for (long e = 0; e < p_; ++e) {
            const unsigned long c = counts[e];
            if (c == 0) continue;
            for (long r = 0; r < p_; ++r) {
                const long tgt = (r + e) % p_;
                mpz_addmul_ui(out[tgt].get_mpz_t(), src[r].get_mpz_t(), c);
            }
        }
    }
    void rotate_sub(Int* out, const Int* src, const std::vector<unsigned long>& counts) {
        for (long e = 0; e < p_; ++e) {
            const unsigned long c = counts[e];
            if (c == 0) continue;
            for (long r = 0; r < p_; ++r) {
                const long tgt = (r + e) % p_;
                mpz_submul_ui(out[tgt].get_mpz_t(), src[r].get_mpz_t(), c);
            }
        }
    }

    const CompositionTable& table_;
    long p_;
    std::vector<Int> cur_;
    std::vector<Int> acc_;
    long cur_deg_ = 0;
};

long to_long_exponent(const Int& e) {
    if (e < 0 || !e.fits_slong_p()) throw CapExceededError("transform: exponent out of range");
    return e.get_si();
}

}  // namespace

SparsePoly macwilliams_transform(const SparsePoly& se, const KravchukMatrix& k, const Int& code_size,
                                 const TransformLimits& limits) {
    const int t = k.t;
    if (se.arity() != t + 1) throw DomainError("transform: arity mismatch with the Kravchuk matrix");
    if (code_size <= 0) throw DomainError("transform: code size must be positive");
    const long p = k.conductor;
    const Int n_big = se.homogeneous_degree();
    const long n = to_long_exponent(n_big);

    // q = |P_0| + ... + |P_t|
    Int q = 0;
    for (const auto& s : k.class_sizes) q += s;
    const unsigned long class_size = k.class_sizes[t].get_ui();

    // All Kravchuk entries are algebraic integers; rows as root-counts.
    std::vector<FormRow> rows(t + 1);
    for (int i = 0; i <= t; ++i) {
        rows[i].counts.assign(t, std::vector<unsigned long>(p, 0));
        for (int j = 1; j <= t; ++j) {
            if (i == 0) {
                // rational entry |P_j| = class size: that many copies of zeta^0
                rows[i].counts[j - 1][0] = k.class_sizes[j].get_ui();
                continue;
            }
            // recover root multiplicities from canonical coordinates: the
            // entry is sum_e m_e zeta^e with m_e >= 0 and sum m_e = |P_j|;
            // canonical coords are m_e - m_{p-1}.
            const auto& coords = k.entries[i][j].coords();
            Int base = 0;  // m_{p-1}
            Int total = 0;
            for (const auto& c : coords) total += c.to_integer();
            // sum_e<p-1 (m_e - m_{p-1}) = |P_j| - p m_{p-1}
            base = (Int(k.class_sizes[j]) - total) / p;
            if (base * p != k.class_sizes[j] - total || base < 0) {
                throw InternalError("transform: Kravchuk entry is not a nonnegative root sum");
            }
            for (long e = 0; e < p - 1; ++e) {
                const Int m = coords[e].to_integer() + base;
                if (m < 0) throw InternalError("transform: negative root multiplicity");
                rows[i].counts[j - 1][e] = m.get_ui();
            }
            rows[i].counts[j - 1][p - 1] = base.get_ui();
        }
    }

    // Dehomogenized term list (e_1..e_t) sorted ascending; e_0 = n - sum.
    struct Term {
        std::vector<long> e;  // size t+1, e[0] recoverable
        Int coeff;
    };
    std::vector<Term> term_list;
    for (const auto& [exps, coeff] : se.terms()) {
        Term term;
        term.e.reserve(t + 1);
        for (const auto& e : exps) term.e.push_back(to_long_exponent(e));
        term.coeff = coeff;
        term_list.push_back(std::move(term));
    }
    std::sort(term_list.begin(), term_list.end(), [](const Term& a, const Term& b) {
        return std::lexicographical_compare(a.e.begin() + 1, a.e.end(), b.e.begin() + 1, b.e.end());
    });

    const CompositionTable table(t, n, limits.max_monomials);
    TransformWorkspace ws(table, p);

    std::vector<long> cur_e;
    for (const auto& term : term_list) {
        if (cur_e.empty()) {
            ws.seed_row_zero_power(term.e[0], class_size);
            for (int i = 1; i <= t; ++i) {
                for (long rep = 0; rep < term.e[i]; ++rep) ws.multiply(rows[i]);
            }
        } else {
            // divisions first so intermediate degrees stay <= n
            for (int i = 0; i <= t; ++i) {
                for (long rep = 0; rep < cur_e[i] - term.e[i]; ++rep) ws.divide(rows[i]);
            }
            for (int i = 0; i <= t; ++i) {
                for (long rep = 0; rep < term.e[i] - cur_e[i]; ++rep) ws.multiply(rows[i]);
            }
        }
        cur_e = term.e;
        ws.accumulate(term.coeff);
    }

    SparsePoly out(t + 1);
    Int sum = 0;
    for (size_t cell = 0; cell < table.size(); ++cell) {
        const auto value = ws.rational_value(cell);
        if (!value) throw InternalError("transform: irrational coefficient in the dual enumerator");
        if (*value == 0) continue;
        const Int reduced = *value / code_size;
        if (reduced * code_size != *value || reduced < 0) {
            throw InternalError("transform: dual coefficient is not a nonnegative multiple of |C|");
        }
        std::vector<Int> exps;
        exps.reserve(t + 1);
        exps.emplace_back(n - table.degree_of(cell));
        for (int j = 0; j < t; ++j) exps.emplace_back(table.tuples[cell][j]);
        out.add_term(std::move(exps), reduced);
        sum += reduced;
    }
    if (sum * code_size != pow(q, static_cast<unsigned long>(n))) {
        throw InternalError("transform: dual coefficients do not sum to q^n / |C|");
    }
    return out;
}

UnivariatePoly specialize_to_wwe(const SparsePoly& se, const FieldWeight& w) {
    const int t = w.coset_count();
    if (se.arity() != t + 1) throw DomainError("specialize: arity mismatch with the weight");
    UnivariatePoly out;
    for (const auto& [exps, coeff] : se.terms()) {
        Rational weight(0);
        for (int i = 1; i <= t; ++i) weight += Rational(exps[i]) * w.coset_value(i);
        out.add_term(weight.to_integer(), coeff);
    }
    return out;
}

SparsePoly hamming_macwilliams(const SparsePoly& hwe, long q, const Int& code_size) {
    if (hwe.arity() != 2) throw DomainError("hamming transform: needs a two-variable enumerator");
    const long n = to_long_exponent(hwe.homogeneous_degree());

    // accumulate |C| * dual over dense (i, n-i) slots
    std::vector<Int> dense(n + 1, 0);
    for (const auto& [exps, coeff] : hwe.terms()) {
        const long a = to_long_exponent(exps[0]);
        const long b = to_long_exponent(exps[1]);
        // (X + (q-1)Y)^a (X - Y)^b
        for (long i = 0; i <= a; ++i) {
            const Int left = binomial(Int(a), static_cast<unsigned long>(i)) *
                             pow(Int(q - 1), static_cast<unsigned long>(a - i));
            for (long j = 0; j <= b; ++j) {
                Int rhs = binomial(Int(b), static_cast<unsigned long>(j));
                if ((b - j) % 2) rhs = -rhs;
                dense[i + j] += coeff * left * rhs;
            }
        }
    }
    SparsePoly out(2);
    for (long x = 0; x <= n; ++x) {
        if (dense[x] == 0) continue;
        Int reduced = dense[x] / code_size;
        if (reduced * code_size != dense[x] || reduced < 0) {
            throw InternalError("hamming transform: non-integral dual coefficient");
        }
        out.add_term({Int(x), Int(n - x)}, reduced);
    }
    return out;
}

std::map<Rational, Int> brute_force_dual(const FiniteField& f,
                                         const std::vector<std::vector<FieldElem>>& generator_rows,
                                         const FieldWeight& w, const Int& cap) {
    if (generator_rows.empty()) throw DomainError("brute force: empty generator matrix");
    const size_t n = generator_rows[0].size();
    for (const auto& row : generator_rows) {
        if (row.size() != n) throw DomainError("brute force: ragged generator matrix");
    }
    if (!w.field().same_field(f)) throw DomainError("brute force: weight on a different field");

    // row reduce to find rank and pivot columns
    std::vector<std::vector<FieldElem>> m = generator_rows;
    std::vector<size_t> pivot_cols;
    size_t row = 0;
    for (size_t col = 0; col < n && row < m.size(); ++col) {
        size_t sel = row;
        while (sel < m.size() && m[sel][col].code == 0) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[sel], m[row]);
        const FieldElem inv = f.inv(m[row][col]);
        for (size_t j = 0; j < n; ++j) m[row][j] = f.mul(m[row][j], inv);
        for (size_t i = 0; i < m.size(); ++i) {
            if (i == row || m[i][col].code == 0) continue;
            const FieldElem factor = m[i][col];
            for (size_t j = 0; j < n; ++j) m[i][j] = f.sub(m[i][j], f.mul(factor, m[row][j]));
        }
        pivot_cols.push_back(col);
        ++row;
    }
    const size_t rank = pivot_cols.size();
    const size_t free_count = n - rank;
    if (pow(Int(f.q()), static_cast<unsigned long>(free_count)) > cap) {
        throw CapExceededError("brute force: dual space exceeds the cap");
    }

    // null space basis: one vector per free column
    std::vector<bool> is_pivot(n, false);
    for (size_t c : pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<FieldElem>> basis;
    for (size_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<FieldElem> v(n, f.zero());
        v[free_col] = f.one();
        for (size_t i = 0; i < rank; ++i) v[pivot_cols[i]] = f.neg(m[i][free_col]);
        basis.push_back(std::move(v));
    }

    std::map<Rational, Int> dist;
    std::vector<FieldElem> current(n, f.zero());
    std::vector<std::uint32_t> odo(basis.size(), 0);
    const std::uint32_t q = static_cast<std::uint32_t>(f.q());
    while (true) {
        Rational weight(0);
        for (size_t j = 0; j < n; ++j) weight += w.value(current[j]);
        dist[weight] += 1;

        // odometer over field scalars: stepping digit pos from c to c'
        // shifts the sum by (c' - c) * basis[pos]
        size_t pos = 0;
        while (pos < basis.size()) {
            const std::uint32_t c = odo[pos];
            const std::uint32_t next = (c + 1 == q) ? 0 : c + 1;
            const FieldElem delta = f.sub(f.element(next), f.element(c));
            for (size_t j = 0; j < n; ++j) current[j] = f.add(current[j], f.mul(delta, basis[pos][j]));
            odo[pos] = next;
            if (next != 0) break;
            ++pos;
        }
        if (pos == basis.size()) break;
    }
    return dist;
}

UnivariatePoly distribution_to_poly(const std::map<Rational, Int>& dist) {
    UnivariatePoly out;
    for (const auto& [weight, count] : dist) out.add_term(weight.to_integer(), count);
    return out;
}

}  // namespace dualgap
