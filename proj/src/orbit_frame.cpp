#include "dualgap/orbit_frame.hpp"

#include <algorithm>
#include <sstream>

namespace dualgap {

OrbitFrame::OrbitFrame(FiniteField f, int t) : field_(std::move(f)), t_(t) {
    const long q = field_.q();
    if (t_ < 1 || (q - 1) % t_ != 0) throw DomainError("frame: t must divide q-1");
    if (q > 4096) throw DomainError("frame: field too large for orbit enumeration");

    const long h = (q - 1) / t_;
    subgroup_.reserve(h);
    for (long i = 0; i < h; ++i) subgroup_.push_back(field_.alpha_pow(static_cast<long>(i) * t_));
    std::sort(subgroup_.begin(), subgroup_.end());

    // Blocks in line order: l_inf, l_0, l_1, ..., l_{q-1}; powers 0..t-1
    // within each block.
    std::vector<LineIndex> lines;
    lines.push_back({true, 0});
    for (long j = 0; j < q; ++j) lines.push_back({false, j});

    reps_.reserve(static_cast<size_t>(t_) * (q + 1));
    for (const auto& mu : lines) {
        const auto [g0, g1] = line_vector(mu);
        for (int i = 0; i < t_; ++i) {
            const FieldElem s = field_.alpha_pow(i);
            reps_.push_back({i, mu, field_.mul(s, g0), field_.mul(s, g1)});
        }
    }

    // Partition check: every nonzero vector is h * rep for exactly one pair.
    orbit_lookup_.assign(static_cast<size_t>(q) * q, -1);
    for (size_t r = 0; r < reps_.size(); ++r) {
        for (const auto& u : subgroup_) {
            const FieldElem v0 = field_.mul(u, reps_[r].x0);
            const FieldElem v1 = field_.mul(u, reps_[r].x1);
            const size_t key = static_cast<size_t>(v0.code) * q + v1.code;
            if (orbit_lookup_[key] != -1) throw InternalError("frame: orbits overlap");
            orbit_lookup_[key] = static_cast<long>(r);
        }
    }
    if (orbit_lookup_[0] != -1) throw InternalError("frame: zero vector claimed by an orbit");
    for (size_t k = 1; k < orbit_lookup_.size(); ++k) {
        if (orbit_lookup_[k] == -1) throw InternalError("frame: orbits do not cover F_q^2");
    }
}

OrbitFrame OrbitFrame::from_subgroup(FiniteField f, const std::vector<FieldElem>& subgroup) {
    const long q = f.q();
    if (subgroup.empty() || (q - 1) % static_cast<long>(subgroup.size()) != 0) {
        throw DomainError("frame: subgroup size must divide q-1");
    }
    const int t = static_cast<int>((q - 1) / static_cast<long>(subgroup.size()));
    OrbitFrame frame(std::move(f), t);
    std::vector<FieldElem> sorted = subgroup;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != frame.subgroup_) throw DomainError("frame: set is not the subgroup generated by a power of alpha");
    return frame;
}

std::pair<FieldElem, FieldElem> OrbitFrame::line_vector(const LineIndex& mu) const {
    if (mu.infinite) return {field_.zero(), field_.one()};
    if (mu.j == 0) return {field_.one(), field_.zero()};
    return {field_.one(), field_.alpha_pow(mu.j)};
}

long OrbitFrame::line_block(const LineIndex& mu) const {
    if (mu.infinite) return 0;
    if (mu.j < 0 || mu.j >= field_.q()) throw DomainError("frame: line index out of range");
    return 1 + mu.j;
}

LineIndex OrbitFrame::block_line(long block) const {
    if (block < 0 || block > field_.q()) throw DomainError("frame: block out of range");
    if (block == 0) return {true, 0};
    return {false, block - 1};
}

LineIndex OrbitFrame::perp_line(const LineIndex& mu) const {
    if (mu.infinite) return {false, 0};
    if (mu.j == 0) return {true, 0};
    // nu with alpha^nu = -alpha^{-mu}; representatives use nu in 1..q-1.
    const FieldElem target = field_.neg(field_.alpha_pow(-mu.j));
    long nu = field_.dlog(target);
    if (nu == 0) nu = field_.q() - 1;
    return {false, nu};
}

long OrbitFrame::orbit_of(FieldElem x0, FieldElem x1) const {
    if (x0.code == 0 && x1.code == 0) throw DomainError("orbit_of: zero vector");
    return orbit_lookup_[static_cast<size_t>(x0.code) * field_.q() + x1.code];
}

OrbitFrame::HitCounts OrbitFrame::hit_counts(long rep1, long rep2) const {
    if (rep1 < 0 || rep1 >= rep_count() || rep2 < 0 || rep2 >= rep_count()) {
        throw DomainError("hit_counts: representative index out of range");
    }
    const Rep& a = reps_[rep1];
    const Rep& b = reps_[rep2];
    HitCounts out;
    out.per_orbit.assign(reps_.size(), 0);
    for (const auto& x : reps_) {
        const FieldElem y0 = field_.add(field_.mul(x.x0, a.x0), field_.mul(x.x1, a.x1));
        const FieldElem y1 = field_.add(field_.mul(x.x0, b.x0), field_.mul(x.x1, b.x1));
        if (y0.code == 0 && y1.code == 0) {
            ++out.zero;
        } else {
            ++out.per_orbit[orbit_of(y0, y1)];
        }
    }
    return out;
}

std::string OrbitFrame::dump() const {
    std::ostringstream os;
    for (const auto& r : reps_) {
        os << r.power << ',' << r.line.str() << ',' << field_.str(r.x0) << ',' << field_.str(r.x1) << '\n';
    }
    return os.str();
}

}  // namespace dualgap
