// The line generators of F_q^2, the ordered representative list of the
// nonzero H-orbits, the perpendicular-line pairing, and the orbit hit
// counts of paired dot-product maps.
#pragma once

#include <string>
#include <vector>

#include "dualgap/finite_field.hpp"

namespace dualgap {

/// Index into the line list: the infinite line <0,1>, the zero line <1,0>,
/// or <1, alpha^j> for j = 1..q-1.
struct LineIndex {
    bool infinite = false;
    long j = 0;  // valid when !infinite; 0 means the line <1,0>

    friend bool operator==(const LineIndex& a, const LineIndex& b) {
        return a.infinite == b.infinite && (a.infinite || a.j == b.j);
    }
    std::string str() const { return infinite ? "inf" : std::to_string(j); }
};

class OrbitFrame {
public:
    /// H = <alpha^t>; requires t | q-1.
    OrbitFrame(FiniteField f, int t);

    /// Derives t from an explicit subgroup; validates that the subgroup is
    /// exactly the powers of some alpha^t.
    static OrbitFrame from_subgroup(FiniteField f, const std::vector<FieldElem>& subgroup);

    const FiniteField& field() const { return field_; }
    int coset_count() const { return t_; }          // t
    long rep_count() const { return static_cast<long>(reps_.size()); }  // t(q+1)
    long orbit_size() const { return (field_.q() - 1) / t_; }
    long line_count() const { return field_.q() + 1; }

    struct Rep {
        int power = 0;    // i in alpha^i * line
        LineIndex line;
        FieldElem x0, x1;
    };
    const std::vector<Rep>& reps() const { return reps_; }
    const std::vector<FieldElem>& subgroup() const { return subgroup_; }

    /// Line generator vector for an index.
    std::pair<FieldElem, FieldElem> line_vector(const LineIndex& mu) const;

    /// Position of a line's block in the representative list (block b covers
    /// indices [b*t, (b+1)*t)).
    long line_block(const LineIndex& mu) const;
    LineIndex block_line(long block) const;

    /// The unique nu with l_nu . l_mu = 0.
    LineIndex perp_line(const LineIndex& mu) const;

    /// Representative index of the orbit containing a nonzero vector;
    /// throws DomainError on the zero vector.
    long orbit_of(FieldElem x0, FieldElem x1) const;

    struct HitCounts {
        long zero = 0;                // how many x in O map to the zero vector
        std::vector<long> per_orbit;  // indexed like reps()
    };
    /// Tallies x -> <x . rep1, x . rep2> over x in O by target orbit.
    HitCounts hit_counts(long rep1, long rep2) const;

    /// One representative per line: "i,mu,x0,x1".
    std::string dump() const;

    bool same_frame(const OrbitFrame& o) const {
        return field_.same_field(o.field_) && t_ == o.t_;
    }

private:
    FiniteField field_;
    int t_;
    std::vector<FieldElem> subgroup_;
    std::vector<Rep> reps_;
    std::vector<long> orbit_lookup_;  // (x0.code * q + x1.code) -> rep index
};

}  // namespace dualgap
