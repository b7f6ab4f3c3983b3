// Certificates: a serialized code pair with equal enumerators and a
// witnessed dual difference, plus the pipeline that builds one from a
// weight and the independent re-verification path.
#pragma once

#include <optional>

#include "dualgap/code_builder.hpp"
#include "dualgap/enumerators.hpp"

namespace dualgap {

/// The construction hit a failed hypothesis or could not witness a dual
/// difference; maps to exit code 1 in the CLI.
class HypothesisError : public Error {
public:
    using Error::Error;
};

struct Certificate {
    // field and weight
    long p = 0;
    int l = 1;
    std::vector<long> modulus;        // empty for prime fields
    std::vector<long> alpha;          // coefficient vector of the primitive element
    std::vector<Rational> coset_values;

    // construction parameters
    std::vector<long> subset_s, subset_s_prime;
    int case_tag = 0;
    Rational rho;
    Int scaling = 0;  // N
    Int length = 0;   // n

    // the code pair
    std::vector<Int> mult_c, mult_d;

    // primal enumerators (equal) as weight -> count
    std::map<Rational, Int> wwe_c, wwe_d;

    // dual small-weight data
    Int doubleton_count_c = 0, doubleton_count_d = 0;  // A_{2 min}(dual)
    Rational witness_weight;
    Int witness_count_c = 0, witness_count_d = 0;
    std::string witness_method;  // "doubleton", "cross-coset", or "transform"

    // full dual enumerators when requested
    std::optional<std::map<Rational, Int>> dual_wwe_c, dual_wwe_d;

    FiniteField build_field() const;
    FieldWeight build_weight(const FiniteField& f) const;

    std::string to_json() const;  // deterministic, no timestamps
    static Certificate from_json(const std::string& text);
};

struct BuildOptions {
    std::optional<Rational> rho;
    std::optional<std::vector<long>> subset_s;
    std::optional<std::vector<long>> subset_s_prime;
    bool full_dual = false;
    bool force = false;  // run outside the strict hypotheses
    TransformLimits limits;
};

Certificate build_certificate(const FieldWeight& w, const BuildOptions& options = {});

struct VerifyLine {
    std::string check;
    bool ok = false;
    bool skipped = false;
    std::string detail;
};

struct VerifyReport {
    bool pass = false;
    std::vector<VerifyLine> lines;
    std::string first_failure() const;
};

struct VerifyOptions {
    Int brute_force_cap = Int(10000000);
    TransformLimits limits;
};

/// Re-derives everything from (field, weight, multiplicities) and diffs
/// against the certificate's claims; brute-force and transform cross-checks
/// run when under their caps.
VerifyReport verify_certificate(const Certificate& cert, const VerifyOptions& options = {});

/// Generator matrix columns implied by a multiplicity function (two rows);
/// requires the total length to fit in memory.
std::vector<std::vector<FieldElem>> expand_generator(const OrbitFrame& frame, const std::vector<Int>& multiplicity);

}  // namespace dualgap
