// Built-in reference examples with known published values, used by the
// paper-example command and the golden test suites.  All expected data is
// embedded here as plain text.
#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace dualgap {
namespace golden {

// ---- F_5, Euclidean weight, alpha = 2, t = 2 ----------------------------

inline constexpr const char* kF5WeightMatrix = R"(
1 4 0 0 4 1 1 4 4 1 1 4
4 1 0 0 1 4 4 1 1 4 4 1
0 0 1 4 1 4 1 4 1 4 1 4
0 0 4 1 4 1 4 1 4 1 4 1
4 1 1 4 0 0 1 4 4 1 4 1
1 4 4 1 0 0 4 1 1 4 1 4
1 4 1 4 1 4 4 1 4 1 0 0
4 1 4 1 4 1 1 4 1 4 0 0
4 1 1 4 4 1 4 1 0 0 1 4
1 4 4 1 1 4 1 4 0 0 4 1
1 4 1 4 4 1 0 0 1 4 4 1
4 1 4 1 1 4 0 0 4 1 1 4
)";

// -75 * W^{-1}
inline constexpr const char* kF5ScaledInverse = R"(
1 -4 6 6 -4 1 1 -4 -4 1 1 -4
-4 1 6 6 1 -4 -4 1 1 -4 -4 1
6 6 1 -4 1 -4 1 -4 1 -4 1 -4
6 6 -4 1 -4 1 -4 1 -4 1 -4 1
-4 1 1 -4 6 6 1 -4 -4 1 -4 1
1 -4 -4 1 6 6 -4 1 1 -4 1 -4
1 -4 1 -4 1 -4 -4 1 -4 1 6 6
-4 1 -4 1 -4 1 1 -4 1 -4 6 6
-4 1 1 -4 -4 1 -4 1 6 6 1 -4
1 -4 -4 1 1 -4 1 -4 6 6 -4 1
1 -4 1 -4 -4 1 6 6 1 -4 -4 1
-4 1 -4 1 1 -4 6 6 -4 1 1 -4
)";

// Block pattern of the generic orbit matrix on F_5 with H = {1,4}: digit k
// marks the entry a(alpha^k-coset), 0 marks a(0).
inline constexpr const char* kF5GenericPattern = R"(
1 2 0 0 2 1 1 2 2 1 1 2
2 1 0 0 1 2 2 1 1 2 2 1
0 0 1 2 1 2 1 2 1 2 1 2
0 0 2 1 2 1 2 1 2 1 2 1
2 1 1 2 0 0 1 2 2 1 2 1
1 2 2 1 0 0 2 1 1 2 1 2
1 2 1 2 1 2 2 1 2 1 0 0
2 1 2 1 2 1 1 2 1 2 0 0
2 1 1 2 2 1 2 1 0 0 1 2
1 2 2 1 1 2 1 2 0 0 2 1
1 2 1 2 2 1 0 0 1 2 2 1
2 1 2 1 1 2 0 0 2 1 1 2
)";

// Representative list in frame order, entries as (x0, x1) over F_5.
inline const std::vector<std::pair<int, int>> kF5Reps = {
    {0, 1}, {0, 2}, {1, 0}, {2, 0}, {1, 2}, {2, 4},
    {1, 4}, {2, 3}, {1, 3}, {2, 1}, {1, 1}, {2, 2},
};

// Affine forms of 75*eta for S = {l_0, alpha l_0} and S' = {l_inf, l_0}:
// entry = constant + slope * rho.
inline const std::vector<int> kF5EtaConst = {15, 15, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0};
inline const std::vector<int> kF5EtaSlope = {-12, -12, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3};
inline const std::vector<int> kF5EtaPrimeConst = {10, 5, 10, 5, 0, 0, 5, -5, 0, 0, 5, -5};
inline const std::vector<int> kF5EtaPrimeSlope = {-7, -2, -7, -2, 3, 3, -2, 8, 3, 3, -2, 8};

inline const std::vector<int> kF5EtaCMinus = {4, 4, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1};
inline const std::vector<int> kF5OmegaCMinus = {40, 40, 25, 25, 40, 40, 40, 40, 40, 40, 40, 40};
inline const std::vector<int> kF5EtaDMinus = {3, 2, 3, 2, 1, 1, 2, 0, 1, 1, 2, 0};
inline const std::vector<int> kF5OmegaDMinus = {25, 40, 25, 40, 40, 40, 40, 40, 40, 40, 40, 40};
inline const std::vector<int> kF5EtaCPlus = {0, 0, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3};
inline const std::vector<int> kF5OmegaCPlus = {60, 60, 75, 75, 60, 60, 60, 60, 60, 60, 60, 60};
inline const std::vector<int> kF5EtaDPlus = {1, 2, 1, 2, 3, 3, 2, 4, 3, 3, 2, 4};
inline const std::vector<int> kF5OmegaDPlus = {75, 60, 75, 60, 60, 60, 60, 60, 60, 60, 60, 60};

// Symmetrized enumerators as (coefficient, e0, e1, e2) rows.
using SeTerm = std::array<long, 4>;
inline const std::vector<SeTerm> kF5SeCMinus = {{1, 18, 0, 0}, {4, 8, 5, 5}, {20, 2, 8, 8}};
inline const std::vector<SeTerm> kF5SeDMinus = {{1, 18, 0, 0}, {4, 5, 9, 4}, {16, 2, 8, 8}, {4, 5, 4, 9}};
inline const std::vector<SeTerm> kF5SeCPlus = {{1, 30, 0, 0}, {20, 6, 12, 12}, {4, 0, 15, 15}};
inline const std::vector<SeTerm> kF5SeDPlus = {{1, 30, 0, 0}, {4, 3, 16, 11}, {16, 6, 12, 12}, {4, 3, 11, 16}};

// Weight enumerators as (coefficient, exponent) rows.
using WweTerm = std::pair<long, long>;
inline const std::vector<WweTerm> kF5WweMinus = {{1, 0}, {4, 25}, {20, 40}};
inline const std::vector<WweTerm> kF5WwePlus = {{1, 0}, {20, 60}, {4, 75}};

// Dual enumerator prefixes through y^5.
inline const std::vector<WweTerm> kF5DualCMinus = {{1, 0}, {24, 2}, {296, 3}, {1900, 4}, {10760, 5}};
inline const std::vector<WweTerm> kF5DualDMinus = {{1, 0}, {20, 2}, {296, 3}, {1956, 4}, {10760, 5}};
inline const std::vector<WweTerm> kF5DualCPlus = {{1, 0}, {60, 2}, {1260, 3}, {17880, 4}, {182772, 5}};
inline const std::vector<WweTerm> kF5DualDPlus = {{1, 0}, {56, 2}, {1304, 3}, {17720, 4}, {182816, 5}};

inline constexpr long kF5DualCountCMinus = 24;
inline constexpr long kF5DualCountDMinus = 20;
inline constexpr long kF5DualCountCPlus = 60;
inline constexpr long kF5DualCountDPlus = 56;

// ---- F_9 = F_3[a]/(a^2 - a - 1), two-valued weights --------------------

// Element order: 0, 1, a, 1+a, 1+2a, 2, 2a, 2+2a, 2+a (0 then powers of a).
// Images under the two linear bijections to F_3^2, written as two digits.
inline const std::vector<std::pair<int, int>> kF9MapF = {
    {0, 0}, {1, 1}, {1, 0}, {2, 1}, {0, 1}, {2, 2}, {2, 0}, {1, 2}, {0, 2}};
inline const std::vector<std::pair<int, int>> kF9MapG = {
    {0, 0}, {0, 1}, {1, 2}, {1, 0}, {2, 2}, {0, 2}, {2, 1}, {2, 0}, {1, 1}};

// ---- F_25 = F_5[b]/(b^2 - b - 3), weight 3 on H, 2 on bH ---------------

inline const std::vector<WweTerm> kF25WweSmall = {{1, 0}, {24, 125}, {600, 150}};
inline const std::vector<WweTerm> kF25WweLarge = {{1, 0}, {600, 600}, {24, 625}};
inline const std::vector<WweTerm> kF25DualCSmall = {{1, 0}, {360, 4}, {1464, 5}, {114120, 6}};
inline const std::vector<WweTerm> kF25DualDSmall = {{1, 0}, {360, 4}, {864, 5}, {115920, 6}};
inline const std::vector<WweTerm> kF25DualCLarge = {{1, 0}, {6000, 4}, {15000, 5}, {7116000, 6}};
inline const std::vector<WweTerm> kF25DualDLarge = {{1, 0}, {6000, 4}, {14400, 5}, {7117800, 6}};

// ---- roots of (q-1) - 2(q+1)x + (q-1)x^2 for square q -------------------

struct T2Row {
    long q;
    long x_num, x_den;  // the root > 1; the other root is its reciprocal
};
inline const std::vector<T2Row> kT2Table = {{9, 2, 1}, {25, 3, 2}, {49, 4, 3}, {81, 5, 4}};

}  // namespace golden

struct CheckResult {
    std::string quantity;
    bool ok = false;
    std::string expected;
    std::string actual;
};

/// Regenerates every quantity of a named reference example and diffs it
/// against the embedded data.  Names: f5, f9, f25, t2table.
std::vector<CheckResult> run_reference_example(const std::string& name);

}  // namespace dualgap
