#pragma once

// Closed-form classifiers for lens surgeries along the Milnor family and
// twisted Whitehead links, plus the canonical form of lens spaces under
// homeomorphism. Conventions: L(1, q) = S^3, L(0, +-1) = S^1 x S^2.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "surgelens/slopes.hpp"

namespace surgelens {

struct LensSpace {
    long long p = 1;
    long long q = 0;
    bool operator==(const LensSpace& o) const = default;
    std::string str() const { return "L(" + std::to_string(p) + "," + std::to_string(q) + ")"; }
};

// Canonical representative under q' == +-q^{+-1} (mod p): p >= 0 and, for
// p >= 2, 1 <= q <= p/2. Requires gcd(p, q) = 1.
LensSpace lens_canonical(long long p, long long q);
bool lens_equivalent(const LensSpace& a, const LensSpace& b);

enum class Outcome { Lens, NotLens, NotCyclicH1, OutOfTableRange };

struct MatchedCase {
    int case_id = 0;              // 1, 2 or 3
    std::vector<int> permutation; // slot i holds the original index used as slot i
    int epsilon = 1;
};

struct ClassificationVerdict {
    Outcome outcome = Outcome::NotLens;
    std::optional<LensSpace> lens;            // raw case output
    std::optional<LensSpace> lens_canonical;  // canonical representative
    std::optional<MatchedCase> matched;
    std::string source = "paper_theorem";
};

// Finite slope surgeries along the 3-component Milnor link (the Borromean
// rings). Tries the three slope patterns over all permutations and both
// signs; the lens output follows the matched case formula.
ClassificationVerdict classify_milnor3(const std::array<SurgerySlope, 3>& slopes);

// Twisted Whitehead link W_n: |n| >= 2 never yields a lens space; n = +-1
// follows the same three case formulas over the two slope orderings.
ClassificationVerdict classify_twisted_whitehead(long long n, const std::array<SurgerySlope, 2>& slopes);

// Milnor family dispatcher: lambda = 3 delegates, lambda >= 4 is never a
// lens space (catalog statement; torsion-side evidence lives in obstruct).
ClassificationVerdict classify_milnor(int lambda, const std::vector<SurgerySlope>& slopes);

}  // namespace surgelens
