#pragma once

// First homology of surgered manifolds, the isomorphism onto the cyclic
// quotient, and exact torsion values: lens spaces and Brunnian-type link
// surgeries, stored as cross-multiplied pairs over Z[zeta_d].

#include <optional>

#include "surgelens/catalog.hpp"
#include "surgelens/cyclo.hpp"
#include "surgelens/slopes.hpp"

namespace surgelens {

// Invariant factors of the first homology, each dividing the next;
// 0 encodes an infinite cyclic factor. Trivial factors are dropped.
struct HomologyDecomp {
    std::vector<long long> invariant_factors;

    bool trivial() const { return invariant_factors.empty(); }
    // cyclic includes the trivial group, Z/p, and Z
    bool cyclic() const { return invariant_factors.size() <= 1; }
    bool cyclic_finite_ge2() const {
        return invariant_factors.size() == 1 && invariant_factors[0] >= 2;
    }
    bool operator==(const HomologyDecomp& o) const = default;
};

HomologyDecomp h1_surgery(const SurgerySpec& spec);

// Exponent data of the isomorphism H_1 of the drilled manifold -> Z:
// t_i -> T^{q_i p / p_i}, the added meridian t -> T^{-p}, attached cores
// [l_i'] -> T^{p / p_i}. Requires cyclic H_1 of finite order p >= 2.
struct RhoWeights {
    long long order = 0;  // p
    std::vector<long long> t_weights;
    std::vector<long long> core_weights;
    long long pattern_weight = 0;  // -p
};

RhoWeights rho_weights(const SurgerySpec& spec);  // throws NotCyclic

struct TorsionCertificate {
    int d = 0;
    CycNum value;
};

// tau(L(p,q)) at zeta_d: 1 / ((zeta_d - 1)(zeta_d^{qbar} - 1)), qbar the
// inverse of q mod p. Requires d | p, d >= 2, gcd(q, p) = 1.
TorsionCertificate torsion_lens(long long p, long long q, int d);

// Torsion of the surgered manifold along a Brunnian-type link at a divisor
// d >= 2 of p_k (k 1-based):
//   { f_k(z) (prod_{j!=k} q_j) (z-1)^2 + (-1)^{lambda-1} (prod_{j!=k} p_j) z }
//     / ((z-1)(z^{qbar_k}-1)).
TorsionCertificate torsion_brunnian_surgery(const SurgerySpec& spec, int k, int d);

// The bracket factor of the torsion value, lifted to the reduced group ring
// Z[u]/(1+u+...+u^{|p_k|-1}).
GroupRingElem torsion_bracket(const SurgerySpec& spec, int k);

struct DivisorTest {
    int d = 0;
    bool pass = false;
    // exponents (a, b) of the matching lens-form denominator and the unit
    // witnessing the associate equality
    std::optional<std::pair<int, int>> ab;
    std::optional<AssociateWitness> witness;
};

struct LensTorsionResult {
    std::vector<DivisorTest> per_divisor;
    // divisors of the total H_1 order not dividing p_k: outside the formula's
    // reach, reported rather than tested
    std::vector<int> untested_divisors;
    bool aggregate = true;  // conjunction over tested divisors

    const DivisorTest* failing() const {
        for (const auto& t : per_divisor)
            if (!t.pass) return &t;
        return nullptr;
    }
};

// Untargeted: per divisor d of |p_k|, decide whether the torsion matches
// 1/((z^a-1)(z^b-1)) for some a, b coprime to p_k. Targeted with L(P,Q):
// decide whether it matches 1/((z^s-1)(z^{s Qbar}-1)) for some s coprime
// to P. Requires lambda >= 3, cyclic H_1, |p_k| >= 2.
LensTorsionResult lens_torsion_test(const SurgerySpec& spec, int k,
                                    const std::optional<LensSpace>& target);

// Divisors >= 2 of |n| in ascending order.
std::vector<int> divisors_ge2(long long n);

long long mod_inverse(long long a, long long m);  // m >= 1, gcd(a, m) = 1

}  // namespace surgelens
