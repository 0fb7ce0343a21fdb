#pragma once

// Exact arithmetic in the finite cyclic group ring Z[u]/(u^p - 1), its
// quotient Z[u]/(1 + u + ... + u^{p-1}), and cyclotomic fields Q(zeta_d);
// Galois norms and associate equivalence (equality up to +-(group element)).

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "surgelens/errors.hpp"
#include "surgelens/laurent.hpp"

namespace surgelens {

// Units of Z/d (for d = 1 the single class 0).
const std::vector<int>& units_mod(int d);
int euler_phi(int d);

// The d-th cyclotomic polynomial, monic of degree phi(d); d >= 1.
LaurentPoly cyclotomic_poly(int d);
// Dense coefficient view (index = exponent); cached, safe for concurrent use.
std::vector<mpz_class> cyclotomic_coeffs(int d);

// Resultant of two integer polynomials (dense, index = exponent), computed by
// the subresultant PRS. res(A, B) = lc(A)^{deg B} * prod_{A(a)=0} B(a).
mpz_class resultant(std::vector<mpz_class> a, std::vector<mpz_class> b);

// --- group ring -------------------------------------------------------------

class GroupRingElem {
public:
    GroupRingElem(int order, bool reduced);

    // Coefficients indexed by exponent; folded modulo u^order - 1 and, in
    // reduced mode, modulo 1 + u + ... + u^{order-1} as well.
    static GroupRingElem from_coeffs(int order, bool reduced, const std::vector<mpz_class>& raw);
    static GroupRingElem from_laurent(const LaurentPoly& one_var, int order, bool reduced);
    static GroupRingElem constant(int order, bool reduced, const mpz_class& c);
    // sign * u^exp
    static GroupRingElem unit(int order, bool reduced, long exp, int sign = 1);

    int order() const { return order_; }
    bool reduced_mode() const { return reduced_; }
    // length order (full) / order-1 (reduced canonical remainder)
    const std::vector<mpz_class>& coeffs() const { return c_; }
    bool is_zero() const;

    GroupRingElem operator+(const GroupRingElem& o) const;
    GroupRingElem operator-(const GroupRingElem& o) const;
    GroupRingElem operator-() const;
    GroupRingElem operator*(const GroupRingElem& o) const;
    GroupRingElem mul_unit(long exp, int sign = 1) const;
    bool operator==(const GroupRingElem& o) const = default;

    GroupRingElem to_reduced() const;
    LaurentPoly to_laurent() const;

private:
    int order_;
    bool reduced_;
    std::vector<mpz_class> c_;
};

// --- cyclotomic numbers -----------------------------------------------------

// Element of Q(zeta_d) as a cross-multiplied pair of Z[zeta_d] vectors over
// the basis 1, zeta, ..., zeta^{phi(d)-1}; the denominator is never zero and
// all arithmetic stays in exact integers.
class CycNum {
public:
    explicit CycNum(int order);  // zero
    static CycNum from_integer(int order, const mpz_class& v);
    static CycNum from_num_den(int order, std::vector<mpz_class> num, std::vector<mpz_class> den);
    // zeta^a - 1 (a != 0 mod d required for a nonzero value; no check here)
    static CycNum zeta_pow_minus_one(int order, long a);
    static CycNum zeta_pow(int order, long a);
    // evaluate a 1-variable Laurent polynomial at zeta_d
    static CycNum eval_at_zeta(const LaurentPoly& p, int order);

    int order() const { return order_; }
    const std::vector<mpz_class>& num() const { return num_; }
    const std::vector<mpz_class>& den() const { return den_; }
    bool is_zero() const;

    CycNum operator+(const CycNum& o) const;
    CycNum operator-(const CycNum& o) const;
    CycNum operator-() const;
    CycNum operator*(const CycNum& o) const;
    CycNum inverse() const;  // throws std::domain_error on zero
    CycNum mul_zeta_pow(long l) const;
    // Galois substitution zeta -> zeta^a; a must be coprime to the order.
    CycNum conjugate(long a) const;

    // exact equality (cross-multiplied)
    bool equals(const CycNum& o) const;

private:
    int order_;
    std::vector<mpz_class> num_, den_;
};

// Ring homomorphism u -> zeta_d on Z[u]/(u^p-1) or its reduced quotient;
// requires d >= 2 and d | p. Throws BadDivisor.
CycNum project_psi(const GroupRingElem& x, int d);

// Product of all Galois conjugates; exact rational. d_norm(0) = 0.
mpq_class d_norm(const CycNum& x);

// --- associates -------------------------------------------------------------

struct AssociateWitness {
    int sign = 1;  // +-1
    int shift = 0; // power of u (resp. zeta)
};

// x == sign * u^shift * y in the common ring.
std::optional<AssociateWitness> associate_eq(const GroupRingElem& x, const GroupRingElem& y);
// x == sign * zeta^shift * y in Q(zeta_d).
std::optional<AssociateWitness> associate_eq(const CycNum& x, const CycNum& y);

// Deterministic class representative: the lexicographically greatest
// coefficient vector among the 2p associates +-u^l * x.
GroupRingElem canonical_rep(const GroupRingElem& x);

// Associate class of a group-ring element, keyed by its canonical
// representative.
struct AssociateClass {
    GroupRingElem representative;
    static AssociateClass of(const GroupRingElem& x) { return {canonical_rep(x)}; }
    bool operator==(const AssociateClass& o) const = default;
};

}  // namespace surgelens
