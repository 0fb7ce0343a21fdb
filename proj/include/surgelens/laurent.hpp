#pragma once

// Sparse multivariate Laurent polynomials with arbitrary-precision integer
// coefficients, plus the Alexander-polynomial identities built on them
// (Torres specialization, duality centering, exact division).

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "surgelens/errors.hpp"

namespace surgelens {

// Exponent vector of a monomial; one entry per variable, negative allowed.
using Exponents = std::vector<int>;

class LaurentPoly {
public:
    using TermMap = std::map<Exponents, mpz_class>;

    LaurentPoly() = default;
    explicit LaurentPoly(int var_count) : vars_(var_count) {}

    static LaurentPoly zero(int var_count) { return LaurentPoly(var_count); }
    static LaurentPoly constant(int var_count, const mpz_class& c);
    static LaurentPoly monomial(int var_count, Exponents e, const mpz_class& c);
    // t_index^power (index 0-based)
    static LaurentPoly variable(int var_count, int index, int power = 1);

    int var_count() const { return vars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Value of a constant polynomial (0 for the zero polynomial).
    mpz_class constant_value() const;
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    // Total substitution t_i := 1 for every variable.
    mpz_class eval_all_ones() const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly operator-() const;
    LaurentPoly& operator*=(const LaurentPoly& o) { *this = *this * o; return *this; }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }

    LaurentPoly pow(unsigned e) const;

    // Multiply by the monomial t^shift (componentwise exponent shift).
    LaurentPoly shifted(const Exponents& shift) const;
    // t_i := t_i^{-1} for every variable.
    LaurentPoly inverted() const;

    // Per-variable minimum/maximum exponent over the support. Empty for zero.
    std::optional<Exponents> min_exponents() const;
    std::optional<Exponents> max_exponents() const;

    void add_term(const Exponents& e, const mpz_class& c);

private:
    int vars_ = 0;
    TermMap terms_;  // no zero coefficients stored
};

// --- spec operations -------------------------------------------------------

// Per-variable image under specialize(): either 1 or u^power of a fresh
// single variable shared by all non-trivial images.
struct VarImage {
    bool to_one = true;
    long power = 0;
    static VarImage one() { return {true, 0}; }
    static VarImage u(long e) { return {false, e}; }
};

// Substitute each variable by 1 or by u^e; the result has one variable when
// any image is a u-power and zero variables otherwise.
LaurentPoly specialize(const LaurentPoly& p, const std::vector<VarImage>& images);

// Exact quotient num/den in the Laurent ring. Throws NotDivisible.
LaurentPoly exact_div(const LaurentPoly& num, const LaurentPoly& den);

// Substitute 1 for the last variable of a (lambda+1)-variable polynomial and
// drop it. linking_numbers is the data the caller compares against; only its
// length (= lambda) is validated here.
LaurentPoly torres_specialize(const LaurentPoly& delta, const std::vector<long>& linking_numbers);

// (t1^{k1} ... tl^{kl} - 1) for lambda >= 2, (t^{k}-1)/(t-1) for lambda = 1;
// the factor the Torres formula pairs with the sublink polynomial.
LaurentPoly torres_rhs_factor(const std::vector<long>& linking_numbers);

// Associate representative centered so that P(t) = P(t^(-1)) when such a
// centering exists; sign fixed so the lexicographically first term is
// positive. Throws NotSymmetric when no unit multiple satisfies the duality
// relation.
LaurentPoly duality_normalize(const LaurentPoly& p);

// True when p equals p with all variables inverted (already centered).
bool is_self_inverse(const LaurentPoly& p);

// Associate test in the Laurent ring: a == sign * t^shift * b.
struct MonomialUnit {
    int sign = 1;
    Exponents shift;
};
std::optional<MonomialUnit> laurent_associate_eq(const LaurentPoly& a, const LaurentPoly& b);

// --- 1-variable helpers -----------------------------------------------------

// Dense coefficients of a 1-variable polynomial: (min_exp, coeffs).
std::pair<int, std::vector<mpz_class>> dense_coeffs_1var(const LaurentPoly& p);

// Root sum of the monic normalization: -c_{d-1}/c_d over the support
// (invariant under monomial shifts). p must be nonzero with one variable.
mpq_class trace_of(const LaurentPoly& p);

// --- text form --------------------------------------------------------------

// Terms joined by +/-, monomials as t1^a*t2^b with ^1 elided; deterministic
// (lexicographically descending exponent order). Default names: "t" for one
// variable, "t1".."tn" otherwise.
std::string to_string(const LaurentPoly& p, const std::vector<std::string>& names = {});

// Parse the same grammar with an explicit variable binding.
LaurentPoly parse_poly(const std::string& text, const std::vector<std::string>& names);

// Parse with automatic variable collection; distinct names are bound in
// natural order (alphabetic prefix, then numeric suffix: t < t1 < t2 < u).
LaurentPoly parse_poly(const std::string& text);

std::vector<std::string> default_var_names(int var_count);

}  // namespace surgelens
