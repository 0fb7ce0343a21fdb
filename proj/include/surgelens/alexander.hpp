#pragma once

// Link models for the Brunnian-type families and their Alexander-polynomial
// constructions: the Milnor family, the f/g decomposition with its
// normalization, the surgered-knot polynomial, and two-component satellites.

#include <memory>
#include <vector>

#include "surgelens/laurent.hpp"

namespace surgelens {

enum class LinkFamily { Milnor, TwistedWhitehead, BrunnianType, SatelliteTwoComp };

// A link is a symbolic family tag plus the polynomial data the torsion and
// obstruction machinery consumes; no diagram combinatorics.
class LinkModel {
public:
    // lambda >= 3; f = 1 for lambda = 3 and 0 for lambda >= 4
    static LinkModel milnor(int lambda);
    // n != 0; two components, f stored as the constant n
    static LinkModel twisted_whitehead(long n);
    // lambda >= 2; f must satisfy f(t) = f(t^-1) after duality centering
    static LinkModel brunnian_type(int lambda, const LaurentPoly& f);
    // satellite with two-component outer link of linking number k and a
    // Brunnian-type pattern; the result has pattern.components() components
    static LinkModel satellite2(int k, const LinkModel& pattern);

    LinkFamily family() const { return family_; }
    int components() const { return components_; }
    long twists() const { return twists_; }
    int satellite_linking() const { return satellite_k_; }
    const LinkModel& pattern() const;

    // normalized f part in components() variables
    const LaurentPoly& f_part() const { return f_; }
    // f_k(t) = f(1, ..., t, ..., 1), one variable; k is 1-based
    LaurentPoly f_index(int k) const;
    // multivariable Alexander polynomial of the model
    LaurentPoly alexander() const;

private:
    LinkModel() = default;
    LinkFamily family_ = LinkFamily::Milnor;
    int components_ = 0;
    LaurentPoly f_;
    long twists_ = 0;
    int satellite_k_ = 0;
    std::shared_ptr<LinkModel> pattern_;
};

// Delta of the lambda-component Milnor link: (t1-1)(t2-1)(t3-1) for
// lambda = 3 and 0 for lambda >= 4. Throws BadArity below 3.
LaurentPoly milnor_alexander(int lambda);

struct FGParts {
    LaurentPoly f;                        // lambda variables
    LaurentPoly g;                        // lambda + 1 variables
    std::vector<LaurentPoly> per_index_f; // f_i(t), one variable each
};

// Split DeltaBar = (t1...tl - 1) prod(ti - 1) f + (t - 1) g with the sign
// fixed by g(1,...,1,t) = (t-1)^{lambda-2}. The last variable of delta_bar
// is the added component. Throws NotDecomposable.
FGParts normalize_fg(const LaurentPoly& delta_bar, int lambda);

// Alexander polynomial of the knot left after 1/q_j surgery on the other
// components: t + (-1)^{lambda-1} (prod q_j) f_i(t) (t-1)^2, returned raw
// (no duality centering) so the sign information stays intact.
LaurentPoly hatK_alexander(const LaurentPoly& f_i, const std::vector<long>& q_others, int lambda);

// Alexander polynomial of the satellite with 2-component outer link of
// linking number k and a q-component Brunnian-type pattern with part
// f_prime: ((t1^k-1)^2/(t1-1)) (t1'-1)...(t_{q-1}'-1) f'(t', t1^k), or 0
// for k = 0. outer_p_ge3 selects the (>= 3)-component outer case, which is
// identically zero.
LaurentPoly satellite_alexander(int k, const LaurentPoly& f_prime, int q, bool outer_p_ge3 = false);

}  // namespace surgelens
