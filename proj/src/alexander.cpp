#include "surgelens/alexander.hpp"

#include <algorithm>

namespace surgelens {

namespace {

// prod over all variables of (t_i - 1)
LaurentPoly all_factors(int vars) {
    LaurentPoly r = LaurentPoly::constant(vars, 1);
    for (int i = 0; i < vars; ++i)
        r = r * (LaurentPoly::variable(vars, i) - LaurentPoly::constant(vars, 1));
    return r;
}

// t1 ... tl - 1
LaurentPoly product_monomial_minus_one(int vars) {
    Exponents e(vars, 1);
    return LaurentPoly::monomial(vars, e, 1) - LaurentPoly::constant(vars, 1);
}

// ((t^k - 1)/(t - 1))^2 in the first of `vars` variables, as a Laurent
// polynomial (valid for any k != 0)
LaurentPoly torus_quotient_sq(int vars, int k) {
    LaurentPoly num = LaurentPoly::variable(vars, 0, k) - LaurentPoly::constant(vars, 1);
    LaurentPoly den = LaurentPoly::variable(vars, 0) - LaurentPoly::constant(vars, 1);
    LaurentPoly q = exact_div(num, den);
    return q * q;
}

// f'(t1', ..., t_{q-1}', t1^k) mapped into (t1, t1', ..., t_{q-1}') order
LaurentPoly substitute_pattern(const LaurentPoly& f_prime, int q, int k) {
    LaurentPoly out(q);
    Exponents e(q);
    for (const auto& [ep, c] : f_prime.terms()) {
        e[0] = k * ep[static_cast<std::size_t>(q - 1)];
        for (int i = 1; i < q; ++i) e[static_cast<std::size_t>(i)] = ep[static_cast<std::size_t>(i - 1)];
        out.add_term(e, c);
    }
    return out;
}

}  // namespace

LaurentPoly milnor_alexander(int lambda) {
    if (lambda < 3) throw BadArity("milnor_alexander: lambda >= 3 required");
    if (lambda == 3) return all_factors(3);
    return LaurentPoly::zero(lambda);
}

LinkModel LinkModel::milnor(int lambda) {
    if (lambda < 3) throw BadArity("milnor: lambda >= 3 required");
    LinkModel m;
    m.family_ = LinkFamily::Milnor;
    m.components_ = lambda;
    m.f_ = (lambda == 3) ? LaurentPoly::constant(3, 1) : LaurentPoly::zero(lambda);
    return m;
}

LinkModel LinkModel::twisted_whitehead(long n) {
    if (n == 0) throw BadArity("twisted_whitehead: n != 0 required");
    LinkModel m;
    m.family_ = LinkFamily::TwistedWhitehead;
    m.components_ = 2;
    m.twists_ = n;
    m.f_ = LaurentPoly::constant(2, n);
    return m;
}

LinkModel LinkModel::brunnian_type(int lambda, const LaurentPoly& f) {
    if (lambda < 2) throw BadArity("brunnian_type: lambda >= 2 required");
    if (f.var_count() != lambda)
        throw std::invalid_argument("brunnian_type: f must have one variable per component");
    LinkModel m;
    m.family_ = LinkFamily::BrunnianType;
    m.components_ = lambda;
    m.f_ = f.is_zero() ? f : duality_normalize(f);  // throws NotSymmetric when invalid
    if (!m.f_.is_zero() && !is_self_inverse(m.f_))
        throw NotSymmetric("brunnian_type: f has no symmetric centering");
    return m;
}

LinkModel LinkModel::satellite2(int k, const LinkModel& pattern) {
    const int q = pattern.components();
    if (q < 2) throw BadArity("satellite2: pattern needs >= 2 components");
    LinkModel m;
    m.family_ = LinkFamily::SatelliteTwoComp;
    m.components_ = q;
    m.satellite_k_ = k;
    m.pattern_ = std::make_shared<LinkModel>(pattern);
    if (k == 0) {
        m.f_ = LaurentPoly::zero(q);
    } else {
        m.f_ = torus_quotient_sq(q, k) * substitute_pattern(pattern.f_part(), q, k);
        if (!m.f_.is_zero()) m.f_ = duality_normalize(m.f_);
    }
    return m;
}

const LinkModel& LinkModel::pattern() const {
    if (!pattern_) throw std::logic_error("not a satellite model");
    return *pattern_;
}

LaurentPoly LinkModel::f_index(int k) const {
    if (k < 1 || k > components_) throw std::invalid_argument("component index out of range");
    std::vector<VarImage> im(static_cast<std::size_t>(components_), VarImage::one());
    im[static_cast<std::size_t>(k - 1)] = VarImage::u(1);
    return specialize(f_, im);
}

LaurentPoly LinkModel::alexander() const {
    return all_factors(components_) * f_;
}

FGParts normalize_fg(const LaurentPoly& delta_bar, int lambda) {
    if (lambda < 2) throw std::invalid_argument("normalize_fg: lambda >= 2 required");
    if (delta_bar.var_count() != lambda + 1)
        throw std::invalid_argument("normalize_fg: delta_bar needs lambda + 1 variables");

    // t := 1 isolates the f part: DeltaBar(t1,...,tl,1) = (t1..tl - 1) prod(ti-1) f
    LaurentPoly at_one(lambda);
    {
        Exponents e(lambda);
        for (const auto& [ep, c] : delta_bar.terms()) {
            std::copy(ep.begin(), ep.begin() + lambda, e.begin());
            at_one.add_term(e, c);
        }
    }
    LaurentPoly divisor = product_monomial_minus_one(lambda) * all_factors(lambda);
    LaurentPoly f(lambda);
    if (!at_one.is_zero()) {
        try {
            f = exact_div(at_one, divisor);
        } catch (const NotDivisible&) {
            throw NotDecomposable("normalize_fg: f part is not exactly divisible");
        }
    }

    // widen f's factor back to lambda + 1 variables and split off g
    LaurentPoly f_term(lambda + 1);
    {
        Exponents e(lambda + 1, 0);
        LaurentPoly wide_f(lambda + 1);
        for (const auto& [ep, c] : f.terms()) {
            std::copy(ep.begin(), ep.end(), e.begin());
            e[static_cast<std::size_t>(lambda)] = 0;
            wide_f.add_term(e, c);
        }
        // (t1..tl - 1), t excluded
        Exponents pm(lambda + 1, 1);
        pm[static_cast<std::size_t>(lambda)] = 0;
        LaurentPoly wide_div =
            LaurentPoly::monomial(lambda + 1, pm, 1) - LaurentPoly::constant(lambda + 1, 1);
        LaurentPoly factors = LaurentPoly::constant(lambda + 1, 1);
        for (int i = 0; i < lambda; ++i)
            factors = factors * (LaurentPoly::variable(lambda + 1, i) - LaurentPoly::constant(lambda + 1, 1));
        f_term = wide_div * factors * wide_f;
    }
    LaurentPoly rem = delta_bar - f_term;
    LaurentPoly t_minus_one =
        LaurentPoly::variable(lambda + 1, lambda) - LaurentPoly::constant(lambda + 1, 1);
    LaurentPoly g(lambda + 1);
    if (!rem.is_zero()) {
        try {
            g = exact_div(rem, t_minus_one);
        } catch (const NotDivisible&) {
            throw NotDecomposable("normalize_fg: g part is not exactly divisible");
        }
    }

    // normalization: g(1, ..., 1, t) must be (t-1)^{lambda-2}
    std::vector<VarImage> ones(static_cast<std::size_t>(lambda + 1), VarImage::one());
    ones[static_cast<std::size_t>(lambda)] = VarImage::u(1);
    LaurentPoly g_ones = specialize(g, ones);
    LaurentPoly target =
        (LaurentPoly::variable(1, 0) - LaurentPoly::constant(1, 1)).pow(static_cast<unsigned>(lambda - 2));
    if (g_ones == target) {
        // already normalized
    } else if (g_ones == -target) {
        f = -f;
        g = -g;
    } else {
        throw NotDecomposable("normalize_fg: g(1,...,1,t) is not +-(t-1)^{lambda-2}");
    }

    FGParts out;
    out.f = f;
    out.g = g;
    out.per_index_f.reserve(static_cast<std::size_t>(lambda));
    for (int k = 1; k <= lambda; ++k) {
        std::vector<VarImage> im(static_cast<std::size_t>(lambda), VarImage::one());
        im[static_cast<std::size_t>(k - 1)] = VarImage::u(1);
        out.per_index_f.push_back(specialize(f, im));
    }
    return out;
}

LaurentPoly hatK_alexander(const LaurentPoly& f_i, const std::vector<long>& q_others, int lambda) {
    if (lambda < 2) throw BadArity("hatK_alexander: lambda >= 2 required");
    if (static_cast<int>(q_others.size()) != lambda - 1)
        throw std::invalid_argument("hatK_alexander: need lambda - 1 surgery integers");
    if (f_i.var_count() > 1)
        throw std::invalid_argument("hatK_alexander: f_i must be one-variable");
    for (long q : q_others)
        if (q == 0) throw std::invalid_argument("hatK_alexander: zero surgery integer");

    mpz_class prod_q = 1;
    for (long q : q_others) prod_q *= q;
    if ((lambda - 1) % 2 != 0) prod_q = -prod_q;

    LaurentPoly f1 = f_i;
    if (f1.var_count() == 0) {
        LaurentPoly lifted(1);
        if (!f1.is_zero()) lifted = LaurentPoly::constant(1, f1.constant_value());
        f1 = lifted;
    }
    LaurentPoly t = LaurentPoly::variable(1, 0);
    LaurentPoly tm1 = t - LaurentPoly::constant(1, 1);
    return t + LaurentPoly::constant(1, prod_q) * f1 * tm1 * tm1;
}

LaurentPoly satellite_alexander(int k, const LaurentPoly& f_prime, int q, bool outer_p_ge3) {
    if (q < 2) throw BadArity("satellite_alexander: q >= 2 required");
    if (f_prime.var_count() != q)
        throw std::invalid_argument("satellite_alexander: f' needs q variables");
    if (outer_p_ge3 || k == 0) return LaurentPoly::zero(q);

    // ((t1^k-1)^2/(t1-1)) * (t1'-1)...(t_{q-1}'-1) * f'(t', t1^k)
    LaurentPoly num = LaurentPoly::variable(q, 0, k) - LaurentPoly::constant(q, 1);
    LaurentPoly den = LaurentPoly::variable(q, 0) - LaurentPoly::constant(q, 1);
    LaurentPoly head = exact_div(num * num, den);
    LaurentPoly primes = LaurentPoly::constant(q, 1);
    for (int i = 1; i < q; ++i)
        primes = primes * (LaurentPoly::variable(q, i) - LaurentPoly::constant(q, 1));
    return head * primes * substitute_pattern(f_prime, q, k);
}

}  // namespace surgelens
