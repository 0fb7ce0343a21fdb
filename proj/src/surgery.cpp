#include "surgelens/surgery.hpp"

#include <algorithm>
#include <numeric>

namespace surgelens {

// --- slopes ------------------------------------------------------------------

SurgerySlope SurgerySlope::make(long long p, long long q) {
    if (q == 0) throw std::invalid_argument("slope: q must be nonzero (finite slope)");
    if (std::gcd(p, q) != 1) throw std::invalid_argument("slope: gcd(p, q) must be 1");
    if (q < 0) { p = -p; q = -q; }
    return SurgerySlope{p, q};
}

SurgerySlope parse_slope(const std::string& text) {
    auto pos = text.find('/');
    try {
        if (pos == std::string::npos) {
            long long p = std::stoll(text);
            return SurgerySlope::make(p, 1);
        }
        long long p = std::stoll(text.substr(0, pos));
        long long q = std::stoll(text.substr(pos + 1));
        return SurgerySlope::make(p, q);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("slope parse: expected p/q, got '" + text + "'");
    } catch (const std::out_of_range&) {
        throw std::invalid_argument("slope parse: value out of range in '" + text + "'");
    }
}

std::vector<SurgerySlope> parse_slopes(const std::string& s) {
    std::vector<SurgerySlope> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t comma = s.find(',', start);
        std::string piece = s.substr(start, comma == std::string::npos ? std::string::npos
                                                                       : comma - start);
        if (!piece.empty()) out.push_back(parse_slope(piece));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

SurgerySpec::SurgerySpec(LinkModel l, std::vector<SurgerySlope> s)
    : link(std::move(l)), slopes(std::move(s)) {
    if (static_cast<int>(slopes.size()) != link.components())
        throw std::invalid_argument("surgery spec: one slope per component required");
}

// --- homology ----------------------------------------------------------------

HomologyDecomp h1_surgery(const SurgerySpec& spec) {
    // H_1 = direct sum of Z/p_i for algebraically split links
    std::vector<long long> vals;
    for (const auto& s : spec.slopes) vals.push_back(std::llabs(s.p));
    // Smith normalization of a diagonal matrix: repeatedly replace pairs by
    // (gcd, lcm) until divisibility holds along the chain
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < vals.size(); ++i) {
            for (std::size_t j = i + 1; j < vals.size(); ++j) {
                long long a = vals[i], b = vals[j];
                if (a == 0 && b == 0) continue;
                long long g = std::gcd(a, b);
                if (g == 0) continue;
                long long l = (a == 0 || b == 0) ? 0 : (a / g) * b;
                if (g != a || l != b) {
                    vals[i] = g;
                    vals[j] = l;
                    changed = true;
                }
            }
        }
    }
    std::sort(vals.begin(), vals.end(), [](long long a, long long b) {
        if (a == 0) return false;  // infinite factors last
        if (b == 0) return true;
        return a < b;
    });
    HomologyDecomp h;
    for (long long v : vals)
        if (v != 1) h.invariant_factors.push_back(v);
    return h;
}

long long mod_inverse(long long a, long long m) {
    if (m < 1) throw std::invalid_argument("mod_inverse: modulus must be positive");
    long long r0 = m, r1 = ((a % m) + m) % m;
    long long s0 = 0, s1 = 1;
    while (r1 != 0) {
        long long q = r0 / r1;
        r0 -= q * r1;
        std::swap(r0, r1);
        s0 -= q * s1;
        std::swap(s0, s1);
    }
    if (r0 != 1) throw std::invalid_argument("mod_inverse: not invertible");
    return ((s0 % m) + m) % m;
}

std::vector<int> divisors_ge2(long long n) {
    n = std::llabs(n);
    std::vector<int> out;
    for (long long d = 2; d <= n; ++d)
        if (n % d == 0) out.push_back(static_cast<int>(d));
    return out;
}

RhoWeights rho_weights(const SurgerySpec& spec) {
    const auto& slopes = spec.slopes;
    const int n = static_cast<int>(slopes.size());
    long long p = 1;
    for (const auto& s : slopes) {
        if (s.p == 0) throw NotCyclic("rho_weights: zero surgery coefficient");
        p *= std::llabs(s.p);
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::gcd(slopes[i].p, slopes[j].p) != 1)
                throw NotCyclic("rho_weights: surgery coefficients are not pairwise coprime");
    if (p < 2) throw NotCyclic("rho_weights: homology order below 2");

    RhoWeights w;
    w.order = p;
    w.pattern_weight = -p;
    for (const auto& s : slopes) {
        long long over = p / s.p;  // exact; sign follows p_i
        w.t_weights.push_back(s.q * over);
        w.core_weights.push_back(over);
    }
    return w;
}

// --- torsion -----------------------------------------------------------------

TorsionCertificate torsion_lens(long long p, long long q, int d) {
    if (p < 2) throw std::invalid_argument("torsion_lens: p >= 2 required");
    if (std::gcd(p, q) != 1) throw std::invalid_argument("torsion_lens: gcd(p, q) = 1 required");
    if (d < 2 || p % d != 0) throw BadDivisor("torsion_lens: d must divide p, d >= 2");
    long long qbar = mod_inverse(q, p);
    CycNum den = CycNum::zeta_pow_minus_one(d, 1) *
                 CycNum::zeta_pow_minus_one(d, qbar % d);
    return TorsionCertificate{d, den.inverse()};
}

namespace {

struct BracketData {
    LaurentPoly f_k;     // one variable
    mpz_class prod_q;    // prod_{j != k} q_j
    mpz_class prod_p;    // prod_{j != k} p_j
    int lambda = 0;
    long long pk = 0;
    long long qk = 0;
};

BracketData bracket_data(const SurgerySpec& spec, int k) {
    const int lambda = spec.components();
    if (lambda < 3) throw BadArity("torsion: lambda >= 3 required");
    if (k < 1 || k > lambda) throw std::invalid_argument("torsion: component index out of range");
    rho_weights(spec);  // validates cyclic H_1 of order >= 2
    BracketData b;
    b.lambda = lambda;
    b.pk = spec.slopes[static_cast<std::size_t>(k - 1)].p;
    b.qk = spec.slopes[static_cast<std::size_t>(k - 1)].q;
    b.f_k = spec.link.f_index(k);
    b.prod_q = 1;
    b.prod_p = 1;
    for (int j = 1; j <= lambda; ++j) {
        if (j == k) continue;
        b.prod_q *= spec.slopes[static_cast<std::size_t>(j - 1)].q;
        b.prod_p *= spec.slopes[static_cast<std::size_t>(j - 1)].p;
    }
    return b;
}

// f_k(z) Q (z-1)^2 + (-1)^{lambda-1} P z as a 1-variable Laurent polynomial
LaurentPoly bracket_poly(const BracketData& b) {
    LaurentPoly t = LaurentPoly::variable(1, 0);
    LaurentPoly tm1 = t - LaurentPoly::constant(1, 1);
    LaurentPoly f1 = b.f_k;
    if (f1.var_count() == 0)
        f1 = f1.is_zero() ? LaurentPoly::zero(1) : LaurentPoly::constant(1, f1.constant_value());
    mpz_class sign_p = (b.lambda % 2 == 0) ? -b.prod_p : b.prod_p;  // (-1)^{lambda-1}
    return f1 * LaurentPoly::constant(1, b.prod_q) * tm1 * tm1 +
           LaurentPoly::constant(1, sign_p) * t;
}

}  // namespace

GroupRingElem torsion_bracket(const SurgerySpec& spec, int k) {
    BracketData b = bracket_data(spec, k);
    if (std::llabs(b.pk) < 2)
        throw BadDivisor("torsion_bracket: |p_k| >= 2 required");
    return GroupRingElem::from_laurent(bracket_poly(b), static_cast<int>(std::llabs(b.pk)), true);
}

TorsionCertificate torsion_brunnian_surgery(const SurgerySpec& spec, int k, int d) {
    BracketData b = bracket_data(spec, k);
    long long apk = std::llabs(b.pk);
    if (d < 2 || apk % d != 0)
        throw BadDivisor("torsion_brunnian_surgery: d must divide p_k, d >= 2");
    long long qbar = mod_inverse(b.qk, apk);
    CycNum num = CycNum::eval_at_zeta(bracket_poly(b), d);
    CycNum den = CycNum::zeta_pow_minus_one(d, 1) *
                 CycNum::zeta_pow_minus_one(d, qbar % d);
    return TorsionCertificate{d, num * den.inverse()};
}

LensTorsionResult lens_torsion_test(const SurgerySpec& spec, int k,
                                    const std::optional<LensSpace>& target) {
    BracketData b = bracket_data(spec, k);
    const long long apk = std::llabs(b.pk);
    if (apk < 2) throw BadDivisor("lens_torsion_test: |p_k| >= 2 required");
    if (apk > 500) throw std::invalid_argument("lens_torsion_test: |p_k| > 500 not supported");

    long long total = 1;
    for (const auto& s : spec.slopes) total *= std::llabs(s.p);

    LensTorsionResult out;
    for (int d : divisors_ge2(total))
        if (apk % d != 0) out.untested_divisors.push_back(d);

    for (int d : divisors_ge2(apk)) {
        DivisorTest test;
        test.d = d;
        CycNum tau = torsion_brunnian_surgery(spec, k, d).value;

        // cheap norm prefilter: a lens-form value forces |N_d(bracket)| = 1
        CycNum bracket = CycNum::eval_at_zeta(bracket_poly(b), d);
        mpq_class nb = d_norm(bracket);
        bool norm_ok = (nb == 1 || nb == -1);

        if (norm_ok) {
            if (target.has_value()) {
                const long long P = std::llabs(target->p);
                long long Q = target->q;
                if (P < 2 || std::gcd(P, Q) != 1)
                    throw std::invalid_argument("lens_torsion_test: bad target lens space");
                if (P != total)
                    throw std::invalid_argument(
                        "lens_torsion_test: target order must match the homology order");
                long long qbar_target = mod_inverse(Q, P);
                for (int s : units_mod(d)) {
                    CycNum cand = (CycNum::zeta_pow_minus_one(d, s) *
                                   CycNum::zeta_pow_minus_one(d, (s * (qbar_target % d)) % d))
                                      .inverse();
                    if (auto w = associate_eq(tau, cand)) {
                        test.pass = true;
                        test.ab = {s, static_cast<int>((s * (qbar_target % d)) % d)};
                        test.witness = *w;
                        break;
                    }
                }
            } else {
                const auto& us = units_mod(d);
                for (std::size_t i = 0; i < us.size() && !test.pass; ++i) {
                    for (std::size_t j = i; j < us.size(); ++j) {
                        CycNum cand = (CycNum::zeta_pow_minus_one(d, us[i]) *
                                       CycNum::zeta_pow_minus_one(d, us[j]))
                                          .inverse();
                        if (auto w = associate_eq(tau, cand)) {
                            test.pass = true;
                            test.ab = {us[i], us[j]};
                            test.witness = *w;
                            break;
                        }
                    }
                }
            }
        }
        out.aggregate = out.aggregate && test.pass;
        out.per_divisor.push_back(std::move(test));
    }
    return out;
}

}  // namespace surgelens
