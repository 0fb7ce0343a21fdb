#include "surgelens/cyclo.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace surgelens {

namespace {

// --- dense integer polynomials (index = exponent) ---------------------------

using Dense = std::vector<mpz_class>;

void trim(Dense& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int deg(const Dense& p) { return static_cast<int>(p.size()) - 1; }  // -1 for zero

Dense mul(const Dense& a, const Dense& b) {
    if (a.empty() || b.empty()) return {};
    Dense r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

Dense add(const Dense& a, const Dense& b) {
    Dense r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}

// remainder of a modulo a monic divisor m
Dense rem_monic(Dense a, const Dense& m) {
    const int dm = deg(m);
    while (deg(a) >= dm) {
        const mpz_class c = a.back();
        const std::size_t off = a.size() - m.size();
        for (std::size_t i = 0; i < m.size(); ++i) a[off + i] -= c * m[i];
        trim(a);
    }
    return a;
}

// exact quotient a / m for monic m (remainder must vanish)
Dense div_monic_exact(Dense a, const Dense& m) {
    const int dm = deg(m);
    if (deg(a) < dm) {
        if (!a.empty()) throw std::logic_error("div_monic_exact: not divisible");
        return {};
    }
    Dense q(static_cast<std::size_t>(deg(a) - dm + 1));
    while (deg(a) >= dm) {
        const mpz_class c = a.back();
        const std::size_t off = a.size() - m.size();
        q[off] = c;
        for (std::size_t i = 0; i < m.size(); ++i) a[off + i] -= c * m[i];
        trim(a);
    }
    if (!a.empty()) throw std::logic_error("div_monic_exact: not divisible");
    return q;
}

// pseudo-remainder: lc(b)^{deg a - deg b + 1} * a  mod  b
Dense prem(Dense a, const Dense& b) {
    const int da = deg(a), db = deg(b);
    const mpz_class lb = b.back();
    mpz_class scale;
    mpz_pow_ui(scale.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(da - db + 1));
    for (auto& c : a) c *= scale;
    while (deg(a) >= db) {
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), a.back().get_mpz_t(), lb.get_mpz_t());
        const std::size_t off = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= q * b[i];
        trim(a);
    }
    return a;
}

mpz_class content(const Dense& p) {
    mpz_class g = 0;
    for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g == 0 ? mpz_class(1) : g;
}

mpz_class pow_z(const mpz_class& b, unsigned long e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

LaurentPoly to_laurent_1var(const Dense& p) {
    LaurentPoly r(1);
    for (std::size_t i = 0; i < p.size(); ++i)
        r.add_term({static_cast<int>(i)}, p[i]);
    return r;
}

}  // namespace

// --- units / phi / cyclotomic ------------------------------------------------

const std::vector<int>& units_mod(int d) {
    static std::mutex mu;
    static std::map<int, std::vector<int>> cache;
    if (d < 1) throw std::invalid_argument("units_mod: d >= 1 required");
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
    std::vector<int> u;
    if (d == 1) {
        u.push_back(0);
    } else {
        for (int a = 1; a < d; ++a)
            if (std::gcd(a, d) == 1) u.push_back(a);
    }
    return cache.emplace(d, std::move(u)).first->second;
}

int euler_phi(int d) { return static_cast<int>(units_mod(d).size()); }

std::vector<mpz_class> cyclotomic_coeffs(int d) {
    static std::mutex mu;
    static std::map<int, Dense> cache;
    if (d < 1) throw std::invalid_argument("cyclotomic_coeffs: d >= 1 required");
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
    // Phi_d = (u^d - 1) / prod_{e | d, e < d} Phi_e, computed bottom-up
    for (int n = 1; n <= d; ++n) {
        if (cache.count(n) || d % n != 0) continue;
        Dense num(static_cast<std::size_t>(n + 1), 0);
        num[0] = -1;
        num[static_cast<std::size_t>(n)] = 1;
        for (int e = 1; e < n; ++e)
            if (n % e == 0) num = div_monic_exact(std::move(num), cache.at(e));
        cache.emplace(n, std::move(num));
    }
    return cache.at(d);
}

LaurentPoly cyclotomic_poly(int d) { return to_laurent_1var(cyclotomic_coeffs(d)); }

mpz_class resultant(Dense a, Dense b) {
    trim(a);
    trim(b);
    if (a.empty() || b.empty()) return 0;
    if (deg(a) == 0 && deg(b) == 0) return 1;
    int s = 1;
    if (deg(a) < deg(b)) {
        if ((deg(a) & 1) && (deg(b) & 1)) s = -s;
        std::swap(a, b);
    }
    const mpz_class ca = content(a), cb = content(b);
    for (auto& c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), ca.get_mpz_t());
    for (auto& c : b) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), cb.get_mpz_t());
    mpz_class t = pow_z(ca, static_cast<unsigned long>(deg(b))) *
                  pow_z(cb, static_cast<unsigned long>(deg(a)));
    if (deg(b) == 0) {
        // b is +-1 after content extraction
        mpz_class lead = pow_z(b[0], static_cast<unsigned long>(deg(a)));
        return s * t * lead;
    }
    mpz_class g = 1, h = 1;
    while (true) {
        const int da = deg(a), db = deg(b);
        const int delta = da - db;
        if ((da & 1) && (db & 1)) s = -s;
        Dense r = prem(a, b);
        a = std::move(b);
        mpz_class denom = g * pow_z(h, static_cast<unsigned long>(delta));
        for (auto& c : r) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), denom.get_mpz_t());
        b = std::move(r);
        g = a.back();
        if (delta == 0) {
            // h unchanged
        } else if (delta == 1) {
            h = g;
        } else {
            mpz_class num = pow_z(g, static_cast<unsigned long>(delta));
            mpz_class den = pow_z(h, static_cast<unsigned long>(delta - 1));
            mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        }
        if (b.empty()) return 0;  // common factor
        if (deg(b) == 0) break;
    }
    // last nonzero remainder is the constant b
    const int da = deg(a);
    mpz_class num = pow_z(b[0], static_cast<unsigned long>(da));
    mpz_class den = pow_z(h, static_cast<unsigned long>(da - 1));
    mpz_class out;
    mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return s * t * out;
}

// --- GroupRingElem -----------------------------------------------------------

GroupRingElem::GroupRingElem(int order, bool reduced) : order_(order), reduced_(reduced) {
    if (order < 2) throw std::invalid_argument("group ring order must be >= 2");
    c_.assign(static_cast<std::size_t>(reduced ? order - 1 : order), 0);
}

GroupRingElem GroupRingElem::from_coeffs(int order, bool reduced,
                                         const std::vector<mpz_class>& raw) {
    GroupRingElem x(order, false);
    for (std::size_t i = 0; i < raw.size(); ++i)
        x.c_[i % static_cast<std::size_t>(order)] += raw[i];
    if (reduced) return x.to_reduced();
    return x;
}

GroupRingElem GroupRingElem::from_laurent(const LaurentPoly& p, int order, bool reduced) {
    if (p.var_count() > 1)
        throw std::invalid_argument("from_laurent: need a 1-variable polynomial");
    GroupRingElem x(order, false);
    for (const auto& [e, c] : p.terms()) {
        long exp = p.var_count() == 0 ? 0 : e[0];
        long m = ((exp % order) + order) % order;
        x.c_[static_cast<std::size_t>(m)] += c;
    }
    if (reduced) return x.to_reduced();
    return x;
}

GroupRingElem GroupRingElem::constant(int order, bool reduced, const mpz_class& c) {
    GroupRingElem x(order, reduced);
    if (!x.c_.empty()) x.c_[0] = c;
    return x;
}

GroupRingElem GroupRingElem::unit(int order, bool reduced, long exp, int sign) {
    GroupRingElem x(order, false);
    long m = ((exp % order) + order) % order;
    x.c_[static_cast<std::size_t>(m)] = sign;
    if (reduced) return x.to_reduced();
    return x;
}

bool GroupRingElem::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const mpz_class& v) { return v == 0; });
}

GroupRingElem GroupRingElem::to_reduced() const {
    if (reduced_) return *this;
    GroupRingElem x(order_, true);
    // u^{p-1} == -(1 + u + ... + u^{p-2})
    const mpz_class top = c_.back();
    for (std::size_t i = 0; i + 1 < c_.size(); ++i) x.c_[i] = c_[i] - top;
    return x;
}

GroupRingElem GroupRingElem::operator+(const GroupRingElem& o) const {
    if (order_ != o.order_ || reduced_ != o.reduced_)
        throw std::invalid_argument("group ring mismatch");
    GroupRingElem r = *this;
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
    return r;
}

GroupRingElem GroupRingElem::operator-(const GroupRingElem& o) const {
    if (order_ != o.order_ || reduced_ != o.reduced_)
        throw std::invalid_argument("group ring mismatch");
    GroupRingElem r = *this;
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_[i];
    return r;
}

GroupRingElem GroupRingElem::operator-() const {
    GroupRingElem r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

GroupRingElem GroupRingElem::operator*(const GroupRingElem& o) const {
    if (order_ != o.order_ || reduced_ != o.reduced_)
        throw std::invalid_argument("group ring mismatch");
    const std::size_t p = static_cast<std::size_t>(order_);
    std::vector<mpz_class> acc(p, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            acc[(i + j) % p] += c_[i] * o.c_[j];
    }
    return from_coeffs(order_, reduced_, acc);
}

GroupRingElem GroupRingElem::mul_unit(long exp, int sign) const {
    const std::size_t p = static_cast<std::size_t>(order_);
    std::size_t sh = static_cast<std::size_t>(((exp % order_) + order_) % order_);
    std::vector<mpz_class> acc(p, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) acc[(i + sh) % p] = sign * c_[i];
    return from_coeffs(order_, reduced_, acc);
}

LaurentPoly GroupRingElem::to_laurent() const {
    LaurentPoly r(1);
    for (std::size_t i = 0; i < c_.size(); ++i) r.add_term({static_cast<int>(i)}, c_[i]);
    return r;
}

// --- CycNum -------------------------------------------------------------------

namespace {

Dense reduce_mod_phi(Dense v, int d) {
    return rem_monic(std::move(v), cyclotomic_coeffs(d));
}

std::vector<mpz_class> pad_to_phi(Dense v, int d) {
    v.resize(static_cast<std::size_t>(std::max<int>(euler_phi(d), 1)), 0);
    return v;
}

bool all_zero(const std::vector<mpz_class>& v) {
    return std::all_of(v.begin(), v.end(), [](const mpz_class& c) { return c == 0; });
}

}  // namespace

CycNum::CycNum(int order) : order_(order) {
    if (order < 1) throw std::invalid_argument("CycNum order must be >= 1");
    const std::size_t n = static_cast<std::size_t>(std::max(euler_phi(order), 1));
    num_.assign(n, 0);
    den_.assign(n, 0);
    den_[0] = 1;
}

CycNum CycNum::from_integer(int order, const mpz_class& v) {
    CycNum x(order);
    x.num_[0] = v;
    return x;
}

CycNum CycNum::from_num_den(int order, std::vector<mpz_class> num, std::vector<mpz_class> den) {
    CycNum x(order);
    x.num_ = pad_to_phi(reduce_mod_phi(std::move(num), order), order);
    x.den_ = pad_to_phi(reduce_mod_phi(std::move(den), order), order);
    if (all_zero(x.den_)) throw std::domain_error("CycNum: zero denominator");
    return x;
}

CycNum CycNum::zeta_pow(int order, long a) {
    long m = ((a % order) + order) % order;
    Dense v(static_cast<std::size_t>(m + 1), 0);
    v[static_cast<std::size_t>(m)] = 1;
    CycNum x(order);
    x.num_ = pad_to_phi(reduce_mod_phi(std::move(v), order), order);
    return x;
}

CycNum CycNum::zeta_pow_minus_one(int order, long a) {
    CycNum x = zeta_pow(order, a);
    x.num_[0] -= 1;
    return x;
}

CycNum CycNum::eval_at_zeta(const LaurentPoly& p, int order) {
    if (p.var_count() > 1) throw std::invalid_argument("eval_at_zeta: need <= 1 variable");
    Dense v(static_cast<std::size_t>(order), 0);
    for (const auto& [e, c] : p.terms()) {
        long exp = p.var_count() == 0 ? 0 : e[0];
        long m = ((exp % order) + order) % order;
        v[static_cast<std::size_t>(m)] += c;
    }
    CycNum x(order);
    x.num_ = pad_to_phi(reduce_mod_phi(std::move(v), order), order);
    return x;
}

bool CycNum::is_zero() const { return all_zero(num_); }

CycNum CycNum::operator+(const CycNum& o) const {
    if (order_ != o.order_) throw std::invalid_argument("CycNum order mismatch");
    CycNum r(order_);
    r.num_ = pad_to_phi(reduce_mod_phi(add(mul(num_, o.den_), mul(o.num_, den_)), order_), order_);
    r.den_ = pad_to_phi(reduce_mod_phi(mul(den_, o.den_), order_), order_);
    return r;
}

CycNum CycNum::operator-() const {
    CycNum r = *this;
    for (auto& c : r.num_) c = -c;
    return r;
}

CycNum CycNum::operator-(const CycNum& o) const { return *this + (-o); }

CycNum CycNum::operator*(const CycNum& o) const {
    if (order_ != o.order_) throw std::invalid_argument("CycNum order mismatch");
    CycNum r(order_);
    r.num_ = pad_to_phi(reduce_mod_phi(mul(num_, o.num_), order_), order_);
    r.den_ = pad_to_phi(reduce_mod_phi(mul(den_, o.den_), order_), order_);
    return r;
}

CycNum CycNum::inverse() const {
    if (is_zero()) throw std::domain_error("CycNum: inverse of zero");
    CycNum r(order_);
    r.num_ = den_;
    r.den_ = num_;
    return r;
}

CycNum CycNum::mul_zeta_pow(long l) const {
    CycNum r = *this;
    long m = ((l % order_) + order_) % order_;
    Dense z(static_cast<std::size_t>(m + 1), 0);
    z[static_cast<std::size_t>(m)] = 1;
    r.num_ = pad_to_phi(reduce_mod_phi(mul(num_, z), order_), order_);
    return r;
}

CycNum CycNum::conjugate(long a) const {
    long m = ((a % order_) + order_) % order_;
    if (order_ > 1 && std::gcd(m, static_cast<long>(order_)) != 1)
        throw std::invalid_argument("conjugate: exponent not coprime to the order");
    auto subst = [&](const std::vector<mpz_class>& v) {
        Dense out(static_cast<std::size_t>(order_), 0);
        for (std::size_t i = 0; i < v.size(); ++i) {
            std::size_t e = (i * static_cast<std::size_t>(m)) % static_cast<std::size_t>(order_);
            out[e] += v[i];
        }
        return pad_to_phi(reduce_mod_phi(std::move(out), order_), order_);
    };
    CycNum r(order_);
    r.num_ = subst(num_);
    r.den_ = subst(den_);
    return r;
}

bool CycNum::equals(const CycNum& o) const {
    if (order_ != o.order_) return false;
    Dense lhs = reduce_mod_phi(mul(num_, o.den_), order_);
    Dense rhs = reduce_mod_phi(mul(o.num_, den_), order_);
    return lhs == rhs;
}

CycNum project_psi(const GroupRingElem& x, int d) {
    if (d < 2 || x.order() % d != 0)
        throw BadDivisor("project_psi: d must be a divisor >= 2 of the ring order");
    Dense v(static_cast<std::size_t>(d), 0);
    const auto& c = x.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) v[i % static_cast<std::size_t>(d)] += c[i];
    CycNum r(d);
    Dense red = reduce_mod_phi(std::move(v), d);
    red.resize(static_cast<std::size_t>(std::max(euler_phi(d), 1)), 0);
    return CycNum::from_num_den(d, red, {mpz_class(1)});
}

mpq_class d_norm(const CycNum& x) {
    Dense n = x.num();
    Dense dn = x.den();
    trim(n);
    trim(dn);
    if (n.empty()) return 0;
    const Dense phi = cyclotomic_coeffs(x.order());
    mpq_class q(resultant(phi, n), resultant(phi, dn));
    q.canonicalize();
    return q;
}

// --- associates ---------------------------------------------------------------

std::optional<AssociateWitness> associate_eq(const GroupRingElem& x, const GroupRingElem& y) {
    if (x.order() != y.order() || x.reduced_mode() != y.reduced_mode())
        throw std::invalid_argument("associate_eq: ring mismatch");
    if (x.is_zero() && y.is_zero()) return AssociateWitness{1, 0};
    if (x.is_zero() || y.is_zero()) return std::nullopt;
    for (int l = 0; l < x.order(); ++l) {
        GroupRingElem cand = y.mul_unit(l, 1);
        if (cand == x) return AssociateWitness{1, l};
        if (-cand == x) return AssociateWitness{-1, l};
    }
    return std::nullopt;
}

std::optional<AssociateWitness> associate_eq(const CycNum& x, const CycNum& y) {
    if (x.order() != y.order()) throw std::invalid_argument("associate_eq: order mismatch");
    if (x.is_zero() && y.is_zero()) return AssociateWitness{1, 0};
    if (x.is_zero() || y.is_zero()) return std::nullopt;
    const int d = x.order();
    const Dense phi = cyclotomic_coeffs(d);
    Dense a = rem_monic(mul(x.num(), y.den()), phi);
    Dense b = rem_monic(mul(y.num(), x.den()), phi);
    const Dense zeta = {0, 1};
    for (int l = 0; l < d; ++l) {
        if (a == b) return AssociateWitness{1, l};
        Dense nb = b;
        for (auto& c : nb) c = -c;
        if (a == nb) return AssociateWitness{-1, l};
        b = rem_monic(mul(b, zeta), phi);
    }
    return std::nullopt;
}

GroupRingElem canonical_rep(const GroupRingElem& x) {
    GroupRingElem best = x;
    for (int l = 0; l < x.order(); ++l) {
        for (int s : {1, -1}) {
            GroupRingElem cand = x.mul_unit(l, s);
            if (best.coeffs() < cand.coeffs()) best = cand;
        }
    }
    return best;
}

}  // namespace surgelens
