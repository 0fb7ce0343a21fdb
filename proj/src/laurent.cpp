#include "surgelens/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace surgelens {

namespace {

void check_same_vars(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.var_count() != b.var_count())
        throw std::invalid_argument("variable count mismatch");
}

}  // namespace

LaurentPoly LaurentPoly::constant(int var_count, const mpz_class& c) {
    LaurentPoly p(var_count);
    p.add_term(Exponents(var_count, 0), c);
    return p;
}

LaurentPoly LaurentPoly::monomial(int var_count, Exponents e, const mpz_class& c) {
    if (static_cast<int>(e.size()) != var_count)
        throw std::invalid_argument("monomial length mismatch");
    LaurentPoly p(var_count);
    p.add_term(e, c);
    return p;
}

LaurentPoly LaurentPoly::variable(int var_count, int index, int power) {
    if (index < 0 || index >= var_count) throw std::invalid_argument("variable index out of range");
    Exponents e(var_count, 0);
    e[index] = power;
    return monomial(var_count, e, 1);
}

bool LaurentPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

mpz_class LaurentPoly::constant_value() const {
    if (!is_constant()) throw std::logic_error("not a constant polynomial");
    return terms_.empty() ? mpz_class(0) : terms_.begin()->second;
}

mpz_class LaurentPoly::eval_all_ones() const {
    mpz_class s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

void LaurentPoly::add_term(const Exponents& e, const mpz_class& c) {
    if (c == 0) return;
    if (static_cast<int>(e.size()) != vars_) throw std::invalid_argument("exponent length mismatch");
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    check_same_vars(*this, o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    check_same_vars(*this, o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    check_same_vars(a, b);
    LaurentPoly r(a.vars_);
    if (a.is_zero() || b.is_zero()) return r;
    Exponents e(a.vars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (int i = 0; i < a.vars_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
    LaurentPoly r = constant(vars_, 1);
    LaurentPoly base = *this;
    while (e) {
        if (e & 1u) r = r * base;
        base = base * base;
        e >>= 1u;
    }
    return r;
}

LaurentPoly LaurentPoly::shifted(const Exponents& shift) const {
    if (static_cast<int>(shift.size()) != vars_) throw std::invalid_argument("shift length mismatch");
    LaurentPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        Exponents f = e;
        for (int i = 0; i < vars_; ++i) f[i] += shift[i];
        r.terms_.emplace(std::move(f), c);
    }
    return r;
}

LaurentPoly LaurentPoly::inverted() const {
    LaurentPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        Exponents f(vars_);
        for (int i = 0; i < vars_; ++i) f[i] = -e[i];
        r.terms_.emplace(std::move(f), c);
    }
    return r;
}

std::optional<Exponents> LaurentPoly::min_exponents() const {
    if (terms_.empty()) return std::nullopt;
    Exponents m = terms_.begin()->first;
    for (const auto& [e, c] : terms_)
        for (int i = 0; i < vars_; ++i) m[i] = std::min(m[i], e[i]);
    return m;
}

std::optional<Exponents> LaurentPoly::max_exponents() const {
    if (terms_.empty()) return std::nullopt;
    Exponents m = terms_.begin()->first;
    for (const auto& [e, c] : terms_)
        for (int i = 0; i < vars_; ++i) m[i] = std::max(m[i], e[i]);
    return m;
}

LaurentPoly specialize(const LaurentPoly& p, const std::vector<VarImage>& images) {
    if (static_cast<int>(images.size()) != p.var_count())
        throw std::invalid_argument("specialize: assignment must cover every variable");
    bool any_u = std::any_of(images.begin(), images.end(),
                             [](const VarImage& v) { return !v.to_one; });
    const int out_vars = any_u ? 1 : 0;
    LaurentPoly r(out_vars);
    for (const auto& [e, c] : p.terms()) {
        long acc = 0;
        for (std::size_t i = 0; i < images.size(); ++i)
            if (!images[i].to_one) acc += images[i].power * e[i];
        Exponents f(out_vars);
        if (any_u) f[0] = static_cast<int>(acc);
        r.add_term(f, c);
    }
    return r;
}

LaurentPoly exact_div(const LaurentPoly& num, const LaurentPoly& den) {
    check_same_vars(num, den);
    if (den.is_zero()) throw std::invalid_argument("exact_div: zero divisor");
    const int n = num.var_count();
    if (num.is_zero()) return LaurentPoly::zero(n);

    // Shift both operands into the polynomial cone; the quotient of the
    // shifted polynomials is again a polynomial (graded lowest terms cannot
    // cancel over Z), so greedy lex division terminates.
    Exponents amin = *num.min_exponents();
    Exponents bmin = *den.min_exponents();
    Exponents neg(n);
    for (int i = 0; i < n; ++i) neg[i] = -amin[i];
    LaurentPoly rem = num.shifted(neg);
    for (int i = 0; i < n; ++i) neg[i] = -bmin[i];
    LaurentPoly d = den.shifted(neg);

    const auto& dlead = *d.terms().rbegin();
    LaurentPoly q(n);
    Exponents e(n);
    while (!rem.is_zero()) {
        const auto& rlead = *rem.terms().rbegin();
        for (int i = 0; i < n; ++i) {
            e[i] = rlead.first[i] - dlead.first[i];
            if (e[i] < 0) throw NotDivisible();
        }
        mpz_class qc;
        if (!mpz_divisible_p(rlead.second.get_mpz_t(), dlead.second.get_mpz_t()))
            throw NotDivisible();
        mpz_divexact(qc.get_mpz_t(), rlead.second.get_mpz_t(), dlead.second.get_mpz_t());
        LaurentPoly t = LaurentPoly::monomial(n, e, qc);
        q += t;
        rem -= t * d;
    }
    Exponents back(n);
    for (int i = 0; i < n; ++i) back[i] = amin[i] - bmin[i];
    return q.shifted(back);
}

LaurentPoly torres_specialize(const LaurentPoly& delta, const std::vector<long>& linking_numbers) {
    const int lambda = delta.var_count() - 1;
    if (lambda < 1) throw std::invalid_argument("torres_specialize: need at least 2 variables");
    if (static_cast<int>(linking_numbers.size()) != lambda)
        throw std::invalid_argument("torres_specialize: one linking number per remaining component");
    LaurentPoly r(lambda);
    Exponents f(lambda);
    for (const auto& [e, c] : delta.terms()) {
        std::copy(e.begin(), e.begin() + lambda, f.begin());
        r.add_term(f, c);
    }
    return r;
}

LaurentPoly torres_rhs_factor(const std::vector<long>& ks) {
    const int lambda = static_cast<int>(ks.size());
    if (lambda < 1) throw std::invalid_argument("torres_rhs_factor: empty linking data");
    if (lambda == 1) {
        // (t^k - 1)/(t - 1)
        LaurentPoly num(1), den(1);
        num = LaurentPoly::monomial(1, {static_cast<int>(ks[0])}, 1) - LaurentPoly::constant(1, 1);
        den = LaurentPoly::variable(1, 0) - LaurentPoly::constant(1, 1);
        if (num.is_zero()) return LaurentPoly::zero(1);
        return exact_div(num, den);
    }
    Exponents e(lambda);
    for (int i = 0; i < lambda; ++i) e[i] = static_cast<int>(ks[i]);
    return LaurentPoly::monomial(lambda, e, 1) - LaurentPoly::constant(lambda, 1);
}

bool is_self_inverse(const LaurentPoly& p) { return p == p.inverted(); }

namespace {

// Flip sign so the lexicographically first term has positive coefficient.
LaurentPoly sign_fixed(LaurentPoly p) {
    if (p.is_zero()) return p;
    if (p.terms().begin()->second < 0) return -p;
    return p;
}

}  // namespace

LaurentPoly duality_normalize(const LaurentPoly& p) {
    if (p.is_zero()) return p;
    const int n = p.var_count();
    Exponents lo = *p.min_exponents();
    Exponents hi = *p.max_exponents();
    bool all_even = true;
    for (int i = 0; i < n; ++i)
        if ((lo[i] + hi[i]) % 2 != 0) all_even = false;

    if (all_even) {
        Exponents c(n);
        for (int i = 0; i < n; ++i) c[i] = -(lo[i] + hi[i]) / 2;
        LaurentPoly centered = p.shifted(c);
        LaurentPoly inv = centered.inverted();
        if (centered == inv || centered == -inv) return sign_fixed(centered);
        throw NotSymmetric();
    }

    // Odd spread in some variable: no integral centering. Accept inputs that
    // still satisfy the duality relation up to a monomial unit and return the
    // near-centered representative.
    LaurentPoly inv = p.inverted();
    Exponents s(n);
    for (int i = 0; i < n; ++i) s[i] = lo[i] + hi[i];
    LaurentPoly cmp = inv.shifted(s);
    if (!(cmp == p || cmp == -p)) throw NotSymmetric();
    Exponents c(n);
    for (int i = 0; i < n; ++i) {
        int t = lo[i] + hi[i];
        int fl = (t >= 0) ? t / 2 : -((-t + 1) / 2);  // floor(t/2)
        c[i] = -fl;
    }
    return sign_fixed(p.shifted(c));
}

std::optional<MonomialUnit> laurent_associate_eq(const LaurentPoly& a, const LaurentPoly& b) {
    check_same_vars(a, b);
    if (a.is_zero() && b.is_zero()) return MonomialUnit{1, Exponents(a.var_count(), 0)};
    if (a.is_zero() || b.is_zero()) return std::nullopt;
    if (a.term_count() != b.term_count()) return std::nullopt;
    const auto& la = *a.terms().begin();
    const auto& lb = *b.terms().begin();
    Exponents shift(a.var_count());
    for (int i = 0; i < a.var_count(); ++i) shift[i] = la.first[i] - lb.first[i];
    LaurentPoly moved = b.shifted(shift);
    if (moved == a) return MonomialUnit{1, shift};
    if (moved == -a) return MonomialUnit{-1, shift};
    return std::nullopt;
}

std::pair<int, std::vector<mpz_class>> dense_coeffs_1var(const LaurentPoly& p) {
    if (p.var_count() != 1) throw std::invalid_argument("dense_coeffs_1var: need one variable");
    if (p.is_zero()) return {0, {}};
    int lo = (*p.min_exponents())[0];
    int hi = (*p.max_exponents())[0];
    std::vector<mpz_class> c(static_cast<std::size_t>(hi - lo + 1));
    for (const auto& [e, v] : p.terms()) c[static_cast<std::size_t>(e[0] - lo)] = v;
    return {lo, std::move(c)};
}

mpq_class trace_of(const LaurentPoly& p) {
    if (p.var_count() != 1 || p.is_zero())
        throw std::invalid_argument("trace_of: need a nonzero 1-variable polynomial");
    auto [lo, c] = dense_coeffs_1var(p);
    (void)lo;
    const std::size_t d = c.size() - 1;
    if (d == 0) return 0;
    mpq_class t(-c[d - 1], c[d]);
    t.canonicalize();
    return t;
}

// --- text form --------------------------------------------------------------

std::vector<std::string> default_var_names(int var_count) {
    if (var_count == 1) return {"t"};
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(var_count));
    for (int i = 1; i <= var_count; ++i) names.push_back("t" + std::to_string(i));
    return names;
}

std::string to_string(const LaurentPoly& p, const std::vector<std::string>& names_in) {
    if (p.is_zero()) return "0";
    std::vector<std::string> names = names_in.empty() ? default_var_names(p.var_count()) : names_in;
    if (static_cast<int>(names.size()) != p.var_count())
        throw std::invalid_argument("to_string: name count mismatch");
    std::ostringstream out;
    bool first = true;
    // descending lex order: leading term first
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        mpz_class a = c;
        if (first) {
            if (a < 0) { out << "-"; a = -a; }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool any_var = std::any_of(e.begin(), e.end(), [](int x) { return x != 0; });
        bool printed = false;
        if (a != 1 || !any_var) {
            out << a.get_str();
            printed = true;
        }
        for (int i = 0; i < p.var_count(); ++i) {
            if (e[i] == 0) continue;
            if (printed) out << "*";
            out << names[i];
            if (e[i] != 1) out << "^" << e[i];
            printed = true;
        }
    }
    return out.str();
}

namespace {

struct Token {
    enum Kind { Plus, Minus, Star, Caret, Int, Ident, End } kind;
    std::string text;
};

std::vector<Token> lex_poly(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        char ch = s[i];
        if (std::isspace(static_cast<unsigned char>(ch))) { ++i; continue; }
        if (ch == '+') { out.push_back({Token::Plus, "+"}); ++i; continue; }
        if (ch == '-') { out.push_back({Token::Minus, "-"}); ++i; continue; }
        if (ch == '*') { out.push_back({Token::Star, "*"}); ++i; continue; }
        if (ch == '^') { out.push_back({Token::Caret, "^"}); ++i; continue; }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Token::Int, s.substr(i, j - i)});
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            std::size_t j = i;
            while (j < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
                ++j;
            out.push_back({Token::Ident, s.substr(i, j - i)});
            i = j;
            continue;
        }
        throw std::invalid_argument(std::string("polynomial parse: unexpected character '") + ch + "'");
    }
    out.push_back({Token::End, ""});
    return out;
}

struct RawTerm {
    mpz_class coeff;
    std::map<std::string, long> powers;
};

std::vector<RawTerm> parse_terms(const std::string& text) {
    auto toks = lex_poly(text);
    std::size_t pos = 0;
    auto peek = [&]() -> const Token& { return toks[pos]; };
    auto next = [&]() -> const Token& { return toks[pos++]; };

    std::vector<RawTerm> terms;
    while (peek().kind != Token::End) {
        int sign = 1;
        while (peek().kind == Token::Plus || peek().kind == Token::Minus) {
            if (next().kind == Token::Minus) sign = -sign;
        }
        RawTerm term;
        term.coeff = sign;
        bool expect_factor = true;
        while (expect_factor) {
            const Token& t = next();
            if (t.kind == Token::Int) {
                term.coeff *= mpz_class(t.text);
            } else if (t.kind == Token::Ident) {
                long e = 1;
                if (peek().kind == Token::Caret) {
                    next();
                    long es = 1;
                    if (peek().kind == Token::Minus) { next(); es = -1; }
                    else if (peek().kind == Token::Plus) { next(); }
                    if (peek().kind != Token::Int)
                        throw std::invalid_argument("polynomial parse: exponent expected after '^'");
                    e = es * std::stol(next().text);
                }
                term.powers[t.text] += e;
            } else {
                throw std::invalid_argument("polynomial parse: factor expected");
            }
            if (peek().kind == Token::Star) { next(); continue; }
            expect_factor = false;
        }
        terms.push_back(std::move(term));
        if (peek().kind != Token::Plus && peek().kind != Token::Minus && peek().kind != Token::End)
            throw std::invalid_argument("polynomial parse: '+' or '-' expected between terms");
    }
    return terms;
}

// Natural order: alphabetic prefix, then numeric suffix (t < t1 < t2 < u).
bool natural_less(const std::string& a, const std::string& b) {
    auto split = [](const std::string& s) {
        std::size_t i = s.size();
        while (i > 0 && std::isdigit(static_cast<unsigned char>(s[i - 1]))) --i;
        long n = -1;
        if (i < s.size()) n = std::stol(s.substr(i));
        return std::make_pair(s.substr(0, i), n);
    };
    auto [pa, na] = split(a);
    auto [pb, nb] = split(b);
    if (pa != pb) return pa < pb;
    return na < nb;
}

}  // namespace

LaurentPoly parse_poly(const std::string& text, const std::vector<std::string>& names) {
    auto terms = parse_terms(text);
    std::map<std::string, int> index;
    for (std::size_t i = 0; i < names.size(); ++i) index[names[i]] = static_cast<int>(i);
    LaurentPoly p(static_cast<int>(names.size()));
    for (const auto& t : terms) {
        Exponents e(names.size(), 0);
        for (const auto& [name, pow] : t.powers) {
            auto it = index.find(name);
            if (it == index.end())
                throw std::invalid_argument("polynomial parse: unknown variable '" + name + "'");
            e[static_cast<std::size_t>(it->second)] += static_cast<int>(pow);
        }
        p.add_term(e, t.coeff);
    }
    return p;
}

LaurentPoly parse_poly(const std::string& text) {
    auto terms = parse_terms(text);
    std::vector<std::string> names;
    for (const auto& t : terms)
        for (const auto& [name, pow] : t.powers)
            if (std::find(names.begin(), names.end(), name) == names.end()) names.push_back(name);
    std::sort(names.begin(), names.end(), natural_less);
    std::map<std::string, int> index;
    for (std::size_t i = 0; i < names.size(); ++i) index[names[i]] = static_cast<int>(i);
    LaurentPoly p(static_cast<int>(names.size()));
    for (const auto& t : terms) {
        Exponents e(names.size(), 0);
        for (const auto& [name, pow] : t.powers)
            e[static_cast<std::size_t>(index[name])] += static_cast<int>(pow);
        p.add_term(e, t.coeff);
    }
    return p;
}

}  // namespace surgelens
