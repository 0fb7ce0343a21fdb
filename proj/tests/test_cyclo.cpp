#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "surgelens/cyclo.hpp"

using namespace surgelens;

namespace {

const std::vector<std::string> u1 = {"u"};

LaurentPoly P(const std::string& s) { return parse_poly(s, u1); }

// Independent Galois-norm oracle: explicit product of conjugates in the ring.
mpq_class norm_by_conjugate_product(const CycNum& x) {
    CycNum acc = CycNum::from_integer(x.order(), 1);
    for (int a : units_mod(x.order())) {
        int e = (x.order() == 1) ? 1 : a;
        acc = acc * x.conjugate(e);
    }
    // result must be rational: numerator and denominator constant
    for (std::size_t i = 1; i < acc.num().size(); ++i) REQUIRE(acc.num()[i] == 0);
    for (std::size_t i = 1; i < acc.den().size(); ++i) REQUIRE(acc.den()[i] == 0);
    mpq_class q(acc.num()[0], acc.den()[0]);
    q.canonicalize();
    return q;
}

bool is_prime_power(int d, int& ell) {
    for (int p = 2; p <= d; ++p) {
        if (d % p != 0) continue;
        int m = d;
        while (m % p == 0) m /= p;
        if (m == 1) { ell = p; return true; }
        return false;
    }
    return false;
}

CycNum random_cyc(std::mt19937_64& rng, int d) {
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::vector<mpz_class> num(static_cast<std::size_t>(std::max(euler_phi(d), 1)));
    for (auto& c : num) c = coeff(rng);
    std::vector<mpz_class> den;
    do {
        den.assign(static_cast<std::size_t>(std::max(euler_phi(d), 1)), 0);
        for (auto& c : den) c = coeff(rng);
    } while (std::all_of(den.begin(), den.end(), [](const mpz_class& c) { return c == 0; }));
    return CycNum::from_num_den(d, num, den);
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_poly(1) == P("u - 1"));
    CHECK(cyclotomic_poly(2) == P("u + 1"));
    CHECK(cyclotomic_poly(6) == exact_div(P("u^6 - 1") * P("u - 1"), P("u^2 - 1") * P("u^3 - 1")));
    CHECK(cyclotomic_poly(6) == P("u^2 - u + 1"));
    CHECK(cyclotomic_poly(8) == P("u^4 + 1"));
    CHECK(cyclotomic_poly(12) == P("u^4 - u^2 + 1"));
    // product over divisors reassembles u^d - 1
    for (int d : {4, 6, 9, 12, 30}) {
        LaurentPoly prod = LaurentPoly::constant(1, 1);
        for (int e = 1; e <= d; ++e)
            if (d % e == 0) prod = prod * cyclotomic_poly(e);
        CHECK(prod == P("u^" + std::to_string(d) + " - 1"));
    }
    // degree phi(d), monic
    for (int d = 1; d <= 40; ++d) {
        auto c = cyclotomic_coeffs(d);
        CHECK(static_cast<int>(c.size()) - 1 == euler_phi(d));
        CHECK(c.back() == 1);
    }
}

TEST_CASE("resultant matches conjugate products") {
    std::mt19937_64 rng(777);
    std::uniform_int_distribution<int> coeff(-5, 5);
    for (int d : {2, 3, 4, 5, 6, 7, 8, 9, 10, 12}) {
        for (int iter = 0; iter < 10; ++iter) {
            std::vector<mpz_class> num(static_cast<std::size_t>(euler_phi(d)));
            for (auto& c : num) c = coeff(rng);
            CycNum x = CycNum::from_num_den(d, num, {mpz_class(1)});
            CHECK(d_norm(x) == norm_by_conjugate_product(x));
        }
    }
    // pinned values
    CHECK(resultant(cyclotomic_coeffs(7), {1, -1, 1}) == 1);     // u^2-u+1 at d=7
    CHECK(resultant(cyclotomic_coeffs(7), {1, -3, 1}) == 841);   // u^2-3u+1 at d=7
    CHECK(resultant(cyclotomic_coeffs(5), {-2, 1}) == 31);       // Phi_5(2)
}

TEST_CASE("project_psi examples") {
    const int p = 12;
    std::vector<mpz_class> orbit(p, 1);
    auto full_orbit = GroupRingElem::from_coeffs(p, false, orbit);
    for (int d = 2; d <= p; ++d) {
        if (p % d != 0) continue;
        CHECK(project_psi(full_orbit, d).is_zero());
    }
    auto upow = GroupRingElem::unit(p, false, p);  // u^p = 1
    CHECK(project_psi(upow, 3).equals(CycNum::from_integer(3, 1)));
    CHECK_THROWS_AS(project_psi(upow, 5), BadDivisor);

    // 1 - u at prime p has norm p
    for (int q : {3, 5, 7, 11, 13}) {
        auto one_minus_u = GroupRingElem::from_laurent(P("1 - u"), q, false);
        auto img = project_psi(one_minus_u, q);
        CHECK(d_norm(img) == q);
    }
}

TEST_CASE("Lemma-style norm values") {
    // N_d(+-zeta_d): +-1 for d=2 (zeta_2 = -1), 1 for d>=3
    CHECK(d_norm(CycNum::zeta_pow(2, 1)) == -1);
    CHECK(d_norm(-CycNum::zeta_pow(2, 1)) == 1);
    for (int d = 3; d <= 30; ++d) {
        CHECK(d_norm(CycNum::zeta_pow(d, 1)) == 1);
        CHECK(d_norm(-CycNum::zeta_pow(d, 1)) == 1);
    }
    // N_d(1 - zeta_d): ell for prime powers, else 1
    CHECK(d_norm(-CycNum::zeta_pow_minus_one(9, 1)) == 3);
    CHECK(d_norm(-CycNum::zeta_pow_minus_one(6, 1)) == 1);
    for (int d = 2; d <= 40; ++d) {
        CycNum v = -CycNum::zeta_pow_minus_one(d, 1);  // 1 - zeta
        int ell = 0;
        mpq_class expect = is_prime_power(d, ell) ? mpq_class(ell) : mpq_class(1);
        CHECK(d_norm(v) == expect);
    }
}

TEST_CASE("d_norm is multiplicative") {
    std::mt19937_64 rng(1015);
    for (int d = 2; d <= 24; ++d) {
        for (int iter = 0; iter < 6; ++iter) {
            CycNum x = random_cyc(rng, d);
            CycNum y = random_cyc(rng, d);
            CHECK(d_norm(x * y) == d_norm(x) * d_norm(y));
        }
    }
}

TEST_CASE("group ring arithmetic and reduction") {
    const int p = 5;
    auto full_sum = GroupRingElem::from_coeffs(p, true, std::vector<mpz_class>(p, 1));
    CHECK(full_sum.is_zero());  // image of 1 + u + ... + u^{p-1} is 0 in reduced mode

    // reduction is idempotent
    auto x = GroupRingElem::from_laurent(P("3*u^4 - u + 2"), p, true);
    CHECK(x.to_reduced() == x);

    // u is invertible: u * u^{p-1} = 1
    auto u = GroupRingElem::unit(p, true, 1);
    auto uinv = GroupRingElem::unit(p, true, p - 1);
    CHECK(u * uinv == GroupRingElem::constant(p, true, 1));
}

TEST_CASE("associate_eq on group ring elements") {
    auto x = GroupRingElem::from_laurent(P("u^3 - u^4"), 7, false);  // u^3(1-u)
    auto y = GroupRingElem::from_laurent(P("u - 1"), 7, false);
    auto w = associate_eq(x, y);
    REQUIRE(w.has_value());
    CHECK(w->sign == -1);
    CHECK(w->shift == 3);

    auto a = GroupRingElem::from_laurent(P("2 - 2*u"), 5, false);
    auto b = GroupRingElem::from_laurent(P("1 - u"), 5, false);
    CHECK(!associate_eq(a, b).has_value());

    auto z = GroupRingElem(5, false);
    CHECK(associate_eq(z, z).has_value());
    CHECK(associate_eq(z, z)->sign == 1);
}

TEST_CASE("associate_eq is an equivalence relation") {
    std::mt19937_64 rng(5091);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> shift(0, 10);
    for (int p : {5, 7, 12}) {
        for (int iter = 0; iter < 12; ++iter) {
            std::vector<mpz_class> v(static_cast<std::size_t>(p));
            for (auto& c : v) c = coeff(rng);
            auto x = GroupRingElem::from_coeffs(p, false, v);
            CHECK(associate_eq(x, x).has_value());  // reflexive
            auto y = x.mul_unit(shift(rng), coeff(rng) >= 0 ? 1 : -1);
            auto xy = associate_eq(x, y);
            auto yx = associate_eq(y, x);
            REQUIRE(xy.has_value());
            REQUIRE(yx.has_value());  // symmetric
            auto z = y.mul_unit(shift(rng), coeff(rng) >= 0 ? 1 : -1);
            CHECK(associate_eq(x, z).has_value());  // transitive through y
        }
    }
}

TEST_CASE("canonical representatives") {
    // every unit class has representative u^0 with coefficient +1
    for (int p : {5, 7}) {
        auto neg = GroupRingElem::unit(p, false, 2, -1);  // -u^2
        auto rep = canonical_rep(neg);
        std::vector<mpz_class> expect(static_cast<std::size_t>(p), 0);
        expect[0] = 1;
        CHECK(rep.coeffs() == expect);
    }
    // (u-1) at p=5 is in the same class as (1-u^4)*u
    auto a = GroupRingElem::from_laurent(P("u - 1"), 5, false);
    auto b = GroupRingElem::from_laurent(P("u - u^5"), 5, false);  // (1-u^4)*u
    CHECK(canonical_rep(a) == canonical_rep(b));
    CHECK(AssociateClass::of(a) == AssociateClass::of(b));
    // zero class
    auto z = GroupRingElem(5, false);
    CHECK(canonical_rep(z).is_zero());
    // canonical_rep is class-invariant on random inputs
    std::mt19937_64 rng(31337);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int iter = 0; iter < 20; ++iter) {
        std::vector<mpz_class> v(7);
        for (auto& c : v) c = coeff(rng);
        auto x = GroupRingElem::from_coeffs(7, false, v);
        auto y = x.mul_unit(iter % 7, iter % 2 ? -1 : 1);
        CHECK(canonical_rep(x) == canonical_rep(y));
    }
}

TEST_CASE("project_psi is a ring homomorphism") {
    std::mt19937_64 rng(2718);
    std::uniform_int_distribution<int> coeff(-4, 4);
    for (int p : {6, 12, 15, 30}) {
        for (int d = 2; d <= p; ++d) {
            if (p % d != 0) continue;
            for (int iter = 0; iter < 5; ++iter) {
                std::vector<mpz_class> v(static_cast<std::size_t>(p)), w(static_cast<std::size_t>(p));
                for (auto& c : v) c = coeff(rng);
                for (auto& c : w) c = coeff(rng);
                auto x = GroupRingElem::from_coeffs(p, false, v);
                auto y = GroupRingElem::from_coeffs(p, false, w);
                CHECK(project_psi(x * y, d).equals(project_psi(x, d) * project_psi(y, d)));
                CHECK(project_psi(x + y, d).equals(project_psi(x, d) + project_psi(y, d)));
            }
        }
    }
}

TEST_CASE("unit norms under project_psi") {
    for (int p : {6, 10, 15}) {
        for (int d = 2; d <= p; ++d) {
            if (p % d != 0) continue;
            for (int l = 0; l < p; ++l) {
                for (int s : {1, -1}) {
                    auto unit = GroupRingElem::unit(p, false, l, s);
                    mpq_class n = d_norm(project_psi(unit, d));
                    if (d == 2)
                        CHECK((n == 1 || n == -1));
                    else
                        CHECK(n == 1);
                }
            }
        }
    }
}

TEST_CASE("CRT consistency for the reduced quotient") {
    std::mt19937_64 rng(11235);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int p : {4, 6, 10, 12}) {
        for (int iter = 0; iter < 30; ++iter) {
            std::vector<mpz_class> v(static_cast<std::size_t>(p)), w(static_cast<std::size_t>(p));
            for (auto& c : v) c = coeff(rng);
            for (auto& c : w) c = coeff(rng);
            auto x = GroupRingElem::from_coeffs(p, true, v);
            auto y = GroupRingElem::from_coeffs(p, true, w);
            bool same = (x == y);
            bool all_proj_same = true;
            for (int d = 2; d <= p; ++d) {
                if (p % d != 0) continue;
                if (!project_psi(x, d).equals(project_psi(y, d))) all_proj_same = false;
            }
            CHECK(same == all_proj_same);
        }
    }
}

TEST_CASE("cyclotomic number field arithmetic") {
    // (zeta-1)^{-1}(zeta^2-1)^{-1} at d=7: exercised through torsion values later;
    // here basic identities
    const int d = 7;
    auto z = CycNum::zeta_pow(d, 1);
    auto one = CycNum::from_integer(d, 1);
    // zeta^7 = 1
    auto acc = one;
    for (int i = 0; i < 7; ++i) acc = acc * z;
    CHECK(acc.equals(one));
    // (zeta-1)(zeta+1) = zeta^2-1
    auto lhs = CycNum::zeta_pow_minus_one(d, 1) * (z + one);
    CHECK(lhs.equals(CycNum::zeta_pow_minus_one(d, 2)));
    // inverse round trip
    auto x = CycNum::from_num_den(d, {1, 2, 0, -1}, {3, 0, 1});
    CHECK((x * x.inverse()).equals(one));
    CHECK_THROWS_AS(CycNum(d).inverse(), std::domain_error);
    // associate equality with witness
    auto y = x.mul_zeta_pow(3);
    auto w = associate_eq(x, -y);
    REQUIRE(w.has_value());
    CHECK(w->sign == -1);
    CHECK(w->shift == (7 - 3));
}

TEST_CASE("d = 1 and d = 2 degenerate fields") {
    auto q = CycNum::from_num_den(1, {3}, {4});
    CHECK(d_norm(q) == mpq_class(3, 4));
    auto h = CycNum::from_num_den(2, {7}, {2});
    CHECK(d_norm(h) == mpq_class(7, 2));
}
