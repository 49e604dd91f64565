#include <doctest.h>

#include <complex>
#include <random>

#include "wqa/coeff.hpp"

using namespace wqa;

namespace {

using cplx = std::complex<double>;

cplx eval(const Poly& p, cplx z) {
    cplx acc = 0;
    for (std::size_t k = p.coeffs().size(); k-- > 0;) acc = acc * z + p.coeffs()[k].get_d();
    return acc;
}

cplx eval(const RationalFunction& x, cplx z) { return eval(x.num(), z) / eval(x.den(), z); }

cplx root_of_unity(int d) { return std::polar(1.0, 2 * M_PI / d); }

RationalFunction random_rf(std::mt19937& rng) {
    std::uniform_int_distribution<int> coef(-4, 4), deg(0, 3);
    auto poly = [&] {
        std::vector<mpq_class> c(static_cast<std::size_t>(deg(rng)) + 1);
        for (auto& x : c) x = coef(rng);
        return Poly(c);
    };
    Poly den;
    while (den.is_zero()) den = poly();
    return RationalFunction(poly(), den);
}

Cyclotomic random_cyc(std::mt19937& rng, int d) {
    std::uniform_int_distribution<int> coef(-5, 5);
    std::vector<mpq_class> c(static_cast<std::size_t>(euler_phi(d)));
    for (auto& x : c) x = mpq_class(coef(rng), 1 + std::abs(coef(rng)));
    return Cyclotomic(d, Poly(c));
}

} // namespace

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(3) == Poly({1, 1, 1}));
    CHECK(cyclotomic_polynomial(5) == Poly({1, 1, 1, 1, 1}));
    // Phi_9 = q^6 + q^3 + 1, Phi_15 has degree 8
    CHECK(cyclotomic_polynomial(9) == Poly({1, 0, 0, 1, 0, 0, 1}));
    CHECK(cyclotomic_polynomial(15).degree() == 8);
    for (int d : {3, 5, 7, 9, 15, 21}) {
        CHECK(cyclotomic_polynomial(d).degree() == euler_phi(d));
        CHECK(std::abs(eval(cyclotomic_polynomial(d), root_of_unity(d))) < 1e-9);
    }
}

TEST_CASE("polynomial division and gcd") {
    Poly a({-1, 0, 1}); // q^2 - 1
    Poly b({1, 1});     // q + 1
    auto [quot, rem] = a.divmod(b);
    CHECK(quot == Poly({-1, 1}));
    CHECK(rem.is_zero());
    CHECK(Poly::gcd(a, Poly({-1, 1}) * Poly({2, 1})) == Poly({-1, 1}));
    auto [g, s, t] = Poly::xgcd(Poly({1, 0, 1}), Poly({0, 1}));
    CHECK(g == Poly::constant(1));
    CHECK(s * Poly({1, 0, 1}) + t * Poly({0, 1}) == g);
    CHECK_THROWS_AS(a.divmod(Poly{}), Error);
}

TEST_CASE("quantum integers, generic") {
    RationalFunctionField f;
    CHECK(quantum_int(1, f) == f.one());
    CHECK(quantum_int(0, f).is_zero());
    CHECK(quantum_int(2, f) == f.q_pow(1) + f.q_pow(-1));
    CHECK(quantum_int(2, f).to_string() == "q + q^-1");
    CHECK(quantum_int(3, f).to_string() == "q^2 + 1 + q^-2");
    for (long m = 1; m <= 6; ++m) CHECK(quantum_int(-m, f) == -quantum_int(m, f));
    for (long m = 1; m <= 10; ++m)
        CHECK(quantum_int(m + 1, f) == f.q_pow(1) * quantum_int(m, f) + f.q_pow(-m));
    CHECK(quantum_factorial(0, f) == f.one());
    CHECK(quantum_factorial(2, f) == f.q_pow(1) + f.q_pow(-1));
    CHECK(quantum_factorial(3, f) == quantum_int(2, f) * quantum_int(3, f));
}

TEST_CASE("quantum integers, root of unity") {
    CyclotomicField f(3);
    CHECK(quantum_int(3, f).is_zero());
    CHECK(quantum_factorial(2, f) == f.from_int(-1));
    CHECK(quantum_factorial(0, f).is_one());
    CHECK_THROWS_AS(quantum_factorial(3, f), Error);
    try {
        quantum_factorial(3, f);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DivisorVanishes);
    }
    CyclotomicField f5(5);
    for (long m = 1; m <= 10; ++m)
        CHECK(quantum_int(m + 1, f5) == f5.q_pow(1) * quantum_int(m, f5) + f5.q_pow(-m));
    CHECK(quantum_int(5, f5).is_zero());
    CHECK(!quantum_int(4, f5).is_zero());
}

TEST_CASE("invalid orders") {
    for (int d : {-3, 0, 1, 2, 4, 6}) {
        CHECK_THROWS_AS(CyclotomicField{d}, Error);
        try {
            CyclotomicField bad(d);
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::InvalidOrder);
        }
    }
}

TEST_CASE("specialize") {
    // q^2 mod q^2 + q + 1 is -1 - q
    Cyclotomic s = specialize(RationalFunction::q_power(2), 3);
    CHECK(s.coefficients() == std::vector<mpq_class>{-1, -1});
    CHECK(specialize(RationalFunction(1), 3).is_one());

    RationalFunctionField f;
    RationalFunction inv = (f.q_pow(1) - f.q_pow(-1)).inverse();
    Cyclotomic v = specialize(inv, 3);
    CHECK(v * specialize(f.q_pow(1) - f.q_pow(-1), 3) == Cyclotomic(3, 1));
    CHECK(std::abs(eval(v.residue(), root_of_unity(3)) - eval(inv, root_of_unity(3))) < 1e-9);

    // 1/[3] has a pole at a cube root of unity
    try {
        specialize(quantum_int(3, f).inverse(), 3);
        FAIL("expected DenominatorVanishes");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DenominatorVanishes);
    }
}

TEST_CASE("field axioms on random samples") {
    std::mt19937 rng(7);
    for (int n = 0; n < 60; ++n) {
        RationalFunction a = random_rf(rng), b = random_rf(rng), c = random_rf(rng);
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a * b == b * a);
        CHECK((a - a).is_zero());
        if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
        // numeric oracle at a generic point
        cplx z(0.7, 0.3);
        if (!b.is_zero()) {
            cplx want = eval(a, z) / eval(b, z) + eval(c, z);
            CHECK(std::abs(eval(a / b + c, z) - want) < 1e-6 * (1 + std::abs(want)));
        }
    }
    for (int d : {3, 5, 9}) {
        for (int n = 0; n < 40; ++n) {
            Cyclotomic a = random_cyc(rng, d), b = random_cyc(rng, d), c = random_cyc(rng, d);
            CHECK((a + b) * c == a * c + b * c);
            if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
            cplx z = root_of_unity(d);
            cplx want = eval(a.residue(), z) * eval(b.residue(), z);
            CHECK(std::abs(eval((a * b).residue(), z) - want) < 1e-6 * (1 + std::abs(want)));
        }
    }
}

TEST_CASE("specialize is a ring morphism") {
    std::mt19937 rng(11);
    int checked = 0;
    while (checked < 40) {
        RationalFunction x = random_rf(rng), y = random_rf(rng);
        try {
            Cyclotomic sx = specialize(x, 5), sy = specialize(y, 5);
            CHECK(specialize(x * y, 5) == sx * sy);
            CHECK(specialize(x + y, 5) == sx + sy);
            ++checked;
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::DenominatorVanishes);
        }
    }
}

TEST_CASE("canonical form") {
    RationalFunctionField f;
    // (q^2 - 1)/(2q - 2) and (q + 1)/2 built two ways
    RationalFunction a(Poly({-1, 0, 1}), Poly({-2, 2}));
    RationalFunction b = (f.q_pow(1) + f.one()) / f.from_int(2);
    CHECK(a == b);
    CHECK(a.to_string() == "1/2*q + 1/2");
    RationalFunction c(Poly({0, -3}), Poly({0, 0, -6}));
    CHECK(c == f.q_pow(-1) / f.from_int(2));
    CHECK(c.to_string() == "1/2*q^-1");
    RationalFunction d = (f.q_pow(1) - f.q_pow(-1)).inverse();
    CHECK(d.to_string() == "q/(q^2 - 1)");
    CHECK(!d.needs_parens());
    CHECK((f.q_pow(2) + f.one()).needs_parens());
    CHECK(f.zero().to_string() == "0");
    CHECK(f.from_int(-3).to_string() == "-3");
    CHECK(quantum_int(2, f).inverse().to_string() == "q/(q^2 + 1)");
    CHECK(RationalFunction(Poly({1, 1}), Poly({-1, 0, 1})).to_string() == "1/(q - 1)");
}

TEST_CASE("mixing orders") {
    CHECK_THROWS_AS(Cyclotomic(3, 1) + Cyclotomic(5, 1), Error);
}
