#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "wqa/error.hpp"

namespace wqa {

// Dense univariate polynomial in q over Q, coefficients stored low degree first.
// The zero polynomial has no coefficients.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<mpq_class> coeffs);
    static Poly constant(const mpq_class& c);
    static Poly monomial(const mpq_class& c, std::size_t degree);

    bool is_zero() const noexcept { return c_.empty(); }
    // -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    const mpq_class& lead() const { return c_.back(); }
    const std::vector<mpq_class>& coeffs() const noexcept { return c_; }
    mpq_class coeff(std::size_t k) const;
    // Lowest power with a nonzero coefficient; 0 for the zero polynomial.
    std::size_t valuation() const noexcept;
    bool is_monomial() const noexcept;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const mpq_class& s);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const mpq_class& s) { return a *= s; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    Poly shifted(std::size_t k) const; // multiply by q^k
    Poly unshifted(std::size_t k) const; // divide by q^k, requires valuation() >= k

    // Euclidean division; throws DivisionByZero on a zero divisor.
    std::pair<Poly, Poly> divmod(const Poly& divisor) const;
    Poly mod(const Poly& m) const { return divmod(m).second; }
    Poly monic() const;

    // Monic gcd (zero if both are zero).
    static Poly gcd(Poly a, Poly b);
    // Returns (g, s, t) with s*a + t*b = g, g monic.
    static std::tuple<Poly, Poly, Poly> xgcd(const Poly& a, const Poly& b);

    // Descending powers, e.g. "q^2 - 3*q + 1/2". Powers are shifted by `offset`
    // so Laurent polynomials print as "q + q^-1".
    std::string to_string(long offset = 0) const;

private:
    void trim();
    std::vector<mpq_class> c_;
};

// The d-th cyclotomic polynomial, integer coefficients.
const Poly& cyclotomic_polynomial(int d);
// Euler totient, equal to the degree of the cyclotomic polynomial.
int euler_phi(int d);

// Element of Q(q): reduced fraction of integer polynomials.
class RationalFunction {
public:
    RationalFunction();
    RationalFunction(long n); // NOLINT: integers embed implicitly
    explicit RationalFunction(const mpq_class& c);
    // num / den with den != 0; reduces to canonical form.
    RationalFunction(Poly num, Poly den);

    // c * q^n for any integer n.
    static RationalFunction q_power(long n, const mpq_class& c = 1);

    const Poly& num() const noexcept { return num_; }
    const Poly& den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_one() const noexcept;
    // True when the value is a Laurent polynomial.
    bool is_laurent() const noexcept { return den_.is_monomial(); }

    RationalFunction operator-() const;
    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction& operator/=(const RationalFunction& o);
    RationalFunction inverse() const;
    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string to_string() const;
    // True if the printed form has more than one top-level additive term.
    bool needs_parens() const;

private:
    void canonicalize();
    Poly num_;
    Poly den_;
};

// Element of Q(zeta_d) = Q[q]/Phi_d(q) for odd d > 1.
class Cyclotomic {
public:
    Cyclotomic() = default; // order 0: a placeholder, only valid as an assignment target
    Cyclotomic(int d, const mpq_class& c);
    Cyclotomic(int d, Poly residue); // reduces mod Phi_d

    static Cyclotomic q_power(int d, long n, const mpq_class& c = 1);

    int order() const noexcept { return d_; }
    // Coefficients of the reduced residue, length phi(d) (zero padded).
    std::vector<mpq_class> coefficients() const;
    const Poly& residue() const noexcept { return r_; }
    bool is_zero() const noexcept { return r_.is_zero(); }
    bool is_one() const noexcept;

    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Cyclotomic& o);
    Cyclotomic& operator/=(const Cyclotomic& o);
    Cyclotomic inverse() const;
    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
    friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
        return a.d_ == b.d_ && a.r_ == b.r_;
    }

    std::string to_string() const { return r_.to_string(); }
    bool needs_parens() const;

private:
    void check_same_order(const Cyclotomic& o) const;
    int d_ = 0;
    Poly r_;
};

// Field contexts. The algebra engines are templates over these; a field hands
// out constants (q powers, integers) in its own representation.
class RationalFunctionField {
public:
    using value_type = RationalFunction;

    value_type zero() const { return {}; }
    value_type one() const { return value_type(1); }
    value_type from_int(long n) const { return value_type(n); }
    value_type from_rational(const mpq_class& c) const { return value_type(c); }
    value_type q_pow(long n) const { return RationalFunction::q_power(n); }
    std::string name() const { return "Q(q)"; }
    bool operator==(const RationalFunctionField&) const { return true; }
};

class CyclotomicField {
public:
    using value_type = Cyclotomic;

    // Throws InvalidOrder unless d is odd and d > 1.
    explicit CyclotomicField(int d);

    int order() const noexcept { return d_; }
    value_type zero() const { return {d_, 0}; }
    value_type one() const { return {d_, 1}; }
    value_type from_int(long n) const { return {d_, mpq_class(n)}; }
    value_type from_rational(const mpq_class& c) const { return {d_, c}; }
    value_type q_pow(long n) const { return Cyclotomic::q_power(d_, n); }
    std::string name() const { return "Q(zeta_" + std::to_string(d_) + ")"; }
    bool operator==(const CyclotomicField& o) const { return d_ == o.d_; }

private:
    int d_;
};

// Quantum integer [m] = (q^m - q^-m) / (q - q^-1).
template <class Field>
typename Field::value_type quantum_int(long m, const Field& field) {
    return (field.q_pow(m) - field.q_pow(-m)) / (field.q_pow(1) - field.q_pow(-1));
}

// [k]! = [1][2]...[k]; in Q(zeta_d) throws DivisorVanishes for k >= d.
RationalFunction quantum_factorial(long k, const RationalFunctionField& field);
Cyclotomic quantum_factorial(long k, const CyclotomicField& field);

// Image of x in Q[q]/Phi_d. Throws DenominatorVanishes if x has a pole at zeta_d.
Cyclotomic specialize(const RationalFunction& x, int d);

// Parse the textual scalar forms produced by to_string (and any scalar
// expression over integers, fractions and q). Defined in parse.cpp.
RationalFunction parse_scalar(const std::string& text, const RationalFunctionField& field);
Cyclotomic parse_scalar(const std::string& text, const CyclotomicField& field);

} // namespace wqa
