#include <map>
#include <mutex>

#include "wqa/coeff.hpp"

namespace wqa {

const char* error_code_name(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownSymbol: return "UnknownSymbol";
    case ErrorCode::UnsupportedWord: return "UnsupportedWord";
    case ErrorCode::DivisorVanishes: return "DivisorVanishes";
    case ErrorCode::DenominatorVanishes: return "DenominatorVanishes";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::AlphaNotInvertible: return "AlphaNotInvertible";
    case ErrorCode::InvalidOrder: return "InvalidOrder";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::UnsupportedFormat: return "UnsupportedFormat";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ModeMismatch: return "ModeMismatch";
    }
    return "Unknown";
}

// ---------------------------------------------------------------------------
// RationalFunction

RationalFunction::RationalFunction() : den_(Poly::constant(1)) {}

RationalFunction::RationalFunction(long n) : num_(Poly::constant(n)), den_(Poly::constant(1)) {}

RationalFunction::RationalFunction(const mpq_class& c) : num_(Poly::constant(c)), den_(Poly::constant(1)) {
    canonicalize();
}

RationalFunction::RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    canonicalize();
}

RationalFunction RationalFunction::q_power(long n, const mpq_class& c) {
    RationalFunction r;
    if (n >= 0) {
        r.num_ = Poly::monomial(c, static_cast<std::size_t>(n));
        r.den_ = Poly::constant(1);
    } else {
        r.num_ = Poly::constant(c);
        r.den_ = Poly::monomial(1, static_cast<std::size_t>(-n));
    }
    r.canonicalize();
    return r;
}

namespace {

Poly monomial_gcd(const Poly& mono, const Poly& other) {
    std::size_t k = std::min(mono.valuation(), other.valuation());
    return Poly::monomial(1, k);
}

} // namespace

void RationalFunction::canonicalize() {
    if (den_.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = Poly::constant(1);
        return;
    }
    if (den_.degree() > 0 || num_.degree() > 0) {
        std::size_t shift = 0;
        bool general = true;
        if (den_.is_monomial()) {
            shift = monomial_gcd(den_, num_).degree();
            general = false;
        } else if (num_.is_monomial()) {
            shift = monomial_gcd(num_, den_).degree();
            general = false;
        }
        if (general) {
            Poly g = Poly::gcd(num_, den_);
            if (g.degree() > 0) {
                num_ = num_.divmod(g).first;
                den_ = den_.divmod(g).first;
            }
        } else if (shift > 0) {
            num_ = num_.unshifted(shift);
            den_ = den_.unshifted(shift);
        }
    }
    // Joint content 1 with integer coefficients, positive leading denominator.
    mpz_class lcm_den = 1, gcd_num = 0;
    for (const Poly* p : {&num_, &den_})
        for (const auto& c : p->coeffs()) {
            if (c == 0) continue;
            mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
        }
    for (const Poly* p : {&num_, &den_})
        for (const auto& c : p->coeffs()) {
            if (c == 0) continue;
            mpz_class v = c.get_num() * (lcm_den / c.get_den());
            mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), v.get_mpz_t());
        }
    mpq_class scale(lcm_den, gcd_num);
    scale.canonicalize();
    if (den_.lead() < 0) scale = -scale;
    if (scale != 1) {
        num_ *= scale;
        den_ *= scale;
    }
}

bool RationalFunction::is_one() const noexcept { return num_ == den_; }

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
    }
    canonicalize();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
    if (is_zero()) return *this;
    if (o.is_zero()) return *this = o;
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    canonicalize();
    return *this;
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero in Q(q)");
    return RationalFunction(den_, num_);
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) { return *this *= o.inverse(); }

namespace {

std::size_t term_count(const Poly& p) {
    std::size_t n = 0;
    for (const auto& c : p.coeffs())
        if (c != 0) ++n;
    return n;
}

} // namespace

std::string RationalFunction::to_string() const {
    if (is_laurent()) {
        const long k = static_cast<long>(den_.valuation());
        return (num_ * mpq_class(1 / den_.lead())).to_string(-k);
    }
    std::string n = num_.to_string();
    if (term_count(num_) > 1) n = "(" + n + ")";
    return n + "/(" + den_.to_string() + ")";
}

bool RationalFunction::needs_parens() const { return is_laurent() && term_count(num_) > 1; }

// ---------------------------------------------------------------------------
// Cyclotomic

namespace {

void check_order(int d) {
    if (d <= 1 || d % 2 == 0)
        throw Error(ErrorCode::InvalidOrder, "root-of-unity order must be odd and > 1, got " + std::to_string(d));
}

const std::vector<Poly>& q_power_table(int d) {
    static std::mutex mu;
    static std::map<int, std::vector<Poly>> tables;
    std::lock_guard<std::mutex> lock(mu);
    auto it = tables.find(d);
    if (it == tables.end()) {
        const Poly& phi = cyclotomic_polynomial(d);
        std::vector<Poly> t;
        for (int k = 0; k < d; ++k) t.push_back(Poly::monomial(1, static_cast<std::size_t>(k)).mod(phi));
        it = tables.emplace(d, std::move(t)).first;
    }
    return it->second;
}

} // namespace

Cyclotomic::Cyclotomic(int d, const mpq_class& c) : d_(d), r_(Poly::constant(c)) { check_order(d); }

Cyclotomic::Cyclotomic(int d, Poly residue) : d_(d) {
    check_order(d);
    const Poly& phi = cyclotomic_polynomial(d);
    r_ = residue.degree() >= phi.degree() ? residue.mod(phi) : std::move(residue);
}

Cyclotomic Cyclotomic::q_power(int d, long n, const mpq_class& c) {
    check_order(d);
    long e = n % d;
    if (e < 0) e += d;
    Cyclotomic r;
    r.d_ = d;
    r.r_ = q_power_table(d)[static_cast<std::size_t>(e)] * c;
    return r;
}

std::vector<mpq_class> Cyclotomic::coefficients() const {
    std::vector<mpq_class> out(static_cast<std::size_t>(euler_phi(d_)), mpq_class(0));
    for (std::size_t k = 0; k < r_.coeffs().size(); ++k) out[k] = r_.coeffs()[k];
    return out;
}

bool Cyclotomic::is_one() const noexcept { return r_.degree() == 0 && r_.lead() == 1; }

void Cyclotomic::check_same_order(const Cyclotomic& o) const {
    if (d_ != o.d_)
        throw Error(ErrorCode::ModeMismatch, "mixing Q(zeta_" + std::to_string(d_) + ") and Q(zeta_" +
                                                 std::to_string(o.d_) + ") scalars");
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r = *this;
    r.r_ = -r.r_;
    return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    check_same_order(o);
    r_ += o.r_;
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
    check_same_order(o);
    r_ -= o.r_;
    return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
    check_same_order(o);
    if (r_.is_zero()) return *this;
    Poly p = r_ * o.r_;
    const Poly& phi = cyclotomic_polynomial(d_);
    r_ = p.degree() >= phi.degree() ? p.mod(phi) : std::move(p);
    return *this;
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero in Q(zeta_" + std::to_string(d_) + ")");
    auto [g, s, t] = Poly::xgcd(r_, cyclotomic_polynomial(d_));
    (void)t;
    return Cyclotomic(d_, s * mpq_class(1 / g.lead()));
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& o) {
    check_same_order(o);
    return *this *= o.inverse();
}

bool Cyclotomic::needs_parens() const { return term_count(r_) > 1; }

// ---------------------------------------------------------------------------

CyclotomicField::CyclotomicField(int d) : d_(d) { check_order(d); }

RationalFunction quantum_factorial(long k, const RationalFunctionField& field) {
    if (k < 0) throw Error(ErrorCode::InvalidArgument, "quantum factorial of a negative integer");
    RationalFunction r = field.one();
    for (long m = 2; m <= k; ++m) r *= quantum_int(m, field);
    return r;
}

Cyclotomic quantum_factorial(long k, const CyclotomicField& field) {
    if (k < 0) throw Error(ErrorCode::InvalidArgument, "quantum factorial of a negative integer");
    if (k >= field.order())
        throw Error(ErrorCode::DivisorVanishes, "[" + std::to_string(k) + "]! vanishes at a primitive " +
                                                    std::to_string(field.order()) + "-th root of unity");
    Cyclotomic r = field.one();
    for (long m = 2; m <= k; ++m) r *= quantum_int(m, field);
    return r;
}

Cyclotomic specialize(const RationalFunction& x, int d) {
    check_order(d);
    Cyclotomic den(d, x.den());
    if (den.is_zero())
        throw Error(ErrorCode::DenominatorVanishes,
                    x.to_string() + " has a pole at a primitive " + std::to_string(d) + "-th root of unity");
    return Cyclotomic(d, x.num()) / den;
}

} // namespace wqa
