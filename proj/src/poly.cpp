#include <map>
#include <mutex>
#include <sstream>

#include "wqa/coeff.hpp"

namespace wqa {

Poly::Poly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) {
    for (auto& c : c_) c.canonicalize();
    trim();
}

Poly Poly::constant(const mpq_class& c) { return monomial(c, 0); }

Poly Poly::monomial(const mpq_class& c, std::size_t degree) {
    Poly p;
    if (c != 0) {
        p.c_.assign(degree + 1, mpq_class(0));
        p.c_[degree] = c;
    }
    return p;
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpq_class Poly::coeff(std::size_t k) const { return k < c_.size() ? c_[k] : mpq_class(0); }

std::size_t Poly::valuation() const noexcept {
    for (std::size_t k = 0; k < c_.size(); ++k)
        if (c_[k] != 0) return k;
    return 0;
}

bool Poly::is_monomial() const noexcept { return !c_.empty() && valuation() + 1 == c_.size(); }

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), mpq_class(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), mpq_class(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

Poly& Poly::operator*=(const mpq_class& s) {
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    Poly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.trim();
    return r;
}

Poly Poly::shifted(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    Poly r;
    r.c_.assign(k, mpq_class(0));
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
}

Poly Poly::unshifted(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    Poly r;
    r.c_.assign(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end());
    return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
    if (divisor.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
    Poly rem = *this;
    if (rem.degree() < divisor.degree()) return {Poly{}, rem};
    Poly quot;
    quot.c_.assign(static_cast<std::size_t>(rem.degree() - divisor.degree() + 1), mpq_class(0));
    const mpq_class inv_lead = 1 / divisor.lead();
    while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
        const auto shift = static_cast<std::size_t>(rem.degree() - divisor.degree());
        mpq_class f = rem.lead() * inv_lead;
        quot.c_[shift] = f;
        for (std::size_t k = 0; k < divisor.c_.size(); ++k) rem.c_[shift + k] -= f * divisor.c_[k];
        rem.trim();
    }
    quot.trim();
    return {quot, rem};
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return *this * mpq_class(1 / lead());
}

Poly Poly::gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a.mod(b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

std::tuple<Poly, Poly, Poly> Poly::xgcd(const Poly& a, const Poly& b) {
    Poly r0 = a, r1 = b;
    Poly s0 = constant(1), s1;
    Poly t0, t1 = constant(1);
    while (!r1.is_zero()) {
        auto [quot, rem] = r0.divmod(r1);
        r0 = std::move(r1);
        r1 = std::move(rem);
        Poly s2 = s0 - quot * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        Poly t2 = t0 - quot * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    const mpq_class inv = 1 / r0.lead();
    return {r0 * inv, s0 * inv, t0 * inv};
}

namespace {

std::string term_string(const mpq_class& c, long power) {
    std::string var;
    if (power == 1)
        var = "q";
    else if (power != 0)
        var = "q^" + std::to_string(power);
    if (var.empty()) return c.get_str();
    if (c == 1) return var;
    if (c == -1) return "-" + var;
    return c.get_str() + "*" + var;
}

} // namespace

std::string Poly::to_string(long offset) const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = c_.size(); k-- > 0;) {
        if (c_[k] == 0) continue;
        std::string t = term_string(c_[k], static_cast<long>(k) + offset);
        if (out.empty())
            out = t;
        else if (t.front() == '-')
            out += " - " + t.substr(1);
        else
            out += " + " + t;
    }
    return out;
}

namespace {

int gcd_int(int a, int b) { return b == 0 ? a : gcd_int(b, a % b); }

} // namespace

int euler_phi(int d) {
    int n = 0;
    for (int k = 1; k <= d; ++k)
        if (gcd_int(k, d) == 1) ++n;
    return n;
}

const Poly& cyclotomic_polynomial(int d) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<Poly>> cache;
    if (d < 1) throw Error(ErrorCode::InvalidOrder, "cyclotomic order must be positive");
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[d];
    if (!slot) {
        // Phi_d = (q^d - 1) / prod_{e | d, e < d} Phi_e
        Poly p = Poly::monomial(1, static_cast<std::size_t>(d)) - Poly::constant(1);
        for (int e = 1; e < d; ++e) {
            if (d % e != 0) continue;
            auto& sub = cache[e];
            if (!sub) {
                // recursion without re-locking: compute directly
                Poly s = Poly::monomial(1, static_cast<std::size_t>(e)) - Poly::constant(1);
                for (int f = 1; f < e; ++f)
                    if (e % f == 0) s = s.divmod(*cache.at(f)).first;
                sub = std::make_unique<Poly>(std::move(s));
            }
            p = p.divmod(*sub).first;
        }
        slot = std::make_unique<Poly>(std::move(p));
    }
    return *slot;
}

} // namespace wqa
