#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "wqa/algebra.hpp"

namespace wqa {

// Ring structure handed to the generic skew-polynomial code.
template <class R>
struct RingOps {
    R zero;
    R one;
    std::function<R(const R&, const R&)> add;
    std::function<R(const R&, const R&)> mul;
    std::function<R(const R&)> neg;
    std::function<bool(const R&)> is_zero;
};

template <class R>
struct EndoPair {
    std::function<R(const R&)> alpha;
    std::function<R(const R&)> delta;
    std::function<R(const R&)> alpha_inverse; // empty when alpha is not invertible
};

// sum_i coeffs[i] t^i with left coefficients; no trailing zeros. degree() of
// the zero polynomial is -1, standing in for -infinity.
template <class R>
struct SkewPoly {
    std::vector<R> coeffs;
    long degree() const noexcept { return static_cast<long>(coeffs.size()) - 1; }
    bool is_zero() const noexcept { return coeffs.empty(); }
};

template <class R>
class OreExtension {
public:
    using Poly = SkewPoly<R>;

    OreExtension(RingOps<R> base, EndoPair<R> endos) : base_(std::move(base)), endos_(std::move(endos)) {}

    const RingOps<R>& base() const noexcept { return base_; }
    const EndoPair<R>& endos() const noexcept { return endos_; }

    Poly constant(const R& a) const { return monomial(a, 0); }
    Poly monomial(const R& a, long n) const {
        Poly p;
        if (base_.is_zero(a)) return p;
        p.coeffs.assign(static_cast<std::size_t>(n) + 1, base_.zero);
        p.coeffs.back() = a;
        return p;
    }
    Poly t_power(long n) const { return monomial(base_.one, n); }

    // S_{n,k}(a): the sum of all compositions of k copies of delta and n-k of alpha.
    R snk(long n, long k, const R& a) const {
        if (n < 0 || k < 0 || k > n)
            throw Error(ErrorCode::IndexOutOfRange,
                        "S_{n,k} needs 0 <= k <= n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
        return snk_table(n, a)[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
    }
    // rows[p][k] = S_{p,k}(a) for 0 <= k <= p <= n
    std::vector<std::vector<R>> snk_table(long n, const R& a) const {
        std::vector<std::vector<R>> rows;
        rows.push_back({a});
        for (long p = 1; p <= n; ++p) {
            const auto& prev = rows.back();
            std::vector<R> row;
            for (long k = 0; k <= p; ++k) {
                R v = base_.zero;
                if (k < p) v = base_.add(v, endos_.alpha(prev[static_cast<std::size_t>(k)]));
                if (k > 0) v = base_.add(v, endos_.delta(prev[static_cast<std::size_t>(k - 1)]));
                row.push_back(std::move(v));
            }
            rows.push_back(std::move(row));
        }
        return rows;
    }

    Poly add(const Poly& p, const Poly& q) const {
        Poly r;
        r.coeffs.resize(std::max(p.coeffs.size(), q.coeffs.size()), base_.zero);
        for (std::size_t i = 0; i < p.coeffs.size(); ++i) r.coeffs[i] = p.coeffs[i];
        for (std::size_t i = 0; i < q.coeffs.size(); ++i) r.coeffs[i] = base_.add(r.coeffs[i], q.coeffs[i]);
        return trim(std::move(r));
    }
    Poly neg(const Poly& p) const {
        Poly r = p;
        for (auto& c : r.coeffs) c = base_.neg(c);
        return r;
    }
    Poly sub(const Poly& p, const Poly& q) const { return add(p, neg(q)); }

    // c_i = sum_p a_p sum_k S_{p,k}(b_{i-p+k})
    Poly mul(const Poly& p, const Poly& q) const {
        if (p.is_zero() || q.is_zero()) return {};
        const long n = p.degree();
        const long m = q.degree();
        std::vector<std::vector<std::vector<R>>> tables;
        for (const auto& b : q.coeffs) tables.push_back(snk_table(n, b));
        Poly r;
        r.coeffs.assign(static_cast<std::size_t>(n + m) + 1, base_.zero);
        for (long pp = 0; pp <= n; ++pp) {
            const R& a = p.coeffs[static_cast<std::size_t>(pp)];
            if (base_.is_zero(a)) continue;
            for (long bi = 0; bi <= m; ++bi)
                for (long k = 0; k <= pp; ++k) {
                    const R& s = tables[static_cast<std::size_t>(bi)][static_cast<std::size_t>(pp)]
                                       [static_cast<std::size_t>(k)];
                    if (base_.is_zero(s)) continue;
                    auto& c = r.coeffs[static_cast<std::size_t>(pp - k + bi)];
                    c = base_.add(c, base_.mul(a, s));
                }
        }
        return trim(std::move(r));
    }

    bool equal(const Poly& p, const Poly& q) const { return sub(p, q).is_zero(); }

    // Right coefficients b with p = sum_i t^i b_i.
    std::vector<R> right_form(Poly p) const {
        if (!endos_.alpha_inverse) throw Error(ErrorCode::AlphaNotInvertible, "alpha has no inverse");
        std::vector<R> b(p.coeffs.size(), base_.zero);
        while (!p.is_zero()) {
            const long n = p.degree();
            R a = p.coeffs.back();
            for (long k = 0; k < n; ++k) a = endos_.alpha_inverse(a);
            if (base_.is_zero(a)) throw Error(ErrorCode::AlphaNotInvertible, "alpha inverse annihilated a coefficient");
            b[static_cast<std::size_t>(n)] = a;
            p = sub(p, tn_times(n, a));
            if (p.degree() >= n) throw Error(ErrorCode::AlphaNotInvertible, "supplied inverse does not invert alpha");
        }
        return b;
    }
    Poly left_form(const std::vector<R>& b) const {
        Poly r;
        for (std::size_t i = 0; i < b.size(); ++i) r = add(r, tn_times(static_cast<long>(i), b[i]));
        return r;
    }
    // t^n a = sum_k S_{n,k}(a) t^{n-k}
    Poly tn_times(long n, const R& a) const {
        const auto rows = snk_table(n, a);
        Poly r;
        r.coeffs.assign(static_cast<std::size_t>(n) + 1, base_.zero);
        for (long k = 0; k <= n; ++k)
            r.coeffs[static_cast<std::size_t>(n - k)] = rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
        return trim(std::move(r));
    }

    // The extension itself as a ring, for iterating the construction.
    RingOps<Poly> ring() const {
        RingOps<Poly> ops;
        ops.zero = Poly{};
        ops.one = constant(base_.one);
        ops.add = [this](const Poly& a, const Poly& b) { return add(a, b); };
        ops.mul = [this](const Poly& a, const Poly& b) { return mul(a, b); };
        ops.neg = [this](const Poly& a) { return neg(a); };
        ops.is_zero = [](const Poly& a) { return a.is_zero(); };
        return ops;
    }

private:
    Poly trim(Poly p) const {
        while (!p.coeffs.empty() && base_.is_zero(p.coeffs.back())) p.coeffs.pop_back();
        return p;
    }

    RingOps<R> base_;
    EndoPair<R> endos_;
};

// Composition-sum definition of S_{n,k}, by enumeration.
template <class R>
R snk_bruteforce(long n, long k, const R& a, const RingOps<R>& ring, const EndoPair<R>& e) {
    if (n < 0 || k < 0 || k > n) throw Error(ErrorCode::IndexOutOfRange, "S_{n,k} needs 0 <= k <= n");
    R sum = ring.zero;
    for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
        if (__builtin_popcountl(mask) != k) continue;
        R v = a;
        for (long bit = 0; bit < n; ++bit) v = (mask >> bit & 1UL) ? e.delta(v) : e.alpha(v);
        sum = ring.add(sum, v);
    }
    return sum;
}

// ---------------------------------------------------------------------------
// w-algebra as an iterated weak Ore extension:
//   A0 = span of tails, A1 = A0[F; alpha1, 0], A2 = A1[E; alpha2, delta].

template <class S>
using TailSum = std::map<Tail, S>;

template <class Field>
class UqwByOre {
public:
    using Scalar = typename Field::value_type;
    using A0 = TailSum<Scalar>;
    using A1 = SkewPoly<A0>;
    using A2 = SkewPoly<A1>;

    explicit UqwByOre(Field field);

    const Field& field() const noexcept { return field_; }
    const OreExtension<A0>& a1() const noexcept { return *ext1_; }
    const OreExtension<A1>& a2() const noexcept { return *ext2_; }
    const RingOps<A0>& a0() const noexcept { return ext1_->base(); }

    A0 tail(const Tail& t, const Scalar& c) const;
    A2 gen(Gen g) const;
    A2 scalar(const Scalar& c) const;
    A2 mul(const A2& x, const A2& y) const { return ext2_->mul(x, y); }
    A2 add(const A2& x, const A2& y) const { return ext2_->add(x, y); }
    A2 from_monomial(const Monomial& m) const; // E^i F^j tail
    A2 from_element(const Element<Scalar>& x) const;
    // Coefficients over the basis tail F^j E^i.
    std::map<std::tuple<long, long, Tail>, Scalar> coefficients(const A2& x) const;
    Element<Scalar> to_element(const A2& x, const Algebra<Field>& w) const;
    std::string to_string(const A2& x) const;

private:
    Field field_;
    std::shared_ptr<OreExtension<A0>> ext1_;
    std::shared_ptr<OreExtension<A1>> ext2_;
};

extern template class UqwByOre<RationalFunctionField>;
extern template class UqwByOre<CyclotomicField>;

// Products of random basis pairs computed in both engines.
template <class Field>
Report crosscheck_engines(const Algebra<Field>& w, int samples, long bound, unsigned seed);

// Products of chosen pairs, given as expressions in the w alphabet.
template <class Field>
Report crosscheck_pairs(const Algebra<Field>& w, const std::vector<std::pair<std::string, std::string>>& pairs);

} // namespace wqa
