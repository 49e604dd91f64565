#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "wqa/algebra.hpp"

namespace wqa {

// Rank-2 or rank-3 tensor over normal-form monomials.
template <class S>
class Tensor {
public:
    using Key = std::vector<Monomial>;
    using Terms = std::map<Key, S>;

    explicit Tensor(int rank = 2) : rank_(rank) {}

    int rank() const noexcept { return rank_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    void add(const Key& k, const S& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    Tensor& operator+=(const Tensor& o) {
        for (const auto& [k, c] : o.terms_) add(k, c);
        return *this;
    }
    Tensor& operator-=(const Tensor& o) {
        for (const auto& [k, c] : o.terms_) add(k, -c);
        return *this;
    }
    Tensor& operator*=(const S& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [k, c] : terms_) c *= s;
        return *this;
    }
    friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
    friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
    friend Tensor operator*(Tensor a, const S& s) { return a *= s; }
    friend bool operator==(const Tensor& a, const Tensor& b) { return a.rank_ == b.rank_ && a.terms_ == b.terms_; }

private:
    int rank_;
    Terms terms_;
};

// Coproduct, counit and weak antipode of the w or v algebra (chosen by the
// algebra's flavor). In the v flavor the E and F letters stand for the
// sandwiched generators.
template <class Field>
class Hopf {
public:
    using Scalar = typename Field::value_type;
    using Elem = Element<Scalar>;
    using Ten = Tensor<Scalar>;
    using Endo = std::function<Elem(const Elem&)>;

    explicit Hopf(Algebra<Field> alg);

    const Algebra<Field>& algebra() const noexcept { return alg_; }
    Flavor flavor() const noexcept { return alg_.flavor(); }

    Ten tensor(const Elem& a, const Elem& b) const;
    Ten tensor(const Elem& a, const Elem& b, const Elem& c) const;
    Ten mul(const Ten& a, const Ten& b) const; // leg-wise product

    Ten coproduct_gen(Gen g) const;
    Ten coproduct_word(const Word& w) const;
    Ten coproduct(const Elem& x) const;
    Ten coproduct_left(const Elem& x) const;  // (D (x) id) D
    Ten coproduct_right(const Elem& x) const; // (id (x) D) D
    // Apply f to one leg of a tensor.
    Ten apply_leg(const Ten& t, int leg, const Endo& f) const;
    Ten apply_coproduct_leg(const Ten& t, int leg) const;
    // Multiply the legs out.
    Elem contract(const Ten& t) const;

    Scalar counit(const Elem& x) const;
    Elem antipode(const Elem& x) const;
    Elem e_map(const Elem& x) const { return alg_.j_conjugate(x); }
    Elem identity(const Elem& x) const { return x; }
    // Unit after counit.
    Elem unit_counit(const Elem& x) const { return alg_.scalar(counit(x)); }

    const MorphismSpec<Scalar>& antipode_spec() const noexcept { return t_spec_; }

    Elem convolve(const Endo& f, const Endo& g, const Elem& x) const;
    Elem convolve(const Endo& f, const Endo& g, const Endo& h, const Elem& x) const;

    // (T^2(x), K x Kb)
    std::pair<Elem, Elem> antipode_square(const Elem& x) const;

    std::string to_string(const Ten& t) const;
    std::string key_string(const typename Ten::Key& k) const;

private:
    Algebra<Field> alg_;
    MorphismSpec<Scalar> t_spec_;
};

extern template class Hopf<RationalFunctionField>;
extern template class Hopf<CyclotomicField>;

// Per-monomial checks over the basis of the hopf's algebra up to `bound`.
template <class Field>
Report check_weak_antipode(const Hopf<Field>& h, long bound);
template <class Field>
Report check_antipode_square(const Hopf<Field>& h, long bound);
template <class Field>
Report check_coassociativity(const Hopf<Field>& h, long bound);
template <class Field>
Report check_counit_law(const Hopf<Field>& h, long bound);
// Coproduct, counit and antipode images of the defining relations.
template <class Field>
Report check_structure_relations(const Hopf<Field>& h);
// The antipode relations in their printed T(x)T(y) form.
template <class Field>
Report check_antipode_relations_printed(const Hopf<Field>& h);
// D(xy) = D(x)D(y) and T(xy) = T(y)T(x) on random pairs of basis monomials.
template <class Field>
Report check_multiplicativity(const Hopf<Field>& h, int samples, long bound, unsigned seed);
// D_v(x) = D_w(e(x)), T_v(x) = T_w(e(x)), eps_v(x) = eps_w(e(x)) on sandwiched monomials.
template <class Field>
Report check_wv_connection(const Hopf<Field>& w, const Hopf<Field>& v, long bound);

template <class Field>
bool grouplike_check(const Hopf<Field>& h, long i, long j);
// Basis monomials x with D(x) = x (x) x.
template <class Field>
std::vector<Monomial> grouplike_set(const Hopf<Field>& h, long bound);
template <class Field>
Report grouplike_nonmembers(const Hopf<Field>& h, long bound);
template <class Field>
Report regular_monoid_check(const Hopf<Field>& h, long bound);

// Witness that t has tensor rank at least two: a nonzero 2x2 minor given by
// two left legs and two right legs. Empty if t is zero or rank one.
template <class S>
std::optional<std::pair<std::pair<Monomial, Monomial>, std::pair<Monomial, Monomial>>> rank_two_witness(
    const Tensor<S>& t);

} // namespace wqa
