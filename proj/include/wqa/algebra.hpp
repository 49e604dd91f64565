#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "wqa/coeff.hpp"
#include "wqa/report.hpp"

namespace wqa {

// w: relations with E, F free of J; v: the J-weak presentation, handled on the
// sandwiched alphabet Eh = J*E*J, Fh = J*F*J.
enum class Flavor { W, V };

// L only occurs in the primed presentation where E*F - F*E = L.
enum class Gen : std::uint8_t { E, F, K, Kb, J, L };

using Word = std::vector<Gen>;

const char* gen_name(Gen g);

template <class S>
using FreeExpr = std::map<Word, S>;

struct Tail {
    enum Kind : std::uint8_t { One, J, K, Kb };
    Kind kind = One;
    long power = 0; // >= 1 for K and Kb, 0 otherwise

    static Tail one() { return {}; }
    static Tail j() { return {J, 0}; }
    static Tail k(long l) { return l == 0 ? Tail{} : l > 0 ? Tail{K, l} : Tail{Kb, -l}; }
    static Tail kb(long m) { return k(-m); }

    // Signed K-exponent: K^l -> l, Kb^m -> -m, J and One -> 0.
    long weight() const noexcept { return kind == K ? power : kind == Kb ? -power : 0; }

    auto operator<=>(const Tail&) const = default;
};

// E^i F^j tail
struct Monomial {
    long i = 0;
    long j = 0;
    Tail tail;

    // i + j + power of the tail (J counts 0).
    long degree() const noexcept { return i + j + tail.power; }

    auto operator<=>(const Monomial&) const = default;
};

// K^{i-j} if i > j, J if i = j > 0, Kb^{j-i} if i < j, 1 if i = j = 0.
Tail reduce_j_power(long i, long j);

template <class S>
class Element {
public:
    using Terms = std::map<Monomial, S>;

    Element() = default;
    Element(const Monomial& m, const S& c) { add(m, c); }

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    // Coefficient of m, or `zero` if absent.
    S coeff(const Monomial& m, const S& zero) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? zero : it->second;
    }

    void add(const Monomial& m, const S& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Element& operator+=(const Element& o) {
        for (const auto& [m, c] : o.terms_) add(m, c);
        return *this;
    }
    Element& operator-=(const Element& o) {
        for (const auto& [m, c] : o.terms_) add(m, -c);
        return *this;
    }
    Element& operator*=(const S& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_) c *= s;
        return *this;
    }
    Element operator-() const {
        Element r = *this;
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(Element a, const S& s) { return a *= s; }
    friend Element operator*(const S& s, Element a) { return a *= s; }
    friend bool operator==(const Element& a, const Element& b) { return a.terms_ == b.terms_; }

private:
    Terms terms_;
};

template <class Field>
class Algebra {
public:
    using Scalar = typename Field::value_type;
    using Elem = Element<Scalar>;
    using Expr = FreeExpr<Scalar>;

    // mod_j: additionally impose J = 1 (only meaningful for the w flavor).
    explicit Algebra(Field field, Flavor flavor = Flavor::W, bool mod_j = false);

    const Field& field() const noexcept { return field_; }
    Flavor flavor() const noexcept { return flavor_; }
    bool mod_j() const noexcept { return mod_j_; }

    Elem zero() const { return {}; }
    Elem one() const { return scalar(field_.one()); }
    Elem scalar(const Scalar& c) const { return Elem(Monomial{}, c); }
    Elem monomial(const Monomial& m) const { return Elem(reduce(m), field_.one()); }
    // Normal form of a single generator letter, with no flavor checks.
    Elem gen(Gen g) const;

    Elem mul(const Elem& x, const Elem& y) const;
    Elem mul_gen(const Elem& x, Gen g) const; // x * g
    Elem pow(const Elem& x, long n) const;
    // Product of the letters, left to right, with no flavor checks.
    Elem eval_word(const Word& w) const;

    // Flavor-aware normalization of a free expression. In the v flavor every
    // E or F letter must have J on both sides, otherwise UnsupportedWord.
    Elem normalize(const Expr& x) const;
    Expr parse(const std::string& text, bool allow_l = false) const;
    Elem eval(const std::string& text) const { return normalize(parse(text)); }

    Elem j_conjugate(const Elem& x) const;
    Elem j_product(const Elem& x, const Elem& y) const;

    // The letters of a normal monomial, E^i F^j then the tail.
    Word word_of(const Monomial& m) const;
    // Normal-form basis monomials with degree() <= bound. For the v flavor
    // these are the sandwiched monomials Eh^i Fh^j tail with tail != One,
    // plus the unit.
    std::vector<Monomial> basis(long bound) const;

    std::string to_string(const Elem& x) const;
    std::string to_string(const Monomial& m) const;
    std::string scalar_string(const Scalar& c) const { return c.to_string(); }

    bool is_scalar(const Elem& x) const;

private:
    Monomial reduce(Monomial m) const;
    Tail tail_product(const Tail& a, const Tail& b) const;
    // (E^i F^j t) * E as an element
    Elem mono_times_e(const Monomial& m) const;
    Elem mono_times_gen(const Monomial& m, Gen g) const;

    Field field_;
    Flavor flavor_;
    bool mod_j_;
    Scalar ef_scale_; // 1/(q - q^-1)
};

extern template class Algebra<RationalFunctionField>;
extern template class Algebra<CyclotomicField>;

// Confluence probe: rewrites the words of x by applying the defining rules one
// redex at a time, choosing the redex at random, until every word is normal.
template <class Field>
Element<typename Field::value_type> rewrite_randomly(const Algebra<Field>& alg,
                                                     const FreeExpr<typename Field::value_type>& x,
                                                     std::mt19937& rng);

// ---------------------------------------------------------------------------
// Morphisms between presentations.

template <class S>
struct MorphismSpec {
    std::string name;
    bool anti = false;
    std::map<Gen, Element<S>> images;
};

struct RelationSpec {
    std::string lhs;
    std::string rhs;
    bool uses_l = false;
};

// Image of an element of the source algebra, evaluated in the target.
template <class Field>
Element<typename Field::value_type> apply_morphism(const MorphismSpec<typename Field::value_type>& m,
                                                   const Algebra<Field>& source,
                                                   const Element<typename Field::value_type>& x,
                                                   const Algebra<Field>& target);

template <class Field>
Element<typename Field::value_type> apply_morphism(const MorphismSpec<typename Field::value_type>& m,
                                                   const FreeExpr<typename Field::value_type>& x,
                                                   const Algebra<Field>& target);

// For each relation lhs = rhs (parsed in `source`), checks m(lhs) - m(rhs) = 0 in the target.
template <class Field>
Report verify_relations(const MorphismSpec<typename Field::value_type>& m, const Algebra<Field>& source,
                        const std::vector<RelationSpec>& relations, const Algebra<Field>& target);

// Defining relations of the presentations.
std::vector<RelationSpec> relations_w();
std::vector<RelationSpec> relations_v_sandwiched();
std::vector<RelationSpec> relations_w_prime();
std::vector<RelationSpec> relations_sl2_mod_j();

template <class Field>
MorphismSpec<typename Field::value_type> identity_morphism(const Algebra<Field>& alg);
template <class Field>
MorphismSpec<typename Field::value_type> omega(const Algebra<Field>& alg);
// Sandwiched v-generators to their w images: Eh -> E*J, K -> K, Kb -> Kb, J -> J.
template <class Field>
MorphismSpec<typename Field::value_type> chi(const Algebra<Field>& w);
// Primed presentation to w: L -> E*F - F*E.
template <class Field>
MorphismSpec<typename Field::value_type> psi(const Algebra<Field>& w);
// w to the primed presentation (generators fixed).
template <class Field>
MorphismSpec<typename Field::value_type> phi(const Algebra<Field>& w);

} // namespace wqa
