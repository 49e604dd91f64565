#include "wqa/ore.hpp"

#include <random>

namespace wqa {

namespace {

// K^a Kb^b representative of a tail; J = K Kb.
std::pair<long, long> tail_counts(const Tail& t) {
    switch (t.kind) {
    case Tail::One: return {0, 0};
    case Tail::J: return {1, 1};
    case Tail::K: return {t.power, 0};
    case Tail::Kb: return {0, t.power};
    }
    return {0, 0};
}

Tail tail_mul(const Tail& a, const Tail& b) {
    const auto [ka, ba] = tail_counts(a);
    const auto [kb, bb] = tail_counts(b);
    return reduce_j_power(ka + kb, ba + bb);
}

template <class S>
void add_into(TailSum<S>& acc, const Tail& t, const S& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = acc.try_emplace(t, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) acc.erase(it);
    }
}

template <class Field>
RingOps<TailSum<typename Field::value_type>> tail_ring(const Field& f) {
    using S = typename Field::value_type;
    using A0 = TailSum<S>;
    RingOps<A0> r;
    r.zero = A0{};
    r.one = A0{{Tail::one(), f.one()}};
    r.add = [](const A0& a, const A0& b) {
        A0 out = a;
        for (const auto& [t, c] : b) add_into(out, t, c);
        return out;
    };
    r.mul = [](const A0& a, const A0& b) {
        A0 out;
        for (const auto& [ta, ca] : a)
            for (const auto& [tb, cb] : b) add_into(out, tail_mul(ta, tb), ca * cb);
        return out;
    };
    r.neg = [](const A0& a) {
        A0 out = a;
        for (auto& [t, c] : out) c = -c;
        return out;
    };
    r.is_zero = [](const A0& a) { return a.empty(); };
    return r;
}

// K^l -> q^{2 e l} K^l, Kb^m -> q^{-2 e m} Kb^m, J -> J
template <class Field>
std::function<TailSum<typename Field::value_type>(const TailSum<typename Field::value_type>&)> weight_scaling(
    const Field& f, long e) {
    using A0 = TailSum<typename Field::value_type>;
    return [f, e](const A0& a) {
        A0 out;
        for (const auto& [t, c] : a) add_into(out, t, c * f.q_pow(2 * e * t.weight()));
        return out;
    };
}

} // namespace

template <class Field>
UqwByOre<Field>::UqwByOre(Field field) : field_(std::move(field)) {
    const auto ring0 = tail_ring(field_);
    EndoPair<A0> e1;
    e1.alpha = weight_scaling(field_, 1);
    e1.alpha_inverse = weight_scaling(field_, -1);
    e1.delta = [](const A0&) { return A0{}; };
    ext1_ = std::make_shared<OreExtension<A0>>(ring0, e1);

    EndoPair<A1> e2;
    const auto a2_0 = weight_scaling(field_, -1);
    const auto a2_0_inv = weight_scaling(field_, 1);
    auto coefficientwise = [](std::function<A0(const A0&)> g) {
        return [g](const A1& x) {
            A1 out = x;
            for (auto& c : out.coeffs) c = g(c);
            return out;
        };
    };
    e2.alpha = coefficientwise(a2_0);
    e2.alpha_inverse = coefficientwise(a2_0_inv);
    const auto ext1 = ext1_;
    const Field f = field_;
    e2.delta = [ext1, f](const A1& x) {
        // delta(F^j T) = sum_{i<j} F^{j-1} (q^{-2i} K - q^{2i} Kb)/(q - q^-1) T, moved to left form
        const auto s = (f.q_pow(1) - f.q_pow(-1)).inverse();
        A1 out;
        for (std::size_t j = 1; j < x.coeffs.size(); ++j) {
            const long jl = static_cast<long>(j);
            for (const auto& [t, c] : x.coeffs[j]) {
                // T F^j = q^{-2 w j} F^j T
                const auto swap = f.q_pow(-2 * t.weight() * jl);
                A0 inner;
                for (long i = 0; i < jl; ++i) {
                    add_into(inner, tail_mul(Tail::k(1), t), f.q_pow(-2 * i) * s);
                    add_into(inner, tail_mul(Tail::kb(1), t), -(f.q_pow(2 * i) * s));
                }
                for (auto& [tt, cc] : inner) cc *= c * swap;
                out = ext1->add(out, ext1->mul(ext1->t_power(jl - 1), ext1->constant(inner)));
            }
        }
        return out;
    };
    ext2_ = std::make_shared<OreExtension<A1>>(ext1_->ring(), e2);
}

template <class Field>
typename UqwByOre<Field>::A0 UqwByOre<Field>::tail(const Tail& t, const Scalar& c) const {
    A0 a;
    add_into(a, t, c);
    return a;
}

template <class Field>
typename UqwByOre<Field>::A2 UqwByOre<Field>::scalar(const Scalar& c) const {
    return ext2_->constant(ext1_->constant(tail(Tail::one(), c)));
}

template <class Field>
typename UqwByOre<Field>::A2 UqwByOre<Field>::gen(Gen g) const {
    const Scalar one = field_.one();
    switch (g) {
    case Gen::E: return ext2_->t_power(1);
    case Gen::F: return ext2_->constant(ext1_->t_power(1));
    case Gen::K: return ext2_->constant(ext1_->constant(tail(Tail::k(1), one)));
    case Gen::Kb: return ext2_->constant(ext1_->constant(tail(Tail::kb(1), one)));
    case Gen::J: return ext2_->constant(ext1_->constant(tail(Tail::j(), one)));
    case Gen::L: break;
    }
    throw Error(ErrorCode::InvalidArgument, "no Ore image for generator L");
}

template <class Field>
typename UqwByOre<Field>::A2 UqwByOre<Field>::from_monomial(const Monomial& m) const {
    A2 r = scalar(field_.one());
    for (long k = 0; k < m.i; ++k) r = mul(r, gen(Gen::E));
    for (long k = 0; k < m.j; ++k) r = mul(r, gen(Gen::F));
    if (m.tail.kind != Tail::One) r = mul(r, ext2_->constant(ext1_->constant(tail(m.tail, field_.one()))));
    return r;
}

template <class Field>
typename UqwByOre<Field>::A2 UqwByOre<Field>::from_element(const Element<Scalar>& x) const {
    A2 r;
    for (const auto& [m, c] : x.terms()) r = add(r, mul(scalar(c), from_monomial(m)));
    return r;
}

template <class Field>
std::map<std::tuple<long, long, Tail>, typename Field::value_type> UqwByOre<Field>::coefficients(
    const A2& x) const {
    std::map<std::tuple<long, long, Tail>, Scalar> out;
    for (std::size_t i = 0; i < x.coeffs.size(); ++i)
        for (std::size_t j = 0; j < x.coeffs[i].coeffs.size(); ++j)
            for (const auto& [t, c] : x.coeffs[i].coeffs[j])
                out.emplace(std::make_tuple(static_cast<long>(i), static_cast<long>(j), t), c);
    return out;
}

template <class Field>
Element<typename Field::value_type> UqwByOre<Field>::to_element(const A2& x, const Algebra<Field>& w) const {
    Element<Scalar> out;
    for (const auto& [key, c] : coefficients(x)) {
        const auto& [i, j, t] = key;
        Word word = w.word_of(Monomial{0, 0, t});
        word.insert(word.end(), static_cast<std::size_t>(j), Gen::F);
        word.insert(word.end(), static_cast<std::size_t>(i), Gen::E);
        out += w.eval_word(word) * c;
    }
    return out;
}

template <class Field>
std::string UqwByOre<Field>::to_string(const A2& x) const {
    if (x.is_zero()) return "0";
    const Scalar one = field_.one();
    auto power = [](const char* name, long n) {
        return n == 1 ? std::string(name) : std::string(name) + "^" + std::to_string(n);
    };
    std::string out;
    for (const auto& [key, c] : coefficients(x)) {
        const auto& [i, j, t] = key;
        std::vector<std::string> parts;
        switch (t.kind) {
        case Tail::One: break;
        case Tail::J: parts.push_back("J"); break;
        case Tail::K: parts.push_back(power("K", t.power)); break;
        case Tail::Kb: parts.push_back(power("Kb", t.power)); break;
        }
        if (j > 0) parts.push_back(power("F", j));
        if (i > 0) parts.push_back(power("E", i));
        std::string mono;
        for (const auto& p : parts) mono += (mono.empty() ? "" : "*") + p;
        std::string term;
        if (mono.empty())
            term = c.to_string();
        else if (c == one)
            term = mono;
        else if (c == -one)
            term = "-" + mono;
        else if (c.needs_parens())
            term = "(" + c.to_string() + ")*" + mono;
        else
            term = c.to_string() + "*" + mono;
        if (out.empty())
            out = term;
        else if (term.front() == '-')
            out += " - " + term.substr(1);
        else
            out += " + " + term;
    }
    return out;
}

template class UqwByOre<RationalFunctionField>;
template class UqwByOre<CyclotomicField>;

namespace {

template <class Field>
void compare_pair(const Algebra<Field>& w, const UqwByOre<Field>& ore, const Element<typename Field::value_type>& x,
                  const Element<typename Field::value_type>& y, Report& rep) {
    const std::string in = "(" + w.to_string(x) + ") * (" + w.to_string(y) + ")";
    try {
        const auto direct = w.mul(x, y);
        const auto via = ore.to_element(ore.mul(ore.from_element(x), ore.from_element(y)), w);
        rep.add(in, w.to_string(direct), w.to_string(via), direct == via);
    } catch (const Error& e) {
        rep.add(in, "agreement", std::string(error_code_name(e.code())) + ": " + e.what(), false);
    }
}

} // namespace

template <class Field>
Report crosscheck_engines(const Algebra<Field>& w, int samples, long bound, unsigned seed) {
    if (w.flavor() != Flavor::W || w.mod_j()) throw Error(ErrorCode::ModeMismatch, "Ore model covers the w algebra");
    const UqwByOre<Field> ore(w.field());
    const auto basis = w.basis(bound);
    std::mt19937 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    Report rep;
    rep.name = "Ore extension vs normal-form engine";
    for (int s = 0; s < samples; ++s) {
        const auto x = w.monomial(basis[pick(rng)]);
        const auto y = w.monomial(basis[pick(rng)]);
        compare_pair(w, ore, x, y, rep);
    }
    return rep;
}

template <class Field>
Report crosscheck_pairs(const Algebra<Field>& w, const std::vector<std::pair<std::string, std::string>>& pairs) {
    if (w.flavor() != Flavor::W || w.mod_j()) throw Error(ErrorCode::ModeMismatch, "Ore model covers the w algebra");
    const UqwByOre<Field> ore(w.field());
    Report rep;
    rep.name = "Ore extension vs normal-form engine";
    for (const auto& [a, b] : pairs) compare_pair(w, ore, w.eval(a), w.eval(b), rep);
    return rep;
}

template Report crosscheck_engines(const Algebra<RationalFunctionField>&, int, long, unsigned);
template Report crosscheck_engines(const Algebra<CyclotomicField>&, int, long, unsigned);
template Report crosscheck_pairs(const Algebra<RationalFunctionField>&,
                                 const std::vector<std::pair<std::string, std::string>>&);
template Report crosscheck_pairs(const Algebra<CyclotomicField>&,
                                 const std::vector<std::pair<std::string, std::string>>&);

} // namespace wqa
