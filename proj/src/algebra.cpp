#include <algorithm>

#include "wqa/algebra.hpp"

namespace wqa {

const char* gen_name(Gen g) {
    switch (g) {
    case Gen::E: return "E";
    case Gen::F: return "F";
    case Gen::K: return "K";
    case Gen::Kb: return "Kb";
    case Gen::J: return "J";
    case Gen::L: return "L";
    }
    return "?";
}

Tail reduce_j_power(long i, long j) {
    if (i < 0 || j < 0) throw Error(ErrorCode::InvalidArgument, "negative exponent in K^i*Kb^j");
    if (i == j) return i == 0 ? Tail::one() : Tail::j();
    return Tail::k(i - j);
}

template <class Field>
Algebra<Field>::Algebra(Field field, Flavor flavor, bool mod_j)
    : field_(std::move(field)), flavor_(flavor), mod_j_(mod_j) {
    if (mod_j_ && flavor_ != Flavor::W) throw Error(ErrorCode::InvalidArgument, "J = 1 mode needs the w flavor");
    ef_scale_ = (field_.q_pow(1) - field_.q_pow(-1)).inverse();
}

template <class Field>
Monomial Algebra<Field>::reduce(Monomial m) const {
    if (m.tail.kind != Tail::J && m.tail.kind != Tail::One && m.tail.power == 0) m.tail = Tail::one();
    if (mod_j_ && m.tail.kind == Tail::J) m.tail = Tail::one();
    return m;
}

template <class Field>
Tail Algebra<Field>::tail_product(const Tail& a, const Tail& b) const {
    if (mod_j_) return Tail::k(a.weight() + b.weight());
    auto counts = [](const Tail& t) -> std::pair<long, long> {
        switch (t.kind) {
        case Tail::One: return {0, 0};
        case Tail::J: return {1, 1};
        case Tail::K: return {t.power, 0};
        case Tail::Kb: return {0, t.power};
        }
        return {0, 0};
    };
    auto [ka, kba] = counts(a);
    auto [kb, kbb] = counts(b);
    return reduce_j_power(ka + kb, kba + kbb);
}

template <class Field>
typename Algebra<Field>::Elem Algebra<Field>::mono_times_e(const Monomial& m) const {
    // E^i F^j * E, tail-free
    if (m.j == 0) return Elem(Monomial{m.i + 1, 0, {}}, field_.one());
    // E^i F^j E = (E^i F^{j-1} E) F - E^i F^{j-1} (K - Kb)/(q - q^-1)
    Elem head = mono_times_e(Monomial{m.i, m.j - 1, {}});
    Elem out;
    for (const auto& [mm, c] : head.terms()) {
        Scalar s = c * field_.q_pow(-2 * mm.tail.weight());
        out.add(Monomial{mm.i, mm.j + 1, mm.tail}, s);
    }
    out.add(reduce(Monomial{m.i, m.j - 1, Tail::k(1)}), -ef_scale_);
    out.add(reduce(Monomial{m.i, m.j - 1, Tail::kb(1)}), ef_scale_);
    return out;
}

template <class Field>
typename Algebra<Field>::Elem Algebra<Field>::mono_times_gen(const Monomial& m, Gen g) const {
    switch (g) {
    case Gen::K:
        return Elem(Monomial{m.i, m.j, tail_product(m.tail, Tail::k(1))}, field_.one());
    case Gen::Kb:
        return Elem(Monomial{m.i, m.j, tail_product(m.tail, Tail::kb(1))}, field_.one());
    case Gen::J:
        return Elem(reduce(Monomial{m.i, m.j, tail_product(m.tail, Tail::j())}), field_.one());
    case Gen::F:
        return Elem(Monomial{m.i, m.j + 1, m.tail}, field_.q_pow(-2 * m.tail.weight()));
    case Gen::E: {
        // tail * E = q^{2w} E * tail, then move E through F^j
        Elem body = mono_times_e(Monomial{m.i, m.j, {}});
        Elem out;
        const Scalar s = field_.q_pow(2 * m.tail.weight());
        for (const auto& [mm, c] : body.terms())
            out.add(reduce(Monomial{mm.i, mm.j, tail_product(mm.tail, m.tail)}), c * s);
        return out;
    }
    case Gen::L: {
        Elem out = mono_times_gen(m, Gen::K) - mono_times_gen(m, Gen::Kb);
        return out *= ef_scale_;
    }
    }
    throw Error(ErrorCode::InvalidArgument, "unknown generator");
}

template <class Field>
typename Algebra<Field>::Elem Algebra<Field>::mul_gen(const Elem& x, Gen g) const {
    Elem out;
    for (const auto& [m, c] : x.terms()) {
        Elem p = mono_times_gen(m, g);
        for (const auto& [mm, cc] : p.terms()) out.add(mm, cc * c);
    }
    return out;
}

template <class Field>
typename Algebra<Field>::Elem Algebra<Field>::gen(Gen g) const {
    return mul_gen(one(), g);
}

template <class Field>
typename Algebra<Field>::Elem Algebra<Field>::mul(const Elem& x, const Elem& y) const {
    Elem out;
    for (const auto& [m2, c2] : y.terms()) {
        Elem acc = x;
        for (long k = 0; k < m2.i; ++k) acc = mul_gen(acc, Gen::E);
        for (long k = 0; k < m2.j; ++k) acc = mul_gen(acc, Gen::F);
        if (m2.tail.kind != Tail::One) {
            Elem tailed;
            for (const auto& [m, c] : acc.terms())
                tailed.add(reduce(Monomial{m.i, m.j, tail_product(m.tail, m2.tail)}), c);
            acc = std::move(tailed);
        }
        acc *= c2;
        out += acc;
    }
    return out;
}

template <class Field>
typename Algebra<Field>::Elem Algebra<Field>::pow(const Elem& x, long n) const {
    if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative power of an algebra element");
    Elem r = one();
    for (long k = 0; k < n; ++k) r = mul(r, x);
    return r;
}

template <class Field>
typename Algebra<Field>::Elem Algebra<Field>::eval_word(const Word& w) const {
    Elem r = one();
    for (Gen g : w) r = mul_gen(r, g);
    return r;
}

template <class Field>
typename Algebra<Field>::Elem Algebra<Field>::normalize(const Expr& x) const {
    Elem out;
    for (const auto& [w, c] : x) {
        if (flavor_ == Flavor::V) {
            for (std::size_t p = 0; p < w.size(); ++p) {
                if (w[p] != Gen::E && w[p] != Gen::F) continue;
                const bool left = p > 0 && w[p - 1] == Gen::J;
                const bool right = p + 1 < w.size() && w[p + 1] == Gen::J;
                if (!left || !right)
                    throw Error(ErrorCode::UnsupportedWord,
                                std::string("bare ") + gen_name(w[p]) + "v at letter " + std::to_string(p + 1) +
                                    " is not sandwiched between J factors");
            }
        }
        Elem e = eval_word(w);
        e *= c;
        out += e;
    }
    return out;
}

template <class Field>
typename Algebra<Field>::Elem Algebra<Field>::j_conjugate(const Elem& x) const {
    const Elem j = gen(Gen::J);
    return mul(mul(j, x), j);
}

template <class Field>
typename Algebra<Field>::Elem Algebra<Field>::j_product(const Elem& x, const Elem& y) const {
    return mul(mul_gen(x, Gen::J), y);
}

template <class Field>
Word Algebra<Field>::word_of(const Monomial& m) const {
    Word w;
    w.insert(w.end(), static_cast<std::size_t>(m.i), Gen::E);
    w.insert(w.end(), static_cast<std::size_t>(m.j), Gen::F);
    switch (m.tail.kind) {
    case Tail::One: break;
    case Tail::J: w.push_back(Gen::J); break;
    case Tail::K: w.insert(w.end(), static_cast<std::size_t>(m.tail.power), Gen::K); break;
    case Tail::Kb: w.insert(w.end(), static_cast<std::size_t>(m.tail.power), Gen::Kb); break;
    }
    return w;
}

template <class Field>
std::vector<Monomial> Algebra<Field>::basis(long bound) const {
    std::vector<Monomial> out;
    for (long i = 0; i <= bound; ++i)
        for (long j = 0; i + j <= bound; ++j) {
            const long rest = bound - i - j;
            const bool sandwiched = flavor_ == Flavor::V;
            if (!sandwiched || i + j == 0) out.push_back({i, j, Tail::one()});
            if (!mod_j_) out.push_back({i, j, Tail::j()});
            for (long l = 1; l <= rest; ++l) {
                out.push_back({i, j, Tail::k(l)});
                out.push_back({i, j, Tail::kb(l)});
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

template <class Field>
bool Algebra<Field>::is_scalar(const Elem& x) const {
    for (const auto& [m, c] : x.terms())
        if (!(m == Monomial{})) return false;
    return true;
}

template <class Field>
std::string Algebra<Field>::to_string(const Monomial& m) const {
    std::vector<std::string> parts;
    auto power = [](const char* name, long n) {
        return n == 1 ? std::string(name) : std::string(name) + "^" + std::to_string(n);
    };
    const bool v = flavor_ == Flavor::V;
    if (m.i > 0) parts.push_back(power(v ? "Eh" : "E", m.i));
    if (m.j > 0) parts.push_back(power(v ? "Fh" : "F", m.j));
    switch (m.tail.kind) {
    case Tail::One: break;
    case Tail::J:
        if (!v || m.i + m.j == 0) parts.push_back("J");
        break;
    case Tail::K: parts.push_back(power("K", m.tail.power)); break;
    case Tail::Kb: parts.push_back(power("Kb", m.tail.power)); break;
    }
    std::string out;
    for (const auto& p : parts) out += (out.empty() ? "" : "*") + p;
    return out;
}

template <class Field>
std::string Algebra<Field>::to_string(const Elem& x) const {
    if (x.is_zero()) return "0";
    const Scalar one = field_.one();
    const Scalar minus_one = -one;
    std::string out;
    for (const auto& [m, c] : x.terms()) {
        std::string mono = to_string(m);
        std::string term;
        if (mono.empty())
            term = c.to_string();
        else if (c == one)
            term = mono;
        else if (c == minus_one)
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

template class Algebra<RationalFunctionField>;
template class Algebra<CyclotomicField>;

} // namespace wqa
