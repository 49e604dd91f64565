#include "wqa/algebra.hpp"

namespace wqa {

namespace {

template <class S>
struct Replacement {
    S coeff;
    Word letters;
};

template <class Field>
class Rewriter {
public:
    using S = typename Field::value_type;

    explicit Rewriter(const Algebra<Field>& alg)
        : alg_(alg), f_(alg.field()), s_((f_.q_pow(1) - f_.q_pow(-1)).inverse()) {}

    // Replacement for the redex of length `len` at position p, or empty if none.
    bool redex(const Word& w, std::size_t p, std::size_t& len, std::vector<Replacement<S>>& out) const {
        out.clear();
        const Gen a = w[p];
        if (a == Gen::L) {
            len = 1;
            out.push_back({s_, {Gen::K}});
            out.push_back({-s_, {Gen::Kb}});
            return true;
        }
        if (a == Gen::J && alg_.mod_j()) {
            len = 1;
            out.push_back({f_.one(), {}});
            return true;
        }
        if (p + 1 >= w.size()) return false;
        const Gen b = w[p + 1];
        len = 2;
        auto one = [&](S c, Word r) { out.push_back({std::move(c), std::move(r)}); };
        if (b == Gen::E) {
            switch (a) {
            case Gen::K: one(f_.q_pow(2), {Gen::E, Gen::K}); return true;
            case Gen::Kb: one(f_.q_pow(-2), {Gen::E, Gen::Kb}); return true;
            case Gen::J: one(f_.one(), {Gen::E, Gen::J}); return true;
            case Gen::F:
                one(f_.one(), {Gen::E, Gen::F});
                one(-s_, {Gen::K});
                one(s_, {Gen::Kb});
                return true;
            default: return false;
            }
        }
        if (b == Gen::F) {
            switch (a) {
            case Gen::K: one(f_.q_pow(-2), {Gen::F, Gen::K}); return true;
            case Gen::Kb: one(f_.q_pow(2), {Gen::F, Gen::Kb}); return true;
            case Gen::J: one(f_.one(), {Gen::F, Gen::J}); return true;
            default: return false;
            }
        }
        if ((a == Gen::K && b == Gen::Kb) || (a == Gen::Kb && b == Gen::K)) {
            one(f_.one(), {Gen::J});
            return true;
        }
        if (a == Gen::J && (b == Gen::K || b == Gen::Kb || b == Gen::J)) {
            one(f_.one(), {b});
            return true;
        }
        if (b == Gen::J && (a == Gen::K || a == Gen::Kb)) {
            one(f_.one(), {a});
            return true;
        }
        return false;
    }

    Element<S> run(FreeExpr<S> terms, std::mt19937& rng) const {
        std::vector<Replacement<S>> rep;
        for (;;) {
            // every (word, position) holding a redex
            std::vector<std::pair<const Word*, std::size_t>> sites;
            for (const auto& [w, c] : terms)
                for (std::size_t p = 0; p < w.size(); ++p) {
                    std::size_t len = 0;
                    if (redex(w, p, len, rep)) sites.emplace_back(&w, p);
                }
            if (sites.empty()) break;
            std::uniform_int_distribution<std::size_t> pick(0, sites.size() - 1);
            auto [wp, p] = sites[pick(rng)];
            const Word w = *wp;
            const S c = terms.at(w);
            terms.erase(w);
            std::size_t len = 0;
            redex(w, p, len, rep);
            for (const auto& r : rep) {
                Word nw(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p));
                nw.insert(nw.end(), r.letters.begin(), r.letters.end());
                nw.insert(nw.end(), w.begin() + static_cast<std::ptrdiff_t>(p + len), w.end());
                S nc = c * r.coeff;
                auto [it, inserted] = terms.try_emplace(nw, nc);
                if (!inserted) {
                    it->second += nc;
                    if (it->second.is_zero()) terms.erase(it);
                }
            }
        }
        Element<S> out;
        for (const auto& [w, c] : terms) out.add(to_monomial(w), c);
        return out;
    }

private:
    static Monomial to_monomial(const Word& w) {
        Monomial m;
        for (Gen g : w) {
            switch (g) {
            case Gen::E: ++m.i; break;
            case Gen::F: ++m.j; break;
            case Gen::K: m.tail = Tail::k(m.tail.power + 1); break;
            case Gen::Kb: m.tail = Tail::kb(m.tail.power + 1); break;
            case Gen::J: m.tail = Tail::j(); break;
            case Gen::L: throw Error(ErrorCode::InvalidArgument, "unreduced L letter");
            }
        }
        return m;
    }

    const Algebra<Field>& alg_;
    const Field& f_;
    S s_;
};

} // namespace

template <class Field>
Element<typename Field::value_type> rewrite_randomly(const Algebra<Field>& alg,
                                                     const FreeExpr<typename Field::value_type>& x,
                                                     std::mt19937& rng) {
    return Rewriter<Field>(alg).run(x, rng);
}

template Element<RationalFunction> rewrite_randomly(const Algebra<RationalFunctionField>&,
                                                    const FreeExpr<RationalFunction>&, std::mt19937&);
template Element<Cyclotomic> rewrite_randomly(const Algebra<CyclotomicField>&, const FreeExpr<Cyclotomic>&,
                                              std::mt19937&);

} // namespace wqa
