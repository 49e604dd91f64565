#include "wqa/algebra.hpp"

namespace wqa {

namespace {

template <class Field>
Element<typename Field::value_type> image_of_word(const MorphismSpec<typename Field::value_type>& m,
                                                  const Word& w, const Algebra<Field>& target) {
    auto r = target.one();
    auto step = [&](Gen g) {
        auto it = m.images.find(g);
        if (it == m.images.end())
            throw Error(ErrorCode::InvalidArgument,
                        "morphism '" + m.name + "' has no image for generator " + gen_name(g));
        r = target.mul(r, it->second);
    };
    if (m.anti)
        for (auto it = w.rbegin(); it != w.rend(); ++it) step(*it);
    else
        for (Gen g : w) step(g);
    return r;
}

} // namespace

template <class Field>
Element<typename Field::value_type> apply_morphism(const MorphismSpec<typename Field::value_type>& m,
                                                   const Algebra<Field>& source,
                                                   const Element<typename Field::value_type>& x,
                                                   const Algebra<Field>& target) {
    Element<typename Field::value_type> out;
    for (const auto& [mono, c] : x.terms()) out += image_of_word(m, source.word_of(mono), target) * c;
    return out;
}

template <class Field>
Element<typename Field::value_type> apply_morphism(const MorphismSpec<typename Field::value_type>& m,
                                                   const FreeExpr<typename Field::value_type>& x,
                                                   const Algebra<Field>& target) {
    Element<typename Field::value_type> out;
    for (const auto& [w, c] : x) out += image_of_word(m, w, target) * c;
    return out;
}

template <class Field>
Report verify_relations(const MorphismSpec<typename Field::value_type>& m, const Algebra<Field>& source,
                        const std::vector<RelationSpec>& relations, const Algebra<Field>& target) {
    Report rep;
    rep.name = "relations under " + m.name;
    for (const auto& rel : relations) {
        const std::string label = rel.lhs + " = " + rel.rhs;
        try {
            auto lhs = apply_morphism(m, source.parse(rel.lhs, rel.uses_l), target);
            auto rhs = apply_morphism(m, source.parse(rel.rhs, rel.uses_l), target);
            auto diff = lhs - rhs;
            rep.add(label, "0", target.to_string(diff), diff.is_zero());
        } catch (const Error& e) {
            rep.add(label, "0", std::string(error_code_name(e.code())) + ": " + e.what(), false);
        }
    }
    return rep;
}

std::vector<RelationSpec> relations_w() {
    return {
        {"K*Kb", "Kb*K"},
        {"K*Kb*K", "K"},
        {"Kb*K*Kb", "Kb"},
        {"K*E", "q^2*E*K"},
        {"Kb*E", "q^-2*E*Kb"},
        {"K*F", "q^-2*F*K"},
        {"Kb*F", "q^2*F*Kb"},
        {"E*F - F*E", "(K - Kb)/(q - q^-1)"},
    };
}

std::vector<RelationSpec> relations_v_sandwiched() {
    return {
        {"K*Kb", "Kb*K"},
        {"K*Kb*K", "K"},
        {"Kb*K*Kb", "Kb"},
        {"K*Eh*Kb", "q^2*Eh"},
        {"K*Fh*Kb", "q^-2*Fh"},
        {"Eh*J*Fh - Fh*J*Eh", "(K - Kb)/(q - q^-1)"},
    };
}

std::vector<RelationSpec> relations_w_prime() {
    return {
        {"K*Kb", "Kb*K", true},
        {"K*Kb*K", "K", true},
        {"Kb*K*Kb", "Kb", true},
        {"K*E", "q^2*E*K", true},
        {"Kb*E", "q^-2*E*Kb", true},
        {"K*F", "q^-2*F*K", true},
        {"Kb*F", "q^2*F*Kb", true},
        {"L*E - E*L", "q*(E*K + Kb*E)", true},
        {"L*F - F*L", "-q^-1*(F*K + Kb*F)", true},
        {"E*F - F*E", "L", true},
        {"(q - q^-1)*L", "K - Kb", true},
    };
}

std::vector<RelationSpec> relations_sl2_mod_j() {
    return {
        {"Kb*K", "1"},
        {"K*Kb", "1"},
        {"K*E*Kb", "q^2*E"},
        {"K*F*Kb", "q^-2*F"},
        {"E*F - F*E", "(K - Kb)/(q - q^-1)"},
    };
}

template <class Field>
MorphismSpec<typename Field::value_type> identity_morphism(const Algebra<Field>& alg) {
    MorphismSpec<typename Field::value_type> m;
    m.name = "id";
    for (Gen g : {Gen::E, Gen::F, Gen::K, Gen::Kb, Gen::J}) m.images[g] = alg.gen(g);
    return m;
}

template <class Field>
MorphismSpec<typename Field::value_type> omega(const Algebra<Field>& alg) {
    MorphismSpec<typename Field::value_type> m;
    m.name = alg.flavor() == Flavor::V ? "omega_v" : "omega_w";
    // On the sandwiched alphabet the images of E, F are themselves sandwiched.
    const Word e = alg.flavor() == Flavor::V ? Word{Gen::J, Gen::E, Gen::J} : Word{Gen::E};
    const Word f = alg.flavor() == Flavor::V ? Word{Gen::J, Gen::F, Gen::J} : Word{Gen::F};
    m.images[Gen::E] = alg.eval_word(f);
    m.images[Gen::F] = alg.eval_word(e);
    m.images[Gen::K] = alg.gen(Gen::Kb);
    m.images[Gen::Kb] = alg.gen(Gen::K);
    m.images[Gen::J] = alg.gen(Gen::J);
    return m;
}

template <class Field>
MorphismSpec<typename Field::value_type> chi(const Algebra<Field>& w) {
    MorphismSpec<typename Field::value_type> m;
    m.name = "chi";
    for (Gen g : {Gen::E, Gen::F, Gen::K, Gen::Kb, Gen::J}) m.images[g] = w.eval_word({Gen::J, g, Gen::J});
    return m;
}

template <class Field>
MorphismSpec<typename Field::value_type> psi(const Algebra<Field>& w) {
    MorphismSpec<typename Field::value_type> m = identity_morphism(w);
    m.name = "psi";
    m.images[Gen::L] = w.eval_word({Gen::E, Gen::F}) - w.eval_word({Gen::F, Gen::E});
    return m;
}

template <class Field>
MorphismSpec<typename Field::value_type> phi(const Algebra<Field>& w) {
    MorphismSpec<typename Field::value_type> m = identity_morphism(w);
    m.name = "phi";
    return m;
}

#define WQA_INSTANTIATE(F)                                                                                     \
    template Element<F::value_type> apply_morphism(const MorphismSpec<F::value_type>&, const Algebra<F>&,     \
                                                   const Element<F::value_type>&, const Algebra<F>&);         \
    template Element<F::value_type> apply_morphism(const MorphismSpec<F::value_type>&,                       \
                                                   const FreeExpr<F::value_type>&, const Algebra<F>&);        \
    template Report verify_relations(const MorphismSpec<F::value_type>&, const Algebra<F>&,                  \
                                     const std::vector<RelationSpec>&, const Algebra<F>&);                    \
    template MorphismSpec<F::value_type> identity_morphism(const Algebra<F>&);                               \
    template MorphismSpec<F::value_type> omega(const Algebra<F>&);                                           \
    template MorphismSpec<F::value_type> chi(const Algebra<F>&);                                             \
    template MorphismSpec<F::value_type> psi(const Algebra<F>&);                                             \
    template MorphismSpec<F::value_type> phi(const Algebra<F>&);

WQA_INSTANTIATE(RationalFunctionField)
WQA_INSTANTIATE(CyclotomicField)

#undef WQA_INSTANTIATE

} // namespace wqa
