#include "wqa/suites.hpp"

#include <algorithm>
#include <random>

#include "wqa/hopf.hpp"
#include "wqa/ore.hpp"
#include "wqa/quotient.hpp"

namespace wqa {

void validate(const RunConfig& cfg) {
    if (cfg.degree_bound < 1) throw Error(ErrorCode::InvalidArgument, "degree bound must be at least 1");
    if (cfg.samples < 1) throw Error(ErrorCode::InvalidArgument, "sample count must be at least 1");
    if (cfg.d <= 1 || cfg.d % 2 == 0)
        throw Error(ErrorCode::InvalidOrder, "d must be odd and > 1, got " + std::to_string(cfg.d));
}

namespace {

template <class F>
Report with_field(const RunConfig& cfg, F&& body) {
    validate(cfg);
    if (cfg.mode == Mode::Cyclotomic) return body(CyclotomicField(cfg.d));
    return body(RationalFunctionField());
}

template <class Field>
Hopf<Field> hopf_of(const Field& f, bool v) {
    return Hopf<Field>(Algebra<Field>(f, v ? Flavor::V : Flavor::W));
}

std::string mode_tag(const RunConfig& cfg) {
    return cfg.mode == Mode::Cyclotomic ? "cyclotomic d=" + std::to_string(cfg.d) : "generic q";
}

template <class Field>
FreeExpr<typename Field::value_type> random_expr(const Field& f, std::mt19937& rng, std::size_t max_len) {
    static const Gen letters[] = {Gen::E, Gen::F, Gen::K, Gen::Kb, Gen::J};
    std::uniform_int_distribution<int> nterms(1, 3), coef(-3, 3), letter(0, 4);
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    FreeExpr<typename Field::value_type> x;
    for (int t = nterms(rng); t > 0; --t) {
        Word w(len(rng));
        for (auto& g : w) g = letters[letter(rng)];
        const int c = coef(rng);
        if (c == 0) continue;
        const auto s = f.from_int(c) * f.q_pow(coef(rng));
        auto [it, inserted] = x.try_emplace(w, s);
        if (!inserted) {
            it->second += s;
            if (it->second.is_zero()) x.erase(it);
        }
    }
    return x;
}

} // namespace

Report suite_weak_antipode(const RunConfig& cfg) {
    return with_field(cfg, [&](const auto& f) {
        Report r = check_weak_antipode(hopf_of(f, cfg.v_flavor), cfg.degree_bound);
        r.name = "weak-antipode";
        return r;
    });
}

Report suite_antipode_square(const RunConfig& cfg) {
    return with_field(cfg, [&](const auto& f) {
        Report r = check_antipode_square(hopf_of(f, cfg.v_flavor), cfg.degree_bound);
        r.name = "antipode-square";
        return r;
    });
}

Report suite_bialgebra(const RunConfig& cfg) {
    return with_field(cfg, [&](const auto& f) {
        const auto h = hopf_of(f, cfg.v_flavor);
        Report r;
        r.name = "bialgebra";
        r.merge(check_coassociativity(h, cfg.degree_bound));
        r.merge(check_counit_law(h, cfg.degree_bound));
        r.merge(check_multiplicativity(h, cfg.samples, cfg.degree_bound, cfg.seed));
        return r;
    });
}

Report suite_relations(const RunConfig& cfg) {
    return with_field(cfg, [&](const auto& f) {
        const auto h = hopf_of(f, cfg.v_flavor);
        Report r;
        r.name = "relations";
        r.merge(check_structure_relations(h));
        r.merge(check_antipode_relations_printed(h));
        return r;
    });
}

Report suite_wv_connection(const RunConfig& cfg) {
    return with_field(cfg, [&](const auto& f) {
        Report r = check_wv_connection(hopf_of(f, false), hopf_of(f, true), cfg.degree_bound);
        r.name = "wv-connection";
        return r;
    });
}

Report suite_commutation(const RunConfig& cfg, long w_bound, long v_bound) {
    return with_field(cfg, [&](const auto& f) {
        using S = typename std::decay_t<decltype(f)>::value_type;
        using Alg = Algebra<std::decay_t<decltype(f)>>;
        Report rep;
        rep.name = "commutation";
        const S s = (f.q_pow(1) - f.q_pow(-1)).inverse();
        auto item = [&](const Alg& a, const std::string& in, const Element<S>& lhs, const Element<S>& rhs) {
            rep.add(in, a.to_string(rhs), a.to_string(lhs), lhs == rhs);
        };
        auto tag = [](long m, long n) { return " (m=" + std::to_string(m) + ", n=" + std::to_string(n) + ")"; };

        const Alg w(f, Flavor::W);
        const auto E = w.gen(Gen::E), F = w.gen(Gen::F), K = w.gen(Gen::K), Kb = w.gen(Gen::Kb);
        for (long m = 0; m <= w_bound; ++m)
            for (long n = 0; n <= w_bound; ++n) {
                const auto Em = w.pow(E, m), Fm = w.pow(F, m), Kn = w.pow(K, n), Kbn = w.pow(Kb, n);
                item(w, "E^m K^n = q^{-2mn} K^n E^m" + tag(m, n), w.mul(Em, Kn), w.mul(Kn, Em) * f.q_pow(-2 * m * n));
                item(w, "F^m K^n = q^{2mn} K^n F^m" + tag(m, n), w.mul(Fm, Kn), w.mul(Kn, Fm) * f.q_pow(2 * m * n));
                item(w, "E^m Kb^n = q^{2mn} Kb^n E^m" + tag(m, n), w.mul(Em, Kbn), w.mul(Kbn, Em) * f.q_pow(2 * m * n));
                item(w, "F^m Kb^n = q^{-2mn} Kb^n F^m" + tag(m, n), w.mul(Fm, Kbn),
                     w.mul(Kbn, Fm) * f.q_pow(-2 * m * n));
            }
        for (long m = 1; m <= w_bound; ++m) {
            const S qm = quantum_int(m, f) * s;
            const auto Em1 = w.pow(E, m - 1), Fm1 = w.pow(F, m - 1);
            const std::string t = " (m=" + std::to_string(m) + ")";
            const auto ef = w.mul(E, w.pow(F, m)) - w.mul(w.pow(F, m), E);
            item(w, "[E, F^m] = [m] F^{m-1} (q^{1-m} K - q^{m-1} Kb)/(q - q^-1)" + t, ef,
                 w.mul(Fm1, K * f.q_pow(1 - m) - Kb * f.q_pow(m - 1)) * qm);
            item(w, "[E, F^m] = [m] (q^{m-1} K - q^{1-m} Kb)/(q - q^-1) F^{m-1}" + t, ef,
                 w.mul(K * f.q_pow(m - 1) - Kb * f.q_pow(1 - m), Fm1) * qm);
            const auto fe = w.mul(w.pow(E, m), F) - w.mul(F, w.pow(E, m));
            item(w, "[E^m, F] = [m] E^{m-1} (q^{m-1} K - q^{1-m} Kb)/(q - q^-1)" + t, fe,
                 w.mul(Em1, K * f.q_pow(m - 1) - Kb * f.q_pow(1 - m)) * qm);
            item(w, "[E^m, F] = [m] (q^{1-m} K - q^{m-1} Kb)/(q - q^-1) E^{m-1}" + t, fe,
                 w.mul(K * f.q_pow(1 - m) - Kb * f.q_pow(m - 1), Em1) * qm);
        }

        const Alg v(f, Flavor::V);
        const auto Eh = v.eval("Eh"), Fh = v.eval("Fh"), vK = v.eval("K"), vKb = v.eval("Kb"), J = v.eval("J");
        for (long m = 0; m <= v_bound; ++m)
            for (long n = 0; n <= v_bound; ++n) {
                const auto Em = v.pow(Eh, m), Fm = v.pow(Fh, m), Kn = v.pow(vK, n), Kbn = v.pow(vKb, n);
                item(v, "Eh^m K^n = q^{-2mn} K^n Eh^m" + tag(m, n), v.mul(Em, Kn), v.mul(Kn, Em) * f.q_pow(-2 * m * n));
                item(v, "Fh^m K^n = q^{2mn} K^n Fh^m" + tag(m, n), v.mul(Fm, Kn), v.mul(Kn, Fm) * f.q_pow(2 * m * n));
                item(v, "Eh^m Kb^n = q^{2mn} Kb^n Eh^m" + tag(m, n), v.mul(Em, Kbn),
                     v.mul(Kbn, Em) * f.q_pow(2 * m * n));
                item(v, "Fh^m Kb^n = q^{-2mn} Kb^n Fh^m" + tag(m, n), v.mul(Fm, Kbn),
                     v.mul(Kbn, Fm) * f.q_pow(-2 * m * n));
            }
        auto prod = [&](std::initializer_list<Element<S>> xs) {
            Element<S> r = v.one();
            for (const auto& x : xs) r = v.mul(r, x);
            return r;
        };
        for (long m = 1; m <= v_bound; ++m) {
            const S qm = quantum_int(m, f) * s;
            const auto Fm = v.pow(Fh, m), Em = v.pow(Eh, m), Fm1 = v.pow(Fh, m - 1), Em1 = v.pow(Eh, m - 1);
            const auto down = vK * f.q_pow(1 - m) - vKb * f.q_pow(m - 1);
            const auto up = vK * f.q_pow(m - 1) - vKb * f.q_pow(1 - m);
            const std::string t = " (m=" + std::to_string(m) + ")";
            const auto l1 = prod({J, Eh, J, Fm, J}) - prod({J, Fm, J, Eh, J});
            item(v, "J Eh J Fh^m J - J Fh^m J Eh J = [m] J Fh^{m-1} (q^{1-m} K - q^{m-1} Kb)/(q - q^-1)" + t, l1,
                 prod({J, Fm1, down}) * qm);
            item(v, "J Eh J Fh^m J - J Fh^m J Eh J = [m] (q^{m-1} K - q^{1-m} Kb)/(q - q^-1) Fh^{m-1} J" + t, l1,
                 prod({up, Fm1, J}) * qm);
            const auto l2 = prod({J, Em, J, Fh, J}) - prod({J, Fh, J, Em, J});
            item(v, "J Eh^m J Fh J - J Fh J Eh^m J = [m] (q^{1-m} K - q^{m-1} Kb)/(q - q^-1) Eh^{m-1} J" + t, l2,
                 prod({down, Em1, J}) * qm);
            item(v, "J Eh^m J Fh J - J Fh J Eh^m J = [m] J Eh^{m-1} (q^{m-1} K - q^{1-m} Kb)/(q - q^-1)" + t, l2,
                 prod({J, Em1, up}) * qm);
        }
        return rep;
    });
}

Report suite_grouplike(const RunConfig& cfg) {
    return with_field(cfg, [&](const auto& f) {
        const auto h = hopf_of(f, cfg.v_flavor);
        const long b = std::min<long>(cfg.degree_bound, 3);
        Report r;
        r.name = "grouplike";
        std::vector<Monomial> want{Monomial{}, Monomial{0, 0, Tail::j()}};
        for (long l = 1; l <= b; ++l) {
            want.push_back({0, 0, Tail::k(l)});
            want.push_back({0, 0, Tail::kb(l)});
        }
        std::sort(want.begin(), want.end());
        const auto got = grouplike_set(h, b);
        auto names = [&](const std::vector<Monomial>& ms) {
            std::string s = "{";
            for (const auto& m : ms) {
                const std::string name = h.algebra().to_string(m);
                s += (s.size() > 1 ? ", " : "") + (name.empty() ? std::string("1") : name);
            }
            return s + "}";
        };
        r.add("group-like basis monomials, bound " + std::to_string(b), names(want), names(got), got == want);
        r.merge(regular_monoid_check(h, b));
        r.merge(grouplike_nonmembers(h, cfg.degree_bound));
        return r;
    });
}

namespace {

template <class Field>
struct OreSampler {
    using O = UqwByOre<Field>;
    const Field& f;
    const O& o;
    std::mt19937 rng;

    typename O::A0 a0() {
        static const Tail tails[] = {Tail::one(), Tail::j(), Tail::k(1), Tail::k(2), Tail::kb(1), Tail::kb(3)};
        std::uniform_int_distribution<int> pick(0, 5), coef(-3, 3), n(1, 3);
        typename O::A0 a;
        for (int k = n(rng); k > 0; --k) {
            const int c = coef(rng);
            if (c == 0) continue;
            a = o.a0().add(a, o.tail(tails[pick(rng)], f.from_int(c) * f.q_pow(coef(rng))));
        }
        return a;
    }
    typename O::A1 a1(long max_deg) {
        typename O::A1 p;
        const long d = std::uniform_int_distribution<long>(0, max_deg)(rng);
        for (long j = 0; j <= d; ++j) p = o.a1().add(p, o.a1().monomial(a0(), j));
        return p;
    }
    // total E, F degree <= max_deg
    typename O::A2 a2(long max_deg) {
        typename O::A2 p;
        const long d = std::uniform_int_distribution<long>(0, max_deg)(rng);
        for (long i = 0; i <= d; ++i) p = o.a2().add(p, o.a2().monomial(a1(d - i), i));
        return p;
    }
};

} // namespace

Report suite_ore(const RunConfig& cfg) {
    return with_field(cfg, [&](const auto& f) {
        using Field = std::decay_t<decltype(f)>;
        const Algebra<Field> w(f, Flavor::W);
        const UqwByOre<Field> o(f);
        Report r;
        r.name = "ore";
        r.merge(crosscheck_engines(w, cfg.samples, 3, cfg.seed));

        OreSampler<Field> gen{f, o, std::mt19937(cfg.seed)};
        const auto& ext = o.a2();
        auto show = [&](const typename UqwByOre<Field>::A1& x) { return o.to_string(ext.constant(x)); };
        Report snk;
        snk.name = "S_{n,k} recursion vs composition enumeration";
        for (int trial = 0; trial < 3; ++trial) {
            const auto a = gen.a1(3);
            const auto rows = ext.snk_table(6, a);
            for (long n = 0; n <= 6; ++n)
                for (long k = 0; k <= n; ++k) {
                    const auto brute = snk_bruteforce(n, k, a, ext.base(), ext.endos());
                    const auto& rec = rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
                    snk.add("S_{" + std::to_string(n) + "," + std::to_string(k) + "}(" + show(a) + ")", show(brute),
                            show(rec), o.a1().equal(rec, brute));
                }
        }
        r.merge(snk);

        Report assoc;
        assoc.name = "skew multiplication associativity";
        for (int s = 0; s < 30; ++s) {
            const auto x = gen.a2(3), y = gen.a2(3), z = gen.a2(3);
            const auto lhs = o.mul(o.mul(x, y), z);
            const auto rhs = o.mul(x, o.mul(y, z));
            assoc.add("(" + o.to_string(x) + ") (" + o.to_string(y) + ") (" + o.to_string(z) + ")", o.to_string(lhs),
                      o.to_string(rhs), ext.equal(lhs, rhs));
        }
        r.merge(assoc);
        return r;
    });
}

Report suite_structure(const RunConfig& cfg, int confluence_samples) {
    return with_field(cfg, [&](const auto& f) {
        using Field = std::decay_t<decltype(f)>;
        Report r;
        r.name = "structure";
        for (bool v : {false, true}) {
            const Algebra<Field> a(f, v ? Flavor::V : Flavor::W);
            const auto j = a.eval("J");
            Report central;
            central.name = std::string(v ? "v" : "w") + ": J central";
            for (const auto& m : a.basis(cfg.degree_bound)) {
                const auto x = a.monomial(m);
                const auto jx = a.mul(j, x), xj = a.mul(x, j);
                central.add("J*" + a.to_string(m) + " = " + a.to_string(m) + "*J", a.to_string(jx), a.to_string(xj),
                            jx == xj);
            }
            r.merge(central);
            Report ann;
            ann.name = std::string(v ? "v" : "w") + ": (J - 1) annihilates the generators";
            const auto jm1 = j - a.one();
            const std::vector<std::string> gens =
                v ? std::vector<std::string>{"K", "Kb", "Eh", "Fh"}
                  : std::vector<std::string>{"K", "Kb", "E*K", "F*K", "E*J", "F*J"};
            for (const auto& g : gens) {
                const auto x = a.eval(g);
                ann.add("(J - 1)*" + g, "0", a.to_string(a.mul(jm1, x)), a.mul(jm1, x).is_zero());
                ann.add(g + "*(J - 1)", "0", a.to_string(a.mul(x, jm1)), a.mul(x, jm1).is_zero());
            }
            if (!v) {
                const auto je = a.mul(jm1, a.gen(Gen::E));
                ann.add("(J - 1)*E (unsandwiched E)", "nonzero", a.to_string(je), !je.is_zero(), true);
            }
            r.merge(ann);
        }

        const Algebra<Field> w(f, Flavor::W);
        Report conf;
        conf.name = "confluence";
        std::mt19937 rng(cfg.seed), order_a(cfg.seed + 1), order_b(cfg.seed + 2);
        for (int n = 0; n < confluence_samples; ++n) {
            const auto x = random_expr(f, rng, 8);
            const auto nf = w.normalize(x);
            const auto a = rewrite_randomly(w, x, order_a);
            const auto b = rewrite_randomly(w, x, order_b);
            conf.add("random expression #" + std::to_string(n), w.to_string(nf),
                     w.to_string(a) + (a == b ? "" : " / " + w.to_string(b)), a == nf && b == nf);
        }
        r.merge(conf);

        const Algebra<Field> u(f, Flavor::W, true);
        Report sl2 = verify_relations(identity_morphism(u), u, relations_sl2_mod_j(), u);
        sl2.name = "w/(J - 1): sl_q(2) relations";
        r.merge(sl2);

        Report dim;
        dim.name = "quotient dimension";
        const QuotientAlgebra q(cfg.d);
        const std::size_t d = static_cast<std::size_t>(cfg.d);
        dim.add("dim U/I, d=" + std::to_string(cfg.d), std::to_string(d * d * d + d * d), std::to_string(q.dim()),
                q.dim() == d * d * d + d * d);
        dim.add("dim W/I, d=" + std::to_string(cfg.d), std::to_string(d * d * d), std::to_string(q.w_basis().size()),
                q.w_basis().size() == d * d * d);
        r.merge(dim);
        return r;
    });
}

Report suite_rmatrix(const RunConfig& cfg) {
    validate(cfg);
    const QuotientAlgebra q(cfg.d);
    const QTensor r = build_R(q);
    std::vector<TensorCheck> checks;
    checks.push_back(compare_tensors(q.d(), "rho(R-tilde) = R", build_R_tilde(q), r, 0));
    for (auto& c : check_regularity(q, r, compute_Rhat(q, r))) checks.push_back(std::move(c));
    for (auto& c : check_intertwine(q, r)) checks.push_back(std::move(c));
    for (auto& c : check_quasitriangular(q, r)) checks.push_back(std::move(c));
    checks.push_back(check_qybe(q, r));
    return to_report("rmatrix", checks);
}

const std::vector<SuiteInfo>& suites() {
    static const std::vector<SuiteInfo> all{
        {"weak-antipode", "id*T*id = id and T*id*T = T on basis monomials"},
        {"antipode-square", "T^2(x) = K x Kb on basis monomials"},
        {"bialgebra", "coassociativity, counit law, multiplicativity of D and T"},
        {"relations", "D, eps, T respect the defining relations"},
        {"wv-connection", "D_v, T_v, eps_v against D_w, T_w, eps_w on sandwiched monomials"},
        {"commutation", "commutation closed forms in w (m, n <= 5) and v (m, n <= 3)"},
        {"grouplike", "group-like set, regular monoid identities, non-members"},
        {"ore", "Ore extension vs normal form, S_{n,k}, associativity"},
        {"structure", "J central, (J - 1) annihilators, confluence, J = 1 quotient, quotient dimension"},
        {"rmatrix", "R-matrix of the root-of-unity quotient: rho, regularity, intertwining, QYBE"},
    };
    return all;
}

bool has_suite(const std::string& name) {
    for (const auto& s : suites())
        if (s.name == name) return true;
    return false;
}

Report run_suite(const std::string& name, const RunConfig& cfg) {
    Report r;
    if (name == "weak-antipode")
        r = suite_weak_antipode(cfg);
    else if (name == "antipode-square")
        r = suite_antipode_square(cfg);
    else if (name == "bialgebra")
        r = suite_bialgebra(cfg);
    else if (name == "relations")
        r = suite_relations(cfg);
    else if (name == "wv-connection")
        r = suite_wv_connection(cfg);
    else if (name == "commutation")
        r = suite_commutation(cfg);
    else if (name == "grouplike")
        r = suite_grouplike(cfg);
    else if (name == "ore")
        r = suite_ore(cfg);
    else if (name == "structure")
        r = suite_structure(cfg);
    else if (name == "rmatrix")
        r = suite_rmatrix(cfg);
    else
        throw Error(ErrorCode::InvalidArgument, "unknown suite '" + name + "'");
    if (name != "rmatrix") r.name += " [" + mode_tag(cfg) + (cfg.v_flavor ? ", v" : ", w") + "]";
    return r;
}

} // namespace wqa
