#include "lukamax/reproduce.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>

#include "lukamax/extension.hpp"
#include "lukamax/jfour.hpp"
#include "lukamax/presets.hpp"
#include "lukamax/qvar.hpp"
#include "lukamax/recovery.hpp"

namespace lukamax {

// ── Sampling ────────────────────────────────────────────────────────────────

Formula random_formula(Rng& rng, const Signature& sig, int max_depth, int num_vars) {
    auto var = [&] { return Formula::var("p" + std::to_string(rng.below(num_vars) + 1)); };
    if (max_depth <= 0) return var();
    if (sig.name() == "luk") {
        switch (rng.below(8)) {
            case 0: return var();
            case 1: return Formula::unary("!", random_formula(rng, sig, max_depth - 1, num_vars));
            case 2:
                return Formula::binary("->", random_formula(rng, sig, max_depth - 1, num_vars),
                                       random_formula(rng, sig, max_depth - 1, num_vars));
            case 3:
                return Formula::binary("&", random_formula(rng, sig, max_depth - 1, num_vars),
                                       random_formula(rng, sig, max_depth - 1, num_vars));
            case 4:
                return Formula::binary("|", random_formula(rng, sig, max_depth - 1, num_vars),
                                       random_formula(rng, sig, max_depth - 1, num_vars));
            case 5:
                return Formula::binary("o+", random_formula(rng, sig, max_depth - 1, num_vars),
                                       random_formula(rng, sig, max_depth - 1, num_vars));
            case 6:
                return Formula::binary("o*", random_formula(rng, sig, max_depth - 1, num_vars),
                                       random_formula(rng, sig, max_depth - 1, num_vars));
            default:
                return Formula::unary("!", random_formula(rng, sig, max_depth - 1, num_vars));
        }
    }
    if (sig.name() == "j4") {
        switch (rng.below(7)) {
            case 0: return var();
            case 1: return Formula::unary("!", random_formula(rng, sig, max_depth - 1, num_vars));
            case 2: return Formula::unary("sq", random_formula(rng, sig, max_depth - 1, num_vars));
            case 3:
                return Formula::binary("|", random_formula(rng, sig, max_depth - 1, num_vars),
                                       random_formula(rng, sig, max_depth - 1, num_vars));
            case 4:
                return Formula::binary("->", random_formula(rng, sig, max_depth - 1, num_vars),
                                       random_formula(rng, sig, max_depth - 1, num_vars));
            case 5:
                return Formula::binary("&", random_formula(rng, sig, max_depth - 1, num_vars),
                                       random_formula(rng, sig, max_depth - 1, num_vars));
            default:
                return Formula::unary("~", random_formula(rng, sig, max_depth - 1, num_vars));
        }
    }
    // Arbitrary signatures: draw a core connective or a variable.
    const auto& conns = sig.connectives();
    std::uint64_t pick = rng.below(conns.size() + 1);
    if (pick == conns.size()) return var();
    const Connective& c = conns[pick];
    std::vector<Formula> kids;
    for (int a = 0; a < c.arity; ++a)
        kids.push_back(random_formula(rng, sig, max_depth - 1, num_vars));
    return Formula::make(c.symbol, std::move(kids));
}

Sequent random_sequent(Rng& rng, const Signature& sig, int max_depth, int num_vars,
                       int max_premises) {
    Sequent s{{}, random_formula(rng, sig, max_depth, num_vars)};
    std::uint64_t count = rng.below(static_cast<std::uint64_t>(max_premises) + 1);
    for (std::uint64_t i = 0; i < count; ++i)
        s.premises.push_back(random_formula(rng, sig, max_depth, num_vars));
    return s;
}

// ── Battery plumbing ────────────────────────────────────────────────────────

namespace {

class Battery {
public:
    Battery(const ReproduceOptions& opt) : opt_(opt) {}

    bool want(const std::string& suite) const { return opt_.only.empty() || opt_.only == suite; }

    void claim(const std::string& suite, const std::string& name, bool pass,
               std::string detail = "") {
        results_.push_back({suite, name, pass, std::move(detail)});
    }

    const EngineOptions& eng() const { return opt_.engine; }
    int q_filter() const { return opt_.q; }

    std::vector<ClaimResult> take() { return std::move(results_); }

private:
    ReproduceOptions opt_;
    std::vector<ClaimResult> results_;
};

std::string elem(const MatrixLogic& L, Element e) { return L.algebra().element_name(e); }

// ── Suite: lqi-indist ───────────────────────────────────────────────────────

void suite_lqi_indist(Battery& b) {
    const Signature& sig = Signature::luk();
    MatrixLogic L1 = MatrixLogic::luk(3, 1);
    MatrixLogic L2 = MatrixLogic::luk(3, 2);
    Formula em2 = parse("(p | !p) o* (p | !p)", sig);
    Verdict v1 = is_valid(L1, em2, b.eng());
    b.claim("lqi-indist", "theorem of the 1/3-filter logic", v1.holds);
    Verdict v2 = is_valid(L2, em2, b.eng());
    bool cm2 = !v2.holds && v2.countermodel && v2.countermodel->values == std::vector<Element>{1} &&
               v2.conclusion_value == 1;
    b.claim("lqi-indist", "refuted at p=1/3 with value 1/3 in the 2/3-filter logic", cm2,
            v2.holds ? "unexpectedly valid" : "value " + elem(L2, v2.conclusion_value));
    Sequent s = Sequent::parse_text("p |- (p o* p) o+ (p o* p)", sig);
    Verdict v3 = entails(L2, s, b.eng());
    b.claim("lqi-indist", "consequence holds in the 2/3-filter logic", v3.holds);
    Verdict v4 = entails(L1, s, b.eng());
    bool cm4 = !v4.holds && v4.countermodel && v4.countermodel->values == std::vector<Element>{1} &&
               v4.conclusion_value == 0;
    b.claim("lqi-indist", "consequence fails at p=1/3 with value 0 in the 1/3-filter logic", cm4);
}

// ── Suite: recovery ─────────────────────────────────────────────────────────

std::vector<Element> unary_table(const MatrixLogic& L, const Formula& f) {
    std::vector<Element> out;
    for (Element v = 0; v < L.algebra().size(); ++v) {
        Assignment asg;
        for (const auto& var : vars(f)) asg[var] = v;
        out.push_back(eval_formula(L.algebra(), f, asg));
    }
    return out;
}

struct RecoveryFixture {
    MaximalitySetup setup;
    std::vector<Formula> circle;
};

RecoveryFixture make_recovery(const MatrixLogic& L1, const MatrixLogic& L2,
                              const std::vector<Element>& emb, const std::string& phi_text,
                              Element e0_value) {
    MaximalitySetup setup = build_setup(L1, L2, emb);
    Formula phi = parse(phi_text, L1.algebra().sig());
    Assignment e0;
    for (const auto& v : vars(phi)) e0[v] = e0_value;
    Formula gamma = build_gamma(setup, phi, e0);
    std::vector<Formula> circle = recovery_set(setup, gamma);
    return RecoveryFixture{std::move(setup), std::move(circle)};
}

void suite_recovery(Battery& b) {
    // Three-valued fixtures: full Lukasiewicz filter and the J3-style filter.
    {
        MatrixLogic L1 = MatrixLogic::luk(2, 2);
        RecoveryFixture fx = make_recovery(L1, MatrixLogic::cpl(), chain_embedding(2, 1),
                                           "(p1 -> !p1) -> !p1", 1);
        auto circ = recovery_conjunction(fx.setup, fx.circle);
        bool table_ok = circ && unary_table(L1, *circ) == std::vector<Element>{2, 1, 2};
        b.claim("recovery", "3-valued recovery operator has table (1,1/2,1)", table_ok);
        b.claim("recovery", "3-valued star property", check_star(fx.setup, fx.circle).holds);
    }
    {
        MatrixLogic L1 = MatrixLogic::luk(2, 1);
        RecoveryFixture fx = make_recovery(L1, MatrixLogic::cpl(), chain_embedding(2, 1),
                                           "!((!p1 -> p1) & (p1 -> !p1))", 1);
        auto circ = recovery_conjunction(fx.setup, fx.circle);
        bool table_ok = circ && unary_table(L1, *circ) == std::vector<Element>{2, 0, 2};
        b.claim("recovery", "J3-filter recovery operator has table (1,0,1)", table_ok);
        b.claim("recovery", "J3-filter star property", check_star(fx.setup, fx.circle).holds);
    }
    // 4-element chain: both value-movers are the negation.
    {
        const char* phis[] = {nullptr, "(p1 | !p1)^3", "(p1 | !p1) o* (p1 | !p1)", "p1 | !p1"};
        bool alphas_ok = true, stars_ok = true;
        for (int i = 1; i <= 3; ++i) {
            MatrixLogic L1 = MatrixLogic::luk(3, i);
            RecoveryFixture fx =
                make_recovery(L1, MatrixLogic::cpl(), chain_embedding(3, 1), phis[i], 1);
            alphas_ok = alphas_ok &&
                        fx.setup.alpha.at({1, 2}) == parse("!p", Signature::luk()) &&
                        fx.setup.alpha.at({2, 1}) == parse("!p", Signature::luk());
            stars_ok = stars_ok && check_star(fx.setup, fx.circle).holds;
        }
        b.claim("recovery", "4-chain value movers are the negation", alphas_ok);
        b.claim("recovery", "4-chain star property for every filter", stars_ok);
    }
    // 5-element chain over its 3-element subchain.
    {
        const Signature& sig = Signature::luk();
        const char* phi_low = "((2#p1)^2) | ((!(2#p1))^2)";   // filters 1/4 and 2/4
        const char* phi_high = "((2#p1)^2) | (!(2#p1))";      // filters 3/4 and 4/4
        bool alphas_ok = true, stars_ok = true;
        for (int i = 1; i <= 4; ++i) {
            MatrixLogic L1 = MatrixLogic::luk(4, i);
            MatrixLogic L2 = MatrixLogic::luk(2, restrict_filter(4, i, 2));
            RecoveryFixture fx = make_recovery(L1, L2, chain_embedding(4, 2),
                                               i <= 2 ? phi_low : phi_high, 1);
            alphas_ok = alphas_ok && fx.setup.alpha.at({2, 1}) == parse("p o+ p", sig) &&
                        fx.setup.alpha.at({3, 1}) == parse("p o* p", sig) &&
                        fx.setup.alpha.at({2, 3}) == parse("!p", sig) &&
                        fx.setup.alpha.at({3, 2}) == parse("!p", sig);
            stars_ok = stars_ok && check_star(fx.setup, fx.circle).holds;
        }
        b.claim("recovery", "5-chain value movers match the doubling/squaring/negation terms",
                alphas_ok);
        b.claim("recovery", "5-chain star property for every filter", stars_ok);
    }
    // Randomized derivability-adjustment battery.
    auto dat_battery = [&](const MatrixLogic& L1, const MatrixLogic& L2,
                           const std::vector<Element>& emb, const char* phi, Element e0v,
                           std::uint64_t seed, const std::string& label) {
        RecoveryFixture fx = make_recovery(L1, L2, emb, phi, e0v);
        Rng rng(seed);
        int agree = 0;
        const int total = 120;
        for (int t = 0; t < total; ++t) {
            Sequent s = random_sequent(rng, Signature::luk(), 5, 3, 3);
            DatResult r = dat_check(fx.setup, fx.circle, s.premises, s.conclusion, b.eng());
            if (r.agree()) ++agree;
        }
        b.claim("recovery", label, agree == total,
                std::to_string(agree) + "/" + std::to_string(total) + " sequents agree");
    };
    dat_battery(MatrixLogic::luk(3, 1), MatrixLogic::cpl(), chain_embedding(3, 1),
                "(p1 | !p1)^3", 1, 0x1009, "derivability adjustment rescues classical logic");
    dat_battery(MatrixLogic::luk(4, 1), MatrixLogic::luk(2, 1), chain_embedding(4, 2),
                "((2#p1)^2) | ((!(2#p1))^2)", 1, 0x1010,
                "derivability adjustment rescues the subchain logic");
}

// ── Suite: lv7 ──────────────────────────────────────────────────────────────

void suite_lv7(Battery& b) {
    CloneResult clone = unary_clone(FiniteAlgebra::chain(6));
    b.claim("lv7", "clone closure terminates below the carrier bound",
            !clone.cap_exceeded && clone.functions.size() <= 823543u,
            std::to_string(clone.functions.size()) + " unary term functions");
    bool half_fixed = true, thirds_fixed = true;
    for (const CloneEntry& e : clone.functions) {
        if (e.table[3] == 2 || e.table[3] == 4) half_fixed = false;
        if (e.table[2] == 3 || e.table[4] == 3) thirds_fixed = false;
    }
    b.claim("lv7", "no unary term sends 1/2 into the thirds", half_fixed);
    b.claim("lv7", "no unary term sends a third to 1/2", thirds_fixed);
}

// ── Suite: translation ──────────────────────────────────────────────────────

void suite_translation(Battery& b) {
    bool lambda_ok = true;
    std::string bad;
    for (int n = 2; n <= 6; ++n) {
        FiniteAlgebra A = FiniteAlgebra::chain(n);
        for (int i = 1; i <= n; ++i) {
            Formula lam = lambda_term(n, i);
            for (Element k = 0; k <= n; ++k) {
                Assignment asg;
                for (const auto& v : vars(lam)) asg[v] = k;
                Element want = k >= i ? n : 0;
                if (eval_formula(A, lam, asg) != want) {
                    lambda_ok = false;
                    bad = "n=" + std::to_string(n) + " i=" + std::to_string(i);
                }
            }
        }
    }
    b.claim("translation", "filter characteristic terms match their defining tables", lambda_ok,
            bad);

    bool round_ok = true;
    int checks = 0;
    for (int n = 2; n <= 6 && round_ok; ++n) {
        for (int i = 1; i <= n && round_ok; ++i) {
            Rng rng(0x2000 + static_cast<std::uint64_t>(n * 16 + i));
            std::vector<Sequent> samples;
            for (int t = 0; t < 50; ++t)
                samples.push_back(random_sequent(rng, Signature::luk(), 5, 2, 2));
            TranslationReport rep = check_translation_equivalence(n, i, samples, b.eng());
            checks += rep.checks;
            if (!rep.ok()) round_ok = false;
        }
    }
    b.claim("translation", "filter-change translations preserve and reflect consequence",
            round_ok, std::to_string(checks) + " instance checks");
}

// ── Suite: explosion ────────────────────────────────────────────────────────

void suite_explosion(Battery& b) {
    const Signature& sig = Signature::luk();
    for (int q : {2, 3, 5}) {
        if (b.q_filter() && q != b.q_filter()) continue;
        for (int j = 1; j <= q; ++j) {
            std::string tag = "q=" + std::to_string(q) + " j=" + std::to_string(j);
            Sequent rule{{parse(std::to_string(j) + "#(p & !p)", sig)}, parse("!(p -> p)", sig)};
            MatrixLogic L = MatrixLogic::luk(q, j);
            MatrixLogic Lbar = MatrixLogic::lukbar(q, j);
            Verdict in_l = rule_valid(L, rule, b.eng());
            bool fails_with_cm = !in_l.holds && in_l.countermodel &&
                                 in_l.countermodel->values == std::vector<Element>{1};
            bool passive = rule_valid(MatrixLogic::cpl(), rule, b.eng()).holds &&
                           rule_valid(Lbar, rule, b.eng()).holds;
            b.claim("explosion", "graded explosion separates the product logic, " + tag,
                    fails_with_cm && passive);

            Rng rng(0x3000 + static_cast<std::uint64_t>(q * 16 + j));
            int agree = 0;
            const int total = 200;
            for (int t = 0; t < total; ++t) {
                Sequent s = random_sequent(rng, sig, 4, 3, 3);
                bool bar = entails(Lbar, s, b.eng()).holds;
                bool plain = entails(L, s, b.eng()).holds;
                bool unsat = classically_unsat_as_designated(s.premises, b.eng());
                if (bar == (plain || unsat)) ++agree;
            }
            b.claim("explosion", "product consequence characterization, " + tag, agree == total,
                    std::to_string(agree) + "/" + std::to_string(total));
        }
    }
}

// ── Suite: extension ────────────────────────────────────────────────────────

void suite_extension(Battery& b) {
    bool pair_ok = true;
    for (int n = 1; n <= 6; ++n)
        for (int m = 1; m <= n; ++m) {
            if (n % m != 0) continue;
            DivisorSet L = DivisorSet::make(n, {n});
            if (maximal_pair(n, m) != divset_maximal_bruteforce(L, m)) pair_ok = false;
        }
    b.claim("extension", "prime-power criterion matches the lattice search", pair_ok);

    bool ext_ok = true;
    for (int base : {4, 6}) {
        for (const DivisorSet& L : all_divisor_antichains(base)) {
            for (int m = 1; m <= base; ++m) {
                if (base % m != 0) continue;
                if (axiomatic_ext_maximal(L, m).maximal != divset_maximal_bruteforce(L, m))
                    ext_ok = false;
            }
        }
    }
    b.claim("extension", "certificate decider matches the lattice search on every extension",
            ext_ok);

    b.claim("extension", "prime chains with undesignated bottom are maximal",
            maximal_wrt_cpl(3, order_filter(3, 1)) && maximal_wrt_cpl(5, order_filter(5, 2)) &&
                !maximal_wrt_cpl(4, order_filter(4, 1)) &&
                !maximal_wrt_cpl(2, DesignatedSet(3, {0, 1, 2})));

    b.claim("extension", "filter restriction follows the ceiling formula",
            restrict_filter(4, 2, 2) == 1 && restrict_filter(4, 3, 2) == 2 &&
                restrict_filter(6, 1, 3) == 1 && restrict_filter(6, 5, 2) == 2);
}

// ── Suite: qvar ─────────────────────────────────────────────────────────────

void suite_qvar(Battery& b) {
    struct Spot {
        std::vector<int> chains;
        bool critical;
    };
    const Spot spots[] = {
        {{1}, true},      {{2}, true},       {{2, 1}, true},  {{2, 2}, false},
        {{3, 1}, true},   {{3, 2, 1}, false}, {{4, 2}, true},  {{4, 2, 1}, false},
        {{4, 3}, true},   {{3, 2}, true},     {{4, 1}, true},  {{1, 1}, false},
    };
    bool crit_ok = true;
    for (const Spot& s : spots)
        if (is_critical(CriticalAlgebra::of(s.chains)) != s.critical) crit_ok = false;
    b.claim("qvar", "criticality test matches the hand-derived verdicts", crit_ok);

    bool incl_ok = true;
    for (int q : {2, 3, 5, 7})
        for (int k = 1; k <= 12; ++k) {
            bool inc = q_included(QFamily::of({CriticalAlgebra::of({q, 1})}),
                                  QFamily::of({CriticalAlgebra::of({k})}));
            if (inc != (k % q == 0)) incl_ok = false;
        }
    b.claim("qvar", "inclusion of the split pair follows divisibility", incl_ok);

    bool min_ok = true;
    for (int k = 2; k <= 12; ++k) {
        std::vector<QFamily> fams = minimal_over_boolean(k);
        QFamily boolean = QFamily::of({CriticalAlgebra::of({1})});
        for (std::size_t a = 0; a < fams.size(); ++a) {
            if (!q_included(boolean, fams[a]) || q_included(fams[a], boolean)) min_ok = false;
            for (std::size_t c = 0; c < fams.size(); ++c)
                if (a != c && q_included(fams[a], fams[c])) min_ok = false;
        }
    }
    b.claim("qvar", "minimal families over the Boolean base are incomparable", min_ok);

    bool gen_ok = true;
    for (int n = 1; n <= 3; ++n)
        for (int k = 2; k <= 4; ++k) {
            std::vector<QFamily> fams = minimal_over(n, k);
            QFamily base = QFamily::of({CriticalAlgebra::of({n})});
            for (std::size_t a = 0; a < fams.size(); ++a) {
                if (!q_included(base, fams[a]) || q_included(fams[a], base)) gen_ok = false;
                for (std::size_t c = 0; c < fams.size(); ++c)
                    if (a != c && q_included(fams[a], fams[c])) gen_ok = false;
            }
        }
    b.claim("qvar", "minimal families over larger bases are incomparable", gen_ok);

    for (int q : {2, 3, 5}) {
        if (b.q_filter() && q != b.q_filter()) continue;
        QuasiIdentity qi = explosion_qi(q);
        bool holds_prod =
            quasi_identity_holds(CriticalAlgebra::of({q, 1}).realize(), qi, b.eng()).holds;
        Verdict chain_v = quasi_identity_holds(CriticalAlgebra::of({q}).realize(), qi, b.eng());
        b.claim("qvar", "explosion quasi-identity splits the pair from the chain, q=" +
                            std::to_string(q),
                holds_prod && !chain_v.holds);
    }
}

// ── Suite: strongmax ────────────────────────────────────────────────────────

void suite_strongmax(Battery& b) {
    for (int q : {2, 3, 5}) {
        if (b.q_filter() && q != b.q_filter()) continue;
        for (int j = 1; j <= q; ++j) {
            StrongMaxReport rep = strong_max_report(q, j, b.eng());
            b.claim("strongmax", "strong maximality battery, q=" + std::to_string(q) +
                                     " j=" + std::to_string(j),
                    rep.all_ok());
        }
    }
    if (!b.q_filter() || b.q_filter() == 3 || b.q_filter() == 2) {
        GeneralStrongMaxReport r1 = general_strong_max_report(2, 1, 3, b.eng());
        bool gens1 = r1.generators ==
                     QFamily::of({CriticalAlgebra::of({2}), CriticalAlgebra::of({3, 1})});
        GeneralStrongMaxReport r2 = general_strong_max_report(2, 1, 2, b.eng());
        bool gens2 = r2.generators ==
                     QFamily::of({CriticalAlgebra::of({2}), CriticalAlgebra::of({4, 1})});
        b.claim("strongmax", "general strong maximality instantiates the right generators",
                r1.all_ok() && gens1 && r2.all_ok() && gens2 && r2.r == 1);
    }
}

// ── Suite: jfour ────────────────────────────────────────────────────────────

void suite_jfour(Battery& b) {
    FiniteAlgebra A4 = a4_algebra();
    const std::vector<Element> join_expect = {0, 1, 2, 3, 1, 1, 2, 3, 2, 2, 2, 3, 3, 3, 3, 3};
    const std::vector<Element> neg_expect = {3, 2, 1, 0};
    const std::vector<Element> sq_expect = {0, 0, 1, 3};
    b.claim("jfour", "defining tables of the 4-element algebra",
            A4.table("|").data == join_expect && A4.table("!").data == neg_expect &&
                A4.table("sq").data == sq_expect);

    auto t = j4_derived_tables();
    bool derived_ok = t["delta"] == std::vector<Element>{0, 0, 0, 3} &&
                      t["~"] == std::vector<Element>{3, 0, 0, 0} &&
                      t["nabla"] == std::vector<Element>{0, 3, 3, 3} &&
                      t["alpha13"] == std::vector<Element>{0, 3, 0, 0} &&
                      t["beta13"] == std::vector<Element>{0, 1, 0, 0} &&
                      t["->"] == std::vector<Element>{3, 3, 3, 3, 0, 1, 2, 3,
                                                      0, 1, 2, 3, 0, 1, 2, 3};
    b.claim("jfour", "derived operator tables", derived_ok);

    b.claim("jfour", "Lukasiewicz implication is definable in the signature",
            luk_imp_definability_check().ok());

    MatrixLogic J = j4_logic();
    bool sound = true;
    std::string bad;
    for (const AxiomSchema& s : Calculus::h4().schemas()) {
        Substitution sub;
        sub.set("A", Formula::var("a"));
        sub.set("B", Formula::var("b"));
        sub.set("G", Formula::var("g"));
        if (!is_valid(J, substitute(s.schema, sub), b.eng()).holds) {
            sound = false;
            bad = s.name;
        }
    }
    b.claim("jfour", "every axiom schema is valid", sound, bad);
    b.claim("jfour", "modus ponens preserves designation pointwise",
            is_deductive_implication(J, parse("x -> y", Signature::j4())));

    // Shipped corpus: theorems check green, non-theorems have countermodels.
    namespace fs = std::filesystem;
    int proofs = 0, proof_fail = 0;
    fs::path proof_root = corpus_dir() / "proofs";
    std::vector<fs::path> files;
    if (fs::exists(proof_root))
        for (const auto& e : fs::directory_iterator(proof_root))
            if (e.path().extension() == ".json") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
        ++proofs;
        ProofCheckResult r = check_proof(Proof::from_file(f), b.eng());
        if (!r.accepted || (r.semantics_checked && !r.semantics_ok)) ++proof_fail;
    }
    b.claim("jfour", "proof corpus checks", proofs >= 10 && proof_fail == 0,
            std::to_string(proofs) + " proofs, " + std::to_string(proof_fail) + " failures");

    int nont = 0, nont_fail = 0;
    std::ifstream nf(corpus_dir() / "j4_nontheorems.txt");
    std::string line;
    while (std::getline(nf, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
        ++nont;
        Formula f = parse(line, Signature::j4());
        Verdict v = countermodel_j4({}, f, b.eng());
        bool refuting_cm = false;
        if (!v.holds && v.countermodel) {
            Element value = eval_formula(J.algebra(), f, v.countermodel->as_map());
            refuting_cm = !J.is_designated(value);
        }
        if (!refuting_cm) ++nont_fail;
    }
    b.claim("jfour", "non-theorem corpus yields verified countermodels",
            nont >= 10 && nont_fail == 0,
            std::to_string(nont) + " formulas, " + std::to_string(nont_fail) + " failures");

    // The explosion step is exactly what separates the two calculi.
    Proof exp;
    exp.calculus = "H4bar";
    exp.premises = {parse("p & !p", Signature::j4())};
    exp.steps = {{parse("p & !p", Signature::j4()), {Justification::Kind::premise, "", -1, -1}},
                 {parse("~(p0 | ~p0)", Signature::j4()),
                  {Justification::Kind::exp1, "", 0, -1}}};
    ProofCheckResult with_rule = check_proof(exp, b.eng());
    ProofCheckResult without_rule = check_proof(Calculus::h4(), exp.premises, exp.steps, b.eng());
    b.claim("jfour", "explosion accepted only with the rule",
            with_rule.accepted && with_rule.semantics_ok && !without_rule.accepted);

    Rng rng(0x4000);
    std::vector<DtSample> samples;
    for (int t2 = 0; t2 < 200; ++t2) {
        DtSample s{{}, random_formula(rng, Signature::j4(), 4, 3),
                   random_formula(rng, Signature::j4(), 4, 3)};
        std::uint64_t count = rng.below(3);
        for (std::uint64_t i = 0; i < count; ++i)
            s.gamma.push_back(random_formula(rng, Signature::j4(), 4, 3));
        samples.push_back(std::move(s));
    }
    DtReport dt = deduction_theorem_check(samples, b.eng());
    b.claim("jfour", "deduction theorem on seeded samples", dt.ok(),
            std::to_string(dt.checked - dt.failures) + "/" + std::to_string(dt.checked));

    bool shadows = true;
    for (const auto& [name, ok] : maxj4_designation_shadows()) shadows = shadows && ok;
    b.claim("jfour", "maximal-theory membership laws hold pointwise", shadows);
    b.claim("jfour", "designation classicality of join, implication and strong negation",
            designation_classicality());
}

// ── Suite: lfi ──────────────────────────────────────────────────────────────

void suite_lfi(Battery& b) {
    const Signature& sig = Signature::luk();
    Formula neg = parse("!p", sig);
    bool closed_ok = true;
    for (int n = 1; n <= 8; ++n)
        for (int i = 1; i <= n; ++i) {
            // is_paraconsistent cross-checks the closed form internally.
            bool para = is_paraconsistent(MatrixLogic::luk(n, i), neg).paraconsistent;
            if (para != (2 * i <= n)) closed_ok = false;
        }
    b.claim("lfi", "paraconsistency matches the filter-midpoint criterion", closed_ok);

    bool lfi_ok = true;
    for (int n = 2; n <= 6; ++n)
        for (int i = 1; 2 * i <= n; ++i) {
            Formula lam = lambda_term(n, i);
            Substitution sub;
            for (const auto& v : vars(lam)) sub.set(v, parse("p & !p", sig));
            Formula circ = Formula::unary("!", substitute(lam, sub));
            if (!lfi_check(MatrixLogic::luk(n, i), neg, circ)) lfi_ok = false;
        }
    b.claim("lfi", "consistency operator turns every paraconsistent filter logic into an LFI",
            lfi_ok);

    // Ideal-paraconsistency conditions for the three spotlight logics.
    struct Case {
        int q, i;
    };
    for (Case c : {Case{3, 1}, Case{2, 1}, Case{5, 2}}) {
        MatrixLogic L = MatrixLogic::luk(c.q, c.i);
        std::string tag = "q=" + std::to_string(c.q) + " i=" + std::to_string(c.i);
        bool para = is_paraconsistent(L, neg).paraconsistent;

        Formula lam = lambda_term(c.q, c.i);
        Substitution sx;
        for (const auto& v : vars(lam)) sx.set(v, Formula::var("x"));
        Formula imp = Formula::binary("|", Formula::unary("!", substitute(lam, sx)),
                                      Formula::var("y"));
        bool deductive = is_deductive_implication(L, imp);

        // Classical corners of the derived implication.
        const std::vector<std::string> order = {"x", "y"};
        CompiledFormula cf(L.algebra(), expand(imp, sig), order);
        auto at = [&](Element a, Element bb) {
            std::array<Element, 2> in{a, bb};
            return cf.eval(in);
        };
        const Element top = L.algebra().top();
        bool classical_corner = at(0, 0) == top && at(0, top) == top && at(top, 0) == 0 &&
                                at(top, top) == top;

        Rng rng(0x5000 + static_cast<std::uint64_t>(c.q * 16 + c.i));
        std::vector<Sequent> samples;
        for (int t = 0; t < 60; ++t) samples.push_back(random_sequent(rng, sig, 4, 3, 2));
        SublogicReport sub =
            sublogic_check(L, MatrixLogic::cpl(), chain_embedding(c.q, 1), samples, b.eng());

        bool maximal = maximal_wrt_cpl(c.q, order_filter(c.q, c.i));
        bool extensions_explosive =
            !is_paraconsistent(MatrixLogic::lukbar(c.q, c.i), neg).paraconsistent &&
            !is_paraconsistent(MatrixLogic::cpl(), neg).paraconsistent;
        b.claim("lfi", "ideal paraconsistency conditions, " + tag,
                para && deductive && classical_corner && sub.ok() && maximal &&
                    extensions_explosive);
    }
}

}  // namespace

std::vector<ClaimResult> run_reproduction(const ReproduceOptions& opt) {
    Battery b(opt);
    if (b.want("lqi-indist")) suite_lqi_indist(b);
    if (b.want("recovery")) suite_recovery(b);
    if (b.want("lv7")) suite_lv7(b);
    if (b.want("translation")) suite_translation(b);
    if (b.want("explosion")) suite_explosion(b);
    if (b.want("extension")) suite_extension(b);
    if (b.want("qvar")) suite_qvar(b);
    if (b.want("strongmax")) suite_strongmax(b);
    if (b.want("jfour")) suite_jfour(b);
    if (b.want("lfi")) suite_lfi(b);
    return b.take();
}

bool all_passed(const std::vector<ClaimResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const ClaimResult& c) { return c.pass; });
}

}  // namespace lukamax
