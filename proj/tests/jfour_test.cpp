#include "doctest.h"

#include "lukamax/jfour.hpp"
#include "lukamax/presets.hpp"
#include "lukamax/recovery.hpp"
#include "lukamax/reproduce.hpp"

using namespace lukamax;

namespace {
const Signature& j4 = Signature::j4();
}

TEST_CASE("defining tables of the four-element algebra") {
    FiniteAlgebra A = a4_algebra();
    CHECK(A.table("sq").data[2] == 1);   // square of 2/3 is 1/3
    CHECK(A.table("!").data[2] == 1);    // negation of 2/3 is 1/3
    CHECK(A.table("|").data[2 * 4 + 1] == 2);  // 2/3 join 1/3 = 2/3
    CHECK(A.element_name(1) == "1/3");
    CHECK(A.element_by_name("2/3") == 2);

    // The square really is the strong self-conjunction of the chain...
    FiniteAlgebra c3 = FiniteAlgebra::chain(3);
    for (Element x = 0; x < 4; ++x)
        CHECK(A.table("sq").data[static_cast<std::size_t>(x)] ==
              eval_formula(c3, parse("p o* p", Signature::luk()), {{"p", x}}));
    // ...and the join is the lattice join.
    for (Element x = 0; x < 4; ++x)
        for (Element y = 0; y < 4; ++y)
            CHECK(A.table("|").data[static_cast<std::size_t>(x * 4 + y)] == std::max(x, y));
}

TEST_CASE("derived operators have the documented tables") {
    auto t = j4_derived_tables();
    CHECK(t["delta"] == std::vector<Element>{0, 0, 0, 3});
    CHECK(t["delta"][2] == 0);  // delta of 2/3 is 0
    CHECK(t["~"] == std::vector<Element>{3, 0, 0, 0});
    CHECK(t["nabla"] == std::vector<Element>{0, 3, 3, 3});
    CHECK(t["alpha13"] == std::vector<Element>{0, 3, 0, 0});
    CHECK(t["beta13"] == std::vector<Element>{0, 1, 0, 0});  // 1/3 at 1/3, else 0
    CHECK(t["&"] == std::vector<Element>{0, 0, 0, 0, 0, 1, 1, 1, 0, 1, 2, 2, 0, 1, 2, 3});
    CHECK(t["->"] ==
          std::vector<Element>{3, 3, 3, 3, 0, 1, 2, 3, 0, 1, 2, 3, 0, 1, 2, 3});
}

TEST_CASE("the chain implication is definable and conversely") {
    DefinabilityReport rep = luk_imp_definability_check();
    CHECK(rep.luk_imp_ok);
    CHECK(rep.join_ok);
    CHECK(rep.square_ok);
    CHECK(rep.ok());

    // Spot values of the defined implication.
    FiniteAlgebra A = a4_algebra();
    Formula imp = parse(
        "((nabla !p | r) & (!p | nabla r) & !beta13 r)"
        " | ((~p & alpha13 r) | (alpha13 p & alpha13 r))",
        j4);
    CHECK(eval_formula(A, imp, {{"p", 2}, {"r", 1}}) == 2);
    CHECK(eval_formula(A, imp, {{"p", 3}, {"r", 0}}) == 0);
    for (Element x = 0; x < 4; ++x) CHECK(eval_formula(A, imp, {{"p", 0}, {"r", x}}) == 3);
}

TEST_CASE("axiom schema matching picks the first schema in order") {
    CHECK(match_axiom(Calculus::h4(), parse("sq (q | !q)", j4)) == "Ax8");
    CHECK(match_axiom(Calculus::h4(), parse("sq p -> p", j4)) == "Ax7");
    CHECK(!match_axiom(Calculus::h4(), parse("p -> q", j4)).has_value());
    // Instances with compound metavariable bindings.
    CHECK(match_axiom(Calculus::h4(), parse("sq ((p -> q) | !(p -> q))", j4)) == "Ax8");
    CHECK(match_axiom(Calculus::h4(), parse("p -> (q -> p)", j4)) == "C1");
    // Inconsistent binding is rejected.
    CHECK(!matches_schema(parse("A | !A", j4), parse("p | !q", j4)));
    CHECK(matches_schema(parse("A | !A", j4), parse("(p | q) | !(p | q)", j4)));
}

TEST_CASE("every schema is sound and the calculi differ in the explosion rule") {
    MatrixLogic J = j4_logic();
    for (const AxiomSchema& s : Calculus::h4().schemas()) {
        Substitution sub;
        sub.set("A", Formula::var("a"));
        sub.set("B", Formula::var("b"));
        sub.set("G", Formula::var("g"));
        CAPTURE(s.name);
        CHECK(is_valid(J, substitute(s.schema, sub)).holds);
    }
    CHECK(!Calculus::h4().allows_exp1());
    CHECK(Calculus::h4bar().allows_exp1());
    CHECK(Calculus::h4().schemas().size() == 18);
}

TEST_CASE("proof checking accepts the documented shapes") {
    // alpha, alpha -> beta |- beta
    Proof p;
    p.calculus = "H4";
    p.premises = {parse("p", j4), parse("p -> q", j4)};
    p.steps = {{parse("p", j4), {Justification::Kind::premise, "", -1, -1}},
               {parse("p -> q", j4), {Justification::Kind::premise, "", -1, -1}},
               {parse("q", j4), {Justification::Kind::mp, "", 0, 1}}};
    ProofCheckResult r = check_proof(p);
    CHECK(r.accepted);
    CHECK(r.semantics_checked);
    CHECK(r.semantics_ok);

    // One-step axiom instance.
    Proof ax;
    ax.calculus = "H4";
    ax.steps = {{parse("sq (p | !p)", j4), {Justification::Kind::axiom, "", -1, -1}}};
    CHECK(check_proof(ax).accepted);

    // Named axiom must actually match.
    ax.steps[0].just.axiom_name = "Ax7";
    CHECK(!check_proof(ax).accepted);
    ax.steps[0].just.axiom_name = "Ax8";
    CHECK(check_proof(ax).accepted);
    ax.steps[0].just.axiom_name = "Ax99";
    CHECK(!check_proof(ax).accepted);
}

TEST_CASE("proof checking rejects broken references and shapes") {
    Proof p;
    p.calculus = "H4";
    p.premises = {parse("p", j4)};
    // Forward reference.
    p.steps = {{parse("q", j4), {Justification::Kind::mp, "", 0, 1}},
               {parse("p -> q", j4), {Justification::Kind::premise, "", -1, -1}}};
    ProofCheckResult r = check_proof(p);
    CHECK(!r.accepted);
    CHECK(r.steps[0].note.find("backward") != std::string::npos);
    CHECK(!r.steps[1].ok);  // p -> q is not among the premises

    // Modus ponens against the wrong implication.
    Proof mp;
    mp.calculus = "H4";
    mp.premises = {parse("p", j4), parse("q -> r", j4)};
    mp.steps = {{parse("p", j4), {Justification::Kind::premise, "", -1, -1}},
                {parse("q -> r", j4), {Justification::Kind::premise, "", -1, -1}},
                {parse("r", j4), {Justification::Kind::mp, "", 0, 1}}};
    ProofCheckResult r2 = check_proof(mp);
    CHECK(!r2.accepted);
    CHECK(r2.steps[2].note.find("implication") != std::string::npos);
}

TEST_CASE("the explosion step needs its calculus and its exact shapes") {
    Formula contradiction = parse("p & !p", j4);
    Formula falsum = parse("~(p0 | ~p0)", j4);
    Proof p;
    p.calculus = "H4bar";
    p.premises = {contradiction};
    p.steps = {{contradiction, {Justification::Kind::premise, "", -1, -1}},
               {falsum, {Justification::Kind::exp1, "", 0, -1}}};
    ProofCheckResult ok = check_proof(p);
    CHECK(ok.accepted);
    CHECK(ok.semantics_checked);
    CHECK(ok.semantics_ok);  // valid in the product semantics

    ProofCheckResult rejected = check_proof(Calculus::h4(), p.premises, p.steps);
    CHECK(!rejected.accepted);
    CHECK(rejected.steps[1].note.find("not part of H4") != std::string::npos);

    // Wrong source shape.
    Proof bad;
    bad.calculus = "H4bar";
    bad.premises = {parse("p", j4)};
    bad.steps = {{parse("p", j4), {Justification::Kind::premise, "", -1, -1}},
                 {falsum, {Justification::Kind::exp1, "", 0, -1}}};
    CHECK(!check_proof(bad).accepted);

    // Wrong conclusion shape.
    Proof bad2;
    bad2.calculus = "H4bar";
    bad2.premises = {contradiction};
    bad2.steps = {{contradiction, {Justification::Kind::premise, "", -1, -1}},
                  {parse("~(p0 | p0)", j4), {Justification::Kind::exp1, "", 0, -1}}};
    CHECK(!check_proof(bad2).accepted);

    // Falsum really is constantly bottom.
    FiniteAlgebra A = a4_algebra();
    for (Element x = 0; x < 4; ++x) CHECK(eval_formula(A, falsum, {{"p0", x}}) == 0);
}

TEST_CASE("proof files round-trip through JSON") {
    Proof p = Proof::from_file(corpus_dir() / "proofs" / "mp_from_premises.json");
    CHECK(p.calculus == "H4");
    CHECK(p.premises.size() == 2);
    CHECK(p.steps.size() == 3);
    CHECK(check_proof(p).accepted);
    CHECK_THROWS(Proof::from_json_text("{\"calculus\":\"H9\",\"steps\":[]}"));
    CHECK_THROWS(Proof::from_json_text("not json"));
}

TEST_CASE("countermodel search over the four-valued matrix") {
    std::vector<Formula> gamma = {parse("p", j4), parse("!p", j4)};
    Verdict v = countermodel_j4(gamma, parse("q", j4));
    REQUIRE(!v.holds);
    CHECK(v.countermodel->vars == std::vector<std::string>{"p", "q"});
    CHECK(v.countermodel->values == std::vector<Element>{1, 0});  // p=1/3, q=0

    CHECK(countermodel_j4({}, parse("!~p -> p", j4)).holds);
    std::vector<Formula> single = {parse("p", j4)};
    CHECK(countermodel_j4(single, parse("p", j4)).holds);
    // The truth-stresser distribution law.
    CHECK(countermodel_j4({}, parse("sq (p -> q) -> (sq p -> sq q)", j4)).holds);
}

TEST_CASE("deduction theorem for the primitive-rule calculus") {
    std::vector<DtSample> samples;
    samples.push_back({{}, parse("p", j4), parse("p", j4)});
    samples.push_back({{parse("q", j4)}, parse("p & !p", j4), parse("q", j4)});
    Rng rng(0x40);
    for (int t = 0; t < 50; ++t)
        samples.push_back({{random_formula(rng, j4, 3, 2)}, random_formula(rng, j4, 3, 2),
                           random_formula(rng, j4, 3, 2)});
    DtReport rep = deduction_theorem_check(samples);
    CHECK(rep.checked == 52);
    CHECK(rep.failures == 0);
    CHECK(rep.pointwise_ok);
}

TEST_CASE("membership laws and designation classicality") {
    for (const auto& [name, ok] : maxj4_designation_shadows()) {
        CAPTURE(name);
        CHECK(ok);
    }
    CHECK(designation_classicality());
}

TEST_CASE("searched proofs of valid formulas pass the checker") {
    // Completeness smoke test: machine-found derivations for a small corpus
    // of valid goals, each re-checked step by step and against the matrix.
    const char* goals[] = {
        "p -> p",
        "p | !p",
        "sq (p | !p)",
        "q -> (p | !p)",
        "!~p -> p",
        "(p | !p) | q",
        "p -> (q -> p)",
    };
    for (const char* text : goals) {
        CAPTURE(text);
        Formula goal = parse(text, j4);
        auto proof = search_proof(Calculus::h4(), {}, goal);
        REQUIRE(proof.has_value());
        CHECK(proof->steps.back().formula == goal);
        ProofCheckResult r = check_proof(*proof);
        CHECK(r.accepted);
        CHECK(r.semantics_ok);
    }
    // From premises.
    std::vector<Formula> prem = {parse("p", j4), parse("p -> q", j4)};
    auto mp = search_proof(Calculus::h4(), prem, parse("q", j4));
    REQUIRE(mp.has_value());
    CHECK(check_proof(*mp).accepted);
    // Non-theorems stay out of reach.
    CHECK(!search_proof(Calculus::h4(), {}, parse("p", j4), 4).has_value());
    CHECK(!search_proof(Calculus::h4(), {}, parse("p -> q", j4), 4).has_value());
}

TEST_CASE("the classical fragment of the four-element algebra is two-valued") {
    SubMatrix frag = classical_fragment(j4_logic());
    CHECK(frag.embedding == std::vector<Element>{0, 3});
    FiniteAlgebra expect = a2_sigma_algebra();
    for (const char* sym : {"|", "!", "sq"})
        CHECK(frag.logic.algebra().table(sym).data == expect.table(sym).data);
    CHECK(frag.logic.designated().members() == std::vector<Element>{1});
}

TEST_CASE("ideal-paraconsistency facing of the four-valued logic") {
    MatrixLogic J = j4_logic();
    CHECK(is_paraconsistent(J, parse("!p", j4)).paraconsistent);
    CHECK(is_deductive_implication(J, parse("x -> y", j4)));
    CHECK(!is_paraconsistent(j4bar_logic(), parse("!p", j4)).paraconsistent);
    // Consistency operator from the Goedel negation.
    CHECK(lfi_check(J, parse("!p", j4), parse("~(p & !p)", j4)));
    // Sampled inclusion in the classical fragment.
    SubMatrix frag = classical_fragment(J);
    Rng rng(0x2e2e);
    std::vector<Sequent> samples;
    for (int t = 0; t < 60; ++t) samples.push_back(random_sequent(rng, j4, 4, 3, 2));
    CHECK(sublogic_check(J, frag.logic, frag.embedding, samples).ok());
}
