#include "lukamax/jfour.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace lukamax {

// ── Algebra ─────────────────────────────────────────────────────────────────

FiniteAlgebra a4_algebra() {
    OpTable join{2, {}};
    join.data.resize(16);
    for (Element a = 0; a < 4; ++a)
        for (Element b = 0; b < 4; ++b) join.data[static_cast<std::size_t>(a * 4 + b)] = std::max(a, b);
    OpTable neg{1, {3, 2, 1, 0}};
    OpTable sq{1, {0, 0, 1, 3}};
    return FiniteAlgebra::custom("A4", Signature::j4(), 4,
                                 {std::move(join), std::move(neg), std::move(sq)},
                                 {"0", "1/3", "2/3", "1"});
}

FiniteAlgebra a2_sigma_algebra() {
    OpTable join{2, {0, 1, 1, 1}};
    OpTable neg{1, {1, 0}};
    OpTable sq{1, {0, 1}};
    return FiniteAlgebra::custom("A2", Signature::j4(), 2,
                                 {std::move(join), std::move(neg), std::move(sq)}, {"0", "1"});
}

MatrixLogic j4_logic() {
    return MatrixLogic::custom(a4_algebra(), DesignatedSet(4, {1, 2, 3}), "j4");
}

MatrixLogic j4bar_logic() {
    FiniteAlgebra P = FiniteAlgebra::product(a4_algebra(), a2_sigma_algebra());
    std::vector<Element> desig;
    for (Element a = 1; a <= 3; ++a) desig.push_back(a * 2 + 1);
    return MatrixLogic::custom(std::move(P), DesignatedSet(8, std::move(desig)), "j4bar");
}

std::map<std::string, std::vector<Element>> j4_derived_tables() {
    FiniteAlgebra A = a4_algebra();
    std::map<std::string, std::vector<Element>> out;
    for (const char* sym : {"delta", "~", "nabla", "alpha13", "beta13"}) {
        Formula f = expand(Formula::unary(sym, Formula::var("x")), A.sig());
        const std::vector<std::string> order = {"x"};
        CompiledFormula cf(A, f, order);
        std::vector<Element> t(4);
        for (Element a = 0; a < 4; ++a) {
            std::array<Element, 1> in{a};
            t[static_cast<std::size_t>(a)] = cf.eval(in);
        }
        out[sym] = std::move(t);
    }
    for (const char* sym : {"->", "<->", "&"}) {
        Formula f = expand(Formula::binary(sym, Formula::var("x"), Formula::var("y")), A.sig());
        const std::vector<std::string> order = {"x", "y"};
        CompiledFormula cf(A, f, order);
        std::vector<Element> t(16);
        for (Element a = 0; a < 4; ++a)
            for (Element b = 0; b < 4; ++b) {
                std::array<Element, 2> in{a, b};
                t[static_cast<std::size_t>(a * 4 + b)] = cf.eval(in);
            }
        out[sym] = std::move(t);
    }
    return out;
}

DefinabilityReport luk_imp_definability_check() {
    DefinabilityReport rep;
    FiniteAlgebra A4 = a4_algebra();
    FiniteAlgebra C3 = FiniteAlgebra::chain(3);
    // Lukasiewicz implication written with the Sigma operators.
    Formula imp = parse(
        "((nabla !p | r) & (!p | nabla r) & !beta13 r)"
        " | ((~p & alpha13 r) | (alpha13 p & alpha13 r))",
        Signature::j4());
    const std::vector<std::string> order = {"p", "r"};
    CompiledFormula sigma_imp(A4, expand(imp, A4.sig()), order);
    CompiledFormula luk_imp(C3, expand(parse("p -> r", Signature::luk()), C3.sig()), order);
    rep.luk_imp_ok = true;
    for (Element a = 0; a < 4; ++a)
        for (Element b = 0; b < 4; ++b) {
            std::array<Element, 2> in{a, b};
            if (sigma_imp.eval(in) != luk_imp.eval(in)) rep.luk_imp_ok = false;
        }
    // Conversely the chain defines join and square.
    CompiledFormula luk_join(C3, expand(parse("p | r", Signature::luk()), C3.sig()), order);
    rep.join_ok = true;
    for (Element a = 0; a < 4; ++a)
        for (Element b = 0; b < 4; ++b) {
            std::array<Element, 2> in{a, b};
            if (luk_join.eval(in) != A4.table("|").data[static_cast<std::size_t>(a * 4 + b)])
                rep.join_ok = false;
        }
    const std::vector<std::string> one = {"p"};
    CompiledFormula luk_sq(C3, expand(parse("p o* p", Signature::luk()), C3.sig()), one);
    rep.square_ok = true;
    for (Element a = 0; a < 4; ++a) {
        std::array<Element, 1> in{a};
        if (luk_sq.eval(in) != A4.table("sq").data[static_cast<std::size_t>(a)])
            rep.square_ok = false;
    }
    return rep;
}

// ── Calculi ─────────────────────────────────────────────────────────────────

namespace {

std::vector<AxiomSchema> make_schemas() {
    const Signature& sig = Signature::j4();
    auto ax = [&](const char* name, const char* text) {
        return AxiomSchema{name, parse(text, sig)};
    };
    return {
        ax("C1", "A -> (B -> A)"),
        ax("C2", "(A -> (B -> G)) -> ((A -> B) -> (A -> G))"),
        ax("C3", "(~A -> ~B) -> (B -> A)"),
        ax("C4", "A -> (A | B)"),
        ax("C5", "B -> (A | B)"),
        ax("C6", "(A -> G) -> ((B -> G) -> ((A | B) -> G))"),
        ax("Ax1", "!~A -> A"),
        ax("Ax2", "A | !A"),
        ax("Ax3", "!!A <-> A"),
        ax("Ax4", "!(A | B) -> !A"),
        ax("Ax5", "!(A | B) -> !B"),
        ax("Ax6", "!A -> (!B -> !(A | B))"),
        ax("Ax7", "sq A -> A"),
        ax("Ax8", "sq (A | !A)"),
        ax("Ax9", "sq A -> ~ sq !A"),
        ax("Ax10", "sq sq A <-> ~ !A"),
        ax("Ax11", "! sq A <-> !A"),
        ax("Ax12", "sq (A | B) <-> (sq A | sq B)"),
    };
}

}  // namespace

const AxiomSchema* Calculus::find_schema(std::string_view name) const noexcept {
    for (const auto& s : schemas_)
        if (s.name == name) return &s;
    return nullptr;
}

const Calculus& Calculus::h4() {
    static const Calculus cal("H4", make_schemas(), false);
    return cal;
}

const Calculus& Calculus::h4bar() {
    static const Calculus cal("H4bar", make_schemas(), true);
    return cal;
}

namespace {

bool match_rec(const Formula& pat, const Formula& cand,
               std::map<std::string, Formula>& binding) {
    if (pat.is_var()) {
        auto [it, inserted] = binding.try_emplace(pat.var_name(), cand);
        return inserted || it->second == cand;
    }
    if (cand.is_var()) return false;
    if (pat.symbol() != cand.symbol() || pat.children().size() != cand.children().size())
        return false;
    for (std::size_t i = 0; i < pat.children().size(); ++i)
        if (!match_rec(pat.children()[i], cand.children()[i], binding)) return false;
    return true;
}

std::optional<std::map<std::string, Formula>> match_expanded(const Formula& schema,
                                                             const Formula& candidate) {
    const Signature& sig = Signature::j4();
    std::map<std::string, Formula> binding;
    if (match_rec(expand(schema, sig), expand(candidate, sig), binding)) return binding;
    return std::nullopt;
}

}  // namespace

bool matches_schema(const Formula& schema, const Formula& candidate) {
    return match_expanded(schema, candidate).has_value();
}

std::optional<std::string> match_axiom(const Calculus& cal, const Formula& f) {
    for (const auto& s : cal.schemas())
        if (matches_schema(s.schema, f)) return s.name;
    return std::nullopt;
}

// ── Proofs ──────────────────────────────────────────────────────────────────

Proof Proof::from_json_text(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    Proof p;
    p.calculus = j.at("calculus").get<std::string>();
    if (p.calculus != "H4" && p.calculus != "H4bar")
        throw std::runtime_error("unknown calculus '" + p.calculus + "'");
    const Signature& sig = Signature::j4();
    if (j.contains("premises"))
        for (const auto& s : j.at("premises")) p.premises.push_back(parse(s.get<std::string>(), sig));
    for (const auto& js : j.at("steps")) {
        ProofStep step{parse(js.at("formula").get<std::string>(), sig), {}};
        const auto& just = js.at("just");
        std::string type = just.at("type").get<std::string>();
        if (type == "premise") {
            step.just.kind = Justification::Kind::premise;
        } else if (type == "axiom") {
            step.just.kind = Justification::Kind::axiom;
            if (just.contains("name")) step.just.axiom_name = just.at("name").get<std::string>();
        } else if (type == "mp") {
            step.just.kind = Justification::Kind::mp;
            auto from = just.at("from");
            if (!from.is_array() || from.size() != 2)
                throw std::runtime_error("mp justification needs two step references");
            step.just.from1 = from[0].get<int>() - 1;
            step.just.from2 = from[1].get<int>() - 1;
        } else if (type == "exp1") {
            step.just.kind = Justification::Kind::exp1;
            step.just.from1 = just.at("from").get<int>() - 1;
        } else {
            throw std::runtime_error("unknown justification type '" + type + "'");
        }
        p.steps.push_back(std::move(step));
    }
    return p;
}

Proof Proof::from_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open proof file " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return from_json_text(ss.str());
}

namespace {

// falsum shape: ~(v | ~v) for a propositional variable v.
bool is_falsum(const Formula& f) {
    auto binding = match_expanded(parse("~(A | ~A)", Signature::j4()), f);
    return binding && binding->at("A").is_var();
}

bool is_contradiction(const Formula& f) {
    return matches_schema(parse("A & !A", Signature::j4()), f);
}

}  // namespace

ProofCheckResult check_proof(const Calculus& cal, std::span<const Formula> premises,
                             std::span<const ProofStep> steps, const EngineOptions& opt) {
    const Signature& sig = Signature::j4();
    ProofCheckResult res;
    std::vector<Formula> expanded_premises;
    for (const auto& p : premises) expanded_premises.push_back(expand(p, sig));

    bool all_ok = !steps.empty();
    for (std::size_t idx = 0; idx < steps.size(); ++idx) {
        const ProofStep& st = steps[idx];
        StepDiagnostic diag{static_cast<int>(idx) + 1, false, ""};
        Formula cur = expand(st.formula, sig);
        auto backref = [&](int r) {
            return r >= 0 && static_cast<std::size_t>(r) < idx;
        };
        switch (st.just.kind) {
            case Justification::Kind::premise: {
                bool found = std::any_of(expanded_premises.begin(), expanded_premises.end(),
                                         [&](const Formula& p) { return p == cur; });
                diag.ok = found;
                diag.note = found ? "premise" : "formula is not among the premises";
                break;
            }
            case Justification::Kind::axiom: {
                if (st.just.axiom_name.empty()) {
                    auto name = match_axiom(cal, st.formula);
                    diag.ok = name.has_value();
                    diag.note = name ? "axiom " + *name : "no axiom schema matches";
                } else if (const AxiomSchema* s = cal.find_schema(st.just.axiom_name)) {
                    diag.ok = matches_schema(s->schema, st.formula);
                    diag.note = diag.ok ? "axiom " + s->name
                                        : "formula is not an instance of " + s->name;
                } else {
                    diag.note = "unknown axiom '" + st.just.axiom_name + "'";
                }
                break;
            }
            case Justification::Kind::mp: {
                if (!backref(st.just.from1) || !backref(st.just.from2)) {
                    diag.note = "modus ponens references must point strictly backward";
                    break;
                }
                Formula want = expand(
                    Formula::binary("->", steps[static_cast<std::size_t>(st.just.from1)].formula,
                                    st.formula),
                    sig);
                Formula have =
                    expand(steps[static_cast<std::size_t>(st.just.from2)].formula, sig);
                diag.ok = want == have;
                diag.note = diag.ok ? "mp" : "second reference is not the matching implication";
                break;
            }
            case Justification::Kind::exp1: {
                if (!cal.allows_exp1()) {
                    diag.note = "explosion rule is not part of " + cal.name();
                    break;
                }
                if (!backref(st.just.from1)) {
                    diag.note = "explosion reference must point strictly backward";
                    break;
                }
                if (!is_contradiction(steps[static_cast<std::size_t>(st.just.from1)].formula)) {
                    diag.note = "referenced step is not of the shape phi & !phi";
                    break;
                }
                if (!is_falsum(st.formula)) {
                    diag.note = "conclusion of the explosion rule must be falsum";
                    break;
                }
                diag.ok = true;
                diag.note = "exp1";
                break;
            }
        }
        all_ok = all_ok && diag.ok;
        res.steps.push_back(std::move(diag));
    }
    res.accepted = all_ok;

    if (res.accepted) {
        MatrixLogic L = cal.allows_exp1() ? j4bar_logic() : j4_logic();
        Sequent s{std::vector<Formula>(premises.begin(), premises.end()),
                  steps.back().formula};
        res.semantics_checked = true;
        res.semantics_ok = entails(L, s, opt).holds;
    }

    nlohmann::json j;
    j["calculus"] = cal.name();
    j["accepted"] = res.accepted;
    nlohmann::json sj = nlohmann::json::array();
    for (const auto& d : res.steps)
        sj.push_back({{"index", d.index}, {"ok", d.ok}, {"note", d.note}});
    j["steps"] = sj;
    if (res.semantics_checked) j["semantic_cross_check"] = res.semantics_ok;
    res.json = j.dump(2);
    return res;
}

ProofCheckResult check_proof(const Proof& proof, const EngineOptions& opt) {
    const Calculus& cal = proof.calculus == "H4bar" ? Calculus::h4bar() : Calculus::h4();
    return check_proof(cal, proof.premises, proof.steps, opt);
}

// ── Proof search ────────────────────────────────────────────────────────────

namespace {

class ProofSearch {
public:
    ProofSearch(const Calculus& cal, std::span<const Formula> premises)
        : cal_(cal), premises_(premises.begin(), premises.end()) {
        const Signature& sig = Signature::j4();
        for (const Formula& p : premises_) expanded_premises_.push_back(expand(p, sig));
    }

    std::optional<Proof> run(const Formula& goal, int max_depth) {
        for (int depth = 0; depth <= max_depth; ++depth) {
            steps_.clear();
            proved_.clear();
            failed_.clear();
            if (prove(goal, depth) >= 0) {
                Proof p;
                p.calculus = cal_.name();
                p.premises = premises_;
                p.steps = steps_;
                return p;
            }
        }
        return std::nullopt;
    }

private:
    const Calculus& cal_;
    std::vector<Formula> premises_;
    std::vector<Formula> expanded_premises_;
    std::vector<ProofStep> steps_;
    std::map<std::string, int> proved_;  // rendered expansion -> step index
    std::map<std::string, int> failed_;  // rendered expansion -> depth that failed

    int emit(Formula f, Justification just) {
        std::string key = render(expand(f, Signature::j4()));
        steps_.push_back({std::move(f), std::move(just)});
        int idx = static_cast<int>(steps_.size()) - 1;
        proved_.emplace(std::move(key), idx);
        return idx;
    }

    // Returns the step index proving `goal`, or -1 within this depth budget.
    int prove(const Formula& goal, int depth) {
        const Signature& sig = Signature::j4();
        Formula goal_exp = expand(goal, sig);
        std::string key = render(goal_exp);
        if (auto it = proved_.find(key); it != proved_.end()) return it->second;
        if (auto it = failed_.find(key); it != failed_.end() && it->second >= depth) return -1;

        for (std::size_t i = 0; i < premises_.size(); ++i)
            if (expanded_premises_[i] == goal_exp)
                return emit(goal, {Justification::Kind::premise, "", -1, -1});
        if (auto name = match_axiom(cal_, goal))
            return emit(goal, {Justification::Kind::axiom, *name, -1, -1});
        if (depth == 0) {
            failed_[key] = depth;
            return -1;
        }

        // Backward modus ponens through premise implications.
        for (std::size_t i = 0; i < premises_.size(); ++i) {
            const Formula& w = premises_[i];
            if (w.is_var() || w.symbol() != "->") continue;
            if (expand(w.children()[1], sig) != goal_exp) continue;
            int sub = prove(w.children()[0], depth - 1);
            if (sub < 0) continue;
            int imp = prove(w, depth - 1);
            if (imp < 0) continue;
            return emit(goal, {Justification::Kind::mp, "", sub, imp});
        }
        // Backward modus ponens through right-nested implication schemas:
        // match the goal against the schema tail after stripping 1..k
        // antecedents, prove the antecedents, then chain the detachments.
        // Metavariables not fixed by the tail are instantiated with the goal.
        for (const AxiomSchema& s : cal_.schemas()) {
            std::vector<Formula> heads;
            std::vector<Formula> tails;  // tails[j] = schema after j antecedents
            Formula cur = s.schema;
            while (!cur.is_var() && cur.symbol() == "->") {
                heads.push_back(cur.children()[0]);
                cur = cur.children()[1];
                tails.push_back(cur);
            }
            for (std::size_t k = 1; k <= heads.size(); ++k) {
                std::map<std::string, Formula> binding;
                if (!match_rec(expand(tails[k - 1], sig), goal_exp, binding)) continue;
                Substitution sub;
                for (const auto& [v, f] : binding) sub.set(v, f);
                for (std::size_t j = 0; j < k; ++j)
                    for (const auto& v : vars(heads[j]))
                        if (!binding.count(v)) sub.set(v, goal);
                std::vector<int> antecedents;
                bool all = true;
                for (std::size_t j = 0; j < k && all; ++j) {
                    int ai = prove(substitute(heads[j], sub), depth - 1);
                    if (ai < 0)
                        all = false;
                    else
                        antecedents.push_back(ai);
                }
                if (!all) continue;
                int imp = emit(substitute(s.schema, sub),
                               {Justification::Kind::axiom, s.name, -1, -1});
                int result = -1;
                for (std::size_t j = 0; j < k; ++j) {
                    result = emit(substitute(tails[j], sub),
                                  {Justification::Kind::mp, "", antecedents[j], imp});
                    imp = result;
                }
                return result;
            }
        }
        failed_[key] = depth;
        return -1;
    }
};

}  // namespace

std::optional<Proof> search_proof(const Calculus& cal, std::span<const Formula> premises,
                                  const Formula& goal, int max_depth) {
    return ProofSearch(cal, premises).run(goal, max_depth);
}

// ── Semantic checks ─────────────────────────────────────────────────────────

Verdict countermodel_j4(std::span<const Formula> premises, const Formula& conclusion,
                        const EngineOptions& opt) {
    return entails(j4_logic(), Sequent{std::vector<Formula>(premises.begin(), premises.end()),
                                       conclusion},
                   opt);
}

DtReport deduction_theorem_check(std::span<const DtSample> samples, const EngineOptions& opt) {
    DtReport rep;
    MatrixLogic L = j4_logic();
    for (const DtSample& s : samples) {
        ++rep.checked;
        Sequent with{s.gamma, s.beta};
        with.premises.push_back(s.alpha);
        Sequent arrow{s.gamma, Formula::binary("->", s.alpha, s.beta)};
        if (entails(L, with, opt).holds != entails(L, arrow, opt).holds) ++rep.failures;
    }
    rep.pointwise_ok = is_deductive_implication(
        L, Formula::binary("->", Formula::var("x"), Formula::var("y")));
    return rep;
}

std::vector<std::pair<std::string, bool>> maxj4_designation_shadows() {
    MatrixLogic L = j4_logic();
    const FiniteAlgebra& A = L.algebra();
    auto d = [&](Element e) { return L.is_designated(e); };
    auto tables = j4_derived_tables();
    const auto& neg = A.table("!").data;
    const auto& join = A.table("|").data;
    const auto& sq = A.table("sq").data;
    const auto& gneg = tables["~"];
    const auto& imp = tables["->"];
    auto J = [&](Element a, Element b) { return join[static_cast<std::size_t>(a * 4 + b)]; };
    auto I = [&](Element a, Element b) { return imp[static_cast<std::size_t>(a * 4 + b)]; };
    auto N = [&](Element a) { return neg[static_cast<std::size_t>(a)]; };
    auto G = [&](Element a) { return gneg[static_cast<std::size_t>(a)]; };
    auto S = [&](Element a) { return sq[static_cast<std::size_t>(a)]; };

    std::vector<std::pair<std::string, bool>> out;
    auto check1 = [&](const std::string& name, auto pred) {
        bool ok = true;
        for (Element a = 0; a < 4; ++a) ok = ok && pred(a);
        out.emplace_back(name, ok);
    };
    auto check2 = [&](const std::string& name, auto pred) {
        bool ok = true;
        for (Element a = 0; a < 4; ++a)
            for (Element b = 0; b < 4; ++b) ok = ok && pred(a, b);
        out.emplace_back(name, ok);
    };
    check2("1:join", [&](Element a, Element b) { return d(J(a, b)) == (d(a) || d(b)); });
    check1("2:gneg", [&](Element a) { return !d(a) == d(G(a)); });
    check2("3:imp", [&](Element a, Element b) { return d(I(a, b)) == (!d(a) || d(b)); });
    check1("4:neg", [&](Element a) { return d(a) || d(N(a)); });
    check1("5:dneg", [&](Element a) { return d(a) == d(N(N(a))); });
    check1("6:neg-gneg", [&](Element a) { return !d(N(G(a))) || d(a); });
    check2("7:neg-join",
           [&](Element a, Element b) { return d(N(J(a, b))) == (d(N(a)) && d(N(b))); });
    check1("8:sq", [&](Element a) { return !d(S(a)) || d(a); });
    check2("9:sq-join",
           [&](Element a, Element b) { return d(S(J(a, b))) == (d(S(a)) || d(S(b))); });
    check1("10:sq-sq", [&](Element a) { return d(S(S(a))) == !d(N(a)); });
    check1("11:neg-sq", [&](Element a) { return d(N(S(a))) == d(N(a)); });
    check1("12:sq-neg", [&](Element a) { return !d(S(a)) == d(S(N(a))); });
    return out;
}

bool designation_classicality() {
    MatrixLogic L = j4_logic();
    auto tables = j4_derived_tables();
    const auto& join = L.algebra().table("|").data;
    const auto& imp = tables["->"];
    const auto& gneg = tables["~"];
    auto d = [&](Element e) { return L.is_designated(e); };
    for (Element a = 0; a < 4; ++a)
        for (Element b = 0; b < 4; ++b)
            for (Element a2 = 0; a2 < 4; ++a2)
                for (Element b2 = 0; b2 < 4; ++b2) {
                    if (d(a) != d(a2) || d(b) != d(b2)) continue;
                    if (d(join[static_cast<std::size_t>(a * 4 + b)]) !=
                        d(join[static_cast<std::size_t>(a2 * 4 + b2)]))
                        return false;
                    if (d(imp[static_cast<std::size_t>(a * 4 + b)]) !=
                        d(imp[static_cast<std::size_t>(a2 * 4 + b2)]))
                        return false;
                }
    for (Element a = 0; a < 4; ++a)
        for (Element a2 = 0; a2 < 4; ++a2) {
            if (d(a) != d(a2)) continue;
            if (d(gneg[static_cast<std::size_t>(a)]) != d(gneg[static_cast<std::size_t>(a2)]))
                return false;
        }
    return true;
}

}  // namespace lukamax
