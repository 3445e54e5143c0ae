#pragma once

// The four-valued logic over the {|, !, sq} signature: its defining algebra,
// derived operators, the Hilbert calculi (with and without the explosion
// rule) and a proof checker for them.

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lukamax/matrix.hpp"

namespace lukamax {

// ── Algebra and matrices ────────────────────────────────────────────────────

// Carrier {0, 1/3, 2/3, 1}; join is max, negation is 1-x, square is the
// Lukasiewicz x (x) x.
FiniteAlgebra a4_algebra();
// Two-element Boolean algebra over the same signature with square = identity.
FiniteAlgebra a2_sigma_algebra();

MatrixLogic j4_logic();     // <A4, {1/3, 2/3, 1}>
MatrixLogic j4bar_logic();  // <A4 x A2, F x {1}>

// Evaluated tables of the derived operators (delta, ~, ->, <->, &, nabla,
// alpha13, beta13); binary entries row-major.
std::map<std::string, std::vector<Element>> j4_derived_tables();

struct DefinabilityReport {
    bool luk_imp_ok = false;  // the Sigma term for -> matches chain(3)
    bool join_ok = false;     // chain(3) defines the join...
    bool square_ok = false;   // ...and the square
    bool ok() const { return luk_imp_ok && join_ok && square_ok; }
};

// Functional equivalence of the two presentations of the 4-element carrier.
DefinabilityReport luk_imp_definability_check();

// ── Hilbert calculi ─────────────────────────────────────────────────────────

struct AxiomSchema {
    std::string name;
    Formula schema;  // metavariables A, B, G at the leaves
};

class Calculus {
public:
    const std::string& name() const noexcept { return name_; }
    const std::vector<AxiomSchema>& schemas() const noexcept { return schemas_; }
    bool allows_exp1() const noexcept { return allows_exp1_; }
    const AxiomSchema* find_schema(std::string_view name) const noexcept;

    static const Calculus& h4();
    static const Calculus& h4bar();  // h4 plus the explosion rule

private:
    Calculus(std::string name, std::vector<AxiomSchema> schemas, bool exp1)
        : name_(std::move(name)), schemas_(std::move(schemas)), allows_exp1_(exp1) {}
    std::string name_;
    std::vector<AxiomSchema> schemas_;
    bool allows_exp1_;
};

// Second-order matching with metavariables at the leaves, performed on the
// expanded core forms of both sides.
bool matches_schema(const Formula& schema, const Formula& candidate);

// First schema (document order) instantiated by f, if any.
std::optional<std::string> match_axiom(const Calculus& cal, const Formula& f);

// ── Proofs ──────────────────────────────────────────────────────────────────

struct Justification {
    enum class Kind { premise, axiom, mp, exp1 };
    Kind kind = Kind::premise;
    std::string axiom_name;   // optional; empty means "any schema"
    int from1 = -1, from2 = -1;  // 0-based step references
};

struct ProofStep {
    Formula formula;
    Justification just;
};

struct Proof {
    std::string calculus;  // "H4" | "H4bar"
    std::vector<Formula> premises;
    std::vector<ProofStep> steps;

    static Proof from_json_text(const std::string& text);
    static Proof from_file(const std::filesystem::path& path);
};

struct StepDiagnostic {
    int index = 0;  // 1-based, as in proof files
    bool ok = false;
    std::string note;
};

struct ProofCheckResult {
    bool accepted = false;
    std::vector<StepDiagnostic> steps;
    bool semantics_checked = false;  // matrix cross-check of the conclusion
    bool semantics_ok = false;
    std::string json;
};

ProofCheckResult check_proof(const Calculus& cal, std::span<const Formula> premises,
                             std::span<const ProofStep> steps, const EngineOptions& opt = {});
ProofCheckResult check_proof(const Proof& proof, const EngineOptions& opt = {});

// Iterative-deepening backward search over axioms, premises and modus
// ponens (no explosion steps).  Small-scale completeness smoke machinery;
// the returned proof passes check_proof.
std::optional<Proof> search_proof(const Calculus& cal, std::span<const Formula> premises,
                                  const Formula& goal, int max_depth = 6);

// ── Semantic checks ─────────────────────────────────────────────────────────

Verdict countermodel_j4(std::span<const Formula> premises, const Formula& conclusion,
                        const EngineOptions& opt = {});

struct DtSample {
    std::vector<Formula> gamma;
    Formula alpha, beta;
};

struct DtReport {
    int checked = 0;
    int failures = 0;
    bool pointwise_ok = false;
    bool ok() const { return failures == 0 && pointwise_ok; }
};

// Gamma, alpha |- beta iff Gamma |- alpha -> beta, on the given samples, plus
// the pointwise deductive-implication property of ->.
DtReport deduction_theorem_check(std::span<const DtSample> samples,
                                 const EngineOptions& opt = {});

// The twelve membership laws of maximal theories, read as designation
// statements over the 4-element carrier.
std::vector<std::pair<std::string, bool>> maxj4_designation_shadows();

// Designation of a | b, a -> b and ~a depends only on the designation of the
// arguments.
bool designation_classicality();

}  // namespace lukamax
