#pragma once

// Matrix logics and semantic consequence by exhaustive evaluation over all
// assignments.  Countermodels are reported lexicographically least (variable
// order = first occurrence across premises then conclusion, element order =
// index order), so outputs are reproducible.

#include <optional>
#include <string>
#include <vector>

#include "lukamax/algebra.hpp"
#include "lukamax/formula.hpp"

namespace lukamax {

// ── MatrixLogic ─────────────────────────────────────────────────────────────

class MatrixLogic {
public:
    enum class Family { luk, lukbar, custom };

    // <chain(n), F_{i/n}>
    static MatrixLogic luk(int n, int i);
    // <chain(n) x chain(1), F_{i/n} x {1}>
    static MatrixLogic lukbar(int n, int i);
    // Classical logic as the two-element chain: luk(1, 1).
    static MatrixLogic cpl();
    static MatrixLogic custom(FiniteAlgebra algebra, DesignatedSet designated, std::string id);

    const FiniteAlgebra& algebra() const noexcept { return algebra_; }
    const DesignatedSet& designated() const noexcept { return designated_; }
    bool is_designated(Element e) const { return designated_.contains(e); }
    const std::string& id() const noexcept { return id_; }
    Family family() const noexcept { return family_; }
    int luk_n() const noexcept { return n_; }
    int luk_i() const noexcept { return i_; }

private:
    MatrixLogic(FiniteAlgebra a, DesignatedSet d, std::string id, Family f, int n, int i)
        : algebra_(std::move(a)), designated_(std::move(d)), id_(std::move(id)), family_(f),
          n_(n), i_(i) {}

    FiniteAlgebra algebra_;
    DesignatedSet designated_;
    std::string id_;
    Family family_;
    int n_, i_;
};

// ── Sequents and verdicts ───────────────────────────────────────────────────

struct Sequent {
    std::vector<Formula> premises;
    Formula conclusion;

    // Text form `phi1 ; phi2 |- psi`; a missing `|-` means no premises.
    static Sequent parse_text(std::string_view text, const Signature& sig);
};

// Variables of a sequent in first-occurrence order (premises, then conclusion).
std::vector<std::string> sequent_vars(const Sequent& s);

struct NamedAssignment {
    std::vector<std::string> vars;
    std::vector<Element> values;
    Assignment as_map() const;
};

struct Verdict {
    bool holds = true;
    std::optional<NamedAssignment> countermodel;
    std::vector<Element> premise_values;  // at the countermodel
    Element conclusion_value = 0;
};

std::string verdict_json(const MatrixLogic& L, const Sequent& s, const Verdict& v);

struct EngineOptions {
    int max_vars = 10;
    int jobs = 1;
};

class BoundError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// ── Consequence ─────────────────────────────────────────────────────────────

Verdict entails(const MatrixLogic& L, const Sequent& s, const EngineOptions& opt = {});
Verdict is_valid(const MatrixLogic& L, const Formula& f, const EngineOptions& opt = {});
// Matrix consequence is structural, so checking the sequent on its own
// variables decides the rule.
Verdict rule_valid(const MatrixLogic& L, const Sequent& s, const EngineOptions& opt = {});

// ── Paraconsistency and LFI checks ──────────────────────────────────────────

struct ParaconsistencyResult {
    bool paraconsistent = false;
    Element witness_a = 0;  // a and neg(a) designated
    Element witness_b = 0;  // not designated
};

ParaconsistencyResult is_paraconsistent(const MatrixLogic& L, const Formula& neg_template);

// Pointwise deduction-detachment property of a two-variable template:
// imp(a,b) designated  iff  (a designated implies b designated).
bool is_deductive_implication(const MatrixLogic& L, const Formula& imp_template);

// L paraconsistent w.r.t. neg, yet {a : a, neg(a), circ(a) designated} empty.
bool lfi_check(const MatrixLogic& L, const Formula& neg_template, const Formula& circ_template);

// ── Translations and sublogic inclusion ─────────────────────────────────────

struct TranslationFailure {
    std::string which;
    Sequent sequent;
    // The refuting assignment from whichever side broke the equivalence.
    std::optional<NamedAssignment> countermodel;
};

struct TranslationReport {
    int n = 0, i = 0;
    Formula tau, sigma;
    int checks = 0;
    std::vector<TranslationFailure> failures;
    bool ok() const { return failures.empty(); }
};

// Verifies, per sampled sequent, the two-way translation equivalence between
// <chain(n), F_{i/n}> and <chain(n), {1}> via the filter characteristic terms
// tau = lambda_{i,n}(p), sigma = lambda_{n,n}(p), plus both round-trips.
TranslationReport check_translation_equivalence(int n, int i, std::span<const Sequent> samples,
                                                const EngineOptions& opt = {});

struct SublogicReport {
    bool embedding_ok = false;
    bool filter_ok = false;
    std::string error;
    int checked = 0;
    std::vector<Sequent> violations;  // L1-entailed but not L2-entailed
    bool ok() const { return embedding_ok && filter_ok && violations.empty(); }
};

// Empty string when `embedding` maps L2's algebra into L1's as an injective
// homomorphism with F2 = F1 restricted to the image; else the failure reason.
std::string check_matrix_embedding(const MatrixLogic& L1, const MatrixLogic& L2,
                                   const std::vector<Element>& embedding);

// Runs check_matrix_embedding, then samples the consequence inclusion of L1
// in L2.
SublogicReport sublogic_check(const MatrixLogic& L1, const MatrixLogic& L2,
                              const std::vector<Element>& embedding,
                              std::span<const Sequent> samples, const EngineOptions& opt = {});

// The scaled inclusion of chain(m) into chain(n) for m | n.
std::vector<Element> chain_embedding(int n, int m);

// True when no two-valued classical assignment designates every premise.
bool classically_unsat_as_designated(std::span<const Formula> premises,
                                     const EngineOptions& opt = {});

}  // namespace lukamax
