#pragma once

// Critical algebras of the finite Lukasiewicz quasivariety lattice, the
// divisibility criterion for quasivariety inclusion, minimal subquasivariety
// families, quasi-identity checking, and the strong-maximality reports.
//
// A critical algebra is encoded by its chain parameters: [n0,...,n_{l-1}]
// denotes the product chain(n0) x ... x chain(n_{l-1}) (so [2,1] is the
// 3-element chain times the 2-element Boolean algebra).

#include <optional>
#include <string>
#include <vector>

#include "lukamax/matrix.hpp"

namespace lukamax {

// ── Critical algebras and generator families ────────────────────────────────

struct CriticalAlgebra {
    std::vector<int> chains;  // canonical: sorted descending

    static CriticalAlgebra of(std::vector<int> chains);
    static std::optional<CriticalAlgebra> parse(std::string_view text);  // "[2,1]"

    std::string text() const;
    FiniteAlgebra realize() const;
    int carrier_size() const;

    bool operator==(const CriticalAlgebra& o) const { return chains == o.chains; }
    bool operator<(const CriticalAlgebra& o) const { return chains < o.chains; }
};

// Both defining conditions: pairwise-distinct parameters, and at most one
// parameter divisible by another.
bool is_critical(const CriticalAlgebra& c);

struct QFamily {
    std::vector<CriticalAlgebra> generators;  // canonical: sorted, unique

    static QFamily of(std::vector<CriticalAlgebra> generators);
    std::string text() const;
    bool operator==(const QFamily& o) const { return generators == o.generators; }
    bool operator<(const QFamily& o) const { return generators < o.generators; }
};

// Quasivariety inclusion Q(F) <= Q(G) by the divisibility criterion
// (searching subsets of G's index set).
bool q_included(const QFamily& F, const QFamily& G);

// Generator families of the minimal subquasivarieties of the k-chain
// quasivariety strictly above the Boolean one, k > 1.
std::vector<QFamily> minimal_over_boolean(int k);

// Generator families of the minimal subquasivarieties of the nk-chain
// quasivariety strictly above the n-chain one, n > 0, k > 1.  Redundant
// generators are dropped (so n = 1 reduces to minimal_over_boolean(k)).
std::vector<QFamily> minimal_over(int n, int k);

// ── Quasi-identities ────────────────────────────────────────────────────────

struct Equation {
    Formula lhs;
    std::optional<Formula> rhs;  // empty = "equals top"
};

struct QuasiIdentity {
    std::vector<Equation> premises;
    Equation conclusion;

    // Text form `eq ; eq => eq`, each equation `term = term` or `term = 1`.
    static QuasiIdentity parse_text(std::string_view text, const Signature& sig);
};

Verdict quasi_identity_holds(const FiniteAlgebra& A, const QuasiIdentity& qi,
                             const EngineOptions& opt = {});

// count(x and not-x) ~ 1  =>  y or not-y ~ 1, over the luk signature.
QuasiIdentity explosion_qi(int count);

// The surrogate for the general one-variable-axiom quasi-identity: on the
// product of the given chains, every assignment making nq_count(x and not-x)
// equal to top must give y a value inside the chain(subchain_n)-subchain of
// every coordinate.
Verdict axiomminimal_qi_check(const std::vector<int>& chains, int nq_count, int subchain_n,
                              const EngineOptions& opt = {});

// ── Strong-maximality reports ───────────────────────────────────────────────

struct StrongMaxReport {
    int q = 0, j = 0;
    bool chain_inclusions = false;  // Q([1]) < Q([q,1]) < Q([q]), both strict
    Verdict exp_in_luk;             // explosion rule refuted in luk(q,j)
    bool exp_separates = false;     // ...and valid in lukbar(q,j) and cpl
    bool power_separates = false;   // (p|!p)^q valid in cpl, refuted in lukbar(q,j)
    bool qi_axiomatization = false; // explosion qi holds on [q,1], fails on [q]
    bool rule_correspondence = false;
    bool all_ok() const {
        return chain_inclusions && exp_separates && power_separates && qi_axiomatization &&
               rule_correspondence;
    }
};

StrongMaxReport strong_max_report(int q, int j, const EngineOptions& opt = {});

struct GeneralStrongMaxReport {
    int n = 0, i = 0, q = 0;
    int r = 0;  // exact power of q in n
    int partner = 0;  // q^{r+1}
    QFamily generators;
    bool inclusions = false;        // Q([n]) < Q(gen) < Q([nq]), strict
    bool qi_on_generators = false;  // surrogate qi holds on every generator
    bool qi_fails_on_ambient = false;
    bool reduces_to_boolean_case = false;  // n == 1
    bool all_ok() const { return inclusions && qi_on_generators && qi_fails_on_ambient; }
};

GeneralStrongMaxReport general_strong_max_report(int n, int i, int q,
                                                 const EngineOptions& opt = {});

}  // namespace lukamax
