#pragma once

// Constructive maximality machinery: top/bottom and value-moving term
// synthesis over a declared subalgebra embedding, the gamma instance built
// from a refuting evaluation, recovery sets, the star property, and the
// derivability-adjustment check.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lukamax/matrix.hpp"

namespace lukamax {

class SetupError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// ── Setup ───────────────────────────────────────────────────────────────────

struct MaximalitySetup {
    MatrixLogic L1, L2;
    std::vector<Element> embedding;  // A2 element -> A1 element
    Element zero = 0, one = 0;       // images of L2's bottom/top inside A1
    int tail = 0;                    // count k of classical-tail elements
    // a_1..a_n: first the images of A2 \ {0,1} (ascending), then A1 minus the
    // image (ascending).
    std::vector<Element> a_list;
    // One-variable constant-top / constant-bottom terms (filled by build_setup).
    Formula top = Formula::var("p");
    Formula bottom = Formula::var("p");
    // alpha[(i,j)] moves a_i to a_j, for nonclassical i (tail < i <= n) and
    // any j != i; alpha^j_j is the variable itself.
    std::map<std::pair<int, int>, Formula> alpha;
    // Conjunction template with the filter property, when one exists.
    std::optional<Formula> conj_template;

    int n_total() const { return static_cast<int>(a_list.size()); }
    Formula alpha_at(int i, int j, const Formula& arg) const;
};

// Validates the structural hypotheses and synthesizes top, bottom and the
// alpha table; throws SetupError when a hypothesis fails or a synthesis is
// definitively impossible.
MaximalitySetup build_setup(const MatrixLogic& L1, const MatrixLogic& L2,
                            const std::vector<Element>& embedding, CloneOptions clone = {});

// ── Gamma / recovery set / star / DAT ───────────────────────────────────────

// gamma = sigma_0(phi) where sigma_0 sends each variable with e0-value 1 to
// top(p1), value 0 to bottom(p1), and value a_j to p_j.  Verifies that phi is
// an L2 theorem refuted by e0 in L1 and the two defining facts of gamma.
Formula build_gamma(const MaximalitySetup& setup, const Formula& phi, const Assignment& e0);

// {gamma(alpha^i_1(p), ..., alpha^i_n(p)) : tail < i <= n}, in i order.
std::vector<Formula> recovery_set(const MaximalitySetup& setup, const Formula& gamma);

// Conjunction of the recovery set into a single one-variable operator, when a
// filter-conjunction is available.
std::optional<Formula> recovery_conjunction(const MaximalitySetup& setup,
                                            std::span<const Formula> circle);

// e[circle] designated iff e(p) lies in the embedded subalgebra; exhaustive
// over single-element assignments.
Verdict check_star(const MaximalitySetup& setup, std::span<const Formula> circle);

struct DatResult {
    bool lhs = false;  // Gamma entails psi in L2
    bool rhs = false;  // Gamma plus recovery assumptions entails psi in L1
    bool agree() const { return lhs == rhs; }
};

DatResult dat_check(const MaximalitySetup& setup, std::span<const Formula> circle,
                    std::span<const Formula> gamma_set, const Formula& psi,
                    const EngineOptions& opt = {});

// ── Phi discovery ───────────────────────────────────────────────────────────

struct PhiSearchOptions {
    int max_vars = 2;
    std::size_t max_nodes = 24;
    std::size_t max_explored = 200'000;
};

// Smallest (node count, generation order) L2-theorem refutable in L1,
// together with the lexicographically least refuting assignment.
std::optional<std::pair<Formula, Assignment>> find_phi(const MatrixLogic& L1,
                                                       const MatrixLogic& L2,
                                                       const std::vector<Element>& embedding,
                                                       const PhiSearchOptions& opt = {});

// ── Subalgebra presentation helpers ─────────────────────────────────────────

struct SubMatrix {
    MatrixLogic logic;
    std::vector<Element> embedding;
};

// The matrix induced on a subuniverse of L1's algebra (tables restricted,
// designated set intersected); throws when the subset is not closed.
SubMatrix restrict_matrix(const MatrixLogic& L1, std::vector<Element> subset, std::string id);

// restrict_matrix on {bottom, top}: the classical presentation over L1's
// signature.
SubMatrix classical_fragment(const MatrixLogic& L1);

}  // namespace lukamax
