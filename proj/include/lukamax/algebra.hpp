#pragma once

// Finite algebras over a signature: Lukasiewicz chains, direct products,
// table-loaded customs.  Elements are integer indices 0..size-1; for the
// chain over {0, 1/n, ..., 1} index k denotes k/n, and index 0 / size-1 are
// the algebra's bottom / top by convention (table files follow the same
// convention).  All arithmetic is exact integer arithmetic.

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lukamax/formula.hpp"

namespace lukamax {

using Element = int;

// ── DesignatedSet ───────────────────────────────────────────────────────────

class DesignatedSet {
public:
    DesignatedSet(int algebra_size, std::vector<Element> members);

    bool contains(Element e) const { return mask_[static_cast<std::size_t>(e)]; }
    const std::vector<Element>& members() const noexcept { return members_; }
    int algebra_size() const noexcept { return size_; }

    bool operator==(const DesignatedSet& o) const noexcept {
        return size_ == o.size_ && members_ == o.members_;
    }

private:
    int size_;
    std::vector<Element> members_;  // sorted, unique
    std::vector<bool> mask_;
};

// The order filter {k : k >= i} inside the chain with n+1 elements.
DesignatedSet order_filter(int n, int i);

// Given m | n, the unique j with F_{i/n} restricted to the m-chain equal to
// F_{j/m}; verified against the defining enumeration.
int restrict_filter(int n, int i, int m);

// ── FiniteAlgebra ───────────────────────────────────────────────────────────

struct OpTable {
    int arity = 0;
    std::vector<Element> data;  // row-major over argument tuples
};

class FiniteAlgebra {
public:
    enum class Kind { chain, product, custom };

    int size() const noexcept { return size_; }
    const Signature& sig() const noexcept { return sig_; }
    Kind kind() const noexcept { return kind_; }
    int chain_n() const noexcept { return chain_n_; }  // valid for Kind::chain
    const std::string& name() const noexcept { return name_; }

    const OpTable& table(int conn_index) const { return tables_[static_cast<std::size_t>(conn_index)]; }
    const OpTable& table(std::string_view symbol) const;

    Element apply(int conn_index, std::span<const Element> args) const;

    Element bottom() const noexcept { return 0; }
    Element top() const noexcept { return size_ - 1; }

    // Display name of an element: reduced fraction for chains, coordinate
    // pair for products, decimal index for customs.
    std::string element_name(Element e) const;
    // Inverse of element_name (also accepts raw indices); nullopt if unknown.
    std::optional<Element> element_by_name(std::string_view text) const;

    // The n+1 element Lukasiewicz chain over the luk signature.
    static FiniteAlgebra chain(int n);
    // Componentwise product; both factors must share a signature.
    static FiniteAlgebra product(const FiniteAlgebra& a, const FiniteAlgebra& b);
    // Custom algebra from explicit tables (aligned with sig.connectives());
    // element_names, when given, override the decimal-index display.
    static FiniteAlgebra custom(std::string name, Signature sig, int size,
                                std::vector<OpTable> tables,
                                std::vector<std::string> element_names = {});

    // Product coordinate helpers (valid for Kind::product).
    const FiniteAlgebra& left() const { return *left_; }
    const FiniteAlgebra& right() const { return *right_; }
    Element pair(Element a, Element b) const;
    std::pair<Element, Element> unpair(Element e) const;

    bool same_signature(const FiniteAlgebra& o) const { return sig_ == o.sig_; }

private:
    FiniteAlgebra(Signature sig, int size)
        : sig_(std::move(sig)), size_(size) {}

    Signature sig_;
    int size_;
    std::vector<OpTable> tables_;
    Kind kind_ = Kind::custom;
    int chain_n_ = 0;
    std::string name_;
    std::vector<std::string> element_names_;
    std::shared_ptr<const FiniteAlgebra> left_, right_;
};

// ── Table files ─────────────────────────────────────────────────────────────
// UTF-8 text, `#` comments.  Layout:
//
//   size N
//   signature !/1 ->/2
//   designated 1 2        (optional; element indices)
//   table !
//   <N entries>
//   table ->
//   <N*N entries, row-major>
//
// Every declared connective needs exactly one total table with entries in
// range; connective arity is limited to 0..2 (the formula grammar has no
// syntax for wider ones).

struct LoadedAlgebra {
    FiniteAlgebra algebra;
    std::optional<DesignatedSet> designated;
};

LoadedAlgebra load_algebra(const std::filesystem::path& path);

// ── Evaluation ──────────────────────────────────────────────────────────────

using Assignment = std::map<std::string, Element>;

// Homomorphic extension of `asg` to `f` (derived connectives are expanded
// against A's signature first).  Throws on missing assignments.
Element eval_formula(const FiniteAlgebra& A, const Formula& f, const Assignment& asg);

// Postorder-compiled form of an expanded (core-only) formula for tight
// enumeration loops; values are supplied positionally per `var_order`.
class CompiledFormula {
public:
    CompiledFormula(const FiniteAlgebra& A, const Formula& core_formula,
                    std::span<const std::string> var_order);

    Element eval(std::span<const Element> values) const;

private:
    struct Instr {
        const Element* table;  // null for variable pushes
        int arity;
        int var;
    };
    std::vector<Instr> prog_;
    int size_;
};

// ── Unary clone ─────────────────────────────────────────────────────────────
// Closure of {identity} under the pointwise signature operations (plus the
// o* o+ & | definitions on the luk signature, which add no new functions but
// give shorter witnesses).  Each function carries the first witness in
// breadth order, ties broken by (node count, rendered text).

struct CloneEntry {
    std::vector<Element> table;
    Formula witness;
    int level;
};

struct CloneOptions {
    std::int64_t cap_entries = 5'000'000;  // functions * carrier size
};

struct CloneResult {
    std::vector<CloneEntry> functions;
    bool cap_exceeded = false;
};

CloneResult unary_clone(const FiniteAlgebra& A, CloneOptions opt = {});

struct SynthResult {
    std::optional<Formula> witness;
    bool closure_complete = false;  // meaningful when witness is empty
};

// First one-variable term (in breadth order) whose function extends the
// partial map `target`; empty witness with closure_complete=true is a
// definitive "no such term".
SynthResult synth_unary(const FiniteAlgebra& A, const std::map<Element, Element>& target,
                        CloneOptions opt = {});

// The characteristic-function term of F_{m/n} on chain(n) (0 below m/n,
// 1 at or above), synthesized and checked against its defining table.
Formula lambda_term(int n, int m, CloneOptions opt = {});

}  // namespace lukamax
