#pragma once

// Signatures, formula terms, parsing/printing, substitution and
// derived-connective expansion.
//
// Formulas are immutable trees with shared substructure; structural
// equality and hashing are O(1)-amortized via cached node digests.
// The ASCII grammar (see parse below) is a convention of this tool:
//
//   variables   [a-zA-Z][a-zA-Z0-9_]*    (unless reserved by the signature)
//   prefix      !  ~  sq  delta  nabla  alpha13  beta13  n#
//   postfix     ^n
//   infix       o*  <  o+  <  &  <  |  <  ->  <  <->     (-> and <-> right-assoc)
//
// `n#f` and `f^n` are n-fold strong disjunction/conjunction sugar and are
// desugared by the parser into left-nested `o+`/`o*` chains.

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lukamax {

struct Connective {
    std::string symbol;
    int arity = 0;
};

// ── Signature ───────────────────────────────────────────────────────────────

class Signature {
public:
    Signature(std::string name, std::vector<Connective> connectives);

    const std::string& name() const noexcept { return name_; }
    const std::vector<Connective>& connectives() const noexcept { return connectives_; }
    const Connective* find(std::string_view symbol) const noexcept;
    int index_of(std::string_view symbol) const;  // throws on unknown symbol

    bool operator==(const Signature& o) const noexcept;

    // {!/1, ->/2}: negation and Lukasiewicz implication.
    static const Signature& luk();
    // {|/2, !/1, sq/1}: join, negation and the square (truth stresser).
    static const Signature& j4();

private:
    std::string name_;
    std::vector<Connective> connectives_;
};

// ── Formula ─────────────────────────────────────────────────────────────────

class Formula {
public:
    static Formula var(std::string name);
    static Formula make(std::string symbol, std::vector<Formula> children);
    // Convenience builders for the common shapes.
    static Formula unary(std::string symbol, Formula child);
    static Formula binary(std::string symbol, Formula lhs, Formula rhs);

    bool is_var() const noexcept { return node_->is_var; }
    const std::string& var_name() const;               // variable nodes only
    const std::string& symbol() const;                 // connective nodes only
    const std::vector<Formula>& children() const;      // connective nodes only

    std::size_t hash() const noexcept { return node_->hash; }
    std::size_t node_count() const noexcept { return node_->count; }

    bool operator==(const Formula& o) const noexcept;
    bool operator!=(const Formula& o) const noexcept { return !(*this == o); }

private:
    struct Node {
        bool is_var;
        std::string sym;  // variable name or connective symbol
        std::vector<Formula> kids;
        std::size_t hash;
        std::size_t count;
    };
    explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

struct FormulaHash {
    std::size_t operator()(const Formula& f) const noexcept { return f.hash(); }
};

// ── Substitution ────────────────────────────────────────────────────────────
// Total on mentioned variables, identity elsewhere.

class Substitution {
public:
    Substitution() = default;
    Substitution(std::map<std::string, Formula> mapping) : mapping_(std::move(mapping)) {}

    void set(std::string var, Formula f) { mapping_.insert_or_assign(std::move(var), std::move(f)); }
    const Formula* lookup(const std::string& var) const noexcept;

private:
    std::map<std::string, Formula> mapping_;
};

Formula substitute(const Formula& f, const Substitution& s);

// Variables in first-occurrence order, duplicate-free.
std::vector<std::string> vars(const Formula& f);

// ── Parse / render ──────────────────────────────────────────────────────────

class ParseError : public std::runtime_error {
public:
    ParseError(std::string msg, std::size_t position)
        : std::runtime_error(std::move(msg)), pos(position) {}
    std::size_t pos;
};

// Parses `text` against `sig` plus the derived connectives available for it.
// Throws ParseError on syntax errors, unknown connectives or arity mismatch.
Formula parse(std::string_view text, const Signature& sig);

// Canonical fully-parenthesized rendering; parse(render(f), sig) == f.
std::string render(const Formula& f);

// ── Derived-connective expansion ────────────────────────────────────────────
// Rewrites derived symbols into the core signature:
//   over luk:  o* o+ & | <->            (Lukasiewicz definitions)
//   over j4:   delta ~ -> <-> & nabla alpha13 beta13
// Expansion is idempotent; unknown symbols raise std::runtime_error.
Formula expand(const Formula& f, const Signature& sig);

// True when every connective of `f` names a symbol of `sig` (core only when
// allow_derived is false) with the right arity.
bool well_formed(const Formula& f, const Signature& sig, bool allow_derived = true);

}  // namespace lukamax
