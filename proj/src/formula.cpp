#include "lukamax/formula.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>

namespace lukamax {

// ── Signature ───────────────────────────────────────────────────────────────

Signature::Signature(std::string name, std::vector<Connective> connectives)
    : name_(std::move(name)), connectives_(std::move(connectives)) {
    for (std::size_t i = 0; i < connectives_.size(); ++i) {
        if (connectives_[i].arity < 0)
            throw std::runtime_error("signature " + name_ + ": negative arity for " +
                                     connectives_[i].symbol);
        for (std::size_t j = i + 1; j < connectives_.size(); ++j)
            if (connectives_[i].symbol == connectives_[j].symbol)
                throw std::runtime_error("signature " + name_ + ": duplicate symbol " +
                                         connectives_[i].symbol);
    }
}

const Connective* Signature::find(std::string_view symbol) const noexcept {
    for (const auto& c : connectives_)
        if (c.symbol == symbol) return &c;
    return nullptr;
}

int Signature::index_of(std::string_view symbol) const {
    for (std::size_t i = 0; i < connectives_.size(); ++i)
        if (connectives_[i].symbol == symbol) return static_cast<int>(i);
    throw std::runtime_error("signature " + name_ + ": unknown connective " + std::string(symbol));
}

bool Signature::operator==(const Signature& o) const noexcept {
    if (name_ != o.name_ || connectives_.size() != o.connectives_.size()) return false;
    for (std::size_t i = 0; i < connectives_.size(); ++i)
        if (connectives_[i].symbol != o.connectives_[i].symbol ||
            connectives_[i].arity != o.connectives_[i].arity)
            return false;
    return true;
}

const Signature& Signature::luk() {
    static const Signature sig("luk", {{"!", 1}, {"->", 2}});
    return sig;
}

const Signature& Signature::j4() {
    static const Signature sig("j4", {{"|", 2}, {"!", 1}, {"sq", 1}});
    return sig;
}

// ── Formula ─────────────────────────────────────────────────────────────────

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Formula Formula::var(std::string name) {
    auto n = std::make_shared<Node>();
    n->is_var = true;
    n->sym = std::move(name);
    n->hash = mix(0x5f, std::hash<std::string>{}(n->sym));
    n->count = 1;
    return Formula(std::move(n));
}

Formula Formula::make(std::string symbol, std::vector<Formula> children) {
    auto n = std::make_shared<Node>();
    n->is_var = false;
    n->sym = std::move(symbol);
    n->kids = std::move(children);
    std::size_t h = mix(0xc2, std::hash<std::string>{}(n->sym));
    std::size_t count = 1;
    for (const auto& k : n->kids) {
        h = mix(h, k.hash());
        count += k.node_count();
    }
    n->hash = h;
    n->count = count;
    return Formula(std::move(n));
}

Formula Formula::unary(std::string symbol, Formula child) {
    return make(std::move(symbol), {std::move(child)});
}

Formula Formula::binary(std::string symbol, Formula lhs, Formula rhs) {
    return make(std::move(symbol), {std::move(lhs), std::move(rhs)});
}

const std::string& Formula::var_name() const {
    if (!node_->is_var) throw std::logic_error("var_name() on connective node");
    return node_->sym;
}

const std::string& Formula::symbol() const {
    if (node_->is_var) throw std::logic_error("symbol() on variable node");
    return node_->sym;
}

const std::vector<Formula>& Formula::children() const {
    if (node_->is_var) throw std::logic_error("children() on variable node");
    return node_->kids;
}

bool Formula::operator==(const Formula& o) const noexcept {
    if (node_ == o.node_) return true;
    if (node_->hash != o.node_->hash || node_->count != o.node_->count) return false;
    if (node_->is_var != o.node_->is_var || node_->sym != o.node_->sym) return false;
    if (node_->kids.size() != o.node_->kids.size()) return false;
    for (std::size_t i = 0; i < node_->kids.size(); ++i)
        if (!(node_->kids[i] == o.node_->kids[i])) return false;
    return true;
}

// ── Substitution ────────────────────────────────────────────────────────────

const Formula* Substitution::lookup(const std::string& var) const noexcept {
    auto it = mapping_.find(var);
    return it == mapping_.end() ? nullptr : &it->second;
}

Formula substitute(const Formula& f, const Substitution& s) {
    if (f.is_var()) {
        const Formula* repl = s.lookup(f.var_name());
        return repl ? *repl : f;
    }
    std::vector<Formula> kids;
    kids.reserve(f.children().size());
    for (const auto& k : f.children()) kids.push_back(substitute(k, s));
    return Formula::make(f.symbol(), std::move(kids));
}

namespace {

void collect_vars(const Formula& f, std::vector<std::string>& out) {
    if (f.is_var()) {
        if (std::find(out.begin(), out.end(), f.var_name()) == out.end())
            out.push_back(f.var_name());
        return;
    }
    for (const auto& k : f.children()) collect_vars(k, out);
}

}  // namespace

std::vector<std::string> vars(const Formula& f) {
    std::vector<std::string> out;
    collect_vars(f, out);
    return out;
}

// ── Derived connectives ─────────────────────────────────────────────────────

namespace {

namespace luk_ops {
Formula neg(Formula x) { return Formula::unary("!", std::move(x)); }
Formula imp(Formula x, Formula y) { return Formula::binary("->", std::move(x), std::move(y)); }
Formula otimes(Formula x, Formula y) { return neg(imp(std::move(x), neg(std::move(y)))); }
Formula oplus(Formula x, Formula y) { return imp(neg(std::move(x)), std::move(y)); }
Formula lor(Formula x, Formula y) {
    Formula i = imp(x, y);
    return imp(std::move(i), std::move(y));
}
Formula land(Formula x, Formula y) {
    Formula ny = neg(y);
    return neg(imp(imp(neg(std::move(x)), ny), ny));
}
Formula liff(Formula x, Formula y) { return otimes(imp(x, y), imp(y, x)); }
}  // namespace luk_ops

namespace j4_ops {
Formula neg(Formula x) { return Formula::unary("!", std::move(x)); }
Formula sq(Formula x) { return Formula::unary("sq", std::move(x)); }
Formula join(Formula x, Formula y) { return Formula::binary("|", std::move(x), std::move(y)); }
Formula delta(Formula x) { return sq(sq(std::move(x))); }
Formula gneg(Formula x) { return delta(neg(std::move(x))); }
Formula jimp(Formula x, Formula y) { return join(gneg(std::move(x)), std::move(y)); }
Formula jand(Formula x, Formula y) { return neg(join(neg(std::move(x)), neg(std::move(y)))); }
Formula jiff(Formula x, Formula y) { return jand(jimp(x, y), jimp(y, x)); }
Formula nabla(Formula x) { return neg(gneg(std::move(x))); }
Formula alpha13(Formula x) { return jand(nabla(x), gneg(sq(x))); }
Formula beta13(Formula x) { return jand(alpha13(x), sq(neg(x))); }
}  // namespace j4_ops

// Derived symbols available per built-in signature; empty for customs.
struct DerivedInfo {
    int arity;
};

const std::unordered_map<std::string, DerivedInfo>& derived_for(const Signature& sig) {
    static const std::unordered_map<std::string, DerivedInfo> luk = {
        {"o*", {2}}, {"o+", {2}}, {"&", {2}}, {"|", {2}}, {"<->", {2}}};
    static const std::unordered_map<std::string, DerivedInfo> j4 = {
        {"&", {2}},     {"->", {2}},    {"<->", {2}},     {"~", {1}},
        {"delta", {1}}, {"nabla", {1}}, {"alpha13", {1}}, {"beta13", {1}}};
    static const std::unordered_map<std::string, DerivedInfo> none;
    if (sig.name() == "luk") return luk;
    if (sig.name() == "j4") return j4;
    return none;
}

Formula expand_derived(const Signature& sig, const std::string& sym, std::vector<Formula> ch) {
    if (sig.name() == "luk") {
        using namespace luk_ops;
        if (sym == "o*") return otimes(ch[0], ch[1]);
        if (sym == "o+") return oplus(ch[0], ch[1]);
        if (sym == "|") return lor(ch[0], ch[1]);
        if (sym == "&") return land(ch[0], ch[1]);
        if (sym == "<->") return liff(ch[0], ch[1]);
    } else if (sig.name() == "j4") {
        using namespace j4_ops;
        if (sym == "&") return jand(ch[0], ch[1]);
        if (sym == "->") return jimp(ch[0], ch[1]);
        if (sym == "<->") return jiff(ch[0], ch[1]);
        if (sym == "~") return gneg(ch[0]);
        if (sym == "delta") return delta(ch[0]);
        if (sym == "nabla") return nabla(ch[0]);
        if (sym == "alpha13") return alpha13(ch[0]);
        if (sym == "beta13") return beta13(ch[0]);
    }
    throw std::runtime_error("unknown derived connective '" + sym + "' for signature " +
                             sig.name());
}

}  // namespace

Formula expand(const Formula& f, const Signature& sig) {
    if (f.is_var()) return f;
    std::vector<Formula> kids;
    kids.reserve(f.children().size());
    for (const auto& k : f.children()) kids.push_back(expand(k, sig));
    const std::string& sym = f.symbol();
    if (const Connective* c = sig.find(sym)) {
        if (c->arity != static_cast<int>(kids.size()))
            throw std::runtime_error("arity mismatch for " + sym);
        return Formula::make(sym, std::move(kids));
    }
    return expand_derived(sig, sym, std::move(kids));
}

bool well_formed(const Formula& f, const Signature& sig, bool allow_derived) {
    if (f.is_var()) return true;
    int expected = -1;
    if (const Connective* c = sig.find(f.symbol()))
        expected = c->arity;
    else if (allow_derived) {
        const auto& tbl = derived_for(sig);
        auto it = tbl.find(f.symbol());
        if (it != tbl.end()) expected = it->second.arity;
    }
    if (expected != static_cast<int>(f.children().size())) return false;
    for (const auto& k : f.children())
        if (!well_formed(k, sig, allow_derived)) return false;
    return true;
}

// ── Tokenizer ───────────────────────────────────────────────────────────────

namespace {

enum class Tok {
    lparen,
    rparen,
    bang,     // !
    tilde,    // ~
    amp,      // &
    pipe,     // |
    arrow,    // ->
    iff,      // <->
    oplus,    // o+
    otimes,   // o*
    caret,    // ^
    hashmark, // #
    number,
    ident,
    end
};

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

std::vector<Token> tokenize(std::string_view s) {
    std::vector<Token> out;
    std::size_t i = 0;
    const std::size_t n = s.size();
    auto push = [&](Tok k, std::string t, std::size_t p) { out.push_back({k, std::move(t), p}); };
    while (i < n) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        std::size_t p = i;
        if (c == '(') { push(Tok::lparen, "(", p); ++i; continue; }
        if (c == ')') { push(Tok::rparen, ")", p); ++i; continue; }
        if (c == '!') { push(Tok::bang, "!", p); ++i; continue; }
        if (c == '~') { push(Tok::tilde, "~", p); ++i; continue; }
        if (c == '&') { push(Tok::amp, "&", p); ++i; continue; }
        if (c == '|') { push(Tok::pipe, "|", p); ++i; continue; }
        if (c == '^') { push(Tok::caret, "^", p); ++i; continue; }
        if (c == '#') { push(Tok::hashmark, "#", p); ++i; continue; }
        if (c == '-' && i + 1 < n && s[i + 1] == '>') { push(Tok::arrow, "->", p); i += 2; continue; }
        if (c == '<' && i + 2 < n && s[i + 1] == '-' && s[i + 2] == '>') {
            push(Tok::iff, "<->", p);
            i += 3;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < n && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            push(Tok::number, std::string(s.substr(i, j - i)), p);
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < n && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
            std::string word(s.substr(i, j - i));
            i = j;
            // `o` immediately followed by + or * is the strong connective token.
            if (word == "o" && i < n && (s[i] == '+' || s[i] == '*')) {
                push(s[i] == '+' ? Tok::oplus : Tok::otimes, s[i] == '+' ? "o+" : "o*", p);
                ++i;
                continue;
            }
            push(Tok::ident, std::move(word), p);
            continue;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", p);
    }
    push(Tok::end, "", n);
    return out;
}

// ── Parser ──────────────────────────────────────────────────────────────────

class Parser {
public:
    Parser(std::vector<Token> toks, const Signature& sig)
        : toks_(std::move(toks)), sig_(sig), derived_(derived_for(sig)) {}

    Formula run() {
        Formula f = parse_iff();
        expect(Tok::end, "end of input");
        return f;
    }

private:
    std::vector<Token> toks_;
    const Signature& sig_;
    const std::unordered_map<std::string, DerivedInfo>& derived_;
    std::size_t at_ = 0;
    int depth_ = 0;

    struct DepthGuard {
        explicit DepthGuard(Parser& p) : parser(p) {
            if (++parser.depth_ > 4000)
                throw ParseError("formula nests too deeply", parser.peek().pos);
        }
        ~DepthGuard() { --parser.depth_; }
        Parser& parser;
    };

    const Token& peek() const { return toks_[at_]; }
    Token take() { return toks_[at_++]; }
    void expect(Tok k, const char* what) {
        if (peek().kind != k)
            throw ParseError(std::string("expected ") + what + ", got '" + peek().text + "'",
                             peek().pos);
        ++at_;
    }

    bool op_allowed(const std::string& sym, int arity) const {
        if (const Connective* c = sig_.find(sym)) return c->arity == arity;
        auto it = derived_.find(sym);
        return it != derived_.end() && it->second.arity == arity;
    }

    void require_op(const Token& t, int arity) const {
        if (!op_allowed(t.text, arity))
            throw ParseError("connective '" + t.text + "' is not available for signature " +
                                 sig_.name(),
                             t.pos);
    }

    // Name of a signature connective usable as an infix identifier (custom
    // binaries such as `imp`), or unary/nullary word connectives.
    const Connective* word_connective(const std::string& w) const { return sig_.find(w); }

    bool word_is_prefix(const std::string& w) const {
        if (const Connective* c = sig_.find(w); c && c->arity == 1) return true;
        auto it = derived_.find(w);
        return it != derived_.end() && it->second.arity == 1 && std::isalpha((unsigned char)w[0]);
    }

    Formula parse_iff() {
        DepthGuard guard(*this);
        Formula lhs = parse_impl();
        if (peek().kind == Tok::iff) {
            Token t = take();
            require_op(t, 2);
            return Formula::binary("<->", std::move(lhs), parse_iff());
        }
        return lhs;
    }

    Formula parse_impl() {
        Formula lhs = parse_disj();
        if (peek().kind == Tok::arrow) {
            Token t = take();
            require_op(t, 2);
            return Formula::binary("->", std::move(lhs), parse_impl());
        }
        if (peek().kind == Tok::ident) {
            // identifier-named binary connectives are infix, right-assoc, at
            // the same level as ->
            if (const Connective* c = word_connective(peek().text); c && c->arity == 2) {
                Token t = take();
                return Formula::binary(t.text, std::move(lhs), parse_impl());
            }
        }
        return lhs;
    }

    Formula parse_disj() {
        Formula lhs = parse_conj();
        while (peek().kind == Tok::pipe) {
            Token t = take();
            require_op(t, 2);
            lhs = Formula::binary("|", std::move(lhs), parse_conj());
        }
        return lhs;
    }

    Formula parse_conj() {
        Formula lhs = parse_oplus();
        while (peek().kind == Tok::amp) {
            Token t = take();
            require_op(t, 2);
            lhs = Formula::binary("&", std::move(lhs), parse_oplus());
        }
        return lhs;
    }

    Formula parse_oplus() {
        Formula lhs = parse_otimes();
        while (peek().kind == Tok::oplus) {
            Token t = take();
            require_op(t, 2);
            lhs = Formula::binary("o+", std::move(lhs), parse_otimes());
        }
        return lhs;
    }

    Formula parse_otimes() {
        Formula lhs = parse_prefix();
        while (peek().kind == Tok::otimes) {
            Token t = take();
            require_op(t, 2);
            lhs = Formula::binary("o*", std::move(lhs), parse_prefix());
        }
        return lhs;
    }

    int parse_count(const Token& numtok) const {
        long v = std::strtol(numtok.text.c_str(), nullptr, 10);
        if (v < 1) throw ParseError("n-fold count must be >= 1", numtok.pos);
        return static_cast<int>(v);
    }

    Formula fold_left(const char* op, const Formula& f, int count, std::size_t pos) {
        if (!op_allowed(op, 2))
            throw ParseError(std::string("n-fold sugar needs '") + op +
                                 "', unavailable for signature " + sig_.name(),
                             pos);
        Formula acc = f;
        for (int i = 1; i < count; ++i) acc = Formula::binary(op, std::move(acc), f);
        return acc;
    }

    Formula parse_prefix() {
        DepthGuard guard(*this);
        const Token& t = peek();
        if (t.kind == Tok::bang) {
            Token tk = take();
            require_op(tk, 1);
            return Formula::unary("!", parse_prefix());
        }
        if (t.kind == Tok::tilde) {
            Token tk = take();
            require_op(tk, 1);
            return Formula::unary("~", parse_prefix());
        }
        if (t.kind == Tok::number) {
            Token num = take();
            expect(Tok::hashmark, "'#' after n-fold count");
            int cnt = parse_count(num);
            Formula operand = parse_prefix();
            return fold_left("o+", operand, cnt, num.pos);
        }
        if (t.kind == Tok::ident && word_is_prefix(t.text)) {
            Token tk = take();
            return Formula::unary(tk.text, parse_prefix());
        }
        return parse_postfix();
    }

    Formula parse_postfix() {
        Formula f = parse_atom();
        while (peek().kind == Tok::caret) {
            std::size_t pos = take().pos;
            if (peek().kind != Tok::number)
                throw ParseError("expected exponent after '^'", peek().pos);
            Token num = take();
            f = fold_left("o*", f, parse_count(num), pos);
        }
        return f;
    }

    Formula parse_atom() {
        const Token& t = peek();
        if (t.kind == Tok::lparen) {
            take();
            Formula f = parse_iff();
            expect(Tok::rparen, "')'");
            return f;
        }
        if (t.kind == Tok::ident) {
            Token tk = take();
            if (const Connective* c = word_connective(tk.text)) {
                if (c->arity == 0) return Formula::make(tk.text, {});
                throw ParseError("connective '" + tk.text + "' used without operands", tk.pos);
            }
            if (derived_.count(tk.text))
                throw ParseError("connective '" + tk.text + "' used without operands", tk.pos);
            return Formula::var(tk.text);
        }
        throw ParseError("expected formula, got '" + t.text + "'", t.pos);
    }
};

bool needs_parens(const Formula& child) {
    return !child.is_var() && child.children().size() >= 2;
}

void render_into(const Formula& f, std::string& out) {
    if (f.is_var()) {
        out += f.var_name();
        return;
    }
    const auto& ch = f.children();
    if (ch.empty()) {
        out += f.symbol();
        return;
    }
    if (ch.size() == 1) {
        out += f.symbol();
        if (std::isalpha(static_cast<unsigned char>(f.symbol()[0]))) out += ' ';
        if (needs_parens(ch[0])) {
            out += '(';
            render_into(ch[0], out);
            out += ')';
        } else {
            render_into(ch[0], out);
        }
        return;
    }
    auto side = [&](const Formula& c) {
        if (needs_parens(c)) {
            out += '(';
            render_into(c, out);
            out += ')';
        } else {
            render_into(c, out);
        }
    };
    side(ch[0]);
    out += ' ';
    out += f.symbol();
    out += ' ';
    side(ch[1]);
}

}  // namespace

Formula parse(std::string_view text, const Signature& sig) {
    Parser p(tokenize(text), sig);
    return p.run();
}

std::string render(const Formula& f) {
    std::string out;
    render_into(f, out);
    return out;
}

}  // namespace lukamax
