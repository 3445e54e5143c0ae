#include "lukamax/algebra.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace lukamax {

// ── DesignatedSet ───────────────────────────────────────────────────────────

DesignatedSet::DesignatedSet(int algebra_size, std::vector<Element> members)
    : size_(algebra_size), members_(std::move(members)) {
    if (size_ < 1) throw std::runtime_error("designated set: empty carrier");
    if (members_.empty()) throw std::runtime_error("designated set must be non-empty");
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    mask_.assign(static_cast<std::size_t>(size_), false);
    for (Element e : members_) {
        if (e < 0 || e >= size_)
            throw std::runtime_error("designated element " + std::to_string(e) + " out of range");
        mask_[static_cast<std::size_t>(e)] = true;
    }
}

DesignatedSet order_filter(int n, int i) {
    if (n < 1 || i < 1 || i > n)
        throw std::runtime_error("order filter requires 1 <= i <= n, got i=" + std::to_string(i) +
                                 " n=" + std::to_string(n));
    std::vector<Element> members;
    for (int k = i; k <= n; ++k) members.push_back(k);
    return DesignatedSet(n + 1, std::move(members));
}

int restrict_filter(int n, int i, int m) {
    if (m < 1 || n < 1 || n % m != 0)
        throw std::runtime_error("restrict_filter: m must divide n");
    if (i < 1 || i > n) throw std::runtime_error("restrict_filter: 1 <= i <= n required");
    int j = (i * m + n - 1) / n;  // ceil(i*m/n)
    // F_{i/n} meets the m-chain exactly at F_{j/m}.
    for (int k = 0; k <= m; ++k) {
        bool in_restriction = k * n >= i * m;  // k/m >= i/n
        bool in_jfilter = k >= j;
        if (in_restriction != in_jfilter)
            throw std::logic_error("restrict_filter: enumeration check failed");
    }
    return j;
}

// ── FiniteAlgebra ───────────────────────────────────────────────────────────

const OpTable& FiniteAlgebra::table(std::string_view symbol) const {
    return tables_[static_cast<std::size_t>(sig_.index_of(symbol))];
}

Element FiniteAlgebra::apply(int conn_index, std::span<const Element> args) const {
    const OpTable& t = tables_[static_cast<std::size_t>(conn_index)];
    std::size_t flat = 0;
    for (Element a : args) flat = flat * static_cast<std::size_t>(size_) + static_cast<std::size_t>(a);
    return t.data[flat];
}

FiniteAlgebra FiniteAlgebra::chain(int n) {
    if (n < 1) throw std::runtime_error("chain requires n >= 1");
    FiniteAlgebra A(Signature::luk(), n + 1);
    A.kind_ = Kind::chain;
    A.chain_n_ = n;
    A.name_ = "LV" + std::to_string(n + 1);
    OpTable neg{1, {}};
    neg.data.resize(static_cast<std::size_t>(n + 1));
    for (int k = 0; k <= n; ++k) neg.data[static_cast<std::size_t>(k)] = n - k;
    OpTable imp{2, {}};
    imp.data.resize(static_cast<std::size_t>((n + 1) * (n + 1)));
    for (int k = 0; k <= n; ++k)
        for (int l = 0; l <= n; ++l)
            imp.data[static_cast<std::size_t>(k * (n + 1) + l)] = std::min(n, n - k + l);
    A.tables_ = {std::move(neg), std::move(imp)};
    return A;
}

FiniteAlgebra FiniteAlgebra::product(const FiniteAlgebra& a, const FiniteAlgebra& b) {
    if (!a.same_signature(b))
        throw std::runtime_error("product requires factors over the same signature");
    const int sa = a.size(), sb = b.size(), s = sa * sb;
    FiniteAlgebra P(a.sig(), s);
    P.kind_ = Kind::product;
    P.name_ = a.name_ + "x" + b.name_;
    P.left_ = std::make_shared<FiniteAlgebra>(a);
    P.right_ = std::make_shared<FiniteAlgebra>(b);
    for (std::size_t ci = 0; ci < a.sig().connectives().size(); ++ci) {
        const int arity = a.sig().connectives()[ci].arity;
        OpTable t{arity, {}};
        std::size_t total = 1;
        for (int k = 0; k < arity; ++k) total *= static_cast<std::size_t>(s);
        t.data.resize(total);
        std::vector<Element> args(static_cast<std::size_t>(arity));
        std::vector<Element> xs(static_cast<std::size_t>(arity)), ys(static_cast<std::size_t>(arity));
        for (std::size_t flat = 0; flat < total; ++flat) {
            std::size_t rest = flat;
            for (int k = arity - 1; k >= 0; --k) {
                args[static_cast<std::size_t>(k)] = static_cast<Element>(rest % static_cast<std::size_t>(s));
                rest /= static_cast<std::size_t>(s);
            }
            for (int k = 0; k < arity; ++k) {
                xs[static_cast<std::size_t>(k)] = args[static_cast<std::size_t>(k)] / sb;
                ys[static_cast<std::size_t>(k)] = args[static_cast<std::size_t>(k)] % sb;
            }
            Element ra = a.apply(static_cast<int>(ci), xs);
            Element rb = b.apply(static_cast<int>(ci), ys);
            t.data[flat] = ra * sb + rb;
        }
        P.tables_.push_back(std::move(t));
    }
    return P;
}

FiniteAlgebra FiniteAlgebra::custom(std::string name, Signature sig, int size,
                                    std::vector<OpTable> tables,
                                    std::vector<std::string> element_names) {
    if (size < 2) throw std::runtime_error("algebra size must be >= 2");
    if (tables.size() != sig.connectives().size())
        throw std::runtime_error("table count does not match signature");
    for (std::size_t i = 0; i < tables.size(); ++i) {
        const auto& conn = sig.connectives()[i];
        if (tables[i].arity != conn.arity)
            throw std::runtime_error("table arity mismatch for " + conn.symbol);
        std::size_t expect = 1;
        for (int k = 0; k < conn.arity; ++k) expect *= static_cast<std::size_t>(size);
        if (tables[i].data.size() != expect)
            throw std::runtime_error("table for " + conn.symbol + " is not total");
        for (Element e : tables[i].data)
            if (e < 0 || e >= size)
                throw std::runtime_error("table for " + conn.symbol + " has out-of-range entry " +
                                         std::to_string(e));
    }
    if (!element_names.empty() && static_cast<int>(element_names.size()) != size)
        throw std::runtime_error("element name list does not match carrier size");
    FiniteAlgebra A(std::move(sig), size);
    A.kind_ = Kind::custom;
    A.name_ = std::move(name);
    A.tables_ = std::move(tables);
    A.element_names_ = std::move(element_names);
    return A;
}

Element FiniteAlgebra::pair(Element a, Element b) const {
    return a * right_->size() + b;
}

std::pair<Element, Element> FiniteAlgebra::unpair(Element e) const {
    return {e / right_->size(), e % right_->size()};
}

std::string FiniteAlgebra::element_name(Element e) const {
    switch (kind_) {
        case Kind::chain: {
            if (e == 0) return "0";
            if (e == chain_n_) return "1";
            int g = std::gcd(e, chain_n_);
            return std::to_string(e / g) + "/" + std::to_string(chain_n_ / g);
        }
        case Kind::product: {
            auto [a, b] = unpair(e);
            return "(" + left_->element_name(a) + "," + right_->element_name(b) + ")";
        }
        case Kind::custom:
        default:
            if (!element_names_.empty()) return element_names_[static_cast<std::size_t>(e)];
            return std::to_string(e);
    }
}

std::optional<Element> FiniteAlgebra::element_by_name(std::string_view text) const {
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text.empty()) return std::nullopt;
    if (kind_ == Kind::product && text.front() == '(' && text.back() == ')') {
        std::string_view inner = text.substr(1, text.size() - 2);
        int depth = 0;
        for (std::size_t i = 0; i < inner.size(); ++i) {
            if (inner[i] == '(') ++depth;
            if (inner[i] == ')') --depth;
            if (inner[i] == ',' && depth == 0) {
                auto a = left_->element_by_name(inner.substr(0, i));
                auto b = right_->element_by_name(inner.substr(i + 1));
                if (a && b) return pair(*a, *b);
                return std::nullopt;
            }
        }
        return std::nullopt;
    }
    if (kind_ == Kind::chain) {
        auto slash = text.find('/');
        if (slash != std::string_view::npos) {
            int num = 0, den = 0;
            try {
                num = std::stoi(std::string(text.substr(0, slash)));
                den = std::stoi(std::string(text.substr(slash + 1)));
            } catch (...) {
                return std::nullopt;
            }
            if (den <= 0 || num < 0 || (num * chain_n_) % den != 0) return std::nullopt;
            int idx = num * chain_n_ / den;
            if (idx > chain_n_) return std::nullopt;
            return idx;
        }
        if (text == "0") return 0;
        if (text == "1") return chain_n_;
    }
    if (!element_names_.empty()) {
        for (Element e = 0; e < size_; ++e)
            if (element_names_[static_cast<std::size_t>(e)] == text) return e;
    }
    // Raw index fallback.
    int idx = 0;
    for (char c : text) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
        idx = idx * 10 + (c - '0');
    }
    if (idx >= size_) return std::nullopt;
    return idx;
}

// ── Table files ─────────────────────────────────────────────────────────────

LoadedAlgebra load_algebra(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open algebra file " + path.string());
    std::vector<std::string> words;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string w;
        while (ls >> w) words.push_back(w);
    }
    std::size_t at = 0;
    auto fail = [&](const std::string& msg) -> std::runtime_error {
        return std::runtime_error(path.filename().string() + ": " + msg);
    };
    auto next = [&](const char* what) -> std::string {
        if (at >= words.size()) throw fail(std::string("unexpected end of file, expected ") + what);
        return words[at++];
    };
    auto next_int = [&](const char* what) -> int {
        std::string w = next(what);
        try {
            return std::stoi(w);
        } catch (...) {
            throw fail(std::string("expected ") + what + ", got '" + w + "'");
        }
    };

    if (next("'size'") != "size") throw fail("file must start with 'size N'");
    int size = next_int("carrier size");
    if (size < 2) throw fail("size must be >= 2");
    if (next("'signature'") != "signature") throw fail("expected 'signature' after size");

    std::vector<Connective> conns;
    std::optional<std::vector<Element>> designated;
    while (at < words.size() && words[at] != "designated" && words[at] != "table") {
        std::string decl = words[at++];
        auto slash = decl.rfind('/');
        if (slash == std::string::npos || slash == 0 || slash + 1 >= decl.size())
            throw fail("bad connective declaration '" + decl + "', want sym/arity");
        std::string sym = decl.substr(0, slash);
        int arity = 0;
        try {
            arity = std::stoi(decl.substr(slash + 1));
        } catch (...) {
            throw fail("bad arity in '" + decl + "'");
        }
        if (arity < 0 || arity > 2) throw fail("arity of " + sym + " must be 0..2");
        conns.push_back({std::move(sym), arity});
    }
    if (conns.empty()) throw fail("signature declares no connectives");

    if (at < words.size() && words[at] == "designated") {
        ++at;
        std::vector<Element> d;
        while (at < words.size() && words[at] != "table") d.push_back(next_int("designated element"));
        designated = std::move(d);
    }

    Signature sig("alg:" + path.stem().string(), conns);
    std::vector<OpTable> tables(conns.size());
    std::vector<bool> seen(conns.size(), false);
    while (at < words.size()) {
        if (next("'table'") != "table") throw fail("expected 'table <connective>'");
        std::string sym = next("connective name");
        const Connective* c = sig.find(sym);
        if (!c) throw fail("table for undeclared connective '" + sym + "'");
        std::size_t ci = static_cast<std::size_t>(sig.index_of(sym));
        if (seen[ci]) throw fail("duplicate table for '" + sym + "'");
        seen[ci] = true;
        std::size_t total = 1;
        for (int k = 0; k < c->arity; ++k) total *= static_cast<std::size_t>(size);
        OpTable t{c->arity, {}};
        t.data.reserve(total);
        for (std::size_t k = 0; k < total; ++k) {
            int v = next_int("table entry");
            if (v < 0 || v >= size)
                throw fail("entry " + std::to_string(v) + " out of range in table " + sym);
            t.data.push_back(v);
        }
        tables[ci] = std::move(t);
    }
    for (std::size_t i = 0; i < conns.size(); ++i)
        if (!seen[i]) throw fail("missing table for '" + conns[i].symbol + "'");

    FiniteAlgebra A = FiniteAlgebra::custom(path.stem().string(), std::move(sig), size,
                                            std::move(tables));
    std::optional<DesignatedSet> dset;
    if (designated) dset = DesignatedSet(size, *designated);
    return LoadedAlgebra{std::move(A), std::move(dset)};
}

// ── Evaluation ──────────────────────────────────────────────────────────────

namespace {

Element eval_core(const FiniteAlgebra& A, const Formula& f, const Assignment& asg) {
    if (f.is_var()) {
        auto it = asg.find(f.var_name());
        if (it == asg.end())
            throw std::runtime_error("missing assignment for variable " + f.var_name());
        return it->second;
    }
    std::vector<Element> args;
    args.reserve(f.children().size());
    for (const auto& k : f.children()) args.push_back(eval_core(A, k, asg));
    return A.apply(A.sig().index_of(f.symbol()), args);
}

}  // namespace

Element eval_formula(const FiniteAlgebra& A, const Formula& f, const Assignment& asg) {
    return eval_core(A, expand(f, A.sig()), asg);
}

CompiledFormula::CompiledFormula(const FiniteAlgebra& A, const Formula& core,
                                 std::span<const std::string> var_order)
    : size_(A.size()) {
    struct Frame {
        const Formula* f;
        std::size_t next_child;
    };
    std::vector<Frame> stack{{&core, 0}};
    while (!stack.empty()) {
        Frame& top = stack.back();
        if (top.f->is_var()) {
            auto it = std::find(var_order.begin(), var_order.end(), top.f->var_name());
            if (it == var_order.end())
                throw std::runtime_error("variable " + top.f->var_name() + " not in order");
            prog_.push_back({nullptr, 0, static_cast<int>(it - var_order.begin())});
            stack.pop_back();
            continue;
        }
        const auto& kids = top.f->children();
        if (top.next_child < kids.size()) {
            const Formula* child = &kids[top.next_child++];
            stack.push_back({child, 0});
            continue;
        }
        const OpTable& t = A.table(top.f->symbol());
        prog_.push_back({t.data.data(), t.arity, -1});
        stack.pop_back();
    }
    int depth = 0, peak = 0;
    for (const Instr& ins : prog_) {
        depth += ins.table ? 1 - ins.arity : 1;
        peak = std::max(peak, depth);
    }
    if (peak > 192) throw std::runtime_error("formula nests too deeply to evaluate");
}

Element CompiledFormula::eval(std::span<const Element> values) const {
    std::array<Element, 192> st;
    int sp = 0;
    for (const Instr& ins : prog_) {
        if (!ins.table) {
            st[static_cast<std::size_t>(sp++)] = values[static_cast<std::size_t>(ins.var)];
        } else if (ins.arity == 0) {
            st[static_cast<std::size_t>(sp++)] = ins.table[0];
        } else if (ins.arity == 1) {
            st[static_cast<std::size_t>(sp - 1)] = ins.table[st[static_cast<std::size_t>(sp - 1)]];
        } else {
            Element r = st[static_cast<std::size_t>(sp - 1)];
            Element l = st[static_cast<std::size_t>(sp - 2)];
            st[static_cast<std::size_t>(sp - 2)] = ins.table[l * size_ + r];
            --sp;
        }
    }
    return st[0];
}

// ── Unary clone ─────────────────────────────────────────────────────────────

namespace {

struct GenOp {
    std::string symbol;
    int arity;
    std::vector<Element> table;
};

std::vector<GenOp> generator_ops(const FiniteAlgebra& A) {
    std::vector<GenOp> ops;
    for (std::size_t i = 0; i < A.sig().connectives().size(); ++i) {
        const auto& c = A.sig().connectives()[i];
        ops.push_back({c.symbol, c.arity, A.table(static_cast<int>(i)).data});
    }
    if (A.sig().name() == "luk" && A.size() <= 6) {
        // Strong/lattice connectives as single-step generators: same closure,
        // shorter witnesses.  Skipped on larger carriers where the closure is
        // generator-bound and the core connectives already define them.
        const int s = A.size();
        const std::array<std::string, 2> names = {"x", "y"};
        for (const char* sym : {"o*", "o+", "&", "|"}) {
            Formula f = expand(Formula::binary(sym, Formula::var("x"), Formula::var("y")),
                               A.sig());
            CompiledFormula cf(A, f, names);
            GenOp op{sym, 2, {}};
            op.table.resize(static_cast<std::size_t>(s) * static_cast<std::size_t>(s));
            for (Element a = 0; a < s; ++a)
                for (Element b = 0; b < s; ++b) {
                    std::array<Element, 2> vals = {a, b};
                    op.table[static_cast<std::size_t>(a * s + b)] = cf.eval(vals);
                }
            ops.push_back(std::move(op));
        }
    }
    return ops;
}

std::uint64_t fnv1a(const std::uint8_t* p, int len) {
    std::uint64_t h = 1469598103934665603ULL;
    for (int i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 1099511628211ULL;
    }
    return h;
}

// Breadth-first closure engine shared by unary_clone and synth_unary.
class CloneBfs {
public:
    CloneBfs(const FiniteAlgebra& A, CloneOptions opt)
        : A_(A), s_(A.size()), opt_(opt), ops_(generator_ops(A)) {}

    // Runs until closure, cap, or (when target given) first match.
    // Returns the witness for the target if found.
    std::optional<Formula> run(const std::map<Element, Element>* target) {
        std::vector<Element> id(static_cast<std::size_t>(s_));
        for (Element i = 0; i < s_; ++i) id[static_cast<std::size_t>(i)] = i;
        add_entry(id, Formula::var("p"), 0);
        if (target && matches(entry_table(0), *target)) return entries_[0].witness;

        int level = 0;
        std::size_t frontier_begin = 0;
        while (frontier_begin < entries_.size()) {
            ++level;
            const std::size_t frontier_end = entries_.size();
            round_.clear();
            for (const GenOp& op : ops_) {
                if (op.arity == 0) {
                    if (level == 1) {
                        std::vector<Element> t(static_cast<std::size_t>(s_), op.table[0]);
                        consider(t, op.symbol, -1, -1, 1);
                    }
                } else if (op.arity == 1) {
                    std::vector<Element> t(static_cast<std::size_t>(s_));
                    for (std::size_t f = frontier_begin; f < frontier_end; ++f) {
                        const std::uint8_t* ft = entry_table(f);
                        for (int i = 0; i < s_; ++i)
                            t[static_cast<std::size_t>(i)] = op.table[ft[i]];
                        consider(t, op.symbol, static_cast<int>(f), -1,
                                 1 + entries_[f].count);
                    }
                } else {
                    std::vector<Element> t(static_cast<std::size_t>(s_));
                    for (std::size_t f = frontier_begin; f < frontier_end; ++f) {
                        const std::uint8_t* ft = entry_table(f);
                        for (std::size_t g = 0; g < frontier_end; ++g) {
                            const std::uint8_t* gt = entry_table(g);
                            for (int i = 0; i < s_; ++i)
                                t[static_cast<std::size_t>(i)] =
                                    op.table[static_cast<std::size_t>(ft[i]) *
                                                 static_cast<std::size_t>(s_) +
                                             gt[i]];
                            consider(t, op.symbol, static_cast<int>(f), static_cast<int>(g),
                                     1 + entries_[f].count + entries_[g].count);
                            if (g < frontier_begin) {  // old-g case also needs (g, f)
                                for (int i = 0; i < s_; ++i)
                                    t[static_cast<std::size_t>(i)] =
                                        op.table[static_cast<std::size_t>(gt[i]) *
                                                     static_cast<std::size_t>(s_) +
                                                 ft[i]];
                                consider(t, op.symbol, static_cast<int>(g), static_cast<int>(f),
                                         1 + entries_[f].count + entries_[g].count);
                            }
                        }
                    }
                }
            }
            // Materialize this round's discoveries in deterministic order.
            std::vector<const std::vector<Element>*> keys;
            keys.reserve(round_.size());
            for (const auto& kv : round_) keys.push_back(&kv.first);
            std::sort(keys.begin(), keys.end(),
                      [](const auto* a, const auto* b) { return *a < *b; });
            frontier_begin = frontier_end;
            std::optional<Formula> best_match;
            std::size_t best_count = 0;
            std::string best_render;
            for (const auto* key : keys) {
                const Candidate& c = round_.at(*key);
                Formula wit = build_witness(c);
                add_entry(*key, wit, level);
                if (target && matches(entry_table(entries_.size() - 1), *target)) {
                    std::string r = render(wit);
                    if (!best_match || c.count < best_count ||
                        (c.count == best_count && r < best_render)) {
                        best_match = wit;
                        best_count = c.count;
                        best_render = std::move(r);
                    }
                }
                if (static_cast<std::int64_t>(entries_.size()) * s_ >= opt_.cap_entries) {
                    cap_exceeded_ = true;
                    return best_match;
                }
            }
            if (best_match) return best_match;
        }
        return std::nullopt;
    }

    bool cap_exceeded() const { return cap_exceeded_; }

    std::vector<CloneEntry> take_entries() {
        std::vector<CloneEntry> out;
        out.reserve(entries_.size());
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            CloneEntry e{std::vector<Element>(static_cast<std::size_t>(s_)), entries_[i].witness,
                         entries_[i].level};
            const std::uint8_t* t = entry_table(i);
            for (int k = 0; k < s_; ++k) e.table[static_cast<std::size_t>(k)] = t[k];
            out.push_back(std::move(e));
        }
        return out;
    }

private:
    struct Entry {
        std::size_t offset;
        Formula witness;
        int level;
        std::uint32_t count;  // witness node count
    };
    struct Candidate {
        std::string op;
        int f = -1, g = -1;
        std::uint32_t count = 0;
    };

    const FiniteAlgebra& A_;
    int s_;
    CloneOptions opt_;
    std::vector<GenOp> ops_;
    std::vector<std::uint8_t> arena_;
    std::vector<Entry> entries_;
    std::unordered_map<std::uint64_t, std::vector<int>> index_;
    std::map<std::vector<Element>, Candidate> round_;
    bool cap_exceeded_ = false;

    const std::uint8_t* entry_table(std::size_t i) const { return arena_.data() + entries_[i].offset; }

    bool known(const std::vector<Element>& t) const {
        std::array<std::uint8_t, 64> buf;
        for (int i = 0; i < s_; ++i) buf[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(t[static_cast<std::size_t>(i)]);
        auto it = index_.find(fnv1a(buf.data(), s_));
        if (it == index_.end()) return false;
        for (int id : it->second) {
            const std::uint8_t* et = entry_table(static_cast<std::size_t>(id));
            if (std::equal(buf.data(), buf.data() + s_, et)) return true;
        }
        return false;
    }

    void add_entry(const std::vector<Element>& t, Formula wit, int level) {
        std::size_t off = arena_.size();
        for (int i = 0; i < s_; ++i) arena_.push_back(static_cast<std::uint8_t>(t[static_cast<std::size_t>(i)]));
        auto count = static_cast<std::uint32_t>(wit.node_count());
        entries_.push_back({off, std::move(wit), level, count});
        index_[fnv1a(arena_.data() + off, s_)].push_back(static_cast<int>(entries_.size()) - 1);
    }

    Formula build_witness(const Candidate& c) const {
        if (c.f < 0) return Formula::make(c.op, {});
        if (c.g < 0) return Formula::unary(c.op, entries_[static_cast<std::size_t>(c.f)].witness);
        return Formula::binary(c.op, entries_[static_cast<std::size_t>(c.f)].witness,
                               entries_[static_cast<std::size_t>(c.g)].witness);
    }

    void consider(const std::vector<Element>& t, const std::string& op, int f, int g,
                  std::uint32_t count) {
        if (known(t)) return;
        auto [it, inserted] = round_.try_emplace(t, Candidate{op, f, g, count});
        if (inserted) return;
        Candidate& cur = it->second;
        if (count > cur.count) return;
        if (count < cur.count) {
            cur = Candidate{op, f, g, count};
            return;
        }
        Candidate cand{op, f, g, count};
        if (render(build_witness(cand)) < render(build_witness(cur))) cur = cand;
    }

    static bool matches(const std::uint8_t* table, const std::map<Element, Element>& target) {
        for (auto [in, out] : target)
            if (table[in] != out) return false;
        return true;
    }
};

}  // namespace

CloneResult unary_clone(const FiniteAlgebra& A, CloneOptions opt) {
    if (A.size() > 64) throw std::runtime_error("unary clone supports carriers up to 64 elements");
    CloneBfs bfs(A, opt);
    bfs.run(nullptr);
    CloneResult r;
    r.functions = bfs.take_entries();
    r.cap_exceeded = bfs.cap_exceeded();
    return r;
}

SynthResult synth_unary(const FiniteAlgebra& A, const std::map<Element, Element>& target,
                        CloneOptions opt) {
    if (A.size() > 64) throw std::runtime_error("unary clone supports carriers up to 64 elements");
    for (auto [in, out] : target)
        if (in < 0 || in >= A.size() || out < 0 || out >= A.size())
            throw std::runtime_error("synth target out of range");
    CloneBfs bfs(A, opt);
    std::optional<Formula> w = bfs.run(&target);
    return SynthResult{std::move(w), !bfs.cap_exceeded()};
}

Formula lambda_term(int n, int m, CloneOptions opt) {
    if (m < 1 || m > n) throw std::runtime_error("lambda_term requires 1 <= m <= n");
    FiniteAlgebra A = FiniteAlgebra::chain(n);
    std::map<Element, Element> target;
    for (Element k = 0; k <= n; ++k) target[k] = (k >= m) ? n : 0;
    SynthResult r = synth_unary(A, target, opt);
    if (!r.witness)
        throw std::runtime_error("lambda term synthesis failed for m=" + std::to_string(m) +
                                 ", n=" + std::to_string(n));
    return *r.witness;
}

}  // namespace lukamax
