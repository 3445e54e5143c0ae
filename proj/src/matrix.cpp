#include "lukamax/matrix.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "json.hpp"

namespace lukamax {

// ── MatrixLogic ─────────────────────────────────────────────────────────────

MatrixLogic MatrixLogic::luk(int n, int i) {
    FiniteAlgebra A = FiniteAlgebra::chain(n);
    DesignatedSet F = order_filter(n, i);
    std::string id = "luk:" + std::to_string(n) + ":" + std::to_string(i);
    return MatrixLogic(std::move(A), std::move(F), std::move(id), Family::luk, n, i);
}

MatrixLogic MatrixLogic::lukbar(int n, int i) {
    FiniteAlgebra P = FiniteAlgebra::product(FiniteAlgebra::chain(n), FiniteAlgebra::chain(1));
    // F_{i/n} x {1}: second coordinate is the Boolean top.
    std::vector<Element> members;
    for (int k = i; k <= n; ++k) members.push_back(k * 2 + 1);
    DesignatedSet F(P.size(), std::move(members));
    std::string id = "lukbar:" + std::to_string(n) + ":" + std::to_string(i);
    return MatrixLogic(std::move(P), std::move(F), std::move(id), Family::lukbar, n, i);
}

MatrixLogic MatrixLogic::cpl() { return luk(1, 1); }

MatrixLogic MatrixLogic::custom(FiniteAlgebra algebra, DesignatedSet designated, std::string id) {
    if (designated.algebra_size() != algebra.size())
        throw std::runtime_error("designated set size does not match algebra");
    return MatrixLogic(std::move(algebra), std::move(designated), std::move(id), Family::custom,
                       0, 0);
}

// ── Sequents ────────────────────────────────────────────────────────────────

Sequent Sequent::parse_text(std::string_view text, const Signature& sig) {
    auto turnstile = text.find("|-");
    if (turnstile == std::string_view::npos)
        return Sequent{{}, parse(text, sig)};
    std::string_view lhs = text.substr(0, turnstile);
    std::string_view rhs = text.substr(turnstile + 2);
    if (rhs.find("|-") != std::string_view::npos)
        throw ParseError("more than one '|-' in sequent", turnstile);
    std::vector<Formula> premises;
    std::size_t start = 0;
    while (start <= lhs.size()) {
        auto semi = lhs.find(';', start);
        std::string_view part =
            lhs.substr(start, semi == std::string_view::npos ? lhs.npos : semi - start);
        bool blank = part.find_first_not_of(" \t\r\n") == std::string_view::npos;
        if (!blank) premises.push_back(parse(part, sig));
        if (semi == std::string_view::npos) break;
        start = semi + 1;
    }
    return Sequent{std::move(premises), parse(rhs, sig)};
}

std::vector<std::string> sequent_vars(const Sequent& s) {
    std::vector<std::string> order;
    auto merge = [&](const Formula& f) {
        for (const auto& v : vars(f))
            if (std::find(order.begin(), order.end(), v) == order.end()) order.push_back(v);
    };
    for (const auto& p : s.premises) merge(p);
    merge(s.conclusion);
    return order;
}

Assignment NamedAssignment::as_map() const {
    Assignment m;
    for (std::size_t i = 0; i < vars.size(); ++i) m[vars[i]] = values[i];
    return m;
}

std::string verdict_json(const MatrixLogic& L, const Sequent& s, const Verdict& v) {
    nlohmann::json j;
    j["logic"] = L.id();
    nlohmann::json prem = nlohmann::json::array();
    for (const auto& p : s.premises) prem.push_back(render(p));
    j["premises"] = prem;
    j["conclusion"] = render(s.conclusion);
    j["holds"] = v.holds;
    if (v.countermodel) {
        nlohmann::json cm = nlohmann::json::object();
        for (std::size_t i = 0; i < v.countermodel->vars.size(); ++i)
            cm[v.countermodel->vars[i]] = L.algebra().element_name(v.countermodel->values[i]);
        j["countermodel"] = cm;
        nlohmann::json pv = nlohmann::json::array();
        for (Element e : v.premise_values) pv.push_back(L.algebra().element_name(e));
        j["premise_values"] = pv;
        j["conclusion_value"] = L.algebra().element_name(v.conclusion_value);
    }
    return j.dump(2);
}

// ── Consequence engine ──────────────────────────────────────────────────────

namespace {

struct CompiledSequent {
    std::vector<std::string> order;
    std::vector<CompiledFormula> premises;
    CompiledFormula conclusion;
    std::uint64_t total;  // |A|^k
};

CompiledSequent compile_sequent(const MatrixLogic& L, const Sequent& s, const EngineOptions& opt) {
    std::vector<std::string> order = sequent_vars(s);
    if (static_cast<int>(order.size()) > opt.max_vars)
        throw BoundError("sequent has " + std::to_string(order.size()) +
                         " variables, above the bound of " + std::to_string(opt.max_vars) +
                         " (raise --max-vars to override)");
    const double bits = static_cast<double>(order.size()) *
                        std::log2(static_cast<double>(L.algebra().size()));
    if (bits > 44)
        throw BoundError("assignment space too large to enumerate");
    const Signature& sig = L.algebra().sig();
    std::vector<CompiledFormula> prem;
    prem.reserve(s.premises.size());
    for (const auto& p : s.premises) prem.emplace_back(L.algebra(), expand(p, sig), order);
    CompiledFormula concl(L.algebra(), expand(s.conclusion, sig), order);
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < order.size(); ++i)
        total *= static_cast<std::uint64_t>(L.algebra().size());
    return CompiledSequent{std::move(order), std::move(prem), std::move(concl), total};
}

void decode(std::uint64_t idx, int size, std::span<Element> out) {
    for (std::size_t i = out.size(); i-- > 0;) {
        out[i] = static_cast<Element>(idx % static_cast<std::uint64_t>(size));
        idx /= static_cast<std::uint64_t>(size);
    }
}

// Scans [begin, end) and returns the first refuting assignment index, or
// UINT64_MAX.  `stop_at` lets workers bail once a smaller index is known.
std::uint64_t scan_range(const MatrixLogic& L, const CompiledSequent& cs, std::uint64_t begin,
                         std::uint64_t end, const std::atomic<std::uint64_t>* stop_at) {
    const int size = L.algebra().size();
    const int k = static_cast<int>(cs.order.size());
    std::vector<Element> values(static_cast<std::size_t>(k));
    for (std::uint64_t idx = begin; idx < end; ++idx) {
        if (stop_at && idx >= stop_at->load(std::memory_order_relaxed)) return UINT64_MAX;
        decode(idx, size, values);
        bool all_designated = true;
        for (const auto& p : cs.premises) {
            if (!L.is_designated(p.eval(values))) {
                all_designated = false;
                break;
            }
        }
        if (!all_designated) continue;
        if (!L.is_designated(cs.conclusion.eval(values))) return idx;
    }
    return UINT64_MAX;
}

Verdict finish(const MatrixLogic& L, const CompiledSequent& cs, std::uint64_t refuting) {
    Verdict v;
    if (refuting == UINT64_MAX) return v;
    v.holds = false;
    NamedAssignment cm;
    cm.vars = cs.order;
    cm.values.resize(cs.order.size());
    decode(refuting, L.algebra().size(), cm.values);
    for (const auto& p : cs.premises) v.premise_values.push_back(p.eval(cm.values));
    v.conclusion_value = cs.conclusion.eval(cm.values);
    v.countermodel = std::move(cm);
    return v;
}

}  // namespace

Verdict entails(const MatrixLogic& L, const Sequent& s, const EngineOptions& opt) {
    CompiledSequent cs = compile_sequent(L, s, opt);
    const int jobs = std::max(1, opt.jobs);
    if (jobs == 1 || cs.total < 4096) {
        return finish(L, cs, scan_range(L, cs, 0, cs.total, nullptr));
    }
    // Partitioned scan; the aggregate is the least refuting index, so the
    // reported countermodel matches the sequential one.
    std::atomic<std::uint64_t> best{UINT64_MAX};
    std::vector<std::thread> workers;
    const std::uint64_t chunk = (cs.total + static_cast<std::uint64_t>(jobs) - 1) /
                                static_cast<std::uint64_t>(jobs);
    for (int w = 0; w < jobs; ++w) {
        const std::uint64_t begin = chunk * static_cast<std::uint64_t>(w);
        const std::uint64_t end = std::min(cs.total, begin + chunk);
        if (begin >= end) break;
        workers.emplace_back([&, begin, end] {
            std::uint64_t local = scan_range(L, cs, begin, end, &best);
            std::uint64_t cur = best.load();
            while (local < cur && !best.compare_exchange_weak(cur, local)) {
            }
        });
    }
    for (auto& t : workers) t.join();
    return finish(L, cs, best.load());
}

Verdict is_valid(const MatrixLogic& L, const Formula& f, const EngineOptions& opt) {
    return entails(L, Sequent{{}, f}, opt);
}

Verdict rule_valid(const MatrixLogic& L, const Sequent& s, const EngineOptions& opt) {
    return entails(L, s, opt);
}

// ── Paraconsistency and LFI ─────────────────────────────────────────────────

namespace {

// Table of a one-variable template over L's algebra.
std::vector<Element> unary_template_table(const MatrixLogic& L, const Formula& tmpl) {
    auto vs = vars(tmpl);
    if (vs.size() != 1) throw std::runtime_error("template must have exactly one variable");
    CompiledFormula cf(L.algebra(), expand(tmpl, L.algebra().sig()), vs);
    std::vector<Element> table(static_cast<std::size_t>(L.algebra().size()));
    for (Element a = 0; a < L.algebra().size(); ++a) {
        std::array<Element, 1> in{a};
        table[static_cast<std::size_t>(a)] = cf.eval(in);
    }
    return table;
}

}  // namespace

ParaconsistencyResult is_paraconsistent(const MatrixLogic& L, const Formula& neg_template) {
    std::vector<Element> neg = unary_template_table(L, neg_template);
    ParaconsistencyResult r;
    std::optional<Element> bad;
    for (Element b = 0; b < L.algebra().size(); ++b)
        if (!L.is_designated(b)) {
            bad = b;
            break;
        }
    if (bad) {
        for (Element a = 0; a < L.algebra().size(); ++a) {
            if (L.is_designated(a) && L.is_designated(neg[static_cast<std::size_t>(a)])) {
                r.paraconsistent = true;
                r.witness_a = a;
                r.witness_b = *bad;
                break;
            }
        }
    }
    if (L.family() == MatrixLogic::Family::luk) {
        // Closed form for the order-filter family: 2i <= n.
        bool closed = 2 * L.luk_i() <= L.luk_n();
        if (closed != r.paraconsistent)
            throw std::logic_error("paraconsistency check disagrees with 2i <= n");
    }
    return r;
}

bool is_deductive_implication(const MatrixLogic& L, const Formula& imp_template) {
    auto vs = vars(imp_template);
    if (vs.size() != 2) throw std::runtime_error("implication template must have two variables");
    CompiledFormula cf(L.algebra(), expand(imp_template, L.algebra().sig()), vs);
    for (Element a = 0; a < L.algebra().size(); ++a)
        for (Element b = 0; b < L.algebra().size(); ++b) {
            std::array<Element, 2> in{a, b};
            bool imp_desig = L.is_designated(cf.eval(in));
            bool cond = !L.is_designated(a) || L.is_designated(b);
            if (imp_desig != cond) return false;
        }
    return true;
}

bool lfi_check(const MatrixLogic& L, const Formula& neg_template, const Formula& circ_template) {
    ParaconsistencyResult pr = is_paraconsistent(L, neg_template);
    if (!pr.paraconsistent) return false;
    std::vector<Element> neg = unary_template_table(L, neg_template);
    std::vector<Element> circ = unary_template_table(L, circ_template);
    for (Element a = 0; a < L.algebra().size(); ++a)
        if (L.is_designated(a) && L.is_designated(neg[static_cast<std::size_t>(a)]) &&
            L.is_designated(circ[static_cast<std::size_t>(a)]))
            return false;
    return true;
}

// ── Translations ────────────────────────────────────────────────────────────

namespace {

Formula apply_translation(const Formula& term, const Formula& f) {
    Substitution s;
    s.set("p", f);
    return substitute(term, s);
}

Sequent translate_sequent(const Formula& term, const Sequent& s) {
    Sequent out{{}, apply_translation(term, s.conclusion)};
    out.premises.reserve(s.premises.size());
    for (const auto& p : s.premises) out.premises.push_back(apply_translation(term, p));
    return out;
}

}  // namespace

TranslationReport check_translation_equivalence(int n, int i, std::span<const Sequent> samples,
                                                const EngineOptions& opt) {
    TranslationReport rep{n, i, lambda_term(n, i), lambda_term(n, n), 0, {}};
    MatrixLogic Li = MatrixLogic::luk(n, i);
    MatrixLogic Ln = MatrixLogic::luk(n, n);
    auto record = [&](const Verdict& a, const Verdict& b, const char* which, const Sequent& s) {
        ++rep.checks;
        if (a.holds == b.holds) return;
        rep.failures.push_back({which, s, a.holds ? b.countermodel : a.countermodel});
    };
    auto both = [&](const MatrixLogic& L, const Sequent& fwd, const Sequent& bwd) {
        Verdict v = entails(L, fwd, opt);
        return v.holds ? entails(L, bwd, opt) : v;
    };
    for (const Sequent& s : samples) {
        Verdict li = entails(Li, s, opt);
        Verdict ln = entails(Ln, s, opt);
        record(li, entails(Ln, translate_sequent(rep.tau, s), opt), "tau-preserves", s);
        record(ln, entails(Li, translate_sequent(rep.sigma, s), opt), "sigma-preserves", s);
        Formula st = apply_translation(rep.sigma, apply_translation(rep.tau, s.conclusion));
        record(Verdict{}, both(Li, Sequent{{s.conclusion}, st}, Sequent{{st}, s.conclusion}),
               "sigma-tau-roundtrip", s);
        Formula ts = apply_translation(rep.tau, apply_translation(rep.sigma, s.conclusion));
        record(Verdict{}, both(Ln, Sequent{{s.conclusion}, ts}, Sequent{{ts}, s.conclusion}),
               "tau-sigma-roundtrip", s);
    }
    return rep;
}

// ── Sublogic inclusion ──────────────────────────────────────────────────────

std::vector<Element> chain_embedding(int n, int m) {
    if (m < 1 || n % m != 0) throw std::runtime_error("chain embedding requires m | n");
    std::vector<Element> emb;
    for (int k = 0; k <= m; ++k) emb.push_back(k * (n / m));
    return emb;
}

std::string check_matrix_embedding(const MatrixLogic& L1, const MatrixLogic& L2,
                                   const std::vector<Element>& embedding) {
    const FiniteAlgebra& A1 = L1.algebra();
    const FiniteAlgebra& A2 = L2.algebra();
    if (!A1.same_signature(A2)) return "signature mismatch";
    if (static_cast<int>(embedding.size()) != A2.size())
        return "embedding size does not match subalgebra";
    std::vector<bool> hit(static_cast<std::size_t>(A1.size()), false);
    for (Element e : embedding) {
        if (e < 0 || e >= A1.size() || hit[static_cast<std::size_t>(e)])
            return "embedding is not injective into the larger carrier";
        hit[static_cast<std::size_t>(e)] = true;
    }
    // Homomorphism on every operation and tuple.
    for (std::size_t ci = 0; ci < A2.sig().connectives().size(); ++ci) {
        const int arity = A2.sig().connectives()[ci].arity;
        std::vector<Element> args(static_cast<std::size_t>(arity), 0);
        bool done = arity == 0;
        while (true) {
            std::vector<Element> mapped(args.size());
            for (std::size_t k = 0; k < args.size(); ++k)
                mapped[k] = embedding[static_cast<std::size_t>(args[k])];
            Element lhs = embedding[static_cast<std::size_t>(A2.apply(static_cast<int>(ci), args))];
            Element rhs = A1.apply(static_cast<int>(ci), mapped);
            if (lhs != rhs)
                return "embedding is not a homomorphism on " + A2.sig().connectives()[ci].symbol;
            if (done) break;
            std::size_t k = args.size();
            while (k > 0) {
                --k;
                if (++args[k] < A2.size()) break;
                args[k] = 0;
                if (k == 0) done = true;
            }
            if (done) break;
        }
    }
    for (Element x = 0; x < A2.size(); ++x)
        if (L2.is_designated(x) != L1.is_designated(embedding[static_cast<std::size_t>(x)]))
            return "designated sets do not restrict along the embedding";
    return "";
}

SublogicReport sublogic_check(const MatrixLogic& L1, const MatrixLogic& L2,
                              const std::vector<Element>& embedding,
                              std::span<const Sequent> samples, const EngineOptions& opt) {
    SublogicReport rep;
    rep.error = check_matrix_embedding(L1, L2, embedding);
    if (!rep.error.empty()) return rep;
    rep.embedding_ok = true;
    rep.filter_ok = true;
    for (const Sequent& s : samples) {
        ++rep.checked;
        if (entails(L1, s, opt).holds && !entails(L2, s, opt).holds) rep.violations.push_back(s);
    }
    return rep;
}

bool classically_unsat_as_designated(std::span<const Formula> premises,
                                     const EngineOptions& opt) {
    if (premises.empty()) return false;
    MatrixLogic two = MatrixLogic::cpl();
    std::vector<std::string> order;
    for (const auto& p : premises)
        for (const auto& v : vars(p))
            if (std::find(order.begin(), order.end(), v) == order.end()) order.push_back(v);
    if (static_cast<int>(order.size()) > opt.max_vars)
        throw BoundError("too many variables for classical satisfiability scan");
    std::vector<CompiledFormula> comp;
    for (const auto& p : premises)
        comp.emplace_back(two.algebra(), expand(p, two.algebra().sig()), order);
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < order.size(); ++i) total *= 2;
    std::vector<Element> values(order.size());
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        for (std::size_t i = 0; i < order.size(); ++i)
            values[i] = static_cast<Element>((idx >> (order.size() - 1 - i)) & 1);
        bool all = true;
        for (const auto& c : comp)
            if (c.eval(values) != 1) {
                all = false;
                break;
            }
        if (all) return false;
    }
    return true;
}

}  // namespace lukamax
