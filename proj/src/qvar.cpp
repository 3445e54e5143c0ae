#include "lukamax/qvar.hpp"

#include <algorithm>

#include "lukamax/extension.hpp"

namespace lukamax {

// ── Critical algebras ───────────────────────────────────────────────────────

CriticalAlgebra CriticalAlgebra::of(std::vector<int> chains) {
    if (chains.empty()) throw std::runtime_error("critical algebra needs at least one chain");
    for (int n : chains)
        if (n < 1) throw std::runtime_error("chain parameters must be positive");
    std::sort(chains.begin(), chains.end(), std::greater<int>());
    return CriticalAlgebra{std::move(chains)};
}

std::optional<CriticalAlgebra> CriticalAlgebra::parse(std::string_view text) {
    std::vector<int> out;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    };
    skip();
    if (i >= text.size() || text[i] != '[') return std::nullopt;
    ++i;
    while (true) {
        skip();
        if (i < text.size() && text[i] == ']') {
            ++i;
            break;
        }
        int v = 0;
        bool any = false;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
            v = v * 10 + (text[i] - '0');
            ++i;
            any = true;
        }
        if (!any) return std::nullopt;
        out.push_back(v);
        skip();
        if (i < text.size() && text[i] == ',') {
            ++i;
            continue;
        }
        if (i < text.size() && text[i] == ']') {
            ++i;
            break;
        }
        return std::nullopt;
    }
    skip();
    if (i != text.size() || out.empty()) return std::nullopt;
    for (int v : out)
        if (v < 1) return std::nullopt;
    return CriticalAlgebra::of(std::move(out));
}

std::string CriticalAlgebra::text() const {
    std::string out = "[";
    for (std::size_t i = 0; i < chains.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(chains[i]);
    }
    return out + "]";
}

FiniteAlgebra CriticalAlgebra::realize() const {
    FiniteAlgebra A = FiniteAlgebra::chain(chains[0]);
    for (std::size_t i = 1; i < chains.size(); ++i)
        A = FiniteAlgebra::product(A, FiniteAlgebra::chain(chains[i]));
    return A;
}

int CriticalAlgebra::carrier_size() const {
    int s = 1;
    for (int n : chains) s *= n + 1;
    return s;
}

bool is_critical(const CriticalAlgebra& c) {
    const auto& ns = c.chains;
    for (std::size_t i = 0; i < ns.size(); ++i)
        for (std::size_t j = i + 1; j < ns.size(); ++j)
            if (ns[i] == ns[j]) return false;
    // Parameters divisible by some other parameter; at most one may exist.
    int divisible_count = 0;
    for (std::size_t j = 0; j < ns.size(); ++j) {
        for (std::size_t i = 0; i < ns.size(); ++i) {
            if (i != j && ns[j] % ns[i] == 0) {
                ++divisible_count;
                break;
            }
        }
    }
    return divisible_count <= 1;
}

// ── Families and inclusion ──────────────────────────────────────────────────

QFamily QFamily::of(std::vector<CriticalAlgebra> generators) {
    if (generators.empty()) throw std::runtime_error("generator family must be non-empty");
    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
    return QFamily{std::move(generators)};
}

std::string QFamily::text() const {
    std::string out = "{";
    for (std::size_t i = 0; i < generators.size(); ++i) {
        if (i) out += ",";
        out += generators[i].text();
    }
    return out + "}";
}

namespace {

// One member of F against a subset H of G: every F-chain divides a chain of
// some H-member, and every chain of every H-member is divided by an F-chain.
bool member_covered(const CriticalAlgebra& C, const std::vector<CriticalAlgebra>& G,
                    unsigned subset_mask) {
    for (int nk : C.chains) {
        bool found = false;
        for (std::size_t j = 0; j < G.size() && !found; ++j) {
            if (!(subset_mask & (1u << j))) continue;
            for (int m : G[j].chains)
                if (m % nk == 0) {
                    found = true;
                    break;
                }
        }
        if (!found) return false;
    }
    for (std::size_t j = 0; j < G.size(); ++j) {
        if (!(subset_mask & (1u << j))) continue;
        for (int m : G[j].chains) {
            bool found = false;
            for (int nk : C.chains)
                if (m % nk == 0) {
                    found = true;
                    break;
                }
            if (!found) return false;
        }
    }
    return true;
}

}  // namespace

bool q_included(const QFamily& F, const QFamily& G) {
    if (G.generators.size() > 16) throw std::runtime_error("generator family too large");
    const unsigned full = (1u << G.generators.size()) - 1u;
    for (const CriticalAlgebra& C : F.generators) {
        bool covered = false;
        for (unsigned mask = 1; mask <= full && !covered; ++mask)
            covered = member_covered(C, G.generators, mask);
        if (!covered) return false;
    }
    return true;
}

std::vector<QFamily> minimal_over_boolean(int k) {
    if (k <= 1) throw std::runtime_error("minimal_over_boolean requires k > 1");
    std::vector<QFamily> out;
    for (int q = 2; q <= k; ++q)
        if (k % q == 0 && is_prime(q))
            out.push_back(QFamily::of({CriticalAlgebra::of({q, 1})}));
    return out;
}

namespace {

// Drop generators already included in the quasivariety of the others.
QFamily reduce_family(QFamily f) {
    bool changed = true;
    while (changed && f.generators.size() > 1) {
        changed = false;
        for (std::size_t i = 0; i < f.generators.size(); ++i) {
            std::vector<CriticalAlgebra> rest;
            for (std::size_t j = 0; j < f.generators.size(); ++j)
                if (j != i) rest.push_back(f.generators[j]);
            if (q_included(QFamily::of({f.generators[i]}), QFamily::of(rest))) {
                f = QFamily::of(std::move(rest));
                changed = true;
                break;
            }
        }
    }
    return f;
}

}  // namespace

std::vector<QFamily> minimal_over(int n, int k) {
    if (n < 1 || k <= 1) throw std::runtime_error("minimal_over requires n > 0 and k > 1");
    std::vector<QFamily> out;
    for (int q = 2; q <= k; ++q) {
        if (k % q != 0 || !is_prime(q)) continue;
        // p = q^{r+1} where q^r exactly divides n (r = 0 when q does not).
        int p = q;
        while (n % p == 0) p *= q;
        QFamily fam = reduce_family(
            QFamily::of({CriticalAlgebra::of({n}), CriticalAlgebra::of({p, 1})}));
        if (std::find(out.begin(), out.end(), fam) == out.end()) out.push_back(fam);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ── Quasi-identities ────────────────────────────────────────────────────────

QuasiIdentity QuasiIdentity::parse_text(std::string_view text, const Signature& sig) {
    auto arrow = text.find("=>");
    if (arrow == std::string_view::npos)
        throw std::runtime_error("quasi-identity needs '=>' before the conclusion");
    std::string_view lhs = text.substr(0, arrow);
    std::string_view rhs = text.substr(arrow + 2);
    auto parse_eq = [&](std::string_view eq) -> Equation {
        auto pos = eq.find('=');
        if (pos == std::string_view::npos)
            throw std::runtime_error("equation needs '=': " + std::string(eq));
        std::string_view l = eq.substr(0, pos);
        std::string_view r = eq.substr(pos + 1);
        auto trim = [](std::string_view s) {
            while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
            while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
            return s;
        };
        r = trim(r);
        Equation e{parse(l, sig), std::nullopt};
        if (r != "1") e.rhs = parse(r, sig);
        return e;
    };
    QuasiIdentity qi{{}, parse_eq(rhs)};
    std::size_t start = 0;
    while (start <= lhs.size()) {
        auto semi = lhs.find(';', start);
        std::string_view part =
            lhs.substr(start, semi == std::string_view::npos ? lhs.npos : semi - start);
        if (part.find_first_not_of(" \t\r\n") != std::string_view::npos)
            qi.premises.push_back(parse_eq(part));
        if (semi == std::string_view::npos) break;
        start = semi + 1;
    }
    return qi;
}

namespace {

std::vector<std::string> qi_vars(const QuasiIdentity& qi) {
    std::vector<std::string> order;
    auto merge = [&](const Formula& f) {
        for (const auto& v : vars(f))
            if (std::find(order.begin(), order.end(), v) == order.end()) order.push_back(v);
    };
    for (const auto& e : qi.premises) {
        merge(e.lhs);
        if (e.rhs) merge(*e.rhs);
    }
    merge(qi.conclusion.lhs);
    if (qi.conclusion.rhs) merge(*qi.conclusion.rhs);
    return order;
}

}  // namespace

Verdict quasi_identity_holds(const FiniteAlgebra& A, const QuasiIdentity& qi,
                             const EngineOptions& opt) {
    std::vector<std::string> order = qi_vars(qi);
    if (static_cast<int>(order.size()) > opt.max_vars)
        throw BoundError("quasi-identity has too many variables");
    struct Sides {
        CompiledFormula lhs;
        std::optional<CompiledFormula> rhs;
    };
    auto compile_eq = [&](const Equation& e) -> Sides {
        Sides s{CompiledFormula(A, expand(e.lhs, A.sig()), order), std::nullopt};
        if (e.rhs) s.rhs.emplace(A, expand(*e.rhs, A.sig()), order);
        return s;
    };
    std::vector<Sides> prem;
    for (const auto& e : qi.premises) prem.push_back(compile_eq(e));
    Sides concl = compile_eq(qi.conclusion);
    const Element top = A.top();
    auto eq_holds = [&](const Sides& s, std::span<const Element> values) {
        Element l = s.lhs.eval(values);
        Element r = s.rhs ? s.rhs->eval(values) : top;
        return l == r;
    };

    std::uint64_t total = 1;
    for (std::size_t i = 0; i < order.size(); ++i)
        total *= static_cast<std::uint64_t>(A.size());
    std::vector<Element> values(order.size());
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t rest = idx;
        for (std::size_t i = order.size(); i-- > 0;) {
            values[i] = static_cast<Element>(rest % static_cast<std::uint64_t>(A.size()));
            rest /= static_cast<std::uint64_t>(A.size());
        }
        bool premises_hold = true;
        for (const auto& p : prem)
            if (!eq_holds(p, values)) {
                premises_hold = false;
                break;
            }
        if (!premises_hold) continue;
        if (!eq_holds(concl, values)) {
            Verdict v;
            v.holds = false;
            v.countermodel = NamedAssignment{order, values};
            v.conclusion_value = concl.lhs.eval(values);
            return v;
        }
    }
    return Verdict{};
}

QuasiIdentity explosion_qi(int count) {
    const Signature& sig = Signature::luk();
    Formula prem = parse(std::to_string(count) + "#(x & !x)", sig);
    Formula concl = parse("y | !y", sig);
    return QuasiIdentity{{Equation{prem, std::nullopt}}, Equation{concl, std::nullopt}};
}

Verdict axiomminimal_qi_check(const std::vector<int>& chains, int nq_count, int subchain_n,
                              const EngineOptions& opt) {
    (void)opt;
    CriticalAlgebra C = CriticalAlgebra{chains};  // keep caller's coordinate order
    FiniteAlgebra A = C.realize();
    Formula premf = parse(std::to_string(nq_count) + "#(x & !x)", Signature::luk());
    const std::vector<std::string> order = {"x"};
    CompiledFormula prem(A, expand(premf, A.sig()), order);

    auto coords = [&](Element e) {
        std::vector<Element> out(chains.size());
        for (std::size_t t = chains.size(); t-- > 0;) {
            int s = chains[t] + 1;
            out[t] = e % s;
            e /= s;
        }
        return out;
    };
    auto in_subchain = [&](Element e) {
        std::vector<Element> cs = coords(e);
        for (std::size_t t = 0; t < cs.size(); ++t)
            if ((cs[t] * subchain_n) % chains[t] != 0) return false;
        return true;
    };

    for (Element x = 0; x < A.size(); ++x) {
        std::array<Element, 1> in{x};
        if (prem.eval(in) != A.top()) continue;
        for (Element y = 0; y < A.size(); ++y) {
            if (!in_subchain(y)) {
                Verdict v;
                v.holds = false;
                v.countermodel = NamedAssignment{{"x", "y"}, {x, y}};
                return v;
            }
        }
    }
    return Verdict{};
}

// ── Strong-maximality reports ───────────────────────────────────────────────

StrongMaxReport strong_max_report(int q, int j, const EngineOptions& opt) {
    if (!is_prime(q)) throw std::runtime_error("q must be prime");
    if (j < 1 || j > q) throw std::runtime_error("need 1 <= j <= q");
    StrongMaxReport rep;
    rep.q = q;
    rep.j = j;

    QFamily Q1 = QFamily::of({CriticalAlgebra::of({1})});
    QFamily Qq1 = QFamily::of({CriticalAlgebra::of({q, 1})});
    QFamily Qq = QFamily::of({CriticalAlgebra::of({q})});
    rep.chain_inclusions = q_included(Q1, Qq1) && !q_included(Qq1, Q1) && q_included(Qq1, Qq) &&
                           !q_included(Qq, Qq1);

    const Signature& sig = Signature::luk();
    MatrixLogic L = MatrixLogic::luk(q, j);
    MatrixLogic Lbar = MatrixLogic::lukbar(q, j);
    MatrixLogic two = MatrixLogic::cpl();
    Sequent exp_rule{{parse(std::to_string(j) + "#(p & !p)", sig)}, parse("!(p -> p)", sig)};
    rep.exp_in_luk = rule_valid(L, exp_rule, opt);
    rep.exp_separates = !rep.exp_in_luk.holds && rule_valid(Lbar, exp_rule, opt).holds &&
                        rule_valid(two, exp_rule, opt).holds;

    Formula power = parse("(p | !p)^" + std::to_string(q), sig);
    rep.power_separates = is_valid(two, power, opt).holds && !is_valid(Lbar, power, opt).holds;

    QuasiIdentity qi = explosion_qi(q);
    rep.qi_axiomatization =
        quasi_identity_holds(CriticalAlgebra::of({q, 1}).realize(), qi, opt).holds &&
        !quasi_identity_holds(CriticalAlgebra::of({q}).realize(), qi, opt).holds;

    // The graded rule j(p and not-p) / (r or not-r)^q behaves exactly like the
    // explosion rule: passive in the bar logic, refuted in the plain one, its
    // conclusion follows from falsum, and its conclusion is the sigma
    // translation of excluded middle.
    Sequent graded{{parse(std::to_string(j) + "#(p & !p)", sig)},
                   parse("(r | !r)^" + std::to_string(q), sig)};
    bool graded_sep = rule_valid(Lbar, graded, opt).holds && !rule_valid(L, graded, opt).holds;
    bool ex_falso =
        entails(L, Sequent{{parse("!(p -> p)", sig)}, parse("(r | !r)^" + std::to_string(q), sig)},
                opt)
            .holds;
    Formula sigma = lambda_term(q, q);
    Substitution sub;
    sub.set("p", parse("r | !r", sig));
    Formula sigma_em = substitute(sigma, sub);
    FiniteAlgebra chainq = FiniteAlgebra::chain(q);
    bool tables_match = true;
    for (Element a = 0; a <= q; ++a) {
        Assignment asg{{"r", a}};
        if (eval_formula(chainq, sigma_em, asg) !=
            eval_formula(chainq, parse("(r | !r)^" + std::to_string(q), sig), asg)) {
            tables_match = false;
            break;
        }
    }
    rep.rule_correspondence = graded_sep && ex_falso && tables_match;
    return rep;
}

GeneralStrongMaxReport general_strong_max_report(int n, int i, int q, const EngineOptions& opt) {
    if (!is_prime(q)) throw std::runtime_error("q must be prime");
    if (n < 1 || i < 1 || i > n) throw std::runtime_error("need 1 <= i <= n");
    GeneralStrongMaxReport rep;
    rep.n = n;
    rep.i = i;
    rep.q = q;
    int p = q;
    rep.r = 0;
    while (n % p == 0) {
        p *= q;
        ++rep.r;
    }
    rep.partner = p;
    rep.reduces_to_boolean_case = (n == 1);
    rep.generators = QFamily::of({CriticalAlgebra::of({n}), CriticalAlgebra::of({p, 1})});
    if (rep.reduces_to_boolean_case)
        rep.generators = QFamily::of({CriticalAlgebra::of({p, 1})});

    QFamily Qn = QFamily::of({CriticalAlgebra::of({n})});
    QFamily Qnq = QFamily::of({CriticalAlgebra::of({n * q})});
    rep.inclusions = q_included(Qn, rep.generators) && !q_included(rep.generators, Qn) &&
                     q_included(rep.generators, Qnq) && !q_included(Qnq, rep.generators);

    bool ok = true;
    for (const CriticalAlgebra& g : rep.generators.generators)
        ok = ok && axiomminimal_qi_check(g.chains, n * q, n, opt).holds;
    rep.qi_on_generators = ok;
    rep.qi_fails_on_ambient = !axiomminimal_qi_check({n * q}, n * q, n, opt).holds;
    return rep;
}

}  // namespace lukamax
