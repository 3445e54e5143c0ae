#include "lukamax/recovery.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace lukamax {

namespace {

std::string pvar(int j) { return "p" + std::to_string(j); }

Formula instantiate(const Formula& one_var_term, const Formula& arg) {
    auto vs = vars(one_var_term);
    Substitution s;
    for (const auto& v : vs) s.set(v, arg);
    return substitute(one_var_term, s);
}

}  // namespace

Formula MaximalitySetup::alpha_at(int i, int j, const Formula& arg) const {
    if (i == j) return arg;
    auto it = alpha.find({i, j});
    if (it == alpha.end())
        throw std::logic_error("alpha term (" + std::to_string(i) + "," + std::to_string(j) +
                               ") missing");
    return instantiate(it->second, arg);
}

MaximalitySetup build_setup(const MatrixLogic& L1, const MatrixLogic& L2,
                            const std::vector<Element>& embedding, CloneOptions clone) {
    std::string err = check_matrix_embedding(L1, L2, embedding);
    if (!err.empty()) throw SetupError(err);
    const FiniteAlgebra& A1 = L1.algebra();
    const FiniteAlgebra& A2 = L2.algebra();
    if (A1.size() <= A2.size()) throw SetupError("the two matrices must be distinct");

    MaximalitySetup s{L1, L2, embedding};
    s.zero = embedding[static_cast<std::size_t>(A2.bottom())];
    s.one = embedding[static_cast<std::size_t>(A2.top())];
    if (L1.is_designated(s.zero)) throw SetupError("bottom is designated in the larger matrix");
    if (!L2.is_designated(A2.top())) throw SetupError("top is not designated in the sublogic");

    // {0,1} must be a subuniverse of the smaller algebra.
    for (std::size_t ci = 0; ci < A2.sig().connectives().size(); ++ci) {
        const int arity = A2.sig().connectives()[ci].arity;
        const std::vector<Element> pool = {A2.bottom(), A2.top()};
        std::vector<int> pick(static_cast<std::size_t>(arity), 0);
        while (true) {
            std::vector<Element> args;
            for (int b : pick) args.push_back(pool[static_cast<std::size_t>(b)]);
            Element r = A2.apply(static_cast<int>(ci), args);
            if (r != A2.bottom() && r != A2.top())
                throw SetupError("{0,1} is not a subalgebra of the smaller carrier");
            std::size_t k = pick.size();
            bool done = arity == 0;
            while (k > 0) {
                --k;
                if (++pick[k] < 2) break;
                pick[k] = 0;
                if (k == 0) done = true;
            }
            if (done) break;
        }
    }

    std::vector<bool> in_image(static_cast<std::size_t>(A1.size()), false);
    for (Element e : embedding) in_image[static_cast<std::size_t>(e)] = true;
    for (Element e = 0; e < A1.size(); ++e) {
        if (in_image[static_cast<std::size_t>(e)]) {
            if (e != s.zero && e != s.one) s.a_list.push_back(e);
        }
    }
    s.tail = static_cast<int>(s.a_list.size());
    for (Element e = 0; e < A1.size(); ++e)
        if (!in_image[static_cast<std::size_t>(e)]) s.a_list.push_back(e);

    auto synth_const = [&](Element value, const char* what) -> Formula {
        std::map<Element, Element> target;
        for (Element x = 0; x < A1.size(); ++x) target[x] = value;
        SynthResult r = synth_unary(A1, target, clone);
        if (r.witness) return *r.witness;
        if (r.closure_complete)
            throw SetupError(std::string("no constant-") + what + " term exists");
        throw SetupError(std::string("synthesis cap reached while searching for ") + what);
    };
    s.top = synth_const(s.one, "top");
    s.bottom = synth_const(s.zero, "bottom");

    const int n = s.n_total();
    for (int i = s.tail + 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            std::map<Element, Element> target{
                {s.a_list[static_cast<std::size_t>(i - 1)], s.a_list[static_cast<std::size_t>(j - 1)]}};
            SynthResult r = synth_unary(A1, target, clone);
            if (!r.witness) {
                if (r.closure_complete)
                    throw SetupError(
                        "hypotheses not met: no term moves " +
                        A1.element_name(s.a_list[static_cast<std::size_t>(i - 1)]) + " to " +
                        A1.element_name(s.a_list[static_cast<std::size_t>(j - 1)]));
                throw SetupError("synthesis cap reached for an alpha term");
            }
            s.alpha.emplace(std::make_pair(i, j), *r.witness);
        }
    }

    // A conjunction with the filter property, if the signature offers one.
    for (const char* cand : {"&"}) {
        Formula tmpl = Formula::binary(cand, Formula::var("x"), Formula::var("y"));
        if (!well_formed(tmpl, A1.sig(), true)) continue;
        Formula core = expand(tmpl, A1.sig());
        const std::vector<std::string> order = {"x", "y"};
        CompiledFormula cf(A1, core, order);
        bool good = true;
        for (Element a = 0; a < A1.size() && good; ++a)
            for (Element b = 0; b < A1.size(); ++b) {
                std::array<Element, 2> in{a, b};
                bool both = L1.is_designated(a) && L1.is_designated(b);
                if (L1.is_designated(cf.eval(in)) != both) {
                    good = false;
                    break;
                }
            }
        if (good) {
            s.conj_template = tmpl;
            break;
        }
    }
    return s;
}

Formula build_gamma(const MaximalitySetup& setup, const Formula& phi, const Assignment& e0) {
    const FiniteAlgebra& A1 = setup.L1.algebra();
    if (!is_valid(setup.L2, phi).holds)
        throw SetupError("phi is not a theorem of the smaller logic");
    Element refuted = eval_formula(A1, phi, e0);
    if (setup.L1.is_designated(refuted))
        throw SetupError("e0 does not refute phi in the larger logic");

    Formula p1 = Formula::var(pvar(1));
    Substitution sigma0;
    for (const auto& v : vars(phi)) {
        auto it = e0.find(v);
        if (it == e0.end()) throw SetupError("e0 does not assign variable " + v);
        Element val = it->second;
        if (val == setup.one) {
            sigma0.set(v, instantiate(setup.top, p1));
        } else if (val == setup.zero) {
            sigma0.set(v, instantiate(setup.bottom, p1));
        } else {
            auto pos = std::find(setup.a_list.begin(), setup.a_list.end(), val);
            if (pos == setup.a_list.end())
                throw SetupError("e0 assigns a value outside the declared decomposition");
            sigma0.set(v, Formula::var(pvar(static_cast<int>(pos - setup.a_list.begin()) + 1)));
        }
    }
    Formula gamma = substitute(phi, sigma0);

    // Fact 1: on assignments into the embedded subalgebra, gamma is designated.
    const std::vector<std::string> gvars = vars(gamma);
    const std::vector<Element>& img = setup.embedding;
    std::vector<std::size_t> pick(gvars.size(), 0);
    while (true) {
        Assignment asg;
        for (std::size_t i = 0; i < gvars.size(); ++i) asg[gvars[i]] = img[pick[i]];
        if (!setup.L1.is_designated(eval_formula(A1, gamma, asg)))
            throw SetupError("gamma fails to be designated on a classical assignment");
        std::size_t k = gvars.size();
        bool done = gvars.empty();
        while (k > 0) {
            --k;
            if (++pick[k] < img.size()) break;
            pick[k] = 0;
            if (k == 0) done = true;
        }
        if (done) break;
    }
    // Fact 2: at p_j = a_j, gamma evaluates to the refuting value.
    Assignment diag;
    for (int j = 1; j <= setup.n_total(); ++j)
        diag[pvar(j)] = setup.a_list[static_cast<std::size_t>(j - 1)];
    if (eval_formula(A1, gamma, diag) != refuted)
        throw SetupError("gamma does not reproduce the refuting value on the diagonal");
    return gamma;
}

std::vector<Formula> recovery_set(const MaximalitySetup& setup, const Formula& gamma) {
    std::vector<Formula> out;
    Formula p = Formula::var("p");
    for (int i = setup.tail + 1; i <= setup.n_total(); ++i) {
        Substitution s;
        for (int j = 1; j <= setup.n_total(); ++j) s.set(pvar(j), setup.alpha_at(i, j, p));
        out.push_back(substitute(gamma, s));
    }
    return out;
}

std::optional<Formula> recovery_conjunction(const MaximalitySetup& setup,
                                            std::span<const Formula> circle) {
    if (!setup.conj_template || circle.empty()) return std::nullopt;
    auto conj = [&](Formula a, Formula b) {
        Substitution s;
        auto vs = vars(*setup.conj_template);
        s.set(vs[0], std::move(a));
        s.set(vs[1], std::move(b));
        return substitute(*setup.conj_template, s);
    };
    Formula acc = circle[0];
    for (std::size_t i = 1; i < circle.size(); ++i) acc = conj(std::move(acc), circle[i]);
    return acc;
}

Verdict check_star(const MaximalitySetup& setup, std::span<const Formula> circle) {
    const FiniteAlgebra& A1 = setup.L1.algebra();
    std::vector<bool> in_image(static_cast<std::size_t>(A1.size()), false);
    for (Element e : setup.embedding) in_image[static_cast<std::size_t>(e)] = true;
    for (Element v = 0; v < A1.size(); ++v) {
        bool all = true;
        for (const Formula& c : circle) {
            Assignment asg;
            for (const auto& var : vars(c)) asg[var] = v;
            if (!setup.L1.is_designated(eval_formula(A1, c, asg))) {
                all = false;
                break;
            }
        }
        if (all != in_image[static_cast<std::size_t>(v)]) {
            Verdict bad;
            bad.holds = false;
            bad.countermodel = NamedAssignment{{"p"}, {v}};
            return bad;
        }
    }
    return Verdict{};
}

DatResult dat_check(const MaximalitySetup& setup, std::span<const Formula> circle,
                    std::span<const Formula> gamma_set, const Formula& psi,
                    const EngineOptions& opt) {
    DatResult r;
    Sequent below{std::vector<Formula>(gamma_set.begin(), gamma_set.end()), psi};
    r.lhs = entails(setup.L2, below, opt).holds;
    Sequent above = below;
    std::vector<std::string> shared = sequent_vars(below);
    for (const auto& v : shared)
        for (const Formula& c : circle) {
            Substitution s;
            for (const auto& cv : vars(c)) s.set(cv, Formula::var(v));
            above.premises.push_back(substitute(c, s));
        }
    r.rhs = entails(setup.L1, above, opt).holds;
    return r;
}

// ── Phi discovery ───────────────────────────────────────────────────────────

std::optional<std::pair<Formula, Assignment>> find_phi(const MatrixLogic& L1,
                                                       const MatrixLogic& L2,
                                                       const std::vector<Element>& embedding,
                                                       const PhiSearchOptions& opt) {
    std::string err = check_matrix_embedding(L1, L2, embedding);
    if (!err.empty()) throw SetupError(err);
    const FiniteAlgebra& A1 = L1.algebra();
    const int s = A1.size();
    const int nv = std::max(1, opt.max_vars);

    // Enumerate terms by node count with semantic dedup over A1-value tables.
    std::vector<std::string> names;
    for (int v = 0; v < nv; ++v) names.push_back(pvar(v + 1));
    std::size_t tbl_size = 1;
    for (int v = 0; v < nv; ++v) tbl_size *= static_cast<std::size_t>(s);

    struct Term {
        Formula f;
        std::vector<Element> table;
    };
    std::vector<std::vector<Term>> by_size(opt.max_nodes + 1);
    std::unordered_set<std::string> seen;
    std::size_t explored = 0;

    auto table_key = [](const std::vector<Element>& t) {
        std::string k;
        k.reserve(t.size());
        for (Element e : t) k.push_back(static_cast<char>(e));
        return k;
    };
    auto classical_valid_and_refuted =
        [&](const std::vector<Element>& table) -> std::optional<std::size_t> {
        // Designated under every assignment into the image, refuted somewhere.
        std::optional<std::size_t> refuting;
        for (std::size_t idx = 0; idx < table.size(); ++idx) {
            std::size_t rest = idx;
            bool classical = true;
            for (int v = nv; v-- > 0;) {
                Element e = static_cast<Element>(rest % static_cast<std::size_t>(s));
                rest /= static_cast<std::size_t>(s);
                if (std::find(embedding.begin(), embedding.end(), e) == embedding.end())
                    classical = false;
            }
            bool desig = L1.is_designated(table[idx]);
            if (classical && !desig) return std::nullopt;  // not an L2 theorem
            if (!desig && !refuting) refuting = idx;
        }
        return refuting;
    };

    auto consider = [&](Formula f, std::vector<Element> table,
                        std::size_t size) -> std::optional<std::pair<Formula, Assignment>> {
        ++explored;
        std::string key = table_key(table);
        if (!seen.insert(key).second) return std::nullopt;
        if (auto refuting = classical_valid_and_refuted(table)) {
            Assignment e0;
            std::size_t rest = *refuting;
            for (int v = nv; v-- > 0;) {
                e0[names[static_cast<std::size_t>(v)]] =
                    static_cast<Element>(rest % static_cast<std::size_t>(s));
                rest /= static_cast<std::size_t>(s);
            }
            // Keep only the variables the formula mentions.
            Assignment trimmed;
            for (const auto& v : vars(f)) trimmed[v] = e0[v];
            return std::make_pair(f, trimmed);
        }
        by_size[size].push_back(Term{std::move(f), std::move(table)});
        return std::nullopt;
    };

    // Size 1: variables.
    for (int v = 0; v < nv; ++v) {
        std::vector<Element> table(tbl_size);
        for (std::size_t idx = 0; idx < tbl_size; ++idx) {
            std::size_t rest = idx;
            Element val = 0;
            for (int w = nv; w-- > 0;) {
                Element e = static_cast<Element>(rest % static_cast<std::size_t>(s));
                rest /= static_cast<std::size_t>(s);
                if (w == v) val = e;
            }
            table[idx] = val;
        }
        if (auto hit = consider(Formula::var(names[static_cast<std::size_t>(v)]),
                                std::move(table), 1))
            return hit;
    }

    for (std::size_t size = 2; size <= opt.max_nodes; ++size) {
        for (const auto& conn : A1.sig().connectives()) {
            if (conn.arity == 1) {
                const OpTable& t = A1.table(conn.symbol);
                for (const Term& sub : by_size[size - 1]) {
                    std::vector<Element> table(tbl_size);
                    for (std::size_t idx = 0; idx < tbl_size; ++idx)
                        table[idx] = t.data[static_cast<std::size_t>(sub.table[idx])];
                    if (auto hit = consider(Formula::unary(conn.symbol, sub.f), std::move(table),
                                            size))
                        return hit;
                    if (explored > opt.max_explored) return std::nullopt;
                }
            } else if (conn.arity == 2) {
                const OpTable& t = A1.table(conn.symbol);
                for (std::size_t ls = 1; ls + 1 < size; ++ls) {
                    std::size_t rs = size - 1 - ls;
                    for (const Term& a : by_size[ls])
                        for (const Term& b : by_size[rs]) {
                            std::vector<Element> table(tbl_size);
                            for (std::size_t idx = 0; idx < tbl_size; ++idx)
                                table[idx] =
                                    t.data[static_cast<std::size_t>(a.table[idx]) *
                                               static_cast<std::size_t>(s) +
                                           static_cast<std::size_t>(b.table[idx])];
                            if (auto hit = consider(Formula::binary(conn.symbol, a.f, b.f),
                                                    std::move(table), size))
                                return hit;
                            if (explored > opt.max_explored) return std::nullopt;
                        }
                }
            }
        }
    }
    return std::nullopt;
}

// ── Subalgebra presentation helpers ─────────────────────────────────────────

SubMatrix restrict_matrix(const MatrixLogic& L1, std::vector<Element> subset, std::string id) {
    const FiniteAlgebra& A1 = L1.algebra();
    std::sort(subset.begin(), subset.end());
    subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
    std::unordered_map<Element, Element> back;
    for (std::size_t i = 0; i < subset.size(); ++i) {
        if (subset[i] < 0 || subset[i] >= A1.size())
            throw std::runtime_error("subuniverse element out of range");
        back[subset[i]] = static_cast<Element>(i);
    }
    const int size = static_cast<int>(subset.size());
    std::vector<OpTable> tables;
    std::vector<std::string> names;
    for (Element e : subset) names.push_back(A1.element_name(e));
    for (std::size_t ci = 0; ci < A1.sig().connectives().size(); ++ci) {
        const int arity = A1.sig().connectives()[ci].arity;
        OpTable t{arity, {}};
        std::size_t total = 1;
        for (int k = 0; k < arity; ++k) total *= static_cast<std::size_t>(size);
        t.data.resize(total);
        for (std::size_t flat = 0; flat < total; ++flat) {
            std::size_t rest = flat;
            std::vector<Element> args(static_cast<std::size_t>(arity));
            for (int k = arity; k-- > 0;) {
                args[static_cast<std::size_t>(k)] =
                    subset[rest % static_cast<std::size_t>(size)];
                rest /= static_cast<std::size_t>(size);
            }
            Element r = A1.apply(static_cast<int>(ci), args);
            auto it = back.find(r);
            if (it == back.end())
                throw std::runtime_error("subset is not closed under " +
                                         A1.sig().connectives()[ci].symbol);
            t.data[flat] = it->second;
        }
        tables.push_back(std::move(t));
    }
    FiniteAlgebra A2 = FiniteAlgebra::custom(id, A1.sig(), size, std::move(tables),
                                             std::move(names));
    std::vector<Element> desig;
    for (std::size_t i = 0; i < subset.size(); ++i)
        if (L1.is_designated(subset[i])) desig.push_back(static_cast<Element>(i));
    if (desig.empty()) throw std::runtime_error("restricted designated set is empty");
    MatrixLogic L2 = MatrixLogic::custom(std::move(A2), DesignatedSet(size, std::move(desig)), id);
    return SubMatrix{std::move(L2), std::move(subset)};
}

SubMatrix classical_fragment(const MatrixLogic& L1) {
    return restrict_matrix(L1, {L1.algebra().bottom(), L1.algebra().top()},
                           L1.id() + "|cpl");
}

}  // namespace lukamax
