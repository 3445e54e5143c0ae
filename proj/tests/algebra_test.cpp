#include "doctest.h"

#include <fstream>
#include <set>

#include "lukamax/algebra.hpp"
#include "lukamax/matrix.hpp"
#include "lukamax/presets.hpp"
#include "lukamax/reproduce.hpp"

using namespace lukamax;

namespace {

Element eval1(const FiniteAlgebra& A, const Formula& f, Element x) {
    Assignment asg;
    for (const auto& v : vars(f)) asg[v] = x;
    return eval_formula(A, f, asg);
}

std::filesystem::path temp_alg(const char* name, const char* body) {
    auto p = std::filesystem::temp_directory_path() / name;
    std::ofstream out(p);
    out << body;
    return p;
}

FiniteAlgebra other_signature_probe() {
    OpTable t{1, {0, 1}};
    return FiniteAlgebra::custom("probe", Signature("other", {{"f", 1}}), 2, {t});
}

bool is_algebra_hom(const FiniteAlgebra& A1, const FiniteAlgebra& A2,
                    const std::vector<Element>& emb) {
    for (std::size_t ci = 0; ci < A2.sig().connectives().size(); ++ci) {
        const int arity = A2.sig().connectives()[ci].arity;
        std::vector<Element> args(static_cast<std::size_t>(arity), 0);
        while (true) {
            std::vector<Element> mapped(args.size());
            for (std::size_t k = 0; k < args.size(); ++k)
                mapped[k] = emb[static_cast<std::size_t>(args[k])];
            if (emb[static_cast<std::size_t>(A2.apply(static_cast<int>(ci), args))] !=
                A1.apply(static_cast<int>(ci), mapped))
                return false;
            std::size_t k = args.size();
            bool done = args.empty();
            while (k > 0) {
                --k;
                if (++args[k] < A2.size()) break;
                args[k] = 0;
                if (k == 0) done = true;
            }
            if (done) break;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("two-element chain is the Boolean algebra") {
    FiniteAlgebra b2 = FiniteAlgebra::chain(1);
    CHECK(b2.size() == 2);
    CHECK(b2.table("!").data == std::vector<Element>{1, 0});
    CHECK(b2.table("->").data == std::vector<Element>{1, 1, 0, 1});
    CHECK_THROWS(FiniteAlgebra::chain(0));
}

TEST_CASE("chain operations follow the scaled closed forms") {
    FiniteAlgebra c3 = FiniteAlgebra::chain(3);
    CHECK(c3.table("!").data[1] == 2);  // negation of 1/3 is 2/3
    FiniteAlgebra c2 = FiniteAlgebra::chain(2);
    CHECK(c2.table("->").data[1 * 3 + 0] == 1);  // 1/2 -> 0 = 1/2

    const Signature& sig = Signature::luk();
    for (int n = 1; n <= 8; ++n) {
        FiniteAlgebra A = FiniteAlgebra::chain(n);
        Formula ot = parse("x o* y", sig), op = parse("x o+ y", sig);
        Formula an = parse("x & y", sig), lo = parse("x | y", sig);
        for (Element x = 0; x <= n; ++x)
            for (Element y = 0; y <= n; ++y) {
                Assignment asg{{"x", x}, {"y", y}};
                CHECK(eval_formula(A, ot, asg) == std::max(0, x + y - n));
                CHECK(eval_formula(A, op, asg) == std::min(n, x + y));
                CHECK(eval_formula(A, an, asg) == std::min(x, y));
                CHECK(eval_formula(A, lo, asg) == std::max(x, y));
            }
    }
}

TEST_CASE("products compute componentwise") {
    FiniteAlgebra P = FiniteAlgebra::product(FiniteAlgebra::chain(3), FiniteAlgebra::chain(1));
    CHECK(P.size() == 8);
    // not (1/3, 0) = (2/3, 1)
    CHECK(P.table("!").data[static_cast<std::size_t>(P.pair(1, 0))] == P.pair(2, 1));
    // (1,1) -> (0,0) = (0,0)
    CHECK(P.table("->").data[static_cast<std::size_t>(P.pair(3, 1) * 8 + P.pair(0, 0))] ==
          P.pair(0, 0));
    CHECK(P.element_name(P.pair(1, 0)) == "(1/3,0)");
    CHECK(P.element_by_name("(2/3,1)") == P.pair(2, 1));
    CHECK_THROWS(FiniteAlgebra::product(FiniteAlgebra::chain(2), other_signature_probe()));
}

TEST_CASE("order filters and their restrictions") {
    CHECK(order_filter(3, 1).members() == std::vector<Element>{1, 2, 3});
    CHECK(order_filter(4, 2).members() == std::vector<Element>{2, 3, 4});
    CHECK(order_filter(5, 5).members() == std::vector<Element>{5});
    CHECK_THROWS(order_filter(3, 0));
    CHECK_THROWS(order_filter(3, 4));

    CHECK(restrict_filter(4, 2, 2) == 1);
    CHECK(restrict_filter(4, 3, 2) == 2);
    CHECK(restrict_filter(4, 4, 1) == 1);
    CHECK(restrict_filter(6, 1, 2) == 1);
    CHECK_THROWS(restrict_filter(4, 1, 3));
}

TEST_CASE("scaled chains embed exactly when the parameter divides") {
    for (int n = 1; n <= 8; ++n)
        for (int m = 1; m < n; ++m) {
            FiniteAlgebra A1 = FiniteAlgebra::chain(n);
            FiniteAlgebra A2 = FiniteAlgebra::chain(m);
            if (n % m == 0) {
                CHECK(is_algebra_hom(A1, A2, chain_embedding(n, m)));
            } else {
                // No injective homomorphism at all.  Any homomorphism fixes
                // the endpoints (x -> x is top, negation of top is bottom)
                // and commutes with negation, so only positions 1..m/2 are
                // free; enumerate those and check every completion.
                std::vector<Element> emb(static_cast<std::size_t>(m + 1), 0);
                emb[0] = 0;
                emb[static_cast<std::size_t>(m)] = n;
                bool any = false;
                auto rec = [&](auto&& self, int k) -> void {
                    if (any) return;
                    if (k > m - k) {
                        std::vector<bool> used(static_cast<std::size_t>(n + 1), false);
                        bool injective = true;
                        for (Element e : emb) {
                            if (used[static_cast<std::size_t>(e)]) injective = false;
                            used[static_cast<std::size_t>(e)] = true;
                        }
                        if (injective && is_algebra_hom(A1, A2, emb)) any = true;
                        return;
                    }
                    for (Element v = 0; v <= n; ++v) {
                        emb[static_cast<std::size_t>(k)] = v;
                        emb[static_cast<std::size_t>(m - k)] = n - v;
                        self(self, k + 1);
                    }
                };
                rec(rec, 1);
                CHECK(!any);
            }
        }
}

TEST_CASE("table files load and validate") {
    LoadedAlgebra lv3 = load_preset("LV3");
    FiniteAlgebra chain2 = FiniteAlgebra::chain(2);
    CHECK(lv3.algebra.table("!").data == chain2.table("!").data);
    CHECK(lv3.algebra.table("->").data == chain2.table("->").data);
    REQUIRE(lv3.designated.has_value());
    CHECK(lv3.designated->members() == std::vector<Element>{2});

    for (int n = 1; n <= 7; ++n) {
        LoadedAlgebra chain = load_preset(n == 1 ? "B2" : "LV" + std::to_string(n + 1));
        FiniteAlgebra want = FiniteAlgebra::chain(n);
        CHECK(chain.algebra.table("!").data == want.table("!").data);
        CHECK(chain.algebra.table("->").data == want.table("->").data);
    }

    LoadedAlgebra i1 = load_preset("I1");
    CHECK(i1.algebra.table("->").data[2 * 3 + 1] == 0);  // 1 -> 1/2 = 0
    LoadedAlgebra g3 = load_preset("G3");
    CHECK(g3.algebra.table("!").data[1] == 0);  // not 1/2 = 0
    LoadedAlgebra m4m = load_preset("M4m");
    CHECK(m4m.algebra.table("box").data[2] == 0);  // box B = 0

    CHECK_THROWS_WITH(load_algebra(temp_alg("bad1.alg", "size 2\nsignature !/1\ntable !\n0\n")),
                      doctest::Contains("unexpected end"));
    CHECK_THROWS_WITH(load_algebra(temp_alg("bad2.alg",
                                            "size 2\nsignature !/1\ntable !\n0 5\n")),
                      doctest::Contains("out of range"));
    CHECK_THROWS_WITH(load_algebra(temp_alg("bad3.alg",
                                            "size 2\nsignature !/1\ntable neg\n0 1\n")),
                      doctest::Contains("undeclared"));
    CHECK_THROWS_WITH(load_algebra(temp_alg("bad4.alg", "size 2\nsignature !/1\n")),
                      doctest::Contains("missing table"));
    CHECK_THROWS_WITH(load_algebra(temp_alg("bad5.alg",
                                            "size 2\nsignature f/3\ntable f\n0\n")),
                      doctest::Contains("arity"));
    CHECK_THROWS_WITH(
        load_algebra(temp_alg("bad6.alg",
                              "size 2\nsignature !/1\ntable !\n1 0\ntable !\n1 0\n")),
        doctest::Contains("duplicate"));
}

TEST_CASE("evaluation is the homomorphic extension") {
    FiniteAlgebra c3 = FiniteAlgebra::chain(3);
    const Signature& sig = Signature::luk();
    CHECK(eval_formula(c3, parse("x -> y", sig), {{"x", 2}, {"y", 1}}) == 2);
    FiniteAlgebra c2 = FiniteAlgebra::chain(2);
    CHECK(eval_formula(c2, parse("(p -> !p) -> !p", sig), {{"p", 1}}) == 1);
    for (int n = 1; n <= 5; ++n) {
        FiniteAlgebra A = FiniteAlgebra::chain(n);
        for (Element x = 0; x <= n; ++x)
            CHECK(eval_formula(A, parse("!(p -> p)", sig), {{"p", x}}) == 0);
    }
    CHECK_THROWS(eval_formula(c3, parse("x -> y", sig), {{"x", 2}}));
}

TEST_CASE("compiled evaluation agrees with the tree walk") {
    Rng rng(0x77);
    FiniteAlgebra A = FiniteAlgebra::chain(4);
    const std::vector<std::string> order = {"p1", "p2", "p3"};
    for (int t = 0; t < 100; ++t) {
        Formula f = random_formula(rng, Signature::luk(), 6, 3);
        CompiledFormula cf(A, expand(f, A.sig()), order);
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<Element> values = {static_cast<Element>(rng.below(5)),
                                           static_cast<Element>(rng.below(5)),
                                           static_cast<Element>(rng.below(5))};
            Assignment asg{{"p1", values[0]}, {"p2", values[1]}, {"p3", values[2]}};
            CHECK(cf.eval(values) == eval_formula(A, f, asg));
        }
    }
}

TEST_CASE("the doubled element never drops below the filter except at zero") {
    const Signature& sig = Signature::luk();
    for (int n = 1; n <= 8; ++n) {
        FiniteAlgebra A = FiniteAlgebra::chain(n);
        for (int i = 1; i <= n; ++i) {
            Formula fold = parse(std::to_string(i) + "#x", sig);
            for (Element x = 0; x <= n; ++x) {
                bool below = eval_formula(A, fold, {{"x", x}}) < i;
                CHECK(below == (x == 0));
            }
        }
    }
}

TEST_CASE("boolean clone is the four unary functions") {
    CloneResult clone = unary_clone(FiniteAlgebra::chain(1));
    CHECK(!clone.cap_exceeded);
    std::set<std::vector<Element>> tables;
    for (const auto& e : clone.functions) tables.insert(e.table);
    CHECK(tables == std::set<std::vector<Element>>{
                        {0, 1}, {1, 0}, {0, 0}, {1, 1}});
}

TEST_CASE("clone witnesses evaluate to their tables") {
    for (int n : {1, 2, 3}) {
        FiniteAlgebra A = FiniteAlgebra::chain(n);
        CloneResult clone = unary_clone(A);
        for (const auto& e : clone.functions)
            for (Element x = 0; x <= n; ++x) CHECK(eval1(A, e.witness, x) == e.table[x]);
    }
    FiniteAlgebra mn2 = load_preset("Mn2_2").algebra;
    CloneResult clone = unary_clone(mn2);
    for (const auto& e : clone.functions)
        for (Element x = 0; x < mn2.size(); ++x) CHECK(eval1(mn2, e.witness, x) == e.table[x]);
}

namespace {

// Independent closure oracle: saturation over a std::set with reversed
// operation order, no breadth layering.
std::set<std::vector<Element>> saturate_unary(const FiniteAlgebra& A) {
    const int s = A.size();
    std::set<std::vector<Element>> fns;
    std::vector<Element> id(static_cast<std::size_t>(s));
    for (Element i = 0; i < s; ++i) id[static_cast<std::size_t>(i)] = i;
    fns.insert(id);
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<std::vector<Element>> snapshot(fns.begin(), fns.end());
        for (std::size_t ci = A.sig().connectives().size(); ci-- > 0;) {
            int arity = A.sig().connectives()[ci].arity;
            if (arity == 1) {
                for (const auto& f : snapshot) {
                    std::vector<Element> t(static_cast<std::size_t>(s));
                    for (int x = 0; x < s; ++x) {
                        Element args[1] = {f[static_cast<std::size_t>(x)]};
                        t[static_cast<std::size_t>(x)] = A.apply(static_cast<int>(ci), args);
                    }
                    changed |= fns.insert(t).second;
                }
            } else if (arity == 2) {
                for (const auto& f : snapshot)
                    for (const auto& g : snapshot) {
                        std::vector<Element> t(static_cast<std::size_t>(s));
                        for (int x = 0; x < s; ++x) {
                            Element args[2] = {f[static_cast<std::size_t>(x)],
                                               g[static_cast<std::size_t>(x)]};
                            t[static_cast<std::size_t>(x)] = A.apply(static_cast<int>(ci), args);
                        }
                        changed |= fns.insert(t).second;
                    }
            }
        }
    }
    return fns;
}

}  // namespace

TEST_CASE("clone closure matches an independent saturation oracle") {
    for (int n : {1, 2, 3}) {
        FiniteAlgebra A = FiniteAlgebra::chain(n);
        CloneResult clone = unary_clone(A);
        std::set<std::vector<Element>> got;
        for (const auto& e : clone.functions) got.insert(e.table);
        CHECK(got == saturate_unary(A));
    }
}

TEST_CASE("synthesis returns the documented witnesses") {
    FiniteAlgebra c4 = FiniteAlgebra::chain(4);
    SynthResult doubling = synth_unary(c4, {{1, 2}});
    REQUIRE(doubling.witness.has_value());
    CHECK(render(*doubling.witness) == "p o+ p");
    SynthResult squaring = synth_unary(c4, {{3, 2}});
    REQUIRE(squaring.witness.has_value());
    CHECK(render(*squaring.witness) == "p o* p");

    // Half and thirds are mutually unreachable on the 7-element chain.
    FiniteAlgebra c6 = FiniteAlgebra::chain(6);
    SynthResult blocked = synth_unary(c6, {{3, 2}});
    CHECK(!blocked.witness.has_value());
    CHECK(blocked.closure_complete);

    CHECK_THROWS(synth_unary(c4, {{9, 0}}));
}

TEST_CASE("synthesis cap reports an incomplete closure") {
    SynthResult r = synth_unary(FiniteAlgebra::chain(6), {{3, 2}}, CloneOptions{35});
    // Target 1/2 -> 1/3 is impossible, but the tiny cap stops the search
    // before that is certain.
    CHECK(!r.witness.has_value());
    CHECK(!r.closure_complete);
}

TEST_CASE("filter characteristic terms have the two-valued tables") {
    for (int n = 2; n <= 5; ++n) {
        FiniteAlgebra A = FiniteAlgebra::chain(n);
        for (int m = 1; m <= n; ++m) {
            Formula lam = lambda_term(n, m);
            for (Element x = 0; x <= n; ++x)
                CHECK(eval1(A, lam, x) == (x >= m ? n : 0));
        }
    }
}

TEST_CASE("the preset directory can be overridden by environment") {
    auto dir = std::filesystem::temp_directory_path() / "lukamax_presets_test";
    std::filesystem::create_directories(dir);
    {
        std::ofstream out(dir / "tiny.alg");
        out << "size 2\nsignature f/1\ndesignated 1\ntable f\n1 0\n";
    }
    setenv("LUKAMAX_PRESET_DIR", dir.c_str(), 1);
    LoadedAlgebra l = load_preset("tiny");
    unsetenv("LUKAMAX_PRESET_DIR");
    CHECK(l.algebra.size() == 2);
    CHECK(l.algebra.sig().find("f") != nullptr);
    // And back to the shipped directory.
    CHECK(load_preset("B2").algebra.size() == 2);
}

TEST_CASE("logic specs resolve chains, products and presets") {
    MatrixLogic a = parse_logic_spec("luk:3:1");
    CHECK(a.algebra().size() == 4);
    CHECK(a.designated().members() == std::vector<Element>{1, 2, 3});
    MatrixLogic b = parse_logic_spec("lukbar:2:1");
    CHECK(b.algebra().size() == 6);
    MatrixLogic c = parse_logic_spec("cpl");
    CHECK(c.algebra().size() == 2);
    MatrixLogic d = parse_logic_spec("alg:P1");
    CHECK(d.algebra().size() == 3);
    CHECK(d.designated().members() == std::vector<Element>{1, 2});
    // Override by element names.
    MatrixLogic e = parse_logic_spec("alg:LV3:1,2");
    CHECK(e.designated().members() == std::vector<Element>{1, 2});
    CHECK_THROWS(parse_logic_spec("luk:3"));
    CHECK_THROWS(parse_logic_spec("alg:LV3:banana"));
    CHECK_THROWS(parse_logic_spec("nonsense"));
    CHECK_THROWS(parse_logic_spec("alg:does_not_exist"));
}

TEST_CASE("element names round-trip") {
    FiniteAlgebra c4 = FiniteAlgebra::chain(4);
    CHECK(c4.element_name(0) == "0");
    CHECK(c4.element_name(2) == "1/2");
    CHECK(c4.element_name(4) == "1");
    CHECK(c4.element_by_name("1/2") == 2);
    CHECK(c4.element_by_name("2/4") == 2);
    CHECK(c4.element_by_name("3") == 3);
    CHECK(!c4.element_by_name("2/3").has_value());
    CHECK(!c4.element_by_name("7").has_value());
}
