#include "doctest.h"

#include <set>

#include "lukamax/qvar.hpp"
#include "lukamax/reproduce.hpp"

using namespace lukamax;

namespace {

// Independent criticality oracle: literal transcription of the two defining
// conditions, written against sets rather than loops.
bool critical_oracle(std::vector<int> ns) {
    std::multiset<int> bag(ns.begin(), ns.end());
    for (int v : bag)
        if (bag.count(v) > 1) return false;
    std::set<int> divisible;
    for (int target : ns)
        for (int other : ns)
            if (other != target && target % other == 0) divisible.insert(target);
    return divisible.size() <= 1;
}

}  // namespace

TEST_CASE("chain lists parse and canonicalize") {
    auto c = CriticalAlgebra::parse("[2,1]");
    REQUIRE(c.has_value());
    CHECK(c->chains == std::vector<int>{2, 1});
    CHECK(c->text() == "[2,1]");
    CHECK(CriticalAlgebra::parse("[1, 3 ,2]")->chains == std::vector<int>{3, 2, 1});
    CHECK(!CriticalAlgebra::parse("[]").has_value());
    CHECK(!CriticalAlgebra::parse("[0]").has_value());
    CHECK(!CriticalAlgebra::parse("2,1").has_value());
    CHECK(CriticalAlgebra::of({1, 2}).carrier_size() == 6);
}

TEST_CASE("criticality matches an independent oracle on all small lists") {
    CHECK(is_critical(CriticalAlgebra::of({2, 1})));
    CHECK(!is_critical(CriticalAlgebra::of({2, 2})));
    CHECK(!is_critical(CriticalAlgebra::of({3, 2, 1})));
    for (int a = 1; a <= 4; ++a) {
        CHECK(is_critical(CriticalAlgebra::of({a})) == critical_oracle({a}));
        for (int b = 1; b <= 4; ++b) {
            CHECK(is_critical(CriticalAlgebra::of({a, b})) == critical_oracle({a, b}));
            for (int c = 1; c <= 4; ++c) {
                CAPTURE(a);
                CAPTURE(b);
                CAPTURE(c);
                CHECK(is_critical(CriticalAlgebra::of({a, b, c})) == critical_oracle({a, b, c}));
            }
        }
    }
}

TEST_CASE("inclusion of split pairs in chain quasivarieties follows divisibility") {
    for (int q : {2, 3, 5, 7})
        for (int k = 1; k <= 12; ++k) {
            bool inc = q_included(QFamily::of({CriticalAlgebra::of({q, 1})}),
                                  QFamily::of({CriticalAlgebra::of({k})}));
            CAPTURE(q);
            CAPTURE(k);
            CHECK(inc == (k % q == 0));
        }
    QFamily f = QFamily::of({CriticalAlgebra::of({2, 1}), CriticalAlgebra::of({3})});
    CHECK(q_included(f, f));
    CHECK(!q_included(QFamily::of({CriticalAlgebra::of({3, 1})}),
                      QFamily::of({CriticalAlgebra::of({4})})));
}

namespace {

// Semantic cross-oracle at small scale: quasi-identities that hold in every
// generator of G must hold in every generator of F whenever Q(F) <= Q(G).
bool qi_holds_on_family(const QFamily& F, const QuasiIdentity& qi) {
    for (const CriticalAlgebra& g : F.generators)
        if (!quasi_identity_holds(g.realize(), qi).holds) return false;
    return true;
}

QuasiIdentity random_qi(Rng& rng) {
    const Signature& sig = Signature::luk();
    auto eq = [&]() {
        Equation e{random_formula(rng, sig, 3, 3), std::nullopt};
        if (rng.below(2) == 0) e.rhs = random_formula(rng, sig, 3, 3);
        return e;
    };
    QuasiIdentity qi{{}, eq()};
    std::uint64_t count = 1 + rng.below(2);
    for (std::uint64_t i = 0; i < count; ++i) qi.premises.push_back(eq());
    return qi;
}

}  // namespace

TEST_CASE("inclusion criterion is consistent with sampled quasi-identities") {
    std::vector<QFamily> zoo = {
        QFamily::of({CriticalAlgebra::of({1})}),
        QFamily::of({CriticalAlgebra::of({2})}),
        QFamily::of({CriticalAlgebra::of({3})}),
        QFamily::of({CriticalAlgebra::of({2, 1})}),
        QFamily::of({CriticalAlgebra::of({3, 1})}),
        QFamily::of({CriticalAlgebra::of({2}), CriticalAlgebra::of({3, 1})}),
        QFamily::of({CriticalAlgebra::of({6})}),
        QFamily::of({CriticalAlgebra::of({4, 1})}),
        QFamily::of({CriticalAlgebra::of({3, 2})}),
    };
    Rng rng(0x9d9d);
    std::vector<QuasiIdentity> battery;
    for (int t = 0; t < 60; ++t) battery.push_back(random_qi(rng));
    battery.push_back(explosion_qi(2));
    battery.push_back(explosion_qi(3));
    for (const QFamily& F : zoo)
        for (const QFamily& G : zoo) {
            if (!q_included(F, G)) continue;
            for (std::size_t k = 0; k < battery.size(); ++k) {
                if (qi_holds_on_family(G, battery[k])) {
                    CAPTURE(F.text());
                    CAPTURE(G.text());
                    CAPTURE(k);
                    CHECK(qi_holds_on_family(F, battery[k]));
                }
            }
        }
    // A concrete separator in the refuted direction.
    CHECK(!q_included(QFamily::of({CriticalAlgebra::of({2})}),
                      QFamily::of({CriticalAlgebra::of({2, 1})})));
    CHECK(qi_holds_on_family(QFamily::of({CriticalAlgebra::of({2, 1})}), explosion_qi(2)));
    CHECK(!qi_holds_on_family(QFamily::of({CriticalAlgebra::of({2})}), explosion_qi(2)));
}

TEST_CASE("minimal families over the Boolean quasivariety") {
    std::vector<QFamily> m6 = minimal_over_boolean(6);
    REQUIRE(m6.size() == 2);
    CHECK(m6[0] == QFamily::of({CriticalAlgebra::of({2, 1})}));
    CHECK(m6[1] == QFamily::of({CriticalAlgebra::of({3, 1})}));
    for (int q : {2, 3, 5, 7}) {
        std::vector<QFamily> mq = minimal_over_boolean(q);
        REQUIRE(mq.size() == 1);
        CHECK(mq[0] == QFamily::of({CriticalAlgebra::of({q, 1})}));
    }
    std::vector<QFamily> m4 = minimal_over_boolean(4);
    REQUIRE(m4.size() == 1);
    CHECK(m4[0] == QFamily::of({CriticalAlgebra::of({2, 1})}));
    CHECK_THROWS(minimal_over_boolean(1));
}

TEST_CASE("minimal families over larger chain quasivarieties") {
    std::vector<QFamily> m22 = minimal_over(2, 2);
    REQUIRE(m22.size() == 1);
    CHECK(m22[0] == QFamily::of({CriticalAlgebra::of({2}), CriticalAlgebra::of({4, 1})}));
    std::vector<QFamily> m23 = minimal_over(2, 3);
    REQUIRE(m23.size() == 1);
    CHECK(m23[0] == QFamily::of({CriticalAlgebra::of({2}), CriticalAlgebra::of({3, 1})}));
    CHECK(minimal_over(1, 5) == minimal_over_boolean(5));
    CHECK(minimal_over(1, 6) == minimal_over_boolean(6));
}

TEST_CASE("quasi-identity checking with countermodels") {
    QuasiIdentity qi = explosion_qi(2);
    CHECK(quasi_identity_holds(CriticalAlgebra::of({2, 1}).realize(), qi).holds);
    Verdict v = quasi_identity_holds(CriticalAlgebra::of({2}).realize(), qi);
    REQUIRE(!v.holds);
    // First countermodel in index order: x = 1/2, then y = 1/2.
    CHECK(v.countermodel->values == std::vector<Element>{1, 1});
    CHECK(quasi_identity_holds(CriticalAlgebra::of({1}).realize(), qi).holds);  // vacuous

    QuasiIdentity parsed = QuasiIdentity::parse_text("2#(x & !x) = 1 => y | !y = 1",
                                                     Signature::luk());
    CHECK(!quasi_identity_holds(CriticalAlgebra::of({2}).realize(), parsed).holds);
    QuasiIdentity two_sided =
        QuasiIdentity::parse_text("x = y => x | y = x & y", Signature::luk());
    CHECK(quasi_identity_holds(FiniteAlgebra::chain(3), two_sided).holds);
    CHECK_THROWS(QuasiIdentity::parse_text("x = 1", Signature::luk()));
    CHECK_THROWS(QuasiIdentity::parse_text("x => y", Signature::luk()));
}

TEST_CASE("capped strong disjunction is idempotent under its own power") {
    // (m x)^m = m x on the m+1 chain, for m up to 8.
    const Signature& sig = Signature::luk();
    for (int m = 2; m <= 8; ++m) {
        std::string mx = std::to_string(m) + "#x";
        QuasiIdentity qi{{}, Equation{parse("(" + mx + ")^" + std::to_string(m), sig),
                                      parse(mx, sig)}};
        CHECK(quasi_identity_holds(FiniteAlgebra::chain(m), qi).holds);
    }
}

TEST_CASE("strong maximality reports for the spotlight primes") {
    for (auto [q, j] : {std::pair{3, 1}, {2, 1}, {3, 3}}) {
        StrongMaxReport rep = strong_max_report(q, j);
        CAPTURE(q);
        CAPTURE(j);
        CHECK(rep.chain_inclusions);
        CHECK(rep.exp_separates);
        CHECK(!rep.exp_in_luk.holds);
        CHECK(rep.power_separates);
        CHECK(rep.qi_axiomatization);
        CHECK(rep.rule_correspondence);
        CHECK(rep.all_ok());
    }
    CHECK_THROWS(strong_max_report(4, 1));
    CHECK_THROWS(strong_max_report(3, 4));
}

TEST_CASE("general strong maximality instantiates both generator shapes") {
    GeneralStrongMaxReport coprime = general_strong_max_report(2, 1, 3);
    CHECK(coprime.r == 0);
    CHECK(coprime.generators ==
          QFamily::of({CriticalAlgebra::of({2}), CriticalAlgebra::of({3, 1})}));
    CHECK(coprime.all_ok());

    GeneralStrongMaxReport sharing = general_strong_max_report(2, 1, 2);
    CHECK(sharing.r == 1);
    CHECK(sharing.partner == 4);
    CHECK(sharing.generators ==
          QFamily::of({CriticalAlgebra::of({2}), CriticalAlgebra::of({4, 1})}));
    CHECK(sharing.all_ok());

    GeneralStrongMaxReport boolean_case = general_strong_max_report(1, 1, 3);
    CHECK(boolean_case.reduces_to_boolean_case);
    CHECK(boolean_case.generators == QFamily::of({CriticalAlgebra::of({3, 1})}));
    CHECK(boolean_case.all_ok());
}

TEST_CASE("the subchain surrogate behaves like the one-variable axiom") {
    // Premise never reaches top on a product with a Boolean coordinate.
    CHECK(axiomminimal_qi_check({3, 1}, 6, 2).holds);
    CHECK(axiomminimal_qi_check({2}, 6, 2).holds);
    // On the ambient chain the premise fires and the subchain condition fails.
    Verdict v = axiomminimal_qi_check({6}, 6, 2);
    REQUIRE(!v.holds);
    CHECK(!axiomminimal_qi_check({4}, 4, 2).holds);
}
