#include "doctest.h"

#include "lukamax/extension.hpp"
#include "lukamax/matrix.hpp"

using namespace lukamax;

TEST_CASE("primality helpers") {
    CHECK(is_prime(2));
    CHECK(is_prime(7));
    CHECK(!is_prime(1));
    CHECK(!is_prime(9));
    int q = 0, k = 0;
    CHECK(is_prime_power(8, &q, &k));
    CHECK(q == 2);
    CHECK(k == 3);
    CHECK(is_prime_power(7, &q, &k));
    CHECK(k == 1);
    CHECK(!is_prime_power(6));
    CHECK(!is_prime_power(1));
}

TEST_CASE("divisor sets canonicalize to antichains") {
    CHECK(DivisorSet::make(4, {1, 2}).divisors == std::vector<int>{2});
    CHECK(DivisorSet::make(4, {2, 4}).divisors == std::vector<int>{4});
    CHECK(DivisorSet::make(6, {2, 3}).divisors == std::vector<int>{2, 3});
    CHECK(DivisorSet::make(6, {3, 3}).divisors == std::vector<int>{3});
    CHECK_THROWS(DivisorSet::make(6, {4}));
    CHECK_THROWS(DivisorSet::make(6, {}));
}

TEST_CASE("the divisibility preorder on divisor sets") {
    DivisorSet s2 = DivisorSet::make(6, {2});
    DivisorSet s23 = DivisorSet::make(6, {2, 3});
    CHECK(divset_leq(s2, s23));
    CHECK(!divset_leq(s23, s2));
    CHECK(divset_leq(s23, s23));
    CHECK_THROWS(divset_leq(s2, DivisorSet::make(4, {2})));
}

TEST_CASE("preorder is transitive with an antisymmetric quotient") {
    for (int base : {4, 6, 8, 12}) {
        std::vector<DivisorSet> all = all_divisor_antichains(base);
        for (const auto& a : all)
            for (const auto& c : all) {
                if (divset_equiv(a, c)) CHECK(a == c);  // canonical forms coincide
                for (const auto& e : all)
                    if (divset_leq(a, c) && divset_leq(c, e)) CHECK(divset_leq(a, e));
            }
    }
}

TEST_CASE("maximality w.r.t. classical logic: the prime sufficient condition") {
    CHECK(maximal_wrt_cpl(3, order_filter(3, 1)));
    CHECK(!maximal_wrt_cpl(4, order_filter(4, 1)));
    CHECK(!maximal_wrt_cpl(2, DesignatedSet(3, {0, 1, 2})));  // bottom designated
    CHECK_THROWS(maximal_wrt_cpl(3, DesignatedSet(3, {2})));  // size mismatch
}

TEST_CASE("the prime-power pair criterion matches the lattice oracle") {
    CHECK(maximal_pair(4, 2));
    CHECK(!maximal_pair(6, 3));
    for (int q : {2, 3, 5}) CHECK(maximal_pair(q, 1));
    CHECK(!maximal_pair(4, 1));
    CHECK(!maximal_pair(4, 4));
    for (int n = 1; n <= 6; ++n)
        for (int m = 1; m <= n; ++m) {
            if (n % m != 0) continue;
            CAPTURE(n);
            CAPTURE(m);
            CHECK(maximal_pair(n, m) ==
                  divset_maximal_bruteforce(DivisorSet::make(n, {n}), m));
        }
}

TEST_CASE("axiomatic-extension maximality certificates") {
    ExtMaxCertificate c1 = axiomatic_ext_maximal(DivisorSet::make(4, {2, 4}), 2);
    CHECK(c1.maximal);
    CHECK(c1.q == 2);
    CHECK(c1.k == 1);
    ExtMaxCertificate c2 = axiomatic_ext_maximal(DivisorSet::make(6, {2, 3}), 2);
    CHECK(c2.maximal);
    CHECK(c2.q == 3);
    CHECK(c2.k == 0);
    CHECK(!axiomatic_ext_maximal(DivisorSet::make(6, {6}), 6).maximal);

    for (int base : {4, 6}) {
        for (const DivisorSet& L : all_divisor_antichains(base))
            for (int m = 1; m <= base; ++m) {
                if (base % m != 0) continue;
                CAPTURE(base);
                CAPTURE(L.text());
                CAPTURE(m);
                CHECK(axiomatic_ext_maximal(L, m).maximal == divset_maximal_bruteforce(L, m));
            }
    }
}

TEST_CASE("restricting a filter logic to a dividing chain") {
    LogicId a = restrict_logic(4, 2, 2);
    CHECK(a.n == 2);
    CHECK(a.i == 1);
    CHECK(!a.bar);
    LogicId b = restrict_logic(4, 3, 2);
    CHECK(b.i == 2);
    LogicId c = restrict_logic(5, 2, 5);
    CHECK(c.n == 5);
    CHECK(c.i == 2);
    CHECK_THROWS(restrict_logic(4, 1, 3));
}

TEST_CASE("pair maximality is consistent with semantic sublogic inclusion") {
    // Whenever the pair criterion holds, the declared embedding passes.
    for (int n = 2; n <= 6; ++n)
        for (int m = 1; m < n; ++m) {
            if (n % m != 0 || !maximal_pair(n, m)) continue;
            for (int i = 1; i <= n; ++i) {
                MatrixLogic L1 = MatrixLogic::luk(n, i);
                MatrixLogic L2 = MatrixLogic::luk(m, restrict_filter(n, i, m));
                CHECK(check_matrix_embedding(L1, L2, chain_embedding(n, m)).empty());
            }
        }
}
