#pragma once

// Number-theoretic maximality deciders and the divisor-set representation of
// axiomatic extensions of the order-filter chain logics.  An extension of
// <chain(n), F_{i/n}> is encoded by a set of divisors of n (the intersection
// of the corresponding smaller-chain logics); divisor sets are canonicalized
// to antichains under divisibility, and compared by the preorder
//   S <= T  iff  every s in S divides some t in T.

#include <optional>
#include <string>
#include <vector>

#include "lukamax/algebra.hpp"

namespace lukamax {

bool is_prime(int n);
// n = q^k with q prime, k >= 1; outputs the decomposition when present.
bool is_prime_power(int n, int* q_out = nullptr, int* k_out = nullptr);

struct LogicId {
    int n = 1;
    int i = 1;
    bool bar = false;

    std::string text() const;
};

struct DivisorSet {
    int base_n = 1;
    std::vector<int> divisors;  // canonical antichain, ascending
    int filter_i = 1;

    // Canonicalizes: validates divisibility, drops d when d | d' for another
    // member d'.
    static DivisorSet make(int base_n, std::vector<int> divisors, int filter_i = 1);

    bool operator==(const DivisorSet& o) const {
        return base_n == o.base_n && divisors == o.divisors;
    }
    std::string text() const;
};

// S <= T in the divisibility preorder (same base required).
bool divset_leq(const DivisorSet& S, const DivisorSet& T);
bool divset_equiv(const DivisorSet& S, const DivisorSet& T);

// Sufficient condition: <chain(n), F> is maximal w.r.t. classical logic when
// 0 is undesignated and n is prime.
bool maximal_wrt_cpl(int n, const DesignatedSet& F);

// <chain(n), F_{i/n}> is maximal w.r.t. its restriction to chain(m) exactly
// when n = q^k and m = q^{k-1} for a prime q.
bool maximal_pair(int n, int m);

struct ExtMaxCertificate {
    bool maximal = false;
    int q = 0;  // valid when maximal
    int k = 0;
    std::string note;
};

// Decides whether the axiomatic extension L (a divisor set over base n) is
// maximal w.r.t. the single-chain extension {m}: true exactly when L is
// equivalent to {m, q^{k+1}} for a prime q | n with q^k | m, q^{k+1} not | m
// and q^{k+1} | n.
ExtMaxCertificate axiomatic_ext_maximal(const DivisorSet& L, int m);

// The restricted logic <chain(m), F_{i/n} meet chain(m)> as a LogicId.
LogicId restrict_logic(int n, int i, int m);

// All canonical divisor antichains over base n (every axiomatic extension).
std::vector<DivisorSet> all_divisor_antichains(int base_n, int filter_i = 1);

// Exhaustive lattice search: L covers {m} in the extension order.  Slower
// than axiomatic_ext_maximal but independent of its certificate arithmetic;
// used for cross-validation.
bool divset_maximal_bruteforce(const DivisorSet& L, int m);

}  // namespace lukamax
