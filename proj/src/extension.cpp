#include "lukamax/extension.hpp"

#include <algorithm>

namespace lukamax {

bool is_prime(int n) {
    if (n > 1'000'000) throw std::runtime_error("primality guard: n too large");
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool is_prime_power(int n, int* q_out, int* k_out) {
    if (n > 1'000'000) throw std::runtime_error("primality guard: n too large");
    if (n < 2) return false;
    int q = 0;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            q = d;
            break;
        }
    if (q == 0) q = n;  // n itself prime
    int k = 0, rest = n;
    while (rest % q == 0) {
        rest /= q;
        ++k;
    }
    if (rest != 1) return false;
    if (q_out) *q_out = q;
    if (k_out) *k_out = k;
    return true;
}

std::string LogicId::text() const {
    return std::string(bar ? "lukbar:" : "luk:") + std::to_string(n) + ":" + std::to_string(i);
}

DivisorSet DivisorSet::make(int base_n, std::vector<int> divisors, int filter_i) {
    if (base_n < 1) throw std::runtime_error("divisor set: base must be >= 1");
    if (divisors.empty()) throw std::runtime_error("divisor set must be non-empty");
    std::sort(divisors.begin(), divisors.end());
    divisors.erase(std::unique(divisors.begin(), divisors.end()), divisors.end());
    for (int d : divisors)
        if (d < 1 || base_n % d != 0)
            throw std::runtime_error("divisor " + std::to_string(d) + " does not divide base " +
                                     std::to_string(base_n));
    // Antichain reduction: drop d when it divides a different member.
    std::vector<int> keep;
    for (int d : divisors) {
        bool dominated = false;
        for (int e : divisors)
            if (e != d && e % d == 0) {
                dominated = true;
                break;
            }
        if (!dominated) keep.push_back(d);
    }
    return DivisorSet{base_n, std::move(keep), filter_i};
}

std::string DivisorSet::text() const {
    std::string out = "{";
    for (std::size_t i = 0; i < divisors.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(divisors[i]);
    }
    return out + "}";
}

bool divset_leq(const DivisorSet& S, const DivisorSet& T) {
    if (S.base_n != T.base_n) throw std::runtime_error("divisor sets over different bases");
    for (int s : S.divisors) {
        bool covered = false;
        for (int t : T.divisors)
            if (t % s == 0) {
                covered = true;
                break;
            }
        if (!covered) return false;
    }
    return true;
}

bool divset_equiv(const DivisorSet& S, const DivisorSet& T) {
    return divset_leq(S, T) && divset_leq(T, S);
}

bool maximal_wrt_cpl(int n, const DesignatedSet& F) {
    if (F.algebra_size() != n + 1)
        throw std::runtime_error("designated set does not fit chain(" + std::to_string(n) + ")");
    return !F.contains(0) && is_prime(n);
}

bool maximal_pair(int n, int m) {
    if (m < 1 || m > n) throw std::runtime_error("maximal_pair requires 1 <= m <= n");
    int q = 0, k = 0;
    if (!is_prime_power(n, &q, &k)) return false;
    int expect = 1;
    for (int t = 1; t < k; ++t) expect *= q;  // q^{k-1}
    return m == expect;
}

ExtMaxCertificate axiomatic_ext_maximal(const DivisorSet& L, int m) {
    ExtMaxCertificate cert;
    if (m < 1 || L.base_n % m != 0) {
        cert.note = "m must divide the base";
        return cert;
    }
    for (int q = 2; q <= L.base_n; ++q) {
        if (!is_prime(q) || L.base_n % q != 0) continue;
        int k = 0;
        long long pow = 1;
        while (m % (pow * q) == 0) {
            pow *= q;
            ++k;
        }
        // pow = q^k exactly divides m; candidate partner is q^{k+1}.
        long long partner = pow * q;
        if (partner > L.base_n || L.base_n % partner != 0) continue;
        DivisorSet candidate = DivisorSet::make(L.base_n, {m, static_cast<int>(partner)},
                                                L.filter_i);
        if (divset_equiv(L, candidate)) {
            cert.maximal = true;
            cert.q = q;
            cert.k = k;
            cert.note = "L is the meet of {" + std::to_string(m) + "} and {" +
                        std::to_string(partner) + "}";
            return cert;
        }
    }
    cert.note = "no prime certificate matches";
    return cert;
}

LogicId restrict_logic(int n, int i, int m) {
    if (m < 1 || n % m != 0) throw std::runtime_error("restrict_logic requires m | n");
    return LogicId{m, restrict_filter(n, i, m), false};
}

std::vector<DivisorSet> all_divisor_antichains(int base_n, int filter_i) {
    std::vector<int> divs;
    for (int d = 1; d <= base_n; ++d)
        if (base_n % d == 0) divs.push_back(d);
    std::vector<DivisorSet> out;
    const std::size_t n = divs.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
        std::vector<int> subset;
        for (std::size_t b = 0; b < n; ++b)
            if (mask & (std::size_t{1} << b)) subset.push_back(divs[b]);
        bool antichain = true;
        for (std::size_t a = 0; a < subset.size() && antichain; ++a)
            for (std::size_t b = 0; b < subset.size(); ++b)
                if (a != b && subset[b] % subset[a] == 0) {
                    antichain = false;
                    break;
                }
        if (antichain) out.push_back(DivisorSet::make(base_n, subset, filter_i));
    }
    return out;
}

bool divset_maximal_bruteforce(const DivisorSet& L, int m) {
    if (m < 1 || L.base_n % m != 0) return false;
    DivisorSet target = DivisorSet::make(L.base_n, {m}, L.filter_i);
    // L must lie strictly above the target in the preorder...
    if (!divset_leq(target, L) || divset_leq(L, target)) return false;
    // ...with nothing strictly between.
    for (const DivisorSet& S : all_divisor_antichains(L.base_n, L.filter_i)) {
        if (divset_equiv(S, target) || divset_equiv(S, L)) continue;
        if (divset_leq(target, S) && divset_leq(S, L)) return false;
    }
    return true;
}

}  // namespace lukamax
