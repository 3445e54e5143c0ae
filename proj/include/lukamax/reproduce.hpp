#pragma once

// The claims battery behind the `reproduce` command: named checks grouped
// into suites, each returning pass/fail plus a short detail line.  Also the
// deterministic sampler used for the randomized parts (seeded, fixed
// arithmetic, platform-independent).

#include <cstdint>
#include <string>
#include <vector>

#include "lukamax/matrix.hpp"

namespace lukamax {

// ── Deterministic sampling ──────────────────────────────────────────────────

class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next() {
        // splitmix64
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t n) { return next() % n; }

private:
    std::uint64_t state_;
};

Formula random_formula(Rng& rng, const Signature& sig, int max_depth, int num_vars);
Sequent random_sequent(Rng& rng, const Signature& sig, int max_depth, int num_vars,
                       int max_premises);

// ── Battery ─────────────────────────────────────────────────────────────────

struct ClaimResult {
    std::string suite;
    std::string name;
    bool pass = false;
    std::string detail;
};

struct ReproduceOptions {
    std::string only;    // run a single suite when non-empty
    int q = 0;           // restrict the explosion/strongmax batteries to one prime
    EngineOptions engine;
};

// Suites: lqi-indist, recovery, lv7, translation, explosion, extension,
// qvar, strongmax, jfour, lfi.
std::vector<ClaimResult> run_reproduction(const ReproduceOptions& opt = {});

bool all_passed(const std::vector<ClaimResult>& results);

}  // namespace lukamax
