#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bgl3/rational.hpp"

namespace bgl3 {

// Deterministic, platform-independent generator (splitmix64).
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : s_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (s_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [1, bound]
    long next_in(long bound) { return static_cast<long>(next() % static_cast<std::uint64_t>(bound)) + 1; }

private:
    std::uint64_t s_;
};

struct SampleConfig {
    std::uint64_t seed = 1;
    long magnitude_bound = 50; // numerators and denominators drawn from [1, bound]
    int retry_budget = 4000;
};

struct SampleCounts {
    int sites = 0;
    int a = 0;
    int b = 0;
    int n = 0;
};

struct GenericConfig {
    Rational q;
    std::vector<Rational> inhomogeneities;
    std::vector<Rational> u;
    std::vector<Rational> v;
    std::vector<Rational> w;

    std::vector<Rational> all_parameters() const {
        std::vector<Rational> r;
        r.reserve(inhomogeneities.size() + u.size() + v.size() + w.size());
        for (const auto& x : inhomogeneities) r.push_back(x);
        for (const auto& x : u) r.push_back(x);
        for (const auto& x : v) r.push_back(x);
        for (const auto& x : w) r.push_back(x);
        return r;
    }
};

// Rejection sampler producing generic points: nonzero, pairwise distinct,
// and clear of the resonance loci x = q^{+-2} y that are poles or zeros of
// f, g, K and of the vacuum eigenvalues.
class Sampler {
public:
    explicit Sampler(SampleConfig cfg, std::optional<Rational> q_override = {});

    const Rational& q() const { return q_; }
    const SampleConfig& config() const { return cfg_; }

    // Draw one more generic value, distinct (and resonance-free) against
    // everything drawn so far.
    Rational draw();
    std::vector<Rational> draw_many(int n);

    // True when x is admissible against the current pool.
    bool admissible(const Rational& x) const;

private:
    Rational draw_raw();

    SampleConfig cfg_;
    SplitMix64 rng_;
    Rational q_;
    Rational qsq_;
    std::vector<Rational> pool_;
};

// One-call form: q, inhomogeneities and the three spectral sets, all
// mutually generic.  Identical (seed, config) gives identical output.
GenericConfig sample_generic_config(const SampleConfig& cfg, const SampleCounts& counts,
                                    std::optional<Rational> q_override = {});

} // namespace bgl3
