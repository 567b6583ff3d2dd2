#include "bgl3/sample.hpp"

#include "bgl3/error.hpp"

namespace bgl3 {

Sampler::Sampler(SampleConfig cfg, std::optional<Rational> q_override)
    : cfg_(cfg), rng_(cfg.seed), q_(0), qsq_(0) {
    if (cfg_.magnitude_bound < 10) throw ConfigError("Sampler: magnitude bound must be >= 10");
    if (q_override) {
        if (q_override->is_zero() || *q_override == Rational(1) || *q_override == Rational(-1))
            throw ConfigError("Sampler: q must avoid {0, 1, -1}");
        q_ = *q_override;
        qsq_ = q_ * q_;
        return;
    }
    // q positive, != 1; q in {0, +-1} never occurs by construction
    for (int tries = 0; tries < cfg_.retry_budget; ++tries) {
        Rational cand(rng_.next_in(cfg_.magnitude_bound), rng_.next_in(cfg_.magnitude_bound));
        if (!cand.is_one()) {
            q_ = cand;
            qsq_ = cand * cand;
            return;
        }
    }
    throw SamplingError("Sampler: could not draw q");
}

Rational Sampler::draw_raw() {
    return Rational(rng_.next_in(cfg_.magnitude_bound), rng_.next_in(cfg_.magnitude_bound));
}

bool Sampler::admissible(const Rational& x) const {
    if (x.is_zero()) return false;
    for (const auto& y : pool_) {
        if (x == y) return false;
        if (x == qsq_ * y) return false;
        if (y == qsq_ * x) return false;
    }
    return true;
}

Rational Sampler::draw() {
    for (int tries = 0; tries < cfg_.retry_budget; ++tries) {
        Rational cand = draw_raw();
        if (admissible(cand)) {
            pool_.push_back(cand);
            return cand;
        }
    }
    throw SamplingError("Sampler: retry budget exhausted");
}

std::vector<Rational> Sampler::draw_many(int n) {
    std::vector<Rational> r;
    r.reserve(n);
    for (int i = 0; i < n; ++i) r.push_back(draw());
    return r;
}

GenericConfig sample_generic_config(const SampleConfig& cfg, const SampleCounts& counts,
                                    std::optional<Rational> q_override) {
    if (counts.sites < 0 || counts.a < 0 || counts.b < 0 || counts.n < 0)
        throw ConfigError("sample_generic_config: negative counts");
    Sampler s(cfg, std::move(q_override));
    GenericConfig out;
    out.q = s.q();
    out.inhomogeneities = s.draw_many(counts.sites);
    out.u = s.draw_many(counts.a);
    out.v = s.draw_many(counts.b);
    out.w = s.draw_many(counts.n);
    return out;
}

} // namespace bgl3
