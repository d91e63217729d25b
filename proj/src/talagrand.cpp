#include "ternary/talagrand.hpp"

#include <cmath>
#include <stdexcept>

#include "ternary/sampling.hpp"

namespace ternary {

TalagrandParams TalagrandParams::defaults(int n, std::optional<std::uint64_t> term_cap) {
    TalagrandParams p;
    const int root = int(std::ceil(std::sqrt(double(n))));
    p.band = double(root);
    p.term_weight = root;
    p.num_terms = pow3(root);
    if (term_cap && *term_cap < p.num_terms) p.num_terms = *term_cap;
    return p;
}

std::vector<DnfTerm> sample_terms(int n, const TalagrandParams& params, Rng& rng) {
    std::vector<DnfTerm> terms(params.num_terms);
    for (auto& term : terms) {
        term.constraints.resize(std::size_t(params.term_weight));
        for (auto& c : term.constraints) {
            c.coord = int(rng.below(std::uint64_t(n)));
            c.sign = rng.sign();
        }
    }
    return terms;
}

TalagrandLayout make_layout(int n, std::vector<DnfTerm> terms, const TalagrandParams& params) {
    TalagrandLayout layout;
    layout.n = n;
    layout.params = params;
    layout.terms = std::move(terms);
    const std::uint64_t size = domain_size(n);
    layout.region.assign(size, kRegionOffBand);
    for (PointIndex i = 0; i < size; ++i) {
        const TernaryPoint x = decode(i, n);
        if (layer_classify(weight(x), n, params.band) != LayerTag::Middle) continue;
        std::int32_t hit = kRegionNone;
        for (std::size_t t = 0; t < layout.terms.size(); ++t) {
            if (!layout.terms[t].satisfied_by(x)) continue;
            if (hit == kRegionNone) {
                hit = std::int32_t(t);
            } else {
                hit = kRegionMulti;
                break;
            }
        }
        layout.region[i] = hit;
    }
    return layout;
}

std::uint64_t TalagrandLayout::unique_count() const {
    std::uint64_t c = 0;
    for (auto r : region) c += (r >= 0);
    return c;
}

std::uint64_t TalagrandLayout::none_count() const {
    std::uint64_t c = 0;
    for (auto r : region) c += (r == kRegionNone);
    return c;
}

std::uint64_t TalagrandLayout::multi_count() const {
    std::uint64_t c = 0;
    for (auto r : region) c += (r == kRegionMulti);
    return c;
}

namespace {

TalagrandInstance assemble(const TalagrandLayout& layout, Rng& rng, bool yes_side) {
    TalagrandInstance inst;
    inst.layout = layout;
    inst.yes_side = yes_side;
    const int n = layout.n;

    if (yes_side) {
        inst.term_on.resize(std::size_t(layout.params.num_terms));
        for (auto& b : inst.term_on) b = rng.coin() ? 1 : 0;
    }

    inst.set = PointSet(n);
    for (PointIndex i = 0; i < domain_size(n); ++i) {
        const std::int32_t r = layout.region[i];
        bool member = false;
        if (r == kRegionOffBand) {
            // inner layers always in, outer layers always out
            member = layer_classify(weight_of_index(i, n), n, layout.params.band) ==
                     LayerTag::Inner;
        } else if (r == kRegionNone) {
            member = true;
        } else if (r == kRegionMulti) {
            member = false;
        } else {
            member = yes_side ? (inst.term_on[std::size_t(r)] != 0) : rng.coin();
        }
        if (member) inst.set.set(i);
    }
    return inst;
}

}  // namespace

TalagrandInstance assemble_yes(const TalagrandLayout& layout, Rng& rng) {
    return assemble(layout, rng, true);
}

TalagrandInstance assemble_no(const TalagrandLayout& layout, Rng& rng) {
    return assemble(layout, rng, false);
}

TalagrandInstance sample_dyes(int n, Rng& rng, std::optional<TalagrandParams> params) {
    const TalagrandParams p = params ? *params : TalagrandParams::defaults(n);
    return assemble_yes(make_layout(n, sample_terms(n, p, rng), p), rng);
}

TalagrandInstance sample_dno(int n, Rng& rng, std::optional<TalagrandParams> params) {
    const TalagrandParams p = params ? *params : TalagrandParams::defaults(n);
    return assemble_no(make_layout(n, sample_terms(n, p, rng), p), rng);
}

std::int32_t classify_point(const TernaryPoint& x, const std::vector<DnfTerm>& terms,
                            int n, double band) {
    if (layer_classify(weight(x), n, band) != LayerTag::Middle) return kRegionOffBand;
    std::int32_t hit = kRegionNone;
    for (std::size_t t = 0; t < terms.size(); ++t) {
        if (!terms[t].satisfied_by(x)) continue;
        if (hit == kRegionNone) {
            hit = std::int32_t(t);
        } else {
            return kRegionMulti;
        }
    }
    return hit;
}

CollisionReport collision_statistic(int n, int s, Rng& rng, std::uint64_t trials,
                                    std::optional<TalagrandParams> maybe) {
    if (s < 2) throw std::invalid_argument("collision_statistic: need s >= 2");
    const TalagrandParams params = maybe ? *maybe : TalagrandParams::defaults(n);
    std::uint64_t hits = 0;
    std::vector<std::int32_t> ids(static_cast<std::size_t>(s));
    for (std::uint64_t t = 0; t < trials; ++t) {
        const auto terms = sample_terms(n, params, rng);
        bool collide = false;
        for (int j = 0; j < s; ++j)
            ids[std::size_t(j)] = classify_point(sample_uniform(rng, n), terms, n, params.band);
        for (int a = 0; a < s && !collide; ++a) {
            if (ids[std::size_t(a)] < 0) continue;
            for (int b = a + 1; b < s; ++b) {
                if (ids[std::size_t(a)] == ids[std::size_t(b)]) {
                    collide = true;
                    break;
                }
            }
        }
        hits += collide;
    }
    CollisionReport rep;
    rep.trials = trials;
    rep.estimate = double(hits) / double(trials);
    rep.bound = 25.0 * double(s) * double(s) / double(params.num_terms);
    return rep;
}

BucketReport bucket_probability(int n, Rng& rng, std::uint64_t trials,
                                std::optional<TalagrandParams> maybe) {
    const TalagrandParams params = maybe ? *maybe : TalagrandParams::defaults(n);
    std::uint64_t hits = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        const auto terms = sample_terms(n, params, rng);
        // fixed bucket id 0; term draws are exchangeable
        hits += classify_point(sample_uniform(rng, n), terms, n, params.band) == 0;
    }
    BucketReport rep;
    rep.trials = trials;
    rep.estimate = double(hits) / double(trials);
    rep.bound = 5.0 / double(params.num_terms);
    return rep;
}

}  // namespace ternary
