#pragma once

// Randomized property checks shared by property_test and the acceptance runner.
// Each returns the number of instances tried, how many failed and the largest
// deviation seen.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "pbir/error.hpp"
#include "pbir/probability.hpp"
#include "pbir/relevance.hpp"
#include "pbir/weights.hpp"

namespace props {

struct Outcome {
    std::size_t trials = 0;
    std::size_t failures = 0;
    double worst = 0.0;
    std::string first_failure;

    [[nodiscard]] bool ok() const { return trials > 0 && failures == 0; }

    void record(bool pass, double deviation, const std::string& what) {
        ++trials;
        worst = std::max(worst, deviation);
        if (!pass) {
            if (failures == 0) first_failure = what;
            ++failures;
        }
    }
};

inline pbir::ProbabilitySpace random_space(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<std::string> ids;
    std::vector<double> m(n);
    double total = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        ids.push_back("w" + std::to_string(k));
        // A few outcomes get no mass at all.
        m[k] = u(rng) < 0.15 ? 0.0 : u(rng);
        total += m[k];
    }
    if (total == 0.0) {
        m[0] = 1.0;
        total = 1.0;
    }
    for (auto& x : m) x /= total;
    return pbir::ProbabilitySpace(std::move(ids), std::move(m));
}

inline pbir::Event random_event(std::mt19937_64& rng, const pbir::ProbabilitySpace& s, double p = 0.5) {
    std::bernoulli_distribution pick(p);
    pbir::Event e;
    for (const auto& id : s.ids())
        if (pick(rng)) e.members.insert(id);
    return e;
}

inline pbir::Partition random_partition(std::mt19937_64& rng, const pbir::ProbabilitySpace& s) {
    std::uniform_int_distribution<std::size_t> nb(1, s.size());
    const std::size_t blocks = nb(rng);
    std::uniform_int_distribution<std::size_t> which(0, blocks - 1);
    std::vector<pbir::Event> out(blocks);
    for (const auto& id : s.ids()) out[which(rng)].members.insert(id);
    std::erase_if(out, [](const pbir::Event& e) { return e.members.empty(); });
    return pbir::Partition{std::move(out)};
}

/// <A|B> = sum_k <A|B_k><B_k|B> over random spaces of up to 12 outcomes,
/// together with Bayes inversion, bracket bounds and additivity.
inline Outcome unit_operator_identity(std::uint64_t seed, std::size_t spaces = 1000, double tol = 1e-12) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> size(1, 12);
    Outcome r;
    std::size_t made = 0;
    while (made < spaces) {
        const auto s = random_space(rng, size(rng));
        const auto a = random_event(rng, s);
        const auto b = random_event(rng, s, 0.6);
        if (!(pbir::probability(b, s) > 0.0)) continue;
        ++made;
        const auto part = random_partition(rng, s);
        const double direct = pbir::conditional(a, b, s);
        const double expanded = pbir::expand_conditional(a, part, b, s);
        const double dev = std::abs(direct - expanded);
        r.record(dev <= tol, dev, "unit operator, space " + std::to_string(made));

        if (pbir::probability(a, s) > 0.0) {
            const double bayes = pbir::bayes_invert(a, b, s);
            const double d2 = std::abs(bayes - direct);
            r.record(d2 <= tol, d2, "bayes, space " + std::to_string(made));
        }
        const bool bounded = direct >= 0.0 && direct <= 1.0;
        r.record(bounded, 0.0, "bracket bounds, space " + std::to_string(made));

        const double lhs = pbir::probability(pbir::event_union(a, b), s) +
                           pbir::probability(pbir::event_intersection(a, b), s);
        const double rhs = pbir::probability(a, s) + pbir::probability(b, s);
        const double d3 = std::abs(lhs - rhs);
        r.record(d3 <= tol, d3, "additivity, space " + std::to_string(made));
    }
    return r;
}

inline pbir::WeightVector as_weights(std::vector<double> w, std::string owner = "x") {
    return pbir::WeightVector{std::move(owner), pbir::WeightScheme::wf1, std::move(w)};
}

inline pbir::AbsoluteProbs random_probs(std::mt19937_64& rng, std::size_t t, std::size_t docs) {
    std::uniform_real_distribution<double> u(0.05, 1.0);
    pbir::AbsoluteProbs p;
    p.p_q = u(rng);
    for (std::size_t k = 0; k < docs; ++k) p.p_doc.push_back(u(rng));
    for (std::size_t i = 0; i < t; ++i) p.p_term.push_back(u(rng));
    return p;
}

/// Closeness is the same whichever document comes first. Exact.
inline Outcome rdd_symmetry(std::uint64_t seed, std::size_t pairs = 200) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> dim(1, 12);
    Outcome r;
    for (std::size_t k = 0; k < pairs; ++k) {
        const auto t = dim(rng);
        const auto a = as_weights(oracle::random_unit_vector(rng, t));
        const auto b = as_weights(oracle::random_unit_vector(rng, t));
        const auto p = random_probs(rng, t, 2);
        const double tab = pbir::score_tvs_rdd(a, b, p, 0, 1), tba = pbir::score_tvs_rdd(b, a, p, 1, 0);
        const double cab = pbir::score_cfs_rdd(a, b, p, 0, 1), cba = pbir::score_cfs_rdd(b, a, p, 1, 0);
        r.record(tab == tba, std::abs(tab - tba), "tvs pair " + std::to_string(k));
        r.record(cab == cba, std::abs(cab - cba), "cfs pair " + std::to_string(k));
    }
    return r;
}

/// The library's linear-time CFS sum against the literal double loop, t <= 6.
inline Outcome cfs_oracle(std::uint64_t seed, std::size_t instances = 500, double tol = 1e-12) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> dim(1, 6);
    Outcome r;
    for (std::size_t k = 0; k < instances; ++k) {
        const auto t = dim(rng);
        const auto q = oracle::random_unit_vector(rng, t);
        const auto d = oracle::random_unit_vector(rng, t);
        const auto p = random_probs(rng, t, 1);
        const double want = oracle::cfs_sum(q, d, p.p_term);
        // INM prefactor is P(q) P(d); strip it to compare the sums.
        const double got = pbir::score_cfs(pbir::ModelId::cfs_inm, as_weights(q), as_weights(d), p, 0) /
                           (p.p_q * p.p_doc[0]);
        const double dev = std::abs(got - want);
        r.record(dev <= tol, dev, "cfs instance " + std::to_string(k));
    }
    return r;
}

inline std::vector<std::size_t> rank_of(const std::vector<double>& scores) {
    std::vector<std::string> ids;
    for (std::size_t k = 0; k < scores.size(); ++k) ids.push_back("d" + std::to_string(100 + k));
    return pbir::rank(scores, ids);
}

inline std::vector<double> rdq_scores(pbir::ModelId m, const pbir::WeightVector& q,
                                      const std::vector<pbir::WeightVector>& docs, const pbir::AbsoluteProbs& p) {
    std::vector<double> out;
    for (std::size_t k = 0; k < docs.size(); ++k)
        out.push_back(pbir::is_tvs(m) ? pbir::score_tvs(m, q, docs[k], p, k) : pbir::score_cfs(m, q, docs[k], p, k));
    return out;
}

/// Rankings do not move when P(q), P(d) or P(k) are multiplied by a positive
/// constant. Also INM and BNM rank identically for a fixed query.
inline Outcome scaling_invariance(std::uint64_t seed, std::size_t instances = 200) {
    using pbir::ModelId;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> dim(2, 10), ndocs(2, 8);
    std::uniform_real_distribution<double> scale(0.01, 100.0);
    Outcome r;
    const ModelId models[] = {ModelId::tvs_inm, ModelId::tvs_bnm, ModelId::tvs_pc,
                              ModelId::cfs_inm, ModelId::cfs_bnm, ModelId::cfs_pc};
    for (std::size_t k = 0; k < instances; ++k) {
        const auto t = dim(rng);
        const auto n = ndocs(rng);
        const auto q = as_weights(oracle::random_unit_vector(rng, t, 0.2));
        std::vector<pbir::WeightVector> docs;
        for (std::size_t d = 0; d < n; ++d) docs.push_back(as_weights(oracle::random_unit_vector(rng, t, 0.2)));
        const auto p = random_probs(rng, t, n);
        auto scaled = p;
        scaled.p_q *= scale(rng);
        const double sd = scale(rng), st = scale(rng);
        for (auto& x : scaled.p_doc) x *= sd;
        for (auto& x : scaled.p_term) x *= st;
        for (auto m : models) {
            const bool same = rank_of(rdq_scores(m, q, docs, p)) == rank_of(rdq_scores(m, q, docs, scaled));
            r.record(same, 0.0, std::string(pbir::to_string(m)) + " instance " + std::to_string(k));
        }
        r.record(rank_of(rdq_scores(ModelId::tvs_inm, q, docs, p)) == rank_of(rdq_scores(ModelId::tvs_bnm, q, docs, p)),
                 0.0, "tvs inm/bnm instance " + std::to_string(k));
        r.record(rank_of(rdq_scores(ModelId::cfs_inm, q, docs, p)) == rank_of(rdq_scores(ModelId::cfs_bnm, q, docs, p)),
                 0.0, "cfs inm/bnm instance " + std::to_string(k));
    }
    return r;
}

/// CFS collapses to TVS when every negation factor is one.
inline Outcome cfs_reduces_to_tvs(std::uint64_t seed, std::size_t instances = 500, double tol = 1e-12) {
    using pbir::ModelId;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> dim(1, 12);
    Outcome r;
    const std::pair<ModelId, ModelId> twins[] = {
        {ModelId::cfs_inm, ModelId::tvs_inm}, {ModelId::cfs_bnm, ModelId::tvs_bnm}, {ModelId::cfs_pc, ModelId::tvs_pc}};
    for (std::size_t k = 0; k < instances; ++k) {
        const auto t = dim(rng);
        const auto q = as_weights(oracle::random_unit_vector(rng, t));
        const auto d = as_weights(oracle::random_unit_vector(rng, t));
        const auto p = random_probs(rng, t, 2);
        for (auto [cfs, tvs] : twins) {
            const double c = pbir::score_cfs(cfs, q, d, p, 0, pbir::TermMap::single_term);
            const double v = pbir::score_tvs(tvs, q, d, p, 0);
            const double dev = std::abs(c - v);
            r.record(dev <= tol, dev, std::string(pbir::to_string(cfs)) + " instance " + std::to_string(k));
        }
        const double c = pbir::score_cfs_rdd(q, d, p, 0, 1, pbir::TermMap::single_term);
        const double v = pbir::score_tvs_rdd(q, d, p, 0, 1);
        r.record(std::abs(c - v) <= tol, std::abs(c - v), "rdd instance " + std::to_string(k));
    }
    return r;
}

/// Every weight vector has unit norm and its squares sum to one, for every
/// scheme and role, on random term-frequency matrices.
inline Outcome weight_normalization(std::uint64_t seed, std::size_t matrices = 200, double tol = 1e-9) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> dim(1, 15), ndocs(1, 10);
    std::uniform_int_distribution<int> freq(0, 6);
    Outcome r;
    for (std::size_t k = 0; k < matrices; ++k) {
        const auto t = dim(rng);
        const auto n = ndocs(rng);
        std::vector<std::vector<int>> tf(n, std::vector<int>(t));
        for (auto& row : tf) {
            for (auto& v : row) v = freq(rng);
            if (std::all_of(row.begin(), row.end(), [](int v) { return v == 0; })) row[0] = 1;
        }
        std::vector<double> idf(t);
        for (std::size_t i = 0; i < t; ++i) {
            int df = 0;
            for (const auto& row : tf) df += row[i] > 0;
            idf[i] = df ? std::log10(static_cast<double>(n) / df) : 0.0;
        }
        for (auto scheme : pbir::kAllWeightSchemes)
            for (auto role : {pbir::WeightRole::document, pbir::WeightRole::query})
                for (const auto& row : tf) {
                    pbir::WeightVector w;
                    try {
                        w = pbir::compute_weights(scheme, row, idf, role, "r");
                    } catch (const pbir::Error& e) {
                        // Only legitimate when every raw weight vanishes.
                        r.record(e.kind() == pbir::ErrorKind::degenerate_weights, 0.0, "unexpected error");
                        continue;
                    }
                    double norm2 = 0.0;
                    for (double x : w.w) norm2 += x * x;
                    const auto induced = pbir::induced_term_prob(w);
                    double mass = 0.0;
                    for (double x : induced) mass += x;
                    const double dev = std::max(std::abs(norm2 - 1.0), std::abs(mass - 1.0));
                    r.record(dev <= tol, dev,
                             std::string(pbir::to_string(scheme)) + " matrix " + std::to_string(k));
                }
    }
    return r;
}

}  // namespace props
