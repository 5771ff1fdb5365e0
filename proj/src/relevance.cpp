#include "pbir/relevance.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "pbir/error.hpp"

namespace pbir {

namespace {

void require_same_length(const WeightVector& a, const WeightVector& b) {
    if (a.w.size() != b.w.size())
        throw Error(ErrorKind::dimension, "weight vectors of '" + a.owner + "' and '" + b.owner +
                                              "' differ in length");
}

void require_term_probs(const WeightVector& a, const AbsoluteProbs& probs) {
    if (probs.p_term.size() != a.w.size())
        throw Error(ErrorKind::dimension, "term probabilities do not match the lexicon");
}

// sum_i a_i^2 b_i^2 / P(k_i)
double tvs_sum(const WeightVector& a, const WeightVector& b, const AbsoluteProbs& probs) {
    require_same_length(a, b);
    require_term_probs(a, probs);
    double sum = 0.0;
    for (std::size_t i = 0; i < a.w.size(); ++i) {
        const double a2 = a.w[i] * a.w[i];
        const double b2 = b.w[i] * b.w[i];
        sum += a2 * b2 / probs.p_term[i];
    }
    return sum;
}

// As tvs_sum, each summand times prod_{j!=i} (1 - a_j^2)(1 - b_j^2). The
// leave-one-out product comes from prefix and suffix products, so a zero
// factor never needs dividing out.
double cfs_sum(const WeightVector& a, const WeightVector& b, const AbsoluteProbs& probs, TermMap map) {
    require_same_length(a, b);
    require_term_probs(a, probs);
    const std::size_t t = a.w.size();

    std::vector<double> suffix(t + 1, 1.0);
    if (map == TermMap::with_negations) {
        for (std::size_t j = t; j-- > 0;)
            suffix[j] = suffix[j + 1] * ((1.0 - a.w[j] * a.w[j]) * (1.0 - b.w[j] * b.w[j]));
    }

    double sum = 0.0;
    double prefix = 1.0;
    for (std::size_t i = 0; i < t; ++i) {
        const double a2 = a.w[i] * a.w[i];
        const double b2 = b.w[i] * b.w[i];
        const double negation = map == TermMap::with_negations ? prefix * suffix[i + 1] : 1.0;
        sum += a2 * b2 / probs.p_term[i] * negation;
        if (map == TermMap::with_negations) prefix *= (1.0 - a2) * (1.0 - b2);
    }
    return sum;
}

// INM: P(q) P(d) S, BNM: P(d) S, P&C: P(q) S.
double apply_prefactor(ModelId model, double sum, const AbsoluteProbs& probs, std::size_t doc) {
    const double p_doc = probs.p_doc.at(doc);
    switch (model) {
        case ModelId::tvs_inm:
        case ModelId::cfs_inm: return probs.p_q * p_doc * sum;
        case ModelId::tvs_bnm:
        case ModelId::cfs_bnm: return p_doc * sum;
        case ModelId::tvs_pc:
        case ModelId::cfs_pc: return probs.p_q * sum;
        default: break;
    }
    throw Error(ErrorKind::invalid_config, std::string(to_string(model)) + " has no INM/BNM/P&C form");
}

}  // namespace

std::string_view to_string(ApdqkScheme scheme) noexcept {
    return scheme == ApdqkScheme::apdqk1 ? "APDQK1" : "APDQK2";
}

int scheme_number(ApdqkScheme scheme) noexcept { return scheme == ApdqkScheme::apdqk1 ? 1 : 2; }

std::optional<ApdqkScheme> parse_apdqk_scheme(std::string_view text) {
    if (text == "1" || text == "APDQK1" || text == "apdqk1") return ApdqkScheme::apdqk1;
    if (text == "2" || text == "APDQK2" || text == "apdqk2") return ApdqkScheme::apdqk2;
    return std::nullopt;
}

AbsoluteProbs absolute_probs(ApdqkScheme scheme, const CorpusIndex& index, const QueryStats& query) {
    const std::size_t t = index.n_terms();
    const std::size_t n = index.n_docs();
    if (query.tf_q.size() != t) throw Error(ErrorKind::dimension, "query vector does not match the lexicon");

    AbsoluteProbs probs;
    probs.p_doc.resize(n);
    probs.p_term.resize(t);
    if (scheme == ApdqkScheme::apdqk1) {
        const int q_len = std::accumulate(query.tf_q.begin(), query.tf_q.end(), 0);
        if (q_len <= 0) throw Error(ErrorKind::oov_query, "query has no in-vocabulary terms");
        probs.p_q = 1.0 / q_len;
        for (std::size_t mu = 0; mu < n; ++mu) {
            const auto row = index.tf_row(mu);
            probs.p_doc[mu] = 1.0 / std::accumulate(row.begin(), row.end(), 0);
        }
        for (std::size_t i = 0; i < t; ++i)
            probs.p_term[i] = static_cast<double>(index.doc_freq()[i] + 1) / static_cast<double>(n + 1);
    } else {
        const double td = static_cast<double>(t);
        const int q_occ = bton(query.tf_q).count();
        if (q_occ <= 0) throw Error(ErrorKind::oov_query, "query has no in-vocabulary terms");
        probs.p_q = q_occ / td;
        for (std::size_t mu = 0; mu < n; ++mu) probs.p_doc[mu] = bton(index.tf_row(mu)).count() / td;
        std::fill(probs.p_term.begin(), probs.p_term.end(), 1.0 / td);
    }
    return probs;
}

std::string_view to_string(ModelId model) noexcept {
    switch (model) {
        case ModelId::vsm: return "VSM";
        case ModelId::tvs_inm: return "TVS-INM";
        case ModelId::tvs_bnm: return "TVS-BNM";
        case ModelId::tvs_pc: return "TVS-P&C";
        case ModelId::cfs_inm: return "CFS-INM";
        case ModelId::cfs_bnm: return "CFS-BNM";
        case ModelId::cfs_pc: return "CFS-P&C";
        case ModelId::fuhr_pcs: return "FUHR-PCS";
    }
    return "?";
}

std::optional<ModelId> parse_model_id(std::string_view text) {
    std::string key;
    for (char ch : text) {
        if (ch == '-' || ch == '_' || ch == '&') continue;
        key.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
    }
    if (key == "vsm") return ModelId::vsm;
    if (key == "tvsinm") return ModelId::tvs_inm;
    if (key == "tvsbnm") return ModelId::tvs_bnm;
    if (key == "tvspc") return ModelId::tvs_pc;
    if (key == "cfsinm") return ModelId::cfs_inm;
    if (key == "cfsbnm") return ModelId::cfs_bnm;
    if (key == "cfspc") return ModelId::cfs_pc;
    if (key == "fuhr" || key == "fuhrpcs") return ModelId::fuhr_pcs;
    return std::nullopt;
}

bool is_tvs(ModelId model) noexcept {
    return model == ModelId::tvs_inm || model == ModelId::tvs_bnm || model == ModelId::tvs_pc;
}

bool is_cfs(ModelId model) noexcept {
    return model == ModelId::cfs_inm || model == ModelId::cfs_bnm || model == ModelId::cfs_pc;
}

double score_vsm(const WeightVector& a, const WeightVector& b) {
    require_same_length(a, b);
    double sum = 0.0;
    for (std::size_t i = 0; i < a.w.size(); ++i) sum += a.w[i] * b.w[i];
    return sum;
}

double score_tvs(ModelId model, const WeightVector& wq, const WeightVector& wd,
                 const AbsoluteProbs& probs, std::size_t doc) {
    if (!is_tvs(model)) throw Error(ErrorKind::invalid_config, std::string(to_string(model)) + " is not a TVS model");
    return apply_prefactor(model, tvs_sum(wq, wd, probs), probs, doc);
}

double score_tvs_rdd(const WeightVector& wa, const WeightVector& wb, const AbsoluteProbs& probs,
                     std::size_t doc_a, std::size_t doc_b) {
    return probs.p_doc.at(doc_a) * probs.p_doc.at(doc_b) * tvs_sum(wa, wb, probs);
}

double cfs_negation_factor(const WeightVector& wv, std::size_t exclude) {
    if (exclude >= wv.w.size()) throw Error(ErrorKind::dimension, "term index out of range");
    double product = 1.0;
    for (std::size_t j = 0; j < wv.w.size(); ++j)
        if (j != exclude) product *= 1.0 - wv.w[j] * wv.w[j];
    return product;
}

double score_cfs(ModelId model, const WeightVector& wq, const WeightVector& wd,
                 const AbsoluteProbs& probs, std::size_t doc, TermMap map) {
    if (!is_cfs(model)) throw Error(ErrorKind::invalid_config, std::string(to_string(model)) + " is not a CFS model");
    // Same prefactor as the TVS twin so the single-term map reproduces it exactly.
    const ModelId tvs_twin = model == ModelId::cfs_inm   ? ModelId::tvs_inm
                             : model == ModelId::cfs_bnm ? ModelId::tvs_bnm
                                                         : ModelId::tvs_pc;
    return apply_prefactor(tvs_twin, cfs_sum(wq, wd, probs, map), probs, doc);
}

double score_cfs_rdd(const WeightVector& wa, const WeightVector& wb, const AbsoluteProbs& probs,
                     std::size_t doc_a, std::size_t doc_b, TermMap map) {
    return probs.p_doc.at(doc_a) * probs.p_doc.at(doc_b) * cfs_sum(wa, wb, probs, map);
}

double score_fuhr(const BtonVector& query_bits, const WeightVector& wd, double p_doc) {
    if (query_bits.bits.size() != wd.w.size())
        throw Error(ErrorKind::dimension, "query occupancy does not match the lexicon");
    double product = p_doc;
    for (std::size_t i = 0; i < wd.w.size(); ++i) {
        const double p = wd.w[i] * wd.w[i];
        product *= query_bits.bits[i] ? p : 1.0 - p;
    }
    return product;
}

Normalization normalize_scores(std::span<const double> raw, double reference_max) {
    if (raw.empty()) throw Error(ErrorKind::degenerate_scores, "no scores");
    const double top = *std::max_element(raw.begin(), raw.end());
    if (!(top > 0.0)) throw Error(ErrorKind::degenerate_scores, "maximum score is not positive");
    if (!(reference_max > 0.0)) throw Error(ErrorKind::degenerate_scores, "reference maximum is not positive");

    Normalization out;
    out.c = reference_max / top;
    out.normalized.reserve(raw.size());
    for (double r : raw) out.normalized.push_back(r == top ? reference_max : out.c * r);
    return out;
}

std::vector<std::size_t> rank(std::span<const double> scores, std::span<const std::string> ids) {
    if (scores.size() != ids.size()) throw Error(ErrorKind::dimension, "one id per score required");
    std::vector<std::size_t> order(scores.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (scores[a] != scores[b]) return scores[a] > scores[b];
        return ids[a] < ids[b];
    });
    return order;
}

ScoringContext make_rdd_context(const CorpusIndex& index, WeightScheme scheme, ApdqkScheme apdqk) {
    ScoringContext ctx;
    ctx.index = &index;
    ctx.scheme = scheme;
    ctx.apdqk = apdqk;
    for (std::size_t mu = 0; mu < index.n_docs(); ++mu)
        ctx.doc_weights.push_back(
            compute_weights(scheme, index.tf_row(mu), index.idf(), WeightRole::document, index.doc_ids()[mu]));

    // Document and term probabilities do not depend on the query.
    QueryStats placeholder{std::vector<int>(index.n_terms(), 0), {}};
    placeholder.tf_q[0] = 1;
    ctx.probs = absolute_probs(apdqk, index, placeholder);
    ctx.probs.p_q = 0.0;
    return ctx;
}

ScoringContext make_context(const CorpusIndex& index, const QueryStats& query, WeightScheme scheme,
                            ApdqkScheme apdqk) {
    ScoringContext ctx = make_rdd_context(index, scheme, apdqk);
    ctx.query = query;
    ctx.query_bits = bton(query.tf_q);
    ctx.query_weights = compute_weights(scheme, query.tf_q, index.idf(), WeightRole::query,
                                        std::string(kQueryOwner));
    ctx.probs = absolute_probs(apdqk, index, query);
    return ctx;
}

std::vector<double> rdq_raw(ModelId model, const ScoringContext& ctx) {
    std::vector<double> out;
    out.reserve(ctx.doc_weights.size());
    for (std::size_t mu = 0; mu < ctx.doc_weights.size(); ++mu) {
        const auto& wd = ctx.doc_weights[mu];
        if (model == ModelId::vsm)
            out.push_back(score_vsm(ctx.query_weights, wd));
        else if (model == ModelId::fuhr_pcs)
            out.push_back(score_fuhr(ctx.query_bits, wd, ctx.probs.p_doc[mu]));
        else if (is_tvs(model))
            out.push_back(score_tvs(model, ctx.query_weights, wd, ctx.probs, mu));
        else
            out.push_back(score_cfs(model, ctx.query_weights, wd, ctx.probs, mu));
    }
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> document_pairs(std::size_t n_docs) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t a = 0; a < n_docs; ++a)
        for (std::size_t b = a + 1; b < n_docs; ++b) pairs.emplace_back(a, b);
    return pairs;
}

std::vector<double> rdd_raw(ModelId model, const ScoringContext& ctx) {
    std::vector<double> out;
    for (auto [a, b] : document_pairs(ctx.doc_weights.size())) {
        const auto& wa = ctx.doc_weights[a];
        const auto& wb = ctx.doc_weights[b];
        switch (model) {
            case ModelId::vsm: out.push_back(score_vsm(wa, wb)); break;
            case ModelId::tvs_inm: out.push_back(score_tvs_rdd(wa, wb, ctx.probs, a, b)); break;
            case ModelId::cfs_inm: out.push_back(score_cfs_rdd(wa, wb, ctx.probs, a, b)); break;
            default:
                throw Error(ErrorKind::invalid_config,
                            std::string(to_string(model)) + " does not define document closeness");
        }
    }
    return out;
}

RelevanceTable make_table(ModelId model, const ScoringContext& ctx, std::vector<std::string> targets,
                          std::vector<double> raw, std::optional<double> reference_max) {
    RelevanceTable table;
    table.model = model;
    table.scheme = ctx.scheme;
    if (model != ModelId::vsm) table.apdqk = ctx.apdqk;
    table.targets = std::move(targets);
    table.raw = std::move(raw);
    if (reference_max) {
        auto norm = normalize_scores(table.raw, *reference_max);
        table.c = norm.c;
        table.normalized = std::move(norm.normalized);
    } else {
        table.normalized = table.raw;
    }
    table.ranking = rank(table.normalized, table.targets);
    return table;
}

}  // namespace pbir
