#pragma once

// Relevance of document to query (RDQ) and document to document (RDD).
//
// Term-vector-space models read P(k_i | d) = w_{d,i}^2 off the unit weight
// vectors and use Bayes' rule for P(q | k_i), giving
//
//     P(q and d) = P(q) P(d) sum_i w_{q,i}^2 w_{d,i}^2 / P(k_i)
//
// The concept-Fock-space variants multiply each summand by the probability
// that every other term is absent from both sides, prod_{j!=i} (1 - w_j^2).
// INM scores the joint P(q and d), BNM drops the P(q) factor and P&C drops
// P(d). All probabilistic scores are defined up to a constant which is fixed
// afterwards by pinning the top score to a reference model (normally VSM).

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pbir/corpus.hpp"
#include "pbir/weights.hpp"

namespace pbir {

/// APDQK1: tf based, P(d) ~ 1/|d|, P(k_i) ~ (N_i + 1)/(N + 1).
/// APDQK2: occupancy based, P(d) = |d|/t, P(k_i) = 1/t.
enum class ApdqkScheme { apdqk1, apdqk2 };

std::string_view to_string(ApdqkScheme scheme) noexcept;
int scheme_number(ApdqkScheme scheme) noexcept;
std::optional<ApdqkScheme> parse_apdqk_scheme(std::string_view text);

/// Absolute probabilities P(q), P(d_mu), P(k_i), each up to a constant.
struct AbsoluteProbs {
    double p_q = 0.0;
    std::vector<double> p_doc;
    std::vector<double> p_term;
};

AbsoluteProbs absolute_probs(ApdqkScheme scheme, const CorpusIndex& index, const QueryStats& query);

enum class ModelId { vsm, tvs_inm, tvs_bnm, tvs_pc, cfs_inm, cfs_bnm, cfs_pc, fuhr_pcs };

inline constexpr ModelId kAllModels[] = {ModelId::vsm,     ModelId::tvs_inm, ModelId::tvs_bnm,
                                         ModelId::tvs_pc,  ModelId::cfs_inm, ModelId::cfs_bnm,
                                         ModelId::cfs_pc,  ModelId::fuhr_pcs};

std::string_view to_string(ModelId model) noexcept;
std::optional<ModelId> parse_model_id(std::string_view text);
bool is_tvs(ModelId model) noexcept;
bool is_cfs(ModelId model) noexcept;

/// How the concept-space basis ket for term i is mapped onto terms.
/// with_negations: every other term must be absent (factor prod_{j!=i}(1 - w_j^2)).
/// single_term: other terms are ignored; every factor is 1 and CFS reduces to TVS.
enum class TermMap { with_negations, single_term };

/// sum_i a_i b_i.
double score_vsm(const WeightVector& a, const WeightVector& b);

/// Raw TVS score of document `doc` for the query; `model` must be a TVS model.
double score_tvs(ModelId model, const WeightVector& wq, const WeightVector& wd,
                 const AbsoluteProbs& probs, std::size_t doc);

/// Raw TVS-INM closeness of documents `doc_a` and `doc_b`. Symmetric.
double score_tvs_rdd(const WeightVector& wa, const WeightVector& wb, const AbsoluteProbs& probs,
                     std::size_t doc_a, std::size_t doc_b);

/// prod_{j != exclude} (1 - w_j^2).
double cfs_negation_factor(const WeightVector& wv, std::size_t exclude);

/// Raw CFS score of document `doc` for the query; `model` must be a CFS model.
double score_cfs(ModelId model, const WeightVector& wq, const WeightVector& wd,
                 const AbsoluteProbs& probs, std::size_t doc,
                 TermMap map = TermMap::with_negations);

/// Raw CFS-INM closeness of documents `doc_a` and `doc_b`. Symmetric.
double score_cfs_rdd(const WeightVector& wa, const WeightVector& wb, const AbsoluteProbs& probs,
                     std::size_t doc_a, std::size_t doc_b, TermMap map = TermMap::with_negations);

/// P(d) prod_i (w_i^2)^{n_{q,i}} (1 - w_i^2)^{1 - n_{q,i}}. Zero as soon as a
/// query term is missing from the document.
double score_fuhr(const BtonVector& query_bits, const WeightVector& wd, double p_doc);

struct Normalization {
    double c = 1.0;
    std::vector<double> normalized;
};

/// C = reference_max / max(raw); normalized = C * raw.
/// Throws degenerate-scores when max(raw) <= 0.
Normalization normalize_scores(std::span<const double> raw, double reference_max);

/// Target indices by descending score, ties broken by ascending target id.
std::vector<std::size_t> rank(std::span<const double> scores, std::span<const std::string> ids);

/// Scores of one model over a set of targets (documents, or document pairs).
struct RelevanceTable {
    ModelId model = ModelId::vsm;
    WeightScheme scheme = WeightScheme::wf1;
    std::optional<ApdqkScheme> apdqk;
    std::vector<std::string> targets;
    std::vector<double> raw;
    std::optional<double> c;  // unset when not normalized
    std::vector<double> normalized;
    std::vector<std::size_t> ranking;
};

/// Weights and probabilities for one (query, scheme, apdqk) combination over a corpus.
struct ScoringContext {
    const CorpusIndex* index = nullptr;
    WeightScheme scheme = WeightScheme::wf1;
    ApdqkScheme apdqk = ApdqkScheme::apdqk1;
    QueryStats query;
    BtonVector query_bits;
    WeightVector query_weights;
    std::vector<WeightVector> doc_weights;
    AbsoluteProbs probs;
};

ScoringContext make_context(const CorpusIndex& index, const QueryStats& query, WeightScheme scheme,
                            ApdqkScheme apdqk);

/// Document weights and probabilities only, for RDD runs without a query.
/// P(q) is left at zero.
ScoringContext make_rdd_context(const CorpusIndex& index, WeightScheme scheme, ApdqkScheme apdqk);

/// Raw RDQ scores of every document under `model`.
std::vector<double> rdq_raw(ModelId model, const ScoringContext& ctx);

/// Models that define a document-document closeness.
inline constexpr ModelId kRddModels[] = {ModelId::vsm, ModelId::tvs_inm, ModelId::cfs_inm};

/// Document pairs (a, b), a < b, in row-major upper-triangle order.
std::vector<std::pair<std::size_t, std::size_t>> document_pairs(std::size_t n_docs);

/// Raw RDD scores over document_pairs() under `model` (VSM, TVS-INM or CFS-INM).
std::vector<double> rdd_raw(ModelId model, const ScoringContext& ctx);

/// Builds a table from raw scores. With a reference maximum the scores are
/// normalized first (may throw degenerate-scores); otherwise normalized = raw.
RelevanceTable make_table(ModelId model, const ScoringContext& ctx, std::vector<std::string> targets,
                          std::vector<double> raw, std::optional<double> reference_max);

}  // namespace pbir
