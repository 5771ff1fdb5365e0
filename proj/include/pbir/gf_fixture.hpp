#pragma once

// The Grossman-Frieder worked example: three short documents, one query and
// the published reference values derived from them. Reference values are kept
// exactly as printed (rounded, occasionally inconsistent); comparisons are
// done with a tolerance.

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pbir/corpus.hpp"
#include "pbir/relevance.hpp"
#include "pbir/weights.hpp"

namespace pbir::gf {

inline constexpr int kFixtureVersion = 1;
inline constexpr std::size_t kTerms = 11;
inline constexpr std::size_t kDocs = 3;

inline constexpr std::string_view kQuery = "gold silver truck";

std::vector<Document> documents();

/// Statistics of the indexed corpus, in alphabetical term order.
struct IndexTable {
    std::array<std::string_view, kTerms> lexicon;
    std::array<std::array<int, kTerms>, kDocs> tf;
    std::array<int, kTerms> tf_q;
    std::array<int, kTerms> doc_freq;
    std::array<double, kTerms> idf;  // printed to 3 decimals
};

const IndexTable& index_table();

/// Printed weights (3 decimals) for one weight scheme.
struct WeightTable {
    WeightScheme scheme;
    std::array<std::array<double, kTerms>, kDocs> doc;
    std::array<double, kTerms> query;
};

std::span<const WeightTable> weight_tables();

enum class ScoreKind { rdq, rdd };

struct ReferenceRow {
    std::optional<ModelId> model;  // unset for rows whose formula is not implemented here
    std::string_view label;
    std::optional<double> printed_c;
    std::vector<double> values;
};

/// One published score table: three document columns (RDQ) or three
/// document pairs d1-d2, d1-d3, d2-d3 (RDD).
struct ReferenceTable {
    std::string_view id;
    ScoreKind kind;
    ApdqkScheme apdqk;
    WeightScheme scheme;
    double tolerance;
    std::vector<ReferenceRow> rows;
};

std::span<const ReferenceTable> reference_tables();

/// Label used for the metric-tensor rows that are displayed but never computed.
inline constexpr std::string_view kExternalLabel = "SVDM (external)";

/// Scores published for other retrieval models on the same query, and the same
/// scores rescaled so the middle column equals the VSM top score.
struct LabeledRow {
    std::string label;
    std::vector<double> values;
};

std::span<const LabeledRow> quoted_scores();
std::span<const LabeledRow> quoted_scores_adjusted();
inline constexpr double kAdjustedReferenceValue = 0.8249;

/// Expected document ranking (document indices) per weight scheme.
std::array<std::size_t, kDocs> expected_rdq_order(WeightScheme scheme);
/// Expected order of document pairs (indices into document_pairs(3)).
inline constexpr std::array<std::size_t, 3> kExpectedRddOrder = {1, 2, 0};

}  // namespace pbir::gf
