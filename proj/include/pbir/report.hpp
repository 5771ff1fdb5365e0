#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "pbir/gf_fixture.hpp"
#include "pbir/relevance.hpp"

namespace pbir {

enum class OutputFormat { tsv, json };

struct RunConfig {
    std::vector<ModelId> models;
    WeightScheme scheme = WeightScheme::wf1;
    ApdqkScheme apdqk = ApdqkScheme::apdqk1;
    std::optional<ModelId> normalize_to = ModelId::vsm;
    OutputFormat format = OutputFormat::tsv;
};

/// Throws invalid-config when normalize_to is not among the models.
void validate(const RunConfig& config);

/// One model's scores in a report. A degenerate row carries its raw scores
/// and a note, but no normalization or ranking.
struct ReportRow {
    RelevanceTable table;
    bool degenerate = false;
    std::string note;
    std::optional<std::vector<double>> reference;
    std::optional<double> reference_c;
    std::vector<double> deltas;  // normalized - reference, when a reference exists
};

/// Rows shown for comparison only, never computed.
struct StaticRow {
    std::string label;
    std::vector<double> values;
};

struct ComparisonReport {
    std::string title;
    gf::ScoreKind kind = gf::ScoreKind::rdq;
    WeightScheme scheme = WeightScheme::wf1;
    ApdqkScheme apdqk = ApdqkScheme::apdqk1;
    std::optional<ModelId> normalize_to;
    std::vector<std::string> targets;
    std::vector<ReportRow> rows;
    std::vector<StaticRow> static_rows;
};

/// RDQ over every document. Degenerate models are reported, not thrown.
ComparisonReport run_rdq(const CorpusIndex& index, const QueryStats& query, const RunConfig& config);

/// RDD over every document pair for VSM, TVS-INM and CFS-INM.
/// Throws insufficient-documents for a single-document index.
ComparisonReport run_rdd(const CorpusIndex& index, const RunConfig& config);

/// Pair label "d1~d2".
std::string pair_label(const std::string& a, const std::string& b);

void render_tsv(const ComparisonReport& report, std::ostream& out);
nlohmann::ordered_json to_json(const ComparisonReport& report);

/// Rescales each row so that `column` equals `reference_value`.
/// Throws degenerate-row when a row's designated cell is not positive.
std::vector<gf::LabeledRow> render_adjusted_comparison(std::span<const gf::LabeledRow> rows,
                                                       double reference_value,
                                                       std::optional<std::size_t> column = std::nullopt);

/// A reference cell further from the computed value than the table tolerance.
struct Breach {
    std::string table;
    std::string model;
    std::string target;
    double computed = 0.0;
    double reference = 0.0;
    double tolerance = 0.0;
};

struct OrderCheck {
    std::string table;
    std::string model;
    std::vector<std::string> expected;
    std::vector<std::string> actual;
    bool ok = false;
};

struct Reproduction {
    std::vector<ComparisonReport> tables;
    std::vector<Breach> breaches;
    std::vector<OrderCheck> orders;
    std::vector<std::string> problems;  // failures not tied to a single cell
    std::size_t cells_checked = 0;

    [[nodiscard]] bool ok() const;
};

/// Runs both probability schemes, all four weight schemes and every model on
/// the embedded worked example, comparing against the embedded reference
/// tables. A tolerance override replaces every per-table tolerance.
Reproduction reproduce_gf(std::optional<double> tolerance = std::nullopt);

void render_tsv(const Reproduction& repro, std::ostream& out);
nlohmann::ordered_json to_json(const Reproduction& repro);

}  // namespace pbir
