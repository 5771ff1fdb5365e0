#include "pbir/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "pbir/error.hpp"

namespace pbir {

namespace {

constexpr double kAdjustedTolerance = 0.001;

std::string fixed4(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

std::string general(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string ranking_text(const RelevanceTable& t) {
    std::string s;
    for (std::size_t k = 0; k < t.ranking.size(); ++k) {
        if (k) s += " > ";
        s += t.targets[t.ranking[k]];
    }
    return s;
}

std::vector<std::string> ranked_targets(const RelevanceTable& t) {
    std::vector<std::string> out;
    for (auto k : t.ranking) out.push_back(t.targets[k]);
    return out;
}

std::string degenerate_note(ModelId model) {
    if (model == ModelId::fuhr_pcs) return "degenerate: every document misses a query term";
    return "degenerate: no positive score";
}

ReportRow make_row(ModelId model, const ScoringContext& ctx, const std::vector<std::string>& targets,
                   std::vector<double> raw, std::optional<double> reference_max) {
    ReportRow row;
    const bool positive = !raw.empty() && *std::max_element(raw.begin(), raw.end()) > 0.0;
    if (!positive) {
        row.degenerate = true;
        row.note = degenerate_note(model);
        row.table.model = model;
        row.table.scheme = ctx.scheme;
        if (model != ModelId::vsm) row.table.apdqk = ctx.apdqk;
        row.table.targets = targets;
        row.table.raw = std::move(raw);
        return row;
    }
    row.table = make_table(model, ctx, targets, std::move(raw), reference_max);
    return row;
}

std::optional<double> reference_max_of(ModelId reference, const std::vector<double>& raw) {
    const double top = raw.empty() ? 0.0 : *std::max_element(raw.begin(), raw.end());
    if (!(top > 0.0))
        throw Error(ErrorKind::degenerate_scores,
                    "reference model " + std::string(to_string(reference)) + " has no positive score");
    return top;
}

nlohmann::ordered_json row_json(const ReportRow& row) {
    const auto& t = row.table;
    nlohmann::ordered_json j;
    j["model"] = to_string(t.model);
    j["wf"] = scheme_number(t.scheme);
    j["apdqk"] = t.apdqk ? nlohmann::ordered_json(scheme_number(*t.apdqk)) : nlohmann::ordered_json(nullptr);
    j["targets"] = t.targets;
    j["raw"] = t.raw;
    j["C"] = t.c ? nlohmann::ordered_json(*t.c) : nlohmann::ordered_json(nullptr);
    j["status"] = row.degenerate ? "degenerate" : "ok";
    if (row.degenerate) {
        j["note"] = row.note;
    } else {
        j["normalized"] = t.normalized;
        j["ranking"] = ranked_targets(t);
    }
    if (row.reference) {
        j["reference"] = *row.reference;
        j["reference_C"] = row.reference_c ? nlohmann::ordered_json(*row.reference_c) : nlohmann::ordered_json(nullptr);
        j["deltas"] = row.deltas;
    }
    return j;
}

const gf::ReferenceTable* find_reference(gf::ScoreKind kind, ApdqkScheme apdqk, WeightScheme scheme) {
    for (const auto& t : gf::reference_tables())
        if (t.kind == kind && t.apdqk == apdqk && t.scheme == scheme) return &t;
    return nullptr;
}

// Attaches reference values and deltas; records cells outside tolerance.
void compare(ComparisonReport& report, const gf::ReferenceTable& ref, double tolerance, Reproduction& repro) {
    for (const auto& ref_row : ref.rows) {
        if (!ref_row.model) {
            report.static_rows.push_back({std::string(ref_row.label), ref_row.values});
            continue;
        }
        auto it = std::find_if(report.rows.begin(), report.rows.end(),
                               [&](const ReportRow& r) { return r.table.model == *ref_row.model; });
        if (it == report.rows.end() || it->degenerate) {
            repro.problems.push_back(std::string(ref.id) + ": no computed row for " + std::string(ref_row.label));
            continue;
        }
        it->reference = ref_row.values;
        it->reference_c = ref_row.printed_c;
        it->deltas.clear();
        for (std::size_t j = 0; j < ref_row.values.size(); ++j) {
            const double computed = it->table.normalized.at(j);
            const double delta = computed - ref_row.values[j];
            it->deltas.push_back(delta);
            ++repro.cells_checked;
            if (!(std::abs(delta) <= tolerance))
                repro.breaches.push_back({std::string(ref.id), std::string(ref_row.label),
                                          report.targets[j], computed, ref_row.values[j], tolerance});
        }
    }
}

void check_order(const ComparisonReport& report, std::span<const std::size_t> expected, Reproduction& repro) {
    std::vector<std::string> want;
    for (auto k : expected) want.push_back(report.targets[k]);
    for (const auto& row : report.rows) {
        if (row.degenerate) continue;
        auto got = ranked_targets(row.table);
        repro.orders.push_back({report.title, std::string(to_string(row.table.model)), want, got, got == want});
    }
}

}  // namespace

void validate(const RunConfig& config) {
    if (config.models.empty()) throw Error(ErrorKind::invalid_config, "no models selected");
    if (config.normalize_to &&
        std::find(config.models.begin(), config.models.end(), *config.normalize_to) == config.models.end())
        throw Error(ErrorKind::invalid_config, "normalize-to model " + std::string(to_string(*config.normalize_to)) +
                                                   " is not among the selected models");
}

ComparisonReport run_rdq(const CorpusIndex& index, const QueryStats& query, const RunConfig& config) {
    validate(config);
    const auto ctx = make_context(index, query, config.scheme, config.apdqk);

    ComparisonReport report;
    report.title = "RDQ " + std::string(to_string(config.apdqk)) + " " + std::string(to_string(config.scheme));
    report.kind = gf::ScoreKind::rdq;
    report.scheme = config.scheme;
    report.apdqk = config.apdqk;
    report.normalize_to = config.normalize_to;
    report.targets = index.doc_ids();

    std::optional<double> ref_max;
    if (config.normalize_to) ref_max = reference_max_of(*config.normalize_to, rdq_raw(*config.normalize_to, ctx));
    for (ModelId model : config.models)
        report.rows.push_back(make_row(model, ctx, report.targets, rdq_raw(model, ctx), ref_max));
    return report;
}

std::string pair_label(const std::string& a, const std::string& b) { return a + "~" + b; }

ComparisonReport run_rdd(const CorpusIndex& index, const RunConfig& config) {
    if (index.n_docs() < 2)
        throw Error(ErrorKind::insufficient_documents, "closeness needs at least two documents");
    const auto ctx = make_rdd_context(index, config.scheme, config.apdqk);

    ComparisonReport report;
    report.title = "RDD " + std::string(to_string(config.apdqk)) + " " + std::string(to_string(config.scheme));
    report.kind = gf::ScoreKind::rdd;
    report.scheme = config.scheme;
    report.apdqk = config.apdqk;
    report.normalize_to = config.normalize_to;
    for (auto [a, b] : document_pairs(index.n_docs()))
        report.targets.push_back(pair_label(index.doc_ids()[a], index.doc_ids()[b]));

    std::optional<double> ref_max;
    if (config.normalize_to) ref_max = reference_max_of(*config.normalize_to, rdd_raw(*config.normalize_to, ctx));
    for (ModelId model : kRddModels)
        report.rows.push_back(make_row(model, ctx, report.targets, rdd_raw(model, ctx), ref_max));
    return report;
}

void render_tsv(const ComparisonReport& report, std::ostream& out) {
    out << "# " << report.title << "\tnormalize_to="
        << (report.normalize_to ? std::string(to_string(*report.normalize_to)) : std::string("none")) << '\n';
    out << "model\tC";
    for (const auto& t : report.targets) out << '\t' << t;
    out << "\tranking";
    for (const auto& t : report.targets) out << "\traw:" << t;
    out << '\n';

    for (const auto& row : report.rows) {
        const auto& t = row.table;
        out << to_string(t.model) << '\t' << (t.c ? general(*t.c) : std::string("-"));
        if (row.degenerate) {
            for (std::size_t j = 0; j < t.targets.size(); ++j) out << "\t-";
            out << '\t' << row.note;
        } else {
            for (double v : t.normalized) out << '\t' << fixed4(v);
            out << '\t' << ranking_text(t);
        }
        for (double v : t.raw) out << '\t' << general(v);
        out << '\n';
        if (row.reference) {
            out << "  reference\t" << (row.reference_c ? general(*row.reference_c) : std::string("-"));
            for (double v : *row.reference) out << '\t' << fixed4(v);
            out << '\n';
            out << "  delta\t-";
            for (double d : row.deltas) out << '\t' << fixed4(d);
            out << '\n';
        }
    }
    for (const auto& s : report.static_rows) {
        out << s.label << "\t-";
        for (double v : s.values) out << '\t' << fixed4(v);
        out << "\t(display only)\n";
    }
}

nlohmann::ordered_json to_json(const ComparisonReport& report) {
    nlohmann::ordered_json j;
    j["title"] = report.title;
    j["kind"] = report.kind == gf::ScoreKind::rdq ? "rdq" : "rdd";
    j["wf"] = scheme_number(report.scheme);
    j["apdqk"] = scheme_number(report.apdqk);
    j["normalize_to"] = report.normalize_to ? nlohmann::ordered_json(to_string(*report.normalize_to))
                                            : nlohmann::ordered_json(nullptr);
    j["targets"] = report.targets;
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : report.rows) j["rows"].push_back(row_json(row));
    if (!report.static_rows.empty()) {
        j["static_rows"] = nlohmann::ordered_json::array();
        for (const auto& s : report.static_rows)
            j["static_rows"].push_back({{"label", s.label}, {"values", s.values}, {"source", "external"}});
    }
    return j;
}

std::vector<gf::LabeledRow> render_adjusted_comparison(std::span<const gf::LabeledRow> rows,
                                                       double reference_value,
                                                       std::optional<std::size_t> column) {
    std::vector<gf::LabeledRow> out;
    out.reserve(rows.size());
    for (const auto& row : rows) {
        const std::size_t col = column.value_or(row.values.size() / 2);
        if (col >= row.values.size())
            throw Error(ErrorKind::dimension, "row '" + row.label + "' has no column " + std::to_string(col));
        const double cell = row.values[col];
        if (!(cell > 0.0))
            throw Error(ErrorKind::degenerate_row, "row '" + row.label + "' has a non-positive reference cell");
        gf::LabeledRow scaled{row.label, {}};
        for (double v : row.values) scaled.values.push_back(v * (reference_value / cell));
        scaled.values[col] = reference_value;
        out.push_back(std::move(scaled));
    }
    return out;
}

bool Reproduction::ok() const {
    return breaches.empty() && problems.empty() &&
           std::all_of(orders.begin(), orders.end(), [](const OrderCheck& o) { return o.ok; });
}

Reproduction reproduce_gf(std::optional<double> tolerance) {
    Reproduction repro;
    const auto docs = gf::documents();
    const auto index = build_index(docs);
    const auto query = query_stats(gf::kQuery, index);

    RunConfig config;
    config.models.assign(std::begin(kAllModels), std::end(kAllModels));
    std::size_t matched = 0;

    for (ApdqkScheme apdqk : {ApdqkScheme::apdqk1, ApdqkScheme::apdqk2}) {
        for (WeightScheme scheme : kAllWeightSchemes) {
            config.scheme = scheme;
            config.apdqk = apdqk;

            auto rdq = run_rdq(index, query, config);
            if (const auto* ref = find_reference(gf::ScoreKind::rdq, apdqk, scheme)) {
                compare(rdq, *ref, tolerance.value_or(ref->tolerance), repro);
                ++matched;
            }
            const auto rdq_order = gf::expected_rdq_order(scheme);
            check_order(rdq, rdq_order, repro);
            for (const auto& row : rdq.rows)
                if (row.table.model == ModelId::fuhr_pcs && !row.degenerate)
                    repro.problems.push_back(rdq.title + ": FUHR-PCS expected to be degenerate");
            repro.tables.push_back(std::move(rdq));

            auto rdd = run_rdd(index, config);
            if (const auto* ref = find_reference(gf::ScoreKind::rdd, apdqk, scheme)) {
                compare(rdd, *ref, tolerance.value_or(ref->tolerance), repro);
                ++matched;
            }
            check_order(rdd, gf::kExpectedRddOrder, repro);
            repro.tables.push_back(std::move(rdd));
        }
    }
    if (matched != gf::reference_tables().size())
        repro.problems.push_back("not every reference table was compared");

    const auto adjusted = render_adjusted_comparison(gf::quoted_scores(), gf::kAdjustedReferenceValue);
    const auto expected = gf::quoted_scores_adjusted();
    for (std::size_t r = 0; r < adjusted.size(); ++r) {
        for (std::size_t j = 0; j < adjusted[r].values.size(); ++j) {
            ++repro.cells_checked;
            const double tol = tolerance.value_or(kAdjustedTolerance);
            if (!(std::abs(adjusted[r].values[j] - expected[r].values[j]) <= tol))
                repro.breaches.push_back({"adjusted-quoted", adjusted[r].label, "d" + std::to_string(j + 1),
                                          adjusted[r].values[j], expected[r].values[j], tol});
        }
    }
    return repro;
}

void render_tsv(const Reproduction& repro, std::ostream& out) {
    for (const auto& table : repro.tables) {
        render_tsv(table, out);
        out << '\n';
    }

    out << "# adjusted quoted scores (middle column pinned to " << fixed4(gf::kAdjustedReferenceValue) << ")\n";
    out << "model\td1\td2\td3\n";
    for (const auto& row : render_adjusted_comparison(gf::quoted_scores(), gf::kAdjustedReferenceValue)) {
        out << row.label;
        for (double v : row.values) out << '\t' << fixed4(v);
        out << '\n';
    }
    out << '\n';

    std::size_t orders_ok = 0;
    for (const auto& o : repro.orders) {
        if (o.ok) {
            ++orders_ok;
            continue;
        }
        out << "ORDER-MISMATCH\t" << o.table << '\t' << o.model << '\n';
    }
    for (const auto& b : repro.breaches)
        out << "BREACH\t" << b.table << '\t' << b.model << '\t' << b.target << "\tcomputed=" << general(b.computed)
            << "\treference=" << general(b.reference) << "\tdelta=" << general(b.computed - b.reference)
            << "\ttolerance=" << general(b.tolerance) << '\n';
    for (const auto& p : repro.problems) out << "PROBLEM\t" << p << '\n';
    out << "# cells checked: " << repro.cells_checked << ", breaches: " << repro.breaches.size()
        << ", ranking orders: " << orders_ok << "/" << repro.orders.size() << " match\n";
    out << "# result: " << (repro.ok() ? "PASS" : "FAIL") << '\n';
}

nlohmann::ordered_json to_json(const Reproduction& repro) {
    nlohmann::ordered_json j;
    j["tables"] = nlohmann::ordered_json::array();
    for (const auto& t : repro.tables) j["tables"].push_back(to_json(t));

    j["adjusted"] = nlohmann::ordered_json::array();
    for (const auto& row : render_adjusted_comparison(gf::quoted_scores(), gf::kAdjustedReferenceValue))
        j["adjusted"].push_back({{"label", row.label}, {"values", row.values}});

    j["orders"] = nlohmann::ordered_json::array();
    for (const auto& o : repro.orders)
        j["orders"].push_back({{"table", o.table}, {"model", o.model}, {"expected", o.expected},
                               {"actual", o.actual}, {"ok", o.ok}});
    j["breaches"] = nlohmann::ordered_json::array();
    for (const auto& b : repro.breaches)
        j["breaches"].push_back({{"table", b.table}, {"model", b.model}, {"target", b.target},
                                 {"computed", b.computed}, {"reference", b.reference}, {"tolerance", b.tolerance}});
    j["problems"] = repro.problems;
    j["cells_checked"] = repro.cells_checked;
    j["ok"] = repro.ok();
    return j;
}

}  // namespace pbir
