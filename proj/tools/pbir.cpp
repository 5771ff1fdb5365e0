#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pbir/cli.hpp"
#include "pbir/error.hpp"

namespace {

struct ScoringFlags {
    int wf = 1;
    int apdqk = 1;
    std::string models = "all";
    std::string normalize_to = "vsm";
    std::string format = "tsv";
};

void add_scoring_flags(CLI::App* cmd, ScoringFlags& flags, bool with_models) {
    cmd->add_option("--wf", flags.wf, "Term-weight formula")->check(CLI::Range(1, 4))->capture_default_str();
    cmd->add_option("--apdqk", flags.apdqk, "Absolute-probability scheme")->check(CLI::Range(1, 2))->capture_default_str();
    if (with_models)
        cmd->add_option("--models", flags.models, "Comma-separated models, or 'all'")->capture_default_str();
    cmd->add_option("--normalize-to", flags.normalize_to, "Reference model for the top score, or 'none'")
        ->capture_default_str();
    cmd->add_option("--format", flags.format, "Output format")
        ->check(CLI::IsMember({"tsv", "json"}))
        ->capture_default_str();
}

pbir::RunConfig to_config(const ScoringFlags& flags, bool with_models) {
    pbir::RunConfig config;
    config.scheme = *pbir::parse_weight_scheme(std::to_string(flags.wf));
    config.apdqk = *pbir::parse_apdqk_scheme(std::to_string(flags.apdqk));
    config.format = flags.format == "json" ? pbir::OutputFormat::json : pbir::OutputFormat::tsv;
    if (with_models) config.models = pbir::cli::parse_models(flags.models);
    if (flags.normalize_to == "none") {
        config.normalize_to.reset();
    } else {
        config.normalize_to = pbir::parse_model_id(flags.normalize_to);
        if (!config.normalize_to)
            throw pbir::Error(pbir::ErrorKind::invalid_config, "unknown model '" + flags.normalize_to + "'");
    }
    return config;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Probabilistic IR ranking: index corpora, score queries and documents"};
    app.require_subcommand(1);

    std::vector<std::string> inputs;
    std::string output;
    auto* index_cmd = app.add_subcommand("index", "Build an index file from text or JSONL documents");
    index_cmd->add_option("--input", inputs, "Files or directories")->required();
    index_cmd->add_option("--output", output, "Index file to write")->required();

    std::string index_path;
    std::string query;
    ScoringFlags rank_flags;
    auto* rank_cmd = app.add_subcommand("rank", "Score every document against a query");
    rank_cmd->add_option("--index", index_path, "Index file")->required();
    rank_cmd->add_option("--query", query, "Query text")->required();
    add_scoring_flags(rank_cmd, rank_flags, true);

    ScoringFlags rdd_flags;
    auto* rdd_cmd = app.add_subcommand("rdd", "Score every pair of documents");
    rdd_cmd->add_option("--index", index_path, "Index file")->required();
    add_scoring_flags(rdd_cmd, rdd_flags, false);

    std::optional<double> tolerance;
    std::string repro_format = "tsv";
    auto* repro_cmd = app.add_subcommand("reproduce-gf", "Run the embedded worked example against reference tables");
    repro_cmd->add_option("--tolerance", tolerance, "Override every per-table tolerance")
        ->check(CLI::PositiveNumber);
    repro_cmd->add_option("--format", repro_format, "Output format")
        ->check(CLI::IsMember({"tsv", "json"}))
        ->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*index_cmd) {
            std::vector<std::filesystem::path> paths(inputs.begin(), inputs.end());
            return pbir::cli::cmd_index(paths, output, std::cout, std::cerr);
        }
        if (*rank_cmd) return pbir::cli::cmd_rank(index_path, query, to_config(rank_flags, true), std::cout, std::cerr);
        if (*rdd_cmd) {
            auto config = to_config(rdd_flags, false);
            return pbir::cli::cmd_rdd(index_path, config, std::cout, std::cerr);
        }
        const auto format = repro_format == "json" ? pbir::OutputFormat::json : pbir::OutputFormat::tsv;
        return pbir::cli::cmd_reproduce_gf(tolerance, format, std::cout, std::cerr);
    } catch (const pbir::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.kind() == pbir::ErrorKind::io ? pbir::cli::kExitIo : pbir::cli::kExitValidation;
    }
}
