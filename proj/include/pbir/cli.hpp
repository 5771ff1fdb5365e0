#pragma once

// Command implementations behind the pbir executable. Each returns the process
// exit status: 0 success, 1 validation or tolerance failure, 2 I/O error.

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "pbir/corpus.hpp"
#include "pbir/report.hpp"

namespace pbir::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitIo = 2;

/// Reads documents from files (one document per file, id = file stem),
/// directories (every regular file inside, sorted by name) and `.jsonl` files
/// with one {"id", "text"} object per line.
std::vector<Document> read_documents(const std::vector<std::filesystem::path>& inputs);

int cmd_index(const std::vector<std::filesystem::path>& inputs, const std::filesystem::path& output,
              std::ostream& out, std::ostream& err);

int cmd_rank(const std::filesystem::path& index_path, const std::string& query, const RunConfig& config,
             std::ostream& out, std::ostream& err);

int cmd_rdd(const std::filesystem::path& index_path, const RunConfig& config, std::ostream& out,
            std::ostream& err);

int cmd_reproduce_gf(std::optional<double> tolerance, OutputFormat format, std::ostream& out, std::ostream& err);

/// "all" or a comma-separated list of model names.
std::vector<ModelId> parse_models(const std::string& text);

}  // namespace pbir::cli
