#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pbir {

enum class ErrorKind {
    invalid_space,
    invalid_event,
    invalid_partition,
    zero_evidence,
    missing_observable,
    empty_corpus,
    empty_document,
    duplicate_id,
    undefined_idf,
    empty_query,
    oov_query,
    corrupt_index,
    schema_version,
    io,
    zero_frequency,
    degenerate_weights,
    dimension,
    degenerate_scores,
    insufficient_documents,
    degenerate_row,
    invalid_config,
    malformed_input,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Single exception type for the library; callers branch on kind().
class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

}  // namespace pbir
