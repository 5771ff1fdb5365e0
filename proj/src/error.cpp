#include "pbir/error.hpp"

namespace pbir {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::invalid_space: return "invalid-space";
        case ErrorKind::invalid_event: return "invalid-event";
        case ErrorKind::invalid_partition: return "invalid-partition";
        case ErrorKind::zero_evidence: return "zero-evidence";
        case ErrorKind::missing_observable: return "missing-observable";
        case ErrorKind::empty_corpus: return "empty-corpus";
        case ErrorKind::empty_document: return "empty-document";
        case ErrorKind::duplicate_id: return "duplicate-id";
        case ErrorKind::undefined_idf: return "undefined-idf";
        case ErrorKind::empty_query: return "empty-query";
        case ErrorKind::oov_query: return "oov-query";
        case ErrorKind::corrupt_index: return "corrupt-index";
        case ErrorKind::schema_version: return "schema-version";
        case ErrorKind::io: return "io";
        case ErrorKind::zero_frequency: return "zero-frequency";
        case ErrorKind::degenerate_weights: return "degenerate-weights";
        case ErrorKind::dimension: return "dimension";
        case ErrorKind::degenerate_scores: return "degenerate-scores";
        case ErrorKind::insufficient_documents: return "insufficient-documents";
        case ErrorKind::degenerate_row: return "degenerate-row";
        case ErrorKind::invalid_config: return "invalid-config";
        case ErrorKind::malformed_input: return "malformed-input";
    }
    return "unknown";
}

}  // namespace pbir
