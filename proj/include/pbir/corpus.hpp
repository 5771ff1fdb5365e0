#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pbir {

/// Lowercase, split on every non-alphanumeric byte, drop empty fragments.
/// No stemming and no stop-word removal.
std::vector<std::string> tokenize(std::string_view text);

struct Document {
    std::string id;
    std::string text;
    std::vector<std::string> tokens;
};

Document make_document(std::string id, std::string text);

/// idf = log10(n_docs / doc_freq). Throws undefined-idf when doc_freq = 0.
double compute_idf(std::size_t n_docs, std::size_t doc_freq);

/// Lexicon, term-frequency matrix, document frequencies and idf of a corpus.
///
/// Terms are sorted alphabetically. tf is stored row-per-document. The
/// constructor checks every invariant and throws corrupt-index on violation,
/// so a CorpusIndex in hand is always consistent.
class CorpusIndex {
  public:
    CorpusIndex(std::vector<std::string> doc_ids, std::vector<std::string> lexicon,
                std::vector<std::vector<int>> tf, std::vector<int> doc_freq,
                std::vector<double> idf);

    [[nodiscard]] std::size_t n_docs() const noexcept { return doc_ids_.size(); }
    [[nodiscard]] std::size_t n_terms() const noexcept { return lexicon_.size(); }
    [[nodiscard]] const std::vector<std::string>& doc_ids() const noexcept { return doc_ids_; }
    [[nodiscard]] const std::vector<std::string>& lexicon() const noexcept { return lexicon_; }
    [[nodiscard]] const std::vector<std::vector<int>>& tf() const noexcept { return tf_; }
    [[nodiscard]] std::span<const int> tf_row(std::size_t doc) const { return tf_.at(doc); }
    [[nodiscard]] const std::vector<int>& doc_freq() const noexcept { return doc_freq_; }
    [[nodiscard]] const std::vector<double>& idf() const noexcept { return idf_; }
    [[nodiscard]] std::optional<std::size_t> term_index(std::string_view term) const;
    [[nodiscard]] std::optional<std::size_t> doc_index(std::string_view id) const;

    friend bool operator==(const CorpusIndex&, const CorpusIndex&) = default;

  private:
    std::vector<std::string> doc_ids_;
    std::vector<std::string> lexicon_;
    std::vector<std::vector<int>> tf_;
    std::vector<int> doc_freq_;
    std::vector<double> idf_;
};

CorpusIndex build_index(std::span<const Document> docs);

struct QueryStats {
    std::vector<int> tf_q;               // one count per lexicon term
    std::vector<std::string> oov_terms;  // tokens absent from the lexicon, in query order
};

/// Throws empty-query for a query without tokens and oov-query when no token
/// is in the lexicon.
QueryStats query_stats(std::string_view query_text, const CorpusIndex& index);

/// Boolean term occupancy: 1 where the term occurs, 0 elsewhere.
struct BtonVector {
    std::vector<int> bits;

    [[nodiscard]] int count() const noexcept;
    friend bool operator==(const BtonVector&, const BtonVector&) = default;
};

BtonVector bton(std::span<const int> tf);

inline constexpr int kIndexFormatVersion = 1;

void save_index(const CorpusIndex& index, const std::filesystem::path& path);
CorpusIndex load_index(const std::filesystem::path& path);

}  // namespace pbir
