#include "pbir/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <map>
#include <set>

#include <json.hpp>

#include "pbir/error.hpp"

namespace pbir {

namespace {

// Stored idf must agree with log10(N/N_i) to this precision.
constexpr double kIdfReloadTolerance = 1e-12;

std::optional<std::size_t> find_sorted(const std::vector<std::string>& v, std::string_view key) {
    auto it = std::lower_bound(v.begin(), v.end(), key,
                               [](const std::string& a, std::string_view b) { return a < b; });
    if (it == v.end() || *it != key) return std::nullopt;
    return static_cast<std::size_t>(it - v.begin());
}

void corrupt(const std::string& what) { throw Error(ErrorKind::corrupt_index, what); }

}  // namespace

std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> tokens;
    std::string current;
    for (char ch : text) {
        const auto c = static_cast<unsigned char>(ch);
        if (c < 0x80 && std::isalnum(c)) {
            current.push_back(static_cast<char>(std::tolower(c)));
        } else if (!current.empty()) {
            tokens.push_back(std::move(current));
            current.clear();
        }
    }
    if (!current.empty()) tokens.push_back(std::move(current));
    return tokens;
}

Document make_document(std::string id, std::string text) {
    auto tokens = tokenize(text);
    return Document{std::move(id), std::move(text), std::move(tokens)};
}

double compute_idf(std::size_t n_docs, std::size_t doc_freq) {
    if (doc_freq == 0) throw Error(ErrorKind::undefined_idf, "term occurs in no document");
    if (doc_freq > n_docs)
        throw Error(ErrorKind::undefined_idf, "document frequency exceeds corpus size");
    return std::log10(static_cast<double>(n_docs) / static_cast<double>(doc_freq));
}

CorpusIndex::CorpusIndex(std::vector<std::string> doc_ids, std::vector<std::string> lexicon,
                         std::vector<std::vector<int>> tf, std::vector<int> doc_freq,
                         std::vector<double> idf)
    : doc_ids_(std::move(doc_ids)),
      lexicon_(std::move(lexicon)),
      tf_(std::move(tf)),
      doc_freq_(std::move(doc_freq)),
      idf_(std::move(idf)) {
    const std::size_t n = doc_ids_.size();
    const std::size_t t = lexicon_.size();
    if (n == 0) corrupt("no documents");
    if (t == 0) corrupt("empty lexicon");
    if (std::set<std::string>(doc_ids_.begin(), doc_ids_.end()).size() != n)
        corrupt("duplicate document ids");
    for (std::size_t i = 1; i < t; ++i)
        if (!(lexicon_[i - 1] < lexicon_[i])) corrupt("lexicon not strictly sorted at '" + lexicon_[i] + "'");
    if (tf_.size() != n) corrupt("tf has " + std::to_string(tf_.size()) + " rows for " + std::to_string(n) + " documents");
    if (doc_freq_.size() != t || idf_.size() != t) corrupt("doc_freq/idf length differs from lexicon");

    std::vector<int> recount(t, 0);
    for (std::size_t mu = 0; mu < n; ++mu) {
        if (tf_[mu].size() != t) corrupt("tf row for '" + doc_ids_[mu] + "' has wrong length");
        bool any = false;
        for (std::size_t i = 0; i < t; ++i) {
            if (tf_[mu][i] < 0) corrupt("negative tf");
            if (tf_[mu][i] > 0) {
                ++recount[i];
                any = true;
            }
        }
        if (!any) corrupt("document '" + doc_ids_[mu] + "' has no terms");
    }
    for (std::size_t i = 0; i < t; ++i) {
        if (doc_freq_[i] < 1 || static_cast<std::size_t>(doc_freq_[i]) > n)
            corrupt("doc_freq of '" + lexicon_[i] + "' outside [1, N]");
        if (doc_freq_[i] != recount[i]) corrupt("doc_freq of '" + lexicon_[i] + "' inconsistent with tf");
        const double expected = compute_idf(n, static_cast<std::size_t>(doc_freq_[i]));
        if (!(std::abs(idf_[i] - expected) <= kIdfReloadTolerance))
            corrupt("idf of '" + lexicon_[i] + "' inconsistent with doc_freq");
    }
}

std::optional<std::size_t> CorpusIndex::term_index(std::string_view term) const {
    return find_sorted(lexicon_, term);
}

std::optional<std::size_t> CorpusIndex::doc_index(std::string_view id) const {
    auto it = std::find(doc_ids_.begin(), doc_ids_.end(), id);
    if (it == doc_ids_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - doc_ids_.begin());
}

CorpusIndex build_index(std::span<const Document> docs) {
    if (docs.empty()) throw Error(ErrorKind::empty_corpus, "no documents to index");

    std::set<std::string> seen;
    std::set<std::string> terms;
    for (const auto& d : docs) {
        if (!seen.insert(d.id).second) throw Error(ErrorKind::duplicate_id, "document id '" + d.id + "'");
        if (d.tokens.empty()) throw Error(ErrorKind::empty_document, "document '" + d.id + "' has no tokens");
        terms.insert(d.tokens.begin(), d.tokens.end());
    }

    std::vector<std::string> lexicon(terms.begin(), terms.end());
    const std::size_t t = lexicon.size();
    std::vector<std::string> ids;
    std::vector<std::vector<int>> tf;
    std::vector<int> doc_freq(t, 0);
    for (const auto& d : docs) {
        ids.push_back(d.id);
        std::vector<int> row(t, 0);
        for (const auto& tok : d.tokens) ++row[*find_sorted(lexicon, tok)];
        for (std::size_t i = 0; i < t; ++i)
            if (row[i] > 0) ++doc_freq[i];
        tf.push_back(std::move(row));
    }
    std::vector<double> idf(t);
    for (std::size_t i = 0; i < t; ++i) idf[i] = compute_idf(docs.size(), static_cast<std::size_t>(doc_freq[i]));

    return {std::move(ids), std::move(lexicon), std::move(tf), std::move(doc_freq), std::move(idf)};
}

QueryStats query_stats(std::string_view query_text, const CorpusIndex& index) {
    const auto tokens = tokenize(query_text);
    if (tokens.empty()) throw Error(ErrorKind::empty_query, "query has no tokens");

    QueryStats stats{std::vector<int>(index.n_terms(), 0), {}};
    for (const auto& tok : tokens) {
        if (auto i = index.term_index(tok))
            ++stats.tf_q[*i];
        else
            stats.oov_terms.push_back(tok);
    }
    if (stats.oov_terms.size() == tokens.size())
        throw Error(ErrorKind::oov_query, "no query term occurs in the lexicon");
    return stats;
}

int BtonVector::count() const noexcept {
    return static_cast<int>(std::count(bits.begin(), bits.end(), 1));
}

BtonVector bton(std::span<const int> tf) {
    BtonVector out;
    out.bits.reserve(tf.size());
    for (int v : tf) out.bits.push_back(v > 0 ? 1 : 0);
    return out;
}

void save_index(const CorpusIndex& index, const std::filesystem::path& path) {
    nlohmann::ordered_json j;
    j["version"] = kIndexFormatVersion;
    j["doc_ids"] = index.doc_ids();
    j["lexicon"] = index.lexicon();
    j["tf"] = index.tf();
    j["doc_freq"] = index.doc_freq();
    j["idf"] = index.idf();

    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::io, "cannot open '" + path.string() + "' for writing");
    out << j.dump(1) << '\n';
    if (!out) throw Error(ErrorKind::io, "write to '" + path.string() + "' failed");
}

CorpusIndex load_index(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::io, "cannot open '" + path.string() + "'");

    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::corrupt_index, "'" + path.string() + "' is not valid JSON: " + e.what());
    }
    if (!j.is_object() || !j.contains("version")) corrupt("missing version field");
    if (j["version"] != kIndexFormatVersion)
        throw Error(ErrorKind::schema_version,
                    "index version " + j["version"].dump() + ", expected " + std::to_string(kIndexFormatVersion));
    try {
        return CorpusIndex(j.at("doc_ids").get<std::vector<std::string>>(),
                           j.at("lexicon").get<std::vector<std::string>>(),
                           j.at("tf").get<std::vector<std::vector<int>>>(),
                           j.at("doc_freq").get<std::vector<int>>(),
                           j.at("idf").get<std::vector<double>>());
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::corrupt_index, std::string("malformed index: ") + e.what());
    }
}

}  // namespace pbir
