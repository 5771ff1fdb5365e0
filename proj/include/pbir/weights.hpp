#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pbir {

/// The four term-weight formulas.
///   wf1: tf
///   wf2: tf * idf
///   wf3: log10(1 + tf) * idf   (query: log10(1 + tf), no idf)
///   wf4: f * idf               (query: (1 + f) * idf), f = tf / max tf
/// Every raw vector is L2-normalized afterwards.
enum class WeightScheme { wf1, wf2, wf3, wf4 };

inline constexpr WeightScheme kAllWeightSchemes[] = {WeightScheme::wf1, WeightScheme::wf2,
                                                     WeightScheme::wf3, WeightScheme::wf4};

std::string_view to_string(WeightScheme scheme) noexcept;
int scheme_number(WeightScheme scheme) noexcept;
std::optional<WeightScheme> parse_weight_scheme(std::string_view text);

enum class WeightRole { document, query };

inline constexpr std::string_view kQueryOwner = "QUERY";

/// Unit-norm, non-negative weights over the lexicon for one document or query.
struct WeightVector {
    std::string owner;
    WeightScheme scheme = WeightScheme::wf1;
    std::vector<double> w;
};

/// f_i = tf_i / max_k tf_k. Throws zero-frequency on an all-zero vector.
std::vector<double> normalized_frequency(std::span<const int> tf);

/// Throws degenerate-weights when every raw weight is zero (e.g. a document
/// whose terms all have idf 0), and dimension when the lengths differ.
WeightVector compute_weights(WeightScheme scheme, std::span<const int> tf,
                             std::span<const double> idf, WeightRole role, std::string owner);

/// P(k_i | owner) = w_i^2.
std::vector<double> induced_term_prob(const WeightVector& wv);

}  // namespace pbir
