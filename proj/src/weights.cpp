#include "pbir/weights.hpp"

#include <algorithm>
#include <cmath>

#include "pbir/error.hpp"

namespace pbir {

std::string_view to_string(WeightScheme scheme) noexcept {
    switch (scheme) {
        case WeightScheme::wf1: return "WF1";
        case WeightScheme::wf2: return "WF2";
        case WeightScheme::wf3: return "WF3";
        case WeightScheme::wf4: return "WF4";
    }
    return "WF?";
}

int scheme_number(WeightScheme scheme) noexcept { return static_cast<int>(scheme) + 1; }

std::optional<WeightScheme> parse_weight_scheme(std::string_view text) {
    if (text.size() > 2 && (text.substr(0, 2) == "WF" || text.substr(0, 2) == "wf")) text.remove_prefix(2);
    if (text == "1") return WeightScheme::wf1;
    if (text == "2") return WeightScheme::wf2;
    if (text == "3") return WeightScheme::wf3;
    if (text == "4") return WeightScheme::wf4;
    return std::nullopt;
}

std::vector<double> normalized_frequency(std::span<const int> tf) {
    const int max_tf = tf.empty() ? 0 : *std::max_element(tf.begin(), tf.end());
    if (max_tf <= 0) throw Error(ErrorKind::zero_frequency, "term-frequency vector is all zero");
    std::vector<double> f(tf.size());
    for (std::size_t i = 0; i < tf.size(); ++i) f[i] = static_cast<double>(tf[i]) / max_tf;
    return f;
}

WeightVector compute_weights(WeightScheme scheme, std::span<const int> tf,
                             std::span<const double> idf, WeightRole role, std::string owner) {
    if (tf.size() != idf.size())
        throw Error(ErrorKind::dimension, "tf has " + std::to_string(tf.size()) + " terms, idf has " +
                                              std::to_string(idf.size()));
    const bool query = role == WeightRole::query;
    const auto f = normalized_frequency(tf);

    std::vector<double> raw(tf.size());
    for (std::size_t i = 0; i < tf.size(); ++i) {
        const double t = tf[i];
        switch (scheme) {
            case WeightScheme::wf1: raw[i] = t; break;
            case WeightScheme::wf2: raw[i] = t * idf[i]; break;
            case WeightScheme::wf3: raw[i] = query ? std::log10(1.0 + t) : std::log10(1.0 + t) * idf[i]; break;
            case WeightScheme::wf4: raw[i] = (query ? 1.0 + f[i] : f[i]) * idf[i]; break;
        }
    }

    double norm2 = 0.0;
    for (double r : raw) norm2 += r * r;
    if (!(norm2 > 0.0))
        throw Error(ErrorKind::degenerate_weights,
                    std::string(to_string(scheme)) + " weights of '" + owner + "' are all zero");
    const double norm = std::sqrt(norm2);
    for (double& r : raw) r = std::min(1.0, r / norm);
    return WeightVector{std::move(owner), scheme, std::move(raw)};
}

std::vector<double> induced_term_prob(const WeightVector& wv) {
    std::vector<double> p(wv.w.size());
    std::transform(wv.w.begin(), wv.w.end(), p.begin(), [](double w) { return w * w; });
    return p;
}

}  // namespace pbir
