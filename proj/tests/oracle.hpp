#pragma once

// Test-only reference evaluators. These follow the formulas literally and
// share no code with the library's scoring paths.

#include <cmath>
#include <cstddef>
#include <random>
#include <vector>

namespace oracle {

/// sum_i a_i^2 b_i^2 / p_i * prod_{j != i} (1 - a_j^2)(1 - b_j^2), with the
/// product expanded in full for every summand.
inline double cfs_sum(const std::vector<double>& a, const std::vector<double>& b, const std::vector<double>& p) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double term = a[i] * a[i] * b[i] * b[i] / p[i];
        for (std::size_t j = 0; j < a.size(); ++j) {
            if (j == i) continue;
            term *= (1.0 - a[j] * a[j]);
            term *= (1.0 - b[j] * b[j]);
        }
        sum += term;
    }
    return sum;
}

/// Probability of an outcome set by counting equiprobable outcomes.
inline double count_ratio(std::size_t favourable, std::size_t total) {
    return static_cast<double>(favourable) / static_cast<double>(total);
}

/// A random non-negative unit vector of length t with at least one nonzero entry.
inline std::vector<double> random_unit_vector(std::mt19937_64& rng, std::size_t t, double zero_chance = 0.3) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> v(t, 0.0);
    double norm2 = 0.0;
    while (norm2 == 0.0) {
        norm2 = 0.0;
        for (auto& x : v) {
            x = u(rng) < zero_chance ? 0.0 : u(rng);
            norm2 += x * x;
        }
    }
    const double norm = std::sqrt(norm2);
    for (auto& x : v) x /= norm;
    return v;
}

}  // namespace oracle
