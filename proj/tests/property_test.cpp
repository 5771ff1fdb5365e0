#include <doctest.h>

#include "properties.hpp"

namespace {

void expect(const props::Outcome& r) {
    INFO("trials " << r.trials << ", failures " << r.failures << ", worst " << r.worst << ", first " << r.first_failure);
    CHECK(r.trials > 0);
    CHECK(r.failures == 0);
}

}  // namespace

TEST_CASE("unit operator, bayes, bounds, additivity") { expect(props::unit_operator_identity(11)); }

TEST_CASE("rdd symmetry") { expect(props::rdd_symmetry(12)); }

TEST_CASE("cfs against the brute-force sum") { expect(props::cfs_oracle(13)); }

TEST_CASE("rank invariance under probability rescaling") { expect(props::scaling_invariance(14)); }

TEST_CASE("cfs reduces to tvs") { expect(props::cfs_reduces_to_tvs(15)); }

TEST_CASE("weight normalization") { expect(props::weight_normalization(16)); }

TEST_CASE("other seeds") {
    for (std::uint64_t seed : {101u, 202u, 303u}) {
        CAPTURE(seed);
        expect(props::unit_operator_identity(seed, 200));
        expect(props::cfs_oracle(seed, 200));
        expect(props::scaling_invariance(seed, 50));
    }
}
