#pragma once

// Finite discrete probability spaces in bracket form.
//
// A conditional P(A|B) splits into an event bra P(A| and an evidence ket |B).
// The system ket |Omega) is the full outcome set, so P(E) = P(E|Omega). A
// partition {H_k} of Omega acts as a unit operator:
//
//     P(A|B) = P(A|I|B) = sum_k P(A|H_k) P(H_k|B)
//
// The bra/ket asymmetry (the left and right expansions of Omega differ) has no
// computational effect here, so bras and kets are both plain Events.

#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

namespace pbir {

/// A set of outcome identifiers. Validated against a space when used.
struct Event {
    std::set<std::string> members;

    Event() = default;
    Event(std::initializer_list<std::string> ids) : members(ids) {}
    explicit Event(std::set<std::string> ids) : members(std::move(ids)) {}

    [[nodiscard]] bool empty() const noexcept { return members.empty(); }
    friend bool operator==(const Event&, const Event&) = default;
};

Event event_union(const Event& a, const Event& b);
Event event_intersection(const Event& a, const Event& b);

/// Ordered blocks; must be pairwise disjoint and cover the space.
struct Partition {
    std::vector<Event> blocks;
};

/// Outcomes with point masses and an optional real-valued observable.
///
/// Masses within 1e-6 of summing to one are rescaled to sum to one; anything
/// further off is rejected. Immutable after construction.
class ProbabilitySpace {
  public:
    ProbabilitySpace(std::vector<std::string> ids, std::vector<double> masses,
                     std::optional<std::vector<double>> observable = std::nullopt);

    /// Equal mass on every outcome.
    static ProbabilitySpace uniform(std::vector<std::string> ids,
                                    std::optional<std::vector<double>> observable = std::nullopt);

    [[nodiscard]] std::size_t size() const noexcept { return ids_.size(); }
    [[nodiscard]] const std::vector<std::string>& ids() const noexcept { return ids_; }
    [[nodiscard]] const std::vector<double>& masses() const noexcept { return masses_; }
    [[nodiscard]] bool has_observable() const noexcept { return observable_.has_value(); }
    [[nodiscard]] const std::optional<std::vector<double>>& observable() const noexcept {
        return observable_;
    }
    [[nodiscard]] std::optional<std::size_t> index_of(const std::string& id) const;

    /// The whole sample space as an event.
    [[nodiscard]] Event omega() const;
    /// One singleton block per outcome.
    [[nodiscard]] Partition singletons() const;

    /// Outcome membership mask; throws invalid-event for unknown ids.
    [[nodiscard]] std::vector<bool> mask(const Event& e) const;
    [[nodiscard]] double mass_of(const std::vector<bool>& mask) const;

  private:
    std::vector<std::string> ids_;
    std::vector<double> masses_;
    std::optional<std::vector<double>> observable_;
    std::unordered_map<std::string, std::size_t> lookup_;
};

/// P(E) = P(E|Omega).
double probability(const Event& e, const ProbabilitySpace& space);

/// P(A|B) = P(A and B) / P(B). Throws zero-evidence when P(B) = 0.
double conditional(const Event& a, const Event& b, const ProbabilitySpace& space);

/// P(B|A) P(A) / P(B), i.e. P(A|B) reached through Bayes' rule.
double bayes_invert(const Event& a, const Event& b, const ProbabilitySpace& space);

/// sum_k P(A|H_k) P(H_k|B) over the partition blocks H_k, with the first
/// factor read as P(A|H_k and B) so the sum equals P(A|B) for any partition.
/// Blocks with P(H_k and B) = 0 contribute nothing and are skipped.
double expand_conditional(const Event& a, const Partition& partition, const Event& b,
                          const ProbabilitySpace& space);

/// Throws invalid-partition unless the blocks are disjoint and cover the space.
void validate_partition(const Partition& partition, const ProbabilitySpace& space);

/// E[F(X)] = sum_x F(x) P(x). F defaults to the identity.
double expectation(const ProbabilitySpace& space,
                   const std::function<double(double)>& f = {});

/// True iff P(X_1 and ... and X_k | H) = prod_i P(X_i | H) within 1e-9.
bool check_independent(const std::vector<Event>& events, const Event& evidence,
                       const ProbabilitySpace& space);

/// The two-bowl cookie example: 80 equiprobable cookies.
struct CookieBowls {
    ProbabilitySpace space;
    Event bowl1;          // H_1
    Event bowl2;          // H_2
    Event plain1;         // E_1, 30 cookies
    Event chip1;          // F_1, 10 cookies
    Event plain2;         // E_2, 20 cookies
    Event chip2;          // F_2, 20 cookies
    Event plain;          // E = E_1 u E_2
};

CookieBowls cookie_bowls();

}  // namespace pbir
