#include "pbir/probability.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "pbir/error.hpp"

namespace pbir {

namespace {

constexpr double kRescaleTolerance = 1e-6;
constexpr double kIndependenceTolerance = 1e-9;

std::vector<bool> mask_and(const std::vector<bool>& a, const std::vector<bool>& b) {
    std::vector<bool> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] && b[i];
    return out;
}

double require_evidence(const ProbabilitySpace& space, const std::vector<bool>& mask,
                        const char* what) {
    const double p = space.mass_of(mask);
    if (p <= 0.0) throw Error(ErrorKind::zero_evidence, std::string(what) + " has probability 0");
    return p;
}

}  // namespace

Event event_union(const Event& a, const Event& b) {
    Event out = a;
    out.members.insert(b.members.begin(), b.members.end());
    return out;
}

Event event_intersection(const Event& a, const Event& b) {
    Event out;
    std::set_intersection(a.members.begin(), a.members.end(), b.members.begin(), b.members.end(),
                          std::inserter(out.members, out.members.end()));
    return out;
}

ProbabilitySpace::ProbabilitySpace(std::vector<std::string> ids, std::vector<double> masses,
                                   std::optional<std::vector<double>> observable)
    : ids_(std::move(ids)), masses_(std::move(masses)), observable_(std::move(observable)) {
    if (ids_.empty()) throw Error(ErrorKind::invalid_space, "sample space has no outcomes");
    if (masses_.size() != ids_.size())
        throw Error(ErrorKind::invalid_space, "one mass per outcome required");
    if (observable_ && observable_->size() != ids_.size())
        throw Error(ErrorKind::invalid_space, "one observable value per outcome required");

    for (std::size_t i = 0; i < ids_.size(); ++i) {
        if (!lookup_.emplace(ids_[i], i).second)
            throw Error(ErrorKind::invalid_space, "duplicate outcome '" + ids_[i] + "'");
        if (!(masses_[i] >= 0.0) || !std::isfinite(masses_[i]))
            throw Error(ErrorKind::invalid_space, "negative or non-finite mass for '" + ids_[i] + "'");
    }
    const double total = std::accumulate(masses_.begin(), masses_.end(), 0.0);
    if (std::abs(total - 1.0) > kRescaleTolerance)
        throw Error(ErrorKind::invalid_space,
                    "masses sum to " + std::to_string(total) + ", expected 1");
    for (double& m : masses_) m /= total;
}

ProbabilitySpace ProbabilitySpace::uniform(std::vector<std::string> ids,
                                           std::optional<std::vector<double>> observable) {
    std::vector<double> masses(ids.size(), ids.empty() ? 0.0 : 1.0 / static_cast<double>(ids.size()));
    return {std::move(ids), std::move(masses), std::move(observable)};
}

std::optional<std::size_t> ProbabilitySpace::index_of(const std::string& id) const {
    if (auto it = lookup_.find(id); it != lookup_.end()) return it->second;
    return std::nullopt;
}

Event ProbabilitySpace::omega() const { return Event(std::set<std::string>(ids_.begin(), ids_.end())); }

Partition ProbabilitySpace::singletons() const {
    Partition p;
    p.blocks.reserve(ids_.size());
    for (const auto& id : ids_) p.blocks.push_back(Event{id});
    return p;
}

std::vector<bool> ProbabilitySpace::mask(const Event& e) const {
    std::vector<bool> out(ids_.size(), false);
    for (const auto& id : e.members) {
        auto idx = index_of(id);
        if (!idx) throw Error(ErrorKind::invalid_event, "unknown outcome '" + id + "'");
        out[*idx] = true;
    }
    return out;
}

double ProbabilitySpace::mass_of(const std::vector<bool>& mask) const {
    double p = 0.0;
    for (std::size_t i = 0; i < masses_.size(); ++i)
        if (mask[i]) p += masses_[i];
    return p;
}

double probability(const Event& e, const ProbabilitySpace& space) {
    return space.mass_of(space.mask(e));
}

double conditional(const Event& a, const Event& b, const ProbabilitySpace& space) {
    const auto ma = space.mask(a);
    const auto mb = space.mask(b);
    const double pb = require_evidence(space, mb, "evidence");
    // Clamp guards against 1 + ulp when A covers B.
    return std::min(1.0, space.mass_of(mask_and(ma, mb)) / pb);
}

double bayes_invert(const Event& a, const Event& b, const ProbabilitySpace& space) {
    const auto ma = space.mask(a);
    const auto mb = space.mask(b);
    const double pa = require_evidence(space, ma, "event");
    const double pb = require_evidence(space, mb, "evidence");
    const double b_given_a = space.mass_of(mask_and(ma, mb)) / pa;
    return std::min(1.0, b_given_a * pa / pb);
}

void validate_partition(const Partition& partition, const ProbabilitySpace& space) {
    std::vector<int> hits(space.size(), 0);
    for (const auto& block : partition.blocks) {
        std::vector<bool> m;
        try {
            m = space.mask(block);
        } catch (const Error& e) {
            throw Error(ErrorKind::invalid_partition, e.what());
        }
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i] && ++hits[i] > 1)
                throw Error(ErrorKind::invalid_partition,
                            "blocks overlap at '" + space.ids()[i] + "'");
    }
    for (std::size_t i = 0; i < hits.size(); ++i)
        if (hits[i] == 0)
            throw Error(ErrorKind::invalid_partition,
                        "outcome '" + space.ids()[i] + "' not covered");
}

double expand_conditional(const Event& a, const Partition& partition, const Event& b,
                          const ProbabilitySpace& space) {
    validate_partition(partition, space);
    const auto ma = space.mask(a);
    const auto mb = space.mask(b);
    const double pb = require_evidence(space, mb, "evidence");

    double sum = 0.0;
    for (const auto& block : partition.blocks) {
        const auto mh = space.mask(block);
        const double p_hb = space.mass_of(mask_and(mh, mb));
        if (p_hb <= 0.0) continue;
        // P(A|H_k and B); equals P(A|H_k) when B is the whole space or H_k lies inside B.
        const double a_given_hb = space.mass_of(mask_and(ma, mask_and(mh, mb))) / p_hb;
        sum += a_given_hb * (p_hb / pb);
    }
    return std::min(1.0, sum);
}

double expectation(const ProbabilitySpace& space, const std::function<double(double)>& f) {
    if (!space.has_observable())
        throw Error(ErrorKind::missing_observable, "space has no observable");
    const auto& x = *space.observable();
    double sum = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) sum += (f ? f(x[i]) : x[i]) * space.masses()[i];
    return sum;
}

bool check_independent(const std::vector<Event>& events, const Event& evidence,
                       const ProbabilitySpace& space) {
    const auto mh = space.mask(evidence);
    const double ph = require_evidence(space, mh, "evidence");

    std::vector<bool> joint = mh;
    double product = 1.0;
    for (const auto& e : events) {
        const auto me = space.mask(e);
        product *= space.mass_of(mask_and(me, mh)) / ph;
        joint = mask_and(joint, me);
    }
    return std::abs(space.mass_of(joint) / ph - product) <= kIndependenceTolerance;
}

CookieBowls cookie_bowls() {
    std::vector<std::string> ids;
    Event plain1, chip1, plain2, chip2;
    auto add = [&ids](Event& e, const std::string& prefix, int count) {
        for (int i = 0; i < count; ++i) {
            ids.push_back(prefix + std::to_string(i));
            e.members.insert(ids.back());
        }
    };
    add(plain1, "bowl1-plain-", 30);
    add(chip1, "bowl1-chip-", 10);
    add(plain2, "bowl2-plain-", 20);
    add(chip2, "bowl2-chip-", 20);

    return CookieBowls{
        .space = ProbabilitySpace::uniform(std::move(ids)),
        .bowl1 = event_union(plain1, chip1),
        .bowl2 = event_union(plain2, chip2),
        .plain1 = plain1,
        .chip1 = chip1,
        .plain2 = plain2,
        .chip2 = chip2,
        .plain = event_union(plain1, plain2),
    };
}

}  // namespace pbir
