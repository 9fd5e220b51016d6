#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sqdepth/instance.hpp"

namespace sqdepth {

// Ground set of I\J under divisibility, elements in canonical order.
// Closed under intervals: u,v in the poset and u|w|v imply w in the poset.
struct Poset {
    int n = 0;
    std::vector<Monomial> elements;

    int size() const { return int(elements.size()); }
    int min_degree() const;
    int max_degree() const;
};

Poset build_poset(const Instance& inst);

struct Interval {
    Monomial bottom, top;
};

struct IntervalPartition {
    std::vector<Interval> intervals;

    // Smallest top degree; the partition's value.
    int value() const;
};

// Partition file format: {"intervals": [[[1,2],[1,2,3]], ...]}
IntervalPartition parse_partition(const std::string& json_text);
IntervalPartition load_partition(const std::string& path);
std::string serialize_partition(const IntervalPartition& p);

// Checks bottoms/tops lie in the poset, bottoms divide tops, the intervals
// are pairwise disjoint, every poset element is covered, and value() >= k.
// Violations are reported with the first offending interval/element named.
struct PartitionCheck {
    bool ok = false;
    int value = 0;
    std::vector<std::string> violations;
};

PartitionCheck verify_partition(const Poset& p, const IntervalPartition& part, int k);

enum class SearchStatus { Proven, Refuted, Timeout };

struct DecisionResult {
    SearchStatus status = SearchStatus::Refuted;
    std::optional<IntervalPartition> certificate;
    long long nodes = 0;
};

inline constexpr long long kDefaultNodeBudget = 10'000'000;

// Decides whether a partition into intervals with all top degrees >= k
// exists.  Exact-cover backtracking on the canonically least uncovered
// element u: any interval covering u has a bottom dividing u, hence
// canonically no later than u and itself uncovered, so it starts at u.
DecisionResult sdepth_decision(const Poset& p, int k, long long budget = kDefaultNodeBudget);

struct SdepthResult {
    int value = 0;  // largest k proven (exact) or best lower bound (timeout)
    bool exact = false;
    IntervalPartition certificate;
    long long nodes = 0;
};

// Increments k from the minimal degree until refuted or budget exhausted.
SdepthResult sdepth(const Poset& p, long long budget = kDefaultNodeBudget);

// Exhaustive maximum of value() over all interval partitions; |p| <= 14.
int brute_force_sdepth(const Poset& p);

}  // namespace sqdepth
