#pragma once

// Per-stage data shared by the serial and OpenMP kernels.

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "bcstar/enumerate.hpp"

namespace bcstar::detail {

struct StagePlan {
    std::vector<SignedPermutation> choices;
    std::vector<Star> stars;
    /// Level ranges of merged edges into this stage; empty for ordinary joins.
    std::vector<std::pair<int, int>> merged;
};

struct Plan {
    int n = 1;
    std::vector<StagePlan> stages;
    /// allowed[k]: states permitted after stage k; nullopt means unpruned.
    std::vector<std::optional<std::unordered_set<SignedPermutation>>> allowed;
    std::optional<SignedPermutation> target;
};

Plan make_plan(const StarNetwork& net, const EnumerationOptions& options);

/// Defects added by the stage, or -1 when the generalized filter rejects
/// the entry state.
int entry_defects(const StagePlan& stage, const SignedPermutation& entry);

inline bool admits(const Plan& plan, std::size_t k, const SignedPermutation& state) {
    const auto& a = plan.allowed[k];
    return !a || a->contains(state);
}

struct CountKey {
    SignedPermutation type;
    int defects;
    friend bool operator==(const CountKey&, const CountKey&) = default;
};

struct CountKeyHash {
    std::size_t operator()(const CountKey& k) const noexcept {
        return std::hash<SignedPermutation>{}(k.type) * 1315423911u + static_cast<unsigned>(k.defects);
    }
};

using LocalCounts = std::unordered_map<CountKey, std::uint64_t, CountKeyHash>;

/// Counts every family whose first `k` stages are fixed with state
/// `state` and `defects` so far.
void count_from(const Plan& plan, std::size_t k, const SignedPermutation& state, int defects,
                LocalCounts& out);

FamilyCounts to_family_counts(const LocalCounts& local);

} // namespace bcstar::detail
