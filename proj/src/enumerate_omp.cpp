#include "bcstar/enumerate.hpp"
#include "bcstar/error.hpp"
#include "enumerate_plan.hpp"

namespace bcstar {

FamilyCounts count_families_parallel(const StarNetwork& net, const EnumerationOptions& options) {
    check_budget(net, options.budget);
    const detail::Plan plan = detail::make_plan(net, options);
    const SignedPermutation start = identity(net.rank());
    if (plan.stages.empty()) {
        detail::LocalCounts local;
        detail::count_from(plan, 0, start, 0, local);
        return detail::to_family_counts(local);
    }
    // The first stage never adds defects or trips the merged-edge filter:
    // every path still sits at its source level.
    const auto& first = plan.stages.front().choices;
    const long tasks = static_cast<long>(first.size());
    FamilyCounts merged;
#pragma omp parallel
    {
        detail::LocalCounts local;
#pragma omp for schedule(dynamic)
        for (long t = 0; t < tasks; ++t) {
            const SignedPermutation next = start * first[static_cast<std::size_t>(t)];
            if (detail::admits(plan, 1, next)) detail::count_from(plan, 1, next, 0, local);
        }
#pragma omp critical(bcstar_merge_counts)
        {
            for (const auto& [key, count] : local) merged[{key.type, key.defects}] += count;
        }
    }
    return merged;
}

} // namespace bcstar
