#include <algorithm>
#include <memory>

#include "bcstar/enumerate.hpp"
#include "bcstar/error.hpp"
#include "enumerate_plan.hpp"

namespace bcstar {

namespace detail {

Plan make_plan(const StarNetwork& net, const EnumerationOptions& options) {
    Plan plan;
    plan.n = net.rank();
    plan.target = options.target;
    const auto merged = all_merged_edges(net);
    for (std::size_t k = 0; k < net.size(); ++k) {
        StagePlan stage;
        stage.choices = ParabolicSubgroup(net.stages()[k].interval).elements();
        stage.stars = net.stages()[k].stars();
        for (const auto& e : merged) {
            if (e.stage == static_cast<int>(k)) stage.merged.emplace_back(e.lo, e.hi);
        }
        plan.stages.push_back(std::move(stage));
    }
    plan.allowed.resize(net.size() + 1);
    if (!options.target) return plan;
    if (options.target->rank() != plan.n) throw DomainError("target rank does not match network");
    std::unordered_set<SignedPermutation> reach{*options.target};
    plan.allowed[net.size()] = reach;
    for (std::size_t k = net.size(); k-- > 1;) {
        std::unordered_set<SignedPermutation> prev;
        for (const auto& x : reach) {
            for (const auto& s : plan.stages[k].choices) prev.insert(x * inverse(s));
        }
        if (prev.size() > options.prune_cap) break;
        reach = std::move(prev);
        plan.allowed[k] = reach;
    }
    return plan;
}

int entry_defects(const StagePlan& stage, const SignedPermutation& entry) {
    const SignedPermutation at = inverse(entry);
    int count = 0;
    for (const Star& star : stage.stars) {
        for (int x = star.lo; x <= star.hi; ++x) {
            if (x == 0) continue;
            const int j = at(x);
            for (int y = x + 1; y <= star.hi; ++y) {
                if (y == 0) continue;
                if (!eligible_pair(at(y), j, PairBound::inclusive)) continue;
                for (const auto& [lo, hi] : stage.merged) {
                    if (lo <= x && y <= hi) return -1;
                }
                ++count;
            }
        }
    }
    return count;
}

void count_from(const Plan& plan, std::size_t k, const SignedPermutation& state, int defects,
                LocalCounts& out) {
    if (k == plan.stages.size()) {
        ++out[CountKey{state, defects}];
        return;
    }
    const StagePlan& stage = plan.stages[k];
    const int added = entry_defects(stage, state);
    if (added < 0) return;
    for (const auto& s : stage.choices) {
        const SignedPermutation next = state * s;
        if (admits(plan, k + 1, next)) count_from(plan, k + 1, next, defects + added, out);
    }
}

FamilyCounts to_family_counts(const LocalCounts& local) {
    FamilyCounts out;
    for (const auto& [key, count] : local) out[{key.type, key.defects}] += count;
    return out;
}

} // namespace detail

void check_budget(const StarNetwork& net, std::uint64_t budget) {
    const std::uint64_t estimate = family_count_estimate(net);
    if (estimate > budget) throw BudgetExceeded(estimate, budget);
}

void for_each_family(const StarNetwork& net, const FamilyVisitor& visit,
                     const EnumerationOptions& options) {
    check_budget(net, options.budget);
    const detail::Plan plan = detail::make_plan(net, options);
    std::vector<SignedPermutation> rows{identity(net.rank())};
    auto walk = [&](auto&& self, std::size_t k, int defects) -> void {
        if (k == plan.stages.size()) {
            visit(rows, defects);
            return;
        }
        const auto& stage = plan.stages[k];
        const int added = detail::entry_defects(stage, rows.back());
        if (added < 0) return;
        for (const auto& s : stage.choices) {
            SignedPermutation next = rows.back() * s;
            if (!detail::admits(plan, k + 1, next)) continue;
            rows.push_back(next);
            self(self, k + 1, defects + added);
            rows.pop_back();
        }
    };
    if (detail::admits(plan, 0, rows.back())) walk(walk, 0, 0);
}

namespace {

std::vector<FamilyRecord> collect(const StarNetwork& net, const EnumerationOptions& options) {
    auto shared = std::make_shared<const StarNetwork>(net);
    std::vector<FamilyRecord> out;
    for_each_family(
        net,
        [&](std::span<const SignedPermutation> rows, int defects) {
            auto family =
                PathFamily::from_rows(shared, std::vector<SignedPermutation>(rows.begin(), rows.end()));
            out.push_back(FamilyRecord{std::move(family), rows.back(), defects});
        },
        options);
    return out;
}

} // namespace

std::vector<FamilyRecord> enumerate(const StarNetwork& net, const EnumerationOptions& options) {
    if (!net.is_ordinary()) {
        throw DomainError("enumerate needs an ordinary network; use enumerate_generalized");
    }
    return collect(net, options);
}

std::vector<FamilyRecord> enumerate_generalized(const StarNetwork& net,
                                                const EnumerationOptions& options) {
    return collect(net, options);
}

FamilyCounts count_families_serial(const StarNetwork& net, const EnumerationOptions& options) {
    check_budget(net, options.budget);
    const detail::Plan plan = detail::make_plan(net, options);
    detail::LocalCounts local;
    detail::count_from(plan, 0, identity(net.rank()), 0, local);
    return detail::to_family_counts(local);
}

FamilyCounts count_families(const StarNetwork& net, const EnumerationOptions& options) {
    return options.parallel ? count_families_parallel(net, options)
                            : count_families_serial(net, options);
}

HeckeElement counts_to_hecke(int n, const FamilyCounts& counts) {
    HeckeElement out(n);
    for (const auto& [key, count] : counts) {
        out.add(key.first, QPolynomial::monomial(key.second, static_cast<std::int64_t>(count)));
    }
    return out;
}

HeckeElement graphical_expansion(const StarNetwork& net, const EnumerationOptions& options) {
    return counts_to_hecke(net.rank(), count_families(net, options));
}

QPolynomial kl_poly_extract(const StarNetwork& net, const SignedPermutation& u,
                            EnumerationOptions options) {
    if (u.rank() != net.rank()) throw DomainError("target rank does not match network");
    options.target = u;
    QPolynomial out;
    for (const auto& [key, count] : count_families(net, options)) {
        if (key.first == u) out.add_monomial(key.second, static_cast<std::int64_t>(count));
    }
    return out;
}

StarNetwork wiring_network(std::span<const int> gens, int n) {
    std::vector<Stage> stages;
    for (int g : gens) {
        if (g < 0 || g >= n) {
            throw DomainError("generator index " + std::to_string(g) + " out of range for rank " +
                              std::to_string(n));
        }
        stages.push_back(Stage{g == 0 ? Interval::make(-1, 1, n) : Interval::make(g, g + 1, n), false});
    }
    return StarNetwork(n, std::move(stages));
}

HeckeElement deodhar_expand(std::span<const int> gens, int n) {
    if (n < 1 || n > kMaxRank) throw DomainError("invalid rank");
    for (int g : gens) {
        if (g < 0 || g >= n) {
            throw DomainError("generator index " + std::to_string(g) + " out of range for rank " +
                              std::to_string(n));
        }
    }
    HeckeElement out(n);
    std::vector<SignedPermutation> gen;
    for (int i = 0; i < n; ++i) gen.push_back(generator(n, i));
    auto walk = [&](auto&& self, std::size_t j, const SignedPermutation& prefix, int defects) -> void {
        if (j == gens.size()) {
            out.add(prefix, QPolynomial::monomial(defects));
            return;
        }
        const int i = gens[j];
        const int d = has_right_descent(prefix, i) ? 1 : 0;
        self(self, j + 1, prefix, defects + d);
        self(self, j + 1, prefix * gen[i], defects + d);
    };
    walk(walk, 0, identity(n), 0);
    return out;
}

} // namespace bcstar
