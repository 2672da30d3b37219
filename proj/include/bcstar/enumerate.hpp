#pragma once

// Depth-first enumeration of BC-path families and the generating functions
// built from it. Families are generated stage by stage: a stage's choice is
// an element of its parabolic subgroup acting on levels, and the defects a
// stage adds depend only on the state entering it.
//
// count_families_serial is the reference kernel; count_families_parallel
// splits the work over first-stage choices with OpenMP and merges the
// per-thread counters at the end, so both return identical maps.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "bcstar/hecke.hpp"
#include "bcstar/path_family.hpp"
#include "bcstar/qpolynomial.hpp"
#include "bcstar/star_network.hpp"

namespace bcstar {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

struct EnumerationOptions {
    /// Refuse networks whose family_count_estimate exceeds this.
    std::uint64_t budget = kDefaultBudget;
    bool parallel = true;
    /// Only families of this type are produced; intermediate states that
    /// cannot reach it are cut off.
    std::optional<SignedPermutation> target;
    /// Largest backward-reachable state set kept for pruning; stages whose
    /// set would be larger are not pruned.
    std::size_t prune_cap = std::size_t{1} << 16;
};

/// Throws BudgetExceeded when the estimate exceeds the budget.
void check_budget(const StarNetwork& net, std::uint64_t budget);

/// (type, defect count) -> number of families.
using FamilyCounts = std::map<std::pair<SignedPermutation, int>, std::uint64_t>;

/// Called once per family with its boundary rows (row 0 is the identity).
using FamilyVisitor = std::function<void(std::span<const SignedPermutation> rows, int defects)>;

/// Serial visit of every family. On a network with condensed joins this
/// walks the expanded network and skips families with a defect between two
/// paths sharing a merged edge.
void for_each_family(const StarNetwork& net, const FamilyVisitor& visit,
                     const EnumerationOptions& options = {});

struct FamilyRecord {
    PathFamily family;
    SignedPermutation type;
    int defects;
};

/// Every family of an ordinary network; throws DomainError on condensed
/// joins.
std::vector<FamilyRecord> enumerate(const StarNetwork& net, const EnumerationOptions& options = {});

/// Canonical representatives over a network that may have condensed joins.
std::vector<FamilyRecord> enumerate_generalized(const StarNetwork& net,
                                                const EnumerationOptions& options = {});

FamilyCounts count_families_serial(const StarNetwork& net, const EnumerationOptions& options = {});
FamilyCounts count_families_parallel(const StarNetwork& net,
                                     const EnumerationOptions& options = {});
/// Dispatches on options.parallel.
FamilyCounts count_families(const StarNetwork& net, const EnumerationOptions& options = {});

/// Sum of count * q^d T_type.
HeckeElement counts_to_hecke(int n, const FamilyCounts& counts);

/// Sum over families of q^{defects} T_{type}.
HeckeElement graphical_expansion(const StarNetwork& net, const EnumerationOptions& options = {});

/// Sum over families of type u of q^{defects}.
QPolynomial kl_poly_extract(const StarNetwork& net, const SignedPermutation& u,
                            EnumerationOptions options = {});

/// Stage-by-stage wiring diagram of a generator sequence: s_0 becomes
/// [-1,1] and s_i becomes [i,i+1].
StarNetwork wiring_network(std::span<const int> gens, int n);

/// Sum over the 2^k subexpressions of q^{defects} T_{product}, where index j
/// is a defect when the product of the earlier choices has s_{i_j} as a
/// right descent.
HeckeElement deodhar_expand(std::span<const int> gens, int n);

} // namespace bcstar
