#pragma once

// BC-path families covering a star network.
//
// A family is stored as one signed permutation per stage boundary: row k maps
// a path index i to the level of path i after stage k, so row 0 is the
// identity and the last row is the family's type. Storing rows as signed
// permutations builds the reflection symmetry and the no-collision rule into
// the representation; from_levels checks both on raw input.

#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bcstar/group.hpp"
#include "bcstar/star_network.hpp"

namespace bcstar {

struct DefectTriple {
    int i;
    int j;
    int k; // 1-based stage index

    friend bool operator==(const DefectTriple&, const DefectTriple&) = default;
    friend auto operator<=>(const DefectTriple&, const DefectTriple&) = default;
};

enum class FamilyViolation {
    none,
    wrong_shape,        // row count or row width does not fit the network
    source_row,         // row 0 is not the identity
    collision,          // two paths share a level, or a level is out of range
    reflection,         // level of path -i is not minus the level of path i
    stage_legality,     // a level moved outside the stars of its stage
    shared_edge_defect, // defect between two paths on one merged edge
};

std::string_view to_string(FamilyViolation v);

/// Long level rows: rows[k] lists the levels of paths -n..-1, 1..n after
/// stage k, in that order.
using LongRows = std::vector<std::vector<int>>;

FamilyViolation check_levels(const StarNetwork& net, const LongRows& rows);

/// Entry state `entry` meets stage k (0-based): the defects it creates there.
/// Depends only on the entry state.
void stage_defects(const StarNetwork& net, std::size_t k, const SignedPermutation& entry,
                   std::vector<DefectTriple>& out);
int stage_defect_count(const StarNetwork& net, std::size_t k, const SignedPermutation& entry);

/// True when some defect at stage k joins two paths that share a merged edge
/// into that stage. Always false for ordinary joins.
bool has_shared_edge_defect(const StarNetwork& net, std::size_t k, const SignedPermutation& entry);

class PathFamily {
public:
    /// Throws DomainError naming the FamilyViolation.
    static PathFamily from_rows(std::shared_ptr<const StarNetwork> net,
                                std::vector<SignedPermutation> rows);
    static PathFamily from_levels(std::shared_ptr<const StarNetwork> net, const LongRows& rows);

    const StarNetwork& network() const noexcept { return *net_; }
    const std::shared_ptr<const StarNetwork>& network_ptr() const noexcept { return net_; }
    const std::vector<SignedPermutation>& rows() const noexcept { return rows_; }

    /// Level of path i after stage k (k = 0 is the source column).
    int level(std::size_t k, int i) const { return rows_.at(k)(i); }
    int sink(int i) const { return rows_.back()(i); }

    /// Stage-k local permutation acting on levels.
    SignedPermutation local(std::size_t k) const;

    LongRows long_rows() const;

private:
    PathFamily(std::shared_ptr<const StarNetwork> net, std::vector<SignedPermutation> rows)
        : net_(std::move(net)), rows_(std::move(rows)) {}

    std::shared_ptr<const StarNetwork> net_;
    std::vector<SignedPermutation> rows_;
};

/// u with u_i = sink(pi_i).
SignedPermutation family_type(const PathFamily& f);

/// Sorted by stage, then i, then j.
std::vector<DefectTriple> defects(const PathFamily& f);
int defect_count(const PathFamily& f);

/// Pairs (i, j) satisfying the bound with sink(pi_j) < sink(pi_i).
std::vector<std::pair<int, int>> sink_inversion_pairs(const PathFamily& f, PairBound bound);

/// Drops the last stage.
PathFamily truncate_family(const PathFamily& f);

/// Appends the stage F_iv (ordinary join) whose local permutation is tail.
/// Throws DomainError unless tail lies in W_J.
PathFamily extend_family(const PathFamily& f, const Interval& iv, const SignedPermutation& tail);

} // namespace bcstar
