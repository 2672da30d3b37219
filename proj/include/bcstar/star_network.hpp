#pragma once

// Type-BC star networks: concatenations of simple star networks F_[a,b],
// where each join is either ordinary (o) or condensed (*). A condensed join
// merges the parallel edges between the star centers of consecutive stages
// into a single edge labeled with its multiplicity.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bcstar/parabolic.hpp"

namespace bcstar {

enum class JoinKind { ordinary, condensed };

enum class StarSide { upper, lower, center };

std::string_view to_string(StarSide side);

/// One interior vertex of a stage, covering the levels lo..hi (0 skipped).
struct Star {
    StarSide side;
    int lo;
    int hi;

    bool contains(int level) const noexcept { return level != 0 && lo <= level && level <= hi; }
    int size() const noexcept { return hi - lo + 1 - (lo < 0 && hi > 0 ? 1 : 0); }
};

struct Stage {
    Interval interval;
    /// True when joined to the previous stage by a condensed concatenation.
    bool condensed_join = false;

    /// None for [b,b], one center for [-b,b], upper then lower for [a,b].
    std::vector<Star> stars() const;
};

/// A multiplicity-labeled edge between the star of stage `stage - 1` and the
/// star of stage `stage` that share the levels lo..hi.
struct MergedEdge {
    int stage;     // 0-based index of the head stage
    StarSide side; // side of the head star
    int multiplicity;
    int lo;
    int hi;

    friend bool operator==(const MergedEdge&, const MergedEdge&) = default;
};

class StarNetwork {
public:
    /// Validates every stage against rank n and every condensed join.
    StarNetwork(int n, std::vector<Stage> stages);

    int rank() const noexcept { return rank_; }
    const std::vector<Stage>& stages() const noexcept { return stages_; }
    std::size_t size() const noexcept { return stages_.size(); }
    bool is_ordinary() const noexcept;

    /// The ordinary network with the same stage sequence.
    StarNetwork expanded() const;
    /// Copy with the join into stage k replaced.
    StarNetwork with_join(std::size_t k, JoinKind kind) const;
    /// The first `count` stages.
    StarNetwork prefix(std::size_t count) const;

    std::vector<Interval> intervals() const;

    /// "[1,3] o [2,3] * [1,2]".
    std::string to_string() const;

    friend bool operator==(const StarNetwork& a, const StarNetwork& b) {
        if (a.rank_ != b.rank_ || a.stages_.size() != b.stages_.size()) return false;
        for (std::size_t k = 0; k < a.stages_.size(); ++k) {
            if (a.stages_[k].interval != b.stages_[k].interval ||
                a.stages_[k].condensed_join != b.stages_[k].condensed_join)
                return false;
        }
        return true;
    }

private:
    int rank_;
    std::vector<Stage> stages_;
};

StarNetwork simple_star(const Interval& iv, int n);

/// Each entry's JoinKind describes its join to the previous stage; the first
/// must be ordinary. A condensed join that merges no parallel edges is an
/// error, as is one between two self-symmetric center stars.
StarNetwork concatenate(std::span<const std::pair<Interval, JoinKind>> stages, int n);

/// Multiplicity-labeled edges on or above the symmetry line: one record per
/// reflected pair, with the edge that touches an upper star.
std::vector<MergedEdge> merged_edges(const StarNetwork& net);

/// Every multiplicity-labeled edge, both members of each reflected pair.
std::vector<MergedEdge> all_merged_edges(const StarNetwork& net);

/// Multiplicities of merged_edges(net).
std::vector<int> merged_multiplicities(const StarNetwork& net);

/// "F3412" or "F4231", both of rank 4.
StarNetwork builtin_network(std::string_view name);

/// Stages separated by "o" (ordinary) or "*" (condensed), each an interval.
StarNetwork parse_network(std::string_view text, int n);

/// Product of |W_J| over all stages, saturating at UINT64_MAX.
std::uint64_t family_count_estimate(const StarNetwork& net);

/// The explicit directed multigraph of a network.
struct NetworkGraph {
    enum class VertexKind { source, sink, interior };
    struct Vertex {
        VertexKind kind;
        int stage; // -1 for sources, size() for sinks
        int level; // source/sink label; 0 for interior vertices
        StarSide side;
    };
    struct Edge {
        int from;
        int to;
        int multiplicity;
    };
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;

    int interior_count() const;
    int in_degree(int v) const;
    int out_degree(int v) const;
    /// Index of the reflected vertex.
    int reflection(int v) const;
};

NetworkGraph build_graph(const StarNetwork& net);

/// Every edge has a reflected edge of equal multiplicity.
bool is_reflection_symmetric(const NetworkGraph& graph);

/// Graphviz text. Sources sit at x = 0, stage k at x = k + 1, sinks at
/// x = size() + 1; y is the level.
std::string render_dot(const StarNetwork& net);

} // namespace bcstar
