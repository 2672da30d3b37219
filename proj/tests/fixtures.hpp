#pragma once

// Hand-drawn families used by several tests. Long rows list the levels of
// paths -n..-1, 1..n after each stage.

#include <memory>

#include "bcstar/path_family.hpp"
#include "bcstar/star_network.hpp"

namespace fixture {

using bcstar::LongRows;

/// [1,3] o [2,3] o [1,2] o [-1,1] in B3.
inline std::shared_ptr<const bcstar::StarNetwork> three_path_network() {
    return std::make_shared<const bcstar::StarNetwork>(
        bcstar::parse_network("[1,3] o [2,3] o [1,2] o [-1,1]", 3));
}

/// Type 3 -1 2: path 1 climbs to 3, path 2 ends at -1, path 3 ends at 2.
inline const LongRows sigma = {
    {-3, -2, -1, 1, 2, 3},
    {-1, -2, -3, 3, 2, 1},
    {-1, -2, -3, 3, 2, 1},
    {-2, -1, -3, 3, 1, 2},
    {-2, 1, -3, 3, -1, 2},
};

/// Paths -1 and -2 swap in the lower star of the first stage while paths 1
/// and 2 stay put.
inline const LongRows tau = {
    {-3, -2, -1, 1, 2, 3},
    {-3, -1, -2, 1, 2, 3},
    {-3, -1, -2, 1, 2, 3},
    {-3, -2, -1, 1, 2, 3},
    {-3, -2, -1, 1, 2, 3},
};

inline const LongRows pi = {
    {-3, -2, -1, 1, 2, 3}, {-3, -2, -1, 1, 2, 3}, {-3, -2, -1, 1, 2, 3},
    {-3, -2, -1, 1, 2, 3}, {-3, -2, -1, 1, 2, 3},
};

/// [-2,2] o [-1,1] o [1,2] o [-2,2] in B2, with its four-defect family.
inline std::shared_ptr<const bcstar::StarNetwork> four_defect_network() {
    return std::make_shared<const bcstar::StarNetwork>(
        bcstar::parse_network("[-2,2] o [-1,1] o [1,2] o [-2,2]", 2));
}

inline const LongRows four_defects = {
    {-2, -1, 1, 2},
    {2, 1, -1, -2},
    {2, -1, 1, -2},
    {1, -2, 2, -1},
    {1, -2, 2, -1},
};

} // namespace fixture
