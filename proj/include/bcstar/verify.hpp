#pragma once

// Named invariant suites run by `bcstar verify`.

#include <string>
#include <string_view>
#include <vector>

#include "bcstar/enumerate.hpp"

namespace bcstar {

struct SuiteReport {
    std::string name;
    bool passed = true;
    std::size_t checked = 0;
    std::size_t failed = 0;
    /// First counterexample, including a family trace where one applies.
    std::string detail;
};

std::vector<std::string> suite_names();

/// Throws DomainError for an unknown suite.
SuiteReport run_suite(std::string_view name, const EnumerationOptions& options = {});

/// Nontrivial intervals of rank n: [-b,b] for b = 1..n, then [a,b], a < b.
std::vector<Interval> nontrivial_intervals(int n);

/// Hecke product of the network's intervals, divided by r(v) when the
/// network has condensed joins.
HeckeElement hecke_side(const StarNetwork& net);

} // namespace bcstar
