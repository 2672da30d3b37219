#pragma once

// Bruhat order, reversals and the interval parabolic subgroups W_J of B_n.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bcstar/group.hpp"

namespace bcstar {

enum class IntervalKind {
    trivial,   // [b, b]
    symmetric, // [-b, b], b > 0
    positive,  // [a, b], 0 < a < b
};

/// An interval [a, b] of [-n, n] \ {0} in one of the three reversal shapes.
struct Interval {
    int a = 1;
    int b = 1;
    int n = 1;

    /// Throws DomainError unless exactly one of a = b, a = -b (b > 0),
    /// 0 < a < b holds and the interval fits rank n.
    static Interval make(int a, int b, int n);

    IntervalKind kind() const noexcept {
        if (a == b) return IntervalKind::trivial;
        return a == -b ? IntervalKind::symmetric : IntervalKind::positive;
    }
    bool is_trivial() const noexcept { return a == b; }

    /// "[a,b]".
    std::string to_string() const;

    friend bool operator==(const Interval&, const Interval&) = default;
};

/// Parses "[a,b]" with ASCII digits and hyphen; whitespace around tokens is
/// allowed.
Interval parse_interval(std::string_view text, int n);

/// Generator indices of J_[a,b].
std::vector<int> generator_set(const Interval& iv);

/// The maximum-length element of W_J.
SignedPermutation reversal(const Interval& iv);

/// s_0 (s_1 s_0 s_1) ... for [-b, b]; s_a (s_{a+1} s_a) ... for [a, b].
std::vector<int> reversal_word(const Interval& iv);

/// Product of generators, left to right. An empty word gives the identity.
SignedPermutation word_product(int n, std::span<const int> word);

/// w * s_i < w, read off the inverse: letter i+1 precedes letter i (or
/// letter 1 is negated, for i = 0).
bool has_right_descent(const SignedPermutation& w, int i);

/// A reduced word, built by repeatedly stripping a right descent.
std::vector<int> reduced_word(const SignedPermutation& w);

/// v <= w. Scans a reduced word of w from the right, stripping each letter
/// that is a right descent of the remaining part of v; v <= w iff the
/// remainder is the identity.
bool bruhat_leq(const SignedPermutation& v, const SignedPermutation& w);

/// |W_J|: (b-a+1)! for positive intervals, 2^b b! for symmetric ones.
std::uint64_t parabolic_order(const Interval& iv);

/// Membership in W_J by its action on letters.
bool in_parabolic(const SignedPermutation& w, const Interval& iv);

class ParabolicSubgroup {
public:
    /// Breadth-first closure over generator_set(iv).
    explicit ParabolicSubgroup(const Interval& iv);

    const Interval& interval() const noexcept { return interval_; }
    /// Sorted by operator<.
    const std::vector<SignedPermutation>& elements() const& noexcept { return elements_; }
    std::vector<SignedPermutation> elements() && noexcept { return std::move(elements_); }
    std::size_t size() const noexcept { return elements_.size(); }
    bool contains(const SignedPermutation& w) const;
    const SignedPermutation& longest() const noexcept { return longest_; }

private:
    Interval interval_;
    std::vector<SignedPermutation> elements_;
    SignedPermutation longest_;
};

inline ParabolicSubgroup parabolic_elements(const Interval& iv) { return ParabolicSubgroup(iv); }

/// Minimality of w in wW_J via the increasing-inverse criterion on the
/// interval's letters.
bool is_min_coset_rep(const SignedPermutation& w, const Interval& iv);

/// Minimality of w in wW_J via w s > w for every s in J.
bool is_min_coset_rep_by_descents(const SignedPermutation& w, const Interval& iv);

struct CosetFactorization {
    SignedPermutation rep;  // minimal in w W_J
    SignedPermutation tail; // in W_J, w = rep * tail
};

CosetFactorization coset_decompose(const SignedPermutation& w, const Interval& iv);

inline SignedPermutation min_coset_rep(const SignedPermutation& w, const Interval& iv) {
    return coset_decompose(w, iv).rep;
}

/// v W_J <= w W_J by comparing minimal representatives.
bool coset_leq(const SignedPermutation& v, const SignedPermutation& w, const Interval& iv);

/// Same order, comparing maximal representatives.
bool coset_leq_by_max(const SignedPermutation& v, const SignedPermutation& w, const Interval& iv);

/// Same order: some element of v W_J is below some element of w W_J.
bool coset_leq_by_any(const SignedPermutation& v, const SignedPermutation& w, const Interval& iv);

} // namespace bcstar
