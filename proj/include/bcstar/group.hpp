#pragma once

// Signed permutations: the hyperoctahedral group B_n.
//
// An element is stored by its short one-line window w_1 ... w_n; the long
// notation w_{-n} ... w_{-1} w_1 ... w_n is implied by w_{-i} = -w_i and is
// only materialized on request.
//
// Multiplication is letters-first: (u * v)(j) = v(u(j)). Under this
// convention right multiplication by a generator acts on letters and left
// multiplication acts on positions, so s_0 * s_1 has window -2 1 3 4.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bcstar {

inline constexpr int kMaxRank = 12;

class SignedPermutation {
public:
    SignedPermutation() = default;

    /// Validates that the absolute values are exactly {1, ..., n}.
    static SignedPermutation from_window(std::span<const int> window);
    static SignedPermutation from_window(std::initializer_list<int> window) {
        return from_window(std::span<const int>(window.begin(), window.size()));
    }

    int rank() const noexcept { return rank_; }

    /// w(i) for i in [-n, n] \ {0}.
    int operator()(int i) const noexcept {
        return i > 0 ? letters_[i - 1] : -letters_[-i - 1];
    }

    std::vector<int> window() const;
    bool is_identity() const noexcept;

    /// Packs the window into 5-bit fields; distinct elements of equal rank
    /// get distinct codes.
    std::uint64_t code() const noexcept;

    std::string to_string() const;

    friend bool operator==(const SignedPermutation& a, const SignedPermutation& b) noexcept {
        return a.rank_ == b.rank_ && a.letters_ == b.letters_;
    }
    /// Rank first, then lexicographic on the window.
    friend std::strong_ordering operator<=>(const SignedPermutation& a,
                                            const SignedPermutation& b) noexcept;

private:
    friend SignedPermutation compose(const SignedPermutation&, const SignedPermutation&);
    friend SignedPermutation inverse(const SignedPermutation&);
    friend SignedPermutation identity(int);

    std::uint8_t rank_ = 0;
    std::array<std::int8_t, kMaxRank> letters_{};
};

SignedPermutation identity(int n);

/// s_0 negates position 1; s_i (i >= 1) swaps positions i and i+1.
SignedPermutation generator(int n, int i);

/// Letters-first product (u * v)(j) = v(u(j)). Throws DomainError on rank
/// mismatch.
SignedPermutation compose(const SignedPermutation& u, const SignedPermutation& v);

inline SignedPermutation operator*(const SignedPermutation& u, const SignedPermutation& v) {
    return compose(u, v);
}

/// Entry i of the result is the signed position of letter i in w.
SignedPermutation inverse(const SignedPermutation& w);

/// w_{-n} ... w_{-1} w_1 ... w_n.
std::vector<int> long_one_line(const SignedPermutation& w);

/// inv(w_1 ... w_n) + sum over negative letters of |w_i|.
int length(const SignedPermutation& w);

/// Number of letter pairs (i, j), |i| <= j, i != j, with j before i in the
/// long one-line notation.
int length_via_long(const SignedPermutation& w);

/// The two index-pair predicates used for inversions and defects:
/// inclusive is |i| <= j with i != j (equivalently -j <= i < j), strict is
/// |i| < j.
enum class PairBound { inclusive, strict };

constexpr bool eligible_pair(int i, int j, PairBound bound) noexcept {
    const int abs_i = i < 0 ? -i : i;
    return bound == PairBound::inclusive ? (i != j && abs_i <= j) : abs_i < j;
}

/// Every element of B_n, ordered by operator<.
std::vector<SignedPermutation> all_elements(int n);

/// Parses "-2 1 3 4": whitespace separated integers with an optional
/// leading '-'. When expected_rank > 0 the window length must match.
SignedPermutation parse_signed_permutation(std::string_view text, int expected_rank = 0);

struct Pattern {
    std::vector<int> letters;

    /// Throws DomainError when letters repeat.
    explicit Pattern(std::vector<int> letters);
};

/// True iff some subword of `word` is order-isomorphic to the pattern.
bool matches_pattern(std::span<const int> word, const Pattern& pattern);

/// True iff the long one-line notation matches neither 3412 nor 4231.
bool avoids_3412_4231(const SignedPermutation& w);

} // namespace bcstar

template <>
struct std::hash<bcstar::SignedPermutation> {
    std::size_t operator()(const bcstar::SignedPermutation& w) const noexcept {
        return std::hash<std::uint64_t>{}(w.code() * 31u + static_cast<unsigned>(w.rank()));
    }
};
