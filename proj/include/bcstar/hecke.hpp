#pragma once

// Exact arithmetic in the type-BC Iwahori-Hecke algebra over Z[q], in the
// natural basis {T_w}, plus the coset-sum module H_J used for reversal
// Kazhdan-Lusztig elements.

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "bcstar/group.hpp"
#include "bcstar/parabolic.hpp"
#include "bcstar/qpolynomial.hpp"

namespace bcstar {

class HeckeElement {
public:
    explicit HeckeElement(int rank);

    /// c * T_w.
    static HeckeElement basis(const SignedPermutation& w, const QPolynomial& c = QPolynomial(1));

    int rank() const noexcept { return rank_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    /// Zero sums drop the term.
    void add(const SignedPermutation& w, const QPolynomial& c);
    QPolynomial coefficient(const SignedPermutation& w) const;

    /// Keyed by operator< on SignedPermutation.
    const std::map<SignedPermutation, QPolynomial>& terms() const noexcept { return terms_; }

    /// Ordered by length, then lexicographically by window.
    std::vector<std::pair<SignedPermutation, QPolynomial>> canonical_terms() const;

    HeckeElement& operator+=(const HeckeElement& other);
    HeckeElement& operator-=(const HeckeElement& other);
    friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
    friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }

    /// Multiplies every coefficient by c.
    HeckeElement scaled(const QPolynomial& c) const;

    /// Divides every coefficient by d exactly (throws on a remainder).
    HeckeElement divided(const QPolynomial& d) const;

    friend bool operator==(const HeckeElement&, const HeckeElement&) = default;

    /// "(1 + q) T[1 2] + T[-1 2]" in canonical order; "0" when empty.
    std::string to_string() const;

private:
    int rank_;
    std::map<SignedPermutation, QPolynomial> terms_;
};

/// A * T_{s_i}: T_w T_s = q T_{ws} + (q-1) T_w when ws < w, else T_{ws}.
HeckeElement multiply_by_generator(const HeckeElement& a, int i);

/// A * B, expanding each T_v of B along a reduced word of v.
HeckeElement natural_product(const HeckeElement& a, const HeckeElement& b);

/// The Kazhdan-Lusztig element of a reversal: sum of T_v over v in W_J.
HeckeElement kl_reversal(const Interval& iv);

/// Left-to-right product of kl_reversal over the intervals; T_e when empty.
HeckeElement product_of_reversal_kls(int n, std::span<const Interval> intervals);

/// An element of H_J: sum of c_w T_{w W_J} over minimal representatives w.
class CosetSum {
public:
    explicit CosetSum(const Interval& iv);

    const Interval& interval() const noexcept { return interval_; }
    int rank() const noexcept { return interval_.n; }

    /// Adds c * T_{rep W_J}; rep must be a minimal coset representative.
    void add(const SignedPermutation& rep, const QPolynomial& c);
    QPolynomial coefficient(const SignedPermutation& rep) const;
    const std::map<SignedPermutation, QPolynomial>& reps() const noexcept { return reps_; }

    friend bool operator==(const CosetSum&, const CosetSum&) = default;

private:
    Interval interval_;
    std::map<SignedPermutation, QPolynomial> reps_;
};

/// T_{s_i} * C, acting coset by coset according to whether s_i w W_J lies
/// below, above, or equals w W_J.
CosetSum douglass_action(int i, const CosetSum& c);

/// Rewrites prefix * kl_reversal(iv) in the coset basis: the coefficient of
/// T_{w W_J} is the sum over u in W_J of q^{l(u)} c_{wu}.
CosetSum coset_expansion(const HeckeElement& prefix, const Interval& iv);

/// Expands each T_{w W_J} into its natural-basis terms.
HeckeElement flatten(const CosetSum& c);

} // namespace bcstar
