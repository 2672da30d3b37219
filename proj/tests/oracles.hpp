#pragma once

// Brute-force references and random generators shared by the unit tests.
// None of these call the library routine they are used to check.

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <unordered_map>
#include <vector>

#include "bcstar/enumerate.hpp"
#include "bcstar/group.hpp"
#include "bcstar/hecke.hpp"
#include "bcstar/parabolic.hpp"

namespace oracle {

using bcstar::SignedPermutation;

/// Word length of every element by breadth-first search from the identity.
inline std::unordered_map<SignedPermutation, int> word_lengths(int n) {
    std::unordered_map<SignedPermutation, int> dist{{bcstar::identity(n), 0}};
    std::deque<SignedPermutation> queue{bcstar::identity(n)};
    while (!queue.empty()) {
        const auto w = queue.front();
        queue.pop_front();
        for (int i = 0; i < n; ++i) {
            const auto ws = w * bcstar::generator(n, i);
            if (dist.emplace(ws, dist.at(w) + 1).second) queue.push_back(ws);
        }
    }
    return dist;
}

/// All reflections u s u^-1.
inline std::vector<SignedPermutation> reflections(int n) {
    std::set<SignedPermutation> out;
    for (const auto& u : bcstar::all_elements(n)) {
        for (int i = 0; i < n; ++i) out.insert(u * bcstar::generator(n, i) * bcstar::inverse(u));
    }
    return {out.begin(), out.end()};
}

/// Bruhat down-set of every element: closure of w -> w t with l(w t) < l(w).
inline std::map<SignedPermutation, std::set<SignedPermutation>> bruhat_downsets(int n) {
    const auto len = word_lengths(n);
    const auto refl = reflections(n);
    auto elems = bcstar::all_elements(n);
    std::sort(elems.begin(), elems.end(),
              [&](const auto& a, const auto& b) { return len.at(a) < len.at(b); });
    std::map<SignedPermutation, std::set<SignedPermutation>> down;
    for (const auto& w : elems) {
        std::set<SignedPermutation> s{w};
        for (const auto& t : refl) {
            const auto wt = w * t;
            if (len.at(wt) < len.at(w)) s.insert(down.at(wt).begin(), down.at(wt).end());
        }
        down.emplace(w, std::move(s));
    }
    return down;
}

inline SignedPermutation random_element(int n, std::mt19937_64& rng) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    std::shuffle(w.begin(), w.end(), rng);
    for (int& x : w) {
        if (rng() & 1) x = -x;
    }
    return SignedPermutation::from_window(w);
}

inline bcstar::Interval random_interval(int n, std::mt19937_64& rng) {
    for (;;) {
        const int a = static_cast<int>(rng() % (2 * n + 1)) - n;
        const int b = static_cast<int>(rng() % n) + 1;
        if (a == -b || (0 < a && a < b)) return bcstar::Interval::make(a, b, n);
    }
}

/// Random polynomial with small nonnegative coefficients.
inline bcstar::QPolynomial random_poly(std::mt19937_64& rng) {
    std::vector<std::int64_t> c(rng() % 3 + 1);
    for (auto& x : c) x = static_cast<std::int64_t>(rng() % 3);
    return bcstar::QPolynomial(std::move(c));
}

inline bcstar::HeckeElement random_hecke(int n, std::mt19937_64& rng, int terms) {
    bcstar::HeckeElement h(n);
    for (int t = 0; t < terms; ++t) h.add(random_element(n, rng), random_poly(rng));
    return h;
}

/// T_w as a product of T_s along any reduced word, built with only the
/// quadratic relation applied to single basis elements.
inline bcstar::HeckeElement basis_by_word(const SignedPermutation& w) {
    bcstar::HeckeElement h = bcstar::HeckeElement::basis(bcstar::identity(w.rank()));
    for (int i : bcstar::reduced_word(w)) h = bcstar::multiply_by_generator(h, i);
    return h;
}

} // namespace oracle
