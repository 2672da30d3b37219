#include "bcstar/parabolic.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <unordered_set>

#include "bcstar/error.hpp"

namespace bcstar {

Interval Interval::make(int a, int b, int n) {
    const bool shape_ok = a == b || (a == -b && b > 0) || (0 < a && a < b);
    if (!shape_ok) {
        throw DomainError("[" + std::to_string(a) + "," + std::to_string(b) +
                          "] is not a reversal interval");
    }
    if (n < 1 || n > kMaxRank || b > n || a < -n || b < 1) {
        throw DomainError("interval [" + std::to_string(a) + "," + std::to_string(b) +
                          "] does not fit rank " + std::to_string(n));
    }
    return Interval{a, b, n};
}

std::string Interval::to_string() const {
    return "[" + std::to_string(a) + "," + std::to_string(b) + "]";
}

namespace {

void skip_spaces(std::string_view text, std::size_t& pos) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
}

int parse_int(std::string_view text, std::size_t& pos) {
    skip_spaces(text, pos);
    int value = 0;
    const char* first = text.data() + pos;
    auto [ptr, ec] = std::from_chars(first, text.data() + text.size(), value);
    if (ec != std::errc{}) throw ParseError("expected an integer", pos);
    pos = static_cast<std::size_t>(ptr - text.data());
    return value;
}

void expect(std::string_view text, std::size_t& pos, char c) {
    skip_spaces(text, pos);
    if (pos >= text.size() || text[pos] != c) {
        throw ParseError(std::string("expected '") + c + "'", pos);
    }
    ++pos;
}

} // namespace

Interval parse_interval(std::string_view text, int n) {
    std::size_t pos = 0;
    expect(text, pos, '[');
    const std::size_t a_pos = pos;
    const int a = parse_int(text, pos);
    expect(text, pos, ',');
    const int b = parse_int(text, pos);
    expect(text, pos, ']');
    skip_spaces(text, pos);
    if (pos != text.size()) throw ParseError("trailing characters after interval", pos);
    try {
        return Interval::make(a, b, n);
    } catch (const DomainError& e) {
        throw ParseError(e.what(), a_pos);
    }
}

std::vector<int> generator_set(const Interval& iv) {
    std::vector<int> gens;
    switch (iv.kind()) {
    case IntervalKind::trivial:
        break;
    case IntervalKind::symmetric:
        for (int i = 0; i < iv.b; ++i) gens.push_back(i);
        break;
    case IntervalKind::positive:
        for (int i = iv.a; i < iv.b; ++i) gens.push_back(i);
        break;
    }
    return gens;
}

SignedPermutation reversal(const Interval& iv) {
    std::vector<int> window(iv.n);
    for (int i = 1; i <= iv.n; ++i) window[i - 1] = i;
    if (iv.kind() == IntervalKind::symmetric) {
        for (int i = 1; i <= iv.b; ++i) window[i - 1] = -i;
    } else if (iv.kind() == IntervalKind::positive) {
        for (int i = iv.a; i <= iv.b; ++i) window[i - 1] = iv.a + iv.b - i;
    }
    return SignedPermutation::from_window(window);
}

std::vector<int> reversal_word(const Interval& iv) {
    std::vector<int> word;
    if (iv.kind() == IntervalKind::symmetric) {
        // s_0 (s_1 s_0 s_1) (s_2 s_1 s_0 s_1 s_2) ...
        for (int top = 0; top < iv.b; ++top) {
            for (int i = top; i > 0; --i) word.push_back(i);
            word.push_back(0);
            for (int i = 1; i <= top; ++i) word.push_back(i);
        }
    } else if (iv.kind() == IntervalKind::positive) {
        // s_a (s_{a+1} s_a) (s_{a+2} s_{a+1} s_a) ...
        for (int top = iv.a; top < iv.b; ++top) {
            for (int i = top; i >= iv.a; --i) word.push_back(i);
        }
    }
    return word;
}

SignedPermutation word_product(int n, std::span<const int> word) {
    SignedPermutation w = identity(n);
    for (int i : word) w = w * generator(n, i);
    return w;
}

bool has_right_descent(const SignedPermutation& w, int i) {
    if (i < 0 || i >= w.rank()) {
        throw DomainError("generator index " + std::to_string(i) + " out of range");
    }
    // Signed position of letter x in w.
    auto position = [&](int x) {
        for (int p = 1; p <= w.rank(); ++p) {
            if (w(p) == x) return p;
            if (w(p) == -x) return -p;
        }
        return 0;
    };
    if (i == 0) return position(1) < 0;
    return position(i) > position(i + 1);
}

std::vector<int> reduced_word(const SignedPermutation& w) {
    std::vector<int> reversed;
    SignedPermutation x = w;
    const int n = w.rank();
    while (!x.is_identity()) {
        for (int i = 0; i < n; ++i) {
            if (has_right_descent(x, i)) {
                reversed.push_back(i);
                x = x * generator(n, i);
                break;
            }
        }
    }
    return {reversed.rbegin(), reversed.rend()};
}

bool bruhat_leq(const SignedPermutation& v, const SignedPermutation& w) {
    if (v.rank() != w.rank()) throw DomainError("rank mismatch in Bruhat comparison");
    const std::vector<int> word = reduced_word(w);
    SignedPermutation x = v;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        if (has_right_descent(x, *it)) x = x * generator(v.rank(), *it);
    }
    return x.is_identity();
}

std::uint64_t parabolic_order(const Interval& iv) {
    std::uint64_t order = 1;
    switch (iv.kind()) {
    case IntervalKind::trivial:
        break;
    case IntervalKind::symmetric:
        for (int i = 1; i <= iv.b; ++i) order *= 2u * static_cast<std::uint64_t>(i);
        break;
    case IntervalKind::positive:
        for (int i = 2; i <= iv.b - iv.a + 1; ++i) order *= static_cast<std::uint64_t>(i);
        break;
    }
    return order;
}

bool in_parabolic(const SignedPermutation& w, const Interval& iv) {
    if (w.rank() != iv.n) throw DomainError("rank mismatch in parabolic membership");
    for (int i = 1; i <= iv.n; ++i) {
        const int x = w(i);
        switch (iv.kind()) {
        case IntervalKind::trivial:
            if (x != i) return false;
            break;
        case IntervalKind::symmetric:
            if (i > iv.b && x != i) return false;
            break;
        case IntervalKind::positive:
            if (i >= iv.a && i <= iv.b) {
                if (x < iv.a || x > iv.b) return false;
            } else if (x != i) {
                return false;
            }
            break;
        }
    }
    return true;
}

ParabolicSubgroup::ParabolicSubgroup(const Interval& iv) : interval_(iv) {
    const std::vector<int> gens = generator_set(iv);
    std::vector<SignedPermutation> gen_elems;
    for (int g : gens) gen_elems.push_back(generator(iv.n, g));

    std::unordered_set<SignedPermutation> seen{identity(iv.n)};
    std::deque<SignedPermutation> queue{identity(iv.n)};
    while (!queue.empty()) {
        const SignedPermutation x = queue.front();
        queue.pop_front();
        for (const auto& s : gen_elems) {
            SignedPermutation y = x * s;
            if (seen.insert(y).second) queue.push_back(y);
        }
    }
    elements_.assign(seen.begin(), seen.end());
    std::sort(elements_.begin(), elements_.end());
    longest_ = *std::max_element(elements_.begin(), elements_.end(),
                                 [](const auto& l, const auto& r) { return length(l) < length(r); });
}

bool ParabolicSubgroup::contains(const SignedPermutation& w) const {
    return std::binary_search(elements_.begin(), elements_.end(), w);
}

bool is_min_coset_rep(const SignedPermutation& w, const Interval& iv) {
    if (w.rank() != iv.n) throw DomainError("rank mismatch in coset test");
    const SignedPermutation inv = inverse(w);
    int first = 0;
    switch (iv.kind()) {
    case IntervalKind::trivial:
        return true;
    case IntervalKind::symmetric:
        // inv(-b) < ... < inv(-1) < inv(1) < ... < inv(b)
        first = -iv.b;
        break;
    case IntervalKind::positive:
        // inv(-b) < ... < inv(-a) is the mirror of inv(a) < ... < inv(b).
        first = iv.a;
        break;
    }
    int prev = inv(first);
    for (int x = first + 1; x <= iv.b; ++x) {
        if (x == 0) continue;
        if (inv(x) <= prev) return false;
        prev = inv(x);
    }
    return true;
}

bool is_min_coset_rep_by_descents(const SignedPermutation& w, const Interval& iv) {
    for (int s : generator_set(iv)) {
        if (length(w * generator(iv.n, s)) < length(w)) return false;
    }
    return true;
}

CosetFactorization coset_decompose(const SignedPermutation& w, const Interval& iv) {
    if (w.rank() != iv.n) throw DomainError("rank mismatch in coset decomposition");
    const std::vector<int> gens = generator_set(iv);
    SignedPermutation rep = w;
    SignedPermutation tail = identity(iv.n);
    bool stripped = true;
    while (stripped) {
        stripped = false;
        for (int s : gens) {
            if (has_right_descent(rep, s)) {
                const SignedPermutation g = generator(iv.n, s);
                rep = rep * g;
                tail = g * tail;
                stripped = true;
                break;
            }
        }
    }
    return {rep, tail};
}

bool coset_leq(const SignedPermutation& v, const SignedPermutation& w, const Interval& iv) {
    return bruhat_leq(min_coset_rep(v, iv), min_coset_rep(w, iv));
}

bool coset_leq_by_max(const SignedPermutation& v, const SignedPermutation& w, const Interval& iv) {
    const SignedPermutation top = reversal(iv);
    return bruhat_leq(min_coset_rep(v, iv) * top, min_coset_rep(w, iv) * top);
}

bool coset_leq_by_any(const SignedPermutation& v, const SignedPermutation& w, const Interval& iv) {
    const ParabolicSubgroup group(iv);
    const SignedPermutation vr = min_coset_rep(v, iv);
    const SignedPermutation wr = min_coset_rep(w, iv);
    for (const auto& x : group.elements()) {
        for (const auto& y : group.elements()) {
            if (bruhat_leq(vr * x, wr * y)) return true;
        }
    }
    return false;
}

} // namespace bcstar
