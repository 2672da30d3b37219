#include "bcstar/group.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>

#include "bcstar/error.hpp"

namespace bcstar {

namespace {

void check_rank(int n) {
    if (n < 1 || n > kMaxRank) {
        throw DomainError("rank must be in [1, " + std::to_string(kMaxRank) + "], got " +
                          std::to_string(n));
    }
}

} // namespace

SignedPermutation SignedPermutation::from_window(std::span<const int> window) {
    const int n = static_cast<int>(window.size());
    check_rank(n);
    std::array<bool, kMaxRank + 1> seen{};
    SignedPermutation w;
    w.rank_ = static_cast<std::uint8_t>(n);
    for (int i = 0; i < n; ++i) {
        const int a = std::abs(window[i]);
        if (a < 1 || a > n || seen[a]) {
            throw DomainError("not a signed permutation window: letter " +
                              std::to_string(window[i]) + " at position " + std::to_string(i + 1));
        }
        seen[a] = true;
        w.letters_[i] = static_cast<std::int8_t>(window[i]);
    }
    return w;
}

std::vector<int> SignedPermutation::window() const {
    return {letters_.begin(), letters_.begin() + rank_};
}

bool SignedPermutation::is_identity() const noexcept {
    for (int i = 0; i < rank_; ++i) {
        if (letters_[i] != i + 1) return false;
    }
    return true;
}

std::uint64_t SignedPermutation::code() const noexcept {
    std::uint64_t c = 0;
    for (int i = 0; i < rank_; ++i) {
        c = (c << 5) | static_cast<std::uint64_t>(letters_[i] + kMaxRank);
    }
    return c;
}

std::string SignedPermutation::to_string() const {
    std::string out;
    for (int i = 0; i < rank_; ++i) {
        if (i) out += ' ';
        out += std::to_string(letters_[i]);
    }
    return out;
}

std::strong_ordering operator<=>(const SignedPermutation& a, const SignedPermutation& b) noexcept {
    if (auto c = a.rank_ <=> b.rank_; c != 0) return c;
    for (int i = 0; i < a.rank_; ++i) {
        if (auto c = a.letters_[i] <=> b.letters_[i]; c != 0) return c;
    }
    return std::strong_ordering::equal;
}

SignedPermutation identity(int n) {
    check_rank(n);
    SignedPermutation w;
    w.rank_ = static_cast<std::uint8_t>(n);
    for (int i = 0; i < n; ++i) w.letters_[i] = static_cast<std::int8_t>(i + 1);
    return w;
}

SignedPermutation generator(int n, int i) {
    check_rank(n);
    if (i < 0 || i >= n) {
        throw DomainError("generator index " + std::to_string(i) + " out of range for rank " +
                          std::to_string(n));
    }
    std::vector<int> window(n);
    std::iota(window.begin(), window.end(), 1);
    if (i == 0) {
        window[0] = -1;
    } else {
        std::swap(window[i - 1], window[i]);
    }
    return SignedPermutation::from_window(window);
}

SignedPermutation compose(const SignedPermutation& u, const SignedPermutation& v) {
    if (u.rank_ != v.rank_) {
        throw DomainError("rank mismatch: " + std::to_string(u.rank_) + " vs " +
                          std::to_string(v.rank_));
    }
    SignedPermutation r;
    r.rank_ = u.rank_;
    for (int j = 0; j < u.rank_; ++j) {
        r.letters_[j] = static_cast<std::int8_t>(v(u.letters_[j]));
    }
    return r;
}

SignedPermutation inverse(const SignedPermutation& w) {
    SignedPermutation r;
    r.rank_ = w.rank_;
    for (int i = 0; i < w.rank_; ++i) {
        const int letter = w.letters_[i];
        const int pos = i + 1;
        if (letter > 0) {
            r.letters_[letter - 1] = static_cast<std::int8_t>(pos);
        } else {
            r.letters_[-letter - 1] = static_cast<std::int8_t>(-pos);
        }
    }
    return r;
}

std::vector<int> long_one_line(const SignedPermutation& w) {
    const int n = w.rank();
    std::vector<int> out;
    out.reserve(2 * n);
    for (int i = -n; i <= n; ++i) {
        if (i != 0) out.push_back(w(i));
    }
    return out;
}

int length(const SignedPermutation& w) {
    const int n = w.rank();
    int len = 0;
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            if (w(i) > w(j)) ++len;
        }
        if (w(i) < 0) len += -w(i);
    }
    return len;
}

int length_via_long(const SignedPermutation& w) {
    const std::vector<int> word = long_one_line(w);
    int count = 0;
    for (std::size_t p = 0; p < word.size(); ++p) {
        for (std::size_t r = p + 1; r < word.size(); ++r) {
            // word[p] plays j (earlier), word[r] plays i (later).
            if (eligible_pair(word[r], word[p], PairBound::inclusive)) ++count;
        }
    }
    return count;
}

std::vector<SignedPermutation> all_elements(int n) {
    check_rank(n);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<SignedPermutation> out;
    std::vector<int> window(n);
    do {
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            for (int i = 0; i < n; ++i) {
                window[i] = (mask >> i) & 1u ? -perm[i] : perm[i];
            }
            out.push_back(SignedPermutation::from_window(window));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::sort(out.begin(), out.end());
    return out;
}

SignedPermutation parse_signed_permutation(std::string_view text, int expected_rank) {
    std::vector<int> window;
    std::size_t pos = 0;
    while (pos < text.size()) {
        if (text[pos] == ' ' || text[pos] == '\t') {
            ++pos;
            continue;
        }
        int value = 0;
        const char* first = text.data() + pos;
        const char* last = text.data() + text.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc{} || (ptr != last && *ptr != ' ' && *ptr != '\t')) {
            throw ParseError("expected a signed integer letter", pos);
        }
        window.push_back(value);
        pos = static_cast<std::size_t>(ptr - text.data());
    }
    if (window.empty()) throw ParseError("empty signed permutation", 0);
    if (expected_rank > 0 && static_cast<int>(window.size()) != expected_rank) {
        throw ParseError("expected " + std::to_string(expected_rank) + " letters, got " +
                             std::to_string(window.size()),
                         0);
    }
    try {
        return SignedPermutation::from_window(window);
    } catch (const DomainError& e) {
        throw ParseError(e.what(), 0);
    }
}

Pattern::Pattern(std::vector<int> l) : letters(std::move(l)) {
    std::vector<int> sorted = letters;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw DomainError("pattern letters must be distinct");
    }
}

namespace {

bool extend_match(std::span<const int> word, const Pattern& p, std::vector<std::size_t>& chosen,
                  std::size_t start) {
    const std::size_t k = p.letters.size();
    if (chosen.size() == k) return true;
    const std::size_t h = chosen.size();
    for (std::size_t idx = start; idx + (k - h) <= word.size(); ++idx) {
        bool ok = true;
        for (std::size_t g = 0; g < h && ok; ++g) {
            ok = (word[chosen[g]] < word[idx]) == (p.letters[g] < p.letters[h]);
        }
        if (!ok) continue;
        chosen.push_back(idx);
        if (extend_match(word, p, chosen, idx + 1)) return true;
        chosen.pop_back();
    }
    return false;
}

} // namespace

bool matches_pattern(std::span<const int> word, const Pattern& pattern) {
    if (pattern.letters.size() > word.size()) return false;
    std::vector<std::size_t> chosen;
    return extend_match(word, pattern, chosen, 0);
}

bool avoids_3412_4231(const SignedPermutation& w) {
    static const Pattern p3412({3, 4, 1, 2});
    static const Pattern p4231({4, 2, 3, 1});
    const std::vector<int> word = long_one_line(w);
    return !matches_pattern(word, p3412) && !matches_pattern(word, p4231);
}

} // namespace bcstar
