#include "bcstar/verify.hpp"

#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <unordered_map>

#include "bcstar/error.hpp"
#include "bcstar/json_io.hpp"

namespace bcstar {

std::vector<Interval> nontrivial_intervals(int n) {
    std::vector<Interval> out;
    for (int b = 1; b <= n; ++b) out.push_back(Interval::make(-b, b, n));
    for (int a = 1; a <= n; ++a) {
        for (int b = a + 1; b <= n; ++b) out.push_back(Interval::make(a, b, n));
    }
    return out;
}

HeckeElement hecke_side(const StarNetwork& net) {
    const auto ivs = net.intervals();
    HeckeElement h = product_of_reversal_kls(net.rank(), ivs);
    if (net.is_ordinary()) return h;
    const auto m = merged_multiplicities(net);
    return h.divided(r_of_v(m));
}

namespace {

using Suite = std::function<void(SuiteReport&, const EnumerationOptions&)>;

void fail(SuiteReport& r, const std::string& detail) {
    r.passed = false;
    if (r.failed++ == 0) r.detail = detail;
}

// A family of the first type where the two expansions disagree.
std::string trace_for_mismatch(const StarNetwork& net, const HeckeElement& enumerated,
                               const HeckeElement& expected, const EnumerationOptions& options) {
    const HeckeElement diff = enumerated - expected;
    if (diff.is_zero()) return {};
    const SignedPermutation w = diff.canonical_terms().front().first;
    std::string out = "first differing type " + w.to_string() + ": enumerated " +
                      enumerated.coefficient(w).to_string() + ", expected " +
                      expected.coefficient(w).to_string();
    EnumerationOptions opts = options;
    opts.target = w;
    const auto shared = std::make_shared<const StarNetwork>(net);
    bool traced = false;
    for_each_family(
        net,
        [&](std::span<const SignedPermutation> rows, int) {
            if (traced) return;
            traced = true;
            const auto f = PathFamily::from_rows(
                shared, std::vector<SignedPermutation>(rows.begin(), rows.end()));
            out += "\nfamily trace: " + family_trace(f).dump();
        },
        opts);
    return out;
}

void check_dual(SuiteReport& r, const StarNetwork& net, const EnumerationOptions& options) {
    ++r.checked;
    const HeckeElement expected = hecke_side(net);
    const HeckeElement enumerated = graphical_expansion(net, options);
    if (enumerated != expected) {
        fail(r, "network " + net.to_string() + "\n" +
                    trace_for_mismatch(net, enumerated, expected, options));
    }
}

void for_each_sequence(const std::vector<Interval>& pool, std::size_t max_len,
                       const std::function<void(const std::vector<Interval>&)>& visit) {
    std::vector<Interval> seq;
    auto walk = [&](auto&& self) -> void {
        if (!seq.empty()) visit(seq);
        if (seq.size() == max_len) return;
        for (const auto& iv : pool) {
            seq.push_back(iv);
            self(self);
            seq.pop_back();
        }
    };
    walk(walk);
}

StarNetwork ordinary(int n, const std::vector<Interval>& ivs) {
    std::vector<Stage> stages;
    for (const auto& iv : ivs) stages.push_back(Stage{iv, false});
    return StarNetwork(n, std::move(stages));
}

Suite lengths_suite(int n) {
    return [n](SuiteReport& r, const EnumerationOptions&) {
        // Word length by breadth-first search over the Cayley graph.
        std::unordered_map<SignedPermutation, int> dist{{identity(n), 0}};
        std::deque<SignedPermutation> queue{identity(n)};
        while (!queue.empty()) {
            const auto w = queue.front();
            queue.pop_front();
            for (int i = 0; i < n; ++i) {
                const auto ws = w * generator(n, i);
                if (dist.emplace(ws, dist[w] + 1).second) queue.push_back(ws);
            }
        }
        for (const auto& w : all_elements(n)) {
            ++r.checked;
            const int a = length(w);
            const int b = length_via_long(w);
            const int c = dist.at(w);
            if (a != b || a != c) {
                fail(r, w.to_string() + ": length " + std::to_string(a) + ", long-notation count " +
                            std::to_string(b) + ", word length " + std::to_string(c));
            }
        }
    };
}

void minreps_suite(SuiteReport& r, const EnumerationOptions&) {
    const int n = 3;
    std::vector<Interval> ivs = nontrivial_intervals(n);
    for (int b = 1; b <= n; ++b) ivs.push_back(Interval::make(b, b, n));
    for (const auto& iv : ivs) {
        for (const auto& w : all_elements(n)) {
            ++r.checked;
            if (is_min_coset_rep(w, iv) != is_min_coset_rep_by_descents(w, iv)) {
                fail(r, "criteria disagree on " + w.to_string() + " for " + iv.to_string());
            }
            const auto [rep, tail] = coset_decompose(w, iv);
            if (rep * tail != w || !is_min_coset_rep(rep, iv) || !in_parabolic(tail, iv) ||
                length(w) != length(rep) + length(tail)) {
                fail(r, "coset factorization of " + w.to_string() + " for " + iv.to_string() +
                            " is not length additive");
            }
        }
    }
}

Suite main_suite(int n, std::size_t max_len) {
    return [n, max_len](SuiteReport& r, const EnumerationOptions& options) {
        for_each_sequence(nontrivial_intervals(n), max_len, [&](const std::vector<Interval>& seq) {
            check_dual(r, ordinary(n, seq), options);
        });
    };
}

Suite deodhar_suite(int n, std::size_t max_len) {
    return [n, max_len](SuiteReport& r, const EnumerationOptions& options) {
        std::vector<int> gens;
        auto walk = [&](auto&& self) -> void {
            ++r.checked;
            const HeckeElement d = deodhar_expand(gens, n);
            const StarNetwork net = wiring_network(gens, n);
            const HeckeElement g = graphical_expansion(net, options);
            const HeckeElement h = hecke_side(net);
            if (d != g || g != h) {
                std::string word;
                for (int i : gens) word += (word.empty() ? "" : ",") + std::to_string(i);
                fail(r, "gens (" + word + "): subexpressions " + d.to_string() + ", families " +
                            g.to_string() + ", Hecke " + h.to_string());
            }
            if (gens.size() == max_len) return;
            for (int i = 0; i < n; ++i) {
                gens.push_back(i);
                self(self);
                gens.pop_back();
            }
        };
        walk(walk);
    };
}

void collapse_check(SuiteReport& r, const StarNetwork& condensed, const EnumerationOptions& options) {
    ++r.checked;
    const QPolynomial factor = r_of_v(merged_multiplicities(condensed));
    const HeckeElement g = graphical_expansion(condensed.expanded(), options);
    const HeckeElement f = graphical_expansion(condensed, options);
    if (g != f.scaled(factor)) {
        fail(r, "expanded " + condensed.expanded().to_string() + " gives " + g.to_string() +
                    " but " + factor.to_string() + " times condensed " + condensed.to_string() +
                    " gives " + f.scaled(factor).to_string());
    }
    check_dual(r, condensed, options);
}

void collapse_eq57_suite(SuiteReport& r, const EnumerationOptions& options) {
    collapse_check(r, parse_network("[-2,2] o [-1,1] o [1,2] * [-2,2]", 2), options);
}

void collapse_m3_suite(SuiteReport& r, const EnumerationOptions& options) {
    collapse_check(r, parse_network("[1,3] * [1,3]", 3), options);
    collapse_check(r, parse_network("[-3,3] * [1,3]", 3), options);
    collapse_check(r, parse_network("[3,4] * [1,4] * [1,3]", 4), options);
}

// |Pi_{wv,d}(F)| = sum over u in W_J of |Pi_{wu,d-l(u)}(F')| and is
// independent of v, for F = F' o F_J.
void prop51_suite(SuiteReport& r, const EnumerationOptions& options) {
    const int n = 2;
    for_each_sequence(nontrivial_intervals(n), 3, [&](const std::vector<Interval>& seq) {
        if (seq.size() < 2) return;
        const StarNetwork net = ordinary(n, seq);
        const StarNetwork head = net.prefix(net.size() - 1);
        const Interval iv = seq.back();
        const FamilyCounts full = count_families(net, options);
        const FamilyCounts part = count_families(head, options);
        auto count = [](const FamilyCounts& c, const SignedPermutation& w, int d) -> std::uint64_t {
            auto it = c.find({w, d});
            return it == c.end() ? 0 : it->second;
        };
        const ParabolicSubgroup wj(iv);
        const int max_d = 4 * static_cast<int>(net.size()) * n * n;
        for (const auto& w : all_elements(n)) {
            if (!is_min_coset_rep(w, iv)) continue;
            for (int d = 0; d <= max_d; ++d) {
                std::uint64_t expected = 0;
                for (const auto& u : wj.elements()) {
                    const int lu = length(u);
                    if (d >= lu) expected += count(part, w * u, d - lu);
                }
                for (const auto& v : wj.elements()) {
                    ++r.checked;
                    const std::uint64_t got = count(full, w * v, d);
                    if (got != expected) {
                        fail(r, net.to_string() + ": |Pi(" + (w * v).to_string() + ", d=" +
                                    std::to_string(d) + ")| = " + std::to_string(got) +
                                    ", expected " + std::to_string(expected));
                    }
                }
            }
        }
    });
}

void smooth_suite(SuiteReport& r, const EnumerationOptions& options) {
    const int n = 3;
    for (const auto& iv : nontrivial_intervals(n)) {
        const StarNetwork net = simple_star(iv, n);
        const ParabolicSubgroup wj(iv);
        for (const auto& u : all_elements(n)) {
            ++r.checked;
            const QPolynomial p = kl_poly_extract(net, u, options);
            const QPolynomial expected = wj.contains(u) ? QPolynomial(1) : QPolynomial();
            if (p != expected) {
                fail(r, iv.to_string() + ", u = " + u.to_string() + ": got " + p.to_string() +
                            ", expected " + expected.to_string());
            }
        }
    }
}

void builtins_suite(SuiteReport& r, const EnumerationOptions& options) {
    for (const char* name : {"F3412", "F4231"}) {
        const StarNetwork net = builtin_network(name);
        check_dual(r, net, options);
        const HeckeElement expansion = graphical_expansion(net, options);
        for (const auto& [u, p] : expansion.terms()) {
            ++r.checked;
            if (p[0] != 1) {
                fail(r, std::string(name) + ": P at " + u.to_string() + " is " + p.to_string() +
                            ", constant term is not 1");
            }
        }
    }
    ++r.checked;
    const QPolynomial p = kl_poly_extract(builtin_network("F3412"), identity(4), options);
    if (p != QPolynomial{1, 1}) fail(r, "F3412 at the identity gives " + p.to_string());
}

const std::map<std::string, Suite, std::less<>>& registry() {
    static const std::map<std::string, Suite, std::less<>> suites = {
        {"lengths-b1", lengths_suite(1)},
        {"lengths-b2", lengths_suite(2)},
        {"lengths-b3", lengths_suite(3)},
        {"lengths-b4", lengths_suite(4)},
        {"minreps-b3", minreps_suite},
        {"main-b2", main_suite(2, 3)},
        {"main-b3", main_suite(3, 2)},
        {"deodhar-b2", deodhar_suite(2, 6)},
        {"deodhar-b3", deodhar_suite(3, 5)},
        {"collapse-eq57", collapse_eq57_suite},
        {"collapse-m3", collapse_m3_suite},
        {"prop51-b2", prop51_suite},
        {"smooth-b3", smooth_suite},
        {"builtins", builtins_suite},
    };
    return suites;
}

} // namespace

std::vector<std::string> suite_names() {
    std::vector<std::string> out;
    for (const auto& [name, suite] : registry()) out.push_back(name);
    return out;
}

SuiteReport run_suite(std::string_view name, const EnumerationOptions& options) {
    const auto& suites = registry();
    auto it = suites.find(name);
    if (it == suites.end()) throw DomainError("unknown suite '" + std::string(name) + "'");
    SuiteReport report;
    report.name = std::string(name);
    it->second(report, options);
    return report;
}

} // namespace bcstar
