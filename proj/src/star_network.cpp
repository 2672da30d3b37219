#include "bcstar/star_network.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>
#include <tuple>

#include "bcstar/error.hpp"

namespace bcstar {

std::string_view to_string(StarSide side) {
    switch (side) {
    case StarSide::upper:
        return "upper";
    case StarSide::lower:
        return "lower";
    case StarSide::center:
        return "center";
    }
    return "?";
}

std::vector<Star> Stage::stars() const {
    switch (interval.kind()) {
    case IntervalKind::trivial:
        return {};
    case IntervalKind::symmetric:
        return {Star{StarSide::center, -interval.b, interval.b}};
    case IntervalKind::positive:
        return {Star{StarSide::upper, interval.a, interval.b},
                Star{StarSide::lower, -interval.b, -interval.a}};
    }
    return {};
}

namespace {

int overlap_size(const Star& x, const Star& y, int& lo, int& hi) {
    lo = std::max(x.lo, y.lo);
    hi = std::min(x.hi, y.hi);
    if (lo > hi) return 0;
    return Star{StarSide::center, lo, hi}.size();
}

std::vector<MergedEdge> merged_into(const StarNetwork& net, std::size_t k, bool upper_only) {
    std::vector<MergedEdge> out;
    const auto tails = net.stages()[k - 1].stars();
    const auto heads = net.stages()[k].stars();
    for (const Star& x : tails) {
        for (const Star& y : heads) {
            int lo = 0;
            int hi = 0;
            const int m = overlap_size(x, y, lo, hi);
            if (m < 2) continue;
            if (upper_only && x.side != StarSide::upper && y.side != StarSide::upper) continue;
            out.push_back(MergedEdge{static_cast<int>(k), y.side, m, lo, hi});
        }
    }
    return out;
}

} // namespace

StarNetwork::StarNetwork(int n, std::vector<Stage> stages) : rank_(n), stages_(std::move(stages)) {
    if (n < 1 || n > kMaxRank) throw DomainError("invalid network rank");
    for (std::size_t k = 0; k < stages_.size(); ++k) {
        const Stage& st = stages_[k];
        // Re-validate the interval against this rank.
        (void)Interval::make(st.interval.a, st.interval.b, n);
        if (st.interval.n != n) throw DomainError("stage interval rank differs from network rank");
        if (!st.condensed_join) continue;
        if (k == 0) throw DomainError("the first stage cannot have a condensed join");
        const auto tails = stages_[k - 1].stars();
        const auto heads = st.stars();
        bool merges = false;
        for (const Star& x : tails) {
            for (const Star& y : heads) {
                int lo = 0;
                int hi = 0;
                if (overlap_size(x, y, lo, hi) < 2) continue;
                if (x.side == StarSide::center && y.side == StarSide::center) {
                    throw DomainError("condensed join " + stages_[k - 1].interval.to_string() +
                                      " * " + st.interval.to_string() +
                                      " would merge edges between two self-symmetric centers");
                }
                merges = true;
            }
        }
        if (!merges) {
            throw DomainError("condensed join " + stages_[k - 1].interval.to_string() + " * " +
                              st.interval.to_string() + " has no parallel edges to merge");
        }
    }
}

bool StarNetwork::is_ordinary() const noexcept {
    return std::none_of(stages_.begin(), stages_.end(),
                        [](const Stage& s) { return s.condensed_join; });
}

StarNetwork StarNetwork::expanded() const {
    std::vector<Stage> st = stages_;
    for (auto& s : st) s.condensed_join = false;
    return StarNetwork(rank_, std::move(st));
}

StarNetwork StarNetwork::with_join(std::size_t k, JoinKind kind) const {
    if (k >= stages_.size()) throw DomainError("stage index out of range");
    std::vector<Stage> st = stages_;
    st[k].condensed_join = kind == JoinKind::condensed;
    return StarNetwork(rank_, std::move(st));
}

StarNetwork StarNetwork::prefix(std::size_t count) const {
    if (count > stages_.size()) throw DomainError("prefix longer than network");
    return StarNetwork(rank_, std::vector<Stage>(stages_.begin(), stages_.begin() + count));
}

std::vector<Interval> StarNetwork::intervals() const {
    std::vector<Interval> out;
    for (const auto& s : stages_) out.push_back(s.interval);
    return out;
}

std::string StarNetwork::to_string() const {
    std::string out;
    for (std::size_t k = 0; k < stages_.size(); ++k) {
        if (k) out += stages_[k].condensed_join ? " * " : " o ";
        out += stages_[k].interval.to_string();
    }
    return out;
}

StarNetwork simple_star(const Interval& iv, int n) {
    return StarNetwork(n, {Stage{Interval::make(iv.a, iv.b, n), false}});
}

StarNetwork concatenate(std::span<const std::pair<Interval, JoinKind>> stages, int n) {
    std::vector<Stage> out;
    for (const auto& [iv, kind] : stages) {
        out.push_back(Stage{Interval::make(iv.a, iv.b, n), kind == JoinKind::condensed});
    }
    return StarNetwork(n, std::move(out));
}

std::vector<MergedEdge> merged_edges(const StarNetwork& net) {
    std::vector<MergedEdge> out;
    for (std::size_t k = 1; k < net.size(); ++k) {
        if (!net.stages()[k].condensed_join) continue;
        auto edges = merged_into(net, k, true);
        out.insert(out.end(), edges.begin(), edges.end());
    }
    return out;
}

std::vector<MergedEdge> all_merged_edges(const StarNetwork& net) {
    std::vector<MergedEdge> out;
    for (std::size_t k = 1; k < net.size(); ++k) {
        if (!net.stages()[k].condensed_join) continue;
        auto edges = merged_into(net, k, false);
        out.insert(out.end(), edges.begin(), edges.end());
    }
    return out;
}

std::vector<int> merged_multiplicities(const StarNetwork& net) {
    std::vector<int> out;
    for (const auto& e : merged_edges(net)) out.push_back(e.multiplicity);
    return out;
}

StarNetwork builtin_network(std::string_view name) {
    if (name == "F3412") return parse_network("[2,3] o [1,2] o [3,4] o [2,3]", 4);
    if (name == "F4231") return parse_network("[1,2] o [2,4] o [1,2]", 4);
    throw DomainError("unknown builtin network '" + std::string(name) + "'");
}

StarNetwork parse_network(std::string_view text, int n) {
    std::vector<std::pair<Interval, JoinKind>> stages;
    std::size_t pos = 0;
    JoinKind next_join = JoinKind::ordinary;
    auto skip = [&] {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    };
    while (true) {
        skip();
        if (pos >= text.size()) throw ParseError("expected an interval", pos);
        if (text[pos] != '[') throw ParseError("expected '['", pos);
        const std::size_t close = text.find(']', pos);
        if (close == std::string_view::npos) throw ParseError("unterminated interval", pos);
        Interval iv;
        try {
            iv = parse_interval(text.substr(pos, close - pos + 1), n);
        } catch (const ParseError& e) {
            throw ParseError("bad interval", pos + e.position());
        }
        if (stages.empty() && next_join == JoinKind::condensed) {
            throw ParseError("network cannot start with a condensed join", pos);
        }
        stages.emplace_back(iv, next_join);
        pos = close + 1;
        skip();
        if (pos >= text.size()) break;
        if (text[pos] == 'o') {
            next_join = JoinKind::ordinary;
        } else if (text[pos] == '*') {
            next_join = JoinKind::condensed;
        } else {
            throw ParseError("expected 'o' or '*' between stages", pos);
        }
        ++pos;
    }
    try {
        return concatenate(stages, n);
    } catch (const DomainError& e) {
        throw ParseError(e.what(), 0);
    }
}

std::uint64_t family_count_estimate(const StarNetwork& net) {
    std::uint64_t total = 1;
    for (const auto& s : net.stages()) {
        const std::uint64_t order = parabolic_order(s.interval);
        if (total > std::numeric_limits<std::uint64_t>::max() / order) {
            return std::numeric_limits<std::uint64_t>::max();
        }
        total *= order;
    }
    return total;
}

int NetworkGraph::interior_count() const {
    return static_cast<int>(std::count_if(vertices.begin(), vertices.end(), [](const Vertex& v) {
        return v.kind == VertexKind::interior;
    }));
}

int NetworkGraph::in_degree(int v) const {
    int d = 0;
    for (const auto& e : edges) {
        if (e.to == v) d += e.multiplicity;
    }
    return d;
}

int NetworkGraph::out_degree(int v) const {
    int d = 0;
    for (const auto& e : edges) {
        if (e.from == v) d += e.multiplicity;
    }
    return d;
}

int NetworkGraph::reflection(int v) const {
    const Vertex& x = vertices.at(v);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const Vertex& y = vertices[i];
        if (y.kind != x.kind || y.stage != x.stage) continue;
        if (x.kind != VertexKind::interior) {
            if (y.level == -x.level) return static_cast<int>(i);
            continue;
        }
        const StarSide mirrored = x.side == StarSide::upper   ? StarSide::lower
                                  : x.side == StarSide::lower ? StarSide::upper
                                                              : StarSide::center;
        if (y.side == mirrored) return static_cast<int>(i);
    }
    return -1;
}

NetworkGraph build_graph(const StarNetwork& net) {
    using VK = NetworkGraph::VertexKind;
    const int n = net.rank();
    const int stages = static_cast<int>(net.size());
    NetworkGraph g;
    std::map<int, int> source_of;
    std::map<int, int> sink_of;
    std::map<std::pair<int, int>, int> interior_of; // (stage, star index)
    for (int x = -n; x <= n; ++x) {
        if (x == 0) continue;
        source_of[x] = static_cast<int>(g.vertices.size());
        g.vertices.push_back({VK::source, -1, x, StarSide::center});
    }
    for (int k = 0; k < stages; ++k) {
        const auto stars = net.stages()[k].stars();
        for (int s = 0; s < static_cast<int>(stars.size()); ++s) {
            interior_of[{k, s}] = static_cast<int>(g.vertices.size());
            g.vertices.push_back({VK::interior, k, 0, stars[s].side});
        }
    }
    for (int x = -n; x <= n; ++x) {
        if (x == 0) continue;
        sink_of[x] = static_cast<int>(g.vertices.size());
        g.vertices.push_back({VK::sink, stages, x, StarSide::center});
    }

    // Each wire segment at level x becomes one edge; segments between
    // consecutive stars across a condensed join are merged by endpoint pair.
    std::map<std::pair<int, int>, int> merged;
    for (int x = -n; x <= n; ++x) {
        if (x == 0) continue;
        int prev = source_of[x];
        int prev_stage = -1;
        for (int k = 0; k < stages; ++k) {
            const auto stars = net.stages()[k].stars();
            for (int s = 0; s < static_cast<int>(stars.size()); ++s) {
                if (!stars[s].contains(x)) continue;
                const int v = interior_of[{k, s}];
                if (prev_stage == k - 1 && k > 0 && net.stages()[k].condensed_join) {
                    ++merged[{prev, v}];
                } else {
                    g.edges.push_back({prev, v, 1});
                }
                prev = v;
                prev_stage = k;
            }
        }
        g.edges.push_back({prev, sink_of[x], 1});
    }
    for (const auto& [ends, m] : merged) {
        if (m == 1) {
            g.edges.push_back({ends.first, ends.second, 1});
        } else {
            g.edges.push_back({ends.first, ends.second, m});
        }
    }
    return g;
}

bool is_reflection_symmetric(const NetworkGraph& graph) {
    std::vector<std::tuple<int, int, int>> edges;
    std::vector<std::tuple<int, int, int>> reflected;
    for (const auto& e : graph.edges) {
        edges.emplace_back(e.from, e.to, e.multiplicity);
        const int rf = graph.reflection(e.from);
        const int rt = graph.reflection(e.to);
        if (rf < 0 || rt < 0) return false;
        reflected.emplace_back(rf, rt, e.multiplicity);
    }
    std::sort(edges.begin(), edges.end());
    std::sort(reflected.begin(), reflected.end());
    return edges == reflected;
}

namespace {

std::string level_name(int x) { return x < 0 ? "m" + std::to_string(-x) : std::to_string(x); }

std::string vertex_name(const NetworkGraph::Vertex& v) {
    switch (v.kind) {
    case NetworkGraph::VertexKind::source:
        return "src_" + level_name(v.level);
    case NetworkGraph::VertexKind::sink:
        return "snk_" + level_name(v.level);
    case NetworkGraph::VertexKind::interior:
        break;
    }
    return "s" + std::to_string(v.stage + 1) + "_" + std::string(to_string(v.side));
}

} // namespace

std::string render_dot(const StarNetwork& net) {
    const NetworkGraph g = build_graph(net);
    std::ostringstream out;
    out << "digraph star_network {\n";
    out << "  rankdir=LR;\n";
    out << "  node [shape=point];\n";
    for (const auto& v : g.vertices) {
        double y = v.level;
        if (v.kind == NetworkGraph::VertexKind::interior) {
            for (const Star& s : net.stages()[v.stage].stars()) {
                if (s.side == v.side) y = (s.lo + s.hi) / 2.0;
            }
        }
        const int x = v.kind == NetworkGraph::VertexKind::source ? 0 : v.stage + 1;
        out << "  " << vertex_name(v) << " [";
        if (v.kind != NetworkGraph::VertexKind::interior) {
            out << "shape=plaintext, label=\"" << v.level << "\", ";
        }
        out << "pos=\"" << x << "," << y << "!\"];\n";
    }
    for (const auto& e : g.edges) {
        out << "  " << vertex_name(g.vertices[e.from]) << " -> " << vertex_name(g.vertices[e.to]);
        if (e.multiplicity > 1) out << " [label=\"" << e.multiplicity << "\"]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace bcstar
