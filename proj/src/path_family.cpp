#include "bcstar/path_family.hpp"

#include <algorithm>
#include <unordered_set>

#include "bcstar/error.hpp"

namespace bcstar {

std::string_view to_string(FamilyViolation v) {
    switch (v) {
    case FamilyViolation::none:
        return "none";
    case FamilyViolation::wrong_shape:
        return "wrong shape";
    case FamilyViolation::source_row:
        return "source row is not the identity";
    case FamilyViolation::collision:
        return "paths collide";
    case FamilyViolation::reflection:
        return "family is not reflection symmetric";
    case FamilyViolation::stage_legality:
        return "level changes outside a star";
    case FamilyViolation::shared_edge_defect:
        return "defect between paths on a merged edge";
    }
    return "?";
}

namespace {

int long_index(int i, int n) { return i < 0 ? i + n : i + n - 1; }

// Walk each star's levels in ascending order; the path at the higher level
// forms a defect with a path below it when the pair is eligible.
template <typename Visit>
void for_each_stage_defect(const StarNetwork& net, std::size_t k, const SignedPermutation& entry,
                           Visit&& visit) {
    const SignedPermutation at = inverse(entry); // at(x) = path at level x
    for (const Star& star : net.stages()[k].stars()) {
        for (int x = star.lo; x <= star.hi; ++x) {
            if (x == 0) continue;
            const int j = at(x);
            for (int y = x + 1; y <= star.hi; ++y) {
                if (y == 0) continue;
                const int i = at(y);
                if (eligible_pair(i, j, PairBound::inclusive)) {
                    if (!visit(i, j, x, y)) return;
                }
            }
        }
    }
}

} // namespace

void stage_defects(const StarNetwork& net, std::size_t k, const SignedPermutation& entry,
                   std::vector<DefectTriple>& out) {
    for_each_stage_defect(net, k, entry, [&](int i, int j, int, int) {
        out.push_back(DefectTriple{i, j, static_cast<int>(k) + 1});
        return true;
    });
}

int stage_defect_count(const StarNetwork& net, std::size_t k, const SignedPermutation& entry) {
    int count = 0;
    for_each_stage_defect(net, k, entry, [&](int, int, int, int) {
        ++count;
        return true;
    });
    return count;
}

bool has_shared_edge_defect(const StarNetwork& net, std::size_t k, const SignedPermutation& entry) {
    if (k == 0 || !net.stages()[k].condensed_join) return false;
    const auto edges = all_merged_edges(net);
    bool found = false;
    for_each_stage_defect(net, k, entry, [&](int, int, int x, int y) {
        for (const auto& e : edges) {
            if (e.stage == static_cast<int>(k) && e.lo <= x && y <= e.hi) {
                found = true;
                return false;
            }
        }
        return true;
    });
    return found;
}

FamilyViolation check_levels(const StarNetwork& net, const LongRows& rows) {
    const int n = net.rank();
    if (rows.size() != net.size() + 1) return FamilyViolation::wrong_shape;
    for (const auto& row : rows) {
        if (row.size() != static_cast<std::size_t>(2 * n)) return FamilyViolation::wrong_shape;
    }
    for (int i = -n; i <= n; ++i) {
        if (i != 0 && rows[0][long_index(i, n)] != i) return FamilyViolation::source_row;
    }
    for (const auto& row : rows) {
        std::vector<bool> seen(2 * n, false);
        for (int level : row) {
            if (level == 0 || level < -n || level > n) return FamilyViolation::collision;
            if (seen[long_index(level, n)]) return FamilyViolation::collision;
            seen[long_index(level, n)] = true;
        }
    }
    for (const auto& row : rows) {
        for (int i = 1; i <= n; ++i) {
            if (row[long_index(-i, n)] != -row[long_index(i, n)]) return FamilyViolation::reflection;
        }
    }
    std::vector<SignedPermutation> perms;
    for (const auto& row : rows) {
        perms.push_back(SignedPermutation::from_window(
            std::span<const int>(row.data() + n, static_cast<std::size_t>(n))));
    }
    for (std::size_t k = 1; k < perms.size(); ++k) {
        const SignedPermutation step = inverse(perms[k - 1]) * perms[k];
        if (!in_parabolic(step, net.stages()[k - 1].interval)) return FamilyViolation::stage_legality;
        if (has_shared_edge_defect(net, k - 1, perms[k - 1])) {
            return FamilyViolation::shared_edge_defect;
        }
    }
    return FamilyViolation::none;
}

PathFamily PathFamily::from_rows(std::shared_ptr<const StarNetwork> net,
                                 std::vector<SignedPermutation> rows) {
    if (!net) throw DomainError("path family needs a network");
    LongRows longs;
    for (const auto& r : rows) {
        if (r.rank() != net->rank()) throw DomainError("path family row has the wrong rank");
        longs.push_back(long_one_line(r));
    }
    if (const auto v = check_levels(*net, longs); v != FamilyViolation::none) {
        throw DomainError("invalid path family: " + std::string(to_string(v)));
    }
    return PathFamily(std::move(net), std::move(rows));
}

PathFamily PathFamily::from_levels(std::shared_ptr<const StarNetwork> net, const LongRows& rows) {
    if (!net) throw DomainError("path family needs a network");
    if (const auto v = check_levels(*net, rows); v != FamilyViolation::none) {
        throw DomainError("invalid path family: " + std::string(to_string(v)));
    }
    const int n = net->rank();
    std::vector<SignedPermutation> perms;
    for (const auto& row : rows) {
        perms.push_back(SignedPermutation::from_window(
            std::span<const int>(row.data() + n, static_cast<std::size_t>(n))));
    }
    return PathFamily(std::move(net), std::move(perms));
}

SignedPermutation PathFamily::local(std::size_t k) const {
    if (k == 0 || k >= rows_.size()) throw DomainError("stage index out of range");
    return inverse(rows_[k - 1]) * rows_[k];
}

LongRows PathFamily::long_rows() const {
    LongRows out;
    for (const auto& r : rows_) out.push_back(long_one_line(r));
    return out;
}

SignedPermutation family_type(const PathFamily& f) { return f.rows().back(); }

std::vector<DefectTriple> defects(const PathFamily& f) {
    std::vector<DefectTriple> out;
    for (std::size_t k = 0; k < f.network().size(); ++k) {
        stage_defects(f.network(), k, f.rows()[k], out);
    }
    std::sort(out.begin(), out.end(), [](const DefectTriple& a, const DefectTriple& b) {
        return std::tie(a.k, a.i, a.j) < std::tie(b.k, b.i, b.j);
    });
    return out;
}

int defect_count(const PathFamily& f) {
    int total = 0;
    for (std::size_t k = 0; k < f.network().size(); ++k) {
        total += stage_defect_count(f.network(), k, f.rows()[k]);
    }
    return total;
}

std::vector<std::pair<int, int>> sink_inversion_pairs(const PathFamily& f, PairBound bound) {
    const int n = f.network().rank();
    std::vector<std::pair<int, int>> out;
    for (int i = -n; i <= n; ++i) {
        for (int j = -n; j <= n; ++j) {
            if (i == 0 || j == 0 || !eligible_pair(i, j, bound)) continue;
            if (f.sink(j) < f.sink(i)) out.emplace_back(i, j);
        }
    }
    return out;
}

PathFamily truncate_family(const PathFamily& f) {
    if (f.network().size() == 0) throw DomainError("cannot truncate a family over an empty network");
    auto net = std::make_shared<const StarNetwork>(f.network().prefix(f.network().size() - 1));
    std::vector<SignedPermutation> rows(f.rows().begin(), f.rows().end() - 1);
    return PathFamily::from_rows(std::move(net), std::move(rows));
}

PathFamily extend_family(const PathFamily& f, const Interval& iv, const SignedPermutation& tail) {
    const int n = f.network().rank();
    if (iv.n != n || tail.rank() != n) throw DomainError("rank mismatch in extend_family");
    if (!in_parabolic(tail, iv)) {
        throw DomainError(tail.to_string() + " is not in the parabolic subgroup of " +
                          iv.to_string());
    }
    std::vector<Stage> stages = f.network().stages();
    stages.push_back(Stage{iv, false});
    auto net = std::make_shared<const StarNetwork>(n, std::move(stages));
    std::vector<SignedPermutation> rows = f.rows();
    rows.push_back(rows.back() * tail);
    return PathFamily::from_rows(std::move(net), std::move(rows));
}

} // namespace bcstar
