#include "bcstar/json_io.hpp"

#include <algorithm>
#include <tuple>

#include "bcstar/error.hpp"

namespace bcstar {

using nlohmann::json;

json hecke_to_json(const HeckeElement& h) {
    json out = json::array();
    for (const auto& [w, c] : h.canonical_terms()) {
        out.push_back({{"w", w.to_string()}, {"coeffs", c.coefficients()}});
    }
    return out;
}

HeckeElement hecke_from_json(const json& j, int n) {
    if (!j.is_array()) throw ParseError("expected a JSON array of terms", 0);
    HeckeElement out(n);
    std::size_t index = 0;
    for (const auto& term : j) {
        if (!term.is_object() || !term.contains("w") || !term.contains("coeffs") ||
            !term["w"].is_string() || !term["coeffs"].is_array()) {
            throw ParseError("malformed Hecke term", index);
        }
        std::vector<std::int64_t> coeffs;
        for (const auto& c : term["coeffs"]) {
            if (!c.is_number_integer()) throw ParseError("coefficient is not an integer", index);
            coeffs.push_back(c.get<std::int64_t>());
        }
        const auto w = parse_signed_permutation(term["w"].get<std::string>(), n);
        if (out.coefficient(w) != QPolynomial()) throw ParseError("repeated Hecke term", index);
        out.add(w, QPolynomial(std::move(coeffs)));
        ++index;
    }
    return out;
}

json counts_to_json(const FamilyCounts& counts) {
    std::vector<std::tuple<int, SignedPermutation, int, std::uint64_t>> rows;
    for (const auto& [key, count] : counts) rows.emplace_back(length(key.first), key.first, key.second, count);
    std::sort(rows.begin(), rows.end());
    json out = json::array();
    for (const auto& [len, type, defects, count] : rows) {
        out.push_back({{"type", type.to_string()}, {"defects", defects}, {"count", count}});
    }
    return out;
}

json family_trace(const PathFamily& f) {
    json d = json::array();
    for (const auto& t : defects(f)) d.push_back({t.i, t.j, t.k});
    return {{"type", family_type(f).to_string()}, {"rows", f.long_rows()}, {"defects", d}};
}

} // namespace bcstar
