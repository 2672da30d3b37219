#include "bcstar/hecke.hpp"

#include <algorithm>
#include <unordered_map>

#include "bcstar/error.hpp"

namespace bcstar {

namespace {

void add_term(std::map<SignedPermutation, QPolynomial>& terms, const SignedPermutation& w,
              const QPolynomial& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

const QPolynomial& q_minus_one() {
    static const QPolynomial p{-1, 1};
    return p;
}

} // namespace

HeckeElement::HeckeElement(int rank) : rank_(rank) {
    if (rank < 1 || rank > kMaxRank) throw DomainError("invalid Hecke algebra rank");
}

HeckeElement HeckeElement::basis(const SignedPermutation& w, const QPolynomial& c) {
    HeckeElement h(w.rank());
    h.add(w, c);
    return h;
}

void HeckeElement::add(const SignedPermutation& w, const QPolynomial& c) {
    if (w.rank() != rank_) throw DomainError("rank mismatch in HeckeElement::add");
    add_term(terms_, w, c);
}

QPolynomial HeckeElement::coefficient(const SignedPermutation& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? QPolynomial() : it->second;
}

std::vector<std::pair<SignedPermutation, QPolynomial>> HeckeElement::canonical_terms() const {
    std::vector<std::pair<int, const std::pair<const SignedPermutation, QPolynomial>*>> keyed;
    keyed.reserve(terms_.size());
    for (const auto& term : terms_) keyed.emplace_back(length(term.first), &term);
    std::stable_sort(keyed.begin(), keyed.end(),
                     [](const auto& l, const auto& r) { return l.first < r.first; });
    std::vector<std::pair<SignedPermutation, QPolynomial>> out;
    out.reserve(keyed.size());
    for (const auto& [len, term] : keyed) out.emplace_back(term->first, term->second);
    return out;
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& other) {
    if (other.rank_ != rank_) throw DomainError("rank mismatch in Hecke sum");
    for (const auto& [w, c] : other.terms_) add_term(terms_, w, c);
    return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& other) {
    if (other.rank_ != rank_) throw DomainError("rank mismatch in Hecke difference");
    for (const auto& [w, c] : other.terms_) add_term(terms_, w, QPolynomial() - c);
    return *this;
}

HeckeElement HeckeElement::scaled(const QPolynomial& c) const {
    HeckeElement out(rank_);
    for (const auto& [w, coeff] : terms_) out.add(w, coeff * c);
    return out;
}

HeckeElement HeckeElement::divided(const QPolynomial& d) const {
    HeckeElement out(rank_);
    for (const auto& [w, coeff] : terms_) out.add(w, divide_exact(coeff, d));
    return out;
}

std::string HeckeElement::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [w, c] : canonical_terms()) {
        if (!out.empty()) out += " + ";
        if (c != QPolynomial(1)) {
            const bool single = c.coefficients().size() == 1 ||
                                std::count_if(c.coefficients().begin(), c.coefficients().end(),
                                              [](std::int64_t x) { return x != 0; }) == 1;
            out += single ? c.to_string() + " " : "(" + c.to_string() + ") ";
        }
        out += "T[" + w.to_string() + "]";
    }
    return out;
}

HeckeElement multiply_by_generator(const HeckeElement& a, int i) {
    if (i < 0 || i >= a.rank()) {
        throw DomainError("generator index " + std::to_string(i) + " out of range");
    }
    const SignedPermutation s = generator(a.rank(), i);
    HeckeElement out(a.rank());
    for (const auto& [w, c] : a.terms()) {
        const SignedPermutation ws = w * s;
        if (has_right_descent(w, i)) {
            out.add(ws, c.shifted(1));
            out.add(w, c * q_minus_one());
        } else {
            out.add(ws, c);
        }
    }
    return out;
}

HeckeElement natural_product(const HeckeElement& a, const HeckeElement& b) {
    if (a.rank() != b.rank()) throw DomainError("rank mismatch in Hecke product");
    const int n = a.rank();
    // a * T_v memoized by v; T_v = T_{v s} T_s along the last letter of a
    // reduced word of v.
    std::unordered_map<SignedPermutation, HeckeElement> memo;
    memo.emplace(identity(n), a);
    auto times_basis = [&](auto&& self, const SignedPermutation& v) -> const HeckeElement& {
        if (auto it = memo.find(v); it != memo.end()) return it->second;
        int last = 0;
        while (!has_right_descent(v, last)) ++last;
        const HeckeElement& prefix = self(self, v * generator(n, last));
        HeckeElement value = multiply_by_generator(prefix, last);
        return memo.emplace(v, std::move(value)).first->second;
    };
    HeckeElement out(n);
    for (const auto& [v, c] : b.terms()) out += times_basis(times_basis, v).scaled(c);
    return out;
}

HeckeElement kl_reversal(const Interval& iv) {
    HeckeElement out(iv.n);
    const ParabolicSubgroup group(iv);
    for (const auto& v : group.elements()) out.add(v, QPolynomial(1));
    return out;
}

HeckeElement product_of_reversal_kls(int n, std::span<const Interval> intervals) {
    HeckeElement out = HeckeElement::basis(identity(n));
    for (const auto& iv : intervals) {
        if (iv.n != n) throw DomainError("interval rank does not match product rank");
        out = natural_product(out, kl_reversal(iv));
    }
    return out;
}

CosetSum::CosetSum(const Interval& iv) : interval_(iv) {}

void CosetSum::add(const SignedPermutation& rep, const QPolynomial& c) {
    if (rep.rank() != interval_.n) throw DomainError("rank mismatch in CosetSum::add");
    if (!is_min_coset_rep(rep, interval_)) {
        throw DomainError(rep.to_string() + " is not a minimal coset representative for " +
                          interval_.to_string());
    }
    add_term(reps_, rep, c);
}

QPolynomial CosetSum::coefficient(const SignedPermutation& rep) const {
    auto it = reps_.find(rep);
    return it == reps_.end() ? QPolynomial() : it->second;
}

CosetSum douglass_action(int i, const CosetSum& c) {
    const Interval& iv = c.interval();
    if (i < 0 || i >= iv.n) {
        throw DomainError("generator index " + std::to_string(i) + " out of range");
    }
    const SignedPermutation s = generator(iv.n, i);
    CosetSum out(iv);
    for (const auto& [w, coeff] : c.reps()) {
        const SignedPermutation sw = min_coset_rep(s * w, iv);
        if (sw == w) {
            out.add(w, coeff.shifted(1));
        } else if (coset_leq(sw, w, iv)) {
            out.add(sw, coeff.shifted(1));
            out.add(w, coeff * q_minus_one());
        } else {
            out.add(sw, coeff);
        }
    }
    return out;
}

CosetSum coset_expansion(const HeckeElement& prefix, const Interval& iv) {
    if (prefix.rank() != iv.n) throw DomainError("rank mismatch in coset expansion");
    CosetSum out(iv);
    for (const auto& [v, c] : prefix.terms()) {
        const auto [rep, tail] = coset_decompose(v, iv);
        out.add(rep, c.shifted(length(tail)));
    }
    return out;
}

HeckeElement flatten(const CosetSum& c) {
    HeckeElement out(c.rank());
    const ParabolicSubgroup group(c.interval());
    for (const auto& [w, coeff] : c.reps()) {
        for (const auto& u : group.elements()) out.add(w * u, coeff);
    }
    return out;
}

} // namespace bcstar
