#include "bcstar/qpolynomial.hpp"

#include <algorithm>

#include "bcstar/error.hpp"

namespace bcstar {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_add_overflow(a, b, &r)) throw Error("QPolynomial coefficient overflow");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r)) throw Error("QPolynomial coefficient overflow");
    return r;
}

} // namespace

QPolynomial::QPolynomial(std::int64_t constant) {
    if (constant != 0) coeffs_.push_back(constant);
}

QPolynomial::QPolynomial(std::initializer_list<std::int64_t> coeffs) : coeffs_(coeffs) { trim(); }

QPolynomial::QPolynomial(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPolynomial QPolynomial::monomial(int exponent, std::int64_t coeff) {
    QPolynomial p;
    p.add_monomial(exponent, coeff);
    return p;
}

void QPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

bool QPolynomial::has_nonnegative_coefficients() const noexcept {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::int64_t c) { return c >= 0; });
}

void QPolynomial::add_monomial(int exponent, std::int64_t c) {
    if (exponent < 0) throw Error("negative exponent in QPolynomial");
    if (c == 0) return;
    if (coeffs_.size() <= static_cast<std::size_t>(exponent)) coeffs_.resize(exponent + 1, 0);
    coeffs_[exponent] = checked_add(coeffs_[exponent], c);
    trim();
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& other) {
    if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k) {
        coeffs_[k] = checked_add(coeffs_[k], other.coeffs_[k]);
    }
    trim();
    return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& other) {
    if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k) {
        coeffs_[k] = checked_add(coeffs_[k], checked_mul(-1, other.coeffs_[k]));
    }
    trim();
    return *this;
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<std::int64_t> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            out[i + j] = checked_add(out[i + j], checked_mul(a.coeffs_[i], b.coeffs_[j]));
        }
    }
    return QPolynomial(std::move(out));
}

QPolynomial& QPolynomial::operator*=(const QPolynomial& other) {
    *this = *this * other;
    return *this;
}

QPolynomial QPolynomial::shifted(int k) const {
    if (k < 0) throw Error("negative shift in QPolynomial");
    if (is_zero()) return {};
    std::vector<std::int64_t> out(static_cast<std::size_t>(k), 0);
    out.insert(out.end(), coeffs_.begin(), coeffs_.end());
    return QPolynomial(std::move(out));
}

std::string QPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        std::int64_t c = coeffs_[k];
        if (c == 0) continue;
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        const std::int64_t mag = c < 0 ? -c : c;
        if (k == 0) {
            out += std::to_string(mag);
            continue;
        }
        if (mag != 1) out += std::to_string(mag);
        out += "q";
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

QPolynomial divide_exact(const QPolynomial& a, const QPolynomial& b) {
    if (b.is_zero()) throw Error("division by the zero polynomial");
    std::vector<std::int64_t> rem = a.coefficients();
    const auto& d = b.coefficients();
    const std::int64_t lead = d.back();
    if (rem.size() < d.size()) {
        if (!a.is_zero()) throw Error("polynomial division is not exact");
        return {};
    }
    std::vector<std::int64_t> quot(rem.size() - d.size() + 1, 0);
    for (std::size_t k = quot.size(); k-- > 0;) {
        const std::int64_t top = rem[k + d.size() - 1];
        if (top % lead != 0) throw Error("polynomial division is not exact");
        const std::int64_t c = top / lead;
        quot[k] = c;
        for (std::size_t j = 0; j < d.size(); ++j) {
            rem[k + j] = checked_add(rem[k + j], checked_mul(-c, d[j]));
        }
    }
    if (std::any_of(rem.begin(), rem.end(), [](std::int64_t c) { return c != 0; })) {
        throw Error("polynomial division is not exact");
    }
    return QPolynomial(std::move(quot));
}

QPolynomial q_int(int m) {
    if (m < 0) throw Error("q-integer of a negative number");
    return QPolynomial(std::vector<std::int64_t>(static_cast<std::size_t>(m), 1));
}

QPolynomial q_factorial(int m) {
    if (m < 0) throw Error("q-factorial of a negative number");
    QPolynomial out(1);
    for (int k = 2; k <= m; ++k) out *= q_int(k);
    return out;
}

QPolynomial r_of_v(std::span<const int> multiplicities) {
    QPolynomial out(1);
    for (int m : multiplicities) out *= q_factorial(m);
    return out;
}

} // namespace bcstar
