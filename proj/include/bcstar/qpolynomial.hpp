#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace bcstar {

/// Integer polynomial in q with nonnegative exponents. coefficients()[k] is
/// the coefficient of q^k; there is never a trailing zero, so the zero
/// polynomial has no coefficients. Arithmetic throws bcstar::Error on
/// int64 overflow.
class QPolynomial {
public:
    QPolynomial() = default;
    QPolynomial(std::int64_t constant); // NOLINT: integers promote to constants
    QPolynomial(std::initializer_list<std::int64_t> coeffs);
    explicit QPolynomial(std::vector<std::int64_t> coeffs);

    static QPolynomial monomial(int exponent, std::int64_t coeff = 1);

    const std::vector<std::int64_t>& coefficients() const noexcept { return coeffs_; }
    std::int64_t operator[](std::size_t k) const noexcept {
        return k < coeffs_.size() ? coeffs_[k] : 0;
    }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool has_nonnegative_coefficients() const noexcept;

    /// Adds c * q^exponent in place.
    void add_monomial(int exponent, std::int64_t c);

    QPolynomial& operator+=(const QPolynomial& other);
    QPolynomial& operator-=(const QPolynomial& other);
    QPolynomial& operator*=(const QPolynomial& other);

    friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
    friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
    friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);

    /// Multiplies by q^k.
    QPolynomial shifted(int k) const;

    friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

    /// "1 + 2q + q^3"; "0" for zero.
    std::string to_string() const;

private:
    void trim();
    std::vector<std::int64_t> coeffs_;
};

/// Exact quotient a / b. Throws bcstar::Error when b is zero, its leading
/// coefficient does not divide, or the remainder is nonzero.
QPolynomial divide_exact(const QPolynomial& a, const QPolynomial& b);

/// [m]_q = 1 + q + ... + q^{m-1}; [0]_q = 0.
QPolynomial q_int(int m);

/// [m]_q! = [m]_q ... [1]_q; [0]_q! = 1.
QPolynomial q_factorial(int m);

/// Product of the q-factorials of the given multiplicities.
QPolynomial r_of_v(std::span<const int> multiplicities);

} // namespace bcstar
