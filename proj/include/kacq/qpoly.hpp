#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace kacq {

/// Polynomial in q with arbitrary-precision integer coefficients.
/// Stored densely (index = exponent) with no trailing zero coefficients,
/// so the zero polynomial has an empty coefficient vector.
class QPolynomial {
public:
    QPolynomial() = default;
    QPolynomial(long c) : QPolynomial(mpz_class(c)) {} // NOLINT(google-explicit-constructor)
    QPolynomial(const mpz_class& c);                    // NOLINT(google-explicit-constructor)
    explicit QPolynomial(std::vector<mpz_class> coefficients);

    static QPolynomial monomial(const mpz_class& c, std::size_t exponent);
    static QPolynomial q() { return monomial(1, 1); }
    /// Inverse of render(). Accepts the exact rendering grammar only.
    static QPolynomial parse(std::string_view text);

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const mpz_class& leading() const { return c_.back(); }
    mpz_class coeff(std::size_t exponent) const;
    const std::vector<mpz_class>& coefficients() const { return c_; }
    /// Lowest exponent with a non-zero coefficient (0 for the zero polynomial).
    std::size_t valuation() const;

    QPolynomial& operator+=(const QPolynomial& o);
    QPolynomial& operator-=(const QPolynomial& o);
    QPolynomial& operator*=(const QPolynomial& o);
    QPolynomial& operator*=(const mpz_class& c);
    QPolynomial operator-() const;

    friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
    friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
    friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);
    friend bool operator==(const QPolynomial& a, const QPolynomial& b) { return a.c_ == b.c_; }

    /// Substitution q -> q^d.
    QPolynomial adams(unsigned d) const;
    /// Multiplication by q^k.
    QPolynomial shifted(std::size_t k) const;
    mpz_class evaluate(const mpz_class& x) const;

    mpz_class content() const;
    /// Divides by the content, sign chosen to make the leading coefficient positive.
    QPolynomial primitive_part() const;
    /// Exact division of every coefficient; throws InternalError if inexact.
    QPolynomial divexact(const mpz_class& c) const;

    /// Descending powers, e.g. "q^6+q^5+3*q^4+4*q^3+5*q^2+3*q+2"; zero renders as "0".
    std::string render() const;

private:
    void trim();
    std::vector<mpz_class> c_;
};

/// Pseudo-remainder of a by b (b non-zero): remainder of lc(b)^(deg a - deg b + 1) * a.
QPolynomial pseudo_remainder(const QPolynomial& a, const QPolynomial& b);
/// Exact quotient a / b in Z[q]; throws InternalError if b does not divide a.
QPolynomial divexact(const QPolynomial& a, const QPolynomial& b);
/// Greatest common divisor in Z[q], normalised to a positive leading coefficient.
QPolynomial gcd(const QPolynomial& a, const QPolynomial& b);

/// Element of Q(q) kept in a canonical normal form: numerator and
/// denominator in Z[q] with no common factor (polynomial or integer) and a
/// positive leading coefficient on the denominator. Zero is 0/1.
class QRational {
public:
    QRational() : den_(1) {}
    QRational(long c) : num_(c), den_(1) {}                   // NOLINT(google-explicit-constructor)
    QRational(const QPolynomial& p) : num_(p), den_(1) {}     // NOLINT(google-explicit-constructor)
    QRational(QPolynomial num, QPolynomial den);
    static QRational fraction(long num, long den) { return QRational(QPolynomial(num), QPolynomial(den)); }

    const QPolynomial& numerator() const { return num_; }
    const QPolynomial& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_ == QPolynomial(1); }
    /// Throws InternalError unless the value is a polynomial with integer coefficients.
    const QPolynomial& as_polynomial() const;

    QRational& operator+=(const QRational& o);
    QRational& operator-=(const QRational& o);
    QRational& operator*=(const QRational& o);
    QRational& operator/=(const QRational& o);
    QRational operator-() const;

    friend QRational operator+(QRational a, const QRational& b) { return a += b; }
    friend QRational operator-(QRational a, const QRational& b) { return a -= b; }
    friend QRational operator*(QRational a, const QRational& b) { return a *= b; }
    friend QRational operator/(QRational a, const QRational& b) { return a /= b; }
    friend bool operator==(const QRational& a, const QRational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    /// Substitution q -> q^d (keeps the normal form).
    QRational adams(unsigned d) const;

    std::string render() const;

private:
    void normalize();
    QPolynomial num_;
    QPolynomial den_;
};

} // namespace kacq
