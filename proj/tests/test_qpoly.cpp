#include <doctest.h>

#include <random>

#include "kacq/errors.hpp"
#include "kacq/qpoly.hpp"

using namespace kacq;

namespace {

QPolynomial random_poly(std::mt19937& rng, int max_degree, int range) {
    std::uniform_int_distribution<int> deg(0, max_degree), coef(-range, range);
    std::vector<mpz_class> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : c)
        x = coef(rng);
    return QPolynomial(c);
}

} // namespace

TEST_SUITE("qpoly") {

TEST_CASE("rendering") {
    CHECK(QPolynomial().render() == "0");
    CHECK(QPolynomial(-3).render() == "-3");
    CHECK(QPolynomial::q().render() == "q");
    QPolynomial p({2, 3, 5, 4, 3, 1, 1});
    CHECK(p.render() == "q^6+q^5+3*q^4+4*q^3+5*q^2+3*q+2");
    CHECK(QPolynomial({0, -1, 0, 2}).render() == "2*q^3-q");
    CHECK(QPolynomial({-1, 0, -1}).render() == "-q^2-1");
}

TEST_CASE("parse inverts render") {
    std::mt19937 rng(1);
    for (int k = 0; k < 200; ++k) {
        auto p = random_poly(rng, 8, 5);
        CHECK(QPolynomial::parse(p.render()) == p);
    }
    CHECK(QPolynomial::parse("q^13+q^12+20*q^5+2").degree() == 13);
    for (const char* bad : {"", "q^", "2q", "q+", "1+q", "q^1", "+q", "0*q", "x", "q^2+q^2"})
        CHECK_THROWS_AS(QPolynomial::parse(bad), InputError);
}

TEST_CASE("arithmetic") {
    auto q = QPolynomial::q();
    auto a = q + QPolynomial(1);
    auto b = q - QPolynomial(1);
    CHECK(a * b == q * q - QPolynomial(1));
    CHECK((a - a).is_zero());
    CHECK(a.evaluate(2) == 3);
    CHECK(QPolynomial().degree() == -1);
    CHECK(q.shifted(2) == q * q * q);
    CHECK((q * q + q).valuation() == 1);
    CHECK(QPolynomial({4, 6}).content() == 2);
    CHECK(QPolynomial({4, 6}).primitive_part() == QPolynomial({2, 3}));
    CHECK(QPolynomial({-4, -6}).primitive_part() == QPolynomial({2, 3}));
    CHECK_THROWS_AS(QPolynomial({3, 4}).divexact(mpz_class(2)), InternalError);
    CHECK((q * q + QPolynomial(1)).adams(3) == q.shifted(5) + QPolynomial(1));
}

TEST_CASE("ring laws on random polynomials") {
    std::mt19937 rng(2);
    for (int k = 0; k < 100; ++k) {
        auto a = random_poly(rng, 5, 9), b = random_poly(rng, 5, 9), c = random_poly(rng, 5, 9);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b).evaluate(3) == a.evaluate(3) * b.evaluate(3));
        CHECK(a.adams(2).adams(3) == a.adams(6));
    }
}

TEST_CASE("exact division and gcd") {
    std::mt19937 rng(3);
    for (int k = 0; k < 100; ++k) {
        auto a = random_poly(rng, 4, 6), b = random_poly(rng, 4, 6), g = random_poly(rng, 3, 6);
        if (g.is_zero() || a.is_zero() || b.is_zero())
            continue;
        CHECK(divexact(a * g, g) == a);
        auto d = gcd(a * g, b * g);
        CHECK(d.leading() > 0);
        // g divides the gcd, and the gcd divides both inputs.
        CHECK_NOTHROW(divexact(d, g.primitive_part()));
        CHECK_NOTHROW(divexact(a * g, d));
        CHECK_NOTHROW(divexact(b * g, d));
    }
    auto q = QPolynomial::q();
    CHECK(gcd(q * q - QPolynomial(1), q - QPolynomial(1)) == q - QPolynomial(1));
    CHECK(gcd(QPolynomial(6), QPolynomial(4)) == QPolynomial(2));
    CHECK(gcd(QPolynomial(), q) == q);
    CHECK_THROWS_AS(divexact(q, q - QPolynomial(1)), InternalError);
}

TEST_CASE("rational normal form") {
    auto q = QPolynomial::q();
    QRational x(q * q - QPolynomial(1), q - QPolynomial(1));
    CHECK(x.is_polynomial());
    CHECK(x.as_polynomial() == q + QPolynomial(1));
    QRational y(QPolynomial(2), QPolynomial(-4));
    CHECK(y.numerator() == QPolynomial(-1));
    CHECK(y.denominator() == QPolynomial(2));
    CHECK(QRational(QPolynomial(), q).denominator() == QPolynomial(1));
    CHECK_THROWS_AS(QRational(q, QPolynomial()), DomainError);
    CHECK_THROWS_AS(QRational(QPolynomial(1), q).as_polynomial(), InternalError);
    CHECK(QRational(QPolynomial(1), q).render() == "(1)/(q)");

    // Equal values built different ways share one representation.
    std::mt19937 rng(4);
    for (int k = 0; k < 100; ++k) {
        auto a = random_poly(rng, 3, 5), b = random_poly(rng, 3, 5), c = random_poly(rng, 2, 5);
        if (b.is_zero() || c.is_zero())
            continue;
        QRational u(a, b);
        QRational v(a * c, b * c);
        CHECK(u == v);
        CHECK(u.numerator() == v.numerator());
        CHECK(u.denominator() == v.denominator());
        CHECK((u + v) - v == u);
        if (!a.is_zero())
            CHECK(u / u == QRational(1));
        CHECK(u.adams(2).adams(2) == u.adams(4));
    }
}

}
