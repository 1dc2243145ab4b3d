#include "kacq/qpoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "kacq/errors.hpp"

namespace kacq {

QPolynomial::QPolynomial(const mpz_class& c) {
    if (c != 0)
        c_.push_back(c);
}

QPolynomial::QPolynomial(std::vector<mpz_class> coefficients) : c_(std::move(coefficients)) {
    trim();
}

QPolynomial QPolynomial::monomial(const mpz_class& c, std::size_t exponent) {
    QPolynomial p;
    if (c != 0) {
        p.c_.assign(exponent + 1, mpz_class(0));
        p.c_[exponent] = c;
    }
    return p;
}

void QPolynomial::trim() {
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

mpz_class QPolynomial::coeff(std::size_t exponent) const {
    return exponent < c_.size() ? c_[exponent] : mpz_class(0);
}

std::size_t QPolynomial::valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0)
            return i;
    return 0;
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& o) {
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] += o.c_[i];
    trim();
    return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& o) {
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] -= o.c_[i];
    trim();
    return *this;
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<mpz_class> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            mpz_addmul(out[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
    }
    return QPolynomial(std::move(out));
}

QPolynomial& QPolynomial::operator*=(const QPolynomial& o) {
    *this = *this * o;
    return *this;
}

QPolynomial& QPolynomial::operator*=(const mpz_class& c) {
    if (c == 0) {
        c_.clear();
        return *this;
    }
    for (auto& x : c_)
        x *= c;
    return *this;
}

QPolynomial QPolynomial::operator-() const {
    QPolynomial p = *this;
    for (auto& x : p.c_)
        x = -x;
    return p;
}

QPolynomial QPolynomial::adams(unsigned d) const {
    if (d == 0)
        throw InputError("adams operation needs d >= 1");
    if (d == 1 || is_zero())
        return *this;
    std::vector<mpz_class> out((c_.size() - 1) * d + 1);
    for (std::size_t i = 0; i < c_.size(); ++i)
        out[i * d] = c_[i];
    return QPolynomial(std::move(out));
}

QPolynomial QPolynomial::shifted(std::size_t k) const {
    if (is_zero() || k == 0)
        return *this;
    QPolynomial p;
    p.c_.assign(k, mpz_class(0));
    p.c_.insert(p.c_.end(), c_.begin(), c_.end());
    return p;
}

mpz_class QPolynomial::evaluate(const mpz_class& x) const {
    mpz_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

mpz_class QPolynomial::content() const {
    mpz_class g = 0;
    for (const auto& x : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1)
            break;
    }
    return g;
}

QPolynomial QPolynomial::primitive_part() const {
    if (is_zero())
        return {};
    mpz_class g = content();
    if (leading() < 0)
        g = -g;
    return divexact(g);
}

QPolynomial QPolynomial::divexact(const mpz_class& c) const {
    if (c == 0)
        throw InternalError("division of a polynomial by zero");
    QPolynomial p = *this;
    for (auto& x : p.c_) {
        if (!mpz_divisible_p(x.get_mpz_t(), c.get_mpz_t()))
            throw InternalError("inexact coefficient division");
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    }
    return p;
}

std::string QPolynomial::render() const {
    if (is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
        const mpz_class& c = c_[k];
        if (c == 0)
            continue;
        mpz_class mag = abs(c);
        if (c < 0)
            out << '-';
        else if (!first)
            out << '+';
        first = false;
        if (k == 0) {
            out << mag.get_str();
            continue;
        }
        if (mag != 1)
            out << mag.get_str() << '*';
        out << 'q';
        if (k > 1)
            out << '^' << k;
    }
    return out.str();
}

QPolynomial QPolynomial::parse(std::string_view text) {
    auto fail = [&] { return InputError("malformed polynomial '" + std::string(text) + "'"); };
    if (text == "0")
        return {};
    if (text.empty())
        throw fail();

    QPolynomial result;
    std::size_t pos = 0;
    auto read_digits = [&](mpz_class& out) {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == start)
            return false;
        out = mpz_class(std::string(text.substr(start, pos - start)));
        return true;
    };

    bool first = true;
    while (pos < text.size()) {
        int sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            sign = text[pos] == '-' ? -1 : 1;
            if (first && sign == 1)
                throw fail();
            ++pos;
        } else if (!first) {
            throw fail();
        }
        first = false;

        mpz_class coeff = 1;
        bool has_coeff = read_digits(coeff);
        std::size_t exponent = 0;
        if (pos < text.size() && (text[pos] == '*' || text[pos] == 'q')) {
            if (has_coeff) {
                if (text[pos] != '*')
                    throw fail();
                ++pos;
            }
            if (pos >= text.size() || text[pos] != 'q')
                throw fail();
            ++pos;
            exponent = 1;
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                mpz_class e;
                if (!read_digits(e) || !e.fits_ulong_p())
                    throw fail();
                exponent = e.get_ui();
            }
        } else if (!has_coeff) {
            throw fail();
        }
        result += monomial(sign * coeff, exponent);
    }
    if (result.render() != text)
        throw fail();
    return result;
}

QPolynomial pseudo_remainder(const QPolynomial& a, const QPolynomial& b) {
    if (b.is_zero())
        throw InternalError("pseudo-remainder by zero");
    if (a.degree() < b.degree())
        return a;
    std::vector<mpz_class> r = a.coefficients();
    const auto& bc = b.coefficients();
    const mpz_class& lb = b.leading();
    const std::size_t db = bc.size() - 1;
    long shift = a.degree() - b.degree();
    for (long s = shift; s >= 0; --s) {
        std::size_t top = static_cast<std::size_t>(s) + db;
        mpz_class lead = r[top];
        for (auto& x : r)
            x *= lb;
        if (lead != 0)
            for (std::size_t j = 0; j <= db; ++j)
                mpz_submul(r[static_cast<std::size_t>(s) + j].get_mpz_t(), lead.get_mpz_t(), bc[j].get_mpz_t());
    }
    r.resize(db);
    return QPolynomial(std::move(r));
}

QPolynomial divexact(const QPolynomial& a, const QPolynomial& b) {
    if (b.is_zero())
        throw InternalError("polynomial division by zero");
    if (a.is_zero())
        return {};
    if (a.degree() < b.degree())
        throw InternalError("inexact polynomial division");
    if (b.is_constant())
        return a.divexact(b.leading());
    std::vector<mpz_class> r = a.coefficients();
    const auto& bc = b.coefficients();
    const mpz_class& lb = b.leading();
    const std::size_t db = bc.size() - 1;
    std::vector<mpz_class> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
    for (std::size_t s = quot.size(); s-- > 0;) {
        mpz_class& top = r[s + db];
        if (top == 0)
            continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t()))
            throw InternalError("inexact polynomial division");
        mpz_class qc;
        mpz_divexact(qc.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
        for (std::size_t j = 0; j <= db; ++j)
            mpz_submul(r[s + j].get_mpz_t(), qc.get_mpz_t(), bc[j].get_mpz_t());
        quot[s] = std::move(qc);
    }
    for (std::size_t j = 0; j < db; ++j)
        if (r[j] != 0)
            throw InternalError("inexact polynomial division");
    return QPolynomial(std::move(quot));
}

QPolynomial gcd(const QPolynomial& a, const QPolynomial& b) {
    if (a.is_zero())
        return b.is_zero() ? QPolynomial() : b.primitive_part() * QPolynomial(b.content());
    if (b.is_zero())
        return a.primitive_part() * QPolynomial(a.content());

    mpz_class c;
    mpz_class ca = a.content(), cb = b.content();
    mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());

    QPolynomial x = a.primitive_part();
    QPolynomial y = b.primitive_part();
    if (x.degree() < y.degree())
        std::swap(x, y);
    // Powers of q are split off first: the denominators seen in practice are
    // products of q^k and cyclotomic factors, so this shortens most sequences.
    std::size_t vx = x.valuation(), vy = y.valuation();
    std::size_t v = std::min(vx, vy);
    auto strip = [](const QPolynomial& p, std::size_t k) {
        std::vector<mpz_class> cs(p.coefficients().begin() + static_cast<long>(k), p.coefficients().end());
        return QPolynomial(std::move(cs));
    };
    x = strip(x, vx);
    y = strip(y, vy);
    if (x.degree() < y.degree())
        std::swap(x, y);
    while (!y.is_zero()) {
        if (y.is_constant()) {
            x = QPolynomial(1);
            break;
        }
        QPolynomial r = pseudo_remainder(x, y);
        x = std::move(y);
        y = r.is_zero() ? QPolynomial() : r.primitive_part();
    }
    x = x.primitive_part();
    return QPolynomial::monomial(c, v) * x;
}

// ---------------------------------------------------------------------------

QRational::QRational(QPolynomial num, QPolynomial den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero())
        throw DomainError("rational function with zero denominator");
    normalize();
}

void QRational::normalize() {
    if (num_.is_zero()) {
        den_ = QPolynomial(1);
        return;
    }
    if (!den_.is_constant()) {
        QPolynomial g = gcd(num_, den_);
        g = g.primitive_part();
        if (!g.is_constant()) {
            num_ = divexact(num_, g);
            den_ = divexact(den_, g);
        }
    }
    mpz_class cn = num_.content(), cd = den_.content(), c;
    mpz_gcd(c.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
    if (den_.leading() < 0)
        c = -c;
    if (c != 1) {
        num_ = num_.divexact(c);
        den_ = den_.divexact(c);
    }
}

const QPolynomial& QRational::as_polynomial() const {
    if (!is_polynomial())
        throw InternalError("expected a polynomial, got " + render());
    return num_;
}

QRational& QRational::operator+=(const QRational& o) {
    if (o.is_zero())
        return *this;
    if (is_zero())
        return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
    }
    normalize();
    return *this;
}

QRational& QRational::operator-=(const QRational& o) {
    return *this += -o;
}

QRational& QRational::operator*=(const QRational& o) {
    if (is_zero() || o.is_zero()) {
        *this = QRational();
        return *this;
    }
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

QRational& QRational::operator/=(const QRational& o) {
    if (o.is_zero())
        throw DomainError("division by zero rational function");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

QRational QRational::operator-() const {
    QRational r = *this;
    r.num_ = -r.num_;
    return r;
}

QRational QRational::adams(unsigned d) const {
    QRational r;
    r.num_ = num_.adams(d);
    r.den_ = den_.adams(d);
    return r;
}

std::string QRational::render() const {
    if (is_polynomial())
        return num_.render();
    return "(" + num_.render() + ")/(" + den_.render() + ")";
}

} // namespace kacq
