#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "kacq/qpoly.hpp"
#include "kacq/quiver.hpp"

namespace kacq {

/// Multivariate power series sum_k c_k x^k with coefficients in Q(q),
/// truncated componentwise at a bound: only keys k <= bound are kept.
///
/// Coefficients are stored densely in mixed-radix order (last variable
/// fastest), which coincides with lexicographic key order; key addition is
/// index addition as long as the sum stays inside the box.
class XSeries {
public:
    explicit XSeries(DimVector bound);
    static XSeries one(DimVector bound);

    const DimVector& bound() const { return bound_; }
    std::size_t box_size() const { return coeffs_.size(); }

    /// Zero for keys outside the bound.
    QRational coeff(const DimVector& key) const;
    /// Keys outside the bound are dropped (truncation).
    void set(const DimVector& key, QRational value);
    void add_to(const DimVector& key, const QRational& value);

    /// Non-zero terms in lexicographic key order.
    std::vector<std::pair<DimVector, QRational>> terms() const;

    XSeries& operator+=(const XSeries& o);
    XSeries& operator-=(const XSeries& o);
    XSeries scaled(const QRational& c) const;
    friend XSeries operator+(XSeries a, const XSeries& b) { return a += b; }
    friend XSeries operator-(XSeries a, const XSeries& b) { return a -= b; }
    friend XSeries operator*(const XSeries& a, const XSeries& b);
    friend bool operator==(const XSeries& a, const XSeries& b) {
        return a.bound_ == b.bound_ && a.coeffs_ == b.coeffs_;
    }

    // Index-level access used by the algorithms below.
    const QRational& at(std::size_t index) const { return coeffs_[index]; }
    QRational& at(std::size_t index) { return coeffs_[index]; }
    DimVector key_of(std::size_t index) const;
    /// Index of key; key must fit in the bound.
    std::size_t index_of(const DimVector& key) const;
    long degree_of(std::size_t index) const;
    /// True when key(sub) <= key(index) componentwise.
    bool below(std::size_t sub, std::size_t index) const;

private:
    DimVector bound_;
    std::vector<std::size_t> strides_;
    std::vector<std::vector<int>> keys_;
    std::vector<QRational> coeffs_;
};

/// log(S) for S with constant term 1; throws DomainError otherwise.
XSeries formal_log(const XSeries& s);
/// exp(S) for S with constant term 0; throws DomainError otherwise.
XSeries formal_exp(const XSeries& s);
/// Adams operation: q -> q^d and x_i -> x_i^d, re-truncated to the bound.
XSeries adams(const XSeries& s, unsigned d);
/// Log(S) = sum_{d>=1} mu(d)/d * adams(log S, d); needs constant term 1.
XSeries plethystic_log(const XSeries& s);
/// Exp(F) = exp(sum_{d>=1} adams(F, d)/d); needs constant term 0.
XSeries plethystic_exp(const XSeries& f);

int moebius(unsigned n);

} // namespace kacq
