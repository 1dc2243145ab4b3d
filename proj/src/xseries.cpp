#include "kacq/xseries.hpp"

#include <algorithm>
#include <numeric>

#include "kacq/errors.hpp"

namespace kacq {

XSeries::XSeries(DimVector bound) : bound_(std::move(bound)) {
    const std::size_t n = bound_.size();
    strides_.assign(n, 1);
    std::size_t size = 1;
    for (std::size_t i = n; i-- > 0;) {
        strides_[i] = size;
        size *= static_cast<std::size_t>(bound_[i]) + 1;
    }
    coeffs_.assign(size, QRational());
    keys_.reserve(size);
    std::vector<int> key(n, 0);
    for (std::size_t idx = 0; idx < size; ++idx) {
        keys_.push_back(key);
        for (std::size_t i = n; i-- > 0;) {
            if (key[i] < bound_[i]) {
                ++key[i];
                break;
            }
            key[i] = 0;
        }
    }
}

XSeries XSeries::one(DimVector bound) {
    XSeries s(std::move(bound));
    s.coeffs_[0] = QRational(1);
    return s;
}

DimVector XSeries::key_of(std::size_t index) const {
    return DimVector(keys_.at(index));
}

std::size_t XSeries::index_of(const DimVector& key) const {
    if (!key.fits_in(bound_))
        throw InputError("series key " + key.to_string() + " outside bound " + bound_.to_string());
    std::size_t idx = 0;
    for (std::size_t i = 0; i < key.size(); ++i)
        idx += static_cast<std::size_t>(key[i]) * strides_[i];
    return idx;
}

long XSeries::degree_of(std::size_t index) const {
    const auto& k = keys_[index];
    return std::accumulate(k.begin(), k.end(), 0L);
}

bool XSeries::below(std::size_t sub, std::size_t index) const {
    const auto& a = keys_[sub];
    const auto& b = keys_[index];
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i])
            return false;
    return true;
}

QRational XSeries::coeff(const DimVector& key) const {
    if (key.size() != bound_.size())
        throw InputError("series key has the wrong number of variables");
    if (!key.fits_in(bound_))
        return QRational();
    return coeffs_[index_of(key)];
}

void XSeries::set(const DimVector& key, QRational value) {
    if (key.size() != bound_.size())
        throw InputError("series key has the wrong number of variables");
    if (key.fits_in(bound_))
        coeffs_[index_of(key)] = std::move(value);
}

void XSeries::add_to(const DimVector& key, const QRational& value) {
    if (key.size() != bound_.size())
        throw InputError("series key has the wrong number of variables");
    if (key.fits_in(bound_))
        coeffs_[index_of(key)] += value;
}

std::vector<std::pair<DimVector, QRational>> XSeries::terms() const {
    std::vector<std::pair<DimVector, QRational>> out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero())
            out.emplace_back(key_of(i), coeffs_[i]);
    return out;
}

namespace {

void require_same_bound(const XSeries& a, const XSeries& b) {
    if (!(a.bound() == b.bound()))
        throw InputError("series bounds differ: " + a.bound().to_string() + " vs " + b.bound().to_string());
}

} // namespace

XSeries& XSeries::operator+=(const XSeries& o) {
    require_same_bound(*this, o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] += o.coeffs_[i];
    return *this;
}

XSeries& XSeries::operator-=(const XSeries& o) {
    require_same_bound(*this, o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] -= o.coeffs_[i];
    return *this;
}

XSeries XSeries::scaled(const QRational& c) const {
    XSeries out = *this;
    for (auto& x : out.coeffs_)
        if (!x.is_zero())
            x *= c;
    return out;
}

XSeries operator*(const XSeries& a, const XSeries& b) {
    require_same_bound(a, b);
    XSeries out(a.bound_);
    const std::size_t n = a.coeffs_.size();
    for (std::size_t target = 0; target < n; ++target) {
        QRational acc;
        for (std::size_t i = 0; i <= target; ++i) {
            if (a.coeffs_[i].is_zero() || !a.below(i, target))
                continue;
            const std::size_t j = target - i;
            if (!b.coeffs_[j].is_zero())
                acc += a.coeffs_[i] * b.coeffs_[j];
        }
        out.coeffs_[target] = std::move(acc);
    }
    return out;
}

// With E the Euler operator (E x^k = |k| x^k), E S = S * E(log S). Solving
// coefficientwise in increasing key order gives
//   L_k = S_k - (1/|k|) sum_{0<j<k} |j| L_j S_{k-j}.
XSeries formal_log(const XSeries& s) {
    if (!(s.at(0) == QRational(1)))
        throw DomainError("formal_log needs constant term 1");
    XSeries l(s.bound());
    for (std::size_t k = 1; k < s.box_size(); ++k) {
        QRational acc;
        for (std::size_t j = 1; j < k; ++j) {
            if (l.at(j).is_zero() || !s.below(j, k))
                continue;
            const QRational& rest = s.at(k - j);
            if (rest.is_zero())
                continue;
            acc += l.at(j) * rest * QRational(s.degree_of(j));
        }
        QRational lk = s.at(k);
        if (!acc.is_zero())
            lk -= acc * QRational::fraction(1, s.degree_of(k));
        l.at(k) = std::move(lk);
    }
    return l;
}

// E(exp F) = exp F * E F:  S_k = (1/|k|) sum_{0<j<=k} |j| F_j S_{k-j}.
XSeries formal_exp(const XSeries& f) {
    if (!f.at(0).is_zero())
        throw DomainError("formal_exp needs constant term 0");
    XSeries s = XSeries::one(f.bound());
    for (std::size_t k = 1; k < f.box_size(); ++k) {
        QRational acc;
        for (std::size_t j = 1; j <= k; ++j) {
            if (f.at(j).is_zero() || !f.below(j, k))
                continue;
            const QRational& rest = s.at(k - j);
            if (rest.is_zero())
                continue;
            acc += f.at(j) * rest * QRational(f.degree_of(j));
        }
        if (!acc.is_zero())
            acc *= QRational::fraction(1, f.degree_of(k));
        s.at(k) = std::move(acc);
    }
    return s;
}

XSeries adams(const XSeries& s, unsigned d) {
    if (d == 0)
        throw InputError("adams operation needs d >= 1");
    if (d == 1)
        return s;
    XSeries out(s.bound());
    for (std::size_t i = 0; i < s.box_size(); ++i) {
        if (s.at(i).is_zero())
            continue;
        std::vector<int> key = s.key_of(i).entries();
        bool inside = true;
        for (std::size_t v = 0; v < key.size(); ++v) {
            key[v] *= static_cast<int>(d);
            inside = inside && key[v] <= s.bound()[v];
        }
        if (inside)
            out.at(out.index_of(DimVector(std::move(key)))) = s.at(i).adams(d);
    }
    return out;
}

int moebius(unsigned n) {
    if (n == 0)
        throw InputError("moebius(0) is undefined");
    int result = 1;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p)
            continue;
        n /= p;
        if (n % p == 0)
            return 0;
        result = -result;
    }
    if (n > 1)
        result = -result;
    return result;
}

namespace {

// Largest d for which some non-zero term survives adams(., d).
unsigned max_adams_degree(const XSeries& s) {
    long top = 0;
    for (std::size_t i = 0; i < s.bound().size(); ++i)
        top = std::max<long>(top, s.bound()[i]);
    return static_cast<unsigned>(std::max<long>(top, 1));
}

} // namespace

XSeries plethystic_log(const XSeries& s) {
    XSeries l = formal_log(s);
    XSeries out(s.bound());
    for (unsigned d = 1; d <= max_adams_degree(s); ++d) {
        int mu = moebius(d);
        if (mu == 0)
            continue;
        out += adams(l, d).scaled(QRational::fraction(mu, d));
    }
    return out;
}

XSeries plethystic_exp(const XSeries& f) {
    if (!f.at(0).is_zero())
        throw DomainError("plethystic_exp needs constant term 0");
    XSeries sum(f.bound());
    for (unsigned d = 1; d <= max_adams_degree(f); ++d)
        sum += adams(f, d).scaled(QRational::fraction(1, d));
    return formal_exp(sum);
}

} // namespace kacq
