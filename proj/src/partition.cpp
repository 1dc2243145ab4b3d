#include "kacq/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "kacq/errors.hpp"

namespace kacq {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p <= 0)
            throw InputError("partition parts must be positive");
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

int Partition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::conjugate() const {
    Partition c;
    if (parts_.empty())
        return c;
    c.parts_.assign(static_cast<std::size_t>(parts_.front()), 0);
    for (int p : parts_)
        for (int k = 0; k < p; ++k)
            ++c.parts_[static_cast<std::size_t>(k)];
    return c;
}

std::vector<int> Partition::multiplicities() const {
    std::vector<int> m(parts_.empty() ? 1 : static_cast<std::size_t>(parts_.front()) + 1, 0);
    for (int p : parts_)
        ++m[static_cast<std::size_t>(p)];
    return m;
}

std::string Partition::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

std::vector<Partition> partitions_of(int n) {
    if (n < 0)
        throw InputError("partitions_of needs n >= 0");
    std::vector<Partition> out;
    std::vector<int> current;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int first = 1; first <= std::min(remaining, max_part); ++first) {
            current.push_back(first);
            rec(remaining - first, first);
            current.pop_back();
        }
    };
    rec(n, n);
    return out;
}

long hua_pairing(const Partition& l, const Partition& m) {
    auto lc = l.conjugate().parts();
    auto mc = m.conjugate().parts();
    long s = 0;
    for (std::size_t k = 0; k < std::min(lc.size(), mc.size()); ++k)
        s += static_cast<long>(lc[k]) * mc[k];
    return s;
}

QPolynomial b_poly(const Partition& l) {
    QPolynomial b(1);
    for (int mult : l.multiplicities())
        for (int j = 1; j <= mult; ++j)
            b *= QPolynomial(1) - QPolynomial::monomial(1, static_cast<std::size_t>(j));
    return b;
}

} // namespace kacq
