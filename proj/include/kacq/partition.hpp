#pragma once

#include <compare>
#include <string>
#include <vector>

#include "kacq/qpoly.hpp"

namespace kacq {

/// Integer partition; parts are weakly decreasing and positive.
class Partition {
public:
    Partition() = default;
    /// Sorts the parts; throws InputError on a non-positive part.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int weight() const;
    Partition conjugate() const;
    /// multiplicities()[k] = number of parts equal to k (index 0 unused).
    std::vector<int> multiplicities() const;
    std::string to_string() const;

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

/// All partitions of n in ascending lexicographic order of their part lists,
/// e.g. 3 -> (1,1,1), (2,1), (3).
std::vector<Partition> partitions_of(int n);

/// <l,m> = sum_k l'_k m'_k over conjugate parts (= sum_{i,j} min(l_i, m_j)).
long hua_pairing(const Partition& l, const Partition& m);

/// b_l(t) = prod_k prod_{j=1}^{m_k(l)} (1 - t^j), as a polynomial in t.
QPolynomial b_poly(const Partition& l);

} // namespace kacq
