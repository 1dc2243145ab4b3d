#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <mutex>
#include <string>
#include <utility>

#include "kacq/qpoly.hpp"
#include "kacq/quiver.hpp"
#include "kacq/xseries.hpp"

namespace kacq {

/// Hua's generating series, truncated at bound:
///   sum over multipartitions pi with |pi^(i)| <= bound_i of
///     prod_{a:i->j} q^<pi^i,pi^j>  /  prod_i q^<pi^i,pi^i> b_{pi^i}(q^-1)   x^|pi|.
XSeries hua_series(const Quiver& q, const DimVector& bound);

/// a_alpha(q) = coefficient of x^alpha in (q - 1) * plethystic_log(hua_series(Q, alpha)).
/// Throws InternalError if the coefficient fails to be an integer polynomial.
QPolynomial kac_polynomial(const Quiver& q, const DimVector& alpha);
mpz_class kac_at_one(const Quiver& q, const DimVector& alpha);

struct KacResult {
    std::string quiver_key;
    DimVector dim;
    QPolynomial polynomial;
    mpz_class value_at_one;
};

/// Memo of Kac polynomials keyed by (quiver hash, dimension vector in
/// id-sorted vertex order). Optionally backed by an append-only text file
/// with lines "hash TAB dims TAB polynomial"; the last valid line for a key
/// wins and malformed lines are ignored. Thread-safe.
class KacStore {
public:
    KacStore() = default;
    explicit KacStore(std::filesystem::path file);

    KacResult get(const Quiver& q, const DimVector& alpha);

    /// Number of engine computations performed (cache misses).
    std::uint64_t computations() const;
    std::size_t size() const;

private:
    using Key = std::pair<std::string, std::string>;
    void load();

    std::filesystem::path file_;
    bool persistent_ = false;
    mutable std::mutex mutex_;
    std::map<Key, QPolynomial> entries_;
    std::uint64_t computations_ = 0;
};

KacResult cached_kac(KacStore& store, const Quiver& q, const DimVector& alpha);

/// Dimension vector re-ordered to follow id-sorted vertex order.
std::string sorted_dims_key(const Quiver& q, const DimVector& alpha);

} // namespace kacq
