#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "kacq/kac.hpp"
#include "kacq/quiver.hpp"

namespace kacq {

/// Vertex (i, chi) of the universal abelian covering quiver, chi in Z^{arrows}.
struct CoverVertex {
    std::size_t base = 0;
    std::vector<int> chi;

    auto operator<=>(const CoverVertex&) const = default;
};

/// Finitely supported dimension vector on the covering quiver; only
/// positive entries are stored.
class CoverDim {
public:
    CoverDim() = default;
    void set(const CoverVertex& v, int value);
    int at(const CoverVertex& v) const;
    const std::map<CoverVertex, int>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    std::size_t support_size() const { return entries_.size(); }

    auto operator<=>(const CoverDim&) const = default;

private:
    std::map<CoverVertex, int> entries_;
};

struct CoverStep {
    std::size_t arrow;
    CoverVertex vertex;
};

/// (a, chi): (i, chi) -> (j, chi + e_a) for each arrow a: i -> j leaving v.base.
std::vector<CoverStep> cover_arrows_out(const Quiver& q, const CoverVertex& v);
/// Arrows arriving at v: (a, chi - e_a) for each a: i -> v.base.
std::vector<CoverStep> cover_arrows_in(const Quiver& q, const CoverVertex& v);

/// c(beta)_i = sum_chi beta_{i,chi}.
DimVector c_map(const Quiver& q, const CoverDim& beta);
/// Moves the support by -xi (the translation action on characters).
CoverDim translate(const CoverDim& beta, const std::vector<int>& xi);
/// Translation representative whose componentwise minimum character over
/// the support is zero. Throws InputError for an empty vector.
CoverDim canonicalize(const CoverDim& beta);

/// e.g. "i[0,1,0]=2 j[1,1,0]=1", in CoverVertex order.
std::string serialize(const Quiver& q, const CoverDim& beta);
std::string vertex_label(const Quiver& q, const CoverVertex& v);

struct CompatibleClass {
    CoverDim beta;             // canonical representative
    std::string key;           // serialize(beta)
    Quiver support_quiver;     // full subquiver of the cover on the support
    DimVector support_dim;
};

struct EnumerationOptions {
    std::uint64_t node_cap = 5'000'000;
};

/// All translation classes of connected-support covering dimension vectors
/// beta with c(beta) = alpha, sorted by key. Throws InputError if alpha is
/// zero or touches several connected components of q, and ResourceError if
/// the search visits more than node_cap nodes.
std::vector<CompatibleClass> enumerate_compatible(const Quiver& q, const DimVector& alpha,
                                                  const EnumerationOptions& options = {});

struct Contribution {
    CompatibleClass cls;
    QPolynomial polynomial;
    mpz_class value;
};

struct VerificationReport {
    mpz_class lhs;
    std::vector<Contribution> contributions;
    mpz_class rhs;
    bool ok = false;

    /// Classes whose Kac polynomial is non-zero.
    std::size_t contributing_classes() const;
    std::string render() const;
};

struct VerifyOptions {
    std::uint64_t node_cap = 5'000'000;
    unsigned threads = 1;
    KacStore* store = nullptr;
};

/// Checks a_{Q,alpha}(1) = sum over compatible classes of a_{support,beta}(1).
/// The left side runs the engine on Q itself; each contribution runs it on
/// the class's support quiver.
VerificationReport verify_main_theorem(const Quiver& q, const DimVector& alpha, const VerifyOptions& options = {});

} // namespace kacq
