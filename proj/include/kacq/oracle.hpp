#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "kacq/quiver.hpp"

namespace kacq {

/// Limits for the finite-field brute force.
struct OracleLimits {
    std::uint64_t max_points = 10'000'000;  // p^dim R(Q, alpha)
    std::uint64_t max_group = 100'000;      // |GL_alpha(F_p)|
};

/// A point of R(Q, alpha) over F_p: one row-major alpha_t x alpha_s matrix
/// per arrow, concatenated in arrow order, entries in [0, p).
struct FiniteFieldRep {
    unsigned p = 2;
    std::vector<int> entries;
};

std::uint64_t representation_space_dim(const Quiver& q, const DimVector& alpha);
/// |GL_alpha(F_p)|, saturating at UINT64_MAX.
std::uint64_t general_linear_order(const DimVector& alpha, unsigned p);
bool oracle_feasible(const Quiver& q, const DimVector& alpha, unsigned p, const OracleLimits& limits = {});

/// Dimension over F_p of End(M).
std::size_t endomorphism_dimension(const Quiver& q, const DimVector& alpha, const FiniteFieldRep& m);

struct OrbitCensus {
    std::uint64_t points = 0;
    std::vector<FiniteFieldRep> representatives;  // one per GL_alpha orbit
    std::vector<std::uint64_t> orbit_sizes;
    std::vector<bool> absolutely_indecomposable;
};

/// Partitions R(Q, alpha)(F_p) into isomorphism classes and decides
/// absolute indecomposability of each. Throws ResourceError past the limits.
OrbitCensus orbit_census(const Quiver& q, const DimVector& alpha, unsigned p, const OracleLimits& limits = {});

/// Number of isomorphism classes of absolutely indecomposable
/// representations of dimension alpha over F_p, by exhaustive search.
std::uint64_t count_abs_indec(const Quiver& q, const DimVector& alpha, unsigned p, const OracleLimits& limits = {});

/// Spanning trees by trying every (n-1)-subset of the non-loop arrows.
std::uint64_t brute_force_spanning_trees(const Quiver& q);

/// Isomorphism classes of bipartite trees with d sources and e sinks whose
/// edges carry one of m colours, distinct at every vertex. Needs d + e <= 9.
std::uint64_t enumerate_cover_thin_trees(int m, int d, int e);

enum class SweepStatus { ok, fail, skipped };

struct SweepLine {
    Quiver quiver;
    DimVector alpha;
    unsigned p = 2;
    mpz_class engine;
    std::optional<std::uint64_t> oracle;
    SweepStatus status = SweepStatus::skipped;
};

struct SweepReport {
    std::vector<SweepLine> lines;

    std::size_t mismatches() const;
    std::size_t checked() const;
    std::size_t skipped() const;
    /// One line per instance: "quiver TAB alpha TAB p TAB engine TAB oracle TAB OK|FAIL|SKIPPED".
    std::string render() const;
};

/// Engine vs brute force for every connected quiver with <= 2 vertices and
/// <= 3 arrows (loops included) and every alpha with total <= max_total_dim.
SweepReport oracle_sweep(int max_total_dim, const std::vector<unsigned>& primes, unsigned threads = 1,
                         const OracleLimits& limits = {});

} // namespace kacq
