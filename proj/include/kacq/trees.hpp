#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "kacq/covering.hpp"
#include "kacq/quiver.hpp"

namespace kacq {

/// Kirchhoff count of spanning trees of the underlying multigraph (loops
/// dropped, parallel arrows counted with multiplicity). 0 if disconnected.
mpz_class spanning_tree_count(const Quiver& q);

struct ThinCheck {
    mpz_class kac_at_one;
    mpz_class spanning_trees;
    bool ok = false;
};

/// Compares a(1) at the all-ones vector with the spanning tree count.
ThinCheck thin_kac_at_one_check(const Quiver& q);

/// Kronecker quiver K(m) with dimension vector (d, e); n = m - 1.
struct CoverThinParams {
    int m = 1;
    int d = 1;
    int e = 1;

    int n() const { return m - 1; }
};

/// Binomial coefficient, 0 when k < 0 or k > n.
mpz_class binomial(long n, long k);

/// ct_(d,e) = 1/d sum_{i=1}^m C(m,i) C(ne,d-1) C(n(d-1),e-i) i/e, summed
/// exactly; throws InternalError if the sum is not an integer.
mpz_class cover_thin_count(const CoverThinParams& p);

/// 3/((d+2)(d+3)) C(2d,d) C(2d+2,d+1); equals cover_thin_count({3, d, d+1}).
mpz_class cover_thin_closed_form_m3(int d);

/// n(k+1) ln n + k(n-1) ln k - (nk-1) ln(nk-1) - (n-k) ln(n-k), n = m - 1,
/// with x ln x read as 0 at x = 0. Limit of ln(ct_(d,kd))/d.
/// Throws DomainError unless m >= 2 and 1 <= k <= n.
double growth_rate_bound(int m, double k);

struct GrowthRow {
    int d;
    int e;
    mpz_class ct;
    double log_ratio;  // ln(ct)/d, NaN when ct == 0
    double bound;
};

/// Rows for d = 1..dmax where e = k d is an integer (k = k_num / k_den).
std::vector<GrowthRow> growth_table(int m, long k_num, long k_den, int dmax);
/// Header line "d TAB ct TAB ln(ct)/d TAB bound", then one row per entry.
std::string render_growth_table(const std::vector<GrowthRow>& rows);

/// Outcome of the tree-module count under the "every contributing class
/// has Kac polynomial 1" hypothesis.
struct TreeModuleCount {
    std::optional<std::size_t> count;       // set when the hypothesis holds
    std::optional<Contribution> witness;    // first class with polynomial != 0, 1
};

TreeModuleCount tree_module_count_if_exceptional(const Quiver& q, const DimVector& alpha,
                                                 const VerifyOptions& options = {});

} // namespace kacq
