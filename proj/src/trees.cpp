#include "kacq/trees.hpp"

#include <cmath>
#include <iomanip>
#include <limits>
#include <numeric>
#include <sstream>

#include "kacq/errors.hpp"
#include "kacq/kac.hpp"

namespace kacq {

namespace {

// Bareiss fraction-free elimination; exact for integer matrices.
mpz_class determinant(std::vector<std::vector<mpz_class>> m) {
    const std::size_t n = m.size();
    if (n == 0)
        return 1;
    mpz_class sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0)
                ++swap_row;
            if (swap_row == n)
                return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

} // namespace

mpz_class spanning_tree_count(const Quiver& q) {
    const std::size_t n = q.num_vertices();
    if (n == 0)
        throw InputError("spanning_tree_count needs at least one vertex");
    std::vector<std::vector<mpz_class>> laplacian(n, std::vector<mpz_class>(n, 0));
    for (const auto& a : q.arrows()) {
        if (a.is_loop())
            continue;
        laplacian[a.source][a.source] += 1;
        laplacian[a.target][a.target] += 1;
        laplacian[a.source][a.target] -= 1;
        laplacian[a.target][a.source] -= 1;
    }
    laplacian.pop_back();
    for (auto& row : laplacian)
        row.pop_back();
    return determinant(std::move(laplacian));
}

ThinCheck thin_kac_at_one_check(const Quiver& q) {
    ThinCheck c;
    c.kac_at_one = kac_at_one(q, DimVector::ones(q.num_vertices()));
    c.spanning_trees = spanning_tree_count(q);
    c.ok = c.kac_at_one == c.spanning_trees;
    return c;
}

mpz_class binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n)
        return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

mpz_class cover_thin_count(const CoverThinParams& p) {
    if (p.m < 1 || p.d < 1 || p.e < 1)
        throw InputError("cover_thin_count needs m, d, e >= 1");
    const long n = p.n();
    mpq_class sum = 0;
    for (long i = 1; i <= p.m; ++i) {
        mpz_class term = binomial(p.m, i) * binomial(n * p.e, p.d - 1) * binomial(n * (p.d - 1), p.e - i) * i;
        sum += mpq_class(term, p.e);
    }
    sum /= p.d;
    sum.canonicalize();
    if (sum.get_den() != 1)
        throw InternalError("cover-thin count is not an integer for m=" + std::to_string(p.m) +
                            " d=" + std::to_string(p.d) + " e=" + std::to_string(p.e));
    return sum.get_num();
}

mpz_class cover_thin_closed_form_m3(int d) {
    if (d < 1)
        throw InputError("cover_thin_closed_form_m3 needs d >= 1");
    mpq_class v(3 * binomial(2L * d, d) * binomial(2L * d + 2, d + 1), mpz_class((d + 2) * (d + 3)));
    v.canonicalize();
    if (v.get_den() != 1)
        throw InternalError("closed form is not an integer");
    return v.get_num();
}

namespace {

double xlogx(double x) {
    return x == 0.0 ? 0.0 : x * std::log(x);
}

} // namespace

double growth_rate_bound(int m, double k) {
    if (m < 2)
        throw DomainError("growth_rate_bound needs m >= 2");
    const double n = m - 1;
    if (!(k >= 1.0) || k > n)
        throw DomainError("growth_rate_bound needs 1 <= k <= m - 1");
    return n * (k + 1) * std::log(n) + k * (n - 1) * std::log(k) - xlogx(n * k - 1) - xlogx(n - k);
}

std::vector<GrowthRow> growth_table(int m, long k_num, long k_den, int dmax) {
    if (k_den <= 0 || k_num <= 0)
        throw InputError("growth ratio k must be a positive fraction");
    const double k = static_cast<double>(k_num) / static_cast<double>(k_den);
    const double bound = growth_rate_bound(m, k);
    std::vector<GrowthRow> rows;
    for (int d = 1; d <= dmax; ++d) {
        if ((k_num * d) % k_den)
            continue;
        const int e = static_cast<int>(k_num * d / k_den);
        GrowthRow row{d, e, cover_thin_count({m, d, e}), 0.0, bound};
        if (row.ct > 0) {
            long exponent = 0;
            double mantissa = mpz_get_d_2exp(&exponent, row.ct.get_mpz_t());
            row.log_ratio = (std::log(mantissa) + static_cast<double>(exponent) * std::log(2.0)) / d;
        } else {
            row.log_ratio = std::numeric_limits<double>::quiet_NaN();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string render_growth_table(const std::vector<GrowthRow>& rows) {
    std::ostringstream out;
    out << std::setprecision(10) << "d\tct\tln(ct)/d\tbound\n";
    for (const auto& r : rows)
        out << r.d << '\t' << r.ct.get_str() << '\t' << r.log_ratio << '\t' << r.bound << '\n';
    return out.str();
}

TreeModuleCount tree_module_count_if_exceptional(const Quiver& q, const DimVector& alpha,
                                                 const VerifyOptions& options) {
    VerificationReport report = verify_main_theorem(q, alpha, options);
    TreeModuleCount result;
    std::size_t count = 0;
    for (const auto& c : report.contributions) {
        if (c.polynomial.is_zero())
            continue;
        if (!(c.polynomial == QPolynomial(1))) {
            result.witness = c;
            return result;
        }
        ++count;
    }
    result.count = count;
    return result;
}

} // namespace kacq
