#include "kacq/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <limits>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "kacq/errors.hpp"
#include "kacq/families.hpp"
#include "kacq/kac.hpp"

namespace kacq {

namespace {

using Matrix = std::vector<int>;  // row-major, square unless stated

struct Layout {
    std::vector<std::size_t> offset;  // per arrow
    std::size_t dim = 0;
};

Layout layout_of(const Quiver& q, const DimVector& alpha) {
    Layout l;
    for (const auto& a : q.arrows()) {
        l.offset.push_back(l.dim);
        l.dim += static_cast<std::size_t>(alpha[a.target]) * static_cast<std::size_t>(alpha[a.source]);
    }
    return l;
}

int inverse_mod(int x, int p) {
    for (int y = 1; y < p; ++y)
        if (x * y % p == 1)
            return y;
    throw InternalError("no inverse mod p");
}

int primitive_root(int p) {
    for (int g = 1; g < p; ++g) {
        int x = 1, order = 0;
        do {
            x = x * g % p;
            ++order;
        } while (x != 1);
        if (order == p - 1)
            return g;
    }
    throw InternalError("no primitive root");
}

// Rank of a rows x cols matrix over F_p (destroys its argument).
std::size_t rank_mod(std::vector<std::vector<int>> m, std::size_t cols, int p) {
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < m.size() && m[pivot][c] == 0)
            ++pivot;
        if (pivot == m.size())
            continue;
        std::swap(m[rank], m[pivot]);
        int inv = inverse_mod(m[rank][c], p);
        for (auto& x : m[rank])
            x = x * inv % p;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == rank || m[r][c] == 0)
                continue;
            int f = m[r][c];
            for (std::size_t k = 0; k < cols; ++k)
                m[r][k] = ((m[r][k] - f * m[rank][k]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

bool invertible_mod(const int* block, std::size_t n, int p) {
    std::vector<std::vector<int>> m(n, std::vector<int>(n));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            m[r][c] = block[r * n + c];
    return rank_mod(std::move(m), n, p) == n;
}

// Basis of the solution space of the intertwining equations
// X_t M_a = M_a X_s, unknowns laid out vertex by vertex.
std::vector<std::vector<int>> endomorphism_basis(const Quiver& q, const DimVector& alpha, const FiniteFieldRep& m,
                                                 std::vector<std::size_t>& vertex_offset) {
    const int p = static_cast<int>(m.p);
    vertex_offset.assign(q.num_vertices(), 0);
    std::size_t unknowns = 0;
    for (std::size_t v = 0; v < q.num_vertices(); ++v) {
        vertex_offset[v] = unknowns;
        unknowns += static_cast<std::size_t>(alpha[v]) * static_cast<std::size_t>(alpha[v]);
    }
    Layout layout = layout_of(q, alpha);

    std::vector<std::vector<int>> rows;
    for (std::size_t a = 0; a < q.num_arrows(); ++a) {
        const auto& arrow = q.arrows()[a];
        const std::size_t rt = static_cast<std::size_t>(alpha[arrow.target]);
        const std::size_t cs = static_cast<std::size_t>(alpha[arrow.source]);
        const int* ma = m.entries.data() + layout.offset[a];
        for (std::size_t r = 0; r < rt; ++r) {
            for (std::size_t c = 0; c < cs; ++c) {
                std::vector<int> row(unknowns, 0);
                // sum_k X_t[r][k] M[k][c]
                for (std::size_t k = 0; k < rt; ++k) {
                    auto& x = row[vertex_offset[arrow.target] + r * rt + k];
                    x = (x + ma[k * cs + c]) % p;
                }
                // - sum_k M[r][k] X_s[k][c]
                for (std::size_t k = 0; k < cs; ++k) {
                    auto& x = row[vertex_offset[arrow.source] + k * cs + c];
                    x = ((x - ma[r * cs + k]) % p + p) % p;
                }
                rows.push_back(std::move(row));
            }
        }
    }

    // Reduced row echelon form.
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < unknowns && rank < rows.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][c] == 0)
            ++pivot;
        if (pivot == rows.size())
            continue;
        std::swap(rows[rank], rows[pivot]);
        int inv = inverse_mod(rows[rank][c], p);
        for (auto& x : rows[rank])
            x = x * inv % p;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][c] == 0)
                continue;
            int f = rows[r][c];
            for (std::size_t k = 0; k < unknowns; ++k)
                rows[r][k] = ((rows[r][k] - f * rows[rank][k]) % p + p) % p;
        }
        pivot_col.push_back(c);
        ++rank;
    }
    std::vector<bool> is_pivot(unknowns, false);
    for (auto c : pivot_col)
        is_pivot[c] = true;

    std::vector<std::vector<int>> basis;
    for (std::size_t free = 0; free < unknowns; ++free) {
        if (is_pivot[free])
            continue;
        std::vector<int> v(unknowns, 0);
        v[free] = 1;
        for (std::size_t r = 0; r < rank; ++r)
            v[pivot_col[r]] = (p - rows[r][free]) % p;
        basis.push_back(std::move(v));
    }
    return basis;
}

// End(M) is local with residue field F_p iff its non-units form a
// subspace of codimension one.
bool absolutely_indecomposable(const Quiver& q, const DimVector& alpha, const FiniteFieldRep& m) {
    const int p = static_cast<int>(m.p);
    std::vector<std::size_t> vertex_offset;
    auto basis = endomorphism_basis(q, alpha, m, vertex_offset);
    const std::size_t e = basis.size();
    const std::size_t unknowns = basis.empty() ? 0 : basis.front().size();

    std::uint64_t total = 1;
    for (std::size_t k = 0; k < e; ++k)
        total *= static_cast<std::uint64_t>(p);

    std::uint64_t non_units = 0;
    std::vector<std::vector<int>> echelon;  // rows with leading 1, independent
    std::vector<std::size_t> lead;
    std::vector<int> coeff(e, 0);
    std::vector<int> x(unknowns);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t t = idx;
        for (std::size_t k = 0; k < e; ++k) {
            coeff[k] = static_cast<int>(t % static_cast<std::uint64_t>(p));
            t /= static_cast<std::uint64_t>(p);
        }
        std::fill(x.begin(), x.end(), 0);
        for (std::size_t k = 0; k < e; ++k)
            if (coeff[k])
                for (std::size_t u = 0; u < unknowns; ++u)
                    x[u] = (x[u] + coeff[k] * basis[k][u]) % p;

        bool unit = true;
        for (std::size_t v = 0; v < q.num_vertices() && unit; ++v)
            if (alpha[v] > 0)
                unit = invertible_mod(x.data() + vertex_offset[v], static_cast<std::size_t>(alpha[v]), p);
        if (unit)
            continue;

        ++non_units;
        std::vector<int> r = x;
        for (std::size_t k = 0; k < echelon.size(); ++k) {
            int f = r[lead[k]];
            if (f)
                for (std::size_t u = 0; u < unknowns; ++u)
                    r[u] = ((r[u] - f * echelon[k][u]) % p + p) % p;
        }
        auto it = std::find_if(r.begin(), r.end(), [](int c) { return c != 0; });
        if (it == r.end())
            continue;
        std::size_t l = static_cast<std::size_t>(it - r.begin());
        int inv = inverse_mod(r[l], p);
        for (auto& c : r)
            c = c * inv % p;
        for (auto& row : echelon) {
            int f = row[l];
            if (f)
                for (std::size_t u = 0; u < unknowns; ++u)
                    row[u] = ((row[u] - f * r[u]) % p + p) % p;
        }
        echelon.push_back(std::move(r));
        lead.push_back(l);
        if (echelon.size() >= e)
            return false;  // non-units span everything: not local
    }
    return e >= 1 && non_units * static_cast<std::uint64_t>(p) == total && echelon.size() + 1 == e;
}

struct Generator {
    std::size_t vertex;
    Matrix g, g_inv;
};

std::vector<Generator> gl_generators(const DimVector& alpha, int p) {
    std::vector<Generator> gens;
    const int root = primitive_root(p);
    for (std::size_t v = 0; v < alpha.size(); ++v) {
        const std::size_t n = static_cast<std::size_t>(alpha[v]);
        auto identity = [n] {
            Matrix m(n * n, 0);
            for (std::size_t i = 0; i < n; ++i)
                m[i * n + i] = 1;
            return m;
        };
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) {
                if (r == c)
                    continue;
                Generator t{v, identity(), identity()};
                t.g[r * n + c] = 1;
                t.g_inv[r * n + c] = p - 1;
                gens.push_back(std::move(t));
            }
        if (root != 1)
            for (std::size_t r = 0; r < n; ++r) {
                Generator d{v, identity(), identity()};
                d.g[r * n + r] = root;
                d.g_inv[r * n + r] = inverse_mod(root, p);
                gens.push_back(std::move(d));
            }
    }
    return gens;
}

void apply_generator(const Quiver& q, const DimVector& alpha, const Layout& layout, const Generator& gen, int p,
                     const std::vector<int>& in, std::vector<int>& out) {
    out = in;
    std::vector<int> tmp;
    for (std::size_t a = 0; a < q.num_arrows(); ++a) {
        const auto& arrow = q.arrows()[a];
        const bool left = arrow.target == gen.vertex;
        const bool right = arrow.source == gen.vertex;
        if (!left && !right)
            continue;
        const std::size_t rows = static_cast<std::size_t>(alpha[arrow.target]);
        const std::size_t cols = static_cast<std::size_t>(alpha[arrow.source]);
        int* m = out.data() + layout.offset[a];
        if (left) {  // M <- g M
            tmp.assign(rows * cols, 0);
            for (std::size_t r = 0; r < rows; ++r)
                for (std::size_t k = 0; k < rows; ++k)
                    if (int f = gen.g[r * rows + k])
                        for (std::size_t c = 0; c < cols; ++c)
                            tmp[r * cols + c] += f * m[k * cols + c];
            for (std::size_t i = 0; i < rows * cols; ++i)
                m[i] = tmp[i] % p;
        }
        if (right) {  // M <- M g^-1
            tmp.assign(rows * cols, 0);
            for (std::size_t r = 0; r < rows; ++r)
                for (std::size_t k = 0; k < cols; ++k)
                    if (int f = m[r * cols + k])
                        for (std::size_t c = 0; c < cols; ++c)
                            tmp[r * cols + c] += f * gen.g_inv[k * cols + c];
            for (std::size_t i = 0; i < rows * cols; ++i)
                m[i] = tmp[i] % p;
        }
    }
}

std::uint32_t find_root(std::vector<std::uint32_t>& parent, std::uint32_t x) {
    while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    return x;
}

std::uint64_t checked_power(std::uint64_t base, std::uint64_t exponent, std::uint64_t limit) {
    std::uint64_t r = 1;
    for (std::uint64_t k = 0; k < exponent; ++k) {
        if (r > limit / base)
            return std::numeric_limits<std::uint64_t>::max();
        r *= base;
    }
    return r;
}

void require_prime(unsigned p) {
    if (p < 2)
        throw InputError("oracle needs a prime p");
    for (unsigned d = 2; d * d <= p; ++d)
        if (p % d == 0)
            throw InputError("oracle needs a prime p, got " + std::to_string(p));
}

} // namespace

std::uint64_t representation_space_dim(const Quiver& q, const DimVector& alpha) {
    if (alpha.size() != q.num_vertices())
        throw InputError("dimension vector has the wrong number of entries for the quiver");
    return layout_of(q, alpha).dim;
}

std::uint64_t general_linear_order(const DimVector& alpha, unsigned p) {
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t order = 1;
    for (int n : alpha.entries()) {
        const std::uint64_t pn = checked_power(p, static_cast<std::uint64_t>(n), max);
        if (pn == max)
            return max;
        for (int k = 0; k < n; ++k) {
            std::uint64_t factor = pn - checked_power(p, static_cast<std::uint64_t>(k), max);
            if (order > max / factor)
                return max;
            order *= factor;
        }
    }
    return order;
}

bool oracle_feasible(const Quiver& q, const DimVector& alpha, unsigned p, const OracleLimits& limits) {
    const std::uint64_t points = checked_power(p, representation_space_dim(q, alpha), limits.max_points);
    return points <= limits.max_points && general_linear_order(alpha, p) <= limits.max_group;
}

std::size_t endomorphism_dimension(const Quiver& q, const DimVector& alpha, const FiniteFieldRep& m) {
    std::vector<std::size_t> offsets;
    return endomorphism_basis(q, alpha, m, offsets).size();
}

OrbitCensus orbit_census(const Quiver& q, const DimVector& alpha, unsigned p, const OracleLimits& limits) {
    require_prime(p);
    if (alpha.size() != q.num_vertices())
        throw InputError("dimension vector has the wrong number of entries for the quiver");
    if (alpha.is_zero())
        throw InputError("oracle needs a non-zero dimension vector");
    if (!oracle_feasible(q, alpha, p, limits))
        throw ResourceError("brute force infeasible for alpha=" + alpha.to_string() + " p=" + std::to_string(p));

    const int ip = static_cast<int>(p);
    const Layout layout = layout_of(q, alpha);
    const std::uint64_t points = checked_power(p, layout.dim, limits.max_points);
    const auto gens = gl_generators(alpha, ip);

    auto encode = [&](const std::vector<int>& digits) {
        std::uint64_t x = 0;
        for (std::size_t k = digits.size(); k-- > 0;)
            x = x * p + static_cast<std::uint64_t>(digits[k]);
        return static_cast<std::uint32_t>(x);
    };

    std::vector<std::uint32_t> parent(points);
    for (std::uint64_t x = 0; x < points; ++x)
        parent[x] = static_cast<std::uint32_t>(x);

    std::vector<int> digits(layout.dim, 0), image;
    for (std::uint64_t x = 0; x < points; ++x) {
        for (const auto& g : gens) {
            apply_generator(q, alpha, layout, g, ip, digits, image);
            std::uint32_t a = find_root(parent, static_cast<std::uint32_t>(x));
            std::uint32_t b = find_root(parent, encode(image));
            if (a != b)
                parent[std::max(a, b)] = std::min(a, b);
        }
        for (std::size_t k = 0; k < digits.size(); ++k) {
            if (++digits[k] < ip)
                break;
            digits[k] = 0;
        }
    }

    OrbitCensus census;
    census.points = points;
    std::map<std::uint32_t, std::size_t> index;
    for (std::uint64_t x = 0; x < points; ++x) {
        std::uint32_t r = find_root(parent, static_cast<std::uint32_t>(x));
        auto [it, inserted] = index.try_emplace(r, census.orbit_sizes.size());
        if (inserted) {
            FiniteFieldRep rep{p, std::vector<int>(layout.dim)};
            std::uint64_t t = r;
            for (auto& d : rep.entries) {
                d = static_cast<int>(t % p);
                t /= p;
            }
            census.representatives.push_back(std::move(rep));
            census.orbit_sizes.push_back(0);
        }
        ++census.orbit_sizes[it->second];
    }
    for (const auto& rep : census.representatives)
        census.absolutely_indecomposable.push_back(absolutely_indecomposable(q, alpha, rep));
    return census;
}

std::uint64_t count_abs_indec(const Quiver& q, const DimVector& alpha, unsigned p, const OracleLimits& limits) {
    auto census = orbit_census(q, alpha, p, limits);
    return static_cast<std::uint64_t>(
        std::count(census.absolutely_indecomposable.begin(), census.absolutely_indecomposable.end(), true));
}

// ---------------------------------------------------------------------------

std::uint64_t brute_force_spanning_trees(const Quiver& q) {
    const std::size_t n = q.num_vertices();
    if (n == 0)
        throw InputError("spanning trees need at least one vertex");
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (const auto& a : q.arrows())
        if (!a.is_loop())
            edges.emplace_back(a.source, a.target);
    if (edges.size() < n - 1)
        return 0;

    std::uint64_t count = 0;
    std::vector<bool> pick(edges.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(n - 1), true);
    do {
        std::vector<std::size_t> parent(n);
        for (std::size_t v = 0; v < n; ++v)
            parent[v] = v;
        std::function<std::size_t(std::size_t)> find = [&](std::size_t v) {
            return parent[v] == v ? v : parent[v] = find(parent[v]);
        };
        bool forest = true;
        for (std::size_t k = 0; k < edges.size() && forest; ++k) {
            if (!pick[k])
                continue;
            auto a = find(edges[k].first), b = find(edges[k].second);
            if (a == b)
                forest = false;
            else
                parent[a] = b;
        }
        count += forest;
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return count;
}

namespace {

// Bipartite coloured tree; side 0 = source, 1 = sink.
struct ColouredTree {
    std::vector<int> side;
    std::vector<std::vector<std::pair<int, std::size_t>>> adj;  // (colour, neighbour)

    std::string encode_from(std::size_t v, std::size_t parent) const {
        std::vector<std::string> children;
        for (auto [c, w] : adj[v])
            if (w != parent)
                children.push_back(std::to_string(c) + encode_from(w, v));
        std::sort(children.begin(), children.end());
        std::string s = side[v] ? "T(" : "S(";
        for (const auto& ch : children)
            s += ch + ",";
        return s + ")";
    }

    std::string canonical() const {
        std::string best;
        for (std::size_t r = 0; r < side.size(); ++r) {
            std::string s = encode_from(r, side.size());
            if (best.empty() || s < best)
                best = std::move(s);
        }
        return best;
    }
};

} // namespace

std::uint64_t enumerate_cover_thin_trees(int m, int d, int e) {
    if (m < 1 || d < 1 || e < 1)
        throw InputError("enumerate_cover_thin_trees needs m, d, e >= 1");
    if (d + e > 9)
        throw ResourceError("enumerate_cover_thin_trees is limited to d + e <= 9");

    std::map<std::string, ColouredTree> level;
    ColouredTree seed;
    seed.side = {0};
    seed.adj.resize(1);
    level.emplace(seed.canonical(), seed);

    for (int size = 1; size < d + e; ++size) {
        std::map<std::string, ColouredTree> next;
        for (const auto& [key, tree] : level) {
            const int sources = static_cast<int>(std::count(tree.side.begin(), tree.side.end(), 0));
            const int sinks = static_cast<int>(tree.side.size()) - sources;
            for (std::size_t v = 0; v < tree.side.size(); ++v) {
                const int new_side = 1 - tree.side[v];
                if ((new_side == 0 && sources >= d) || (new_side == 1 && sinks >= e))
                    continue;
                for (int c = 0; c < m; ++c) {
                    bool used = std::any_of(tree.adj[v].begin(), tree.adj[v].end(),
                                            [c](const auto& edge) { return edge.first == c; });
                    if (used)
                        continue;
                    ColouredTree t = tree;
                    const std::size_t w = t.side.size();
                    t.side.push_back(new_side);
                    t.adj.emplace_back();
                    t.adj[v].emplace_back(c, w);
                    t.adj[w].emplace_back(c, v);
                    next.try_emplace(t.canonical(), std::move(t));
                }
            }
        }
        level = std::move(next);
    }
    std::uint64_t count = 0;
    for (const auto& [key, tree] : level)
        if (std::count(tree.side.begin(), tree.side.end(), 0) == d)
            ++count;
    return count;
}

// ---------------------------------------------------------------------------

std::size_t SweepReport::mismatches() const {
    return static_cast<std::size_t>(
        std::count_if(lines.begin(), lines.end(), [](const SweepLine& l) { return l.status == SweepStatus::fail; }));
}

std::size_t SweepReport::checked() const {
    return static_cast<std::size_t>(std::count_if(
        lines.begin(), lines.end(), [](const SweepLine& l) { return l.status != SweepStatus::skipped; }));
}

std::size_t SweepReport::skipped() const {
    return lines.size() - checked();
}

std::string SweepReport::render() const {
    std::ostringstream out;
    for (const auto& l : lines) {
        out << l.quiver.canonical_serialization() << '\t' << l.alpha.to_string() << '\t' << l.p << '\t'
            << l.engine.get_str() << '\t' << (l.oracle ? std::to_string(*l.oracle) : "-") << '\t';
        switch (l.status) {
        case SweepStatus::ok:
            out << "OK";
            break;
        case SweepStatus::fail:
            out << "FAIL";
            break;
        case SweepStatus::skipped:
            out << "SKIPPED";
            break;
        }
        out << '\n';
    }
    return out.str();
}

SweepReport oracle_sweep(int max_total_dim, const std::vector<unsigned>& primes, unsigned threads,
                         const OracleLimits& limits) {
    SweepReport report;
    if (primes.empty())
        return report;
    for (unsigned p : primes)
        require_prime(p);

    for (const auto& q : connected_quivers(2, 3, true))
        for (const auto& alpha : dimension_vectors(q.num_vertices(), max_total_dim))
            for (unsigned p : primes)
                report.lines.push_back({q, alpha, p, 0, std::nullopt, SweepStatus::skipped});

    std::atomic<std::size_t> next{0};
    std::mutex failure_mutex;
    std::exception_ptr failure;
    auto worker = [&] {
        try {
            for (std::size_t k = next++; k < report.lines.size(); k = next++) {
                auto& line = report.lines[k];
                line.engine = kac_polynomial(line.quiver, line.alpha).evaluate(line.p);
                if (!oracle_feasible(line.quiver, line.alpha, line.p, limits))
                    continue;
                line.oracle = count_abs_indec(line.quiver, line.alpha, line.p, limits);
                line.status = mpz_class(*line.oracle) == line.engine ? SweepStatus::ok : SweepStatus::fail;
            }
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure)
                failure = std::current_exception();
            next = report.lines.size();
        }
    };
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < std::max(1u, threads); ++t)
            pool.emplace_back(worker);
    }
    if (failure)
        std::rethrow_exception(failure);
    return report;
}

} // namespace kacq
