#include "kacq/families.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace kacq {

namespace {

using Edge = std::pair<std::size_t, std::size_t>;

Quiver make_quiver(std::size_t n, const std::vector<Edge>& edges) {
    std::vector<std::string> ids;
    for (std::size_t v = 0; v < n; ++v)
        ids.push_back(std::to_string(v + 1));
    std::vector<Arrow> arrows;
    for (std::size_t k = 0; k < edges.size(); ++k)
        arrows.push_back({"a" + std::to_string(k + 1), edges[k].first, edges[k].second});
    return Quiver(std::move(ids), std::move(arrows));
}

// Calls emit with every multiset (as a sorted list) of at most max_size
// elements drawn from pool.
void multisets(const std::vector<Edge>& pool, std::size_t max_size,
               const std::function<void(const std::vector<Edge>&)>& emit) {
    std::vector<Edge> current;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
        emit(current);
        if (current.size() == max_size)
            return;
        for (std::size_t k = from; k < pool.size(); ++k) {
            current.push_back(pool[k]);
            rec(k);
            current.pop_back();
        }
    };
    rec(0);
}

std::vector<Edge> relabel(const std::vector<Edge>& edges, const std::vector<std::size_t>& perm) {
    std::vector<Edge> out;
    for (auto [s, t] : edges)
        out.emplace_back(perm[s], perm[t]);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::vector<Quiver> connected_quivers(std::size_t max_vertices, std::size_t max_arrows, bool allow_loops) {
    std::vector<Quiver> out;
    for (std::size_t n = 1; n <= max_vertices; ++n) {
        std::vector<Edge> pool;
        for (std::size_t s = 0; s < n; ++s)
            for (std::size_t t = 0; t < n; ++t)
                if (s != t || allow_loops)
                    pool.emplace_back(s, t);

        std::vector<std::vector<std::size_t>> perms;
        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        do
            perms.push_back(perm);
        while (std::next_permutation(perm.begin(), perm.end()));

        std::map<std::pair<std::size_t, std::vector<Edge>>, bool> seen;
        multisets(pool, max_arrows, [&](const std::vector<Edge>& edges) {
            Quiver q = make_quiver(n, edges);
            if (!is_connected(q))
                return;
            std::vector<Edge> best = edges;
            for (const auto& p : perms)
                best = std::min(best, relabel(edges, p));
            seen.emplace(std::pair{best.size(), best}, true);
        });
        for (const auto& [key, unused] : seen)
            out.push_back(make_quiver(n, key.second));
    }
    return out;
}

std::vector<Quiver> labelled_multigraphs(std::size_t n, std::size_t max_edges, bool allow_loops) {
    std::vector<Edge> pool;
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = s; t < n; ++t)
            if (s != t || allow_loops)
                pool.emplace_back(s, t);
    std::vector<Quiver> out;
    multisets(pool, max_edges, [&](const std::vector<Edge>& edges) { out.push_back(make_quiver(n, edges)); });
    return out;
}

std::vector<DimVector> dimension_vectors(std::size_t n, int max_total) {
    std::vector<DimVector> out;
    std::vector<int> current(n, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t v, int remaining) {
        if (v == n) {
            if (std::any_of(current.begin(), current.end(), [](int e) { return e > 0; }))
                out.emplace_back(current);
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            current[v] = e;
            rec(v + 1, remaining - e);
        }
        current[v] = 0;
    };
    rec(0, max_total);
    return out;
}

std::vector<Quiver> reorientations(const Quiver& q) {
    std::vector<std::size_t> flippable;
    for (std::size_t a = 0; a < q.num_arrows(); ++a)
        if (!q.arrows()[a].is_loop())
            flippable.push_back(a);
    std::vector<Quiver> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << flippable.size()); ++mask) {
        std::vector<Arrow> arrows = q.arrows();
        for (std::size_t k = 0; k < flippable.size(); ++k)
            if (mask >> k & 1)
                std::swap(arrows[flippable[k]].source, arrows[flippable[k]].target);
        out.emplace_back(q.vertices(), std::move(arrows));
    }
    return out;
}

} // namespace kacq
