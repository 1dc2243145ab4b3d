#include "kacq/covering.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <exception>
#include <limits>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "kacq/errors.hpp"

namespace kacq {

void CoverDim::set(const CoverVertex& v, int value) {
    if (value < 0)
        throw InputError("covering dimension vector entries must be non-negative");
    if (value == 0)
        entries_.erase(v);
    else
        entries_[v] = value;
}

int CoverDim::at(const CoverVertex& v) const {
    auto it = entries_.find(v);
    return it == entries_.end() ? 0 : it->second;
}

std::vector<CoverStep> cover_arrows_out(const Quiver& q, const CoverVertex& v) {
    if (v.chi.size() != q.num_arrows())
        throw InputError("character has the wrong number of coordinates");
    std::vector<CoverStep> out;
    for (std::size_t a = 0; a < q.num_arrows(); ++a) {
        const auto& arrow = q.arrows()[a];
        if (arrow.source != v.base)
            continue;
        CoverVertex w{arrow.target, v.chi};
        ++w.chi[a];
        out.push_back({a, std::move(w)});
    }
    return out;
}

std::vector<CoverStep> cover_arrows_in(const Quiver& q, const CoverVertex& v) {
    if (v.chi.size() != q.num_arrows())
        throw InputError("character has the wrong number of coordinates");
    std::vector<CoverStep> out;
    for (std::size_t a = 0; a < q.num_arrows(); ++a) {
        const auto& arrow = q.arrows()[a];
        if (arrow.target != v.base)
            continue;
        CoverVertex w{arrow.source, v.chi};
        --w.chi[a];
        out.push_back({a, std::move(w)});
    }
    return out;
}

DimVector c_map(const Quiver& q, const CoverDim& beta) {
    std::vector<int> alpha(q.num_vertices(), 0);
    for (const auto& [v, value] : beta.entries()) {
        if (v.base >= q.num_vertices())
            throw InputError("covering vertex over an unknown base vertex");
        alpha[v.base] += value;
    }
    return DimVector(std::move(alpha));
}

CoverDim translate(const CoverDim& beta, const std::vector<int>& xi) {
    CoverDim out;
    for (const auto& [v, value] : beta.entries()) {
        if (v.chi.size() != xi.size())
            throw InputError("translation has the wrong number of coordinates");
        CoverVertex w = v;
        for (std::size_t k = 0; k < xi.size(); ++k)
            w.chi[k] -= xi[k];
        out.set(w, value);
    }
    return out;
}

CoverDim canonicalize(const CoverDim& beta) {
    if (beta.empty())
        throw InputError("cannot canonicalize an empty covering dimension vector");
    std::vector<int> lowest = beta.entries().begin()->first.chi;
    for (const auto& [v, value] : beta.entries())
        for (std::size_t k = 0; k < lowest.size(); ++k)
            lowest[k] = std::min(lowest[k], v.chi.at(k));
    return translate(beta, lowest);
}

std::string vertex_label(const Quiver& q, const CoverVertex& v) {
    std::string s = q.vertices().at(v.base) + "[";
    for (std::size_t k = 0; k < v.chi.size(); ++k) {
        if (k)
            s += ',';
        s += std::to_string(v.chi[k]);
    }
    return s + "]";
}

std::string serialize(const Quiver& q, const CoverDim& beta) {
    std::string s;
    for (const auto& [v, value] : beta.entries()) {
        if (!s.empty())
            s += ' ';
        s += vertex_label(q, v) + "=" + std::to_string(value);
    }
    return s;
}

namespace {

std::vector<int> component_ids(const Quiver& q) {
    std::vector<int> comp(q.num_vertices(), -1);
    int next = 0;
    for (std::size_t s = 0; s < q.num_vertices(); ++s) {
        if (comp[s] >= 0)
            continue;
        std::vector<std::size_t> stack{s};
        comp[s] = next;
        while (!stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            for (const auto& a : q.arrows()) {
                for (auto [x, y] : {std::pair{a.source, a.target}, std::pair{a.target, a.source}}) {
                    if (x == v && comp[y] < 0) {
                        comp[y] = next;
                        stack.push_back(y);
                    }
                }
            }
        }
        ++next;
    }
    return comp;
}

Quiver support_quiver(const Quiver& q, const CoverDim& beta) {
    std::vector<std::string> ids;
    std::map<CoverVertex, std::size_t> position;
    for (const auto& [v, value] : beta.entries()) {
        position[v] = ids.size();
        ids.push_back(vertex_label(q, v));
    }
    std::vector<Arrow> arrows;
    for (const auto& [v, value] : beta.entries()) {
        for (auto& step : cover_arrows_out(q, v)) {
            auto it = position.find(step.vertex);
            if (it == position.end())
                continue;
            std::string id = q.arrows()[step.arrow].id + vertex_label(q, v).substr(q.vertices()[v.base].size());
            arrows.push_back({std::move(id), position.at(v), it->second});
        }
    }
    return Quiver(std::move(ids), std::move(arrows));
}

// Enumerates connected vertex sets of the cover containing a fixed root
// (each exactly once, Redelmeier's scheme), restricted to vertices over the
// support of alpha with at most alpha_i vertices in the fibre over i.
class SupportSearch {
public:
    SupportSearch(const Quiver& q, const DimVector& alpha, std::uint64_t cap,
                  std::function<void(const std::vector<CoverVertex>&)> visit)
        : q_(q), alpha_(alpha), cap_(cap), window_(static_cast<int>(alpha.total())),
          fibre_(q.num_vertices(), 0), visit_(std::move(visit)) {}

    void run(const CoverVertex& root) {
        seen_.insert(root);
        recurse({root});
    }

private:
    bool admissible(const CoverVertex& w) const {
        if (fibre_[w.base] >= alpha_[w.base])
            return false;
        for (int c : w.chi)
            if (c < -window_ || c > window_)
                throw InternalError("connected support left the character window");
        return true;
    }

    void recurse(std::vector<CoverVertex> untried) {
        while (!untried.empty()) {
            if (++nodes_ > cap_)
                throw ResourceError("covering search exceeded the node cap of " + std::to_string(cap_));
            CoverVertex v = std::move(untried.back());
            untried.pop_back();
            if (!admissible(v))
                continue;

            current_.push_back(v);
            ++fibre_[v.base];
            visit_(current_);

            std::vector<CoverVertex> added;
            auto consider = [&](const CoverVertex& w) {
                if (alpha_[w.base] == 0 || seen_.count(w))
                    return;
                seen_.insert(w);
                added.push_back(w);
            };
            for (const auto& s : cover_arrows_out(q_, v))
                consider(s.vertex);
            for (const auto& s : cover_arrows_in(q_, v))
                consider(s.vertex);

            std::vector<CoverVertex> next = untried;
            next.insert(next.end(), added.begin(), added.end());
            recurse(std::move(next));

            for (const auto& w : added)
                seen_.erase(w);
            --fibre_[v.base];
            current_.pop_back();
        }
    }

    const Quiver& q_;
    const DimVector& alpha_;
    std::uint64_t cap_;
    int window_;
    std::uint64_t nodes_ = 0;
    std::vector<int> fibre_;
    std::set<CoverVertex> seen_;
    std::vector<CoverVertex> current_;
    std::function<void(const std::vector<CoverVertex>&)> visit_;
};

// Calls emit for every way of writing total as an ordered sum of `slots`
// positive integers.
void compositions(int total, std::size_t slots, std::vector<int>& out, const std::function<void()>& emit) {
    if (slots == 0) {
        if (total == 0)
            emit();
        return;
    }
    const int reserve = static_cast<int>(slots) - 1;
    for (int first = 1; first <= total - reserve; ++first) {
        out.push_back(first);
        compositions(total - first, slots - 1, out, emit);
        out.pop_back();
    }
}

} // namespace

std::vector<CompatibleClass> enumerate_compatible(const Quiver& q, const DimVector& alpha,
                                                  const EnumerationOptions& options) {
    if (alpha.size() != q.num_vertices())
        throw InputError("dimension vector has the wrong number of entries for the quiver");
    if (alpha.is_zero())
        throw InputError("enumerate_compatible needs a non-zero dimension vector");
    auto comp = component_ids(q);
    auto support = alpha.support();
    for (auto v : support)
        if (comp[v] != comp[support.front()])
            throw InputError("dimension vector is supported on several components of the quiver");

    std::map<std::string, CoverDim> classes;
    auto on_support = [&](const std::vector<CoverVertex>& set) {
        std::vector<std::vector<std::size_t>> fibres(q.num_vertices());
        for (std::size_t k = 0; k < set.size(); ++k)
            fibres[set[k].base].push_back(k);
        for (auto v : support)
            if (fibres[v].empty())
                return;

        // Distribute alpha_i over the fibre over i, fibre by fibre.
        std::vector<int> values(set.size(), 0);
        std::function<void(std::size_t)> fill = [&](std::size_t f) {
            if (f == support.size()) {
                CoverDim beta;
                for (std::size_t k = 0; k < set.size(); ++k)
                    beta.set(set[k], values[k]);
                CoverDim canonical = canonicalize(beta);
                std::string key = serialize(q, canonical);
                classes.try_emplace(std::move(key), std::move(canonical));
                return;
            }
            const auto& fibre = fibres[support[f]];
            std::vector<int> parts;
            compositions(alpha[support[f]], fibre.size(), parts, [&] {
                for (std::size_t k = 0; k < fibre.size(); ++k)
                    values[fibre[k]] = parts[k];
                fill(f + 1);
            });
        };
        fill(0);
    };

    SupportSearch search(q, alpha, options.node_cap, on_support);
    search.run(CoverVertex{support.front(), std::vector<int>(q.num_arrows(), 0)});

    std::vector<CompatibleClass> out;
    out.reserve(classes.size());
    for (auto& [key, beta] : classes) {
        CompatibleClass c;
        c.support_quiver = support_quiver(q, beta);
        std::vector<int> dims;
        for (const auto& [v, value] : beta.entries())
            dims.push_back(value);
        c.support_dim = DimVector(std::move(dims));
        c.key = key;
        c.beta = std::move(beta);
        out.push_back(std::move(c));
    }
    return out;
}

// ---------------------------------------------------------------------------

std::size_t VerificationReport::contributing_classes() const {
    return static_cast<std::size_t>(std::count_if(contributions.begin(), contributions.end(),
                                                  [](const Contribution& c) { return !c.polynomial.is_zero(); }));
}

std::string VerificationReport::render() const {
    std::ostringstream out;
    for (const auto& c : contributions)
        out << "β=" << c.cls.key << " support=" << c.cls.support_quiver.num_vertices() << "v/"
            << c.cls.support_quiver.num_arrows() << "a a(1)=" << c.value.get_str() << '\n';
    out << "lhs=" << lhs.get_str() << " rhs=" << rhs.get_str() << ' ' << (ok ? "OK" : "FAIL") << '\n';
    return out.str();
}

namespace {

QPolynomial engine(const Quiver& q, const DimVector& alpha, KacStore* store) {
    return store ? store->get(q, alpha).polynomial : kac_polynomial(q, alpha);
}

} // namespace

VerificationReport verify_main_theorem(const Quiver& q, const DimVector& alpha, const VerifyOptions& options) {
    VerificationReport report;
    auto classes = enumerate_compatible(q, alpha, {options.node_cap});
    report.lhs = engine(q, alpha, options.store).evaluate(1);

    report.contributions.resize(classes.size());
    std::atomic<std::size_t> next{0};
    std::mutex failure_mutex;
    std::exception_ptr failure;
    auto worker = [&] {
        try {
            for (std::size_t k = next++; k < classes.size(); k = next++) {
                auto& c = report.contributions[k];
                c.polynomial = engine(classes[k].support_quiver, classes[k].support_dim, options.store);
                c.value = c.polynomial.evaluate(1);
            }
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure)
                failure = std::current_exception();
            next = classes.size();
        }
    };
    const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(classes.size())));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back(worker);
    }
    if (failure)
        std::rethrow_exception(failure);

    report.rhs = 0;
    for (std::size_t k = 0; k < classes.size(); ++k) {
        report.contributions[k].cls = std::move(classes[k]);
        report.rhs += report.contributions[k].value;
    }
    report.ok = report.lhs == report.rhs;
    return report;
}

} // namespace kacq
