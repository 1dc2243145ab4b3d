#include "kacq/quiver.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "kacq/errors.hpp"

namespace kacq {

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
    std::unordered_set<std::string> seen;
    for (const auto& v : vertices_) {
        if (v.empty())
            throw InputError("empty vertex id");
        if (!seen.insert(v).second)
            throw InputError("duplicate vertex id '" + v + "'");
    }
    std::unordered_set<std::string> arrow_ids;
    for (const auto& a : arrows_) {
        if (a.id.empty())
            throw InputError("empty arrow id");
        if (!arrow_ids.insert(a.id).second)
            throw InputError("duplicate arrow id '" + a.id + "'");
        if (a.source >= vertices_.size() || a.target >= vertices_.size())
            throw InputError("arrow '" + a.id + "' has an endpoint outside the vertex set");
    }
}

Quiver Quiver::from_ids(std::vector<std::string> vertices, const std::vector<NamedArrow>& arrows) {
    auto index_of = [&](const std::string& id) {
        auto it = std::find(vertices.begin(), vertices.end(), id);
        if (it == vertices.end())
            throw InputError("unknown vertex '" + id + "'");
        return static_cast<std::size_t>(it - vertices.begin());
    };
    std::vector<Arrow> out;
    out.reserve(arrows.size());
    for (const auto& a : arrows)
        out.push_back({a.id, index_of(a.source), index_of(a.target)});
    return Quiver(std::move(vertices), std::move(out));
}

std::size_t Quiver::vertex_index(std::string_view id) const {
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        if (vertices_[i] == id)
            return i;
    throw InputError("unknown vertex '" + std::string(id) + "'");
}

std::size_t Quiver::loops_at(std::size_t v) const {
    return static_cast<std::size_t>(std::count_if(arrows_.begin(), arrows_.end(), [v](const Arrow& a) {
        return a.source == v && a.target == v;
    }));
}

std::vector<std::size_t> Quiver::sorted_vertex_order() const {
    std::vector<std::size_t> order(vertices_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return vertices_[a] < vertices_[b]; });
    return order;
}

std::string Quiver::canonical_serialization() const {
    std::vector<std::string> vs = vertices_;
    std::sort(vs.begin(), vs.end());
    std::vector<std::tuple<std::string, std::string, std::string>> as;
    for (const auto& a : arrows_)
        as.emplace_back(vertices_[a.source], vertices_[a.target], a.id);
    std::sort(as.begin(), as.end());

    std::ostringstream out;
    out << "V";
    for (const auto& v : vs)
        out << ' ' << v;
    out << ";A";
    for (const auto& [s, t, id] : as)
        out << ' ' << id << ':' << s << '>' << t;
    return out.str();
}

std::string Quiver::hash() const {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : canonical_serialization()) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    static constexpr char digits[] = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i, h >>= 4)
        out[static_cast<std::size_t>(i)] = digits[h & 0xf];
    return out;
}

// ---------------------------------------------------------------------------

DimVector::DimVector(std::vector<int> entries) : entries_(std::move(entries)) {
    for (int e : entries_)
        if (e < 0)
            throw InputError("dimension vector entries must be non-negative");
}

DimVector DimVector::unit(std::size_t n, std::size_t i) {
    std::vector<int> e(n, 0);
    e.at(i) = 1;
    return DimVector(std::move(e));
}

DimVector DimVector::parse(std::string_view text) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        auto field = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        while (!field.empty() && field.front() == ' ')
            field.remove_prefix(1);
        while (!field.empty() && field.back() == ' ')
            field.remove_suffix(1);
        int value = 0;
        auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (field.empty() || ec != std::errc() || end != field.data() + field.size())
            throw InputError("malformed dimension vector '" + std::string(text) + "'");
        out.push_back(value);
        if (comma == std::string_view::npos)
            break;
        pos = comma + 1;
    }
    return DimVector(std::move(out));
}

long long DimVector::total() const {
    return std::accumulate(entries_.begin(), entries_.end(), 0LL);
}

bool DimVector::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](int e) { return e == 0; });
}

std::vector<std::size_t> DimVector::support() const {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (entries_[i] > 0)
            s.push_back(i);
    return s;
}

bool DimVector::fits_in(const DimVector& other) const {
    if (other.size() != size())
        return false;
    for (std::size_t i = 0; i < size(); ++i)
        if (entries_[i] > other.entries_[i])
            return false;
    return true;
}

std::string DimVector::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(entries_[i]);
    }
    return s;
}

// ---------------------------------------------------------------------------

std::string_view to_string(RootType t) {
    switch (t) {
    case RootType::real:
        return "real";
    case RootType::imaginary:
        return "imaginary";
    case RootType::not_a_root:
        return "not_a_root";
    }
    return "?";
}

namespace {

void check_size(const Quiver& q, const DimVector& a) {
    if (a.size() != q.num_vertices())
        throw InputError("dimension vector has " + std::to_string(a.size()) + " entries, quiver has " +
                         std::to_string(q.num_vertices()) + " vertices");
}

long long euler_signed(const Quiver& q, const std::vector<long long>& a, const std::vector<long long>& b) {
    long long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    for (const auto& x : q.arrows())
        s -= a[x.source] * b[x.target];
    return s;
}

// (a, e_i) for a signed vector.
long long pairing_with_simple(const Quiver& q, const std::vector<long long>& a, std::size_t i) {
    long long s = 2 * a[i];
    for (const auto& x : q.arrows()) {
        if (x.source == i)
            s -= a[x.target];
        if (x.target == i)
            s -= a[x.source];
    }
    return s;
}

std::vector<long long> widen(const DimVector& a) {
    return {a.entries().begin(), a.entries().end()};
}

bool support_connected(const Quiver& q, const std::vector<bool>& in_support) {
    std::size_t start = q.num_vertices();
    std::size_t count = 0;
    for (std::size_t i = 0; i < q.num_vertices(); ++i)
        if (in_support[i]) {
            ++count;
            if (start == q.num_vertices())
                start = i;
        }
    if (count == 0)
        return false;
    std::vector<bool> seen(q.num_vertices(), false);
    std::vector<std::size_t> stack{start};
    seen[start] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        for (const auto& x : q.arrows()) {
            std::size_t w = q.num_vertices();
            if (x.source == v)
                w = x.target;
            else if (x.target == v)
                w = x.source;
            if (w < q.num_vertices() && in_support[w] && !seen[w]) {
                seen[w] = true;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == count;
}

} // namespace

long long euler_form(const Quiver& q, const DimVector& a, const DimVector& b) {
    check_size(q, a);
    check_size(q, b);
    return euler_signed(q, widen(a), widen(b));
}

long long tits_form(const Quiver& q, const DimVector& a) {
    return euler_form(q, a, a);
}

long long symmetric_form(const Quiver& q, const DimVector& a, const DimVector& b) {
    return euler_form(q, a, b) + euler_form(q, b, a);
}

DimVector reflect(const Quiver& q, const DimVector& a, std::size_t i) {
    check_size(q, a);
    if (i >= q.num_vertices())
        throw InputError("reflection vertex out of range");
    if (q.loops_at(i) > 0)
        throw DomainError("cannot reflect at vertex '" + q.vertices()[i] + "': it carries a loop");
    auto v = widen(a);
    long long image = v[i] - pairing_with_simple(q, v, i);
    if (image < 0)
        throw DomainError("reflection at '" + q.vertices()[i] + "' leaves the non-negative cone");
    std::vector<int> out = a.entries();
    out[i] = static_cast<int>(image);
    return DimVector(std::move(out));
}

RootType classify_root(const Quiver& q, const DimVector& a) {
    check_size(q, a);
    if (a.is_zero())
        throw InputError("classify_root needs a non-zero dimension vector");

    auto v = widen(a);
    const long long cap = a.total() * static_cast<long long>(q.num_vertices());
    for (long long step = 0;; ++step) {
        if (step > cap)
            throw InternalError("root reduction exceeded its iteration cap");

        std::vector<bool> in_support(v.size());
        std::size_t support_size = 0, last = 0;
        for (std::size_t i = 0; i < v.size(); ++i) {
            in_support[i] = v[i] > 0;
            if (in_support[i]) {
                ++support_size;
                last = i;
            }
        }
        if (!support_connected(q, in_support))
            return RootType::not_a_root;
        if (support_size == 1 && v[last] == 1)
            return q.loops_at(last) == 0 ? RootType::real : RootType::imaginary;

        bool reflected = false;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (q.loops_at(i) > 0)
                continue;
            long long p = pairing_with_simple(q, v, i);
            if (p > 0) {
                v[i] -= p;
                if (v[i] < 0)
                    return RootType::not_a_root;
                reflected = true;
                break;
            }
        }
        if (!reflected)
            return RootType::imaginary;
    }
}

bool connected_support(const Quiver& q, const DimVector& a) {
    check_size(q, a);
    std::vector<bool> s(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        s[i] = a[i] > 0;
    return support_connected(q, s);
}

bool is_connected(const Quiver& q) {
    if (q.num_vertices() == 0)
        return false;
    return support_connected(q, std::vector<bool>(q.num_vertices(), true));
}

Quiver opposite(const Quiver& q) {
    std::vector<Arrow> arrows = q.arrows();
    for (auto& a : arrows)
        std::swap(a.source, a.target);
    return Quiver(q.vertices(), std::move(arrows));
}

Quiver induced_subquiver(const Quiver& q, const std::vector<std::size_t>& vertices) {
    std::vector<std::size_t> position(q.num_vertices(), q.num_vertices());
    std::vector<std::string> ids;
    for (std::size_t k = 0; k < vertices.size(); ++k) {
        position.at(vertices[k]) = k;
        ids.push_back(q.vertices()[vertices[k]]);
    }
    std::vector<Arrow> arrows;
    for (const auto& a : q.arrows())
        if (position[a.source] < q.num_vertices() && position[a.target] < q.num_vertices())
            arrows.push_back({a.id, position[a.source], position[a.target]});
    return Quiver(std::move(ids), std::move(arrows));
}

} // namespace kacq
