#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace kacq {

struct Arrow {
    std::string id;
    std::size_t source = 0;
    std::size_t target = 0;

    bool is_loop() const { return source == target; }
    bool operator==(const Arrow&) const = default;
};

/// A finite quiver. Vertex and arrow ids are opaque strings; every
/// algorithm works on positional indices. Loops and parallel arrows are
/// allowed. Immutable after construction.
class Quiver {
public:
    Quiver() = default;

    /// Validates ids (unique, non-empty) and arrow endpoints.
    Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

    struct NamedArrow {
        std::string id, source, target;
    };
    static Quiver from_ids(std::vector<std::string> vertices,
                           const std::vector<NamedArrow>& arrows);

    std::size_t num_vertices() const { return vertices_.size(); }
    std::size_t num_arrows() const { return arrows_.size(); }
    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }

    std::size_t vertex_index(std::string_view id) const;
    std::size_t loops_at(std::size_t v) const;

    /// Vertices sorted by id, arrows sorted by (source id, target id, arrow id).
    std::string canonical_serialization() const;
    /// 16 hex digits of a 64-bit FNV-1a hash of the canonical serialization.
    std::string hash() const;

    /// Permutation taking canonical (id-sorted) vertex order to positional order.
    std::vector<std::size_t> sorted_vertex_order() const;

    bool operator==(const Quiver&) const = default;

private:
    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
};

/// Dimension vector: one non-negative entry per vertex, in vertex order.
class DimVector {
public:
    DimVector() = default;
    explicit DimVector(std::vector<int> entries);

    static DimVector zero(std::size_t n) { return DimVector(std::vector<int>(n, 0)); }
    static DimVector unit(std::size_t n, std::size_t i);
    static DimVector ones(std::size_t n) { return DimVector(std::vector<int>(n, 1)); }
    /// Comma separated list, e.g. "2,3".
    static DimVector parse(std::string_view text);

    std::size_t size() const { return entries_.size(); }
    int operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<int>& entries() const { return entries_; }

    long long total() const;
    bool is_zero() const;
    std::vector<std::size_t> support() const;
    /// True when every entry is <= the matching entry of other.
    bool fits_in(const DimVector& other) const;

    std::string to_string() const;

    auto operator<=>(const DimVector&) const = default;

private:
    std::vector<int> entries_;
};

enum class RootType { real, imaginary, not_a_root };

std::string_view to_string(RootType t);

/// <a,b> = sum_i a_i b_i - sum_{x: i->j} a_i b_j.
long long euler_form(const Quiver& q, const DimVector& a, const DimVector& b);
long long tits_form(const Quiver& q, const DimVector& a);
/// (a,b) = <a,b> + <b,a>.
long long symmetric_form(const Quiver& q, const DimVector& a, const DimVector& b);

/// sigma_i(a) = a - (a, e_i) e_i. Throws DomainError if i carries a loop,
/// or if the image leaves the non-negative cone.
DimVector reflect(const Quiver& q, const DimVector& a, std::size_t i);

RootType classify_root(const Quiver& q, const DimVector& a);

/// Connectivity of the support of a in the underlying undirected graph.
bool connected_support(const Quiver& q, const DimVector& a);
bool is_connected(const Quiver& q);
Quiver opposite(const Quiver& q);

/// Full subquiver on the given vertices (kept in the given order).
Quiver induced_subquiver(const Quiver& q, const std::vector<std::size_t>& vertices);

} // namespace kacq
