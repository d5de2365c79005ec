#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <vector>

namespace ringpat {

/// Integer lattice point (m, n). Ordered lexicographically.
struct Vertex {
    int m = 0;
    int n = 0;

    auto operator<=>(const Vertex&) const = default;
};

inline Vertex operator+(Vertex a, Vertex b) { return {a.m + b.m, a.n + b.n}; }

/// Neighbor slots in counter-clockwise lattice order.
enum class Direction : int { East = 0, North = 1, West = 2, South = 3 };

inline constexpr std::array<Vertex, 4> kDirectionOffsets{
    Vertex{1, 0}, Vertex{0, 1}, Vertex{-1, 0}, Vertex{0, -1}};

/// Unit edge between two vertex indices, a < b in lexicographic vertex order.
struct Edge {
    std::size_t a = 0;
    std::size_t b = 0;
    bool horizontal = true;
};

/// Square with lower-left corner `base`. Corners are stored counter-clockwise:
/// (m,n), (m+1,n), (m+1,n+1), (m,n+1).
struct Face {
    Vertex base;
    std::array<std::size_t, 4> corners{};
};

enum class Parity { Even, Odd };

inline Parity parity(Vertex v) { return ((v.m + v.n) % 2 == 0) ? Parity::Even : Parity::Odd; }

/// A subcomplex of the Z^2 lattice defined by a set of unit squares.
///
/// Vertices, edges and faces are always derived from the square set. Vertex
/// indices follow lexicographic (m, n) order, which fixes the layout of every
/// per-vertex vector in the library. Instances are immutable after build().
class LatticeComplex {
public:
    /// Builds the complex and checks that it is edge-connected with Euler
    /// characteristic 1. Throws RingError (InvalidArgument, DisconnectedComplex,
    /// NotSimplyConnected).
    static LatticeComplex build(const std::set<Vertex>& squares);
    static LatticeComplex build(std::span<const Vertex> squares);

    const std::set<Vertex>& squares() const noexcept { return squares_; }
    const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const std::vector<Face>& faces() const noexcept { return faces_; }

    std::size_t vertex_count() const noexcept { return vertices_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    std::size_t face_count() const noexcept { return faces_.size(); }

    std::optional<std::size_t> find(Vertex v) const;
    /// Throws RingError(UnknownVertex) if v is not a vertex of the complex.
    std::size_t index(Vertex v) const;
    bool contains(Vertex v) const { return find(v).has_value(); }
    bool has_square(Vertex base) const { return squares_.contains(base); }

    /// Neighbor vertex indices in E, N, W, S order; empty where no edge exists.
    const std::array<std::optional<std::size_t>, 4>& neighbors(std::size_t v) const
    {
        return neighbors_[v];
    }
    int degree(std::size_t v) const { return degree_[v]; }
    int incident_squares(std::size_t v) const { return square_count_[v]; }
    bool is_interior(std::size_t v) const { return square_count_[v] == 4; }
    bool is_boundary(std::size_t v) const { return !is_interior(v); }

    const std::vector<std::size_t>& interior_vertices() const noexcept { return interior_; }
    const std::vector<std::size_t>& boundary_vertices() const noexcept { return boundary_; }

    /// The four neighbors of an interior vertex, counter-clockwise starting east.
    /// Throws RingError(NotInterior).
    std::array<Vertex, 4> flower(Vertex v) const;

    /// True iff no boundary vertex has degree 4 (staircase notches).
    bool zigzag_boundary() const noexcept { return degree4_boundary_.empty(); }
    const std::vector<std::size_t>& degree4_boundary_vertices() const noexcept
    {
        return degree4_boundary_;
    }

    long euler_characteristic() const noexcept
    {
        return static_cast<long>(vertices_.size()) - static_cast<long>(edges_.size())
               + static_cast<long>(faces_.size());
    }

private:
    LatticeComplex() = default;

    std::set<Vertex> squares_;
    std::vector<Vertex> vertices_;
    std::map<Vertex, std::size_t> index_;
    std::vector<Edge> edges_;
    std::vector<Face> faces_;
    std::vector<std::array<std::optional<std::size_t>, 4>> neighbors_;
    std::vector<int> degree_;
    std::vector<int> square_count_;
    std::vector<std::size_t> interior_;
    std::vector<std::size_t> boundary_;
    std::vector<std::size_t> degree4_boundary_;
};

struct DiagonalClasses {
    std::vector<Vertex> even;
    std::vector<Vertex> odd;
};

DiagonalClasses diagonal_classes(const LatticeComplex& complex);

/// Squares of the axis-aligned block [m0, m0+width) x [n0, n0+height).
std::set<Vertex> block_squares(int m0, int n0, int width, int height);

/// Diamond of squares centred on the origin: |m + 1/2| + |n + 1/2| <= half_width.
/// The boundary is a staircase of degree-2 and degree-4 vertices with four
/// degree-3 tips.
std::set<Vertex> diamond_squares(int half_width);

/// Squares of the wedge {(m,n) : m >= |n|} whose corners satisfy m <= extent.
std::set<Vertex> wedge_squares(int extent);

}  // namespace ringpat
