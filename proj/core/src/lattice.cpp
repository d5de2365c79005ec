#include "ringpat/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <string>

#include "ringpat/error.hpp"

namespace ringpat {

namespace {

std::string describe(Vertex v)
{
    return "(" + std::to_string(v.m) + "," + std::to_string(v.n) + ")";
}

// Square bases that share an edge with the square at `base`.
std::array<Vertex, 4> edge_adjacent_squares(Vertex base)
{
    return {base + Vertex{1, 0}, base + Vertex{0, 1}, base + Vertex{-1, 0}, base + Vertex{0, -1}};
}

bool edge_connected(const std::set<Vertex>& squares)
{
    std::set<Vertex> seen{*squares.begin()};
    std::deque<Vertex> queue{*squares.begin()};
    while (!queue.empty()) {
        const Vertex s = queue.front();
        queue.pop_front();
        for (const Vertex t : edge_adjacent_squares(s)) {
            if (squares.contains(t) && seen.insert(t).second) queue.push_back(t);
        }
    }
    return seen.size() == squares.size();
}

}  // namespace

LatticeComplex LatticeComplex::build(std::span<const Vertex> squares)
{
    return build(std::set<Vertex>(squares.begin(), squares.end()));
}

LatticeComplex LatticeComplex::build(const std::set<Vertex>& squares)
{
    if (squares.empty()) throw RingError(ErrorCode::InvalidArgument, "complex needs at least one square");
    if (!edge_connected(squares))
        throw RingError(ErrorCode::DisconnectedComplex, "squares are not edge-connected");

    LatticeComplex c;
    c.squares_ = squares;

    std::set<Vertex> vertex_set;
    for (const Vertex s : squares) {
        vertex_set.insert(s);
        vertex_set.insert(s + Vertex{1, 0});
        vertex_set.insert(s + Vertex{0, 1});
        vertex_set.insert(s + Vertex{1, 1});
    }
    c.vertices_.assign(vertex_set.begin(), vertex_set.end());
    for (std::size_t i = 0; i < c.vertices_.size(); ++i) c.index_.emplace(c.vertices_[i], i);

    const std::size_t nv = c.vertices_.size();
    c.neighbors_.assign(nv, {});
    c.degree_.assign(nv, 0);
    c.square_count_.assign(nv, 0);

    for (const Vertex s : squares) {
        Face f;
        f.base = s;
        f.corners = {c.index_.at(s), c.index_.at(s + Vertex{1, 0}), c.index_.at(s + Vertex{1, 1}),
                     c.index_.at(s + Vertex{0, 1})};
        for (const std::size_t k : f.corners) ++c.square_count_[k];
        c.faces_.push_back(f);
    }

    // An edge exists iff one of the (at most two) squares containing it exists.
    for (std::size_t i = 0; i < nv; ++i) {
        const Vertex v = c.vertices_[i];
        const bool east = squares.contains(v) || squares.contains(v + Vertex{0, -1});
        const bool north = squares.contains(v) || squares.contains(v + Vertex{-1, 0});
        if (east) {
            const std::size_t j = c.index_.at(v + Vertex{1, 0});
            c.edges_.push_back({i, j, true});
            c.neighbors_[i][static_cast<int>(Direction::East)] = j;
            c.neighbors_[j][static_cast<int>(Direction::West)] = i;
        }
        if (north) {
            const std::size_t j = c.index_.at(v + Vertex{0, 1});
            c.edges_.push_back({i, j, false});
            c.neighbors_[i][static_cast<int>(Direction::North)] = j;
            c.neighbors_[j][static_cast<int>(Direction::South)] = i;
        }
    }
    std::sort(c.edges_.begin(), c.edges_.end(), [](const Edge& x, const Edge& y) {
        return x.a != y.a ? x.a < y.a : x.b < y.b;
    });

    for (std::size_t i = 0; i < nv; ++i) {
        c.degree_[i] = static_cast<int>(std::count_if(c.neighbors_[i].begin(), c.neighbors_[i].end(),
                                                      [](const auto& x) { return x.has_value(); }));
        if (c.square_count_[i] == 4) {
            c.interior_.push_back(i);
        } else {
            c.boundary_.push_back(i);
            if (c.degree_[i] == 4) c.degree4_boundary_.push_back(i);
        }
    }

    if (c.euler_characteristic() != 1) {
        throw RingError(ErrorCode::NotSimplyConnected,
                        "Euler characteristic V - E + F = " + std::to_string(c.euler_characteristic()) +
                            " (expected 1)");
    }
    return c;
}

std::optional<std::size_t> LatticeComplex::find(Vertex v) const
{
    const auto it = index_.find(v);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t LatticeComplex::index(Vertex v) const
{
    const auto it = index_.find(v);
    if (it == index_.end()) throw RingError(ErrorCode::UnknownVertex, describe(v) + " is not in the complex");
    return it->second;
}

std::array<Vertex, 4> LatticeComplex::flower(Vertex v) const
{
    const std::size_t i = index(v);
    if (!is_interior(i)) throw RingError(ErrorCode::NotInterior, describe(v) + " is a boundary vertex");
    std::array<Vertex, 4> out;
    for (int k = 0; k < 4; ++k) out[k] = vertices_[*neighbors_[i][k]];
    return out;
}

DiagonalClasses diagonal_classes(const LatticeComplex& complex)
{
    DiagonalClasses out;
    for (const Vertex v : complex.vertices()) {
        (parity(v) == Parity::Even ? out.even : out.odd).push_back(v);
    }
    return out;
}

std::set<Vertex> block_squares(int m0, int n0, int width, int height)
{
    std::set<Vertex> out;
    for (int m = m0; m < m0 + width; ++m)
        for (int n = n0; n < n0 + height; ++n) out.insert({m, n});
    return out;
}

std::set<Vertex> diamond_squares(int half_width)
{
    std::set<Vertex> out;
    for (int m = -half_width; m < half_width; ++m)
        for (int n = -half_width; n < half_width; ++n)
            if (std::abs(2 * m + 1) + std::abs(2 * n + 1) <= 2 * half_width) out.insert({m, n});
    return out;
}

std::set<Vertex> wedge_squares(int extent)
{
    std::set<Vertex> out;
    for (int m = 0; m + 1 <= extent; ++m)
        for (int n = -m; n <= m - 1; ++n) out.insert({m, n});
    return out;
}

}  // namespace ringpat
