// Small-graph value type: simple undirected graphs on at most 64 vertices,
// one 64-bit adjacency row per vertex. Values are immutable; every edit
// returns a new graph, so instances can be shared freely across threads.
#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace degpow {

inline constexpr int kMaxVertices = 64;

using DegreeSequence = std::vector<int>;  // reported sorted non-increasing

class Graph {
public:
    Graph() = default;
    explicit Graph(int n);  // edgeless graph on n vertices

    int order() const { return n_; }
    int edge_count() const;
    bool has_edge(int u, int v) const;
    std::uint64_t neighbors(int v) const { return rows_[static_cast<size_t>(v)]; }
    int degree(int v) const;
    DegreeSequence degree_sequence() const;
    std::vector<std::pair<int, int>> edges() const;  // u < v, lexicographic

    Graph with_edge(int u, int v) const;
    Graph without_edge(int u, int v) const;
    Graph with_vertex(std::uint64_t neighborhood) const;  // append one vertex
    Graph induced(std::uint64_t vertex_mask) const;       // relabels to 0..k-1
    Graph strip_isolated() const;
    Graph relabel(const std::vector<int>& new_label) const;  // v -> new_label[v]

    friend auto operator<=>(const Graph&, const Graph&) = default;

private:
    int n_ = 0;
    std::vector<std::uint64_t> rows_;

    void check_vertex(int v) const;
};

// Construction and structural operations.
Graph build_graph(int n, const std::vector<std::pair<int, int>>& edge_list);
Graph complement(const Graph& g);
Graph join(const Graph& a, const Graph& b);
Graph disjoint_union(const Graph& a, const Graph& b);

// Deterministic isomorphism-class representative: refinement plus
// backtracking over vertex orderings, minimizing the packed upper-triangle
// adjacency bit-string. Exact for any order, intended for n <= 12 or so.
Graph canonical_form(const Graph& g);

// graph6 interchange format (order byte, then column-major upper-triangle
// bits packed big-endian into 6-bit groups, each +63). Orders 63 and 64 use
// the standard '~' long form.
std::string graph6_encode(const Graph& g);
Graph graph6_decode(std::string_view text);

// Human-authored edge-list format "n: u-v,u-v,...".
Graph parse_edge_list(std::string_view text);
std::string format_edge_list(const Graph& g);

// Accepts either graph6 or edge-list text.
Graph parse_graph(std::string_view text);

}  // namespace degpow
