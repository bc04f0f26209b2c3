#pragma once

#include "edgewalk/time_spec.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace edgewalk {

using Vertex = int;
using EdgeIndex = int;

/// Bitmask over the edge indices of one MetricTree. Edge index equals input
/// order, which fixes mask positions and all enumeration orders.
struct EdgeSubset {
    std::uint64_t mask = 0;

    static EdgeSubset empty() { return {}; }
    static EdgeSubset single(EdgeIndex i) { return {std::uint64_t{1} << i}; }

    bool contains(EdgeIndex i) const { return (mask >> i) & 1; }
    bool contains_all(EdgeSubset other) const { return (mask & other.mask) == other.mask; }
    bool intersects(EdgeSubset other) const { return (mask & other.mask) != 0; }
    int size() const { return __builtin_popcountll(mask); }
    EdgeSubset with(EdgeIndex i) const { return {mask | (std::uint64_t{1} << i)}; }
    EdgeSubset intersect(EdgeSubset other) const { return {mask & other.mask}; }
    EdgeSubset unite(EdgeSubset other) const { return {mask | other.mask}; }

    friend bool operator==(EdgeSubset a, EdgeSubset b) { return a.mask == b.mask; }
    friend bool operator<(EdgeSubset a, EdgeSubset b) { return a.mask < b.mask; }
};

struct Edge {
    Vertex a = -1;
    Vertex b = -1;
    TimeSpec time;
    Vertex other(Vertex v) const { return v == a ? b : a; }
};

/// Finite metric tree. Immutable after construction.
class MetricTree {
public:
    int vertex_count() const { return static_cast<int>(labels_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const Edge& edge(EdgeIndex i) const { return edges_.at(i); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<EdgeIndex>& incident(Vertex v) const { return adjacency_.at(v); }
    int degree(Vertex v) const { return static_cast<int>(adjacency_.at(v).size()); }
    const std::string& label(Vertex v) const { return labels_.at(v); }
    Vertex vertex(const std::string& label) const;
    bool has_vertex(Vertex v) const { return v >= 0 && v < vertex_count(); }
    EdgeSubset all_edges() const;

    /// t_i of every edge, in edge-index order.
    std::vector<double> edge_times() const;
    std::vector<TimeSpec> edge_time_specs() const;

private:
    friend MetricTree build_tree(const std::vector<std::tuple<std::string, std::string, TimeSpec>>&);
    std::vector<std::string> labels_;
    std::vector<Edge> edges_;
    std::vector<std::vector<EdgeIndex>> adjacency_;
};

/// One root branch: the maximal subtree reachable from `root` through
/// `gateway` without crossing the root's other incident edges.
struct Branch {
    Vertex root = -1;
    EdgeIndex gateway = -1;
    EdgeSubset edges;
};

MetricTree build_tree(const std::vector<std::tuple<std::string, std::string, TimeSpec>>& edge_list);

/// Edge-list text, one `<vertexA> <vertexB> <time-spec>` per line; `#` comments.
MetricTree parse_edge_list(std::istream& in);
MetricTree load_edge_list(const std::string& path);

std::vector<Branch> branch_decomposition(const MetricTree& tree, Vertex root);

/// All connected edge sets containing `root` and `required`, in ascending
/// mask order. The empty set appears iff `required` is empty. `allowed`
/// restricts enumeration to a sub-forest (defaults to the whole tree).
std::vector<EdgeSubset> rooted_subtrees(const MetricTree& tree, Vertex root, EdgeSubset required);
std::vector<EdgeSubset> rooted_subtrees(const MetricTree& tree, Vertex root, EdgeSubset required,
                                        EdgeSubset allowed);

/// Five-edge H-junction: leaves L1,L2,L4,L5; A incident to e1,e2,e3;
/// B incident to e3,e4,e5.
MetricTree make_h_junction(const std::vector<TimeSpec>& times);

/// Same topology; edge i carries the time formerly on edge perm[i].
MetricTree permute_edge_times(const MetricTree& tree, const std::vector<int>& perm);

} // namespace edgewalk
