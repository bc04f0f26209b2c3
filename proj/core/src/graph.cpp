#include "edgewalk/graph.hpp"

#include "edgewalk/errors.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <tuple>

namespace edgewalk {

Vertex MetricTree::vertex(const std::string& label) const {
    for (Vertex v = 0; v < vertex_count(); ++v)
        if (labels_[v] == label) return v;
    throw UnknownVertex("no vertex labeled '" + label + "'");
}

EdgeSubset MetricTree::all_edges() const {
    if (edge_count() == 0) return {};
    return {(std::uint64_t{1} << edge_count()) - 1};
}

std::vector<double> MetricTree::edge_times() const {
    std::vector<double> t;
    t.reserve(edges_.size());
    for (const auto& e : edges_) t.push_back(e.time.value());
    return t;
}

std::vector<TimeSpec> MetricTree::edge_time_specs() const {
    std::vector<TimeSpec> t;
    t.reserve(edges_.size());
    for (const auto& e : edges_) t.push_back(e.time);
    return t;
}

MetricTree build_tree(const std::vector<std::tuple<std::string, std::string, TimeSpec>>& edge_list) {
    if (edge_list.empty()) throw Disconnected("empty edge list");
    if (edge_list.size() > 63) throw Error("at most 63 edges supported");

    MetricTree tree;
    std::map<std::string, Vertex> index;
    auto intern = [&](const std::string& label) {
        auto [it, fresh] = index.try_emplace(label, static_cast<Vertex>(tree.labels_.size()));
        if (fresh) {
            tree.labels_.push_back(label);
            tree.adjacency_.emplace_back();
        }
        return it->second;
    };

    // union-find for cycle detection
    std::vector<int> parent;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };

    std::map<std::pair<Vertex, Vertex>, bool> seen;
    for (const auto& [la, lb, time] : edge_list) {
        if (!(time.value() > 0.0))
            throw NonPositiveTime("edge " + la + "-" + lb + " has non-positive time");
        Vertex a = intern(la), b = intern(lb);
        if (a == b) throw CycleDetected("self-loop at '" + la + "'");
        auto key = std::minmax(a, b);
        if (seen[{key.first, key.second}])
            throw DuplicateEdge("duplicate edge " + la + "-" + lb);
        seen[{key.first, key.second}] = true;

        EdgeIndex idx = static_cast<EdgeIndex>(tree.edges_.size());
        tree.edges_.push_back(Edge{a, b, time});
        tree.adjacency_[a].push_back(idx);
        tree.adjacency_[b].push_back(idx);
    }

    // cycle/connectivity via union-find over the final vertex set
    parent.assign(tree.labels_.size(), 0);
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    for (const auto& e : tree.edges_) {
        int ra = find(e.a), rb = find(e.b);
        if (ra == rb) throw CycleDetected("edge " + tree.labels_[e.a] + "-" + tree.labels_[e.b] +
                                          " closes a cycle");
        parent[ra] = rb;
    }
    if (tree.edges_.size() != tree.labels_.size() - 1)
        throw Disconnected("edge list does not form a single tree");

    return tree;
}

MetricTree parse_edge_list(std::istream& in) {
    std::vector<std::tuple<std::string, std::string, TimeSpec>> edges;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string a, b, spec;
        if (!(ls >> a)) continue; // blank
        if (!(ls >> b >> spec))
            throw ParseError("line " + std::to_string(lineno) + ": expected '<a> <b> <time>'");
        edges.emplace_back(a, b, TimeSpec::parse(spec));
    }
    return build_tree(edges);
}

MetricTree load_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return parse_edge_list(in);
}

namespace {

// All edges reachable from `from` via `via` without re-crossing `from`'s
// other incident edges; restricted to `allowed`.
EdgeSubset reachable_through(const MetricTree& tree, Vertex from, EdgeIndex via, EdgeSubset allowed) {
    EdgeSubset out;
    if (!allowed.contains(via)) return out;
    std::vector<std::pair<Vertex, EdgeIndex>> stack{{tree.edge(via).other(from), via}};
    out = out.with(via);
    while (!stack.empty()) {
        auto [v, in_edge] = stack.back();
        stack.pop_back();
        for (EdgeIndex e : tree.incident(v)) {
            if (e == in_edge || !allowed.contains(e) || out.contains(e)) continue;
            out = out.with(e);
            stack.emplace_back(tree.edge(e).other(v), e);
        }
    }
    return out;
}

void subtree_families(const MetricTree& tree, Vertex v, EdgeIndex in_edge, EdgeSubset allowed,
                      std::vector<EdgeSubset>& out) {
    out.assign(1, EdgeSubset::empty());
    std::vector<EdgeSubset> child_fam, combined;
    for (EdgeIndex e : tree.incident(v)) {
        if (e == in_edge || !allowed.contains(e)) continue;
        subtree_families(tree, tree.edge(e).other(v), e, allowed, child_fam);
        combined.clear();
        combined.reserve(out.size() * (child_fam.size() + 1));
        for (EdgeSubset base : out) {
            combined.push_back(base); // branch absent
            for (EdgeSubset s : child_fam) combined.push_back(base.unite(s.with(e)));
        }
        out.swap(combined);
    }
}

} // namespace

std::vector<Branch> branch_decomposition(const MetricTree& tree, Vertex root) {
    if (!tree.has_vertex(root)) throw UnknownVertex("branch_decomposition: bad root");
    std::vector<Branch> branches;
    for (EdgeIndex e : tree.incident(root))
        branches.push_back(Branch{root, e, reachable_through(tree, root, e, tree.all_edges())});
    return branches;
}

std::vector<EdgeSubset> rooted_subtrees(const MetricTree& tree, Vertex root, EdgeSubset required) {
    return rooted_subtrees(tree, root, required, tree.all_edges());
}

std::vector<EdgeSubset> rooted_subtrees(const MetricTree& tree, Vertex root, EdgeSubset required,
                                        EdgeSubset allowed) {
    if (!tree.has_vertex(root)) throw UnknownVertex("rooted_subtrees: bad root");
    if (!tree.all_edges().contains_all(required))
        throw InvalidSubset("required set has bits beyond the edge count");
    if (!allowed.contains_all(required))
        throw InvalidSubset("required set not inside the allowed region");
    std::vector<EdgeSubset> fam;
    subtree_families(tree, root, -1, allowed, fam);
    std::vector<EdgeSubset> out;
    for (EdgeSubset s : fam)
        if (s.contains_all(required)) out.push_back(s);
    std::sort(out.begin(), out.end());
    return out;
}

MetricTree make_h_junction(const std::vector<TimeSpec>& times) {
    if (times.size() != 5) throw Error("H-junction needs exactly five times");
    for (const auto& t : times)
        if (!(t.value() > 0.0)) throw NonPositiveTime("H-junction time must be positive");
    return build_tree({
        {"L1", "A", times[0]},
        {"L2", "A", times[1]},
        {"A", "B", times[2]},
        {"B", "L4", times[3]},
        {"B", "L5", times[4]},
    });
}

MetricTree permute_edge_times(const MetricTree& tree, const std::vector<int>& perm) {
    const int m = tree.edge_count();
    if (static_cast<int>(perm.size()) != m)
        throw InvalidPermutation("permutation length != edge count");
    std::vector<bool> hit(m, false);
    for (int p : perm) {
        if (p < 0 || p >= m || hit[p]) throw InvalidPermutation("not a bijection on edge indices");
        hit[p] = true;
    }
    std::vector<std::tuple<std::string, std::string, TimeSpec>> edges;
    for (EdgeIndex i = 0; i < m; ++i) {
        const Edge& e = tree.edge(i);
        edges.emplace_back(tree.label(e.a), tree.label(e.b), tree.edge(perm[i]).time);
    }
    return build_tree(edges);
}

} // namespace edgewalk
