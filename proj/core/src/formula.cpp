#include "edgewalk/formula.hpp"

#include "edgewalk/errors.hpp"

#include <algorithm>
#include <unordered_map>

namespace edgewalk {

namespace {

int parity_sign(int n) { return (n % 2 == 0) ? 1 : -1; }

// Per-branch table of signed superset sums:
//   f[S] = sum over rooted subtrees M (M nonempty, M contains S) of (-1)^|M|
// over branch-local bit positions, so z(branch, S) = (-1)^|S| * f[S].
struct BranchZTable {
    std::vector<int> global_bits;        // local position -> global edge index
    std::vector<std::int64_t> f;         // indexed by local mask

    std::int64_t z(EdgeSubset global_subset) const {
        std::uint64_t local = 0;
        std::uint64_t remaining = global_subset.mask;
        for (std::size_t i = 0; i < global_bits.size(); ++i) {
            std::uint64_t bit = std::uint64_t{1} << global_bits[i];
            if (remaining & bit) {
                local |= std::uint64_t{1} << i;
                remaining &= ~bit;
            }
        }
        if (remaining) throw InvalidSubset("subset leaves the branch");
        return parity_sign(global_subset.size()) * f[local];
    }
};

BranchZTable build_branch_table(const MetricTree& tree, Vertex root, EdgeSubset allowed) {
    BranchZTable table;
    for (int i = 0; i < tree.edge_count(); ++i)
        if (allowed.contains(i)) table.global_bits.push_back(i);
    const int b = static_cast<int>(table.global_bits.size());
    table.f.assign(std::size_t{1} << b, 0);

    for (EdgeSubset m : rooted_subtrees(tree, root, EdgeSubset::empty(), allowed)) {
        if (m.mask == 0) continue; // single-vertex subtree handled by z0 only
        std::uint64_t local = 0;
        for (int i = 0; i < b; ++i)
            if (m.contains(table.global_bits[i])) local |= std::uint64_t{1} << i;
        table.f[local] += parity_sign(m.size());
    }
    // superset-sum transform
    for (int i = 0; i < b; ++i) {
        std::uint64_t bit = std::uint64_t{1} << i;
        for (std::uint64_t s = 0; s < table.f.size(); ++s)
            if (!(s & bit)) table.f[s] += table.f[s | bit];
    }
    return table;
}

// sum_{j=0}^{r-1} (r-j) * sigma_j(zs), with sigma_j the elementary symmetric
// polynomials; the empty sum (r = 0) is 0.
std::int64_t weighted_sigma_bracket(const std::vector<std::int64_t>& zs) {
    const int r = static_cast<int>(zs.size());
    if (r == 0) return 0;
    std::vector<std::int64_t> sigma(r + 1, 0);
    sigma[0] = 1;
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j >= 1; --j) sigma[j] += zs[i] * sigma[j - 1];
    std::int64_t total = 0;
    for (int j = 0; j <= r - 1; ++j) total += static_cast<std::int64_t>(r - j) * sigma[j];
    return total;
}

} // namespace

std::int64_t z_direct(const MetricTree& tree, Vertex root, EdgeSubset G) {
    return z_direct(tree, root, G, tree.all_edges());
}

std::int64_t z_direct(const MetricTree& tree, Vertex root, EdgeSubset G, EdgeSubset allowed) {
    std::int64_t sum = 0;
    for (EdgeSubset m : rooted_subtrees(tree, root, G, allowed))
        if (m.mask != 0) sum += parity_sign(m.size());
    return parity_sign(G.size()) * sum;
}

namespace {

int z0_rec(const MetricTree& tree, Vertex v, EdgeIndex in_edge, EdgeSubset allowed) {
    int product = 1;
    for (EdgeIndex e : tree.incident(v)) {
        if (e == in_edge || !allowed.contains(e)) continue;
        product *= 1 - z0_rec(tree, tree.edge(e).other(v), e, allowed);
    }
    return product;
}

} // namespace

int z0(const MetricTree& tree, Vertex root) { return z0(tree, root, tree.all_edges()); }

int z0(const MetricTree& tree, Vertex root, EdgeSubset allowed) {
    if (!tree.has_vertex(root)) throw UnknownVertex("z0: bad root");
    return z0_rec(tree, root, -1, allowed);
}

GameOutcome game_outcome(const MetricTree& tree, Vertex root) {
    return z0(tree, root) == 0 ? GameOutcome::FirstPlayerWins : GameOutcome::SecondPlayerWins;
}

std::int64_t c_coefficient(const MetricTree& tree, Vertex root, EdgeSubset G) {
    if (!tree.all_edges().contains_all(G)) throw InvalidSubset("c_coefficient: bad subset");
    auto branches = branch_decomposition(tree, root);
    std::int64_t product = 1;
    std::vector<std::int64_t> outside_z;
    for (const Branch& br : branches) {
        EdgeSubset part = G.intersect(br.edges);
        if (part.mask != 0)
            product *= z_direct(tree, root, part, br.edges);
        else
            outside_z.push_back(z_direct(tree, root, EdgeSubset::empty(), br.edges));
    }
    return product * weighted_sigma_bracket(outside_z);
}

TermList birth_terms(const MetricTree& tree, Vertex root) {
    auto branches = branch_decomposition(tree, root);
    const int n = static_cast<int>(branches.size());
    std::vector<BranchZTable> tables;
    tables.reserve(n);
    std::vector<std::int64_t> branch_z0; // z_i = z(Gamma_{e_i}, empty, root)
    for (const Branch& br : branches) {
        tables.push_back(build_branch_table(tree, root, br.edges));
        branch_z0.push_back(tables.back().z(EdgeSubset::empty()));
    }

    // bracket depends only on which branches G meets; memoized per meet-mask
    std::vector<std::int64_t> bracket(std::size_t{1} << n, 0);
    for (std::uint64_t meets = 0; meets < bracket.size(); ++meets) {
        std::vector<std::int64_t> outside;
        for (int i = 0; i < n; ++i)
            if (!((meets >> i) & 1)) outside.push_back(branch_z0[i]);
        bracket[meets] = weighted_sigma_bracket(outside);
    }

    TermList terms;
    const std::uint64_t all = tree.all_edges().mask;
    for (std::uint64_t g = 0; g <= all; ++g) {
        EdgeSubset G{g};
        std::uint64_t meets = 0;
        std::int64_t product = 1;
        for (int i = 0; i < n && product != 0; ++i) {
            EdgeSubset part = G.intersect(branches[i].edges);
            if (part.mask != 0) {
                meets |= std::uint64_t{1} << i;
                product *= tables[i].z(part);
            }
        }
        std::int64_t c = product * bracket[meets];
        if (c != 0) terms.push_back(Term{G, c});
    }
    return terms;
}

std::int64_t eval_terms(const TermList& terms, const std::vector<double>& edge_times, double T,
                        double epsilon) {
    std::int64_t total = 0;
    for (const Term& term : terms) {
        std::vector<double> coeffs;
        for (std::size_t i = 0; i < edge_times.size(); ++i)
            if (term.subset.contains(static_cast<int>(i))) coeffs.push_back(2.0 * edge_times[i]);
        total += term.coefficient * count_weak(coeffs, T, epsilon);
    }
    return total;
}

std::int64_t births_formula(const MetricTree& tree, Vertex root, const Basis& basis, double T) {
    return eval_terms(birth_terms(tree, root), tree.edge_times(), T, kBoundaryEpsilon);
}

std::int64_t f_return_count(const MetricTree& tree, Vertex root, const Basis& basis, double T) {
    if (!tree.has_vertex(root)) throw UnknownVertex("f_return_count: bad root");
    if (tree.degree(root) != 1)
        throw InvalidBranch("f_return_count: root must have valence one");
    BranchZTable table = build_branch_table(tree, root, tree.all_edges());
    auto times = tree.edge_times();
    std::int64_t total = 0;
    const std::uint64_t all = tree.all_edges().mask;
    for (std::uint64_t g = 0; g <= all; ++g) {
        EdgeSubset G{g};
        std::int64_t zg = table.z(G);
        if (zg == 0) continue;
        std::vector<double> coeffs;
        for (int i = 0; i < tree.edge_count(); ++i)
            if (G.contains(i)) coeffs.push_back(2.0 * times[i]);
        total += zg * count_weak(coeffs, T, kBoundaryEpsilon);
    }
    return total;
}

namespace {

std::vector<double> doubled(const std::vector<double>& t, std::initializer_list<int> idx) {
    std::vector<double> out;
    for (int i : idx) out.push_back(2.0 * t[i - 1]);
    return out;
}

} // namespace

std::int64_t h_births_A(const std::vector<double>& t, double T, double epsilon) {
    if (t.size() != 5) throw PreconditionViolated("h_births_A: need five times");
    return count_weak(doubled(t, {1, 3, 4, 5}), T, epsilon) +
           count_weak(doubled(t, {2, 3, 4, 5}), T, epsilon) -
           count_weak(doubled(t, {1, 4, 5}), T, epsilon) -
           count_weak(doubled(t, {2, 4, 5}), T, epsilon) +
           count_weak(doubled(t, {1, 2}), T, epsilon) +
           count_weak(doubled(t, {1}), T, epsilon) +
           count_weak(doubled(t, {2}), T, epsilon);
}

std::int64_t h_births_B(const std::vector<double>& t, double T, double epsilon) {
    if (t.size() != 5) throw PreconditionViolated("h_births_B: need five times");
    const double bound = T - t[2];
    return count_weak(doubled(t, {1, 2, 3, 4}), bound, epsilon) +
           count_weak(doubled(t, {1, 2, 3, 5}), bound, epsilon) +
           count_weak(doubled(t, {1, 2, 4, 5}), bound, epsilon) -
           count_weak(doubled(t, {1, 2}), bound, epsilon);
}

std::int64_t h_total(const std::vector<double>& t, HVertex start, double T, double epsilon) {
    std::vector<double> u = t;
    if (start == HVertex::B) {
        std::swap(u[0], u[3]);
        std::swap(u[1], u[4]);
    }
    return h_births_A(u, T, epsilon) + h_births_B(u, T, epsilon);
}

} // namespace edgewalk
