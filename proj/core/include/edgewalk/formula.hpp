#pragma once

#include "edgewalk/graph.hpp"
#include "edgewalk/lattice.hpp"
#include "edgewalk/time_vector.hpp"

#include <cstdint>
#include <vector>

namespace edgewalk {

/// Signed rooted-subtree sum z(Gamma, G, root): (-1)^|G| * sum over connected
/// edge sets containing the root and G (the single-vertex set excluded) of
/// (-1)^|set|. `allowed` restricts to a branch; defaults to the whole tree.
std::int64_t z_direct(const MetricTree& tree, Vertex root, EdgeSubset G);
std::int64_t z_direct(const MetricTree& tree, Vertex root, EdgeSubset G, EdgeSubset allowed);

/// z0 = z(.,empty,.) + 1, computed by the product/complement recursion.
/// Always 0 or 1.
int z0(const MetricTree& tree, Vertex root);
int z0(const MetricTree& tree, Vertex root, EdgeSubset allowed);

enum class GameOutcome { FirstPlayerWins, SecondPlayerWins };

/// Normal-play move-down-the-tree game from the root; first player wins
/// exactly when z0(root) == 0.
GameOutcome game_outcome(const MetricTree& tree, Vertex root);

struct Term {
    EdgeSubset subset;
    std::int64_t coefficient; // c_G, exact integer
};
using TermList = std::vector<Term>;

/// Coefficient c_G of the birth-count expansion: product of branch z-values
/// over branches meeting G times the weighted symmetric-polynomial bracket
/// over the remaining branch z_i.
std::int64_t c_coefficient(const MetricTree& tree, Vertex root, EdgeSubset G);

/// All G with c_G != 0, ascending mask order. Evaluating
/// sum c_G * count_weak({2 t_i : i in G}, T) gives the births at the root
/// up to an additive constant.
TermList birth_terms(const MetricTree& tree, Vertex root);

std::int64_t births_formula(const MetricTree& tree, Vertex root, const Basis& basis, double T);
std::int64_t eval_terms(const TermList& terms, const std::vector<double>& edge_times, double T,
                        double epsilon = kBoundaryEpsilon);

/// Return-time count F for a tree whose root has valence one, via
/// sum over G of #[G] * z(G).
std::int64_t f_return_count(const MetricTree& tree, Vertex root, const Basis& basis, double T);

/// H-junction closed forms (times in edge order e1..e5, start vertex A).
std::int64_t h_births_A(const std::vector<double>& t, double T,
                        double epsilon = kBoundaryEpsilon);
std::int64_t h_births_B(const std::vector<double>& t, double T,
                        double epsilon = kBoundaryEpsilon);

enum class HVertex { A, B };

/// Total points on the H-junction: births at A plus births at B. Start B is
/// the time substitution t1<->t4, t2<->t5.
std::int64_t h_total(const std::vector<double>& t, HVertex start, double T,
                     double epsilon = kBoundaryEpsilon);

} // namespace edgewalk
