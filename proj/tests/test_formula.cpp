#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "edgewalk/errors.hpp"
#include "edgewalk/formula.hpp"
#include "edgewalk/simulate.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <tuple>
#include <vector>

using namespace edgewalk;

namespace {

std::vector<TimeSpec> paper_times() {
    return {TimeSpec::parse("1/1"), TimeSpec::parse("sqrt(2)"), TimeSpec::parse("sqrt(3)"),
            TimeSpec::parse("sqrt(5)"), TimeSpec::parse("sqrt(7)")};
}

MetricTree random_tree(int edges, std::mt19937& rng) {
    std::vector<std::tuple<std::string, std::string, TimeSpec>> list;
    for (int v = 1; v <= edges; ++v) {
        std::uniform_int_distribution<int> parent(0, v - 1);
        list.emplace_back("v" + std::to_string(parent(rng)), "v" + std::to_string(v),
                          TimeSpec::decimal(1.0 + 0.01 * v));
    }
    return build_tree(list);
}

// Normal-play minimax: the player at v moves down one edge; stuck = lost.
bool first_player_wins(const MetricTree& tree, Vertex v, EdgeIndex in_edge) {
    for (EdgeIndex e : tree.incident(v)) {
        if (e == in_edge) continue;
        if (!first_player_wins(tree, tree.edge(e).other(v), e)) return true;
    }
    return false;
}

// Incommensurate basis for cross-checking against the simulator.
Basis prime_sqrt_basis(int edges) {
    const int primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29};
    std::vector<TimeSpec> specs;
    for (int e = 0; e < edges; ++e)
        specs.push_back(e == 0 ? TimeSpec::parse("1/1") : TimeSpec::sqrt_of(primes[e - 1]));
    return Basis::from_specs(specs);
}

MetricTree with_basis_times(const MetricTree& tree, const Basis& basis) {
    std::vector<std::tuple<std::string, std::string, TimeSpec>> list;
    for (int i = 0; i < tree.edge_count(); ++i) {
        const Edge& e = tree.edge(i);
        list.emplace_back(tree.label(e.a), tree.label(e.b), TimeSpec::decimal(basis.values[i]));
    }
    return build_tree(list);
}

} // namespace

TEST_CASE("branch z-values of the H-junction at A") {
    MetricTree h = make_h_junction(paper_times());
    Vertex a = h.vertex("A");
    auto branches = branch_decomposition(h, a);
    std::map<int, EdgeSubset> by_gateway;
    for (const auto& br : branches) by_gateway[br.gateway] = br.edges;

    CHECK(z_direct(h, a, EdgeSubset::empty(), by_gateway[0]) == -1); // z1
    CHECK(z_direct(h, a, EdgeSubset::empty(), by_gateway[1]) == -1); // z2
    CHECK(z_direct(h, a, EdgeSubset::empty(), by_gateway[2]) == 0);  // z3, the long branch

    // within the long branch
    EdgeSubset e45{0b11000}, e345{0b11100};
    CHECK(z_direct(h, a, e45, by_gateway[2]) == -1);
    CHECK(z_direct(h, a, e345, by_gateway[2]) == 1);
}

TEST_CASE("z0 recursion agrees with the direct sum") {
    std::mt19937 rng(53);
    for (int trial = 0; trial < 40; ++trial) {
        MetricTree t = random_tree(1 + trial % 8, rng);
        for (Vertex v = 0; v < t.vertex_count(); ++v) {
            int label = z0(t, v);
            CHECK((label == 0 || label == 1));
            CHECK(label == z_direct(t, v, EdgeSubset::empty()) + 1);
        }
    }
}

TEST_CASE("game outcome matches minimax") {
    // single edge: one move, first player wins
    MetricTree one = build_tree({{"r", "x", TimeSpec::decimal(1.0)}});
    CHECK(game_outcome(one, one.vertex("r")) == GameOutcome::FirstPlayerWins);
    // two-edge path: second player makes the last move
    MetricTree two = build_tree({{"r", "x", TimeSpec::decimal(1.0)},
                                 {"x", "y", TimeSpec::decimal(1.0)}});
    CHECK(game_outcome(two, two.vertex("r")) == GameOutcome::SecondPlayerWins);

    std::mt19937 rng(59);
    for (int trial = 0; trial < 30; ++trial) {
        MetricTree t = random_tree(1 + trial % 10, rng);
        for (Vertex v = 0; v < t.vertex_count(); ++v) {
            bool wins = first_player_wins(t, v, -1);
            CHECK(game_outcome(t, v) ==
                  (wins ? GameOutcome::FirstPlayerWins : GameOutcome::SecondPlayerWins));
        }
    }
}

TEST_CASE("birth terms for the two-edge path") {
    MetricTree t = build_tree({{"B1", "A", TimeSpec::decimal(1.0)},
                               {"A", "B2", TimeSpec::decimal(1.4)}});
    TermList terms = birth_terms(t, t.vertex("A"));
    REQUIRE(terms.size() == 2);
    CHECK(terms[0].subset == EdgeSubset::single(0));
    CHECK(terms[0].coefficient == 1);
    CHECK(terms[1].subset == EdgeSubset::single(1));
    CHECK(terms[1].coefficient == 1);
    // the empty subset carries no weight: bracket over z1 = z2 = -1 vanishes
    CHECK(c_coefficient(t, t.vertex("A"), EdgeSubset::empty()) == 0);
}

TEST_CASE("birth terms for the H-junction at A") {
    MetricTree h = make_h_junction(paper_times());
    TermList terms = birth_terms(h, h.vertex("A"));

    std::map<std::uint64_t, std::int64_t> expect{
        {0b00001, 1},  // {e1}
        {0b00010, 1},  // {e2}
        {0b00011, 1},  // {e1,e2}
        {0b11001, -1}, // {e1,e4,e5}
        {0b11010, -1}, // {e2,e4,e5}
        {0b11101, 1},  // {e1,e3,e4,e5}
        {0b11110, 1},  // {e2,e3,e4,e5}
    };
    REQUIRE(terms.size() == expect.size());
    for (const Term& term : terms) {
        REQUIRE(expect.count(term.subset.mask) == 1);
        CHECK(term.coefficient == expect[term.subset.mask]);
        CHECK(term.coefficient == c_coefficient(h, h.vertex("A"), term.subset));
    }
}

TEST_CASE("closed H-junction forms agree with the generic expansion") {
    MetricTree h = make_h_junction(paper_times());
    auto t = h.edge_times();
    Basis basis = Basis::from_specs(paper_times());
    TermList terms = birth_terms(h, h.vertex("A"));
    for (double T : {5.0, 10.0, 17.0, 23.5}) {
        CHECK(h_births_A(t, T) == eval_terms(terms, t, T));
        CHECK(births_formula(h, h.vertex("A"), basis, T) == h_births_A(t, T));
    }
}

TEST_CASE("formula counts differ from simulated births by a constant") {
    MetricTree h = make_h_junction(paper_times());
    Vertex a = h.vertex("A"), b = h.vertex("B");
    Basis basis = Basis::from_specs(paper_times());
    auto t = h.edge_times();

    std::int64_t offset_a = 0, offset_b = 0, offset_total = 0;
    bool first = true;
    for (double T : {6.0, 11.0, 16.0, 21.0, 26.0, 31.0}) {
        SimulationReport rep = simulate(h, a, T, basis);
        std::int64_t da = h_births_A(t, T) - births_at(rep, a);
        std::int64_t db = h_births_B(t, T) - births_at(rep, b);
        std::int64_t dt = h_total(t, HVertex::A, T) - rep.total_points;
        if (first) {
            offset_a = da;
            offset_b = db;
            offset_total = dt;
            first = false;
        }
        CHECK(da == offset_a);
        CHECK(db == offset_b);
        CHECK(dt == offset_total);
    }
}

TEST_CASE("generic birth expansion tracks the simulator on random trees") {
    std::mt19937 rng(61);
    for (int trial = 0; trial < 8; ++trial) {
        MetricTree skeleton = random_tree(2 + trial % 5, rng);
        Basis basis = prime_sqrt_basis(skeleton.edge_count());
        MetricTree t = with_basis_times(skeleton, basis);
        Vertex root = trial % t.vertex_count();
        TermList terms = birth_terms(t, root);

        std::int64_t offset = 0;
        bool first = true;
        for (double T : {4.0, 9.0, 14.0, 19.0}) {
            std::int64_t formula = eval_terms(terms, t.edge_times(), T);
            std::int64_t simulated = births_at(simulate(t, root, T, basis), root);
            if (first) {
                offset = formula - simulated;
                first = false;
            }
            CHECK(formula - simulated == offset);
        }
    }
}

TEST_CASE("return-time count at a valence-one root") {
    std::mt19937 rng(67);
    for (int trial = 0; trial < 6; ++trial) {
        MetricTree skeleton = random_tree(2 + trial % 5, rng);
        Basis basis = prime_sqrt_basis(skeleton.edge_count());
        MetricTree t = with_basis_times(skeleton, basis);
        Vertex leaf = -1;
        for (Vertex v = 0; v < t.vertex_count(); ++v)
            if (t.degree(v) == 1) leaf = v;
        REQUIRE(leaf >= 0);

        for (double T : {5.0, 12.0, 22.0}) {
            // the empty-subset term cancels the n = 0 origin, so F equals the
            // simulator's return ledger exactly (t = 0 excluded on both sides)
            std::int64_t f = f_return_count(t, leaf, basis, T);
            auto returns = return_times_at(simulate(t, leaf, T, basis), leaf);
            CHECK(f == static_cast<std::int64_t>(returns.size()));
        }
    }

    MetricTree h = make_h_junction(paper_times());
    CHECK_THROWS_AS(f_return_count(h, h.vertex("A"), Basis::from_specs(paper_times()), 5.0),
                    InvalidBranch);
}
