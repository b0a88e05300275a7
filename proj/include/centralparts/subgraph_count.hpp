#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "centralparts/graph.hpp"

namespace centralparts {

// Exact unbounded counts; 2^(n-2)-style values must never round.
using BigCount = boost::multiprecision::cpp_int;

// What "connected subgraph" ranges over: vertex subsets with a connected
// induced subgraph, or pairs (S, E') of a vertex subset plus a connected
// spanning edge subset. The two coincide on trees.
enum class CountMode { Induced, EdgeSubgraph };

std::string to_string(CountMode mode);

// Enumeration refuses graphs above these sizes (counting is exponential);
// fail fast instead of running silently for hours. Overridable, but the
// bitmask machinery caps everything at 32 vertices regardless.
struct CountCaps {
    int induced = 24;
    int edge = 14;

    int for_mode(CountMode mode) const {
        return mode == CountMode::Induced ? induced : edge;
    }
};

// Number of connected subgraphs containing every vertex of `required` and no
// vertex of `forbidden`. Throws CapExceededError above the mode's cap.
BigCount count_connected(const Graph& g, const VertexSet& required,
                         const VertexSet& forbidden,
                         CountMode mode = CountMode::Induced,
                         const CountCaps& caps = {});

// f(v): connected subgraphs through v.
BigCount subgraph_number(const Graph& g, int v,
                         CountMode mode = CountMode::Induced,
                         const CountCaps& caps = {});

// epsilon(v) = min over u of f(v,u), the pair count; f(v,v) = f(v) never
// binds the minimum except on a single vertex.
BigCount eccentric_subgraph_number(const Graph& g, int v,
                                   CountMode mode = CountMode::Induced,
                                   const CountCaps& caps = {});

// All pair counts f(v,u) from one pass over the global enumeration of
// connected sets (every pair inside each set is credited), instead of n^2
// separate enumerations. Diagonal holds f(v).
struct PairCountTable {
    int n = 0;
    CountMode mode = CountMode::Induced;
    std::vector<BigCount> pair;  // row-major n*n, symmetric

    const BigCount& at(int v, int u) const {
        return pair[static_cast<size_t>(v) * n + u];
    }
    const BigCount& single(int v) const { return at(v, v); }
};

PairCountTable pair_count_table(const Graph& g,
                                CountMode mode = CountMode::Induced,
                                const CountCaps& caps = {});
PairCountTable pair_count_table_serial(const Graph& g,
                                       CountMode mode = CountMode::Induced,
                                       const CountCaps& caps = {});

// Vertices maximizing f(v).
VertexSet subgraph_core(const Graph& g, CountMode mode = CountMode::Induced,
                        const CountCaps& caps = {});

// Vertices maximizing epsilon(v).
VertexSet core_vertices(const Graph& g, CountMode mode = CountMode::Induced,
                        const CountCaps& caps = {});

// Rooted product recurrences on trees; oracle-equal to count_connected.
// Subtrees through v: product over children c of (1 + count below c).
BigCount tree_subtree_count(const Graph& t, int v);
// Subtrees through both u and v: product over path vertices of their
// hanging-branch factors.
BigCount tree_pair_count(const Graph& t, int u, int v);

}  // namespace centralparts
