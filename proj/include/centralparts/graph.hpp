#pragma once

#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace centralparts {

// A set of vertex indices of some owning graph.
using VertexSet = std::set<int>;

// Immutable simple undirected graph. Vertices are dense 0-based indices;
// labels are the external identity and are pairwise distinct. Adjacency is
// symmetric, loop-free and duplicate-free; neighbor lists are sorted.
// Disconnected graphs are representable (connectivity is an operation-level
// precondition, not a type invariant).
class Graph {
public:
    Graph() = default;

    // Validates every invariant; throws std::invalid_argument on violation
    // (self-loop, duplicate edge, repeated label, label with whitespace).
    static Graph build(std::vector<std::string> labels,
                       const std::vector<std::pair<int, int>>& edges);

    int n() const { return static_cast<int>(adj_.size()); }
    int m() const { return m_; }

    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(int u, int v) const;

    const std::string& label(int v) const { return labels_[v]; }
    const std::vector<std::string>& labels() const { return labels_; }
    // Index of a label, or -1 when absent.
    int index_of(const std::string& label) const;

    // All edges as (u, v) with u < v, sorted.
    std::vector<std::pair<int, int>> edges() const;

    bool connected() const;

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, int> index_;
    std::vector<std::vector<int>> adj_;
    int m_ = 0;
};

// Parses the edge-list text format: one edge per line as two whitespace
// separated labels; blank lines and '#' comment lines are skipped. Vertices
// are ordered by first appearance. Self-loops, duplicate edges and lines with
// a token count other than two are ParseErrors.
Graph parse_edge_list(const std::string& text);

// One edge per line, endpoints in label order, lines sorted lexicographically.
// Isolated vertices are not representable in this format.
std::string serialize(const Graph& g);

// Same label set and same edge set (vertex order may differ).
bool same_labeled_graph(const Graph& a, const Graph& b);

// Connected with m = n - 1.
bool is_tree(const Graph& g);

// Labels of a vertex set, sorted lexicographically.
std::vector<std::string> labels_of(const Graph& g, const VertexSet& s);

// Vertex set from labels; throws std::invalid_argument on unknown labels.
VertexSet set_of_labels(const Graph& g, const std::vector<std::string>& labels);

VertexSet all_vertices(const Graph& g);

}  // namespace centralparts
