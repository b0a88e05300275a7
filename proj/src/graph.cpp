#include "centralparts/graph.hpp"

#include <algorithm>
#include <cctype>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "centralparts/errors.hpp"

namespace centralparts {

Graph Graph::build(std::vector<std::string> labels,
                   const std::vector<std::pair<int, int>>& edges) {
    Graph g;
    const int n = static_cast<int>(labels.size());
    g.labels_ = std::move(labels);
    g.adj_.assign(n, {});
    for (int i = 0; i < n; ++i) {
        const std::string& lab = g.labels_[i];
        if (lab.empty())
            throw std::invalid_argument("empty vertex label");
        for (char c : lab)
            if (std::isspace(static_cast<unsigned char>(c)))
                throw std::invalid_argument("label contains whitespace: '" + lab + "'");
        if (!g.index_.emplace(lab, i).second)
            throw std::invalid_argument("duplicate label: '" + lab + "'");
    }
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v)
            throw std::invalid_argument("self-loop at vertex '" + g.labels_[u] + "'");
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (int i = 0; i < n; ++i) {
        auto& nb = g.adj_[i];
        std::sort(nb.begin(), nb.end());
        if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
            throw std::invalid_argument("duplicate edge at vertex '" + g.labels_[i] + "'");
    }
    g.m_ = static_cast<int>(edges.size());
    return g;
}

bool Graph::has_edge(int u, int v) const {
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::index_of(const std::string& label) const {
    auto it = index_.find(label);
    return it == index_.end() ? -1 : it->second;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

bool Graph::connected() const {
    if (n() == 0) return true;
    std::vector<char> seen(n(), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : adj_[u])
            if (!seen[v]) {
                seen[v] = 1;
                ++reached;
                q.push(v);
            }
    }
    return reached == n();
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> toks;
    std::istringstream in(line);
    std::string t;
    while (in >> t) toks.push_back(t);
    return toks;
}

}  // namespace

Graph parse_edge_list(const std::string& text) {
    std::vector<std::string> labels;
    std::unordered_map<std::string, int> index;
    std::vector<std::pair<int, int>> edges;
    std::set<std::pair<int, int>> seen_edges;

    auto vertex = [&](const std::string& lab) {
        auto it = index.find(lab);
        if (it != index.end()) return it->second;
        int id = static_cast<int>(labels.size());
        labels.push_back(lab);
        index.emplace(lab, id);
        return id;
    };

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        auto toks = tokenize(line);
        if (toks.size() != 2)
            throw ParseError(lineno, "expected two labels, got " +
                                         std::to_string(toks.size()));
        if (toks[0] == toks[1])
            throw ParseError(lineno, "self-loop '" + toks[0] + " " + toks[1] + "'");
        int u = vertex(toks[0]);
        int v = vertex(toks[1]);
        auto key = std::minmax(u, v);
        if (!seen_edges.insert(key).second)
            throw ParseError(lineno, "duplicate edge '" + toks[0] + " " + toks[1] + "'");
        edges.emplace_back(u, v);
    }
    return Graph::build(std::move(labels), edges);
}

std::string serialize(const Graph& g) {
    std::vector<std::string> lines;
    lines.reserve(g.m());
    for (auto [u, v] : g.edges()) {
        const std::string& a = g.label(u);
        const std::string& b = g.label(v);
        lines.push_back(a < b ? a + " " + b : b + " " + a);
    }
    std::sort(lines.begin(), lines.end());
    std::string out;
    for (const auto& l : lines) {
        out += l;
        out += '\n';
    }
    return out;
}

bool same_labeled_graph(const Graph& a, const Graph& b) {
    if (a.n() != b.n() || a.m() != b.m()) return false;
    std::vector<std::string> la = a.labels(), lb = b.labels();
    std::sort(la.begin(), la.end());
    std::sort(lb.begin(), lb.end());
    if (la != lb) return false;
    auto edge_labels = [](const Graph& g) {
        std::set<std::pair<std::string, std::string>> s;
        for (auto [u, v] : g.edges()) {
            std::string x = g.label(u), y = g.label(v);
            if (y < x) std::swap(x, y);
            s.emplace(std::move(x), std::move(y));
        }
        return s;
    };
    return edge_labels(a) == edge_labels(b);
}

bool is_tree(const Graph& g) { return g.m() == g.n() - 1 && g.connected(); }

std::vector<std::string> labels_of(const Graph& g, const VertexSet& s) {
    std::vector<std::string> out;
    out.reserve(s.size());
    for (int v : s) out.push_back(g.label(v));
    std::sort(out.begin(), out.end());
    return out;
}

VertexSet set_of_labels(const Graph& g, const std::vector<std::string>& labels) {
    VertexSet s;
    for (const auto& lab : labels) {
        int v = g.index_of(lab);
        if (v < 0) throw std::invalid_argument("unknown label: '" + lab + "'");
        s.insert(v);
    }
    return s;
}

VertexSet all_vertices(const Graph& g) {
    VertexSet s;
    for (int v = 0; v < g.n(); ++v) s.insert(v);
    return s;
}

}  // namespace centralparts
