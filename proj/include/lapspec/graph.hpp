#pragma once

#include <algorithm>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "lapspec/errors.hpp"
#include "lapspec/rng.hpp"

namespace lapspec {

// Node ids are 1-based everywhere in the public API; matrix row/col = id - 1.

template <typename Scalar>
struct EdgeT {
    int i = 0;  // i < j
    int j = 0;
    Scalar w{};
};

template <typename Scalar>
struct WeightedGraphT {
    int n = 0;
    std::vector<EdgeT<Scalar>> edges;
};

template <typename Scalar>
struct ArcT {
    int from = 0;
    int to = 0;
    Scalar w{};
};

template <typename Scalar>
struct DigraphT {
    int n = 0;
    std::vector<ArcT<Scalar>> arcs;
};

using Edge = EdgeT<double>;
using Arc = ArcT<double>;
using WeightedGraph = WeightedGraphT<double>;
using Digraph = DigraphT<double>;

// An ordered node sequence forming a path in a host tree.
using TreePath = std::vector<int>;

template <typename Scalar>
struct BranchStepT {
    EdgeT<Scalar> edge;
    int attach = 0;  // the endpoint already covered when this edge is attached
};

template <typename Scalar>
using BranchScheduleT = std::vector<BranchStepT<Scalar>>;

template <typename Scalar>
struct DivergingTreeT {
    int root = 0;
    DigraphT<Scalar> tree;
};

namespace detail {

inline void check_index(int v, int n, const std::string& what) {
    if (v < 1 || v > n)
        throw InvalidGraphError(what + ": node index " + std::to_string(v) +
                                " out of range 1.." + std::to_string(n));
}

}  // namespace detail

template <typename Scalar>
void validate(const WeightedGraphT<Scalar>& g) {
    if (g.n < 1) throw InvalidGraphError("graph needs at least one node");
    std::vector<std::pair<int, int>> seen;
    for (const auto& e : g.edges) {
        detail::check_index(e.i, g.n, "edge");
        detail::check_index(e.j, g.n, "edge");
        if (e.i == e.j) throw InvalidGraphError("self-loop at node " + std::to_string(e.i));
        if (e.i > e.j) throw InvalidGraphError("edge endpoints must satisfy i < j");
        if (!(e.w > Scalar(0)))
            throw InvalidGraphError("nonpositive weight on edge (" + std::to_string(e.i) +
                                    "," + std::to_string(e.j) + ")");
        seen.emplace_back(e.i, e.j);
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        throw InvalidGraphError("duplicate edge");
}

template <typename Scalar>
void validate(const DigraphT<Scalar>& dg) {
    if (dg.n < 1) throw InvalidGraphError("digraph needs at least one node");
    std::vector<std::pair<int, int>> seen;
    for (const auto& a : dg.arcs) {
        detail::check_index(a.from, dg.n, "arc");
        detail::check_index(a.to, dg.n, "arc");
        if (a.from == a.to) throw InvalidGraphError("self-loop at node " + std::to_string(a.from));
        if (!(a.w > Scalar(0)))
            throw InvalidGraphError("nonpositive weight on arc " + std::to_string(a.from) +
                                    "->" + std::to_string(a.to));
        seen.emplace_back(a.from, a.to);
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        throw InvalidGraphError("duplicate arc");
}

// Neighbor lists sorted by node index, so every search below is deterministic.
template <typename Scalar>
std::vector<std::vector<int>> adjacency(const WeightedGraphT<Scalar>& g) {
    std::vector<std::vector<int>> adj(g.n + 1);
    for (const auto& e : g.edges) {
        adj[e.i].push_back(e.j);
        adj[e.j].push_back(e.i);
    }
    for (auto& nb : adj) std::sort(nb.begin(), nb.end());
    return adj;
}

template <typename Scalar>
std::optional<Scalar> edge_weight(const WeightedGraphT<Scalar>& g, int a, int b) {
    if (a > b) std::swap(a, b);
    for (const auto& e : g.edges)
        if (e.i == a && e.j == b) return e.w;
    return std::nullopt;
}

// Connected-component labels, 1-based and assigned in order of the smallest node
// they contain (node 1 is always in component 1).
template <typename Scalar>
std::vector<int> component_labels(const WeightedGraphT<Scalar>& g) {
    const auto adj = adjacency(g);
    std::vector<int> label(g.n + 1, 0);
    int next = 0;
    for (int s = 1; s <= g.n; ++s) {
        if (label[s] != 0) continue;
        ++next;
        std::queue<int> q;
        q.push(s);
        label[s] = next;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : adj[u])
                if (label[v] == 0) {
                    label[v] = next;
                    q.push(v);
                }
        }
    }
    return label;
}

template <typename Scalar>
int component_count(const WeightedGraphT<Scalar>& g) {
    const auto labels = component_labels(g);
    return *std::max_element(labels.begin() + 1, labels.end());
}

template <typename Scalar>
bool is_connected(const WeightedGraphT<Scalar>& g) {
    return component_count(g) == 1;
}

template <typename Scalar>
bool is_tree(const WeightedGraphT<Scalar>& g) {
    return static_cast<int>(g.edges.size()) == g.n - 1 && is_connected(g);
}

// Breadth-first spanning tree from node 1, neighbors visited in index order.
template <typename Scalar>
WeightedGraphT<Scalar> spanning_tree(const WeightedGraphT<Scalar>& g) {
    if (!is_connected(g)) throw NotConnectedError("spanning_tree: graph is disconnected");
    const auto adj = adjacency(g);
    std::vector<bool> seen(g.n + 1, false);
    WeightedGraphT<Scalar> tree;
    tree.n = g.n;
    std::queue<int> q;
    q.push(1);
    seen[1] = true;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : adj[u]) {
            if (seen[v]) continue;
            seen[v] = true;
            EdgeT<Scalar> e{std::min(u, v), std::max(u, v), *edge_weight(g, u, v)};
            tree.edges.push_back(e);
            q.push(v);
        }
    }
    std::sort(tree.edges.begin(), tree.edges.end(),
              [](const auto& a, const auto& b) { return std::tie(a.i, a.j) < std::tie(b.i, b.j); });
    return tree;
}

namespace detail {

// BFS distances and parents from src; neighbors in index order.
template <typename Scalar>
void bfs(const WeightedGraphT<Scalar>& g, const std::vector<std::vector<int>>& adj, int src,
         std::vector<int>& dist, std::vector<int>& parent) {
    dist.assign(g.n + 1, -1);
    parent.assign(g.n + 1, 0);
    std::queue<int> q;
    q.push(src);
    dist[src] = 0;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : adj[u])
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                parent[v] = u;
                q.push(v);
            }
    }
}

inline int farthest_smallest(const std::vector<int>& dist) {
    int best = 1, bestd = -1;
    for (int v = 1; v < static_cast<int>(dist.size()); ++v)
        if (dist[v] > bestd) {
            bestd = dist[v];
            best = v;
        }
    return best;
}

}  // namespace detail

// Diameter path of a tree by double breadth-first sweep; ties broken toward the
// lexicographically smallest endpoint pair, and the path runs from the smaller endpoint.
template <typename Scalar>
TreePath longest_path(const WeightedGraphT<Scalar>& t) {
    if (!is_tree(t)) throw NotATreeError("longest_path: input is not a tree");
    const auto adj = adjacency(t);
    std::vector<int> dist, parent;
    detail::bfs(t, adj, 1, dist, parent);
    const int u = detail::farthest_smallest(dist);
    detail::bfs(t, adj, u, dist, parent);
    const int v = detail::farthest_smallest(dist);
    TreePath path;
    for (int x = v; x != 0; x = (x == u ? 0 : parent[x])) path.push_back(x);
    std::reverse(path.begin(), path.end());  // now runs u -> v
    if (path.front() > path.back()) std::reverse(path.begin(), path.end());
    return path;
}

// Attachment order for the tree edges outside the path: breadth-first outward from the
// path, seeded along the path starting at its first node (the designated root).
template <typename Scalar>
BranchScheduleT<Scalar> branch_schedule(const WeightedGraphT<Scalar>& t, const TreePath& p) {
    if (!is_tree(t)) throw NotATreeError("branch_schedule: input is not a tree");
    std::vector<bool> on_path(t.n + 1, false);
    for (size_t k = 0; k < p.size(); ++k) {
        detail::check_index(p[k], t.n, "path");
        if (on_path[p[k]]) throw PathNotInTreeError("branch_schedule: repeated path node");
        on_path[p[k]] = true;
        if (k > 0 && !edge_weight(t, p[k - 1], p[k]))
            throw PathNotInTreeError("branch_schedule: consecutive path nodes not adjacent in tree");
    }
    const auto adj = adjacency(t);
    BranchScheduleT<Scalar> schedule;
    std::vector<bool> covered(t.n + 1, false);
    std::queue<int> q;
    for (int node : p) {  // path order, root first
        covered[node] = true;
        q.push(node);
    }
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : adj[u]) {
            if (covered[v]) continue;
            covered[v] = true;
            BranchStepT<Scalar> step;
            step.edge = EdgeT<Scalar>{std::min(u, v), std::max(u, v), *edge_weight(t, u, v)};
            step.attach = u;
            schedule.push_back(step);
            q.push(v);
        }
    }
    return schedule;
}

template <typename Scalar>
std::vector<std::vector<int>> out_adjacency(const DigraphT<Scalar>& dg) {
    std::vector<std::vector<int>> adj(dg.n + 1);
    for (const auto& a : dg.arcs) adj[a.from].push_back(a.to);
    for (auto& nb : adj) std::sort(nb.begin(), nb.end());
    return adj;
}

template <typename Scalar>
std::optional<Scalar> arc_weight(const DigraphT<Scalar>& dg, int from, int to) {
    for (const auto& a : dg.arcs)
        if (a.from == from && a.to == to) return a.w;
    return std::nullopt;
}

// Smallest-index node reaching all others, with its breadth-first out-tree; absent if
// no such root exists.
template <typename Scalar>
std::optional<DivergingTreeT<Scalar>> diverging_spanning_tree(const DigraphT<Scalar>& dg) {
    const auto adj = out_adjacency(dg);
    for (int r = 1; r <= dg.n; ++r) {
        std::vector<int> parent(dg.n + 1, 0);
        std::vector<bool> seen(dg.n + 1, false);
        std::queue<int> q;
        q.push(r);
        seen[r] = true;
        int reached = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : adj[u])
                if (!seen[v]) {
                    seen[v] = true;
                    parent[v] = u;
                    ++reached;
                    q.push(v);
                }
        }
        if (reached == dg.n) {
            DivergingTreeT<Scalar> result;
            result.root = r;
            result.tree.n = dg.n;
            for (int v = 1; v <= dg.n; ++v)
                if (v != r) result.tree.arcs.push_back({parent[v], v, *arc_weight(dg, parent[v], v)});
            std::sort(result.tree.arcs.begin(), result.tree.arcs.end(), [](const auto& a, const auto& b) {
                return std::tie(a.from, a.to) < std::tie(b.from, b.to);
            });
            return result;
        }
    }
    return std::nullopt;
}

template <typename Scalar>
bool is_weakly_connected(const DigraphT<Scalar>& dg) {
    WeightedGraphT<Scalar> shadow;
    shadow.n = dg.n;
    std::vector<std::pair<int, int>> seen;
    for (const auto& a : dg.arcs) {
        int i = std::min(a.from, a.to), j = std::max(a.from, a.to);
        if (std::find(seen.begin(), seen.end(), std::make_pair(i, j)) == seen.end()) {
            seen.emplace_back(i, j);
            shadow.edges.push_back({i, j, a.w});
        }
    }
    return is_connected(shadow);
}

// Relabel nodes: perm[old-1] is the new id of node old. Spectra are invariant.
template <typename Scalar>
WeightedGraphT<Scalar> reorder_nodes(const WeightedGraphT<Scalar>& g, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != g.n)
        throw InvalidPermutationError("reorder_nodes: permutation size mismatch");
    std::vector<bool> hit(g.n + 1, false);
    for (int v : perm) {
        if (v < 1 || v > g.n || hit[v]) throw InvalidPermutationError("reorder_nodes: not a bijection");
        hit[v] = true;
    }
    WeightedGraphT<Scalar> out;
    out.n = g.n;
    for (const auto& e : g.edges) {
        int a = perm[e.i - 1], b = perm[e.j - 1];
        out.edges.push_back({std::min(a, b), std::max(a, b), e.w});
    }
    std::sort(out.edges.begin(), out.edges.end(),
              [](const auto& a, const auto& b) { return std::tie(a.i, a.j) < std::tie(b.i, b.j); });
    return out;
}

template <typename Scalar>
DigraphT<Scalar> reorder_nodes(const DigraphT<Scalar>& dg, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != dg.n)
        throw InvalidPermutationError("reorder_nodes: permutation size mismatch");
    std::vector<bool> hit(dg.n + 1, false);
    for (int v : perm) {
        if (v < 1 || v > dg.n || hit[v]) throw InvalidPermutationError("reorder_nodes: not a bijection");
        hit[v] = true;
    }
    DigraphT<Scalar> out;
    out.n = dg.n;
    for (const auto& a : dg.arcs) out.arcs.push_back({perm[a.from - 1], perm[a.to - 1], a.w});
    std::sort(out.arcs.begin(), out.arcs.end(),
              [](const auto& a, const auto& b) { return std::tie(a.from, a.to) < std::tie(b.from, b.to); });
    return out;
}

// Generators. Unit weights unless stated; callers reweight as needed.

template <typename Scalar = double>
WeightedGraphT<Scalar> make_path(int n) {
    WeightedGraphT<Scalar> g;
    g.n = n;
    for (int i = 1; i < n; ++i) g.edges.push_back({i, i + 1, Scalar(1)});
    return g;
}

template <typename Scalar = double>
WeightedGraphT<Scalar> make_cycle(int n) {
    auto g = make_path<Scalar>(n);
    if (n >= 3) g.edges.push_back({1, n, Scalar(1)});
    return g;
}

// Star with center 1 and leaves 2..n.
template <typename Scalar = double>
WeightedGraphT<Scalar> make_star(int n) {
    WeightedGraphT<Scalar> g;
    g.n = n;
    for (int i = 2; i <= n; ++i) g.edges.push_back({1, i, Scalar(1)});
    return g;
}

template <typename Scalar = double>
WeightedGraphT<Scalar> make_complete(int n) {
    WeightedGraphT<Scalar> g;
    g.n = n;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) g.edges.push_back({i, j, Scalar(1)});
    return g;
}

// Random recursive tree: node k attaches to a uniform earlier node.
WeightedGraph random_tree(int n, Rng& rng);

// Random tree plus `extra` additional distinct non-tree edges (as many as fit).
WeightedGraph random_connected(int n, int extra, Rng& rng);

// G(n,p); may be disconnected.
WeightedGraph gnp(int n, double p, Rng& rng);

// Assign seeded uniform weights in [lo, hi) to every edge.
void randomize_weights(WeightedGraph& g, Rng& rng, double lo = 0.5, double hi = 1.5);

}  // namespace lapspec
