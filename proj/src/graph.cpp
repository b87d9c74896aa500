#include "lapspec/graph.hpp"

namespace lapspec {

WeightedGraph random_tree(int n, Rng& rng) {
    WeightedGraph g;
    g.n = n;
    for (int k = 2; k <= n; ++k) {
        int parent = static_cast<int>(rng.integer_in(1, k - 1));
        g.edges.push_back({parent, k, 1.0});
    }
    std::sort(g.edges.begin(), g.edges.end(),
              [](const auto& a, const auto& b) { return std::tie(a.i, a.j) < std::tie(b.i, b.j); });
    return g;
}

WeightedGraph random_connected(int n, int extra, Rng& rng) {
    WeightedGraph g = random_tree(n, rng);
    auto has = [&](int a, int b) {
        if (a > b) std::swap(a, b);
        for (const auto& e : g.edges)
            if (e.i == a && e.j == b) return true;
        return false;
    };
    const long max_extra = static_cast<long>(n) * (n - 1) / 2 - (n - 1);
    extra = static_cast<int>(std::min<long>(extra, max_extra));
    int placed = 0, guard = 0;
    while (placed < extra && guard < 100 * extra + 100) {
        ++guard;
        int a = static_cast<int>(rng.integer_in(1, n));
        int b = static_cast<int>(rng.integer_in(1, n));
        if (a == b || has(a, b)) continue;
        g.edges.push_back({std::min(a, b), std::max(a, b), 1.0});
        ++placed;
    }
    std::sort(g.edges.begin(), g.edges.end(),
              [](const auto& a, const auto& b) { return std::tie(a.i, a.j) < std::tie(b.i, b.j); });
    return g;
}

WeightedGraph gnp(int n, double p, Rng& rng) {
    WeightedGraph g;
    g.n = n;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (rng.unit() < p) g.edges.push_back({i, j, 1.0});
    return g;
}

void randomize_weights(WeightedGraph& g, Rng& rng, double lo, double hi) {
    for (auto& e : g.edges) e.w = rng.halfopen(lo, hi);
}

}  // namespace lapspec
