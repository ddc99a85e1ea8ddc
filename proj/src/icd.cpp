#include "tsicd/icd.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace tsicd {

bool possible_ancestor(const MixedGraph& g, int z, int a) {
    if (z == a) return true;
    const int n = g.size();
    std::vector<char> seen(n, 0);
    std::vector<int> stack{z};
    seen[z] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u = 0; u < n; ++u) {
            if (u == v || !g.adjacent(v, u)) continue;
            Mark at_v = g.mark_at(u, v);
            if (at_v == Mark::Head) continue;  // arrow into v blocks the step v -> u
            if (u == a) return true;
            if (!seen[u]) {
                seen[u] = 1;
                stack.push_back(u);
            }
        }
    }
    return false;
}

namespace {

// Depth-first enumeration of simple PDS-paths from `a` avoiding `avoid`,
// optionally restricted to a node subset. Records the shortest arrival
// length per node. Kept on simple paths so it matches exhaustive path
// enumeration exactly.
struct PdsSearch {
    const MixedGraph& g;
    int avoid;
    int max_len;
    const std::vector<char>* allowed = nullptr;  // nodes usable beyond the anchor
    std::vector<char> on_path;
    std::vector<int> best;

    PdsSearch(const MixedGraph& graph, int avoid_node, int limit)
        : g(graph), avoid(avoid_node), max_len(limit), on_path(graph.size(), 0),
          best(graph.size(), -1) {}

    void run(int a) {
        on_path[a] = 1;
        for (int u = 0; u < g.size(); ++u) {
            if (u == a || u == avoid || !g.adjacent(a, u)) continue;
            if (allowed && !(*allowed)[u]) continue;
            visit(a, u, 1);
        }
        on_path[a] = 0;
    }

    void visit(int prev, int cur, int len) {
        if (best[cur] < 0 || len < best[cur]) best[cur] = len;
        if (len == max_len) return;
        on_path[cur] = 1;
        for (int w = 0; w < g.size(); ++w) {
            if (w == cur || w == avoid || on_path[w] || !g.adjacent(cur, w)) continue;
            if (allowed && !(*allowed)[w]) continue;
            bool collider = g.mark_at(prev, cur) == Mark::Head && g.mark_at(w, cur) == Mark::Head;
            bool triangle = g.adjacent(prev, w);
            if (!collider && !triangle) continue;
            visit(cur, w, len + 1);
        }
        on_path[cur] = 0;
    }
};

}  // namespace

std::map<int, int> pds_reachable(const MixedGraph& g, int a, int b, int max_len) {
    if (a == b) throw std::invalid_argument("a == b");
    std::map<int, int> out;
    if (max_len <= 0) return out;
    PdsSearch search(g, b, max_len);
    search.run(a);
    for (int v = 0; v < g.size(); ++v)
        if (search.best[v] >= 0) out[v] = search.best[v];
    return out;
}

namespace {

// Condition 2 for a fixed set Z: every member must be the end of a
// PDS-path from the anchor, avoiding the other endpoint, of length <= r,
// whose non-anchor nodes all lie inside Z.
bool covers_all_members(const MixedGraph& g, int anchor, int avoid, int r,
                        const std::vector<int>& z) {
    std::vector<char> allowed(g.size(), 0);
    for (int v : z) allowed[v] = 1;
    PdsSearch search(g, avoid, r);
    search.allowed = &allowed;
    search.run(anchor);
    for (int v : z)
        if (search.best[v] < 0) return false;
    return true;
}

void anchored_candidates(const MixedGraph& g, int anchor, int other, int r, char side,
                         std::vector<IcdSepCandidate>& out) {
    auto reach = pds_reachable(g, anchor, other, r);
    std::vector<int> pool;
    for (const auto& [v, len] : reach)
        if (possible_ancestor(g, v, anchor) || possible_ancestor(g, v, other)) pool.push_back(v);
    const int p = static_cast<int>(pool.size());
    if (p < r) return;
    std::vector<int> idx(r);
    for (int i = 0; i < r; ++i) idx[i] = i;
    while (true) {
        std::vector<int> z(r);
        for (int i = 0; i < r; ++i) z[i] = pool[idx[i]];
        if (covers_all_members(g, anchor, other, r, z))
            out.push_back(IcdSepCandidate{z, r, side});
        int i = r - 1;
        while (i >= 0 && idx[i] == p - r + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

std::vector<IcdSepCandidate> pd_sep_range(const MixedGraph& g, int a, int b, int r) {
    if (r < 0) throw std::invalid_argument("negative conditioning size");
    if (r == 0) return {IcdSepCandidate{{}, 0, 'A'}};
    std::vector<IcdSepCandidate> raw;
    anchored_candidates(g, a, b, r, 'A', raw);
    anchored_candidates(g, b, a, r, 'B', raw);
    std::sort(raw.begin(), raw.end(),
              [](const IcdSepCandidate& lhs, const IcdSepCandidate& rhs) {
                  if (lhs.z != rhs.z) return lhs.z < rhs.z;
                  return lhs.side < rhs.side;
              });
    std::vector<IcdSepCandidate> out;
    for (auto& c : raw)
        if (out.empty() || out.back().z != c.z) out.push_back(std::move(c));
    return out;
}

}  // namespace tsicd
