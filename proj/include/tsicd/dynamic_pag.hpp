#pragma once

#include <map>
#include <utility>
#include <vector>

#include "tsicd/graph.hpp"

namespace tsicd {

/// Canonical form of one homology class: endpoint with the larger lag
/// first, ties broken by the smaller variable index.
struct PagEdge {
    TimedNode a;
    TimedNode b;
    Mark at_a = Mark::None;
    Mark at_b = Mark::None;

    auto operator<=>(const PagEdge&) const = default;
};

/// Partial ancestral graph over a time window of (w+1) stamps, n variables
/// each. Stationarity is enforced structurally: every mutation is applied
/// to the whole homology class of the touched pair, and the endpoint at
/// the later time of a cross-lag edge carries a fixed Head mark.
class DynamicPag {
public:
    DynamicPag(int n, int w);

    /// Algorithm starting point: fully connected, o-o contemporaneous
    /// edges, o-> temporal edges (Head at the later node).
    static DynamicPag fully_connected(int n, int w);

    int vars() const { return n_; }
    int window() const { return w_; }
    int node_count() const { return n_ * (w_ + 1); }

    int id(TimedNode t) const { return t.lag * n_ + t.var; }
    TimedNode node(int id) const { return TimedNode{id % n_, id / n_}; }

    const MixedGraph& graph() const { return g_; }

    bool adjacent(int a, int b) const { return g_.adjacent(a, b); }
    Mark mark_at(int other, int at) const { return g_.mark_at(other, at); }

    /// The endpoint `at` of edge {other, at} is frozen to Head when `at`
    /// is strictly later (smaller lag) than `other`.
    bool temporal_head_fixed(int other, int at) const {
        return node(at).lag < node(other).lag;
    }

    /// All in-window shifts of the pair, the pair included.
    std::vector<std::pair<int, int>> homology_class(int a, int b) const;

    /// Representative with the smallest lags (one endpoint at lag 0).
    std::pair<int, int> canonical_pair(int a, int b) const;

    void add_edge_homologous(int a, int b, Mark at_a, Mark at_b);
    void remove_edge_homologous(int a, int b, bool strict = false);

    /// Apply a mark to the `at` endpoint role of every homologous edge.
    /// Returns false (and leaves the graph untouched) if the change would
    /// violate the fixed temporal orientation.
    bool set_mark_homologous(int other, int at, Mark m);

    /// Reset every non-fixed endpoint mark to Circle.
    void reset_orientations();

    /// One canonical representative per homology class: the edges
    /// incident to at least one lag-0 node, sorted.
    std::vector<PagEdge> minimal_edge_set() const;

    bool homology_consistent() const;

    void record_sepset(int a, int b, std::vector<int> z);
    bool has_sepset(int a, int b) const;
    /// Membership with the homology shift applied to the queried node.
    bool sepset_contains(int a, int b, int y) const;
    const std::map<std::pair<int, int>, std::vector<int>>& sepsets() const { return sepsets_; }

    bool operator==(const DynamicPag&) const = default;

private:
    PagEdge canonical_edge(int a, int b) const;

    int n_ = 0;
    int w_ = 0;
    MixedGraph g_;
    std::map<std::pair<int, int>, std::vector<int>> sepsets_;  // canonical pair keys
};

}  // namespace tsicd
