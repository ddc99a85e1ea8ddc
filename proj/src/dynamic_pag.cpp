#include "tsicd/dynamic_pag.hpp"

#include <algorithm>
#include <stdexcept>

namespace tsicd {

DynamicPag::DynamicPag(int n, int w) : n_(n), w_(w), g_(n * (w + 1)) {
    if (n < 1 || w < 0) throw std::invalid_argument("invalid window dimensions");
}

DynamicPag DynamicPag::fully_connected(int n, int w) {
    if (n < 2 || w < 1) throw std::invalid_argument("need n >= 2 and w >= 1");
    DynamicPag p(n, w);
    const int m = p.node_count();
    for (int a = 0; a < m; ++a) {
        for (int b = a + 1; b < m; ++b) {
            TimedNode ta = p.node(a), tb = p.node(b);
            if (ta.lag == tb.lag) {
                p.g_.add_edge(a, b, Mark::Circle, Mark::Circle);
            } else {
                // id order puts the smaller lag first: a is the later node.
                p.g_.add_edge(a, b, Mark::Head, Mark::Circle);
            }
        }
    }
    return p;
}

std::vector<std::pair<int, int>> DynamicPag::homology_class(int a, int b) const {
    TimedNode ta = node(a), tb = node(b);
    int lo = std::min(ta.lag, tb.lag), hi = std::max(ta.lag, tb.lag);
    std::vector<std::pair<int, int>> out;
    for (int k = -lo; k <= w_ - hi; ++k)
        out.emplace_back(id({ta.var, ta.lag + k}), id({tb.var, tb.lag + k}));
    return out;
}

std::pair<int, int> DynamicPag::canonical_pair(int a, int b) const {
    TimedNode ta = node(a), tb = node(b);
    int k = -std::min(ta.lag, tb.lag);
    int ca = id({ta.var, ta.lag + k}), cb = id({tb.var, tb.lag + k});
    if (node(ca).lag < node(cb).lag || (node(ca).lag == node(cb).lag && ca > cb))
        std::swap(ca, cb);  // larger lag first; contemporaneous: smaller var first
    return {ca, cb};
}

void DynamicPag::add_edge_homologous(int a, int b, Mark at_a, Mark at_b) {
    TimedNode ta = node(a), tb = node(b);
    if (ta.var == tb.var && ta.lag == tb.lag) throw std::invalid_argument("self pair");
    for (auto [u, v] : homology_class(a, b)) g_.add_edge(u, v, at_a, at_b);
}

void DynamicPag::remove_edge_homologous(int a, int b, bool strict) {
    if (!g_.adjacent(a, b)) {
        if (strict) throw std::invalid_argument("pair is not an edge");
        return;
    }
    for (auto [u, v] : homology_class(a, b)) g_.remove_edge(u, v);
}

bool DynamicPag::set_mark_homologous(int other, int at, Mark m) {
    if (!g_.adjacent(other, at)) throw std::invalid_argument("pair is not an edge");
    if (temporal_head_fixed(other, at) && m != Mark::Head) return false;
    for (auto [u, v] : homology_class(other, at)) g_.set_mark(u, v, m);
    return true;
}

void DynamicPag::reset_orientations() {
    const int m = node_count();
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            if (a != b && g_.adjacent(a, b) && !temporal_head_fixed(a, b))
                g_.set_mark(a, b, Mark::Circle);
}

PagEdge DynamicPag::canonical_edge(int a, int b) const {
    auto [ca, cb] = canonical_pair(a, b);
    return PagEdge{node(ca), node(cb), g_.mark_at(cb, ca), g_.mark_at(ca, cb)};
}

std::vector<PagEdge> DynamicPag::minimal_edge_set() const {
    std::vector<PagEdge> out;
    const int m = node_count();
    for (int a = 0; a < m; ++a) {
        for (int b = a + 1; b < m; ++b) {
            if (!g_.adjacent(a, b)) continue;
            if (node(a).lag != 0 && node(b).lag != 0) continue;
            out.push_back(canonical_edge(a, b));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool DynamicPag::homology_consistent() const {
    const int m = node_count();
    for (int a = 0; a < m; ++a) {
        for (int b = a + 1; b < m; ++b) {
            TimedNode ta = node(a), tb = node(b);
            if (ta.var == tb.var && ta.lag == tb.lag) continue;
            bool adj = g_.adjacent(a, b);
            for (auto [u, v] : homology_class(a, b)) {
                if (g_.adjacent(u, v) != adj) return false;
                if (adj && (g_.mark_at(u, v) != g_.mark_at(a, b) ||
                            g_.mark_at(v, u) != g_.mark_at(b, a)))
                    return false;
            }
            if (adj && ta.lag != tb.lag) {
                int later = ta.lag < tb.lag ? a : b;
                int earlier = later == a ? b : a;
                if (g_.mark_at(earlier, later) != Mark::Head) return false;
            }
        }
    }
    return true;
}

void DynamicPag::record_sepset(int a, int b, std::vector<int> z) {
    TimedNode ta = node(a), tb = node(b);
    int k = -std::min(ta.lag, tb.lag);
    for (int& v : z) {
        TimedNode t = node(v);
        t.lag += k;
        if (t.lag < 0 || t.lag > w_)
            throw std::invalid_argument("sepset member shifts outside the window");
        v = id(t);
    }
    std::sort(z.begin(), z.end());
    sepsets_[canonical_pair(a, b)] = std::move(z);
}

bool DynamicPag::has_sepset(int a, int b) const {
    return sepsets_.count(canonical_pair(a, b)) > 0;
}

bool DynamicPag::sepset_contains(int a, int b, int y) const {
    auto it = sepsets_.find(canonical_pair(a, b));
    if (it == sepsets_.end()) return false;
    TimedNode ta = node(a), tb = node(b);
    int k = -std::min(ta.lag, tb.lag);
    TimedNode ty = node(y);
    ty.lag += k;
    if (ty.lag < 0 || ty.lag > w_) return false;
    return std::binary_search(it->second.begin(), it->second.end(), id(ty));
}

}  // namespace tsicd
