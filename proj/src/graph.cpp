#include "tsicd/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace tsicd {

char mark_char(Mark m, bool right) {
    switch (m) {
        case Mark::Circle: return 'o';
        case Mark::Head: return right ? '>' : '<';
        case Mark::Tail: return '-';
        default: return '?';
    }
}

void MixedGraph::add_edge(int a, int b, Mark at_a, Mark at_b) {
    if (a == b) throw std::invalid_argument("self edge");
    if (at_a == Mark::None || at_b == Mark::None) throw std::invalid_argument("mark None on edge");
    at_[static_cast<std::size_t>(b) * n_ + a] = at_a;
    at_[static_cast<std::size_t>(a) * n_ + b] = at_b;
}

void MixedGraph::remove_edge(int a, int b) {
    at_[static_cast<std::size_t>(b) * n_ + a] = Mark::None;
    at_[static_cast<std::size_t>(a) * n_ + b] = Mark::None;
}

void MixedGraph::set_mark(int other, int at, Mark m) {
    if (!adjacent(other, at)) throw std::invalid_argument("set_mark on missing edge");
    if (m == Mark::None) throw std::invalid_argument("set_mark(None); use remove_edge");
    at_[static_cast<std::size_t>(other) * n_ + at] = m;
}

std::vector<int> MixedGraph::neighbors(int v) const {
    std::vector<int> out;
    for (int u = 0; u < n_; ++u)
        if (u != v && adjacent(v, u)) out.push_back(u);
    return out;
}

int MixedGraph::degree(int v) const {
    int d = 0;
    for (int u = 0; u < n_; ++u)
        if (u != v && adjacent(v, u)) ++d;
    return d;
}

int MixedGraph::edge_count() const {
    int c = 0;
    for (int a = 0; a < n_; ++a)
        for (int b = a + 1; b < n_; ++b)
            if (adjacent(a, b)) ++c;
    return c;
}

std::vector<std::pair<int, int>> MixedGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < n_; ++a)
        for (int b = a + 1; b < n_; ++b)
            if (adjacent(a, b)) out.emplace_back(a, b);
    return out;
}

void Dag::add_edge(int parent, int child) {
    if (parent == child) throw std::invalid_argument("self edge in DAG");
    if (has_edge(parent, child)) return;
    parents_[child].push_back(parent);
    children_[parent].push_back(child);
}

bool Dag::has_edge(int parent, int child) const {
    const auto& ps = parents_[child];
    return std::find(ps.begin(), ps.end(), parent) != ps.end();
}

std::vector<int> Dag::observed() const {
    std::vector<int> out;
    for (int v = 0; v < size(); ++v)
        if (!is_latent(v)) out.push_back(v);
    return out;
}

bool Dag::is_acyclic() const {
    const int n = size();
    std::vector<int> indeg(n, 0);
    for (int v = 0; v < n; ++v) indeg[v] = static_cast<int>(parents_[v].size());
    std::vector<int> stack;
    for (int v = 0; v < n; ++v)
        if (indeg[v] == 0) stack.push_back(v);
    int seen = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++seen;
        for (int c : children_[v])
            if (--indeg[c] == 0) stack.push_back(c);
    }
    return seen == n;
}

std::vector<char> Dag::ancestors_of(std::span<const int> seeds) const {
    std::vector<char> in(size(), 0);
    std::vector<int> stack;
    for (int s : seeds) {
        if (s < 0 || s >= size()) throw std::out_of_range("node out of range");
        if (!in[s]) {
            in[s] = 1;
            stack.push_back(s);
        }
    }
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int p : parents_[v]) {
            if (!in[p]) {
                in[p] = 1;
                stack.push_back(p);
            }
        }
    }
    return in;
}

}  // namespace tsicd
