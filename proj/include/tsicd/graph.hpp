#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace tsicd {

/// Endpoint mark of a mixed-graph edge. None encodes "no edge" in storage.
enum class Mark : std::uint8_t { None = 0, Circle, Head, Tail };

char mark_char(Mark m, bool right);

/// A variable measured at a time offset into the past (lag 0 = present).
struct TimedNode {
    int var = 0;
    int lag = 0;

    auto operator<=>(const TimedNode&) const = default;
};

/// Mixed graph over n nodes with per-endpoint marks.
///
/// The mark stored at position (a,b) is the mark at node b on the edge
/// {a,b}. An edge exists iff both endpoint marks are non-None. Serves as
/// the representation for MAGs (Head/Tail only) and PAGs (plus Circle).
class MixedGraph {
public:
    MixedGraph() = default;
    explicit MixedGraph(int n) : n_(n), at_(static_cast<std::size_t>(n) * n, Mark::None) {}

    int size() const { return n_; }

    bool adjacent(int a, int b) const { return at(a, b) != Mark::None; }

    /// Mark at node `at` on the edge {other, at}; None if not adjacent.
    Mark mark_at(int other, int at) const { return this->at(other, at); }

    void add_edge(int a, int b, Mark at_a, Mark at_b);
    void remove_edge(int a, int b);

    /// Overwrite the mark at node `at` on the existing edge {other, at}.
    void set_mark(int other, int at, Mark m);

    std::vector<int> neighbors(int v) const;
    int degree(int v) const;
    int edge_count() const;
    std::vector<std::pair<int, int>> edges() const;  // a < b

    bool operator==(const MixedGraph&) const = default;

private:
    Mark at(int a, int b) const { return at_[static_cast<std::size_t>(a) * n_ + b]; }

    int n_ = 0;
    std::vector<Mark> at_;
};

/// Directed acyclic graph with per-node latent flags.
class Dag {
public:
    Dag() = default;
    explicit Dag(int n) : parents_(n), children_(n), latent_(n, 0) {}

    int size() const { return static_cast<int>(latent_.size()); }

    void add_edge(int parent, int child);
    bool has_edge(int parent, int child) const;

    const std::vector<int>& parents(int v) const { return parents_[v]; }
    const std::vector<int>& children(int v) const { return children_[v]; }

    void set_latent(int v, bool latent) { latent_[v] = latent ? 1 : 0; }
    bool is_latent(int v) const { return latent_[v] != 0; }
    std::vector<int> observed() const;

    bool is_acyclic() const;

    /// Characteristic vector of the ancestor set of `seeds` (nodes included).
    std::vector<char> ancestors_of(std::span<const int> seeds) const;

private:
    std::vector<std::vector<int>> parents_;
    std::vector<std::vector<int>> children_;
    std::vector<char> latent_;
};

}  // namespace tsicd
