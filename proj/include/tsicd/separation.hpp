#pragma once

#include <vector>

#include "tsicd/graph.hpp"

namespace tsicd {

/// True iff every path between x and y is blocked by z (d-separation).
bool d_separated(const Dag& g, int x, int y, const std::vector<int>& z);

/// m-separation on a MAG (marks restricted to Head/Tail).
bool m_separated(const MixedGraph& mag, int x, int y, const std::vector<int>& z);

/// Ancestor-set characteristic vector in a MAG (directed Tail->Head edges;
/// seeds included).
std::vector<char> mag_ancestors_of(const MixedGraph& mag, std::span<const int> seeds);

/// Ancestrality audit: no directed cycle, no almost-directed cycle.
bool is_ancestral(const MixedGraph& mag);

/// Unique MAG over `observed` encoding exactly the DAG's conditional
/// independencies among those nodes. Output node i corresponds to
/// observed[i].
MixedGraph latent_project(const Dag& g, const std::vector<int>& observed);

/// D-SEP(a,b): nodes z != a reachable from a along a path whose interior
/// nodes are all colliders and whose every node is an ancestor of a or b.
/// b itself is excluded from the returned set.
std::vector<int> dsep_set(const MixedGraph& mag, int a, int b);

enum class SepsetMethod {
    Exhaustive,  // smallest-first scan over all subsets
    DSep,        // ancestral D-SEP construction, verified, with fallback
};

/// A separating set for a non-adjacent pair of a MAG.
std::vector<int> find_separating_set(const MixedGraph& mag, int x, int y, SepsetMethod method);

}  // namespace tsicd
