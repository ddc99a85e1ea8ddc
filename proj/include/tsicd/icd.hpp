#pragma once

#include <map>
#include <vector>

#include "tsicd/graph.hpp"

namespace tsicd {

/// True iff z equals a or a potentially directed path z -> ... -> a exists
/// (the mark at the from-side of every step is Tail or Circle).
bool possible_ancestor(const MixedGraph& g, int z, int a);

/// Shortest PDS-path length from a to each reachable node, avoiding b,
/// restricted to simple paths of length <= max_len. On a PDS-path every
/// interior node is a collider or forms a triangle with its neighbors.
std::map<int, int> pds_reachable(const MixedGraph& g, int a, int b, int max_len);

/// One conditioning set complying with the ICD-Sep conditions at size r.
struct IcdSepCandidate {
    std::vector<int> z;  // sorted
    int r = 0;
    char side = 'A';  // endpoint that anchored the PDS-paths
};

/// All ICD-Sep-compliant conditioning sets of size r for the pair (a,b),
/// anchored at either endpoint, deduplicated, in lexicographic order.
/// r = 0 yields the single empty set.
std::vector<IcdSepCandidate> pd_sep_range(const MixedGraph& g, int a, int b, int r);

}  // namespace tsicd
