#pragma once

#include <map>
#include <string>
#include <vector>

#include "tsicd/dynamic_pag.hpp"
#include "tsicd/graph.hpp"

namespace tsicd {

/// Mutable view of a PAG being oriented. Implementations decide how marks
/// are written (plain, or replicated across homology) and which endpoints
/// are frozen.
class OrientTarget {
public:
    virtual ~OrientTarget() = default;
    virtual const MixedGraph& graph() const = 0;
    virtual bool fixed(int other, int at) const = 0;
    virtual void apply_mark(int other, int at, Mark m) = 0;
    virtual void reset_orientations() = 0;
    /// Whether y lies in the recorded separating set of the non-adjacent
    /// pair {x, z}.
    virtual bool sepset_contains(int x, int z, int y) const = 0;
};

class GenericPagTarget : public OrientTarget {
public:
    GenericPagTarget(MixedGraph& g, const std::map<std::pair<int, int>, std::vector<int>>& sepsets)
        : g_(g), sepsets_(sepsets) {}
    const MixedGraph& graph() const override { return g_; }
    bool fixed(int, int) const override { return false; }
    void apply_mark(int other, int at, Mark m) override { g_.set_mark(other, at, m); }
    void reset_orientations() override;
    bool sepset_contains(int x, int z, int y) const override;

private:
    MixedGraph& g_;
    const std::map<std::pair<int, int>, std::vector<int>>& sepsets_;
};

class DynamicPagTarget : public OrientTarget {
public:
    explicit DynamicPagTarget(DynamicPag& p) : p_(p) {}
    const MixedGraph& graph() const override { return p_.graph(); }
    bool fixed(int other, int at) const override { return p_.temporal_head_fixed(other, at); }
    void apply_mark(int other, int at, Mark m) override { p_.set_mark_homologous(other, at, m); }
    void reset_orientations() override { p_.reset_orientations(); }
    bool sepset_contains(int x, int z, int y) const override {
        return p_.sepset_contains(x, z, y);
    }

private:
    DynamicPag& p_;
};

struct OrientStats {
    int conflicts = 0;
    std::vector<std::string> conflict_log;
};

/// Re-derive all orientations from the skeleton and separating sets:
/// reset non-fixed marks to Circle, orient unshielded colliders, then run
/// the deterministic rule set (R1-R4 and the tail rules R8-R10; the
/// selection-bias rules are not applicable to this model family) to a
/// fixpoint. Conflicting demands keep the first-written mark and are
/// counted.
OrientStats orient(OrientTarget& target);

/// Convenience wrapper for dynamic PAGs.
OrientStats orient(DynamicPag& pag);

}  // namespace tsicd
