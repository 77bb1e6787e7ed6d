// ============================================================================
// ordercalc/point_tree.hpp — iterated Z-jump points as Z-trees
// ============================================================================
//
// A point of the n-th iterated Z-jump of delta(2) becomes a Z-tree of rank
// n+1: at n=1 the root's children sit at the positions holding 1; at deeper
// levels the root has a child at every position whose subtree encodes the
// inner point.  Missing children decode to all-zero inner points, so the maps
// are mutually inverse up to equivalence.
// ============================================================================

#pragma once

#include "relations.hpp"
#include "trees.hpp"

namespace ordercalc {

namespace detail {

inline ZTree point_to_ztree_level(const PV& x, int n);

struct ZCellPool {
    std::vector<ZTree> subs;
    std::vector<std::string> serials;
    int cell_of(const ZTree& t, bool present) {
        if (!present) return 0;
        std::string s = tree_serial(t);
        for (std::size_t i = 0; i < serials.size(); ++i)
            if (serials[i] == s) return (int)i + 1;
        serials.push_back(s);
        subs.push_back(t);
        return (int)subs.size();
    }
};

inline ZTree point_to_ztree_level(const PV& x, int n) {
    const LassoZ<PV>& lx = x.lasso_z();
    ZCellPool pool;
    auto mapv = [&](const std::vector<PV>& v) {
        std::vector<int> out;
        for (const auto& c : v) {
            if (n == 1) {
                // children exactly where the bit is set
                out.push_back(c == pv_atom(1) ? pool.cell_of(ZTree::leaf(), true) : 0);
            } else {
                out.push_back(pool.cell_of(point_to_ztree_level(c, n - 1), true));
            }
        }
        return out;
    };
    std::vector<int> left = mapv(lx.left);
    std::vector<int> mid = mapv(lx.mid);
    std::vector<int> right = mapv(lx.right);
    return ZTree(LassoZ<int>(left, mid, right, lx.origin), std::move(pool.subs));
}

inline PV zero_jump_point(int n) {
    if (n == 0) return pv_atom(0);
    PV inner = zero_jump_point(n - 1);
    return pv_lasso_z(LassoZ<PV>({inner}, {}, {inner}, 0));
}

inline PV ztree_to_point_level(const ZTree& t, int n) {
    const LassoZ<int>& c = t.cells();
    auto mapv = [&](const std::vector<int>& v) {
        std::vector<PV> out;
        for (int cell : v) {
            if (n == 1) {
                out.push_back(pv_atom(cell == 0 ? 0 : 1));
            } else if (cell == 0) {
                out.push_back(zero_jump_point(n - 1));
            } else {
                out.push_back(ztree_to_point_level(t.subs()[(size_t)cell - 1], n - 1));
            }
        }
        return out;
    };
    return pv_lasso_z(LassoZ<PV>(mapv(c.left), mapv(c.mid), mapv(c.right), c.origin));
}

}  // namespace detail

// x must be a point of iter(delta(2), Z, n), n >= 1.
inline ZTree point_to_ztree(const PV& x, int n) {
    if (n < 1) throw DomainError("point_to_ztree: level must be >= 1");
    return detail::point_to_ztree_level(x, n);
}

// T must be well-founded of rank <= n+1.
inline PV ztree_to_point(const ZTree& t, int n) {
    if (n < 1) throw DomainError("ztree_to_point: level must be >= 1");
    if (tree_rank(t) > (unsigned)n + 1) throw DomainError("ztree_to_point: rank/level mismatch");
    if (t.is_leaf() && n >= 1) return detail::zero_jump_point(n);
    return detail::ztree_to_point_level(t, n);
}

}  // namespace ordercalc
