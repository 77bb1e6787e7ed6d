// ============================================================================
// ordercalc/point.hpp — point values for equivalence-relation instances
// ============================================================================
//
// A PointValue is one of:
//   AtomVal(n)       an urelement
//   Reserved(n)      a fresh letter, inequivalent to every ordinary point
//   TupleVal(...)    finite tuple
//   SeqDefault       map omega -> points: finitely many entries + default
//   LassoSeq         one-sided eventually periodic sequence of points
//   LassoZ           Z-indexed lasso of points (left tail, middle, right tail)
//   FinSet(...)      finite set of points
//   GroupMap         map from a countable group: finite support + default,
//                    keys encoded as integer vectors by the group
//   Equivariant(b)   a whole jump point presented as the orbit map of a base
//                    (gamma |-> gamma . b); the owning relation interprets
//                    the action
//
// Values are immutable and share structure; comparison is structural and
// total (used for canonical sorting and rotation normalization).
// ============================================================================

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lasso.hpp"
#include "term.hpp"  // error types

namespace ordercalc {

enum class PVKind : std::uint8_t {
    Atom = 0,
    Reserved = 1,
    Tuple = 2,
    SeqDefault = 3,
    LassoSeq1 = 4,
    LassoZ2 = 5,
    FinSet = 6,
    GroupMap = 7,
    Equivariant = 8
};

class PointValue;
using GroupKey = std::vector<long long>;

struct PVNode {
    PVKind kind = PVKind::Atom;
    long long num = 0;                                       // Atom / Reserved
    std::vector<PointValue> items;                           // Tuple / FinSet / {default} / {base}
    std::vector<std::pair<GroupKey, PointValue>> entries;    // SeqDefault ({n}) / GroupMap
    std::optional<LassoZ<PointValue>> lz;
    std::optional<LassoSeq<PointValue>> ls;
};

class PointValue {
public:
    PointValue() : node_(shared_atom0()) {}

    PVKind kind() const { return node_->kind; }
    long long num() const { return node_->num; }
    const std::vector<PointValue>& items() const { return node_->items; }
    const std::vector<std::pair<GroupKey, PointValue>>& entries() const {
        return node_->entries;
    }
    const LassoZ<PointValue>& lasso_z() const {
        if (!node_->lz) throw DomainError("point is not a Z-lasso");
        return *node_->lz;
    }
    const LassoSeq<PointValue>& lasso_seq() const {
        if (!node_->ls) throw DomainError("point is not a one-sided lasso");
        return *node_->ls;
    }
    const PointValue& dflt() const { return node_->items.front(); }  // SeqDefault / GroupMap
    const PointValue& base() const { return node_->items.front(); }  // Equivariant

    static PointValue make(PVNode n) {
        return PointValue(std::make_shared<const PVNode>(std::move(n)));
    }

    friend int compare(const PointValue& a, const PointValue& b);
    friend bool operator==(const PointValue& a, const PointValue& b) {
        return compare(a, b) == 0;
    }
    friend bool operator!=(const PointValue& a, const PointValue& b) {
        return compare(a, b) != 0;
    }
    friend bool operator<(const PointValue& a, const PointValue& b) {
        return compare(a, b) < 0;
    }

private:
    explicit PointValue(std::shared_ptr<const PVNode> n) : node_(std::move(n)) {}
    static const std::shared_ptr<const PVNode>& shared_atom0() {
        static const std::shared_ptr<const PVNode> a = std::make_shared<const PVNode>();
        return a;
    }
    std::shared_ptr<const PVNode> node_;
};

using PV = PointValue;

// ── constructors ────────────────────────────────────────────────────────────

inline PV pv_atom(long long n) {
    PVNode x;
    x.kind = PVKind::Atom;
    x.num = n;
    return PV::make(std::move(x));
}

inline PV pv_reserved(long long n) {
    PVNode x;
    x.kind = PVKind::Reserved;
    x.num = n;
    return PV::make(std::move(x));
}

inline PV pv_tuple(std::vector<PV> items) {
    PVNode x;
    x.kind = PVKind::Tuple;
    x.items = std::move(items);
    return PV::make(std::move(x));
}

inline PV pv_seq(std::vector<std::pair<long long, PV>> entries, PV dflt) {
    PVNode x;
    x.kind = PVKind::SeqDefault;
    x.items.push_back(std::move(dflt));
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [k, v] : entries) x.entries.emplace_back(GroupKey{k}, std::move(v));
    return PV::make(std::move(x));
}

inline PV pv_lasso_seq(LassoSeq<PV> l) {
    PVNode x;
    x.kind = PVKind::LassoSeq1;
    x.ls = std::move(l);
    return PV::make(std::move(x));
}

inline PV pv_lasso_z(LassoZ<PV> l) {
    PVNode x;
    x.kind = PVKind::LassoZ2;
    x.lz = std::move(l);
    return PV::make(std::move(x));
}

inline PV pv_finset(std::vector<PV> items) {
    PVNode x;
    x.kind = PVKind::FinSet;
    std::sort(items.begin(), items.end());
    items.erase(std::unique(items.begin(), items.end()), items.end());
    x.items = std::move(items);
    return PV::make(std::move(x));
}

inline PV pv_group_map(std::vector<std::pair<GroupKey, PV>> entries, PV dflt) {
    PVNode x;
    x.kind = PVKind::GroupMap;
    x.items.push_back(std::move(dflt));
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    x.entries = std::move(entries);
    return PV::make(std::move(x));
}

inline PV pv_equivariant(PV base) {
    PVNode x;
    x.kind = PVKind::Equivariant;
    x.items.push_back(std::move(base));
    return PV::make(std::move(x));
}

// ── total order ─────────────────────────────────────────────────────────────

inline int compare(const LassoZ<PV>& a, const LassoZ<PV>& b);
inline int compare(const LassoSeq<PV>& a, const LassoSeq<PV>& b);

inline int compare(const PointValue& a, const PointValue& b) {
    if (a.node_ == b.node_) return 0;
    if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
    auto cmp_ll = [](long long x, long long y) { return x < y ? -1 : (x == y ? 0 : 1); };
    switch (a.kind()) {
        case PVKind::Atom:
        case PVKind::Reserved: return cmp_ll(a.num(), b.num());
        case PVKind::Tuple:
        case PVKind::FinSet:
        case PVKind::Equivariant: {
            const auto& xa = a.items();
            const auto& xb = b.items();
            for (std::size_t i = 0; i < std::min(xa.size(), xb.size()); ++i) {
                int c = compare(xa[i], xb[i]);
                if (c != 0) return c;
            }
            return xa.size() == xb.size() ? 0 : (xa.size() < xb.size() ? -1 : 1);
        }
        case PVKind::SeqDefault:
        case PVKind::GroupMap: {
            int c = compare(a.dflt(), b.dflt());
            if (c != 0) return c;
            const auto& ea = a.entries();
            const auto& eb = b.entries();
            for (std::size_t i = 0; i < std::min(ea.size(), eb.size()); ++i) {
                if (ea[i].first != eb[i].first) return ea[i].first < eb[i].first ? -1 : 1;
                c = compare(ea[i].second, eb[i].second);
                if (c != 0) return c;
            }
            return ea.size() == eb.size() ? 0 : (ea.size() < eb.size() ? -1 : 1);
        }
        case PVKind::LassoSeq1: return compare(a.lasso_seq(), b.lasso_seq());
        case PVKind::LassoZ2: return compare(a.lasso_z(), b.lasso_z());
    }
    return 0;
}

inline int compare_cells(const std::vector<PV>& a, const std::vector<PV>& b) {
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
        int c = compare(a[i], b[i]);
        if (c != 0) return c;
    }
    return a.size() == b.size() ? 0 : (a.size() < b.size() ? -1 : 1);
}

inline int compare(const LassoZ<PV>& a, const LassoZ<PV>& b) {
    if (a.origin != b.origin) return a.origin < b.origin ? -1 : 1;
    int c = compare_cells(a.left, b.left);
    if (c != 0) return c;
    c = compare_cells(a.mid, b.mid);
    if (c != 0) return c;
    return compare_cells(a.right, b.right);
}

inline int compare(const LassoSeq<PV>& a, const LassoSeq<PV>& b) {
    int c = compare_cells(a.prefix, b.prefix);
    if (c != 0) return c;
    return compare_cells(a.period, b.period);
}

inline int pv_cmp(const PV& a, const PV& b) { return compare(a, b); }

// ── JSON ────────────────────────────────────────────────────────────────────

inline nlohmann::json pv_to_json(const PV& v) {
    using nlohmann::json;
    auto cells = [](const std::vector<PV>& xs) {
        json a = json::array();
        for (const auto& x : xs) a.push_back(pv_to_json(x));
        return a;
    };
    switch (v.kind()) {
        case PVKind::Atom: return json{{"atom", v.num()}};
        case PVKind::Reserved: return json{{"reserved", v.num()}};
        case PVKind::Tuple: return json{{"tuple", cells(v.items())}};
        case PVKind::FinSet: return json{{"set", cells(v.items())}};
        case PVKind::Equivariant: return json{{"equivariant", pv_to_json(v.base())}};
        case PVKind::SeqDefault: {
            json e = json::object();
            for (const auto& [k, x] : v.entries()) e[std::to_string(k[0])] = pv_to_json(x);
            return json{{"seq", json{{"entries", e}, {"default", pv_to_json(v.dflt())}}}};
        }
        case PVKind::GroupMap: {
            json e = json::array();
            for (const auto& [k, x] : v.entries()) e.push_back(json{{"at", k}, {"value", pv_to_json(x)}});
            return json{{"groupMap", json{{"entries", e}, {"default", pv_to_json(v.dflt())}}}};
        }
        case PVKind::LassoSeq1:
            return json{{"lasso", json{{"prefix", cells(v.lasso_seq().prefix)},
                                       {"period", cells(v.lasso_seq().period)}}}};
        case PVKind::LassoZ2:
            return json{{"lassoZ", json{{"left", cells(v.lasso_z().left)},
                                        {"mid", cells(v.lasso_z().mid)},
                                        {"right", cells(v.lasso_z().right)},
                                        {"origin", v.lasso_z().origin}}}};
    }
    return nullptr;
}

inline PV pv_from_json(const nlohmann::json& j) {
    using nlohmann::json;
    auto cells = [](const json& a) {
        std::vector<PV> out;
        for (const auto& x : a) out.push_back(pv_from_json(x));
        return out;
    };
    if (j.contains("atom")) return pv_atom(j["atom"].get<long long>());
    if (j.contains("reserved")) return pv_reserved(j["reserved"].get<long long>());
    if (j.contains("tuple")) return pv_tuple(cells(j["tuple"]));
    if (j.contains("set")) return pv_finset(cells(j["set"]));
    if (j.contains("equivariant")) return pv_equivariant(pv_from_json(j["equivariant"]));
    if (j.contains("seq")) {
        std::vector<std::pair<long long, PV>> es;
        for (const auto& [k, x] : j["seq"]["entries"].items())
            es.emplace_back(std::stoll(k), pv_from_json(x));
        return pv_seq(std::move(es), pv_from_json(j["seq"]["default"]));
    }
    if (j.contains("groupMap")) {
        std::vector<std::pair<GroupKey, PV>> es;
        for (const auto& e : j["groupMap"]["entries"])
            es.emplace_back(e["at"].get<GroupKey>(), pv_from_json(e["value"]));
        return pv_group_map(std::move(es), pv_from_json(j["groupMap"]["default"]));
    }
    if (j.contains("lasso"))
        return pv_lasso_seq(
            LassoSeq<PV>(cells(j["lasso"]["prefix"]), cells(j["lasso"]["period"])));
    if (j.contains("lassoZ"))
        return pv_lasso_z(LassoZ<PV>(cells(j["lassoZ"]["left"]), cells(j["lassoZ"]["mid"]),
                                     cells(j["lassoZ"]["right"]),
                                     j["lassoZ"].value("origin", 0LL)));
    throw DomainError("pv_from_json: unrecognized point value");
}

}  // namespace ordercalc
