// ============================================================================
// ordercalc/condense.hpp — derivative with class provenance
// ============================================================================
//
// The provenance engine runs the finite condensation while recording, for
// every class it emits, a term describing the class's contents over the
// previous level's class atoms.  Level 0 relabels every point to a shared
// point class.  Consumers: invariant signatures (per-step singleton counts),
// the order-to-tree construction, and separator detection.
//
// Class atoms carry labels "c<id>" into a per-run ClassTable.  Contents are
// canonicalization-free here; interning is by syntactic identity of the
// content term (identical structure => shared class id).
// ============================================================================

#pragma once

#include <cstdint>
#include <unordered_map>

#include "term_ops.hpp"

namespace ordercalc {

class ClassTable {
public:
    int intern(const OrderTerm& content) {
        auto it = ids_.find(content);
        if (it != ids_.end()) return it->second;
        int id = static_cast<int>(contents_.size());
        contents_.push_back(content);
        ids_.emplace(content, id);
        return id;
    }
    const OrderTerm& content(int id) const { return contents_.at(static_cast<size_t>(id)); }
    std::size_t size() const { return contents_.size(); }

    static std::string label_of(int id) { return "c" + std::to_string(id); }
    static int id_of(const OrderTerm& class_atom) {
        const std::string& l = class_atom.label();
        return std::stoi(l.substr(1));
    }

private:
    std::vector<OrderTerm> contents_;
    std::unordered_map<OrderTerm, int, OrderTermHash> ids_;
};

namespace detail {

inline constexpr std::uint64_t kPointExpansionCap = 1u << 20;

// Every point becomes an atom labeled with the shared point class.
inline OrderTerm relabel_points(const OrderTerm& t, ClassTable& tab) {
    switch (t.kind()) {
        case TermKind::Zero: return t;
        case TermKind::Atom: return atom(ClassTable::label_of(tab.intern(atom(t.label()))));
        case TermKind::Fin: {
            if (t.fin_count() > kPointExpansionCap)
                throw DomainError("condensation: finite block too large to expand");
            OrderTerm p = atom(ClassTable::label_of(tab.intern(atom())));
            std::vector<OrderTerm> pts(static_cast<size_t>(t.fin_count()), p);
            return sum_raw(std::move(pts));
        }
        case TermKind::Sum: {
            std::vector<OrderTerm> out;
            for (const auto& p : t.parts()) {
                OrderTerm r = relabel_points(p, tab);
                if (!r.is_zero()) flatten_into(r, out);
            }
            if (out.empty()) return zero();
            if (out.size() == 1) return out.front();
            return sum_raw(std::move(out));
        }
        default: {
            OrderTerm b = relabel_points(t.body(), tab);
            if (b.is_zero()) return zero();
            return rep(t.kind(), b);
        }
    }
}

inline int leftmost_class(const OrderTerm& t) {
    switch (t.kind()) {
        case TermKind::Atom: return ClassTable::id_of(t);
        case TermKind::Sum:
            for (const auto& p : t.parts())
                if (!is_empty_order(p)) return leftmost_class(p);
            throw std::logic_error("leftmost_class: empty");
        case TermKind::OmegaRep: return leftmost_class(t.body());
        default: throw std::logic_error("leftmost_class: no least class");
    }
}

inline int rightmost_class(const OrderTerm& t) {
    switch (t.kind()) {
        case TermKind::Atom: return ClassTable::id_of(t);
        case TermKind::Sum:
            for (auto it = t.parts().rbegin(); it != t.parts().rend(); ++it)
                if (!is_empty_order(*it)) return rightmost_class(*it);
            throw std::logic_error("rightmost_class: empty");
        case TermKind::OmegaStarRep: return rightmost_class(t.body());
        default: throw std::logic_error("rightmost_class: no greatest class");
    }
}

// Relabel the greatest class.  An omega*-repetition unrolls its final copy so
// only that copy is touched.
inline OrderTerm replace_rightmost(const OrderTerm& t, int cls) {
    switch (t.kind()) {
        case TermKind::Atom: return atom(ClassTable::label_of(cls));
        case TermKind::Sum: {
            std::vector<OrderTerm> out = t.parts();
            for (auto it = out.rbegin(); it != out.rend(); ++it) {
                if (!is_empty_order(*it)) {
                    *it = replace_rightmost(*it, cls);
                    return sum_raw(std::move(out));
                }
            }
            throw std::logic_error("replace_rightmost: empty");
        }
        case TermKind::OmegaStarRep:
            return mk_sum2(t, replace_rightmost(t.body(), cls));
        default: throw std::logic_error("replace_rightmost: no greatest class");
    }
}

}  // namespace detail

// One condensation step on a level term (atoms are class atoms).  Returns the
// next level; every emitted class's contents are recorded in `tab`.
inline OrderTerm derivative_with_classes(const OrderTerm& t, ClassTable& tab) {
    using namespace detail;
    EndFlags f = end_flags(t);
    if (f.is_empty) return zero();
    if (f.finite_size) return atom(ClassTable::label_of(tab.intern(t)));
    switch (t.kind()) {
        case TermKind::Sum: {
            std::vector<OrderTerm> pieces;
            const OrderTerm* prev = nullptr;
            for (const auto& p : t.parts()) {
                if (is_empty_order(p)) continue;
                OrderTerm dp = derivative_with_classes(p, tab);
                if (prev != nullptr && has_max(*prev) && has_min(p)) {
                    int left = rightmost_class(pieces.back());
                    int right = leftmost_class(dp);
                    int fused = tab.intern(mk_sum2(tab.content(left), tab.content(right)));
                    pieces.back() = replace_rightmost(pieces.back(), fused);
                    dp = drop_min(dp);
                }
                if (!dp.is_zero()) pieces.push_back(dp);
                prev = &p;
            }
            return mk_sum(pieces);
        }
        case TermKind::OmegaRep: {
            const OrderTerm& a = t.body();
            if (finite_size(a)) return atom(ClassTable::label_of(tab.intern(t)));
            OrderTerm da = derivative_with_classes(a, tab);
            if (has_max(a) && has_min(a)) {
                int left = rightmost_class(da);
                int right = leftmost_class(da);
                int fused = tab.intern(mk_sum2(tab.content(left), tab.content(right)));
                OrderTerm da2 = replace_rightmost(da, fused);
                return mk_sum2(da2, mk_rep(TermKind::OmegaRep, drop_min(da2)));
            }
            return mk_rep(TermKind::OmegaRep, da);
        }
        case TermKind::OmegaStarRep: {
            const OrderTerm& a = t.body();
            if (finite_size(a)) return atom(ClassTable::label_of(tab.intern(t)));
            OrderTerm da = derivative_with_classes(a, tab);
            if (has_max(a) && has_min(a)) {
                int left = rightmost_class(da);
                int right = leftmost_class(da);
                int fused = tab.intern(mk_sum2(tab.content(left), tab.content(right)));
                OrderTerm da2 = replace_rightmost(da, fused);
                return mk_sum2(mk_rep(TermKind::OmegaStarRep, drop_min(da2)), drop_min(da));
            }
            return mk_rep(TermKind::OmegaStarRep, da);
        }
        case TermKind::ZetaRep: {
            const OrderTerm& a = t.body();
            if (finite_size(a)) return atom(ClassTable::label_of(tab.intern(t)));
            OrderTerm da = derivative_with_classes(a, tab);
            if (has_max(a) && has_min(a)) {
                int left = rightmost_class(da);
                int right = leftmost_class(da);
                int fused = tab.intern(mk_sum2(tab.content(left), tab.content(right)));
                OrderTerm da2 = replace_rightmost(da, fused);
                return mk_rep(TermKind::ZetaRep, drop_min(da2));
            }
            return mk_rep(TermKind::ZetaRep, da);
        }
        default: return atom(ClassTable::label_of(tab.intern(t)));
    }
}

// ── singleton counting ──────────────────────────────────────────────────────

inline constexpr std::uint32_t kInfinitelyMany = UINT32_MAX;

inline std::uint32_t saturating_add(std::uint32_t a, std::uint32_t b) {
    if (a == kInfinitelyMany || b == kInfinitelyMany) return kInfinitelyMany;
    std::uint64_t s = static_cast<std::uint64_t>(a) + b;
    return s >= kInfinitelyMany ? kInfinitelyMany - 1 : static_cast<std::uint32_t>(s);
}

// Number of classes in a level term whose content is a single element of the
// previous level ("identified by its ~-class of size 1").
inline std::uint32_t singleton_class_count(const OrderTerm& level, const ClassTable& tab) {
    switch (level.kind()) {
        case TermKind::Zero: return 0;
        case TermKind::Atom: {
            const OrderTerm& c = tab.content(ClassTable::id_of(level));
            auto n = finite_size(c);
            return (n && *n == 1) ? 1u : 0u;
        }
        case TermKind::Sum: {
            std::uint32_t s = 0;
            for (const auto& p : level.parts()) s = saturating_add(s, singleton_class_count(p, tab));
            return s;
        }
        case TermKind::Fin: return 0;  // class atoms are labeled; Fin never appears
        default:
            return singleton_class_count(level.body(), tab) > 0 ? kInfinitelyMany : 0;
    }
}

// ── condensation levels ─────────────────────────────────────────────────────

struct CondensationLevels {
    ClassTable table;
    std::vector<OrderTerm> levels;  // levels[0] = relabeled points, back() = single class
};

inline CondensationLevels condensation_levels(const OrderTerm& t) {
    if (is_empty_order(t)) throw DomainError("condensation: empty order");
    CondensationLevels out;
    OrderTerm cur = detail::relabel_points(t, out.table);
    out.levels.push_back(cur);
    std::uint64_t guard = term_size(t) + 2;
    while (!is_single_point(cur)) {
        cur = derivative_with_classes(cur, out.table);
        out.levels.push_back(cur);
        if (out.levels.size() > guard + 1)
            throw std::logic_error("condensation: failed to terminate");
    }
    return out;
}

// ── invariant signature ─────────────────────────────────────────────────────

struct DerivStep {
    EndFlags flags;
    std::uint32_t singleton_count;

    friend bool operator==(const DerivStep& a, const DerivStep& b) {
        return a.flags == b.flags && a.singleton_count == b.singleton_count;
    }
};

struct InvariantSignature {
    unsigned rank = 0;
    EndFlags flags;
    std::vector<DerivStep> chain;  // one entry per derivative step

    friend bool operator==(const InvariantSignature& a, const InvariantSignature& b) {
        return a.rank == b.rank && a.flags == b.flags && a.chain == b.chain;
    }
};

inline InvariantSignature invariant_signature(const OrderTerm& t) {
    if (is_empty_order(t)) throw DomainError("invariant_signature: empty order");
    InvariantSignature sig;
    sig.flags = end_flags(t);
    CondensationLevels lv = condensation_levels(t);
    for (size_t i = 1; i < lv.levels.size(); ++i) {
        sig.chain.push_back(
            DerivStep{end_flags(lv.levels[i]), singleton_class_count(lv.levels[i], lv.table)});
    }
    sig.rank = static_cast<unsigned>(sig.chain.size());
    return sig;
}

}  // namespace ordercalc
