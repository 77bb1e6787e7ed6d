// ============================================================================
// ordercalc/term_ops.hpp — end structure, finite condensation, rank, hulls
// ============================================================================
//
// The derivative is the finite-condensation quotient: points are identified
// when the interval between them is finite.  On a sum, condensed classes of
// adjacent parts fuse exactly when the left part has a greatest element and
// the right part has a least one; each fused class is attributed to the left
// operand (a fixed choice among the isomorphic alternatives).
// ============================================================================

#pragma once

#include <algorithm>
#include <optional>

#include "term.hpp"

namespace ordercalc {

// ── end flags ───────────────────────────────────────────────────────────────

struct EndFlags {
    bool is_empty = false;
    bool has_min = false;
    bool has_max = false;
    std::optional<std::uint64_t> finite_size;

    friend bool operator==(const EndFlags& a, const EndFlags& b) {
        return a.is_empty == b.is_empty && a.has_min == b.has_min && a.has_max == b.has_max &&
               a.finite_size == b.finite_size;
    }
};

inline EndFlags end_flags(const OrderTerm& t) {
    switch (t.kind()) {
        case TermKind::Zero: return EndFlags{true, false, false, 0};
        case TermKind::Atom: return EndFlags{false, true, true, 1};
        case TermKind::Fin: return EndFlags{false, true, true, t.fin_count()};
        case TermKind::Sum: {
            EndFlags out{true, false, false, 0};
            bool all_finite = true;
            std::uint64_t total = 0;
            for (const auto& p : t.parts()) {
                EndFlags cur = end_flags(p);
                if (cur.is_empty) continue;
                if (out.is_empty) {
                    out.is_empty = false;
                    out.has_min = cur.has_min;
                }
                if (cur.finite_size && all_finite)
                    total += *cur.finite_size;
                else
                    all_finite = false;
                out.has_max = cur.has_max;
            }
            if (out.is_empty) return EndFlags{true, false, false, 0};
            out.finite_size = all_finite ? std::optional<std::uint64_t>(total) : std::nullopt;
            return out;
        }
        case TermKind::OmegaRep: {
            EndFlags b = end_flags(t.body());
            if (b.is_empty) return EndFlags{true, false, false, 0};
            return EndFlags{false, b.has_min, false, std::nullopt};
        }
        case TermKind::OmegaStarRep: {
            EndFlags b = end_flags(t.body());
            if (b.is_empty) return EndFlags{true, false, false, 0};
            return EndFlags{false, false, b.has_max, std::nullopt};
        }
        case TermKind::ZetaRep: {
            EndFlags b = end_flags(t.body());
            if (b.is_empty) return EndFlags{true, false, false, 0};
            return EndFlags{false, false, false, std::nullopt};
        }
    }
    return {};
}

inline bool has_min(const OrderTerm& t) { return end_flags(t).has_min; }
inline bool has_max(const OrderTerm& t) { return end_flags(t).has_max; }
inline bool is_empty_order(const OrderTerm& t) { return end_flags(t).is_empty; }
inline std::optional<std::uint64_t> finite_size(const OrderTerm& t) {
    return end_flags(t).finite_size;
}

// ── sum assembly ────────────────────────────────────────────────────────────
// mk_sum: flatten nested sums, drop empty parts, coalesce adjacent default
// finite pieces (Atom/Fin) into a single Fin.  Labeled atoms never coalesce.

inline void flatten_into(const OrderTerm& t, std::vector<OrderTerm>& out) {
    if (t.is_zero()) return;
    if (t.is_sum()) {
        for (const auto& p : t.parts()) flatten_into(p, out);
        return;
    }
    out.push_back(t);
}

inline bool is_default_finite(const OrderTerm& t) {
    return t.is_default_atom() || t.kind() == TermKind::Fin;
}

inline OrderTerm mk_sum(const std::vector<OrderTerm>& parts) {
    std::vector<OrderTerm> flat;
    for (const auto& p : parts) flatten_into(p, flat);
    std::vector<OrderTerm> out;
    for (const auto& p : flat) {
        if (!out.empty() && is_default_finite(out.back()) && is_default_finite(p)) {
            std::uint64_t n = (out.back().is_atom() ? 1 : out.back().fin_count()) +
                              (p.is_atom() ? 1 : p.fin_count());
            out.back() = fin(n);
        } else {
            out.push_back(p);
        }
    }
    if (out.empty()) return zero();
    if (out.size() == 1) return out.front();
    return sum_raw(std::move(out));
}

inline OrderTerm mk_sum2(const OrderTerm& a, const OrderTerm& b) { return mk_sum({a, b}); }

inline OrderTerm mk_rep(TermKind k, const OrderTerm& body) {
    if (body.is_zero()) return zero();
    return rep(k, body);
}

// ── drop_min ────────────────────────────────────────────────────────────────
// Remove the least point.  OmegaRep unrolls one copy first (w(A) = A + w(A)).

inline OrderTerm drop_min(const OrderTerm& t) {
    switch (t.kind()) {
        case TermKind::Zero: throw DomainError("drop_min: empty order");
        case TermKind::Atom: return zero();
        case TermKind::Fin: return fin(t.fin_count() - 1);
        case TermKind::Sum: {
            std::vector<OrderTerm> out;
            bool dropped = false;
            for (const auto& p : t.parts()) {
                if (!dropped && !is_empty_order(p)) {
                    out.push_back(drop_min(p));
                    dropped = true;
                } else {
                    out.push_back(p);
                }
            }
            if (!dropped) throw DomainError("drop_min: empty order");
            return mk_sum(out);
        }
        case TermKind::OmegaRep: {
            if (!has_min(t)) throw DomainError("drop_min: no least element");
            return mk_sum2(drop_min(t.body()), t);
        }
        default: throw DomainError("drop_min: no least element");
    }
}

// Mirror of drop_min, used by the derivative's omega*-side fusion.
inline OrderTerm drop_max(const OrderTerm& t) {
    switch (t.kind()) {
        case TermKind::Zero: throw DomainError("drop_max: empty order");
        case TermKind::Atom: return zero();
        case TermKind::Fin: return fin(t.fin_count() - 1);
        case TermKind::Sum: {
            std::vector<OrderTerm> out = t.parts();
            for (auto it = out.rbegin(); it != out.rend(); ++it) {
                if (!is_empty_order(*it)) {
                    *it = drop_max(*it);
                    return mk_sum(out);
                }
            }
            throw DomainError("drop_max: empty order");
        }
        case TermKind::OmegaStarRep: {
            if (!has_max(t)) throw DomainError("drop_max: no greatest element");
            return mk_sum2(t, drop_max(t.body()));
        }
        default: throw DomainError("drop_max: no greatest element");
    }
}

// ── derivative ──────────────────────────────────────────────────────────────

inline OrderTerm derivative(const OrderTerm& t) {
    EndFlags f = end_flags(t);
    if (f.is_empty) return zero();
    if (f.finite_size) return atom();  // one class
    switch (t.kind()) {
        case TermKind::Sum: {
            std::vector<OrderTerm> pieces;
            const OrderTerm* prev = nullptr;
            for (const auto& p : t.parts()) {
                if (is_empty_order(p)) continue;
                OrderTerm dp = derivative(p);
                if (prev != nullptr && has_max(*prev) && has_min(p)) {
                    // boundary classes fuse; the fused class stays with the
                    // left piece, so the right one loses its minimum class
                    dp = drop_min(dp);
                }
                pieces.push_back(dp);
                prev = &p;
            }
            return mk_sum(pieces);
        }
        case TermKind::OmegaRep: {
            const OrderTerm& a = t.body();
            if (finite_size(a)) return atom();  // w over a finite block: one class
            OrderTerm da = derivative(a);
            if (has_max(a) && has_min(a)) return mk_sum2(da, mk_rep(TermKind::OmegaRep, drop_min(da)));
            return mk_rep(TermKind::OmegaRep, da);
        }
        case TermKind::OmegaStarRep: {
            const OrderTerm& a = t.body();
            if (finite_size(a)) return atom();
            OrderTerm da = derivative(a);
            if (has_max(a) && has_min(a)) {
                OrderTerm dm = drop_min(da);
                // last copy keeps an unfused greatest class, so it is unrolled
                return mk_sum2(mk_rep(TermKind::OmegaStarRep, dm), dm);
            }
            return mk_rep(TermKind::OmegaStarRep, da);
        }
        case TermKind::ZetaRep: {
            const OrderTerm& a = t.body();
            if (finite_size(a)) return atom();
            OrderTerm da = derivative(a);
            if (has_max(a) && has_min(a)) return mk_rep(TermKind::ZetaRep, drop_min(da));
            return mk_rep(TermKind::ZetaRep, da);
        }
        default: return atom();  // unreachable: finite cases returned above
    }
}

inline bool is_single_point(const OrderTerm& t) {
    auto n = finite_size(t);
    return n && *n == 1;
}

// Number of derivative steps until a single point remains.
inline unsigned rank(const OrderTerm& t) {
    if (is_empty_order(t)) throw DomainError("rank: empty order");
    OrderTerm cur = t;
    unsigned steps = 0;
    std::uint64_t guard = term_size(t) + 2;
    while (!is_single_point(cur)) {
        cur = derivative(cur);
        ++steps;
        if (steps > guard) throw std::logic_error("rank: derivative failed to terminate");
    }
    return steps;
}

// ── Dedekind completion ─────────────────────────────────────────────────────
// Insert a point at every interior junction where the left side has no
// greatest element and the right side no least one.  Unbounded sides get no
// endpoints.

inline OrderTerm complete_hull(const OrderTerm& t) {
    switch (t.kind()) {
        case TermKind::Zero:
        case TermKind::Atom:
        case TermKind::Fin: return t;
        case TermKind::Sum: {
            std::vector<OrderTerm> hulls;
            for (const auto& p : t.parts()) {
                if (is_empty_order(p)) continue;
                hulls.push_back(complete_hull(p));
            }
            std::vector<OrderTerm> out;
            bool have_prev = false;
            bool prev_has_max = false;
            for (const auto& h : hulls) {
                if (have_prev && !prev_has_max && !has_min(h)) out.push_back(atom());
                out.push_back(h);
                have_prev = true;
                prev_has_max = has_max(h);
            }
            return mk_sum(out);
        }
        case TermKind::OmegaRep: {
            OrderTerm h = complete_hull(t.body());
            if (is_empty_order(h)) return zero();
            if (!has_max(h) && !has_min(h)) return omega(mk_sum2(h, atom()));
            return omega(h);
        }
        case TermKind::OmegaStarRep: {
            OrderTerm h = complete_hull(t.body());
            if (is_empty_order(h)) return zero();
            if (!has_max(h) && !has_min(h)) return omega_star(mk_sum2(atom(), h));
            return omega_star(h);
        }
        case TermKind::ZetaRep: {
            OrderTerm h = complete_hull(t.body());
            if (is_empty_order(h)) return zero();
            if (!has_max(h) && !has_min(h)) return zeta(mk_sum2(h, atom()));
            return zeta(h);
        }
    }
    return t;
}

}  // namespace ordercalc
