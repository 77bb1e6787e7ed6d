// ============================================================================
// ordercalc/term_rewrite.hpp — canonical forms and isomorphism
// ============================================================================
//
// Canonicalization is a bottom-up normalization under these rules:
//
//   zeta_expand      z(A) -> ws(A) + w(A)
//   rep_zero         w(0) / ws(0) / z(0) -> 0
//   sum_normalize    flatten sums, drop empty parts, coalesce finite runs
//   power_collapse   w(u^m) -> w(u), u primitive      (mirrored for ws)
//   rotate           w(v+u) -> v + w(u+v) where u+v is the least rotation
//                    in the frozen term order          (mirrored for ws)
//   absorb           ... A + w(A) -> ... w(A), matched letter-wise
//                    (mirrored: ws(A) + A -> ws(A))
//   drop_absorbable  X + w(W) -> w(W) when canon(X + W) = canon(W)
//                    (mirrored for ws); closes prefix identities like
//                    1 + w(w(1)) = w(w(1))
//
// Equal canonical forms imply isomorphism of the denoted orders; the
// converse is validated empirically on enumerated fragments, with Unknown
// as the honest fallback verdict.
// ============================================================================

#pragma once

#include <functional>

#include "condense.hpp"

namespace ordercalc {

namespace detail {

inline constexpr std::size_t kWordCap = 4096;

// Flatten into letters: Atom (any label) and repetition subterms are letters,
// Fin expands into point letters.  Returns false when the cap is exceeded.
inline bool letters_into(const OrderTerm& t, std::vector<OrderTerm>& out, std::size_t cap) {
    switch (t.kind()) {
        case TermKind::Zero: return true;
        case TermKind::Atom: out.push_back(t); return out.size() <= cap;
        case TermKind::Fin: {
            if (out.size() + t.fin_count() > cap) return false;
            for (std::uint64_t i = 0; i < t.fin_count(); ++i) out.push_back(atom());
            return true;
        }
        case TermKind::Sum:
            for (const auto& p : t.parts())
                if (!letters_into(p, out, cap)) return false;
            return true;
        default: out.push_back(t); return out.size() <= cap;
    }
}

inline std::optional<std::vector<OrderTerm>> letters_of(const OrderTerm& t,
                                                        std::size_t cap = kWordCap) {
    std::vector<OrderTerm> out;
    if (!letters_into(t, out, cap)) return std::nullopt;
    return out;
}

// Booth's least-rotation, generalized to the frozen term order.
inline std::size_t least_rotation_index(const std::vector<OrderTerm>& w) {
    std::size_t n = w.size();
    if (n <= 1) return 0;
    std::size_t i = 0, j = 1, k = 0;
    while (i < n && j < n && k < n) {
        int c = compare(w[(i + k) % n], w[(j + k) % n]);
        if (c == 0) {
            ++k;
        } else if (c < 0) {
            j += k + 1;
            if (i == j) ++j;
            k = 0;
        } else {
            i += k + 1;
            if (i == j) ++i;
            k = 0;
        }
    }
    return std::min(i, j);
}

inline std::vector<OrderTerm> primitive_root(const std::vector<OrderTerm>& w) {
    std::size_t n = w.size();
    if (n <= 1) return w;
    std::vector<std::size_t> fail(n, 0);
    for (std::size_t i = 1; i < n; ++i) {
        std::size_t k = fail[i - 1];
        while (k > 0 && w[i] != w[k]) k = fail[k - 1];
        if (w[i] == w[k]) ++k;
        fail[i] = k;
    }
    std::size_t p = n - fail[n - 1];
    if (n % p == 0) return std::vector<OrderTerm>(w.begin(), w.begin() + static_cast<long>(p));
    return w;
}

}  // namespace detail

OrderTerm canonicalize(const OrderTerm& t);

namespace detail {

// One absorption step inside a sum's part list; true if anything changed.

inline bool try_absorb_left(std::vector<OrderTerm>& parts) {
    for (std::size_t j = 0; j < parts.size(); ++j) {
        if (parts[j].kind() != TermKind::OmegaRep) continue;
        auto bw = letters_of(parts[j].body());
        if (!bw || bw->empty()) continue;
        std::vector<OrderTerm> pre;
        bool ok = true;
        for (std::size_t i = 0; i < j && ok; ++i) ok = letters_into(parts[i], pre, kWordCap);
        if (!ok || pre.size() < bw->size()) continue;
        bool match = true;
        for (std::size_t i = 0; i < bw->size() && match; ++i)
            match = (pre[pre.size() - bw->size() + i] == (*bw)[i]);
        if (!match) continue;
        std::vector<OrderTerm> next(pre.begin(), pre.end() - static_cast<long>(bw->size()));
        next.insert(next.end(), parts.begin() + static_cast<long>(j), parts.end());
        parts = std::move(next);
        return true;
    }
    return false;
}

inline bool try_absorb_right(std::vector<OrderTerm>& parts) {
    for (std::size_t j = 0; j < parts.size(); ++j) {
        if (parts[j].kind() != TermKind::OmegaStarRep) continue;
        auto bw = letters_of(parts[j].body());
        if (!bw || bw->empty()) continue;
        std::vector<OrderTerm> post;
        bool ok = true;
        for (std::size_t i = j + 1; i < parts.size() && ok; ++i)
            ok = letters_into(parts[i], post, kWordCap);
        if (!ok || post.size() < bw->size()) continue;
        bool match = true;
        for (std::size_t i = 0; i < bw->size() && match; ++i) match = (post[i] == (*bw)[i]);
        if (!match) continue;
        std::vector<OrderTerm> next(parts.begin(), parts.begin() + static_cast<long>(j) + 1);
        next.insert(next.end(), post.begin() + static_cast<long>(bw->size()), post.end());
        parts = std::move(next);
        return true;
    }
    return false;
}

inline bool try_drop_left(std::vector<OrderTerm>& parts) {
    for (std::size_t j = 1; j < parts.size(); ++j) {
        if (parts[j].kind() != TermKind::OmegaRep) continue;
        const OrderTerm& body = parts[j].body();
        if (canonicalize(mk_sum2(parts[j - 1], body)) == canonicalize(body)) {
            parts.erase(parts.begin() + static_cast<long>(j) - 1);
            return true;
        }
    }
    return false;
}

inline bool try_drop_right(std::vector<OrderTerm>& parts) {
    for (std::size_t j = 0; j + 1 < parts.size(); ++j) {
        if (parts[j].kind() != TermKind::OmegaStarRep) continue;
        const OrderTerm& body = parts[j].body();
        if (canonicalize(mk_sum2(body, parts[j + 1])) == canonicalize(body)) {
            parts.erase(parts.begin() + static_cast<long>(j) + 1);
            return true;
        }
    }
    return false;
}

// Sum-level fixpoint over canonical parts.
inline OrderTerm assemble_sum(std::vector<OrderTerm> parts) {
    for (int guard = 0; guard < 100000; ++guard) {
        OrderTerm t = mk_sum(parts);
        if (!t.is_sum()) return t;
        parts.assign(t.parts().begin(), t.parts().end());
        if (try_absorb_left(parts)) continue;
        if (try_absorb_right(parts)) continue;
        if (try_drop_left(parts)) continue;
        if (try_drop_right(parts)) continue;
        return t;
    }
    throw std::logic_error("assemble_sum: no fixpoint");
}

// Normal form of a repetition over an already canonical, nonzero body.
inline OrderTerm canon_rep(TermKind k, OrderTerm b) {
    if (k == TermKind::ZetaRep) {
        if (b.is_zero()) return zero();
        return assemble_sum({canon_rep(TermKind::OmegaStarRep, b), canon_rep(TermKind::OmegaRep, b)});
    }
    for (int guard = 0; guard < 100000; ++guard) {
        if (b.is_zero()) return zero();
        auto w = letters_of(b);
        if (!w || w->empty()) return w ? zero() : rep(k, b);  // cap exceeded: leave as-is
        std::vector<OrderTerm> u = primitive_root(*w);
        std::size_t i = least_rotation_index(u);
        if (i == 0) {
            if (u.size() == w->size()) return rep(k, b);
            b = canonicalize(mk_sum(u));  // power collapse, then renormalize
            continue;
        }
        std::vector<OrderTerm> rot(u.begin() + static_cast<long>(i), u.end());
        rot.insert(rot.end(), u.begin(), u.begin() + static_cast<long>(i));
        OrderTerm rb = canonicalize(mk_sum(rot));
        if (k == TermKind::OmegaRep) {
            std::vector<OrderTerm> out(u.begin(), u.begin() + static_cast<long>(i));
            out.push_back(canon_rep(TermKind::OmegaRep, rb));
            return assemble_sum(std::move(out));
        }
        std::vector<OrderTerm> out;
        out.push_back(canon_rep(TermKind::OmegaStarRep, rb));
        out.insert(out.end(), u.begin() + static_cast<long>(i), u.end());
        return assemble_sum(std::move(out));
    }
    throw std::logic_error("canon_rep: no fixpoint");
}

}  // namespace detail

inline OrderTerm canonicalize(const OrderTerm& t) {
    switch (t.kind()) {
        case TermKind::Zero:
        case TermKind::Atom:
        case TermKind::Fin: return t;
        case TermKind::Sum: {
            std::vector<OrderTerm> parts;
            parts.reserve(t.parts().size());
            for (const auto& p : t.parts()) parts.push_back(canonicalize(p));
            return detail::assemble_sum(std::move(parts));
        }
        default: {
            OrderTerm b = canonicalize(t.body());
            if (b.is_zero()) return zero();
            return detail::canon_rep(t.kind(), b);
        }
    }
}

// ── single-rule introspection ───────────────────────────────────────────────
// Every entry rewrites one redex once; all rules preserve the denoted order.

struct RewriteStep {
    std::string rule;
    OrderTerm result;
};

namespace detail {

inline void root_rewrites(const OrderTerm& t, std::vector<RewriteStep>& out) {
    if (t.is_rep() && t.body().is_zero()) {
        out.push_back({"rep_zero", zero()});
        return;
    }
    if (t.kind() == TermKind::ZetaRep) {
        out.push_back({"zeta_expand", sum_raw({omega_star(t.body()), omega(t.body())})});
        return;
    }
    if (t.is_sum()) {
        OrderTerm norm = mk_sum(t.parts());
        if (norm != t) out.push_back({"sum_normalize", norm});
        std::vector<OrderTerm> parts;
        parts = t.parts();
        if (try_absorb_left(parts)) out.push_back({"absorb", mk_sum(parts)});
        parts = t.parts();
        if (try_absorb_right(parts)) out.push_back({"absorb_star", mk_sum(parts)});
        parts = t.parts();
        if (try_drop_left(parts)) out.push_back({"drop_absorbable", mk_sum(parts)});
        parts = t.parts();
        if (try_drop_right(parts)) out.push_back({"drop_absorbable_star", mk_sum(parts)});
        return;
    }
    if (t.kind() == TermKind::OmegaRep || t.kind() == TermKind::OmegaStarRep) {
        auto w = letters_of(t.body());
        if (!w || w->empty()) return;
        std::vector<OrderTerm> u = primitive_root(*w);
        if (u.size() != w->size()) {
            out.push_back({"power_collapse", rep(t.kind(), mk_sum(u))});
            return;  // rotate applies to primitive bodies only
        }
        std::size_t i = least_rotation_index(u);
        if (i != 0) {
            std::vector<OrderTerm> rot(u.begin() + static_cast<long>(i), u.end());
            rot.insert(rot.end(), u.begin(), u.begin() + static_cast<long>(i));
            if (t.kind() == TermKind::OmegaRep) {
                std::vector<OrderTerm> parts(u.begin(), u.begin() + static_cast<long>(i));
                parts.push_back(omega(mk_sum(rot)));
                out.push_back({"rotate", sum_raw(std::move(parts))});
            } else {
                std::vector<OrderTerm> parts;
                parts.push_back(omega_star(mk_sum(rot)));
                parts.insert(parts.end(), u.begin() + static_cast<long>(i), u.end());
                out.push_back({"rotate_star", sum_raw(std::move(parts))});
            }
        }
    }
}

inline void collect_rewrites(const OrderTerm& t,
                             const std::function<OrderTerm(const OrderTerm&)>& wrap,
                             std::vector<RewriteStep>& out) {
    std::vector<RewriteStep> here;
    root_rewrites(t, here);
    for (auto& s : here) out.push_back({s.rule, wrap(s.result)});
    if (t.is_sum()) {
        for (std::size_t i = 0; i < t.parts().size(); ++i) {
            collect_rewrites(
                t.parts()[i],
                [&, i](const OrderTerm& r) {
                    std::vector<OrderTerm> ps = t.parts();
                    ps[i] = r;
                    return wrap(sum_raw(std::move(ps)));
                },
                out);
        }
    } else if (t.is_rep()) {
        collect_rewrites(
            t.body(), [&](const OrderTerm& r) { return wrap(rep(t.kind(), r)); }, out);
    }
}

}  // namespace detail

// All single-rule applications at any redex of t.
inline std::vector<RewriteStep> single_rule_rewrites(const OrderTerm& t) {
    std::vector<RewriteStep> out;
    detail::collect_rewrites(
        t, [](const OrderTerm& r) { return r; }, out);
    return out;
}

// ── isomorphism ─────────────────────────────────────────────────────────────

enum class IsoStatus { Isomorphic, NonIsomorphic, Unknown };

struct IsoVerdict {
    IsoStatus status = IsoStatus::Unknown;
    OrderTerm canonical;       // set when Isomorphic
    std::string certificate;   // set when NonIsomorphic

    bool isomorphic() const { return status == IsoStatus::Isomorphic; }
};

namespace detail {

inline std::string flags_str(const EndFlags& f) {
    std::string s = "{min:";
    s += f.has_min ? "true" : "false";
    s += ",max:";
    s += f.has_max ? "true" : "false";
    if (f.is_empty) s += ",empty";
    if (f.finite_size) s += ",size:" + std::to_string(*f.finite_size);
    s += "}";
    return s;
}

inline std::string count_str(std::uint32_t c) {
    return c == kInfinitelyMany ? "inf" : std::to_string(c);
}

}  // namespace detail

inline IsoVerdict iso_terms(const OrderTerm& a, const OrderTerm& b) {
    OrderTerm ca = canonicalize(a);
    OrderTerm cb = canonicalize(b);
    if (ca == cb) return IsoVerdict{IsoStatus::Isomorphic, ca, ""};
    EndFlags fa = end_flags(a);
    EndFlags fb = end_flags(b);
    if (fa.is_empty != fb.is_empty)
        return IsoVerdict{IsoStatus::NonIsomorphic, {},
                          std::string("emptiness: ") + (fa.is_empty ? "empty" : "nonempty") +
                              " vs " + (fb.is_empty ? "empty" : "nonempty")};
    InvariantSignature sa = invariant_signature(a);
    InvariantSignature sb = invariant_signature(b);
    if (sa.rank != sb.rank)
        return IsoVerdict{IsoStatus::NonIsomorphic, {},
                          "rank: " + std::to_string(sa.rank) + " vs " + std::to_string(sb.rank)};
    if (!(sa.flags == sb.flags))
        return IsoVerdict{IsoStatus::NonIsomorphic, {},
                          "end_flags: " + detail::flags_str(sa.flags) + " vs " +
                              detail::flags_str(sb.flags)};
    for (std::size_t i = 0; i < sa.chain.size(); ++i) {
        if (!(sa.chain[i] == sb.chain[i])) {
            std::string cert = "derivative_signature[step " + std::to_string(i + 1) + "]: ";
            if (!(sa.chain[i].flags == sb.chain[i].flags))
                cert += detail::flags_str(sa.chain[i].flags) + " vs " +
                        detail::flags_str(sb.chain[i].flags);
            else
                cert += "singletons " + detail::count_str(sa.chain[i].singleton_count) + " vs " +
                        detail::count_str(sb.chain[i].singleton_count);
            return IsoVerdict{IsoStatus::NonIsomorphic, {}, cert};
        }
    }
    return IsoVerdict{IsoStatus::Unknown, {}, ""};
}

// Complete iff the Dedekind hull changes nothing up to isomorphism.
inline bool is_complete(const OrderTerm& t) {
    IsoVerdict v = iso_terms(complete_hull(t), t);
    switch (v.status) {
        case IsoStatus::Isomorphic: return true;
        case IsoStatus::NonIsomorphic: return false;
        default: throw IndeterminateError("is_complete: indeterminate isomorphism verdict");
    }
}

}  // namespace ordercalc
