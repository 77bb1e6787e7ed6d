// ============================================================================
// ordercalc/term.hpp — term algebra for regular scattered linear orders
// ============================================================================
//
// A term denotes a countable scattered linear order built from:
//
//   Zero            the empty order
//   Atom            a single point (label "1"; other labels = colored points,
//                   used as letters when words index tree children)
//   Fin(n)          n consecutive points, n >= 2
//   Sum[t1..tk]     concatenation, k >= 2
//   OmegaRep(A)     A + A + A + ...            (omega copies)
//   OmegaStarRep(A) ... + A + A + A            (omega* copies)
//   ZetaRep(A)      Z-indexed copies of A; definitionally OmegaStarRep(A)
//                   followed by OmegaRep(A)
//
// Terms are immutable values sharing structure through shared_ptr.  A fixed
// total order on terms (constructor tag, then recursive comparison) is frozen
// here; canonical forms elsewhere depend on it and must not change.
// ============================================================================

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ordercalc {

enum class TermKind : std::uint8_t {
    Zero = 0,
    Atom = 1,
    Fin = 2,
    Sum = 3,
    OmegaRep = 4,
    OmegaStarRep = 5,
    ZetaRep = 6
};

inline const char* term_kind_name(TermKind k) {
    switch (k) {
        case TermKind::Zero: return "Zero";
        case TermKind::Atom: return "Atom";
        case TermKind::Fin: return "Fin";
        case TermKind::Sum: return "Sum";
        case TermKind::OmegaRep: return "OmegaRep";
        case TermKind::OmegaStarRep: return "OmegaStarRep";
        case TermKind::ZetaRep: return "ZetaRep";
    }
    return "?";
}

class OrderTerm;

struct TermNode {
    TermKind kind;
    std::string label;             // Atom only; "1" is the default point label
    std::uint64_t count = 0;       // Fin only
    std::vector<OrderTerm> parts;  // Sum: >= 2 entries; repetitions: 1 entry
};

inline constexpr const char* kDefaultAtomLabel = "1";

class OrderTerm {
public:
    OrderTerm() : node_(zero_node()) {}

    TermKind kind() const { return node_->kind; }
    const std::string& label() const { return node_->label; }
    std::uint64_t fin_count() const { return node_->count; }
    const std::vector<OrderTerm>& parts() const { return node_->parts; }
    const OrderTerm& body() const { return node_->parts.front(); }

    bool is_zero() const { return kind() == TermKind::Zero; }
    bool is_atom() const { return kind() == TermKind::Atom; }
    bool is_default_atom() const { return is_atom() && node_->label == kDefaultAtomLabel; }
    bool is_sum() const { return kind() == TermKind::Sum; }
    bool is_rep() const {
        return kind() == TermKind::OmegaRep || kind() == TermKind::OmegaStarRep ||
               kind() == TermKind::ZetaRep;
    }

    static OrderTerm make(TermNode n) {
        return OrderTerm(std::make_shared<const TermNode>(std::move(n)));
    }

    friend int compare(const OrderTerm& a, const OrderTerm& b);
    friend bool operator==(const OrderTerm& a, const OrderTerm& b) { return compare(a, b) == 0; }
    friend bool operator!=(const OrderTerm& a, const OrderTerm& b) { return compare(a, b) != 0; }
    friend bool operator<(const OrderTerm& a, const OrderTerm& b) { return compare(a, b) < 0; }

private:
    explicit OrderTerm(std::shared_ptr<const TermNode> n) : node_(std::move(n)) {}
    static const std::shared_ptr<const TermNode>& zero_node() {
        static const std::shared_ptr<const TermNode> z =
            std::make_shared<const TermNode>(TermNode{TermKind::Zero, "", 0, {}});
        return z;
    }
    std::shared_ptr<const TermNode> node_;
};

// ── literal constructors ────────────────────────────────────────────────────

inline OrderTerm zero() { return OrderTerm(); }

inline OrderTerm atom(const std::string& label = kDefaultAtomLabel) {
    return OrderTerm::make(TermNode{TermKind::Atom, label, 0, {}});
}

// fin(0) = Zero, fin(1) = Atom: one-point finite orders have no Fin node.
inline OrderTerm fin(std::uint64_t n) {
    if (n == 0) return zero();
    if (n == 1) return atom();
    return OrderTerm::make(TermNode{TermKind::Fin, "", n, {}});
}

// Literal sum node; most code wants mk_sum (term_ops.hpp) instead.
inline OrderTerm sum_raw(std::vector<OrderTerm> parts) {
    if (parts.empty()) return zero();
    if (parts.size() == 1) return parts.front();
    return OrderTerm::make(TermNode{TermKind::Sum, "", 0, std::move(parts)});
}

inline OrderTerm omega(OrderTerm body) {
    return OrderTerm::make(TermNode{TermKind::OmegaRep, "", 0, {std::move(body)}});
}
inline OrderTerm omega_star(OrderTerm body) {
    return OrderTerm::make(TermNode{TermKind::OmegaStarRep, "", 0, {std::move(body)}});
}
inline OrderTerm zeta(OrderTerm body) {
    return OrderTerm::make(TermNode{TermKind::ZetaRep, "", 0, {std::move(body)}});
}

inline OrderTerm rep(TermKind k, OrderTerm body) {
    switch (k) {
        case TermKind::OmegaRep: return omega(std::move(body));
        case TermKind::OmegaStarRep: return omega_star(std::move(body));
        case TermKind::ZetaRep: return zeta(std::move(body));
        default: throw std::logic_error("rep: not a repetition kind");
    }
}

// ── frozen total order ──────────────────────────────────────────────────────
// Tag order Zero < Atom < Fin < Sum < OmegaRep < OmegaStarRep < ZetaRep, then
// label / count / lexicographic parts.  Rotation tie-breaking in the rewrite
// engine relies on this order being stable.

inline int compare(const OrderTerm& a, const OrderTerm& b) {
    if (a.node_ == b.node_) return 0;
    if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
    switch (a.kind()) {
        case TermKind::Zero: return 0;
        case TermKind::Atom:
            return a.label() < b.label() ? -1 : (a.label() == b.label() ? 0 : 1);
        case TermKind::Fin:
            return a.fin_count() < b.fin_count() ? -1 : (a.fin_count() == b.fin_count() ? 0 : 1);
        default: {
            const auto& pa = a.parts();
            const auto& pb = b.parts();
            size_t n = std::min(pa.size(), pb.size());
            for (size_t i = 0; i < n; ++i) {
                int c = compare(pa[i], pb[i]);
                if (c != 0) return c;
            }
            if (pa.size() != pb.size()) return pa.size() < pb.size() ? -1 : 1;
            return 0;
        }
    }
}

inline std::size_t hash_value(const OrderTerm& t) {
    auto mix = [](std::size_t h, std::size_t v) {
        return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
    };
    std::size_t h = static_cast<std::size_t>(t.kind());
    switch (t.kind()) {
        case TermKind::Atom: h = mix(h, std::hash<std::string>{}(t.label())); break;
        case TermKind::Fin: h = mix(h, static_cast<std::size_t>(t.fin_count())); break;
        default:
            for (const auto& p : t.parts()) h = mix(h, hash_value(p));
            break;
    }
    return h;
}

struct OrderTermHash {
    std::size_t operator()(const OrderTerm& t) const { return hash_value(t); }
};

// Structural size: Zero/Atom = 1, Fin n = n, Sum = sum of parts,
// repetition = 1 + body.  rank(t) <= size(t) on the whole fragment.
inline std::uint64_t term_size(const OrderTerm& t) {
    switch (t.kind()) {
        case TermKind::Zero:
        case TermKind::Atom: return 1;
        case TermKind::Fin: return t.fin_count();
        case TermKind::Sum: {
            std::uint64_t s = 0;
            for (const auto& p : t.parts()) s += term_size(p);
            return s;
        }
        default: return 1 + term_size(t.body());
    }
}

inline bool has_labeled_atoms(const OrderTerm& t) {
    switch (t.kind()) {
        case TermKind::Zero:
        case TermKind::Fin: return false;
        case TermKind::Atom: return !t.is_default_atom();
        default:
            for (const auto& p : t.parts())
                if (has_labeled_atoms(p)) return true;
            return false;
    }
}

// ── errors ──────────────────────────────────────────────────────────────────

struct ParseError : std::runtime_error {
    std::size_t pos;
    ParseError(const std::string& msg, std::size_t p)
        : std::runtime_error(msg + " at position " + std::to_string(p)), pos(p) {}
};

// Precondition violations: drop_min without a minimum, rank of the empty
// order, sot_to_ztree below rank 3, schema mismatches.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An Unknown isomorphism verdict surfacing where a definite answer is needed.
struct IndeterminateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Image not finitely presentable (e.g. aperiodic class family in r_zjump_to_fs).
struct RepresentabilityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ── rendering ───────────────────────────────────────────────────────────────
// Emits the ASCII grammar: 0 | 1 | INT | t+t | w(t) | ws(t) | z(t) | atom(id).

inline void render_term(const OrderTerm& t, std::string& out) {
    switch (t.kind()) {
        case TermKind::Zero: out += '0'; break;
        case TermKind::Atom:
            if (t.is_default_atom()) {
                out += '1';
            } else {
                out += "atom(";
                out += t.label();
                out += ')';
            }
            break;
        case TermKind::Fin: out += std::to_string(t.fin_count()); break;
        case TermKind::Sum: {
            bool first = true;
            for (const auto& p : t.parts()) {
                if (!first) out += '+';
                first = false;
                render_term(p, out);
            }
            break;
        }
        case TermKind::OmegaRep:
            out += "w(";
            render_term(t.body(), out);
            out += ')';
            break;
        case TermKind::OmegaStarRep:
            out += "ws(";
            render_term(t.body(), out);
            out += ')';
            break;
        case TermKind::ZetaRep:
            out += "z(";
            render_term(t.body(), out);
            out += ')';
            break;
    }
}

inline std::string render_term(const OrderTerm& t) {
    std::string s;
    render_term(t, s);
    return s;
}

// ── parsing ─────────────────────────────────────────────────────────────────
// term := primary ('+' primary)*, '+' flattened left to right into one Sum.
// primary := INT | 'w(' term ')' | 'ws(' term ')' | 'z(' term ')'
//          | 'atom(' IDENT ')'

namespace detail {

class TermParser {
public:
    explicit TermParser(std::string_view s) : s_(s) {}

    OrderTerm parse() {
        OrderTerm t = parse_sum();
        skip_ws();
        if (pos_ != s_.size()) throw ParseError("trailing input", pos_);
        return t;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\n' ||
                                    s_[pos_] == '\r'))
            ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!eat(c)) throw ParseError(std::string("expected '") + c + "'", pos_);
    }

    OrderTerm parse_sum() {
        std::vector<OrderTerm> parts;
        parts.push_back(parse_primary());
        while (eat('+')) parts.push_back(parse_primary());
        if (parts.size() == 1) return parts.front();
        return sum_raw(std::move(parts));
    }

    OrderTerm parse_primary() {
        skip_ws();
        if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
        char c = s_[pos_];
        if (c == '-') throw ParseError("integer literal < 0", pos_);
        if (c >= '0' && c <= '9') return parse_int();
        if (is_ident_start(c)) return parse_keyword();
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    OrderTerm parse_int() {
        std::size_t start = pos_;
        std::uint64_t v = 0;
        while (pos_ < s_.size() && s_[pos_] >= '0' && s_[pos_] <= '9') {
            std::uint64_t d = static_cast<std::uint64_t>(s_[pos_] - '0');
            if (v > (UINT64_MAX - d) / 10) throw ParseError("integer literal too large", start);
            v = v * 10 + d;
            ++pos_;
        }
        return fin(v);
    }

    static bool is_ident_start(char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
    }
    static bool is_ident_char(char c) {
        return is_ident_start(c) || (c >= '0' && c <= '9');
    }

    std::string parse_ident() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && is_ident_char(s_[pos_])) ++pos_;
        if (pos_ == start) throw ParseError("expected identifier", pos_);
        return std::string(s_.substr(start, pos_ - start));
    }

    OrderTerm parse_keyword() {
        std::size_t start = pos_;
        std::string id = parse_ident();
        if (id == "w" || id == "ws" || id == "z") {
            expect('(');
            OrderTerm b = parse_sum();
            expect(')');
            if (id == "w") return omega(b);
            if (id == "ws") return omega_star(b);
            return zeta(b);
        }
        if (id == "atom") {
            expect('(');
            std::string lbl = parse_ident();
            expect(')');
            return atom(lbl);
        }
        throw ParseError("unknown constructor '" + id + "'", start);
    }
};

}  // namespace detail

inline OrderTerm parse_term(std::string_view text) { return detail::TermParser(text).parse(); }

}  // namespace ordercalc
