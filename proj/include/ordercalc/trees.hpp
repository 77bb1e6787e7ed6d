// ============================================================================
// ordercalc/trees.hpp — regular scattered order trees and Z-trees
// ============================================================================
//
// RegTree: rooted tree whose children form a regular word (an OrderTerm of
// rank <= 1, i.e. a suborder of Z).  In the word, a default atom is a leaf
// child and an atom labeled "s<i>" refers to subs()[i].  A leaf has word
// Zero.
//
// ZTree: rooted tree whose children sit at Z-positions, eventually periodic
// both ways with finitely many exceptions; isomorphism respects position
// differences, so sibling families compare modulo shift.  Cells index subs(),
// 0 meaning "no child here".
//
// Canonicalization interns subtrees through their serializations; sibling
// words/lassos are then canonicalized with serializations as the letter
// alphabet, making tree equality a string comparison.  Serializations use
// balanced {...} nesting and are injective on canonical trees.
// ============================================================================

#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <string>

#include <nlohmann/json.hpp>

#include "lasso.hpp"
#include "term_rewrite.hpp"

namespace ordercalc {

using json = nlohmann::json;

// ── RegTree ─────────────────────────────────────────────────────────────────

class RegTree {
public:
    RegTree() : word_(zero()) {}  // leaf

    RegTree(OrderTerm word, std::vector<RegTree> subs)
        : word_(std::move(word)), subs_(std::move(subs)) {
        validate();
    }

    static RegTree leaf() { return RegTree(); }

    bool is_leaf() const { return word_.is_zero(); }
    const OrderTerm& word() const { return word_; }
    const std::vector<RegTree>& subs() const { return subs_; }

private:
    void validate() const {
        if (word_.is_zero()) {
            if (!subs_.empty()) throw DomainError("RegTree: leaf with subtrees");
            return;
        }
        if (rank(word_) > 1) throw DomainError("RegTree: child word is not a suborder of Z");
        check_labels(word_);
    }
    void check_labels(const OrderTerm& t) const {
        if (t.is_atom() && !t.is_default_atom()) {
            const std::string& l = t.label();
            if (l.size() < 2 || l[0] != 's')
                throw DomainError("RegTree: word labels must be s<i> or default");
            std::size_t i = std::stoul(l.substr(1));
            if (i >= subs_.size()) throw DomainError("RegTree: dangling subtree reference");
            return;
        }
        if (t.is_sum() || t.is_rep())
            for (const auto& p : t.parts()) check_labels(p);
    }

    OrderTerm word_;
    std::vector<RegTree> subs_;
};

inline unsigned tree_rank(const RegTree& t) {
    if (t.is_leaf()) return 1;
    unsigned m = 0;
    // default atoms in the word are leaf children
    std::function<void(const OrderTerm&)> scan = [&](const OrderTerm& w) {
        if (w.is_atom()) {
            unsigned r = w.is_default_atom()
                             ? 1u
                             : tree_rank(t.subs()[std::stoul(w.label().substr(1))]);
            m = std::max(m, r);
        } else if (w.kind() == TermKind::Fin) {
            m = std::max(m, 1u);
        } else if (w.is_sum() || w.is_rep()) {
            for (const auto& p : w.parts()) scan(p);
        }
    };
    scan(t.word());
    return 1 + m;
}

namespace detail {

// Serialize a word whose atom labels are themselves subtree serializations.
inline void word_serial(const OrderTerm& t, std::string& out) {
    switch (t.kind()) {
        case TermKind::Zero: out += '0'; break;
        case TermKind::Atom:
            if (t.is_default_atom())
                out += '1';
            else {
                out += '{';
                out += t.label();
                out += '}';
            }
            break;
        case TermKind::Fin: out += std::to_string(t.fin_count()); break;
        case TermKind::Sum: {
            bool first = true;
            for (const auto& p : t.parts()) {
                if (!first) out += '+';
                first = false;
                word_serial(p, out);
            }
            break;
        }
        case TermKind::OmegaRep:
        case TermKind::OmegaStarRep:
        case TermKind::ZetaRep:
            out += t.kind() == TermKind::OmegaRep ? "w(" :
                   t.kind() == TermKind::OmegaStarRep ? "ws(" : "z(";
            word_serial(t.body(), out);
            out += ')';
            break;
    }
}

inline OrderTerm relabel_word(const OrderTerm& t,
                              const std::function<std::string(const std::string&)>& f) {
    switch (t.kind()) {
        case TermKind::Zero:
        case TermKind::Fin: return t;
        case TermKind::Atom: return t.is_default_atom() ? t : atom(f(t.label()));
        case TermKind::Sum: {
            std::vector<OrderTerm> ps;
            for (const auto& p : t.parts()) ps.push_back(relabel_word(p, f));
            return sum_raw(std::move(ps));
        }
        default: return rep(t.kind(), relabel_word(t.body(), f));
    }
}

inline void collect_labels(const OrderTerm& t, std::vector<std::string>& out) {
    if (t.is_atom()) {
        if (!t.is_default_atom() &&
            std::find(out.begin(), out.end(), t.label()) == out.end())
            out.push_back(t.label());
        return;
    }
    if (t.is_sum() || t.is_rep())
        for (const auto& p : t.parts()) collect_labels(p, out);
}

}  // namespace detail

struct CanonRegTree {
    RegTree tree;
    std::string serial;
};

inline CanonRegTree tree_canon_impl(const RegTree& t) {
    if (t.is_leaf()) return {RegTree::leaf(), "L"};
    std::vector<CanonRegTree> cs;
    cs.reserve(t.subs().size());
    for (const auto& s : t.subs()) cs.push_back(tree_canon_impl(s));
    // letters become subtree serializations; the frozen term order then makes
    // rotation normalization structural
    OrderTerm labeled = detail::relabel_word(t.word(), [&](const std::string& l) {
        return cs[std::stoul(l.substr(1))].serial;
    });
    OrderTerm cword = canonicalize(labeled);
    std::vector<std::string> used;
    detail::collect_labels(cword, used);
    std::vector<RegTree> subs;
    std::map<std::string, std::size_t> index;
    for (const auto& serial : used) {
        index[serial] = subs.size();
        for (const auto& c : cs)
            if (c.serial == serial) {
                subs.push_back(c.tree);
                break;
            }
    }
    OrderTerm final_word = detail::relabel_word(
        cword, [&](const std::string& serial) { return "s" + std::to_string(index[serial]); });
    std::string serial = "N[";
    detail::word_serial(cword, serial);  // cword's labels are subtree serializations
    serial += "]";
    return {RegTree(final_word, std::move(subs)), serial};
}

inline RegTree tree_canon(const RegTree& t) { return tree_canon_impl(t).tree; }

inline std::string tree_serial(const RegTree& t) { return tree_canon_impl(t).serial; }

inline bool tree_iso(const RegTree& a, const RegTree& b) {
    return tree_serial(a) == tree_serial(b);
}

// ── ZTree ───────────────────────────────────────────────────────────────────

class ZTree {
public:
    ZTree() : children_(LassoZ<int>::constant(0)) {}  // leaf

    ZTree(LassoZ<int> cells, std::vector<ZTree> subs)
        : children_(std::move(cells)), subs_(std::move(subs)) {
        auto chk = [&](const std::vector<int>& v) {
            for (int c : v)
                if (c < 0 || c > (int)subs_.size())
                    throw DomainError("ZTree: cell out of range");
        };
        chk(children_.left);
        chk(children_.mid);
        chk(children_.right);
    }

    static ZTree leaf() { return ZTree(); }

    // child at a position: 0 = none, k = subs()[k-1]
    const LassoZ<int>& cells() const { return children_; }
    const std::vector<ZTree>& subs() const { return subs_; }

    bool is_leaf() const {
        auto all0 = [](const std::vector<int>& v) {
            for (int c : v)
                if (c != 0) return false;
            return true;
        };
        return all0(children_.left) && all0(children_.mid) && all0(children_.right);
    }

private:
    LassoZ<int> children_;
    std::vector<ZTree> subs_;
};

inline unsigned tree_rank(const ZTree& t) {
    if (t.is_leaf()) return 1;
    unsigned m = 0;
    std::vector<bool> used(t.subs().size() + 1, false);
    auto mark = [&](const std::vector<int>& v) {
        for (int c : v) used[(size_t)c] = true;
    };
    mark(t.cells().left);
    mark(t.cells().mid);
    mark(t.cells().right);
    for (std::size_t k = 1; k < used.size(); ++k)
        if (used[k]) m = std::max(m, tree_rank(t.subs()[k - 1]));
    return 1 + m;
}

struct CanonZTree {
    ZTree tree;
    std::string serial;
};

inline CanonZTree ztree_canon_impl(const ZTree& t) {
    if (t.is_leaf()) return {ZTree::leaf(), "ZL"};
    std::vector<CanonZTree> cs;
    for (const auto& s : t.subs()) cs.push_back(ztree_canon_impl(s));
    // dense ids ordered by serialization; 0 stays "missing"
    std::vector<std::string> sorted;
    for (const auto& c : cs) sorted.push_back(c.serial);
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    auto id_of = [&](int cell) -> int {
        if (cell == 0) return 0;
        const std::string& s = cs[(size_t)cell - 1].serial;
        return 1 + (int)(std::lower_bound(sorted.begin(), sorted.end(), s) - sorted.begin());
    };
    LassoZ<int> mapped = t.cells();
    for (auto* v : {&mapped.left, &mapped.mid, &mapped.right})
        for (int& c : *v) c = id_of(c);
    LassoZ<int> canon =
        shift_canonical(mapped, [](int a, int b) { return a < b ? -1 : (a == b ? 0 : 1); });
    std::vector<ZTree> subs;
    for (const auto& s : sorted) {
        for (const auto& c : cs)
            if (c.serial == s) {
                subs.push_back(c.tree);
                break;
            }
    }
    std::string serial = "Z[";
    auto emit = [&](const std::vector<int>& v) {
        for (int c : v) {
            if (c == 0)
                serial += '_';
            else {
                serial += '{';
                serial += sorted[(size_t)c - 1];
                serial += '}';
            }
        }
    };
    emit(canon.left);
    serial += '|';
    emit(canon.mid);
    serial += '|';
    emit(canon.right);
    serial += ']';
    return {ZTree(canon, std::move(subs)), serial};
}

inline ZTree tree_canon(const ZTree& t) { return ztree_canon_impl(t).tree; }
inline std::string tree_serial(const ZTree& t) { return ztree_canon_impl(t).serial; }
inline bool tree_iso(const ZTree& a, const ZTree& b) {
    return tree_serial(a) == tree_serial(b);
}

// ── labelled ZTree ──────────────────────────────────────────────────────────

class LabelledZTree {
public:
    LabelledZTree() : children_(LassoZ<int>::constant(0)) {}
    LabelledZTree(std::string label, LassoZ<int> cells, std::vector<LabelledZTree> subs)
        : label_(std::move(label)), children_(std::move(cells)), subs_(std::move(subs)) {}

    static LabelledZTree leaf(std::string label) {
        LabelledZTree t;
        t.label_ = std::move(label);
        return t;
    }

    const std::string& label() const { return label_; }
    const LassoZ<int>& cells() const { return children_; }
    const std::vector<LabelledZTree>& subs() const { return subs_; }

    bool is_leaf() const {
        for (auto* v : {&children_.left, &children_.mid, &children_.right})
            for (int c : *v)
                if (c != 0) return false;
        return true;
    }

private:
    std::string label_ = "0";
    LassoZ<int> children_;
    std::vector<LabelledZTree> subs_;
};

inline std::string tree_serial(const LabelledZTree& t);

inline std::string lztree_serial_impl(const LabelledZTree& t) {
    if (t.is_leaf()) return "ZL(" + t.label() + ")";
    std::vector<std::string> cs;
    for (const auto& s : t.subs()) cs.push_back(tree_serial(s));
    std::vector<std::string> sorted = cs;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    LassoZ<int> mapped = t.cells();
    for (auto* v : {&mapped.left, &mapped.mid, &mapped.right})
        for (int& c : *v)
            if (c != 0)
                c = 1 + (int)(std::lower_bound(sorted.begin(), sorted.end(), cs[(size_t)c - 1]) -
                              sorted.begin());
    LassoZ<int> canon =
        shift_canonical(mapped, [](int a, int b) { return a < b ? -1 : (a == b ? 0 : 1); });
    std::string out = "Z(" + t.label() + ")[";
    auto emit = [&](const std::vector<int>& v) {
        for (int c : v) {
            if (c == 0)
                out += '_';
            else
                out += '{' + sorted[(size_t)c - 1] + '}';
        }
    };
    emit(canon.left);
    out += '|';
    emit(canon.mid);
    out += '|';
    emit(canon.right);
    out += ']';
    return out;
}

inline std::string tree_serial(const LabelledZTree& t) { return lztree_serial_impl(t); }
inline bool tree_iso(const LabelledZTree& a, const LabelledZTree& b) {
    return tree_serial(a) == tree_serial(b);
}

unsigned tree_rank(const LabelledZTree&) = delete;  // not needed; avoid surprises

// ── JSON ────────────────────────────────────────────────────────────────────
// {"kind": "reg"|"z", "label": s?, "children": [
//    {"pos": <int>, "tree": T, "label": s?},            exceptional cells
//    {"pos": {"period": [T|null,...], "side": "L"|"R"}} periodic tails
// ]}
// Leaves have "children": [].  For "reg" trees positions are order-only and
// must be consecutive; "z" trees may leave gaps (missing children) and omit
// "tree" as null inside periods.

json tree_to_json(const ZTree& t);
json tree_to_json(const RegTree& t);

namespace detail {

template <class Tree, class CellToJson>
json lasso_children_json(const LassoZ<int>& cells, CellToJson cell_json, bool include_missing) {
    json out = json::array();
    bool left_trivial = cells.left.size() == 1 && cells.left[0] == 0;
    bool right_trivial = cells.right.size() == 1 && cells.right[0] == 0;
    if (!left_trivial) {
        json period = json::array();
        for (int c : cells.left) period.push_back(c == 0 ? json(nullptr) : cell_json(c));
        out.push_back(json{{"pos", json{{"period", period}, {"side", "L"}}}});
    }
    for (std::size_t i = 0; i < cells.mid.size(); ++i) {
        int c = cells.mid[i];
        if (c == 0 && !include_missing) continue;
        json e;
        e["pos"] = cells.origin + (long long)i;
        e["tree"] = c == 0 ? json(nullptr) : cell_json(c);
        out.push_back(e);
    }
    if (!right_trivial) {
        json period = json::array();
        for (int c : cells.right) period.push_back(c == 0 ? json(nullptr) : cell_json(c));
        out.push_back(json{{"pos", json{{"period", period}, {"side", "R"}}}});
    }
    return out;
}

}  // namespace detail

inline json tree_to_json(const ZTree& t) {
    json j;
    j["kind"] = "z";
    // missing cells inside the middle stay explicit: dropping them would
    // rotate the tail phases
    j["children"] = detail::lasso_children_json<ZTree>(
        t.cells(), [&](int c) { return tree_to_json(t.subs()[(size_t)c - 1]); }, true);
    return j;
}

inline ZTree ztree_from_json(const json& j);

namespace detail {

// Shared child-list decoding: returns cells plus parsed subtree jsons.
struct ParsedChildren {
    LassoZ<int> cells = LassoZ<int>::constant(0);
    std::vector<json> subs;  // index = cell-1
};

inline ParsedChildren parse_children(const json& j) {
    ParsedChildren out;
    std::vector<int> left{0}, right{0};
    std::map<long long, int> mid_cells;
    auto cell_of = [&](const json& t) -> int {
        if (t.is_null()) return 0;
        out.subs.push_back(t);
        return (int)out.subs.size();
    };
    for (const auto& e : j) {
        if (!e.contains("pos")) throw DomainError("tree json: child without pos");
        if (e["pos"].is_object()) {
            const json& p = e["pos"];
            std::string side = p.at("side").get<std::string>();
            std::vector<int> period;
            for (const auto& c : p.at("period")) period.push_back(cell_of(c));
            if (period.empty()) throw DomainError("tree json: empty period");
            if (side == "L")
                left = period;
            else if (side == "R")
                right = period;
            else
                throw DomainError("tree json: side must be L or R");
        } else {
            long long pos = e["pos"].get<long long>();
            mid_cells[pos] = cell_of(e.contains("tree") ? e["tree"] : json(nullptr));
        }
    }
    std::vector<int> mid;
    long long origin = 0;
    if (!mid_cells.empty()) {
        origin = mid_cells.begin()->first;
        long long end = mid_cells.rbegin()->first;
        for (long long p = origin; p <= end; ++p) {
            auto it = mid_cells.find(p);
            mid.push_back(it == mid_cells.end() ? 0 : it->second);
        }
    }
    out.cells = LassoZ<int>(left, mid, right, origin);
    return out;
}

}  // namespace detail

inline ZTree ztree_from_json(const json& j) {
    if (j.contains("kind") && j["kind"].get<std::string>() != "z")
        throw DomainError("ztree_from_json: kind mismatch");
    detail::ParsedChildren pc = detail::parse_children(j.value("children", json::array()));
    std::vector<ZTree> subs;
    for (const auto& s : pc.subs) subs.push_back(ztree_from_json(s));
    return ZTree(pc.cells, std::move(subs));
}

// RegTree <-> lasso-of-letters: the canonical rank-<=1 word has the shape
// [ws(u)]? + letters + [w(v)]?.
namespace detail {

struct RegWordLasso {
    std::vector<int> left;  // cells: 0 = leaf child, k = sub k-1
    std::vector<int> mid;
    std::vector<int> right;
    bool has_left = false, has_right = false;
};

inline int reg_letter_cell(const OrderTerm& l) {
    if (l.is_default_atom()) return 0;
    return 1 + (int)std::stoul(l.label().substr(1));
}

inline RegWordLasso reg_word_lasso(const OrderTerm& word) {
    RegWordLasso out;
    OrderTerm w = canonicalize(word);
    std::vector<OrderTerm> parts;
    flatten_into(w, parts);
    std::size_t i = 0, n = parts.size();
    auto letters_cells = [&](const OrderTerm& t) {
        auto ls = detail::letters_of(t);
        if (!ls) throw DomainError("child word too large");
        std::vector<int> cells;
        for (const auto& l : *ls) cells.push_back(reg_letter_cell(l));
        return cells;
    };
    if (n > 0 && parts[0].kind() == TermKind::OmegaStarRep) {
        out.left = letters_cells(parts[0].body());
        out.has_left = true;
        ++i;
    }
    std::vector<OrderTerm> midterms;
    while (i < n && parts[i].kind() != TermKind::OmegaRep) {
        if (parts[i].is_rep()) throw DomainError("child word is not a suborder of Z");
        midterms.push_back(parts[i]);
        ++i;
    }
    if (i < n) {
        if (parts[i].kind() != TermKind::OmegaRep || i + 1 != n)
            throw DomainError("child word is not a suborder of Z");
        out.right = letters_cells(parts[i].body());
        out.has_right = true;
    }
    auto ml = detail::letters_of(mk_sum(midterms));
    if (!ml) throw DomainError("child word too large");
    for (const auto& l : *ml) out.mid.push_back(reg_letter_cell(l));
    return out;
}

}  // namespace detail

inline json tree_to_json(const RegTree& t) {
    json j;
    j["kind"] = "reg";
    json children = json::array();
    if (!t.is_leaf()) {
        detail::RegWordLasso wl = detail::reg_word_lasso(t.word());
        auto cell_json = [&](int c) -> json {
            if (c == 0) return tree_to_json(RegTree::leaf());
            return tree_to_json(t.subs()[(size_t)c - 1]);
        };
        if (wl.has_left) {
            json period = json::array();
            for (int c : wl.left) period.push_back(cell_json(c));
            children.push_back(json{{"pos", json{{"period", period}, {"side", "L"}}}});
        }
        for (std::size_t i = 0; i < wl.mid.size(); ++i)
            children.push_back(json{{"pos", (long long)i}, {"tree", cell_json(wl.mid[i])}});
        if (wl.has_right) {
            json period = json::array();
            for (int c : wl.right) period.push_back(cell_json(c));
            children.push_back(json{{"pos", json{{"period", period}, {"side", "R"}}}});
        }
    }
    j["children"] = children;
    return j;
}

inline RegTree regtree_from_json(const json& j) {
    if (j.contains("kind") && j["kind"].get<std::string>() != "reg")
        throw DomainError("regtree_from_json: kind mismatch");
    json children = j.value("children", json::array());
    if (children.empty()) return RegTree::leaf();
    detail::ParsedChildren pc = detail::parse_children(children);
    std::vector<RegTree> subs;
    std::vector<OrderTerm> letters_by_cell;  // letter for cell k (k >= 1)
    for (const auto& s : pc.subs) {
        RegTree sub = regtree_from_json(s);
        if (sub.is_leaf()) {
            letters_by_cell.push_back(atom());
        } else {
            letters_by_cell.push_back(atom("s" + std::to_string(subs.size())));
            subs.push_back(std::move(sub));
        }
    }
    auto letter = [&](int c) -> OrderTerm {
        if (c == 0) throw DomainError("reg tree json: gaps are not allowed in child words");
        return letters_by_cell[(size_t)c - 1];
    };
    std::vector<OrderTerm> parts;
    bool left_trivial = pc.cells.left.size() == 1 && pc.cells.left[0] == 0;
    bool right_trivial = pc.cells.right.size() == 1 && pc.cells.right[0] == 0;
    if (!left_trivial) {
        std::vector<OrderTerm> ls;
        for (int c : pc.cells.left) ls.push_back(letter(c));
        parts.push_back(omega_star(mk_sum(ls)));
    }
    for (int c : pc.cells.mid) parts.push_back(letter(c));
    if (!right_trivial) {
        std::vector<OrderTerm> rs;
        for (int c : pc.cells.right) rs.push_back(letter(c));
        parts.push_back(omega(mk_sum(rs)));
    }
    return RegTree(mk_sum(parts), std::move(subs));
}

}  // namespace ordercalc
