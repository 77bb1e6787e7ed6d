// ============================================================================
// ordercalc/order_tree_maps.hpp — encodings between orders, trees and Z-trees
// ============================================================================
//
// order_to_tree    condensation tree: level-k nodes are the k-th derivative's
//                  classes, children inherited, points at the leaves.
//                  Separator residue left by tree_to_order is pruned.
//
// tree_to_order    encodes a tree as an order whose condensation tree gives
//                  the tree back.  Each child block of a height-h node is
//                  followed by a separator graded to the height,
//                  SEP_h = Z_(h-2) + 1 + Z_(h-2) with Z_m the m-fold nested
//                  zeta order; height-2 nodes encode their leaf word bare.
//                  The separator's middle point is the unique singleton class
//                  at every condensation level it survives to.  The complete
//                  variant pads separators with endpoints
//                  (1 + Z' + 1 + Z' + 1) so the image is Dedekind complete.
//
// sot_to_ztree     rank-(2+a) order trees <-> rank-(1+a) Z-trees.  The bottom
// ztree_to_sot     two tree levels carry more shape than Z-tree positions
//                  hold, so height-<=3 nodes become slot codes: each child
//                  turns into a fixed-width bit block ("1111" sync + the
//                  child's leaf-word profile), children of taller nodes embed
//                  into positions directly, leaves become missing positions.
//
// label_encode     labelled Z-trees into plain ones: each node grows a spine
//                  child at 0 carrying the original children and gadget
//                  leaves at g(label), with {0} u g(a) pairwise non-shift-
//                  isomorphic across labels.
// ============================================================================

#pragma once

#include "condense.hpp"
#include "trees.hpp"

namespace ordercalc {

// ── nested zeta towers and separators ───────────────────────────────────────

inline OrderTerm zeta_tower(unsigned m) {
    OrderTerm t = atom();
    for (unsigned i = 0; i < m; ++i) t = zeta(t);
    return t;
}

// Hull-fixed variant: z(z(...)+1) chains are Dedekind complete.
inline OrderTerm zeta_tower_complete(unsigned m) {
    OrderTerm t = zeta(atom());
    for (unsigned i = 1; i < m; ++i) t = zeta(mk_sum2(t, atom()));
    return t;
}

inline OrderTerm separator_term(unsigned height, bool complete) {
    if (height < 3) throw DomainError("separator_term: defined for heights >= 3");
    unsigned m = height - 2;
    if (!complete) {
        OrderTerm z = zeta_tower(m);
        return sum_raw({z, atom(), z});
    }
    OrderTerm z = zeta_tower_complete(m);
    return sum_raw({atom(), z, atom(), z, atom()});
}

// ── tree_to_order ───────────────────────────────────────────────────────────

namespace detail {

inline OrderTerm replace_letters(const OrderTerm& w,
                                 const std::function<OrderTerm(const OrderTerm&)>& f) {
    switch (w.kind()) {
        case TermKind::Zero: return w;
        case TermKind::Atom: return f(w);
        case TermKind::Fin: {
            std::vector<OrderTerm> out(static_cast<size_t>(w.fin_count()), f(atom()));
            return mk_sum(out);
        }
        case TermKind::Sum: {
            std::vector<OrderTerm> ps;
            for (const auto& p : w.parts()) ps.push_back(replace_letters(p, f));
            return mk_sum(ps);
        }
        default: return mk_rep(w.kind(), replace_letters(w.body(), f));
    }
}

}  // namespace detail

inline OrderTerm tree_to_order(const RegTree& t, bool complete) {
    if (t.is_leaf()) return atom();
    unsigned h = tree_rank(t);
    auto encode_letter = [&](const OrderTerm& letter) -> OrderTerm {
        if (letter.is_default_atom()) return atom();
        const RegTree& sub = t.subs()[std::stoul(letter.label().substr(1))];
        return tree_to_order(sub, complete);
    };
    if (h == 2) return detail::replace_letters(t.word(), encode_letter);
    OrderTerm sep = separator_term(h, complete);
    return detail::replace_letters(t.word(), [&](const OrderTerm& letter) {
        return sum_raw({encode_letter(letter), sep});
    });
}

// ── order_to_tree ───────────────────────────────────────────────────────────

namespace detail {

// Fixed trees whose appearance in a condensation marks separator residue:
// the z-block chain and the middle-point chain of SEP at each level.
inline RegTree zchain_tree(unsigned m) {
    RegTree t(zeta(atom()), {});
    for (unsigned i = 1; i < m; ++i) t = RegTree(zeta(atom("s0")), {t});
    return t;
}

inline RegTree unary_chain_tree(unsigned m) {
    RegTree t(atom(), {});
    for (unsigned i = 1; i < m; ++i) t = RegTree(atom("s0"), {t});
    return t;
}

// Raw word shape of a class content: optional ws-tail, middle letters,
// optional w-tail.  Contents are rank <= 1 by construction.
struct RawWord {
    std::vector<OrderTerm> left;   // ws period letters (empty = none)
    std::vector<OrderTerm> mid;
    std::vector<OrderTerm> right;  // w period letters (empty = none)
};

inline RawWord raw_word(const OrderTerm& content) {
    RawWord out;
    std::vector<OrderTerm> parts;
    flatten_into(content, parts);
    if (parts.size() == 1 && parts[0].kind() == TermKind::ZetaRep) {
        auto ls = letters_of(parts[0].body());
        if (!ls) throw DomainError("order_to_tree: class word too large");
        out.left = *ls;
        out.right = *ls;
        return out;
    }
    std::size_t i = 0, n = parts.size();
    auto grab = [&](const OrderTerm& t) {
        auto ls = letters_of(t);
        if (!ls) throw DomainError("order_to_tree: class word too large");
        return *ls;
    };
    if (n > 0 && parts[0].kind() == TermKind::OmegaStarRep) {
        out.left = grab(parts[0].body());
        ++i;
    }
    while (i < n && !(parts[i].kind() == TermKind::OmegaRep)) {
        if (parts[i].is_rep()) throw DomainError("order_to_tree: class content has rank > 1");
        auto ls = grab(parts[i]);
        out.mid.insert(out.mid.end(), ls.begin(), ls.end());
        ++i;
    }
    if (i < n) {
        if (i + 1 != n) throw DomainError("order_to_tree: class content has rank > 1");
        out.right = grab(parts[i].body());
    }
    return out;
}

struct CondensationTreeBuilder {
    const CondensationLevels& lv;
    std::map<std::pair<unsigned, int>, CanonRegTree> memo;

    CondensationTreeBuilder(const CondensationLevels& l) : lv(l) {}

    CanonRegTree build(unsigned level, int cls) {
        auto key = std::make_pair(level, cls);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        CanonRegTree out = build_uncached(level, cls);
        memo.emplace(key, out);
        return out;
    }

    CanonRegTree build_uncached(unsigned level, int cls) {
        if (level == 0) return {RegTree::leaf(), "L"};
        RawWord w = raw_word(lv.table.content(cls));
        auto subtree = [&](const OrderTerm& letter) {
            return build(level - 1, ClassTable::id_of(letter));
        };
        if (level >= 2) {
            std::string zserial = tree_serial(zchain_tree(level - 1));
            std::string userial = tree_serial(unary_chain_tree(level - 1));
            auto prune = [&](std::vector<OrderTerm>& letters) {
                std::vector<OrderTerm> out;
                std::size_t i = 0;
                while (i < letters.size()) {
                    if (i + 2 < letters.size() && subtree(letters[i]).serial == zserial &&
                        subtree(letters[i + 1]).serial == userial &&
                        subtree(letters[i + 2]).serial == zserial) {
                        i += 3;
                        continue;
                    }
                    out.push_back(letters[i]);
                    ++i;
                }
                letters = std::move(out);
            };
            RawWord pruned = w;
            prune(pruned.left);
            prune(pruned.mid);
            prune(pruned.right);
            bool emptied = pruned.left.empty() && pruned.mid.empty() && pruned.right.empty();
            bool tail_vanished = (!w.left.empty() && pruned.left.empty()) ||
                                 (!w.right.empty() && pruned.right.empty());
            // keep the condensation reading when pruning would erase the word
            // or collapse an infinite tail
            if (!emptied && !tail_vanished) w = std::move(pruned);
        }
        // assemble the node: letters -> subtrees
        std::vector<RegTree> subs;
        std::map<std::string, std::size_t> index;
        auto letter_term = [&](const OrderTerm& l) -> OrderTerm {
            CanonRegTree c = subtree(l);
            if (c.serial == "L") return atom();
            auto it = index.find(c.serial);
            std::size_t k;
            if (it == index.end()) {
                k = subs.size();
                index.emplace(c.serial, k);
                subs.push_back(c.tree);
            } else {
                k = it->second;
            }
            return atom("s" + std::to_string(k));
        };
        std::vector<OrderTerm> parts;
        if (!w.left.empty()) {
            std::vector<OrderTerm> ls;
            for (const auto& l : w.left) ls.push_back(letter_term(l));
            parts.push_back(omega_star(mk_sum(ls)));
        }
        for (const auto& l : w.mid) parts.push_back(letter_term(l));
        if (!w.right.empty()) {
            std::vector<OrderTerm> rs;
            for (const auto& l : w.right) rs.push_back(letter_term(l));
            parts.push_back(omega(mk_sum(rs)));
        }
        RegTree node(mk_sum(parts), std::move(subs));
        return tree_canon_impl(node);
    }
};

}  // namespace detail

inline RegTree order_to_tree(const OrderTerm& L) {
    if (is_empty_order(L)) throw DomainError("order_to_tree: empty order");
    CondensationLevels lv = condensation_levels(L);
    detail::CondensationTreeBuilder builder(lv);
    unsigned top = static_cast<unsigned>(lv.levels.size() - 1);
    int root_cls = ClassTable::id_of(lv.levels.back());
    return builder.build(top, root_cls).tree;
}

// Positions of singleton classes in the first derivative, by provenance;
// used to check that they land exactly on separator middles.
struct SingletonReport {
    std::uint32_t singleton_classes = 0;  // kInfinitelyMany for infinitely many
    std::uint32_t separator_middles = 0;
};

// ── slot coding: order trees <-> Z-trees ────────────────────────────────────

namespace detail {

// Profile of a height-<=2 subtree: leaf, or a node whose leaf word has
// optional tails and k middle points.
struct LeafWordProfile {
    bool is_leaf = false;
    bool left_tail = false, right_tail = false;
    std::uint32_t mids = 0;

    friend bool operator==(const LeafWordProfile&, const LeafWordProfile&) = default;
};

inline LeafWordProfile profile_of(const RegTree& t) {
    LeafWordProfile p;
    if (t.is_leaf()) {
        p.is_leaf = true;
        return p;
    }
    if (tree_rank(t) != 2) throw DomainError("profile_of: height-2 node expected");
    RegWordLasso wl = reg_word_lasso(t.word());
    p.left_tail = wl.has_left;
    p.right_tail = wl.has_right;
    p.mids = (std::uint32_t)wl.mid.size();
    return p;
}

inline RegTree profile_tree(const LeafWordProfile& p) {
    if (p.is_leaf) return RegTree::leaf();
    std::vector<OrderTerm> parts;
    if (p.left_tail) parts.push_back(omega_star(atom()));
    if (p.mids) parts.push_back(fin(p.mids));
    if (p.right_tail) parts.push_back(omega(atom()));
    if (parts.empty()) throw DomainError("profile_tree: empty word");
    return RegTree(mk_sum(parts), {});
}

// bits: 0 -> 10, 1 -> 110; never contains the 1111 sync
inline void push_bit(std::vector<int>& out, bool b) {
    out.push_back(1);
    if (b) out.push_back(1);
    out.push_back(0);
}

inline std::vector<int> slot_bits(const LeafWordProfile& p) {
    std::vector<int> out{1, 1, 1, 1, 0};
    push_bit(out, p.is_leaf);
    if (!p.is_leaf) {
        push_bit(out, p.left_tail);
        push_bit(out, p.right_tail);
        for (std::uint32_t i = 0; i < p.mids; ++i) push_bit(out, true);
        push_bit(out, false);  // unary terminator
    }
    return out;
}

inline std::optional<LeafWordProfile> parse_slot(const std::vector<int>& bits) {
    std::size_t i = 0;
    auto read_bit = [&]() -> std::optional<bool> {
        if (i + 1 < bits.size() && bits[i] == 1 && bits[i + 1] == 1 && i + 2 < bits.size() &&
            bits[i + 2] == 0) {
            i += 3;
            return true;
        }
        if (i + 1 < bits.size() && bits[i] == 1 && bits[i + 1] == 0) {
            i += 2;
            return false;
        }
        return std::nullopt;
    };
    if (bits.size() < 5 || bits[0] != 1 || bits[1] != 1 || bits[2] != 1 || bits[3] != 1 ||
        bits[4] != 0)
        return std::nullopt;
    i = 5;
    LeafWordProfile p;
    auto isleaf = read_bit();
    if (!isleaf) return std::nullopt;
    p.is_leaf = *isleaf;
    if (!p.is_leaf) {
        auto l = read_bit(), r = read_bit();
        if (!l || !r) return std::nullopt;
        p.left_tail = *l;
        p.right_tail = *r;
        while (true) {
            auto b = read_bit();
            if (!b) return std::nullopt;
            if (!*b) break;
            ++p.mids;
        }
        if (!p.left_tail && !p.right_tail && p.mids == 0) return std::nullopt;
    }
    for (; i < bits.size(); ++i)
        if (bits[i] != 0) return std::nullopt;  // zero padding only
    return p;
}

// Encode a node whose children all have height <= 2 as a rank-2 Z-tree.
inline ZTree slot_encode(const RegTree& t) {
    RegWordLasso wl = reg_word_lasso(t.word());
    auto profile_cell = [&](int c) {
        return profile_of(c == 0 ? RegTree::leaf() : t.subs()[(size_t)c - 1]);
    };
    std::size_t width = 0;
    auto measure = [&](const std::vector<int>& cells) {
        for (int c : cells) width = std::max(width, slot_bits(profile_cell(c)).size());
    };
    measure(wl.left);
    measure(wl.mid);
    measure(wl.right);
    width += 2;  // guard zeros between slots
    auto emit = [&](const std::vector<int>& cells) {
        std::vector<int> bits;
        for (int c : cells) {
            std::vector<int> s = slot_bits(profile_cell(c));
            s.resize(width, 0);
            bits.insert(bits.end(), s.begin(), s.end());
        }
        return bits;
    };
    std::vector<int> left = wl.has_left ? emit(wl.left) : std::vector<int>{0};
    std::vector<int> right = wl.has_right ? emit(wl.right) : std::vector<int>{0};
    std::vector<int> mid = emit(wl.mid);
    return ZTree(LassoZ<int>(left, mid, right, 0), {ZTree::leaf()});
}

// Inverse of slot_encode where the bit pattern parses; nullopt otherwise.
inline std::optional<RegTree> slot_decode(const ZTree& z) {
    // realign so the first sync of the middle (or of the right tail) starts a slot
    LassoZ<int> cells = z.cells();
    auto is_sync_at = [&](const std::vector<int>& v, std::size_t i) {
        return i + 4 < v.size() && v[i] == 1 && v[i + 1] == 1 && v[i + 2] == 1 && v[i + 3] == 1 &&
               v[i + 4] == 0;
    };
    auto find_syncs = [&](const std::vector<int>& v) {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < v.size(); ++i)
            if (is_sync_at(v, i)) out.push_back(i);
        return out;
    };
    auto slots_from = [&](const std::vector<int>& v) -> std::optional<std::vector<LeafWordProfile>> {
        if (v.empty()) return std::vector<LeafWordProfile>{};
        std::vector<std::size_t> syncs = find_syncs(v);
        if (syncs.empty() || syncs.front() != 0) return std::nullopt;
        std::vector<LeafWordProfile> out;
        for (std::size_t k = 0; k < syncs.size(); ++k) {
            std::size_t end = k + 1 < syncs.size() ? syncs[k + 1] : v.size();
            std::vector<int> slot(v.begin() + (long)syncs[k], v.begin() + (long)end);
            auto p = parse_slot(slot);
            if (!p) return std::nullopt;
            out.push_back(*p);
        }
        return out;
    };
    bool left_trivial = cells.left.size() == 1 && cells.left[0] == 0;
    bool right_trivial = cells.right.size() == 1 && cells.right[0] == 0;
    // slot_encode emits periods and middles that begin at a sync
    auto mids = slots_from(cells.mid);
    std::optional<std::vector<LeafWordProfile>> lefts, rights;
    if (!left_trivial) {
        lefts = slots_from(cells.left);
        if (!lefts) return std::nullopt;
    }
    if (!right_trivial) {
        rights = slots_from(cells.right);
        if (!rights) return std::nullopt;
    }
    if (!mids) return std::nullopt;
    if (left_trivial && right_trivial && mids->empty()) return std::nullopt;
    // assemble the height-<=3 node
    std::vector<RegTree> subs;
    std::map<std::string, std::size_t> index;
    auto letter = [&](const LeafWordProfile& p) -> OrderTerm {
        if (p.is_leaf) return atom();
        RegTree t = profile_tree(p);
        std::string s = tree_serial(t);
        auto it = index.find(s);
        std::size_t k;
        if (it == index.end()) {
            k = subs.size();
            index.emplace(s, k);
            subs.push_back(t);
        } else {
            k = it->second;
        }
        return atom("s" + std::to_string(k));
    };
    std::vector<OrderTerm> parts;
    if (lefts) {
        std::vector<OrderTerm> ls;
        for (const auto& p : *lefts) ls.push_back(letter(p));
        parts.push_back(omega_star(mk_sum(ls)));
    }
    for (const auto& p : *mids) parts.push_back(letter(p));
    if (rights) {
        std::vector<OrderTerm> rs;
        for (const auto& p : *rights) rs.push_back(letter(p));
        parts.push_back(omega(mk_sum(rs)));
    }
    return RegTree(mk_sum(parts), std::move(subs));
}

}  // namespace detail

inline ZTree sot_to_ztree(const RegTree& t) {
    unsigned h = tree_rank(t);
    if (h < 3) throw DomainError("sot_to_ztree: tree rank must be >= 3");
    if (h == 3) return detail::slot_encode(t);
    detail::RegWordLasso wl = detail::reg_word_lasso(t.word());
    std::vector<ZTree> subs;
    std::map<std::string, std::size_t> index;
    auto cell_of = [&](int c) -> int {
        if (c == 0) return 0;  // leaf child -> missing position
        const RegTree& sub = t.subs()[(size_t)c - 1];
        unsigned hs = tree_rank(sub);
        ZTree z = hs <= 3 ? detail::slot_encode(sub) : sot_to_ztree(sub);
        std::string s = tree_serial(z);
        auto it = index.find(s);
        std::size_t k;
        if (it == index.end()) {
            k = subs.size();
            index.emplace(s, k);
            subs.push_back(z);
        } else {
            k = it->second;
        }
        return (int)k + 1;
    };
    auto map_cells = [&](const std::vector<int>& v) {
        std::vector<int> out;
        for (int c : v) out.push_back(cell_of(c));
        return out;
    };
    std::vector<int> left = wl.has_left ? map_cells(wl.left) : std::vector<int>{0};
    std::vector<int> right = wl.has_right ? map_cells(wl.right) : std::vector<int>{0};
    std::vector<int> mid = map_cells(wl.mid);
    return ZTree(LassoZ<int>(left, mid, right, 0), std::move(subs));
}

inline RegTree ztree_to_sot(const ZTree& t) {
    unsigned r = tree_rank(t);
    if (r == 1) {
        // the trivial Z-tree encodes the trivial order tree one level up
        return RegTree(atom(), {});
    }
    if (r == 2) {
        auto dec = detail::slot_decode(t);
        if (dec) return *dec;
        // fallback marking: present -> single-leaf node, missing -> leaf
        const LassoZ<int>& c = t.cells();
        RegTree present(fin(1), {});
        auto letter = [&](int cell) {
            return cell == 0 ? atom() : atom("s0");
        };
        std::vector<OrderTerm> parts;
        bool lt = c.left.size() == 1 && c.left[0] == 0;
        bool rt = c.right.size() == 1 && c.right[0] == 0;
        if (!lt) {
            std::vector<OrderTerm> ls;
            for (int x : c.left) ls.push_back(letter(x));
            parts.push_back(omega_star(mk_sum(ls)));
        }
        for (int x : c.mid) parts.push_back(letter(x));
        if (!rt) {
            std::vector<OrderTerm> rs;
            for (int x : c.right) rs.push_back(letter(x));
            parts.push_back(omega(mk_sum(rs)));
        }
        if (parts.empty()) parts.push_back(atom("s0"));
        return RegTree(mk_sum(parts), {present});
    }
    // r >= 3: positions become the child word, missing positions leaves
    const LassoZ<int>& c = t.cells();
    std::vector<RegTree> subs;
    std::map<std::string, std::size_t> index;
    auto letter = [&](int cell) -> OrderTerm {
        if (cell == 0) return atom();
        RegTree sub = ztree_to_sot(t.subs()[(size_t)cell - 1]);
        std::string s = tree_serial(sub);
        auto it = index.find(s);
        std::size_t k;
        if (it == index.end()) {
            k = subs.size();
            index.emplace(s, k);
            subs.push_back(sub);
        } else {
            k = it->second;
        }
        return atom("s" + std::to_string(k));
    };
    auto all0 = [](const std::vector<int>& v) {
        for (int x : v)
            if (x != 0) return false;
        return true;
    };
    std::vector<OrderTerm> parts;
    if (!all0(c.left)) {
        std::vector<OrderTerm> ls;
        for (int x : c.left) ls.push_back(letter(x));
        parts.push_back(omega_star(mk_sum(ls)));
    }
    for (int x : c.mid) parts.push_back(letter(x));
    if (!all0(c.right)) {
        std::vector<OrderTerm> rs;
        for (int x : c.right) rs.push_back(letter(x));
        parts.push_back(omega(mk_sum(rs)));
    }
    return RegTree(mk_sum(parts), std::move(subs));
}

// ── label encoding ──────────────────────────────────────────────────────────

inline constexpr std::size_t kMaxLabelAlphabet = 16;

// g(i): {1, ..., i+1} u {-(i+2)}; adjoining {0} gives pairwise non-shift-
// isomorphic finite sets (the cardinalities already differ).
inline std::vector<long long> label_gadget(std::size_t i) {
    std::vector<long long> out;
    out.push_back(-(long long)(i + 2));
    for (std::size_t k = 1; k <= i + 1; ++k) out.push_back((long long)k);
    return out;
}

namespace detail {

inline void collect_labels(const LabelledZTree& t, std::vector<std::string>& out) {
    if (std::find(out.begin(), out.end(), t.label()) == out.end()) out.push_back(t.label());
    for (const auto& s : t.subs()) collect_labels(s, out);
}

inline ZTree label_encode_node(const LabelledZTree& t,
                               const std::map<std::string, std::size_t>& idx) {
    // spine child at 0 carrying the original children, gadget leaves at g(label)
    std::size_t i = idx.at(t.label());
    std::vector<long long> g = label_gadget(i);
    long long lo = -(long long)(i + 2), hi = (long long)(i + 1);
    std::vector<ZTree> subs;
    // spine subtree: the original children, each encoded, at their positions
    std::vector<ZTree> spine_subs;
    for (const auto& sub : t.subs()) spine_subs.push_back(label_encode_node(sub, idx));
    ZTree spine = t.is_leaf() ? ZTree::leaf() : ZTree(t.cells(), std::move(spine_subs));
    subs.push_back(spine);
    std::vector<int> mid((std::size_t)(hi - lo + 1), 0);
    mid[(std::size_t)(0 - lo)] = 1;  // spine at position 0
    for (long long p : g) mid[(std::size_t)(p - lo)] = 2;
    subs.push_back(ZTree::leaf());  // gadget leaf
    return ZTree(LassoZ<int>({0}, mid, {0}, lo), std::move(subs));
}

}  // namespace detail

// Encode against a shared alphabet; images are comparable only when produced
// with the same one.
inline ZTree label_encode(const LabelledZTree& t, const std::vector<std::string>& alphabet) {
    if (alphabet.size() > kMaxLabelAlphabet)
        throw RepresentabilityError("label_encode: alphabet exceeds the precomputed g table");
    std::map<std::string, std::size_t> idx;
    for (std::size_t i = 0; i < alphabet.size(); ++i) idx[alphabet[i]] = i;
    std::vector<std::string> used;
    detail::collect_labels(t, used);
    for (const auto& l : used)
        if (!idx.count(l)) throw DomainError("label_encode: label not in the alphabet");
    return detail::label_encode_node(t, idx);
}

inline ZTree label_encode(const LabelledZTree& t) {
    std::vector<std::string> labels;
    detail::collect_labels(t, labels);
    std::sort(labels.begin(), labels.end());
    return label_encode(t, labels);
}

}  // namespace ordercalc
