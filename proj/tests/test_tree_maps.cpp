#include <catch2/catch_amalgamated.hpp>

#include "ordercalc/order_tree_maps.hpp"

using namespace ordercalc;

namespace {
RegTree U2(const OrderTerm& leafword) { return RegTree(leafword, {}); }
RegTree node(const OrderTerm& word, std::vector<RegTree> subs) {
    return RegTree(word, std::move(subs));
}
}  // namespace

TEST_CASE("tree_to_order: base shapes") {
    CHECK(tree_to_order(RegTree::leaf(), false) == atom());
    CHECK(tree_to_order(U2(fin(2)), false) == fin(2));
    CHECK(tree_to_order(U2(omega(atom())), false) == omega(atom()));
    // height-3 single child: block + Z+1+Z separator
    RegTree t3 = node(atom("s0"), {U2(fin(2))});
    OrderTerm L = tree_to_order(t3, false);
    CHECK(iso_terms(L, parse_term("2+z(1)+1+z(1)")).isomorphic());
}

TEST_CASE("rank bookkeeping: rank(tto(T)) + 1 == tree_rank(T)") {
    RegTree A = U2(fin(2)), B = U2(omega(atom())), C = U2(zeta(atom()));
    std::vector<RegTree> suite = {
        U2(fin(2)),
        U2(fin(3)),
        B,
        C,
        U2(omega_star(atom())),
        node(mk_sum2(atom("s0"), atom("s1")), {A, B}),
        node(zeta(atom("s0")), {A}),
        node(omega(atom("s0")), {C}),
        node(atom("s0"), {node(mk_sum2(atom("s0"), atom("s1")), {A, B})}),
        node(mk_sum2(atom("s0"), atom("s0")), {node(zeta(atom("s0")), {C})}),
    };
    for (const auto& T : suite) {
        for (bool complete : {false, true}) {
            OrderTerm L = tree_to_order(T, complete);
            INFO("T rank " << tree_rank(T) << " complete " << complete << " L "
                           << render_term(L));
            CHECK(rank(L) + 1 == tree_rank(T));
        }
    }
}

TEST_CASE("order_to_tree: condensation examples") {
    RegTree t1 = order_to_tree(atom());
    CHECK(t1.is_leaf());
    CHECK(tree_rank(t1) == 1);

    RegTree t2 = order_to_tree(omega(atom()));
    CHECK(tree_rank(t2) == 2);
    CHECK(tree_iso(t2, U2(omega(atom()))));

    // the bare separator keeps its three classes (pruning never empties a word)
    RegTree t3 = order_to_tree(parse_term("z(1)+1+z(1)"));
    CHECK(tree_rank(t3) == 3);
    REQUIRE(!t3.is_leaf());
    auto letters = detail::letters_of(t3.word());
    REQUIRE(letters.has_value());
    CHECK(letters->size() == 3);

    CHECK_THROWS_AS(order_to_tree(zero()), DomainError);
}

TEST_CASE("round trip: order_to_tree after tree_to_order") {
    RegTree A = U2(fin(2)), B = U2(omega(atom())), C = U2(zeta(atom()));
    std::vector<RegTree> suite = {
        U2(fin(2)),
        U2(fin(3)),
        B,
        C,
        U2(omega_star(fin(2))),
        U2(mk_sum2(omega_star(atom()), omega(atom()))),
        node(mk_sum2(atom("s0"), atom("s1")), {A, B}),
        node(mk_sum2(atom("s0"), atom("s0")), {A}),
        node(zeta(atom("s0")), {A}),
        node(omega(atom("s0")), {C}),
        node(omega_star(mk_sum2(atom("s0"), atom("s1"))), {A, C}),
        node(atom("s0"), {node(mk_sum2(atom("s0"), atom("s1")), {A, B})}),
        node(mk_sum2(atom("s0"), atom("s0")), {node(zeta(atom("s0")), {C})}),
        node(zeta(atom("s0")), {node(fin(2), {A})}),
    };
    for (const auto& T : suite) {
        OrderTerm L = tree_to_order(T, false);
        RegTree back = order_to_tree(L);
        INFO("L = " << render_term(L));
        CHECK(tree_serial(back) == tree_serial(T));
    }
}

TEST_CASE("separator middles are the only singleton classes") {
    RegTree A = U2(fin(2)), B = U2(omega(atom()));
    RegTree T = node(mk_sum2(atom("s0"), atom("s1")), {A, B});
    OrderTerm L = tree_to_order(T, false);
    InvariantSignature sig = invariant_signature(L);
    CHECK(sig.chain[0].singleton_count == 2);  // one separator per child

    RegTree T4 = node(atom("s0"), {T});
    InvariantSignature sig4 = invariant_signature(tree_to_order(T4, false));
    CHECK(sig4.chain[0].singleton_count == 3);  // two inner separators + one outer
}

TEST_CASE("complete encodings are complete") {
    RegTree A = U2(fin(2)), B = U2(omega(atom())), C = U2(zeta(atom()));
    std::vector<RegTree> suite = {
        A,
        B,
        C,
        node(mk_sum2(atom("s0"), atom("s1")), {A, B}),
        node(zeta(atom("s0")), {C}),
        node(atom("s0"), {node(mk_sum2(atom("s0"), atom("s1")), {A, B})}),
    };
    for (const auto& T : suite) {
        OrderTerm L = tree_to_order(T, true);
        INFO("L = " << render_term(L));
        CHECK(is_complete(L));
    }
    // a bare separator next to an endless block leaves a cut without a sup
    CHECK_FALSE(is_complete(tree_to_order(node(mk_sum2(atom("s0"), atom("s1")),
                                               {U2(omega(atom())), U2(fin(2))}),
                                          false)));
}

TEST_CASE("sot_to_ztree: rank 3 slot coding") {
    RegTree A = U2(fin(2));
    RegTree T = node(zeta(atom("s0")), {A});  // zeta-word of identical height-2 children
    ZTree z = sot_to_ztree(T);
    CHECK(tree_rank(z) == 2);
    // periodic child positions
    CHECK(!(z.cells().left.size() == 1 && z.cells().left[0] == 0));

    RegTree back = ztree_to_sot(z);
    CHECK(tree_serial(back) == tree_serial(T));

    CHECK_THROWS_AS(sot_to_ztree(A), DomainError);
    CHECK_THROWS_AS(sot_to_ztree(RegTree::leaf()), DomainError);
}

TEST_CASE("sot <-> ztree round trips at ranks 3 and 4") {
    RegTree A = U2(fin(2)), B = U2(omega(atom())), C = U2(zeta(atom()));
    std::vector<RegTree> suite = {
        node(mk_sum2(atom("s0"), atom("s1")), {A, B}),
        node(zeta(atom("s0")), {A}),
        node(omega(mk_sum2(atom("s0"), atom("s1"))), {B, C}),
        node(mk_sum2(atom("s0"), atom()), {A}),  // leaf sibling of a height-2 child
        node(atom("s0"), {node(mk_sum2(atom("s0"), atom("s1")), {A, B})}),
        node(zeta(atom("s0")), {node(zeta(atom("s0")), {C})}),
        node(mk_sum2(atom("s0"), atom()), {node(atom("s0"), {A})}),  // rank 4, leaf child
    };
    for (const auto& T : suite) {
        REQUIRE(tree_rank(T) >= 3);
        ZTree z = sot_to_ztree(T);
        CHECK(tree_rank(z) + 1 == tree_rank(T));
        RegTree back = ztree_to_sot(z);
        INFO("rank " << tree_rank(T));
        CHECK(tree_serial(back) == tree_serial(T));
    }
}

TEST_CASE("ztree_to_sot is total") {
    CHECK(tree_rank(ztree_to_sot(ZTree::leaf())) == 2);  // trivial tree marking
    // non-image rank-2 z-trees fall back to present/missing marking, injectively
    ZTree z1(LassoZ<int>({0}, {1, 0, 1}, {0}, 0), {ZTree::leaf()});
    ZTree z2(LassoZ<int>({0}, {1, 1}, {0}, 0), {ZTree::leaf()});
    RegTree t1 = ztree_to_sot(z1);
    RegTree t2 = ztree_to_sot(z2);
    CHECK(tree_rank(t1) == 3);
    CHECK_FALSE(tree_iso(t1, t2));
    ZTree z1s(LassoZ<int>({0}, {1, 0, 1}, {0}, 42), {ZTree::leaf()});
    CHECK(tree_iso(ztree_to_sot(z1s), t1));
}

TEST_CASE("label_encode") {
    auto leafL = [](const char* l) { return LabelledZTree::leaf(l); };
    const std::vector<std::string> ab{"a", "b"};
    // single node labelled a: root children at {0 (spine), g(a)}
    ZTree e = label_encode(leafL("a"), ab);
    CHECK(tree_rank(e) == 2);  // spine and gadget children are all leaves

    // distinct labels -> non-isomorphic images
    CHECK_FALSE(tree_iso(label_encode(leafL("a"), ab), label_encode(leafL("b"), ab)));
    CHECK(tree_iso(label_encode(leafL("a"), ab), label_encode(leafL("a"), ab)));
    CHECK_THROWS_AS(label_encode(leafL("q"), ab), DomainError);

    // shifted positions with identical labels -> isomorphic images
    LassoZ<int> cells1({0}, {1, 0, 2}, {0}, 0);
    LassoZ<int> cells2({0}, {1, 0, 2}, {0}, 9);
    LabelledZTree t1("x", cells1, {leafL("y"), leafL("z")});
    LabelledZTree t2("x", cells2, {leafL("y"), leafL("z")});
    CHECK(tree_iso(label_encode(t1), label_encode(t2)));

    // label placement matters
    LabelledZTree t3("x", cells1, {leafL("z"), leafL("y")});
    CHECK_FALSE(tree_iso(label_encode(t1), label_encode(t3)));

    // alphabet cap
    std::vector<LabelledZTree> subs;
    std::vector<int> mid;
    for (int i = 0; i < 20; ++i) {
        subs.push_back(leafL(("l" + std::to_string(i)).c_str()));
        mid.push_back(i + 1);
    }
    LabelledZTree big("r", LassoZ<int>({0}, mid, {0}), subs);
    CHECK_THROWS_AS(label_encode(big), RepresentabilityError);
}

TEST_CASE("label gadget sets are pairwise non-shift-isomorphic") {
    auto with_zero = [](std::size_t i) {
        std::vector<long long> s = label_gadget(i);
        s.push_back(0);
        std::sort(s.begin(), s.end());
        return s;
    };
    for (std::size_t i = 0; i < kMaxLabelAlphabet; ++i) {
        for (std::size_t j = i + 1; j < kMaxLabelAlphabet; ++j) {
            auto a = with_zero(i), b = with_zero(j);
            // translate a by every offset; no translate may equal b
            bool collision = false;
            for (long long d = -40; d <= 40; ++d) {
                std::vector<long long> at;
                for (long long v : a) at.push_back(v + d);
                if (at == b) collision = true;
            }
            CHECK_FALSE(collision);
        }
    }
}
