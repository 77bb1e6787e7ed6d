#include <catch2/catch_amalgamated.hpp>

#include "ordercalc/trees.hpp"

using namespace ordercalc;

namespace {
LassoZ<int> cellz(std::vector<int> l, std::vector<int> m, std::vector<int> r, long long o = 0) {
    return LassoZ<int>(std::move(l), std::move(m), std::move(r), o);
}
// rank-2 node: children at the given positions (all leaves)
ZTree zposes(std::vector<long long> positions) {
    if (positions.empty()) return ZTree::leaf();
    long long lo = *std::min_element(positions.begin(), positions.end());
    long long hi = *std::max_element(positions.begin(), positions.end());
    std::vector<int> mid((size_t)(hi - lo + 1), 0);
    for (long long p : positions) mid[(size_t)(p - lo)] = 1;
    return ZTree(cellz({0}, mid, {0}, lo), {ZTree::leaf()});
}
}  // namespace

TEST_CASE("RegTree basics") {
    RegTree leaf = RegTree::leaf();
    CHECK(tree_rank(leaf) == 1);
    RegTree two(fin(2), {});
    CHECK(tree_rank(two) == 2);
    RegTree wleaves(omega(atom()), {});
    CHECK(tree_rank(wleaves) == 2);
    RegTree mixed(mk_sum2(atom("s0"), atom()), {two});
    CHECK(tree_rank(mixed) == 3);
    CHECK_THROWS_AS(RegTree(omega(omega(atom())), {}), DomainError);  // rank-2 word
}

TEST_CASE("RegTree canonicalization uses the word engine") {
    // child word Atom + w(Atom) absorbs
    RegTree a(mk_sum2(atom(), omega(atom())), {});
    RegTree b(omega(atom()), {});
    CHECK(tree_iso(a, b));
    CHECK(tree_serial(tree_canon(a)) == tree_serial(b));

    // zeta words expand and rotations normalize with subtree letters
    RegTree s2(fin(2), {});
    RegTree s3(fin(3), {});
    RegTree t1(zeta(mk_sum2(atom("s0"), atom("s1"))), {s2, s3});
    RegTree t2(zeta(mk_sum2(atom("s0"), atom("s1"))), {s3, s2});
    CHECK(tree_iso(t1, t2));
    RegTree t3(zeta(mk_sum2(atom("s0"), atom("s0"))), {s2});
    CHECK_FALSE(tree_iso(t1, t3));

    CHECK(tree_iso(RegTree::leaf(), RegTree::leaf()));
    CHECK_FALSE(tree_iso(RegTree::leaf(), s2));
}

TEST_CASE("ZTree shift invariance") {
    CHECK(tree_iso(zposes({0, 3}), zposes({5, 8})));
    CHECK_FALSE(tree_iso(zposes({0, 1}), zposes({0, 2})));
    CHECK(tree_iso(ZTree::leaf(), ZTree::leaf()));
    CHECK_FALSE(tree_iso(ZTree::leaf(), zposes({0})));
    CHECK(tree_rank(zposes({0, 1})) == 2);

    // periodic childmaps
    ZTree per1(cellz({1, 0}, {}, {1, 0}), {ZTree::leaf()});
    ZTree per2(cellz({0, 1}, {}, {0, 1}), {ZTree::leaf()});
    CHECK(tree_iso(per1, per2));
    ZTree per3(cellz({1, 0, 0}, {}, {1, 0, 0}), {ZTree::leaf()});
    CHECK_FALSE(tree_iso(per1, per3));
}

TEST_CASE("ZTree distinguishes subtree structure") {
    ZTree inner1 = zposes({0});
    ZTree inner2 = zposes({0, 1});
    ZTree a(cellz({0}, {1, 2}, {0}), {inner1, inner2});
    ZTree b(cellz({0}, {2, 1}, {0}), {inner2, inner1});  // same family, swapped ids
    CHECK(tree_iso(a, b));
    ZTree c(cellz({0}, {1, 1}, {0}), {inner1});
    CHECK_FALSE(tree_iso(a, c));
    CHECK(tree_rank(a) == 3);
}

TEST_CASE("tree JSON round trips") {
    ZTree z(cellz({1, 0}, {0, 2, 1}, {0}, -1), {zposes({0}), zposes({0, 2})});
    json j = tree_to_json(z);
    ZTree z2 = ztree_from_json(j);
    CHECK(tree_iso(z, z2));

    RegTree r(mk_sum({atom(), omega(atom("s0"))}), {RegTree(fin(2), {})});
    json jr = tree_to_json(r);
    RegTree r2 = regtree_from_json(jr);
    CHECK(tree_iso(r, r2));

    CHECK(tree_iso(regtree_from_json(tree_to_json(RegTree::leaf())), RegTree::leaf()));
    CHECK(tree_iso(ztree_from_json(tree_to_json(ZTree::leaf())), ZTree::leaf()));
}

TEST_CASE("labelled ZTree isomorphism respects labels") {
    LabelledZTree a = LabelledZTree::leaf("a");
    LabelledZTree b = LabelledZTree::leaf("b");
    CHECK(tree_iso(a, LabelledZTree::leaf("a")));
    CHECK_FALSE(tree_iso(a, b));
    LabelledZTree n1("r", cellz({0}, {1, 2}, {0}), {a, b});
    LabelledZTree n2("r", cellz({0}, {1, 2}, {0}, 5), {a, b});
    CHECK(tree_iso(n1, n2));
    LabelledZTree n3("r", cellz({0}, {2, 1}, {0}), {a, b});
    CHECK_FALSE(tree_iso(n1, n3));
}
