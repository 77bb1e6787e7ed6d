#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ordercalc/lasso.hpp"

using namespace ordercalc;

namespace {
int icmp(const int& a, const int& b) { return a < b ? -1 : (a == b ? 0 : 1); }
using LZ = LassoZ<int>;
LZ lz(std::vector<int> l, std::vector<int> m, std::vector<int> r, long long o = 0) {
    return LZ(std::move(l), std::move(m), std::move(r), o);
}
}  // namespace

TEST_CASE("LassoZ::at lays out tails correctly") {
    LZ x = lz({1, 2}, {7, 8, 9}, {3, 4}, 10);
    CHECK(x.at(10) == 7);
    CHECK(x.at(12) == 9);
    CHECK(x.at(13) == 3);
    CHECK(x.at(14) == 4);
    CHECK(x.at(15) == 3);
    CHECK(x.at(9) == 2);  // left.back at origin-1
    CHECK(x.at(8) == 1);
    CHECK(x.at(7) == 2);
}

TEST_CASE("shift canonicalization") {
    // pure shifts collapse
    LZ a = lz({0}, {1}, {0}, 0);
    LZ b = lz({0}, {1}, {0}, 7);
    CHECK(shift_canonical(a, icmp) == shift_canonical(b, icmp));
    CHECK(*brute_shift_witness(a, b) == 7);

    // redundant presentations of the same map collapse
    LZ c = lz({0, 0}, {0, 1, 0}, {0}, 0);  // ...000 010 000...
    LZ d = lz({0}, {1}, {0, 0, 0}, 5);     // same map shifted
    CHECK(shift_canonical(c, icmp) == shift_canonical(d, icmp));

    // fully periodic maps canonicalize to the least rotation
    LZ e = lz({0, 1}, {}, {0, 1}, 3);
    LZ f = lz({1, 0}, {}, {1, 0}, -2);
    CHECK(shift_canonical(e, icmp) == shift_canonical(f, icmp));
    auto w = brute_shift_witness(lz({0, 1}, {}, {0, 1}, 0), lz({1, 0}, {}, {1, 0}, 0));
    REQUIRE(w.has_value());
    CHECK(*w == 1);  // least magnitude, tie broken positive

    // genuinely different maps stay apart
    LZ g = lz({0}, {1}, {0}, 0);
    LZ h = lz({0}, {1, 1}, {0}, 0);
    CHECK_FALSE(shift_canonical(g, icmp) == shift_canonical(h, icmp));
    CHECK_FALSE(brute_shift_witness(g, h).has_value());
}

TEST_CASE("seam lassos") {
    // ...000111... : seam anchored at the first 1
    LZ a = lz({0}, {}, {1}, 0);
    LZ b = lz({0}, {0, 0, 1, 1}, {1}, -2);  // same map spelled with a fat middle
    CHECK(shift_canonical(a, icmp) == shift_canonical(b, icmp));
    CHECK(equal_maps(a, lz({0}, {}, {1}, 0)));
    CHECK_FALSE(equal_maps(a, a.shifted(1)));
    CHECK(*brute_shift_witness(a, a.shifted(4)) == 4);
}

TEST_CASE("random cross-validation: canonical equality == brute witness") {
    std::mt19937 rng(20240817);
    auto rnd_lasso = [&]() {
        auto vec = [&](int maxlen, bool nonempty) {
            int n = (nonempty ? 1 : 0) + (int)(rng() % (unsigned)maxlen);
            std::vector<int> v;
            for (int i = 0; i < n; ++i) v.push_back((int)(rng() % 2));
            if (nonempty && v.empty()) v.push_back(0);
            return v;
        };
        return LZ(vec(2, true), vec(3, false), vec(2, true), (long long)(rng() % 9) - 4);
    };
    for (int trial = 0; trial < 4000; ++trial) {
        LZ x = rnd_lasso();
        LZ y = rnd_lasso();
        bool canon_eq = shift_canonical(x, icmp) == shift_canonical(y, icmp);
        bool brute_eq = brute_shift_witness(x, y).has_value();
        REQUIRE(canon_eq == brute_eq);
        if (brute_eq) {
            auto k = *brute_shift_witness(x, y);
            CHECK(equal_maps(x.shifted(k), y));
        }
    }
}

TEST_CASE("one-sided lassos and eventual equality") {
    using LS = LassoSeq<int>;
    LS a({0, 0}, {1});  // 0,0,1,1,1,...
    LS b({}, {1});      // 1,1,1,...
    CHECK(eventually_equal(a, b));
    LS c({}, {0, 1});  // 0,1,0,1,...
    LS d({}, {1, 0});  // 1,0,1,0,...
    CHECK_FALSE(eventually_equal(c, d));
    LS e({0}, {1, 0});  // 0,1,0,1,0,... = c
    CHECK(eventually_equal(c, e));
    CHECK(equal_seqs(c, e));
    CHECK(seq_canonical(LS({1}, {1, 1})) == LS({}, {1}));
}
