#include <catch2/catch_amalgamated.hpp>

#include "ordercalc/term_rewrite.hpp"

using namespace ordercalc;

static OrderTerm C(const char* s) { return canonicalize(parse_term(s)); }

TEST_CASE("canonicalize: spec instances") {
    CHECK(C("1+w(1)") == parse_term("w(1)"));
    CHECK(C("w(2)") == parse_term("w(1)"));
    CHECK(C("2") == fin(2));
    CHECK(C("z(1)") == parse_term("ws(1)+w(1)"));
    CHECK(C("w(1)+ws(1)") == parse_term("w(1)+ws(1)"));
    CHECK(C("ws(1)+1") == parse_term("ws(1)"));
    CHECK(C("0+1+0") == atom());
    CHECK(C("w(0)") == zero());
    CHECK(C("1+1+1") == fin(3));
}

TEST_CASE("canonicalize: rotation invariance") {
    // all rotations of a cycle reach one normal form
    CHECK(C("w(1+w(1))") == C("w(w(1)+1)"));
    CHECK(C("w(1+2+w(1))") == C("w(2+w(1)+1)"));
    // omega*: rotations shift a suffix out instead of a prefix
    CHECK(C("ws(w(1)+1)") == C("ws(w(1))+1"));
    CHECK(C("ws(1+w(1))") == C("ws(w(1))"));
    // zeta cycles are genuinely rotation invariant
    CHECK(C("z(1+w(1))") == C("z(w(1)+1)"));
}

TEST_CASE("canonicalize: absorption closes prefix identities") {
    CHECK(C("1+w(w(1))") == C("w(w(1))"));       // 1 + w^2 = w^2
    CHECK(C("w(1)+w(w(1))") == C("w(w(1))"));    // w + w^2 = w^2
    CHECK(C("5+w(w(1))") == C("w(w(1))"));
    CHECK(C("w(w(1))+w(1)") != C("w(w(1))"));    // w^2 + w stays
    CHECK(C("ws(ws(1))+1") == C("ws(ws(1))"));
    CHECK(C("ws(ws(1))+ws(1)") == C("ws(ws(1))"));
    CHECK(C("z(z(1))") == C("ws(w(1)+ws(1))+w(w(1)+ws(1))"));
}

TEST_CASE("canonicalize: idempotent on assorted inputs") {
    for (const char* s :
         {"z(z(1))", "w(ws(1)+2)", "ws(w(2)+1)+z(3)", "w(w(w(1)))", "1+z(1)+1",
          "w(1)+ws(1)+w(1)", "z(2+w(1))", "w(z(1)+1)", "ws(1+z(1))", "w(1+w(1)+1)"}) {
        OrderTerm c = canonicalize(parse_term(s));
        CHECK(canonicalize(c) == c);
    }
}

TEST_CASE("canonicalize keeps labeled atoms apart") {
    OrderTerm t = parse_term("atom(a)+atom(a)");
    CHECK(canonicalize(t) == t);  // no Fin coalescing for colored points
    CHECK(C("atom(a)+w(atom(a))") == parse_term("w(atom(a))"));
    CHECK(C("w(atom(b)+atom(a))") == parse_term("atom(b)+w(atom(a)+atom(b))"));
}

TEST_CASE("iso_terms: spec examples") {
    IsoVerdict v1 = iso_terms(parse_term("ws(1)+w(1)"), parse_term("z(1)"));
    CHECK(v1.status == IsoStatus::Isomorphic);

    IsoVerdict v2 = iso_terms(parse_term("w(1)"), parse_term("z(1)"));
    REQUIRE(v2.status == IsoStatus::NonIsomorphic);
    CHECK(v2.certificate.find("end_flags") != std::string::npos);

    IsoVerdict v3 = iso_terms(parse_term("w(z(1))"), parse_term("z(z(1))"));
    REQUIRE(v3.status == IsoStatus::NonIsomorphic);
    CHECK(v3.certificate.find("derivative_signature") != std::string::npos);

    CHECK(iso_terms(zero(), zero()).status == IsoStatus::Isomorphic);
    CHECK(iso_terms(zero(), atom()).status == IsoStatus::NonIsomorphic);
}

TEST_CASE("iso_terms separates by singleton counts") {
    // w(z(1)) vs w(z(1)+1): same rank and flags at every level, but the
    // inserted points are singleton classes
    IsoVerdict v = iso_terms(omega(zeta(atom())), omega(mk_sum2(zeta(atom()), atom())));
    REQUIRE(v.status == IsoStatus::NonIsomorphic);
    CHECK(v.certificate.find("singletons") != std::string::npos);
}

TEST_CASE("is_complete") {
    CHECK(is_complete(parse_term("z(1)")));
    CHECK_FALSE(is_complete(parse_term("w(z(1))")));
    CHECK(is_complete(parse_term("1+z(1)+1+z(1)+1")));
    CHECK(is_complete(parse_term("w(1)")));
    CHECK_FALSE(is_complete(parse_term("w(1)+ws(1)")));
    CHECK(is_complete(zero()));
    CHECK(is_complete(fin(3)));
}

TEST_CASE("single_rule_rewrites finds redexes everywhere") {
    auto steps = single_rule_rewrites(parse_term("w(z(0)+2)"));
    bool saw_rep_zero = false;
    for (auto& s : steps)
        if (s.rule == "rep_zero") saw_rep_zero = true;
    CHECK(saw_rep_zero);

    steps = single_rule_rewrites(parse_term("1+w(1)"));
    bool saw_absorb = false;
    for (auto& s : steps)
        if (s.rule == "absorb") {
            saw_absorb = true;
            CHECK(s.result == parse_term("w(1)"));
        }
    CHECK(saw_absorb);

    steps = single_rule_rewrites(parse_term("w(2)"));
    bool saw_power = false;
    for (auto& s : steps)
        if (s.rule == "power_collapse") saw_power = true;
    CHECK(saw_power);
}

TEST_CASE("invariant signature basics") {
    InvariantSignature s1 = invariant_signature(omega(atom()));
    CHECK(s1.rank == 1);
    CHECK(s1.flags.has_min);
    CHECK_FALSE(s1.flags.has_max);

    InvariantSignature s2 = invariant_signature(zeta(atom()));
    CHECK(s2.rank == 1);
    CHECK_FALSE(s2.flags.has_min);

    InvariantSignature s0 = invariant_signature(atom());
    CHECK(s0.rank == 0);
    CHECK(s0.chain.empty());

    // z(1)+1+z(1): step 1 has exactly one singleton class (the middle point)
    InvariantSignature s3 = invariant_signature(parse_term("z(1)+1+z(1)"));
    REQUIRE(s3.rank == 2);
    CHECK(s3.chain[0].singleton_count == 1);
    CHECK(s3.chain[1].singleton_count == 0);  // the top class holds all three pieces
}
