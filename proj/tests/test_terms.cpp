#include <catch2/catch_amalgamated.hpp>

#include "ordercalc/term.hpp"
#include "ordercalc/term_ops.hpp"
#include "ordercalc/term_rewrite.hpp"

using namespace ordercalc;

TEST_CASE("parse_term reads the grammar literally") {
    OrderTerm t = parse_term("z(1)+1+z(1)");
    REQUIRE(t.is_sum());
    REQUIRE(t.parts().size() == 3);
    CHECK(t.parts()[0] == zeta(atom()));
    CHECK(t.parts()[1] == atom());
    CHECK(t.parts()[2] == zeta(atom()));

    CHECK(parse_term("0") == zero());
    CHECK(parse_term("w(2)") == omega(fin(2)));
    CHECK(parse_term(" ws( 1 + 1 ) ") == omega_star(sum_raw({atom(), atom()})));
    CHECK(parse_term("atom(x)") == atom("x"));
    CHECK(parse_term("17") == fin(17));
}

TEST_CASE("parse_term rejects bad input with positions") {
    CHECK_THROWS_AS(parse_term("w(1"), ParseError);
    CHECK_THROWS_AS(parse_term("1+"), ParseError);
    CHECK_THROWS_AS(parse_term("-1"), ParseError);
    CHECK_THROWS_AS(parse_term("q(1)"), ParseError);
    CHECK_THROWS_AS(parse_term("1 1"), ParseError);
    CHECK_THROWS_AS(parse_term(""), ParseError);
    try {
        parse_term("1+&");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.pos == 2);
    }
}

TEST_CASE("render/parse round trip") {
    for (const char* s : {"0", "1", "2", "w(1)", "ws(2)", "z(1)+1+z(1)", "w(z(1)+1)",
                          "atom(a)+w(atom(b))"}) {
        OrderTerm t = parse_term(s);
        CHECK(parse_term(render_term(t)) == t);
    }
}

TEST_CASE("end_flags structural recursion") {
    CHECK(end_flags(omega(atom())) == EndFlags{false, true, false, std::nullopt});
    CHECK(end_flags(zeta(atom())) == EndFlags{false, false, false, std::nullopt});
    CHECK(end_flags(mk_sum2(fin(2), omega(atom()))) == EndFlags{false, true, false, std::nullopt});
    CHECK(end_flags(zero()) == EndFlags{true, false, false, 0});
    CHECK(end_flags(fin(5)) == EndFlags{false, true, true, 5});
    CHECK(end_flags(omega_star(fin(2))) == EndFlags{false, false, true, std::nullopt});
    // empty parts are ignored
    CHECK(end_flags(sum_raw({zero(), atom(), zero()})) == EndFlags{false, true, true, 1});
    CHECK(end_flags(omega(zero())) == EndFlags{true, false, false, 0});
}

TEST_CASE("derivative collapses finite intervals") {
    CHECK(derivative(omega(atom())) == atom());
    CHECK(derivative(parse_term("z(1)+1+z(1)")) == fin(3));
    CHECK(derivative(omega(omega(atom()))) == omega(atom()));
    CHECK(derivative(zero()) == zero());
    CHECK(derivative(fin(9)) == atom());
    CHECK(derivative(zeta(fin(3))) == atom());

    // fusion inside a repetition: w(1+z(1)+1) has classes 3 + w(2)
    OrderTerm t = omega(parse_term("1+z(1)+1"));
    CHECK(derivative(t) == mk_sum2(fin(3), omega(fin(2))));
    // mirrored: ws(1+z(1)+1) = ws(2) + 2
    OrderTerm s = omega_star(parse_term("1+z(1)+1"));
    CHECK(derivative(s) == mk_sum2(omega_star(fin(2)), fin(2)));
    // both-sided: z(1+z(1)+1) = z(2)
    CHECK(derivative(zeta(parse_term("1+z(1)+1"))) == zeta(fin(2)));
}

TEST_CASE("drop_min") {
    CHECK(drop_min(fin(3)) == fin(2));
    CHECK(drop_min(atom()) == zero());
    CHECK(drop_min(omega(fin(2))) == mk_sum2(atom(), omega(fin(2))));
    CHECK(drop_min(mk_sum2(fin(2), zeta(atom()))) == mk_sum2(atom(), zeta(atom())));
    CHECK_THROWS_AS(drop_min(zeta(atom())), DomainError);
    CHECK_THROWS_AS(drop_min(zero()), DomainError);
    CHECK_THROWS_AS(drop_min(omega_star(atom())), DomainError);
}

TEST_CASE("rank counts derivative steps") {
    CHECK(rank(atom()) == 0);
    CHECK(rank(omega(omega(atom()))) == 2);
    CHECK(rank(parse_term("z(1)+1+z(1)")) == 2);
    CHECK(rank(fin(7)) == 1);
    CHECK(rank(omega(atom())) == 1);
    CHECK_THROWS_AS(rank(zero()), DomainError);
}

TEST_CASE("complete_hull inserts junction points") {
    CHECK(complete_hull(omega(atom())) == omega(atom()));
    CHECK(complete_hull(omega(zeta(atom()))) == omega(mk_sum2(zeta(atom()), atom())));
    CHECK(complete_hull(zero()) == zero());
    // w + ws needs one interior point
    CHECK(complete_hull(mk_sum2(omega(atom()), omega_star(atom()))) ==
          mk_sum({omega(atom()), atom(), omega_star(atom())}));
    // the five-part separator is already complete
    OrderTerm sep = parse_term("1+z(1)+1+z(1)+1");
    CHECK(complete_hull(sep) == sep);
}

TEST_CASE("term order and size") {
    CHECK(compare(atom(), omega(atom())) < 0);
    CHECK(compare(fin(2), fin(3)) < 0);
    CHECK(compare(omega(atom()), omega_star(atom())) < 0);
    CHECK(term_size(parse_term("z(1)+1+z(1)")) == 5);
    CHECK(term_size(fin(4)) == 4);
}
