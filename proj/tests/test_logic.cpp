#include "enscon/logic.hpp"

#include <doctest.h>

#include <string>
#include <vector>

using namespace enscon;

namespace {

signature sig2() { return signature({"p", "q"}); }
signature sig3() { return signature({"p", "q", "r"}); }

formula f2(const std::string& text) { return parse(text, sig2()); }
formula f3(const std::string& text) { return parse(text, sig3()); }

} // namespace

TEST_CASE("atom names and signatures") {
    CHECK(is_valid_atom_name("p"));
    CHECK(is_valid_atom_name("p_1"));
    CHECK(is_valid_atom_name("_x"));
    CHECK_FALSE(is_valid_atom_name(""));
    CHECK_FALSE(is_valid_atom_name("1p"));
    CHECK_FALSE(is_valid_atom_name("true"));
    CHECK_FALSE(is_valid_atom_name("false"));
    CHECK_FALSE(is_valid_atom_name("p-q"));

    const signature s = sig2();
    CHECK(s.size() == 2);
    CHECK(s.atom(0) == "p");
    CHECK(s.index_of("q") == 1);
    CHECK_FALSE(s.index_of("r").has_value());
    CHECK(s.valuation_count() == 4);
    CHECK(s.full_mask() == 15);
    CHECK(s == signature({"p", "q"}));
    CHECK_FALSE(s == sig3());

    CHECK_THROWS_AS(signature({"p", "p"}), error);
    CHECK_THROWS_AS(signature({"true"}), error);
    CHECK_THROWS_AS(signature({"a", "b", "c", "d", "e"}), ceiling_error);
}

TEST_CASE("parse builds the expected structure") {
    const formula f = f3("p & q -> r");
    CHECK(f.type() == formula::kind::implication);
    CHECK(f.left().type() == formula::kind::conjunction);
    CHECK(f.right().type() == formula::kind::atom);
    CHECK(f.right().atom_name() == "r");

    const formula g = f2("!p | p");
    CHECK(g.type() == formula::kind::disjunction);
    CHECK(g.left().type() == formula::kind::negation);
    CHECK(g.left().left().atom_name() == "p");

    CHECK(f2("true").type() == formula::kind::verum);
    CHECK(f2("false").type() == formula::kind::falsum);
    CHECK(f2("p") == f2("p"));
    CHECK(f2("p & q") == f2("p&q"));
    CHECK(f2("p") != f2("q"));
}

TEST_CASE("render uses minimal parentheses and round-trips") {
    const std::vector<std::string> fixed = {
        "p",
        "!p",
        "!!p",
        "p & q",
        "p | q",
        "p -> q",
        "p <-> q",
        "p & q | r",
        "p & (q | r)",
        "p -> q -> r",
        "(p -> q) -> r",
        "p <-> q <-> r",
        "p <-> (q <-> r)",
        "!(p & q)",
        "!(p <-> q)",
        "(p | q) & r",
        "true",
        "false",
    };
    for (const std::string& text : fixed) {
        const formula f = f3(text);
        CHECK(render(f) == text);
        CHECK(parse(render(f), sig3()) == f);
    }
}

TEST_CASE("parse errors carry 1-based offsets") {
    auto offset_of = [](const std::string& text) -> std::size_t {
        try {
            (void)parse(text, sig2());
        } catch (const parse_error& e) {
            return e.offset();
        }
        return 0;
    };
    CHECK(offset_of("p <-> (q") == 9);
    CHECK(offset_of("p &") == 4);
    CHECK(offset_of("p q") == 3);
    CHECK(offset_of("p - q") == 3);
    CHECK(offset_of("(p") == 3);
    CHECK(offset_of("") == 1);
    CHECK(offset_of("p # q") == 3);

    try {
        (void)parse("x & p", sig2());
        CHECK(false);
    } catch (const unknown_atom_error& e) {
        CHECK(e.name() == "x");
    }
}

TEST_CASE("parse_collecting grows the atom list in first-appearance order") {
    std::vector<std::string> atoms;
    const formula f = parse_collecting("q -> p & q", atoms);
    CHECK(atoms == std::vector<std::string>{"q", "p"});
    (void)parse_collecting("r | q", atoms);
    CHECK(atoms == std::vector<std::string>{"q", "p", "r"});
    CHECK(f.type() == formula::kind::implication);
}

TEST_CASE("truth tables follow the bit convention") {
    const signature s = sig2();
    CHECK(tt_bits(f2("false"), s) == 0);
    CHECK(tt_bits(f2("p & q"), s) == 1);
    CHECK(tt_bits(f2("p"), s) == 3);
    CHECK(tt_bits(f2("q"), s) == 5);
    CHECK(tt_bits(f2("p | q"), s) == 7);
    CHECK(tt_bits(f2("p <-> q"), s) == 9);
    CHECK(tt_bits(f2("!q"), s) == 10);
    CHECK(tt_bits(f2("!p"), s) == 12);
    CHECK(tt_bits(f2("p -> q"), s) == 13);
    CHECK(tt_bits(f2("true"), s) == 15);
    CHECK(tt_bits(f2("!!p"), s) == 3);

    const signature t = sig3();
    CHECK(tt_bits(f3("p"), t) == 15);
    CHECK(tt_bits(f3("q"), t) == 51);
    CHECK(tt_bits(f3("r"), t) == 85);
    CHECK(tt_bits(f3("p & q & r"), t) == 1);
    CHECK(tt_bits(f3("p | q | r"), t) == 127);
    CHECK(tt_bits(f3("p -> (q -> r)"), t) == 253);

    const truth_table tab(f2("p"), s);
    CHECK(tab.bits() == 3);
    CHECK(tab.value(2));
    CHECK(tab.value(3));
    CHECK_FALSE(tab.value(0));
    CHECK(tab == truth_table(3u, s));
}

TEST_CASE("entailment implements classical consequence") {
    const signature s = sig2();
    CHECK(entails({f2("p"), f2("p -> q")}, f2("q"), s));
    CHECK(entails(std::vector<formula>{}, f2("p | !p"), s));
    CHECK_FALSE(entails({f2("p")}, f2("q"), s));
    CHECK_FALSE(entails({f2("p | q")}, f2("p"), s));
    CHECK(entails({f2("q")}, f2("p | q"), s));
    CHECK(entails({f2("false")}, f2("p & !p"), s));

    CHECK(is_tautology(f2("p | !p"), s));
    CHECK(is_tautology(f2("(p -> q) | (q -> p)"), s));
    CHECK_FALSE(is_tautology(f2("p & q"), s));
}

TEST_CASE("deduction theorem holds over the whole 2-atom universe") {
    const signature s = sig2();
    const universe u = build_universe(s);
    for (std::uint32_t a = 0; a < u.size(); ++a)
        for (std::uint32_t b = 0; b < u.size(); ++b)
            for (std::uint32_t c = 0; c < u.size(); ++c) {
                const bool lhs = entails({u.rep(a), u.rep(b)}, u.rep(c), s);
                const bool rhs = entails({u.rep(a)}, formula::implication(u.rep(b), u.rep(c)), s);
                REQUIRE(lhs == rhs);
            }
}

TEST_CASE("closed-set equality and expansion") {
    const signature s = sig2();
    CHECK(closed_set_equal({f2("p"), f2("q")}, {f2("p & q")}, s));
    CHECK_FALSE(closed_set_equal({f2("p")}, {f2("p | q")}, s));
    CHECK(closed_set_equal({f2("q"), f2("p | q")}, {f2("q")}, s));

    const auto e1 = expand({f2("q")}, f2("p"));
    REQUIRE(e1.size() == 2);
    CHECK(render(e1[0]) == "q");
    CHECK(render(e1[1]) == "p");
    CHECK(expand({f2("p")}, f2("p")).size() == 1);
    CHECK(expand({}, f2("p & q")).size() == 1);
}

TEST_CASE("universe enumeration is exhaustive and self-indexing") {
    CHECK(enumerate_universe(signature(std::vector<std::string>{})).size() == 2);
    CHECK(enumerate_universe(signature({"p"})).size() == 4);

    const signature s = sig2();
    const universe u = build_universe(s);
    REQUIRE(u.size() == 16);
    CHECK(render(u.classes[0]) == "false");
    CHECK(render(u.classes[15]) == "true");
    for (std::uint32_t b = 0; b < u.size(); ++b) {
        CHECK(tt_bits(u.rep(b), s) == b);
        CHECK(u.bits_of(u.rep(b)) == b);
        CHECK(u.bits_of(u.display(b)) == b);
    }
}

TEST_CASE("display picks the shortest known equivalent") {
    const universe u = build_universe(sig2());
    const std::vector<std::string> expected = {
        "false",     // 0
        "p & q",     // 1
        "p & !q",    // 2
        "p",         // 3
        "!p & q",    // 4
        "q",         // 5
        "p <-> !q",  // 6
        "p | q",     // 7
        "!p & !q",   // 8
        "p <-> q",   // 9
        "!q",        // 10
        "p | !q",    // 11
        "!p",        // 12
        "p -> q",    // 13
        "p -> !q",   // 14
        "true",      // 15
    };
    for (std::uint32_t b = 0; b < u.size(); ++b) {
        CHECK(u.display_text(b) == expected[b]);
        CHECK(u.display_text(b).size() <= render(u.classes[b]).size());
    }
    CHECK(u.display_text(parse("!(p | !q)", sig2())) == "!p & q");
}
