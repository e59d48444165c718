#include "enscon/operators.hpp"

#include <doctest.h>

#include <string>
#include <vector>

using namespace enscon;

namespace {

ensconcement ens(const std::string& text) { return parse_ensconcement(text); }

std::vector<std::string> renders(const std::vector<formula>& fs) {
    std::vector<std::string> out;
    for (const formula& f : fs) out.push_back(render(f));
    return out;
}

} // namespace

TEST_CASE("brutal contraction takes the proper cut") {
    const auto e1 = ens("0 : p\n1 : q\n");
    const signature& s = e1.sig();
    CHECK(renders(brutal_contract(e1, parse("p", s))) == std::vector<std::string>{"q"});
    CHECK(brutal_contract(e1, parse("q", s)).empty());
    // Tautology: whole base survives.
    CHECK(renders(brutal_contract(e1, parse("p | !p", s))) == std::vector<std::string>{"p", "q"});
    // Argument not entailed by the base: whole base survives too.
    CHECK(renders(brutal_contract(e1, parse("!p", s))) == std::vector<std::string>{"p", "q"});

    const auto e2 = ens("0 : p\n0 : q\n1 : p | q\n");
    CHECK(renders(brutal_contract(e2, parse("p", e2.sig()))) == std::vector<std::string>{"p | q"});

    const auto e3 = ens("0 : p & q\n");
    CHECK(brutal_contract(e3, parse("p", e3.sig())).empty());

    const auto op = brutal_op(e1);
    CHECK(op.base() == e1.base());
    CHECK(op.sig() == s);
    CHECK(renders(op(parse("p", s))) == std::vector<std::string>{"q"});
}

TEST_CASE("derived entrenchment compares non-strict cuts") {
    const auto e = ens("0 : p\n1 : q\n");
    const signature& s = e.sig();
    const auto r = derived_entrenchment(e);
    const formula p = parse("p", s);
    const formula q = parse("q", s);
    const formula np = parse("!p", s);
    const formula taut = parse("p | !p", s);

    CHECK(r.leq(p, q));
    CHECK_FALSE(r.leq(q, p));
    CHECK(r.lt(p, q));
    CHECK(r.equivalent(p, p));

    // Non-beliefs sit strictly at the bottom.
    CHECK(r.leq(np, p));
    CHECK_FALSE(r.leq(p, np));

    // Tautologies sit at the top.
    CHECK(r.leq(p, taut));
    CHECK(r.leq(q, taut));
    CHECK_FALSE(r.leq(taut, q));

    CHECK(r.K().member(p));
    CHECK_FALSE(r.K().member(np));
    CHECK(r.sig() == s);
}

TEST_CASE("severe withdrawal keeps what is strictly more entrenched") {
    const auto e1 = ens("0 : p\n1 : q\n");
    const signature& s = e1.sig();
    CHECK(severe_withdraw_member(e1, parse("p", s), parse("q", s)));
    CHECK(severe_withdraw_member(e1, parse("p", s), parse("p | q", s)));
    CHECK_FALSE(severe_withdraw_member(e1, parse("p", s), parse("p", s)));
    CHECK_FALSE(severe_withdraw_member(e1, parse("q", s), parse("p", s)));

    const auto e3 = ens("0 : p & q\n");
    CHECK_FALSE(severe_withdraw_member(e3, parse("p", e3.sig()), parse("q", e3.sig())));
    // Tautologies are never withdrawn.
    CHECK(severe_withdraw_member(e3, parse("p", e3.sig()), parse("p | !p", e3.sig())));

    // α outside K leaves K untouched.
    const auto e4 = ens("atoms p q\n0 : p\n");
    CHECK(severe_withdraw_member(e4, parse("q", e4.sig()), parse("p", e4.sig())));
    // So does a tautological α.
    CHECK(severe_withdraw_member(e4, parse("p | !p", e4.sig()), parse("p", e4.sig())));
}

TEST_CASE("severe withdrawal restricted to the base matches brutal contraction") {
    const auto cases = {
        "0 : p\n1 : q\n",
        "0 : p\n0 : q\n1 : p | q\n",
        "0 : p & q\n",
        "atoms p q\n0 : p\n",
        "0 : p\n1 : p | q\n",
    };
    for (const char* text : cases) {
        const auto e = ens(text);
        const universe u = build_universe(e.sig());
        for (std::uint32_t b = 0; b < u.size(); ++b) {
            const auto lhs = severe_withdraw_base(e, u.rep(b));
            const auto rhs = brutal_contract(e, u.rep(b));
            CHECK(renders(lhs) == renders(rhs));
        }
    }

    const auto e1 = ens("0 : p\n1 : q\n");
    CHECK(renders(severe_withdraw_base(e1, parse("p", e1.sig()))) ==
          std::vector<std::string>{"q"});
    const auto w = severe_withdrawal(e1);
    CHECK(renders(w.generating_base(parse("p", e1.sig()))) == std::vector<std::string>{"q"});
    CHECK(w.member(parse("p", e1.sig()), parse("q", e1.sig())));
    CHECK_FALSE(w.member(parse("p", e1.sig()), parse("p & q", e1.sig())));
}

TEST_CASE("the disjunction-threshold contraction interpolates") {
    const auto e = ens("0 : p\n1 : q\n");
    const signature& s = e.sig();
    CHECK(g_contract_member(e, parse("p", s), parse("q", s)));

    const auto e3 = ens("0 : p & q\n");
    // cut(p ∨ (p∨q)) equals cut(p): not strict, so p∨q is dropped here too.
    CHECK_FALSE(g_contract_member(e3, parse("p", e3.sig()), parse("p | q", e3.sig())));
    // ⊢ α branch keeps everything in K.
    CHECK(g_contract_member(e3, parse("p | !p", e3.sig()), parse("p & q", e3.sig())));

    for (const char* text : {"0 : p\n1 : q\n", "0 : p & q\n", "0 : p\n0 : q\n1 : p | q\n"}) {
        const auto ei = ens(text);
        const universe u = build_universe(ei.sig());
        const auto w = severe_withdrawal(ei);
        const auto g = g_contraction(ei);
        for (std::uint32_t a = 0; a < u.size(); ++a)
            for (std::uint32_t b = 0; b < u.size(); ++b) {
                if (w.member(u.rep(a), u.rep(b))) CHECK(g.member(u.rep(a), u.rep(b)));
                if (g.member(u.rep(a), u.rep(b))) CHECK(w.K().member(u.rep(b)));
            }
    }
}

TEST_CASE("table operators are extensional and base-checked") {
    const signature s({"p", "q"});
    const universe u = build_universe(s);
    const formula p = parse("p", s);
    const formula q = parse("q", s);
    const std::vector<formula> base = {p, q};

    std::vector<std::vector<formula>> results(u.size(), base);
    results[tt_bits(p, s)] = {q};
    const auto op = table_op(base, u, results);
    CHECK(renders(op(p)) == std::vector<std::string>{"q"});
    // Keyed by class: an equivalent argument gets the same answer.
    CHECK(renders(op(parse("!!p", s))) == std::vector<std::string>{"q"});
    CHECK(renders(op(parse("p & p", s))) == std::vector<std::string>{"q"});
    CHECK(renders(op(q)) == std::vector<std::string>{"p", "q"});

    std::vector<std::vector<formula>> bad(u.size(), base);
    bad[0] = {parse("p & q", s)};
    CHECK_THROWS_AS(table_op(base, u, bad), error);
    CHECK_THROWS_AS(table_op(base, u, std::vector<std::vector<formula>>(3, base)), error);
}

TEST_CASE("ensconcement recovery from an operator orders by result inclusion") {
    SUBCASE("flat pair below their disjunction") {
        const auto e = ens("0 : p\n0 : q\n1 : p | q\n");
        const universe u = build_universe(e.sig());
        const auto rec = ensconcement_from_operator(brutal_op(e), u);
        const signature& s = rec.sig();
        REQUIRE(rec.size() == 3);
        CHECK(rec.rank_of(parse("p", s)) == rec.rank_of(parse("q", s)));
        CHECK(*rec.rank_of(parse("p", s)) < *rec.rank_of(parse("p | q", s)));
    }
    SUBCASE("strict pair stays strict") {
        const auto e = ens("0 : p\n1 : q\n");
        const universe u = build_universe(e.sig());
        const auto rec = ensconcement_from_operator(brutal_op(e), u);
        CHECK(*rec.rank_of(parse("p", rec.sig())) < *rec.rank_of(parse("q", rec.sig())));
    }
    SUBCASE("operator with incomparable results cannot be ranked") {
        const signature s({"p", "q"});
        const universe u = build_universe(s);
        const formula p = parse("p", s);
        const formula q = parse("q", s);
        std::vector<std::vector<formula>> results(u.size(), std::vector<formula>{p, q});
        results[tt_bits(p, s)] = {q};
        results[tt_bits(q, s)] = {p};
        const auto op = table_op({p, q}, u, results);
        CHECK_THROWS_AS(ensconcement_from_operator(op, u), construction_error);
        try {
            (void)ensconcement_from_operator(op, u);
        } catch (const construction_error& ce) {
            const std::string pair = render(ce.first()) + "/" + render(ce.second());
            CHECK((pair == "p/q" || pair == "q/p"));
        }
    }
    SUBCASE("round-trip reproduces the operator on the universe") {
        for (const char* text :
             {"0 : p\n1 : q\n", "0 : p\n0 : q\n1 : p | q\n", "0 : p & q\n", "0 : p\n1 : p | q\n"}) {
            const auto e = ens(text);
            const universe u = build_universe(e.sig());
            const auto rec = ensconcement_from_operator(brutal_op(e), u);
            for (std::uint32_t b = 0; b < u.size(); ++b)
                CHECK(renders(brutal_contract(rec, u.rep(b))) ==
                      renders(brutal_contract(e, u.rep(b))));
        }
    }
}

TEST_CASE("entrenchment recovered from a withdrawal represents it") {
    const auto e = ens("0 : p\n1 : q\n");
    const signature& s = e.sig();
    const auto w = severe_withdrawal(e);
    const auto r = entrenchment_from_withdrawal(w);

    CHECK(r.leq(parse("p", s), parse("q", s)));
    CHECK_FALSE(r.leq(parse("q", s), parse("p", s)));
    CHECK(r.leq(parse("q", s), parse("p | !p", s)));

    const auto w2 = severe_from_entrenchment(r, belief_set{e.base(), s});
    const universe u = build_universe(s);
    for (std::uint32_t a = 0; a < u.size(); ++a)
        for (std::uint32_t b = 0; b < u.size(); ++b)
            CHECK(w2.member(u.rep(a), u.rep(b)) == w.member(u.rep(a), u.rep(b)));
}
