#include "enscon/ensconcement.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

using namespace enscon;

namespace {

ensconcement ens(const std::string& text, load_options opts = {}) {
    return parse_ensconcement(text, opts);
}

std::vector<std::string> renders(const std::vector<formula>& fs) {
    std::vector<std::string> out;
    for (const formula& f : fs) out.push_back(render(f));
    return out;
}

} // namespace

TEST_CASE("construction checks entries") {
    const signature s({"p", "q"});
    const formula p = parse("p", s);
    const formula q = parse("q", s);
    const ensconcement e(s, {{p, 0}, {q, 1}});
    CHECK(e.size() == 2);
    CHECK_FALSE(e.empty());
    CHECK(e.base()[0] == p);
    CHECK(e.rank_of(p) == 0);
    CHECK(e.rank_of(q) == 1);
    CHECK_FALSE(e.rank_of(parse("p & q", s)).has_value());

    CHECK_THROWS_AS(ensconcement(s, {{p, -1}}), error);
    CHECK_THROWS_AS(ensconcement(s, {{p, 0}, {p, 1}}), error);
    // Equivalent but syntactically distinct entries are a ranking on
    // sentences, not classes.
    CHECK_NOTHROW(ensconcement(s, {{p, 0}, {parse("!!p", s), 0}}));
    CHECK_NOTHROW(ensconcement(signature(std::vector<std::string>{}), {}));
}

TEST_CASE("validation reports the axiom of each violation") {
    SUBCASE("higher cohort entailing a non-tautology breaks E1") {
        const auto e = parse_ensconcement_raw("0 : p & q\n1 : p\n2 : q\n");
        const auto res = validate(e);
        REQUIRE_FALSE(res.ok());
        REQUIRE(res.violations.size() == 1);
        CHECK(res.violations[0].axiom == 1);
        CHECK(render(res.violations[0].witness_a) == "p & q");
        const std::string line = render_violation(res.violations[0]);
        CHECK(line.rfind("violation E1: β=p & q — ", 0) == 0);
    }
    SUBCASE("entailed member at the same rank is fine") {
        CHECK(validate(ens("0 : p\n0 : q\n1 : p | q\n")).ok());
        CHECK(validate(ens("0 : p\n1 : q\n")).ok());
        CHECK(validate(ens("")).ok());
    }
    SUBCASE("tautology ranked at a non-tautology breaks E2") {
        const auto e = parse_ensconcement_raw("1 : p\n0 : p | !p\n");
        const auto res = validate(e);
        REQUIRE_FALSE(res.ok());
        CHECK(res.violations[0].axiom == 2);
        CHECK(render_violation(res.violations[0]).rfind("violation E2: ", 0) == 0);
    }
    SUBCASE("tautologies at two ranks break E3") {
        const auto e = parse_ensconcement_raw("0 : p\n1 : p | !p\n2 : q | !q\n");
        const auto res = validate(e);
        REQUIRE_FALSE(res.ok());
        bool saw_e3 = false;
        for (const auto& v : res.violations) saw_e3 = saw_e3 || v.axiom == 3;
        CHECK(saw_e3);
    }
    SUBCASE("member entailed by a strictly higher member breaks E1") {
        const auto e = parse_ensconcement_raw("0 : p\n1 : p & q\n");
        const auto res = validate(e);
        REQUIRE_FALSE(res.ok());
        CHECK(res.violations[0].axiom == 1);
        CHECK(render(res.violations[0].witness_a) == "p");
    }
}

TEST_CASE("cut_nonstrict matches the strict-cohort definition") {
    const auto e = ens("0 : p\n1 : q\n");
    const signature& s = e.sig();

    const auto cp = cut_nonstrict(e, parse("p", s));
    CHECK_FALSE(cp.out_of_domain);
    CHECK(renders(cp.members) == std::vector<std::string>{"p", "q"});

    const auto cq = cut_nonstrict(e, parse("q", s));
    CHECK_FALSE(cq.out_of_domain);
    CHECK(renders(cq.members) == std::vector<std::string>{"q"});

    const auto ct = cut_nonstrict(e, parse("p | !p", s));
    CHECK_FALSE(ct.out_of_domain);
    CHECK(ct.members.empty());

    // !p is not entailed by {p, q}: outside the operator's domain.
    const auto cn = cut_nonstrict(e, parse("!p", s));
    CHECK(cn.out_of_domain);
    CHECK(cn.members.empty());
}

TEST_CASE("cut_proper matches the non-strict-cohort definition") {
    const auto e1 = ens("0 : p\n1 : q\n");
    CHECK(renders(cut_proper(e1, parse("p", e1.sig()))) == std::vector<std::string>{"q"});
    CHECK(cut_proper(e1, parse("q", e1.sig())).empty());
    CHECK(cut_proper(e1, parse("p | !p", e1.sig())).empty());

    const auto e2 = ens("0 : p\n0 : q\n1 : p | q\n");
    CHECK(renders(cut_proper(e2, parse("p", e2.sig()))) == std::vector<std::string>{"p | q"});

    // A ⊬ f keeps the whole base.
    const auto e3 = ens("atoms p q\n0 : p\n");
    CHECK(renders(cut_proper(e3, parse("q", e3.sig()))) == std::vector<std::string>{"p"});
}

TEST_CASE("cut_proper is included in cut_nonstrict on its domain") {
    const auto e = ens("0 : p\n0 : q\n1 : p | q\n");
    const signature& s = e.sig();
    const universe u = build_universe(s);
    for (std::uint32_t b = 0; b < u.size(); ++b) {
        const formula& f = u.rep(b);
        const auto nonstrict = cut_nonstrict(e, f);
        const auto proper = cut_proper(e, f);
        CHECK(nonstrict.out_of_domain == !entails(e.base(), f, s));
        if (nonstrict.out_of_domain) continue;
        for (const formula& m : proper) {
            bool found = false;
            for (const formula& n : nonstrict.members) found = found || n == m;
            CHECK(found);
        }
    }
}

TEST_CASE("cut_proper of a base member keeps its strict upper cohort") {
    const auto e = ens("atoms p q r\n0 : p\n1 : q\n2 : r\n");
    CHECK(renders(cut_proper(e, parse("q", e.sig()))) == std::vector<std::string>{"r"});
    CHECK(renders(cut_proper(e, parse("p", e.sig()))) == std::vector<std::string>{"q", "r"});
    CHECK(cut_proper(e, parse("r", e.sig())).empty());
}

TEST_CASE("file format accepts headers, comments, and blank lines") {
    const auto e = ens("# ranked base\natoms p q\n\n0 : p   # explicit\n1 : q\n");
    CHECK(e.size() == 2);
    CHECK(e.sig().atoms() == std::vector<std::string>{"p", "q"});
    CHECK(e.rank_of(parse("q", e.sig())) == 1);

    // Without a header the signature collects atoms by first appearance.
    const auto f = ens("0 : q\n1 : p | q\n");
    CHECK(f.sig().atoms() == std::vector<std::string>{"q", "p"});

    // Spacing around the colon is free.
    const auto g = ens("0: p\n1: q\n");
    CHECK(g.size() == 2);
}

TEST_CASE("file format rejects malformed lines") {
    CHECK_THROWS_AS(ens("x : p\n"), error);
    CHECK_THROWS_AS(ens("0 p\n"), error);
    CHECK_THROWS_AS(ens("-1 : p\n"), error);
    CHECK_THROWS_AS(ens("0 : p\n1 : p\n"), error);           // duplicate entry
    CHECK_THROWS_AS(ens("atoms p\n0 : q\n"), error);         // atom outside header
    CHECK_THROWS_AS(ens("0 : p &\n"), error);                // bad formula
    CHECK_THROWS_AS(ens("0 : p\n1 : p & q\n"), error);       // fails validation
    CHECK_NOTHROW(parse_ensconcement_raw("0 : p\n1 : p & q\n"));
}

TEST_CASE("tautology lifting repairs E2 and E3 on load") {
    const std::string text = "0 : p\n0 : p | !p\n";
    CHECK_THROWS_AS(ens(text), error);
    const auto e = ens(text, load_options{true});
    CHECK(validate(e).ok());
    CHECK(e.rank_of(parse("p", e.sig())) == 0);
    CHECK(e.rank_of(parse("p | !p", e.sig())) == 1);
}

TEST_CASE("to_text round-trips and is canonical") {
    const auto e = ens("0: p\n1: q\n");
    CHECK(to_text(e) == "atoms p q\n0 : p\n1 : q\n");
    const auto back = ens(to_text(e));
    CHECK(back.sig() == e.sig());
    REQUIRE(back.size() == e.size());
    for (std::size_t i = 0; i < back.size(); ++i) {
        CHECK(back.entries()[i].f == e.entries()[i].f);
        CHECK(back.entries()[i].rank == e.entries()[i].rank);
    }
}

TEST_CASE("file loading") {
    const std::string path = "enscon_test_tmp.ens";
    {
        std::ofstream out(path);
        out << "atoms p q\n0 : p & q\n";
    }
    const auto e = load_ensconcement_file(path);
    CHECK(e.size() == 1);
    CHECK(render(e.base()[0]) == "p & q");
    CHECK_NOTHROW(load_ensconcement_file_raw(path));
    std::remove(path.c_str());
    CHECK_THROWS_AS(load_ensconcement_file(path), error);
}

TEST_CASE("belief set membership is entailment from the generators") {
    const signature s({"p", "q"});
    const belief_set k{{parse("p", s), parse("q", s)}, s};
    CHECK(k.member(parse("p & q", s)));
    CHECK(k.member(parse("p | q", s)));
    CHECK_FALSE(k.member(parse("!p", s)));
}
