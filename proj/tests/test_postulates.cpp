#include "enscon/postulates.hpp"

#include <doctest.h>

#include <string>
#include <vector>

using namespace enscon;

namespace {

ensconcement ens(const std::string& text) { return parse_ensconcement(text); }

const universe& u2() {
    static const universe u = build_universe(signature({"p", "q"}));
    return u;
}

} // namespace

TEST_CASE("postulate catalog names round-trip") {
    const auto& all = postulate_catalog();
    CHECK(all.size() == 34);
    for (const postulate_id id : all) {
        const auto back = postulate_by_name(name_of(id));
        REQUIRE(back.has_value());
        CHECK(*back == id);
    }
    CHECK(postulate_by_name("relative-closure") == postulate_id::relative_closure);
    CHECK(postulate_by_name("EE1") == postulate_id::ee1);
    CHECK(postulate_by_name("div7a") == postulate_id::div7a);
    CHECK_FALSE(postulate_by_name("nonsense").has_value());

    CHECK(kind_of(postulate_id::success) == operator_kind::base_contraction);
    CHECK(kind_of(postulate_id::recovery) == operator_kind::withdrawal);
    CHECK(kind_of(postulate_id::ee5) == operator_kind::entrenchment);
}

TEST_CASE("suite membership") {
    CHECK(suite_by_name("brutal-base") == suite_id::brutal_base);
    CHECK(suite_by_name("bounded-brutal-base") == suite_id::bounded_brutal_base);
    CHECK(name_of(suite_id::ensconcement_severe) == "ensconcement-severe");

    CHECK(suite_postulates(suite_id::brutal_base).size() == 7);
    CHECK(suite_postulates(suite_id::bounded_brutal_base).size() == 8);
    CHECK(suite_postulates(suite_id::severe_withdrawal).size() == 7);
    CHECK(suite_postulates(suite_id::ensconcement_severe).size() == 9);
    CHECK(suite_postulates(suite_id::entrenchment).size() == 5);

    CHECK(kind_of(suite_id::bounded_brutal_base) == operator_kind::base_contraction);
    CHECK(kind_of(suite_id::severe_withdrawal) == operator_kind::withdrawal);
    CHECK(kind_of(suite_id::entrenchment) == operator_kind::entrenchment);

    for (const postulate_id id : suite_postulates(suite_id::bounded_brutal_base))
        CHECK(kind_of(id) == operator_kind::base_contraction);
}

TEST_CASE("brutal contraction passes both base suites") {
    for (const char* text :
         {"0 : p\n1 : q\n", "0 : p\n0 : q\n1 : p | q\n", "0 : p & q\n", "atoms p q\n0 : p\n"}) {
        const auto e = ens(text);
        const auto op = brutal_op(e);
        for (const suite_id s : {suite_id::brutal_base, suite_id::bounded_brutal_base}) {
            const auto reports = check_suite(s, op, u2());
            CHECK(reports.size() == suite_postulates(s).size());
            CHECK(all_pass(reports));
            for (const auto& r : reports)
                CHECK(render_report(r, u2()) == std::string(name_of(r.id)) + ": PASS");
        }
    }
}

TEST_CASE("the identity operator fails success with a frozen report") {
    const signature& s = u2().sig;
    const std::vector<formula> base = {parse("p", s), parse("q", s)};
    const base_contraction_op op(base, s, [base](const formula&) { return base; });

    const auto r = check_postulate(postulate_id::success, op, u2());
    REQUIRE_FALSE(r.pass);
    CHECK(render_report(r, u2()) == "success: FAIL α=p & q — A − α entails α");
    CHECK(render_report_machine(r, u2()) ==
          "postulate: success\nstatus: FAIL\nalpha: p & q\nreason: A − α entails α");

    const auto ok = check_postulate(postulate_id::failure, op, u2());
    CHECK(ok.pass);
    CHECK(render_report_machine(ok, u2()) == "postulate: failure\nstatus: PASS");
}

TEST_CASE("inclusion rejects results outside the base") {
    const signature& s = u2().sig;
    const std::vector<formula> base = {parse("p", s), parse("q", s)};
    const base_contraction_op op(base, s, [](const formula& f) { return std::vector<formula>{f}; });
    const auto r = check_postulate(postulate_id::inclusion, op, u2());
    REQUIRE_FALSE(r.pass);
    CHECK(render_report(r, u2()).rfind("inclusion: FAIL α=false", 0) == 0);
}

TEST_CASE("severe withdrawal fails recovery with the frozen witness") {
    const auto e = ens("0 : p & q\n");
    const auto w = severe_withdrawal(e);
    const auto r = check_postulate(postulate_id::recovery, w, u2());
    REQUIRE_FALSE(r.pass);
    CHECK(render_report(r, u2()) == "recovery: FAIL α=p β=p & q — β ∈ K but β ∉ (K ÷ α) + α");
    CHECK(render_report_machine(r, u2()) ==
          "postulate: recovery\nstatus: FAIL\nalpha: p\nbeta: p & q\n"
          "reason: β ∈ K but β ∉ (K ÷ α) + α");

    // The two-element chain fails recovery too, at the lower member.
    const auto r2 = check_postulate(postulate_id::recovery, severe_withdrawal(ens("0 : p\n1 : q\n")),
                                    u2());
    REQUIRE_FALSE(r2.pass);
    CHECK(render_report(r2, u2()) == "recovery: FAIL α=q β=p & q — β ∈ K but β ∉ (K ÷ α) + α");
}

TEST_CASE("severe withdrawal passes its suites and the strong extras") {
    for (const char* text :
         {"0 : p\n1 : q\n", "0 : p\n0 : q\n1 : p | q\n", "0 : p & q\n", "atoms p q\n0 : p\n"}) {
        const auto e = ens(text);
        const auto w = severe_withdrawal(e);
        CHECK(all_pass(check_suite(suite_id::severe_withdrawal, w, u2())));
        CHECK(all_pass(check_suite(suite_id::ensconcement_severe, w, u2())));
        for (const postulate_id id :
             {postulate_id::div7a, postulate_id::div8, postulate_id::div10, postulate_id::linearity,
              postulate_id::expulsiveness}) {
            const auto r = check_postulate(id, w, u2());
            CHECK(r.pass);
        }
    }
}

TEST_CASE("derived entrenchment passes EE1 through EE5") {
    for (const char* text :
         {"0 : p\n1 : q\n", "0 : p & q\n", "0 : p\n0 : q\n1 : p | q\n", "atoms p q\n"}) {
        const auto e = parse_ensconcement(text);
        const auto reports = check_suite(suite_id::entrenchment, derived_entrenchment(e), u2());
        CHECK(all_pass(reports));
    }
}

TEST_CASE("a broken relation fails dominance") {
    const signature& s = u2().sig;
    const belief_set k{{parse("p", s)}, s};
    const entrenchment_relation r(k, [](const formula&, const formula&) { return false; });
    const auto rep = check_postulate(postulate_id::ee2, r, u2());
    REQUIRE_FALSE(rep.pass);
    CHECK(render_report(rep, u2()) == "EE2: FAIL α=false β=false — α ⊢ β but not α ≤ β");
    CHECK(check_postulate(postulate_id::ee1, r, u2()).pass); // transitivity is vacuous here
}

TEST_CASE("operator kind mismatches are rejected") {
    const auto e = ens("0 : p\n1 : q\n");
    CHECK_THROWS_AS((void)check_postulate(postulate_id::div1, brutal_op(e), u2()), error);
    CHECK_THROWS_AS((void)check_postulate(postulate_id::success, severe_withdrawal(e), u2()),
                    error);
    CHECK_THROWS_AS((void)check_postulate(postulate_id::ee1, severe_withdrawal(e), u2()), error);
}

TEST_CASE("quantified checking is capped at three atoms") {
    const signature s4({"a", "b", "c", "d"});
    const universe u4 = build_universe(s4);
    const auto e = parse_ensconcement("atoms a b c d\n0 : a\n");
    CHECK_THROWS_AS((void)check_postulate(postulate_id::success, brutal_op(e), u4),
                    ceiling_error);
}

TEST_CASE("counterexample search scans a deterministic stream") {
    const ensconcement_source conj_source = [](std::size_t) {
        return parse_ensconcement("0 : p & q\n");
    };
    const auto hit = search_counterexample(postulate_id::recovery, conj_source, 10, u2());
    REQUIRE(hit.has_value());
    CHECK_FALSE(hit->report.pass);
    CHECK(to_text(hit->e) == "atoms p q\n0 : p & q\n");

    const auto miss = search_counterexample(postulate_id::success, conj_source, 5, u2());
    CHECK_FALSE(miss.has_value());

    const auto ee_hit = search_counterexample(postulate_id::ee1, conj_source, 5, u2());
    CHECK_FALSE(ee_hit.has_value());

    CHECK_THROWS_AS((void)search_counterexample(postulate_id::recovery, conj_source, 0, u2()),
                    error);
    const ensconcement_source other_sig = [](std::size_t) {
        return parse_ensconcement("atoms a b\n0 : a\n");
    };
    CHECK_THROWS_AS((void)search_counterexample(postulate_id::recovery, other_sig, 3, u2()),
                    error);
}
