#pragma once

// Every named postulate as an executable predicate over an operator and a
// finite quantification universe. Quantifiers range over the canonical
// class representatives; extensionality checks cover the gap between
// representative-level and all-formula quantification.

#include "enscon/operators.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace enscon {

enum class postulate_id {
    success,
    inclusion,
    vacuity,
    failure,
    relative_closure,
    strong_inclusion,
    uniform_behaviour,
    extensionality,
    upper_bound,
    lower_bound,
    clustering,
    afterpost_a,
    afterpost_b,
    afterpost_c,
    recovery,
    div1,
    div2,
    div3,
    div4,
    div6,
    div7a,
    div8,
    div9,
    div10,
    linearity,
    expulsiveness,
    base_reduction,
    div_upper_bound,
    div_lower_bound,
    ee1,
    ee2,
    ee3,
    ee4,
    ee5,
};

enum class operator_kind { base_contraction, withdrawal, entrenchment };

operator_kind kind_of(postulate_id id);
std::string_view name_of(postulate_id id);
std::optional<postulate_id> postulate_by_name(std::string_view name);
const std::vector<postulate_id>& postulate_catalog();

struct counterexample {
    /// Outer quantifier bindings in statement order; keys are the Greek
    /// letters used in reports ("α", "β", "γ").
    std::vector<std::pair<std::string, formula>> bindings;
    /// Subset binding for the bound postulates.
    std::vector<formula> x_set;
    std::string reason;
};

struct postulate_report {
    postulate_id id;
    bool pass = true;
    std::optional<counterexample> ce;
};

/// `NAME: PASS` or `NAME: FAIL α=.. [β=..] [γ=..] [X={..}] — reason`.
std::string render_report(const postulate_report& r, const universe& u);
/// Key-value record: postulate, status, alpha, beta, gamma, xset, reason.
std::string render_report_machine(const postulate_report& r, const universe& u);

enum class suite_id {
    brutal_base,
    bounded_brutal_base,
    severe_withdrawal,
    ensconcement_severe,
    entrenchment,
};

std::string_view name_of(suite_id s);
std::optional<suite_id> suite_by_name(std::string_view name);
const std::vector<postulate_id>& suite_postulates(suite_id s);
/// Operator kind every postulate in the suite applies to.
operator_kind kind_of(suite_id s);

/// Throws when the postulate does not apply to the operator kind. Any FAIL
/// report has been re-verified against the raw operator before returning.
postulate_report check_postulate(postulate_id id, const base_contraction_op& op,
                                 const universe& u);
postulate_report check_postulate(postulate_id id, const withdrawal_op& w, const universe& u);
postulate_report check_postulate(postulate_id id, const entrenchment_relation& r,
                                 const universe& u);

std::vector<postulate_report> check_suite(suite_id s, const base_contraction_op& op,
                                          const universe& u);
std::vector<postulate_report> check_suite(suite_id s, const withdrawal_op& w, const universe& u);
std::vector<postulate_report> check_suite(suite_id s, const entrenchment_relation& r,
                                          const universe& u);

bool all_pass(const std::vector<postulate_report>& reports);

/// Deterministic ensconcement stream indexed from 0.
using ensconcement_source = std::function<ensconcement(std::size_t index)>;

struct search_result {
    ensconcement e;
    postulate_report report;
};

/// Checks `id` against the operator of its kind built from each generated
/// ensconcement (brutal contraction, severe withdrawal, or derived
/// entrenchment) and returns the first failure within budget.
std::optional<search_result> search_counterexample(postulate_id id, const ensconcement_source& gen,
                                                   std::size_t budget, const universe& u);

} // namespace enscon
