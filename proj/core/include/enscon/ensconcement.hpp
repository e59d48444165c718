#pragma once

// Ranked belief bases: a finite base with a total preorder encoded as
// integer ranks (higher = more ensconced), the three well-formedness
// axioms, and the two cut operators.
//
// Axiom names used throughout:
//   E1: for non-tautological β, the strictly-higher-ranked cohort must
//       not entail β
//   E2: every non-tautology ranks strictly below every tautology
//   E3: all tautologies share one rank
//
// Cut naming. The two cuts are distinguished by the cohort comparison on
// the INSIDE, which is the opposite of what the names suggest at a
// glance:
//   cut_nonstrict(f) = {β : {γ : rank(γ) >  rank(β)} ⊬ f}   (strict cohort)
//   cut_proper(f)    = {β : {γ : rank(γ) >= rank(β)} ⊬ f}   (non-strict cohort)
// cut_proper is a subset of cut_nonstrict and is defined for every f;
// cut_nonstrict is only meaningful for f entailed by the base.

#include "enscon/logic.hpp"

#include <optional>
#include <string>
#include <vector>

namespace enscon {

class ensconcement {
public:
    struct entry {
        formula f;
        int rank;
    };

    /// Throws on negative ranks or syntactically duplicate formulas.
    /// Logically equivalent duplicates at any ranks are permitted; the
    /// ordering lives on sentences, not equivalence classes.
    ensconcement(signature sig, std::vector<entry> entries);

    const signature& sig() const { return sig_; }
    const std::vector<entry>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

    /// Base formulas in entry order.
    const std::vector<formula>& base() const { return base_; }

    /// Rank of a base member, matched syntactically.
    std::optional<int> rank_of(const formula& f) const;

private:
    signature sig_;
    std::vector<entry> entries_;
    std::vector<formula> base_;
};

struct axiom_violation {
    int axiom; // 1, 2, or 3
    formula witness_a;
    std::optional<formula> witness_b;
    std::string reason;
};

struct validation_result {
    std::vector<axiom_violation> violations;
    bool ok() const { return violations.empty(); }
};

validation_result validate(const ensconcement& e);

/// One line per violation: `violation E<k>: α=<f> [β=<f>] — <reason>`.
std::string render_violation(const axiom_violation& v);

struct cut_result {
    std::vector<formula> members; // subset of the base, in base order
    /// Set when the cut argument is not entailed by the base; the member
    /// list is then empty rather than extrapolated.
    bool out_of_domain = false;
};

cut_result cut_nonstrict(const ensconcement& e, const formula& f);
std::vector<formula> cut_proper(const ensconcement& e, const formula& f);

/// Logically closed set Cn(generators), represented by its finite
/// generating base; membership is decided by entailment.
struct belief_set {
    std::vector<formula> generators;
    signature sig;

    bool member(const formula& f) const { return entails(generators, f, sig); }
};

struct load_options {
    /// Repair E2/E3 failures by moving every tautology to one rank above
    /// the highest non-tautology instead of rejecting the file.
    bool lift_tautologies = false;
};

/// Parses the line-oriented format:
///   atoms p q r        (optional header fixing the signature and order)
///   <rank> : <formula> (rank a non-negative decimal integer)
///   # comment          (also allowed at end of line)
/// Blank lines are ignored. Without a header the signature is collected
/// from the formulas in order of first appearance.
/// Validates the result and throws on any axiom violation.
ensconcement parse_ensconcement(std::string_view text, const load_options& opts = {});

/// Same parse, skipping axiom validation (duplicate-formula and rank
/// checks still apply). Callers that want to report violations as data
/// run validate() themselves.
ensconcement parse_ensconcement_raw(std::string_view text, const load_options& opts = {});

ensconcement load_ensconcement_file(const std::string& path, const load_options& opts = {});
ensconcement load_ensconcement_file_raw(const std::string& path, const load_options& opts = {});

/// Canonical file text: `atoms` header, then one `<rank> : <formula>`
/// line per entry in entry order. Reparsing yields an equal ensconcement.
std::string to_text(const ensconcement& e);

} // namespace enscon
