#pragma once

// Change operators over ranked bases and the bridges between them:
// brutal base contraction, the derived entrenchment ordering, severe
// withdrawal, the Gardenfors contraction variant, and the reverse
// constructions that recover an ordering from an operator.

#include "enscon/ensconcement.hpp"
#include "enscon/logic.hpp"

#include <functional>
#include <memory>
#include <vector>

namespace enscon {

/// Total map from formulas to subsets of a fixed base.
class base_contraction_op {
public:
    using fn_type = std::function<std::vector<formula>(const formula&)>;

    base_contraction_op(std::vector<formula> base, signature sig, fn_type fn)
        : base_(std::move(base)), sig_(std::move(sig)), fn_(std::move(fn)) {}

    std::vector<formula> operator()(const formula& f) const { return fn_(f); }
    const std::vector<formula>& base() const { return base_; }
    const signature& sig() const { return sig_; }

private:
    std::vector<formula> base_;
    signature sig_;
    fn_type fn_;
};

/// Extensional operator table keyed by truth-table class, so logically
/// equivalent arguments cannot disagree by construction. Every listed
/// result formula must be a syntactic member of the base.
base_contraction_op table_op(std::vector<formula> base, const universe& u,
                             std::vector<std::vector<formula>> results_by_class);

/// A if f is tautological, otherwise the proper cut of f.
std::vector<formula> brutal_contract(const ensconcement& e, const formula& f);

base_contraction_op brutal_op(const ensconcement& e);

/// Total preorder on all formulas with the belief set it is relative to.
class entrenchment_relation {
public:
    using leq_fn = std::function<bool(const formula&, const formula&)>;

    entrenchment_relation(belief_set K, leq_fn leq) : K_(std::move(K)), leq_(std::move(leq)) {}

    bool leq(const formula& a, const formula& b) const { return leq_(a, b); }
    bool lt(const formula& a, const formula& b) const { return leq_(a, b) && !leq_(b, a); }
    bool equivalent(const formula& a, const formula& b) const { return leq_(a, b) && leq_(b, a); }

    const belief_set& K() const { return K_; }
    const signature& sig() const { return K_.sig; }

private:
    belief_set K_;
    leq_fn leq_;
};

/// α ≤ β iff α ∉ Cn(A), or both are in Cn(A) and the non-strict cut of β
/// is included in the non-strict cut of α. The two clauses leave exactly
/// one unstated combination, α ∈ Cn(A) and β ∉ Cn(A), which therefore
/// compares as NOT α ≤ β (and β ≤ α holds by the first clause).
entrenchment_relation derived_entrenchment(const ensconcement& e);

/// Membership oracle for a withdrawal on the belief set K; results are
/// logically closed sets, never materialized.
class withdrawal_op {
public:
    using member_fn = std::function<bool(const formula& alpha, const formula& beta)>;

    withdrawal_op(belief_set K, member_fn member) : K_(std::move(K)), member_(std::move(member)) {}

    /// beta ∈ K ÷ alpha.
    bool member(const formula& alpha, const formula& beta) const { return member_(alpha, beta); }

    const belief_set& K() const { return K_; }
    const signature& sig() const { return K_.sig; }

    /// (K ÷ alpha) ∩ generators: a finite generating base of the result
    /// whenever the operator satisfies base-reduction.
    std::vector<formula> generating_base(const formula& alpha) const;

private:
    belief_set K_;
    member_fn member_;
};

/// β ∈ K ÷ α iff β ∈ Cn(A) and either ⊢α or α is strictly less entrenched
/// than β under the derived entrenchment.
withdrawal_op severe_withdrawal(const ensconcement& e);
bool severe_withdraw_member(const ensconcement& e, const formula& alpha, const formula& beta);

/// {β ∈ A : β ∈ K ÷ alpha}, which coincides with brutal_contract.
std::vector<formula> severe_withdraw_base(const ensconcement& e, const formula& alpha);

/// β ∈ K − α iff β ∈ Cn(A) and either ⊢α or α < (α ∨ β). Sits between
/// severe withdrawal and K (the interpolation property).
bool g_contract_member(const ensconcement& e, const formula& alpha, const formula& beta);
withdrawal_op g_contraction(const ensconcement& e);

/// Raised when an operator's results are not totally ordered by
/// inclusion, so no ranking can reproduce it.
class construction_error : public error {
public:
    construction_error(formula a, formula b);
    const formula& first() const { return a_; }
    const formula& second() const { return b_; }

private:
    formula a_;
    formula b_;
};

/// Recovers a ranking from a base contraction operator by
///   α ⪯ β iff (op(β) ⊆ op(α) and ⊬α) or ⊢β
/// over the operator's base, assigning ranks by chain depth. When op
/// passes the bounded-contraction postulates, brutal contraction of the
/// result reproduces op on every universe formula.
ensconcement ensconcement_from_operator(const base_contraction_op& op, const universe& u);

/// α ≤ β iff α ∉ K ÷ β or ⊢β.
entrenchment_relation entrenchment_from_withdrawal(const withdrawal_op& w);

/// β ∈ K ÷ α iff β ∈ K and either ⊢α or α < β under the given relation.
withdrawal_op severe_from_entrenchment(const entrenchment_relation& r, belief_set K);

} // namespace enscon
