#include "enscon/postulates.hpp"

#include <algorithm>
#include <array>
#include <bit>

namespace enscon {

namespace {

struct id_info {
    postulate_id id;
    std::string_view name;
    operator_kind kind;
};

constexpr std::array<id_info, 34> id_table{{
    {postulate_id::success, "success", operator_kind::base_contraction},
    {postulate_id::inclusion, "inclusion", operator_kind::base_contraction},
    {postulate_id::vacuity, "vacuity", operator_kind::base_contraction},
    {postulate_id::failure, "failure", operator_kind::base_contraction},
    {postulate_id::relative_closure, "relative-closure", operator_kind::base_contraction},
    {postulate_id::strong_inclusion, "strong-inclusion", operator_kind::base_contraction},
    {postulate_id::uniform_behaviour, "uniform-behaviour", operator_kind::base_contraction},
    {postulate_id::extensionality, "extensionality", operator_kind::base_contraction},
    {postulate_id::upper_bound, "upper-bound", operator_kind::base_contraction},
    {postulate_id::lower_bound, "lower-bound", operator_kind::base_contraction},
    {postulate_id::clustering, "clustering", operator_kind::base_contraction},
    {postulate_id::afterpost_a, "afterpost-a", operator_kind::base_contraction},
    {postulate_id::afterpost_b, "afterpost-b", operator_kind::base_contraction},
    {postulate_id::afterpost_c, "afterpost-c", operator_kind::base_contraction},
    {postulate_id::recovery, "recovery", operator_kind::withdrawal},
    {postulate_id::div1, "div1", operator_kind::withdrawal},
    {postulate_id::div2, "div2", operator_kind::withdrawal},
    {postulate_id::div3, "div3", operator_kind::withdrawal},
    {postulate_id::div4, "div4", operator_kind::withdrawal},
    {postulate_id::div6, "div6", operator_kind::withdrawal},
    {postulate_id::div7a, "div7a", operator_kind::withdrawal},
    {postulate_id::div8, "div8", operator_kind::withdrawal},
    {postulate_id::div9, "div9", operator_kind::withdrawal},
    {postulate_id::div10, "div10", operator_kind::withdrawal},
    {postulate_id::linearity, "linearity", operator_kind::withdrawal},
    {postulate_id::expulsiveness, "expulsiveness", operator_kind::withdrawal},
    {postulate_id::base_reduction, "base-reduction", operator_kind::withdrawal},
    {postulate_id::div_upper_bound, "div-upper-bound", operator_kind::withdrawal},
    {postulate_id::div_lower_bound, "div-lower-bound", operator_kind::withdrawal},
    {postulate_id::ee1, "EE1", operator_kind::entrenchment},
    {postulate_id::ee2, "EE2", operator_kind::entrenchment},
    {postulate_id::ee3, "EE3", operator_kind::entrenchment},
    {postulate_id::ee4, "EE4", operator_kind::entrenchment},
    {postulate_id::ee5, "EE5", operator_kind::entrenchment},
}};

const id_info& info(postulate_id id) {
    for (const id_info& i : id_table)
        if (i.id == id) return i;
    throw error("unknown postulate id");
}

} // namespace

operator_kind kind_of(postulate_id id) { return info(id).kind; }
std::string_view name_of(postulate_id id) { return info(id).name; }

std::optional<postulate_id> postulate_by_name(std::string_view name) {
    for (const id_info& i : id_table)
        if (i.name == name) return i.id;
    return std::nullopt;
}

const std::vector<postulate_id>& postulate_catalog() {
    static const std::vector<postulate_id> all = [] {
        std::vector<postulate_id> v;
        for (const id_info& i : id_table) v.push_back(i.id);
        return v;
    }();
    return all;
}

std::string_view name_of(suite_id s) {
    switch (s) {
    case suite_id::brutal_base: return "brutal-base";
    case suite_id::bounded_brutal_base: return "bounded-brutal-base";
    case suite_id::severe_withdrawal: return "severe-withdrawal";
    case suite_id::ensconcement_severe: return "ensconcement-severe";
    case suite_id::entrenchment: return "entrenchment";
    }
    throw error("unknown suite id");
}

std::optional<suite_id> suite_by_name(std::string_view name) {
    for (suite_id s : {suite_id::brutal_base, suite_id::bounded_brutal_base,
                       suite_id::severe_withdrawal, suite_id::ensconcement_severe,
                       suite_id::entrenchment})
        if (name_of(s) == name) return s;
    return std::nullopt;
}

const std::vector<postulate_id>& suite_postulates(suite_id s) {
    static const std::vector<postulate_id> brutal = {
        postulate_id::success,          postulate_id::inclusion,
        postulate_id::vacuity,          postulate_id::failure,
        postulate_id::relative_closure, postulate_id::strong_inclusion,
        postulate_id::uniform_behaviour};
    static const std::vector<postulate_id> bounded = {
        postulate_id::success,          postulate_id::inclusion,
        postulate_id::vacuity,          postulate_id::failure,
        postulate_id::relative_closure, postulate_id::lower_bound,
        postulate_id::upper_bound,      postulate_id::strong_inclusion};
    static const std::vector<postulate_id> severe = {
        postulate_id::div1, postulate_id::div2, postulate_id::div3, postulate_id::div4,
        postulate_id::div6, postulate_id::div7a, postulate_id::div8};
    static const std::vector<postulate_id> ens_severe = {
        postulate_id::div1,           postulate_id::div2,
        postulate_id::div3,           postulate_id::div4,
        postulate_id::div6,           postulate_id::div9,
        postulate_id::base_reduction, postulate_id::div_upper_bound,
        postulate_id::div_lower_bound};
    static const std::vector<postulate_id> entrench = {postulate_id::ee1, postulate_id::ee2,
                                                       postulate_id::ee3, postulate_id::ee4,
                                                       postulate_id::ee5};
    switch (s) {
    case suite_id::brutal_base: return brutal;
    case suite_id::bounded_brutal_base: return bounded;
    case suite_id::severe_withdrawal: return severe;
    case suite_id::ensconcement_severe: return ens_severe;
    case suite_id::entrenchment: return entrench;
    }
    throw error("unknown suite id");
}

operator_kind kind_of(suite_id s) {
    switch (s) {
    case suite_id::brutal_base:
    case suite_id::bounded_brutal_base: return operator_kind::base_contraction;
    case suite_id::severe_withdrawal:
    case suite_id::ensconcement_severe: return operator_kind::withdrawal;
    case suite_id::entrenchment: return operator_kind::entrenchment;
    }
    throw error("unknown suite id");
}

bool all_pass(const std::vector<postulate_report>& reports) {
    return std::all_of(reports.begin(), reports.end(),
                       [](const postulate_report& r) { return r.pass; });
}

namespace {

std::string machine_key(const std::string& greek) {
    if (greek == "α") return "alpha";
    if (greek == "β") return "beta";
    if (greek == "γ") return "gamma";
    return greek;
}

} // namespace

std::string render_report(const postulate_report& r, const universe& u) {
    std::string out(name_of(r.id));
    if (r.pass) {
        out += ": PASS";
        return out;
    }
    out += ": FAIL";
    for (const auto& [key, f] : r.ce->bindings) out += " " + key + "=" + u.display_text(f);
    if (!r.ce->x_set.empty()) {
        out += " X={";
        for (std::size_t i = 0; i < r.ce->x_set.size(); ++i) {
            if (i) out += ", ";
            out += u.display_text(r.ce->x_set[i]);
        }
        out += "}";
    }
    out += " — " + r.ce->reason;
    return out;
}

std::string render_report_machine(const postulate_report& r, const universe& u) {
    std::string out = "postulate: " + std::string(name_of(r.id)) + "\n";
    out += std::string("status: ") + (r.pass ? "PASS" : "FAIL");
    if (!r.pass) {
        for (const auto& [key, f] : r.ce->bindings)
            out += "\n" + machine_key(key) + ": " + u.display_text(f);
        if (!r.ce->x_set.empty()) {
            out += "\nxset: ";
            for (std::size_t i = 0; i < r.ce->x_set.size(); ++i) {
                if (i) out += ", ";
                out += u.display_text(r.ce->x_set[i]);
            }
        }
        out += "\nreason: " + r.ce->reason;
    }
    return out;
}

// ---------------------------------------------------------------------------
// shared helpers

namespace {

using binding_list = std::vector<std::pair<std::string, formula>>;

postulate_report fail_report(postulate_id id, binding_list bindings, std::string reason,
                             std::vector<formula> x_set = {}) {
    postulate_report r{id, false, counterexample{std::move(bindings), std::move(x_set),
                                                 std::move(reason)}};
    return r;
}

postulate_report pass_report(postulate_id id) { return postulate_report{id, true, std::nullopt}; }

void enforce_quantifier_ceiling(const universe& u) {
    if (u.size() > 256)
        throw ceiling_error("quantified checking supports at most 3 atoms (" +
                            std::to_string(u.size()) + " classes)");
}

// Equivalent syntactic variants of a class representative, used to probe
// extensionality on intensional operators.
std::vector<formula> variants_of(const universe& u, std::uint32_t b) {
    std::vector<formula> out;
    const formula& rep = u.rep(b);
    const formula& disp = u.display(b);
    if (disp.node_id() != rep.node_id()) out.push_back(disp);
    out.push_back(formula::negation(formula::negation(rep)));
    return out;
}

bool contains_syn(const std::vector<formula>& v, const formula& f) {
    return std::any_of(v.begin(), v.end(), [&](const formula& g) { return g == f; });
}

bool subset_syn(const std::vector<formula>& a, const std::vector<formula>& b) {
    return std::all_of(a.begin(), a.end(), [&](const formula& f) { return contains_syn(b, f); });
}

bool equal_syn(const std::vector<formula>& a, const std::vector<formula>& b) {
    return subset_syn(a, b) && subset_syn(b, a);
}

std::uint32_t conj_mask(const std::vector<formula>& v, const signature& sig) {
    std::uint32_t m = sig.full_mask();
    for (const formula& f : v) m &= tt_bits(f, sig);
    return m;
}

// ---------------------------------------------------------------------------
// base contraction analysis

struct base_analysis {
    const base_contraction_op* op;
    const universe* u;
    std::uint32_t M = 0;
    std::uint32_t full = 0;
    std::vector<formula> base;
    std::size_t n = 0;
    std::uint64_t all_base = 0;
    std::uint32_t base_cn = 0;
    std::vector<std::uint32_t> btt;
    std::vector<char> btaut;
    std::vector<std::uint64_t> mask;
    std::vector<std::uint32_t> cn;
    std::vector<char> nonbase;
    std::vector<formula> nonbase_first;
    std::vector<std::vector<std::string>> extra;

    base_analysis(const base_contraction_op& o, const universe& uni) : op(&o), u(&uni) {
        enforce_quantifier_ceiling(uni);
        M = uni.size();
        full = uni.full_mask;
        base = o.base();
        n = base.size();
        if (n > 64) throw error("base too large: " + std::to_string(n) + " entries (max 64)");
        all_base = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
        base_cn = full;
        btt.resize(n);
        btaut.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            btt[i] = tt_bits(base[i], uni.sig);
            btaut[i] = btt[i] == full;
            base_cn &= btt[i];
        }
        mask.assign(M, 0);
        cn.assign(M, full);
        nonbase.assign(M, 0);
        nonbase_first.resize(M);
        extra.resize(M);
        for (std::uint32_t b = 0; b < M; ++b) {
            const std::vector<formula> res = o(uni.rep(b));
            for (const formula& f : res) {
                cn[b] &= tt_bits(f, uni.sig);
                bool found = false;
                for (std::size_t i = 0; i < n; ++i)
                    if (base[i] == f) {
                        mask[b] |= std::uint64_t{1} << i;
                        found = true;
                        break;
                    }
                if (!found) {
                    if (!nonbase[b]) nonbase_first[b] = f;
                    nonbase[b] = 1;
                    extra[b].push_back(render(f));
                }
            }
            std::sort(extra[b].begin(), extra[b].end());
        }
    }

    bool entails_class(std::uint32_t premise_cn, std::uint32_t goal) const {
        return (premise_cn & ~goal & full) == 0;
    }
    bool rsubset(std::uint32_t a, std::uint32_t b) const {
        return (mask[a] & ~mask[b]) == 0 &&
               std::includes(extra[b].begin(), extra[b].end(), extra[a].begin(), extra[a].end());
    }
    bool requal(std::uint32_t a, std::uint32_t b) const {
        return mask[a] == mask[b] && extra[a] == extra[b];
    }
};

// ---------------------------------------------------------------------------
// base postulate instance evaluators (raw operator calls, used to
// re-verify every counterexample before it is reported)

std::vector<formula> cluster_union(const base_contraction_op& op, const formula& beta) {
    std::vector<formula> out = op(beta);
    const std::vector<formula> rb = op(beta);
    for (const formula& g : op.base()) {
        if (!equal_syn(op(g), rb)) continue;
        if (!contains_syn(out, g)) out.push_back(g);
    }
    return out;
}

bool base_violation_holds(postulate_id id, const base_contraction_op& op, const universe& u,
                          const counterexample& ce) {
    const signature& sig = op.sig();
    const auto bound = [&](std::size_t i) -> const formula& { return ce.bindings.at(i).second; };
    switch (id) {
    case postulate_id::success: {
        const formula& a = bound(0);
        return !is_tautology(a, sig) && entails(op(a), a, sig);
    }
    case postulate_id::inclusion: {
        const formula& a = bound(0);
        const formula& g = bound(1);
        return contains_syn(op(a), g) && !contains_syn(op.base(), g);
    }
    case postulate_id::vacuity: {
        const formula& a = bound(0);
        const formula& g = bound(1);
        return !entails(op.base(), a, sig) && contains_syn(op.base(), g) &&
               !contains_syn(op(a), g);
    }
    case postulate_id::failure: {
        const formula& a = bound(0);
        return is_tautology(a, sig) && !equal_syn(op(a), op.base());
    }
    case postulate_id::relative_closure: {
        const formula& a = bound(0);
        const formula& g = bound(1);
        return contains_syn(op.base(), g) && entails(op(a), g, sig) && !contains_syn(op(a), g);
    }
    case postulate_id::strong_inclusion: {
        const formula& a = bound(0);
        const formula& b = bound(1);
        return !entails(op(b), a, sig) && !subset_syn(op(b), op(a));
    }
    case postulate_id::uniform_behaviour: {
        const formula& a = bound(0);
        const formula& b = bound(1);
        return contains_syn(op.base(), b) && entails(op.base(), a, sig) &&
               equal_syn(op(a), op(b)) && !entails(cluster_union(op, b), a, sig);
    }
    case postulate_id::extensionality: {
        const formula& a = bound(0);
        const formula& b = bound(1);
        return tt_bits(a, sig) == tt_bits(b, sig) && !equal_syn(op(a), op(b));
    }
    case postulate_id::upper_bound:
    case postulate_id::lower_bound: {
        if (!ce.x_set.empty()) {
            for (const formula& cand : ce.x_set) {
                bool extremal = true;
                for (const formula& other : ce.x_set) {
                    const bool ok = id == postulate_id::upper_bound
                                        ? subset_syn(op(other), op(cand))
                                        : subset_syn(op(cand), op(other));
                    if (!ok) {
                        extremal = false;
                        break;
                    }
                }
                if (extremal) return false;
            }
            return true;
        }
        const formula& a = bound(0);
        const formula& b = bound(1);
        return !is_tautology(a, sig) && !is_tautology(b, sig) && !subset_syn(op(a), op(b)) &&
               !subset_syn(op(b), op(a));
    }
    case postulate_id::clustering: {
        const formula& b = bound(0);
        if (!contains_syn(op.base(), b)) return false;
        const std::vector<formula> target = cluster_union(op, b);
        for (const formula& cand : op.base())
            if (equal_syn(op(cand), target)) return false;
        return !equal_syn(op(formula::verum()), target);
    }
    case postulate_id::afterpost_a: {
        const formula& a = bound(0);
        const formula& b = bound(1);
        return contains_syn(op.base(), a) && !contains_syn(op(b), a) &&
               !subset_syn(op(b), op(a));
    }
    case postulate_id::afterpost_b: {
        const formula& a = bound(0);
        const formula& b = bound(1);
        return subset_syn(op(a), op(b)) && !equal_syn(op(a), op(b)) && !entails(op(b), a, sig);
    }
    case postulate_id::afterpost_c: {
        const formula& a = bound(0);
        const formula& b = bound(1);
        return is_tautology(a, sig) && contains_syn(op.base(), a) && !contains_syn(op(b), a);
    }
    default:
        throw error("not a base contraction postulate: " + std::string(name_of(id)));
    }
    (void)u;
}

postulate_report finish_base(postulate_report r, const base_analysis& ba) {
    if (!r.pass && !base_violation_holds(r.id, *ba.op, *ba.u, *r.ce))
        throw error("counterexample for '" + std::string(name_of(r.id)) +
                    "' failed to re-verify");
    return r;
}

// ---------------------------------------------------------------------------
// base postulate checks

postulate_report check_base(postulate_id id, const base_analysis& ba) {
    const universe& u = *ba.u;
    const std::uint32_t M = ba.M;
    const std::uint32_t full = ba.full;
    switch (id) {
    case postulate_id::success:
        for (std::uint32_t a = 0; a < M; ++a) {
            if (a == full) continue;
            if (ba.entails_class(ba.cn[a], a))
                return finish_base(
                    fail_report(id, {{"α", u.rep(a)}}, "A − α entails α"), ba);
        }
        return pass_report(id);

    case postulate_id::inclusion:
        for (std::uint32_t a = 0; a < M; ++a)
            if (ba.nonbase[a])
                return finish_base(fail_report(id, {{"α", u.rep(a)}, {"γ", ba.nonbase_first[a]}},
                                               "A − α contains γ outside A"),
                                   ba);
        return pass_report(id);

    case postulate_id::vacuity:
        for (std::uint32_t a = 0; a < M; ++a) {
            if (ba.entails_class(ba.base_cn, a)) continue;
            for (std::size_t i = 0; i < ba.n; ++i)
                if (!((ba.mask[a] >> i) & 1))
                    return finish_base(
                        fail_report(id, {{"α", u.rep(a)}, {"γ", ba.base[i]}},
                                    "A ⊬ α but γ ∈ A is missing from A − α"),
                        ba);
        }
        return pass_report(id);

    case postulate_id::failure: {
        if (ba.mask[full] != ba.all_base || !ba.extra[full].empty())
            return finish_base(fail_report(id, {{"α", u.rep(full)}}, "⊢ α but A − α ≠ A"), ba);
        return pass_report(id);
    }

    case postulate_id::relative_closure:
        for (std::uint32_t a = 0; a < M; ++a)
            for (std::size_t i = 0; i < ba.n; ++i) {
                if ((ba.mask[a] >> i) & 1) continue;
                if (ba.entails_class(ba.cn[a], ba.btt[i]))
                    return finish_base(
                        fail_report(id, {{"α", u.rep(a)}, {"γ", ba.base[i]}},
                                    "γ ∈ A is entailed by A − α but missing from it"),
                        ba);
            }
        return pass_report(id);

    case postulate_id::strong_inclusion:
        for (std::uint32_t a = 0; a < M; ++a)
            for (std::uint32_t b = 0; b < M; ++b) {
                if (ba.entails_class(ba.cn[b], a)) continue;
                if (!ba.rsubset(b, a))
                    return finish_base(fail_report(id, {{"α", u.rep(a)}, {"β", u.rep(b)}},
                                                   "A − β ⊬ α yet A − β ⊈ A − α"),
                                       ba);
            }
        return pass_report(id);

    case postulate_id::uniform_behaviour:
        for (std::uint32_t a = 0; a < M; ++a) {
            if (!ba.entails_class(ba.base_cn, a)) continue;
            for (std::size_t j = 0; j < ba.n; ++j) {
                const std::uint32_t b = ba.btt[j];
                if (!ba.requal(a, b)) continue;
                std::uint32_t cluster_cn = ba.cn[b];
                for (std::size_t i = 0; i < ba.n; ++i)
                    if (ba.requal(ba.btt[i], b)) cluster_cn &= ba.btt[i];
                if (!ba.entails_class(cluster_cn, a))
                    return finish_base(
                        fail_report(id, {{"α", u.rep(a)}, {"β", ba.base[j]}},
                                    "A − α = A − β but α is not entailed by the cluster union"),
                        ba);
            }
        }
        return pass_report(id);

    case postulate_id::extensionality:
        for (std::uint32_t a = 0; a < M; ++a)
            for (const formula& v : variants_of(u, a)) {
                const std::vector<formula> res = (*ba.op)(v);
                std::uint64_t vmask = 0;
                std::vector<std::string> vextra;
                for (const formula& f : res) {
                    bool found = false;
                    for (std::size_t i = 0; i < ba.n; ++i)
                        if (ba.base[i] == f) {
                            vmask |= std::uint64_t{1} << i;
                            found = true;
                            break;
                        }
                    if (!found) vextra.push_back(render(f));
                }
                std::sort(vextra.begin(), vextra.end());
                if (vmask != ba.mask[a] || vextra != ba.extra[a])
                    return finish_base(
                        fail_report(id, {{"α", u.rep(a)}, {"β", v}},
                                    "equivalent arguments α and β give different results"),
                        ba);
            }
        return pass_report(id);

    case postulate_id::upper_bound:
    case postulate_id::lower_bound: {
        std::vector<std::size_t> nt;
        for (std::size_t i = 0; i < ba.n; ++i)
            if (!ba.btaut[i]) nt.push_back(i);
        for (std::size_t x = 0; x < nt.size(); ++x)
            for (std::size_t y = x + 1; y < nt.size(); ++y) {
                const std::uint32_t a = ba.btt[nt[x]];
                const std::uint32_t b = ba.btt[nt[y]];
                if (!ba.rsubset(a, b) && !ba.rsubset(b, a))
                    return finish_base(fail_report(id,
                                                   {{"α", ba.base[nt[x]]}, {"β", ba.base[nt[y]]}},
                                                   "A − α and A − β are ⊆-incomparable"),
                                       ba);
            }
        if (nt.size() <= 12) {
            for (std::uint64_t s = 1; s < (std::uint64_t{1} << nt.size()); ++s) {
                bool has_extremal = false;
                for (std::size_t k = 0; k < nt.size() && !has_extremal; ++k) {
                    if (!((s >> k) & 1)) continue;
                    bool extremal = true;
                    for (std::size_t j = 0; j < nt.size() && extremal; ++j) {
                        if (!((s >> j) & 1)) continue;
                        extremal = id == postulate_id::upper_bound
                                       ? ba.rsubset(ba.btt[nt[j]], ba.btt[nt[k]])
                                       : ba.rsubset(ba.btt[nt[k]], ba.btt[nt[j]]);
                    }
                    has_extremal = extremal;
                }
                if (!has_extremal) {
                    std::vector<formula> xs;
                    for (std::size_t k = 0; k < nt.size(); ++k)
                        if ((s >> k) & 1) xs.push_back(ba.base[nt[k]]);
                    const char* reason = id == postulate_id::upper_bound
                                             ? "X has no ⊆-greatest contraction"
                                             : "X has no ⊆-least contraction";
                    return finish_base(fail_report(id, {}, reason, std::move(xs)), ba);
                }
            }
        }
        return pass_report(id);
    }

    case postulate_id::clustering:
        for (std::size_t j = 0; j < ba.n; ++j) {
            const std::uint32_t b = ba.btt[j];
            std::uint64_t target = ba.mask[b];
            for (std::size_t i = 0; i < ba.n; ++i)
                if (ba.requal(ba.btt[i], b)) target |= std::uint64_t{1} << i;
            bool found = false;
            for (std::size_t i = 0; i < ba.n && !found; ++i)
                found = ba.mask[ba.btt[i]] == target && ba.extra[ba.btt[i]] == ba.extra[b];
            if (!found) found = ba.mask[full] == target && ba.extra[full] == ba.extra[b];
            if (!found)
                return finish_base(fail_report(id, {{"β", ba.base[j]}},
                                               "no α ∈ A ∪ Cn(∅) matches A − β ∪ its cluster"),
                                   ba);
        }
        return pass_report(id);

    case postulate_id::afterpost_a:
        for (std::size_t i = 0; i < ba.n; ++i)
            for (std::uint32_t b = 0; b < M; ++b) {
                if ((ba.mask[b] >> i) & 1) continue;
                if (!ba.rsubset(b, ba.btt[i]))
                    return finish_base(fail_report(id, {{"α", ba.base[i]}, {"β", u.rep(b)}},
                                                   "α ∈ A \\ A − β yet A − β ⊈ A − α"),
                                       ba);
            }
        return pass_report(id);

    case postulate_id::afterpost_b:
        for (std::uint32_t a = 0; a < M; ++a)
            for (std::uint32_t b = 0; b < M; ++b) {
                if (!ba.rsubset(a, b) || ba.requal(a, b)) continue;
                if (!ba.entails_class(ba.cn[b], a))
                    return finish_base(fail_report(id, {{"α", u.rep(a)}, {"β", u.rep(b)}},
                                                   "A − α ⊂ A − β yet A − β ⊬ α"),
                                       ba);
            }
        return pass_report(id);

    case postulate_id::afterpost_c:
        for (std::size_t i = 0; i < ba.n; ++i) {
            if (!ba.btaut[i]) continue;
            for (std::uint32_t b = 0; b < M; ++b)
                if (!((ba.mask[b] >> i) & 1))
                    return finish_base(fail_report(id, {{"α", ba.base[i]}, {"β", u.rep(b)}},
                                                   "tautological member α missing from A − β"),
                                       ba);
        }
        return pass_report(id);

    default:
        throw error("postulate '" + std::string(name_of(id)) +
                    "' does not apply to base contraction operators");
    }
}

// ---------------------------------------------------------------------------
// withdrawal analysis

struct wd_analysis {
    const withdrawal_op* w;
    const universe* u;
    std::uint32_t M = 0;
    std::uint32_t full = 0;
    std::size_t words = 0;
    std::vector<std::uint64_t> rows;
    std::vector<std::uint32_t> cn;
    std::uint32_t K_mask = 0;

    wd_analysis(const withdrawal_op& op, const universe& uni) : w(&op), u(&uni) {
        enforce_quantifier_ceiling(uni);
        M = uni.size();
        full = uni.full_mask;
        words = (M + 63) / 64;
        rows.assign(static_cast<std::size_t>(M) * words, 0);
        cn.assign(M, full);
        K_mask = conj_mask(op.K().generators, uni.sig);
        for (std::uint32_t a = 0; a < M; ++a)
            for (std::uint32_t b = 0; b < M; ++b)
                if (op.member(uni.rep(a), uni.rep(b))) {
                    rows[a * words + b / 64] |= std::uint64_t{1} << (b % 64);
                    cn[a] &= b;
                }
    }

    bool get(std::uint32_t a, std::uint32_t b) const {
        return (rows[a * words + b / 64] >> (b % 64)) & 1;
    }
    bool in_K(std::uint32_t b) const { return (K_mask & ~b & full) == 0; }
    bool row_subset(std::uint32_t a, std::uint32_t b) const {
        for (std::size_t i = 0; i < words; ++i)
            if (rows[a * words + i] & ~rows[b * words + i]) return false;
        return true;
    }
    std::optional<std::uint32_t> first_in_diff(std::uint32_t a, std::uint32_t b) const {
        for (std::uint32_t c = 0; c < M; ++c)
            if (get(a, c) && !get(b, c)) return c;
        return std::nullopt;
    }
};

// withdrawal instance evaluators over the raw membership oracle

std::vector<formula> wd_members(const withdrawal_op& w, const universe& u, const formula& alpha) {
    std::vector<formula> out;
    for (std::uint32_t b = 0; b < u.size(); ++b)
        if (w.member(alpha, u.rep(b))) out.push_back(u.rep(b));
    return out;
}

bool wd_violation_holds(postulate_id id, const withdrawal_op& w, const universe& u,
                        const counterexample& ce) {
    const signature& sig = u.sig;
    const auto bound = [&](std::size_t i) -> const formula& { return ce.bindings.at(i).second; };
    const auto taut = [&](const formula& f) { return is_tautology(f, sig); };
    const auto incomparable = [&](const formula& a, const formula& b) {
        bool left = false, right = false;
        for (std::uint32_t c = 0; c < u.size(); ++c) {
            const bool ma = w.member(a, u.rep(c));
            const bool mb = w.member(b, u.rep(c));
            left = left || (ma && !mb);
            right = right || (mb && !ma);
        }
        return left && right;
    };
    switch (id) {
    case postulate_id::recovery: {
        const formula& a = bound(0);
        const formula& b = bound(1);
        std::vector<formula> exp = wd_members(w, u, a);
        exp.push_back(a);
        return w.K().member(b) && !entails(exp, b, sig);
    }
    case postulate_id::div1: {
        const formula& a = bound(0);
        const formula& b = bound(1);
        return entails(wd_members(w, u, a), b, sig) && !w.member(a, b);
    }
    case postulate_id::div2: {
        const formula& a = bound(0);
        const formula& b = bound(1);
        return w.member(a, b) && !w.K().member(b);
    }
    case postulate_id::div3: {
        const formula& a = bound(0);
        const formula& b = bound(1);
        return (!w.K().member(a) || taut(a)) && w.K().member(b) && !w.member(a, b);
    }
    case postulate_id::div4: {
        const formula& a = bound(0);
        return !taut(a) && w.member(a, a);
    }
    case postulate_id::div6: {
        const formula& a = bound(0);
        const formula& b = bound(1);
        const formula& g = bound(2);
        return tt_bits(a, sig) == tt_bits(b, sig) && w.member(a, g) != w.member(b, g);
    }
    case postulate_id::div7a: {
        const formula& a = bound(0);
        const formula& b = bound(1);
        const formula& g = bound(2);
        return !taut(a) && w.member(a, g) && !w.member(formula::conjunction(a, b), g);
    }
    case postulate_id::div8: {
        const formula& a = bound(0);
        const formula& b = bound(1);
        const formula& g = bound(2);
        const formula conj = formula::conjunction(a, b);
        return !w.member(conj, a) && w.member(conj, g) && !w.member(a, g);
    }
    case postulate_id::div9: {
        const formula& a = bound(0);
        const formula& b = bound(1);
        const formula& g = bound(2);
        return !w.member(b, a) && w.member(b, g) && !w.member(a, g);
    }
    case postulate_id::div10: {
        const formula& a = bound(0);
        const formula& b = bound(1);
        const formula& g = bound(2);
        return !taut(a) && w.member(b, a) && w.member(a, g) && !w.member(b, g);
    }
    case postulate_id::linearity:
        return incomparable(bound(0), bound(1));
    case postulate_id::expulsiveness: {
        const formula& a = bound(0);
        const formula& b = bound(1);
        return !taut(a) && !taut(b) && w.member(b, a) && w.member(a, b);
    }
    case postulate_id::base_reduction: {
        const formula& a = bound(0);
        const formula& b = bound(1);
        return entails(wd_members(w, u, a), b, sig) && !entails(w.generating_base(a), b, sig);
    }
    case postulate_id::div_upper_bound:
    case postulate_id::div_lower_bound: {
        if (!ce.x_set.empty()) {
            for (const formula& cand : ce.x_set) {
                bool extremal = true;
                for (const formula& other : ce.x_set) {
                    const std::vector<formula> small = id == postulate_id::div_upper_bound
                                                           ? wd_members(w, u, other)
                                                           : wd_members(w, u, cand);
                    const std::vector<formula> big = id == postulate_id::div_upper_bound
                                                         ? wd_members(w, u, cand)
                                                         : wd_members(w, u, other);
                    if (!subset_syn(small, big)) {
                        extremal = false;
                        break;
                    }
                }
                if (extremal) return false;
            }
            return true;
        }
        return incomparable(bound(0), bound(1));
    }
    default:
        throw error("not a withdrawal postulate: " + std::string(name_of(id)));
    }
}

postulate_report finish_wd(postulate_report r, const wd_analysis& wa) {
    if (!r.pass && !wd_violation_holds(r.id, *wa.w, *wa.u, *r.ce))
        throw error("counterexample for '" + std::string(name_of(r.id)) +
                    "' failed to re-verify");
    return r;
}

// ---------------------------------------------------------------------------
// withdrawal postulate checks

postulate_report check_wd(postulate_id id, const wd_analysis& wa) {
    const universe& u = *wa.u;
    const std::uint32_t M = wa.M;
    const std::uint32_t full = wa.full;
    switch (id) {
    case postulate_id::div1:
        for (std::uint32_t a = 0; a < M; ++a)
            for (std::uint32_t b = 0; b < M; ++b) {
                if ((wa.cn[a] & ~b & full) != 0) continue;
                if (!wa.get(a, b))
                    return finish_wd(fail_report(id, {{"α", u.rep(a)}, {"β", u.rep(b)}},
                                                 "K ÷ α does not contain the entailed member β"),
                                     wa);
            }
        return pass_report(id);

    case postulate_id::div2:
        for (std::uint32_t a = 0; a < M; ++a)
            for (std::uint32_t b = 0; b < M; ++b)
                if (wa.get(a, b) && !wa.in_K(b))
                    return finish_wd(fail_report(id, {{"α", u.rep(a)}, {"β", u.rep(b)}},
                                                 "β ∈ K ÷ α but β ∉ K"),
                                     wa);
        return pass_report(id);

    case postulate_id::div3:
        for (std::uint32_t a = 0; a < M; ++a) {
            if (wa.in_K(a) && a != full) continue;
            for (std::uint32_t b = 0; b < M; ++b)
                if (wa.in_K(b) && !wa.get(a, b))
                    return finish_wd(
                        fail_report(id, {{"α", u.rep(a)}, {"β", u.rep(b)}},
                                    "α ∉ K or ⊢ α, yet β ∈ K is missing from K ÷ α"),
                        wa);
        }
        return pass_report(id);

    case postulate_id::div4:
        for (std::uint32_t a = 0; a < M; ++a) {
            if (a == full) continue;
            if (wa.get(a, a))
                return finish_wd(fail_report(id, {{"α", u.rep(a)}}, "α ∈ K ÷ α"), wa);
        }
        return pass_report(id);

    case postulate_id::div6:
        for (std::uint32_t a = 0; a < M; ++a)
            for (const formula& v : variants_of(u, a))
                for (std::uint32_t b = 0; b < M; ++b)
                    if (wa.w->member(v, u.rep(b)) != wa.get(a, b))
                        return finish_wd(
                            fail_report(id, {{"α", u.rep(a)}, {"β", v}, {"γ", u.rep(b)}},
                                        "Cn(α) = Cn(β) but K ÷ α ≠ K ÷ β"),
                            wa);
        return pass_report(id);

    case postulate_id::div7a:
        for (std::uint32_t a = 0; a < M; ++a) {
            if (a == full) continue;
            for (std::uint32_t b = 0; b < M; ++b) {
                const std::uint32_t c = a & b;
                if (wa.row_subset(a, c)) continue;
                const auto g = wa.first_in_diff(a, c);
                return finish_wd(
                    fail_report(id, {{"α", u.rep(a)}, {"β", u.rep(b)}, {"γ", u.rep(*g)}},
                                "K ÷ α ⊈ K ÷ (α ∧ β)"),
                    wa);
            }
        }
        return pass_report(id);

    case postulate_id::div8:
        for (std::uint32_t a = 0; a < M; ++a)
            for (std::uint32_t b = 0; b < M; ++b) {
                const std::uint32_t c = a & b;
                if (wa.get(c, a)) continue;
                if (wa.row_subset(c, a)) continue;
                const auto g = wa.first_in_diff(c, a);
                return finish_wd(
                    fail_report(id, {{"α", u.rep(a)}, {"β", u.rep(b)}, {"γ", u.rep(*g)}},
                                "α ∉ K ÷ (α ∧ β) yet K ÷ (α ∧ β) ⊈ K ÷ α"),
                    wa);
            }
        return pass_report(id);

    case postulate_id::div9:
        for (std::uint32_t a = 0; a < M; ++a)
            for (std::uint32_t b = 0; b < M; ++b) {
                if (wa.get(b, a)) continue;
                if (wa.row_subset(b, a)) continue;
                const auto g = wa.first_in_diff(b, a);
                return finish_wd(
                    fail_report(id, {{"α", u.rep(a)}, {"β", u.rep(b)}, {"γ", u.rep(*g)}},
                                "α ∉ K ÷ β yet K ÷ β ⊈ K ÷ α"),
                    wa);
            }
        return pass_report(id);

    case postulate_id::div10:
        for (std::uint32_t a = 0; a < M; ++a) {
            if (a == full) continue;
            for (std::uint32_t b = 0; b < M; ++b) {
                if (!wa.get(b, a)) continue;
                if (wa.row_subset(a, b)) continue;
                const auto g = wa.first_in_diff(a, b);
                return finish_wd(
                    fail_report(id, {{"α", u.rep(a)}, {"β", u.rep(b)}, {"γ", u.rep(*g)}},
                                "α ∈ K ÷ β yet K ÷ α ⊈ K ÷ β"),
                    wa);
            }
        }
        return pass_report(id);

    case postulate_id::linearity:
        for (std::uint32_t a = 0; a < M; ++a)
            for (std::uint32_t b = a + 1; b < M; ++b)
                if (!wa.row_subset(a, b) && !wa.row_subset(b, a))
                    return finish_wd(fail_report(id, {{"α", u.rep(a)}, {"β", u.rep(b)}},
                                                 "K ÷ α and K ÷ β are ⊆-incomparable"),
                                     wa);
        return pass_report(id);

    case postulate_id::expulsiveness:
        for (std::uint32_t a = 0; a < M; ++a) {
            if (a == full) continue;
            for (std::uint32_t b = 0; b < M; ++b) {
                if (b == full) continue;
                if (wa.get(b, a) && wa.get(a, b))
                    return finish_wd(fail_report(id, {{"α", u.rep(a)}, {"β", u.rep(b)}},
                                                 "α ∈ K ÷ β and β ∈ K ÷ α"),
                                     wa);
            }
        }
        return pass_report(id);

    case postulate_id::recovery:
        for (std::uint32_t a = 0; a < M; ++a) {
            const std::uint32_t exp = wa.cn[a] & a;
            if ((exp & ~wa.K_mask & full) == 0) continue;
            for (std::uint32_t b = 0; b < M; ++b)
                if (wa.in_K(b) && (exp & ~b & full) != 0)
                    return finish_wd(fail_report(id, {{"α", u.rep(a)}, {"β", u.rep(b)}},
                                                 "β ∈ K but β ∉ (K ÷ α) + α"),
                                     wa);
        }
        return pass_report(id);

    case postulate_id::base_reduction:
        for (std::uint32_t a = 0; a < M; ++a) {
            const std::uint32_t inter =
                conj_mask(wa.w->generating_base(u.rep(a)), u.sig);
            if ((inter & ~wa.cn[a] & full) == 0) continue;
            for (std::uint32_t b = 0; b < M; ++b)
                if ((wa.cn[a] & ~b & full) == 0 && (inter & ~b & full) != 0)
                    return finish_wd(fail_report(id, {{"α", u.rep(a)}, {"β", u.rep(b)}},
                                                 "K ÷ α entails β but (K ÷ α) ∩ A does not"),
                                     wa);
        }
        return pass_report(id);

    case postulate_id::div_upper_bound:
    case postulate_id::div_lower_bound: {
        std::vector<std::uint32_t> family;
        for (std::uint32_t a = 0; a < M; ++a)
            if (a != full && wa.in_K(a)) family.push_back(a);
        for (std::size_t x = 0; x < family.size(); ++x)
            for (std::size_t y = x + 1; y < family.size(); ++y)
                if (!wa.row_subset(family[x], family[y]) &&
                    !wa.row_subset(family[y], family[x]))
                    return finish_wd(
                        fail_report(id, {{"α", u.rep(family[x])}, {"β", u.rep(family[y])}},
                                    "K ÷ α and K ÷ β are ⊆-incomparable"),
                        wa);
        if (family.size() <= 12) {
            for (std::uint64_t s = 1; s < (std::uint64_t{1} << family.size()); ++s) {
                bool has_extremal = false;
                for (std::size_t k = 0; k < family.size() && !has_extremal; ++k) {
                    if (!((s >> k) & 1)) continue;
                    bool extremal = true;
                    for (std::size_t j = 0; j < family.size() && extremal; ++j) {
                        if (!((s >> j) & 1)) continue;
                        extremal = id == postulate_id::div_upper_bound
                                       ? wa.row_subset(family[j], family[k])
                                       : wa.row_subset(family[k], family[j]);
                    }
                    has_extremal = extremal;
                }
                if (!has_extremal) {
                    std::vector<formula> xs;
                    for (std::size_t k = 0; k < family.size(); ++k)
                        if ((s >> k) & 1) xs.push_back(u.rep(family[k]));
                    const char* reason = id == postulate_id::div_upper_bound
                                             ? "X has no ⊆-greatest withdrawal"
                                             : "X has no ⊆-least withdrawal";
                    return finish_wd(fail_report(id, {}, reason, std::move(xs)), wa);
                }
            }
        }
        return pass_report(id);
    }

    default:
        throw error("postulate '" + std::string(name_of(id)) +
                    "' does not apply to withdrawal operators");
    }
}

// ---------------------------------------------------------------------------
// entrenchment analysis

struct ee_analysis {
    const entrenchment_relation* r;
    const universe* u;
    std::uint32_t M = 0;
    std::uint32_t full = 0;
    std::size_t words = 0;
    std::vector<std::uint64_t> rows; // rows[a] = {b : a <= b}
    std::uint32_t K_mask = 0;

    ee_analysis(const entrenchment_relation& rel, const universe& uni) : r(&rel), u(&uni) {
        enforce_quantifier_ceiling(uni);
        M = uni.size();
        full = uni.full_mask;
        words = (M + 63) / 64;
        rows.assign(static_cast<std::size_t>(M) * words, 0);
        K_mask = conj_mask(rel.K().generators, uni.sig);
        for (std::uint32_t a = 0; a < M; ++a)
            for (std::uint32_t b = 0; b < M; ++b)
                if (rel.leq(uni.rep(a), uni.rep(b)))
                    rows[a * words + b / 64] |= std::uint64_t{1} << (b % 64);
    }

    bool leq(std::uint32_t a, std::uint32_t b) const {
        return (rows[a * words + b / 64] >> (b % 64)) & 1;
    }
    bool in_K(std::uint32_t b) const { return (K_mask & ~b & full) == 0; }
    bool row_all(std::uint32_t a) const {
        for (std::uint32_t b = 0; b < M; ++b)
            if (!leq(a, b)) return false;
        return true;
    }
};

bool ee_violation_holds(postulate_id id, const entrenchment_relation& r, const universe& u,
                        const counterexample& ce) {
    const signature& sig = u.sig;
    const auto bound = [&](std::size_t i) -> const formula& { return ce.bindings.at(i).second; };
    switch (id) {
    case postulate_id::ee1: {
        const formula& a = bound(0);
        const formula& b = bound(1);
        const formula& c = bound(2);
        return r.leq(a, b) && r.leq(b, c) && !r.leq(a, c);
    }
    case postulate_id::ee2: {
        const formula& a = bound(0);
        const formula& b = bound(1);
        return entails(std::vector<formula>{a}, b, sig) && !r.leq(a, b);
    }
    case postulate_id::ee3: {
        const formula& a = bound(0);
        const formula& b = bound(1);
        const formula conj = formula::conjunction(a, b);
        return !r.leq(a, conj) && !r.leq(b, conj);
    }
    case postulate_id::ee4: {
        if (conj_mask(r.K().generators, sig) == 0) return false;
        const formula& a = bound(0);
        const bool member = r.K().member(a);
        if (ce.bindings.size() > 1) return !member && !r.leq(a, bound(1));
        if (!member) return false;
        for (std::uint32_t b = 0; b < u.size(); ++b)
            if (!r.leq(a, u.rep(b))) return false;
        return true;
    }
    case postulate_id::ee5: {
        const formula& a = bound(0);
        if (is_tautology(a, sig)) return false;
        for (std::uint32_t b = 0; b < u.size(); ++b)
            if (!r.leq(u.rep(b), a)) return false;
        return true;
    }
    default:
        throw error("not an entrenchment postulate: " + std::string(name_of(id)));
    }
}

postulate_report finish_ee(postulate_report r, const ee_analysis& ea) {
    if (!r.pass && !ee_violation_holds(r.id, *ea.r, *ea.u, *r.ce))
        throw error("counterexample for '" + std::string(name_of(r.id)) +
                    "' failed to re-verify");
    return r;
}

postulate_report check_ee(postulate_id id, const ee_analysis& ea) {
    const universe& u = *ea.u;
    const std::uint32_t M = ea.M;
    const std::uint32_t full = ea.full;
    switch (id) {
    case postulate_id::ee1:
        for (std::uint32_t a = 0; a < M; ++a)
            for (std::uint32_t b = 0; b < M; ++b) {
                if (!ea.leq(a, b)) continue;
                for (std::size_t i = 0; i < ea.words; ++i) {
                    const std::uint64_t diff =
                        ea.rows[b * ea.words + i] & ~ea.rows[a * ea.words + i];
                    if (!diff) continue;
                    const std::uint32_t c =
                        static_cast<std::uint32_t>(i * 64) +
                        static_cast<std::uint32_t>(std::countr_zero(diff));
                    return finish_ee(
                        fail_report(id, {{"α", u.rep(a)}, {"β", u.rep(b)}, {"γ", u.rep(c)}},
                                    "α ≤ β and β ≤ γ but not α ≤ γ"),
                        ea);
                }
            }
        return pass_report(id);

    case postulate_id::ee2:
        for (std::uint32_t a = 0; a < M; ++a)
            for (std::uint32_t b = 0; b < M; ++b)
                if ((a & ~b & full) == 0 && !ea.leq(a, b))
                    return finish_ee(fail_report(id, {{"α", u.rep(a)}, {"β", u.rep(b)}},
                                                 "α ⊢ β but not α ≤ β"),
                                     ea);
        return pass_report(id);

    case postulate_id::ee3:
        for (std::uint32_t a = 0; a < M; ++a)
            for (std::uint32_t b = 0; b < M; ++b)
                if (!ea.leq(a, a & b) && !ea.leq(b, a & b))
                    return finish_ee(fail_report(id, {{"α", u.rep(a)}, {"β", u.rep(b)}},
                                                 "neither α ≤ α ∧ β nor β ≤ α ∧ β"),
                                     ea);
        return pass_report(id);

    case postulate_id::ee4:
        if (ea.K_mask == 0) return pass_report(id);
        for (std::uint32_t a = 0; a < M; ++a) {
            const bool member = ea.in_K(a);
            const bool minimal = ea.row_all(a);
            if (!member && !minimal) {
                std::uint32_t b = 0;
                while (ea.leq(a, b)) ++b;
                return finish_ee(fail_report(id, {{"α", u.rep(a)}, {"β", u.rep(b)}},
                                             "α ∉ K but not α ≤ β"),
                                 ea);
            }
            if (member && minimal)
                return finish_ee(
                    fail_report(id, {{"α", u.rep(a)}}, "α ∈ K yet α ≤ β for every β"), ea);
        }
        return pass_report(id);

    case postulate_id::ee5:
        for (std::uint32_t a = 0; a < M; ++a) {
            if (a == full) continue;
            bool all = true;
            for (std::uint32_t b = 0; b < M && all; ++b) all = ea.leq(b, a);
            if (all)
                return finish_ee(
                    fail_report(id, {{"α", u.rep(a)}}, "β ≤ α for all β but ⊬ α"), ea);
        }
        return pass_report(id);

    default:
        throw error("postulate '" + std::string(name_of(id)) +
                    "' does not apply to entrenchment relations");
    }
}

} // namespace

// ---------------------------------------------------------------------------
// public entry points

postulate_report check_postulate(postulate_id id, const base_contraction_op& op,
                                 const universe& u) {
    if (kind_of(id) != operator_kind::base_contraction)
        throw error("postulate '" + std::string(name_of(id)) +
                    "' does not apply to base contraction operators");
    return check_base(id, base_analysis(op, u));
}

postulate_report check_postulate(postulate_id id, const withdrawal_op& w, const universe& u) {
    if (kind_of(id) != operator_kind::withdrawal)
        throw error("postulate '" + std::string(name_of(id)) +
                    "' does not apply to withdrawal operators");
    return check_wd(id, wd_analysis(w, u));
}

postulate_report check_postulate(postulate_id id, const entrenchment_relation& r,
                                 const universe& u) {
    if (kind_of(id) != operator_kind::entrenchment)
        throw error("postulate '" + std::string(name_of(id)) +
                    "' does not apply to entrenchment relations");
    return check_ee(id, ee_analysis(r, u));
}

std::vector<postulate_report> check_suite(suite_id s, const base_contraction_op& op,
                                          const universe& u) {
    if (kind_of(s) != operator_kind::base_contraction)
        throw error("suite '" + std::string(name_of(s)) +
                    "' does not apply to base contraction operators");
    const base_analysis ba(op, u);
    std::vector<postulate_report> out;
    for (postulate_id id : suite_postulates(s)) out.push_back(check_base(id, ba));
    return out;
}

std::vector<postulate_report> check_suite(suite_id s, const withdrawal_op& w, const universe& u) {
    if (kind_of(s) != operator_kind::withdrawal)
        throw error("suite '" + std::string(name_of(s)) +
                    "' does not apply to withdrawal operators");
    const wd_analysis wa(w, u);
    std::vector<postulate_report> out;
    for (postulate_id id : suite_postulates(s)) out.push_back(check_wd(id, wa));
    return out;
}

std::vector<postulate_report> check_suite(suite_id s, const entrenchment_relation& r,
                                          const universe& u) {
    if (kind_of(s) != operator_kind::entrenchment)
        throw error("suite '" + std::string(name_of(s)) +
                    "' does not apply to entrenchment relations");
    const ee_analysis ea(r, u);
    std::vector<postulate_report> out;
    for (postulate_id id : suite_postulates(s)) out.push_back(check_ee(id, ea));
    return out;
}

std::optional<search_result> search_counterexample(postulate_id id, const ensconcement_source& gen,
                                                   std::size_t budget, const universe& u) {
    if (budget < 1) throw error("search budget must be at least 1");
    for (std::size_t i = 0; i < budget; ++i) {
        ensconcement e = gen(i);
        if (!(e.sig() == u.sig))
            throw error("generated ensconcement signature does not match the universe");
        postulate_report r{id, true, std::nullopt};
        switch (kind_of(id)) {
        case operator_kind::base_contraction:
            r = check_postulate(id, brutal_op(e), u);
            break;
        case operator_kind::withdrawal:
            r = check_postulate(id, severe_withdrawal(e), u);
            break;
        case operator_kind::entrenchment:
            r = check_postulate(id, derived_entrenchment(e), u);
            break;
        }
        if (!r.pass) return search_result{std::move(e), std::move(r)};
    }
    return std::nullopt;
}

} // namespace enscon
