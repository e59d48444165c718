#include "enscon/operators.hpp"

#include <algorithm>
#include <map>

namespace enscon {

namespace {

// Per-entry truth masks and cohort conjunctions, computed once per
// operator. Cuts depend on the argument only through its truth mask, so
// every derived comparison runs on masks.
struct rank_state {
    signature sig;
    std::vector<formula> base;
    std::uint32_t full = 0;
    std::uint32_t base_mask = 0;
    std::vector<std::uint32_t> strict_above; // conjunction over strictly higher ranks
    std::vector<std::uint32_t> at_least;     // conjunction over ranks >= own rank

    explicit rank_state(const ensconcement& e) : sig(e.sig()), base(e.base()) {
        const auto& entries = e.entries();
        const std::size_t n = entries.size();
        if (n > 64) throw error("base too large: " + std::to_string(n) + " entries (max 64)");
        full = sig.full_mask();
        std::vector<std::uint32_t> tt(n);
        base_mask = full;
        for (std::size_t i = 0; i < n; ++i) {
            tt[i] = tt_bits(entries[i].f, sig);
            base_mask &= tt[i];
        }
        strict_above.assign(n, full);
        at_least.assign(n, full);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (entries[j].rank > entries[i].rank) strict_above[i] &= tt[j];
                if (entries[j].rank >= entries[i].rank) at_least[i] &= tt[j];
            }
    }

    bool in_K(std::uint32_t g) const { return (base_mask & ~g & full) == 0; }

    std::uint64_t cut_nonstrict_mask(std::uint32_t g) const {
        std::uint64_t m = 0;
        for (std::size_t i = 0; i < strict_above.size(); ++i)
            if ((strict_above[i] & ~g & full) != 0) m |= std::uint64_t{1} << i;
        return m;
    }

    std::uint64_t cut_proper_mask(std::uint32_t g) const {
        std::uint64_t m = 0;
        for (std::size_t i = 0; i < at_least.size(); ++i)
            if ((at_least[i] & ~g & full) != 0) m |= std::uint64_t{1} << i;
        return m;
    }

    bool leq(std::uint32_t a, std::uint32_t b) const {
        if (!in_K(a)) return true;
        if (!in_K(b)) return false;
        const std::uint64_t ca = cut_nonstrict_mask(a);
        const std::uint64_t cb = cut_nonstrict_mask(b);
        return (cb & ~ca) == 0;
    }

    bool lt(std::uint32_t a, std::uint32_t b) const { return leq(a, b) && !leq(b, a); }

    std::vector<formula> select(std::uint64_t mask) const {
        std::vector<formula> out;
        for (std::size_t i = 0; i < base.size(); ++i)
            if (mask & (std::uint64_t{1} << i)) out.push_back(base[i]);
        return out;
    }
};

} // namespace

base_contraction_op table_op(std::vector<formula> base, const universe& u,
                             std::vector<std::vector<formula>> results_by_class) {
    if (results_by_class.size() != u.size())
        throw error("operator table must cover all " + std::to_string(u.size()) + " classes");
    for (const auto& result : results_by_class)
        for (const formula& f : result) {
            const bool in_base = std::any_of(base.begin(), base.end(),
                                             [&](const formula& g) { return g == f; });
            if (!in_base)
                throw error("operator table result '" + render(f) + "' is not a base member");
        }
    auto table = std::make_shared<std::vector<std::vector<formula>>>(std::move(results_by_class));
    const signature sig = u.sig;
    return base_contraction_op(std::move(base), sig, [table, sig](const formula& f) {
        return (*table)[tt_bits(f, sig)];
    });
}

std::vector<formula> brutal_contract(const ensconcement& e, const formula& f) {
    if (is_tautology(f, e.sig())) return e.base();
    return cut_proper(e, f);
}

base_contraction_op brutal_op(const ensconcement& e) {
    auto st = std::make_shared<rank_state>(e);
    return base_contraction_op(e.base(), e.sig(), [st](const formula& f) {
        const std::uint32_t g = tt_bits(f, st->sig);
        if (g == st->full) return st->base;
        return st->select(st->cut_proper_mask(g));
    });
}

entrenchment_relation derived_entrenchment(const ensconcement& e) {
    auto st = std::make_shared<rank_state>(e);
    belief_set K{e.base(), e.sig()};
    return entrenchment_relation(std::move(K), [st](const formula& a, const formula& b) {
        return st->leq(tt_bits(a, st->sig), tt_bits(b, st->sig));
    });
}

std::vector<formula> withdrawal_op::generating_base(const formula& alpha) const {
    std::vector<formula> out;
    for (const formula& g : K_.generators)
        if (member_(alpha, g)) out.push_back(g);
    return out;
}

withdrawal_op severe_withdrawal(const ensconcement& e) {
    auto st = std::make_shared<rank_state>(e);
    belief_set K{e.base(), e.sig()};
    return withdrawal_op(std::move(K), [st](const formula& alpha, const formula& beta) {
        const std::uint32_t a = tt_bits(alpha, st->sig);
        const std::uint32_t b = tt_bits(beta, st->sig);
        return st->in_K(b) && (a == st->full || st->lt(a, b));
    });
}

bool severe_withdraw_member(const ensconcement& e, const formula& alpha, const formula& beta) {
    return severe_withdrawal(e).member(alpha, beta);
}

std::vector<formula> severe_withdraw_base(const ensconcement& e, const formula& alpha) {
    return severe_withdrawal(e).generating_base(alpha);
}

withdrawal_op g_contraction(const ensconcement& e) {
    auto st = std::make_shared<rank_state>(e);
    belief_set K{e.base(), e.sig()};
    return withdrawal_op(std::move(K), [st](const formula& alpha, const formula& beta) {
        const std::uint32_t a = tt_bits(alpha, st->sig);
        const std::uint32_t b = tt_bits(beta, st->sig);
        return st->in_K(b) && (a == st->full || st->lt(a, a | b));
    });
}

bool g_contract_member(const ensconcement& e, const formula& alpha, const formula& beta) {
    return g_contraction(e).member(alpha, beta);
}

construction_error::construction_error(formula a, formula b)
    : error("operator results incomparable for '" + render(a) + "' and '" + render(b) + "'"),
      a_(std::move(a)), b_(std::move(b)) {}

namespace {

// Result of an operator call as a comparable set: base members by index,
// anything outside the base by rendered text.
struct result_set {
    std::uint64_t mask = 0;
    std::vector<std::string> extra;
};

result_set make_result_set(const std::vector<formula>& result, const std::vector<formula>& base) {
    result_set out;
    for (const formula& f : result) {
        bool found = false;
        for (std::size_t i = 0; i < base.size(); ++i)
            if (base[i] == f) {
                out.mask |= std::uint64_t{1} << i;
                found = true;
                break;
            }
        if (!found) out.extra.push_back(render(f));
    }
    std::sort(out.extra.begin(), out.extra.end());
    return out;
}

bool result_subset(const result_set& x, const result_set& y) {
    return (x.mask & ~y.mask) == 0 &&
           std::includes(y.extra.begin(), y.extra.end(), x.extra.begin(), x.extra.end());
}

} // namespace

ensconcement ensconcement_from_operator(const base_contraction_op& op, const universe& u) {
    if (!(op.sig() == u.sig)) throw error("operator signature does not match the universe");
    const std::vector<formula>& base = op.base();
    const std::size_t n = base.size();
    if (n > 64) throw error("base too large: " + std::to_string(n) + " entries (max 64)");

    std::vector<result_set> res;
    std::vector<char> taut(n);
    res.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        res.push_back(make_result_set(op(base[i]), base));
        taut[i] = is_tautology(base[i], op.sig());
    }

    const auto leq = [&](std::size_t i, std::size_t j) {
        return (result_subset(res[j], res[i]) && !taut[i]) || taut[j];
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!leq(i, j) && !leq(j, i)) throw construction_error(base[i], base[j]);

    // With totality the strict part orders the equivalence classes in a
    // chain; the number of strictly lower elements is constant on each
    // class, so dense-ranking those counts reproduces the preorder.
    std::vector<std::size_t> below(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (leq(j, i) && !leq(i, j)) ++below[i];
    std::vector<std::size_t> counts(below);
    std::sort(counts.begin(), counts.end());
    counts.erase(std::unique(counts.begin(), counts.end()), counts.end());

    std::vector<ensconcement::entry> entries;
    entries.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto it = std::lower_bound(counts.begin(), counts.end(), below[i]);
        entries.push_back({base[i], static_cast<int>(it - counts.begin())});
    }
    return ensconcement(op.sig(), std::move(entries));
}

entrenchment_relation entrenchment_from_withdrawal(const withdrawal_op& w) {
    auto wp = std::make_shared<withdrawal_op>(w);
    belief_set K = w.K();
    const signature sig = w.sig();
    return entrenchment_relation(std::move(K), [wp, sig](const formula& a, const formula& b) {
        return !wp->member(b, a) || is_tautology(b, sig);
    });
}

withdrawal_op severe_from_entrenchment(const entrenchment_relation& r, belief_set K) {
    auto rel = std::make_shared<entrenchment_relation>(r);
    auto inner = std::make_shared<belief_set>(std::move(K));
    return withdrawal_op(*inner, [rel, inner](const formula& alpha, const formula& beta) {
        return inner->member(beta) && (is_tautology(alpha, inner->sig) || rel->lt(alpha, beta));
    });
}

} // namespace enscon
