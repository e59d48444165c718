#include "enscon/oracle.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <random>

namespace enscon {

signature default_signature(int atom_count) {
    switch (atom_count) {
    case 1: return signature({"p"});
    case 2: return signature({"p", "q"});
    case 3: return signature({"p", "q", "r"});
    default: throw error("atom_count must be between 1 and 3");
    }
}

const universe& shared_universe(const signature& sig) {
    static std::map<std::vector<std::string>, universe> cache;
    auto it = cache.find(sig.atoms());
    if (it == cache.end()) it = cache.emplace(sig.atoms(), build_universe(sig)).first;
    return it->second;
}

namespace {

std::uint64_t mix64(std::uint64_t x) {
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ULL;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBULL;
    x ^= x >> 31;
    return x;
}

} // namespace

ensconcement generate_ensconcement(const generator_config& cfg, std::size_t index) {
    if (cfg.atom_count < 1 || cfg.atom_count > 3)
        throw error("atom_count must be between 1 and 3");
    if (cfg.base_size < 1 || cfg.base_size > 6) throw error("base_size must be between 1 and 6");
    if (cfg.rank_levels < 1 || cfg.rank_levels > 4)
        throw error("rank_levels must be between 1 and 4");
    if (index >= cfg.sample_count) throw error("sample index exceeds sample_count");

    const signature sig = default_signature(cfg.atom_count);
    const universe& u = shared_universe(sig);
    std::vector<std::uint32_t> pool;
    for (std::uint32_t c = cfg.allow_contradictions ? 0 : 1; c < u.full_mask; ++c)
        pool.push_back(c);
    if (pool.size() < static_cast<std::size_t>(cfg.base_size))
        throw error("base_size exceeds the class count at this atom count");

    std::mt19937_64 rng(mix64(cfg.seed + 0x9E3779B97F4A7C15ULL * (index + 1)));
    const std::size_t k = static_cast<std::size_t>(cfg.base_size);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<std::uint32_t> deck = pool;
        for (std::size_t i = 0; i < k; ++i) {
            const std::size_t j = i + static_cast<std::size_t>(rng() % (deck.size() - i));
            std::swap(deck[i], deck[j]);
        }
        std::vector<ensconcement::entry> entries;
        for (std::size_t i = 0; i < k; ++i)
            entries.push_back({u.display(deck[i]),
                               static_cast<int>(rng() % static_cast<std::uint64_t>(
                                                          cfg.rank_levels))});
        ensconcement e(sig, std::move(entries));
        if (validate(e).ok()) return e;
    }
    throw error("generation exhausted after 1000 attempts (seed=" + std::to_string(cfg.seed) +
                ", index=" + std::to_string(index) + ", atoms=" +
                std::to_string(cfg.atom_count) + ", base_size=" + std::to_string(cfg.base_size) +
                ", rank_levels=" + std::to_string(cfg.rank_levels) + ")");
}

// ---------------------------------------------------------------------------
// theorem catalog

namespace {

struct thm_info {
    theorem_id id;
    std::string_view name;
};

constexpr std::array<thm_info, 9> thm_table{{
    {theorem_id::thm2_bridge, "thm2-bridge"},
    {theorem_id::thm3_closure, "thm3-closure"},
    {theorem_id::thm1_roundtrip, "thm1-roundtrip"},
    {theorem_id::thm4_roundtrip, "thm4-roundtrip"},
    {theorem_id::lemma2_representation, "lemma2-representation"},
    {theorem_id::cut_lemma_suite, "cut-lemma-suite"},
    {theorem_id::obs_lemmaIMP, "obs-lemmaIMP"},
    {theorem_id::obs_AAZ, "obs-AAZ"},
    {theorem_id::interpolation, "interpolation"},
}};

} // namespace

std::string_view name_of(theorem_id id) {
    for (const thm_info& t : thm_table)
        if (t.id == id) return t.name;
    throw error("unknown theorem id");
}

std::optional<theorem_id> theorem_by_name(std::string_view name) {
    for (const thm_info& t : thm_table)
        if (t.name == name) return t.id;
    return std::nullopt;
}

const std::vector<theorem_id>& theorem_catalog() {
    static const std::vector<theorem_id> all = [] {
        std::vector<theorem_id> v;
        for (const thm_info& t : thm_table) v.push_back(t.id);
        return v;
    }();
    return all;
}

// ---------------------------------------------------------------------------
// naive side: every semantic question answered by recursive evaluation
// over explicit valuations, every cut unrolled from its definition

namespace {

class naive_ctx {
public:
    const ensconcement* e;
    const universe* u;
    signature sig;
    int n = 0;
    int V = 0;
    std::uint32_t M = 0;
    std::size_t nent = 0;
    std::uint64_t all_entries = 0;
    std::vector<std::vector<char>> rep_sat; // [class][valuation]
    std::vector<std::vector<char>> ent_sat; // [entry][valuation]
    std::vector<std::uint32_t> ent_cls;
    std::vector<char> ent_taut;
    std::vector<char> allents_vals; // valuations where every entry holds
    std::vector<std::uint64_t> cutp, cutn; // entry-index masks per class
    std::vector<std::vector<char>> cutp_vals; // valuations where cut_proper holds
    std::vector<std::vector<char>> cutn_vals;
    std::vector<char> inK_, taut_;

    naive_ctx(const ensconcement& en, const universe& uni)
        : e(&en), u(&uni), sig(en.sig()) {
        n = sig.size();
        V = 1 << n;
        M = uni.size();
        nent = en.size();
        if (nent > 64) throw error("base too large for the oracle (max 64 entries)");
        all_entries = nent == 0 ? 0
                      : nent == 64 ? ~std::uint64_t{0}
                                   : (std::uint64_t{1} << nent) - 1;

        rep_sat.resize(M);
        for (std::uint32_t c = 0; c < M; ++c) rep_sat[c] = sat_of(uni.rep(c));
        ent_sat.resize(nent);
        ent_cls.resize(nent);
        ent_taut.resize(nent);
        for (std::size_t i = 0; i < nent; ++i) {
            ent_sat[i] = sat_of(en.entries()[i].f);
            ent_cls[i] = pack(ent_sat[i]);
            ent_taut[i] = all_true(ent_sat[i]);
        }
        allents_vals.assign(static_cast<std::size_t>(V), 1);
        for (std::size_t i = 0; i < nent; ++i)
            for (int v = 0; v < V; ++v)
                if (!ent_sat[i][static_cast<std::size_t>(v)])
                    allents_vals[static_cast<std::size_t>(v)] = 0;

        // per-entry cohort valuation sets, keyed by the entry's own rank
        std::vector<std::vector<char>> strict_vals(nent), nonstrict_vals(nent);
        for (std::size_t i = 0; i < nent; ++i) {
            strict_vals[i].assign(static_cast<std::size_t>(V), 1);
            nonstrict_vals[i].assign(static_cast<std::size_t>(V), 1);
            for (std::size_t j = 0; j < nent; ++j)
                for (int v = 0; v < V; ++v) {
                    if (ent_sat[j][static_cast<std::size_t>(v)]) continue;
                    if (en.entries()[j].rank > en.entries()[i].rank)
                        strict_vals[i][static_cast<std::size_t>(v)] = 0;
                    if (en.entries()[j].rank >= en.entries()[i].rank)
                        nonstrict_vals[i][static_cast<std::size_t>(v)] = 0;
                }
        }

        cutp.assign(M, 0);
        cutn.assign(M, 0);
        inK_.resize(M);
        taut_.resize(M);
        for (std::uint32_t c = 0; c < M; ++c) {
            taut_[c] = all_true(rep_sat[c]);
            inK_[c] = !counter_exists(allents_vals, rep_sat[c]);
            for (std::size_t i = 0; i < nent; ++i) {
                if (counter_exists(nonstrict_vals[i], rep_sat[c]))
                    cutp[c] |= std::uint64_t{1} << i;
                if (counter_exists(strict_vals[i], rep_sat[c]))
                    cutn[c] |= std::uint64_t{1} << i;
            }
        }
        cutp_vals.resize(M);
        cutn_vals.resize(M);
        for (std::uint32_t c = 0; c < M; ++c) {
            cutp_vals[c] = premise_vals(cutp[c]);
            cutn_vals[c] = premise_vals(cutn[c]);
        }
    }

    bool holds(const formula& f, int v) const {
        switch (f.type()) {
        case formula::kind::atom: {
            const auto idx = sig.index_of(f.atom_name());
            if (!idx) throw unknown_atom_error(f.atom_name());
            return ((v >> (n - 1 - *idx)) & 1) != 0;
        }
        case formula::kind::verum: return true;
        case formula::kind::falsum: return false;
        case formula::kind::negation: return !holds(f.left(), v);
        case formula::kind::conjunction: return holds(f.left(), v) && holds(f.right(), v);
        case formula::kind::disjunction: return holds(f.left(), v) || holds(f.right(), v);
        case formula::kind::implication: return !holds(f.left(), v) || holds(f.right(), v);
        case formula::kind::equivalence: return holds(f.left(), v) == holds(f.right(), v);
        }
        throw error("unreachable formula kind");
    }

    std::vector<char> sat_of(const formula& f) const {
        std::vector<char> out(static_cast<std::size_t>(V));
        for (int v = 0; v < V; ++v) out[static_cast<std::size_t>(v)] = holds(f, v);
        return out;
    }

    static bool all_true(const std::vector<char>& s) {
        return std::all_of(s.begin(), s.end(), [](char c) { return c != 0; });
    }

    /// Some valuation satisfies the premises but not the goal.
    static bool counter_exists(const std::vector<char>& prem, const std::vector<char>& goal) {
        for (std::size_t v = 0; v < prem.size(); ++v)
            if (prem[v] && !goal[v]) return true;
        return false;
    }

    std::vector<char> premise_vals(std::uint64_t entry_mask) const {
        std::vector<char> out(static_cast<std::size_t>(V), 1);
        for (std::size_t i = 0; i < nent; ++i) {
            if (!((entry_mask >> i) & 1)) continue;
            for (int v = 0; v < V; ++v)
                if (!ent_sat[i][static_cast<std::size_t>(v)])
                    out[static_cast<std::size_t>(v)] = 0;
        }
        return out;
    }

    std::uint32_t pack(const std::vector<char>& s) const {
        std::uint32_t bits = 0;
        for (int v = 0; v < V; ++v)
            if (s[static_cast<std::size_t>(v)]) bits |= std::uint32_t{1} << (V - 1 - v);
        return bits;
    }

    bool leq(std::uint32_t a, std::uint32_t b) const {
        if (!inK_[a]) return true;
        if (!inK_[b]) return false;
        return (cutn[b] & ~cutn[a]) == 0;
    }
    bool lt(std::uint32_t a, std::uint32_t b) const { return leq(a, b) && !leq(b, a); }
    bool severe(std::uint32_t a, std::uint32_t b) const {
        return inK_[b] && (taut_[a] || lt(a, b));
    }
    std::uint32_t disj_cls(std::uint32_t a, std::uint32_t b) const {
        std::uint32_t bits = 0;
        for (int v = 0; v < V; ++v)
            if (rep_sat[a][static_cast<std::size_t>(v)] ||
                rep_sat[b][static_cast<std::size_t>(v)])
                bits |= std::uint32_t{1} << (V - 1 - v);
        return bits;
    }
    std::uint32_t conj_cls(std::uint32_t a, std::uint32_t b) const {
        std::uint32_t bits = 0;
        for (int v = 0; v < V; ++v)
            if (rep_sat[a][static_cast<std::size_t>(v)] &&
                rep_sat[b][static_cast<std::size_t>(v)])
                bits |= std::uint32_t{1} << (V - 1 - v);
        return bits;
    }
    bool g_member(std::uint32_t a, std::uint32_t b) const {
        return inK_[b] && (taut_[a] || lt(a, disj_cls(a, b)));
    }
    std::uint64_t brutal_mask(std::uint32_t c) const { return taut_[c] ? all_entries : cutp[c]; }
    /// Result of brutal contraction entails class d.
    bool brutal_entails(std::uint32_t c, std::uint32_t d) const {
        const std::vector<char>& prem = taut_[c] ? allents_vals : cutp_vals[c];
        return !counter_exists(prem, rep_sat[d]);
    }
};

using reporter = std::function<void(std::string)>;

void check_thm2(const naive_ctx& x, const reporter& fail) {
    for (std::uint32_t a = 0; a < x.M; ++a) {
        std::uint64_t rhs = 0;
        for (std::size_t i = 0; i < x.nent; ++i)
            if (x.severe(a, x.ent_cls[i])) rhs |= std::uint64_t{1} << i;
        if (x.brutal_mask(a) != rhs) {
            fail("A − α ≠ (K ÷ α) ∩ A at α=" + x.u->display_text(a));
            return;
        }
    }
}

void check_thm3(const naive_ctx& x, const reporter& fail) {
    for (std::uint32_t a = 0; a < x.M; ++a)
        for (std::uint32_t b = 0; b < x.M; ++b)
            if (x.severe(a, b) != x.brutal_entails(a, b)) {
                fail("K ÷ α ≠ Cn(A − α) at α=" + x.u->display_text(a) +
                     ", β=" + x.u->display_text(b));
                return;
            }
}

void check_thm1_roundtrip(const naive_ctx& x, const reporter& fail) {
    std::vector<std::uint64_t> table(x.M);
    for (std::uint32_t c = 0; c < x.M; ++c) table[c] = x.brutal_mask(c);

    const auto pre = [&](std::size_t i, std::size_t j) {
        const bool sub = (table[x.ent_cls[j]] & ~table[x.ent_cls[i]]) == 0;
        return (sub && !x.ent_taut[i]) || x.ent_taut[j];
    };
    std::vector<int> below(x.nent, 0);
    for (std::size_t i = 0; i < x.nent; ++i)
        for (std::size_t j = 0; j < x.nent; ++j) {
            if (i == j) continue;
            if (!pre(i, j) && !pre(j, i)) {
                fail("recovered order not total between " + render(x.e->entries()[i].f) +
                     " and " + render(x.e->entries()[j].f));
                return;
            }
            if (pre(j, i) && !pre(i, j)) ++below[i];
        }
    std::vector<int> levels = below;
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    std::vector<ensconcement::entry> entries;
    for (std::size_t i = 0; i < x.nent; ++i) {
        const int rank = static_cast<int>(
            std::lower_bound(levels.begin(), levels.end(), below[i]) - levels.begin());
        entries.push_back({x.e->entries()[i].f, rank});
    }
    const ensconcement e2(x.sig, std::move(entries));
    const naive_ctx x2(e2, *x.u);
    for (std::uint32_t c = 0; c < x.M; ++c)
        if (x2.brutal_mask(c) != table[c]) {
            fail("reconstructed operator differs at α=" + x.u->display_text(c));
            return;
        }
}

void check_thm4_roundtrip(const naive_ctx& x, const reporter& fail) {
    const auto leq2 = [&](std::uint32_t a, std::uint32_t b) {
        return !x.severe(b, a) || x.taut_[b];
    };
    for (std::uint32_t a = 0; a < x.M; ++a)
        for (std::uint32_t b = 0; b < x.M; ++b) {
            const bool member2 = x.inK_[b] && (x.taut_[a] || (leq2(a, b) && !leq2(b, a)));
            if (member2 != x.severe(a, b)) {
                fail("withdrawal rebuilt through the recovered ordering differs at α=" +
                     x.u->display_text(a) + ", β=" + x.u->display_text(b));
                return;
            }
        }
}

void check_lemma2(const naive_ctx& x, const reporter& fail) {
    for (std::uint32_t a = 0; a < x.M; ++a)
        for (std::uint32_t b = 0; b < x.M; ++b) {
            const bool from_wd = !x.severe(b, a) || x.taut_[b];
            if (from_wd != x.leq(a, b)) {
                fail("α ≤ β disagrees with (α ∉ K ÷ β or ⊢ β) at α=" + x.u->display_text(a) +
                     ", β=" + x.u->display_text(b));
                return;
            }
        }
}

void check_cut_lemmas(const naive_ctx& x, const reporter& fail) {
    const auto bindings = [&](std::uint32_t a) { return " at α=" + x.u->display_text(a); };
    const auto bindings2 = [&](std::uint32_t a, std::uint32_t b) {
        return " at α=" + x.u->display_text(a) + ", β=" + x.u->display_text(b);
    };
    // L1(a): for non-tautological α the proper cut does not entail α
    for (std::uint32_t a = 0; a < x.M; ++a)
        if (!x.taut_[a] && !naive_ctx::counter_exists(x.cutp_vals[a], x.rep_sat[a])) {
            fail("L1a: proper cut entails its argument" + bindings(a));
            break;
        }
    // L1(b): A ⊬ α makes the proper cut the whole base
    for (std::uint32_t a = 0; a < x.M; ++a)
        if (!x.inK_[a] && x.cutp[a] != x.all_entries) {
            fail("L1b: proper cut of an unentailed formula is not the whole base" + bindings(a));
            break;
        }
    // L1(c): β ⊢ α implies cut(α) ⊆ cut(β)
    for (std::uint32_t a = 0; a < x.M; ++a) {
        bool bad = false;
        for (std::uint32_t b = 0; b < x.M && !bad; ++b) {
            if (naive_ctx::counter_exists(x.rep_sat[b], x.rep_sat[a])) continue;
            if ((x.cutp[a] & ~x.cutp[b]) != 0) {
                fail("L1c: β ⊢ α but proper cut of α exceeds proper cut of β" + bindings2(a, b));
                bad = true;
            }
        }
        if (bad) break;
    }
    // L1(d): lower-ranked base members have larger proper cuts
    for (std::size_t i = 0; i < x.nent; ++i) {
        bool bad = false;
        for (std::size_t j = 0; j < x.nent && !bad; ++j) {
            if (x.e->entries()[i].rank > x.e->entries()[j].rank) continue;
            if ((x.cutp[x.ent_cls[j]] & ~x.cutp[x.ent_cls[i]]) != 0) {
                fail("L1d: α ⪯ β but proper cut of β exceeds proper cut of α at α=" +
                     render(x.e->entries()[i].f) + ", β=" + render(x.e->entries()[j].f));
                bad = true;
            }
        }
        if (bad) break;
    }
    // L1(e)/L1(f): conjunction collapses to one conjunct's cut
    for (std::uint32_t a = 0; a < x.M; ++a) {
        bool bad = false;
        for (std::uint32_t b = 0; b < x.M && !bad; ++b) {
            const std::uint32_t m = x.conj_cls(a, b);
            const bool cut_entails_b = !naive_ctx::counter_exists(x.cutp_vals[a], x.rep_sat[b]);
            if (cut_entails_b && x.cutp[m] != x.cutp[a]) {
                fail("L1e: cut(α) ⊢ β but cut(α ∧ β) ≠ cut(α)" + bindings2(a, b));
                bad = true;
            }
            if (!cut_entails_b && x.cutp[m] != x.cutp[b]) {
                fail("L1f: cut(α) ⊬ β but cut(α ∧ β) ≠ cut(β)" + bindings2(a, b));
                bad = true;
            }
        }
        if (bad) break;
    }
    // L3: a non-empty non-strict cut is realized by one of its members
    for (std::uint32_t a = 0; a < x.M; ++a) {
        if (!x.inK_[a] || x.cutn[a] == 0) continue;
        bool found = false;
        for (std::size_t i = 0; i < x.nent && !found; ++i)
            if ((x.cutn[a] >> i) & 1) found = x.cutn[x.ent_cls[i]] == x.cutn[a];
        if (!found) {
            fail("L3: no member of the non-strict cut reproduces it" + bindings(a));
            break;
        }
    }
    // L4: for entailed α the non-strict cut still entails α
    for (std::uint32_t a = 0; a < x.M; ++a)
        if (x.inK_[a] && naive_ctx::counter_exists(x.cutn_vals[a], x.rep_sat[a])) {
            fail("L4: non-strict cut fails to entail its entailed argument" + bindings(a));
            break;
        }
    // L5: strict inclusion transfers from proper to non-strict cuts
    for (std::uint32_t a = 0; a < x.M; ++a) {
        bool bad = false;
        for (std::uint32_t b = 0; b < x.M && !bad; ++b) {
            if (!x.inK_[a] || !x.inK_[b]) continue;
            const bool proper_strict =
                (x.cutp[a] & ~x.cutp[b]) == 0 && x.cutp[a] != x.cutp[b];
            if (!proper_strict) continue;
            const bool nonstrict_strict =
                (x.cutn[a] & ~x.cutn[b]) == 0 && x.cutn[a] != x.cutn[b];
            if (!nonstrict_strict) {
                fail("L5: strict proper-cut inclusion does not transfer" + bindings2(a, b));
                bad = true;
            }
        }
        if (bad) break;
    }
    // Obs 1: for a base member the proper cut is the strictly-above cohort
    for (std::size_t i = 0; i < x.nent; ++i) {
        std::uint64_t above = 0;
        for (std::size_t j = 0; j < x.nent; ++j)
            if (x.e->entries()[j].rank > x.e->entries()[i].rank) above |= std::uint64_t{1} << j;
        if (x.cutp[x.ent_cls[i]] != above) {
            fail("obs1: proper cut of a member is not its strictly-above cohort at α=" +
                 render(x.e->entries()[i].f));
            break;
        }
    }
    // Obs 2(a): proper-cut inclusion transfers for non-tautological β
    for (std::uint32_t a = 0; a < x.M; ++a) {
        bool bad = false;
        for (std::uint32_t b = 0; b < x.M && !bad; ++b) {
            if (!x.inK_[a] || !x.inK_[b] || x.taut_[b]) continue;
            if ((x.cutp[a] & ~x.cutp[b]) != 0) continue;
            if ((x.cutn[a] & ~x.cutn[b]) != 0) {
                fail("obs2a: proper-cut inclusion does not transfer to non-strict cuts" +
                     bindings2(a, b));
                bad = true;
            }
        }
        if (bad) break;
    }
    // Obs 2(b): tautologies have strictly smaller non-strict cuts
    for (std::uint32_t a = 0; a < x.M; ++a) {
        if (!x.inK_[a] || x.taut_[a]) continue;
        bool bad = false;
        for (std::uint32_t b = 0; b < x.M && !bad; ++b) {
            if (!x.taut_[b]) continue;
            const bool strict = (x.cutn[b] & ~x.cutn[a]) == 0 && x.cutn[b] != x.cutn[a];
            if (!strict) {
                fail("obs2b: tautology cut not strictly below" + bindings2(a, b));
                bad = true;
            }
        }
        if (bad) break;
    }
}

void check_lemmaIMP(const naive_ctx& x, const reporter& fail) {
    for (std::uint32_t a = 0; a < x.M; ++a) {
        if (!x.inK_[a] || x.taut_[a]) continue;
        bool found = false;
        for (std::size_t i = 0; i < x.nent && !found; ++i)
            found = x.brutal_mask(x.ent_cls[i]) == x.brutal_mask(a);
        if (!found) {
            fail("no β ∈ A with A − β = A − α at α=" + x.u->display_text(a));
            return;
        }
    }
}

void check_AAZ(const naive_ctx& x, const reporter& fail) {
    for (std::uint32_t a = 0; a < x.M; ++a) {
        if (!x.inK_[a] || x.taut_[a]) continue;
        bool found = false;
        for (std::size_t i = 0; i < x.nent && !found; ++i) {
            bool same = true;
            for (std::uint32_t b = 0; b < x.M && same; ++b)
                same = x.severe(x.ent_cls[i], b) == x.severe(a, b);
            found = same;
        }
        if (!found) {
            fail("no β ∈ A with K ÷ β = K ÷ α at α=" + x.u->display_text(a));
            return;
        }
    }
}

void check_interpolation(const naive_ctx& x, const reporter& fail) {
    for (std::uint32_t a = 0; a < x.M; ++a)
        for (std::uint32_t b = 0; b < x.M; ++b) {
            if (x.severe(a, b) && !x.g_member(a, b)) {
                fail("K ÷ α ⊈ K − α at α=" + x.u->display_text(a) + ", β=" +
                     x.u->display_text(b));
                return;
            }
            if (x.g_member(a, b) && !x.inK_[b]) {
                fail("K − α ⊈ K at α=" + x.u->display_text(a) + ", β=" +
                     x.u->display_text(b));
                return;
            }
        }
}

void run_checks(theorem_id id, const naive_ctx& x, const reporter& fail) {
    switch (id) {
    case theorem_id::thm2_bridge: check_thm2(x, fail); return;
    case theorem_id::thm3_closure: check_thm3(x, fail); return;
    case theorem_id::thm1_roundtrip: check_thm1_roundtrip(x, fail); return;
    case theorem_id::thm4_roundtrip: check_thm4_roundtrip(x, fail); return;
    case theorem_id::lemma2_representation: check_lemma2(x, fail); return;
    case theorem_id::cut_lemma_suite: check_cut_lemmas(x, fail); return;
    case theorem_id::obs_lemmaIMP: check_lemmaIMP(x, fail); return;
    case theorem_id::obs_AAZ: check_AAZ(x, fail); return;
    case theorem_id::interpolation: check_interpolation(x, fail); return;
    }
    throw error("unknown theorem id");
}

} // namespace

std::vector<theorem_failure> verify_theorem(theorem_id id, const ensconcement& e) {
    const universe& u = shared_universe(e.sig());
    const naive_ctx x(e, u);
    std::vector<theorem_failure> out;
    const std::string text = to_text(e);
    run_checks(id, x, [&](std::string detail) {
        out.push_back({id, std::move(detail), text});
    });
    return out;
}

// ---------------------------------------------------------------------------
// corpus

std::vector<corpus_item> build_corpus(const generator_config& cfg) {
    std::vector<corpus_item> out;
    const signature s2 = default_signature(2);
    const signature s3 = default_signature(3);

    std::size_t fixed_n = 0;
    const auto add_fixed = [&](const signature& sig,
                               std::vector<std::pair<const char*, int>> rows) {
        std::vector<ensconcement::entry> entries;
        for (const auto& [text, rank] : rows) entries.push_back({parse(text, sig), rank});
        out.push_back({"fixed-" + std::to_string(fixed_n++), ensconcement(sig, std::move(entries))});
    };
    add_fixed(s2, {{"p", 0}, {"q", 1}});
    add_fixed(s2, {{"p", 0}, {"q", 0}, {"p | q", 1}});
    add_fixed(s2, {{"p & q", 0}});
    add_fixed(s2, {{"p", 0}});
    add_fixed(s2, {{"p", 0}, {"p | q", 1}});
    add_fixed(s2, {{"p", 0}, {"!!p", 0}});
    add_fixed(s2, {{"p", 0}, {"p -> q", 1}});
    add_fixed(s2, {{"p & q", 0}, {"p", 1}});
    add_fixed(s2, {});
    add_fixed(s3, {{"p", 0}, {"q", 1}, {"r", 2}});

    // exhaustive 2-atom slab: non-trivial classes, dense rank patterns
    const universe& u2 = shared_universe(s2);
    std::size_t slab_n = 0;
    const auto add_slab = [&](const std::vector<std::uint32_t>& classes,
                              const std::vector<int>& pattern) {
        std::vector<ensconcement::entry> entries;
        for (std::size_t i = 0; i < classes.size(); ++i)
            entries.push_back({u2.display(classes[i]), pattern[i]});
        ensconcement e(s2, std::move(entries));
        if (validate(e).ok()) out.push_back({"slab-" + std::to_string(slab_n++), std::move(e)});
    };
    const auto dense_patterns = [](std::size_t size) {
        std::vector<std::vector<int>> pats;
        std::vector<int> cur(size, 0);
        while (true) {
            int max = 0;
            bool dense = false;
            for (int v : cur) max = std::max(max, v);
            std::vector<char> used(static_cast<std::size_t>(max) + 1, 0);
            for (int v : cur) used[static_cast<std::size_t>(v)] = 1;
            dense = std::all_of(used.begin(), used.end(), [](char c) { return c != 0; });
            if (dense) pats.push_back(cur);
            std::size_t i = size;
            while (i > 0 && cur[i - 1] == 2) cur[--i] = 0;
            if (i == 0) break;
            ++cur[i - 1];
        }
        return pats;
    };
    const std::uint32_t hi = u2.full_mask; // classes 1 .. hi-1 are non-trivial
    for (std::uint32_t c1 = 1; c1 < hi; ++c1) add_slab({c1}, {0});
    const auto pat2 = dense_patterns(2);
    for (std::uint32_t c1 = 1; c1 < hi; ++c1)
        for (std::uint32_t c2 = c1 + 1; c2 < hi; ++c2)
            for (const auto& p : pat2) add_slab({c1, c2}, p);
    const auto pat3 = dense_patterns(3);
    for (std::uint32_t c1 = 1; c1 < hi; ++c1)
        for (std::uint32_t c2 = c1 + 1; c2 < hi; ++c2)
            for (std::uint32_t c3 = c2 + 1; c3 < hi; ++c3)
                for (const auto& p : pat3) add_slab({c1, c2, c3}, p);

    for (std::size_t i = 0; i < cfg.sample_count; ++i)
        out.push_back({"rand-" + std::to_string(i), generate_ensconcement(cfg, i)});
    return out;
}

corpus_summary run_corpus(const std::vector<corpus_item>& corpus,
                          const std::vector<theorem_id>& ids) {
    corpus_summary s;
    for (theorem_id id : ids) s.rows.push_back({id, 0, 0, 0, "", {}});
    s.negatives.push_back({"recovery", 0, 0, ""});
    s.negatives.push_back({"expulsiveness", 0, 0, ""});
    s.negatives.push_back({"linearity", 0, 0, ""});
    constexpr std::size_t failure_cap = 3;

    for (const corpus_item& item : corpus) {
        const universe& u = shared_universe(item.e.sig());
        const naive_ctx x(item.e, u);
        const std::string text = to_text(item.e);
        for (std::size_t i = 0; i < ids.size(); ++i) {
            theorem_row& row = s.rows[i];
            ++row.samples;
            bool failed = false;
            run_checks(ids[i], x, [&](std::string detail) {
                failed = true;
                if (row.failures.size() < failure_cap)
                    row.failures.push_back({ids[i], std::move(detail), text});
            });
            if (failed) {
                ++row.failed;
                if (row.first_failing.empty()) row.first_failing = item.label;
            } else {
                ++row.passed;
            }
        }

        const withdrawal_op w = severe_withdrawal(item.e);
        const postulate_id neg_ids[3] = {postulate_id::recovery, postulate_id::expulsiveness,
                                         postulate_id::linearity};
        for (int i = 0; i < 3; ++i) {
            negative_check& nc = s.negatives[static_cast<std::size_t>(i)];
            ++nc.samples;
            if (!check_postulate(neg_ids[i], w, u).pass) {
                ++nc.failed;
                if (nc.first_failing.empty()) nc.first_failing = item.label;
            }
        }
    }
    return s;
}

std::string render_summary(const corpus_summary& s) {
    std::string out = "theorem | samples | pass | fail | first-failing-seed\n";
    for (const theorem_row& r : s.rows) {
        out += std::string(name_of(r.id)) + " | " + std::to_string(r.samples) + " | " +
               std::to_string(r.passed) + " | " + std::to_string(r.failed) + " | " +
               (r.first_failing.empty() ? "-" : r.first_failing) + "\n";
    }
    out += "\nnegative check | samples | fail | first-failing-seed\n";
    for (const negative_check& nc : s.negatives) {
        out += nc.name + " | " + std::to_string(nc.samples) + " | " +
               std::to_string(nc.failed) + " | " +
               (nc.first_failing.empty() ? "-" : nc.first_failing) + "\n";
    }
    return out;
}

// ---------------------------------------------------------------------------
// interderivability

std::string_view name_of(implication_id id) {
    switch (id) {
    case implication_id::s2lemma1: return "s2lemma1";
    case implication_id::s2lemma2: return "s2lemma2";
    case implication_id::ultimo2: return "ultimo2";
    case implication_id::ultimo3: return "ultimo3";
    }
    throw error("unknown implication id");
}

namespace {

/// K ÷ α = Cn(A − α) as a membership oracle, memoized per class.
withdrawal_op induced_withdrawal(const base_contraction_op& op, const universe& u) {
    auto cn = std::make_shared<std::vector<std::uint32_t>>(u.size(), u.full_mask);
    for (std::uint32_t c = 0; c < u.size(); ++c)
        for (const formula& f : op(u.rep(c))) (*cn)[c] &= tt_bits(f, op.sig());
    const std::uint32_t full = u.full_mask;
    const universe* up = &u;
    belief_set K{op.base(), op.sig()};
    return withdrawal_op(std::move(K),
                         [cn, up, full](const formula& a, const formula& b) {
                             return ((*cn)[up->bits_of(a)] & ~up->bits_of(b) & full) == 0;
                         });
}

} // namespace

std::vector<postulate_report> verify_implication(implication_id id, const ensconcement& e,
                                                 const universe& u) {
    const base_contraction_op op = brutal_op(e);
    const auto premise_ok = [&](std::initializer_list<postulate_id> ids) {
        for (postulate_id pid : ids)
            if (!check_postulate(pid, op, u).pass) return false;
        return true;
    };
    std::vector<postulate_report> fails;
    const auto conclude_base = [&](std::initializer_list<postulate_id> ids) {
        for (postulate_id pid : ids) {
            postulate_report r = check_postulate(pid, op, u);
            if (!r.pass) fails.push_back(std::move(r));
        }
    };
    const auto conclude_wd = [&](std::initializer_list<postulate_id> ids) {
        const withdrawal_op w = induced_withdrawal(op, u);
        for (postulate_id pid : ids) {
            postulate_report r = check_postulate(pid, w, u);
            if (!r.pass) fails.push_back(std::move(r));
        }
    };
    switch (id) {
    case implication_id::s2lemma1:
        if (premise_ok({postulate_id::success, postulate_id::inclusion, postulate_id::failure,
                        postulate_id::relative_closure, postulate_id::strong_inclusion,
                        postulate_id::lower_bound}))
            conclude_base({postulate_id::clustering});
        break;
    case implication_id::s2lemma2:
        if (premise_ok({postulate_id::failure, postulate_id::success,
                        postulate_id::strong_inclusion, postulate_id::clustering}))
            conclude_base({postulate_id::uniform_behaviour});
        break;
    case implication_id::ultimo2:
        if (premise_ok({postulate_id::success, postulate_id::inclusion, postulate_id::vacuity,
                        postulate_id::failure, postulate_id::relative_closure,
                        postulate_id::strong_inclusion}))
            conclude_wd({postulate_id::div1, postulate_id::div2, postulate_id::div3,
                         postulate_id::div4, postulate_id::div6, postulate_id::div9,
                         postulate_id::base_reduction});
        break;
    case implication_id::ultimo3:
        if (premise_ok({postulate_id::success, postulate_id::inclusion, postulate_id::failure,
                        postulate_id::relative_closure, postulate_id::upper_bound,
                        postulate_id::lower_bound, postulate_id::strong_inclusion}))
            conclude_wd({postulate_id::div_upper_bound, postulate_id::div_lower_bound});
        break;
    }
    return fails;
}

} // namespace enscon
