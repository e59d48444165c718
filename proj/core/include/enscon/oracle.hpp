#pragma once

// Ground-truth side of the test suite: brute-force verifiers for the
// structural theorems, a seeded generator of valid ensconcements, and a
// corpus runner with a deterministic summary.
//
// The verifiers unroll every claim to cuts and entailment, with
// entailment decided by recursive evaluation of each valuation. The
// optimized bitmask route in the core modules is never consulted, so the
// two paths can only agree by both being right.

#include "enscon/postulates.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace enscon {

struct generator_config {
    std::uint64_t seed = 0;
    int atom_count = 2;  // 1..3
    int base_size = 2;   // 1..6
    int rank_levels = 2; // 1..4
    std::size_t sample_count = 100;
    /// Admit logically false base members (stress mode). Tautologies are
    /// never generated; the default also excludes contradictions.
    bool allow_contradictions = false;
};

signature default_signature(int atom_count);

/// Shared universe for a signature, built once per atom set.
const universe& shared_universe(const signature& sig);

/// Deterministic function of (cfg.seed, index): distinct non-trivial
/// classes with uniform ranks, rejection-sampled until validate()
/// accepts. Throws on out-of-range config, index >= sample_count, or
/// retry exhaustion.
ensconcement generate_ensconcement(const generator_config& cfg, std::size_t index);

enum class theorem_id {
    thm2_bridge,
    thm3_closure,
    thm1_roundtrip,
    thm4_roundtrip,
    lemma2_representation,
    cut_lemma_suite,
    obs_lemmaIMP,
    obs_AAZ,
    interpolation,
};

std::string_view name_of(theorem_id id);
std::optional<theorem_id> theorem_by_name(std::string_view name);
const std::vector<theorem_id>& theorem_catalog();

struct theorem_failure {
    theorem_id id;
    /// Which sub-claim failed and at which bindings.
    std::string detail;
    /// Full file text of the offending ensconcement, a self-contained repro.
    std::string ensconcement_text;
};

/// Every sub-claim of `id` on `e`, each side computed from primitive
/// definitions. Empty result = PASS.
std::vector<theorem_failure> verify_theorem(theorem_id id, const ensconcement& e);

struct corpus_item {
    std::string label; // fixed-N, slab-N, or rand-N
    ensconcement e;
};

/// Fixed hand-picked bases, the exhaustive 2-atom slab (base sizes 1-3,
/// up to 3 dense rank levels, non-trivial classes only), then
/// cfg.sample_count generated samples.
std::vector<corpus_item> build_corpus(const generator_config& cfg);

struct theorem_row {
    theorem_id id;
    std::size_t samples = 0;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::string first_failing; // corpus label, empty when failed == 0
    std::vector<theorem_failure> failures; // capped at a few per row
};

struct negative_check {
    std::string name;
    std::size_t samples = 0;
    std::size_t failed = 0;
    std::string first_failing;
};

struct corpus_summary {
    std::vector<theorem_row> rows;
    /// Severe-withdrawal controls over the same corpus: recovery is
    /// expected to fail somewhere, expulsiveness and linearity nowhere.
    std::vector<negative_check> negatives;
};

corpus_summary run_corpus(const std::vector<corpus_item>& corpus,
                          const std::vector<theorem_id>& ids);

/// `theorem | samples | pass | fail | first-failing-seed` per row, then
/// the negative-check list in the same shape.
std::string render_summary(const corpus_summary& s);

enum class implication_id { s2lemma1, s2lemma2, ultimo2, ultimo3 };

std::string_view name_of(implication_id id);

/// Premise-suite PASS implies conclusion-postulate PASS, checked on the
/// brutal contraction of `e` (and the withdrawal it induces by closure,
/// for the transfer implications). Returns the failing conclusion
/// reports; empty = pass (vacuously when the premise fails).
std::vector<postulate_report> verify_implication(implication_id id, const ensconcement& e,
                                                 const universe& u);

} // namespace enscon
