#pragma once

// Propositional language kernel: signatures, formula ASTs, parsing and
// rendering, truth-table semantics, entailment, and enumeration of one
// canonical representative per logical equivalence class.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace enscon {

class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Syntax error; `offset` is the 1-based byte position of the offending
/// token (one past the end of the input when it ends too early).
class parse_error : public error {
public:
    parse_error(std::size_t offset, const std::string& what);
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

class unknown_atom_error : public error {
public:
    explicit unknown_atom_error(std::string name);
    const std::string& name() const { return name_; }

private:
    std::string name_;
};

/// Raised when a signature would exceed the exhaustive-enumeration ceiling.
class ceiling_error : public error {
public:
    using error::error;
};

/// Ordered finite set of atom names. The atom order fixes the valuation
/// order everywhere else: atom 0 is the most significant digit when
/// valuations are counted 0, 1, 2, ...
///
/// Capped at `max_atoms` so the 2^(2^n) equivalence classes stay
/// enumerable.
class signature {
public:
    static constexpr int max_atoms = 4;

    signature() = default;
    explicit signature(std::vector<std::string> atoms);

    int size() const { return static_cast<int>(atoms_.size()); }
    const std::vector<std::string>& atoms() const { return atoms_; }
    const std::string& atom(int i) const { return atoms_.at(static_cast<std::size_t>(i)); }
    std::optional<int> index_of(std::string_view name) const;

    /// Number of valuations, 2^size().
    int valuation_count() const { return 1 << size(); }
    /// Mask with one bit per valuation, all set.
    std::uint32_t full_mask() const;
    /// Truth mask of atom i: bit (valuation_count()-1-v) is set iff the
    /// atom is true under valuation v.
    std::uint32_t atom_mask(int i) const { return atom_masks_.at(static_cast<std::size_t>(i)); }

    bool operator==(const signature& other) const { return atoms_ == other.atoms_; }

private:
    std::vector<std::string> atoms_;
    std::vector<std::uint32_t> atom_masks_;
};

/// Returns true for [A-Za-z_][A-Za-z0-9_]* that is not a reserved word.
bool is_valid_atom_name(std::string_view name);

/// Immutable propositional formula. Copies share structure; equality is
/// syntactic (use truth tables for logical equivalence).
class formula {
public:
    enum class kind : unsigned char {
        atom,
        verum,
        falsum,
        negation,
        conjunction,
        disjunction,
        implication,
        equivalence,
    };

    /// Default-constructed formula is the constant true.
    formula();

    static formula atom(std::string name);
    static formula verum();
    static formula falsum();
    static formula negation(formula f);
    static formula conjunction(formula lhs, formula rhs);
    static formula disjunction(formula lhs, formula rhs);
    static formula implication(formula lhs, formula rhs);
    static formula equivalence(formula lhs, formula rhs);

    kind type() const;
    const std::string& atom_name() const;
    /// Left operand; also the operand of a negation.
    formula left() const;
    formula right() const;

    bool is_binary() const;

    /// Structural (syntactic) equality.
    bool operator==(const formula& other) const;
    bool operator!=(const formula& other) const { return !(*this == other); }

    /// Stable identity of the root node, usable as a cache key for ASTs
    /// that are kept alive elsewhere.
    const void* node_id() const;

private:
    struct node;
    explicit formula(std::shared_ptr<const node> n) : node_(std::move(n)) {}
    std::shared_ptr<const node> node_;
};

/// Canonical surface syntax: minimal parentheses, single spaces around
/// binary connectives. parse(render(f)) is structurally equal to f.
std::string render(const formula& f);

/// Parses `text` against the grammar
///   iff := imp ('<->' imp)* ; imp := or ('->' imp)? ;
///   or := and ('|' and)* ; and := not ('&' not)* ;
///   not := '!' not | 'true' | 'false' | atom | '(' formula ')'
/// with every atom required to resolve in `sig`.
formula parse(std::string_view text, const signature& sig);

/// Like parse(), but accepts any identifier as an atom and appends names
/// not already present to `atoms` in order of first occurrence.
formula parse_collecting(std::string_view text, std::vector<std::string>& atoms);

/// One truth value per valuation of `sig`, packed so that valuation v sits
/// at bit (valuation_count-1-v). Reading the bits as a binary numeral gives
/// the canonical index of the formula's equivalence class.
class truth_table {
public:
    truth_table(const formula& f, const signature& sig);
    truth_table(std::uint32_t bits, const signature& sig);

    std::uint32_t bits() const { return bits_; }
    const signature& sig() const { return sig_; }
    bool value(int valuation) const;

    bool operator==(const truth_table& other) const;

private:
    std::uint32_t bits_;
    signature sig_;
};

/// Truth mask of `f` over `sig`; throws unknown_atom_error for atoms
/// outside the signature.
std::uint32_t tt_bits(const formula& f, const signature& sig);

bool entails(std::span<const formula> premises, const formula& goal, const signature& sig);
bool entails(const std::vector<formula>& premises, const formula& goal, const signature& sig);
bool is_tautology(const formula& f, const signature& sig);

/// Cn(X) = Cn(Y) for finite generating bases.
bool closed_set_equal(const std::vector<formula>& base_x, const std::vector<formula>& base_y,
                      const signature& sig);

/// base ∪ {f} with syntactic-duplicate suppression.
std::vector<formula> expand(std::vector<formula> base, const formula& f);

/// All 2^(2^n) canonical representatives, index b holding the class whose
/// truth mask equals b. Representatives are full disjunctive normal forms
/// over the minterms (falsum for the empty class, verum for the full one).
std::vector<formula> enumerate_universe(const signature& sig);

/// Enumerated universe plus lookup acceleration and short display forms.
struct universe {
    signature sig;
    std::vector<formula> classes;
    std::uint32_t full_mask = 0;

    std::uint32_t size() const { return static_cast<std::uint32_t>(classes.size()); }
    const formula& rep(std::uint32_t bits) const { return classes.at(bits); }

    /// Truth mask of `f`, using the by-identity shortcut for formulas that
    /// belong to this universe.
    std::uint32_t bits_of(const formula& f) const;

    /// Shortest known formula logically equivalent to class `bits`
    /// (falls back to the canonical representative).
    const formula& display(std::uint32_t bits) const;
    std::string display_text(std::uint32_t bits) const;
    std::string display_text(const formula& f) const { return display_text(bits_of(f)); }

    // internal acceleration tables
    std::unordered_map<const void*, std::uint32_t> node_index;
    std::vector<formula> short_forms;
    std::vector<char> has_short_form;
};

universe build_universe(const signature& sig);

} // namespace enscon
