#include "enscon/logic.hpp"

#include <algorithm>
#include <cassert>
#include <functional>

namespace enscon {

parse_error::parse_error(std::size_t offset, const std::string& what)
    : error("syntax error at offset " + std::to_string(offset) + ": " + what), offset_(offset) {}

unknown_atom_error::unknown_atom_error(std::string name)
    : error("unknown atom '" + name + "'"), name_(std::move(name)) {}

bool is_valid_atom_name(std::string_view name) {
    if (name.empty()) return false;
    auto head = [](char c) { return c == '_' || (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z'); };
    auto tail = [&](char c) { return head(c) || (c >= '0' && c <= '9'); };
    if (!head(name.front())) return false;
    for (char c : name.substr(1))
        if (!tail(c)) return false;
    return name != "true" && name != "false";
}

signature::signature(std::vector<std::string> atoms) : atoms_(std::move(atoms)) {
    if (static_cast<int>(atoms_.size()) > max_atoms)
        throw ceiling_error("signature ceiling exceeded: " + std::to_string(atoms_.size()) +
                            " atoms (max " + std::to_string(max_atoms) + ")");
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
        if (!is_valid_atom_name(atoms_[i])) throw error("invalid atom name '" + atoms_[i] + "'");
        for (std::size_t j = 0; j < i; ++j)
            if (atoms_[i] == atoms_[j]) throw error("duplicate atom name '" + atoms_[i] + "'");
    }
    const int n = size();
    const int valuations = 1 << n;
    atom_masks_.assign(atoms_.size(), 0);
    // Valuation v assigns atom i the bit (n-1-i) of v, so atom 0 is the most
    // significant digit; the mask stores valuation v at bit (valuations-1-v).
    for (int i = 0; i < n; ++i)
        for (int v = 0; v < valuations; ++v)
            if ((v >> (n - 1 - i)) & 1)
                atom_masks_[static_cast<std::size_t>(i)] |=
                    1u << (valuations - 1 - v);
}

std::optional<int> signature::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < atoms_.size(); ++i)
        if (atoms_[i] == name) return static_cast<int>(i);
    return std::nullopt;
}

std::uint32_t signature::full_mask() const {
    const int valuations = valuation_count();
    if (valuations >= 32) return 0xFFFFFFFFu;
    return (1u << valuations) - 1u;
}

struct formula::node {
    kind k;
    std::string name;                  // atom only
    std::shared_ptr<const node> lhs;   // negation operand or left operand
    std::shared_ptr<const node> rhs;
};

formula::formula() { *this = verum(); }

formula formula::atom(std::string name) {
    return formula(std::make_shared<const node>(node{kind::atom, std::move(name), {}, {}}));
}
formula formula::verum() {
    static const formula f(std::make_shared<const node>(node{kind::verum, {}, {}, {}}));
    return f;
}
formula formula::falsum() {
    static const formula f(std::make_shared<const node>(node{kind::falsum, {}, {}, {}}));
    return f;
}
formula formula::negation(formula f) {
    return formula(std::make_shared<const node>(node{kind::negation, {}, std::move(f.node_), {}}));
}
formula formula::conjunction(formula lhs, formula rhs) {
    return formula(std::make_shared<const node>(
        node{kind::conjunction, {}, std::move(lhs.node_), std::move(rhs.node_)}));
}
formula formula::disjunction(formula lhs, formula rhs) {
    return formula(std::make_shared<const node>(
        node{kind::disjunction, {}, std::move(lhs.node_), std::move(rhs.node_)}));
}
formula formula::implication(formula lhs, formula rhs) {
    return formula(std::make_shared<const node>(
        node{kind::implication, {}, std::move(lhs.node_), std::move(rhs.node_)}));
}
formula formula::equivalence(formula lhs, formula rhs) {
    return formula(std::make_shared<const node>(
        node{kind::equivalence, {}, std::move(lhs.node_), std::move(rhs.node_)}));
}

formula::kind formula::type() const { return node_->k; }

const std::string& formula::atom_name() const {
    assert(node_->k == kind::atom);
    return node_->name;
}

formula formula::left() const {
    assert(node_->lhs);
    return formula(node_->lhs);
}

formula formula::right() const {
    assert(node_->rhs);
    return formula(node_->rhs);
}

bool formula::is_binary() const {
    switch (node_->k) {
    case kind::conjunction:
    case kind::disjunction:
    case kind::implication:
    case kind::equivalence:
        return true;
    default:
        return false;
    }
}

bool formula::operator==(const formula& other) const {
    const node* a = node_.get();
    const node* b = other.node_.get();
    if (a == b) return true;
    if (a->k != b->k) return false;
    switch (a->k) {
    case kind::atom:
        return a->name == b->name;
    case kind::verum:
    case kind::falsum:
        return true;
    case kind::negation:
        return left() == other.left();
    default:
        return left() == other.left() && right() == other.right();
    }
}

const void* formula::node_id() const { return node_.get(); }

namespace {

// Precedence levels; higher binds tighter.
int precedence(formula::kind k) {
    switch (k) {
    case formula::kind::equivalence: return 1;
    case formula::kind::implication: return 2;
    case formula::kind::disjunction: return 3;
    case formula::kind::conjunction: return 4;
    case formula::kind::negation: return 5;
    default: return 6;
    }
}

bool right_associative(formula::kind k) { return k == formula::kind::implication; }

// '<->' and '|' and '&' associate left in the grammar; '->' associates right.
// A child at the non-associating side with equal precedence keeps its parens.
bool child_needs_parens(formula::kind child, formula::kind parent, bool right_side) {
    const int pc = precedence(child);
    const int pp = precedence(parent);
    if (pc > pp) return false;
    if (pc < pp) return true;
    return right_associative(parent) ? !right_side : right_side;
}

const char* connective_text(formula::kind k) {
    switch (k) {
    case formula::kind::conjunction: return " & ";
    case formula::kind::disjunction: return " | ";
    case formula::kind::implication: return " -> ";
    case formula::kind::equivalence: return " <-> ";
    default: return "";
    }
}

void render_into(const formula& f, std::string& out) {
    switch (f.type()) {
    case formula::kind::atom:
        out += f.atom_name();
        return;
    case formula::kind::verum:
        out += "true";
        return;
    case formula::kind::falsum:
        out += "false";
        return;
    case formula::kind::negation: {
        out += '!';
        const bool parens = f.left().is_binary();
        if (parens) out += '(';
        render_into(f.left(), out);
        if (parens) out += ')';
        return;
    }
    default: {
        const auto emit = [&](const formula& child, bool right_side) {
            const bool parens = child_needs_parens(child.type(), f.type(), right_side);
            if (parens) out += '(';
            render_into(child, out);
            if (parens) out += ')';
        };
        emit(f.left(), false);
        out += connective_text(f.type());
        emit(f.right(), true);
        return;
    }
    }
}

} // namespace

std::string render(const formula& f) {
    std::string out;
    render_into(f, out);
    return out;
}

namespace {

struct token {
    enum class kind : unsigned char {
        ident, kw_true, kw_false, bang, amp, pipe, arrow, darrow, lparen, rparen, end
    };
    kind k;
    std::string_view text;
    std::size_t offset; // 1-based byte position
};

std::vector<token> tokenize(std::string_view text) {
    std::vector<token> out;
    std::size_t i = 0;
    const std::size_t n = text.size();
    auto is_head = [](char c) { return c == '_' || (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z'); };
    auto is_tail = [&](char c) { return is_head(c) || (c >= '0' && c <= '9'); };
    while (i < n) {
        const char c = text[i];
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            ++i;
            continue;
        }
        const std::size_t off = i + 1;
        switch (c) {
        case '!': out.push_back({token::kind::bang, text.substr(i, 1), off}); ++i; continue;
        case '&': out.push_back({token::kind::amp, text.substr(i, 1), off}); ++i; continue;
        case '|': out.push_back({token::kind::pipe, text.substr(i, 1), off}); ++i; continue;
        case '(': out.push_back({token::kind::lparen, text.substr(i, 1), off}); ++i; continue;
        case ')': out.push_back({token::kind::rparen, text.substr(i, 1), off}); ++i; continue;
        case '-':
            if (i + 1 < n && text[i + 1] == '>') {
                out.push_back({token::kind::arrow, text.substr(i, 2), off});
                i += 2;
                continue;
            }
            throw parse_error(off, "expected '->'");
        case '<':
            if (i + 2 < n && text[i + 1] == '-' && text[i + 2] == '>') {
                out.push_back({token::kind::darrow, text.substr(i, 3), off});
                i += 3;
                continue;
            }
            throw parse_error(off, "expected '<->'");
        default:
            break;
        }
        if (is_head(c)) {
            std::size_t j = i + 1;
            while (j < n && is_tail(text[j])) ++j;
            const std::string_view word = text.substr(i, j - i);
            token::kind k = token::kind::ident;
            if (word == "true") k = token::kind::kw_true;
            else if (word == "false") k = token::kind::kw_false;
            out.push_back({k, word, off});
            i = j;
            continue;
        }
        throw parse_error(off, std::string("unexpected character '") + c + "'");
    }
    out.push_back({token::kind::end, {}, n + 1});
    return out;
}

// Resolver validates atom names; throws for atoms the caller cannot accept.
class parser {
public:
    parser(std::vector<token> tokens, const std::function<void(std::string_view)>& resolve)
        : tokens_(std::move(tokens)), resolve_(resolve) {}

    formula run() {
        formula f = parse_iff();
        if (peek().k != token::kind::end)
            throw parse_error(peek().offset, "expected end of input");
        return f;
    }

private:
    const token& peek() const { return tokens_[pos_]; }
    const token& advance() { return tokens_[pos_++]; }
    bool accept(token::kind k) {
        if (peek().k != k) return false;
        ++pos_;
        return true;
    }

    formula parse_iff() {
        formula f = parse_imp();
        while (accept(token::kind::darrow)) f = formula::equivalence(std::move(f), parse_imp());
        return f;
    }

    formula parse_imp() {
        formula f = parse_or();
        if (accept(token::kind::arrow)) f = formula::implication(std::move(f), parse_imp());
        return f;
    }

    formula parse_or() {
        formula f = parse_and();
        while (accept(token::kind::pipe)) f = formula::disjunction(std::move(f), parse_and());
        return f;
    }

    formula parse_and() {
        formula f = parse_not();
        while (accept(token::kind::amp)) f = formula::conjunction(std::move(f), parse_not());
        return f;
    }

    formula parse_not() {
        const token& t = peek();
        switch (t.k) {
        case token::kind::bang:
            advance();
            return formula::negation(parse_not());
        case token::kind::kw_true:
            advance();
            return formula::verum();
        case token::kind::kw_false:
            advance();
            return formula::falsum();
        case token::kind::ident: {
            advance();
            resolve_(t.text);
            return formula::atom(std::string(t.text));
        }
        case token::kind::lparen: {
            advance();
            formula f = parse_iff();
            if (!accept(token::kind::rparen))
                throw parse_error(peek().offset, "expected ')'");
            return f;
        }
        default:
            throw parse_error(t.offset, "expected formula");
        }
    }

    std::vector<token> tokens_;
    std::size_t pos_ = 0;
    const std::function<void(std::string_view)>& resolve_;
};

} // namespace

formula parse(std::string_view text, const signature& sig) {
    const std::function<void(std::string_view)> resolve = [&](std::string_view name) {
        if (!sig.index_of(name)) throw unknown_atom_error(std::string(name));
    };
    return parser(tokenize(text), resolve).run();
}

formula parse_collecting(std::string_view text, std::vector<std::string>& atoms) {
    const std::function<void(std::string_view)> resolve = [&](std::string_view name) {
        for (const auto& a : atoms)
            if (a == name) return;
        atoms.emplace_back(name);
    };
    return parser(tokenize(text), resolve).run();
}

std::uint32_t tt_bits(const formula& f, const signature& sig) {
    const std::uint32_t full = sig.full_mask();
    switch (f.type()) {
    case formula::kind::atom: {
        const auto idx = sig.index_of(f.atom_name());
        if (!idx) throw unknown_atom_error(f.atom_name());
        return sig.atom_mask(*idx);
    }
    case formula::kind::verum:
        return full;
    case formula::kind::falsum:
        return 0;
    case formula::kind::negation:
        return ~tt_bits(f.left(), sig) & full;
    case formula::kind::conjunction:
        return tt_bits(f.left(), sig) & tt_bits(f.right(), sig);
    case formula::kind::disjunction:
        return tt_bits(f.left(), sig) | tt_bits(f.right(), sig);
    case formula::kind::implication:
        return (~tt_bits(f.left(), sig) | tt_bits(f.right(), sig)) & full;
    case formula::kind::equivalence:
        return ~(tt_bits(f.left(), sig) ^ tt_bits(f.right(), sig)) & full;
    }
    return 0;
}

truth_table::truth_table(const formula& f, const signature& sig)
    : bits_(tt_bits(f, sig)), sig_(sig) {}

truth_table::truth_table(std::uint32_t bits, const signature& sig) : bits_(bits), sig_(sig) {
    if (bits & ~sig.full_mask()) throw error("truth table bits exceed signature");
}

bool truth_table::value(int valuation) const {
    const int pos = sig_.valuation_count() - 1 - valuation;
    return (bits_ >> pos) & 1;
}

bool truth_table::operator==(const truth_table& other) const {
    return bits_ == other.bits_ && sig_ == other.sig_;
}

bool entails(std::span<const formula> premises, const formula& goal, const signature& sig) {
    std::uint32_t mask = sig.full_mask();
    for (const formula& p : premises) mask &= tt_bits(p, sig);
    return (mask & ~tt_bits(goal, sig) & sig.full_mask()) == 0;
}

bool entails(const std::vector<formula>& premises, const formula& goal, const signature& sig) {
    return entails(std::span<const formula>(premises), goal, sig);
}

bool is_tautology(const formula& f, const signature& sig) {
    return tt_bits(f, sig) == sig.full_mask();
}

bool closed_set_equal(const std::vector<formula>& base_x, const std::vector<formula>& base_y,
                      const signature& sig) {
    std::uint32_t mx = sig.full_mask();
    for (const formula& f : base_x) mx &= tt_bits(f, sig);
    std::uint32_t my = sig.full_mask();
    for (const formula& f : base_y) my &= tt_bits(f, sig);
    return mx == my;
}

std::vector<formula> expand(std::vector<formula> base, const formula& f) {
    for (const formula& g : base)
        if (g == f) return base;
    base.push_back(f);
    return base;
}

std::vector<formula> enumerate_universe(const signature& sig) {
    const int n = sig.size();
    const int valuations = sig.valuation_count();
    const std::uint32_t full = sig.full_mask();
    const std::uint64_t count = std::uint64_t{1} << valuations;

    std::vector<formula> positive, negative;
    positive.reserve(static_cast<std::size_t>(n));
    negative.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        positive.push_back(formula::atom(sig.atom(i)));
        negative.push_back(formula::negation(positive.back()));
    }

    const auto minterm = [&](int v) {
        formula f = ((v >> (n - 1)) & 1) ? positive[0] : negative[0];
        for (int i = 1; i < n; ++i) {
            const formula& lit = ((v >> (n - 1 - i)) & 1) ? positive[static_cast<std::size_t>(i)]
                                                          : negative[static_cast<std::size_t>(i)];
            f = formula::conjunction(std::move(f), lit);
        }
        return f;
    };
    // Shared across classes; only the disjunction spines are fresh.
    std::vector<formula> minterms;
    minterms.reserve(static_cast<std::size_t>(valuations));
    for (int v = 0; v < valuations && n > 0; ++v) minterms.push_back(minterm(v));

    std::vector<formula> out;
    out.reserve(static_cast<std::size_t>(count));
    for (std::uint64_t b = 0; b < count; ++b) {
        if (b == 0) {
            out.push_back(formula::falsum());
            continue;
        }
        if (b == full) {
            out.push_back(formula::verum());
            continue;
        }
        formula f;
        bool first = true;
        for (int v = 0; v < valuations; ++v) {
            if (!((b >> (valuations - 1 - v)) & 1)) continue;
            formula m = minterms[static_cast<std::size_t>(v)];
            if (first) {
                f = std::move(m);
                first = false;
            } else {
                f = formula::disjunction(std::move(f), std::move(m));
            }
        }
        out.push_back(std::move(f));
    }
    return out;
}

std::uint32_t universe::bits_of(const formula& f) const {
    const auto it = node_index.find(f.node_id());
    if (it != node_index.end()) return it->second;
    return tt_bits(f, sig);
}

const formula& universe::display(std::uint32_t bits) const {
    if (bits < has_short_form.size() && has_short_form[bits]) return short_forms[bits];
    return classes.at(bits);
}

std::string universe::display_text(std::uint32_t bits) const { return render(display(bits)); }

namespace {

struct short_entry {
    formula f;
    int len = 0;
    int prec = 0;
    bool set = false;
};

int op_extra_len(formula::kind k) {
    switch (k) {
    case formula::kind::conjunction: return 3;  // " & "
    case formula::kind::disjunction: return 3;  // " | "
    case formula::kind::implication: return 4;  // " -> "
    case formula::kind::equivalence: return 5;  // " <-> "
    default: return 0;
    }
}

int operand_len(const short_entry& e, formula::kind parent, bool right_side) {
    // child_needs_parens only inspects kinds through precedence; reuse it by
    // comparing stored precedence values directly.
    const int pp = precedence(parent);
    bool parens;
    if (e.prec > pp) parens = false;
    else if (e.prec < pp) parens = true;
    else parens = right_associative(parent) ? !right_side : right_side;
    return e.len + (parens ? 2 : 0);
}

void seed_short_form(std::vector<short_entry>& best, std::uint32_t bits, formula f) {
    const int len = static_cast<int>(render(f).size());
    const int prec = precedence(f.type());
    auto& slot = best[bits];
    if (!slot.set || len < slot.len) slot = {std::move(f), len, prec, true};
}

void close_short_forms(std::vector<short_entry>& best, std::uint32_t full, int max_rounds) {
    const formula::kind binary_ops[] = {formula::kind::conjunction, formula::kind::disjunction,
                                        formula::kind::implication, formula::kind::equivalence};
    for (int round = 0; round < max_rounds; ++round) {
        bool changed = false;
        std::vector<std::uint32_t> known;
        for (std::uint32_t b = 0; b < best.size(); ++b)
            if (best[b].set) known.push_back(b);
        for (const std::uint32_t a : known) {
            const std::uint32_t nb = ~a & full;
            const short_entry src = best[a];
            const int len = 1 + src.len + (src.prec < precedence(formula::kind::negation) ? 2 : 0);
            auto& slot = best[nb];
            if (!slot.set || len < slot.len) {
                slot = {formula::negation(src.f), len, precedence(formula::kind::negation), true};
                changed = true;
            }
        }
        for (const std::uint32_t a : known) {
            for (const std::uint32_t b : known) {
                for (const formula::kind op : binary_ops) {
                    std::uint32_t bits;
                    switch (op) {
                    case formula::kind::conjunction: bits = a & b; break;
                    case formula::kind::disjunction: bits = a | b; break;
                    case formula::kind::implication: bits = (~a | b) & full; break;
                    default: bits = ~(a ^ b) & full; break;
                    }
                    const short_entry& ea = best[a];
                    const short_entry& eb = best[b];
                    const int len =
                        operand_len(ea, op, false) + op_extra_len(op) + operand_len(eb, op, true);
                    auto& slot = best[bits];
                    if (!slot.set || len < slot.len) {
                        formula f;
                        switch (op) {
                        case formula::kind::conjunction: f = formula::conjunction(ea.f, eb.f); break;
                        case formula::kind::disjunction: f = formula::disjunction(ea.f, eb.f); break;
                        case formula::kind::implication: f = formula::implication(ea.f, eb.f); break;
                        default: f = formula::equivalence(ea.f, eb.f); break;
                        }
                        slot = {std::move(f), len, precedence(op), true};
                        changed = true;
                    }
                }
            }
        }
        if (!changed) break;
    }
}

} // namespace

universe build_universe(const signature& sig) {
    universe u;
    u.sig = sig;
    u.classes = enumerate_universe(sig);
    u.full_mask = sig.full_mask();
    u.node_index.reserve(u.classes.size() * 2);
    for (std::uint32_t b = 0; b < u.classes.size(); ++b)
        u.node_index.emplace(u.classes[b].node_id(), b);

    std::vector<short_entry> best(u.classes.size());
    seed_short_form(best, 0, formula::falsum());
    seed_short_form(best, u.full_mask, formula::verum());
    for (int i = 0; i < sig.size(); ++i) {
        const formula a = formula::atom(sig.atom(i));
        seed_short_form(best, sig.atom_mask(i), a);
        seed_short_form(best, ~sig.atom_mask(i) & u.full_mask, formula::negation(a));
    }
    // Full closure is quadratic in the class count; past 3 atoms only a single
    // combination round over the literal seeds runs, everything else keeps the
    // canonical DNF representative.
    const int rounds = u.classes.size() <= 4096 ? 8 : 1;
    close_short_forms(best, u.full_mask, rounds);

    u.short_forms.resize(u.classes.size());
    u.has_short_form.assign(u.classes.size(), 0);
    for (std::uint32_t b = 0; b < best.size(); ++b) {
        if (!best[b].set) continue;
        if (render(best[b].f).size() < render(u.classes[b]).size()) {
            u.short_forms[b] = best[b].f;
            u.has_short_form[b] = 1;
            u.node_index.emplace(u.short_forms[b].node_id(), b);
        }
    }
    return u;
}

} // namespace enscon
