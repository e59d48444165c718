#include "enscon/ensconcement.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace enscon {

ensconcement::ensconcement(signature sig, std::vector<entry> entries)
    : sig_(std::move(sig)), entries_(std::move(entries)) {
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i].rank < 0)
            throw error("negative rank " + std::to_string(entries_[i].rank) + " for '" +
                        render(entries_[i].f) + "'");
        for (std::size_t j = 0; j < i; ++j)
            if (entries_[i].f == entries_[j].f)
                throw error("duplicate base formula '" + render(entries_[i].f) + "'");
    }
    base_.reserve(entries_.size());
    for (const entry& en : entries_) base_.push_back(en.f);
}

std::optional<int> ensconcement::rank_of(const formula& f) const {
    for (const entry& en : entries_)
        if (en.f == f) return en.rank;
    return std::nullopt;
}

validation_result validate(const ensconcement& e) {
    validation_result out;
    const signature& sig = e.sig();
    const std::uint32_t full = sig.full_mask();
    const auto& entries = e.entries();
    const std::size_t n = entries.size();

    std::vector<std::uint32_t> tt(n);
    std::vector<char> taut(n);
    for (std::size_t i = 0; i < n; ++i) {
        tt[i] = tt_bits(entries[i].f, sig);
        taut[i] = tt[i] == full;
    }

    for (std::size_t i = 0; i < n; ++i) {
        if (taut[i]) continue;
        std::uint32_t cohort = full;
        for (std::size_t j = 0; j < n; ++j)
            if (entries[j].rank > entries[i].rank) cohort &= tt[j];
        if ((cohort & ~tt[i] & full) == 0)
            out.violations.push_back(
                {1, entries[i].f, std::nullopt, "strictly-higher-ranked formulas entail it"});
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (taut[i]) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (!taut[j]) continue;
            if (entries[i].rank >= entries[j].rank)
                out.violations.push_back({2, entries[i].f, entries[j].f,
                                          "non-tautology not strictly below tautology"});
        }
    }
    std::optional<std::size_t> first_taut;
    for (std::size_t i = 0; i < n; ++i) {
        if (!taut[i]) continue;
        if (!first_taut) {
            first_taut = i;
            continue;
        }
        if (entries[i].rank != entries[*first_taut].rank)
            out.violations.push_back(
                {3, entries[*first_taut].f, entries[i].f, "tautologies at different ranks"});
    }
    return out;
}

std::string render_violation(const axiom_violation& v) {
    std::string out = "violation E" + std::to_string(v.axiom) + ": ";
    if (v.axiom == 1) {
        out += "β=" + render(v.witness_a);
    } else {
        out += "α=" + render(v.witness_a);
        if (v.witness_b) out += " β=" + render(*v.witness_b);
    }
    out += " — " + v.reason;
    return out;
}

cut_result cut_nonstrict(const ensconcement& e, const formula& f) {
    const signature& sig = e.sig();
    const std::uint32_t full = sig.full_mask();
    const auto& entries = e.entries();
    const std::size_t n = entries.size();

    std::vector<std::uint32_t> tt(n);
    std::uint32_t base_mask = full;
    for (std::size_t i = 0; i < n; ++i) {
        tt[i] = tt_bits(entries[i].f, sig);
        base_mask &= tt[i];
    }
    const std::uint32_t goal = tt_bits(f, sig);
    if ((base_mask & ~goal & full) != 0) return {{}, true};

    std::map<int, std::uint32_t> cohort; // conjunction over strictly higher ranks
    for (const auto& en : entries) cohort.emplace(en.rank, full);
    for (auto& [rank, mask] : cohort)
        for (std::size_t j = 0; j < n; ++j)
            if (entries[j].rank > rank) mask &= tt[j];

    cut_result out;
    for (std::size_t i = 0; i < n; ++i)
        if ((cohort[entries[i].rank] & ~goal & full) != 0) out.members.push_back(entries[i].f);
    return out;
}

std::vector<formula> cut_proper(const ensconcement& e, const formula& f) {
    const signature& sig = e.sig();
    const std::uint32_t full = sig.full_mask();
    const auto& entries = e.entries();
    const std::size_t n = entries.size();

    std::vector<std::uint32_t> tt(n);
    for (std::size_t i = 0; i < n; ++i) tt[i] = tt_bits(entries[i].f, sig);
    const std::uint32_t goal = tt_bits(f, sig);

    std::map<int, std::uint32_t> cohort; // conjunction over ranks >= the key
    for (const auto& en : entries) cohort.emplace(en.rank, full);
    for (auto& [rank, mask] : cohort)
        for (std::size_t j = 0; j < n; ++j)
            if (entries[j].rank >= rank) mask &= tt[j];

    std::vector<formula> out;
    for (std::size_t i = 0; i < n; ++i)
        if ((cohort[entries[i].rank] & ~goal & full) != 0) out.push_back(entries[i].f);
    return out;
}

namespace {

std::string_view trim(std::string_view s) {
    const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_whitespace(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

ensconcement parse_impl(std::string_view text, const load_options& opts) {
    struct raw_entry {
        int rank;
        std::string formula_text;
        std::size_t line_no;
    };
    std::vector<raw_entry> raw;
    std::optional<std::vector<std::string>> header_atoms;
    bool saw_content = false;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line =
            eol == std::string_view::npos ? text.substr(pos) : text.substr(pos, eol - pos);
        ++line_no;
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

        const std::size_t hash = line.find('#');
        if (hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        const auto tokens = split_whitespace(line);
        if (!saw_content && !tokens.empty() && tokens[0] == "atoms") {
            std::vector<std::string> names;
            for (std::size_t i = 1; i < tokens.size(); ++i) names.emplace_back(tokens[i]);
            header_atoms = std::move(names);
            saw_content = true;
            continue;
        }
        saw_content = true;

        const std::size_t colon = line.find(':');
        if (colon == std::string_view::npos)
            throw error("line " + std::to_string(line_no) + ": expected '<rank> : <formula>'");
        const std::string_view rank_text = trim(line.substr(0, colon));
        const std::string_view formula_text = trim(line.substr(colon + 1));
        int rank = 0;
        const auto [ptr, ec] =
            std::from_chars(rank_text.data(), rank_text.data() + rank_text.size(), rank);
        if (ec != std::errc{} || ptr != rank_text.data() + rank_text.size() || rank < 0)
            throw error("line " + std::to_string(line_no) + ": bad rank '" +
                        std::string(rank_text) + "'");
        if (formula_text.empty())
            throw error("line " + std::to_string(line_no) + ": missing formula");
        raw.push_back({rank, std::string(formula_text), line_no});
    }

    signature sig;
    std::vector<ensconcement::entry> entries;
    entries.reserve(raw.size());
    if (header_atoms) {
        sig = signature(*header_atoms);
        for (const raw_entry& r : raw) {
            try {
                entries.push_back({parse(r.formula_text, sig), r.rank});
            } catch (const error& ex) {
                throw error("line " + std::to_string(r.line_no) + ": " + ex.what());
            }
        }
    } else {
        std::vector<std::string> atoms;
        for (const raw_entry& r : raw) {
            try {
                entries.push_back({parse_collecting(r.formula_text, atoms), r.rank});
            } catch (const error& ex) {
                throw error("line " + std::to_string(r.line_no) + ": " + ex.what());
            }
        }
        sig = signature(std::move(atoms));
    }

    if (opts.lift_tautologies) {
        int non_taut_max = -1;
        for (const auto& en : entries)
            if (!is_tautology(en.f, sig)) non_taut_max = std::max(non_taut_max, en.rank);
        for (auto& en : entries)
            if (is_tautology(en.f, sig)) en.rank = non_taut_max + 1;
    }
    return ensconcement(std::move(sig), std::move(entries));
}

} // namespace

ensconcement parse_ensconcement_raw(std::string_view text, const load_options& opts) {
    return parse_impl(text, opts);
}

ensconcement parse_ensconcement(std::string_view text, const load_options& opts) {
    ensconcement e = parse_impl(text, opts);
    const validation_result result = validate(e);
    if (!result.ok()) {
        std::string msg = "invalid ensconcement: " + render_violation(result.violations.front());
        if (result.violations.size() > 1)
            msg += " (+" + std::to_string(result.violations.size() - 1) + " more)";
        throw error(msg);
    }
    return e;
}

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw error("cannot open file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

ensconcement load_ensconcement_file(const std::string& path, const load_options& opts) {
    return parse_ensconcement(read_file(path), opts);
}

ensconcement load_ensconcement_file_raw(const std::string& path, const load_options& opts) {
    return parse_ensconcement_raw(read_file(path), opts);
}

std::string to_text(const ensconcement& e) {
    std::string out = "atoms";
    for (const std::string& a : e.sig().atoms()) out += " " + a;
    out += "\n";
    for (const auto& en : e.entries())
        out += std::to_string(en.rank) + " : " + render(en.f) + "\n";
    return out;
}

} // namespace enscon
