#include "prseq/templates.hpp"

#include <stdexcept>

namespace prseq {

namespace {

// Tiny pattern notation for the tables below: "(XY)" marks a repeatable
// block, everything else is literal. Example: "1(01)*01(0)*" is written
// here as {"1", "(01)", "01", "(0)"} via parse of "1|01*|01|0*".
std::vector<TemplateToken> toks(std::initializer_list<std::pair<const char*, bool>> parts) {
    std::vector<TemplateToken> v;
    for (const auto& [lit, star] : parts) v.push_back(TemplateToken{lit, star});
    return v;
}

FamilyTemplate pr_t(const char* id, int r0,
                    std::initializer_list<std::pair<const char*, bool>> parts) {
    return FamilyTemplate{id, SequenceKind::Pr, r0, toks(parts)};
}

FamilyTemplate epr_t(const char* id, std::initializer_list<std::pair<const char*, bool>> parts) {
    return FamilyTemplate{id, SequenceKind::Epr, 0, toks(parts)};
}

bool match_rec(const FamilyTemplate& t, const std::string& s, std::size_t tok, std::size_t pos,
               std::vector<int>& counts) {
    if (tok == t.tokens.size()) return pos == s.size();
    const auto& token = t.tokens[tok];
    const std::size_t len = token.literal.size();
    if (!token.repeat) {
        if (pos + len > s.size() || s.compare(pos, len, token.literal) != 0) return false;
        return match_rec(t, s, tok + 1, pos + len, counts);
    }
    // Greedy: count how many copies fit, then back off.
    int max_reps = 0;
    while (pos + static_cast<std::size_t>(max_reps + 1) * len <= s.size() &&
           s.compare(pos + static_cast<std::size_t>(max_reps) * len, len, token.literal) == 0)
        ++max_reps;
    for (int reps = max_reps; reps >= 0; --reps) {
        counts.push_back(reps);
        if (match_rec(t, s, tok + 1, pos + static_cast<std::size_t>(reps) * len, counts))
            return true;
        counts.pop_back();
    }
    return false;
}

}  // namespace

int FamilyTemplate::star_count() const {
    int c = 0;
    for (const auto& t : tokens)
        if (t.repeat) ++c;
    return c;
}

int FamilyTemplate::length_for(const std::vector<int>& counts) const {
    if (static_cast<int>(counts.size()) != star_count())
        throw std::invalid_argument("length_for: one count per starred block expected");
    int len = 0;
    std::size_t ci = 0;
    for (const auto& t : tokens)
        len += static_cast<int>(t.literal.size()) * (t.repeat ? counts[ci++] : 1);
    return len;
}

std::string FamilyTemplate::expand(const std::vector<int>& counts) const {
    if (static_cast<int>(counts.size()) != star_count())
        throw std::invalid_argument("expand: one count per starred block expected");
    std::string s;
    std::size_t ci = 0;
    for (const auto& t : tokens) {
        const int reps = t.repeat ? counts[ci++] : 1;
        for (int r = 0; r < reps; ++r) s += t.literal;
    }
    return s;
}

std::optional<std::vector<int>> match_template(const FamilyTemplate& t, const std::string& body) {
    std::vector<int> counts;
    if (match_rec(t, body, 0, 0, counts)) return counts;
    return std::nullopt;
}

std::optional<std::vector<int>> match_template(const FamilyTemplate& t, const PrSequence& p) {
    if (t.kind != SequenceKind::Pr) throw std::invalid_argument("match_template: kind mismatch");
    if (p.r0() != t.r0) return std::nullopt;
    std::string body;
    for (int v : p.terms()) body.push_back(v ? '1' : '0');
    return match_template(t, body);
}

std::optional<std::vector<int>> match_template(const FamilyTemplate& t, const EprSequence& e) {
    if (t.kind != SequenceKind::Epr) throw std::invalid_argument("match_template: kind mismatch");
    return match_template(t, e.letters());
}

std::vector<std::pair<std::vector<int>, std::string>> instances_of_order(const FamilyTemplate& t,
                                                                         int n) {
    std::vector<std::pair<std::vector<int>, std::string>> out;
    const int stars = t.star_count();
    const int base = t.length_for(std::vector<int>(static_cast<std::size_t>(stars), 0));
    std::vector<int> periods;
    for (const auto& tok : t.tokens)
        if (tok.repeat) periods.push_back(static_cast<int>(tok.literal.size()));

    if (stars == 0) {
        if (base == n) out.push_back({{}, t.expand({})});
        return out;
    }
    if (stars == 1) {
        const int rem = n - base;
        if (rem >= 0 && rem % periods[0] == 0)
            out.push_back({{rem / periods[0]}, t.expand({rem / periods[0]})});
        return out;
    }
    if (stars == 2) {
        for (int c0 = 0; base + c0 * periods[0] <= n; ++c0) {
            const int rem = n - base - c0 * periods[0];
            if (rem % periods[1] == 0) {
                std::vector<int> counts{c0, rem / periods[1]};
                out.push_back({counts, t.expand(counts)});
            }
        }
        return out;
    }
    throw std::logic_error("instances_of_order: templates here have at most two starred blocks");
}

const std::vector<FamilyTemplate>& pr_family_templates() {
    static const std::vector<FamilyTemplate> kPr = {
        pr_t("1", 0, {{"100", false}, {"0", true}}),
        pr_t("2", 0, {{"1", false}, {"01", true}, {"01", false}, {"0", true}}),
        pr_t("3", 0, {{"1011", false}, {"0", true}}),
        pr_t("4", 0, {{"101011", false}, {"0", true}}),
        pr_t("5", 0, {{"110", false}, {"0", true}}),
        pr_t("6", 0, {{"1101", false}, {"0", true}}),
        pr_t("7", 0, {{"11011", false}, {"0", true}}),
        pr_t("8", 1, {{"000", false}, {"0", true}}),
        pr_t("9", 1, {{"010", false}, {"0", true}}),
        pr_t("10", 1, {{"01", false}, {"01", true}, {"01", false}, {"0", true}}),
        pr_t("11", 1, {{"01", false}, {"01", true}, {"1", false}, {"0", true}}),
        pr_t("12", 1, {{"100", false}, {"0", true}}),
        pr_t("13", 1, {{"1", false}, {"01", true}, {"010", false}, {"0", true}}),
        pr_t("14", 1, {{"10110", false}, {"0", true}}),
        pr_t("15", 1, {{"1010110", false}, {"0", true}}),
        pr_t("16", 1, {{"110", false}, {"0", true}}),
        pr_t("17", 1, {{"11", false}, {"01", true}, {"01", false}, {"0", true}}),
        pr_t("18", 1, {{"11011", false}, {"0", true}}),
    };
    return kPr;
}

const std::vector<FamilyTemplate>& epr_family_templates() {
    static const std::vector<FamilyTemplate> kEpr = {
        epr_t("1", {{"ANN", false}, {"N", true}}),
        epr_t("2a", {{"A", false}, {"NS", true}, {"NA", false}}),
        epr_t("2b", {{"A", false}, {"NS", true}, {"NSN", false}, {"N", true}}),
        epr_t("3a", {{"ANAA", false}}),
        epr_t("3b", {{"ANSSN", false}, {"N", true}}),
        epr_t("4a", {{"ANSNAA", false}}),
        epr_t("4b", {{"ANSNSSN", false}, {"N", true}}),
        epr_t("5a", {{"AAN", false}, {"N", true}}),
        epr_t("5b", {{"ASN", false}, {"N", true}}),
        epr_t("6a", {{"AANA", false}}),
        epr_t("6b", {{"ASNSN", false}, {"N", true}}),
        epr_t("7a", {{"AANAA", false}}),
        epr_t("7b", {{"ASNSSN", false}, {"N", true}}),
        epr_t("8", {{"NNN", false}, {"N", true}}),
        epr_t("9", {{"NSN", false}, {"N", true}}),
        epr_t("10a", {{"NS", false}, {"NS", true}, {"NA", false}}),
        epr_t("10b", {{"NS", false}, {"NS", true}, {"NSN", false}, {"N", true}}),
        epr_t("11a", {{"N", false}, {"SN", true}, {"AA", false}}),
        epr_t("11b", {{"N", false}, {"SN", true}, {"SSN", false}, {"N", true}}),
        epr_t("11c", {{"NAAN", false}, {"N", true}}),
        epr_t("12", {{"SNN", false}, {"N", true}}),
        epr_t("13", {{"S", false}, {"NS", true}, {"NSN", false}, {"N", true}}),
        epr_t("14", {{"SNSSN", false}, {"N", true}}),
        epr_t("15", {{"SNSNSSN", false}, {"N", true}}),
        epr_t("16a", {{"SAN", false}, {"N", true}}),
        epr_t("16b", {{"SSN", false}, {"N", true}}),
        epr_t("17a", {{"SS", false}, {"NS", true}, {"NA", false}}),
        epr_t("17b", {{"SS", false}, {"NS", true}, {"NSN", false}, {"N", true}}),
        epr_t("18a", {{"SSNAA", false}}),
        epr_t("18b", {{"SSNSSN", false}, {"N", true}}),
    };
    return kEpr;
}

const FamilyTemplate& pr_family(const std::string& id) {
    for (const auto& t : pr_family_templates())
        if (t.id == id) return t;
    throw std::invalid_argument("unknown pr family '" + id + "'");
}

const FamilyTemplate& epr_family(const std::string& id) {
    for (const auto& t : epr_family_templates())
        if (t.id == id) return t;
    throw std::invalid_argument("unknown epr family '" + id + "'");
}

}  // namespace prseq
