#pragma once

#include <optional>
#include <string>
#include <vector>

#include "prseq/sequences.hpp"

namespace prseq {

/// One piece of a family pattern: a literal run, optionally repeatable any
/// number of times (including zero) — the overline blocks.
struct TemplateToken {
    std::string literal;
    bool repeat = false;
};

enum class SequenceKind { Pr, Epr };

/// A family of sequences: fixed literal runs interleaved with repeatable
/// blocks. Pr templates additionally carry a fixed r_0.
struct FamilyTemplate {
    std::string id;
    SequenceKind kind = SequenceKind::Pr;
    int r0 = 0;  // pr templates only
    std::vector<TemplateToken> tokens;

    int star_count() const;
    /// Length of an instance given repetition counts (one per starred token).
    int length_for(const std::vector<int>& counts) const;
    /// Term string of the instance (no r_0 marker).
    std::string expand(const std::vector<int>& counts) const;
};

/// Leftmost-greedy match with backtracking over repetition counts.
/// Returns one count per starred token, or nullopt. Deterministic: the
/// leftmost star takes as many repetitions as possible first.
std::optional<std::vector<int>> match_template(const FamilyTemplate& t, const std::string& body);

std::optional<std::vector<int>> match_template(const FamilyTemplate& t, const PrSequence& p);
std::optional<std::vector<int>> match_template(const FamilyTemplate& t, const EprSequence& e);

/// Every instance of the template with the given order, as (counts, body).
std::vector<std::pair<std::vector<int>, std::string>> instances_of_order(const FamilyTemplate& t,
                                                                         int n);

/// The 18 attainable pr families (ids "1".."18") and the 30 attainable epr
/// families (ids "1", "2a", ..., "18b").
const std::vector<FamilyTemplate>& pr_family_templates();
const std::vector<FamilyTemplate>& epr_family_templates();

const FamilyTemplate& pr_family(const std::string& id);
const FamilyTemplate& epr_family(const std::string& id);

}  // namespace prseq
