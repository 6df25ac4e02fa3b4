#pragma once

#include <string>
#include <vector>

#include "prseq/sequences.hpp"

namespace prseq {

struct RuleViolation {
    std::string rule_id;
    int position = 0;  // 1-based; pattern start for local rules, first bad term for forcing rules
    std::string message;

    friend bool operator==(const RuleViolation& a, const RuleViolation& b) {
        return a.rule_id == b.rule_id && a.position == b.position;
    }
};

/// Necessary conditions on pr-sequences (00 and 0110 theorems). An empty
/// result means no rule fired; it does not by itself imply attainability.
std::vector<RuleViolation> check_pr(const PrSequence& p);

/// Necessary conditions on epr-sequences; one named rule per prohibition or
/// forcing theorem. Rules overlap where the underlying theorems do.
std::vector<RuleViolation> check_epr(const EprSequence& e);

/// Human-readable statement plus the standard theorem name behind a rule id.
/// Throws std::invalid_argument for an unknown id.
std::string explain_rule(const std::string& rule_id);

/// All known rule ids, pr rules first, in evaluation order.
std::vector<std::string> rule_ids();

}  // namespace prseq
