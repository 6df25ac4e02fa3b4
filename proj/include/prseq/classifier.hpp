#pragma once

#include <string>
#include <vector>

#include "prseq/rules.hpp"
#include "prseq/templates.hpp"

namespace prseq {

struct FamilyMatch {
    std::string family_id;
    std::vector<int> repetition_counts;  // one per starred block
};

struct ClassificationResult {
    bool attainable = false;
    std::vector<FamilyMatch> matches;        // nonempty iff attainable
    std::vector<RuleViolation> violations;   // rule hits when unattainable (may be empty)
};

/// Decides attainability of a pr-sequence within the classified universe:
/// order >= 3 and no three consecutive 1s among r_1..r_n (sequences starting
/// 1]11 are in scope). Throws std::domain_error outside the universe.
ClassificationResult classify_pr(const PrSequence& p);

/// Decides attainability of an epr-sequence with an N in every length-3
/// window, order >= 3. The attainable families are pairwise disjoint, so a
/// multiple match reports an internal error. Throws std::domain_error
/// outside the universe.
ClassificationResult classify_epr(const EprSequence& e);

bool pr_in_universe(const PrSequence& p);
bool epr_in_universe(const EprSequence& e);

/// All epr families with an instance of order(p) whose associated
/// pr-sequence equals p. Requires p attainable and in-universe.
std::vector<FamilyMatch> associated_epr_families(const PrSequence& p);

struct UniquenessRow {
    std::string pr;                          // formatted instance
    std::vector<std::string> epr_families;   // associated family ids
};

struct UniquenessReport {
    int n_max = 0;
    std::vector<UniquenessRow> rows;
    /// Instances with more than one associated family (expected: exactly the
    /// instances of 0]110(0)* and 1]0110(0)*).
    std::vector<std::string> multi;
};

/// Association counts for every attainable pr instance of order 3..n_max
/// whose full string r_0 r_1..r_n has no three consecutive 1s (families
/// 1-15; the 1]11-initial families lie outside the uniqueness statement).
UniquenessReport uniqueness_report(int n_max);

}  // namespace prseq
