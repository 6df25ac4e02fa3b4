#include "prseq/classifier.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace prseq {

bool pr_in_universe(const PrSequence& p) {
    if (p.order() < 3) return false;
    for (int k = 1; k + 2 <= p.order(); ++k)
        if (p.term(k) == 1 && p.term(k + 1) == 1 && p.term(k + 2) == 1) return false;
    return true;
}

bool epr_in_universe(const EprSequence& e) {
    if (e.order() < 3) return false;
    for (int k = 1; k + 2 <= e.order(); ++k)
        if (e.letter(k) != 'N' && e.letter(k + 1) != 'N' && e.letter(k + 2) != 'N') return false;
    return true;
}

ClassificationResult classify_pr(const PrSequence& p) {
    if (!pr_in_universe(p))
        throw std::domain_error(
            "classify_pr: sequence outside the classified universe (order >= 3, no 111 among "
            "r_1..r_n)");
    ClassificationResult res;
    for (const auto& t : pr_family_templates())
        if (auto counts = match_template(t, p))
            res.matches.push_back(FamilyMatch{t.id, *counts});
    res.attainable = !res.matches.empty();
    if (!res.attainable) res.violations = check_pr(p);
    return res;
}

ClassificationResult classify_epr(const EprSequence& e) {
    if (!epr_in_universe(e))
        throw std::domain_error(
            "classify_epr: sequence outside the classified universe (order >= 3, an N in every "
            "length-3 window)");
    ClassificationResult res;
    for (const auto& t : epr_family_templates())
        if (auto counts = match_template(t, e))
            res.matches.push_back(FamilyMatch{t.id, *counts});
    if (res.matches.size() > 1)
        throw std::logic_error("classify_epr: family templates must be disjoint");
    res.attainable = !res.matches.empty();
    if (!res.attainable) res.violations = check_epr(e);
    return res;
}

std::vector<FamilyMatch> associated_epr_families(const PrSequence& p) {
    const auto cls = classify_pr(p);  // validates universe
    if (!cls.attainable)
        throw std::domain_error("associated_epr_families: pr-sequence is unattainable");
    std::vector<FamilyMatch> out;
    const std::string want = format_pr(p);
    for (const auto& t : epr_family_templates()) {
        for (const auto& [counts, body] : instances_of_order(t, p.order())) {
            if (format_pr(pr_from_epr(EprSequence(body))) == want) {
                out.push_back(FamilyMatch{t.id, counts});
                break;  // one entry per family
            }
        }
    }
    return out;
}

UniquenessReport uniqueness_report(int n_max) {
    if (n_max < 3) throw std::invalid_argument("uniqueness_report: n_max must be >= 3");
    UniquenessReport rep;
    rep.n_max = n_max;
    for (int n = 3; n <= n_max; ++n) {
        std::set<std::string> seen;
        for (const auto& t : pr_family_templates()) {
            // Families 16-18 start 1]11: excluded, the uniqueness statement
            // assumes no three consecutive 1s including r_0.
            if (t.id == "16" || t.id == "17" || t.id == "18") continue;
            for (const auto& [counts, body] : instances_of_order(t, n)) {
                const std::string formatted = (t.r0 ? "1]" : "0]") + body;
                if (!seen.insert(formatted).second) continue;
                UniquenessRow row;
                row.pr = formatted;
                for (const auto& fam : associated_epr_families(parse_pr(formatted)))
                    row.epr_families.push_back(fam.family_id);
                if (row.epr_families.size() > 1) rep.multi.push_back(formatted);
                rep.rows.push_back(std::move(row));
            }
        }
    }
    std::sort(rep.multi.begin(), rep.multi.end());
    return rep;
}

}  // namespace prseq
