#include "prseq/rules.hpp"

#include <map>
#include <stdexcept>

namespace prseq {

namespace {

void add(std::vector<RuleViolation>& out, const std::string& id, int pos, std::string msg) {
    out.push_back(RuleViolation{id, pos, std::move(msg)});
}

bool is_at(const EprSequence& e, int k, const char* pat) {
    for (int i = 0; pat[i] != '\0'; ++i) {
        const int pos = k + i;
        if (pos > e.order() || e.letter(pos) != pat[i]) return false;
    }
    return true;
}

bool all_n_from(const EprSequence& e, int from) {
    for (int i = from; i <= e.order(); ++i)
        if (e.letter(i) != 'N') return false;
    return true;
}

// Exact-shape matchers for the two blacklisted SS-initial sequences:
// SSNSNS(NS)*SN(N)* and SSNS(NS)*NAA.
bool matches_ssns_sn_tail(const EprSequence& e) {
    const int n = e.order();
    if (!is_at(e, 1, "SSNSNS")) return false;
    for (int j = 0; 6 + 2 * j + 2 <= n; ++j) {
        bool ok = true;
        for (int r = 0; r < j && ok; ++r)
            ok = is_at(e, 7 + 2 * r, "NS");
        if (!ok) continue;
        if (is_at(e, 7 + 2 * j, "SN") && all_n_from(e, 9 + 2 * j)) return true;
    }
    return false;
}

bool matches_ssns_naa_tail(const EprSequence& e) {
    const int n = e.order();
    if (!is_at(e, 1, "SSNS")) return false;
    for (int j = 0; 4 + 2 * j + 3 <= n; ++j) {
        bool ok = true;
        for (int r = 0; r < j && ok; ++r)
            ok = is_at(e, 5 + 2 * r, "NS");
        if (!ok) continue;
        if (4 + 2 * j + 3 == n && is_at(e, 5 + 2 * j, "NAA")) return true;
    }
    return false;
}

// The rigid shape forced by a non-terminal ANA: all A with a single N at
// position p, 2 <= p <= n-2.
bool matches_rigid_ana(const EprSequence& e) {
    const int n = e.order();
    int n_pos = 0, n_count = 0;
    for (int i = 1; i <= n; ++i) {
        if (e.letter(i) == 'S') return false;
        if (e.letter(i) == 'N') {
            ++n_count;
            n_pos = i;
        }
    }
    return n_count == 1 && n_pos >= 2 && n_pos <= n - 2;
}

struct RuleDoc {
    const char* id;
    const char* text;
};

const RuleDoc kRuleDocs[] = {
    {"PR-00",
     "If r_{k+1} = r_{k+2} = 0 for some k >= 0, then r_i = 0 for all i >= k+1 "
     "(00 Theorem: a pr-sequence of a real symmetric matrix cannot contain 001)."},
    {"PR-0110",
     "If r_k = r_{k+3} = 0 for some k >= 1, then r_i = 0 for all i >= k+3 "
     "(0110 Theorem for real symmetric matrices)."},
    {"EPR-NN",
     "Once NN occurs, the epr-sequence is N from that point onward "
     "(NN Theorem, valid over every field)."},
    {"EPR-NSA", "NSA never occurs in the epr-sequence of a symmetric matrix (corollary of the "
                "Inheritance Theorem)."},
    {"EPR-ASN-A",
     "ASN admits no later A: ...ASN...A... is forbidden (corollary of the Inheritance Theorem)."},
    {"EPR-SN-A", "A sequence starting SN admits no A afterwards: SN...A... is forbidden."},
    {"EPR-NAN", "NAN never occurs over a field of characteristic other than 2."},
    {"EPR-NAS", "NAS never occurs over a field of characteristic other than 2."},
    {"EPR-ANS-INITIAL",
     "ANS can only occur as the initial subsequence (characteristic not 2)."},
    {"EPR-SAN-TAIL",
     "If SAN occurs at position k, then l_j = N for all j >= k+2 (generalized SAN rule)."},
    {"EPR-NSNA-PREFIX",
     "No epr-sequence of order n >= 6 starts NSNA (characteristic not 2)."},
    {"EPR-NSNA-PLACEMENT",
     "NSNA cannot occur as a subsequence of l_1...l_{n-2} (characteristic not 2)."},
    {"EPR-NXXN",
     "If l_k = l_{k+3} = N with k >= 1, then l_i = N for all i >= k+3 "
     "(epr form of the 0110 Theorem, real symmetric matrices)."},
    {"EPR-ANA-RIGID",
     "A non-terminal ANA forces the whole sequence to be all A except a single interior N "
     "(rigidity of ANA: such a matrix is diagonally conjugate to +-(J - 2I))."},
    {"EPR-SNA-TERMINAL",
     "SNA only occurs as one of the terminal sequences SNA or SNAA (real symmetric matrices)."},
    {"EPR-SSNSNSS", "No real symmetric matrix has an epr-sequence starting SSNSNSS."},
    {"EPR-ANSNSN-EVEN",
     "For even n >= 8, an epr-sequence starting ANSNSN belongs to a singular matrix, so l_n = N."},
    {"EPR-ANSNSN-EVENPOS",
     "An epr-sequence starting ANSNSN has l_{2k} = N for every k >= 1."},
    {"EPR-SNSNSN-EVENPOS",
     "An epr-sequence starting SNSNSN has l_{2k} = N for every k >= 1."},
    {"EPR-SSNS-TAILS",
     "The exact shapes SSNSNS(NS)*SN(N)* and SSNS(NS)*NAA are unattainable by real symmetric "
     "matrices."},
};

}  // namespace

std::vector<RuleViolation> check_pr(const PrSequence& p) {
    std::vector<RuleViolation> out;
    const int n = p.order();

    // PR-00: r_0 is exempt; the theorem quantifies over r_{k+1} r_{k+2}, k >= 0.
    for (int k = 1; k + 1 <= n; ++k) {
        if (p.term(k) == 0 && p.term(k + 1) == 0) {
            for (int i = k + 2; i <= n; ++i)
                if (p.term(i) == 1) {
                    add(out, "PR-00", i,
                        "term " + std::to_string(i) + " must be 0 after the 00 at positions " +
                            std::to_string(k) + "," + std::to_string(k + 1));
                    break;
                }
            break;
        }
    }

    // PR-0110
    bool done = false;
    for (int k = 1; k + 3 <= n && !done; ++k) {
        if (p.term(k) == 0 && p.term(k + 3) == 0) {
            for (int i = k + 4; i <= n; ++i)
                if (p.term(i) == 1) {
                    add(out, "PR-0110", i,
                        "term " + std::to_string(i) + " must be 0: r_" + std::to_string(k) +
                            " = r_" + std::to_string(k + 3) + " = 0 forces zeros onward");
                    done = true;
                    break;
                }
        }
    }
    return out;
}

std::vector<RuleViolation> check_epr(const EprSequence& e) {
    std::vector<RuleViolation> out;
    const int n = e.order();

    // EPR-NN
    for (int k = 1; k + 1 <= n; ++k) {
        if (e.letter(k) == 'N' && e.letter(k + 1) == 'N') {
            for (int i = k + 2; i <= n; ++i)
                if (e.letter(i) != 'N') {
                    add(out, "EPR-NN", i,
                        "letter " + std::to_string(i) + " must be N after the NN at position " +
                            std::to_string(k));
                    break;
                }
            break;
        }
    }

    // EPR-NSA
    for (int k = 1; k + 2 <= n; ++k)
        if (is_at(e, k, "NSA")) {
            add(out, "EPR-NSA", k, "NSA at position " + std::to_string(k));
            break;
        }

    // EPR-ASN-A
    {
        bool found = false;
        for (int k = 1; k + 2 <= n && !found; ++k) {
            if (!is_at(e, k, "ASN")) continue;
            for (int j = k + 3; j <= n; ++j)
                if (e.letter(j) == 'A') {
                    add(out, "EPR-ASN-A", j,
                        "A at position " + std::to_string(j) + " after ASN at position " +
                            std::to_string(k));
                    found = true;
                    break;
                }
        }
    }

    // EPR-SN-A
    if (n >= 2 && e.letter(1) == 'S' && e.letter(2) == 'N') {
        for (int j = 3; j <= n; ++j)
            if (e.letter(j) == 'A') {
                add(out, "EPR-SN-A", j,
                    "A at position " + std::to_string(j) + " in a sequence starting SN");
                break;
            }
    }

    // EPR-NAN / EPR-NAS
    for (int k = 1; k + 2 <= n; ++k)
        if (is_at(e, k, "NAN")) {
            add(out, "EPR-NAN", k, "NAN at position " + std::to_string(k));
            break;
        }
    for (int k = 1; k + 2 <= n; ++k)
        if (is_at(e, k, "NAS")) {
            add(out, "EPR-NAS", k, "NAS at position " + std::to_string(k));
            break;
        }

    // EPR-ANS-INITIAL
    for (int k = 2; k + 2 <= n; ++k)
        if (is_at(e, k, "ANS")) {
            add(out, "EPR-ANS-INITIAL", k, "non-initial ANS at position " + std::to_string(k));
            break;
        }

    // EPR-SAN-TAIL
    {
        bool found = false;
        for (int k = 1; k + 2 <= n && !found; ++k) {
            if (!is_at(e, k, "SAN")) continue;
            for (int j = k + 3; j <= n; ++j)
                if (e.letter(j) != 'N') {
                    add(out, "EPR-SAN-TAIL", j,
                        "letter " + std::to_string(j) + " must be N after SAN at position " +
                            std::to_string(k));
                    found = true;
                    break;
                }
        }
    }

    // EPR-NSNA-PREFIX
    if (n >= 6 && is_at(e, 1, "NSNA"))
        add(out, "EPR-NSNA-PREFIX", 1, "order >= 6 sequence starts NSNA");

    // EPR-NSNA-PLACEMENT
    for (int k = 1; k + 3 <= n - 2; ++k)
        if (is_at(e, k, "NSNA")) {
            add(out, "EPR-NSNA-PLACEMENT", k,
                "NSNA inside the first n-2 letters at position " + std::to_string(k));
            break;
        }

    // EPR-NXXN
    {
        bool found = false;
        for (int k = 1; k + 3 <= n && !found; ++k) {
            if (e.letter(k) != 'N' || e.letter(k + 3) != 'N') continue;
            for (int i = k + 4; i <= n; ++i)
                if (e.letter(i) != 'N') {
                    add(out, "EPR-NXXN", i,
                        "letter " + std::to_string(i) + " must be N: l_" + std::to_string(k) +
                            " = l_" + std::to_string(k + 3) + " = N forces Ns onward");
                    found = true;
                    break;
                }
        }
    }

    // EPR-ANA-RIGID: terminal ANA is exempt.
    for (int k = 1; k + 2 < n; ++k)
        if (is_at(e, k, "ANA") && !matches_rigid_ana(e)) {
            add(out, "EPR-ANA-RIGID", k,
                "non-terminal ANA at position " + std::to_string(k) +
                    " in a sequence that is not all-A around a single N");
            break;
        }

    // EPR-SNA-TERMINAL
    for (int k = 1; k + 2 <= n; ++k) {
        if (!is_at(e, k, "SNA")) continue;
        const bool terminal_sna = (k == n - 2);
        const bool terminal_snaa = (k == n - 3 && e.letter(n) == 'A');
        if (!terminal_sna && !terminal_snaa) {
            add(out, "EPR-SNA-TERMINAL", k, "SNA at position " + std::to_string(k) +
                                                " is neither terminal SNA nor terminal SNAA");
            break;
        }
    }

    // EPR-SSNSNSS
    if (n >= 7 && is_at(e, 1, "SSNSNSS"))
        add(out, "EPR-SSNSNSS", 1, "sequence starts SSNSNSS");

    // EPR-ANSNSN-EVEN
    if (n >= 8 && n % 2 == 0 && is_at(e, 1, "ANSNSN") && e.letter(n) != 'N')
        add(out, "EPR-ANSNSN-EVEN", n, "even order with prefix ANSNSN must end in N");

    // EPR-ANSNSN-EVENPOS / EPR-SNSNSN-EVENPOS
    if (is_at(e, 1, "ANSNSN")) {
        for (int k = 2; k <= n; k += 2)
            if (e.letter(k) != 'N') {
                add(out, "EPR-ANSNSN-EVENPOS", k,
                    "letter " + std::to_string(k) + " must be N in a sequence starting ANSNSN");
                break;
            }
    }
    if (is_at(e, 1, "SNSNSN")) {
        for (int k = 2; k <= n; k += 2)
            if (e.letter(k) != 'N') {
                add(out, "EPR-SNSNSN-EVENPOS", k,
                    "letter " + std::to_string(k) + " must be N in a sequence starting SNSNSN");
                break;
            }
    }

    // EPR-SSNS-TAILS
    if (matches_ssns_sn_tail(e) || matches_ssns_naa_tail(e))
        add(out, "EPR-SSNS-TAILS", 1, "sequence matches a blacklisted SS-initial shape");

    return out;
}

std::string explain_rule(const std::string& rule_id) {
    for (const auto& doc : kRuleDocs)
        if (rule_id == doc.id) return doc.text;
    throw std::invalid_argument("unknown rule id '" + rule_id + "'");
}

std::vector<std::string> rule_ids() {
    std::vector<std::string> ids;
    for (const auto& doc : kRuleDocs) ids.emplace_back(doc.id);
    return ids;
}

}  // namespace prseq
