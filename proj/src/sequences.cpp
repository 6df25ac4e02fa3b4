#include "prseq/sequences.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace prseq {

PrSequence::PrSequence(int r0, std::vector<int> terms) : r0_(r0), terms_(std::move(terms)) {
    if (r0_ != 0 && r0_ != 1) throw std::invalid_argument("PrSequence: r0 must be 0 or 1");
    if (terms_.empty()) throw std::invalid_argument("PrSequence: order must be >= 1");
    for (int t : terms_)
        if (t != 0 && t != 1) throw std::invalid_argument("PrSequence: terms must be 0 or 1");
}

int PrSequence::term(int k) const {
    if (k < 1 || k > order()) throw std::out_of_range("PrSequence: term index");
    return terms_[static_cast<std::size_t>(k - 1)];
}

EprSequence::EprSequence(std::string letters) : letters_(std::move(letters)) {
    if (letters_.empty()) throw std::invalid_argument("EprSequence: order must be >= 1");
    for (char c : letters_)
        if (c != 'A' && c != 'S' && c != 'N')
            throw std::invalid_argument("EprSequence: alphabet is {A,S,N}");
}

char EprSequence::letter(int k) const {
    if (k < 1 || k > order()) throw std::out_of_range("EprSequence: letter index");
    return letters_[static_cast<std::size_t>(k - 1)];
}

PrSequence pr_from_tallies(const SymMatrix& b, const std::vector<OrderTally>& tally) {
    const int n = b.order();
    std::vector<int> terms(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k)
        terms[static_cast<std::size_t>(k - 1)] = tally[static_cast<std::size_t>(k)].any_nonzero ? 1 : 0;
    return PrSequence(b.has_zero_diagonal_entry() ? 1 : 0, std::move(terms));
}

EprSequence epr_from_tallies(const std::vector<OrderTally>& tally) {
    const int n = static_cast<int>(tally.size()) - 1;
    std::string s;
    s.reserve(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) {
        const auto& t = tally[static_cast<std::size_t>(k)];
        if (t.any_zero && t.any_nonzero)
            s.push_back('S');
        else if (t.any_nonzero)
            s.push_back('A');
        else
            s.push_back('N');
    }
    return EprSequence(std::move(s));
}

PrSequence compute_pr(const SymMatrix& b, int order_cap) {
    return pr_from_tallies(b, minor_order_tallies(b, order_cap));
}

EprSequence compute_epr(const SymMatrix& b, int order_cap) {
    return epr_from_tallies(minor_order_tallies(b, order_cap));
}

PrSequence pr_from_epr(const EprSequence& e) {
    const int n = e.order();
    std::vector<int> terms(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k)
        terms[static_cast<std::size_t>(k - 1)] = (e.letter(k) == 'N') ? 0 : 1;
    return PrSequence(e.letter(1) == 'A' ? 0 : 1, std::move(terms));
}

EprSequence epr_of_inverse(const EprSequence& e) {
    const int n = e.order();
    if (e.letter(n) != 'A')
        throw std::invalid_argument("epr_of_inverse: sequence must end in A");
    std::string out;
    out.reserve(static_cast<std::size_t>(n));
    for (int k = n - 1; k >= 1; --k) out.push_back(e.letter(k));
    out.push_back('A');
    return EprSequence(std::move(out));
}

PrSequence pr_of_inverse(const PrSequence& p, const std::optional<EprSequence>& e) {
    const int n = p.order();
    if (p.term(n) != 1) throw std::domain_error("pr_of_inverse: matrix is singular (r_n = 0)");
    std::vector<int> terms(static_cast<std::size_t>(n));
    for (int i = 1; i <= n - 1; ++i) terms[static_cast<std::size_t>(i - 1)] = p.term(n - i);
    terms[static_cast<std::size_t>(n - 1)] = 1;

    int r0;
    if (p.term(n - 1) == 0) {
        // Tail 01: a zero principal minor of order n-1 certainly exists.
        r0 = 1;
    } else if (n >= 3 && p.term(n - 2) == 0) {
        // Tail 011: the penultimate epr letter must be A (NSA is prohibited).
        r0 = 0;
    } else if (e.has_value()) {
        if (e->order() != n)
            throw std::invalid_argument("pr_of_inverse: epr order mismatch");
        const char penult = e->letter(n - 1);
        r0 = (penult == 'A') ? 0 : 1;
    } else {
        throw std::domain_error(
            "pr_of_inverse: r'_0 undeterminable for tail 111 without an epr-sequence");
    }
    return PrSequence(r0, std::move(terms));
}

PrSequence parse_pr(const std::string& text) {
    const auto sep = text.find(']');
    if (sep != 1 || text.size() < 3)
        throw std::invalid_argument("parse_pr: expected r0]r1...rn, got '" + text + "'");
    auto bit = [&](char c) -> int {
        if (c == '0') return 0;
        if (c == '1') return 1;
        throw std::invalid_argument("parse_pr: invalid character in '" + text + "'");
    };
    const int r0 = bit(text[0]);
    std::vector<int> terms;
    terms.reserve(text.size() - 2);
    for (std::size_t i = 2; i < text.size(); ++i) terms.push_back(bit(text[i]));
    return PrSequence(r0, std::move(terms));
}

std::string format_pr(const PrSequence& p) {
    std::string s;
    s.reserve(static_cast<std::size_t>(p.order()) + 2);
    s.push_back(p.r0() ? '1' : '0');
    s.push_back(']');
    for (int t : p.terms()) s.push_back(t ? '1' : '0');
    return s;
}

EprSequence parse_epr(const std::string& text) { return EprSequence(text); }

std::string format_epr(const EprSequence& e) { return e.letters(); }

}  // namespace prseq
