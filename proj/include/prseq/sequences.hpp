#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "prseq/matrix.hpp"
#include "prseq/minors.hpp"

namespace prseq {

/// Principal rank characteristic sequence r_0]r_1...r_n.
/// r_k = 1 iff some principal minor of order k is nonzero;
/// r_0 = 1 iff some diagonal entry is zero.
class PrSequence {
public:
    PrSequence(int r0, std::vector<int> terms);

    int r0() const { return r0_; }
    int order() const { return static_cast<int>(terms_.size()); }
    int term(int k) const;  // k in 1..n
    const std::vector<int>& terms() const { return terms_; }

    friend bool operator==(const PrSequence& a, const PrSequence& b) {
        return a.r0_ == b.r0_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const PrSequence& a, const PrSequence& b) { return !(a == b); }
    friend bool operator<(const PrSequence& a, const PrSequence& b) {
        return std::tie(a.r0_, a.terms_) < std::tie(b.r0_, b.terms_);
    }

private:
    int r0_ = 0;
    std::vector<int> terms_;
};

/// Enhanced sequence l_1...l_n over {A, S, N}: for each order, All, Some or
/// None of the principal minors are nonzero.
class EprSequence {
public:
    explicit EprSequence(std::string letters);

    int order() const { return static_cast<int>(letters_.size()); }
    char letter(int k) const;  // k in 1..n
    const std::string& letters() const { return letters_; }

    friend bool operator==(const EprSequence& a, const EprSequence& b) {
        return a.letters_ == b.letters_;
    }
    friend bool operator!=(const EprSequence& a, const EprSequence& b) { return !(a == b); }
    friend bool operator<(const EprSequence& a, const EprSequence& b) {
        return a.letters_ < b.letters_;
    }

private:
    std::string letters_;
};

PrSequence compute_pr(const SymMatrix& b, int order_cap = kDefaultOrderCap);
EprSequence compute_epr(const SymMatrix& b, int order_cap = kDefaultOrderCap);

/// Same classifications derived from an already-built tally vector.
PrSequence pr_from_tallies(const SymMatrix& b, const std::vector<OrderTally>& tally);
EprSequence epr_from_tallies(const std::vector<OrderTally>& tally);

/// The unique pr-sequence any matrix attaining e would attain:
/// r_k = 0 iff l_k = N, r_0 = 1 iff l_1 is S or N.
PrSequence pr_from_epr(const EprSequence& e);

/// Inverse theorem transform: requires l_n = A; returns l_{n-1}...l_1 A.
EprSequence epr_of_inverse(const EprSequence& e);

/// Inverse pr transform: r'_n = 1, r'_i = r_{n-i}. The 0th term follows the
/// tail patterns 01 -> 1 and 011 -> 0; otherwise the penultimate letter of
/// the supplied epr-sequence decides (S or N -> 1, A -> 0). Throws when the
/// input is singular or r'_0 is undeterminable.
PrSequence pr_of_inverse(const PrSequence& p, const std::optional<EprSequence>& e = std::nullopt);

/// Text forms: "r0]r1...rn" over {0,1} and a bare {A,S,N} string.
PrSequence parse_pr(const std::string& text);
std::string format_pr(const PrSequence& p);
EprSequence parse_epr(const std::string& text);
std::string format_epr(const EprSequence& e);

}  // namespace prseq
