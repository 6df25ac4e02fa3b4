#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "prseq/matrix.hpp"
#include "prseq/sequences.hpp"

namespace prseq {

enum class SearchMode { Exhaustive, Randomized };

/// A search over symmetric matrices with entries drawn per-position from
/// finite alphabets: diagonal entries from diag_alphabet, off-diagonal from
/// offdiag_alphabet.
struct SearchSpec {
    int n = 0;
    std::vector<Rational> diag_alphabet;
    std::vector<Rational> offdiag_alphabet;
    SearchMode mode = SearchMode::Exhaustive;
    std::uint64_t trials = 0;            // randomized mode
    std::optional<std::uint64_t> seed;   // required in randomized mode
    std::optional<PrSequence> target_pr;
    std::optional<EprSequence> target_epr;
    std::optional<std::string> target_epr_prefix;  // {A,S,N} prefix probe
    bool census = false;
    /// Unit first row/column normalization: valid over diag {1},
    /// off-diagonal within {-1,1}. Sound for epr purposes because diagonal
    /// conjugation preserves the zero pattern of every minor.
    bool canonicalize = false;
    double space_bound = 1e8;  // exhaustive feasibility cap
    int jobs = 0;              // 0 = OpenMP default
};

/// Search outcome. In census mode both maps cover every realized sequence;
/// in target mode they hold the lexicographically least attainer found (by
/// alphabet-index order over the assignment vector), keyed by its formatted
/// sequence. Counts are exact in census mode and per-sample in randomized
/// mode; a target-mode exhaustive search stops each partition at its first
/// hit, so its counts are not meaningful.
struct CensusResult {
    std::map<std::string, SymMatrix> pr_witness;
    std::map<std::string, SymMatrix> epr_witness;
    std::map<std::string, std::uint64_t> pr_count;
    std::map<std::string, std::uint64_t> epr_count;
    std::uint64_t visited = 0;
};

/// OpenMP kernel: prefix-partitioned exhaustive enumeration with
/// target-driven pruning, or counter-based randomized sampling. Every
/// matrix stored in the result is re-verified through the exact library
/// path before admission.
CensusResult run_search(const SearchSpec& spec);

/// Serial reference: plain enumeration/sampled loop over complete matrices,
/// sequences computed through the exact library path, no pruning. Kept for
/// testing and benchmarking against the parallel kernel; identical results
/// by construction of the sample stream.
CensusResult run_search_serial(const SearchSpec& spec);

/// Convenience: full census at order n over the given alphabets.
CensusResult census(int n, const std::vector<Rational>& diag,
                    const std::vector<Rational>& offdiag, int jobs = 0);

/// The attainer found for a target search, if any.
std::optional<SymMatrix> found_attainer(const SearchSpec& spec, const CensusResult& result);

struct JBlockReport {
    int n = 0;
    int trials = 0;
    std::uint64_t seed = 0;
    int zero_determinants = 0;
    bool all_singular = false;
};

/// Embeds an all-ones principal block of size n/2 + 1 into otherwise random
/// rational symmetric matrices and checks det = 0 exactly each time.
JBlockReport jblock_singularity_probe(int n_even, int trials, std::uint64_t seed);

/// Deterministic counter-based generator shared by randomized search and
/// the matrix generators; value depends only on (seed, stream, index).
std::uint64_t mix64(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

}  // namespace prseq
