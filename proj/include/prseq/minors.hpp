#pragma once

#include <cstdint>
#include <vector>

#include "prseq/linalg.hpp"
#include "prseq/matrix.hpp"

namespace prseq {

inline constexpr int kDefaultOrderCap = 20;

/// All 2^n - 1 principal minors, keyed by subset mask (bit i-1 <-> index i).
/// at(0) is the empty minor, 1 by convention.
struct MinorTable {
    int n = 0;
    std::vector<Rational> by_mask;  // size 2^n; by_mask[0] = 1

    const Rational& at(std::uint64_t mask) const { return by_mask.at(mask); }
    Rational at(const IndexSet& s) const { return by_mask.at(s.mask()); }
};

/// Per-order census of zero / nonzero principal minors.
struct OrderTally {
    bool any_zero = false;
    bool any_nonzero = false;
};

/// Enumerates every principal minor. The subset loop is data parallel; the
/// OpenMP version splits the mask range across threads, the serial version
/// is the reference the tests compare against.
MinorTable all_principal_minors(const SymMatrix& b, int order_cap = kDefaultOrderCap);
MinorTable all_principal_minors_serial(const SymMatrix& b, int order_cap = kDefaultOrderCap);

/// Streaming form: only the per-order zero/nonzero tallies, index 0 unused,
/// 1..n populated. This is what the sequence computations need.
std::vector<OrderTally> minor_order_tallies(const SymMatrix& b, int order_cap = kDefaultOrderCap);
std::vector<OrderTally> minor_order_tallies_serial(const SymMatrix& b,
                                                   int order_cap = kDefaultOrderCap);

/// Determinant of the principal submatrix selected by a mask.
Rational principal_minor(const SymMatrix& b, std::uint64_t mask);

}  // namespace prseq
