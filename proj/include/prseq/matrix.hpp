#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "prseq/rational.hpp"

namespace prseq {

/// Sorted set of distinct 1-based indices. The paper-facing index convention
/// is 1-based throughout the library.
class IndexSet {
public:
    IndexSet() = default;
    explicit IndexSet(std::vector<int> indices);

    /// Bit i-1 of the mask corresponds to index i.
    static IndexSet from_mask(std::uint64_t mask);
    static IndexSet full(int n);

    std::uint64_t mask() const;
    int size() const { return static_cast<int>(idx_.size()); }
    bool empty() const { return idx_.empty(); }
    bool contains(int i) const;
    int max_index() const { return idx_.empty() ? 0 : idx_.back(); }

    /// Complement within {1..n}.
    IndexSet complement(int n) const;
    /// Union with a disjointness check.
    IndexSet unite_disjoint(const IndexSet& other) const;

    const std::vector<int>& indices() const { return idx_; }
    int operator[](int k) const { return idx_.at(static_cast<std::size_t>(k)); }

    friend bool operator==(const IndexSet& a, const IndexSet& b) { return a.idx_ == b.idx_; }
    friend bool operator<(const IndexSet& a, const IndexSet& b) { return a.idx_ < b.idx_; }

private:
    std::vector<int> idx_;
};

/// Square symmetric matrix of exact rationals. Symmetry is enforced at
/// construction and preserved by every mutator; entries are immutable in
/// practice once a matrix has been built, so values are safe to share
/// across threads.
class SymMatrix {
public:
    explicit SymMatrix(int n);

    /// Validates squareness and exact symmetry.
    static SymMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

    int order() const { return n_; }

    const Rational& at(int i, int j) const {  // 1-based
        check_index(i);
        check_index(j);
        return a_[static_cast<std::size_t>((i - 1) * n_ + (j - 1))];
    }

    /// Sets (i,j) and (j,i) together.
    void set(int i, int j, const Rational& v) {
        check_index(i);
        check_index(j);
        a_[static_cast<std::size_t>((i - 1) * n_ + (j - 1))] = v;
        a_[static_cast<std::size_t>((j - 1) * n_ + (i - 1))] = v;
    }

    bool has_zero_diagonal_entry() const;

    friend bool operator==(const SymMatrix& x, const SymMatrix& y) {
        return x.n_ == y.n_ && x.a_ == y.a_;
    }

private:
    void check_index(int i) const {
        if (i < 1 || i > n_) throw std::out_of_range("SymMatrix: index out of range");
    }

    int n_ = 0;
    std::vector<Rational> a_;
};

/// Rectangular block B[rows, cols]; only produced by submatrix extraction.
struct Grid {
    std::vector<std::vector<Rational>> rows;

    int row_count() const { return static_cast<int>(rows.size()); }
    int col_count() const { return rows.empty() ? 0 : static_cast<int>(rows.front().size()); }
    bool square() const { return row_count() == col_count(); }
};

}  // namespace prseq
