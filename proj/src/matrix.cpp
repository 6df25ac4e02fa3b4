#include "prseq/matrix.hpp"

#include <algorithm>

namespace prseq {

IndexSet::IndexSet(std::vector<int> indices) : idx_(std::move(indices)) {
    for (std::size_t k = 0; k < idx_.size(); ++k) {
        if (idx_[k] < 1) throw std::invalid_argument("IndexSet: indices are 1-based");
        if (k > 0 && idx_[k] <= idx_[k - 1])
            throw std::invalid_argument("IndexSet: indices must be strictly increasing");
    }
}

IndexSet IndexSet::from_mask(std::uint64_t mask) {
    std::vector<int> v;
    for (int i = 0; mask != 0; ++i, mask >>= 1)
        if (mask & 1u) v.push_back(i + 1);
    return IndexSet(std::move(v));
}

IndexSet IndexSet::full(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
    return IndexSet(std::move(v));
}

std::uint64_t IndexSet::mask() const {
    if (!idx_.empty() && idx_.back() > 64)
        throw std::out_of_range("IndexSet: mask only supports indices <= 64");
    std::uint64_t m = 0;
    for (int i : idx_) m |= (std::uint64_t{1} << (i - 1));
    return m;
}

bool IndexSet::contains(int i) const {
    return std::binary_search(idx_.begin(), idx_.end(), i);
}

IndexSet IndexSet::complement(int n) const {
    std::vector<int> v;
    for (int i = 1; i <= n; ++i)
        if (!contains(i)) v.push_back(i);
    return IndexSet(std::move(v));
}

IndexSet IndexSet::unite_disjoint(const IndexSet& other) const {
    std::vector<int> v;
    v.reserve(idx_.size() + other.idx_.size());
    std::merge(idx_.begin(), idx_.end(), other.idx_.begin(), other.idx_.end(),
               std::back_inserter(v));
    for (std::size_t k = 1; k < v.size(); ++k)
        if (v[k] == v[k - 1]) throw std::invalid_argument("IndexSet: sets are not disjoint");
    return IndexSet(std::move(v));
}

SymMatrix::SymMatrix(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("SymMatrix: order must be positive");
    a_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), Rational(0));
}

SymMatrix SymMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    const int n = static_cast<int>(rows.size());
    SymMatrix m(n);
    for (int i = 0; i < n; ++i)
        if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != n)
            throw std::invalid_argument("SymMatrix: input is not square");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const auto& v = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] != v)
                throw std::invalid_argument("SymMatrix: input is not symmetric");
            m.a_[static_cast<std::size_t>(i * n + j)] = v;
        }
    return m;
}

bool SymMatrix::has_zero_diagonal_entry() const {
    for (int i = 1; i <= n_; ++i)
        if (at(i, i).is_zero()) return true;
    return false;
}

}  // namespace prseq
