#include "prseq/minors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <bit>
#include <stdexcept>

namespace prseq {

namespace {

void check_cap(const SymMatrix& b, int order_cap) {
    if (b.order() > order_cap)
        throw std::invalid_argument("principal minor enumeration: order cap exceeded");
    if (order_cap > 62) throw std::invalid_argument("order cap above 62 is not supported");
}

}  // namespace

Rational principal_minor(const SymMatrix& b, std::uint64_t mask) {
    if (mask == 0) return Rational(1);
    return det(principal_submatrix(b, IndexSet::from_mask(mask)));
}

MinorTable all_principal_minors_serial(const SymMatrix& b, int order_cap) {
    check_cap(b, order_cap);
    const int n = b.order();
    MinorTable t;
    t.n = n;
    t.by_mask.assign(std::size_t{1} << n, Rational(0));
    t.by_mask[0] = Rational(1);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask)
        t.by_mask[mask] = principal_minor(b, mask);
    return t;
}

MinorTable all_principal_minors(const SymMatrix& b, int order_cap) {
    check_cap(b, order_cap);
    const int n = b.order();
    MinorTable t;
    t.n = n;
    t.by_mask.assign(std::size_t{1} << n, Rational(0));
    t.by_mask[0] = Rational(1);
    const std::int64_t total = std::int64_t{1} << n;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64)
#endif
    for (std::int64_t mask = 1; mask < total; ++mask)
        t.by_mask[static_cast<std::size_t>(mask)] =
            principal_minor(b, static_cast<std::uint64_t>(mask));
    return t;
}

std::vector<OrderTally> minor_order_tallies_serial(const SymMatrix& b, int order_cap) {
    check_cap(b, order_cap);
    const int n = b.order();
    std::vector<OrderTally> tally(static_cast<std::size_t>(n) + 1);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        const int k = std::popcount(mask);
        auto& slot = tally[static_cast<std::size_t>(k)];
        if (principal_minor(b, mask).is_zero())
            slot.any_zero = true;
        else
            slot.any_nonzero = true;
    }
    return tally;
}

std::vector<OrderTally> minor_order_tallies(const SymMatrix& b, int order_cap) {
    check_cap(b, order_cap);
    const int n = b.order();
    std::vector<OrderTally> tally(static_cast<std::size_t>(n) + 1);
    const std::int64_t total = std::int64_t{1} << n;
#ifdef _OPENMP
#pragma omp parallel
    {
        std::vector<OrderTally> local(static_cast<std::size_t>(n) + 1);
#pragma omp for schedule(dynamic, 64) nowait
        for (std::int64_t mask = 1; mask < total; ++mask) {
            const int k = std::popcount(static_cast<std::uint64_t>(mask));
            auto& slot = local[static_cast<std::size_t>(k)];
            if (slot.any_zero && slot.any_nonzero) continue;  // order already settled
            if (principal_minor(b, static_cast<std::uint64_t>(mask)).is_zero())
                slot.any_zero = true;
            else
                slot.any_nonzero = true;
        }
#pragma omp critical(prseq_minor_tally)
        for (int k = 1; k <= n; ++k) {
            tally[static_cast<std::size_t>(k)].any_zero |= local[static_cast<std::size_t>(k)].any_zero;
            tally[static_cast<std::size_t>(k)].any_nonzero |=
                local[static_cast<std::size_t>(k)].any_nonzero;
        }
    }
#else
    tally = minor_order_tallies_serial(b, order_cap);
#endif
    return tally;
}

}  // namespace prseq
