#pragma once

#include <vector>

#include "prseq/matrix.hpp"

namespace prseq {

/// B[rows, cols] as a rectangular grid.
Grid submatrix(const SymMatrix& b, const IndexSet& rows, const IndexSet& cols);

/// B[alpha] — same row and column set, hence symmetric.
SymMatrix principal_submatrix(const SymMatrix& b, const IndexSet& alpha);

/// Exact determinant by fraction-free (Bareiss) elimination after clearing
/// denominators. The determinant of the 0x0 matrix is 1.
Rational det(const SymMatrix& b);
Rational det(const Grid& g);

/// Exact rank: the largest k with a nonzero (not necessarily principal)
/// k x k minor, computed by rational Gaussian elimination.
int rank(const SymMatrix& b);

/// Exact inverse; throws std::domain_error when det(B) = 0.
SymMatrix inverse(const SymMatrix& b);

/// Schur complement B/B[alpha]. Result indices 1..n-|alpha| follow the
/// increasing order of the complement of alpha, so
///   det C[gamma] = det B[gamma' u alpha] / det B[alpha]
/// where gamma' maps positions back through that order.
/// Throws std::domain_error when B[alpha] is singular.
SymMatrix schur_complement(const SymMatrix& b, const IndexSet& alpha);

SymMatrix direct_sum(const SymMatrix& b, const SymMatrix& c);

/// Appends a row/column duplicating row/column i (entry (n+1,n+1) = b_ii).
/// Every principal minor of the result is either a principal minor of B or
/// zero, so the pr-sequence gains exactly one trailing 0.
SymMatrix duplicate_index(const SymMatrix& b, int i);

/// Borders B with the combination row Bx and corner x^T B x, i.e.
/// [I; x^T] B [I, x]. Rank is preserved; duplicate_index is the x = e_i case.
SymMatrix border_with_combination(const SymMatrix& b, const std::vector<Rational>& x);

/// D B D for diagonal D = diag(d). Preserves the zero/nonzero pattern of
/// every minor when all d_i are nonzero.
SymMatrix conjugate_by_diagonal(const SymMatrix& b, const std::vector<Rational>& d);

}  // namespace prseq
