#pragma once

#include <string>

#include "prseq/matrix.hpp"

namespace prseq {

/// Named matrix families used as witness building blocks.
enum class ConstructionKind {
    Zero,              // 0_n
    Identity,          // I_n
    AllOnes,           // J_n
    JMinus2I,          // J_n - 2 I_n
    JMinus3I,          // J_n - 3 I_n
    PathAdjacency,     // A(P_n)
    CycleAdjacency,    // A(C_n), n >= 3
    FanAdjacency,      // A(F_n): cycle C_{n-1} on 1..n-1 plus pendant vertex n at 1
    SquaredDifference  // b_ij = (i-j)^2
};

/// Spec names used in recipes, fixtures and on the command line:
/// ZERO, IDENTITY, ALLONES, J_MINUS_2I, J_MINUS_3I, PATH_ADJ, CYCLE_ADJ,
/// FAN_ADJ, SQUARED_DIFF.
std::string construction_name(ConstructionKind kind);
ConstructionKind construction_from_name(const std::string& name);

/// Builds the named matrix exactly; throws std::invalid_argument for an
/// unsupported (kind, n) pair (e.g. CYCLE_ADJ with n < 3).
SymMatrix construct(ConstructionKind kind, int n);

}  // namespace prseq
