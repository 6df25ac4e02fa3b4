#include "prseq/constructions.hpp"

#include <stdexcept>

namespace prseq {

std::string construction_name(ConstructionKind kind) {
    switch (kind) {
        case ConstructionKind::Zero: return "ZERO";
        case ConstructionKind::Identity: return "IDENTITY";
        case ConstructionKind::AllOnes: return "ALLONES";
        case ConstructionKind::JMinus2I: return "J_MINUS_2I";
        case ConstructionKind::JMinus3I: return "J_MINUS_3I";
        case ConstructionKind::PathAdjacency: return "PATH_ADJ";
        case ConstructionKind::CycleAdjacency: return "CYCLE_ADJ";
        case ConstructionKind::FanAdjacency: return "FAN_ADJ";
        case ConstructionKind::SquaredDifference: return "SQUARED_DIFF";
    }
    throw std::logic_error("construction_name: unreachable");
}

ConstructionKind construction_from_name(const std::string& name) {
    if (name == "ZERO") return ConstructionKind::Zero;
    if (name == "IDENTITY") return ConstructionKind::Identity;
    if (name == "ALLONES") return ConstructionKind::AllOnes;
    if (name == "J_MINUS_2I") return ConstructionKind::JMinus2I;
    if (name == "J_MINUS_3I") return ConstructionKind::JMinus3I;
    if (name == "PATH_ADJ") return ConstructionKind::PathAdjacency;
    if (name == "CYCLE_ADJ") return ConstructionKind::CycleAdjacency;
    if (name == "FAN_ADJ") return ConstructionKind::FanAdjacency;
    if (name == "SQUARED_DIFF") return ConstructionKind::SquaredDifference;
    throw std::invalid_argument("unknown construction kind '" + name + "'");
}

SymMatrix construct(ConstructionKind kind, int n) {
    if (n < 1) throw std::invalid_argument("construct: order must be positive");
    switch (kind) {
        case ConstructionKind::Zero:
            return SymMatrix(n);
        case ConstructionKind::Identity: {
            SymMatrix m(n);
            for (int i = 1; i <= n; ++i) m.set(i, i, Rational(1));
            return m;
        }
        case ConstructionKind::AllOnes: {
            SymMatrix m(n);
            for (int i = 1; i <= n; ++i)
                for (int j = i; j <= n; ++j) m.set(i, j, Rational(1));
            return m;
        }
        case ConstructionKind::JMinus2I:
        case ConstructionKind::JMinus3I: {
            const Rational diag(kind == ConstructionKind::JMinus2I ? -1 : -2);
            SymMatrix m(n);
            for (int i = 1; i <= n; ++i)
                for (int j = i; j <= n; ++j) m.set(i, j, i == j ? diag : Rational(1));
            return m;
        }
        case ConstructionKind::PathAdjacency: {
            SymMatrix m(n);
            for (int i = 1; i < n; ++i) m.set(i, i + 1, Rational(1));
            return m;
        }
        case ConstructionKind::CycleAdjacency: {
            if (n < 3) throw std::invalid_argument("construct: CYCLE_ADJ needs n >= 3");
            SymMatrix m(n);
            for (int i = 1; i < n; ++i) m.set(i, i + 1, Rational(1));
            m.set(1, n, Rational(1));
            return m;
        }
        case ConstructionKind::FanAdjacency: {
            if (n < 4) throw std::invalid_argument("construct: FAN_ADJ needs n >= 4");
            SymMatrix m(n);
            for (int i = 1; i < n - 1; ++i) m.set(i, i + 1, Rational(1));
            m.set(1, n - 1, Rational(1));  // closes C_{n-1}
            m.set(1, n, Rational(1));      // pendant vertex
            return m;
        }
        case ConstructionKind::SquaredDifference: {
            SymMatrix m(n);
            for (int i = 1; i <= n; ++i)
                for (int j = i; j <= n; ++j) m.set(i, j, Rational((i - j) * (i - j)));
            return m;
        }
    }
    throw std::logic_error("construct: unreachable");
}

}  // namespace prseq
