#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mono/charge.hpp"
#include "mono/errors.hpp"
#include "mono/intvec.hpp"

namespace mono {

/// Product of GL(n_i) factors; the Cartan torus coordinates are blocked per
/// factor, rank = sum n_i.
struct GaugeGroup {
    std::vector<int> factors;

    int rank() const noexcept {
        int r = 0;
        for (int n : factors)
            r += n;
        return r;
    }

    bool operator==(const GaugeGroup&) const = default;
};

struct MatterWeight {
    IntVec weight;        // length = gauge rank
    long long mult = 1;

    bool operator==(const MatterWeight&) const = default;
};

/// Gauge group plus matter content as a weight multiset on the Cartan torus.
struct Theory {
    GaugeGroup group;
    std::vector<MatterWeight> matter;

    bool operator==(const Theory&) const = default;
};

struct QuiverTheory {
    int vertices = 0;
    std::vector<std::pair<int, int>> edges; // (tail, head), 0-based
    std::vector<int> dim_v;
    std::vector<int> dim_w;

    bool operator==(const QuiverTheory&) const = default;
};

/// Gauge group GL(dimV_j) per vertex with dimV_j > 0; matter weights from
/// Hom(V_t, V_h) per edge and Hom(W_j, V_j) per vertex.
Theory quiver_to_theory(const QuiverTheory& q);

/// GL(1)^g with the d columns of the charge matrix as matter weights.
Theory toric_to_theory(const ChargeData& c);

struct Violation {
    std::string code;
    std::string message;
};

/// Theory invariant checks; each violation carries a machine-readable code
/// (WEIGHT_LEN, MULT_ZERO, FACTOR_SIZE).
std::vector<Violation> validate_theory(const Theory& t);

} // namespace mono
