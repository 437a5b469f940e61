#pragma once

#include <optional>

#include "mono/engine.hpp"
#include "mono/gauge.hpp"
#include "mono/root_system.hpp"

namespace mono {

/// Dictionary data of the generalized slice attached to an ADE quiver:
/// lambda = sum dimW_i omega_i, alpha = sum dimV_i alpha_i, mu = lambda - alpha.
struct SliceData {
    SimpleSeries flavor_series = SimpleSeries::A;
    int flavor_rank = 0;
    WeightVec lambda; // fundamental coordinates
    WeightVec mu;     // fundamental coordinates
    WeightVec alpha;  // simple-root coordinates
    bool nonempty = false;
    long long dim = 0; // <2 rho^vee, lambda - mu>, only meaningful when nonempty
    bool has_fixed_point = false;
    long long fixed_point_multiplicity = 0;
};

/// Requires the quiver's underlying graph to be the Dynkin diagram of the
/// ADE flavor type (orientation ignored).
SliceData slice_data(const QuiverTheory& q, SimpleSeries flavor_series, int flavor_rank);

struct SliceReport {
    SliceData data;
    std::optional<TruncatedSeries> series;
    std::optional<ClassificationResult> classification;
    bool monopole_diverged = false;
    IntVec divergence_witness;
    /// Heuristic: growth degree of the coefficients over [cutoff/2, cutoff],
    /// plus one; agrees with dim when the series has a single dominant pole.
    std::optional<int> pole_order_estimate;
    bool certified = true;
};

/// Bundles the slice data with the monopole Hilbert series of the quiver
/// theory. A divergent monopole side is reported, not thrown; the slice
/// fields are still filled.
SliceReport slice_report(const QuiverTheory& q, SimpleSeries flavor_series,
                         int flavor_rank, int cutoff);

/// Growth-fit diagnostic used by slice_report; exposed for tests.
int estimate_pole_order(const TruncatedSeries& s);

} // namespace mono
