#pragma once

#include <map>
#include <optional>

#include "mono/charge.hpp"
#include "mono/engine.hpp"
#include "mono/series.hpp"

namespace mono {

/// Series in t whose coefficients are Laurent polynomials in the torus
/// variables x_1..x_g, truncated at a t-cutoff. At t-degree k every stored
/// exponent vector satisfies ||e||_inf <= k * max|charge|, so the truncation
/// is exact.
class MultiSeries {
public:
    MultiSeries(int t_cutoff, int nvars);

    static MultiSeries one(int t_cutoff, int nvars);

    int t_cutoff() const noexcept { return static_cast<int>(levels_.size()) - 1; }
    int nvars() const noexcept { return nvars_; }

    const std::map<IntVec, BigInt>& level(int k) const;

    /// In-place *= 1/(1 - t x^shift) via the geometric recurrence
    /// G_k = F_k + x^shift G_{k-1}. Exponents that cannot return to zero
    /// within the remaining t-budget are pruned (they cannot contribute to
    /// any constant term at degree <= cutoff).
    void apply_geometric_factor(const IntVec& shift, const IntVec& prune_bound);

    /// Coefficient of x^0 at each t-degree.
    TruncatedSeries constant_term() const;

private:
    int nvars_;
    std::vector<std::map<IntVec, BigInt>> levels_;
};

/// Molien constant-term series of the Higgs branch:
/// CT_x[(1-t^2)^g prod_i ((1 - t x^{chi_i})(1 - t x^{-chi_i}))^{-1}].
TruncatedSeries molien_higgs_series(const ChargeData& c, int cutoff);

struct MirrorReport {
    bool equal = false;
    TruncatedSeries lhs; // monopole side
    TruncatedSeries rhs; // Gale-dual Molien side
    std::optional<int> first_mismatch_degree;
    bool certified = true;
};

/// Coefficient-wise comparison up to `cutoff`, recording the first mismatch.
MirrorReport compare_series_report(TruncatedSeries lhs, TruncatedSeries rhs, int cutoff);

/// Compares the monopole Hilbert series of the toric theory against the
/// Molien series of the Gale-dual datum, coefficient by coefficient.
MirrorReport mirror_check(const ChargeData& c, int cutoff);

} // namespace mono
