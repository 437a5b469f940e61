#pragma once

#include <functional>
#include <optional>

#include "mono/gauge.hpp"
#include "mono/numeric.hpp"
#include "mono/series.hpp"

namespace mono {

/// Integer cocharacter of the Cartan torus, blocked by gauge factors;
/// dominant iff non-increasing within each block.
struct Coweight {
    IntVec coords;
};

bool is_dominant(const GaugeGroup& g, const Coweight& theta);

/// Sorts each block into non-increasing order (the dominant Weyl chamber
/// representative).
Coweight dominant_normalize(const GaugeGroup& g, Coweight theta);

/// Sum over positive roots of all GL blocks of |<alpha, theta>|
/// (= sum_{i<j in a block} (theta_i - theta_j) for dominant theta).
long long gl_pairing_2rho(const GaugeGroup& g, const Coweight& theta);

/// d_theta = sum over the matter multiset of |<chi, theta>| * mult.
long long matter_degree(const Theory& t, const Coweight& theta);

/// The monopole exponent d_theta - 2<rho^vee, theta>. Requires dominant theta.
long long delta_exponent(const Theory& t, const Coweight& theta);

/// Hilbert series of Stab_G(theta)-invariants: the stabilizer inside each
/// GL(n) block is a product of GL(m_v) over the entry multiplicities m_v, and
/// a degree-k invariant contributes (1 - t^{2k})^{-1}.
TruncatedSeries stabilizer_series_factor(const Theory& t, const Coweight& theta,
                                         int cutoff);

/// Minimum of Delta over the dominant cone slice ||theta||_1 = 1. Exact ray
/// enumeration for gauge rank <= 4; an uncertified lattice scan beyond.
struct MinSlope {
    BigRat value;
    Coweight witness;
    bool certified = true;
};

MinSlope min_slope(const Theory& t, int uncertified_radius = 6);

enum class TheoryClass { Good, Ugly, Bad };

const char* to_string(TheoryClass k);

struct ClassificationResult {
    TheoryClass kind = TheoryClass::Bad;
    /// Minimal Delta over nonzero dominant coweights; nullopt when unbounded
    /// below (negative slope direction) or when there are none (rank 0).
    std::optional<long long> min_exponent;
    std::optional<Coweight> witness;
    BigRat min_slope;
    bool certified = true;
};

/// Good iff the minimal exponent is >= 2, Ugly iff it is exactly 1, Bad
/// otherwise.
ClassificationResult classify(const Theory& t);

struct HilbertOptions {
    bool parallel = true;
    /// Multiplies the certified enumeration radius; pruning-soundness tests
    /// double it and expect identical output.
    int radius_scale = 1;
    int uncertified_radius = 6;
};

struct HilbertResult {
    TruncatedSeries series;
    bool certified = true;
};

/// The monopole formula: sum over dominant coweights theta with
/// Delta(theta) <= cutoff of t^{Delta} * stabilizer factor. Enumeration is
/// restricted to ||theta||_1 <= cutoff / m*, complete by homogeneity of Delta.
/// Throws DivergenceError (with witness) for Bad theories.
HilbertResult compute_hilbert_series(const Theory& t, int cutoff,
                                     const HilbertOptions& opts = {});

/// Parallel fast path returning just the series.
TruncatedSeries hilbert_series(const Theory& t, int cutoff);

/// Serial reference implementation: direct term-by-term accumulation in
/// enumeration order, no bucketing. Must agree with the parallel path
/// bit-for-bit; kept as its test oracle and benchmark baseline.
TruncatedSeries hilbert_series_serial(const Theory& t, int cutoff);

/// Streams all dominant coweights of exact l1 norm `shell`, lexicographically
/// descending coordinate by coordinate.
void for_each_dominant_coweight_shell(const GaugeGroup& g, long long shell,
                                      const std::function<void(const Coweight&)>& visit);

} // namespace mono
