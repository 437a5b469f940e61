#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mono/errors.hpp"
#include "mono/intvec.hpp"
#include "mono/numeric.hpp"

namespace mono {

enum class SimpleSeries : char {
    A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G'
};

SimpleSeries series_from_char(char c);
char series_to_char(SimpleSeries s);

enum class WeightBasis : unsigned char { FundamentalWeight, SimpleRoot };

/// Integer coordinate vector tagged with the basis it is written in.
struct WeightVec {
    IntVec coords;
    WeightBasis basis = WeightBasis::FundamentalWeight;
};

inline WeightVec fund_weight(IntVec coords) {
    return WeightVec{std::move(coords), WeightBasis::FundamentalWeight};
}
inline WeightVec root_weight(IntVec coords) {
    return WeightVec{std::move(coords), WeightBasis::SimpleRoot};
}

/// Cartan data of a simple root system: Cartan matrix, positive roots in
/// simple-root coordinates, symmetrizer, fundamental weights. Convention:
/// cartan()[i][j] = <alpha_j, alpha_i^vee>, so the fundamental coordinates of
/// a weight v are its pairings <v, alpha_i^vee> and fund(alpha_j) is the j-th
/// column of the Cartan matrix.
class RootSystem {
public:
    static RootSystem build(SimpleSeries series, int rank);

    SimpleSeries series() const noexcept { return series_; }
    int rank() const noexcept { return rank_; }
    const IntMat& cartan() const noexcept { return cartan_; }
    const std::vector<IntVec>& positive_roots() const noexcept { return positive_roots_; }
    /// Minimal positive integers d_i with d_i A_ij = d_j A_ji.
    const IntVec& symmetrizer() const noexcept { return symmetrizer_; }
    /// Row i = omega_i in simple-root coordinates.
    const std::vector<std::vector<BigRat>>& fundamental_weights() const noexcept {
        return fundamental_weights_;
    }

    /// Coordinates of w in the fundamental-weight basis (= pairings with the
    /// simple coroots). Validates the coordinate length.
    IntVec to_fundamental(const WeightVec& w) const;

    /// Simple-root coordinates of a vector given in fundamental coordinates,
    /// when they are integral; nullopt otherwise.
    std::optional<IntVec> integral_root_coords(const IntVec& fund) const;
    std::vector<BigRat> rational_root_coords(const IntVec& fund) const;

    bool is_dominant(const WeightVec& w) const;

    /// Unique dominant element of the Weyl orbit, in fundamental coordinates.
    IntVec dominant_representative(IntVec fund) const;

    /// Action of the longest Weyl element w0, computed once as the reduced
    /// word of simple reflections driving rho to -rho.
    IntVec w0_action(IntVec fund) const;

    void apply_simple_reflection(int i, IntVec& fund) const;

    /// W-invariant inner product (x, y), x in fundamental and y in simple-root
    /// coordinates: sum_j d_j x_j y_j.
    long long inner_fund_root(const IntVec& fund, const IntVec& root) const;

    /// <x, alpha^vee> for the positive root with index root_index.
    long long coroot_pairing(const IntVec& fund, int root_index) const;

    /// Signed pairing <x, 2 rho^vee> = sum over positive roots of <x, alpha^vee>.
    long long signed_pairing_2rho(const IntVec& fund) const;

private:
    RootSystem() = default;

    SimpleSeries series_ = SimpleSeries::A;
    int rank_ = 0;
    IntMat cartan_;
    std::vector<IntVec> positive_roots_;
    IntVec symmetrizer_;
    std::vector<std::vector<BigRat>> fundamental_weights_;
    // adj_cartan_/cartan_det_: integer inverse data, adj = det * A^{-1}.
    IntMat adj_cartan_;
    long long cartan_det_ = 1;
    // Row per positive root: integer covector with <x, alpha^vee> = row . fund(x).
    std::vector<IntVec> coroot_rows_;
    IntVec two_rho_covector_;
    mutable std::vector<int> w0_word_; // built lazily

    const std::vector<int>& w0_word() const;
};

// ---- operations ----

/// True iff lambda - mu is a non-negative integer combination of simple roots.
/// Both weights must be expressed in the same basis.
bool dominance_leq(const RootSystem& rs, const WeightVec& mu, const WeightVec& lambda);

/// Multiplicity of the weight mu in the irreducible module with highest
/// weight lambda, by the Freudenthal recursion over dominant weights.
long long freudenthal_multiplicity(const RootSystem& rs, const WeightVec& lambda,
                                   const WeightVec& mu);

/// Weyl dimension formula prod_{alpha>0} <lambda+rho, alpha^vee>/<rho, alpha^vee>.
BigInt weyl_dim(const RootSystem& rs, const WeightVec& lambda);

struct WeylDegrees {
    std::vector<int> degrees;   // ascending
    std::vector<int> exponents; // degrees[i] - 1
};

/// Invariant degrees of the Weyl group, extracted by expanding the Molien
/// series of the reflection representation and factoring it as
/// prod (1 - t^{d_i})^{-1}. Guarded by CapacityError at |W| > 10^7.
WeylDegrees weyl_molien_degrees(const RootSystem& rs, int degree_cap = 64);

/// Weyl-invariant pairing sum over positive roots of |<theta, alpha^vee>|;
/// equals <theta, 2 rho^vee> for dominant theta.
long long pairing_2rho(const RootSystem& rs, const WeightVec& theta);

struct MvReport {
    bool nonempty = false;
    std::optional<long long> dim_attractor;
    std::optional<long long> dim_repellent;
    long long hyperbolic_degree = 0;
};

/// Attractor/repellent dimensions and hyperbolic degree for a weight nu
/// against a dominant lambda; nonempty iff nu carries a nonzero multiplicity.
MvReport mv_report(const RootSystem& rs, const WeightVec& lambda, const WeightVec& nu);

// ---- Weyl group enumeration (also used by test oracles) ----

struct WeylElement {
    IntVec rho_image;  // w(rho) in fundamental coordinates; identifies w
    IntMat matrix;     // action on the root lattice, simple-root coordinates
    int length = 0;
};

/// Streams the Weyl group by length shells (BFS over the orbit of rho).
/// Guarded by CapacityError at 10^7 elements.
void for_each_weyl_shell(const RootSystem& rs,
                         const std::function<void(const std::vector<WeylElement>&)>& visit);

/// Per-element visitor; sign = (-1)^{length}.
void for_each_weyl_element(const RootSystem& rs,
                           const std::function<void(const WeylElement&, int sign)>& visit);

long long weyl_order(const RootSystem& rs);

/// Full Weyl orbit of a weight, in fundamental coordinates.
std::vector<IntVec> weyl_orbit(const RootSystem& rs, const WeightVec& w);

} // namespace mono
