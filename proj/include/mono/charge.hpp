#pragma once

#include "mono/errors.hpp"
#include "mono/intvec.hpp"
#include "mono/numeric.hpp"

namespace mono {

/// Integer charge datum of an abelian gauge theory, encoding the exact
/// sequence 0 -> Z^g -> Z^d -> Z^{d-g} -> 0 of free lattices. gauge_charges
/// holds the g rows of U(1) charges of the d hypermultiplets; flavor_charges
/// is derived as the Hermite-normal basis of the integer kernel.
struct ChargeData {
    int d = 0;
    IntMat gauge_charges;  // g x d, full row rank
    IntMat flavor_charges; // (d-g) x d, derived kernel basis
    /// All Smith invariant factors equal 1, i.e. the datum really is an exact
    /// sequence of free lattices. Charge matrices with torsion still define a
    /// gauge theory, but have no Gale dual.
    bool torsion_free = true;

    int gauge_rank() const noexcept { return static_cast<int>(gauge_charges.size()); }

    /// Validates full row rank and fills the flavor rows.
    /// Throws ValidationError otherwise.
    static ChargeData make(int d, IntMat gauge_charges);

    bool operator==(const ChargeData&) const = default;
};

/// Swaps the two ends of the exact sequence: the dual datum has
/// gauge_charges = flavor_charges of the input. Throws ValidationError when
/// the cokernel has torsion.
ChargeData gale_dual(const ChargeData& c);

// Exact integer lattice helpers (arbitrary precision internally).

/// Canonical row Hermite normal form; zero rows dropped.
IntMat row_hnf(const IntMat& m);

std::vector<BigInt> smith_invariant_factors(const IntMat& m);

/// Rows span {x in Z^cols : m x = 0}; HNF-canonical. `cols` disambiguates
/// empty matrices.
IntMat integer_kernel_basis(const IntMat& m, int cols);

} // namespace mono
