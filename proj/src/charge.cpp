#include "mono/charge.hpp"

#include <algorithm>
#include <limits>

namespace mono {

namespace {

using BigMat = std::vector<std::vector<BigInt>>;

BigMat to_big(const IntMat& m, int cols) {
    BigMat out(m.size(), std::vector<BigInt>(static_cast<std::size_t>(cols)));
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (static_cast<int>(m[i].size()) != cols)
            throw ValidationError("charge matrix rows must have equal length");
        for (int j = 0; j < cols; ++j)
            out[i][static_cast<std::size_t>(j)] = m[i][static_cast<std::size_t>(j)];
    }
    return out;
}

IntMat from_big(const BigMat& m) {
    IntMat out(m.size(), IntVec(m.empty() ? 0 : m[0].size()));
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < m[i].size(); ++j) {
            if (m[i][j] > std::numeric_limits<long long>::max() ||
                m[i][j] < std::numeric_limits<long long>::min())
                throw ValidationError("lattice computation exceeds int64 range");
            out[i][j] = m[i][j].convert_to<long long>();
        }
    }
    return out;
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

// Row Hermite normal form in place; returns the rank. Pivots positive,
// entries above a pivot reduced into [0, pivot).
int hnf_rows_inplace(BigMat& m) {
    const int rows = static_cast<int>(m.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot = -1;
        for (int i = r; i < rows; ++i)
            if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] != 0) { pivot = i; break; }
        if (pivot < 0)
            continue;
        std::swap(m[static_cast<std::size_t>(r)], m[static_cast<std::size_t>(pivot)]);
        for (int i = r + 1; i < rows; ++i) {
            while (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] != 0) {
                const BigInt q = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] /
                                 m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
                for (int j = 0; j < cols; ++j)
                    m[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] -=
                        q * m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                std::swap(m[static_cast<std::size_t>(r)], m[static_cast<std::size_t>(i)]);
            }
        }
        if (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] < 0)
            for (int j = 0; j < cols; ++j)
                m[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] =
                    -m[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
        for (int i = 0; i < r; ++i) {
            const BigInt q = floor_div(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)],
                                       m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
            if (q == 0)
                continue;
            for (int j = 0; j < cols; ++j)
                m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
                    q * m[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
        }
        ++r;
    }
    return r;
}

} // namespace

IntMat row_hnf(const IntMat& m) {
    if (m.empty())
        return {};
    BigMat big = to_big(m, static_cast<int>(m[0].size()));
    const int rank = hnf_rows_inplace(big);
    big.resize(static_cast<std::size_t>(rank));
    return from_big(big);
}

std::vector<BigInt> smith_invariant_factors(const IntMat& mat) {
    if (mat.empty())
        return {};
    BigMat m = to_big(mat, static_cast<int>(mat[0].size()));
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    std::vector<BigInt> factors;
    int t = 0;
    while (t < rows && t < cols) {
        // pick the nonzero entry of smallest magnitude as pivot
        int pr = -1, pc = -1;
        BigInt best = 0;
        for (int i = t; i < rows; ++i) {
            for (int j = t; j < cols; ++j) {
                const BigInt v = abs(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
                if (v != 0 && (pr < 0 || v < best)) {
                    best = v; pr = i; pc = j;
                }
            }
        }
        if (pr < 0)
            break;
        std::swap(m[static_cast<std::size_t>(t)], m[static_cast<std::size_t>(pr)]);
        for (int i = 0; i < rows; ++i)
            std::swap(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)],
                      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(pc)]);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = t + 1; i < rows; ++i) {
                if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)] == 0)
                    continue;
                const BigInt q = floor_div(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)],
                                           m[static_cast<std::size_t>(t)][static_cast<std::size_t>(t)]);
                for (int j = t; j < cols; ++j)
                    m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
                        q * m[static_cast<std::size_t>(t)][static_cast<std::size_t>(j)];
                if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)] != 0) {
                    std::swap(m[static_cast<std::size_t>(t)], m[static_cast<std::size_t>(i)]);
                    clean = false;
                }
            }
            for (int j = t + 1; j < cols; ++j) {
                if (m[static_cast<std::size_t>(t)][static_cast<std::size_t>(j)] == 0)
                    continue;
                const BigInt q = floor_div(m[static_cast<std::size_t>(t)][static_cast<std::size_t>(j)],
                                           m[static_cast<std::size_t>(t)][static_cast<std::size_t>(t)]);
                for (int i = t; i < rows; ++i)
                    m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
                        q * m[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)];
                if (m[static_cast<std::size_t>(t)][static_cast<std::size_t>(j)] != 0) {
                    for (int i = t; i < rows; ++i)
                        std::swap(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)],
                                  m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
                    clean = false;
                }
            }
        }
        // pivot must divide the rest of the submatrix
        bool divides = true;
        for (int i = t + 1; i < rows && divides; ++i) {
            for (int j = t + 1; j < cols && divides; ++j) {
                if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] %
                        m[static_cast<std::size_t>(t)][static_cast<std::size_t>(t)] != 0) {
                    for (int jj = t; jj < cols; ++jj)
                        m[static_cast<std::size_t>(t)][static_cast<std::size_t>(jj)] +=
                            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(jj)];
                    divides = false;
                }
            }
        }
        if (!divides)
            continue;
        factors.push_back(abs(m[static_cast<std::size_t>(t)][static_cast<std::size_t>(t)]));
        ++t;
    }
    return factors;
}

IntMat integer_kernel_basis(const IntMat& m, int cols) {
    const int g = static_cast<int>(m.size());
    if (g == 0) {
        IntMat identity(static_cast<std::size_t>(cols), IntVec(static_cast<std::size_t>(cols), 0));
        for (int i = 0; i < cols; ++i)
            identity[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
        return identity;
    }
    // Row-reduce [m^T | I]; rows with zero m^T part carry the kernel of m.
    BigMat aug(static_cast<std::size_t>(cols),
               std::vector<BigInt>(static_cast<std::size_t>(g + cols), 0));
    for (int i = 0; i < cols; ++i) {
        for (int j = 0; j < g; ++j)
            aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                m[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
        aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(g + i)] = 1;
    }
    hnf_rows_inplace(aug);
    IntMat kernel;
    for (int i = 0; i < cols; ++i) {
        bool zero = true;
        for (int j = 0; j < g; ++j)
            if (aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 0) { zero = false; break; }
        if (!zero)
            continue;
        BigMat row(1, std::vector<BigInt>(static_cast<std::size_t>(cols)));
        for (int j = 0; j < cols; ++j)
            row[0][static_cast<std::size_t>(j)] = aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(g + j)];
        kernel.push_back(from_big(row)[0]);
    }
    return row_hnf(kernel);
}

ChargeData ChargeData::make(int d, IntMat gauge_charges) {
    if (d < 0)
        throw ValidationError("hypermultiplet count must be non-negative");
    const int g = static_cast<int>(gauge_charges.size());
    for (const auto& row : gauge_charges)
        if (static_cast<int>(row.size()) != d)
            throw ValidationError("gauge charge rows must have length d");
    if (g > d)
        throw ValidationError("gauge rank exceeds the number of hypermultiplets");

    ChargeData c;
    c.d = d;
    if (g > 0) {
        const auto factors = smith_invariant_factors(gauge_charges);
        if (static_cast<int>(factors.size()) != g)
            throw ValidationError("gauge charge matrix must have full row rank");
        for (const auto& f : factors)
            if (f != 1)
                c.torsion_free = false;
    }
    c.flavor_charges = integer_kernel_basis(gauge_charges, d);
    c.gauge_charges = std::move(gauge_charges);
    if (static_cast<int>(c.flavor_charges.size()) != d - g)
        throw ValidationError("kernel basis has unexpected rank");
    return c;
}

ChargeData gale_dual(const ChargeData& c) {
    if (!c.torsion_free)
        throw ValidationError(
            "gauge charge cokernel has torsion; the lattice sequence is not exact "
            "and the datum has no Gale dual");
    return ChargeData::make(c.d, c.flavor_charges);
}

} // namespace mono
