#include "mono/root_system.hpp"

#include <algorithm>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mono {

namespace {

constexpr long long kWeylGuard = 10'000'000;

// Closed-form |W| per type, saturated just above the guard; lets the capacity
// check fire before enumerating anything.
long long weyl_order_formula(SimpleSeries s, int n) {
    auto sat_mul = [](long long a, long long b) {
        return (a > kWeylGuard || b > kWeylGuard || a * b > kWeylGuard) ? kWeylGuard + 1
                                                                        : a * b;
    };
    auto factorial = [&](int k) {
        long long f = 1;
        for (int i = 2; i <= k; ++i)
            f = sat_mul(f, i);
        return f;
    };
    auto pow2 = [&](int k) {
        long long f = 1;
        for (int i = 0; i < k; ++i)
            f = sat_mul(f, 2);
        return f;
    };
    switch (s) {
    case SimpleSeries::A: return factorial(n + 1);
    case SimpleSeries::B:
    case SimpleSeries::C: return sat_mul(pow2(n), factorial(n));
    case SimpleSeries::D: return sat_mul(pow2(n - 1), factorial(n));
    case SimpleSeries::E: return n == 6 ? 51840 : (n == 7 ? 2903040 : 696729600LL);
    case SimpleSeries::F: return 1152;
    case SimpleSeries::G: return 12;
    }
    return kWeylGuard + 1;
}

std::string encode_fund(const IntVec& fund) {
    std::string key;
    key.reserve(fund.size() * 2);
    for (long long c : fund) {
        const auto v = static_cast<std::int16_t>(c);
        key.push_back(static_cast<char>(v & 0xff));
        key.push_back(static_cast<char>((v >> 8) & 0xff));
    }
    return key;
}

// Left-multiply the root-lattice matrix by the simple reflection s_i:
// only row i changes, to row_i - sum_k A_ik row_k.
void left_reflect_matrix(const IntMat& cartan, int i, const IntMat& m, IntMat& out) {
    out = m;
    const int n = static_cast<int>(m.size());
    for (int c = 0; c < n; ++c) {
        long long acc = 0;
        for (int k = 0; k < n; ++k)
            acc += cartan[i][k] * m[k][c];
        out[i][c] = m[i][c] - acc;
    }
}

} // namespace

void for_each_weyl_shell(const RootSystem& rs,
                         const std::function<void(const std::vector<WeylElement>&)>& visit) {
    const int n = rs.rank();
    if (weyl_order_formula(rs.series(), n) > kWeylGuard)
        throw CapacityError("Weyl group enumeration exceeds 10^7 elements");
    std::unordered_set<std::string> seen;

    WeylElement identity;
    identity.rho_image.assign(static_cast<std::size_t>(n), 1);
    identity.matrix.assign(static_cast<std::size_t>(n), IntVec(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i)
        identity.matrix[i][i] = 1;
    identity.length = 0;
    seen.insert(encode_fund(identity.rho_image));

    std::vector<WeylElement> shell{identity};
    long long total = 1;
    while (!shell.empty()) {
        visit(shell);
        std::vector<WeylElement> next;
        for (const auto& w : shell) {
            for (int i = 0; i < n; ++i) {
                IntVec img = w.rho_image;
                rs.apply_simple_reflection(i, img);
                auto key = encode_fund(img);
                if (seen.count(key))
                    continue;
                if (++total > kWeylGuard)
                    throw CapacityError("Weyl group enumeration exceeds 10^7 elements");
                seen.insert(std::move(key));
                WeylElement e;
                e.rho_image = std::move(img);
                left_reflect_matrix(rs.cartan(), i, w.matrix, e.matrix);
                e.length = w.length + 1;
                next.push_back(std::move(e));
            }
        }
        shell = std::move(next);
    }
}

void for_each_weyl_element(const RootSystem& rs,
                           const std::function<void(const WeylElement&, int sign)>& visit) {
    for_each_weyl_shell(rs, [&](const std::vector<WeylElement>& shell) {
        const int sign = shell.front().length % 2 == 0 ? 1 : -1;
        for (const auto& w : shell)
            visit(w, sign);
    });
}

long long weyl_order(const RootSystem& rs) {
    long long count = 0;
    for_each_weyl_shell(rs, [&](const std::vector<WeylElement>& shell) {
        count += static_cast<long long>(shell.size());
    });
    return count;
}

std::vector<IntVec> weyl_orbit(const RootSystem& rs, const WeightVec& w) {
    const IntVec start = rs.to_fundamental(w);
    std::unordered_set<std::string> seen{encode_fund(start)};
    std::vector<IntVec> orbit{start};
    std::vector<IntVec> frontier{start};
    while (!frontier.empty()) {
        std::vector<IntVec> next;
        for (const auto& v : frontier) {
            for (int i = 0; i < rs.rank(); ++i) {
                IntVec img = v;
                rs.apply_simple_reflection(i, img);
                auto key = encode_fund(img);
                if (seen.count(key))
                    continue;
                if (static_cast<long long>(orbit.size()) + 1 > kWeylGuard)
                    throw CapacityError("Weyl orbit enumeration exceeds 10^7 elements");
                seen.insert(std::move(key));
                orbit.push_back(img);
                next.push_back(std::move(img));
            }
        }
        frontier = std::move(next);
    }
    return orbit;
}

namespace {

// Coefficients of det(1 - t M) for an integer matrix M, via the
// Faddeev-LeVerrier characteristic polynomial recursion (exact divisions).
IntVec det_one_minus_t(const IntMat& m) {
    const int n = static_cast<int>(m.size());
    IntVec coeffs(static_cast<std::size_t>(n) + 1, 0);
    coeffs[0] = 1;
    IntMat mk = m;
    for (int k = 1; k <= n; ++k) {
        long long trace = 0;
        for (int i = 0; i < n; ++i)
            trace += mk[i][i];
        const long long a = -trace / k; // exact for integer characteristic polynomials
        if ((-trace) % k != 0)
            throw ValidationError("characteristic polynomial recursion not integral");
        coeffs[static_cast<std::size_t>(k)] = a;
        if (k == n)
            break;
        // mk <- m (mk + a I)
        IntMat b = mk;
        for (int i = 0; i < n; ++i)
            b[i][i] += a;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                long long acc = 0;
                for (int l = 0; l < n; ++l)
                    acc += m[i][l] * b[l][j];
                mk[i][j] = acc;
            }
        }
    }
    return coeffs;
}

// 1 / (sum_k c_k t^k) truncated at cap, c_0 = 1. Coefficients are bounded by
// those of 1/(1-t)^n since the eigenvalues are roots of unity.
void invert_series(const IntVec& c, int cap, IntVec& out) {
    out.assign(static_cast<std::size_t>(cap) + 1, 0);
    out[0] = 1;
    const int deg = static_cast<int>(c.size()) - 1;
    for (int k = 1; k <= cap; ++k) {
        long long acc = 0;
        for (int j = 1; j <= std::min(k, deg); ++j)
            acc -= c[static_cast<std::size_t>(j)] * out[static_cast<std::size_t>(k - j)];
        out[static_cast<std::size_t>(k)] = acc;
    }
}

BigInt binomial(long long n, long long k) {
    BigInt out = 1;
    for (long long i = 1; i <= k; ++i) {
        out *= n - k + i;
        out /= i;
    }
    return out;
}

} // namespace

WeylDegrees weyl_molien_degrees(const RootSystem& rs, int degree_cap) {
    const int n = rs.rank();
    if (degree_cap < 2)
        throw ValidationError("degree_cap must be at least 2");
    // The per-element inverse series stays within int64 only while the
    // dominating bound C(cap+n-1, n-1) does.
    if (binomial(degree_cap + n - 1, n - 1) > BigInt(std::numeric_limits<long long>::max() / 4))
        throw ValidationError("degree_cap too large for exact int64 expansion");

    std::vector<BigInt> molien(static_cast<std::size_t>(degree_cap) + 1, 0);
    long long order = 0;
    for_each_weyl_shell(rs, [&](const std::vector<WeylElement>& shell) {
        order += static_cast<long long>(shell.size());
        std::vector<std::vector<BigInt>> partial;
#ifdef _OPENMP
#pragma omp parallel
        {
#pragma omp single
            partial.assign(static_cast<std::size_t>(omp_get_num_threads()),
                           std::vector<BigInt>(molien.size(), 0));
            auto& local = partial[static_cast<std::size_t>(omp_get_thread_num())];
            IntVec inv;
#pragma omp for schedule(static)
            for (std::size_t idx = 0; idx < shell.size(); ++idx) {
                invert_series(det_one_minus_t(shell[idx].matrix), degree_cap, inv);
                for (std::size_t k = 0; k < inv.size(); ++k)
                    local[k] += inv[k];
            }
        }
#else
        partial.assign(1, std::vector<BigInt>(molien.size(), 0));
        IntVec inv;
        for (const auto& w : shell) {
            invert_series(det_one_minus_t(w.matrix), degree_cap, inv);
            for (std::size_t k = 0; k < inv.size(); ++k)
                partial[0][k] += inv[k];
        }
#endif
        for (const auto& local : partial)
            for (std::size_t k = 0; k < molien.size(); ++k)
                molien[k] += local[k];
    });

    for (auto& c : molien) {
        if (c % order != 0)
            throw ValidationError("Molien series averaging is not integral");
        c /= order;
    }

    // Factor as prod (1 - t^{d_i})^{-1}: peel the lowest nonzero degree n times.
    WeylDegrees result;
    for (int factor = 0; factor < n; ++factor) {
        int d = 0;
        for (int k = 1; k <= degree_cap; ++k) {
            if (molien[static_cast<std::size_t>(k)] != 0) {
                d = k;
                break;
            }
        }
        if (d == 0)
            throw ValidationError("degree_cap too small to factor the Molien series");
        result.degrees.push_back(d);
        for (int k = degree_cap; k >= d; --k)
            molien[static_cast<std::size_t>(k)] -= molien[static_cast<std::size_t>(k - d)];
    }
    if (molien[0] != 1)
        throw ValidationError("Molien factorization failed");
    for (int k = 1; k <= degree_cap; ++k)
        if (molien[static_cast<std::size_t>(k)] != 0)
            throw ValidationError("degree_cap too small: Molien residue is not 1");

    std::sort(result.degrees.begin(), result.degrees.end());
    for (int d : result.degrees)
        result.exponents.push_back(d - 1);
    return result;
}

} // namespace mono
