#pragma once

// Test-only oracles, independent of the implementation paths they check.

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "mono/numeric.hpp"
#include "mono/root_system.hpp"

namespace mono::testing {

inline long long cartan_det(const IntMat& a) {
    const int n = static_cast<int>(a.size());
    if (n == 1)
        return a[0][0];
    long long det = 0;
    for (int j = 0; j < n; ++j) {
        if (a[0][static_cast<std::size_t>(j)] == 0)
            continue;
        IntMat minor(static_cast<std::size_t>(n - 1), IntVec(static_cast<std::size_t>(n - 1)));
        for (int i = 1; i < n; ++i) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j)
                    continue;
                minor[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(cc++)] =
                    a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
            }
        }
        det += (j % 2 == 0 ? 1 : -1) * a[0][static_cast<std::size_t>(j)] * cartan_det(minor);
    }
    return det;
}

/// Weight multiplicity via the Kostant alternating sum
///   m(mu) = sum_w det(w) P(w(lambda+rho) - (mu+rho))
/// with a memoized partition function over the positive roots. Brute force;
/// only suitable for small groups.
class KostantOracle {
public:
    explicit KostantOracle(const RootSystem& rs)
        : rs_(rs), det_(cartan_det(rs.cartan())) {
        for_each_weyl_element(rs, [&](const WeylElement& w, int sign) {
            elements_.emplace_back(w.matrix, sign);
        });
    }

    long long multiplicity(const IntVec& lambda_fund, const IntVec& mu_fund) {
        const int r = rs_.rank();
        IntVec lam_rho(lambda_fund), mu_rho(mu_fund);
        for (auto& c : lam_rho)
            c += 1;
        for (auto& c : mu_rho)
            c += 1;
        const IntVec u = scaled_root_coords(lam_rho);
        const IntVec v = scaled_root_coords(mu_rho);
        BigInt acc = 0;
        for (const auto& [matrix, sign] : elements_) {
            IntVec arg(static_cast<std::size_t>(r));
            bool integral = true;
            for (int i = 0; i < r && integral; ++i) {
                long long w = 0;
                for (int j = 0; j < r; ++j)
                    w += matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                         u[static_cast<std::size_t>(j)];
                w -= v[static_cast<std::size_t>(i)];
                if (w % det_ != 0)
                    integral = false;
                else
                    arg[static_cast<std::size_t>(i)] = w / det_;
            }
            if (!integral)
                continue;
            acc += sign * partitions(static_cast<int>(rs_.positive_roots().size()) - 1, arg);
        }
        return acc.convert_to<long long>();
    }

private:
    const RootSystem& rs_;
    long long det_;
    std::vector<std::pair<IntMat, int>> elements_;
    std::map<std::pair<int, IntVec>, BigInt> memo_;

    // simple-root coordinates scaled by det(A), kept integral
    IntVec scaled_root_coords(const IntVec& fund) const {
        const auto rat = rs_.rational_root_coords(fund);
        IntVec out(rat.size());
        for (std::size_t i = 0; i < rat.size(); ++i) {
            const BigRat scaled = rat[i] * det_;
            if (denominator(scaled) != 1)
                throw std::logic_error("scaled root coordinates not integral");
            out[i] = numerator(scaled).convert_to<long long>();
        }
        return out;
    }

    // Number of ways to write v (simple-root coordinates) as an N-combination
    // of the positive roots with index <= i.
    BigInt partitions(int i, const IntVec& v) {
        bool zero = true;
        for (long long c : v) {
            if (c < 0)
                return 0;
            if (c != 0)
                zero = false;
        }
        if (zero)
            return 1;
        if (i < 0)
            return 0;
        const auto key = std::make_pair(i, v);
        const auto it = memo_.find(key);
        if (it != memo_.end())
            return it->second;
        IntVec reduced = v;
        const IntVec& beta = rs_.positive_roots()[static_cast<std::size_t>(i)];
        for (std::size_t j = 0; j < v.size(); ++j)
            reduced[j] -= beta[j];
        const BigInt out = partitions(i - 1, v) + partitions(i, reduced);
        memo_.emplace(key, out);
        return out;
    }
};

/// All dominant weights mu with mu <= lambda (fundamental coordinates),
/// by a bounded box scan filtered through the dominance test.
inline std::vector<IntVec> dominant_weights_below(const RootSystem& rs,
                                                  const IntVec& lambda_fund) {
    const int r = rs.rank();
    const long long height = rs.signed_pairing_2rho(lambda_fund);
    std::vector<IntVec> out;
    IntVec mu(static_cast<std::size_t>(r), 0);
    const std::function<void(int)> scan = [&](int i) {
        if (rs.signed_pairing_2rho(mu) > height)
            return;
        if (i == r) {
            IntVec diff = lambda_fund;
            for (int j = 0; j < r; ++j)
                diff[static_cast<std::size_t>(j)] -= mu[static_cast<std::size_t>(j)];
            const auto root = rs.integral_root_coords(diff);
            if (!root)
                return;
            for (long long c : *root)
                if (c < 0)
                    return;
            out.push_back(mu);
            return;
        }
        for (long long c = 0; c <= height; ++c) {
            mu[static_cast<std::size_t>(i)] = c;
            scan(i + 1);
        }
        mu[static_cast<std::size_t>(i)] = 0;
    };
    scan(0);
    return out;
}

/// All dominant lambda with <lambda, 2 rho^vee> bounded (fundamental
/// coordinates).
inline std::vector<IntVec> dominant_weights_paired_below(const RootSystem& rs,
                                                         long long pairing_bound) {
    const int r = rs.rank();
    std::vector<IntVec> out;
    IntVec lam(static_cast<std::size_t>(r), 0);
    const std::function<void(int)> scan = [&](int i) {
        if (rs.signed_pairing_2rho(lam) > pairing_bound)
            return;
        if (i == r) {
            out.push_back(lam);
            return;
        }
        for (long long c = 0; c <= pairing_bound; ++c) {
            lam[static_cast<std::size_t>(i)] = c;
            scan(i + 1);
            if (rs.signed_pairing_2rho(lam) > pairing_bound)
                break;
        }
        lam[static_cast<std::size_t>(i)] = 0;
    };
    scan(0);
    return out;
}

} // namespace mono::testing
