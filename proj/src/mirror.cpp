#include "mono/mirror.hpp"

#include <algorithm>

#include "mono/gauge.hpp"

namespace mono {

MultiSeries::MultiSeries(int t_cutoff, int nvars) : nvars_(nvars) {
    if (t_cutoff < 0)
        throw ValidationError("t-cutoff must be non-negative");
    if (nvars < 0)
        throw ValidationError("variable count must be non-negative");
    levels_.resize(static_cast<std::size_t>(t_cutoff) + 1);
}

MultiSeries MultiSeries::one(int t_cutoff, int nvars) {
    MultiSeries s(t_cutoff, nvars);
    s.levels_[0][IntVec(static_cast<std::size_t>(nvars), 0)] = 1;
    return s;
}

const std::map<IntVec, BigInt>& MultiSeries::level(int k) const {
    if (k < 0 || k > t_cutoff())
        throw ValidationError("t-degree out of range");
    return levels_[static_cast<std::size_t>(k)];
}

void MultiSeries::apply_geometric_factor(const IntVec& shift, const IntVec& prune_bound) {
    if (static_cast<int>(shift.size()) != nvars_)
        throw ValidationError("shift length does not match the variable count");
    const int cap = t_cutoff();
    for (int k = 1; k <= cap; ++k) {
        const auto& below = levels_[static_cast<std::size_t>(k - 1)];
        auto& here = levels_[static_cast<std::size_t>(k)];
        const long long budget = cap - k;
        for (const auto& [expo, coeff] : below) {
            IntVec e = expo;
            bool keep = true;
            for (int i = 0; i < nvars_; ++i) {
                e[static_cast<std::size_t>(i)] += shift[static_cast<std::size_t>(i)];
                const long long a = e[static_cast<std::size_t>(i)];
                if ((a >= 0 ? a : -a) > budget * prune_bound[static_cast<std::size_t>(i)])
                    keep = false;
            }
            if (keep)
                here[e] += coeff;
        }
    }
}

TruncatedSeries MultiSeries::constant_term() const {
    TruncatedSeries out(t_cutoff());
    const IntVec zero(static_cast<std::size_t>(nvars_), 0);
    for (int k = 0; k <= t_cutoff(); ++k) {
        const auto it = levels_[static_cast<std::size_t>(k)].find(zero);
        if (it != levels_[static_cast<std::size_t>(k)].end())
            out.set_coeff(k, it->second);
    }
    return out;
}

TruncatedSeries molien_higgs_series(const ChargeData& c, int cutoff) {
    if (cutoff < 0)
        throw ValidationError("cutoff must be non-negative");
    const int g = c.gauge_rank();
    if (g == 0) {
        // T*C^d with no quotient: 1/(1-t)^{2d}
        TruncatedSeries s = TruncatedSeries::one(cutoff);
        for (int i = 0; i < 2 * c.d; ++i)
            s.divide_one_minus_power(1);
        return s;
    }

    // per-coordinate exponent reach: one t-power moves coordinate i by at
    // most the largest |charge| in that row
    IntVec prune_bound(static_cast<std::size_t>(g), 0);
    for (int a = 0; a < g; ++a)
        for (int i = 0; i < c.d; ++i) {
            const long long v = c.gauge_charges[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)];
            prune_bound[static_cast<std::size_t>(a)] =
                std::max(prune_bound[static_cast<std::size_t>(a)], v >= 0 ? v : -v);
        }

    MultiSeries acc = MultiSeries::one(cutoff, g);
    for (int i = 0; i < c.d; ++i) {
        IntVec chi(static_cast<std::size_t>(g));
        for (int a = 0; a < g; ++a)
            chi[static_cast<std::size_t>(a)] =
                c.gauge_charges[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)];
        IntVec neg = chi;
        for (auto& v : neg)
            v = -v;
        acc.apply_geometric_factor(chi, prune_bound);
        acc.apply_geometric_factor(neg, prune_bound);
    }

    TruncatedSeries series = acc.constant_term();
    // one moment-map relation of t-degree 2 per gauge U(1)
    for (int a = 0; a < g; ++a)
        series.multiply_one_minus_power(2);
    return series;
}

MirrorReport compare_series_report(TruncatedSeries lhs, TruncatedSeries rhs, int cutoff) {
    if (cutoff > lhs.cutoff() || cutoff > rhs.cutoff())
        throw ValidationError("comparison degree exceeds a series cutoff");
    MirrorReport report{true, std::move(lhs), std::move(rhs), std::nullopt, true};
    for (int k = 0; k <= cutoff; ++k) {
        if (report.lhs.coeff(k) != report.rhs.coeff(k)) {
            report.equal = false;
            report.first_mismatch_degree = k;
            break;
        }
    }
    return report;
}

MirrorReport mirror_check(const ChargeData& c, int cutoff) {
    const Theory coulomb = toric_to_theory(c);
    const HilbertResult lhs = compute_hilbert_series(coulomb, cutoff);
    TruncatedSeries rhs = molien_higgs_series(gale_dual(c), cutoff);
    MirrorReport report = compare_series_report(std::move(lhs.series), std::move(rhs), cutoff);
    report.certified = lhs.certified;
    return report;
}

} // namespace mono
