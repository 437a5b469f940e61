#include "mono/slices.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace mono {

namespace {

void check_quiver_matches_diagram(const QuiverTheory& q, const RootSystem& rs) {
    if (q.vertices != rs.rank())
        throw ValidationError("quiver vertex count does not match the flavor rank");
    std::map<std::pair<int, int>, int> quiver_edges;
    for (const auto& [t, h] : q.edges) {
        if (t == h)
            throw ValidationError("loop edges cannot appear in a Dynkin quiver");
        quiver_edges[{std::min(t, h), std::max(t, h)}] += 1;
    }
    std::map<std::pair<int, int>, int> dynkin_edges;
    for (int i = 0; i < rs.rank(); ++i)
        for (int j = i + 1; j < rs.rank(); ++j)
            if (rs.cartan()[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 0)
                dynkin_edges[{i, j}] = 1;
    if (quiver_edges != dynkin_edges)
        throw ValidationError("quiver underlying graph is not the Dynkin diagram of the flavor type");
}

} // namespace

SliceData slice_data(const QuiverTheory& q, SimpleSeries flavor_series, int flavor_rank) {
    if (flavor_series != SimpleSeries::A && flavor_series != SimpleSeries::D &&
        flavor_series != SimpleSeries::E)
        throw ValidationError("slice dictionary requires an ADE flavor type");
    const RootSystem rs = RootSystem::build(flavor_series, flavor_rank);
    check_quiver_matches_diagram(q, rs);
    if (static_cast<int>(q.dim_v.size()) != flavor_rank ||
        static_cast<int>(q.dim_w.size()) != flavor_rank)
        throw ValidationError("dimension vectors must match the flavor rank");

    const int r = flavor_rank;
    SliceData s;
    s.flavor_series = flavor_series;
    s.flavor_rank = r;
    IntVec lambda(static_cast<std::size_t>(r)), alpha(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) {
        lambda[static_cast<std::size_t>(i)] = q.dim_w[static_cast<std::size_t>(i)];
        alpha[static_cast<std::size_t>(i)] = q.dim_v[static_cast<std::size_t>(i)];
    }
    IntVec alpha_fund = rs.to_fundamental(root_weight(alpha));
    IntVec mu(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i)
        mu[static_cast<std::size_t>(i)] =
            lambda[static_cast<std::size_t>(i)] - alpha_fund[static_cast<std::size_t>(i)];

    s.lambda = fund_weight(lambda);
    s.mu = fund_weight(mu);
    s.alpha = root_weight(alpha);
    s.nonempty = dominance_leq(rs, s.mu, s.lambda);
    if (s.nonempty)
        s.dim = rs.signed_pairing_2rho(alpha_fund); // <2 rho^vee, lambda - mu>
    s.fixed_point_multiplicity = freudenthal_multiplicity(rs, s.lambda, s.mu);
    s.has_fixed_point = s.fixed_point_multiplicity > 0;
    return s;
}

int estimate_pole_order(const TruncatedSeries& s) {
    const int cutoff = s.cutoff();
    if (cutoff < 8)
        return 0;
    auto window_max = [&](int hi) {
        double m = 0;
        for (int k = std::max(0, hi - 3); k <= hi; ++k)
            m = std::max(m, std::abs(s.coeff(k).convert_to<double>()));
        return m;
    };
    const double hi = window_max(cutoff);
    const double lo = window_max(cutoff / 2);
    if (hi <= 0 || lo <= 0)
        return 0;
    const double growth = std::log2(hi / lo);
    const int estimate = static_cast<int>(std::lround(growth)) + 1;
    return std::max(estimate, 0);
}

SliceReport slice_report(const QuiverTheory& q, SimpleSeries flavor_series,
                         int flavor_rank, int cutoff) {
    SliceReport report;
    report.data = slice_data(q, flavor_series, flavor_rank);

    const Theory theory = quiver_to_theory(q);
    const ClassificationResult cls = classify(theory);
    report.classification = cls;
    report.certified = cls.certified;
    if (cls.kind == TheoryClass::Bad) {
        report.monopole_diverged = true;
        if (cls.witness)
            report.divergence_witness = cls.witness->coords;
        return report;
    }
    HilbertResult hr = compute_hilbert_series(theory, cutoff);
    report.certified = hr.certified;
    report.pole_order_estimate = estimate_pole_order(hr.series);
    report.series = std::move(hr.series);
    return report;
}

} // namespace mono
