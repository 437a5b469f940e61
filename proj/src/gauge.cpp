#include "mono/gauge.hpp"

#include <algorithm>

namespace mono {

Theory quiver_to_theory(const QuiverTheory& q) {
    if (q.vertices <= 0)
        throw ValidationError("quiver must have at least one vertex");
    if (static_cast<int>(q.dim_v.size()) != q.vertices ||
        static_cast<int>(q.dim_w.size()) != q.vertices)
        throw ValidationError("dimension vectors must match the vertex count");
    for (int v : q.dim_v)
        if (v < 0)
            throw ValidationError("gauge dimensions must be non-negative");
    for (int w : q.dim_w)
        if (w < 0)
            throw ValidationError("framing dimensions must be non-negative");
    for (const auto& [t, h] : q.edges)
        if (t < 0 || t >= q.vertices || h < 0 || h >= q.vertices)
            throw ValidationError("edge endpoint out of range");
    if (std::all_of(q.dim_v.begin(), q.dim_v.end(), [](int v) { return v == 0; }))
        throw ValidationError("quiver has an empty gauge group (all dimV zero)");

    Theory t;
    std::vector<int> block_offset(static_cast<std::size_t>(q.vertices), -1);
    int rank = 0;
    for (int j = 0; j < q.vertices; ++j) {
        if (q.dim_v[static_cast<std::size_t>(j)] == 0)
            continue;
        block_offset[static_cast<std::size_t>(j)] = rank;
        t.group.factors.push_back(q.dim_v[static_cast<std::size_t>(j)]);
        rank += q.dim_v[static_cast<std::size_t>(j)];
    }

    auto add_weight = [&](IntVec w) {
        t.matter.push_back(MatterWeight{std::move(w), 1});
    };

    // Hom(V_t, V_h): weights e^{(h)}_a - e^{(t)}_b.
    for (const auto& [tail, head] : q.edges) {
        const int nt = q.dim_v[static_cast<std::size_t>(tail)];
        const int nh = q.dim_v[static_cast<std::size_t>(head)];
        for (int a = 0; a < nh; ++a) {
            for (int b = 0; b < nt; ++b) {
                IntVec w(static_cast<std::size_t>(rank), 0);
                w[static_cast<std::size_t>(block_offset[static_cast<std::size_t>(head)] + a)] += 1;
                w[static_cast<std::size_t>(block_offset[static_cast<std::size_t>(tail)] + b)] -= 1;
                add_weight(std::move(w));
            }
        }
    }
    // Hom(W_j, V_j): weights +e^{(j)}_b, each dimW_j times.
    for (int j = 0; j < q.vertices; ++j) {
        const int nv = q.dim_v[static_cast<std::size_t>(j)];
        const int nw = q.dim_w[static_cast<std::size_t>(j)];
        if (nv == 0 || nw == 0)
            continue;
        for (int b = 0; b < nv; ++b) {
            IntVec w(static_cast<std::size_t>(rank), 0);
            w[static_cast<std::size_t>(block_offset[static_cast<std::size_t>(j)] + b)] = 1;
            t.matter.push_back(MatterWeight{std::move(w), nw});
        }
    }
    return t;
}

Theory toric_to_theory(const ChargeData& c) {
    Theory t;
    const int g = c.gauge_rank();
    t.group.factors.assign(static_cast<std::size_t>(g), 1);
    for (int i = 0; i < c.d; ++i) {
        IntVec w(static_cast<std::size_t>(g));
        for (int a = 0; a < g; ++a)
            w[static_cast<std::size_t>(a)] =
                c.gauge_charges[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)];
        t.matter.push_back(MatterWeight{std::move(w), 1});
    }
    return t;
}

std::vector<Violation> validate_theory(const Theory& t) {
    std::vector<Violation> out;
    for (std::size_t i = 0; i < t.group.factors.size(); ++i) {
        if (t.group.factors[i] < 1)
            out.push_back({"FACTOR_SIZE",
                           "gauge factor " + std::to_string(i) + " has size < 1"});
    }
    const int rank = t.group.rank();
    for (std::size_t i = 0; i < t.matter.size(); ++i) {
        const auto& m = t.matter[i];
        if (static_cast<int>(m.weight.size()) != rank)
            out.push_back({"WEIGHT_LEN",
                           "matter weight " + std::to_string(i) + " has length " +
                               std::to_string(m.weight.size()) + ", expected " +
                               std::to_string(rank)});
        if (m.mult < 1)
            out.push_back({"MULT_ZERO",
                           "matter weight " + std::to_string(i) + " has multiplicity " +
                               std::to_string(m.mult)});
    }
    return out;
}

} // namespace mono
