#include "mono/engine.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <set>

#include "mono/charge.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mono {

namespace {

void check_theory(const Theory& t) {
    const auto violations = validate_theory(t);
    if (!violations.empty())
        throw ValidationError("invalid theory: " + violations.front().message);
}

long long l1_norm(const IntVec& v) {
    long long s = 0;
    for (long long c : v)
        s += c >= 0 ? c : -c;
    return s;
}

} // namespace

bool is_dominant(const GaugeGroup& g, const Coweight& theta) {
    if (static_cast<int>(theta.coords.size()) != g.rank())
        throw ValidationError("coweight length does not match the gauge rank");
    std::size_t off = 0;
    for (int n : g.factors) {
        for (int i = 0; i + 1 < n; ++i)
            if (theta.coords[off + i] < theta.coords[off + i + 1])
                return false;
        off += static_cast<std::size_t>(n);
    }
    return true;
}

Coweight dominant_normalize(const GaugeGroup& g, Coweight theta) {
    if (static_cast<int>(theta.coords.size()) != g.rank())
        throw ValidationError("coweight length does not match the gauge rank");
    std::size_t off = 0;
    for (int n : g.factors) {
        std::sort(theta.coords.begin() + static_cast<std::ptrdiff_t>(off),
                  theta.coords.begin() + static_cast<std::ptrdiff_t>(off + n),
                  std::greater<long long>());
        off += static_cast<std::size_t>(n);
    }
    return theta;
}

long long gl_pairing_2rho(const GaugeGroup& g, const Coweight& theta) {
    long long acc = 0;
    std::size_t off = 0;
    for (int n : g.factors) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                const long long d = theta.coords[off + i] - theta.coords[off + j];
                acc += d >= 0 ? d : -d;
            }
        off += static_cast<std::size_t>(n);
    }
    return acc;
}

long long matter_degree(const Theory& t, const Coweight& theta) {
    long long acc = 0;
    for (const auto& m : t.matter) {
        long long p = 0;
        for (std::size_t i = 0; i < m.weight.size(); ++i)
            p += m.weight[i] * theta.coords[i];
        acc += (p >= 0 ? p : -p) * m.mult;
    }
    return acc;
}

long long delta_exponent(const Theory& t, const Coweight& theta) {
    if (!is_dominant(t.group, theta))
        throw ValidationError("delta_exponent requires a dominant coweight");
    return matter_degree(t, theta) - gl_pairing_2rho(t.group, theta);
}

TruncatedSeries stabilizer_series_factor(const Theory& t, const Coweight& theta,
                                         int cutoff) {
    if (!is_dominant(t.group, theta))
        throw ValidationError("stabilizer_series_factor requires a dominant coweight");
    TruncatedSeries s = TruncatedSeries::one(cutoff);
    std::size_t off = 0;
    for (int n : t.group.factors) {
        int run = 1;
        for (int i = 1; i <= n; ++i) {
            if (i < n && theta.coords[off + i] == theta.coords[off + i - 1]) {
                ++run;
                continue;
            }
            for (int k = 1; k <= run; ++k)
                s.divide_one_minus_power(2 * k);
            run = 1;
        }
        off += static_cast<std::size_t>(n);
    }
    return s;
}

// ---- dominant coweight enumeration ----

namespace {

void enumerate_block(const GaugeGroup& g, std::size_t block, int pos, long long prev,
                     long long remaining, IntVec& theta,
                     const std::function<void(const Coweight&)>& visit) {
    if (block == g.factors.size()) {
        if (remaining == 0)
            visit(Coweight{theta});
        return;
    }
    const int n = g.factors[block];
    if (pos == n) {
        enumerate_block(g, block + 1, 0, std::numeric_limits<long long>::max(),
                        remaining, theta, visit);
        return;
    }
    const long long hi = std::min(prev, remaining);
    for (long long v = hi; v >= -remaining; --v) {
        theta.push_back(v);
        enumerate_block(g, block, pos + 1, v, remaining - (v >= 0 ? v : -v), theta, visit);
        theta.pop_back();
    }
}

} // namespace

void for_each_dominant_coweight_shell(const GaugeGroup& g, long long shell,
                                      const std::function<void(const Coweight&)>& visit) {
    IntVec theta;
    theta.reserve(static_cast<std::size_t>(g.rank()));
    enumerate_block(g, 0, 0, std::numeric_limits<long long>::max(), shell, theta, visit);
}

// ---- minimal slope ----

namespace {

IntVec primitive_sign_normalized(IntVec v) {
    long long g = 0;
    for (long long c : v)
        g = std::gcd(g, c < 0 ? -c : c);
    if (g > 1)
        for (auto& c : v)
            c /= g;
    for (long long c : v) {
        if (c == 0)
            continue;
        if (c < 0)
            for (auto& x : v)
                x = -x;
        break;
    }
    return v;
}

// Matter hyperplanes and chamber walls, deduplicated as primitive covectors.
IntMat cut_hyperplanes(const Theory& t) {
    std::set<IntVec> rows;
    for (const auto& m : t.matter) {
        if (std::all_of(m.weight.begin(), m.weight.end(), [](long long c) { return c == 0; }))
            continue;
        rows.insert(primitive_sign_normalized(m.weight));
    }
    const int r = t.group.rank();
    int off = 0;
    for (int n : t.group.factors) {
        for (int i = 0; i + 1 < n; ++i) {
            IntVec w(static_cast<std::size_t>(r), 0);
            w[static_cast<std::size_t>(off + i)] = 1;
            w[static_cast<std::size_t>(off + i + 1)] = -1;
            rows.insert(std::move(w));
        }
        off += n;
    }
    return IntMat(rows.begin(), rows.end());
}

BigRat slope_at(const Theory& t, const Coweight& theta) {
    return BigRat(delta_exponent(t, theta), l1_norm(theta.coords));
}

MinSlope min_slope_uncertified(const Theory& t, int radius) {
    if (radius < 1)
        throw ValidationError("uncertified scan radius must be positive");
    const int r = t.group.rank();
    MinSlope best;
    best.certified = false;
    bool found = false;
    for (long long shell = 1; shell <= static_cast<long long>(radius) * r; ++shell) {
        for_each_dominant_coweight_shell(t.group, shell, [&](const Coweight& theta) {
            for (long long c : theta.coords)
                if (c > radius || c < -radius)
                    return;
            const BigRat s = slope_at(t, theta);
            if (!found || s < best.value) {
                best.value = s;
                best.witness = theta;
                found = true;
            }
        });
    }
    if (!found)
        throw ValidationError("uncertified scan found no nonzero dominant coweight");
    return best;
}

} // namespace

MinSlope min_slope(const Theory& t, int uncertified_radius) {
    check_theory(t);
    const int r = t.group.rank();
    if (r == 0)
        throw ValidationError("min_slope is undefined for a rank-0 gauge group");

    const IntMat planes = cut_hyperplanes(t);

    // If the cut hyperplanes do not span, Delta vanishes on a line of
    // block-constant directions: the slope minimum is 0 exactly.
    const IntMat common_null = integer_kernel_basis(planes, r);
    if (!common_null.empty()) {
        MinSlope ms;
        ms.value = 0;
        ms.witness = Coweight{primitive_sign_normalized(common_null.front())};
        ms.certified = true;
        return ms;
    }

    if (r > 4)
        return min_slope_uncertified(t, uncertified_radius);

    // Delta is piecewise linear on the refinement of the dominant cone by the
    // matter hyperplanes, and every refined cell is pointed (the normals span),
    // so the slice minimum is attained on a cell ray: the nullspace of some
    // (rank-1)-subset of the normals.
    MinSlope best;
    bool found = false;
    auto consider = [&](const IntVec& direction) {
        Coweight theta{direction};
        if (l1_norm(theta.coords) == 0 || !is_dominant(t.group, theta))
            return;
        const BigRat s = slope_at(t, theta);
        if (!found || s < best.value) {
            best.value = s;
            best.witness = std::move(theta);
            found = true;
        }
    };

    const int h = static_cast<int>(planes.size());
    std::vector<int> pick;
    const std::function<void(int)> choose = [&](int start) {
        if (static_cast<int>(pick.size()) == r - 1) {
            IntMat sub;
            sub.reserve(pick.size());
            for (int idx : pick)
                sub.push_back(planes[static_cast<std::size_t>(idx)]);
            const IntMat kernel = integer_kernel_basis(sub, r);
            if (kernel.size() == 1) {
                consider(kernel.front());
                IntVec neg = kernel.front();
                for (auto& c : neg)
                    c = -c;
                consider(neg);
            }
            return;
        }
        for (int i = start; i < h; ++i) {
            pick.push_back(i);
            choose(i + 1);
            pick.pop_back();
        }
    };
    choose(0);
    if (!found)
        throw ValidationError("ray enumeration found no dominant direction");
    best.certified = true;
    return best;
}

const char* to_string(TheoryClass k) {
    switch (k) {
    case TheoryClass::Good: return "Good";
    case TheoryClass::Ugly: return "Ugly";
    case TheoryClass::Bad: return "Bad";
    }
    return "?";
}

namespace {

long long rat_ceil(const BigRat& x) {
    const BigInt num = numerator(x);
    const BigInt den = denominator(x); // positive by normalization
    BigInt q = num / den;
    if (num % den != 0 && num > 0)
        ++q;
    return q.convert_to<long long>();
}

} // namespace

ClassificationResult classify(const Theory& t) {
    check_theory(t);
    ClassificationResult res;
    if (t.group.rank() == 0) {
        // no nonzero coweights at all; the sum is the single theta = 0 term
        res.kind = TheoryClass::Good;
        res.min_slope = 0;
        res.certified = true;
        return res;
    }
    const MinSlope ms = min_slope(t);
    res.min_slope = ms.value;
    res.certified = ms.certified;

    if (ms.value < 0) {
        res.kind = TheoryClass::Bad;
        res.witness = ms.witness;
        res.min_exponent = std::nullopt; // unbounded below along the witness ray
        res.certified = true;            // the witness is a concrete lattice point
        return res;
    }
    if (ms.value == 0) {
        res.kind = TheoryClass::Bad;
        res.witness = ms.witness;
        res.min_exponent = 0;
        res.certified = true;
        return res;
    }

    // Lattice minimum of Delta: enumerate ||theta||_1 <= B and grow B until
    // m* B dominates the best value found (then nothing outside can beat it).
    long long bound = std::max<long long>(1, rat_ceil(BigRat(2) / ms.value));
    long long best = 0;
    Coweight witness;
    while (true) {
        bool found = false;
        for (long long shell = 1; shell <= bound; ++shell) {
            for_each_dominant_coweight_shell(t.group, shell, [&](const Coweight& theta) {
                const long long d = delta_exponent(t, theta);
                if (!found || d < best) {
                    best = d;
                    witness = theta;
                    found = true;
                }
            });
        }
        if (!found)
            throw ValidationError("empty dominant enumeration");
        if (ms.value * bound >= best)
            break;
        bound = rat_ceil(BigRat(best) / ms.value);
    }
    if (best <= 0)
        throw ValidationError("positive minimal slope with non-positive lattice minimum");
    res.min_exponent = best;
    res.witness = witness;
    res.kind = best >= 2 ? TheoryClass::Good : TheoryClass::Ugly;
    return res;
}

// ---- Hilbert series ----

namespace {

// Stabilizer factors depend only on the multiset of entry run lengths across
// all blocks; bucketing by (Delta, runs) collapses the enumeration.
using StabKey = std::vector<int>;

StabKey run_lengths(const GaugeGroup& g, const Coweight& theta) {
    StabKey runs;
    std::size_t off = 0;
    for (int n : g.factors) {
        int run = 1;
        for (int i = 1; i <= n; ++i) {
            if (i < n && theta.coords[off + i] == theta.coords[off + i - 1]) {
                ++run;
                continue;
            }
            runs.push_back(run);
            run = 1;
        }
        off += static_cast<std::size_t>(n);
    }
    std::sort(runs.begin(), runs.end());
    return runs;
}

TruncatedSeries stab_series_for_runs(const StabKey& runs, int cutoff) {
    TruncatedSeries s = TruncatedSeries::one(cutoff);
    for (int m : runs)
        for (int k = 1; k <= m; ++k)
            s.divide_one_minus_power(2 * k);
    return s;
}

struct SumSetup {
    ClassificationResult cls;
    long long radius = 0;
};

SumSetup setup_sum(const Theory& t, int cutoff, const HilbertOptions& opts) {
    SumSetup s;
    s.cls = classify(t);
    if (s.cls.kind == TheoryClass::Bad) {
        IntVec w = s.cls.witness ? s.cls.witness->coords : IntVec{};
        throw DivergenceError("monopole sum diverges (Bad theory)", w);
    }
    if (t.group.rank() == 0) {
        s.radius = 0;
        return s;
    }
    s.radius = rat_ceil(BigRat(cutoff) / s.cls.min_slope);
    if (s.radius < 0)
        s.radius = 0;
    s.radius *= opts.radius_scale;
    return s;
}

} // namespace

HilbertResult compute_hilbert_series(const Theory& t, int cutoff,
                                     const HilbertOptions& opts) {
    if (cutoff < 0)
        throw ValidationError("cutoff must be non-negative");
    const SumSetup setup = setup_sum(t, cutoff, opts);

    std::map<std::pair<long long, StabKey>, long long> buckets;

#ifdef _OPENMP
    const bool parallel = opts.parallel;
#else
    const bool parallel = false;
#endif

    for (long long shell = 0; shell <= setup.radius; ++shell) {
        if (!parallel) {
            for_each_dominant_coweight_shell(t.group, shell, [&](const Coweight& theta) {
                const long long d = delta_exponent(t, theta);
                if (d <= cutoff)
                    buckets[{d, run_lengths(t.group, theta)}] += 1;
            });
            continue;
        }
#ifdef _OPENMP
        std::vector<Coweight> points;
        for_each_dominant_coweight_shell(t.group, shell, [&](const Coweight& theta) {
            points.push_back(theta);
        });
        std::vector<std::map<std::pair<long long, StabKey>, long long>> partial;
#pragma omp parallel
        {
#pragma omp single
            partial.resize(static_cast<std::size_t>(omp_get_num_threads()));
            auto& local = partial[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
            for (std::size_t i = 0; i < points.size(); ++i) {
                const long long d = delta_exponent(t, points[i]);
                if (d <= cutoff)
                    local[{d, run_lengths(t.group, points[i])}] += 1;
            }
        }
        for (const auto& local : partial)
            for (const auto& [key, count] : local)
                buckets[key] += count;
#endif
    }

    TruncatedSeries series(cutoff);
    std::map<StabKey, TruncatedSeries> stab_cache;
    for (const auto& [key, count] : buckets) {
        const auto& [delta, runs] = key;
        auto it = stab_cache.find(runs);
        if (it == stab_cache.end())
            it = stab_cache.emplace(runs, stab_series_for_runs(runs, cutoff)).first;
        series.add_scaled(it->second, BigInt(count), static_cast<int>(delta));
    }

    if (series.coeff(0) != 1)
        throw ValidationError("monopole sum constant term is not 1");
    return HilbertResult{std::move(series), setup.cls.certified};
}

TruncatedSeries hilbert_series(const Theory& t, int cutoff) {
    return compute_hilbert_series(t, cutoff).series;
}

TruncatedSeries hilbert_series_serial(const Theory& t, int cutoff) {
    if (cutoff < 0)
        throw ValidationError("cutoff must be non-negative");
    HilbertOptions opts;
    opts.parallel = false;
    const SumSetup setup = setup_sum(t, cutoff, opts);
    TruncatedSeries series(cutoff);
    for (long long shell = 0; shell <= setup.radius; ++shell) {
        for_each_dominant_coweight_shell(t.group, shell, [&](const Coweight& theta) {
            const long long d = delta_exponent(t, theta);
            if (d <= cutoff)
                series.add_scaled(stabilizer_series_factor(t, theta, cutoff), BigInt(1),
                                  static_cast<int>(d));
        });
    }
    if (series.coeff(0) != 1)
        throw ValidationError("monopole sum constant term is not 1");
    return series;
}

} // namespace mono
