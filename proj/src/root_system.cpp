#include "mono/root_system.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace mono {

SimpleSeries series_from_char(char c) {
    switch (c) {
    case 'A': return SimpleSeries::A;
    case 'B': return SimpleSeries::B;
    case 'C': return SimpleSeries::C;
    case 'D': return SimpleSeries::D;
    case 'E': return SimpleSeries::E;
    case 'F': return SimpleSeries::F;
    case 'G': return SimpleSeries::G;
    default:
        throw ValidationError(std::string("unknown series '") + c + "'");
    }
}

char series_to_char(SimpleSeries s) { return static_cast<char>(s); }

namespace {

void validate_type(SimpleSeries s, int rank) {
    bool ok = false;
    switch (s) {
    case SimpleSeries::A: ok = rank >= 1; break;
    case SimpleSeries::B: ok = rank >= 2; break;
    case SimpleSeries::C: ok = rank >= 2; break;
    case SimpleSeries::D: ok = rank >= 3; break; // D3 = A3 accepted
    case SimpleSeries::E: ok = rank >= 6 && rank <= 8; break;
    case SimpleSeries::F: ok = rank == 4; break;
    case SimpleSeries::G: ok = rank == 2; break;
    }
    if (!ok)
        throw ValidationError(std::string("invalid simple type ") + series_to_char(s) +
                              std::to_string(rank));
}

IntMat cartan_matrix(SimpleSeries s, int n) {
    IntMat a(static_cast<std::size_t>(n), IntVec(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i)
        a[i][i] = 2;
    auto bond = [&](int i, int j) { a[i][j] = -1; a[j][i] = -1; };
    switch (s) {
    case SimpleSeries::A:
        for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
        break;
    case SimpleSeries::B:
        // alpha_n short: <alpha_{n-1}, alpha_n^vee> = -2
        for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
        a[n - 1][n - 2] = -2;
        break;
    case SimpleSeries::C:
        for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
        a[n - 2][n - 1] = -2;
        break;
    case SimpleSeries::D:
        for (int i = 0; i + 1 < n - 1; ++i) bond(i, i + 1);
        bond(n - 3, n - 1);
        break;
    case SimpleSeries::E:
        // Bourbaki: chain 1-3-4-5-6(-7-8), node 2 hangs off node 4.
        bond(0, 2);
        for (int i = 2; i + 1 < n; ++i) bond(i, i + 1);
        bond(1, 3);
        break;
    case SimpleSeries::F:
        bond(0, 1); bond(1, 2); bond(2, 3);
        a[2][1] = -2;
        break;
    case SimpleSeries::G:
        bond(0, 1);
        a[1][0] = -3;
        break;
    }
    return a;
}

IntVec compute_symmetrizer(const IntMat& a) {
    const int n = static_cast<int>(a.size());
    std::vector<BigRat> d(static_cast<std::size_t>(n), BigRat(0));
    // propagate along the Dynkin graph; components of simple systems are connected
    d[0] = 1;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < n; ++i) {
            if (d[i] == 0) continue;
            for (int j = 0; j < n; ++j) {
                if (i == j || a[i][j] == 0 || d[j] != 0) continue;
                // d_j = d_i * A_ij / A_ji
                d[j] = d[i] * BigRat(a[i][j]) / BigRat(a[j][i]);
                changed = true;
            }
        }
    }
    BigInt lcm_den = 1;
    for (const auto& x : d)
        lcm_den = boost::multiprecision::lcm(lcm_den, denominator(x));
    IntVec out(static_cast<std::size_t>(n));
    BigInt g = 0;
    for (int i = 0; i < n; ++i) {
        BigInt v = numerator(d[i]) * (lcm_den / denominator(d[i]));
        g = boost::multiprecision::gcd(g, v);
        out[i] = v.convert_to<long long>();
    }
    const long long gg = g.convert_to<long long>();
    for (auto& v : out) v /= gg;
    return out;
}

// Positive roots by closure under simple-root addition, processed by height.
std::vector<IntVec> positive_root_closure(const IntMat& a) {
    const int n = static_cast<int>(a.size());
    std::set<IntVec> known;
    std::vector<IntVec> current;
    std::vector<IntVec> all;
    for (int i = 0; i < n; ++i) {
        IntVec e(static_cast<std::size_t>(n), 0);
        e[i] = 1;
        known.insert(e);
        current.push_back(std::move(e));
    }
    all = current;
    while (!current.empty()) {
        std::vector<IntVec> next;
        for (const auto& beta : current) {
            for (int i = 0; i < n; ++i) {
                // q - p = -<beta, alpha_i^vee>: beta + alpha_i is a root iff q >= 1
                long long pairing = 0;
                for (int j = 0; j < n; ++j)
                    pairing += a[i][j] * beta[j];
                long long p = 0;
                IntVec down = beta;
                while (true) {
                    down[i] -= 1;
                    if (known.count(down) == 0) break;
                    ++p;
                }
                if (p - pairing >= 1) {
                    IntVec up = beta;
                    up[i] += 1;
                    if (known.insert(up).second)
                        next.push_back(up);
                }
            }
        }
        for (auto& r : next)
            all.push_back(r);
        current = std::move(next);
    }
    std::sort(all.begin(), all.end(), [](const IntVec& x, const IntVec& y) {
        long long hx = std::accumulate(x.begin(), x.end(), 0LL);
        long long hy = std::accumulate(y.begin(), y.end(), 0LL);
        if (hx != hy) return hx < hy;
        return x < y;
    });
    return all;
}

// Exact inverse of an integer matrix as (adjugate, determinant) via
// fraction-free Gauss-Jordan over rationals, then clearing denominators.
void invert_cartan(const IntMat& a, std::vector<std::vector<BigRat>>& inv,
                   IntMat& adj, long long& det) {
    const int n = static_cast<int>(a.size());
    std::vector<std::vector<BigRat>> m(static_cast<std::size_t>(n),
                                       std::vector<BigRat>(static_cast<std::size_t>(2 * n)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            m[i][j] = BigRat(a[i][j]);
        m[i][static_cast<std::size_t>(n + i)] = 1;
    }
    BigRat determinant = 1;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (m[r][col] != 0) { pivot = r; break; }
        if (pivot < 0)
            throw ValidationError("Cartan matrix is singular");
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            determinant = -determinant;
        }
        determinant *= m[col][col];
        const BigRat p = m[col][col];
        for (int j = 0; j < 2 * n; ++j)
            m[col][j] /= p;
        for (int r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            const BigRat f = m[r][col];
            for (int j = 0; j < 2 * n; ++j)
                m[r][j] -= f * m[col][j];
        }
    }
    inv.assign(static_cast<std::size_t>(n), std::vector<BigRat>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            inv[i][j] = m[i][static_cast<std::size_t>(n + j)];
    if (denominator(determinant) != 1)
        throw ValidationError("Cartan determinant is not integral");
    det = numerator(determinant).convert_to<long long>();
    adj.assign(static_cast<std::size_t>(n), IntVec(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            BigRat e = inv[i][j] * determinant;
            if (denominator(e) != 1)
                throw ValidationError("Cartan adjugate is not integral");
            adj[i][j] = numerator(e).convert_to<long long>();
        }
    }
}

long long classical_positive_root_count(SimpleSeries s, int n) {
    switch (s) {
    case SimpleSeries::A: return static_cast<long long>(n) * (n + 1) / 2;
    case SimpleSeries::B:
    case SimpleSeries::C: return static_cast<long long>(n) * n;
    case SimpleSeries::D: return static_cast<long long>(n) * (n - 1);
    case SimpleSeries::E: return n == 6 ? 36 : (n == 7 ? 63 : 120);
    case SimpleSeries::F: return 24;
    case SimpleSeries::G: return 6;
    }
    return -1;
}

} // namespace

RootSystem RootSystem::build(SimpleSeries series, int rank) {
    validate_type(series, rank);
    RootSystem rs;
    rs.series_ = series;
    rs.rank_ = rank;
    rs.cartan_ = cartan_matrix(series, rank);
    rs.symmetrizer_ = compute_symmetrizer(rs.cartan_);
    rs.positive_roots_ = positive_root_closure(rs.cartan_);

    if (static_cast<long long>(rs.positive_roots_.size()) !=
        classical_positive_root_count(series, rank))
        throw ValidationError("positive root closure does not match the classical count");

    std::vector<std::vector<BigRat>> inv;
    invert_cartan(rs.cartan_, inv, rs.adj_cartan_, rs.cartan_det_);
    // omega_i in simple-root coordinates = i-th column of A^{-1}
    rs.fundamental_weights_.assign(static_cast<std::size_t>(rank),
                                   std::vector<BigRat>(static_cast<std::size_t>(rank)));
    for (int i = 0; i < rank; ++i)
        for (int k = 0; k < rank; ++k)
            rs.fundamental_weights_[i][k] = inv[k][i];

    // Integer covector per positive root: <x, alpha^vee> = row . fund(x).
    rs.coroot_rows_.reserve(rs.positive_roots_.size());
    rs.two_rho_covector_.assign(static_cast<std::size_t>(rank), 0);
    for (const auto& root : rs.positive_roots_) {
        long long norm2 = 0;
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j)
                norm2 += root[i] * root[j] * rs.symmetrizer_[i] * rs.cartan_[i][j];
        IntVec row(static_cast<std::size_t>(rank));
        for (int j = 0; j < rank; ++j) {
            const long long num = 2 * rs.symmetrizer_[j] * root[j];
            if (num % norm2 != 0)
                throw ValidationError("coroot pairing is not integral");
            row[j] = num / norm2;
        }
        for (int j = 0; j < rank; ++j)
            rs.two_rho_covector_[j] += row[j];
        rs.coroot_rows_.push_back(std::move(row));
    }
    return rs;
}

IntVec RootSystem::to_fundamental(const WeightVec& w) const {
    if (static_cast<int>(w.coords.size()) != rank_)
        throw ValidationError("weight length does not match the root system rank");
    if (w.basis == WeightBasis::FundamentalWeight)
        return w.coords;
    IntVec fund(static_cast<std::size_t>(rank_), 0);
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j)
            fund[i] += cartan_[i][j] * w.coords[j];
    return fund;
}

std::optional<IntVec> RootSystem::integral_root_coords(const IntVec& fund) const {
    IntVec out(static_cast<std::size_t>(rank_));
    for (int i = 0; i < rank_; ++i) {
        long long acc = 0;
        for (int j = 0; j < rank_; ++j)
            acc += adj_cartan_[i][j] * fund[j];
        if (acc % cartan_det_ != 0)
            return std::nullopt;
        out[i] = acc / cartan_det_;
    }
    return out;
}

std::vector<BigRat> RootSystem::rational_root_coords(const IntVec& fund) const {
    std::vector<BigRat> out(static_cast<std::size_t>(rank_));
    for (int i = 0; i < rank_; ++i) {
        BigInt acc = 0;
        for (int j = 0; j < rank_; ++j)
            acc += BigInt(adj_cartan_[i][j]) * fund[j];
        out[i] = BigRat(acc, BigInt(cartan_det_));
    }
    return out;
}

bool RootSystem::is_dominant(const WeightVec& w) const {
    const IntVec fund = to_fundamental(w);
    return std::all_of(fund.begin(), fund.end(), [](long long c) { return c >= 0; });
}

void RootSystem::apply_simple_reflection(int i, IntVec& fund) const {
    const long long c = fund[static_cast<std::size_t>(i)];
    if (c == 0)
        return;
    for (int k = 0; k < rank_; ++k)
        fund[static_cast<std::size_t>(k)] -= c * cartan_[k][i];
}

IntVec RootSystem::dominant_representative(IntVec fund) const {
    if (static_cast<int>(fund.size()) != rank_)
        throw ValidationError("weight length does not match the root system rank");
    bool again = true;
    while (again) {
        again = false;
        for (int i = 0; i < rank_; ++i) {
            if (fund[static_cast<std::size_t>(i)] < 0) {
                apply_simple_reflection(i, fund);
                again = true;
            }
        }
    }
    return fund;
}

const std::vector<int>& RootSystem::w0_word() const {
    if (w0_word_.empty()) {
        IntVec v(static_cast<std::size_t>(rank_), 1); // rho
        bool again = true;
        while (again) {
            again = false;
            for (int i = 0; i < rank_; ++i) {
                if (v[static_cast<std::size_t>(i)] > 0) {
                    apply_simple_reflection(i, v);
                    w0_word_.push_back(i);
                    again = true;
                }
            }
        }
    }
    return w0_word_;
}

IntVec RootSystem::w0_action(IntVec fund) const {
    for (int i : w0_word())
        apply_simple_reflection(i, fund);
    return fund;
}

long long RootSystem::inner_fund_root(const IntVec& fund, const IntVec& root) const {
    long long acc = 0;
    for (int j = 0; j < rank_; ++j)
        acc += symmetrizer_[j] * fund[j] * root[j];
    return acc;
}

long long RootSystem::coroot_pairing(const IntVec& fund, int root_index) const {
    const IntVec& row = coroot_rows_[static_cast<std::size_t>(root_index)];
    long long acc = 0;
    for (int j = 0; j < rank_; ++j)
        acc += row[j] * fund[j];
    return acc;
}

long long RootSystem::signed_pairing_2rho(const IntVec& fund) const {
    long long acc = 0;
    for (int j = 0; j < rank_; ++j)
        acc += two_rho_covector_[j] * fund[j];
    return acc;
}

// ---- operations ----

bool dominance_leq(const RootSystem& rs, const WeightVec& mu, const WeightVec& lambda) {
    if (mu.basis != lambda.basis)
        throw ValidationError("dominance comparison requires a common basis");
    if (mu.coords.size() != lambda.coords.size())
        throw ValidationError("dominance comparison requires equal lengths");
    if (mu.basis == WeightBasis::SimpleRoot) {
        for (std::size_t i = 0; i < mu.coords.size(); ++i)
            if (lambda.coords[i] - mu.coords[i] < 0)
                return false;
        return true;
    }
    IntVec diff = rs.to_fundamental(lambda);
    const IntVec fm = rs.to_fundamental(mu);
    for (int i = 0; i < rs.rank(); ++i)
        diff[static_cast<std::size_t>(i)] -= fm[static_cast<std::size_t>(i)];
    const auto root = rs.integral_root_coords(diff);
    if (!root)
        return false;
    return std::all_of(root->begin(), root->end(), [](long long c) { return c >= 0; });
}

namespace {

// leq on fundamental coordinates: lambda - nu must be a non-negative integer
// root combination.
bool fund_leq(const RootSystem& rs, const IntVec& nu, const IntVec& lambda) {
    IntVec diff = lambda;
    for (int i = 0; i < rs.rank(); ++i)
        diff[static_cast<std::size_t>(i)] -= nu[static_cast<std::size_t>(i)];
    const auto root = rs.integral_root_coords(diff);
    if (!root)
        return false;
    return std::all_of(root->begin(), root->end(), [](long long c) { return c >= 0; });
}

struct FreudenthalContext {
    const RootSystem& rs;
    IntVec lambda;                       // fundamental coordinates
    std::vector<IntVec> root_funds;      // fund(alpha) per positive root
    std::map<IntVec, long long> memo;    // dominant weight -> multiplicity

    long long mult(const IntVec& nu) {
        if (nu == lambda)
            return 1;
        auto it = memo.find(nu);
        if (it != memo.end())
            return it->second;
        const int r = rs.rank();
        long long numerator = 0;
        const auto& roots = rs.positive_roots();
        for (std::size_t a = 0; a < roots.size(); ++a) {
            IntVec shifted = nu;
            for (long long k = 1;; ++k) {
                for (int j = 0; j < r; ++j)
                    shifted[static_cast<std::size_t>(j)] += root_funds[a][static_cast<std::size_t>(j)];
                if (!fund_leq(rs, shifted, lambda))
                    break; // necessary condition, monotone along the root string
                // membership needs the dominant representative below lambda;
                // nu+k*alpha <= lambda alone does not put it in the support
                const IntVec rep = rs.dominant_representative(shifted);
                if (!fund_leq(rs, rep, lambda))
                    continue;
                const long long m = mult(rep);
                if (m != 0)
                    numerator += m * rs.inner_fund_root(shifted, roots[a]);
            }
        }
        // denominator (lambda+rho, lambda+rho) - (nu+rho, nu+rho) = (lambda+nu+2rho, lambda-nu)
        IntVec sum(static_cast<std::size_t>(r));
        IntVec diff_fund(static_cast<std::size_t>(r));
        for (int j = 0; j < r; ++j) {
            sum[static_cast<std::size_t>(j)] = lambda[static_cast<std::size_t>(j)] +
                                               nu[static_cast<std::size_t>(j)] + 2;
            diff_fund[static_cast<std::size_t>(j)] = lambda[static_cast<std::size_t>(j)] -
                                                     nu[static_cast<std::size_t>(j)];
        }
        const auto diff_root = rs.integral_root_coords(diff_fund);
        if (!diff_root)
            throw ValidationError("Freudenthal recursion left the root lattice coset");
        const long long denominator = rs.inner_fund_root(sum, *diff_root);
        if (denominator <= 0 || (2 * numerator) % denominator != 0)
            throw ValidationError("Freudenthal recursion produced a non-exact division");
        const long long value = 2 * numerator / denominator;
        memo.emplace(nu, value);
        return value;
    }
};

} // namespace

long long freudenthal_multiplicity(const RootSystem& rs, const WeightVec& lambda,
                                   const WeightVec& mu) {
    if (!rs.is_dominant(lambda))
        throw ValidationError("freudenthal_multiplicity requires a dominant highest weight");
    const IntVec lf = rs.to_fundamental(lambda);
    const IntVec md = rs.dominant_representative(rs.to_fundamental(mu));
    if (!fund_leq(rs, md, lf))
        return 0;
    FreudenthalContext ctx{rs, lf, {}, {}};
    ctx.root_funds.reserve(rs.positive_roots().size());
    for (const auto& root : rs.positive_roots())
        ctx.root_funds.push_back(rs.to_fundamental(root_weight(root)));
    return ctx.mult(md);
}

BigInt weyl_dim(const RootSystem& rs, const WeightVec& lambda) {
    if (!rs.is_dominant(lambda))
        throw ValidationError("weyl_dim requires a dominant weight");
    const IntVec lf = rs.to_fundamental(lambda);
    IntVec lrho = lf;
    IntVec rho(static_cast<std::size_t>(rs.rank()), 1);
    for (auto& c : lrho)
        c += 1;
    BigInt num = 1, den = 1;
    for (std::size_t a = 0; a < rs.positive_roots().size(); ++a) {
        num *= rs.coroot_pairing(lrho, static_cast<int>(a));
        den *= rs.coroot_pairing(rho, static_cast<int>(a));
    }
    if (num % den != 0)
        throw ValidationError("Weyl dimension product is not integral");
    return num / den;
}

long long pairing_2rho(const RootSystem& rs, const WeightVec& theta) {
    const IntVec fund = rs.to_fundamental(theta);
    long long acc = 0;
    for (std::size_t a = 0; a < rs.positive_roots().size(); ++a) {
        const long long v = rs.coroot_pairing(fund, static_cast<int>(a));
        acc += v >= 0 ? v : -v;
    }
    return acc;
}

MvReport mv_report(const RootSystem& rs, const WeightVec& lambda, const WeightVec& nu) {
    if (!rs.is_dominant(lambda))
        throw ValidationError("mv_report requires a dominant lambda");
    const IntVec lf = rs.to_fundamental(lambda);
    const IntVec nf = rs.to_fundamental(nu);

    MvReport report;
    report.hyperbolic_degree = rs.signed_pairing_2rho(nf);
    report.nonempty = freudenthal_multiplicity(rs, lambda, nu) > 0;
    if (report.nonempty) {
        // dim(attractor) = <nu + lambda, rho^vee>; the repellent pairs nu with
        // w0(lambda), giving <w0(nu) + lambda, rho^vee> = <lambda - nu, rho^vee>.
        const long long s_lambda = rs.signed_pairing_2rho(lf);
        const long long s_nu = report.hyperbolic_degree;
        const long long s_w0nu = rs.signed_pairing_2rho(rs.w0_action(nf));
        const long long att2 = s_nu + s_lambda;
        const long long rep2 = s_w0nu + s_lambda;
        if (att2 % 2 != 0 || rep2 % 2 != 0)
            throw ValidationError("mv_report dimensions are not integral");
        report.dim_attractor = att2 / 2;
        report.dim_repellent = rep2 / 2;
    }
    return report;
}

} // namespace mono
