#include "hsh/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <stdexcept>

#include "hsh/coefficients.hpp"
#include "hsh/polynomials.hpp"

namespace hsh {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double inv_sqrt_2pi = 0.39894228040143267794;

using cplx = std::complex<double>;

cplx ipow(cplx z, int n)
{
    cplx r{1.0, 0.0};
    for (int i = 0; i < n; ++i)
        r *= z;
    return r;
}

// ---------------------------------------------------------------------------
// Separable bases over tensor grids. Every basis function is a product of
// one factor per grid axis; Grams and projections then reduce to small
// per-axis sums, identical to the full tensor-product quadrature by
// distributivity.

struct SeparableBasis {
    std::vector<GridAxis> axes;
    std::vector<int> nsig;                  // distinct factor signatures per axis
    std::vector<std::vector<cplx>> tables;  // per axis, [sig * nodes + k]
    std::vector<std::vector<int>> assign;   // per function, signature id per axis
    std::size_t nfunc = 0;

    std::size_t grid_size() const
    {
        std::size_t n = 1;
        for (const auto& a : axes)
            n *= a.nodes.size();
        return n;
    }
};

enum class TreeAxisKind { split_theta, axis_theta, polar_theta, azimuth };

struct TreeAxisMeta {
    TreeAxisKind kind;
    int dim = 0;
    int kappa = 0;
};

void collect_axis_meta(const ParamTree& t, std::vector<TreeAxisMeta>& out)
{
    switch (t.kind()) {
    case NodeKind::leaf2:
        out.push_back({TreeAxisKind::azimuth});
        return;
    case NodeKind::leaf3:
        out.push_back({TreeAxisKind::polar_theta, 3, 0});
        out.push_back({TreeAxisKind::azimuth});
        return;
    case NodeKind::split:
        out.push_back({TreeAxisKind::split_theta, t.dim(), t.left().dim()});
        collect_axis_meta(t.left(), out);
        collect_axis_meta(t.right(), out);
        return;
    case NodeKind::axis:
        out.push_back({TreeAxisKind::axis_theta, t.dim(), 0});
        collect_axis_meta(t.child(), out);
        return;
    }
}

using AxisKey = std::array<int, 3>;

void collect_axis_keys(const ParamTree& t, const HshIndex& idx, std::vector<AxisKey>& keys)
{
    switch (t.kind()) {
    case NodeKind::leaf2:
        keys.push_back({idx.m, 0, 0});
        return;
    case NodeKind::leaf3:
        keys.push_back({idx.rank, std::abs(idx.m), 0});
        keys.push_back({idx.m, 0, 0});
        return;
    case NodeKind::split:
        keys.push_back({idx.rank, idx.children[0].rank, idx.children[1].rank});
        collect_axis_keys(t.left(), idx.children[0], keys);
        collect_axis_keys(t.right(), idx.children[1], keys);
        return;
    case NodeKind::axis:
        keys.push_back({idx.rank, idx.children[0].rank, 0});
        collect_axis_keys(t.child(), idx.children[0], keys);
        return;
    }
}

cplx tree_axis_factor(const TreeAxisMeta& meta, const AxisKey& key, double angle)
{
    switch (meta.kind) {
    case TreeAxisKind::split_theta:
        return split_weight({meta.dim, meta.kappa, key[0], key[1], key[2]}, angle);
    case TreeAxisKind::axis_theta:
        return axis_weight({meta.dim, key[0], key[1]}, angle);
    case TreeAxisKind::polar_theta:
        return axis_weight({3, key[0], key[1]}, angle);
    case TreeAxisKind::azimuth:
        return std::polar(inv_sqrt_2pi, key[0] * angle);
    }
    return {};
}

SeparableBasis make_tree_basis(const ParamTree& tree, const std::vector<HshIndex>& indices,
                               const QuadratureGrid& grid)
{
    std::vector<TreeAxisMeta> meta;
    collect_axis_meta(tree, meta);

    SeparableBasis basis;
    basis.axes = grid.axes();
    basis.nfunc = indices.size();
    const std::size_t naxes = meta.size();
    basis.nsig.assign(naxes, 0);
    basis.tables.resize(naxes);
    basis.assign.assign(indices.size(), std::vector<int>(naxes, 0));

    std::vector<std::map<AxisKey, int>> sig_ids(naxes);
    std::vector<AxisKey> keys;
    for (std::size_t f = 0; f < indices.size(); ++f) {
        keys.clear();
        collect_axis_keys(tree, indices[f], keys);
        for (std::size_t a = 0; a < naxes; ++a) {
            auto [it, inserted] = sig_ids[a].try_emplace(keys[a], basis.nsig[a]);
            if (inserted)
                ++basis.nsig[a];
            basis.assign[f][a] = it->second;
        }
    }
    for (std::size_t a = 0; a < naxes; ++a) {
        const auto& nodes = basis.axes[a].nodes;
        basis.tables[a].resize(static_cast<std::size_t>(basis.nsig[a]) * nodes.size());
        for (const auto& [key, sig] : sig_ids[a])
            for (std::size_t k = 0; k < nodes.size(); ++k)
                basis.tables[a][sig * nodes.size() + k] = tree_axis_factor(meta[a], key, nodes[k]);
    }
    return basis;
}

GridAxis make_catalog_axis(const catalog::AngleSpec& spec, int order)
{
    switch (spec.kind) {
    case catalog::AngleKind::split_theta:
        return make_split_axis(spec.dim, spec.kappa, order, spec.scale);
    case catalog::AngleKind::axis_theta:
        return make_axis_theta_axis(spec.dim, order);
    case catalog::AngleKind::polar_theta:
        return make_polar_axis(order);
    case catalog::AngleKind::azimuth:
        return make_azimuth_axis(order);
    }
    throw std::logic_error("make_catalog_axis: unknown angle kind");
}

SeparableBasis make_catalog_basis(catalog::Family family,
                                  const std::vector<catalog::CatalogIndex>& indices, int order)
{
    SeparableBasis basis;
    const auto layout = catalog::angle_layout(family);
    for (const auto& spec : layout)
        basis.axes.push_back(make_catalog_axis(spec, order));
    const std::size_t naxes = basis.axes.size();
    basis.nfunc = indices.size();
    basis.nsig.assign(naxes, static_cast<int>(indices.size()));
    basis.tables.resize(naxes);
    basis.assign.assign(indices.size(), std::vector<int>(naxes, 0));
    for (std::size_t a = 0; a < naxes; ++a) {
        const auto& nodes = basis.axes[a].nodes;
        basis.tables[a].resize(indices.size() * nodes.size());
        for (std::size_t f = 0; f < indices.size(); ++f) {
            basis.assign[f][a] = static_cast<int>(f);
            const double norm = std::sqrt(catalog::expected_norm2(family, indices[f]));
            for (std::size_t k = 0; k < nodes.size(); ++k) {
                cplx v = catalog::angle_factor(family, indices[f], static_cast<int>(a), nodes[k]);
                if (a == 0)
                    v /= norm;
                basis.tables[a][f * nodes.size() + k] = v;
            }
        }
    }
    return basis;
}

GramStats gram_from_basis(const SeparableBasis& basis)
{
    const std::size_t naxes = basis.axes.size();
    // Per-axis signature inner products.
    std::vector<std::vector<cplx>> s(naxes);
    for (std::size_t a = 0; a < naxes; ++a) {
        const int n = basis.nsig[a];
        const auto& nodes = basis.axes[a].nodes;
        const auto& w = basis.axes[a].weights;
        const auto& table = basis.tables[a];
        s[a].assign(static_cast<std::size_t>(n) * n, cplx{});
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q) {
                cplx acc{};
                for (std::size_t k = 0; k < nodes.size(); ++k)
                    acc += w[k] * std::conj(table[p * nodes.size() + k])
                                * table[q * nodes.size() + k];
                s[a][static_cast<std::size_t>(p) * n + q] = acc;
            }
    }

    GramStats stats;
    stats.size = basis.nfunc;
    stats.matrix.assign(basis.nfunc * basis.nfunc, cplx{});
    for (std::size_t f = 0; f < basis.nfunc; ++f)
        for (std::size_t g = 0; g < basis.nfunc; ++g) {
            cplx v{1.0, 0.0};
            for (std::size_t a = 0; a < naxes; ++a)
                v *= s[a][static_cast<std::size_t>(basis.assign[f][a]) * basis.nsig[a]
                          + basis.assign[g][a]];
            stats.matrix[f * basis.nfunc + g] = v;
            const double dev = f == g ? std::abs(v - 1.0) : std::abs(v);
            if (f == g)
                stats.max_diag_dev = std::max(stats.max_diag_dev, dev);
            else
                stats.max_offdiag = std::max(stats.max_offdiag, dev);
        }
    return stats;
}

// Cartesian embedding straight from grid digits, using per-axis precomputed
// trig tables; avoids building HyperPoint objects in hot loops.
struct FastEmbedder {
    const ParamTree& tree;
    std::vector<std::vector<double>> cs, sn;

    FastEmbedder(const ParamTree& t, const std::vector<GridAxis>& axes) : tree(t)
    {
        cs.resize(axes.size());
        sn.resize(axes.size());
        for (std::size_t a = 0; a < axes.size(); ++a) {
            cs[a].resize(axes[a].nodes.size());
            sn[a].resize(axes[a].nodes.size());
            for (std::size_t k = 0; k < axes[a].nodes.size(); ++k) {
                cs[a][k] = std::cos(axes[a].nodes[k]);
                sn[a][k] = std::sin(axes[a].nodes[k]);
            }
        }
    }

    void fill(const std::vector<std::size_t>& digits, std::vector<double>& out) const
    {
        out.clear();
        std::size_t cursor = 0;
        fill_node(tree, digits, cursor, 1.0, out);
    }

private:
    void fill_node(const ParamTree& t, const std::vector<std::size_t>& digits,
                   std::size_t& cursor, double scale, std::vector<double>& out) const
    {
        const std::size_t a = cursor++;
        const std::size_t k = digits[a];
        switch (t.kind()) {
        case NodeKind::leaf2:
            out.push_back(scale * cs[a][k]);
            out.push_back(scale * sn[a][k]);
            return;
        case NodeKind::leaf3: {
            const std::size_t ap = cursor++;
            const std::size_t kp = digits[ap];
            out.push_back(scale * cs[a][k]);
            out.push_back(scale * sn[a][k] * cs[ap][kp]);
            out.push_back(scale * sn[a][k] * sn[ap][kp]);
            return;
        }
        case NodeKind::split:
            fill_node(t.left(), digits, cursor, scale * cs[a][k], out);
            fill_node(t.right(), digits, cursor, scale * sn[a][k], out);
            return;
        case NodeKind::axis:
            out.push_back(scale * cs[a][k]);
            fill_node(t.child(), digits, cursor, scale * sn[a][k], out);
            return;
        }
    }
};

} // namespace

double sphere_area(int dim)
{
    return 2.0 * std::pow(pi, 0.5 * dim) * std::exp(-log_gamma(0.5 * dim));
}

GramStats gram_matrix(const ParamTree& tree, int max_rank, const QuadratureGrid& grid)
{
    std::vector<HshIndex> indices;
    for (int j = 0; j <= max_rank; ++j) {
        auto batch = enumerate_indices(tree, j);
        indices.insert(indices.end(), std::make_move_iterator(batch.begin()),
                       std::make_move_iterator(batch.end()));
    }
    return gram_from_basis(make_tree_basis(tree, indices, grid));
}

GramStats catalog_gram(catalog::Family family, int max_rank, int order)
{
    const auto indices = catalog::enumerate_family(family, max_rank);
    return gram_from_basis(make_catalog_basis(family, indices, order));
}

LaplaceSample laplace_residual(const ParamTree& tree, const HshIndex& index,
                               const HyperPoint& point, double step)
{
    if (step < 1e-5 || step > 1e-2)
        throw std::domain_error("laplace_residual: step must lie in [1e-5, 1e-2]");

    // Chart-singularity guard: angles whose conjugate block shrinks to zero
    // length leave child angles undetermined.
    constexpr double guard = 1e-6;
    const std::function<bool(const ParamTree&, const HyperPoint&)> singular =
        [&](const ParamTree& t, const HyperPoint& p) -> bool {
        switch (t.kind()) {
        case NodeKind::leaf2:
            return false;
        case NodeKind::leaf3:
            return std::abs(std::sin(p.theta)) < guard;
        case NodeKind::split:
            if (std::min(std::abs(std::sin(p.theta)), std::abs(std::cos(p.theta))) < guard)
                return true;
            return singular(t.left(), p.children[0]) || singular(t.right(), p.children[1]);
        case NodeKind::axis:
            if (std::abs(std::sin(p.theta)) < guard)
                return true;
            return singular(t.child(), p.children[0]);
        }
        return false;
    };
    if (singular(tree, point))
        return {0.0, true};

    const int d = tree.dim();
    const int rank = index.rank;
    auto field = [&](const std::vector<double>& x) -> cplx {
        double r2 = 0.0;
        for (double v : x)
            r2 += v * v;
        const double r = std::sqrt(r2);
        return std::pow(r, rank) * evaluate(tree, index, point_from_cartesian(tree, x));
    };

    std::vector<double> x0 = embed(tree, point);
    const cplx f0 = field(x0);
    cplx num{};
    double den = 0.0;
    std::vector<double> x = x0;
    for (int k = 0; k < d; ++k) {
        x[k] = x0[k] + step;
        const cplx fp = field(x);
        x[k] = x0[k] - step;
        const cplx fm = field(x);
        x[k] = x0[k];
        num += fp + fm - 2.0 * f0;
        den += std::abs(fp) + std::abs(fm) + 2.0 * std::abs(f0);
    }
    if (den == 0.0)
        return {0.0, false};
    return {std::abs(num) / den, false};
}

AdditionCheck addition_theorem_check(const ParamTree& tree, int rank,
                                     const HyperPoint& a, const HyperPoint& b)
{
    if (tree.dim() < 3)
        throw std::domain_error("addition_theorem_check: needs dim >= 3");
    AdditionCheck out;
    const auto indices = enumerate_indices(tree, rank);
    cplx sum{};
    for (const auto& idx : indices)
        sum += std::conj(evaluate(tree, idx, a)) * evaluate(tree, idx, b);
    const auto xa = embed(tree, a);
    const auto xb = embed(tree, b);
    double dot = 0.0;
    for (std::size_t i = 0; i < xa.size(); ++i)
        dot += xa[i] * xb[i];
    out.cos_omega = clamp_unit(dot);
    out.gegenbauer_value = gegenbauer(rank, 0.5 * tree.dim() - 1.0, out.cos_omega);
    out.sum = sum;
    out.ratio = sum / out.gegenbauer_value;
    return out;
}

ZeroLengthSeed ZeroLengthSeed::random(int left_dim, int right_dim, std::mt19937_64& rng)
{
    if (left_dim < 1 || right_dim < 1)
        throw std::domain_error("ZeroLengthSeed: both blocks need dimension >= 1");
    std::normal_distribution<double> gauss;
    auto draw_unit = [&](int n) {
        std::vector<double> v(n);
        double norm = 0.0;
        do {
            norm = 0.0;
            for (auto& c : v) {
                c = gauss(rng);
                norm += c * c;
            }
        } while (norm < 1e-12);
        norm = std::sqrt(norm);
        for (auto& c : v)
            c /= norm;
        return v;
    };
    return {draw_unit(left_dim), draw_unit(right_dim)};
}

double zero_vector_check(const ParamTree& tree, int rank, const ZeroLengthSeed& seed,
                         const QuadratureGrid& grid)
{
    const int d = tree.dim();
    const int kappa = static_cast<int>(seed.left.size());
    if (kappa + static_cast<int>(seed.right.size()) != d)
        throw std::invalid_argument("zero_vector_check: seed dimensions do not sum to tree dim");
    if (tree.kind() == NodeKind::split) {
        if (kappa != tree.left().dim() && kappa != 1)
            throw std::invalid_argument("zero_vector_check: seed split does not match the root split");
    } else if (kappa != 1) {
        throw std::invalid_argument("zero_vector_check: non-split root takes a one-axis seed");
    }
    for (const auto* block : {&seed.left, &seed.right}) {
        double n = 0.0;
        for (double v : *block)
            n += v * v;
        if (std::abs(n - 1.0) > 1e-9)
            throw std::invalid_argument("zero_vector_check: seed blocks must be unit vectors");
    }

    const auto indices = enumerate_indices(tree, rank);
    const auto basis = make_tree_basis(tree, indices, grid);
    const std::size_t naxes = basis.axes.size();
    const std::size_t nfunc = basis.nfunc;
    const std::size_t last = naxes - 1;
    const std::size_t nlast = basis.axes[last].nodes.size();
    const int nsig_last = basis.nsig[last];
    const auto& wlast = basis.axes[last].weights;
    const auto& tlast = basis.tables[last];

    const FastEmbedder embedder(tree, basis.axes);
    std::vector<std::size_t> digits(naxes, 0);
    std::vector<double> x;
    std::vector<cplx> frow(nlast);
    auto fill_frow = [&] {
        // (a . x)^J along the fastest axis at the current upper digits
        for (std::size_t k = 0; k < nlast; ++k) {
            digits[last] = k;
            embedder.fill(digits, x);
            double re = 0.0, im = 0.0;
            for (int i = 0; i < kappa; ++i)
                re += seed.left[i] * x[i];
            for (int i = kappa; i < d; ++i)
                im += seed.right[i - kappa] * x[i];
            frow[k] = ipow({re, im}, rank);
        }
    };

    // Prefix products of the per-axis factors over all functions; the inner
    // loop then costs one small sum per distinct last-axis signature instead
    // of one per function.
    std::vector<std::vector<cplx>> prefix(naxes, std::vector<cplx>(nfunc));
    std::vector<cplx> proj(nfunc, cplx{}); // accumulates sum w * Y * conj(f)
    double f_norm2 = 0.0;
    double r2 = 0.0;
    std::vector<cplx> grouped(nsig_last);

    // pass 1 collects projections and the norm of f, pass 2 the residual of
    // f minus its projection, summed as |.|^2 so no cancellation is involved.
    const std::function<void(std::size_t, double, int)> walk =
        [&](std::size_t level, double wacc, int pass) {
        if (level == last) {
            fill_frow();
            if (pass == 1) {
                for (int s = 0; s < nsig_last; ++s) {
                    cplx acc{};
                    for (std::size_t k = 0; k < nlast; ++k)
                        acc += wlast[k] * std::conj(frow[k]) * tlast[s * nlast + k];
                    grouped[s] = wacc * acc;
                }
                for (std::size_t k = 0; k < nlast; ++k)
                    f_norm2 += wacc * wlast[k] * std::norm(frow[k]);
                const auto& pre = prefix[level];
                for (std::size_t f = 0; f < nfunc; ++f)
                    proj[f] += pre[f] * grouped[basis.assign[f][last]];
            } else {
                std::fill(grouped.begin(), grouped.end(), cplx{});
                const auto& pre = prefix[level];
                for (std::size_t f = 0; f < nfunc; ++f)
                    grouped[basis.assign[f][last]] += pre[f];
                for (std::size_t k = 0; k < nlast; ++k) {
                    cplx p{};
                    for (int s = 0; s < nsig_last; ++s)
                        p += grouped[s] * tlast[s * nlast + k];
                    r2 += wacc * wlast[k] * std::norm(frow[k] - p);
                }
            }
            return;
        }
        const auto& axis = basis.axes[level];
        const auto& table = basis.tables[level];
        const std::size_t n = axis.nodes.size();
        for (std::size_t k = 0; k < n; ++k) {
            digits[level] = k;
            auto& nxt = prefix[level + 1];
            const auto& pre = prefix[level];
            for (std::size_t f = 0; f < nfunc; ++f)
                nxt[f] = pre[f] * table[basis.assign[f][level] * n + k];
            walk(level + 1, wacc * axis.weights[k], pass);
        }
    };

    if (naxes == 1) {
        fill_frow();
        for (std::size_t k = 0; k < nlast; ++k)
            f_norm2 += wlast[k] * std::norm(frow[k]);
        std::vector<cplx> coef(nfunc);
        for (std::size_t f = 0; f < nfunc; ++f) {
            cplx acc{};
            for (std::size_t k = 0; k < nlast; ++k)
                acc += wlast[k] * std::conj(frow[k]) * tlast[basis.assign[f][0] * nlast + k];
            coef[f] = std::conj(acc);
        }
        for (std::size_t k = 0; k < nlast; ++k) {
            cplx p{};
            for (std::size_t f = 0; f < nfunc; ++f)
                p += coef[f] * tlast[basis.assign[f][0] * nlast + k];
            r2 += wlast[k] * std::norm(frow[k] - p);
        }
        return f_norm2 <= 0.0 ? 0.0 : std::sqrt(r2 / f_norm2);
    }

    std::fill(prefix[0].begin(), prefix[0].end(), cplx{1.0, 0.0});
    walk(0, 1.0, 1);
    for (std::size_t f = 0; f < nfunc; ++f)
        prefix[0][f] = std::conj(proj[f]); // projection coefficients
    walk(0, 1.0, 2);

    if (f_norm2 <= 0.0)
        return 0.0;
    return std::sqrt(r2 / f_norm2);
}

double zero_vector_laplace_residual(const ZeroLengthSeed& seed, int rank,
                                    std::span<const double> x, double step)
{
    const int kappa = static_cast<int>(seed.left.size());
    const int d = kappa + static_cast<int>(seed.right.size());
    if (static_cast<int>(x.size()) != d)
        throw std::invalid_argument("zero_vector_laplace_residual: point dimension mismatch");
    auto field = [&](std::span<const double> p) -> cplx {
        double re = 0.0, im = 0.0;
        for (int i = 0; i < kappa; ++i)
            re += seed.left[i] * p[i];
        for (int i = kappa; i < d; ++i)
            im += seed.right[i - kappa] * p[i];
        return ipow({re, im}, rank);
    };
    std::vector<double> p(x.begin(), x.end());
    const cplx f0 = field(p);
    cplx num{};
    double den = 0.0;
    for (int k = 0; k < d; ++k) {
        const double saved = p[k];
        p[k] = saved + step;
        const cplx fp = field(p);
        p[k] = saved - step;
        const cplx fm = field(p);
        p[k] = saved;
        num += fp + fm - 2.0 * f0;
        den += std::abs(fp) + std::abs(fm) + 2.0 * std::abs(f0);
    }
    return den == 0.0 ? 0.0 : std::abs(num) / den;
}

CharacterCheck character_check(int two_j, const std::array<double, 3>& a,
                               const std::array<double, 3>& b)
{
    CharacterCheck out;
    cplx sum{};
    for (int tmu = -two_j; tmu <= two_j; tmu += 2)
        for (int tnu = -two_j; tnu <= two_j; tnu += 2)
            sum += std::conj(catalog::wigner4(two_j, tmu, tnu, a[0], a[1], a[2]))
                 * catalog::wigner4(two_j, tmu, tnu, b[0], b[1], b[2]);
    out.sum = sum;
    out.cos_omega = clamp_unit(std::cos(a[1]) * std::cos(b[1]) * std::cos(a[0] - b[0])
                             + std::sin(a[1]) * std::sin(b[1]) * std::cos(a[2] - b[2]));
    const double omega = std::acos(out.cos_omega);
    const int n = two_j + 1;
    if (std::abs(std::sin(omega)) < 1e-9)
        out.expected = n * std::cos(n * omega) / std::cos(omega);
    else
        out.expected = std::sin(n * omega) / std::sin(omega);
    return out;
}

HyperPoint random_point(const ParamTree& tree, std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    switch (tree.kind()) {
    case NodeKind::leaf2:
        return HyperPoint::leaf2(2.0 * pi * u01(rng));
    case NodeKind::leaf3: {
        const double theta = pi * u01(rng);
        return HyperPoint::leaf3(theta, 2.0 * pi * u01(rng));
    }
    case NodeKind::split: {
        const double theta = 0.5 * pi * u01(rng);
        auto left = random_point(tree.left(), rng);
        auto right = random_point(tree.right(), rng);
        return HyperPoint::split(theta, std::move(left), std::move(right));
    }
    case NodeKind::axis: {
        const double theta = pi * u01(rng);
        return HyperPoint::axis(theta, random_point(tree.child(), rng));
    }
    }
    throw std::logic_error("random_point: unknown node kind");
}

// ---------------------------------------------------------------------------
// Suite runners.

bool Report::pass() const
{
    for (const auto& c : checks)
        if (!c.pass)
            return false;
    return true;
}

namespace {

CheckRecord record(std::string name, std::string detail, double measured, double tol)
{
    return {std::move(name), std::move(detail), measured, tol, measured <= tol};
}

} // namespace

Report run_gram_suite(const ParamTree& tree, int max_rank, int order)
{
    Report rep;
    rep.suite = "gram";
    rep.max_rank = max_rank;
    rep.order = order;
    const QuadratureGrid grid(tree, order);
    const double area = sphere_area(tree.dim());
    rep.checks.push_back(record("grid_mass", "relative deviation of the grid mass from the sphere area",
                                std::abs(grid.total_weight() - area) / area, 1e-10));
    const auto stats = gram_matrix(tree, max_rank, grid);
    rep.checks.push_back(record("gram_max_offdiag",
                                "largest |off-diagonal| over " + std::to_string(stats.size)
                                    + " basis functions",
                                stats.max_offdiag, 1e-8));
    rep.checks.push_back(record("gram_max_diag_dev", "largest |diagonal - 1|",
                                stats.max_diag_dev, 1e-8));
    return rep;
}

Report run_catalog_gram_suite(catalog::Family family, int max_rank, int order)
{
    Report rep;
    rep.suite = "gram";
    rep.target = catalog::family_name(family);
    rep.max_rank = max_rank;
    rep.order = order;
    const auto stats = catalog_gram(family, max_rank, order);
    const std::string what = family == catalog::Family::wigner4
        ? "norms measured against 8 pi^2/(2j+1)"
        : "orthonormality under the family measure";
    rep.checks.push_back(record("gram_max_offdiag",
                                what + ", " + std::to_string(stats.size) + " members",
                                stats.max_offdiag, 1e-8));
    rep.checks.push_back(record("gram_max_diag_dev", "largest |diagonal - 1|",
                                stats.max_diag_dev, 1e-8));
    return rep;
}

Report run_laplace_suite(const ParamTree& tree, int max_rank, int samples, double step,
                         std::uint64_t seed)
{
    Report rep;
    rep.suite = "laplace";
    rep.max_rank = max_rank;
    rep.seed = seed;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> rank_dist(0, max_rank);

    std::vector<std::vector<HshIndex>> pool(max_rank + 1);
    for (int j = 0; j <= max_rank; ++j)
        pool[j] = enumerate_indices(tree, j);

    double worst = 0.0;
    int resampled = 0;
    for (int s = 0; s < samples; ++s) {
        const int j = rank_dist(rng);
        std::uniform_int_distribution<std::size_t> pick(0, pool[j].size() - 1);
        const HshIndex& idx = pool[j][pick(rng)];
        LaplaceSample res;
        int tries = 0;
        do {
            res = laplace_residual(tree, idx, random_point(tree, rng), step);
            ++tries;
        } while (res.chart_singular && tries < 64);
        resampled += tries - 1;
        worst = std::max(worst, res.residual);
    }
    rep.checks.push_back(record("laplace_max_residual",
                                std::to_string(samples) + " samples, step " + std::to_string(step)
                                    + ", " + std::to_string(resampled) + " resampled",
                                worst, 1e-5));
    return rep;
}

Report run_addition_suite(const ParamTree& tree, int max_rank, int pairs, std::uint64_t seed)
{
    Report rep;
    rep.suite = "addition";
    rep.max_rank = max_rank;
    rep.seed = seed;
    std::mt19937_64 rng(seed);
    for (int j = 2; j <= max_rank; ++j) {
        const double c_at_one = gegenbauer(j, 0.5 * tree.dim() - 1.0, 1.0);
        std::vector<cplx> ratios;
        ratios.reserve(pairs);
        int guard_hits = 0;
        while (static_cast<int>(ratios.size()) < pairs) {
            const auto a = random_point(tree, rng);
            const auto b = random_point(tree, rng);
            const auto chk = addition_theorem_check(tree, j, a, b);
            if (std::abs(chk.gegenbauer_value) < 1e-3 * std::abs(c_at_one)) {
                if (++guard_hits > 64 * pairs)
                    throw std::runtime_error("addition suite: could not sample away from polynomial zeros");
                continue;
            }
            ratios.push_back(chk.ratio);
        }
        cplx mean{};
        for (const auto& r : ratios)
            mean += r;
        mean /= static_cast<double>(ratios.size());
        double spread = 0.0;
        for (const auto& r : ratios)
            spread = std::max(spread, std::abs(r - mean));
        rep.checks.push_back(record("addition_ratio_spread_J" + std::to_string(j),
                                    "max |ratio - mean| / |mean| over " + std::to_string(pairs)
                                        + " pairs",
                                    spread / std::abs(mean), 1e-9));
        rep.checks.push_back(record("addition_ratio_imag_J" + std::to_string(j),
                                    "|imag(mean)| / |mean|",
                                    std::abs(mean.imag()) / std::abs(mean), 1e-10));
        rep.constants.push_back({"addition_constant_J" + std::to_string(j), mean.real()});
    }
    return rep;
}

Report run_zerovec_suite(const ParamTree& tree, int max_rank, int order, std::uint64_t seed)
{
    Report rep;
    rep.suite = "zerovec";
    rep.max_rank = max_rank;
    rep.order = order;
    rep.seed = seed;
    std::mt19937_64 rng(seed);
    const int d = tree.dim();
    const int kappa = tree.kind() == NodeKind::split ? tree.left().dim() : 1;
    const QuadratureGrid grid(tree, order);
    for (int j = 0; j <= max_rank; ++j) {
        const auto seed_vec = ZeroLengthSeed::random(kappa, d - kappa, rng);
        const double res = zero_vector_check(tree, j, seed_vec, grid);
        rep.checks.push_back(record("zerovec_residual_J" + std::to_string(j),
                                    "relative L2 residual of the rank-J projection",
                                    res, 1e-8));
    }
    const auto seed_vec = ZeroLengthSeed::random(kappa, d - kappa, rng);
    std::normal_distribution<double> gauss;
    double worst = 0.0;
    for (int s = 0; s < 10; ++s) {
        std::vector<double> x(d);
        double norm = 0.0;
        for (auto& v : x) {
            v = gauss(rng);
            norm += v * v;
        }
        norm = std::sqrt(norm);
        for (auto& v : x)
            v /= norm;
        worst = std::max(worst,
                         zero_vector_laplace_residual(seed_vec, std::max(max_rank, 1), x, 1e-3));
    }
    rep.checks.push_back(record("zerovec_fd_laplacian",
                                "finite-difference harmonicity of (a.x)^J at 10 points",
                                worst, 1e-6));
    return rep;
}

Report run_character_suite(int max_two_j, int pairs, std::uint64_t seed)
{
    Report rep;
    rep.suite = "character";
    rep.max_rank = max_two_j;
    rep.seed = seed;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    for (int tj = 1; tj <= max_two_j; ++tj) {
        double worst = 0.0;
        for (int p = 0; p < pairs; ++p) {
            const std::array<double, 3> a{2.0 * pi * u01(rng), 0.5 * pi * u01(rng),
                                          2.0 * pi * u01(rng)};
            const std::array<double, 3> b{2.0 * pi * u01(rng), 0.5 * pi * u01(rng),
                                          2.0 * pi * u01(rng)};
            const auto chk = character_check(tj, a, b);
            worst = std::max(worst, std::abs(chk.sum - chk.expected));
        }
        rep.checks.push_back(record("character_max_delta_2j" + std::to_string(tj),
                                    "largest |sum - character| over " + std::to_string(pairs)
                                        + " pairs",
                                    worst, 1e-10));
    }
    return rep;
}

} // namespace hsh
