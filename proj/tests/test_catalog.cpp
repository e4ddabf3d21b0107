#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "hsh/catalog.hpp"
#include "hsh/tree.hpp"
#include "hsh/verify.hpp"
#include "oracles.hpp"

using namespace hsh;
namespace cat = hsh::catalog;
using cplx = std::complex<double>;

namespace {

constexpr double pi = oracles::pi;

double crel(cplx a, cplx b)
{
    const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
    return std::abs(a - b) / scale;
}

std::mt19937_64 make_rng(unsigned s) { return std::mt19937_64(s); }

} // namespace

TEST_CASE("circular harmonics")
{
    const double inv = 1.0 / std::sqrt(2.0 * pi);
    CHECK(crel(cat::circular2(0, 2.2), cplx{inv, 0.0}) < 1e-15);
    CHECK(crel(cat::circular2(2, 0.5 * pi), cplx{-inv, 0.0}) < 1e-14);
    for (double phi : {0.3, 2.0, 5.5})
        CHECK(crel(cat::circular2(-3, phi), std::conj(cat::circular2(3, phi))) < 1e-15);
}

TEST_CASE("spherical3 values")
{
    CHECK(crel(cat::spherical3(0, 0, 1.1, 2.2), cplx{1.0 / std::sqrt(4.0 * pi), 0.0}) < 1e-15);

    // magnitude matches the conventional harmonic
    auto rng = make_rng(31);
    std::uniform_real_distribution<double> ut(0.0, pi), up(0.0, 2.0 * pi);
    for (int trial = 0; trial < 10; ++trial) {
        const double theta = ut(rng), phi = up(rng);
        CHECK(std::abs(std::abs(cat::spherical3(2, 1, theta, phi))
                       - std::abs(oracles::spherical_harmonic(2, 1, theta, phi))) < 1e-13);
    }

    // unit norm of (1, 0) under sin theta d theta d phi
    const double n = oracles::gl_integrate(
        [](double theta) {
            return std::norm(cat::spherical3(1, 0, theta, 0.0)) * 2.0 * pi * std::sin(theta);
        },
        0.0, pi, 48);
    CHECK(n == doctest::Approx(1.0).epsilon(1e-12));

    // reflection convention for negative m
    for (int m : {-1, -2})
        CHECK(crel(cat::spherical3(2, m, 0.8, 0.9), cat::spherical3(2, -m, 0.8, -0.9)) < 1e-15);

    CHECK_THROWS_AS(cat::spherical3(1, 2, 0.1, 0.2), std::domain_error);
}

TEST_CASE("wigner_d against the factorial-sum oracle")
{
    auto rng = make_rng(32);
    std::uniform_real_distribution<double> ub(0.0, pi);
    for (int two_j = 0; two_j <= 8; ++two_j)
        for (int tmu = -two_j; tmu <= two_j; tmu += 2)
            for (int tnu = -two_j; tnu <= two_j; tnu += 2) {
                const double beta = ub(rng);
                CHECK(std::abs(cat::wigner_d(two_j, tmu, tnu, beta)
                               - oracles::wigner_d_sum(two_j, tmu, tnu, beta)) < 1e-12);
            }

    // explicit low-rank entries
    const double b = 0.77;
    CHECK(cat::wigner_d(1, 1, 1, b) == doctest::Approx(std::cos(0.5 * b)).epsilon(1e-15));
    CHECK(cat::wigner_d(1, 1, -1, b) == doctest::Approx(-std::sin(0.5 * b)).epsilon(1e-15));
    CHECK(cat::wigner_d(2, 0, 0, b) == doctest::Approx(std::cos(b)).epsilon(1e-14));
    CHECK(cat::wigner_d(2, 2, 0, b) == doctest::Approx(-std::sin(b) / std::sqrt(2.0)).epsilon(1e-14));

    CHECK_THROWS_AS(cat::wigner_d(2, 3, 0, 0.5), std::domain_error);
    CHECK_THROWS_AS(cat::wigner_d(2, 1, 0, 0.5), std::domain_error); // parity mismatch
}

TEST_CASE("wigner4 norms under its rotation-angle measure")
{
    // integral over phi1, phi2 gives (2 pi)^2; beta integral uses 2 sin(2b)
    for (int two_j : {1, 2}) {
        for (int tmu = -two_j; tmu <= two_j; tmu += 2)
            for (int tnu = -two_j; tnu <= two_j; tnu += 2) {
                const double nb = oracles::gl_integrate(
                    [&](double beta) {
                        const double d = cat::wigner_d(two_j, tmu, tnu, 2.0 * beta);
                        return d * d * 2.0 * std::sin(2.0 * beta);
                    },
                    0.0, 0.5 * pi, 48);
                const double norm = 4.0 * pi * pi * nb;
                CHECK(norm == doctest::Approx(8.0 * pi * pi / (two_j + 1.0)).epsilon(1e-12));
            }
    }
}

TEST_CASE("hsh4_split frozen values and conventions")
{
    CHECK(crel(cat::hsh4_split(0, 0, 0, 0.3, 1.0, 2.0),
               cplx{1.0 / (std::sqrt(2.0) * pi), 0.0}) < 1e-14);
    // selection rule
    CHECK(cat::hsh4_split(1, 0, 0, 0.3, 1.0, 2.0) == cplx{0.0, 0.0});
    CHECK(cat::hsh4_split(3, 1, 0, 0.3, 1.0, 2.0) == cplx{0.0, 0.0});
    // negative indices by reflection
    CHECK(crel(cat::hsh4_split(4, -1, 1, 0.4, 0.7, 1.9),
               cat::hsh4_split(4, 1, 1, 0.4, -0.7, 1.9)) < 1e-15);
    CHECK(crel(cat::hsh4_split(4, 2, -2, 0.4, 0.7, 1.9),
               cat::hsh4_split(4, 2, 2, 0.4, 0.7, -1.9)) < 1e-15);
}

TEST_CASE("hsh4_split maps onto wigner4 with an angle-independent constant")
{
    auto rng = make_rng(33);
    std::uniform_real_distribution<double> ub(0.05, 0.45 * pi), up(0.0, 2.0 * pi);
    for (int j = 0; j <= 4; ++j)
        for (int m1 = 0; m1 <= j; ++m1)
            for (int m2 = (j - m1) % 2; m1 + m2 <= j; m2 += 2) {
                const int two_j = j, tmu = m1 + m2, tnu = m1 - m2;
                cplx ref{};
                for (int trial = 0; trial < 8; ++trial) {
                    const double beta = ub(rng), p1 = up(rng), p2 = up(rng);
                    const cplx num = cat::hsh4_split(j, m1, m2, beta, p1, p2);
                    const cplx den = cat::wigner4(two_j, tmu, tnu, p1, beta, p2);
                    if (std::abs(den) < 1e-9) // polynomial zero, try another angle
                        continue;
                    const cplx ratio = num / den;
                    if (ref == cplx{})
                        ref = ratio;
                    CHECK(crel(ratio, ref) < 1e-10);
                    CHECK(std::abs(ratio.imag()) < 1e-10 * std::abs(ratio));
                }
            }
}

TEST_CASE("hsh4_axis matches the tree construction")
{
    const auto tree = ParamTree::axis(ParamTree::leaf3());
    auto rng = make_rng(34);
    for (int j = 0; j <= 3; ++j)
        for (int l = 0; l <= j; ++l)
            for (int m = -l; m <= l; ++m)
                for (int trial = 0; trial < 3; ++trial) {
                    const auto p = random_point(tree, rng);
                    const auto v = cat::hsh4_axis(j, l, m, p.theta, p.children[0].theta,
                                                  p.children[0].phi);
                    const auto w = evaluate(tree, HshIndex::axis(j, HshIndex::leaf3(l, m)), p);
                    CHECK(crel(v, w) < 1e-12);
                }
    CHECK_THROWS_AS(cat::hsh4_axis(1, 2, 0, 0.1, 0.2, 0.3), std::domain_error);
}

TEST_CASE("hsh5 matches the tree construction")
{
    const auto tree = ParamTree::split(ParamTree::leaf2(), ParamTree::leaf3());
    auto rng = make_rng(35);
    for (int j = 0; j <= 4; ++j)
        for (int mu = -j; mu <= j; ++mu)
            for (int l = (j - std::abs(mu)) % 2; std::abs(mu) + l <= j; l += 2)
                for (int trial = 0; trial < 2; ++trial) {
                    const int m = l == 0 ? 0 : (trial % (2 * l + 1)) - l;
                    const auto p = random_point(tree, rng);
                    const auto v = cat::hsh5(j, mu, l, m, p.children[0].phi, p.theta,
                                             p.children[1].theta, p.children[1].phi);
                    const auto idx = HshIndex::split(j, HshIndex::leaf2(mu), HshIndex::leaf3(l, m));
                    CHECK(crel(v, evaluate(tree, idx, p)) < 1e-12);
                }
    // all-zero member is a positive constant
    const auto c = cat::hsh5(0, 0, 0, 0, 0.1, 0.2, 0.3, 0.4);
    CHECK(c.imag() == 0.0);
    CHECK(c.real() > 0.0);
}

TEST_CASE("hsh6_two3 matches the tree construction")
{
    const auto tree = ParamTree::split(ParamTree::leaf3(), ParamTree::leaf3());
    auto rng = make_rng(36);
    for (int j = 0; j <= 4; ++j)
        for (int l1 = 0; l1 <= j; ++l1)
            for (int l2 = (j - l1) % 2; l1 + l2 <= j; l2 += 2) {
                const int m1 = std::min(1, l1), m2 = l2 == 0 ? 0 : -1;
                const auto p = random_point(tree, rng);
                const auto v = cat::hsh6_two3(j, l1, m1, l2, m2, p.theta,
                                              p.children[0].theta, p.children[0].phi,
                                              p.children[1].theta, p.children[1].phi);
                const auto idx = HshIndex::split(j, HshIndex::leaf3(l1, m1), HshIndex::leaf3(l2, m2));
                CHECK(crel(v, evaluate(tree, idx, p)) < 1e-12);
            }

    // lambda = 0 block: the hyperangle part reduces to cos^l1 sin^l2
    const double a1 = 0.5, a2 = 1.1;
    const auto r = cat::hsh6_two3(2, 1, 0, 1, 0, a1, 0.7, 0.8, 0.9, 1.0)
                 / cat::hsh6_two3(2, 1, 0, 1, 0, a2, 0.7, 0.8, 0.9, 1.0);
    CHECK(crel(r, cplx{std::cos(a1) * std::sin(a1) / (std::cos(a2) * std::sin(a2)), 0.0}) < 1e-12);
}

TEST_CASE("hsh6_three2 matches the tree construction")
{
    const auto tree = ParamTree::split(
        ParamTree::leaf2(), ParamTree::split(ParamTree::leaf2(), ParamTree::leaf2()));
    auto rng = make_rng(37);
    for (const auto& idx6 : cat::enumerate_family(cat::Family::hsh6_three2, 4)) {
        const int j = idx6.q[0], l = idx6.q[1], m1 = idx6.q[2], m2 = idx6.q[3], m3 = idx6.q[4];
        const auto p = random_point(tree, rng);
        const auto v = cat::hsh6_three2(j, l, m1, m2, m3, p.theta, p.children[1].theta,
                                        p.children[0].phi, p.children[1].children[0].phi,
                                        p.children[1].children[1].phi);
        const auto idx = HshIndex::split(
            j, HshIndex::leaf2(m1),
            HshIndex::split(l, HshIndex::leaf2(m2), HshIndex::leaf2(m3)));
        CHECK(crel(v, evaluate(tree, idx, p)) < 1e-12);
    }

    // joint selection rule: (J - m1 - m2 - m3)/2 must be a non-negative integer
    CHECK(cat::hsh6_three2(3, 1, 0, 1, 1, 0.3, 0.4, 0.5, 0.6, 0.7) == cplx{0.0, 0.0});
    // all-zero member is a positive constant of unit norm: 1/sqrt(pi^3)
    const auto c = cat::hsh6_three2(0, 0, 0, 0, 0, 0.1, 0.2, 0.3, 0.4, 0.5);
    CHECK(crel(c, cplx{1.0 / std::sqrt(pi * pi * pi), 0.0}) < 1e-13);
}

TEST_CASE("family_value factorization agrees with the direct functions")
{
    auto rng = make_rng(38);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    for (auto family : {cat::Family::spherical3, cat::Family::hsh4_axis, cat::Family::hsh4_split,
                        cat::Family::wigner4, cat::Family::hsh5, cat::Family::hsh6_two3,
                        cat::Family::hsh6_three2}) {
        const auto layout = cat::angle_layout(family);
        for (const auto& idx : cat::enumerate_family(family, 3)) {
            std::vector<double> angles(layout.size());
            for (std::size_t a = 0; a < layout.size(); ++a) {
                switch (layout[a].kind) {
                case cat::AngleKind::split_theta: angles[a] = 0.5 * pi * u01(rng); break;
                case cat::AngleKind::axis_theta:
                case cat::AngleKind::polar_theta: angles[a] = pi * u01(rng); break;
                case cat::AngleKind::azimuth: angles[a] = 2.0 * pi * u01(rng); break;
                }
            }
            const cplx via_factors = cat::family_value(family, idx, angles);
            cplx direct{};
            switch (family) {
            case cat::Family::spherical3:
                direct = cat::spherical3(idx.q[0], idx.q[1], angles[0], angles[1]);
                break;
            case cat::Family::hsh4_axis:
                direct = cat::hsh4_axis(idx.q[0], idx.q[1], idx.q[2], angles[0], angles[1], angles[2]);
                break;
            case cat::Family::hsh4_split:
                direct = cat::hsh4_split(idx.q[0], idx.q[1], idx.q[2], angles[0], angles[1], angles[2]);
                break;
            case cat::Family::wigner4:
                direct = cat::wigner4(idx.q[0], idx.q[1], idx.q[2], angles[1], angles[0], angles[2]);
                break;
            case cat::Family::hsh5:
                direct = cat::hsh5(idx.q[0], idx.q[1], idx.q[2], idx.q[3], angles[1], angles[0],
                                   angles[2], angles[3]);
                break;
            case cat::Family::hsh6_two3:
                direct = cat::hsh6_two3(idx.q[0], idx.q[1], idx.q[2], idx.q[3], idx.q[4], angles[0],
                                        angles[1], angles[2], angles[3], angles[4]);
                break;
            case cat::Family::hsh6_three2:
                direct = cat::hsh6_three2(idx.q[0], idx.q[1], idx.q[2], idx.q[3], idx.q[4],
                                          angles[0], angles[2], angles[1], angles[3], angles[4]);
                break;
            default:
                break;
            }
            CHECK(crel(via_factors, direct) < 1e-14);
        }
    }
}

TEST_CASE("catalog enumeration matches the space dimension")
{
    CHECK(cat::enumerate_family(cat::Family::hsh4_split, 2).size() == 1 + 4 + 9);
    CHECK(cat::enumerate_family(cat::Family::hsh4_axis, 2).size() == 1 + 4 + 9);
    CHECK(cat::enumerate_family(cat::Family::hsh5, 3).size() == 1 + 5 + 14 + 30);
    CHECK(cat::enumerate_family(cat::Family::hsh6_two3, 2).size() == 1 + 6 + 20);
    CHECK(cat::enumerate_family(cat::Family::hsh6_three2, 2).size() == 1 + 6 + 20);
    CHECK(cat::enumerate_family(cat::Family::wigner4, 2).size() == 1 + 4 + 9);
}

TEST_CASE("family names round-trip")
{
    for (const auto& name : cat::family_names())
        CHECK(cat::family_name(cat::family_from_name(name)) == name);
    CHECK_THROWS_AS(cat::family_from_name("nope"), std::invalid_argument);
}
