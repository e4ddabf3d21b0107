#include "hsh/catalog.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hsh/coefficients.hpp"
#include "hsh/polynomials.hpp"

namespace hsh::catalog {

namespace {

constexpr double pi = std::numbers::pi;

double fact_ratio(double num_arg, double den_arg) // Gamma(num_arg)/Gamma(den_arg)
{
    return std::exp(log_gamma(num_arg) - log_gamma(den_arg));
}

double factorial(int n)
{
    return std::exp(log_gamma(n + 1.0));
}

std::complex<double> phase(int m, double angle)
{
    return std::polar(1.0, m * angle);
}

using detail::pow_nonneg;

// theta part of the 3D harmonic, constants included.
double sph3_theta(int rank, int abs_m, double theta)
{
    const double coef = double_factorial(2 * abs_m - 1)
                      * std::sqrt((2.0 * rank + 1.0) / (4.0 * pi)
                                  * fact_ratio(rank - abs_m + 1.0, rank + abs_m + 1.0));
    return coef * pow_nonneg(std::sin(theta), abs_m)
         * gegenbauer(rank - abs_m, abs_m + 0.5, std::cos(theta));
}

// omega part of the 4D axis harmonic.
double axis4_omega(int rank, int l, double omega)
{
    const double coef = factorial(l)
                      * std::sqrt(2.0 * (rank + 1.0) / pi
                                  * fact_ratio(rank - l + 1.0, rank + l + 2.0));
    return coef * pow_nonneg(2.0 * std::sin(omega), l)
         * gegenbauer(rank - l, l + 1.0, std::cos(omega));
}

// beta part of the 4D two-planar harmonic, zero when the selection rule
// fails. a1, a2 are the magnetic magnitudes.
double split4_beta(int rank, int a1, int a2, double beta)
{
    const int t = rank - a1 - a2;
    if (t < 0 || t % 2 != 0)
        return 0.0;
    const int lambda = t / 2;
    const double k = std::sqrt((rank + 1.0) / 2.0
                               * factorial(lambda) * factorial(lambda + a1 + a2)
                               / (factorial(lambda + a1) * factorial(lambda + a2))) / pi;
    return k * pow_nonneg(std::cos(beta), a1) * pow_nonneg(std::sin(beta), a2)
         * jacobi(lambda, a2, a1, std::cos(2.0 * beta));
}

double hsh5_beta(int rank, int amu, int l, double beta)
{
    const int t = rank - l - amu;
    if (t < 0 || t % 2 != 0)
        return 0.0;
    const int lambda = t / 2;
    const double k = std::sqrt((2.0 * rank + 3.0)
                               * fact_ratio(lambda + 1.0, lambda + amu + 1.0)
                               * double_factorial(rank + l + amu + 1)
                               / (pi * std::pow(2.0, amu + 1)
                                  * double_factorial(rank + l - amu + 1)));
    return k * pow_nonneg(std::cos(beta), amu) * pow_nonneg(std::sin(beta), l)
         * jacobi(lambda, l + 0.5, amu, std::cos(2.0 * beta));
}

double hsh6_two3_alpha(int rank, int l1, int l2, double alpha)
{
    const int t = rank - l1 - l2;
    if (t < 0 || t % 2 != 0)
        return 0.0;
    const int lambda = t / 2;
    const double k = std::sqrt(std::pow(2.0, rank + 3) * (rank + 2.0)
                               * factorial(lambda) * factorial(lambda + l1 + l2 + 1)
                               / (pi * double_factorial(rank + l1 - l2 + 1)
                                     * double_factorial(rank - l1 + l2 + 1)));
    return k * pow_nonneg(std::cos(alpha), l1) * pow_nonneg(std::sin(alpha), l2)
         * jacobi(lambda, l2 + 0.5, l1 + 0.5, std::cos(2.0 * alpha));
}

double hsh6_three2_theta(int rank, int a1, int l, double theta)
{
    const int t = rank - a1 - l;
    if (t < 0 || t % 2 != 0)
        return 0.0;
    const int lambda = t / 2;
    const double k = std::sqrt((rank + 2.0)
                               * factorial(lambda) * factorial(lambda + a1 + l + 1)
                               / (pi * factorial(lambda + a1) * factorial(lambda + l + 1)));
    return k * pow_nonneg(std::cos(theta), a1) * pow_nonneg(std::sin(theta), l)
         * jacobi(lambda, l + 1.0, a1, std::cos(2.0 * theta));
}

void require(bool ok, const char* msg)
{
    if (!ok)
        throw std::domain_error(msg);
}

} // namespace

const std::vector<std::string>& family_names()
{
    static const std::vector<std::string> names = {
        "circular2", "spherical3", "hsh4_axis", "hsh4_split",
        "wigner4", "hsh5", "hsh6_two3", "hsh6_three2"};
    return names;
}

Family family_from_name(const std::string& name)
{
    const auto& names = family_names();
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name)
            return static_cast<Family>(i);
    throw std::invalid_argument("unknown catalog family: " + name);
}

std::string family_name(Family f)
{
    return family_names()[static_cast<std::size_t>(f)];
}

std::complex<double> circular2(int m, double phi)
{
    constexpr double inv_sqrt_2pi = 0.39894228040143267794;
    return std::polar(inv_sqrt_2pi, m * phi);
}

std::complex<double> spherical3(int rank, int m, double theta, double phi)
{
    require(rank >= 0 && std::abs(m) <= rank, "spherical3: need |m| <= rank");
    return sph3_theta(rank, std::abs(m), theta) * phase(m, phi);
}

std::complex<double> hsh4_axis(int rank, int l, int m, double omega, double theta, double phi)
{
    require(rank >= 0 && l >= 0 && l <= rank, "hsh4_axis: need 0 <= l <= rank");
    require(std::abs(m) <= l, "hsh4_axis: need |m| <= l");
    return axis4_omega(rank, l, omega) * spherical3(l, m, theta, phi);
}

std::complex<double> hsh4_split(int rank, int m1, int m2, double beta, double phi1, double phi2)
{
    require(rank >= 0, "hsh4_split: rank must be non-negative");
    return split4_beta(rank, std::abs(m1), std::abs(m2), beta)
         * phase(m1, phi1) * phase(m2, phi2);
}

std::complex<double> wigner4(int two_j, int two_mu, int two_nu,
                             double phi1, double beta, double phi2)
{
    require(two_j >= 0, "wigner4: two_j must be non-negative");
    require(std::abs(two_mu) <= two_j && std::abs(two_nu) <= two_j,
            "wigner4: need |mu|, |nu| <= j");
    require((two_mu - two_j) % 2 == 0 && (two_nu - two_j) % 2 == 0,
            "wigner4: mu, nu must have the integrality of j");
    return phase((two_mu + two_nu) / 2, phi1)
         * wigner_d(two_j, two_mu, two_nu, 2.0 * beta)
         * phase((two_mu - two_nu) / 2, phi2);
}

std::complex<double> hsh5(int rank, int mu, int l, int m,
                          double alpha, double beta, double theta, double phi)
{
    require(rank >= 0 && l >= 0, "hsh5: ranks must be non-negative");
    require(std::abs(m) <= l, "hsh5: need |m| <= l");
    return hsh5_beta(rank, std::abs(mu), l, beta) * phase(mu, alpha)
         * spherical3(l, m, theta, phi);
}

std::complex<double> hsh6_two3(int rank, int l1, int m1, int l2, int m2,
                               double alpha, double theta1, double phi1,
                               double theta2, double phi2)
{
    require(rank >= 0 && l1 >= 0 && l2 >= 0, "hsh6_two3: ranks must be non-negative");
    require(std::abs(m1) <= l1 && std::abs(m2) <= l2, "hsh6_two3: need |m| <= l");
    return hsh6_two3_alpha(rank, l1, l2, alpha)
         * spherical3(l1, m1, theta1, phi1) * spherical3(l2, m2, theta2, phi2);
}

std::complex<double> hsh6_three2(int rank, int l, int m1, int m2, int m3,
                                 double theta, double beta,
                                 double phi1, double phi2, double phi3)
{
    require(rank >= 0 && l >= 0, "hsh6_three2: ranks must be non-negative");
    return hsh6_three2_theta(rank, std::abs(m1), l, theta) * phase(m1, phi1)
         * hsh4_split(l, m2, m3, beta, phi2, phi3);
}

double wigner_d(int two_j, int two_mu, int two_nu, double beta)
{
    require(two_j >= 0, "wigner_d: two_j must be non-negative");
    require(std::abs(two_mu) <= two_j && std::abs(two_nu) <= two_j,
            "wigner_d: need |mu|, |nu| <= j");
    require((two_mu - two_j) % 2 == 0 && (two_nu - two_j) % 2 == 0,
            "wigner_d: mu, nu must have the integrality of j");
    if (two_j == 0)
        return 1.0;

    const double c = std::cos(0.5 * beta);
    const double s = std::sin(0.5 * beta);

    // Couple one spin one-half at a time: the top-rank block of the product
    // d^{1/2} x d^{j-1/2} gives d^j through the doubled-index relation below.
    // Rows mu, cols nu, index 0 = lowest projection.
    std::vector<double> cur{c, s, -s, c};
    for (int tj = 2; tj <= two_j; ++tj) {
        const int n_prev = tj;    // (2 (j-1/2) + 1)
        const int n = tj + 1;
        std::vector<double> next(static_cast<std::size_t>(n) * n, 0.0);
        const double j2 = tj;     // 2j
        auto prev = [&](int im, int in) -> double {
            if (im < 0 || in < 0 || im >= n_prev || in >= n_prev)
                return 0.0;
            return cur[static_cast<std::size_t>(im) * n_prev + in];
        };
        for (int im = 0; im < n; ++im) {
            const double jm = im;          // j + mu
            const double jmm = j2 - im;    // j - mu
            for (int in = 0; in < n; ++in) {
                const double jn = in;      // j + nu
                const double jnn = j2 - in;
                double v = 0.0;
                v += std::sqrt(jm * jn) * c * prev(im - 1, in - 1);
                v -= std::sqrt(jm * jnn) * s * prev(im - 1, in);
                v += std::sqrt(jmm * jn) * s * prev(im, in - 1);
                v += std::sqrt(jmm * jnn) * c * prev(im, in);
                next[static_cast<std::size_t>(im) * n + in] = v / j2;
            }
        }
        cur = std::move(next);
    }
    const int im = (two_mu + two_j) / 2;
    const int in = (two_nu + two_j) / 2;
    return cur[static_cast<std::size_t>(im) * (two_j + 1) + in];
}

std::vector<CatalogIndex> enumerate_family(Family f, int max_rank)
{
    std::vector<CatalogIndex> out;
    auto signed_values = [](int a) {
        return a == 0 ? std::vector<int>{0} : std::vector<int>{-a, a};
    };
    switch (f) {
    case Family::circular2:
        for (int r = 0; r <= max_rank; ++r)
            for (int m : signed_values(r))
                out.push_back({{m}});
        break;
    case Family::spherical3:
        for (int j = 0; j <= max_rank; ++j)
            for (int m = -j; m <= j; ++m)
                out.push_back({{j, m}});
        break;
    case Family::hsh4_axis:
        for (int j = 0; j <= max_rank; ++j)
            for (int l = 0; l <= j; ++l)
                for (int m = -l; m <= l; ++m)
                    out.push_back({{j, l, m}});
        break;
    case Family::hsh4_split:
        for (int j = 0; j <= max_rank; ++j)
            for (int a1 = 0; a1 <= j; ++a1)
                for (int a2 = (j - a1) % 2; a2 <= j - a1; a2 += 2)
                    for (int m1 : signed_values(a1))
                        for (int m2 : signed_values(a2))
                            out.push_back({{j, m1, m2}});
        break;
    case Family::wigner4:
        for (int tj = 0; tj <= max_rank; ++tj)
            for (int tmu = -tj; tmu <= tj; tmu += 2)
                for (int tnu = -tj; tnu <= tj; tnu += 2)
                    out.push_back({{tj, tmu, tnu}});
        break;
    case Family::hsh5:
        for (int j = 0; j <= max_rank; ++j)
            for (int amu = 0; amu <= j; ++amu)
                for (int l = (j - amu) % 2; l <= j - amu; l += 2)
                    for (int mu : signed_values(amu))
                        for (int m = -l; m <= l; ++m)
                            out.push_back({{j, mu, l, m}});
        break;
    case Family::hsh6_two3:
        for (int j = 0; j <= max_rank; ++j)
            for (int l1 = 0; l1 <= j; ++l1)
                for (int l2 = (j - l1) % 2; l2 <= j - l1; l2 += 2)
                    for (int m1 = -l1; m1 <= l1; ++m1)
                        for (int m2 = -l2; m2 <= l2; ++m2)
                            out.push_back({{j, l1, m1, l2, m2}});
        break;
    case Family::hsh6_three2:
        for (int j = 0; j <= max_rank; ++j)
            for (int a1 = 0; a1 <= j; ++a1)
                for (int l = (j - a1) % 2; l <= j - a1; l += 2)
                    for (int m1 : signed_values(a1))
                        for (int a2 = 0; a2 <= l; ++a2)
                            for (int a3 = (l - a2) % 2; a3 <= l - a2; a3 += 2)
                                for (int m2 : signed_values(a2))
                                    for (int m3 : signed_values(a3))
                                        out.push_back({{j, l, m1, m2, m3}});
        break;
    }
    return out;
}

int index_rank(Family f, const CatalogIndex& idx)
{
    switch (f) {
    case Family::circular2: return std::abs(idx.q[0]);
    default: return idx.q[0];
    }
}

std::vector<AngleSpec> angle_layout(Family f)
{
    using K = AngleKind;
    switch (f) {
    case Family::circular2:
        return {{K::azimuth}};
    case Family::spherical3:
        return {{K::polar_theta}, {K::azimuth}};
    case Family::hsh4_axis:
        return {{K::axis_theta, 4}, {K::polar_theta}, {K::azimuth}};
    case Family::hsh4_split:
        return {{K::split_theta, 4, 2}, {K::azimuth}, {K::azimuth}};
    case Family::wigner4:
        // Orthogonality holds under the rotation-angle measure sin(2 beta)
        // d(2 beta), which is 4x the geometric split weight cos sin.
        return {{K::split_theta, 4, 2, 4.0}, {K::azimuth}, {K::azimuth}};
    case Family::hsh5:
        return {{K::split_theta, 5, 2}, {K::azimuth}, {K::polar_theta}, {K::azimuth}};
    case Family::hsh6_two3:
        return {{K::split_theta, 6, 3}, {K::polar_theta}, {K::azimuth},
                {K::polar_theta}, {K::azimuth}};
    case Family::hsh6_three2:
        return {{K::split_theta, 6, 2}, {K::azimuth}, {K::split_theta, 4, 2},
                {K::azimuth}, {K::azimuth}};
    }
    throw std::logic_error("angle_layout: unknown family");
}

std::complex<double> angle_factor(Family f, const CatalogIndex& idx, int angle, double value)
{
    const auto& q = idx.q;
    switch (f) {
    case Family::circular2:
        return circular2(q[0], value);
    case Family::spherical3:
        return angle == 0 ? std::complex<double>(sph3_theta(q[0], std::abs(q[1]), value))
                          : phase(q[1], value);
    case Family::hsh4_axis:
        switch (angle) {
        case 0: return axis4_omega(q[0], q[1], value);
        case 1: return sph3_theta(q[1], std::abs(q[2]), value);
        default: return phase(q[2], value);
        }
    case Family::hsh4_split:
        switch (angle) {
        case 0: return split4_beta(q[0], std::abs(q[1]), std::abs(q[2]), value);
        case 1: return phase(q[1], value);
        default: return phase(q[2], value);
        }
    case Family::wigner4:
        switch (angle) {
        case 0: return wigner_d(q[0], q[1], q[2], 2.0 * value);
        case 1: return phase((q[1] + q[2]) / 2, value);
        default: return phase((q[1] - q[2]) / 2, value);
        }
    case Family::hsh5:
        switch (angle) {
        case 0: return hsh5_beta(q[0], std::abs(q[1]), q[2], value);
        case 1: return phase(q[1], value);
        case 2: return sph3_theta(q[2], std::abs(q[3]), value);
        default: return phase(q[3], value);
        }
    case Family::hsh6_two3:
        switch (angle) {
        case 0: return hsh6_two3_alpha(q[0], q[1], q[3], value);
        case 1: return sph3_theta(q[1], std::abs(q[2]), value);
        case 2: return phase(q[2], value);
        case 3: return sph3_theta(q[3], std::abs(q[4]), value);
        default: return phase(q[4], value);
        }
    case Family::hsh6_three2:
        switch (angle) {
        case 0: return hsh6_three2_theta(q[0], std::abs(q[2]), q[1], value);
        case 1: return phase(q[2], value);
        case 2: return split4_beta(q[1], std::abs(q[3]), std::abs(q[4]), value);
        case 3: return phase(q[3], value);
        default: return phase(q[4], value);
        }
    }
    throw std::logic_error("angle_factor: unknown family");
}

std::complex<double> family_value(Family f, const CatalogIndex& idx,
                                  const std::vector<double>& angles)
{
    std::complex<double> v{1.0, 0.0};
    for (std::size_t a = 0; a < angles.size(); ++a)
        v *= angle_factor(f, idx, static_cast<int>(a), angles[a]);
    return v;
}

double expected_norm2(Family f, const CatalogIndex& idx)
{
    if (f == Family::wigner4)
        return 8.0 * pi * pi / (idx.q[0] + 1.0);
    return 1.0;
}

} // namespace hsh::catalog
