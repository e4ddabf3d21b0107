#include "hsh/coefficients.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "hsh/polynomials.hpp"

namespace hsh {

namespace detail {

double pow_nonneg(double base, int n)
{
    if (n < 0)
        throw std::domain_error("pow_nonneg: negative exponent");
    if (n == 0)
        return 1.0;
    if (base == 0.0)
        return 0.0;
    return std::pow(base, n);
}

std::complex<double> unit_imag_pow(int k)
{
    switch (((k % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
    }
}

double binomial(int n, int k)
{
    if (k < 0 || k > n)
        return 0.0;
    k = std::min(k, n - k);
    double c = 1.0;
    for (int i = 1; i <= k; ++i)
        c = c * (n - k + i) / i;
    return c;
}

} // namespace detail

namespace {

using detail::binomial;
using detail::pow_nonneg;
using detail::unit_imag_pow;

void require_split(const SplitSignature& s)
{
    if (s.total_dim < 4 || s.left_dim < 2 || s.left_dim > s.total_dim - 2)
        throw std::domain_error("split signature: need d >= 4 and 2 <= kappa <= d-2");
    if (s.rank < 0 || s.left_rank < 0 || s.right_rank < 0)
        throw std::domain_error("split signature: ranks must be non-negative");
}

// The leading factor (l + dim/2 - 1) Gamma(dim/2 - 1) shared by the sum and
// closed forms. At dim == 2 the Gegenbauer family degenerates to Chebyshev
// and the factor is replaced by its finite limit: Gamma(1) for l = 0, and 2
// for l >= 1 (from C^a_l -> (2a/l) T_l as a -> 0).
double leading_factor(int dim, int l)
{
    if (dim == 2)
        return l == 0 ? 1.0 : 2.0;
    const double a = 0.5 * dim - 1.0;
    return std::exp(std::log(l + a) + log_gamma(a));
}

// B coefficient for l <= q of matching parity; callers filter everything else.
double b_coeff_unchecked(int dim, int q, int l)
{
    const int n = (q - l) / 2;
    const double a = 0.5 * dim - 1.0; // Gegenbauer index of the subspace family
    const double log_rest = log_gamma(q + 1.0) - q * std::numbers::ln2
                          - log_gamma(n + 1.0) - log_gamma(l + n + a + 1.0);
    return leading_factor(dim, l) * std::exp(log_rest);
}

} // namespace

double monomial_gegenbauer_coefficient(int dim, int power, int degree)
{
    if (dim < 2)
        throw std::domain_error("monomial_gegenbauer_coefficient: dim must be >= 2");
    if (power < 0)
        throw std::domain_error("monomial_gegenbauer_coefficient: power must be >= 0");
    if (degree < 0 || degree > power)
        throw std::domain_error("monomial_gegenbauer_coefficient: need 0 <= degree <= power");
    if ((power - degree) % 2 != 0)
        return 0.0;
    return b_coeff_unchecked(dim, power, degree);
}

std::complex<double> split_kernel_sum(const SplitSignature& sig, double theta)
{
    require_split(sig);
    const int J = sig.rank, l = sig.left_rank, lp = sig.right_rank;
    const double c = std::cos(theta), s = std::sin(theta);
    std::complex<double> acc{0.0, 0.0};
    // Terms need q >= l, J - q >= l' and matching parities on both factors;
    // an odd J - l - l' leaves the sum empty, which is the selection rule.
    for (int q = l; q <= J - lp; q += 2) {
        if ((J - q - lp) % 2 != 0)
            break;
        const double term = binomial(J, q)
                          * b_coeff_unchecked(sig.left_dim, q, l)
                          * b_coeff_unchecked(sig.total_dim - sig.left_dim, J - q, lp)
                          * pow_nonneg(c, q) * pow_nonneg(s, J - q);
        acc += unit_imag_pow(J - q) * term;
    }
    return acc;
}

std::complex<double> split_kernel_closed(const SplitSignature& sig, double theta)
{
    require_split(sig);
    if (!sig.selection_rule_ok())
        return {0.0, 0.0};
    const int J = sig.rank, l = sig.left_rank, lp = sig.right_rank;
    const int lambda = sig.node_degree();
    const double a = 0.5 * sig.left_dim - 1.0;
    const double b = 0.5 * (sig.total_dim - sig.left_dim) - 1.0;
    const double log_mag = log_gamma(J + 1.0) - J * std::numbers::ln2
                         + std::log(leading_factor(sig.left_dim, l))
                         + std::log(leading_factor(sig.total_dim - sig.left_dim, lp))
                         - log_gamma(lambda + l + a + 1.0)
                         - log_gamma(lambda + lp + b + 1.0);
    const double radial = pow_nonneg(std::cos(theta), l) * pow_nonneg(std::sin(theta), lp)
                        * jacobi(lambda, lp + b, l + a, std::cos(2.0 * theta));
    return unit_imag_pow(lp) * (std::exp(log_mag) * radial);
}

std::complex<double> axis_kernel_sum(int total_dim, int rank, int child_rank, double theta)
{
    if (total_dim < 3)
        throw std::domain_error("axis kernel: total_dim must be >= 3");
    if (child_rank < 0 || child_rank > rank)
        throw std::domain_error("axis kernel: need 0 <= child_rank <= rank");
    const int J = rank, l = child_rank;
    const double c = std::cos(theta), s = std::sin(theta);
    std::complex<double> acc{0.0, 0.0};
    for (int q = l; q <= J; q += 2) {
        const double term = binomial(J, q)
                          * b_coeff_unchecked(total_dim - 1, q, l)
                          * pow_nonneg(c, J - q) * pow_nonneg(s, q);
        acc += unit_imag_pow(q) * term;
    }
    return acc;
}

std::complex<double> axis_kernel_closed(int total_dim, int rank, int child_rank, double theta)
{
    if (total_dim < 3)
        throw std::domain_error("axis kernel: total_dim must be >= 3");
    if (child_rank < 0 || child_rank > rank)
        throw std::domain_error("axis kernel: need 0 <= child_rank <= rank");
    const int D = total_dim, J = rank, l = child_rank;
    const double nu = l + 0.5 * (D - 2);
    const double log_mag = (l + D - 3) * std::numbers::ln2 + log_gamma(J + 1.0)
                         + std::log(leading_factor(D - 1, l)) + log_gamma(nu)
                         - 0.5 * std::log(std::numbers::pi) - log_gamma(J + l + D - 2.0);
    const double radial = pow_nonneg(std::sin(theta), l)
                        * gegenbauer(J - l, nu, std::cos(theta));
    return unit_imag_pow(l) * (std::exp(log_mag) * radial);
}

double split_norm(const SplitSignature& sig)
{
    require_split(sig);
    if (!sig.selection_rule_ok())
        throw std::domain_error("split_norm: selection rule fails, lambda is not a non-negative integer");
    const int J = sig.rank, l = sig.left_rank, lp = sig.right_rank;
    const int kappa = sig.left_dim, d = sig.total_dim;
    const int lambda = sig.node_degree();
    const double log_n2 = std::log(2.0 * J + d - 2.0) + log_gamma(lambda + 1.0)
                        + log_gamma(lambda + l + lp + 0.5 * d - 1.0)
                        - log_gamma(lambda + lp + 0.5 * (d - kappa))
                        - log_gamma(lambda + l + 0.5 * kappa);
    return std::exp(0.5 * log_n2);
}

double split_weight(const SplitSignature& sig, double theta)
{
    require_split(sig);
    if (!sig.selection_rule_ok())
        return 0.0;
    const int l = sig.left_rank, lp = sig.right_rank;
    const double a = 0.5 * sig.left_dim - 1.0;
    const double b = 0.5 * (sig.total_dim - sig.left_dim) - 1.0;
    return split_norm(sig)
         * pow_nonneg(std::cos(theta), l) * pow_nonneg(std::sin(theta), lp)
         * jacobi(sig.node_degree(), lp + b, l + a, std::cos(2.0 * theta));
}

double axis_norm(const AxisSignature& sig)
{
    if (sig.total_dim < 3)
        throw std::domain_error("axis_norm: total_dim must be >= 3");
    if (sig.child_rank < 0 || sig.child_rank > sig.rank)
        throw std::domain_error("axis_norm: need 0 <= child_rank <= rank");
    const int D = sig.total_dim, J = sig.rank, l = sig.child_rank;
    const double nu = l + 0.5 * (D - 2);
    // Inverse square of the Gegenbauer L2 norm under weight sin^{D-2}.
    const double log_n2 = log_gamma(J - l + 1.0) + std::log(J + 0.5 * (D - 2))
                        + 2.0 * log_gamma(nu) + (2.0 * nu - 1.0) * std::numbers::ln2
                        - std::log(std::numbers::pi) - log_gamma(J + l + D - 2.0);
    return std::exp(0.5 * log_n2);
}

double axis_weight(const AxisSignature& sig, double theta)
{
    const int J = sig.rank, l = sig.child_rank;
    const double nu = l + 0.5 * (sig.total_dim - 2);
    return axis_norm(sig) * pow_nonneg(std::sin(theta), l)
         * gegenbauer(J - l, nu, std::cos(theta));
}

} // namespace hsh
