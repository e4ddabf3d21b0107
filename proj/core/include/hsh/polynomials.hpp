#ifndef HSH_POLYNOMIALS_HPP
#define HSH_POLYNOMIALS_HPP

namespace hsh {

/// log Gamma(x) for x > 0.
double log_gamma(double x);

/// n!! with (-1)!! = 0!! = 1. Evaluated through log_gamma for n > 150 so the
/// intermediate product cannot overflow before the final exponentiation.
double double_factorial(int n);

/// Gegenbauer (ultraspherical) polynomial C^alpha_n(x) by the three-term
/// recurrence seeded with C_0 = 1, C_1 = 2 alpha x.
double gegenbauer(int degree, double alpha, double x);

/// Jacobi polynomial P^(alpha,beta)_n(x), alpha, beta > -1, by the standard
/// three-term recurrence.
double jacobi(int degree, double alpha, double beta, double x);

/// Chebyshev polynomial of the first kind, T_n(x).
double chebyshev_t(int degree, double x);

/// Arguments that are cosines of angles may stick out of [-1, 1] by rounding;
/// anything within 1e-12 is clamped, larger excursions are domain errors.
double clamp_unit(double x);

} // namespace hsh

#endif
