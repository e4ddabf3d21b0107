#ifndef HSH_CATALOG_HPP
#define HSH_CATALOG_HPP

#include <array>
#include <complex>
#include <string>
#include <vector>

namespace hsh::catalog {

/// The named closed-form families for d = 2..6, implemented directly from
/// their printed expressions as an independent check on the recursive tree
/// evaluation.
enum class Family {
    circular2,
    spherical3,
    hsh4_axis,
    hsh4_split,
    wigner4,
    hsh5,
    hsh6_two3,
    hsh6_three2,
};

const std::vector<std::string>& family_names();
Family family_from_name(const std::string& name);
std::string family_name(Family f);

std::complex<double> circular2(int m, double phi);

/// 3D harmonic; differs from the conventional spherical harmonic by the
/// phase (-1)^m only. Negative m through the phi -> -phi reflection.
std::complex<double> spherical3(int rank, int m, double theta, double phi);

std::complex<double> hsh4_axis(int rank, int l, int m, double omega, double theta, double phi);

/// 4D harmonic on two planar angles; zero when (rank-|m1|-|m2|)/2 is not a
/// non-negative integer.
std::complex<double> hsh4_split(int rank, int m1, int m2, double beta, double phi1, double phi2);

/// 4D harmonic in Wigner D-function form; j, mu, nu passed doubled so
/// half-integers stay integral. Rank is two_j.
std::complex<double> wigner4(int two_j, int two_mu, int two_nu, double phi1, double beta, double phi2);

std::complex<double> hsh5(int rank, int mu, int l, int m,
                          double alpha, double beta, double theta, double phi);

std::complex<double> hsh6_two3(int rank, int l1, int m1, int l2, int m2,
                               double alpha, double theta1, double phi1,
                               double theta2, double phi2);

std::complex<double> hsh6_three2(int rank, int l, int m1, int m2, int m3,
                                 double theta, double beta,
                                 double phi1, double phi2, double phi3);

/// Wigner small-d matrix element d^j_{mu nu}(beta), built by the half-angle
/// product recurrence from the j = 1/2 seed; independent of the Jacobi
/// polynomial route used by hsh4_split.
double wigner_d(int two_j, int two_mu, int two_nu, double beta);

/// Catalog indices packed per family:
///   circular2      {m}
///   spherical3     {J, m}
///   hsh4_axis      {J, l, m}
///   hsh4_split     {J, m1, m2}
///   wigner4        {two_j, two_mu, two_nu}
///   hsh5           {J, mu, l, m}
///   hsh6_two3      {J, l1, m1, l2, m2}
///   hsh6_three2    {J, l, m1, m2, m3}
struct CatalogIndex {
    std::array<int, 5> q{};
    bool operator==(const CatalogIndex&) const = default;
};

/// All selection-rule-valid indices of rank <= max_rank, deterministic order.
std::vector<CatalogIndex> enumerate_family(Family f, int max_rank);

int index_rank(Family f, const CatalogIndex& idx);

/// Angle layout of a family, mirroring the angular measure factors. Used by
/// the verification module to build per-angle quadratures.
enum class AngleKind { split_theta, axis_theta, polar_theta, azimuth };
struct AngleSpec {
    AngleKind kind;
    int dim = 0;   // total dimension at a split/axis node
    int kappa = 0; // left dimension at a split node
    double scale = 1.0;
};
std::vector<AngleSpec> angle_layout(Family f);

/// Per-angle factor of one catalog function; the product over all angles is
/// the function value. Constants are carried by the first non-azimuthal
/// factor of each block.
std::complex<double> angle_factor(Family f, const CatalogIndex& idx, int angle, double value);

/// Full value from an angle tuple in layout order.
std::complex<double> family_value(Family f, const CatalogIndex& idx,
                                  const std::vector<double>& angles);

/// Squared L2 norm of the family member under the family measure; 1 for all
/// families except wigner4, whose members have norm 8 pi^2 / (2j+1).
double expected_norm2(Family f, const CatalogIndex& idx);

} // namespace hsh::catalog

#endif
