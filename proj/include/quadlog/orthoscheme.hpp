#pragma once

#include "quadlog/linalg.hpp"
#include "quadlog/polygons.hpp"

#include <optional>

namespace quadlog {

/// m+2 pairwise distinct points on P^1, exact rationals or infinity.
struct Configuration {
    std::vector<std::optional<Rational>> points; // nullopt = infinity

    size_t m() const { return points.size() - 2; }
    bool distinct() const;
    /// Literal hyperbolic order x_{m+1} < x_1 < ... < x_m < x_0 (all finite).
    bool hyperbolic() const;
    std::string str() const;
};

struct DegenerateConfiguration : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NonGenericOrthoscheme : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotHyperbolic : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The Maslov quadratic space E = Ker(sum of lines -> V) with its Gram
/// matrix in a deterministic kernel basis.
struct QuadraticSpace {
    QMatrix gram;        // m x m, basis of E
    QMatrix basis;       // (m+2) x m, columns = basis vectors in line coords
    QMatrix omega_half;  // (m+2) x (m+2) symmetric, q(u) = u^T omega_half u
};

QuadraticSpace maslov_space(const Configuration& c);

/// Coefficient vector of the line E_{i,j,k} inside the coordinate space.
std::vector<Rational> maslov_line(const Configuration& c, size_t i, size_t j, size_t k);

/// Generic projective orthoscheme: quadric Gram plus hyperplane covectors
/// H_1..H_m in the E-basis.
struct Orthoscheme {
    QMatrix gram;        // m x m
    QMatrix hyperplanes; // m rows, each a covector of length m
};

Orthoscheme ort(const Configuration& c);
Configuration conf(const Orthoscheme& s);

/// Extended corner covectors H_0 and H_{m+1}.
std::pair<std::vector<Rational>, std::vector<Rational>> corner_hyperplanes(const Orthoscheme& s);

/// Normalize by the Moebius map sending the first three points to inf,0,1.
Configuration mobius_normalize(const Configuration& c);

/// Faces and angles of ort(c) for I subset of {1..m}: the face configuration
/// and the join factors of the angle.
struct FaceAngle {
    Configuration face;
    std::vector<Configuration> angle_factors;
};
FaceAngle face_angle(const Configuration& c, const std::vector<size_t>& I);

/// Exact cross-ratio of four configuration points.
Rational config_cross_ratio(const Configuration& c, size_t a, size_t b, size_t x, size_t y);

/// Principal square roots of the quadrangle cross-ratios of a quadrangulation
/// of the standard polygon over this configuration; positive real on the edge
/// quadrangle and positive imaginary on angle quadrangles.
std::vector<std::complex<double>> sqrt_cross_ratios(const Configuration& c,
                                                    const Quadrangulation& q);

/// Klein-model vertices of the hyperbolic simplex for m = 4.
std::vector<std::array<double, 3>> klein_vertices(const Configuration& c);

/// Monte-Carlo volume of the orthoscheme in H^3 (m = 4), reproducible by seed.
std::pair<double, double> volume_mc(const Configuration& c, long samples, unsigned long seed);

/// Deterministic tensor-Gauss volume of the same simplex.
double volume_quadrature(const Configuration& c, int order = 48);

/// The alternating-polylogarithm quadrangulation formula evaluated with the
/// weight-2 single-valued dilogarithm; proportional to the volume.
double volume_quadrangulation(const Configuration& c);

} // namespace quadlog
