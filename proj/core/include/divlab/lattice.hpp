#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <cstdint>
#include <vector>

namespace divlab {

using Complex = std::complex<double>;
using RealVector = Eigen::VectorXd;
using ComplexVector = Eigen::VectorXcd;
using Index = Eigen::Index;

/// Periodic lattice on the torus [0, side)^dim, dim in {1, 2}. Cell centers
/// sit at (k + 1/2) h with h = side / n. All fields and operators in this
/// library live on such a grid.
class Grid {
 public:
  Grid(int dim, int points_per_axis, double side_length);

  int dim() const { return dim_; }
  int n() const { return n_; }
  double side() const { return side_; }
  double spacing() const { return h_; }
  Index cells() const { return cells_; }

  /// Linear cell index; axis 0 varies fastest.
  Index index(int i, int j = 0) const {
    return static_cast<Index>(wrap(i)) + static_cast<Index>(n_) * wrap(j);
  }
  std::array<int, 2> coords(Index idx) const {
    return {static_cast<int>(idx % n_), static_cast<int>(idx / n_)};
  }
  /// Center coordinate of a cell along one axis.
  double center(int k) const { return (k + 0.5) * h_; }

  /// Periodic neighbor of a cell, `by` steps along `axis`.
  Index shift(Index idx, int axis, int by) const;

  /// Distance between two reals on the periodic axis.
  double axis_distance(double a, double b) const;
  /// Euclidean torus distance between cell centers.
  double torus_distance(Index a, Index b) const;

  bool operator==(const Grid& other) const {
    return dim_ == other.dim_ && n_ == other.n_ && side_ == other.side_;
  }
  bool operator!=(const Grid& other) const { return !(*this == other); }

 private:
  int wrap(int k) const {
    int m = k % n_;
    return m < 0 ? m + n_ : m;
  }

  int dim_;
  int n_;
  double side_;
  double h_;
  Index cells_;
};

Grid make_grid(int dim, int points_per_axis, double side_length);

/// Complex scalar field, one value per cell.
struct Field {
  Field() = default;
  Field(const Grid& g, ComplexVector v);
  explicit Field(const Grid& g);  // zero field

  Grid grid{1, 2, 1.0};
  ComplexVector values;

  Index size() const { return values.size(); }
  Complex mean() const { return values.mean(); }
  bool is_real(double tol = 0.0) const;
};

/// dim-tuple of per-cell values; component i approximates the i-th partial.
struct VectorField {
  VectorField() = default;
  explicit VectorField(const Grid& g);

  Grid grid{1, 2, 1.0};
  std::vector<ComplexVector> comp;

  int dim() const { return static_cast<int>(comp.size()); }
  /// Pointwise Euclidean magnitude |v(x)|.
  RealVector magnitude() const;
};

// -- field algebra -----------------------------------------------------------

Field operator+(const Field& a, const Field& b);
Field operator-(const Field& a, const Field& b);
Field operator*(Complex s, const Field& f);
Field subtract_mean(const Field& f);

// -- discrete calculus --------------------------------------------------------

/// Forward-difference gradient with periodic wrap, anchored at cells:
/// (grad f)_i(x) = (f(x + h e_i) - f(x)) / h.
VectorField gradient(const Field& f);

/// Exact negative adjoint of `gradient`:
/// (div v)(x) = sum_i (v_i(x) - v_i(x - h e_i)) / h, so that
/// <grad f, v> = -<f, div v> holds to rounding for every field pair.
Field divergence(const VectorField& v);

/// Weighted L^2 pairing <f, g> = h^dim sum f conj(g).
Complex inner(const Field& f, const Field& g);
Complex inner(const VectorField& f, const VectorField& g);

/// (h^dim sum |f|^p)^{1/p}; p = infinity gives max |f|. Requires p >= 1.
double lp_norm(const Field& f, double p);
double lp_norm(const VectorField& v, double p);
double l2_norm(const Field& f);
double l2_norm(const VectorField& v);

// -- generators ---------------------------------------------------------------

/// e^{2 pi i k.x / side} evaluated at cell centers.
Field fourier_mode(const Grid& g, const std::array<int, 2>& k);

Field constant_field(const Grid& g, Complex value);

/// Indicator of a single cell (value 1 there, 0 elsewhere).
Field indicator(const Grid& g, Index cell);

/// Real field with iid standard normal entries.
Field random_real_field(const Grid& g, std::uint64_t seed);
Field random_complex_field(const Grid& g, std::uint64_t seed);

/// Real band-limited field from random Fourier coefficients on modes with
/// |k_i| <= max_mode, optionally projected to zero mean, normalized to unit
/// L^2 norm.
Field random_band_limited(const Grid& g, int max_mode, std::uint64_t seed,
                          bool mean_zero = true);

/// Sum of a few periodic Gaussian bumps with the given width, mean removed
/// when mean_zero is set, normalized to unit L^2 norm.
Field random_bumps(const Grid& g, int count, double width, std::uint64_t seed,
                   bool mean_zero = true);

}  // namespace divlab
