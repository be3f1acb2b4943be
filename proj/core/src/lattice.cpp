#include "divlab/lattice.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "divlab/rng.hpp"

namespace divlab {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

Grid::Grid(int dim, int points_per_axis, double side_length)
    : dim_(dim), n_(points_per_axis), side_(side_length) {
  if (dim != 1 && dim != 2)
    throw std::invalid_argument("Grid: dim must be 1 or 2");
  if (points_per_axis < 2)
    throw std::invalid_argument("Grid: points_per_axis must be >= 2");
  if (!(side_length > 0.0))
    throw std::invalid_argument("Grid: side_length must be positive");
  h_ = side_ / n_;
  cells_ = 1;
  for (int d = 0; d < dim_; ++d) cells_ *= n_;
}

Index Grid::shift(Index idx, int axis, int by) const {
  auto c = coords(idx);
  if (axis == 0) return index(c[0] + by, c[1]);
  return index(c[0], c[1] + by);
}

double Grid::axis_distance(double a, double b) const {
  double d = std::fabs(a - b);
  d = std::fmod(d, side_);
  return std::min(d, side_ - d);
}

double Grid::torus_distance(Index a, Index b) const {
  const auto ca = coords(a);
  const auto cb = coords(b);
  double s = 0.0;
  for (int d = 0; d < dim_; ++d) {
    const double dd = axis_distance(center(ca[d]), center(cb[d]));
    s += dd * dd;
  }
  return std::sqrt(s);
}

Grid make_grid(int dim, int points_per_axis, double side_length) {
  return Grid(dim, points_per_axis, side_length);
}

Field::Field(const Grid& g, ComplexVector v) : grid(g), values(std::move(v)) {
  if (values.size() != grid.cells())
    throw std::invalid_argument("Field: value count must equal cell count");
  if (!values.allFinite()) throw std::invalid_argument("Field: non-finite entries");
}

Field::Field(const Grid& g)
    : grid(g), values(ComplexVector::Zero(g.cells())) {}

bool Field::is_real(double tol) const {
  for (Index i = 0; i < values.size(); ++i)
    if (std::fabs(values[i].imag()) > tol) return false;
  return true;
}

VectorField::VectorField(const Grid& g) : grid(g) {
  comp.assign(g.dim(), ComplexVector::Zero(g.cells()));
}

RealVector VectorField::magnitude() const {
  RealVector m = RealVector::Zero(grid.cells());
  for (const auto& c : comp) m += c.cwiseAbs2().real();
  return m.cwiseSqrt();
}

Field operator+(const Field& a, const Field& b) {
  if (a.grid != b.grid) throw std::invalid_argument("field grids differ");
  return Field(a.grid, a.values + b.values);
}

Field operator-(const Field& a, const Field& b) {
  if (a.grid != b.grid) throw std::invalid_argument("field grids differ");
  return Field(a.grid, a.values - b.values);
}

Field operator*(Complex s, const Field& f) { return Field(f.grid, s * f.values); }

Field subtract_mean(const Field& f) {
  return Field(f.grid, f.values.array() - f.mean());
}

VectorField gradient(const Field& f) {
  const Grid& g = f.grid;
  VectorField out(g);
  const double inv_h = 1.0 / g.spacing();
  for (int d = 0; d < g.dim(); ++d) {
    ComplexVector& c = out.comp[d];
    for (Index i = 0; i < g.cells(); ++i)
      c[i] = (f.values[g.shift(i, d, 1)] - f.values[i]) * inv_h;
  }
  return out;
}

Field divergence(const VectorField& v) {
  const Grid& g = v.grid;
  if (v.dim() != g.dim()) throw std::invalid_argument("divergence: component count");
  Field out(g);
  const double inv_h = 1.0 / g.spacing();
  for (int d = 0; d < g.dim(); ++d) {
    const ComplexVector& c = v.comp[d];
    for (Index i = 0; i < g.cells(); ++i)
      out.values[i] += (c[i] - c[g.shift(i, d, -1)]) * inv_h;
  }
  return out;
}

Complex inner(const Field& f, const Field& g) {
  if (f.grid != g.grid) throw std::invalid_argument("inner: grids differ");
  const double w = std::pow(f.grid.spacing(), f.grid.dim());
  return w * g.values.dot(f.values);  // Eigen dot conjugates the left factor
}

Complex inner(const VectorField& f, const VectorField& g) {
  if (f.grid != g.grid) throw std::invalid_argument("inner: grids differ");
  const double w = std::pow(f.grid.spacing(), f.grid.dim());
  Complex s = 0.0;
  for (int d = 0; d < f.dim(); ++d) s += g.comp[d].dot(f.comp[d]);
  return w * s;
}

namespace {
double weighted_lp(const RealVector& absvals, double p, double cell_volume) {
  if (p < 1.0) throw std::invalid_argument("lp_norm: p must be >= 1");
  if (std::isinf(p)) return absvals.maxCoeff();
  if (p == 2.0) return std::sqrt(cell_volume) * absvals.norm();
  double s = 0.0;
  for (Index i = 0; i < absvals.size(); ++i) s += std::pow(absvals[i], p);
  return std::pow(cell_volume * s, 1.0 / p);
}
}  // namespace

double lp_norm(const Field& f, double p) {
  const double vol = std::pow(f.grid.spacing(), f.grid.dim());
  return weighted_lp(f.values.cwiseAbs(), p, vol);
}

double lp_norm(const VectorField& v, double p) {
  const double vol = std::pow(v.grid.spacing(), v.grid.dim());
  return weighted_lp(v.magnitude(), p, vol);
}

double l2_norm(const Field& f) { return lp_norm(f, 2.0); }
double l2_norm(const VectorField& v) { return lp_norm(v, 2.0); }

Field fourier_mode(const Grid& g, const std::array<int, 2>& k) {
  Field out(g);
  for (Index i = 0; i < g.cells(); ++i) {
    const auto c = g.coords(i);
    double phase = kTwoPi * k[0] * g.center(c[0]) / g.side();
    if (g.dim() == 2) phase += kTwoPi * k[1] * g.center(c[1]) / g.side();
    out.values[i] = Complex(std::cos(phase), std::sin(phase));
  }
  return out;
}

Field constant_field(const Grid& g, Complex value) {
  return Field(g, ComplexVector::Constant(g.cells(), value));
}

Field indicator(const Grid& g, Index cell) {
  Field out(g);
  out.values[cell] = 1.0;
  return out;
}

Field random_real_field(const Grid& g, std::uint64_t seed) {
  Rng rng(seed);
  Field out(g);
  for (Index i = 0; i < g.cells(); ++i) out.values[i] = rng.gaussian();
  return out;
}

Field random_complex_field(const Grid& g, std::uint64_t seed) {
  Rng rng(seed);
  Field out(g);
  for (Index i = 0; i < g.cells(); ++i)
    out.values[i] = Complex(rng.gaussian(), rng.gaussian());
  return out;
}

Field random_band_limited(const Grid& g, int max_mode, std::uint64_t seed,
                          bool mean_zero) {
  Rng rng(seed);
  Field out(g);
  const int kmax = std::min(max_mode, g.n() / 2 - 1);
  for (int k0 = -kmax; k0 <= kmax; ++k0) {
    const int k1lo = g.dim() == 2 ? -kmax : 0;
    const int k1hi = g.dim() == 2 ? kmax : 0;
    for (int k1 = k1lo; k1 <= k1hi; ++k1) {
      if (mean_zero && k0 == 0 && k1 == 0) continue;
      const Complex amp(rng.gaussian(), rng.gaussian());
      const Field mode = fourier_mode(g, {k0, k1});
      out.values += (amp * mode.values).real().cast<Complex>();
    }
  }
  if (mean_zero) out = subtract_mean(out);
  const double nrm = l2_norm(out);
  if (nrm > 0) out = Complex(1.0 / nrm) * out;
  return out;
}

Field random_bumps(const Grid& g, int count, double width, std::uint64_t seed,
                   bool mean_zero) {
  Rng rng(seed);
  Field out(g);
  for (int b = 0; b < count; ++b) {
    std::array<double, 2> c = {rng.uniform(0.0, g.side()),
                               rng.uniform(0.0, g.side())};
    const double amp = rng.gaussian();
    for (Index i = 0; i < g.cells(); ++i) {
      const auto xy = g.coords(i);
      double d2 = 0.0;
      for (int d = 0; d < g.dim(); ++d) {
        const double dd = g.axis_distance(g.center(xy[d]), c[d]);
        d2 += dd * dd;
      }
      out.values[i] += amp * std::exp(-0.5 * d2 / (width * width));
    }
  }
  if (mean_zero) out = subtract_mean(out);
  const double nrm = l2_norm(out);
  if (nrm > 0) out = Complex(1.0 / nrm) * out;
  return out;
}

}  // namespace divlab
