#include "divlab/coefficients.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "divlab/spaces.hpp"

namespace divlab {

CoefficientKind coefficient_kind_from_string(const std::string& s) {
  if (s == "identity") return CoefficientKind::Identity;
  if (s == "anisotropic_sym") return CoefficientKind::AnisotropicSym;
  if (s == "smooth_antisym") return CoefficientKind::SmoothAntisym;
  if (s == "bmo_log") return CoefficientKind::BmoLog;
  throw std::invalid_argument("unknown coefficient kind: " + s);
}

std::string to_string(CoefficientKind k) {
  switch (k) {
    case CoefficientKind::Identity: return "identity";
    case CoefficientKind::AnisotropicSym: return "anisotropic_sym";
    case CoefficientKind::SmoothAntisym: return "smooth_antisym";
    case CoefficientKind::BmoLog: return "bmo_log";
  }
  return "?";
}

namespace {

constexpr double kEigTol = 1e-12;

void check_sym_spectrum(const Grid& g, const std::vector<RealVector>& sym,
                        double lambda0) {
  const double lo = lambda0 - kEigTol;
  const double hi = 1.0 / lambda0 + kEigTol;
  if (g.dim() == 1) {
    for (Index c = 0; c < g.cells(); ++c) {
      const double a = sym[0][c];
      if (a < lo || a > hi)
        throw std::invalid_argument("CoefficientField: ellipticity violated");
    }
    return;
  }
  for (Index c = 0; c < g.cells(); ++c) {
    const double a = sym[0][c], b = sym[1][c], d = sym[2][c];
    const double tr = 0.5 * (a + d);
    const double disc = std::sqrt(0.25 * (a - d) * (a - d) + b * b);
    const double emin = tr - disc, emax = tr + disc;
    if (emin < lo || emax > hi)
      throw std::invalid_argument("CoefficientField: ellipticity violated");
  }
}

}  // namespace

CoefficientField::CoefficientField(const Grid& grid,
                                   std::vector<RealVector> sym,
                                   std::vector<RealVector> antisym,
                                   double lambda0,
                                   std::optional<double> declared_bmo_bound)
    : grid_(grid),
      sym_(std::move(sym)),
      antisym_(std::move(antisym)),
      lambda0_(lambda0) {
  if (!(lambda0 > 0.0) || lambda0 > 1.0)
    throw std::invalid_argument("CoefficientField: lambda0 must be in (0, 1]");
  const std::size_t want_sym = grid.dim() == 1 ? 1 : 3;
  const std::size_t want_anti = grid.dim() == 1 ? 0 : 1;
  if (sym_.size() != want_sym || antisym_.size() != want_anti)
    throw std::invalid_argument("CoefficientField: wrong component count");
  for (const auto& v : sym_)
    if (v.size() != grid.cells())
      throw std::invalid_argument("CoefficientField: wrong cell count");
  for (const auto& v : antisym_)
    if (v.size() != grid.cells())
      throw std::invalid_argument("CoefficientField: wrong cell count");

  check_sym_spectrum(grid_, sym_, lambda0_);

  double measured = 0.0;
  for (const auto& v : antisym_) {
    Field entry(grid_, v.cast<Complex>());
    measured = std::max(measured, bmo_seminorm(entry));
  }
  if (declared_bmo_bound) {
    if (measured > *declared_bmo_bound * (1.0 + 1e-12) + 1e-15)
      throw std::invalid_argument(
          "CoefficientField: BMO seminorm exceeds declared bound");
    bmo_bound_ = *declared_bmo_bound;
  } else {
    bmo_bound_ = std::max(measured, 1e-300);
  }
}

double CoefficientField::sym(Index cell, int i, int j) const {
  if (grid_.dim() == 1) return sym_[0][cell];
  if (i == 0 && j == 0) return sym_[0][cell];
  if (i == 1 && j == 1) return sym_[2][cell];
  return sym_[1][cell];
}

double CoefficientField::antisym(Index cell, int i, int j) const {
  if (grid_.dim() == 1 || i == j) return 0.0;
  const double v = antisym_[0][cell];
  return i == 0 ? v : -v;
}

bool CoefficientField::is_symmetric() const {
  for (const auto& v : antisym_)
    if (v.cwiseAbs().maxCoeff() != 0.0) return false;
  return true;
}

CoefficientField CoefficientField::transposed() const {
  std::vector<RealVector> anti = antisym_;
  for (auto& v : anti) v = -v;
  return CoefficientField(grid_, sym_, std::move(anti), lambda0_, bmo_bound_);
}

CoefficientField make_coefficients(CoefficientKind kind,
                                   const CoefficientParams& params,
                                   const Grid& grid) {
  const Index nc = grid.cells();
  const double two_pi = 2.0 * std::numbers::pi;
  std::vector<RealVector> sym, antisym;
  if (grid.dim() == 2) antisym.push_back(RealVector::Zero(nc));

  switch (kind) {
    case CoefficientKind::Identity: {
      sym.assign(1, RealVector::Ones(nc));
      if (grid.dim() == 2) {
        sym.push_back(RealVector::Zero(nc));  // a12
        sym.push_back(RealVector::Ones(nc));  // a22
      }
      break;
    }
    case CoefficientKind::AnisotropicSym: {
      const double lo = params.lambda0, hi = 1.0 / params.lambda0;
      auto entry = [&](double x, double phase) {
        return lo + 0.5 * (hi - lo) * (1.0 + std::sin(two_pi * x / grid.side() + phase));
      };
      RealVector a11(nc), a22(nc);
      for (Index c = 0; c < nc; ++c) {
        const auto xy = grid.coords(c);
        a11[c] = entry(grid.center(xy[0]), 0.0);
        a22[c] = grid.dim() == 2 ? entry(grid.center(xy[1]), 1.0) : 0.0;
      }
      sym.push_back(a11);
      if (grid.dim() == 2) {
        sym.push_back(RealVector::Zero(nc));
        sym.push_back(a22);
      }
      break;
    }
    case CoefficientKind::SmoothAntisym: {
      if (grid.dim() != 2)
        throw std::invalid_argument("SMOOTH_ANTISYM requires dim 2");
      sym = {RealVector::Ones(nc), RealVector::Zero(nc), RealVector::Ones(nc)};
      for (Index c = 0; c < nc; ++c) {
        const auto xy = grid.coords(c);
        antisym[0][c] = params.kappa *
                        std::sin(two_pi * grid.center(xy[0]) / grid.side()) *
                        std::sin(two_pi * grid.center(xy[1]) / grid.side());
      }
      break;
    }
    case CoefficientKind::BmoLog: {
      if (grid.dim() != 2)
        throw std::invalid_argument("BMO_LOG requires dim 2");
      sym = {RealVector::Ones(nc), RealVector::Zero(nc), RealVector::Ones(nc)};
      const double hl = grid.spacing() / grid.side();
      for (Index c = 0; c < nc; ++c) {
        const auto xy = grid.coords(c);
        double d2 = 0.0;
        for (int d = 0; d < 2; ++d) {
          const double dd =
              grid.axis_distance(grid.center(xy[d]), params.center[d]);
          d2 += dd * dd;
        }
        antisym[0][c] =
            params.kappa * std::log(std::sqrt(d2) / grid.side() + hl);
      }
      break;
    }
  }

  return CoefficientField(grid, std::move(sym), std::move(antisym),
                          params.lambda0, params.declared_bmo_bound);
}

}  // namespace divlab
