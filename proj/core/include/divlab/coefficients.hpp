#pragma once

#include <array>
#include <optional>
#include <string>

#include "divlab/lattice.hpp"

namespace divlab {

enum class CoefficientKind { Identity, AnisotropicSym, SmoothAntisym, BmoLog };

CoefficientKind coefficient_kind_from_string(const std::string& s);
std::string to_string(CoefficientKind k);

struct CoefficientParams {
  double lambda0 = 1.0;  // ellipticity constant in (0, 1]
  double kappa = 0.0;    // anti-symmetric amplitude
  std::array<double, 2> center = {0.5, 0.5};  // BMO_LOG singularity center
  /// Declared BMO bound on the anti-symmetric entries; when set, construction
  /// fails if the measured seminorm exceeds it.
  std::optional<double> declared_bmo_bound;
};

/// Per-cell coefficient matrix A = A^s + A^a with elliptic symmetric part and
/// anti-symmetric part controlled in BMO. Validated at construction:
///   - eigenvalues of A^s in [lambda0 - 1e-12, 1/lambda0 + 1e-12],
///   - bmo_seminorm of each anti-symmetric entry <= Lambda0.
class CoefficientField {
 public:
  /// dim = 1: sym = {a11}, antisym empty.
  /// dim = 2: sym = {a11, a12, a22}, antisym = {a12^a} with
  ///          A^a = [[0, a12^a], [-a12^a, 0]].
  CoefficientField(const Grid& grid, std::vector<RealVector> sym,
                   std::vector<RealVector> antisym, double lambda0,
                   std::optional<double> declared_bmo_bound = {});

  const Grid& grid() const { return grid_; }
  double lambda0() const { return lambda0_; }
  /// BMO bound Lambda0 (measured seminorm unless a larger bound was declared).
  double bmo_bound() const { return bmo_bound_; }

  double sym(Index cell, int i, int j) const;
  double antisym(Index cell, int i, int j) const;
  double entry(Index cell, int i, int j) const {
    return sym(cell, i, j) + antisym(cell, i, j);
  }

  bool is_symmetric() const;

  /// A -> A^T (negates the anti-symmetric part).
  CoefficientField transposed() const;

  const std::vector<RealVector>& sym_storage() const { return sym_; }
  const std::vector<RealVector>& antisym_storage() const { return antisym_; }

 private:
  Grid grid_;
  std::vector<RealVector> sym_;
  std::vector<RealVector> antisym_;
  double lambda0_;
  double bmo_bound_;
};

/// Coefficient generators.
///   IDENTITY:        A^s = I, A^a = 0.
///   ANISOTROPIC_SYM: diagonal A^s with smooth entries spanning
///                    [lambda0, 1/lambda0], A^a = 0.
///   SMOOTH_ANTISYM:  A^s = I, a12^a(x) = kappa sin(2 pi x1 / side)
///                    sin(2 pi x2 / side) (dim 2 only).
///   BMO_LOG:         A^s = I, a12^a(x) = kappa log(d_T(x, x0)/side + h/side)
///                    (dim 2 only; finite at the center cell by construction).
CoefficientField make_coefficients(CoefficientKind kind,
                                   const CoefficientParams& params,
                                   const Grid& grid);

}  // namespace divlab
