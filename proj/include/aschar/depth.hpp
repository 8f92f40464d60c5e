#pragma once

// Artin conductors and depths of Weil group representations from their
// lower ramification filtrations, plus closed forms for the primitive and
// imprimitive two-dimensional cases. All values are exact rationals.

#include <optional>
#include <string>
#include <vector>

#include "aschar/ramification.hpp"
#include "aschar/rational.hpp"

namespace aschar {

// g[j] = |Gal(E/K)_j| for j = 0..J, nonincreasing; g_j = 1 beyond J.
struct FiltrationData {
  std::vector<int> g;
  int dim_v = 1;
  // dim V^{Gal(E/K)_j}; when absent, 0 while g_j > 1 and dim V once g_j = 1
  // (V irreducible, the ramification groups normal).
  std::optional<std::vector<int>> fixed_dims;
  bool inertia_in_kernel = false;

  void validate() const;  // PreconditionViolated on malformed data
};

enum class DepthFormula { InertiaInKernel, ConductorOverDim };

struct DepthReport {
  Rational conductor;
  Rational depth;
  DepthFormula formula_used;
  bool integrality_warning;  // conductor is not a nonnegative integer
};

// a(φ) = g_0^{-1} Σ_j g_j dim(V / V^{Gal_j}).
Rational artin_conductor(const FiltrationData& fd);
// 0 if inertia acts trivially, a(φ)/dim V - 1 otherwise.
DepthReport depth_from_filtration(const FiltrationData& fd);

struct DepthPair {
  Rational proj;  // d(φ) of the PGL_2 parameter
  Rational lift;  // d(φ̄) of a minimal GL_2 lift
};

// φ(W_K) ≅ S_4 with ramification depth r of the wild biquadratic step;
// needs r odd and r ≡ 1 (mod 6). Returns (r/3, (5r+1)/12).
DepthPair octahedral_depths(int r);
// Unramified cubic step: (r, (5r+1)/4) for odd r. Totally ramified: same as
// octahedral.
DepthPair tetrahedral_depths(int r, bool cubic_unramified);
// Induced from a character ξ of a ramified quadratic L/K:
// ((d(ξ²) + d(L/K))/2, (d(ξ) + d(L/K))/2).
DepthPair imprimitive_depths(int d_xi, int d_xi_sq, int d_lk);

// Depth of the principal series parameter attached to the quadratic
// character of line: 2n+1 for K(℘^{-1}(u_j t^{-2n-1})), -1 if unramified.
Rational ps_parameter_depth(const ExtLine& line);

// Lower filtrations used by the closed forms. The element z of the
// quaternion group is assumed to have depth exactly 2r+1, so the lifts set
// g_{2r+2} = 1. Any r >= 1 is accepted so integrality can be examined.
FiltrationData primitive_adjoint_filtration(int r);   // (12, 4 x r), dim 3
FiltrationData primitive_lift_filtration(int r);      // (24, 8 x r, 2 x (r+1)), dim 2
FiltrationData tetrahedral_unramified_adjoint_filtration(int r);  // (4 x (r+1)), dim 3
FiltrationData tetrahedral_unramified_lift_filtration(int r);     // (8 x (r+1), 2 x (r+1)), dim 2

}  // namespace aschar
