#include "aschar/depth.hpp"

namespace aschar {
namespace {

FiltrationData make_filtration(std::initializer_list<std::pair<int, int>> runs, int dim_v) {
  FiltrationData fd;
  fd.dim_v = dim_v;
  for (const auto& [order, count] : runs) fd.g.insert(fd.g.end(), static_cast<std::size_t>(count), order);
  return fd;
}

void require_positive(int r) {
  if (r < 1) throw PreconditionViolated("ramification depth r must be positive");
}

void require_odd_depth(int r) {
  if (r < 1 || r % 2 == 0) {
    throw InvalidRamificationDepth("ramification depth r = " + std::to_string(r) +
                                   " must be odd and positive");
  }
}

void require_primitive_depth(int r) {
  require_odd_depth(r);
  if (r % 6 != 1) {
    throw InvalidRamificationDepth("ramification depth r = " + std::to_string(r) +
                                   " gives a non-integral conductor; need r ≡ 1 (mod 6)");
  }
}

}  // namespace

void FiltrationData::validate() const {
  if (g.empty() || g.front() < 1) throw PreconditionViolated("need g_0 >= 1");
  if (dim_v < 1) throw PreconditionViolated("dim V must be positive");
  for (std::size_t j = 1; j < g.size(); ++j) {
    if (g[j] < 1 || g[j] > g[j - 1]) {
      throw PreconditionViolated("ramification orders must be positive and nonincreasing");
    }
  }
  if (fixed_dims) {
    if (fixed_dims->size() != g.size()) {
      throw PreconditionViolated("fixed_dims must have one entry per g_j");
    }
    for (int d : *fixed_dims) {
      if (d < 0 || d > dim_v) throw PreconditionViolated("fixed_dims entries must lie in [0, dim V]");
    }
  }
}

Rational artin_conductor(const FiltrationData& fd) {
  fd.validate();
  std::int64_t sum = 0;
  for (std::size_t j = 0; j < fd.g.size(); ++j) {
    const int fixed = fd.fixed_dims ? (*fd.fixed_dims)[j] : (fd.g[j] > 1 ? 0 : fd.dim_v);
    sum += std::int64_t{fd.g[j]} * (fd.dim_v - fixed);
  }
  return Rational(sum, fd.g.front());
}

DepthReport depth_from_filtration(const FiltrationData& fd) {
  DepthReport rep;
  rep.conductor = artin_conductor(fd);
  rep.integrality_warning = rep.conductor.denominator() != 1 || rep.conductor < 0;
  if (fd.inertia_in_kernel) {
    rep.depth = 0;
    rep.formula_used = DepthFormula::InertiaInKernel;
  } else {
    rep.depth = rep.conductor / fd.dim_v - 1;
    rep.formula_used = DepthFormula::ConductorOverDim;
  }
  return rep;
}

DepthPair octahedral_depths(int r) {
  require_primitive_depth(r);
  return {Rational(r, 3), Rational(5 * r + 1, 12)};
}

DepthPair tetrahedral_depths(int r, bool cubic_unramified) {
  if (!cubic_unramified) return octahedral_depths(r);
  require_odd_depth(r);
  return {Rational(r), Rational(5 * r + 1, 4)};
}

DepthPair imprimitive_depths(int d_xi, int d_xi_sq, int d_lk) {
  if (d_lk < 1) throw PreconditionViolated("d(L/K) must be positive");
  if (d_xi_sq < 0) throw PreconditionViolated("d(ξ²) must be nonnegative");
  if (!(d_xi > d_lk)) throw PreconditionViolated("minimal lift requires d(ξ) > d(L/K)");
  if (!(d_xi_sq < d_xi)) throw PreconditionViolated("requires d(ξ²) < d(ξ)");
  return {Rational(d_xi_sq + d_lk, 2), Rational(d_xi + d_lk, 2)};
}

Rational ps_parameter_depth(const ExtLine& line) { return char_level(QuadChar(line.gen())); }

FiltrationData primitive_adjoint_filtration(int r) {
  require_positive(r);
  return make_filtration({{12, 1}, {4, r}}, 3);
}

FiltrationData primitive_lift_filtration(int r) {
  require_positive(r);
  return make_filtration({{24, 1}, {8, r}, {2, r + 1}}, 2);
}

FiltrationData tetrahedral_unramified_adjoint_filtration(int r) {
  require_positive(r);
  return make_filtration({{4, r + 1}}, 3);
}

FiltrationData tetrahedral_unramified_lift_filtration(int r) {
  require_positive(r);
  return make_filtration({{8, r + 1}, {2, r + 1}}, 2);
}

}  // namespace aschar
