#include "aschar/ramification.hpp"

#include <algorithm>
#include <array>

namespace aschar {
namespace {

int level_of_coordinates(gf2::Vec v, int f) {
  const int h = gf2::highest_bit(v);
  if (h <= 0) return 0;
  return 2 * ((h - 1) / f) + 1;
}

BreakProfile profile_from_levels(std::array<int, 3> levels) {
  std::sort(levels.begin(), levels.end());
  if (levels[1] != levels[2]) {
    // Two elements of a plane with distinct top levels force the third to the top level.
    throw std::logic_error("plane levels violate the ultrametric rule");
  }
  if (levels[0] == 0) return Case1{levels[2]};
  if (levels[0] == levels[2]) return Case21{levels[0]};
  return Case22{levels[0], levels[2]};
}

// G^u = G^{u_k} (of the given order) for u in (u_{k-1}, u_k]; trivial past the last jump.
struct UpperJump {
  int u;
  int order;
};

std::vector<UpperJump> upper_jumps(const BreakProfile& p) {
  return std::visit(
      [](const auto& c) -> std::vector<UpperJump> {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, QuadUnramified>) {
          return {{-1, 2}};
        } else if constexpr (std::is_same_v<T, QuadRamified>) {
          return {{c.t, 2}};
        } else if constexpr (std::is_same_v<T, Case1>) {
          return {{-1, 4}, {c.t, 2}};
        } else if constexpr (std::is_same_v<T, Case21>) {
          return {{c.t, 4}};
        } else {
          return {{c.t1, 4}, {c.t2, 2}};
        }
      },
      p);
}

std::uint64_t planes_in(int dim) {
  // Gaussian binomial [dim, 2]_2.
  const std::uint64_t n = std::uint64_t{1} << dim;
  return (n - 1) * (n - 2) / 6;
}

int ambient_dim_checked(int max_break, int f) {
  const int dim = coset_space_dim(max_break, f);
  if (dim > kMaxAmbientDim) {
    throw InfeasibleEnumeration("V_" + std::to_string(max_break) + " has F_2-dimension " +
                                std::to_string(dim) + " > " + std::to_string(kMaxAmbientDim));
  }
  return dim;
}

}  // namespace

ExtLine::ExtLine(CosetRep gen) : gen_(std::move(gen)) {
  if (gen_.is_zero()) throw ZeroCoset();
}

ExtPlane::ExtPlane(CosetRep a, CosetRep b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_.is_zero() || b_.is_zero() || a_ == b_) {
    throw PreconditionViolated("plane generators must be F_2-linearly independent");
  }
}

std::vector<CosetRep> ExtPlane::nonzero_elements() const { return {a_, b_, a_ + b_}; }

ExtPlane ExtPlane::canonical() const {
  const std::array<gf2::Vec, 2> v{a_.coordinates(), b_.coordinates()};
  const auto rows = gf2::echelon(v);
  return ExtPlane(CosetRep::from_coordinates(a_.basis(), rows[0]),
                  CosetRep::from_coordinates(a_.basis(), rows[1]));
}

void validate(const BreakProfile& p) {
  auto odd_positive = [](int t) { return t > 0 && t % 2 == 1; };
  const bool ok = std::visit(
      [&](const auto& c) {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, QuadUnramified>) {
          return true;
        } else if constexpr (std::is_same_v<T, Case22>) {
          return odd_positive(c.t1) && odd_positive(c.t2) && c.t1 < c.t2;
        } else {
          return odd_positive(c.t);
        }
      },
      p);
  if (!ok) throw PreconditionViolated("positive ramification breaks must be odd and increasing");
}

std::string case_name(const BreakProfile& p) {
  static const std::array<const char*, 5> names{"quad-unramified", "quad-ramified", "case1",
                                                "case2.1", "case2.2"};
  return names[p.index()];
}

std::vector<int> upper_breaks(const BreakProfile& p) {
  std::vector<int> out;
  for (const auto& j : upper_jumps(p)) out.push_back(j.u);
  return out;
}

int level(const CosetRep& rep) {
  if (rep.is_zero()) throw ZeroCoset();
  const int n = rep.max_n();
  return n < 0 ? 0 : 2 * n + 1;
}

BreakProfile quad_breaks(const ExtLine& line) {
  const int t = level(line.gen());
  if (t == 0) return QuadUnramified{};
  return QuadRamified{t};
}

BreakProfile biquad_profile(const ExtPlane& plane) {
  const auto e = plane.nonzero_elements();
  return profile_from_levels({level(e[0]), level(e[1]), level(e[2])});
}

Rational depth_from_profile(const BreakProfile& p) { return upper_jumps(p).back().u; }

std::vector<LowerBreak> upper_to_lower(const BreakProfile& p) {
  const auto jumps = upper_jumps(p);
  int inertia_order = 1;
  for (const auto& j : jumps) {
    if (j.u >= 0) {
      inertia_order = j.order;
      break;
    }
  }
  auto psi = [&](int u) {
    Rational acc = 0;
    int prev = 0;
    for (const auto& j : jumps) {
      if (j.u < 0) continue;
      const int end = std::min(u, j.u);
      if (end > prev) acc += Rational(end - prev) * Rational(inertia_order, j.order);
      prev = std::max(prev, j.u);
      if (j.u >= u) break;
    }
    return acc;
  };
  std::vector<LowerBreak> out;
  for (const auto& j : jumps) out.push_back({j.u < 0 ? Rational(j.u) : psi(j.u), j.order});
  return out;
}

std::int64_t count_case1_closed_form(int t, int f) {
  validate(Case1{t});
  const int top = coset_space_dim(t, f), below = coset_space_dim(t - 1, f);
  if (top > 62) throw InfeasibleEnumeration("count exceeds 64-bit range");
  return (std::int64_t{1} << (top - 1)) - (std::int64_t{1} << (below - 1));
}

std::int64_t count_biquadratic_by_enumeration(const BreakProfile& profile, int f) {
  validate(profile);
  if (profile.index() < 2) throw PreconditionViolated("biquadratic counts need a plane profile");
  const int t_max = upper_breaks(profile).back();
  const int dim = ambient_dim_checked(t_max, f);
  if (planes_in(dim) > kMaxPlanesCounted) {
    throw InfeasibleEnumeration("V_" + std::to_string(t_max) + " contains " +
                                std::to_string(planes_in(dim)) + " planes");
  }
  // Each plane {a, b, a^b} is visited once, with a < b < a^b.
  const gf2::Vec end = gf2::Vec{1} << dim;
  std::int64_t count = 0;
  for (gf2::Vec a = 1; a < end; ++a) {
    const gf2::Vec top = gf2::Vec{1} << gf2::highest_bit(a);
    const int la = level_of_coordinates(a, f);
    for (gf2::Vec b = top << 1; b < end; ++b) {
      if (b & top) continue;
      const auto p = profile_from_levels(
          {la, level_of_coordinates(b, f), level_of_coordinates(a ^ b, f)});
      if (p == profile) ++count;
    }
  }
  return count;
}

CountResult count_biquadratic(const BreakProfile& profile, int f) {
  validate(profile);
  if (const auto* c1 = std::get_if<Case1>(&profile)) {
    return {count_case1_closed_form(c1->t, f), CountMethod::ClosedForm};
  }
  return {count_biquadratic_by_enumeration(profile, f), CountMethod::Enumeration};
}

std::vector<Extension> enumerate_extensions(ExtensionKind kind, int max_break, BasisPtr basis) {
  if (max_break < 0) throw PreconditionViolated("max_break must be >= 0");
  const int f = basis->size();
  const int dim = ambient_dim_checked(max_break, f);
  const gf2::Vec end = gf2::Vec{1} << dim;
  std::vector<Extension> out;

  if (kind == ExtensionKind::Quadratic) {
    for (gf2::Vec v = 1; v < end; ++v) {
      ExtLine line(CosetRep::from_coordinates(basis, v));
      auto profile = quad_breaks(line);
      out.push_back({std::move(line), profile});
    }
    return out;
  }

  if (planes_in(dim) > kMaxPlanesListed) {
    throw InfeasibleEnumeration("V_" + std::to_string(max_break) + " contains " +
                                std::to_string(planes_in(dim)) + " planes; listing is capped at " +
                                std::to_string(kMaxPlanesListed));
  }
  std::vector<std::array<gf2::Vec, 2>> planes;
  for (gf2::Vec a = 1; a < end; ++a) {
    const gf2::Vec top = gf2::Vec{1} << gf2::highest_bit(a);
    for (gf2::Vec b = top << 1; b < end; ++b) {
      if (b & top) continue;
      const std::array<gf2::Vec, 2> pair{a, b};
      const auto rows = gf2::echelon(pair);
      planes.push_back({rows[1], rows[0]});
    }
  }
  std::sort(planes.begin(), planes.end());
  for (const auto& [lo, hi] : planes) {
    ExtPlane plane(CosetRep::from_coordinates(basis, lo), CosetRep::from_coordinates(basis, hi));
    auto profile = biquad_profile(plane);
    out.push_back({std::move(plane), profile});
  }
  return out;
}

}  // namespace aschar
