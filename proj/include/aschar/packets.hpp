#pragma once

// L-packet sizes for SL_2(K) and its inner form SL_1(D) from the
// combinatorial type of an L-parameter.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "aschar/depth.hpp"
#include "aschar/ramification.hpp"

namespace aschar {

struct TrivialCharacter {};
// A character of order > 2; K/℘(K) does not see it, so its depth is supplied.
struct NonQuadraticCharacter {
  Rational depth;
};

struct PrincipalSeries {
  std::variant<ExtLine, TrivialCharacter, NonQuadraticCharacter> character;
};
struct Steinberg {};
struct SimplyImprimitive {
  int d_xi, d_xi_sq, d_lk;
};
struct TriplyImprimitive {
  ExtPlane plane;
};
struct Octahedral {
  int r;
};
struct Tetrahedral {
  int r;
  bool cubic_unramified;
};

using ParamDescriptor = std::variant<PrincipalSeries, Steinberg, SimplyImprimitive,
                                     TriplyImprimitive, Octahedral, Tetrahedral>;

struct PacketInfo {
  int torsion_order;    // |𝔗(φ)|
  int s_phi_order;      // |π_0(Z_PGL2(φ))|
  int script_s_order;   // |π_0(Z_SL2(φ))|
  std::string script_s_tag;  // "1", "Z2", "order4" (Z/4 or (Z/2)^2), "Q8"
  int z_phi_order;
  int card_sl2k;
  int card_sl1d;        // 0 when irrelevant
  bool relevant;        // for SL_1(D)
  Rational depth;       // d(φ)
  // d(φ̄) = d(π) where this module can compute it; otherwise d(π) >= depth.
  std::optional<Rational> lift_depth;
  bool essentially_tame;  // d(φ) = d(φ̄) = d(π)

  // Number of irreducible representations of π_0(Z_SL2(φ)).
  int irreducible_count() const { return script_s_tag == "Q8" ? 5 : script_s_order; }
};

enum class Imprimitivity { Simply, Triply };
// Order of ξ^σ ξ^{-1}: 2 -> triply imprimitive, > 2 -> simply imprimitive.
Imprimitivity imprimitivity_type(int order_of_twist);

PacketInfo classify(const ParamDescriptor& p);
std::string describe(const ParamDescriptor& p);

struct PacketRow {
  std::string descriptor;
  std::optional<BreakProfile> profile;
  PacketInfo info;
};

// Principal series rows for the lines and triply imprimitive rows for the
// planes of V_{max_break}, in enumeration order.
std::vector<PacketRow> packet_table(int max_break, BasisPtr basis, bool quadratic = true,
                                    bool biquadratic = true);

}  // namespace aschar
