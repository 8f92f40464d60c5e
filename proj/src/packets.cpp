#include "aschar/packets.hpp"

#include "aschar/io.hpp"

namespace aschar {
namespace {

PacketInfo principal_series(const PrincipalSeries& ps) {
  PacketInfo info{};
  info.relevant = false;
  info.z_phi_order = 1;
  info.card_sl1d = 0;
  if (const auto* line = std::get_if<ExtLine>(&ps.character)) {
    // Image {1, diag(-1, 1)}: the centralizer is the normalizer of the torus.
    info.torsion_order = info.s_phi_order = info.script_s_order = 2;
    info.script_s_tag = "Z2";
    info.card_sl2k = 2;
    info.depth = ps_parameter_depth(*line);
    info.essentially_tame = line->gen().max_n() < 0;
    return info;
  }
  info.torsion_order = info.s_phi_order = info.script_s_order = 1;
  info.script_s_tag = "1";
  info.card_sl2k = 1;
  if (const auto* nq = std::get_if<NonQuadraticCharacter>(&ps.character)) {
    info.depth = nq->depth;
    info.essentially_tame = false;
  } else {
    info.depth = 0;
    info.essentially_tame = true;
  }
  return info;
}

// Relevant parameters with abelian π_0(Z_SL2(φ)) of order 2 |S_φ|.
PacketInfo relevant_abelian(int torsion, std::string tag) {
  PacketInfo info{};
  info.torsion_order = info.s_phi_order = torsion;
  info.z_phi_order = 2;
  info.script_s_order = 2 * torsion;
  info.script_s_tag = std::move(tag);
  info.relevant = true;
  info.card_sl2k = torsion;
  info.card_sl1d = torsion;
  return info;
}

}  // namespace

Imprimitivity imprimitivity_type(int order_of_twist) {
  if (order_of_twist < 2) {
    throw InvalidOrder("ξ^σ ξ^{-1} must be nontrivial for an irreducible induced parameter, got order " +
                       std::to_string(order_of_twist));
  }
  return order_of_twist == 2 ? Imprimitivity::Triply : Imprimitivity::Simply;
}

PacketInfo classify(const ParamDescriptor& p) {
  return std::visit(
      [](const auto& d) -> PacketInfo {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, PrincipalSeries>) {
          return principal_series(d);
        } else if constexpr (std::is_same_v<T, Steinberg>) {
          PacketInfo info = relevant_abelian(1, "Z2");
          info.depth = 0;
          info.lift_depth = Rational(0);
          info.essentially_tame = true;
          return info;
        } else if constexpr (std::is_same_v<T, SimplyImprimitive>) {
          const DepthPair dp = imprimitive_depths(d.d_xi, d.d_xi_sq, d.d_lk);
          PacketInfo info = relevant_abelian(2, "order4");
          info.depth = dp.proj;
          info.lift_depth = dp.lift;
          info.essentially_tame = false;  // induced from a ramified L/K
          return info;
        } else if constexpr (std::is_same_v<T, TriplyImprimitive>) {
          const BreakProfile profile = biquad_profile(d.plane);
          PacketInfo info{};
          info.torsion_order = info.s_phi_order = 4;
          info.z_phi_order = 2;
          // Unit quaternions: four characters and one 2-dimensional
          // representation, the latter with nontrivial central character.
          info.script_s_order = 8;
          info.script_s_tag = "Q8";
          info.relevant = true;
          info.card_sl2k = 4;
          info.card_sl1d = 1;
          info.depth = depth_from_profile(profile);
          // Case 1 planes contain V_0, so 𝔗(φ) has an unramified character.
          info.essentially_tame = std::holds_alternative<Case1>(profile);
          if (info.essentially_tame) info.lift_depth = info.depth;
          return info;
        } else if constexpr (std::is_same_v<T, Octahedral>) {
          const DepthPair dp = octahedral_depths(d.r);
          PacketInfo info = relevant_abelian(1, "Z2");
          info.depth = dp.proj;
          info.lift_depth = dp.lift;
          info.essentially_tame = false;
          return info;
        } else {
          const DepthPair dp = tetrahedral_depths(d.r, d.cubic_unramified);
          PacketInfo info = relevant_abelian(1, "Z2");
          info.depth = dp.proj;
          info.lift_depth = dp.lift;
          info.essentially_tame = false;
          return info;
        }
      },
      p);
}

std::string describe(const ParamDescriptor& p) {
  return std::visit(
      [](const auto& d) -> std::string {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, PrincipalSeries>) {
          if (const auto* line = std::get_if<ExtLine>(&d.character)) {
            return "principal-series(" + to_string(line->gen()) + ")";
          }
          if (const auto* nq = std::get_if<NonQuadraticCharacter>(&d.character)) {
            return "principal-series(non-quadratic,depth=" + to_string(nq->depth) + ")";
          }
          return "principal-series(trivial)";
        } else if constexpr (std::is_same_v<T, Steinberg>) {
          return "steinberg";
        } else if constexpr (std::is_same_v<T, SimplyImprimitive>) {
          return "simply-imprimitive(d_xi=" + std::to_string(d.d_xi) +
                 ",d_xi_sq=" + std::to_string(d.d_xi_sq) + ",d_lk=" + std::to_string(d.d_lk) + ")";
        } else if constexpr (std::is_same_v<T, TriplyImprimitive>) {
          return "triply-imprimitive(" + to_string(d.plane.first()) + " | " +
                 to_string(d.plane.second()) + ")";
        } else if constexpr (std::is_same_v<T, Octahedral>) {
          return "octahedral(r=" + std::to_string(d.r) + ")";
        } else {
          return "tetrahedral(r=" + std::to_string(d.r) +
                 (d.cubic_unramified ? ",unramified)" : ",totally-ramified)");
        }
      },
      p);
}

std::vector<PacketRow> packet_table(int max_break, BasisPtr basis, bool quadratic,
                                    bool biquadratic) {
  std::vector<PacketRow> rows;
  if (quadratic) {
    for (const auto& e : enumerate_extensions(ExtensionKind::Quadratic, max_break, basis)) {
      const ParamDescriptor d = PrincipalSeries{std::get<ExtLine>(e.ext)};
      rows.push_back({describe(d), e.profile, classify(d)});
    }
  }
  if (biquadratic) {
    for (const auto& e : enumerate_extensions(ExtensionKind::Biquadratic, max_break, basis)) {
      const ParamDescriptor d = TriplyImprimitive{std::get<ExtPlane>(e.ext)};
      rows.push_back({describe(d), e.profile, classify(d)});
    }
  }
  return rows;
}

}  // namespace aschar
