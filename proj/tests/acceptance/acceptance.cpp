// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "aschar/depth.hpp"
#include "aschar/packets.hpp"
#include "oracles.hpp"

using namespace aschar;

namespace {

constexpr std::uint64_t kSeed = 20240601;
constexpr int kSamples = 1000;

struct Outcome {
  bool ok = true;
  std::string detail;
  long checks = 0;

  void expect(bool cond, const std::string& what) {
    ++checks;
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

BasisPtr power_basis(int f) {
  return std::make_shared<const TraceBasis>(TraceBasis::power_basis(Field::make(f)));
}

std::string name_of(int n, int j) { return "chi(" + std::to_string(n) + "," + std::to_string(j) + ")"; }

Outcome closed_form_vs_residue() {
  Outcome o;
  oracle::Gen gen(kSeed + 1);
  for (int f = 1; f <= 3; ++f) {
    const BasisPtr basis = power_basis(f);
    const FieldPtr F = basis->field();
    for (int s = 0; s < 2 * kSamples; ++s) {
      const bool unit = s < kSamples;
      int v = 0;
      while (!unit && v == 0) v = gen.range(-5, 5);
      const LaurentSeries alpha = gen.series(F, v, 13);
      for (int n = 0; n <= 5; ++n) {
        for (int j = 1; j <= f; ++j) {
          const CosetRep g = CosetRep::generator(basis, n, j);
          o.expect(char_eval(g, alpha) == pairing(alpha, g), "f=" + std::to_string(f) + " " + name_of(n, j));
        }
      }
    }
  }
  return o;
}

Outcome worked_characters() {
  Outcome o;
  oracle::Gen gen(kSeed + 2);
  for (int f = 1; f <= 3; ++f) {
    const BasisPtr basis = power_basis(f);
    const Field& F = *basis->field();
    for (int s = 0; s < kSamples; ++s) {
      ProductExpansion e{basis->field(), gen.range(-3, 3), gen.nonzero(F), {}, 0};
      e.prec = e.k + 7;
      for (int i = 1; i < 7; ++i) e.thetas.push_back(gen.element(F));
      const LaurentSeries alpha = from_product(e);
      const Bits t1 = e.theta(1), t3 = e.theta(3), t5 = e.theta(5);
      const bool want[3] = {F.trace(t1), F.trace(F.pow(t1, 3) ^ t3), F.trace(F.pow(t1, 5) ^ t5)};
      for (int n = 0; n <= 2; ++n) {
        const CosetRep g = CosetRep::generator(basis, n, 1);
        o.expect(char_eval(g, alpha) == want[n], "closed form " + name_of(n, 1));
        o.expect(pairing(alpha, g) == want[n], "residue " + name_of(n, 1));
        o.expect(oracle::pairing(alpha, g.to_series()) == want[n], "definition " + name_of(n, 1));
      }
    }
  }
  return o;
}

Outcome level_law() {
  Outcome o;
  oracle::Gen gen(kSeed + 3);
  for (int f = 1; f <= 3; ++f) {
    const BasisPtr basis = power_basis(f);
    const FieldPtr F = basis->field();
    for (int n = 0; n <= 4; ++n) {
      const int m = 2 * n + 1;
      for (int j = 1; j <= f; ++j) {
        const CosetRep g = CosetRep::generator(basis, n, j);
        bool nontrivial = false;
        for (Bits theta = 1; theta < F->order(); ++theta) {
          const auto alpha = LaurentSeries::from_terms(F, {{0, 1}, {m, theta}}, m + 1);
          const bool v = char_eval(g, alpha);
          o.expect(v == pairing(alpha, g), "paths disagree on U^" + std::to_string(m));
          nontrivial = nontrivial || v;
        }
        o.expect(nontrivial, name_of(n, j) + " trivial on U^" + std::to_string(m));
        for (int s = 0; s < 100; ++s) {
          const auto alpha =
              LaurentSeries::one(F, m + 5) + gen.series(F, gen.range(m + 1, m + 4), 8).truncated(m + 5);
          o.expect(!char_eval(g, alpha) && !pairing(alpha, g), name_of(n, j) + " nontrivial on U^" + std::to_string(m + 1));
        }
      }
    }
  }
  return o;
}

Outcome dimension_law() {
  Outcome o;
  for (int f = 1; f <= 3; ++f) {
    const BasisPtr basis = power_basis(f);
    for (int n = 0; n <= 9; ++n) {
      std::vector<std::uint64_t> vecs;
      for (int i = 0; i <= n; ++i) {
        for (Bits theta : basis->elements()) {
          vecs.push_back(reduce_coset(LaurentSeries::monomial(basis->field(), theta, -i, 1), basis).coordinates());
        }
      }
      const int want = 1 + (n + 1) / 2 * f;
      o.expect(oracle::rank_by_span(vecs) == want && coset_space_dim(n, f) == want,
               "f=" + std::to_string(f) + " n=" + std::to_string(n));
    }
  }
  return o;
}

Outcome counting() {
  Outcome o;
  for (int f = 1; f <= 3; ++f) {
    const std::int64_t q = std::int64_t{1} << f;
    o.expect(oracle::naive_count(Case1{1}, f) == q - 1, "brute force Case 1 (-1,1), f=" + std::to_string(f));
    o.expect(count_biquadratic_by_enumeration(Case1{1}, f) == q - 1, "enumeration Case 1 (-1,1), f=" + std::to_string(f));
    o.expect(count_biquadratic(Case1{1}, f).count == q - 1, "count Case 1 (-1,1), f=" + std::to_string(f));
    for (int t = 1; t <= 5; t += 2) {
      const auto brute = oracle::naive_count(Case1{t}, f);
      o.expect(count_case1_closed_form(t, f) == brute && count_biquadratic_by_enumeration(Case1{t}, f) == brute,
               "Case 1 t=" + std::to_string(t) + " f=" + std::to_string(f));
    }
  }
  for (int t = 1; t <= 5; t += 2) {
    o.expect(oracle::naive_count(Case21{t}, 1) == 0 && count_biquadratic(Case21{t}, 1).count == 0,
             "Case 2.1 t=" + std::to_string(t) + " over F_2");
  }
  return o;
}

Outcome depth_pipeline() {
  Outcome o;
  for (int r = 1; r <= 31; r += 2) {
    const std::string at = " r=" + std::to_string(r);
    const DepthReport adj = depth_from_filtration(primitive_adjoint_filtration(r));
    const DepthReport lift = depth_from_filtration(primitive_lift_filtration(r));
    o.expect(adj.depth == Rational(r, 3), "octahedral adjoint" + at);
    o.expect(lift.depth == Rational(5 * r + 1, 12), "octahedral lift" + at);
    const bool integral = lift.conductor.denominator() == 1;
    o.expect(integral == ((r - 1) % 6 == 0), "integrality gate" + at);
    bool accepted = true;
    try {
      const DepthPair d = octahedral_depths(r);
      o.expect(d.proj == adj.depth && d.lift == lift.depth, "octahedral closed form" + at);
      const DepthPair t = tetrahedral_depths(r, false);
      o.expect(t.proj == d.proj && t.lift == d.lift, "totally ramified tetrahedral" + at);
    } catch (const InvalidRamificationDepth&) {
      accepted = false;
    }
    o.expect(accepted == integral, "octahedral validity" + at);
    const DepthPair t = tetrahedral_depths(r, true);
    o.expect(t.proj == Rational(r) && t.proj == depth_from_filtration(tetrahedral_unramified_adjoint_filtration(r)).depth,
             "tetrahedral adjoint" + at);
    o.expect(t.lift == Rational(5 * r + 1, 4) &&
                 t.lift == depth_from_filtration(tetrahedral_unramified_lift_filtration(r)).depth,
             "tetrahedral lift" + at);
  }
  return o;
}

Outcome strict_inequality() {
  Outcome o;
  for (int r = 1; r <= 31; r += 2) {
    if ((r - 1) % 6 == 0) {
      const DepthPair d = octahedral_depths(r);
      o.expect(d.lift > d.proj, "octahedral r=" + std::to_string(r));
      const DepthPair t = tetrahedral_depths(r, false);
      o.expect(t.lift > t.proj, "ramified tetrahedral r=" + std::to_string(r));
    }
    const DepthPair t = tetrahedral_depths(r, true);
    o.expect(t.lift > t.proj, "unramified tetrahedral r=" + std::to_string(r));
  }
  for (int d_lk = 1; d_lk <= 15; d_lk += 2) {
    for (int d_xi = d_lk + 1; d_xi <= 31; ++d_xi) {
      for (int d_xi_sq = 0; d_xi_sq < d_xi; ++d_xi_sq) {
        const DepthPair d = imprimitive_depths(d_xi, d_xi_sq, d_lk);
        o.expect(d.lift > d.proj, "imprimitive");
      }
    }
  }
  return o;
}

Outcome ps_depth() {
  Outcome o;
  for (int f = 1; f <= 3; ++f) {
    const BasisPtr basis = power_basis(f);
    for (int n = 0; n <= 8; ++n) {
      for (int j = 1; j <= f; ++j) {
        const ExtLine line(CosetRep::generator(basis, n, j));
        const Rational d = ps_parameter_depth(line);
        o.expect(d == Rational(2 * n + 1), "line " + name_of(n, j));
        o.expect(d == depth_from_profile(quad_breaks(line)), "profile of line " + name_of(n, j));
      }
    }
  }
  return o;
}

Outcome packet_arithmetic() {
  Outcome o;
  const BasisPtr basis = power_basis(2);
  const ExtPlane plane(CosetRep::unramified(basis), CosetRep::generator(basis, 1, 1));
  const std::vector<std::pair<ParamDescriptor, std::pair<int, int>>> families = {
      {Octahedral{7}, {1, 1}},
      {Tetrahedral{3, true}, {1, 1}},
      {SimplyImprimitive{3, 1, 1}, {2, 2}},
      {TriplyImprimitive{plane}, {4, 1}},
      {PrincipalSeries{ExtLine(CosetRep::generator(basis, 0, 1))}, {2, 0}},
      {PrincipalSeries{TrivialCharacter{}}, {1, 0}},
  };
  for (const auto& [d, cards] : families) {
    const PacketInfo info = classify(d);
    const std::string name = describe(d);
    o.expect(std::pair(info.card_sl2k, info.card_sl1d) == cards, name + " cardinalities");
    o.expect(info.torsion_order == info.s_phi_order, name + " torsion");
    o.expect(info.card_sl2k + info.card_sl1d == info.irreducible_count(), name + " card sum");
  }
  const PacketInfo q8 = classify(TriplyImprimitive{plane});
  o.expect(q8.script_s_order == 8 && q8.irreducible_count() == 5 && q8.card_sl2k + q8.card_sl1d == 5, "Q8 split 4+1");
  return o;
}

Outcome bilinearity() {
  Outcome o;
  oracle::Gen gen(kSeed + 10);
  for (int f = 1; f <= 3; ++f) {
    const BasisPtr basis = power_basis(f);
    const FieldPtr F = basis->field();
    for (int s = 0; s < kSamples; ++s) {
      const auto a1 = gen.series(F, gen.range(-3, 3), 12);
      const auto a2 = gen.series(F, gen.range(-3, 3), 12);
      const auto b1 = gen.coset_series(F, 9);
      const auto b2 = gen.coset_series(F, 9);
      const int vg = gen.range(-4, 0);
      const auto g = gen.series(F, vg, 2 - vg);
      o.expect(pairing(a1 * a2, b1) == (pairing(a1, b1) != pairing(a2, b1)), "additive in alpha");
      o.expect(pairing(a1, b1 + b2) == (pairing(a1, b1) != pairing(a1, b2)), "additive in beta");
      o.expect(!pairing(a1.square(), b1), "squares in left kernel");
      o.expect(!pairing(a1, wp(g)), "wp(K) in right kernel");
      o.expect(pairing(a1, b1) == pairing(a1, reduce_coset(b1, basis).to_series()), "coset well-definedness");
    }
  }
  return o;
}

struct Criterion {
  int id;
  std::string title;
  std::function<Outcome()> run;
  double time_limit_s;  // 0 for none
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "closed form vs residue", closed_form_vs_residue, 10},
      {2, "worked characters", worked_characters, 0},
      {3, "level law", level_law, 0},
      {4, "dimension law", dimension_law, 0},
      {5, "counting", counting, 30},
      {6, "depth pipeline", depth_pipeline, 0},
      {7, "strict inequality", strict_inequality, 0},
      {8, "principal-series depth", ps_depth, 0},
      {9, "packet arithmetic", packet_arithmetic, 0},
      {10, "bilinearity and kernels", bilinearity, 0},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && c.time_limit_s > 0 && secs >= c.time_limit_s) {
      o.ok = false;
      o.detail = "time limit exceeded";
    }
    failed += !o.ok;
    std::printf("[%s] %2d %-26s %8ld checks %7.2fs%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.title.c_str(), o.checks,
                secs, o.ok ? "" : "  ", o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
