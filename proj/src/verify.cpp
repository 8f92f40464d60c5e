#include "aschar/verify.hpp"

#include <functional>
#include <map>
#include <random>

#include "aschar/depth.hpp"
#include "aschar/errors.hpp"
#include "aschar/io.hpp"
#include "aschar/packets.hpp"

namespace aschar {
namespace {

constexpr std::size_t kMaxReported = 10;
constexpr int kSamples = 1000;

class Checker {
 public:
  explicit Checker(SuiteReport& r) : r_(r) {}
  void expect(bool ok, const std::function<std::string()>& what) {
    ++r_.checks;
    if (ok) return;
    r_.passed = false;
    if (r_.failures.size() < kMaxReported) r_.failures.push_back(what());
  }

 private:
  SuiteReport& r_;
};

struct Rng {
  std::mt19937_64 gen;
  std::uint64_t bits(std::uint64_t bound) { return gen() % bound; }
  int range(int lo, int hi) { return lo + static_cast<int>(gen() % static_cast<std::uint64_t>(hi - lo + 1)); }
};

LaurentSeries random_series(Rng& rng, const FieldPtr& field, int val, int relprec) {
  std::map<int, Bits> terms;
  terms[val] = static_cast<Bits>(1 + rng.bits(field->order() - 1));
  for (int e = val + 1; e < val + relprec; ++e) terms[e] = static_cast<Bits>(rng.bits(field->order()));
  std::erase_if(terms, [](const auto& kv) { return kv.second == 0; });
  return LaurentSeries::from_terms(field, terms, val + relprec);
}

BasisPtr power_basis(int f) {
  return std::make_shared<const TraceBasis>(TraceBasis::power_basis(Field::make(f)));
}

void closed_form_vs_residue(Checker& c, Rng& rng) {
  constexpr int kMaxN = 5;
  for (int f = 1; f <= 3; ++f) {
    const BasisPtr basis = power_basis(f);
    const FieldPtr field = basis->field();
    for (int s = 0; s < kSamples; ++s) {
      const int val = s % 2 == 0 ? 0 : rng.range(-4, 4);
      const LaurentSeries alpha = random_series(rng, field, val, 2 * kMaxN + 3);
      const CosetRep unram = CosetRep::unramified(basis);
      c.expect(char_eval(unram, alpha) == pairing(alpha, unram),
               [&] { return "unramified, alpha = " + to_string(alpha); });
      for (int n = 0; n <= kMaxN; ++n) {
        for (int j = 1; j <= f; ++j) {
          const CosetRep g = CosetRep::generator(basis, n, j);
          c.expect(char_eval(g, alpha) == pairing(alpha, g), [&] {
            return "f=" + std::to_string(f) + " chi(" + std::to_string(n) + "," + std::to_string(j) +
                   "), alpha = " + to_string(alpha);
          });
        }
      }
    }
  }
}

void worked_characters(Checker& c, Rng& rng) {
  for (int f = 1; f <= 3; ++f) {
    const BasisPtr basis = power_basis(f);
    const FieldPtr field = basis->field();
    const Field& F = *field;
    for (int s = 0; s < kSamples; ++s) {
      const LaurentSeries alpha = random_series(rng, field, 0, 8);
      const ProductExpansion e = product_expansion(alpha);
      const Bits t1 = e.theta(1), t3 = e.theta(3), t5 = e.theta(5);
      for (int j = 1; j <= f; ++j) {
        const Bits u = basis->element(j);
        const bool want[3] = {F.trace(F.mul(u, t1)), F.trace(F.mul(u, F.pow(t1, 3) ^ t3)),
                              F.trace(F.mul(u, F.pow(t1, 5) ^ t5))};
        for (int n = 0; n <= 2; ++n) {
          const CosetRep g = CosetRep::generator(basis, n, j);
          c.expect(generator_eval(e, *basis, n, j) == want[n] && pairing(alpha, g) == want[n], [&] {
            return "chi(" + std::to_string(n) + "," + std::to_string(j) + "), alpha = " + to_string(alpha);
          });
        }
      }
    }
  }
}

void level_law(Checker& c, Rng& rng) {
  for (int f = 1; f <= 3; ++f) {
    const BasisPtr basis = power_basis(f);
    const FieldPtr field = basis->field();
    for (int n = 0; n <= 4; ++n) {
      const int m = 2 * n + 1;
      for (int j = 1; j <= f; ++j) {
        const CosetRep g = CosetRep::generator(basis, n, j);
        bool nontrivial = false;
        for (Bits theta = 1; theta < field->order(); ++theta) {
          const auto alpha = LaurentSeries::from_terms(field, {{0, 1}, {m, theta}}, m + 2);
          nontrivial = nontrivial || pairing(alpha, g);
        }
        c.expect(nontrivial, [&] { return "chi(" + std::to_string(n) + "," + std::to_string(j) + ") trivial on U^" + std::to_string(m); });
        for (int s = 0; s < kSamples / 10; ++s) {
          const LaurentSeries alpha = LaurentSeries::one(field, m + 6) +
                                      random_series(rng, field, m + 1 + rng.range(0, 2), 6).truncated(m + 6);
          c.expect(!pairing(alpha, g) && !char_eval(g, alpha), [&] {
            return "chi(" + std::to_string(n) + "," + std::to_string(j) + ") nontrivial on " + to_string(alpha);
          });
        }
      }
    }
  }
}

void dim_vn(Checker& c, Rng&) {
  for (int f = 1; f <= 3; ++f) {
    const BasisPtr basis = power_basis(f);
    for (int n = 0; n <= 9; ++n) {
      std::vector<gf2::Vec> vecs;
      for (int i = 0; i <= n; ++i) {
        for (Bits theta : basis->elements()) {
          vecs.push_back(reduce_coset(LaurentSeries::monomial(basis->field(), theta, -i, 1), basis).coordinates());
        }
      }
      const int rank = gf2::rank(vecs);
      c.expect(rank == coset_space_dim(n, f), [&] {
        return "f=" + std::to_string(f) + " n=" + std::to_string(n) + ": rank " + std::to_string(rank);
      });
    }
  }
}

void counting(Checker& c, Rng&) {
  for (int f = 1; f <= 3; ++f) {
    const std::int64_t q = std::int64_t{1} << f;
    const auto n = count_biquadratic_by_enumeration(Case1{1}, f);
    c.expect(n == q - 1, [&] { return "f=" + std::to_string(f) + " Case 1 t=1: " + std::to_string(n); });
    for (int t = 1; t <= 5; t += 2) {
      const auto e = count_biquadratic_by_enumeration(Case1{t}, f);
      const auto cf = count_case1_closed_form(t, f);
      c.expect(e == cf, [&] {
        return "f=" + std::to_string(f) + " t=" + std::to_string(t) + ": enumeration " + std::to_string(e) +
               " vs closed form " + std::to_string(cf);
      });
    }
  }
  for (int t = 1; t <= 5; t += 2) {
    const auto n = count_biquadratic_by_enumeration(Case21{t}, 1);
    c.expect(n == 0, [&] { return "f=1 Case 2.1 t=" + std::to_string(t) + ": " + std::to_string(n); });
  }
}

void depth_pipeline(Checker& c, Rng&) {
  for (int r = 1; r <= 31; r += 2) {
    const DepthReport adj = depth_from_filtration(primitive_adjoint_filtration(r));
    const DepthReport lift = depth_from_filtration(primitive_lift_filtration(r));
    const bool valid = r % 6 == 1;
    c.expect(adj.depth == Rational(r, 3), [&] { return "octahedral adjoint r=" + std::to_string(r); });
    c.expect(lift.integrality_warning == !valid, [&] { return "octahedral integrality r=" + std::to_string(r); });
    if (valid) {
      const DepthPair dp = octahedral_depths(r);
      c.expect(dp.proj == adj.depth && dp.lift == lift.depth && dp.lift == Rational(5 * r + 1, 12),
               [&] { return "octahedral closed form r=" + std::to_string(r); });
    } else {
      bool threw = false;
      try {
        octahedral_depths(r);
      } catch (const InvalidRamificationDepth&) {
        threw = true;
      }
      c.expect(threw, [&] { return "octahedral accepted r=" + std::to_string(r); });
    }
    const DepthPair tp = tetrahedral_depths(r, true);
    const DepthReport tadj = depth_from_filtration(tetrahedral_unramified_adjoint_filtration(r));
    const DepthReport tlift = depth_from_filtration(tetrahedral_unramified_lift_filtration(r));
    c.expect(tp.proj == tadj.depth && tp.lift == tlift.depth && tp.proj == Rational(r) &&
                 tp.lift == Rational(5 * r + 1, 4) && !tlift.integrality_warning,
             [&] { return "tetrahedral unramified r=" + std::to_string(r); });
  }
}

void depth_strict_inequality(Checker& c, Rng&) {
  for (int r = 1; r <= 31; r += 2) {
    if (r % 6 == 1) {
      const DepthPair o = octahedral_depths(r);
      c.expect(o.lift > o.proj, [&] { return "octahedral r=" + std::to_string(r); });
      const DepthPair t = tetrahedral_depths(r, false);
      c.expect(t.lift > t.proj, [&] { return "tetrahedral ramified r=" + std::to_string(r); });
    }
    const DepthPair t = tetrahedral_depths(r, true);
    c.expect(t.lift > t.proj, [&] { return "tetrahedral unramified r=" + std::to_string(r); });
  }
  for (int d_lk = 1; d_lk <= 9; d_lk += 2) {
    for (int d_xi = d_lk + 1; d_xi <= 20; ++d_xi) {
      for (int d_xi_sq = 0; d_xi_sq < d_xi; ++d_xi_sq) {
        const DepthPair p = imprimitive_depths(d_xi, d_xi_sq, d_lk);
        c.expect(p.lift > p.proj, [&] {
          return "imprimitive (" + std::to_string(d_xi) + "," + std::to_string(d_xi_sq) + "," +
                 std::to_string(d_lk) + ")";
        });
      }
    }
  }
}

void ps_depth(Checker& c, Rng&) {
  for (int f = 1; f <= 3; ++f) {
    const BasisPtr basis = power_basis(f);
    for (int n = 0; n <= 8; ++n) {
      for (int j = 1; j <= f; ++j) {
        const ExtLine line(CosetRep::generator(basis, n, j));
        const Rational d = ps_parameter_depth(line);
        c.expect(d == Rational(2 * n + 1) && d == depth_from_profile(quad_breaks(line)), [&] {
          return "f=" + std::to_string(f) + " line(" + std::to_string(n) + "," + std::to_string(j) + ")";
        });
      }
    }
    const ExtLine unram(CosetRep::unramified(basis));
    c.expect(ps_parameter_depth(unram) == depth_from_profile(quad_breaks(unram)),
             [&] { return "unramified line f=" + std::to_string(f); });
  }
}

void packets(Checker& c, Rng&) {
  const BasisPtr basis = power_basis(2);
  const ExtPlane case1(CosetRep::unramified(basis), CosetRep::generator(basis, 0, 1));
  const std::vector<std::pair<ParamDescriptor, std::pair<int, int>>> cases = {
      {Octahedral{7}, {1, 1}},
      {Tetrahedral{3, true}, {1, 1}},
      {Steinberg{}, {1, 1}},
      {SimplyImprimitive{3, 1, 1}, {2, 2}},
      {TriplyImprimitive{case1}, {4, 1}},
      {PrincipalSeries{ExtLine(CosetRep::generator(basis, 1, 2))}, {2, 0}},
      {PrincipalSeries{TrivialCharacter{}}, {1, 0}},
      {PrincipalSeries{NonQuadraticCharacter{Rational(3)}}, {1, 0}},
  };
  for (const auto& [d, cards] : cases) {
    const PacketInfo info = classify(d);
    const std::string name = describe(d);
    c.expect(std::pair(info.card_sl2k, info.card_sl1d) == cards, [&] { return name + ": cardinalities"; });
    c.expect(info.torsion_order == info.s_phi_order, [&] { return name + ": torsion vs S_phi"; });
    c.expect(info.script_s_order == info.z_phi_order * info.s_phi_order, [&] { return name + ": |script S|"; });
    c.expect(info.card_sl2k + info.card_sl1d == info.irreducible_count(), [&] { return name + ": card sum"; });
    c.expect(info.relevant == (info.card_sl1d > 0), [&] { return name + ": relevance"; });
  }
  int case1_rows = 0;
  for (const auto& row : packet_table(1, basis, false, true)) {
    if (row.profile && std::holds_alternative<Case1>(*row.profile)) ++case1_rows;
  }
  c.expect(case1_rows == 3, [&] { return "f=2 max_break 1: " + std::to_string(case1_rows) + " Case 1 rows"; });
}

void bilinearity(Checker& c, Rng& rng) {
  for (int f = 1; f <= 3; ++f) {
    const BasisPtr basis = power_basis(f);
    const FieldPtr field = basis->field();
    for (int s = 0; s < kSamples; ++s) {
      const LaurentSeries a1 = random_series(rng, field, rng.range(-3, 3), 12);
      const LaurentSeries a2 = random_series(rng, field, rng.range(-3, 3), 12);
      const int vb1 = rng.range(-9, 0), vb2 = rng.range(-9, 0), vg = rng.range(-4, 0);
      const LaurentSeries b1 = random_series(rng, field, vb1, 2 - vb1);
      const LaurentSeries b2 = random_series(rng, field, vb2, 2 - vb2);
      const LaurentSeries g = random_series(rng, field, vg, 2 - vg);
      auto where = [&] { return "f=" + std::to_string(f) + " a1=" + to_string(a1) + " b1=" + to_string(b1); };
      c.expect(pairing(a1 * a2, b1) == (pairing(a1, b1) != pairing(a2, b1)), where);
      c.expect(pairing(a1, b1 + b2) == (pairing(a1, b1) != pairing(a1, b2)), where);
      c.expect(!pairing(a1.square(), b1), where);
      c.expect(!pairing(a1, wp(g)), where);
      c.expect(pairing(a1, b1) == pairing(a1, reduce_coset(b1, basis).to_series()), where);
    }
  }
}

using SuiteFn = void (*)(Checker&, Rng&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r = {
      {"closed-form-vs-residue", closed_form_vs_residue},
      {"worked-characters", worked_characters},
      {"level-law", level_law},
      {"dim-Vn", dim_vn},
      {"counting", counting},
      {"depth-pipeline", depth_pipeline},
      {"depth-strict-inequality", depth_strict_inequality},
      {"ps-depth", ps_depth},
      {"packets", packets},
      {"bilinearity", bilinearity},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

SuiteReport run_suite(std::string_view name, std::uint64_t seed) {
  for (const auto& [n, fn] : registry()) {
    if (n != name) continue;
    SuiteReport report;
    report.name = n;
    Checker checker(report);
    Rng rng{std::mt19937_64(seed)};
    fn(checker, rng);
    return report;
  }
  throw ParseError("unknown suite '" + std::string(name) + "'");
}

}  // namespace aschar
