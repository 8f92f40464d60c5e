#include "aschar/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <sstream>

#include "aschar/depth.hpp"
#include "aschar/errors.hpp"
#include "aschar/io.hpp"
#include "aschar/packets.hpp"
#include "aschar/verify.hpp"

namespace aschar {
namespace {

struct Config {
  int f = 1;
  std::string modulus_bits;
  std::vector<std::string> basis;
  int prec = 16;
  std::string format = "text";
  std::uint64_t seed = 1;
};

struct Context {
  FieldPtr field;
  BasisPtr basis;
};

std::uint64_t parse_u64(const std::string& s, const std::string& what) {
  std::size_t pos = 0;
  std::uint64_t v = 0;
  try {
    if (s.rfind("0b", 0) == 0 || s.rfind("0B", 0) == 0) {
      v = std::stoull(s.substr(2), &pos, 2);
      pos += 2;
    } else {
      v = std::stoull(s, &pos, 0);
    }
  } catch (const std::exception&) {
    pos = 0;
  }
  if (s.empty() || pos != s.size() || s.front() == '-') {
    throw ParseError("malformed " + what + ": '" + s + "'");
  }
  return v;
}

Context make_context(const Config& cfg) {
  if (cfg.prec < 2) throw ParseError("--prec must be at least 2");
  std::optional<std::uint64_t> modulus;
  if (!cfg.modulus_bits.empty()) modulus = parse_u64(cfg.modulus_bits, "--modulus-bits");
  FieldPtr field = Field::make(cfg.f, modulus);
  BasisPtr basis;
  if (cfg.basis.empty()) {
    basis = std::make_shared<const TraceBasis>(TraceBasis::power_basis(field));
  } else {
    std::vector<Bits> elems;
    for (const auto& b : cfg.basis) elems.push_back(parse_field_element(b, *field));
    basis = std::make_shared<const TraceBasis>(TraceBasis::from_elements(field, elems));
  }
  return {field, basis};
}

// A table whose cells are JSON values; strings print bare in text and CSV.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Json>> rows;
};

std::string cell_text(const Json& v) {
  if (v.is_null()) return "";
  return v.is_string() ? v.get<std::string>() : v.dump();
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

void print_table(const Table& t, const std::string& format, std::ostream& out) {
  if (format == "json") {
    Json arr = Json::array();
    for (const auto& row : t.rows) {
      Json obj = Json::object();
      for (std::size_t i = 0; i < t.columns.size(); ++i) obj[t.columns[i]] = row[i];
      arr.push_back(obj);
    }
    out << arr.dump(2) << "\n";
    return;
  }
  if (format == "csv") {
    for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << csv_escape(t.columns[i]);
    out << "\n";
    for (const auto& row : t.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_escape(cell_text(row[i]));
      out << "\n";
    }
    return;
  }
  std::vector<std::size_t> width(t.columns.size());
  for (std::size_t i = 0; i < t.columns.size(); ++i) width[i] = t.columns[i].size();
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], cell_text(row[i]).size());
  }
  auto emit = [&](const std::vector<std::string>& cells) {
    std::string line;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) line += "  ";
      line += cells[i];
      if (i + 1 < cells.size()) line += std::string(width[i] - cells[i].size(), ' ');
    }
    out << line << "\n";
  };
  emit(t.columns);
  for (const auto& row : t.rows) {
    std::vector<std::string> cells;
    for (const auto& v : row) cells.push_back(cell_text(v));
    emit(cells);
  }
}

// Single-record output: a one-row table, or a bare object in JSON.
void print_record(const Json& obj, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << obj.dump(2) << "\n";
    return;
  }
  if (format == "csv") {
    Table t;
    std::vector<Json> row;
    for (const auto& [k, v] : obj.items()) {
      t.columns.push_back(k);
      row.push_back(v);
    }
    t.rows.push_back(row);
    print_table(t, format, out);
    return;
  }
  for (const auto& [k, v] : obj.items()) out << k << ": " << cell_text(v) << "\n";
}

Json breaks_json(const std::vector<int>& b) {
  Json arr = Json::array();
  for (int x : b) arr.push_back(x);
  return arr;
}

std::string lower_text(const std::vector<LowerBreak>& lb) {
  std::string s;
  for (const auto& b : lb) {
    if (!s.empty()) s += " ";
    s += to_string(b.lower) + "(" + std::to_string(b.order) + ")";
  }
  return s;
}

std::string ext_text(const Extension& e) {
  if (const auto* line = std::get_if<ExtLine>(&e.ext)) return to_string(line->gen());
  const auto& plane = std::get<ExtPlane>(e.ext);
  return to_string(plane.first()) + " | " + to_string(plane.second());
}

BreakProfile parse_case(const std::string& name, int t, int t2) {
  BreakProfile p;
  if (name == "case1") {
    p = Case1{t};
  } else if (name == "case2.1") {
    p = Case21{t};
  } else if (name == "case2.2") {
    p = Case22{t, t2};
  } else {
    throw ParseError("unknown case '" + name + "' (expected case1, case2.1, case2.2)");
  }
  validate(p);
  return p;
}

ParamDescriptor parse_param(const std::string& spec, const Context& ctx) {
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  std::vector<std::string> args;
  if (colon != std::string::npos) {
    std::stringstream ss(spec.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ',')) args.push_back(item);
  }
  auto arg_int = [&](std::size_t i) {
    if (i >= args.size()) throw ParseError("missing argument " + std::to_string(i + 1) + " in '" + spec + "'");
    return static_cast<int>(parse_u64(args[i], "parameter argument"));
  };
  if (kind == "steinberg") return Steinberg{};
  if (kind == "trivial") return PrincipalSeries{TrivialCharacter{}};
  if (kind == "octahedral") return Octahedral{arg_int(0)};
  if (kind == "tetrahedral") {
    const bool ramified = args.size() > 1 && args[1] == "ramified";
    return Tetrahedral{arg_int(0), !ramified};
  }
  if (kind == "imprimitive") return SimplyImprimitive{arg_int(0), arg_int(1), arg_int(2)};
  if (kind == "ps") return PrincipalSeries{ExtLine(CosetRep::generator(ctx.basis, arg_int(0), arg_int(1)))};
  if (kind == "ps-unramified") return PrincipalSeries{ExtLine(CosetRep::unramified(ctx.basis))};
  throw ParseError("unknown parameter family '" + kind + "'");
}

std::vector<Json> packet_cells(const std::string& descriptor, const std::optional<BreakProfile>& profile,
                               const PacketInfo& info) {
  return {descriptor,
          profile ? Json(case_name(*profile)) : Json(""),
          info.torsion_order,
          info.s_phi_order,
          info.script_s_order,
          info.z_phi_order,
          info.card_sl2k,
          info.card_sl1d,
          info.relevant,
          info.depth.numerator(),
          info.depth.denominator(),
          info.lift_depth ? Json(to_string(*info.lift_depth)) : Json(nullptr),
          info.essentially_tame};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Artin–Schreier symbols, ramification breaks, depths and packet sizes over F_{2^f}((t))",
               "aschar"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  app.add_option("--f", cfg.f, "degree of the residue field over F_2")->capture_default_str();
  app.add_option("--modulus-bits", cfg.modulus_bits,
                 "irreducible modulus as a bitmask (default for f <= 4: x+1, x^2+x+1, x^3+x+1, "
                 "x^4+x+1; required for f > 4)");
  app.add_option("--basis", cfg.basis, "F_2-basis u_1..u_f of F_q (default: 1, u, ..., u^{f-1})")
      ->delimiter(',');
  app.add_option("--prec", cfg.prec, "precision of parsed series without O(t^N)")->capture_default_str();
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "seed for randomized suites")->capture_default_str();

  std::string alpha_text, beta_text, chi_text;
  auto* symbol = app.add_subcommand("symbol", "the pairing (alpha, beta] by both evaluation paths");
  symbol->add_option("alpha", alpha_text)->required();
  symbol->add_option("beta", beta_text)->required();

  auto* reduce = app.add_subcommand("reduce", "canonical representative of beta + wp(K)");
  reduce->add_option("beta", beta_text)->required();

  auto* chareval = app.add_subcommand("char-eval", "evaluate chi(n,j) or beta0 at alpha");
  chareval->add_option("chi", chi_text)->required();
  chareval->add_option("alpha", alpha_text)->required();

  auto* expand = app.add_subcommand("expand", "product expansion t^k theta_0 prod (1 + theta_i t^i)");
  expand->add_option("alpha", alpha_text)->required();

  std::string kind = "quad";
  int max_break = 1;
  auto* breaks = app.add_subcommand("breaks", "extensions of V_t with their ramification breaks");
  breaks->add_option("--kind", kind)->check(CLI::IsMember({"quad", "biquad"}))->capture_default_str();
  breaks->add_option("--max-break", max_break, "t: enumerate inside V_t")->capture_default_str();

  std::string case_text = "case1", method = "auto";
  int t1 = 1, t2 = 3;
  auto* count = app.add_subcommand("count", "number of biquadratic extensions with a break profile");
  count->add_option("--case", case_text)->capture_default_str();
  count->add_option("--t", t1, "break (Case 1, 2.1) or lower break (Case 2.2)")->capture_default_str();
  count->add_option("--t2", t2, "upper break for Case 2.2")->capture_default_str();
  count->add_option("--method", method)->check(CLI::IsMember({"auto", "enumeration"}))->capture_default_str();

  std::string depth_type = "octahedral";
  int max_r = 13;
  std::vector<int> imprimitive_args;
  auto* depths = app.add_subcommand("depths", "projective and lifted depths of primitive/imprimitive parameters");
  depths->add_option("--type", depth_type)
      ->check(CLI::IsMember({"octahedral", "tetrahedral-unramified", "tetrahedral-ramified", "imprimitive"}))
      ->capture_default_str();
  depths->add_option("--max-r", max_r, "largest r (or largest depth in the imprimitive grid)")
      ->capture_default_str();
  depths->add_option("--imprimitive", imprimitive_args, "d_xi,d_xi_sq,d_lk for a single imprimitive row")
      ->delimiter(',')
      ->expected(3);

  std::string packet_kind = "all";
  std::vector<std::string> params;
  auto* packets = app.add_subcommand("packets", "L-packet sizes for SL_2(K) and SL_1(D)");
  packets->add_option("--kind", packet_kind)->check(CLI::IsMember({"quad", "biquad", "all"}))->capture_default_str();
  packets->add_option("--max-break", max_break)->capture_default_str();
  packets->add_option("--param", params,
                      "steinberg | trivial | octahedral:r | tetrahedral:r[,ramified] | "
                      "imprimitive:d_xi,d_xi_sq,d_lk | ps:n,j | ps-unramified");

  std::string suite;
  auto* verify = app.add_subcommand("verify", "run an invariant suite");
  verify->add_option("suite", suite, "suite name or 'all'")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  const std::string& fmt = cfg.format;
  try {
    const Context ctx = make_context(cfg);
    auto series = [&](const std::string& text) { return parse_series(text, ctx.field, cfg.prec); };

    if (*symbol) {
      const LaurentSeries alpha = series(alpha_text);
      const LaurentSeries beta = series(beta_text);
      const bool residue_path = pairing(alpha, beta);
      const CosetRep rep = reduce_coset(beta, ctx.basis);
      const bool closed_path = char_eval(rep, alpha);
      Json obj{{"alpha", to_string(alpha)},
               {"beta", to_string(beta)},
               {"reduced_beta", to_string(rep)},
               {"residue", residue_path ? 1 : 0},
               {"closed_form", closed_path ? 1 : 0},
               {"agree", residue_path == closed_path}};
      print_record(obj, fmt, out);
      return residue_path == closed_path ? kExitOk : kExitVerificationFailed;
    }
    if (*reduce) {
      const CosetRep rep = reduce_coset(series(beta_text), ctx.basis);
      Json obj{{"rep", to_string(rep)}, {"level", level(rep)}};
      if (fmt == "json") obj["coset"] = coset_to_json(rep);
      print_record(obj, fmt, out);
      return kExitOk;
    }
    if (*chareval) {
      CosetRep rep = CosetRep::unramified(ctx.basis);
      if (chi_text != "beta0") {
        const auto [n, j] = parse_chi(chi_text);
        rep = CosetRep::generator(ctx.basis, n, j);
      }
      const LaurentSeries alpha = series(alpha_text);
      Json obj{{"chi", chi_text}, {"alpha", to_string(alpha)}, {"value", char_eval(QuadChar(rep), alpha) ? 1 : 0}};
      print_record(obj, fmt, out);
      return kExitOk;
    }
    if (*expand) {
      const ProductExpansion e = product_expansion(series(alpha_text));
      if (fmt == "json") {
        out << expansion_to_json(e).dump(2) << "\n";
        return kExitOk;
      }
      Table t{{"i", "theta"}, {}};
      t.rows.push_back({"k", e.k});
      t.rows.push_back({0, e.theta0});
      for (std::size_t i = 0; i < e.thetas.size(); ++i) t.rows.push_back({static_cast<int>(i + 1), e.thetas[i]});
      print_table(t, fmt, out);
      return kExitOk;
    }
    if (*breaks) {
      const auto ek = kind == "quad" ? ExtensionKind::Quadratic : ExtensionKind::Biquadratic;
      Table t{{"extension", "case", "upper_breaks", "lower_breaks", "depth"}, {}};
      for (const auto& e : enumerate_extensions(ek, max_break, ctx.basis)) {
        t.rows.push_back({ext_text(e), case_name(e.profile), breaks_json(upper_breaks(e.profile)),
                          lower_text(upper_to_lower(e.profile)), to_string(depth_from_profile(e.profile))});
      }
      print_table(t, fmt, out);
      return kExitOk;
    }
    if (*count) {
      const BreakProfile p = parse_case(case_text, t1, t2);
      CountResult r;
      if (method == "enumeration") {
        r = {count_biquadratic_by_enumeration(p, cfg.f), CountMethod::Enumeration};
      } else {
        r = count_biquadratic(p, cfg.f);
      }
      Json obj{{"case", case_name(p)},
               {"breaks", breaks_json(upper_breaks(p))},
               {"f", cfg.f},
               {"count", r.count},
               {"method", r.method == CountMethod::ClosedForm ? "closed-form" : "enumeration"}};
      print_record(obj, fmt, out);
      return kExitOk;
    }
    if (*depths) {
      Table t{{"type", "params", "proj_depth", "lift_depth", "conductor"}, {}};
      auto add = [&](const std::string& params_text, const DepthPair& d) {
        t.rows.push_back({depth_type, params_text, to_string(d.proj), to_string(d.lift),
                          to_string(Rational(2) * (d.lift + 1))});
      };
      if (depth_type == "imprimitive") {
        if (!imprimitive_args.empty()) {
          const int a = imprimitive_args[0], b = imprimitive_args[1], c = imprimitive_args[2];
          add("d_xi=" + std::to_string(a) + ",d_xi_sq=" + std::to_string(b) + ",d_lk=" + std::to_string(c),
              imprimitive_depths(a, b, c));
        } else {
          for (int c = 1; c <= max_r; c += 2) {
            for (int a = c + 1; a <= max_r; ++a) {
              for (int b = 0; b < a; ++b) {
                add("d_xi=" + std::to_string(a) + ",d_xi_sq=" + std::to_string(b) + ",d_lk=" + std::to_string(c),
                    imprimitive_depths(a, b, c));
              }
            }
          }
        }
      } else {
        for (int r = 1; r <= max_r; r += 2) {
          if (depth_type == "tetrahedral-unramified") {
            add("r=" + std::to_string(r), tetrahedral_depths(r, true));
          } else if (r % 6 == 1) {
            add("r=" + std::to_string(r),
                depth_type == "octahedral" ? octahedral_depths(r) : tetrahedral_depths(r, false));
          }
        }
      }
      print_table(t, fmt, out);
      return kExitOk;
    }
    if (*packets) {
      Table t{{"descriptor", "case", "torsion", "s_phi", "script_s", "z_phi", "card_sl2k", "card_sl1d",
               "relevant", "depth_num", "depth_den", "lift_depth", "essentially_tame"},
              {}};
      if (!params.empty()) {
        for (const auto& p : params) {
          const ParamDescriptor d = parse_param(p, ctx);
          t.rows.push_back(packet_cells(describe(d), std::nullopt, classify(d)));
        }
      } else {
        for (const auto& row : packet_table(max_break, ctx.basis, packet_kind != "biquad", packet_kind != "quad")) {
          t.rows.push_back(packet_cells(row.descriptor, row.profile, row.info));
        }
      }
      print_table(t, fmt, out);
      return kExitOk;
    }
    if (*verify) {
      std::vector<std::string> names;
      if (suite == "all") {
        names = suite_names();
      } else {
        names.push_back(suite);
      }
      Table t{{"suite", "result", "checks", "failures"}, {}};
      bool all_passed = true;
      for (const auto& name : names) {
        const SuiteReport r = run_suite(name, cfg.seed);
        all_passed = all_passed && r.passed;
        Json failures = Json::array();
        for (const auto& f : r.failures) failures.push_back(f);
        t.rows.push_back({r.name, r.passed ? "pass" : "fail", r.checks, failures});
      }
      print_table(t, fmt, out);
      return all_passed ? kExitOk : kExitVerificationFailed;
    }
  } catch (const InfeasibleEnumeration& e) {
    err << "infeasible: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace aschar
