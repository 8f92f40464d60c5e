#include "aschar/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>

#include "aschar/errors.hpp"

namespace aschar {
namespace {

std::string strip_spaces(std::string_view text) {
  std::string out;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) out.push_back(ch);
  }
  return out;
}

// Splits on '+' at parenthesis depth 0.
std::vector<std::string> split_terms(const std::string& s) {
  std::vector<std::string> terms;
  std::string cur;
  int depth = 0;
  for (char ch : s) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == '+' && depth == 0) {
      terms.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  terms.push_back(cur);
  return terms;
}

std::int64_t parse_int(std::string_view s, std::string_view what) {
  std::int64_t value = 0;
  int base = 10;
  bool negative = false;
  if (!s.empty() && s.front() == '-') {
    negative = true;
    s.remove_prefix(1);
  }
  if (s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) {
    base = 16;
    s.remove_prefix(2);
  } else if (s.size() > 2 && s[0] == '0' && (s[1] == 'b' || s[1] == 'B')) {
    base = 2;
    s.remove_prefix(2);
  }
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value, base);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError("malformed " + std::string(what) + ": '" + std::string(s) + "'");
  }
  return negative ? -value : value;
}

// Exponent after "t": "" -> 1, "^e" -> e, "^(e)" -> e.
int parse_exponent(std::string_view s) {
  if (s.empty()) return 1;
  if (s.front() != '^') throw ParseError("expected '^' after t, got '" + std::string(s) + "'");
  s.remove_prefix(1);
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  return static_cast<int>(parse_int(s, "exponent"));
}

}  // namespace

Bits parse_field_element(std::string_view text, const Field& field) {
  std::string s = strip_spaces(text);
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  if (!s.empty() && s.front() == 'u') {
    std::int64_t e = 1;
    if (s.size() > 1) {
      if (s[1] != '^') throw ParseError("malformed field element '" + s + "'");
      e = parse_int(std::string_view(s).substr(2), "generator power");
    }
    return field.pow(field.degree() == 1 ? 1 : 2, e);
  }
  const std::int64_t v = parse_int(s, "field element");
  if (v < 0 || !field.contains(static_cast<std::uint64_t>(v))) {
    throw ParseError("field element " + s + " is not in F_{2^" + std::to_string(field.degree()) + "}");
  }
  return static_cast<Bits>(v);
}

ParsedSeries parse_series_text(std::string_view text, FieldPtr field,
                               std::optional<int> default_prec) {
  const std::string s = strip_spaces(text);
  if (s.empty()) throw ParseError("empty series");
  std::map<int, Bits> terms;
  std::optional<int> explicit_prec;
  for (const std::string& term : split_terms(s)) {
    if (term.empty()) throw ParseError("empty term in '" + s + "'");
    if (term.rfind("O(", 0) == 0) {
      if (term.back() != ')' || term.size() < 4 || term[2] != 't') {
        throw ParseError("malformed precision term '" + term + "'");
      }
      explicit_prec = parse_exponent(std::string_view(term).substr(3, term.size() - 4));
      continue;
    }
    if (explicit_prec) throw ParseError("O(t^N) must be the last term");
    Bits coeff = 1;
    int exponent = 0;
    const auto tpos = term.find('t');
    if (tpos == std::string::npos) {
      coeff = parse_field_element(term, *field);
    } else {
      std::string_view head = std::string_view(term).substr(0, tpos);
      if (!head.empty() && head.back() == '*') head.remove_suffix(1);
      if (!head.empty()) coeff = parse_field_element(head, *field);
      exponent = parse_exponent(std::string_view(term).substr(tpos + 1));
    }
    terms[exponent] ^= coeff;
  }
  int prec;
  if (explicit_prec) {
    prec = *explicit_prec;
  } else {
    const int natural = terms.empty() ? 1 : terms.rbegin()->first + 1;
    prec = default_prec ? std::max(*default_prec, natural) : natural;
  }
  for (auto it = terms.begin(); it != terms.end();) {
    it = it->second == 0 ? terms.erase(it) : std::next(it);
  }
  return {LaurentSeries::from_terms(std::move(field), terms, prec), explicit_prec.has_value()};
}

std::string to_string(const LaurentSeries& s) {
  std::string out;
  for (const auto& [e, c] : s.terms()) {
    if (!out.empty()) out += " + ";
    if (e == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c) + "*";
    out += "t";
    if (e != 1) out += "^" + std::to_string(e);
  }
  if (!out.empty()) out += " + ";
  out += "O(t^" + std::to_string(s.prec()) + ")";
  return out;
}

std::pair<int, int> parse_chi(std::string_view text) {
  const std::string s = strip_spaces(text);
  if (s.rfind("chi(", 0) != 0 || s.back() != ')') {
    throw ParseError("expected chi(n,j), got '" + s + "'");
  }
  const std::string inner = s.substr(4, s.size() - 5);
  const auto comma = inner.find(',');
  if (comma == std::string::npos) throw ParseError("expected chi(n,j), got '" + s + "'");
  const auto n = parse_int(std::string_view(inner).substr(0, comma), "n");
  const auto j = parse_int(std::string_view(inner).substr(comma + 1), "j");
  return {static_cast<int>(n), static_cast<int>(j)};
}

std::string to_string(const CosetRep& rep) {
  if (rep.is_zero()) return "0";
  std::string out;
  if (rep.unram_bit()) out = "beta0";
  for (const auto& [n, j] : rep.wild()) {
    if (!out.empty()) out += " + ";
    out += "e(" + std::to_string(n) + "," + std::to_string(j) + ")";
  }
  return out;
}

Json field_to_json(const Field& field) {
  return Json{{"f", field.degree()}, {"modulus_bits", field.modulus()}};
}

FieldPtr field_from_json(const Json& j) {
  try {
    const int f = j.at("f").get<int>();
    std::optional<std::uint64_t> modulus;
    if (j.contains("modulus_bits") && !j.at("modulus_bits").is_null()) {
      modulus = j.at("modulus_bits").get<std::uint64_t>();
    }
    return Field::make(f, modulus);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("bad field spec: ") + e.what());
  }
}

Json series_to_json(const LaurentSeries& s) {
  Json coeffs = Json::array();
  for (const auto& [e, c] : s.terms()) coeffs.push_back(Json::array({e, c}));
  return Json{{"val", s.is_zero() ? Json(nullptr) : Json(s.valuation())},
              {"prec", s.prec()},
              {"coeffs", coeffs}};
}

LaurentSeries series_from_json(const Json& j, FieldPtr field) {
  try {
    std::map<int, Bits> terms;
    for (const auto& pair : j.at("coeffs")) {
      const auto bits = pair.at(1).get<std::uint64_t>();
      if (!field->contains(bits)) throw ParseError("coefficient outside the field");
      terms[pair.at(0).get<int>()] ^= static_cast<Bits>(bits);
    }
    std::erase_if(terms, [](const auto& kv) { return kv.second == 0; });
    return LaurentSeries::from_terms(std::move(field), terms, j.at("prec").get<int>());
  } catch (const Json::exception& e) {
    throw ParseError(std::string("bad series JSON: ") + e.what());
  }
}

Json coset_to_json(const CosetRep& rep) {
  Json wild = Json::array();
  for (const auto& [n, j] : rep.wild()) wild.push_back(Json::array({n, j, 1}));
  return Json{{"c", rep.unram_bit() ? 1 : 0}, {"wild", wild}};
}

CosetRep coset_from_json(const Json& j, BasisPtr basis) {
  try {
    CosetRep rep(std::move(basis));
    if (j.at("c").get<int>() & 1) rep.toggle_unramified();
    for (const auto& entry : j.at("wild")) {
      const int eps = entry.size() > 2 ? entry.at(2).get<int>() : 1;
      if (eps & 1) rep.toggle(entry.at(0).get<int>(), entry.at(1).get<int>());
    }
    return rep;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("bad coset JSON: ") + e.what());
  }
}

Json expansion_to_json(const ProductExpansion& e) {
  return Json{{"k", e.k}, {"theta0", e.theta0}, {"thetas", e.thetas}, {"prec", e.prec}};
}

}  // namespace aschar
