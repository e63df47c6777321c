#include "rademacher/serialize.hpp"

namespace rademacher {

Json to_json(const AlgebraicReal& x) {
  Json coeffs = Json::array();
  for (const auto& c : x.coefficients()) coeffs.push_back(coefficient_string(c));
  return Json{{"modulus_order", x.context()->modulus_order()}, {"coeffs", std::move(coeffs)}};
}

namespace {

Rational coefficient_from_json(const Json& j) {
  if (j.is_string()) return parse_coefficient(j.get<std::string>());
  if (j.is_number_integer()) return Rational(BigInt(j.get<long>()));
  throw InvalidArgument("coefficient must be a string or an integer, got " + j.dump());
}

}  // namespace

AlgebraicReal algebraic_from_json(const Json& j, const ContextPtr& ctx) {
  if (j.is_string() || j.is_number_integer()) return AlgebraicReal::from_rational(ctx, coefficient_from_json(j));
  const Json* coeffs = &j;
  if (j.is_object()) {
    if (!j.contains("coeffs")) throw InvalidArgument("algebraic value is missing \"coeffs\"");
    if (j.contains("modulus_order") && j.at("modulus_order").get<int>() != ctx->modulus_order())
      throw InvalidArgument("modulus_order " + j.at("modulus_order").dump() + " does not match 2pq = " +
                            std::to_string(ctx->modulus_order()));
    coeffs = &j.at("coeffs");
  }
  if (!coeffs->is_array()) throw InvalidArgument("algebraic value must be an object, array, string or integer");
  std::vector<Rational> values;
  for (const auto& c : *coeffs) values.push_back(coefficient_from_json(c));
  if (values.empty()) return AlgebraicReal(ctx);
  return AlgebraicReal::from_coefficients(ctx, values);
}

Json to_json(const GroupMatrix& g) {
  return Json{{"p", g.context()->p()}, {"q", g.context()->q()}, {"a", to_json(g.a())},
              {"b", to_json(g.b())},   {"c", to_json(g.c())},   {"d", to_json(g.d())}};
}

GroupMatrix matrix_from_json(const Json& j, const TriangleGroup& group) {
  if (!j.is_object()) throw InvalidArgument("matrix must be a JSON object");
  if ((j.contains("p") && j.at("p").get<int>() != group.p()) || (j.contains("q") && j.at("q").get<int>() != group.q()))
    throw InvalidArgument("matrix (p, q) does not match the requested group");
  for (const char* key : {"a", "b", "c", "d"})
    if (!j.contains(key)) throw InvalidArgument(std::string("matrix is missing entry \"") + key + "\"");
  const auto& ctx = group.context();
  return GroupMatrix(algebraic_from_json(j.at("a"), ctx), algebraic_from_json(j.at("b"), ctx),
                     algebraic_from_json(j.at("c"), ctx), algebraic_from_json(j.at("d"), ctx));
}

Json to_json(const Word& w) {
  Json syllables = Json::array();
  for (const auto& s : w.syllables)
    syllables.push_back(Json::array({std::string(1, static_cast<char>(s.generator)), s.exponent}));
  return Json{{"sign", w.sign}, {"syllables", std::move(syllables)}};
}

Word word_from_json(const Json& j) {
  Word w;
  const int sign = j.at("sign").get<int>();
  if (sign != 1 && sign != -1) throw InvalidArgument("word sign must be 1 or -1");
  w.sign = sign;
  for (const auto& s : j.at("syllables")) {
    if (!s.is_array() || s.size() != 2) throw InvalidArgument("syllable must be [generator, exponent]");
    const auto letter = s[0].get<std::string>();
    if (letter != "S" && letter != "U") throw InvalidArgument("syllable generator must be \"S\" or \"U\"");
    w.syllables.push_back({letter == "S" ? Generator::S : Generator::U, s[1].get<long>()});
  }
  return w;
}

std::string rational_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational rational_from_string(const std::string& text) { return parse_coefficient(text); }

Json to_json(const SymbolReport& report) {
  Json j;
  j["p"] = report.p;
  j["q"] = report.q;
  j["word"] = to_string(report.word);
  j["word_json"] = to_json(report.word);
  j["psi"] = report.psi;
  j["Psi_cocycle"] = report.Psi_cocycle;
  j["cyclic_key"] = report.key ? Json(to_string(*report.key)) : Json(nullptr);
  j["Psi_formula"] = report.Psi_formula ? Json(*report.Psi_formula) : Json(nullptr);
  j["Psi_classical"] = report.Psi_classical ? Json(*report.Psi_classical) : Json(nullptr);
  j["trace_sign"] = report.trace_sign;
  j["linking"] = report.linking ? Json(rational_string(*report.linking)) : Json(nullptr);
  j["agreement"] = report.agreement;
  return j;
}

std::string csv_field(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += csv_field(fields[i]);
  }
  return out + "\r\n";
}

}  // namespace rademacher
