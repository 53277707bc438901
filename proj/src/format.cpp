#include "qsig/format.hpp"

#include <regex>

#include "qsig/errors.hpp"

namespace qsig {

Json to_json(const BigInt& x) {
  if (x.fits_slong_p()) return Json(x.get_si());
  return Json(x.get_str());
}

Json to_json(const Rational& x) { return Json(x.to_string()); }

Json to_json(const IntPoly& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_json(c));
  return a;
}

Json to_json(const RatFun& r) {
  Json j = Json::object();
  if (auto k = r.one_minus_t_exponent()) {
    bool same = r.denominator() == IntPoly::one_minus_t_power(1, *k);
    j["numerator"] = to_json(same ? r.numerator() : -r.numerator());
    j["denominator"] = "(1-t)^" + std::to_string(*k);
  } else {
    j["numerator"] = to_json(r.numerator());
    j["denominator"] = to_json(r.denominator());
  }
  return j;
}

Json to_json(const ZExpr& e) {
  Json a = Json::array();
  for (const auto& [m, c] : e.terms()) {
    Json term = Json::object();
    term["indices"] = m;
    term["coeff"] = to_json(c);
    a.push_back(std::move(term));
  }
  return a;
}

Json to_json(const Partition& p) { return Json(p.parts()); }

Json to_json(const SymbolicPoly& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_json(c));
  return a;
}

BigInt bigint_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<long>());
  if (j.is_string()) {
    Rational r = Rational::parse(j.get<std::string>());
    if (r.is_integer()) return r.num();
  }
  throw InvalidInput("expected an integer, got " + j.dump());
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw InvalidInput("expected a rational string, got " + j.dump());
}

IntPoly intpoly_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidInput("expected a coefficient array, got " + j.dump());
  std::vector<BigInt> c;
  for (const auto& x : j) c.push_back(bigint_from_json(x));
  return IntPoly(std::move(c));
}

RatFun ratfun_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("numerator") || !j.contains("denominator"))
    throw InvalidInput("expected {numerator, denominator}, got " + j.dump());
  IntPoly num = intpoly_from_json(j.at("numerator"));
  const Json& d = j.at("denominator");
  IntPoly den;
  if (d.is_string()) {
    static const std::regex pattern(R"(\(1-t\)\^([0-9]+))");
    std::smatch m;
    std::string s = d.get<std::string>();
    if (!std::regex_match(s, m, pattern)) throw InvalidInput("unrecognized denominator '" + s + "'");
    den = IntPoly::one_minus_t_power(1, std::stoul(m[1].str()));
  } else {
    den = intpoly_from_json(d);
  }
  if (den.is_zero()) throw InvalidInput("zero denominator");
  return RatFun::normalize(num, den);
}

ZExpr zexpr_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidInput("expected a term array, got " + j.dump());
  ZExpr e;
  for (const auto& term : j) {
    if (!term.is_object() || !term.contains("indices") || !term.contains("coeff"))
      throw InvalidInput("malformed term " + term.dump());
    ZExpr mono = ZExpr::product_of(term.at("indices").get<std::vector<int>>());
    e += mono * ZExpr::constant(bigint_from_json(term.at("coeff")));
  }
  return e;
}

Partition partition_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidInput("expected a part array, got " + j.dump());
  return Partition(j.get<std::vector<int>>());
}

SymbolicPoly symbolic_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidInput("expected a coefficient array, got " + j.dump());
  std::vector<Rational> c;
  for (const auto& x : j) c.push_back(rational_from_json(x));
  return SymbolicPoly(std::move(c));
}

}  // namespace qsig
