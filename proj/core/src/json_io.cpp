#include "shintani/json_io.hpp"

#include <regex>

namespace shintani {

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw MathError("expected a rational as \"p/q\" or an integer, got " + j.dump());
}

json to_json(const Rational& q) { return to_string(q); }

QVector qvector_from_json(const json& j) {
  if (!j.is_array()) throw MathError("expected an array of rationals, got " + j.dump());
  QVector v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

json to_json(const QVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

json to_json(const QMatrix& m) {
  json out = json::array();
  for (int i = 0; i < m.dim(); ++i) out.push_back(to_json(m.row(i)));
  return out;
}

QMatrix qmatrix_from_json(const json& j) {
  std::vector<QVector> rows;
  if (!j.is_array() || j.empty()) throw MathError("expected a square matrix, got " + j.dump());
  for (const auto& r : j) rows.push_back(qvector_from_json(r));
  for (const auto& r : rows)
    if (r.size() != rows.size()) throw MathError("matrix is not square");
  return QMatrix::from_rows(rows);
}

std::vector<QMatrix> qmatrices_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw MathError("expected matrices, got " + j.dump());
  // A matrix is an array of arrays of scalars.
  if (j[0].is_array() && !j[0].empty() && !j[0][0].is_array()) return {qmatrix_from_json(j)};
  std::vector<QMatrix> out;
  for (const auto& m : j) out.push_back(qmatrix_from_json(m));
  return out;
}

json to_json(const CycNum& c) {
  return json{{"conductor", c.conductor()}, {"coefficients", to_json(c.coefficients())}};
}

CycNum cycnum_from_json(const json& j) {
  if (j.is_object()) {
    long N = j.at("conductor").get<long>();
    return CycNum::from_coefficients(N, qvector_from_json(j.at("coefficients")));
  }
  return CycNum(rational_from_json(j));
}

json to_json(const TestFunction& f) {
  json vals = json::array();
  for (const auto& [k, v] : f.values()) {
    QVector p(k.size());
    for (size_t i = 0; i < k.size(); ++i) p[i] = f.step() * static_cast<long>(k[i]);
    vals.push_back({{"point", to_json(p)}, {"cycnum", to_json(v)}});
  }
  return json{{"n", f.dim()}, {"h", to_json(f.h())}, {"g", to_json(f.period())}, {"values", vals}};
}

TestFunction testfunction_from_json(const json& j) {
  if (j.contains("terms")) {
    std::vector<CosetTerm> terms;
    int n = -1;
    for (const auto& t : j.at("terms")) {
      QVector base = qvector_from_json(t.at("base"));
      QVector moduli;
      if (t.at("moduli").is_array()) {
        moduli = qvector_from_json(t.at("moduli"));
      } else {
        moduli.assign(base.size(), rational_from_json(t.at("moduli")));
      }
      if (moduli.size() != base.size()) throw MathError("coset base and moduli differ in length");
      if (n >= 0 && n != static_cast<int>(base.size())) throw MathError("coset terms differ in dimension");
      n = static_cast<int>(base.size());
      CycNum c = t.contains("coeff") ? cycnum_from_json(t.at("coeff")) : CycNum(1);
      terms.push_back({c, Coset{base, moduli}});
    }
    if (n < 0) n = j.value("n", 1);
    return normalize(n, terms);
  }
  int n = j.at("n").get<int>();
  Rational h = rational_from_json(j.at("h"));
  Rational g = rational_from_json(j.at("g"));
  std::vector<CosetTerm> terms;
  for (const auto& v : j.at("values")) {
    QVector p = qvector_from_json(v.at("point"));
    terms.push_back({cycnum_from_json(v.at("cycnum")), Coset{p, QVector(n, g)}});
  }
  TestFunction f = normalize(n, terms);
  // Points must lie on the declared support grid.
  for (const auto& t : terms)
    for (const auto& x : t.coset.base)
      if (!is_integer(x * h)) throw MathError("test function point off the declared grid");
  return f;
}

TestFunction parse_testfunction(const std::string& text) {
  auto first = text.find_first_not_of(" \t\n");
  if (first != std::string::npos && (text[first] == '{' || text[first] == '['))
    return testfunction_from_json(json::parse(text));
  static const std::regex re(
      R"(^\s*chi\s*(?:(\([^)]*\)|[-0-9/]+)\s*\+\s*)?([0-9/]*)\s*\*?\s*Z(?:\^(\d+))?\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, re))
    throw MathError("cannot parse test function: " + text);
  int n = m[3].matched ? std::stoi(m[3].str()) : 0;
  QVector a;
  if (m[1].matched) {
    std::string b = m[1].str();
    if (b.front() == '(') b = b.substr(1, b.size() - 2);
    size_t pos = 0;
    while (pos <= b.size()) {
      size_t q = b.find(',', pos);
      if (q == std::string::npos) q = b.size();
      a.push_back(parse_rational(b.substr(pos, q - pos)));
      pos = q + 1;
    }
  }
  if (n == 0) n = a.empty() ? 1 : static_cast<int>(a.size());
  if (a.empty()) a.assign(n, 0);
  if (static_cast<int>(a.size()) != n) throw MathError("coset base length differs from Z^n");
  Rational d = m[2].length() ? parse_rational(m[2].str()) : Rational(1);
  return TestFunction::indicator(a, d);
}

json to_json(const MultiSeries& s) {
  json terms = json::array();
  const auto& b = s.basis();
  for (int i = 0; i < b.size(); ++i)
    if (!s[i].is_zero()) terms.push_back({{"exponent", b.exponent(i)}, {"cycnum", to_json(s[i])}});
  return json{{"n", s.nvars()}, {"D", s.precision()}, {"terms", terms}, {"denominators", json::array()}};
}

json to_json(const FormalFraction& f) {
  json out = to_json(f.numerator());
  out["D"] = f.trusted_degree();
  out["numerator_degree"] = f.numerator().precision();
  json dens = json::array();
  for (const auto& d : f.denominators()) {
    json c = json::array();
    for (const auto& x : d.c) c.push_back(x.get_str());
    dens.push_back(c);
  }
  out["denominators"] = dens;
  return out;
}

json to_json(const EpsPoly& p) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) terms.push_back({{"exponents", m}, {"coeff", to_json(c)}});
  return json{{"terms", terms}};
}

json to_json(const ConeChain& c) {
  json out = json::array();
  for (const auto& t : c) {
    json gens = json::array();
    for (const auto& g : t.cone.gens) gens.push_back(to_json(g));
    out.push_back({{"sign", t.sign}, {"generators", gens}});
  }
  return out;
}

namespace {

json factors_json(const std::vector<TrigFactor>& fs) {
  json out = json::array();
  for (const auto& f : fs)
    out.push_back({{"r", to_json(f.p.r)}, {"lambda", to_json(f.p.lambda)}, {"exp", f.exp}});
  return out;
}

}  // namespace

json to_json(const TrigUnit& u) {
  return json{{"sign", u.sign}, {"eps", factors_json(u.eps)}, {"one_minus", factors_json(u.one_minus)}};
}

json to_json(const KChain& c) {
  json out = json::array();
  for (const auto& t : c) {
    json sym = json::array();
    for (const auto& u : t.symbol) sym.push_back(to_json(u));
    out.push_back({{"coeff", t.coeff.get_str()}, {"symbol", sym}});
  }
  return out;
}

json to_json(const Discrepancy& d) {
  return json{{"degree", d.degree}, {"exponent", d.exponent}, {"lhs", to_json(d.lhs)}, {"rhs", to_json(d.rhs)}};
}

}  // namespace shintani
