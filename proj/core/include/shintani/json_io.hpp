#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "shintani/epscone.hpp"
#include "shintani/milnor.hpp"
#include "shintani/schwartz.hpp"
#include "shintani/series.hpp"

namespace shintani {

using json = nlohmann::json;

// Accepts "p/q" strings or JSON integers.
Rational rational_from_json(const json& j);
json to_json(const Rational& q);

QVector qvector_from_json(const json& j);
json to_json(const QVector& v);

json to_json(const QMatrix& m);
QMatrix qmatrix_from_json(const json& j);
// A single matrix or an array of matrices.
std::vector<QMatrix> qmatrices_from_json(const json& j);

json to_json(const CycNum& c);
// {conductor, coefficients} or a plain rational.
CycNum cycnum_from_json(const json& j);

json to_json(const TestFunction& f);
// Grid form {n, h, g, values}, or coset sums {terms: [{coeff, base, moduli}]}.
TestFunction testfunction_from_json(const json& j);
// JSON text, or the shorthand "chi a + dZ^n", e.g. "chi Z", "chi 1/3+2Z", "chi (1/2,0)+Z^2".
TestFunction parse_testfunction(const std::string& text);

json to_json(const MultiSeries& s);
json to_json(const FormalFraction& f);

json to_json(const EpsPoly& p);
json to_json(const ConeChain& c);

json to_json(const TrigUnit& u);
json to_json(const KChain& c);

json to_json(const Discrepancy& d);

}  // namespace shintani
