#include "derlab/serialize.hpp"

#include <fstream>
#include <sstream>

namespace derlab {

namespace {

const Json& require_array(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + ": expected a JSON array");
  return j;
}

double number(const Json& j, const char* what) {
  if (!j.is_number()) throw ParseError(std::string(what) + ": expected a number");
  return j.get<double>();
}

Json matrix_to_json(const CMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

CMatrix matrix_from_json(const Json& j, const char* what) {
  require_array(j, what);
  const auto rows = static_cast<Eigen::Index>(j.size());
  if (rows == 0) return CMatrix(0, 0);
  const auto cols = static_cast<Eigen::Index>(require_array(j[0], what).size());
  CMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const Json& row = require_array(j[r], what);
    if (static_cast<Eigen::Index>(row.size()) != cols) throw ParseError(std::string(what) + ": ragged matrix");
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = complex_from_json(row[c]);
  }
  return m;
}

}  // namespace

Json to_json(Complex c) { return Json::array({c.real(), c.imag()}); }

Json to_json(const CVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_json(v(i)));
  return out;
}

Json to_json(const AlgebraElement& a) { return to_json(a.values()); }

Json to_json(const ModuleSpec& spec) { return Json{{"fibers", spec.fibers()}}; }

Json to_json(const ModuleElement& x) {
  Json out = Json::array();
  for (const auto& f : x.fibers()) out.push_back(to_json(f));
  return out;
}

Json to_json(const Operator& a) {
  Json out = Json::array();
  for (const auto& b : a.blocks()) out.push_back(matrix_to_json(b));
  return out;
}

Json to_json(const LambdaMatrix& l) {
  Json out = Json::array();
  for (int i = 0; i < l.size(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < l.size(); ++j) row.push_back(to_json(l.at(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

Json to_json(const LinearMapOnAlgebra& d) {
  return Json{{"dim", d.dim()}, {"matrix", matrix_to_json(d.matrix())}};
}

Json to_json(const PointMap& p) {
  Json out = Json::array();
  for (const auto& e : p.entries()) out.push_back(Json{{"at", to_json(e.at)}, {"value", to_json(e.value)}});
  return out;
}

Json to_json(const LocalReport& r) {
  Json residuals = Json::array();
  for (const auto& e : r.residuals) residuals.push_back(Json{{"element", e.element}, {"residual", e.residual}});
  return Json{{"residuals", std::move(residuals)},
              {"max_residual", r.max_residual},
              {"alinearity_defect", r.alinearity_defect},
              {"derivation_defect", r.derivation_defect},
              {"certified_local", r.certified_local},
              {"is_derivation", r.is_derivation},
              {"verdict", r.certified_local && r.is_derivation ? "derivation"
                          : r.certified_local                  ? "local-but-not-derivation"
                                                               : "not-local"}};
}

Json to_json(const TwoLocalReport& r) {
  Json pairs = Json::array();
  for (const auto& p : r.pairs) {
    pairs.push_back(Json{{"pair", {p.first, p.second}}, {"residual", p.residual}, {"feasible", p.feasible}});
  }
  return Json{{"pairs", std::move(pairs)},
              {"max_residual", r.max_residual},
              {"vacuous", r.vacuous},
              {"verdict", r.consistent ? "consistent-with-2-local" : "not-2-local"}};
}

Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw ParseError("complex number: expected [re, im]");
  return {number(j[0], "complex real part"), number(j[1], "complex imaginary part")};
}

CVector vector_from_json(const Json& j) {
  require_array(j, "vector");
  CVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = complex_from_json(j[i]);
  return v;
}

AlgebraElement algebra_element_from_json(const Json& j) { return AlgebraElement(vector_from_json(j)); }

ModuleSpec module_spec_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("fibers")) throw ParseError("module spec: expected {\"fibers\": [...]}");
  const Json& f = require_array(j.at("fibers"), "fibers");
  std::vector<int> fibers;
  for (const auto& n : f) {
    if (!n.is_number_integer()) throw ParseError("fibers: expected integers");
    fibers.push_back(n.get<int>());
  }
  return ModuleSpec(std::move(fibers));
}

ModuleElement module_element_from_json(const Json& j) {
  require_array(j, "module element");
  std::vector<CVector> fibers;
  for (const auto& f : j) fibers.push_back(vector_from_json(f));
  return ModuleElement(std::move(fibers));
}

Operator operator_from_json(const Json& j) {
  require_array(j, "operator");
  std::vector<CMatrix> blocks;
  for (const auto& b : j) blocks.push_back(matrix_from_json(b, "operator block"));
  try {
    return Operator(std::move(blocks));
  } catch (const DimensionMismatch& e) {
    throw ParseError(e.what());
  }
}

LinearMapOnAlgebra map_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("matrix")) {
    throw ParseError("map file: expected {\"dim\": D, \"matrix\": [...]}");
  }
  if (!j.at("dim").is_number_integer()) throw ParseError("map file: dim must be an integer");
  const int dim = j.at("dim").get<int>();
  CMatrix m = matrix_from_json(j.at("matrix"), "map matrix");
  if (m.rows() != dim || m.cols() != dim) {
    throw ParseError("map file: matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                     " but dim is " + std::to_string(dim));
  }
  return LinearMapOnAlgebra(std::move(m));
}

PointMap point_map_from_json(const Json& j) {
  require_array(j, "point map");
  if (j.empty()) return PointMap(0);
  if (!j[0].is_object() || !j[0].contains("at")) throw ParseError("point map: entries need \"at\" and \"value\"");
  const int dim = static_cast<int>(require_array(j[0].at("at"), "at").size());
  PointMap out(dim);
  for (const auto& e : j) {
    if (!e.is_object() || !e.contains("at") || !e.contains("value")) {
      throw ParseError("point map: entries need \"at\" and \"value\"");
    }
    try {
      out.set(vector_from_json(e.at("at")), vector_from_json(e.at("value")));
    } catch (const DimensionMismatch& err) {
      throw ParseError(err.what());
    }
  }
  return out;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw ParseError(e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str());
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << j.dump(2) << '\n';
}

}  // namespace derlab
