#include "qunc/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "qunc/error.hpp"

namespace qunc::io {

namespace {

double number(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_number())
    throw Error(ErrorCode::ParseError, std::string("expected number field '") + key + "'");
  return j.at(key).get<double>();
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw Error(ErrorCode::ParseError, std::string("missing field '") + key + "'");
  return j.at(key);
}

void append_optional(std::string& line, const std::optional<double>& v) {
  if (v) line += format_double(*v);
}

}  // namespace

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

json matrix_to_json(const CMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      row.push_back({{"re", m(i, j).real()}, {"im", m(i, j).imag()}});
    rows.push_back(std::move(row));
  }
  return rows;
}

CMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw Error(ErrorCode::ParseError, "matrix must be a non-empty array");
  const auto n = static_cast<Eigen::Index>(j.size());
  CMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n)
      throw Error(ErrorCode::ParseError, "matrix rows must have length n");
    for (Eigen::Index k = 0; k < n; ++k) {
      const json& e = row[static_cast<std::size_t>(k)];
      m(i, k) = Complex(number(e, "re"), number(e, "im"));
    }
  }
  return m;
}

json instance_to_json(const Instance& inst) {
  return {{"dim", inst.rho.dim()},
          {"rho", matrix_to_json(inst.rho.matrix())},
          {"a", matrix_to_json(inst.a.matrix())},
          {"b", matrix_to_json(inst.b.matrix())},
          {"q", inst.q}};
}

Instance instance_from_json(const json& j) {
  const json& dim = field(j, "dim");
  if (!dim.is_number_integer() || dim.get<long long>() < 1)
    throw Error(ErrorCode::ParseError, "dim must be a positive integer");
  const auto n = dim.get<std::size_t>();

  CMatrix rho = matrix_from_json(field(j, "rho"));
  CMatrix a = matrix_from_json(field(j, "a"));
  CMatrix b = matrix_from_json(field(j, "b"));
  for (const CMatrix* m : {&rho, &a, &b})
    if (static_cast<std::size_t>(m->rows()) != n)
      throw Error(ErrorCode::ParseError, "matrix size does not match dim");
  const double q = j.contains("q") ? number(j, "q") : 1.0;
  return Instance{make_density(rho), make_hermitian(a), make_hermitian(b), q};
}

Instance read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
  return instance_from_json(j);
}

const std::string& csv_header() {
  static const std::string header =
      "dim,q,regime,lambda_min,lambda_max,var_a,var_b,product,robertson,naive_q,refined,slack,ratio";
  return header;
}

std::string csv_row(const BoundReport& r) {
  std::string line = std::to_string(r.dim);
  line += "," + format_double(r.q);
  line += ",";
  line += to_string(r.regime);
  for (double v : {r.lambda_min, r.lambda_max, r.var_a, r.var_b, r.product, r.robertson,
                   r.naive_q, r.refined, r.slack})
    line += "," + format_double(v);
  line += ",";
  append_optional(line, r.ratio);
  return line;
}

json report_to_json(const BoundReport& r) {
  json j = {{"dim", r.dim},           {"q", r.q},
            {"regime", std::string(to_string(r.regime))},
            {"lambda_min", r.lambda_min}, {"lambda_max", r.lambda_max},
            {"var_a", r.var_a},       {"var_b", r.var_b},
            {"product", r.product},   {"robertson", r.robertson},
            {"naive_q", r.naive_q},   {"refined", r.refined},
            {"slack", r.slack}};
  j["kimura"] = r.kimura ? json(*r.kimura) : json(nullptr);
  j["ratio"] = r.ratio ? json(*r.ratio) : json(nullptr);
  return j;
}

}  // namespace qunc::io
