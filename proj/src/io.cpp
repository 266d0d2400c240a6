#include "echar/io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "echar/errors.hpp"

namespace echar {

namespace {

MultiIndex parse_index(const std::string& key, int order, int dim) {
  MultiIndex idx;
  std::size_t pos = 0;
  while (pos <= key.size()) {
    const std::size_t comma = std::min(key.find(',', pos), key.size());
    const std::string part = key.substr(pos, comma - pos);
    int v = 0;
    auto [end, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (part.empty() || ec != std::errc() || end != part.data() + part.size()) {
      throw ParseError("malformed index '" + key + "'");
    }
    if (v < 1 || v > dim) throw ParseError("index '" + key + "' out of range 1.." + std::to_string(dim));
    idx.push_back(v - 1);
    pos = comma + 1;
  }
  if (static_cast<int>(idx.size()) != order) {
    throw ParseError("index '" + key + "' needs " + std::to_string(order) + " components");
  }
  return idx;
}

int positive_int(const Json& doc, const char* field) {
  if (!doc.contains(field)) throw ParseError(std::string("missing field '") + field + "'");
  const Json& v = doc.at(field);
  if (!v.is_number_integer()) throw ParseError(std::string("field '") + field + "' must be an integer");
  return v.get<int>();
}

}  // namespace

Hypermatrix parse_tensor_document(const Json& doc) {
  if (!doc.is_object()) throw ParseError("tensor document must be a JSON object");
  for (const auto& [key, _] : doc.items()) {
    if (key != "order" && key != "dim" && key != "entries") throw ParseError("unknown field '" + key + "'");
  }
  const int order = positive_int(doc, "order");
  const int dim = positive_int(doc, "dim");
  if (order < 2 || dim < 1) throw ParseError("need order >= 2 and dim >= 1");
  Hypermatrix a(order, dim);
  if (!doc.contains("entries")) return a;
  const Json& entries = doc.at("entries");
  if (!entries.is_object()) throw ParseError("'entries' must be an object");
  std::set<MultiIndex> seen;
  for (const auto& [key, value] : entries.items()) {
    MultiIndex idx = parse_index(key, order, dim);
    if (!seen.insert(idx).second) throw ParseError("duplicate entry '" + key + "'");
    BigRational q;
    if (value.is_string()) {
      q = parse_rational(value.get<std::string>());
    } else if (value.is_number_integer()) {
      q = BigRational(value.dump());
    } else {
      throw ParseError("entry '" + key + "' must be a rational string");
    }
    a.set(idx, q);
  }
  return a;
}

Hypermatrix parse_tensor_document(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return parse_tensor_document(doc);
}

Hypermatrix read_tensor_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path.string() + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_tensor_document(ss.str());
}

Json tensor_document(const Hypermatrix& a) {
  Json entries = Json::object();
  for (const auto& [idx, v] : a.entries()) {
    std::string key;
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if (k) key += ',';
      key += std::to_string(idx[k] + 1);
    }
    entries[key] = to_string(v);
  }
  return Json{{"order", a.order()}, {"dim", a.dim()}, {"entries", entries}};
}

Json to_json(std::complex<double> z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Json to_json(const ComplexRational& z) { return Json{{"re", to_string(z.re)}, {"im", to_string(z.im)}}; }

Json coefficient_strings(const UnivariatePoly& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(to_string(c));
  return out;
}

UnivariatePoly parse_coefficients(const Json& list) {
  std::vector<BigRational> c;
  for (const auto& v : list) c.push_back(parse_rational(v.get<std::string>()));
  return UnivariatePoly(std::move(c));
}

Json echar_report(const EcharResult& r) {
  Json out;
  out["route"] = std::string(to_string(r.route));
  out["order"] = r.order;
  out["dim"] = r.dim;
  out["identically_zero"] = r.identically_zero();
  out["degree"] = r.identically_zero() ? Json(nullptr) : Json(r.psi.degree());
  out["coefficients"] = coefficient_strings(r.psi);
  out["h_bound"] = r.h_bound;
  out["a0_predicted"] = to_string(r.a0_predicted);
  out["a0_matches"] = r.a0_matches();
  if (r.leading_predicted) {
    out["top_power"] = r.top_power();
    out["leading_predicted"] = to_string(*r.leading_predicted);
    out["leading_matches"] = *r.leading_matches();
  }
  return out;
}

Json eigen_report(const Hypermatrix& a) {
  const EigenpairSet set = eigenpairs_n2(a);
  Json out;
  out["order"] = a.order();
  out["dim"] = a.dim();
  out["infinitely_many"] = set.infinitely_many;
  const RegularityReport reg = is_regular(a);
  out["regular"] = reg.regular;
  if (reg.exact_witness) {
    Json w = Json::array();
    for (const auto& v : *reg.exact_witness) w.push_back(to_json(v));
    out["irregularity_witness"] = w;
  }
  const DeficitIndicator di = deficit_indicator(a);
  out["deficit_indicator"] = Json{{"value", to_string(di.value)}, {"has_deficit", di.has_deficit}};

  const auto z = z_eigenpairs(a);
  Json rows = Json::array();
  for (const Eigenpair& p : set.pairs) {
    Json row;
    row["kind"] = std::string(to_string(p.kind));
    row["lambda"] = to_json(p.lambda);
    row["plus_minus"] = p.plus_minus;
    row["x"] = Json::array({to_json(p.x[0]), to_json(p.x[1])});
    row["multiplicity"] = p.multiplicity;
    if (p.exact_direction) row["direction"] = Json::array({to_json((*p.exact_direction)[0]), to_json((*p.exact_direction)[1])});
    if (p.exact_lambda) row["exact_lambda"] = to_json(*p.exact_lambda);
    if (p.exact_lambda_squared) row["exact_lambda_squared"] = to_json(*p.exact_lambda_squared);
    row["residual"] = eigen_residual(a, p.x, p.lambda);
    const bool real = p.kind == EigenKind::normalized && std::abs(p.lambda.imag()) <= 1e-10 &&
                      std::abs(p.x[0].imag()) <= 1e-10 && std::abs(p.x[1].imag()) <= 1e-10;
    row["z_eigenpair"] = real;
    rows.push_back(row);
  }
  out["pairs"] = rows;
  out["counts"] = Json{{"normalized", set.count(EigenKind::normalized)}, {"deficit", set.count(EigenKind::deficit)}};
  Json zl = Json::array();
  for (const auto& p : z) zl.push_back(p.lambda.real());
  out["z_eigenvalues"] = zl;
  return out;
}

}  // namespace echar
