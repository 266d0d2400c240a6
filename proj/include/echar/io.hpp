#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "echar/echar.hpp"
#include "echar/eigen.hpp"
#include "echar/tensor.hpp"

namespace echar {

using Json = nlohmann::ordered_json;

// {"order": m, "dim": n, "entries": {"1,2,1": "3/4", ...}} with 1-based
// indices. Unknown fields, malformed indices and duplicate entries throw
// ParseError.
Hypermatrix parse_tensor_document(const Json& doc);
Hypermatrix parse_tensor_document(const std::string& text);
Hypermatrix read_tensor_file(const std::filesystem::path& path);
// Entries in index order, zeros omitted.
Json tensor_document(const Hypermatrix& a);

Json to_json(std::complex<double> z);
Json to_json(const ComplexRational& z);
// Ascending powers, exact rational strings; empty for the zero polynomial.
Json coefficient_strings(const UnivariatePoly& p);
UnivariatePoly parse_coefficients(const Json& list);

Json echar_report(const EcharResult& r);
Json eigen_report(const Hypermatrix& a);

}  // namespace echar
