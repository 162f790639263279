#ifndef BCF_IO_HPP
#define BCF_IO_HPP

#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "bcf/fraction.hpp"
#include "bcf/multi_index.hpp"
#include "bcf/rational.hpp"
#include "bcf/series.hpp"

namespace bcf {

// Files are JSON documents. Coefficients are strings in exact rational
// form ("-1/3", "2", "0.125"); multi-indices are integer arrays.
//
//   series:   {"dim": 2, "degree": 8, "terms": [{"k": [1,0], "c": "1"}, ...]}
//   fraction: {"form": "A", "dim": 2, "depth": 6,
//              "nodes": [{"e": [1,0], "p": "1", "q": "0"}, ...]}
//
// Terms and nodes are written in canonical multi-index order.

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

using json = nlohmann::json;

inline MultiIndex index_from_json(const json& j, std::size_t dim) {
  if (!j.is_array()) throw FormatError("multi-index must be an integer array");
  std::vector<int> k;
  for (const auto& x : j) {
    if (!x.is_number_integer() || x.get<long long>() < 0) throw FormatError("multi-index entries must be non-negative integers");
    k.push_back(x.get<int>());
  }
  if (k.size() != dim) throw FormatError("multi-index " + j.dump() + " does not have " + std::to_string(dim) + " entries");
  return MultiIndex(std::move(k));
}

inline json index_to_json(const MultiIndex& k) { return json(std::vector<int>(k.components().begin(), k.components().end())); }

inline Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(mpz_class(j.dump(), 10));
  throw FormatError("coefficients must be strings or integers, got " + j.dump());
}

template <class T>
T field(const json& doc, const char* name) {
  if (!doc.contains(name)) throw FormatError(std::string("missing field '") + name + "'");
  try {
    return doc.at(name).get<T>();
  } catch (const json::exception& e) {
    throw FormatError(std::string("field '") + name + "': " + e.what());
  }
}

inline json parse_document(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(e.what());
  }
}

}  // namespace detail

inline std::string series_to_json(const TruncatedMultiSeries& s) {
  detail::json doc;
  doc["dim"] = s.dim();
  doc["degree"] = s.degree_cap();
  doc["terms"] = detail::json::array();
  for (const auto& [k, c] : s.terms()) doc["terms"].push_back({{"k", detail::index_to_json(k)}, {"c", to_string(c)}});
  return doc.dump(1) + "\n";
}

inline TruncatedMultiSeries series_from_json(const std::string& text) {
  const auto doc = detail::parse_document(text);
  const auto dim = detail::field<std::size_t>(doc, "dim");
  const auto degree = detail::field<int>(doc, "degree");
  if (dim == 0 || degree < 0) throw FormatError("series needs dim >= 1 and degree >= 0");
  TruncatedMultiSeries s(dim, degree);
  const auto terms = detail::field<detail::json>(doc, "terms");
  if (!terms.is_array()) throw FormatError("'terms' must be an array");
  for (const auto& t : terms) {
    const MultiIndex k = detail::index_from_json(detail::field<detail::json>(t, "k"), dim);
    if (k.total_degree() > degree) throw FormatError("term " + k.str() + " lies beyond the stated degree");
    s.add_to(k, detail::rational_from_json(detail::field<detail::json>(t, "c")));
  }
  return s;
}

template <FractionForm Form>
std::string fraction_to_json(const BranchedFraction<Form>& f) {
  detail::json doc;
  doc["form"] = form_name(Form);
  doc["dim"] = f.dim();
  doc["depth"] = f.depth();
  doc["nodes"] = detail::json::array();
  for (const auto& [e, el] : f.nodes())
    doc["nodes"].push_back({{"e", detail::index_to_json(e)}, {"p", to_string(el.p)}, {"q", to_string(el.q)}});
  return doc.dump(1) + "\n";
}

// Reads either form; the stored "form" tag is returned through `form`.
inline AFraction fraction_from_json(const std::string& text, FractionForm* form = nullptr) {
  const auto doc = detail::parse_document(text);
  const auto tag = detail::field<std::string>(doc, "form");
  if (tag != "A" && tag != "J") throw FormatError("form must be \"A\" or \"J\"");
  if (form) *form = tag == "A" ? FractionForm::A : FractionForm::J;
  const auto dim = detail::field<std::size_t>(doc, "dim");
  const auto depth = detail::field<int>(doc, "depth");
  if (dim == 0 || depth < 0) throw FormatError("fraction needs dim >= 1 and depth >= 0");
  AFraction f(dim, depth);
  const auto nodes = detail::field<detail::json>(doc, "nodes");
  if (!nodes.is_array()) throw FormatError("'nodes' must be an array");
  for (const auto& n : nodes) {
    const MultiIndex e = detail::index_from_json(detail::field<detail::json>(n, "e"), dim);
    try {
      f.set(e, {detail::rational_from_json(detail::field<detail::json>(n, "p")),
                detail::rational_from_json(detail::field<detail::json>(n, "q"))});
    } catch (const std::invalid_argument& err) {
      throw FormatError(err.what());
    }
  }
  return f;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path);
}

// Full-precision scientific notation.
inline std::string sci(double x, int digits = 17) {
  std::ostringstream ss;
  ss << std::scientific << std::setprecision(digits - 1) << x;
  return ss.str();
}

}  // namespace bcf

#endif  // BCF_IO_HPP
