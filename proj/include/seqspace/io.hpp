#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

#include "seqspace/operators.hpp"
#include "seqspace/params.hpp"

namespace seqspace::io {

using json = nlohmann::json;

/// Reads a whole file; parse errors and missing files raise Error.
std::string slurp(const std::string& path);
json load_json(const std::string& path);

/// One exact scalar from a JSON value: integers stay exact, strings are
/// parsed as rational literals ("1/3", "2.5"), doubles go through their
/// shortest decimal round trip.
Rational rational_from_json(const json& v);

/// Sequence family from {"kind": ...} objects, bare arrays (explicit prefix)
/// or {"values": [...], "tail": {...}} objects.
SequenceFamily family_from_json(const json& v);

/// Space parameters from a params document ({"r","s","t","m","p"} or
/// {"preset": name, ...}).
SpaceParams params_from_json(const json& v);

/// Named preset with documented default arguments, for --preset on the
/// command line: "weighted-mean" (u_n = n+1, v = 1), "cesaro-alpha"
/// (alpha = 1/2), "lambda" (lambda_n = n+1).
SpaceParams params_from_preset(const std::string& name, unsigned m, double p);

/// Vector of exact scalars from {"values": [...]}, a bare JSON array, or a
/// CSV file (one value per line; blank lines and #-comments skipped).
std::vector<Rational> vector_from_json(const json& v);
std::vector<Rational> vector_from_csv(const std::string& text);
std::vector<Rational> load_vector(const std::string& path);

/// Exponent sequence from a JSON number or array.
ExponentSequence exponents_from_json(const json& v);

template <class S>
std::vector<S> to_kernel(const std::vector<Rational>& exact) {
  std::vector<S> out;
  out.reserve(exact.size());
  for (const Rational& q : exact) out.push_back(from_rational<S>(q));
  return out;
}

/// Operator from {"p","target","q","rows":[ {"entries":[[k,v],...]} |
/// {"geometric":{"coeff","ratio"}} | {} ]}.
template <class S>
OperatorSpec<S> operator_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("rows") || !doc["rows"].is_array())
    raise(errc::parse_error, "operator document needs a rows array");
  OperatorSpec<S> spec;
  if (doc.contains("p")) spec.p = doc["p"].get<double>();
  std::string target = doc.value("target", std::string("c0"));
  double q = doc.value("q", 1.0);
  spec.target = TargetSpace::parse(target, q);

  for (const json& row : doc["rows"]) {
    if (!row.is_object())
      raise(errc::parse_error, "operator row must be an object");
    if (row.contains("entries")) {
      std::vector<std::pair<std::size_t, S>> entries;
      for (const json& pair : row["entries"]) {
        if (!pair.is_array() || pair.size() != 2)
          raise(errc::parse_error, "row entry must be [k, value]");
        entries.emplace_back(pair[0].get<std::size_t>(),
                             from_rational<S>(rational_from_json(pair[1])));
      }
      spec.rows.push_back(OperatorRow<S>::finite(std::move(entries)));
    } else if (row.contains("geometric")) {
      const json& g = row["geometric"];
      Rational coeff = rational_from_json(g.at("coeff"));
      Rational ratio = rational_from_json(g.at("ratio"));
      if (!(abs_value(ratio) < 1))
        raise(errc::invalid_config,
              "geometric row needs |ratio| < 1 for its decay certificate");
      S c = from_rational<S>(coeff);
      S r = from_rational<S>(ratio);
      typename OperatorRow<S>::DecayCertificate cert{
          std::fabs(to_double(coeff)), std::fabs(to_double(ratio)), 0};
      spec.rows.push_back(OperatorRow<S>::geometric_decay(
          [c, r](std::size_t k) { return S(c * int_pow(r, k)); }, cert));
    } else if (row.empty()) {
      spec.rows.push_back(OperatorRow<S>::zero());
    } else {
      raise(errc::parse_error,
            "operator row needs entries, geometric, or {} for a zero row");
    }
  }
  return spec;
}

/// Scalar serialization: exact strings in rational mode, numbers in float
/// mode (integers stay integral for readability).
json scalar_to_json(const Rational& v);
json scalar_to_json(double v);

template <class S>
json vector_to_json(const std::vector<S>& values) {
  json arr = json::array();
  for (const S& v : values) arr.push_back(scalar_to_json(v));
  return arr;
}

}  // namespace seqspace::io
