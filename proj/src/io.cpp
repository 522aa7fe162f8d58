#include "seqspace/io.hpp"

#include <fstream>
#include <sstream>

namespace seqspace::io {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(errc::invalid_config, "cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json load_json(const std::string& path) {
  try {
    return json::parse(slurp(path));
  } catch (const json::parse_error& e) {
    raise(errc::parse_error, "invalid JSON in " + path + ": " + e.what());
  }
}

Rational rational_from_json(const json& v) {
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_number_unsigned()) return Rational(v.get<unsigned long long>());
  if (v.is_number_float()) return rational_from_double(v.get<double>());
  if (v.is_string()) return parse_rational_literal(v.get<std::string>());
  raise(errc::parse_error, "expected a number or numeric string, got " +
                               std::string(v.type_name()));
}

namespace {

std::vector<Rational> rational_array(const json& arr) {
  std::vector<Rational> out;
  out.reserve(arr.size());
  for (const json& v : arr) out.push_back(rational_from_json(v));
  return out;
}

}  // namespace

SequenceFamily family_from_json(const json& v) {
  if (v.is_array()) return SequenceFamily::prefix(rational_array(v));
  if (!v.is_object())
    raise(errc::parse_error, "sequence family must be an object or array");

  if (v.contains("values")) {
    std::vector<Rational> values = rational_array(v.at("values"));
    if (v.contains("tail"))
      return SequenceFamily::prefix_then(std::move(values),
                                         family_from_json(v.at("tail")));
    return SequenceFamily::prefix(std::move(values));
  }

  std::string kind = v.value("kind", std::string());
  if (kind == "constant")
    return SequenceFamily::constant(rational_from_json(v.at("value")));
  if (kind == "arithmetic")
    return SequenceFamily::arithmetic(rational_from_json(v.at("start")),
                                      rational_from_json(v.at("step")));
  if (kind == "geometric")
    return SequenceFamily::geometric(rational_from_json(v.at("start")),
                                     rational_from_json(v.at("ratio")));
  if (kind == "onePlusPower")
    return SequenceFamily::one_plus_geometric(rational_from_json(v.at("alpha")));
  if (kind == "reciprocal")
    return SequenceFamily::reciprocal(family_from_json(v.at("inner")));
  if (kind == "difference")
    return SequenceFamily::difference(family_from_json(v.at("inner")));
  if (kind == "prefix")
    return family_from_json(json{{"values", v.at("values")}});
  raise(errc::parse_error, "unknown sequence family kind '" + kind + "'");
}

ExponentSequence exponents_from_json(const json& v) {
  if (v.is_number()) return ExponentSequence::constant(v.get<double>());
  if (v.is_array()) {
    std::vector<double> values;
    values.reserve(v.size());
    for (const json& e : v) values.push_back(e.get<double>());
    return ExponentSequence::from_list(std::move(values));
  }
  raise(errc::parse_error, "exponents must be a number or an array");
}

SpaceParams params_from_json(const json& v) {
  if (!v.is_object())
    raise(errc::parse_error, "params document must be an object");

  unsigned m = v.value("m", 1u);
  ExponentSequence p = v.contains("p") ? exponents_from_json(v.at("p"))
                                       : ExponentSequence::constant(2.0);

  if (v.contains("preset")) {
    std::string preset = v.at("preset").get<std::string>();
    if (preset == "weighted-mean") {
      SequenceFamily u = v.contains("u")
                             ? family_from_json(v.at("u"))
                             : SequenceFamily::arithmetic(Rational(1), Rational(1));
      SequenceFamily w = v.contains("v") ? family_from_json(v.at("v"))
                                         : SequenceFamily::ones();
      return preset_weighted_mean(std::move(u), std::move(w), m, std::move(p));
    }
    if (preset == "cesaro-alpha") {
      Rational alpha = v.contains("alpha") ? rational_from_json(v.at("alpha"))
                                           : Rational(1, 2);
      return preset_cesaro_alpha(std::move(alpha), m, std::move(p));
    }
    if (preset == "lambda") {
      SequenceFamily lambda =
          v.contains("lambda")
              ? family_from_json(v.at("lambda"))
              : SequenceFamily::arithmetic(Rational(1), Rational(1));
      return preset_lambda(std::move(lambda), m, std::move(p));
    }
    raise(errc::invalid_config,
          "unknown preset '" + preset +
              "' (weighted-mean|cesaro-alpha|lambda)");
  }

  SpaceParams params;
  params.r = v.contains("r") ? family_from_json(v.at("r"))
                             : SequenceFamily::ones();
  params.s = v.contains("s") ? family_from_json(v.at("s"))
                             : SequenceFamily::ones();
  params.t = v.contains("t") ? family_from_json(v.at("t"))
                             : SequenceFamily::ones();
  params.m = m;
  params.p = std::move(p);
  return params;
}

SpaceParams params_from_preset(const std::string& name, unsigned m, double p) {
  json doc{{"preset", name}, {"m", m}, {"p", p}};
  return params_from_json(doc);
}

std::vector<Rational> vector_from_json(const json& v) {
  if (v.is_array()) return rational_array(v);
  if (v.is_object() && v.contains("values"))
    return rational_array(v.at("values"));
  raise(errc::parse_error, "vector document must be an array or {values: []}");
}

std::vector<Rational> vector_from_csv(const std::string& text) {
  std::vector<Rational> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;
    out.push_back(parse_rational_literal(line));
  }
  if (out.empty()) raise(errc::parse_error, "CSV vector file has no values");
  return out;
}

std::vector<Rational> load_vector(const std::string& path) {
  if (path.size() >= 4 && path.substr(path.size() - 4) == ".csv")
    return vector_from_csv(slurp(path));
  return vector_from_json(load_json(path));
}

json scalar_to_json(const Rational& v) {
  if (denominator(v) == 1 && abs_value(v) < Rational(1LL << 53))
    return json(numerator(v).convert_to<long long>());
  return json(rational_to_string(v));
}

json scalar_to_json(double v) { return json(v); }

}  // namespace seqspace::io
