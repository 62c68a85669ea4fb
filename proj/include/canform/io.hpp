#ifndef CANFORM_IO_HPP
#define CANFORM_IO_HPP

#include <json.hpp>

#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include "canform/pushforward.hpp"

// JSON surface. Rationals travel as strings "p/q" ("p" when q = 1);
// ordered_json keeps key order stable so serialize(parse(s)) == s holds
// byte for byte on our own output.

namespace canform {

using Json = nlohmann::ordered_json;

namespace detail {

inline Rat rat_from_json(const Json& j, const std::string& field) {
  if (j.is_string()) return rat_from_string(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long long>());
  throw InputError("json: \"" + field + "\" entries must be rational strings");
}

inline std::string coord_list(const std::vector<Rat>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += rat_to_string(v[i]);
  }
  return s;
}

}  // namespace detail

inline Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file: " + path);
  Json j = Json::parse(in, nullptr, false);
  if (j.is_discarded()) throw InputError("malformed JSON in " + path);
  return j;
}

// V-representation is canonical on output.
inline Json polytope_to_json(const Polytope& p) {
  Json verts = Json::array();
  for (const auto& v : p.vertices) {
    Json row = Json::array();
    for (const auto& x : v) row.push_back(rat_to_string(x));
    verts.push_back(std::move(row));
  }
  return Json{{"dim", p.dim}, {"vertices", std::move(verts)}};
}

// Accepts {"dim", "vertices": [[...]]} or {"dim", "facets": [{"c0",
// "coeffs"}]}. Listed points that are not vertices of the hull are
// dropped with a warning; an H-representation is converted by exact
// vertex enumeration.
inline Polytope polytope_from_json(const Json& j,
                                   std::vector<std::string>* warnings = nullptr) {
  if (!j.is_object()) throw InputError("polytope json: expected an object");
  if (!j.contains("dim") || !j["dim"].is_number_integer())
    throw InputError("polytope json: \"dim\" must be an integer");
  const int dim = j["dim"].get<int>();
  if (dim < 1) throw InputError("polytope json: \"dim\" must be positive");

  if (j.contains("vertices")) {
    const Json& rows = j["vertices"];
    if (!rows.is_array() || rows.empty())
      throw InputError("polytope json: \"vertices\" must be a nonempty array");
    std::vector<std::vector<Rat>> pts;
    for (const auto& row : rows) {
      if (!row.is_array() || static_cast<int>(row.size()) != dim)
        throw InputError(
            "polytope json: every vertex needs exactly \"dim\" coordinates");
      std::vector<Rat> v;
      for (const auto& x : row) v.push_back(detail::rat_from_json(x, "vertices"));
      pts.push_back(std::move(v));
    }
    Polytope p = hull_from_vertices(dim, pts);
    if (warnings)
      for (const auto& q : pts)
        if (std::find(p.vertices.begin(), p.vertices.end(), q) ==
            p.vertices.end())
          warnings->push_back("dropped non-vertex point (" +
                              detail::coord_list(q) + ")");
    return p;
  }

  if (j.contains("facets")) {
    const Json& rows = j["facets"];
    if (!rows.is_array() || rows.empty())
      throw InputError("polytope json: \"facets\" must be a nonempty array");
    std::vector<LinForm> forms;
    for (const auto& row : rows) {
      if (!row.is_object() || !row.contains("c0") || !row.contains("coeffs"))
        throw InputError("polytope json: each facet needs \"c0\" and \"coeffs\"");
      const Json& cs = row["coeffs"];
      if (!cs.is_array() || static_cast<int>(cs.size()) != dim)
        throw InputError(
            "polytope json: facet \"coeffs\" length must equal \"dim\"");
      std::vector<Rat> coeffs;
      for (const auto& c : cs) coeffs.push_back(detail::rat_from_json(c, "coeffs"));
      forms.emplace_back(detail::rat_from_json(row["c0"], "c0"),
                         std::move(coeffs));
    }
    return polytope_from_hrep(dim, forms);
  }

  throw InputError("polytope json: need \"vertices\" or \"facets\"");
}

// Repeated pole factors collapse into one entry with a multiplicity.
inline Json form_to_json(const CanonicalForm& f) {
  Json num = Json::array();
  for (const auto& [e, c] : f.num.terms())
    num.push_back(Json{{"coeff", rat_to_string(c)}, {"exp", e}});

  Json poles = Json::array();
  for (size_t i = 0; i < f.poles.size();) {
    size_t k = i;
    while (k < f.poles.size() && f.poles[k] == f.poles[i]) ++k;
    Json coeffs = Json::array();
    for (const auto& a : f.poles[i].coeffs()) coeffs.push_back(rat_to_string(a));
    poles.push_back(Json{{"c0", rat_to_string(f.poles[i].c0())},
                         {"coeffs", std::move(coeffs)},
                         {"mult", static_cast<int>(k - i)}});
    i = k;
  }
  return Json{{"vars", f.vars},
              {"sign", f.sign},
              {"numerator", std::move(num)},
              {"poles", std::move(poles)}};
}

inline CanonicalForm form_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("form json: expected an object");
  if (!j.contains("vars") || !j["vars"].is_array() || j["vars"].empty())
    throw InputError("form json: \"vars\" must be a nonempty array");
  CanonicalForm f;
  for (const auto& v : j["vars"]) {
    if (!v.is_string()) throw InputError("form json: \"vars\" must hold strings");
    f.vars.push_back(v.get<std::string>());
  }
  const int d = f.dim();

  if (!j.contains("sign") || !j["sign"].is_number_integer())
    throw InputError("form json: \"sign\" must be an integer");
  f.sign = j["sign"].get<int>();
  if (f.sign != 1 && f.sign != -1)
    throw InputError("form json: \"sign\" must be +1 or -1");

  if (!j.contains("numerator") || !j["numerator"].is_array())
    throw InputError("form json: \"numerator\" must be an array");
  Poly num(d);
  for (const auto& t : j["numerator"]) {
    if (!t.is_object() || !t.contains("coeff") || !t.contains("exp") ||
        !t["exp"].is_array() || static_cast<int>(t["exp"].size()) != d)
      throw InputError(
          "form json: numerator terms need \"coeff\" and a length-d \"exp\"");
    Exponents e;
    for (const auto& x : t["exp"]) {
      if (!x.is_number_integer() || x.get<int>() < 0)
        throw InputError("form json: \"exp\" entries must be integers >= 0");
      e.push_back(x.get<int>());
    }
    num.add_term(std::move(e), detail::rat_from_json(t["coeff"], "coeff"));
  }
  f.num = std::move(num);

  if (!j.contains("poles") || !j["poles"].is_array())
    throw InputError("form json: \"poles\" must be an array");
  for (const auto& p : j["poles"]) {
    if (!p.is_object() || !p.contains("c0") || !p.contains("coeffs") ||
        !p["coeffs"].is_array() || static_cast<int>(p["coeffs"].size()) != d)
      throw InputError(
          "form json: poles need \"c0\" and a length-d \"coeffs\"");
    std::vector<Rat> coeffs;
    for (const auto& c : p["coeffs"])
      coeffs.push_back(detail::rat_from_json(c, "coeffs"));
    int mult = 1;
    if (p.contains("mult")) {
      if (!p["mult"].is_number_integer() || p["mult"].get<int>() < 1)
        throw InputError("form json: \"mult\" must be a positive integer");
      mult = p["mult"].get<int>();
    }
    const LinForm pole(detail::rat_from_json(p["c0"], "c0"), std::move(coeffs));
    if (pole.is_zero()) throw InputError("form json: zero pole factor");
    for (int k = 0; k < mult; ++k) f.poles.push_back(pole);
  }
  return f;
}

inline Json report_to_json(const CheckReport& rep) {
  return Json{{"name", rep.name}, {"passed", rep.passed},
              {"witnesses", rep.witnesses}};
}

namespace detail {

inline Json complex_to_json(const Complex& z) {
  return Json::array({z.real(), z.imag()});
}

}  // namespace detail

inline Json pushforward_report_to_json(const PushforwardReport& r) {
  Json sample = Json::array();
  for (const auto& x : r.sample) sample.push_back(rat_to_string(x));
  Json pre = Json::array();
  for (const auto& z : r.preimages) {
    Json row = Json::array();
    for (const auto& zi : z) row.push_back(detail::complex_to_json(zi));
    pre.push_back(std::move(row));
  }
  return Json{{"sample", std::move(sample)},
              {"preimages", std::move(pre)},
              {"degree_found", r.degree_found},
              {"lhs", detail::complex_to_json(r.lhs)},
              {"rhs", r.rhs},
              {"abs_err", r.abs_err},
              {"rel_err", r.rel_err},
              {"exact", r.exact},
              {"passed", r.passed}};
}

struct PushforwardInput {
  std::vector<std::vector<Rat>> W;
  std::vector<std::vector<int>> V;
  int samples = 10;
  double tol = 1e-9;
};

inline PushforwardInput pushforward_input_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("pushforward json: expected an object");
  if (!j.contains("W") || !j["W"].is_array() || j["W"].empty())
    throw InputError("pushforward json: \"W\" must be a nonempty array");
  if (!j.contains("V") || !j["V"].is_array() || j["V"].empty())
    throw InputError("pushforward json: \"V\" must be a nonempty array");
  PushforwardInput in;
  for (const auto& row : j["W"]) {
    if (!row.is_array())
      throw InputError("pushforward json: \"W\" rows must be arrays");
    std::vector<Rat> w;
    for (const auto& x : row) w.push_back(detail::rat_from_json(x, "W"));
    in.W.push_back(std::move(w));
  }
  for (const auto& row : j["V"]) {
    if (!row.is_array())
      throw InputError("pushforward json: \"V\" rows must be arrays");
    std::vector<int> v;
    for (const auto& x : row) {
      if (!x.is_number_integer())
        throw InputError("pushforward json: \"V\" entries must be integers");
      v.push_back(x.get<int>());
    }
    in.V.push_back(std::move(v));
  }
  if (j.contains("samples")) {
    if (!j["samples"].is_number_integer() || j["samples"].get<int>() < 1)
      throw InputError("pushforward json: \"samples\" must be a positive integer");
    in.samples = j["samples"].get<int>();
  }
  if (j.contains("tol")) {
    if (!j["tol"].is_number() || !(j["tol"].get<double>() > 0))
      throw InputError("pushforward json: \"tol\" must be a positive number");
    in.tol = j["tol"].get<double>();
  }
  return in;
}

}  // namespace canform

#endif
