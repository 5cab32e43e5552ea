#include "convexsym/io.hpp"

#include <fstream>
#include <sstream>

namespace csym {

namespace {

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw InvalidInput("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw InvalidInput(std::string("missing field '") + key + "'");
  return *it;
}

double number(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number()) throw InvalidInput(std::string("field '") + key + "' must be a number");
  return v.get<double>();
}

std::string text(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) throw InvalidInput(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

std::vector<Vector> vectors_from_json(const Json& j, int n) {
  if (!j.is_array()) throw InvalidInput("expected an array of vectors");
  std::vector<Vector> out;
  for (const auto& row : j) {
    out.push_back(vector_from_json(row));
    if (static_cast<int>(out.back().size()) != n) throw InvalidInput("vector has the wrong dimension");
  }
  return out;
}

Verdict verdict_from(const std::string& s) {
  if (s == "pass") return Verdict::pass;
  if (s == "fail") return Verdict::fail;
  throw InvalidInput("verdict must be 'pass' or 'fail'");
}

}  // namespace

Json vector_to_json(const Vector& v) {
  Json a = Json::array();
  for (int i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

Vector vector_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw InvalidInput("expected a non-empty array of numbers");
  if (j.size() > static_cast<std::size_t>(kMaxDim)) throw UnsupportedDimension("vector longer than 8");
  Vector v(static_cast<int>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) throw InvalidInput("vector entries must be numbers");
    v(static_cast<int>(i)) = j[i].get<double>();
  }
  if (!all_finite(v)) throw InvalidInput("vector entries must be finite");
  return v;
}

Json subspace_to_json(const Subspace& h) {
  Json basis = Json::array();
  for (int k = 0; k < h.dim(); ++k) basis.push_back(vector_to_json(h.basis_vector(k)));
  return Json{{"dim", h.ambient_dim()}, {"basis", basis}};
}

Subspace subspace_from_json(const Json& j) {
  const Json& basis = field(j, "basis");
  if (!basis.is_array()) throw InvalidInput("basis must be an array");
  int n = -1;
  if (j.contains("dim")) {
    if (!j["dim"].is_number_integer()) throw InvalidInput("dim must be an integer");
    n = j["dim"].get<int>();
  } else if (!basis.empty() && basis[0].is_array()) {
    n = static_cast<int>(basis[0].size());
  }
  if (n < 1) throw InvalidInput("subspace needs a dimension");
  require_dim(n);
  std::vector<Vector> vs = vectors_from_json(basis, n);
  return orthonormalize(vs, n);
}

Json body_to_json(const Body& k) {
  return std::visit(
      Overloaded{
          [](const Polytope& p) {
            Json verts = Json::array();
            for (const auto& v : p.vertices()) verts.push_back(vector_to_json(v));
            return Json{{"kind", "polytope"}, {"dim", p.ambient_dim()}, {"vertices", verts}};
          },
          [](const Ball& b) {
            return Json{{"kind", "ball"}, {"center", vector_to_json(b.center)}, {"radius", b.radius}};
          },
          [](const SphericalCylinder& c) {
            return Json{{"kind", "cylinder"}, {"basis", subspace_to_json(c.h)["basis"]},
                        {"r", c.r},          {"s", c.s},
                        {"x", vector_to_json(c.x)}};
          },
          [](const SpecialForm& f) {
            Json verts = Json::array();
            for (const auto& v : f.l.vertices()) verts.push_back(vector_to_json(v));
            return Json{{"kind", "special"},
                        {"dim", f.h.ambient_dim()},
                        {"basis", subspace_to_json(f.h)["basis"]},
                        {"vertices", verts},
                        {"s", f.s}};
          },
      },
      k);
}

Body body_from_json(const Json& j) {
  const std::string kind = text(j, "kind");
  if (kind == "polytope") {
    const int n = static_cast<int>(number(j, "dim"));
    require_dim(n);
    std::vector<Vector> pts = vectors_from_json(field(j, "vertices"), n);
    if (pts.empty()) throw InvalidInput("polytope needs at least one vertex");
    return Polytope::hull(pts);
  }
  if (kind == "ball") return Ball(vector_from_json(field(j, "center")), number(j, "radius"));
  if (kind == "cylinder") {
    const Vector x = vector_from_json(field(j, "x"));
    const int n = static_cast<int>(x.size());
    Subspace h = orthonormalize(vectors_from_json(field(j, "basis"), n), n);
    return SphericalCylinder(std::move(h), number(j, "r"), number(j, "s"), x);
  }
  if (kind == "special") {
    const int n = static_cast<int>(number(j, "dim"));
    require_dim(n);
    Subspace h = orthonormalize(vectors_from_json(field(j, "basis"), n), n);
    std::vector<Vector> pts = vectors_from_json(field(j, "vertices"), n);
    if (pts.empty()) throw InvalidInput("special form needs at least one vertex");
    return SpecialForm(Polytope::hull(pts), std::move(h), number(j, "s"));
  }
  throw InvalidInput("unknown body kind '" + kind + "'");
}

Json symmetrizer_to_json(const Symmetrizer& op) {
  return std::visit(Overloaded{
                        [](const SteinerOp& s) { return Json{{"op", "steiner"}, {"H", subspace_to_json(s.h)}}; },
                        [](const MinkowskiOp& s) {
                          return Json{{"op", "minkowski"}, {"H", subspace_to_json(s.h)}};
                        },
                        [](const PathologicalOp& s) {
                          return Json{{"op", "pathological"}, {"H", subspace_to_json(s.h)}};
                        },
                        [](const NaturalExtensionOp& s) {
                          return Json{{"op", "natural"},
                                      {"inner", symmetrizer_to_json(*s.inner)},
                                      {"m_max", s.m_max},
                                      {"tol", s.tol}};
                        },
                    },
                    op.op());
}

Symmetrizer symmetrizer_from_json(const Json& j) {
  const std::string op = text(j, "op");
  if (op == "natural") {
    Symmetrizer inner = symmetrizer_from_json(field(j, "inner"));
    const int m_max = j.contains("m_max") ? static_cast<int>(number(j, "m_max")) : 64;
    const double tol = j.contains("tol") ? number(j, "tol") : 1e-6;
    return Symmetrizer::natural(std::move(inner), m_max, tol);
  }
  Subspace h = subspace_from_json(field(j, "H"));
  if (op == "steiner") return Symmetrizer::steiner(std::move(h));
  if (op == "minkowski") return Symmetrizer::minkowski(std::move(h));
  if (op == "pathological") return Symmetrizer::pathological(std::move(h));
  throw InvalidInput("unknown operator '" + op + "'");
}

Json estimate_to_json(const MeasureEstimate& e) {
  return Json{{"value", e.value},
              {"std_error", e.std_error},
              {"samples", e.samples},
              {"method", e.method == Method::exact ? "exact" : "mc"}};
}

Json report_to_json(const PropertyReport& r) {
  Json j{{"type", r.type},
         {"property", r.property},
         {"operator", r.op ? symmetrizer_to_json(*r.op) : Json(nullptr)},
         {"trials", r.trials},
         {"violations", r.violations},
         {"max_violation", r.max_violation},
         {"seed", r.seed},
         {"verdict", to_string(r.verdict)},
         {"expected", to_string(r.expected)},
         {"threshold", r.threshold}};
  if (r.value) j["value"] = *r.value;
  if (!r.series.empty()) {
    Json pts = Json::array();
    for (const auto& p : r.series) pts.push_back(Json::array({p[0], p[1]}));
    j["series"] = Json{{"x", r.x_label}, {"y", r.y_label}, {"points", pts}};
  }
  return j;
}

PropertyReport report_from_json(const Json& j) {
  PropertyReport r;
  r.type = j.contains("type") ? text(j, "type") : "property";
  r.property = text(j, "property");
  if (j.contains("operator") && !j["operator"].is_null()) r.op = symmetrizer_from_json(j["operator"]);
  r.trials = static_cast<int>(number(j, "trials"));
  r.violations = static_cast<int>(number(j, "violations"));
  r.max_violation = number(j, "max_violation");
  const Json& seed = field(j, "seed");
  if (!seed.is_number_integer()) throw InvalidInput("seed must be an integer");
  r.seed = seed.get<std::uint64_t>();
  r.verdict = verdict_from(text(j, "verdict"));
  r.expected = j.contains("expected") ? verdict_from(text(j, "expected")) : Verdict::pass;
  if (j.contains("threshold")) r.threshold = number(j, "threshold");
  if (j.contains("value")) r.value = number(j, "value");
  if (j.contains("series")) {
    const Json& s = j["series"];
    r.x_label = text(s, "x");
    r.y_label = text(s, "y");
    const Json& pts = field(s, "points");
    if (!pts.is_array()) throw InvalidInput("series points must be an array");
    for (const auto& p : pts) {
      if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number()) {
        throw InvalidInput("series points must be [x, y] pairs");
      }
      r.series.push_back({p[0].get<double>(), p[1].get<double>()});
    }
  }
  return r;
}

Json reports_to_json(const std::vector<PropertyReport>& reports) {
  Json a = Json::array();
  for (const auto& r : reports) a.push_back(report_to_json(r));
  return a;
}

std::vector<PropertyReport> reports_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidInput("report file must hold a JSON array");
  std::vector<PropertyReport> out;
  for (const auto& r : j) out.push_back(report_from_json(r));
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::stringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("cannot read '" + path + "'");
  try {
    return Json::parse(buf.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput("'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << text;
  out.flush();
  if (!out) throw IoError("cannot write '" + path + "'");
}

}  // namespace csym
