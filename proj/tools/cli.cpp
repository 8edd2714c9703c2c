#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <iostream>
#include <iterator>
#include <numbers>
#include <set>
#include <sstream>

#include "minktrig/error.hpp"
#include "minktrig/polar.hpp"
#include "minktrig/samplers.hpp"
#include "minktrig/trig_laws.hpp"

namespace minktrig::cli {

using nlohmann::json;

namespace {

/// Input problems that are the caller's fault rather than geometry.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string format_double(double x) {
  if (std::isnan(x)) return "null";
  if (std::isinf(x)) return x > 0 ? "\"inf\"" : "\"-inf\"";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void dump_to(const json& j, std::string& out, int depth) {
  const std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
  const std::string close_pad(static_cast<std::size_t>(2 * depth), ' ');
  switch (j.type()) {
    case json::value_t::number_float: out += format_double(j.get<double>()); return;
    case json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      // Short numeric arrays (coordinates, residual triples) stay on one line.
      const bool flat = std::all_of(j.begin(), j.end(), [](const json& x) { return x.is_primitive(); });
      out += flat ? "[" : "[\n";
      bool first = true;
      for (const json& x : j) {
        if (!first) out += flat ? ", " : ",\n";
        first = false;
        if (!flat) out += pad;
        dump_to(x, out, depth + 1);
      }
      out += flat ? "]" : "\n" + close_pad + "]";
      return;
    }
    case json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += pad + json(it.key()).dump() + ": ";
        dump_to(it.value(), out, depth + 1);
      }
      out += "\n" + close_pad + "}";
      return;
    }
    default: out += j.dump(); return;
  }
}

json length_json(ExtDistance d) {
  if (d.is_infinite()) return "inf";
  return d.value();
}

json vec_json(const MVec3& x) { return json::array({x.x1, x.x2, x.x3}); }

template <class T, std::size_t N>
json array_json(const std::array<T, N>& a) {
  json out = json::array();
  for (const T& x : a) out.push_back(x);
  return out;
}

template <class T>
json optional_json(const std::optional<T>& x) {
  return x ? json(*x) : json(nullptr);
}

json read_input(std::istream& in) {
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

void check_envelope(const json& j, const std::set<std::string>& allowed, const Options& opt) {
  if (!j.is_object()) throw InputError("input must be a JSON object");
  if (j.contains("schema") && j["schema"] != kSchema)
    throw InputError("unsupported schema " + j["schema"].dump());
  if (!opt.strict) return;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it.key() != "schema" && !allowed.contains(it.key()))
      throw InputError("unknown field \"" + it.key() + "\"");
  }
}

MVec3 parse_vec(const json& j, const std::string& what) {
  if (!j.is_array() || j.size() != 3 ||
      !std::all_of(j.begin(), j.end(), [](const json& x) { return x.is_number(); })) {
    throw InputError(what + " must be an array of 3 numbers");
  }
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

Triangle parse_triangle(const json& j, const Options& opt) {
  check_envelope(j, {"vertices"}, opt);
  if (!j.contains("vertices") || !j["vertices"].is_array() || j["vertices"].size() != 3)
    throw InputError("\"vertices\" must be an array of 3 points");
  const json& v = j["vertices"];
  return Triangle::from_coords(parse_vec(v[0], "vertex 0"), parse_vec(v[1], "vertex 1"),
                               parse_vec(v[2], "vertex 2"));
}

json envelope() { return json{{"schema", kSchema}}; }

void emit(std::ostream& out, const json& j) { out << dump(j) << "\n"; }

int report_error(std::ostream& err, std::string_view code, const std::string& message, int exit) {
  emit(err, json{{"error", code}, {"message", message}});
  return exit;
}

bool is_input_error(ErrorCode c) {
  return c == ErrorCode::InvalidArgument || c == ErrorCode::OffSurface ||
         c == ErrorCode::DuplicateVertices;
}

/// Runs a command body, mapping exceptions to the documented exit codes.
template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const InputError& e) {
    return report_error(err, "InvalidInput", e.what(), kInputError);
  } catch (const Error& e) {
    return report_error(err, to_string(e.code()), e.what(),
                        is_input_error(e.code()) ? kInputError : kDomainError);
  } catch (const json::exception& e) {
    return report_error(err, "InvalidInput", e.what(), kInputError);
  }
}

json inequality_json(const InequalityReport& r) {
  json lengths = json::array();
  for (ExtDistance d : r.lengths) lengths.push_back(length_json(d));
  return json{{"holds", r.holds}, {"predicted", optional_json(r.predicted)}, {"lengths", lengths}};
}

json class_json(const Triangle& t, const TriangleClass& c) {
  json j = envelope();
  j["family"] = to_string(c.family);
  j["proper_kind"] = c.proper_kind ? json(to_string(*c.proper_kind)) : json(nullptr);
  json comps = json::array();
  for (Component x : c.components) comps.push_back(to_string(x));
  j["components"] = comps;
  j["degenerate"] = c.degenerate;
  j["opposite_vertices"] = c.opposite_vertices;
  json impossible = json::array();
  for (SideLabel s : c.impossible_sides) impossible.push_back(to_string(s));
  j["impossible_sides"] = impossible;
  json sides = json::array();
  for (const SideReport& s : c.sides) {
    sides.push_back(json{{"label", to_string(s.label)},
                         {"kind", to_string(s.kind)},
                         {"length", length_json(s.length)},
                         {"plane", s.plane ? json(to_string(*s.plane)) : json(nullptr)},
                         {"strange", s.strange},
                         {"close_call", s.close_call}});
  }
  j["sides"] = sides;
  if (c.proper_kind == ProperKind::SpatiolateralContractible ||
      c.proper_kind == ProperKind::SpatiolateralNonContractible) {
    j["contractible"] = c.proper_kind == ProperKind::SpatiolateralContractible;
    j["winding_number"] = winding_number(t);
  }
  j["triangle_inequality"] = inequality_json(triangle_inequality_report(t));
  return j;
}

struct VerifyOutcome {
  json report;
  double max_residual = 0.0;
  bool passed = false;
};

VerifyOutcome verify_one(const Triangle& t, const Options& opt) {
  const TrigReport r = evaluate(t);
  const TriangleMeasurements& m = r.measurements;
  VerifyOutcome out;
  out.max_residual = r.max_residual();
  bool theorems_ok = true;

  json j;
  j["family"] = to_string(m.family);
  j["permutation"] = array_json(m.permutation);
  j["sides"] = array_json(m.sides);
  json kinds = json::array();
  for (SegmentKind k : m.side_kinds) kinds.push_back(to_string(k));
  j["side_kinds"] = kinds;
  j["angles"] = array_json(m.angles);
  j["angle_signs"] = array_json(m.angle_signs);
  j["apex"] = optional_json(m.apex);
  j["polar_anchor"] = m.polar_anchor ? json(to_string(*m.polar_anchor)) : json(nullptr);
  j["lcs_residuals"] = array_json(r.lcs_residuals);
  j["lca_residuals"] = array_json(r.lca_residuals);
  j["sines_ratios"] = array_json(r.sines_ratios);
  j["sines_residual"] = r.sines_residual;
  j["max_residual"] = out.max_residual;
  j["angle_sum"] = optional_json(r.angle_sum);
  if (r.angle_sum) {
    const bool below = *r.angle_sum < std::numbers::pi;
    j["angle_sum_below_pi"] = below;
    theorems_ok = theorems_ok && below;
  }
  j["side_sum"] = optional_json(r.side_sum);
  if (r.side_sum) {
    const bool contractible = is_contractible(t);
    const bool above = *r.side_sum > 2.0 * std::numbers::pi;
    j["contractible"] = contractible;
    j["side_sum_above_2pi"] = above;
    theorems_ok = theorems_ok && (above == !contractible);
  }
  const InequalityReport ineq = triangle_inequality_report(t);
  j["triangle_inequality"] = inequality_json(ineq);
  if (ineq.predicted) theorems_ok = theorems_ok && *ineq.predicted == ineq.holds;

  out.passed = theorems_ok && out.max_residual <= opt.tolerance;
  j["passed"] = out.passed;
  out.report = std::move(j);
  return out;
}

bool is_law_family(SampleFamily f) {
  switch (f) {
    case SampleFamily::Hyperbolic:
    case SampleFamily::AntipodalHyperbolic:
    case SampleFamily::SpatiolateralContractible:
    case SampleFamily::SpatiolateralNonContractible:
    case SampleFamily::Tempolateral: return true;
    default: return false;
  }
}

SampleFamily require_family(const std::string& name) {
  const auto f = parse_sample_family(name);
  if (!f) throw InputError("unknown family \"" + name + "\"");
  return *f;
}

json triangle_json(const Triangle& t) {
  return json{{"vertices", json::array({vec_json(t.A().coords()), vec_json(t.B().coords()),
                                        vec_json(t.C().coords())})}};
}

}  // namespace

std::string dump(const json& j) {
  std::string out;
  dump_to(j, out, 0);
  return out;
}

int cmd_classify(std::istream& in, std::ostream& out, std::ostream& err, const Options& opt) {
  return guarded(err, [&] {
    const Triangle t = parse_triangle(read_input(in), opt);
    emit(out, class_json(t, classify_triangle(t)));
    return kOk;
  });
}

int cmd_polar(std::istream& in, std::ostream& out, std::ostream& err, const Options& opt) {
  return guarded(err, [&] {
    const Triangle t = parse_triangle(read_input(in), opt);
    json j = envelope();
    const PolarExistence ex = polar_exists(t);
    if (!ex) {
      j["nonexistent"] = to_string(*ex.reason);
      j["side"] = to_string(*ex.side);
      emit(out, j);
      return report_error(err, "PolarNonExistent",
                          "polar triangle does not exist: " + std::string(to_string(*ex.reason)),
                          kDomainError);
    }
    const PolarResult p = polar_triangle(t);
    j["epsilon"] = p.epsilon;
    if (p.status == PolarStatus::ZeroTriangle) {
      j["zero_triangle"] = true;
    } else {
      j["vertices"] = json::array({vec_json(p.vertices[0]), vec_json(p.vertices[1]),
                                   vec_json(p.vertices[2])});
      json comps = json::array();
      for (const MVec3& v : p.vertices) comps.push_back(to_string(surface_point(v).component()));
      j["components"] = comps;
    }
    emit(out, j);
    return static_cast<int>(kOk);
  });
}

int cmd_verify(std::istream& in, std::ostream& out, std::ostream& err, const Options& opt,
               const std::optional<VerifySampling>& sampling) {
  return guarded(err, [&] {
    std::vector<Triangle> triangles;
    if (sampling) {
      const SampleFamily f = require_family(sampling->family);
      if (!is_law_family(f))
        throw InputError("verify supports hyperbolic, antipodal_hyperbolic, spatiolateral_* and "
                         "tempolateral samples");
      if (sampling->count < 1) throw InputError("sample count must be at least 1");
      SampleSpec spec;
      spec.family = f;
      spec.count = sampling->count;
      spec.seed = sampling->seed;
      triangles = sample_triangles(spec).triangles;
    } else {
      triangles.push_back(parse_triangle(read_input(in), opt));
    }

    json reports = json::array();
    double max_residual = 0.0;
    int failures = 0;
    for (const Triangle& t : triangles) {
      VerifyOutcome v = verify_one(t, opt);
      max_residual = std::max(max_residual, v.max_residual);
      if (!v.passed) ++failures;
      reports.push_back(std::move(v.report));
    }
    json j = envelope();
    j["reports"] = std::move(reports);
    j["summary"] = json{{"count", static_cast<int>(triangles.size())},
                        {"max_residual", max_residual},
                        {"failures", failures},
                        {"tolerance", opt.tolerance}};
    emit(out, j);
    if (failures > 0 && opt.strict) return static_cast<int>(kVerificationFailure);
    return static_cast<int>(kOk);
  });
}

int cmd_export_geodesic(std::istream& in, std::ostream& out, std::ostream& err,
                        const Options& opt, int samples) {
  return guarded(err, [&] {
    if (samples < 2) throw InputError("--samples must be at least 2");
    const json j = read_input(in);
    check_envelope(j, {"a", "b"}, opt);
    if (!j.contains("a") || !j.contains("b")) throw InputError("need endpoints \"a\" and \"b\"");
    const SurfacePoint a = surface_point(parse_vec(j["a"], "a"));
    const SurfacePoint b = surface_point(parse_vec(j["b"], "b"));
    const GeodesicSegment seg(a, b);

    std::ostringstream csv;
    csv << "x1,x2,x3,t\n";
    for (int k = 0; k < samples; ++k) {
      const double t = k == samples - 1 ? seg.end() : seg.end() * k / (samples - 1);
      MVec3 x = seg.at(t);
      if (k == 0) x = a.coords();
      if (k == samples - 1) x = b.coords();
      csv << format_double(x.x1) << ',' << format_double(x.x2) << ',' << format_double(x.x3)
          << ',' << format_double(t) << '\n';
    }
    out << csv.str();
    return static_cast<int>(kOk);
  });
}

int cmd_sample(std::ostream& out, std::ostream& err, const Options&,
               const VerifySampling& sampling) {
  return guarded(err, [&] {
    if (sampling.count < 1) throw InputError("--count must be at least 1");
    SampleSpec spec;
    spec.family = require_family(sampling.family);
    spec.count = sampling.count;
    spec.seed = sampling.seed;
    const SampleBatch batch = sample_triangles(spec);
    json tris = json::array();
    for (const Triangle& t : batch.triangles) tris.push_back(triangle_json(t));
    json j = envelope();
    j["family"] = to_string(spec.family);
    j["seed"] = spec.seed;
    j["attempts"] = batch.attempts;
    j["acceptance_rate"] = batch.acceptance_rate();
    j["triangles"] = std::move(tris);
    emit(out, j);
    return static_cast<int>(kOk);
  });
}

}  // namespace minktrig::cli
