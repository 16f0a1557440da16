#include "atgp/instance_io.hpp"

#include <json.hpp>

namespace atgp {

namespace {

using ordered_json = nlohmann::ordered_json;

Rational rational_from_json(const ordered_json& v) {
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_number_unsigned()) return Rational(static_cast<long long>(v.get<std::uint64_t>()));
  if (v.is_number_float()) return Rational::from_double(v.get<double>());
  throw InvalidInstance("coordinate must be a number or an exact string");
}

Point point_from_json(const ordered_json& v) {
  if (!v.is_array() || v.size() != 2) throw InvalidInstance("point must be a [x, y] pair");
  return {rational_from_json(v[0]), rational_from_json(v[1])};
}

ordered_json point_to_json(const Point& p) {
  return ordered_json::array({p.x.to_string(), p.y.to_string()});
}

InstanceMetadata metadata_from_json(const ordered_json& j) {
  InstanceMetadata meta;
  if (j.contains("name") && j["name"].is_string()) meta.name = j["name"].get<std::string>();
  if (j.contains("seed") && j["seed"].is_number()) meta.seed = j["seed"].get<std::uint64_t>();
  return meta;
}

void metadata_to_json(ordered_json& j, const InstanceMetadata& meta) {
  if (!meta.name.empty()) j["name"] = meta.name;
  if (meta.seed) j["seed"] = *meta.seed;
}

}  // namespace

ParsedInput parse_instance_text(const std::string& json_text) {
  ordered_json j;
  try {
    j = ordered_json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInstance(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("format") || !j["format"].is_string())
    throw InvalidInstance("missing format tag");

  ParsedInput out;
  out.format = j["format"].get<std::string>();
  out.metadata = metadata_from_json(j);

  if (!j.contains("vertices") || !j["vertices"].is_array())
    throw InvalidInstance("missing vertices array");
  std::vector<Point> pts;
  for (const auto& v : j["vertices"]) pts.push_back(point_from_json(v));

  if (out.format == "atgp-v1") {
    if (!j.contains("altitude")) throw InvalidInstance("atgp-v1 requires an altitude");
    Instance inst{Terrain::from_vertices(std::move(pts)),
                  AltitudeLine{rational_from_json(j["altitude"])}};
    validate_instance(inst, AltitudeMode::kStrict);
    out.instance = std::move(inst);
  } else if (out.format == "polygon-v1") {
    out.polygon = PolygonRing{std::move(pts)};
  } else {
    throw InvalidInstance("unknown format '" + out.format + "'");
  }
  return out;
}

std::string serialize_instance(const Instance& instance, const InstanceMetadata& meta) {
  ordered_json j;
  j["format"] = "atgp-v1";
  metadata_to_json(j, meta);
  ordered_json verts = ordered_json::array();
  for (const auto& p : instance.terrain.vertices()) verts.push_back(point_to_json(p));
  j["vertices"] = std::move(verts);
  j["altitude"] = instance.altitude.y.to_string();
  return j.dump(2) + "\n";
}

std::string serialize_polygon(const PolygonRing& ring, const InstanceMetadata& meta) {
  ordered_json j;
  j["format"] = "polygon-v1";
  metadata_to_json(j, meta);
  ordered_json verts = ordered_json::array();
  for (const auto& p : ring.vertices) verts.push_back(point_to_json(p));
  j["vertices"] = std::move(verts);
  return j.dump(2) + "\n";
}

std::string serialize_solution(const Solution& solution, const Certificate& certificate,
                               const std::vector<Point>* polygon_guards) {
  ordered_json j;
  j["format"] = "atgp-solution-v1";
  ordered_json guards = ordered_json::array();
  for (const auto& g : solution.guards) guards.push_back(g.to_string());
  j["guards"] = std::move(guards);

  ordered_json ws = ordered_json::array();
  for (const auto& w : solution.witnesses) {
    ordered_json wj;
    wj["kind"] = w.kind == Witness::Kind::kVertex ? "vertex" : "eps_left";
    wj["edge"] = w.edge;
    wj["t"] = w.t.to_string();
    wj["realized_t"] = w.realized_t.to_string();
    wj["point"] = point_to_json(w.realized_point);
    ws.push_back(std::move(wj));
  }
  j["witnesses"] = std::move(ws);

  ordered_json cert;
  cert["counts_match"] = certificate.counts_match;
  cert["pairwise_disjoint"] = certificate.pairwise_disjoint;
  cert["coverage_ok"] = certificate.coverage_ok;
  cert["valid"] = certificate.valid();
  ordered_json ivs = ordered_json::array();
  for (const auto& iv : certificate.witness_intervals)
    ivs.push_back(ordered_json::array({iv.lo.to_string(), iv.hi.to_string()}));
  cert["witness_intervals"] = std::move(ivs);
  j["certificate"] = std::move(cert);

  j["trace_digest"] = solution.trace.digest();

  if (polygon_guards) {
    ordered_json pg = ordered_json::array();
    for (const auto& p : *polygon_guards) pg.push_back(point_to_json(p));
    j["polygon_guards"] = std::move(pg);
  }
  return j.dump(2) + "\n";
}

SolutionDocument parse_solution_text(const std::string& json_text) {
  ordered_json j;
  try {
    j = ordered_json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInstance(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object() || j.value("format", "") != "atgp-solution-v1")
    throw InvalidInstance("not an atgp-solution-v1 document");

  SolutionDocument out;
  for (const auto& g : j.at("guards")) out.guards.push_back(rational_from_json(g));
  for (const auto& wj : j.at("witnesses")) {
    Witness w;
    std::string kind = wj.at("kind").get<std::string>();
    if (kind == "vertex")
      w.kind = Witness::Kind::kVertex;
    else if (kind == "eps_left")
      w.kind = Witness::Kind::kEpsLeft;
    else
      throw InvalidInstance("unknown witness kind '" + kind + "'");
    w.edge = wj.at("edge").get<std::size_t>();
    w.t = rational_from_json(wj.at("t"));
    w.realized_t = rational_from_json(wj.at("realized_t"));
    w.realized_point = point_from_json(wj.at("point"));
    out.witnesses.push_back(std::move(w));
  }
  if (j.contains("certificate")) {
    const auto& c = j["certificate"];
    out.counts_match = c.value("counts_match", false);
    out.pairwise_disjoint = c.value("pairwise_disjoint", false);
    out.coverage_ok = c.value("coverage_ok", false);
    out.valid = c.value("valid", false);
  }
  out.trace_digest = j.value("trace_digest", "");
  if (j.contains("polygon_guards")) {
    for (const auto& p : j["polygon_guards"]) out.polygon_guards.push_back(point_from_json(p));
  }
  return out;
}

}  // namespace atgp
