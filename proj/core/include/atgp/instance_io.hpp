#pragma once

#include <optional>
#include <string>

#include "atgp/adapters.hpp"
#include "atgp/solver.hpp"

namespace atgp {

struct InstanceMetadata {
  std::string name;  // empty = absent
  std::optional<std::uint64_t> seed;
};

/// Parsed "atgp-v1" or "polygon-v1" document. Exactly one of instance /
/// polygon is set.
struct ParsedInput {
  std::string format;
  std::optional<Instance> instance;
  std::optional<PolygonRing> polygon;
  InstanceMetadata metadata;
};

/// Coordinates may be JSON integers, exact decimal/rational strings
/// ("2.5", "-7/3"), or floats (converted from their exact binary value).
/// Throws InvalidInstance on malformed or invalid input.
ParsedInput parse_instance_text(const std::string& json_text);

std::string serialize_instance(const Instance& instance, const InstanceMetadata& meta = {});
std::string serialize_polygon(const PolygonRing& ring, const InstanceMetadata& meta = {});

struct SolutionDocument {
  std::vector<Rational> guards;
  std::vector<Witness> witnesses;
  bool counts_match = false;
  bool pairwise_disjoint = false;
  bool coverage_ok = false;
  bool valid = false;
  std::string trace_digest;
  std::vector<Point> polygon_guards;
};

/// Rational coordinates round-trip bit-exactly; re-certifying a parsed
/// document reproduces the embedded flags.
std::string serialize_solution(const Solution& solution, const Certificate& certificate,
                               const std::vector<Point>* polygon_guards = nullptr);
SolutionDocument parse_solution_text(const std::string& json_text);

}  // namespace atgp
