#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "vflame/digraph.hpp"
#include "vflame/flame.hpp"
#include "vflame/oracle.hpp"

namespace vflame::io {

using Json = nlohmann::ordered_json;

enum class Format { kJson, kEdgeList };

// JSON: {"root": r, "vertices": [...], "edges": [[tail, head], ...]}.
// Edge list: a "root <id>" line, then one "<tail> <head>" line per edge or a
// lone "<id>" line for a vertex without edges; '#' starts a comment.
// Errors: kParseError (with line or offset); semantic errors come from
// build_digraph.
RootedDigraph parse(std::string_view text, Format format);
// Format from the file extension (.json or anything else), falling back on
// the first non-blank character.
Format detect_format(std::string_view path, std::string_view text);

// Canonical forms: sorted vertices and edges; parse(serialize(d)) == d.
std::string serialize(const RootedDigraph& d, Format format);
Json to_json(const RootedDigraph& d);
RootedDigraph digraph_from_json(const Json& j);

// Certificate: {"flame_edges": [[t, h], ...], "entries": [{"vertex": v,
// "separator": [...], "rv": bool, "paths": [[v0, ..., vk], ...]}, ...]}
// with entries in vertex order. The base digraph travels separately.
Json to_json(const FlameCertificate& cert);
FlameCertificate certificate_from_json(const Json& j, const RootedDigraph& base);

Json to_json(const CertificateReport& report, const RootedDigraph& d);

// Deleted edges (in D but not in the flame) are dashed; certificate paths get
// one color per entry from a fixed palette, in vertex order.
std::string to_dot(const RootedDigraph& d, const RootedDigraph* flame = nullptr,
                   const FlameCertificate* cert = nullptr);

struct RunReport {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::map<std::string, std::size_t> kappa;
  std::size_t edges_kept = 0;
  std::size_t edges_deleted = 0;
  std::size_t kappa_sum = 0;
  std::map<std::string, std::string> certificate;  // vertex -> "pass" or reasons
  std::map<std::string, double> timing_ms;
};

Json to_json(const RunReport& report);

// Lemma counterexample: the instance digraph plus a free-form note.
Json counterexample_json(const oracle::LemmaInstance& instance, const oracle::LemmaOutcome& outcome);

}  // namespace vflame::io
