#pragma once

// JSON certificates, one per CLI command. Every certificate embeds the
// graphs it makes claims about (graph6 plus hash), so verify_certificate can
// re-check it from the document alone. Layout: docs/certificates.md.

#include <string>
#include <vector>

#include "json.hpp"
#include "mrc/constructor.hpp"
#include "mrc/cyclotree.hpp"
#include "mrc/graph.hpp"
#include "mrc/oracle.hpp"

namespace mrc {

using Json = nlohmann::json;

inline constexpr const char* kCertificateFormat = "mrc-certificate/1";

/// {n, e, graph6, hash}.
Json graph_json(const Graph& g);
/// Inverse of graph_json. Throws PreconditionError when the hash, n or e
/// disagree with the graph6 string.
Graph graph_from_json(const Json& j);

Json check_certificate(const Graph& g, int r);
Json decompose_certificate(const Graph& g, int r);
Json reduce_certificate(const Graph& g);
Json minor_certificate(const Graph& g);
Json generate_certificate(const FamilySpec& spec);
Json enumerate_certificate(int n, int jobs = 1);
/// Cycles are given in their original labels.
Json embed_certificate(const std::vector<std::vector<int>>& cycles, int n, int jobs = 1);
Json separate_certificate(int l, int m);
Json oracle_certificate(const Graph& g, int r, const OracleOptions& options);

struct VerifyOutcome {
  std::string command;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Re-derives every claim of a certificate. Structural problems (unknown
/// command, missing fields, hash mismatch) throw PreconditionError; claims
/// that do not hold are collected in `failures`.
VerifyOutcome verify_certificate(const Json& cert, int jobs = 1);

Json verify_report(const VerifyOutcome& outcome);

}  // namespace mrc
