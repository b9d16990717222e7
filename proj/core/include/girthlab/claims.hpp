#pragma once
// The structural claims the library is built to check, packaged as named
// runners shared by the command-line front end and the acceptance suite.
// Each runner builds its objects from scratch, measures, and judges;
// results carry both human-readable detail lines and key/value pairs for
// machine reports.

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace girthlab {

struct ClaimOptions {
  // Narrow a runner's built-in case list; irrelevant fields are ignored.
  std::optional<int> k;
  std::optional<std::string> q; // field spec, parse_field format
  std::optional<int> r;         // characteristic-2 extension degree
  std::optional<int> s;         // Frobenius parameter
  std::optional<std::vector<uint32_t>> ns;    // deletion sizes
  std::optional<std::vector<uint64_t>> seeds; // deletion seeds
  std::string c = "1/2";        // deletion rate coefficient
};

struct ClaimResult {
  ClaimResult() = default;
  explicit ClaimResult(std::string claim_id) : id(std::move(claim_id)) {}
  std::string id;
  bool pass = true;
  std::vector<std::string> lines; // per-case details, failures prefixed FAIL
  std::vector<std::pair<std::string, std::string>> values; // measured values
};

// Canonical claim ids in suite order:
//   counts, girth-bounds, iso-small-k, separation, suspension, two-links,
//   autos, arc-wenger, c6-free, c8-exists, deletion, oracles.
const std::vector<std::string>& claim_ids();

// Runs one claim; throws std::invalid_argument on an unknown id.
ClaimResult run_claim(const std::string& id, const ClaimOptions& opts = {});

} // namespace girthlab
