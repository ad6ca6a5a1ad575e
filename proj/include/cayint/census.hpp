#pragma once

// Exhaustive or sampled sweeps over connection sets, checking that the closed
// form criterion, the exact per-irrep spectrum and the numeric eigensolver
// agree on every mask.
//
// JSONL layout: a header line {"schema":1,"group":...,"kind":...,"seed":...}
// followed by one record per mask, in increasing mask order.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cayint/criteria.hpp"
#include "cayint/extension.hpp"

namespace cayint {

enum class MaskKind { all, undirected, directed };
const char* to_string(MaskKind kind);
/// Throws PreconditionError on anything but all | undirected | directed.
MaskKind parse_mask_kind(std::string_view text);

/// Number of masks of the given kind (saturates at UINT64_MAX).
std::uint64_t count_masks(const ExtGroup& group, MaskKind kind);

struct MaskPlan {
  std::vector<Mask> masks;  // increasing
  bool sampled = false;
  std::optional<std::uint64_t> seed;
};

/// Every mask of the kind when there are at most `limit`; otherwise
/// `sample_size` distinct masks drawn uniformly with the given seed (required).
MaskPlan enumerate_masks(const ExtGroup& group, MaskKind kind, std::uint64_t limit,
                         std::optional<std::uint64_t> seed = std::nullopt, std::uint64_t sample_size = 0);

struct CensusRecord {
  std::string group_spec;
  Mask mask = 0;
  SetKind kind = SetKind::undirected;
  bool verdict_criteria = false;
  bool verdict_exact = false;
  bool verdict_numeric = false;
  /// Sorted spectrum; integers where known exactly, nullopt otherwise.
  std::vector<std::optional<std::int64_t>> spectrum;
  std::int64_t elapsed_us = 0;
  /// Exact integral spectrum differs from the rounded numeric one.
  bool spectrum_mismatch = false;

  bool agree() const {
    return verdict_criteria == verdict_exact && verdict_exact == verdict_numeric && !spectrum_mismatch;
  }
};

struct CensusSummary {
  std::string group_spec;
  std::map<SetKind, std::uint64_t> totals;
  std::map<SetKind, std::uint64_t> integral;
  /// Up to 16 integral directed masks, increasing.
  std::vector<Mask> integral_directed;
  std::uint64_t disagreements = 0;
};

struct CensusOptions {
  int workers = 1;
  /// Check condition (2) on both members of every {pi, pi o f} orbit.
  bool paranoid = true;
  /// Record wall-clock microseconds per mask. Off keeps output byte-stable.
  bool timing = false;
};

struct CensusResult {
  std::vector<CensusRecord> records;
  CensusSummary summary;
  /// Records where the routes disagree.
  std::vector<CensusRecord> disagreements;
};

/// All three routes on one mask.
CensusRecord evaluate_mask(const CriteriaContext& ctx, Mask mask, const CensusOptions& options = {});

/// Evaluates the masks on `options.workers` threads; records come back in input order.
CensusResult run_census(const ExtGroup& group, const std::vector<Mask>& masks, const CensusOptions& options = {});

CensusSummary summarize(const std::string& group_spec, const std::vector<CensusRecord>& records);

nlohmann::ordered_json census_header(const ExtGroup& group, MaskKind kind, std::optional<std::uint64_t> seed);
nlohmann::ordered_json to_json(const CensusRecord& record);
/// Throws StructuralError on a record that does not match the schema.
CensusRecord record_from_json(const nlohmann::json& j);
nlohmann::ordered_json to_json(const CensusSummary& summary);

void write_jsonl(std::ostream& out, const nlohmann::ordered_json& header, const std::vector<CensusRecord>& records);

/// Group specs swept by `verify`.
std::vector<std::string> default_catalog();

}  // namespace cayint
