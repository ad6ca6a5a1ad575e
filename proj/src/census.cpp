#include "cayint/census.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <ostream>
#include <random>
#include <thread>
#include <unordered_set>

#include "cayint/errors.hpp"
#include "cayint/spectrum.hpp"

namespace cayint {

const char* to_string(MaskKind kind) {
  switch (kind) {
    case MaskKind::all:
      return "all";
    case MaskKind::undirected:
      return "undirected";
    case MaskKind::directed:
      return "directed";
  }
  return "?";
}

MaskKind parse_mask_kind(std::string_view text) {
  if (text == "all") return MaskKind::all;
  if (text == "undirected") return MaskKind::undirected;
  if (text == "directed") return MaskKind::directed;
  throw PreconditionError("unknown mask kind '" + std::string(text) + "' (expected all, undirected or directed)");
}

namespace {

// Inverse-closed classes of G\{1}: singletons {g = g^-1} and pairs {g, g^-1}, as bit masks.
struct InverseClasses {
  std::vector<Mask> singles;
  std::vector<std::pair<Mask, Mask>> pairs;
};

InverseClasses inverse_classes(const ExtGroup& group) {
  InverseClasses cls;
  for (int g = 1; g < group.order(); ++g) {
    const int h = group.inverse(g);
    if (h == g) {
      cls.singles.push_back(Mask{1} << (g - 1));
    } else if (g < h) {
      cls.pairs.emplace_back(Mask{1} << (g - 1), Mask{1} << (h - 1));
    }
  }
  return cls;
}

std::uint64_t saturating_pow(std::uint64_t base, std::size_t e) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (r > std::numeric_limits<std::uint64_t>::max() / base) return std::numeric_limits<std::uint64_t>::max();
    r *= base;
  }
  return r;
}

// Uniform integer in [0, n) by rejection on the raw engine output.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t r;
  do {
    r = rng();
  } while (r >= limit);
  return r % n;
}

}  // namespace

std::uint64_t count_masks(const ExtGroup& group, MaskKind kind) {
  const auto cls = inverse_classes(group);
  switch (kind) {
    case MaskKind::all:
      return saturating_pow(2, static_cast<std::size_t>(group.order() - 1));
    case MaskKind::undirected:
      return saturating_pow(2, cls.singles.size() + cls.pairs.size());
    case MaskKind::directed:
      return saturating_pow(3, cls.pairs.size());
  }
  return 0;
}

MaskPlan enumerate_masks(const ExtGroup& group, MaskKind kind, std::uint64_t limit, std::optional<std::uint64_t> seed,
                         std::uint64_t sample_size) {
  const auto cls = inverse_classes(group);
  const std::uint64_t total = count_masks(group, kind);
  MaskPlan plan;

  // Decode the n-th mask of the kind (mixed radix over classes).
  auto nth = [&](std::uint64_t idx) -> Mask {
    switch (kind) {
      case MaskKind::all:
        return idx;
      case MaskKind::undirected: {
        Mask m = 0;
        std::size_t bit = 0;
        for (auto s : cls.singles) m |= ((idx >> bit++) & 1U) ? s : 0;
        for (auto [g, h] : cls.pairs) m |= ((idx >> bit++) & 1U) ? (g | h) : 0;
        return m;
      }
      case MaskKind::directed: {
        Mask m = 0;
        for (auto [g, h] : cls.pairs) {
          const auto d = idx % 3;
          idx /= 3;
          m |= d == 1 ? g : d == 2 ? h : 0;
        }
        return m;
      }
    }
    return 0;
  };

  if (total <= limit) {
    plan.masks.reserve(total);
    for (std::uint64_t i = 0; i < total; ++i) plan.masks.push_back(nth(i));
    std::sort(plan.masks.begin(), plan.masks.end());
    return plan;
  }

  if (!seed) {
    throw PreconditionError(std::to_string(total) + " " + to_string(kind) + " masks exceed the limit " +
                            std::to_string(limit) + "; a sampling seed is required");
  }
  plan.sampled = true;
  plan.seed = seed;
  const std::uint64_t want = std::min(total, sample_size == 0 ? limit : sample_size);
  std::mt19937_64 rng(*seed);
  std::unordered_set<Mask> chosen;
  while (chosen.size() < want) {
    Mask m = 0;
    switch (kind) {
      case MaskKind::all:
        m = uniform_below(rng, total);
        break;
      case MaskKind::undirected:
        for (auto s : cls.singles) m |= uniform_below(rng, 2) ? s : 0;
        for (auto [g, h] : cls.pairs) m |= uniform_below(rng, 2) ? (g | h) : 0;
        break;
      case MaskKind::directed:
        for (auto [g, h] : cls.pairs) {
          const auto d = uniform_below(rng, 3);
          m |= d == 1 ? g : d == 2 ? h : 0;
        }
        break;
    }
    chosen.insert(m);
  }
  plan.masks.assign(chosen.begin(), chosen.end());
  std::sort(plan.masks.begin(), plan.masks.end());
  return plan;
}

// ---------------------------------------------------------------------------

CensusRecord evaluate_mask(const CriteriaContext& ctx, Mask mask, const CensusOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const auto& group = ctx.group();
  const auto cs = split_connection_set(group, mask);

  CensusRecord rec;
  rec.group_spec = group.spec();
  rec.mask = mask;
  rec.kind = kind_of(cs);
  rec.verdict_criteria = check_main(ctx, cs, options.paranoid).overall;

  const auto exact = exact_spectrum(group, cs, ctx.reps());
  rec.verdict_exact = exact.integral;
  rec.spectrum = exact.exact;

  const auto numeric = numeric_spectrum(adjacency(group, cs));
  rec.verdict_numeric = is_integral_numeric(numeric);

  if (exact.integral && rec.verdict_numeric) {
    for (std::size_t k = 0; k < numeric.size(); ++k) {
      if (std::llround(numeric[k]) != *exact.exact[k]) rec.spectrum_mismatch = true;
    }
  }
  if (options.timing) {
    rec.elapsed_us = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start).count();
  }
  return rec;
}

CensusResult run_census(const ExtGroup& group, const std::vector<Mask>& masks, const CensusOptions& options) {
  const CriteriaContext ctx(group);
  CensusResult result;
  result.records.resize(masks.size());

  const int workers = std::max(1, std::min<int>(options.workers, static_cast<int>(std::max<std::size_t>(1, masks.size()))));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k = next++; k < masks.size(); k = next++) result.records[k] = evaluate_mask(ctx, masks[k], options);
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  for (const auto& r : result.records) {
    if (!r.agree()) result.disagreements.push_back(r);
  }
  result.summary = summarize(group.spec(), result.records);
  return result;
}

CensusSummary summarize(const std::string& group_spec, const std::vector<CensusRecord>& records) {
  CensusSummary s;
  s.group_spec = group_spec;
  for (auto kind : {SetKind::undirected, SetKind::directed, SetKind::mixed}) {
    s.totals[kind] = 0;
    s.integral[kind] = 0;
  }
  for (const auto& r : records) {
    ++s.totals[r.kind];
    if (r.verdict_exact) ++s.integral[r.kind];
    if (r.verdict_exact && r.kind == SetKind::directed && s.integral_directed.size() < 16) s.integral_directed.push_back(r.mask);
    if (!r.agree()) ++s.disagreements;
  }
  return s;
}

// ---------------------------------------------------------------------------

nlohmann::ordered_json census_header(const ExtGroup& group, MaskKind kind, std::optional<std::uint64_t> seed) {
  nlohmann::ordered_json h;
  h["schema"] = 1;
  h["group"] = group.spec();
  h["kind"] = to_string(kind);
  h["seed"] = seed ? nlohmann::ordered_json(*seed) : nlohmann::ordered_json(nullptr);
  return h;
}

nlohmann::ordered_json to_json(const CensusRecord& r) {
  nlohmann::ordered_json j;
  j["group_spec"] = r.group_spec;
  j["mask"] = r.mask;
  j["kind"] = to_string(r.kind);
  j["verdict_criteria"] = r.verdict_criteria;
  j["verdict_exact"] = r.verdict_exact;
  j["verdict_numeric"] = r.verdict_numeric;
  auto spec = nlohmann::ordered_json::array();
  for (const auto& v : r.spectrum) spec.push_back(v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr));
  j["spectrum"] = std::move(spec);
  j["elapsed_us"] = r.elapsed_us;
  return j;
}

CensusRecord record_from_json(const nlohmann::json& j) {
  static const std::vector<std::string> kFields = {"group_spec",    "mask",     "kind",      "verdict_criteria",
                                                   "verdict_exact", "verdict_numeric", "spectrum", "elapsed_us"};
  if (!j.is_object() || j.size() != kFields.size()) throw StructuralError("census record has the wrong field set");
  for (const auto& f : kFields) {
    if (!j.contains(f)) throw StructuralError("census record lacks field '" + f + "'");
  }
  try {
    CensusRecord r;
    r.group_spec = j.at("group_spec").get<std::string>();
    r.mask = j.at("mask").get<Mask>();
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "undirected") {
      r.kind = SetKind::undirected;
    } else if (kind == "directed") {
      r.kind = SetKind::directed;
    } else if (kind == "mixed") {
      r.kind = SetKind::mixed;
    } else {
      throw StructuralError("census record has unknown kind '" + kind + "'");
    }
    r.verdict_criteria = j.at("verdict_criteria").get<bool>();
    r.verdict_exact = j.at("verdict_exact").get<bool>();
    r.verdict_numeric = j.at("verdict_numeric").get<bool>();
    for (const auto& v : j.at("spectrum")) {
      r.spectrum.push_back(v.is_null() ? std::nullopt : std::optional<std::int64_t>(v.get<std::int64_t>()));
    }
    r.elapsed_us = j.at("elapsed_us").get<std::int64_t>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw StructuralError(std::string("census record: ") + e.what());
  }
}

nlohmann::ordered_json to_json(const CensusSummary& s) {
  nlohmann::ordered_json j;
  j["group"] = s.group_spec;
  for (const char* key : {"totals", "integral"}) {
    const auto& counts = std::string(key) == "totals" ? s.totals : s.integral;
    nlohmann::ordered_json c;
    for (const auto& [kind, n] : counts) c[to_string(kind)] = n;
    j[key] = std::move(c);
  }
  j["integral_directed_masks"] = s.integral_directed;
  j["disagreements"] = s.disagreements;
  return j;
}

void write_jsonl(std::ostream& out, const nlohmann::ordered_json& header, const std::vector<CensusRecord>& records) {
  out << header.dump() << '\n';
  for (const auto& r : records) out << to_json(r).dump() << '\n';
}

std::vector<std::string> default_catalog() {
  return {"dihedral(6)",   "dihedral(8)",      "dihedral(10)",    "dihedral(12)",
          "dicyclic(4;2)", "dicyclic(2x4;0,2)", "semidihedral(8)", "modular(8)"};
}

}  // namespace cayint
