#include "mstd/search.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <stdexcept>

#include "mstd/literal.hpp"
#include "mstd/parallel.hpp"

namespace mstd {

SizeBounds SearchConfig::size_bounds() const {
  SizeBounds b;
  if (size_min) b.min = *size_min;
  if (size_max) b.max = *size_max;
  return b;
}

void SearchConfig::validate() const {
  if (diameter_min < 0 || diameter_min > diameter_max)
    throw std::domain_error("need 0 <= diameter_min <= diameter_max");
  if (diameter_max > kMaxEnumerationDiameter)
    throw std::domain_error("diameter_max must be at most 63");
  if (size_min && *size_min < 1) throw std::domain_error("size_min must be at least 1");
  if (size_min && size_max && *size_min > *size_max)
    throw std::domain_error("size_min must not exceed size_max");
  if (workers < 1) throw std::domain_error("workers must be positive");
}

EnumerationCounts enumerate_normalized(const SearchConfig& config,
                                       const std::function<void(const CanonicalSet&)>& visitor) {
  config.validate();
  EnumerationCounts counts;
  for (const Partition& part : make_partitions(config.diameter_min, config.diameter_max)) {
    walk_partition(part, config.size_bounds(), [&](std::uint64_t mask, int size) {
      ++counts.raw;
      if (!is_canonical_mask(mask, part.diameter)) return;
      ++counts.visited;
      visitor(CanonicalSet{mask, part.diameter, size});
    });
  }
  return counts;
}

namespace {

struct PartitionTally {
  std::uint64_t raw = 0;
  std::uint64_t examined = 0;
  std::uint64_t pruned = 0;
  std::uint64_t sum_dominant = 0;
  std::optional<int> min_size;
  std::vector<IntSet> witnesses;  // sum-dominant sets of size min_size
};

PartitionTally run_partition(const Partition& part, const SearchConfig& config) {
  PartitionTally t;
  walk_partition(part, config.size_bounds(), [&](std::uint64_t mask, int size) {
    ++t.raw;
    if (!is_canonical_mask(mask, part.diameter)) return;
    ++t.examined;
    if (config.prune_symmetric && mask == kernel::mask_reflect(mask, part.diameter)) {
      ++t.pruned;
      return;
    }
    if (config.prune_ap_plus_two && kernel::mask_is_ap_plus_two(mask)) {
      ++t.pruned;
      return;
    }
    const kernel::Counts c = kernel::mask_counts(mask);
    if (c.sum_size <= c.diff_size) return;
    ++t.sum_dominant;
    if (!t.min_size || size < *t.min_size) {
      t.min_size = size;
      t.witnesses.clear();
    }
    if (size == *t.min_size) t.witnesses.push_back(IntSet::from_mask(mask));
  });
  return t;
}

// --- checkpoint file -------------------------------------------------------
// Line-delimited JSON: a header naming the configuration, then one record per
// completed partition.

Json config_json(const SearchConfig& c) {
  Json j;
  j["diameter_min"] = c.diameter_min;
  j["diameter_max"] = c.diameter_max;
  j["size_min"] = c.size_min ? Json(*c.size_min) : Json(nullptr);
  j["size_max"] = c.size_max ? Json(*c.size_max) : Json(nullptr);
  j["prune_ap_plus_two"] = c.prune_ap_plus_two;
  j["prune_symmetric"] = c.prune_symmetric;
  return j;
}

Json tally_json(const PartitionTally& t) {
  Json j;
  j["raw"] = t.raw;
  j["examined"] = t.examined;
  j["pruned"] = t.pruned;
  j["sum_dominant"] = t.sum_dominant;
  j["min_size"] = t.min_size ? Json(*t.min_size) : Json(nullptr);
  Json w = Json::array();
  for (const IntSet& s : t.witnesses) w.push_back(format_set(s));
  j["witnesses"] = std::move(w);
  return j;
}

PartitionTally tally_from_json(const Json& j) {
  PartitionTally t;
  t.raw = j.at("raw").get<std::uint64_t>();
  t.examined = j.at("examined").get<std::uint64_t>();
  t.pruned = j.at("pruned").get<std::uint64_t>();
  t.sum_dominant = j.at("sum_dominant").get<std::uint64_t>();
  if (!j.at("min_size").is_null()) t.min_size = j.at("min_size").get<int>();
  for (const auto& w : j.at("witnesses")) t.witnesses.push_back(parse_int_set(w.get<std::string>()));
  return t;
}

class Checkpoint {
 public:
  Checkpoint(const std::string& path, const SearchConfig& config,
             const std::vector<Partition>& parts)
      : path_(path) {
    const Json header = {{"kind", "mstd-search-checkpoint"}, {"config", config_json(config)}};
    if (std::filesystem::exists(path_)) load(header, parts);
    // Rewrite so that a torn trailing line from an interrupted run is dropped.
    out_.open(path_, std::ios::trunc);
    if (!out_) throw std::runtime_error("cannot write checkpoint " + path_);
    out_ << header.dump() << '\n';
    for (const auto& [id, line] : lines_) out_ << line << '\n';
    out_.flush();
  }

  const std::map<std::uint64_t, PartitionTally>& completed() const { return done_; }

  void record(const Partition& part, const PartitionTally& t) {
    const Json rec = {{"partition_id", part.id}, {"diameter", part.diameter},
                      {"tallies", tally_json(t)}};
    out_ << rec.dump() << '\n';
    out_.flush();
  }

 private:
  void load(const Json& header, const std::vector<Partition>& parts) {
    std::ifstream in(path_);
    std::string line;
    if (!std::getline(in, line)) return;
    const Json found = Json::parse(line, nullptr, false);
    if (found.is_discarded() || found != header)
      throw std::runtime_error("checkpoint " + path_ + " was written for a different search");
    while (std::getline(in, line)) {
      const Json rec = Json::parse(line, nullptr, false);
      if (rec.is_discarded()) break;
      try {
        const auto id = rec.at("partition_id").get<std::uint64_t>();
        if (id >= parts.size() || rec.at("diameter").get<int>() != parts[id].diameter) break;
        done_[id] = tally_from_json(rec.at("tallies"));
        lines_[id] = line;
      } catch (const std::exception&) {
        break;
      }
    }
  }

  std::string path_;
  std::ofstream out_;
  std::map<std::uint64_t, PartitionTally> done_;
  std::map<std::uint64_t, std::string> lines_;
};

}  // namespace

SearchResult find_min_mstd(const SearchConfig& config) {
  config.validate();
  const std::vector<Partition> parts = make_partitions(config.diameter_min, config.diameter_max);

  std::optional<Checkpoint> checkpoint;
  if (config.checkpoint_path) checkpoint.emplace(*config.checkpoint_path, config, parts);

  std::vector<std::size_t> pending;
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (!checkpoint || !checkpoint->completed().contains(i)) pending.push_back(i);

  std::vector<PartitionTally> computed = parallel_map(
      pending.size(), config.workers,
      [&](std::size_t k) { return run_partition(parts[pending[k]], config); },
      [&](std::size_t k, const PartitionTally& t) {
        if (checkpoint) checkpoint->record(parts[pending[k]], t);
      });

  std::vector<const PartitionTally*> tallies(parts.size(), nullptr);
  for (std::size_t k = 0; k < pending.size(); ++k) tallies[pending[k]] = &computed[k];
  if (checkpoint)
    for (const auto& [id, t] : checkpoint->completed()) tallies[id] = &t;

  SearchResult result;
  result.config = config;
  result.partitions_resumed = parts.size() - pending.size();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const PartitionTally& t = *tallies[i];
    if (result.per_diameter.empty() || result.per_diameter.back().diameter != parts[i].diameter)
      result.per_diameter.push_back({parts[i].diameter, 0, 0, 0, 0});
    DiameterTally& d = result.per_diameter.back();
    d.raw += t.raw;
    d.examined += t.examined;
    d.pruned += t.pruned;
    d.sum_dominant += t.sum_dominant;
    result.sets_examined += t.examined;
    result.sets_pruned += t.pruned;
    if (!t.min_size) continue;
    if (!result.min_mstd_size || *t.min_size < *result.min_mstd_size) {
      result.min_mstd_size = t.min_size;
      result.witnesses.clear();
    }
    if (*t.min_size == *result.min_mstd_size)
      result.witnesses.insert(result.witnesses.end(), t.witnesses.begin(), t.witnesses.end());
  }
  std::sort(result.witnesses.begin(), result.witnesses.end());
  for (const IntSet& w : result.witnesses) {
    SetProfile p = profile(w);
    if (p.set_class != SetClass::SumDominant || reflect_canonical(w) != w)
      throw std::logic_error("search witness " + format_set(w) + " failed re-classification");
    result.witness_profiles.push_back(std::move(p));
  }
  return result;
}

Json to_json(const SearchResult& r) {
  Json j = config_json(r.config);
  j["min_mstd_size"] = r.min_mstd_size ? Json(*r.min_mstd_size) : Json(nullptr);
  Json witnesses = Json::array();
  for (const IntSet& w : r.witnesses) witnesses.push_back(format_set(w));
  j["witnesses"] = std::move(witnesses);
  Json profiles = Json::array();
  for (const SetProfile& p : r.witness_profiles) profiles.push_back(to_json(p));
  j["witness_profiles"] = std::move(profiles);
  j["sets_examined"] = r.sets_examined;
  j["sets_pruned"] = r.sets_pruned;
  Json per = Json::array();
  for (const DiameterTally& d : r.per_diameter) {
    Json row;
    row["diameter"] = d.diameter;
    row["raw"] = d.raw;
    row["examined"] = d.examined;
    row["pruned"] = d.pruned;
    row["sum_dominant"] = d.sum_dominant;
    per.push_back(std::move(row));
  }
  j["per_diameter"] = std::move(per);
  return j;
}

}  // namespace mstd
