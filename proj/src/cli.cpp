#include "mstd/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <map>

#include "mstd/json_io.hpp"
#include "mstd/literal.hpp"
#include "mstd/parallel.hpp"
#include "mstd/search.hpp"
#include "mstd/setcore.hpp"
#include "mstd/structure.hpp"
#include "mstd/verify.hpp"

namespace mstd::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitFailure = 3;

const std::vector<std::string> kCheckNames = {
    "small-cardinality", "thm1",          "ap-plus-two",         "insertion-excess",
    "insertion-delta",   "pair-counts",   "cardinality-bounds",  "symmetric-balanced",
    "growth-criterion",  "five-element-witnesses"};
const std::vector<std::string> kExplorerNames = {"two-ap-unions", "min-additions"};

struct Globals {
  bool json = false;
  bool no_timing = false;
  unsigned workers = default_workers();
  std::uint64_t seed = kDefaultSeed;
  std::string checkpoint;
};

std::string join(const std::vector<std::string>& names) {
  std::string s;
  for (const auto& n : names) s += (s.empty() ? "" : ", ") + n;
  return s;
}

// Rejects an unknown name right after `verify` / `explore` with the valid list.
std::optional<std::string> unknown_name(const std::vector<std::string>& args) {
  for (std::size_t i = 0; i + 1 < args.size(); ++i) {
    const std::vector<std::string>* names = nullptr;
    if (args[i] == "verify") names = &kCheckNames;
    if (args[i] == "explore") names = &kExplorerNames;
    if (!names) continue;
    const std::string& next = args[i + 1];
    if (next.empty() || next[0] == '-') return std::nullopt;
    if (std::find(names->begin(), names->end(), next) == names->end())
      return "unknown " + std::string(names == &kCheckNames ? "check" : "explorer") + " '" +
             next + "'; valid names: " + join(*names);
    return std::nullopt;
  }
  return std::nullopt;
}

class Runner {
 public:
  explicit Runner(std::ostream& out) : out_(out) {}

  int emit(const VerificationReport& r) {
    if (g.json) {
      out_ << dump(to_json(r, !g.no_timing)) << '\n';
    } else {
      out_ << summary_line(r) << '\n';
      for (const Witness& w : r.violations) out_ << "  witness " << format_set(w.set) << "  " << w.detail << '\n';
      for (const std::string& n : r.notes) out_ << "  note: " << n << '\n';
    }
    return r.passed() ? kExitOk : kExitViolation;
  }

  Globals g;

 private:
  std::ostream& out_;
};

std::string class_line(const SetProfile& p) {
  return std::string(to_string(p.set_class)) + " (" + std::to_string(p.sum_size) + " sums vs " +
         std::to_string(p.diff_size) + " differences)";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  if (auto bad = unknown_name(args)) {
    err << "error: " << *bad << '\n';
    return kExitUsage;
  }

  Runner runner(out);
  Globals& g = runner.g;
  std::function<int()> action;

  CLI::App app{"Sum-dominant set toolkit: classification, canonical search and grid checks"};
  app.name("mstd");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", g.json, "Emit JSON instead of a summary");
  app.add_flag("--no-timing", g.no_timing, "Omit elapsed_ms from JSON reports");
  app.add_option("--workers", g.workers, "Worker threads (default: $MSTD_WORKERS or 1)")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "Seed for randomized corpora");
  app.add_option("--checkpoint", g.checkpoint, "Checkpoint file for resumable searches");

  // --- set inspection ----------------------------------------------------------
  std::string literal;
  auto* classify_cmd = app.add_subcommand("classify", "Classify a set by |A+A| vs |A-A|");
  classify_cmd->add_option("set", literal, "Set literal, e.g. 0,2,3,4,7,11,12,14 or 0,1,5/2")->required();
  classify_cmd->callback([&] {
    action = [&] {
      // Dilation preserves the class, so rational sets are classified scaled up.
      const SetProfile p = profile(scale_to_integers(parse_rational_set(literal)).set);
      if (g.json) {
        Json j;
        j["set"] = literal;
        j["class"] = std::string(to_string(p.set_class));
        j["sum_size"] = p.sum_size;
        j["diff_size"] = p.diff_size;
        out << dump(j) << '\n';
      } else {
        out << class_line(p) << '\n';
      }
      return kExitOk;
    };
  });

  auto* profile_cmd = app.add_subcommand("profile", "Full profile of a set");
  profile_cmd->add_option("set", literal, "Set literal")->required();
  profile_cmd->callback([&] {
    action = [&] {
      const SetProfile p = profile(parse_int_set(literal));
      if (g.json) {
        out << dump(to_json(p)) << '\n';
      } else {
        out << "class: " << class_line(p) << '\n'
            << "size: " << p.size << '\n'
            << "diameter: " << p.diameter << '\n'
            << "equal_sum_pairs: " << p.equal_sum_pairs << '\n'
            << "equal_diff_pairs: " << p.equal_diff_pairs << '\n'
            << "symmetry_center: "
            << (p.symmetry_center ? std::to_string(*p.symmetry_center) : "none") << '\n'
            << "ap: "
            << (p.ap ? std::to_string(p.ap->first) + "," + std::to_string(p.ap->step) + "," +
                           std::to_string(p.ap->length)
                     : "none")
            << '\n';
      }
      return kExitOk;
    };
  });

  auto* explain_cmd = app.add_subcommand("explain", "Gap vector and difference table");
  explain_cmd->add_option("set", literal, "Set literal")->required();
  explain_cmd->callback([&] {
    action = [&] {
      const IntSet a = parse_int_set(literal);
      const SetProfile p = profile(a);
      const bool has_gaps = a.size() >= 2;
      if (g.json) {
        Json j;
        j["set"] = format_set(a);
        j["gaps"] = has_gaps ? Json(gaps(a).gaps) : Json::array();
        j["difference_table"] = has_gaps ? Json(difference_table(a).rows) : Json::array();
        j["profile"] = to_json(p);
        out << dump(j) << '\n';
      } else {
        out << "set: " << format_set(a) << '\n' << "class: " << class_line(p) << '\n';
        if (has_gaps) {
          const GapVector gv = gaps(a);
          out << "gaps: (";
          for (std::size_t i = 0; i < gv.gaps.size(); ++i) out << (i ? "," : "") << gv.gaps[i];
          out << ")\n"
              << "positive differences (k = " << p.equal_diff_pairs << " equal pairs):\n"
              << render_difference_table(difference_table(a));
        }
      }
      return kExitOk;
    };
  });

  // --- search --------------------------------------------------------------------
  SearchConfig search_cfg = SearchConfig::discovery();
  int size_min = 0;
  int size_max = 0;
  bool no_prune = false;
  auto* search_cmd = app.add_subcommand("search", "Canonical sweep for the smallest sum-dominant sets");
  search_cmd->add_option("--diameter-min", search_cfg.diameter_min, "Smallest diameter")->capture_default_str();
  search_cmd->add_option("--diameter-max", search_cfg.diameter_max, "Largest diameter")->capture_default_str();
  auto* size_min_opt = search_cmd->add_option("--size-min", size_min, "Smallest cardinality");
  auto* size_max_opt = search_cmd->add_option("--size-max", size_max, "Largest cardinality");
  search_cmd->add_flag("--no-prune", no_prune, "Classify every canonical set");
  search_cmd->callback([&] {
    action = [&] {
      if (size_min_opt->count()) search_cfg.size_min = size_min;
      if (size_max_opt->count()) search_cfg.size_max = size_max;
      if (no_prune) search_cfg.prune_ap_plus_two = search_cfg.prune_symmetric = false;
      search_cfg.workers = g.workers;
      if (!g.checkpoint.empty()) search_cfg.checkpoint_path = g.checkpoint;
      const SearchResult r = find_min_mstd(search_cfg);
      if (g.json) {
        out << dump(to_json(r)) << '\n';
      } else {
        out << "diameters " << search_cfg.diameter_min << ".." << search_cfg.diameter_max
            << ": examined " << r.sets_examined << " canonical sets, pruned " << r.sets_pruned
            << '\n';
        if (!r.min_mstd_size) {
          out << "no sum-dominant set found\n";
        } else {
          out << "min_mstd_size: " << *r.min_mstd_size << '\n';
          for (std::size_t i = 0; i < r.witnesses.size(); ++i)
            out << "witness " << format_set(r.witnesses[i]) << "  "
                << class_line(r.witness_profiles[i]) << '\n';
        }
      }
      return kExitOk;
    };
  });

  // --- verify ----------------------------------------------------------------------
  auto* verify_cmd = app.add_subcommand("verify", "Run one grid check");
  verify_cmd->require_subcommand(1);

  int max_size = 5;
  int max_diameter = 30;
  auto* thm1 = verify_cmd->add_subcommand("small-cardinality", "No sum-dominant set among small canonical sets");
  thm1->alias("thm1");
  thm1->add_option("--max-size", max_size)->capture_default_str();
  thm1->add_option("--max-diameter", max_diameter)->capture_default_str();
  thm1->callback([&] {
    action = [&] { return runner.emit(verify_small_cardinality(max_size, max_diameter, g.workers)); };
  });

  int n_max = 8;
  int q_max = 2;
  ParameterWindow window;
  Int window_lo = 0;
  Int window_hi = 0;
  int point_n = 0;
  std::string points;
  auto add_window = [&](CLI::App* cmd) {
    auto* lo = cmd->add_option("--window-lo", window_lo, "Fixed window lower end");
    auto* hi = cmd->add_option("--window-hi", window_hi, "Fixed window upper end");
    lo->needs(hi);
    hi->needs(lo);
    cmd->add_option("--window-lo-per-n", window.lo_per_n, "Window lower end as a multiple of n")
        ->capture_default_str();
    cmd->add_option("--window-hi-per-n", window.hi_per_n, "Window upper end as a multiple of n")
        ->capture_default_str();
    return lo;
  };
  auto* ap2 = verify_cmd->add_subcommand("ap-plus-two", "I_n with two rational insertions is never sum-dominant");
  ap2->add_option("--n-max", n_max)->capture_default_str();
  ap2->add_option("--q-max", q_max, "Largest denominator")->capture_default_str();
  auto* ap2_window = add_window(ap2);
  ap2->add_option("--n", point_n, "Check a single I_n instead of the grid");
  ap2->add_option("--points", points, "One or two points, e.g. 1/2,3/2 (with --n)");
  ap2->callback([&] {
    action = [&] {
      if (!points.empty()) return runner.emit(verify_ap_plus_two_points(point_n, parse_rational_set(points)));
      if (ap2_window->count()) window.fixed = Interval{window_lo, window_hi};
      return runner.emit(verify_ap_plus_two(n_max, window, q_max, g.workers));
    };
  });

  int remark_n_max = 8;
  int remark_q_max = 4;
  auto* remark = verify_cmd->add_subcommand("insertion-excess", "One off-half-integer insertion leaves more differences than sums");
  remark->add_option("--n-max", remark_n_max)->capture_default_str();
  remark->add_option("--q-max", remark_q_max)->capture_default_str();
  auto* remark_window = add_window(remark);
  remark->add_option("--n", point_n, "Check a single I_n instead of the grid");
  remark->add_option("--points", points, "Points x to insert, e.g. 3/4 (with --n)");
  remark->callback([&] {
    action = [&] {
      if (!points.empty()) return runner.emit(verify_remark_half_points(point_n, parse_rational_set(points)));
      if (remark_window->count()) window.fixed = Interval{window_lo, window_hi};
      return runner.emit(verify_remark_half(remark_n_max, window, remark_q_max, g.workers));
    };
  });

  int delta_n_max = 20;
  auto* delta = verify_cmd->add_subcommand("insertion-delta", "Exact sum/difference growth for x = n-1+k joining I_n");
  delta->add_option("--n-max", delta_n_max)->capture_default_str();
  delta->callback([&] { action = [&] { return runner.emit(verify_proposition2(delta_n_max)); }; });

  std::uint64_t trials = 100000;
  auto* pairs = verify_cmd->add_subcommand("pair-counts", "Equal-sum pairs are at least half the equal-difference pairs");
  pairs->add_option("--trials", trials)->capture_default_str();
  pairs->callback([&] {
    action = [&] { return runner.emit(verify_observation6(trials, g.seed, g.workers)); };
  });

  auto* bounds = verify_cmd->add_subcommand("cardinality-bounds", "Upper bounds on |A+A|, |A-A| and Sidon equality");
  bounds->add_option("--trials", trials)->capture_default_str();
  bounds->callback([&] {
    action = [&] { return runner.emit(verify_cardinality_bounds(trials, g.seed, g.workers)); };
  });

  int sym_diameter = 20;
  auto* sym = verify_cmd->add_subcommand("symmetric-balanced", "Symmetric sets are balanced");
  sym->add_option("--max-diameter", sym_diameter)->capture_default_str();
  sym->callback([&] { action = [&] { return runner.emit(verify_symmetric_balanced(sym_diameter)); }; });

  std::string sequence = "fibonacci";
  std::size_t count = 0;
  Int ratio_num = 5;
  Int ratio_den = 3;
  std::string terms;
  GrowthCriterionParams gp{3, 2, 5, 1, {-50, 100}};
  std::uint64_t subset_budget = 0;
  std::uint64_t tuple_samples = 1000;
  auto* growth = verify_cmd->add_subcommand("growth-criterion", "Fast-growing sequences stay non-sum-dominant with few additions");
  growth->add_option("--sequence", sequence, "fibonacci, geometric or custom")
      ->check(CLI::IsMember({"fibonacci", "geometric", "custom"}))
      ->capture_default_str();
  growth->add_option("--count", count, "Number of terms (default 2r+n+ell)");
  growth->add_option("--ratio-num", ratio_num)->capture_default_str();
  growth->add_option("--ratio-den", ratio_den)->capture_default_str();
  growth->add_option("--terms", terms, "Custom terms as a set literal");
  auto* r_opt = growth->add_option("--r", gp.r, "Growth parameter (fibonacci 3, geometric 2)");
  growth->add_option("--n", gp.n)->capture_default_str();
  growth->add_option("--ell", gp.ell)->capture_default_str();
  growth->add_option("--m", gp.m)->capture_default_str();
  growth->add_option("--window-lo", gp.window.lo)->capture_default_str();
  growth->add_option("--window-hi", gp.window.hi)->capture_default_str();
  growth->add_option("--subset-budget", subset_budget)->capture_default_str();
  growth->add_option("--tuple-samples", tuple_samples)->capture_default_str();
  growth->callback([&] {
    action = [&] {
      if (!r_opt->count()) gp.r = sequence == "fibonacci" ? 3 : 2;
      const std::size_t want = count ? count : static_cast<std::size_t>(gp.subset_size());
      const GrowthSequence seq =
          sequence == "fibonacci"   ? GrowthSequence::fibonacci(want)
          : sequence == "geometric" ? GrowthSequence::geometric(ratio_num, ratio_den, want, gp.r)
                                    : GrowthSequence(parse_int_set(terms).elements(), gp.r);
      return runner.emit(verify_growth_criterion(seq, gp, subset_budget, g.seed, tuple_samples));
    };
  });

  auto* five = verify_cmd->add_subcommand("five-element-witnesses", "The two five-element sets met in the size-5 case split");
  five->callback([&] { action = [&] { return runner.emit(verify_five_element_witnesses()); }; });

  // --- explore ------------------------------------------------------------------------
  auto* explore_cmd = app.add_subcommand("explore", "Open-question explorers");
  explore_cmd->require_subcommand(1);

  int max_len = 6;
  int max_step = 5;
  int max_shift = 40;
  auto* two_ap = explore_cmd->add_subcommand("two-ap-unions", "Unions of two arithmetic progressions");
  two_ap->add_option("--max-len", max_len)->capture_default_str();
  two_ap->add_option("--max-step", max_step)->capture_default_str();
  two_ap->add_option("--max-shift", max_shift)->capture_default_str();
  two_ap->callback([&] {
    action = [&] { return runner.emit(explore_two_ap_unions(max_len, max_step, max_shift, g.workers)); };
  });

  APSpec ap{3, 4, 3};
  int k_max = 5;
  Interval add_window_range{0, 14};
  auto* min_add = explore_cmd->add_subcommand("min-additions", "Fewest integers turning an AP sum-dominant");
  min_add->add_option("--ap-first", ap.first)->capture_default_str();
  min_add->add_option("--ap-step", ap.step)->capture_default_str();
  min_add->add_option("--ap-length", ap.length)->capture_default_str();
  min_add->add_option("--k-max", k_max)->capture_default_str();
  min_add->add_option("--window-lo", add_window_range.lo)->capture_default_str();
  min_add->add_option("--window-hi", add_window_range.hi)->capture_default_str();
  min_add->callback([&] {
    action = [&] {
      const MinAdditionsResult r = explore_min_additions(ap, k_max, add_window_range, g.workers);
      if (g.json) {
        out << dump(to_json(r, !g.no_timing)) << '\n';
        return r.report.passed() ? kExitOk : kExitViolation;
      }
      return runner.emit(r.report);
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    return action ? action() : kExitUsage;
  } catch (const LiteralError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace mstd::cli
