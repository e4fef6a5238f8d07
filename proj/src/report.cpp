#include "mstd/report.hpp"

#include "mstd/json_io.hpp"
#include "mstd/literal.hpp"

namespace mstd {

void VerificationReport::absorb(VerificationReport&& part) {
  cases += part.cases;
  for (Witness& w : part.violations) violations.push_back(std::move(w));
  for (std::string& n : part.notes) notes.push_back(std::move(n));
}

std::string summary_line(const VerificationReport& r) {
  std::string line = (r.passed() ? "PASS " : "FAIL ") + r.check + ": " +
                     std::to_string(r.cases) + " cases, " +
                     std::to_string(r.violations.size()) + " violations";
  if (!r.grid.empty()) {
    line += " (";
    for (std::size_t i = 0; i < r.grid.size(); ++i) {
      if (i != 0) line += ", ";
      line += r.grid[i].name + "=" + std::to_string(r.grid[i].value);
    }
    line += ")";
  }
  return line;
}

Json to_json(const APSpec& ap) {
  Json j;
  j["first"] = ap.first;
  j["step"] = ap.step;
  j["length"] = ap.length;
  return j;
}

Json to_json(const SetProfile& p) {
  Json j;
  j["size"] = p.size;
  j["sum_size"] = p.sum_size;
  j["diff_size"] = p.diff_size;
  j["class"] = std::string(to_string(p.set_class));
  j["equal_sum_pairs"] = p.equal_sum_pairs;
  j["equal_diff_pairs"] = p.equal_diff_pairs;
  j["diameter"] = p.diameter;
  j["symmetry_center"] = p.symmetry_center ? Json(*p.symmetry_center) : Json(nullptr);
  j["ap"] = p.ap ? to_json(*p.ap) : Json(nullptr);
  return j;
}

Json to_json(const VerificationReport& r, bool with_timing) {
  Json j;
  j["check"] = r.check;
  Json grid = Json::object();
  for (const GridParam& g : r.grid) grid[g.name] = g.value;
  j["grid"] = std::move(grid);
  j["cases"] = r.cases;
  Json violations = Json::array();
  for (const Witness& w : r.violations) {
    Json v;
    v["set"] = format_set(w.set);
    v["detail"] = w.detail;
    violations.push_back(std::move(v));
  }
  j["violations"] = std::move(violations);
  if (with_timing) j["elapsed_ms"] = r.elapsed_ms;
  j["seed"] = r.seed ? Json(*r.seed) : Json(nullptr);
  j["notes"] = r.notes;
  return j;
}

std::string dump(const Json& j) { return j.dump(2); }

}  // namespace mstd
