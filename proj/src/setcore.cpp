#include "mstd/setcore.hpp"

#include <numeric>
#include <stdexcept>

#include "mstd/kernel.hpp"
#include "mstd/structure.hpp"

namespace mstd {

namespace {

constexpr Int kMagnitudeLimit = Int{1} << 61;

// Pairwise sums and differences must stay inside Int.
void require_arithmetic_range(const IntSet& a) {
  if (a.empty()) throw std::domain_error("operation requires a nonempty set");
  if (a.min() <= -kMagnitudeLimit || a.max() >= kMagnitudeLimit)
    throw std::domain_error("set elements exceed the supported magnitude");
}

Int gap_gcd(const IntSet& a) {
  Int g = 0;
  for (std::size_t i = 0; i + 1 < a.size(); ++i) g = std::gcd(g, a[i + 1] - a[i]);
  return g;
}

bool is_ap(const std::vector<Int>& e) {
  for (std::size_t i = 2; i < e.size(); ++i)
    if (e[i] - e[i - 1] != e[1] - e[0]) return false;
  return true;
}

APSpec ap_of(const std::vector<Int>& e) {
  if (e.size() == 1) return {e[0], 1, 1};
  return {e[0], e[1] - e[0], static_cast<Int>(e.size())};
}

}  // namespace

std::string_view to_string(SetClass c) noexcept {
  switch (c) {
    case SetClass::SumDominant: return "sum-dominant";
    case SetClass::Balanced: return "balanced";
    case SetClass::DifferenceDominant: return "difference-dominant";
  }
  return "unknown";
}

IntSet sumset(const IntSet& a) {
  require_arithmetic_range(a);
  return kernel::prefer_dense(a) ? kernel::sumset_dense(a) : kernel::sumset_sparse(a);
}

IntSet diffset(const IntSet& a) {
  require_arithmetic_range(a);
  return kernel::prefer_dense(a) ? kernel::diffset_dense(a) : kernel::diffset_sparse(a);
}

SetClass classify(const IntSet& a) {
  require_arithmetic_range(a);
  const kernel::Counts c = kernel::counts(a);
  if (c.sum_size > c.diff_size) return SetClass::SumDominant;
  if (c.sum_size < c.diff_size) return SetClass::DifferenceDominant;
  return SetClass::Balanced;
}

SetProfile profile(const IntSet& a) {
  require_arithmetic_range(a);
  const kernel::Counts c = kernel::counts(a);
  SetProfile p;
  p.size = a.size();
  p.sum_size = c.sum_size;
  p.diff_size = c.diff_size;
  p.set_class = c.sum_size > c.diff_size   ? SetClass::SumDominant
                : c.sum_size < c.diff_size ? SetClass::DifferenceDominant
                                           : SetClass::Balanced;
  p.equal_sum_pairs = equal_sum_pairs(a);
  p.equal_diff_pairs = equal_diff_pairs(a);
  p.diameter = a.diameter();
  p.symmetry_center = is_symmetric(a);
  p.ap = detect_ap(a);
  return p;
}

NormalizedSet affine_normalize(const IntSet& a) {
  if (a.empty()) throw std::domain_error("operation requires a nonempty set");
  const Int shift = a.min();
  const Int scale = a.size() >= 2 ? gap_gcd(a) : 1;
  std::vector<Int> v = a.elements();
  for (Int& x : v) x = (x - shift) / scale;
  return {IntSet(std::move(v)), {shift, scale}};
}

bool is_normalized(const IntSet& a) {
  return !a.empty() && a.min() == 0 && (a.size() < 2 || gap_gcd(a) == 1);
}

IntSet reflect_canonical(const IntSet& a) {
  if (!is_normalized(a)) throw std::domain_error("reflect_canonical requires a normalized set");
  IntSet reflected = a.negated().translated(a.max());
  return std::min(a, reflected);
}

IntSet canonical_form(const IntSet& a) { return reflect_canonical(affine_normalize(a).set); }

ScaledSet scale_to_integers(const RationalSet& r) {
  return {r.numerators(), r.denominator()};
}

std::optional<Int> is_symmetric(const IntSet& a) {
  if (a.empty()) throw std::domain_error("operation requires a nonempty set");
  const Int center = a.min() + a.max();
  const auto& e = a.elements();
  for (std::size_t i = 0; i < (e.size() + 1) / 2; ++i)
    if (e[i] + e[e.size() - 1 - i] != center) return std::nullopt;
  return center;
}

std::optional<APSpec> detect_ap(const IntSet& a) {
  if (a.empty()) throw std::domain_error("operation requires a nonempty set");
  if (!is_ap(a.elements())) return std::nullopt;
  return ap_of(a.elements());
}

std::optional<ApDecomposition> ap_plus_two_decomposition(const IntSet& a) {
  if (a.empty()) throw std::domain_error("operation requires a nonempty set");
  const auto& e = a.elements();
  const std::size_t n = e.size();

  auto try_extras = [&](std::vector<std::size_t> removed) -> std::optional<ApDecomposition> {
    std::vector<Int> rest;
    std::vector<Int> extras;
    for (std::size_t i = 0, k = 0; i < n; ++i) {
      if (k < removed.size() && removed[k] == i) {
        extras.push_back(e[i]);
        ++k;
      } else {
        rest.push_back(e[i]);
      }
    }
    if (rest.empty() || !is_ap(rest)) return std::nullopt;
    return ApDecomposition{ap_of(rest), IntSet(std::move(extras))};
  };

  // Index order over the sorted elements is lexicographic order of E.
  if (auto d = try_extras({})) return d;
  for (std::size_t i = 0; i < n; ++i)
    if (auto d = try_extras({i})) return d;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (auto d = try_extras({i, j})) return d;
  return std::nullopt;
}

}  // namespace mstd
