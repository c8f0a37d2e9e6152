#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bondlab::bounds {

class BoundsError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Monic cubic z^3 + a2 z^2 + (a1_chi·χ + a1) z + (a0_chi·χ + a0), one per
/// integer Euler characteristic χ.
///
/// For χ <= 0 both cubics below have root sum -a2 < 0 and root product
/// -(a0_chi·χ + a0) > 0. Three real roots would then be one positive and two
/// negative (all positive contradicts the sum); a single real root pairs with
/// conjugates of positive product and is itself positive. Either way there
/// is exactly one nonnegative real root, the cubic is negative on [0, root)
/// and positive beyond it, so "largest real root" is that root.
struct CubicSpec {
  std::int64_t a2;
  std::int64_t a1_chi;
  std::int64_t a1;
  std::int64_t a0_chi;
  std::int64_t a0;

  __int128 at(std::int64_t z, std::int64_t chi) const;
  long double at(long double z, std::int64_t chi) const;
};

/// z^3 + z^2 + (3χ - 8) z + 9χ - 12; its largest root is t(χ).
inline constexpr CubicSpec kCurvatureCubic{1, 3, -8, 9, -12};
/// z^3 + 2z^2 + (6χ - 7) z + 18χ - 24; its largest root is r(χ).
inline constexpr CubicSpec kPriorCubic{2, 6, -7, 18, -24};

std::int64_t isqrt(std::int64_t k);

/// ⌊largest real root⌋ by scanning integers upward from 3 with exact
/// arithmetic. Requires χ <= 0 and a cubic with the sign structure above.
std::int64_t floor_largest_root(const CubicSpec& cubic, std::int64_t chi);

/// Largest root by bisection; returns the lower bracket end, on which the
/// cubic is <= 0, once the bracket is narrower than `width`.
long double largest_root_bisection(const CubicSpec& cubic, std::int64_t chi, long double width = 1e-12L);

/// Cardano form of t(χ) evaluated in complex long double with principal
/// branches. Cross-check only.
long double closed_form_t(std::int64_t chi);

// Additive bounds Δ + term. Every floor or ceiling below is decided by an
// integer predicate; none is taken of a floating-point value.

/// Δ + ⌊t⌋.
std::int64_t cubic_t_bound(std::int64_t delta, std::int64_t chi);
/// Δ + 1 + ⌊√(4 - 3χ)⌋.
std::int64_t sqrt_t_bound(std::int64_t delta, std::int64_t chi);
/// Δ + ⌊r⌋.
std::int64_t cubic_r_bound(std::int64_t delta, std::int64_t chi);
/// Δ + ⌈√(12 - 6χ) - 1/2⌉.
std::int64_t sqrt_r_bound(std::int64_t delta, std::int64_t chi);
/// Δ + ⌊s⌋, s = (2 + √(g² - g(g-2)χ)) / (g - 2), the larger root of
/// (g-2)z² - 4z + χg - g - 2. Requires finite g >= 3.
std::int64_t girth_bound(std::int64_t delta, std::int64_t chi, std::int64_t g);
/// Δ + ⌊(√(8g(2-g)χ + (3g-2)²) - (g-6)) / (2(g-2))⌋, the earlier girth bound.
std::int64_t prior_girth_bound(std::int64_t delta, std::int64_t chi, std::int64_t g);
/// Δ + 1 + ⌊√(4 - 2χ)⌋.
std::int64_t triangle_free_bound(std::int64_t delta, std::int64_t chi);
/// Δ + ⌊c⌋, c = 1/2 - 3χ/n + √(25/4 - 21χ/n + 9χ²/n²).
std::int64_t order_bound(std::int64_t delta, std::int64_t chi, std::int64_t n);
/// Δ + ⌊3 - 18χ/(m + 3χ)⌋; nullopt unless m > -3χ.
std::optional<std::int64_t> size_bound(std::int64_t delta, std::int64_t chi, std::int64_t m);
/// min(Δ + h + 2, Δ + k + 1) for orientable genus h and non-orientable genus k.
std::int64_t genus_pair_bound(std::int64_t delta, std::int64_t h, std::int64_t k);

/// Real values behind the floors, for reports and cross-checks.
double girth_s(std::int64_t chi, std::int64_t g);
double order_c(std::int64_t chi, std::int64_t n);
double size_c(std::int64_t chi, std::int64_t m);

struct ThresholdBound {
  std::string name;
  std::string condition;
  std::int64_t value = 0;  // Δ + additive term
  bool applies = false;
};

/// The six large-order clauses for orientable genus h >= 1 and
/// non-orientable genus k >= 1. Powers and logarithms are natural-log double
/// precision; thresholds n >= x are tested as n >= x - 1e-9.
std::vector<ThresholdBound> large_order_genus_bounds(std::int64_t delta, std::int64_t n, std::int64_t h,
                                                     std::int64_t k);

/// Corollary constants of the order bound: c <= constant once n >= -d·χ.
struct OrderThreshold {
  std::int64_t d;
  std::int64_t constant;
};
inline constexpr OrderThreshold kOrderThresholds[] = {{1, 9}, {2, 6}, {3, 5}, {4, 4}, {8, 3}};

/// Corollary constants of the size bound: c <= constant once m > -(p/q)·χ.
struct SizeThreshold {
  std::int64_t p;
  std::int64_t q;
  std::int64_t constant;
};
inline constexpr SizeThreshold kSizeThresholds[] = {{6, 1, 8}, {33, 5, 7}, {15, 2, 6},
                                                    {9, 1, 5}, {12, 1, 4}, {21, 1, 3}};

/// z = num / den with den > 0.
struct Fraction {
  std::int64_t num;
  std::int64_t den = 1;
};

struct SignTriple {
  bool a = false;
  bool b = false;
  bool c = false;
  bool all() const { return a && b && c; }
};

/// Signs of A(z) = z² - 2z + 2χ - 3, B(z) = 20z³ + 4z² + 3(16χ - 41)z + 96χ - 126
/// and C(z) = the curvature cubic. All three are positive exactly when z > t(χ).
SignTriple cubic_family_signs(std::int64_t chi, Fraction z);
SignTriple cubic_family_signs(std::int64_t chi, double z);
/// nz - 3n + 4χ, 10nz² - (13n - 48χ)z - 42n + 96χ, nz² - (n - 6χ)z - 6n + 18χ;
/// all positive exactly when z > order_c(χ, n).
SignTriple order_family_signs(std::int64_t chi, std::int64_t n, Fraction z);
/// (m + 2χ)z - 3m + 2χ, (5m + 12χ)z - 14m + 24χ, (m + 3χ)z - 3m + 9χ;
/// all positive exactly when z > size_c(χ, m), for m > -3χ.
SignTriple size_family_signs(std::int64_t chi, std::int64_t m, Fraction z);

/// (3 + √(17 - 8χ)) / 2, the least order of a connected graph with n >= 2.
double order_lower_bound(std::int64_t chi);
/// 5/2 - χ + √(17 - 8χ) / 2, the least size of a connected nontrivial graph.
double size_lower_bound(std::int64_t chi);

struct TableRow {
  std::int64_t chi;
  std::int64_t floor_r;
  std::int64_t floor_t;
};
/// One row per χ from chi_hi down to chi_lo.
std::vector<TableRow> comparison_table(std::int64_t chi_lo, std::int64_t chi_hi);

/// What is known about one graph (or a hypothetical one) for bound evaluation.
struct BoundInputs {
  std::int64_t delta = 0;
  std::int64_t chi = 0;
  std::optional<std::int64_t> girth;  // nullopt = unknown or acyclic
  std::optional<std::int64_t> n;
  std::optional<std::int64_t> m;
  std::optional<std::int64_t> h;  // orientable genus
  std::optional<std::int64_t> k;  // non-orientable genus
};

struct BoundEntry {
  std::string name;
  std::string formula;
  bool applicable = false;
  std::string reason;  // why not applicable
  std::optional<std::int64_t> additive_term;
  std::optional<std::int64_t> value;  // Δ + additive_term
};

struct BoundDetails {
  std::optional<double> t;
  std::optional<double> r;
  std::optional<double> s;
  std::optional<double> c_order;
  std::optional<double> c_size;
};

struct BoundReport {
  std::int64_t delta = 0;
  std::int64_t chi = 0;
  std::vector<BoundEntry> entries;
  BoundDetails details;

  const BoundEntry* find(const std::string& name) const;
};

/// Evaluates every bound whose inputs are present; entries whose hypotheses
/// fail are kept with applicable = false and a reason.
BoundReport bound_report(const BoundInputs& in);

/// Names and formulas of all bound entries, in report order.
struct BoundDescription {
  std::string name;
  std::string formula;
  std::string hypothesis;
};
const std::vector<BoundDescription>& bound_catalog();

}  // namespace bondlab::bounds
