#include "bondlab/bounds.hpp"

#include <cmath>
#include <complex>
#include <functional>

namespace bondlab::bounds {

namespace {

using i128 = __int128;

void require_nonpositive(std::int64_t chi, const char* what) {
  if (chi > 0) throw BoundsError(std::string(what) + ": requires Euler characteristic <= 0, got " + std::to_string(chi));
}

// Largest integer z in [lo, hi] with pred(z) true, for pred true at lo and
// monotonically true-then-false.
std::int64_t last_true(std::int64_t lo, std::int64_t hi, const std::function<bool(std::int64_t)>& pred) {
  while (lo < hi) {
    std::int64_t mid = lo + (hi - lo + 1) / 2;
    if (pred(mid)) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

// lhs <= √rhs for integer lhs and rhs >= 0.
bool at_most_sqrt(i128 lhs, i128 rhs) { return lhs < 0 || lhs * lhs <= rhs; }

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

int sign_of(i128 x) { return (x > 0) - (x < 0); }

}  // namespace

__int128 CubicSpec::at(std::int64_t z, std::int64_t chi) const {
  i128 zz = z;
  return zz * zz * zz + a2 * zz * zz + (i128{a1_chi} * chi + a1) * zz + (i128{a0_chi} * chi + a0);
}

long double CubicSpec::at(long double z, std::int64_t chi) const {
  return ((z + a2) * z + (static_cast<long double>(a1_chi * chi + a1))) * z + static_cast<long double>(a0_chi * chi + a0);
}

std::int64_t isqrt(std::int64_t k) {
  if (k < 0) throw BoundsError("isqrt of negative value");
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(k)));
  while (i128{r} * r > k) --r;
  while (i128{r + 1} * (r + 1) <= k) ++r;
  return r;
}

std::int64_t floor_largest_root(const CubicSpec& cubic, std::int64_t chi) {
  require_nonpositive(chi, "floor_largest_root");
  // The cubic is <= 0 exactly on [0, root], so ⌊root⌋ is the last integer
  // before it turns positive. Both cubics used here are <= 0 at z = 3.
  std::int64_t z = 3;
  if (cubic.at(z, chi) > 0) throw BoundsError("floor_largest_root: cubic positive at the scan start");
  while (cubic.at(z + 1, chi) <= 0) ++z;
  return z;
}

long double largest_root_bisection(const CubicSpec& cubic, std::int64_t chi, long double width) {
  require_nonpositive(chi, "largest_root_bisection");
  long double lo = 0.0L;
  long double hi = 1.0L + std::sqrt(static_cast<long double>(4 - 3 * chi));
  while (cubic.at(hi, chi) <= 0) hi *= 2;
  if (cubic.at(3.0L, chi) <= 0) lo = 3.0L;
  while (hi - lo > width) {
    long double mid = lo + (hi - lo) / 2;
    if (mid <= lo || mid >= hi) break;
    if (cubic.at(mid, chi) <= 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

long double closed_form_t(std::int64_t chi) {
  using C = std::complex<long double>;
  const long double x = static_cast<long double>(chi);
  const C radicand(9 * x * x * x + 69 * x * x - 125 * x, 0.0L);
  const C d = std::pow(9.0L * std::sqrt(radicand) - 108.0L * x + 125.0L, C(1.0L / 3.0L, 0.0L));
  const C t = (d + (25.0L - 9.0L * x) / d - 1.0L) / 3.0L;
  if (std::abs(t.imag()) > 1e-9L * std::max(1.0L, std::abs(t.real()))) {
    throw BoundsError("closed_form_t: imaginary residue too large at chi " + std::to_string(chi));
  }
  return t.real();
}

std::int64_t cubic_t_bound(std::int64_t delta, std::int64_t chi) {
  return delta + floor_largest_root(kCurvatureCubic, chi);
}

std::int64_t sqrt_t_bound(std::int64_t delta, std::int64_t chi) {
  require_nonpositive(chi, "sqrt_t_bound");
  return delta + 1 + isqrt(4 - 3 * chi);
}

std::int64_t cubic_r_bound(std::int64_t delta, std::int64_t chi) {
  return delta + floor_largest_root(kPriorCubic, chi);
}

std::int64_t sqrt_r_bound(std::int64_t delta, std::int64_t chi) {
  require_nonpositive(chi, "sqrt_r_bound");
  // Smallest z with z + 1/2 >= √K, i.e. (2z + 1)² >= 4K.
  const i128 four_k = 4 * i128{12 - 6 * chi};
  std::int64_t z = 0;
  while (i128{2 * z + 1} * (2 * z + 1) < four_k) ++z;
  return delta + z;
}

std::int64_t girth_bound(std::int64_t delta, std::int64_t chi, std::int64_t g) {
  require_nonpositive(chi, "girth_bound");
  if (g < 3) throw BoundsError("girth_bound: girth must be at least 3");
  const i128 k = i128{g} * g - i128{g} * (g - 2) * chi;
  auto fits = [&](std::int64_t z) { return at_most_sqrt(i128{g - 2} * z - 2, k); };
  return delta + last_true(0, isqrt(static_cast<std::int64_t>(k)) + 2, fits);
}

std::int64_t prior_girth_bound(std::int64_t delta, std::int64_t chi, std::int64_t g) {
  require_nonpositive(chi, "prior_girth_bound");
  if (g < 3) throw BoundsError("prior_girth_bound: girth must be at least 3");
  const i128 q = 8 * i128{g} * (2 - g) * chi + i128{3 * g - 2} * (3 * g - 2);
  auto fits = [&](std::int64_t z) { return at_most_sqrt(2 * i128{g - 2} * z + (g - 6), q); };
  return delta + last_true(0, isqrt(static_cast<std::int64_t>(q)) + 2, fits);
}

std::int64_t triangle_free_bound(std::int64_t delta, std::int64_t chi) {
  require_nonpositive(chi, "triangle_free_bound");
  return delta + 1 + isqrt(4 - 2 * chi);
}

std::int64_t order_bound(std::int64_t delta, std::int64_t chi, std::int64_t n) {
  require_nonpositive(chi, "order_bound");
  if (n < 1) throw BoundsError("order_bound: order must be positive");
  // z <= c  ⇔  2nz - n + 6χ <= √(25n² - 84nχ + 36χ²) after scaling by 2n.
  const i128 q = 25 * i128{n} * n - 84 * i128{n} * chi + 36 * i128{chi} * chi;
  auto fits = [&](std::int64_t z) { return at_most_sqrt(2 * i128{n} * z - n + 6 * i128{chi}, q); };
  return delta + last_true(0, 8 + 6 * ((-chi + n - 1) / n), fits);
}

std::optional<std::int64_t> size_bound(std::int64_t delta, std::int64_t chi, std::int64_t m) {
  require_nonpositive(chi, "size_bound");
  if (m <= -3 * chi) return std::nullopt;
  return delta + 3 + floor_div(-18 * chi, m + 3 * chi);
}

std::int64_t genus_pair_bound(std::int64_t delta, std::int64_t h, std::int64_t k) {
  if (h < 0 || k < 1) throw BoundsError("genus_pair_bound: need h >= 0 and k >= 1");
  return std::min(delta + h + 2, delta + k + 1);
}

double girth_s(std::int64_t chi, std::int64_t g) {
  const double gd = static_cast<double>(g);
  return (2.0 + std::sqrt(gd * gd - gd * (gd - 2.0) * static_cast<double>(chi))) / (gd - 2.0);
}

double order_c(std::int64_t chi, std::int64_t n) {
  const double x = static_cast<double>(chi) / static_cast<double>(n);
  return 0.5 - 3.0 * x + std::sqrt(25.0 / 4.0 - 21.0 * x + 9.0 * x * x);
}

double size_c(std::int64_t chi, std::int64_t m) {
  return 3.0 - 18.0 * static_cast<double>(chi) / static_cast<double>(m + 3 * chi);
}

std::vector<ThresholdBound> large_order_genus_bounds(std::int64_t delta, std::int64_t n, std::int64_t h,
                                                     std::int64_t k) {
  if (n < 1 || h < 1 || k < 1) throw BoundsError("large_order_genus_bounds: need n, h, k >= 1");
  constexpr double kSlack = 1e-9;
  const double nd = static_cast<double>(n);
  const double lh = std::log(static_cast<double>(h));
  const double lk = std::log(static_cast<double>(k));
  auto ceil_int = [](double x) { return static_cast<std::int64_t>(std::ceil(x - kSlack)); };
  auto at_least = [&](double threshold) { return nd >= threshold - kSlack; };
  const double hd = static_cast<double>(h);
  const double kd = static_cast<double>(k);
  return {
      {"large_order_ln2_h", "n >= h", delta + ceil_int(lh * lh) + 3, at_least(hd)},
      {"large_order_ln_h", "n >= h^1.9", delta + ceil_int(lh) + 3, at_least(std::pow(hd, 1.9))},
      {"large_order_h", "n >= h^2.5", delta + 4, at_least(std::pow(hd, 2.5))},
      {"large_order_ln2_k", "n >= k/6", delta + ceil_int(lk * lk) + 2, at_least(kd / 6.0)},
      {"large_order_ln_k", "n >= k^1.6", delta + ceil_int(lk) + 3, at_least(std::pow(kd, 1.6))},
      {"large_order_k", "n >= k^2", delta + 3, at_least(kd * kd)},
  };
}

SignTriple cubic_family_signs(std::int64_t chi, Fraction z) {
  // Scaled by den^2 and den^3 so every value is an integer.
  const i128 p = z.num;
  const i128 q = z.den;
  const i128 a = p * p - 2 * p * q + (2 * i128{chi} - 3) * q * q;
  const i128 b = 20 * p * p * p + 4 * p * p * q + 3 * (16 * i128{chi} - 41) * p * q * q + (96 * i128{chi} - 126) * q * q * q;
  const i128 c = p * p * p + p * p * q + (3 * i128{chi} - 8) * p * q * q + (9 * i128{chi} - 12) * q * q * q;
  return {sign_of(a) > 0, sign_of(b) > 0, sign_of(c) > 0};
}

SignTriple cubic_family_signs(std::int64_t chi, double z) {
  const double x = static_cast<double>(chi);
  const double a = z * z - 2 * z + 2 * x - 3;
  const double b = ((20 * z + 4) * z + 3 * (16 * x - 41)) * z + 96 * x - 126;
  const double c = ((z + 1) * z + (3 * x - 8)) * z + 9 * x - 12;
  return {a > 0, b > 0, c > 0};
}

SignTriple order_family_signs(std::int64_t chi, std::int64_t n, Fraction z) {
  const i128 p = z.num;
  const i128 q = z.den;
  const i128 x = chi;
  const i128 a = n * p + (-3 * i128{n} + 4 * x) * q;
  const i128 b = 10 * i128{n} * p * p - (13 * i128{n} - 48 * x) * p * q + (-42 * i128{n} + 96 * x) * q * q;
  const i128 c = i128{n} * p * p - (i128{n} - 6 * x) * p * q + (-6 * i128{n} + 18 * x) * q * q;
  return {a > 0, b > 0, c > 0};
}

SignTriple size_family_signs(std::int64_t chi, std::int64_t m, Fraction z) {
  const i128 p = z.num;
  const i128 q = z.den;
  const i128 x = chi;
  const i128 a = (m + 2 * x) * p + (-3 * i128{m} + 2 * x) * q;
  const i128 b = (5 * i128{m} + 12 * x) * p + (-14 * i128{m} + 24 * x) * q;
  const i128 c = (m + 3 * x) * p + (-3 * i128{m} + 9 * x) * q;
  return {a > 0, b > 0, c > 0};
}

double order_lower_bound(std::int64_t chi) {
  return (3.0 + std::sqrt(17.0 - 8.0 * static_cast<double>(chi))) / 2.0;
}

double size_lower_bound(std::int64_t chi) {
  return 2.5 - static_cast<double>(chi) + 0.5 * std::sqrt(17.0 - 8.0 * static_cast<double>(chi));
}

std::vector<TableRow> comparison_table(std::int64_t chi_lo, std::int64_t chi_hi) {
  if (chi_lo > chi_hi || chi_hi > 0) throw BoundsError("comparison_table: need chi_lo <= chi_hi <= 0");
  std::vector<TableRow> rows;
  for (std::int64_t chi = chi_hi; chi >= chi_lo; --chi) {
    rows.push_back({chi, floor_largest_root(kPriorCubic, chi), floor_largest_root(kCurvatureCubic, chi)});
  }
  return rows;
}

const BoundEntry* BoundReport::find(const std::string& name) const {
  for (const auto& e : entries)
    if (e.name == name) return &e;
  return nullptr;
}

const std::vector<BoundDescription>& bound_catalog() {
  static const std::vector<BoundDescription> catalog = {
      {"genus_pair", "min(D + h + 2, D + k + 1)", "orientable genus h, non-orientable genus k"},
      {"cubic_r", "D + floor(r), r largest root of z^3 + 2z^2 + (6chi - 7)z + 18chi - 24", "chi <= 0"},
      {"sqrt_r", "D + ceil(sqrt(12 - 6chi) - 1/2)", "chi <= 0"},
      {"cubic_t", "D + floor(t), t largest root of z^3 + z^2 + (3chi - 8)z + 9chi - 12", "chi <= 0"},
      {"sqrt_t", "D + 1 + floor(sqrt(4 - 3chi))", "chi <= 0"},
      {"girth_s", "D + floor((2 + sqrt(g^2 - g(g - 2)chi)) / (g - 2))", "chi <= 0, finite girth g"},
      {"girth_prior", "D + floor((sqrt(8g(2 - g)chi + (3g - 2)^2) - (g - 6)) / (2(g - 2)))",
       "chi <= 0, finite girth g"},
      {"triangle_free", "D + 1 + floor(sqrt(4 - 2chi))", "chi <= 0, girth >= 4"},
      {"order_c", "D + floor(1/2 - 3chi/n + sqrt(25/4 - 21chi/n + 9chi^2/n^2))", "chi <= 0, connected"},
      {"order_d1", "D + 9", "chi <= 0, connected, n >= -chi"},
      {"order_d2", "D + 6", "chi <= 0, connected, n >= -2chi"},
      {"order_d3", "D + 5", "chi <= 0, connected, n >= -3chi"},
      {"order_d4", "D + 4", "chi <= 0, connected, n >= -4chi"},
      {"order_d8", "D + 3", "chi <= 0, connected, n >= -8chi"},
      {"size_c", "D + floor(3 - 18chi/(m + 3chi))", "chi <= 0, connected, m > -3chi"},
      {"size_6", "D + 8", "chi <= 0, connected, m > -6chi"},
      {"size_6.6", "D + 7", "chi <= 0, connected, m > -6.6chi"},
      {"size_7.5", "D + 6", "chi <= 0, connected, m > -7.5chi"},
      {"size_9", "D + 5", "chi <= 0, connected, m > -9chi"},
      {"size_12", "D + 4", "chi <= 0, connected, m > -12chi"},
      {"size_21", "D + 3", "chi <= 0, connected, m > -21chi"},
      {"large_order_ln2_h", "D + ceil(ln^2 h) + 3", "connected, h >= 1, n >= h"},
      {"large_order_ln_h", "D + ceil(ln h) + 3", "connected, h >= 1, n >= h^1.9"},
      {"large_order_h", "D + 4", "connected, h >= 1, n >= h^2.5"},
      {"large_order_ln2_k", "D + ceil(ln^2 k) + 2", "connected, k >= 1, n >= k/6"},
      {"large_order_ln_k", "D + ceil(ln k) + 3", "connected, k >= 1, n >= k^1.6"},
      {"large_order_k", "D + 3", "connected, k >= 1, n >= k^2"},
  };
  return catalog;
}

namespace {

std::string size_threshold_name(const SizeThreshold& t) {
  if (t.q == 1) return "size_" + std::to_string(t.p);
  return "size_" + std::to_string(t.p / t.q) + "." + std::to_string((t.p % t.q) * 10 / t.q);
}

}  // namespace

BoundReport bound_report(const BoundInputs& in) {
  BoundReport report;
  report.delta = in.delta;
  report.chi = in.chi;
  const std::int64_t delta = in.delta;
  const std::int64_t chi = in.chi;
  const bool nonpositive = chi <= 0;

  auto formula_of = [](const std::string& name) {
    for (const auto& d : bound_catalog())
      if (d.name == name) return d.formula;
    return std::string{};
  };
  auto add = [&](const std::string& name, std::optional<std::int64_t> value, std::string reason = {}) {
    BoundEntry e;
    e.name = name;
    e.formula = formula_of(name);
    e.applicable = value.has_value();
    e.reason = value ? std::string{} : std::move(reason);
    if (value) {
      e.value = *value;
      e.additive_term = *value - delta;
    }
    report.entries.push_back(std::move(e));
  };
  const char* kChi = "needs chi <= 0";

  if (in.h && in.k) {
    add("genus_pair", genus_pair_bound(delta, *in.h, *in.k));
  } else {
    add("genus_pair", std::nullopt, "needs both genera");
  }

  if (nonpositive) {
    add("cubic_r", cubic_r_bound(delta, chi));
    add("sqrt_r", sqrt_r_bound(delta, chi));
    add("cubic_t", cubic_t_bound(delta, chi));
    add("sqrt_t", sqrt_t_bound(delta, chi));
    report.details.t = static_cast<double>(largest_root_bisection(kCurvatureCubic, chi));
    report.details.r = static_cast<double>(largest_root_bisection(kPriorCubic, chi));
  } else {
    for (const char* name : {"cubic_r", "sqrt_r", "cubic_t", "sqrt_t"}) add(name, std::nullopt, kChi);
  }

  if (!nonpositive) {
    for (const char* name : {"girth_s", "girth_prior", "triangle_free"}) add(name, std::nullopt, kChi);
  } else if (!in.girth) {
    add("girth_s", std::nullopt, "needs a finite girth");
    add("girth_prior", std::nullopt, "needs a finite girth");
    add("triangle_free", std::nullopt, "needs a finite girth >= 4");
  } else {
    add("girth_s", girth_bound(delta, chi, *in.girth));
    add("girth_prior", prior_girth_bound(delta, chi, *in.girth));
    report.details.s = girth_s(chi, *in.girth);
    if (*in.girth >= 4) {
      add("triangle_free", triangle_free_bound(delta, chi));
    } else {
      add("triangle_free", std::nullopt, "graph has triangles");
    }
  }

  if (!nonpositive || !in.n) {
    add("order_c", std::nullopt, nonpositive ? "needs n" : kChi);
    for (const auto& t : kOrderThresholds) add("order_d" + std::to_string(t.d), std::nullopt, nonpositive ? "needs n" : kChi);
  } else {
    add("order_c", order_bound(delta, chi, *in.n));
    report.details.c_order = order_c(chi, *in.n);
    for (const auto& t : kOrderThresholds) {
      const std::string name = "order_d" + std::to_string(t.d);
      if (*in.n >= -t.d * chi) {
        add(name, delta + t.constant);
      } else {
        add(name, std::nullopt, "n below -" + std::to_string(t.d) + "chi");
      }
    }
  }

  if (!nonpositive || !in.m) {
    add("size_c", std::nullopt, nonpositive ? "needs m" : kChi);
    for (const auto& t : kSizeThresholds) add(size_threshold_name(t), std::nullopt, nonpositive ? "needs m" : kChi);
  } else {
    auto c = size_bound(delta, chi, *in.m);
    add("size_c", c, "needs m > -3chi");
    if (c) report.details.c_size = size_c(chi, *in.m);
    for (const auto& t : kSizeThresholds) {
      if (t.q * *in.m > -t.p * chi) {
        add(size_threshold_name(t), delta + t.constant);
      } else {
        add(size_threshold_name(t), std::nullopt, "m at or below the threshold");
      }
    }
  }

  if (in.n && in.h && in.k && *in.h >= 1) {
    for (auto& b : large_order_genus_bounds(delta, *in.n, *in.h, *in.k)) {
      add(b.name, b.applies ? std::optional{b.value} : std::nullopt, "needs " + b.condition);
    }
  } else {
    const char* reason = (in.h && *in.h == 0) ? "needs orientable genus >= 1" : "needs n, h and k";
    for (const char* name : {"large_order_ln2_h", "large_order_ln_h", "large_order_h", "large_order_ln2_k",
                             "large_order_ln_k", "large_order_k"}) {
      add(name, std::nullopt, reason);
    }
  }
  return report;
}

}  // namespace bondlab::bounds
