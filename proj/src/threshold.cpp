#include "isetlab/threshold.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "isetlab/decomposition.hpp"
#include "isetlab/error.hpp"

namespace isetlab {

namespace {

void check_params(std::int64_t n, int k, int t) {
  if (t < 1 || k < t + 2 || n < t + 2) {
    throw ParameterError("threshold inequality needs t >= 1, k >= t+2, n >= t+2; got n=" + std::to_string(n) +
                         " k=" + std::to_string(k) + " t=" + std::to_string(t));
  }
}

BigInt prefix_sum(const std::vector<BigInt>& row, std::int64_t m) {
  BigInt total = 0;
  for (std::int64_t j = 0; j <= m && j < static_cast<std::int64_t>(row.size()); ++j) total += row[j];
  return total;
}

BigInt rhs_from_row(const std::vector<BigInt>& shifted, int k, int t) {
  // shifted = C(n-t-2, 0..k-t-1); C(n-t-1, k-t-1) follows from Pascal's rule.
  const std::int64_t m = k - t - 1;
  const BigInt top = shifted[m] + (m >= 1 ? shifted[m - 1] : BigInt(0));
  return top + threshold_coefficient_a(t) * shifted[m] + threshold_coefficient_b(t) * prefix_sum(shifted, m - 1) +
         prefix_sum(shifted, m - 2);
}

}  // namespace

std::int64_t threshold_coefficient_a(std::int64_t t) { return ((t + 2) * (t + 1) - 4) / 2; }
std::int64_t threshold_coefficient_b(std::int64_t t) { return ((t + 3) * (t + 2) - 8) / 2; }

ThresholdVerdict eval_threshold_sides(std::int64_t n, int k, int t) {
  check_params(n, k, t);
  ThresholdVerdict v;
  v.n = n;
  v.k = k;
  v.t = t;
  if (n > static_cast<std::int64_t>(std::numeric_limits<int>::max())) {
    throw ParameterError("eval_threshold_sides: n too large");
  }
  v.lhs = ExactNat(eval_upper_layers_bound(static_cast<int>(n), k, t, t + 2));
  v.rhs = ExactNat(rhs_from_row(binom_row(n - t - 2, k - t - 1), k, t));
  v.holds = v.lhs <= v.rhs;
  return v;
}

ThresholdScanner::ThresholdScanner(int k, int t, std::int64_t start) : k_(k), t_(t), n_(start) {
  check_params(start, k, t);
  layer_weights_.assign(static_cast<std::size_t>(k - t - 1), BigInt{0});
  for (int l = t + 2; l <= k; ++l) {
    BigInt tail = 0;
    for (int i = t; i <= l; ++i) tail += binom(l, i).value();
    layer_weights_[static_cast<std::size_t>(k - l)] = BigInt(l) * l * ipow(k - t + 1, l - t - 1) * tail;
  }
  row_n_ = binom_row(start, k - t - 2);
  row_shifted_ = binom_row(start - t - 2, k - t - 1);
}

ThresholdVerdict ThresholdScanner::verdict() const {
  ThresholdVerdict v;
  v.n = n_;
  v.k = k_;
  v.t = t_;
  BigInt lhs = 0;
  BigInt running = 0;
  for (std::size_t j = 0; j < layer_weights_.size(); ++j) {
    running += row_n_[j];
    lhs += layer_weights_[j] * running;
  }
  v.lhs = ExactNat(std::move(lhs));
  v.rhs = ExactNat(rhs_from_row(row_shifted_, k_, t_));
  v.holds = v.lhs <= v.rhs;
  return v;
}

void ThresholdScanner::advance() {
  for (std::size_t j = row_n_.size(); j-- > 1;) row_n_[j] += row_n_[j - 1];
  for (std::size_t j = row_shifted_.size(); j-- > 1;) row_shifted_[j] += row_shifted_[j - 1];
  ++n_;
}

std::int64_t f_min(int k, int t, int confirm_window) {
  if (confirm_window < 0) throw ParameterError("f_min: confirm window must be non-negative");
  ThresholdScanner scan(k, t, k);
  std::int64_t run_start = -1;
  while (true) {
    if (scan.verdict().holds) {
      if (run_start < 0) run_start = scan.n();
      if (scan.n() - run_start == confirm_window) return run_start;
    } else {
      run_start = -1;
    }
    scan.advance();
  }
}

Rational epsilon_of(int k, int t) {
  if (t < 1 || k <= t + 2) throw ParameterError("epsilon_of: need t >= 1 and k >= t+3");
  return Rational(10 + t, 2 * (k - t - 2));
}

namespace {

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash != std::string::npos) {
      return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
    }
    const auto dot = text.find('.');
    if (dot == std::string::npos) return Rational(std::stoll(text));
    const std::string frac = text.substr(dot + 1);
    std::int64_t den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    const std::int64_t whole = dot == 0 ? 0 : std::stoll(text.substr(0, dot));
    const std::int64_t part = frac.empty() ? 0 : std::stoll(frac);
    return Rational(whole * den + (text[0] == '-' ? -part : part), den);
  } catch (const std::exception&) {
    throw ParameterError("not a rational number: '" + text + "'");
  }
}

}  // namespace

RegimeSpec parse_regime(const std::string& text) {
  const auto colon = text.find(':');
  const std::string kind = text.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : text.substr(colon + 1);
  if (kind == "const") {
    const int t = arg.empty() ? 1 : static_cast<int>(parse_rational(arg).numerator());
    if (t < 1) throw ParameterError("const regime needs t >= 1");
    return ConstantT{t};
  }
  if (arg.empty()) throw ParameterError("regime '" + kind + "' needs an argument, e.g. " + kind + ":1/4");
  const Rational value = parse_rational(arg);
  if (value <= 0) throw ParameterError("regime argument must be positive");
  if (kind == "power") return PowerT{value};
  if (kind == "linear") return LinearT{value};
  throw ParameterError("unknown regime '" + text + "' (expected const, power:E or linear:C)");
}

std::string regime_name(const RegimeSpec& spec) {
  if (const auto* c = std::get_if<ConstantT>(&spec)) return "const:" + std::to_string(c->t);
  if (const auto* p = std::get_if<PowerT>(&spec)) return "power:" + to_string(p->exponent);
  return "linear:" + to_string(std::get<LinearT>(spec).slope);
}

int regime_t(const RegimeSpec& spec, int k) {
  if (const auto* c = std::get_if<ConstantT>(&spec)) return c->t;
  double raw = 0;
  if (const auto* p = std::get_if<PowerT>(&spec)) {
    raw = std::pow(static_cast<double>(k), to_double(p->exponent));
  } else {
    raw = to_double(std::get<LinearT>(spec).slope) * k;
  }
  const auto rounded = static_cast<int>(std::llround(raw));
  return std::clamp(rounded, 1, std::max(1, k - 3));
}

std::vector<Rational> expected_exponents(const RegimeSpec& spec, int k) {
  if (const auto* c = std::get_if<ConstantT>(&spec)) return {Rational(3, 2) + epsilon_of(k, c->t)};
  if (const auto* p = std::get_if<PowerT>(&spec)) {
    const Rational e = p->exponent;
    const Rational quarter(1, 4);
    if (e < quarter) return {Rational(3, 2) + e};
    if (e > quarter) return {Rational(1) + 2 * e};
    return {Rational(3, 2) + e, Rational(1) + 2 * e};
  }
  return {Rational(3)};
}

std::vector<RegimePoint> fit_regime_exponent(const RegimeSpec& spec, const std::vector<int>& k_values,
                                             int confirm_window) {
  std::vector<RegimePoint> points;
  std::optional<std::size_t> previous;
  for (int k : k_values) {
    RegimePoint p;
    p.k = k;
    p.t = regime_t(spec, k);
    try {
      if (k < p.t + 3) throw ParameterError("k=" + std::to_string(k) + " below t+3 for t=" + std::to_string(p.t));
      p.expected = expected_exponents(spec, k);
      p.f_min = f_min(k, p.t, confirm_window);
    } catch (const ParameterError& e) {
      p.error = e.what();
    }
    if (p.f_min && previous && points[*previous].k != k) {
      const RegimePoint& prev = points[*previous];
      p.local_exponent = std::log(static_cast<double>(*p.f_min) / static_cast<double>(*prev.f_min)) /
                         std::log(static_cast<double>(k) / static_cast<double>(prev.k));
    }
    if (p.f_min) previous = points.size();
    points.push_back(std::move(p));
  }
  return points;
}

double to_double(const Rational& r) { return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator()); }

std::string to_string(const Rational& r) {
  std::ostringstream os;
  os << r.numerator();
  if (r.denominator() != 1) os << '/' << r.denominator();
  return os.str();
}

}  // namespace isetlab
