// Copyright 2026 The Kakeya-Fq Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Exact monomial counts and the multiplicity lower bound on Kakeya sets,
// plus floating-point estimates of the asymptotic constant.
//
// N_q(n, m) counts exponent vectors e in [0, q-1]^n with |e| < m q. A Kakeya
// set K in F_q^n satisfies C(m+n-1, n) |K| >= N_q(n, m) for every m >= 1;
// otherwise a nonzero polynomial vanishing to order m on K would exist and
// its top-degree part would vanish on all of F_q^n.

#ifndef KAKEYA_BOUNDS_HPP_
#define KAKEYA_BOUNDS_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace kakeya {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

inline BigInt ipow(const BigInt& base, unsigned e) {
  return boost::multiprecision::pow(base, e);
}

inline BigInt ceil_div(const Rational& r) {
  BigInt num = boost::multiprecision::numerator(r);
  BigInt den = boost::multiprecision::denominator(r);
  BigInt quot = num / den;
  if (quot * den < num) quot += 1;
  return quot;
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// Natural log of a positive big rational without overflowing doubles.
inline double log_of(const Rational& r) {
  auto log_big = [](const BigInt& v) {
    const std::size_t bits = boost::multiprecision::msb(v) + 1;
    if (bits <= 900) return std::log(v.convert_to<double>());
    const std::size_t shift = bits - 64;
    const BigInt top = v >> shift;
    return std::log(top.convert_to<double>()) +
           static_cast<double>(shift) * std::log(2.0);
  };
  if (r <= 0) throw std::domain_error("bounds: log of non-positive value");
  return log_big(boost::multiprecision::numerator(r)) -
         log_big(boost::multiprecision::denominator(r));
}

// Inclusion-exclusion over the variables that exceed q - 1; the sum over
// total degrees s < m q is folded with the hockey-stick identity into a
// single binomial per term.
inline BigInt count_Nq(unsigned n, std::uint64_t q, unsigned m) {
  if (n < 1) throw std::invalid_argument("bounds: n must be >= 1");
  if (m < 1) throw std::invalid_argument("bounds: m must be >= 1");
  if (q < 1) throw std::invalid_argument("bounds: q must be >= 1");
  const std::int64_t limit = static_cast<std::int64_t>(m) * q;  // |e| < limit
  const auto qi = static_cast<std::int64_t>(q);
  BigInt total = 0;
  for (unsigned j = 0; j <= n; ++j) {
    const std::int64_t rest = limit - static_cast<std::int64_t>(j) * qi;
    if (rest <= 0) break;
    const BigInt term = binomial(n, j) * binomial(rest + n - 1, n);
    if (j % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

struct BoundReport {
  std::uint64_t q = 0;
  unsigned n = 0;
  unsigned m = 0;
  BigInt N;
  BigInt denom;  // C(m+n-1, n), also the constraints per point
  Rational bound;
  BigInt bound_ceiling;

  const BigInt& per_point_constraints() const { return denom; }
};

inline BoundReport lemma_bound(unsigned n, std::uint64_t q, unsigned m) {
  BoundReport r;
  r.q = q;
  r.n = n;
  r.m = m;
  r.N = count_Nq(n, q, m);
  r.denom = binomial(static_cast<std::int64_t>(m) + n - 1, n);
  r.bound = Rational(r.N, r.denom);
  r.bound_ceiling = ceil_div(r.bound);
  return r;
}

// Smallest m in [1, m_cap] maximizing the bound.
inline BoundReport best_m(unsigned n, std::uint64_t q, unsigned m_cap) {
  if (m_cap < 1) throw std::invalid_argument("bounds: m_cap must be >= 1");
  BoundReport best = lemma_bound(n, q, 1);
  for (unsigned m = 2; m <= m_cap; ++m) {
    BoundReport r = lemma_bound(n, q, m);
    if (r.bound > best.bound) best = std::move(r);
  }
  return best;
}

// Closed-form presets. Each pairs the exact bound at a fixed m with the
// closed-form floor c0 * (c1 q)^n it certifies.
struct PresetReport {
  std::string name;
  BoundReport bound;
  Rational floor_exact;  // c0 (c1 q)^n as an exact rational
  double floor_float = 0.0;
  bool holds_exact = false;
};

inline PresetReport preset_quarter(unsigned n, std::uint64_t q) {
  PresetReport p;
  p.name = "c1=1/4 preset";  // c0 = 1, m = n
  p.bound = lemma_bound(n, q, n);
  p.floor_exact = Rational(ipow(BigInt(q), n), ipow(BigInt(4), n));
  p.floor_float = std::pow(static_cast<double>(q) / 4.0, n);
  p.holds_exact = p.bound.bound >= p.floor_exact;
  return p;
}

inline PresetReport preset_half(unsigned n, std::uint64_t q) {
  PresetReport p;
  p.name = "c1=1/2.6 preset";  // c0 = 1/2, m = ceil(n/2)
  p.bound = lemma_bound(n, q, (n + 1) / 2);
  // 1/2.6 = 5/13
  p.floor_exact = Rational(ipow(BigInt(5 * q), n), 2 * ipow(BigInt(13), n));
  p.floor_float = 0.5 * std::pow(static_cast<double>(q) / 2.6, n);
  p.holds_exact = p.bound.bound >= p.floor_exact;
  return p;
}

// Eulerian numbers A(n, 0..n-1).
inline std::vector<BigInt> eulerian(unsigned n) {
  if (n < 1 || n > 64) throw std::invalid_argument("bounds: eulerian needs 1 <= n <= 64");
  std::vector<BigInt> row{1};
  for (unsigned r = 2; r <= n; ++r) {
    std::vector<BigInt> next(r, 0);
    for (unsigned k = 0; k < r; ++k) {
      if (k < row.size()) next[k] += BigInt(k + 1) * row[k];
      if (k >= 1) next[k] += BigInt(r - k) * row[k - 1];
    }
    row = std::move(next);
  }
  return row;
}

// Exact Vol{x in [0,1]^n : sum x <= t} by the Irwin-Hall formula.
inline Rational region_volume_at(unsigned n, const Rational& t) {
  if (n < 1) throw std::invalid_argument("bounds: n must be >= 1");
  if (t <= 0) return 0;
  if (t >= n) return 1;
  const BigInt floor_t =
      boost::multiprecision::numerator(t) / boost::multiprecision::denominator(t);
  const auto top = floor_t.convert_to<unsigned>();
  // Work on a common denominator: t = P / D.
  const BigInt P = boost::multiprecision::numerator(t);
  const BigInt D = boost::multiprecision::denominator(t);
  BigInt sum = 0;
  for (unsigned j = 0; j <= top; ++j) {
    BigInt term = binomial(n, j) * ipow(P - BigInt(j) * D, n);
    if (j % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  BigInt fact = 1;
  for (unsigned i = 2; i <= n; ++i) fact *= i;
  return Rational(sum, ipow(D, n) * fact);
}

// The double alpha is taken as the exact dyadic rational it represents.
inline Rational exact_rational(double v) { return Rational(v); }

inline Rational region_volume(unsigned n, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("bounds: alpha must lie in [0, 1]");
  }
  return region_volume_at(n, exact_rational(alpha) * n);
}

// Integer thresholds only: Vol{sum x <= k} = (1/n!) sum_{j<k} A(n, j).
inline Rational region_volume_eulerian(unsigned n, unsigned k) {
  if (k >= n) return 1;
  const auto a = eulerian(n);
  BigInt sum = 0;
  for (unsigned j = 0; j < k; ++j) sum += a[j];
  BigInt fact = 1;
  for (unsigned i = 2; i <= n; ++i) fact *= i;
  return Rational(sum, fact);
}

struct MonteCarloEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
};

inline MonteCarloEstimate region_volume_monte_carlo(unsigned n, double alpha,
                                                    std::uint64_t samples,
                                                    std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double t = alpha * n;
  std::uint64_t hits = 0;
  for (std::uint64_t s = 0; s < samples; ++s) {
    double sum = 0.0;
    for (unsigned i = 0; i < n; ++i) sum += unit(rng);
    if (sum <= t) ++hits;
  }
  MonteCarloEstimate out;
  out.samples = samples;
  out.estimate = static_cast<double>(hits) / static_cast<double>(samples);
  out.std_error =
      std::sqrt(out.estimate * (1.0 - out.estimate) / static_cast<double>(samples));
  return out;
}

inline double binary_entropy(double x) {
  if (x <= 0.0 || x >= 1.0) return 0.0;
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

// 2^((1+a) H(1/(1+a))), the growth rate of C((1+a) n, n)^(1/n).
inline double entropy_factor(double alpha) {
  return std::exp2((1.0 + alpha) * binary_entropy(1.0 / (1.0 + alpha)));
}

struct LadderRung {
  unsigned n = 0;
  double log_volume = 0.0;
  double tau = 0.0;  // volume^(1/n)
};

struct AsymptoticReport {
  double alpha = 0.0;
  unsigned n_probe = 0;
  double tau_probe = 0.0;  // volume(n_probe)^(1/n_probe)
  double tau = 0.0;        // ladder extrapolation, clamped to [0, 1]
  double entropy_factor = 0.0;
  double c_alpha = 0.0;        // tau / entropy_factor
  double c_alpha_probe = 0.0;  // tau_probe / entropy_factor
  double log_n_coefficient = 0.0;
  std::vector<LadderRung> ladder;  // n = 8, 16, ..., n_probe
  bool monotone = true;            // tau_probe increasing along the ladder
  std::string method = "eulerian-exact";
};

namespace detail {

// Solves log V(n) = n*lambda + beta*log(n) + c through three rungs. The
// log(n) term absorbs the polynomial prefactor of the volume below the
// centre of the cube; above it the fit returns beta = 0 by itself.
inline void fit_ladder(const std::vector<std::pair<unsigned, double>>& pts,
                       double& lambda, double& beta) {
  double a[3][4];
  for (int i = 0; i < 3; ++i) {
    const double n = pts[i].first;
    a[i][0] = n;
    a[i][1] = std::log(n);
    a[i][2] = 1.0;
    a[i][3] = pts[i].second;
  }
  for (int col = 0; col < 3; ++col) {
    int piv = col;
    for (int r = col + 1; r < 3; ++r) {
      if (std::fabs(a[r][col]) > std::fabs(a[piv][col])) piv = r;
    }
    for (int c = 0; c < 4; ++c) std::swap(a[col][c], a[piv][c]);
    for (int r = 0; r < 3; ++r) {
      if (r == col) continue;
      const double f = a[r][col] / a[col][col];
      for (int c = col; c < 4; ++c) a[r][c] -= f * a[col][c];
    }
  }
  lambda = a[0][3] / a[0][0];
  beta = a[1][3] / a[1][1];
}

}  // namespace detail

inline AsymptoticReport c_alpha(double alpha, unsigned n_probe) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("bounds: alpha must lie in (0, 1]");
  }
  if (n_probe < 8) throw std::invalid_argument("bounds: n_probe must be >= 8");
  AsymptoticReport r;
  r.alpha = alpha;
  r.n_probe = n_probe;
  r.entropy_factor = entropy_factor(alpha);

  auto log_vol = [&](unsigned n) { return log_of(region_volume(n, alpha)); };

  for (unsigned n = 8; n < n_probe; n *= 2) {
    const double lv = log_vol(n);
    r.ladder.push_back({n, lv, std::exp(lv / n)});
  }
  const double lv_probe = log_vol(n_probe);
  r.ladder.push_back({n_probe, lv_probe, std::exp(lv_probe / n_probe)});
  for (std::size_t i = 1; i < r.ladder.size(); ++i) {
    if (r.ladder[i].tau < r.ladder[i - 1].tau) r.monotone = false;
  }

  r.tau_probe = r.ladder.back().tau;
  r.c_alpha_probe = r.tau_probe / r.entropy_factor;

  const unsigned quarter = n_probe / 4, half = n_probe / 2;
  std::vector<std::pair<unsigned, double>> pts{
      {quarter, log_vol(quarter)}, {half, log_vol(half)}, {n_probe, lv_probe}};
  double lambda = 0.0, beta = 0.0;
  detail::fit_ladder(pts, lambda, beta);
  r.log_n_coefficient = beta;
  r.tau = std::clamp(std::exp(lambda), 0.0, 1.0);
  r.c_alpha = r.tau / r.entropy_factor;
  return r;
}

}  // namespace kakeya

#endif  // KAKEYA_BOUNDS_HPP_
