// Copyright 2026 The qising Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QISING_ISING_ORACLE_HPP_
#define QISING_ISING_ORACLE_HPP_

// Independent routes to the magnetization of a periodic 1-D Ising ring
//
//   H = -J sum_k s_k s_{k+1} - h sum_k s_k,   s_{N+1} = s_1.
//
// None of them uses the closed-form thermodynamic limit; they exist to check it.

#include <bit>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qising/errors.hpp"
#include "qising/ising_map.hpp"

namespace qising {

inline constexpr int kMaxEnumerationSites = 24;

struct ChainSpec {
  int N = 2;
  IsingParams ip;

  void validate() const {
    if (N < 2) throw ValidationError("N >= 2 violated");
    ip.validate();
  }
};

struct SampledEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::string rng = "mt19937_64";
};

namespace detail {

// Neumaier compensated sum.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace detail

// Exact average over all 2^N configurations.
inline double enumerate_magnetization(const ChainSpec& spec) {
  spec.validate();
  const int n = spec.N;
  if (n > kMaxEnumerationSites)
    throw ResourceError("exact enumeration limited to N <= " +
                        std::to_string(kMaxEnumerationSites));
  // Configurations collapse onto (broken bonds, down spins); bit 1 = spin down.
  const int width = n + 1;
  std::vector<std::uint64_t> hist(static_cast<std::size_t>(width * width), 0);
  const std::uint32_t mask = (1u << n) - 1u;
  for (std::uint32_t x = 0;; ++x) {
    const std::uint32_t rot = ((x << 1) | (x >> (n - 1))) & mask;
    const int broken = std::popcount(x ^ rot);
    const int down = std::popcount(x);
    ++hist[static_cast<std::size_t>(broken * width + down)];
    if (x == mask) break;
  }

  const auto exponent = [&](int broken, int down) {
    const double bonds = n - 2 * broken;
    const double spins = n - 2 * down;
    return spec.ip.beta * (spec.ip.J * bonds + spec.ip.h * spins);
  };
  double emax = -INFINITY;
  for (int b = 0; b < width; ++b)
    for (int d = 0; d < width; ++d)
      if (hist[static_cast<std::size_t>(b * width + d)] != 0)
        emax = std::max(emax, exponent(b, d));

  detail::CompensatedSum z;
  detail::CompensatedSum moment;
  for (int b = 0; b < width; ++b)
    for (int d = 0; d < width; ++d) {
      const auto c = hist[static_cast<std::size_t>(b * width + d)];
      if (c == 0) continue;
      const double w = static_cast<double>(c) * std::exp(exponent(b, d) - emax);
      z.add(w);
      moment.add(w * static_cast<double>(n - 2 * d) / n);
    }
  return moment.value() / z.value();
}

// Finite-N magnetization from Z = lambda_+^N + lambda_-^N of the symmetric
// transfer matrix [[e^{b(J+h)}, e^{-bJ}], [e^{-bJ}, e^{b(J-h)}]], as the
// derivative of (1/N) ln Z in beta*h. The derivative is a central finite
// difference with one Richardson step; everything runs in long double so
// that cancellation in the difference stays below 1e-12.
inline double transfer_matrix_finite(const ChainSpec& spec) {
  spec.validate();
  using ld = long double;
  const ld bj = static_cast<ld>(spec.ip.beta) * spec.ip.J;
  const int n = spec.N;
  const auto free_energy = [&](ld x) {
    const ld e_pos = std::exp(bj);
    const ld e_neg = std::exp(-bj);
    const ld trace = 2 * e_pos * std::cosh(x);  // lambda_+ + lambda_-
    const ld disc = std::sqrt(e_pos * e_pos * std::sinh(x) * std::sinh(x) +
                              e_neg * e_neg);
    const ld top = trace / 2 + disc;
    // |lambda_-| / lambda_+ = 1 - u, with u taken from whichever of
    // lambda_+ -+ lambda_- avoids cancellation. When lambda_- < 0 and N is
    // odd, 1 + (lambda_-/lambda_+)^N would otherwise lose all its digits.
    const bool negative = e_pos < e_neg;
    const ld u = negative ? trace / top : 2 * disc / top;
    const ld power = std::exp(n * std::log1p(-u));
    const ld corr = (negative && n % 2 == 1) ? std::log(-std::expm1(n * std::log1p(-u)))
                                             : std::log1p(power);
    return std::log(top) + corr / n;
  };
  const ld x0 = static_cast<ld>(spec.ip.beta) * spec.ip.h;
  const ld step = 1e-6L;
  const auto central = [&](ld d) {
    return (free_energy(x0 + d) - free_energy(x0 - d)) / (2 * d);
  };
  const ld coarse = central(step);
  const ld fine = central(step / 2);
  return static_cast<double>((4 * fine - coarse) / 3);
}

// Single-spin-flip Metropolis on the ring. `sweeps` counts all sweeps
// including `burn_in`; the standard error comes from batch means.
inline SampledEstimate metropolis_magnetization(const ChainSpec& spec,
                                                std::uint64_t sweeps,
                                                std::uint64_t burn_in,
                                                std::uint64_t seed,
                                                std::uint64_t batches = 100) {
  spec.validate();
  if (!(sweeps > burn_in))
    throw ValidationError("sweeps > burn_in violated");
  if (batches == 0) throw ValidationError("batches >= 1 violated");

  std::mt19937_64 rng(seed);
  // Bit-level conversions; the standard distributions are not portable.
  const auto uniform = [&rng] {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
  };
  const auto n = static_cast<std::uint64_t>(spec.N);

  std::vector<int> spin(n);
  long long total = 0;
  for (auto& s : spin) {
    s = (rng() >> 63) ? 1 : -1;
    total += s;
  }

  // Acceptance probability indexed by [spin == +1][(neighbour sum + 2) / 2].
  double accept[2][3];
  for (int si = 0; si < 2; ++si)
    for (int k = 0; k < 3; ++k) {
      const double s = si ? 1.0 : -1.0;
      const double nb = 2.0 * k - 2.0;
      const double delta = 2 * s * (spec.ip.J * nb + spec.ip.h);
      accept[si][k] = delta <= 0 ? 1.0 : std::exp(-spec.ip.beta * delta);
    }

  const std::uint64_t measured = sweeps - burn_in;
  const std::uint64_t nb = std::min(batches, measured);
  const std::uint64_t batch_len = measured / nb;
  std::vector<double> batch_mean(nb, 0.0);

  for (std::uint64_t sweep = 0; sweep < burn_in + nb * batch_len; ++sweep) {
    for (std::uint64_t step = 0; step < n; ++step) {
      const std::uint64_t k = rng() % n;
      const int left = spin[(k + n - 1) % n];
      const int right = spin[(k + 1) % n];
      const double p = accept[spin[k] > 0][(left + right + 2) / 2];
      if (p >= 1.0 || uniform() < p) {
        total -= 2 * spin[k];
        spin[k] = -spin[k];
      }
    }
    if (sweep >= burn_in) {
      const std::uint64_t idx = (sweep - burn_in) / batch_len;
      batch_mean[idx] += static_cast<double>(total) / static_cast<double>(n);
    }
  }

  detail::CompensatedSum grand;
  for (auto& b : batch_mean) {
    b /= static_cast<double>(batch_len);
    grand.add(b);
  }
  SampledEstimate out;
  out.seed = seed;
  out.samples = nb * batch_len;
  out.mean = grand.value() / static_cast<double>(nb);
  if (nb > 1) {
    double var = 0.0;
    for (double b : batch_mean) var += (b - out.mean) * (b - out.mean);
    var /= static_cast<double>(nb - 1);
    out.std_error = std::sqrt(var / static_cast<double>(nb));
  }
  return out;
}

}  // namespace qising

#endif  // QISING_ISING_ORACLE_HPP_
