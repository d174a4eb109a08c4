// Copyright 2026 The netfunc Authors
//
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

// Times the OpenMP kernels against their serial references and insists the
// outputs are bitwise identical, which is the whole point of parallelizing
// over independent output rows / points only.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <vector>

#include "netfunc/matrix.hpp"
#include "netfunc/poly.hpp"
#include "netfunc/spectral.hpp"

namespace
{

using netfunc::Complex;
using netfunc::Matrix;
using netfunc::Polynomial;
using netfunc::RationalFunction;

double time_ms(const std::function<void()> & body, int reps = 3)
{
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    body();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

Matrix random_matrix(int n, std::mt19937 & rng)
{
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      m(i, j) = dist(rng);
    }
  }
  return m;
}

int g_failures = 0;

void report(const char * name, int size, double serial_ms, double omp_ms, bool identical)
{
  std::printf(
    "%-18s %6d %12.3f %12.3f %8.2fx %s\n", name, size, serial_ms, omp_ms,
    serial_ms / omp_ms, identical ? "identical" : "MISMATCH");
  if (!identical) {
    ++g_failures;
  }
}

void bench_matmul(std::mt19937 & rng)
{
  for (const int n : {96, 160, 256}) {
    const Matrix a = random_matrix(n, rng);
    const Matrix b = random_matrix(n, rng);
    Matrix serial;
    Matrix parallel;
    const double t_serial = time_ms([&] { serial = netfunc::matmul_serial(a, b); });
    const double t_omp = time_ms([&] { parallel = netfunc::matmul(a, b); });
    report("matmul", n, t_serial, t_omp, serial == parallel);
  }
}

void bench_faddeev(std::mt19937 & rng)
{
  for (const int n : {48, 80}) {
    // Laplacian-shaped input: off-diagonal weights, rows summing to zero.
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    Matrix l(n, n);
    for (int i = 0; i < n; ++i) {
      double row = 0.0;
      for (int j = 0; j < n; ++j) {
        if (i != j && dist(rng) < 0.3) {
          const double w = 0.5 + dist(rng);
          l(i, j) = -w;
          row += w;
        }
      }
      l(i, i) = row;
    }
    netfunc::ForestSeries serial;
    netfunc::ForestSeries parallel;
    const double t_serial = time_ms([&] { serial = netfunc::faddeev_leverrier_serial(l); });
    const double t_omp = time_ms([&] { parallel = netfunc::faddeev_leverrier(l); });
    report(
      "faddeev_leverrier", n, t_serial, t_omp,
      serial.char_poly == parallel.char_poly && serial.q == parallel.q);
  }
}

void bench_eval_grid(std::mt19937 & rng)
{
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> num(13);
  std::vector<double> den(14);
  for (double & c : num) {
    c = dist(rng);
  }
  for (double & c : den) {
    c = dist(rng);
  }
  den.back() = 1.0;
  const RationalFunction f{Polynomial(num), Polynomial(den)};
  for (const int n : {1 << 16, 1 << 18}) {
    std::vector<Complex> points(n);
    for (Complex & p : points) {
      p = Complex{dist(rng), dist(rng)};
    }
    std::vector<Complex> serial;
    std::vector<Complex> parallel;
    const double t_serial = time_ms([&] { serial = netfunc::eval_grid_serial(f, points); });
    const double t_omp = time_ms([&] { parallel = netfunc::eval_grid(f, points); });
    report("eval_grid", n, t_serial, t_omp, serial == parallel);
  }
}

}  // namespace

int main()
{
  std::mt19937 rng(12345);
  std::printf(
    "%-18s %6s %12s %12s %9s %s\n", "kernel", "size", "serial [ms]", "openmp [ms]",
    "speedup", "check");
  bench_matmul(rng);
  bench_faddeev(rng);
  bench_eval_grid(rng);
  return g_failures == 0 ? 0 : 1;
}
