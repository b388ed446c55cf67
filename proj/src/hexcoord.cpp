// Copyright (c) 2026 The hexfs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0.txt
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hexfs/hexcoord.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace hexfs {

namespace {

constexpr double kSqrt3 = 1.7320508075688772935;

// Lambda in the (t1, t2) parametrization is generated by (1, 1) and (2, -1),
// i.e. by the homogeneous vectors (1, 1, -2) and (2, -1, -1).
HomogeneousPoint lattice_vector(double a, double b) { return {a + 2.0 * b, a - b}; }

// Amount by which t violates the half-open inequalities (0 when inside).
double omega_violation(const HomogeneousPoint& t) {
  double v = 0.0;
  for (double c : {t.t1(), t.t2(), -t.t3()}) {
    if (c < -1.0) v = std::max(v, -1.0 - c);
    if (c >= 1.0) v = std::max(v, c - 1.0 + std::numeric_limits<double>::epsilon());
  }
  return v;
}

}  // namespace

HomogeneousPoint HomogeneousPoint::from_triple(double t1, double t2, double t3, double tol) {
  const double scale = std::max({1.0, std::abs(t1), std::abs(t2), std::abs(t3)});
  if (!(std::abs(t1 + t2 + t3) <= tol * scale)) {
    throw std::invalid_argument("HomogeneousPoint: coordinates do not sum to zero (sum = " +
                                std::to_string(t1 + t2 + t3) + ")");
  }
  return {t1, t2};
}

HomogeneousPoint from_plane(const PlanePoint& x) {
  return {-0.5 * x.x2 + 0.5 * kSqrt3 * x.x1, x.x2};
}

PlanePoint to_plane(const HomogeneousPoint& t) { return {(t.t1() - t.t3()) / kSqrt3, t.t2()}; }

double hex_norm(const HomogeneousPoint& t) {
  return std::max({std::abs(t.t1()), std::abs(t.t2()), std::abs(t.t3())});
}

bool in_omega(const HomogeneousPoint& t) {
  const double c3 = -t.t3();
  return -1.0 <= t.t1() && t.t1() < 1.0 && -1.0 <= t.t2() && t.t2() < 1.0 && -1.0 <= c3 &&
         c3 < 1.0;
}

bool in_lattice(const HomogeneousPoint& s, double tol) {
  const double a = (s.t1() + 2.0 * s.t2()) / 3.0;
  const double b = (s.t1() - s.t2()) / 3.0;
  return std::abs(a - std::round(a)) <= tol && std::abs(b - std::round(b)) <= tol;
}

HomogeneousPoint fold_to_omega(const HomogeneousPoint& t) {
  if (in_omega(t)) return t;

  // Coarse reduction to the nearest cell of the parallelogram lattice.
  const double a0 = std::round((t.t1() + 2.0 * t.t2()) / 3.0);
  const double b0 = std::round((t.t1() - t.t2()) / 3.0);
  const HomogeneousPoint base = t - lattice_vector(a0, b0);

  // The reduced point lies in the parallelogram |a|, |b| <= 1/2, which is covered
  // by Omega and its six neighbours; exactly one translate is in Omega.
  HomogeneousPoint best = base;
  double best_violation = std::numeric_limits<double>::infinity();
  for (int da = -1; da <= 1; ++da) {
    for (int db = -1; db <= 1; ++db) {
      const HomogeneousPoint cand = base - lattice_vector(da, db);
      if (in_omega(cand)) return cand;
      const double v = omega_violation(cand);
      if (v < best_violation) {
        best_violation = v;
        best = cand;
      }
    }
  }

  // Rounding placed every translate a few ulps outside; clamp the closest one.
  const double below_one = std::nextafter(1.0, 0.0);
  double t1 = std::clamp(best.t1(), -1.0, below_one);
  double t2 = std::clamp(best.t2(), -1.0, below_one);
  if (t1 + t2 >= 1.0) t2 = std::nextafter(1.0 - t1, -1.0);
  if (t1 + t2 < -1.0) t2 = -1.0 - t1;
  return {t1, t2};
}

double hex_distance_to_lattice(const HomogeneousPoint& t) { return hex_norm(fold_to_omega(t)); }

}  // namespace hexfs
