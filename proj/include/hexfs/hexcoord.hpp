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

#pragma once

// Homogeneous coordinates on the plane t1 + t2 + t3 = 0 and the fundamental
// hexagon
//
//     Omega = { t : -1 <= t1, t2, -t3 < 1 }
//
// which tiles the plane under the translation lattice
//
//     Lambda = { s in Z^3 : s1 + s2 + s3 = 0, s1 = s2 = s3 (mod 3) }.
//
// A function is H-periodic when it is invariant under translations by Lambda.

namespace hexfs {

/// Cartesian coordinates of a point of the plane.
struct PlanePoint {
  double x1 = 0.0;
  double x2 = 0.0;
};

/// Point of the plane t1 + t2 + t3 = 0.
///
/// All three coordinates are stored; the third is always derived as
/// t3 = -t1 - t2 so the sum-zero invariant holds by construction.
class HomogeneousPoint {
public:
  static constexpr double kSumTolerance = 1e-12;

  constexpr HomogeneousPoint() = default;
  constexpr HomogeneousPoint(double t1, double t2) : t1_{t1}, t2_{t2}, t3_{-t1 - t2} {}

  /// Builds a point from an explicit triple. Throws std::invalid_argument when
  /// |t1 + t2 + t3| exceeds tol * max(1, |t1|, |t2|, |t3|).
  static HomogeneousPoint from_triple(double t1, double t2, double t3,
                                      double tol = kSumTolerance);

  constexpr double t1() const { return t1_; }
  constexpr double t2() const { return t2_; }
  constexpr double t3() const { return t3_; }

  /// (t1, t2, t3) -> (t2, t3, t1)
  constexpr HomogeneousPoint rotated() const { return {t2_, t3_}; }

  constexpr HomogeneousPoint operator-() const { return {-t1_, -t2_}; }
  constexpr HomogeneousPoint operator+(const HomogeneousPoint& o) const {
    return {t1_ + o.t1_, t2_ + o.t2_};
  }
  constexpr HomogeneousPoint operator-(const HomogeneousPoint& o) const {
    return {t1_ - o.t1_, t2_ - o.t2_};
  }
  constexpr HomogeneousPoint operator*(double s) const { return {s * t1_, s * t2_}; }

private:
  double t1_ = 0.0;
  double t2_ = 0.0;
  double t3_ = 0.0;
};

HomogeneousPoint from_plane(const PlanePoint& x);
PlanePoint to_plane(const HomogeneousPoint& t);

/// max(|t1|, |t2|, |t3|)
double hex_norm(const HomogeneousPoint& t);

/// Half-open membership: -1 <= t1 < 1, -1 <= t2 < 1, -1 <= -t3 < 1.
bool in_omega(const HomogeneousPoint& t);

/// True when s is a translation of the periodicity lattice (exact integer test
/// after rounding, with tolerance tol on the rounding residual).
bool in_lattice(const HomogeneousPoint& s, double tol = 1e-9);

/// Representative of t in Omega; t - fold_to_omega(t) lies in the lattice.
HomogeneousPoint fold_to_omega(const HomogeneousPoint& t);

/// min over lattice vectors s of hex_norm(t - s). Equals hex_norm(fold_to_omega(t))
/// because every other lattice point is at hex distance >= 1 from Omega.
double hex_distance_to_lattice(const HomogeneousPoint& t);

}  // namespace hexfs
