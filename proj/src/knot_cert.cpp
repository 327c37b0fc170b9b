// Copyright 2026 The lattice-exp3 Authors
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

#include "lattice_exp3/knot_cert.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <thread>
#include <tuple>

#include "lattice_exp3/random.hpp"

namespace lattice_exp3 {

namespace {

constexpr double kMinSeparation = 1e-9;
constexpr double kMinCrossingAngle = 1e-3;
constexpr double kTriplePointTol = 1e-6;
constexpr double kNearTangencyTol = 1e-9;

struct Box3 {
  Vec3 lo, hi;
};

Box3 segment_box(const Vec3& a, const Vec3& b) {
  return {{std::min(a.x, b.x), std::min(a.y, b.y), std::min(a.z, b.z)},
          {std::max(a.x, b.x), std::max(a.y, b.y), std::max(a.z, b.z)}};
}

bool boxes_near(const Box3& p, const Box3& q, double margin) {
  return p.lo.x <= q.hi.x + margin && q.lo.x <= p.hi.x + margin &&
         p.lo.y <= q.hi.y + margin && q.lo.y <= p.hi.y + margin &&
         p.lo.z <= q.hi.z + margin && q.lo.z <= p.hi.z + margin;
}

// Distance between segments [p0, p1] and [q0, q1] (closest-point method).
double segment_distance(const Vec3& p0, const Vec3& p1, const Vec3& q0,
                        const Vec3& q1) {
  const Vec3 d1 = p1 - p0;
  const Vec3 d2 = q1 - q0;
  const Vec3 r = p0 - q0;
  const double a = dot(d1, d1);
  const double e = dot(d2, d2);
  const double f = dot(d2, r);
  const double c = dot(d1, r);
  const double b = dot(d1, d2);
  const double denom = a * e - b * b;
  double s = denom > 0.0 ? std::clamp((b * f - c * e) / denom, 0.0, 1.0) : 0.0;
  double t = (b * s + f) / e;
  if (t < 0.0) {
    t = 0.0;
    s = std::clamp(-c / a, 0.0, 1.0);
  } else if (t > 1.0) {
    t = 1.0;
    s = std::clamp((b - c) / a, 0.0, 1.0);
  }
  return norm((p0 + s * d1) - (q0 + t * d2));
}

struct P2 {
  double x, y;
};

double orient(P2 a, P2 b, P2 c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

double point_segment_distance(P2 p, P2 a, P2 b) {
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  const double len2 = dx * dx + dy * dy;
  double t = len2 > 0.0 ? ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return std::hypot(p.x - (a.x + t * dx), p.y - (a.y + t * dy));
}

Vec3 random_direction(Rng& rng) {
  const double z = rng.uniform(-1.0, 1.0);
  const double phi = rng.uniform(0.0, 2.0 * kPi);
  const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
  return {r * std::cos(phi), r * std::sin(phi), z};
}

struct RawCrossing {
  int over_segment;
  double over_param;
  int under_segment;
  double under_param;
  int sign;
  P2 where;
};

enum class ProjectionStatus { kOk, kNotGeneric };

// Projects along `dir`; on success fills `found` with the crossings.
ProjectionStatus try_projection(std::span<const Vec3> pts, Vec3 dir,
                                std::vector<RawCrossing>& found) {
  found.clear();
  dir = (1.0 / norm(dir)) * dir;
  const Vec3 helper = std::abs(dir.x) <= std::abs(dir.y) &&
                              std::abs(dir.x) <= std::abs(dir.z)
                          ? Vec3{1, 0, 0}
                          : (std::abs(dir.y) <= std::abs(dir.z) ? Vec3{0, 1, 0}
                                                                : Vec3{0, 0, 1});
  Vec3 e1 = cross(dir, helper);
  e1 = (1.0 / norm(e1)) * e1;
  const Vec3 e2 = cross(dir, e1);  // e1 x e2 = dir

  const int n = static_cast<int>(pts.size());
  std::vector<P2> flat(n);
  std::vector<double> depth(n);
  double min_x = INFINITY, max_x = -INFINITY, min_y = INFINITY,
         max_y = -INFINITY;
  for (int i = 0; i < n; ++i) {
    flat[i] = {dot(pts[i], e1), dot(pts[i], e2)};
    depth[i] = dot(pts[i], dir);
    min_x = std::min(min_x, flat[i].x);
    max_x = std::max(max_x, flat[i].x);
    min_y = std::min(min_y, flat[i].y);
    max_y = std::max(max_y, flat[i].y);
  }
  const double scale = std::max({max_x - min_x, max_y - min_y, 1e-300});
  const double near_tol = kNearTangencyTol * scale;
  const double sin_min = std::sin(kMinCrossingAngle);

  const auto next = [n](int i) { return (i + 1) % n; };
  for (int i = 0; i < n; ++i) {
    const P2 a = flat[i];
    const P2 b = flat[next(i)];
    const P2 c = flat[next(next(i))];
    const double len_ab = std::hypot(b.x - a.x, b.y - a.y);
    if (len_ab <= near_tol) return ProjectionStatus::kNotGeneric;
    // Consecutive segments folding back onto each other overlap in the
    // picture.
    const double len_bc = std::hypot(c.x - b.x, c.y - b.y);
    const double crs = (b.x - a.x) * (c.y - b.y) - (b.y - a.y) * (c.x - b.x);
    const double dt = (b.x - a.x) * (c.x - b.x) + (b.y - a.y) * (c.y - b.y);
    if (dt < 0.0 && std::abs(crs) <= sin_min * len_ab * len_bc) {
      return ProjectionStatus::kNotGeneric;
    }
  }

  struct Box2 {
    double x0, x1, y0, y1;
  };
  std::vector<Box2> boxes(n);
  for (int i = 0; i < n; ++i) {
    const P2 a = flat[i];
    const P2 b = flat[next(i)];
    boxes[i] = {std::min(a.x, b.x) - near_tol, std::max(a.x, b.x) + near_tol,
                std::min(a.y, b.y) - near_tol, std::max(a.y, b.y) + near_tol};
  }

  for (int i = 0; i < n; ++i) {
    for (int j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;  // adjacent through the closure
      const Box2& bi = boxes[i];
      const Box2& bj = boxes[j];
      if (bi.x1 < bj.x0 || bj.x1 < bi.x0 || bi.y1 < bj.y0 || bj.y1 < bi.y0) {
        continue;
      }
      const P2 p0 = flat[i], p1 = flat[next(i)];
      const P2 q0 = flat[j], q1 = flat[next(j)];
      if (point_segment_distance(q0, p0, p1) <= near_tol ||
          point_segment_distance(q1, p0, p1) <= near_tol ||
          point_segment_distance(p0, q0, q1) <= near_tol ||
          point_segment_distance(p1, q0, q1) <= near_tol) {
        return ProjectionStatus::kNotGeneric;
      }
      const double d1 = orient(p0, p1, q0);
      const double d2 = orient(p0, p1, q1);
      const double d3 = orient(q0, q1, p0);
      const double d4 = orient(q0, q1, p1);
      if ((d1 > 0.0) == (d2 > 0.0) || (d3 > 0.0) == (d4 > 0.0)) continue;

      const P2 dp{p1.x - p0.x, p1.y - p0.y};
      const P2 dq{q1.x - q0.x, q1.y - q0.y};
      const double crs = dp.x * dq.y - dp.y * dq.x;
      if (std::abs(crs) <= sin_min * std::hypot(dp.x, dp.y) *
                               std::hypot(dq.x, dq.y)) {
        return ProjectionStatus::kNotGeneric;
      }
      const double s = d3 / (d3 - d4);
      const double r = d1 / (d1 - d2);
      const double zp = depth[i] + s * (depth[next(i)] - depth[i]);
      const double zq = depth[j] + r * (depth[next(j)] - depth[j]);
      if (std::abs(zp - zq) <= kMinSeparation) {
        return ProjectionStatus::kNotGeneric;
      }
      const P2 where{p0.x + s * dp.x, p0.y + s * dp.y};
      const bool p_over = zp > zq;
      const P2 over_dir = p_over ? dp : dq;
      const P2 under_dir = p_over ? dq : dp;
      const int sign =
          over_dir.x * under_dir.y - over_dir.y * under_dir.x > 0.0 ? 1 : -1;
      if (p_over) {
        found.push_back({i, s, j, r, sign, where});
      } else {
        found.push_back({j, r, i, s, sign, where});
      }
    }
  }

  for (std::size_t a = 0; a < found.size(); ++a) {
    for (std::size_t b = a + 1; b < found.size(); ++b) {
      if (std::hypot(found[a].where.x - found[b].where.x,
                     found[a].where.y - found[b].where.y) <=
          kTriplePointTol * scale) {
        return ProjectionStatus::kNotGeneric;
      }
    }
  }
  return ProjectionStatus::kOk;
}

PlanarDiagram diagram_from_crossings(const std::vector<RawCrossing>& raw) {
  struct Passage {
    double position;
    int raw_index;
    bool over;
  };
  std::vector<Passage> passages;
  for (int k = 0; k < static_cast<int>(raw.size()); ++k) {
    passages.push_back({raw[k].over_segment + raw[k].over_param, k, true});
    passages.push_back({raw[k].under_segment + raw[k].under_param, k, false});
  }
  std::sort(passages.begin(), passages.end(),
            [](const Passage& a, const Passage& b) {
              return a.position < b.position;
            });

  // Number crossings by first appearance along the curve.
  std::vector<int> relabel(raw.size(), -1);
  std::vector<int> signs;
  std::vector<GaussEntry> code;
  for (const Passage& p : passages) {
    if (relabel[p.raw_index] < 0) {
      relabel[p.raw_index] = static_cast<int>(signs.size());
      signs.push_back(raw[p.raw_index].sign);
    }
    code.push_back({relabel[p.raw_index], p.over});
  }
  return PlanarDiagram::from_gauss(std::move(code), std::move(signs));
}

// Tiny union-find over arc labels, reset per state.
class ArcUnion {
 public:
  explicit ArcUnion(int n) : parent_(n) {}
  void reset() { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  // Returns true if two components merged.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

Polyline3::Polyline3(std::vector<Vec3> points) : points_(std::move(points)) {
  const std::size_t n = points_.size();
  if (n < 8) {
    throw Error(ErrorCode::kInvalidPolyline,
                "polyline needs at least 8 vertices");
  }
  for (const Vec3& p : points_) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y) || !std::isfinite(p.z)) {
      throw Error(ErrorCode::kInvalidPolyline, "non-finite vertex");
    }
  }
  std::vector<Box3> boxes(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec3& a = points_[i];
    const Vec3& b = points_[(i + 1) % n];
    if (norm(b - a) <= kMinSeparation) {
      throw Error(ErrorCode::kInvalidPolyline,
                  "consecutive vertices coincide at index " +
                      std::to_string(i));
    }
    boxes[i] = segment_box(a, b);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;
      if (!boxes_near(boxes[i], boxes[j], kMinSeparation)) continue;
      if (segment_distance(points_[i], points_[(i + 1) % n], points_[j],
                           points_[(j + 1) % n]) <= kMinSeparation) {
        throw Error(ErrorCode::kInvalidPolyline,
                    "segments " + std::to_string(i) + " and " +
                        std::to_string(j) + " intersect");
      }
    }
  }
}

PlanarDiagram PlanarDiagram::from_gauss(std::vector<GaussEntry> code,
                                        std::vector<int> signs) {
  const int c = static_cast<int>(signs.size());
  if (static_cast<int>(code.size()) != 2 * c) {
    throw Error(ErrorCode::kInvalidArgument,
                "Gauss code must have two passages per crossing");
  }
  for (int s : signs) {
    if (s != 1 && s != -1) {
      throw Error(ErrorCode::kInvalidArgument, "crossing signs must be +-1");
    }
  }

  PlanarDiagram d;
  d.crossings_.resize(c);
  std::vector<int> over_seen(c, 0), under_seen(c, 0);
  for (int p = 0; p < 2 * c; ++p) {
    const GaussEntry& e = code[p];
    if (e.crossing < 0 || e.crossing >= c) {
      throw Error(ErrorCode::kInvalidArgument, "crossing index out of range");
    }
    const int in = (p + 2 * c - 1) % (2 * c);
    const int out = p;
    Crossing& x = d.crossings_[e.crossing];
    if (e.over) {
      ++over_seen[e.crossing];
      x.over_in = in;
      x.over_out = out;
    } else {
      ++under_seen[e.crossing];
      x.under_in = in;
      x.under_out = out;
    }
  }
  for (int k = 0; k < c; ++k) {
    if (over_seen[k] != 1 || under_seen[k] != 1) {
      throw Error(ErrorCode::kInvalidArgument,
                  "each crossing needs one over and one under passage");
    }
    d.crossings_[k].sign = signs[k];
    d.writhe_ += signs[k];
  }
  d.code_ = std::move(code);
  return d;
}

PlanarDiagram project_generic(const Polyline3& curve, std::uint64_t seed,
                              std::optional<Vec3> first_direction) {
  Rng rng(seed);
  std::vector<RawCrossing> found;
  bool saw_crowded = false;
  for (int attempt = 0; attempt < kMaxProjectionAttempts; ++attempt) {
    Vec3 dir = (attempt == 0 && first_direction) ? *first_direction
                                                 : random_direction(rng);
    if (norm(dir) == 0.0) continue;
    if (try_projection(curve.points(), dir, found) !=
        ProjectionStatus::kOk) {
      continue;
    }
    if (static_cast<int>(found.size()) > kMaxCrossings) {
      saw_crowded = true;
      continue;
    }
    return diagram_from_crossings(found);
  }
  if (saw_crowded) {
    throw Error(ErrorCode::kTooManyCrossings,
                "every generic projection had more than 24 crossings");
  }
  throw Error(ErrorCode::kNoGenericDirection,
              "no generic projection direction found");
}

LaurentPoly kauffman_bracket(const PlanarDiagram& d) {
  const int c = d.crossing_count();
  if (c > kMaxCrossings) {
    throw Error(ErrorCode::kTooManyCrossings,
                "bracket state sum limited to 24 crossings");
  }
  if (c == 0) return LaurentPoly::monomial(1, 0);

  // Arc pairs joined by the A- and B-smoothing of each crossing. The A
  // channel opens the regions swept when the over strand turns
  // counterclockwise.
  struct Joins {
    std::array<int, 4> a;
    std::array<int, 4> b;
  };
  std::vector<Joins> joins;
  for (const Crossing& x : d.crossings()) {
    if (x.sign > 0) {
      joins.push_back({{x.under_out, x.over_in, x.under_in, x.over_out},
                       {x.over_in, x.under_in, x.over_out, x.under_out}});
    } else {
      joins.push_back({{x.under_in, x.over_in, x.under_out, x.over_out},
                       {x.over_in, x.under_out, x.over_out, x.under_in}});
    }
  }

  const int arcs = 2 * c;
  const int loop_slots = c + 2;
  const std::uint64_t states = std::uint64_t{1} << c;
  const auto run = [&](std::uint64_t begin, std::uint64_t end,
                       std::vector<std::int64_t>& hist) {
    ArcUnion uf(arcs);
    for (std::uint64_t mask = begin; mask < end; ++mask) {
      uf.reset();
      int components = arcs;
      int a_count = 0;
      for (int k = 0; k < c; ++k) {
        const bool use_a = (mask >> k) & 1U;
        a_count += use_a;
        const auto& j = use_a ? joins[k].a : joins[k].b;
        components -= uf.unite(j[0], j[1]);
        components -= uf.unite(j[2], j[3]);
      }
      ++hist[a_count * loop_slots + components];
    }
  };

  const std::uint64_t hw = std::max(1U, std::thread::hardware_concurrency());
  const std::uint64_t workers =
      c >= 14 ? std::min<std::uint64_t>(hw, 16) : std::uint64_t{1};
  std::vector<std::vector<std::int64_t>> hists(
      workers, std::vector<std::int64_t>((c + 1) * loop_slots, 0));
  if (workers == 1) {
    run(0, states, hists[0]);
  } else {
    std::vector<std::thread> threads;
    const std::uint64_t chunk = (states + workers - 1) / workers;
    for (std::uint64_t w = 0; w < workers; ++w) {
      const std::uint64_t lo = w * chunk;
      const std::uint64_t hi = std::min(states, lo + chunk);
      threads.emplace_back([&, lo, hi, w] { run(lo, hi, hists[w]); });
    }
    for (auto& t : threads) t.join();
  }

  // Loop value d = -A^2 - A^-2; a state with a A-smoothings and L loops
  // contributes A^(a - (c - a)) d^(L - 1).
  const LaurentPoly loop_value{{2, -1}, {-2, -1}};
  std::vector<LaurentPoly> loop_powers{LaurentPoly::monomial(1, 0)};
  for (int i = 1; i <= c + 1; ++i) {
    loop_powers.push_back(loop_powers.back() * loop_value);
  }
  LaurentPoly bracket;
  for (int a = 0; a <= c; ++a) {
    for (int loops = 1; loops < loop_slots; ++loops) {
      std::int64_t count = 0;
      for (const auto& h : hists) count += h[a * loop_slots + loops];
      if (count == 0) continue;
      bracket += count * (LaurentPoly::monomial(1, 2 * a - c) *
                          loop_powers[loops - 1]);
    }
  }
  return bracket;
}

LaurentPoly jones(const PlanarDiagram& d) {
  const LaurentPoly bracket = kauffman_bracket(d);
  const int w = d.writhe();
  // (-A)^(-3w) = (-1)^w A^(-3w)
  const std::int64_t sign = (w % 2 == 0) ? 1 : -1;
  LaurentPoly v;
  for (const auto& [e, coef] : bracket.terms()) {
    const int shifted = e - 3 * w;
    if (shifted % 4 != 0) {
      throw Error(ErrorCode::kNonKnotDiagram,
                  "A-exponent not divisible by 4 in the Jones normalization");
    }
    v.add_term(-shifted / 4, sign * coef);
  }
  return v;
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kRightTrefoil: return "RightTrefoil";
    case Verdict::kLeftTrefoil: return "LeftTrefoil";
    case Verdict::kUnknot: return "Unknot";
    case Verdict::kOther: return "Other";
  }
  return "Other";
}

LaurentPoly right_trefoil_jones() { return LaurentPoly{{1, 1}, {3, 1}, {4, -1}}; }

Verdict classify_jones(const LaurentPoly& v) {
  if (v == LaurentPoly::monomial(1, 0)) return Verdict::kUnknot;
  const LaurentPoly right = right_trefoil_jones();
  if (v == right) return Verdict::kRightTrefoil;
  if (v == right.mirrored()) return Verdict::kLeftTrefoil;
  return Verdict::kOther;
}

Certificate certify(const Polyline3& curve, std::uint64_t seed) {
  const PlanarDiagram d = project_generic(curve, seed);
  Certificate out;
  out.jones = jones(d);
  out.verdict = classify_jones(out.jones);
  out.crossings = d.crossing_count();
  out.writhe = d.writhe();
  return out;
}

Verdict is_trefoil(const Polyline3& curve, std::uint64_t seed) {
  return certify(curve, seed).verdict;
}

}  // namespace lattice_exp3
