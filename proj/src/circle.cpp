#include "rotren/circle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace rotren {

namespace {

double wrap01(double x) {
  double r = std::fmod(x, 1.0);
  return r < 0 ? r + 1.0 : r;
}

// The two coordinate backends of the return-map scan. Rational rotations run
// on the 1/q lattice with exact integers; quadratic ones on doubles.
struct LatticeCoords {
  using Pos = long long;
  long long p, q;
  Pos total() const { return q; }
  Pos shift(long long k) const {
    return static_cast<long long>(static_cast<__int128>(k) * p % q);
  }
  static Pos eps() { return 0; }
};

struct RealCoords {
  using Pos = double;
  double theta;
  Pos total() const { return 1.0; }
  Pos shift(long long k) const { return std::fmod(static_cast<double>(k) * theta, 1.0); }
  static Pos eps() { return 1e-12; }
};

template <typename Pos>
struct RelBranch {
  Pos lo, hi;
  long long time;
};

// Peels the sector [0, L) into return branches: at step k the set of
// not-yet-returned points whose k-th rotation image lands back in the sector
// is removed and recorded with return time k.
template <typename Coords>
std::vector<RelBranch<typename Coords::Pos>> decompose(const Coords& co,
                                                       typename Coords::Pos L,
                                                       long long k_max) {
  using Pos = typename Coords::Pos;
  const Pos T = co.total();
  const Pos eps = Coords::eps();

  std::vector<std::pair<Pos, Pos>> remaining{{Pos(0), L}};
  std::vector<RelBranch<Pos>> out;

  for (long long k = 1; k <= k_max && !remaining.empty(); ++k) {
    Pos d = co.shift(k);
    std::pair<Pos, Pos> pieces[2];
    int n_pieces = 0;
    if (d < L) pieces[n_pieces++] = {Pos(0), L - d};
    if (d > Pos(0) && T - d < L) pieces[n_pieces++] = {T - d, L};

    for (int pi = 0; pi < n_pieces; ++pi) {
      Pos a = pieces[pi].first, b = pieces[pi].second;
      std::vector<std::pair<Pos, Pos>> next;
      for (auto [lo, hi] : remaining) {
        Pos ilo = std::max(lo, a), ihi = std::min(hi, b);
        if (ihi - ilo > eps) {
          out.push_back({ilo, ihi, k});
          if (ilo - lo > eps) next.push_back({lo, ilo});
          if (hi - ihi > eps) next.push_back({ihi, hi});
        } else {
          next.push_back({lo, hi});
        }
      }
      remaining = std::move(next);
    }
  }
  if (!remaining.empty()) {
    throw InconclusiveError("sector did not fully decompose within the step budget");
  }
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return x.lo < y.lo; });
  // glue float crumbs of the same branch back together
  std::vector<RelBranch<Pos>> merged;
  for (const auto& br : out) {
    if (!merged.empty() && merged.back().time == br.time &&
        br.lo - merged.back().hi <= Coords::eps()) {
      merged.back().hi = br.hi;
    } else {
      merged.push_back(br);
    }
  }
  return merged;
}

template <typename Pos>
void check_branch_shape(const std::vector<RelBranch<Pos>>& branches) {
  std::vector<long long> times;
  for (const auto& b : branches) times.push_back(b.time);
  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end()), times.end());
  if (times.size() > 2 || branches.size() > 2) {
    std::string msg = "first return produced " + std::to_string(branches.size()) +
                      " branches with times {";
    for (size_t i = 0; i < times.size(); ++i) {
      if (i) msg += ",";
      msg += std::to_string(times[i]);
    }
    msg += "}; expected at most two";
    throw DomainError(msg);
  }
}

// Step budget for the floating-point scan. The loop exits as soon as the
// sector is covered, so the cap only bounds pathological inputs.
constexpr long long kRealStepCap = 10'000'000;

struct LatticeSector {
  long long start, length;  // units of 1/q
};

// An arc whose endpoints are multiples of 1/q can be scanned exactly in
// lattice units. Off-lattice arcs fall back to the floating-point path.
bool snap_sector(const Arc& sector, long long q, LatticeSector& out) {
  double su = sector.start * static_cast<double>(q);
  double lu = sector.length * static_cast<double>(q);
  long long s = std::llround(su), l = std::llround(lu);
  if (std::abs(su - static_cast<double>(s)) > 1e-9 * static_cast<double>(q) ||
      std::abs(lu - static_cast<double>(l)) > 1e-9 * static_cast<double>(q) || l < 1 ||
      l > q) {
    return false;
  }
  out = {(s % q + q) % q, l};
  return true;
}

}  // namespace

std::vector<double> rotation_orbit(const RotationNumber& theta, long long n, double x0) {
  if (n < 1) throw DomainError("rotation_orbit needs n >= 1");
  std::vector<double> out;
  out.reserve(static_cast<size_t>(n));
  if (theta.is_rational()) {
    long long p = theta.num(), q = theta.den(), pos = 0;
    for (long long k = 0; k < n; ++k) {
      out.push_back(wrap01(x0 + static_cast<double>(pos) / static_cast<double>(q)));
      pos += p;
      if (pos >= q) pos -= q;
    }
    return out;
  }
  double tv = theta.value();
  double x = wrap01(x0);
  for (long long k = 0; k < n; ++k) {
    out.push_back(x);
    x += tv;
    if (x >= 1.0) x -= 1.0;
  }
  return out;
}

Arc fundamental_sector(const RotationNumber& theta) {
  if (theta.is_zero()) throw DomainError("fundamental sector is undefined at theta = 0");
  if (theta.is_rational()) {
    double p = static_cast<double>(theta.num()), q = static_cast<double>(theta.den());
    if (2 * theta.num() <= theta.den()) return Arc{0.0, p / q};
    return Arc{p / q, (q - p) / q};
  }
  RotationNumber can = theta.canonical();
  long long a1 = can.preperiod().empty() ? can.period().front() : can.preperiod().front();
  double tv = can.value();
  if (a1 >= 2) return Arc{0.0, tv};  // theta < 1/2
  return Arc{tv, 1.0 - tv};
}

FirstReturnData first_return(const RotationNumber& theta, const Arc& sector) {
  if (theta.is_zero()) throw DomainError("first_return is undefined at theta = 0");
  if (sector.length <= 0.0 || sector.length > 1.0) {
    throw DomainError("sector length must lie in (0, 1]");
  }

  FirstReturnData fr;
  fr.sector = sector;

  auto finish = [&](auto&& rel_branches, double rel_to_angle, double start_angle) {
    check_branch_shape(rel_branches);
    for (const auto& b : rel_branches) {
      ReturnBranch rb;
      rb.arc.start = wrap01(start_angle + static_cast<double>(b.lo) * rel_to_angle);
      rb.arc.length = static_cast<double>(b.hi - b.lo) * rel_to_angle;
      rb.time = b.time;
      fr.branches.push_back(rb);
    }
    if (fr.branches.size() == 1) {
      fr.degenerate = true;
      fr.b = fr.branches[0].time;
      fr.a = fr.b - 1;
      fr.cut = wrap01(start_angle);  // the zero-width branch sits on the boundary ray
    } else {
      fr.a = std::min(fr.branches[0].time, fr.branches[1].time);
      fr.b = std::max(fr.branches[0].time, fr.branches[1].time);
      fr.cut = fr.branches[1].arc.start;
    }
  };

  if (theta.is_rational()) {
    long long p = theta.num(), q = theta.den();
    LatticeSector ls;
    if (snap_sector(sector, q, ls)) {
      LatticeCoords co{p, q};
      auto rel = decompose(co, ls.length, q + 1);
      finish(rel, 1.0 / static_cast<double>(q),
             static_cast<double>(ls.start) / static_cast<double>(q));
    } else {
      RealCoords co{theta.value()};
      auto rel = decompose(co, sector.length, std::min<long long>(q + 1, kRealStepCap));
      finish(rel, 1.0, sector.start);
    }
    if (q >= 3) {
      fr.has_congruence = true;
      fr.congruence = return_times(p, q);
    }
    return fr;
  }

  RealCoords co{theta.value()};
  auto rel = decompose(co, sector.length, kRealStepCap);
  finish(rel, 1.0, sector.start);
  return fr;
}

InducedRotation induced_rotation_number(const RotationNumber& theta, long long q_probe) {
  if (q_probe < 2) throw DomainError("induced_rotation_number needs q_probe >= 2");
  Arc sector = fundamental_sector(theta);

  // Walk q_probe steps of the return map from the sector start and count the
  // winding. The return map is an orientation-preserving circle map of the
  // sector, so if the orbit closes after m steps with k wraps its rotation
  // number is exactly k/m, and otherwise the Poincare estimate w/n is off by
  // at most |u_n - u_0| / (n * L) < 1/n.
  long long wraps = 0;
  long long cycle_len = 0, cycle_wraps = 0;

  if (theta.is_rational()) {
    long long p = theta.num(), q = theta.den();
    LatticeSector ls;
    if (!snap_sector(sector, q, ls)) {
      throw DomainError("fundamental sector fell off the 1/q lattice");
    }
    LatticeCoords co{p, q};
    auto branches = decompose(co, ls.length, q + 1);
    long long u = 0;
    for (long long j = 0; j < q_probe; ++j) {
      long long t = -1;
      for (const auto& b : branches) {
        if (u >= b.lo && u < b.hi) {
          t = b.time;
          break;
        }
      }
      if (t < 0) throw InconclusiveError("return orbit left the branch decomposition");
      long long next =
          static_cast<long long>((static_cast<__int128>(u) + static_cast<__int128>(t) * p) % q);
      if (next >= ls.length) throw InconclusiveError("return orbit missed the sector");
      if (next < u) ++wraps;
      u = next;
      if (cycle_len == 0 && u == 0) {
        cycle_len = j + 1;
        cycle_wraps = wraps;
      }
    }
  } else {
    RealCoords co{theta.value()};
    auto branches = decompose(co, sector.length, kRealStepCap);
    double u = 0.0;
    for (long long j = 0; j < q_probe; ++j) {
      long long t = -1;
      for (const auto& b : branches) {
        if (u >= b.lo && u < b.hi) {
          t = b.time;
          break;
        }
      }
      if (t < 0) throw InconclusiveError("return orbit left the branch decomposition");
      double next = std::fmod(u + co.shift(t), 1.0);
      if (next >= sector.length) {
        if (next - sector.length > 1e-9) {
          throw InconclusiveError("return orbit missed the sector");
        }
        next = std::nextafter(sector.length, 0.0);
      }
      if (next < u) ++wraps;
      u = next;
    }
  }

  InducedRotation res;
  if (cycle_len > 0) {
    res.sample_points = cycle_len;
    res.value = RotationNumber::rational(cycle_wraps % cycle_len, cycle_len);
  } else {
    res.sample_points = q_probe;
    res.value = RotationNumber::rational(wraps % q_probe, q_probe);
  }
  return res;
}

TriangulationStats triangulation_stats(const RotationNumber& theta, long long p, long long q) {
  if (q < 1) throw DomainError("triangulation_stats needs q >= 1");
  bool ok = false;
  if (theta.is_rational() && theta.num() == p && theta.den() == q) {
    ok = true;
  } else {
    for (const Convergent& c : convergents(theta, q)) {
      if (c.p == p && c.q == q) {
        ok = true;
        break;
      }
    }
  }
  if (!ok) throw DomainError("p/q must be a convergent of theta");

  std::vector<double> gaps;
  if (theta.is_rational()) {
    long long P = theta.num(), Q = theta.den();
    std::vector<long long> pts;
    long long pos = 0;
    for (long long k = 0; k < q; ++k) {
      pts.push_back(pos);
      pos += P;
      if (pos >= Q) pos -= Q;
    }
    std::sort(pts.begin(), pts.end());
    for (size_t i = 0; i + 1 < pts.size(); ++i) {
      gaps.push_back(static_cast<double>(pts[i + 1] - pts[i]) / static_cast<double>(Q));
    }
    gaps.push_back(static_cast<double>(pts.front() + Q - pts.back()) / static_cast<double>(Q));
  } else {
    std::vector<double> pts = rotation_orbit(theta, q);
    std::sort(pts.begin(), pts.end());
    for (size_t i = 0; i + 1 < pts.size(); ++i) gaps.push_back(pts[i + 1] - pts[i]);
    gaps.push_back(pts.front() + 1.0 - pts.back());
  }

  TriangulationStats st;
  std::sort(gaps.begin(), gaps.end());
  st.min_arc = gaps.front();
  st.max_arc = gaps.back();
  st.ratio = st.max_arc / st.min_arc;
  st.distinct_gaps = 1;
  for (size_t i = 1; i < gaps.size(); ++i) {
    if (gaps[i] - gaps[i - 1] > 1e-8) st.distinct_gaps += 1;
  }
  return st;
}

ReturnTimeGrowth return_time_growth(const RotationNumber& theta, int n_max) {
  if (n_max < 1 || n_max > 80) throw DomainError("return_time_growth needs 1 <= n_max <= 80");
  if (theta.is_rational()) {
    throw DomainError("return_time_growth needs an eventually periodic irrational");
  }
  OrbitSignature sig = orbit_signature(theta, 1000);
  if (sig.kind != OrbitSignature::Kind::periodic) {
    throw DomainError("theta is not eventually periodic under renormalization");
  }

  ReturnTimeGrowth g;
  long long q_cap = 4'000'000'000'000'000'000LL / 4;
  std::vector<Convergent> cs = convergents(theta, q_cap);
  for (const Convergent& c : cs) {
    if (c.q < 3) continue;
    ReturnGrowthRow row;
    row.n = static_cast<int>(g.rows.size()) + 1;
    row.p = c.p;
    row.q = c.q;
    ReturnTimes rt = return_times(c.p, c.q);
    row.a = rt.a;
    row.b = rt.b;
    g.rows.push_back(row);
    if (row.n == n_max) break;
  }
  if (g.rows.size() >= 6) {
    const auto& last = g.rows.back();
    const auto& base = g.rows[g.rows.size() - 5];
    g.exponent_a = (std::log(static_cast<double>(last.a)) -
                    std::log(static_cast<double>(base.a))) / 4.0;
    g.exponent_b = (std::log(static_cast<double>(last.b)) -
                    std::log(static_cast<double>(base.b))) / 4.0;
  } else {
    g.exponent_a = std::numeric_limits<double>::quiet_NaN();
    g.exponent_b = std::numeric_limits<double>::quiet_NaN();
  }
  return g;
}

}  // namespace rotren
