#include "speclab/contour.hpp"

#include <cmath>
#include <cstring>
#include <limits>
#include <stdexcept>
#include <unordered_map>

namespace speclab {

namespace {

struct KeyHash {
  size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& k) const {
    return std::hash<std::uint64_t>()(k.first * 1099511628211ull ^ k.second);
  }
};

// Memoizing wrapper: contour refinement, quadrisection and Newton polishing
// revisit the same points constantly (shared cell edges, halved node
// spacings), so cache by exact bit pattern.
class CachedFn {
 public:
  explicit CachedFn(const Analytic& f) : f_(f) {}

  Complex operator()(Complex z) {
    std::pair<std::uint64_t, std::uint64_t> key;
    double re = z.real(), im = z.imag();
    std::memcpy(&key.first, &re, 8);
    std::memcpy(&key.second, &im, 8);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    Complex v = f_(z);
    if (cache_.size() < kCap) cache_.emplace(key, v);
    return v;
  }

 private:
  static constexpr size_t kCap = 1 << 22;
  const Analytic& f_;
  std::unordered_map<std::pair<std::uint64_t, std::uint64_t>, Complex, KeyHash> cache_;
};

Complex derivative_of(const std::function<Complex(Complex)>& f, Complex z, double fd_step_rel,
                      double h_cap = std::numeric_limits<double>::infinity()) {
  double h = std::min(fd_step_rel * (1.0 + std::abs(z)), h_cap);
  auto central = [&](double step) { return (f(z + step) - f(z - step)) / (2.0 * step); };
  Complex dh = central(h), dh2 = central(0.5 * h);
  return (4.0 * dh2 - dh) / 3.0;
}

ContourMoments moments_impl(const std::function<Complex(Complex)>& f,
                            const std::vector<Complex>& loop, double fd_step_rel,
                            double fd_cap = std::numeric_limits<double>::infinity()) {
  const size_t n = loop.size();
  std::vector<Complex> ratio(n);  // f'/f at each node
  ContourMoments m;
  m.min_abs = std::numeric_limits<double>::infinity();
  m.max_abs = 0.0;
  for (size_t i = 0; i < n; ++i) {
    Complex fz = f(loop[i]);
    double a = std::abs(fz);
    m.min_abs = std::min(m.min_abs, a);
    m.max_abs = std::max(m.max_abs, a);
    ratio[i] = a == 0.0 ? Complex(0.0, 0.0) : derivative_of(f, loop[i], fd_step_rel, fd_cap) / fz;
  }
  Complex s0{0.0, 0.0}, s1{0.0, 0.0}, s2{0.0, 0.0};
  for (size_t i = 0; i < n; ++i) {
    size_t j = (i + 1) % n;
    Complex dz = loop[j] - loop[i];
    Complex g0 = ratio[i], g1 = ratio[j];
    Complex z0 = loop[i], z1 = loop[j];
    s0 += 0.5 * (g0 + g1) * dz;
    s1 += 0.5 * (z0 * g0 + z1 * g1) * dz;
    s2 += 0.5 * (z0 * z0 * g0 + z1 * z1 * g1) * dz;
  }
  const Complex itwopi(0.0, 2.0 * PI);
  m.winding_raw = (s0 / itwopi).real();
  m.s1 = s1 / itwopi;
  m.s2 = s2 / itwopi;
  return m;
}

std::vector<Complex> rect_loop(Complex lo, Complex hi, int per_side) {
  std::vector<Complex> pts;
  pts.reserve(4 * per_side);
  Complex corners[4] = {lo, {hi.real(), lo.imag()}, hi, {lo.real(), hi.imag()}};
  for (int s = 0; s < 4; ++s) {
    Complex a = corners[s], b = corners[(s + 1) % 4];
    for (int j = 0; j < per_side; ++j)
      pts.push_back(a + (b - a) * (static_cast<double>(j) / per_side));
  }
  return pts;
}

struct StableMoments {
  ContourMoments m;
  int winding = 0;
};

// Raise the node count until the raw winding sits within winding_tol of an
// integer.  Multi-zero cells refine further, until two consecutive levels
// agree on the winding and place the centroid within a small fraction of the
// cell size of each other.  The trapezoid rule is only O(n^-2) on a rectangle
// (the corners break periodicity), so the agreement target must scale with
// the cell: everything downstream -- quadrisection, cluster exits -- is
// cell-relative anyway, and one Richardson step on the last two levels hands
// the cluster logic sharper moments than either level alone.
StableMoments stable_rect_moments(const std::function<Complex(Complex)>& f, Complex lo, Complex hi,
                                  int start_nodes, const ContourOptions& opts) {
  bool have_prev = false;
  int prev_w = 0;
  ContourMoments prev;
  bool have_raw = false;
  double prev_raw = 0.0;
  const double diam = std::abs(hi - lo);
  // A derivative stencil wider than the cell it probes reads garbage once the
  // quadrisection digs down to tiny cells; cap the step at a fraction of the
  // cell size.
  const double fd_cap = 0.02 * diam;
  for (int n = start_nodes; n <= opts.max_nodes; n *= 2) {
    ContourMoments m = moments_impl(f, rect_loop(lo, hi, n), opts.fd_step_rel, fd_cap);
    if (m.max_abs == 0.0 || m.min_abs < opts.f_floor * m.max_abs)
      throw std::runtime_error("find_zeros: contour passes through (or too near) a zero");
    double rounded = std::round(m.winding_raw);
    if (std::abs(m.winding_raw - rounded) <= opts.winding_tol) {
      have_raw = false;
      int w = static_cast<int>(rounded);
      if (w < 0)
        throw std::runtime_error("find_zeros: negative winding (pole inside the region?)");
      if (w <= 1) return {m, w};
      if (have_prev && prev_w == w) {
        Complex mu = m.s1 / static_cast<double>(w);
        Complex prev_mu = prev.s1 / static_cast<double>(w);
        if (std::abs(mu - prev_mu) <= opts.moment_refine_rel * diam) {
          ContourMoments out = m;
          out.s1 = (4.0 * m.s1 - prev.s1) / 3.0;
          out.s2 = (4.0 * m.s2 - prev.s2) / 3.0;
          return {out, w};
        }
      }
      have_prev = true;
      prev_w = w;
      prev = m;
    } else {
      // A zero sitting on (or hugging) the contour pins the raw winding near a
      // half-integer independently of the node count, while an under-resolved
      // winding moves 4x closer to an integer per doubling.  Stationary and
      // off-integer means more nodes cannot help; fail fast so the caller can
      // re-split along a different line.
      if (have_raw && std::abs(m.winding_raw - prev_raw) <= 0.25 * opts.winding_tol)
        throw std::runtime_error("find_zeros: winding pinned off-integer (zero on a cell edge?)");
      have_raw = true;
      prev_raw = m.winding_raw;
      have_prev = false;
    }
  }
  throw std::runtime_error("find_zeros: winding number did not stabilize under refinement");
}

Complex newton_polish(const std::function<Complex(Complex)>& f, Complex z0, Complex lo, Complex hi,
                      const ContourOptions& opts) {
  Complex z = z0;
  double diam = std::abs(hi - lo);
  for (int it = 0; it < opts.newton_cap; ++it) {
    Complex fz = f(z);
    if (fz == Complex(0.0, 0.0)) return z;
    Complex df = derivative_of(f, z, opts.fd_step_rel);
    if (df == Complex(0.0, 0.0))
      throw std::runtime_error("find_zeros: Newton hit a vanishing derivative");
    Complex dz = fz / df;
    z -= dz;
    // Leaving the cell by more than a cell width means the iteration ran away.
    if (z.real() < lo.real() - diam || z.real() > hi.real() + diam || z.imag() < lo.imag() - diam ||
        z.imag() > hi.imag() + diam)
      throw std::runtime_error("find_zeros: Newton escaped the search cell");
    if (std::abs(dz) <= opts.newton_rel_tol * (1.0 + std::abs(z))) return z;
  }
  throw std::runtime_error("find_zeros: Newton did not converge");
}

// Newton iteration on u = f / f', which has a simple zero wherever f has a
// zero of any multiplicity -- the workhorse for pinning down multiple zeros,
// where Newton on f itself only converges linearly and the moment spread
// never certifies anything at finite precision.
Complex newton_multiple(const std::function<Complex(Complex)>& f, Complex z0, Complex lo,
                        Complex hi, const ContourOptions& opts) {
  std::function<Complex(Complex)> u = [&](Complex w) {
    Complex fw = f(w);
    Complex dfw = derivative_of(f, w, opts.fd_step_rel);
    if (dfw == Complex(0.0, 0.0))
      throw std::runtime_error("find_zeros: f' vanished during cluster polish");
    return fw / dfw;
  };
  Complex z = z0;
  double diam = std::abs(hi - lo);
  for (int it = 0; it < opts.newton_cap; ++it) {
    Complex uz = u(z);
    if (uz == Complex(0.0, 0.0)) return z;
    Complex du = derivative_of(u, z, opts.fd_step_rel);
    if (du == Complex(0.0, 0.0))
      throw std::runtime_error("find_zeros: stationary ratio during cluster polish");
    Complex dz = uz / du;
    z -= dz;
    if (z.real() < lo.real() - diam || z.real() > hi.real() + diam || z.imag() < lo.imag() - diam ||
        z.imag() > hi.imag() + diam)
      throw std::runtime_error("find_zeros: cluster polish escaped the search cell");
    if (std::abs(dz) <= opts.newton_rel_tol * (1.0 + std::abs(z))) return z;
  }
  throw std::runtime_error("find_zeros: cluster polish did not converge");
}

// Winding number around a small circle, with the derivative stencil scaled to
// the radius.  Circles have no corners, so the trapezoid rule converges fast.
int small_circle_winding(const std::function<Complex(Complex)>& f, Complex center, double radius,
                         const ContourOptions& opts) {
  for (int n = 64; n <= opts.max_nodes; n *= 2) {
    std::vector<Complex> loop;
    loop.reserve(n);
    for (int j = 0; j < n; ++j) {
      double t = 2.0 * PI * j / n;
      loop.push_back(center + radius * Complex(std::cos(t), std::sin(t)));
    }
    ContourMoments m = moments_impl(f, loop, opts.fd_step_rel, 0.05 * radius);
    if (m.max_abs == 0.0 || m.min_abs < opts.f_floor * m.max_abs)
      throw std::runtime_error("find_zeros: certificate circle passes through a zero");
    double rounded = std::round(m.winding_raw);
    if (std::abs(m.winding_raw - rounded) <= opts.winding_tol) return static_cast<int>(rounded);
  }
  throw std::runtime_error("find_zeros: certificate winding did not stabilize");
}

// Split fractions tried in turn when a quadrisection line lands on a zero.
constexpr double kSplitFractions[] = {0.5, 0.53, 0.46, 0.57, 0.44, 0.61, 0.39};

void search(const std::function<Complex(Complex)>& f, Complex lo, Complex hi, int depth,
            const ContourOptions& opts, std::vector<ZeroCluster>& out) {
  int start_nodes = std::max(opts.min_nodes, opts.initial_nodes >> depth);
  StableMoments sm = stable_rect_moments(f, lo, hi, start_nodes, opts);
  const int w = sm.winding;
  if (w == 0) return;

  Complex mu = sm.m.s1 / static_cast<double>(w);
  if (w == 1) {
    out.push_back({newton_polish(f, mu, lo, hi, opts), 1});
    return;
  }
  double scale = 1.0 + std::abs(mu);
  double diam = std::abs(hi - lo);
  // Multiple zeros: first test the hypothesis that they sit at one point.
  // Newton on f/f' homes in on a multiple zero; a winding count on a small
  // circle around the result certifies that all w zeros live there.  Any
  // failure just falls through to subdivision.
  try {
    Complex zc = newton_multiple(f, mu, lo, hi, opts);
    double r = std::min(opts.cell_floor_rel * scale, 0.25 * diam);
    double edge = std::min(std::min(zc.real() - lo.real(), hi.real() - zc.real()),
                           std::min(zc.imag() - lo.imag(), hi.imag() - zc.imag()));
    if (edge > 2.0 * r && r > 100.0 * opts.newton_rel_tol * scale &&
        small_circle_winding(f, zc, r, opts) == w) {
      out.push_back({zc, w});
      return;
    }
  } catch (const std::runtime_error&) {
    // not a single cluster (or could not be certified); subdivide instead
  }
  // Accept as one cluster when the moment spread collapses
  // (sum (z_i - mu)^2 = s2 - s1^2/w), or when the cell cannot shrink further.
  double spread = std::sqrt(std::abs(sm.m.s2 - sm.m.s1 * sm.m.s1 / static_cast<double>(w)) /
                            static_cast<double>(w));
  if (spread <= opts.cluster_rms_rel * scale || diam <= opts.cell_floor_rel * scale ||
      depth >= opts.max_depth) {
    out.push_back({mu, w});
    return;
  }

  for (double frac : kSplitFractions) {
    double cx = lo.real() + frac * (hi.real() - lo.real());
    double cy = lo.imag() + frac * (hi.imag() - lo.imag());
    std::vector<ZeroCluster> collected;
    try {
      search(f, lo, {cx, cy}, depth + 1, opts, collected);
      search(f, {cx, lo.imag()}, {hi.real(), cy}, depth + 1, opts, collected);
      search(f, {lo.real(), cy}, {cx, hi.imag()}, depth + 1, opts, collected);
      search(f, {cx, cy}, hi, depth + 1, opts, collected);
    } catch (const std::runtime_error&) {
      continue;  // a split line grazed a zero; try the next fraction
    }
    int total = 0;
    for (const auto& z : collected) total += z.multiplicity;
    if (total != w) continue;  // a zero slipped through a seam; re-split
    out.insert(out.end(), collected.begin(), collected.end());
    return;
  }
  throw std::runtime_error("find_zeros: could not separate zeros by quadrisection");
}

}  // namespace

Complex fd_derivative(const Analytic& f, Complex z, double fd_step_rel) {
  return derivative_of(f, z, fd_step_rel);
}

ContourMoments contour_moments(const Analytic& f, const std::vector<Complex>& loop,
                               double fd_step_rel) {
  if (loop.size() < 3) throw std::invalid_argument("contour_moments: need a closed polyline");
  return moments_impl(f, loop, fd_step_rel);
}

std::vector<ZeroCluster> find_zeros(const Analytic& f, Complex lo, Complex hi,
                                    const ContourOptions& opts) {
  if (!(lo.real() < hi.real()) || !(lo.imag() < hi.imag()))
    throw std::invalid_argument("find_zeros: rectangle corners must satisfy lo < hi");
  CachedFn cached(f);
  std::function<Complex(Complex)> fc = [&cached](Complex z) { return cached(z); };
  // The root contour may sit on a zero.  Early retries nudge the rectangle by
  // float-level amounts (an unlucky node collision); later ones escalate
  // geometrically, because a zero pinned *on* the boundary only becomes
  // resolvable once its clearance exceeds a few node spacings at the node
  // cap.  The final attempt trades ~0.4% of window fuzz for an answer, which
  // is the documented semantics when a zero violates the clearance
  // precondition.
  double diam = std::abs(hi - lo);
  for (int attempt = 0; attempt <= opts.jitter_retries; ++attempt) {
    double eps = attempt == 0 ? 0.0 : diam * 4e-9 * std::pow(16.0, attempt - 1);
    std::vector<ZeroCluster> out;
    try {
      search(fc, lo - Complex(eps, eps), hi + Complex(eps, eps), 0, opts, out);
    } catch (const std::runtime_error&) {
      if (attempt == opts.jitter_retries) throw;
      continue;
    }
    // A multiple zero split across a seam comes back as coincident clusters
    // (one per side); fold those together so multiplicities read correctly.
    std::vector<ZeroCluster> merged;
    for (const auto& z : out) {
      bool folded = false;
      for (auto& m : merged) {
        if (std::abs(z.location - m.location) <=
            10.0 * opts.newton_rel_tol * (1.0 + std::abs(m.location))) {
          m.location = (m.location * static_cast<double>(m.multiplicity) +
                        z.location * static_cast<double>(z.multiplicity)) /
                       static_cast<double>(m.multiplicity + z.multiplicity);
          m.multiplicity += z.multiplicity;
          folded = true;
          break;
        }
      }
      if (!folded) merged.push_back(z);
    }
    return merged;
  }
  throw std::runtime_error("find_zeros: unreachable");
}

int winding_circle(const Analytic& f, Complex center, double radius, const ContourOptions& opts) {
  if (!(radius > 0.0)) throw std::invalid_argument("winding_circle: radius must be positive");
  CachedFn cached(f);
  std::function<Complex(Complex)> fc = [&cached](Complex z) { return cached(z); };
  for (int n = 4 * opts.initial_nodes; n <= 4 * opts.max_nodes; n *= 2) {
    std::vector<Complex> loop;
    loop.reserve(n);
    for (int j = 0; j < n; ++j) {
      double t = 2.0 * PI * j / n;
      loop.push_back(center + radius * Complex(std::cos(t), std::sin(t)));
    }
    ContourMoments m = moments_impl(fc, loop, opts.fd_step_rel);
    if (m.max_abs == 0.0 || m.min_abs < opts.f_floor * m.max_abs)
      throw std::runtime_error("winding_circle: contour passes through a zero");
    double rounded = std::round(m.winding_raw);
    if (std::abs(m.winding_raw - rounded) <= opts.winding_tol)
      return static_cast<int>(rounded);
  }
  throw std::runtime_error("winding_circle: winding number did not stabilize");
}

}  // namespace speclab
