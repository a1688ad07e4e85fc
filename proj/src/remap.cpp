#include "vmfp/remap.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

namespace vmfp {

namespace {

inline int wrap(int i, int n) {
  int r = i % n;
  return r < 0 ? r + n : r;
}

inline double cell(std::span<const double> f, int i, bool periodic) {
  const int n = static_cast<int>(f.size());
  if (periodic) return f[wrap(i, n)];
  return (i < 0 || i >= n) ? 0.0 : f[i];
}

inline void limit(Parabola& p) {
  const double f = p.mean;
  if ((p.pr - f) * (f - p.pl) <= 0.0) {  // cell is a local extremum
    p.pl = p.pr = f;
    return;
  }
  const double d = p.pr - p.pl;
  const double c = d * (f - 0.5 * (p.pl + p.pr));
  if (c > d * d / 6.0)
    p.pl = 3.0 * f - 2.0 * p.pr;
  else if (c < -d * d / 6.0)
    p.pr = 3.0 * f - 2.0 * p.pl;
}

}  // namespace

void ppm_reconstruct(std::span<const double> f, bool periodic,
                     std::vector<Parabola>& out) {
  const int n = static_cast<int>(f.size());
  out.resize(n);
  // edge value at i-1/2 via 4-point cubic, clipped to the bracketing cells
  auto edge = [&](int i) {
    const double fm2 = cell(f, i - 2, periodic), fm1 = cell(f, i - 1, periodic);
    const double f0 = cell(f, i, periodic), fp1 = cell(f, i + 1, periodic);
    double e = (7.0 * (fm1 + f0) - (fm2 + fp1)) / 12.0;
    const double lo = std::min(fm1, f0), hi = std::max(fm1, f0);
    return std::clamp(e, lo, hi);
  };
  double el = edge(0);
  for (int i = 0; i < n; ++i) {
    const double er = edge(i + 1);
    out[i] = {el, er, f[i]};
    limit(out[i]);
    el = er;
  }
}

void shift_periodic(std::span<const double> in, std::span<double> out,
                    double shift, double* edge_flux) {
  const int n = static_cast<int>(in.size());
  const double mf = std::floor(shift);
  const int m = static_cast<int>(mf);
  const double alpha = shift - mf;

  // contents moved right by m cells, exactly
  static thread_local std::vector<double> rot;
  rot.resize(n);
  for (int i = 0; i < n; ++i) rot[i] = in[wrap(i - m, n)];

  static thread_local std::vector<Parabola> rec;
  static thread_local std::vector<double> g;
  g.assign(n, 0.0);
  if (alpha != 0.0) {
    ppm_reconstruct(rot, true, rec);
    // mass leaving (rotated) cell i through its right edge
    for (int i = 0; i < n; ++i) g[i] = rot[i] - rec[i].integral(1.0 - alpha);
    for (int i = 0; i < n; ++i) out[i] = rot[i] + g[wrap(i - 1, n)] - g[i];
  } else {
    std::copy(rot.begin(), rot.end(), out.begin());
  }

  if (edge_flux) {
    // total mass through edge i+1/2 = whole upstream cells + fractional part
    for (int i = 0; i < n; ++i) {
      double whole = 0.0;
      if (m >= 0)
        for (int j = i - m + 1; j <= i; ++j) whole += in[wrap(j, n)];
      else
        for (int j = i + 1; j <= i - m; ++j) whole -= in[wrap(j, n)];
      edge_flux[i] += whole + g[i];
    }
  }
}

double remap_zeropad(std::span<const double> in, std::span<double> out,
                     std::span<const double> edges) {
  const int n = static_cast<int>(in.size());
  static thread_local std::vector<Parabola> rec;
  ppm_reconstruct(in, false, rec);

  static thread_local std::vector<double> prefix;
  prefix.resize(n + 1);
  prefix[0] = 0.0;
  for (int i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + in[i];

  auto P = [&](double s) {
    if (s <= 0.0) return 0.0;
    if (s >= static_cast<double>(n)) return prefix[n];
    const int k = std::min(static_cast<int>(std::floor(s)), n - 1);
    return prefix[k] + rec[k].integral(s - k);
  };

  double pl = P(edges[0]);
  for (int i = 0; i < n; ++i) {
    const double pr = P(edges[i + 1]);
    out[i] = pr - pl;
    pl = pr;
  }
  return prefix[n] - (P(edges[n]) - P(edges[0]));
}

double shift_zeropad(std::span<const double> in, std::span<double> out,
                     double shift) {
  const int n = static_cast<int>(in.size());
  const double mf = std::floor(shift);
  if (shift == mf) {  // bit-exact index move
    const int m = static_cast<int>(mf);
    double leak = 0.0;
    for (int j = 0; j < n; ++j) {
      const int i = j + m;
      if (i < 0 || i >= n) leak += in[j];
    }
    // copy order chosen so in-place use is safe
    if (m >= 0) {
      for (int i = n - 1; i >= 0; --i) {
        const int j = i - m;
        out[i] = (j >= 0 && j < n) ? in[j] : 0.0;
      }
    } else {
      for (int i = 0; i < n; ++i) {
        const int j = i - m;
        out[i] = (j >= 0 && j < n) ? in[j] : 0.0;
      }
    }
    return leak;
  }
  static thread_local std::vector<double> edges;
  const std::size_t ne = in.size() + 1;
  edges.resize(ne);
  for (std::size_t i = 0; i < ne; ++i) edges[i] = static_cast<double>(i) - shift;
  return remap_zeropad(in, out, edges);
}

}  // namespace vmfp
