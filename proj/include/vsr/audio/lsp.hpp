// vsr/audio/lsp.hpp

// Copyright 2026  VSR Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABILITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef VSR_AUDIO_LSP_HPP_
#define VSR_AUDIO_LSP_HPP_

#include <algorithm>
#include <cmath>
#include <vector>

#include "vsr/audio/lpc.hpp"
#include "vsr/common.hpp"

namespace vsr::audio {

/// Line-spectrum-pair form of an LpcFrame: the unit-circle root angles of the
/// symmetric/antisymmetric split of A(z), strictly increasing in (0, pi).
/// Silent frames carry all-zero freqs by convention.
struct LspFrame {
  double gain = 0.0;
  std::vector<double> freqs;
  bool is_silent = false;

  int order() const { return int(freqs.size()); }
};

namespace detail {

// Symmetric/antisymmetric split of A(z) = 1 + sum a_k z^-k:
//   P(z) = A(z) + z^-(P+1) A(1/z),  Q(z) = A(z) - z^-(P+1) A(1/z).
inline void sum_difference_polynomials(const std::vector<double> &a,
                                       std::vector<double> *p,
                                       std::vector<double> *q) {
  const size_t order = a.size();
  std::vector<double> full(order + 2, 0.0);
  full[0] = 1.0;
  for (size_t i = 0; i < order; ++i) full[i + 1] = a[i];
  p->assign(order + 2, 0.0);
  q->assign(order + 2, 0.0);
  for (size_t i = 0; i <= order + 1; ++i) {
    (*p)[i] = full[i] + full[order + 1 - i];
    (*q)[i] = full[i] - full[order + 1 - i];
  }
}

// Synthetic division by (1 + s z^-1) or, with `quadratic`, by (1 - z^-2).
// The remainder is known to vanish for the polynomials handled here.
inline std::vector<double> deflate(const std::vector<double> &c, int s,
                                   bool quadratic = false) {
  std::vector<double> d(c.size() - (quadratic ? 2 : 1), 0.0);
  if (quadratic) {
    for (size_t i = 0; i < d.size(); ++i)
      d[i] = c[i] + (i >= 2 ? d[i - 2] : 0.0);
  } else {
    for (size_t i = 0; i < d.size(); ++i)
      d[i] = c[i] - double(s) * (i >= 1 ? d[i - 1] : 0.0);
  }
  return d;
}

// A real symmetric polynomial of even degree 2M evaluates on the unit circle
// as e^{-jMw} * G(cos w) with G a degree-M Chebyshev series:
//   G(x) = d[M] + 2 * sum_{k=1..M} d[M-k] T_k(x).
// Clenshaw recurrence on the series coefficients.
struct ChebyshevSeries {
  std::vector<double> coef;  // c[0..M], c[0] = d[M], c[k] = 2 d[M-k]

  static ChebyshevSeries from_symmetric(const std::vector<double> &d) {
    const size_t m = (d.size() - 1) / 2;
    ChebyshevSeries s;
    s.coef.assign(m + 1, 0.0);
    s.coef[0] = d[m];
    for (size_t k = 1; k <= m; ++k) s.coef[k] = 2.0 * d[m - k];
    return s;
  }

  double eval_cos(double x) const {
    double b1 = 0.0, b2 = 0.0;
    for (size_t k = coef.size() - 1; k >= 1; --k) {
      const double b0 = 2.0 * x * b1 - b2 + coef[k];
      b2 = b1;
      b1 = b0;
    }
    return x * b1 - b2 + coef[0];
  }

  double eval_omega(double w) const { return eval_cos(std::cos(w)); }
};

inline double bisect_root(const ChebyshevSeries &s, double lo, double hi,
                          double flo, double tol) {
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    const double fmid = s.eval_omega(mid);
    if ((fmid <= 0.0) == (flo <= 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// All roots of G in (0, pi) found by grid scan + bisection.  The grid is
// refined when fewer sign changes than `expected` show up.
inline bool isolate_roots(const ChebyshevSeries &s, int expected,
                          int base_grid, double tol,
                          std::vector<double> *roots) {
  for (int grid = base_grid; grid <= base_grid * 64; grid *= 4) {
    roots->clear();
    double prev_w = 0.0;
    double prev_v = s.eval_omega(prev_w);
    for (int i = 1; i <= grid; ++i) {
      const double w = M_PI * double(i) / double(grid);
      const double v = s.eval_omega(w);
      if ((v <= 0.0) != (prev_v <= 0.0))
        roots->push_back(bisect_root(s, prev_w, w, prev_v, tol));
      prev_w = w;
      prev_v = v;
    }
    if (int(roots->size()) == expected) return true;
  }
  return false;
}

}  // namespace detail

constexpr double kLspBisectionTol = 1e-10;

/// Converts a stable (or silent) LpcFrame to its line-spectrum-pair form.
/// Roots are isolated on a 64*P grid (refined on demand) and bisected to
/// 1e-10; P- and Q-roots of a stable filter strictly interleave, P-root
/// first.
inline LspFrame lpc_to_lsp(const LpcFrame &lpc) {
  LspFrame out;
  out.gain = lpc.gain;
  out.is_silent = lpc.is_silent;
  const int order = lpc.order();
  out.freqs.assign(size_t(order), 0.0);
  if (lpc.is_silent) return out;

  std::vector<double> p, q;
  detail::sum_difference_polynomials(lpc.coeffs, &p, &q);
  if (order % 2 == 0) {
    p = detail::deflate(p, +1);  // divide out the root at z = -1
    q = detail::deflate(q, -1);  // divide out the root at z = +1
  } else {
    q = detail::deflate(q, 0, /*quadratic=*/true);  // roots at z = +-1
  }
  const auto sp = detail::ChebyshevSeries::from_symmetric(p);
  const auto sq = detail::ChebyshevSeries::from_symmetric(q);
  const int np = (order + 1) / 2;
  const int nq = order / 2;

  std::vector<double> proots, qroots;
  const int grid = 64 * order;
  if (!detail::isolate_roots(sp, np, grid, kLspBisectionTol, &proots) ||
      !detail::isolate_roots(sq, nq, grid, kLspBisectionTol, &qroots))
    throw_error(ErrorCode::RootIsolationFailure,
                string_printf("expected %d+%d unit-circle roots, found %zu+%zu",
                              np, nq, proots.size(), qroots.size()));

  // Merge with the alternation P, Q, P, Q, ...
  for (int i = 0; i < order; ++i)
    out.freqs[size_t(i)] =
        (i % 2 == 0) ? proots[size_t(i / 2)] : qroots[size_t(i / 2)];
  for (int i = 0; i + 1 < order; ++i)
    if (!(out.freqs[size_t(i)] < out.freqs[size_t(i + 1)]))
      throw_error(ErrorCode::RootIsolationFailure,
                  "P/Q roots do not interleave");
  return out;
}

namespace detail {

// Multiplies acc by (1 - 2 cos(w) z^-1 + z^-2).
inline void multiply_quadratic(std::vector<double> *acc, double w) {
  const double c = -2.0 * std::cos(w);
  std::vector<double> next(acc->size() + 2, 0.0);
  for (size_t i = 0; i < acc->size(); ++i) {
    next[i] += (*acc)[i];
    next[i + 1] += c * (*acc)[i];
    next[i + 2] += (*acc)[i];
  }
  *acc = std::move(next);
}

// Multiplies acc by (1 + s z^-1).
inline void multiply_linear(std::vector<double> *acc, int s) {
  std::vector<double> next(acc->size() + 1, 0.0);
  for (size_t i = 0; i < acc->size(); ++i) {
    next[i] += (*acc)[i];
    next[i + 1] += double(s) * (*acc)[i];
  }
  *acc = std::move(next);
}

}  // namespace detail

/// Rebuilds A(z) = (P(z) + Q(z)) / 2 from the root-angle products.  Stable
/// by construction for strictly ordered freqs in (0, pi).
inline LpcFrame lsp_to_lpc(const LspFrame &lsp) {
  LpcFrame out;
  out.gain = lsp.gain;
  out.is_silent = lsp.is_silent;
  const int order = lsp.order();
  out.coeffs.assign(size_t(order), 0.0);
  if (lsp.is_silent) return out;

  double prev = 0.0;
  for (double w : lsp.freqs) {
    if (!(w > prev && w < M_PI))
      throw_error(ErrorCode::InvalidOrdering,
                  "freqs must be strictly increasing in (0, pi)");
    prev = w;
  }

  std::vector<double> p{1.0}, q{1.0};
  for (int i = 0; i < order; ++i) {
    if (i % 2 == 0)
      detail::multiply_quadratic(&p, lsp.freqs[size_t(i)]);
    else
      detail::multiply_quadratic(&q, lsp.freqs[size_t(i)]);
  }
  if (order % 2 == 0) {
    detail::multiply_linear(&p, +1);
    detail::multiply_linear(&q, -1);
  } else {
    // multiply q by (1 - z^-2)
    std::vector<double> next(q.size() + 2, 0.0);
    for (size_t i = 0; i < q.size(); ++i) {
      next[i] += q[i];
      next[i + 2] -= q[i];
    }
    q = std::move(next);
  }
  for (int i = 1; i <= order; ++i)
    out.coeffs[size_t(i - 1)] = 0.5 * (p[size_t(i)] + q[size_t(i)]);
  return out;
}

/// Optional uniform quantizer for LSP frequencies (bits per frequency over
/// (0, pi)); off by default in the pipeline.
inline LspFrame quantize_lsp(const LspFrame &in, int bits) {
  if (bits <= 0 || in.is_silent) return in;
  LspFrame out = in;
  const double levels = double((1 << bits) - 1);
  for (double &w : out.freqs) {
    const double q = std::round(w / M_PI * levels) / levels * M_PI;
    w = std::min(std::max(q, 1e-9), M_PI - 1e-9);
  }
  // Re-impose strict ordering wrecked by coarse quantization.
  for (size_t i = 1; i < out.freqs.size(); ++i)
    if (out.freqs[i] <= out.freqs[i - 1])
      out.freqs[i] = std::nextafter(out.freqs[i - 1], M_PI);
  return out;
}

}  // namespace vsr::audio

#endif  // VSR_AUDIO_LSP_HPP_
