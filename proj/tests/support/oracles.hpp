// tests/support/oracles.hpp

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

// Brute-force reference implementations used by tests only.  They stay
// deliberately independent of the code paths they check.

#ifndef VSR_TESTS_SUPPORT_ORACLES_HPP_
#define VSR_TESTS_SUPPORT_ORACLES_HPP_

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <complex>
#include <functional>
#include <vector>

namespace vsr_test {

// Roots of A(z) = 1 + a[0] z^-1 + ... + a[P-1] z^-P, i.e. of the monic
// polynomial z^P + a[0] z^{P-1} + ... + a[P-1], via companion-matrix
// eigenvalues.
inline std::vector<std::complex<double>> polynomial_roots(
    const std::vector<double> &a) {
  const int p = int(a.size());
  if (p == 0) return {};
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(p, p);
  for (int i = 1; i < p; ++i) m(i, i - 1) = 1.0;
  for (int i = 0; i < p; ++i) m(0, i) = -a[size_t(i)];
  Eigen::EigenSolver<Eigen::MatrixXd> es(m, /*computeEigenvectors=*/false);
  std::vector<std::complex<double>> roots(size_t(p));
  for (int i = 0; i < p; ++i) roots[size_t(i)] = es.eigenvalues()(i);
  return roots;
}

inline double max_root_magnitude(const std::vector<double> &a) {
  double mx = 0.0;
  for (const auto &r : polynomial_roots(a)) mx = std::max(mx, std::abs(r));
  return mx;
}

// Unit-circle root angles of A(z)'s symmetric/antisymmetric split, found by
// a fine-grid scan of the derotated complex polynomial values plus plain
// bisection.  Shares no code with the Chebyshev/Clenshaw implementation.
inline std::vector<double> lsp_oracle(const std::vector<double> &a) {
  const int order = int(a.size());
  std::vector<double> full(size_t(order) + 2, 0.0);
  full[0] = 1.0;
  for (int i = 0; i < order; ++i) full[size_t(i) + 1] = a[size_t(i)];

  auto derotated = [&](const std::vector<double> &c, double w) {
    // real part of e^{i deg w / 2} * sum c_k e^{-i k w}; real-valued for a
    // palindromic c (deg even), sign carries the root structure
    std::complex<double> acc(0.0, 0.0);
    const double half = double(c.size() - 1) / 2.0;
    for (size_t k = 0; k < c.size(); ++k)
      acc += c[k] * std::exp(std::complex<double>(0.0, (half - double(k)) * w));
    return acc.real();
  };

  // p/q with trivial roots divided out, computed by long division against
  // hand-rolled factors
  std::vector<double> p(full.size()), q(full.size());
  for (size_t i = 0; i < full.size(); ++i) {
    p[i] = full[i] + full[full.size() - 1 - i];
    q[i] = full[i] - full[full.size() - 1 - i];
  }
  auto divide = [](const std::vector<double> &c,
                   const std::vector<double> &f) {
    std::vector<double> rem = c;
    std::vector<double> out(c.size() - f.size() + 1, 0.0);
    for (size_t i = 0; i < out.size(); ++i) {
      out[i] = rem[i];
      for (size_t j = 0; j < f.size(); ++j) rem[i + j] -= out[i] * f[j];
    }
    return out;
  };
  if (order % 2 == 0) {
    p = divide(p, {1.0, 1.0});
    q = divide(q, {1.0, -1.0});
  } else {
    q = divide(q, {1.0, 0.0, -1.0});
  }

  auto scan = [&](const std::vector<double> &c) {
    std::vector<double> roots;
    const int grid = 1024 * std::max(order, 2);
    double pw = 0.0, pv = derotated(c, 0.0);
    for (int i = 1; i <= grid; ++i) {
      const double w = M_PI * double(i) / double(grid);
      const double v = derotated(c, w);
      if ((v <= 0.0) != (pv <= 0.0)) {
        double lo = pw, hi = w, flo = pv;
        for (int it = 0; it < 80; ++it) {
          const double mid = 0.5 * (lo + hi);
          const double fm = derotated(c, mid);
          if ((fm <= 0.0) == (flo <= 0.0)) {
            lo = mid;
            flo = fm;
          } else {
            hi = mid;
          }
        }
        roots.push_back(0.5 * (lo + hi));
      }
      pw = w;
      pv = v;
    }
    return roots;
  };

  std::vector<double> all;
  for (double w : scan(p)) all.push_back(w);
  for (double w : scan(q)) all.push_back(w);
  std::sort(all.begin(), all.end());
  return all;
}

// Central finite differences of a scalar function of a parameter vector.
inline std::vector<double> numeric_gradient(
    const std::function<double(const std::vector<double> &)> &f,
    std::vector<double> x, double h = 1e-5) {
  std::vector<double> g(x.size());
  for (size_t i = 0; i < x.size(); ++i) {
    const double orig = x[i];
    x[i] = orig + h;
    const double fp = f(x);
    x[i] = orig - h;
    const double fm = f(x);
    x[i] = orig;
    g[i] = (fp - fm) / (2.0 * h);
  }
  return g;
}

// Relative error with an absolute floor, so near-zero gradients compare on
// an absolute scale.
inline double gradient_rel_error(const std::vector<double> &a,
                                 const std::vector<double> &b) {
  double worst = 0.0;
  for (size_t i = 0; i < a.size(); ++i) {
    const double denom =
        std::max({std::abs(a[i]), std::abs(b[i]), 1e-4});
    worst = std::max(worst, std::abs(a[i] - b[i]) / denom);
  }
  return worst;
}

}  // namespace vsr_test

#endif  // VSR_TESTS_SUPPORT_ORACLES_HPP_
