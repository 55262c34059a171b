#pragma once

// Test-only oracle: irreducible dimension via Freudenthal's multiplicity
// recursion, summed over Weyl orbits of dominant weights. Independent of
// the closed-form Weyl product; only consumes the Cartan matrix and
// symmetrizer.

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "runiv/rootdata.hpp"

namespace runiv::testing {

namespace detail {

using Vec = std::vector<long long>;

struct FreudenthalContext {
  int n;
  std::vector<std::vector<long long>> cartan;  // A[i][j]
  std::vector<std::vector<Int>> gram;  // scaled inner product on fund coords
  std::vector<Vec> pos_fund;           // positive roots, fund coords

  explicit FreudenthalContext(const RootSystem& sys)
      : n(sys.rank()), cartan(sys.cartan()) {
    const auto& d = sys.symmetrizer();
    // (w_i, w_j) = (A^{-1})[i][j] * d[j]; scale A^{-1} to clear denominators.
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, 0));
    {
      std::vector<std::vector<Rational>> work(n, std::vector<Rational>(n));
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) work[i][j] = cartan[i][j];
        inv[i][i] = 1;
      }
      for (int col = 0; col < n; ++col) {
        int piv = col;
        while (work[piv][col] == 0) ++piv;
        std::swap(work[piv], work[col]);
        std::swap(inv[piv], inv[col]);
        Rational lead = work[col][col];
        for (int j = 0; j < n; ++j) {
          work[col][j] /= lead;
          inv[col][j] /= lead;
        }
        for (int i = 0; i < n; ++i) {
          if (i == col || work[i][col] == 0) continue;
          Rational f = work[i][col];
          for (int j = 0; j < n; ++j) {
            work[i][j] -= f * work[col][j];
            inv[i][j] -= f * inv[col][j];
          }
        }
      }
    }
    Int scale = 1;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        scale = boost::multiprecision::lcm(
            scale, Int(denominator(Rational(inv[i][j] * d[j]))));
    gram.assign(n, std::vector<Int>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        gram[i][j] = numerator(Rational(inv[i][j] * d[j] * scale));

    for (const auto& r : sys.positive_roots()) {
      Vec f(n, 0);
      for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) f[j] += r[i] * cartan[i][j];
      pos_fund.push_back(std::move(f));
    }
  }

  Int inner(const Vec& x, const Vec& y) const {
    Int s = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) s += gram[i][j] * x[i] * y[j];
    return s;
  }

  Vec reflect(const Vec& v, int i) const {
    Vec out = v;
    long long c = v[i];
    for (int j = 0; j < n; ++j) out[j] -= c * cartan[i][j];
    return out;
  }

  Vec dominant_rep(Vec v) const {
    for (;;) {
      int neg = -1;
      for (int i = 0; i < n; ++i)
        if (v[i] < 0) {
          neg = i;
          break;
        }
      if (neg < 0) return v;
      v = reflect(v, neg);
    }
  }

  Int orbit_size(const Vec& v) const {
    std::set<Vec> seen = {v};
    std::vector<Vec> frontier = {v};
    while (!frontier.empty()) {
      std::vector<Vec> next;
      for (const auto& w : frontier)
        for (int i = 0; i < n; ++i) {
          Vec r = reflect(w, i);
          if (seen.insert(r).second) next.push_back(r);
        }
      frontier = std::move(next);
    }
    return Int(seen.size());
  }
};

}  // namespace detail

inline Int freudenthal_dimension(const RootSystem& sys, const Weight& lambda) {
  using detail::Vec;
  detail::FreudenthalContext ctx(sys);
  int n = ctx.n;
  Vec lam(lambda.coords.begin(), lambda.coords.end());
  Vec rho(n, 1);
  Vec lam_rho = lam;
  for (int i = 0; i < n; ++i) lam_rho[i] += 1;
  Int casimir_top = ctx.inner(lam_rho, lam_rho);

  // Box bound: every weight nu satisfies lambda - nu <= lambda - w0(lambda)
  // componentwise in root coordinates.
  Vec lowest = lam;
  for (;;) {
    int pos = -1;
    for (int i = 0; i < n; ++i)
      if (lowest[i] > 0) {
        pos = i;
        break;
      }
    if (pos < 0) break;
    lowest = ctx.reflect(lowest, pos);
  }
  // (lam - lowest) in root coordinates: solve c * A = lam - lowest.
  Vec diff(n), box(n);
  for (int i = 0; i < n; ++i) diff[i] = lam[i] - lowest[i];
  {
    std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(n + 1));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) aug[j][i] = ctx.cartan[i][j];  // transpose
      aug[i][n] = diff[i];
    }
    for (int col = 0; col < n; ++col) {
      int piv = col;
      while (aug[piv][col] == 0) ++piv;
      std::swap(aug[piv], aug[col]);
      for (int i = 0; i < n; ++i) {
        if (i == col || aug[i][col] == 0) continue;
        Rational f = aug[i][col] / aug[col][col];
        for (int j = col; j <= n; ++j) aug[i][j] -= f * aug[col][j];
      }
    }
    for (int i = 0; i < n; ++i) {
      Rational c = aug[i][n] / aug[i][i];
      if (denominator(c) != 1 || c < 0)
        throw std::logic_error("weight box solve failed");
      box[i] = static_cast<long long>(numerator(c));
    }
  }

  // Enumerate dominant weights lambda - sum c_i alpha_i within the box.
  std::vector<std::pair<long long, Vec>> dominant;  // (height, mu)
  Vec c(n, 0);
  for (;;) {
    Vec mu = lam;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) mu[j] -= c[i] * ctx.cartan[i][j];
    bool dom = std::all_of(mu.begin(), mu.end(),
                           [](long long x) { return x >= 0; });
    if (dom) {
      long long h = 0;
      for (long long ci : c) h += ci;
      dominant.emplace_back(h, mu);
    }
    int k = 0;
    while (k < n && c[k] == box[k]) c[k++] = 0;
    if (k == n) break;
    ++c[k];
  }
  std::sort(dominant.begin(), dominant.end());

  std::map<Vec, Int> mult;
  Int dim = 0;
  for (const auto& [h, mu] : dominant) {
    Int m;
    if (h == 0) {
      m = 1;
    } else {
      Vec mu_rho = mu;
      for (int i = 0; i < n; ++i) mu_rho[i] += 1;
      Int denom = casimir_top - ctx.inner(mu_rho, mu_rho);
      Int rhs = 0;
      for (const auto& alpha : ctx.pos_fund) {
        Vec nu = mu;
        for (int k = 1;; ++k) {
          for (int i = 0; i < n; ++i) nu[i] += alpha[i];
          auto it = mult.find(ctx.dominant_rep(nu));
          if (it == mult.end()) break;
          rhs += ctx.inner(nu, alpha) * it->second;
        }
      }
      rhs *= 2;
      if (denom <= 0 || rhs % denom != 0)
        throw std::logic_error("Freudenthal recursion inconsistency");
      m = rhs / denom;
    }
    mult.emplace(mu, m);
    dim += m * ctx.orbit_size(mu);
  }
  return dim;
}

}  // namespace runiv::testing
