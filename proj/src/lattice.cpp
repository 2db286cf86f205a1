#include "dglab/lattice.hpp"

#include <cmath>
#include <cstddef>

namespace dglab {

namespace {

constexpr double kTinyNorm = 1e-24;

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

struct Gs {
  std::vector<std::vector<double>> star;  // orthogonalized vectors
  std::vector<std::vector<double>> mu;    // mu[i][j], j < i
  std::vector<double> norm;               // |star_i|^2
};

Gs gram_schmidt(const std::vector<std::vector<double>>& b) {
  std::size_t k = b.size();
  Gs g;
  g.star.assign(k, {});
  g.mu.assign(k, std::vector<double>(k, 0.0));
  g.norm.assign(k, 0.0);
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<double> v = b[i];
    for (std::size_t j = 0; j < i; ++j) {
      double m = g.norm[j] > kTinyNorm ? dot(b[i], g.star[j]) / g.norm[j] : 0.0;
      g.mu[i][j] = m;
      if (m != 0.0) {
        for (std::size_t t = 0; t < v.size(); ++t) v[t] -= m * g.star[j][t];
      }
    }
    g.norm[i] = dot(v, v);
    g.star[i] = std::move(v);
  }
  return g;
}

}  // namespace

std::vector<std::vector<Int>> lattice_round(const std::vector<std::vector<double>>& columns,
                                            const std::vector<double>& target) {
  const std::size_t k = columns.size();
  std::vector<std::vector<Int>> out;
  if (k == 0) return out;

  // Working basis and the unimodular transform back to original coordinates.
  std::vector<std::vector<double>> b = columns;
  std::vector<std::vector<Int>> u(k);  // u[j] = original-coordinate vector of b[j]
  for (std::size_t j = 0; j < k; ++j) {
    u[j].assign(k, Int(0));
    u[j][j] = 1;
  }

  Gs g = gram_schmidt(b);
  const double delta = 0.75;
  std::size_t kk = 1;
  long guard = 0;
  const long guard_max = 20000;
  while (kk < k && guard < guard_max) {
    ++guard;
    // Size-reduce b[kk] against previous vectors.
    bool changed = false;
    for (std::size_t j = kk; j-- > 0;) {
      double m = g.mu[kk][j];
      if (std::fabs(m) > 0.5) {
        double qr = std::nearbyint(m);
        long q = static_cast<long>(qr);
        for (std::size_t t = 0; t < b[kk].size(); ++t) b[kk][t] -= qr * b[j][t];
        for (std::size_t t = 0; t < k; ++t) u[kk][t] -= Int(q) * u[j][t];
        changed = true;
      }
    }
    if (changed) g = gram_schmidt(b);
    double lhs = g.norm[kk];
    double rhs = (delta - g.mu[kk][kk - 1] * g.mu[kk][kk - 1]) * g.norm[kk - 1];
    if (lhs >= rhs || g.norm[kk - 1] < kTinyNorm) {
      ++kk;
    } else {
      std::swap(b[kk], b[kk - 1]);
      std::swap(u[kk], u[kk - 1]);
      g = gram_schmidt(b);
      kk = kk > 1 ? kk - 1 : 1;
    }
  }

  // Babai nearest plane against the reduced basis.
  std::vector<double> r = target;
  std::vector<long> z(k, 0);
  for (std::size_t j = k; j-- > 0;) {
    if (g.norm[j] < kTinyNorm) continue;
    double c = dot(r, g.star[j]) / g.norm[j];
    long zj = static_cast<long>(std::nearbyint(c));
    z[j] = zj;
    if (zj != 0) {
      for (std::size_t t = 0; t < r.size(); ++t) r[t] -= static_cast<double>(zj) * b[j][t];
    }
  }

  auto emit = [&](const std::vector<long>& comb) {
    std::vector<Int> c(k, Int(0));
    for (std::size_t j = 0; j < k; ++j) {
      if (comb[j] == 0) continue;
      for (std::size_t t = 0; t < k; ++t) c[t] += Int(comb[j]) * u[j][t];
    }
    for (const auto& prev : out) {
      if (prev == c) return;
    }
    out.push_back(std::move(c));
  };

  emit(z);
  // After LLL the leading vectors are the short ones; perturb along them.
  std::size_t span = k < 6 ? k : 6;
  for (std::size_t j = 0; j < span; ++j) {
    for (int s : {1, -1}) {
      auto v = z;
      v[j] += s;
      emit(v);
    }
  }
  std::size_t pair_span = k < 3 ? k : 3;
  for (std::size_t i = 0; i < pair_span; ++i) {
    for (std::size_t j = i + 1; j < pair_span; ++j) {
      for (int si : {1, -1}) {
        for (int sj : {1, -1}) {
          auto v = z;
          v[i] += si;
          v[j] += sj;
          emit(v);
        }
      }
    }
  }
  return out;
}

}  // namespace dglab
