#pragma once

#include <numeric>
#include <vector>

#include "eqcat/category.hpp"

namespace eqcat {

/// A homomorphism G -> Z/m chosen at random (images of generators drawn until the
/// assignment extends consistently). Falls back to the zero map.
inline std::vector<int> random_hom_to_cyclic(const Group& G, int m, Rng& rng, int attempts = 64) {
  auto gens = generators(G, whole(G));
  for (int a = 0; a < attempts; ++a) {
    std::vector<int> phi(G.order(), -1);
    phi[0] = 0;
    std::vector<int> img(gens.size());
    for (auto& v : img) v = static_cast<int>(rng() % static_cast<unsigned>(m));
    std::vector<int> queue{0};
    bool ok = true;
    for (std::size_t q = 0; q < queue.size() && ok; ++q)
      for (std::size_t s = 0; s < gens.size(); ++s) {
        int e = G.mul(queue[q], gens[s]);
        int v = (phi[queue[q]] + img[s]) % m;
        if (phi[e] < 0) {
          phi[e] = v;
          queue.push_back(e);
        } else if (phi[e] != v) {
          ok = false;
          break;
        }
      }
    for (int x = 0; x < G.order() && ok; ++x)
      for (int y = 0; y < G.order() && ok; ++y)
        if (phi[G.mul(x, y)] != (phi[x] + phi[y]) % m) ok = false;
    if (ok) return phi;
  }
  return std::vector<int>(G.order(), 0);
}

/// The carry cocycle of Z/m pulled back along phi: 1 when phi(g)+phi(h) wraps.
inline int carry(const std::vector<int>& phi, int m, int g, int h) { return phi[g] + phi[h] >= m ? 1 : 0; }

/// Permutation action of G on a disjoint union of coset spaces G/K, with the
/// number of points equal to n (points left over are fixed).
inline std::vector<std::vector<int>> random_permutation_action(const Group& G, std::size_t n, Rng& rng) {
  auto subs = subgroups(G, G.order());
  std::vector<std::vector<int>> orbits;  // each orbit: the coset reps used for its points
  std::vector<Subgroup> stab;
  std::size_t used = 0;
  while (used < n) {
    std::vector<std::size_t> fit;
    for (std::size_t k = 0; k < subs.size(); ++k)
      if (static_cast<std::size_t>(G.order() / subs[k].order()) <= n - used) fit.push_back(k);
    const Subgroup& K = subs[fit[rng() % fit.size()]];
    auto reps = coset_reps(G, K, whole(G));
    orbits.push_back(reps);
    stab.push_back(K);
    used += reps.size();
  }
  std::vector<std::vector<int>> sigma(G.order(), std::vector<int>(n));
  for (int g = 0; g < G.order(); ++g) {
    std::size_t base = 0;
    for (std::size_t o = 0; o < orbits.size(); ++o) {
      for (std::size_t t = 0; t < orbits[o].size(); ++t) {
        int gt = G.mul(g, orbits[o][t]);
        auto [s, rest] = coset_split(G, stab[o], orbits[o], gt);
        (void)rest;
        sigma[g][base + t] = static_cast<int>(base + s);
      }
      base += orbits[o].size();
    }
  }
  return sigma;
}

/// Orbit index of every label under sigma.
inline std::vector<int> label_orbits(const std::vector<std::vector<int>>& sigma, std::size_t n) {
  std::vector<int> orbit(n, -1);
  int next = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (orbit[i] >= 0) continue;
    for (const auto& s : sigma) orbit[s[i]] = next;
    ++next;
  }
  return orbit;
}

/// Multiplies lambda by the coboundary of beta: lambda^{g,h}_i beta^g_{sigma_h i} beta^h_i / beta^{gh}_i.
/// beta[g][i] must be nonzero with beta[identity] = 1.
inline ActionData gauge_action(const ActionData& a, const std::vector<std::vector<PrimeField::Elem>>& beta) {
  const PrimeField& f = a.field();
  const Group& G = a.group();
  auto lambda = a.lambda_table();
  for (int g = 0; g < G.order(); ++g)
    for (int h = 0; h < G.order(); ++h)
      for (std::size_t i = 0; i < a.n(); ++i) {
        auto num = f.mul(beta[g][a.sigma(h, i)], beta[h][i]);
        lambda[g][h][i] = f.mul(lambda[g][h][i], f.div(num, beta[G.mul(g, h)][i]));
      }
  return ActionData(f, G, a.n(), a.sigma_table(), std::move(lambda));
}

inline std::vector<std::vector<PrimeField::Elem>> random_gauge(const PrimeField& f, int order, std::size_t n, Rng& rng) {
  std::vector<std::vector<PrimeField::Elem>> beta(order, std::vector<PrimeField::Elem>(n, 1));
  for (int g = 1; g < order; ++g)
    for (auto& b : beta[g]) b = f.random_nonzero(rng);
  return beta;
}

/// A random valid action: random permutation action, a carry cocycle through a random
/// map to Z/m with orbit-constant bases, then a random gauge.
inline ActionData random_action(const PrimeField& f, const Group& G, std::size_t n, Rng& rng, bool permute = true) {
  std::vector<std::vector<int>> sigma;
  if (permute) {
    sigma = random_permutation_action(G, n, rng);
  } else {
    sigma.assign(G.order(), std::vector<int>(n));
    for (auto& s : sigma) std::iota(s.begin(), s.end(), 0);
  }
  int m = 2 + static_cast<int>(rng() % 3);
  auto phi = random_hom_to_cyclic(G, m, rng);
  auto orbit = label_orbits(sigma, n);
  std::vector<PrimeField::Elem> per_orbit(n + 1);
  for (auto& c : per_orbit) c = f.random_nonzero(rng);
  std::vector<std::vector<std::vector<PrimeField::Elem>>> lambda(
      G.order(), std::vector<std::vector<PrimeField::Elem>>(G.order(), std::vector<PrimeField::Elem>(n, 1)));
  for (int g = 0; g < G.order(); ++g)
    for (int h = 0; h < G.order(); ++h)
      if (carry(phi, m, g, h))
        for (std::size_t i = 0; i < n; ++i) lambda[g][h][i] = per_orbit[orbit[i]];
  ActionData a(f, G, n, std::move(sigma), std::move(lambda));
  return gauge_action(a, random_gauge(f, G.order(), n, rng));
}

}  // namespace eqcat
