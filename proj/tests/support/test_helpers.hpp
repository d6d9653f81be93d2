#pragma once

#include <random>

#include "posetcoh/derived.hpp"
#include "posetcoh/poset.hpp"

// Test-only oracles and generators. The simplicial oracle below computes
// (co)homology straight from a face list with alternating-sign boundary
// matrices, independent of the nerve and replacement machinery it is used to
// check.

namespace posetcoh::testing {

inline CochainComplex simplicial_cochain_complex(const SimplicialComplex& k, const Field& field) {
  std::vector<std::vector<std::vector<int>>> by_dim;
  for (const auto& f : k.faces) {
    const size_t d = f.size() - 1;
    if (by_dim.size() <= d) by_dim.resize(d + 1);
    by_dim[d].push_back(f);
  }
  for (auto& faces : by_dim) std::sort(faces.begin(), faces.end());

  CochainComplex c(field);
  for (size_t d = 0; d < by_dim.size(); ++d)
    c.set_dim(static_cast<int>(d), static_cast<int>(by_dim[d].size()));
  for (size_t d = 0; d + 1 < by_dim.size(); ++d) {
    // Coboundary: transpose of the simplicial boundary of (d+1)-faces.
    Matrix m(field, static_cast<int>(by_dim[d + 1].size()), static_cast<int>(by_dim[d].size()));
    for (size_t r = 0; r < by_dim[d + 1].size(); ++r)
      for (size_t i = 0; i < by_dim[d + 1][r].size(); ++i) {
        std::vector<int> face = by_dim[d + 1][r];
        face.erase(face.begin() + static_cast<long>(i));
        const auto it = std::lower_bound(by_dim[d].begin(), by_dim[d].end(), face);
        const int col = static_cast<int>(it - by_dim[d].begin());
        m.set(static_cast<int>(r), col, i % 2 == 0 ? 1 : -1);
      }
    c.set_differential(static_cast<int>(d), std::move(m));
  }
  c.validate();
  return c;
}

inline GradedDims simplicial_cohomology(const SimplicialComplex& k, const Field& field) {
  return simplicial_cochain_complex(k, field).cohomology_dims();
}

using Rng = std::mt19937_64;

inline Poset random_poset(Rng& rng, int max_elements) {
  std::uniform_int_distribution<int> size_dist(1, max_elements);
  const int n = size_dist(rng);
  std::uniform_int_distribution<int> percent(0, 99);

  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (percent(rng) < 35) rel[i][j] = true;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (rel[i][k])
        for (int j = 0; j < n; ++j)
          if (rel[k][j]) rel[i][j] = true;

  std::vector<std::string> ids;
  for (int i = 0; i < n; ++i) ids.push_back("e" + std::to_string(i));
  std::vector<std::pair<std::string, std::string>> covers;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!rel[i][j]) continue;
      bool mid = false;
      for (int k = 0; k < n && !mid; ++k)
        if (k != i && k != j && rel[i][k] && rel[k][j]) mid = true;
      if (!mid) covers.emplace_back(ids[i], ids[j]);
    }
  return Poset::validate(ids, covers);
}

inline Matrix random_invertible(Rng& rng, const Field& field, int n) {
  std::uniform_int_distribution<int> entry(-2, 2);
  while (true) {
    Matrix m(field, n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.set(i, j, entry(rng));
    if (inverse(m)) return m;
  }
}

// Functorial by construction: a direct sum of upper-set blocks (identity
// inside the upper set, zero outside) conjugated by a random invertible
// change of basis at every element.
inline FunctorOnPoset random_functor(Rng& rng, const Poset& base, Variance variance,
                                     const Field& field, int max_blocks = 3) {
  std::uniform_int_distribution<int> nblocks_dist(1, max_blocks);
  std::uniform_int_distribution<int> seed_dist(0, base.size() - 1);
  const int nblocks = nblocks_dist(rng);

  std::vector<std::vector<bool>> in_upper(nblocks, std::vector<bool>(base.size(), false));
  for (int b = 0; b < nblocks; ++b) {
    const int seed = seed_dist(rng);
    for (int e = 0; e < base.size(); ++e) in_upper[b][e] = base.leq(seed, e);
  }

  FunctorOnPoset f(base, variance, field);
  std::vector<int> dims(base.size(), 0);
  for (int e = 0; e < base.size(); ++e) {
    for (int b = 0; b < nblocks; ++b) dims[e] += in_upper[b][e] ? 1 : 0;
    f.set_dim(e, dims[e]);
  }
  std::vector<Matrix> twist, twist_inv;
  for (int e = 0; e < base.size(); ++e) {
    twist.push_back(random_invertible(rng, field, dims[e]));
    twist_inv.push_back(*inverse(twist.back()));
  }
  for (const auto& [q, p] : base.cover_pairs()) {
    // Block-diagonal 0/1 matrix matching blocks alive at both ends.
    Matrix block(field, dims[variance == Variance::Contravariant ? q : p],
                 dims[variance == Variance::Contravariant ? p : q]);
    int row = 0;
    for (int b = 0; b < nblocks; ++b) {
      const int target = variance == Variance::Contravariant ? q : p;
      const int source = variance == Variance::Contravariant ? p : q;
      // Row/col offsets of block b at target/source.
      if (!in_upper[b][target]) continue;
      int col = 0;
      for (int b2 = 0; b2 < b; ++b2) col += in_upper[b2][source] ? 1 : 0;
      if (in_upper[b][source]) block.set(row, col, 1);
      ++row;
    }
    const int target = variance == Variance::Contravariant ? q : p;
    const int source = variance == Variance::Contravariant ? p : q;
    f.set_cover_map(q, p, twist[target] * block * twist_inv[source]);
  }
  return f;
}

}  // namespace posetcoh::testing
