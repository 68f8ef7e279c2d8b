#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

#include "srg/graph.hpp"

namespace srg {

/// Parameters of a strongly regular graph together with its spectrum.
/// Eigenvalues are stored doubled (2r, 2s) so half-integers stay exact; in
/// the conference case (irrational eigenvalues) the doubled fields are
/// meaningless and f = g = (v-1)/2.
struct SrgParams {
  std::uint64_t v = 0, k = 0, lambda = 0, mu = 0;
  bool conference = false;
  std::int64_t r2 = 0, s2 = 0;
  std::uint64_t f = 0, g = 0;

  bool operator==(const SrgParams& o) const {
    return v == o.v && k == o.k && lambda == o.lambda && mu == o.mu;
  }
};

namespace detail {
inline std::uint64_t isqrt(std::uint64_t n) {
  std::uint64_t r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}
}  // namespace detail

/// Fills the spectral data for a consistent (v,k,lambda,mu) tuple.
/// Throws if the tuple violates k(k-lambda-1) = (v-k-1)mu.
inline SrgParams make_srg_params(std::uint64_t v, std::uint64_t k, std::uint64_t lambda, std::uint64_t mu) {
  SrgParams p;
  p.v = v;
  p.k = k;
  p.lambda = lambda;
  p.mu = mu;
  if (k * (k - lambda - 1) != (v - k - 1) * mu)
    throw std::invalid_argument("srg params: identity k(k-l-1)=(v-k-1)mu fails");
  std::int64_t d = static_cast<std::int64_t>(lambda) - static_cast<std::int64_t>(mu);
  std::uint64_t disc = static_cast<std::uint64_t>(d * d) + 4 * (k - mu);
  std::uint64_t sq = detail::isqrt(disc);
  std::int64_t num = 2 * static_cast<std::int64_t>(k) + static_cast<std::int64_t>(v - 1) * d;
  if (sq * sq == disc && sq != 0 && num % static_cast<std::int64_t>(sq) == 0 &&
      ((v - 1) - num / static_cast<std::int64_t>(sq)) % 2 == 0) {
    p.conference = false;
    p.r2 = d + static_cast<std::int64_t>(sq);
    p.s2 = d - static_cast<std::int64_t>(sq);
    p.f = static_cast<std::uint64_t>((static_cast<std::int64_t>(v - 1) - num / static_cast<std::int64_t>(sq)) / 2);
    p.g = (v - 1) - p.f;
  } else {
    // conference case: multiplicities are forced equal
    if (num != 0 || (v - 1) % 2 != 0)
      throw std::invalid_argument("srg params: non-integral spectrum but not a conference graph");
    p.conference = true;
    p.f = p.g = (v - 1) / 2;
  }
  return p;
}

/// Decides strong regularity by exact common-neighbor counting over all
/// pairs. Complete and edgeless graphs are rejected (not SRG by convention).
inline std::optional<SrgParams> check_srg(const Graph& g) {
  const std::uint32_t v = g.v();
  if (v < 2) throw std::invalid_argument("check_srg: graph too small");
  std::uint64_t e = g.edge_count();
  if (e == 0 || e == std::uint64_t(v) * (v - 1) / 2)
    throw std::invalid_argument("check_srg: complete or edgeless graph");
  std::uint32_t k = g.degree(0);
  for (std::uint32_t x = 1; x < v; ++x)
    if (g.degree(x) != k) return std::nullopt;
  std::int64_t lambda = -1, mu = -1;
  for (std::uint32_t x = 0; x < v; ++x) {
    for (std::uint32_t y = x + 1; y < v; ++y) {
      std::uint32_t c = g.common_neighbors(x, y);
      std::int64_t& slot = g.adjacent(x, y) ? lambda : mu;
      if (slot < 0)
        slot = c;
      else if (slot != c)
        return std::nullopt;
    }
  }
  // neither slot can be unset: the graph has an edge and is not complete
  return make_srg_params(v, k, static_cast<std::uint64_t>(lambda), static_cast<std::uint64_t>(mu));
}

struct FourVcWitness {
  std::uint32_t x = 0, y = 0;
  std::uint64_t observed = 0, expected = 0;
};

/// Verdict of the edge-counting criterion for the 4-vertex condition.
struct FourVcReport {
  bool satisfied = false;
  std::uint64_t alpha = 0, beta = 0;
  std::optional<FourVcWitness> witness;
};

namespace detail {

// Number of edges inside the common neighborhood of (x, y): AND the two
// adjacency rows, then popcount each member's row against the intersection.
inline std::uint64_t edges_in_common_neighborhood(const Graph& g, std::uint32_t x, std::uint32_t y,
                                                  std::uint64_t* scratch) {
  const std::uint32_t words = g.words();
  const std::uint64_t *a = g.row(x), *b = g.row(y);
  for (std::uint32_t w = 0; w < words; ++w) scratch[w] = a[w] & b[w];
  std::uint64_t twice = 0;
  for (std::uint32_t w = 0; w < words; ++w) {
    std::uint64_t m = scratch[w];
    while (m) {
      std::uint32_t z = w * 64 + std::countr_zero(m);
      m &= m - 1;
      const std::uint64_t* rz = g.row(z);
      for (std::uint32_t u = 0; u < words; ++u) twice += std::popcount(rz[u] & scratch[u]);
    }
  }
  return twice / 2;
}

}  // namespace detail

/// Sims criterion: the graph satisfies the 4-vertex condition iff the number
/// of edges inside Gamma(x) ∩ Gamma(y) is a constant alpha over edges and a
/// constant beta over non-edges. Exact integer counting over all pairs; with
/// threads > 1 the pair loop is partitioned by row and the outcome is
/// bit-identical to the sequential run.
inline FourVcReport four_vertex_check(const Graph& g, const SrgParams& params, unsigned threads = 1) {
  const std::uint32_t v = g.v();
  const std::uint32_t words = g.words();

  // reference values come from the lexicographically first pair of each kind
  std::int64_t alpha_ref = -1, beta_ref = -1;
  {
    std::vector<std::uint64_t> scratch(words);
    for (std::uint32_t x = 0; x < v && (alpha_ref < 0 || beta_ref < 0); ++x)
      for (std::uint32_t y = x + 1; y < v && (alpha_ref < 0 || beta_ref < 0); ++y) {
        std::int64_t& ref = g.adjacent(x, y) ? alpha_ref : beta_ref;
        if (ref < 0) ref = static_cast<std::int64_t>(detail::edges_in_common_neighborhood(g, x, y, scratch.data()));
      }
  }
  if (alpha_ref < 0) alpha_ref = 0;
  if (beta_ref < 0) beta_ref = 0;

  struct PartResult {
    bool ok = true;
    FourVcWitness w;
  };
  unsigned nt = threads == 0 ? 1 : threads;
  std::vector<PartResult> parts(nt);
  auto run = [&](unsigned tid) {
    std::vector<std::uint64_t> scratch(words);
    PartResult res;
    for (std::uint32_t x = tid; x < v; x += nt) {
      for (std::uint32_t y = x + 1; y < v; ++y) {
        std::uint64_t c = detail::edges_in_common_neighborhood(g, x, y, scratch.data());
        std::uint64_t expect = g.adjacent(x, y) ? static_cast<std::uint64_t>(alpha_ref)
                                                : static_cast<std::uint64_t>(beta_ref);
        if (c != expect) {
          // pairs are visited in ascending lexicographic order within a stripe
          res.ok = false;
          res.w = {x, y, c, expect};
          break;
        }
      }
      if (!res.ok) break;
    }
    parts[tid] = res;
  };
  if (nt == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nt; ++t) pool.emplace_back(run, t);
    for (auto& th : pool) th.join();
  }

  FourVcReport rep;
  rep.satisfied = true;
  for (auto& pr : parts) {
    if (!pr.ok && (rep.satisfied || std::make_pair(pr.w.x, pr.w.y) < std::make_pair(rep.witness->x, rep.witness->y))) {
      rep.satisfied = false;
      rep.witness = pr.w;
    }
  }
  if (rep.satisfied) {
    rep.alpha = static_cast<std::uint64_t>(alpha_ref);
    rep.beta = static_cast<std::uint64_t>(beta_ref);
    // Sims identity, a theorem for any graph passing the criterion
    std::uint64_t lhs = params.k * (params.lambda * (params.lambda - 1) / 2 - rep.alpha);
    std::uint64_t rhs = rep.beta * (params.v - params.k - 1);
    if (params.lambda >= 1 && lhs != rhs)
      throw std::logic_error("four_vertex_check: Sims identity violated (internal error)");
  }
  return rep;
}

enum class Subconstituent { first, second };

/// Induced subgraph on the neighbors (first) or non-neighbors excluding x
/// (second); vertex order inherited from g.
inline Graph subconstituent(const Graph& g, std::uint32_t x, Subconstituent which) {
  std::vector<std::uint32_t> verts;
  for (std::uint32_t y = 0; y < g.v(); ++y) {
    if (y == x) continue;
    bool adj = g.adjacent(x, y);
    if ((which == Subconstituent::first) == adj) verts.push_back(y);
  }
  return induced_subgraph(g, verts);
}

/// Vertices of the subconstituent in g's labeling (parallel to the above).
inline std::vector<std::uint32_t> subconstituent_vertices(const Graph& g, std::uint32_t x, Subconstituent which) {
  std::vector<std::uint32_t> verts;
  for (std::uint32_t y = 0; y < g.v(); ++y) {
    if (y == x) continue;
    if ((which == Subconstituent::first) == g.adjacent(x, y)) verts.push_back(y);
  }
  return verts;
}

/// Induced subgraph on the common neighbors of x and y (lambda-graph when
/// adjacent, mu-graph otherwise).
inline Graph lambda_mu_graph(const Graph& g, std::uint32_t x, std::uint32_t y) {
  if (x == y) throw std::invalid_argument("lambda_mu_graph: x == y");
  std::vector<std::uint32_t> verts;
  for (std::uint32_t z = 0; z < g.v(); ++z)
    if (z != x && z != y && g.adjacent(x, z) && g.adjacent(y, z)) verts.push_back(z);
  return induced_subgraph(g, verts);
}

/// Valencies of the lambda-/mu-graphs when every one of them is regular of
/// the same degree. nullopt entries mean "not regular" (or no such pairs).
struct LocalParams {
  std::optional<std::uint64_t> lambda_valency;
  std::optional<std::uint64_t> mu_valency;
  bool lambda_regular = false;
  bool mu_regular = false;
};

inline LocalParams lambda_mu_regularity(const Graph& g) {
  const std::uint32_t v = g.v();
  const std::uint32_t words = g.words();
  std::vector<std::uint64_t> scratch(words);
  LocalParams lp;
  lp.lambda_regular = lp.mu_regular = true;
  std::int64_t lval = -1, mval = -1;
  for (std::uint32_t x = 0; x < v; ++x) {
    const std::uint64_t* a = g.row(x);
    for (std::uint32_t y = x + 1; y < v; ++y) {
      const std::uint64_t* b = g.row(y);
      for (std::uint32_t w = 0; w < words; ++w) scratch[w] = a[w] & b[w];
      bool adj = g.adjacent(x, y);
      bool& flag = adj ? lp.lambda_regular : lp.mu_regular;
      std::int64_t& slot = adj ? lval : mval;
      if (!flag) continue;
      for (std::uint32_t w = 0; w < words && flag; ++w) {
        std::uint64_t m = scratch[w];
        while (m) {
          std::uint32_t z = w * 64 + std::countr_zero(m);
          m &= m - 1;
          const std::uint64_t* rz = g.row(z);
          std::int64_t d = 0;
          for (std::uint32_t u = 0; u < words; ++u) d += std::popcount(rz[u] & scratch[u]);
          if (slot < 0)
            slot = d;
          else if (slot != d) {
            flag = false;
            break;
          }
        }
      }
    }
  }
  if (lp.lambda_regular && lval >= 0) lp.lambda_valency = static_cast<std::uint64_t>(lval);
  if (lp.mu_regular && mval >= 0) lp.mu_valency = static_cast<std::uint64_t>(mval);
  return lp;
}

/// The three parameter sets A(eps*t), B(eps*t), C(eps*t) tied to strongly
/// regular graphs with strongly regular subconstituents:
///   A = (4t^2, 2t^2 - et, t^2 - et, t^2 - et)
///   B = (2t^2 - et, t^2 - et, t(t-e)/2, t(t/2 - e))
///   C = (2t^2 + et - 1, t^2, t(t-e)/2, t^2/2)
struct AbcParams {
  SrgParams a, b, c;
};

inline AbcParams abc_params(int eps, std::uint64_t t) {
  if (eps != 1 && eps != -1) throw std::invalid_argument("abc_params: eps must be +-1");
  if (t < 1) throw std::invalid_argument("abc_params: t must be >= 1");
  auto nonneg = [](std::int64_t r) {
    if (r < 0) throw std::invalid_argument("abc_params: negative parameter");
    return static_cast<std::uint64_t>(r);
  };
  auto half = [&nonneg](std::int64_t r) {
    if (r % 2 != 0) throw std::invalid_argument("abc_params: non-integral parameter");
    return nonneg(r / 2);
  };
  const std::int64_t tt = static_cast<std::int64_t>(t);
  const std::int64_t et = eps * tt;
  AbcParams out;
  out.a = make_srg_params(4 * t * t, nonneg(2 * tt * tt - et), nonneg(tt * tt - et), nonneg(tt * tt - et));
  out.b = make_srg_params(nonneg(2 * tt * tt - et), nonneg(tt * tt - et), half(tt * (tt - eps)),
                          half(tt * tt - 2 * et));
  out.c = make_srg_params(nonneg(2 * tt * tt + et - 1), t * t, half(tt * (tt - eps)), half(tt * tt));
  return out;
}

}  // namespace srg
