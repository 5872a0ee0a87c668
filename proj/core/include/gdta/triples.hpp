#pragma once

#include <cstdint>
#include <vector>

#include "gdta/scheme.hpp"

namespace gdta {

/// Triple of coordinate-index subsets labelling an aggregated basis element.
/// Relative to an anchor pair (g,h): s1 within (g1&h1)&circle,
/// s2 within (g2&h2)&bullet, and s2 <= s3 <= g2&h2.
struct TripleSet {
  std::uint64_t s1 = 0;
  std::uint64_t s2 = 0;
  std::uint64_t s3 = 0;

  std::size_t size() const {
    return static_cast<std::size_t>(std::popcount(s1) + std::popcount(s2) + std::popcount(s3));
  }
  bool operator==(const TripleSet&) const = default;
};

inline constexpr TripleSet kEmptyTriple{};

/// Componentwise containment; the partial order on triples.
inline bool preceq(const TripleSet& a, const TripleSet& b) {
  return (a.s1 & ~b.s1) == 0 && (a.s2 & ~b.s2) == 0 && (a.s3 & ~b.s3) == 0;
}

/// Graded order: by |t|, then by the component masks. Total and deterministic.
bool triple_less(const TripleSet& a, const TripleSet& b);

struct TripleLess {
  bool operator()(const TripleSet& a, const TripleSet& b) const { return triple_less(a, b); }
};

/// The three anchor masks of the pair (g,h).
struct UAnchor {
  std::uint64_t ones_circ = 0;  // (g1 & h1) & circle
  std::uint64_t twos_bull = 0;  // (g2 & h2) & bullet
  std::uint64_t twos = 0;       // g2 & h2
};

UAnchor u_anchor(const GDParams& params, const Color& g, const Color& h);

bool in_U(const GDParams& params, const Color& g, const Color& h, const TripleSet& t);

/// All triples anchored at (g,h), graded by size then lexicographic.
std::vector<TripleSet> enumerate_U(const GDParams& params, const Color& g, const Color& h);

/// The colors a with nonzero support at (g,h) aggregated under t; never empty.
std::vector<Color> members_U(const GDParams& params, const Color& g, const Color& h,
                             const TripleSet& t);

/// The distinguished member with minimal aggregation label (all optional
/// coordinates off).
Color minimal_member(const GDParams& params, const Color& g, const Color& h, const TripleSet& t);

/// The least triple t with a in members_U(g, h, t); inverse of minimal_member.
TripleSet min_triple_of(const GDParams& params, const Color& g, const Color& h, const Color& a);

/// prod_{j in U} (m_j - 1) * prod_{k in V} (l_k - 1) m_k * prod_{l in W\V} m_l.
mpz_class k_weight(const GDParams& params, std::uint64_t U, std::uint64_t V, std::uint64_t W);

/// k_t = k_weight(s1, s2, s3).
mpz_class k_of(const GDParams& params, const TripleSet& t);

/// Weight of the coordinates shared by g and i but avoiding h.
mpz_class k_joint(const GDParams& params, const Color& g, const Color& h, const Color& i);

/// Weight of h's coordinates exclusive of both g and i.
mpz_class k_mid(const GDParams& params, const Color& g, const Color& h, const Color& i);

// Componentwise triple algebra.
TripleSet ts_intersect(const TripleSet& a, const TripleSet& b);
TripleSet ts_union(const TripleSet& a, const TripleSet& b);
/// (s1\i1, s2\i2, s3\i2)
TripleSet ts_minus_color(const TripleSet& t, const Color& i);
/// (i1&s1, i2&s2, i2&s3)
TripleSet color_cap(const Color& i, const TripleSet& t);

/// The composed triple anchored at (g,i), from j at (g,h) and k at (h,i).
TripleSet compose(const GDParams& params, const Color& g, const Color& h, const Color& i,
                  const TripleSet& j, const TripleSet& k);

/// Largest triple reachable above t in the layer structure at (g,h).
TripleSet ceiling(const GDParams& params, const Color& g, const Color& h, const TripleSet& t);

/// Number of layers above t: |ceiling| - |t|.
std::size_t layer_span(const GDParams& params, const Color& g, const Color& h, const TripleSet& t);

/// Layer j: triples a with t <= a <= ceiling, |a|-|t| = j and p not dividing k_a.
std::vector<TripleSet> layer(const GDParams& params, const Color& g, const Color& h,
                             const TripleSet& t, std::size_t j);

/// Coordinates of t whose weight factor vanishes mod p; empty iff p does not
/// divide k_t (always empty in characteristic 0).
std::uint64_t bad_set(const GDParams& params, const TripleSet& t);

/// bad_set extended by the anchor-asymmetry coordinates of (g,h).
std::uint64_t v_set(const GDParams& params, const Color& g, const Color& h, const TripleSet& t);

}  // namespace gdta
