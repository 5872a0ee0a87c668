#include "gdta/triples.hpp"

#include <algorithm>
#include <stdexcept>

namespace gdta {

namespace {

// Calls fn(s) for every subset s of mask, ascending by value.
template <typename F>
void for_each_subset(std::uint64_t mask, F&& fn) {
  std::uint64_t s = 0;
  for (;;) {
    fn(s);
    if (s == mask) break;
    s = (s - mask) & mask;  // next subset in increasing value order
  }
}

}  // namespace

bool triple_less(const TripleSet& a, const TripleSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  if (a.s1 != b.s1) return a.s1 < b.s1;
  if (a.s2 != b.s2) return a.s2 < b.s2;
  return a.s3 < b.s3;
}

UAnchor u_anchor(const GDParams& params, const Color& g, const Color& h) {
  UAnchor u;
  u.ones_circ = g.ones & h.ones & params.m_gt2_mask();
  u.twos = g.twos & h.twos;
  u.twos_bull = u.twos & params.ell_gt2_mask();
  return u;
}

bool in_U(const GDParams& params, const Color& g, const Color& h, const TripleSet& t) {
  UAnchor u = u_anchor(params, g, h);
  return (t.s1 & ~u.ones_circ) == 0 && (t.s2 & ~u.twos_bull) == 0 && (t.s2 & ~t.s3) == 0 &&
         (t.s3 & ~u.twos) == 0;
}

std::vector<TripleSet> enumerate_U(const GDParams& params, const Color& g, const Color& h) {
  UAnchor u = u_anchor(params, g, h);
  std::vector<TripleSet> out;
  for_each_subset(u.ones_circ, [&](std::uint64_t s1) {
    for_each_subset(u.twos, [&](std::uint64_t s3) {
      for_each_subset(s3 & u.twos_bull, [&](std::uint64_t s2) {
        out.push_back(TripleSet{s1, s2, s3});
      });
    });
  });
  std::sort(out.begin(), out.end(), TripleLess{});
  return out;
}

std::vector<Color> members_U(const GDParams& params, const Color& g, const Color& h,
                             const TripleSet& t) {
  if (!in_U(params, g, h, t)) throw std::invalid_argument("triple violates its anchor");
  IndexProfile pg = params.profile(g), ph = params.profile(h);
  std::uint64_t base_ones = (pg.zeros & ph.ones) | (pg.ones & ph.zeros);
  std::uint64_t base_twos = pg.twos ^ ph.twos;
  std::uint64_t free01 = t.s1 | (t.s3 & ~t.s2);
  std::vector<Color> out;
  for_each_subset(free01, [&](std::uint64_t extra1) {
    for_each_subset(t.s2, [&](std::uint64_t two_part) {
      for_each_subset(t.s2 & ~two_part, [&](std::uint64_t one_part) {
        out.push_back(Color{base_ones | extra1 | one_part, base_twos | two_part});
      });
    });
  });
  std::sort(out.begin(), out.end(), ColorLess{});
  return out;
}

Color minimal_member(const GDParams& params, const Color& g, const Color& h, const TripleSet& t) {
  if (!in_U(params, g, h, t)) throw std::invalid_argument("triple violates its anchor");
  IndexProfile pg = params.profile(g), ph = params.profile(h);
  Color c;
  c.ones = (pg.zeros & ph.ones) | (pg.ones & ph.zeros) | t.s1 | (t.s3 & ~t.s2);
  c.twos = (pg.twos ^ ph.twos) | t.s2;
  return c;
}

TripleSet min_triple_of(const GDParams& params, const Color& g, const Color& h, const Color& a) {
  if (!support_nonzero(params, g, h, a))
    throw std::invalid_argument("color is not in the support of the anchor pair");
  UAnchor u = u_anchor(params, g, h);
  TripleSet t;
  t.s1 = a.ones & u.ones_circ;
  t.s2 = a.twos & u.twos_bull;
  t.s3 = (a.ones & u.twos) | t.s2;
  return t;
}

mpz_class k_weight(const GDParams& params, std::uint64_t U, std::uint64_t V, std::uint64_t W) {
  mpz_class r = 1;
  for (std::size_t a = 0; a < params.n(); ++a) {
    std::uint64_t bit = 1ull << a;
    const Factor& f = params.factors()[a];
    if (U & bit) r *= f.group_size - 1;
    if (V & bit) r *= mpz_class(f.groups - 1) * f.group_size;
    if ((W & ~V) & bit) r *= f.group_size;
  }
  return r;
}

mpz_class k_of(const GDParams& params, const TripleSet& t) {
  return k_weight(params, t.s1, t.s2, t.s3);
}

mpz_class k_joint(const GDParams& params, const Color& g, const Color& h, const Color& i) {
  std::uint64_t U = (g.ones & i.ones) & ~h.ones;
  std::uint64_t V = (g.twos & i.twos) & ~h.twos;
  return k_weight(params, U, V, V);
}

mpz_class k_mid(const GDParams& params, const Color& g, const Color& h, const Color& i) {
  std::uint64_t U = h.ones & ~(g.ones | i.ones);
  std::uint64_t V = h.twos & ~(g.twos | i.twos);
  return k_weight(params, U, V, V);
}

TripleSet ts_intersect(const TripleSet& a, const TripleSet& b) {
  return TripleSet{a.s1 & b.s1, a.s2 & b.s2, a.s3 & b.s3};
}

TripleSet ts_union(const TripleSet& a, const TripleSet& b) {
  return TripleSet{a.s1 | b.s1, a.s2 | b.s2, a.s3 | b.s3};
}

TripleSet ts_minus_color(const TripleSet& t, const Color& i) {
  return TripleSet{t.s1 & ~i.ones, t.s2 & ~i.twos, t.s3 & ~i.twos};
}

TripleSet color_cap(const Color& i, const TripleSet& t) {
  return TripleSet{i.ones & t.s1, i.twos & t.s2, i.twos & t.s3};
}

TripleSet compose(const GDParams& params, const Color& g, const Color& h, const Color& i,
                  const TripleSet& j, const TripleSet& k) {
  if (!in_U(params, g, h, j) || !in_U(params, h, i, k))
    throw std::invalid_argument("compose: triples violate their anchors");
  std::uint64_t gi1 = g.ones & i.ones;
  std::uint64_t gi2 = g.twos & i.twos;
  TripleSet l;
  l.s1 = ((gi1 & params.m_gt2_mask()) & ~h.ones) | (gi1 & (j.s1 | k.s1));
  l.s2 = ((gi2 & params.ell_gt2_mask()) & ~h.twos) | (gi2 & (j.s2 | k.s2));
  l.s3 = (gi2 & ~h.twos) | (gi2 & (j.s3 | k.s3));
  return l;
}

TripleSet ceiling(const GDParams& params, const Color& g, const Color& h, const TripleSet& t) {
  if (!in_U(params, g, h, t)) throw std::invalid_argument("triple violates its anchor");
  UAnchor u = u_anchor(params, g, h);
  return TripleSet{u.ones_circ, t.s3 & params.ell_gt2_mask(), u.twos};
}

std::size_t layer_span(const GDParams& params, const Color& g, const Color& h,
                       const TripleSet& t) {
  return ceiling(params, g, h, t).size() - t.size();
}

std::vector<TripleSet> layer(const GDParams& params, const Color& g, const Color& h,
                             const TripleSet& t, std::size_t j) {
  TripleSet top = ceiling(params, g, h, t);
  std::size_t span = top.size() - t.size();
  if (j > span) throw std::out_of_range("layer index exceeds the layer span");
  std::uint64_t f1 = top.s1 & ~t.s1;
  std::uint64_t f2 = top.s2 & ~t.s2;
  std::uint64_t f3 = top.s3 & ~t.s3;
  std::uint64_t p = params.characteristic();
  std::vector<TripleSet> out;
  for_each_subset(f1, [&](std::uint64_t u1) {
    for_each_subset(f2, [&](std::uint64_t u2) {
      for_each_subset(f3, [&](std::uint64_t u3) {
        TripleSet a{t.s1 | u1, t.s2 | u2, t.s3 | u3};
        if (a.size() != t.size() + j) return;
        if (p != 0 && bad_set(params, a) != 0) return;
        out.push_back(a);
      });
    });
  });
  std::sort(out.begin(), out.end(), TripleLess{});
  return out;
}

std::uint64_t bad_set(const GDParams& params, const TripleSet& t) {
  if (params.characteristic() == 0) return 0;
  return (t.s1 & params.div_m_minus1_mask()) | (t.s2 & params.div_ellm_mask()) |
         ((t.s3 & ~t.s2) & params.div_m_mask());
}

std::uint64_t v_set(const GDParams& params, const Color& g, const Color& h, const TripleSet& t) {
  if (params.characteristic() == 0) return 0;
  return ((g.ones ^ h.ones) & params.div_m_minus1_mask()) |
         ((g.twos ^ h.twos) & params.div_ellm_mask()) | bad_set(params, t);
}

}  // namespace gdta
