#include "gdta/algebra.hpp"

#include <algorithm>

#include <json.hpp>

namespace gdta {

bool b2_less(const B2Label& a, const B2Label& b) {
  if (!(a.row == b.row)) return color_less(a.row, b.row);
  if (!(a.col == b.col)) return color_less(a.col, b.col);
  return triple_less(a.agg, b.agg);
}

bool b1_less(const B1Label& a, const B1Label& b) {
  if (!(a.row == b.row)) return color_less(a.row, b.row);
  if (!(a.col == b.col)) return color_less(a.col, b.col);
  return color_less(a.rel, b.rel);
}

void AlgebraElement::add(const B2Label& label, const Scalar& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.emplace(label, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Scalar AlgebraElement::coeff(const B2Label& label) const {
  auto it = terms_.find(label);
  return it == terms_.end() ? Scalar::zero(p_) : it->second;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  for (const auto& [l, c] : o.terms_) add(l, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  for (const auto& [l, c] : o.terms_) add(l, -c);
  return *this;
}

AlgebraElement AlgebraElement::scaled(const Scalar& c) const {
  AlgebraElement r(p_);
  if (c.is_zero()) return r;
  for (const auto& [l, v] : terms_) r.add(l, v * c);
  return r;
}

AlgebraElement multiply_b2(const GDParams& params, const B2Label& a, const B2Label& b) {
  AlgebraElement r(params.characteristic());
  if (!(a.col == b.row)) return r;
  const Color &g = a.row, &h = a.col, &i = b.col;
  mpz_class w = k_mid(params, g, h, i);
  w *= k_of(params, ts_minus_color(a.agg, i));
  w *= k_of(params, ts_minus_color(b.agg, g));
  w *= k_of(params, ts_intersect(a.agg, b.agg));
  Scalar c = Scalar::from_integer(w, params.characteristic());
  if (c.is_zero()) return r;
  r.add(B2Label{g, i, compose(params, g, h, i, a.agg, b.agg)}, c);
  return r;
}

AlgebraElement multiply(const GDParams& params, const AlgebraElement& x, const AlgebraElement& y) {
  AlgebraElement r(params.characteristic());
  for (const auto& [la, ca] : x.terms()) {
    for (const auto& [lb, cb] : y.terms()) {
      if (!(la.col == lb.row)) continue;
      AlgebraElement t = multiply_b2(params, la, lb);
      for (const auto& [lt, ct] : t.terms()) r.add(lt, ct * ca * cb);
    }
  }
  return r;
}

AlgebraElement identity(const GDParams& params) {
  AlgebraElement r(params.characteristic());
  Scalar one = Scalar::one(params.characteristic());
  for (const Color& g : enumerate_colors(params)) r.add(B2Label{g, g, kEmptyTriple}, one);
  return r;
}

AlgebraElement transpose(const AlgebraElement& x) {
  AlgebraElement r(x.characteristic());
  for (const auto& [l, c] : x.terms()) r.add(B2Label{l.col, l.row, l.agg}, c);
  return r;
}

mpz_class dim_T(const GDParams& params) {
  mpz_class d = 1;
  for (const Factor& f : params.factors()) {
    if (f.groups == 2 && f.group_size == 2)
      d *= 10;
    else if (f.groups > 2 && f.group_size > 2)
      d *= 12;
    else
      d *= 11;
  }
  return d;
}

std::vector<B2Label> enumerate_b2(const GDParams& params) {
  if (dim_T(params) > 5000000)
    throw ResourceLimitError("aggregated label enumeration exceeds the cap");
  std::vector<B2Label> out;
  std::vector<Color> colors = enumerate_colors(params);
  for (const Color& g : colors)
    for (const Color& h : colors)
      for (const TripleSet& t : enumerate_U(params, g, h)) out.push_back(B2Label{g, h, t});
  return out;
}

std::vector<B1Label> enumerate_b1(const GDParams& params) {
  std::vector<B1Label> out;
  std::vector<Color> colors = enumerate_colors(params);
  for (const Color& g : colors)
    for (const Color& h : colors)
      for (const Color& a : enumerate_P(params, g, h)) out.push_back(B1Label{g, a, h});
  return out;
}

std::map<B1Label, Scalar, B1Less> b2_expand_in_b1(const GDParams& params, const B2Label& a) {
  std::map<B1Label, Scalar, B1Less> out;
  Scalar one = Scalar::one(params.characteristic());
  for (const Color& c : members_U(params, a.row, a.col, a.agg))
    out.emplace(B1Label{a.row, c, a.col}, one);
  return out;
}

std::map<B2Label, Scalar, B2Less> b1_expand_in_b2(const GDParams& params, const B1Label& b) {
  const std::uint64_t p = params.characteristic();
  std::vector<TripleSet> us = enumerate_U(params, b.row, b.col);
  TripleSet target = min_triple_of(params, b.row, b.col, b.rel);
  // Solve sum_{u >= t} x_u = [t == target] from the top of the grading down.
  std::map<TripleSet, Scalar, TripleLess> x;
  for (auto it = us.rbegin(); it != us.rend(); ++it) {
    Scalar v = (*it == target) ? Scalar::one(p) : Scalar::zero(p);
    for (const auto& [u, xu] : x)
      if (!(u == *it) && preceq(*it, u)) v -= xu;
    x.emplace(*it, v);
  }
  std::map<B2Label, Scalar, B2Less> out;
  for (const auto& [t, c] : x)
    if (!c.is_zero()) out.emplace(B2Label{b.row, b.col, t}, c);
  return out;
}

bool is_center_label(const GDParams& params, const CenterLabel& t) {
  return (t.s1 & ~params.m_gt2_mask()) == 0 && (t.s2 & ~params.ell_gt2_mask()) == 0 &&
         (t.s2 & ~t.s3) == 0 && (t.s3 & ~params.full_mask()) == 0 && (t.s1 & t.s3) == 0;
}

std::vector<CenterLabel> enumerate_center_labels(const GDParams& params) {
  std::vector<CenterLabel> out;
  // s1 over circle coordinates, s3 disjoint from s1, s2 within s3 and bullet.
  std::uint64_t s1 = 0;
  auto next_subset = [](std::uint64_t s, std::uint64_t mask) { return (s - mask) & mask; };
  for (;;) {
    std::uint64_t rest = params.full_mask() & ~s1;
    std::uint64_t s3 = 0;
    for (;;) {
      std::uint64_t bmask = s3 & params.ell_gt2_mask();
      std::uint64_t s2 = 0;
      for (;;) {
        out.push_back(TripleSet{s1, s2, s3});
        if (s2 == bmask) break;
        s2 = next_subset(s2, bmask);
      }
      if (s3 == rest) break;
      s3 = next_subset(s3, rest);
    }
    if (s1 == params.m_gt2_mask()) break;
    s1 = next_subset(s1, params.m_gt2_mask());
  }
  std::sort(out.begin(), out.end(), TripleLess{});
  return out;
}

AlgebraElement center_element(const GDParams& params, const CenterLabel& t) {
  if (!is_center_label(params, t)) throw std::invalid_argument("not a center label");
  AlgebraElement r(params.characteristic());
  for (const Color& i : enumerate_colors(params)) {
    Scalar c = Scalar::from_integer(k_of(params, ts_minus_color(t, i)), params.characteristic());
    r.add(B2Label{i, i, color_cap(i, t)}, c);
  }
  return r;
}

std::vector<std::pair<CenterLabel, AlgebraElement>> center_basis(const GDParams& params) {
  std::vector<std::pair<CenterLabel, AlgebraElement>> out;
  for (const CenterLabel& t : enumerate_center_labels(params))
    out.emplace_back(t, center_element(params, t));
  return out;
}

mpz_class center_dim(const GDParams& params) {
  auto [n1, n2, n3, n4] = params.shape_counts();
  mpz_class d = 1;
  mpz_ui_pow_ui(d.get_mpz_t(), 2, static_cast<unsigned long>(n1 + 2 * n4));
  mpz_class three;
  mpz_ui_pow_ui(three.get_mpz_t(), 3, static_cast<unsigned long>(n2 + n3));
  return d * three;
}

bool is_central(const GDParams& params, const AlgebraElement& x) {
  for (const B2Label& l : enumerate_b2(params)) {
    AlgebraElement b(params.characteristic());
    b.add(l, Scalar::one(params.characteristic()));
    if (!(multiply(params, x, b) == multiply(params, b, x))) return false;
  }
  return true;
}

namespace {

nlohmann::ordered_json mask_to_indices(std::uint64_t mask) {
  nlohmann::ordered_json a = nlohmann::ordered_json::array();
  for (int i = 0; i < 64; ++i)
    if (mask & (1ull << i)) a.push_back(i + 1);  // 1-based coordinates in reports
  return a;
}

nlohmann::ordered_json color_to_json(const GDParams& params, const Color& c) {
  nlohmann::ordered_json a = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < params.n(); ++i) a.push_back(c.entry(i));
  return a;
}

nlohmann::ordered_json triple_to_json(const TripleSet& t) {
  return nlohmann::ordered_json::array({mask_to_indices(t.s1), mask_to_indices(t.s2),
                                mask_to_indices(t.s3)});
}

nlohmann::ordered_json b2_to_json(const GDParams& params, const B2Label& l) {
  return nlohmann::ordered_json{{"row", color_to_json(params, l.row)},
                        {"col", color_to_json(params, l.col)},
                        {"agg", triple_to_json(l.agg)}};
}

}  // namespace

std::string color_json(const GDParams& params, const Color& c) {
  return color_to_json(params, c).dump();
}

std::string triple_json(const GDParams&, const TripleSet& t) { return triple_to_json(t).dump(); }

std::string b2_label_json(const GDParams& params, const B2Label& l) {
  return b2_to_json(params, l).dump();
}

std::string element_json(const GDParams& params, const AlgebraElement& x) {
  nlohmann::ordered_json a = nlohmann::ordered_json::array();
  for (const auto& [l, c] : x.terms())
    a.push_back(nlohmann::ordered_json{{"label", b2_to_json(params, l)}, {"coeff", c.str()}});
  return a.dump();
}

}  // namespace gdta
