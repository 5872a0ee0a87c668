#include "gdta/structure.hpp"

#include <algorithm>
#include <map>

namespace gdta {

bool d_less(const DLabel& a, const DLabel& b) {
  if (!(a.row == b.row)) return color_less(a.row, b.row);
  if (!(a.col == b.col)) return color_less(a.col, b.col);
  return triple_less(a.agg, b.agg);
}

std::vector<B2Label> corner_radical_basis(const GDParams& params, const Color& g) {
  std::vector<B2Label> out;
  if (params.characteristic() == 0) return out;
  for (const TripleSet& t : enumerate_U(params, g, g))
    if (bad_set(params, t) != 0) out.push_back(B2Label{g, g, t});
  return out;
}

mpz_class corner_quotient_dim(const GDParams& params, const Color& g) {
  const std::uint64_t p = params.characteristic();
  mpz_class d = 1;
  for (std::size_t a = 0; a < params.n(); ++a) {
    const Factor& f = params.factors()[a];
    int e = g.entry(a);
    if (e == 1 && f.group_size > 2) {
      d *= (p == 0 || (f.group_size - 1) % p != 0) ? 2 : 1;
    } else if (e == 2) {
      int ways = 1;  // triple leaves the coordinate out
      bool m_unit = p == 0 || f.group_size % p != 0;
      if (m_unit) ++ways;  // coordinate enters the span component only
      if (f.groups > 2 && m_unit && (p == 0 || (f.groups - 1) % p != 0))
        ++ways;  // coordinate enters the core component as well
      d *= ways;
    }
  }
  return d;
}

std::size_t corner_nilpotency_index(const GDParams& params, const Color& g) {
  return static_cast<std::size_t>(std::popcount(g.ones & params.div_m_minus1_mask()) +
                                  std::popcount(g.twos & params.div_ellm_mask())) +
         1;
}

AlgebraElement d_element(const GDParams& params, const Color& g, const Color& h,
                         const TripleSet& t) {
  const std::uint64_t p = params.characteristic();
  if (!in_U(params, g, h, t)) throw std::invalid_argument("triple violates its anchor");
  mpz_class mid = k_mid(params, g, h, g);
  if (p != 0 && mpz_divisible_ui_p(mid.get_mpz_t(), p))
    throw std::domain_error("middle weight is not a unit; element undefined");
  AlgebraElement r(p);
  std::size_t span = layer_span(params, g, h, t);
  for (std::size_t j = 0; j <= span; ++j) {
    for (const TripleSet& a : layer(params, g, h, t, j)) {
      mpz_class den = mid * k_of(params, a);
      Scalar c = Scalar::from_quotient(j % 2 ? mpz_class(-1) : mpz_class(1), den, p);
      r.add(B2Label{g, h, a}, c);
    }
  }
  return r;
}

std::vector<B2Label> radical_basis(const GDParams& params) {
  std::vector<B2Label> out;
  if (params.characteristic() == 0) return out;
  for (const B2Label& l : enumerate_b2(params))
    if (v_set(params, l.row, l.col, l.agg) != 0) out.push_back(l);
  return out;
}

mpz_class radical_dim(const GDParams& params) {
  if (params.characteristic() == 0) return 0;
  return dim_T(params) - mpz_class(static_cast<unsigned long>(quotient_basis(params).size()));
}

std::size_t radical_nilpotency_index(const GDParams& params) {
  const std::uint64_t p = params.characteristic();
  if (p == 0) return 1;
  std::size_t modular = 0;
  for (const Factor& f : params.factors())
    if ((f.groups - 1) % p == 0 || (f.group_size - 1) % p == 0 || f.group_size % p == 0)
      ++modular;
  return 2 * modular + 1;
}

bool is_semisimple(const GDParams& params) { return is_p_prime_valenced(params); }

bool in_quotient_basis(const GDParams& params, const DLabel& d) {
  if (!in_U(params, d.row, d.col, d.agg)) return false;
  return v_set(params, d.row, d.col, d.agg) == 0;
}

std::vector<DLabel> quotient_basis(const GDParams& params) {
  std::vector<DLabel> out;
  for (const B2Label& l : enumerate_b2(params)) {
    DLabel d{l.row, l.col, l.agg};
    if (v_set(params, l.row, l.col, l.agg) == 0) out.push_back(d);
  }
  return out;
}

std::optional<DLabel> quotient_multiply(const GDParams& params, const DLabel& a,
                                        const DLabel& b) {
  if (!in_quotient_basis(params, a) || !in_quotient_basis(params, b))
    throw std::invalid_argument("labels must lie in the quotient basis");
  if (!(a.col == b.row)) return std::nullopt;
  ClassKey ka = class_key(params, a), kb = class_key(params, b);
  if (ka != kb) return std::nullopt;
  DLabel out{a.row, b.col, compose(params, a.row, a.col, b.col, a.agg, b.agg)};
  if (!in_quotient_basis(params, out))
    throw std::logic_error("composed label left the quotient basis");
  return out;
}

ClassKey class_key(const GDParams& params, const DLabel& d) {
  std::uint64_t c1 = d.row.ones & d.col.ones & params.m_gt2_mask();
  std::uint64_t c2 = d.row.twos & d.col.twos;
  return ClassKey{c1 & ~d.agg.s1, (c2 & params.ell_gt2_mask()) & ~d.agg.s2, c2 & ~d.agg.s3};
}

std::vector<std::pair<std::size_t, std::size_t>> WedderburnReport::blocks() const {
  std::map<std::size_t, std::size_t> mult;
  for (const WedderburnClass& c : classes) ++mult[c.member_colors.size()];
  std::vector<std::pair<std::size_t, std::size_t>> out(mult.begin(), mult.end());
  std::reverse(out.begin(), out.end());
  return out;
}

WedderburnReport wedderburn(const GDParams& params) {
  std::map<ClassKey, WedderburnClass> classes;
  std::size_t total = 0;
  for (const DLabel& d : quotient_basis(params)) {
    ++total;
    ClassKey key = class_key(params, d);
    auto [it, inserted] = classes.try_emplace(key);
    if (inserted) it->second.representative = d;
    it->second.members.push_back(d);
    if (d.row == d.col) it->second.member_colors.push_back(d.row);
  }
  WedderburnReport report;
  for (auto& [key, cls] : classes) {
    std::sort(cls.member_colors.begin(), cls.member_colors.end(), ColorLess{});
    cls.member_colors.erase(
        std::unique(cls.member_colors.begin(), cls.member_colors.end()),
        cls.member_colors.end());
    std::size_t b = cls.member_colors.size();
    if (cls.members.size() != b * b)
      throw std::logic_error("class size is not the square of its diagonal count");
    report.quotient_dim += static_cast<unsigned long>(cls.members.size());
    report.classes.push_back(std::move(cls));
  }
  std::sort(report.classes.begin(), report.classes.end(),
            [](const WedderburnClass& a, const WedderburnClass& b) {
              return d_less(a.representative, b.representative);
            });
  if (report.quotient_dim != static_cast<unsigned long>(total))
    throw std::logic_error("class sizes do not add up");
  return report;
}

std::size_t irreducible_module_count(const GDParams& params) {
  return wedderburn(params).n_classes();
}

}  // namespace gdta
