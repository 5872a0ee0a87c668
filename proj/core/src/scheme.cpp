#include "gdta/scheme.hpp"

#include <algorithm>
#include <charconv>

namespace gdta {

bool color_less(const Color& a, const Color& b) {
  std::uint64_t diff = (a.ones ^ b.ones) | (a.twos ^ b.twos);
  if (diff == 0) return false;
  int i = std::countr_zero(diff);
  return a.entry(i) < b.entry(i);
}

GDParams::GDParams(std::vector<Factor> factors, std::uint64_t characteristic)
    : factors_(std::move(factors)), p_(characteristic) {
  if (factors_.empty()) throw std::invalid_argument("at least one factor required");
  if (factors_.size() > kMaxFactors) throw std::invalid_argument("too many factors (max 62)");
  if (p_ != 0 && !is_prime_u64(p_)) throw std::invalid_argument("characteristic must be 0 or prime");
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const Factor& f = factors_[i];
    if (f.groups < 2 || f.group_size < 2)
      throw std::invalid_argument("factor parameters must both be >= 2");
    std::uint64_t bit = 1ull << i;
    full_ |= bit;
    if (f.groups > 2) ell_gt2_ |= bit;
    if (f.group_size > 2) m_gt2_ |= bit;
    if (p_) {
      if ((f.group_size - 1) % p_ == 0) div_m1_ |= bit;
      if ((f.groups - 1) % p_ == 0 || f.group_size % p_ == 0) div_lm_ |= bit;
      if (f.group_size % p_ == 0) div_m_ |= bit;
    }
  }
}

mpz_class GDParams::vertex_count() const {
  mpz_class r = 1;
  for (const Factor& f : factors_) r *= mpz_class(f.groups) * f.group_size;
  return r;
}

std::array<std::size_t, 4> GDParams::shape_counts() const {
  std::array<std::size_t, 4> c{0, 0, 0, 0};
  for (const Factor& f : factors_) {
    if (f.groups == 2 && f.group_size == 2)
      ++c[0];
    else if (f.groups > 2 && f.group_size == 2)
      ++c[1];
    else if (f.group_size > 2 && f.groups == 2)
      ++c[2];
    else
      ++c[3];
  }
  return c;
}

std::vector<Factor> parse_factors(const std::string& text) {
  std::vector<Factor> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    std::size_t x = item.find('x');
    if (x == std::string::npos || x == 0 || x + 1 >= item.size())
      throw std::invalid_argument("malformed factor '" + item + "', expected LxM");
    Factor f;
    auto parse_u64 = [&](const std::string& s) {
      std::uint64_t v = 0;
      auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc() || p != s.data() + s.size())
        throw std::invalid_argument("malformed integer '" + s + "' in factor list");
      return v;
    };
    f.groups = parse_u64(item.substr(0, x));
    f.group_size = parse_u64(item.substr(x + 1));
    if (f.groups < 2 || f.group_size < 2)
      throw std::invalid_argument("factor parameters must both be >= 2: '" + item + "'");
    out.push_back(f);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (out.empty()) throw std::invalid_argument("empty factor list");
  return out;
}

std::string format_factors(const std::vector<Factor>& factors) {
  std::string s;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(factors[i].groups) + "x" + std::to_string(factors[i].group_size);
  }
  return s;
}

mpz_class gd_intersection_number(std::uint64_t ell, std::uint64_t m, int i, int j, int k) {
  if (ell < 2 || m < 2) throw std::invalid_argument("group divisible parameters must be >= 2");
  auto bad = [](int v) { return v < 0 || v > 2; };
  if (bad(i) || bad(j) || bad(k)) throw std::invalid_argument("relation labels must be in [0,2]");
  const mpz_class g(ell), h(m);
  if (k == 0) {
    if (i == 0 && j == 0) return 1;
    if (i == 1 && j == 1) return h - 1;
    if (i == 2 && j == 2) return (g - 1) * h;
    return 0;
  }
  if (k == 1) {
    if ((i == 0 && j == 1) || (i == 1 && j == 0)) return 1;
    if (i == 1 && j == 1) return h - 2;
    if (i == 2 && j == 2) return (g - 1) * h;
    return 0;
  }
  // k == 2
  if ((i == 0 && j == 2) || (i == 2 && j == 0)) return 1;
  if ((i == 1 && j == 2) || (i == 2 && j == 1)) return h - 1;
  if (i == 2 && j == 2) return (g - 2) * h;
  return 0;
}

mpz_class intersection_number(const GDParams& params, const Color& i, const Color& j,
                              const Color& k) {
  std::uint64_t stray = (i.ones | i.twos | j.ones | j.twos | k.ones | k.twos) & ~params.full_mask();
  if (stray) throw std::invalid_argument("color has entries beyond the factor count");
  mpz_class r = 1;
  for (std::size_t a = 0; a < params.n(); ++a) {
    r *= gd_intersection_number(params.factors()[a].groups, params.factors()[a].group_size,
                                i.entry(a), j.entry(a), k.entry(a));
    if (r == 0) return r;
  }
  return r;
}

mpz_class valency(const GDParams& params, const Color& g) {
  mpz_class r = 1;
  for (std::size_t a = 0; a < params.n(); ++a) {
    const Factor& f = params.factors()[a];
    switch (g.entry(a)) {
      case 1: r *= f.group_size - 1; break;
      case 2: r *= mpz_class(f.groups - 1) * f.group_size; break;
      default: break;
    }
  }
  return r;
}

bool is_p_prime_valenced(const GDParams& params) {
  std::uint64_t p = params.characteristic();
  if (p == 0) return true;
  for (const Factor& f : params.factors()) {
    if ((f.groups - 1) % p == 0 || (f.group_size - 1) % p == 0 || f.group_size % p == 0)
      return false;
  }
  return true;
}

bool support_nonzero(const GDParams& params, const Color& g, const Color& h, const Color& i) {
  IndexProfile pg = params.profile(g), ph = params.profile(h);
  std::uint64_t ones_floor = (pg.zeros & ph.ones) | (pg.ones & ph.zeros);
  std::uint64_t ones_ceil =
      ones_floor | (pg.ones & ph.ones & params.m_gt2_mask()) | (pg.twos & ph.twos);
  std::uint64_t twos_floor = pg.twos ^ ph.twos;
  std::uint64_t twos_ceil = twos_floor | (pg.twos & ph.twos & params.ell_gt2_mask());
  return (ones_floor & ~i.ones) == 0 && (i.ones & ~ones_ceil) == 0 &&
         (twos_floor & ~i.twos) == 0 && (i.twos & ~twos_ceil) == 0;
}

std::vector<Color> enumerate_colors(const GDParams& params, std::size_t limit) {
  std::size_t n = params.n();
  double count = 1;
  for (std::size_t i = 0; i < n; ++i) count *= 3;
  if (count > static_cast<double>(limit))
    throw ResourceLimitError("3^n exceeds the color enumeration cap");
  std::vector<Color> out;
  out.reserve(static_cast<std::size_t>(count));
  std::vector<int> digits(n, 0);
  for (;;) {
    Color c;
    for (std::size_t i = 0; i < n; ++i) {
      if (digits[i] == 1) c.ones |= 1ull << i;
      if (digits[i] == 2) c.twos |= 1ull << i;
    }
    out.push_back(c);
    // odometer: last coordinate varies fastest, giving tuple-lex order
    std::size_t i = n;
    while (i > 0 && digits[i - 1] == 2) digits[--i] = 0;
    if (i == 0) break;
    ++digits[i - 1];
  }
  return out;
}

std::vector<Color> enumerate_P(const GDParams& params, const Color& g, const Color& h) {
  std::vector<Color> out;
  for (const Color& a : enumerate_colors(params))
    if (support_nonzero(params, g, h, a)) out.push_back(a);
  return out;
}

}  // namespace gdta
