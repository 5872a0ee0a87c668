#include <doctest.h>

#include <algorithm>
#include <random>

#include "helpers.hpp"

using namespace gdta;
using namespace gdta::test;

namespace {

AlgebraElement basis_elem(const GDParams& params, const B2Label& l) {
  AlgebraElement e(params.characteristic());
  e.add(l, Scalar::one(params.characteristic()));
  return e;
}

GDParams shape_params(int shape, std::uint64_t p) {
  switch (shape) {
    case 0: return P("2x2", p);
    case 1: return P("3x2", p);
    case 2: return P("2x3", p);
    default: return P("3x3", p);
  }
}

}  // namespace

TEST_CASE("dimension formula") {
  CHECK(dim_T(P("2x2", 0)) == 10);
  CHECK(dim_T(P("3x2", 0)) == 11);
  CHECK(dim_T(P("2x3", 0)) == 11);
  CHECK(dim_T(P("3x3", 0)) == 12);
  CHECK(dim_T(P("2x3,3x3", 0)) == 132);
  CHECK(dim_T(P("2x2,3x2,2x3,3x3", 0)) == 10 * 11 * 11 * 12);

  for (const char* text : {"2x2", "3x2", "2x3", "3x3", "2x3,3x3", "2x2,2x2"}) {
    GDParams params = P(text, 0);
    mpz_class d = dim_T(params);
    CHECK(d == static_cast<unsigned long>(enumerate_b2(params).size()));
    CHECK(d == static_cast<unsigned long>(enumerate_b1(params).size()));
  }
}

TEST_CASE("n=1 basis inventory by parameter shape") {
  // ten shared labels plus the shape-dependent extras
  TripleSet extra_span = ts({}, {}, {1});    // inside the core span
  TripleSet extra_bull = ts({}, {1}, {1});   // bullet coordinate engaged
  TripleSet extra_circ = ts({1}, {}, {});    // circle coordinate engaged

  auto has = [](const std::vector<B2Label>& v, const B2Label& l) {
    return std::find(v.begin(), v.end(), l) != v.end();
  };
  Color two = col({2}), one = col({1});

  std::vector<B2Label> b22 = enumerate_b2(P("2x2", 0));
  CHECK(b22.size() == 10);
  CHECK(has(b22, B2Label{two, two, extra_span}));
  // the ten shared labels: one per anchor pair plus the span extra
  {
    Color zero = col({0});
    std::vector<B2Label> expect;
    for (const Color& a : {zero, one, two})
      for (const Color& b : {zero, one, two}) expect.push_back(B2Label{a, b, kEmptyTriple});
    expect.push_back(B2Label{two, two, extra_span});
    std::sort(expect.begin(), expect.end(), B2Less{});
    std::vector<B2Label> sorted = b22;
    std::sort(sorted.begin(), sorted.end(), B2Less{});
    CHECK(sorted == expect);
  }

  std::vector<B2Label> b32 = enumerate_b2(P("3x2", 0));
  CHECK(b32.size() == 11);
  CHECK(has(b32, B2Label{two, two, extra_bull}));

  std::vector<B2Label> b23 = enumerate_b2(P("2x3", 0));
  CHECK(b23.size() == 11);
  CHECK(has(b23, B2Label{one, one, extra_circ}));

  std::vector<B2Label> b33 = enumerate_b2(P("3x3", 0));
  CHECK(b33.size() == 12);
  CHECK(has(b33, B2Label{one, one, extra_circ}));
  CHECK(has(b33, B2Label{two, two, extra_bull}));
}

TEST_CASE("worked product with scalar six") {
  Color k = col({0, 2}), l = col({1, 2});
  TripleSet g = ts({}, {}, {2}), h = ts({}, {2}, {2});
  for (std::uint64_t p : {0ull, 2ull, 3ull, 5ull}) {
    GDParams params = P("2x3,3x3", p);
    AlgebraElement prod = multiply_b2(params, B2Label{k, l, g}, B2Label{l, k, h});
    if (p == 2 || p == 3) {
      CHECK(prod.is_zero());
    } else {
      REQUIRE(prod.term_count() == 1);
      const auto& [label, coeff] = *prod.terms().begin();
      CHECK(label == B2Label{k, k, h});
      CHECK(coeff == Scalar::from_integer(6, p));
    }
  }
}

TEST_CASE("products against mismatched anchors vanish") {
  GDParams params = P("2x3,3x3", 0);
  Color k = col({0, 2}), l = col({1, 2}), m = col({2, 2});
  TripleSet g = ts({}, {}, {2});
  CHECK(multiply_b2(params, B2Label{k, l, g}, B2Label{m, k, kEmptyTriple}).is_zero());
}

TEST_CASE("one-sided units inside a row or column") {
  for (const char* text : {"3x3", "2x3,3x3"}) {
    GDParams params = P(text, 5);
    std::vector<Color> colors = enumerate_colors(params);
    for (const Color& g : colors)
      for (const Color& h : colors)
        for (const TripleSet& t : enumerate_U(params, g, h)) {
          AlgebraElement left =
              multiply_b2(params, B2Label{g, h, kEmptyTriple}, B2Label{h, h, t});
          REQUIRE(left.term_count() == 1);
          CHECK(left.terms().begin()->first == B2Label{g, h, t});
          CHECK(left.terms().begin()->second == Scalar::one(5));
          AlgebraElement right =
              multiply_b2(params, B2Label{g, g, t}, B2Label{g, h, kEmptyTriple});
          REQUIRE(right.term_count() == 1);
          CHECK(right.terms().begin()->first == B2Label{g, h, t});
        }
  }
}

TEST_CASE("same-corner products aggregate by union") {
  for (std::uint64_t p : {0ull, 2ull, 3ull}) {
    GDParams params = P("2x3,3x3", p);
    for (const Color& g : enumerate_colors(params)) {
      std::vector<TripleSet> us = enumerate_U(params, g, g);
      for (const TripleSet& a : us)
        for (const TripleSet& b : us) {
          AlgebraElement prod = multiply_b2(params, B2Label{g, g, a}, B2Label{g, g, b});
          Scalar expect = Scalar::from_integer(k_of(params, ts_intersect(a, b)), p);
          if (expect.is_zero()) {
            CHECK(prod.is_zero());
          } else {
            REQUIRE(prod.term_count() == 1);
            CHECK(prod.terms().begin()->first == B2Label{g, g, ts_union(a, b)});
            CHECK(prod.terms().begin()->second == expect);
          }
          // the corner is commutative
          CHECK(prod == multiply_b2(params, B2Label{g, g, b}, B2Label{g, g, a}));
        }
    }
  }
}

TEST_CASE("identity and transpose") {
  for (std::uint64_t p : {0ull, 3ull}) {
    GDParams params = P("2x3,3x3", p);
    AlgebraElement id = identity(params);
    CHECK(id.term_count() == 9);
    std::vector<B2Label> labels = enumerate_b2(params);
    std::mt19937_64 rng(3);
    for (int t = 0; t < 40; ++t) {
      AlgebraElement x = basis_elem(params, labels[rng() % labels.size()]);
      x += basis_elem(params, labels[rng() % labels.size()]).scaled(Scalar::from_integer(7, p));
      CHECK(multiply(params, x, id) == x);
      CHECK(multiply(params, id, x) == x);
      CHECK(transpose(transpose(x)) == x);
      AlgebraElement y = basis_elem(params, labels[rng() % labels.size()]);
      CHECK(transpose(multiply(params, x, y)) ==
            multiply(params, transpose(y), transpose(x)));
    }
  }
}

TEST_CASE("associativity, exhaustive across the four shapes") {
  for (int shape = 0; shape < 4; ++shape) {
    for (std::uint64_t p : {0ull, 2ull, 3ull, 5ull}) {
      GDParams params = shape_params(shape, p);
      std::vector<B2Label> labels = enumerate_b2(params);
      for (const B2Label& a : labels)
        for (const B2Label& b : labels)
          for (const B2Label& c : labels) {
            AlgebraElement left =
                multiply(params, multiply_b2(params, a, b), basis_elem(params, c));
            AlgebraElement right =
                multiply(params, basis_elem(params, a), multiply_b2(params, b, c));
            CHECK(left == right);
          }
    }
  }
}

TEST_CASE("associativity, sampled pairs at two factors") {
  GDParams params = P("2x3,3x3", 3);
  std::vector<B2Label> labels = enumerate_b2(params);
  std::mt19937_64 rng(17);
  for (int t = 0; t < 3000; ++t) {
    const B2Label& a = labels[rng() % labels.size()];
    const B2Label& b = labels[rng() % labels.size()];
    const B2Label& c = labels[rng() % labels.size()];
    CHECK(multiply(params, multiply_b2(params, a, b), basis_elem(params, c)) ==
          multiply(params, basis_elem(params, a), multiply_b2(params, b, c)));
  }
}

TEST_CASE("round trip between the two bases") {
  for (std::uint64_t p : {0ull, 2ull, 3ull, 5ull}) {
    for (const char* text : {"2x2", "3x2", "2x3", "3x3", "2x3,3x3"}) {
      GDParams params = P(text, p);
      for (const B2Label& l : enumerate_b2(params)) {
        // expand aggregated -> elementary -> aggregated
        AlgebraElement back(p);
        for (const auto& [b1, c1] : b2_expand_in_b1(params, l))
          for (const auto& [b2, c2] : b1_expand_in_b2(params, b1)) back.add(b2, c1 * c2);
        AlgebraElement expect(p);
        expect.add(l, Scalar::one(p));
        CHECK(back == expect);
      }
    }
  }
}

TEST_CASE("elementary basis expansion at a single zero anchor") {
  GDParams params = P("3x3", 0);
  auto m = b1_expand_in_b2(params, B1Label{Color{}, Color{}, Color{}});
  REQUIRE(m.size() == 1);
  CHECK(m.begin()->first == B2Label{Color{}, Color{}, kEmptyTriple});
  CHECK(m.begin()->second == Scalar::one(0));
}

TEST_CASE("expansion coefficients at one factor stay in {0,1,-1}") {
  for (int shape = 0; shape < 4; ++shape) {
    GDParams params = shape_params(shape, 0);
    for (const B1Label& b : enumerate_b1(params))
      for (const auto& [l, c] : b1_expand_in_b2(params, b)) {
        bool unit = c == Scalar::one(0) || c == -Scalar::one(0);
        CHECK(unit);
      }
  }
}

TEST_CASE("center labels at one factor") {
  TripleSet g = ts({}, {}, {1}), h = ts({}, {1}, {1}), i = ts({1}, {}, {});
  std::vector<CenterLabel> c22 = enumerate_center_labels(P("2x2", 0));
  CHECK(c22 == std::vector<CenterLabel>{kEmptyTriple, g});
  std::vector<CenterLabel> c32 = enumerate_center_labels(P("3x2", 0));
  CHECK(c32 == std::vector<CenterLabel>{kEmptyTriple, g, h});
  std::vector<CenterLabel> c23 = enumerate_center_labels(P("2x3", 0));
  CHECK(c23 == std::vector<CenterLabel>{kEmptyTriple, g, i});
  std::vector<CenterLabel> c33 = enumerate_center_labels(P("3x3", 0));
  CHECK(c33 == std::vector<CenterLabel>{kEmptyTriple, g, i, h});
}

TEST_CASE("center dimension is characteristic independent") {
  for (const char* text : {"2x2", "3x2", "2x3", "3x3", "2x3,3x3", "2x2,3x3"}) {
    for (std::uint64_t p : {0ull, 2ull, 3ull, 5ull}) {
      GDParams params = P(text, p);
      CHECK(center_dim(params) ==
            static_cast<unsigned long>(enumerate_center_labels(params).size()));
      CHECK(center_basis(params).size() == enumerate_center_labels(params).size());
    }
  }
  CHECK(center_dim(P("2x3,3x3", 0)) == 12);
  CHECK(center_dim(P("2x2", 0)) == 2);
  CHECK(center_dim(P("3x3", 0)) == 4);
}

TEST_CASE("central elements commute; off-diagonal basis elements do not") {
  for (std::uint64_t p : {0ull, 2ull, 3ull}) {
    GDParams params = P("2x3,3x3", p);
    AlgebraElement id = identity(params);
    CHECK(center_element(params, kEmptyTriple) == id);
    for (const auto& [label, elem] : center_basis(params)) {
      CHECK(is_central(params, elem));
      // diagonal-anchored support only
      for (const auto& [l, c] : elem.terms()) CHECK(l.row == l.col);
    }
    AlgebraElement off(p);
    off.add(B2Label{col({0, 0}), col({0, 1}), kEmptyTriple}, Scalar::one(p));
    CHECK_FALSE(is_central(params, off));
  }
}

TEST_CASE("squares of central generators") {
  GDParams params = P("2x3,3x3", 0);
  TripleSet g = ts({}, {}, {2});
  AlgebraElement cg = center_element(params, g);
  CHECK(multiply(params, cg, cg) == cg.scaled(Scalar::from_integer(3, 0)));

  for (std::uint64_t p : {0ull, 2ull, 3ull, 5ull}) {
    GDParams q = P("2x3,3x3", p);
    for (const auto& [label, elem] : center_basis(q)) {
      Scalar kh = Scalar::from_integer(k_of(q, label), p);
      CHECK(multiply(q, elem, elem) == elem.scaled(kh));
    }
  }
}

TEST_CASE("scalar arithmetic edge cases") {
  CHECK(Scalar::from_integer(-7, 5) == Scalar::from_integer(3, 5));
  CHECK(Scalar::from_integer(-7, 5).residue() == 3);
  CHECK(Scalar::from_quotient(1, 3, 5) == Scalar::from_integer(2, 5));  // 3 * 2 = 6 = 1
  CHECK(Scalar::from_quotient(3, 4, 0).str() == "3/4");
  CHECK(Scalar::from_integer(2, 7).inverse() == Scalar::from_integer(4, 7));
  CHECK((-Scalar::from_integer(2, 7)).residue() == 5);
  CHECK_THROWS_AS(Scalar::zero(5).inverse(), std::domain_error);
  CHECK_THROWS_AS(Scalar::from_quotient(1, 5, 5), std::domain_error);
  CHECK_THROWS_AS(Scalar::one(3) + Scalar::one(5), std::logic_error);
  CHECK(is_prime_u64(2));
  CHECK(is_prime_u64(1000003));
  CHECK_FALSE(is_prime_u64(1));
  CHECK_FALSE(is_prime_u64(1000001));  // 101 * 9901
}

TEST_CASE("enumeration respects the resource caps") {
  std::vector<Factor> many(14, Factor{2, 2});
  GDParams params(many, 0);
  CHECK_THROWS_AS(enumerate_colors(params), ResourceLimitError);
  CHECK_NOTHROW(enumerate_colors(params, 5000000));

  std::vector<Factor> wide(7, Factor{3, 3});  // dimension 12^7
  CHECK_THROWS_AS(enumerate_b2(GDParams(wide, 0)), ResourceLimitError);
}

TEST_CASE("label serialization") {
  GDParams params = P("2x3,3x3", 5);
  CHECK(color_json(params, col({0, 2})) == "[0,2]");
  CHECK(triple_json(params, ts({}, {2}, {2})) == "[[],[2],[2]]");
  B2Label l{col({0, 2}), col({1, 2}), ts({}, {}, {2})};
  CHECK(b2_label_json(params, l) == R"({"row":[0,2],"col":[1,2],"agg":[[],[],[2]]})");
  AlgebraElement x(5);
  x.add(l, Scalar::from_integer(7, 5));
  CHECK(element_json(params, x) ==
        R"([{"label":{"row":[0,2],"col":[1,2],"agg":[[],[],[2]]},"coeff":"2 mod 5"}])");
  AlgebraElement y(0);
  y.add(l, Scalar::from_quotient(3, 4, 0));
  CHECK(element_json(params, y).find("\"3/4\"") != std::string::npos);
}
