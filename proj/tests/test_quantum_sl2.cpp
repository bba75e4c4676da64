#include <catch_amalgamated.hpp>

#include "sbc/biserial.hpp"
#include "sbc/errors.hpp"
#include "sbc/quantum_sl2.hpp"
#include "sbc/representation.hpp"

#include <algorithm>
#include <numeric>

using namespace sbc;

namespace {

std::vector<ComoduleLabel> string_labels_up_to(int block, int tmax, int ell) {
  std::vector<ComoduleLabel> out;
  for (int t = 0; t <= tmax; ++t)
    for (int s = 0; s <= t; ++s) {
      if ((t - s) % 2 == 0) {
        out.push_back(string_label(Family::m, block, t, s, ell));
        if (t != s) out.push_back(string_label(Family::m_prime, block, t, s, ell));
      } else {
        out.push_back(string_label(Family::n, block, t, s, ell));
        out.push_back(string_label(Family::n_prime, block, t, s, ell));
      }
    }
  return out;
}

}  // namespace

TEST_CASE("decompose_weight", "[sl2]") {
  CHECK(decompose_weight(13, 5) == WeightParts{2, 3});
  CHECK(decompose_weight(0, 7) == WeightParts{0, 0});
  CHECK(decompose_weight(7, 5) == WeightParts{1, 2});
  CHECK_THROWS_AS(decompose_weight(3, 4), DomainError);
  CHECK_THROWS_AS(decompose_weight(3, 1), DomainError);
}

TEST_CASE("tau and sigma", "[sl2]") {
  CHECK(tau(1, 5) == 7);
  CHECK(tau(7, 5) == 11);
  CHECK(tau(4, 5) == 4);
  CHECK(sigma(7, 5) == 1);
  CHECK(sigma(11, 5) == 7);
  CHECK_THROWS_AS(sigma(3, 5), DomainError);
  CHECK_THROWS_AS(sigma(9, 5), DomainError);
}

TEST_CASE("sigma and tau are mutually inverse", "[sl2][property]") {
  for (int ell : {3, 5, 7, 9})
    for (int r = 0; r <= 1000; ++r) {
      if (is_steinberg(r, ell)) {
        CHECK(tau(r, ell) == r);
        continue;
      }
      CHECK(sigma(tau(r, ell), ell) == r);
      if (r >= ell) CHECK(tau(sigma(r, ell), ell) == r);
    }
}

TEST_CASE("block vertices", "[sl2]") {
  CHECK(vertex_weight(1, 0, 5) == 1);
  CHECK(vertex_weight(1, 1, 5) == 7);
  CHECK(vertex_weight(1, 2, 5) == 11);
  CHECK(weight_vertex(11, 5) == BlockVertex{1, 2});
  CHECK_FALSE(weight_vertex(4, 5).has_value());
  CHECK_THROWS_AS(vertex_weight(4, 0, 5), DomainError);
  for (int ell : {3, 5, 7})
    for (int block = 0; block <= ell - 2; ++block)
      for (int n = 0; n <= 20; ++n) CHECK(weight_vertex(vertex_weight(block, n, ell), ell) == BlockVertex{block, n});
}

TEST_CASE("socle_layers", "[sl2]") {
  using Layers = std::vector<std::vector<int>>;
  CHECK(socle_layers(injective_label(7), 5) == Layers{{7}, {1, 11}, {7}});
  CHECK(socle_layers(injective_label(1), 5) == Layers{{1}, {7}, {1}});
  CHECK(socle_layers(weyl_label(7), 5) == Layers{{1}, {7}});
  CHECK(socle_layers(dual_weyl_label(7), 5) == Layers{{7}, {1}});
  CHECK(socle_layers(weyl_label(3), 5) == Layers{{3}});
  CHECK(socle_layers(weyl_label(9), 5) == Layers{{9}});
  CHECK(socle_layers(injective_label(4), 5) == Layers{{4}});
  CHECK(socle_layers(simple_label(11), 5) == Layers{{11}});
}

TEST_CASE("dimensions", "[sl2]") {
  CHECK(dim(weyl_label(7), 5) == 8);
  CHECK(dim(injective_label(7), 5) == 20);
  CHECK(dim(simple_label(7), 5) == 6);
  CHECK(dim(injective_label(4), 5) == 5);
  CHECK(dim(dual_weyl_label(7), 5) == 8);
}

TEST_CASE("injective dimensions agree with socle layers", "[sl2][property]") {
  for (int ell : {3, 5, 7})
    for (int r = 0; r <= 50; ++r) {
      if (is_steinberg(r, ell)) continue;
      const auto x = injective_label(r);
      int total = 0;
      for (const auto& layer : socle_layers(x, ell))
        for (int w : layer) total += simple_dim(w, ell);
      const int r1 = decompose_weight(r, ell).r1;
      CHECK(dim(x, ell) == 2 * ell * (r1 + 1));
      CHECK(total == dim(x, ell));
    }
}

TEST_CASE("composition_factors", "[sl2]") {
  CHECK(composition_factors(string_label(Family::m, 1, 2, 0, 5), 5) == std::vector<int>{1, 7, 11});
  CHECK(composition_factors(simple_label(8), 5) == std::vector<int>{8});
  CHECK(composition_factors(injective_label(7), 5) == std::vector<int>{1, 7, 7, 11});
  CHECK(composition_factors(injective_label(1), 5) == std::vector<int>{1, 1, 7});
  CHECK(composition_factors(weyl_label(7), 5) == std::vector<int>{1, 7});
}

TEST_CASE("dim is additive over composition factors", "[sl2][property]") {
  for (int ell : {3, 5, 7})
    for (int block = 0; block <= ell - 2; ++block) {
      auto labels = string_labels_up_to(block, 8, ell);
      for (int n = 0; n <= 8; ++n) {
        const int r = vertex_weight(block, n, ell);
        labels.push_back(injective_label(r));
        labels.push_back(weyl_label(r));
        labels.push_back(dual_weyl_label(r));
      }
      for (const auto& x : labels) {
        const auto f = composition_factors(x, ell);
        const int sum = std::accumulate(f.begin(), f.end(), 0, [&](int acc, int w) { return acc + simple_dim(w, ell); });
        CHECK(dim(x, ell) == sum);
      }
    }
  for (int r = 0; r <= 40; ++r) CHECK(simple_dim(r, 5) == static_cast<int>(weights(r, 5).size()));
}

TEST_CASE("weights", "[sl2]") {
  CHECK(weights(1, 5) == std::vector<int>{1, -1});
  CHECK(weights(5, 5) == std::vector<int>{5, -5});
  CHECK(weights(7, 5) == std::vector<int>{7, 5, 3, -3, -5, -7});
  CHECK(weights(0, 3) == std::vector<int>{0});
}

TEST_CASE("labels", "[sl2]") {
  CHECK(render_label(string_label(Family::m_prime, 1, 3, 1, 5)) == "M'(3,1)@b1");
  CHECK(render_label(string_label(Family::m, 1, 3, 3, 5)) == "L(" + std::to_string(vertex_weight(1, 3, 5)) + ")");
  CHECK(render_label(weyl_label(7)) == "V(7)");
  CHECK(render_label(dual_weyl_label(7)) == "coV(7)");
  CHECK(render_label(injective_label(3)) == "I(3)");
  CHECK_THROWS_AS(string_label(Family::m, 1, 3, 0, 5), DomainError);
  CHECK_THROWS_AS(string_label(Family::n, 1, 2, 0, 5), DomainError);
  CHECK_THROWS_AS(string_label(Family::n, 1, 1, 1, 5), DomainError);
  CHECK_THROWS_AS(string_label(Family::m, 1, 0, 2, 5), DomainError);
  CHECK_THROWS_AS(string_label(Family::m, 4, 2, 0, 5), DomainError);
  CHECK(is_injective(injective_label(7), 5));
  CHECK(is_injective(simple_label(4), 5));
  CHECK_FALSE(is_injective(simple_label(3), 5));
}

TEST_CASE("localize and globalize", "[sl2]") {
  const auto w = localize(weyl_label(7), 5);
  CHECK(w.family == Family::n_prime);
  CHECK(w.block == 1);
  CHECK(w.t == 1);
  CHECK(w.s == 0);
  CHECK(localize(dual_weyl_label(11), 5).family == Family::n);
  CHECK(localize(weyl_label(1), 5).family == Family::simple);
  CHECK_THROWS_AS(localize(simple_label(9), 5), DomainError);
  for (const auto& x : string_labels_up_to(1, 6, 5)) CHECK(globalize(localize(x, 5), 5) == x);
}

TEST_CASE("basic_block", "[sl2]") {
  CHECK(basic_block(0).quiver.vertex_count() == 1);
  CHECK(basic_block(0).quiver.arrow_count() == 0);
  const auto b1 = basic_block(1);
  CHECK(PathSpan(b1.spanning_set()).dimension() == 5);
  CHECK(b1.elements.size() == 1);
  const auto b2 = basic_block(2);
  CHECK(PathSpan(b2.spanning_set()).dimension() == 9);
  PathVector d1(make_path(b2.quiver, {"b0", "a0"}));
  d1.add(make_path(b2.quiver, {"a1", "b1"}), 1);
  CHECK(PathSpan(b2.spanning_set()).contains(d1));
  CHECK_FALSE(PathSpan(b2.spanning_set()).contains(PathVector(make_path(b2.quiver, {"a1", "b1"}))));
  for (int n = 1; n <= 10; ++n) {
    const auto b = basic_block(n);
    CHECK(check_subcoalgebra(b));
    const auto r = check_special_biserial(b);
    CHECK(r.s1);
    CHECK(r.s2);
    CHECK(r.s3 == (n == 1));
    CHECK(PathSpan(b.spanning_set()).dimension() == 4 * n + 1);
    CHECK(b.boundary == std::vector<int>{n});
  }
}

TEST_CASE("string_word", "[sl2]") {
  const auto q = basic_block_string(4).quiver;
  CHECK(render_word(q, string_word(string_label(Family::m, 1, 2, 0, 5), 5, 4)) == "a1 b0^-1");
  CHECK(render_word(q, string_word(string_label(Family::n_prime, 1, 1, 0, 5), 5, 4)) == "b0^-1");
  CHECK(render_word(q, string_word(string_label(Family::m, 1, 3, 3, 5), 5, 4)) == "e_3");
  CHECK(render_word(q, string_word(string_label(Family::m_prime, 1, 2, 0, 5), 5, 4)) == "b1^-1 a0");
  CHECK(render_word(q, string_word(string_label(Family::n, 1, 1, 0, 5), 5, 4)) == "a0");
  CHECK_THROWS_AS(string_word(injective_label(7), 5, 4), DomainError);
  CHECK_THROWS_AS(string_word(string_label(Family::m, 1, 6, 0, 5), 5, 4), WindowOverflow);
}

TEST_CASE("realize", "[sl2]") {
  const int ell = 5;
  CHECK(realize(simple_label(7), ell, 4).dims == std::vector<int>{0, 1, 0, 0, 0});
  CHECK(realize(string_label(Family::m, 1, 2, 0, ell), ell, 4).dims == std::vector<int>{1, 1, 1, 0, 0});
  CHECK(realize(injective_label(7), ell, 4).dims == std::vector<int>{1, 2, 1, 0, 0});
  CHECK(realize(injective_label(1), ell, 4).dims == std::vector<int>{2, 1, 0, 0, 0});
  CHECK_THROWS_AS(realize(string_label(Family::m, 1, 3, 1, ell), ell, 4), WindowOverflow);
  CHECK_THROWS_AS(realize(simple_label(4), ell, 4), DomainError);
}

TEST_CASE("realized comodules satisfy the relations and have the listed socle", "[sl2][property]") {
  const int ell = 5;
  const int n = 10;
  const auto b = basic_block(n);
  const auto rel = dual_relations(b);
  for (int block : {0, 1, 2}) {
    std::vector<ComoduleLabel> labels = string_labels_up_to(block, 8, ell);
    for (int m = 0; m <= 7; ++m) {
      labels.push_back(injective_label(vertex_weight(block, m, ell)));
      labels.push_back(weyl_label(vertex_weight(block, m, ell)));
      labels.push_back(dual_weyl_label(vertex_weight(block, m, ell)));
    }
    for (const auto& x : labels) {
      const auto m = realize(x, ell, n);
      CHECK(satisfies(b.quiver, m, rel));
      CHECK(m.dims == label_dimension_vector(x, ell, n));
      CHECK(m.total_dimension() == static_cast<int>(composition_factors(x, ell).size()));
      if (x.family == Family::simple || x.family == Family::weyl || x.family == Family::dual_weyl ||
          x.family == Family::injective) {
        std::vector<int> expected(static_cast<std::size_t>(n + 1), 0);
        const auto layers = socle_layers(x, ell);
        for (int w : layers.front()) expected[static_cast<std::size_t>(weight_vertex(w, ell)->vertex)] += 1;
        CHECK(rep_socle(b.quiver, m).dims() == expected);
      }
    }
  }
}

TEST_CASE("duality", "[sl2]") {
  const int ell = 5;
  CHECK(duality(string_label(Family::m, 1, 3, 1, ell), ell) == string_label(Family::m_prime, 1, 3, 1, ell));
  CHECK(duality(string_label(Family::n, 1, 2, 1, ell), ell) == string_label(Family::n_prime, 1, 2, 1, ell));
  CHECK(duality(injective_label(7), ell) == injective_label(7));
  CHECK(duality(simple_label(7), ell) == simple_label(7));
  CHECK(duality(weyl_label(7), ell) == dual_weyl_label(7));
  for (int block = 0; block <= 3; ++block)
    for (const auto& x : string_labels_up_to(block, 10, ell)) CHECK(duality(duality(x, ell), ell) == x);
}

TEST_CASE("indecomposables_with_dimension_vector", "[sl2]") {
  const int ell = 5;
  const int n = 6;
  const auto b = basic_block(n);
  const auto vec = [&](std::initializer_list<std::pair<int, int>> entries) {
    std::vector<int> v(static_cast<std::size_t>(n + 1), 0);
    for (auto [i, d] : entries) v[static_cast<std::size_t>(i)] = d;
    return v;
  };
  CHECK(indecomposables_with_dimension_vector(1, vec({{2, 1}}), ell, n) ==
        std::vector<ComoduleLabel>{simple_label(vertex_weight(1, 2, ell))});
  CHECK(indecomposables_with_dimension_vector(1, vec({{1, 1}, {2, 1}, {3, 1}}), ell, n) ==
        std::vector<ComoduleLabel>{string_label(Family::m, 1, 3, 1, ell), string_label(Family::m_prime, 1, 3, 1, ell)});
  CHECK(indecomposables_with_dimension_vector(1, vec({{1, 1}, {2, 2}, {3, 1}}), ell, n) ==
        std::vector<ComoduleLabel>{injective_label(vertex_weight(1, 2, ell))});
  CHECK(indecomposables_with_dimension_vector(1, vec({{1, 1}, {3, 1}}), ell, n).empty());
  CHECK_THROWS_AS(indecomposables_with_dimension_vector(1, {1}, ell, n), DomainError);

  SECTION("results are pairwise non-isomorphic") {
    for (int s = 0; s <= n - 2; ++s)
      for (int t = s; t <= n - 2; ++t) {
        std::vector<int> v(static_cast<std::size_t>(n + 1), 0);
        for (int i = s; i <= t; ++i) v[static_cast<std::size_t>(i)] = 1;
        const auto found = indecomposables_with_dimension_vector(1, v, ell, n);
        CHECK(found.size() == (t == s ? 1u : 2u));
        for (std::size_t i = 0; i < found.size(); ++i)
          for (std::size_t j = i + 1; j < found.size(); ++j)
            CHECK_FALSE(is_isomorphic(b.quiver, realize(found[i], ell, n), realize(found[j], ell, n)));
      }
  }
}
