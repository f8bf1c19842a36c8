#include "doctest.h"

#include "nichols/super_letters.hpp"

using namespace nichols;

namespace {

Cyc z(long m, long k = 1) { return Cyc::zeta(m).pow(k); }

BraidedSpace dim36_space() {
  std::vector<std::vector<Cyc>> q{{z(6, 2), -z(6, 2)}, {Cyc::one(6), -Cyc::one(6)}};
  return BraidedSpace(6, q);
}

BraidedSpace a2_space(long m) {
  std::vector<std::vector<Cyc>> q{{z(m), z(m, m - 1)}, {Cyc::one(m), z(m)}};
  return BraidedSpace(m, q);
}

std::vector<Word> words_of(const SuperLetterSet& s) {
  std::vector<Word> out;
  for (const auto& r : s.hard_letters()) out.push_back(r.word);
  return out;
}

}  // namespace

TEST_CASE("dim-36 example: D, orders, heights, roots") {
  BraidedSpace v = dim36_space();
  NicholsBasis basis(v, 12);
  SuperLetterSet letters(basis);

  CHECK(words_of(letters) == std::vector<Word>{word_of({1}), word_of({1, 1, 2}),
                                               word_of({1, 2}), word_of({2})});

  // orders of p_uu per word: (1) -> 3, (112) -> 2, (12) -> 3, (2) -> 2
  std::vector<long> orders;
  std::vector<long> heights;
  for (const auto& r : letters.hard_letters()) {
    REQUIRE(r.ord_puu.has_value());
    orders.push_back(*r.ord_puu);
    REQUIRE(r.height.kind == HeightKind::Finite);
    heights.push_back(r.height.value);
    // hard letters have nonzero bracketed values
    bool nonzero = false;
    for (const Cyc& c : r.nf_coords) nonzero = nonzero || !c.is_zero();
    CHECK(nonzero);
  }
  CHECK(orders == std::vector<long>{3, 2, 3, 2});
  CHECK(heights == orders);  // heights match the orders here

  // positive roots {e1, 2e1+e2, e1+e2, e2}
  auto roots = letters.positive_roots();
  std::set<Degree> expect{{1, 0}, {2, 1}, {1, 1}, {0, 1}};
  CHECK(std::set<Degree>(roots.begin(), roots.end()) == expect);

  // all six pair products differ from 1, so the prime edge count is 6
  {
    const auto& recs = letters.hard_letters();
    long direct = 0;
    for (std::size_t i = 0; i < recs.size(); ++i)
      for (std::size_t j = i + 1; j < recs.size(); ++j) {
        Cyc prod = v.chi(recs[i].degree, recs[j].degree) * v.chi(recs[j].degree, recs[i].degree);
        if (!prod.is_one()) ++direct;
      }
    CHECK(direct == 6);
    CHECK(letters.e_e_prime() == direct);
  }

  CHECK(letters.m_infinity_offenders().empty());
}

TEST_CASE("dim-36 example: individual hardness answers") {
  BraidedSpace v = dim36_space();
  NicholsBasis basis(v, 8);
  SuperLetterSet letters(basis);
  CHECK(letters.is_hard(word_of({1, 2})));
  CHECK(letters.is_hard(word_of({1})));
  CHECK(letters.is_hard(word_of({2})));
  CHECK(letters.is_hard(word_of({1, 1, 2})));
  CHECK(!letters.is_hard(word_of({1, 2, 2})));     // [[1,2],2] = 0 here
  CHECK(!letters.is_hard(word_of({1, 1, 1, 2})));
  CHECK_THROWS_AS(letters.is_hard(word_of({2, 1})), std::invalid_argument);
}

TEST_CASE("rank 1: D = {x1}, height N") {
  for (long n : {3L, 5L}) {
    BraidedSpace v(n, {{z(n)}});
    NicholsBasis basis(v, (int)n + 1);
    SuperLetterSet letters(basis);
    REQUIRE(letters.hard_letters().size() == 1);
    const auto& r = letters.hard_letters()[0];
    CHECK(r.word == word_of({1}));
    CHECK(r.height.kind == HeightKind::Finite);
    CHECK(r.height.value == n);
    CHECK(letters.positive_roots() == std::vector<Degree>{{1}});
    CHECK(letters.e_e_prime() == 0);
  }
}

TEST_CASE("A2 at zeta_3: D = {1, 2, 12} (matches unpruned brute force)") {
  BraidedSpace v = a2_space(3);
  NicholsBasis basis(v, 6);
  SuperLetterSet letters(basis);
  CHECK(words_of(letters) == std::vector<Word>{word_of({1}), word_of({1, 2}), word_of({2})});

  SuperLetterSet unpruned(basis, /*prune=*/false);
  CHECK(words_of(unpruned) == words_of(letters));
  for (const auto& r : letters.hard_letters()) {
    CHECK(r.height.kind == HeightKind::Finite);
    CHECK(r.height.value == 3);
  }
}

TEST_CASE("pruning agrees with unpruned enumeration on the dim-36 example") {
  BraidedSpace v = dim36_space();
  NicholsBasis basis(v, 8);
  SuperLetterSet pruned(basis, true), unpruned(basis, false);
  CHECK(words_of(pruned) == words_of(unpruned));
}

TEST_CASE("sons of hard letters are hard") {
  BraidedSpace v = dim36_space();
  NicholsBasis basis(v, 10);
  SuperLetterSet letters(basis);
  for (const auto& r : letters.hard_letters()) {
    if (r.word.size() < 2) continue;
    auto [left, right] = shirshov_decomposition(r.word);
    CHECK(letters.find(left) != nullptr);
    CHECK(letters.find(right) != nullptr);
  }
}

TEST_CASE("PBW census equals the Hilbert series") {
  // finite example
  {
    BraidedSpace v = dim36_space();
    NicholsBasis basis(v, 12);
    SuperLetterSet letters(basis);
    CHECK(letters.pbw_census() == basis.hilbert());
  }
  // A2 at zeta_3
  {
    BraidedSpace v = a2_space(3);
    NicholsBasis basis(v, 8);
    SuperLetterSet letters(basis);
    CHECK(letters.pbw_census() == basis.hilbert());
    long long total = 0;
    for (long long c : letters.pbw_census()) total += c;
    CHECK(total == 27);
  }
  // an infinite-dimensional case: q11 = 1 with a genuine pair still obeys
  // the restricted-monomial census degree by degree
  {
    std::vector<std::vector<Cyc>> q{{Cyc::one(3), z(3)}, {Cyc::one(3), z(3)}};
    BraidedSpace v(3, q);
    NicholsBasis basis(v, 7);
    SuperLetterSet letters(basis);
    CHECK(letters.pbw_census() == basis.hilbert());
    // the q11 = 1 letter is height-infinite and flagged
    const SuperLetterRecord* x1 = letters.find(word_of({1}));
    REQUIRE(x1 != nullptr);
    CHECK(x1->height.kind == HeightKind::Infinite);
    CHECK(x1->height.unit_puu);
  }
}

TEST_CASE("m-infinity scan: A2 Cartan at zeta_5 has none") {
  BraidedSpace v = a2_space(5);
  NicholsBasis basis(v, 10);
  SuperLetterSet letters(basis);
  CHECK(letters.m_infinity_offenders().empty());
  for (const auto& r : letters.hard_letters()) {
    CHECK(r.height.kind == HeightKind::Finite);
    CHECK(r.height.value == 5);
  }
}

TEST_CASE("heights beyond the cutoff report unknown") {
  BraidedSpace v = a2_space(5);
  NicholsBasis basis(v, 6);  // [12] has ord 5 and degree 2: 10 > 6
  SuperLetterSet letters(basis);
  const SuperLetterRecord* r12 = letters.find(word_of({1, 2}));
  REQUIRE(r12 != nullptr);
  CHECK(r12->height.kind == HeightKind::UnknownAtCutoff);
  // the census is still well defined through the cutoff
  CHECK(letters.pbw_census() == basis.hilbert());
}
