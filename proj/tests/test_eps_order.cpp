#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "sos/eps_order.hpp"
#include "sos/sos_sign.hpp"

using namespace sos;

namespace {

DepthVector dv(MatrixKind kind, std::vector<int> values) { return DepthVector::from_values(kind, std::move(values)); }

// Sign of the permutation that sorts the column sequence, by counting
// exchanges of a bubble sort.
Sign permutation_sign(std::vector<int> cols) {
  bool odd = false;
  for (std::size_t a = 0; a < cols.size(); ++a)
    for (std::size_t b = 0; b + 1 < cols.size() - a; ++b)
      if (cols[b] > cols[b + 1]) {
        std::swap(cols[b], cols[b + 1]);
        odd = !odd;
      }
  return odd ? Sign::negative : Sign::positive;
}

std::vector<DepthVector> enumerate_until_terminal(MatrixKind kind, std::size_t dim) {
  std::vector<DepthVector> out = {DepthVector::initial(kind, dim)};
  while (!out.back().is_terminal()) out.push_back(next_v(out.back()));
  return out;
}

}  // namespace

TEST_CASE("index pair precedence") {
  CHECK(pair_precedes({0, 3}, {1, 1}));
  CHECK(pair_precedes({2, 3}, {2, 1}));
  CHECK_FALSE(pair_precedes({1, 1}, {1, 1}));
  CHECK_FALSE(pair_precedes({1, 1}, {0, 3}));
  CHECK_FALSE(pair_precedes({2, 1}, {2, 3}));
}

TEST_CASE("epsilon products") {
  const EpsilonProduct e({{0, 1}, {2, 2}, {1, 3}});
  REQUIRE(e.size() == 3);
  CHECK(e.pairs()[0] == IndexPair{2, 2});
  CHECK(e.pairs()[2] == IndexPair{0, 1});
  CHECK(e.contains({1, 3}));
  CHECK_FALSE(e.contains({1, 2}));
  CHECK(EpsilonProduct().empty());
  CHECK_THROWS(EpsilonProduct({{0, 1}, {0, 1}}));
  CHECK_THROWS(EpsilonProduct({{0, 0}}));
}

TEST_CASE("index set order") {
  CHECK(index_set_smaller(EpsilonProduct(), EpsilonProduct({{0, 1}})));
  CHECK(index_set_smaller(EpsilonProduct({{0, 2}}), EpsilonProduct({{0, 1}})));
  CHECK_FALSE(index_set_smaller(EpsilonProduct({{1, 3}}), EpsilonProduct({{0, 2}})));
  CHECK_THROWS(index_set_smaller(EpsilonProduct({{1, 3}}), EpsilonProduct({{1, 3}})));
  // Shared largest pair: the decision falls to the next one.
  CHECK(index_set_smaller(EpsilonProduct({{2, 1}, {0, 2}}), EpsilonProduct({{2, 1}, {1, 1}})));
}

TEST_CASE("index set order matches exponent sums") {
  // eps(i,j) = eps^(2^(i*delta - j)), scaled by 2^delta so exponents are integers.
  const int delta = 3;
  std::vector<IndexPair> universe;
  for (int i = 0; i < 3; ++i)
    for (int j = 1; j <= delta; ++j) universe.push_back({i, j});
  auto exponent = [&](unsigned mask) {
    long e = 0;
    for (std::size_t b = 0; b < universe.size(); ++b)
      if (mask & (1u << b)) e += 1L << ((universe[b].i + 1) * delta - universe[b].j);
    return e;
  };
  auto product = [&](unsigned mask) {
    std::vector<IndexPair> pairs;
    for (std::size_t b = 0; b < universe.size(); ++b)
      if (mask & (1u << b)) pairs.push_back(universe[b]);
    return EpsilonProduct(pairs);
  };
  const unsigned n = 1u << universe.size();
  for (unsigned a = 0; a < n; a += 7)
    for (unsigned b = 0; b < n; b += 5) {
      if (a == b) continue;
      REQUIRE(index_set_smaller(product(a), product(b)) == (exponent(a) < exponent(b)));
    }
}

TEST_CASE("next_v steps") {
  CHECK(next_v(dv(MatrixKind::delta, {4, 4, 4, 4})) == dv(MatrixKind::delta, {3, 4, 4, 4}));
  CHECK(next_v(dv(MatrixKind::delta, {1, 4, 4, 4})) == dv(MatrixKind::delta, {3, 3, 4, 4}));
  CHECK(next_v(dv(MatrixKind::delta, {2, 2, 3, 4})) == dv(MatrixKind::delta, {1, 2, 3, 4}));
  CHECK_THROWS_AS(next_v(DepthVector::terminal(MatrixKind::delta, 3)), std::out_of_range);
  CHECK_THROWS_AS(next_v(DepthVector::terminal(MatrixKind::lambda, 3)), std::out_of_range);
}

TEST_CASE("depth vector validation") {
  CHECK(DepthVector::initial(MatrixKind::lambda, 3).to_string() == "[3,3,3;3]");
  CHECK(DepthVector::initial(MatrixKind::delta, 2).to_string() == "[3,3;3]");
  CHECK(DepthVector::terminal(MatrixKind::delta, 3).to_string() == "[1,2,3;4]");
  CHECK_THROWS(dv(MatrixKind::delta, {3, 2, 4, 4}));  // decreasing
  CHECK_THROWS(dv(MatrixKind::delta, {3, 4, 4, 3}));  // wrong sentinel
  CHECK_THROWS(dv(MatrixKind::lambda, {4, 4, 4, 3}));  // entry above the sentinel
}

TEST_CASE("decode") {
  SUBCASE("one active pair") {
    const auto t = decode(dv(MatrixKind::delta, {3, 4, 4, 4}));
    CHECK(t.k == 2);
    CHECK(t.sign == Sign::positive);
    CHECK(t.deleted_rows == std::vector<int>{1});
    CHECK(t.deleted_cols == std::vector<int>{3});
  }
  SUBCASE("two active pairs") {
    const auto t = decode(dv(MatrixKind::delta, {1, 3, 4, 4}));
    CHECK(t.k == 1);
    CHECK(t.sign == Sign::negative);
    CHECK(t.remaining_rows() == std::vector<int>{3});
    CHECK(t.remaining_cols() == std::vector<int>{2});
  }
  SUBCASE("terminal") {
    const auto t = decode(DepthVector::terminal(MatrixKind::delta, 3));
    CHECK(t.k == 0);
    CHECK(t.sign == Sign::positive);
  }
  SUBCASE("row index table") {
    const std::vector<std::int64_t> idx = {4, 9, 20};
    const auto t = decode(dv(MatrixKind::delta, {1, 3, 4, 4}), idx, 6);
    CHECK(t.depth == 6);
    CHECK(t.eps == EpsilonProduct({{4, 1}, {9, 3}}));
  }
}

TEST_CASE("vector significance") {
  CHECK(vector_more_significant(dv(MatrixKind::delta, {4, 4, 4, 4}), dv(MatrixKind::delta, {3, 4, 4, 4})));
  CHECK_FALSE(vector_more_significant(dv(MatrixKind::delta, {3, 3, 4, 4}), dv(MatrixKind::delta, {1, 4, 4, 4})));
  const auto terminal = DepthVector::terminal(MatrixKind::delta, 3);
  for (const auto& v : enumerate_until_terminal(MatrixKind::delta, 3))
    if (!(v == terminal)) CHECK_FALSE(vector_more_significant(terminal, v));
}

TEST_CASE("enumeration properties") {
  const std::pair<MatrixKind, std::size_t> cases[] = {{MatrixKind::delta, 2}, {MatrixKind::delta, 3},
                                                       {MatrixKind::delta, 4}, {MatrixKind::delta, 5},
                                                       {MatrixKind::lambda, 2}, {MatrixKind::lambda, 3},
                                                       {MatrixKind::lambda, 4}, {MatrixKind::lambda, 6}};
  for (auto [kind, dim] : cases) {
    CAPTURE(dim);
    const auto vs = enumerate_until_terminal(kind, dim);
    std::vector<std::int64_t> idx(dim);
    std::iota(idx.begin(), idx.end(), 0);
    for (std::size_t t = 0; t < vs.size(); ++t) {
      const auto& vals = vs[t].values();
      REQUIRE(std::is_sorted(vals.begin(), vals.end()));
      const TermDescriptor term = decode(vs[t], idx);
      REQUIRE(term.deleted_rows.size() == dim - term.k);
      REQUIRE(term.deleted_cols.size() == dim - term.k);
      REQUIRE(term.eps.size() == dim - term.k);
      REQUIRE(std::is_sorted(term.deleted_rows.begin(), term.deleted_rows.end()));
      REQUIRE(std::is_sorted(term.deleted_cols.begin(), term.deleted_cols.end()));
      REQUIRE(std::adjacent_find(term.deleted_cols.begin(), term.deleted_cols.end()) == term.deleted_cols.end());

      // The parity rule against sorting the full column sequence: deleted
      // columns first in row order, then the remaining columns in order.
      std::vector<int> order(dim);
      std::vector<int> rest = term.remaining_cols();
      std::size_t next_rest = 0;
      for (std::size_t r = 1; r <= dim; ++r) {
        const auto it = std::find(term.deleted_rows.begin(), term.deleted_rows.end(), static_cast<int>(r));
        order[r - 1] = it != term.deleted_rows.end() ? term.deleted_cols[static_cast<std::size_t>(it - term.deleted_rows.begin())]
                                                     : rest[next_rest++];
      }
      REQUIRE(term.sign == permutation_sign(order));

      if (t > 0) {
        REQUIRE(vector_more_significant(vs[t - 1], vs[t]));
        REQUIRE(index_set_smaller(decode(vs[t - 1], idx).eps, term.eps));
      }
    }
  }
}

TEST_CASE("generating-mode term counts") {
  CHECK(generate_term_table(MatrixKind::delta, 2).size() == 5);
  CHECK(generate_term_table(MatrixKind::delta, 3).size() == 15);
  CHECK(generate_term_table(MatrixKind::delta, 4).size() == 50);
  CHECK(generate_term_table(MatrixKind::lambda, 2).size() == 2);
  CHECK(generate_term_table(MatrixKind::lambda, 3).size() == 5);
  CHECK(generate_term_table(MatrixKind::lambda, 4).size() == 15);
}
