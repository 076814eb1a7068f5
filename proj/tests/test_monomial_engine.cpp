#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hmstab/error.hpp"
#include "hmstab/monomial_engine.hpp"
#include "support.hpp"

using namespace hmstab;

namespace {

template <typename F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an hmstab::Error");
  return ErrorCode::ParseError;
}

std::set<std::int64_t> t_degrees(const ParamTail& tail, std::int64_t m) {
  std::set<std::int64_t> out;
  for (const auto& b : initial_ideal_complement(tail, m)) out.insert(b.t);
  return out;
}

std::set<std::int64_t> zero_then_two_to(std::int64_t top) {
  std::set<std::int64_t> out{0};
  for (std::int64_t t = 2; t <= top; ++t) out.insert(t);
  return out;
}

}  // namespace

TEST_CASE("binary forms") {
  const auto a = BinaryForm::monomial(1, 3);
  const auto b = BinaryForm::monomial(2, 2);
  const auto p = a * b;
  CHECK(p.degree() == 8);
  CHECK(p.is_monomial());
  CHECK(p.t_degree() == 5);
  CHECK(p.order_at_attachment() == 3);
  const BinaryForm mixed(2, {Rational(1), Rational(0), Rational(-1)});
  CHECK_FALSE(mixed.is_monomial());
  CHECK(mixed.order_at_attachment() == 0);
}

TEST_CASE("enumeration order and counts") {
  const auto monos = enumerate_monomials(3, 2);
  REQUIRE(monos.size() == 6);
  CHECK(monos.front() == ExponentVector{2, 0, 0});
  CHECK(monos.back() == ExponentVector{0, 0, 2});
  CHECK(monomial_count(4, 3) == 20);
  CHECK(monomial_count(4, 2) == 10);
  CHECK(code_of([] { enumerate_monomials(30, 30); }) == ErrorCode::TooLarge);
}

TEST_CASE("cuspidal tail: weights 35 and 77") {
  const auto tail = cuspidal_tail();
  CHECK(tail.is_monomial());
  const auto two = min_weight_spanning_set(tail, 2);
  CHECK(two.total_weight == 35);
  CHECK(two.basis.size() == 8);
  const auto three = min_weight_spanning_set(tail, 3);
  CHECK(three.total_weight == 77);
  CHECK(three.basis.size() == 12);
}

TEST_CASE("cuspidal tail: standard pullback index sets") {
  const auto tail = cuspidal_tail();
  CHECK(t_degrees(tail, 2) == zero_then_two_to(8));
  CHECK(t_degrees(tail, 3) == zero_then_two_to(12));
}

TEST_CASE("cuspidal tail: minimum agrees with exhaustive subset search") {
  const auto tail = cuspidal_tail();
  CHECK(min_weight_spanning_set(tail, 2).total_weight == oracle::exhaustive_min_weight(tail, 2));
  CHECK(min_weight_spanning_set(tail, 3).total_weight == oracle::exhaustive_min_weight(tail, 3));
}

TEST_CASE("property: random monomial tails match the exhaustive minimum") {
  gen::Rng rng(2024);
  for (int trial = 0; trial < 20; ++trial) {
    const auto tail = gen::random_monomial_tail(rng, 4);
    const auto m = gen::uniform(rng, 1, 3);
    CAPTURE(trial);
    CHECK(min_weight_spanning_set(tail, m).total_weight == oracle::exhaustive_min_weight(tail, m));
  }
}

TEST_CASE("property: random non-monomial tails match the exhaustive minimum") {
  gen::Rng rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    const auto tail = gen::random_integer_tail(rng, 3);
    const auto m = gen::uniform(rng, 1, 3);
    CAPTURE(trial);
    CHECK(min_weight_spanning_set(tail, m).total_weight == oracle::exhaustive_min_weight(tail, m));
  }
}

TEST_CASE("property: serial and parallel kernels agree") {
  gen::Rng rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const auto tail = gen::random_monomial_tail(rng, 4);
    const auto m = gen::uniform(rng, 1, 4);
    const auto s = tail_monomials(tail, m, Execution::serial);
    const auto p = tail_monomials(tail, m, Execution::parallel);
    REQUIRE(s.size() == p.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      CHECK(s[i].exponents == p[i].exponents);
      CHECK(s[i].weight == p[i].weight);
      CHECK(s[i].image == p[i].image);
    }
    const auto a = min_weight_spanning_set(tail, m, Execution::serial);
    const auto b = min_weight_spanning_set(tail, m, Execution::parallel);
    CHECK(a.basis == b.basis);
    CHECK(a.total_weight == b.total_weight);
  }
}

TEST_CASE("initial ideal complement needs a monomial tail") {
  std::vector<TailCoordinate> coords{{1, BinaryForm::monomial(0, 2)},
                                     {0, BinaryForm(2, {Rational(1), Rational(1), Rational(0)})}};
  const ParamTail tail(coords);
  CHECK(code_of([&] { initial_ideal_complement(tail, 2); }) == ErrorCode::NotMonomialTail);
}

TEST_CASE("tail validation") {
  CHECK_THROWS_AS(ParamTail({}), Error);
  CHECK_THROWS_AS(ParamTail({{1, BinaryForm::monomial(0, 2)}, {0, BinaryForm::monomial(3, 0)}}), Error);
  // Nothing survives at the node [0 : 1].
  CHECK_THROWS_AS(ParamTail({{1, BinaryForm::monomial(1, 1)}, {0, BinaryForm::monomial(2, 0)}}), Error);
}

TEST_CASE("two-component assembly") {
  const auto tail = cuspidal_tail();
  for (std::int64_t g = 3; g <= 12; ++g) {
    const auto c = EmbeddingConfig::canonical(g, 4);
    const auto two = assemble_two_component_weight(c, tail, 2);
    CHECK(two.tail_part == 35);
    CHECK(two.component_part == 2 * 4 * (15 * g - 23));
    CHECK(two.total == 120 * g - 149);
    CHECK(two.direct);
    const auto three = assemble_two_component_weight(c, tail, 3);
    CHECK(three.tail_part == 77);
    CHECK(three.component_part == 3 * 4 * (23 * g - 35));
    CHECK(three.total == 276 * g - 343);
  }
}
