#include <doctest.h>

#include "helpers.hpp"
#include "oracles.hpp"

using namespace spq;

TEST_CASE("validate accepts covers and reports signature") {
  auto a = SignedInvolution::validate({Singleton{1, Sign::Plus}, Singleton{2, Sign::Minus}}, 2);
  CHECK(a.p() == 1);
  CHECK(a.q() == 1);
  auto b = SignedInvolution::validate({Pair{1, 2, Sign::Plus}}, 2);
  CHECK(b.p() == 1);
  CHECK(b.pair_count() == 1);
  CHECK(S("(1,2)-").p() == 1);
  CHECK(S("1- 2-").p() == 0);
}

TEST_CASE("validate rejects malformed parameters") {
  auto kind_of = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.kind();
    }
    FAIL("no error raised");
    return ErrorKind::InternalInvariant;
  };
  CHECK(kind_of([] { SignedInvolution::validate({Singleton{1, Sign::Plus}, Pair{1, 2, Sign::Minus}}, 2); }) ==
        ErrorKind::DuplicateIndex);
  CHECK(kind_of([] { SignedInvolution::validate({Singleton{1, Sign::Plus}}, 2); }) == ErrorKind::MissingIndex);
  CHECK(kind_of([] { SignedInvolution::validate({Pair{2, 1, Sign::Plus}}, 2); }) == ErrorKind::BadPairOrder);
  CHECK(kind_of([] { SignedInvolution::validate({Singleton{3, Sign::Plus}}, 2); }) == ErrorKind::IndexOutOfRange);
}

TEST_CASE("elements are listed by largest index") {
  auto s = S("(1,4)+ 2- 3+ 5-");
  auto e = s.elements();
  REQUIRE(e.size() == 4);
  CHECK(largest_index(e[0]) == 2);
  CHECK(largest_index(e[1]) == 3);
  CHECK(largest_index(e[2]) == 4);
  CHECK(largest_index(e[3]) == 5);
}

TEST_CASE("enumeration matches involutions of the hyperoctahedral group") {
  CHECK(enumerate(1, 1) == std::vector{S("1+")});
  CHECK(as_set(enumerate(2, 1)) == std::set{S("1+ 2-"), S("1- 2+"), S("(1,2)+"), S("(1,2)-")});
  for (int n = 1; n <= 5; ++n) {
    std::set<SignedInvolution> expected;
    for (auto& s : oracle::signed_involutions_from_group(n)) expected.insert(s);
    std::set<SignedInvolution> seen;
    std::size_t visits = 0;
    for_each_involution(n, std::nullopt, [&](const SignedInvolution& s) {
      ++visits;
      seen.insert(s);
    });
    CHECK(visits == seen.size());
    CHECK(seen == expected);
    std::size_t by_p = 0;
    for (int p = 0; p <= n; ++p) {
      auto part = enumerate(n, p);
      for (const auto& s : part) CHECK(s.p() == p);
      by_p += part.size();
    }
    CHECK(by_p == expected.size());
  }
}

TEST_CASE("theta images") {
  CHECK(theta_image(S("1+ 2-"), 1) == SignedCoordinate{1, Sign::Plus});
  CHECK(theta_image(S("(1,2)-"), 1) == SignedCoordinate{1, Sign::Minus});
  CHECK(theta_image(S("(1,3)- 2+"), 1) == SignedCoordinate{3, Sign::Minus});
  CHECK(theta_image(S("(1,3)- 2+"), 3) == SignedCoordinate{1, Sign::Minus});
  CHECK(theta_image(S("(1,3)+ 2+"), 3) == SignedCoordinate{1, Sign::Plus});
  CHECK_THROWS_AS(theta_image(S("1+"), 2), Error);
}

TEST_CASE("root status examples") {
  CHECK(root_status(S("1+ 2+"), short_root(1)) == RootStatus::CompactImaginary);
  CHECK(root_status(S("1+ 2-"), short_root(1)) == RootStatus::NoncompactImaginary);
  CHECK(root_status(S("(1,2)+"), long_root()) == RootStatus::ComplexNonTau);
  CHECK(root_status(S("(1,2)+"), short_root(1)) == RootStatus::Real);
  CHECK(root_status(S("1- 2+"), long_root()) == RootStatus::CompactImaginary);
  CHECK(root_status(S("(1,3)+ 2+"), short_root(2)) == RootStatus::ComplexTau);
}

TEST_CASE("tau examples and matrix oracle") {
  CHECK(tau(S("1+")) == std::set{long_root()});
  CHECK(tau(S("(1,2)+")) == std::set{short_root(1)});
  CHECK(tau(S("(1,2)-")) == std::set{long_root(), short_root(1)});
  for (int n = 1; n <= 5; ++n)
    for_each_involution(n, std::nullopt, [&](const SignedInvolution& s) {
      INFO(render_sigma(s));
      CHECK(tau(s) == oracle::tau_by_matrix(s));
    });
}

TEST_CASE("cross action examples") {
  CHECK(cross_action(short_root(1), S("1+ 2-")) == S("1- 2+"));
  CHECK(cross_action(long_root(), S("(1,2)+")) == S("(1,2)-"));
  CHECK(cross_action(short_root(1), S("(1,2)+")) == S("(1,2)+"));
  CHECK(cross_action(short_root(2), S("(1,2)+ 3-")) == S("(1,3)+ 2-"));
  CHECK(cross_action(long_root(), S("1+ 2-")) == S("1+ 2-"));
}

TEST_CASE("primed interchange") {
  CHECK(in_prime(S("(1,3)+ (2,4)-")) == S("(1,4)+ (2,3)-"));
  CHECK(in_prime(S("(1,2)+")) == S("(1,2)+"));
  CHECK(in_prime(S("1+ 2-")) == S("1- 2+"));
}

TEST_CASE("cayley transforms") {
  CHECK(cayley_up(1, S("1+ 2-")) == S("(1,2)+"));
  CHECK(cayley_up(1, S("1- 2+")) == S("(1,2)-"));
  CHECK_THROWS_AS(cayley_up(1, S("1+ 2+")), Error);
  CHECK(cayley_down(1, S("(1,2)+")) == S("1+ 2-"));
  CHECK(cayley_down(1, S("(1,2)-")) == S("1- 2+"));
  try {
    cayley_down(1, S("1+ 2-"));
    FAIL("expected NotReal");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotReal);
  }
  // real root, but 2 and 3 are not paired with each other
  CHECK(root_status(S("(1,2)- (3,4)-"), short_root(2)) == RootStatus::Real);
  CHECK_THROWS_AS(cayley_down(2, S("(1,2)- (3,4)-")), Error);
  try {
    cayley_up(1, S("1+ 2+"));
    FAIL("expected NotNoncompactImaginary");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotNoncompactImaginary);
  }
}

TEST_CASE("generator actions are involutive") {
  for (int n = 1; n <= 5; ++n)
    for_each_involution(n, std::nullopt, [&](const SignedInvolution& s) {
      for (auto r : simple_roots(n)) CHECK(cross_action(r, cross_action(r, s)) == s);
      for (int i = 1; i < n; ++i) {
        auto st = root_status(s, short_root(i));
        if (st == RootStatus::NoncompactImaginary) CHECK(cayley_down(i, cayley_up(i, s)) == s);
        if (s.partner(i) == i + 1) CHECK(cayley_up(i, cayley_down(i, s)) == s);
      }
    });
}

TEST_CASE("wall crossing on parameters") {
  CHECK(as_set(wall_cross(long_root(), short_root(1), S("(1,2)+"))) == std::set{S("1+ 2-"), S("1- 2+")});
  CHECK(wall_cross(short_root(1), long_root(), S("1+ 2-")) == std::vector{S("(1,2)+")});
  CHECK(wall_cross(short_root(1), short_root(2), S("1+ 2- 3-")) == std::vector{S("(1,2)+ 3-")});
  CHECK_THROWS_AS(wall_cross(long_root(), short_root(1), S("1+ 2+")), Error);
  CHECK_THROWS_AS(wall_cross(long_root(), short_root(2), S("1+ 2+ 3-")), Error);
  // A case resolved through β: the cross action through α lands outside the
  // target domain, the cross action through β does not.
  CHECK(wall_cross(short_root(2), short_root(3), S("2- 3+ (1,4)+")) == std::vector{S("2- (1,3)+ 4+")});
}

TEST_CASE("wall crossing values flip tau; same-length is single-valued") {
  for (int n = 2; n <= 6; ++n)
    for_each_involution(n, std::nullopt, [&](const SignedInvolution& s) {
      for (auto [a, b] : nonorthogonal_pairs(n)) {
        if (!in_wall_cross_domain(a, b, s)) continue;
        auto out = wall_cross(a, b, s);
        INFO(render_sigma(s), " ", to_string(a), ",", to_string(b));
        CHECK(!out.empty());
        CHECK(out.size() <= 2);
        if (!a.is_long() && !b.is_long()) CHECK(out.size() == 1);
        for (const auto& t : out) {
          auto tt = tau(t);
          CHECK(tt.contains(a));
          CHECK(!tt.contains(b));
          CHECK(t.p() == s.p());
        }
      }
    });
}
