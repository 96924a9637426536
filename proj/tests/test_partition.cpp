#include <doctest.h>

#include "oracles.hpp"
#include "wreath/errors.hpp"
#include "wreath/partition.hpp"

using namespace wreath;

TEST_CASE("partition canonical form") {
  CHECK(Partition({3, 1, 0, 0}).parts() == std::vector<int>{3, 1});
  CHECK(Partition().size() == 0);
  CHECK_THROWS_AS(Partition({1, 2}), DomainError);
  CHECK(Partition::from_multiset({1, 3, 0, 2}) == Partition{3, 2, 1});
  CHECK(merge(Partition{3, 1}, Partition{2, 1}) == Partition{3, 2, 1, 1});
}

TEST_CASE("conjugate") {
  CHECK(conjugate(Partition()) == Partition());
  CHECK(conjugate(Partition{2, 1}) == Partition{2, 1});
  CHECK(conjugate(Partition{3, 1}) == Partition{2, 1, 1});
  for (int n = 0; n <= 8; ++n)
    for (const auto& p : partitions_of(n)) CHECK(conjugate(conjugate(p)) == p);
}

TEST_CASE("z_factor and epsilon_sign") {
  CHECK(z_factor(Partition()) == 1);
  CHECK(z_factor(Partition{1, 1, 1}) == 6);
  CHECK(z_factor(Partition{3, 1, 1}) == 6);
  CHECK(epsilon_sign(Partition()) == 1);
  CHECK(epsilon_sign(Partition{2}) == -1);
  CHECK(epsilon_sign(Partition{3, 2}) == -1);
  long factorial = 1;
  for (int n = 1; n <= 7; ++n) {
    factorial *= n;
    auto counts = oracle::cycle_type_counts(n);
    CHECK(counts.size() == partitions_of(n).size());
    for (const auto& [p, c] : counts) CHECK(z_factor(p) * c == factorial);
  }
}

TEST_CASE("pad_first_row") {
  CHECK(pad_first_row(Partition(), 5) == Partition{5});
  CHECK(pad_first_row(Partition{2, 1}, 6) == Partition{3, 2, 1});
  try {
    pad_first_row(Partition{2, 1}, 4);
    FAIL("expected a domain error");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("minimal admissible n is 5") != std::string::npos);
  }
}

TEST_CASE("enumeration") {
  CHECK(partitions_of(0).size() == 1);
  CHECK(partitions_of(0)[0].empty());
  const std::vector<Partition> four{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
  CHECK(enumerate_partitions(4) == four);
  const std::vector<int> counts{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 0; n <= 10; ++n) CHECK(partitions_of(n).size() == static_cast<std::size_t>(counts[n]));

  // 2 p(2) + p(1)^2 = 5: the two one-label shapes on each label plus {a:[1];b:[1]}.
  auto two = enumerate_multipartitions(2, 2);
  std::vector<std::string> labels{"a", "b"};
  std::vector<std::string> printed;
  for (const auto& m : two) printed.push_back(to_string(m, labels));
  CHECK(printed == std::vector<std::string>{"{a:[2]}", "{a:[1,1]}", "{a:[1];b:[1]}", "{b:[2]}", "{b:[1,1]}"});
  CHECK(std::is_sorted(two.begin(), two.end()));
  CHECK(enumerate_multipartitions_upto(4, 4).size() == 1 + 4 + 14 + 40 + 105);
}

TEST_CASE("multipartition canonical form") {
  Multipartition m({{1, Partition{1}}, {0, Partition()}, {2, Partition{2, 1}}});
  CHECK(m.entries().size() == 2);
  CHECK(m.total_size() == 4);
  CHECK(m.at(0).empty());
  CHECK(merge(m, Multipartition::single(1, Partition{2})).at(1) == Partition{2, 1});
}

TEST_CASE("Murnaghan-Nakayama against the Frobenius formula") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& lam : partitions_of(n))
      for (const auto& mu : partitions_of(n)) CHECK(mn_character(lam, mu) == oracle::frobenius_character(lam, mu));
  CHECK(mn_character(Partition{2, 1}, Partition{1, 1, 1}) == 2);
  CHECK_THROWS_AS(mn_character(Partition{2}, Partition{1}), DomainError);
}

TEST_CASE("character identities") {
  for (int n = 1; n <= 6; ++n) {
    std::vector<int> ones(n, 1);
    for (const auto& mu : partitions_of(n)) {
      CHECK(mn_character(Partition{n}, mu) == 1);
      CHECK(mn_character(Partition(ones), mu) == epsilon_sign(mu));
    }
    for (const auto& lam : partitions_of(n))
      for (const auto& kap : partitions_of(n)) {
        Rational s = 0;
        for (const auto& mu : partitions_of(n))
          s += frac(mn_character(lam, mu) * mn_character(kap, mu), z_factor(mu));
        CHECK(s == (lam == kap ? 1 : 0));
      }
  }
}
