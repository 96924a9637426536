#include <doctest.h>

#include <chrono>
#include <random>

#include "wreath/errors.hpp"
#include "wreath/pbw.hpp"

using namespace wreath;

namespace {

using Alg = std::shared_ptr<const PbwAlgebra>;

Alg make(const char* name) { return PbwAlgebra::create(GrothRing::create(builtin(name))); }

Multipartition mp(int label, Partition p) { return Multipartition::single(label, std::move(p)); }

PbwWord random_word(std::mt19937& rng, int rank, int len) {
  PbwWord w;
  for (int i = 0; i < len; ++i) w.emplace_back(1 + int(rng() % 2), int(rng() % rank));
  return w;
}

}  // namespace

TEST_CASE("normal ordering") {
  Alg c2 = make("zc2");
  CHECK(c2->normal_order({{2, 1}, {1, 0}}) == c2->generator(1, 0) * c2->generator(2, 1));
  CHECK(c2->normal_order({{1, 1}, {1, 0}}) == c2->normal_order({{1, 0}, {1, 1}}));
  Alg m = make("mat2");
  // E11, E12, E21, E22 are basis indices 0..3.
  PbwElement expected = m->normal_order({{1, 1}, {1, 2}}) + m->generator(1, 3) - m->generator(1, 0);
  CHECK(m->normal_order({{1, 2}, {1, 1}}) == expected);
  CHECK(m->format(expected) == "-T1(E11) + T1(E12)*T1(E21) + T1(E22)");
}

TEST_CASE("normal ordering is confluent") {
  std::mt19937 rng(5);
  for (const char* name : {"mat2", "golden", "zc2"}) {
    Alg a = make(name);
    for (int trial = 0; trial < 40; ++trial) {
      PbwWord w = random_word(rng, a->base().rank(), 1 + int(rng() % 5));
      CHECK(a->normal_order(w) == a->normal_order_alternative(w));
    }
  }
}

TEST_CASE("commutative rings give a polynomial algebra") {
  std::mt19937 rng(9);
  for (const char* name : {"zc2", "golden", "cyclic:3"}) {
    Alg a = make(name);
    for (int trial = 0; trial < 20; ++trial) {
      PbwWord w = random_word(rng, a->base().rank(), 4);
      PbwElement n = a->normal_order(w);
      REQUIRE(n.terms().size() == 1);
      PbwWord sorted = w;
      std::sort(sorted.begin(), sorted.end());
      CHECK(n.coefficient(sorted) == 1);
    }
  }
}

TEST_CASE("theta is multiplicative") {
  using QSeries = GradedSeries<Exponents, QElement>;
  std::mt19937 rng(17);
  for (const char* name : {"mat2", "zc2"}) {
    Alg a = make(name);
    const BaseRing& r = a->base();
    auto random_series = [&]() {
      QSeries s = QSeries::constant(a->qone(), 3);
      for (int d = 1; d <= 3; ++d)
        for (int u = 0; u < r.rank(); ++u)
          if (rng() % 2) s.add(exponents({d}), QElement(&r, RingElement::basis(u)) * Rational(int(rng() % 5) - 2));
      return s;
    };
    for (int l = 1; l <= 2; ++l)
      for (int trial = 0; trial < 3; ++trial) {
        QSeries x = random_series(), y = random_series();
        CHECK(a->theta(l, x) * a->theta(l, y) == a->theta(l, x * y));
        CHECK(a->theta(l, x) * a->theta(l, x.inverse()) == PbwSeries::constant(a->one(), 3));
      }
    QSeries one = QSeries::constant(a->qone(), 3);
    CHECK(a->theta(1, one) == PbwSeries::constant(a->one(), 3));
  }
}

TEST_CASE("Z elements from the generating function") {
  Alg z = make("integers");
  CHECK(z->z_element(Multipartition()) == z->one());
  CHECK(z->z_element(mp(0, {1})) == z->generator(1, 0));
  PbwElement t1 = z->generator(1, 0);
  PbwElement z2 = t1 * t1 * frac(1, 2) - t1 * frac(1, 2) + z->generator(2, 0);
  CHECK(z->z_element(mp(0, {2})) == z2);
  CHECK(z->format(z2) == "-1/2 * T1(1) + 1/2 * T1(1)*T1(1) + T2(1)");
  GrothElement sq = z->to_z_basis(t1 * t1);
  const GrothRing& g = z->groth();
  CHECK(sq == g.z(mp(0, {1})) + g.z(mp(0, {2})) + g.z(mp(0, {1, 1})));
  CHECK(z->oracle_multiply(mp(0, {1}), mp(0, {1})) == sq);
  CHECK(z->oracle_multiply(Multipartition(), mp(0, {2, 1})) == g.z(mp(0, {2, 1})));
}

TEST_CASE("round trip and leading terms") {
  for (const char* name : {"zc2", "mat2", "golden"}) {
    Alg a = make(name);
    const int k = a->base().rank();
    for (const auto& lam : enumerate_multipartitions_upto(k, 3)) {
      PbwElement z = a->z_element(lam);
      CHECK(a->to_z_basis(z) == a->groth().z(lam));
      // Top part under T_l(U) -> p_l^(U) / l is s_lam.
      SymSeries f(a->groth().labels(), SymBasis::PowerSum, lam.total_size());
      const PbwElement top = z.part_of_degree(lam.total_size());
      for (const auto& [w, c] : top.terms()) {
        std::map<int, std::vector<int>> parts;
        Rational weight = c;
        for (const auto& [l, u] : w) {
          parts[u].push_back(l);
          weight /= l;
        }
        std::vector<Multipartition::Entry> entries;
        for (auto& [u, p] : parts) entries.emplace_back(u, Partition::from_multiset(p));
        f.add(Multipartition(std::move(entries)), weight);
      }
      CHECK(power_to_schur(f) == schur_term(a->groth().labels(), lam.total_size(), lam));
    }
    for (int u = 0; u < k; ++u) CHECK(a->to_z_basis(a->generator(1, u)) == a->groth().z(mp(u, {1})));
  }
}

TEST_CASE("oracle products agree with the combinatorial product") {
  for (const char* name : {"integers", "zc2", "mat2", "golden"}) {
    Alg a = make(name);
    const int k = a->base().rank();
    const int top = k > 2 ? 3 : 4;
    auto keys = enumerate_multipartitions_upto(k, top);
    for (const auto& mu : keys)
      for (const auto& nu : keys) {
        if (mu.total_size() + nu.total_size() > top) continue;
        GrothElement x = a->groth().z(mu) * a->groth().z(nu);
        CAPTURE(name);
        CHECK(a->oracle_multiply(mu, nu) == x);
      }
  }
}

TEST_CASE("E series and F series") {
  for (const char* name : {"zc2", "mat2", "golden"}) {
    Alg a = make(name);
    const BaseRing& r = a->base();
    std::vector<RingElement> ws;
    for (int u = 0; u < r.rank(); ++u) ws.push_back(RingElement::basis(u));
    ws.push_back(RingElement::basis(0) + RingElement::basis(1));
    ws.push_back(RingElement::basis(1) * Integer(2) - RingElement::basis(r.rank() - 1));
    for (const auto& w : ws) {
      PbwSeries e = a->e_series(w, 3);
      for (int n = 0; n <= 3; ++n) CHECK(a->to_z_basis(e.coefficient(exponents({n}))) == a->groth().e_generator(n, w));
      PbwSeries f = a->f_series(w, 3);
      CHECK(f.coefficient(exponents({1})) == a->t(1, w));
      CHECK(f == a->f_series_moebius(w, 3));
      // t^2 coefficient: (e1(w)^2 - e1(w^2) - 2 e2(w)) / 2 in T's.
      PbwElement e1 = e.coefficient(exponents({1}));
      PbwElement e1sq = a->e_series(r.multiply(w, w), 1).coefficient(exponents({1}));
      PbwElement expected = (e1 * e1 - e1sq - e.coefficient(exponents({2})) * Rational(2)) * frac(1, 2);
      CHECK(f.coefficient(exponents({2})) == expected);
    }
  }
  for (int n = 1; n <= 30; ++n) {
    int s = 0;
    for (int d = 1; d <= n; ++d)
      if (n % d == 0) s += moebius(d);
    CHECK(s == (n == 1 ? 1 : 0));
  }
}

TEST_CASE("Adams operations") {
  Alg z = make("integers");
  PbwElement t1 = z->generator(1, 0), t2 = z->generator(2, 0);
  CHECK(z->adams(1, t1 * t2) == t1 * t2);
  CHECK(z->adams(2, t1) == t2 * Rational(2) + t1);
  CHECK(z->adams(2, t2) == z->generator(4, 0) * Rational(2));
  CHECK(z->adams(2, t1, 1) == t1);

  Alg c3 = make("cyclic:3");
  std::mt19937 rng(3);
  for (int trial = 0; trial < 5; ++trial) {
    PbwElement x = c3->normal_order(random_word(rng, 3, 2)) + c3->generator(1, int(rng() % 3));
    PbwElement y = c3->normal_order(random_word(rng, 3, 2));
    for (int m = 1; m <= 3; ++m) CHECK(c3->adams(m, x * y) == c3->adams(m, x) * c3->adams(m, y));
  }
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n)
      for (int u = 0; u < 3; ++u) {
        PbwElement t = c3->generator(1, u);
        CHECK(c3->adams(m, c3->adams(n, t)) == c3->adams(m * n, t));
        PbwElement e2 = c3->z_element(mp(u, {1, 1}));
        CHECK(c3->adams(m, c3->adams(n, e2)) == c3->adams(m * n, e2));
      }
  CHECK_THROWS_AS(make("mat2")->adams(2, make("mat2")->one()), MissingDataError);
}

TEST_CASE("lambda operations on e_1") {
  Alg z = make("integers");
  const RingElement one = RingElement::basis(0);
  for (int n = 1; n <= 4; ++n) CHECK(z->lambda_on_e1(n, one) == z->groth().e_generator(n, one));
  Alg c3 = make("cyclic:3");
  for (int u = 0; u < 3; ++u) {
    RingElement g = RingElement::basis(u);
    CHECK(c3->lambda_on_e1(1, g) == c3->groth().e_generator(1, g));
    // Newton: n lambda^n = sum_k (-1)^{k-1} psi_k lambda^{n-k}.
    for (int n = 1; n <= 3; ++n) {
      GrothElement rhs = c3->groth().zero();
      for (int k = 1; k <= n; ++k) {
        GrothElement lam = n - k == 0 ? c3->groth().one() : c3->lambda_on_e1(n - k, g);
        rhs += c3->adams_z(k, c3->groth().e_generator(1, g)) * lam * Rational(k % 2 ? 1 : -1);
      }
      CHECK(c3->lambda_on_e1(n, g) * Rational(n) == rhs);
    }
  }
  CHECK_THROWS_AS(make("golden")->lambda_on_e1(2, RingElement::basis(0)), MissingDataError);
}
