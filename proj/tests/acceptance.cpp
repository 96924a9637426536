// Acceptance run: one PASS/FAIL line per criterion, exact equality throughout.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "wreath/cli.hpp"
#include "wreath/errors.hpp"
#include "wreath/groth_ring.hpp"
#include "wreath/hopf.hpp"
#include "wreath/pbw.hpp"
#include "wreath/symfun.hpp"
#include "wreath/witt.hpp"

using namespace wreath;

namespace {

using Alg = std::shared_ptr<const PbwAlgebra>;

struct Failure {
  std::string what;
};

void require(bool cond, const std::string& what) {
  if (!cond) throw Failure{what};
}

std::string fixture(const std::string& name) { return std::string(WREATH_FIXTURES) + "/" + name; }

// The four test rings; zc2 carries Adams and lambda data from its config.
struct TestRing {
  std::string name;
  std::string source;
};

const std::vector<TestRing>& test_rings() {
  static const std::vector<TestRing> rings{{"integers", "builtin:integers"},
                                           {"zc2", fixture("zc2.json")},
                                           {"mat2", fixture("mat2.json")},
                                           {"golden", fixture("golden.json")}};
  return rings;
}

std::vector<std::pair<std::string, Alg>> algebras() {
  std::vector<std::pair<std::string, Alg>> out;
  for (const auto& r : test_rings()) out.emplace_back(r.name, PbwAlgebra::create(GrothRing::create(load_ring(r.source))));
  return out;
}

std::string key(const GrothRing& g, const Multipartition& m) { return to_string(m, g.labels()); }

// ---------------------------------------------------------------- 1

void symmetric_function_kernel() {
  const int d = 6;
  const std::vector<std::string> x{"x"};
  for (int n = 1; n <= d; ++n) {
    // H(t) E(-t) = 1
    SymSeries he(x, SymBasis::PowerSum, d);
    for (int i = 0; i <= n; ++i) he += multiply(elementary(x, d, 0, i), complete(x, d, 0, n - i)) * Rational(i % 2 ? -1 : 1);
    require(he.is_zero(), "H(t)E(-t) at degree " + std::to_string(n));
    // E'(t) = E(t) P(-t): n e_n = sum_i (-1)^{i-1} e_{n-i} p_i
    SymSeries newton = elementary(x, d, 0, n) * Rational(-n);
    for (int i = 1; i <= n; ++i)
      newton += multiply(elementary(x, d, 0, n - i), power_sum(x, d, 0, i)) * Rational(i % 2 ? 1 : -1);
    require(newton.is_zero(), "E'/E at degree " + std::to_string(n));
  }
  // Cauchy: exp(sum_l p_l(x)p_l(y)/l) = sum_lam s_lam(x) s_lam(y), |lam| <= 6.
  SymSeries kernel = to_basis(cauchy_kernel(2 * d), SymBasis::Schur);
  SymSeries diagonal({"x", "y"}, SymBasis::Schur, 2 * d);
  for (int n = 0; n <= d; ++n)
    for (const auto& lam : partitions_of(n)) diagonal.add(Multipartition({{0, lam}, {1, lam}}), 1);
  require(kernel == diagonal, "Cauchy identity");
  for (int n = 1; n <= d; ++n) {
    const auto& parts = partitions_of(n);
    for (const auto& a : parts)
      for (const auto& b : parts) {
        Rational row = 0, col = 0;
        for (const auto& mu : parts) {
          row += Rational(mn_character(a, mu) * mn_character(b, mu)) / Rational(z_factor(mu));
          col += Rational(mn_character(mu, a) * mn_character(mu, b));
        }
        require(row == (a == b ? 1 : 0), "row orthogonality at " + to_string(a) + ", " + to_string(b));
        require(col == (a == b ? Rational(z_factor(a)) : Rational(0)), "column orthogonality");
      }
    for (const auto& lam : parts) {
      SymSeries s = schur_term(x, d, Multipartition::single(0, lam));
      SymSeries w = to_basis(omega(schur_to_power(s), 0), SymBasis::Schur);
      require(w == schur_term(x, d, Multipartition::single(0, conjugate(lam))), "omega(s_lam) = s_lam'");
      require(omega(omega(schur_to_power(s), 0), 0) == schur_to_power(s), "omega is an involution");
    }
  }
}

// ---------------------------------------------------------------- 2, 3, 4

void oracle_equivalence() {
  for (const auto& [name, alg] : algebras()) {
    const GrothRing& g = alg->groth();
    for (const auto& mu : enumerate_multipartitions_upto(g.base().rank(), 4))
      for (const auto& nu : enumerate_multipartitions_upto(g.base().rank(), 4 - mu.total_size()))
        require(g.z(mu) * g.z(nu) == alg->oracle_multiply(mu, nu), name + ": " + key(g, mu) + " * " + key(g, nu));
  }
}

void integrality() {
  for (const auto& [name, alg] : algebras()) {
    const GrothRing& g = alg->groth();
    const int k = g.base().rank();
    for (const auto& mu : enumerate_multipartitions_upto(k, 4))
      for (const auto& nu : enumerate_multipartitions_upto(k, 4 - mu.total_size())) {
        // The rational route, without its own integrality guard.
        GrothElement p = alg->to_z_basis(alg->z_element(mu) * alg->z_element(nu));
        require(p.is_integral(), name + ": structure constants of " + key(g, mu) + " * " + key(g, nu));
      }
    for (const auto& lam : enumerate_multipartitions_upto(k, 4)) {
      require(comultiply(g.z(lam)).is_integral(), name + ": Delta " + key(g, lam));
      GrothElement s = alg->to_z_basis(pbw_antipode(alg->z_element(lam)));
      require(s.is_integral(), name + ": antipode " + key(g, lam));
    }
    if (g.base().has_lambda())
      for (int u = 0; u < k; ++u)
        for (int n = 1; n <= 4; ++n)
          require(alg->to_z_basis(alg->lambda_on_e1_pbw(n, RingElement::basis(u))).is_integral(),
                  name + ": lambda^" + std::to_string(n));
  }
}

void specific_product() {
  Alg z = PbwAlgebra::create(GrothRing::create(builtin_integers()));
  const GrothRing& g = z->groth();
  const auto one = Multipartition::single(0, {1});
  GrothElement expected =
      g.z(one) + g.z(Multipartition::single(0, {2})) + g.z(Multipartition::single(0, {1, 1}));
  require(z->oracle_multiply(one, one) == expected, "PBW oracle");
  require(g.z(one) * g.z(one) == expected, "matching route");
  require(to_string(expected) == "Z{1:[1]} + Z{1:[2]} + Z{1:[1,1]}", "rendering");
}

// ---------------------------------------------------------------- 5, 6

void commutation() {
  for (const auto& [name, alg] : algebras()) {
    const GrothRing& g = alg->groth();
    const BaseRing& r = g.base();
    for (int a = 0; a < r.rank(); ++a)
      for (int b = 0; b < r.rank(); ++b) {
        RingElement u = RingElement::basis(a), v = RingElement::basis(b);
        const std::string where = name + ": U=" + r.labels()[a] + ", V=" + r.labels()[b];
        CommutationReport s = g.verify_commutation_series(u, v, 3);
        require(s.holds, where + ": series identity: " + s.witness);
        GrothElement lhs = g.e_generator(1, u) * g.e_generator(1, v) + g.e_generator(1, r.multiply(v, u));
        GrothElement rhs = g.e_generator(1, v) * g.e_generator(1, u) + g.e_generator(1, r.multiply(u, v));
        require(lhs == rhs, where + ": degree-one relation");
        for (int i = 1; i <= 3; ++i)
          for (int j = 1; j <= 3; ++j) {
            GrothElement c = g.e_generator(i, u) * g.e_generator(j, v) - g.e_generator(j, v) * g.e_generator(i, u);
            require(c.filtration_degree() <= i + j - 1, where + ": commutator degree");
          }
      }
  }
}

void moebius_decomposition() {
  for (const auto& [name, alg] : algebras())
    for (int u = 0; u < alg->base().rank(); ++u) {
      RingElement w = RingElement::basis(u);
      // f_series itself compares the closed and Moebius forms and throws on mismatch.
      PbwSeries closed = alg->f_series(w, 4);
      require(closed == alg->f_series_moebius(w, 4), name + ": F series");
      for (int i = 1; i <= 4; ++i) require(closed.coefficient(exponents({i})) == alg->t(i, w), name + ": T_i");
    }
  Alg c2 = PbwAlgebra::create(GrothRing::create(load_ring(fixture("zc2.json"))));
  const GrothRing& g = c2->groth();
  const RingElement e = g.base().parse("e"), gg = g.base().parse("g"), sum = g.base().parse("e + g");
  require(g.decompose_e(1, sum) == g.e_generator(1, e) + g.e_generator(1, gg), "e_1(e + g)");
  GrothElement e2 = g.e_generator(1, e) * g.e_generator(1, gg) - g.e_generator(1, gg) + g.e_generator(2, e) +
                    g.e_generator(2, gg);
  require(g.decompose_e(2, sum) == e2, "e_2(e + g)");
  require(c2->to_z_basis(c2->e_series(sum, 2).coefficient(exponents({2}))) == e2, "e_2(e + g) through the PBW model");
}

// ---------------------------------------------------------------- 7

void hopf_axioms() {
  for (const auto& [name, alg] : algebras()) {
    const GrothRing& g = alg->groth();
    auto keys = enumerate_multipartitions_upto(g.base().rank(), 3);
    for (const auto& lam : keys) {
      const std::string where = name + ": " + key(g, lam);
      const GrothElement z = g.z(lam);
      const TensorGrothElement d = comultiply(z);
      std::map<std::tuple<Multipartition, Multipartition, Multipartition>, Rational> left, right;
      GrothElement l = g.zero(), r = g.zero(), sl = g.zero(), sr = g.zero();
      for (const auto& [k, c] : d.terms()) {
        const TensorGrothElement dl = comultiply(g.z(k.first)), dr = comultiply(g.z(k.second));
        for (const auto& [k2, c2] : dl.terms()) left[{k2.first, k2.second, k.second}] += c * c2;
        for (const auto& [k2, c2] : dr.terms()) right[{k.first, k2.first, k2.second}] += c * c2;
        l += g.z(k.second) * (c * counit(g.z(k.first)));
        r += g.z(k.first) * (c * counit(g.z(k.second)));
        sl += antipode(*alg, g.z(k.first)) * g.z(k.second) * c;
        sr += g.z(k.first) * antipode(*alg, g.z(k.second)) * c;
      }
      std::erase_if(left, [](const auto& kv) { return kv.second == 0; });
      std::erase_if(right, [](const auto& kv) { return kv.second == 0; });
      require(left == right, where + ": coassociativity");
      require(l == z && r == z, where + ": counit");
      require(sl == g.scalar(counit(z)) && sr == g.scalar(counit(z)), where + ": antipode");
    }
    for (const auto& mu : keys)
      for (const auto& nu : enumerate_multipartitions_upto(g.base().rank(), 3 - mu.total_size()))
        require(comultiply(g.z(mu) * g.z(nu)) == comultiply(g.z(mu)) * comultiply(g.z(nu)),
                name + ": multiplicativity at " + key(g, mu) + ", " + key(g, nu));
    for (int u = 0; u < g.base().rank(); ++u)
      for (int n = 0; n <= 4; ++n) {
        RingElement w = RingElement::basis(u);
        TensorGrothElement expected(alg->groth_ptr());
        for (int i = 0; i <= n; ++i) expected += tensor(g.e_generator(i, w), g.e_generator(n - i, w));
        require(comultiply(g.e_generator(n, w)) == expected, name + ": grouplike at degree " + std::to_string(n));
      }
  }
}

// ---------------------------------------------------------------- 8

void lambda_ring() {
  for (const auto& [name, alg] : algebras()) {
    if (!alg->base().has_lambda()) continue;
    for (int u = 0; u < alg->base().rank(); ++u) {
      std::vector<PbwElement> gens{alg->generator(1, u), alg->generator(2, u)};
      for (int r = 1; r <= 3; ++r) gens.push_back(alg->z_element(Multipartition::single(u, Partition(std::vector<int>(r, 1)))));
      for (const auto& x : gens) {
        require(alg->adams(1, x) == x, name + ": Psi_1");
        for (int m = 1; m <= 3; ++m)
          for (int n = 1; n <= 3; ++n)
            require(alg->adams(m, alg->adams(n, x)) == alg->adams(m * n, x),
                    name + ": Psi_" + std::to_string(m) + " Psi_" + std::to_string(n));
      }
    }
  }
  Alg z = PbwAlgebra::create(GrothRing::create(builtin_integers()));
  for (int n = 1; n <= 4; ++n)
    require(z->lambda_on_e1(n, RingElement::basis(0)) == z->groth().e_generator(n, RingElement::basis(0)),
            "lambda^" + std::to_string(n) + "(e_1) over Z");
}

// ---------------------------------------------------------------- 9

void witt_layer() {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> dist(-6, 6);
  auto random_vector = [&](int n) {
    WittVector<Integer> v;
    for (int i = 0; i < n; ++i) v.a.push_back(Integer(dist(rng)));
    return v;
  };
  WittVector<Integer> zero{std::vector<Integer>(6, 0)}, one = zero;
  one.a[0] = 1;
  for (int trial = 0; trial < 50; ++trial) {
    auto a = random_vector(6), b = random_vector(6);
    require(witt_add(a, zero) == a && witt_add(zero, a) == a, "additive identity");
    require(witt_mul(one, a) == a && witt_mul(a, one) == a, "multiplicative identity");
    auto ga = ghost_components(a), gb = ghost_components(b);
    auto gs = ghost_components(witt_add(a, b)), gp = ghost_components(witt_mul(a, b));
    for (int n = 0; n < 6; ++n) {
      require(gs[n] == ga[n] + gb[n], "ghost additivity at " + to_string(a) + ", " + to_string(b));
      require(gp[n] == ga[n] * gb[n], "ghost multiplicativity at " + to_string(a) + ", " + to_string(b));
    }
  }
  for (const auto& r : test_rings()) {
    BaseRing ring = load_ring(r.source);
    GroupLaw law = formal_group_law(ring, 3);
    for (int u = 0; u < ring.rank(); ++u)
      for (int i = 1; i <= 3; ++i) {
        Polynomial linear;
        for (const auto& [m, c] : law.component(i, u).terms())
          if (m.size() == 1) linear.add(m, c);
        require(linear == Polynomial::symbol({0, u, i}) + Polynomial::symbol({1, u, i}), r.name + ": first order");
        require(law_left_nested(law, i, u) == law_right_nested(law, i, u), r.name + ": associativity");
      }
  }
}

// ---------------------------------------------------------------- 10

void duality() {
  for (const auto& [name, alg] : algebras()) {
    const GrothRing& g = alg->groth();
    auto keys = enumerate_multipartitions_upto(g.base().rank(), 3);
    for (const auto& lam : keys) {
      const TensorGrothElement d = comultiply(g.z(lam));
      const auto dual = dual_comultiply(g, lam);
      for (const auto& mu : keys)
        for (const auto& nu : enumerate_multipartitions_upto(g.base().rank(), 3 - mu.total_size())) {
          const std::string where = name + ": " + key(g, mu) + ", " + key(g, nu) + ", " + key(g, lam);
          if (mu.total_size() + nu.total_size() == lam.total_size()) {
            const auto prod = dual_multiply(g, mu, nu);
            auto it = prod.find(lam);
            require(Rational(it == prod.end() ? Integer(0) : it->second) == d.coefficient(mu, nu),
                    where + ": dual product");
          }
          const auto& a = g.basis_product(mu, nu);
          auto it = a.find(lam);
          auto jt = dual.find({mu, nu});
          require((it == a.end() ? Integer(0) : it->second) == (jt == dual.end() ? Integer(0) : jt->second),
                  where + ": dual coproduct");
        }
    }
  }
}

// ---------------------------------------------------------------- 11

std::string verify_battery() {
  std::string timings;
  for (const auto& r : test_rings()) {
    auto start = std::chrono::steady_clock::now();
    std::ostringstream out, err;
    int code = run_cli({"--ring", r.source, "--degree", "4", "verify", "all"}, out, err);
    require(code == kExitOk, r.name + ": exit " + std::to_string(code) + "\n" + out.str() + err.str());
    require(out.str().find("\nFAIL") == std::string::npos, r.name + ": failing check");
    if (r.name == "integers" || r.name == "zc2")
      require(out.str().find("SKIP  lambda  --") == std::string::npos, r.name + ": lambda suite skipped");
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    timings += (timings.empty() ? "" : ", ") + r.name + " " + std::to_string(ms) + " ms";
  }
  return timings;
}

struct Criterion {
  int number;
  std::string title;
  double limit_seconds;  // 0: no limit
  std::function<std::string()> body;
};

}  // namespace

int main() {
  auto wrap = [](void (*f)()) {
    return [f] {
      f();
      return std::string();
    };
  };
  const std::vector<Criterion> criteria{
      {1, "symmetric-function kernel to degree 6", 10, wrap(symmetric_function_kernel)},
      {2, "matching products = PBW oracle, |mu| + |nu| <= 4, four rings", 300, wrap(oracle_equivalence)},
      {3, "integrality of structure constants, Delta, S and lambda^n(e_1)", 0, wrap(integrality)},
      {4, "Z_(1)^2 = Z_(1) + Z_(2) + Z_(1,1) over Z", 0, wrap(specific_product)},
      {5, "commutation series identity to bidegree (3,3), degree-one relation, filtration", 0, wrap(commutation)},
      {6, "two routes for F_U(t) to degree 4; e_1 and e_2 of a sum", 0, wrap(moebius_decomposition)},
      {7, "Hopf axioms on |lam| <= 3; E_U(t) grouplike to degree 4", 0, wrap(hopf_axioms)},
      {8, "Psi_1 = id, Psi_m Psi_n = Psi_mn; lambda^n(e_1) = e_n over Z", 0, wrap(lambda_ring)},
      {9, "Witt identities, ghost components, group law", 0, wrap(witt_layer)},
      {10, "dual product and coproduct pairings, keys of size <= 3", 0, wrap(duality)},
      {11, "full verify battery at D = 4 on the four test rings", 900, verify_battery},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string detail, note;
    bool ok = true;
    try {
      note = c.body();
    } catch (const Failure& f) {
      ok = false;
      detail = f.what;
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && c.limit_seconds > 0 && secs > c.limit_seconds) {
      ok = false;
      detail = "over the " + std::to_string(static_cast<int>(c.limit_seconds)) + " s budget";
    }
    failures += !ok;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (ok ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.title << " (" << secs << " s";
    if (!note.empty()) line << "; " << note;
    line << ")";
    if (!ok) line << "\n    " << detail;
    std::cout << line.str() << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
