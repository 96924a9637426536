#include "wreath/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

#include <json.hpp>

#include "wreath/errors.hpp"
#include "wreath/groth_ring.hpp"
#include "wreath/hopf.hpp"
#include "wreath/linear_algebra.hpp"
#include "wreath/pbw.hpp"
#include "wreath/witt.hpp"

namespace wreath {

bool SuiteReport::passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == CheckStatus::Fail; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"commutation", "presentation", "hopf",
                                              "lambda",      "witt",         "oracle-crosscheck"};
  return names;
}

namespace {

struct Outcome {
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
};

Outcome ok(std::string detail = {}) { return {CheckStatus::Pass, std::move(detail)}; }
Outcome fail(std::string detail) { return {CheckStatus::Fail, std::move(detail)}; }
Outcome skip(std::string detail) { return {CheckStatus::Skip, std::move(detail)}; }

struct Context {
  std::shared_ptr<const PbwAlgebra> alg;
  int degree;
  std::mt19937_64 rng;

  const PbwAlgebra& pbw() const { return *alg; }
  const GrothRing& groth() const { return alg->groth(); }
  const BaseRing& ring() const { return alg->base(); }
  int rank() const { return ring().rank(); }
  std::string key(const Multipartition& m) const { return to_string(m, ring().labels()); }
  std::string elem(const RingElement& w) const { return ring().format(w); }
  std::vector<Multipartition> keys(int max_size) const { return enumerate_multipartitions_upto(rank(), max_size); }
  RingElement basis(int u) const { return RingElement::basis(u); }

  // Basis elements, sums of distinct pairs, and one seeded random combination.
  std::vector<RingElement> sample_elements() {
    std::vector<RingElement> out;
    for (int u = 0; u < rank(); ++u) out.push_back(basis(u));
    for (int u = 0; u < rank(); ++u)
      for (int v = u + 1; v < rank(); ++v) out.push_back(basis(u) + basis(v));
    RingElement r;
    std::uniform_int_distribution<int> coeff(-2, 2);
    for (int u = 0; u < rank(); ++u) r.add(u, coeff(rng));
    if (!r.is_zero()) out.push_back(r);
    return out;
  }
};

class SuiteBuilder {
 public:
  SuiteBuilder(std::string suite, Context& ctx) : suite_(std::move(suite)), ctx_(ctx) {}

  void check(const std::string& name, const std::string& anchor, const std::function<Outcome(Context&)>& body) {
    CheckResult r{suite_ + "/" + name, anchor, CheckStatus::Pass, {}};
    try {
      Outcome o = body(ctx_);
      r.status = o.status;
      r.detail = std::move(o.detail);
    } catch (const MissingDataError&) {
      throw;
    } catch (const IntegralityError& e) {
      r.status = CheckStatus::Fail;
      r.detail = std::string("non-integral value: ") + e.what();
    } catch (const std::exception& e) {
      r.status = CheckStatus::Fail;
      r.detail = std::string("error: ") + e.what();
    }
    out_.push_back(std::move(r));
  }

  std::vector<CheckResult> take() { return std::move(out_); }

 private:
  std::string suite_;
  Context& ctx_;
  std::vector<CheckResult> out_;
};

GrothElement sum_of_words(const GrothRing& g, const std::vector<GeneratorTerm>& poly) {
  GrothElement out = g.zero();
  for (const auto& t : poly) out += g.evaluate_word(t.word) * Rational(t.coeff);
  return out;
}

// ---------------------------------------------------------------- commutation

void commutation_suite(SuiteBuilder& s) {
  s.check("degree-one", "e1(U)e1(V) + e1(VU) = e1(V)e1(U) + e1(UV)", [](Context& c) {
    const GrothRing& g = c.groth();
    for (int a = 0; a < c.rank(); ++a)
      for (int b = 0; b < c.rank(); ++b) {
        RingElement u = c.basis(a), v = c.basis(b);
        GrothElement lhs = g.e_generator(1, u) * g.e_generator(1, v) + g.e_generator(1, c.ring().multiply(v, u));
        GrothElement rhs = g.e_generator(1, v) * g.e_generator(1, u) + g.e_generator(1, c.ring().multiply(u, v));
        if (!(lhs == rhs)) return fail("U=" + c.elem(u) + ", V=" + c.elem(v));
      }
    return ok();
  });

  auto pairs = [](Context& c, const std::function<std::string(int, int, const CommutationReport&)>& judge) {
    for (int a = 0; a < c.rank(); ++a)
      for (int b = 0; b < c.rank(); ++b)
        for (int i = 1; i < c.degree; ++i)
          for (int j = 1; i + j <= c.degree; ++j) {
            CommutationReport r = c.groth().verify_commutation(i, j, c.basis(a), c.basis(b));
            std::string bad = judge(i, j, r);
            if (!bad.empty())
              return fail("i=" + std::to_string(i) + ", j=" + std::to_string(j) + ", U=" + c.ring().labels()[a] +
                          ", V=" + c.ring().labels()[b] + ": " + bad);
          }
    return ok();
  };
  s.check("coefficient-form",
          "sum_k e_{i-k}(U) h_k(VU) e_{j-k}(V) = sum_k e_{j-k}(V) h_k(UV) e_{i-k}(U), i + j <= D",
          [&](Context& c) {
            return pairs(c, [](int, int, const CommutationReport& r) { return r.holds ? std::string() : r.witness; });
          });
  s.check("filtration", "deg [e_i(U), e_j(V)] <= i + j - 1", [&](Context& c) {
    return pairs(c, [](int i, int j, const CommutationReport& r) {
      return r.commutator_degree <= i + j - 1 ? std::string()
                                              : "commutator has degree " + std::to_string(r.commutator_degree);
    });
  });
  s.check("series-identity", "E_U(u) E_{VU}(-uv)^{-1} E_V(v) = E_V(v) E_{UV}(-uv)^{-1} E_U(u), bidegree (D-1, D-1)",
          [](Context& c) {
            const int b = std::max(1, c.degree - 1);
            for (int x = 0; x < c.rank(); ++x)
              for (int y = 0; y < c.rank(); ++y) {
                CommutationReport r = c.groth().verify_commutation_series(c.basis(x), c.basis(y), b);
                if (!r.holds) return fail("U=" + c.ring().labels()[x] + ", V=" + c.ring().labels()[y] + ": " + r.witness);
              }
            return ok("bidegree (" + std::to_string(b) + "," + std::to_string(b) + ")");
          });
  s.check("same-element", "e_i(U) e_j(U) = e_j(U) e_i(U)", [](Context& c) {
    for (const auto& w : c.sample_elements())
      for (int i = 1; i < c.degree; ++i)
        for (int j = i + 1; i + j <= c.degree; ++j) {
          GrothElement a = c.groth().e_generator(i, w), b = c.groth().e_generator(j, w);
          if (!(a * b == b * a)) return fail("w=" + c.elem(w) + ", i=" + std::to_string(i) + ", j=" + std::to_string(j));
        }
    return ok();
  });
}

// ---------------------------------------------------------------- presentation

// E_y(-t^k) truncated at the degree, through the groth-ring expansion of e_n(y).
GenSeries alternating_e_series(const GrothRing& g, const RingElement& y, int k, int degree) {
  GenSeries s(g.one(), degree);
  for (int n = 0; n * k <= degree; ++n) s.add(exponents({n * k}), g.decompose_e(n, y) * Rational(n % 2 ? -1 : 1));
  return s;
}

void presentation_suite(SuiteBuilder& s) {
  s.check("sum-rule-degree-one", "e1(U + V) = e1(U) + e1(V)", [](Context& c) {
    const GrothRing& g = c.groth();
    for (int a = 0; a < c.rank(); ++a)
      for (int b = 0; b < c.rank(); ++b) {
        RingElement u = c.basis(a), v = c.basis(b);
        if (!(g.decompose_e(1, u + v) == g.e_generator(1, u) + g.e_generator(1, v)))
          return fail("U=" + c.elem(u) + ", V=" + c.elem(v));
      }
    return ok();
  });
  s.check("sum-rule-degree-two", "e2(U + V) = e1(U)e1(V) - e1(UV) + e2(U) + e2(V)", [](Context& c) {
    const GrothRing& g = c.groth();
    for (int a = 0; a < c.rank(); ++a)
      for (int b = 0; b < c.rank(); ++b) {
        if (a == b) continue;
        RingElement u = c.basis(a), v = c.basis(b);
        GrothElement rhs = g.e_generator(1, u) * g.e_generator(1, v) - g.e_generator(1, c.ring().multiply(u, v)) +
                           g.e_generator(2, u) + g.e_generator(2, v);
        if (!(g.decompose_e(2, u + v) == rhs)) return fail("U=" + c.elem(u) + ", V=" + c.elem(v));
      }
    return ok();
  });
  s.check("moebius-two-paths", "F_W(t) = sum_k mu(k)/k (-log E_{W^k}(-t^k)) = sum_i T_i(W) t^i", [](Context& c) {
    const GrothRing& g = c.groth();
    const PbwAlgebra& p = c.pbw();
    const int d = c.degree;
    for (const auto& w : c.sample_elements()) {
      // Route 1: the Moebius/log combination of E series in the Z basis.
      GenSeries f(g.one(), d);
      for (int k = 1; k <= d; ++k) {
        if (moebius(k) == 0) continue;
        const GenSeries lg = alternating_e_series(g, c.ring().power(w, k), k, d).log();
        f -= lg * frac(moebius(k), k);
      }
      // Route 2: closed form, pushed from the PBW side into the Z basis.
      for (int i = 1; i <= d; ++i) {
        GrothElement closed = p.to_z_basis(p.t(i, w));
        if (!(f.coefficient(exponents({i})) == closed)) return fail("w=" + c.elem(w) + ", t^" + std::to_string(i));
      }
      // And the PBW-side Moebius form against its closed form.
      const PbwSeries moeb = p.f_series_moebius(w, d);
      for (int i = 1; i <= d; ++i)
        if (!(moeb.coefficient(exponents({i})) == p.t(i, w)))
          return fail("PBW side, w=" + c.elem(w) + ", t^" + std::to_string(i));
    }
    return ok();
  });
  s.check("e-series-two-paths", "E_W(t) = prod_l Theta_l(1 - (-t)^l W) agrees with the Z-basis e_n(W)", [](Context& c) {
    const GrothRing& g = c.groth();
    const PbwAlgebra& p = c.pbw();
    for (const auto& w : c.sample_elements()) {
      const PbwSeries e = p.e_series(w, c.degree);
      for (int n = 0; n <= c.degree; ++n) {
        GrothElement viaPbw = p.to_z_basis(e.coefficient(exponents({n})));
        GrothElement direct = g.decompose_e(n, w);
        if (!direct.is_integral()) return fail("e_" + std::to_string(n) + "(" + c.elem(w) + ") is not integral");
        if (!(viaPbw == direct)) return fail("w=" + c.elem(w) + ", n=" + std::to_string(n));
      }
    }
    return ok();
  });
  s.check("complete-inverse", "H_W(t) E_W(-t) = 1", [](Context& c) {
    const GrothRing& g = c.groth();
    for (int u = 0; u < c.rank(); ++u) {
      RingElement w = c.basis(u);
      GenSeries h(g.one(), c.degree);
      for (int n = 0; n <= c.degree; ++n) h.add(exponents({n}), g.h_element(n, w));
      if (!(h * alternating_e_series(g, w, 1, c.degree) == GenSeries::constant(g.one(), c.degree)))
        return fail("W=" + c.elem(w));
    }
    return ok();
  });
  s.check("leading-term", "gr(e_i(U) e_j(V)) = e_i(x_U) e_j(x_V)", [](Context& c) {
    const GrothRing& g = c.groth();
    for (int a = 0; a < c.rank(); ++a)
      for (int b = 0; b < c.rank(); ++b)
        for (int i = 1; i < c.degree; ++i)
          for (int j = 1; i + j <= c.degree; ++j) {
            GrothElement prod = g.e_generator(i, c.basis(a)) * g.e_generator(j, c.basis(b));
            SymSeries expected = power_to_schur(
                multiply(elementary(g.labels(), i + j, a, i), elementary(g.labels(), i + j, b, j)));
            if (!(g.leading_term(prod) == expected.part_of_degree(i + j)))
              return fail("i=" + std::to_string(i) + ", j=" + std::to_string(j) + ", U=" + g.labels()[a] +
                          ", V=" + g.labels()[b]);
          }
    return ok();
  });
  s.check("integral-generation", "Z_lam is an integer polynomial in the e_r(U)", [](Context& c) {
    const GrothRing& g = c.groth();
    const int d = c.degree;
    for (const auto& lam : c.keys(d)) {
      GrothElement z = g.z(lam);
      if (!(sum_of_words(g, g.to_generator_polynomial(z)) == z)) return fail(c.key(lam));
    }
    return ok("|lam| <= " + std::to_string(d));
  });
  s.check("x-basis", "X_lam = Z_lam + lower filtration, unitriangular", [](Context& c) {
    const GrothRing& g = c.groth();
    if (!c.ring().unit_index()) return skip("the unit is not a basis element");
    for (const auto& lam : c.keys(c.degree)) {
      GrothElement x = g.x_basis_element(lam);
      GrothElement diff = x - g.z(lam);
      if (!x.is_integral() || diff.filtration_degree() >= lam.total_size()) return fail(c.key(lam));
    }
    return ok();
  });
  s.check("basis-independence", "the Z_lam of another basis of R span the same integral ring", [](Context& c) {
    if (c.rank() < 2) return skip("rank 1 has no other basis up to sign");
    const GrothRing& g = c.groth();
    const int k = c.rank();
    const int d = c.degree;
    // f_0 = b_0 + b_1, f_i = b_i otherwise; inverse b_0 = f_0 - f_1.
    std::vector<RingElement> forward, backward;
    std::vector<std::string> labels;
    for (int i = 0; i < k; ++i) {
      forward.push_back(i == 0 ? c.basis(0) + c.basis(1) : c.basis(i));
      backward.push_back(i == 0 ? c.basis(0) - c.basis(1) : c.basis(i));
      labels.push_back("f" + std::to_string(i));
    }
    auto other = GrothRing::create(rebase(c.ring(), labels, forward));
    auto image = [&](const GrothElement& x) {
      GrothElement out = g.zero();
      for (const auto& [key, coeff] : x.terms()) out += g.z_in_basis(forward, key) * coeff;
      return out;
    };
    for (const auto& lam : c.keys(d)) {
      GrothElement there = other->z_in_basis(backward, lam);
      if (!there.is_integral() || !g.z_in_basis(forward, lam).is_integral())
        return fail("transition not integral at " + c.key(lam));
      if (!(image(there) == g.z(lam))) return fail("round trip at " + c.key(lam));
    }
    for (const auto& mu : c.keys(d))
      for (const auto& nu : c.keys(d - mu.total_size())) {
        GrothElement prod = other->z(mu) * other->z(nu);
        if (!(image(prod) == image(other->z(mu)) * image(other->z(nu))))
          return fail("products differ at " + to_string(mu, labels) + " * " + to_string(nu, labels));
      }
    return ok();
  });
}

// ---------------------------------------------------------------- hopf

using Triple = std::map<std::tuple<Multipartition, Multipartition, Multipartition>, Rational>;

void add_to(Triple& t, const Multipartition& a, const Multipartition& b, const Multipartition& c, const Rational& v) {
  auto& slot = t[{a, b, c}];
  slot += v;
  if (slot == 0) t.erase({a, b, c});
}

// Is the tensor in span (x) span? Equivalent to every row and every column
// lying in the span.
bool in_tensor_square(const TensorGrothElement& x, const RowSpace<Multipartition>& span) {
  std::map<Multipartition, std::map<Multipartition, Rational>> rows, cols;
  for (const auto& [k, c] : x.terms()) {
    rows[k.first][k.second] = c;
    cols[k.second][k.first] = c;
  }
  for (const auto& [k, v] : rows)
    if (!span.contains(v)) return false;
  for (const auto& [k, v] : cols)
    if (!span.contains(v)) return false;
  return true;
}

void hopf_suite(SuiteBuilder& s) {
  auto small = [](Context& c) { return c.degree; };
  s.check("coassociativity", "(Delta (x) id) Delta = (id (x) Delta) Delta", [&](Context& c) {
    const GrothRing& g = c.groth();
    for (const auto& lam : c.keys(small(c))) {
      const TensorGrothElement d = comultiply(g.z(lam));
      if (!d.is_integral()) return fail("Delta not integral at " + c.key(lam));
      Triple left, right;
      for (const auto& [k, v] : d.terms()) {
        const TensorGrothElement dl = comultiply(g.z(k.first)), dr = comultiply(g.z(k.second));
        for (const auto& [k2, v2] : dl.terms()) add_to(left, k2.first, k2.second, k.second, v * v2);
        for (const auto& [k2, v2] : dr.terms()) add_to(right, k.first, k2.first, k2.second, v * v2);
      }
      if (left != right) return fail(c.key(lam));
    }
    return ok();
  });
  s.check("counit", "(eps (x) id) Delta = id = (id (x) eps) Delta", [&](Context& c) {
    const GrothRing& g = c.groth();
    for (const auto& lam : c.keys(small(c))) {
      const GrothElement z = g.z(lam);
      const TensorGrothElement d = comultiply(z);
      GrothElement l = g.zero(), r = g.zero();
      for (const auto& [k, v] : d.terms()) {
        l += g.z(k.second) * (v * counit(g.z(k.first)));
        r += g.z(k.first) * (v * counit(g.z(k.second)));
      }
      if (!(l == z) || !(r == z)) return fail(c.key(lam));
    }
    return ok();
  });
  s.check("antipode", "m (S (x) id) Delta = eta eps = m (id (x) S) Delta", [&](Context& c) {
    const GrothRing& g = c.groth();
    for (const auto& lam : c.keys(small(c))) {
      const GrothElement z = g.z(lam);
      const GrothElement sz = antipode(c.pbw(), z);
      if (!sz.is_integral()) return fail("S not integral at " + c.key(lam));
      const TensorGrothElement d = comultiply(z);
      GrothElement left = g.zero(), right = g.zero();
      for (const auto& [k, v] : d.terms()) {
        left += antipode(c.pbw(), g.z(k.first)) * g.z(k.second) * v;
        right += g.z(k.first) * antipode(c.pbw(), g.z(k.second)) * v;
      }
      if (!(left == g.scalar(counit(z))) || !(right == g.scalar(counit(z)))) return fail(c.key(lam));
    }
    return ok();
  });
  s.check("multiplicativity", "Delta(ab) = Delta(a) Delta(b)", [&](Context& c) {
    const GrothRing& g = c.groth();
    const int d = small(c);
    for (const auto& mu : c.keys(d))
      for (const auto& nu : c.keys(d - mu.total_size()))
        if (!(comultiply(g.z(mu) * g.z(nu)) == comultiply(g.z(mu)) * comultiply(g.z(nu))))
          return fail(c.key(mu) + " * " + c.key(nu));
    return ok();
  });
  s.check("grouplike", "Delta(E_W(t)) = E_W(t) (x) E_W(t)", [](Context& c) {
    const GrothRing& g = c.groth();
    for (const auto& w : c.sample_elements())
      for (int n = 0; n <= c.degree; ++n) {
        TensorGrothElement expected(c.alg->groth_ptr());
        for (int i = 0; i <= n; ++i) expected += tensor(g.e_generator(i, w), g.e_generator(n - i, w));
        if (!(comultiply(g.e_generator(n, w)) == expected)) return fail("w=" + c.elem(w) + ", n=" + std::to_string(n));
      }
    return ok();
  });
  s.check("antipode-series", "S(E_U(t)) = E_U(t)^{-1} = H_U(-t)", [](Context& c) {
    const GrothRing& g = c.groth();
    for (int u = 0; u < c.rank(); ++u)
      for (int n = 0; n <= c.degree; ++n) {
        RingElement w = c.basis(u);
        if (!(antipode(c.pbw(), g.e_generator(n, w)) == g.h_element(n, w) * Rational(n % 2 ? -1 : 1)))
          return fail("U=" + c.elem(w) + ", n=" + std::to_string(n));
      }
    return ok();
  });
  s.check("dual-product", "<Y_mu Y_nu, Z_lam> = <Y_mu (x) Y_nu, Delta Z_lam>", [&](Context& c) {
    const GrothRing& g = c.groth();
    const int d = small(c);
    auto keys = c.keys(d);
    for (const auto& lam : keys) {
      const TensorGrothElement delta = comultiply(g.z(lam));
      for (const auto& mu : keys)
        for (const auto& nu : c.keys(lam.total_size() - mu.total_size())) {
          if (mu.total_size() + nu.total_size() != lam.total_size()) continue;
          const auto prod = dual_multiply(g, mu, nu);
          auto it = prod.find(lam);
          if (Rational(it == prod.end() ? Integer(0) : it->second) != delta.coefficient(mu, nu))
            return fail(c.key(mu) + ", " + c.key(nu) + " against " + c.key(lam));
        }
    }
    return ok();
  });
  s.check("dual-coproduct", "<Delta Y_lam, Z_mu (x) Z_nu> = <Y_lam, Z_mu Z_nu>", [&](Context& c) {
    const GrothRing& g = c.groth();
    const int d = small(c);
    for (const auto& lam : c.keys(d)) {
      const auto dual = dual_comultiply(g, lam);
      for (const auto& mu : c.keys(d))
        for (const auto& nu : c.keys(d - mu.total_size())) {
          const auto& a = g.basis_product(mu, nu);
          auto it = a.find(lam);
          auto jt = dual.find({mu, nu});
          if ((it == a.end() ? Integer(0) : it->second) != (jt == dual.end() ? Integer(0) : jt->second))
            return fail(c.key(mu) + " * " + c.key(nu) + " at " + c.key(lam));
        }
    }
    return ok();
  });
  s.check("dual-antipode", "[s_lam] sigma(s_mu) = [Z_mu] S(Z_lam)", [&](Context& c) {
    if (!c.ring().unit_index()) return skip("the unit is not a basis element");
    const GrothRing& g = c.groth();
    const int d = small(c);
    auto keys = c.keys(d);
    for (const auto& mu : keys) {
      const SymSeries sigma = dual_antipode(g, mu, d);
      for (const auto& lam : keys)
        if (sigma.coefficient(lam) != antipode(c.pbw(), g.z(lam)).coefficient(mu))
          return fail(c.key(mu) + ", " + c.key(lam));
    }
    return ok();
  });
  s.check("twist", "theta(e_i(x_1)) = e_i - e_{i-1} + ... and vanishes at x_1 = {1, 0, 0, ...}", [](Context& c) {
    auto unit = c.ring().unit_index();
    if (!unit) return skip("the unit is not a basis element");
    const GrothRing& g = c.groth();
    const auto& labels = g.labels();
    for (int i = 1; i <= c.degree; ++i) {
      SymSeries ei = elementary(labels, c.degree, *unit, i);
      SymSeries alt(labels, SymBasis::PowerSum, c.degree);
      for (int j = i; j >= 0; --j) alt = alt + elementary(labels, c.degree, *unit, j) * Rational((i - j) % 2 ? -1 : 1);
      const SymSeries t = theta_twist(g, ei, Twist::Forward);
      if (!(t == alt)) return fail("theta(e_" + std::to_string(i) + ")");
      if (!(theta_twist(g, t, Twist::Inverse) == ei)) return fail("inverse at e_" + std::to_string(i));
      if (!specialise_unit_to_one(g, t).is_zero()) return fail("specialisation at e_" + std::to_string(i));
    }
    return ok();
  });
  s.check("sub-hopf", "Delta(G_2) lies in G_2 (x) G_2", [&](Context& c) {
    const GrothRing& g = c.groth();
    const int d = small(c);
    RowSpace<Multipartition> span;
    const auto members = g.gk_spanning_set(2, d);
    for (const auto& x : members) span.insert(x.terms());
    for (std::size_t i = 0; i < members.size(); ++i)
      if (!in_tensor_square(comultiply(members[i]), span))
        return fail(g.format_word(g.gk_words(2, d)[i]));
    return ok("degree <= " + std::to_string(d));
  });
}

// ---------------------------------------------------------------- lambda

void lambda_suite(SuiteBuilder& s, Context& ctx) {
  if (!ctx.ring().has_lambda()) throw MissingDataError("ring has no lambda data");
  if (!ctx.ring().has_adams()) throw MissingDataError("ring has no Adams data");
  for (int d = 2; d <= 9; ++d)
    if (!ctx.ring().has_adams(d)) throw MissingDataError("ring has no Adams operation psi_" + std::to_string(d));

  s.check("adams-identity", "Psi_1 = id", [](Context& c) {
    for (const auto& lam : c.keys(c.degree)) {
      PbwElement z = c.pbw().z_element(lam);
      if (!(c.pbw().adams(1, z) == z)) return fail(c.key(lam));
    }
    return ok();
  });
  s.check("adams-composition", "Psi_m Psi_n = Psi_mn, m, n <= 3, on T_1(U) and e_2(U)", [](Context& c) {
    const PbwAlgebra& p = c.pbw();
    for (int u = 0; u < c.rank(); ++u)
      for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 3; ++n) {
          for (const PbwElement& x : {p.generator(1, u), p.z_element(Multipartition::single(u, {1, 1}))})
            if (!(p.adams(m, p.adams(n, x)) == p.adams(m * n, x)))
              return fail("U=" + c.ring().labels()[u] + ", m=" + std::to_string(m) + ", n=" + std::to_string(n));
        }
    return ok();
  });
  s.check("adams-multiplicative", "Psi_m(ab) = Psi_m(a) Psi_m(b)", [](Context& c) {
    const GrothRing& g = c.groth();
    for (int m = 1; m <= 2; ++m)
      for (int a = 0; a < c.rank(); ++a)
        for (int b = 0; b < c.rank(); ++b) {
          GrothElement x = g.e_generator(1, c.basis(a)), y = g.e_generator(1, c.basis(b));
          if (!(c.pbw().adams_z(m, x * y) == c.pbw().adams_z(m, x) * c.pbw().adams_z(m, y)))
            return fail("m=" + std::to_string(m) + ", U=" + g.labels()[a] + ", V=" + g.labels()[b]);
        }
    return ok();
  });
  s.check("adams-integral", "Psi_m(Z_lam) is integral", [](Context& c) {
    for (int m = 2; m <= c.degree; ++m)
      for (const auto& lam : c.keys(c.degree / m))
        if (!c.pbw().adams_z(m, c.groth().z(lam)).is_integral())
          return fail("m=" + std::to_string(m) + " at " + c.key(lam));
    return ok();
  });
  auto top = [](Context& c) { return std::min(c.degree, c.ring().lambda_max()); };
  s.check("lambda-integral", "lambda^n(e1(U)) is integral", [&](Context& c) {
    for (int u = 0; u < c.rank(); ++u)
      for (int n = 1; n <= top(c); ++n)
        if (!c.pbw().lambda_on_e1(n, c.basis(u)).is_integral())
          return fail("U=" + c.ring().labels()[u] + ", n=" + std::to_string(n));
    return ok();
  });
  s.check("newton", "n lambda^n = sum_k (-1)^{k-1} Psi_k lambda^{n-k}", [&](Context& c) {
    const GrothRing& g = c.groth();
    for (int u = 0; u < c.rank(); ++u) {
      RingElement w = c.basis(u);
      for (int n = 1; n <= top(c); ++n) {
        GrothElement rhs = g.zero();
        for (int k = 1; k <= n; ++k) {
          GrothElement lam = n == k ? g.one() : c.pbw().lambda_on_e1(n - k, w);
          rhs += c.pbw().adams_z(k, g.e_generator(1, w)) * lam * Rational(k % 2 ? 1 : -1);
        }
        if (!(c.pbw().lambda_on_e1(n, w) * Rational(n) == rhs))
          return fail("U=" + c.ring().labels()[u] + ", n=" + std::to_string(n));
      }
    }
    return ok();
  });
  s.check("integers", "over Z: lambda^n(e1(1)) = e_n(1)", [&](Context& c) {
    if (c.rank() != 1 || !c.ring().unit_index() || !(c.ring().lambda_apply(2, c.basis(0)).is_zero()))
      return skip("not the integers");
    for (int n = 1; n <= top(c); ++n)
      if (!(c.pbw().lambda_on_e1(n, c.basis(0)) == c.groth().e_generator(n, c.basis(0))))
        return fail("n=" + std::to_string(n));
    return ok();
  });
}

// ---------------------------------------------------------------- witt

WittVector<Integer> random_witt(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> dist(-5, 5);
  WittVector<Integer> v;
  for (int i = 0; i < n; ++i) v.a.push_back(Integer(dist(rng)));
  return v;
}

void witt_suite(SuiteBuilder& s) {
  s.check("identities", "a + (0,0,...) = a, (1,0,0,...) a = a, length 6", [](Context& c) {
    WittVector<Integer> zero{std::vector<Integer>(6, 0)};
    WittVector<Integer> one = zero;
    one.a[0] = 1;
    for (int trial = 0; trial < 50; ++trial) {
      auto x = random_witt(c.rng, 6);
      if (!(witt_add(x, zero) == x) || !(witt_mul(one, x) == x) || !(witt_mul(x, one) == x))
        return fail("a=" + to_string(x));
    }
    return ok();
  });
  s.check("ghost", "w_n(a + b) = w_n(a) + w_n(b), w_n(ab) = w_n(a) w_n(b)", [](Context& c) {
    for (int trial = 0; trial < 50; ++trial) {
      auto x = random_witt(c.rng, 6), y = random_witt(c.rng, 6);
      auto gx = ghost_components(x), gy = ghost_components(y);
      auto gs = ghost_components(witt_add(x, y)), gp = ghost_components(witt_mul(x, y));
      for (int n = 0; n < 6; ++n)
        if (gs[n] != gx[n] + gy[n] || gp[n] != gx[n] * gy[n])
          return fail("a=" + to_string(x) + ", b=" + to_string(y) + ", n=" + std::to_string(n + 1));
    }
    return ok();
  });
  s.check("ring-laws", "associativity, commutativity, distributivity, length 5", [](Context& c) {
    for (int trial = 0; trial < 20; ++trial) {
      auto x = random_witt(c.rng, 5), y = random_witt(c.rng, 5), z = random_witt(c.rng, 5);
      std::string where = "a=" + to_string(x) + ", b=" + to_string(y) + ", c=" + to_string(z);
      if (!(witt_add(witt_add(x, y), z) == witt_add(x, witt_add(y, z))) || !(witt_add(x, y) == witt_add(y, x)))
        return fail("addition, " + where);
      if (!(witt_mul(witt_mul(x, y), z) == witt_mul(x, witt_mul(y, z))) || !(witt_mul(x, y) == witt_mul(y, x)))
        return fail("multiplication, " + where);
      if (!(witt_mul(x, witt_add(y, z)) == witt_add(witt_mul(x, y), witt_mul(x, z))))
        return fail("distributivity, " + where);
    }
    return ok();
  });

  auto law_degree = [](Context& c) { return c.degree; };
  s.check("law-first-order", "F(x, y) = e_i(x_U) + e_i(y_U) + higher order", [&](Context& c) {
    const int d = law_degree(c);
    GroupLaw law = formal_group_law(c.ring(), d);
    for (int u = 0; u < c.rank(); ++u)
      for (int i = 1; i <= d; ++i) {
        Polynomial linear;
        for (const auto& [m, v] : law.component(i, u).terms())
          if (m.size() == 1) linear.add(m, v);
        if (!(linear == Polynomial::symbol({0, u, i}) + Polynomial::symbol({1, u, i})))
          return fail("e" + std::to_string(i) + "(" + c.ring().labels()[u] + ")");
      }
    return ok();
  });
  s.check("law-identity", "F(x, 0) = x = F(0, x)", [&](Context& c) {
    const int d = law_degree(c);
    GroupLaw law = formal_group_law(c.ring(), d);
    auto drop = [](int side) {
      return [side](const LawSymbol& s) { return s.side == side ? Polynomial(0) : Polynomial::symbol(s); };
    };
    for (int u = 0; u < c.rank(); ++u)
      for (int i = 1; i <= d; ++i) {
        const Polynomial& f = law.component(i, u);
        if (!(substitute(f, drop(1), d) == Polynomial::symbol({0, u, i})) ||
            !(substitute(f, drop(0), d) == Polynomial::symbol({1, u, i})))
          return fail("e" + std::to_string(i) + "(" + c.ring().labels()[u] + ")");
      }
    return ok();
  });
  s.check("law-associativity", "F(F(x, y), z) = F(x, F(y, z))", [&](Context& c) {
    const int d = law_degree(c);
    GroupLaw law = formal_group_law(c.ring(), d);
    for (int u = 0; u < c.rank(); ++u)
      for (int i = 1; i <= d; ++i)
        if (!(law_left_nested(law, i, u) == law_right_nested(law, i, u)))
          return fail("e" + std::to_string(i) + "(" + c.ring().labels()[u] + ")");
    return ok("total degree <= " + std::to_string(d));
  });
  s.check("law-integers", "over Z: F(a, b) = a + b + ab in W", [](Context& c) {
    if (c.rank() != 1 || !c.ring().unit_index()) return skip("not the integers");
    const int d = c.degree;
    GroupLaw law = formal_group_law(c.ring(), d);
    WittVector<Polynomial> a, b;
    for (int i = 1; i <= d; ++i) {
      a.a.push_back(Polynomial::symbol({0, 0, i}));
      b.a.push_back(Polynomial::symbol({1, 0, i}));
    }
    auto f = witt_add(witt_add(a, b), witt_mul(a, b));
    for (int i = 1; i <= d; ++i)
      if (!(f.a[i - 1].truncated(d) == law.component(i, 0))) return fail("component " + std::to_string(i));
    return ok();
  });
}

// ---------------------------------------------------------------- oracle

void oracle_suite(SuiteBuilder& s) {
  s.check("products", "Z_mu Z_nu by matching = Z_mu Z_nu through the PBW oracle, |mu| + |nu| <= D", [](Context& c) {
    const GrothRing& g = c.groth();
    int count = 0;
    for (const auto& mu : c.keys(c.degree))
      for (const auto& nu : c.keys(c.degree - mu.total_size())) {
        GrothElement oracle = c.pbw().oracle_multiply(mu, nu);
        GrothElement direct = g.z(mu) * g.z(nu);
        if (!direct.is_integral()) return fail("structure constants not integral at " + c.key(mu) + " * " + c.key(nu));
        if (!(oracle == direct)) return fail(c.key(mu) + " * " + c.key(nu));
        ++count;
      }
    return ok(std::to_string(count) + " pairs");
  });
  s.check("substitution", "a_{mu,nu}^lam by substitution and Hall pairing = matching", [](Context& c) {
    const GrothRing& g = c.groth();
    const int d = c.degree;
    for (const auto& mu : c.keys(d))
      for (const auto& nu : c.keys(d - mu.total_size())) {
        const auto& prod = g.basis_product(mu, nu);
        for (const auto& lam : c.keys(mu.total_size() + nu.total_size())) {
          auto it = prod.find(lam);
          if (g.structure_constant(mu, nu, lam) != (it == prod.end() ? Integer(0) : it->second))
            return fail(c.key(mu) + " * " + c.key(nu) + " at " + c.key(lam));
        }
      }
    return ok("|mu| + |nu| <= " + std::to_string(d));
  });
  s.check("round-trip", "Z_lam -> PBW -> Z basis is the identity", [](Context& c) {
    for (const auto& lam : c.keys(c.degree))
      if (!(c.pbw().to_z_basis(c.pbw().z_element(lam)) == c.groth().z(lam))) return fail(c.key(lam));
    return ok();
  });
  s.check("confluence", "normal order is independent of the rewriting order", [](Context& c) {
    std::uniform_int_distribution<int> level(1, 2), label(0, c.rank() - 1), len(2, 4);
    for (int trial = 0; trial < 30; ++trial) {
      PbwWord w;
      const int n = len(c.rng);
      for (int i = 0; i < n; ++i) w.push_back({level(c.rng), label(c.rng)});
      if (!(c.pbw().normal_order(w) == c.pbw().normal_order_alternative(w))) return fail(c.pbw().format_word(w));
    }
    return ok();
  });
  s.check("unit-square", "over Z: Z_(1)^2 = Z_(1) + Z_(2) + Z_(1,1)", [](Context& c) {
    if (c.rank() != 1 || !c.ring().unit_index()) return skip("not the integers");
    const GrothRing& g = c.groth();
    GrothElement expected = g.z(Multipartition::single(0, {1})) + g.z(Multipartition::single(0, {2})) +
                            g.z(Multipartition::single(0, {1, 1}));
    const auto one = Multipartition::single(0, {1});
    if (!(c.pbw().oracle_multiply(one, one) == expected)) return fail(to_string(c.pbw().oracle_multiply(one, one)));
    return ok();
  });
}

std::vector<CheckResult> run_one(const std::string& suite, Context& ctx) {
  SuiteBuilder b(suite, ctx);
  if (suite == "commutation")
    commutation_suite(b);
  else if (suite == "presentation")
    presentation_suite(b);
  else if (suite == "hopf")
    hopf_suite(b);
  else if (suite == "lambda")
    lambda_suite(b, ctx);
  else if (suite == "witt")
    witt_suite(b);
  else if (suite == "oracle-crosscheck")
    oracle_suite(b);
  else
    throw ParseError("unknown suite '" + suite + "'");
  return b.take();
}

const char* status_word(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "PASS";
    case CheckStatus::Fail:
      return "FAIL";
    case CheckStatus::Skip:
      return "SKIP";
  }
  return "?";
}

}  // namespace

SuiteReport run_suite(const std::string& suite, const BaseRing& ring, int degree, std::uint64_t seed) {
  if (degree < 1) throw DomainError("degree must be at least 1");
  if (suite != "all" && std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
    throw ParseError("unknown suite '" + suite + "'");
  Context ctx{PbwAlgebra::create(GrothRing::create(ring)), degree, std::mt19937_64(seed)};
  SuiteReport report{suite, {}};
  if (suite == "all") {
    for (const auto& name : suite_names()) {
      // Each suite draws from its own stream so that running one alone
      // reproduces the same checks.
      ctx.rng.seed(seed);
      try {
        auto part = run_one(name, ctx);
        report.checks.insert(report.checks.end(), part.begin(), part.end());
      } catch (const MissingDataError& e) {
        report.checks.push_back({name, "", CheckStatus::Skip, e.what()});
      }
    }
  } else {
    report.checks = run_one(suite, ctx);
  }
  std::sort(report.checks.begin(), report.checks.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
  return report;
}

std::string render_text(const SuiteReport& report, const std::string& ring_name, int degree, std::uint64_t seed) {
  std::ostringstream out;
  out << "verify " << report.suite << "  ring=" << ring_name << "  degree=" << degree << "  seed=" << seed << "\n";
  int counts[3] = {0, 0, 0};
  for (const auto& c : report.checks) {
    ++counts[static_cast<int>(c.status)];
    out << status_word(c.status) << "  " << c.name;
    if (!c.anchor.empty()) out << "  [" << c.anchor << "]";
    if (!c.detail.empty()) out << "  -- " << c.detail;
    out << "\n";
  }
  out << (report.passed() ? "PASS" : "FAIL") << ": " << counts[0] << " passed, " << counts[1] << " failed, "
      << counts[2] << " skipped\n";
  return out.str();
}

std::string render_json(const SuiteReport& report, const std::string& ring_name, int degree, std::uint64_t seed) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : report.checks) {
    std::string status = status_word(c.status);
    std::transform(status.begin(), status.end(), status.begin(), [](unsigned char ch) { return std::tolower(ch); });
    checks.push_back({{"name", c.name}, {"anchor", c.anchor}, {"status", status}, {"detail", c.detail}});
  }
  nlohmann::json j{{"suite", report.suite}, {"ring", ring_name}, {"degree", degree},
                   {"seed", seed},          {"passed", report.passed()}, {"checks", checks}};
  return j.dump(2) + "\n";
}

}  // namespace wreath
