#include "wreath/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <functional>
#include <optional>

#include "wreath/errors.hpp"
#include "wreath/format.hpp"
#include "wreath/groth_ring.hpp"
#include "wreath/hopf.hpp"
#include "wreath/literal.hpp"
#include "wreath/pbw.hpp"
#include "wreath/verify.hpp"
#include "wreath/witt.hpp"

namespace wreath {

namespace {

using nlohmann::json;

// Values bound by subcommand options; one instance per invocation.
struct Args {
  std::vector<std::string> factors;
  std::string elem, literal, suite, a, b;
  int n = 1;
  int length = 0;
};

struct Options {
  std::string ring = "builtin:integers";
  int degree = 4;
  bool json = false;
  std::uint64_t seed = 1;
};

// Lazily loaded ring and the algebras built on it.
class Session {
 public:
  Session(const Options& opt, std::ostream& out) : opt_(opt), out_(out) {}

  const Options& options() const { return opt_; }
  const BaseRing& ring() {
    if (!ring_) ring_ = load_ring(opt_.ring);
    return *ring_;
  }
  std::string ring_name() {
    const BaseRing& r = ring();
    return r.name.empty() ? opt_.ring : r.name;
  }
  const PbwAlgebra& pbw() {
    if (!alg_) alg_ = PbwAlgebra::create(GrothRing::create(ring()));
    return *alg_;
  }
  const GrothRing& groth() { return pbw().groth(); }

  GrothElement element(const std::string& text) { return parse_groth_element(groth(), text); }
  RingElement ring_element(const std::string& text) { return ring().parse(text); }

  void emit(const std::string& text, json j) {
    if (opt_.json) {
      j["ring"] = ring_name();
      out_ << j.dump(2) << "\n";
    } else {
      out_ << text << "\n";
    }
  }
  std::ostream& out() { return out_; }

 private:
  const Options& opt_;
  std::ostream& out_;
  std::optional<BaseRing> ring_;
  std::shared_ptr<const PbwAlgebra> alg_;
};

json element_json(const GrothElement& x) {
  json terms = json::array();
  for (const auto& [k, c] : x.terms())
    terms.push_back({{"coeff", to_string(c)}, {"term", "Z" + to_string(k, x.ring().labels())}});
  return terms;
}

json tensor_json(const TensorGrothElement& x) {
  json terms = json::array();
  const auto& labels = x.ring().labels();
  for (const auto& [k, c] : x.terms())
    terms.push_back({{"coeff", to_string(c)},
                     {"left", "Z" + to_string(k.first, labels)},
                     {"right", "Z" + to_string(k.second, labels)}});
  return terms;
}

std::string generator_polynomial_text(const GrothRing& g, const std::vector<GeneratorTerm>& poly) {
  std::vector<std::pair<Rational, std::string>> items;
  for (const auto& t : poly) items.emplace_back(Rational(t.coeff), g.format_word(t.word));
  return format_linear_combination(items);
}

json generator_polynomial_json(const GrothRing& g, const std::vector<GeneratorTerm>& poly) {
  json terms = json::array();
  for (const auto& t : poly) terms.push_back({{"coeff", t.coeff.get_str()}, {"word", g.format_word(t.word)}});
  return terms;
}

PbwElement to_pbw(const PbwAlgebra& alg, const GrothElement& x) {
  PbwElement out = alg.zero();
  for (const auto& [k, c] : x.terms()) out += alg.z_element(k) * c;
  return out;
}

WittVector<Integer> padded_witt(const std::string& text, int length) {
  WittVector<Integer> v = parse_witt(text);
  if (v.length() > length)
    throw ParseError("Witt vector '" + text + "' has more than " + std::to_string(length) + " components");
  v.a.resize(length, Integer(0));
  return v;
}

std::string validation_text(const BaseRing& r, const std::string& name, const std::vector<Violation>& violations) {
  std::string s = "ring: " + name + "\nrank: " + std::to_string(r.rank()) + "\nlabels:";
  for (const auto& l : r.labels()) s += " " + l;
  s += "\nunit: " + (r.has_unit() ? r.format(r.unit()) : std::string("none"));
  s += std::string("\ncommutative: ") + (r.is_commutative() ? "true" : "false");
  s += std::string("\nmonomial: ") + (is_monomial_algebra(r) ? "true" : "false");
  s += std::string("\nadams data: ") + (r.has_adams() ? "yes" : "no");
  s += std::string("\nlambda data: ") + (r.has_lambda() ? "yes" : "no");
  s += std::string("\nvalid: ") + (violations.empty() ? "true" : "false");
  for (const auto& v : violations) s += "\nviolation: " + v.kind + ": " + v.message;
  return s;
}

void add_ring_commands(CLI::App& app, Session& s, Args&, std::function<int()>& action) {
  auto* ring = app.add_subcommand("ring", "Inspect the base ring")->require_subcommand(1);
  ring->add_subcommand("validate", "Check the ring axioms and optional Adams/lambda data")->callback([&] {
    action = [&] {
      const BaseRing& r = s.ring();
      auto violations = validate(r);
      json j{{"command", "ring validate"},
             {"rank", r.rank()},
             {"labels", r.labels()},
             {"commutative", r.is_commutative()},
             {"monomial", is_monomial_algebra(r)},
             {"valid", violations.empty()}};
      j["unit"] = r.has_unit() ? json(r.format(r.unit())) : json(nullptr);
      json vs = json::array();
      for (const auto& v : violations) vs.push_back({{"kind", v.kind}, {"message", v.message}});
      j["violations"] = vs;
      s.emit(validation_text(r, s.ring_name(), violations), j);
      return violations.empty() ? kExitOk : kExitFailed;
    };
  });
}

void add_groth_commands(CLI::App& app, Session& s, Args& args, std::function<int()>& action) {
  auto* groth = app.add_subcommand("groth", "Arithmetic in the Grothendieck ring")->require_subcommand(1);

  auto* mul = groth->add_subcommand("mul", "Multiply elements left to right");
  mul->add_option("factors", args.factors, "Element literals such as 'Z{U:[2,1];V:[1]}'")->required()->expected(1, -1);
  mul->callback([&] {
    action = [&] {
      GrothElement p = s.element(args.factors.front());
      for (std::size_t i = 1; i < args.factors.size(); ++i) p = p * s.element(args.factors[i]);
      s.emit(to_string(p), {{"command", "groth mul"}, {"terms", element_json(p)}});
      return kExitOk;
    };
  });

  auto series_command = [&](const char* name, const char* help, bool elementary) {
    auto* cmd = groth->add_subcommand(name, help);
    cmd->add_option("--elem", args.elem, "Ring element, e.g. 'e + g'")->required();
    cmd->add_option("--n", args.n, "Index")->required()->check(CLI::NonNegativeNumber);
    cmd->callback([&s, &args, &action, elementary, name] {
      action = [&s, &args, elementary, name] {
        RingElement w = s.ring_element(args.elem);
        GrothElement x = elementary ? s.groth().decompose_e(args.n, w) : s.groth().h_element(args.n, w);
        std::string head = std::string(elementary ? "e_" : "h_") + std::to_string(args.n) + "(" + s.ring().format(w) + ")";
        s.emit(head + " = " + to_string(x), {{"command", std::string("groth ") + name}, {"terms", element_json(x)}});
        return kExitOk;
      };
    });
  };
  series_command("e", "e_n of a ring element in the Z basis", true);
  series_command("h", "h_n of a ring element in the Z basis", false);

  auto* decompose = groth->add_subcommand("decompose", "e_n(W) in the Z basis and in the generators e_r(U)");
  decompose->add_option("--elem", args.elem, "Ring element")->required();
  decompose->add_option("--n", args.n, "Index")->required()->check(CLI::NonNegativeNumber);
  decompose->callback([&] {
    action = [&] {
      RingElement w = s.ring_element(args.elem);
      GrothElement x = s.groth().decompose_e(args.n, w);
      auto poly = s.groth().to_generator_polynomial(x);
      std::string head = "e_" + std::to_string(args.n) + "(" + s.ring().format(w) + ")";
      s.emit(head + " = " + to_string(x) + "\n" + head + " = " + generator_polynomial_text(s.groth(), poly),
             {{"command", "groth decompose"},
              {"terms", element_json(x)},
              {"generators", generator_polynomial_json(s.groth(), poly)}});
      return kExitOk;
    };
  });

  auto* poly = groth->add_subcommand("poly", "Write an element as a polynomial in the generators e_r(U)");
  poly->add_option("element", args.literal, "Element literal")->required();
  poly->callback([&] {
    action = [&] {
      auto p = s.groth().to_generator_polynomial(s.element(args.literal));
      s.emit(generator_polynomial_text(s.groth(), p),
             {{"command", "groth poly"}, {"generators", generator_polynomial_json(s.groth(), p)}});
      return kExitOk;
    };
  });

  auto* xbasis = groth->add_subcommand("xbasis", "X_lam in the Z basis (needs the unit in the basis)");
  xbasis->add_option("key", args.literal, "Key such as 'Z{U:[2]}'")->required();
  xbasis->callback([&] {
    action = [&] {
      Multipartition key = parse_key(s.ring(), args.literal);
      GrothElement x = s.groth().x_basis_element(key);
      s.emit("X" + to_string(key, s.ring().labels()) + " = " + to_string(x),
             {{"command", "groth xbasis"}, {"terms", element_json(x)}});
      return kExitOk;
    };
  });
}

void add_verify_command(CLI::App& app, Session& s, Args& args, std::function<int()>& action) {
  auto* verify = app.add_subcommand("verify", "Run an invariant suite");
  std::vector<std::string> choices = suite_names();
  choices.push_back("all");
  verify->add_option("suite", args.suite, "Suite name")->required()->check(CLI::IsMember(choices));
  verify->callback([&] {
    action = [&] {
      const Options& o = s.options();
      SuiteReport report = run_suite(args.suite, s.ring(), o.degree, o.seed);
      const std::string name = s.ring_name();
      s.out() << (o.json ? render_json(report, name, o.degree, o.seed) : render_text(report, name, o.degree, o.seed));
      return report.passed() ? kExitOk : kExitFailed;
    };
  });
}

void add_witt_commands(CLI::App& app, Session& s, Args& args, std::function<int()>& action) {
  auto* witt = app.add_subcommand("witt", "Big Witt vector arithmetic over Z")->require_subcommand(1);
  for (const char* name : {"add", "mul"}) {
    auto* cmd = witt->add_subcommand(name, std::string(name) == "add" ? "Witt sum" : "Witt product");
    cmd->add_option("--a", args.a, "Components a_1,a_2,...")->required();
    cmd->add_option("--b", args.b, "Components b_1,b_2,...")->required();
    cmd->add_option("--length", args.length, "Truncation length; missing components are 0")->check(CLI::PositiveNumber);
    const bool add = std::string(name) == "add";
    cmd->callback([&s, &args, &action, add] {
      action = [&s, &args, add] {
        int len = args.length > 0 ? args.length : std::max(parse_witt(args.a).length(), parse_witt(args.b).length());
        auto x = padded_witt(args.a, len), y = padded_witt(args.b, len);
        auto r = add ? witt_add(x, y) : witt_mul(x, y);
        json comps = json::array();
        for (const auto& c : r.a) comps.push_back(c.get_str());
        if (s.options().json) {
          json j{{"command", add ? "witt add" : "witt mul"}, {"result", comps}};
          s.out() << j.dump(2) << "\n";
        } else {
          s.out() << to_string(r) << "\n";
        }
        return kExitOk;
      };
    });
  }
}

void add_hopf_commands(CLI::App& app, Session& s, Args& args, std::function<int()>& action) {
  auto* hopf = app.add_subcommand("hopf", "Hopf structure on the Grothendieck ring")->require_subcommand(1);
  auto* delta = hopf->add_subcommand("delta", "Comultiplication");
  delta->add_option("--elem", args.elem, "Element literal")->required();
  delta->callback([&] {
    action = [&] {
      TensorGrothElement d = comultiply(s.element(args.elem));
      s.emit(to_string(d), {{"command", "hopf delta"}, {"terms", tensor_json(d)}});
      return kExitOk;
    };
  });
  auto* anti = hopf->add_subcommand("antipode", "Antipode");
  anti->add_option("--elem", args.elem, "Element literal")->required();
  anti->callback([&] {
    action = [&] {
      GrothElement x = antipode(s.pbw(), s.element(args.elem));
      s.emit(to_string(x), {{"command", "hopf antipode"}, {"terms", element_json(x)}});
      return kExitOk;
    };
  });
  auto* eps = hopf->add_subcommand("counit", "Counit");
  eps->add_option("--elem", args.elem, "Element literal")->required();
  eps->callback([&] {
    action = [&] {
      Rational c = counit(s.element(args.elem));
      s.emit(to_string(c), {{"command", "hopf counit"}, {"value", to_string(c)}});
      return kExitOk;
    };
  });
}

void add_law_command(CLI::App& app, Session& s, Args&, std::function<int()>& action) {
  auto* law = app.add_subcommand("law", "Formal group law")->require_subcommand(1);
  law->add_subcommand("dump", "Print F_{i,U} up to weighted degree D")->callback([&] {
    action = [&] {
      GroupLaw f = formal_group_law(s.ring(), s.options().degree);
      json comps = json::array();
      for (const auto& [k, p] : f.components())
        comps.push_back({{"component", "e" + std::to_string(k.first) + "(" + f.labels()[k.second] + ")"},
                         {"polynomial", to_string(p, f.labels())}});
      std::string text = dump(f);
      if (!text.empty() && text.back() == '\n') text.pop_back();
      s.emit(text, {{"command", "law dump"}, {"degree", f.degree()}, {"components", comps}});
      return kExitOk;
    };
  });
}

void add_oracle_commands(CLI::App& app, Session& s, Args& args, std::function<int()>& action) {
  auto* oracle = app.add_subcommand("oracle", "The rational PBW model")->require_subcommand(1);
  auto* z = oracle->add_subcommand("z", "An element written in the normal-ordered T_l(U) basis");
  z->add_option("element", args.literal, "Element literal")->required();
  z->callback([&] {
    action = [&] {
      PbwElement x = to_pbw(s.pbw(), s.element(args.literal));
      s.emit(s.pbw().format(x), {{"command", "oracle z"}, {"pbw", s.pbw().format(x)}});
      return kExitOk;
    };
  });
  auto* mul = oracle->add_subcommand("mul", "Multiply through the PBW model");
  mul->add_option("factors", args.factors, "Element literals")->required()->expected(1, -1);
  mul->callback([&] {
    action = [&] {
      PbwElement p = to_pbw(s.pbw(), s.element(args.factors.front()));
      for (std::size_t i = 1; i < args.factors.size(); ++i) p = p * to_pbw(s.pbw(), s.element(args.factors[i]));
      GrothElement x = s.pbw().to_z_basis(p);
      if (!x.is_integral()) throw IntegralityError("oracle product is not integral: " + to_string(x));
      s.emit(to_string(x), {{"command", "oracle mul"}, {"terms", element_json(x)}});
      return kExitOk;
    };
  });
}

}  // namespace

int run_cli(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Grothendieck rings of wreath products: exact computations and invariant checks", "wreath"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--ring", opt.ring, "Ring config path or builtin:NAME (integers, zc2, mat2, golden, cyclic:N, matrix:N)");
  app.add_option("--degree", opt.degree, "Truncation degree D")->check(CLI::PositiveNumber);
  app.add_flag("--json", opt.json, "JSON output with sorted keys");
  app.add_option("--seed", opt.seed, "Seed for randomized checks");

  Session session(opt, out);
  Args cli_args;
  std::function<int()> action;
  add_ring_commands(app, session, cli_args, action);
  add_groth_commands(app, session, cli_args, action);
  add_verify_command(app, session, cli_args, action);
  add_witt_commands(app, session, cli_args, action);
  add_hopf_commands(app, session, cli_args, action);
  add_law_command(app, session, cli_args, action);
  add_oracle_commands(app, session, cli_args, action);

  std::vector<std::string> reversed(argv.rbegin(), argv.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }

  try {
    if (!action) {
      err << "error: no command given\n";
      return kExitParse;
    }
    return action();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const MissingDataError& e) {
    err << "missing ring data: " << e.what() << "\n";
    return kExitMissingData;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailed;
  }
}

}  // namespace wreath
