// Command-line front end: every library computation as a subcommand with
// pretty, CSV, or JSON output. Exit codes: 0 success, 1 domain errors
// (violated preconditions, exceeded caps), 2 parse or I/O errors.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bicomm/bicomm.hpp"

namespace {

using namespace bicomm;

struct Range {
  int lo = 0, hi = 0;
};

Range parse_range(const std::string& s) {
  auto parse_int = [&](const std::string& part) {
    if (part.empty()) throw ParseError("empty bound in range: " + s);
    for (char c : part) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw ParseError("malformed range: " + s);
      }
    }
    long v = std::stol(part);
    if (v < 1 || v > 1000) throw ParseError("range bound out of range: " + part);
    return static_cast<int>(v);
  };
  std::size_t dots = s.find("..");
  Range r;
  if (dots == std::string::npos) {
    r.lo = r.hi = parse_int(s);
  } else {
    r.lo = parse_int(s.substr(0, dots));
    r.hi = parse_int(s.substr(dots + 2));
  }
  if (r.lo > r.hi) throw ParseError("empty range: " + s);
  return r;
}

std::string param_namer(const StructureAlgebra& a, VarRef v) {
  int m = a.dim();
  int var = (v.index - 1) / m + 1;
  int b = (v.index - 1) % m + 1;
  return "c" + std::to_string(var) + "_" + std::to_string(b);
}

// The number of multilinear normal words of degree n, the direct route to
// the codimension of the variety of all bicommutative algebras.
Integer multilinear_count(int n) {
  if (n == 1) return 1;
  return Integer(static_cast<long>(multilinear_basis(n).size()));
}

struct Options {
  std::string format = "pretty";
  std::optional<int> cap;
  unsigned seed = 1;

  int cap_or(int fallback) const { return cap.value_or(fallback); }
};

void emit(const ReportTable& t, const Options& opt) { std::cout << render(t, opt.format); }

ReportTable codim_table(const Options& opt, const std::string& variety,
                        const std::string& algebra_file, const std::string& nrange) {
  Range r = parse_range(nrange);
  ReportTable t;
  t.command = "codim";
  t.parameters.emplace_back("n", nrange);
  if (!algebra_file.empty()) {
    t.parameters.emplace_back("algebra", algebra_file);
    StructureAlgebra a = load_algebra_file(algebra_file);
    t.headers = {"n", "codim"};
    int cap = opt.cap_or(kDefaultEvaluationCap);
    for (int n = r.lo; n <= r.hi; ++n) {
      t.add_row({std::to_string(n), codimension(a, n, cap).get_str()});
    }
    return t;
  }
  if (variety == "B") {
    t.parameters.emplace_back("variety", variety);
    int cap = opt.cap_or(kDefaultCombinatoricsCap);
    t.headers = {"n", "codim", "sum_m_d"};
    for (int n = r.lo; n <= r.hi; ++n) {
      if (n > cap) throw DomainError("n exceeds the cap " + std::to_string(cap));
      t.add_row({std::to_string(n), multilinear_count(n).get_str(), codimension(n).get_str()});
    }
    return t;
  }
  if (variety.rfind("right-nilpotent:", 0) == 0) {
    t.parameters.emplace_back("variety", variety);
    int k = parse_range(variety.substr(16)).lo;
    int cap = opt.cap_or(kDefaultCombinatoricsCap);
    t.headers = {"n", "codim"};
    for (int n = r.lo; n <= r.hi; ++n) {
      if (n > cap) throw DomainError("n exceeds the cap " + std::to_string(cap));
      t.add_row({std::to_string(n), right_nilpotent_codimension(k, n).get_str()});
    }
    return t;
  }
  throw ParseError("unknown variety: " + variety + " (expected B or right-nilpotent:K)");
}

ReportTable cocharacter_table(const Options& opt, const std::string& variety,
                              const std::string& algebra_file, int n, bool sample) {
  ReportTable t;
  t.command = "cocharacter";
  t.parameters.emplace_back("n", std::to_string(n));
  t.headers = {"lambda1", "lambda2", "multiplicity", "degree", "product"};
  Integer total = 0;
  if (!algebra_file.empty()) {
    t.parameters.emplace_back("algebra", algebra_file);
    StructureAlgebra a = load_algebra_file(algebra_file);
    int cap = opt.cap_or(kDefaultEvaluationCap);
    if (n < 2) throw DomainError("cocharacter rows for an algebra need n >= 2");
    for (const Partition2& la : two_row_partitions(n)) {
      Integer m = sample ? cocharacter_multiplicity_lower_bound(a, la, opt.seed)
                         : cocharacter_multiplicity(a, la, cap);
      if (m == 0) continue;
      Integer d = hook_degree(la);
      Integer prod = m * d;
      total += prod;
      t.add_row({std::to_string(la.l1), std::to_string(la.l2), m.get_str(), d.get_str(),
                 prod.get_str()});
    }
    if (sample) t.parameters.emplace_back("sampled", "lower-bound estimate, seed " + std::to_string(opt.seed));
  } else if (variety == "B") {
    t.parameters.emplace_back("variety", variety);
    int cap = opt.cap_or(kDefaultCombinatoricsCap);
    if (n > cap) throw DomainError("n exceeds the cap " + std::to_string(cap));
    for (const CocharacterRow& row : cocharacter_rows(n)) {
      Integer prod = row.multiplicity * row.degree;
      total += prod;
      t.add_row({std::to_string(row.shape.l1), std::to_string(row.shape.l2),
                 row.multiplicity.get_str(), row.degree.get_str(), prod.get_str()});
    }
  } else {
    throw ParseError("unknown cocharacter target: " + variety);
  }
  t.add_row({"total", "", "", "", total.get_str()});
  return t;
}

ReportTable classify_table(const std::string& pi_text, const std::string& rho_text) {
  TwoDimParams p{Rational::parse(pi_text), Rational::parse(rho_text)};
  Classification cls = classify_two_dim(p);
  bool ok = verify_isomorphism(make_two_dim(p), make_two_dim(cls.canonical), cls.witness);
  ReportTable t;
  t.command = "classify2d";
  t.parameters.emplace_back("pi", p.pi.str());
  t.parameters.emplace_back("rho", p.rho.str());
  t.headers = {"pi", "rho", "class", "kind", "xi", "eta", "verified"};
  t.add_row({p.pi.str(), p.rho.str(),
             "(" + cls.canonical.pi.str() + "," + cls.canonical.rho.str() + ")",
             cls.witness.kind(), cls.witness.xi.str(), cls.witness.eta.str(),
             ok ? "true" : "false"});
  return t;
}

ReportTable check_table(const Options& opt, const std::string& mode, const std::string& expr,
                        const std::string& algebra_file) {
  ReportTable t;
  t.command = "check";
  t.parameters.emplace_back("mode", mode);
  t.headers = {"input", "verdict", "witness"};
  if (mode == "hwv") {
    if (expr.empty()) throw ParseError("mode hwv needs an expression");
    TermSum sum = parse_term_sum(expr);
    int d = sum.max_index();
    Element e(d);
    for (const auto& [c, term] : sum.terms) e += psi(term, d) * c;
    std::string witness;
    bool ok = true;
    for (int i = 1; i <= d && ok; ++i) {
      for (int j = i + 1; j <= d && ok; ++j) {
        Element img = derivation_x(e, j, i);
        if (!img.is_zero()) {
          ok = false;
          witness = "derivation x" + std::to_string(j) + "->x" + std::to_string(i) +
                    " gives " + img.str();
        }
      }
    }
    if (!e.multidegree()) throw DomainError("highest-weight test needs a multihomogeneous input");
    t.add_row({expr, ok ? "true" : "false", witness});
    return t;
  }
  if (mode == "bicomm-axioms") {
    if (algebra_file.empty()) throw ParseError("mode bicomm-axioms needs --algebra");
    t.parameters.emplace_back("algebra", algebra_file);
    StructureAlgebra a = load_algebra_file(algebra_file);
    std::string witness;
    if (a.violation()) {
      const auto& v = *a.violation();
      const char* id = v[3] == 'R' ? "(a*b)*c = (a*c)*b" : "a*(b*c) = b*(a*c)";
      witness = std::string("fails ") + id + " at (" + a.label(v[0]) + "," + a.label(v[1]) +
                "," + a.label(v[2]) + ")";
    }
    t.add_row({algebra_file, a.bicommutative() ? "true" : "false", witness});
    return t;
  }
  if (mode == "identity-on-algebra") {
    if (expr.empty()) throw ParseError("mode identity-on-algebra needs an expression");
    if (algebra_file.empty()) throw ParseError("mode identity-on-algebra needs --algebra");
    t.parameters.emplace_back("algebra", algebra_file);
    StructureAlgebra a = load_algebra_file(algebra_file);
    TermSum sum = parse_term_sum(expr);
    int nvars = sum.max_index();
    int cap = opt.cap_or(kDefaultEvaluationCap);
    int degree = 0;
    for (const auto& [c, term] : sum.terms) degree = std::max(degree, term.degree());
    if (degree > cap) throw DomainError("degree exceeds the cap " + std::to_string(cap));
    std::vector<std::vector<Poly>> assign;
    for (int v = 1; v <= nvars; ++v) assign.push_back(generic_element(a, v, nvars).coords);
    int pdim = nvars * a.dim();
    std::vector<Poly> value(static_cast<std::size_t>(a.dim()), Poly::zero(pdim));
    for (const auto& [c, term] : sum.terms) {
      std::vector<Poly> tv = evaluate_term(a, term, assign);
      for (std::size_t k = 0; k < value.size(); ++k) value[k] += tv[k] * c;
    }
    std::string witness;
    bool ok = true;
    for (std::size_t k = 0; k < value.size(); ++k) {
      if (!value[k].is_zero()) {
        ok = false;
        witness = "coordinate " + a.label(static_cast<int>(k)) + " evaluates to " +
                  value[k].str([&](VarRef v) { return param_namer(a, v); });
        break;
      }
    }
    t.add_row({expr, ok ? "true" : "false", witness});
    return t;
  }
  throw ParseError("unknown check mode: " + mode);
}

ReportTable consequence_table(const Options& opt, const std::string& kind, int k,
                              const std::string& lambda_text, const std::string& coeff_text) {
  ReportTable t;
  t.command = "consequence";
  t.parameters.emplace_back("kind", kind);
  t.headers = {"step", "operation", "element"};
  if (kind == "collapse") {
    int cap = opt.cap_or(kDefaultCollapseCap);
    if (k > cap) throw DomainError("k exceeds the cap " + std::to_string(cap));
    t.parameters.emplace_back("k", std::to_string(k));
    ConsequenceTrace tr = one_variable_collapse_trace(k);
    t.add_row({"0", "start", tr.start.str()});
    for (std::size_t i = 0; i < tr.steps.size(); ++i) {
      t.add_row({std::to_string(i + 1), tr.steps[i].operation, tr.steps[i].output.str()});
    }
    // Factored closed form, asserted against the expanded computation.
    Poly closed = Poly::monomial(2, Monomial::var(yvar(1)).times(Monomial::var(zvar(1)))).pow(
                      static_cast<unsigned>(k)) *
                  (Poly::var(2, yvar(1)) - Poly::var(2, zvar(1))).pow(static_cast<unsigned>(k)) *
                  Rational(factorial(static_cast<unsigned long>(k)));
    if (tr.end != Element::from_poly(closed)) {
      throw DomainError("collapse result does not match the closed form");
    }
    std::string factored =
        k == 1 ? "y1*z1*(y1-z1)"
               : factorial(static_cast<unsigned long>(k)).get_str() + "*(y1*z1)^" +
                     std::to_string(k) + "*(y1-z1)^" + std::to_string(k);
    t.add_row({"end", "factored", factored});
    return t;
  }
  if (kind == "saturate") {
    if (lambda_text.empty()) throw ParseError("saturate needs --lambda L1,L2");
    std::size_t comma = lambda_text.find(',');
    if (comma == std::string::npos) throw ParseError("--lambda expects L1,L2");
    Range l1 = parse_range(lambda_text.substr(0, comma));
    int l2 = 0;
    {
      const std::string part = lambda_text.substr(comma + 1);
      if (part != "0") l2 = parse_range(part).lo;
    }
    Partition2 la(l1.lo, l2);
    int cap = opt.cap_or(kDefaultCombinatoricsCap);
    if (la.weight() > cap) throw DomainError("weight exceeds the cap " + std::to_string(cap));
    t.parameters.emplace_back("lambda", la.str());
    std::vector<Rational> coeffs(static_cast<std::size_t>(hwv_count(la)), Rational(1));
    if (!coeff_text.empty()) {
      coeffs.clear();
      std::size_t pos = 0;
      while (pos <= coeff_text.size()) {
        std::size_t next = coeff_text.find(',', pos);
        if (next == std::string::npos) next = coeff_text.size();
        coeffs.push_back(Rational::parse(coeff_text.substr(pos, next - pos)));
        pos = next + 1;
      }
      if (coeffs.size() != static_cast<std::size_t>(hwv_count(la))) {
        throw DomainError("expected " + std::to_string(hwv_count(la)) +
                          " coefficients for shape " + la.str());
      }
    }
    std::string coeff_param;
    for (const Rational& c : coeffs) {
      if (!coeff_param.empty()) coeff_param += ",";
      coeff_param += c.str();
    }
    t.parameters.emplace_back("coeffs", coeff_param);
    Element w(2);
    for (int j = hwv_index_min(la); j <= hwv_index_max(la); ++j) {
      w += hwv(HwvSpec(la, j)) * coeffs[static_cast<std::size_t>(j - hwv_index_min(la))];
    }
    ConsequenceTrace tr = saturate_to_rectangular(w, la);
    t.add_row({"0", "start", tr.start.str()});
    for (std::size_t i = 0; i < tr.steps.size(); ++i) {
      t.add_row({std::to_string(i + 1), tr.steps[i].operation, tr.steps[i].output.str()});
    }
    Poly target = skew_invariant().pow(static_cast<unsigned>(la.l1));
    auto factor = proportional_factor(tr.end.higher(), target);
    if (!factor) throw DomainError("saturation did not end at a rectangular power");
    t.add_row({"end", "multiple of (y1*z2-y2*z1)^" + std::to_string(la.l1),
               "coefficient " + factor->str()});
    return t;
  }
  throw ParseError("unknown consequence kind: " + kind);
}

ReportTable basis_table(const Options& opt, int n) {
  int cap = opt.cap_or(kDefaultCombinatoricsCap);
  if (n > cap) throw DomainError("n exceeds the cap " + std::to_string(cap));
  ReportTable t;
  t.command = "basis";
  t.parameters.emplace_back("n", std::to_string(n));
  t.headers = {"index", "monomial", "bracketing"};
  std::vector<Monomial> basis = multilinear_basis(n);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    t.add_row({std::to_string(i + 1), basis[i].str(),
               canonical_term(to_normal_word(basis[i])).str()});
  }
  return t;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations in free bicommutative algebras"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--format", opt.format, "output format: pretty, csv, json")
      ->check(CLI::IsMember({"pretty", "csv", "json"}));
  int cap_value = -1;
  app.add_option("--cap", cap_value, "override the size cap of the invoked computation");
  app.add_option("--seed", opt.seed, "seed for sampling-based estimates");

  std::string variety = "B", algebra_file, nrange = "2..8";
  int n = 4;
  bool sample = false;
  std::string pi_text, rho_text, mode, expr, kind, lambda_text, coeff_text;
  int collapse_k = 2;

  CLI::App* codim = app.add_subcommand("codim", "codimension sequences");
  codim->add_option("--variety", variety, "B or right-nilpotent:K");
  codim->add_option("--algebra", algebra_file, "algebra description file (JSON)");
  codim->add_option("--n", nrange, "degree or range, e.g. 4 or 2..8")->required();

  CLI::App* cochar = app.add_subcommand("cocharacter", "cocharacter rows for one degree");
  cochar->add_option("--variety", variety, "B");
  cochar->add_option("--algebra", algebra_file, "algebra description file (JSON)");
  cochar->add_option("--n", n, "degree")->required();
  cochar->add_flag("--sample", sample, "seeded sampling estimate (lower bound) for algebras");

  CLI::App* classify = app.add_subcommand("classify2d", "classify a two-dimensional member");
  classify->add_option("pi", pi_text, "parameter pi")->required();
  classify->add_option("rho", rho_text, "parameter rho")->required();

  CLI::App* check = app.add_subcommand("check", "verdicts with witnesses");
  check->add_option("--mode", mode, "bicomm-axioms, hwv, or identity-on-algebra")->required();
  check->add_option("--algebra", algebra_file, "algebra description file (JSON)");
  check->add_option("expr", expr, "term expression, e.g. \"(x1*x2) - (x2*x1)\"");

  CLI::App* consequence = app.add_subcommand("consequence", "derivation traces");
  consequence->add_option("--kind", kind, "saturate or collapse")->required();
  consequence->add_option("--k", collapse_k, "collapse exponent");
  consequence->add_option("--lambda", lambda_text, "shape L1,L2 for saturate");
  consequence->add_option("--coeffs", coeff_text, "comma-separated coordinates over the hwv basis");

  CLI::App* basis = app.add_subcommand("basis", "multilinear basis of one degree");
  basis->add_option("--n", n, "degree")->required();

  for (CLI::App* sub : {codim, cochar, classify, check, consequence, basis}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
    if (cap_value >= 0) opt.cap = cap_value;
    if (codim->parsed()) {
      emit(codim_table(opt, codim->count("--algebra") ? "" : variety, algebra_file, nrange), opt);
    } else if (cochar->parsed()) {
      emit(cocharacter_table(opt, cochar->count("--algebra") ? "" : variety, algebra_file, n,
                             sample),
           opt);
    } else if (classify->parsed()) {
      emit(classify_table(pi_text, rho_text), opt);
    } else if (check->parsed()) {
      emit(check_table(opt, mode, expr, algebra_file), opt);
    } else if (consequence->parsed()) {
      emit(consequence_table(opt, kind, collapse_k, lambda_text, coeff_text), opt);
    } else if (basis->parsed()) {
      emit(basis_table(opt, n), opt);
    }
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const bicomm::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const bicomm::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
