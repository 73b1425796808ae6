#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <random>
#include <sstream>

#include "qjfrac/convergence.hpp"
#include "qjfrac/divisor.hpp"
#include "qjfrac/errors.hpp"
#include "qjfrac/oracles.hpp"
#include "qjfrac/serialize.hpp"
#include "qjfrac/stirling.hpp"

namespace qjfrac::cli {

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;

struct Usage : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

json schema(const std::string& name) { return {{"schema", "qjfrac." + name + "/1"}}; }

json series_json(const QSeries& s) {
  json a = json::array();
  for (const auto& c : s.coeffs()) a.push_back(to_string(c));
  return a;
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

JFractionSpec random_spec(std::mt19937& rng, int h) {
  std::uniform_int_distribution<long> num(-7, 7), den(1, 5);
  auto pick = [&] {
    long n = 0;
    while (n == 0) n = num(rng);
    return QRatFn(make_rational(n, den(rng)));
  };
  std::vector<QRatFn> c, ab;
  for (int i = 1; i <= h + 1; ++i) c.push_back(pick());
  for (int i = 2; i <= h + 1; ++i) ab.push_back(pick());
  return JFractionSpec::tabulated("random", c, ab);
}

JFractionSpec preset_or_throw(const std::string& name) {
  auto s = named_preset(name);
  if (!s) {
    std::string all;
    for (const auto& n : preset_names()) all += (all.empty() ? "" : ", ") + n;
    throw Usage("unknown preset '" + name + "' (known: " + all + ")");
  }
  return *s;
}

// ---- jfrac expand ---------------------------------------------------------

struct ExpandOpts {
  std::string preset;
  std::string a, b;
  bool printed = false;
  int h = 4;
  int zorder = 8;
  std::string format = "json";
};

int jfrac_expand(const ExpandOpts& o, std::ostream& out) {
  JFractionSpec spec;
  std::function<QRatFn(int)> target;
  const QRatFn q = QRatFn::q();
  auto pochhammer_target = [](QRatFn a, QRatFn b) {
    return [a, b](int n) { return oracle::q_pochhammer(a, n) / oracle::q_pochhammer(b, n); };
  };
  if (!o.preset.empty()) {
    if (!o.a.empty() || !o.b.empty()) throw Usage("--preset excludes --a/--b");
    spec = preset_or_throw(o.preset);
    if (o.preset == "qq2" || o.preset == "qq2_printed") {
      target = pochhammer_target(q, q * q);
    } else if (o.preset == "qq") {
      target = pochhammer_target(q, q);
    } else if (auto row = table1_row_from_name(o.preset)) {
      const ZSeries t = table1_target(*row, {}, static_cast<std::size_t>(o.zorder));
      target = [t](int n) { return t[n]; };
    }
  } else {
    if (o.a.empty() || o.b.empty()) throw Usage("give --preset or both --a and --b");
    const QRatFn a = parse_qratfn(o.a), b = parse_qratfn(o.b);
    spec = pochhammer_spec({a, b}, o.printed ? CForm::as_printed : CForm::corrected);
    target = pochhammer_target(a, b);
  }
  const ConvergentPair pair = convergents(spec, o.h);
  const ZSeries coeffs = convergent_coefficients(pair, static_cast<std::size_t>(o.zorder));

  bool ok = true;
  json rows = json::array();
  for (int n = 0; n < o.zorder; ++n) {
    json r{{"n", n}, {"value", to_string(coeffs[n])}, {"window", to_string(window_of(n, o.h))}};
    if (target) {
      const bool m = coeffs[n] == target(n);
      r["target"] = to_string(target(n));
      r["matches"] = m;
      if (n < o.h && !m) ok = false;
    }
    rows.push_back(std::move(r));
  }
  if (o.format == "pretty") {
    out << "P_" << o.h << " = " << to_string(pair.P) << "\n";
    out << "Q_" << o.h << " = " << to_string(pair.Q) << "\n";
    for (const auto& r : rows) {
      out << "[z^" << r["n"].get<int>() << "] " << r["value"].get<std::string>();
      if (r.contains("matches")) out << (r["matches"].get<bool>() ? "  ok" : "  MISMATCH");
      out << "\n";
    }
  } else {
    json j = schema("jfrac.expand");
    j["spec"] = spec_to_json(spec, o.h);
    j["h"] = o.h;
    j["P"] = to_string(pair.P);
    j["Q"] = to_string(pair.Q);
    j["coefficients"] = rows;
    j["ok"] = ok;
    emit(out, j);
  }
  return ok ? kOk : kMismatch;
}

// ---- jfrac invert ---------------------------------------------------------

int jfrac_invert(const std::string& name, int depth, const std::string& format, std::ostream& out) {
  if (depth < 1) throw Usage("--depth must be >= 1");
  auto t = named_target(name, static_cast<std::size_t>(2 * depth));
  if (!t) throw Usage("unknown target '" + name + "' (known: one_over_1mqn, n_over_1mqn, n2_over_1mqn)");
  const Inversion inv = series_to_jfraction(*t, depth);
  if (format == "pretty") {
    for (std::size_t i = 0; i < inv.c.size(); ++i) {
      out << "c" << i + 1 << " = " << to_factored_string(inv.c[i]) << "\n";
    }
    for (std::size_t i = 0; i < inv.ab.size(); ++i) {
      out << "ab" << i + 2 << " = " << to_factored_string(inv.ab[i]) << "\n";
    }
    if (inv.terminated) out << "terminated\n";
    return kOk;
  }
  json j = schema("jfrac.invert");
  j["target"] = name;
  j["depth"] = depth;
  json c = json::array(), ab = json::array();
  for (const auto& x : inv.c) c.push_back(to_factored_string(x));
  for (const auto& x : inv.ab) ab.push_back(to_factored_string(x));
  j["c"] = c;
  j["ab"] = ab;
  j["terminated"] = inv.terminated;
  emit(out, j);
  return kOk;
}

// ---- verify ---------------------------------------------------------------

struct VerifyOpts {
  int h = 5;
  std::string spec = "qq2";
  unsigned seed = 1;
  int count = 3;
};

int verify_lemmas(const VerifyOpts& o, std::ostream& out) {
  if (o.h < 2) throw Usage("--h must be >= 2");
  std::vector<std::pair<JFractionSpec, bool>> specs;
  if (o.spec == "random") {
    std::mt19937 rng(o.seed);
    for (int i = 0; i < o.count; ++i) specs.emplace_back(random_spec(rng, o.h + 1), false);
  } else {
    specs.emplace_back(preset_or_throw(o.spec), o.spec == "qq2");
  }
  bool ok = true;
  json results = json::array();
  for (const auto& [spec, family] : specs) {
    for (int h = 2; h <= o.h; ++h) {
      const Report rep = verify_all_lemmas(spec, h, family);
      ok = ok && rep.ok();
      results.push_back({{"spec", spec.name}, {"h", h}, {"ok", rep.ok()}, {"rows", to_json(rep)}});
    }
  }
  json j = schema("verify.lemmas");
  j["results"] = results;
  j["ok"] = ok;
  emit(out, j);
  return ok ? kOk : kMismatch;
}

int verify_conjectures(int h, std::ostream& out) {
  if (h < 2) throw Usage("--h must be >= 2");
  const JFractionSpec spec = preset_or_throw("qq2");
  json j = schema("verify.conjectures");
  j["h"] = h;
  j["claim"] = to_json(verify_claim_relations(spec, h));
  j["newton_girard"] = to_json(newton_girard_report(spec, h));
  j["first_column"] = to_json(first_column_formula_check(h));
  json td = json::array();
  for (int i = 1; i <= std::min(h - 1, 2); ++i) td.push_back(to_json(tilde_D0j(spec, i)));
  j["tilde_D"] = td;
  json sc = json::array();
  for (int alpha : {1, 2}) sc.push_back(to_json(sigma_special_case_check(alpha, h)));
  j["special_cases"] = sc;
  emit(out, j);
  return kOk;
}

// ---- divisor --------------------------------------------------------------

struct TableOpts {
  int alpha = 0;
  int h = 4;
  int order = 8;
  long modulus = 0;
  bool cumulative = false;
  std::string format = "json";
};

int divisor_table_cmd(const TableOpts& o, std::ostream& out) {
  DivisorRequest req{o.alpha, o.h, static_cast<std::size_t>(o.order), std::nullopt};
  if (o.modulus) req.modulus = o.modulus;
  const auto rows = divisor_table(req, o.cumulative);
  if (o.format == "csv") {
    out << "n,value,certified,window" << (o.modulus ? ",residue" : "") << "\n";
    for (const auto& r : rows) {
      out << r.n << "," << to_string(r.value) << "," << (r.window == Window::certified ? "true" : "false")
          << "," << to_string(r.window);
      if (o.modulus) out << "," << (r.residue ? std::to_string(*r.residue) : std::string("NA"));
      out << "\n";
    }
    return kOk;
  }
  if (o.format == "pretty") {
    for (const auto& r : rows) {
      out << r.n << "\t" << to_string(r.value);
      if (o.modulus) out << "\t" << (r.residue ? std::to_string(*r.residue) : std::string("NA"));
      out << "\t" << to_string(r.window) << "\n";
    }
    return kOk;
  }
  json j = schema("divisor.table");
  j["alpha"] = o.alpha;
  j["h"] = o.h;
  j["order"] = o.order;
  j["cumulative"] = o.cumulative;
  j["modulus"] = o.modulus ? json(o.modulus) : json(nullptr);
  json a = json::array();
  for (const auto& r : rows) a.push_back(to_json(r));
  j["rows"] = a;
  emit(out, j);
  return kOk;
}

int divisor_approximant(int alpha, int h, bool factored, std::ostream& out) {
  const QRatFn f = rational_approximant(alpha, h);
  json j = schema("divisor.approximant");
  j["alpha"] = alpha;
  j["h"] = h;
  j["value"] = factored ? to_factored_string(f) : to_string(f);
  emit(out, j);
  return kOk;
}

// ---- converge -------------------------------------------------------------

int converge_probe(const std::string& qs, const std::string& zs, int hmax, const std::string& format,
                   std::ostream& out) {
  if (hmax < 1) throw Usage("--hmax must be >= 1");
  const ProbeReport r = numeric_convergence_probe(Complex::parse(qs), Complex::parse(zs), hmax);
  if (format == "csv") {
    out << "h,gap,value,overflow\n";
    for (const auto& x : r.rows) {
      out << x.h << "," << (x.overflow ? "NA" : to_string(x.gap)) << ","
          << (x.overflow ? "NA" : "\"" + to_string(x.value) + "\"") << "," << (x.overflow ? "true" : "false")
          << "\n";
    }
    return kOk;
  }
  json j = schema("converge.probe");
  j.update(to_json(r));
  emit(out, j);
  return kOk;
}

int converge_radius(const std::string& tol, std::ostream& out) {
  Real t;
  try {
    t = Real(tol);
  } catch (const std::exception&) {
    throw Usage("--tol must be a number");
  }
  const Real r = threshold_radius(t);
  json j = schema("converge.radius");
  j["radius"] = to_string(r, 12);
  j["tolerance"] = tol;
  j["precision_bits"] = precision_bits();
  emit(out, j);
  return kOk;
}

int converge_pringsheim(const std::string& qs, int hmax, const std::string& form, std::ostream& out) {
  if (hmax < 2) throw Usage("--hmax must be >= 2");
  const PringsheimForm f = form == "sequences" ? PringsheimForm::sequences : PringsheimForm::displayed;
  json j = schema("converge.pringsheim");
  j.update(to_json(pringsheim_margins(Complex::parse(qs), hmax, f)));
  emit(out, j);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{
      "qjfrac: exact J-fractions in q, divisor-sum generating functions and their checks.\n"
      "Expressions (--a, --b, --x, --z) are rational functions of q built from integers, q,\n"
      "+ - * / ^ and parentheses, e.g. \"q^2\", \"(1-q)/(1+q)\", \"2*q^-1\"."};
  app.name("qjfrac");
  // -h is taken by the depth options.
  app.set_help_flag("--help", "print help and exit");
  app.require_subcommand(1);
  std::string output;
  app.add_option("--output,-o", output, "write to FILE instead of stdout");

  std::function<int(std::ostream&)> action;
  auto bind = [&](CLI::App* sub, std::function<int(std::ostream&)> f) {
    sub->callback([&action, f] { action = f; });
  };

  // jfrac
  auto* jfrac = app.add_subcommand("jfrac", "build or invert J-fractions");
  jfrac->require_subcommand(1);
  ExpandOpts ex;
  auto* expand = jfrac->add_subcommand("expand", "convergents and [z^n] coefficients");
  expand->add_option("--preset", ex.preset, "named parameter set");
  expand->add_option("--a", ex.a, "a as an expression in q");
  expand->add_option("--b", ex.b, "b as an expression in q");
  expand->add_flag("--printed", ex.printed, "use the c_i entries exactly as displayed");
  expand->add_option("--h", ex.h, "depth")->check(CLI::Range(1, 40));
  expand->add_option("--zorder", ex.zorder, "number of z coefficients")->check(CLI::Range(1, 200));
  expand->add_option("--format", ex.format)->check(CLI::IsMember({"json", "pretty"}));
  bind(expand, [&ex](std::ostream& o) { return jfrac_expand(ex, o); });

  std::string target;
  int depth = 3;
  std::string inv_format = "json";
  auto* invert = jfrac->add_subcommand("invert", "c_i and ab_i of a target series");
  invert->add_option("--target", target, "one_over_1mqn, n_over_1mqn or n2_over_1mqn")->required();
  invert->add_option("--depth", depth)->check(CLI::Range(1, 12));
  invert->add_option("--format", inv_format)->check(CLI::IsMember({"json", "pretty"}));
  bind(invert, [&](std::ostream& o) { return jfrac_invert(target, depth, inv_format, o); });

  // verify
  auto* verify = app.add_subcommand("verify", "exact identity checks");
  verify->require_subcommand(1);
  VerifyOpts vo;
  auto* lemmas = verify->add_subcommand("lemmas", "expansion lemmas for h = 2..H");
  lemmas->add_option("--h", vo.h)->check(CLI::Range(2, 8));
  lemmas->add_option("--spec", vo.spec, "preset name or 'random'");
  lemmas->add_option("--seed", vo.seed);
  lemmas->add_option("--count", vo.count, "number of random specs")->check(CLI::Range(1, 100));
  bind(lemmas, [&vo](std::ostream& o) { return verify_lemmas(vo, o); });
  int conj_h = 4;
  auto* conj = verify->add_subcommand("conjectures", "residual reports for displayed formulas under test");
  conj->add_option("--h", conj_h)->check(CLI::Range(2, 6));
  bind(conj, [&conj_h](std::ostream& o) { return verify_conjectures(conj_h, o); });

  // divisor
  auto* divisor = app.add_subcommand("divisor", "divisor-sum series from the (q, q^2) J-fraction");
  divisor->require_subcommand(1);
  TableOpts to;
  auto* table = divisor->add_subcommand("table", "coefficients n = 1 .. order-1");
  table->add_option("--alpha", to.alpha)->check(CLI::Range(0, 8));
  table->add_option("--h", to.h)->check(CLI::Range(2, 12));
  table->add_option("--order", to.order)->check(CLI::Range(2, 400));
  table->add_option("--mod", to.modulus, "reduce modulo P")->check(CLI::Range(2L, 1000000007L));
  table->add_flag("--cumulative", to.cumulative, "partial sums instead of sigma_alpha(n)");
  table->add_option("--format", to.format)->check(CLI::IsMember({"json", "csv", "pretty"}));
  bind(table, [&to](std::ostream& o) { return divisor_table_cmd(to, o); });

  int ap_alpha = 0, ap_h = 3;
  bool factored = false;
  auto* approx = divisor->add_subcommand("approximant", "the rational generating function");
  approx->add_option("--alpha", ap_alpha)->check(CLI::Range(0, 8));
  approx->add_option("--h", ap_h)->check(CLI::Range(2, 10));
  approx->add_flag("--factored", factored);
  bind(approx, [&](std::ostream& o) { return divisor_approximant(ap_alpha, ap_h, factored, o); });

  // converge
  auto* converge = app.add_subcommand("converge", "numeric convergence diagnostics");
  converge->require_subcommand(1);
  std::string pq = "0.15", pz = "0.15", pform = "json";
  int hmax = 20;
  auto* probe = converge->add_subcommand("probe", "|Conv_h - sum| for h = 1..hmax");
  probe->add_option("--q", pq, "RE[,IM]");
  probe->add_option("--z", pz, "RE[,IM]");
  probe->add_option("--hmax", hmax)->check(CLI::Range(1, 2000));
  probe->add_option("--format", pform)->check(CLI::IsMember({"json", "csv"}));
  bind(probe, [&](std::ostream& o) { return converge_probe(pq, pz, hmax, pform, o); });
  std::string tol = "1e-8";
  auto* radius = converge->add_subcommand("radius", "root of the threshold inequality");
  radius->add_option("--tol", tol);
  bind(radius, [&](std::ostream& o) { return converge_radius(tol, o); });
  std::string mq = "0.1", mform = "displayed";
  int mh = 50;
  auto* prings = converge->add_subcommand("pringsheim", "margins |b_h| - |a_h| - 1 with z = q");
  prings->add_option("--q", mq, "RE[,IM]");
  prings->add_option("--hmax", mh)->check(CLI::Range(2, 2000));
  prings->add_option("--form", mform)->check(CLI::IsMember({"displayed", "sequences"}));
  bind(prings, [&](std::ostream& o) { return converge_pringsheim(mq, mh, mform, o); });

  // oracle
  auto* orc = app.add_subcommand("oracle", "brute-force reference values");
  orc->require_subcommand(1);
  int o_alpha = 0;
  long o_n = 1;
  auto* sig = orc->add_subcommand("sigma", "sigma_alpha(n) by trial division");
  sig->add_option("--alpha", o_alpha)->check(CLI::Range(0, 16));
  sig->add_option("--n", o_n)->required()->check(CLI::Range(1L, 1000000000L));
  bind(sig, [&](std::ostream& o) {
    json j = schema("oracle.sigma");
    j["alpha"] = o_alpha;
    j["n"] = o_n;
    j["value"] = oracle::sigma_alpha(o_alpha, o_n).get_str();
    emit(o, j);
    return kOk;
  });
  int l_order = 10;
  auto* lam = orc->add_subcommand("lambert", "sum n^alpha q^n/(1-q^n) truncated");
  lam->add_option("--alpha", o_alpha)->check(CLI::Range(0, 16));
  lam->add_option("--order", l_order)->check(CLI::Range(1, 2000));
  bind(lam, [&](std::ostream& o) {
    json j = schema("oracle.lambert");
    j["alpha"] = o_alpha;
    j["coefficients"] = series_json(oracle::lambert_truncated(o_alpha, static_cast<std::size_t>(l_order)));
    emit(o, j);
    return kOk;
  });
  std::string px = "q";
  int pn = 2;
  auto* poch = orc->add_subcommand("pochhammer", "(x; q)_n");
  poch->add_option("--x", px);
  poch->add_option("--n", pn)->check(CLI::Range(0, 200));
  bind(poch, [&](std::ostream& o) {
    json j = schema("oracle.pochhammer");
    j["x"] = px;
    j["n"] = pn;
    j["value"] = to_factored_string(oracle::q_pochhammer(parse_qratfn(px), pn));
    emit(o, j);
    return kOk;
  });
  int bn = 4, bk = 2;
  auto* qb = orc->add_subcommand("qbinom", "Gaussian binomial (n choose k)_q");
  qb->add_option("--n", bn)->check(CLI::Range(0, 200));
  qb->add_option("--k", bk)->check(CLI::Range(0, 200));
  bind(qb, [&](std::ostream& o) {
    if (bk > bn) throw Usage("--k must not exceed --n");
    json j = schema("oracle.qbinom");
    j["n"] = bn;
    j["k"] = bk;
    j["value"] = to_string(oracle::q_binomial(bn, bk));
    emit(o, j);
    return kOk;
  });
  std::string ba = "q", bz = "q";
  int border = 12;
  auto* bt = orc->add_subcommand("binomial-theorem", "truncated q-binomial theorem");
  bt->add_option("--a", ba);
  bt->add_option("--z", bz);
  bt->add_option("--order", border)->check(CLI::Range(1, 200));
  bind(bt, [&](std::ostream& o) {
    const auto r = oracle::q_binomial_theorem_check(parse_qratfn(ba), parse_qratfn(bz),
                                                    static_cast<std::size_t>(border));
    json j = schema("oracle.binomial_theorem");
    j["a"] = ba;
    j["z"] = bz;
    j["ok"] = r.ok;
    j["sum_side"] = series_json(r.sum_side);
    j["product_side"] = series_json(r.product_side);
    emit(o, j);
    return r.ok ? kOk : kMismatch;
  });

  std::vector<std::string> argv_store = args.empty() ? std::vector<std::string>{"qjfrac"} : args;
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    std::ostringstream buf;
    const int code = action ? action(buf) : kUsage;
    if (output.empty()) {
      out << buf.str();
    } else {
      std::ofstream f(output);
      if (!f) {
        err << "cannot write " << output << "\n";
        return kUsage;
      }
      f << buf.str();
    }
    return code;
  } catch (const Usage& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace qjfrac::cli
