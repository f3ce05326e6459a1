#include "cli.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <optional>

#include "CLI11.hpp"
#include "symf/gallery.hpp"
#include "symf/io.hpp"
#include "symf/oracles.hpp"
#include "symf/tau.hpp"
#include "symf/transform.hpp"

namespace symf::cli {

namespace {

struct Outcome {
  int code = kOk;
  Json doc;
};

using Handler = std::function<Outcome()>;

Json error_doc(const std::string& msg) { return {{"error", msg}}; }

// Shared flag storage; each subcommand binds what it needs.
struct Flags {
  std::string lambda;
  std::string t;
  std::string beta;
  std::string x;
  std::string matrix;
  std::string kind;
  std::string params;
  std::string file;
  std::string window = "-4:4";
  std::string charges = "-1:1";
  std::string field = "gamma";
  std::vector<std::string> assign;
  int max_degree = 4;
  int pad = 0;
  int kmax = 6;
  int cols = 6;
};

std::optional<Rat> opt_rat(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return parse_rat(s);
}

std::map<std::string, Rat> assignments(const Flags& f) {
  std::map<std::string, Rat> out;
  for (const auto& a : f.assign) {
    auto [name, value] = parse_assignment(a);
    out[name] = value;
  }
  if (auto t = opt_rat(f.t)) out[kParamT] = *t;
  if (auto b = opt_rat(f.beta)) out[kParamBeta] = *b;
  return out;
}

RowFiniteMatrix load_matrix(const Flags& f) {
  if (!f.matrix.empty()) return matrix_from_json(read_json_file(f.matrix));
  if (f.kind.empty()) throw ParseError("either --matrix or --kind is required");
  Json spec = {{"kind", f.kind}};
  if (!f.params.empty()) spec["params"] = parse_json_text(f.params);
  return matrix_from_json(spec);
}

FieldKind gamma_kind(const Flags& f) {
  if (auto t = opt_rat(f.t)) return FieldKind::gamma_plus_at(*t);
  return FieldKind::gamma_plus();
}

std::vector<SymFun> basis(int degree, bool odd) {
  std::vector<SymFun> out;
  for (int d = 0; d <= degree; ++d)
    for (const auto& mu : odd ? odd_partitions_of(d) : partitions_of(d)) out.push_back(SymFun::p(mu));
  return out;
}

Outcome relations(const Flags& f) {
  auto [lo, hi] = parse_range(f.window);
  if (f.max_degree < 0) throw ParseError("--max-degree must be non-negative");
  long checked = 0;
  auto witness = [&](const char* rel, int a, int b, const SymFun& v, std::optional<int> charge) {
    Json w = {{"relation", rel}, {"a", a}, {"b", b}, {"vector", symfun_to_json(v)}};
    if (charge) w["charge"] = *charge;
    return Outcome{kFalsified, {{"field", f.field}, {"ok", false}, {"witness", w}}};
  };
  if (f.field == "gamma") {
    for (const auto& v : basis(f.max_degree, false))
      for (int a = lo; a <= hi; ++a)
        for (int b = lo; b <= hi; ++b) {
          if (!check_gamma_gamma(a, b, v)) return witness("gamma-gamma", a, b, v, std::nullopt);
          if (!check_gamma_cross(a, b, v)) return witness("gamma-cross", a, b, v, std::nullopt);
          checked += 2;
        }
  } else if (f.field == "charged") {
    auto [clo, chi] = parse_range(f.charges);
    for (const auto& v : basis(f.max_degree, false))
      for (int c = clo; c <= chi; ++c)
        for (int r = lo; r <= hi; ++r)
          for (int s = lo; s <= hi; ++s) {
            if (!check_charged_relations(r, s, {c, v})) return witness("charged", r, s, v, c);
            ++checked;
          }
  } else if (f.field == "neutral") {
    for (const auto& v : basis(f.max_degree, true))
      for (int m = lo; m <= hi; ++m)
        for (int n = lo; n <= hi; ++n) {
          if (!check_neutral_relations(m, n, v)) return witness("neutral", m, n, v, std::nullopt);
          ++checked;
        }
  } else {
    throw ParseError("--field must be gamma, charged or neutral");
  }
  return {kOk, {{"field", f.field}, {"ok", true}, {"checked", checked}}};
}

Outcome verify(const Flags& f, bool bkp) {
  Json doc = read_json_file(f.file);
  if (f.pad < 0) throw ParseError("--pad must be non-negative");
  TensorElt res;
  if (bkp) {
    ChargedState s = state_from_json(doc);
    if (s.charge != 0) throw ParseError("BKP tau must have charge 0");
    res = bkp_residue(s.body, f.pad);
  } else {
    res = kp_residue(state_from_json(doc), f.pad);
  }
  if (res.is_zero()) return {kOk, {{"tau", true}}};
  auto first = *res.first();
  TensorElt one(TensorElt::Map{{first.first, first.second}});
  return {kFalsified, {{"tau", false}, {"first", tensor_to_json(one)["terms"][0]}, {"residue", tensor_to_json(res)}}};
}

Outcome oracle(const std::string& name, const Flags& f) {
  EvalPoint pt;
  pt.xs = parse_rat_list(f.x);
  pt.params = assignments(f);
  const IntVec lam = parse_intvec(f.lambda);
  Rat v;
  if (name == "hl-eval") {
    v = hl_symmetrized_eval(lam, pt);
  } else if (name == "schur-tableaux") {
    v = schur_tableaux_eval(Partition(lam), pt);
  } else if (name == "schurq-pf") {
    v = schurq_pfaffian_eval(Partition(lam), pt);
  } else if (name == "grothendieck-alt") {
    v = grothendieck_alternant_eval(lam, pt);
  } else if (name == "transformed-eval") {
    int top = 0;
    for (int part : lam) top = std::max(top, part);
    PolySeq seq = poly_seq(load_matrix(f), top);
    if (!seq.satisfies_shape()) throw ParseError("matrix does not give f_0 = 1, f_k(0) = 0 polynomials");
    v = transformed_symmetrized_eval(seq.f, lam, pt);
  } else {
    throw ParseError("unknown oracle '" + name + "'");
  }
  return {kOk, {{"value", rat_to_string(v)}}};
}

Outcome eval(const Flags& f) {
  SymFun fun = state_from_json(read_json_file(f.file)).body;
  CoefPoly c = evaluate_symbolic(fun, parse_rat_list(f.x));
  for (const auto& [name, value] : assignments(f)) c = c.substitute(param_id(name), value);
  if (c.is_constant()) return {kOk, {{"value", rat_to_string(c.constant())}}};
  return {kOk, {{"coef", coef_to_json(c)}}};
}

Outcome gallery(const Flags& f) {
  RowFiniteMatrix a = load_matrix(f);
  auto [lo, hi] = parse_range(f.window);
  Json doc = {{"matrix", matrix_window_to_json(a, lo, hi, f.cols)}};
  if (const RowFiniteMatrix* inv = a.inverse()) doc["inverse"] = matrix_window_to_json(*inv, lo, hi, f.cols);
  if (f.kmax < 0) throw ParseError("--kmax must be non-negative");
  PolySeq seq = poly_seq(a, f.kmax);
  Json fs = Json::array();
  for (const auto& poly : seq.f) {
    Json coeffs = Json::array();
    for (const auto& c : poly) coeffs.push_back(coef_to_json(c));
    fs.push_back(coeffs);
  }
  doc["f"] = fs;
  doc["shape_ok"] = seq.satisfies_shape();
  return {kOk, doc};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out) {
  CLI::App app{"Exact Hall-Littlewood vertex operators and transformed families", "symf"};
  app.require_subcommand(1);
  Flags f;
  Handler handler;

  auto lambda_opt = [&](CLI::App* c, bool required = true) {
    auto* o = c->add_option("--lambda", f.lambda, "comma-separated integers");
    if (required) o->required();
  };
  auto t_opt = [&](CLI::App* c) { c->add_option("--t", f.t, "rational value of t"); };
  auto matrix_opts = [&](CLI::App* c) {
    c->add_option("--matrix", f.matrix, "matrix spec file");
    c->add_option("--kind", f.kind, "builder kind instead of a file");
    c->add_option("--params", f.params, "builder params as JSON");
  };
  auto emit = [](SymFun s) { return Outcome{kOk, symfun_to_json(s)}; };

  auto* hl = app.add_subcommand("hl", "F_lambda");
  lambda_opt(hl);
  t_opt(hl);
  hl->callback([&] {
    handler = [&] { return emit(iterate_field(gamma_kind(f), parse_intvec(f.lambda))); };
  });

  auto* schur = app.add_subcommand("schur", "Jacobi-Trudi determinant det[h_{l_i-i+j}]");
  lambda_opt(schur);
  schur->callback([&] { handler = [&] { return emit(schur_jt(parse_intvec(f.lambda))); }; });

  auto* schurq = app.add_subcommand("schurq", "q_lambda = F_lambda at t = -1");
  lambda_opt(schurq);
  schurq->callback([&] {
    handler = [&] { return emit(iterate_field(FieldKind::gamma_plus_at(Rat(-1)), parse_intvec(f.lambda))); };
  });

  auto* transform = app.add_subcommand("transform", "transformed family F~_lambda");
  lambda_opt(transform);
  t_opt(transform);
  matrix_opts(transform);
  transform->callback([&] {
    handler = [&] { return emit(transformed_family(load_matrix(f), parse_intvec(f.lambda), gamma_kind(f))); };
  });

  auto* jt = app.add_subcommand("jt", "det[h~_{l_i; i-j}]");
  lambda_opt(jt);
  matrix_opts(jt);
  jt->callback([&] { handler = [&] { return emit(jt_transformed(load_matrix(f), parse_intvec(f.lambda))); }; });

  auto* pf = app.add_subcommand("pf", "Pfaffian of transformed q_{k,r}");
  lambda_opt(pf);
  matrix_opts(pf);
  pf->callback([&] { handler = [&] { return emit(pf_transformed(load_matrix(f), parse_intvec(f.lambda))); }; });

  auto* ver = app.add_subcommand("verify", "bilinear tau-function identities");
  ver->require_subcommand(1);
  for (const char* which : {"kp", "bkp"}) {
    auto* sub = ver->add_subcommand(which, std::string(which) + " identity");
    sub->add_option("--tau-file", f.file, "SymFun or ChargedState JSON")->required();
    sub->add_option("--pad", f.pad, "extra summation window");
    const bool bkp = std::string(which) == "bkp";
    sub->callback([&, bkp] { handler = [&, bkp] { return verify(f, bkp); }; });
  }

  auto* rel = app.add_subcommand("relations", "field relation grid");
  rel->add_option("--field", f.field, "gamma, charged or neutral");
  rel->add_option("--window", f.window, "lo:hi");
  rel->add_option("--max-degree", f.max_degree, "largest p-degree of test vectors");
  rel->add_option("--charges", f.charges, "lo:hi charges for charged fermions");
  rel->callback([&] { handler = [&] { return relations(f); }; });

  auto* orc = app.add_subcommand("oracle", "evaluation oracles");
  std::string oracle_name;
  orc->add_option("name", oracle_name, "hl-eval, schur-tableaux, schurq-pf, grothendieck-alt, transformed-eval")
      ->required();
  lambda_opt(orc);
  t_opt(orc);
  orc->add_option("--beta", f.beta, "rational value of beta");
  orc->add_option("--x", f.x, "comma-separated rationals")->required();
  orc->add_option("--assign", f.assign, "name=value");
  matrix_opts(orc);
  orc->callback([&] { handler = [&] { return oracle(oracle_name, f); }; });

  auto* gal = app.add_subcommand("gallery", "matrix window, inverse and f_k");
  matrix_opts(gal);
  gal->add_option("--window", f.window, "rows lo:hi");
  gal->add_option("--cols", f.cols, "largest column shown");
  gal->add_option("--kmax", f.kmax, "largest k for f_k");
  gal->callback([&] { handler = [&] { return gallery(f); }; });

  auto* ev = app.add_subcommand("eval", "evaluate a SymFun at rational points");
  ev->add_option("--file", f.file, "SymFun JSON")->required();
  ev->add_option("--x", f.x, "comma-separated rationals");
  ev->add_option("--assign", f.assign, "name=value");
  ev->callback([&] { handler = [&] { return eval(f); }; });

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    out << error_doc(e.what()).dump() << "\n";
    return kUsage;
  }
  try {
    Outcome o = handler();
    out << o.doc.dump() << "\n";
    return o.code;
  } catch (const std::exception& e) {
    out << error_doc(e.what()).dump() << "\n";
    return kUsage;
  }
}

}  // namespace symf::cli
