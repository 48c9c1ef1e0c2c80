#include "gstieltjes/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gstieltjes/catalog.hpp"
#include "gstieltjes/errors.hpp"
#include "gstieltjes/piecewise.hpp"
#include "gstieltjes/representations.hpp"
#include "gstieltjes/sequences.hpp"
#include "gstieltjes/vertical.hpp"

namespace gstieltjes::cli {

namespace {

using Json = nlohmann::ordered_json;

// Input that cannot be parsed; distinct from DomainError so it maps to exit code 2.
class ParseFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string a;
  std::string b;
  std::string model = "reciprocal_gamma";
  int ell = 1;
  int n = 2;
  int max_value = 6;
  bool distinct = false;
  std::string grid = "1,2.5,10";
  double tol = 1e-8;
  std::string out;
  std::string format;
  std::string step = "1/100";
  std::string t_max;
  std::string identity;
  std::string which = "cor32";
  double shift = 1.0;
};

template <class F>
auto parsing(const std::string& what, F&& f) {
  try {
    return f();
  } catch (const DomainError& e) {
    throw ParseFailure(what + ": " + e.what());
  }
}

SequencePair read_pair(const Options& o) {
  if (o.a.empty() || o.b.empty()) throw ParseFailure("--a and --b are required");
  auto a = parsing("--a", [&] { return parse_rational_list(o.a); });
  auto b = parsing("--b", [&] { return parse_rational_list(o.b); });
  return SequencePair(std::move(a), std::move(b));
}

EntireModel read_model(const std::string& text) {
  return parsing("--model", [&] { return parse_model(text); });
}

std::vector<double> read_grid(const std::string& text) {
  std::vector<double> grid;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw ParseFailure("--grid: bad number '" + item + "'");
    }
    if (used != item.size()) throw ParseFailure("--grid: bad number '" + item + "'");
    grid.push_back(v);
  }
  if (grid.empty()) throw ParseFailure("--grid is empty");
  return grid;
}

Rational read_rational(const std::string& flag, const std::string& text) {
  return parsing(flag, [&] { return parse_rational(text); });
}

Json rationals(const std::vector<Rational>& v) {
  Json j = Json::array();
  for (const auto& x : v) j.push_back(to_string(x));
  return j;
}

Json pte_json(int d) { return d == kInfiniteDegree ? Json(nullptr) : Json(d); }

// Writes to --out when given, else to `out`.
void emit(const Options& o, std::ostream& out, const std::function<void(std::ostream&)>& body) {
  if (o.out.empty()) {
    body(out);
    return;
  }
  std::ofstream file(o.out, std::ios::binary);
  if (!file) throw DomainError("cannot write '" + o.out + "'");
  body(file);
}

void emit_samples(const Options& o, std::ostream& out, const std::vector<std::string>& names,
                  const std::vector<const PiecewisePolynomial*>& columns, const Rational& lo, const Rational& hi) {
  const Rational step = read_rational("--step", o.step);
  if (step <= 0) throw DomainError("--step must be positive");
  const std::string format = o.format.empty() ? "csv" : o.format;
  if (format == "csv") {
    emit(o, out, [&](std::ostream& s) { write_samples_csv(s, names, columns, lo, hi, step); });
    return;
  }
  if (format != "json") throw ParseFailure("--format must be csv or json");
  Json j;
  Json t = Json::array();
  std::vector<Json> cols(columns.size(), Json::array());
  for (Rational x = lo; x <= hi; x += step) {
    t.push_back(to_double(x));
    for (std::size_t c = 0; c < columns.size(); ++c) cols[c].push_back(to_double((*columns[c])(x)));
  }
  j["t"] = t;
  for (std::size_t c = 0; c < columns.size(); ++c) j[names[c]] = cols[c];
  emit(o, out, [&](std::ostream& s) { s << j.dump(2) << '\n'; });
}

Rational range_lo(const SequencePair& p) { return p.min_entry() - 1; }
Rational range_hi(const SequencePair& p) { return p.max_entry() + 1; }

int seq_check(const Options& o, std::ostream& out) {
  const SequencePair pair = read_pair(o);
  Json j;
  j["a"] = rationals(pair.a());
  j["b"] = rationals(pair.b());
  j["weak_supermajorisation"] = is_weak_supermajorisation(pair);
  j["pte_degree"] = pte_json(pte_degree(pair));
  j["identical"] = pair.identical();
  emit(o, out, [&](std::ostream& s) { s << j.dump(2) << '\n'; });
  return kOk;
}

int rho_emit(const Options& o, std::ostream& out) {
  const SequencePair pair = read_pair(o);
  const PiecewisePolynomial rho = build_rho(pair, o.ell);
  emit_samples(o, out, {"rho" + std::to_string(o.ell)}, {&rho}, range_lo(pair), range_hi(pair));
  return kOk;
}

int rho_certify(const Options& o, std::ostream& out) {
  const SequencePair pair = read_pair(o);
  const PiecewisePolynomial rho = build_rho(pair, o.ell);
  const NonnegativityCertificate cert = certify_nonnegative(rho);
  Json j;
  j["a"] = rationals(pair.a());
  j["b"] = rationals(pair.b());
  j["ell"] = o.ell;
  j["nonnegative"] = cert.nonnegative;
  j["witness"] = cert.witness ? Json(to_string(*cert.witness)) : Json(nullptr);
  j["witness_value"] = cert.witness ? Json(to_string(cert.witness_value)) : Json(nullptr);
  const auto end = rho.support_end();
  j["support_end"] = end ? Json(to_string(*end)) : Json(nullptr);
  j["pte_degree"] = pte_json(pte_degree(pair));
  Json pieces = Json::array();
  for (const auto& p : cert.pieces) {
    Json q;
    q["lo"] = to_string(p.lo);
    q["hi"] = p.hi ? Json(to_string(*p.hi)) : Json(nullptr);
    q["nonnegative"] = p.nonnegative;
    q["point"] = to_string(p.point);
    q["value"] = to_string(p.value);
    pieces.push_back(q);
  }
  j["pieces"] = pieces;
  emit(o, out, [&](std::ostream& s) { s << j.dump(2) << '\n'; });
  return cert.nonnegative ? kOk : kVerificationFailed;
}

int phi_emit(const Options& o, std::ostream& out) {
  const SequencePair pair = read_pair(o);
  const EntireModel model = read_model(o.model);
  const Rational t_max = o.t_max.empty() ? pair.max_entry() + 10 : read_rational("--tmax", o.t_max);
  if (t_max <= 0) throw DomainError("--tmax must be positive");
  const PiecewisePolynomial phi = build_phi(pair, o.ell, model.zeros, t_max);
  emit_samples(o, out, {"phi"}, {&phi}, Rational(0), t_max);
  return kOk;
}

int pte(const Options& o, std::ostream& out) {
  const auto pairs = pte_search(o.n, o.max_value, o.ell, o.distinct);
  Json j;
  j["n"] = o.n;
  j["max"] = o.max_value;
  j["ell"] = o.ell;
  j["distinct"] = o.distinct;
  Json list = Json::array();
  for (const auto& p : pairs) {
    Json q;
    q["a"] = rationals(p.a());
    q["b"] = rationals(p.b());
    q["pte_degree"] = pte_json(pte_degree(p));
    list.push_back(q);
  }
  j["pairs"] = list;
  emit(o, out, [&](std::ostream& s) { s << j.dump(2) << '\n'; });
  return kOk;
}

int figure_rho_pair(const Options& o, std::ostream& out) {
  const SequencePair pair = read_pair(o);
  const PiecewisePolynomial rho1 = build_rho(pair, 1);
  const PiecewisePolynomial rho2 = build_rho(pair, 2);
  emit_samples(o, out, {"rho1", "rho2"}, {&rho1, &rho2}, range_lo(pair), range_hi(pair));
  return kOk;
}

int status_code(const VerificationReport& r) {
  if (r.status == "pass") return kOk;
  if (r.status == "not_applicable") return kDomainError;
  return kVerificationFailed;
}

int verify(const Options& o, std::ostream& out) {
  const std::vector<double> grid = read_grid(o.grid);
  VerificationReport report;
  if (o.identity == "vertical") {
    static const std::map<std::string, VerticalId> ids{{"prop31", VerticalId::prop31},
                                                       {"cor32", VerticalId::cor32},
                                                       {"cor33", VerticalId::cor33},
                                                       {"prop34", VerticalId::prop34},
                                                       {"cor35", VerticalId::cor35}};
    const auto it = ids.find(o.which);
    if (it == ids.end()) throw ParseFailure("--which must be one of prop31, cor32, cor33, prop34, cor35");
    VerticalQuery q;
    q.id = it->second;
    q.a = o.shift;
    if (q.id == VerticalId::prop34 || q.id == VerticalId::cor35) q.pair = read_pair(o);
    const std::string model_text = (q.id == VerticalId::cor35 && o.model == "reciprocal_gamma") ? "barnes_g" : o.model;
    report = verify_vertical(make_vertical(read_model(model_text)), q, grid, o.tol);
  } else {
    static const std::map<std::string, IdentityId> ids{{"thm1", IdentityId::thm1},       {"thm2", IdentityId::thm2},
                                                       {"thm3", IdentityId::thm3},       {"barnes", IdentityId::cor_barnes},
                                                       {"prop25", IdentityId::prop25},   {"lemma24", IdentityId::lemma24}};
    const auto it = ids.find(o.identity);
    if (it == ids.end()) throw ParseFailure("unknown identity '" + o.identity + "'");
    std::string model_text = o.model;
    int param = o.ell;
    if (it->second == IdentityId::cor_barnes) {
      param = o.n;
      if (model_text == "reciprocal_gamma") model_text = "multiple_gamma:" + std::to_string(o.n);
    }
    const RatioSpec spec{read_model(model_text), read_pair(o)};
    report = verify_identity(spec, it->second, param, grid, o.tol);
  }
  emit(o, out, [&](std::ostream& s) { s << to_json(report) << '\n'; });
  return status_code(report);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Generalised Stieltjes representations of entire-function ratios", "gstj"};
  app.require_subcommand(1);

  auto pair_opts = [&](CLI::App* c) {
    c->add_option("--a", o.a, "comma-separated rationals");
    c->add_option("--b", o.b, "comma-separated rationals");
  };
  auto sample_opts = [&](CLI::App* c) {
    c->add_option("--step", o.step, "sample step (rational)");
    c->add_option("--format", o.format, "csv or json");
  };

  CLI::App* seq = app.add_subcommand("seq", "sequence pair checks")->require_subcommand(1);
  CLI::App* seq_check_cmd = seq->add_subcommand("check", "weak supermajorisation and PTE degree");
  pair_opts(seq_check_cmd);

  CLI::App* rho = app.add_subcommand("rho", "the density rho_ell")->require_subcommand(1);
  CLI::App* rho_emit_cmd = rho->add_subcommand("emit", "samples of rho_ell on [min - 1, max + 1]");
  CLI::App* rho_certify_cmd = rho->add_subcommand("certify", "exact sign certificate of rho_ell");
  for (CLI::App* c : {rho_emit_cmd, rho_certify_cmd}) {
    pair_opts(c);
    c->add_option("--ell", o.ell, "degree ell >= 1");
  }
  sample_opts(rho_emit_cmd);

  CLI::App* phi = app.add_subcommand("phi", "the density phi_ell")->require_subcommand(1);
  CLI::App* phi_emit_cmd = phi->add_subcommand("emit", "samples of phi_ell on [0, tmax]");
  pair_opts(phi_emit_cmd);
  phi_emit_cmd->add_option("--model", o.model);
  phi_emit_cmd->add_option("--ell", o.ell);
  phi_emit_cmd->add_option("--tmax", o.t_max, "upper end (rational), default max entry + 10");
  sample_opts(phi_emit_cmd);

  CLI::App* pte_cmd_group = app.add_subcommand("pte", "Prouhet-Tarry-Escott pairs")->require_subcommand(1);
  CLI::App* pte_search_cmd = pte_cmd_group->add_subcommand("search", "pairs of length n in {0..max}");
  pte_search_cmd->add_option("--n", o.n)->required();
  pte_search_cmd->add_option("--max", o.max_value)->required();
  pte_search_cmd->add_option("--ell", o.ell, "minimum pte degree")->required();
  pte_search_cmd->add_flag("--distinct", o.distinct, "entries distinct within each tuple");

  CLI::App* verify_cmd = app.add_subcommand("verify", "verification report as JSON");
  verify_cmd->add_option("identity", o.identity, "thm1|thm2|thm3|barnes|prop25|lemma24|vertical")->required();
  pair_opts(verify_cmd);
  verify_cmd->add_option("--model", o.model, "model name, e.g. reciprocal_gamma, multiple_gamma:2");
  verify_cmd->add_option("--ell", o.ell);
  verify_cmd->add_option("--n", o.n, "N for barnes");
  verify_cmd->add_option("--grid", o.grid, "comma-separated x values");
  verify_cmd->add_option("--tol", o.tol, "relative tolerance");
  verify_cmd->add_option("--which", o.which, "vertical: prop31|cor32|cor33|prop34|cor35");
  verify_cmd->add_option("--shift", o.shift, "vertical: the shift a");

  CLI::App* figure = app.add_subcommand("figure", "figure data")->require_subcommand(1);
  CLI::App* rho_pair_cmd = figure->add_subcommand("rho-pair", "CSV columns t, rho1, rho2");
  pair_opts(rho_pair_cmd);
  sample_opts(rho_pair_cmd);

  for (CLI::App* c : {seq_check_cmd, rho_emit_cmd, rho_certify_cmd, phi_emit_cmd, pte_search_cmd, verify_cmd, rho_pair_cmd})
    c->add_option("--out", o.out, "output file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  try {
    if (seq_check_cmd->parsed()) return seq_check(o, out);
    if (rho_emit_cmd->parsed()) return rho_emit(o, out);
    if (rho_certify_cmd->parsed()) return rho_certify(o, out);
    if (phi_emit_cmd->parsed()) return phi_emit(o, out);
    if (pte_search_cmd->parsed()) return pte(o, out);
    if (verify_cmd->parsed()) return verify(o, out);
    if (rho_pair_cmd->parsed()) return figure_rho_pair(o, out);
  } catch (const ParseFailure& e) {
    err << "gstj: " << e.what() << '\n';
    return kParseError;
  } catch (const DomainError& e) {
    err << "gstj: " << e.what() << '\n';
    return kDomainError;
  }
  return kParseError;
}

}  // namespace gstieltjes::cli
