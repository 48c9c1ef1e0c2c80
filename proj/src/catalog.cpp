#include "gstieltjes/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "gstieltjes/errors.hpp"
#include "gstieltjes/special.hpp"

namespace gstieltjes {

namespace {

Polynomial binomial_in(const Polynomial& p, int n) {
  Polynomial out = Polynomial::constant(Rational(1));
  for (int i = 0; i < n; ++i) out = out * (p - Polynomial::constant(Rational(i))) * (Rational(1) / Rational(i + 1));
  return out;
}

double gamma_oracle(int order, double x) {
  if (order == 0) return -log_gamma(x);
  return -polygamma(order - 1, x);
}

double reciprocal_gamma_modulus(std::complex<double> w) { return -log_gamma(w).real(); }

double finite_oracle(const std::vector<Zero>& zeros, int order, double x) {
  double sum = 0.0;
  for (const auto& z : zeros) {
    const double y = x + to_double(z.lambda);
    const double m = to_double(z.mult);
    if (order == 0) {
      sum += m * std::log(y);
    } else {
      double term = std::tgamma(order) / std::pow(y, order);
      sum += m * ((order % 2 == 1) ? term : -term);
    }
  }
  return sum;
}

}  // namespace

EntireModel make_model(ModelKind kind, int N) {
  EntireModel m;
  m.kind = kind;
  const Polynomial one = Polynomial::constant(Rational(1));
  const Polynomial k = Polynomial({Rational(0), Rational(1)});
  switch (kind) {
    case ModelKind::reciprocal_gamma:
      m.name = "reciprocal_gamma";
      m.genus = 1;
      m.zeros = ZeroStream::lattice(0, Rational(0), one);
      m.closed_h = [](double s) { return -1.0 / std::expm1(-s); };
      m.direct_oracle = gamma_oracle;
      m.log_modulus = reciprocal_gamma_modulus;
      return m;
    case ModelKind::reciprocal_gamma_shifted:
      m.name = "reciprocal_gamma_shifted";
      m.genus = 1;
      m.zeros = ZeroStream::lattice(1, Rational(0), one);
      m.closed_h = [](double s) { return -std::exp(-s) / std::expm1(-s); };
      m.direct_oracle = [](int order, double x) { return gamma_oracle(order, x + 1.0); };
      m.log_modulus = [](std::complex<double> w) { return reciprocal_gamma_modulus(w + 1.0); };
      return m;
    case ModelKind::barnes_g_shifted:
      m.name = "barnes_g_shifted";
      m.genus = 2;
      m.zeros = ZeroStream::lattice(1, Rational(0), k);
      m.closed_h = [](double s) {
        const double d = -std::expm1(-s);
        return std::exp(-s) / (d * d);
      };
      return m;
    case ModelKind::barnes_g:
      m.name = "barnes_g";
      m.genus = 2;
      m.zeros = ZeroStream::lattice(0, Rational(0), k + one);
      m.closed_h = [](double s) {
        const double d = -std::expm1(-s);
        return 1.0 / (d * d);
      };
      return m;
    case ModelKind::multiple_gamma: {
      if (N < 1) throw DomainError("multiple_gamma needs N >= 1");
      m.name = "multiple_gamma:" + std::to_string(N);
      m.genus = N;
      m.zeros = ZeroStream::lattice(0, Rational(0), binomial_in(k + Polynomial::constant(Rational(N - 1)), N - 1));
      m.closed_h = [N](double s) { return std::pow(-std::expm1(-s), -N); };
      if (N == 1) {
        m.direct_oracle = gamma_oracle;
        m.log_modulus = reciprocal_gamma_modulus;
      }
      return m;
    }
    case ModelKind::finite_zeros:
    case ModelKind::custom:
      break;
  }
  throw DomainError("make_model: this kind needs explicit zero data");
}

EntireModel make_finite_zeros_model(std::vector<Zero> zeros, int genus) {
  for (const auto& z : zeros)
    if (z.lambda < 0) throw DomainError("finite_zeros entries must be >= 0");
  if (genus < 0) throw DomainError("genus must be >= 0");
  EntireModel m;
  m.kind = ModelKind::finite_zeros;
  m.genus = genus;
  m.zeros = ZeroStream::finite(std::move(zeros));
  std::ostringstream name;
  name << "finite_zeros:";
  for (std::size_t i = 0; i < m.zeros.size(); ++i) {
    const Zero z = m.zeros.at(i);
    for (Rational c(0); c < z.mult; c += 1) name << (name.str().back() == ':' ? "" : ",") << to_string(z.lambda);
  }
  m.name = name.str();
  std::vector<Zero> list;
  for (std::size_t i = 0; i < m.zeros.size(); ++i) list.push_back(m.zeros.at(i));
  m.direct_oracle = [list](int order, double x) { return finite_oracle(list, order, x); };
  m.log_modulus = [list](std::complex<double> w) {
    double sum = 0.0;
    for (const auto& z : list) sum += to_double(z.mult) * std::log(std::abs(w + to_double(z.lambda)));
    return sum;
  };
  return m;
}

namespace {

class KParser {
 public:
  explicit KParser(std::string_view text) : s_(text) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw DomainError("expression '" + std::string(s_) + "': " + what);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  Polynomial expr() {
    Polynomial p = term();
    for (;;) {
      if (eat('+'))
        p += term();
      else if (eat('-'))
        p -= term();
      else
        return p;
    }
  }
  Polynomial term() {
    Polynomial p = factor();
    for (;;) {
      if (eat('*')) {
        p = p * factor();
      } else if (eat('/')) {
        Polynomial d = factor();
        if (d.degree() != 0) fail("division only by non-zero constants");
        p *= Rational(1) / d.leading();
      } else {
        return p;
      }
    }
  }
  Polynomial factor() {
    Polynomial base = unary();
    if (eat('^')) {
      int e = integer();
      Polynomial out = Polynomial::constant(Rational(1));
      for (int i = 0; i < e; ++i) out = out * base;
      return out;
    }
    return base;
  }
  Polynomial unary() {
    if (eat('-')) return unary() * Rational(-1);
    return primary();
  }
  int integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("integer expected");
    return std::stoi(std::string(s_.substr(start, pos_ - start)));
  }
  Polynomial primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    if (eat('(')) {
      Polynomial p = expr();
      if (!eat(')')) fail("')' expected");
      return p;
    }
    if (s_.substr(pos_, 6) == "binom(") {
      pos_ += 6;
      Polynomial p = expr();
      if (!eat(',')) fail("',' expected in binom");
      int n = integer();
      if (!eat(')')) fail("')' expected");
      return binomial_in(p, n);
    }
    if (s_[pos_] == 'k') {
      ++pos_;
      return Polynomial({Rational(0), Rational(1)});
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
    if (start == pos_) fail("number, k, binom or '(' expected");
    return Polynomial::constant(parse_rational(s_.substr(start, pos_ - start)));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

Rational json_rational(const nlohmann::json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_number()) return rational_from_double(v.get<double>());
  throw DomainError("number or rational string expected in model spec");
}

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

Polynomial parse_k_polynomial(std::string_view text) { return KParser(text).parse(); }

EntireModel make_custom_model(std::string_view json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("model spec is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("genus")) throw DomainError("model spec needs a 'genus' field");
  EntireModel m;
  m.kind = ModelKind::custom;
  m.genus = j.at("genus").get<int>();
  if (m.genus < 0) throw DomainError("genus must be >= 0");
  if (j.contains("zeros") == j.contains("rule")) throw DomainError("model spec needs exactly one of 'zeros' and 'rule'");
  if (j.contains("zeros")) {
    std::vector<Zero> zeros;
    for (const auto& e : j.at("zeros")) {
      if (!e.is_array() || e.size() != 2) throw DomainError("zeros entries must be [lambda, mult]");
      Rational lambda = json_rational(e[0]);
      Rational mult = json_rational(e[1]);
      if (lambda < 0 || mult <= 0) throw DomainError("zeros need lambda >= 0 and mult > 0");
      zeros.push_back({std::move(lambda), std::move(mult)});
    }
    m.zeros = ZeroStream::finite(std::move(zeros), j.value("complete", true));
    m.name = "custom:zeros";
  } else {
    const std::string rule = j.at("rule").get<std::string>();
    std::optional<Polynomial> lambda;
    std::optional<Polynomial> mult;
    std::stringstream parts(rule);
    std::string part;
    while (std::getline(parts, part, ',')) {
      // binom(...) contains a comma; re-join until parentheses balance.
      while (std::count(part.begin(), part.end(), '(') > std::count(part.begin(), part.end(), ')')) {
        std::string more;
        if (!std::getline(parts, more, ',')) break;
        part += "," + more;
      }
      auto eq = part.find('=');
      if (eq == std::string::npos) throw DomainError("rule parts must look like name=expr");
      const std::string key = trim(std::string_view(part).substr(0, eq));
      const std::string value = trim(std::string_view(part).substr(eq + 1));
      if (key == "lambda")
        lambda = parse_k_polynomial(value);
      else if (key == "mult")
        mult = parse_k_polynomial(value);
      else
        throw DomainError("unknown rule key '" + key + "'");
    }
    if (!lambda || !mult) throw DomainError("rule needs both lambda= and mult=");
    if (lambda->degree() != 1 || lambda->leading() != 1) throw DomainError("rule lambda must be k + constant");
    const long start = j.value("start", 0L);
    Rational shift = lambda->coefficient(0);
    if (Rational(start) + shift < 0) throw DomainError("rule produces negative lambda");
    for (long kk = start; kk < start + 64; ++kk)
      if ((*mult)(Rational(kk)) < 0) throw DomainError("rule produces a negative multiplicity");
    m.zeros = ZeroStream::lattice(start, std::move(shift), std::move(*mult));
    m.tail_gap = j.value("tail_gap", 1.0);
    m.name = "custom:rule";
  }
  return m;
}

EntireModel parse_model(std::string_view text) {
  const std::string s = trim(text);
  const auto colon = s.find(':');
  const std::string head = s.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : s.substr(colon + 1);
  if (head == "reciprocal_gamma" && arg.empty()) return make_model(ModelKind::reciprocal_gamma);
  if (head == "reciprocal_gamma_shifted" && arg.empty()) return make_model(ModelKind::reciprocal_gamma_shifted);
  if (head == "barnes_g" && arg.empty()) return make_model(ModelKind::barnes_g);
  if (head == "barnes_g_shifted" && arg.empty()) return make_model(ModelKind::barnes_g_shifted);
  if (head == "multiple_gamma") {
    if (arg.empty() || !std::all_of(arg.begin(), arg.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw DomainError("multiple_gamma needs a positive integer N, e.g. multiple_gamma:2");
    return make_model(ModelKind::multiple_gamma, std::stoi(arg));
  }
  if (head == "finite_zeros") {
    std::vector<Zero> zeros;
    if (!arg.empty())
      for (auto& v : parse_rational_list(arg)) zeros.push_back({std::move(v), Rational(1)});
    return make_finite_zeros_model(std::move(zeros));
  }
  if (head == "custom") {
    std::ifstream in(arg);
    if (!in) throw DomainError("cannot read model spec file '" + arg + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return make_custom_model(buf.str());
  }
  throw DomainError("unknown model '" + s + "'");
}

std::vector<Zero> zeros_up_to(const EntireModel& model, const Rational& T) {
  if (T < 0) throw DomainError("T must be >= 0");
  return model.zeros.up_to(T);
}

GenusCheck genus_sanity(const EntireModel& model) {
  GenusCheck out{};
  const double limits[3] = {1e2, 1e3, 1e4};
  double sum = 0.0;
  std::size_t i = 0;
  for (int level = 0; level < 3; ++level) {
    for (; model.zeros.has(i); ++i) {
      const Zero z = model.zeros.at(i);
      const double lambda = to_double(z.lambda);
      if (lambda > limits[level]) break;
      if (lambda > 0) sum += to_double(z.mult) * std::pow(lambda, -(model.genus + 1));
    }
    out.partial_sums[static_cast<std::size_t>(level)] = sum;
  }
  const double d1 = out.partial_sums[1] - out.partial_sums[0];
  const double d2 = out.partial_sums[2] - out.partial_sums[1];
  out.increasing = d1 >= 0 && d2 >= 0;
  // a convergent power series loses a fixed factor per decade; a log-divergent one does not
  out.bounded = d2 == 0.0 || d2 < 0.5 * d1;
  return out;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::inconclusive:
      return "inconclusive";
  }
  return "?";
}

namespace {

long integral_multiplicity(const Rational& m) {
  if (denominator(m) != 1) throw DomainError("merged sequences need integer multiplicities");
  return numerator(m).convert_to<long>();
}

}  // namespace

MergedShiftResult merged_shift_supermajorisation(const SequencePair& pair, const EntireModel& model, int depth) {
  if (depth < 1) throw DomainError("depth must be >= 1");
  const ZeroStream& zs = model.zeros;
  std::map<Rational, long> va;
  std::map<Rational, long> vb;
  auto count_below = [](const std::map<Rational, long>& m, const std::optional<Rational>& bound) {
    long c = 0;
    for (const auto& [v, n] : m) {
      if (bound && v >= *bound) break;
      c += n;
    }
    return c;
  };
  const Rational a1 = pair.a().front();
  const Rational b1 = pair.b().front();
  for (std::size_t i = 0; zs.has(i); ++i) {
    const Zero z = zs.at(i);
    const long mult = integral_multiplicity(z.mult);
    if (mult > 0) {
      for (const auto& v : pair.a()) va[z.lambda + v] += mult;
      for (const auto& v : pair.b()) vb[z.lambda + v] += mult;
    }
    if (!zs.has(i + 1)) break;
    // Values below lambda_next + a_1 can no longer change.
    const Rational next = zs.at(i + 1).lambda;
    if (count_below(va, next + a1) >= depth && count_below(vb, next + b1) >= depth) break;
  }
  if (zs.is_finite() && !zs.complete()) throw DomainError("insufficient zeros");

  auto expand = [depth](const std::map<Rational, long>& m) {
    std::vector<Rational> out;
    for (const auto& [v, n] : m)
      for (long c = 0; c < n && static_cast<int>(out.size()) < depth; ++c) out.push_back(v);
    return out;
  };
  MergedShiftResult r{Verdict::pass, {}, false, expand(va), expand(vb)};
  const std::size_t len = std::min(r.merged_a.size(), r.merged_b.size());
  Rational sa(0);
  Rational sb(0);
  bool negative = false;
  for (std::size_t k = 0; k < len; ++k) {
    sa += r.merged_a[k];
    sb += r.merged_b[k];
    r.trace.push_back(sb - sa);
    if (sb - sa < 0) negative = true;
  }
  const std::size_t half = len / 2;
  bool stationary = len > 0;
  for (std::size_t k = half; k + 1 < len; ++k) {
    if (r.trace[k + 1] != r.trace[k]) stationary = false;
  }
  r.eventually_stationary = stationary;
  // The check is finite by nature: every examined partial sum must satisfy the inequality.
  if (negative)
    r.verdict = Verdict::fail;
  else if (static_cast<int>(len) < depth && !zs.is_finite())
    r.verdict = Verdict::inconclusive;
  else
    r.verdict = Verdict::pass;
  return r;
}

}  // namespace gstieltjes
