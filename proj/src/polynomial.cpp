#include "graphpoly/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>
#include <set>

#include "graphpoly/errors.hpp"

namespace graphpoly {

namespace {

std::uint32_t total(const Polynomial::Exponents& e) {
  return std::accumulate(e.begin(), e.end(), std::uint32_t{0});
}

Rational rational_pow(const Rational& base, std::uint32_t k) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), k);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), k);
  r.canonicalize();
  return r;
}

std::vector<std::string> merged(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

bool Polynomial::GradedLex::operator()(const Exponents& a, const Exponents& b) const {
  const auto ta = total(a);
  const auto tb = total(b);
  if (ta != tb) return ta < tb;
  return a < b;
}

Polynomial::Polynomial(int c) : Polynomial(Rational(c)) {}

Polynomial::Polynomial(const Integer& c) : Polynomial(Rational(c)) {}

Polynomial::Polynomial(const Rational& c) {
  if (c != 0) terms_.emplace(Exponents{}, c);
}

Polynomial Polynomial::variable(const std::string& name) { return monomial(name, 1); }

Polynomial Polynomial::monomial(const std::string& name, std::uint32_t power,
                                const Rational& coefficient) {
  if (coefficient == 0) return {};
  if (power == 0) return Polynomial(coefficient);
  Terms t;
  t.emplace(Exponents{power}, coefficient);
  return Polynomial({name}, std::move(t));
}

Polynomial Polynomial::from_terms(std::vector<std::string> variables,
                                  std::vector<std::pair<Exponents, Rational>> terms) {
  std::vector<std::size_t> order(variables.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return variables[a] < variables[b]; });
  std::vector<std::string> sorted;
  for (auto i : order) sorted.push_back(variables[i]);
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw DomainError("duplicate variable name in polynomial");
  Terms out;
  for (auto& [e, c] : terms) {
    if (e.size() != variables.size())
      throw DomainError("exponent vector arity does not match variable list");
    Exponents se(e.size());
    for (std::size_t i = 0; i < order.size(); ++i) se[i] = e[order[i]];
    out[se] += c;
  }
  Polynomial p(std::move(sorted), std::move(out));
  p.normalize();
  return p;
}

Polynomial Polynomial::univariate(const std::string& name, std::span<const Integer> coefficients) {
  Terms t;
  for (std::size_t i = 0; i < coefficients.size(); ++i)
    if (coefficients[i] != 0) t.emplace(Exponents{static_cast<std::uint32_t>(i)}, Rational(coefficients[i]));
  Polynomial p({name}, std::move(t));
  p.normalize();
  return p;
}

Polynomial Polynomial::univariate(const std::string& name, std::span<const Rational> coefficients) {
  Terms t;
  for (std::size_t i = 0; i < coefficients.size(); ++i)
    if (coefficients[i] != 0) t.emplace(Exponents{static_cast<std::uint32_t>(i)}, coefficients[i]);
  Polynomial p({name}, std::move(t));
  p.normalize();
  return p;
}

void Polynomial::normalize() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second == 0)
      it = terms_.erase(it);
    else
      ++it;
  }
  std::vector<bool> used(vars_.size(), false);
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) used[i] = true;
  if (std::all_of(used.begin(), used.end(), [](bool b) { return b; })) return;
  std::vector<std::string> vars;
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (used[i]) vars.push_back(vars_[i]);
  Terms t;
  for (auto& [e, c] : terms_) {
    Exponents ne;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (used[i]) ne.push_back(e[i]);
    t.emplace(std::move(ne), std::move(c));
  }
  vars_ = std::move(vars);
  terms_ = std::move(t);
}

Polynomial::Terms Polynomial::lifted(const std::vector<std::string>& to) const {
  if (to == vars_) return terms_;
  std::vector<std::size_t> pos(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i)
    pos[i] = static_cast<std::size_t>(std::find(to.begin(), to.end(), vars_[i]) - to.begin());
  Terms t;
  for (const auto& [e, c] : terms_) {
    Exponents ne(to.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) ne[pos[i]] = e[i];
    t.emplace(std::move(ne), c);
  }
  return t;
}

bool Polynomial::has_integer_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.second.get_den() == 1; });
}

std::uint32_t Polynomial::degree(std::string_view var) const {
  auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end()) return 0;
  const auto i = static_cast<std::size_t>(it - vars_.begin());
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
  return d;
}

std::uint32_t Polynomial::total_degree() const {
  return terms_.empty() ? 0 : total(terms_.rbegin()->first);
}

Rational Polynomial::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::coefficient(
    const std::vector<std::pair<std::string, std::uint32_t>>& monomial) const {
  Exponents e(vars_.size(), 0);
  for (const auto& [name, power] : monomial) {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) {
      if (power != 0) return 0;
      continue;
    }
    e[static_cast<std::size_t>(it - vars_.begin())] += power;
  }
  return coefficient(e);
}

std::vector<Rational> Polynomial::univariate_coefficients(std::string_view var) const {
  if (vars_.size() > 1 || (vars_.size() == 1 && vars_[0] != var))
    throw DomainError("polynomial is not univariate in " + std::string(var));
  std::vector<Rational> out(vars_.empty() ? 1 : degree(var) + 1, Rational(0));
  for (const auto& [e, c] : terms_) out[e.empty() ? 0 : e[0]] = c;
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.is_zero()) return *this;
  auto vars = merged(vars_, o.vars_);
  terms_ = lifted(vars);
  vars_ = std::move(vars);
  for (auto& [e, c] : o.lifted(vars_)) {
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) it->second += c;
  }
  normalize();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  auto vars = merged(a.vars_, b.vars_);
  const auto ta = a.lifted(vars);
  const auto tb = b.lifted(vars);
  Polynomial::Terms out;
  Polynomial::Exponents e(vars.size());
  for (const auto& [ea, ca] : ta) {
    for (const auto& [eb, cb] : tb) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      auto [it, inserted] = out.emplace(e, ca * cb);
      if (!inserted) it->second += ca * cb;
    }
  }
  Polynomial p(std::move(vars), std::move(out));
  p.normalize();
  return p;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c == 0) return {};
  Polynomial r = *this;
  for (auto& [e, v] : r.terms_) v *= c;
  return r;
}

Polynomial Polynomial::pow(std::uint32_t k) const {
  Polynomial result(1);
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::substitute(const std::map<std::string, Polynomial>& bindings) const {
  std::vector<Polynomial> images;
  images.reserve(vars_.size());
  for (const auto& v : vars_) {
    auto it = bindings.find(v);
    images.push_back(it == bindings.end() ? variable(v) : it->second);
  }
  // powers[i][k] = images[i]^k, filled lazily
  std::vector<std::vector<Polynomial>> powers(vars_.size(), std::vector<Polynomial>{Polynomial(1)});
  auto power_of = [&](std::size_t i, std::uint32_t k) -> const Polynomial& {
    while (powers[i].size() <= k) powers[i].push_back(powers[i].back() * images[i]);
    return powers[i][k];
  };
  Polynomial out;
  for (const auto& [e, c] : terms_) {
    Polynomial term(c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) term *= power_of(i, e[i]);
    out += term;
  }
  return out;
}

Polynomial Polynomial::renamed(const std::map<std::string, std::string>& names) const {
  std::map<std::string, Polynomial> b;
  for (const auto& [from, to] : names) b.emplace(from, variable(to));
  return substitute(b);
}

Rational Polynomial::evaluate(const std::map<std::string, Rational>& point) const {
  std::vector<Rational> values;
  for (const auto& v : vars_) {
    auto it = point.find(v);
    if (it == point.end()) throw DomainError("no value bound for variable " + v);
    values.push_back(it->second);
  }
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) t *= rational_pow(values[i], e[i]);
    sum += t;
  }
  return sum;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += vars_[i];
      if (e[i] > 1) mono += '^' + std::to_string(e[i]);
    }
    const Rational mag = abs(c);
    if (first) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (mono.empty())
      out += mag.get_str();
    else if (mag == 1)
      out += mono;
    else
      out += mag.get_str() + '*' + mono;
  }
  return out;
}

nlohmann::json Polynomial::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
    terms.push_back({{"exponents", it->first}, {"coefficient", it->second.get_str()}});
  return {{"variables", vars_}, {"terms", terms}};
}

Polynomial Polynomial::from_json(const nlohmann::json& j) {
  try {
    auto vars = j.at("variables").get<std::vector<std::string>>();
    std::vector<std::pair<Exponents, Rational>> terms;
    for (const auto& t : j.at("terms")) {
      Rational c(t.at("coefficient").get<std::string>());
      c.canonicalize();
      terms.emplace_back(t.at("exponents").get<Exponents>(), c);
    }
    return from_terms(std::move(vars), std::move(terms));
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed polynomial JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw DomainError(std::string("malformed polynomial JSON: ") + e.what());
  }
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial: " + what, pos_);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool starts_factor() {
    skip();
    if (pos_ >= s_.size()) return false;
    const auto c = static_cast<unsigned char>(s_[pos_]);
    return std::isalnum(c) || c == '(';
  }

  Polynomial expr() {
    Polynomial acc;
    bool negate = false;
    if (peek('-')) {
      ++pos_;
      negate = true;
    } else if (peek('+')) {
      ++pos_;
    }
    acc = negate ? -term() : term();
    while (true) {
      if (peek('+')) {
        ++pos_;
        acc += term();
      } else if (peek('-')) {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = power();
    while (true) {
      if (peek('*')) {
        ++pos_;
        acc *= power();
      } else if (starts_factor()) {
        acc *= power();
      } else {
        return acc;
      }
    }
  }

  Polynomial power() {
    Polynomial b = base();
    if (peek('^')) {
      ++pos_;
      skip();
      const auto start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      b = b.pow(static_cast<std::uint32_t>(std::stoul(std::string(s_.substr(start, pos_ - start)))));
    }
    return b;
  }

  std::string digits() {
    const auto start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  Polynomial base() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const auto c = static_cast<unsigned char>(s_[pos_]);
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return p;
    }
    if (std::isdigit(c)) {
      Rational q(digits());
      if (pos_ + 1 < s_.size() && s_[pos_] == '/' &&
          std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
        ++pos_;
        Integer den(digits());
        if (den == 0) fail("zero denominator");
        q /= den;
      }
      return Polynomial(q);
    }
    if (std::isalpha(c)) {
      const auto start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      return Polynomial::variable(std::string(s_.substr(start, pos_ - start)));
    }
    fail("unexpected character");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text) { return Parser(text).parse(); }

std::vector<Rational> interpolate_univariate(std::span<const Rational> nodes,
                                             std::span<const Rational> values) {
  const auto n = nodes.size();
  if (n != values.size() || n == 0) throw NumericRankError("node/value count mismatch");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (nodes[i] == nodes[j]) throw NumericRankError("duplicate interpolation node");
  // divided differences
  std::vector<Rational> dd(values.begin(), values.end());
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i)
      dd[i] = (dd[i] - dd[i - 1]) / (nodes[i] - nodes[i - level]);
  // expand Newton form via Horner from the highest divided difference
  std::vector<Rational> coeff{dd[n - 1]};
  for (std::size_t k = n - 1; k-- > 0;) {
    std::vector<Rational> next(coeff.size() + 1, Rational(0));
    for (std::size_t i = 0; i < coeff.size(); ++i) {
      next[i + 1] += coeff[i];
      next[i] -= coeff[i] * nodes[k];
    }
    next[0] += dd[k];
    coeff = std::move(next);
  }
  coeff.resize(n);
  return coeff;
}

Polynomial interpolate_bivariate(std::span<const GridSample> samples, std::uint32_t x_degree,
                                 std::uint32_t y_degree, const std::string& x_name,
                                 const std::string& y_name) {
  std::vector<Rational> xs;
  std::vector<Rational> ys;
  for (const auto& s : samples) {
    if (std::find(xs.begin(), xs.end(), s.x) == xs.end()) xs.push_back(s.x);
    if (std::find(ys.begin(), ys.end(), s.y) == ys.end()) ys.push_back(s.y);
  }
  if (xs.size() != x_degree + 1U || ys.size() != y_degree + 1U ||
      samples.size() != xs.size() * ys.size())
    throw NumericRankError("samples do not form a full grid matching the degree bounds");
  std::sort(xs.begin(), xs.end());
  std::sort(ys.begin(), ys.end());
  auto index = [](const std::vector<Rational>& v, const Rational& q) {
    return static_cast<std::size_t>(std::lower_bound(v.begin(), v.end(), q) - v.begin());
  };
  std::vector<std::vector<Rational>> grid(xs.size(), std::vector<Rational>(ys.size()));
  std::vector<std::vector<bool>> seen(xs.size(), std::vector<bool>(ys.size(), false));
  for (const auto& s : samples) {
    const auto i = index(xs, s.x);
    const auto j = index(ys, s.y);
    if (seen[i][j]) throw NumericRankError("duplicate grid node");
    seen[i][j] = true;
    grid[i][j] = s.value;
  }
  // coeff_in_x[j][i]: coefficient of x^i along the line y = ys[j]
  std::vector<std::vector<Rational>> coeff_in_x;
  for (std::size_t j = 0; j < ys.size(); ++j) {
    std::vector<Rational> column;
    for (std::size_t i = 0; i < xs.size(); ++i) column.push_back(grid[i][j]);
    coeff_in_x.push_back(interpolate_univariate(xs, column));
  }
  std::vector<std::pair<Polynomial::Exponents, Rational>> terms;
  for (std::uint32_t i = 0; i <= x_degree; ++i) {
    std::vector<Rational> along_y;
    for (std::size_t j = 0; j < ys.size(); ++j) along_y.push_back(coeff_in_x[j][i]);
    const auto c = interpolate_univariate(ys, along_y);
    for (std::uint32_t k = 0; k <= y_degree; ++k)
      if (c[k] != 0) terms.push_back({{i, k}, c[k]});
  }
  if (x_name == y_name) throw DomainError("interpolation variables must differ");
  return Polynomial::from_terms({x_name, y_name}, std::move(terms));
}

}  // namespace graphpoly
