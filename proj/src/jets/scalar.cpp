#include "harmonic/jets/scalar.hpp"

#include "term_format.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace harmonic::jets {

TraceMonomial TraceMonomial::cyclic_trace(const EndoWord& w) {
  return TraceMonomial(Kind::cyclic_trace, 0, w.cyclic_normal_form(), EndoWord{});
}

TraceMonomial TraceMonomial::q_bracket(int order, const EndoWord& left, const EndoWord& right) {
  if (order < 0) throw std::invalid_argument("bracket order must be nonnegative");
  if (right < left) return TraceMonomial(Kind::q_bracket, order, right, left);
  return TraceMonomial(Kind::q_bracket, order, left, right);
}

int TraceMonomial::derivative_count() const {
  return order_ + left_.total_order() + right_.total_order();
}

std::string TraceMonomial::to_string() const {
  if (kind_ == Kind::cyclic_trace) return "tr(" + left_.to_string() + ")";
  return "Q" + std::to_string(order_) + "(" + left_.to_string() + "|" + right_.to_string() + ")";
}

Generator Generator::residual(const TraceMonomial& t) { return Generator(Kind::residual, t); }

const TraceMonomial& Generator::trace() const {
  if (kind_ != Kind::residual) throw std::logic_error("generator is not a residual trace");
  return trace_;
}

std::string Generator::to_string() const {
  switch (kind_) {
    case Kind::n: return "n";
    case Kind::C: return "C";
    case Kind::H: return "H";
    case Kind::L: return "L";
    case Kind::T2: return "T2";
    case Kind::Q0: return "Q0";
    case Kind::residual: return trace_.to_string();
  }
  return "?";
}

Monomial::Monomial(const Generator& g, int exponent) {
  if (exponent < 0) throw std::invalid_argument("monomial exponents must be nonnegative");
  if (exponent > 0) factors_.emplace_back(g, exponent);
}

int Monomial::degree() const {
  int d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

int Monomial::exponent_of(Generator::Kind kind) const {
  int e = 0;
  for (const auto& [g, k] : factors_) {
    if (g.kind() == kind) e += k;
  }
  return e;
}

int Monomial::direction_degree() const {
  int e = 0;
  for (const auto& [g, k] : factors_) {
    if (g.depends_on_direction()) e += k;
  }
  return e;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial out;
  auto a = factors_.begin();
  auto b = o.factors_.begin();
  while (a != factors_.end() || b != o.factors_.end()) {
    if (b == o.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      out.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      out.factors_.push_back(*b++);
    } else {
      out.factors_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  return out;
}

std::string Monomial::to_string() const {
  std::string out;
  for (const auto& [g, k] : factors_) {
    if (!out.empty()) out += "*";
    out += g.to_string();
    if (k != 1) out += "^" + std::to_string(k);
  }
  return out;
}

void ScalarPolynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational ScalarPolynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool ScalarPolynomial::mentions(Generator::Kind kind) const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [kind](const auto& t) { return t.first.exponent_of(kind) > 0; });
}

ScalarPolynomial& ScalarPolynomial::operator+=(const ScalarPolynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

ScalarPolynomial& ScalarPolynomial::operator-=(const ScalarPolynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

ScalarPolynomial operator*(const ScalarPolynomial& a, const Rational& x) {
  ScalarPolynomial out;
  if (x == 0) return out;
  for (const auto& [m, c] : a.terms_) out.terms_.emplace(m, c * x);
  return out;
}

ScalarPolynomial operator*(const ScalarPolynomial& a, const ScalarPolynomial& b) {
  ScalarPolynomial out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

std::string ScalarPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    detail::append_term(os, first, c, m.to_string());
    first = false;
  }
  return os.str();
}

} // namespace harmonic::jets
