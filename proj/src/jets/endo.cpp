#include "harmonic/jets/endo.hpp"

#include "term_format.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace harmonic::jets {

JetSymbol JetSymbol::curvature_jet(int order) {
  if (order < 0) throw std::invalid_argument("curvature jet order must be nonnegative");
  return JetSymbol(order);
}

int JetSymbol::order() const {
  if (is_identity()) throw std::logic_error("identity symbol has no jet order");
  return code_;
}

std::string JetSymbol::to_string() const { return is_identity() ? "I" : "R" + std::to_string(code_); }

EndoWord::EndoWord(std::vector<int> jet_orders) : orders_(std::move(jet_orders)) {
  for (int k : orders_) {
    if (k < 0) throw std::invalid_argument("curvature jet order must be nonnegative");
  }
}

EndoWord EndoWord::from_symbols(std::span<const JetSymbol> symbols) {
  std::vector<int> orders;
  for (const auto& s : symbols) {
    if (!s.is_identity()) orders.push_back(s.order());
  }
  return EndoWord(std::move(orders));
}

std::vector<JetSymbol> EndoWord::symbols() const {
  if (orders_.empty()) return {JetSymbol::identity()};
  std::vector<JetSymbol> out;
  out.reserve(orders_.size());
  for (int k : orders_) out.push_back(JetSymbol::curvature_jet(k));
  return out;
}

int EndoWord::total_order() const {
  int total = 0;
  for (int k : orders_) total += k;
  return total;
}

EndoWord EndoWord::operator*(const EndoWord& rhs) const {
  EndoWord out = *this;
  out.orders_.insert(out.orders_.end(), rhs.orders_.begin(), rhs.orders_.end());
  return out;
}

EndoWord EndoWord::reversed() const {
  EndoWord out = *this;
  std::reverse(out.orders_.begin(), out.orders_.end());
  return out;
}

EndoWord EndoWord::cyclic_normal_form() const {
  EndoWord best = *this;
  EndoWord rot = *this;
  for (std::size_t i = 1; i < orders_.size(); ++i) {
    std::rotate(rot.orders_.begin(), rot.orders_.begin() + 1, rot.orders_.end());
    if (rot < best) best = rot;
  }
  return best;
}

std::string EndoWord::to_string() const {
  if (orders_.empty()) return "I";
  std::string out;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    if (i) out += "*";
    out += "R" + std::to_string(orders_[i]);
  }
  return out;
}

void EndoPolynomial::add_term(const EndoWord& w, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational EndoPolynomial::coefficient(const EndoWord& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

EndoPolynomial& EndoPolynomial::operator+=(const EndoPolynomial& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

EndoPolynomial operator*(const EndoPolynomial& a, const Rational& x) {
  EndoPolynomial out;
  if (x == 0) return out;
  for (const auto& [w, c] : a.terms_) out.terms_.emplace(w, c * x);
  return out;
}

EndoPolynomial operator*(const EndoPolynomial& a, const EndoPolynomial& b) {
  EndoPolynomial out;
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) out.add_term(wa * wb, ca * cb);
  }
  return out;
}

std::string EndoPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    detail::append_term(os, first, c, w.to_string());
    first = false;
  }
  return os.str();
}

EndoSeries substitute_flat(const EndoSeries& s) {
  EndoSeries out(s.truncation());
  for (const auto& [p, poly] : s.coeffs()) {
    out.add_to(p, EndoPolynomial(EndoWord{}, poly.coefficient(EndoWord{})));
  }
  return out;
}

} // namespace harmonic::jets
