#include "harmonic/jets/trace.hpp"

#include <stdexcept>
#include <vector>

namespace harmonic::jets {

namespace {

bool is_word(const EndoWord& w, std::initializer_list<int> orders) {
  return w.orders() == std::vector<int>(orders);
}

ScalarPolynomial residual(const TraceMonomial& t) { return ScalarPolynomial(Generator::residual(t)); }

} // namespace

ScalarPolynomial reduce_trace(const EndoWord& word) {
  const EndoWord w = word.cyclic_normal_form();
  if (w.is_unit()) return sym_n() - Rational(1);
  if (w.size() == 1) return w.orders()[0] == 0 ? sym_C() : ScalarPolynomial{};
  if (is_word(w, {0, 0})) return sym_H();
  if (is_word(w, {0, 1})) return {};
  if (is_word(w, {0, 2})) return sym_T2() * Rational(-1);
  if (is_word(w, {1, 1})) return sym_T2();
  if (is_word(w, {0, 0, 0})) return (sym_L() + sym_T2() * Rational(9)) * Rational(1, 32);
  return residual(TraceMonomial::cyclic_trace(w));
}

ScalarPolynomial reduce_q(int order, const EndoWord& left, const EndoWord& right) {
  const TraceMonomial canon = TraceMonomial::q_bracket(order, left, right);
  const EndoWord& f = canon.left();
  const EndoWord& g = canon.right();
  // The unit sorts first, so a unit argument is always on the left.
  if (f.is_unit()) {
    // sum_i Tr(G R^(k)(e_i, .) e_i) - Tr(G R^(k)(u, .) u) = Tr(G Ric^(k)) - Tr(G R_u^(k)).
    ScalarPolynomial out = reduce_trace(g * EndoWord::jet(order)) * Rational(-1);
    if (order == 0) out += sym_C() * reduce_trace(g);
    return out;
  }
  if (order == 0 && is_word(f, {0}) && is_word(g, {0})) return sym_Q0();
  return residual(canon);
}

ScalarPolynomial trace(const EndoPolynomial& p) {
  ScalarPolynomial out;
  for (const auto& [w, c] : p.terms()) out += reduce_trace(w) * c;
  return out;
}

ScalarSeries series_trace(const EndoSeries& s) {
  ScalarSeries out(s.truncation());
  for (const auto& [p, poly] : s.coeffs()) out.add_to(p, trace(poly));
  return out;
}

ScalarSeries q_contract(const EndoSeries& a, const EndoSeries& b) {
  // The curvature series is exact with valuation 0.
  const int trunc = std::min(a.valuation() + b.truncation(), b.valuation() + a.truncation());
  if (trunc >= kExact) throw std::invalid_argument("q_contract: at least one operand must be truncated");
  ScalarSeries out(trunc);
  for (const auto& [pa, ca] : a.coeffs()) {
    for (const auto& [pb, cb] : b.coeffs()) {
      for (int k = 0; pa + pb + k <= out.truncation(); ++k) {
        const Rational inv_fact = Rational(1) / factorial(k);
        ScalarPolynomial term;
        for (const auto& [wa, xa] : ca.terms()) {
          for (const auto& [wb, xb] : cb.terms()) term += reduce_q(k, wa, wb) * (xa * xb * inv_fact);
        }
        out.add_to(pa + pb + k, term);
      }
    }
  }
  return out;
}

} // namespace harmonic::jets
