#pragma once

#include "harmonic/jets/series.hpp"
#include "harmonic/rational.hpp"

#include <compare>
#include <limits>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace harmonic::jets {

/// A letter of the endomorphism alphabet on the orthogonal complement of the
/// radial direction u: either the unit I_u or the k-th radial covariant
/// derivative R_u^(k) of the Jacobi operator at r = 0.
///
/// Symbols are totally ordered by jet order with the identity last.
class JetSymbol {
public:
  static JetSymbol identity() { return JetSymbol(kIdentityCode); }
  static JetSymbol curvature_jet(int order);

  bool is_identity() const { return code_ == kIdentityCode; }
  int order() const;

  std::string to_string() const;

  auto operator<=>(const JetSymbol&) const = default;

private:
  static constexpr int kIdentityCode = std::numeric_limits<int>::max();
  explicit JetSymbol(int code) : code_(code) {}
  int code_;
};

/// Ordered product of curvature jets. I_u factors are elided on construction,
/// so the empty word is the unit I_u.
class EndoWord {
public:
  EndoWord() = default;
  explicit EndoWord(std::vector<int> jet_orders);

  static EndoWord from_symbols(std::span<const JetSymbol> symbols);
  static EndoWord jet(int order) { return EndoWord({order}); }

  bool is_unit() const { return orders_.empty(); }
  std::size_t size() const { return orders_.size(); }
  const std::vector<int>& orders() const { return orders_; }
  std::vector<JetSymbol> symbols() const;

  /// Sum of the jet orders; its parity is the parity of the word in u.
  int total_order() const;

  EndoWord operator*(const EndoWord& rhs) const;
  EndoWord reversed() const;

  /// Lexicographically minimal rotation.
  EndoWord cyclic_normal_form() const;

  /// `I` for the unit, otherwise factors `R<k>` joined by `*`.
  std::string to_string() const;

  auto operator<=>(const EndoWord&) const = default;

private:
  std::vector<int> orders_;
};

/// Finite Q-linear combination of words.
class EndoPolynomial {
public:
  using Terms = std::map<EndoWord, Rational>;

  EndoPolynomial() = default;
  EndoPolynomial(const EndoWord& w, const Rational& c) { add_term(w, c); }

  static EndoPolynomial unit() { return EndoPolynomial(EndoWord{}, Rational(1)); }
  static EndoPolynomial jet(int order) { return EndoPolynomial(EndoWord::jet(order), Rational(1)); }

  void add_term(const EndoWord& w, const Rational& c);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const EndoWord& w) const;

  EndoPolynomial& operator+=(const EndoPolynomial& o);
  friend EndoPolynomial operator+(EndoPolynomial a, const EndoPolynomial& b) { return a += b; }
  friend EndoPolynomial operator*(const EndoPolynomial& a, const Rational& x);
  friend EndoPolynomial operator*(const EndoPolynomial& a, const EndoPolynomial& b);
  friend bool operator==(const EndoPolynomial&, const EndoPolynomial&) = default;

  std::string to_string() const;

private:
  Terms terms_;
};

/// Radial series with noncommutative coefficients (shape operator, its
/// derivative, Jacobi operator along the geodesic).
using EndoSeries = LaurentSeries<EndoPolynomial>;

inline EndoSeries series_mul(const EndoSeries& a, const EndoSeries& b) { return a * b; }
inline EndoSeries series_derivative(const EndoSeries& s) { return s.derivative(); }

/// Sets every curvature jet to zero, i.e. specializes to flat space.
EndoSeries substitute_flat(const EndoSeries& s);

} // namespace harmonic::jets
