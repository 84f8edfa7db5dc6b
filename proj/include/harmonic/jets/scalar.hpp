#pragma once

#include "harmonic/jets/endo.hpp"
#include "harmonic/jets/series.hpp"
#include "harmonic/rational.hpp"

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace harmonic::jets {

/// Trace-type scalar that survived reduction: either Tr(w) of a word in cyclic
/// normal form, or the bilinear curvature contraction
///   Q_k(F, G) = sum_i Tr(F o R^(k)(e_i, .) G e_i)
/// with (F, G) stored in canonical order (Q_k is symmetric in F and G).
class TraceMonomial {
public:
  enum class Kind { cyclic_trace, q_bracket };

  static TraceMonomial cyclic_trace(const EndoWord& w);
  static TraceMonomial q_bracket(int order, const EndoWord& left, const EndoWord& right);

  Kind kind() const { return kind_; }
  int order() const { return order_; }
  const EndoWord& left() const { return left_; }
  const EndoWord& right() const { return right_; }

  /// Total number of radial derivatives. Odd values mark functions that are
  /// odd under u -> -u.
  int derivative_count() const;

  std::string to_string() const;

  auto operator<=>(const TraceMonomial&) const = default;

private:
  TraceMonomial(Kind kind, int order, EndoWord left, EndoWord right)
      : kind_(kind), order_(order), left_(std::move(left)), right_(std::move(right)) {}

  Kind kind_;
  int order_;
  EndoWord left_;
  EndoWord right_;
};

/// Commuting scalar generator. T2 = Tr(R'_u R'_u), Q0 = Q_0(R_u, R_u).
class Generator {
public:
  enum class Kind { n, C, H, L, T2, Q0, residual };

  static Generator dimension() { return Generator(Kind::n); }
  static Generator einstein() { return Generator(Kind::C); }
  static Generator h() { return Generator(Kind::H); }
  static Generator l() { return Generator(Kind::L); }
  static Generator t2() { return Generator(Kind::T2); }
  static Generator q0() { return Generator(Kind::Q0); }
  static Generator residual(const TraceMonomial& t);

  Kind kind() const { return kind_; }
  const TraceMonomial& trace() const;

  /// True for generators whose value varies with the direction u.
  bool depends_on_direction() const { return kind_ >= Kind::T2; }

  std::string to_string() const;

  auto operator<=>(const Generator&) const = default;

private:
  explicit Generator(Kind k) : kind_(k), trace_(TraceMonomial::cyclic_trace(EndoWord{})) {}
  Generator(Kind k, TraceMonomial t) : kind_(k), trace_(std::move(t)) {}

  Kind kind_;
  TraceMonomial trace_;
};

/// Product of generators with positive exponents, sorted by generator.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(const Generator& g, int exponent = 1);

  const std::vector<std::pair<Generator, int>>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  int degree() const;
  int exponent_of(Generator::Kind kind) const;
  /// Total exponent of direction-dependent generators (T2, Q0, residuals).
  int direction_degree() const;

  Monomial operator*(const Monomial& o) const;

  std::string to_string() const;

  auto operator<=>(const Monomial&) const = default;

private:
  std::vector<std::pair<Generator, int>> factors_;
};

/// Commutative polynomial over Q in the scalar generators.
class ScalarPolynomial {
public:
  using Terms = std::map<Monomial, Rational>;

  ScalarPolynomial() = default;
  ScalarPolynomial(const Rational& c) { add_term(Monomial{}, c); }  // NOLINT: implicit constant
  ScalarPolynomial(const Generator& g) { add_term(Monomial(g), Rational(1)); }  // NOLINT

  void add_term(const Monomial& m, const Rational& c);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Monomial& m) const;

  /// True if some term contains a generator of this kind.
  bool mentions(Generator::Kind kind) const;

  ScalarPolynomial& operator+=(const ScalarPolynomial& o);
  ScalarPolynomial& operator-=(const ScalarPolynomial& o);
  friend ScalarPolynomial operator+(ScalarPolynomial a, const ScalarPolynomial& b) { return a += b; }
  friend ScalarPolynomial operator-(ScalarPolynomial a, const ScalarPolynomial& b) { return a -= b; }
  friend ScalarPolynomial operator*(const ScalarPolynomial& a, const Rational& x);
  friend ScalarPolynomial operator*(const Rational& x, const ScalarPolynomial& a) { return a * x; }
  friend ScalarPolynomial operator*(const ScalarPolynomial& a, const ScalarPolynomial& b);
  friend bool operator==(const ScalarPolynomial&, const ScalarPolynomial&) = default;

  std::string to_string() const;

private:
  Terms terms_;
};

using ScalarSeries = LaurentSeries<ScalarPolynomial>;

/// Stored coefficient of r^power; throws std::out_of_range beyond truncation.
inline ScalarPolynomial coefficient(const ScalarSeries& s, int power) { return s.coefficient(power); }

inline ScalarSeries constant_series(const ScalarPolynomial& p) { return ScalarSeries::constant(p); }

// Shorthand generators.
inline const ScalarPolynomial& sym_n() { static const ScalarPolynomial p(Generator::dimension()); return p; }
inline const ScalarPolynomial& sym_C() { static const ScalarPolynomial p(Generator::einstein()); return p; }
inline const ScalarPolynomial& sym_H() { static const ScalarPolynomial p(Generator::h()); return p; }
inline const ScalarPolynomial& sym_L() { static const ScalarPolynomial p(Generator::l()); return p; }
inline const ScalarPolynomial& sym_T2() { static const ScalarPolynomial p(Generator::t2()); return p; }
inline const ScalarPolynomial& sym_Q0() { static const ScalarPolynomial p(Generator::q0()); return p; }

} // namespace harmonic::jets
