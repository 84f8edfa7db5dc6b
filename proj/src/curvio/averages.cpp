#include "harmonic/curvio/averages.hpp"

#include "harmonic/curvio/invariants.hpp"

#include <boost/math/special_functions/erf.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace harmonic::curvio {

namespace {

constexpr int kBlock = 1024;

/// Homogeneous polynomial sum_t c_t u^{alpha_t} with exponent vectors alpha_t.
struct Form {
  std::vector<std::vector<int>> indices;  // sorted index tuple per monomial
  std::vector<double> coeffs;

  double eval(const Eigen::VectorXd& u) const {
    double s = 0.0;
    for (std::size_t t = 0; t < coeffs.size(); ++t) {
      double m = coeffs[t];
      for (int i : indices[t]) m *= u[i];
      s += m;
    }
    return s;
  }
};

/// Coefficients of u^{i_1}...u^{i_d} contracted against a tensor slot-wise:
/// for each sorted tuple, sums the tensor over its distinct permutations.
template <class Tensor>
Form symmetric_form(int n, int degree, Tensor&& tensor) {
  Form f;
  std::vector<int> tuple(degree, 0);
  while (true) {
    std::vector<int> perm = tuple;
    double c = 0.0;
    do {
      c += tensor(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (c != 0.0) {
      f.indices.push_back(tuple);
      f.coeffs.push_back(c);
    }
    int pos = degree - 1;
    while (pos >= 0 && tuple[pos] == n - 1) --pos;
    if (pos < 0) break;
    ++tuple[pos];
    for (int q = pos + 1; q < degree; ++q) tuple[q] = tuple[pos];
  }
  return f;
}

double double_factorial_odd(int e) {  // (e - 1)!! for even e
  double r = 1.0;
  for (int k = e - 1; k > 1; k -= 2) r *= k;
  return r;
}

/// Sphere mean of u^{i_1}...u^{i_d} given as an index list; the denominator
/// n(n+2)...(n+d-2) is supplied by the caller.
double moment_numerator(int n, const std::vector<int>& idx, std::vector<int>& scratch) {
  scratch.assign(n, 0);
  for (int i : idx) ++scratch[i];
  double r = 1.0;
  for (int e : scratch) {
    if (e % 2) return 0.0;
    r *= double_factorial_odd(e);
  }
  return r;
}

double moment_denominator(int n, int degree) {
  double d = 1.0;
  for (int j = 0; j < degree / 2; ++j) d *= n + 2 * j;
  return d;
}

struct T2Forms {
  std::vector<Form> forms;      // one cubic form per entry j <= l of R'_u
  std::vector<double> weights;  // 1 on the diagonal, 2 off it
};

T2Forms t2_forms(const CurvaturePoint& cp) {
  T2Forms out;
  const int n = cp.dim();
  if (!cp.has_derivative()) return out;
  for (int j = 0; j < n; ++j)
    for (int l = j; l < n; ++l) {
      Form f = symmetric_form(n, 3, [&](const std::vector<int>& p) { return cp.DR(p[0], j, p[1], l, p[2]); });
      if (f.coeffs.empty()) continue;
      out.forms.push_back(std::move(f));
      out.weights.push_back(j == l ? 1.0 : 2.0);
    }
  return out;
}

Form q0_form(const CurvaturePoint& cp) {
  const int n = cp.dim();
  const std::vector<double> a = a_tensor(cp);
  auto at = [&](const std::vector<int>& p) {
    return a[((std::size_t(p[0]) * n + p[1]) * n + p[2]) * n + p[3]];
  };
  return symmetric_form(n, 4, at);
}

std::mt19937_64 block_engine(std::uint64_t seed, std::uint64_t block) {
  std::seed_seq seq{std::uint32_t(seed), std::uint32_t(seed >> 32), std::uint32_t(block),
                    std::uint32_t(block >> 32)};
  return std::mt19937_64(seq);
}

Eigen::VectorXd random_direction(int n, std::mt19937_64& eng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::VectorXd u(n);
  do {
    for (int i = 0; i < n; ++i) u[i] = normal(eng);
  } while (u.norm() == 0.0);
  return u / u.norm();
}

template <class Fn>
MonteCarloEstimate monte_carlo(int n, int samples, std::uint64_t seed, Fn&& fn) {
  if (samples < 2) throw std::invalid_argument("Monte Carlo needs at least two samples");
  MonteCarloEstimate est;
  est.samples = samples;
  double sum = 0.0, sumsq = 0.0;
  for (int start = 0, block = 0; start < samples; start += kBlock, ++block) {
    auto eng = block_engine(seed, std::uint64_t(block));
    const int count = std::min(kBlock, samples - start);
    double bs = 0.0, bq = 0.0;
    for (int s = 0; s < count; ++s) {
      const double x = fn(random_direction(n, eng));
      bs += x;
      bq += x * x;
    }
    sum += bs;
    sumsq += bq;
  }
  est.mean = sum / samples;
  const double var = std::max(0.0, (sumsq - samples * est.mean * est.mean) / (samples - 1));
  est.std_error = std::sqrt(var / samples);
  return est;
}

std::vector<int> first_primes(int count) {
  std::vector<int> primes;
  for (int c = 2; int(primes.size()) < count; ++c) {
    bool prime = true;
    for (int p : primes) {
      if (p * p > c) break;
      if (c % p == 0) {
        prime = false;
        break;
      }
    }
    if (prime) primes.push_back(c);
  }
  return primes;
}

double radical_inverse(std::uint64_t index, int base) {
  double f = 1.0, r = 0.0;
  while (index > 0) {
    f /= base;
    r += f * double(index % base);
    index /= base;
  }
  return r;
}

} // namespace

double sphere_volume(int n) {
  return 2.0 * std::pow(std::numbers::pi, 0.5 * n) / std::tgamma(0.5 * n);
}

Rational sphere_moment(int n, std::span<const int> exponents) {
  int degree = 0;
  Rational num(1);
  for (int e : exponents) {
    if (e < 0) throw std::invalid_argument("negative exponent");
    if (e % 2) return Rational(0);
    for (int k = e - 1; k > 1; k -= 2) num *= k;
    degree += e;
  }
  Rational den(1);
  for (int j = 0; j < degree / 2; ++j) den *= n + 2 * j;
  return num / den;
}

Rational fourth_moment(int n, const std::array<int, 4>& pattern) {
  std::vector<int> exps(std::max(n, 1 + *std::max_element(pattern.begin(), pattern.end())), 0);
  for (int i : pattern) {
    if (i < 0) throw std::invalid_argument("negative index in moment pattern");
    ++exps[i];
  }
  return sphere_moment(n, exps);
}

double sphere_average_T2(const CurvaturePoint& cp) {
  const double n = cp.dim();
  return 3.0 * norm_dr2(cp) / (n * (n + 2) * (n + 4));
}

double sphere_average_Q0(const CurvaturePoint& cp) {
  const double n = cp.dim();
  const double C = ricci(cp).trace() / n;
  return (n * C * C * C + 2.0 * r_circ(cp) - 0.25 * r_hat(cp)) / (n * (n + 2));
}

double exact_mean_T2(const CurvaturePoint& cp) {
  const int n = cp.dim();
  const T2Forms tf = t2_forms(cp);
  std::vector<int> scratch, idx(6);
  double total = 0.0;
  for (std::size_t f = 0; f < tf.forms.size(); ++f) {
    const Form& form = tf.forms[f];
    double s = 0.0;
    for (std::size_t a = 0; a < form.coeffs.size(); ++a)
      for (std::size_t b = 0; b < form.coeffs.size(); ++b) {
        std::copy(form.indices[a].begin(), form.indices[a].end(), idx.begin());
        std::copy(form.indices[b].begin(), form.indices[b].end(), idx.begin() + 3);
        s += form.coeffs[a] * form.coeffs[b] * moment_numerator(n, idx, scratch);
      }
    total += tf.weights[f] * s;
  }
  return total / moment_denominator(n, 6);
}

double exact_mean_Q0(const CurvaturePoint& cp) {
  const int n = cp.dim();
  const Form form = q0_form(cp);
  std::vector<int> scratch;
  double s = 0.0;
  for (std::size_t t = 0; t < form.coeffs.size(); ++t)
    s += form.coeffs[t] * moment_numerator(n, form.indices[t], scratch);
  return s / moment_denominator(n, 4);
}

std::vector<double> a_tensor(const CurvaturePoint& cp) {
  const int n = cp.dim();
  const std::size_t n2 = std::size_t(n) * n;
  // W(i,k; c,d) = sum_{j,l} R_ijkl R_cjdl
  std::vector<double> w(n2 * n2, 0.0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j)
        for (int l = 0; l < n; ++l) {
          const double r = cp.R(i, j, k, l);
          if (r == 0.0) continue;
          double* row = &w[(std::size_t(i) * n + k) * n2];
          for (int c = 0; c < n; ++c)
            for (int d = 0; d < n; ++d) row[c * n + d] += r * cp.R(c, j, d, l);
        }
  // A(a,b,c,d) = sum_{i,k} R_aibk W(i,k; c,d)
  std::vector<double> a(n2 * n2, 0.0);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
          const double r = cp.R(p, i, q, k);
          if (r == 0.0) continue;
          const double* row = &w[(std::size_t(i) * n + k) * n2];
          double* out = &a[(std::size_t(p) * n + q) * n2];
          for (std::size_t cd = 0; cd < n2; ++cd) out[cd] += r * row[cd];
        }
  return a;
}

std::array<double, 3> a_contractions(const CurvaturePoint& cp) {
  const int n = cp.dim();
  const std::vector<double> a = a_tensor(cp);
  auto at = [&](int p, int q, int r, int s) { return a[((std::size_t(p) * n + q) * n + r) * n + s]; };
  std::array<double, 3> out{0.0, 0.0, 0.0};
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      out[0] += at(p, p, q, q);
      out[1] += at(p, q, p, q);
      out[2] += at(p, q, q, p);
    }
  return out;
}

MonteCarloEstimate monte_carlo_T2(const CurvaturePoint& cp, int samples, std::uint64_t seed) {
  const T2Forms tf = t2_forms(cp);
  return monte_carlo(cp.dim(), samples, seed, [&](const Eigen::VectorXd& u) {
    double s = 0.0;
    for (std::size_t f = 0; f < tf.forms.size(); ++f) {
      const double v = tf.forms[f].eval(u);
      s += tf.weights[f] * v * v;
    }
    return s;
  });
}

MonteCarloEstimate monte_carlo_Q0(const CurvaturePoint& cp, int samples, std::uint64_t seed) {
  const Form form = q0_form(cp);
  return monte_carlo(cp.dim(), samples, seed, [&](const Eigen::VectorXd& u) { return form.eval(u); });
}

std::vector<Eigen::VectorXd> uniform_directions(int n, int count, std::uint64_t seed) {
  std::vector<Eigen::VectorXd> out;
  out.reserve(std::max(count, 0));
  for (int start = 0, block = 0; start < count; start += kBlock, ++block) {
    auto eng = block_engine(seed, std::uint64_t(block));
    for (int s = 0; s < std::min(kBlock, count - start); ++s) out.push_back(random_direction(n, eng));
  }
  return out;
}

std::vector<Eigen::VectorXd> halton_directions(int n, int count) {
  const std::vector<int> primes = first_primes(n);
  std::vector<Eigen::VectorXd> out;
  out.reserve(std::max(count, 0));
  for (std::uint64_t index = 1; int(out.size()) < count; ++index) {
    Eigen::VectorXd u(n);
    for (int i = 0; i < n; ++i) {
      const double x = radical_inverse(index, primes[i]);
      u[i] = std::numbers::sqrt2 * boost::math::erf_inv(2.0 * x - 1.0);
    }
    if (u.norm() == 0.0) continue;
    out.push_back(u / u.norm());
  }
  return out;
}

} // namespace harmonic::curvio
