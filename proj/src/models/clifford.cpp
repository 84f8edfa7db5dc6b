#include "harmonic/models/models.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace harmonic::models {

namespace {

using Triple = std::array<int, 3>;

// Oriented triples e_a e_b = e_c of imaginary units.
const std::vector<Triple> kQuaternion = {{1, 2, 3}};
const std::vector<Triple> kOctonion = {{1, 2, 4}, {2, 3, 5}, {3, 4, 6}, {4, 5, 7},
                                       {5, 6, 1}, {6, 7, 2}, {7, 1, 3}};

/// e_a e_b as (sign, index) in the algebra spanned by e_0 = 1 and the units.
std::pair<int, int> unit_product(const std::vector<Triple>& triples, int a, int b) {
  if (a == 0) return {1, b};
  if (b == 0) return {1, a};
  if (a == b) return {-1, 0};
  for (const Triple& t : triples)
    for (int r = 0; r < 3; ++r) {
      const int x = t[r], y = t[(r + 1) % 3], z = t[(r + 2) % 3];
      if (x == a && y == b) return {1, z};
      if (x == b && y == a) return {-1, z};
    }
  throw std::logic_error("incomplete multiplication table");
}

/// Left multiplication by each imaginary unit on the division algebra of
/// dimension dim (4 or 8); the first q units are returned.
std::vector<Eigen::MatrixXd> left_multiplications(const std::vector<Triple>& triples, int dim, int q) {
  std::vector<Eigen::MatrixXd> out;
  for (int a = 1; a <= q; ++a) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
    for (int b = 0; b < dim; ++b) {
      const auto [sign, c] = unit_product(triples, a, b);
      m(c, b) = sign;
    }
    out.push_back(m);
  }
  return out;
}

std::vector<Eigen::MatrixXd> irreducible(int q, bool twisted) {
  switch (q) {
    case 1: {
      Eigen::MatrixXd j(2, 2);
      j << 0, -1, 1, 0;
      return {j};
    }
    case 2: return left_multiplications(kQuaternion, 4, 2);
    case 3: {
      auto js = left_multiplications(kQuaternion, 4, 3);
      if (twisted)
        for (auto& j : js) j = -j;
      return js;
    }
    case 7: return left_multiplications(kOctonion, 8, 7);
    default: throw std::invalid_argument("unsupported Clifford module q=" + std::to_string(q));
  }
}

} // namespace

std::vector<Eigen::MatrixXd> clifford_module(const CliffordModuleSpec& spec) {
  if (spec.q != 1 && spec.q != 2 && spec.q != 3 && spec.q != 7)
    throw std::invalid_argument("unsupported Clifford module q=" + std::to_string(spec.q));
  if (spec.a_plus < 0 || spec.a_minus < 0) throw std::invalid_argument("negative module multiplicity");
  if (spec.q != 3 && spec.a_minus != 0)
    throw std::invalid_argument("a_minus is only meaningful for q=3");
  if (spec.a_plus + spec.a_minus == 0) throw std::invalid_argument("empty Clifford module");

  std::vector<std::vector<Eigen::MatrixXd>> blocks;
  for (int i = 0; i < spec.a_plus; ++i) blocks.push_back(irreducible(spec.q, false));
  for (int i = 0; i < spec.a_minus; ++i) blocks.push_back(irreducible(spec.q, true));

  int dim = 0;
  for (const auto& b : blocks) dim += int(b.front().rows());
  std::vector<Eigen::MatrixXd> out(spec.q, Eigen::MatrixXd::Zero(dim, dim));
  int offset = 0;
  for (const auto& b : blocks) {
    const int d = int(b.front().rows());
    for (int a = 0; a < spec.q; ++a) out[a].block(offset, offset, d, d) = b[a];
    offset += d;
  }
  return out;
}

} // namespace harmonic::models
