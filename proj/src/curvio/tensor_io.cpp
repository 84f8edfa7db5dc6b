#include "harmonic/curvio/tensor_io.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace harmonic::curvio {

namespace {

std::string format_value(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

[[noreturn]] void fail(int line, const std::string& what) {
  throw std::runtime_error("tensor file line " + std::to_string(line) + ": " + what);
}

} // namespace

void write_curvature_point(std::ostream& os, const CurvaturePoint& cp) {
  const int n = cp.dim();
  os << "n " << n << "\nR\n";
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          const double r = cp.R(i, j, k, l);
          if (r != 0.0) os << i << ' ' << j << ' ' << k << ' ' << l << ' ' << format_value(r) << '\n';
        }
  if (!cp.has_derivative()) return;
  os << "DR\n";
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          for (int m = 0; m < n; ++m) {
            const double d = cp.DR(i, j, k, l, m);
            if (d != 0.0)
              os << i << ' ' << j << ' ' << k << ' ' << l << ' ' << m << ' ' << format_value(d) << '\n';
          }
}

CurvaturePoint read_curvature_point(std::istream& is) {
  enum class Block { none, curvature, derivative };
  std::optional<CurvaturePoint> cp;
  Block block = Block::none;
  std::string raw;
  int line_no = 0;
  while (std::getline(is, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream line(raw);
    std::string head;
    if (!(line >> head)) continue;

    if (head == "n") {
      int n = 0;
      if (cp) fail(line_no, "duplicate dimension header");
      if (!(line >> n) || n < 1) fail(line_no, "expected a positive dimension");
      cp.emplace(n);
      continue;
    }
    if (!cp) fail(line_no, "dimension header 'n <dim>' must come first");
    if (head == "R") {
      block = Block::curvature;
      continue;
    }
    if (head == "DR") {
      block = Block::derivative;
      cp->enable_derivative();
      continue;
    }
    if (block == Block::none) fail(line_no, "component outside an R or DR block");

    const int want = block == Block::curvature ? 4 : 5;
    int idx[5] = {0, 0, 0, 0, 0};
    std::istringstream fields(raw);
    for (int t = 0; t < want; ++t) {
      if (!(fields >> idx[t])) fail(line_no, "expected " + std::to_string(want) + " indices");
      if (idx[t] < 0 || idx[t] >= cp->dim()) fail(line_no, "index out of range");
    }
    double value = 0.0;
    if (!(fields >> value)) fail(line_no, "missing component value");
    std::string extra;
    if (fields >> extra) fail(line_no, "trailing text '" + extra + "'");
    if (block == Block::curvature)
      cp->R(idx[0], idx[1], idx[2], idx[3]) = value;
    else
      cp->DR(idx[0], idx[1], idx[2], idx[3], idx[4]) = value;
  }
  if (!cp) throw std::runtime_error("tensor file has no dimension header");
  return std::move(*cp);
}

CurvaturePoint load_curvature_point(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open tensor file " + path);
  return read_curvature_point(in);
}

void save_curvature_point(const std::string& path, const CurvaturePoint& cp) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write tensor file " + path);
  write_curvature_point(out, cp);
}

} // namespace harmonic::curvio
