#include "harmonic/cli/space_spec.hpp"

#include "harmonic/models/models.hpp"

#include <charconv>
#include <map>
#include <set>
#include <stdexcept>

namespace harmonic::cli {

namespace {

long long parse_int(const std::string& key, const std::string& text) {
  long long v = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) throw std::invalid_argument("'" + key + "' expects an integer, got '" + text + "'");
  return v;
}

Rational parse_rational(const std::string& key, const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(key, text));
  const long long num = parse_int(key, text.substr(0, slash));
  const long long den = parse_int(key, text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("'" + key + "' has a zero denominator");
  return Rational(num) / Rational(den);
}

int irreducible_dim(int q) {
  switch (q) {
    case 1: return 2;
    case 2:
    case 3: return 4;
    case 7: return 8;
    default: throw std::invalid_argument("unsupported Damek-Ricci center dimension q=" + std::to_string(q));
  }
}

} // namespace

bool looks_like_spec(const std::string& text) {
  return text.starts_with("flat:") || text.starts_with("form:") || text.starts_with("dr:");
}

SpaceSpec SpaceSpec::parse(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("space spec '" + text + "' lacks a ':'");
  const std::string kind = text.substr(0, colon);

  std::map<std::string, std::string> fields;
  std::string rest = text.substr(colon + 1);
  std::size_t start = 0;
  while (start <= rest.size()) {
    const auto comma = rest.find(',', start);
    const std::string item = rest.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw std::invalid_argument("malformed field '" + item + "' in '" + text + "'");
    if (!fields.emplace(item.substr(0, eq), item.substr(eq + 1)).second)
      throw std::invalid_argument("duplicate field '" + item.substr(0, eq) + "'");
    if (comma == std::string::npos) break;
    start = comma + 1;
  }

  auto require_only = [&](std::set<std::string> allowed) {
    for (const auto& [k, v] : fields)
      if (!allowed.contains(k)) throw std::invalid_argument("unexpected field '" + k + "' for " + kind);
  };
  auto need = [&](const std::string& k) -> const std::string& {
    auto it = fields.find(k);
    if (it == fields.end()) throw std::invalid_argument(kind + " spec needs '" + k + "'");
    return it->second;
  };

  SpaceSpec s;
  if (kind == "flat") {
    require_only({"n"});
    s.kind = Kind::flat;
    s.n = int(parse_int("n", need("n")));
    if (s.n < 2) throw std::invalid_argument("dimension must be at least 2");
  } else if (kind == "form") {
    require_only({"n", "k"});
    s.kind = Kind::form;
    s.n = int(parse_int("n", need("n")));
    s.kappa = parse_rational("k", need("k"));
    if (s.n < 2) throw std::invalid_argument("dimension must be at least 2");
  } else if (kind == "dr") {
    s.kind = Kind::damek_ricci;
    const int q = int(parse_int("q", need("q")));
    s.module.q = q;
    if (q == 0) {
      require_only({"q", "n"});
      s.n = int(parse_int("n", need("n")));
      if (s.n < 2) throw std::invalid_argument("dimension must be at least 2");
      s.module.a_plus = s.n - 1;
      s.module.a_minus = 0;
    } else {
      const int block = irreducible_dim(q);
      if (q == 3) {
        require_only({"q", "p", "m"});
        s.module.a_plus = int(parse_int("p", need("p")));
        s.module.a_minus = fields.contains("m") ? int(parse_int("m", fields.at("m"))) : 0;
      } else {
        require_only({"q", "p"});
        s.module.a_plus = int(parse_int("p", need("p")));
        s.module.a_minus = 0;
      }
      if (s.module.a_plus < 0 || s.module.a_minus < 0 || s.module.a_plus + s.module.a_minus == 0)
        throw std::invalid_argument("module multiplicities must be nonnegative and not both zero");
      s.n = 1 + block * (s.module.a_plus + s.module.a_minus) + q;
    }
  } else {
    throw std::invalid_argument("unknown space kind '" + kind + "' (expected flat, form or dr)");
  }
  return s;
}

std::string SpaceSpec::to_string() const {
  switch (kind) {
    case Kind::flat: return "flat:n=" + std::to_string(n);
    case Kind::form: return "form:n=" + std::to_string(n) + ",k=" + harmonic::to_string(kappa);
    case Kind::damek_ricci:
      if (module.q == 0) return "dr:q=0,n=" + std::to_string(n);
      if (module.q == 3)
        return "dr:q=3,p=" + std::to_string(module.a_plus) + ",m=" + std::to_string(module.a_minus);
      return "dr:q=" + std::to_string(module.q) + ",p=" + std::to_string(module.a_plus);
  }
  return {};
}

int SpaceSpec::dimension() const { return n; }

curvio::CurvaturePoint SpaceSpec::build() const {
  switch (kind) {
    case Kind::flat: return models::space_form(n, 0.0);
    case Kind::form: return models::space_form(n, harmonic::to_double(kappa));
    case Kind::damek_ricci: return models::curvature_point(models::damek_ricci(module));
  }
  throw std::logic_error("unreachable space kind");
}

} // namespace harmonic::cli
