#include "lensracks/poly.hpp"

#include <sstream>

#include "lensracks/errors.hpp"

namespace lensracks {

void Poly::add(const std::vector<int>& exps, long long coeff) {
  if (exps.size() != vars.size()) fail(Err::BadArgument, "exponent vector width mismatch");
  if (coeff == 0) return;
  auto it = terms.find(exps);
  if (it == terms.end())
    terms.emplace(exps, coeff);
  else if ((it->second += coeff) == 0)
    terms.erase(it);
}

std::string Poly::text() const {
  if (terms.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [exps, coeff] : terms) {
    if (!first) out << " + ";
    first = false;
    std::string mono;
    for (size_t i = 0; i < vars.size(); ++i) {
      if (exps[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += vars[i];
      if (exps[i] > 1) mono += '^' + std::to_string(exps[i]);
    }
    if (mono.empty())
      out << coeff;
    else if (coeff == 1)
      out << mono;
    else
      out << coeff << '*' << mono;
  }
  return out.str();
}

std::string Poly::machine_text(const std::string& name) const {
  std::ostringstream out;
  out << name;
  for (const auto& v : vars) out << ' ' << v;
  out << "\n";
  if (terms.empty() && vars.empty()) {
    out << 0 << "\n";
    return out.str();
  }
  for (const auto& [exps, coeff] : terms) {
    for (size_t i = 0; i < exps.size(); ++i) {
      if (i) out << ' ';
      out << exps[i];
    }
    if (!exps.empty()) out << '\t';
    out << coeff << "\n";
  }
  return out.str();
}

Poly Poly::specialize_to_one(const std::string& var) const {
  size_t idx = vars.size();
  for (size_t i = 0; i < vars.size(); ++i)
    if (vars[i] == var) idx = i;
  if (idx == vars.size()) fail(Err::BadArgument, "unknown variable " + var);
  Poly out;
  out.vars = vars;
  out.vars.erase(out.vars.begin() + static_cast<long>(idx));
  for (const auto& [exps, coeff] : terms) {
    std::vector<int> e = exps;
    e.erase(e.begin() + static_cast<long>(idx));
    out.add(e, coeff);
  }
  return out;
}

long long Poly::value_at_one() const {
  long long sum = 0;
  for (const auto& [exps, coeff] : terms) sum += coeff;
  return sum;
}

}  // namespace lensracks
