#include "bkp/serialize.hpp"

#include <sstream>

namespace bkp {

json rat_to_json(const Rat& r) { return r.to_string(); }

json scalar_to_json(const Scalar& s, int fallback_order) {
  json j;
  json terms = json::array();
  for (const auto& [key, c] : s.terms()) {
    json t;
    t["p"] = key.first;
    t["beta"] = key.second;
    t["num"] = c.num_string();
    t["den"] = c.den_string();
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  j["beta_order"] =
      s.beta_order() == Scalar::kBetaExact ? fallback_order : s.beta_order();
  return j;
}

json laurent_to_json(const LaurentZ& f, int fallback_order) {
  json j;
  j["lo"] = f.lo();
  j["hi"] = f.hi();
  j["tail_exact"] = f.tail_exact();
  json coeffs = json::array();
  for (long d = f.lo(); d <= f.hi(); ++d) {
    const Scalar& c = f.at(d);
    if (c.is_zero()) continue;
    json e;
    e["degree"] = d;
    e["value"] = scalar_to_json(c, fallback_order);
    coeffs.push_back(std::move(e));
  }
  j["coefficients"] = std::move(coeffs);
  return j;
}

json tpoly_to_json(const TPoly& f, int fallback_order) {
  json j;
  j["weight_cutoff"] = f.weight_cutoff();
  json terms = json::array();
  for (const auto& [m, c] : f.terms()) {
    json t;
    t["monomial"] = tmono_to_string(m);
    t["exponents"] = m;
    t["value"] = scalar_to_json(c, fallback_order);
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

std::string scalar_to_csv(const Scalar& s) {
  std::ostringstream os;
  os << "p,beta,coefficient\n";
  for (const auto& [key, c] : s.terms())
    os << key.first << "," << key.second << "," << c.to_string() << "\n";
  return os.str();
}

std::string laurent_to_csv(const LaurentZ& f) {
  std::ostringstream os;
  os << "degree,p,beta,coefficient\n";
  for (long d = f.lo(); d <= f.hi(); ++d)
    for (const auto& [key, c] : f.at(d).terms())
      os << d << "," << key.first << "," << key.second << "," << c.to_string()
         << "\n";
  return os.str();
}

std::string tpoly_to_csv(const TPoly& f) {
  std::ostringstream os;
  os << "monomial,p,beta,coefficient\n";
  for (const auto& [m, c] : f.terms())
    for (const auto& [key, v] : c.terms())
      os << tmono_to_string(m) << "," << key.first << "," << key.second << ","
         << v.to_string() << "\n";
  return os.str();
}

}  // namespace bkp
