#include "bkp/partitions.hpp"

#include <sstream>
#include <stdexcept>

namespace bkp {

namespace {

template <class P>
std::string parts_to_string(const P& p) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < p.parts.size(); ++i) {
    if (i) os << ",";
    os << p.parts[i];
  }
  os << ")";
  return os.str();
}

long parts_weight(const std::vector<long>& parts) {
  long w = 0;
  for (long p : parts) w += p;
  return w;
}

// Both enumerators emit in lexicographically decreasing order: the largest
// admissible first part is tried first, then recursively.
void descend_strict(long w, long cap, std::vector<long>& acc,
                    std::vector<std::vector<long>>& out) {
  if (w == 0) {
    out.push_back(acc);
    return;
  }
  for (long p = std::min(w, cap); p >= 1; --p) {
    acc.push_back(p);
    descend_strict(w - p, p - 1, acc, out);
    acc.pop_back();
  }
}

void descend_odd(long w, long cap, std::vector<long>& acc,
                 std::vector<std::vector<long>>& out) {
  if (w == 0) {
    out.push_back(acc);
    return;
  }
  long start = std::min(w, cap);
  if (start % 2 == 0) --start;
  for (long p = start; p >= 1; p -= 2) {
    acc.push_back(p);
    descend_odd(w - p, p, acc, out);
    acc.pop_back();
  }
}

}  // namespace

long StrictPartition::weight() const { return parts_weight(parts); }
long OddPartition::weight() const { return parts_weight(parts); }
std::string StrictPartition::to_string() const { return parts_to_string(*this); }
std::string OddPartition::to_string() const { return parts_to_string(*this); }

std::vector<StrictPartition> strict_partitions(long w) {
  if (w < 0) throw std::invalid_argument("strict_partitions: negative weight");
  std::vector<std::vector<long>> raw;
  std::vector<long> acc;
  descend_strict(w, w, acc, raw);
  std::vector<StrictPartition> out;
  out.reserve(raw.size());
  for (auto& v : raw) out.push_back(StrictPartition{std::move(v)});
  return out;
}

std::vector<OddPartition> odd_partitions(long w) {
  if (w < 0) throw std::invalid_argument("odd_partitions: negative weight");
  std::vector<std::vector<long>> raw;
  std::vector<long> acc;
  descend_odd(w, w, acc, raw);
  std::vector<OddPartition> out;
  out.reserve(raw.size());
  for (auto& v : raw) out.push_back(OddPartition{std::move(v)});
  return out;
}

std::vector<StrictPartition> strict_partitions_up_to(long w) {
  std::vector<StrictPartition> out;
  for (long n = 1; n <= w; ++n)
    for (auto& mu : strict_partitions(n)) out.push_back(std::move(mu));
  return out;
}

std::vector<OddPartition> odd_partitions_up_to(long w) {
  std::vector<OddPartition> out;
  for (long n = 1; n <= w; ++n)
    for (auto& mu : odd_partitions(n)) out.push_back(std::move(mu));
  return out;
}

Rat sym_factor(const OddPartition& mu) {
  Rat f(1);
  long run = 1;
  for (size_t i = 0; i < mu.parts.size(); ++i) {
    f *= Rat(mu.parts[i]);
    if (i + 1 < mu.parts.size() && mu.parts[i + 1] == mu.parts[i]) {
      ++run;
      f *= Rat(run);
    } else {
      run = 1;
    }
  }
  return f;
}

std::optional<long> rh_genus(const OddPartition& mu, long b, int r) {
  long two_g = b * r + 2 - static_cast<long>(mu.length()) - mu.weight();
  if (two_g < 0 || two_g % 2 != 0) return std::nullopt;
  return two_g / 2;
}

}  // namespace bkp
