#include "bkp/tau.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace bkp {

Rat pair_vev(long i, long j) {
  if (i + j != 0) return Rat(0);
  if (i == 0) return Rat(1, 2);
  if (i < 0) return Rat(j % 2 == 0 ? 1 : -1);
  return Rat(0);
}

Rat vev(const std::vector<long>& word) {
  if (word.size() % 2 != 0) return Rat(0);
  if (word.empty()) return Rat(1);
  Rat acc(0);
  std::vector<long> rest(word.size() - 2);
  for (size_t j = 1; j < word.size(); ++j) {
    Rat p = pair_vev(word[0], word[j]);
    if (p.is_zero()) continue;
    size_t t = 0;
    for (size_t s = 1; s < word.size(); ++s)
      if (s != j) rest[t++] = word[s];
    Rat sub = vev(rest);
    if (sub.is_zero()) continue;
    Rat term = p * sub;
    acc += (j % 2 == 1) ? term : -term;
  }
  return acc;
}

Scalar tau_coeff(const AffineProvider& ap, const StrictPartition& mu) {
  size_t l = mu.length();
  std::vector<long> idx = mu.parts;
  if (l % 2 != 0) idx.push_back(0);
  size_t n = idx.size();
  AntisymMatrix m(n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) m.set(i, j, ap.a(idx[i], idx[j]));
  Scalar pf = pfaffian(m);
  if (((l + 1) / 2) % 2 != 0) pf = -pf;
  return pf;
}

TPoly tau_expand(const AffineProvider& ap, int W) {
  TPoly sum = TPoly::one(W);  // empty partition: coefficient 1
  for (const auto& mu : strict_partitions_up_to(W))
    sum += q_strict(mu, W).scaled(tau_coeff(ap, mu));
  return sum;
}

namespace {

// One operator insertion: coefficient a(n, m) together with the letters
// [m, n] it appends to the word.
struct ABlock {
  Scalar c;
  long first, second;
};

std::vector<ABlock> a_blocks(const AffineProvider& ap,
                             const std::set<long>& index_set) {
  std::vector<ABlock> blocks;
  for (long n : index_set)
    for (long m : index_set) {
      if (n == m) continue;
      Scalar c = ap.a(n, m);
      if (!c.is_zero()) blocks.push_back({std::move(c), m, n});
    }
  return blocks;
}

// <phi_word exp(A)> with A restricted to the given index set, expanded
// through A^order. Ordered tuples of blocks weighted by 1/k!.
Scalar vev_word_exp_a(const AffineProvider& ap, const std::vector<long>& bra,
                      const std::set<long>& index_set, long order) {
  std::vector<ABlock> blocks = a_blocks(ap, index_set);
  Scalar total = Scalar::constant(vev(bra));
  std::vector<size_t> pick;
  std::vector<long> word;
  std::function<void(size_t, Scalar&, long)> walk = [&](size_t depth,
                                                        Scalar& acc, long k) {
    if (depth == static_cast<size_t>(k)) {
      word.assign(bra.begin(), bra.end());
      Scalar c = Scalar::constant(Rat(1));
      for (size_t b : pick) {
        word.push_back(blocks[b].first);
        word.push_back(blocks[b].second);
        c *= blocks[b].c;
      }
      Rat v = vev(word);
      if (!v.is_zero()) {
        c.scale(v);
        acc += c;
      }
      return;
    }
    for (size_t b = 0; b < blocks.size(); ++b) {
      pick.push_back(b);
      walk(depth + 1, acc, k);
      pick.pop_back();
    }
  };
  for (long k = 1; k <= order; ++k) {
    Scalar acc;
    pick.clear();
    walk(0, acc, k);
    acc.scale(Rat(1) / rat_factorial(k));
    total += acc;
  }
  return total;
}

}  // namespace

Scalar oracle_coeff(const AffineProvider& ap, const StrictPartition& mu,
                    long order) {
  size_t l = mu.length();
  long needed = static_cast<long>((l + 1) / 2);
  if (order < needed) {
    std::ostringstream os;
    os << "oracle_coeff: order too small, need at least " << needed;
    throw std::invalid_argument(os.str());
  }
  // Bra word: optional phi_0, then phi_{-mu_l} ... phi_{-mu_1}.
  std::vector<long> bra;
  if (l % 2 != 0) bra.push_back(0);
  for (size_t i = l; i-- > 0;) bra.push_back(-mu.parts[i]);
  std::set<long> index_set(mu.parts.begin(), mu.parts.end());
  index_set.insert(0);
  Scalar avg = vev_word_exp_a(ap, bra, index_set, order);
  Rat norm = Rat(1);
  for (size_t i = 0; i < l / 2; ++i) norm /= Rat(2);
  if (mu.weight() % 2 != 0) norm = -norm;
  avg.scale(norm);
  return avg;
}

Scalar oracle_coeff(const AffineProvider& ap, const StrictPartition& mu) {
  return oracle_coeff(ap, mu, static_cast<long>((mu.length() + 1) / 2) + 1);
}

Scalar pair_vev_conjugated(const AffineProvider& ap, long i, long j) {
  std::set<long> ms = {0, std::abs(i), std::abs(j)};
  // Conjugated generator as a list of (coefficient, index) pairs. For
  // positive index the generator is untouched; otherwise it picks up a tail
  // over nonnegative indices, of which only those in `ms` can pair nonzero.
  auto conj = [&](long x) {
    std::vector<std::pair<Scalar, long>> out;
    out.emplace_back(Scalar::constant(Rat(1)), x);
    if (x > 0) return out;
    for (long m : ms) {
      Scalar c = ap.a(0, m) * ap.a(-x, 0) - ap.a(-x, m);
      c.scale(Rat(x % 2 == 0 ? 2 : -2));
      if (!c.is_zero()) out.emplace_back(std::move(c), m);
    }
    return out;
  };
  Scalar total;
  for (const auto& [ci, xi] : conj(i))
    for (const auto& [cj, xj] : conj(j)) {
      Rat p = pair_vev(xi, xj);
      if (p.is_zero()) continue;
      Scalar c = ci * cj;
      c.scale(p);
      total += c;
    }
  return total;
}

Scalar pair_vev_series(const AffineProvider& ap, long i, long j) {
  std::set<long> index_set = {0, std::abs(i), std::abs(j)};
  return vev_word_exp_a(ap, {i, j}, index_set, 2);
}

}  // namespace bkp
