#include "harmonic/counting.hpp"

#include <vector>

namespace harmonic {

BigInt factorial(int m) {
  BigInt r = 1;
  for (int i = 2; i <= m; ++i) r *= i;
  return r;
}

BigInt binomial(int m, int k) {
  if (k < 0 || k > m) return 0;
  BigInt r = 1;
  for (int i = 0; i < k; ++i) {
    r *= (m - i);
    r /= (i + 1);
  }
  return r;
}

BigInt bell(int m) {
  if (m < 0) throw DomainError("bell: negative argument");
  std::vector<BigInt> row{1};
  BigInt result = 1; // bell(0)
  for (int i = 1; i <= m; ++i) {
    std::vector<BigInt> next;
    next.reserve(i + 1);
    next.push_back(row.back());
    for (const BigInt& v : row) next.push_back(next.back() + v);
    row = std::move(next);
    result = row.front();
  }
  return result;
}

BigInt fubini(int m) {
  if (m < 0) throw DomainError("fubini: negative argument");
  std::vector<BigInt> f(m + 1);
  f[0] = 1;
  for (int i = 1; i <= m; ++i) {
    BigInt sum = 0;
    for (int j = 1; j <= i; ++j) sum += binomial(i, j) * f[i - j];
    f[i] = sum;
  }
  return f[m];
}

BigInt stirling2(int m, int p) {
  if (m < 0 || p < 0) throw DomainError("stirling2: negative argument");
  if (p > m) return 0;
  if (m == 0) return 1; // S(0,0)
  if (p == 0) return 0;
  std::vector<BigInt> row(p + 1, 0);
  row[0] = 1; // S(0,0)
  for (int i = 1; i <= m; ++i) {
    for (int j = std::min(i, p); j >= 1; --j) row[j] = j * row[j] + row[j - 1];
    row[0] = 0;
  }
  return row[p];
}

BigInt treeCount(int m) {
  if (m < 1) throw DomainError("treeCount: m must be positive");
  if (m == 1) return 1;
  BigInt r = 1;
  for (int i = 0; i < m - 2; ++i) r *= m;
  return r;
}

BigInt forestCount(int m) {
  if (m < 0) throw DomainError("forestCount: negative argument");
  // f(m) = sum_k C(m-1,k-1) k^(k-2) f(m-k): pick vertex 1's component.
  std::vector<BigInt> f(m + 1);
  f[0] = 1;
  for (int i = 1; i <= m; ++i) {
    BigInt sum = 0;
    for (int k = 1; k <= i; ++k)
      sum += binomial(i - 1, k - 1) * treeCount(k) * f[i - k];
    f[i] = sum;
  }
  return f[m];
}

BigInt mobiusToTop(const SetPartition& sigma) {
  int l = sigma.blockCount();
  BigInt v = factorial(l - 1);
  return (l % 2 == 1) ? v : -v;
}

BigInt treeWeight(const SetPartition& pi) {
  Rational r = 1;
  for (const auto& b : pi.blocks())
    r *= ratPow(BigInt(b.size()), static_cast<int>(b.size()) - 2);
  if (!isIntegral(r)) throw InternalError("treeWeight: non-integral product");
  return numerator(r);
}

BigInt forestSum(const SetPartition& sigma) {
  BigInt r = 1;
  for (const auto& b : sigma.blocks()) r *= forestCount(static_cast<int>(b.size()));
  return r;
}

BigInt forestSumByRefinement(const SetPartition& sigma) {
  BigInt sum = 0;
  forEachSetPartition(sigma.n(), [&](const SetPartition& tau) {
    if (isRefinementOf(tau, sigma)) sum += treeWeight(tau);
    return true;
  });
  return sum;
}

} // namespace harmonic
