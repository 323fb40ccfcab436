#include "harmonic/oracles.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <thread>

namespace harmonic {

std::vector<Rational> fitPolynomialExact(const std::vector<Rational>& values) {
  if (values.empty()) throw DomainError("fit: no sample points");
  int d = static_cast<int>(values.size()) - 1;
  // Vandermonde system in t = 0..d, solved by exact Gaussian elimination.
  std::vector<std::vector<Rational>> m(d + 1, std::vector<Rational>(d + 2));
  for (int r = 0; r <= d; ++r) {
    Rational power = 1;
    for (int c = 0; c <= d; ++c) {
      m[r][c] = power;
      power *= r;
    }
    m[r][d + 1] = values[r];
  }
  for (int col = 0; col <= d; ++col) {
    int pivot = col;
    while (pivot <= d && m[pivot][col] == 0) ++pivot;
    if (pivot > d) throw InternalError("fit: singular Vandermonde system");
    std::swap(m[col], m[pivot]);
    for (int r = 0; r <= d; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rational factor = m[r][col] / m[col][col];
      for (int c = col; c <= d + 1; ++c) m[r][c] -= factor * m[col][c];
    }
  }
  std::vector<Rational> coeffs(d + 1);
  for (int r = 0; r <= d; ++r) coeffs[r] = m[r][d + 1] / m[r][r];
  for (int r = 0; r <= d; ++r)
    if (evalPolynomial(coeffs, r) != values[r])
      throw InternalError("fit: nonzero residual at sample point");
  return coeffs;
}

Rational evalPolynomial(const std::vector<Rational>& coeffs, long long t) {
  Rational v = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * t + *it;
  return v;
}

namespace {

// Facet data of t*H_{n,n} split by side. A candidate for one side is a full
// coordinate vector (the first coordinate recovered from the sum equality)
// together with its partial sums over the mixed-row subsets.
struct DilateSystem {
  int n;
  long long t, total;
  std::vector<Mask> properSubsets;
  std::vector<Mask> mixedS, mixedT;
  std::vector<long long> mixedRhs;

  DilateSystem(int nIn, long long tIn) : n(nIn), t(tIn) {
    total = t * equalitySumValue(n);
    for (Mask S = 1; S < fullMask(n); ++S) properSubsets.push_back(S);
    for (const auto& f : facetSystem(n)) {
      if (f.S == fullMask(n) || f.T == fullMask(n)) continue;
      mixedS.push_back(f.S);
      mixedT.push_back(f.T);
      mixedRhs.push_back(t * f.rhs);
    }
  }

  // All lattice vectors of one side's marginal: sum = total and every proper
  // subset sum at least t*|S|(|S|+1)/2. Returns each candidate's mixed sums.
  std::vector<std::vector<long long>> sideCandidates(bool xSide) const {
    const auto& rowMasks = xSide ? mixedS : mixedT;
    std::vector<std::vector<long long>> out;
    std::vector<long long> coord(n);
    long long lo = t, hi = t * (n + 1);
    std::function<void(int, long long)> rec = [&](int i, long long partial) {
      if (i == n) {
        long long first = total - partial;
        if (first < lo || first > hi) return;
        coord[0] = first;
        for (Mask S : properSubsets) {
          long long s = std::popcount(S), sum = 0;
          for (int b = 0; b < n; ++b)
            if (S & (Mask(1) << b)) sum += coord[b];
          if (sum < t * s * (s + 1) / 2) return;
        }
        std::vector<long long> sums(rowMasks.size());
        for (std::size_t r = 0; r < rowMasks.size(); ++r) {
          long long sum = 0;
          for (int b = 0; b < n; ++b)
            if (rowMasks[r] & (Mask(1) << b)) sum += coord[b];
          sums[r] = sum;
        }
        out.push_back(std::move(sums));
        return;
      }
      // Unfixed after v: coordinates i+1..n-1 plus the recovered coord[0].
      long long unfixed = n - i;
      for (long long v = lo; v <= hi; ++v) {
        if (partial + v + lo * unfixed > total) break;
        if (partial + v + hi * unfixed < total) continue;
        coord[i] = v;
        rec(i + 1, partial + v);
      }
    };
    rec(1, 0);
    return out;
  }
};

} // namespace

long long dilatedLatticePointCount(int n, long long t, int threads) {
  if (n < 1) throw DomainError("dilate count: n must be positive");
  if (n > 8) throw CapError("dilate count: box enumeration infeasible past n=8");
  if (t < 0) throw DomainError("dilate count: negative dilate");
  if (t == 0 || n == 1) return 1;
  DilateSystem sys(n, t);
  auto xs = sys.sideCandidates(true);
  auto ys = sys.sideCandidates(false);
  std::size_t rows = sys.mixedRhs.size();
  auto countRange = [&](std::size_t beginX, std::size_t endX) {
    long long local = 0;
    for (std::size_t ix = beginX; ix < endX; ++ix) {
      const auto& xsums = xs[ix];
      for (const auto& ysums : ys) {
        bool ok = true;
        for (std::size_t r = 0; r < rows; ++r)
          if (xsums[r] + ysums[r] < sys.mixedRhs[r]) {
            ok = false;
            break;
          }
        if (ok) ++local;
      }
    }
    return local;
  };
  if (threads <= 1 || xs.size() < 64) return countRange(0, xs.size());
  std::vector<long long> partial(threads, 0);
  std::vector<std::thread> pool;
  std::size_t chunk = (xs.size() + threads - 1) / threads;
  for (int w = 0; w < threads; ++w) {
    std::size_t b = std::min(xs.size(), w * chunk);
    std::size_t e = std::min(xs.size(), b + chunk);
    pool.emplace_back([&, b, e, w] { partial[w] = countRange(b, e); });
  }
  for (auto& th : pool) th.join();
  long long sum = 0;
  for (long long v : partial) sum += v;
  return sum;
}

Rational ehrhartVolume(int n, const Caps& caps, int threads) {
  requireCap(n, caps.ehrhartN, "ehrhartVolume");
  int degree = 2 * n - 2;
  std::vector<Rational> samples;
  for (long long t = 0; t <= degree; ++t)
    samples.emplace_back(dilatedLatticePointCount(n, t, threads));
  auto coeffs = fitPolynomialExact(samples);
  if (n <= 3) {
    // One dilate beyond the interpolation support guards the degree.
    long long extra = dilatedLatticePointCount(n, degree + 1, threads);
    if (evalPolynomial(coeffs, degree + 1) != Rational(extra))
      throw InternalError("ehrhartVolume: fit fails at the extra dilate");
  }
  return coeffs.back();
}

FVector fVectorBrute(int n, const Caps& caps) {
  requireCap(n, caps.fvectorBruteN, "fVectorBrute");
  FVector fv;
  fv.n = n;
  fv.entries.assign(2 * n, 0);
  fv.entries[0] = 1;
  enumerateTriples(n, caps, [&](const HarmonicTriple& t) {
    fv.entries.at(polytopeFaceDim(t) + 1) += 1;
    return true;
  });
  return fv;
}

BigInt forestPairsBrute(int n, const Caps& caps) {
  requireCap(n, caps.forestPairsN, "forestPairsBrute");
  std::vector<std::vector<std::pair<int, int>>> forests;
  forEachForest(n, [&](const LabeledGraph& f) {
    forests.push_back(f.edges);
    return true;
  });
  BigInt pairs = 0;
  for (const auto& f1 : forests)
    for (const auto& f2 : forests) {
      std::vector<int> parent(n + 1);
      std::iota(parent.begin(), parent.end(), 0);
      std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
      };
      int components = n;
      for (const auto* edges : {&f1, &f2})
        for (auto [a, b] : *edges) {
          int ra = find(a), rb = find(b);
          if (ra != rb) {
            parent[ra] = rb;
            --components;
          }
        }
      if (components == 1) ++pairs;
    }
  return pairs;
}

Rational edgePolytopeEhrhart(const BipartiteMultigraph& gamma, const Caps& caps) {
  if (!isConnectedGamma(gamma))
    throw DomainError("edgePolytopeEhrhart: Gamma is disconnected");
  int p = gamma.leftCount(), q = gamma.rightCount();
  if (p + q > caps.edgePolytopeV)
    throw CapError("edgePolytopeEhrhart: p+q exceeds cap");
  // Vertices e_a + f_b over the support pairs of Gamma.
  std::vector<std::vector<int>> vertices;
  auto rows = gamma.leftNbrMasks();
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < q; ++b)
      if (rows[a] & (Mask(1) << b)) {
        std::vector<int> v(p + q, 0);
        v[a] = 1;
        v[p + b] = 1;
        vertices.push_back(std::move(v));
      }
  int degree = p + q - 2;
  std::vector<Rational> samples;
  // Normality of R_Gamma lets t-fold vertex sums generate all of t*R.
  std::set<std::vector<int>> layer{std::vector<int>(p + q, 0)};
  samples.emplace_back(1);
  for (int t = 1; t <= degree; ++t) {
    std::set<std::vector<int>> next;
    for (const auto& s : layer)
      for (const auto& v : vertices) {
        std::vector<int> sum(p + q);
        for (int i = 0; i < p + q; ++i) sum[i] = s[i] + v[i];
        next.insert(std::move(sum));
      }
    layer = std::move(next);
    samples.emplace_back(static_cast<long long>(layer.size()));
  }
  auto coeffs = fitPolynomialExact(samples);
  return coeffs.back() * Rational(factorial(degree));
}

Rational expansionVolume(int n, const Caps& caps) {
  std::vector<LabeledGraph> forests;
  forEachForest(n, [&](const LabeledGraph& f) {
    forests.push_back(f);
    return true;
  });
  Rational total = 0;
  for (const auto& g : forests)
    for (const auto& gp : forests) {
      BigInt mv = scaledMixedVolume(g, gp, caps);
      if (mv == 0) continue;
      int k = 2 * n - 2 - static_cast<int>(g.edges.size() + gp.edges.size());
      total += Rational(mv, factorial(k));
    }
  return total;
}

namespace {

const char* kKnownVolume[] = {"1", "3", "33", "2848/3"};
const long long kKnownNonzero[] = {1, 3, 39, 1242};

std::vector<long long> knownFVector(int n) {
  switch (n) {
    case 1: return {1, 1};
    case 2: return {1, 6, 6, 1};
    case 3: return {1, 66, 144, 102, 24, 1};
    case 4: return {1, 1200, 4008, 5124, 3072, 834, 78, 1};
    default: return {};
  }
}

std::string fvToString(const FVector& fv) {
  std::string s = "(";
  for (std::size_t i = 0; i < fv.entries.size(); ++i) {
    if (i) s += ",";
    s += fv.entries[i].str();
  }
  return s + ")";
}

} // namespace

std::vector<VerifyCheck> runVerify(int n, const Caps& caps, bool slow,
                                   int threads) {
  if (n < 1) throw DomainError("verify: n must be positive");
  std::vector<VerifyCheck> out;
  auto add = [&](const std::string& name, const std::string& expected,
                 const std::string& actual) {
    out.push_back({name, n, expected, actual, expected == actual});
  };

  if (n <= 4 && n <= caps.fvectorN) {
    auto known = knownFVector(n);
    std::string expected = "(";
    for (std::size_t i = 0; i < known.size(); ++i)
      expected += (i ? "," : "") + std::to_string(known[i]);
    expected += ")";
    add("fvector_known", expected, fvToString(fVectorViaTables(n, caps)));
  }
  if (n <= caps.fvectorBruteN && n <= caps.fvectorN && n <= caps.tripleN)
    add("fvector_brute", fvToString(fVectorViaTables(n, caps)),
        fvToString(fVectorBrute(n, caps)));
  if (n <= 5 && n <= caps.tripleN) {
    BigInt fine = 0;
    enumerateTriples(n, caps, [&](const HarmonicTriple& t) {
      if (isFineTriple(t)) ++fine;
      return true;
    });
    add("vertex_count", vertexCountFormula(n).str(), fine.str());
  }
  if (n >= 2 && n <= 8) {
    long long expected = 1;
    for (int i = 0; i < n; ++i) expected *= 3;
    add("facet_count", std::to_string(expected - 3),
        std::to_string(facetSystem(n).size()));
  }
  if (n <= 5) {
    auto facets = facetSystem(n);
    long long bad = 0;
    enumerateFineTriples(n, [&](const HarmonicTriple& t) {
      if (!vertexSatisfiesAll(vertexCoordinates(t), n, facets)) ++bad;
      return true;
    });
    add("vertices_in_facets", "0 violations", std::to_string(bad) + " violations");
  }
  if (n <= 4 && n <= caps.volumeN)
    add("volume_known", kKnownVolume[n - 1],
        ratToString(harmonicVolume(n, caps, threads)));
  if (n <= caps.volumeN && (n <= 3 || (n == 4 && slow))) {
    Caps local = caps;
    if (slow && local.ehrhartN < n) local.ehrhartN = n;
    if (n <= local.ehrhartN)
      add("volume_ehrhart", ratToString(harmonicVolume(n, caps, threads)),
          ratToString(ehrhartVolume(n, local, threads)));
  }
  if (n <= caps.volumeN && (n <= 3 || (n == 4 && slow)))
    add("expansion", ratToString(harmonicVolume(n, caps, threads)),
        ratToString(expansionVolume(n, caps)));
  if (n <= 4) add("nonzero_known", std::to_string(kKnownNonzero[n - 1]),
                  nonzeroMixedVolumeCount(n, caps).str());
  if ((n <= 4 || (n == 5 && slow)) && n <= caps.forestPairsN)
    add("nonzero_brute", nonzeroMixedVolumeCount(n, caps).str(),
        forestPairsBrute(n, caps).str());
  if (n <= 5) {
    long long asymmetric = 0;
    std::vector<SetPartition> parts;
    forEachSetPartition(n, [&](const SetPartition& p) {
      parts.push_back(p);
      return true;
    });
    for (const auto& I : parts)
      for (const auto& J : parts) {
        BipartiteMultigraph gamma(I, J);
        if (trimmedLatticeCount(gamma, Side::Left, caps) !=
            trimmedLatticeCount(gamma, Side::Right, caps))
          ++asymmetric;
      }
    add("side_symmetry", "0 asymmetric", std::to_string(asymmetric) + " asymmetric");
  }
  if (n <= 4) {
    long long mismatches = 0;
    std::vector<SetPartition> parts;
    forEachSetPartition(n, [&](const SetPartition& p) {
      parts.push_back(p);
      return true;
    });
    for (const auto& I : parts)
      for (const auto& J : parts) {
        BipartiteMultigraph gamma(I, J);
        if (!isConnectedGamma(gamma)) continue;
        Rational viaEhrhart = edgePolytopeEhrhart(gamma, caps);
        if (viaEhrhart != Rational(trimmedLatticeCount(gamma, Side::Right, caps)))
          ++mismatches;
      }
    add("edge_polytope", "0 mismatches", std::to_string(mismatches) + " mismatches");
  }
  return out;
}

} // namespace harmonic
