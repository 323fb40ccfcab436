#include "harmonic/faces.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace harmonic {

namespace {

std::string maskToBlockString(Mask m, int n) {
  return blockToString(maskElements(m), n >= 10);
}

void checkTripleShape(const HarmonicTriple& t) {
  if (t.n < 1 || t.n > 31) throw DomainError("triple: n out of range");
  if (t.K == 0) throw DomainError("triple: K is empty");
  if (t.K & ~fullMask(t.n)) throw DomainError("triple: K outside [n]");
  if (t.pi1.groundMask() != fullMask(t.n) || t.pi2.groundMask() != fullMask(t.n))
    throw DomainError("triple: partitions must cover [n] exactly");
}

// Conditions on the 1-based block-position arrays. pos[e] = 0 never occurs
// for ground [n].
bool harmonicFromPositions(int n, Mask K, const std::vector<int>& pos1,
                           const std::vector<int>& pos2) {
  auto kElems = maskElements(K);
  // (a) pi1|K and pi2|K are opposite: relative order of K reverses exactly.
  for (std::size_t a = 0; a < kElems.size(); ++a)
    for (std::size_t b = a + 1; b < kElems.size(); ++b) {
      int d1 = pos1[kElems[a]] - pos1[kElems[b]];
      int d2 = pos2[kElems[a]] - pos2[kElems[b]];
      if ((d1 == 0) != (d2 == 0)) return false;
      if (d1 != 0 && ((d1 < 0) == (d2 < 0))) return false;
    }
  // (b) j outside K may not sit weakly after k in both partitions.
  for (int j = 1; j <= n; ++j) {
    if (maskHas(K, j)) continue;
    for (int k : kElems)
      if (pos1[j] >= pos1[k] && pos2[j] >= pos2[k]) return false;
  }
  return true;
}

int restrictionLength(Mask K, const std::vector<int>& pos) {
  // Number of distinct block positions met by K.
  std::vector<int> seen;
  for (int e : maskElements(K))
    if (std::find(seen.begin(), seen.end(), pos[e]) == seen.end())
      seen.push_back(pos[e]);
  return static_cast<int>(seen.size());
}

} // namespace

std::string HarmonicTriple::toString() const {
  return maskToBlockString(K, n) + ";" + pi1.toString() + ";" + pi2.toString();
}

bool isHarmonicTriple(const HarmonicTriple& t) {
  checkTripleShape(t);
  return harmonicFromPositions(t.n, t.K, t.pi1.positions(t.n), t.pi2.positions(t.n));
}

int fanFaceDim(const HarmonicTriple& t) {
  if (!isHarmonicTriple(t)) throw DomainError("fanFaceDim: triple is not harmonic");
  int lRestr = restrictionLength(t.K, t.pi1.positions(t.n));
  return t.pi1.length() + t.pi2.length() - lRestr - 1;
}

int polytopeFaceDim(const HarmonicTriple& t) {
  return (2 * t.n - 2) - fanFaceDim(t);
}

bool tripleLeq(const HarmonicTriple& a, const HarmonicTriple& b) {
  if (a.n != b.n) throw DomainError("tripleLeq: different [n]");
  if ((a.K & b.K) != a.K) return false;
  return isAdjacentRefinement(a.pi1, b.pi1) && isAdjacentRefinement(a.pi2, b.pi2);
}

bool isFineTriple(const HarmonicTriple& t) {
  return std::popcount(t.K) == 1 && t.pi1.length() == t.n && t.pi2.length() == t.n;
}

namespace {

struct OspTable {
  std::vector<OrderedSetPartition> osps;
  std::vector<std::vector<int>> pos; // positions(n) per osp
};

OspTable allOspsOf(int n) {
  OspTable table;
  std::vector<int> ground(n);
  std::iota(ground.begin(), ground.end(), 1);
  forEachOrderedSetPartition(ground, [&](const OrderedSetPartition& p) {
    table.osps.push_back(p);
    table.pos.push_back(p.positions(n));
    return true;
  });
  return table;
}

bool scanTriplesForK(int n, Mask K, const OspTable& table,
                     const std::function<bool(const HarmonicTriple&)>& visit) {
  std::size_t count = table.osps.size();
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < count; ++j)
      if (harmonicFromPositions(n, K, table.pos[i], table.pos[j]))
        if (!visit(HarmonicTriple{n, K, table.osps[i], table.osps[j]}))
          return false;
  return true;
}

} // namespace

void enumerateTriples(int n, const Caps& caps,
                      const std::function<bool(const HarmonicTriple&)>& visit) {
  requireCap(n, caps.tripleN, "enumerateTriples");
  OspTable table = allOspsOf(n);
  for (Mask K = 1; K <= fullMask(n); ++K)
    if (!scanTriplesForK(n, K, table, visit)) return;
}

void enumerateTriplesForK(int n, Mask K,
                          const std::function<bool(const HarmonicTriple&)>& visit) {
  if (n < 1 || n > 8) throw CapError("enumerateTriplesForK: n out of range");
  if (K == 0 || (K & ~fullMask(n)))
    throw DomainError("enumerateTriplesForK: bad K");
  OspTable table = allOspsOf(n);
  scanTriplesForK(n, K, table, visit);
}

void enumerateFineTriples(int n,
                          const std::function<bool(const HarmonicTriple&)>& visit) {
  if (n < 1 || n > 8) throw CapError("enumerateFineTriples: n out of range");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<std::vector<int>> perms;
  do {
    perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  // pos[e] = index of e in the word, 1-based.
  std::vector<std::vector<int>> pos(perms.size(), std::vector<int>(n + 1));
  for (std::size_t i = 0; i < perms.size(); ++i)
    for (int p = 0; p < n; ++p) pos[i][perms[i][p]] = p + 1;
  auto toOsp = [](const std::vector<int>& word) {
    std::vector<std::vector<int>> blocks;
    for (int e : word) blocks.push_back({e});
    return OrderedSetPartition(std::move(blocks));
  };
  for (int k = 1; k <= n; ++k) {
    for (std::size_t i = 0; i < perms.size(); ++i) {
      for (std::size_t j = 0; j < perms.size(); ++j) {
        // No element may follow k in both permutations.
        bool ok = true;
        for (int e = 1; e <= n && ok; ++e)
          if (e != k && pos[i][e] > pos[i][k] && pos[j][e] > pos[j][k]) ok = false;
        if (!ok) continue;
        if (!visit(HarmonicTriple{n, Mask(1) << (k - 1), toOsp(perms[i]),
                                  toOsp(perms[j])}))
          return;
      }
    }
  }
}

VertexPoint vertexCoordinates(const HarmonicTriple& t) {
  // Position arithmetic only; fine shape is all the formula needs.
  checkTripleShape(t);
  if (!isFineTriple(t))
    throw DomainError("vertexCoordinates: triple is not fine");
  int k = maskElements(t.K)[0];
  auto pos1 = t.pi1.positions(t.n);
  auto pos2 = t.pi2.positions(t.n);
  VertexPoint v;
  v.x.resize(t.n);
  v.y.resize(t.n);
  for (int i = 1; i <= t.n; ++i) {
    v.x[i - 1] = pos1[i] + (i == k ? 1 : 0);
    v.y[i - 1] = pos2[i] + (i == k ? 1 : 0);
  }
  return v;
}

BigInt vertexCountFormula(int n) {
  if (n < 1) throw DomainError("vertexCountFormula: n must be positive");
  BigInt sq = factorial(n) * factorial(n);
  BigInt total = 0;
  for (int a = 0; a < n; ++a) total += sq / (a + 1); // (n!)^2 divisible by a+1
  return total;
}

std::vector<FacetInequality> facetSystem(int n) {
  if (n < 1) throw DomainError("facetSystem: n must be positive");
  std::vector<FacetInequality> out;
  if (n == 1) return out; // H_{1,1} is a point
  // Ternary choice per element: S only / T only / both.
  std::vector<int> digit(n, 0);
  while (true) {
    Mask S = 0, T = 0;
    for (int i = 0; i < n; ++i) {
      if (digit[i] != 1) S |= Mask(1) << i;
      if (digit[i] != 0) T |= Mask(1) << i;
    }
    bool bothFull = (S == fullMask(n) && T == fullMask(n));
    if (S != 0 && T != 0 && !bothFull) {
      long long s = std::popcount(S), t = std::popcount(T);
      out.push_back({S, T, s * (s + 1) / 2 + t * (t + 1) / 2 + 1});
    }
    int i = 0;
    while (i < n && digit[i] == 2) digit[i++] = 0;
    if (i == n) break;
    ++digit[i];
  }
  std::sort(out.begin(), out.end(), [](const FacetInequality& a, const FacetInequality& b) {
    return a.S != b.S ? a.S < b.S : a.T < b.T;
  });
  return out;
}

namespace {

long long sideSum(const std::vector<int>& coords, Mask m) {
  long long s = 0;
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (m & (Mask(1) << i)) s += coords[i];
  return s;
}

} // namespace

bool vertexSatisfiesFacet(const VertexPoint& v, const FacetInequality& f) {
  return sideSum(v.x, f.S) + sideSum(v.y, f.T) >= f.rhs;
}

bool facetTightAtVertex(const VertexPoint& v, const FacetInequality& f) {
  return sideSum(v.x, f.S) + sideSum(v.y, f.T) == f.rhs;
}

bool vertexSatisfiesAll(const VertexPoint& v, int n,
                        const std::vector<FacetInequality>& facets) {
  long long want = equalitySumValue(n);
  if (sideSum(v.x, fullMask(n)) != want || sideSum(v.y, fullMask(n)) != want)
    return false;
  for (const auto& f : facets)
    if (!vertexSatisfiesFacet(v, f)) return false;
  return true;
}

namespace {

// A table of size l has cells indexed by the position of an element relative
// to the K-blocks in pi1 (columns) and pi2 (rows). Classes track only what
// the face formulas need: whether the element lands in an odd column i
// (between K_i and K_{i+1} in pi1) and/or an odd row i (the analogous strip
// for pi2). cellCount is the number of concrete cells with that signature.
struct CellClass {
  int col; // odd column index 0..l, or -1 when inside a K-block column
  int row; // odd row index 0..l, or -1
  long long cellCount;
};

std::vector<CellClass> cellClasses(int l) {
  std::vector<CellClass> classes;
  for (int i = 0; i <= l; ++i)
    for (int j = 0; j <= l; ++j)
      if (i + j <= l) classes.push_back({i, j, 1});
  for (int i = 0; i < l; ++i) classes.push_back({i, -1, l - i});
  for (int j = 0; j < l; ++j) classes.push_back({-1, j, l - j});
  if (l >= 2) classes.push_back({-1, -1, 1LL * l * (l - 1) / 2});
  return classes;
}

// Visits every weighted occupancy of the classes by m labeled elements:
// leaf(pathWeight, colCount, rowCount).
void forEachOccupancy(
    int m, int l, const std::vector<CellClass>& classes,
    const std::function<void(const BigInt&, const std::vector<int>&,
                             const std::vector<int>&)>& leaf) {
  std::vector<int> colCount(l + 1, 0), rowCount(l + 1, 0);
  std::function<void(int, BigInt)> rec = [&](int e, BigInt w) {
    if (e == m) {
      leaf(w, colCount, rowCount);
      return;
    }
    for (const auto& c : classes) {
      if (c.col >= 0) ++colCount[c.col];
      if (c.row >= 0) ++rowCount[c.row];
      rec(e + 1, w * c.cellCount);
      if (c.col >= 0) --colCount[c.col];
      if (c.row >= 0) --rowCount[c.row];
    }
  };
  rec(0, BigInt(1));
}

// Polynomials in z with coefficient of z^a equal to S(c,a) a!: the ordered
// set partitions of a c-set, graded by length. ospGrading[c][a].
std::vector<std::vector<BigInt>> ospGradingUpTo(int cMax) {
  std::vector<std::vector<BigInt>> g(cMax + 1);
  for (int c = 0; c <= cMax; ++c) {
    g[c].resize(c + 1);
    for (int a = 0; a <= c; ++a) g[c][a] = stirling2(c, a) * factorial(a);
  }
  return g;
}

} // namespace

FVector fVectorViaTables(int n, const Caps& caps) {
  requireCap(n, caps.fvectorN, "fVectorViaTables");
  FVector fv;
  fv.n = n;
  fv.entries.assign(2 * n, 0);
  fv.entries[0] = 1; // empty face
  auto grading = ospGradingUpTo(n);
  for (int k = 1; k <= n; ++k) {
    int m = n - k;
    for (int l = 1; l <= k; ++l) {
      BigInt tableWeight = binomial(n, k) * stirling2(k, l) * factorial(l);
      if (tableWeight == 0) continue;
      auto classes = cellClasses(l);
      forEachOccupancy(m, l, classes,
                       [&](const BigInt& w, const std::vector<int>& colCount,
                           const std::vector<int>& rowCount) {
                         // Product over strips of the length-graded OSP counts;
                         // exponent e contributes to dimension d = 2n-1-l-e.
                         std::vector<BigInt> poly{1};
                         auto mulBy = [&](int c) {
                           if (c == 0) return;
                           std::vector<BigInt> next(poly.size() + c, 0);
                           for (std::size_t i = 0; i < poly.size(); ++i)
                             for (int a = 0; a <= c; ++a)
                               next[i + a] += poly[i] * grading[c][a];
                           poly = std::move(next);
                         };
                         for (int c : colCount) mulBy(c);
                         for (int r : rowCount) mulBy(r);
                         BigInt scale = tableWeight * w;
                         for (std::size_t e = 0; e < poly.size(); ++e) {
                           if (poly[e] == 0) continue;
                           int d = 2 * n - 1 - l - static_cast<int>(e);
                           fv.entries.at(d + 1) += scale * poly[e];
                         }
                       });
    }
  }
  return fv;
}

BigInt totalFaceCount(int n, const Caps& caps) {
  requireCap(n, caps.fvectorN, "totalFaceCount");
  BigInt total = 0;
  for (int k = 1; k <= n; ++k) {
    int m = n - k;
    for (int l = 1; l <= k; ++l) {
      BigInt tableWeight = binomial(n, k) * stirling2(k, l) * factorial(l);
      if (tableWeight == 0) continue;
      auto classes = cellClasses(l);
      forEachOccupancy(m, l, classes,
                       [&](const BigInt& w, const std::vector<int>& colCount,
                           const std::vector<int>& rowCount) {
                         BigInt term = tableWeight * w;
                         for (int c : colCount) term *= fubini(c);
                         for (int r : rowCount) term *= fubini(r);
                         total += term;
                       });
    }
  }
  return total;
}

HarmonicTableCount harmonicTableCount(int n, const Caps& caps) {
  requireCap(n, caps.fvectorN, "harmonicTableCount");
  HarmonicTableCount out;
  // Closed sum as printed: K ranges over proper subsets only.
  out.closedForm = 0;
  for (int k = 1; k <= n - 1; ++k)
    for (int l = 1; l <= k; ++l) {
      BigInt cells = 2 * l * l + 2 * l + 1;
      BigInt pw = 1;
      for (int i = 0; i < n - k; ++i) pw *= cells;
      out.closedForm += binomial(n, k) * stirling2(k, l) * factorial(l) * pw;
    }
  // Direct enumeration over (K, ordered partition of K), counting the
  // allowed cells of the staircase for each shape.
  out.byEnumeration = 0;
  for (Mask K = 1; K <= fullMask(n); ++K) {
    auto kElems = maskElements(K);
    int m = n - static_cast<int>(kElems.size());
    forEachOrderedSetPartition(kElems, [&](const OrderedSetPartition& osp) {
      int l = osp.length();
      long long cells = 0;
      for (int du = 1; du <= 2 * l + 1; ++du)
        for (int dv = 1; dv <= 2 * l + 1; ++dv)
          if (dv >= 2 * (du / 2) + 1) ++cells; // inside the staircase
      BigInt pw = 1;
      for (int i = 0; i < m; ++i) pw *= cells;
      out.byEnumeration += pw;
      return true;
    });
  }
  out.consistent = (out.closedForm == out.byEnumeration);
  return out;
}

} // namespace harmonic
