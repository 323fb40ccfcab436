#include "harmonic/volume.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <thread>

namespace harmonic {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int size) : parent(size) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  /// Returns false when x and y were already connected.
  bool unite(int x, int y) {
    int rx = find(x), ry = find(y);
    if (rx == ry) return false;
    parent[rx] = ry;
    return true;
  }
};

} // namespace

LabeledGraph::LabeledGraph(int nIn, std::vector<std::pair<int, int>> edgesIn)
    : n(nIn), edges(std::move(edgesIn)) {
  if (n < 1) throw DomainError("graph: n must be positive");
  for (auto& [a, b] : edges) {
    if (a == b) throw DomainError("graph: self loop");
    if (a > b) std::swap(a, b);
    if (a < 1 || b > n) throw DomainError("graph: edge endpoint outside [n]");
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw DomainError("graph: repeated edge");
}

LabeledGraph LabeledGraph::parse(const std::string& text, int n) {
  std::vector<std::pair<int, int>> edges;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    auto dash = tok.find('-');
    if (dash == std::string::npos)
      throw DomainError("graph: expected 'i-j' in '" + tok + "'");
    try {
      edges.emplace_back(std::stoi(tok.substr(0, dash)),
                         std::stoi(tok.substr(dash + 1)));
    } catch (const std::exception&) {
      throw DomainError("graph: cannot parse edge '" + tok + "'");
    }
  }
  return LabeledGraph(n, std::move(edges));
}

std::string LabeledGraph::toString() const {
  std::string s;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(edges[i].first) + "-" + std::to_string(edges[i].second);
  }
  return s;
}

SetPartition LabeledGraph::componentPartition() const {
  UnionFind uf(n + 1);
  for (auto [a, b] : edges) uf.unite(a, b);
  std::vector<std::vector<int>> groups(n + 1);
  for (int e = 1; e <= n; ++e) groups[uf.find(e)].push_back(e);
  std::vector<std::vector<int>> blocks;
  for (auto& g : groups)
    if (!g.empty()) blocks.push_back(std::move(g));
  return SetPartition(n, std::move(blocks));
}

bool LabeledGraph::isForest() const {
  UnionFind uf(n + 1);
  for (auto [a, b] : edges)
    if (!uf.unite(a, b)) return false;
  return true;
}

LabeledForest::LabeledForest(LabeledGraph g) : g_(std::move(g)) {
  if (!g_.isForest()) throw DomainError("forest: graph contains a cycle");
}

void forEachForest(int n, const std::function<bool(const LabeledGraph&)>& visit) {
  if (n < 1 || n > 7) throw CapError("forEachForest: n out of range");
  std::vector<std::pair<int, int>> allEdges;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) allEdges.emplace_back(i, j);
  int m = static_cast<int>(allEdges.size());
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    UnionFind uf(n + 1);
    std::vector<std::pair<int, int>> edges;
    bool acyclic = true;
    for (int e = 0; e < m && acyclic; ++e)
      if (mask & (1u << e)) {
        if (!uf.unite(allEdges[e].first, allEdges[e].second)) acyclic = false;
        else edges.push_back(allEdges[e]);
      }
    if (!acyclic) continue;
    if (!visit(LabeledGraph(n, std::move(edges)))) return;
  }
}

BipartiteMultigraph::BipartiteMultigraph(SetPartition I, SetPartition J)
    : n(I.n()), left(std::move(I)), right(std::move(J)) {
  if (left.n() != right.n())
    throw DomainError("gamma: partitions of different ground sets");
}

BipartiteMultigraph BipartiteMultigraph::fromGraphs(const LabeledGraph& g,
                                                    const LabeledGraph& gPrime) {
  if (g.n != gPrime.n) throw DomainError("gamma: graphs on different [n]");
  return BipartiteMultigraph(g.componentPartition(), gPrime.componentPartition());
}

namespace {

std::vector<Mask> supportRowsFor(const std::vector<Mask>& rowBlocks,
                                 const std::vector<Mask>& colBlocks) {
  std::vector<Mask> rows(rowBlocks.size(), 0);
  for (std::size_t a = 0; a < rowBlocks.size(); ++a)
    for (std::size_t b = 0; b < colBlocks.size(); ++b)
      if (rowBlocks[a] & colBlocks[b]) rows[a] |= Mask(1) << b;
  return rows;
}

bool connectedFromRows(const std::vector<Mask>& rows, int q) {
  int p = static_cast<int>(rows.size());
  UnionFind uf(p + q);
  int components = p + q;
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < q; ++b)
      if (rows[a] & (Mask(1) << b))
        if (uf.unite(a, p + b)) --components;
  return components == 1;
}

// Trimmed lattice count from the support rows of the side being counted:
// rows[i] is the neighborhood of opposite-side block i as a subset of [q].
// Assumes the underlying Gamma is connected.
long long trimmedCountFromSupport(const std::vector<Mask>& rows, int q) {
  int p = static_cast<int>(rows.size());
  if (q < 1 || q > 20) throw CapError("trimmed count: side too large");
  if (q == 1) return 1; // single coordinate pinned to p-1
  Mask full = fullMask(q);
  std::vector<long long> z(std::size_t(1) << q, 0);
  for (Mask S = 1; S <= full; ++S)
    for (Mask r : rows)
      if (r & S) ++z[S];
  // x + e_j in P for all j collapses to x(S) <= z(S)-1 on proper S.
  std::vector<int> x(q, 0);
  long long count = 0;
  std::function<void(int, int)> place = [&](int j, int remaining) {
    if (j == q - 1) {
      if (remaining > z[Mask(1) << j] - 1) return;
      x[j] = remaining;
      for (Mask S = 1; S < full; ++S) {
        long long xs = 0;
        for (int b = 0; b < q; ++b)
          if (S & (Mask(1) << b)) xs += x[b];
        if (xs > z[S] - 1) return;
      }
      ++count;
      return;
    }
    long long hi = std::min<long long>(remaining, z[Mask(1) << j] - 1);
    for (long long v = 0; v <= hi; ++v) {
      x[j] = v;
      place(j + 1, remaining - static_cast<int>(v));
    }
  };
  place(0, p - 1);
  return count;
}

std::pair<int, std::vector<Mask>> canonicalSupportKey(std::vector<Mask> rows,
                                                      int q) {
  // Permuting columns by their incidence masks and re-sorting rows is a
  // sound key: equal keys force genuinely isomorphic supports. A few rounds
  // settle all the shapes that occur here.
  std::sort(rows.begin(), rows.end());
  for (int round = 0; round < 3; ++round) {
    std::vector<std::pair<std::uint64_t, int>> cols(q);
    for (int c = 0; c < q; ++c) {
      std::uint64_t cm = 0;
      for (std::size_t r = 0; r < rows.size(); ++r)
        if (rows[r] & (Mask(1) << c)) cm |= std::uint64_t(1) << r;
      cols[c] = {cm, c};
    }
    std::sort(cols.begin(), cols.end());
    std::vector<Mask> remapped(rows.size(), 0);
    for (int nc = 0; nc < q; ++nc)
      for (std::size_t r = 0; r < rows.size(); ++r)
        if (rows[r] & (Mask(1) << cols[nc].second))
          remapped[r] |= Mask(1) << nc;
    std::sort(remapped.begin(), remapped.end());
    if (remapped == rows) break;
    rows = std::move(remapped);
  }
  return {q, std::move(rows)};
}

} // namespace

std::vector<Mask> BipartiteMultigraph::leftNbrMasks() const {
  return supportRowsFor(left.blockMasks(), right.blockMasks());
}

std::vector<Mask> BipartiteMultigraph::rightNbrMasks() const {
  return supportRowsFor(right.blockMasks(), left.blockMasks());
}

std::string BipartiteMultigraph::toString() const {
  return left.toString() + ";" + right.toString();
}

BipartiteMultigraph BipartiteMultigraph::parse(const std::string& text, int n) {
  auto semi = text.find(';');
  if (semi == std::string::npos)
    throw DomainError("gamma: expected 'I;J' in '" + text + "'");
  return BipartiteMultigraph(SetPartition::parse(text.substr(0, semi), n),
                             SetPartition::parse(text.substr(semi + 1), n));
}

bool isConnectedGamma(const BipartiteMultigraph& gamma) {
  return connectedFromRows(gamma.leftNbrMasks(), gamma.rightCount());
}

BigInt degreeWeight(const BipartiteMultigraph& gamma) {
  BigInt w = 1;
  for (const auto* part : {&gamma.left, &gamma.right})
    for (const auto& block : part->blocks())
      w *= treeCount(static_cast<int>(block.size()));
  return w;
}

SubmodularProfile SubmodularProfile::forSide(const BipartiteMultigraph& gamma,
                                             Side side) {
  SubmodularProfile prof;
  auto rows = side == Side::Right ? gamma.leftNbrMasks() : gamma.rightNbrMasks();
  prof.q = side == Side::Right ? gamma.rightCount() : gamma.leftCount();
  prof.p = static_cast<int>(rows.size());
  if (prof.q > 25) throw CapError("submodular profile: side too large");
  prof.z.assign(std::size_t(1) << prof.q, 0);
  for (Mask S = 1; S < (Mask(1) << prof.q); ++S)
    for (Mask r : rows)
      if (r & S) ++prof.z[S];
  return prof;
}

long long trimmedLatticeCount(const BipartiteMultigraph& gamma, Side side,
                              const Caps& caps) {
  int q = side == Side::Right ? gamma.rightCount() : gamma.leftCount();
  if (q > caps.trimmedQ)
    throw CapError("trimmedLatticeCount: side size " + std::to_string(q) +
                   " exceeds cap " + std::to_string(caps.trimmedQ));
  auto rows = side == Side::Right ? gamma.leftNbrMasks() : gamma.rightNbrMasks();
  if (!connectedFromRows(rows, q)) return 0;
  return trimmedCountFromSupport(rows, q);
}

long long TrimmedCountCache::count(const std::vector<Mask>& supportRows, int q) {
  auto key = canonicalSupportKey(supportRows, q);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  long long value = trimmedCountFromSupport(supportRows, q);
  memo_.emplace(std::move(key), value);
  return value;
}

BigInt scaledMixedVolume(const LabeledGraph& g, const LabeledGraph& gPrime,
                         const Caps& caps) {
  if (g.n != gPrime.n) throw DomainError("scaledMixedVolume: different [n]");
  if (!g.isForest() || !gPrime.isForest()) return 0;
  auto gamma = BipartiteMultigraph::fromGraphs(g, gPrime);
  if (!isConnectedGamma(gamma)) return 0;
  long long rightCount = trimmedLatticeCount(gamma, Side::Right, caps);
  long long leftCount = trimmedLatticeCount(gamma, Side::Left, caps);
  if (rightCount != leftCount)
    throw InternalError("scaledMixedVolume: side counts disagree for " +
                        gamma.toString());
  return rightCount;
}

Rational harmonicVolume(int n, const Caps& caps, int threads) {
  requireCap(n, caps.volumeN, "harmonicVolume");
  if (threads < 1) threads = 1;
  std::vector<std::vector<Mask>> parts; // block masks per partition of [n]
  forEachSetPartition(n, [&](const SetPartition& p) {
    parts.push_back(p.blockMasks());
    return true;
  });
  std::size_t total = parts.size() * parts.size();
  std::vector<BigInt> factorials(2 * n + 1);
  for (int i = 0; i <= 2 * n; ++i) factorials[i] = factorial(i);

  auto worker = [&](std::size_t offset, std::size_t stride, Rational& out) {
    TrimmedCountCache cache;
    Rational sum = 0;
    for (std::size_t idx = offset; idx < total; idx += stride) {
      const auto& I = parts[idx / parts.size()];
      const auto& J = parts[idx % parts.size()];
      auto rows = supportRowsFor(I, J);
      int q = static_cast<int>(J.size());
      if (!connectedFromRows(rows, q)) continue;
      long long cnt = cache.count(rows, q);
      BigInt weight = 1;
      for (Mask b : I) weight *= treeCount(std::popcount(b));
      for (Mask b : J) weight *= treeCount(std::popcount(b));
      int k = static_cast<int>(I.size()) + q - 2;
      sum += Rational(cnt * weight, factorials[k]);
    }
    out = std::move(sum);
  };

  std::vector<Rational> partial(threads);
  if (threads == 1) {
    worker(0, 1, partial[0]);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
      pool.emplace_back(worker, t, threads, std::ref(partial[t]));
    for (auto& th : pool) th.join();
  }
  Rational result = 0;
  for (const auto& r : partial) result += r;
  return result;
}

BigInt nonzeroMixedVolumeCount(int n, const Caps& caps) {
  requireCap(n, caps.nonzeroN, "nonzeroMixedVolumeCount");
  BigInt total = 0;
  forEachSetPartition(n, [&](const SetPartition& sigma) {
    BigInt s = forestSum(sigma);
    total += mobiusToTop(sigma) * s * s;
    return true;
  });
  return total;
}

} // namespace harmonic
