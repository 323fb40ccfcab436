#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "harmonic/counting.hpp"
#include "harmonic/partitions.hpp"
#include "harmonic/rational.hpp"

namespace harmonic {

/// Simple graph on vertex set [n]; edges normalized to i<j, sorted, unique.
struct LabeledGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  LabeledGraph(int n, std::vector<std::pair<int, int>> edges);

  /// "1-2,3-4"; empty string for the edgeless graph.
  static LabeledGraph parse(const std::string& text, int n);
  std::string toString() const;

  SetPartition componentPartition() const;
  bool isForest() const;
};

/// A graph validated acyclic on construction.
class LabeledForest {
public:
  explicit LabeledForest(LabeledGraph g);
  const LabeledGraph& graph() const { return g_; }

private:
  LabeledGraph g_;
};

/// All forests on [n] (subsets of K_n edges filtered acyclic), in edge-mask
/// order starting with the edgeless graph.
void forEachForest(int n, const std::function<bool(const LabeledGraph&)>& visit);

/// The bipartite multigraph Gamma_{I,J}: one vertex per block of I and of J,
/// and for each k in [n] an edge joining the blocks containing k. A block's
/// degree is its size.
struct BipartiteMultigraph {
  int n = 0;
  SetPartition left, right; // I, J

  BipartiteMultigraph(SetPartition I, SetPartition J);
  static BipartiteMultigraph fromGraphs(const LabeledGraph& g,
                                        const LabeledGraph& gPrime);

  int leftCount() const { return left.blockCount(); }   // p
  int rightCount() const { return right.blockCount(); } // q

  /// For each left block, the set of right blocks it meets (and dually).
  std::vector<Mask> leftNbrMasks() const;
  std::vector<Mask> rightNbrMasks() const;

  std::string toString() const; // "I;J"
  static BipartiteMultigraph parse(const std::string& text, int n);
};

/// Connectivity of the block-vertex multigraph; equivalent to
/// joinPartitions(I, J) having a single block.
bool isConnectedGamma(const BipartiteMultigraph& gamma);

/// prod over all blocks of both sides of |B|^(|B|-2).
BigInt degreeWeight(const BipartiteMultigraph& gamma);

enum class Side { Left, Right };

/// H-representation data of the simplex sum on one side: z(S) counts the
/// opposite-side blocks whose neighborhood meets S, for S a subset of [q].
struct SubmodularProfile {
  int q = 0;
  int p = 0;
  std::vector<long long> z; // indexed by subset mask; z[0] = 0, z[full] = p

  static SubmodularProfile forSide(const BipartiteMultigraph& gamma, Side side);
};

/// Lattice points of the trimmed polytope on the chosen side: integer x >= 0
/// with sum p-1 such that x + e_j lies in the simplex sum for every j.
/// Returns 0 immediately for disconnected Gamma.
long long trimmedLatticeCount(const BipartiteMultigraph& gamma, Side side,
                              const Caps& caps);

/// Memo for trimmed counts keyed by the support structure of Gamma up to
/// relabeling blocks within each side. Not thread-safe; use one per worker.
class TrimmedCountCache {
public:
  long long count(const std::vector<Mask>& supportRows, int q);
  std::size_t size() const { return memo_.size(); }

private:
  std::map<std::pair<int, std::vector<Mask>>, long long> memo_;
};

/// (2n-2)! * MV(G, G'): zero when either graph has a cycle or Gamma is
/// disconnected, otherwise the trimmed lattice count (both sides are
/// computed and must agree).
BigInt scaledMixedVolume(const LabeledGraph& g, const LabeledGraph& gPrime,
                         const Caps& caps);

/// Vol(H_{n,n}) = sum over ordered partition pairs (I,J) with join the top:
/// trimmedCount * degreeWeight / (p+q-2)!. Exact; any thread count yields
/// bit-identical results.
Rational harmonicVolume(int n, const Caps& caps, int threads = 1);

/// a_n = sum over Pi_n of mu(sigma,top) * forestSum(sigma)^2 = number of
/// forest pairs with connected union.
BigInt nonzeroMixedVolumeCount(int n, const Caps& caps);

} // namespace harmonic
