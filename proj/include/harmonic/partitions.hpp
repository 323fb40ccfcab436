#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "harmonic/errors.hpp"

namespace harmonic {

/// Elements are 1-based throughout; subsets of [n] travel as bitmasks with
/// bit (e-1) standing for element e.
using Mask = std::uint32_t;

inline Mask fullMask(int n) { return n >= 32 ? ~Mask(0) : (Mask(1) << n) - 1; }
inline bool maskHas(Mask m, int element) { return (m >> (element - 1)) & 1u; }
inline Mask maskOf(const std::vector<int>& elements) {
  Mask m = 0;
  for (int e : elements) m |= Mask(1) << (e - 1);
  return m;
}
std::vector<int> maskElements(Mask m);

/// Block text form: elements concatenated ("1379") when every element of the
/// ground set is a single digit, comma-separated ("1,3,7,9") otherwise.
std::string blockToString(const std::vector<int>& block, bool commas);
std::vector<int> parseBlock(const std::string& text, int n);

/// Unordered partition of [n] in canonical form: every block sorted
/// ascending, blocks ordered by their minimum element.
class SetPartition {
public:
  SetPartition(int n, std::vector<std::vector<int>> blocks);

  static SetPartition singletons(int n);
  static SetPartition oneBlock(int n);

  int n() const { return n_; }
  int blockCount() const { return static_cast<int>(blocks_.size()); }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  /// 0-based index of the block containing the given element.
  int blockIndexOf(int element) const;
  std::vector<Mask> blockMasks() const;

  std::string toString() const;
  static SetPartition parse(const std::string& text, int n);

  bool operator==(const SetPartition& o) const {
    return n_ == o.n_ && blocks_ == o.blocks_;
  }
  bool operator<(const SetPartition& o) const { return blocks_ < o.blocks_; }

private:
  int n_;
  std::vector<std::vector<int>> blocks_;
};

/// Finest common coarsening of two partitions of the same [n].
SetPartition joinPartitions(const SetPartition& a, const SetPartition& b);

/// True iff every block of fine lies inside a block of coarse.
bool isRefinementOf(const SetPartition& fine, const SetPartition& coarse);

/// Visits every set partition of [n] exactly once, in the lexicographic order
/// of restricted-growth strings (which yields canonical block order for
/// free). Returning false from the visitor stops the stream.
void forEachSetPartition(int n, const std::function<bool(const SetPartition&)>& visit);

/// Capped wrapper; throws CapError outside [1, caps.partitionN].
void enumerateSetPartitions(int n, const Caps& caps,
                            const std::function<bool(const SetPartition&)>& visit);

/// Sequence of disjoint nonempty blocks covering a ground set; block order is
/// significant. Blocks are kept sorted internally, the sequence is not.
class OrderedSetPartition {
public:
  explicit OrderedSetPartition(std::vector<std::vector<int>> blocks);

  int length() const { return static_cast<int>(blocks_.size()); }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  Mask groundMask() const { return ground_; }
  std::vector<int> groundElements() const { return maskElements(ground_); }
  /// 1-based index of the block containing the element (0 if absent).
  int positionOf(int element) const;
  /// positionOf for all of 1..n at once; 0 marks elements outside the ground.
  std::vector<int> positions(int n) const;

  std::string toString() const;
  static OrderedSetPartition parse(const std::string& text, int n);

  bool operator==(const OrderedSetPartition& o) const {
    return blocks_ == o.blocks_;
  }
  bool operator<(const OrderedSetPartition& o) const { return blocks_ < o.blocks_; }

private:
  std::vector<std::vector<int>> blocks_;
  Mask ground_;
};

OrderedSetPartition reverseOSP(const OrderedSetPartition& pi);

/// Blocks intersected with K, in order, empty intersections dropped.
/// K must be a nonempty subset of the ground set.
OrderedSetPartition restrictOSP(const OrderedSetPartition& pi, Mask k);

/// pi <= piCoarse in the adjacent-refinement order: every block of piCoarse
/// is the union of consecutive blocks of pi. Requires equal ground sets.
bool isAdjacentRefinement(const OrderedSetPartition& pi,
                          const OrderedSetPartition& piCoarse);

/// Visits every ordered set partition of the ground set exactly once
/// (surjection words in lexicographic order, shortest first).
void forEachOrderedSetPartition(
    const std::vector<int>& ground,
    const std::function<bool(const OrderedSetPartition&)>& visit);

} // namespace harmonic
