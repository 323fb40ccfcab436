#pragma once

#include <functional>
#include <string>
#include <vector>

#include "harmonic/counting.hpp"
#include "harmonic/partitions.hpp"
#include "harmonic/rational.hpp"

namespace harmonic {

/// (K; pi1, pi2): a nonempty K within [n] and two ordered set partitions of
/// [n]. Labels a face of the harmonic fan when the harmonic conditions hold.
struct HarmonicTriple {
  int n;
  Mask K;
  OrderedSetPartition pi1, pi2;

  std::string toString() const; // "K;pi1;pi2"
};

/// Checks the two defining conditions: the restrictions to K are opposite
/// ordered set partitions, and no element outside K sits weakly after an
/// element of K in both pi1 and pi2. Malformed inputs raise DomainError.
bool isHarmonicTriple(const HarmonicTriple& t);

/// Dimension of the fan face: l(pi1) + l(pi2) - l(pi1|K) - 1.
int fanFaceDim(const HarmonicTriple& t);
/// Dimension of the corresponding polytope face: (2n-2) - fanFaceDim.
int polytopeFaceDim(const HarmonicTriple& t);

/// Partial order on triples: K grows, both partitions coarsen adjacently.
bool tripleLeq(const HarmonicTriple& a, const HarmonicTriple& b);

/// |K| = 1 and both partitions have all blocks singleton.
bool isFineTriple(const HarmonicTriple& t);

/// Visits every harmonic triple on [n] exactly once: all (K, pi1, pi2)
/// candidates filtered through isHarmonicTriple. K runs in ascending mask
/// order, partitions in enumeration order.
void enumerateTriples(int n, const Caps& caps,
                      const std::function<bool(const HarmonicTriple&)>& visit);

/// Same stream restricted to one K, for per-K fan-out.
void enumerateTriplesForK(int n, Mask K,
                          const std::function<bool(const HarmonicTriple&)>& visit);

/// Fine triples only, enumerated directly over permutation pairs. Agrees
/// with filtering enumerateTriples by isFineTriple.
void enumerateFineTriples(int n,
                          const std::function<bool(const HarmonicTriple&)>& visit);

struct VertexPoint {
  std::vector<int> x, y;
  bool operator==(const VertexPoint&) const = default;
  bool operator<(const VertexPoint& o) const {
    return x != o.x ? x < o.x : y < o.y;
  }
};

/// v = e_k + f_k + (pi1^-1, 0) + (0, pi2^-1). Requires fine shape (|K| = 1,
/// all blocks singleton); the arithmetic itself never consults the harmonic
/// conditions.
VertexPoint vertexCoordinates(const HarmonicTriple& t);

/// (n!)^2 (1 + 1/2 + ... + 1/n), evaluated exactly.
BigInt vertexCountFormula(int n);

/// One inequality sum_S x + sum_T y >= rhs per bisubset S|T of [n].
struct FacetInequality {
  Mask S, T;
  long long rhs;
  bool operator==(const FacetInequality&) const = default;
};

/// Both coordinate sums equal this on H_{n,n}.
inline long long equalitySumValue(int n) { return 1LL * n * (n + 1) / 2 + 1; }

/// The 3^n - 3 facet inequalities, ascending by (S,T) masks. Empty for n=1.
std::vector<FacetInequality> facetSystem(int n);

bool vertexSatisfiesFacet(const VertexPoint& v, const FacetInequality& f);
bool facetTightAtVertex(const VertexPoint& v, const FacetInequality& f);
bool vertexSatisfiesAll(const VertexPoint& v, int n,
                        const std::vector<FacetInequality>& facets);

/// Face counts (f_{-1}, f_0, ..., f_{2n-2}), with f_{-1} = 1.
struct FVector {
  int n = 0;
  std::vector<BigInt> entries;
  bool operator==(const FVector&) const = default;
};

/// f-vector from the harmonic-table expansion: tables are represented as a
/// choice of K, an ordered set partition K_1|...|K_l of K, and a placement
/// of every remaining element into one of the 2l^2+2l+1 allowed cells.
FVector fVectorViaTables(int n, const Caps& caps);

/// Number of nonempty faces, via Fubini products over the same tables.
BigInt totalFaceCount(int n, const Caps& caps);

struct HarmonicTableCount {
  BigInt closedForm;    // sum over K strictly inside [n], as printed
  BigInt byEnumeration; // direct enumeration, K = [n] included
  bool consistent = false;
};

/// Both evaluations of the table count; byEnumeration is authoritative.
HarmonicTableCount harmonicTableCount(int n, const Caps& caps);

} // namespace harmonic
