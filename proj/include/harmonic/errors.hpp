#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace harmonic {

/// Invalid input value (malformed partition, mismatched ground sets, ...).
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A configured size limit was exceeded.
struct CapError : std::length_error {
  using std::length_error::length_error;
};

/// Internal consistency failure (e.g. a nonzero interpolation residual).
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

/// Per-operation size limits. Defaults keep every operation within a few
/// seconds and a few hundred MB; raise them via environment variables
/// (HARMONIC_CAP_*) or the CLI --cap flag at your own risk.
struct Caps {
  int partitionN = 8;     // enumerateSetPartitions ground-set size
  int tripleN = 5;        // enumerateTriples (Fubini(n)^2 * (2^n-1) candidates)
  int fvectorN = 6;       // fVectorViaTables / table counts
  int volumeN = 7;        // harmonicVolume (Bell(n)^2 partition pairs)
  int nonzeroN = 9;       // nonzeroMixedVolumeCount
  int trimmedQ = 12;      // trimmedLatticeCount side size
  int ehrhartN = 3;       // ehrhartVolume (n=4 box has ~1e9 points; opt-in)
  int forestPairsN = 5;   // forestPairsBrute
  int edgePolytopeV = 10; // edgePolytopeEhrhart vertex count p+q
  int fvectorBruteN = 4;  // fVectorBrute (full triple enumeration)

  /// Defaults overridden by HARMONIC_CAP_{PARTITIONS,TRIPLES,FVECTOR,VOLUME,
  /// NONZERO,TRIMMED_Q,EHRHART,FOREST_PAIRS,EDGE_POLYTOPE} when set.
  static Caps fromEnv() {
    Caps c;
    auto get = [](const char* name, int& slot) {
      if (const char* s = std::getenv(name)) {
        char* end = nullptr;
        long v = std::strtol(s, &end, 10);
        if (end && *end == '\0' && v > 0 && v < 64) slot = static_cast<int>(v);
      }
    };
    get("HARMONIC_CAP_PARTITIONS", c.partitionN);
    get("HARMONIC_CAP_TRIPLES", c.tripleN);
    get("HARMONIC_CAP_FVECTOR", c.fvectorN);
    get("HARMONIC_CAP_VOLUME", c.volumeN);
    get("HARMONIC_CAP_NONZERO", c.nonzeroN);
    get("HARMONIC_CAP_TRIMMED_Q", c.trimmedQ);
    get("HARMONIC_CAP_EHRHART", c.ehrhartN);
    get("HARMONIC_CAP_FOREST_PAIRS", c.forestPairsN);
    get("HARMONIC_CAP_EDGE_POLYTOPE", c.edgePolytopeV);
    get("HARMONIC_CAP_FVECTOR_BRUTE", c.fvectorBruteN);
    return c;
  }
};

inline void requireCap(int n, int cap, const char* what) {
  if (n < 1) throw CapError(std::string(what) + ": n must be positive");
  if (n > cap)
    throw CapError(std::string(what) + ": n=" + std::to_string(n) +
                   " exceeds cap " + std::to_string(cap));
}

} // namespace harmonic
