#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tightfold/tour.hpp"

namespace tightfold {

// Brute-force ground truth for small instances. Enumeration visits every
// (arc assignment x per-vertex pairing) combination; it relies only on the
// tour definitions, never on the lemma machinery.

struct TourEnumeration {
  std::uint64_t graph_hash = 0;
  std::vector<VertexFaceTour> tours;
  std::vector<int> component_counts;
  std::vector<int> crossing_counts;

  bool contains(const VertexFaceTour& t) const;
};

inline constexpr int kOracleMaxFaces = 10;
inline constexpr int kOracleMaxDegreeSum = 40;

// Throws InstanceTooLarge beyond the guard (F <= 10, sum of degrees <= 40).
TourEnumeration enumerate_spanning_tours(const PlaneGraph& g);

struct HamiltonianWitness {
  bool exists = false;
  VertexFaceTour witness;
};
HamiltonianWitness exists_hamiltonian_noncrossing(const PlaneGraph& g);

struct ClosureReport {
  bool closed = true;
  int tour_count = 0;
  long long ops_checked = 0;
  std::string message;
};
// Verifies every switch/reflect applied to every enumerated tour lands inside
// the enumeration.
ClosureReport closure_under_recombination(const PlaneGraph& g);

}  // namespace tightfold
