#ifndef ARCFAN_SWEEP_HPP
#define ARCFAN_SWEEP_HPP

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "arcfan/fanpoly.hpp"

namespace arcfan {

/// Values i^(1/m)/j for 1 <= j <= k, 1 <= i < j^m, ordered by (j, i);
/// dedupe collapses exactly equal values, keeping first occurrences.
std::vector<QuadExt> enumerate_A(int k, int m, bool dedupe = false);

struct SweepConfig {
  int k1 = 50;   // bound for the rational set A^(1)
  int k2 = 10;   // bound for the square-root set A^(2)
  bool dedupe = true;
  int worker_count = 1;
  std::string output_path;      // report JSON ("" = stdout only)
  std::string checkpoint_path;  // resumable progress file ("" = off)
  long checkpoint_every = 1000;
  long max_instances = 0;       // stop after this many +-instances (0 = all)
};

struct SweepFailure {
  long index = 0;  // value index
  std::string w0;
  int sign = 1;
  std::string reason;
  nlohmann::ordered_json evidence;
};

struct SweepReport {
  long total_enumerated_with_multiplicity = 0;  // +- pairs over the raw enumeration
  long distinct_values = 0;
  long polynomials_tested = 0;
  long irreducible_count = 0;
  std::vector<SweepFailure> failures;
  double wall_time_seconds = 0;
  bool h_even_in_w = false;
  bool partial = false;
  long resumed_values = 0;
  std::map<std::string, long> pipeline_counts;

  nlohmann::ordered_json to_json() const;
  std::string table() const;
};

/// Substitutes every enumerated +-w0 into h(y,z,w,x), checks deg_x = 6 and
/// certifies irreducibility by degree-preserving specialization. Because h
/// is even in w (verified, reported), the two signs of one value share one
/// verdict. Deterministic output for a fixed config, any worker count.
SweepReport run_sweep(const SweepConfig& config);

/// Certificate for the fan with three unit distances and delta = 2*pi/3,
/// re-validated from scratch before returning.
Certificate verify_nonagon_corollary();

}  // namespace arcfan

#endif
