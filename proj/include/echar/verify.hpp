#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "echar/resultant.hpp"
#include "echar/tensor.hpp"

namespace echar {

enum class CheckStatus { pass, fail, skip };
std::string_view to_string(CheckStatus s);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::string detail;
};

// Stable check order used by every report.
const std::vector<std::string>& check_names();

// Runs every applicable identity on one tensor. Checks that do not apply
// (wrong dimension, irregular input, ...) are reported as skipped.
std::vector<CheckResult> verify_tensor(const Hypermatrix& a, const MacaulayLimits& limits = {});

// Fuzz distribution: numerator uniform in -9..9, denominator uniform in 1..9.
// Uses raw engine output so the stream is identical on every platform.
BigRational random_entry(std::mt19937_64& rng);
Hypermatrix random_tensor(int order, int dim, std::mt19937_64& rng);

struct FuzzOptions {
  int count = 0;
  std::uint64_t seed = 0;
  int order = 3;
  int dim = 2;
  unsigned workers = 0;
};

struct FuzzOutcome {
  std::vector<Hypermatrix> corpus;
  std::vector<std::vector<CheckResult>> results;  // by iteration

  bool ok() const;
};

// The corpus is drawn sequentially from the seed; verification runs in
// parallel and is collected by index, so the outcome is deterministic.
FuzzOutcome run_fuzz(const FuzzOptions& opt, const MacaulayLimits& limits = {});

// Exact rational frames used by the invariance check for the given dimension.
std::vector<OrthogonalMatrix> invariance_frames(int dim);

}  // namespace echar
