#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sdres/algred.hpp"
#include "sdres/essanalysis.hpp"
#include "sdres/multipoly.hpp"
#include "sdres/parser.hpp"

namespace sdres {

enum class Stage { Check, Super, Bounds, Resultant };

std::string_view to_string(Stage s);

struct PipelineOptions {
  std::uint64_t seed = 0;
  bool paranoid = false;
  int max_retries = 8;
  Stage stop_after = Stage::Resultant;
  // Forces the variables kept by the specialization step.
  std::optional<std::vector<int>> kept_vars;
};

struct PipelineReport {
  std::uint64_t seed = 0;
  Stage stage = Stage::Check;
  int n = 0;
  int rank = 0;
  bool essential = false;

  std::vector<int> super_essential;  // polynomial indices
  std::vector<int> kept_vars;
  std::vector<int> dropped_vars;
  OrderMatrix order_matrix;
  std::vector<Ord> jacobi;
  std::vector<int> column_gcd_degrees;
  std::vector<Ord> modified_jacobi;

  int prolonged = 0;
  int p_offset = 0;
  std::vector<std::pair<int, int>> alg_essential;  // (poly, shift)
  std::vector<VarRef> z_kept;
  std::vector<VarRef> z_dropped;
  LatticeMap lattice;
  std::string z_system;

  std::size_t m1_dim = 0;
  std::size_t m2_dim = 0;
  int lifting_attempts = 0;
  std::optional<MultiPoly> resultant;
  std::map<int, Ord> order_profile;

  // Post-condition checks of each stage, by name.
  std::map<std::string, bool> verification;
  // Milliseconds per stage; never serialized to the structured format.
  std::map<std::string, double> timing;

  bool all_verified() const;
};

// Runs the stages in order up to opts.stop_after. A system that is not
// essential yields a report with essential == false. Errors carry the stage
// that raised them (see Error::stage()).
PipelineReport run_pipeline(const SystemSource& src, const PipelineOptions& opts = {});

}  // namespace sdres
