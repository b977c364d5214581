// Core domain types and the error taxonomy shared by every module.
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace latentsurv {

enum class errc {
  missing_column,
  parse_failure,
  empty_cohort,
  single_arm_cohort,
  duplicate_id,
  all_zero_weights,
  group_too_small,
  no_events,
  singular,
  not_converged,
  missing_score,
  insufficient_labels,
  single_class_fold,
  no_matches_found,
  empty_subgroup,
  infeasible,
  zero_informative,
  no_eligible_pairs,
  degenerate_arm,
  io_failure,
  invalid_config,
};

const char* errc_name(errc code);

// All recoverable failures are reported through this exception; `code()` keys
// the CLI exit-code mapping.
class error : public std::runtime_error {
 public:
  error(errc code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

struct PatientRecord {
  std::string id;
  double time = 0.0;    // follow-up in caller-defined units (months recommended)
  int event = 0;        // 1 = event observed, 0 = censored
  int treatment = 0;    // 1 = treated
  std::vector<double> covariates;
  std::optional<double> external_score;
  std::optional<std::string> center;
};

struct Standardization {
  std::vector<double> mean;
  std::vector<double> stddev;        // population convention (divide by n)
  std::vector<bool> constant;        // features flagged constant (mapped to zero)
};

// Immutable after construction; all pipeline operations are pure functions
// over a Cohort and safe to evaluate concurrently.
struct Cohort {
  std::vector<PatientRecord> records;
  std::vector<std::string> feature_names;
  std::optional<Standardization> standardization;

  std::size_t size() const { return records.size(); }
  std::size_t n_features() const { return feature_names.size(); }
  bool treated(std::size_t i) const { return records[i].treatment == 1; }

  std::size_t count_treated() const;
  std::size_t count_events() const;

  // Throws single_arm_cohort unless both arms are populated.
  void require_two_arms() const;
};

}  // namespace latentsurv
