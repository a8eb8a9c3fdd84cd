// SPDX-License-Identifier: Apache-2.0

// The verification suite: every identity of the dual GL_q(1|1) calculus as a
// named check with a structured report.

#pragma once

#include "glq/superalgebra.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace glq {

enum class Status { pass, fail, anomaly };
std::string_view to_string(Status s);

struct CheckReport {
  std::string check_id;
  std::string title;
  /// The identity under test, written out as a formula.
  std::string paper_ref;
  /// Ordered (name, value) pairs.
  std::vector<std::pair<std::string, std::string>> params;
  Status status = Status::pass;
  /// Set for anomalies: what the engine found instead of the stated claim.
  std::string description;
  /// Rendered residual; always present when status is fail.
  std::optional<std::string> witness;
  std::chrono::nanoseconds elapsed{0};
};

inline constexpr std::uint64_t kDefaultSeed = 20240611;

struct SuiteOptions {
  int max_n = 6;
  /// Check ids to run; empty means all.
  std::vector<std::string> only;
  std::uint64_t seed = kDefaultSeed;
  int fuzz_words = 500;
  int fuzz_seeds = 5;
  /// Run checks on worker threads; report order is unaffected.
  bool parallel = false;
};

/// C01 .. C17 in order.
std::vector<std::string> registered_check_ids();

/// Runs the selected checks. Unknown ids in `only` raise std::invalid_argument;
/// identity failures never throw, they become fail/anomaly reports.
std::vector<CheckReport> run_suite(const SuiteOptions& options);

/// One block per check for humans.
std::string format_text(const std::vector<CheckReport>& reports);
/// One JSON object per line with fields check_id, paper_ref, params, status,
/// witness, elapsed_ms. elapsed_ms is null unless with_timing is set, which
/// keeps the output byte-stable for fixed options.
std::string format_machine(const std::vector<CheckReport>& reports, bool with_timing = false);

bool any_failed(const std::vector<CheckReport>& reports);

/// Random word whose total degree (sum of |exponent|) is uniform in
/// 1..max_len. Invertible generators get exponents in [-2, 2] \ {0}, other
/// even ones 1..2, odd ones 1.
Word random_word(const Presentation& p, std::mt19937_64& rng, int max_len = 8);

/// The algebras exercised by the fuzz checks: the four built-ins (with
/// inverse rules where relevant) and the tensor products used by the CLI.
std::vector<Algebra> fuzz_algebras();

}  // namespace glq
