// Copyright 2026 The aplab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "aplab/bohr.hpp"
#include "aplab/density.hpp"
#include "aplab/error.hpp"
#include "aplab/group.hpp"
#include "aplab/harmonic.hpp"

namespace aplab {

// ---------------------------------------------------------------------------
// Almost periods

/// {t in domain : ||tau_t F0 - F0||_inf <= eps_step}.
SubsetG almost_period_set(const GFunc& f0, const SubsetG& domain, double eps_step);

/// ||mu_X^{(k)} * F0 - F0||_inf.
double verify_linf_ap(const SubsetG& x, int k, const GFunc& f0);

// ---------------------------------------------------------------------------
// Hypotheses

struct FfqAmbient {};

/// Ambient Bohr sets of the general bootstrap: A lives in `b`, A1 in `b1`,
/// A2 in `b2 - shift`.
struct BohrAmbient {
  const BohrSet* b = nullptr;
  const BohrSet* b1 = nullptr;
  const BohrSet* b2 = nullptr;
  Index shift = 0;
};

using Ambient = std::variant<FfqAmbient, BohrAmbient>;

struct HypothesisReport {
  double inner_product = 0.0;  // <mu_A1 o mu_A2, 1_S>
  double min_corr_on_s = 0.0;  // min_S mu_A o mu_A, times mu(B) for Bohr
  double corr_threshold = 0.0;
  double alpha = 0.0;
  double alpha1 = 0.0;
  double alpha2 = 0.0;
  bool size_ok = true;  // |S| <= 2|B'| (Bohr ambient only)
  bool ok = false;
};

/// Evaluates both lemma hypotheses exactly. eps must lie in (0, 1/8) for
/// F_q^n and (0, 1/10) for Bohr ambients. Densities are relative to the
/// ambient sets in the Bohr case.
HypothesisReport check_hypotheses(const SubsetG& a, const SubsetG& a1,
                                  const SubsetG& a2, const SubsetG& s, double eps,
                                  const Ambient& ambient);

// ---------------------------------------------------------------------------
// Bootstrapping

struct ChainReport {
  double inner_s = 0.0;           // <mu_X^{(k)} * mu_A1 o mu_A2, 1_S>
  double inner_s_bound = 0.0;
  double inner_corr = 0.0;        // same against mu_A o mu_A
  double inner_corr_bound = 0.0;
  double ap_defect = 0.0;         // ||mu_X^{(k)} * F0 - F0||_inf
  double l1_fourier_f = 0.0;      // sum |F^|, F = mu_A1 o mu_A2 * mu_A o mu_A
  double l1_bound = 0.0;
  double max_translation_defect = 0.0;
  double translation_bound = 0.0;
  std::size_t translations_checked = 0;
  double inner_smoothed = 0.0;    // after convolving with mu_V / mu_B'''
  double inner_smoothed_bound = 0.0;
};

struct BoundReport {
  double measured = 0.0;    // codim(V) or rank(B''')
  double reference = 0.0;   // the lemma's shape without constants
  double ratio = 0.0;       // measured / reference
  double log_size_ratio = 0.0;       // log(|B'''| / |B''|) (Bohr only)
  double log_size_reference = 0.0;   // -L (d + lo^2 lo lo)  (Bohr only)
  double x_log_density = 0.0;        // log(|X| / |domain|)
  double x_log_reference = 0.0;      // -eps^-2 k^2 lo(a1) lo(a2)
};

struct BootstrapResult {
  std::optional<Subspace> subspace;
  std::optional<BohrSet> bohr;
  std::size_t codim_or_rank = 0;
  int k_used = 0;
  double eps_step = 0.0;
  SubsetG x;
  std::size_t spectrum_size = 0;
  double alpha = 0.0;
  double alpha1 = 0.0;
  double alpha2 = 0.0;
  double witness_sup = 0.0;
  double witness_bound = 0.0;
  ChainReport chain;
  BoundReport bound;
};

struct BootstrapOptions {
  // Translations t in V (or B''') checked exhaustively up to this size and
  // on `translation_samples` deterministic samples beyond it.
  std::size_t exhaustive_translation_limit = std::size_t{1} << 10;
  std::size_t translation_samples = 64;
  std::uint64_t seed = 0;
};

/// max(2, ceil(log2(4 / (eps alpha))) + 1), so 2^{1-k} <= eps alpha / 4.
int k_for_ffq(double eps, double alpha);
/// max(2, ceil(log2(2 / ((eps/4 - eps/10) alpha)))).
int k_for_bohr(double eps, double alpha);

/// Subspace bootstrap on F_q^n: returns V with ||mu_V * mu_A||_inf >= 1 + eps/2.
BootstrapResult bootstrap_ffq(const SubsetG& a, const SubsetG& a1, const SubsetG& a2,
                              const SubsetG& s, double eps,
                              const BootstrapOptions& options = {});

/// Bohr-set bootstrap on Z/N: returns a regular B''' inside B'' with
/// ||mu_B''' * mu_A||_inf >= (1 + eps/4) mu(B)^{-1}. `shift` is x in
/// A2 subset of B'' - x.
BootstrapResult bootstrap_bohr(const SubsetG& a, const SubsetG& a1, const SubsetG& a2,
                               Index shift, const SubsetG& s, const BohrSet& b,
                               const BohrSet& b1, const BohrSet& b2, double eps,
                               const BootstrapOptions& options = {});

struct InnerDiscrepancy {
  double d1 = 0.0;  // <mu_A1 o mu_A1, mu_A o mu_A>
  double d2 = 0.0;  // <mu_A2 o mu_A2, mu_A o mu_A>
};

InnerDiscrepancy inner_discrepancy(const SubsetG& a, const SubsetG& a1, const SubsetG& a2);

// ---------------------------------------------------------------------------
// Sifting oracle

enum class SiftStrategy { kPlantedBypass, kRandomTranslate, kExhaustive };

std::string_view to_string(SiftStrategy s);
SiftStrategy parse_sift_strategy(std::string_view text);

struct SiftConfig {
  SiftStrategy strategy = SiftStrategy::kRandomTranslate;
  std::uint64_t seed = 0;
  int trials = 64;
  // Fixture sets for the planted bypass.
  std::optional<SubsetG> planted_a1;
  std::optional<SubsetG> planted_a2;
  Index planted_shift = 0;
};

struct SiftResult {
  SubsetG a1;
  SubsetG a2;
  Index shift = 0;
  double achieved = 0.0;
  double alpha1 = 0.0;
  double alpha2 = 0.0;
  std::string strategy;
};

/// Thrown when no candidate reaches 1 - eps'; carries the best candidate.
class SiftFailure : public Error {
 public:
  SiftFailure(const std::string& message, SiftResult best)
      : Error(ErrorKind::kSiftFailure, message), best_(std::move(best)) {}
  const SiftResult& best() const { return best_; }

 private:
  SiftResult best_;
};

/// <mu_A1 o mu_A2, 1_S> by counting pairs (a1, a2) with a1 - a2 in S.
double sift_inner_product(const SubsetG& a1, const SubsetG& a2, const SubsetG& s);

/// Produces A1, A2 with <mu_A1 o mu_A2, 1_S> >= 1 - eps_prime. Candidates
/// reaching the target are ranked by min(alpha1, alpha2); otherwise by the
/// achieved value.
SiftResult sift(const SubsetG& a, const SubsetG& s, double eps_prime,
                const SiftConfig& config);

// ---------------------------------------------------------------------------
// Density increment on F_q^n

struct CountsMatch {
  double value = 0.0;  // <mu_A * mu_A, mu_C>
};

struct FfqIncrement {
  double counts_value = 0.0;
  Subspace v;
  Index x0 = 0;          // coset x0 + V achieving the sup
  double witness = 0.0;  // ||1_A * mu_V||_inf
  BootstrapResult bootstrap;
  SiftResult sift;
};

using FfqStepResult = std::variant<CountsMatch, FfqIncrement>;

/// One step: either |<mu_A * mu_A, mu_C> - 1| <= eps, or a subspace V with
/// ||1_A * mu_V||_inf >= (1 + eps/64) alpha. eps in (0, 1).
FfqStepResult increment_step_ffq(const SubsetG& a, const SubsetG& c, double eps,
                                 const SiftConfig& sift_config,
                                 const BootstrapOptions& options = {});

enum class TraceOutcome { kCountsMatch, kIncrementFound, kExhausted };
std::string_view to_string(TraceOutcome o);

struct TraceStep {
  int step = 0;
  std::string kind;            // "counts-match" or "increment"
  std::size_t codim = 0;       // cumulative codimension after this step
  int k_used = 0;
  double alpha = 0.0;          // density before the step
  double witness = 0.0;        // counts value, or the incremented density
  std::optional<double> bound_ratio;
};

struct IncrementTrace {
  std::vector<TraceStep> steps;
  TraceOutcome outcome = TraceOutcome::kExhausted;
  std::string note;
};

/// ceil(log(1/alpha0) / log(1 + eps/64)).
std::size_t iteration_step_bound(double alpha0, double eps);

/// Repeats increment_step_ffq, passing to A <- (A - x0) cap V and
/// C <- (C - 2 x0) cap V in coordinates of V after each increment.
IncrementTrace iterate_ffq(const SubsetG& a, const SubsetG& c, double eps,
                           int max_steps, const SiftConfig& sift_config,
                           const BootstrapOptions& options = {});

// ---------------------------------------------------------------------------
// Single integer step

struct NoViolation {
  double norm = 0.0;
  double threshold = 0.0;
};

struct IntIncrement {
  double norm = 0.0;
  BohrSet b3;
  double witness = 0.0;  // ||mu_B''' * mu_A||_inf * mu(B)
  BootstrapResult bootstrap;
  SiftResult sift;
  BoundReport prop_bound;  // rank / size against d + lo^4 p^2, d lo + lo^5 p^2
};

struct OracleIncomplete {
  double norm = 0.0;
  SiftResult best;
  std::string message;
};

using IntStepResult = std::variant<NoViolation, IntIncrement, OracleIncomplete>;

struct IntStepParams {
  int p = 2;
  std::int64_t k = 1;
  double eps = 0.2;
  // Required nesting B'' subset of B'_{c/d}.
  double nesting_c = 0.01;
};

/// eps in (0, 2/5) so that the inner bootstrap runs at eps/4 < 1/10.
IntStepResult increment_step_int(const SubsetG& a, const BohrSet& b, const BohrSet& b1,
                                 const BohrSet& b2, const IntStepParams& params,
                                 const SiftConfig& sift_config,
                                 const BootstrapOptions& options = {});

// ---------------------------------------------------------------------------
// Fixtures

struct PlantedBohrInstance {
  SubsetG a;
  SubsetG a1;
  SubsetG a2;
  SubsetG s;
  BohrSet b;
  BohrSet b1;
  BohrSet b2;
  Index shift = 0;
  std::uint64_t seed = 0;
};

/// Hypothesis-satisfying instance for the Bohr bootstrap on Z/N with regular
/// ambient B = B' = B'' of the given rank (0 means the whole group). A is a
/// narrow Bohr set inside B plus noise; A1 = A2 is a narrower core.
PlantedBohrInstance planted_bohr_instance(const Group& group, std::size_t rank,
                                          double noise, double eps, std::uint64_t seed);

}  // namespace aplab
