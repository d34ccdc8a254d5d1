#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "diffset/cover.hpp"
#include "diffset/density.hpp"
#include "diffset/embed.hpp"
#include "diffset/intset.hpp"
#include "diffset/rational.hpp"

namespace diffset {

struct PigeonholeWitness {
  std::int64_t xbar = 1;
  std::int64_t hits = 0;      // |(C - xbar) ∩ D|
  std::int64_t n_total = 1;   // N
  std::int64_t nu = 1;
  Rational ratio;             // hits / nu
  Rational bound;             // |C|/N · |D|/nu - |D|/N
};

// Exhaustive scan of xbar in [1, N] for the least maximizer of |(C - xbar) ∩ D|.
// C must live on [1, N] and D on [1, nu].
PigeonholeWitness pigeonhole_shift(const IntSet& c, const IntSet& d);

// max{j/i < gamma : 1 <= i <= n, 0 <= j <= i}. Needs 0 < gamma <= 1 and n >= 1.
Rational gamma_floor(const Rational& gamma, std::int64_t n);

// {θ in [0, N-n] : |C ∩ [θ+1, θ+i]| >= gamma·i for every 1 <= i <= n}, C on [1, N], n < N.
IntSet gamma_region(const IntSet& c, std::int64_t n, const Rational& gamma);

struct BlockWalk {
  Rational gamma_n;
  Rational bound;             // (|C|/N - γ_n - n/N) / (1 - γ_n)
  std::int64_t visits = 0;    // M_n: walk positions that lie in Γ_n
  std::int64_t steps = 0;
  bool holds = false;         // M_n > bound · N
};

// Walks θ_0 = 0, θ_{m+1} = θ_m + step(θ_m) while θ <= N - n, where step is 1 on Γ_n and
// otherwise the least i <= n with |C ∩ [θ+1, θ+i]| < gamma·i.
BlockWalk block_walk_bound(const IntSet& c, std::int64_t n, const Rational& gamma);

inline constexpr std::int64_t default_trace_cap = 16;

struct ExtractionCertificate {
  std::int64_t n_total = 0;   // N (C lives on [1, N])
  std::int64_t n = 0;
  Rational gamma;
  Rational gamma_n;
  Pattern e_prefix{std::vector<std::int64_t>{1}};
  std::int64_t gamma_size = 0;       // |Γ_n|
  std::int64_t class_count = 0;      // distinct traces seen on Γ_n
  IntSet theta{Window(0, 0)};        // on [0, N-n]
  Rational theta_bound;              // |Γ_n| / 2^n
  BlockWalk walk;
};

// Groups Γ_n by the trace (C - θ) ∩ [1, n] and keeps the most frequent class, ties going to
// the lexicographically least pattern. InfeasibleError when Γ_n is empty.
ExtractionCertificate trace_extract(const IntSet& c, std::int64_t n, const Rational& gamma,
                                    std::int64_t n_cap = default_trace_cap);

// Recomputes every claim of the certificate from C without the bit kernels used to build it.
std::vector<std::string> verify_extraction(const IntSet& c, const ExtractionCertificate& cert);

// min over 1 <= i <= n of |E ∩ [1, i]| / i.
Rational prefix_schnirelmann(const Pattern& e, std::int64_t n);

struct DenseCheck {
  std::size_t prefix_len = 0;        // F = first prefix_len elements of E
  DensityEstimate estimate;          // shift density of F in A at length N - n + 1
  std::int64_t contained = 0;        // |Θ| positions with (Ω + θ) + F ⊆ A
  bool holds = false;
};

struct DenseExtractResult {
  DensityEstimate alpha;             // best N_window of A
  std::int64_t omega = 0;
  Rational slack;
  ExtractionCertificate cert;
  Rational sigma_hat;
  std::vector<DenseCheck> dense_checks;
  std::vector<std::string> violations;
};

// C = best n_window-window of A rebased to [1, n_window]; extraction at gamma = α̂ - slack; then
// every prefix F of E is checked to embed at each Ω + θ, θ in Θ. n_window defaults to A's length.
DenseExtractResult dense_extract(const IntSet& a, std::int64_t n, const Rational& slack,
                          std::optional<std::int64_t> n_window = std::nullopt,
                          std::int64_t n_cap = default_trace_cap);

struct PipelineParams {
  std::int64_t n_total = 0;          // N
  std::int64_t nu = 0;
  std::int64_t n = 0;
  Rational slack{1, 50};
  Rational max_nu_ratio{1, 10};
  std::int64_t n_cap = default_trace_cap;
};

struct PipelineResult {
  PipelineParams params;
  DensityEstimate alpha;             // best N-window of A
  DensityEstimate beta;              // best nu-window of B
  std::int64_t omega = 0;
  std::int64_t xi = 0;
  PigeonholeWitness pigeon;
  IntSet w{Window(1, 1)};            // (C - ζ) ∩ D on [1, nu]
  Rational w_ratio;
  Rational w_bound;                  // α̂β̂ - nu/N
  Rational gamma;
  ExtractionCertificate cert;
  Rational sigma_hat;
  std::int64_t t_j = 0;              // Ω + ζ - Ξ
  Window j;                          // [Ξ, Ξ + nu - 1]
  Rational eps_achieved;             // |Θ| / nu
  std::int64_t part2_count = 0;      // |⋂_e (((A - t_J) ∩ B) - e) ∩ J|
  std::vector<std::string> violations;
};

// InfeasibleError when gamma <= 0 after the corrections.
PipelineResult pair_pipeline(const IntSet& a, const IntSet& b, const PipelineParams& p);

struct ChainSpotCheck {
  std::int64_t t = 0;
  std::vector<std::optional<bool>> member;  // per set; empty optional when the window does not fit
};

struct RuzsaChainResult {
  std::optional<DenseExtractResult> first;
  std::vector<PipelineResult> stages;   // stages 2..K
  std::vector<Rational> alphas;
  Rational product;
  Rational target;                   // product - (K-1) nu/N - slack
  Rational sigma_hat;
  IntSet w{Window(1, 1)};            // final material on [1, nu]
  std::vector<std::int64_t> offsets; // W + offsets[i] ⊆ A_i
  Rational eps;
  std::vector<ChainSpotCheck> spot_checks;
  std::vector<std::string> violations;
  const ExtractionCertificate& cert() const { return stages.empty() ? first->cert : stages.back().cert; }
};

// Stage 1 takes the best nu-window of A_1; stage k+1 runs the pipeline with A_{k+1} at scale N
// against the previous material on [1, nu]. Infeasible stages abort with their index.
RuzsaChainResult ruzsa_chain(const std::vector<IntSet>& sets, const PipelineParams& p, const Rational& eps,
                             std::size_t sample = 32);

struct JinCoverResult {
  PipelineResult pipeline;
  CoverCertificate cover;
  std::int64_t size_bound = 0;      // floor(1 / (α̂β̂))
  Window test_range;                 // X + t_J
  IntSet covered{Window(0, 0)};      // ((A - B) + F) ∩ test_range
  bool full = false;
  Window longest_run;
  std::int64_t longest_length = 0;
  std::vector<std::int64_t> baseline;  // greedy max-coverage shifts of A - B over test_range
  bool baseline_full = false;
  std::optional<CoverDensityReport> density_check;
  std::vector<std::string> violations;
};

// X must be an interval of candidate shifts.
JinCoverResult jin_cover(const IntSet& a, const IntSet& b, Window x, const PipelineParams& p,
                         std::size_t baseline_limit = 64);

struct IntersectCoverResult {
  PipelineResult pipeline;
  CoverCertificate cover;
  Rational alpha_beta;
  std::optional<std::int64_t> size_bound;  // floor((α̂β̂ - eps) / ((α̂β̂)^2 - eps))
  std::vector<std::int64_t> checked_t;
  std::vector<std::int64_t> failed_a;
  std::vector<std::int64_t> failed_b;
  std::optional<CoverDensityReport> density_check;
  std::vector<std::string> violations;
};

// Greedy cover by D̂_eps(W) + F on the pipeline material W, then every used shift is
// re-verified in Δ̂_eps(A) and Δ̂_eps(B) at length nu. InfeasibleError when eps >= (α̂β̂)^2.
IntersectCoverResult intersect_delta_cover(const IntSet& a, const IntSet& b, const Rational& eps, Window x,
                                           const PipelineParams& p);

}  // namespace diffset
