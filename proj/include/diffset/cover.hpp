#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "diffset/density.hpp"
#include "diffset/intset.hpp"
#include "diffset/rational.hpp"

namespace diffset {

// Exact finite Cauchy–Schwarz over a family of subsets of [1, N]:
// (Σ|C_i|)^2 <= N (Σ|C_i| + 2 Σ_{i<j} |C_i ∩ C_j|).
struct CsFamilyResult {
  BigInt lhs;
  BigInt rhs;
  bool holds = false;
};

CsFamilyResult cs_family_inequality(std::span<const IntSet> family, std::int64_t n_total);

// (k^2 γ̄^2 - Σ c_i) / (k(k-1)) with c_i = |C_i|/N and γ̄ = min c_i: a lower bound for the
// largest pairwise overlap |C_i ∩ C_j|/N. Needs k >= 2.
Rational guaranteed_overlap(std::span<const IntSet> family, std::int64_t n_total);

// The actual largest |C_i ∩ C_j|/N over i < j.
Rational max_pairwise_overlap(std::span<const IntSet> family, std::int64_t n_total);

// |C ∩ (C - t)| for a set C on [1, N], memoized over t in (-N, N).
class OverlapTable {
 public:
  explicit OverlapTable(const IntSet& c);
  std::int64_t operator()(std::int64_t t) const;
  std::int64_t n_total() const { return n_; }

 private:
  const IntSet* c_;
  std::int64_t n_;
  mutable std::vector<std::int64_t> cache_;
};

struct CoverCertificate {
  std::vector<std::int64_t> shifts;      // F in pick order; shifts[0] is the mandated x
  Rational eps;
  std::int64_t set_count = 0;            // |C|
  std::int64_t n_total = 0;              // N
  std::int64_t k_bound = 0;              // floor((γ̂ - eps) / (γ̂² - eps))
  Rational margin;                       // max |x| / N over candidates
  std::optional<std::int64_t> k_bound_edge;  // same bound at γ̂ - margin, when defined
  bool covered = false;
  std::vector<std::int64_t> candidates;  // X in greedy order
  std::vector<std::int64_t> cover_shift; // first shift covering each candidate (parallel to candidates)
  std::vector<std::int64_t> uncovered;

  Rational gamma_hat() const { return Rational(set_count, n_total); }
};

// Greedy order: ascending |x|, positive before negative on ties. Duplicates removed.
std::vector<std::int64_t> greedy_order(std::span<const std::int64_t> xs);

// D̂_eps(C) = {t : |C ∩ (C - t)| > eps N} on C ⊆ [1, N] (window must be [1, N]).
// x_1 = mandated_x, then repeatedly the first uncovered candidate in greedy order.
// InfeasibleError when eps >= γ̂²; InputError when mandated_x is not a candidate.
CoverCertificate greedy_shift_cover(const IntSet& c, std::span<const std::int64_t> candidates,
                                    const Rational& eps, std::int64_t mandated_x);

// Independent re-check of a certificate against C, recounting every overlap member by member.
// Returns the list of violated claims (empty when the certificate is sound).
std::vector<std::string> check_cover(const IntSet& c, const CoverCertificate& cert);

// D̂_eps(C) materialized on the given window of shifts.
IntSet materialize_dhat(const IntSet& c, const Rational& eps, Window shifts);

struct DeltaCoverResult {
  CoverCertificate cover;
  DensityEstimate alpha;                  // best length-n window of A
  std::int64_t omega = 0;                 // C = (A - omega) ∩ [1, n]
  std::vector<std::int64_t> checked_t;    // distinct shifts t = x - f used by the cover
  std::vector<std::int64_t> failed_t;     // used t not in Δ̂_eps(A) at length n
  std::vector<std::string> violations;
};

// Greedy cover on the best length-n window of A, then checks every used t against
// Δ̂_eps(A) at the same n. n + |t| must not exceed A's window length for any used t.
DeltaCoverResult delta_cover(const IntSet& a, std::span<const std::int64_t> candidates, const Rational& eps,
                          std::int64_t n, std::int64_t mandated_x);

enum class CoverMode { full_cover, thick_cover };

struct CoverDensityReport {
  CoverMode mode = CoverMode::full_cover;
  bool premise_holds = false;
  std::int64_t k = 0;
  std::int64_t n = 0;
  Rational slack;
  Rational bound;                     // 1/k - slack
  std::optional<DensityEstimate> estimate;
  std::optional<Window> region;       // windows scanned by the estimator
  bool holds = false;                 // estimate >= bound (vacuously true when the premise fails)
};

// full_cover: if A + F ⊇ test_range, then every length-n window of A inside
// test_range - min F has density >= 1/k - k·span(F)/n.
// thick_cover: if A + F contains an interval I of length `length` inside test_range, some length-n
// window (n <= length) within I - F has density >= 1/k.
CoverDensityReport cover_density_verify(const IntSet& a, std::span<const std::int64_t> shifts, CoverMode mode,
                           Window test_range, std::int64_t n, std::optional<std::int64_t> length = std::nullopt);

struct QuotientCoverReport {
  std::int64_t h = 0;
  Window range;                            // X_base as an interval
  std::optional<DeltaCoverResult> base;     // absent for h = 0
  std::vector<std::int64_t> shifts;        // F, already divided by h
  IntSet quotient_set{Window(0, 0)};       // Δ̂_eps(A)/h on range - F
  bool covered = false;
  std::vector<std::int64_t> uncovered;
  std::optional<CoverDensityReport> density_check;
  std::vector<std::string> violations;
};

// Covers X_base by Δ̂_eps(A)/h + F through delta_cover with X = h·X_base. For h = 0 the
// quotient is all of X_base as soon as 0 ∈ Δ̂_eps(A).
QuotientCoverReport quotient_cover(const IntSet& a, std::int64_t h, const Rational& eps, std::int64_t n,
                                   Window x_base, std::optional<std::int64_t> density_n = std::nullopt);

}  // namespace diffset
