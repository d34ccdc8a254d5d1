#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "diffset/intset.hpp"
#include "diffset/rational.hpp"

namespace diffset {

// Shift of {x : ||r_j x|| < eps for every j}, with ||z|| the distance to the nearest integer.
struct BohrSpec {
  std::vector<Rational> freqs;  // each in [0, 1)
  Rational eps;
  std::int64_t shift = 0;
};

// Throws InputError unless freqs is nonempty, every r in [0, 1), and eps > 0.
void validate(const BohrSpec& spec);

// ||r x|| compared with eps exactly, through residues mod the denominator of r.
IntSet bohr_generate(const BohrSpec& spec, Window window);

struct BohrContainment {
  bool ok = true;
  std::vector<std::int64_t> violations;  // first <= 10 points of S ∩ interval outside A
};

BohrContainment bohr_contained(const IntSet& s, const IntSet& a, Window interval);

struct FreqOptions {
  std::int64_t q_max = 32;
  Rational threshold{1, 20};  // relative to |D|
};

struct FreqScore {
  Rational freq;
  double magnitude = 0;        // |Σ_{x in D} e(p x / q)|
  std::int64_t quantized = 0;  // llround(magnitude * 1e6), used for ranking
};

// Heuristic: nonzero p/q (p <= q/2, q <= q_max, lowest terms) ranked by exponential-sum
// magnitude, then q, then p. Only scores above threshold * |D| are kept.
std::vector<FreqScore> suggest_freq_scores(const IntSet& d, std::size_t k_max, const FreqOptions& opt = {});
std::vector<Rational> suggest_freqs(const IntSet& d, std::size_t k_max, const FreqOptions& opt = {});

struct BohrWitness {
  BohrSpec spec;
  Window interval;
  Rational coverage;           // |S ∩ I| / |D ∩ I|
  std::int64_t candidates_checked = 0;
};

struct BohrSearchOptions {
  std::size_t suggest_count = 6;
  std::int64_t max_shift = 64;
  FreqOptions freq;
};

std::vector<Rational> default_eps_grid();

// Candidates: subsets of the suggested frequencies by size then lexicographic, eps descending,
// shifts in [0, min(lcm of denominators, max_shift)). For each, the longest interval of D's window
// holding no point of S \ D. Returns the longest (first found on ties) if it reaches min_length.
std::optional<BohrWitness> piecewise_bohr_search(const IntSet& d, std::size_t k_max, std::vector<Rational> eps_grid,
                                                 std::int64_t min_length, const BohrSearchOptions& opt = {});

}  // namespace diffset
