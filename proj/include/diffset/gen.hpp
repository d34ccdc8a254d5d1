#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "diffset/intset.hpp"
#include "diffset/rational.hpp"

namespace diffset {

// SplitMix64 (Steele, Lea, Flood 2014). Output k (k = 1, 2, ...) of a generator seeded with s is
// mix(s + k * 0x9E3779B97F4A7C15).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  static std::uint64_t mix(std::uint64_t z);

 private:
  std::uint64_t state_;
};

// Counter-mode draw for integer x: output number u + 1 of SplitMix64(seed), where u is x read
// as an unsigned 64-bit integer. Independent of chunking and thread count.
std::uint64_t hash_draw(std::uint64_t seed, std::int64_t x);

enum class GenKind { bernoulli, residues, ap_union, blocks, thick_triple, chain_in_thick };

std::string to_string(GenKind kind);
GenKind parse_gen_kind(const std::string& name);

// Progression {a + k d}: every integer k when len is absent, else 0 <= k < len.
struct ApSpec {
  std::int64_t a = 0;
  std::int64_t d = 1;
  std::optional<std::int64_t> len;
};

struct GenSpec {
  GenKind kind = GenKind::bernoulli;
  Window window;
  std::uint64_t seed = 0;
  // bernoulli
  Rational p{1, 2};
  // residues
  std::int64_t modulus = 1;
  std::vector<std::int64_t> classes;
  // ap_union
  std::vector<ApSpec> aps;
  // blocks: block k >= 1 is [coef * k^exp, coef * k^exp + len_coef * k - 1]
  std::int64_t block_coef = 1;
  std::int64_t block_exp = 3;
  std::int64_t block_len_coef = 1;
  // thick_triple: blocks of length scale at scale * 4^k, k = 1..levels
  std::int64_t scale = 1;
  std::int64_t levels = 4;
  // chain_in_thick
  std::shared_ptr<GenSpec> t_spec;
  std::int64_t count = 0;
  std::int64_t start = 0;
};

struct GenResult {
  std::vector<std::string> names;
  std::vector<IntSet> sets;
  std::vector<std::string> violations;  // failed self-checks of certified kinds
};

IntSet gen_bernoulli(Window w, const Rational& p, std::uint64_t seed);
IntSet gen_residues(Window w, std::int64_t m, const std::vector<std::int64_t>& classes);
IntSet gen_ap_union(Window w, const std::vector<ApSpec>& aps);
IntSet gen_blocks(Window w, std::int64_t coef, std::int64_t exp, std::int64_t len_coef);

struct ThickTriple {
  IntSet a{Window(0, 0)};
  IntSet b{Window(0, 0)};
  IntSet c{Window(0, 0)};
};

// A = B = blocks of length s at s 4^k (k = 1..levels); C = bands [s(4^i - 4^j) - 2s, s(4^i - 4^j) + 2s].
// The window must hold every block and band.
ThickTriple gen_thick_triple(Window w, std::int64_t s, std::int64_t levels);
std::vector<std::string> verify_thick_triple(const ThickTriple& t, std::int64_t s);

// Greedy b_1 = start < b_2 < ... in the window with every b_j - b_i in T. InfeasibleError when
// the window runs out first.
IntSet chain_in_thick(const IntSet& t, std::int64_t count, std::int64_t start, Window w);

// Δ(B) ⊆ T ∪ -T ∪ {0}, by direct pair enumeration.
std::vector<std::string> verify_chain(const IntSet& b, const IntSet& t);

GenResult generate(const GenSpec& spec);

}  // namespace diffset
