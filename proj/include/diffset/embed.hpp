#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "diffset/density.hpp"
#include "diffset/intset.hpp"

namespace diffset {

// A finite configuration: sorted, distinct, nonempty.
class Pattern {
 public:
  // Sorts and deduplicates; an empty list is an InputError.
  explicit Pattern(std::vector<std::int64_t> elems);

  const std::vector<std::int64_t>& elems() const { return elems_; }
  std::int64_t min() const { return elems_.front(); }
  std::int64_t max() const { return elems_.back(); }
  std::int64_t span() const { return max() - min(); }
  std::size_t size() const { return elems_.size(); }

  friend bool operator==(const Pattern&, const Pattern&) = default;
  // Lexicographic on the sorted element lists.
  friend bool operator<(const Pattern& a, const Pattern& b) { return a.elems_ < b.elems_; }

 private:
  std::vector<std::int64_t> elems_;
};

struct EmbedWitness {
  std::int64_t t = 0;
  Pattern pattern;
};

// {t in srange : t + F ⊆ Y}, where positions outside Y's window count as non-members.
IntSet embedding_shifts(const Pattern& f, const IntSet& y, Window srange);

// Least t in srange with t + F ⊆ Y. srange + F must fit in Y's window.
std::optional<EmbedWitness> embed_witness(const Pattern& f, const IntSet& y, Window srange);

// The shift set ⋂_{x in F}(Y - x) ∩ srange. srange + F must fit in Y's window.
IntSet shift_set_of(const Pattern& f, const IntSet& y, Window srange);

// upper_banach_est of shift_set_of(F, Y, srange) at length n.
DensityEstimate dense_embed_est(const Pattern& f, const IntSet& y, Window srange, std::int64_t n);

// True when t + F ⊆ Y, checked member by member.
bool embeds_at(const Pattern& f, const IntSet& y, std::int64_t t);

struct EmbeddabilityReport {
  bool ok = true;
  std::size_t traces_checked = 0;
  std::optional<Pattern> failing_config;
};

// Checks that every trace X ∩ [a, a+m) embeds into Y with a shift in srange. Only traces
// starting at a member of X are enumerated: every other nonempty trace is a subset of one
// of those and embeds with the same shift. Traces are checked in order of their least element.
EmbeddabilityReport window_embeddable(const IntSet& x, const IntSet& y, std::int64_t m, Window srange);

// Least (start, d) with start, start+d, ..., start+(k-1)d in A; start first, then d.
std::optional<std::pair<std::int64_t, std::int64_t>> find_ap(const IntSet& a, std::int64_t k);

// upper_banach_est of {x : x, x+d, ..., x+(k-1)d in Y} at length n.
DensityEstimate ap_shift_density(const IntSet& y, std::int64_t d, std::int64_t k, std::int64_t n);

}  // namespace diffset
