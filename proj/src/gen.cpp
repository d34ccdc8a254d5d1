#include "diffset/gen.hpp"

#include <algorithm>

#include "diffset/density.hpp"
#include "diffset/errors.hpp"
#include "diffset/parallel.hpp"

namespace diffset {

namespace {

constexpr std::uint64_t golden_gamma = 0x9E3779B97F4A7C15ull;

std::int64_t pos_mod(std::int64_t x, std::int64_t m) {
  std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

std::int64_t ipow(std::int64_t base, std::int64_t e) {
  __int128 r = 1;
  for (std::int64_t i = 0; i < e; ++i) {
    r *= base;
    if (r > (__int128{1} << 62)) return std::int64_t{1} << 62;
  }
  return static_cast<std::int64_t>(r);
}

}  // namespace

std::uint64_t SplitMix64::mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::next() {
  state_ += golden_gamma;
  return mix(state_);
}

std::uint64_t hash_draw(std::uint64_t seed, std::int64_t x) {
  return SplitMix64::mix(seed + (static_cast<std::uint64_t>(x) + 1) * golden_gamma);
}

std::string to_string(GenKind kind) {
  switch (kind) {
    case GenKind::bernoulli: return "bernoulli";
    case GenKind::residues: return "residues";
    case GenKind::ap_union: return "ap_union";
    case GenKind::blocks: return "blocks";
    case GenKind::thick_triple: return "thick_triple";
    case GenKind::chain_in_thick: return "chain_in_thick";
  }
  return "?";
}

GenKind parse_gen_kind(const std::string& name) {
  for (auto k : {GenKind::bernoulli, GenKind::residues, GenKind::ap_union, GenKind::blocks, GenKind::thick_triple,
                 GenKind::chain_in_thick})
    if (to_string(k) == name) return k;
  throw InputError("unknown generator kind '" + name + "'");
}

IntSet gen_bernoulli(Window w, const Rational& p, std::uint64_t seed) {
  if (p < 0 || p > 1) throw InputError("bernoulli p must lie in [0, 1]");
  const __int128 pn = numerator_i64(p), pd = denominator_i64(p);
  std::vector<char> in(static_cast<std::size_t>(w.length()));
  parallel_for(
      0, w.length(),
      [&](std::int64_t i) {
        // 53-bit uniform u; include iff u / 2^53 < p.
        __int128 u = hash_draw(seed, w.lo + i) >> 11;
        in[static_cast<std::size_t>(i)] = u * pd < pn * (__int128{1} << 53);
      },
      4096);
  return IntSet::from_predicate(w, [&](std::int64_t x) { return in[static_cast<std::size_t>(x - w.lo)] != 0; });
}

IntSet gen_residues(Window w, std::int64_t m, const std::vector<std::int64_t>& classes) {
  if (m < 1) throw InputError("residue modulus must be >= 1");
  std::vector<char> keep(static_cast<std::size_t>(m), 0);
  for (auto c : classes) keep[static_cast<std::size_t>(pos_mod(c, m))] = 1;
  return IntSet::from_predicate(w, [&](std::int64_t x) { return keep[static_cast<std::size_t>(pos_mod(x, m))] != 0; });
}

IntSet gen_ap_union(Window w, const std::vector<ApSpec>& aps) {
  BitVector bits(static_cast<std::size_t>(w.length()));
  for (const auto& ap : aps) {
    if (ap.len && *ap.len < 0) throw InputError("progression length must be >= 0");
    if (ap.d == 0) {
      if ((!ap.len || *ap.len > 0) && w.contains(ap.a)) bits.set(static_cast<std::size_t>(ap.a - w.lo));
      continue;
    }
    if (ap.len) {
      for (std::int64_t k = 0; k < *ap.len; ++k) {
        std::int64_t x = ap.a + k * ap.d;
        if (w.contains(x)) bits.set(static_cast<std::size_t>(x - w.lo));
      }
    } else {
      const std::int64_t d = ap.d < 0 ? -ap.d : ap.d;
      for (std::int64_t x = w.lo + pos_mod(ap.a - w.lo, d); x <= w.hi; x += d) bits.set(static_cast<std::size_t>(x - w.lo));
    }
  }
  return IntSet(w, std::move(bits));
}

IntSet gen_blocks(Window w, std::int64_t coef, std::int64_t exp, std::int64_t len_coef) {
  if (coef < 1 || exp < 1 || len_coef < 1) throw InputError("block parameters must be >= 1");
  BitVector bits(static_cast<std::size_t>(w.length()));
  for (std::int64_t k = 1;; ++k) {
    std::int64_t s = coef * ipow(k, exp);
    if (s > w.hi) break;
    for (std::int64_t x = std::max(s, w.lo); x <= std::min(s + len_coef * k - 1, w.hi); ++x)
      bits.set(static_cast<std::size_t>(x - w.lo));
  }
  return IntSet(w, std::move(bits));
}

ThickTriple gen_thick_triple(Window w, std::int64_t s, std::int64_t levels) {
  if (s < 1 || levels < 1 || levels > 20) throw InputError("thick triple needs scale >= 1 and 1 <= levels <= 20");
  std::vector<std::int64_t> pos;
  for (std::int64_t k = 1; k <= levels; ++k) pos.push_back(s * ipow(4, k));
  const std::int64_t far = pos.back() - pos.front();
  if (!w.contains(Window(pos.front(), pos.back() + s - 1)) || !w.contains(Window(-far - 2 * s, far + 2 * s)))
    throw InputError("thick triple window must contain [" + std::to_string(-far - 2 * s) + ", " +
                     std::to_string(std::max(far + 2 * s, pos.back() + s - 1)) + "]");
  BitVector ab(static_cast<std::size_t>(w.length())), c(static_cast<std::size_t>(w.length()));
  for (auto p : pos)
    for (std::int64_t x = p; x < p + s; ++x) ab.set(static_cast<std::size_t>(x - w.lo));
  for (auto p : pos)
    for (auto q : pos)
      for (std::int64_t x = p - q - 2 * s; x <= p - q + 2 * s; ++x) c.set(static_cast<std::size_t>(x - w.lo));
  ThickTriple t;
  t.a = IntSet(w, ab);
  t.b = IntSet(w, ab);
  t.c = IntSet(w, c);
  return t;
}

std::vector<std::string> verify_thick_triple(const ThickTriple& t, std::int64_t s) {
  std::vector<std::string> bad;
  auto check = [&](const IntSet& x, const char* name) {
    if (!thick_witness(x, s)) bad.push_back(std::string(name) + " has no interval of length " + std::to_string(s));
    if (!thick_witness(complement_in(x, x.window()), s))
      bad.push_back(std::string("complement of ") + name + " has no interval of length " + std::to_string(s));
  };
  check(t.a, "A");
  check(t.b, "B");
  check(t.c, "C");
  IntSet d = difference_set(t.a, t.b);
  std::int64_t outside = 0;
  d.for_each([&](std::int64_t x) { outside += t.c.contains(x) ? 0 : 1; });
  if (outside) bad.push_back(std::to_string(outside) + " differences of A - B fall outside C");
  return bad;
}

IntSet chain_in_thick(const IntSet& t, std::int64_t count, std::int64_t start, Window w) {
  if (count < 1) throw InputError("chain length must be >= 1");
  if (!w.contains(start)) throw InputError("chain start outside the window");
  std::vector<std::int64_t> chain{start};
  // Candidates for the next element: ⋂_i (T + b_i), kept on w.
  IntSet cand = restrict_to(shift_set(t, start), w);
  while (static_cast<std::int64_t>(chain.size()) < count) {
    auto next = cand.next_member(chain.back() + 1);
    if (!next)
      throw InfeasibleError("chain stops at " + std::to_string(chain.size()) + " elements inside the window");
    chain.push_back(*next);
    cand = intersect(cand, restrict_to(shift_set(t, *next), w));
  }
  return IntSet::from_members(chain, w);
}

std::vector<std::string> verify_chain(const IntSet& b, const IntSet& t) {
  std::vector<std::string> bad;
  auto m = b.members();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) {
      std::int64_t d = m[j] - m[i];
      if (d != 0 && !t.contains(d) && !t.contains(-d))
        bad.push_back("difference " + std::to_string(d) + " is outside T and -T");
    }
  return bad;
}

GenResult generate(const GenSpec& spec) {
  GenResult r;
  const Window& w = spec.window;
  switch (spec.kind) {
    case GenKind::bernoulli:
      r.sets.push_back(gen_bernoulli(w, spec.p, spec.seed));
      break;
    case GenKind::residues:
      r.sets.push_back(gen_residues(w, spec.modulus, spec.classes));
      break;
    case GenKind::ap_union:
      r.sets.push_back(gen_ap_union(w, spec.aps));
      break;
    case GenKind::blocks:
      r.sets.push_back(gen_blocks(w, spec.block_coef, spec.block_exp, spec.block_len_coef));
      break;
    case GenKind::thick_triple: {
      ThickTriple t = gen_thick_triple(w, spec.scale, spec.levels);
      r.violations = verify_thick_triple(t, spec.scale);
      r.names = {"A", "B", "C"};
      r.sets = {t.a, t.b, t.c};
      return r;
    }
    case GenKind::chain_in_thick: {
      if (!spec.t_spec) throw InputError("chain_in_thick needs a nested spec for T");
      GenResult inner = generate(*spec.t_spec);
      if (inner.sets.size() != 1) throw InputError("chain_in_thick needs T to be a single set");
      IntSet b = chain_in_thick(inner.sets[0], spec.count, spec.start, w);
      r.violations = verify_chain(b, inner.sets[0]);
      r.sets.push_back(std::move(b));
      break;
    }
  }
  r.names = {"set"};
  return r;
}

}  // namespace diffset
