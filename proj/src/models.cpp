/*
 *   Copyright 2026 The rtk Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "rtk/models.hpp"

#include <algorithm>
#include <numeric>

namespace rtk::models {

namespace {

std::size_t bit_of(std::size_t bits, std::size_t state, std::size_t k) { return (state >> (bits - k)) & 1U; }

void require_bit(std::size_t bits, std::size_t k) {
  if (k == 0 || k > bits) fail(ErrorKind::UnknownIndex, "bit " + std::to_string(k) + " out of range");
}

StateSpace letters(std::size_t n, char first = 'a') {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.emplace_back(1, static_cast<char>(first + i));
  return StateSpace(std::move(labels));
}

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

} // namespace

StateSpace bit_strings(std::size_t bits) {
  if (bits == 0 || bits > 6) fail(ErrorKind::TooManyStates, "bit strings of length 1..6 only");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < (std::size_t{1} << bits); ++i) {
    std::string s;
    for (std::size_t k = 1; k <= bits; ++k) s += bit_of(bits, i, k) != 0U ? '1' : '0';
    labels.push_back(std::move(s));
  }
  return StateSpace(std::move(labels));
}

std::vector<SpecMap> all_deterministic_maps(const StateSpace& space) {
  const std::size_t n = space.size();
  double total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= static_cast<double>(n);
  if (total > 1e6) fail(ErrorKind::TooLarge, "more than a million deterministic maps");
  std::vector<SpecMap> out;
  std::vector<std::size_t> digits(n, 0);
  for (;;) {
    std::vector<StateMask> table(n);
    for (std::size_t i = 0; i < n; ++i) table[i] = bit(digits[i]);
    out.emplace_back(space, space, std::move(table));
    std::size_t pos = n;
    while (pos > 0 && ++digits[pos - 1] == n) digits[--pos] = 0;
    if (pos == 0) break;
  }
  return out;
}

std::vector<SpecMap> all_permutations(const StateSpace& space) {
  if (space.size() > 8) fail(ErrorKind::TooLarge, "more than 8 states");
  std::vector<std::size_t> p(space.size());
  std::iota(p.begin(), p.end(), 0);
  std::vector<SpecMap> out;
  do {
    out.push_back(SpecMap::from_function(space, space, [&](std::size_t i) { return p[i]; }));
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<SpecMap> bit_maps(std::size_t bits, std::size_t k) {
  require_bit(bits, k);
  const StateSpace sp = bit_strings(bits);
  const std::size_t m = std::size_t{1} << (bits - k);
  return {
      SpecMap::identity(sp),
      SpecMap::from_function(sp, sp, [&](std::size_t s) { return s ^ m; }),
      SpecMap::from_function(sp, sp, [&](std::size_t s) { return s & ~m; }),
      SpecMap::from_function(sp, sp, [&](std::size_t s) { return s | m; }),
  };
}

std::vector<std::string> bit_map_names(std::size_t k) {
  const std::string n = std::to_string(k);
  return {"id", "flip" + n, "set" + n + "0", "set" + n + "1"};
}

SpecMap exchange_bits(std::size_t bits, std::size_t i, std::size_t j) {
  require_bit(bits, i);
  require_bit(bits, j);
  const StateSpace sp = bit_strings(bits);
  const std::size_t mi = std::size_t{1} << (bits - i), mj = std::size_t{1} << (bits - j);
  return SpecMap::from_function(sp, sp, [&](std::size_t s) {
    std::size_t out = s & ~(mi | mj);
    if ((s & mi) != 0U) out |= mj;
    if ((s & mj) != 0U) out |= mi;
    return out;
  });
}

Lumping prefix_lumping(std::size_t bits, std::size_t k) {
  require_bit(bits, k);
  const StateSpace sp = bit_strings(bits);
  const std::size_t shift = bits - k;
  std::vector<StateMask> table(sp.size(), 0);
  for (std::size_t a = 0; a < sp.size(); ++a)
    for (std::size_t b = 0; b < sp.size(); ++b)
      if ((a >> shift) == (b >> shift)) table[a] |= bit(b);
  return Lumping(SpecMap(sp, sp, std::move(table)));
}

ApproximationStructure hamming_structure(std::size_t bits) {
  const StateSpace sp = bit_strings(bits);
  std::vector<std::string> labels;
  for (std::size_t e = 0; e <= bits; ++e) labels.push_back(std::to_string(e));
  ApproxIndex ix = ApproxIndex::chain(labels, true);
  std::vector<std::tuple<std::string, std::string, std::string>> sums;
  for (std::size_t a = 0; a <= bits; ++a)
    for (std::size_t b = 0; b <= bits; ++b) sums.emplace_back(labels[a], labels[b], labels[std::min(a + b, bits)]);
  ix.add_chain(labels, sums);
  std::vector<SpecMap> fam;
  for (std::size_t e = 0; e <= bits; ++e) {
    std::vector<StateMask> table(sp.size(), 0);
    for (std::size_t a = 0; a < sp.size(); ++a)
      for (std::size_t b = 0; b < sp.size(); ++b)
        if (popcount(static_cast<StateMask>(a ^ b)) <= e) table[a] |= bit(b);
    fam.emplace_back(sp, sp, std::move(table));
  }
  return {std::move(ix), std::move(fam)};
}

Specification random_spec(Rng& rng, const StateSpace& space) {
  StateMask m = 0;
  while (m == 0) m = rng() & space.all();
  return {space, m};
}

SpecMap random_map(Rng& rng, const StateSpace& space) {
  const bool det = (rng() & 1U) != 0U;
  std::vector<StateMask> table(space.size());
  for (auto& t : table) t = det ? bit(uniform(rng, 0, space.size() - 1)) : random_spec(rng, space).mask();
  return {space, space, std::move(table)};
}

ResourceTheory random_theory(Rng& rng, std::size_t max_states, std::size_t max_elements) {
  const StateSpace sp = letters(uniform(rng, 1, max_states));
  std::size_t gens = uniform(rng, 1, 3);
  for (;;) {
    std::vector<SpecMap> g;
    for (std::size_t i = 0; i < gens; ++i) g.push_back(random_map(rng, sp));
    try {
      return ResourceTheory(close_monoid(sp, g, max_elements));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::CapExceeded) throw;
      if (gens > 1) --gens;
    }
  }
}

Lumping random_partition_lumping(Rng& rng, const StateSpace& space) {
  std::vector<std::size_t> block(space.size());
  for (auto& b : block) b = uniform(rng, 0, space.size() - 1);
  std::vector<StateMask> table(space.size(), 0);
  for (std::size_t a = 0; a < space.size(); ++a)
    for (std::size_t b = 0; b < space.size(); ++b)
      if (block[a] == block[b]) table[a] |= bit(b);
  return Lumping(SpecMap(space, space, std::move(table)));
}

SpecMap random_embedding(Rng& rng, std::size_t max_target) {
  const std::size_t t = uniform(rng, 1, max_target);
  const std::size_t s = uniform(rng, 1, t);
  const StateSpace src = letters(s, 'a');
  const StateSpace tgt = letters(t, 'p');
  std::vector<std::size_t> order(t);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<StateMask> table(s, 0);
  for (std::size_t i = 0; i < t; ++i) {
    if (i < s) {
      table[i] |= bit(order[i]);
    } else {
      const std::size_t who = uniform(rng, 0, s);
      if (who < s) table[who] |= bit(order[i]);
    }
  }
  return {src, tgt, std::move(table)};
}

Rational random_probability(Rng& rng, int den) {
  const auto d = static_cast<long>(uniform(rng, 1, static_cast<std::size_t>(den)));
  const auto n = static_cast<long>(uniform(rng, 0, static_cast<std::size_t>(d)));
  Rational q(n, d);
  q.canonicalize();
  return q;
}

Distribution random_distribution(Rng& rng, std::size_t n, int den) {
  std::vector<long> raw(n);
  long total = 0;
  while (total == 0) {
    total = 0;
    for (auto& r : raw) {
      r = static_cast<long>(uniform(rng, 0, static_cast<std::size_t>(den)));
      total += r;
    }
  }
  std::vector<Rational> w;
  for (auto r : raw) {
    Rational q(r, total);
    q.canonicalize();
    w.push_back(q);
  }
  return Distribution(std::move(w));
}

RationalPoint random_point(Rng& rng, std::size_t dim) {
  std::vector<Rational> c;
  for (std::size_t i = 0; i < dim; ++i) {
    const auto d = static_cast<long>(uniform(rng, 1, 6));
    const auto n = static_cast<long>(uniform(rng, 0, static_cast<std::size_t>(8 * d))) - 4 * d;
    Rational q(n, d);
    q.canonicalize();
    c.push_back(q);
  }
  return RationalPoint(std::move(c));
}

} // namespace rtk::models
