#include "isodescent/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "isodescent/error.hpp"

namespace isod {

namespace {
constexpr unsigned kWitnessCap = 2000;
}

DegreePair::DegreePair(unsigned d, unsigned n) : d_(d), n_(n) {
  if (d < 2 || n < 2)
    throw Error(Errc::OutOfRange, "degree pair needs d, n >= 2, got d=" + std::to_string(d) + " n=" + std::to_string(n));
  if (d > 1000 || n > 1000) throw Error(Errc::OutOfRange, "degree pair components are limited to 1000");
  if (std::gcd(d, n) != 1)
    throw Error(Errc::NotCoprime, "d=" + std::to_string(d) + " and n=" + std::to_string(n) + " are not coprime");
}

unsigned DegreePair::n_star() const noexcept { return (d_ - n_ % d_) % d_; }

std::vector<unsigned> s_set(const DegreePair& pair) {
  std::vector<unsigned> out;
  const unsigned limit = pair.n() * (pair.d() - 1);
  for (unsigned u = pair.n_star(); u < limit; u += pair.d()) out.push_back(u);
  if (out.empty()) throw Error(Errc::OutOfRange, "empty S set");
  return out;
}

unsigned max_bound(const DegreePair& pair) { return pair.bound(); }

unsigned Partition::sum() const noexcept { return std::accumulate(parts.begin(), parts.end(), 0u); }

std::string Partition::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? ", " : "") + std::to_string(parts[i]);
  return out + "]";
}

PartitionEnumerator::PartitionEnumerator(unsigned u, unsigned cap) {
  if (u == 0) throw Error(Errc::OutOfRange, "partitions of 0 are not enumerated");
  if (u > cap)
    throw Error(Errc::CapExceeded, "enumerating partitions of " + std::to_string(u) + " exceeds the cap " +
                                       std::to_string(cap));
  current_ = {u};
}

std::optional<Partition> PartitionEnumerator::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    return Partition{current_};
  }
  // drop trailing ones, decrement the last part > 1, refill greedily
  unsigned ones = 0;
  while (!current_.empty() && current_.back() == 1) {
    current_.pop_back();
    ++ones;
  }
  if (current_.empty()) {
    done_ = true;
    return std::nullopt;
  }
  unsigned k = --current_.back();
  unsigned rest = ones + 1;
  while (rest > 0) {
    unsigned part = std::min(k, rest);
    current_.push_back(part);
    rest -= part;
  }
  return Partition{current_};
}

std::vector<Partition> enumerate_partitions(unsigned u, unsigned cap) {
  PartitionEnumerator en(u, cap);
  std::vector<Partition> out;
  while (auto p = en.next()) out.push_back(std::move(*p));
  return out;
}

bool is_bad_part(unsigned a, const DegreePair& pair) noexcept { return std::gcd(a, pair.d()) > 1 || a % pair.n() == 0; }

bool is_bad(const Partition& p, const DegreePair& pair) noexcept {
  return std::all_of(p.parts.begin(), p.parts.end(), [&](unsigned a) { return is_bad_part(a, pair); });
}

bool bad_partitions_empty(unsigned u, const DegreePair& pair) {
  if (u == 0) throw Error(Errc::OutOfRange, "u must be positive");
  // allowed parts are exactly the multiples of n or of a prime factor of d,
  // so they generate the same additive semigroup as those generators
  std::vector<unsigned> gens{pair.n()};
  for (unsigned q = 2, rest = pair.d(); rest > 1; ++q)
    if (rest % q == 0) {
      gens.push_back(q);
      while (rest % q == 0) rest /= q;
    }
  std::vector<char> reachable(u + 1, 0);
  reachable[0] = 1;
  for (unsigned g : gens)
    for (unsigned v = g; v <= u; ++v)
      if (reachable[v - g]) reachable[v] = 1;
  return !reachable[u];
}

std::optional<Partition> smallest_bad_partition(unsigned u, const DegreePair& pair) {
  if (bad_partitions_empty(u, pair)) return std::nullopt;
  if (u > kWitnessCap) throw Error(Errc::OutOfRange, "bad-partition witness search is limited to u <= 2000");
  // fits[m][v]: v is a sum of allowed parts each <= m
  std::vector<std::vector<char>> fits(u + 1, std::vector<char>(u + 1, 0));
  for (unsigned m = 0; m <= u; ++m) {
    fits[m][0] = 1;
    if (m == 0) continue;
    fits[m] = fits[m - 1];
    if (is_bad_part(m, pair))
      for (unsigned v = m; v <= u; ++v)
        if (fits[m][v - m]) fits[m][v] = 1;
  }
  Partition out;
  unsigned rest = u, ceiling = u;
  while (rest > 0) {
    unsigned a = 1;
    while (a <= ceiling && !(is_bad_part(a, pair) && a <= rest && fits[a][rest - a])) ++a;
    out.parts.push_back(a);
    rest -= a;
    ceiling = a;
  }
  return out;
}

std::vector<Partition> bad_partitions(unsigned u, const DegreePair& pair, unsigned cap) {
  if (u == 0 || u > cap)
    throw Error(Errc::OutOfRange, "listing bad partitions of " + std::to_string(u) + " exceeds the cap " +
                                      std::to_string(cap));
  std::vector<Partition> out;
  PartitionEnumerator en(u, cap);
  while (auto p = en.next())
    if (is_bad(*p, pair)) out.push_back(std::move(*p));
  return out;
}

std::vector<unsigned> degree_set(const DegreePair& pair) {
  const unsigned top = pair.bound();
  if (!bad_partitions_empty(top, pair))
    throw Error(Errc::BadPartitionsExist, "bad partitions of " + std::to_string(top) + " exist for d=" +
                                              std::to_string(pair.d()) + ", n=" + std::to_string(pair.n()) +
                                              (top <= kWitnessCap ? ", e.g. " + smallest_bad_partition(top, pair)->to_string()
                                                                  : std::string()));
  // every a <= top is a part of [a, 1, ..., 1], and divisors of a are <= a
  std::vector<unsigned> out;
  for (unsigned delta = 1; delta <= top; ++delta)
    if (std::gcd(delta, pair.d()) == 1 && delta % pair.n() != 0) out.push_back(delta);
  return out;
}

Partition embed_subpartition(const Partition& p, const DegreePair& pair) {
  const unsigned u = p.sum();
  const auto s = s_set(pair);
  if (!std::binary_search(s.begin(), s.end(), u))
    throw Error(Errc::NotInS, std::to_string(u) + " is not in S for d=" + std::to_string(pair.d()) + ", n=" +
                                  std::to_string(pair.n()));
  if (u == pair.bound()) throw Error(Errc::AlreadyMaximal, p.to_string() + " already partitions nd - n - d");
  Partition out = p;
  out.parts.push_back(pair.bound() - u);
  std::sort(out.parts.begin(), out.parts.end(), std::greater<>());
  return out;
}

}  // namespace isod
