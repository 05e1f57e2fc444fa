#pragma once

#include <optional>
#include <string>
#include <vector>

namespace isod {

/// Coprime pair (d, n) with d, n >= 2. Throws OutOfRange, NotCoprime.
class DegreePair {
 public:
  DegreePair(unsigned d, unsigned n);

  unsigned d() const noexcept { return d_; }
  unsigned n() const noexcept { return n_; }
  /// The residue in 1..d-1 congruent to -n mod d.
  unsigned n_star() const noexcept;
  /// nd - n - d.
  unsigned bound() const noexcept { return n_ * d_ - n_ - d_; }

  friend bool operator==(const DegreePair&, const DegreePair&) = default;

 private:
  unsigned d_;
  unsigned n_;
};

/// {n* + jd : n* + jd < n(d-1)}, ascending.
std::vector<unsigned> s_set(const DegreePair& pair);
/// nd - n - d.
unsigned max_bound(const DegreePair& pair);

/// Parts in descending order.
struct Partition {
  std::vector<unsigned> parts;

  unsigned sum() const noexcept;
  /// e.g. `[3, 2, 2]`.
  std::string to_string() const;
  friend bool operator==(const Partition&, const Partition&) = default;
};

/// Streams the partitions of u in descending-lexicographic order, starting
/// with [u]. Throws CapExceeded when u > cap, OutOfRange when u = 0.
class PartitionEnumerator {
 public:
  explicit PartitionEnumerator(unsigned u, unsigned cap = 60);
  std::optional<Partition> next();

 private:
  std::vector<unsigned> current_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<Partition> enumerate_partitions(unsigned u, unsigned cap = 60);

/// Part size allowed in a bad partition: gcd(a, d) > 1 or n | a.
bool is_bad_part(unsigned a, const DegreePair& pair) noexcept;
bool is_bad(const Partition& p, const DegreePair& pair) noexcept;

/// No partition of u is bad. Throws OutOfRange on u = 0.
bool bad_partitions_empty(unsigned u, const DegreePair& pair);
/// Lexicographically smallest bad partition of u (descending form), if any.
/// Throws OutOfRange for u > 2000 when one exists.
std::optional<Partition> smallest_bad_partition(unsigned u, const DegreePair& pair);
/// Every bad partition of u. Throws OutOfRange for u > cap.
std::vector<Partition> bad_partitions(unsigned u, const DegreePair& pair, unsigned cap = 30);

/// Possible degrees of the extension witnessing isotropy: divisors delta of
/// parts a coprime to d with n not dividing delta, over the partitions of
/// nd - n - d. Throws BadPartitionsExist.
std::vector<unsigned> degree_set(const DegreePair& pair);

/// Appends the part mu*d that completes a partition of u in S to one of
/// nd - n - d. Throws NotInS, AlreadyMaximal.
Partition embed_subpartition(const Partition& p, const DegreePair& pair);

}  // namespace isod
