#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace sb {

/// Integer partition stored as weakly decreasing positive parts.
/// The empty partition has no parts.
class Partition {
 public:
  Partition() = default;
  /// Validates the parts; throws PreconditionError unless they are positive
  /// and weakly decreasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Sorts and drops zeros instead of rejecting.
  static Partition from_unsorted(std::vector<int> parts);
  /// Text grammar: comma separated parts; "", "0" and "∅" denote the empty partition.
  static Partition parse(const std::string& text);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const { return size_; }
  bool empty() const { return parts_.empty(); }
  /// Part i (0-based), zero beyond the length.
  int operator[](int i) const { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }

  Partition conjugate() const;
  bool contains(const Partition& other) const;

  /// Canonical text form; the empty partition prints as "∅".
  std::string str() const;

  /// Orders by size, then lexicographically by parts (so (1,1) < (2)).
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);
  friend bool operator==(const Partition& a, const Partition& b) = default;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Ordered list of partitions; "pure" when no entry is empty.
class PartitionTuple {
 public:
  PartitionTuple() = default;
  explicit PartitionTuple(std::vector<Partition> entries) : entries_(std::move(entries)) {}
  PartitionTuple(std::initializer_list<Partition> entries) : entries_(entries) {}

  /// Text grammar: partitions joined by "|", e.g. "2|1,1".
  static PartitionTuple parse(const std::string& text);

  const std::vector<Partition>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  const Partition& operator[](std::size_t i) const { return entries_[i]; }
  bool pure() const;
  /// Throws PreconditionError when the tuple is not pure.
  void require_pure() const;
  std::string str() const;

  friend bool operator==(const PartitionTuple&, const PartitionTuple&) = default;
  friend auto operator<=>(const PartitionTuple&, const PartitionTuple&) = default;

 private:
  std::vector<Partition> entries_;
};

/// counts[i] = number of tuple entries of size i; compared lexicographically
/// with implicit trailing zeros.
class Magnitude {
 public:
  explicit Magnitude(std::vector<std::uint64_t> counts);
  const std::vector<std::uint64_t>& counts() const { return counts_; }
  std::uint64_t operator[](std::size_t i) const { return i < counts_.size() ? counts_[i] : 0; }

  friend std::strong_ordering operator<=>(const Magnitude& a, const Magnitude& b);
  friend bool operator==(const Magnitude& a, const Magnitude& b) { return (a <=> b) == 0; }

 private:
  std::vector<std::uint64_t> counts_;  // trailing zeros trimmed
};

Magnitude magnitude(const PartitionTuple& t);

/// All partitions of n, in decreasing lexicographic order ((n) first).
std::vector<Partition> partitions_of(int n);

/// Number of standard Young tableaux of shape lambda (hook length formula).
std::uint64_t specht_dim(const Partition& lambda);

/// dim S_lambda(k^n) by the hook-content formula; 0 when lambda has more than n rows.
std::uint64_t schur_dim(const Partition& lambda, int n);

std::uint64_t factorial(int n);

}  // namespace sb
