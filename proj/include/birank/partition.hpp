#ifndef BIRANK_PARTITION_HPP
#define BIRANK_PARTITION_HPP

#include <string>
#include <vector>

namespace birank {

/* A partition: weakly decreasing positive parts.  The empty list is the
 * unique partition of 0. */
class Partition {
 public:
  Partition() = default;
  // parts must be weakly decreasing and positive; throws otherwise.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int num_parts() const { return static_cast<int>(parts_.size()); }
  int largest_part() const { return parts_.empty() ? 0 : parts_.front(); }
  bool empty() const { return parts_.empty(); }

  bool operator==(const Partition& rhs) const { return parts_ == rhs.parts_; }

  Partition conjugate() const;
  std::vector<int> hook_lengths() const;

  // Text form "3+2+1"; the empty partition prints as "-".
  std::string to_string() const;
  static Partition parse(const std::string& text);

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

// All partitions of n, each exactly once, largest-part-first recursive order.
std::vector<Partition> enumerate_partitions(int n);

// Largest part minus number of parts; 0 for the empty partition.
int dyson_rank(const Partition& p);

/* crank: the largest part when there are no ones, else (number of parts
 * larger than the number of ones) minus (number of ones); 0 for empty. */
int crank(const Partition& p);

/* r_1 + 2 r_2 - 2 r_3 - r_4 where r_j counts cells of the Young diagram
 * labelled j in the 5-residue diagram (cell (i,j), 1-indexed, carries
 * label (j - i) mod 5). */
int five_core_crank(const Partition& p);

// True iff no hook length is divisible by t.
bool is_t_core(const Partition& p, int t);

std::vector<Partition> enumerate_five_cores(int n);

/* Extended partitions: the ordinary ones plus two extra objects 1_a, 1_b of
 * size 1.  1_b carries weight -1, everything else weight +1;
 * crank(1_a) = 1 and crank(1_b) = 0. */
class ExtendedPartition {
 public:
  enum class Kind { ordinary, one_a, one_b };

  ExtendedPartition() : kind_(Kind::ordinary) {}
  explicit ExtendedPartition(Partition p) : kind_(Kind::ordinary), p_(std::move(p)) {}
  static ExtendedPartition one_a() { return ExtendedPartition(Kind::one_a); }
  static ExtendedPartition one_b() { return ExtendedPartition(Kind::one_b); }

  Kind kind() const { return kind_; }
  const Partition& partition() const { return p_; }
  int size() const { return kind_ == Kind::ordinary ? p_.size() : 1; }

  std::string to_string() const;
  static ExtendedPartition parse(const std::string& text);

 private:
  explicit ExtendedPartition(Kind k) : kind_(k) {}
  Kind kind_;
  Partition p_;
};

int crank_ext(const ExtendedPartition& p);
int weight_ext(const ExtendedPartition& p);

// Ordinary partitions of n plus, when n == 1, the two extras.
std::vector<ExtendedPartition> enumerate_extended(int n);

}  // namespace birank

#endif
