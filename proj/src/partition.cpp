#include "birank/partition.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace birank {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
    size_ += parts_[i];
  }
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return Partition();
  std::vector<int> c(static_cast<size_t>(parts_.front()));
  for (int j = 1; j <= parts_.front(); ++j) {
    int cnt = 0;
    for (int part : parts_)
      if (part >= j) ++cnt;
    c[static_cast<size_t>(j - 1)] = cnt;
  }
  return Partition(std::move(c));
}

std::vector<int> Partition::hook_lengths() const {
  // hook(i,j) = (lambda_i - j) + (lambda'_j - i) + 1, via the conjugate's columns
  std::vector<int> cols = conjugate().parts();
  std::vector<int> hooks;
  for (size_t i = 0; i < parts_.size(); ++i)
    for (int j = 1; j <= parts_[i]; ++j)
      hooks.push_back(parts_[i] - j + cols[static_cast<size_t>(j - 1)] - static_cast<int>(i + 1) + 1);
  return hooks;
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "-";
  std::ostringstream out;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) out << '+';
    out << parts_[i];
  }
  return out.str();
}

Partition Partition::parse(const std::string& text) {
  if (text == "-" || text.empty()) return Partition();
  std::vector<int> parts;
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, '+')) {
    size_t pos = 0;
    int v = std::stoi(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument("bad partition token: " + tok);
    parts.push_back(v);
  }
  return Partition(std::move(parts));
}

namespace {
void enumerate_rec(int n, int max_part, std::vector<int>& stack,
                   std::vector<Partition>& out) {
  if (n == 0) {
    out.emplace_back(stack);
    return;
  }
  for (int k = std::min(n, max_part); k >= 1; --k) {
    stack.push_back(k);
    enumerate_rec(n - k, k, stack, out);
    stack.pop_back();
  }
}
}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw std::invalid_argument("cannot enumerate partitions of a negative number");
  std::vector<Partition> out;
  std::vector<int> stack;
  enumerate_rec(n, n, stack, out);
  return out;
}

int dyson_rank(const Partition& p) { return p.largest_part() - p.num_parts(); }

int crank(const Partition& p) {
  int ones = 0;
  for (int part : p.parts())
    if (part == 1) ++ones;
  if (ones == 0) return p.largest_part();
  int mu = 0;
  for (int part : p.parts())
    if (part > ones) ++mu;
  return mu - ones;
}

int five_core_crank(const Partition& p) {
  int r[5] = {0, 0, 0, 0, 0};
  const auto& parts = p.parts();
  for (size_t i = 0; i < parts.size(); ++i) {
    // row i+1 contributes labels (j - (i+1)) mod 5 for j = 1..parts[i]
    for (int j = 1; j <= parts[i]; ++j) {
      int lbl = (j - static_cast<int>(i) - 1) % 5;
      if (lbl < 0) lbl += 5;
      ++r[lbl];
    }
  }
  return r[1] + 2 * r[2] - 2 * r[3] - r[4];
}

bool is_t_core(const Partition& p, int t) {
  if (t < 2) throw std::invalid_argument("t-core test needs t >= 2");
  for (int h : p.hook_lengths())
    if (h % t == 0) return false;
  return true;
}

std::vector<Partition> enumerate_five_cores(int n) {
  std::vector<Partition> out;
  for (auto& p : enumerate_partitions(n))
    if (is_t_core(p, 5)) out.push_back(std::move(p));
  return out;
}

std::string ExtendedPartition::to_string() const {
  switch (kind_) {
    case Kind::one_a: return "1a";
    case Kind::one_b: return "1b";
    default: return p_.to_string();
  }
}

ExtendedPartition ExtendedPartition::parse(const std::string& text) {
  if (text == "1a") return one_a();
  if (text == "1b") return one_b();
  return ExtendedPartition(Partition::parse(text));
}

int crank_ext(const ExtendedPartition& p) {
  switch (p.kind()) {
    case ExtendedPartition::Kind::one_a: return 1;
    case ExtendedPartition::Kind::one_b: return 0;
    default: return crank(p.partition());
  }
}

int weight_ext(const ExtendedPartition& p) {
  return p.kind() == ExtendedPartition::Kind::one_b ? -1 : 1;
}

std::vector<ExtendedPartition> enumerate_extended(int n) {
  std::vector<ExtendedPartition> out;
  for (auto& p : enumerate_partitions(n)) out.emplace_back(std::move(p));
  if (n == 1) {
    out.push_back(ExtendedPartition::one_a());
    out.push_back(ExtendedPartition::one_b());
  }
  return out;
}

}  // namespace birank
