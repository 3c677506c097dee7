#ifndef BIRANK_MULTISTAT_HPP
#define BIRANK_MULTISTAT_HPP

#include <map>
#include <string>
#include <vector>

#include "birank/bigint.hpp"
#include "birank/cyclotomic.hpp"
#include "birank/partition.hpp"

namespace birank {

// Single-partition statistic entering a composite statistic.
enum class BaseStat { num_parts, dyson_rank, crank, five_core_crank };

struct ComponentSpec {
  bool extended;   // component ranges over extended partitions (weighted)
  BaseStat stat;
  long coeff;      // multiplier of the component statistic
};

/* A composite statistic on fixed-shape (extended) multipartitions:
 * sum_k coeff_k * stat_k(pi_k).  Extended components contribute their
 * +-1 weights multiplicatively. */
struct StatisticSpec {
  std::string id;
  std::vector<ComponentSpec> components;

  int num_components() const { return static_cast<int>(components.size()); }
  int num_extended() const;
};

/* Statistic registry.  `components` fixes the family shape where the
 * statistic is shape-generic:
 *   hl-birank, dyson-birank, five-core-birank   - bipartitions (2)
 *   bicrank-1, bicrank-2                        - extended bipartitions (2)
 *   ghl-multirank                               - P^r, r even
 *   multicrank-i                                - E^{r/2} x P^{r/2}, r even
 *   multicrank-ii                               - E^2 x P^{r-2}, r even
 * Throws on unknown id or a shape the statistic does not admit. */
StatisticSpec make_statistic(const std::string& id, int components = 2);

long stat_eval(const StatisticSpec& spec, const std::vector<ExtendedPartition>& tuple);
int tuple_weight(const StatisticSpec& spec, const std::vector<ExtendedPartition>& tuple);

/* Residue-class totals of a statistic mod t over the family of (weighted)
 * tuples of total size n. */
struct ClassTable {
  std::string statistic;
  int modulus = 0;
  int n = 0;
  std::vector<BigInt> counts;  // indexed by residue 0..t-1, weighted
  BigInt total;                // sum of counts = p_{-r}(n)

  bool all_equal() const;
  // Root-of-unity filter sum_m counts[m] zeta^m in Z[zeta_t].
  CycInt zeta_filter() const;
};

/* Exhaustive weighted count per residue class, organized as per-component
 * statistic distributions convolved over the integer compositions of n
 * (component index major, size minor).  Equals the naive tuple sum. */
ClassTable class_count(const StatisticSpec& spec, int n, int t);

// All tuples of the family with |tuple| = n, deterministic order; small n only.
std::vector<std::vector<ExtendedPartition>> enumerate_family_tuples(const StatisticSpec& spec, int n);

// Coefficient of q^n in 1/E(q)^r.
BigInt p_minus_r(int n, int r);

enum class QRClass { zero, residue, nonresidue };
// Euler-criterion classification of a mod t (t an odd prime).
QRClass quadratic_residue_class(long a, int t);

// ---- theorem harness ------------------------------------------------------

struct TheoremCheck {
  int n = 0;
  std::vector<BigInt> counts;  // class table, or the single value for Theorem 5
  bool pass = false;
  std::string note;
};

struct TheoremReport {
  std::string theorem;  // e.g. "2", "4(i)", "7(iii)"
  int t = 5;
  bool applicable = true;
  bool all_pass = true;
  std::string note;
  std::vector<TheoremCheck> checks;
};

/* Brute-force verification of Theorems 1-7.  `sub` is "", "i", "ii" or
 * "iii"; `extra_residues` admits extra n mod t classes beyond the
 * theorem's hypothesis (used to exhibit the Dyson-birank counterexample).
 * Violations are report entries, never exceptions. */
TheoremReport verify_theorem(int id, const std::string& sub, int t, int max_n,
                             const std::vector<int>& extra_residues = {});

// The (id, sub, t) combinations a bare id expands to, e.g. 4 -> {4(i),4(ii)}.
std::vector<std::pair<std::string, int>> theorem_subcases(int id, int t);

}  // namespace birank

#endif
