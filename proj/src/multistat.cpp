#include "birank/multistat.hpp"

#include <algorithm>
#include <stdexcept>

#include "birank/qseries.hpp"

namespace birank {

int StatisticSpec::num_extended() const {
  int e = 0;
  for (const auto& c : components)
    if (c.extended) ++e;
  return e;
}

StatisticSpec make_statistic(const std::string& id, int r) {
  StatisticSpec s;
  s.id = id;
  auto need = [&](bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(std::string(id) + ": " + msg);
  };
  if (id == "hl-birank") {
    need(r == 2, "bipartition statistic needs 2 components");
    s.components = {{false, BaseStat::num_parts, 1}, {false, BaseStat::num_parts, -1}};
  } else if (id == "dyson-birank") {
    need(r == 2, "bipartition statistic needs 2 components");
    s.components = {{false, BaseStat::dyson_rank, 1}, {false, BaseStat::dyson_rank, 2}};
  } else if (id == "five-core-birank") {
    need(r == 2, "bipartition statistic needs 2 components");
    s.components = {{false, BaseStat::five_core_crank, 1}, {false, BaseStat::five_core_crank, 2}};
  } else if (id == "bicrank-1") {
    need(r == 2, "extended bipartition statistic needs 2 components");
    s.components = {{true, BaseStat::crank, 1}, {true, BaseStat::crank, 1}};
  } else if (id == "bicrank-2") {
    need(r == 2, "extended bipartition statistic needs 2 components");
    s.components = {{true, BaseStat::crank, 1}, {true, BaseStat::crank, 2}};
  } else if (id == "ghl-multirank") {
    need(r >= 2 && r % 2 == 0, "needs an even number of components");
    // component j pairs with r+1-j at coefficients +-j
    for (int j = 1; j <= r; ++j)
      s.components.push_back({false, BaseStat::num_parts, j <= r / 2 ? j : -(r + 1 - j)});
  } else if (id == "multicrank-i") {
    need(r >= 2 && r % 2 == 0, "needs shape (r/2, r/2) with even r");
    for (int j = 1; j <= r / 2; ++j) s.components.push_back({true, BaseStat::crank, j});
    for (int j = r / 2 + 1; j <= r; ++j) s.components.push_back({false, BaseStat::num_parts, 0});
  } else if (id == "multicrank-ii") {
    need(r >= 2 && r % 2 == 0, "needs shape (2, r-2) with even r");
    s.components = {{true, BaseStat::crank, 1}, {true, BaseStat::crank, 2}};
    // ordinary component j pairs with r-j+3 at coefficients +-j
    for (int j = 3; j <= r; ++j)
      s.components.push_back({false, BaseStat::num_parts, j <= (r + 2) / 2 ? j : -(r + 3 - j)});
  } else {
    throw std::invalid_argument("unknown statistic: " + id);
  }
  return s;
}

namespace {

int base_stat_value(BaseStat b, const Partition& p) {
  switch (b) {
    case BaseStat::num_parts: return p.num_parts();
    case BaseStat::dyson_rank: return dyson_rank(p);
    case BaseStat::crank: return crank(p);
    default: return five_core_crank(p);
  }
}

int base_stat_value_ext(BaseStat b, const ExtendedPartition& p) {
  if (p.kind() != ExtendedPartition::Kind::ordinary) {
    if (b != BaseStat::crank)
      throw std::invalid_argument("1a/1b only carry a crank");
    return crank_ext(p);
  }
  return b == BaseStat::crank ? crank_ext(p) : base_stat_value(b, p.partition());
}

}  // namespace

long stat_eval(const StatisticSpec& spec, const std::vector<ExtendedPartition>& tuple) {
  if (tuple.size() != spec.components.size())
    throw std::invalid_argument(spec.id + ": tuple has wrong component count");
  long acc = 0;
  for (size_t k = 0; k < tuple.size(); ++k) {
    const auto& cs = spec.components[k];
    if (!cs.extended && tuple[k].kind() != ExtendedPartition::Kind::ordinary)
      throw std::invalid_argument(spec.id + ": component " + std::to_string(k + 1) +
                                  " must be an ordinary partition");
    acc += cs.coeff * base_stat_value_ext(cs.stat, tuple[k]);
  }
  return acc;
}

int tuple_weight(const StatisticSpec& spec, const std::vector<ExtendedPartition>& tuple) {
  if (tuple.size() != spec.components.size())
    throw std::invalid_argument(spec.id + ": tuple has wrong component count");
  int w = 1;
  for (const auto& p : tuple) w *= weight_ext(p);
  return w;
}

bool ClassTable::all_equal() const {
  for (const auto& c : counts)
    if (c != counts.front()) return false;
  return true;
}

CycInt ClassTable::zeta_filter() const {
  CycInt acc(modulus);
  for (size_t m = 0; m < counts.size(); ++m)
    acc += CycInt::zeta_power(modulus, static_cast<long>(m), counts[m]);
  return acc;
}

ClassTable class_count(const StatisticSpec& spec, int n, int t) {
  if (n < 0) throw std::invalid_argument("class_count needs n >= 0");
  if (t < 2) throw std::invalid_argument("class_count needs modulus t >= 2");

  // Distribution of (stat value -> weighted count) per component size.
  // Keyed by (extended, base stat) so repeated components share work.
  std::map<std::pair<bool, BaseStat>, std::vector<std::map<int, BigInt>>> dists;
  for (const auto& cs : spec.components) {
    auto key = std::make_pair(cs.extended, cs.stat);
    if (dists.count(key)) continue;
    auto& per_size = dists[key];
    per_size.resize(static_cast<size_t>(n + 1));
    for (int s = 0; s <= n; ++s) {
      if (cs.extended) {
        for (const auto& e : enumerate_extended(s))
          per_size[static_cast<size_t>(s)][base_stat_value_ext(cs.stat, e)] += weight_ext(e);
      } else {
        for (const auto& p : enumerate_partitions(s))
          per_size[static_cast<size_t>(s)][base_stat_value(cs.stat, p)] += 1;
      }
    }
  }

  // DP over components: cur[size][residue] = weighted count.
  std::vector<std::vector<BigInt>> cur(static_cast<size_t>(n + 1),
                                       std::vector<BigInt>(static_cast<size_t>(t)));
  cur[0][0] = 1;
  for (const auto& cs : spec.components) {
    const auto& per_size = dists.at({cs.extended, cs.stat});
    std::vector<std::vector<BigInt>> next(static_cast<size_t>(n + 1),
                                          std::vector<BigInt>(static_cast<size_t>(t)));
    for (int s = 0; s <= n; ++s) {
      for (int m = 0; m < t; ++m) {
        const BigInt& c = cur[static_cast<size_t>(s)][static_cast<size_t>(m)];
        if (is_zero(c)) continue;
        for (int s2 = 0; s2 + s <= n; ++s2) {
          for (const auto& [v, cnt] : per_size[static_cast<size_t>(s2)]) {
            long res = (m + cs.coeff * v) % t;
            if (res < 0) res += t;
            next[static_cast<size_t>(s + s2)][static_cast<size_t>(res)] += c * cnt;
          }
        }
      }
    }
    cur = std::move(next);
  }

  ClassTable table;
  table.statistic = spec.id;
  table.modulus = t;
  table.n = n;
  table.counts = std::move(cur[static_cast<size_t>(n)]);
  table.total = 0;
  for (const auto& c : table.counts) table.total += c;
  return table;
}

std::vector<std::vector<ExtendedPartition>> enumerate_family_tuples(const StatisticSpec& spec, int n) {
  std::vector<std::vector<ExtendedPartition>> out;
  std::vector<ExtendedPartition> cur(spec.components.size());
  auto rec = [&](auto&& self, size_t k, int rem) -> void {
    if (k == spec.components.size()) {
      if (rem == 0) out.push_back(cur);
      return;
    }
    for (int s = 0; s <= rem; ++s) {
      if (spec.components[k].extended) {
        for (const auto& e : enumerate_extended(s)) {
          cur[k] = e;
          self(self, k + 1, rem - s);
        }
      } else {
        for (const auto& p : enumerate_partitions(s)) {
          cur[k] = ExtendedPartition(p);
          self(self, k + 1, rem - s);
        }
      }
    }
  };
  rec(rec, 0, n);
  return out;
}

BigInt p_minus_r(int n, int r) {
  if (n < 0 || r < 0) throw std::invalid_argument("p_minus_r needs n, r >= 0");
  if (r == 0) return n == 0 ? 1 : 0;
  ZSeries invE = euler_pentagonal(BigInt(0), n + 1).inverse();
  ZSeries acc = invE;
  for (int i = 1; i < r; ++i) acc = acc * invE;
  return acc.coeff(n);
}

QRClass quadratic_residue_class(long a, int t) {
  require_prime_order(t);  // odd prime (we only meet t >= 5)
  long m = a % t;
  if (m < 0) m += t;
  if (m == 0) return QRClass::zero;
  // Euler's criterion: a^{(t-1)/2} mod t
  long e = (t - 1) / 2, base = m, acc = 1;
  while (e) {
    if (e & 1) acc = acc * base % t;
    base = base * base % t;
    e >>= 1;
  }
  return acc == 1 ? QRClass::residue : QRClass::nonresidue;
}

// ---- theorem harness ------------------------------------------------------

namespace {

bool residue_qualifies(int id, const std::string& sub, int t, int n) {
  switch (id) {
    case 1: return n % 5 == 2 || n % 5 == 3 || n % 5 == 4;
    case 2: return n % 5 == 2 || n % 5 == 4;
    case 3: return n % 5 == 2 || n % 5 == 3 || n % 5 == 4;
    case 4: return sub == "i" ? n % 5 == 3 : (n % 5 == 2 || n % 5 == 4);
    case 5:
    case 6:
    case 7: {
      bool first = (sub == "i");
      if (id == 7 && sub == "iii")
        return quadratic_residue_class(8L * n + 1, t) == QRClass::nonresidue;
      if (first) return quadratic_residue_class(24L * n + 1, t) == QRClass::nonresidue;
      return quadratic_residue_class(8L * n + 1, t) != QRClass::residue;
    }
    default: return false;
  }
}

struct FamilyPlan {
  std::string stat_id;
  int components = 2;
  bool series_side = false;  // Theorem 5: single-coefficient divisibility
  int series_r = 0;
};

FamilyPlan theorem_plan(int id, const std::string& sub, int t) {
  switch (id) {
    case 1: return {"hl-birank", 2, false, 0};
    case 2: return {"dyson-birank", 2, false, 0};
    case 3: return {"five-core-birank", 2, false, 0};
    case 4: return {sub == "i" ? "bicrank-1" : "bicrank-2", 2, false, 0};
    case 5: return {"", 0, true, sub == "i" ? t - 1 : t - 3};
    case 6: return {"ghl-multirank", sub == "i" ? t - 1 : t - 3, false, 0};
    case 7:
      if (sub == "i") return {"multicrank-i", t - 1, false, 0};
      if (sub == "ii") return {"multicrank-i", t - 3, false, 0};
      return {"multicrank-ii", t - 3, false, 0};
    default: throw std::invalid_argument("theorem id must be 1..7");
  }
}

}  // namespace

std::vector<std::pair<std::string, int>> theorem_subcases(int id, int t) {
  switch (id) {
    case 4: return {{"i", 5}, {"ii", 5}};
    case 5:
    case 6:
    case 7: {
      std::vector<std::pair<std::string, int>> subs = {{"i", t}, {"ii", t}};
      if (id == 7) subs.push_back({"iii", t});
      return subs;
    }
    default: return {{"", 5}};
  }
}

TheoremReport verify_theorem(int id, const std::string& sub, int t, int max_n,
                             const std::vector<int>& extra_residues) {
  TheoremReport rep;
  rep.theorem = std::to_string(id) + (sub.empty() ? "" : "(" + sub + ")");
  rep.t = t;
  if (id >= 1 && id <= 4) {
    if (t != 5) throw std::invalid_argument("Theorems 1-4 are mod-5 statements");
  } else {
    require_prime_order(t);
  }
  if (id == 7 && sub == "iii" && t < 7) {
    rep.applicable = false;
    rep.note = "not applicable: the family E^2 x P^{t-5} needs t >= 7";
    return rep;
  }

  FamilyPlan plan = theorem_plan(id, sub, t);
  StatisticSpec spec;
  if (!plan.series_side) spec = make_statistic(plan.stat_id, plan.components);

  for (int n = 0; n <= max_n; ++n) {
    bool qualifies = residue_qualifies(id, sub, t, n);
    bool extra = std::find(extra_residues.begin(), extra_residues.end(), n % t) != extra_residues.end();
    if (!qualifies && !extra) continue;

    TheoremCheck chk;
    chk.n = n;
    if (plan.series_side) {
      BigInt v = p_minus_r(n, plan.series_r);
      chk.counts = {v};
      chk.pass = is_zero(BigInt(v % t));
      if (!chk.pass) chk.note = "p_{-" + std::to_string(plan.series_r) + "}(" + std::to_string(n) +
                                ") not divisible by " + std::to_string(t);
    } else {
      ClassTable table = class_count(spec, n, t);
      chk.counts = table.counts;
      chk.pass = table.all_equal();
      if (!chk.pass) chk.note = "classes unequal";
    }
    if (!qualifies) chk.note += (chk.note.empty() ? "" : "; ") + std::string("outside theorem hypothesis");
    rep.all_pass = rep.all_pass && chk.pass;
    rep.checks.push_back(std::move(chk));
  }
  return rep;
}

}  // namespace birank
