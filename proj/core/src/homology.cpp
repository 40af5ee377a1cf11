#include "dzero/homology.hpp"

#include <vector>

#include "dzero/error.hpp"
#include "parallel.hpp"

namespace dzero {

std::size_t HilbertTable::at(int i, long d) const {
  auto it = entries.find({i, d});
  return it == entries.end() ? 0 : it->second;
}

std::map<long, std::size_t> HilbertTable::row(int i) const {
  std::map<long, std::size_t> out;
  for (const auto& [key, dim] : entries) {
    if (key.first == i) out.emplace(key.second, dim);
  }
  return out;
}

std::set<int> HilbertTable::degrees() const {
  std::set<int> out;
  for (const auto& [key, dim] : entries) out.insert(key.first);
  return out;
}

HilbertTable homology_dimensions(const Complex& c, long cutoff, unsigned threads) {
  if (cutoff < 0) throw InvariantError("homology: cutoff must be >= 0");
  HilbertTable table;
  table.cutoff = cutoff;
  if (c.is_zero()) return table;

  // One rank job per (differential, internal degree).
  struct Job {
    int degree;
    long internal;
    std::size_t rank = 0;
  };
  std::vector<Job> jobs;
  std::vector<PolyMatrix> diffs;
  std::vector<int> diff_degrees;
  for (int i = c.min_degree(); i < c.max_degree(); ++i) {
    PolyMatrix d = c.differential(i);
    if (d.rows() == 0 || d.cols() == 0 || d.is_zero()) continue;
    diff_degrees.push_back(i);
    diffs.push_back(std::move(d));
  }
  std::vector<std::pair<std::size_t, long>> job_keys;
  for (std::size_t k = 0; k < diffs.size(); ++k) {
    for (long d = 0; d <= cutoff; ++d) {
      jobs.push_back({diff_degrees[k], d});
      job_keys.emplace_back(k, d);
    }
  }
  detail::parallel_for(jobs.size(), threads, [&](std::size_t j) {
    jobs[j].rank = matrix_rank_in_degree(diffs[job_keys[j].first], job_keys[j].second);
  });

  std::map<std::pair<int, long>, std::size_t> ranks;
  for (const auto& job : jobs) ranks[{job.degree, job.internal}] = job.rank;
  auto rank_of = [&](int i, long d) -> std::size_t {
    auto it = ranks.find({i, d});
    return it == ranks.end() ? 0 : it->second;
  };

  for (const auto& [i, m] : c.terms()) {
    for (long d = 0; d <= cutoff; ++d) {
      const std::size_t dim = m.dimension_in_degree(d);
      const std::size_t outgoing = rank_of(i, d);
      const std::size_t incoming = rank_of(i - 1, d);
      if (outgoing + incoming > dim) {
        throw InvariantError("homology: rank exceeds dimension (d o d != 0?)");
      }
      const std::size_t h = dim - outgoing - incoming;
      if (h != 0) table.entries.emplace(std::make_pair(i, d), h);
    }
  }
  return table;
}

TableComparison compare_tables(HilbertTable a, HilbertTable b) {
  if (a.cutoff != b.cutoff) throw InvariantError("compare_tables: cutoffs differ");
  TableComparison out{true, std::nullopt, std::move(a), std::move(b)};
  std::set<std::pair<int, long>> keys;
  for (const auto& [key, dim] : out.table_a.entries) keys.insert(key);
  for (const auto& [key, dim] : out.table_b.entries) keys.insert(key);
  for (const auto& key : keys) {
    const std::size_t da = out.table_a.at(key.first, key.second);
    const std::size_t db = out.table_b.at(key.first, key.second);
    if (da != db) {
      out.pass = false;
      out.witness = TableDiscrepancy{key.first, key.second, da, db};
      break;
    }
  }
  return out;
}

TableComparison same_homology_dims(const Complex& a, const Complex& b, long cutoff,
                                   unsigned threads) {
  require_same_ring(a.ring(), b.ring());
  return compare_tables(homology_dimensions(a, cutoff, threads),
                        homology_dimensions(b, cutoff, threads));
}

RegularityVerdict is_regular_up_to(const ZeroLocusPresentation& p, long cutoff,
                                   unsigned threads) {
  RegularityVerdict out{true, std::nullopt, homology_dimensions(koszul_complex(p), cutoff, threads)};
  for (const auto& [key, dim] : out.table.entries) {
    if (key.first < 0) {
      out.regular_up_to_cutoff = false;
      out.witness = RegularityWitness{key.first, key.second, dim};
      break;
    }
  }
  return out;
}

long default_cutoff(const ZeroLocusPresentation& p) {
  long sum = 0;
  for (int d : p.all_degrees()) sum += d;
  return 2 * sum;
}

long euler_characteristic_of_terms(const Complex& c, long d) {
  long chi = 0;
  for (const auto& [i, m] : c.terms()) {
    const long dim = static_cast<long>(m.dimension_in_degree(d));
    chi += (i % 2 == 0) ? dim : -dim;
  }
  return chi;
}

long euler_characteristic_of_table(const HilbertTable& t, long d) {
  long chi = 0;
  for (const auto& [key, dim] : t.entries) {
    if (key.second != d) continue;
    chi += (key.first % 2 == 0) ? static_cast<long>(dim) : -static_cast<long>(dim);
  }
  return chi;
}

}  // namespace dzero
