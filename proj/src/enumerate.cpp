#include "rigidity/enumerate.hpp"

#include <atomic>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "rigidity/json_util.hpp"

namespace rigidity {

namespace {

void sorted_vectors_rec(int n, Weight max_weight, Weight from, std::vector<Weight>& current,
                        std::vector<std::vector<Weight>>& out) {
  if (static_cast<int>(current.size()) == n) {
    out.push_back(current);
    return;
  }
  for (Weight w = from; w <= max_weight; ++w) {
    if (w == 0) continue;
    current.push_back(w);
    sorted_vectors_rec(n, max_weight, w, current, out);
    current.pop_back();
  }
}

// Depth-first walk over nondecreasing index sequences into the sorted
// weight-vector table; preorder visits data in lexicographic order.
class Walker {
 public:
  Walker(const SearchBounds& b, const std::vector<std::vector<Weight>>& table, bool prune)
      : bounds_(b), table_(table), prune_(prune), counts_(2 * static_cast<std::size_t>(b.max_weight) + 1, 0) {}

  std::vector<CensusEntry> run_from(std::size_t first) {
    out_.clear();
    chosen_.clear();
    push(first);
    descend(first);
    pop();
    return std::move(out_);
  }

 private:
  std::size_t slot(Weight w) const { return static_cast<std::size_t>(w + bounds_.max_weight); }

  long imbalance_delta(Weight w, int dir) const {
    const Weight k = w < 0 ? -w : w;
    const long before = counts_[slot(k)] - counts_[slot(-k)];
    const long after = before + (w > 0 ? dir : -dir);
    return std::labs(after) - std::labs(before);
  }

  void push(std::size_t idx) {
    for (Weight w : table_[idx]) {
      imbalance_ += imbalance_delta(w, +1);
      ++counts_[slot(w)];
    }
    chosen_.push_back(idx);
  }

  void pop() {
    for (Weight w : table_[chosen_.back()]) {
      imbalance_ += imbalance_delta(w, -1);
      --counts_[slot(w)];
    }
    chosen_.pop_back();
  }

  void descend(std::size_t last) {
    const long remaining = bounds_.max_points - static_cast<long>(chosen_.size());
    if (prune_ && imbalance_ > bounds_.n * remaining) return;
    if (!prune_ || imbalance_ == 0) examine();
    if (remaining == 0) return;
    for (std::size_t next = last; next < table_.size(); ++next) {
      push(next);
      descend(next);
      pop();
    }
  }

  void examine() {
    std::vector<std::vector<Weight>> rows;
    rows.reserve(chosen_.size());
    for (std::size_t idx : chosen_) rows.push_back(table_[idx]);
    FixedPointDatum d = validate(bounds_.n, rows);
    auto profile = consistent_profile(d);
    if (!profile) return;
    CensusEntry entry{std::move(d), std::move(*profile), Hamiltonian{}, true, 0};
    entry.classification = classify_profile(entry.profile, bounds_.n);
    entry.balance = balance_check(entry.datum).balanced;
    entry.weight_sum = weight_sum(entry.datum);
    out_.push_back(std::move(entry));
  }

  const SearchBounds& bounds_;
  const std::vector<std::vector<Weight>>& table_;
  bool prune_;
  std::vector<long> counts_;
  long imbalance_ = 0;
  std::vector<std::size_t> chosen_;
  std::vector<CensusEntry> out_;
};

}  // namespace

CostCeilingExceeded::CostCeilingExceeded(Integer estimate, double ceiling)
    : std::runtime_error("search bounds exceed the cost ceiling: estimated " + estimate.get_str() +
                         " raw shapes, ceiling " + Integer(ceiling).get_str()),
      estimate_(std::move(estimate)) {}

Integer estimated_cost(const SearchBounds& b) {
  Integer total = 0;
  Integer per_point;
  mpz_ui_pow_ui(per_point.get_mpz_t(), 2 * static_cast<unsigned long>(b.max_weight),
                static_cast<unsigned long>(b.n));
  Integer term = 1;
  for (int m = 1; m <= b.max_points; ++m) {
    term *= per_point;
    total += term;
  }
  return total;
}

std::vector<std::vector<Weight>> sorted_weight_vectors(int n, Weight max_weight) {
  std::vector<std::vector<Weight>> out;
  std::vector<Weight> current;
  sorted_vectors_rec(n, max_weight, -max_weight, current, out);
  return out;
}

std::vector<CensusEntry> enumerate_consistent(const SearchBounds& b, const EnumerateOptions& options) {
  if (b.n <= 0 || b.max_points <= 0 || b.max_weight <= 0) {
    throw std::invalid_argument("search bounds must be positive");
  }
  const Integer estimate = estimated_cost(b);
  if (options.cost_ceiling > 0 && estimate > Integer(options.cost_ceiling)) {
    throw CostCeilingExceeded(estimate, options.cost_ceiling);
  }

  const auto table = sorted_weight_vectors(b.n, b.max_weight);
  std::vector<std::vector<CensusEntry>> batches(table.size());
  std::atomic<std::size_t> next_task{0};
  auto worker = [&] {
    Walker walker(b, table, options.prune_with_balance);
    for (std::size_t task = next_task++; task < table.size(); task = next_task++) {
      batches[task] = walker.run_from(task);
    }
  };

  const unsigned jobs = std::max(1u, options.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(jobs);
    for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(worker);
  }

  std::vector<CensusEntry> entries;
  for (auto& batch : batches) {
    for (auto& e : batch) entries.push_back(std::move(e));
  }
  return entries;
}

nlohmann::json census_record(const CensusEntry& e) {
  nlohmann::json chi = nlohmann::json::array();
  for (const auto& c : *e.profile.chi) chi.push_back(integer_json(c));
  return {{"datum", to_json(e.datum)},
          {"chi", std::move(chi)},
          {"np", e.profile.np},
          {"classification", classification_name(e.classification)},
          {"balance", e.balance},
          {"weight_sum", integer_json(e.weight_sum)}};
}

std::string census_text(const std::vector<CensusEntry>& entries) {
  std::ostringstream out;
  for (const auto& e : entries) out << census_record(e).dump() << '\n';
  return out.str();
}

std::map<std::string, long> census_summary(const std::vector<CensusEntry>& entries) {
  std::map<std::string, long> summary{{"Hamiltonian", 0}, {"NonHamiltonian", 0}, {"NotRealizable", 0}};
  for (const auto& e : entries) ++summary[classification_name(e.classification)];
  return summary;
}

}  // namespace rigidity
