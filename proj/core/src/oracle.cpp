#include "dodo/oracle.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include "dodo/errors.hpp"

namespace dodo::oracle {

namespace {

enum : std::uint8_t { kNone = 0, kOn = 1, kOff = 2 };

struct WorkerState {
  std::uint8_t shift = kNone;  // shift on the previous day
  int run = 0;
  int on_total = 0;

  std::uint64_t key() const {
    return (static_cast<std::uint64_t>(shift) << 60) | (static_cast<std::uint64_t>(run) << 30) |
           static_cast<std::uint64_t>(on_total);
  }
};

struct KeyHash {
  std::size_t operator()(const std::vector<std::uint64_t>& key) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (auto k : key) {
      h ^= k + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

// Dead-state memo pays off only once the tree is deep enough.
constexpr int kMemoMinDays = 8;

class Search {
 public:
  Search(const Instance& instance, SearchMode mode, const SearchOptions& options)
      : in_(instance),
        b_(instance.bounds),
        mode_(mode),
        options_(options),
        days_(instance.days),
        n_(static_cast<int>(instance.workers)),
        states_(static_cast<std::size_t>(days_ + 1), std::vector<WorkerState>(static_cast<std::size_t>(n_))),
        ties_(static_cast<std::size_t>(days_ + 1), std::vector<int>(static_cast<std::size_t>(n_), 0)),
        chosen_(static_cast<std::size_t>(days_ + 1), 0),
        use_memo_(days_ >= kMemoMinDays) {}

  SearchResult run() {
    dfs(1);
    return std::move(result_);
  }

 private:
  // Group key of worker w before day d: equal keys are interchangeable.
  int group_key(int d, int w) const {
    if (mode_ == SearchMode::EnumerateAll) return options_.break_symmetry ? ties_[d - 1][w] : w;
    return -1;  // resolved by state comparison
  }

  bool done() const {
    if (mode_ == SearchMode::EnumerateAll) return result_.schedules.size() >= options_.max_solutions;
    return result_.feasible;
  }

  std::vector<std::uint64_t> memo_key(int d) const {
    std::vector<std::uint64_t> key;
    key.reserve(static_cast<std::size_t>(n_) + 1);
    for (const auto& s : states_[d - 1]) key.push_back(s.key());
    std::sort(key.begin(), key.end());
    key.push_back(static_cast<std::uint64_t>(d));
    return key;
  }

  void record() {
    result_.feasible = true;
    if (mode_ == SearchMode::Decide) return;
    Schedule s(days_, n_);
    for (int d = 1; d <= days_; ++d) {
      for (int w = 0; w < n_; ++w) {
        if (chosen_[d] >> w & 1) s.set(w + 1, d, true);
      }
    }
    result_.schedules.push_back(std::move(s));
  }

  bool final_runs_ok() const {
    for (const auto& s : states_[days_]) {
      if (s.shift == kOn && s.run < b_.min_work_run) return false;
      if (s.shift == kOff && s.run < b_.min_off_run) return false;
    }
    return true;
  }

  void dfs(int d) {
    if (d > days_) {
      if (final_runs_ok()) record();
      return;
    }
    std::vector<std::uint64_t> key;
    if (use_memo_) {
      key = memo_key(d);
      if (dead_.count(key)) return;
    }
    const std::size_t found_before = result_.schedules.size();
    const bool feasible_before = result_.feasible;
    expand(d);
    const bool found = result_.feasible != feasible_before || result_.schedules.size() != found_before;
    if (use_memo_ && !found) dead_.insert(std::move(key));
  }

  void expand(int d) {
    const auto& prev = states_[d - 1];
    const int remaining = days_ - d + 1;
    std::uint64_t forced_on = 0, free = 0;
    for (int w = 0; w < n_; ++w) {
      const WorkerState& s = prev[w];
      const int off_total = d - 1 - s.on_total;
      bool can_on, can_off;
      if (s.shift == kOn) {
        can_on = s.run + 1 <= b_.max_work_run;
        can_off = s.run >= b_.min_work_run && remaining >= b_.min_off_run;
      } else if (s.shift == kOff) {
        can_on = s.run >= b_.min_off_run && remaining >= b_.min_work_run;
        can_off = s.run + 1 <= b_.max_off_run;
      } else {
        can_on = remaining >= b_.min_work_run;
        can_off = remaining >= b_.min_off_run;
      }
      can_on = can_on && s.on_total + 1 <= b_.max_work_total;
      can_off = can_off && off_total + 1 <= b_.max_off_total;
      if (!can_on && !can_off) return;
      if (can_on && can_off) {
        free |= std::uint64_t{1} << w;
      } else if (can_on) {
        forced_on |= std::uint64_t{1} << w;
      }
    }
    const auto& r = in_.request(d);
    const int fixed = std::popcount(forced_on);
    const int lo = static_cast<int>(std::max<WorkerCount>(0, r.lower - fixed));
    const int hi = static_cast<int>(std::min<WorkerCount>(std::popcount(free), r.upper - fixed));
    if (lo > hi) return;

    // Free workers split into interchangeable groups; inside a group the ON
    // workers are always the lowest-indexed ones.
    groups_.clear();
    for (int w = 0; w < n_; ++w) {
      if (!(free >> w & 1)) continue;
      const int gk = group_key(d, w);
      auto it = std::find_if(groups_.begin(), groups_.end(), [&](const Group& g) {
        return gk >= 0 ? g.key == gk : prev[g.members.front()].key() == prev[w].key();
      });
      if (it == groups_.end()) {
        groups_.push_back({gk, {w}});
      } else {
        it->members.push_back(w);
      }
    }
    std::vector<Group> groups = groups_;
    std::vector<int> suffix(groups.size() + 1, 0);
    for (std::size_t g = groups.size(); g-- > 0;) suffix[g] = suffix[g + 1] + static_cast<int>(groups[g].members.size());
    choose(d, groups, suffix, 0, lo, hi, forced_on);
  }

  struct Group {
    int key;
    std::vector<int> members;
  };

  void choose(int d, const std::vector<Group>& groups, const std::vector<int>& suffix, std::size_t g, int lo, int hi,
              std::uint64_t mask) {
    if (done()) return;
    if (g == groups.size()) {
      if (lo <= 0) apply(d, mask);
      return;
    }
    const int size = static_cast<int>(groups[g].members.size());
    // Remaining groups must still be able to reach lo.
    const int min_here = std::max(0, lo - suffix[g + 1]);
    const int max_here = std::min(size, hi);
    for (int c = max_here; c >= min_here && !done(); --c) {
      std::uint64_t m = mask;
      for (int i = 0; i < c; ++i) m |= std::uint64_t{1} << groups[g].members[static_cast<std::size_t>(i)];
      choose(d, groups, suffix, g + 1, lo - c, hi - c, m);
    }
  }

  void apply(int d, std::uint64_t mask) {
    const auto& prev = states_[d - 1];
    auto& next = states_[d];
    for (int w = 0; w < n_; ++w) {
      const bool on = mask >> w & 1;
      const std::uint8_t shift = on ? kOn : kOff;
      next[w] = {shift, prev[w].shift == shift ? prev[w].run + 1 : 1, prev[w].on_total + (on ? 1 : 0)};
    }
    if (mode_ == SearchMode::EnumerateAll && options_.break_symmetry) {
      // Workers stay tied while their histories agree.
      auto& tie = ties_[d];
      std::vector<std::pair<int, bool>> seen;
      for (int w = 0; w < n_; ++w) {
        const std::pair<int, bool> k{ties_[d - 1][w], (mask >> w & 1) != 0};
        auto it = std::find(seen.begin(), seen.end(), k);
        if (it == seen.end()) {
          seen.push_back(k);
          it = seen.end() - 1;
        }
        tie[w] = static_cast<int>(it - seen.begin());
      }
    }
    chosen_[d] = mask;
    dfs(d + 1);
  }

  const Instance& in_;
  const Bounds& b_;
  SearchMode mode_;
  SearchOptions options_;
  int days_;
  int n_;
  std::vector<std::vector<WorkerState>> states_;  // states_[d]: after day d
  std::vector<std::vector<int>> ties_;
  std::vector<std::uint64_t> chosen_;
  std::vector<Group> groups_;
  bool use_memo_;
  std::unordered_set<std::vector<std::uint64_t>, KeyHash> dead_;
  SearchResult result_;
};

}  // namespace

SearchResult brute_force(const Instance& instance, SearchMode mode, const SearchOptions& options) {
  validate(instance);
  if (instance.workers > 63 || instance.workers * instance.days > options.size_limit) {
    throw SizeGateError("N * D = " + std::to_string(instance.workers * instance.days) + " exceeds the search limit " +
                        std::to_string(options.size_limit));
  }
  if (mode == SearchMode::EnumerateAll && options.max_solutions == 0) return {};
  return Search(instance, mode, options).run();
}

}  // namespace dodo::oracle
