#include "kaestner/search.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "kaestner/tangle.hpp"

namespace kaestner {

namespace {

// Small integer id per boundary matching, shared by both sides.
struct StateTable {
  std::array<std::array<std::uint8_t, 8>, 2> match{};
  std::array<std::array<std::uint8_t, 8>, 2> loops{};
  std::size_t matchings = 0;
  int max_loops = 0;
};

const StateTable& state_table() {
  static const StateTable table = [] {
    StateTable t;
    std::vector<Matching> seen;
    for (int side = 0; side < 2; ++side) {
      const auto& states = r3_states(static_cast<R3Side>(side));
      for (int s = 0; s < 8; ++s) {
        auto it = std::find(seen.begin(), seen.end(), states[s].matching);
        if (it == seen.end()) it = seen.insert(seen.end(), states[s].matching);
        t.match[side][s] = static_cast<std::uint8_t>(it - seen.begin());
        t.loops[side][s] = static_cast<std::uint8_t>(states[s].loops);
        t.max_loops = std::max(t.max_loops, states[s].loops);
      }
    }
    t.matchings = seen.size();
    return t;
  }();
  return table;
}

struct Instance {
  std::array<std::uint32_t, 6> cells{};  // left MB, TB, TM then right
};

using Candidates = std::vector<std::pair<std::uint64_t, std::uint64_t>>;

class Searcher {
 public:
  Searcher(const SearchSpec& spec, const std::function<void(const FoundBracket&)>& sink)
      : spec_(spec), sink_(sink), ring_(spec.modulus), n_(spec.structure.size()), n2_(n_ * n_),
        A_(2 * n2_, 0), B_(2 * n2_, 0) {
    validate();
    build_order();
    build_instances();
  }

  SearchSummary run() {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;  // (w, δ)
    if (spec_.mode == SearchMode::OddOnly) {
      pairs.emplace_back(fixed_w_, fixed_delta_);
    } else {
      for (const auto& w : ring_.units()) {
        for (std::uint64_t d = 0; d < ring_.modulus(); ++d) pairs.emplace_back(w.value(), d);
      }
    }
    // Task numbering needs the candidate counts of the leading free cells
    // for every (w, δ), so count first.
    std::vector<std::pair<Candidates, Candidates>> lists;
    std::vector<std::uint64_t> first_task;
    for (const auto& [w, d] : pairs) {
      auto c = candidates(w, d);
      first_task.push_back(summary_.task_count);
      if (viable(c)) {
        std::uint64_t k = 1;
        for (std::size_t i = 0; i < task_depth(); ++i) k *= cands_for(c, order_[i]).size();
        summary_.task_count += k;
      }
      lists.push_back(std::move(c));
    }
    summary_.next_task = summary_.task_count;
    for (std::size_t pi = 0; pi < pairs.size() && !stopped_; ++pi) {
      if (!viable(lists[pi])) continue;
      delta_ = pairs[pi].second;
      w_ = pairs[pi].first;
      dpow_.assign(static_cast<std::size_t>(state_table().max_loops) + 1, 1 % ring_.modulus());
      for (std::size_t i = 1; i < dpow_.size(); ++i) dpow_[i] = ring_.mul(dpow_[i - 1], delta_);
      diag_ = &lists[pi].first;
      general_ = &lists[pi].second;
      const auto& c0 = cands_for(lists[pi], order_[0]);
      const std::size_t n1 = task_depth() > 1 ? cands_for(lists[pi], order_[1]).size() : 1;
      for (std::uint64_t t = 0; t < c0.size() * n1 && !stopped_; ++t) {
        const std::uint64_t task = first_task[pi] + t;
        if (task < spec_.start_task) continue;
        if (out_of_work()) {
          summary_.status = SearchStatus::WorkLimit;
          summary_.next_task = task;
          stopped_ = true;
          break;
        }
        run_task(task, t / n1, t % n1);
      }
    }
    if (!stopped_) summary_.next_task = summary_.task_count;
    return summary_;
  }

 private:
  void validate() {
    if (spec_.modulus < 2) throw ValidationError("ring modulus must be at least 2");
    if (spec_.mode == SearchMode::OddOnly) {
      if (!spec_.fixed_even) throw ValidationError("odd-only search needs a fixed even part");
      const auto& fe = *spec_.fixed_even;
      if (fe.modulus != spec_.modulus) {
        throw ValidationError("fixed even part is over Z" + std::to_string(fe.modulus) +
                              ", search ring is Z" + std::to_string(spec_.modulus));
      }
      const auto rep = verify_biquandle_bracket(spec_.structure.even_part(), fe);
      if (!rep.passed()) {
        throw ValidationError("fixed even part is not a biquandle bracket: " +
                              (rep.violations.empty() ? std::string("derivation failed")
                                                      : rep.violations.front().rule + " (" +
                                                            rep.violations.front().detail + ")"));
      }
      fixed_w_ = rep.w->value();
      fixed_delta_ = rep.delta->value();
      for (std::size_t x = 0; x < n_; ++x) {
        for (std::size_t y = 0; y < n_; ++y) {
          A_[x * n_ + y] = fe.A[x][y];
          B_[x * n_ + y] = fe.B[x][y];
        }
      }
    } else if (spec_.fixed_even) {
      throw ValidationError("a fixed even part is only meaningful in odd-only mode");
    }
  }

  void build_order() {
    depth_of_.assign(2 * n2_, -1);
    const std::size_t first = spec_.mode == SearchMode::OddOnly ? n2_ : 0;
    for (std::size_t c = first; c < 2 * n2_; ++c) {
      depth_of_[c] = static_cast<int>(order_.size());
      order_.push_back(static_cast<std::uint32_t>(c));
    }
  }

  void build_instances() {
    buckets_.assign(order_.size(), {});
    R3Instance inst;
    for (const auto& triple : r3_parity_triples()) {
      const bool even = triple == std::array<int, 3>{0, 0, 0};
      if (even && spec_.mode == SearchMode::OddOnly) continue;
      inst.parities = triple;
      for (std::size_t x = 1; x <= n_; ++x) {
        for (std::size_t y = 1; y <= n_; ++y) {
          for (std::size_t z = 1; z <= n_; ++z) {
            inst.colors = {static_cast<int>(x), static_cast<int>(y), static_cast<int>(z)};
            Instance in;
            int depth = -1;
            for (int side = 0; side < 2; ++side) {
              const auto cells = r3_cells(spec_.structure, inst, static_cast<R3Side>(side));
              for (int c = 0; c < 3; ++c) {
                const auto idx = static_cast<std::uint32_t>(
                    static_cast<std::size_t>(cells[c].parity) * n2_ + cells[c].x * n_ + cells[c].y);
                in.cells[static_cast<std::size_t>(side * 3 + c)] = idx;
                depth = std::max(depth, depth_of_[idx]);
              }
            }
            if (depth >= 0) buckets_[static_cast<std::size_t>(depth)].push_back(in);
          }
        }
      }
    }
  }

  // (diagonal even cells, all other cells)
  std::pair<Candidates, Candidates> candidates(std::uint64_t w, std::uint64_t d) const {
    std::pair<Candidates, Candidates> out;
    const auto units = ring_.units();
    for (const auto& a : units) {
      for (const auto& b : units) {
        const std::uint64_t A = a.value(), B = b.value();
        // B^2 + δAB + A^2 = 0
        const std::uint64_t q =
            ring_.add(ring_.add(ring_.mul(B, B), ring_.mul(d, ring_.mul(A, B))), ring_.mul(A, A));
        if (q != 0) continue;
        out.second.emplace_back(A, B);
        // -A^2 B^-1 = w
        if (ring_.neg(ring_.mul(ring_.mul(A, A), ring_.inverse(B))) == w) out.first.emplace_back(A, B);
      }
    }
    return out;
  }

  bool is_diagonal_even(std::uint32_t cell) const {
    return cell < n2_ && cell / n_ == cell % n_;
  }

  const Candidates& cands_for(const std::pair<Candidates, Candidates>& c, std::uint32_t cell) const {
    return is_diagonal_even(cell) ? c.first : c.second;
  }

  bool viable(const std::pair<Candidates, Candidates>& c) const {
    for (std::uint32_t cell : order_) {
      if (cands_for(c, cell).empty()) return false;
    }
    return true;
  }

  bool holds(const Instance& in) {
    const StateTable& st = state_table();
    std::array<std::array<std::uint64_t, 16>, 2> sum{};
    for (int side = 0; side < 2; ++side) {
      const std::size_t base = static_cast<std::size_t>(side) * 3;
      for (int s = 0; s < 8; ++s) {
        std::uint64_t v = dpow_[st.loops[side][s]];
        for (std::size_t c = 0; c < 3; ++c) {
          const std::uint32_t cell = in.cells[base + c];
          v = ring_.mul(v, ((s >> c) & 1) ? B_[cell] : A_[cell]);
        }
        auto& slot = sum[side][st.match[side][s]];
        slot = ring_.add(slot, v);
      }
    }
    ++summary_.work_units;
    const bool ok = sum[0] == sum[1];
    if (!ok) ++summary_.pruned_instances;
    return ok;
  }

  bool out_of_work() const { return spec_.max_work && summary_.work_units >= *spec_.max_work; }

  // Checks the instances completed at `depth`.
  bool check(std::size_t depth) {
    for (const auto& in : buckets_[depth]) {
      if (!holds(in)) return false;
    }
    return true;
  }

  // Tasks fix the candidates of the first one or two free cells.
  std::size_t task_depth() const { return std::min<std::size_t>(2, order_.size()); }

  void descend(std::size_t depth) {
    if (depth == order_.size()) {
      pending_.push_back(snapshot());
      return;
    }
    const std::uint32_t cell = order_[depth];
    for (const auto& [a, b] : is_diagonal_even(cell) ? *diag_ : *general_) {
      A_[cell] = a;
      B_[cell] = b;
      if (check(depth)) descend(depth + 1);
    }
  }

  KaestnerBracketTables snapshot() const {
    KaestnerBracketTables t;
    t.modulus = ring_.modulus();
    auto table = [&](const std::vector<std::uint64_t>& src, std::size_t offset) {
      CoeffTable out(n_, std::vector<std::uint64_t>(n_));
      for (std::size_t x = 0; x < n_; ++x) {
        for (std::size_t y = 0; y < n_; ++y) out[x][y] = src[offset + x * n_ + y];
      }
      return out;
    };
    t.A0 = table(A_, 0);
    t.B0 = table(B_, 0);
    t.A1 = table(A_, n2_);
    t.B1 = table(B_, n2_);
    return t;
  }

  void run_task(std::uint64_t task, std::size_t i0, std::size_t i1) {
    pending_.clear();
    bool ok = true;
    for (std::size_t d = 0; d < task_depth() && ok; ++d) {
      const std::uint32_t cell = order_[d];
      const auto& [a, b] = (is_diagonal_even(cell) ? *diag_ : *general_)[d == 0 ? i0 : i1];
      A_[cell] = a;
      B_[cell] = b;
      ok = check(d);
    }
    if (ok) descend(task_depth());
    for (auto& t : pending_) {
      const auto rep = verify_kaestner_bracket(spec_.structure, t);
      if (!rep.passed()) throw std::logic_error("search emitted a bracket that fails verification");
      sink_(FoundBracket{std::move(t), *rep.w, *rep.delta});
      ++summary_.found;
      if (spec_.max_results && summary_.found >= *spec_.max_results) {
        summary_.status = SearchStatus::ResultLimit;
        summary_.next_task = task + 1;
        stopped_ = true;
        return;
      }
    }
  }

  const SearchSpec& spec_;
  const std::function<void(const FoundBracket&)>& sink_;
  ModularRing ring_;
  std::size_t n_, n2_;
  std::vector<std::uint64_t> A_, B_;
  std::vector<int> depth_of_;
  std::vector<std::uint32_t> order_;
  std::vector<std::vector<Instance>> buckets_;
  std::uint64_t fixed_w_ = 0, fixed_delta_ = 0;
  std::uint64_t w_ = 0, delta_ = 0;
  std::vector<std::uint64_t> dpow_;
  const Candidates* diag_ = nullptr;
  const Candidates* general_ = nullptr;
  std::vector<KaestnerBracketTables> pending_;
  bool stopped_ = false;
  SearchSummary summary_;
};

}  // namespace

SearchSummary search_brackets(const SearchSpec& spec,
                              const std::function<void(const FoundBracket&)>& sink) {
  return Searcher(spec, sink).run();
}

std::vector<FoundBracket> search_brackets(const SearchSpec& spec, SearchSummary* summary) {
  std::vector<FoundBracket> out;
  const auto s = search_brackets(spec, [&](const FoundBracket& b) { out.push_back(b); });
  if (summary) *summary = s;
  return out;
}

}  // namespace kaestner
