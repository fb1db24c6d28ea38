#include "cf_search.hpp"

#include <algorithm>
#include <bit>

namespace cfc::detail {
namespace {

constexpr int kFree = -1;

struct State {
  std::vector<std::uint64_t> dom;
  std::vector<std::uint64_t> forb;
  std::vector<int> fixed;
  std::vector<int> wcolor;
  int max_used = -1;
  std::size_t open = 0;
};

class Searcher {
 public:
  explicit Searcher(const SearchSpec& spec)
      : spec_(spec),
        h_(*spec.h),
        n_(h_.num_vertices()),
        k_(spec.num_colors),
        words_(std::max<std::size_t>(1, (spec.num_colors + 63) / 64)) {
    roles_ = spec.roles.empty() ? std::vector<Role>(n_, Role::Listed) : spec.roles;
    if (roles_.size() != n_) throw InvalidInput("search roles do not match vertex count");
    if (!spec.domains.empty() && spec.domains.size() != n_)
      throw InvalidInput("search domains do not match vertex count");
    full_.assign(words_, 0);
    for (std::size_t c = 0; c < k_; ++c) full_[c / 64] |= bit(c);
    once_.assign(words_, 0);
    twice_.assign(words_, 0);
    allowed_.assign(words_, 0);
  }

  SearchOutcome run() {
    SearchOutcome out;
    State s;
    s.dom.assign(n_ * words_, 0);
    s.forb.assign(n_ * words_, 0);
    s.fixed.assign(n_, kFree);
    s.wcolor.assign(h_.num_edges(), -1);
    s.open = h_.num_edges();
    bool ok = true;
    for (Vertex v = 0; v < n_ && ok; ++v) {
      if (roles_[v] != Role::Listed) continue;
      std::uint64_t* d = &s.dom[v * words_];
      if (spec_.domains.empty()) {
        std::copy(full_.begin(), full_.end(), d);
      } else {
        for (std::size_t c : spec_.domains[v]) {
          if (c >= k_) throw InvalidInput("search domain color out of range");
          d[c / 64] |= bit(c);
        }
      }
      if (spec_.mode == Mode::Full) ok = settle(s, v);
    }
    out.verdict = ok ? solve(s) : Verdict::Unsat;
    if (aborted_) out.verdict = Verdict::Indeterminate;
    out.nodes = nodes_;
    if (out.verdict == Verdict::Sat) out.assignment = std::move(solution_);
    return out;
  }

 private:
  static std::uint64_t bit(std::size_t c) { return std::uint64_t{1} << (c % 64); }
  static bool test(const std::uint64_t* set, std::size_t c) { return set[c / 64] & bit(c); }

  std::size_t popcount(const std::uint64_t* set) const {
    std::size_t total = 0;
    for (std::size_t i = 0; i < words_; ++i) total += std::popcount(set[i]);
    return total;
  }

  // Full mode: empty domain fails, a singleton domain fixes the vertex.
  bool settle(State& s, Vertex v) {
    if (s.fixed[v] != kFree) return true;
    const std::uint64_t* d = &s.dom[v * words_];
    std::size_t count = popcount(d);
    if (count == 0) return false;
    if (count == 1) {
      for (std::size_t i = 0; i < words_; ++i)
        if (d[i]) fix(s, v, static_cast<int>(i * 64 + std::countr_zero(d[i])));
    }
    return true;
  }

  void fix(State& s, Vertex v, int c) {
    s.fixed[v] = c;
    std::uint64_t* d = &s.dom[v * words_];
    std::fill(d, d + words_, 0);
    d[c / 64] |= bit(c);
    s.max_used = std::max(s.max_used, c);
  }

  bool forbid(State& s, Vertex u, int c) {
    switch (roles_[u]) {
      case Role::Absent:
        return true;
      case Role::Adversarial: {
        std::uint64_t* f = &s.forb[u * words_];
        f[c / 64] |= bit(c);
        return popcount(f) <= spec_.adversary_budget;
      }
      case Role::Listed:
        break;
    }
    if (s.fixed[u] == c) return false;
    if (s.fixed[u] != kFree) return true;
    s.dom[u * words_ + c / 64] &= ~bit(c);
    return spec_.mode == Mode::Partial || settle(s, u);
  }

  bool apply(State& s, std::size_t e, Vertex w, int c) {
    if (s.fixed[w] == kFree) fix(s, w, c);
    s.wcolor[e] = c;
    --s.open;
    for (Vertex u : h_.edge(e))
      if (u != w && !forbid(s, u, c)) return false;
    return true;
  }

  // Colors that may witness edge e: not fixed twice, not fixed at all for a
  // free witness, and tolerated by every saturated adversarial vertex.
  void edge_masks(const State& s, std::size_t e, std::vector<std::uint64_t>& once,
                  std::vector<std::uint64_t>& twice, std::vector<std::uint64_t>& allowed) const {
    std::fill(once.begin(), once.end(), 0);
    std::fill(twice.begin(), twice.end(), 0);
    allowed = full_;
    if (spec_.symmetric) {
      std::size_t limit = static_cast<std::size_t>(s.max_used + 2);
      for (std::size_t c = limit; c < k_; ++c) allowed[c / 64] &= ~bit(c);
    }
    for (Vertex u : h_.edge(e)) {
      if (roles_[u] == Role::Adversarial) {
        const std::uint64_t* f = &s.forb[u * words_];
        if (popcount(f) == spec_.adversary_budget)
          for (std::size_t i = 0; i < words_; ++i) allowed[i] &= f[i];
      } else if (roles_[u] == Role::Listed && s.fixed[u] != kFree) {
        std::size_t c = static_cast<std::size_t>(s.fixed[u]);
        if (test(once.data(), c)) twice[c / 64] |= bit(c);
        once[c / 64] |= bit(c);
      }
    }
  }

  template <class Fn>
  void for_each_candidate(const State& s, std::size_t e, Fn&& fn) {
    edge_masks(s, e, once_, twice_, allowed_);
    for (int pass = 0; pass < 2; ++pass) {
      for (Vertex w : h_.edge(e)) {
        if (roles_[w] != Role::Listed) continue;
        if (pass == 0 && s.fixed[w] != kFree) {
          std::size_t c = static_cast<std::size_t>(s.fixed[w]);
          if (test(allowed_.data(), c) && !test(twice_.data(), c))
            if (!fn(w, static_cast<int>(c))) return;
        } else if (pass == 1 && s.fixed[w] == kFree) {
          const std::uint64_t* d = &s.dom[w * words_];
          for (std::size_t i = 0; i < words_; ++i) {
            std::uint64_t bits = d[i] & ~once_[i] & allowed_[i];
            while (bits) {
              int c = static_cast<int>(i * 64 + std::countr_zero(bits));
              bits &= bits - 1;
              if (!fn(w, c)) return;
            }
          }
        }
      }
    }
  }

  std::size_t count_candidates(const State& s, std::size_t e) {
    edge_masks(s, e, once_, twice_, allowed_);
    std::size_t count = 0;
    for (Vertex w : h_.edge(e)) {
      if (roles_[w] != Role::Listed) continue;
      if (s.fixed[w] != kFree) {
        std::size_t c = static_cast<std::size_t>(s.fixed[w]);
        count += test(allowed_.data(), c) && !test(twice_.data(), c);
      } else {
        const std::uint64_t* d = &s.dom[w * words_];
        for (std::size_t i = 0; i < words_; ++i)
          count += std::popcount(d[i] & ~once_[i] & allowed_[i]);
      }
    }
    return count;
  }

  bool out_of_budget() {
    ++nodes_;
    if (spec_.max_nodes && nodes_ > spec_.max_nodes) aborted_ = true;
    if (spec_.deadline && (nodes_ & 1023) == 0 &&
        std::chrono::steady_clock::now() > *spec_.deadline)
      aborted_ = true;
    return aborted_;
  }

  void record(const State& s) {
    solution_.assign(n_, std::nullopt);
    for (Vertex v = 0; v < n_; ++v) {
      if (roles_[v] != Role::Listed) continue;
      if (s.fixed[v] != kFree) {
        solution_[v] = static_cast<std::size_t>(s.fixed[v]);
      } else if (spec_.mode == Mode::Full) {
        const std::uint64_t* d = &s.dom[v * words_];
        for (std::size_t i = 0; i < words_ && !solution_[v]; ++i)
          if (d[i]) solution_[v] = i * 64 + std::countr_zero(d[i]);
      }
    }
  }

  Verdict solve(State& s) {
    if (out_of_budget()) return Verdict::Indeterminate;
    if (s.open == 0) {
      record(s);
      return Verdict::Sat;
    }
    std::size_t best_edge = 0, best_count = SIZE_MAX;
    for (std::size_t e = 0; e < h_.num_edges(); ++e) {
      if (s.wcolor[e] >= 0) continue;
      std::size_t count = count_candidates(s, e);
      if (count < best_count) {
        best_count = count;
        best_edge = e;
        if (count == 0) return Verdict::Unsat;
      }
    }
    std::vector<std::pair<Vertex, int>> cands;
    cands.reserve(best_count);
    for_each_candidate(s, best_edge, [&](Vertex w, int c) {
      cands.emplace_back(w, c);
      return true;
    });
    for (auto [w, c] : cands) {
      State child = s;
      if (!apply(child, best_edge, w, c)) continue;
      Verdict v = solve(child);
      if (v != Verdict::Unsat) return v;
    }
    return Verdict::Unsat;
  }

  const SearchSpec& spec_;
  const Hypergraph& h_;
  std::size_t n_, k_, words_;
  std::vector<Role> roles_;
  std::vector<std::uint64_t> full_;
  std::vector<std::uint64_t> once_, twice_, allowed_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  std::vector<std::optional<std::size_t>> solution_;
};

}  // namespace

SearchOutcome cf_search(const SearchSpec& spec) {
  if (!spec.h) throw InvalidInput("search without hypergraph");
  return Searcher(spec).run();
}

}  // namespace cfc::detail
