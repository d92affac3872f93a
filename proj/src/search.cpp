#include "z2z4/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <exception>
#include <mutex>
#include <set>
#include <thread>

#include "z2z4/duality.hpp"
#include "z2z4/errors.hpp"

namespace z2z4 {

namespace {

using Bits = std::uint32_t;

int parity(Bits v) { return std::popcount(v) & 1; }

/* Binary kappa x kappa matrices T with T T^t = I, rows as bit masks. */
void orthogonal_rows(std::size_t kappa, std::vector<Bits>& rows, std::vector<std::vector<Bits>>& out) {
  if (rows.size() == kappa) {
    out.push_back(rows);
    return;
  }
  for (Bits r = 0; r < (Bits{1} << kappa); ++r) {
    if (parity(r) == 0) continue;
    if (std::any_of(rows.begin(), rows.end(), [&](Bits p) { return parity(p & r) != 0; })) continue;
    rows.push_back(r);
    orthogonal_rows(kappa, rows, out);
    rows.pop_back();
  }
}

struct Shape {
  std::size_t alpha, beta, kappa, delta;
  std::size_t middle() const { return beta - 2 * delta; }
};

/* Weight divisibility every generator must satisfy for the requested class. */
unsigned row_modulus(const std::optional<SelfDualClass>& cls) {
  if (!cls || *cls == SelfDualClass::Type0) return 1;
  return *cls == SelfDualClass::TypeII ? 4 : 2;
}

struct Task {
  std::size_t delta;
  std::size_t t_b;
  Bits t_2;  // kappa * delta bits, row i at bits [i*delta, (i+1)*delta)
};

class Searcher {
 public:
  Searcher(const SearchOptions& options, std::size_t kappa)
      : options_(options), modulus_(row_modulus(options.cls)) {
    std::vector<Bits> rows;
    orthogonal_rows(kappa, rows, orthogonal_);
    kappa_ = kappa;
    for (std::size_t delta = 0; 2 * delta <= options.beta; ++delta) {
      const Shape shape{options.alpha, options.beta, kappa, delta};
      t1_options_.push_back(middle_options(shape));
      if (t1_options_.back().empty()) continue;
      for (std::size_t t = 0; t < orthogonal_.size(); ++t) {
        for (Bits t2 = 0; t2 < (Bits{1} << (kappa * delta)); ++t2) {
          if (pivot_rows_ok(shape, orthogonal_[t], t2)) tasks_.push_back({delta, t, t2});
        }
      }
    }
  }

  const std::vector<Task>& tasks() const { return tasks_; }

  void run(const Task& task, std::vector<SearchHit>& hits, std::atomic<std::size_t>& matrices) const {
    const Shape shape{options_.alpha, options_.beta, kappa_, task.delta};
    for (const auto& t1 : t1_options_[task.delta]) {
      Candidate c{shape, orthogonal_[task.t_b], task.t_2, t1, {}, {}, {}};
      extend(c, hits, matrices);
    }
  }

 private:
  struct Candidate {
    Shape shape;
    const std::vector<Bits>& t_b;
    Bits t_2;
    const std::vector<Bits>& t_1;  // middle rows, delta bits each
    std::vector<Bits> s_b;
    std::vector<std::vector<std::uint8_t>> s_q;
    std::vector<Bits> r;  // middle-width bit masks
  };

  Bits t2_row(const Shape& shape, Bits t2, std::size_t i) const {
    return (t2 >> (i * shape.delta)) & ((Bits{1} << shape.delta) - 1);
  }

  bool weight_ok(std::size_t w) const { return w % modulus_ == 0; }

  std::vector<std::vector<Bits>> middle_options(const Shape& shape) const {
    std::vector<std::vector<Bits>> out;
    const std::size_t rows = shape.middle();
    const std::size_t bits = rows * shape.delta;
    for (Bits all = 0; all < (Bits{1} << bits); ++all) {
      std::vector<Bits> t1(rows);
      bool ok = true;
      for (std::size_t i = 0; i < rows && ok; ++i) {
        t1[i] = (all >> (i * shape.delta)) & ((Bits{1} << shape.delta) - 1);
        ok = weight_ok(2 * static_cast<std::size_t>(std::popcount(t1[i])) + 2);
      }
      if (ok) out.push_back(std::move(t1));
    }
    return out;
  }

  bool pivot_rows_ok(const Shape& shape, const std::vector<Bits>& t_b, Bits t2) const {
    for (std::size_t i = 0; i < shape.kappa; ++i) {
      const std::size_t w = 1 + std::popcount(t_b[i]) + 2 * std::popcount(t2_row(shape, t2, i));
      if (!weight_ok(w)) return false;
    }
    return true;
  }

  void extend(Candidate& c, std::vector<SearchHit>& hits, std::atomic<std::size_t>& matrices) const {
    const Shape& shape = c.shape;
    if (c.s_q.size() == shape.delta) {
      ++matrices;
      emit(c, hits);
      return;
    }
    const std::size_t choices = std::size_t{1} << (2 * shape.delta);
    for (std::size_t code = 0; code < choices; ++code) {
      std::vector<std::uint8_t> sq(shape.delta);
      Bits sq_odd = 0;
      for (std::size_t k = 0; k < shape.delta; ++k) {
        sq[k] = static_cast<std::uint8_t>((code >> (2 * k)) & 3U);
        if (sq[k] & 1U) sq_odd |= Bits{1} << k;
      }
      /* T_b S_b^t = T_2 S_q^t (mod 2) and T_b^-1 = T_b^t */
      Bits sb = 0;
      for (std::size_t i = 0; i < shape.kappa; ++i) {
        if (parity(t2_row(shape, c.t_2, i) & sq_odd)) sb ^= c.t_b[i];
      }
      Bits r = 0;
      for (std::size_t i = 0; i < shape.middle(); ++i) {
        if (parity(c.t_1[i] & sq_odd)) r |= Bits{1} << i;
      }
      std::size_t self = 2 * std::popcount(sb) + std::popcount(r) + 1;
      std::size_t w = std::popcount(sb) + std::popcount(r) + 1;
      for (auto e : sq) {
        self += e * e;
        w += e == 2 ? 2 : (e & 1U);
      }
      if (self % 4 != 0 || !weight_ok(w)) continue;
      bool ok = true;
      for (std::size_t k = 0; k < c.s_q.size() && ok; ++k) {
        std::size_t pair = 2 * std::popcount(sb & c.s_b[k]) + std::popcount(r & c.r[k]);
        for (std::size_t m = 0; m < shape.delta; ++m) pair += sq[m] * c.s_q[k][m];
        ok = pair % 4 == 0;
      }
      if (!ok) continue;
      c.s_b.push_back(sb);
      c.s_q.push_back(std::move(sq));
      c.r.push_back(r);
      extend(c, hits, matrices);
      c.s_b.pop_back();
      c.s_q.pop_back();
      c.r.pop_back();
    }
  }

  void emit(const Candidate& c, std::vector<SearchHit>& hits) const {
    const Shape& s = c.shape;
    const Ambient ambient{s.alpha, s.beta};
    GeneratorMatrix g(ambient);
    const std::size_t unit0 = s.beta - s.delta;
    for (std::size_t i = 0; i < s.kappa; ++i) {
      MixedVector v(ambient);
      v.set_x(i, 1);
      for (std::size_t k = 0; k < s.kappa; ++k) v.set_x(s.kappa + k, (c.t_b[i] >> k) & 1U);
      const Bits t2 = t2_row(s, c.t_2, i);
      for (std::size_t k = 0; k < s.delta; ++k) v.set_y(k, 2 * ((t2 >> k) & 1U));
      g.add_row(std::move(v));
    }
    for (std::size_t i = 0; i < s.middle(); ++i) {
      MixedVector v(ambient);
      for (std::size_t k = 0; k < s.delta; ++k) v.set_y(k, 2 * ((c.t_1[i] >> k) & 1U));
      v.set_y(s.delta + i, 2);
      g.add_row(std::move(v));
    }
    for (std::size_t j = 0; j < s.delta; ++j) {
      MixedVector v(ambient);
      for (std::size_t k = 0; k < s.kappa; ++k) v.set_x(s.kappa + k, (c.s_b[j] >> k) & 1U);
      for (std::size_t k = 0; k < s.delta; ++k) v.set_y(k, c.s_q[j][k]);
      for (std::size_t i = 0; i < s.middle(); ++i) v.set_y(s.delta + i, (c.r[j] >> i) & 1U);
      v.set_y(unit0 + j, 1);
      g.add_row(std::move(v));
    }
    AdditiveCode code = AdditiveCode::span(g, ambient.length());
    const SelfDualClass cls = classify(code);
    if (cls == SelfDualClass::NotSelfDual) throw std::logic_error("search produced a code that is not self-dual");
    if (options_.cls && cls != *options_.cls) return;
    const bool separable = is_separable(code);
    hits.push_back({std::move(g), std::move(code), cls, separable});
  }

  const SearchOptions& options_;
  unsigned modulus_;
  std::size_t kappa_ = 0;
  std::vector<std::vector<Bits>> orthogonal_;
  std::vector<std::vector<std::vector<Bits>>> t1_options_;
  std::vector<Task> tasks_;
};

bool matrix_less(const SearchHit& a, const SearchHit& b) {
  return a.generators.rows() < b.generators.rows();
}

}  // namespace

SearchResult search(const SearchOptions& options) {
  const Ambient ambient{options.alpha, options.beta};
  if (ambient.length() == 0) throw PreconditionError("search needs alpha + beta > 0");
  check_guard(ambient, options.max_length);
  SearchResult result;
  if (options.alpha % 2 != 0) return result;

  const Searcher searcher(options, options.alpha / 2);
  const auto& tasks = searcher.tasks();
  std::vector<std::vector<SearchHit>> per_task(tasks.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> matrices{0};
  unsigned workers = options.workers != 0 ? options.workers : std::max(1U, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(tasks.size(), 1)));
  {
    std::vector<std::jthread> pool;
    std::exception_ptr failure;
    std::mutex failure_lock;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        try {
          for (std::size_t i = next++; i < tasks.size(); i = next++) searcher.run(tasks[i], per_task[i], matrices);
        } catch (...) {
          std::lock_guard lock(failure_lock);
          if (!failure) failure = std::current_exception();
          next = tasks.size();
        }
      });
    }
    pool.clear();
    if (failure) std::rethrow_exception(failure);
  }
  result.matrices = matrices;

  std::vector<SearchHit> all;
  for (auto& hits : per_task) std::move(hits.begin(), hits.end(), std::back_inserter(all));
  std::sort(all.begin(), all.end(), matrix_less);
  std::set<std::vector<MixedVector>> seen;
  for (auto& hit : all) {
    if (!seen.insert(hit.code.codewords()).second) continue;
    if (options.up_to_equivalence &&
        std::any_of(result.codes.begin(), result.codes.end(),
                    [&](const SearchHit& kept) { return permutation_equivalent(kept.code, hit.code); })) {
      continue;
    }
    result.codes.push_back(std::move(hit));
  }
  return result;
}

namespace {

/* Column content of a code as a sorted profile, identical for equivalent columns. */
std::vector<std::size_t> column_profile(const AdditiveCode& code, std::size_t column) {
  const std::size_t alpha = code.ambient().alpha;
  std::vector<std::size_t> counts(4, 0);
  for (const auto& w : code.codewords()) ++counts[column < alpha ? w.x(column) : w.y(column - alpha)];
  return counts;
}

class EquivalenceMatcher {
 public:
  EquivalenceMatcher(const AdditiveCode& a, const AdditiveCode& b) : a_(a), b_(b), n_(a.ambient().alpha + a.ambient().beta) {
    for (std::size_t c = 0; c < n_; ++c) {
      profile_a_.push_back(column_profile(a, c));
      profile_b_.push_back(column_profile(b, c));
    }
    used_.assign(n_, false);
  }

  bool run() { return assign(0); }

 private:
  std::uint8_t entry(const MixedVector& w, std::size_t column) const {
    const std::size_t alpha = a_.ambient().alpha;
    return column < alpha ? w.x(column) : w.y(column - alpha);
  }

  std::vector<std::uint64_t> projection(const AdditiveCode& code, const std::vector<std::size_t>& columns) const {
    std::vector<std::uint64_t> out;
    out.reserve(code.size());
    for (const auto& w : code.codewords()) {
      std::uint64_t key = 0;
      for (auto c : columns) key = (key << 2) | entry(w, c);
      out.push_back(key);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  bool assign(std::size_t column) {
    if (column == n_) return true;
    const std::size_t alpha = a_.ambient().alpha;
    const bool binary = column < alpha;
    for (std::size_t target = binary ? 0 : alpha; target < (binary ? alpha : n_); ++target) {
      if (used_[target] || profile_a_[column] != profile_b_[target]) continue;
      image_.push_back(target);
      source_.push_back(column);
      if (projection(a_, source_) == projection(b_, image_)) {
        used_[target] = true;
        if (assign(column + 1)) return true;
        used_[target] = false;
      }
      image_.pop_back();
      source_.pop_back();
    }
    return false;
  }

  const AdditiveCode& a_;
  const AdditiveCode& b_;
  std::size_t n_;
  std::vector<std::vector<std::size_t>> profile_a_, profile_b_;
  std::vector<bool> used_;
  std::vector<std::size_t> source_, image_;
};

}  // namespace

bool permutation_equivalent(const AdditiveCode& a, const AdditiveCode& b) {
  if (a.ambient() != b.ambient() || a.size() != b.size()) return false;
  if (a.ambient().alpha + a.ambient().beta > 32) throw GuardExceeded("equivalence test limited to 32 coordinates");
  std::vector<std::size_t> wa, wb;
  for (const auto& w : a.codewords()) wa.push_back(weight(w));
  for (const auto& w : b.codewords()) wb.push_back(weight(w));
  std::sort(wa.begin(), wa.end());
  std::sort(wb.begin(), wb.end());
  if (wa != wb) return false;
  return EquivalenceMatcher(a, b).run();
}

}  // namespace z2z4
