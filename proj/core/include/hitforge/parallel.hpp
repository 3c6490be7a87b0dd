#pragma once

// Ordered candidate scan: candidates are evaluated in batches of `jobs`
// worker threads, and the first hit in candidate order wins no matter which
// worker finishes first.  Every candidate before the winner has been
// evaluated (and reported to `on_miss`, in order) when the call returns.

#include <algorithm>
#include <cstddef>
#include <exception>
#include <functional>
#include <optional>
#include <thread>
#include <vector>

namespace hitforge {

template <class Result>
struct OrderedHit {
  std::size_t index;
  Result result;
};

template <class Candidate, class Result>
std::optional<OrderedHit<Result>> first_in_order(const std::vector<Candidate>& candidates, unsigned jobs,
                                                 const std::function<Result(const Candidate&)>& fn,
                                                 const std::function<bool(const Result&)>& is_hit,
                                                 const std::function<void(std::size_t, const Result&)>& on_miss = {}) {
  jobs = std::max(1u, jobs);
  for (std::size_t start = 0; start < candidates.size(); start += jobs) {
    const std::size_t end = std::min(candidates.size(), start + jobs);
    std::vector<std::optional<Result>> results(end - start);
    std::vector<std::exception_ptr> errors(end - start);
    if (end - start == 1) {
      results[0] = fn(candidates[start]);
    } else {
      std::vector<std::thread> pool;
      for (std::size_t i = start; i < end; ++i) {
        pool.emplace_back([&, i] {
          try {
            results[i - start] = fn(candidates[i]);
          } catch (...) {
            errors[i - start] = std::current_exception();
          }
        });
      }
      for (auto& t : pool) t.join();
    }
    for (std::size_t i = start; i < end; ++i) {
      if (errors[i - start]) std::rethrow_exception(errors[i - start]);
      if (is_hit(*results[i - start])) return OrderedHit<Result>{i, std::move(*results[i - start])};
      if (on_miss) on_miss(i, *results[i - start]);
    }
  }
  return std::nullopt;
}

/// fn over every item, `jobs` at a time; results in item order.
template <class Item, class Result>
std::vector<Result> parallel_map(const std::vector<Item>& items, unsigned jobs,
                                 const std::function<Result(const Item&)>& fn) {
  std::vector<Result> out;
  out.reserve(items.size());
  first_in_order<Item, Result>(
      items, jobs, fn, [](const Result&) { return false; },
      [&](std::size_t, const Result& r) { out.push_back(r); });
  return out;
}

}  // namespace hitforge
