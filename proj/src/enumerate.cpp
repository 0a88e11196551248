#include "fdalg/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace fdalg {

Vec element_at(const FieldSpec& field, std::size_t n, std::uint64_t idx) {
  if (!field.is_finite()) throw Error(ErrorCode::FieldMismatch, "enumeration needs a finite field");
  Vec x;
  x.reserve(n);
  for (std::size_t k = 0; k < n; ++k, idx /= field.p())
    x.push_back(Scalar::from_int(field, static_cast<long long>(idx % field.p())));
  return x;
}

std::optional<std::uint64_t> first_failure(std::uint64_t total, const std::function<bool(std::uint64_t)>& ok,
                                           unsigned workers) {
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  constexpr std::uint64_t kChunk = 256;
  if (workers == 1 || total <= kChunk) {
    for (std::uint64_t i = 0; i < total; ++i)
      if (!ok(i)) return i;
    return std::nullopt;
  }

  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> best{total};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    try {
      while (true) {
        const std::uint64_t start = next.fetch_add(kChunk);
        if (start >= total || start >= best.load()) return;
        const std::uint64_t end = std::min(total, start + kChunk);
        for (std::uint64_t i = start; i < end && i < best.load(); ++i) {
          if (ok(i)) continue;
          std::uint64_t cur = best.load();
          while (i < cur && !best.compare_exchange_weak(cur, i)) {
          }
          break;
        }
      }
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
      best.store(0);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  if (best.load() == total) return std::nullopt;
  return best.load();
}

}  // namespace fdalg
