#pragma once

#include <condition_variable>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace star {

// Fixed-size worker pool with statically computed chunk boundaries. Every
// output element is written by exactly one chunk, so results do not depend
// on scheduling; with STAR_THREADS=1 (or a single-core host) everything
// runs inline.
class ThreadPool {
 public:
  static ThreadPool& instance() {
    static ThreadPool pool;
    return pool;
  }

  std::size_t size() const { return workers_.size() + 1; }

  // invokes fn(chunk_index) for chunk_index in [0, n_chunks)
  void run(std::size_t n_chunks, const std::function<void(std::size_t)>& fn) {
    if (n_chunks == 0) return;
    if (n_chunks == 1 || workers_.empty()) {
      for (std::size_t i = 0; i < n_chunks; ++i) fn(i);
      return;
    }
    std::unique_lock<std::mutex> lk(m_);
    job_ = &fn;
    total_ = n_chunks;
    next_ = 0;
    pending_ = n_chunks;
    ++generation_;
    cv_go_.notify_all();
    // the calling thread participates
    work(lk);
    cv_done_.wait(lk, [&] { return pending_ == 0; });
    job_ = nullptr;
  }

  ~ThreadPool() {
    {
      std::lock_guard<std::mutex> lk(m_);
      stop_ = true;
      cv_go_.notify_all();
    }
    for (auto& t : workers_) t.join();
  }

 private:
  ThreadPool() {
    std::size_t n = std::thread::hardware_concurrency();
    if (const char* env = std::getenv("STAR_THREADS")) {
      long v = std::atol(env);
      if (v > 0) n = static_cast<std::size_t>(v);
    }
    if (n == 0) n = 1;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      workers_.emplace_back([this] { worker_loop(); });
    }
  }

  void work(std::unique_lock<std::mutex>& lk) {
    while (next_ < total_) {
      std::size_t idx = next_++;
      lk.unlock();
      (*job_)(idx);
      lk.lock();
      if (--pending_ == 0) cv_done_.notify_all();
    }
  }

  void worker_loop() {
    std::unique_lock<std::mutex> lk(m_);
    std::uint64_t seen = 0;
    for (;;) {
      cv_go_.wait(lk, [&] { return stop_ || (job_ && generation_ != seen && next_ < total_); });
      if (stop_) return;
      seen = generation_;
      work(lk);
    }
  }

  std::vector<std::thread> workers_;
  std::mutex m_;
  std::condition_variable cv_go_, cv_done_;
  const std::function<void(std::size_t)>* job_ = nullptr;
  std::size_t total_ = 0, next_ = 0, pending_ = 0;
  std::uint64_t generation_ = 0;
  bool stop_ = false;
};

// Splits [0, n) into contiguous chunks of at least `grain` items and runs
// fn(begin, end) per chunk. Chunk boundaries depend only on n, grain and the
// pool size, never on timing.
inline void parallel_for(std::size_t n, std::size_t grain,
                         const std::function<void(std::size_t, std::size_t)>& fn) {
  if (n == 0) return;
  std::size_t max_chunks = ThreadPool::instance().size();
  std::size_t chunks = (n + grain - 1) / grain;
  if (chunks > max_chunks) chunks = max_chunks;
  if (chunks <= 1) {
    fn(0, n);
    return;
  }
  std::size_t per = n / chunks, rem = n % chunks;
  std::vector<std::pair<std::size_t, std::size_t>> ranges(chunks);
  std::size_t at = 0;
  for (std::size_t i = 0; i < chunks; ++i) {
    std::size_t len = per + (i < rem ? 1 : 0);
    ranges[i] = {at, at + len};
    at += len;
  }
  ThreadPool::instance().run(chunks, [&](std::size_t i) { fn(ranges[i].first, ranges[i].second); });
}

}  // namespace star
