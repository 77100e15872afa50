#pragma once

#include <condition_variable>
#include <cstddef>
#include <functional>
#include <mutex>
#include <queue>
#include <thread>
#include <vector>

namespace qjump {

// Minimal task pool for rollout workers. Results must be written to
// per-task slots so that completion order never matters.
class ThreadPool {
 public:
  explicit ThreadPool(int num_threads) {
    if (num_threads < 1) num_threads = 1;
    for (int i = 0; i < num_threads; ++i)
      threads_.emplace_back([this] { worker(); });
  }

  ~ThreadPool() {
    {
      std::unique_lock<std::mutex> lock(m_);
      stop_ = true;
    }
    cv_in_.notify_all();
    for (auto& t : threads_) t.join();
  }

  ThreadPool(const ThreadPool&) = delete;
  ThreadPool& operator=(const ThreadPool&) = delete;

  int size() const { return static_cast<int>(threads_.size()); }

  void schedule(std::function<void()> task) {
    {
      std::unique_lock<std::mutex> lock(m_);
      queue_.push(std::move(task));
      ++pending_;
    }
    cv_in_.notify_one();
  }

  // Block until every scheduled task has finished.
  void wait_all() {
    std::unique_lock<std::mutex> lock(m_);
    cv_done_.wait(lock, [this] { return pending_ == 0; });
  }

 private:
  void worker() {
    while (true) {
      std::function<void()> task;
      {
        std::unique_lock<std::mutex> lock(m_);
        cv_in_.wait(lock, [this] { return stop_ || !queue_.empty(); });
        if (stop_ && queue_.empty()) return;
        task = std::move(queue_.front());
        queue_.pop();
      }
      task();
      {
        std::unique_lock<std::mutex> lock(m_);
        --pending_;
      }
      cv_done_.notify_all();
    }
  }

  std::vector<std::thread> threads_;
  std::queue<std::function<void()>> queue_;
  std::mutex m_;
  std::condition_variable cv_in_;
  std::condition_variable cv_done_;
  std::size_t pending_ = 0;
  bool stop_ = false;
};

}  // namespace qjump
