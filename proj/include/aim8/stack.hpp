#ifndef AIM8_STACK_HPP
#define AIM8_STACK_HPP

#include <pthread.h>

#include <cstddef>
#include <exception>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>

namespace aim8 {

/// Runs `fn` to completion on a fresh thread with a `bytes`-sized stack and
/// returns its result, rethrowing anything it throws. Deep but bounded
/// recursion then cannot overrun the caller's stack.
template <class F>
auto call_with_stack(std::size_t bytes, F&& fn) -> std::invoke_result_t<F&> {
  using R = std::invoke_result_t<F&>;
  struct Job {
    F& fn;
    std::optional<std::conditional_t<std::is_void_v<R>, bool, R>> result;
    std::exception_ptr error;
  } job{fn, std::nullopt, nullptr};

  auto trampoline = [](void* p) -> void* {
    auto& j = *static_cast<Job*>(p);
    try {
      if constexpr (std::is_void_v<R>) {
        j.fn();
        j.result.emplace(true);
      } else {
        j.result.emplace(j.fn());
      }
    } catch (...) {
      j.error = std::current_exception();
    }
    return nullptr;
  };

  pthread_attr_t attr;
  pthread_attr_init(&attr);
  pthread_attr_setstacksize(&attr, bytes);
  pthread_t thread;
  int rc = pthread_create(&thread, &attr, +trampoline, &job);
  pthread_attr_destroy(&attr);
  if (rc != 0) throw std::runtime_error("cannot start evaluation thread (error " + std::to_string(rc) + ")");
  pthread_join(thread, nullptr);

  if (job.error) std::rethrow_exception(job.error);
  if constexpr (!std::is_void_v<R>) return std::move(*job.result);
}

}  // namespace aim8

#endif
