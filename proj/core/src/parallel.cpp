#include "thinscat/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace thinscat {
namespace {

std::atomic<unsigned> thread_cap{0};

}  // namespace

void set_max_threads(unsigned count)
{
    thread_cap.store(count);
}

unsigned max_threads()
{
    unsigned const hw = std::max(1u, std::thread::hardware_concurrency());
    unsigned const cap = thread_cap.load();
    return cap == 0 ? hw : std::min(cap, hw);
}

void parallel_for(std::size_t count, std::function<void(std::size_t)> const& body)
{
    std::size_t const workers = std::min<std::size_t>(max_threads(), count);
    if (workers <= 1)
    {
        for (std::size_t i = 0; i < count; ++i)
        {
            body(i);
        }
        return;
    }

    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    std::size_t const chunk = (count + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w)
    {
        std::size_t const begin = w * chunk;
        std::size_t const end = std::min(count, begin + chunk);
        pool.emplace_back([&, begin, end] {
            try
            {
                for (std::size_t i = begin; i < end; ++i)
                {
                    body(i);
                }
            }
            catch (...)
            {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                {
                    failure = std::current_exception();
                }
            }
        });
    }
    pool.clear();  // joins
    if (failure)
    {
        std::rethrow_exception(failure);
    }
}

}  // namespace thinscat
