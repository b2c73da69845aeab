#ifndef BILLIARD_SCAN_HPP
#define BILLIARD_SCAN_HPP

#include "oracle.hpp"

#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace billiard
{
	/// Every valid (p, q) with 3 <= q <= q_max, ordered by q then p.
	inline std::vector<rotation_parameter> enumerate_pairs(integer q_max)
	{
		std::vector<rotation_parameter> out;
		for (integer q = 3; q <= q_max; ++q)
			for (integer p = 1; 2 * p < q; ++p)
				if (std::gcd(p, q) == 1)
					out.push_back(make_rotation(p, q));
		return out;
	}

	/// Applies fn to every index in [0, count) on `jobs` worker threads.
	/// Work is pulled from a shared counter, so results must be stored by index.
	/// The first exception thrown by a worker is rethrown on the caller.
	template <class Fn>
	void parallel_for_index(std::size_t count, unsigned jobs, Fn&& fn)
	{
		if (jobs <= 1 || count <= 1) {
			for (std::size_t i = 0; i < count; ++i)
				fn(i);
			return;
		}
		std::atomic<std::size_t> next{0};
		std::exception_ptr failure;
		std::mutex failure_mutex;
		{
			std::vector<std::jthread> pool;
			pool.reserve(jobs);
			for (unsigned w = 0; w < jobs; ++w) {
				pool.emplace_back([&] {
					for (std::size_t i = next++; i < count; i = next++) {
						try {
							fn(i);
						}
						catch (...) {
							std::lock_guard lock(failure_mutex);
							if (!failure)
								failure = std::current_exception();
							next = count;
						}
					}
				});
			}
		}
		if (failure)
			std::rethrow_exception(failure);
	}

	struct scan_failure
	{
		integer p = 0;
		integer q = 0;
		std::string check_name;
		std::optional<integer> first_divergence_index;
		std::string detail;

		friend bool operator==(const scan_failure&, const scan_failure&) = default;
	};

	struct scan_result
	{
		integer pairs_checked = 0;
		std::vector<scan_failure> failures;
		integer elapsed_ms = 0;

		bool passed() const noexcept { return failures.empty(); }

		/// Equality of contents; wall-clock time is ignored.
		bool same_contents(const scan_result& other) const
		{
			return pairs_checked == other.pairs_checked && failures == other.failures;
		}
	};

	/// Runs verify_pair() over every valid pair up to q_max. Failures come back
	/// in enumeration order whatever the job count.
	inline scan_result run_verification(integer q_max, unsigned jobs)
	{
		const auto start = std::chrono::steady_clock::now();
		const auto pairs = enumerate_pairs(q_max);
		std::vector<verification_report> reports(pairs.size(), verification_report{make_rotation(1, 3), {}});
		parallel_for_index(pairs.size(), jobs, [&](std::size_t i) { reports[i] = verify_pair(pairs[i]); });

		scan_result res;
		res.pairs_checked = static_cast<integer>(pairs.size());
		for (const auto& rep : reports)
			for (const auto& c : rep.checks)
				if (!c.passed)
					res.failures.push_back({rep.param.p(), rep.param.q(), c.name, c.first_divergence, c.detail});
		res.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
			std::chrono::steady_clock::now() - start).count();
		return res;
	}
}

#endif
