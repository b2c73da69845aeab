#ifndef BILLIARD_CORE_HPP
#define BILLIARD_CORE_HPP

#include <cstdint>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace billiard
{
	using integer = std::int64_t;

	enum class error_kind
	{
		out_of_range,       ///< (p, q) outside 1 <= p, 2p < q, q >= 3
		overflow,           ///< exact integer result does not fit in 64 bits
		invalid_argument,   ///< precondition violated by a caller
		ring_assignment,    ///< intersection point matched no ring (or more than one)
		io                  ///< file system failure
	};

	/// Single exception type for the library; the kind tells callers what went wrong.
	class error : public std::runtime_error
	{
	public:
		error(error_kind kind, const std::string& what)
			: std::runtime_error(what), m_kind(kind) {}

		error_kind kind() const noexcept { return m_kind; }

	private:
		error_kind m_kind;
	};

	namespace detail
	{
		inline integer checked_add(integer a, integer b)
		{
			integer out{};
			if (__builtin_add_overflow(a, b, &out))
				throw error(error_kind::overflow, "integer overflow in addition");
			return out;
		}

		inline integer checked_mul(integer a, integer b)
		{
			integer out{};
			if (__builtin_mul_overflow(a, b, &out))
				throw error(error_kind::overflow, "integer overflow in multiplication");
			return out;
		}
	}

	/// Rotation per bounce of a periodic circular billiard, theta = (p/q) * 2pi.
	///
	/// Always reduced (gcd(p, q) = 1) and restricted to counterclockwise orbits
	/// with 2p < q. Only make_rotation() can build one, so every instance in
	/// circulation satisfies these invariants.
	class rotation_parameter
	{
	public:
		integer p() const noexcept { return m_p; }
		integer q() const noexcept { return m_q; }
		/// floor(q / p)
		integer m() const noexcept { return m_q / m_p; }
		/// q - m p; zero only for p = 1
		integer r() const noexcept { return m_q - m() * m_p; }

		/// Angle subtended at the centre by consecutive bounce points, in radians.
		double theta() const noexcept
		{
			return 2.0 * std::numbers::pi * static_cast<double>(m_p) / static_cast<double>(m_q);
		}

		/// Angle of incidence against the boundary normal: (pi - theta) / 2.
		double alpha() const noexcept { return 0.5 * (std::numbers::pi - theta()); }

		friend bool operator==(const rotation_parameter&, const rotation_parameter&) = default;

	private:
		rotation_parameter(integer p, integer q) noexcept : m_p(p), m_q(q) {}
		friend rotation_parameter make_rotation(integer, integer);

		integer m_p;
		integer m_q;
	};

	/// Builds a rotation_parameter from p/q, reducing the fraction first.
	/// Throws error_kind::out_of_range for q < 3, p < 1, or a reduced 2p >= q.
	inline rotation_parameter make_rotation(integer p, integer q)
	{
		if (p < 1)
			throw error(error_kind::out_of_range,
				"out of supported range: p must be >= 1 (got " + std::to_string(p) + ")");
		if (q < 3)
			throw error(error_kind::out_of_range,
				"out of supported range: q must be >= 3 (got " + std::to_string(q) + ")");
		const integer g = std::gcd(p, q);
		const integer rp = p / g;
		const integer rq = q / g;
		if (rp >= rq - rp)
			throw error(error_kind::out_of_range,
				"out of supported range: " + std::to_string(rp) + "/" + std::to_string(rq)
				+ " must be < 1/2");
		return rotation_parameter(rp, rq);
	}

	/// q = m p + r with m = floor(q/p).
	inline std::pair<integer, integer> decompose(const rotation_parameter& rot) noexcept
	{
		return {rot.m(), rot.r()};
	}

	inline std::string to_string(const rotation_parameter& rot)
	{
		return std::to_string(rot.p()) + "/" + std::to_string(rot.q());
	}
}

#endif
