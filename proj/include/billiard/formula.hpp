#ifndef BILLIARD_FORMULA_HPP
#define BILLIARD_FORMULA_HPP

#include "core.hpp"

#include <string_view>
#include <vector>

namespace billiard
{
	enum class sequence_source
	{
		general_formula,
		special_closed_form,
		oracle
	};

	inline std::string_view to_string(sequence_source s) noexcept
	{
		switch (s) {
		case sequence_source::general_formula: return "GeneralFormula";
		case sequence_source::special_closed_form: return "SpecialClosedForm";
		case sequence_source::oracle: return "Oracle";
		}
		return "Unknown";
	}

	/// Region counts f_0..f_q of the disc after each chord of one full orbit.
	class division_sequence
	{
	public:
		division_sequence(rotation_parameter param, std::vector<integer> values, sequence_source source)
			: m_param(param), m_values(std::move(values)), m_source(source)
		{
			if (m_values.size() != static_cast<std::size_t>(m_param.q()) + 1)
				throw error(error_kind::invalid_argument, "division sequence must hold q+1 values");
			m_increments.reserve(m_values.size() - 1);
			for (std::size_t n = 1; n < m_values.size(); ++n)
				m_increments.push_back(m_values[n] - m_values[n - 1]);
		}

		const rotation_parameter& param() const noexcept { return m_param; }
		/// f_0..f_q
		const std::vector<integer>& values() const noexcept { return m_values; }
		/// d_1..d_q, stored at index n-1
		const std::vector<integer>& increments() const noexcept { return m_increments; }
		sequence_source source() const noexcept { return m_source; }

		integer operator[](std::size_t n) const { return m_values.at(n); }
		std::size_t size() const noexcept { return m_values.size(); }

	private:
		rotation_parameter m_param;
		std::vector<integer> m_values;
		std::vector<integer> m_increments;
		sequence_source m_source;
	};

	/// pq + 1, the number of regions after the orbit closes.
	inline integer total_regions(const rotation_parameter& param)
	{
		return detail::checked_add(detail::checked_mul(param.p(), param.q()), 1);
	}

	struct euler_triple
	{
		integer vertices;
		integer edges;
		integer faces;

		friend bool operator==(const euler_triple&, const euler_triple&) = default;
	};

	/// Vertex, edge and bounded-face counts of the closed orbit: (pq, 2pq, 1 + e - v).
	inline euler_triple euler_counts(const rotation_parameter& param)
	{
		const integer v = detail::checked_mul(param.p(), param.q());
		const integer e = detail::checked_mul(2, v);
		return {v, e, detail::checked_add(1, e - v)};
	}

	namespace detail
	{
		/// Appends `count` copies of `step` to the running sequence.
		inline void push_block(std::vector<integer>& values, integer count, integer step)
		{
			for (integer i = 0; i < count; ++i)
				values.push_back(checked_add(values.back(), step));
		}
	}

	/// Division sequence built from the block-structured increment schedule.
	///
	/// With q = m p + r the chords are grouped by revolution k = 1..p:
	///   - k = 1: m chords adding one region each;
	///   - then the chord that first passes P_0 adds 2;
	///   - k = 2..p-1: m - 1 + floor(kr/p) - floor((k-1)r/p) chords adding 2k-1,
	///     followed by the P_0-passing chord adding 2k;
	///   - k = p: m - 1 + r - floor((p-1)r/p) chords adding 2p-1, the last one
	///     closing the orbit at P_0.
	///
	/// The block lengths sum to exactly q. floor(r/p) is always zero and is
	/// dropped. For p = 1 the orbit is a convex polygon and every chord adds 1.
	inline division_sequence general_sequence(const rotation_parameter& param)
	{
		const integer p = param.p();
		const integer q = param.q();
		const integer m = param.m();
		const integer r = param.r();

		std::vector<integer> values;
		values.reserve(static_cast<std::size_t>(q) + 1);
		values.push_back(1);

		if (p == 1) {
			detail::push_block(values, q, 1);
		}
		else {
			detail::push_block(values, m, 1);
			detail::push_block(values, 1, 2);
			for (integer k = 2; k <= p - 1; ++k) {
				const integer run = m - 1 + (k * r) / p - ((k - 1) * r) / p;
				detail::push_block(values, run, 2 * k - 1);
				detail::push_block(values, 1, 2 * k);
			}
			detail::push_block(values, m - 1 + r - ((p - 1) * r) / p, 2 * p - 1);
		}

		if (values.size() != static_cast<std::size_t>(q) + 1 || values.back() != total_regions(param))
			throw error(error_kind::invalid_argument,
				"increment schedule did not close at pq+1 for " + to_string(param));
		return division_sequence(param, std::move(values), sequence_source::general_formula);
	}

	/// Closed form for q = 2p + 1:
	/// f_n = 2 - (delta(n,0) + delta(n,2p+1)) + n(n-1)/2.
	inline integer special_value(integer p, integer n)
	{
		const integer q = detail::checked_add(detail::checked_mul(2, p), 1);
		if (n < 0 || n > q)
			throw error(error_kind::invalid_argument, "n must lie in 0..2p+1");
		const integer deltas = (n == 0 ? 1 : 0) + (n == q ? 1 : 0);
		const integer gauss = detail::checked_mul(n, n - 1) / 2;
		return detail::checked_add(2 - deltas, gauss);
	}

	inline division_sequence special_sequence(integer p)
	{
		if (p < 1)
			throw error(error_kind::invalid_argument, "special sequence needs p >= 1");
		const auto param = make_rotation(p, detail::checked_add(detail::checked_mul(2, p), 1));
		std::vector<integer> values;
		values.reserve(static_cast<std::size_t>(param.q()) + 1);
		for (integer n = 0; n <= param.q(); ++n)
			values.push_back(special_value(p, n));
		return division_sequence(param, std::move(values), sequence_source::special_closed_form);
	}

	/// Simplified schedule for remainder r = 1:
	/// +1 x m, +2, then (+(2k-1) x (m-1), +2k) for k = 2..p-1, then +(2p-1) x m.
	inline division_sequence r1_sequence(const rotation_parameter& param)
	{
		if (param.r() != 1)
			throw error(error_kind::invalid_argument,
				"r1_sequence requires r = 1, got r = " + std::to_string(param.r())
				+ " for " + to_string(param));
		const integer p = param.p();
		const integer m = param.m();

		std::vector<integer> values;
		values.reserve(static_cast<std::size_t>(param.q()) + 1);
		values.push_back(1);
		detail::push_block(values, m, 1);
		detail::push_block(values, 1, 2);
		for (integer k = 2; k <= p - 1; ++k) {
			detail::push_block(values, m - 1, 2 * k - 1);
			detail::push_block(values, 1, 2 * k);
		}
		detail::push_block(values, m, 2 * p - 1);
		return division_sequence(param, std::move(values), sequence_source::general_formula);
	}

	/// The closed form when q = 2p + 1, otherwise the general schedule.
	inline division_sequence sequence_for(const rotation_parameter& param)
	{
		if (param.q() == 2 * param.p() + 1)
			return special_sequence(param.p());
		return general_sequence(param);
	}
}

#endif
