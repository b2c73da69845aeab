#ifndef BILLIARD_ORACLE_HPP
#define BILLIARD_ORACLE_HPP

#include "formula.hpp"
#include "geometry.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace billiard
{
	/// Brute-force division sequence: each new chord adds one region plus one per
	/// earlier chord it crosses. Exact because no three chords share an interior point.
	inline division_sequence oracle_sequence(const rotation_parameter& param)
	{
		const auto chords = chord_list(param);
		const integer q = param.q();
		std::vector<integer> values;
		values.reserve(chords.size() + 1);
		values.push_back(1);
		for (std::size_t n = 0; n < chords.size(); ++n) {
			integer crossings = 0;
			for (std::size_t k = 0; k < n; ++k)
				crossings += chords_cross(chords[k], chords[n], q) ? 1 : 0;
			values.push_back(detail::checked_add(values.back(), 1 + crossings));
		}
		return division_sequence(param, std::move(values), sequence_source::oracle);
	}

	/// Vertex/edge/face count of the disc cut by the first few chords; outer face excluded.
	struct arrangement_census
	{
		integer vertices_count = 0;
		integer edges_count = 0;
		integer faces_count = 1;

		friend bool operator==(const arrangement_census&, const arrangement_census&) = default;
	};

	namespace detail
	{
		inline arrangement_census make_census(integer touched, integer interior, integer chord_pieces)
		{
			// an untouched circle is one face with no vertices or edges
			if (touched == 0)
				return {};
			const integer v = touched + interior;
			const integer e = touched + chord_pieces;
			return {v, e, 1 + e - v};
		}
	}

	/// Census of the circle plus chords 1..upto_chord, counted directly from the arrangement.
	inline arrangement_census census_at(const rotation_parameter& param, integer upto_chord)
	{
		const integer q = param.q();
		if (upto_chord < 0 || upto_chord > q)
			throw error(error_kind::invalid_argument,
				"upto_chord must lie in 0.." + std::to_string(q));
		const auto all = chord_list(param);
		const std::size_t n = static_cast<std::size_t>(upto_chord);

		std::vector<bool> touched(static_cast<std::size_t>(q), false);
		for (std::size_t i = 0; i < n; ++i) {
			touched[static_cast<std::size_t>(all[i].from_vertex)] = true;
			touched[static_cast<std::size_t>(all[i].to_vertex)] = true;
		}
		const integer touched_count = std::count(touched.begin(), touched.end(), true);

		integer interior = 0;
		integer chord_pieces = 0;
		for (std::size_t i = 0; i < n; ++i) {
			integer on_chord = 0;
			for (std::size_t j = 0; j < n; ++j)
				if (j != i && chords_cross(all[i], all[j], q))
					++on_chord;
			chord_pieces += 1 + on_chord;
			interior += on_chord;
		}
		// each crossing was seen from both of its chords
		interior /= 2;
		return detail::make_census(touched_count, interior, chord_pieces);
	}

	/// census_at() for every prefix 0..q in one O(q^2) pass.
	inline std::vector<arrangement_census> census_prefixes(const rotation_parameter& param)
	{
		const integer q = param.q();
		const auto all = chord_list(param);
		std::vector<bool> touched(static_cast<std::size_t>(q), false);
		integer touched_count = 0;
		integer interior = 0;
		integer chord_pieces = 0;

		std::vector<arrangement_census> out;
		out.reserve(all.size() + 1);
		out.push_back(detail::make_census(0, 0, 0));
		for (std::size_t n = 0; n < all.size(); ++n) {
			for (integer v : {all[n].from_vertex, all[n].to_vertex}) {
				if (!touched[static_cast<std::size_t>(v)]) {
					touched[static_cast<std::size_t>(v)] = true;
					++touched_count;
				}
			}
			integer c = 0;
			for (std::size_t k = 0; k < n; ++k)
				c += chords_cross(all[k], all[n], q) ? 1 : 0;
			interior += c;
			// the new chord is cut into c+1 pieces and splits c existing pieces
			chord_pieces += 1 + 2 * c;
			out.push_back(detail::make_census(touched_count, interior, chord_pieces));
		}
		return out;
	}

	/// True when chord n (1-based) strictly passes over the angular position of
	/// P_0, i.e. some multiple of q lies strictly between p(n-1) and p n.
	inline bool passes_start(const rotation_parameter& param, integer n) noexcept
	{
		const integer a = param.p() * (n - 1);
		const integer b = param.p() * n;
		return a / param.q() != b / param.q() && b % param.q() != 0;
	}

	struct check_result
	{
		std::string name;
		bool passed = true;
		std::optional<integer> first_divergence;
		std::string detail;
	};

	struct verification_report
	{
		rotation_parameter param;
		std::vector<check_result> checks;

		bool passed() const noexcept
		{
			return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
		}
	};

	namespace detail
	{
		inline check_result compare_values(std::string name,
			const std::vector<integer>& expected, const std::vector<integer>& actual)
		{
			check_result res{std::move(name), true, std::nullopt, {}};
			const std::size_t len = std::min(expected.size(), actual.size());
			for (std::size_t i = 0; i < len; ++i) {
				if (expected[i] != actual[i]) {
					res.passed = false;
					res.first_divergence = static_cast<integer>(i);
					res.detail = "expected " + std::to_string(expected[i]) + ", got " + std::to_string(actual[i]);
					return res;
				}
			}
			if (expected.size() != actual.size()) {
				res.passed = false;
				res.first_divergence = static_cast<integer>(len);
				res.detail = "length mismatch";
			}
			return res;
		}

		inline check_result sequence_shape(const division_sequence& seq)
		{
			check_result res{"sequence_invariants", true, std::nullopt, {}};
			const integer max_step = 2 * seq.param().p() - 1;
			if (seq[0] != 1) {
				res = {res.name, false, 0, "f_0 != 1"};
				return res;
			}
			const auto& inc = seq.increments();
			for (std::size_t i = 0; i < inc.size(); ++i) {
				if (inc[i] < 1 || inc[i] > max_step) {
					res = {res.name, false, static_cast<integer>(i + 1),
						"increment " + std::to_string(inc[i]) + " outside 1.." + std::to_string(max_step)};
					return res;
				}
			}
			return res;
		}

		inline check_result ring_checks(const rotation_parameter& param)
		{
			check_result res{"ring_invariants", true, std::nullopt, {}};
			const auto fail = [&](std::string why) {
				res.passed = false;
				res.detail = std::move(why);
				return res;
			};

			const auto radii = ring_radii(param);
			for (std::size_t i = 1; i < radii.size(); ++i)
				if (!(radii[i].normalized_radius < radii[i - 1].normalized_radius))
					return fail("ring radii not strictly decreasing at " + std::to_string(i));

			trajectory_geometry geo{param, {}, {}, {}, {}};
			try {
				geo = intersection_points(param);
			}
			catch (const error& e) {
				return fail(e.what());
			}

			const integer q = param.q();
			if (static_cast<integer>(geo.intersections.size()) != q * (param.p() - 1))
				return fail("expected q(p-1) interior intersections, found "
					+ std::to_string(geo.intersections.size()));

			std::vector<std::vector<double>> angles(static_cast<std::size_t>(param.p()));
			for (const auto& s : geo.intersections)
				angles[static_cast<std::size_t>(s.ring)].push_back(std::atan2(s.location.y, s.location.x));

			const double gap = 2.0 * std::numbers::pi / static_cast<double>(q);
			for (integer i = 1; i < param.p(); ++i) {
				auto& a = angles[static_cast<std::size_t>(i)];
				if (static_cast<integer>(a.size()) != q)
					return fail("ring " + std::to_string(i) + " holds " + std::to_string(a.size()) + " points");
				std::sort(a.begin(), a.end());
				for (std::size_t k = 0; k < a.size(); ++k) {
					const double next = k + 1 < a.size() ? a[k + 1] : a[0] + 2.0 * std::numbers::pi;
					if (std::abs((next - a[k]) - gap) > ring_tolerance)
						return fail("ring " + std::to_string(i) + " points not equally spaced");
				}
			}
			if (!angles.empty() && !angles[0].empty())
				return fail("interior intersection assigned to the boundary circle");
			return res;
		}
	}

	/// Runs every formula against both oracles plus the ring geometry checks.
	/// Failures are reported, never thrown.
	inline verification_report verify_pair(const rotation_parameter& param)
	{
		verification_report rep{param, {}};
		const integer p = param.p();
		const integer q = param.q();

		const auto general = general_sequence(param);
		const auto brute = oracle_sequence(param);
		const auto census = census_prefixes(param);

		rep.checks.push_back(detail::compare_values("general_vs_oracle", brute.values(), general.values()));

		std::vector<integer> faces;
		faces.reserve(census.size());
		for (const auto& c : census)
			faces.push_back(c.faces_count);
		rep.checks.push_back(detail::compare_values("census_vs_oracle", brute.values(), faces));

		{
			check_result c{"endpoint", general.values().back() == total_regions(param), std::nullopt, {}};
			if (!c.passed) {
				c.first_divergence = q;
				c.detail = "f_q = " + std::to_string(general.values().back());
			}
			rep.checks.push_back(std::move(c));
		}
		{
			const auto e = euler_counts(param);
			const auto& full = census.back();
			check_result c{"full_census",
				full.vertices_count == e.vertices && full.edges_count == e.edges && full.faces_count == e.faces,
				std::nullopt, {}};
			if (!c.passed)
				c.detail = "census (" + std::to_string(full.vertices_count) + ", "
					+ std::to_string(full.edges_count) + ", " + std::to_string(full.faces_count) + ")";
			rep.checks.push_back(std::move(c));
		}

		rep.checks.push_back(detail::sequence_shape(general));

		if (q == 2 * p + 1)
			rep.checks.push_back(detail::compare_values(
				"special_closed_form", general.values(), special_sequence(p).values()));
		if (param.r() == 1)
			rep.checks.push_back(detail::compare_values("r1_form", general.values(), r1_sequence(param).values()));

		{
			check_result c{"parity_pattern", true, std::nullopt, {}};
			const auto& inc = brute.increments();
			for (integer n = 1; n <= q; ++n) {
				const bool even = inc[static_cast<std::size_t>(n - 1)] % 2 == 0;
				if (even != passes_start(param, n)) {
					c.passed = false;
					c.first_divergence = n;
					c.detail = "increment parity does not track passes over P_0";
					break;
				}
			}
			rep.checks.push_back(std::move(c));
		}

		rep.checks.push_back(detail::ring_checks(param));
		return rep;
	}
}

#endif
