#ifndef BILLIARD_GEOMETRY_HPP
#define BILLIARD_GEOMETRY_HPP

#include "core.hpp"

#include <cmath>
#include <vector>

namespace billiard
{
	/// Absolute tolerance for matching an intersection to a ring on the unit circle.
	inline constexpr double ring_tolerance = 1e-9;

	struct point
	{
		double x = 0.0;
		double y = 0.0;

		friend bool operator==(const point&, const point&) = default;
	};

	inline double norm(point a) noexcept { return std::hypot(a.x, a.y); }
	inline double distance(point a, point b) noexcept { return std::hypot(a.x - b.x, a.y - b.y); }

	/// One straight path of the orbit, between two bounce points.
	struct chord
	{
		integer from_vertex = 0;
		integer to_vertex = 0;
		/// 1-based position in traversal order
		integer step_index = 0;

		friend bool operator==(const chord&, const chord&) = default;
	};

	struct ring_radius
	{
		integer ring_index = 0;
		/// r_i / R, in (0, 1]
		double normalized_radius = 1.0;
	};

	struct intersection
	{
		integer chord_a = 0;   ///< step index, chord_a < chord_b
		integer chord_b = 0;
		point location;
		integer ring = 0;
	};

	struct trajectory_geometry
	{
		rotation_parameter param;
		std::vector<point> vertices;
		std::vector<chord> chords;
		std::vector<intersection> intersections;
		std::vector<ring_radius> radii;
	};

	/// Bounce points on the unit circle; vertex j sits at angle 2 pi j / q.
	inline std::vector<point> vertex_positions(const rotation_parameter& param)
	{
		const integer q = param.q();
		std::vector<point> out;
		out.reserve(static_cast<std::size_t>(q));
		for (integer j = 0; j < q; ++j) {
			const double phi = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(q);
			out.push_back({std::cos(phi), std::sin(phi)});
		}
		return out;
	}

	/// Chords in traversal order: chord n joins vertex p(n-1) mod q to p n mod q.
	inline std::vector<chord> chord_list(const rotation_parameter& param)
	{
		const integer p = param.p();
		const integer q = param.q();
		std::vector<chord> out;
		out.reserve(static_cast<std::size_t>(q));
		integer at = 0;
		for (integer n = 1; n <= q; ++n) {
			const integer next = (at + p) % q;
			out.push_back({at, next, n});
			at = next;
		}
		return out;
	}

	namespace detail
	{
		/// x strictly inside the counterclockwise open arc from `from` to `to`.
		inline bool strictly_inside_arc(integer from, integer to, integer x, integer q) noexcept
		{
			const integer span = ((to - from) % q + q) % q;
			const integer off = ((x - from) % q + q) % q;
			return off > 0 && off < span;
		}
	}

	/// Interior crossing test by cyclic interleaving of endpoints; shared endpoints never cross.
	inline bool chords_cross(const chord& a, const chord& b, integer q) noexcept
	{
		if (a.from_vertex == b.from_vertex || a.from_vertex == b.to_vertex
			|| a.to_vertex == b.from_vertex || a.to_vertex == b.to_vertex)
			return false;
		return detail::strictly_inside_arc(a.from_vertex, a.to_vertex, b.from_vertex, q)
			!= detail::strictly_inside_arc(a.from_vertex, a.to_vertex, b.to_vertex, q);
	}

	/// r_i / R = cos(p pi / q) / cos((p - i) pi / q) for i = 0..p-1.
	inline std::vector<ring_radius> ring_radii(const rotation_parameter& param)
	{
		const double p = static_cast<double>(param.p());
		const double q = static_cast<double>(param.q());
		const double num = std::cos(p * std::numbers::pi / q);
		std::vector<ring_radius> out;
		out.reserve(static_cast<std::size_t>(param.p()));
		out.push_back({0, 1.0});
		for (integer i = 1; i < param.p(); ++i) {
			const double den = std::cos((p - static_cast<double>(i)) * std::numbers::pi / q);
			out.push_back({i, num / den});
		}
		return out;
	}

	namespace detail
	{
		inline point line_intersection(point a0, point a1, point b0, point b1) noexcept
		{
			const double dax = a1.x - a0.x, day = a1.y - a0.y;
			const double dbx = b1.x - b0.x, dby = b1.y - b0.y;
			const double den = dax * dby - day * dbx;
			const double t = ((b0.x - a0.x) * dby - (b0.y - a0.y) * dbx) / den;
			return {a0.x + t * dax, a0.y + t * day};
		}
	}

	/// Full numeric realization of the orbit: vertices, chords, every interior
	/// crossing and the ring each crossing lies on.
	///
	/// Throws error_kind::ring_assignment if a crossing is not within
	/// ring_tolerance of exactly one ring.
	inline trajectory_geometry intersection_points(const rotation_parameter& param)
	{
		trajectory_geometry g{param, vertex_positions(param), chord_list(param), {}, ring_radii(param)};
		const integer q = param.q();
		g.intersections.reserve(static_cast<std::size_t>(q * (param.p() - 1)));

		for (std::size_t a = 0; a < g.chords.size(); ++a) {
			for (std::size_t b = a + 1; b < g.chords.size(); ++b) {
				const chord& ca = g.chords[a];
				const chord& cb = g.chords[b];
				if (!chords_cross(ca, cb, q))
					continue;
				const point s = detail::line_intersection(
					g.vertices[static_cast<std::size_t>(ca.from_vertex)],
					g.vertices[static_cast<std::size_t>(ca.to_vertex)],
					g.vertices[static_cast<std::size_t>(cb.from_vertex)],
					g.vertices[static_cast<std::size_t>(cb.to_vertex)]);
				const double d = norm(s);

				integer ring = -1;
				int matches = 0;
				for (const auto& rr : g.radii) {
					if (std::abs(d - rr.normalized_radius) <= ring_tolerance) {
						ring = rr.ring_index;
						++matches;
					}
				}
				if (matches != 1)
					throw error(error_kind::ring_assignment,
						"ring assignment failure: chords " + std::to_string(ca.step_index) + " and "
						+ std::to_string(cb.step_index) + " of " + to_string(param) + " meet at radius "
						+ std::to_string(d) + " (" + std::to_string(matches) + " ring matches)");
				g.intersections.push_back({ca.step_index, cb.step_index, s, ring});
			}
		}
		return g;
	}

	/// Rotation of the induced orbit on ring C_i: numerator p - i over the same q, reduced.
	inline rotation_parameter sub_billiard_angle(const rotation_parameter& param, integer ring_index)
	{
		if (ring_index < 0 || ring_index >= param.p())
			throw error(error_kind::invalid_argument,
				"ring index " + std::to_string(ring_index) + " outside 0.." + std::to_string(param.p() - 1));
		return make_rotation(param.p() - ring_index, param.q());
	}
}

#endif
