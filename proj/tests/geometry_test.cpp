#include <billiard/geometry.hpp>

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <map>

using namespace billiard;

TEST(VertexPositions, Examples)
{
	const auto sq = vertex_positions(make_rotation(1, 4));
	ASSERT_EQ(sq.size(), 4u);
	EXPECT_NEAR(sq[1].x, 0.0, 1e-15);
	EXPECT_NEAR(sq[1].y, 1.0, 1e-15);

	const auto hept = vertex_positions(make_rotation(3, 7));
	EXPECT_EQ(hept[0], (point{1.0, 0.0}));

	const auto pent = vertex_positions(make_rotation(2, 5));
	EXPECT_NEAR(pent[2].x, -0.809017, 1e-6);
	EXPECT_NEAR(pent[2].y, 0.587785, 1e-6);
}

TEST(VertexPositions, OrbitChordsHaveEqualLength)
{
	for (const auto& [p, q] : reference::valid_pairs(30)) {
		const auto prm = make_rotation(p, q);
		const auto v = vertex_positions(prm);
		const auto chords = chord_list(prm);
		const double len0 = distance(v[0], v[static_cast<std::size_t>(p)]);
		EXPECT_NEAR(len0, 2.0 * std::sin(std::numbers::pi * static_cast<double>(p) / static_cast<double>(q)), 1e-12);
		for (const auto& c : chords)
			ASSERT_NEAR(distance(v[static_cast<std::size_t>(c.from_vertex)], v[static_cast<std::size_t>(c.to_vertex)]),
				len0, 1e-12);
	}
}

TEST(ChordList, Pentagram)
{
	const auto chords = chord_list(make_rotation(2, 5));
	const std::vector<std::pair<integer, integer>> expected{{0, 2}, {2, 4}, {4, 1}, {1, 3}, {3, 0}};
	ASSERT_EQ(chords.size(), expected.size());
	for (std::size_t i = 0; i < chords.size(); ++i) {
		EXPECT_EQ(chords[i].from_vertex, expected[i].first);
		EXPECT_EQ(chords[i].to_vertex, expected[i].second);
		EXPECT_EQ(chords[i].step_index, static_cast<integer>(i + 1));
	}
}

TEST(ChordList, Examples)
{
	EXPECT_EQ(chord_list(make_rotation(3, 7))[0], (chord{0, 3, 1}));
	EXPECT_EQ(chord_list(make_rotation(3, 13))[12], (chord{10, 0, 13}));
}

TEST(ChordList, InvariantsHold)
{
	for (const auto& [p, q] : reference::valid_pairs(60)) {
		const auto chords = chord_list(make_rotation(p, q));
		ASSERT_EQ(static_cast<integer>(chords.size()), q);
		ASSERT_EQ(chords.back().to_vertex, 0);
		for (std::size_t i = 0; i < chords.size(); ++i) {
			ASSERT_NE(chords[i].from_vertex, chords[i].to_vertex);
			ASSERT_EQ(chords[i].to_vertex, (chords[i].from_vertex + p) % q);
			if (i) {
				ASSERT_EQ(chords[i].from_vertex, chords[i - 1].to_vertex);
			}
		}
	}
}

TEST(ChordsCross, Examples)
{
	EXPECT_TRUE(chords_cross({0, 2, 1}, {1, 3, 2}, 5));
	EXPECT_FALSE(chords_cross({0, 2, 1}, {2, 4, 2}, 5));
	EXPECT_FALSE(chords_cross({0, 1, 1}, {2, 3, 2}, 6));
}

TEST(ChordsCross, SymmetricOverAllVertexPairs)
{
	for (integer q = 3; q <= 20; ++q) {
		for (integer a0 = 0; a0 < q; ++a0)
			for (integer a1 = 0; a1 < q; ++a1)
				for (integer b0 = 0; b0 < q; ++b0)
					for (integer b1 = 0; b1 < q; ++b1) {
						if (a0 == a1 || b0 == b1)
							continue;
						const chord a{a0, a1, 1}, b{b0, b1, 2};
						ASSERT_EQ(chords_cross(a, b, q), chords_cross(b, a, q));
					}
	}
}

TEST(ChordsCross, AgreesWithOrientationPredicates)
{
	for (const auto& [p, q] : reference::valid_pairs(20)) {
		const auto chords = chord_list(make_rotation(p, q));
		for (const auto& a : chords)
			for (const auto& b : chords)
				ASSERT_EQ(chords_cross(a, b, q),
					reference::segments_cross(a.from_vertex, a.to_vertex, b.from_vertex, b.to_vertex, q))
					<< p << "/" << q << " chords " << a.step_index << "," << b.step_index;
	}
}

TEST(RingRadii, HeptagramValues)
{
	const auto r = ring_radii(make_rotation(3, 7));
	ASSERT_EQ(r.size(), 3u);
	EXPECT_EQ(r[0].normalized_radius, 1.0);
	EXPECT_NEAR(r[1].normalized_radius, 0.356896, 1e-5);
	EXPECT_NEAR(r[2].normalized_radius, 0.246980, 1e-5);
}

TEST(RingRadii, PentagramInnerRing)
{
	const auto r = ring_radii(make_rotation(2, 5));
	ASSERT_EQ(r.size(), 2u);
	EXPECT_NEAR(r[1].normalized_radius, 0.381966, 1e-6);
}

TEST(RingRadii, StrictlyDecreasingAndUnitAtZero)
{
	for (const auto& [p, q] : reference::valid_pairs(60)) {
		const auto r = ring_radii(make_rotation(p, q));
		ASSERT_EQ(static_cast<integer>(r.size()), p);
		ASSERT_EQ(r[0].normalized_radius, 1.0);
		for (std::size_t i = 1; i < r.size(); ++i) {
			ASSERT_GT(r[i - 1].normalized_radius - r[i].normalized_radius, 0.0) << p << "/" << q << " i=" << i;
			ASSERT_GT(r[i].normalized_radius, 0.0);
		}
	}
}

TEST(RingRadii, LawOfSinesFormAgrees)
{
	// r_i = sin(alpha) / sin(pi - alpha - Theta_i / 2), Theta_i = i theta / p
	for (const auto& [p, q] : reference::valid_pairs(40)) {
		const auto prm = make_rotation(p, q);
		const auto r = ring_radii(prm);
		for (integer i = 0; i < p; ++i) {
			const double big_theta = static_cast<double>(i) * prm.theta() / static_cast<double>(p);
			const double expected = std::sin(prm.alpha()) / std::sin(std::numbers::pi - prm.alpha() - big_theta / 2);
			ASSERT_NEAR(r[static_cast<std::size_t>(i)].normalized_radius, expected, 1e-12);
		}
	}
}

TEST(IntersectionPoints, Examples)
{
	EXPECT_TRUE(intersection_points(make_rotation(1, 4)).intersections.empty());

	const auto pent = intersection_points(make_rotation(2, 5));
	ASSERT_EQ(pent.intersections.size(), 5u);
	for (const auto& s : pent.intersections)
		EXPECT_EQ(s.ring, 1);

	const auto hept = intersection_points(make_rotation(3, 7));
	ASSERT_EQ(hept.intersections.size(), 14u);
	std::map<integer, int> per_ring;
	for (const auto& s : hept.intersections)
		++per_ring[s.ring];
	EXPECT_EQ(per_ring[1], 7);
	EXPECT_EQ(per_ring[2], 7);
	EXPECT_EQ(hept.vertices.size() + hept.intersections.size(), 21u);
}

TEST(IntersectionPoints, RingMembershipCardinalityAndSpacing)
{
	for (const auto& [p, q] : reference::valid_pairs(30)) {
		const auto prm = make_rotation(p, q);
		const auto g = intersection_points(prm);
		ASSERT_EQ(static_cast<integer>(g.intersections.size()), q * (p - 1)) << p << "/" << q;

		std::map<integer, std::vector<double>> angles;
		for (const auto& s : g.intersections) {
			ASSERT_LT(s.chord_a, s.chord_b);
			int matches = 0;
			for (const auto& rr : g.radii)
				matches += std::abs(norm(s.location) - rr.normalized_radius) <= 1e-9 ? 1 : 0;
			ASSERT_EQ(matches, 1);
			ASSERT_GE(s.ring, 1);
			angles[s.ring].push_back(std::atan2(s.location.y, s.location.x));
		}
		for (integer i = 1; i < p; ++i) {
			auto& a = angles[i];
			ASSERT_EQ(static_cast<integer>(a.size()), q);
			std::sort(a.begin(), a.end());
			for (std::size_t k = 0; k < a.size(); ++k) {
				const double next = k + 1 < a.size() ? a[k + 1] : a[0] + 2 * std::numbers::pi;
				ASSERT_NEAR(next - a[k], 2 * std::numbers::pi / static_cast<double>(q), 1e-9);
			}
		}
	}
}

TEST(IntersectionPoints, NoTripleIntersections)
{
	for (const auto& [p, q] : reference::valid_pairs(30)) {
		const auto g = intersection_points(make_rotation(p, q));
		double closest = 10.0;
		for (std::size_t i = 0; i < g.intersections.size(); ++i)
			for (std::size_t j = i + 1; j < g.intersections.size(); ++j)
				closest = std::min(closest, distance(g.intersections[i].location, g.intersections[j].location));
		if (g.intersections.size() > 1) {
			ASSERT_GT(closest, 1e-6) << p << "/" << q;
		}
	}
}

TEST(SubBilliardAngle, Examples)
{
	const auto base = make_rotation(3, 7);
	EXPECT_EQ(sub_billiard_angle(base, 0), base);
	EXPECT_EQ(sub_billiard_angle(base, 1), make_rotation(2, 7));
	EXPECT_EQ(sub_billiard_angle(base, 2), make_rotation(1, 7));
	EXPECT_THROW((void)sub_billiard_angle(base, 3), error);
	EXPECT_THROW((void)sub_billiard_angle(base, -1), error);
}

TEST(SubBilliardAngle, InducedOrbitSharesApothem)
{
	for (const auto& [p, q] : reference::valid_pairs(30)) {
		const auto prm = make_rotation(p, q);
		const auto radii = ring_radii(prm);
		for (integer i = 1; i < p; ++i) {
			const auto sub = sub_billiard_angle(prm, i);
			ASSERT_EQ(sub.q() * (p - i), q * sub.p());
			// distance from centre to an orbit chord equals the apothem cos(p pi / q);
			// it must also be the apothem of the sub-orbit on a circle of radius r_i
			const double apothem = std::cos(std::numbers::pi * static_cast<double>(p) / static_cast<double>(q));
			const double sub_apothem = radii[static_cast<std::size_t>(i)].normalized_radius
				* std::cos(std::numbers::pi * static_cast<double>(p - i) / static_cast<double>(q));
			ASSERT_NEAR(apothem, sub_apothem, 1e-12);
		}
	}
}
