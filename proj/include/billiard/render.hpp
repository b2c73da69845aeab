#ifndef BILLIARD_RENDER_HPP
#define BILLIARD_RENDER_HPP

#include "formula.hpp"
#include "geometry.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace billiard
{
	inline const std::vector<std::string>& default_palette()
	{
		static const std::vector<std::string> palette{
			"#1f5fbf", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf"};
		return palette;
	}

	struct render_spec
	{
		explicit render_spec(rotation_parameter p) : param(p) {}

		rotation_parameter param;
		integer upto_chord = 0;
		bool show_rings = false;
		bool show_labels = false;
		integer canvas_size_px = 512;
		/// colour of revolution k is stroke_palette[(k-1) % size]
		std::vector<std::string> stroke_palette = default_palette();
		/// optional text drawn under the figure, e.g. "f_5 = 7"
		std::optional<std::string> caption;
	};

	/// 1 + number of full turns completed before chord n starts.
	inline integer revolution_of(const rotation_parameter& param, integer n) noexcept
	{
		return 1 + (param.p() * (n - 1)) / param.q();
	}

	namespace detail
	{
		inline std::string fmt(double v)
		{
			char buf[32];
			std::snprintf(buf, sizeof buf, "%.3f", v);
			// avoid "-0.000"
			if (std::string_view(buf) == "-0.000")
				return "0.000";
			return buf;
		}

		inline std::string xml_escape(const std::string& s)
		{
			std::string out;
			out.reserve(s.size());
			for (char c : s) {
				switch (c) {
				case '<': out += "&lt;"; break;
				case '>': out += "&gt;"; break;
				case '&': out += "&amp;"; break;
				case '"': out += "&quot;"; break;
				default: out += c;
				}
			}
			return out;
		}

		/// Maps unit-circle coordinates (y up) onto the canvas (y down).
		struct canvas_transform
		{
			double centre;
			double scale;

			double x(double ux) const noexcept { return centre + scale * ux; }
			double y(double uy) const noexcept { return centre - scale * uy; }
		};

		inline canvas_transform transform_for(integer canvas_px)
		{
			const double size = static_cast<double>(canvas_px);
			return {size / 2.0, size * 0.42};
		}
	}

	/// Deterministic SVG 1.1 drawing of the first spec.upto_chord chords.
	inline std::string render_svg(const render_spec& spec)
	{
		const integer q = spec.param.q();
		if (spec.upto_chord < 0 || spec.upto_chord > q)
			throw error(error_kind::invalid_argument, "upto_chord must lie in 0.." + std::to_string(q));
		if (spec.canvas_size_px < 64)
			throw error(error_kind::invalid_argument, "canvas_size_px must be >= 64");
		if (spec.stroke_palette.empty())
			throw error(error_kind::invalid_argument, "stroke_palette must not be empty");

		const auto t = detail::transform_for(spec.canvas_size_px);
		const auto verts = vertex_positions(spec.param);
		const auto chords = chord_list(spec.param);
		const std::string size = std::to_string(spec.canvas_size_px);
		const double stroke = std::max(1.0, static_cast<double>(spec.canvas_size_px) / 256.0);

		std::string s;
		s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
		s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + size + "\" height=\"" + size
			+ "\" viewBox=\"0 0 " + size + " " + size + "\">\n";
		s += "<title>billiard " + to_string(spec.param) + ", chords 0.." + std::to_string(spec.upto_chord)
			+ "</title>\n";
		s += "<rect x=\"0\" y=\"0\" width=\"" + size + "\" height=\"" + size + "\" fill=\"#ffffff\"/>\n";
		s += "<circle id=\"boundary\" cx=\"" + detail::fmt(t.centre) + "\" cy=\"" + detail::fmt(t.centre)
			+ "\" r=\"" + detail::fmt(t.scale) + "\" fill=\"none\" stroke=\"#000000\" stroke-width=\""
			+ detail::fmt(stroke) + "\"/>\n";

		if (spec.show_rings) {
			s += "<g id=\"rings\" fill=\"none\" stroke=\"#555555\" stroke-dasharray=\"4 3\" stroke-width=\""
				+ detail::fmt(stroke * 0.75) + "\">\n";
			for (const auto& rr : ring_radii(spec.param)) {
				if (rr.ring_index == 0)
					continue;
				s += "<circle class=\"ring\" data-ring=\"" + std::to_string(rr.ring_index) + "\" cx=\""
					+ detail::fmt(t.centre) + "\" cy=\"" + detail::fmt(t.centre) + "\" r=\""
					+ detail::fmt(t.scale * rr.normalized_radius) + "\"/>\n";
			}
			s += "</g>\n";
		}

		s += "<g id=\"chords\" stroke-linecap=\"round\" stroke-width=\"" + detail::fmt(stroke) + "\">\n";
		for (integer n = 1; n <= spec.upto_chord; ++n) {
			const chord& c = chords[static_cast<std::size_t>(n - 1)];
			const point a = verts[static_cast<std::size_t>(c.from_vertex)];
			const point b = verts[static_cast<std::size_t>(c.to_vertex)];
			const integer rev = revolution_of(spec.param, n);
			const auto& colour = spec.stroke_palette[static_cast<std::size_t>(rev - 1) % spec.stroke_palette.size()];
			s += "<line class=\"chord\" data-step=\"" + std::to_string(n) + "\" data-revolution=\""
				+ std::to_string(rev) + "\" x1=\"" + detail::fmt(t.x(a.x)) + "\" y1=\"" + detail::fmt(t.y(a.y))
				+ "\" x2=\"" + detail::fmt(t.x(b.x)) + "\" y2=\"" + detail::fmt(t.y(b.y)) + "\" stroke=\""
				+ detail::xml_escape(colour) + "\"/>\n";
		}
		s += "</g>\n";

		if (spec.show_labels) {
			const double font = std::max(8.0, static_cast<double>(spec.canvas_size_px) / 40.0);
			s += "<g id=\"labels\" font-family=\"sans-serif\" font-size=\"" + detail::fmt(font)
				+ "\" text-anchor=\"middle\" dominant-baseline=\"middle\">\n";
			for (std::size_t j = 0; j < verts.size(); ++j) {
				const point v = verts[j];
				s += "<text x=\"" + detail::fmt(t.x(1.09 * v.x)) + "\" y=\"" + detail::fmt(t.y(1.09 * v.y))
					+ "\">P<tspan baseline-shift=\"sub\" font-size=\"70%\">" + std::to_string(j)
					+ "</tspan></text>\n";
			}
			s += "</g>\n";
		}

		if (spec.caption) {
			const double font = std::max(8.0, static_cast<double>(spec.canvas_size_px) / 24.0);
			s += "<text id=\"caption\" x=\"" + detail::fmt(t.centre) + "\" y=\""
				+ detail::fmt(static_cast<double>(spec.canvas_size_px) - font * 0.6)
				+ "\" font-family=\"sans-serif\" font-size=\"" + detail::fmt(font) + "\" text-anchor=\"middle\">"
				+ detail::xml_escape(*spec.caption) + "</text>\n";
		}
		s += "</svg>\n";
		return s;
	}

	namespace detail
	{
		inline std::string step_file_name(integer n)
		{
			char buf[32];
			std::snprintf(buf, sizeof buf, "step_%03lld.svg", static_cast<long long>(n));
			return buf;
		}

		inline void write_file(const std::filesystem::path& path, const std::string& contents)
		{
			std::ofstream out(path, std::ios::binary | std::ios::trunc);
			if (!out)
				throw error(error_kind::io, "cannot open " + path.string() + " for writing");
			out << contents;
			out.close();
			if (!out)
				throw error(error_kind::io, "failed writing " + path.string());
		}
	}

	/// Writes step_000.svg .. step_<q>.svg into out_dir, one per prefix, each
	/// captioned with its region count. The directory is created if missing.
	inline std::vector<std::filesystem::path> render_step_series(const rotation_parameter& param,
		const std::filesystem::path& out_dir, render_spec base)
	{
		std::error_code ec;
		std::filesystem::create_directories(out_dir, ec);
		if (ec)
			throw error(error_kind::io, "cannot create " + out_dir.string() + ": " + ec.message());

		const auto seq = sequence_for(param);
		base.param = param;
		std::vector<std::filesystem::path> written;
		written.reserve(seq.size());
		for (integer n = 0; n <= param.q(); ++n) {
			base.upto_chord = n;
			base.caption = "f_" + std::to_string(n) + " = " + std::to_string(seq[static_cast<std::size_t>(n)]);
			auto path = out_dir / detail::step_file_name(n);
			detail::write_file(path, render_svg(base));
			written.push_back(std::move(path));
		}
		return written;
	}

	inline std::vector<std::filesystem::path> render_step_series(const rotation_parameter& param,
		const std::filesystem::path& out_dir)
	{
		return render_step_series(param, out_dir, render_spec{param});
	}
}

#endif
