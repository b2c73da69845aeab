#ifndef BILLIARD_TOOLS_CLI_HPP
#define BILLIARD_TOOLS_CLI_HPP

// Command-line front end. Kept as a header so tests can drive it in-process.

#include <billiard/billiard.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace billiard::cli
{
	enum exit_code : int
	{
		success = 0,
		verification_failed = 1,
		usage_error = 2
	};

	inline constexpr integer max_q = 1'000'000;
	inline constexpr integer default_verify_cap = 500;

	/// ANSI colour only for terminals, and never when BILLIARD_COLOR=0.
	inline bool color_enabled(bool is_tty)
	{
		const char* env = std::getenv("BILLIARD_COLOR");
		if (env && std::string_view(env) == "0")
			return false;
		return is_tty;
	}

	inline std::string paint(const std::string& text, const char* ansi, bool color)
	{
		return color ? std::string("\x1b[") + ansi + "m" + text + "\x1b[0m" : text;
	}

	inline nlohmann::ordered_json to_json(const division_sequence& seq)
	{
		nlohmann::ordered_json j;
		j["p"] = seq.param().p();
		j["q"] = seq.param().q();
		j["m"] = seq.param().m();
		j["r"] = seq.param().r();
		j["source"] = std::string(to_string(seq.source()));
		j["values"] = seq.values();
		j["increments"] = seq.increments();
		return j;
	}

	inline std::string join(const std::vector<integer>& v, char sep)
	{
		std::string s;
		for (std::size_t i = 0; i < v.size(); ++i) {
			if (i)
				s += sep;
			s += std::to_string(v[i]);
		}
		return s;
	}

	inline std::string scan_header() { return "p,q,m,r,f_total,sequence"; }

	inline std::string scan_row(const division_sequence& seq)
	{
		const auto& prm = seq.param();
		return std::to_string(prm.p()) + "," + std::to_string(prm.q()) + "," + std::to_string(prm.m()) + ","
			+ std::to_string(prm.r()) + "," + std::to_string(total_regions(prm)) + "," + join(seq.values(), ';');
	}

	inline std::string format_failure(const scan_failure& f)
	{
		std::string s = std::to_string(f.p) + "/" + std::to_string(f.q) + " " + f.check_name;
		if (f.first_divergence_index)
			s += " at n=" + std::to_string(*f.first_divergence_index);
		if (!f.detail.empty())
			s += ": " + f.detail;
		return s;
	}

	namespace detail
	{
		inline unsigned resolve_jobs(int jobs)
		{
			if (jobs > 0)
				return static_cast<unsigned>(jobs);
			return std::max(1u, std::thread::hardware_concurrency());
		}

		inline division_sequence sequence_by_method(const rotation_parameter& prm, const std::string& method)
		{
			if (method == "general")
				return general_sequence(prm);
			if (method == "special") {
				if (prm.q() != 2 * prm.p() + 1)
					throw error(error_kind::invalid_argument, "--method special requires q = 2p+1");
				return special_sequence(prm.p());
			}
			if (method == "r1")
				return r1_sequence(prm);
			if (method == "oracle")
				return oracle_sequence(prm);
			return sequence_for(prm);
		}

		inline void check_q(integer q)
		{
			if (q > max_q)
				throw error(error_kind::out_of_range, "q must be <= " + std::to_string(max_q));
		}
	}

	/// Parses args (args[0] is the program name) and runs one subcommand.
	inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool is_tty = false)
	{
		const bool color = color_enabled(is_tty);

		CLI::App app{"Circle-division sequences of rational circular billiards"};
		app.require_subcommand(1);

		integer p = 0, q = 0;
		std::string format = "plain", method = "auto";
		auto* seq_cmd = app.add_subcommand("seq", "Print the division sequence f_0..f_q");
		seq_cmd->add_option("-p", p, "Rotation numerator")->required();
		seq_cmd->add_option("-q", q, "Rotation denominator")->required();
		seq_cmd->add_option("--format", format, "Output format")
			->check(CLI::IsMember({"plain", "csv", "json"}));
		seq_cmd->add_option("--method", method, "Which formula produces the sequence")
			->check(CLI::IsMember({"auto", "general", "special", "r1", "oracle"}));

		integer q_max = 0;
		int jobs = 1;
		bool allow_large = false;
		auto* verify_cmd = app.add_subcommand("verify", "Check formulas against the oracles for all pairs up to q-max");
		verify_cmd->add_option("--q-max", q_max, "Largest q to check")->required();
		verify_cmd->add_option("--jobs", jobs, "Worker threads (0 = all cores)");
		verify_cmd->add_flag("--allow-large", allow_large,
			"Permit q-max above " + std::to_string(default_verify_cap));

		auto* radii_cmd = app.add_subcommand("radii", "Print the intersection ring radii r_i/R");
		radii_cmd->add_option("-p", p, "Rotation numerator")->required();
		radii_cmd->add_option("-q", q, "Rotation denominator")->required();

		integer step = -1, size_px = 512;
		bool rings = false, labels = false, series = false;
		std::string output;
		auto* render_cmd = app.add_subcommand("render", "Draw the orbit as SVG");
		render_cmd->add_option("-p", p, "Rotation numerator")->required();
		render_cmd->add_option("-q", q, "Rotation denominator")->required();
		render_cmd->add_option("--step", step, "Number of chords to draw (default q)");
		render_cmd->add_flag("--rings", rings, "Draw the intersection rings");
		render_cmd->add_flag("--labels", labels, "Label the bounce points");
		render_cmd->add_option("--size", size_px, "Canvas size in pixels");
		render_cmd->add_flag("--series", series, "Write one file per step into the output directory");
		render_cmd->add_option("-o,--output", output, "Output file, or directory with --series")->required();

		std::string scan_out = "-";
		auto* scan_cmd = app.add_subcommand("scan", "Write a CSV row per valid pair up to q-max");
		scan_cmd->add_option("--q-max", q_max, "Largest q")->required();
		scan_cmd->add_option("-o,--output", scan_out, "CSV file ('-' for stdout)");
		scan_cmd->add_option("--jobs", jobs, "Worker threads (0 = all cores)");

		std::vector<const char*> argv;
		argv.reserve(args.size());
		for (const auto& a : args)
			argv.push_back(a.c_str());

		try {
			app.parse(static_cast<int>(argv.size()), argv.data());
		}
		catch (const CLI::CallForHelp&) {
			out << app.help();
			return success;
		}
		catch (const CLI::ParseError& e) {
			err << "error: " << e.what() << "\n";
			return usage_error;
		}

		try {
			if (*seq_cmd) {
				detail::check_q(q);
				const auto seq = detail::sequence_by_method(make_rotation(p, q), method);
				if (format == "json") {
					out << to_json(seq).dump() << "\n";
				}
				else if (format == "csv") {
					out << "n,f_n\n";
					for (std::size_t n = 0; n < seq.size(); ++n)
						out << n << "," << seq[n] << "\n";
				}
				else {
					out << join(seq.values(), ' ') << "\n";
				}
				return success;
			}

			if (*radii_cmd) {
				detail::check_q(q);
				for (const auto& rr : ring_radii(make_rotation(p, q))) {
					char buf[64];
					std::snprintf(buf, sizeof buf, "%lld %.6f", static_cast<long long>(rr.ring_index),
						rr.normalized_radius);
					out << buf << "\n";
				}
				return success;
			}

			if (*render_cmd) {
				detail::check_q(q);
				const auto prm = make_rotation(p, q);
				render_spec spec{prm};
				spec.show_rings = rings;
				spec.show_labels = labels;
				spec.canvas_size_px = size_px;
				if (series) {
					const auto files = render_step_series(prm, output, spec);
					out << "wrote " << files.size() << " files to " << output << "\n";
				}
				else {
					spec.upto_chord = step < 0 ? prm.q() : step;
					billiard::detail::write_file(output, render_svg(spec));
					out << "wrote " << output << "\n";
				}
				return success;
			}

			if (*verify_cmd) {
				if (q_max < 3)
					throw error(error_kind::invalid_argument, "--q-max must be >= 3");
				if (q_max > default_verify_cap && !allow_large)
					throw error(error_kind::invalid_argument, "--q-max above " + std::to_string(default_verify_cap)
						+ " needs --allow-large");
				const auto res = run_verification(q_max, detail::resolve_jobs(jobs));
				for (const auto& f : res.failures)
					out << paint("FAIL", "31", color) << " " << format_failure(f) << "\n";
				if (res.passed())
					out << paint("PASS", "32", color) << ": " << res.pairs_checked << " pairs";
				else
					out << paint("FAIL", "31", color) << ": " << res.failures.size() << " failures in "
						<< res.pairs_checked << " pairs";
				out << " (q <= " << q_max << ", " << res.elapsed_ms << " ms)\n";
				return res.passed() ? success : verification_failed;
			}

			if (*scan_cmd) {
				if (q_max < 3)
					throw error(error_kind::invalid_argument, "--q-max must be >= 3");
				detail::check_q(q_max);
				const auto pairs = enumerate_pairs(q_max);
				std::vector<std::string> rows(pairs.size());
				parallel_for_index(pairs.size(), detail::resolve_jobs(jobs),
					[&](std::size_t i) { rows[i] = scan_row(general_sequence(pairs[i])); });

				std::ostringstream csv;
				csv << scan_header() << "\n";
				for (const auto& row : rows)
					csv << row << "\n";
				if (scan_out == "-")
					out << csv.str();
				else
					billiard::detail::write_file(scan_out, csv.str());
				return success;
			}
		}
		catch (const error& e) {
			err << "error: " << e.what() << "\n";
			return usage_error;
		}
		return usage_error;
	}
}

#endif
