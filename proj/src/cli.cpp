#include "tilekit/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "tilekit/classifier.hpp"
#include "tilekit/errors.hpp"
#include "tilekit/json_io.hpp"
#include "tilekit/oracle.hpp"
#include "tilekit/svg.hpp"
#include "tilekit/wheels.hpp"

namespace tilekit {

namespace {

using nlohmann::json;

json read_input(const std::string& source, std::istream& in) {
    std::string text;
    if (source.empty() || source == "-") {
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    } else if (source.front() == '{') {
        text = source;
    } else {
        std::ifstream file(source);
        if (!file) throw ParseError("cannot open input file: " + source);
        std::ostringstream buf;
        buf << file.rdbuf();
        text = buf.str();
    }
    return json::parse(text);
}

void emit(const std::string& payload, const std::string& output_path, std::ostream& out) {
    if (output_path.empty() || output_path == "-") {
        out << payload;
        return;
    }
    std::ofstream file(output_path, std::ios::binary);
    if (!file) throw ParseError("cannot open output file: " + output_path);
    file << payload;
}

void emit_json(const json& j, const std::string& output_path, std::ostream& out) {
    emit(j.dump(2) + "\n", output_path, out);
}

Point2 parse_vertex(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos) throw ParseError("vertex must be 'x,y'");
    return {Rational::parse(text.substr(0, comma)), Rational::parse(text.substr(comma + 1))};
}

MultiTilingInstance family_instance(const std::string& name, const std::string& param,
                                    const std::string& vertex) {
    auto need_param = [&]() {
        if (param.empty()) throw ParseError("family '" + name + "' needs --param");
        return Rational::parse(param);
    };
    if (name == "sevenfold" || name == "example1") return seven_fold_octagon();
    if (name == "octA") return octagon_alpha(need_param());
    if (name == "octB") return octagon_beta(need_param());
    if (name == "octAPrime") return octagon_alpha_prime(need_param());
    if (name == "octBPrime") return octagon_beta_prime(need_param());
    if (name == "decagon") {
        if (vertex.empty()) throw ParseError("family 'decagon' needs --vertex x,y");
        return decagon_instance(parse_vertex(vertex));
    }
    throw ParseError("unknown family: " + name);
}

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Tile: return "Tile";
        case Verdict::NotTile: return "NotTile";
        case Verdict::Unknown: return "Unknown";
    }
    return "?";
}

json match_report_json(const MatchReport& report) {
    json matches = json::array();
    for (const Match& m : report.matches)
        matches.push_back({{"type", tile_type_name(m.type)},
                           {"offset", m.labeling.offset},
                           {"reflected", m.labeling.reflected}});
    json residuals = json::object();
    for (const auto& [type, dev] : report.residuals) residuals[tile_type_name(type)] = dev;
    return json{{"verdict", verdict_name(report.verdict)},
                {"matches", matches},
                {"residuals", residuals}};
}

json multiplicity_report_json(const MultiplicityReport& r) {
    json out;
    if (r.mode == MultiplicityReport::Mode::Exact) {
        out["mode"] = "Exact";
        out["uniform"] = r.uniform;
        if (r.uniform) out["fold"] = r.fold;
        json viols = json::array();
        for (const auto& [point, count] : r.violations)
            viols.push_back({{"point", to_json(point)}, {"count", count}});
        out["violations"] = viols;
    } else {
        out["mode"] = "Sampled";
        out["n"] = r.samples;
        out["seed"] = r.seed;
        out["skipped"] = r.skipped;
        json hist = json::object();
        for (const auto& [count, times] : r.histogram) hist[std::to_string(count)] = times;
        out["histogram"] = hist;
        out["no_violation"] = r.no_violation;
        if (r.no_violation) out["fold"] = r.fold;
    }
    return out;
}

struct Options {
    std::string input;
    std::string output;
    std::string mode = "exact";
    std::string name;
    std::string param;
    std::string vertex;
    std::string window = "4";
    std::string eps_angle;
    std::string eps_len;
    long samples = 10000;
    unsigned long long seed = 1;
    int pool_bound = 2;
    bool mark_lattice = false;
    std::vector<int> sequence;
};

int dispatch(const std::string& command, const Options& opt, std::istream& in, std::ostream& out) {
    if (command == "classify") {
        ConvexPolygon poly = polygon_from_json(read_input(opt.input, in));
        Rational ea = opt.eps_angle.empty() ? default_epsilon() : Rational::parse(opt.eps_angle);
        Rational el = opt.eps_len.empty() ? default_epsilon() : Rational::parse(opt.eps_len);
        MatchReport report = classify(poly, ea, el);
        emit_json(match_report_json(report), opt.output, out);
        return report.verdict == Verdict::Tile ? 0 : 1;
    }
    if (command == "bolle") {
        json j = read_input(opt.input, in);
        ConvexPolygon poly = polygon_from_json(j.at("polygon"));
        Lattice2 lat = lattice_from_json(j.at("lattice"));
        BolleResult res = bolle_check(poly, lat);
        json payload{{"status", bolle_status_name(res.status)}};
        if (res.passed()) payload["fold"] = res.fold;
        if (res.edge >= 0) payload["edge"] = res.edge;
        emit_json(payload, opt.output, out);
        return res.passed() ? 0 : 1;
    }
    if (command == "verify") {
        MultiTilingInstance inst = instance_from_json(read_input(opt.input, in));
        MultiplicityReport report;
        bool confirmed;
        if (opt.mode == "exact") {
            report = exact_uniform_multiplicity(inst.polygon, inst.lattice);
            confirmed = report.uniform && report.fold == inst.fold;
        } else if (opt.mode == "sample") {
            report = sampled_multiplicity(inst.polygon, inst.lattice, opt.samples, opt.seed);
            confirmed = report.no_violation && report.fold == inst.fold;
        } else {
            throw ParseError("--mode must be 'exact' or 'sample'");
        }
        emit_json(multiplicity_report_json(report), opt.output, out);
        return confirmed ? 0 : 1;
    }
    if (command == "family") {
        MultiTilingInstance inst = family_instance(opt.name, opt.param, opt.vertex);
        emit_json(to_json(inst), opt.output, out);
        return 0;
    }
    if (command == "wheels") {
        std::optional<MultiTilingInstance> inst;
        if (!opt.name.empty())
            inst = family_instance(opt.name, opt.param, opt.vertex);
        else
            inst = instance_from_json(read_input(opt.input, in));
        Patch patch = build_patch(*inst, Rational::parse(opt.window));
        FoldIdentityReport report = check_fold_identity(patch);
        json hist = json::array();
        for (const auto& [key, times] : report.histogram)
            hist.push_back(
                {{"interior", key.first}, {"winding", key.second}, {"count", times}});
        json viols = json::array();
        for (const Point2& v : report.violations) viols.push_back(to_json(v));
        emit_json(json{{"fold", patch.claimed_fold},
                       {"checked", report.checked},
                       {"skipped", report.skipped},
                       {"all_hold", report.all_hold},
                       {"chaining_failures", report.chaining_failures},
                       {"histogram", hist},
                       {"violations", viols}},
                  opt.output, out);
        return report.all_hold ? 0 : 1;
    }
    if (command == "search") {
        ConvexPolygon poly = polygon_from_json(read_input(opt.input, in));
        auto result = lattice_multiplicity_search(poly, opt.pool_bound);
        json payload{{"found", result.has_value()}};
        if (result) {
            payload["lattice"] = to_json(result->lattice);
            payload["fold"] = result->fold;
        }
        emit_json(payload, opt.output, out);
        return result ? 0 : 1;
    }
    if (command == "render") {
        std::optional<MultiTilingInstance> inst;
        if (!opt.name.empty())
            inst = family_instance(opt.name, opt.param, opt.vertex);
        else
            inst = instance_from_json(read_input(opt.input, in));
        Patch patch = build_patch(*inst, Rational::parse(opt.window));
        SvgStyle style;
        style.mark_lattice = opt.mark_lattice;
        emit(render_svg(patch, style), opt.output, out);
        return 0;
    }
    if (command == "archimedean") {
        if (opt.sequence.size() < 3 || opt.sequence.size() > 6)
            throw ParseError("vertex sequence needs 3 to 6 entries");
        for (int k : opt.sequence)
            if (k < 3) throw ParseError("vertex sequence entries must be >= 3");
        ArchimedeanStatus status = archimedean_vertex_check(opt.sequence);
        const char* name = status == ArchimedeanStatus::Listed ? "Listed"
                           : status == ArchimedeanStatus::AngleValidOnly ? "AngleValidOnly"
                                                                         : "Invalid";
        emit_json(json{{"status", name}}, opt.output, out);
        return status == ArchimedeanStatus::Listed ? 0 : 1;
    }
    throw ParseError("no subcommand given (try --help)");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"Plane tiling toolkit: convex tile classification and multiple-tiling "
                 "verification over exact rational coordinates"};
    app.require_subcommand(0, 1);
    Options opt;

    auto add_io = [&opt](CLI::App* cmd, bool with_input = true) {
        if (with_input)
            cmd->add_option("--input", opt.input, "input file, inline JSON, or '-' for stdin");
        cmd->add_option("--output", opt.output, "output file (default stdout)");
    };

    CLI::App* classify_cmd = app.add_subcommand("classify", "match a polygon against the tile types");
    add_io(classify_cmd);
    classify_cmd->add_option("--eps-angle", opt.eps_angle, "angle tolerance (rational, radians)");
    classify_cmd->add_option("--eps-len", opt.eps_len, "length tolerance (rational)");

    CLI::App* bolle_cmd = app.add_subcommand("bolle", "run the lattice tiling criterion");
    add_io(bolle_cmd);

    CLI::App* verify_cmd = app.add_subcommand("verify", "verify an instance's fold with the oracle");
    add_io(verify_cmd);
    verify_cmd->add_option("--mode", opt.mode, "exact or sample");
    verify_cmd->add_option("--n", opt.samples, "sample count (sample mode)");
    verify_cmd->add_option("--seed", opt.seed, "sampling seed");

    CLI::App* family_cmd = app.add_subcommand("family", "emit a named family instance");
    add_io(family_cmd, false);
    family_cmd->add_option("--name", opt.name, "sevenfold|octA|octB|octAPrime|octBPrime|decagon")
        ->required();
    family_cmd->add_option("--param", opt.param, "family parameter (rational)");
    family_cmd->add_option("--vertex", opt.vertex, "decagon free vertex 'x,y'");

    CLI::App* wheels_cmd = app.add_subcommand("wheels", "per-vertex local structure report");
    add_io(wheels_cmd);
    wheels_cmd->add_option("--name,--family", opt.name, "family name instead of --input");
    wheels_cmd->add_option("--param", opt.param, "family parameter");
    wheels_cmd->add_option("--vertex", opt.vertex, "decagon free vertex");
    wheels_cmd->add_option("--window", opt.window, "window half-width (rational)");

    CLI::App* search_cmd = app.add_subcommand("search", "heuristic minimum-fold lattice search");
    add_io(search_cmd);
    search_cmd->add_option("--pool-bound", opt.pool_bound, "coefficient bound for pool vectors");

    CLI::App* render_cmd = app.add_subcommand("render", "render a patch as SVG");
    add_io(render_cmd);
    render_cmd->add_option("--name,--family", opt.name, "family name instead of --input");
    render_cmd->add_option("--param", opt.param, "family parameter");
    render_cmd->add_option("--vertex", opt.vertex, "decagon free vertex");
    render_cmd->add_option("--window", opt.window, "window half-width (rational)");
    render_cmd->add_flag("--mark-lattice", opt.mark_lattice, "mark lattice points");

    CLI::App* arch_cmd = app.add_subcommand("archimedean", "check a regular vertex figure");
    add_io(arch_cmd, false);
    arch_cmd->add_option("sequence", opt.sequence, "polygon sizes around the vertex");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        for (CLI::App* sub : app.get_subcommands()) return dispatch(sub->get_name(), opt, in, out);
        err << app.help();
        return 2;
    } catch (const nlohmann::json::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace tilekit
