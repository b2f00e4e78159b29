#include "z5/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "z5/families.hpp"
#include "z5/gcg.hpp"
#include "z5/propcheck.hpp"
#include "z5/solver.hpp"

namespace z5 {

namespace {

std::string join(const Coloring& c) {
    std::ostringstream s;
    for (std::size_t i = 0; i < c.size(); ++i) s << (i ? " " : "") << c[i];
    return s.str();
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << text;
}

struct Options {
    std::uint64_t seed = 1;
    int jobs = 1;
    std::string input;
    std::uint64_t cap = 0;
    std::size_t limit = 10;
    std::string output;
    std::string certificate;
    bool any_graph = false;
    std::uint64_t budget = ExtendThreeOptions{}.node_budget;
    std::string descriptor;
    int n_max = 0;
    std::string property;
    int samples = 0;
    int instances = 0;
    std::string report;
    std::string cex_dir;
    std::string phi_mode = "uniform";
};

int cmd_validate(const Options& o, std::ostream& out) {
    const Instance in = read_gcg_file(o.input);
    const ValidationReport rep = validate(in.graph);
    if (rep.ok()) {
        out << "valid: " << in.graph.vertex_count() << " vertices, outer cycle of length " << in.graph.outer_length()
            << '\n';
        return kExitOk;
    }
    for (const std::string& p : rep.problems) out << "invalid: " << p << '\n';
    return kExitObstruction;
}

int cmd_count(const Options& o, std::ostream& out) {
    const Instance in = read_gcg_file(o.input);
    SearchOptions so;
    so.cap = o.cap;
    so.jobs = o.jobs;
    out << "colorings: " << count_colorings(in.graph, in.phi, in.colors, so) << (o.cap ? " (capped)" : "") << '\n';
    return kExitOk;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
    const Instance in = read_gcg_file(o.input);
    SearchOptions so;
    so.priority = in.graph.outer_cycle();
    const auto all = enumerate_colorings(in.graph.graph(), in.phi, in.colors, o.limit, so);
    for (const Coloring& c : all) out << "coloring: " << join(c) << '\n';
    out << "listed: " << all.size() << '\n';
    return kExitOk;
}

int cmd_extend2(const Options& o, std::ostream& out) {
    const Instance in = read_gcg_file(o.input);
    const Coloring c = extend_two(in.graph, in.phi, in.colors);
    out << "coloring: " << join(c) << '\n';
    if (!o.output.empty()) write_text(o.output, join(c) + '\n');
    return kExitOk;
}

int cmd_extend3(const Options& o, std::ostream& out) {
    const Instance in = read_gcg_file(o.input);
    ExtendThreeOptions eo;
    eo.node_budget = o.budget;
    const auto res = extend_three(in.graph, in.phi, in.colors, eo);
    if (const auto* c = std::get_if<Coloring>(&res)) {
        out << "coloring: " << join(*c) << '\n';
        if (!o.output.empty()) write_text(o.output, join(*c) + '\n');
        return kExitOk;
    }
    const auto& cert = std::get<ObstructionCertificate>(res);
    out << "obstruction: " << to_string(cert.descriptor) << '\n';
    out << "certificate vertices:";
    for (Vertex v : cert.instance.origin) out << ' ' << v;
    out << '\n';
    if (!o.certificate.empty()) {
        write_gcg_file(o.certificate, cert.instance);
        out << "certificate written: " << o.certificate << '\n';
    }
    return kExitObstruction;
}

int cmd_lemma1(const Options& o, std::ostream& out) {
    const Instance in = read_gcg_file(o.input);
    const AlphaResult r = lemma1_alpha(in.graph, in.phi, in.colors, !o.any_graph);
    out << "non-extendable: " << r.failures.size() << '\n';
    for (const auto& f : r.failures) out << "failure: c(vk)=" << f[0] << " c(v1)=" << f[1] << " c(v2)=" << f[2] << '\n';
    switch (r.kind) {
        case AlphaKind::Value:
            out << "alpha: " << r.alpha << '\n';
            return kExitOk;
        case AlphaKind::Vacuous:
            out << "alpha: vacuous\n";
            return kExitOk;
        case AlphaKind::None:
            break;
    }
    out << "alpha: none\n";
    return kExitObstruction;
}

int cmd_family_gen(const Options& o, std::ostream& out) {
    if (!o.descriptor.empty()) {
        const Descriptor d = parse_descriptor(o.descriptor);
        Instance in = make_instance(build(d).graph);
        in.descriptor = to_string(d);
        if (o.output.empty()) write_gcg(out, in);
        else {
            write_gcg_file(o.output, in);
            out << "written: " << o.output << '\n';
        }
        return kExitOk;
    }
    if (o.n_max < 3) throw std::invalid_argument("family gen needs a descriptor or --n-max >= 3");
    const auto all = enumerate_family(o.n_max);
    std::ostringstream list;
    for (const Descriptor& d : all) list << d.vertex_count() << ' ' << to_string(d) << '\n';
    if (o.output.empty()) out << list.str();
    else write_text(o.output, list.str());
    out << "members: " << all.size() << '\n';
    return kExitOk;
}

int cmd_family_recognize(const Options& o, std::ostream& out) {
    const Instance in = read_gcg_file(o.input);
    const auto d = recognize_generalized_multi_wheel(in.graph);
    if (!d) {
        out << "not a generalized multi-wheel\n";
        return kExitObstruction;
    }
    out << "descriptor: " << to_string(*d) << '\n';
    out << "multi-wheel: " << (describes_multi_wheel(*d) ? "yes" : "no") << '\n';
    return kExitOk;
}

PhiMode parse_phi_mode(const std::string& s) {
    if (s == "uniform") return PhiMode::Uniform;
    if (s == "zero") return PhiMode::Zero;
    if (s == "sparse") return PhiMode::Sparse;
    throw std::invalid_argument("phi mode must be uniform, zero or sparse");
}

int cmd_check(const Options& o, const CLI::App& sub, std::ostream& out) {
    std::vector<std::string> ids;
    if (o.property == "all") ids = check_ids();
    else ids.push_back(o.property);
    std::ofstream report_file;
    if (!o.report.empty()) {
        report_file.open(o.report);
        if (!report_file) throw std::runtime_error("cannot write " + o.report);
    }
    if (!o.cex_dir.empty()) std::filesystem::create_directories(o.cex_dir);
    std::uint64_t failures = 0;
    for (const std::string& id : ids) {
        CheckConfig cfg = default_config(id);
        cfg.seed = o.seed;
        cfg.jobs = o.jobs;
        cfg.phi_mode = parse_phi_mode(o.phi_mode);
        if (sub.count("--n-max")) cfg.n_max = o.n_max;
        if (sub.count("--samples")) cfg.samples = o.samples;
        if (sub.count("--instances")) cfg.instances = o.instances;
        const CheckReport rep = run_check(id, cfg);
        failures += rep.counterexample_count;
        out << report_body(rep);
        if (report_file) write_report(report_file, rep);
        if (!o.cex_dir.empty())
            for (std::size_t i = 0; i < rep.counterexamples.size(); ++i)
                for (std::size_t j = 0; j < rep.counterexamples[i].instances.size(); ++j) {
                    std::ostringstream name;
                    name << o.cex_dir << '/' << id << '-' << i + 1 << '-' << j + 1 << ".gcg";
                    write_gcg_file(name.str(), rep.counterexamples[i].instances[j]);
                }
    }
    return failures == 0 ? kExitOk : kExitObstruction;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Z5 group colorings of plane near-triangulations"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--seed", o.seed, "Seed for every random choice")->capture_default_str();
    app.add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();

    auto* validate_cmd = app.add_subcommand("validate", "Check that a gcg file holds a near-triangulation");
    validate_cmd->add_option("input", o.input)->required();

    auto* count_cmd = app.add_subcommand("count", "Count the colorings respecting phi and the lists");
    count_cmd->add_option("input", o.input)->required();
    count_cmd->add_option("--cap", o.cap, "Stop counting at this value (0 = exact)");

    auto* enum_cmd = app.add_subcommand("enumerate", "List colorings in search order");
    enum_cmd->add_option("input", o.input)->required();
    enum_cmd->add_option("--limit", o.limit)->capture_default_str();

    auto* e2 = app.add_subcommand("extend2", "Extend a precolored outer edge");
    e2->add_option("input", o.input)->required();
    e2->add_option("--output", o.output, "Write the coloring here");

    auto* e3 = app.add_subcommand("extend3", "Extend a precolored outer path of three vertices or certify why not");
    e3->add_option("input", o.input)->required();
    e3->add_option("--output", o.output, "Write the coloring here");
    e3->add_option("--emit-certificate", o.certificate, "Write the obstruction certificate here");
    e3->add_option("--budget", o.budget, "Candidate budget for the certificate search")->capture_default_str();

    auto* l1 = app.add_subcommand("lemma1-alpha", "Common difference c(vk) - c(v2) of the non-extendable precolorings");
    l1->add_option("input", o.input)->required();
    l1->add_flag("--any-graph", o.any_graph, "Skip the multi-wheel check");

    auto* family = app.add_subcommand("family", "Wheel families");
    family->require_subcommand(1);
    auto* gen = family->add_subcommand("gen", "Build a descriptor, or list all members up to --n-max");
    gen->add_option("descriptor", o.descriptor);
    gen->add_option("--n-max", o.n_max);
    gen->add_option("--output", o.output);
    auto* recognize = family->add_subcommand("recognize", "Decompose a gcg file into a descriptor");
    recognize->add_option("input", o.input)->required();

    auto* check = app.add_subcommand("check", "Run a property check (or 'all')");
    check->add_option("property", o.property)->required();
    check->add_option("--n-max", o.n_max);
    check->add_option("--samples", o.samples);
    check->add_option("--instances", o.instances);
    check->add_option("--report", o.report, "Write the full report here");
    check->add_option("--cex-dir", o.cex_dir, "Write counterexamples as gcg files here");
    check->add_option("--phi", o.phi_mode, "uniform, zero or sparse")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n' << app.help();
        return kExitInput;
    }

    out << "seed: " << o.seed << '\n';
    try {
        if (*validate_cmd) return cmd_validate(o, out);
        if (*count_cmd) return cmd_count(o, out);
        if (*enum_cmd) return cmd_enumerate(o, out);
        if (*e2) return cmd_extend2(o, out);
        if (*e3) return cmd_extend3(o, out);
        if (*l1) return cmd_lemma1(o, out);
        if (*gen) return cmd_family_gen(o, out);
        if (*recognize) return cmd_family_recognize(o, out);
        if (*check) return cmd_check(o, *check, out);
    } catch (const AlgorithmDefect& e) {
        err << "defect: " << e.what() << '\n';
        return kExitDefect;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitInput;
}

}  // namespace z5
