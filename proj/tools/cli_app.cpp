#include "cli_app.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "groupalg/json_io.hpp"

namespace groupalg::cli {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot read input file '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void print_analysis(std::ostream& out, const BoundaryAnalysis& a) {
    const Graph& g = a.graph;
    out << "discrete: " << (a.discrete() ? "yes" : "no") << "\n";
    if (a.discreteness.witness)
        out << "witness: " << a.discreteness.witness->describe(g) << "\n";
    for (const auto& note : a.discreteness.notes) out << "note: " << note << "\n";
    out << "cycles: " << a.cycles.size() << "\n";
    if (!a.discrete()) return;
    out << "boundary paths: " << a.paths.size() << "\n";
    for (const auto& p : a.paths) out << "  " << p.encoding << "\n";
    out << "orbits: " << a.orbits.size() << "\n";
    for (const auto& o : a.orbits) {
        out << "  " << (o.kind == OrbitDescriptor::Kind::sink ? "sink" : "cycle") << " orbit, size "
            << o.size() << ", isotropy "
            << (o.isotropy == OrbitDescriptor::Isotropy::trivial ? "trivial" : "infinite cyclic")
            << "\n";
    }
}

void print_verdict(std::ostream& out, const ChainVerdict& v) {
    out << "noetherian: " << to_string(v.noetherian()) << "\n";
    out << "artinian: " << to_string(v.artinian()) << "\n";
    out << "categorical = local: both verdict pairs coincide; left = right by the involution\n";
    if (!v.decomposition.empty()) {
        out << "decomposition:\n";
        for (const auto& s : v.decomposition)
            out << "  M_" << s.size << "(" << s.target_label << ")  <- " << s.orbit_label << "\n";
    }
    out << "reasons:\n";
    for (const auto& r : v.reasons) out << "  [" << r.rule << "] " << r.detail << "\n";
}

int run_parsed(const std::string& command, const std::string& input_path,
               const std::string& ring_spec, long bound, bool as_json,
               const std::string& oracle_kind, int oracle_size, int oracle_pivot,
               std::ostream& out) {
    if (command == "analyze") {
        Graph g = parse_graph(read_file(input_path));
        BoundaryAnalysis a = analyze_boundary(g);
        if (as_json)
            out << boundary_analysis_to_json(a).dump(2) << "\n";
        else
            print_analysis(out, a);
        return 0;
    }
    if (command == "decide") {
        Graph g = parse_graph(read_file(input_path));
        Ring ring = Ring::parse_spec(ring_spec);
        ChainVerdict v = decide_graph(g, ring);
        if (as_json)
            out << verdict_to_json(v).dump(2) << "\n";
        else
            print_verdict(out, v);
        return 0;
    }
    if (command == "decompose") {
        Graph g = parse_graph(read_file(input_path));
        Ring ring = Ring::parse_spec(ring_spec);
        auto analysis = std::make_shared<const BoundaryAnalysis>(analyze_boundary(g));
        auto groupoid = DiscreteGroupoid::from_boundary(analysis);
        DecompositionIso iso = build_iso(groupoid, ring);
        if (as_json) {
            out << iso_summary_to_json(iso).dump(2) << "\n";
        } else {
            out << "ring: " << ring.spec_string() << "\n";
            for (size_t i = 0; i < iso.orbit_data().size(); ++i) {
                const auto& data = iso.orbit_data()[i];
                const Orbit& orbit = groupoid->orbits()[i];
                out << "orbit " << i << ": M_" << orbit.members.size() << "("
                    << data.target_ring.spec_string() << "), representative "
                    << analysis->paths[static_cast<size_t>(data.representative)].encoding << "\n";
            }
        }
        return 0;
    }
    if (command == "verify-iso") {
        Graph g = parse_graph(read_file(input_path));
        Ring ring = Ring::parse_spec(ring_spec);
        auto analysis = std::make_shared<const BoundaryAnalysis>(analyze_boundary(g));
        auto groupoid = DiscreteGroupoid::from_boundary(analysis);
        DecompositionIso iso = build_iso(groupoid, ring);
        IsoVerification rep = verify_iso(iso, bound);
        if (as_json) {
            out << iso_verification_to_json(rep).dump(2) << "\n";
        } else {
            out << "basis arrows: " << rep.basis_arrows << "\n";
            for (const auto& c : rep.checks) {
                out << "check " << c.name << ": " << (c.pass ? "pass" : "FAIL") << "\n";
                for (const auto& f : c.failures) out << "  " << f << "\n";
            }
        }
        return rep.ok() ? 0 : 1;
    }
    if (command == "oracle") {
        Ring ring = Ring::parse_spec(ring_spec);
        if (oracle_kind == "left-ideals") {
            auto ideals = left_ideals(ring);
            if (as_json) {
                out << left_ideals_to_json(ring, ideals).dump(2) << "\n";
            } else {
                const auto elems = ring.enumerate();
                out << "ring: " << ring.spec_string() << "\n";
                out << "left ideals: " << ideals.size() << "\n";
                for (const auto& ideal : ideals) {
                    out << "  {";
                    for (size_t i = 0; i < ideal.size(); ++i)
                        out << (i ? ", " : " ")
                            << ring.elem_string(elems[static_cast<size_t>(ideal[i])]);
                    out << " }\n";
                }
            }
            return 0;
        }
        if (oracle_kind == "column-module") {
            std::vector<int> index_set;
            for (int i = 1; i <= oracle_size; ++i) index_set.push_back(i);
            ColumnOracleReport rep = column_submodule_check(ring, index_set, oracle_pivot);
            if (as_json) {
                out << column_oracle_to_json(ring, index_set, oracle_pivot, rep).dump(2) << "\n";
            } else {
                out << "ring: " << ring.spec_string() << ", |J| = " << oracle_size
                    << ", pivot = " << oracle_pivot << "\n";
                out << "submodules: " << rep.submodule_sizes.size()
                    << ", left ideals: " << rep.ideals.size() << "\n";
                out << "bijective: " << (rep.bijective ? "yes" : "no") << "\n";
                out << "inclusion preserving: " << (rep.inclusion_preserving ? "yes" : "no")
                    << "\n";
            }
            return rep.ok() ? 0 : 1;
        }
        throw parse_error("unknown oracle kind '" + oracle_kind +
                          "' (expected left-ideals or column-module)");
    }
    if (command == "validate-groupoid") {
        FiniteGroupoid g = parse_groupoid(read_file(input_path));
        ValidationReport rep = g.validate();
        if (as_json) {
            out << validation_report_to_json(rep).dump(2) << "\n";
        } else {
            out << "valid: " << (rep.ok() ? "yes" : "no") << "\n";
            for (const auto& issue : rep.issues) out << "  " << issue << "\n";
        }
        return rep.ok() ? 0 : 1;
    }
    throw parse_error("unknown command '" + command + "'");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"chain-condition calculator for graph and groupoid algebras"};
    app.require_subcommand(1);

    std::string input_path;
    std::string ring_spec = "Z";
    long bound = 3;
    bool as_json = false;
    std::string oracle_kind;
    int oracle_size = 2;
    int oracle_pivot = 1;

    auto add_common = [&](CLI::App* sub, bool needs_input, bool needs_ring) {
        if (needs_input)
            sub->add_option("input", input_path, "input JSON document")->required();
        if (needs_ring) sub->add_option("--ring", ring_spec, "coefficient ring spec")->required();
        sub->add_flag("--json", as_json, "machine-readable output");
    };

    add_common(app.add_subcommand("analyze", "boundary-path analysis of a graph"), true, false);
    add_common(app.add_subcommand("decide", "chain-condition verdict for a graph algebra"), true,
               true);
    add_common(app.add_subcommand("decompose", "matrix decomposition of a graph algebra"), true,
               true);
    CLI::App* vi = app.add_subcommand("verify-iso", "verify the decomposition isomorphism");
    add_common(vi, true, true);
    vi->add_option("--bound", bound, "integer-component bound for boundary arrows");
    CLI::App* oracle = app.add_subcommand("oracle", "finite-ring brute-force oracles");
    oracle->add_option("kind", oracle_kind, "left-ideals | column-module")->required();
    oracle->add_option("--ring", ring_spec, "coefficient ring spec")->required();
    oracle->add_option("--size", oracle_size, "index-set size for column-module");
    oracle->add_option("--pivot", oracle_pivot, "pivot index for column-module");
    oracle->add_flag("--json", as_json, "machine-readable output");
    add_common(app.add_subcommand("validate-groupoid", "validate an explicit groupoid table"),
               true, false);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: usage: " << e.what() << "\n";
        return 2;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        return run_parsed(command, input_path, ring_spec, bound, as_json, oracle_kind, oracle_size,
                          oracle_pivot, out);
    } catch (const parse_error& e) {
        err << "error: parse: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        err << "error: domain: " << e.what() << "\n";
        return 1;
    }
}

int main_entry(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, std::cout, std::cerr);
}

} // namespace groupalg::cli
