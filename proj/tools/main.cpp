#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cgm/json_io.hpp"

namespace {

using cgm::Json;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) cgm::fail(cgm::errc::parse, "cannot open \"" + path + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

cgm::QMatrix load_qmatrix(const std::string& path) {
    try {
        return cgm::qmatrix_from_json(cgm::parse_json_text(read_input(path)));
    } catch (const cgm::Error& e) {
        cgm::fail(e.code(), path + ": " + e.what());
    }
}

cgm::PathWitness load_witness(const std::string& path) {
    try {
        return cgm::witness_from_json(cgm::parse_json_text(read_input(path)));
    } catch (const cgm::Error& e) {
        cgm::fail(e.code(), path + ": " + e.what());
    }
}

// Declared field of the inputs, checked when the user pins one on the
// command line. The rational subcommands only ever accept Q.
void check_declared_field(const std::string& declared, std::optional<std::uint32_t> declared_p) {
    if (!declared.empty() && declared != "Q")
        cgm::fail(cgm::errc::type_mismatch, "this subcommand works over Q; --field " + declared + " is not supported");
    if (declared_p) cgm::fail(cgm::errc::type_mismatch, "--p applies to the finite-ring oracle subcommands only");
}

void emit(Json j, bool timestamps) {
    if (timestamps) {
        std::time_t now = std::time(nullptr);
        char buf[32];
        std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
        j["generated_at"] = buf;
    }
    std::cout << j.dump(2) << "\n";
}

int exit_code_for(cgm::errc code) {
    switch (code) {
        case cgm::errc::internal:
        case cgm::errc::no_common_commuter: return 1;
        default: return 2; // usage or input problem
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact commuting-graph toolkit: short commuting paths between 4x4 rational matrices, "
                 "with exhaustive finite-ring oracles"};
    app.require_subcommand(1);

    bool timestamps = false;
    app.add_flag("--timestamps", timestamps, "Append a generation timestamp to JSON output");
    std::string declared_field;
    app.add_option("--field", declared_field, "Declare the scalar field of the inputs (Q or Fp)")
        ->check(CLI::IsMember({"Q", "Fp"}));
    std::optional<std::uint32_t> declared_p;
    app.add_option("--p", declared_p, "Declare the prime modulus of Fp inputs");

    auto* classify_cmd = app.add_subcommand("classify", "Eigenstructure report of a 4x4 rational matrix");
    std::string classify_in;
    classify_cmd->add_option("matrix", classify_in, "Matrix JSON file, or - for stdin")->required();

    auto* path_cmd = app.add_subcommand("witness-path", "Find a short commuting path between two matrices");
    std::string path_a, path_b;
    bool shorten = false, canonical = false;
    path_cmd->add_option("A", path_a, "First endpoint, matrix JSON")->required();
    path_cmd->add_option("B", path_b, "Second endpoint, matrix JSON")->required();
    path_cmd->add_flag("--shorten", shorten, "Splice out any commuting shortcuts before printing");
    path_cmd->add_flag("--canonical", canonical, "Emit the unshortened construction (default)");

    auto* verify_cmd = app.add_subcommand("verify", "Check a path witness against the graph rules");
    std::string verify_path_in, verify_a, verify_b;
    verify_cmd->add_option("path", verify_path_in, "PathWitness JSON")->required();
    verify_cmd->add_option("A", verify_a, "Intended first endpoint")->required();
    verify_cmd->add_option("B", verify_b, "Intended last endpoint")->required();

    int ring_n = 3;
    std::uint32_t ring_p = 2;
    auto* diam_cmd = app.add_subcommand("oracle-diameter", "Exact diameter of the commuting graph of M_n(F_p)");
    diam_cmd->add_option("--n", ring_n, "Matrix size (2..4)")->required();
    diam_cmd->add_option("--p", ring_p, "Prime modulus (2, 3, 5)")->required();

    auto* prop_cmd = app.add_subcommand("oracle-prop3", "Exhaustive bridge validation over M_n(F_p)");
    int prop_n = 2;
    std::uint32_t prop_p = 2;
    prop_cmd->add_option("--n", prop_n, "Matrix size (2..4)")->required();
    prop_cmd->add_option("--p", prop_p, "Prime modulus (2, 3, 5)")->required();

    auto* dot_cmd = app.add_subcommand("export-dot", "DOT graph of a vertex neighborhood in M_n(F_p)");
    int dot_n = 2;
    std::uint32_t dot_p = 2;
    std::uint32_t dot_source = 0;
    int dot_radius = 2;
    dot_cmd->add_option("--n", dot_n, "Matrix size (2..4)")->required();
    dot_cmd->add_option("--p", dot_p, "Prime modulus (2, 3, 5)")->required();
    dot_cmd->add_option("--source", dot_source, "Index of the source vertex")->required();
    dot_cmd->add_option("--radius", dot_radius, "Neighborhood radius");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help and friends
        app.exit(e);
        return 2;
    }

    try {
        if (*classify_cmd) {
            check_declared_field(declared_field, declared_p);
            emit(cgm::structure_report_to_json(cgm::classify(load_qmatrix(classify_in))), timestamps);
            return 0;
        }
        if (*path_cmd) {
            check_declared_field(declared_field, declared_p);
            if (shorten && canonical)
                cgm::fail(cgm::errc::degenerate_input, "--shorten and --canonical are mutually exclusive");
            cgm::QMatrix a = load_qmatrix(path_a);
            cgm::QMatrix b = load_qmatrix(path_b);
            cgm::PathWitness pw = cgm::build_path(a, b);
            if (shorten) {
                pw = cgm::shorten_path(pw);
                pw.certified = cgm::verify_path(pw, a, b).pass;
            }
            emit(cgm::witness_to_json(pw), timestamps);
            return 0;
        }
        if (*verify_cmd) {
            check_declared_field(declared_field, declared_p);
            cgm::PathWitness pw = load_witness(verify_path_in);
            cgm::VerifyReport rep = cgm::verify_path(pw, load_qmatrix(verify_a), load_qmatrix(verify_b));
            emit(cgm::verify_report_to_json(rep), timestamps);
            return rep.pass ? 0 : 1;
        }
        if (*diam_cmd) {
            cgm::RingSpec spec{ring_n, ring_p};
            emit(cgm::diameter_to_json(spec, cgm::diameter(spec)), timestamps);
            return 0;
        }
        if (*prop_cmd) {
            cgm::RingSpec spec{prop_n, prop_p};
            cgm::Prop3Report rep = cgm::prop3_exhaustive(spec);
            emit(cgm::prop3_to_json(rep), timestamps);
            return rep.discrepancies == 0 ? 0 : 1;
        }
        if (*dot_cmd) {
            std::cout << cgm::export_dot(cgm::RingSpec{dot_n, dot_p}, dot_source, dot_radius);
            return 0;
        }
    } catch (const cgm::Error& e) {
        std::cerr << "error (" << cgm::errc_name(e.code()) << "): " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
