// zsets: exact computations on decomposable subsets of abelian groups.
//
// Set documents travel as JSON on stdin/stdout; every subcommand writes a
// single JSON line. Identical inputs (and seeds) produce byte-identical
// output. Domain failures exit 1 with {"error":{...}}; usage errors exit 2.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "zs/json_io.hpp"

namespace {

zs::ojson read_doc(const std::string& path) {
    std::string text;
    if (path.empty() || path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream in(path);
        if (!in) throw zs::DomainError("io_error", "cannot open input file '" + path + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return zs::ojson::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw zs::DomainError("bad_json", e.what());
    }
}

void emit(const zs::ojson& j) { std::cout << j.dump() << "\n"; }

zs::HuntBudget parse_budget(const std::string& text) {
    zs::HuntBudget b;
    if (text.empty()) return b;
    if (text.back() == 's') {
        b.seconds = std::stod(text.substr(0, text.size() - 1));
        if (b.seconds <= 0) throw zs::DomainError("bad_budget", "time budget must be positive");
    } else {
        b.trials = std::stoull(text);
        if (b.trials == 0) throw zs::DomainError("bad_budget", "trial budget must be positive");
    }
    return b;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for decomposable sets and their zero-sum subsets"};
    app.require_subcommand(1);

    std::string input_path, cert_path, budget_text = "10000";
    int gen_n = 0, size = 0, jobs = 1;
    zs::i64 window = 0;
    std::uint64_t seed = 0, cap_nodes = std::size_t(1) << 20;
    int cap_set_size = 28;

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("--input", input_path, "set document path ('-' or absent = stdin)");
    };

    auto* gen = app.add_subcommand("gen", "emit one of the named families as a set document");
    auto* gen_dn = gen->add_subcommand("dn", "doubling family over Z, cardinality 2n");
    gen_dn->add_option("n", gen_n, "family index (n >= 1)")->required();
    auto* gen_cyc = gen->add_subcommand("cyclic", "powers of two in the cyclic group 2^n-1");
    gen_cyc->add_option("n", gen_n, "family index (n >= 2)")->required();
    gen->require_subcommand(1);

    auto* check = app.add_subcommand("check", "decomposability and the decomposition table");
    add_input(check);

    auto* zmin = app.add_subcommand("zmin", "minimum zero-sum cardinality and a witness");
    add_input(zmin);
    zmin->add_option("--cap-set-size", cap_set_size, "exact-search size guard (default 28)");

    auto* certify = app.add_subcommand("certify", "non-empty A,B within the set, sums cancelling");
    add_input(certify);
    certify->add_option("--cap-nodes", cap_nodes, "tree node budget (default 2^20)");

    auto* verify = app.add_subcommand("verify", "check a certificate against a set document");
    add_input(verify);
    verify->add_option("--cert", cert_path, "certificate JSON path")->required();

    auto* minimal = app.add_subcommand("minimal", "a minimal decomposable subset");
    add_input(minimal);

    auto* weights = app.add_subcommand("weights", "non-negative weights with zero weighted sum");
    add_input(weights);

    auto* reduce = app.add_subcommand("reduce", "map an integer-vector set to Z, preserving z");
    add_input(reduce);

    auto* boolzs = app.add_subcommand("boolean-zs", "zero-sum subset of size <= 3 (boolean groups)");
    add_input(boolzs);

    auto* classify = app.add_subcommand("classify", "exhaustive window classification report");
    classify->add_option("--size", size, "set cardinality (1..8)")->required();
    classify->add_option("--window", window, "element bound M, elements in [-M,M]")->required();
    classify->add_option("--jobs", jobs, "worker threads (default 1)");

    auto* hunt = app.add_subcommand("hunt", "randomized search for high-z decomposable sets");
    hunt->add_option("--size", size, "set cardinality")->required();
    hunt->add_option("--budget", budget_text, "trials (e.g. 50000) or seconds (e.g. 10s)");
    hunt->add_option("--seed", seed, "PRNG seed (default 0)");
    hunt->add_option("--jobs", jobs, "worker threads (default 1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (gen_dn->parsed()) {
            emit(zs::set_to_json(zs::example2_set(gen_n)));
        } else if (gen_cyc->parsed()) {
            emit(zs::set_to_json(zs::example1_set(gen_n)));
        } else if (check->parsed()) {
            zs::ElementSet D = zs::set_from_json(read_doc(input_path));
            auto table = zs::decomposition_table(D);
            zs::ojson out;
            out["schema"] = 1;
            out["decomposable"] = !D.empty() && table.all_rows_nonempty();
            out["table"] = zs::table_to_json(D, table);
            emit(out);
        } else if (zmin->parsed()) {
            zs::ElementSet D = zs::set_from_json(read_doc(input_path));
            emit(zs::witness_to_json(D, zs::min_zero_sum(D, {cap_set_size})));
        } else if (certify->parsed()) {
            zs::ElementSet D = zs::set_from_json(read_doc(input_path));
            zs::Certificate c = zs::certify(D, {cap_nodes});
            zs::ojson out = zs::certificate_to_json(c);
            out["verified"] = zs::verify_certificate(D, c);
            emit(out);
        } else if (verify->parsed()) {
            zs::ElementSet D = zs::set_from_json(read_doc(input_path));
            zs::Certificate c = zs::certificate_from_json(D.ctx(), read_doc(cert_path));
            zs::ojson out;
            out["schema"] = 1;
            out["ok"] = zs::verify_certificate(D, c);
            emit(out);
        } else if (minimal->parsed()) {
            zs::ElementSet D = zs::set_from_json(read_doc(input_path));
            zs::ElementSet M = zs::minimal_decomposable_subset(D);
            zs::ojson out;
            out["schema"] = 1;
            out["minimal"] = zs::elems_to_json(M.ctx(), M.elems());
            emit(out);
        } else if (weights->parsed()) {
            zs::ElementSet D = zs::set_from_json(read_doc(input_path));
            emit(zs::weights_to_json(D, zs::weight_function(D)));
        } else if (reduce->parsed()) {
            zs::ElementSet D = zs::set_from_json(read_doc(input_path));
            emit(zs::reduction_to_json(zs::reduce_to_line(D)));
        } else if (boolzs->parsed()) {
            zs::ElementSet D = zs::set_from_json(read_doc(input_path));
            zs::ElementSet T = zs::boolean_zero_sum(D);
            zs::ojson out;
            out["schema"] = 1;
            out["T"] = zs::elems_to_json(T.ctx(), T.elems());
            emit(out);
        } else if (classify->parsed()) {
            emit(zs::report_to_json(zs::classify(size, window, jobs)));
        } else if (hunt->parsed()) {
            emit(zs::hunt_to_json(zs::hunt(size, parse_budget(budget_text), seed, jobs)));
        }
    } catch (const zs::Error& e) {
        emit(zs::error_to_json(e.code(), e.what()));
        return 1;
    } catch (const std::exception& e) {
        emit(zs::error_to_json("internal_error", e.what()));
        return 1;
    }
    return 0;
}
