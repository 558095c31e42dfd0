#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "graphzz/duality.hpp"
#include "graphzz/generator.hpp"
#include "graphzz/oracle.hpp"
#include "graphzz/verify.hpp"
#include "graphzz/zigzag_one.hpp"
#include "graphzz/zigzag_zero.hpp"

namespace {

using namespace graphzz;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw validation_error(0, "cannot open input file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string fnv1a(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int cmd_compute(const std::string& dim, const std::string& input, const std::string& output,
                const std::string& format, const std::string& dual_path) {
    std::string text = slurp(input);
    zigzag_filtration f = parse_filtration(text);
    barcode bc;
    if (dim == "0") {
        bc = compute_barcode0(f);
    } else if (dim == "1") {
        bc = compute_barcode1(f);
    } else if (dim == "codim1") {
        std::vector<dual_complex> supplied;
        if (!dual_path.empty()) supplied = parse_dual_complexes(slurp(dual_path));
        bc = compute_codim1(f, supplied);
    } else {
        throw validation_error(0, "unknown dimension '" + dim + "'");
    }
    std::string out =
        serialize_barcode(bc, format == "json" ? barcode_format::json : barcode_format::text);
    if (output.empty() || output == "-") {
        std::cout << out;
    } else {
        std::ofstream os(output, std::ios::binary);
        if (!os) throw validation_error(0, "cannot open output file '" + output + "'");
        os << out;
    }
    return 0;
}

int cmd_gen(index_t n, index_t m, std::uint64_t seed, const std::string& model,
            const std::string& output, index_t planar_grid, bool with_triangles) {
    zigzag_filtration f = planar_grid > 0
                              ? generate_planar(planar_grid, m, seed, with_triangles)
                              : generate_random(n, m, seed, parse_model(model));
    std::string text = serialize_filtration(f);
    if (output.empty() || output == "-") {
        std::cout << text;
    } else {
        std::ofstream os(output, std::ios::binary);
        if (!os) throw validation_error(0, "cannot open output file '" + output + "'");
        os << text;
    }
    return 0;
}

int cmd_bench(const std::string& dim, const std::string& sizes_csv, std::uint64_t seed,
              index_t n_div) {
    std::vector<index_t> sizes;
    std::stringstream ss(sizes_csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        sizes.push_back(static_cast<index_t>(std::stod(tok)));
    }
    if (sizes.empty()) throw validation_error(0, "no benchmark sizes given");
    if (n_div <= 0) n_div = (dim == "0") ? 16 : 32;
    std::vector<double> times;
    for (index_t m : sizes) {
        index_t n = std::max<index_t>(16, m / n_div);
        auto t0 = std::chrono::steady_clock::now();
        zigzag_filtration f = generate_random(n, m, seed, gen_model::dynamic_er);
        graph_event_seq seq = events_from_filtration(f);
        std::string digest = fnv1a(serialize_filtration(f));
        double gen_s = seconds_since(t0);
        auto t1 = std::chrono::steady_clock::now();
        barcode bc = (dim == "0") ? compute_barcode0(seq) : compute_barcode1(seq);
        double compute_s = seconds_since(t1);
        times.push_back(compute_s);
        nlohmann::json j{{"command", "bench"},
                         {"dim", dim},
                         {"m", m},
                         {"n", n},
                         {"seed", seed},
                         {"input_digest", digest},
                         {"phases", {{"generate_s", gen_s}, {"compute_s", compute_s}}},
                         {"intervals", bc.intervals.size()}};
        std::cout << j.dump() << std::endl;
    }
    if (times.size() > 1) {
        std::vector<double> ratios;
        for (std::size_t i = 1; i < times.size(); ++i)
            ratios.push_back(times[i] / std::max(times[i - 1], 1e-9));
        nlohmann::json j{{"command", "bench-summary"}, {"dim", dim}, {"ratios", ratios}};
        std::cout << j.dump() << std::endl;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"zigzag persistence barcodes of graph filtrations"};
    app.require_subcommand(1);

    auto* compute = app.add_subcommand("compute", "compute a barcode from a filtration file");
    std::string c_dim = "0", c_input, c_output, c_format = "text", c_dual;
    compute->add_option("--dim", c_dim, "homology dimension: 0, 1 or codim1");
    compute->add_option("--input", c_input, "filtration file")->required();
    compute->add_option("--output", c_output, "output path (default stdout)");
    compute->add_option("--format", c_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    compute->add_option("--dual-graph", c_dual, "caller-supplied dual graph file (codim1)");

    auto* verify = app.add_subcommand("verify", "differential test against the oracle");
    verify_options vopt;
    verify->add_option("--dim", vopt.dim, "0, 1 or codim1");
    verify->add_option("--trials", vopt.trials, "number of random instances");
    verify->add_option("--seed", vopt.seed, "base seed");
    verify->add_option("--max-n", vopt.max_n, "max vertex count");
    verify->add_option("--max-m", vopt.max_m, "max arrow count");
    verify->add_option("--threads", vopt.threads, "worker pool size (0: ZZ_THREADS)");
    verify->add_option("--repro-dir", vopt.repro_dir, "directory for reproducer files");
    verify->add_flag("--inject-fault", vopt.inject_fault, "fault harness (testing only)")
        ->group("");

    auto* bench = app.add_subcommand("bench", "scaling benchmark");
    std::string b_dim = "0", b_sizes;
    std::uint64_t b_seed = 1;
    index_t b_ndiv = 0;
    bench->add_option("--dim", b_dim, "0 or 1")->check(CLI::IsMember({"0", "1"}));
    bench->add_option("--sizes", b_sizes, "comma-separated arrow counts")->required();
    bench->add_option("--seed", b_seed, "seed");
    bench->add_option("--n-div", b_ndiv, "vertices = m / n-div");

    auto* gen = app.add_subcommand("gen", "generate a random filtration");
    index_t g_n = 16, g_m = 64, g_planar = 0;
    std::uint64_t g_seed = 1;
    std::string g_model = "dynamic-er", g_output;
    bool g_tri = false;
    gen->add_option("--n", g_n, "vertex count");
    gen->add_option("--m", g_m, "arrow count");
    gen->add_option("--seed", g_seed, "seed");
    gen->add_option("--model", g_model, "dynamic-er, insert-heavy or churn");
    gen->add_option("--output", g_output, "output path (default stdout)");
    gen->add_option("--planar", g_planar, "grid size: emit an embedded 2-complex filtration");
    gen->add_flag("--with-triangles", g_tri, "planar generator may add 2-simplices");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*compute) return cmd_compute(c_dim, c_input, c_output, c_format, c_dual);
        if (*verify) {
            verify_report rep = run_verify(vopt, std::cout);
            nlohmann::json j{{"command", "verify"},
                             {"dim", vopt.dim},
                             {"trials", rep.trials},
                             {"failures", rep.failures},
                             {"seed", vopt.seed},
                             {"verdict", rep.failures == 0 ? "pass" : "fail"}};
            std::cout << j.dump() << std::endl;
            return rep.failures == 0 ? 0 : 1;
        }
        if (*bench) return cmd_bench(b_dim, b_sizes, b_seed, b_ndiv);
        if (*gen) return cmd_gen(g_n, g_m, g_seed, g_model, g_output, g_planar, g_tri);
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const validation_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const invariant_error& e) {
        std::cerr << "internal invariant failure: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
