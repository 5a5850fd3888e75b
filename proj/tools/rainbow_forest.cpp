// rainbow-forest: generators, pipelines, verification and sweeps for
// edge-disjoint rainbow spanning trees in properly coloured complete graphs.
//
// Exit codes: 0 success, 1 verification failure, 2 input/parameter error,
// 3 partial pipeline success.

#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "rainbow/rainbow.hpp"

namespace {

using Clock = std::chrono::steady_clock;

long elapsed_ms(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

std::string hex64(uint64_t v) {
    std::ostringstream os;
    os << std::hex << v;
    return os.str();
}

// Flat key=value manifest written alongside every output file. Replaying the
// command with the same seed reproduces the primary outputs byte-identically;
// wall_clock_ms is the one volatile field.
struct Manifest {
    std::vector<std::pair<std::string, std::string>> entries;

    void add(const std::string& key, const std::string& value) { entries.push_back({key, value}); }
    void add(const std::string& key, long value) { add(key, std::to_string(value)); }

    void write(const std::string& out_path) const {
        std::ostringstream os;
        for (const auto& [k, v] : entries) os << k << '=' << v << '\n';
        rainbow::write_file(out_path + ".manifest", os.str());
    }
};

rainbow::Claims parse_claims(const std::string& list) {
    rainbow::Claims claims;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "spanning")
            claims.spanning = true;
        else if (item == "rainbow")
            claims.rainbow = true;
        else if (item == "edgeDisjoint")
            claims.edge_disjoint = true;
        else if (item == "spiderShaped")
            claims.spider_shaped = true;
        else if (item == "isomorphic")
            claims.isomorphic = true;
        else if (!item.empty())
            throw rainbow::InputError("unknown claim: " + item);
    }
    return claims;
}

// Params file: flat key=value lines, '#' comments. Unknown keys rejected.
rainbow::PipelineParams parse_params_file(const std::string& path) {
    rainbow::PipelineParams p;
    p.strict = false;  // a relax file means relaxed mode unless stated
    std::istringstream in(rainbow::read_file(path));
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            s.erase(0, s.find_first_not_of(" \t\r"));
            s.erase(s.find_last_not_of(" \t\r") + 1);
            return s;
        };
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty()) continue;
        if (key == "alpha")
            p.alpha = std::stod(value);
        else if (key == "phi")
            p.phi = std::stod(value);
        else if (key == "epsilon")
            p.epsilon = std::stod(value);
        else if (key == "gamma")
            p.gamma = std::stod(value);
        else if (key == "tau")
            p.tau = std::stod(value);
        else if (key == "delta")
            p.delta = std::stod(value);
        else if (key == "mu")
            p.mu = std::stod(value);
        else if (key == "strict")
            p.strict = value == "1" || value == "true";
        else
            throw rainbow::InputError("params file: unknown key '" + key + "'");
    }
    return p;
}

std::vector<int> parse_int_list(const std::string& list) {
    std::vector<int> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(std::stoi(item));
    return out;
}

struct SweepCell {
    int n;
    uint64_t seed;
    long trees_found = 0;
    long trees_guaranteed = 0;
    std::string stage_failed = "-";
    long millis = 0;
};

void write_sweep_plot(const std::string& path, const std::vector<SweepCell>& cells) {
    // Minimal SVG: trees_found dots against the n/9 - 6 guarantee line.
    int min_n = cells.front().n, max_n = cells.front().n;
    long max_y = 1;
    for (const SweepCell& c : cells) {
        min_n = std::min(min_n, c.n);
        max_n = std::max(max_n, c.n);
        max_y = std::max({max_y, c.trees_found, c.trees_guaranteed});
    }
    const double w = 640, h = 400, pad = 40;
    auto sx = [&](double n) {
        return pad + (max_n == min_n ? 0.5 : (n - min_n) / (max_n - min_n)) * (w - 2 * pad);
    };
    auto sy = [&](double y) { return h - pad - y / static_cast<double>(max_y) * (h - 2 * pad); };
    std::ostringstream os;
    os << "<svg xmlns='http://www.w3.org/2000/svg' width='" << w << "' height='" << h << "'>\n";
    os << "<rect width='100%' height='100%' fill='white'/>\n";
    os << "<polyline fill='none' stroke='gray' stroke-dasharray='4' points='";
    for (const SweepCell& c : cells) os << sx(c.n) << ',' << sy(c.trees_guaranteed) << ' ';
    os << "'/>\n";
    for (const SweepCell& c : cells)
        os << "<circle cx='" << sx(c.n) << "' cy='" << sy(c.trees_found)
           << "' r='3' fill='" << (c.stage_failed == "-" ? "steelblue" : "crimson") << "'/>\n";
    os << "<text x='" << pad << "' y='" << h - 8 << "' font-size='12'>trees found vs n (dashed: "
       << "ceil(n/9)-6 guarantee)</text>\n</svg>\n";
    rainbow::write_file(path, os.str());
}

int cmd_generate(const std::string& kind, int n, int m, uint64_t seed, int extra_colours,
                 const std::string& out, const std::string& command_line) {
    Clock::time_point start = Clock::now();
    Manifest manifest;
    manifest.add("command", command_line);
    manifest.add("seed", static_cast<long>(seed));
    std::string body;
    if (kind == "factorization") {
        rainbow::ColouredGraph g =
            rainbow::permuted_seeded(rainbow::round_robin_one_factorization(n), seed);
        body = rainbow::write_colouring(g);
        manifest.add("param.n", n);
    } else if (kind == "proper") {
        rainbow::ColouredGraph g = rainbow::proper_colouring(n, seed, extra_colours);
        body = rainbow::write_colouring(g);
        manifest.add("param.n", n);
        manifest.add("param.extra_colours", extra_colours);
    } else if (kind == "sts") {
        body = rainbow::write_sts(rainbow::steiner_triple_system(m));
        manifest.add("param.m", m);
    } else {
        throw rainbow::InputError("generate: unknown kind '" + kind + "'");
    }
    rainbow::write_file(out, body);
    manifest.add("output.digest", hex64(rainbow::fnv1a_digest(body)));
    manifest.add("wall_clock_ms", elapsed_ms(start));
    manifest.add("outcome", "ok");
    manifest.write(out);
    return 0;
}

int cmd_factorize(int n, uint64_t seed, const std::string& input, const std::string& out,
                  const std::string& trace_path, const std::string& colouring_out,
                  const std::string& command_line) {
    Clock::time_point start = Clock::now();
    Manifest manifest;
    manifest.add("command", command_line);
    manifest.add("seed", static_cast<long>(seed));

    rainbow::ColouredGraph g(0, 0);
    if (!input.empty()) {
        std::string bytes = rainbow::read_file(input);
        manifest.add("input." + input, hex64(rainbow::fnv1a_digest(bytes)));
        std::istringstream in(bytes);
        g = rainbow::read_colouring(in);
    } else {
        g = rainbow::permuted_seeded(rainbow::round_robin_one_factorization(n), seed);
        std::string col_path = colouring_out.empty() ? out + ".col" : colouring_out;
        rainbow::write_file(col_path, rainbow::write_colouring(g));
        manifest.add("colouring_file", col_path);
    }

    rainbow::FactorizationResult result = rainbow::theorem2_pipeline(g, seed);
    result.certificate.host_digest = rainbow::fnv1a_digest(rainbow::write_colouring(g));
    rainbow::write_file(out, rainbow::write_certificate(result.certificate));

    if (!trace_path.empty()) {
        std::ostringstream os;
        os << result.traces.size() << " traces\n";
        for (size_t i = 0; i < result.traces.size(); ++i)
            os << "tree " << i << "\n" << result.traces[i].to_string();
        rainbow::write_file(trace_path, os.str());
    }

    manifest.add("param.m", result.m);
    manifest.add("trees", static_cast<long>(result.certificate.trees.size()));
    manifest.add("claims", result.certificate.claims.to_string());
    manifest.add("wall_clock_ms", elapsed_ms(start));
    bool partial = !result.certificate.stage_report.empty();
    manifest.add("outcome", partial ? "partial: " + result.certificate.stage_report : "ok");
    manifest.write(out);
    if (partial) {
        std::cerr << result.certificate.stage_report << "\n";
        return 3;
    }
    return 0;
}

int cmd_proper(const std::string& input, int t, const std::string& shapes_list,
               const std::string& relax_path, const std::string& out,
               const std::string& command_line) {
    Clock::time_point start = Clock::now();
    Manifest manifest;
    manifest.add("command", command_line);

    std::string bytes = rainbow::read_file(input);
    manifest.add("input." + input, hex64(rainbow::fnv1a_digest(bytes)));
    std::istringstream in(bytes);
    rainbow::ColouredGraph g = rainbow::read_colouring(in);

    rainbow::PipelineParams params;
    if (!relax_path.empty()) {
        params = parse_params_file(relax_path);
        manifest.add("input." + relax_path,
                     hex64(rainbow::fnv1a_digest(rainbow::read_file(relax_path))));
    }
    manifest.add("param.alpha", std::to_string(params.alpha));
    manifest.add("param.phi", std::to_string(params.phi));
    manifest.add("param.epsilon", std::to_string(params.epsilon));
    manifest.add("param.strict", params.strict ? "1" : "0");

    rainbow::Theorem1Result result;
    if (!shapes_list.empty()) {
        std::vector<int> shapes = parse_int_list(shapes_list);
        result = rainbow::multi_shape_pipeline(g, shapes, params);
    } else {
        result = rainbow::theorem1_pipeline(g, t, params);
    }
    result.certificate.host_digest = rainbow::fnv1a_digest(bytes);
    rainbow::write_file(out, rainbow::write_certificate(result.certificate));

    manifest.add("branch", std::string(1, result.branch));
    manifest.add("trees", static_cast<long>(result.certificate.trees.size()));
    manifest.add("claims", result.certificate.claims.to_string());
    manifest.add("wall_clock_ms", elapsed_ms(start));
    bool partial = !result.certificate.stage_report.empty();
    manifest.add("outcome", partial ? "partial: " + result.certificate.stage_report : "ok");
    manifest.write(out);
    std::cerr << result.stage_log;
    return partial ? 3 : 0;
}

int cmd_matchings(const std::string& input, long delta, int b, int t, const std::string& out,
                  const std::string& command_line) {
    Clock::time_point start = Clock::now();
    Manifest manifest;
    manifest.add("command", command_line);
    std::string bytes = rainbow::read_file(input);
    manifest.add("input." + input, hex64(rainbow::fnv1a_digest(bytes)));
    std::istringstream in(bytes);
    rainbow::ColouredGraph g = rainbow::read_colouring(in);

    rainbow::MatchingFamily family = rainbow::many_rainbow_matchings(g, delta, b, t);
    std::ostringstream os;
    os << family.matchings.size() << ' ' << delta << '\n';
    for (size_t i = 0; i < family.matchings.size(); ++i) {
        os << family.roots[i] << ' ' << family.matchings[i].size() << '\n';
        for (const rainbow::Edge& e : family.matchings[i]) os << e.u << ' ' << e.v << '\n';
    }
    rainbow::write_file(out, os.str());
    manifest.add("wall_clock_ms", elapsed_ms(start));
    manifest.add("outcome", "ok");
    manifest.write(out);
    return 0;
}

int cmd_reshape(const std::string& input, const std::string& cert_path, int index, int s,
                double delta, const std::string& out, const std::string& command_line) {
    Clock::time_point start = Clock::now();
    Manifest manifest;
    manifest.add("command", command_line);
    std::string bytes = rainbow::read_file(input);
    manifest.add("input." + input, hex64(rainbow::fnv1a_digest(bytes)));
    std::istringstream in(bytes);
    rainbow::ColouredGraph g = rainbow::read_colouring(in);

    std::istringstream cin_(rainbow::read_file(cert_path));
    rainbow::ForestCertificate cert = rainbow::read_certificate(cin_);
    if (index < 0 || index >= static_cast<int>(cert.trees.size()))
        throw rainbow::InputError("reshape: tree index out of range");

    rainbow::ColouredGraph residual = g;
    for (int j = 0; j < static_cast<int>(cert.trees.size()); ++j)
        if (j != index) residual.remove_edges(cert.trees[j].edges);

    rainbow::Spider d0 =
        rainbow::classify_spider(g, cert.trees[index].edges, cert.trees[index].root);
    rainbow::ReshapeParams rp{delta, false};
    rainbow::ReshapeResult rr = rainbow::change_spider_parameter(residual, d0, s, rp);

    cert.trees[index].edges = rr.spider.edges();
    cert.trees[index].declared_t = rr.spider.t();
    rainbow::write_file(out, rainbow::write_certificate(cert));
    manifest.add("branch", std::string(1, rr.branch));
    manifest.add("wall_clock_ms", elapsed_ms(start));
    manifest.add("outcome", "ok");
    manifest.write(out);
    return 0;
}

int cmd_verify(const std::string& input, const std::string& cert_path,
               const std::string& claims_list) {
    std::string bytes = rainbow::read_file(input);
    std::istringstream in(bytes);
    rainbow::ColouredGraph g = rainbow::read_colouring(in);
    std::istringstream cin_(rainbow::read_file(cert_path));
    rainbow::ForestCertificate cert = rainbow::read_certificate(cin_);
    cert.claims = parse_claims(claims_list);

    rainbow::VerificationReport report = rainbow::verify_certificate(g, cert);
    std::cout << report.to_string();
    if (!report.pass) {
        for (size_t i = 0; i < report.trees.size(); ++i) {
            const rainbow::TreeReport& tr = report.trees[i];
            if (!tr.edges_in_host) std::cerr << "tree " << i << ": edges not in host\n";
            if (cert.claims.spanning && !tr.spanning)
                std::cerr << "tree " << i << ": fails spanning\n";
            if (cert.claims.rainbow && !tr.rainbow) std::cerr << "tree " << i << ": fails rainbow\n";
            if (cert.claims.spider_shaped && !tr.spider_shaped)
                std::cerr << "tree " << i << ": fails spiderShaped\n";
        }
        if (cert.claims.edge_disjoint && !report.edge_disjoint)
            std::cerr << "fails edgeDisjoint\n";
        if (cert.claims.isomorphic && !report.isomorphic) std::cerr << "fails isomorphic\n";
        return 1;
    }
    return 0;
}

int cmd_sweep(const std::string& pipeline, int n_from, int n_to, int n_step,
              const std::string& seeds_list, int t, const std::string& relax_path,
              const std::string& out, const std::string& plot_path, int jobs,
              const std::string& command_line) {
    Clock::time_point start = Clock::now();
    std::vector<int> seeds = parse_int_list(seeds_list);
    if (seeds.empty()) throw rainbow::InputError("sweep: empty seed list");
    if (n_from > n_to || n_step <= 0) throw rainbow::InputError("sweep: empty n range");
    if (pipeline != "factorize" && pipeline != "proper")
        throw rainbow::InputError("sweep: unknown pipeline '" + pipeline + "'");

    rainbow::PipelineParams params;
    if (!relax_path.empty()) params = parse_params_file(relax_path);

    std::vector<SweepCell> cells;
    for (int n = n_from; n <= n_to; n += n_step)
        for (int seed : seeds) cells.push_back({n, static_cast<uint64_t>(seed)});

    // Cells are independent; workers pull from a shared index, rows stay in
    // deterministic n-then-seed order.
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= cells.size()) return;
            SweepCell& cell = cells[i];
            Clock::time_point cell_start = Clock::now();
            try {
                if (pipeline == "factorize") {
                    if (cell.n % 2 != 0) throw rainbow::InputError("odd n");
                    cell.trees_guaranteed = std::max(0L, static_cast<long>((cell.n + 8) / 9) - 6);
                    rainbow::ColouredGraph g = rainbow::permuted_seeded(
                        rainbow::round_robin_one_factorization(cell.n), cell.seed);
                    rainbow::FactorizationResult r = rainbow::theorem2_pipeline(g, cell.seed);
                    cell.trees_found = static_cast<long>(r.certificate.trees.size());
                    if (!r.certificate.stage_report.empty())
                        cell.stage_failed = "growth";
                } else {
                    cell.trees_guaranteed =
                        static_cast<long>(std::floor(params.alpha * cell.n));
                    rainbow::ColouredGraph g =
                        rainbow::proper_colouring(cell.n, cell.seed, 0);
                    rainbow::Theorem1Result r = rainbow::theorem1_pipeline(g, t, params);
                    cell.trees_found = static_cast<long>(r.certificate.trees.size());
                    if (!r.certificate.stage_report.empty()) cell.stage_failed = "stage";
                }
            } catch (const rainbow::Error& err) {
                cell.stage_failed = err.what();
                for (char& ch : cell.stage_failed)
                    if (ch == ',' || ch == '\n') ch = ';';
            }
            cell.millis = elapsed_ms(cell_start);
        }
    };
    int worker_count = std::max(1, std::min<int>(jobs, static_cast<int>(cells.size())));
    std::vector<std::thread> pool;
    for (int i = 0; i < worker_count; ++i) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();

    std::ostringstream csv;
    csv << "n,seed,trees_found,trees_guaranteed,stage_failed,millis\r\n";
    bool all_failed = true;
    for (const SweepCell& c : cells) {
        if (c.stage_failed == "-") all_failed = false;
        std::string stage = c.stage_failed;
        if (stage.find_first_of(",\"") != std::string::npos) stage = "\"" + stage + "\"";
        csv << c.n << ',' << c.seed << ',' << c.trees_found << ',' << c.trees_guaranteed << ','
            << stage << ',' << c.millis << "\r\n";
    }
    rainbow::write_file(out, csv.str());
    if (!plot_path.empty() && !cells.empty()) write_sweep_plot(plot_path, cells);

    Manifest manifest;
    manifest.add("command", command_line);
    manifest.add("cells", static_cast<long>(cells.size()));
    manifest.add("wall_clock_ms", elapsed_ms(start));
    manifest.add("outcome", all_failed ? "all cells failed" : "ok");
    manifest.write(out);
    return all_failed ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rainbow spanning trees in properly edge-coloured complete graphs"};
    app.require_subcommand(1);

    std::ostringstream cmd_echo;
    for (int i = 0; i < argc; ++i) cmd_echo << (i ? " " : "") << argv[i];
    std::string command_line = cmd_echo.str();

    // generate
    auto* gen = app.add_subcommand("generate", "emit colouring / STS input files");
    std::string gen_kind;
    int gen_n = 0, gen_m = 0, gen_extra = 0;
    uint64_t gen_seed = 0;
    std::string gen_out = "out.txt";
    gen->add_option("kind", gen_kind, "factorization | proper | sts")->required();
    gen->add_option("--n", gen_n, "vertex count");
    gen->add_option("--m", gen_m, "STS point count");
    gen->add_option("--seed", gen_seed, "PRNG seed");
    gen->add_option("--extra-colours", gen_extra, "extra colour splits (proper)");
    gen->add_option("--out", gen_out, "output file")->required();

    // factorize
    auto* fac = app.add_subcommand("factorize", "run the 1-factorization pipeline");
    int fac_n = 0;
    uint64_t fac_seed = 0;
    std::string fac_input, fac_out = "cert.txt", fac_trace, fac_col;
    fac->add_option("--n", fac_n, "generate a seeded round-robin K_n");
    fac->add_option("--seed", fac_seed, "permutation / orientation seed");
    fac->add_option("--input", fac_input, "colouring file (instead of --n)");
    fac->add_option("--out", fac_out, "certificate file")->required();
    fac->add_option("--trace", fac_trace, "growth trace file");
    fac->add_option("--colouring-out", fac_col, "where to write the generated colouring");

    // proper
    auto* pro = app.add_subcommand("proper", "run the proper-colouring pipeline");
    std::string pro_input, pro_relax, pro_out = "cert.txt", pro_shapes;
    int pro_t = 0;
    pro->add_option("--input", pro_input, "colouring file")->required();
    pro->add_option("--t", pro_t, "target legs per spider");
    pro->add_option("--shapes", pro_shapes, "comma list of per-tree leg counts");
    pro->add_option("--relax", pro_relax, "params file (key=value)");
    pro->add_option("--out", pro_out, "certificate file")->required();

    // matchings
    auto* mat = app.add_subcommand("matchings", "extract edge-disjoint rainbow matchings");
    std::string mat_input, mat_out = "matchings.txt";
    long mat_delta = 0;
    int mat_b = 0, mat_t = 0;
    mat->add_option("--input", mat_input, "colouring file")->required();
    mat->add_option("--delta", mat_delta, "matching size")->required();
    mat->add_option("--b", mat_b, "colour class bound")->required();
    mat->add_option("--t", mat_t, "matching count")->required();
    mat->add_option("--out", mat_out, "output file")->required();

    // reshape
    auto* res = app.add_subcommand("reshape", "add legs to one certificate tree");
    std::string res_input, res_cert, res_out = "cert.txt";
    int res_index = 0, res_s = 3;
    double res_delta = 0.0006;
    res->add_option("--input", res_input, "colouring file")->required();
    res->add_option("--cert", res_cert, "certificate file")->required();
    res->add_option("--index", res_index, "tree index");
    res->add_option("--s", res_s, "legs to add (>= 3)")->required();
    res->add_option("--delta", res_delta, "degree slack");
    res->add_option("--out", res_out, "output certificate")->required();

    // verify
    auto* ver = app.add_subcommand("verify", "verify a certificate against a colouring");
    std::string ver_input, ver_cert, ver_claims = "spanning,rainbow,edgeDisjoint";
    ver->add_option("--input", ver_input, "colouring file")->required();
    ver->add_option("--cert", ver_cert, "certificate file")->required();
    ver->add_option("--claims", ver_claims, "comma list of claims to check");

    // sweep
    auto* swp = app.add_subcommand("sweep", "trees-found-vs-n experiments, CSV output");
    std::string swp_pipeline = "factorize", swp_seeds, swp_out = "sweep.csv", swp_plot,
                swp_relax;
    int swp_from = 0, swp_to = 0, swp_step = 2, swp_t = 0, swp_jobs = 4;
    swp->add_option("--pipeline", swp_pipeline, "factorize | proper");
    swp->add_option("--n-from", swp_from, "first n")->required();
    swp->add_option("--n-to", swp_to, "last n")->required();
    swp->add_option("--n-step", swp_step, "n increment");
    swp->add_option("--seeds", swp_seeds, "comma list of seeds")->required();
    swp->add_option("--t", swp_t, "target legs (proper)");
    swp->add_option("--relax", swp_relax, "params file (proper)");
    swp->add_option("--out", swp_out, "CSV file")->required();
    swp->add_option("--plot", swp_plot, "optional SVG plot");
    swp->add_option("--jobs", swp_jobs, "worker threads");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed())
            return cmd_generate(gen_kind, gen_n, gen_m, gen_seed, gen_extra, gen_out,
                                command_line);
        if (fac->parsed())
            return cmd_factorize(fac_n, fac_seed, fac_input, fac_out, fac_trace, fac_col,
                                 command_line);
        if (pro->parsed())
            return cmd_proper(pro_input, pro_t, pro_shapes, pro_relax, pro_out, command_line);
        if (mat->parsed())
            return cmd_matchings(mat_input, mat_delta, mat_b, mat_t, mat_out, command_line);
        if (res->parsed())
            return cmd_reshape(res_input, res_cert, res_index, res_s, res_delta, res_out,
                               command_line);
        if (ver->parsed()) return cmd_verify(ver_input, ver_cert, ver_claims);
        if (swp->parsed())
            return cmd_sweep(swp_pipeline, swp_from, swp_to, swp_step, swp_seeds, swp_t,
                             swp_relax, swp_out, swp_plot, swp_jobs, command_line);
    } catch (const rainbow::Error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    }
    return 2;
}
