#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>
#ifdef _OPENMP
#include <omp.h>
#endif

#include "zc/bounds.hpp"
#include "zc/capacity.hpp"
#include "zc/channel.hpp"
#include "zc/code.hpp"
#include "zc/constructions.hpp"
#include "zc/covering.hpp"
#include "zc/radius.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace zc;

std::vector<double> parse_grid(const std::string& spec) {
    std::vector<double> out;
    if (spec.empty()) return out;
    if (spec.find(':') != std::string::npos) {
        double start = 0, stop = 0, step = 0;
        char c1 = 0, c2 = 0;
        std::istringstream in(spec);
        if (!(in >> start >> c1 >> stop >> c2 >> step) || c1 != ':' || c2 != ':' ||
            !(step > 0)) {
            throw std::invalid_argument("grid must be 'a,b,c' or 'start:stop:step'");
        }
        for (double v = start; v <= stop + step * 1e-9; v += step) out.push_back(v);
        return out;
    }
    std::istringstream in(spec);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (!item.empty()) out.push_back(std::stod(item));
    }
    return out;
}

template <typename T>
std::vector<T> parse_int_list(const std::string& spec) {
    std::vector<T> out;
    std::istringstream in(spec);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (!item.empty()) out.push_back(static_cast<T>(std::stoll(item)));
    }
    return out;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
    out << text;
}

json report_to_json(const BoundReport& r) {
    json j;
    j["name"] = r.name;
    json inputs = json::object();
    for (const auto& [k, v] : r.inputs) inputs[k] = v;
    j["inputs"] = inputs;
    j["preconditions_met"] = r.preconditions_met;
    json failed = json::array();
    for (const auto& c : r.checks) {
        if (!c.ok) failed.push_back(c.name);
    }
    j["failed_checks"] = failed;
    if (r.value) {
        j["value"] = *r.value;
    } else {
        j["value"] = nullptr;
    }
    j["infinite"] = r.infinite;
    j["exact"] = r.exact ? json(r.exact->str()) : json(nullptr);
    json extras = json::object();
    for (const auto& [k, v] : r.extras) extras[k] = v;
    j["extras"] = extras;
    j["note"] = r.note;
    return j;
}

json strings_of(const std::vector<Word>& words) {
    json arr = json::array();
    for (const Word& w : words) arr.push_back(w.to_string());
    return arr;
}

int cmd_certify(const std::string& in, int L, const std::string& tau_str, bool serial,
                const std::string& out) {
    LoadedCode loaded = load_code(in);
    RadiusCertificate cert = serial ? list_decoding_radius_serial(loaded.code, L)
                                    : list_decoding_radius(loaded.code, L);
    json j;
    j["n"] = loaded.code.length();
    j["size"] = loaded.code.size();
    j["L"] = L;
    j["radius"] = cert.radius;
    j["witness_indices"] = cert.witness_indices;
    j["witness"] = strings_of(cert.witness);
    j["center"] = cert.center.to_string();
    if (!tau_str.empty()) {
        BigRat tau = parse_ratio(tau_str);
        BigInt budget = ceil_rat(tau * loaded.code.length());
        j["tau"] = ratio_to_string(tau);
        j["budget"] = budget.str();
        j["decodable"] = is_list_decodable(loaded.code, L, tau);
    }
    emit(j.dump(2) + "\n", out);
    return 0;
}

int cmd_sweep_bounds(int L, const std::string& w_str, const std::string& eps_grid,
                     const std::string& tau_str, std::optional<double> delta,
                     std::optional<std::uint32_t> n, std::optional<std::uint32_t> t,
                     const std::string& format, const std::string& out) {
    double w = to_double(parse_ratio(w_str));
    std::vector<BoundReport> reports;
    if (n && t) {
        reports.push_back(plotkin_classic(*n, *t));
        BigRat wn = parse_ratio(w_str) * *n;
        if (boost::multiprecision::denominator(wn) == 1) {
            reports.push_back(
                bassalygo_cw(*n, *t, static_cast<std::uint32_t>(boost::multiprecision::numerator(wn))));
        }
    }
    if (!tau_str.empty() && delta) {
        reports.push_back(apx_cw_ratio_bound(L, w, *delta, to_double(parse_ratio(tau_str))));
    }
    for (double eps : parse_grid(eps_grid)) {
        reports.push_back(cw_list_upper(L, w, eps));
        reports.push_back(close_weights_bound(L, eps));
        GeneralBound gen = general_upper_bound(L, eps);
        reports.push_back(gen.report);
        if (n) reports.push_back(unique_above_plotkin(*n, eps));
    }
    bool flagged = false;
    for (const auto& r : reports) flagged = flagged || !r.preconditions_met;
    if (format == "json") {
        json arr = json::array();
        for (const auto& r : reports) arr.push_back(report_to_json(r));
        emit(arr.dump(2) + "\n", out);
    } else {
        emit(bounds_csv(reports), out);
    }
    return flagged ? 3 : 0;
}

int cmd_sweep_capacity(int L, const std::string& w_grid, const std::string& tau_grid,
                       int grid, const std::string& format, const std::string& out) {
    std::vector<double> ws = parse_grid(w_grid);
    std::vector<double> taus = parse_grid(tau_grid);
    struct Row {
        double w, tau, eb, rc, rc_lower, stoch;
        std::optional<double> cld_bits;
    };
    std::vector<Row> rows;
    for (double w : ws) {
        for (double tau : taus) {
            Row row{};
            row.w = w;
            row.tau = tau;
            row.eb = eb_upper_bound(L, w, tau, grid).value;
            RareListExponent rc = rc_exponent(L, w, tau);
            row.rc = rc.exponent;
            row.rc_lower = rc.exponent / (L - 1);
            row.stoch = stochastic_capacity(w, tau);
            if (tau <= w) row.cld_bits = cld(w, tau);
            rows.push_back(row);
        }
    }
    if (format == "json") {
        json arr = json::array();
        for (const Row& r : rows) {
            json j;
            j["L"] = L;
            j["w"] = r.w;
            j["tau"] = r.tau;
            j["eb_upper"] = r.eb;
            j["rc_exponent"] = r.rc;
            j["rc_lower"] = r.rc_lower;
            j["cld"] = r.cld_bits ? json(*r.cld_bits) : json(nullptr);
            j["stochastic"] = r.stoch;
            arr.push_back(j);
        }
        emit(arr.dump(2) + "\n", out);
    } else {
        std::ostringstream csv;
        csv << "L,w,tau,eb_upper,rc_exponent,rc_lower,cld,stochastic\r\n";
        csv.precision(17);
        for (const Row& r : rows) {
            csv << L << ',' << r.w << ',' << r.tau << ',' << r.eb << ',' << r.rc << ','
                << r.rc_lower << ',';
            if (r.cld_bits) csv << *r.cld_bits;
            csv << ',' << r.stoch << "\r\n";
        }
        emit(csv.str(), out);
    }
    return 0;
}

int cmd_cover(std::uint32_t n, const std::string& w_str, const std::string& v_str,
              const std::string& a_str, double eps, std::uint64_t seed, bool verify,
              bool serial, const std::string& out, const std::string& report_out) {
    CoveringParams p =
        covering_params(n, parse_ratio(w_str), parse_ratio(v_str), parse_ratio(a_str));
    Code centers = sample_covering(p, eps, seed);
    json j;
    j["n"] = p.n;
    j["nw"] = p.nw;
    j["nv"] = p.nv;
    j["na"] = p.na;
    j["info_bits"] = p.info_bits();
    j["eps"] = eps;
    j["centers"] = centers.size();
    j["single_center_coverage"] = single_center_coverage(p).str();
    j["converse_lower"] = covering_converse_lower(p).str();
    j["seed"] = seed;
    if (verify) {
        CoveringReport rep =
            serial ? verify_covering_serial(centers, p) : verify_covering(centers, p);
        j["targets"] = rep.targets;
        j["uncovered"] = rep.uncovered;
        j["covered"] = rep.covered();
        if (rep.first_uncovered) j["first_uncovered"] = rep.first_uncovered->to_string();
    }
    if (!out.empty()) {
        Meta meta{{"kind", "covering"},
                  {"w", ratio_to_string(p.w)},
                  {"v", ratio_to_string(p.v)},
                  {"a", ratio_to_string(p.a)},
                  {"eps", std::to_string(eps)},
                  {"seed", std::to_string(seed)}};
        save_code(centers, meta, out);
    }
    emit(j.dump(2) + "\n", report_out);
    return 0;
}

int cmd_simulate(const std::string& in, int L, const std::string& tau_str,
                 std::uint32_t trials, std::uint64_t seed, const std::string& strategy,
                 const std::string& out) {
    LoadedCode loaded = load_code(in);
    BigRat tau = parse_ratio(tau_str);
    std::unique_ptr<AdversaryStrategy> adv;
    if (strategy == "greedy") {
        adv = std::make_unique<GreedyConfusion>();
    } else if (strategy == "random") {
        adv = std::make_unique<RandomErasures>();
    } else if (strategy == "stochastic") {
        adv = std::make_unique<StochasticDrops>(tau);
    } else {
        throw std::invalid_argument("unknown strategy: " + strategy);
    }
    CampaignReport rep = campaign(loaded.code, *adv, L, tau, trials, seed);
    json j;
    j["n"] = loaded.code.length();
    j["size"] = loaded.code.size();
    j["strategy"] = adv->name();
    j["tau"] = ratio_to_string(tau);
    j["budget"] = rep.budget;
    j["list_cap"] = rep.list_cap;
    j["trials"] = rep.trials;
    j["max_list"] = rep.max_list;
    j["violations"] = rep.violations;
    j["sent_missing"] = rep.sent_missing;
    j["over_budget"] = rep.over_budget;
    j["empirical_tau"] = rep.empirical_tau;
    j["seed"] = seed;
    emit(j.dump(2) + "\n", out);
    return 0;
}

void write_code_file(const Code& code, Meta meta, const std::string& out) {
    if (out.empty()) {
        std::cout << code_to_json(code, meta);
    } else {
        save_code(code, meta, out);
    }
}

}  // namespace

int main(int argc, char** argv) {
    if (const char* threads = std::getenv("ZCODES_THREADS")) {
        int k = std::atoi(threads);
#ifdef _OPENMP
        if (k > 0) omp_set_num_threads(k);
#else
        (void)k;
#endif
    }

    CLI::App app{"Constructions, certificates, bounds, capacity curves, coverings and "
                 "channel simulations for codes with one-sided errors"};
    app.require_subcommand(1);

    // ---- construct
    auto* construct = app.add_subcommand("construct", "Build a code and write it out");
    construct->require_subcommand(1);

    std::uint32_t m = 2;
    std::string w_str = "1/2";
    int L = 2;
    bool with_radius = false;
    std::string out_path;

    auto* balanced = construct->add_subcommand("balanced", "All balanced columns");
    balanced->add_option("--m", m, "Column weight")->required();
    balanced->add_option("--w", w_str, "Row weight fraction (rational)");
    balanced->add_option("--L", L, "List size for the recorded radius");
    balanced->add_flag("--with-radius", with_radius, "Record the exact radius in meta");
    balanced->add_option("--out", out_path, "Output file (stdout when omitted)");

    int j_offset = 0;
    auto* block = construct->add_subcommand("block", "Unique-decoding block");
    block->add_option("--m", m, "Half the number of rows")->required();
    block->add_option("--j", j_offset, "Column weight offset (weight m-j)")->required();
    block->add_option("--out", out_path, "Output file (stdout when omitted)");

    std::string mode_str = "unique", offsets_str = "0", repl_str;
    std::uint64_t seed = 0;
    auto* stacked = construct->add_subcommand("stacked", "Stack replicated blocks");
    stacked->add_option("--m", m, "Block parameter")->required();
    stacked->add_option("--mode", mode_str, "unique|list")
        ->check(CLI::IsMember({"unique", "list"}));
    stacked->add_option("--L", L, "List size (list mode)");
    stacked->add_option("--j-offsets", offsets_str, "Comma-separated offsets");
    stacked->add_option("--replication", repl_str, "Comma-separated per-block counts");
    stacked->add_option("--seed", seed, "Column shuffle seed");
    stacked->add_option("--out", out_path, "Output file (stdout when omitted)");

    // ---- certify
    std::string in_path, tau_str;
    bool serial = false;
    auto* certify = app.add_subcommand("certify", "Exact list-decoding radius");
    certify->add_option("--in", in_path, "Code file")->required();
    certify->add_option("--L", L, "List size")->required();
    certify->add_option("--tau", tau_str, "Radius fraction to test (rational)");
    certify->add_flag("--serial", serial, "Use the serial reference scan");
    certify->add_option("--out", out_path, "Report file (stdout when omitted)");

    // ---- sweep-bounds
    std::string eps_grid, format = "csv";
    double delta = -1;
    std::uint32_t n_flag = 0, t_flag = 0;
    auto* sweepb = app.add_subcommand("sweep-bounds", "Size bounds across an eps grid");
    sweepb->add_option("--L", L, "List size")->required();
    sweepb->add_option("--w", w_str, "Weight fraction (rational)");
    sweepb->add_option("--eps", eps_grid, "Grid: 'a,b,c' or 'start:stop:step'")->required();
    sweepb->add_option("--tau", tau_str, "Radius fraction for the ratio bound");
    sweepb->add_option("--delta", delta, "Weight slack for the ratio bound");
    sweepb->add_option("--n", n_flag, "Length for the finite-length bounds");
    sweepb->add_option("--t", t_flag, "Radius for the finite-length bounds");
    sweepb->add_option("--format", format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    sweepb->add_option("--out", out_path, "Output file (stdout when omitted)");

    // ---- sweep-capacity
    std::string tau_grid, w_grid;
    int grid = 200;
    auto* sweepc = app.add_subcommand("sweep-capacity", "Rate curves over a (w,tau) grid");
    sweepc->add_option("--L", L, "List size")->required();
    sweepc->add_option("--w", w_grid, "Weight grid")->required();
    sweepc->add_option("--tau", tau_grid, "Radius fraction grid")->required();
    sweepc->add_option("--grid", grid, "Search grid for the upper curve");
    sweepc->add_option("--format", format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    sweepc->add_option("--out", out_path, "Output file (stdout when omitted)");

    // ---- cover
    std::uint32_t cover_n = 0;
    std::string v_str = "1/2", a_str = "1/4", report_path;
    double cover_eps = 0.5;
    bool no_verify = false;
    auto* cover = app.add_subcommand("cover", "Sample and verify a covering design");
    cover->add_option("--n", cover_n, "Length")->required();
    cover->add_option("--w", w_str, "Target weight fraction (rational)");
    cover->add_option("--v", v_str, "Center weight fraction (rational)");
    cover->add_option("--a", a_str, "Overlap fraction (rational)");
    cover->add_option("--eps", cover_eps, "Rate slack above the information bound");
    cover->add_option("--seed", seed, "Sampling seed");
    cover->add_flag("--no-verify", no_verify, "Skip the exhaustive check");
    cover->add_flag("--serial", serial, "Use the serial verifier");
    cover->add_option("--out", out_path, "Write the centers as a code file");
    cover->add_option("--report", report_path, "Report file (stdout when omitted)");

    // ---- simulate
    std::uint32_t trials = 10000;
    std::string strategy = "greedy";
    auto* simulate = app.add_subcommand("simulate", "Adversarial channel campaign");
    simulate->add_option("--in", in_path, "Code file")->required();
    simulate->add_option("--L", L, "List size the decoder is held to")->required();
    simulate->add_option("--tau", tau_str, "Erasure fraction (rational)")->required();
    simulate->add_option("--trials", trials, "Number of transmissions");
    simulate->add_option("--seed", seed, "Campaign seed");
    simulate->add_option("--strategy", strategy, "greedy|random|stochastic")
        ->check(CLI::IsMember({"greedy", "random", "stochastic"}));
    simulate->add_option("--out", out_path, "Report file (stdout when omitted)");

    try {
        app.parse(argc, argv);

        if (balanced->parsed()) {
            BalancedParams p{m, parse_ratio(w_str)};
            BalancedInfo info = balanced_info(p);
            Code code = balanced_code(p);
            Meta meta{{"kind", "balanced"},
                      {"m", std::to_string(m)},
                      {"w", ratio_to_string(p.w)},
                      {"rows", std::to_string(info.rows)},
                      {"columns", std::to_string(info.columns)},
                      {"row_weight", std::to_string(info.row_weight)}};
            if (with_radius) {
                meta["L"] = std::to_string(L);
                meta["radius"] = ratio_to_string(balanced_radius_formula(p, L));
            }
            write_code_file(code, std::move(meta), out_path);
            return 0;
        }
        if (block->parsed()) {
            Code code = unique_block_code(m, j_offset);
            Meta meta{{"kind", "block"},
                      {"m", std::to_string(m)},
                      {"j", std::to_string(j_offset)},
                      {"pairwise_delta", block_pairwise_delta(m, j_offset).str()},
                      {"tau", ratio_to_string(block_tau(m, j_offset).from_delta)}};
            write_code_file(code, std::move(meta), out_path);
            return 0;
        }
        if (stacked->parsed()) {
            StackedParams p;
            p.m = m;
            p.mode = mode_str == "list" ? StackedMode::list_blocks
                                        : StackedMode::unique_blocks;
            p.L = L;
            p.j_offsets = parse_int_list<int>(offsets_str);
            if (!repl_str.empty()) p.replication = parse_int_list<std::uint64_t>(repl_str);
            p.seed = seed;
            StackedCode sc = stacked_code(p);
            std::string offsets_meta, repl_meta;
            for (const StackedBlock& b : sc.blocks) {
                if (!offsets_meta.empty()) offsets_meta += ",";
                offsets_meta += std::to_string(b.j);
                if (!repl_meta.empty()) repl_meta += ",";
                repl_meta += std::to_string(b.replication);
            }
            Meta meta{{"kind", "stacked"},
                      {"m", std::to_string(m)},
                      {"mode", mode_str},
                      {"L", std::to_string(L)},
                      {"j_offsets", offsets_meta},
                      {"replication", repl_meta},
                      {"seed", std::to_string(seed)},
                      {"total_length", std::to_string(sc.total_length)}};
            write_code_file(sc.code, std::move(meta), out_path);
            return 0;
        }
        if (certify->parsed()) {
            return cmd_certify(in_path, L, tau_str, serial, out_path);
        }
        if (sweepb->parsed()) {
            return cmd_sweep_bounds(L, w_str, eps_grid, tau_str,
                                    delta >= 0 ? std::optional<double>(delta) : std::nullopt,
                                    sweepb->count("--n") ? std::optional<std::uint32_t>(n_flag)
                                                         : std::nullopt,
                                    sweepb->count("--t") ? std::optional<std::uint32_t>(t_flag)
                                                         : std::nullopt,
                                    format, out_path);
        }
        if (sweepc->parsed()) {
            return cmd_sweep_capacity(L, w_grid, tau_grid, grid, format, out_path);
        }
        if (cover->parsed()) {
            return cmd_cover(cover_n, w_str, v_str, a_str, cover_eps, seed, !no_verify,
                             serial, out_path, report_path);
        }
        if (simulate->parsed()) {
            return cmd_simulate(in_path, L, tau_str, trials, seed, strategy, out_path);
        }
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
