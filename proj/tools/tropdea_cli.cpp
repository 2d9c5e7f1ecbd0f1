#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "tropdea/hulls.hpp"
#include "tropdea/report.hpp"

namespace {

using namespace tropdea;

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitNumerical = 3;

struct CommonOpts {
    std::string data = "paper-example";
    int inputs = 0;
    int outputs = 0;
    std::string format = "json";
    std::string out;
    int round_digits = -1;
    uint64_t seed = 42;
};

Dataset load_dataset(const CommonOpts& c) {
    if (c.data == "paper-example") return builtin_example();
    if (c.inputs < 1 || c.outputs < 1)
        throw std::invalid_argument("--inputs and --outputs are required for file datasets");
    std::ifstream in(c.data, std::ios::binary);
    if (!in) throw data_error("cannot open '" + c.data + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_csv(buf.str(), c.inputs, c.outputs);
}

void write_output(const CommonOpts& c, const std::string& text) {
    if (c.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(c.out, std::ios::binary);
    if (!out) throw data_error("cannot write '" + c.out + "'");
    out << text;
}

Orientation parse_orientation(const std::string& s) {
    if (s == "in") return Orientation::Input;
    if (s == "out") return Orientation::Output;
    throw std::invalid_argument("--orientation must be 'in' or 'out'");
}

std::vector<double> parse_alpha_list(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        Alpha a = Alpha::parse(item);
        if (!a.is_finite()) throw std::invalid_argument("--alphas entries must be finite");
        out.push_back(a.value());
    }
    if (out.empty()) throw std::invalid_argument("--alphas is empty");
    return out;
}

void add_common(CLI::App* cmd, CommonOpts& c, bool with_data = true) {
    if (with_data) {
        cmd->add_option("--data", c.data, "dataset CSV path or 'paper-example'");
        cmd->add_option("--inputs", c.inputs, "number of input columns (file datasets)");
        cmd->add_option("--outputs", c.outputs, "number of output columns (file datasets)");
    }
    cmd->add_option("--format", c.format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", c.out, "output path (default: stdout)");
    cmd->add_option("--round", c.round_digits, "significant digits for display");
    cmd->add_option("--seed", c.seed, "random seed");
}

int run(int argc, char** argv) {
    CLI::App app{"technical-efficiency scoring under quantized and tropical technologies"};
    app.require_subcommand(1);

    // score
    auto* score = app.add_subcommand("score", "score every firm under one technology");
    CommonOpts sc;
    std::string sc_tech, sc_orient;
    add_common(score, sc);
    score->add_option("--tech", sc_tech, "technology spec")->required();
    score->add_option("--orientation", sc_orient, "in|out")->required();

    // sweep
    auto* sweep = app.add_subcommand("sweep", "score over an alpha grid with the tropical limit");
    CommonOpts swc;
    std::string sw_tech, sw_orient, sw_alphas, sw_target;
    add_common(sweep, swc);
    sweep->add_option("--tech", sw_tech, "quant-vrs | quant-crs")->required();
    sweep->add_option("--orientation", sw_orient, "in|out")->required();
    sweep->add_option("--alphas", sw_alphas, "comma-separated finite alphas (>= 2)")->required();
    sweep->add_option("--target", sw_target, "+inf|-inf")->required();

    // hulls
    auto* hulls_cmd = app.add_subcommand("hulls", "sampled Hausdorff gaps to the tropical hull");
    CommonOpts hc;
    std::string h_alphas, h_target = "+inf", h_points;
    int h_samples = 500;
    add_common(hulls_cmd, hc, /*with_data=*/false);
    hulls_cmd->add_option("--alphas", h_alphas, "comma-separated finite alphas")->required();
    hulls_cmd->add_option("--target", h_target, "+inf|-inf");
    hulls_cmd->add_option("--samples", h_samples, "samples per hull");
    hulls_cmd->add_option("--points", h_points, "CSV of generator points (default: built-in set)");

    // duality
    auto* dual = app.add_subcommand("duality", "weak/strong duality report");
    CommonOpts dc;
    std::string d_tech, d_orient;
    int d_firm = 0;
    int d_trials = 1000;
    add_common(dual, dc);
    dual->add_option("--tech", d_tech, "quant-vrs:<alpha> | quant-crs:<alpha> (finite)")->required();
    dual->add_option("--orientation", d_orient, "in|out")->required();
    dual->add_option("--firm", d_firm, "1-based firm index (default: all firms)");
    dual->add_option("--trials", d_trials, "sampled price vectors per firm");

    // reproduce
    auto* repro = app.add_subcommand("reproduce", "recompute the built-in reference score table");
    CommonOpts rc;
    rc.format = "text";
    repro->add_option("--format", rc.format, "text|json")->check(CLI::IsMember({"text", "json"}));
    repro->add_option("--out", rc.out, "output path (default: stdout)");

    // oracle-verify
    auto* overify = app.add_subcommand("oracle-verify", "run the randomized verification battery");
    CommonOpts oc;
    overify->add_option("--seed", oc.seed, "battery seed");
    overify->add_option("--out", oc.out, "output path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    if (score->parsed()) {
        Dataset ds = load_dataset(sc);
        TechSpec tech = TechSpec::parse(sc_tech);
        Orientation o = parse_orientation(sc_orient);
        std::vector<ScoreRecord> recs = score_all(ds, tech, o);
        std::string text = sc.format == "csv"
                               ? score_report_csv(sc.data, tech, o, recs, sc.round_digits)
                               : score_report_json(sc.data, tech, o, recs, sc.round_digits);
        write_output(sc, text);
        if (!audit_scores(ds, recs))
            throw numerical_error("post-write audit failed: a benchmark is infeasible");
        return 0;
    }
    if (sweep->parsed()) {
        Dataset ds = load_dataset(swc);
        Orientation o = parse_orientation(sw_orient);
        Family family;
        if (sw_tech == "quant-vrs")
            family = Family::QuantizedVRS;
        else if (sw_tech == "quant-crs")
            family = Family::QuantizedCRS;
        else
            throw std::invalid_argument("sweep --tech must be quant-vrs or quant-crs");
        std::vector<double> alphas = parse_alpha_list(sw_alphas);
        Alpha target = Alpha::parse(sw_target);
        SweepResult r = run_sweep(ds, family, alphas, target, o);
        std::string text = swc.format == "csv"
                               ? sweep_report_csv(r, swc.round_digits)
                               : sweep_report_json(swc.data, family, o, r, swc.round_digits);
        write_output(swc, text);
        return 0;
    }
    if (hulls_cmd->parsed()) {
        std::vector<RVec> pts;
        if (h_points.empty()) {
            pts = limit_example_points();
        } else {
            std::ifstream in(h_points, std::ios::binary);
            if (!in) throw data_error("cannot open '" + h_points + "'");
            std::string line;
            int row = 0;
            while (std::getline(in, line)) {
                ++row;
                if (line.empty()) continue;
                RVec p;
                std::stringstream ss(line);
                std::string item;
                while (std::getline(ss, item, ',')) {
                    try {
                        p.push_back(std::stod(item));
                    } catch (const std::exception&) {
                        throw data_error("bad coordinate '" + item + "'", row);
                    }
                }
                if (!pts.empty() && p.size() != pts.front().size())
                    throw data_error("inconsistent point dimension", row);
                pts.push_back(std::move(p));
            }
            if (pts.empty()) throw data_error("no points in '" + h_points + "'");
        }
        std::vector<double> alphas = parse_alpha_list(h_alphas);
        Alpha target = Alpha::parse(h_target);
        auto gaps = limit_gap(pts, alphas, target, h_samples, hc.seed);
        write_output(hc, hull_gap_csv(gaps));
        return 0;
    }
    if (dual->parsed()) {
        Dataset ds = load_dataset(dc);
        TechSpec tech = TechSpec::parse(d_tech);
        if (!tech.quantized() || !tech.alpha.is_finite())
            throw std::invalid_argument("duality requires a quantized technology with finite alpha");
        Orientation o = parse_orientation(d_orient);
        std::vector<DualityReport> reports;
        if (d_firm > 0) {
            if (d_firm > ds.size()) throw data_error("firm index out of range");
            reports.push_back(duality_check(ds, d_firm - 1, tech, o, d_trials, dc.seed));
        } else {
            for (int k = 0; k < ds.size(); ++k)
                reports.push_back(duality_check(ds, k, tech, o, d_trials, dc.seed));
        }
        write_output(dc, duality_report_json(reports, dc.round_digits));
        return 0;
    }
    if (repro->parsed()) {
        ReproduceReport r = run_reproduce();
        write_output(rc, rc.format == "json" ? reproduce_report_json(r) : reproduce_report_text(r));
        return 0;
    }
    if (overify->parsed()) {
        std::vector<OracleReport> reports = verify_suite(oc.seed);
        write_output(oc, oracle_report_lines(reports));
        for (const OracleReport& r : reports)
            if (!r.pass) return kExitNumerical;
        return 0;
    }
    return kExitUsage;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const tropdea::data_error& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return kExitData;
    } catch (const tropdea::numerical_error& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    }
}
