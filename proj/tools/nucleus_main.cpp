#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "nucleus/report.hpp"

namespace {

using nucleus::GroupSpec;
using nucleus::Options;
using nucleus::Report;

nucleus::ZVec parse_point(const std::string& s) {
    nucleus::ZVec v;
    std::string cur;
    auto flush = [&] {
        if (!cur.empty()) {
            v.emplace_back(cur);
            cur.clear();
        }
    };
    for (char c : s) {
        if (c == ',' || c == ' ') {
            flush();
        } else {
            cur.push_back(c);
        }
    }
    flush();
    if (v.empty()) throw std::invalid_argument("empty point");
    return v;
}

void emit(const Report& rep, const Options& opt) {
    std::string payload = opt.json ? rep.json_text() : rep.text();
    if (opt.out_path.empty()) {
        std::cout << payload;
    } else {
        std::ofstream f(opt.out_path);
        if (!f) throw std::runtime_error("cannot open output file: " + opt.out_path);
        f << payload;
    }
}

int run_one(const std::string& spec_arg, const Options& opt,
            const std::function<Report(const GroupSpec&, const Options&)>& fn) {
    auto t0 = std::chrono::steady_clock::now();
    GroupSpec spec = nucleus::load_group_spec(spec_arg);
    Report rep = fn(spec, opt);
    emit(rep, opt);
    if (opt.verbose) {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        std::cerr << "[" << spec.name << "] " << ms << " ms\n";
    }
    return rep.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"nucleus: singular loci and presentations of torus-normalizer cohomology rings"};
    app.require_subcommand(1);

    Options opt;
    std::string spec_arg, point_arg;

    auto add_common = [&](CLI::App* cmd, bool with_spec = true) {
        if (with_spec)
            cmd->add_option("spec", spec_arg, "preset name or group file")->required();
        cmd->add_option("--char", opt.characteristic, "coefficient characteristic (0 or prime)");
        cmd->add_option("--max-order", opt.max_order, "group closure bound");
        cmd->add_option("--relation-bound", opt.relation_bound, "relation weight bound");
        cmd->add_option("--height-bound", opt.height_bound, "representative search height");
        cmd->add_flag("--json", opt.json, "machine-readable output");
        cmd->add_flag("--verbose", opt.verbose, "audit tables, containment chains, timings");
        cmd->add_option("--out", opt.out_path, "write the report to a file");
    };

    CLI::App* c_nuc = app.add_subcommand("nucleus", "compute the nucleus as linear strata");
    add_common(c_nuc);
    CLI::App* c_pres = app.add_subcommand("presentation",
                                          "generators and relations of the invariant ring");
    add_common(c_pres);
    CLI::App* c_point = app.add_subcommand("check-point", "classify one point both ways");
    add_common(c_point);
    c_point->add_option("--point", point_arg, "comma-separated integer coordinates")->required();
    CLI::App* c_verify = app.add_subcommand("verify", "run the full cross-validation suite");
    add_common(c_verify);

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_nuc->parsed()) return run_one(spec_arg, opt, nucleus::cmd_nucleus);
        if (c_pres->parsed()) return run_one(spec_arg, opt, nucleus::cmd_presentation);
        if (c_point->parsed()) {
            nucleus::ZVec point = parse_point(point_arg);
            return run_one(spec_arg, opt, [&](const GroupSpec& s, const Options& o) {
                return nucleus::cmd_check_point(s, point, o);
            });
        }
        if (c_verify->parsed()) {
            if (spec_arg == "all") {
                int worst = 0;
                for (const std::string& name : nucleus::preset_names()) {
                    int rc = run_one(name, opt, nucleus::cmd_verify);
                    worst = std::max(worst, rc);
                }
                return worst;
            }
            return run_one(spec_arg, opt, nucleus::cmd_verify);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
