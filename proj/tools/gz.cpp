#include <gz/flows.hpp>
#include <gz/json_io.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using gz::json;

struct CommonOpts {
    std::string mode;
    gz::ToleranceContext ctx;
    bool verify = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--mode", opts.mode, "Require this arithmetic mode (exact|float)")
        ->check(CLI::IsMember({"exact", "float"}));
    cmd->add_option("--eps-rank", opts.ctx.eps_rank, "Relative singular-value cutoff for rank decisions");
    cmd->add_option("--eps-root", opts.ctx.eps_root, "Root-clustering radius");
    cmd->add_option("--eps-eq", opts.ctx.eps_eq, "Residual comparison threshold");
    cmd->add_flag("--verify", opts.verify, "Embed a 'checks' block with contract verifications");
}

void check_mode(const CommonOpts& opts, gz::Mode actual, const std::string& what) {
    if (opts.mode.empty()) return;
    gz::Mode want = opts.mode == "exact" ? gz::Mode::Exact : gz::Mode::Float;
    if (want != actual)
        throw gz::Error(gz::ErrorKind::Schema, what + " is not in the requested --mode " + opts.mode);
}

json read_json_file(const std::string& path) {
    std::istream* in = &std::cin;
    std::ifstream file;
    if (path != "-") {
        file.open(path);
        if (!file)
            throw gz::Error(gz::ErrorKind::Schema, "cannot open '" + path + "'");
        in = &file;
    }
    json j;
    try {
        *in >> j;
    } catch (const std::exception& e) {
        throw gz::Error(gz::ErrorKind::Schema, std::string("malformed JSON: ") + e.what());
    }
    return j;
}

json read_json_inline_or_file(const std::string& arg) {
    if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) {
        try {
            return json::parse(arg);
        } catch (const std::exception& e) {
            throw gz::Error(gz::ErrorKind::Schema, std::string("malformed inline JSON: ") + e.what());
        }
    }
    return read_json_file(arg);
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

gz::Scalar parse_time(const std::string& re, const std::string& im, gz::Mode mode) {
    if (mode == gz::Mode::Float) {
        try {
            return gz::Scalar::flt(std::stod(re), im.empty() ? 0.0 : std::stod(im));
        } catch (const std::exception&) {
            throw gz::Error(gz::ErrorKind::Schema, "malformed float flow time");
        }
    }
    auto rational = [](const std::string& s) {
        mpq_class q;
        if (s.empty()) return mpq_class(0);
        if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
            throw gz::Error(gz::ErrorKind::Schema, "malformed rational flow time '" + s + "'");
        q.canonicalize();
        return q;
    };
    return gz::Scalar::exact(rational(re), rational(im));
}

std::vector<gz::FlowStep> parse_steps(const std::vector<std::string>& raw, gz::Mode mode) {
    std::vector<gz::FlowStep> steps;
    for (const auto& s : raw) {
        std::vector<std::string> parts;
        std::stringstream ss(s);
        std::string tok;
        while (std::getline(ss, tok, ',')) parts.push_back(tok);
        if (parts.size() < 3 || parts.size() > 4)
            throw gz::Error(gz::ErrorKind::Schema, "--step expects i,j,re[,im]");
        gz::FlowStep step;
        try {
            step.level = std::stoi(parts[0]);
            step.power = std::stoi(parts[1]);
        } catch (const std::exception&) {
            throw gz::Error(gz::ErrorKind::Schema, "--step indices must be integers");
        }
        step.time = parse_time(parts[2], parts.size() == 4 ? parts[3] : "", mode);
        steps.push_back(std::move(step));
    }
    return steps;
}

double phi_drift(const gz::GZSpec& a, const gz::GZSpec& b) {
    double drift = 0, scale = 1;
    for (int i = 1; i <= a.n(); ++i) {
        for (int k = 0; k < i; ++k) {
            drift = std::max(drift,
                             std::abs(a.level(i).coeff(k).to_complex() - b.level(i).coeff(k).to_complex()));
            scale = std::max(scale, a.level(i).coeff(k).abs_approx());
        }
    }
    return drift / scale;
}

int run(int argc, char** argv) {
    CLI::App app{"Gelfand-Zeitlin system toolkit"};
    app.require_subcommand(1);

    // phi
    auto* phi_cmd = app.add_subcommand("phi", "Evaluate the cutoff characteristic-polynomial map");
    CommonOpts phi_opts;
    std::string phi_in;
    phi_cmd->add_option("--in", phi_in, "Matrix JSON file")->required();
    add_common(phi_cmd, phi_opts);

    // sreg
    auto* sreg_cmd = app.add_subcommand("sreg", "Strong-regularity report");
    CommonOpts sreg_opts;
    std::string sreg_in;
    sreg_cmd->add_option("--in", sreg_in, "Matrix JSON file")->required();
    add_common(sreg_cmd, sreg_opts);

    // hessenberg
    auto* hess_cmd = app.add_subcommand("hessenberg", "Unique Hessenberg matrix in a fibre");
    CommonOpts hess_opts;
    std::string hess_spec;
    hess_cmd->add_option("--spec", hess_spec, "Fibre label JSON file")->required();
    add_common(hess_cmd, hess_opts);

    // flow
    auto* flow_cmd = app.add_subcommand("flow", "Apply a word of commuting flows");
    CommonOpts flow_opts;
    std::string flow_in;
    std::vector<std::string> flow_steps;
    flow_cmd->add_option("--in", flow_in, "Matrix JSON file")->required();
    flow_cmd->add_option("--step", flow_steps, "Flow step i,j,re[,im] (repeatable)")->required();
    add_common(flow_cmd, flow_opts);

    // xi
    auto* xi_cmd = app.add_subcommand("xi", "Solve the level-i solution variety");
    CommonOpts xi_opts;
    std::string xi_spec, xi_choice;
    int xi_level = 1;
    xi_cmd->add_option("--spec", xi_spec, "Fibre label JSON file")->required();
    xi_cmd->add_option("--level", xi_level, "Level i (uses levels i and i+1)")->required();
    xi_cmd->add_option("--choice", xi_choice, "Choice JSON (inline or file)");
    add_common(xi_cmd, xi_opts);

    // orbit-count
    auto* count_cmd = app.add_subcommand("orbit-count", "Count the A-orbits in a fibre");
    CommonOpts count_opts;
    std::string count_spec;
    count_cmd->add_option("--spec", count_spec, "Fibre label JSON file")->required();
    add_common(count_cmd, count_opts);

    // orbit-reps
    auto* reps_cmd = app.add_subcommand("orbit-reps", "Enumerate orbit representatives");
    CommonOpts reps_opts;
    std::string reps_spec;
    reps_cmd->add_option("--spec", reps_spec, "Fibre label JSON file")->required();
    add_common(reps_cmd, reps_opts);

    // classify
    auto* cls_cmd = app.add_subcommand("classify", "Orbit invariant of a strongly regular matrix");
    CommonOpts cls_opts;
    std::string cls_in;
    cls_cmd->add_option("--in", cls_in, "Matrix JSON file")->required();
    add_common(cls_cmd, cls_opts);

    // nilfibre
    auto* nil_cmd = app.add_subcommand("nilfibre", "Nilfibre orbit patterns and permutations");
    CommonOpts nil_opts;
    int nil_n = 0;
    nil_cmd->add_option("--n", nil_n, "Matrix size n")->required()->check(CLI::PositiveNumber);
    add_common(nil_cmd, nil_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2; // usage errors exit 2
    }

    if (phi_cmd->parsed()) {
        phi_opts.ctx.validate();
        gz::Mat x = gz::mat_from_json(read_json_file(phi_in));
        check_mode(phi_opts, x.mode(), "input matrix");
        gz::GZSpec c = gz::phi(x);
        json out = gz::gzspec_to_json(c, phi_opts.ctx);
        if (phi_opts.verify) {
            gz::Mat h = gz::hessenberg_from_spec(c, phi_opts.ctx);
            out["checks"] = json{{"hessenberg_round_trip_drift", phi_drift(gz::phi(h), c)}};
        }
        emit(out);
        return 0;
    }

    if (sreg_cmd->parsed()) {
        sreg_opts.ctx.validate();
        gz::Mat x = gz::mat_from_json(read_json_file(sreg_in));
        check_mode(sreg_opts, x.mode(), "input matrix");
        emit(gz::sreg_report_to_json(gz::sreg_report(x, sreg_opts.ctx)));
        return 0;
    }

    if (hess_cmd->parsed()) {
        hess_opts.ctx.validate();
        gz::GZSpec c = gz::gzspec_from_json(read_json_file(hess_spec), hess_opts.ctx);
        check_mode(hess_opts, c.mode(), "fibre label");
        gz::Mat h = gz::hessenberg_from_spec(c, hess_opts.ctx);
        json out = gz::mat_to_json(h);
        if (hess_opts.verify) {
            out["checks"] = json{{"phi_round_trip_drift", phi_drift(gz::phi(h), c)},
                                 {"is_hessenberg", gz::is_hessenberg(h, hess_opts.ctx)},
                                 {"strongly_regular",
                                  gz::sreg_report(h, hess_opts.ctx).strongly_regular()}};
        }
        emit(out);
        return 0;
    }

    if (flow_cmd->parsed()) {
        flow_opts.ctx.validate();
        gz::Mat x = gz::mat_from_json(read_json_file(flow_in));
        check_mode(flow_opts, x.mode(), "input matrix");
        auto steps = parse_steps(flow_steps, x.mode());
        gz::Mat y = gz::flow_word(x, steps, flow_opts.ctx);
        json out = gz::mat_to_json(y);
        if (flow_opts.verify) {
            double drift = phi_drift(gz::phi(y), gz::phi(x));
            double comm = 0;
            if (steps.size() >= 2) {
                std::vector<gz::FlowStep> rev(steps.rbegin(), steps.rend());
                gz::Mat y2 = gz::flow_word(x, rev, flow_opts.ctx);
                for (int r = 0; r < y.size(); ++r)
                    for (int c = 0; c < y.size(); ++c)
                        comm = std::max(comm,
                                        std::abs(y.at(r, c).to_complex() - y2.at(r, c).to_complex()));
                comm /= std::max(1.0, y.scale());
            }
            out["checks"] = json{{"phi_drift", drift}, {"commutativity_residual", comm}};
        }
        emit(out);
        return 0;
    }

    if (xi_cmd->parsed()) {
        xi_opts.ctx.validate();
        gz::GZSpec c = gz::gzspec_from_json(read_json_file(xi_spec), xi_opts.ctx);
        check_mode(xi_opts, c.mode(), "fibre label");
        if (xi_level < 1 || xi_level > c.n() - 1)
            throw gz::Error(gz::ErrorKind::Index, "--level must lie in [1, n-1]");
        gz::BlockChoice choice;
        if (!xi_choice.empty()) {
            json jc = read_json_inline_or_file(xi_choice);
            if (jc.is_object() && jc.contains("levels")) {
                gz::ChoiceVector v = gz::choice_vector_from_json(jc);
                if (int(v.levels.size()) >= xi_level)
                    for (const auto& e : v.levels[size_t(xi_level - 1)])
                        choice.entries.push_back({e.root, e.choice});
            } else if (jc.is_array()) {
                for (const auto& e : jc) {
                    std::string ch = e.at("choice").get<std::string>();
                    if (ch != "U" && ch != "L")
                        throw gz::Error(gz::ErrorKind::Schema, "choice must be 'U' or 'L'");
                    choice.entries.push_back(
                        {gz::scalar_from_json(e.at("root")), ch == "U" ? gz::UL::Upper : gz::UL::Lower});
                }
            } else {
                throw gz::Error(gz::ErrorKind::Schema, "--choice must be a choice vector or entry array");
            }
        }
        gz::SolutionPoint p = gz::xi_solve(c.spectrum_at(xi_level, xi_opts.ctx), c.level(xi_level + 1),
                                           choice, {}, xi_opts.ctx);
        gz::StabilizerPattern stab = gz::stabilizer_pattern(p, xi_opts.ctx);
        json out = gz::solution_point_to_json(p);
        out["stabilizer"] = gz::stabilizer_to_json(stab);
        if (xi_opts.verify) {
            gz::MonicPoly direct = gz::charpoly(gz::assemble(p));
            gz::MonicPoly closed = gz::xi_charpoly(p);
            const gz::MonicPoly& target = c.level(xi_level + 1);
            double resid = 0;
            for (int k = 0; k < target.degree(); ++k) {
                resid = std::max(resid,
                                 std::abs(direct.coeff(k).to_complex() - target.coeff(k).to_complex()));
                resid = std::max(resid,
                                 std::abs(closed.coeff(k).to_complex() - target.coeff(k).to_complex()));
            }
            out["checks"] = json{{"charpoly_residual", resid / target.scale()}};
        }
        emit(out);
        return 0;
    }

    if (count_cmd->parsed()) {
        count_opts.ctx.validate();
        gz::GZSpec c = gz::gzspec_from_json(read_json_file(count_spec), count_opts.ctx);
        check_mode(count_opts, c.mode(), "fibre label");
        gz::FiberClass fc = gz::fiber_class(c, count_opts.ctx);
        mpz_class count = gz::orbit_count(c, count_opts.ctx);
        json out;
        if (count.fits_ulong_p())
            out["count"] = count.get_ui();
        else
            out["count"] = count.get_str();
        out["j"] = fc.j;
        out["class"] = gz::fiber_class_to_json(fc)["class"];
        emit(out);
        return 0;
    }

    if (reps_cmd->parsed()) {
        reps_opts.ctx.validate();
        gz::GZSpec c = gz::gzspec_from_json(read_json_file(reps_spec), reps_opts.ctx);
        check_mode(reps_opts, c.mode(), "fibre label");
        auto orbits = gz::enumerate_orbits(c, reps_opts.ctx);
        json jorbits = json::array();
        for (const auto& [v, rep] : orbits) {
            json entry{{"choice", gz::choice_vector_to_json(v)}, {"matrix", gz::mat_to_json(rep)}};
            if (reps_opts.verify) {
                bool phi_ok = phi_drift(gz::phi(rep), c) <=
                              (c.mode() == gz::Mode::Exact ? 0.0 : reps_opts.ctx.eps_eq);
                bool sreg_ok = gz::sreg_report(rep, reps_opts.ctx).strongly_regular();
                bool cls_ok = gz::choice_vectors_equal(gz::classify(rep, reps_opts.ctx), v, reps_opts.ctx);
                entry["checks"] = json{{"phi_matches", phi_ok},
                                       {"strongly_regular", sreg_ok},
                                       {"classify_round_trip", cls_ok}};
            }
            jorbits.push_back(std::move(entry));
        }
        emit(json{{"orbits", std::move(jorbits)}});
        return 0;
    }

    if (cls_cmd->parsed()) {
        cls_opts.ctx.validate();
        gz::Mat x = gz::mat_from_json(read_json_file(cls_in));
        check_mode(cls_opts, x.mode(), "input matrix");
        emit(gz::choice_vector_to_json(gz::classify(x, cls_opts.ctx)));
        return 0;
    }

    if (nil_cmd->parsed()) {
        json jorbits = json::array();
        const long count = nil_n >= 1 ? (1L << (nil_n - 1)) : 0;
        for (long mask = 0; mask < count; ++mask) {
            gz::NilChoice v;
            for (int i = nil_n - 2; i >= 0; --i)
                v.labels.push_back(((mask >> i) & 1) ? gz::UL::Lower : gz::UL::Upper);
            json labels = json::array();
            for (auto l : v.labels) labels.push_back(l == gz::UL::Upper ? "U" : "L");
            json pattern = json::array();
            for (const auto& [r, c] : gz::nil_pattern(v)) pattern.push_back(json::array({r, c}));
            jorbits.push_back(json{{"labels", std::move(labels)},
                                   {"pattern", std::move(pattern)},
                                   {"permutation", gz::permutation_to_json(gz::nil_permutation(v))}});
        }
        emit(json{{"n", nil_n}, {"orbits", std::move(jorbits)}});
        return 0;
    }

    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const gz::Error& e) {
        json err{{"error", {{"kind", gz::error_kind_name(e.kind())}, {"detail", e.detail()}}}};
        std::cout << err.dump(2) << "\n";
        return 1;
    } catch (const std::exception& e) {
        json err{{"error", {{"kind", "internal"}, {"detail", e.what()}}}};
        std::cout << err.dump(2) << "\n";
        return 1;
    }
}
