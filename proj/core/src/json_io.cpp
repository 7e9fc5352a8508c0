#include <gz/json_io.hpp>

namespace gz {

namespace {

Rational rational_from_string(const std::string& s) {
    mpq_class q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
        throw Error(ErrorKind::Schema, "malformed rational literal '" + s + "'");
    if (sgn(mpq_class(q.get_den())) == 0)
        throw Error(ErrorKind::Schema, "rational with zero denominator '" + s + "'");
    q.canonicalize();
    return q;
}

Mode mode_from_string(const std::string& s) {
    if (s == "exact") return Mode::Exact;
    if (s == "float") return Mode::Float;
    throw Error(ErrorKind::Schema, "mode must be 'exact' or 'float'");
}

const char* mode_to_string(Mode m) { return m == Mode::Exact ? "exact" : "float"; }

} // namespace

json scalar_to_json(const Scalar& s) {
    if (s.is_exact())
        return json::array({s.re_q().get_str(), s.im_q().get_str()});
    auto z = s.to_complex();
    return json::array({z.real(), z.imag()});
}

Scalar scalar_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2)
        throw Error(ErrorKind::Schema, "scalar must be a [re, im] pair");
    if (j[0].is_string() && j[1].is_string())
        return Scalar::exact(rational_from_string(j[0].get<std::string>()),
                             rational_from_string(j[1].get<std::string>()));
    if (j[0].is_number() && j[1].is_number())
        return Scalar::flt(j[0].get<double>(), j[1].get<double>());
    throw Error(ErrorKind::Schema, "scalar components must both be strings (exact) or numbers (float)");
}

json mat_to_json(const Mat& m) {
    json entries = json::array();
    for (int r = 0; r < m.size(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.size(); ++c) row.push_back(scalar_to_json(m.at(r, c)));
        entries.push_back(std::move(row));
    }
    return json{{"mode", mode_to_string(m.mode())}, {"n", m.size()}, {"entries", std::move(entries)}};
}

Mat mat_from_json(const json& j) {
    if (!j.is_object() || !j.contains("mode") || !j.contains("n") || !j.contains("entries"))
        throw Error(ErrorKind::Schema, "matrix needs 'mode', 'n' and 'entries'");
    Mode mode = mode_from_string(j["mode"].get<std::string>());
    int n = j["n"].get<int>();
    const json& entries = j["entries"];
    if (!entries.is_array() || int(entries.size()) != n)
        throw Error(ErrorKind::Schema, "matrix entries must be an n x n array");
    std::vector<std::vector<Scalar>> rows;
    rows.reserve(size_t(n));
    for (const auto& row : entries) {
        if (!row.is_array() || int(row.size()) != n)
            throw Error(ErrorKind::Schema, "matrix entries must be an n x n array");
        std::vector<Scalar> r;
        r.reserve(size_t(n));
        for (const auto& e : row) {
            Scalar s = scalar_from_json(e);
            if (s.mode() != mode)
                throw Error(ErrorKind::Schema, "matrix entry mode disagrees with the declared mode");
            r.push_back(std::move(s));
        }
        rows.push_back(std::move(r));
    }
    return Mat::from_rows(mode, rows);
}

json gzspec_to_json(const GZSpec& c, const ToleranceContext& ctx) {
    json levels = json::array();
    for (int i = 1; i <= c.n(); ++i) {
        json lvl;
        json coeffs = json::array();
        for (const auto& co : c.level(i).coeffs()) coeffs.push_back(scalar_to_json(co));
        lvl["coeffs"] = std::move(coeffs);
        if (c.mode() == Mode::Exact) {
            try {
                Spectrum s = c.spectrum_at(i, ctx);
                json roots = json::array();
                for (const auto& e : s.entries())
                    roots.push_back(json{{"value", scalar_to_json(e.root)}, {"mult", e.mult}});
                lvl["roots"] = std::move(roots);
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::NonSplitting) throw;
            }
        }
        levels.push_back(std::move(lvl));
    }
    return json{{"mode", mode_to_string(c.mode())}, {"n", c.n()}, {"levels", std::move(levels)}};
}

GZSpec gzspec_from_json(const json& j, const ToleranceContext& ctx) {
    if (!j.is_object() || !j.contains("levels") || !j["levels"].is_array())
        throw Error(ErrorKind::Schema, "fibre label needs a 'levels' array");
    const json& jlevels = j["levels"];
    std::vector<MonicPoly> levels;
    std::vector<std::optional<Spectrum>> spectra(jlevels.size());

    int i = 0;
    for (const auto& lvl : jlevels) {
        ++i;
        if (!lvl.is_object() || (!lvl.contains("coeffs") && !lvl.contains("roots")))
            throw Error(ErrorKind::Schema, "each level needs 'coeffs' or 'roots'");
        std::optional<MonicPoly> poly;
        if (lvl.contains("coeffs")) {
            std::vector<Scalar> coeffs;
            for (const auto& e : lvl["coeffs"]) coeffs.push_back(scalar_from_json(e));
            if (coeffs.empty())
                throw Error(ErrorKind::Schema, "level coefficients must be nonempty");
            poly = MonicPoly(coeffs.front().mode(), std::move(coeffs));
        }
        if (lvl.contains("roots")) {
            std::vector<SpectrumEntry> entries;
            for (const auto& e : lvl["roots"]) {
                if (!e.is_object() || !e.contains("value") || !e.contains("mult"))
                    throw Error(ErrorKind::Schema, "roots entries need 'value' and 'mult'");
                entries.push_back({scalar_from_json(e["value"]), e["mult"].get<int>()});
            }
            Spectrum s = Spectrum::make(std::move(entries), ctx);
            if (poly) {
                MonicPoly from_roots = poly_from_spectrum(s);
                bool consistent = poly->mode() == Mode::Exact
                    ? *poly == from_roots
                    : std::equal(poly->coeffs().begin(), poly->coeffs().end(),
                                 from_roots.coeffs().begin(),
                                 [&](const Scalar& a, const Scalar& b) {
                                     return tol_eq(a, b, ctx, poly->scale());
                                 });
                if (!consistent)
                    throw Error(ErrorKind::Schema,
                                "level " + std::to_string(i) + " roots disagree with coefficients");
            } else {
                poly = poly_from_spectrum(s);
            }
            spectra[size_t(i - 1)] = std::move(s);
        }
        levels.push_back(std::move(*poly));
    }

    GZSpec spec(std::move(levels));
    if (j.contains("mode") && mode_from_string(j["mode"].get<std::string>()) != spec.mode())
        throw Error(ErrorKind::Schema, "declared mode disagrees with scalar payloads");
    for (int k = 1; k <= spec.n(); ++k)
        if (spectra[size_t(k - 1)]) spec.cache_roots(k, std::move(*spectra[size_t(k - 1)]));
    return spec;
}

json solution_point_to_json(const SolutionPoint& p) {
    json blocks = json::array();
    for (const auto& b : p.blocks) {
        json z = json::array(), y = json::array();
        for (const auto& v : b.z) z.push_back(scalar_to_json(v));
        for (const auto& v : b.y) y.push_back(scalar_to_json(v));
        blocks.push_back(json{{"lambda", scalar_to_json(b.lambda)},
                              {"mult", b.mult},
                              {"z", std::move(z)},
                              {"y", std::move(y)}});
    }
    return json{{"level", p.level}, {"blocks", std::move(blocks)}, {"w", scalar_to_json(p.w)}};
}

SolutionPoint solution_point_from_json(const json& j) {
    if (!j.is_object() || !j.contains("level") || !j.contains("blocks") || !j.contains("w"))
        throw Error(ErrorKind::Schema, "solution point needs 'level', 'blocks' and 'w'");
    SolutionPoint p;
    p.level = j["level"].get<int>();
    p.w = scalar_from_json(j["w"]);
    for (const auto& b : j["blocks"]) {
        SolutionBlock blk;
        blk.lambda = scalar_from_json(b.at("lambda"));
        blk.mult = b.at("mult").get<int>();
        for (const auto& e : b.at("z")) blk.z.push_back(scalar_from_json(e));
        for (const auto& e : b.at("y")) blk.y.push_back(scalar_from_json(e));
        p.blocks.push_back(std::move(blk));
    }
    p.validate();
    return p;
}

json choice_vector_to_json(const ChoiceVector& v) {
    json levels = json::array();
    for (const auto& lvl : v.levels) {
        json jl = json::array();
        for (const auto& e : lvl)
            jl.push_back(json{{"root", scalar_to_json(e.root)},
                              {"choice", e.choice == UL::Upper ? "U" : "L"}});
        levels.push_back(std::move(jl));
    }
    return json{{"levels", std::move(levels)}};
}

ChoiceVector choice_vector_from_json(const json& j) {
    if (!j.is_object() || !j.contains("levels") || !j["levels"].is_array())
        throw Error(ErrorKind::Schema, "choice vector needs a 'levels' array");
    ChoiceVector v;
    for (const auto& lvl : j["levels"]) {
        std::vector<ChoiceEntry> entries;
        for (const auto& e : lvl) {
            std::string c = e.at("choice").get<std::string>();
            if (c != "U" && c != "L")
                throw Error(ErrorKind::Schema, "choice must be 'U' or 'L'");
            entries.push_back({scalar_from_json(e.at("root")), c == "U" ? UL::Upper : UL::Lower});
        }
        v.levels.push_back(std::move(entries));
    }
    return v;
}

json sreg_report_to_json(const SregReport& r) {
    return json{{"strongly_regular", r.strongly_regular()},
                {"via_differentials", r.via_differentials},
                {"via_centralizers", r.via_centralizers},
                {"cutoff_regular", r.cutoff_regular},
                {"intersection_dims", r.intersection_dims},
                {"tangent_dim", r.tangent_dim}};
}

json stabilizer_to_json(const StabilizerPattern& p) {
    json blocks = json::array();
    for (const auto& b : p.blocks) {
        const char* kind = b.kind == StabilizerBlock::Kind::Full ? "full"
            : b.kind == StabilizerBlock::Kind::Unipotent          ? "unipotent"
                                                                  : "trivial";
        blocks.push_back(json{{"kind", kind}, {"dim", b.dim}});
    }
    return json{{"blocks", std::move(blocks)},
                {"total_dim", p.total_dim},
                {"free", p.total_dim == 0}};
}

json fiber_class_to_json(const FiberClass& fc) {
    const char* tag = fc.tag == FiberClass::Tag::Omega ? "omega"
        : fc.tag == FiberClass::Tag::ThetaOnly          ? "theta-only"
                                                        : "degenerate";
    return json{{"j", fc.j}, {"class", tag}};
}

json permutation_to_json(const Permutation& p) {
    return json(p.one_line());
}

} // namespace gz
