#include "steiner/serialize.hpp"

namespace steiner {

json scalar_to_json(const Scalar& s) {
    if (s.field().is_prime_field())
        return s.residue();
    return s.str();
}

json matrix_to_json(const Matrix& m) {
    json entries = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            entries.push_back(scalar_to_json(m.at(r, c)));
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

Matrix matrix_from_json(const json& j, const FieldSpec& f) {
    try {
        std::size_t rows = j.at("rows").get<std::size_t>();
        std::size_t cols = j.at("cols").get<std::size_t>();
        const json& entries = j.at("entries");
        if (!entries.is_array() || entries.size() != rows * cols)
            throw ParseError("matrix entries must hold rows*cols values");
        Matrix m(rows, cols, f);
        std::size_t i = 0;
        for (const json& e : entries) {
            Scalar v = e.is_string() ? Scalar::parse(e.get<std::string>(), f)
                                     : Scalar::integer(e.get<std::int64_t>(), f);
            m.at(i / cols, i % cols) = v;
            ++i;
        }
        return m;
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad matrix JSON: ") + e.what());
    }
}

json steiner_map_to_json(const SteinerMap& sm) {
    json j{{"k", sm.k}, {"n", sm.n}, {"s", sm.s}, {"t", sm.t},
           {"field", sm.field().is_rationals() ? "Q" : "Fp"},
           {"phi", matrix_to_json(sm.phi)}};
    if (sm.field().is_prime_field())
        j["p"] = sm.field().p;
    return j;
}

SteinerMap steiner_map_from_json(const json& j) {
    try {
        int k = j.at("k").get<int>();
        int n = j.at("n").get<int>();
        int s = j.at("s").get<int>();
        int t = j.at("t").get<int>();
        std::string fs = j.at("field").get<std::string>();
        FieldSpec f = FieldSpec::rationals();
        if (fs == "Fp")
            f = FieldSpec::prime_field(j.at("p").get<std::int64_t>());
        else if (fs != "Q")
            throw ParseError("field must be \"Q\" or \"Fp\"");
        Matrix phi = matrix_from_json(j.at("phi"), f);
        return SteinerMap(k, n, s, t, std::move(phi));
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad SteinerMap JSON: ") + e.what());
    } catch (const Error& e) {
        throw ParseError(std::string("SteinerMap schema violation: ") + e.what());
    }
}

json chow_class_to_json(const chow::ChowClass& c) {
    json terms = json::array();
    for (const auto& [lam, coeff] : c.terms()) {
        json part = json::array();
        for (int p : lam.parts())
            part.push_back(p);
        terms.push_back(json{{"partition", std::move(part)}, {"coeff", coeff.get_str()}});
    }
    return terms;
}

chow::ChowClass chow_class_from_json(const json& j, const chow::Grassmannian& g) {
    try {
        chow::ChowClass c(g);
        for (const json& term : j) {
            std::vector<int> parts = term.at("partition").get<std::vector<int>>();
            mpq_class coeff(term.at("coeff").get<std::string>());
            coeff.canonicalize();
            c.add_term(chow::Partition(std::move(parts)), coeff);
        }
        return c;
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad ChowClass JSON: ") + e.what());
    } catch (const Error& e) {
        throw ParseError(std::string("ChowClass schema violation: ") + e.what());
    }
}

json subspace_to_json(const Subspace& s) {
    return json{{"ambient", s.ambient_dim()}, {"dim", s.dim()}, {"basis", matrix_to_json(s.basis())}};
}

json point_to_json(const Subspace& line) {
    json coords = json::array();
    for (std::size_t c = 0; c < line.ambient_dim(); ++c)
        coords.push_back(scalar_to_json(line.basis().at(0, c)));
    return coords;
}

json check_result_to_json(const CheckResult& r) {
    json j{{"valid", r.valid}, {"points_checked", r.points_checked}};
    if (r.witness)
        j["witness"] = subspace_to_json(r.witness->gamma);
    return j;
}

json bounds_to_json(const DimBounds& b) {
    return json{{"lower", b.lower}, {"upper", b.upper}};
}

json trivial_range_to_json(const TrivialRangeReport& r) {
    return json{{"valid", r.valid},
                {"t_reduced", r.t_reduced},
                {"t_expected", r.t_expected},
                {"trivial_count", r.trivial_count},
                {"pass", r.pass}};
}

json prime_jumping_report_to_json(const PrimeJumpingReport& r) {
    json sigma = json::array();
    json fibers = json::array();
    for (const FiberData& fd : r.sigma) {
        sigma.push_back(point_to_json(fd.a));
        fibers.push_back(fd.fiber_dim);
    }
    json hist = json::object();
    for (const auto& [td, cnt] : r.tangent_hist)
        hist[std::to_string(td)] = cnt;
    return json{{"prime", r.prime},
                {"valid", r.valid},
                {"sigma", std::move(sigma)},
                {"fiber_dims", std::move(fibers)},
                {"pairs", r.pair_count.get_si()},
                {"tangent_dims", std::move(hist)},
                {"bounds", bounds_to_json(r.bounds)},
                {"dim_estimate", r.dim_estimate},
                {"maximal", r.maximal}};
}

json maximality_report_to_json(const MaximalityReport& r) {
    json per = json::array();
    for (const PrimeJumpingReport& pr : r.per_prime)
        per.push_back(prime_jumping_report_to_json(pr));
    return json{{"per_prime", std::move(per)}, {"maximal", r.maximal}};
}

json family_report_to_json(const schw::FamilyReport& r) {
    json per = json::array();
    for (const schw::PrimeFamilyReport& pr : r.per_prime) {
        json preds = json::object();
        for (const schw::FamilyPredicate& fp : pr.predicates)
            preds[fp.name] = fp.ok;
        per.push_back(json{{"prime", pr.prime},
                           {"report", prime_jumping_report_to_json(pr.jumps)},
                           {"predicates", std::move(preds)},
                           {"passed", pr.passed}});
    }
    json j{{"family", r.family}, {"k", r.k}, {"n", r.n}, {"s", r.s}, {"t", r.t},
           {"built", r.built_ok},  {"reduced", r.reduced},
           {"per_prime", std::move(per)}, {"passed", r.passed}};
    if (!r.build_error.empty())
        j["build_error"] = r.build_error;
    return j;
}

json parse_json_text(const std::string& text, const std::string& what) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError("malformed JSON in " + what + ": " + e.what());
    }
}

} // namespace steiner
