#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <set>
#include <sstream>

#include "CLI11.hpp"

#include "steiner/serialize.hpp"
#include "steiner/verify.hpp"

namespace steiner::cli {

namespace {

struct OutputOptions {
    bool as_json = false;
    bool timestamps = false;
    std::string output_file;
};

void add_output_flags(CLI::App* cmd, OutputOptions& oo) {
    cmd->add_flag("--json", oo.as_json, "emit a JSON report");
    cmd->add_flag("--timestamps", oo.timestamps, "include a timestamp field in JSON output");
    cmd->add_option("--output", oo.output_file, "write the report to a file instead of stdout");
}

void emit(const OutputOptions& oo, std::ostream& out, json j, const std::string& text) {
    std::ostream* os = &out;
    std::ofstream file;
    if (!oo.output_file.empty()) {
        file.open(oo.output_file);
        if (!file)
            throw Error("cannot open output file " + oo.output_file);
        os = &file;
    }
    if (oo.as_json) {
        if (oo.timestamps)
            j["timestamp"] = static_cast<long>(
                std::chrono::duration_cast<std::chrono::seconds>(
                    std::chrono::system_clock::now().time_since_epoch())
                    .count());
        *os << j.dump(2) << "\n";
    } else {
        *os << text;
    }
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot read input file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json_text(ss.str(), path);
}

SteinerMap load_map(const std::string& path) {
    return steiner_map_from_json(load_json_file(path));
}

std::string class_text(const chow::ChowClass& c) {
    return c.str() + "\n";
}

// Exhaustive for small primes, seeded sampling beyond: the default the
// subcommands use when no explicit mode flags are given.
CheckMode default_mode(std::int64_t prime, bool force_exhaustive, std::int64_t samples,
                       std::uint64_t seed) {
    if (force_exhaustive || (samples == 0 && prime <= 7))
        return ExhaustiveMode{prime};
    if (samples > 0)
        return SampledMode{samples, seed};
    return SampledMode{200, seed};
}

schw::TripleSpec spec_from_flags(const std::string& family, int d, int n, int k, int t,
                                 const std::vector<int>& degrees, std::int64_t prime,
                                 std::uint64_t seed, const std::string& spec_json) {
    if (!spec_json.empty()) {
        json j = parse_json_text(spec_json, "--spec");
        std::string fam = j.at("family").get<std::string>();
        if (fam == "rnc")
            return schw::RncSpec{j.at("d").get<int>(), j.at("n").get<int>()};
        if (fam == "veronese")
            return schw::VeroneseSpec{};
        if (fam == "splitp1")
            return schw::SplitP1Spec{j.at("degrees").get<std::vector<int>>()};
        if (fam == "caseiii") {
            schw::CaseIIISpec sp;
            sp.k = j.at("k").get<int>();
            sp.n = j.at("n").get<int>();
            sp.t = j.at("t").get<int>();
            sp.prime = j.value("prime", 5);
            sp.seed = j.value("seed", 0);
            return sp;
        }
        if (fam == "tangent-twist")
            return schw::TangentTwistSpec{j.at("k").get<int>()};
        throw ParseError("unknown family in --spec: " + fam);
    }
    if (family == "rnc")
        return schw::RncSpec{d, n};
    if (family == "veronese")
        return schw::VeroneseSpec{};
    if (family == "splitp1")
        return schw::SplitP1Spec{degrees};
    if (family == "caseiii") {
        schw::CaseIIISpec sp;
        sp.k = k;
        sp.n = n;
        sp.t = t;
        sp.prime = prime;
        sp.seed = seed;
        return sp;
    }
    if (family == "tangent-twist")
        return schw::TangentTwistSpec{k};
    throw ParseError("unknown family: " + family);
}

std::string sweep_text(const verify::SweepReport& r) {
    std::ostringstream ss;
    ss << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << " (" << r.checked << " checks)\n";
    for (const std::string& f : r.failures)
        ss << "       " << f << "\n";
    return ss.str();
}

json sweep_json(const verify::SweepReport& r) {
    return json{{"name", r.name}, {"passed", r.passed}, {"checked", r.checked},
                {"failures", r.failures}};
}

} // namespace

const std::vector<std::string>& subcommands() {
    static const std::vector<std::string> names = {
        "rank-bound", "porteous", "chow-mul", "check",      "reduce",
        "dualize",    "jumping",  "tangent",  "bounds",     "induce",
        "schw-build", "verify-family", "verify-all"};
    return names;
}

const std::vector<std::pair<std::string, std::string>>& operation_coverage() {
    static const std::vector<std::pair<std::string, std::string>> table = {
        {"rank", "check"},
        {"kernel", "schw-build"},
        {"intersect", "jumping"},
        {"pieri", "chow-mul"},
        {"multiply", "chow-mul"},
        {"porteous_class", "porteous"},
        {"rank_bound", "rank-bound"},
        {"fiber_map", "check"},
        {"check_pk", "check"},
        {"reduce", "reduce"},
        {"dualize", "dualize"},
        {"verify_trivial_range", "verify-all"},
        {"jumping_fiber", "jumping"},
        {"sigma_enumerate", "jumping"},
        {"jumping_enumerate", "jumping"},
        {"sigma_equations", "jumping"},
        {"tangent_dim", "tangent"},
        {"dim_bounds", "bounds"},
        {"induce", "induce"},
        {"maximality_report", "verify-family"},
        {"build_triple", "schw-build"},
        {"to_steiner", "schw-build"},
        {"verify_family", "verify-family"},
    };
    return table;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact computations with Steiner bundles on Grassmannians"};
    app.require_subcommand(1);

    // rank-bound
    int k = 0, n = 1, s = 1, t = 1, d = 1, pair_index = 0, samples = 0;
    std::int64_t prime = 5;
    std::uint64_t seed = 0;
    bool exhaustive = false, equations = false, triple_only = false;
    std::vector<std::int64_t> primes;
    std::vector<int> degrees;
    std::string input, family, spec_json, a_text, b_text;

    OutputOptions oo_rank, oo_port, oo_mul, oo_check, oo_reduce, oo_dual, oo_jump, oo_tan,
        oo_bounds, oo_ind, oo_schw, oo_fam, oo_all;

    CLI::App* c_rank = app.add_subcommand("rank-bound", "closed-form rank floor");
    c_rank->add_option("-k", k)->required();
    c_rank->add_option("-n", n)->required();
    c_rank->add_option("-s", s)->required();
    add_output_flags(c_rank, oo_rank);

    CLI::App* c_port = app.add_subcommand("porteous", "expected degeneracy class");
    c_port->add_option("-k", k)->required();
    c_port->add_option("-n", n)->required();
    c_port->add_option("-s", s)->required();
    c_port->add_option("-t", t)->required();
    add_output_flags(c_port, oo_port);

    CLI::App* c_mul = app.add_subcommand("chow-mul", "product in the Schubert basis");
    c_mul->add_option("-k", k)->required();
    c_mul->add_option("-n", n)->required();
    c_mul->add_option("--a", a_text, "first class as inline JSON")->required();
    c_mul->add_option("--b", b_text, "second class as inline JSON")->required();
    add_output_flags(c_mul, oo_mul);

    std::string field_flag;
    CLI::App* c_check = app.add_subcommand("check", "point-restriction surjectivity check");
    c_check->add_option("--input", input)->required();
    c_check->add_option("--field", field_flag, "Q (seeded sampling) or Fp (with --prime)")
        ->check(CLI::IsMember({"Q", "Fp"}));
    c_check->add_option("--primes,--prime", primes)->delimiter(',');
    c_check->add_flag("--exhaustive", exhaustive);
    c_check->add_option("--samples", samples);
    c_check->add_option("--seed", seed);
    add_output_flags(c_check, oo_check);

    CLI::App* c_red = app.add_subcommand("reduce", "split off the trivial summand");
    c_red->add_option("--input", input)->required();
    add_output_flags(c_red, oo_reduce);

    CLI::App* c_dual = app.add_subcommand("dualize", "swap the two tensor factors");
    c_dual->add_option("--input", input)->required();
    add_output_flags(c_dual, oo_dual);

    CLI::App* c_jump = app.add_subcommand("jumping", "enumerate jumping pairs over F_p");
    c_jump->add_option("--input", input)->required();
    c_jump->add_option("--primes,--prime", primes)->delimiter(',');
    c_jump->add_flag("--equations", equations, "cross-check the determinantal equations");
    add_output_flags(c_jump, oo_jump);

    CLI::App* c_tan = app.add_subcommand("tangent", "tangent dimensions at jumping pairs");
    c_tan->add_option("--input", input)->required();
    c_tan->add_option("--primes,--prime", primes)->delimiter(',');
    add_output_flags(c_tan, oo_tan);

    CLI::App* c_bounds = app.add_subcommand("bounds", "closed-form dimension bounds");
    c_bounds->add_option("--input", input)->required();
    add_output_flags(c_bounds, oo_bounds);

    CLI::App* c_ind = app.add_subcommand("induce", "quotient by a jumping pair");
    c_ind->add_option("--input", input)->required();
    c_ind->add_option("--primes,--prime", primes)->delimiter(',');
    c_ind->add_option("--pair-index", pair_index);
    add_output_flags(c_ind, oo_ind);

    CLI::App* c_schw = app.add_subcommand("schw-build", "build a Schwarzenberger instance");
    c_schw->add_option("--family", family);
    c_schw->add_option("--spec", spec_json, "triple spec as inline JSON");
    c_schw->add_option("--d", d);
    c_schw->add_option("-n", n);
    c_schw->add_option("-k", k);
    c_schw->add_option("-t", t);
    c_schw->add_option("--degrees", degrees)->delimiter(',');
    c_schw->add_option("--prime", prime);
    c_schw->add_option("--seed", seed);
    c_schw->add_flag("--triple-only", triple_only, "emit the triple without converting");
    add_output_flags(c_schw, oo_schw);

    CLI::App* c_fam = app.add_subcommand("verify-family", "structural checks per family");
    c_fam->add_option("--family", family);
    c_fam->add_option("--spec", spec_json);
    c_fam->add_option("--d", d);
    c_fam->add_option("-n", n);
    c_fam->add_option("-k", k);
    c_fam->add_option("-t", t);
    c_fam->add_option("--degrees", degrees)->delimiter(',');
    c_fam->add_option("--primes,--prime", primes)->delimiter(',')->required();
    c_fam->add_option("--seed", seed);
    add_output_flags(c_fam, oo_fam);

    int instances = 100;
    CLI::App* c_all = app.add_subcommand("verify-all", "run every verification batch");
    c_all->add_option("--instances", instances, "seeded batch size (default 100)");
    add_output_flags(c_all, oo_all);

    std::vector<std::string> cli_args(args.begin() + 1, args.end());
    std::reverse(cli_args.begin(), cli_args.end());
    try {
        app.parse(cli_args);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (c_rank->parsed()) {
            long rb = chow::rank_bound(k, n, s);
            emit(oo_rank, out, json{{"k", k}, {"n", n}, {"s", s}, {"rank_bound", rb}},
                 std::to_string(rb) + "\n");
            return 0;
        }
        if (c_port->parsed()) {
            chow::ChowClass c = chow::porteous_class(k, n, s, t);
            long r = static_cast<long>(t) - static_cast<long>(s) * (k + 1);
            emit(oo_port, out,
                 json{{"k", k}, {"n", n}, {"s", s}, {"t", t}, {"r", r},
                      {"class", chow_class_to_json(c)}, {"nonzero", !c.is_zero()}},
                 class_text(c));
            return 0;
        }
        if (c_mul->parsed()) {
            chow::Grassmannian g(k, n);
            chow::ChowClass a = chow_class_from_json(parse_json_text(a_text, "--a"), g);
            chow::ChowClass b = chow_class_from_json(parse_json_text(b_text, "--b"), g);
            chow::ChowClass c = chow::multiply(a, b);
            emit(oo_mul, out, json{{"k", k}, {"n", n}, {"product", chow_class_to_json(c)}},
                 class_text(c));
            return 0;
        }
        if (c_check->parsed()) {
            SteinerMap sm = load_map(input);
            json per = json::array();
            std::string text;
            bool all_valid = true;
            if (field_flag == "Q" || (primes.empty() && sm.field().is_rationals() && !exhaustive)) {
                // Rational falsification: seeded random points over Q.
                if (!sm.field().is_rationals())
                    throw ParseError("--field Q on a prime-field map");
                CheckResult cr = check_pk(sm, SampledMode{samples > 0 ? samples : 200, seed});
                all_valid = cr.valid;
                json j = check_result_to_json(cr);
                j["field"] = "Q";
                per.push_back(std::move(j));
                text += "Q (sampled): " + std::string(cr.valid ? "no violation found" : "invalid") +
                        " (" + std::to_string(cr.points_checked) + " points)\n";
            } else {
                if (primes.empty())
                    primes = {sm.field().is_prime_field() ? sm.field().p : 3};
                for (std::int64_t p : primes) {
                    SteinerMap work = sm.field().is_rationals() ? reduce_mod_p(sm, p) : sm;
                    CheckResult cr = check_pk(work, default_mode(p, exhaustive, samples, seed));
                    all_valid = all_valid && cr.valid;
                    json j = check_result_to_json(cr);
                    j["prime"] = p;
                    per.push_back(std::move(j));
                    text += "p=" + std::to_string(p) + ": " + (cr.valid ? "valid" : "invalid") +
                            " (" + std::to_string(cr.points_checked) + " points)\n";
                }
            }
            emit(oo_check, out, json{{"checks", std::move(per)}, {"valid", all_valid}}, text);
            return all_valid ? 0 : 1;
        }
        if (c_red->parsed()) {
            ReduceResult r = reduce(load_map(input));
            emit(oo_reduce, out,
                 json{{"map", steiner_map_to_json(r.map)}, {"trivial_count", r.trivial_count}},
                 "t' = " + std::to_string(r.map.t) + ", trivial summands = " +
                     std::to_string(r.trivial_count) + "\n");
            return 0;
        }
        if (c_dual->parsed()) {
            SteinerMap dual = dualize(load_map(input));
            emit(oo_dual, out, json{{"map", steiner_map_to_json(dual)}},
                 "dual type: k=" + std::to_string(dual.k) + " n=" + std::to_string(dual.n) +
                     " s=" + std::to_string(dual.s) + " t=" + std::to_string(dual.t) + "\n");
            return 0;
        }
        if (c_jump->parsed()) {
            SteinerMap sm = load_map(input);
            if (primes.empty())
                primes = {sm.field().is_prime_field() ? sm.field().p : 3};
            json per = json::array();
            std::string text;
            for (std::int64_t p : primes) {
                SteinerMap red = reduce(sm.field().is_rationals() ? reduce_mod_p(sm, p) : sm).map;
                std::vector<FiberData> sigma = sigma_enumerate(red, p);
                std::vector<JumpingPair> pairs = jumping_enumerate(red, p);
                json sig = json::array();
                json fibers = json::array();
                for (const FiberData& fd : sigma) {
                    sig.push_back(point_to_json(fd.a));
                    fibers.push_back(fd.fiber_dim);
                }
                json j{{"prime", p}, {"sigma", std::move(sig)}, {"fiber_dims", std::move(fibers)},
                       {"pairs", pairs.size()}, {"bounds", bounds_to_json(dim_bounds(red))}};
                if (equations) {
                    std::vector<Polynomial> eqs = sigma_equations(red);
                    std::set<std::string> zero_set, sigma_set;
                    for (const FiberData& fd : sigma)
                        sigma_set.insert(point_to_json(fd.a).dump());
                    bool consistent = true;
                    for_each_projective_point(red.s, p, [&](const std::vector<Scalar>& pt) {
                        bool vanish = true;
                        for (const Polynomial& q : eqs)
                            vanish = vanish && q.eval(pt).is_zero();
                        json coords = json::array();
                        for (const Scalar& c : pt)
                            coords.push_back(scalar_to_json(c));
                        if (vanish != (sigma_set.count(coords.dump()) > 0))
                            consistent = false;
                        return true;
                    });
                    j["equations"] = json{{"count", eqs.size()}, {"consistent", consistent}};
                }
                text += "p=" + std::to_string(p) + ": |Sigma| = " + std::to_string(sigma.size()) +
                        ", pairs = " + std::to_string(pairs.size()) + "\n";
                per.push_back(std::move(j));
            }
            emit(oo_jump, out, json{{"per_prime", std::move(per)}}, text);
            return 0;
        }
        if (c_tan->parsed()) {
            SteinerMap sm = load_map(input);
            if (primes.empty())
                primes = {sm.field().is_prime_field() ? sm.field().p : 3};
            MaximalityReport mr = maximality_report(sm, primes);
            std::string text;
            for (const PrimeJumpingReport& pr : mr.per_prime) {
                text += "p=" + std::to_string(pr.prime) +
                        ": dim estimate = " + std::to_string(pr.dim_estimate) + " in [" +
                        std::to_string(pr.bounds.lower) + ", " + std::to_string(pr.bounds.upper) +
                        "], " + (pr.maximal ? "maximal" : "not maximal") + "\n";
            }
            emit(oo_tan, out, maximality_report_to_json(mr), text);
            return 0;
        }
        if (c_bounds->parsed()) {
            SteinerMap sm = load_map(input);
            DimBounds b = dim_bounds(sm);
            emit(oo_bounds, out, bounds_to_json(b),
                 "lower = " + std::to_string(b.lower) + ", upper = " + std::to_string(b.upper) +
                     "\n");
            return 0;
        }
        if (c_ind->parsed()) {
            SteinerMap sm = load_map(input);
            std::int64_t p = primes.empty()
                                 ? (sm.field().is_prime_field() ? sm.field().p : 5)
                                 : primes.front();
            SteinerMap red = reduce(sm.field().is_rationals() ? reduce_mod_p(sm, p) : sm).map;
            std::vector<JumpingPair> pairs = jumping_enumerate(red, p);
            if (pairs.empty())
                throw Error("no jumping pairs over F_" + std::to_string(p));
            if (pair_index < 0 || pair_index >= static_cast<int>(pairs.size()))
                throw Error("pair index out of range");
            InduceResult ir = induce(red, pairs[pair_index]);
            emit(oo_ind, out,
                 json{{"map", steiner_map_to_json(ir.map)}, {"reduced", ir.reduced},
                      {"pair", json{{"a", point_to_json(pairs[pair_index].a)},
                                    {"gamma", subspace_to_json(pairs[pair_index].gamma)}}}},
                 "induced type: (" + std::to_string(ir.map.s) + "," + std::to_string(ir.map.t) +
                     "), " + (ir.reduced ? "reduced" : "not reduced") + "\n");
            return 0;
        }
        if (c_schw->parsed()) {
            schw::TripleSpec spec =
                spec_from_flags(family, d, n, k, t, degrees, prime, seed, spec_json);
            schw::SchwTriple tr = schw::build_triple(spec);
            json j{{"family", tr.family}, {"base_dim", tr.base_dim},
                   {"k", tr.k}, {"n", tr.n}, {"s", tr.s}, {"t", tr.t},
                   {"L", json{{"name", tr.L.name}, {"dim", tr.L.dim}}},
                   {"M", json{{"name", tr.M.name}, {"dim", tr.M.dim}}},
                   {"LM", json{{"name", tr.LM.name}, {"dim", tr.LM.dim}}},
                   {"mult", matrix_to_json(tr.mult)},
                   {"degenerate_target", tr.degenerate_target}};
            if (tr.degenerate_target)
                j["degeneracy_note"] = tr.degeneracy_note;
            std::string text = tr.family + ": (k,n,s,t) = (" + std::to_string(tr.k) + "," +
                               std::to_string(tr.n) + "," + std::to_string(tr.s) + "," +
                               std::to_string(tr.t) + ")\n";
            if (triple_only) {
                emit(oo_schw, out, std::move(j), text);
                return tr.degenerate_target ? 1 : 0;
            }
            try {
                SteinerMap sm = schw::to_steiner(tr);
                j["map"] = steiner_map_to_json(sm);
                emit(oo_schw, out, std::move(j), text);
                return 0;
            } catch (const schw::InjectivityError& e) {
                j["injectivity_violation"] = subspace_to_json(e.witness.gamma);
                emit(oo_schw, out, std::move(j), std::string(e.what()) + "\n");
                return 1;
            } catch (const Error& e) {
                j["error"] = e.what();
                emit(oo_schw, out, std::move(j), std::string(e.what()) + "\n");
                return 1;
            }
        }
        if (c_fam->parsed()) {
            schw::TripleSpec spec =
                spec_from_flags(family, d, n, k, t, degrees, prime, seed, spec_json);
            schw::FamilyReport fr = schw::verify_family(spec, primes);
            std::string text = (fr.passed ? "[PASS] " : "[FAIL] ") + fr.family + "\n";
            for (const schw::PrimeFamilyReport& pr : fr.per_prime)
                for (const schw::FamilyPredicate& fp : pr.predicates)
                    if (!fp.ok)
                        text += "       p=" + std::to_string(pr.prime) + " " + fp.name + "\n";
            if (!fr.built_ok)
                text += "       " + fr.build_error + "\n";
            emit(oo_fam, out, family_report_to_json(fr), text);
            return fr.passed ? 0 : 1;
        }
        if (c_all->parsed()) {
            std::vector<verify::SweepReport> reports = verify::verify_all(instances);
            bool all = true;
            std::string text;
            json arr = json::array();
            for (const verify::SweepReport& r : reports) {
                all = all && r.passed;
                text += sweep_text(r);
                arr.push_back(sweep_json(r));
            }
            emit(oo_all, out, json{{"sweeps", std::move(arr)}, {"passed", all}}, text);
            return all ? 0 : 1;
        }
    } catch (const ParseError& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const BadReductionError& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const BudgetError& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "no subcommand\n";
    return 2;
}

} // namespace steiner::cli
