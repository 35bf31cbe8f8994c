// paradoxkit: command-line verification runs with JSON reports on stdout.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "paradoxkit/cauchy.hpp"
#include "paradoxkit/errors.hpp"
#include "paradoxkit/freeness.hpp"
#include "paradoxkit/json.hpp"
#include "paradoxkit/measures.hpp"
#include "paradoxkit/paradox.hpp"
#include "paradoxkit/smp.hpp"
#include "paradoxkit/sphere.hpp"
#include "paradoxkit/words.hpp"

namespace pk = paradoxkit;
using pk::io::Json;
using pk::io::to_json;
using pk::exactlin::Rational;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 64;

struct Run {
    std::string command;
    Json parameters = Json::object();
    pk::Outcome outcome = pk::Outcome::pass;
    Json details = Json::object();
    Json findings = Json::array();
};

// Failed checks become findings; the outcome follows unless already decided.
void absorb_checks(Run& run, const pk::CheckList& checks, const char* key = "checks")
{
    run.details[key] = to_json(checks);
    for (const auto& c : checks.checks)
        if (!c.passed)
            run.findings.push_back(Json{{"check", c.name}, {"detail", c.detail}});
    if (!checks.all_passed() && run.outcome == pk::Outcome::pass)
        run.outcome = pk::Outcome::fail;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw pk::ParseError(path + ": cannot open file");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

pk::exactlin::GeneratorPair generators(const std::string& which)
{
    using pk::exactlin::Mat3Q;
    if (which == "standard")
        return pk::exactlin::GeneratorPair::standard();
    if (which == "order4")
        return pk::exactlin::GeneratorPair(Mat3Q::from_integers({1, 0, 0, 0, 0, -1, 0, 1, 0}),
                                           Mat3Q::from_integers({0, 0, 1, 0, 1, 0, -1, 0, 0}));
    const auto& a = pk::exactlin::GeneratorPair::standard().matrix(pk::words::Letter::a);
    return pk::exactlin::GeneratorPair(a, a);
}

// ---- words

void words_verify(Run& run, int depth)
{
    run.parameters["depth"] = depth;
    const auto ws = pk::words::ball(depth);
    const std::size_t expected = pk::words::ball_size(depth);
    pk::CheckList census;
    census.add("ball_size", ws.size() == expected,
               std::to_string(ws.size()) + " words, expected " + std::to_string(expected));
    absorb_checks(run, census, "census");
    const auto r = pk::words::verify_f2_paradox(depth);
    Json counts = Json::object();
    for (int c = 0; c < 5; ++c)
        counts[pk::words::to_string(static_cast<pk::words::PrefixClass>(c))] = r.class_counts[static_cast<std::size_t>(c)];
    run.details["ball_size"] = ws.size();
    run.details["class_counts"] = counts;
    if (r.counterexample)
        run.details["counterexample"] = to_json(*r.counterexample);
    absorb_checks(run, r.checks);
}

// ---- freeness

void freeness_exhaustive(Run& run, int depth, const std::string& gens)
{
    run.parameters["depth"] = depth;
    run.parameters["generators"] = gens;
    const auto v = pk::freeness::exhaustive_check(depth, generators(gens));
    run.details["certified"] = v.certified;
    run.details["words_evaluated"] = v.words_evaluated;
    run.details["counterexample"] = v.counterexample ? to_json(*v.counterexample) : Json(nullptr);
    if (!v.certified) {
        run.outcome = pk::Outcome::fail;
        run.findings.push_back(Json{{"check", "no_relation"},
                                    {"detail", "word " + v.counterexample->to_string() + " evaluates to I"}});
    }
}

std::optional<pk::exactlin::Vec3Q> parse_base(const std::string& text)
{
    if (text.empty())
        return std::nullopt;
    std::vector<Rational> xs;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        xs.push_back(pk::exactlin::parse_rational(item));
    if (xs.size() != 3)
        throw pk::DomainError("--base needs three comma-separated integers");
    return pk::exactlin::Vec3Q(xs[0], xs[1], xs[2]);
}

void report_certificate(Run& run, const pk::freeness::FreenessCertificate& c, const std::string& out)
{
    const bool ok = pk::freeness::verify_certificate(c);
    run.details["mode"] = pk::freeness::to_string(c.mode);
    run.details["base"] = Json::array({to_json(c.base[0]), to_json(c.base[1]), to_json(c.base[2])});
    run.details["states"] = c.states.size();
    run.details["transitions"] = c.transitions.size();
    run.details["verified"] = ok;
    if (!ok) {
        run.outcome = pk::Outcome::fail;
        run.findings.push_back(Json{{"check", "verify_certificate"}, {"detail", "independent re-check rejected it"}});
    }
    if (!out.empty()) {
        std::ofstream f(out);
        if (!f)
            throw pk::ParseError(out + ": cannot write file");
        f << to_json(c).dump(2) << "\n";
        run.details["written_to"] = out;
    }
}

void freeness_certify(Run& run, const std::string& base_text, const std::string& out)
{
    run.parameters["base"] = base_text.empty() ? Json(nullptr) : Json(base_text);
    const auto base = parse_base(base_text);
    if (base) {
        const auto r = pk::freeness::build_certificate(*base);
        if (const auto* f = std::get_if<pk::freeness::CertificateFailure>(&r)) {
            run.outcome = pk::Outcome::fail;
            run.details["vanishing_word"] = to_json(f->word);
            run.findings.push_back(Json{{"check", "residues_nonzero"},
                                        {"detail", "residue of " + f->word.to_string() + " vanishes mod 7"}});
            return;
        }
        report_certificate(run, std::get<pk::freeness::FreenessCertificate>(r), out);
        return;
    }
    const auto outcome = pk::freeness::certify();
    Json rejected = Json::array();
    for (const auto& [v, f] : outcome.rejected)
        rejected.push_back(Json{{"base", to_json(v)}, {"vanishing_word", to_json(f.word)}});
    run.details["rejected"] = rejected;
    run.details["matrix_fallback"] = outcome.used_matrix_fallback;
    if (!outcome.certificate) {
        run.outcome = pk::Outcome::fail;
        run.findings.push_back(Json{{"check", "certificate"}, {"detail", "no base vector and no matrix certificate"}});
        return;
    }
    report_certificate(run, *outcome.certificate, out);
}

void freeness_check(Run& run, const std::string& input)
{
    run.parameters["input"] = input;
    const auto c = pk::io::certificate_from_json(pk::io::parse(read_file(input), input));
    report_certificate(run, c, "");
}

// ---- sphere

void sphere_fixed_points(Run& run, int depth)
{
    run.parameters["depth"] = depth;
    const auto c = pk::sphere::fixed_directions(depth);
    const auto ref = pk::sphere::reference::fixed_directions(depth);
    const auto census = pk::sphere::rank_census(depth);
    pk::CheckList checks;
    checks.add("oracles_agree", c.directions == ref.directions, "kernel solve vs row cross products");
    checks.add("rank_two", census.passed(),
               std::to_string(census.rank_two) + " of " + std::to_string(census.words_checked) + " words" +
                   (census.first_bad ? ", first bad " + census.first_bad->to_string() : ""));
    bool fixes = true;
    for (const auto& [d, w] : c.directions)
        fixes = fixes && pk::exactlin::eval_word(w) * d.as_vector() == d.as_vector();
    checks.add("witness_fixes_direction", fixes);
    run.details["fixed_directions"] = to_json(c);
    absorb_checks(run, checks);
}

void sphere_absorb(Run& run, int depth, int iters, int bits, bool bad_angle)
{
    run.parameters["depth"] = depth;
    run.parameters["iters"] = iters;
    run.parameters["bits"] = bits;
    run.parameters["bad_angle"] = bad_angle;
    const auto c = pk::sphere::fixed_directions(depth);
    run.details["fixed_directions"] = c.size();
    auto g = pk::sphere::certify_rotation(c, iters, bits);
    run.details["rotation"] = to_json(g);
    if (bad_angle) {
        // A quarter turn returns every point to itself after four steps.
        g.angle = {Rational(1, 2), true};
        run.details["corrupted_angle"] = g.angle.to_string();
    }
    const auto r = pk::sphere::absorb_demo(c, g, iters);
    run.details["layers"] = r.layers;
    run.details["distinct_points"] = r.distinct_points;
    absorb_checks(run, r.checks);
    run.outcome = r.outcome;
}

// ---- smp

void smp_verify(Run& run, int deg, int coef, int bits, std::uint64_t seed)
{
    run.parameters["deg"] = deg;
    run.parameters["coef"] = coef;
    run.parameters["bits"] = bits;
    const auto r = pk::paradox::smp_verify(deg, static_cast<std::uint64_t>(coef), bits, seed);
    run.details["polynomials"] = r.polynomials;
    run.details["count_a"] = r.count_a;
    run.details["count_b"] = r.count_b;
    run.details["candidate_pairs"] = r.candidate_pairs;
    run.details["separation_threshold"] = "1e-12";
    absorb_checks(run, r.checks);
    run.outcome = r.outcome;
}

// ---- measures

Rational random_rational(std::mt19937_64& rng, long lo, long hi, long max_den)
{
    const long q = std::uniform_int_distribution<long>(1, max_den)(rng);
    const long p = std::uniform_int_distribution<long>(lo * q, hi * q)(rng);
    return pk::exactlin::ratio(p, q);
}

void measures_finite_group(Run& run, std::uint64_t seed)
{
    Json groups = Json::array();
    for (const auto& g : pk::measures::GroupTable::small_groups()) {
        const auto r = pk::measures::uniform_group_measure(g, seed);
        groups.push_back(Json{{"group", g.name()}, {"order", g.order()}, {"subsets_checked", r.subsets_checked},
                              {"passed", r.checks.all_passed()}});
        absorb_checks(run, r.checks, "last_group_checks");
    }
    run.details["groups"] = groups;
    const auto ba = pk::measures::FiniteBooleanAlgebra::power_set(3);
    absorb_checks(run, pk::measures::verify_boolean_axioms(ba), "power_set_axioms");
    const auto mu = pk::measures::construct_probability_measure(ba);
    absorb_checks(run, pk::measures::audit_measure(ba, mu), "power_set_measure");
    run.details["singleton_measure"] = to_json(mu.values[1]);
}

void measures_density(Run& run, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::size_t within = 0;
    Rational worst_ratio = 0;
    const int instances = 1000;
    for (int k = 0; k < instances; ++k) {
        pk::measures::DensityWindow w;
        w.n = std::uniform_int_distribution<long>(1, 200)(rng);
        std::bernoulli_distribution member(std::uniform_real_distribution<double>(0, 1)(rng));
        for (long a = -1; a <= w.n; ++a)
            if (member(rng))
                w.members.push_back(a);
        const Rational d = pk::measures::shift_defect(w);
        if (d <= pk::exactlin::ratio(2, w.n))
            ++within;
        worst_ratio = std::max(worst_ratio, Rational(d * w.n / 2));
    }
    pk::CheckList checks;
    checks.add("shift_defect_bound", within == static_cast<std::size_t>(instances),
               std::to_string(within) + " of " + std::to_string(instances) + " within 2/n");
    run.details["instances"] = instances;
    run.details["worst_defect_over_bound"] = to_json(worst_ratio);
    absorb_checks(run, checks);
}

void measures_sigma(Run& run, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    Json instances = Json::array();
    pk::CheckList summary;
    std::size_t passed = 0;
    for (int k = 0; k < 20; ++k) {
        const auto inst = pk::measures::random_free_instance(rng);
        const auto r = pk::measures::sigma_report(inst.group, inst.action, inst.mu);
        passed += r.passed() ? 1 : 0;
        instances.push_back(Json{{"group", inst.group.name()},
                                 {"points", inst.action.points},
                                 {"orbits", r.orbits},
                                 {"sigma_identity", to_json(r.sigma_singletons[inst.group.identity()])},
                                 {"passed", r.passed()}});
        if (!r.passed())
            absorb_checks(run, r.checks, "failing_instance_checks");
    }
    summary.add("random_free_instances", passed == 20, std::to_string(passed) + " of 20 pass");

    // Z2 acting trivially on one point is not free and must be rejected.
    bool rejected = false;
    try {
        const auto z2 = pk::measures::GroupTable::cyclic(2);
        pk::measures::GroupAction act{1, {{0}, {0}}};
        pk::measures::sigma_report(z2, act, pk::measures::PointMassMeasure{{Rational(1)}});
    } catch (const pk::PreconditionError&) {
        rejected = true;
    }
    summary.add("non_free_rejected", rejected);
    run.details["instances"] = instances;
    absorb_checks(run, summary);
}

void measures_ergodic(Run& run, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::size_t within = 0;
    const int instances = 200;
    for (int k = 0; k < instances; ++k) {
        const Rational alpha = random_rational(rng, 0, 1, 30), x0 = random_rational(rng, 0, 1, 30);
        pk::measures::StepFunction f;
        std::set<Rational> breaks{Rational(0)};
        const int pieces = std::uniform_int_distribution<int>(1, 5)(rng);
        while (static_cast<int>(breaks.size()) < pieces) {
            const Rational b = random_rational(rng, 0, 1, 12);
            if (b > 0 && b < 1)
                breaks.insert(b);
        }
        f.breaks.assign(breaks.begin(), breaks.end());
        for (std::size_t i = 0; i < f.breaks.size(); ++i)
            f.values.push_back(random_rational(rng, -5, 5, 6));
        const long n = std::uniform_int_distribution<long>(1, 300)(rng);
        within += pk::measures::ergodic_average(alpha, x0, f, n).within_bound() ? 1 : 0;
    }
    const pk::measures::StepFunction third{{Rational(0), Rational(1, 3)}, {Rational(1), Rational(0)}};
    const auto ex = pk::measures::ergodic_average(Rational(1, 3), Rational(0), third, 3);
    pk::CheckList checks;
    checks.add("defect_bound", within == static_cast<std::size_t>(instances),
               std::to_string(within) + " of " + std::to_string(instances) + " within 2 sup|f| / n");
    checks.add("rotation_by_one_third", ex.value == Rational(1, 3) && ex.defect == 0,
               "F_3 = " + pk::exactlin::to_string(ex.value) + ", defect " + pk::exactlin::to_string(ex.defect));
    run.details["instances"] = instances;
    absorb_checks(run, checks);
}

// ---- paradox

void paradox_contradiction(Run& run, const std::string& input, bool builtin_f2, bool invariant_flag)
{
    pk::io::ContradictionInput in;
    if (builtin_f2) {
        run.parameters["builtin"] = "f2";
        in.witness = pk::measures::f2_cell_witness();
        in.nu.assign(in.witness.cells(), pk::exactlin::ratio(1, static_cast<long>(in.witness.cells())));
        in.invariant = invariant_flag;
    } else {
        run.parameters["input"] = input;
        in = pk::io::contradiction_input_from_json(pk::io::parse(read_file(input), input));
        in.invariant = in.invariant || invariant_flag;
    }
    run.parameters["invariant"] = in.invariant;
    const auto r = pk::measures::paradox_contradiction(in.witness, in.nu, in.invariant);
    Json links = Json::array();
    for (const auto& l : r.links)
        links.push_back(Json{{"name", l.name},
                             {"relation", l.relation},
                             {"lhs", to_json(l.lhs)},
                             {"rhs", to_json(l.rhs)},
                             {"holds", l.holds},
                             {"assumed", l.assumed}});
    run.details["nu_X"] = to_json(r.nu_x);
    run.details["links"] = links;
    run.details["failing_link"] = r.failing_link ? Json(*r.failing_link) : Json(nullptr);
    run.details["chain_closes"] = r.chain_closes;
    run.details["contradiction"] = r.contradiction;
    absorb_checks(run, r.checks, "structure");
    if (!r.contradiction) {
        run.outcome = pk::Outcome::fail;
        run.findings.push_back(Json{{"check", "chain"},
                                    {"detail", r.failing_link ? "link " + *r.failing_link + " fails"
                                                              : "chain closes but nu(X) = 0"}});
    }
}

// ---- cauchy

void cauchy_demo(Run& run, int rank, std::uint64_t seed)
{
    run.parameters["rank"] = rank;
    const auto f = pk::cauchy::demo_model(static_cast<std::size_t>(rank));
    run.details["model"] = to_json(f);
    const auto r = pk::cauchy::verify_cauchy(f, 1000, seed);
    run.details["trials"] = r.trials;
    absorb_checks(run, r.checks);
    const auto w = pk::cauchy::nonproportionality_witness(f);
    if (w)
        run.details["witness"] = Json{{"x", to_json(w->x)}, {"y", to_json(w->y)}, {"cross", to_json(w->cross)}};
    else
        run.details["witness"] = nullptr;
    pk::CheckList expect;
    expect.add("witness_iff_rank_at_least_two", w.has_value() == (rank >= 2));
    absorb_checks(run, expect, "witness_checks");
}

int exit_code(pk::Outcome o)
{
    switch (o) {
    case pk::Outcome::pass: return kExitPass;
    case pk::Outcome::fail: return kExitFail;
    case pk::Outcome::inconclusive: return kExitInconclusive;
    }
    return kExitFail;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact verification of free-group paradoxes, rotation freeness and finite measures", "paradoxkit"};
    app.require_subcommand(1);
    std::uint64_t seed = 0;
    bool timing = false;
    app.add_option("--seed", seed, "Seed for randomized checks")->capture_default_str();
    app.add_flag("--timing", timing, "Include wall-clock timing in the report");

    std::function<void(Run&)> action;
    Run run;
    auto bind = [&](CLI::App* sub, std::string name, std::function<void(Run&)> fn) {
        sub->callback([&, name, fn] {
            run.command = name;
            action = fn;
        });
    };

    int depth = 0, iters = 0, bits = 128, deg = 0, coef = 0, rank = 0;
    std::string gens = "standard", base, out, input, which;
    bool bad_angle = false, builtin_f2 = false, invariant = false;

    auto* words = app.add_subcommand("words", "Reduced words of F2");
    words->require_subcommand(1);
    auto* wv = words->add_subcommand("verify", "Ball census and the paradoxical decomposition of F2");
    wv->add_option("--depth", depth, "Word length bound")->required()->check(CLI::Range(1, pk::words::kDefaultBallCap));
    bind(wv, "words verify", [&](Run& r) { words_verify(r, depth); });

    auto* fr = app.add_subcommand("freeness", "Freeness of the rotation generators");
    fr->require_subcommand(1);
    auto* fe = fr->add_subcommand("exhaustive", "Evaluate every reduced word up to a length");
    fe->add_option("--depth", depth, "Word length bound")->required()->check(CLI::Range(1, pk::words::kDefaultBallCap));
    fe->add_option("--generators", gens, "standard, order4 or degenerate")
        ->check(CLI::IsMember({"standard", "order4", "degenerate"}))
        ->capture_default_str();
    bind(fe, "freeness exhaustive", [&](Run& r) { freeness_exhaustive(r, depth, gens); });
    auto* fc = fr->add_subcommand("certify", "Build and verify a mod-7 residue certificate");
    fc->add_option("--base", base, "Integral base vector x,y,z");
    fc->add_option("--out", out, "Write the certificate JSON here");
    bind(fc, "freeness certify", [&](Run& r) { freeness_certify(r, base, out); });
    auto* fk = fr->add_subcommand("check-certificate", "Verify a certificate file");
    fk->add_option("--input", input, "Certificate JSON")->required();
    bind(fk, "freeness check-certificate", [&](Run& r) { freeness_check(r, input); });

    auto* sp = app.add_subcommand("sphere", "Fixed directions and absorbing rotations");
    sp->require_subcommand(1);
    auto* sf = sp->add_subcommand("fixed-points", "Axes of all nonempty words up to a length");
    sf->add_option("--depth", depth, "Word length bound")->required()->check(CLI::Range(1, 10));
    bind(sf, "sphere fixed-points", [&](Run& r) { sphere_fixed_points(r, depth); });
    auto* sa = sp->add_subcommand("absorb", "Certify a rotation that moves the fixed set off itself");
    sa->add_option("--depth", depth, "Word length bound for the fixed set")->required()->check(CLI::Range(1, 6));
    sa->add_option("--iters", iters, "Number of rotation steps M")->required()->check(CLI::Range(1, 64));
    sa->add_option("--bits", bits, "Starting precision in bits")->check(CLI::Range(53, pk::sphere::kMaxBits))->capture_default_str();
    sa->add_flag("--bad-angle", bad_angle, "Replace the angle by a quarter turn (negative control)");
    bind(sa, "sphere absorb", [&](Run& r) { sphere_absorb(r, depth, iters, bits, bad_angle); });

    auto* sm = app.add_subcommand("smp", "Planar paradoxical set of polynomials at e^i");
    sm->require_subcommand(1);
    auto* sv = sm->add_subcommand("verify", "Check the truncated decomposition");
    sv->add_option("--deg", deg, "Maximum degree")->required()->check(CLI::Range(0, 21));
    sv->add_option("--coef", coef, "Maximum coefficient")->required()->check(CLI::Range(1, 1 << 20));
    sv->add_option("--bits", bits, "Interval precision in bits")->check(CLI::Range(53, 4096))->capture_default_str();
    bind(sv, "smp verify", [&](Run& r) { smp_verify(r, deg, coef, bits, seed); });

    auto* me = app.add_subcommand("measures", "Finitely additive measures");
    me->require_subcommand(1);
    auto* md = me->add_subcommand("demo", "Run one of the measure demonstrations");
    md->add_option("--which", which, "finite-group, density, thm42 or ergodic")
        ->required()
        ->check(CLI::IsMember({"finite-group", "density", "thm42", "ergodic"}));
    bind(md, "measures demo", [&](Run& r) {
        r.parameters["which"] = which;
        r.parameters["seed"] = seed;
        if (which == "finite-group")
            measures_finite_group(r, seed);
        else if (which == "density")
            measures_density(r, seed);
        else if (which == "thm42")
            measures_sigma(r, seed);
        else
            measures_ergodic(r, seed);
    });

    auto* pa = app.add_subcommand("paradox", "Paradoxical decompositions and invariant measures");
    pa->require_subcommand(1);
    auto* pc = pa->add_subcommand("contradiction", "Evaluate the measure chain on a piece system");
    auto* in_opt = pc->add_option("--input", input, "Witness and measure JSON");
    auto* f2_opt = pc->add_flag("--f2", builtin_f2, "Use the built-in F2 cell witness");
    in_opt->excludes(f2_opt);
    pc->add_flag("--invariant", invariant, "Assume the measure is invariant on the moved pieces");
    bind(pc, "paradox contradiction", [&](Run& r) { paradox_contradiction(r, input, builtin_f2, invariant); });

    auto* ca = app.add_subcommand("cauchy", "Additive non-linear maps on a finite-rank model");
    ca->require_subcommand(1);
    auto* cd = ca->add_subcommand("demo", "Check additivity and find a non-proportionality witness");
    cd->add_option("--rank", rank, "Number of basis reals")->required()->check(CLI::Range(1, 64));
    bind(cd, "cauchy demo", [&](Run& r) {
        r.parameters["seed"] = seed;
        cauchy_demo(r, rank, seed);
    });

    try {
        app.parse(argc, argv);
        if (run.command == "paradox contradiction" && input.empty() && !builtin_f2)
            throw CLI::ValidationError("paradox contradiction", "needs --input FILE or --f2");
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    const auto start = std::chrono::steady_clock::now();
    try {
        action(run);
    } catch (const pk::InconclusiveError& e) {
        run.outcome = pk::Outcome::inconclusive;
        run.findings.push_back(Json{{"check", "precision"}, {"detail", e.what()}});
    } catch (const pk::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const pk::DomainError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const pk::ResourceError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const pk::Error& e) {
        run.outcome = pk::Outcome::fail;
        run.findings.push_back(Json{{"check", "error"}, {"detail", e.what()}});
    }
    const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);

    run.details["findings"] = run.findings;
    Json report{{"schema", "report-v1"},
                {"command", run.command},
                {"parameters", run.parameters},
                {"outcome", pk::to_string(run.outcome)},
                {"details", run.details},
                {"timing_ms", timing ? Json(elapsed.count()) : Json(nullptr)}};
    std::cout << report.dump(2) << "\n";

    std::cerr << run.command << ": " << pk::to_string(run.outcome);
    if (!run.findings.empty())
        std::cerr << " (" << run.findings[0]["check"].get<std::string>() << ": "
                  << run.findings[0]["detail"].get<std::string>() << ")";
    std::cerr << "\n";
    return exit_code(run.outcome);
}
