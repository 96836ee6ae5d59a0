// arrspec: command-line front end.
//
// Exit codes: 0 success, 1 usage or input error, 2 verification failure,
// 3 desk-scale limit exceeded.

#include <arrspec/arrspec.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace arrspec;
using io::json;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitVerify = 2;
constexpr int kExitDeskScale = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string input;
    std::string gen;
    std::size_t dim = 2;
    std::size_t m = 3;
    std::size_t n = 3;
    bool essentialize_input = false;
    std::string weights = "uniform";
    std::optional<std::uint64_t> seed;
    std::string format = "json";

    // subcommand specifics
    std::string flat;
    std::uint64_t steps = 1000000;
    std::uint64_t burn_in = 100;
    std::string csv;
    std::uint64_t csv_every = 1000;
};

std::uint64_t require_seed(const RunConfig& cfg, const std::string& why) {
    if (cfg.seed) return *cfg.seed;
    if (const char* env = std::getenv("ARRSPEC_SEED")) {
        try {
            std::size_t used = 0;
            const auto v = std::stoull(env, &used);
            if (used == std::string(env).size()) return v;
        } catch (const std::exception&) {
        }
        throw UsageError("ARRSPEC_SEED is not an unsigned integer: '" + std::string(env) + "'");
    }
    throw UsageError(why + " needs --seed (or ARRSPEC_SEED)");
}

Arrangement load_arrangement(const RunConfig& cfg) {
    if (cfg.input.empty() == cfg.gen.empty()) throw UsageError("give exactly one of --input or --gen");
    if (!cfg.input.empty()) return io::arrangement_from_json(io::read_json_file(cfg.input), cfg.essentialize_input);
    if (cfg.gen == "boolean") return gen::boolean(cfg.dim);
    if (cfg.gen == "braid") return gen::braid(cfg.m);
    if (cfg.gen == "three-lines") return gen::three_lines();
    if (cfg.gen == "point-on-line") return gen::point_on_line();
    if (cfg.gen == "random") return gen::random(cfg.dim, cfg.n, require_seed(cfg, "--gen random"));
    throw UsageError("unknown generator '" + cfg.gen + "'");
}

WeightAssignment load_weights(const Skeleton& sk, const RunConfig& cfg) {
    const auto& spec = cfg.weights;
    if (spec == "uniform") return WeightAssignment::uniform(sk);
    if (spec == "random") return WeightAssignment::random(sk, require_seed(cfg, "--weights random"));
    if (spec.size() > 5 && spec.substr(spec.size() - 5) == ".json")
        return io::weights_from_json(sk, io::read_json_file(spec));
    return io::weights_from_list(sk, spec);
}

std::string chamber_header(const Skeleton& sk) {
    std::string s;
    for (auto c : sk.chambers()) s += (s.empty() ? "" : " ") + sign_string(sk.face(c).signs);
    return s;
}

std::string flat_name(const Skeleton& sk, std::size_t flat) {
    const auto& fl = sk.lattice().flat(flat);
    if (fl.contains.empty()) return "W";
    std::string s;
    for (auto h : fl.contains.to_vector()) s += (s.empty() ? "H" : ",H") + std::to_string(h + 1);
    return fl.codim == sk.arrangement().dim() ? "0" : s;
}

std::string flag_name(const Skeleton& sk, const FlatFlag& f) {
    std::string s = "(";
    for (std::size_t i = 0; i < f.flats.size(); ++i) s += (i ? ", " : "") + flat_name(sk, f.flats[i]);
    return s + ")";
}

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

// ---------------------------------------------------------------------------

int cmd_faces(const RunConfig& cfg) {
    Skeleton sk(load_arrangement(cfg));
    if (cfg.format == "json") {
        print(io::faces_to_json(sk));
        return 0;
    }
    std::cout << sk.face_count() << " faces, " << sk.chamber_count() << " chambers\n";
    for (const auto& f : sk.faces())
        std::cout << sign_string(f.signs) << "  codim " << f.codim << "  flat " << flat_name(sk, f.flat)
                  << (f.is_chamber() ? "  chamber" : "") << '\n';
    return 0;
}

int cmd_lattice(const RunConfig& cfg) {
    Skeleton sk(load_arrangement(cfg));
    if (cfg.format == "json") {
        print(io::lattice_to_json(sk));
        return 0;
    }
    const auto& lat = sk.lattice();
    for (const auto& fl : lat.flats())
        std::cout << std::left << std::setw(16) << flat_name(sk, fl.id) << " codim " << fl.codim << "  mu "
                  << fl.mobius << "  chambers of restriction " << lat.restriction_chambers(fl.id).size() << '\n';
    std::cout << "betti:";
    for (auto b : lat.betti()) std::cout << ' ' << b;
    std::cout << '\n';
    return 0;
}

void print_spectrum_table(const Skeleton& sk, const SpectrumReport& rep) {
    std::cout << "chambers: " << chamber_header(sk) << '\n';
    std::vector<std::string> col1, col2, col3;
    for (const auto& pkg : rep.packages)
        for (std::size_t i = 0; i < pkg.basis.size(); ++i) {
            col1.push_back(flag_name(sk, pkg.spanning_flags[i]));
            col2.push_back(format_vector(pkg.basis[i].coeffs));
            col3.push_back(to_string(pkg.lambda));
        }
    std::size_t w1 = 4, w2 = 11;
    for (std::size_t i = 0; i < col1.size(); ++i) {
        w1 = std::max(w1, col1[i].size());
        w2 = std::max(w2, col2[i].size());
    }
    std::cout << std::left << std::setw(static_cast<int>(w1)) << "flag" << " | " << std::setw(static_cast<int>(w2))
              << "eigenvector" << " | lambda\n"
              << std::string(w1 + w2 + 15, '-') << '\n';
    std::size_t row = 0;
    for (std::size_t p = 0; p < rep.packages.size(); ++p) {
        if (p > 0 && sk.lattice().flat(rep.packages[p].flat).codim != sk.lattice().flat(rep.packages[p - 1].flat).codim)
            std::cout << std::string(w1 + w2 + 15, '-') << '\n';
        for (std::size_t i = 0; i < rep.packages[p].basis.size(); ++i, ++row)
            std::cout << std::setw(static_cast<int>(w1)) << col1[row] << " | " << std::setw(static_cast<int>(w2))
                      << col2[row] << " | " << col3[row] << '\n';
    }
    std::cout << "multiplicities by flat:";
    for (const auto& pkg : rep.packages) std::cout << ' ' << pkg.multiplicity;
    std::cout << '\n';
}

int cmd_spectrum(const RunConfig& cfg) {
    Skeleton sk(load_arrangement(cfg));
    const auto w = load_weights(sk, cfg);
    const auto rep = full_spectrum(sk, w, OrientationData::standard(sk));
    if (cfg.format == "json")
        print(io::spectrum_to_json(sk, rep));
    else
        print_spectrum_table(sk, rep);
    return 0;
}

int cmd_eigenvectors(const RunConfig& cfg) {
    Skeleton sk(load_arrangement(cfg));
    const auto w = load_weights(sk, cfg);
    const auto orient = OrientationData::standard(sk);
    std::vector<std::size_t> flats;
    if (cfg.flat.empty()) {
        for (const auto& fl : sk.lattice().flats()) flats.push_back(fl.id);
    } else {
        IndexSet s;
        std::stringstream ss(cfg.flat);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty()) continue;
            std::size_t h = 0;
            try {
                h = std::stoul(item);
            } catch (const std::exception&) {
                throw UsageError("--flat expects hyperplane indices like 0,2");
            }
            if (h >= sk.arrangement().size()) throw UsageError("--flat index " + item + " is out of range");
            s.insert(h);
        }
        flats.push_back(sk.lattice().find(s));
    }
    SpectrumReport rep;
    for (auto f : flats) rep.packages.push_back(eigenvectors_for_flat(sk, w, f, orient));
    if (cfg.format == "json") {
        print(io::spectrum_to_json(sk, rep));
        return 0;
    }
    print_spectrum_table(sk, rep);
    return 0;
}

int cmd_stationary(const RunConfig& cfg) {
    Skeleton sk(load_arrangement(cfg));
    const auto w = load_weights(sk, cfg);
    const auto pi = stationary_exact(sk, w);
    const auto q = q_vector(sk, w);
    if (cfg.format == "json") {
        print({{"stationary", io::chamber_vector_json(sk, pi)}, {"q", io::chamber_vector_json(sk, q)}});
        return 0;
    }
    std::cout << "chamber  stationary  q\n";
    for (std::size_t i = 0; i < sk.chamber_count(); ++i)
        std::cout << sign_string(sk.face(sk.chambers()[i]).signs) << "  " << to_string(pi.coeffs[i]) << "  "
                  << to_string(q.coeffs[i]) << '\n';
    return 0;
}

int cmd_simulate(const RunConfig& cfg) {
    Skeleton sk(load_arrangement(cfg));
    const auto w = load_weights(sk, cfg);
    const auto seed = require_seed(cfg, "simulate");
    if (cfg.steps <= cfg.burn_in) throw UsageError("--steps must exceed --burn-in");
    const auto exact = stationary_exact(sk, w);

    std::ofstream csv;
    if (!cfg.csv.empty()) {
        csv.open(cfg.csv);
        if (!csv) throw UsageError("cannot write " + cfg.csv);
        csv << "steps,tv_distance\n";
    }
    const FaceSampler sampler(sk, w.normalized());
    WalkState state(sk.chambers().front(), seed);
    EmpiricalDistribution emp{std::vector<std::uint64_t>(sk.chamber_count()), 0};
    while (state.step_count < cfg.steps) {
        step(state, sk, sampler);
        if (state.step_count <= cfg.burn_in) continue;
        ++emp.counts[sk.chamber_position(state.current)];
        ++emp.total;
        if (csv.is_open() && (emp.total % cfg.csv_every == 0 || state.step_count == cfg.steps))
            csv << state.step_count << ',' << tv_distance(emp, exact) << '\n';
    }
    const double tv = tv_distance(emp, exact);
    const auto gap = spectral_gap(sk, w);
    if (cfg.format == "json") {
        print({{"counts", io::empirical_json(sk, emp)},
               {"total", emp.total},
               {"steps", cfg.steps},
               {"burn_in", cfg.burn_in},
               {"seed", seed},
               {"tv_distance", tv},
               {"spectral_gap", to_string(gap)},
               {"spectral_gap_decimal", gap.get_d()}});
        return 0;
    }
    std::cout << "chamber  count  empirical  exact\n";
    for (std::size_t i = 0; i < sk.chamber_count(); ++i)
        std::cout << sign_string(sk.face(sk.chambers()[i]).signs) << "  " << emp.counts[i] << "  "
                  << static_cast<double>(emp.counts[i]) / static_cast<double>(emp.total) << "  "
                  << exact.coeffs[i].get_d() << '\n';
    std::cout << "tv distance " << tv << ", spectral gap " << to_string(gap) << " (" << gap.get_d() << ")\n";
    return 0;
}

// Runs every invariant suite on one arrangement; returns whether all passed.
bool verify_one(const std::string& name, const Skeleton& sk, const WeightAssignment& w, const RunConfig& cfg,
                json& report) {
    bool ok = true;
    json results = json::array();
    for (const auto& r : checks::run_all(sk, w, OrientationData::standard(sk))) {
        ok = ok && r.ok;
        results.push_back({{"check", r.name}, {"ok", r.ok}, {"cases", r.cases}, {"detail", r.detail}});
        if (cfg.format != "json")
            std::cout << (r.ok ? "  ok    " : "  FAIL  ") << std::left << std::setw(32) << r.name << r.cases
                      << " cases" << (r.ok ? "" : "  " + r.detail) << '\n';
    }
    report.push_back({{"arrangement", name}, {"ok", ok}, {"checks", results}});
    return ok;
}

int cmd_verify(const RunConfig& cfg) {
    json report = json::array();
    bool ok = true;
    auto one = [&](const std::string& name, const Arrangement& a, std::uint64_t weight_seed) {
        Skeleton sk(a);
        const auto w = cfg.weights == "random" ? WeightAssignment::random(sk, weight_seed) : load_weights(sk, cfg);
        if (cfg.format != "json") std::cout << name << " (" << sk.face_count() << " faces)\n";
        ok = verify_one(name, sk, w, cfg, report) && ok;
    };
    if (!cfg.input.empty() || !cfg.gen.empty()) {
        const auto seed = cfg.weights == "random" ? require_seed(cfg, "--weights random") : 0;
        one(cfg.input.empty() ? cfg.gen : cfg.input, load_arrangement(cfg), seed);
    } else {
        // the full suite: named arrangements plus seeded random ones
        const std::uint64_t base = cfg.seed.value_or(1);
        one("three-lines", gen::three_lines(), base);
        one("point-on-line", gen::point_on_line(), base);
        one("boolean-3", gen::boolean(3), base);
        one("braid-4", gen::braid(4), base);
        for (std::uint64_t i = 0; i < 20; ++i) {
            const std::size_t dim = 2 + i % 2, n = dim + i % (7 - dim);
            one("random-" + std::to_string(dim) + "x" + std::to_string(n) + "-s" + std::to_string(base + i),
                gen::random(dim, n, base + i), base + i);
        }
    }
    if (cfg.format == "json")
        print({{"ok", ok}, {"arrangements", report}});
    else
        std::cout << (ok ? "all checks passed\n" : "verification FAILED\n");
    return ok ? 0 : kExitVerify;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact spectra and simulation of face random walks on hyperplane arrangements"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_common = [&](CLI::App* sub) {
        auto* in = sub->add_option("--input,-i", cfg.input, "arrangement JSON file")->check(CLI::ExistingFile);
        auto* g = sub->add_option("--gen,-g", cfg.gen, "generator")
                      ->check(CLI::IsMember({"boolean", "braid", "three-lines", "point-on-line", "random"}));
        in->excludes(g);
        sub->add_option("--dim", cfg.dim, "dimension for boolean / random");
        sub->add_option("--m", cfg.m, "braid size");
        sub->add_option("--n", cfg.n, "hyperplane count for random");
        sub->add_flag("--essentialize", cfg.essentialize_input, "essentialize non-essential input files");
        sub->add_option("--seed", cfg.seed, "seed for random generators, weights and walks (falls back to ARRSPEC_SEED)");
        sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "table"}));
    };
    auto add_weights = [&](CLI::App* sub) {
        sub->add_option("--weights,-w", cfg.weights,
                        "uniform | random | comma-separated rationals in face order | weights .json file");
    };

    auto* faces = app.add_subcommand("faces", "list faces in canonical order");
    add_common(faces);
    auto* lattice = app.add_subcommand("lattice", "intersection lattice, Mobius values and Betti numbers");
    add_common(lattice);
    auto* spectrum = app.add_subcommand("spectrum", "eigenvalues, multiplicities and an eigenbasis");
    add_common(spectrum);
    add_weights(spectrum);
    auto* eigen = app.add_subcommand("eigenvectors", "eigenvectors attached to one flat (or all)");
    add_common(eigen);
    add_weights(eigen);
    eigen->add_option("--flat", cfg.flat, "hyperplane indices of the flat, e.g. 0,2 (default: every flat)");
    auto* stationary = app.add_subcommand("stationary", "exact stationary distribution and q vector");
    add_common(stationary);
    add_weights(stationary);
    auto* simulate = app.add_subcommand("simulate", "Monte Carlo run of the walk");
    add_common(simulate);
    add_weights(simulate);
    simulate->add_option("--steps", cfg.steps, "number of steps")->capture_default_str();
    simulate->add_option("--burn-in", cfg.burn_in, "steps discarded before counting")->capture_default_str();
    simulate->add_option("--csv", cfg.csv, "write TV distance against steps to this CSV file");
    simulate->add_option("--csv-every", cfg.csv_every, "CSV sampling interval")->check(CLI::PositiveNumber);
    auto* verify = app.add_subcommand("verify", "run every invariant check (the full suite without input)");
    add_common(verify);
    add_weights(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (*faces) return cmd_faces(cfg);
        if (*lattice) return cmd_lattice(cfg);
        if (*spectrum) return cmd_spectrum(cfg);
        if (*eigen) return cmd_eigenvectors(cfg);
        if (*stationary) return cmd_stationary(cfg);
        if (*simulate) return cmd_simulate(cfg);
        if (*verify) return cmd_verify(cfg);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        switch (e.kind()) {
        case ErrorKind::DeskScaleExceeded:
            return kExitDeskScale;
        case ErrorKind::MultiplicityMismatch:
        case ErrorKind::NotAnEigenvector:
        case ErrorKind::DegenerateOrientation:
        case ErrorKind::EmptyFibre:
            return kExitVerify;
        default:
            return kExitUsage;
        }
    }
    return kExitUsage;
}
