#include "quanta/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "quanta/error.hpp"
#include "quanta/render.hpp"

#ifndef QUANTA_DEFAULT_GOLDEN
#define QUANTA_DEFAULT_GOLDEN "table1_golden.json"
#endif

namespace quanta {

namespace {

struct RunConfig {
    int modulus = 12;
    std::string scale;
    int width = 3;
    std::string format = "text";
};

struct QuantumArgs {
    int source_distance = 0;
    int target_distance = 0;
    std::string modulator;
    std::string cadence;
    bool widen_rigidity = false;
};

struct CatalogArgs {
    int source_distance = 0;
    bool require_cover = false;
    bool widen_rigidity = false;
    std::optional<std::string> golden;
};

void add_common(CLI::App& sub, RunConfig& cfg) {
    sub.add_option("--modulus,-n", cfg.modulus, "Size of the pitch-class space")->capture_default_str();
    sub.add_option("--scale", cfg.scale, "Comma-separated residues (default: major scale, n = 12)");
    sub.add_option("--width,-m", cfg.width, "Stacked-third width (3 triads, 4 tetrads)")->capture_default_str();
    sub.add_option("--format", cfg.format, "text, json, csv or dot")->capture_default_str();
}

Scale parse_scale(const RunConfig& cfg) {
    check_modulus(cfg.modulus);
    if (cfg.scale.empty()) {
        if (cfg.modulus != 12) throw InvalidInput("--scale is required when --modulus is not 12");
        return Scale::major();
    }
    PitchClassSet tones(cfg.modulus);
    std::stringstream in(cfg.scale);
    std::string token;
    while (std::getline(in, token, ',')) {
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(token, &used);
        } catch (const std::exception&) {
            throw InvalidInput("cannot parse scale '" + cfg.scale + "'");
        }
        if (used != token.size()) throw InvalidInput("cannot parse scale '" + cfg.scale + "'");
        if (tones.contains(value)) throw InvalidInput("scale repeats residue " + std::to_string(value));
        tones.insert(value);
    }
    return Scale(tones);
}

TonalityOrbit build_orbit(const RunConfig& cfg) {
    return tonality_orbit(build_interpretation(parse_scale(cfg), cfg.width));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int run_catalog(const RunConfig& cfg, const CatalogArgs& args, std::ostream& out) {
    const auto orbit = build_orbit(cfg);
    CatalogOptions options;
    options.require_cover = args.require_cover;
    options.widen_rigidity = args.widen_rigidity;
    options.source_transposition = args.source_distance;
    const auto rows = modulation_catalog(orbit, options);
    if (!args.golden) {
        out << render_catalog(rows, cfg.width, parse_format(cfg.format));
        return kExitOk;
    }
    const auto golden = parse_catalog_json(read_file(*args.golden), cfg.modulus, orbit.degree_count());
    const auto diff = compare_catalog(rows, golden);
    for (const auto& r : diff.surplus) out << "surplus: " << describe_row(r, cfg.width) << "\n";
    for (const auto& r : diff.missing) out << "missing: " << describe_row(r, cfg.width) << "\n";
    out << (diff.matches() ? "golden: match" : "golden: MISMATCH") << " (" << rows.size() << " computed, "
        << golden.size() << " golden)\n";
    return diff.matches() ? kExitOk : kExitGoldenMismatch;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Cadences, modulation quanta and nerves of scale tonalities"};
    app.require_subcommand(1);

    RunConfig cfg;
    QuantumArgs qargs;
    CatalogArgs cargs;
    std::string golden_path;

    auto* cadences = app.add_subcommand("cadences", "List minimal cadential sets");
    add_common(*cadences, cfg);

    auto* quantum = app.add_subcommand("quantum", "Compute the quantum of one modulation");
    add_common(*quantum, cfg);
    quantum->add_option("--source-distance", qargs.source_distance, "Transposition of the source tonality");
    quantum->add_option("--target-distance", qargs.target_distance, "Target transposition relative to the source")
        ->required();
    quantum->add_option("--modulator", qargs.modulator, "Symmetry such as T6.11")->required();
    quantum->add_option("--cadence", qargs.cadence, "Target cadence numerals, e.g. V or II,V")->required();
    quantum->add_flag("--widen-rigidity", qargs.widen_rigidity, "Test rigidity against all affine units");

    auto* catalog = app.add_subcommand("catalog", "List every quantized modulation");
    add_common(*catalog, cfg);
    catalog->add_option("--source-distance", cargs.source_distance, "Transposition of the source tonality");
    catalog->add_flag("--require-cover", cargs.require_cover, "Drop rows whose pivots do not cover the trace");
    catalog->add_flag("--widen-rigidity", cargs.widen_rigidity, "Test rigidity against all affine units");
    auto* golden_opt = catalog->add_option("--check-golden", golden_path, "Compare against a JSON catalog")
                           ->expected(0, 1);

    auto* nerve = app.add_subcommand("nerve", "Statistics of the nerve of the degree cover");
    add_common(*nerve, cfg);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInvalidInput;
    }

    try {
        if (cadences->parsed()) {
            const auto orbit = build_orbit(cfg);
            out << render_cadences(minimal_cadential_sets(orbit), parse_format(cfg.format));
        } else if (quantum->parsed()) {
            const auto orbit = build_orbit(cfg);
            const auto& base = orbit.base();
            const Tonality source(base, qargs.source_distance);
            const Tonality target(base, qargs.source_distance + qargs.target_distance);
            const Modulation mod{source, target, AffineSymmetry::parse(qargs.modulator, cfg.modulus),
                                 parse_degrees(qargs.cadence, base.degree_count())};
            const auto outcome = compute_quantum(mod, QuantumOptions{qargs.widen_rigidity});
            out << render_quantum(outcome, cfg.width, parse_format(cfg.format));
        } else if (catalog->parsed()) {
            if (golden_opt->count() > 0) cargs.golden = golden_path.empty() ? QUANTA_DEFAULT_GOLDEN : golden_path;
            return run_catalog(cfg, cargs, out);
        } else if (nerve->parsed()) {
            const auto complex = compute_nerve(build_interpretation(parse_scale(cfg), cfg.width));
            out << render_nerve(complex_stats(complex), complex, cfg.width, parse_format(cfg.format));
        }
    } catch (const CapacityError& e) {
        err << "error: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    }
    return kExitOk;
}

}  // namespace quanta
