#include "mono/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "mono/engine.hpp"
#include "mono/files.hpp"
#include "mono/mirror.hpp"
#include "mono/slices.hpp"

namespace mono {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitDivergent = 2;
constexpr int kExitMirrorMismatch = 3;
constexpr int kExitUncertified = 4;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ValidationError("cannot open file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string format_coweight(const IntVec& coords) {
    std::string out = "θ=(";
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(coords[i]);
    }
    out += ")";
    return out;
}

std::string format_intvec(const IntVec& coords) {
    std::string out = "(";
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(coords[i]);
    }
    out += ")";
    return out;
}

std::string format_rational(const BigRat& q) {
    std::ostringstream out;
    if (denominator(q) == 1)
        out << numerator(q);
    else
        out << numerator(q) << "/" << denominator(q);
    return out.str();
}

Theory to_plain_theory(const ParsedInput& input) {
    if (const auto* t = std::get_if<Theory>(&input))
        return *t;
    if (const auto* q = std::get_if<ParsedQuiver>(&input))
        return quiver_to_theory(q->quiver);
    return toric_to_theory(std::get<ChargeData>(input));
}

// Classification gate shared by the computing subcommands: exit 4 when the
// pruning is uncertified and the caller did not opt in.
bool gate_uncertified(const ClassificationResult& cls, bool allow, std::ostream& err) {
    if (cls.certified)
        return true;
    if (!allow) {
        err << "error: result would rely on uncertified pruning (gauge rank > 4); "
               "pass --allow-uncertified to proceed\n";
        return false;
    }
    err << "warning: UNCERTIFIED result (lattice-scan slope bound, gauge rank > 4)\n";
    return true;
}

std::string classification_line(const ClassificationResult& cls) {
    std::string out = to_string(cls.kind);
    std::string detail;
    if (cls.min_exponent)
        detail = "min exponent " + std::to_string(*cls.min_exponent);
    if (cls.witness) {
        if (!detail.empty())
            detail += ", ";
        detail += "witness " + format_coweight(cls.witness->coords);
    }
    if (!detail.empty())
        out += " (" + detail + ")";
    return out;
}

int cmd_hilbert(const std::string& path, int degree, const std::string& format,
                bool allow_uncertified, std::ostream& out, std::ostream& err) {
    const ParsedInput input = parse_theory_file(read_file(path));
    const Theory theory = to_plain_theory(input);
    const ClassificationResult cls = classify(theory);
    if (cls.kind == TheoryClass::Bad) {
        err << "error: monopole sum diverges: " << classification_line(cls) << "\n";
        return kExitDivergent;
    }
    if (!gate_uncertified(cls, allow_uncertified, err))
        return kExitUncertified;
    const HilbertResult result = compute_hilbert_series(theory, degree);
    if (format == "csv")
        out << series_to_csv(result.series);
    else
        out << series_to_text(result.series) << "\n";
    return kExitOk;
}

int cmd_classify(const std::string& path, bool allow_uncertified, std::ostream& out,
                 std::ostream& err) {
    const ParsedInput input = parse_theory_file(read_file(path));
    const Theory theory = to_plain_theory(input);
    const ClassificationResult cls = classify(theory);
    if (!gate_uncertified(cls, allow_uncertified, err))
        return kExitUncertified;
    out << classification_line(cls) << "\n";
    out << "min slope: " << format_rational(cls.min_slope) << "\n";
    return cls.kind == TheoryClass::Bad ? kExitDivergent : kExitOk;
}

int cmd_mirror_check(const std::string& path, int degree, bool allow_uncertified,
                     std::ostream& out, std::ostream& err) {
    const ParsedInput input = parse_theory_file(read_file(path));
    const auto* charges = std::get_if<ChargeData>(&input);
    if (!charges)
        throw ValidationError("mirror-check requires a charges file");
    const ClassificationResult cls = classify(toric_to_theory(*charges));
    if (cls.kind == TheoryClass::Bad) {
        err << "error: Coulomb side diverges: " << classification_line(cls) << "\n";
        return kExitDivergent;
    }
    if (!gate_uncertified(cls, allow_uncertified, err))
        return kExitUncertified;
    const MirrorReport report = mirror_check(*charges, degree);
    if (report.equal) {
        out << "EQUAL up to t^" << degree << "\n";
    } else {
        out << "MISMATCH at t^" << *report.first_mismatch_degree << "\n";
    }
    out << "coulomb: " << series_to_text(report.lhs) << "\n";
    out << "higgs dual: " << series_to_text(report.rhs) << "\n";
    return report.equal ? kExitOk : kExitMirrorMismatch;
}

int cmd_slice(const std::string& path, int degree, bool allow_uncertified,
              std::ostream& out, std::ostream& err) {
    const ParsedInput input = parse_theory_file(read_file(path));
    const auto* pq = std::get_if<ParsedQuiver>(&input);
    if (!pq)
        throw ValidationError("slice requires a quiver file");
    if (pq->quiver.edges.empty() && pq->flavor_rank > 1)
        err << "note: quiver file lists no edges\n";
    const SliceReport report = slice_report(pq->quiver, pq->flavor_series,
                                            pq->flavor_rank, degree);
    if (report.classification && !gate_uncertified(*report.classification,
                                                   allow_uncertified, err))
        return kExitUncertified;

    const SliceData& d = report.data;
    out << "flavor: " << series_to_char(d.flavor_series) << d.flavor_rank << "\n";
    out << "lambda: " << format_intvec(d.lambda.coords) << " (fundamental)\n";
    out << "mu: " << format_intvec(d.mu.coords) << " (fundamental)\n";
    out << "alpha: " << format_intvec(d.alpha.coords) << " (simple roots)\n";
    out << "nonempty: " << (d.nonempty ? "yes" : "no") << "\n";
    if (d.nonempty)
        out << "dim: " << d.dim << "\n";
    out << "fixed point: "
        << (d.has_fixed_point
                ? "yes (multiplicity " + std::to_string(d.fixed_point_multiplicity) + ")"
                : "no")
        << "\n";
    if (report.classification)
        out << "classification: " << classification_line(*report.classification) << "\n";
    if (report.monopole_diverged) {
        out << "monopole series: diverges (witness "
            << format_coweight(report.divergence_witness) << ")\n";
        return kExitDivergent;
    }
    out << "series: " << series_to_text(*report.series) << "\n";
    if (report.pole_order_estimate)
        out << "pole order estimate: " << *report.pole_order_estimate << "\n";
    return kExitOk;
}

int cmd_lie_degrees(const std::string& series_str, int rank, int cap, std::ostream& out) {
    if (series_str.size() != 1)
        throw ValidationError("series must be a single letter A..G");
    const RootSystem rs = RootSystem::build(series_from_char(series_str[0]), rank);
    const WeylDegrees deg = weyl_molien_degrees(rs, cap);
    out << "degrees:";
    for (int d : deg.degrees)
        out << " " << d;
    out << "\nexponents:";
    for (int e : deg.exponents)
        out << " " << e;
    out << "\n";
    return kExitOk;
}

} // namespace

int run_command(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Coulomb branch Hilbert series via the monopole formula"};
    app.name("monopole");
    app.require_subcommand(1);

    std::string theory_path, charges_path, quiver_path, series_str;
    std::string format = "text";
    int degree = 0, rank = 0, cap = 64;
    bool allow_uncertified = false;

    auto* hilbert = app.add_subcommand("hilbert", "monopole-formula Hilbert series");
    hilbert->add_option("--theory", theory_path, "theory file")->required();
    hilbert->add_option("--degree", degree, "truncation degree")->required();
    hilbert->add_option("--format", format, "text|csv")
        ->check(CLI::IsMember({"text", "csv"}));
    hilbert->add_flag("--allow-uncertified", allow_uncertified);

    auto* classify_cmd = app.add_subcommand("classify", "Good/Ugly/Bad classification");
    classify_cmd->add_option("--theory", theory_path, "theory file")->required();
    classify_cmd->add_flag("--allow-uncertified", allow_uncertified);

    auto* mirror = app.add_subcommand("mirror-check",
                                      "toric Coulomb/Higgs mirror comparison");
    mirror->add_option("--charges", charges_path, "charges file")->required();
    mirror->add_option("--degree", degree, "truncation degree")->required();
    mirror->add_flag("--allow-uncertified", allow_uncertified);

    auto* slice = app.add_subcommand("slice", "quiver slice report");
    slice->add_option("--quiver", quiver_path, "quiver file")->required();
    slice->add_option("--degree", degree, "truncation degree")->default_val(12);
    slice->add_flag("--allow-uncertified", allow_uncertified);

    auto* lie = app.add_subcommand("lie-degrees", "Weyl invariant degrees/exponents");
    lie->add_option("--series", series_str, "A..G")->required();
    lie->add_option("--rank", rank, "rank")->required();
    lie->add_option("--cap", cap, "Molien expansion cap");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitValidation;
    }

    try {
        if (hilbert->parsed())
            return cmd_hilbert(theory_path, degree, format, allow_uncertified, out, err);
        if (classify_cmd->parsed())
            return cmd_classify(theory_path, allow_uncertified, out, err);
        if (mirror->parsed())
            return cmd_mirror_check(charges_path, degree, allow_uncertified, out, err);
        if (slice->parsed())
            return cmd_slice(quiver_path, degree, allow_uncertified, out, err);
        if (lie->parsed())
            return cmd_lie_degrees(series_str, rank, cap, out);
        err << "error: no subcommand\n";
        return kExitValidation;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const DivergenceError& e) {
        err << "error: " << e.what() << " (witness " << format_coweight(e.witness())
            << ")\n";
        return kExitDivergent;
    } catch (const CapacityError& e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    }
}

} // namespace mono
