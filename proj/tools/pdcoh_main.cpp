#include <bit>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "pdcoh/commands.hpp"
#include "pdcoh/errors.hpp"
#include "pdcoh/invariants.hpp"
#include "pdcoh/selftest.hpp"

namespace {

using namespace pdcoh;

struct DatumArgs {
    std::string preset;
    std::string datum_file;
};

void add_datum_options(CLI::App* cmd, DatumArgs& args) {
    cmd->fallthrough();
    cmd->add_option("--preset", args.preset,
                    "preset datum, e.g. drinfeld:2, gln_basic:2:1,0:1/2, quadric:7, split:B3:1,0,0");
    cmd->add_option("--datum", args.datum_file, "path to a JSON datum file");
}

LocalShtukaDatum resolve_datum(const DatumArgs& args) {
    if (!args.preset.empty() && !args.datum_file.empty())
        throw Error(ErrorKind::ParseError, "--preset and --datum are mutually exclusive");
    if (!args.preset.empty()) return build_preset(args.preset);
    if (!args.datum_file.empty()) return load_datum_file(args.datum_file);
    throw Error(ErrorKind::ParseError, "a datum is required: pass --preset or --datum");
}

std::uint32_t parse_subset(const std::string& text, const LocalShtukaDatum& datum) {
    if (text.empty() || text == "-") return 0;
    if (text == "all") return datum.full_subset();
    std::uint32_t mask = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t next = text.find(',', pos);
        std::string tok = text.substr(pos, next == std::string::npos ? next : next - pos);
        bool found = false;
        for (std::size_t i = 0; i < datum.j.labels.size(); ++i)
            if (datum.j.labels[i] == tok) {
                mask |= (1u << i);
                found = true;
            }
        if (!found)
            throw Error(ErrorKind::BadSubset, "unknown relative root label '" + tok + "'");
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return mask;
}

void emit(const Json& report, const std::string& human, bool machine, const std::string& out_path) {
    std::string text = machine ? serialize_machine(report) : human;
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw Error(ErrorKind::ParseError, "cannot open output file '" + out_path + "'");
        out << text;
    }
}

std::string human_header(const LocalShtukaDatum& datum) {
    std::ostringstream out;
    out << "datum: " << datum.g.spec.to_string();
    if (!datum.preset_name.empty()) out << " (" << datum.preset_name << ")";
    out << ", |W^mu| = " << datum.kset.entries.size() << ", dim F = " << datum.dim_f
        << ", relative roots: " << datum.j.labels.size() << "\n";
    return out.str();
}

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::ParseError:
            return 1;
        case ErrorKind::OrbitInconsistency:
        case ErrorKind::InternalCheckFailed:
            return 3;
        default:
            return 2;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pdcoh: exact combinatorial cohomology of p-adic period domains"};
    app.require_subcommand(1);

    bool machine = false;
    std::string out_path;
    app.add_flag("--machine", machine, "emit the machine (JSON) report");
    app.add_option("--out", out_path, "write the report to a file instead of stdout");

    DatumArgs datum_args;
    long p = 3;
    int nexp = 1;
    std::string coeff = "modp";

    auto* cmd_coh = app.add_subcommand("cohomology", "compactly supported cohomology of the period domain");
    add_datum_options(cmd_coh, datum_args);
    cmd_coh->add_option("--p", p, "prime used for the splitting-hypothesis verdict");
    cmd_coh->add_option("--n", nexp, "coefficient exponent n (Z/p^n)");
    cmd_coh->add_option("--coefficients", coeff, "modp or zp");

    auto* cmd_bd = app.add_subcommand("boundary", "cohomology of the complement of the period domain");
    add_datum_options(cmd_bd, datum_args);

    std::string subset_text = "all";
    auto* cmd_sch = app.add_subcommand("schubert", "cohomology of the Schubert variety Y_I");
    add_datum_options(cmd_sch, datum_args);
    cmd_sch->add_option("--I", subset_text, "subset of relative roots, e.g. a1,a2 or '-' or 'all'");

    int stratum_index = 1;
    auto* cmd_str = app.add_subcommand("strata", "strata of the complement at a given depth");
    add_datum_options(cmd_str, datum_args);
    cmd_str->add_option("--i", stratum_index, "stratum depth, 1 <= i <= |Delta_J|");

    int gln_n = 0;
    std::string mu_text;
    auto* cmd_kw = app.add_subcommand("kottwitz", "acceptable set for GL_n with dominance Hasse edges");
    cmd_kw->fallthrough();
    cmd_kw->add_option("--gln", gln_n, "rank n of GL_n")->required();
    cmd_kw->add_option("--mu", mu_text, "dominant integral mu, comma separated")->required();

    std::string ext_I, ext_J, ext_group = "general";
    int ext_delta = 1;
    auto* cmd_ext = app.add_subcommand("ext", "Ext^1 between generalized Steinberg representations");
    cmd_ext->fallthrough();
    cmd_ext->add_option("--delta", ext_delta, "number of relative simple roots")->required();
    cmd_ext->add_option("--I", ext_I, "subset I, e.g. a1,a3 or '-'");
    cmd_ext->add_option("--J", ext_J, "subset J");
    cmd_ext->add_option("--p", p, "prime");
    cmd_ext->add_option("--n", nexp, "coefficient exponent");
    cmd_ext->add_option("--group", ext_group, "gln or general");

    auto* cmd_chk = app.add_subcommand("check", "Euler, splitting, and invariant suites on a datum");
    add_datum_options(cmd_chk, datum_args);

    std::string golden_dir = "golden";
    auto* cmd_self = app.add_subcommand("selftest", "full preset regression and acceptance criteria");
    cmd_self->add_option("--golden-dir", golden_dir, "directory with committed machine reports");

    std::string write_golden_dir;
    auto* cmd_gold = app.add_subcommand("write-golden", "regenerate the golden machine reports");
    cmd_gold->add_option("--dir", write_golden_dir, "target directory")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_coh->parsed()) {
            LocalShtukaDatum datum = resolve_datum(datum_args);
            if (coeff != "modp" && coeff != "zp")
                throw Error(ErrorKind::ParseError, "--coefficients must be modp or zp");
            CoeffTag tag = (coeff == "zp") ? CoeffTag::Zp : CoeffTag::ModPn;
            Json report = report_cohomology(datum, tag, p, nexp);
            std::ostringstream human;
            human << human_header(datum) << "compactly supported cohomology ("
                  << (tag == CoeffTag::Zp ? "Z_p" : "Z/p^n") << "):\n"
                  << render_graded_sum(compactly_supported_cohomology(datum, tag), datum,
                                       tag == CoeffTag::Zp)
                  << render_splitting(splitting_hypothesis_check(datum, p), datum);
            emit(report, human.str(), machine, out_path);
        } else if (cmd_bd->parsed()) {
            LocalShtukaDatum datum = resolve_datum(datum_args);
            Json report = report_boundary(datum);
            GradedRepSum sum = boundary_cohomology(datum);
            std::ostringstream human;
            human << human_header(datum) << "boundary cohomology"
                  << (sum.boundary_empty ? " (empty boundary)" : "") << ":\n"
                  << render_graded_sum(sum, datum);
            emit(report, human.str(), machine, out_path);
        } else if (cmd_sch->parsed()) {
            LocalShtukaDatum datum = resolve_datum(datum_args);
            std::uint32_t mask = parse_subset(subset_text, datum);
            Json report = report_schubert(datum, mask);
            std::ostringstream human;
            human << human_header(datum) << "Schubert cohomology for I = "
                  << subset_to_string(mask, datum.j.labels) << ":\n"
                  << render_graded_sum(schubert_cohomology(datum, mask), datum);
            emit(report, human.str(), machine, out_path);
        } else if (cmd_str->parsed()) {
            LocalShtukaDatum datum = resolve_datum(datum_args);
            Json report = report_strata(datum, stratum_index);
            std::ostringstream human;
            human << human_header(datum) << "strata at depth " << stratum_index << ":\n";
            for (const auto& stratum : strata(datum, stratum_index))
                human << "  I = " << subset_to_string(stratum.subset, datum.j.labels) << "  Y_I "
                      << (stratum.nonempty ? "nonempty" : "empty") << "\n";
            emit(report, human.str(), machine, out_path);
        } else if (cmd_kw->parsed()) {
            std::vector<Int> mu;
            std::size_t pos = 0;
            while (pos <= mu_text.size()) {
                std::size_t next = mu_text.find(',', pos);
                std::string tok =
                    mu_text.substr(pos, next == std::string::npos ? next : next - pos);
                Rat q = parse_rat(tok);
                if (!is_integer(q))
                    throw Error(ErrorKind::InvalidMu, "kottwitz: mu entries must be integers");
                mu.push_back(q.get_num());
                if (next == std::string::npos) break;
                pos = next + 1;
            }
            Json report = report_kottwitz(gln_n, mu);
            std::ostringstream human;
            human << "acceptable set for GL_" << gln_n << ", mu = " << mu_text << ":\n";
            for (const auto& item : report["results"]["points"]) {
                human << "  (";
                bool first = true;
                for (const auto& x : item["nu"]) {
                    human << (first ? "" : ", ") << x.get<std::string>();
                    first = false;
                }
                human << ")  kappa = " << item["kappa"].get<std::string>()
                      << (item["basic"].get<bool>() ? "  [basic]" : "") << "\n";
            }
            human << "  Hasse edges (lower -> upper): ";
            bool first = true;
            for (const auto& e : report["results"]["hasse"]) {
                human << (first ? "" : ", ") << e["lower"].get<int>() << "->"
                      << e["upper"].get<int>();
                first = false;
            }
            human << "\n";
            emit(report, human.str(), machine, out_path);
        } else if (cmd_ext->parsed()) {
            auto parse_ext_subset = [&](const std::string& text) {
                std::uint32_t mask = 0;
                if (text.empty() || text == "-") return mask;
                std::size_t pos = 0;
                while (pos <= text.size()) {
                    std::size_t next = text.find(',', pos);
                    std::string tok = text.substr(pos, next == std::string::npos ? next : next - pos);
                    if (tok.size() < 2 || tok[0] != 'a')
                        throw Error(ErrorKind::BadSubset, "bad label '" + tok + "'");
                    int idx = std::stoi(tok.substr(1)) - 1;
                    if (idx < 0 || idx >= ext_delta)
                        throw Error(ErrorKind::BadSubset, "label out of range '" + tok + "'");
                    mask |= (1u << idx);
                    if (next == std::string::npos) break;
                    pos = next + 1;
                }
                return mask;
            };
            GroupPreset preset =
                (ext_group == "gln") ? GroupPreset::GLnD : GroupPreset::GeneralQuasiSplit;
            std::uint32_t I = parse_ext_subset(ext_I), J = parse_ext_subset(ext_J);
            Json report = report_ext(ext_delta, I, J, p, preset, nexp);
            std::ostringstream human;
            human << "Ext^1(v_I, v_J), |Delta| = " << ext_delta << ", p = " << p << ", "
                  << (preset == GroupPreset::GLnD ? "GL-type" : "general quasi-split") << "\n";
            human << "  I = " << ext_I << "  J = " << ext_J << "\n";
            human << "  Hom: " << report["results"]["hom"].get<std::string>() << "\n";
            human << "  Ext^1: " << report["results"]["ext1"]["value"].get<std::string>();
            if (report["results"]["ext1"].contains("torsion_bound"))
                human << " (torsion bound " << report["results"]["ext1"]["torsion_bound"].get<int>()
                      << ")";
            human << "\n";
            for (const auto& t : report["results"]["ext1"]["trail"])
                human << "    - " << t.get<std::string>() << "\n";
            if (report["results"].contains("hom_units_mod_pn"))
                human << "  |Hom(Q_p^*, Z/p^n)| = "
                      << report["results"]["hom_units_mod_pn"].get<std::string>() << "\n";
            emit(report, human.str(), machine, out_path);
        } else if (cmd_chk->parsed()) {
            LocalShtukaDatum datum = resolve_datum(datum_args);
            Json report = report_check(datum, {3, 5}, {1, 2});
            bool ok = report["results"]["all_pass"].get<bool>();
            std::ostringstream human;
            human << human_header(datum);
            for (const auto& item : report["results"]["euler"])
                human << "  euler p=" << item["p"].get<long>() << " n=" << item["n"].get<int>()
                      << ": " << (item["pass"].get<bool>() ? "pass" : "FAIL") << "\n";
            for (const auto& item : report["results"]["splitting"])
                human << "  splitting p=" << item["p"].get<long>() << ": "
                      << item["verdict"].get<std::string>() << "\n";
            for (const auto& item : report["results"]["invariants"])
                human << "  " << item["name"].get<std::string>() << ": "
                      << (item["pass"].get<bool>() ? "pass" : "FAIL") << "\n";
            emit(report, human.str(), machine, out_path);
            if (!ok) {
                // distinguish engine bugs from bad data: invariant failures on a
                // validated datum are internal
                return 3;
            }
        } else if (cmd_self->parsed()) {
            auto results = pdcoh::selftest::run_acceptance(golden_dir);
            bool ok = true;
            for (const auto& r : results) {
                std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << " " << r.label;
                if (!r.detail.empty()) std::cout << " -- " << r.detail;
                std::cout << " (" << r.seconds << "s)" << std::endl;
                ok = ok && r.pass;
            }
            return ok ? 0 : 3;
        } else if (cmd_gold->parsed()) {
            for (const auto& [name, text] : pdcoh::selftest::golden_reports()) {
                std::ofstream out(write_golden_dir + "/" + name, std::ios::binary);
                if (!out)
                    throw Error(ErrorKind::ParseError,
                                "cannot write golden file to '" + write_golden_dir + "'");
                out << text;
                std::cout << "wrote " << write_golden_dir << "/" << name << "\n";
            }
        }
    } catch (const Error& e) {
        std::cerr << "error (" << error_kind_name(e.kind()) << "): " << e.what() << std::endl;
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 3;
    }
    return 0;
}
