// Command-line front end: kneading, continuants, form reduction, the
// sequence/form correspondence, Pell solving, class-group operations and
// the census/verification engine.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "zknead/census.hpp"
#include "zknead/classgroup.hpp"
#include "zknead/continuant.hpp"
#include "zknead/correspondence.hpp"
#include "zknead/error.hpp"
#include "zknead/form.hpp"
#include "zknead/pell.hpp"
#include "zknead/sequence.hpp"

namespace {

using namespace zknead;
using nlohmann::json;

json json_int(const Int& v) {
    if (v <= std::numeric_limits<std::int64_t>::max() &&
        v >= std::numeric_limits<std::int64_t>::min())
        return json(static_cast<std::int64_t>(v));
    return json(v.str());   // decimal string past 64 bits
}

json json_form(const QForm& f) { return json::array({json_int(f.A), json_int(f.B), json_int(f.C)}); }

json json_record(const CycleRecord& r) {
    json j;
    j["sum"] = r.sum;
    j["caliber"] = r.caliber;
    j["parity"] = r.parity;
    j["alternant"] = r.alternant;
    j["d"] = r.content;
    j["primitive"] = r.has_form() ? json_form(r.primitive) : json(nullptr);
    j["representative"] = r.representative;
    return j;
}

std::int64_t env_int64(const char* name, std::int64_t fallback) {
    const char* raw = std::getenv(name);
    if (!raw || !*raw) return fallback;
    try {
        return std::stoll(raw);
    } catch (...) {
        return fallback;
    }
}

void print_records(const std::vector<CycleRecord>& records, const std::string& format) {
    if (format == "csv") {
        std::cout << records_to_csv(records);
    } else if (format == "json") {
        json j = json::array();
        for (const auto& r : records) j.push_back(json_record(r));
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& r : records) {
            std::cout << "sum=" << r.sum << " caliber=" << r.caliber << " parity=" << r.parity
                      << " alternant=" << r.alternant;
            if (r.has_form())
                std::cout << " d=" << r.content << " primitive=(" << format_form(r.primitive)
                          << ")";
            else
                std::cout << " d=- primitive=-";
            std::cout << " representative=" << format_seq(r.representative) << "\n";
        }
    }
}

int print_report(const VerifyReport& rep, const std::string& format) {
    if (format == "json") {
        std::cout << report_to_json(rep) << "\n";
    } else {
        std::cout << rep.conjecture << ": checked " << rep.cycles_checked << " cycles up to "
                  << rep.range_max << " in " << rep.elapsed_seconds << " s, "
                  << rep.violations.size() << " violation(s)\n";
        for (const auto& v : rep.violations) std::cout << "  " << v << "\n";
    }
    return rep.ok() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"kneading sequences and Zagier-reduced quadratic forms"};
    app.require_subcommand(1);
    app.fallthrough(true);   // accept global flags after the subcommand

    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();

    int workers = static_cast<int>(env_int64("ZKNEAD_WORKERS", 0));

    // knead
    std::string knead_seq;
    std::int64_t knead_steps = 1;
    bool knead_cycle = false;
    auto* cmd_knead = app.add_subcommand("knead", "knead a sequence");
    cmd_knead->add_option("sequence", knead_seq, "comma-separated entries")->required();
    cmd_knead->add_option("--steps", knead_steps, "number of kneading steps");
    cmd_knead->add_flag("--cycle", knead_cycle, "print the whole kneading cycle");

    // alternant
    std::string alt_seq;
    auto* cmd_alt = app.add_subcommand("alternant", "alternant of a sequence");
    cmd_alt->add_option("sequence", alt_seq)->required();

    // cf
    std::string cf_fraction;
    int cf_parity = 0;
    auto* cmd_cf = app.add_subcommand("cf", "continued fraction with chosen length parity");
    cmd_cf->add_option("fraction", cf_fraction, "NUM,DEN")->required();
    cmd_cf->add_option("--parity", cf_parity, "length parity (0 or 1)")->required();

    // phi
    std::string phi_seq;
    auto* cmd_phi = app.add_subcommand("phi", "form attached to a sequence");
    cmd_phi->add_option("sequence", phi_seq)->required();

    // psi
    std::string psi_form, psi_a;
    int psi_s = 0;
    auto* cmd_psi = app.add_subcommand("psi", "sequence attached to a reduced form");
    cmd_psi->add_option("form", psi_form, "A,B,C")->required();
    cmd_psi->add_option("--a", psi_a, "alternant of the spec")->required();
    cmd_psi->add_option("--s", psi_s, "length parity of the spec")->required();

    // reduce
    std::string reduce_form;
    std::int64_t reduce_steps = 1;
    bool reduce_cycle = false, via_kneading = false;
    auto* cmd_reduce = app.add_subcommand("reduce", "Zagier reduction steps");
    cmd_reduce->add_option("form", reduce_form, "A,B,C")->required();
    cmd_reduce->add_option("--steps", reduce_steps, "number of reduction steps");
    cmd_reduce->add_flag("--cycle", reduce_cycle, "print the reduction cycle");
    cmd_reduce->add_flag("--via-kneading", via_kneading, "reduce through the Pell rescaling trick");

    // enumerate
    std::string enum_d;
    auto* cmd_enum = app.add_subcommand("enumerate", "all Zagier-reduced forms of a discriminant");
    cmd_enum->add_option("--d", enum_d, "discriminant")->required();

    // classes
    std::string classes_d;
    auto* cmd_classes = app.add_subcommand("classes", "primitive form classes of a discriminant");
    cmd_classes->add_option("--d", classes_d, "discriminant")->required();

    // compose
    std::string comp_f1, comp_f2, comp_d;
    auto* cmd_compose = app.add_subcommand("compose", "Gauss composition of two primitive forms");
    cmd_compose->add_option("form1", comp_f1, "A,B,C")->required();
    cmd_compose->add_option("form2", comp_f2, "A,B,C")->required();
    cmd_compose->add_option("--d", comp_d, "common discriminant")->required();

    // pell
    std::string pell_d;
    auto* cmd_pell = app.add_subcommand("pell", "solve x^2 - D y^2 = 4");
    cmd_pell->add_option("--d", pell_d, "positive nonsquare D")->required();

    // census
    std::int64_t census_n = 0;
    int census_parity = -1;
    auto* cmd_census = app.add_subcommand("census", "kneading cycles of all compositions of n");
    cmd_census->add_option("--n", census_n, "sum of the compositions")->required();
    cmd_census->add_option("--parity", census_parity, "keep one length parity (0 or 1)");
    cmd_census->add_option("--workers", workers, "worker threads (0 = all)");

    // short-cycles
    std::int64_t short_max = env_int64("ZKNEAD_N_MAX", 26);
    auto* cmd_short = app.add_subcommand("short-cycles", "even cycles with caliber < sum-1");
    cmd_short->add_option("--max-sum", short_max, "largest sum to census");
    cmd_short->add_option("--workers", workers, "worker threads (0 = all)");

    // verify
    std::string verify_what;
    std::int64_t verify_max = -1;
    auto* cmd_verify = app.add_subcommand("verify", "check a conjecture or lemma exhaustively");
    cmd_verify->add_option("conjecture", verify_what, "divisor | formula | composition | sum-bound")
        ->required()
        ->check(CLI::IsMember({"divisor", "formula", "composition", "sum-bound"}));
    cmd_verify->add_option("--max", verify_max, "range bound");
    cmd_verify->add_option("--workers", workers, "worker threads (0 = all)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*cmd_knead) {
            Seq s = parse_seq(knead_seq);
            if (knead_cycle) {
                for (const Seq& member : kneading_cycle(s)) std::cout << format_seq(member) << "\n";
            } else {
                for (std::int64_t i = 0; i < knead_steps; ++i) s = knead(std::move(s));
                std::cout << format_seq(s) << "\n";
            }
        } else if (*cmd_alt) {
            std::cout << alternant(parse_seq(alt_seq)).str() << "\n";
        } else if (*cmd_cf) {
            QForm nd = [&] {
                auto comma = cf_fraction.find(',');
                if (comma == std::string::npos) fail(errc::parse_error, "cf expects NUM,DEN");
                return QForm{parse_int(std::string_view(cf_fraction).substr(0, comma)),
                             parse_int(std::string_view(cf_fraction).substr(comma + 1)), 0};
            }();
            std::cout << format_seq(cf_expand(nd.A, nd.B, cf_parity)) << "\n";
        } else if (*cmd_phi) {
            std::cout << format_form(phi(parse_seq(phi_seq))) << "\n";
        } else if (*cmd_psi) {
            DiscSpec spec{parse_int(psi_a), psi_s};
            std::cout << format_seq(psi(parse_form(psi_form), spec)) << "\n";
        } else if (*cmd_reduce) {
            QForm f = parse_form(reduce_form);
            if (reduce_cycle) {
                for (const QForm& g : reduction_cycle(reduce_to_reduced(f).first))
                    std::cout << format_form(g) << "\n";
            } else {
                for (std::int64_t i = 0; i < reduce_steps; ++i)
                    f = via_kneading ? reduce_via_kneading(f) : reduce_step_any(f);
                std::cout << format_form(f) << "\n";
            }
        } else if (*cmd_enum) {
            for (const QForm& f : enumerate_reduced(parse_int(enum_d)))
                std::cout << format_form(f) << "\n";
        } else if (*cmd_classes) {
            for (const FormClass& c : class_list(parse_int(classes_d)))
                std::cout << format_form(c.representative) << "\n";
        } else if (*cmd_compose) {
            Int D = parse_int(comp_d);
            QForm f1 = parse_form(comp_f1), f2 = parse_form(comp_f2);
            if (discriminant(f1) != D || discriminant(f2) != D)
                fail(errc::discriminant_mismatch, "forms do not have discriminant --d");
            std::cout << format_form(compose(class_of(f1), class_of(f2)).representative) << "\n";
        } else if (*cmd_pell) {
            PellSolution sol = pell4(parse_int(pell_d));
            if (format == "json") {
                json j;
                j["x"] = json_int(sol.x);
                j["y"] = json_int(sol.y);
                std::cout << j.dump() << "\n";
            } else {
                std::cout << sol.x.str() << " " << sol.y.str() << "\n";
            }
        } else if (*cmd_census) {
            CensusOptions opt;
            opt.workers = workers;
            if (census_parity == 0 || census_parity == 1) opt.parity = census_parity;
            print_records(cycle_census(census_n, opt), format);
        } else if (*cmd_short) {
            CensusOptions opt;
            opt.workers = workers;
            print_records(short_cycle_table(short_max, opt), format == "text" ? "csv" : format);
        } else if (*cmd_verify) {
            CensusOptions opt;
            opt.workers = workers;
            VerifyReport rep;
            if (verify_what == "divisor")
                rep = verify_divisor_conjecture(
                    verify_max > 0 ? verify_max : env_int64("ZKNEAD_N_MAX", 26), opt);
            else if (verify_what == "formula")
                rep = verify_formula_conjecture(
                    verify_max > 0 ? verify_max : env_int64("ZKNEAD_N_MAX", 26), opt);
            else if (verify_what == "composition")
                rep = verify_composition_conjecture(
                    verify_max > 0 ? verify_max : env_int64("ZKNEAD_A_MAX", 60));
            else
                rep = sum_bound_check(verify_max > 0 ? verify_max
                                                     : env_int64("ZKNEAD_A_MAX", 60));
            return print_report(rep, format);
        }
    } catch (const error& e) {
        std::cerr << "error (" << errc_name(e.code()) << "): " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
