// Command-line front end: curve ingestion (spec file, preset, or defining
// equation), the gap/semigroup/symmetry/Gamma computations, membership
// queries, the factorization view, and the closed-form-vs-oracle check
// harness.
//
// Exit codes: 0 success, 2 validation or parse failure, 3 computation error,
// 4 place-tuple size out of range, 5 check disagreement.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kummer/kummer.hpp"

namespace {

using namespace kummer;
using nlohmann::json;

struct ExitWith {
    int code;
    std::string message;
};

struct InputOptions {
    std::string file;
    std::string preset;
    std::string equation;
    long long field_q = 0;
    long long override_q = 0;
    long long seed = 0;
};

void add_input_flags(CLI::App* cmd, InputOptions& in, bool equation_allowed = true) {
    cmd->add_option("--file", in.file, "curve spec document (key-value or JSON)");
    cmd->add_option("--preset", in.preset, "preset curve, e.g. ggs:2,3 or eqmult:6,5,1");
    if (equation_allowed) {
        cmd->add_option("--eq", in.equation, "defining equation y^m = f(x)");
        cmd->add_option("--field", in.field_q, "field size q for --eq");
    }
    cmd->add_option("--q", in.override_q, "attach this base field size to the curve");
    cmd->add_option("--seed", in.seed, "seed for randomized factoring")->default_val(0);
}

std::vector<Int> parse_int_list(const std::string& text, const std::string& what) {
    std::vector<Int> out;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        if (token.empty()) throw ExitWith{2, "empty entry in " + what};
        try {
            out.push_back(specdetail::parse_int_token(token, what));
        } catch (const std::exception& e) {
            throw ExitWith{2, e.what()};
        }
    }
    if (out.empty()) throw ExitWith{2, what + " must be a comma-separated integer list"};
    return out;
}

CurveData load_curve(const InputOptions& in) {
    int sources = (!in.file.empty()) + (!in.preset.empty()) + (!in.equation.empty());
    if (sources != 1)
        throw ExitWith{2, "give exactly one input source: --file, --preset, or --eq/--field"};
    try {
        CurveData c;
        if (!in.file.empty()) {
            std::ifstream f(in.file);
            if (!f) throw ExitWith{2, "cannot open " + in.file};
            std::stringstream buf;
            buf << f.rdbuf();
            c = parse_curve_document(buf.str());
        } else if (!in.preset.empty()) {
            size_t colon = in.preset.find(':');
            if (colon == std::string::npos)
                throw ExitWith{2, "preset must look like name:arg1,arg2,..."};
            c = make_preset(in.preset.substr(0, colon),
                            parse_int_list(in.preset.substr(colon + 1), "preset arguments"));
        } else {
            if (in.field_q < 2) throw ExitWith{2, "--eq needs --field <prime power>"};
            FieldSpec F = field_spec(Int(in.field_q));
            c = curve_from_equation(in.equation, F, static_cast<uint64_t>(in.seed)).curve;
        }
        if (in.override_q > 0) c.base_field_q = Int(in.override_q);
        return c;
    } catch (const ExitWith&) {
        throw;
    } catch (const parse_error& e) {
        throw ExitWith{2, std::string("parse error: ") + e.what()};
    } catch (const std::exception& e) {
        throw ExitWith{2, e.what()};
    }
}

// Validation gate: print the report and stop with exit 2 when invalid.
ValidationReport require_valid_or_exit(const CurveData& c, bool json_output) {
    ValidationReport rep = validate(c);
    if (!rep.ok()) {
        if (json_output) {
            std::cout << json{{"validation", validation_to_json(rep)}}.dump(2) << "\n";
        } else {
            std::cerr << "curve is invalid:\n";
            for (const auto& is : rep.issues)
                if (is.is_error) std::cerr << "  error: " << is.message << " [" << is.hypothesis << "]\n";
        }
        throw ExitWith{2, ""};
    }
    return rep;
}

std::vector<PlaceRef> select_places(const CurveData& c, const ValidationReport& rep,
                                    const std::vector<long long>& requested) {
    if (requested.empty()) return rep.ramified_places;
    std::vector<PlaceRef> out;
    for (long long idx : requested) {
        PlaceRef p{static_cast<int>(idx)};
        try {
            require_admissible(c, p);
        } catch (const std::exception& e) {
            throw ExitWith{2, e.what()};
        }
        out.push_back(p);
    }
    return out;
}

std::vector<PlaceRef> parse_place_tuple(const CurveData& c, const std::string& places_arg) {
    std::vector<PlaceRef> places;
    for (Int idx : parse_int_list(places_arg, "--places")) {
        PlaceRef p{static_cast<int>(idx.to_i64())};
        try {
            require_admissible(c, p);
        } catch (const std::exception& e) {
            throw ExitWith{2, e.what()};
        }
        places.push_back(p);
    }
    return places;
}

int run_gaps(const CurveData& c, const std::vector<long long>& place_args, bool json_output) {
    ValidationReport rep = require_valid_or_exit(c, json_output);
    std::vector<PlaceRef> places = select_places(c, rep, place_args);
    Int g = genus(c);
    json out{{"curve", curve_to_json(c)}, {"genus", g.to_i64()}, {"places", json::array()}};
    for (PlaceRef p : places) {
        OnePointResult r = one_point(c, p);
        out["places"].push_back(one_point_to_json(r));
        if (!json_output) {
            std::cout << "place Q_" << p.index << " (" << c.label_at(p.index) << ")\n";
            std::cout << "  genus       " << g << "\n";
            std::cout << "  gaps        " << int_list_to_string(r.gaps) << "\n";
            std::cout << "  multiplicity " << r.multiplicity << "\n";
            std::cout << "  frobenius   " << (r.frobenius ? r.frobenius->str() : "none") << "\n";
            std::cout << "  symmetric   " << (r.symmetric ? "true" : "false") << "\n";
        }
    }
    if (json_output) std::cout << out.dump(2) << "\n";
    return 0;
}

int run_semigroup(const CurveData& c, const std::vector<long long>& place_args, bool json_output) {
    ValidationReport rep = require_valid_or_exit(c, json_output);
    std::vector<PlaceRef> places = select_places(c, rep, place_args);
    json out{{"curve", curve_to_json(c)}, {"places", json::array()}};
    for (PlaceRef p : places) {
        std::vector<Int> gens = generators(c, p);
        NumericalSemigroup S = NumericalSemigroup::from_generators(gens);
        std::vector<Int> minimal = S.minimal_generators();
        std::vector<Int> apery = S.apery_set(S.multiplicity());
        json jp{{"place", p.index},
                {"generators", int_list_to_json(gens)},
                {"minimal_generators", int_list_to_json(minimal)},
                {"multiplicity", S.multiplicity().to_i64()},
                {"apery_multiplicity", int_list_to_json(apery)},
                {"genus", S.genus().to_i64()}};
        jp["frobenius"] = S.frobenius() ? json(S.frobenius()->to_i64()) : json(nullptr);
        out["places"].push_back(jp);
        if (!json_output) {
            std::cout << "place Q_" << p.index << "\n";
            std::cout << "  generators          " << int_list_to_string(gens) << "\n";
            std::cout << "  minimal generators  " << int_list_to_string(minimal) << "\n";
            std::cout << "  apery(multiplicity) " << int_list_to_string(apery) << "\n";
        }
    }
    if (json_output) std::cout << out.dump(2) << "\n";
    return 0;
}

int run_symmetry(const CurveData& c, const std::vector<long long>& place_args, bool json_output) {
    ValidationReport rep = require_valid_or_exit(c, json_output);
    std::vector<PlaceRef> places = select_places(c, rep, place_args);
    json out{{"curve", curve_to_json(c)}, {"places", json::array()}};
    for (PlaceRef p : places) {
        bool sym = is_symmetric(c, p);
        FastSymmetryConditions fc = fast_symmetry_conditions(c, p);
        json jp{{"place", p.index}, {"symmetric", sym}, {"condition1", fc.condition1}};
        jp["condition2"] = fc.condition2 ? json(*fc.condition2) : json(nullptr);
        out["places"].push_back(jp);
        if (!json_output) {
            std::cout << "place Q_" << p.index << ": symmetric = " << (sym ? "true" : "false")
                      << "  condition1 = " << (fc.condition1 ? "true" : "false") << "  condition2 = "
                      << (fc.condition2 ? (*fc.condition2 ? "true" : "false") : "undefined") << "\n";
        }
    }
    if (json_output) std::cout << out.dump(2) << "\n";
    return 0;
}

int run_gamma(const CurveData& c, const std::string& places_arg, std::optional<Int> lambda,
              bool tilde, std::optional<Int> box, bool with_witness, bool json_output) {
    require_valid_or_exit(c, json_output);
    std::vector<PlaceRef> places = parse_place_tuple(c, places_arg);
    try {
        if (tilde) {
            TupleSet ts = tilde_gamma(c, places, box);
            json out{{"box", (box ? *box : Int(2) * genus(c)).to_i64()}, {"elements", json::array()}};
            for (const auto& t : ts.elements) out["elements"].push_back(int_list_to_json(t));
            if (json_output) {
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << "tilde-Gamma within [0, " << out["box"].get<long long>() << "], "
                          << ts.elements.size() << " elements\n";
                for (const auto& t : ts.elements) std::cout << tuple_to_string(t) << "\n";
            }
            return 0;
        }
        std::vector<GammaElement> els = gamma(c, places, lambda);
        json out{{"lambda", (lambda ? *lambda : mod_inverse(c.lambda_at(places[0].index), c.m)).to_i64()},
                 {"elements", json::array()}};
        for (const auto& el : els) out["elements"].push_back(gamma_element_to_json(el));
        if (json_output) {
            std::cout << out.dump(2) << "\n";
        } else {
            if (els.empty()) {
                std::cout << "empty\n";
            } else {
                std::cout << "Gamma at places";
                for (PlaceRef p : places) std::cout << " Q_" << p.index;
                std::cout << ", " << els.size() << " elements\n";
                for (const auto& el : els) {
                    std::cout << tuple_to_string(el.tuple);
                    if (with_witness) std::cout << "    " << witness_to_string(c, el.witness);
                    std::cout << "\n";
                }
            }
        }
        return 0;
    } catch (const domain_error& e) {
        std::string msg = e.what();
        if (msg.find("exceeds rbar") != std::string::npos || msg.find("at least two places") != std::string::npos)
            throw ExitWith{4, msg};
        throw;
    }
}

int run_membership(const CurveData& c, const std::string& places_arg, const std::string& tuple_arg,
                   std::optional<Int> box, bool json_output) {
    require_valid_or_exit(c, json_output);
    std::vector<PlaceRef> places = parse_place_tuple(c, places_arg);
    std::vector<Int> tuple = parse_int_list(tuple_arg, "--tuple");
    if (tuple.size() != places.size()) throw ExitWith{2, "--tuple length must match --places"};
    bool via_lub = membership_via_lub(c, places, tuple, box ? *box : Int(2) * genus(c));
    bool via_oracle = is_in_H(c, places, tuple);
    json out{{"tuple", int_list_to_json(tuple)},
             {"in_H_lub", via_lub},
             {"in_H_oracle", via_oracle}};
    if (json_output)
        std::cout << out.dump(2) << "\n";
    else
        std::cout << tuple_to_string(tuple) << (via_lub ? " is in H" : " is not in H")
                  << " (lub reconstruction; oracle " << (via_oracle ? "agrees" : "DISAGREES") << ")\n";
    return via_lub == via_oracle ? 0 : 5;
}

int run_factor(const InputOptions& in, bool json_output) {
    if (in.equation.empty() || in.field_q < 2) throw ExitWith{2, "factor needs --eq and --field"};
    FieldSpec F = field_spec(Int(in.field_q));
    auto [m, num, den] = parse_equation(in.equation, F);
    Factorization nf = factor(num, F, static_cast<uint64_t>(in.seed));
    Factorization df =
        den.deg() >= 1 ? factor(den, F, static_cast<uint64_t>(in.seed)) : Factorization{};
    EquationCurve ec = to_curve(m, nf, df, F);

    json out;
    out["m"] = m.to_i64();
    out["field"] = {{"p", F.p}, {"k", F.k}, {"q", F.q}};
    json jmod = json::array();
    for (int v : F.modulus) jmod.push_back(v);
    out["field"]["modulus"] = jmod;
    out["leading"] = nf.leading;
    out["branches"] = json::array();
    for (int i = 1; i <= ec.curve.r(); ++i) {
        const Branch& b = ec.curve.branches[static_cast<size_t>(i - 1)];
        out["branches"].push_back({{"index", i},
                                   {"factor", b.label},
                                   {"lambda", b.lambda.to_i64()},
                                   {"degree", b.degree.to_i64()}});
    }
    out["lambda0"] = ec.curve.lambda0().to_i64();
    out["validation"] = validation_to_json(ec.report);
    if (ec.report.ok()) out["genus"] = genus(ec.curve).to_i64();

    if (json_output) {
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "y^" << m << " = f(x) over F_" << F.q << " (p = " << F.p << ", k = " << F.k
                  << ")\n";
        std::cout << "branch table (lambda, degree, factor):\n";
        for (int i = 1; i <= ec.curve.r(); ++i) {
            const Branch& b = ec.curve.branches[static_cast<size_t>(i - 1)];
            std::cout << "  " << i << ": (" << b.lambda << ", " << b.degree << ")  " << b.label
                      << "\n";
        }
        std::cout << "lambda_0 = " << ec.curve.lambda0() << "\n";
        if (ec.report.ok()) std::cout << "genus = " << genus(ec.curve) << "\n";
    }
    if (!ec.report.ok()) {
        for (const auto& is : ec.report.issues)
            if (is.is_error) std::cerr << "error: " << is.message << "\n";
        return 2;
    }
    return 0;
}

// Oracle-vs-closed-form harness. Exit 0 only when every comparison agrees;
// any disagreement signals an implementation bug and exits 5.
int run_check(const CurveData& c, const std::string& places_arg, Int genus_cap, int s_cap,
              bool json_output) {
    ValidationReport rep = require_valid_or_exit(c, json_output);
    Int g = genus(c);
    if (g > genus_cap)
        throw ExitWith{3, "genus " + g.str() + " exceeds --max-genus " + genus_cap.str()};

    json checks = json::array();
    bool all_ok = true;
    auto record = [&](const std::string& name, bool ok, const std::string& detail) {
        checks.push_back({{"name", name}, {"ok", ok}, {"detail", detail}});
        all_ok = all_ok && ok;
        if (!json_output)
            std::cout << (ok ? "ok      " : "MISMATCH") << "  " << name
                      << (detail.empty() ? "" : "  " + detail) << "\n";
    };

    // Gap sets per admissible place.
    for (PlaceRef p : rep.ramified_places) {
        std::vector<Int> closed = gap_set(c, p);
        std::vector<Int> oracle = brute_force_gaps(c, p);
        bool ok = closed == oracle;
        std::string detail;
        if (!ok)
            detail = "closed " + int_list_to_string(closed) + " vs oracle " + int_list_to_string(oracle);
        record("gap_set(Q_" + std::to_string(p.index) + ")", ok, detail);
        record("gap count (Q_" + std::to_string(p.index) + ") equals genus",
               Int(static_cast<long long>(closed.size())) == g, "");
    }

    // Gamma on the requested tuple, or on default small tuples.
    std::vector<std::vector<PlaceRef>> tuples;
    if (!places_arg.empty()) {
        tuples.push_back(parse_place_tuple(c, places_arg));
    } else {
        const auto& adm = rep.ramified_places;
        for (size_t a = 0; a < adm.size(); ++a)
            for (size_t b = a + 1; b < adm.size(); ++b) tuples.push_back({adm[a], adm[b]});
        if (adm.size() >= 3) tuples.push_back({adm[0], adm[1], adm[2]});
    }
    BruteForceCaps caps{genus_cap, s_cap};
    for (const auto& places : tuples) {
        if (places.size() > static_cast<size_t>(s_cap) + 1)
            throw ExitWith{4, "requested tuple exceeds --max-s"};
        std::string label = "gamma(";
        for (size_t i = 0; i < places.size(); ++i)
            label += (i ? ",Q_" : "Q_") + std::to_string(places[i].index);
        label += ")";
        std::vector<GammaElement> closed;
        try {
            closed = gamma(c, places);
        } catch (const domain_error& e) {
            std::string msg = e.what();
            if (msg.find("exceeds rbar") != std::string::npos) throw ExitWith{4, msg};
            throw;
        }
        TupleSet oracle = brute_force_gamma(c, places, caps);
        std::vector<std::vector<Int>> closed_tuples;
        for (const auto& el : closed) closed_tuples.push_back(el.tuple);
        bool ok = closed_tuples == oracle.elements;
        std::string detail = "size " + std::to_string(closed.size());
        record(label, ok, detail);

        bool witness_ok = true;
        for (const auto& el : closed)
            if (!verify_witness(c, el.witness, places, el.tuple)) witness_ok = false;
        record(label + " witnesses", witness_ok, "");
    }

    if (json_output)
        std::cout << json{{"checks", checks}, {"all_ok", all_ok}}.dump(2) << "\n";
    else
        std::cout << (all_ok ? "all checks passed" : "CHECK FAILED") << "\n";
    return all_ok ? 0 : 5;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Weierstrass gap sets, semigroups, symmetry, and minimal generating sets at totally\n"
        "ramified degree-one places of Kummer extensions y^m = f(x), cross-validated against\n"
        "a Riemann-Roch dimension oracle."};
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    InputOptions in;
    std::vector<long long> place_args;
    std::string places_arg, tuple_arg;
    long long lambda_arg = 0, box_arg = -1;
    bool lambda_set = false, tilde = false, with_witness = false;
    long long max_genus = 60;
    long long max_s = 5;

    CLI::App* cmd_gaps = app.add_subcommand("gaps", "gap set, multiplicity, Frobenius, symmetry");
    add_input_flags(cmd_gaps, in);
    cmd_gaps->add_option("--place", place_args, "place index (repeatable; default all admissible)");

    CLI::App* cmd_semigroup =
        app.add_subcommand("semigroup", "generators, minimal generators, Apery set");
    add_input_flags(cmd_semigroup, in);
    cmd_semigroup->add_option("--place", place_args, "place index (repeatable)");

    CLI::App* cmd_symmetry = app.add_subcommand("symmetry", "symmetry flag and fast conditions");
    add_input_flags(cmd_symmetry, in);
    cmd_symmetry->add_option("--place", place_args, "place index (repeatable)");

    CLI::App* cmd_gamma = app.add_subcommand("gamma", "Gamma at several places");
    add_input_flags(cmd_gamma, in);
    cmd_gamma->add_option("--places", places_arg, "comma-separated place indices")->required();
    CLI::Option* lambda_opt = cmd_gamma->add_option("--lambda", lambda_arg, "free lambda parameter");
    cmd_gamma->add_flag("--tilde", tilde, "print the minimal generating set within --box");
    cmd_gamma->add_option("--box", box_arg, "box bound for --tilde (default 2g)");
    cmd_gamma->add_flag("--witness", with_witness, "print witness functions");

    CLI::App* cmd_membership = app.add_subcommand("membership", "test a tuple for membership in H");
    add_input_flags(cmd_membership, in);
    cmd_membership->add_option("--places", places_arg, "comma-separated place indices")->required();
    cmd_membership->add_option("--tuple", tuple_arg, "comma-separated pole orders")->required();
    cmd_membership->add_option("--box", box_arg, "lub box bound (default 2g)");

    CLI::App* cmd_check = app.add_subcommand("check", "closed form vs oracle harness");
    add_input_flags(cmd_check, in);
    cmd_check->add_option("--places", places_arg, "place tuple to check (default: small tuples)");
    cmd_check->add_option("--max-genus", max_genus, "brute-force genus cap")->capture_default_str();
    cmd_check->add_option("--max-s", max_s, "brute-force s cap")->capture_default_str();

    CLI::App* cmd_factor = app.add_subcommand("factor", "factor a defining equation");
    add_input_flags(cmd_factor, in);

    CLI::App* cmd_preset = app.add_subcommand("preset", "preset curves");
    CLI::App* cmd_preset_list = cmd_preset->add_subcommand("list", "list available presets");

    CLI11_PARSE(app, argc, argv);
    bool json_output = format == "json";
    lambda_set = lambda_opt->count() > 0;

    try {
        if (cmd_preset->parsed()) {
            if (!cmd_preset_list->parsed()) {
                std::cerr << "usage: kummer preset list\n";
                return 2;
            }
            for (const auto& [name, desc] : preset_catalog())
                std::cout << name << "  " << desc << "\n";
            return 0;
        }
        if (cmd_factor->parsed()) return run_factor(in, json_output);

        CurveData c = load_curve(in);
        std::optional<Int> lambda = lambda_set ? std::optional<Int>(Int(lambda_arg)) : std::nullopt;
        std::optional<Int> box = box_arg >= 0 ? std::optional<Int>(Int(box_arg)) : std::nullopt;

        if (cmd_gaps->parsed()) return run_gaps(c, place_args, json_output);
        if (cmd_semigroup->parsed()) return run_semigroup(c, place_args, json_output);
        if (cmd_symmetry->parsed()) return run_symmetry(c, place_args, json_output);
        if (cmd_gamma->parsed())
            return run_gamma(c, places_arg, lambda, tilde, box, with_witness, json_output);
        if (cmd_membership->parsed()) return run_membership(c, places_arg, tuple_arg, box, json_output);
        if (cmd_check->parsed())
            return run_check(c, places_arg, Int(max_genus), static_cast<int>(max_s), json_output);
        std::cerr << "no subcommand\n";
        return 2;
    } catch (const ExitWith& e) {
        if (!e.message.empty()) std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const overflow_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
