#include "milnor_hodge/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "milnor_hodge/error.hpp"
#include "milnor_hodge/hodge.hpp"
#include "milnor_hodge/json_io.hpp"
#include "milnor_hodge/projective.hpp"
#include "milnor_hodge/spectrum.hpp"
#include "milnor_hodge/strata.hpp"
#include "milnor_hodge/verify.hpp"

namespace milnor_hodge::cli {

namespace {

using json_io::json;
using json_io::to_json;

class UsageError : public Error {
public:
    using Error::Error;
};

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto b = item.find_first_not_of(" \t");
        const auto e = item.find_last_not_of(" \t");
        if (b == std::string::npos) throw ParseError("empty entry in list '" + text + "'");
        out.push_back(item.substr(b, e - b + 1));
    }
    if (out.empty()) throw ParseError("empty list");
    return out;
}

long parse_long(const std::string& text) {
    std::size_t used = 0;
    long v = 0;
    try {
        v = std::stol(text, &used);
    } catch (const std::exception&) {
        throw ParseError("expected an integer, got '" + text + "'");
    }
    if (used != text.size()) throw ParseError("expected an integer, got '" + text + "'");
    return v;
}

std::string read_source(const std::string& source) {
    const auto start = source.find_first_not_of(" \t\r\n");
    if (start != std::string::npos && (source[start] == '{' || source[start] == '[')) return source;
    std::ifstream in(source, std::ios::binary);
    if (!in) throw UsageError("cannot read input file '" + source + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json load(const std::string& source) { return json_io::parse(read_source(source)); }

std::string dump(const json& j) { return j.dump(2) + "\n"; }

Spectrum request_spectrum(const TaskRequest& req) {
    const int sources = static_cast<int>(req.brieskorn_pham.has_value()) +
                        static_cast<int>(req.quasi_homogeneous.has_value()) +
                        static_cast<int>(req.spectrum_text.has_value()) + static_cast<int>(req.input.has_value());
    if (sources != 1)
        throw UsageError("give exactly one of --brieskorn-pham, --quasi-homogeneous, --spectrum, --input");
    if (req.brieskorn_pham) return brieskorn_pham(*req.brieskorn_pham);
    if (req.quasi_homogeneous) return quasi_homogeneous(*req.quasi_homogeneous);
    if (req.spectrum_text) {
        if (!req.num_vars) throw UsageError("--spectrum needs --num-vars");
        return explicit_spectrum(FracPoly::parse(*req.spectrum_text), *req.num_vars);
    }
    return json_io::spectrum_from_json(load(*req.input));
}

struct NamedSingularity {
    std::string name;
    Spectrum spectrum;
    std::optional<LaurentPolyY> ih_cone_chi;
};

// Accepts a single descriptor, an array of descriptors or {"singularities": [...]}.
// Entries may carry "name" and "ih_cone_chi".
std::vector<NamedSingularity> singularity_list(const json& j) {
    std::vector<json> items;
    if (j.is_array()) {
        items.assign(j.begin(), j.end());
    } else if (j.is_object() && j.contains("singularities")) {
        if (!j["singularities"].is_array()) throw SchemaError("'singularities' must be an array");
        items.assign(j["singularities"].begin(), j["singularities"].end());
    } else {
        items.push_back(j);
    }
    std::vector<NamedSingularity> out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        const json& e = items[i];
        if (!e.is_object()) throw SchemaError("singularity entries must be objects");
        NamedSingularity s{"p" + std::to_string(i + 1), json_io::spectrum_from_json(e), std::nullopt};
        if (e.contains("name")) {
            if (!e["name"].is_string()) throw SchemaError("singularity name must be a string");
            s.name = e["name"].get<std::string>();
        }
        if (e.contains("ih_cone_chi")) s.ih_cone_chi = json_io::laurent_from_json(e["ih_cone_chi"]);
        out.push_back(std::move(s));
    }
    return out;
}

StratifiedClass evaluated(const StratifiedClass& c, const Rational& y0) {
    StratifiedClass out;
    for (const auto& [name, v] : c.eval(y0)) out += StratifiedClass::symbol(name, LaurentPolyY(v));
    return out;
}

json eval_json(const LaurentPolyY& p, const std::vector<Rational>& ys) {
    json out = json::array();
    for (const auto& y : ys) out.push_back({{"y", to_json(y)}, {"value", to_json(p.eval(y))}});
    return out;
}

json eval_json(const StratifiedClass& c, const std::vector<Rational>& ys) {
    json out = json::array();
    for (const auto& y : ys) out.push_back({{"y", to_json(y)}, {"value", to_json(evaluated(c, y))}});
    return out;
}

void text_evals(std::ostream& os, const std::string& label, const StratifiedClass& c, const std::vector<Rational>& ys) {
    for (const auto& y : ys) os << "  " << label << " at y = " << y << ": " << evaluated(c, y) << "\n";
}

std::string cmd_spectrum(const TaskRequest& req) {
    const Spectrum sp = request_spectrum(req);
    if (!req.json_output) return sp.sp.to_string() + "\n";
    json j = to_json(sp);
    j["milnor_number"] = to_json(milnor_number(sp));
    return dump(j);
}

std::string cmd_chi_y(const TaskRequest& req) {
    const Spectrum sp = request_spectrum(req);
    const std::vector<ChiClass> classes = {chi_y_of_spectrum(sp), reduced_total_chi(sp), total_chi(sp)};
    if (req.json_output) {
        json arr = json::array();
        for (const auto& c : classes) {
            json j = to_json(c);
            if (!req.y_eval.empty()) j["eval"] = eval_json(c.value, req.y_eval);
            arr.push_back(std::move(j));
        }
        return dump(json{{"classes", arr}});
    }
    std::ostringstream os;
    for (const auto& c : classes) {
        os << to_string(c.meaning) << ": " << c.value << "\n";
        for (const auto& y : req.y_eval) os << "  at y = " << y << ": " << c.value.eval(y) << "\n";
    }
    return os.str();
}

std::string cmd_hodge_table(const TaskRequest& req) {
    const HodgeTable table = hodge_table(request_spectrum(req));
    if (req.json_output) return dump(to_json(table));
    std::ostringstream os;
    os << "n = " << table.n << "\n";
    for (const auto& e : table.entries) {
        os << "h^{" << e.p << "," << e.q << "} weight " << e.weight << (e.unipotent ? " unipotent" : "") << ": "
           << e.dim << "\n";
    }
    return os.str();
}

std::string cmd_signature(const TaskRequest& req) {
    const Spectrum sp = request_spectrum(req);
    const Rational sigma = signature_steenbrink(hodge_table(sp));
    if (!req.json_output) return sigma.to_string() + "\n";
    return dump(json{{"signature", to_json(sigma)},
                     {"chi_1", to_json(chi_one(sp))},
                     {"chi_1_equals_signature", rhm_signature_check(sp)}});
}

std::string cmd_du_bois(const TaskRequest& req) {
    const bool ok = du_bois_test(request_spectrum(req));
    if (req.json_output) return dump(json{{"du_bois_test", ok}});
    return ok ? "true\n" : "false\n";
}

std::string cmd_milnor_class(const TaskRequest& req) {
    if (req.input.has_value() == req.sing.has_value()) throw UsageError("milnor-class needs exactly one of --input, --sing");
    const json j = load(req.input ? *req.input : *req.sing);

    std::vector<std::pair<std::string, StratifiedClass>> results;
    if (j.is_object() && j.contains("smooth_locus")) {
        const json& s = j["smooth_locus"];
        if (!s.is_object() || !s.contains("transversal") || !s.contains("n") || !s.contains("r") ||
            !s.contains("T_sigma"))
            throw SchemaError("'smooth_locus' needs transversal, n, r and T_sigma");
        if (!s["n"].is_number_integer() || !s["r"].is_number_integer())
            throw SchemaError("'n' and 'r' must be integers");
        results.emplace_back("MT_y", mt_smooth_locus(json_io::spectrum_from_json(s["transversal"]), s["n"].get<int>(),
                                                     s["r"].get<int>(),
                                                     json_io::stratified_class_from_json(s["T_sigma"])));
    } else {
        const auto sings = singularity_list(j);
        std::vector<std::pair<std::string, Spectrum>> plain;
        std::vector<IsolatedIcPoint> ic;
        for (const auto& s : sings) {
            plain.emplace_back(s.name, s.spectrum);
            if (s.ih_cone_chi) ic.push_back({s.name, s.spectrum, *s.ih_cone_chi});
        }
        results.emplace_back("MT_y", mt_isolated(plain));
        if (!sings.empty() && ic.size() == sings.size()) results.emplace_back("MIT_y", mit_isolated(ic));
    }

    if (req.json_output) {
        json out = json::object();
        for (const auto& [label, c] : results) {
            out[label] = to_json(c);
            if (!req.y_eval.empty()) out[label + "_eval"] = eval_json(c, req.y_eval);
        }
        return dump(out);
    }
    std::ostringstream os;
    for (const auto& [label, c] : results) {
        os << label << " = " << c << "\n";
        text_evals(os, label, c, req.y_eval);
    }
    return os.str();
}

std::string cmd_stratified(const TaskRequest& req) {
    if (!req.input) throw UsageError("stratified needs --input");
    const Stratification st = json_io::stratification_from_json(load(*req.input));

    // Each computation needs different parts of the data; missing parts are
    // reported per computation instead of failing the whole command.
    struct Item {
        std::string label;
        std::optional<StratifiedClass> value;
        std::string unavailable;
    };
    std::vector<Item> items;
    const auto attempt = [&](const std::string& label, const std::function<StratifiedClass()>& f) {
        try {
            items.push_back({label, f(), ""});
        } catch (const SchemaError& e) {
            items.push_back({label, std::nullopt, e.what()});
        }
    };
    attempt("MT_y (direct)", [&] { return mt_stratified_direct(st); });
    std::optional<std::map<std::string, StratifiedClass>> hats;
    std::string hats_unavailable;
    try {
        hats = it_hat(st);
    } catch (const SchemaError& e) {
        hats_unavailable = e.what();
    }
    attempt("MT_y (IT-hat form)", [&] { return mt_stratified_ic(st); });
    attempt("T_y - IT_y", [&] { return t_minus_it(st); });
    std::optional<MitResult> mit;
    std::string mit_unavailable;
    try {
        mit = mit_stratified(st);
    } catch (const SchemaError& e) {
        mit_unavailable = e.what();
    }
    if (mit) {
        items.push_back({"MIT_y (direct)", mit->direct, ""});
        if (mit->it_hat_form)
            items.push_back({"MIT_y (IT-hat form)", *mit->it_hat_form, ""});
        else
            items.push_back({"MIT_y (IT-hat form)", std::nullopt, "intersection class data missing"});
    } else {
        items.push_back({"MIT_y (direct)", std::nullopt, mit_unavailable});
        items.push_back({"MIT_y (IT-hat form)", std::nullopt, mit_unavailable});
    }
    const ConsistencyReport report = consistency_report(st);

    if (req.json_output) {
        json out = json::object();
        json classes = json::array();
        for (const auto& it : items) {
            json j{{"label", it.label}};
            if (it.value) {
                j["value"] = to_json(*it.value);
                if (!req.y_eval.empty()) j["eval"] = eval_json(*it.value, req.y_eval);
            } else {
                j["unavailable"] = it.unavailable;
            }
            classes.push_back(std::move(j));
        }
        out["classes"] = classes;
        if (hats) {
            json h = json::object();
            for (const auto& [name, c] : *hats) h[name] = to_json(c);
            out["it_hat"] = h;
        } else {
            out["it_hat"] = json{{"unavailable", hats_unavailable}};
        }
        json lines = json::array();
        for (const auto& l : report.lines) lines.push_back({{"check", l.check}, {"ok", l.ok}, {"detail", l.detail}});
        out["consistency"] = json{{"all_ok", report.all_ok()}, {"lines", lines}};
        return dump(out);
    }

    std::ostringstream os;
    for (const auto& it : items) {
        if (it.value) {
            os << it.label << " = " << *it.value << "\n";
            text_evals(os, it.label, *it.value, req.y_eval);
        } else {
            os << it.label << ": unavailable (" << it.unavailable << ")\n";
        }
    }
    if (hats) {
        for (const auto& [name, c] : *hats) os << "IT-hat(" << name << ") = " << c << "\n";
    } else {
        os << "IT-hat: unavailable (" << hats_unavailable << ")\n";
    }
    os << "consistency: " << (report.all_ok() ? "ok" : "FAILED") << "\n";
    for (const auto& l : report.lines) {
        os << "  " << (l.ok ? "ok   " : "FAIL ") << l.check;
        if (!l.detail.empty()) os << ": " << l.detail;
        os << "\n";
    }
    return os.str();
}

std::string cmd_projective(const TaskRequest& req) {
    ProjectiveHypersurface h;
    if (req.input) {
        if (req.degree || req.dim || req.sing) throw UsageError("--input excludes --degree, --dim and --sing");
        const json j = load(*req.input);
        if (!j.is_object() || !j.contains("degree") || !j.contains("dim"))
            throw SchemaError("projective input needs 'degree' and 'dim'");
        if (!j["degree"].is_number_integer() || !j["dim"].is_number_integer())
            throw SchemaError("'degree' and 'dim' must be integers");
        h.degree = j["degree"].get<long>();
        h.dim = j["dim"].get<long>();
        if (j.contains("singularities"))
            for (auto& s : singularity_list(j["singularities"])) h.singularities.emplace_back(s.name, s.spectrum);
    } else {
        if (!req.degree || !req.dim) throw UsageError("projective needs --degree and --dim (or --input)");
        h.degree = *req.degree;
        h.dim = *req.dim;
        if (req.sing)
            for (auto& s : singularity_list(load(*req.sing))) h.singularities.emplace_back(s.name, s.spectrum);
    }

    const LaurentPolyY smooth = chi_y_virtual(h.degree, h.dim, req.series_order);
    const LaurentPolyY mt = degree_mt(h);
    const LaurentPolyY singular = smooth - mt;
    const std::vector<Rational> ys = req.y_eval.empty() ? std::vector<Rational>{-1, 0, 1} : req.y_eval;
    struct Row {
        const char* label;
        const char* key;
        LaurentPolyY value;
    };
    const std::vector<Row> rows = {
        {"chi_y(X_t)", "chi_y_smoothing", smooth}, {"chi_y(X)", "chi_y", singular}, {"deg MT_y", "degree_mt", mt}};

    if (req.json_output) {
        json out{{"degree", h.degree}, {"dim", h.dim}};
        for (const auto& r : rows) out[r.key] = json{{"value", to_json(r.value)}, {"eval", eval_json(r.value, ys)}};
        return dump(out);
    }
    std::ostringstream os;
    for (const auto& r : rows) os << r.label << " = " << r.value << "\n";
    for (const auto& y : ys) {
        os << "y = " << y << ":";
        for (std::size_t i = 0; i < rows.size(); ++i)
            os << (i ? ", " : " ") << rows[i].label << " = " << rows[i].value.eval(y);
        os << "\n";
    }
    return os.str();
}

TaskResult cmd_verify(const TaskRequest& req) {
    const VerifyReport report = run_verification(req.seed);
    TaskResult r;
    r.exit_code = report.ok() ? exit_ok : exit_verify_failed;
    if (!req.json_output) {
        r.output = report.to_text();
        return r;
    }
    json suites = json::array();
    for (const auto& s : report.suites) {
        suites.push_back({{"name", s.name},
                          {"ok", s.ok()},
                          {"passed", s.passed},
                          {"total", s.total},
                          {"failures", s.failures},
                          {"annotations", s.annotations}});
    }
    r.output = dump(json{{"ok", report.ok()}, {"seed", req.seed}, {"suites", suites}});
    return r;
}

TaskResult dispatch(const TaskRequest& req) {
    static const std::map<std::string, std::function<std::string(const TaskRequest&)>> simple = {
        {"spectrum", cmd_spectrum},         {"chi-y", cmd_chi_y},         {"hodge-table", cmd_hodge_table},
        {"signature", cmd_signature},       {"du-bois", cmd_du_bois},     {"milnor-class", cmd_milnor_class},
        {"stratified", cmd_stratified},     {"projective", cmd_projective},
    };
    if (req.command == "verify") return cmd_verify(req);
    auto it = simple.find(req.command);
    if (it == simple.end()) throw UsageError("unknown command '" + req.command + "'");
    return {exit_ok, it->second(req), ""};
}

std::string roff_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '-' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

const std::vector<std::string> singularity_commands = {"spectrum", "chi-y", "hodge-table", "signature", "du-bois"};

std::vector<std::string> with(std::vector<std::string> a, const std::vector<std::string>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

}  // namespace

TaskResult run(const TaskRequest& req) {
    try {
        return dispatch(req);
    } catch (const UsageError& e) {
        return {exit_usage, "", e.what()};
    } catch (const ParseError& e) {
        return {exit_parse, "", std::string("parse error: ") + e.what()};
    } catch (const SchemaError& e) {
        return {exit_schema, "", std::string("schema error: ") + e.what()};
    } catch (const PreconditionError& e) {
        return {exit_precondition, "", std::string("precondition failed: ") + e.what()};
    } catch (const json::exception& e) {
        return {exit_schema, "", std::string("schema error: ") + e.what()};
    } catch (const Error& e) {
        return {exit_schema, "", e.what()};
    }
}

const std::vector<CommandSpec>& commands() {
    static const std::vector<CommandSpec> table = {
        {"spectrum", "Hodge spectrum of an isolated hypersurface singularity"},
        {"chi-y", "chi_y of the reduced middle, reduced total and total Milnor fiber cohomology"},
        {"hodge-table", "Hodge numbers h^{p,q} of the Milnor fiber cohomology"},
        {"signature", "Milnor fiber signature by Steenbrink's formula"},
        {"du-bois", "Gr^0_F test on the Milnor fiber cohomology"},
        {"milnor-class", "Milnor-Hirzebruch class for isolated singularities or a smooth singular locus"},
        {"stratified", "stratified class formulas and consistency report for a stratification file"},
        {"projective", "chi_y of a projective hypersurface with isolated singularities"},
        {"verify", "run the bundled golden-value and property suites"},
    };
    return table;
}

const std::vector<FlagSpec>& flags() {
    static const std::vector<FlagSpec> table = {
        {"--input", "FILE|JSON", "task input: a file path or inline JSON",
         with(singularity_commands, {"milnor-class", "stratified", "projective"}),
         [](TaskRequest& r, const std::string& v) { r.input = v; }},
        {"--json", "", "emit JSON instead of text",
         with(singularity_commands, {"milnor-class", "stratified", "projective", "verify"}),
         [](TaskRequest& r, const std::string&) { r.json_output = true; }},
        {"--y-eval", "Y1,Y2,...", "rational values of y at which to evaluate results",
         {"chi-y", "milnor-class", "stratified", "projective"},
         [](TaskRequest& r, const std::string& v) {
             r.y_eval.clear();
             for (const auto& s : split_list(v)) r.y_eval.push_back(Rational::parse(s));
         }},
        {"--brieskorn-pham", "W1,W2,...", "exponents of x_1^w_1 + ... + x_m^w_m", singularity_commands,
         [](TaskRequest& r, const std::string& v) {
             std::vector<long> w;
             for (const auto& s : split_list(v)) w.push_back(parse_long(s));
             r.brieskorn_pham = w;
         }},
        {"--quasi-homogeneous", "W1,W2,...", "rational weights in (0, 1/2]", singularity_commands,
         [](TaskRequest& r, const std::string& v) {
             std::vector<Rational> w;
             for (const auto& s : split_list(v)) w.push_back(Rational::parse(s));
             r.quasi_homogeneous = w;
         }},
        {"--spectrum", "POLY", "explicit spectrum such as \"t^(5/6) + t^(7/6)\" (needs --num-vars)",
         singularity_commands, [](TaskRequest& r, const std::string& v) { r.spectrum_text = v; }},
        {"--num-vars", "M", "number of variables of an explicit spectrum", singularity_commands,
         [](TaskRequest& r, const std::string& v) { r.num_vars = static_cast<int>(parse_long(v)); }},
        {"--degree", "D", "degree of the hypersurface", {"projective"},
         [](TaskRequest& r, const std::string& v) { r.degree = parse_long(v); }},
        {"--dim", "N", "dimension of the hypersurface", {"projective"},
         [](TaskRequest& r, const std::string& v) { r.dim = parse_long(v); }},
        {"--sing", "FILE|JSON", "isolated singularities: one descriptor, an array, or {\"singularities\": [...]}",
         {"projective", "milnor-class"}, [](TaskRequest& r, const std::string& v) { r.sing = v; }},
        {"--seed", "S", "seed of the randomized suites", {"verify"},
         [](TaskRequest& r, const std::string& v) {
             const long s = parse_long(v);
             if (s < 0) throw ParseError("seed must be non-negative");
             r.seed = static_cast<std::uint64_t>(s);
         }},
    };
    return table;
}

std::string manual_page() {
    std::ostringstream os;
    os << ".TH MILNOR\\-HODGE 1\n"
       << ".SH NAME\n"
       << "milnor\\-hodge \\- Hodge\\-theoretic invariants of hypersurface singularities\n"
       << ".SH SYNOPSIS\n"
       << ".B milnor\\-hodge\n"
       << ".I command\n"
       << "[\\fIoptions\\fR]\n"
       << ".SH COMMANDS\n";
    for (const auto& c : commands()) {
        os << ".TP\n.B " << roff_escape(c.name) << "\n" << roff_escape(c.summary) << ".\n";
        std::string accepted;
        for (const auto& f : flags())
            for (const auto& name : f.commands)
                if (name == c.name) accepted += (accepted.empty() ? "" : ", ") + roff_escape(f.name);
        if (!accepted.empty()) os << "Options: " << accepted << ".\n";
    }
    os << ".SH OPTIONS\n";
    for (const auto& f : flags()) {
        os << ".TP\n.B " << roff_escape(f.name);
        if (*f.value_name) os << " \\fI" << roff_escape(f.value_name) << "\\fR";
        os << "\n" << roff_escape(f.help) << ".\n";
    }
    os << ".TP\n.B \\-\\-man\nPrint this manual page.\n"
       << ".SH ENVIRONMENT\n"
       << ".TP\n.B MILNOR_HODGE_SERIES_ORDER\n"
       << "Raise the truncation order of the characteristic power series. Diagnostics only; results do not "
          "depend on it.\n"
       << ".SH EXIT STATUS\n"
       << "0 success; 1 a verification suite failed; 2 usage or I/O error; 3 parse error; 4 schema violation; "
          "5 mathematical precondition failed.\n";
    return os.str();
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hodge-theoretic invariants of hypersurface singularities", "milnor-hodge"};
    bool man = false;
    app.add_flag("--man", man, "print the manual page");

    struct Slot {
        CLI::Option* option = nullptr;
        std::string value;
        bool set = false;
    };
    std::map<std::string, CLI::App*> subs;
    std::map<std::pair<std::string, std::string>, Slot> slots;
    for (const auto& c : commands()) subs[c.name] = app.add_subcommand(c.name, c.summary);
    for (const auto& f : flags()) {
        for (const auto& name : f.commands) {
            Slot& slot = slots[{name, f.name}];
            if (*f.value_name)
                slot.option = subs.at(name)->add_option(f.name, slot.value, f.help)->type_name(f.value_name);
            else
                slot.option = subs.at(name)->add_flag(f.name, slot.set, f.help);
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }
    if (man) {
        out << manual_page();
        return exit_ok;
    }

    TaskRequest req;
    for (const auto& c : commands())
        if (subs.at(c.name)->parsed()) req.command = c.name;
    if (req.command.empty()) {
        err << app.help();
        return exit_usage;
    }

    try {
        for (const auto& f : flags()) {
            auto it = slots.find({req.command, f.name});
            if (it == slots.end() || it->second.option->count() == 0) continue;
            f.apply(req, it->second.value);
        }
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return exit_parse;
    }

    if (const char* env = std::getenv("MILNOR_HODGE_SERIES_ORDER")) {
        try {
            const long order = parse_long(env);
            if (order < 0) throw ParseError("negative");
            req.series_order = static_cast<std::size_t>(order);
        } catch (const ParseError&) {
            err << "MILNOR_HODGE_SERIES_ORDER must be a non-negative integer\n";
            return exit_usage;
        }
    }

    const TaskResult result = run(req);
    out << result.output;
    if (!result.error.empty()) err << result.error << "\n";
    return result.exit_code;
}

}  // namespace milnor_hodge::cli
