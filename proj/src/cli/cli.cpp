#include "lexgb/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>

#include "lexgb/closed_form.hpp"
#include "lexgb/groebner.hpp"
#include "lexgb/json_io.hpp"
#include "lexgb/polyio.hpp"
#include "lexgb/report.hpp"
#include "lexgb/sequences.hpp"
#include "lexgb/systems.hpp"

namespace lexgb::cli {

namespace {

constexpr const char* kConvention =
    "Ck denotes the unknown C_{-k}, the coefficient of x^{-k} in C; variables are ordered "
    "C{max} > ... > C1 > y under lex.";

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Format { json, latex, text };

struct Config {
    std::string command;
    std::optional<int> r;
    std::optional<int> r_max;
    std::optional<int> n;
    std::optional<int> m;
    std::string q_weights;
    std::string f_symbol = "y";
    Format format = Format::json;
    std::string output;
    std::string input;
    std::uint64_t seed = 0;
    std::string strategy = "normal";
    bool no_coprime = false;
    std::size_t max_steps = BuchbergerOptions{}.max_reduction_steps;
    bool reduced = false;
    int catalan_max = 16;
};

void emit(const Config& cfg, const std::string& body, std::ostream& out) {
    if (cfg.output.empty()) {
        out << body;
        return;
    }
    std::ofstream file(cfg.output);
    if (!file) throw ConfigError("cannot open output file '" + cfg.output + "'");
    file << body;
}

std::string json_body(const Json& j) { return j.dump(2) + "\n"; }

std::string comment_header(Format f) {
    return std::string(f == Format::latex ? "% " : "# ") + kConvention + "\n";
}

std::vector<Rational> parse_weights(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto b = item.find_first_not_of(" \t");
        const auto e = item.find_last_not_of(" \t");
        if (b == std::string::npos) throw ConfigError("empty entry in --q-weights");
        out.push_back(Rational::parse(item.substr(b, e - b + 1)));
    }
    return out;
}

std::string equations_text(const IdealBasis& b, const std::string& name, Format f) {
    std::ostringstream os;
    os << comment_header(f);
    if (f == Format::latex) {
        os << "\\begin{align*}\n";
        for (std::size_t i = 0; i < b.size(); ++i) {
            os << name << "_{" << i + 1 << "}&:=" << to_latex(b[i]) << (i + 1 < b.size() ? ",\\\\" : ".") << "\n";
        }
        os << "\\end{align*}\n";
    } else {
        for (std::size_t i = 0; i < b.size(); ++i) os << name << "_" << i + 1 << " = " << to_text(b[i]) << "\n";
    }
    return os.str();
}

Json basis_document(const IdealBasis& b) {
    Json j{{"convention", kConvention}};
    const Json body = to_json(b);
    for (const auto& [k, v] : body.items()) j[k] = v;
    return j;
}

int cmd_gen(const Config& cfg, std::ostream& out) {
    SystemSpec spec;
    IdealBasis system(make_ring({"y"}));
    if (cfg.r) {
        if (cfg.n || cfg.m || !cfg.q_weights.empty()) throw ConfigError("gen takes either --r or --n/--m, not both");
        if (*cfg.r < 1) throw ConfigError("--r must be positive");
        spec = SystemSpec::with_leading_weight(2, 2 * *cfg.r + 1);
        system = build_special_system(*cfg.r);
    } else {
        if (!cfg.n || !cfg.m) throw ConfigError("gen needs --r or both --n and --m");
        spec = SystemSpec::with_leading_weight(*cfg.n, *cfg.m, cfg.f_symbol);
        if (!cfg.q_weights.empty()) spec.q_weights = parse_weights(cfg.q_weights);
        system = build_general_system(spec);
    }
    if (cfg.format == Format::json) {
        Json j{{"convention", kConvention}, {"spec", to_json(spec)}};
        const Json body = to_json(system);
        for (const auto& [k, v] : body.items()) j[k] = v;
        emit(cfg, json_body(j), out);
    } else {
        emit(cfg, equations_text(system, "E", cfg.format), out);
    }
    return 0;
}

int cmd_gb(const Config& cfg, std::istream& in, std::ostream& out) {
    Json doc;
    try {
        if (cfg.input.empty() || cfg.input == "-") {
            doc = Json::parse(in);
        } else {
            std::ifstream file(cfg.input);
            if (!file) throw ConfigError("cannot open input file '" + cfg.input + "'");
            doc = Json::parse(file);
        }
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("input is not valid JSON: ") + e.what());
    }
    const IdealBasis input = basis_from_json(doc);
    if (input.empty()) throw ConfigError("input basis has no nonzero generators");
    BuchbergerOptions opts;
    opts.pair_strategy = parse_strategy(cfg.strategy);
    opts.use_coprime_criterion = !cfg.no_coprime;
    opts.max_reduction_steps = cfg.max_steps;
    BuchbergerLog log;
    IdealBasis gb = reduced_groebner_basis(input, opts, &log);
    gb.set_label("reduced Groebner basis of " + (input.label().empty() ? std::string("input") : input.label()));
    if (cfg.format == Format::json) {
        Json j = basis_document(gb);
        j["log"] = to_json(log, opts);
        emit(cfg, json_body(j), out);
    } else {
        std::string body = equations_text(gb, "G", cfg.format);
        const std::string c = cfg.format == Format::latex ? "% " : "# ";
        const Json stats = to_json(log, opts);
        for (const auto& [k, v] : stats.items()) body += c + k + ": " + v.dump() + "\n";
        emit(cfg, body, out);
    }
    return 0;
}

int cmd_closed_form(const Config& cfg, std::ostream& out) {
    if (!cfg.r || *cfg.r < 1) throw ConfigError("closed-form needs a positive --r");
    IdealBasis g = closed_form_basis(*cfg.r);
    if (cfg.reduced) g = interreduce(g);
    if (cfg.format == Format::json) {
        Json j = basis_document(g);
        j["r"] = *cfg.r;
        j["reduced"] = cfg.reduced;
        emit(cfg, json_body(j), out);
        return 0;
    }
    if (cfg.reduced) {
        emit(cfg, equations_text(g, "G", cfg.format), out);
        return 0;
    }
    const std::string name = cfg.format == Format::latex ? "\\tilde{E}" : "~E";
    emit(cfg, equations_text(g, name, cfg.format), out);
    return 0;
}

std::string report_text(const VerificationReport& rep) {
    std::ostringstream os;
    for (const auto& c : rep.checks) {
        os << "r=" << rep.r << " " << claim_key(c.claim) << " " << (c.result.pass ? "PASS" : "FAIL") << " ("
           << c.result.wall_ms << " ms)";
        if (!c.result.witness.empty()) os << " witness: " << c.result.witness;
        os << "\n";
    }
    if (rep.reduced_basis)
        for (std::size_t i = 0; i < rep.reduced_basis->size(); ++i)
            os << "r=" << rep.r << " G_" << i + 1 << " = " << to_text((*rep.reduced_basis)[i]) << "\n";
    return os.str();
}

int cmd_verify(const Config& cfg, std::ostream& out) {
    if (cfg.r.has_value() == cfg.r_max.has_value()) throw ConfigError("verify needs exactly one of --r and --r-max");
    const int lo = cfg.r ? *cfg.r : 1;
    const int hi = cfg.r ? *cfg.r : *cfg.r_max;
    if (lo < 1 || hi < 1) throw ConfigError("rank must be positive");
    if (cfg.format == Format::latex) throw ConfigError("verify supports json and text output");

    VerifyOptions opts;
    opts.seed = cfg.seed;
    std::vector<std::future<VerificationReport>> jobs;
    for (int r = lo; r <= hi; ++r) jobs.push_back(std::async(std::launch::async, [r, opts] { return verify_all(r, opts); }));
    std::vector<VerificationReport> reports;
    for (auto& j : jobs) reports.push_back(j.get());

    bool all = true;
    for (const auto& rep : reports) all = all && rep.all_pass();
    if (cfg.format == Format::json) {
        if (cfg.r) {
            emit(cfg, json_body(to_json(reports.front())), out);
        } else {
            Json arr = Json::array();
            for (const auto& rep : reports) arr.push_back(to_json(rep));
            emit(cfg, json_body(Json{{"all_pass", all}, {"reports", std::move(arr)}}), out);
        }
    } else {
        std::string body;
        for (const auto& rep : reports) body += report_text(rep);
        emit(cfg, body, out);
    }
    return all ? 0 : 1;
}

int cmd_catalan(const Config& cfg, std::ostream& out) {
    if (cfg.catalan_max < 0) throw ConfigError("--max must be nonnegative");
    const auto jmax = static_cast<std::size_t>(cfg.catalan_max);
    const auto lam_rec = lambda_by_recursion(jmax + 1);
    const auto cat_rec = catalan_by_recursion(jmax + 1);
    Json rows = Json::array();
    bool all = true;
    std::ostringstream text;
    text << comment_header(cfg.format);
    if (cfg.format == Format::latex) text << "\\begin{tabular}{rrrl}\nj & $c_j$ & $\\lambda_j$ & holds\\\\\n\\hline\n";
    for (std::size_t j = 0; j <= jmax; ++j) {
        const auto ji = static_cast<std::int64_t>(j);
        const bool recursion = cat_rec[j] == catalan(ji) && lam_rec[j] == lambda_j(ji);
        const bool link = catalan_lambda_link(ji);
        const bool identity = catalan_identity(ji);
        const bool lambda_form = lambda_binomial_identity(ji);
        const bool ok = recursion && link && identity && lambda_form;
        all = all && ok;
        rows.push_back(Json{{"j", j},
                            {"catalan", catalan(ji).get_str()},
                            {"lambda", lambda_j(ji).to_string()},
                            {"recursion_matches", recursion},
                            {"lambda_link", link},
                            {"catalan_identity", identity},
                            {"lambda_identity", lambda_form}});
        if (cfg.format == Format::latex) {
            const Rational l = lambda_j(ji);
            text << j << " & " << catalan(ji).get_str() << " & $"
                 << (l.is_integer() ? l.to_string()
                                    : std::string(l.sign() < 0 ? "-" : "") + "\\frac{" + l.abs().numerator().get_str() +
                                          "}{" + l.denominator().get_str() + "}")
                 << "$ & " << (ok ? "yes" : "no") << "\\\\\n";
        } else {
            text << "j=" << j << " c=" << catalan(ji).get_str() << " lambda=" << lambda_j(ji).to_string()
                 << " holds=" << (ok ? "yes" : "no") << "\n";
        }
    }
    if (cfg.format == Format::latex) text << "\\end{tabular}\n";
    if (cfg.format == Format::json)
        emit(cfg, json_body(Json{{"max", jmax}, {"all_hold", all}, {"rows", std::move(rows)}}), out);
    else
        emit(cfg, text.str(), out);
    return all ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{std::string("Groebner bases of Laurent-coefficient systems over Q (lex order).\n") + kConvention,
                 "lexgb"};
    app.require_subcommand(1);
    Config cfg;
    const std::map<std::string, Format> formats{{"json", Format::json}, {"latex", Format::latex}, {"text", Format::text}};
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "json | latex | text")->transform(CLI::CheckedTransformer(formats));
        sub->add_option("-o,--output", cfg.output, "Write to this file instead of stdout");
    };

    auto* gen = app.add_subcommand("gen", "Generate a polynomial system");
    gen->add_option("--r", cfg.r, "Rank of the special system (n = 2, m = 2r + 1)");
    gen->add_option("--n", cfg.n, "Power n of the P condition");
    gen->add_option("--m", cfg.m, "Power m of the Q condition");
    gen->add_option("--q-weights", cfg.q_weights, "Comma-separated rationals q_0..q_{m+n-2} (default 1,0,...,0)");
    gen->add_option("--f-symbol", cfg.f_symbol, "Variable for the leading coefficient of F");
    add_common(gen);

    auto* gb = app.add_subcommand("gb", "Reduced Groebner basis of a JSON ideal basis");
    gb->add_option("-i,--input", cfg.input, "Input JSON file (default stdin)");
    gb->add_option("--strategy", cfg.strategy, "normal | fifo")->check(CLI::IsMember({"normal", "fifo"}));
    gb->add_flag("--no-coprime", cfg.no_coprime, "Disable the coprime leading-monomial criterion");
    gb->add_option("--max-steps", cfg.max_steps, "Abort after this many reduction steps");
    add_common(gb);

    auto* cf = app.add_subcommand("closed-form", "The explicit basis G_{2r+1}");
    cf->add_option("--r", cfg.r, "Rank r")->required();
    cf->add_flag("--reduced", cfg.reduced, "Emit the reduced form");
    add_common(cf);

    auto* ver = app.add_subcommand("verify", "Check every claim for a rank or a range of ranks");
    ver->add_option("--r", cfg.r, "Single rank");
    ver->add_option("--r-max", cfg.r_max, "Check ranks 1..r-max");
    ver->add_option("--seed", cfg.seed, "Shuffle the generators before the independent Buchberger run");
    add_common(ver);

    auto* cat = app.add_subcommand("catalan", "Catalan / lambda identity table");
    cat->add_option("--max", cfg.catalan_max, "Largest index j");
    add_common(cat);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();  // program name
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (gen->parsed()) return cmd_gen(cfg, out);
        if (gb->parsed()) return cmd_gb(cfg, in, out);
        if (cf->parsed()) return cmd_closed_form(cfg, out);
        if (ver->parsed()) return cmd_verify(cfg, out);
        if (cat->parsed()) return cmd_catalan(cfg, out);
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace lexgb::cli
