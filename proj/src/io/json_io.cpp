#include "lexgb/json_io.hpp"

#include <stdexcept>
#include <string>

namespace lexgb {

namespace {

template <typename F>
auto guarded(const char* what, F&& body) {
    try {
        return body();
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed ") + what + " JSON: " + e.what());
    } catch (const std::domain_error& e) {
        throw std::invalid_argument(std::string("malformed ") + what + " JSON: " + e.what());
    } catch (const std::overflow_error& e) {
        throw std::invalid_argument(std::string("malformed ") + what + " JSON: " + e.what());
    }
}

Ring ring_from_names(const Json& names, const Ring& hint) {
    auto vars = names.get<std::vector<std::string>>();
    if (hint && hint->names() == vars) return hint;
    return make_ring(std::move(vars));
}

}  // namespace

Json to_json(const Polynomial& f) {
    Json terms = Json::array();
    for (const auto& t : f.terms()) terms.push_back(Json{{"c", t.coeff.to_string()}, {"e", t.mono.exponents()}});
    return Json{{"vars", f.ring()->names()}, {"terms", std::move(terms)}};
}

Polynomial polynomial_from_json(const Json& j, const Ring& ring) {
    return guarded("polynomial", [&] {
        const Ring r = ring_from_names(j.at("vars"), ring);
        std::vector<Term> terms;
        for (const auto& t : j.at("terms")) {
            const auto raw = t.at("e").get<std::vector<long long>>();
            if (raw.size() != r->rank()) throw std::invalid_argument("exponent vector length does not match vars");
            std::vector<unsigned> e;
            for (long long x : raw) {
                if (x < 0) throw std::invalid_argument("negative exponent");
                e.push_back(x > 0xFFFF ? 0x10000u : static_cast<unsigned>(x));
            }
            const Rational c = Rational::parse(t.at("c").get<std::string>());
            terms.push_back(Term{c, Monomial::from_exponents(e)});
        }
        return Polynomial::from_terms(r, std::move(terms));
    });
}

Json to_json(const IdealBasis& b) {
    Json gens = Json::array();
    for (const auto& g : b.gens()) gens.push_back(to_json(g));
    return Json{{"ring", b.ring()->names()}, {"order", "lex"}, {"label", b.label()}, {"generators", std::move(gens)}};
}

IdealBasis basis_from_json(const Json& j) {
    return guarded("ideal basis", [&] {
        if (j.contains("order") && j.at("order") != "lex") throw std::invalid_argument("only lex order is supported");
        const Ring ring = ring_from_names(j.at("ring"), nullptr);
        IdealBasis b(ring, {}, j.value("label", std::string{}));
        for (const auto& g : j.at("generators")) {
            Polynomial p = polynomial_from_json(g, ring);
            if (!same_ring(p.ring(), ring)) throw std::invalid_argument("generator vars differ from the basis ring");
            b.push_back(std::move(p));
        }
        return b;
    });
}

Json to_json(const SystemSpec& s) {
    Json w = Json::array();
    for (const auto& q : s.q_weights) w.push_back(q.to_string());
    return Json{{"n", s.n}, {"m", s.m}, {"q_weights", std::move(w)}, {"f_symbol", s.f_symbol}};
}

SystemSpec spec_from_json(const Json& j) {
    return guarded("system spec", [&] {
        SystemSpec s;
        s.n = j.at("n").get<int>();
        s.m = j.at("m").get<int>();
        for (const auto& q : j.at("q_weights")) s.q_weights.push_back(Rational::parse(q.get<std::string>()));
        s.f_symbol = j.value("f_symbol", std::string("y"));
        return s;
    });
}

Json to_json(const BuchbergerLog& log, const BuchbergerOptions& opts) {
    return Json{{"strategy", strategy_name(opts.pair_strategy)},
                {"coprime_criterion", opts.use_coprime_criterion},
                {"pairs_considered", log.pairs_considered},
                {"pairs_skipped_coprime", log.pairs_skipped_coprime},
                {"reductions", log.reductions},
                {"zero_reductions", log.zero_reductions},
                {"reduction_steps", log.reduction_steps},
                {"basis_size", log.basis_size}};
}

Json to_json(const VerificationReport& report) {
    Json checks = Json::object();
    for (const auto& c : report.checks) {
        checks[std::string(claim_key(c.claim))] =
            Json{{"pass", c.result.pass},
                 {"witness", c.result.witness.empty() ? Json(nullptr) : Json(c.result.witness)},
                 {"wall_ms", c.result.wall_ms}};
    }
    Json out{{"r", report.r}, {"all_pass", report.all_pass()}, {"checks", std::move(checks)}};
    out["reduced_basis"] = report.reduced_basis ? to_json(*report.reduced_basis) : Json(nullptr);
    return out;
}

VerificationReport report_from_json(const Json& j) {
    return guarded("verification report", [&] {
        VerificationReport rep;
        rep.r = j.at("r").get<int>();
        for (const auto& [key, value] : j.at("checks").items()) {
            CheckResult c;
            c.pass = value.at("pass").get<bool>();
            if (!value.at("witness").is_null()) c.witness = value.at("witness").get<std::string>();
            c.wall_ms = value.at("wall_ms").get<double>();
            rep.checks.push_back(ClaimResult{claim_from_key(key), std::move(c)});
        }
        if (j.contains("reduced_basis") && !j.at("reduced_basis").is_null())
            rep.reduced_basis = basis_from_json(j.at("reduced_basis"));
        return rep;
    });
}

}  // namespace lexgb
