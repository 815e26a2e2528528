#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "belyi/census.hpp"
#include "belyi/chain_io.hpp"
#include "belyi/verify.hpp"

using namespace belyi;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNotBelyi = 1;
constexpr int kExitInputError = 2;
constexpr int kExitLimit = 3;

void write_output(const json& doc, const std::string& out_path) {
    if (out_path.empty()) return;
    std::ofstream os(out_path);
    if (!os) throw std::runtime_error("cannot open output file '" + out_path + "'");
    os << doc.dump(2) << "\n";
}

std::string chain_step_description(const ChainStep& s) {
    return s.is_poly() ? s.poly().to_string() : s.mobius().to_string();
}

json load_json_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw ParseError("cannot open chain file '" + path + "'");
    json doc;
    try {
        is >> doc;
    } catch (const json::exception& e) {
        throw ParseError(std::string("chain file is not valid JSON: ") + e.what());
    }
    return doc;
}

int cmd_belyi(const std::string& poly_text, const std::string& points_text, bool as_json,
              const std::string& out_path) {
    std::optional<AlgebraicSet> S;
    std::vector<ExtPoint> extras;
    std::string provenance;
    if (!poly_text.empty()) {
        RatPoly input = parse_poly(poly_text);
        if (input.degree() < 1) throw ParseError("input polynomial must be non-constant");
        RatPoly sf = squarefree_part(input);
        if (sf != input.monic())
            std::cerr << "warning: input is not squarefree; using squarefree part "
                      << sf.to_string() << "\n";
        SplitSet split = split_roots(sf);
        for (const auto& r : split.rationals) extras.push_back(ExtPoint::finite(r));
        S = std::move(split.irrational);
        provenance = "poly: " + poly_text;
    } else {
        extras = parse_points(points_text);
        provenance = "points: " + points_text;
    }

    MapChain chain = belyi_map(S, extras);
    BelyiVerdict verdict = is_belyi(chain);
    if (!verdict.is_belyi)
        throw std::logic_error("internal error: constructed chain failed verification");

    json doc = chain_to_json(chain, provenance);
    write_output(doc, out_path);
    if (as_json) {
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "Belyi chain of total degree " << chain.total_degree() << " ("
                  << chain.steps().size() << " step(s)), verified.\n";
        for (size_t i = 0; i < chain.steps().size(); ++i) {
            const auto& s = chain.steps()[i];
            std::cout << "  step " << i << " (degree " << s.degree()
                      << "): " << chain_step_description(s) << "\n";
        }
    }
    return kExitOk;
}

int cmd_verify(const std::string& chain_path, bool as_json) {
    MapChain chain = chain_from_json(load_json_file(chain_path));
    BelyiVerdict verdict = is_belyi(chain);
    if (as_json) {
        json doc;
        doc["is_belyi"] = verdict.is_belyi;
        json values = json::array();
        for (const auto& v : verdict.report.rational_values) values.push_back(v.to_string());
        doc["critical_values"] = std::move(values);
        if (verdict.report.irrational)
            doc["irrational_defining"] = verdict.report.irrational->defining().to_string();
        std::cout << doc.dump(2) << "\n";
    } else {
        for (const auto& rec : verdict.report.per_step) {
            std::cout << "step " << rec.step_index << " critical values:";
            for (const auto& v : rec.values) std::cout << " " << v.to_string();
            if (rec.irrational)
                std::cout << " and roots of " << rec.irrational->defining().to_string();
            std::cout << "\n";
        }
        std::cout << "critical values of the composed map:";
        for (const auto& v : verdict.report.rational_values) std::cout << " " << v.to_string();
        if (verdict.report.irrational)
            std::cout << " and roots of " << verdict.report.irrational->defining().to_string();
        std::cout << "\nverdict: " << (verdict.is_belyi ? "Belyi" : "not Belyi") << "\n";
    }
    return verdict.is_belyi ? kExitOk : kExitNotBelyi;
}

int cmd_expand(const std::string& chain_path, long cap, bool as_json) {
    MapChain chain = chain_from_json(load_json_file(chain_path));
    ExpandedMap ex = expand(chain, Integer(cap));
    if (as_json) {
        json doc;
        json num = json::array(), den = json::array();
        for (const auto& c : ex.numerator.coeffs()) num.push_back(rational_to_string(c));
        for (const auto& c : ex.denominator.coeffs()) den.push_back(rational_to_string(c));
        doc["numerator"] = std::move(num);
        doc["denominator"] = std::move(den);
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "numerator:   " << ex.numerator.to_string() << "\n";
        std::cout << "denominator: " << ex.denominator.to_string() << "\n";
    }
    return kExitOk;
}

json passport_to_json(const Passport& p) {
    json out = json::array();
    for (const auto& part : p.parts) out.push_back(part);
    return out;
}

json pair_to_json(const PermPair& pair) {
    auto one_based = [](const Permutation& p) {
        json arr = json::array();
        for (int v : p.images()) arr.push_back(v + 1);
        return arr;
    };
    return json::array({one_based(pair.sigma0), one_based(pair.sigma1)});
}

std::vector<int> parse_partition(const std::string& text, int d) {
    std::vector<int> part;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t comma = text.find(',', pos);
        std::string tok = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
        try {
            part.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw ParseError("bad partition entry '" + tok + "'");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    std::sort(part.rbegin(), part.rend());
    int sum = 0;
    for (int v : part) {
        if (v < 1) throw ParseError("partition entries must be positive");
        sum += v;
    }
    if (sum != d) throw ParseError("partition does not sum to d");
    return part;
}

int cmd_census(const std::string& mode, int d, const std::string& a_or_passport0,
               const std::string& passport1, const std::string& passport2, int limit,
               bool as_json) {
    if (mode == "count") {
        std::cout << hall_count(d) << "\n";
        return kExitOk;
    }
    if (mode == "bound") {
        Integer a(a_or_passport0);
        std::cout << degree_bound(d, a) << "\n";
        return kExitOk;
    }
    if (mode == "passport") {
        Passport p{{parse_partition(a_or_passport0, d), parse_partition(passport1, d),
                    parse_partition(passport2, d)}};
        std::cout << passport_bound(d, p, limit) << "\n";
        return kExitOk;
    }
    if (mode != "enumerate") throw ParseError("unknown census mode '" + mode + "'");

    auto classes = enumerate_dessins(d, limit);
    Integer m_d = hall_count(d);
    Rational class_mass(0);
    for (const auto& cls : classes) class_mass += make_rational(Integer(d), cls.aut_order);
    bool class_mass_ok = class_mass == Rational(m_d);
    if (as_json) {
        json doc;
        doc["d"] = d;
        doc["m_d"] = m_d.get_str();
        json arr = json::array();
        for (const auto& cls : classes) {
            json c;
            c["passport"] = passport_to_json(cls.passport);
            c["genus"] = cls.genus;
            c["aut_order"] = cls.aut_order.get_str();
            c["representative"] = pair_to_json(cls.representative);
            arr.push_back(std::move(c));
        }
        doc["classes"] = std::move(arr);
        doc["identities"] = json{{"class_mass_ok", class_mass_ok}};
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << classes.size() << " classes of degree " << d << " (M_" << d << " = " << m_d
                  << ")\n";
        for (const auto& cls : classes) {
            std::cout << "  passport " << passport_to_json(cls.passport).dump() << "  genus "
                      << cls.genus << "  aut " << cls.aut_order << "  rep "
                      << pair_to_json(cls.representative).dump() << "\n";
        }
        std::cout << "class-mass identity (sum d/aut = M_d): "
                  << (class_mass_ok ? "ok" : "FAILED") << "\n";
    }
    return class_mass_ok ? kExitOk : kExitNotBelyi;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Belyi map construction, verification and dessin census"};
    app.require_subcommand(1);

    std::string poly_text, points_text, out_path, chain_path;
    bool as_json = false;
    long expand_cap = 10000;
    int census_limit = kDefaultBruteForceLimit;

    auto* belyi_cmd = app.add_subcommand("belyi", "construct a Belyi map chain");
    belyi_cmd->add_option("--poly", poly_text, "squarefree polynomial whose roots form S");
    belyi_cmd->add_option("--points", points_text, "comma-separated rational points (oo allowed)");
    belyi_cmd->add_flag("--json", as_json, "emit the chain document as JSON");
    belyi_cmd->add_option("--out", out_path, "write the chain document to a file");

    auto* verify_cmd = app.add_subcommand("verify", "verify the Belyi property of a chain");
    verify_cmd->add_option("chain", chain_path, "chain document file")->required();
    verify_cmd->add_flag("--json", as_json, "JSON report");

    auto* expand_cmd = app.add_subcommand("expand", "expand a chain to a rational function");
    expand_cmd->add_option("chain", chain_path, "chain document file")->required();
    expand_cmd->add_option("--expand-cap", expand_cap, "maximum composed degree");
    expand_cmd->add_flag("--json", as_json, "JSON output");

    std::string census_mode, census_arg0, census_arg1, census_arg2;
    int census_d = 0;
    auto* census_cmd = app.add_subcommand("census", "count or enumerate dessins");
    census_cmd->add_option("mode", census_mode, "count | enumerate | bound | passport")
        ->required();
    census_cmd->add_option("d", census_d, "covering degree")->required();
    census_cmd->add_option("arg0", census_arg0, "a (bound mode) or sigma0 partition");
    census_cmd->add_option("arg1", census_arg1, "sigma1 partition (passport mode)");
    census_cmd->add_option("arg2", census_arg2, "sigma_inf partition (passport mode)");
    census_cmd->add_option("--census-limit", census_limit, "brute-force degree limit");
    census_cmd->add_flag("--json", as_json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // --help and friends exit 0; any usage error is an input error
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (belyi_cmd->parsed()) {
            if (poly_text.empty() == points_text.empty()) {
                std::cerr << "error: give exactly one of --poly or --points\n";
                return kExitInputError;
            }
            return cmd_belyi(poly_text, points_text, as_json, out_path);
        }
        if (verify_cmd->parsed()) return cmd_verify(chain_path, as_json);
        if (expand_cmd->parsed()) return cmd_expand(chain_path, expand_cap, as_json);
        if (census_cmd->parsed())
            return cmd_census(census_mode, census_d, census_arg0, census_arg1, census_arg2,
                              census_limit, as_json);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const DegreeCapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitLimit;
    } catch (const BruteForceLimitExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitLimit;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitNotBelyi;
    }
    return kExitInputError;
}
