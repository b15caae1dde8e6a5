#pragma once

#include <charconv>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "degform/criteria.hpp"

namespace degform {

inline constexpr const char* verdict_proven = "incompressible-proven";
inline constexpr const char* verdict_undecided = "not-decided";
inline constexpr const char* verdict_na = "not-applicable";

using Json = nlohmann::ordered_json;

/* ---- input parsing (shared by the JSON reader and the CLI) ---- */

inline BigInt parse_bigint(const std::string& s) {
    if (s.empty())
        throw invalid_operand_error("parse_bigint: empty string");
    size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size())
        throw invalid_operand_error("parse_bigint: no digits in '" + s + "'");
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
            throw invalid_operand_error("parse_bigint: invalid integer '" +
                                        s + "'");
    return s[0] == '+' ? BigInt(s.substr(1)) : BigInt(s);
}

inline int parse_int(const std::string& s) {
    int value = 0;
    const char* begin = s.data();
    const char* end = begin + s.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end)
        throw invalid_operand_error("parse_int: invalid integer '" + s + "'");
    return value;
}

// comma-separated integers; surrounding parentheses tolerated
inline std::vector<int> parse_int_list(std::string s) {
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')')
        s = s.substr(1, s.size() - 2);
    std::vector<int> values;
    if (s.empty())
        return values;
    size_t start = 0;
    while (true) {
        const size_t comma = s.find(',', start);
        const std::string piece = s.substr(
            start, comma == std::string::npos ? std::string::npos
                                              : comma - start);
        values.push_back(parse_int(piece));
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    return values;
}

inline Partition parse_partition(const std::string& s) {
    return Partition(parse_int_list(s));
}

/* ---- report serialization ---- */

namespace detail {

struct ReportVerdicts {
    std::string point_index_detail;
    std::string todd_verdict, todd_detail;
    std::string prime_verdict, prime_detail;
    std::string classical_verdict, classical_detail;
    std::string parity_verdict, parity_detail;
    std::string overall_verdict, overall_detail;
};

inline ReportVerdicts make_verdicts(const IncompressibilityReport& r) {
    ReportVerdicts v;
    const BigInt nx = r.variety.point_index();
    const std::string nx_str = nx.str();

    v.point_index_detail = "n_X = " + nx_str + " divides chi * tau_dim = " +
                           BigInt(r.chi * r.tau_dim).str();

    const BigInt edge = r.chi * r.tau_dim_minus_1;
    v.todd_verdict = r.incompressible_by_todd ? verdict_proven
                                              : verdict_undecided;
    v.todd_detail = "n_X = " + nx_str +
                    (r.incompressible_by_todd ? " does not divide"
                                              : " divides") +
                    " chi * tau_{dim-1} = " + edge.str();

    if (!r.prime_criterion_p) {
        v.prime_verdict = verdict_na;
        v.prime_detail = "dim X + 1 = " + std::to_string(r.variety.dim() + 1) +
                         " is not prime";
    } else {
        const int p = *r.prime_criterion_p;
        int m_p = 0;
        for (int d : r.variety.degrees())
            if (d % p == 0)
                ++m_p;
        const BigInt cofactor = r.variety.degree_product() / nx;
        v.prime_verdict = (r.prime_criterion && *r.prime_criterion)
                              ? verdict_proven
                              : verdict_undecided;
        v.prime_detail = "p = " + std::to_string(p) + ": " +
                         std::to_string(m_p) +
                         " degree(s) divisible by p; degree_product / n_X = " +
                         cofactor.str();
    }

    v.classical_verdict = verdict_undecided;
    v.classical_detail =
        "every c_alpha / p with alpha in Lambda_p is divisible by n_X = " +
        nx_str;
    for (const auto& [p, data] : r.per_prime) {
        if (!data.rost_incompressible)
            continue;
        for (const Partition& alpha :
             lambda_p_partitions(r.variety.dim(), p)) {
            const BigInt half = r.charnumbers.entries.at(alpha) / p;
            if (half % nx != 0) {
                v.classical_verdict = verdict_proven;
                v.classical_detail = "c_" + alpha.to_string() + " / " +
                                     std::to_string(p) + " = " + half.str() +
                                     " is not divisible by n_X = " + nx_str;
                break;
            }
        }
        if (v.classical_verdict == verdict_proven)
            break;
    }

    if (!r.threefold_parity) {
        v.parity_verdict = verdict_na;
        v.parity_detail = "applies to 3-folds with m >= 1 at the default "
                          "point index";
    } else {
        v.parity_verdict = r.threefold_parity->exact_parity
                               ? "condition-holds"
                               : "condition-fails";
        v.parity_detail = std::string("exact parity agrees with the m mod 4 "
                                      "table (table case: ") +
                          (r.threefold_parity->table_case ? "holds" : "fails") +
                          ")";
    }

    std::string fired;
    if (r.incompressible_by_todd)
        fired += "todd_criterion";
    if (r.prime_criterion && *r.prime_criterion)
        fired += std::string(fired.empty() ? "" : ", ") +
                 "prime_dimension_criterion";
    if (v.classical_verdict == verdict_proven)
        fired += std::string(fired.empty() ? "" : ", ") +
                 "classical_congruence";
    v.overall_verdict = fired.empty() ? verdict_undecided : verdict_proven;
    v.overall_detail =
        fired.empty() ? "no criterion fired" : "criteria fired: " + fired;
    return v;
}

} // namespace detail

inline Json report_to_json(const IncompressibilityReport& r) {
    const detail::ReportVerdicts v = detail::make_verdicts(r);
    Json j;
    j["command"] = "report";

    Json inputs;
    inputs["ambient"] = std::to_string(r.variety.ambient());
    Json degrees = Json::array();
    for (int d : r.variety.degrees())
        degrees.push_back(std::to_string(d));
    inputs["degrees"] = std::move(degrees);
    inputs["point_index"] = r.variety.point_index().str();
    j["inputs"] = std::move(inputs);

    Json results;
    results["dim"] = std::to_string(r.variety.dim());
    results["degree_product"] = r.variety.degree_product().str();
    results["chi"] = r.chi.str();
    results["tau_dim"] = r.tau_dim.str();
    results["tau_dim_minus_1"] = r.tau_dim_minus_1.str();
    Json charnums;
    for (const auto& [alpha, c] : r.charnumbers.entries)
        charnums[alpha.to_string()] = c.str();
    results["char_numbers"] = std::move(charnums);
    Json per_prime;
    for (const auto& [p, data] : r.per_prime) {
        Json entry;
        if (data.rost_number)
            entry["rost_number"] = data.rost_number->str();
        else
            entry["rost_number"] = nullptr;
        entry["u"] = data.u_value.str();
        entry["proves_incompressible"] = data.rost_incompressible;
        per_prime[std::to_string(p)] = std::move(entry);
    }
    results["per_prime"] = std::move(per_prime);
    if (r.threefold_parity) {
        Json parity;
        parity["exact_parity"] = r.threefold_parity->exact_parity;
        parity["table_case"] = r.threefold_parity->table_case;
        results["threefold_parity"] = std::move(parity);
    } else {
        results["threefold_parity"] = nullptr;
    }
    j["results"] = std::move(results);

    Json verdicts;
    verdicts["point_index_consistent"] =
        Json{{"verdict", r.point_index_consistent ? "pass" : "fail"},
             {"detail", v.point_index_detail}};
    verdicts["todd_criterion"] =
        Json{{"verdict", v.todd_verdict}, {"detail", v.todd_detail}};
    Json prime_verdict;
    prime_verdict["verdict"] = v.prime_verdict;
    if (r.prime_criterion_p)
        prime_verdict["p"] = std::to_string(*r.prime_criterion_p);
    prime_verdict["detail"] = v.prime_detail;
    verdicts["prime_dimension_criterion"] = std::move(prime_verdict);
    verdicts["classical_congruence"] =
        Json{{"verdict", v.classical_verdict}, {"detail", v.classical_detail}};
    verdicts["threefold_parity"] =
        Json{{"verdict", v.parity_verdict}, {"detail", v.parity_detail}};
    verdicts["overall"] =
        Json{{"verdict", v.overall_verdict}, {"detail", v.overall_detail}};
    j["verdicts"] = std::move(verdicts);
    return j;
}

inline IncompressibilityReport report_from_json(const Json& j) {
    try {
        const Json& inputs = j.at("inputs");
        std::vector<int> degrees;
        for (const auto& d : inputs.at("degrees"))
            degrees.push_back(parse_int(d.get<std::string>()));
        CompleteIntersection X(
            parse_int(inputs.at("ambient").get<std::string>()),
            std::move(degrees),
            parse_bigint(inputs.at("point_index").get<std::string>()));

        const Json& results = j.at("results");
        IncompressibilityReport r{
            X,
            parse_bigint(results.at("chi").get<std::string>()),
            parse_bigint(results.at("tau_dim").get<std::string>()),
            parse_bigint(results.at("tau_dim_minus_1").get<std::string>()),
            CharNumberTable{X, {}},
            {},
            false,
            false,
            {},
            {},
            {}};
        for (const auto& [key, value] :
             results.at("char_numbers").items())
            r.charnumbers.entries[parse_partition(key)] =
                parse_bigint(value.get<std::string>());
        for (const auto& [key, value] : results.at("per_prime").items()) {
            PrimeData data;
            if (!value.at("rost_number").is_null())
                data.rost_number =
                    parse_bigint(value.at("rost_number").get<std::string>());
            data.u_value = parse_bigint(value.at("u").get<std::string>());
            data.rost_incompressible =
                value.at("proves_incompressible").get<bool>();
            r.per_prime.emplace(parse_int(key), std::move(data));
        }
        if (!results.at("threefold_parity").is_null()) {
            const Json& parity = results.at("threefold_parity");
            r.threefold_parity =
                ThreefoldParity{parity.at("exact_parity").get<bool>(),
                                parity.at("table_case").get<bool>()};
        }

        const Json& verdicts = j.at("verdicts");
        r.point_index_consistent =
            verdicts.at("point_index_consistent").at("verdict") == "pass";
        r.incompressible_by_todd =
            verdicts.at("todd_criterion").at("verdict") == verdict_proven;
        const Json& prime = verdicts.at("prime_dimension_criterion");
        if (prime.at("verdict") != verdict_na) {
            r.prime_criterion_p = parse_int(prime.at("p").get<std::string>());
            r.prime_criterion = prime.at("verdict") == verdict_proven;
        }
        return r;
    } catch (const Json::exception& e) {
        throw invalid_operand_error(
            std::string("report_from_json: malformed report: ") + e.what());
    }
}

inline std::string report_to_text(const IncompressibilityReport& r) {
    const detail::ReportVerdicts v = detail::make_verdicts(r);
    std::string out;
    out += "variety: " + r.variety.to_string() + "\n";
    out += "dim: " + std::to_string(r.variety.dim()) + "\n";
    out += "degree product: " + r.variety.degree_product().str() + "\n";
    out += "chi(O_X): " + r.chi.str() + "\n";
    out += "tau_dim: " + r.tau_dim.str() + "\n";
    out += "tau_{dim-1}: " + r.tau_dim_minus_1.str() + "\n";
    out += "characteristic numbers:\n";
    for (const auto& [alpha, c] : r.charnumbers.entries)
        out += "  c_" + alpha.to_string() + " = " + c.str() + "\n";
    for (const auto& [p, data] : r.per_prime) {
        out += "prime " + std::to_string(p) + ": rost_number = " +
               (data.rost_number ? data.rost_number->str() : "n/a") +
               ", u = " + data.u_value.str() + ", proves incompressible: " +
               (data.rost_incompressible ? "yes" : "no") + "\n";
    }
    out += "point_index_consistent: " +
           std::string(r.point_index_consistent ? "pass" : "fail") + " (" +
           v.point_index_detail + ")\n";
    out += "todd_criterion: " + v.todd_verdict + " (" + v.todd_detail + ")\n";
    out += "prime_dimension_criterion: " + v.prime_verdict + " (" +
           v.prime_detail + ")\n";
    out += "classical_congruence: " + v.classical_verdict + " (" +
           v.classical_detail + ")\n";
    out += "threefold_parity: " + v.parity_verdict + " (" + v.parity_detail +
           ")\n";
    out += "overall: " + v.overall_verdict + " (" + v.overall_detail + ")\n";
    return out;
}

} // namespace degform
