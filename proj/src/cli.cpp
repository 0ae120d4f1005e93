#include "hsi/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "hsi/classify.hpp"
#include "hsi/errors.hpp"
#include "hsi/oracle.hpp"
#include "hsi/simatrix.hpp"
#include "hsi/stieltjes.hpp"

namespace hsi {

namespace {

using nlohmann::ordered_json;

ordered_json rationals(const std::vector<Q>& v) {
    ordered_json a = ordered_json::array();
    for (const Q& x : v) a.push_back(to_string(x));
    return a;
}

template <class T>
ordered_json optional_int(const std::optional<T>& v) {
    return v ? ordered_json(*v) : ordered_json(nullptr);
}

ordered_json report_json(const ClassificationReport& r) {
    const Certificates& c = r.certificates;
    ordered_json cert;
    cert["route"] = c.route;
    cert["delta"] = rationals(c.delta);
    cert["eta"] = rationals(c.eta);
    cert["scf_order"] = optional_int(c.scf_order);
    cert["v_order"] = optional_int(c.v_order);
    cert["failed_gate"] = c.failed_gate.empty() ? ordered_json(nullptr) : ordered_json(c.failed_gate);
    cert["reflected_label"] = c.reflected_label ? ordered_json(to_string(*c.reflected_label)) : ordered_json(nullptr);
    ordered_json j;
    j["label"] = to_string(r.label);
    j["order_k"] = optional_int(r.order_k);
    j["degeneracy_m"] = optional_int(r.degeneracy_m);
    j["si_type"] = r.si_type ? ordered_json(to_string(*r.si_type)) : ordered_json(nullptr);
    j["normalized"] = r.normalized;
    j["certificates"] = cert;
    return j;
}

ordered_json cf_json(const StieltjesCF& cf) {
    ordered_json j;
    j["c0"] = to_string(cf.c0);
    j["c"] = rationals(cf.c);
    j["tail"] = cf.tail == CfTail::even ? "even" : "odd";
    return j;
}

ordered_json matrix_json(const QMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

ordered_json roots_json(const RootSet& rs) {
    ordered_json a = ordered_json::array();
    for (const auto& z : rs.roots) a.push_back({z.real(), z.imag()});
    return a;
}

ordered_json counts_json(const HalfPlaneCounts& c) {
    return {{"rhp", c.rhp},       {"lhp", c.lhp},           {"axis", c.axis},
            {"simple", c.simple}, {"nonreal", c.has_nonreal}, {"interlacing", c.interlacing}};
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(cur);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

std::vector<Q> rational_list(const std::string& s) {
    std::vector<Q> out;
    if (s.empty()) return out;
    for (const std::string& tok : split(s, ',')) {
        try {
            out.push_back(parse_rational(tok));
        } catch (const ParseError&) {
            throw ParseError("bad rational token '" + tok + "'");
        }
    }
    return out;
}

QMatrix parse_matrix(const std::string& spec) {
    std::vector<std::vector<Q>> rows;
    for (const std::string& r : split(spec, ';')) rows.push_back(rational_list(r));
    if (rows.empty() || rows[0].empty()) throw ParseError("empty matrix");
    QMatrix m(rows.size(), rows[0].size());
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows[0].size()) throw ParseError("row " + std::to_string(i + 1) + " has a different length");
        for (size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    }
    return m;
}

size_t parse_size(const std::string& s) {
    try {
        size_t pos = 0;
        long v = std::stol(s, &pos);
        if (pos != s.size() || v < 1) throw ParseError("");
        return static_cast<size_t>(v);
    } catch (const std::exception&) {
        throw ParseError("bad dimension '" + s + "'");
    }
}

struct Options {
    bool pretty = false;
    int max_order = -1;
    std::uint64_t seed = 0;
};

void emit(std::ostream& out, const ordered_json& j, const Options& opt) {
    if (!opt.pretty) {
        out << j.dump() << '\n';
        return;
    }
    if (!j.is_object()) {
        out << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
        return;
    }
    for (const auto& [key, value] : j.items())
        out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
}

ordered_json cmd_classify(const Polynomial& p) {
    ordered_json j;
    j["polynomial"] = p.to_string();
    j.update(report_json(classify(p)));
    return j;
}

ordered_json cmd_minors(const Polynomial& p, const Options& opt) {
    HurwitzMinors hm = hurwitz_minors(p);
    ordered_json j;
    j["polynomial"] = p.to_string();
    j["delta"] = rationals(hm.delta);
    j["eta"] = rationals(hm.eta);
    j["D"] = nullptr;
    j["Dhat"] = nullptr;
    j["hankel_note"] = nullptr;
    try {
        RationalFunction phi = associated_function(p);
        int pairs = phi.den.degree();
        HankelMinors h = hankel_minors(laurent_expand(phi, pairs), pairs);
        j["D"] = rationals(h.D);
        j["Dhat"] = rationals(h.Dhat);
    } catch (const DomainError& e) {
        j["hankel_note"] = e.what();
    }
    if (p.degree() >= 1) {
        int order = opt.max_order < 0 ? p.degree() : opt.max_order;
        TnVerdict v = total_nonnegativity_scan(hurwitz_matrix(normalized(p)), order);
        ordered_json tn;
        tn["max_order"] = order;
        tn["totally_nonnegative"] = v.totally_nonnegative;
        if (!v.totally_nonnegative) {
            tn["rows"] = v.rows;
            tn["cols"] = v.cols;
            tn["value"] = to_string(v.value);
        }
        j["hurwitz_tn_scan"] = tn;
    }
    return j;
}

ordered_json cmd_cf(const Polynomial& p) {
    ordered_json j;
    j["polynomial"] = p.to_string();
    int n = p.degree();
    if (n >= 3 && n % 2 == 1 && p.a(1) == 0) {
        ExtendedCF e = extended_cf(p);
        j["form"] = "extended";
        j["c_minus1"] = to_string(e.c_minus1);
        j.update(cf_json(e.inner));
    } else {
        j["form"] = "stieltjes";
        j.update(cf_json(stieltjes_expand(associated_function(p))));
    }
    return j;
}

ordered_json cmd_strange(const Polynomial& p) {
    StrangeReport r = strange_experiment(p);
    ordered_json j;
    j["polynomial"] = p.to_string();
    j["degree"] = r.degree;
    j["q"] = r.q.to_string();
    j["q_roots"] = roots_json(r.q_roots);
    j["q_counts"] = counts_json(r.q_counts);
    j["q_counts_hold"] = r.q_counts_hold;
    j["companion"] = r.companion.to_string();
    j["companion_roots"] = roots_json(r.companion_roots);
    j["companion_counts"] = counts_json(r.companion_counts);
    j["companion_counts_hold"] = r.companion_counts_hold;
    return j;
}

ordered_json signature_json(const SignatureSequence& s) {
    ordered_json j;
    j["eps"] = s.eps;
    j["sign_definite"] = s.sign_definite;
    if (s.witness) {
        auto side = [](const MinorIndex& m) {
            return ordered_json{{"rows", m.rows}, {"cols", m.cols}, {"value", to_string(m.value)}};
        };
        j["witness"] = {{"order", s.witness_order}, {"positive", side(s.witness->first)},
                        {"negative", side(s.witness->second)}};
    }
    return j;
}

ordered_json describe_matrix(const QMatrix& m) {
    ordered_json j;
    j["matrix"] = matrix_json(m);
    j["char_poly"] = char_poly(m).to_string();
    j["si_spectrum"] = si_spectrum_check(m);
    return j;
}

ordered_json cmd_matrix_build(const std::string& spec, const Options& opt) {
    auto colon = spec.find(':');
    if (colon == std::string::npos) throw ParseError("matrix spec needs KIND:ARGS, got '" + spec + "'");
    std::string kind = spec.substr(0, colon);
    std::string args = spec.substr(colon + 1);
    ordered_json j;
    j["kind"] = kind;
    if (kind == "flip") {
        j.update(describe_matrix(flip(parse_size(args))));
    } else if (kind == "anti-bidiagonal" || kind == "tridiagonal") {
        std::vector<std::string> parts = split(args, ';');
        if (parts.size() != 1 && parts.size() != 3) throw ParseError("expected A1;B;C, got '" + args + "'");
        std::vector<Q> a1 = rational_list(parts[0]);
        if (a1.size() != 1) throw ParseError("expected a single a1 entry, got '" + parts[0] + "'");
        std::vector<Q> b = parts.size() == 3 ? rational_list(parts[1]) : std::vector<Q>{};
        std::vector<Q> c = parts.size() == 3 ? rational_list(parts[2]) : std::vector<Q>{};
        QMatrix ab = anti_bidiagonal(a1[0], b, c);
        QMatrix k = tridiagonal_equivalent(a1[0], b, c);
        j.update(describe_matrix(kind == "tridiagonal" ? k : ab));
        j["char_poly_matches"] = char_poly(ab) == char_poly(k);
    } else if (kind == "anti-tridiagonal") {
        std::vector<std::string> parts = split(args, ';');
        if (parts.size() != 1 && parts.size() != 3) throw ParseError("expected A;B;C, got '" + args + "'");
        std::vector<Q> a = rational_list(parts[0]);
        std::vector<Q> b = parts.size() == 3 ? rational_list(parts[1]) : std::vector<Q>{};
        std::vector<Q> c = parts.size() == 3 ? rational_list(parts[2]) : std::vector<Q>{};
        QMatrix m = anti_tridiagonal(a, b, c);
        j.update(describe_matrix(m));
        j["criterion"] = anti_tridiagonal_criterion(m);
    } else if (kind == "random-tn") {
        size_t n = parse_size(args);
        if (n > kMaxScanDimension) throw DomainError("invalid-input", "random-tn is capped at dimension 8");
        QMatrix a = random_tn(n, opt.seed);
        QMatrix b = flip(n) * a;
        j["seed"] = opt.seed;
        j["matrix"] = matrix_json(a);
        j["entries_condition"] = entries_condition(a);
        j["flipped"] = matrix_json(b);
        j["flipped_char_poly"] = char_poly(b).to_string();
        j["flipped_signature"] = signature_json(signature_scan(b, static_cast<int>(n)));
        j["flipped_si_spectrum"] = si_spectrum_check(b);
    } else {
        throw ParseError("unknown matrix kind '" + kind + "'");
    }
    return j;
}

ordered_json cmd_matrix_check(const std::string& spec, const Options& opt) {
    QMatrix m = parse_matrix(spec);
    if (!m.square()) throw DomainError("invalid-input", "matrix must be square");
    if (m.rows() > kMaxScanDimension) throw DomainError("invalid-input", "sign scans are capped at dimension 8");
    int order = opt.max_order < 0 ? static_cast<int>(m.rows()) : opt.max_order;
    SignatureSequence s = signature_scan(m, order);
    ordered_json j;
    j["dimension"] = m.rows();
    j["char_poly"] = char_poly(m).to_string();
    j["signature"] = signature_json(s);
    j["flip_signature"] = has_flip_signature(s);
    j["totally_nonnegative"] = total_nonnegativity_scan(m, order).totally_nonnegative;
    j["class_n_plus"] = class_n_plus_check(m);
    j["si_spectrum"] = si_spectrum_check(m);
    try {
        j["anti_tridiagonal"] = anti_tridiagonal_criterion(m);
    } catch (const DomainError&) {
        j["anti_tridiagonal"] = nullptr;
    }
    return j;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

ordered_json cmd_sweep(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open sweep file '" + path + "'");
    struct Sample {
        std::string alpha;
        Polynomial p;
    };
    std::vector<Sample> samples;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        auto semi = line.find(';');
        if (semi == std::string::npos)
            throw ParseError("line " + std::to_string(lineno) + ": expected 'alpha;c0,c1,...'");
        Polynomial p;
        try {
            p = parse_polynomial(line.substr(semi + 1));
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
        }
        samples.push_back({trim(line.substr(0, semi)), p});
    }
    if (samples.empty()) throw DomainError("invalid-input", "sweep file has no samples");
    int degree = samples.front().p.degree();
    for (const Sample& s : samples)
        if (s.p.degree() != degree) throw DomainError("invalid-input", "degree changes along the sweep");

    ordered_json out;
    ordered_json list = ordered_json::array();
    std::vector<std::optional<int>> orders;
    bool all_gate = true;
    for (const Sample& s : samples) {
        auto gh = generalized_hurwitz_order(s.p);
        orders.push_back(gh ? std::optional<int>(gh->k) : std::nullopt);
        if (!gh) all_gate = false;
        ordered_json item;
        item["alpha"] = s.alpha;
        item["polynomial"] = s.p.to_string();
        item["gate"] = gh.has_value();
        item["order_k"] = optional_int(orders.back());
        item["p_at_zero"] = to_string(s.p.a(degree));
        item["report"] = report_json(classify(s.p));
        list.push_back(item);
    }
    ordered_json transitions = ordered_json::array();
    bool nondecreasing = true;
    for (size_t i = 1; i < samples.size(); ++i) {
        if (orders[i] == orders[i - 1]) continue;
        Q before = samples[i - 1].p.a(degree);
        Q after = samples[i].p.a(degree);
        bool via_zero = before == 0 || after == 0 || sgn(before) != sgn(after);
        if (orders[i] && orders[i - 1] && *orders[i] < *orders[i - 1]) nondecreasing = false;
        transitions.push_back({{"from", samples[i - 1].alpha},
                               {"to", samples[i].alpha},
                               {"from_k", optional_int(orders[i - 1])},
                               {"to_k", optional_int(orders[i])},
                               {"via_zero_crossing", via_zero}});
    }
    out["degree"] = degree;
    out["samples"] = list;
    out["transitions"] = transitions;
    out["all_gate"] = all_gate;
    out["nondecreasing"] = nondecreasing;
    out["monotone"] = all_gate && nondecreasing;
    return out;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hurwitz, self-interlacing and generalized Hurwitz polynomial toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_flag("--pretty", opt.pretty, "Human-readable summary instead of JSON");
    app.add_option("--max-order", opt.max_order, "Cap on the order of scanned minors")->check(CLI::NonNegativeNumber);
    app.add_option("--seed", opt.seed, "Seed for random generators");

    std::string coeffs;
    std::string spec;
    std::string path;
    auto with_poly = [&](const char* name, const char* help) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("COEFFS", coeffs, "Comma-separated descending coefficients, e.g. 1,4,1,-6")->required();
        return sub;
    };
    CLI::App* classify_cmd = with_poly("classify", "Classify a polynomial");
    CLI::App* minors_cmd = with_poly("minors", "Hurwitz, eta and Hankel minor tables");
    CLI::App* cf_cmd = with_poly("cf", "Stieltjes continued fraction of the associated function");
    CLI::App* dual_cmd = with_poly("dual", "Dual polynomial");
    CLI::App* strange_cmd = with_poly("strange", "Root counts of the companion polynomials of a stable polynomial");
    CLI::App* matrix_cmd = app.add_subcommand("matrix", "Matrix constructions and checks");
    matrix_cmd->require_subcommand(1);
    CLI::App* build_cmd = matrix_cmd->add_subcommand("build", "Build KIND:ARGS");
    build_cmd->add_option("SPEC", spec, "flip:N | anti-bidiagonal:A1;B;C | tridiagonal:A1;B;C | anti-tridiagonal:A;B;C | random-tn:N")
        ->required();
    CLI::App* check_cmd = matrix_cmd->add_subcommand("check", "Check a matrix given as rows 'a,b;c,d'");
    check_cmd->add_option("SPEC", spec, "Row-major rational entries")->required();
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "Track the generalized Hurwitz order along sampled parameters");
    sweep_cmd->add_option("FILE", path, "One 'alpha;c0,c1,...,cn' line per sample")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitParse;
    }

    try {
        ordered_json result;
        if (classify_cmd->parsed()) {
            result = cmd_classify(parse_polynomial(coeffs));
        } else if (minors_cmd->parsed()) {
            result = cmd_minors(parse_polynomial(coeffs), opt);
        } else if (cf_cmd->parsed()) {
            result = cmd_cf(parse_polynomial(coeffs));
        } else if (dual_cmd->parsed()) {
            result = dual_transform(parse_polynomial(coeffs)).to_string();
        } else if (strange_cmd->parsed()) {
            result = cmd_strange(parse_polynomial(coeffs));
        } else if (build_cmd->parsed()) {
            result = cmd_matrix_build(spec, opt);
        } else if (check_cmd->parsed()) {
            result = cmd_matrix_check(spec, opt);
        } else if (sweep_cmd->parsed()) {
            result = cmd_sweep(path);
        }
        emit(out, result, opt);
        return kExitOk;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << '\n';
        return kExitDomain;
    }
}

}  // namespace hsi
