#include "nearcentral/cli.hpp"

#include <functional>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "nearcentral/characters.hpp"
#include "nearcentral/genchar.hpp"
#include "nearcentral/oracle.hpp"
#include "nearcentral/starcount.hpp"
#include "nearcentral/tableaux.hpp"

namespace nearcentral::cli {

namespace {

using json = nlohmann::ordered_json;

// Output of one subcommand: a JSON payload, or raw text for csv/text formats.
struct Output {
    json payload = json::object();
    std::optional<std::string> raw;
};

MarkedPartition marked(const std::string& shape, int mark) { return MarkedPartition(Partition::parse(shape), mark); }

void require_size(int n, const MarkedPartition& m, const char* name) {
    if (m.size() != n) {
        throw DomainError(std::string(name) + " (" + m.shape.to_string() + ") is not a partition of " + std::to_string(n));
    }
}

std::string csv_field(const std::string& s) { return "\"" + s + "\""; }

json tableau_json(const StandardTableau& t) {
    json rows = json::array();
    for (const auto& r : t.rows()) rows.push_back(r);
    return rows;
}

json integers_json(const std::vector<Integer>& v) {
    json a = json::array();
    for (const auto& z : v) a.push_back(to_string(z));
    return a;
}

struct Options {
    int n = 0, j = 0, i = 0, k = 0, r = 0, mark = 0, max_n = 0;
    std::string mu, lambda, nu, method = "auto", format = "json", closed_case, perm;
    std::optional<int> mark_opt;
    bool marked_only = false;
    std::uint64_t limit = 10'000'000;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations in the centralizer Z_1(n) of the symmetric group algebra", "nearcentral"};
    app.require_subcommand(1);
    Options o;
    o.max_n = default_max_n();
    std::function<Output()> action;

    // partitions
    auto* partitions = app.add_subcommand("partitions", "List partitions (or marked partitions) of n with class sizes");
    partitions->add_option("--n", o.n, "n")->required()->check(CLI::NonNegativeNumber);
    partitions->add_flag("--marked", o.marked_only, "list marked partitions (lambda, i)");
    partitions->callback([&] {
        action = [&] {
            Output res;
            json list = json::array();
            if (o.marked_only) {
                for (const auto& m : enumerate_marked_partitions(o.n)) {
                    list.push_back({{"marked", m.to_string()}, {"class_size", to_string(marked_class_size(m))}});
                }
            } else {
                for (const auto& p : enumerate_partitions(o.n)) {
                    list.push_back({{"partition", p.to_string()}, {"class_size", o.n == 0 ? "1" : to_string(class_size(p))}});
                }
            }
            res.payload["n"] = o.n;
            res.payload["count"] = std::to_string(list.size());
            res.payload[o.marked_only ? "marked_partitions" : "partitions"] = list;
            return res;
        };
    });

    // tableaux
    auto* tableaux = app.add_subcommand("tableaux", "Standard Young tableaux, dimension and contents of a shape");
    tableaux->add_option("--lambda", o.lambda, "shape, e.g. \"3,1\"")->required();
    tableaux->add_option("--i", o.mark_opt, "restrict to tableaux with n ending a row of length i");
    tableaux->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    tableaux->callback([&] {
        action = [&] {
            Output res;
            const Partition shape = Partition::parse(o.lambda);
            if (shape.empty()) throw DomainError("shape must be nonempty");
            auto list = o.mark_opt ? enumerate_syt_marked(shape, *o.mark_opt) : enumerate_syt(shape);
            if (o.format == "text") {
                std::ostringstream os;
                for (std::size_t t = 0; t < list.size(); ++t) {
                    if (t) os << '\n';
                    for (const auto& row : list[t].rows()) {
                        for (std::size_t c = 0; c < row.size(); ++c) os << (c ? " " : "") << row[c];
                        os << '\n';
                    }
                }
                res.raw = os.str();
                return res;
            }
            auto sums = content_sums(shape);
            res.payload["shape"] = shape.to_string();
            if (o.mark_opt) {
                res.payload["mark"] = *o.mark_opt;
                res.payload["marked_content"] = marked_content(shape, *o.mark_opt);
            }
            res.payload["dimension"] = to_string(dimension(shape));
            res.payload["count"] = std::to_string(list.size());
            res.payload["contents"] = contents(shape);
            res.payload["content_sum"] = sums.sum;
            res.payload["content_square_sum"] = sums.sum_squares;
            res.payload["content_polynomial"] = integers_json(content_polynomial(shape));
            json ts = json::array();
            for (const auto& t : list) ts.push_back(tableau_json(t));
            res.payload["tableaux"] = ts;
            return res;
        };
    });

    // chartable
    auto* chartable = app.add_subcommand("chartable", "Irreducible character table of S_n (rows lambda, columns mu)");
    chartable->add_option("--n", o.n, "n")->required()->check(CLI::PositiveNumber);
    chartable->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    chartable->callback([&] {
        action = [&] {
            Output res;
            auto table = character_table(o.n);
            if (o.format == "csv") {
                std::ostringstream os;
                os << csv_field("lambda\\mu");
                for (const auto& mu : table.classes) os << ',' << csv_field(mu.to_string());
                os << '\n';
                for (std::size_t row = 0; row < table.classes.size(); ++row) {
                    os << csv_field(table.classes[row].to_string());
                    for (const auto& v : table.values[row]) os << ',' << to_string(v);
                    os << '\n';
                }
                res.raw = os.str();
                return res;
            }
            json classes = json::array();
            for (const auto& mu : table.classes) classes.push_back(mu.to_string());
            json rows = json::array();
            for (std::size_t row = 0; row < table.classes.size(); ++row) {
                rows.push_back({{"lambda", table.classes[row].to_string()}, {"values", integers_json(table.values[row])}});
            }
            res.payload["n"] = o.n;
            res.payload["classes"] = classes;
            res.payload["rows"] = rows;
            return res;
        };
    });

    // genchar
    auto* genchar_cmd = app.add_subcommand("genchar", "Generalized character gamma^{mu,j}_{lambda,i}");
    genchar_cmd->add_option("--n", o.n, "n")->required()->check(CLI::PositiveNumber);
    genchar_cmd->add_option("--mu", o.mu, "idempotent shape mu")->required();
    genchar_cmd->add_option("--j", o.j, "mark of mu")->required();
    genchar_cmd->add_option("--lambda", o.lambda, "class shape lambda")->required();
    genchar_cmd->add_option("--i", o.i, "mark of lambda")->required();
    genchar_cmd->add_option("--method", o.method, "auto, table, strahov or oracle")
        ->check(CLI::IsMember({"auto", "table", "strahov", "oracle"}));
    genchar_cmd->add_option("--max-n", o.max_n, "enumeration guard on n");
    genchar_cmd->callback([&] {
        action = [&] {
            Output res;
            const auto upper = marked(o.mu, o.j);
            const auto lower = marked(o.lambda, o.i);
            require_size(o.n, upper, "mu");
            require_size(o.n, lower, "lambda");
            Rational value;
            if (o.method == "oracle") {
                value = genchar_oracle(upper, lower, o.max_n);
            } else if (o.method == "strahov") {
                value = genchar_strahov(upper, lower, o.max_n);
            } else if (o.method == "table") {
                value = genchar(upper, lower, GenCharMethod::table);
            } else {
                value = genchar(upper, lower);
            }
            res.payload["value"] = to_string(value);
            res.payload["method"] = o.method;
            res.payload["n"] = o.n;
            res.payload["upper"] = upper.to_string();
            res.payload["lower"] = lower.to_string();
            return res;
        };
    });

    // connection
    auto* connection = app.add_subcommand("connection", "Connection coefficient [K_{nu,k}] K_{lambda,i} K_{mu,j}");
    connection->add_option("--lambda", o.lambda, "first factor shape")->required();
    connection->add_option("--i", o.i, "first factor mark")->required();
    connection->add_option("--mu", o.mu, "second factor shape")->required();
    connection->add_option("--j", o.j, "second factor mark")->required();
    connection->add_option("--nu", o.nu, "target shape")->required();
    connection->add_option("--k", o.k, "target mark")->required();
    connection->add_option("--method", o.method, "auto (generalized characters) or oracle")
        ->check(CLI::IsMember({"auto", "oracle"}));
    connection->add_option("--max-n", o.max_n, "enumeration guard on n");
    connection->callback([&] {
        action = [&] {
            Output res;
            const auto a = marked(o.lambda, o.i);
            const auto b = marked(o.mu, o.j);
            const auto c = marked(o.nu, o.k);
            require_size(a.size(), b, "mu");
            require_size(a.size(), c, "nu");
            Rational value;
            if (o.method == "oracle") {
                value = extract_marked_coefficient(class_sum(a, o.max_n) * class_sum(b, o.max_n), c);
            } else {
                if (a.size() > o.max_n) throw GuardExceeded("connection: n exceeds guard " + std::to_string(o.max_n));
                value = connection_coefficient(a, b, c);
            }
            res.payload["value"] = to_string(value);
            res.payload["method"] = o.method;
            res.payload["n"] = a.size();
            return res;
        };
    });

    // starfact
    auto* starfact = app.add_subcommand("starfact", "Counts of factorizations into star transpositions");
    starfact->require_subcommand(1);
    auto* count = starfact->add_subcommand("count", "factorizations of one permutation of marked type (lambda, i)");
    count->add_option("--lambda", o.lambda, "cycle type")->required();
    count->add_option("--i", o.i, "length of the cycle holding n")->required();
    count->add_option("--r", o.r, "number of factors")->required()->check(CLI::NonNegativeNumber);
    count->add_option("--method", o.method, "auto (generalized characters), oracle, or enumerate")
        ->check(CLI::IsMember({"auto", "oracle", "enumerate"}));
    count->add_option("--limit", o.limit, "ceiling on (n-1)^r for --method enumerate");
    count->callback([&] {
        action = [&] {
            Output res;
            const auto m = marked(o.lambda, o.i);
            Integer value;
            if (o.method == "oracle") {
                value = require_integer(jm_power_coefficients(m.size(), o.r, o.max_n).at(m), "oracle");
            } else if (o.method == "enumerate") {
                value = enumerate_star_factorizations(canonical_representative(m), o.r, o.limit);
            } else {
                value = star_count(m, o.r);
            }
            res.payload["count"] = to_string(value);
            res.payload["n"] = m.size();
            res.payload["r"] = o.r;
            res.payload["method"] = o.method;
            res.payload["marked"] = m.to_string();
            return res;
        };
    });
    auto* klass = starfact->add_subcommand("class", "factorizations whose product has cycle type lambda");
    klass->add_option("--lambda", o.lambda, "cycle type")->required();
    klass->add_option("--r", o.r, "number of factors")->required()->check(CLI::NonNegativeNumber);
    klass->callback([&] {
        action = [&] {
            Output res;
            const auto lambda = Partition::parse(o.lambda);
            if (lambda.empty()) throw DomainError("cycle type must be nonempty");
            res.payload["count"] = to_string(star_count_class(lambda, o.r));
            res.payload["n"] = lambda.size();
            res.payload["r"] = o.r;
            res.payload["method"] = "characters";
            res.payload["lambda"] = lambda.to_string();
            return res;
        };
    });
    auto* cycles = starfact->add_subcommand("cycles", "factorizations whose product has exactly k cycles");
    cycles->add_option("--n", o.n, "n")->required()->check(CLI::PositiveNumber);
    cycles->add_option("--k", o.k, "number of cycles")->required();
    cycles->add_option("--r", o.r, "number of factors")->required()->check(CLI::NonNegativeNumber);
    cycles->callback([&] {
        action = [&] {
            Output res;
            res.payload["count"] = to_string(star_count_by_cycle_count(o.n, o.k, o.r));
            res.payload["n"] = o.n;
            res.payload["r"] = o.r;
            res.payload["method"] = "content-polynomials";
            res.payload["k"] = o.k;
            return res;
        };
    });
    auto* closed = starfact->add_subcommand("closed", "hyperbolic-series closed forms");
    closed->add_option("--case", o.closed_case, "full-cycle, fix-point-mark1 or transposed-mark")->required();
    closed->add_option("--n", o.n, "n")->required();
    closed->add_option("--r", o.r, "number of factors")->required();
    closed->callback([&] {
        action = [&] {
            Output res;
            const auto c = parse_closed_case(o.closed_case);
            res.payload["count"] = to_string(star_count_closed(c, o.n, o.r));
            res.payload["n"] = o.n;
            res.payload["r"] = o.r;
            res.payload["method"] = "series";
            res.payload["case"] = std::string(closed_case_name(c));
            res.payload["marked"] = closed_case_shape(c, o.n).to_string();
            return res;
        };
    });

    // oracle
    auto* oracle = app.add_subcommand("oracle", "Brute-force group algebra checks");
    oracle->require_subcommand(1);
    int verify_max_n = 5;
    auto* verify_cmd = oracle->add_subcommand("verify", "run the invariant suite for 2 <= n <= max-n");
    verify_cmd->add_option("--max-n", verify_max_n, "largest n to check")->check(CLI::PositiveNumber);
    verify_cmd->callback([&] {
        action = [&] {
            Output res;
            std::ostringstream progress;
            auto report = verify(verify_max_n, &progress);
            err << progress.str();
            res.payload["status"] = report.ok ? "ok" : "mismatch";
            res.payload["max_n"] = verify_max_n;
            res.payload["checks"] = report.checks;
            if (!report.ok) {
                res.payload["first_failure"] = report.first_failure;
                err << "mismatch: " << report.first_failure << '\n';
            }
            return res;
        };
    });
    auto* jm_power = oracle->add_subcommand("jm-power", "literal J_n^r in the standard basis");
    jm_power->add_option("--n", o.n, "n")->required();
    jm_power->add_option("--r", o.r, "exponent")->required()->check(CLI::NonNegativeNumber);
    jm_power->callback([&] {
        action = [&] {
            Output res;
            json coeffs = json::object();
            for (const auto& [m, c] : jm_power_coefficients(o.n, o.r, o.max_n)) coeffs[m.to_string()] = to_string(c);
            res.payload["n"] = o.n;
            res.payload["r"] = o.r;
            res.payload["coefficients"] = coeffs;
            return res;
        };
    });
    auto* factorizations = oracle->add_subcommand("factorizations", "enumerate star factorizations of one permutation");
    factorizations->add_option("--perm", o.perm, "one-line \"2,1,3\" or cycles \"(1 2)\"")->required();
    factorizations->add_option("--n", o.n, "degree (needed for cycle notation)");
    factorizations->add_option("--r", o.r, "number of factors")->required()->check(CLI::NonNegativeNumber);
    factorizations->add_option("--limit", o.limit, "ceiling on (n-1)^r");
    factorizations->callback([&] {
        action = [&] {
            Output res;
            const auto pi = Permutation::parse(o.perm, o.n);
            res.payload["count"] = to_string(enumerate_star_factorizations(pi, o.r, o.limit));
            res.payload["n"] = pi.degree();
            res.payload["r"] = o.r;
            res.payload["method"] = "enumerate";
            res.payload["marked"] = pi.marked_type().to_string();
            return res;
        };
    });

    auto fail = [&](int code, const std::string& message) {
        json doc = {{"status", "error"}, {"error", message}};
        out << doc.dump() << '\n';
        err << "error: " << message << '\n';
        return code;
    };

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        err << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        err << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << app.help();
        return fail(kExitUsage, e.what());
    } catch (const DomainError& e) {
        return fail(kExitDomain, e.what());
    }
    if (!action) return fail(kExitUsage, "no subcommand selected");

    try {
        Output res = action();
        if (res.raw) {
            out << *res.raw;
            return kExitOk;
        }
        json doc = {{"status", "ok"}};
        for (auto& [key, value] : res.payload.items()) doc[key] = value;
        out << doc.dump() << '\n';
        return doc["status"] == "mismatch" ? kExitMismatch : kExitOk;
    } catch (const GuardExceeded& e) {
        return fail(kExitGuard, e.what());
    } catch (const DomainError& e) {
        return fail(kExitDomain, e.what());
    } catch (const std::logic_error& e) {
        return fail(kExitInternal, e.what());
    }
}

}  // namespace nearcentral::cli
