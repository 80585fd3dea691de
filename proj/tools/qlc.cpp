// qlc: command-line front end for exact q-polynomial triangles, concavity
// checks, transforms and criterion verification.
//
// Exit codes: 0 success / property holds; 1 property fails (witness JSON on
// stderr); 2 usage or input error. Data goes to stdout, witnesses and
// warnings to stderr.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qlc/criteria.hpp"
#include "qlc/errors.hpp"
#include "qlc/serialize.hpp"
#include "qlc/transforms.hpp"
#include "qlc/triangles.hpp"

namespace {

using qlc::json;

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitUsage = 2;

struct TriangleArgs {
    std::string family;
    std::string spec_file;
    int rows = 0;
    int column = -1;
    std::string format = "pretty";
    std::string eval_q;
};

struct CheckArgs {
    std::string property;
    std::string input;
    std::string eval_q;
};

struct TransformArgs {
    int a = 0;
    int b = 0;
    std::string weights;
    std::string input;
    int upto = -1;
    bool upto_set = false;
};

struct VerifyArgs {
    std::string family;
    std::string spec_file;
    int max_n = 10;
};

qlc::TriangleSpec load_spec(const std::string& family, const std::string& spec_file) {
    if (!family.empty()) return qlc::builtin(family);
    return qlc::spec_from_json(qlc::load_json_file(spec_file));
}

void print_sequence(const qlc::PolySeq& s, const std::string& format,
                    const std::optional<qlc::Rat>& at_q) {
    if (format == "json") {
        if (at_q) {
            std::vector<qlc::Rat> vals;
            vals.reserve(s.size());
            for (const auto& p : s) vals.push_back(p.eval_at(*at_q));
            std::cout << qlc::to_json(vals).dump() << "\n";
        } else {
            std::cout << qlc::to_json(s).dump() << "\n";
        }
        return;
    }
    // csv and pretty: a sequence is one comma-separated line
    std::string line;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) line += format == "pretty" ? ", " : ",";
        line += at_q ? qlc::rat_to_string(s[i].eval_at(*at_q)) : qlc::to_string(s[i]);
    }
    std::cout << line << "\n";
}

int run_triangle(const TriangleArgs& args) {
    const qlc::TriangleSpec spec = load_spec(args.family, args.spec_file);
    const qlc::Triangle t = qlc::build(spec, args.rows);
    std::optional<qlc::Rat> at_q;
    if (!args.eval_q.empty()) at_q = qlc::rat_from_string(args.eval_q);

    if (args.column >= 0) {
        print_sequence(qlc::column(t, args.column), args.format, at_q);
        return kExitHolds;
    }
    if (args.format == "json") {
        if (at_q) {
            json arr = json::array();
            for (const auto& row : t.rows) {
                std::vector<qlc::Rat> vals;
                vals.reserve(row.size());
                for (const auto& p : row) vals.push_back(p.eval_at(*at_q));
                arr.push_back(qlc::to_json(vals));
            }
            std::cout << arr.dump() << "\n";
        } else {
            std::cout << qlc::to_json(t).dump() << "\n";
        }
    } else if (args.format == "csv") {
        std::cout << (at_q ? qlc::to_csv(t, *at_q) : qlc::to_csv(t));
    } else {
        for (int n = 0; n < t.nrows(); ++n) {
            std::cout << "[" << n << "] ";
            const auto& row = t.rows[static_cast<std::size_t>(n)];
            for (std::size_t k = 0; k < row.size(); ++k) {
                if (k) std::cout << ", ";
                std::cout << (at_q ? qlc::rat_to_string(row[k].eval_at(*at_q))
                                   : qlc::to_string(row[k]));
            }
            std::cout << "\n";
        }
    }
    return kExitHolds;
}

int finish_report(const qlc::Report& rep) {
    std::cout << qlc::to_json(rep).dump(2) << "\n";
    if (!rep.holds) {
        json w;
        w["property"] = rep.property;
        w["witness"] = qlc::to_json(rep)["witness"];
        std::cerr << w.dump() << "\n";
        return kExitFails;
    }
    return kExitHolds;
}

bool looks_numeric(const json& j) {
    return j.is_array() && (j.empty() || j.front().is_string());
}

int run_check(const CheckArgs& args) {
    const json input = qlc::load_json_file(args.input);
    const bool numeric_input = looks_numeric(input);
    std::optional<qlc::Rat> at_q;
    if (!args.eval_q.empty()) at_q = qlc::rat_from_string(args.eval_q);

    auto numeric_values = [&]() -> std::vector<qlc::Rat> {
        if (numeric_input) {
            if (at_q) throw qlc::IoError("--eval-q needs a polynomial-sequence input");
            return qlc::rats_from_json(input);
        }
        if (!at_q)
            throw qlc::IoError(
                "numeric property on a polynomial sequence needs --eval-q to evaluate it");
        std::vector<qlc::Rat> vals;
        for (const auto& p : qlc::polyseq_from_json(input)) vals.push_back(p.eval_at(*at_q));
        return vals;
    };
    auto poly_values = [&]() -> qlc::PolySeq {
        if (numeric_input)
            throw qlc::IoError("property '" + args.property +
                               "' needs a polynomial-sequence input (array of arrays)");
        if (at_q) throw qlc::IoError("--eval-q does not apply to polynomial properties");
        return qlc::polyseq_from_json(input);
    };

    if (args.property == "log-concave") return finish_report(qlc::is_log_concave(numeric_values()));
    if (args.property == "log-convex") return finish_report(qlc::is_log_convex(numeric_values()));
    if (args.property == "q-log-concave")
        return finish_report(qlc::is_q_log_concave(poly_values()));
    if (args.property == "strong-q-log-concave")
        return finish_report(qlc::is_strong_q_log_concave(poly_values()));
    if (args.property == "strong-q-log-convex")
        return finish_report(qlc::is_strong_q_log_convex(poly_values()));
    if (args.property == "tp2-window") {
        if (!numeric_input) throw qlc::IoError("tp2-window needs an integer-sequence input");
        return finish_report(qlc::tp2_window_check(qlc::ints_from_json(input)));
    }
    if (args.property == "internal-zeros") {
        // Verifies freedom from internal zeros, the standing hypothesis of
        // every other property here.
        qlc::Report rep{"internal-zeros", true, std::nullopt};
        std::optional<int> zero_at;
        if (numeric_input) {
            const auto vals = qlc::rats_from_json(input);
            int first = -1, last = -1;
            for (int i = 0; i < static_cast<int>(vals.size()); ++i)
                if (vals[static_cast<std::size_t>(i)] != 0) {
                    if (first < 0) first = i;
                    last = i;
                }
            for (int i = first + 1; i < last && !zero_at; ++i)
                if (vals[static_cast<std::size_t>(i)] == 0) zero_at = i;
        } else {
            const auto seq = qlc::polyseq_from_json(input);
            int first = -1, last = -1;
            for (int i = 0; i < static_cast<int>(seq.size()); ++i)
                if (!seq[static_cast<std::size_t>(i)].is_zero()) {
                    if (first < 0) first = i;
                    last = i;
                }
            for (int i = first + 1; i < last && !zero_at; ++i)
                if (seq[static_cast<std::size_t>(i)].is_zero()) zero_at = i;
        }
        if (zero_at) {
            rep.holds = false;
            qlc::Witness w;
            w.i = w.j = *zero_at;
            w.lhs = "0";
            w.rhs = "nonzero neighbors";
            rep.witness = w;
        }
        return finish_report(rep);
    }
    throw qlc::IoError("unknown property '" + args.property +
                       "'; known: log-concave, log-convex, q-log-concave, strong-q-log-concave, "
                       "strong-q-log-convex, internal-zeros, tp2-window");
}

int run_transform_binomial(const TransformArgs& args) {
    const auto x = qlc::polyseq_from_json(qlc::load_json_file(args.input));
    const auto y = qlc::binomial_transform({args.a, args.b}, x, args.upto);
    std::cout << qlc::to_json(y).dump() << "\n";
    return kExitHolds;
}

int run_transform_window(const TransformArgs& args) {
    const qlc::Window w(qlc::ints_from_json(qlc::load_json_file(args.weights)));
    const auto x = qlc::polyseq_from_json(qlc::load_json_file(args.input));
    auto z = qlc::window_convolve(w, x);
    if (args.upto_set) {
        if (static_cast<int>(z.size()) < args.upto + 1)
            throw qlc::LengthError("window output has only " + std::to_string(z.size()) +
                                   " terms, cannot honor --upto " + std::to_string(args.upto));
        z.resize(static_cast<std::size_t>(args.upto) + 1);
    }
    std::cout << qlc::to_json(z).dump() << "\n";
    return kExitHolds;
}

int run_transform_multinomial(const TransformArgs& args) {
    const qlc::Window w(qlc::ints_from_json(qlc::load_json_file(args.weights)));
    const auto x = qlc::rats_from_json(qlc::load_json_file(args.input));
    const auto y = qlc::multinomial_transform(w, x, args.upto);
    std::cout << qlc::to_json(y).dump() << "\n";
    return kExitHolds;
}

int finish_criterion(const qlc::CriterionReport& rep) {
    for (const auto& warning : rep.warnings) std::cerr << "warning: " << warning << "\n";
    std::cout << qlc::to_json(rep).dump(2) << "\n";
    if (!rep.overall) {
        json w = json::object();
        for (const auto& [name, verdict] : rep.conditions) {
            if (verdict.holds) continue;
            json c;
            c["n"] = verdict.witness->n;
            c["k"] = verdict.witness->k;
            c["l"] = verdict.witness->l;
            c["degree"] = verdict.witness->degree;
            w[name] = std::move(c);
        }
        std::cerr << w.dump() << "\n";
        return kExitFails;
    }
    return kExitHolds;
}

int run_verify_thm41(const VerifyArgs& args) {
    return finish_criterion(qlc::check_theorem41(load_spec(args.family, args.spec_file), args.max_n));
}

int run_verify_proposition(const VerifyArgs& args) {
    const qlc::TriangleSpec spec = load_spec(args.family, args.spec_file);
    // Proposition shape: f == 1, g/h free of n and k, boundary h0 (if any)
    // equal to h; e is the k=0 override of g when present, else g itself.
    if (spec.f.depends_on_nk() || !(spec.f.eval(0, 0) == qlc::QPoly(1)))
        throw qlc::NonConstantExprError("proposition shape needs f = 1, got " + spec.f.render());
    if (spec.g.depends_on_nk() || spec.h.depends_on_nk())
        throw qlc::NonConstantExprError("proposition shape needs g and h free of n and k");
    if (spec.boundary_h0) {
        if (spec.boundary_h0->depends_on_nk() ||
            !(spec.boundary_h0->eval(0, 0) == spec.h.eval(0, 0)))
            throw qlc::NonConstantExprError(
                "proposition shape needs the k=0 override of h to equal h");
    }
    const qlc::CoeffExpr e = spec.boundary_g0 ? *spec.boundary_g0 : spec.g;
    if (e.depends_on_nk())
        throw qlc::NonConstantExprError("proposition shape needs e free of n and k");
    return finish_criterion(qlc::check_proposition(e, spec.g, spec.h));
}

int run_verify_conclusion(const VerifyArgs& args) {
    return finish_report(qlc::confirm_conclusion(load_spec(args.family, args.spec_file), args.max_n));
}

int run_identities(int max_a) {
    const auto failure = qlc::check_binomial_identities(max_a);
    json j;
    j["max_a"] = max_a;
    j["holds"] = !failure.has_value();
    if (failure) {
        json f;
        f["identity"] = failure->identity;
        f["a"] = failure->a;
        f["b"] = failure->b;
        j["failure"] = f;
    }
    std::cout << j.dump(2) << "\n";
    if (failure) {
        std::cerr << j["failure"].dump() << "\n";
        return kExitFails;
    }
    return kExitHolds;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact arithmetic for q-polynomial triangles, log-concavity checks and "
                 "concavity-preserving transforms"};
    app.require_subcommand(1);

    TriangleArgs tri;
    auto* tri_cmd = app.add_subcommand("triangle", "generate a triangular array");
    auto* tri_src = tri_cmd->add_option_group("source");
    tri_src->add_option("--family", tri.family, "built-in family name");
    tri_src->add_option("--spec", tri.spec_file, "triangle spec JSON file");
    tri_src->require_option(1);
    tri_cmd->add_option("--rows", tri.rows, "number of rows")->required()->check(CLI::PositiveNumber);
    tri_cmd->add_option("--column", tri.column, "print a single column instead of rows");
    tri_cmd->add_option("--format", tri.format, "output format")
        ->check(CLI::IsMember({"pretty", "json", "csv"}));
    tri_cmd->add_option("--eval-q", tri.eval_q, "evaluate entries at this rational q");

    CheckArgs chk;
    auto* chk_cmd = app.add_subcommand("check", "check a sequence property");
    chk_cmd->add_option("property", chk.property, "property name")->required();
    chk_cmd->add_option("--input", chk.input, "sequence JSON file")->required();
    chk_cmd->add_option("--eval-q", chk.eval_q, "evaluate polynomials at this rational q first");

    TransformArgs tf;
    auto* tf_cmd = app.add_subcommand("transform", "apply a linear transformation");
    tf_cmd->require_subcommand(1);
    auto* tf_binom = tf_cmd->add_subcommand("binomial", "y_n = sum_k C(a+n,b+k) x_k");
    tf_binom->add_option("--a", tf.a, "shift a")->required()->check(CLI::NonNegativeNumber);
    tf_binom->add_option("--b", tf.b, "shift b")->required()->check(CLI::NonNegativeNumber);
    auto* tf_window = tf_cmd->add_subcommand("window", "z_n = sum_i w_i x_{n+i}");
    tf_window->add_option("--weights", tf.weights, "weight JSON file")->required();
    auto* tf_multi = tf_cmd->add_subcommand("multinomial", "y_n = sum_i T(n,k;i) x_i");
    tf_multi->add_option("--weights", tf.weights, "weight JSON file")->required();
    for (auto* sub : {tf_binom, tf_window, tf_multi}) {
        sub->add_option("--input", tf.input, "input sequence JSON file")->required();
        auto* upto = sub->add_option("--upto", tf.upto, "last output index n")
                         ->check(CLI::NonNegativeNumber);
        if (sub != tf_window) upto->required();
    }

    VerifyArgs ver;
    auto* ver_cmd = app.add_subcommand("verify", "verify criterion hypotheses or conclusions");
    ver_cmd->require_subcommand(1);
    auto* ver_thm = ver_cmd->add_subcommand("thm41", "row-concavity criterion hypotheses");
    auto* ver_prop = ver_cmd->add_subcommand("proposition", "constant-coefficient shape conditions");
    auto* ver_conc = ver_cmd->add_subcommand("conclusion", "strong q-log-concavity of built rows");
    for (auto* sub : {ver_thm, ver_prop, ver_conc}) {
        auto* src = sub->add_option_group("source");
        src->add_option("--family", ver.family, "built-in family name");
        src->add_option("--spec", ver.spec_file, "triangle spec JSON file");
        src->require_option(1);
        sub->add_option("--max-n", ver.max_n, "largest row index checked")
            ->check(CLI::NonNegativeNumber);
    }

    int max_a = 30;
    auto* id_cmd = app.add_subcommand("identities", "run the binomial identity suite");
    id_cmd->add_option("--max-a", max_a, "check all 0 <= b <= a <= max-a")
        ->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }
    tf.upto_set = tf_window->parsed() && tf_window->count("--upto") > 0;

    try {
        if (tri_cmd->parsed()) return run_triangle(tri);
        if (chk_cmd->parsed()) return run_check(chk);
        if (tf_cmd->parsed()) {
            if (tf_binom->parsed()) return run_transform_binomial(tf);
            if (tf_window->parsed()) return run_transform_window(tf);
            return run_transform_multinomial(tf);
        }
        if (ver_cmd->parsed()) {
            if (ver_thm->parsed()) return run_verify_thm41(ver);
            if (ver_prop->parsed()) return run_verify_proposition(ver);
            return run_verify_conclusion(ver);
        }
        return run_identities(max_a);
    } catch (const qlc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitUsage;
    }
}
