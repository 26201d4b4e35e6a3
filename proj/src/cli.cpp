#include "witt/cli.hpp"

#include "witt/derivation.hpp"
#include "witt/enumeration.hpp"
#include "witt/error.hpp"
#include "witt/render.hpp"
#include "witt/serialize.hpp"
#include "witt/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace witt::cli {

namespace {

struct Options {
    int n = 0;
    std::string format = "text";
    std::string out_path;
    std::string method = "recursive";
    bool no_trivial_det = false;
    int max_n = VerifyOptions{}.max_n;
    int oracle_max_n = VerifyOptions{}.oracle_max_n;
    int rows = 0;
    int cols = 0;
    std::vector<int> parts;
    bool have_parts = false;
    int cell_px = RenderSpec{}.cell_px;
    bool no_shade = false;
    bool no_marks = false;
};

bool color_from_env()
{
    const char* v = std::getenv("WITT_DIAGRAMS_COLOR");
    return v != nullptr && std::string(v) == "1";
}

std::string enumerate_text(const DiagramSet& s)
{
    std::string out;
    for (const auto& lambda : s.members)
        out += lambda.to_string() + "  weight " + std::to_string(lambda.weight()) + '\n';
    return out;
}

std::string module_text(int n, const Decomposition& d)
{
    std::ostringstream os;
    os << "W^tot(OG+(" << n << ",E)) free of rank " << d.module.rank() << " over W^tot(S)\n\ngenerators:\n";
    for (const auto& g : d.module.generators())
        os << "  degree " << g.degree.degree << " (mod 4: " << g.degree.residue() << ")  twist "
           << g.twist.to_string() << "  from " << provenance_string(g.provenance) << '\n';
    os << "\nrank table (residue, twist -> rank):\n";
    for (const auto& [key, rank] : rank_table(d.module))
        os << "  " << key.first << ", " << key.second.to_string() << " -> " << rank << '\n';
    os << "\ntrace:\n";
    for (const auto& step : d.trace)
        os << "  " << to_string(step.rule) << " n=" << step.parameter << " shift " << step.shift << " twist "
           << step.twist.to_string() << "  | " << step.cite << '\n';
    return os.str();
}

std::string module_json(int n, bool trivial_det, const Decomposition& d)
{
    const json j{{"schema_version", kSchemaVersion},
                 {"n", n},
                 {"trivial_det", trivial_det},
                 {"rank", d.module.rank()},
                 {"generators", module_to_json(d.module)},
                 {"rank_table", rank_table_to_json(rank_table(d.module))},
                 {"trace", trace_to_json(d.trace)}};
    return j.dump(2) + '\n';
}

std::string render_module(const Options& o, const Decomposition& d)
{
    if (o.format == "json")
        return module_json(o.n, !o.no_trivial_det, d);
    if (o.format == "csv")
        return module_to_csv(d.module);
    return module_text(o.n, d);
}

std::string rect_text(const std::set<std::vector<int>>& parts)
{
    std::string out;
    for (const auto& p : parts) {
        std::string s = "[";
        int w = 0;
        for (std::size_t i = 0; i < p.size(); ++i) {
            s += (i ? "," : "") + std::to_string(p[i]);
            w += p[i];
        }
        out += s + "]  weight " + std::to_string(w) + '\n';
    }
    return out;
}

void require_n(const Options& o)
{
    if (o.n < 1)
        throw CLI::ValidationError("--n", "must be a positive integer");
}

void require_format(const Options& o, std::initializer_list<const char*> allowed, const std::string& command)
{
    for (const char* f : allowed)
        if (o.format == f)
            return;
    throw CLI::ValidationError("--format", "format '" + o.format + "' is not supported by " + command);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Even shifted Young diagrams and the graded Witt module of OG+(n,E)", "witt-diagrams"};
    app.require_subcommand(1, 1);

    Options o;
    const std::vector<std::string> formats{"text", "json", "csv", "svg"};

    auto add_common = [&](CLI::App* sub, bool needs_n) {
        auto* n_opt = sub->add_option("--n", o.n, "spinor parameter n (frame is staircase(n-1))");
        if (needs_n)
            n_opt->required();
        sub->add_option("--format", o.format, "output format")->check(CLI::IsMember(formats));
        sub->add_option("--out", o.out_path, "write data here instead of stdout");
    };

    auto* enumerate = app.add_subcommand("enumerate", "list the even diagrams in staircase(n-1)");
    add_common(enumerate, true);
    enumerate->add_option("--method", o.method, "recursive or oracle")
        ->check(CLI::IsMember({"recursive", "oracle"}));

    auto* module = app.add_subcommand("module", "decompose W^tot(OG+(n,E)) and print generators, ranks, trace");
    add_common(module, true);
    module->add_flag("--no-trivial-det", o.no_trivial_det, "keep det(tilde E_n) twists instead of trivialising");

    auto* verify = app.add_subcommand("verify", "run the invariant suite");
    add_common(verify, false);
    verify->add_option("--max-n", o.max_n, "largest n for the recursion-based checks");
    verify->add_option("--oracle-max-n", o.oracle_max_n, "largest n for the brute-force comparison");

    auto* poincare = app.add_subcommand("poincare", "generating function of diagram weights");
    add_common(poincare, true);

    auto* render = app.add_subcommand("render", "draw diagrams as ASCII (text) or SVG");
    add_common(render, true);
    render->add_option("--parts", o.parts, "render only this partition")->delimiter(',');
    render->add_option("--cell-px", o.cell_px, "SVG cell size in pixels")->check(CLI::Range(4, 1000));
    render->add_flag("--no-shade", o.no_shade, "do not fill the diagram");
    render->add_flag("--no-marks", o.no_marks, "do not highlight inner segments");

    auto* rect = app.add_subcommand("rect", "even Young diagrams in a rectangular frame");
    add_common(rect, false);
    rect->add_option("--rows", o.rows, "frame rows")->required();
    rect->add_option("--cols", o.cols, "frame columns")->required();

    std::string data;
    int code = kOk;
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        o.have_parts = render->count("--parts") > 0;

        if (enumerate->parsed()) {
            require_n(o);
            require_format(o, {"text", "json", "csv"}, "enumerate");
            const DiagramSet s = o.method == "oracle" ? oracle_enumerate(o.n) : recursive_enumerate(o.n);
            if (o.format == "json")
                data = diagram_set_to_json(s).dump(2) + '\n';
            else if (o.format == "csv")
                data = diagram_set_to_csv(s);
            else
                data = enumerate_text(s);
        } else if (module->parsed()) {
            require_n(o);
            require_format(o, {"text", "json", "csv"}, "module");
            if (o.n > kOracleMaxN)
                throw Error(ErrorCode::BoundExceeded, "module is limited to n <= " + std::to_string(kOracleMaxN));
            try {
                data = render_module(o, decompose(o.n, !o.no_trivial_det));
            } catch (const UnresolvedTwistError& e) {
                data = render_module(o, e.partial());
                err << "witt-diagrams: " << e.what() << '\n';
                code = kVerificationFailed;
            }
        } else if (verify->parsed()) {
            require_format(o, {"text", "json"}, "verify");
            if (o.max_n < 1 || o.max_n > kOracleMaxN || o.oracle_max_n < 1 || o.oracle_max_n > kOracleMaxN)
                throw Error(ErrorCode::BoundExceeded,
                            "--max-n and --oracle-max-n must lie in 1.." + std::to_string(kOracleMaxN));
            const auto results = run_verification({o.max_n, o.oracle_max_n, VerifyOptions{}.twist_max_n});
            const bool ok = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
            if (o.format == "json") {
                json j = json::array();
                for (const auto& r : results)
                    j.push_back({{"check", r.name}, {"passed", r.passed}, {"detail", r.detail}});
                data = j.dump(2) + '\n';
            } else {
                for (const auto& r : results)
                    data += std::string(r.passed ? "PASS  " : "FAIL  ") + r.name +
                            (r.detail.empty() ? "" : "\n      " + r.detail) + '\n';
            }
            if (!ok) {
                err << "witt-diagrams: verification failed\n";
                code = kVerificationFailed;
            }
        } else if (poincare->parsed()) {
            require_n(o);
            require_format(o, {"text", "json", "csv"}, "poincare");
            const auto p = poincare_polynomial(o.n);
            if (o.format == "json")
                data = json{{"n", o.n}, {"coefficients", poincare_to_json(p)}}.dump(2) + '\n';
            else if (o.format == "csv")
                data = poincare_to_csv(p);
            else
                data = p.to_string() + '\n';
        } else if (render->parsed()) {
            require_n(o);
            require_format(o, {"text", "svg"}, "render");
            const RenderSpec spec{o.cell_px, !o.no_shade, !o.no_marks, o.format == "text" && color_from_env()};
            if (o.have_parts) {
                const PlacedDiagram d = make_diagram(Frame::staircase(o.n - 1), o.parts);
                data = o.format == "svg" ? render_svg(std::span(&d, 1), spec) : render_ascii(d, spec);
            } else {
                const DiagramSet s = recursive_enumerate(o.n);
                data = o.format == "svg" ? render_svg(s, spec) : render_ascii(s, spec);
            }
        } else if (rect->parsed()) {
            require_format(o, {"text", "json", "csv"}, "rect");
            const auto parts = rect_enumerate(o.rows, o.cols);
            if (o.format == "json") {
                json j = json::array();
                for (const auto& p : parts)
                    j.push_back(diagram_to_json(make_diagram(Frame::rectangle(o.rows, o.cols), p)));
                data = j.dump(2) + '\n';
            } else if (o.format == "csv") {
                data = rect_set_to_csv(o.rows, o.cols, parts);
            } else {
                data = rect_text(parts);
            }
        }
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "witt-diagrams: " << e.what() << "\n\n" << app.help();
        return kUsage;
    } catch (const Error& e) {
        err << "witt-diagrams: " << e.what() << '\n';
        return e.code() == ErrorCode::Mismatch ? kVerificationFailed : kUsage;
    }

    if (o.out_path.empty()) {
        out << data;
    } else {
        std::ofstream file(o.out_path, std::ios::binary);
        if (!file) {
            err << "witt-diagrams: cannot open " << o.out_path << " for writing\n";
            return kUsage;
        }
        file << data;
    }
    return code;
}

}  // namespace witt::cli
