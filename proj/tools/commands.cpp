#include "commands.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "ringpat/error.hpp"
#include "ringpat/generators.hpp"
#include "ringpat/io.hpp"
#include "ringpat/layout.hpp"
#include "ringpat/solver.hpp"
#include "ringpat/svg.hpp"

namespace ringpat::cli {

namespace {

constexpr double kVerifyTolerance = 1e-8;

struct Options {
    std::string kind;
    std::vector<std::string> inputs;
    std::string out;
    std::string pattern_out;
    std::string report_out;
    int extent = 8;
    double alpha = 1.0;
    double x = 0.0;
    double y = 0.0;
    double a = 1.0;
    std::vector<double> deltas;
    std::optional<double> ell0;
    double tol = 1e-10;
    int max_iter = 100;
    std::string gauge;
    std::vector<double> corner_phi;
    bool touching = false;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw RingError(ErrorCode::ParseError, "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_to(const std::string& path, const std::string& text, std::ostream& out)
{
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw RingError(ErrorCode::InvalidArgument, "cannot write " + path);
    f << text;
}

const std::string& input(const Options& o, std::size_t i, const char* what)
{
    if (o.inputs.size() <= i) throw CLI::ValidationError(std::string("missing input file: ") + what);
    return o.inputs[i];
}

Vertex parse_gauge(const std::string& text)
{
    int m = 0;
    int n = 0;
    char comma = 0;
    std::istringstream ss(text);
    if (!(ss >> m >> comma >> n) || comma != ',' || !ss.eof())
        throw CLI::ValidationError("--gauge expects m,n, got '" + text + "'");
    return {m, n};
}

ComplexPtr centered_block(int extent)
{
    if (extent < 1) throw RingError(ErrorCode::InvalidArgument, "extent must be at least 1");
    return make_complex(block_squares(-extent, -extent, 2 * extent, 2 * extent));
}

int generate(const Options& o, std::ostream& out)
{
    const double ell0 = o.ell0.value_or(1.0);
    if (o.kind == "doyle") {
        write_to(o.out, io::field_to_json(doyle_field(centered_block(o.extent), {o.x, o.y}), ell0), out);
    } else if (o.kind == "erf") {
        write_to(o.out, io::field_to_json(erf_field(centered_block(o.extent), {o.a}), ell0), out);
    } else if (o.kind == "zalpha") {
        write_to(o.out, io::field_to_json(zalpha_rho_field({o.alpha, o.extent}), ell0), out);
    } else if (o.kind == "block") {
        write_to(o.out, io::complex_to_json(*centered_block(o.extent)), out);
    } else if (o.kind == "diamond") {
        write_to(o.out, io::complex_to_json(*make_complex(diamond_squares(o.extent))), out);
    } else if (o.kind == "dirichlet") {
        const io::FieldDocument doc = io::field_from_json(read_file(input(o, 0, "field")));
        write_to(o.out, io::boundary_to_json(dirichlet_from_field(doc.field)), out);
    } else if (o.kind == "neumann") {
        const ComplexPtr complex = io::complex_from_json(read_file(input(o, 0, "complex")));
        BoundaryConditions bc = flat_neumann(*complex);
        if (!o.gauge.empty()) bc.gauge_vertex = parse_gauge(o.gauge);
        if (!o.corner_phi.empty()) {
            std::vector<Vertex> tips;
            for (const std::size_t i : complex->boundary_vertices())
                if (complex->degree(i) == 3) tips.push_back(complex->vertices()[i]);
            if (tips.size() != o.corner_phi.size()) {
                throw CLI::ValidationError(fmt::format("--corner-phi needs {} values, one per degree-3 boundary vertex",
                                                       tips.size()));
            }
            for (std::size_t k = 0; k < tips.size(); ++k) bc.neumann_phi[tips[k]] = o.corner_phi[k];
        }
        weights_for(complex, bc);  // validates, including the angle budget
        write_to(o.out, io::boundary_to_json(bc), out);
    }
    return kOk;
}

int solve_cmd(const Options& o, std::ostream& out, std::ostream& err)
{
    const ComplexPtr complex = io::complex_from_json(read_file(input(o, 0, "complex")));
    BoundaryConditions bc = io::boundary_from_json(read_file(input(o, 1, "boundary conditions")));
    if (!o.gauge.empty()) bc.gauge_vertex = parse_gauge(o.gauge);
    if (bc.mode == BoundaryMode::Neumann && !bc.gauge_vertex) bc.gauge_vertex = complex->vertices().front();

    SolveOptions opts;
    opts.tol_grad = o.tol;
    opts.max_iter = o.max_iter;
    const SolveResult result = solve(complex, bc, opts);
    for (const std::string& w : result.report.warnings) err << "warning: " << w << "\n";
    write_to(o.out, io::field_to_json(result.field, o.ell0.value_or(1.0)), out);
    if (!o.report_out.empty()) write_to(o.report_out, io::solve_report_to_json(result.report), out);
    if (!result.report.converged()) {
        err << fmt::format("solve: no convergence after {} iterations (gradient {:.3e})\n", result.report.iterations,
                           result.report.gradient_norm);
        return kFailed;
    }
    return kOk;
}

int deform_cmd(const Options& o, std::ostream& out)
{
    if (o.deltas.size() != 1) throw CLI::ValidationError("deform takes exactly one --delta");
    const io::FieldDocument doc = io::field_from_json(read_file(input(o, 0, "field")));
    write_to(o.out, io::field_to_json(deform(doc.field, {o.deltas.front()}), o.ell0.value_or(doc.ell0)), out);
    return kOk;
}

int dual_cmd(const Options& o, std::ostream& out)
{
    const io::FieldDocument doc = io::field_from_json(read_file(input(o, 0, "field")));
    write_to(o.out, io::field_to_json(negate(doc.field), o.ell0.value_or(doc.ell0)), out);
    return kOk;
}

std::string with_suffix(const std::string& path, double delta)
{
    const auto dot = path.rfind('.');
    const auto slash = path.rfind('/');
    const std::string suffix = fmt::format("_d{:g}", delta);
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) return path + suffix;
    return path.substr(0, dot) + suffix + path.substr(dot);
}

int render_cmd(const Options& o, std::ostream& out)
{
    const io::FieldDocument doc = io::field_from_json(read_file(input(o, 0, "field")));
    RenderOptions ropts;
    ropts.show_touching_points = o.touching;

    struct Frame {
        RhoField field;
        double ell0;
        std::optional<double> delta;
    };
    std::vector<Frame> frames;
    if (o.deltas.empty()) {
        frames.push_back({doc.field, o.ell0.value_or(doc.ell0), std::nullopt});
    } else {
        if (o.deltas.size() > 1 && (o.out.empty() || o.out == "-"))
            throw CLI::ValidationError("several --delta values need --out");
        for (const double d : o.deltas) frames.push_back({deform(doc.field, {d}), rescaled_ell0(d), d});
    }

    const bool suffixed = frames.size() > 1;
    for (const Frame& f : frames) {
        const PlanarPattern pattern = layout(f.field, f.ell0);
        const std::string svg_path = suffixed ? with_suffix(o.out, *f.delta) : o.out;
        write_to(svg_path, render_svg(pattern, ropts), out);
        if (!o.pattern_out.empty()) {
            const std::string json_path = suffixed ? with_suffix(o.pattern_out, *f.delta) : o.pattern_out;
            write_to(json_path, io::pattern_to_json(pattern), out);
        }
    }
    return kOk;
}

int verify_cmd(const Options& o, std::ostream& out, std::ostream& err)
{
    const std::string text = read_file(input(o, 0, "pattern or field"));
    PlanarPattern pattern = [&] {
        if (io::has_centers(text)) return io::pattern_from_json(text);
        io::FieldDocument doc = io::field_from_json(text);
        return layout(doc.field, o.ell0.value_or(doc.ell0));
    }();
    const VerifyReport report = verify(pattern);
    write_to(o.out, io::verify_report_to_json(report), out);
    if (report.max_error() < kVerifyTolerance) return kOk;
    err << fmt::format("verify: max error {:.3e} exceeds {:.0e}\n", report.max_error(), kVerifyTolerance);
    return kFailed;
}

int exit_code_for(ErrorCode code)
{
    switch (code) {
    case ErrorCode::ClosureViolation:
    case ErrorCode::InconsistentPropagation:
    case ErrorCode::SingularHessian:
    case ErrorCode::NonpositiveRadius:
        return kFailed;
    default:
        return kUsage;
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Orthogonal ring patterns on Z^2 subcomplexes", "ringpat"};
    app.require_subcommand(1);
    Options o;

    auto add_out = [&](CLI::App* cmd) { cmd->add_option("--out,-o", o.out, "Output file (default: stdout)"); };
    auto add_ell0 = [&](CLI::App* cmd) {
        cmd->add_option("--ell0", o.ell0, "Area scale ell0 (default: from the input, else 1)")
            ->check(CLI::PositiveNumber);
    };

    CLI::App* gen = app.add_subcommand("generate", "Generate a field, complex or boundary data");
    gen->add_option("kind", o.kind, "doyle | erf | zalpha | block | diamond | neumann | dirichlet")
        ->required()
        ->check(CLI::IsMember({"doyle", "erf", "zalpha", "block", "diamond", "neumann", "dirichlet"}));
    gen->add_option("input", o.inputs, "Complex (neumann) or field (dirichlet) JSON");
    gen->add_option("--extent", o.extent, "Size of the generated domain")->capture_default_str();
    gen->add_option("--alpha", o.alpha, "Exponent of z^alpha, in (0, 2)")->capture_default_str();
    gen->add_option("--x", o.x, "Doyle parameter x");
    gen->add_option("--y", o.y, "Doyle parameter y");
    gen->add_option("--a", o.a, "Erf parameter a > 0")->capture_default_str();
    gen->add_option("--corner-phi", o.corner_phi, "Phi at the degree-3 boundary vertices, lexicographic order")
        ->delimiter(',');
    gen->add_option("--gauge", o.gauge, "Neumann gauge vertex m,n");
    add_ell0(gen);
    add_out(gen);

    CLI::App* sol = app.add_subcommand("solve", "Solve a Dirichlet or Neumann problem");
    sol->add_option("input", o.inputs, "Complex JSON, then boundary JSON")->expected(2);
    sol->add_option("--tol", o.tol, "Gradient tolerance")->capture_default_str()->check(CLI::PositiveNumber);
    sol->add_option("--max-iter", o.max_iter, "Newton iteration limit")->capture_default_str()->check(CLI::PositiveNumber);
    sol->add_option("--gauge", o.gauge, "Neumann gauge vertex m,n");
    sol->add_option("--report", o.report_out, "Write the solver report JSON here");
    add_ell0(sol);
    add_out(sol);

    CLI::App* def = app.add_subcommand("deform", "Shift every rho by delta");
    def->add_option("input", o.inputs, "Field JSON")->expected(1);
    def->add_option("--delta", o.deltas, "Deformation parameter")->required();
    add_ell0(def);
    add_out(def);

    CLI::App* dua = app.add_subcommand("dual", "Negate rho (dual pattern)");
    dua->add_option("input", o.inputs, "Field JSON")->expected(1);
    add_ell0(dua);
    add_out(dua);

    CLI::App* ren = app.add_subcommand("render", "Lay out a field and draw it as SVG");
    ren->add_option("input", o.inputs, "Field JSON")->expected(1);
    ren->add_option("--delta", o.deltas, "Deformation parameter; repeat for a sweep (rescaled by 2 exp(-|delta|))");
    ren->add_option("--pattern-out", o.pattern_out, "Also write the laid-out pattern JSON");
    ren->add_flag("--touching", o.touching, "Mark the touching point of every square");
    add_ell0(ren);
    add_out(ren);

    CLI::App* ver = app.add_subcommand("verify", "Check the ring pattern axioms of a pattern or field");
    ver->add_option("input", o.inputs, "Pattern JSON, or field JSON to lay out first")->expected(1);
    add_ell0(ver);
    add_out(ver);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        if (const CLI::App* sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front())
            err << sub->help();
        return kUsage;
    }

    try {
        if (gen->parsed()) return generate(o, out);
        if (sol->parsed()) return solve_cmd(o, out, err);
        if (def->parsed()) return deform_cmd(o, out);
        if (dua->parsed()) return dual_cmd(o, out);
        if (ren->parsed()) return render_cmd(o, out);
        if (ver->parsed()) return verify_cmd(o, out, err);
    } catch (const CLI::Error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const RingError& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    }
    return kUsage;
}

}  // namespace ringpat::cli
