#include "stcalc/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "stcalc/catalan.hpp"
#include "stcalc/fib_kernel.hpp"
#include "stcalc/json_io.hpp"
#include "stcalc/verify.hpp"

namespace stcalc {

namespace {

double parse_decimal(const std::string& text, const char* what) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        throw ParameterError(std::string(what) + ": not a decimal number: " + text);
    }
    if (used != text.size() || !std::isfinite(v))
        throw ParameterError(std::string(what) + ": not a finite decimal number: " + text);
    return v;
}

struct OutTarget {
    std::ostream* os;
    std::ofstream file;
};

void open_target(OutTarget& tgt, const std::string& path, std::ostream& fallback) {
    if (path.empty() || path == "-") {
        tgt.os = &fallback;
        return;
    }
    tgt.file.open(path);
    if (!tgt.file) throw ParameterError("cannot open output file: " + path);
    tgt.os = &tgt.file;
}

struct SeqKindInfo {
    Specialization kind;
    bool lucas;
};

SeqKindInfo seq_kind(const std::string& name, double p, double q) {
    auto rat = [](double x) {
        if (x != std::nearbyint(x) || std::abs(x) > 1e15)
            throw ParameterError("seq: --p/--q must be integers for exact sequences");
        return Rational(static_cast<long>(x));
    };
    if (name == "naturals") return {Specialization::naturals(), false};
    if (name == "fibonacci") return {Specialization::fibonacci(), false};
    if (name == "lucas") return {Specialization::fibonacci(), true};
    if (name == "pell") return {Specialization::pell(), false};
    if (name == "pell_lucas") return {Specialization::pell(), true};
    if (name == "jacobsthal") return {Specialization::jacobsthal(), false};
    if (name == "jacobsthal_lucas") return {Specialization::jacobsthal(), true};
    if (name == "mersenne") return {Specialization::mersenne(), false};
    if (name == "mersenne_lucas") return {Specialization::mersenne(), true};
    if (name == "pq") return {Specialization::pq_numbers(rat(p), rat(q)), false};
    if (name == "pq_lucas") return {Specialization::pq_lucas_sequence(rat(p), rat(q)), false};
    if (name == "chebyshev_u") return {Specialization::chebyshev_u(rat(p)), false};
    if (name == "fibonacci_polys") return {Specialization::fibonacci_polys(rat(p)), false};
    throw ParameterError("seq: unknown kind: " + name);
}

int cmd_seq(const std::string& kind_name, long n, double p, double q,
            const std::string& format, std::ostream& out) {
    if (n < 1) throw ParameterError("seq: --n must be >= 1");
    SeqKindInfo info = seq_kind(kind_name, p, q);
    std::vector<std::string> vals;
    for (long i = 0; i < n; ++i) {
        Rational r = info.lucas ? specialize_lucas(info.kind, i) : specialize_fib(info.kind, i);
        vals.push_back(r.display());
    }
    if (format == "json") {
        nlohmann::json j{{"kind", kind_name}, {"values", vals}};
        out << j.dump() << "\n";
    } else {
        for (std::size_t i = 0; i < vals.size(); ++i)
            out << vals[i] << (i + 1 < vals.size() ? "," : "\n");
    }
    return 0;
}

int cmd_poly(const std::string& which, long n, const std::string& format, std::ostream& out) {
    LaurentPoly p;
    if (which == "fib") p = fib_poly(n);
    else if (which == "lucas") p = lucas_poly(n);
    else if (which == "fibotorial") p = fibotorial(n);
    else if (which == "catalan") p = catalan_poly(n);
    else throw ParameterError("poly: unknown --which: " + which);
    if (format == "json")
        out << nlohmann::json{{"which", which}, {"n", n}, {"poly", poly_to_json(p)}}.dump() << "\n";
    else
        out << p.display() << "\n";
    return 0;
}

int cmd_binom(long n, const std::string& format, std::ostream& out) {
    if (n < 0) throw ParameterError("binom: --n must be >= 0");
    if (format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for (long i = 0; i <= n; ++i) {
            nlohmann::json r = nlohmann::json::array();
            for (long k = 0; k <= i; ++k) r.push_back(poly_to_json(fibonomial(i, k)));
            rows.push_back(r);
        }
        out << nlohmann::json{{"triangle", rows}}.dump() << "\n";
    } else {
        out << "n,k,fibonomial\n";
        for (long i = 0; i <= n; ++i)
            for (long k = 0; k <= i; ++k)
                out << i << "," << k << "," << fibonomial(i, k).display() << "\n";
    }
    return 0;
}

int cmd_catalan(long n, const std::string& format, std::ostream& out) {
    if (n < 0) throw ParameterError("catalan: --n must be >= 0");
    if (format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for (long i = 0; i <= n; ++i) rows.push_back(poly_to_json(catalan_poly(i)));
        out << nlohmann::json{{"catalan", rows}}.dump() << "\n";
    } else {
        out << "n,catalan\n";
        for (long i = 0; i <= n; ++i) out << i << "," << catalan_poly(i).display() << "\n";
    }
    return 0;
}

int cmd_series(const std::string& gf, int N, double s, double t, double v,
               const std::string& format, std::ostream& out) {
    EvalContext ctx(s, t);
    GfKind kind = gf_kind_from_string(gf);
    GfReport rep = gf_coefficients(kind, N, Cplx(v, 0.0), ctx);
    if (format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for (std::size_t i = 0; i < rep.lhs.size(); ++i)
            rows.push_back({{"n", i},
                            {"lhs", complex_to_json(rep.lhs[i])},
                            {"rhs", complex_to_json(rep.rhs[i])},
                            {"rel_err", rep.rel_err[i]}});
        nlohmann::json j{{"gf", gf},          {"s", s},
                         {"t", t},            {"v", v},
                         {"N", N},            {"precision", "binary64"},
                         {"hypothesis_ok", rep.hypothesis_ok},
                         {"max_rel_err", rep.max_rel_err},
                         {"rows", rows}};
        out << j.dump() << "\n";
    } else {
        out << "# stcalc series gf=" << gf << " s=" << format_double(s)
            << " t=" << format_double(t) << " v=" << format_double(v) << " N=" << N
            << " precision=binary64\n";
        out << "n,lhs_re,lhs_im,rhs_re,rhs_im,rel_err\n";
        for (std::size_t i = 0; i < rep.lhs.size(); ++i)
            out << i << "," << format_double(rep.lhs[i].real()) << ","
                << format_double(rep.lhs[i].imag()) << "," << format_double(rep.rhs[i].real())
                << "," << format_double(rep.rhs[i].imag()) << ","
                << format_double(rep.rel_err[i]) << "\n";
    }
    return 0;
}

int cmd_verify(const std::string& suite, long n, std::ostream& out, std::ostream& err) {
    auto rows = run_suite(suite, n);
    bool all_pass = true;
    for (const auto& r : rows) {
        nlohmann::json j{{"identity", r.identity},
                         {"params", r.params},
                         {"N", r.n},
                         {"residual", r.residual},
                         {"pass", r.pass}};
        out << j.dump() << "\n";
        all_pass = all_pass && r.pass;
    }
    out << (all_pass ? "pass" : "fail") << " (" << rows.size() << " checks)\n";
    if (!all_pass) err << "verify: some identities failed\n";
    return all_pass ? 0 : 1;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Generalized Fibonacci (s,t)-calculus tables, series and identity checks"};
    app.require_subcommand(1);

    std::string format = "csv", out_path = "-";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", out_path, "Output path ('-' for stdout)");

    auto* seq = app.add_subcommand("seq", "Integer sequence table for a named specialization");
    std::string seq_kind_name = "fibonacci";
    long seq_n = 10;
    std::string seq_p = "0", seq_q = "0";
    seq->add_option("--kind", seq_kind_name, "Sequence kind")->required();
    seq->add_option("--n", seq_n, "Number of values (indices 0..n-1)");
    seq->add_option("--p", seq_p, "First parameter (pq kinds, chebyshev_u, fibonacci_polys)");
    seq->add_option("--q", seq_q, "Second parameter (pq kinds)");

    auto* poly = app.add_subcommand("poly", "One fib/lucas/fibotorial/catalan polynomial");
    std::string poly_which = "fib";
    long poly_n = 0;
    poly->add_option("--which", poly_which, "Polynomial family")->required();
    poly->add_option("--n", poly_n, "Index")->required();

    auto* binom = app.add_subcommand("binom", "Fibonomial triangle rows 0..n");
    long binom_n = 6;
    binom->add_option("--n", binom_n, "Largest row")->required();

    auto* cat = app.add_subcommand("catalan", "Catalan polynomials C_0..C_n");
    long cat_n = 6;
    cat->add_option("--n", cat_n, "Largest index")->required();

    auto* series = app.add_subcommand("series", "Generating-function coefficient table with residuals");
    std::string gf = "catalan", s_str = "3", t_str = "-2", v_str = "2";
    int series_N = 10;
    series->add_option("--gf", gf, "sqrt|recip_sqrt|catalan|n_catalan|weighted_catalan")->required();
    series->add_option("--N", series_N, "Truncation order");
    series->add_option("--s", s_str, "Parameter s (decimal)");
    series->add_option("--t", t_str, "Parameter t (decimal)");
    series->add_option("--v", v_str, "Deformation v (decimal)");

    auto* verify = app.add_subcommand("verify", "Run identity verification suites");
    std::string suite = "all";
    long verify_n = 0;
    verify->add_option("--suite", suite, "Suite name or 'all'");
    verify->add_option("--n", verify_n, "Override the documented index range");

    std::vector<std::string> argv = args;
    std::vector<const char*> cargv;
    cargv.push_back("stcalc");
    for (const auto& a : argv) cargv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(cargv.size()), cargv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        OutTarget tgt;
        open_target(tgt, out_path, out);
        if (seq->parsed())
            return cmd_seq(seq_kind_name, seq_n, parse_decimal(seq_p, "seq --p"),
                           parse_decimal(seq_q, "seq --q"), format, *tgt.os);
        if (poly->parsed()) return cmd_poly(poly_which, poly_n, format, *tgt.os);
        if (binom->parsed()) return cmd_binom(binom_n, format, *tgt.os);
        if (cat->parsed()) return cmd_catalan(cat_n, format, *tgt.os);
        if (series->parsed()) {
            double s = parse_decimal(s_str, "series --s");
            double t = parse_decimal(t_str, "series --t");
            double v = parse_decimal(v_str, "series --v");
            if (s == 0.0 || t == 0.0)
                throw ParameterError("series: s and t must be nonzero");
            return cmd_series(gf, series_N, s, t, v, format, *tgt.os);
        }
        if (verify->parsed()) return cmd_verify(suite, verify_n, *tgt.os, err);
    } catch (const ParameterError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "no command given\n";
    return 2;
}

} // namespace stcalc
