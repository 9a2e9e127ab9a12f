// ordercodes command line: inspect, encode, corrupt, decode and sweep codes
// from order domains. Exit status: 0 ok, 1 usage or config error, 2 decode failure.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <sstream>

#include "ordercodes/ordercodes.hpp"

using namespace ordercodes;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kDecodeFailure = 2;

struct Options {
    std::string config;
    std::string in;
    std::string out;
    std::string errors;
    std::string error_out;
    std::string weight;
    std::size_t trials = 100;
    std::optional<std::uint64_t> seed;
    bool trace = false;
    unsigned threads = 1;
};

struct Loaded {
    WorkbenchConfig config;
    std::shared_ptr<const OrderDomain> domain;
    std::shared_ptr<const EvaluationCode> code;
};

Loaded load(const Options& o) {
    if (o.config.empty()) throw Error(ErrorCode::Parse, "--config is required");
    Loaded l;
    l.config = parse_config(read_file(o.config));
    l.domain = std::make_shared<const OrderDomain>(l.config.presentation);
    l.code = build_code(l.domain, l.config.ell);
    return l;
}

std::uint64_t seed_of(const Options& o, const Loaded& l) { return o.seed.value_or(l.config.seed.value_or(0)); }

void emit(const Options& o, const std::string& text) {
    if (o.out.empty())
        std::cout << text;
    else
        write_file(o.out, text);
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
    auto dash = text.find('-');
    try {
        if (dash == std::string::npos) {
            std::size_t w = std::stoul(text);
            return {w, w};
        }
        return {std::stoul(text.substr(0, dash)), std::stoul(text.substr(dash + 1))};
    } catch (const std::exception&) {
        throw Error(ErrorCode::Parse, "bad weight range '" + text + "'");
    }
}

std::string join(const Presentation& p, const OrderDomain& dom, const std::vector<std::size_t>& idx) {
    std::string s = "{";
    for (std::size_t k = 0; k < idx.size(); ++k) s += (k ? " " : "") + p.format(dom.monomial(idx[k]));
    return s + "}";
}

std::function<void(const StepInfo&)> tracer(const Loaded& l, std::ostream& os) {
    return [&l, &os](const StepInfo& info) {
        const auto& p = l.domain->presentation();
        const auto& st = *info.state;
        os << "m=" << info.m << ' ' << p.format(info.monomial) << " |D|=" << st.footprint.size()
           << " sigma=" << join(p, *l.domain, st.sigma) << " delta=" << join(p, *l.domain, st.corners);
        if (info.vote) {
            os << " vote " << p.format(info.vote->monomial) << '=' << info.vote->value.code() << " tally";
            for (auto& [v, c] : info.vote->tally) os << ' ' << v.code() << ':' << c;
            os << " of " << info.vote->voters;
        }
        os << '\n';
    };
}

int cmd_info(const Options& o) {
    auto l = load(o);
    const auto& c = *l.code;
    const auto& p = l.domain->presentation();
    std::ostringstream os;
    os << "field: GF(" << c.field()->p() << "^" << c.field()->m() << "), q = " << c.field()->q() << '\n';
    os << "variables:";
    for (auto& n : p.names) os << ' ' << n;
    os << "\ngenerators:";
    if (p.generators.empty()) os << " none";
    for (auto& g : p.generators) os << "\n  " << p.format(g);
    os << "\nn = " << c.length() << "\nl = " << c.ell() << "\nrank Ev_l = " << c.rank() << "\ndim C_l = "
       << c.dual_dimension() << "\nd_FR = " << c.feng_rao() << "\nt = " << c.radius() << "\nDelta:";
    for (auto& u : c.delta()) os << ' ' << p.format(u);
    os << '\n';
    emit(o, os.str());
    return kOk;
}

int cmd_encode(const Options& o) {
    auto l = load(o);
    Word msg;
    if (!o.in.empty()) {
        msg = parse_word(read_file(o.in), l.code->field(), l.code->dual_dimension());
    } else {
        auto rng = trial_rng(seed_of(o, l), 0, 0);
        std::uniform_int_distribution<std::uint32_t> val(0, l.code->field()->q() - 1);
        msg.resize(l.code->dual_dimension());
        for (auto& x : msg) x = l.code->field()->element(val(rng));
    }
    emit(o, format_word(l.code->encode(msg)));
    return kOk;
}

int cmd_corrupt(const Options& o) {
    auto l = load(o);
    if (o.in.empty()) throw Error(ErrorCode::Parse, "corrupt needs --in CODEWORD");
    Word c = parse_word(read_file(o.in), l.code->field(), l.code->length());
    ErrorVector e;
    if (!o.errors.empty()) {
        e = parse_error_pattern(read_file(o.errors), l.code->field(), l.code->length());
    } else {
        if (o.weight.empty()) throw Error(ErrorCode::Parse, "corrupt needs --weight W or --errors PATH");
        auto [w, w2] = parse_range(o.weight);
        if (w != w2) throw Error(ErrorCode::Parse, "corrupt takes a single weight");
        auto rng = trial_rng(seed_of(o, l), w, 0);
        e = random_error(*l.code, w, rng);
    }
    emit(o, format_word(add_error(c, e)));
    if (!o.error_out.empty()) write_file(o.error_out, format_error_pattern(e));
    return kOk;
}

int cmd_decode(const Options& o, bool trace_only) {
    auto l = load(o);
    if (o.in.empty()) throw Error(ErrorCode::Parse, "decode needs --in RECEIVED");
    Word r = parse_word(read_file(o.in), l.code->field(), l.code->length());
    BMSOptions opts;
    std::ostringstream trace;
    if (o.trace || trace_only) opts.on_step = tracer(l, trace);
    try {
        auto res = decode(l.code, r, opts);
        std::cout << trace.str();
        if (trace_only) return kOk;
        emit(o, format_word(res.corrected));
        if (!o.error_out.empty()) write_file(o.error_out, format_error_pattern(res.error));
        std::istringstream diag(res.diagnostics(l.domain->presentation()));
        for (std::string line; std::getline(diag, line);) std::cout << "# " << line << '\n';
        std::cout << format_error_pattern(res.error);
        return kOk;
    } catch (const Error& e) {
        std::cout << trace.str();
        if (e.code() != ErrorCode::DecodeFailure) throw;
        std::cerr << "decode failure: " << e.what() << '\n';
        return kDecodeFailure;
    }
}

int cmd_montecarlo(const Options& o) {
    auto l = load(o);
    if (o.trials < 1) throw Error(ErrorCode::Parse, "--trials must be at least 1");
    std::size_t lo = 0, hi = l.code->radius();
    if (!o.weight.empty()) std::tie(lo, hi) = parse_range(o.weight);
    if (lo > hi) throw Error(ErrorCode::Parse, "empty weight range");
    auto stats = montecarlo(l.code, lo, hi, o.trials, seed_of(o, l), o.threads);
    std::ostringstream os;
    os << "weight,trials,successes,fraction\n";
    for (auto& s : stats) {
        char frac[32];
        std::snprintf(frac, sizeof frac, "%.4f", s.fraction());
        os << s.weight << ',' << s.trials << ',' << s.successes << ',' << frac << '\n';
    }
    emit(o, os.str());
    return kOk;
}

// ---- selftest ----

struct Report {
    int failed = 0;
    void line(const std::string& name, bool ok, const std::string& why = {}) {
        if (!ok) ++failed;
        std::cout << (ok ? "PASS " : "FAIL ") << name << (ok || why.empty() ? "" : ": " + why) << '\n';
    }
};

void selftest_four_point(Report& rep) {
    auto fp = golden::four_point();
    const auto& F = fp.field;
    auto ord = WeightOrder::graded_lex_identity(2);
    std::vector<std::string> names{"X", "Y"};
    LocatorIdeal L;
    L.basis = ideal_of_points(fp.points, F, 2, ord);
    L.footprint = finite_footprint(L.basis, ord, 2);
    auto f1 = elimination_poly(L, 0, ord, F), f2 = elimination_poly(L, 1, ord, F);
    bool ok = f1 == parse_polynomial("X^3 + 3*X^2 + 2*X", F, names) && f2 == parse_polynomial("Y^2 + Y", F, names);
    auto a = F->element(2), one = F->one();
    std::vector<FieldElement> e{F->element(1), F->element(2), F->element(3), F->element(1)};
    auto g = positive_part(f1 * f2, syndrome_series(fp.points, e, Monomial{3, 2}, F)).divided_by_variables();
    std::vector<FieldElement> want{-a * e[0], a * e[1], (one - a) * e[2], a * (a - one) * e[3]};
    for (std::size_t i = 0; i < 4; ++i) ok = ok && g.evaluate(fp.points[i]) == want[i];
    rep.line("four-point-f4 elimination and evaluator", ok);
}

void selftest_hermitian(Report& rep, const std::string& override_path) {
    auto sc = golden::hermitian();
    ErrorVector e = sc.error;
    if (!override_path.empty()) e = parse_error_pattern(read_file(override_path), sc.code->field(), sc.code->length());
    const std::string name = "hermitian-f16 golden decode";
    try {
        auto res = decode(sc.code, add_error(sc.code->zero_word(), e));
        auto want = golden::parse_all(golden::hermitian_locator_text, sc.domain->presentation());
        std::string why;
        if (res.error != sc.error) why = "error pattern differs from the golden one";
        else if (res.locator.basis != want) why = "locator basis differs";
        else if (res.locator.votes.size() != 3) why = "expected three voted syndromes";
        rep.line(name, why.empty(), why);
    } catch (const Error& err) {
        rep.line(name, false, err.what());
    }
}

void selftest_plane(Report& rep) {
    auto sc = golden::toric();
    const auto& p = sc.domain->presentation();
    try {
        auto res = decode(sc.code, add_error(sc.code->zero_word(), sc.error));
        bool ok = res.error == sc.error && res.locator.basis.size() == 2 &&
                  res.locator.basis[0] == p.parse(golden::toric_line_text) &&
                  res.locator.basis[1] == p.parse(golden::toric_quadratic_derived);
        rep.line("plane-f8 golden decode", ok);
    } catch (const Error& err) {
        rep.line("plane-f8 golden decode", false, err.what());
    }
}

void selftest_invariants(Report& rep) {
    auto h = golden::hermitian(), t = golden::toric();
    rep.line("feng-rao bounds", h.code->feng_rao() == 15 && t.code->feng_rao() == 5);
    bool counts = h.code->length() == 64 && t.code->length() == 64;
    for (auto& P : h.code->points()) counts = counts && h.domain->generators()[0].evaluate(P).is_zero();
    rep.line("rational points", counts);
    bool field_ok = true;
    const auto& F = *h.code->field();
    for (auto a : F.elements())
        for (auto b : F.elements()) {
            field_ok = field_ok && (a + b) * (a + b) == a * a + b * b;
            if (!b.is_zero()) field_ok = field_ok && (a / b) * b == a;
        }
    rep.line("field arithmetic", field_ok);
    bool radius_ok = true;
    for (auto* sc : {&h, &t})
        for (auto& s : montecarlo(sc->code, 0, sc->code->radius(), 10, 1234)) radius_ok = radius_ok && s.successes == s.trials;
    rep.line("within-radius decoding", radius_ok);
}

int cmd_selftest(const Options& o) {
    if (!o.config.empty()) throw Error(ErrorCode::Parse, "selftest uses built-in data; --in overrides the golden error");
    Report rep;
    selftest_four_point(rep);
    selftest_hermitian(rep, o.in);
    selftest_plane(rep);
    selftest_invariants(rep);
    std::cout << (rep.failed ? "selftest FAILED (" + std::to_string(rep.failed) + ")" : std::string("selftest passed")) << '\n';
    return rep.failed ? kDecodeFailure : kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Order-domain codes: construction, BMS decoding and error evaluation"};
    app.require_subcommand(1);
    Options o;
    auto common = [&](CLI::App* sub) {
        sub->add_option("--config", o.config, "workbench config file");
        sub->add_option("--in", o.in, "input file");
        sub->add_option("--out", o.out, "output file (default stdout)");
        sub->add_option("--seed", o.seed, "RNG seed (default: config seed)");
    };
    auto* info = app.add_subcommand("info", "print code parameters");
    common(info);
    auto* enc = app.add_subcommand("encode", "encode a message (random if --in is absent)");
    common(enc);
    auto* cor = app.add_subcommand("corrupt", "add a random or explicit error");
    common(cor);
    cor->add_option("--weight", o.weight, "error weight");
    cor->add_option("--errors", o.errors, "explicit error pattern file (index:code lines)");
    cor->add_option("--error-out", o.error_out, "write the added error pattern here");
    auto* dec = app.add_subcommand("decode", "decode a received word");
    common(dec);
    dec->add_flag("--trace", o.trace, "print one line per BMS step");
    dec->add_option("--error-out", o.error_out, "write the recovered error pattern here");
    auto* tr = app.add_subcommand("trace", "print the BMS trace of a received word");
    common(tr);
    auto* st = app.add_subcommand("selftest", "run the built-in golden scenarios");
    common(st);
    auto* mc = app.add_subcommand("montecarlo", "success rate of random-error trials as CSV");
    common(mc);
    mc->add_option("--weight", o.weight, "weight or range a-b (default 0..t)");
    mc->add_option("--trials", o.trials, "trials per weight");
    mc->add_option("--threads", o.threads, "worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }
    try {
        if (*info) return cmd_info(o);
        if (*enc) return cmd_encode(o);
        if (*cor) return cmd_corrupt(o);
        if (*dec) return cmd_decode(o, false);
        if (*tr) return cmd_decode(o, true);
        if (*st) return cmd_selftest(o);
        if (*mc) return cmd_montecarlo(o);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.code() == ErrorCode::DecodeFailure ? kDecodeFailure : kUsage;
    }
    return kUsage;
}
