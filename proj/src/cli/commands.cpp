#include "segreta/cli/commands.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "segreta/chow/zeta.hpp"
#include "segreta/cli/ideal_file.hpp"
#include "segreta/engine/segre_engine.hpp"

namespace segreta::cli {

using nlohmann::json;

namespace {

struct Options {
    std::string command;
    std::string input;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> field;
    std::optional<int> N;
    std::optional<int> m;
    std::optional<int> degree;
    int retries = engine::kDefaultMaxRetries;
    std::string output = "text";
};

class ValidationError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

std::string hex64(std::uint64_t v) {
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << v;
    return os.str();
}

json tensored_json(const chow::TwistedSegreClass& s) {
    return {{"twist", s.twist}, {"coefficients", s.cls.coeffs()}};
}

json report_json(const engine::ResidualReport& r) {
    json steps = json::array();
    for (const auto& s : r.steps)
        steps.push_back({{"k", s.k},
                         {"proj_dim", s.hilbert.proj_dim},
                         {"degree", s.hilbert.degree},
                         {"hilbert_numerator", s.hilbert.numerator},
                         {"retries", s.retries},
                         {"N", s.N},
                         {"basis", s.basis}});
    return {{"attempts", r.attempts}, {"steps", std::move(steps)}};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot read input file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

template <class F>
void compute(const Options& opt, const IdealFile& file, const F& field, std::uint64_t seed, json& env) {
    auto I = to_ideal(file, field);
    const int n = file.nvars() - 1;
    if (n < 1) throw ValidationError("the ring needs at least two variables");

    if (opt.command == "csm") {
        if (file.generators.size() != 1) throw ValidationError("csm expects a single generator");
        const int e = file.degree;
        if (field.characteristic() != 0 && static_cast<std::int64_t>(field.characteristic()) <= std::int64_t{e} * n)
            throw ValidationError("csm over " + field.name() + " needs p > e*n = " + std::to_string(e * n) +
                                  "; use a larger prime or Q");
        auto res = engine::csm_hypersurface(I.generators().front(), seed, opt.retries);
        const auto& c = res.csm.coeffs();
        env["csm"] = {{"coefficients", c}, {"euler_characteristic", c.back()}};
        if (res.singular_tensored) env["tensored"] = tensored_json(*res.singular_tensored);
        if (res.report) {
            env["N"] = res.report->N;
            env["report"] = report_json(*res.report);
        }
        env["degree"] = e;
        return;
    }

    const int d = opt.degree.value_or(file.degree);
    if (d < file.degree)
        throw ValidationError("--degree " + std::to_string(d) + " is below the declared degree " +
                              std::to_string(file.degree));
    auto job = engine::SegreJob<F>::create(I, seed, d, opt.retries);
    env["degree"] = d;
    engine::ResidualReport report;
    auto t = engine::tensored_segre(job, &report);
    auto s = chow::to_ordinary(t);
    env["N"] = report.N;
    env["tensored"] = tensored_json(t);
    env["ordinary"] = s.coeffs();

    if (opt.command == "residual") {
        env["report"] = report_json(report);
        env["tensored"] = nullptr;
        env["ordinary"] = nullptr;
    } else if (opt.command == "zeta") {
        auto z = chow::zeta_from_segre(s, d);
        json zj = {{"d", d}, {"numerator", z.numerator}, {"N", nullptr}, {"expansion", nullptr}};
        if (opt.N) {
            if (*opt.N < n) throw ValidationError("--N must be at least " + std::to_string(n));
            zj["N"] = *opt.N;
            zj["expansion"] = chow::zeta_expand(z, *opt.N).coeffs();
        }
        env["zeta"] = std::move(zj);
    } else if (opt.command == "join") {
        if (*opt.m < 0) throw ValidationError("--m must be nonnegative");
        auto j = chow::join_class(t, *opt.m);
        env["join"] = {{"m", *opt.m},
                       {"ambient_dim", n + *opt.m + 1},
                       {"tensored", tensored_json(j)},
                       {"ordinary", chow::to_ordinary(j).coeffs()}};
    } else if (opt.command == "check") {
        auto eff = chow::effectivity_check(t);
        env["checks"] = {{"effective", eff.effective},
                         {"offending", eff.offending},
                         {"log_concave", chow::huh_logconcavity_check(t, d)},
                         {"predicted_counts", chow::predicted_counts(t, d)}};
    }
}

std::string vec(const json& a) {
    std::string out;
    for (const auto& v : a) out += (out.empty() ? "" : " ") + v.dump();
    return out;
}

std::string cls(const json& a) { return chow::ChowClass(a.get<std::vector<chow::Integer>>()).to_string(); }

void render_text(const json& env, std::ostream& out) {
    auto row = [&out](const std::string& key, const std::string& value) {
        out << std::left << std::setw(18) << key << value << "\n";
    };
    row("command", env["command"].get<std::string>());
    row("input", env["input"].get<std::string>());
    row("field", env["field"].get<std::string>() + (env["probabilistic"].get<bool>() ? " (probabilistic)" : ""));
    row("seed", env["seed"].dump() + " (" + env["seed_source"].get<std::string>() + ")");
    row("ambient", "P^" + env["ambient_dim"].dump() + ", degree " + env["degree"].dump());
    if (!env["N"].is_null()) row("N", vec(env["N"]));
    if (!env["tensored"].is_null())
        row("tensored", cls(env["tensored"]["coefficients"]) + "  [twist " + env["tensored"]["twist"].dump() + "]");
    if (!env["ordinary"].is_null()) row("ordinary", cls(env["ordinary"]));
    if (const auto& z = env["zeta"]; !z.is_null()) {
        row("zeta numerator", vec(z["numerator"]));
        if (!z["expansion"].is_null()) row("expansion", "P^" + z["N"].dump() + ": " + cls(z["expansion"]));
    }
    if (const auto& j = env["join"]; !j.is_null()) {
        row("join tensored", "P^" + j["ambient_dim"].dump() + ": " + cls(j["tensored"]["coefficients"]));
        row("join ordinary", "P^" + j["ambient_dim"].dump() + ": " + cls(j["ordinary"]));
    }
    if (const auto& c = env["csm"]; !c.is_null()) {
        row("csm", cls(c["coefficients"]));
        row("euler", c["euler_characteristic"].dump());
    }
    if (const auto& c = env["checks"]; !c.is_null()) {
        row("effective", c["effective"].dump());
        row("log-concave", c["log_concave"].dump());
        row("predicted counts", vec(c["predicted_counts"]));
    }
    if (const auto& r = env["report"]; !r.is_null()) {
        row("attempts", r["attempts"].dump());
        for (const auto& s : r["steps"])
            row("R_" + s["k"].dump(), "dim " + s["proj_dim"].dump() + ", degree " + s["degree"].dump() + ", N " +
                                          s["N"].dump() + ", retries " + s["retries"].dump());
    }
    row("time", std::to_string(env["timing_ms"].get<double>()) + " ms");
}

}  // namespace

std::uint64_t fnv1a(std::string_view bytes) noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

json strip_timing(json envelope) {
    envelope.erase("timing_ms");
    return envelope;
}

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"Segre classes, Segre zeta functions and CSM classes of subschemes of projective space", "segreta"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "segreta 0.1.0");

    auto add_common = [&opt](CLI::App* sub) {
        sub->add_option("--input", opt.input, "Ideal file")->required();
        sub->add_option("--seed", opt.seed, "Seed (default: $SEGRETA_SEED, else a hash of the input)");
        sub->add_option("--field", opt.field, "Q or Fp:<prime>; overrides the file");
        sub->add_option("--retries", opt.retries, "Redraws allowed when a residual has excess dimension")
            ->check(CLI::NonNegativeNumber);
        sub->add_option("--output", opt.output, "text or json")->check(CLI::IsMember({"text", "json"}));
    };
    auto add_degree = [&opt](CLI::App* sub) {
        sub->add_option("--degree", opt.degree, "Present the ideal by its forms of this degree")
            ->check(CLI::PositiveNumber);
    };
    for (auto [name, help] : {std::pair{"segre", "Tensored and ordinary Segre classes"},
                              std::pair{"zeta", "Segre zeta function numerator and expansion"},
                              std::pair{"join", "Segre class of the join with P^{m}"},
                              std::pair{"csm", "CSM class of a hypersurface"},
                              std::pair{"check", "Effectivity and log-concavity checks"},
                              std::pair{"residual", "Residual degrees and schemes"}}) {
        auto* sub = app.add_subcommand(name, help);
        add_common(sub);
        if (std::string_view(name) != "csm") add_degree(sub);
        if (std::string_view(name) == "zeta") sub->add_option("--N", opt.N, "Expand in P^N");
        if (std::string_view(name) == "join") sub->add_option("--m", opt.m, "Dimension of the joined space")->required();
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        opt.command = app.get_subcommands().front()->get_name();
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::CallForVersion&) {
        out << "segreta 0.1.0\n";
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kValidationError;
    }

    try {
        const std::string text = read_file(opt.input);
        auto file = parse_ideal(text);
        FieldSpec fs = opt.field ? FieldSpec::parse(*opt.field) : file.field;

        std::uint64_t seed;
        std::string seed_source;
        if (opt.seed) {
            seed = *opt.seed;
            seed_source = "flag";
        } else if (const char* env = std::getenv("SEGRETA_SEED"); env && *env) {
            std::string_view s(env);
            auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), seed);
            if (ec != std::errc() || p != s.data() + s.size())
                throw ValidationError("SEGRETA_SEED is not an unsigned 64-bit integer");
            seed_source = "env";
        } else {
            seed = fnv1a(text);
            seed_source = "input-hash";
        }

        json env = {{"schema", "segreta.result/1"},
                    {"command", opt.command},
                    {"argv", args},
                    {"input", opt.input},
                    {"input_fnv1a", hex64(fnv1a(text))},
                    {"field", fs.to_string()},
                    {"probabilistic", opt.command == "csm" && !fs.rational},
                    {"seed", seed},
                    {"seed_source", seed_source},
                    {"retries", opt.retries},
                    {"ambient_dim", file.nvars() - 1},
                    {"degree", file.degree},
                    {"N", nullptr},
                    {"tensored", nullptr},
                    {"ordinary", nullptr},
                    {"zeta", nullptr},
                    {"join", nullptr},
                    {"csm", nullptr},
                    {"checks", nullptr},
                    {"report", nullptr},
                    {"timing_ms", 0.0}};

        const auto t0 = std::chrono::steady_clock::now();
        if (fs.rational)
            compute(opt, file, kernel::RationalField(), seed, env);
        else
            compute(opt, file, kernel::PrimeField(fs.prime), seed, env);
        env["timing_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

        if (opt.output == "json")
            out << env.dump(2) << "\n";
        else
            render_text(env, out);
        return kOk;
    } catch (const engine::RetryExhausted& e) {
        err << "error: " << e.what() << "\n";
        return kRetryExhausted;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kValidationError;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return kValidationError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kValidationError;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternalError;
    }
}

}  // namespace segreta::cli
