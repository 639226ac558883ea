// torusk: command-line front end reading and writing JSON.

#include "torusk/cocycle.hpp"
#include "torusk/errors.hpp"
#include "torusk/json_io.hpp"
#include "torusk/ktheory.hpp"
#include "torusk/lattice.hpp"
#include "torusk/spectral.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace torusk;
using json_io::json;

namespace {

const std::vector<std::string> kCommands{
    "smith",         "kernel",     "fm",       "fm-inv",          "wedge",       "subtorus-class",
    "subtorus-perp", "pair",       "cocycle-from-equations",      "index",       "index-oracle",
    "cocycle-class", "torsion-order", "dolbeault", "heisenberg-index", "schrodinger", "commutators",
    "weyl",
};

const double kGolden = 0.6180339887498949;
const std::size_t kHead = 8;

struct Options {
    std::string command;
    std::optional<int> d;
    std::optional<int> n;
    std::optional<long> p;
    std::optional<long> q;
    double theta = kGolden;
    int cutoff = 20;
    double tol = 1e-8;
    std::optional<std::string> window;
    std::optional<unsigned long> seed;
    std::string input = "-";
    std::string op = "dolbeault";
};

json read_input(const std::string& source) {
    std::string text;
    if (source == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(source);
        if (in)
            text.assign(std::istreambuf_iterator<char>(in), {});
        else
            text = source; // inline JSON
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("malformed JSON input: ") + e.what());
    }
}

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw ValidationError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

std::pair<double, double> parse_window(const Options& o) {
    if (!o.window)
        return {o.cutoff / 4.0, static_cast<double>(o.cutoff)};
    const auto comma = o.window->find(',');
    if (comma == std::string::npos)
        throw ValidationError("--window expects lo,hi");
    try {
        return {std::stod(o.window->substr(0, comma)), std::stod(o.window->substr(comma + 1))};
    } catch (const std::exception&) {
        throw ValidationError("--window expects two decimals");
    }
}

KClass read_kclass(const json& j, const Options& o) {
    if (j.is_array() && !o.d)
        throw ValidationError("a bare terms array needs --d");
    return json_io::kclass_from_json(j, o.d);
}

// The output mirrors the input shape so that fm | fm-inv round-trips.
json kclass_like(const KClass& k, const json& input) {
    return input.is_array() ? json_io::terms_to_json(k) : json_io::to_json(k);
}

std::pair<KClass, KClass> read_pair(const json& j, const Options& o) {
    if (j.is_array() && j.size() == 2 && !j[0].is_number())
        return {read_kclass(j[0], o), read_kclass(j[1], o)};
    return {read_kclass(field(j, "a"), o), read_kclass(field(j, "b"), o)};
}

std::vector<double> head(const std::vector<double>& v) {
    std::vector<double> out(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(std::min(kHead, v.size())));
    return out;
}

json_io::SpectralReport base_report(const TruncatedOperator& op) {
    json_io::SpectralReport r;
    r.name = op.meta.name;
    r.params = op.meta.params;
    r.cutoff = op.cutoff;
    return r;
}

void add_index(json_io::SpectralReport& r, const TruncatedOperator& op, double tol) {
    const IndexReport ir = index_report(op, tol);
    r.index = ir.index;
    r.singular_values_head = head(ir.singular_values);
}

void add_commutators(json_io::SpectralReport& r, const TruncatedOperator& op, double theta) {
    const auto [u, v] = representation_generators(theta, op.cutoff);
    r.commutator_norms["U"] = commutator_norm(op, u);
    r.commutator_norms["V"] = commutator_norm(op, v);
    r.params["theta"] = theta;
}

TruncatedOperator schrodinger_from(const Options& o) {
    return build_schrodinger_product(o.n.value_or(1), o.d.value_or(1), o.cutoff);
}

json run(const Options& o) {
    const std::string& c = o.command;

    if (c == "dolbeault") {
        const auto op = build_dolbeault_torus(o.cutoff);
        auto r = base_report(op);
        add_index(r, op, o.tol);
        if (o.window) {
            const auto [lo, hi] = parse_window(o);
            r.weyl_slope = weyl_exponent(op, lo, hi);
        }
        return json_io::to_json(r);
    }
    if (c == "heisenberg-index") {
        if (!o.p || !o.q)
            throw ValidationError("heisenberg-index needs --p and --q");
        const auto op = heisenberg_model(*o.p, *o.q, o.cutoff, o.theta);
        auto r = base_report(op);
        add_index(r, op, o.tol);
        return json_io::to_json(r);
    }
    if (c == "schrodinger") {
        const auto op = schrodinger_from(o);
        auto r = base_report(op);
        if (op.form == OperatorForm::Block)
            add_index(r, op, o.tol);
        else
            r.singular_values_head = head(spectrum_magnitudes(op));
        const auto [lo, hi] = parse_window(o);
        r.weyl_slope = weyl_exponent(op, lo, hi);
        return json_io::to_json(r);
    }
    if (c == "commutators") {
        const auto op = build_dolbeault_torus(o.cutoff);
        auto r = base_report(op);
        add_commutators(r, op, o.theta);
        return json_io::to_json(r);
    }
    if (c == "weyl") {
        TruncatedOperator op;
        if (o.op == "dolbeault")
            op = build_dolbeault_torus(o.cutoff);
        else if (o.op == "schrodinger")
            op = schrodinger_from(o);
        else
            throw ValidationError("--operator must be dolbeault or schrodinger");
        auto r = base_report(op);
        const auto [lo, hi] = parse_window(o);
        r.weyl_slope = weyl_exponent(op, lo, hi);
        r.params["window_lo"] = lo;
        r.params["window_hi"] = hi;
        return json_io::to_json(r);
    }

    const json in = read_input(o.input);

    if (c == "smith")
        return json_io::to_json(smith_normal_form(json_io::matrix_from_json(in)));
    if (c == "kernel") {
        const IntMatrix a = json_io::matrix_from_json(in);
        return json{{"kernel", json_io::to_json(kernel_lattice(a))},
                    {"cokernel", json_io::to_json(cokernel_invariants(a))}};
    }
    if (c == "fm")
        return kclass_like(fm_transform(read_kclass(in, o)), in);
    if (c == "fm-inv")
        return kclass_like(fm_inverse(read_kclass(in, o)), in);
    if (c == "wedge") {
        const auto [a, b] = read_pair(in, o);
        return json_io::to_json(wedge(a, b));
    }
    if (c == "pair") {
        const auto [a, b] = read_pair(in, o);
        return json_io::to_json(pairing(a, b));
    }
    if (c == "subtorus-class")
        return json_io::to_json(class_of_subtorus(json_io::subtorus_from_json(in)));
    if (c == "subtorus-perp")
        return json_io::to_json(perp_subtorus(json_io::subtorus_from_json(in)));
    if (c == "cocycle-from-equations") {
        const auto [a, u] = json_io::equations_from_json(in);
        return json_io::to_json(equations_to_parametrization(a, u));
    }
    if (c == "index")
        return json_io::to_json(intersection_index(json_io::cocycle_from_json(in)));
    if (c == "cocycle-class")
        return json_io::to_json(cocycle_class(json_io::cocycle_from_json(in)));
    if (c == "index-oracle") {
        const GeometricCocycle cyc = json_io::cocycle_from_json(in);
        std::vector<Rational> point(static_cast<std::size_t>(cyc.base_dim));
        if (in.contains("base_point")) {
            const json& bp = in.at("base_point");
            if (!bp.is_array() || bp.size() != point.size())
                throw ValidationError("base_point must be an array of length d");
            for (std::size_t i = 0; i < point.size(); ++i)
                point[i] = json_io::rational_from_json(bp[i]);
        } else if (o.seed) {
            std::mt19937_64 rng(*o.seed);
            std::uniform_int_distribution<long> num(0, 96);
            for (auto& x : point) {
                x = Rational(num(rng), 97);
                x.canonicalize();
            }
        }
        json out{{"count", json_io::to_json(intersection_index_oracle(cyc, point))}, {"base_point", json::array()}};
        for (const auto& x : point)
            out["base_point"].push_back(json_io::to_json(x));
        return out;
    }
    if (c == "torsion-order") {
        Integer chi;
        if (in.is_object() && in.contains("genus"))
            chi = Integer(2) - 2 * json_io::integer_from_json(in.at("genus"));
        else if (in.is_object())
            chi = json_io::integer_from_json(field(in, "chi"));
        else
            chi = json_io::integer_from_json(in);
        return json_io::to_json(euler_torsion_order(chi));
    }
    throw ValidationError("unknown command: " + c);
}

int fail(int code, const char* kind, const std::string& message) {
    const json err{{"error", {{"kind", kind}, {"message", message}}}};
    std::cout << err.dump() << '\n';
    return code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Integer K-theory of tori, cocycle indices and truncated spectral triples"};
    Options o;
    app.add_option("command", o.command, "Command to run")->required()->check(CLI::IsMember(kCommands));
    app.add_option("--d", o.d, "Ambient or base dimension");
    app.add_option("--n", o.n, "Fibre dimension");
    app.add_option("--p", o.p, "Heisenberg module label p");
    app.add_option("--q", o.q, "Heisenberg module label q");
    app.add_option("--theta", o.theta, "Rotation angle")->capture_default_str();
    app.add_option("--cutoff", o.cutoff, "Mode cutoff N")->capture_default_str()->check(CLI::PositiveNumber);
    app.add_option("--tol", o.tol, "Relative singular value threshold")->capture_default_str();
    app.add_option("--window", o.window, "Counting window lo,hi (default N/4,N)");
    app.add_option("--seed", o.seed, "Seed for a random base point (index-oracle)");
    app.add_option("--input", o.input, "Input path, '-' for stdin, or inline JSON")->capture_default_str();
    app.add_option("--operator", o.op, "Operator for weyl: dolbeault or schrodinger")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return fail(2, "validation", e.what());
    }

    try {
        std::cout << run(o).dump() << '\n';
        return 0;
    } catch (const ValidationError& e) {
        return fail(2, "validation", e.what());
    } catch (const json::exception& e) {
        return fail(2, "validation", e.what());
    } catch (const PreconditionError& e) {
        return fail(3, "precondition", e.what());
    } catch (const NumericalError& e) {
        return fail(4, "numerical", e.what());
    } catch (const std::exception& e) {
        return fail(4, "numerical", e.what());
    }
}
