// kacq command-line front end.
//
// Exit codes: 0 success, 1 verification failure, 2 input error, 3 resource cap.

#include <cstdint>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "kacq/covering.hpp"
#include "kacq/errors.hpp"
#include "kacq/kac.hpp"
#include "kacq/oracle.hpp"
#include "kacq/quiver_io.hpp"
#include "kacq/trees.hpp"

namespace {

using namespace kacq;

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_input = 2;
constexpr int exit_resource = 3;

struct Globals {
    std::string cache;
    unsigned threads = 1;
    std::uint64_t node_cap = 5'000'000;
    bool machine = false;
};

struct Inputs {
    std::string quiver;
    std::string dim;
};

Quiver load(const Inputs& in) {
    if (in.quiver.empty())
        throw InputError("--quiver is required");
    return load_quiver(in.quiver);
}

DimVector dim_for(const Quiver& q, const Inputs& in) {
    if (in.dim.empty())
        throw InputError("--dim is required");
    auto alpha = DimVector::parse(in.dim);
    if (alpha.size() != q.num_vertices())
        throw InputError("--dim has " + std::to_string(alpha.size()) + " entries but the quiver has " +
                         std::to_string(q.num_vertices()) + " vertices");
    return alpha;
}

std::unique_ptr<KacStore> open_store(const Globals& g) {
    if (g.cache.empty())
        return std::make_unique<KacStore>();
    return std::make_unique<KacStore>(g.cache);
}

const char* verdict(bool ok) { return ok ? "OK" : "FAIL"; }

std::vector<unsigned> parse_primes(const std::string& text) {
    std::vector<unsigned> primes;
    if (text.empty())
        return primes;
    auto parsed = DimVector::parse(text);
    for (int v : parsed.entries())
        primes.push_back(static_cast<unsigned>(v));
    return primes;
}

std::pair<long, long> parse_ratio(const std::string& text) {
    auto slash = text.find('/');
    try {
        std::size_t used = 0;
        if (slash == std::string::npos) {
            long n = std::stol(text, &used);
            if (used != text.size())
                throw InputError("");
            return {n, 1};
        }
        std::string a = text.substr(0, slash), b = text.substr(slash + 1);
        long n = std::stol(a, &used);
        if (used != a.size())
            throw InputError("");
        long d = std::stol(b, &used);
        if (used != b.size() || d <= 0)
            throw InputError("");
        return {n, d};
    } catch (const std::exception&) {
        throw InputError("--k must be an integer or a ratio like 1/2, got '" + text + "'");
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kac polynomials, covering quivers and tree module counts"};
    app.fallthrough();
    app.require_subcommand(1);

    Globals g;
    app.add_option("--cache", g.cache, "Append-only Kac polynomial cache file");
    app.add_option("--threads", g.threads, "Worker threads")->check(CLI::Range(1u, 256u));
    app.add_option("--node-cap", g.node_cap, "Node cap for the covering search")->check(CLI::PositiveNumber);
    app.add_flag("--machine", g.machine, "Tab-separated output only");

    Inputs in;
    auto add_inputs = [&in](CLI::App* cmd, bool with_dim) {
        cmd->add_option("--quiver", in.quiver, "Quiver file or builtin (kronecker:m, loops:g, cycle:n, path:n, star:k)")
            ->required();
        if (with_dim)
            cmd->add_option("--dim", in.dim, "Dimension vector in vertex declaration order, e.g. 2,3")->required();
    };

    std::ostringstream out;
    int code = exit_ok;
    std::function<void()> action;

    auto* kac = app.add_subcommand("kac", "Kac polynomial and its value at q = 1");
    add_inputs(kac, true);
    kac->callback([&] {
        action = [&] {
            auto q = load(in);
            auto alpha = dim_for(q, in);
            auto store = open_store(g);
            auto r = cached_kac(*store, q, alpha);
            if (g.machine)
                out << "kac\t" << alpha.to_string() << '\t' << r.polynomial.render() << '\t' << r.value_at_one << '\n';
            else
                out << r.polynomial.render() << "\na(1)=" << r.value_at_one << '\n';
        };
    });

    auto* root = app.add_subcommand("root", "Root type and Tits form");
    add_inputs(root, true);
    root->callback([&] {
        action = [&] {
            auto q = load(in);
            auto alpha = dim_for(q, in);
            auto type = classify_root(q, alpha);
            auto tits = tits_form(q, alpha);
            if (g.machine)
                out << "root\t" << alpha.to_string() << '\t' << to_string(type) << '\t' << tits << '\n';
            else
                out << to_string(type) << " tits=" << tits << '\n';
        };
    });

    auto* cover = app.add_subcommand("cover", "Covering quiver dimension vectors");
    cover->require_subcommand(1);
    auto* enumerate = cover->add_subcommand("enumerate", "Classes of compatible covering dimension vectors");
    add_inputs(enumerate, true);
    enumerate->callback([&] {
        action = [&] {
            auto q = load(in);
            auto alpha = dim_for(q, in);
            auto classes = enumerate_compatible(q, alpha, {g.node_cap});
            for (const auto& c : classes) {
                if (g.machine)
                    out << "class\t" << c.key << '\t' << c.support_quiver.num_vertices() << '\t'
                        << c.support_quiver.num_arrows() << '\n';
                else
                    out << c.key << "  support=" << c.support_quiver.num_vertices() << "v/"
                        << c.support_quiver.num_arrows() << "a\n";
            }
            if (g.machine)
                out << "classes\t" << classes.size() << '\n';
            else
                out << "classes=" << classes.size() << '\n';
        };
    });

    auto* verify = cover->add_subcommand("verify", "Check a(1) against the sum over covering classes");
    add_inputs(verify, true);
    verify->callback([&] {
        action = [&] {
            auto q = load(in);
            auto alpha = dim_for(q, in);
            auto store = open_store(g);
            auto report = verify_main_theorem(q, alpha, {g.node_cap, g.threads, store.get()});
            if (g.machine) {
                for (const auto& c : report.contributions)
                    if (c.value != 0)
                        out << "class\t" << c.cls.key << '\t' << c.cls.support_quiver.num_vertices() << '\t'
                            << c.cls.support_quiver.num_arrows() << '\t' << c.polynomial.render() << '\t' << c.value
                            << '\n';
                out << "total\t" << report.lhs << '\t' << report.rhs << '\t' << report.contributing_classes() << '\t'
                    << verdict(report.ok) << '\n';
            } else {
                out << report.render();
            }
            if (!report.ok)
                code = exit_failed;
        };
    });

    auto* trees = app.add_subcommand("trees", "Spanning trees and tree module counts");
    trees->require_subcommand(1);

    auto* spanning = trees->add_subcommand("spanning", "Matrix-Tree count of the underlying graph");
    add_inputs(spanning, false);
    spanning->callback([&] {
        action = [&] {
            auto n = spanning_tree_count(load(in));
            out << (g.machine ? "spanning\t" : "spanning_trees=") << n << '\n';
        };
    });

    auto* thin = trees->add_subcommand("thin-check", "a(1) at the all-ones vector against the spanning tree count");
    add_inputs(thin, false);
    thin->callback([&] {
        action = [&] {
            auto c = thin_kac_at_one_check(load(in));
            if (g.machine)
                out << "thin\t" << c.kac_at_one << '\t' << c.spanning_trees << '\t' << verdict(c.ok) << '\n';
            else
                out << "a(1)=" << c.kac_at_one << " spanning_trees=" << c.spanning_trees << ' ' << verdict(c.ok)
                    << '\n';
            if (!c.ok)
                code = exit_failed;
        };
    });

    CoverThinParams ct;
    auto* coverthin = trees->add_subcommand("coverthin", "Cover-thin tree module count for K(m), (d, e)");
    coverthin->add_option("--m", ct.m)->required();
    coverthin->add_option("--d", ct.d)->required();
    coverthin->add_option("--e", ct.e)->required();
    coverthin->callback([&] {
        action = [&] {
            if (ct.m < 1 || ct.d < 1 || ct.e < 1)
                throw InputError("--m, --d and --e must be positive");
            out << (g.machine ? "coverthin\t" : "ct=") << cover_thin_count(ct) << '\n';
        };
    });

    int growth_m = 3, growth_dmax = 20;
    std::string growth_k = "1";
    auto* growth = trees->add_subcommand("growth", "ln(ct(d, kd))/d against the asymptotic bound");
    growth->add_option("--m", growth_m)->required();
    growth->add_option("--k", growth_k, "Integer or ratio, e.g. 1/2")->required();
    growth->add_option("--dmax", growth_dmax)->required();
    growth->callback([&] {
        action = [&] {
            auto [num, den] = parse_ratio(growth_k);
            if (growth_dmax < 1 || growth_dmax > 2000)
                throw InputError("--dmax must be between 1 and 2000");
            out << render_growth_table(growth_table(growth_m, num, den, growth_dmax));
        };
    });

    auto* oracle = app.add_subcommand("oracle", "Brute-force cross checks");
    oracle->require_subcommand(1);

    unsigned brute_p = 2;
    auto* brute = oracle->add_subcommand("brute", "Count absolutely indecomposables over F_p by exhaustion");
    add_inputs(brute, true);
    brute->add_option("--p", brute_p, "Prime")->required();
    brute->callback([&] {
        action = [&] {
            auto q = load(in);
            auto alpha = dim_for(q, in);
            auto count = count_abs_indec(q, alpha, brute_p);
            mpz_class engine = kac_polynomial(q, alpha).evaluate(brute_p);
            bool ok = engine == mpz_class(count);
            if (g.machine)
                out << "brute\t" << alpha.to_string() << '\t' << brute_p << '\t' << engine << '\t' << count << '\t'
                    << verdict(ok) << '\n';
            else
                out << "oracle=" << count << " engine=" << engine << ' ' << verdict(ok) << '\n';
            if (!ok)
                code = exit_failed;
        };
    });

    CoverThinParams ot;
    auto* otrees = oracle->add_subcommand("trees", "Enumerate properly coloured trees directly");
    otrees->add_option("--m", ot.m)->required();
    otrees->add_option("--d", ot.d)->required();
    otrees->add_option("--e", ot.e)->required();
    otrees->callback([&] {
        action = [&] {
            auto count = enumerate_cover_thin_trees(ot.m, ot.d, ot.e);
            auto formula = cover_thin_count(ot);
            bool ok = formula == mpz_class(count);
            if (g.machine)
                out << "trees\t" << count << '\t' << formula << '\t' << verdict(ok) << '\n';
            else
                out << "trees=" << count << " formula=" << formula << ' ' << verdict(ok) << '\n';
            if (!ok)
                code = exit_failed;
        };
    });

    int sweep_max = 3;
    std::string sweep_primes = "2,3";
    auto* sweep = oracle->add_subcommand("sweep", "Engine against brute force on all small quivers");
    sweep->add_option("--max-dim", sweep_max, "Largest total dimension")->check(CLI::Range(1, 6));
    sweep->add_option("--primes", sweep_primes, "Comma-separated primes");
    sweep->callback([&] {
        action = [&] {
            auto report = oracle_sweep(sweep_max, parse_primes(sweep_primes), g.threads);
            out << report.render();
            if (!g.machine)
                out << "checked=" << report.checked() << " skipped=" << report.skipped()
                    << " mismatches=" << report.mismatches() << '\n';
            if (report.mismatches() > 0)
                code = exit_failed;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_input;
    }

    try {
        if (action)
            action();
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return exit_input;
    } catch (const DomainError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return exit_input;
    } catch (const ResourceError& e) {
        std::cerr << "resource limit: " << e.what() << '\n';
        return exit_resource;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return exit_failed;
    }
    std::cout << out.str();
    return code;
}
