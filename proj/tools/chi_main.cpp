// chi — Euler characteristics of spaces described by fibrous decompositions,
// with derivation traces and homology cross-checks.

#include <cstdint>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fibrous/catalog.hpp"
#include "fibrous/derivation.hpp"
#include "fibrous/dsl.hpp"
#include "fibrous/errors.hpp"
#include "fibrous/eval.hpp"
#include "fibrous/homology.hpp"
#include "fibrous/json_io.hpp"

namespace {

using namespace fibrous;

// Exit codes; also listed in --help.
enum ExitCode : int {
    exit_ok = 0,
    exit_parse = 2,    // expression does not parse
    exit_resolve = 3,  // catalog resolution failed (name, arity, domain)
    exit_verify = 4,   // a verification row failed
    exit_io = 5,       // file unreadable
    exit_schema = 6,   // JSON file does not match the schema
    exit_complex = 7,  // complex or skeleton fails validation
    exit_overflow = 8, // exact 64-bit arithmetic overflowed
};

constexpr const char* kExitCodeHelp =
    "Exit codes:\n"
    "  0  success\n"
    "  2  expression parse error\n"
    "  3  catalog resolution error (unknown name, arity, parameter domain)\n"
    "  4  verification failure\n"
    "  5  file I/O error\n"
    "  6  JSON schema violation\n"
    "  7  invalid complex or skeleton\n"
    "  8  integer overflow (results are exact 64-bit, never wrapped)\n";

std::string list_text(const std::vector<std::int64_t>& xs, const char* sep = ", ") {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i)
            out += sep;
        out += std::to_string(xs[i]);
    }
    return out;
}

// ---- eval ------------------------------------------------------------

// One line per derivation step; alternating-sum nodes also print their
// arithmetic the way the examples are usually worked by hand.
void print_derivation(std::ostream& os, const ChiDerivation& d, int indent,
                      const std::string& label) {
    os << std::string(static_cast<std::size_t>(indent) * 2, ' ') << label << render(d.term)
       << ": chi = " << d.chi << "  [" << chi_rule_name(d.rule) << "]";
    if (d.rule == ChiRule::alternating_sum) {
        os << "  (";
        for (std::size_t i = 0; i < d.children.size(); ++i) {
            const auto& c = d.children[i];
            if (i)
                os << (c.sign > 0 ? " + " : " - ");
            else if (c.sign < 0)
                os << "-";
            const std::int64_t v = c.node->chi;
            if (v < 0)
                os << "(" << v << ")";
            else
                os << v;
        }
        os << " = " << d.chi << ")";
    }
    os << "\n";

    if (d.rule == ChiRule::multiple && !d.children.empty()) {
        // all copies are identical; print one
        print_derivation(os, *d.children[0].node, indent + 1,
                         "x" + std::to_string(d.children.size()) + ": ");
        return;
    }
    for (const auto& c : d.children) {
        std::string child_label;
        switch (c.level.kind) {
        case FiberLevel::Kind::transitional:
            child_label = "X" + std::to_string(c.level.index) + " at level " +
                          std::to_string(c.level.index) + ": ";
            break;
        case FiberLevel::Kind::running:
            child_label = "Y" + std::to_string(c.level.index) + " at level (" +
                          std::to_string(c.level.index - 1) + "," +
                          std::to_string(c.level.index) + "): ";
            break;
        case FiberLevel::Kind::none:
            child_label = d.rule == ChiRule::catalog_expansion ? "= " : "+ ";
            break;
        }
        print_derivation(os, *c.node, indent + 1, child_label);
    }
}

int run_eval(const std::string& expr, bool explain, bool as_json) {
    const TermPtr term = parse(expr);
    const DerivPtr d = chi(term, builtin_catalog());
    if (as_json) {
        std::cout << eval_report_json(expr, *d).dump(2) << "\n";
        return exit_ok;
    }
    std::cout << "chi = " << d->chi << "\n";
    if (explain)
        print_derivation(std::cout, *d, 0, "");
    return exit_ok;
}

// ---- verify ----------------------------------------------------------

struct OracleValue {
    std::string route; // "faces", "betti" or "cells"
    std::int64_t chi = 0;
};

struct VerifyRow {
    std::vector<std::int64_t> params;
    std::int64_t chi_value = 0;
    std::optional<std::int64_t> expected;
    std::vector<std::pair<std::string, std::int64_t>> alternatives;
    std::vector<OracleValue> oracle;
    bool pass = true;
};

VerifyRow verify_tuple(const Catalog& cat, const CatalogEntry& entry,
                       const std::vector<std::int64_t>& params) {
    VerifyRow row;
    row.params = params;
    row.chi_value = chi(entry.build(params), cat)->chi;
    if (entry.expected_chi)
        row.expected = entry.expected_chi(params);
    for (const auto& alt : entry.alt_builders)
        row.alternatives.emplace_back(alt.label, chi(alt.build(params), cat)->chi);
    if (entry.realize) {
        if (const auto realization = entry.realize(params)) {
            if (const auto* sc = std::get_if<SimplicialComplex>(&*realization)) {
                row.oracle.push_back({"faces", chi_by_faces(*sc)});
                row.oracle.push_back({"betti", chi_by_betti(*sc)});
            } else {
                row.oracle.push_back({"cells", chi_by_cells(std::get<CwSkeleton>(*realization))});
            }
        }
    }

    if (row.expected && *row.expected != row.chi_value)
        row.pass = false;
    for (const auto& [label, value] : row.alternatives)
        if (value != row.chi_value)
            row.pass = false;
    for (const auto& o : row.oracle)
        if (o.chi != row.chi_value)
            row.pass = false;
    return row;
}

std::vector<std::vector<std::int64_t>> verify_tuples(const CatalogEntry& entry, std::int64_t max,
                                                     std::uint64_t seed) {
    std::vector<std::vector<std::int64_t>> tuples;
    if (entry.arity == 1) {
        for (std::int64_t v = 0; v <= max; ++v) {
            std::string reason;
            if (entry.in_domain({&v, 1}, reason))
                tuples.push_back({v});
        }
    } else {
        // variadic entries sweep a reproducible random sample
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::int64_t> len(1, 5);
        std::uniform_int_distribution<std::int64_t> count(0, 9);
        std::uniform_int_distribution<std::int64_t> top(1, 9);
        for (std::int64_t i = 0; i < max; ++i) {
            std::vector<std::int64_t> counts(static_cast<std::size_t>(len(rng)));
            for (auto& a : counts)
                a = count(rng);
            counts.back() = top(rng);
            tuples.push_back(std::move(counts));
        }
    }
    return tuples;
}

int run_verify(const std::string& name, std::int64_t max, std::uint64_t seed, bool as_json) {
    const Catalog& cat = builtin_catalog();
    const CatalogEntry* entry = cat.find(name);
    if (!entry)
        throw CatalogError("unknown space '" + name + "'");
    const auto tuples = verify_tuples(*entry, max, seed);
    if (tuples.empty())
        throw CatalogError("no in-domain parameters for '" + name + "' up to " +
                           std::to_string(max));

    std::vector<VerifyRow> rows;
    rows.reserve(tuples.size());
    for (const auto& params : tuples)
        rows.push_back(verify_tuple(cat, *entry, params));

    bool all_pass = true;
    if (as_json) {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& row : rows) {
            nlohmann::json j{{"params", row.params}, {"chi", row.chi_value}, {"pass", row.pass}};
            if (row.expected)
                j["expected"] = *row.expected;
            for (const auto& [label, value] : row.alternatives)
                j["alt"][label] = value;
            for (const auto& o : row.oracle)
                j["oracle"][o.route] = o.chi;
            out.push_back(std::move(j));
            all_pass = all_pass && row.pass;
        }
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "verify " << entry->display << "\n";
        for (const auto& row : rows) {
            std::ostringstream line;
            line << "  " << name << "(" << list_text(row.params, ",") << ")"
                 << "  chi = " << row.chi_value;
            if (row.expected)
                line << "  expected = " << *row.expected;
            for (const auto& [label, value] : row.alternatives)
                line << "  " << label << " = " << value;
            for (const auto& o : row.oracle)
                line << "  oracle/" << o.route << " = " << o.chi;
            line << "  " << (row.pass ? "PASS" : "FAIL");
            std::cout << line.str() << "\n";
            all_pass = all_pass && row.pass;
        }
        std::cout << (all_pass ? "all rows PASS" : "some rows FAIL") << "\n";
    }
    return all_pass ? exit_ok : exit_verify;
}

// ---- complex ---------------------------------------------------------

int run_complex(const std::string& mode, const std::string& path) {
    const auto loaded = load_complex_file(path);

    if (const auto* sc = std::get_if<SimplicialComplex>(&loaded)) {
        if (mode == "chi") {
            const std::int64_t faces = chi_by_faces(*sc);
            const std::int64_t betti = chi_by_betti(*sc);
            std::cout << "f-vector: (" << list_text(sc->f_vector()) << ")\n";
            std::cout << "chi(faces) = " << faces << "\n";
            std::cout << "chi(betti) = " << betti << "\n";
            if (faces != betti) {
                std::cerr << "error: the two routes disagree\n";
                return exit_verify;
            }
            std::cout << "routes agree\n";
            return exit_ok;
        }
        const Homology h = homology(*sc);
        std::cout << "betti: (" << list_text(h.betti) << ")\n";
        for (std::size_t k = 0; k < h.torsion.size(); ++k)
            if (!h.torsion[k].empty())
                std::cout << "torsion in H_" << k << ": (" << list_text(h.torsion[k]) << ")\n";
        return exit_ok;
    }

    const auto& cw = std::get<CwSkeleton>(loaded);
    if (mode == "chi") {
        std::cout << "cell counts: (" << list_text(cw.cell_counts) << ")\n";
        std::cout << "chi(cells) = " << chi_by_cells(cw) << "\n";
        return exit_ok;
    }
    std::cerr << "error: betti needs a simplicial complex file, not cell counts\n";
    return 1;
}

// ---- catalog ---------------------------------------------------------

int run_catalog() {
    const Catalog& cat = builtin_catalog();
    for (const auto& [name, entry] : cat.entries()) {
        std::cout << entry.display << " = " << entry.scheme << "\n";
        for (const auto& alt : entry.alt_builders)
            std::cout << "  alt (" << alt.label << "): " << alt.scheme << "\n";
        std::cout << "  domain: " << entry.domain_text << "\n";
        std::cout << "  chi: " << entry.chi_text << "\n";
        std::cout << "  realization: "
                  << (entry.realization_text.empty() ? "none" : entry.realization_text) << "\n";
    }
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Euler characteristics of fibrously decomposed spaces"};
    app.footer(kExitCodeHelp);
    app.require_subcommand(1);

    std::string expr;
    bool explain = false;
    bool as_json = false;
    CLI::App* cmd_eval = app.add_subcommand("eval", "evaluate chi of an expression");
    cmd_eval->add_option("expr", expr, "space expression, e.g. \"p(S^1)rosette(4)\"")->required();
    cmd_eval->add_flag("--explain", explain, "print the full derivation tree");
    cmd_eval->add_flag("--json", as_json, "emit the report as JSON");

    std::string verify_name;
    std::int64_t verify_max = 8;
    std::uint64_t verify_seed = 20240601;
    bool verify_json = false;
    CLI::App* cmd_verify =
        app.add_subcommand("verify", "sweep a catalog entry against its oracles");
    cmd_verify->add_option("name", verify_name, "catalog entry, e.g. S, M, rosette")->required();
    cmd_verify->add_option("--max", verify_max,
                           "sweep parameters up to this value (sample count for cw)");
    cmd_verify->add_option("--seed", verify_seed, "seed for variadic parameter sampling");
    cmd_verify->add_flag("--json", verify_json, "emit rows as JSON");

    std::string complex_mode;
    std::string complex_path;
    CLI::App* cmd_complex = app.add_subcommand("complex", "chi and homology of a complex file");
    cmd_complex->add_option("mode", complex_mode, "chi | betti")
        ->required()
        ->check(CLI::IsMember({"chi", "betti"}));
    cmd_complex
        ->add_option("file", complex_path, "JSON file with maximal_simplices or cell_counts")
        ->required();

    app.add_subcommand("catalog", "list the built-in spaces");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_eval->parsed())
            return run_eval(expr, explain, as_json);
        if (cmd_verify->parsed())
            return run_verify(verify_name, verify_max, verify_seed, verify_json);
        if (cmd_complex->parsed())
            return run_complex(complex_mode, complex_path);
        return run_catalog();
    } catch (const ParseError& e) {
        std::cerr << format_parse_error(expr, e);
        return exit_parse;
    } catch (const CatalogError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_resolve;
    } catch (const OverflowError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_overflow;
    } catch (const SchemaError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_schema;
    } catch (const ComplexError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_complex;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_io;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
