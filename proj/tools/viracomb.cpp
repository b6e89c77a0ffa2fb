#include "viracomb/bijections.hpp"
#include "viracomb/characters.hpp"
#include "viracomb/errors.hpp"
#include "viracomb/halfpath.hpp"
#include "viracomb/particles.hpp"
#include "viracomb/render.hpp"
#include "viracomb/rsos.hpp"
#include "viracomb/sector.hpp"
#include "viracomb/textio.hpp"
#include "viracomb/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>

using namespace viracomb;
using nlohmann::json;

namespace {

std::vector<int> parse_ints(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw InvalidArgument("not an integer list: '" + text + "'");
        }
    }
    return out;
}

void print_series(const QSeries& s, const std::string& format) {
    std::cout << (format == "pretty" ? s.pretty() : s.csv()) << '\n';
}

std::vector<std::string> stdin_lines() {
    std::vector<std::string> out;
    std::string line;
    while (std::getline(std::cin, line)) {
        if (line.find_first_not_of(" \t\r") != std::string::npos) out.push_back(line);
    }
    require(!out.empty(), "no path on standard input");
    return out;
}

json trace_json(const Bij1Trace& tr) {
    return {{"family", 1},
            {"n", tr.n},
            {"k", tr.k},
            {"lambda", tr.lambda},
            {"mu", tr.mu},
            {"hCut", format_path(tr.hCut)},
            {"hHatCut", format_path(tr.hHatCut)},
            {"hHat", format_path(tr.hHat)}};
}

json trace_json(const Bij2Trace& tr) {
    return {{"family", 2},
            {"n", tr.n},
            {"k", tr.k},
            {"m", tr.m},
            {"c", tr.c},
            {"d", tr.d},
            {"lambda", tr.lambda},
            {"mu", tr.mu},
            {"nu", tr.nu},
            {"hCut", format_path(tr.hCut)},
            {"hHatCut", format_path(tr.hHatCut)},
            {"hHatInt", format_path(tr.hHatInt)},
            {"hHat", format_path(tr.hHat)}};
}

// Returns the image line and, for --trace, the forward trace.
std::pair<std::string, json> run_bijection(const std::string& line, bool forward) {
    AnyPath in = parse_path(line);
    if (forward) {
        require(std::holds_alternative<RsosPath>(in), "forward direction takes an rsos path");
        const auto& h = std::get<RsosPath>(in);
        if (h.pp == 2 * h.p + 1) {
            auto tr = bij1_forward(h);
            return {format_path(tr.hHat), trace_json(tr)};
        }
        require(h.pp == 2 * h.p - 1, "p' must be 2p+1 or 2p-1");
        auto tr = bij2_forward(h);
        return {format_path(tr.hHat), trace_json(tr)};
    }
    require(std::holds_alternative<HalfPath>(in), "inverse direction takes a half path");
    const auto& hh = std::get<HalfPath>(in);
    if (hh.T % 2 == 0) {
        RsosPath h = bij1_inverse(hh);
        return {format_path(h), trace_json(bij1_forward(h))};
    }
    RsosPath h = bij2_inverse(hh);
    return {format_path(h), trace_json(bij2_forward(h))};
}

json dissection_json(const HalfPath& hp) {
    auto dis = dissect(hp);
    json parts = json::array();
    for (const auto& pt : dis.particles) {
        parts.push_back({{"peak", pt.peak},
                         {"height", pt.height},
                         {"charge2", pt.charge},
                         {"origin", pt.origin},
                         {"right", pt.right},
                         {"baseline", pt.base},
                         {"tail", pt.tail}});
    }
    return {{"T", hp.T},
            {"weight", weight(hp)},
            {"particles", parts},
            {"sector", dis.sector.n},
            {"minimal_weight", minimal_weight(dis.sector)}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Virasoro minimal-model characters as lattice-path generating functions"};
    app.require_subcommand(1);

    // character
    auto* character = app.add_subcommand("character", "character series");
    character->require_subcommand(1);
    int order = 10;
    std::string format = "csv";
    auto series_opts = [&](CLI::App* c) {
        c->add_option("--order", order, "series known through q^order")->check(CLI::NonNegativeNumber);
        c->add_option("--format", format)->check(CLI::IsMember({"csv", "pretty"}));
    };
    auto* bos = character->add_subcommand("bosonic", "alternating-sum formula");
    std::vector<int> label;
    bos->add_option("label", label, "p p' r s")->expected(4)->required();
    series_opts(bos);
    auto* ferm = character->add_subcommand("fermionic", "occupation-vector sum for (r,s) = (1,2)");
    int t2 = 4;
    ferm->add_option("--t2", t2, "T = 2t")->required();
    series_opts(ferm);
    auto* prod = character->add_subcommand("product", "modular product");
    int modulus = 0;
    std::string residues;
    prod->add_option("--mod", modulus)->required();
    prod->add_option("--res", residues, "comma-separated residues")->required();
    series_opts(prod);

    // paths
    auto* paths = app.add_subcommand("paths", "enumerate paths by weight");
    paths->require_subcommand(1);
    int max_weight = 0;
    bool gf = false;
    auto path_opts = [&](CLI::App* c) {
        c->add_option("--max-weight", max_weight)->required()->check(CLI::NonNegativeNumber);
        c->add_flag("--gf", gf, "print the generating function instead of the paths");
        c->add_option("--format", format)->check(CLI::IsMember({"csv", "pretty"}));
    };
    auto* prsos = paths->add_subcommand("rsos", "RSOS paths");
    std::vector<int> model;
    prsos->add_option("params", model, "p p' a b")->expected(4)->required();
    path_opts(prsos);
    auto* phalf = paths->add_subcommand("half", "half-lattice paths (doubled parameters)");
    int A = 0, B = 0;
    phalf->add_option("--t2", t2)->required();
    phalf->add_option("--A", A)->required();
    phalf->add_option("--B", B)->required();
    path_opts(phalf);

    // bijection
    auto* bij = app.add_subcommand("bijection", "weight-preserving bijection on stdin paths");
    std::string direction;
    bool trace = false;
    bij->add_option("direction", direction)->required()->check(CLI::IsMember({"forward", "inverse"}));
    bij->add_flag("--trace", trace, "also print the intermediate data as JSON");

    // verify
    auto* ver = app.add_subcommand("verify", "identity checks, JSON lines");
    std::string suite;
    VerifyOptions vopt;
    ver->add_option("suite", suite)->required()->check(CLI::IsMember(suite_names()));
    ver->add_option("--order", vopt.order)->check(CLI::NonNegativeNumber);
    ver->add_option("--max-t2", vopt.max_t2)->check(CLI::Range(4, 40));

    // render
    auto* ren = app.add_subcommand("render", "draw stdin paths");
    std::string picture = "ascii";
    bool baselines = false;
    ren->add_option("--format", picture)->check(CLI::IsMember({"ascii", "svg"}));
    ren->add_flag("--baselines", baselines, "draw particle baselines (half paths with A = B = 2)");

    // dissect
    auto* dis = app.add_subcommand("dissect", "particle dissection of stdin half paths, JSON");

    // sector-gf
    auto* sgf = app.add_subcommand("sector-gf", "generating function of one sector");
    std::string occupation;
    sgf->add_option("--t2", t2)->required();
    sgf->add_option("--n", occupation, "n_2,...,n_{T-2}")->required();
    series_opts(sgf);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*character) {
            if (*bos) {
                print_series(bosonic_character({label[0], label[1], label[2], label[3]}, order), format);
            } else if (*ferm) {
                print_series(fermionic_character_12(t2, order), format);
            } else {
                print_series(modular_product(modulus, parse_ints(residues), order), format);
            }
        } else if (*paths) {
            if (*prsos) {
                auto list = enumerate_rsos(model[0], model[1], model[2], model[3], max_weight);
                if (gf) {
                    std::vector<long long> ws;
                    for (const auto& h : list) ws.push_back(weight(h));
                    print_series(series_from_weights(ws, max_weight), format);
                } else {
                    for (const auto& h : list) std::cout << format_path(h) << '\n';
                }
            } else {
                auto list = enumerate_half(t2, A, B, max_weight);
                if (gf) {
                    std::vector<long long> ws;
                    for (const auto& h : list) ws.push_back(weight(h));
                    print_series(series_from_weights(ws, max_weight), format);
                } else {
                    for (const auto& h : list) std::cout << format_path(h) << '\n';
                }
            }
        } else if (*bij) {
            for (const auto& line : stdin_lines()) {
                auto [out, tr] = run_bijection(line, direction == "forward");
                std::cout << out << '\n';
                if (trace) std::cout << tr.dump() << '\n';
            }
        } else if (*ver) {
            bool ok = run_suite(suite, vopt, [](const VerifyReport& r) {
                std::cout << r.to_json().dump() << std::endl;
            });
            return ok ? 0 : 1;
        } else if (*ren) {
            for (const auto& line : stdin_lines()) {
                AnyPath in = parse_path(line);
                if (auto* h = std::get_if<RsosPath>(&in)) {
                    std::cout << (picture == "svg" ? render_svg(*h) : render_ascii(*h));
                } else {
                    const auto& hp = std::get<HalfPath>(in);
                    std::cout << (picture == "svg" ? render_svg(hp, baselines)
                                                   : render_ascii(hp, baselines));
                }
            }
        } else if (*dis) {
            for (const auto& line : stdin_lines()) std::cout << dissection_json(parse_half(line)).dump() << '\n';
        } else if (*sgf) {
            Sector s{t2, parse_ints(occupation)};
            print_series(sector_gf(s, order), format);
        }
    } catch (const InvalidArgument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const StructuralError& e) {
        std::cerr << "structural error: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
