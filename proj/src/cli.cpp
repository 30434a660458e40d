#include "unbend/cli.hpp"

#include "unbend/errors.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <ostream>

namespace unbend {

using nlohmann::json;

namespace {

json root_json(const Root& r) { return json(r.coeffs()); }

json weight_json(const Weight& w) {
    json a = json::array();
    for (const auto& c : w.root_coords()) a.push_back(rational_to_json(c));
    return a;
}

json rationals_json(const RationalVector& v) {
    json a = json::array();
    for (const auto& c : v) a.push_back(rational_to_json(c));
    return a;
}

json classification_json(const Classification& c) {
    json j{{"kind", to_string(c.kind)}};
    if (c.unbendable()) {
        j["p"] = c.p;
        j["q"] = c.q;
    }
    return j;
}

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        const std::string item = text.substr(pos, comma - pos);
        int value = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size())
            throw CLI::ValidationError(what, "expected a comma-separated list of integers, got '" + text + "'");
        out.push_back(value);
        pos = comma + 1;
    }
    return out;
}

// Facts about theta that do not depend on the labeling: one special node
// pairing to 1 outside type A, the two ends of the chain in A_l (l >= 2), and
// pairing 2 in A_1.
bool special_nodes_shape_ok(const RootSystem& rs, const std::vector<int>& nodes) {
    const Root& theta = rs.highest();
    auto pair_of = [&](int i) { return rs.pairing(Root::simple(rs.rank(), i), theta); };
    if (rs.type().family() == Family::A) {
        if (rs.rank() == 1) return nodes == std::vector<int>{1} && pair_of(1) == 2;
        return nodes == std::vector<int>{1, rs.rank()} && pair_of(1) == 1 && pair_of(rs.rank()) == 1;
    }
    return nodes.size() == 1 && pair_of(nodes.front()) == 1;
}

}  // namespace

json splitting_to_json(const SplittingType& s) {
    json runs = json::array();
    for (auto [d, m] : s.runs()) runs.push_back(json{{"degree", d}, {"multiplicity", m}});
    return json{{"runs", std::move(runs)}, {"size", s.size()}, {"summary", s.to_string()}};
}

int classical_root_count(const LieType& type) {
    const int l = type.rank();
    switch (type.family()) {
        case Family::A: return l * (l + 1);
        case Family::B:
        case Family::C: return 2 * l * l;
        case Family::D: return 2 * l * (l - 1);
        case Family::E: return l == 6 ? 72 : l == 7 ? 126 : 240;
        case Family::F: return 48;
        case Family::G: return 12;
    }
    return 0;
}

Report roots_report(const LieType& type) {
    const RootSystem rs(type);
    Report r;
    r.command = "roots";
    r.subject = json{{"type", type.name()}};
    json positives = json::array();
    for (const Root& root : rs.positive_roots()) positives.push_back(root_json(root));
    const int count = static_cast<int>(rs.all_roots().size());
    r.add("positive_roots", std::move(positives));
    r.add("root_count", json{{"computed", count}, {"classical", classical_root_count(type)}},
          count == classical_root_count(type));
    r.add("highest_root", root_json(rs.highest()));
    const auto nodes = special_nodes(rs);
    r.add("special_nodes", nodes, special_nodes_shape_ok(rs, nodes));
    json cartan = json::array();
    for (std::size_t i = 0; i < static_cast<std::size_t>(type.rank()); ++i)
        cartan.push_back(rs.cartan().entries().row(i));
    r.add("cartan_matrix", std::move(cartan));
    return r;
}

Report theta_report(const LieType& type) {
    const RootSystem rs(type);
    const Root& theta = rs.highest();
    Report r;
    r.command = "theta";
    r.subject = json{{"type", type.name()}};
    r.add("highest_root", root_json(theta),
          std::all_of(theta.coeffs().begin(), theta.coeffs().end(), [](int c) { return c >= 1; }));
    r.add("height", theta.height());
    const auto nodes = special_nodes(rs);
    json special = json::array();
    for (int i : nodes)
        special.push_back(json{{"node", i},
                               {"bourbaki_node", labeling_bridge(type, i)},
                               {"pairing", rs.pairing(Root::simple(rs.rank(), i), theta)}});
    r.add("special_nodes", std::move(special), special_nodes_shape_ok(rs, nodes));
    r.add("theta_theta_pairing", rs.pairing(theta, theta), rs.pairing(theta, theta) == 2);

    int lo = 0;
    int hi = 0;
    bool first = true;
    for (const Root& beta : rs.positive_roots()) {
        if (beta == theta) continue;
        const int v = rs.pairing(beta, theta);
        lo = first ? v : std::min(lo, v);
        hi = first ? v : std::max(hi, v);
        first = false;
    }
    if (!first) r.add("other_positive_pairing_range", json{{"min", lo}, {"max", hi}}, lo >= 0 && hi <= 1);

    json omega = json::array();
    bool all_positive = true;
    for (int j = 1; j <= type.rank(); ++j) {
        const Rational v = rs.pairing(fundamental_weight(type, j).root_coords(), theta);
        all_positive = all_positive && v > 0;
        omega.push_back(rational_to_json(v));
    }
    r.add("fundamental_weight_theta_pairings", std::move(omega), all_positive);
    return r;
}

Report splitting_report(const LieType& type, const std::vector<int>& marked, const std::string& curve) {
    const RootSystem rs(type);
    const ParabolicMarking m(type, marked);
    Root alpha = rs.highest();
    bool is_theta = true;
    if (curve.rfind("simple:", 0) == 0) {
        const auto node = parse_int_list(curve.substr(7), "--curve");
        if (node.size() != 1) throw CLI::ValidationError("--curve", "expected simple:<node>");
        alpha = Root::simple(type.rank(), node.front());
        is_theta = false;
    } else if (curve != "theta") {
        throw CLI::ValidationError("--curve", "expected 'theta' or 'simple:<node>'");
    }
    const SplittingType s = tangent_splitting(rs, m, alpha);
    const Classification c = classify_splitting(s);
    Report r;
    r.command = "splitting";
    r.subject = json{{"type", type.name()}, {"parabolic", m.marked()}, {"curve", curve}};
    r.add("curve_root", root_json(alpha));
    r.add("dimension", homogeneous_dimension(rs, m));
    r.add("splitting", splitting_to_json(s));
    // Only C_theta carries a certificate; other curves are reported as-is.
    r.add("classification", classification_json(c), !is_theta || c.unbendable());
    return r;
}

Report unbendable_report(const std::vector<LieType>& types, bool per_marking) {
    Report r;
    r.command = "unbendable";
    json names = json::array();
    for (const auto& t : types) names.push_back(t.name());
    r.subject = json{{"types", std::move(names)}};
    for (const auto& t : types) {
        const RootSystem rs(t);
        const SweepReport sweep = unbendable_sweep(rs);
        r.add(t.name(), json{{"markings", sweep.entries.size()}, {"violations", sweep.violations()}},
              sweep.violations() == 0);
        if (!per_marking) continue;
        for (const SweepEntry& e : sweep.entries) {
            const ParabolicMarking m(t, e.marked);
            r.add(t.name() + " " + m.to_string(),
                  json{{"classification", classification_json(e.classification)},
                       {"dimension", e.dimension},
                       {"summary", e.splitting.to_string()}},
                  e.classification.unbendable());
        }
    }
    return r;
}

Report minimal_contrast_report(const LieType& type, int node) {
    const RootSystem rs(type);
    const MinimalContrast mc = minimal_curve_contrast(rs, node);
    Report r;
    r.command = "minimal-contrast";
    r.subject = json{{"type", type.name()}, {"node", node}};
    r.add("theta_coefficient", mc.theta_coefficient);
    r.add("long_root", mc.long_root);
    r.add("flagged", mc.flagged);
    r.add("simple_curve_splitting", splitting_to_json(mc.splitting));
    r.add("simple_curve_classification", classification_json(mc.classification));
    const ParabolicMarking m(type, {node});
    const SplittingType theta_split = tangent_splitting(rs, m, rs.highest());
    const Classification tc = classify_splitting(theta_split);
    r.add("theta_curve_splitting", splitting_to_json(theta_split));
    r.add("theta_curve_classification", classification_json(tc), tc.unbendable());
    return r;
}

Report weights_report(const LieType& type, const std::vector<int>& support, const std::vector<int>& labels) {
    const RootSystem rs(type);
    const Weight lambda = weight_from_labels(type, labels);
    const WeightedMultiset ws = module_weights(rs, support, lambda);
    const std::int64_t dim = weyl_dimension(rs, support, lambda);
    Report r;
    r.command = "weights";
    r.subject = json{{"type", type.name()}, {"support", support}, {"highest", labels}};
    r.add("extreme_weight", weight_json(lambda));
    r.add("dominant_representative", weight_json(dominant_representative(rs, lambda, support)));
    r.add("dimension", json{{"freudenthal", ws.total()}, {"weyl", dim}}, ws.total() == dim);
    json list = json::array();
    for (const auto& [w, m] : ws.entries())
        list.push_back(json{{"weight", weight_json(w)},
                            {"labels", rationals_json(dynkin_labels(rs, w))},
                            {"multiplicity", m}});
    r.add("weights", std::move(list));
    return r;
}

Report horospherical_list_report() {
    Report r;
    r.command = "horospherical list";
    int index = 1;
    for (const auto& d : catalog()) {
        r.add("family " + std::to_string(index++),
              json{{"id", to_string(d.family)},
                   {"variety", d.notation},
                   {"parameters", d.constraints},
                   {"parabolic_node", d.p_node},
                   {"lambda_V", d.lambda_v}});
    }
    return r;
}

namespace {

std::string datum_key(const HorosphericalDatum& d) {
    std::string s = to_string(d.family);
    if (d.family == HoroFamily::BPair || d.family == HoroFamily::CPair) s += " n=" + std::to_string(d.n);
    if (d.k) s += " k=" + std::to_string(*d.k);
    return s;
}

json datum_subject(const HorosphericalDatum& d) {
    json j{{"family", to_string(d.family)}, {"variety", d.label()}, {"n", d.n}};
    if (d.k) j["k"] = *d.k;
    return j;
}

}  // namespace

Report horospherical_verify_report(const std::vector<HorosphericalDatum>& data) {
    Report r;
    r.command = "horospherical verify";
    if (data.size() == 1) r.subject = datum_subject(data.front());
    else r.subject = json{{"instances", data.size()}};
    for (const auto& d : data) {
        const HorosphericalVerification v = verify(d);
        const std::string key = datum_key(d);
        r.add(key + " lambda_theta_pairing", rational_to_json(v.lambda_pairing), v.pairing_in_range());
        r.add(key + " bundle_degrees", splitting_to_json(v.bundle),
              v.bundle_in_range() && v.bundle.size() == static_cast<std::size_t>(v.dim_v));
        r.add(key + " total_splitting",
              json{{"classification", classification_json(v.total_class)},
                   {"dimension", v.total.size()},
                   {"summary", v.total.to_string()}},
              v.total_class.unbendable());
    }
    return r;
}

Report horospherical_splitting_report(const HorosphericalDatum& d) {
    const HorosphericalVerification v = verify(d);
    Report r;
    r.command = "horospherical splitting";
    r.subject = datum_subject(d);
    r.add("parabolic_node", d.p_node);
    r.add("lambda_V", weight_json(d.lambda_v));
    r.add("lambda_theta_pairing", rational_to_json(v.lambda_pairing), v.pairing_in_range());
    r.add("dominant_theta_pairing", rational_to_json(v.dominant_pairing));
    r.add("dim_G_over_P", v.dim_g_over_p);
    r.add("dim_V", v.dim_v);
    r.add("tangent_splitting", splitting_to_json(v.tangent), classify_splitting(v.tangent).unbendable());
    r.add("bundle_degrees", splitting_to_json(v.bundle), v.bundle_in_range());
    r.add("total_splitting", splitting_to_json(v.total), v.total_class.unbendable());
    return r;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact certificates for unbendable curves on homogeneous and horospherical varieties",
                 "unbend"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    bool as_markdown = false;
    auto* json_flag = app.add_flag("--json", as_json, "Emit JSON");
    app.add_flag("--markdown", as_markdown, "Emit Markdown (default)")->excludes(json_flag);

    std::string type_text;
    std::string parabolic_text;
    std::string curve = "theta";
    std::string support_text;
    std::string highest_text;
    int node = 0;
    int max_rank = 8;
    bool per_marking = false;

    auto* roots = app.add_subcommand("roots", "Positive roots, highest root and special nodes");
    roots->add_option("--type", type_text, "Lie type, e.g. B4")->required();

    auto* theta = app.add_subcommand("theta", "Pairings against the highest coroot");
    theta->add_option("--type", type_text)->required();

    auto* splitting = app.add_subcommand("splitting", "Splitting type of T(G/P) on C_alpha");
    splitting->add_option("--type", type_text)->required();
    splitting->add_option("--parabolic", parabolic_text, "Marked nodes, e.g. 1,3")->required();
    splitting->add_option("--curve", curve, "theta or simple:<node>");

    auto* unbendable = app.add_subcommand("unbendable", "Certify C_theta over every parabolic");
    unbendable->add_option("--type", type_text, "Lie type or 'all'")->required();
    unbendable->add_option("--max-rank", max_rank, "Rank cap for --type all")->check(CLI::Range(1, 16));
    unbendable->add_flag("--per-marking", per_marking, "List every marking");

    auto* contrast = app.add_subcommand("minimal-contrast", "Compare C_alpha_i with C_theta");
    contrast->add_option("--type", type_text)->required();
    contrast->add_option("--node", node)->required();

    auto* weights = app.add_subcommand("weights", "Weights of a simple Levi module");
    weights->add_option("--type", type_text)->required();
    weights->add_option("--support", support_text, "Levi nodes, e.g. 1,2")->required();
    weights->add_option("--highest", highest_text, "Dynkin labels c1,...,cl")->required();

    auto* horo = app.add_subcommand("horospherical", "Smooth horospherical varieties of Picard number one");
    horo->require_subcommand(1);
    std::string family_text;
    std::optional<int> n_opt;
    std::optional<int> k_opt;
    int max_n = 6;
    auto add_family_opts = [&](CLI::App* sub) {
        sub->add_option("--family", family_text, "B, B3, C, F4 or G2");
        sub->add_option("--n", n_opt);
        sub->add_option("--k", k_opt);
    };
    auto* horo_list = horo->add_subcommand("list", "The five families");
    auto* horo_verify = horo->add_subcommand("verify", "Certify one instance or the whole catalog");
    add_family_opts(horo_verify);
    horo_verify->add_option("--max-n", max_n, "Rank cap for B/C when no family is given")
        ->check(CLI::Range(2, 12));
    auto* horo_split = horo->add_subcommand("splitting", "Degree multisets on C_theta");
    add_family_opts(horo_split);
    horo_split->fallthrough();
    horo_verify->fallthrough();
    horo_list->fallthrough();
    horo->fallthrough();

    std::vector<std::string> argv_store{"unbend"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, err, err);
        return 2;
    }

    try {
        Report report;
        if (*roots) {
            report = roots_report(parse_lie_type(type_text));
        } else if (*theta) {
            report = theta_report(parse_lie_type(type_text));
        } else if (*splitting) {
            report = splitting_report(parse_lie_type(type_text), parse_int_list(parabolic_text, "--parabolic"),
                                      curve);
        } else if (*unbendable) {
            std::vector<LieType> types;
            if (type_text == "all") types = all_lie_types(max_rank);
            else types.push_back(parse_lie_type(type_text));
            report = unbendable_report(types, per_marking || types.size() == 1);
        } else if (*contrast) {
            report = minimal_contrast_report(parse_lie_type(type_text), node);
        } else if (*weights) {
            const LieType t = parse_lie_type(type_text);
            std::vector<int> support;
            if (!support_text.empty() && support_text != "none") support = parse_int_list(support_text, "--support");
            report = weights_report(t, support, parse_int_list(highest_text, "--highest"));
        } else if (*horo_list) {
            report = horospherical_list_report();
        } else if (*horo_verify) {
            if (family_text.empty()) {
                if (n_opt || k_opt) throw CLI::ValidationError("--n/--k", "require --family");
                report = horospherical_verify_report(catalog_instances(max_n));
            } else {
                report = horospherical_verify_report({instantiate(parse_horo_family(family_text), n_opt, k_opt)});
            }
        } else if (*horo_split) {
            if (family_text.empty()) throw CLI::ValidationError("--family", "is required");
            report = horospherical_splitting_report(instantiate(parse_horo_family(family_text), n_opt, k_opt));
        }
        out << emit(report, as_json ? Format::Json : Format::Markdown);
        return report.passed() ? 0 : 1;
    } catch (const CLI::Error& e) {
        err << "unbend: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "unbend: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "unbend: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace unbend
