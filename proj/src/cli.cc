#include <gallai/cli.hh>
#include <gallai/json.hh>

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>

using nlohmann::json;
using std::optional;
using std::string;
using std::vector;

namespace gallai
{
    namespace
    {
        constexpr int exit_ok = 0, exit_negative = 1, exit_usage = 2, exit_budget = 3;

        struct UsageError : std::runtime_error
        {
            using std::runtime_error::runtime_error;
        };

        struct Flags
        {
            string spec, targets, coloring, output, gr, known, ramsey;
            bool json = false, no_symmetry = false;
            int vertices = 0, colors = 0;
            std::uint64_t seed = 1, budget = SearchOptions{}.budget;
            unsigned threads = 1;
        };

        auto search_options(const Flags & f) -> SearchOptions
        {
            SearchOptions options;
            options.budget = f.budget;
            options.threads = std::max(1u, f.threads);
            options.symmetry = ! f.no_symmetry;
            return options;
        }

        // Targets in the caller's color order.
        auto caller_targets(const SortedSpec & s) -> vector<TargetGraph>
        {
            vector<TargetGraph> targets(s.spec.k(), s.spec.target(1));
            for (Color j = 1; j <= s.spec.k(); ++j)
                targets[s.caller_color[j - 1] - 1] = s.spec.target(j);
            return targets;
        }

        auto spec_or_targets(const Flags & f) -> SortedSpec
        {
            if (! f.spec.empty() && ! f.targets.empty())
                throw UsageError("give either --spec or --targets, not both");
            if (! f.spec.empty())
                return parse_spec(f.spec);
            if (! f.targets.empty()) {
                auto list = parse_target_list(f.targets);
                return spec_from_targets(list);
            }
            throw UsageError("one of --spec or --targets is required");
        }

        auto emit_coloring(const Flags & f, const EdgeColoring & c, std::ostream & out) -> void
        {
            if (f.output.empty())
                out << write_coloring(c);
            else
                save_coloring(f.output, c);
        }

        auto cmd_construct(const Flags & f, std::ostream & out) -> int
        {
            auto s = parse_spec(f.spec);
            auto c = to_caller_colors(build_lower_bound_coloring(s.spec), s);
            if (f.json) {
                json j{{"spec", s.spec.to_string()}, {"vertices", c.order()},
                    {"layers", lower_bound_layers(s.spec)}, {"coloring", write_coloring(c)}};
                if (! f.output.empty()) {
                    save_coloring(f.output, c);
                    j["file"] = f.output;
                }
                out << j.dump() << '\n';
            }
            else
                emit_coloring(f, c, out);
            return exit_ok;
        }

        auto cmd_check(const Flags & f, std::ostream & out) -> int
        {
            auto c = load_coloring(f.coloring);
            auto targets = parse_target_list(f.targets);
            auto rainbow = find_rainbow_triangle(c);
            auto hit = contains_required(c, targets);
            if (f.json) {
                json j{{"gallai", ! rainbow.has_value()}};
                j["rainbow"] = rainbow ? json(*rainbow) : json(nullptr);
                j["hit"] = hit ? json(*hit) : json(nullptr);
                out << j.dump() << '\n';
            }
            else {
                if (rainbow)
                    out << "not gallai: rainbow triangle " << rainbow->a << ' ' << rainbow->b << ' ' << rainbow->c << '\n';
                if (hit) {
                    out << "color " << hit->color << " contains " << hit->target.name() << ':';
                    for (auto v : hit->vertices)
                        out << ' ' << v;
                    out << '\n';
                }
                else
                    out << "none\n";
            }
            return hit ? exit_ok : exit_negative;
        }

        auto cmd_partition(const Flags & f, std::ostream & out) -> int
        {
            auto c = load_coloring(f.coloring);
            auto p = gallai_partition(c);
            if (f.json)
                out << (p ? json(*p) : json(nullptr)).dump() << '\n';
            else if (p) {
                for (int i = 0; i < p->part_count(); ++i) {
                    out << "part " << i << ':';
                    for (auto v : p->parts[i])
                        out << ' ' << v;
                    out << '\n';
                }
                out << "between colors:";
                for (auto col : p->between_colors)
                    out << ' ' << col;
                out << '\n';
            }
            else
                out << "none\n";
            return p ? exit_ok : exit_negative;
        }

        auto cmd_formula(const Flags & f, std::ostream & out) -> int
        {
            int chosen = ! f.gr.empty() + ! f.known.empty() + ! f.ramsey.empty();
            if (chosen != 1)
                throw UsageError("give exactly one of --gr, --known, --ramsey");

            json value;
            if (! f.gr.empty())
                value = predicted_gr(parse_spec(f.gr).spec);
            else if (! f.ramsey.empty()) {
                auto pair = parse_target_list(f.ramsey);
                if (pair.size() != 2)
                    throw UsageError("--ramsey takes exactly two targets");
                value = classical_ramsey(pair[0], pair[1]);
            }
            else {
                if (f.colors < 1)
                    throw UsageError("--known needs --k");
                auto [family, parameter] = parse_family(f.known);
                value = known_gr(family, parameter, f.colors);
            }

            if (f.json)
                out << json{{"value", value}}.dump() << '\n';
            else if (value.is_object())
                out << value["lower"] << ' ' << value["upper"] << '\n';
            else
                out << value << '\n';
            return exit_ok;
        }

        auto cmd_verify_lower(const Flags & f, std::ostream & out) -> int
        {
            auto s = parse_spec(f.spec);
            auto cert = verify_lower(s.spec);
            auto witness = to_caller_colors(cert.witness, s);
            if (! f.output.empty())
                save_coloring(f.output, witness);
            if (f.json) {
                json j{{"spec", s.spec.to_string()}, {"holds", cert.holds}, {"vertices", witness.order()},
                    {"lower_bound", predicted_gr(s.spec)}};
                j["witness_file"] = f.output.empty() ? json(nullptr) : json(f.output);
                out << j.dump() << '\n';
            }
            else
                out << (cert.holds ? "holds" : "fails") << ": GR > " << witness.order() << '\n';
            return cert.holds ? exit_ok : exit_negative;
        }

        auto exit_for(VerdictKind kind) -> int
        {
            return kind == VerdictKind::BudgetExceeded ? exit_budget : exit_ok;
        }

        auto print_stats(const SearchStats & s, std::ostream & out) -> void
        {
            out << "nodes " << s.nodes << ", rainbow prunes " << s.prunes_rainbow << ", mono prunes " << s.prunes_mono
                << ", symmetry prunes " << s.prunes_symmetry << ", " << s.elapsed.count() << "s\n";
        }

        auto cmd_verify_upper(const Flags & f, std::ostream & out) -> int
        {
            if (f.vertices < 2)
                throw UsageError("--vertices must be at least 2");
            vector<TargetGraph> targets;
            if (! f.targets.empty() && f.spec.empty())
                targets = parse_target_list(f.targets);
            else
                targets = caller_targets(spec_or_targets(f));

            auto result = decide_upper(f.vertices, targets, search_options(f));
            optional<string> witness_file;
            if (result.verdict.witness && ! f.output.empty()) {
                save_coloring(f.output, *result.verdict.witness);
                witness_file = f.output;
            }

            if (f.json)
                out << upper_report(f.vertices, targets, result, witness_file).dump() << '\n';
            else {
                out << verdict_name(result.verdict.kind) << '\n';
                if (result.verdict.witness && ! witness_file)
                    out << write_coloring(*result.verdict.witness);
                print_stats(result.stats, out);
            }
            return exit_for(result.verdict.kind);
        }

        auto cmd_compute_gr(const Flags & f, std::ostream & out) -> int
        {
            auto s = spec_or_targets(f);
            auto report = compute_gr(s.spec, search_options(f));
            auto lower = to_caller_colors(report.lower.witness, s);
            if (! f.output.empty())
                save_coloring(f.output, lower);

            if (f.json) {
                optional<string> file;
                if (! f.output.empty())
                    file = f.output;
                auto upper = report.upper;
                if (upper.verdict.witness)
                    upper.verdict.witness = to_caller_colors(*upper.verdict.witness, s);
                json j{{"spec", s.spec.to_string()}, {"predicted", report.predicted},
                    {"lower", json{{"holds", report.lower.holds}, {"vertices", lower.order()}}},
                    {"upper", upper_report(static_cast<int>(report.predicted), caller_targets(s), upper, std::nullopt)},
                    {"status", status_name(report.status)}};
                j["lower"]["witness_file"] = file ? json(*file) : json(nullptr);
                out << j.dump() << '\n';
            }
            else {
                out << "GR = " << report.predicted << " (" << status_name(report.status) << ")\n";
                out << "lower: " << (report.lower.holds ? "bad coloring on " : "construction FAILED on ")
                    << lower.order() << " vertices\n";
                out << "upper: " << verdict_name(report.upper.verdict.kind) << " at N = " << report.predicted << '\n';
                print_stats(report.upper.stats, out);
            }

            switch (report.status) {
            case GrStatus::Confirmed: return exit_ok;
            case GrStatus::Discrepancy: return exit_negative;
            case GrStatus::Inconclusive: return exit_budget;
            }
            return exit_negative;
        }

        auto cmd_random(const Flags & f, std::ostream & out) -> int
        {
            if (f.vertices < 2 || f.colors < 1)
                throw UsageError("--vertices must be at least 2 and --k at least 1");
            emit_coloring(f, random_gallai(f.vertices, f.colors, f.seed), out);
            return exit_ok;
        }
    }

    auto run_cli(const vector<string> & args, std::ostream & out, std::ostream & err) -> int
    {
        CLI::App app{"Gallai colorings: constructions, partitions, formulas and exhaustive verification", "gallai"};
        app.require_subcommand(1);
        Flags f;

        auto add_json = [&](CLI::App * sub) { sub->add_flag("--json", f.json, "Print JSON on stdout"); };
        auto add_output = [&](CLI::App * sub, const string & what) { sub->add_option("-o,--output", f.output, what); };
        auto add_search = [&](CLI::App * sub) {
            sub->add_option("--budget", f.budget, "Node budget")->capture_default_str()->check(CLI::PositiveNumber);
            sub->add_option("--threads", f.threads, "Worker threads")->capture_default_str()->check(CLI::PositiveNumber);
            sub->add_flag("--no-symmetry", f.no_symmetry, "Disable symmetry breaking (test mode)");
        };

        auto * construct = app.add_subcommand("construct", "Write the layered lower-bound coloring for a spec");
        construct->add_option("--spec", f.spec, "Spec, e.g. \"n=3 k=3 head=cycle i=2,2,2\"")->required();
        add_output(construct, "Coloring file to write (stdout if absent)");
        add_json(construct);

        auto * check = app.add_subcommand("check", "Look for a required monochromatic target in a coloring");
        check->add_option("--coloring", f.coloring, "Coloring file")->required();
        check->add_option("--targets", f.targets, "Target per color, e.g. C6,C6,P3")->required();
        add_json(check);

        auto * partition = app.add_subcommand("partition", "Compute a Gallai partition");
        partition->add_option("--coloring", f.coloring, "Coloring file")->required();
        add_json(partition);

        auto * formula = app.add_subcommand("formula", "Evaluate a closed-form Ramsey or Gallai-Ramsey value");
        formula->add_option("--gr", f.gr, "Family spec for the predicted GR value");
        formula->add_option("--known", f.known, "Known GR_k family: K3, P<m>, C<L>, M<s>");
        formula->add_option("--k", f.colors, "Number of colors for --known");
        formula->add_option("--ramsey", f.ramsey, "Two-color Ramsey pair, e.g. P7,C8");
        add_json(formula);

        auto * lower = app.add_subcommand("verify-lower", "Check the lower-bound construction for a spec");
        lower->add_option("--spec", f.spec, "Family spec")->required();
        add_output(lower, "Witness coloring file to write");
        add_json(lower);

        auto * upper = app.add_subcommand("verify-upper", "Exhaustively decide whether every Gallai coloring of K_N is forced");
        upper->add_option("-N,--vertices", f.vertices, "Order N of the host complete graph")->required();
        upper->add_option("--targets", f.targets, "Target per color");
        upper->add_option("--spec", f.spec, "Family spec instead of --targets");
        add_output(upper, "Witness coloring file to write when a bad coloring is found");
        add_search(upper);
        add_json(upper);

        auto * compute = app.add_subcommand("compute-gr", "Predicted GR with lower and upper certificates");
        compute->add_option("--spec", f.spec, "Family spec");
        compute->add_option("--targets", f.targets, "Target list, e.g. P5,P5,P3");
        add_output(compute, "Lower-bound witness file to write");
        add_search(compute);
        add_json(compute);

        auto * random = app.add_subcommand("random", "Generate a random Gallai coloring");
        random->add_option("-N,--vertices", f.vertices, "Number of vertices")->required();
        random->add_option("-k,--k", f.colors, "Palette size")->required();
        random->add_option("--seed", f.seed, "Random seed")->capture_default_str();
        add_output(random, "Coloring file to write (stdout if absent)");

        auto synopsis = [&] {
            auto parsed = app.get_subcommands();
            return parsed.empty() ? app.help() : parsed.front()->help();
        };

        try {
            vector<string> reversed(args.rbegin(), args.rend());
            app.parse(reversed);
        }
        catch (const CLI::CallForHelp &) {
            auto parsed = app.get_subcommands();
            out << (parsed.empty() ? app.help() : parsed.front()->help());
            return exit_ok;
        }
        catch (const CLI::ParseError & e) {
            err << "error: " << e.what() << '\n' << synopsis();
            return exit_usage;
        }

        try {
            if (construct->parsed())
                return cmd_construct(f, out);
            if (check->parsed())
                return cmd_check(f, out);
            if (partition->parsed())
                return cmd_partition(f, out);
            if (formula->parsed())
                return cmd_formula(f, out);
            if (lower->parsed())
                return cmd_verify_lower(f, out);
            if (upper->parsed())
                return cmd_verify_upper(f, out);
            if (compute->parsed())
                return cmd_compute_gr(f, out);
            if (random->parsed())
                return cmd_random(f, out);
        }
        catch (const UsageError & e) {
            err << "error: " << e.what() << '\n' << synopsis();
            return exit_usage;
        }
        catch (const std::exception & e) {
            err << "error: " << e.what() << '\n';
            return exit_usage;
        }
        return exit_usage;
    }
}
