// homcount: counts homomorphisms from finitely presented groups into finite
// groups, checks the torsor and divisibility statements on concrete
// instances, and prints subgroup-growth tables.
//
// Exit status: 0 success, 1 failed verification, 2 usage or input error,
// 3 enumeration budget exhausted.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "homcount/character.hpp"
#include "homcount/errors.hpp"
#include "homcount/frobenius.hpp"
#include "homcount/group.hpp"
#include "homcount/growth.hpp"
#include "homcount/homenum.hpp"
#include "homcount/numeric.hpp"
#include "homcount/partition.hpp"
#include "homcount/presentation.hpp"
#include "homcount/verify.hpp"
#include "homcount/word.hpp"

using Json = nlohmann::ordered_json;
using namespace homcount;

namespace {

struct RunConfig {
    Int budget = Int(100000000);
    int workers = 1;
    std::string format = "text";  // json | csv | text
    std::string output;           // empty writes to stdout
};

Int parse_budget(const std::string& text) {
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
        throw InvalidSpec("budget must be a non-negative integer: " + text);
    Int value(text);
    if (value < 10000) throw InvalidSpec("budget must be at least 10000");
    return value;
}

// Flags shared by every subcommand. A single instance is attached to all of
// them; only the parsed subcommand reads it.
struct CommonFlags {
    std::string budget_text;
    int workers = 0;
    std::string format = "text";
    std::string output;

    void attach(CLI::App* cmd) {
        cmd->add_option("--budget", budget_text,
                        "enumeration budget in relator-letter evaluations "
                        "(>= 10000; HOMCOUNT_BUDGET overrides the default)");
        cmd->add_option("--workers", workers, "enumeration worker threads")
            ->check(CLI::Range(1, 4096));
        cmd->add_option("--format", format, "report format")
            ->check(CLI::IsMember({"json", "csv", "text"}));
        cmd->add_option("--output", output, "write the report to this file instead of stdout");
    }

    RunConfig resolve(const Int& default_budget) const {
        RunConfig cfg;
        if (!budget_text.empty())
            cfg.budget = parse_budget(budget_text);
        else if (const char* env = std::getenv("HOMCOUNT_BUDGET"))
            cfg.budget = parse_budget(env);
        else
            cfg.budget = default_budget;
        cfg.workers = workers > 0 ? workers
                                  : std::max(1u, std::thread::hardware_concurrency());
        cfg.format = format;
        cfg.output = output;
        return cfg;
    }
};

EnumOptions enum_opts(const RunConfig& cfg, bool store) {
    EnumOptions eo;
    eo.budget = cfg.budget;
    eo.workers = cfg.workers;
    eo.store = store;
    return eo;
}

void emit(const RunConfig& cfg, const std::string& body) {
    if (cfg.output.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream file(cfg.output, std::ios::binary);
    if (!file) throw InvalidSpec("cannot open output file: " + cfg.output);
    file << body;
}

std::string dump_json(const Json& doc) { return doc.dump(2) + "\n"; }

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    return out + "\"";
}

std::string right_pad(const std::string& s, std::size_t w) {
    return s + std::string(w - s.size(), ' ');
}

std::string left_pad(const std::string& s, std::size_t w) {
    return std::string(w - s.size(), ' ') + s;
}

// Renders rows of cells with the first column left-aligned and the rest
// right-aligned, two spaces between columns.
std::string aligned_table(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& row : rows)
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i >= width.size()) width.resize(i + 1, 0);
            width[i] = std::max(width[i], row[i].size());
        }
    std::string out;
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i > 0) out += "  ";
            out += i == 0 ? right_pad(row[i], width[i]) : left_pad(row[i], width[i]);
        }
        while (!out.empty() && out.back() == ' ') out.pop_back();
        out += '\n';
    }
    return out;
}

long long element_order(const FiniteGroup& G, int x) {
    long long order = 1;
    int y = x;
    while (y != G.identity()) {
        y = G.mul(y, x);
        ++order;
    }
    return order;
}

std::string sigma_to_string(const AutomorphismData& sigma, const Presentation& P) {
    std::string out;
    for (int i = 0; i < P.generator_count(); ++i) {
        if (i > 0) out += "; ";
        out += P.generator_names[static_cast<std::size_t>(i)] + " -> " +
               word_to_string(sigma.images[static_cast<std::size_t>(i)], P.generator_names);
    }
    return out;
}

// --constrain grammar: "<word>@<class representative>". The representative is
// an element in the group's own notation, or "#<id>" naming a class directly.
ClassConstraint parse_constraint(const std::string& text, const Presentation& P,
                                 const FiniteGroup& G) {
    auto at = text.find('@');
    if (at == std::string::npos)
        throw ParseError("constraint needs the form <word>@<class representative>: " + text);
    Word w = parse_word(text.substr(0, at), P.generator_names);
    std::string repr = text.substr(at + 1);
    auto first = repr.find_first_not_of(" \t");
    auto last = repr.find_last_not_of(" \t");
    if (first == std::string::npos) throw ParseError("empty class representative: " + text);
    repr = repr.substr(first, last - first + 1);

    int cls;
    if (repr[0] == '#') {
        std::string digits = repr.substr(1);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("class id must be #<integer>: " + repr);
        cls = std::stoi(digits);
        if (cls < 0 || cls >= static_cast<int>(G.classes().size()))
            throw IndexOutOfRange("class id out of range: " + repr);
    } else {
        cls = G.class_of(G.element_from_text(repr));
    }
    return {{w}, cls};
}

// group info ---------------------------------------------------------------

int run_group_info(const RunConfig& cfg, const std::string& group_text) {
    auto G = build_group(GroupSpec::parse(group_text));
    const auto& classes = G.classes();

    if (cfg.format == "json") {
        Json doc;
        doc["group"] = G.name();
        doc["order"] = to_decimal(Int(G.order()));
        doc["class_count"] = std::to_string(classes.size());
        doc["classes"] = Json::array();
        for (const auto& c : classes) {
            Json row;
            row["id"] = std::to_string(c.id);
            row["size"] = std::to_string(c.size);
            row["representative"] = G.label(c.representative);
            row["element_order"] = std::to_string(element_order(G, c.representative));
            row["centralizer_order"] = std::to_string(c.centralizer_order);
            doc["classes"].push_back(row);
        }
        emit(cfg, dump_json(doc));
    } else if (cfg.format == "csv") {
        std::string body = "id,size,element_order,centralizer_order,representative\n";
        for (const auto& c : classes)
            body += std::to_string(c.id) + "," + std::to_string(c.size) + "," +
                    std::to_string(element_order(G, c.representative)) + "," +
                    std::to_string(c.centralizer_order) + "," +
                    csv_field(G.label(c.representative)) + "\n";
        emit(cfg, body);
    } else {
        std::vector<std::vector<std::string>> rows;
        rows.push_back({"class", "size", "element order", "centralizer", "representative"});
        for (const auto& c : classes)
            rows.push_back({std::to_string(c.id), std::to_string(c.size),
                            std::to_string(element_order(G, c.representative)),
                            std::to_string(c.centralizer_order), G.label(c.representative)});
        emit(cfg, "group " + G.name() + "\norder " + std::to_string(G.order()) +
                      "\nclasses " + std::to_string(classes.size()) + "\n" +
                      aligned_table(rows));
    }
    return 0;
}

// hom count / hom constrained ------------------------------------------------

int run_hom_count(const RunConfig& cfg, const std::string& group_text,
                  const std::string& pres_text,
                  const std::vector<std::string>& constraint_texts) {
    auto G = build_group(GroupSpec::parse(group_text));
    auto P = parse_presentation(pres_text);
    std::vector<ClassConstraint> constraints;
    for (const auto& t : constraint_texts) constraints.push_back(parse_constraint(t, P, G));

    Int count = constraints.empty()
                    ? enumerate_homs(P, G, enum_opts(cfg, false)).count
                    : enumerate_constrained(P, G, constraints, enum_opts(cfg, false)).count;

    auto ab = abelianization(P);
    bool divisible = count % G.order() == 0;
    Int quotient = divisible ? count / G.order() : Int(0);

    if (cfg.format == "json") {
        Json doc;
        doc["group"] = G.name();
        doc["presentation"] = presentation_to_string(P);
        if (!constraints.empty()) {
            doc["constraints"] = Json::array();
            for (std::size_t i = 0; i < constraints.size(); ++i) {
                const auto& c = constraints[i];
                Json row;
                row["word"] = word_to_string(c.words.front(), P.generator_names);
                row["class_id"] = std::to_string(c.class_id);
                row["class_size"] =
                    std::to_string(G.classes()[static_cast<std::size_t>(c.class_id)].size);
                row["class_representative"] = G.label(
                    G.classes()[static_cast<std::size_t>(c.class_id)].representative);
                doc["constraints"].push_back(row);
            }
        }
        doc["count"] = to_decimal(count);
        doc["group_order"] = std::to_string(G.order());
        doc["abelianization_free_rank"] = std::to_string(ab.free_rank);
        doc["abelianization_torsion"] = Json::array();
        for (const auto& d : ab.torsion_divisors)
            doc["abelianization_torsion"].push_back(to_decimal(d));
        doc["divisible"] = divisible;
        if (divisible) doc["quotient"] = to_decimal(quotient);
        emit(cfg, dump_json(doc));
    } else if (cfg.format == "csv") {
        std::string body = "count,group_order,abelianization_free_rank,divisible,quotient\n";
        body += to_decimal(count) + "," + std::to_string(G.order()) + "," +
                std::to_string(ab.free_rank) + "," + (divisible ? "true" : "false") + "," +
                (divisible ? to_decimal(quotient) : "") + "\n";
        emit(cfg, body);
    } else {
        std::string body = "group " + G.name() + "\npresentation " +
                           presentation_to_string(P) + "\n";
        for (const auto& c : constraints)
            body += "constraint " + word_to_string(c.words.front(), P.generator_names) +
                    " in class " + std::to_string(c.class_id) + " (size " +
                    std::to_string(G.classes()[static_cast<std::size_t>(c.class_id)].size) +
                    ", representative " +
                    G.label(G.classes()[static_cast<std::size_t>(c.class_id)].representative) +
                    ")\n";
        body += "count " + to_decimal(count) + "\n";
        body += "abelianization free rank " + std::to_string(ab.free_rank) + "\n";
        body += divisible ? "divisibility quotient " + to_decimal(quotient) + "\n"
                          : "count not divisible by group order " +
                                std::to_string(G.order()) + "\n";
        emit(cfg, body);
    }
    // Unconstrained counts from an infinite-abelianization source must be
    // divisible by |G|; anything else is a failed verification.
    return !divisible && constraints.empty() && ab.infinite() ? 1 : 0;
}

// torsor verify ---------------------------------------------------------------

int run_torsor_verify(const RunConfig& cfg, const std::string& group_text,
                      const std::string& pres_text, const std::string& sigma_text,
                      const std::vector<std::string>& constraint_texts) {
    auto G = build_group(GroupSpec::parse(group_text));
    auto P = parse_presentation(pres_text);
    auto sigma = parse_automorphism(sigma_text, P);
    std::vector<ClassConstraint> constraints;
    for (const auto& t : constraint_texts) constraints.push_back(parse_constraint(t, P, G));

    auto report = verify_torsor(P, sigma, G, constraints, enum_opts(cfg, true));
    long long twisted = 0;
    for (const auto& f : report.fibers) twisted += f.twisted ? 1 : 0;

    if (cfg.format == "json") {
        Json doc;
        doc["group"] = G.name();
        doc["presentation"] = presentation_to_string(P);
        doc["sigma"] = sigma_to_string(sigma, P);
        doc["pass"] = report.pass;
        doc["upstairs_count"] = to_decimal(report.upstairs_count);
        doc["downstairs_count"] = std::to_string(report.fibers.size());
        doc["twisted_count"] = std::to_string(twisted);
        doc["quotient"] = to_decimal(report.quotient);
        doc["orbit_count"] = to_decimal(report.orbit_count);
        doc["fibers"] = Json::array();
        for (const auto& f : report.fibers) {
            Json row;
            row["base"] = Json::array();
            for (int image : f.base.images) row["base"].push_back(G.label(image));
            row["fiber_size"] = std::to_string(f.fiber_size);
            row["stabilizer_order"] = std::to_string(f.stabilizer_order);
            row["twisted"] = f.twisted;
            doc["fibers"].push_back(row);
        }
        emit(cfg, dump_json(doc));
    } else if (cfg.format == "csv") {
        std::string body = "pass,upstairs_count,downstairs_count,twisted_count,quotient,orbit_count\n";
        body += std::string(report.pass ? "true" : "false") + "," +
                to_decimal(report.upstairs_count) + "," +
                std::to_string(report.fibers.size()) + "," + std::to_string(twisted) + "," +
                to_decimal(report.quotient) + "," + to_decimal(report.orbit_count) + "\n";
        emit(cfg, body);
    } else {
        std::string body = "group " + G.name() + "\npresentation " +
                           presentation_to_string(P) + "\nsigma " +
                           sigma_to_string(sigma, P) + "\n";
        body += "upstairs count " + to_decimal(report.upstairs_count) + "\n";
        body += "downstairs count " + std::to_string(report.fibers.size()) + " (" +
                std::to_string(twisted) + " twisted)\n";
        body += "quotient " + to_decimal(report.quotient) + "\n";
        body += "twisted orbit count " + to_decimal(report.orbit_count) + "\n";
        body += std::string("torsor check ") + (report.pass ? "pass" : "FAIL") + "\n";
        emit(cfg, body);
    }
    return report.pass ? 0 : 1;
}

// surface-table ----------------------------------------------------------------

int run_surface_table(const RunConfig& cfg, int max_genus, int max_n) {
    std::vector<std::vector<Int>> u_rows, v_rows;
    for (int g = 1; g <= max_genus; ++g) {
        auto h = genus_hom_sequence(g, max_n, HomMethod::Character, enum_opts(cfg, false));
        auto gr = growth_from_homs(h);
        u_rows.push_back(gr.u);
        v_rows.push_back(gr.v);
    }

    if (cfg.format == "json") {
        Json doc;
        doc["max_genus"] = std::to_string(max_genus);
        doc["max_n"] = std::to_string(max_n);
        for (const char* kind : {"u", "v"}) {
            doc[kind] = Json::array();
            for (const auto& row : kind[0] == 'u' ? u_rows : v_rows) {
                Json r = Json::array();
                for (const auto& x : row) r.push_back(to_decimal(x));
                doc[kind].push_back(r);
            }
        }
        emit(cfg, dump_json(doc));
    } else if (cfg.format == "csv") {
        std::string body = "kind,genus";
        for (int n = 1; n <= max_n; ++n) body += ",n=" + std::to_string(n);
        body += "\n";
        for (const char* kind : {"u", "v"})
            for (int g = 1; g <= max_genus; ++g) {
                body += std::string(kind) + "," + std::to_string(g);
                for (const auto& x :
                     (kind[0] == 'u' ? u_rows : v_rows)[static_cast<std::size_t>(g - 1)])
                    body += "," + to_decimal(x);
                body += "\n";
            }
        emit(cfg, body);
    } else {
        std::string body;
        for (const char* kind : {"u", "v"}) {
            body += std::string(kind) + " (rows: genus, columns: n = 1.." +
                    std::to_string(max_n) + ")\n";
            std::vector<std::vector<std::string>> rows;
            for (int g = 1; g <= max_genus; ++g) {
                std::vector<std::string> row{"genus " + std::to_string(g)};
                for (const auto& x :
                     (kind[0] == 'u' ? u_rows : v_rows)[static_cast<std::size_t>(g - 1)])
                    row.push_back(to_decimal(x));
                rows.push_back(std::move(row));
            }
            body += aligned_table(rows);
            if (kind[0] == 'u') body += "\n";
        }
        emit(cfg, body);
    }
    return 0;
}

// growth -------------------------------------------------------------------

int run_growth(const RunConfig& cfg, const std::string& pres_text, int genus, int max_n,
               std::string method_text) {
    if (pres_text.empty() == (genus == 0))
        throw InvalidSpec("growth needs exactly one of --pres and --genus");

    std::string source;
    std::vector<Int> h;
    if (!pres_text.empty()) {
        if (method_text == "character")
            throw InvalidSpec("the character method only applies to --genus sources");
        auto P = parse_presentation(pres_text);
        source = presentation_to_string(P);
        h = hom_sequence(P, max_n, enum_opts(cfg, false));
    } else {
        if (method_text.empty()) method_text = "character";
        HomMethod method = method_text == "brute" ? HomMethod::Brute : HomMethod::Character;
        source = "surface genus " + std::to_string(genus);
        h = genus_hom_sequence(genus, max_n, method, enum_opts(cfg, false));
    }

    auto u = u_from_homs(h);
    std::vector<Int> v;
    bool v_integral = true;
    try {
        v = v_from_u(u);
    } catch (const NonIntegerResult&) {
        v_integral = false;
    }
    bool product_form = v_integral && product_form_check(h, v, max_n);

    std::vector<std::pair<long long, int>> congruences;
    for (auto [p, k] : {std::pair<long long, int>{2, 0}, {2, 1}, {3, 0}, {5, 0}, {7, 0}}) {
        long long hi = 1;
        for (int i = 0; i <= k; ++i) hi *= p;
        if (hi <= max_n) congruences.emplace_back(p, k);
    }

    if (cfg.format == "json") {
        Json doc;
        doc["source"] = source;
        doc["max_n"] = std::to_string(max_n);
        doc["h"] = Json::array();
        for (const auto& x : h) doc["h"].push_back(to_decimal(x));
        doc["u"] = Json::array();
        for (const auto& x : u) doc["u"].push_back(to_decimal(x));
        if (v_integral) {
            doc["v"] = Json::array();
            for (const auto& x : v) doc["v"].push_back(to_decimal(x));
        } else {
            doc["v"] = nullptr;
        }
        doc["v_integral"] = v_integral;
        doc["product_form"] = v_integral ? Json(product_form) : Json(nullptr);
        doc["congruences"] = Json::array();
        for (auto [p, k] : congruences) {
            Json row;
            row["p"] = std::to_string(p);
            row["k"] = std::to_string(k);
            row["holds"] = congruence_check(u, p, k);
            doc["congruences"].push_back(row);
        }
        emit(cfg, dump_json(doc));
    } else if (cfg.format == "csv") {
        std::string body = "kind";
        for (int n = 0; n <= max_n; ++n) body += ",n=" + std::to_string(n);
        body += "\nh";
        for (const auto& x : h) body += "," + to_decimal(x);
        body += "\nu,";
        for (const auto& x : u) body += "," + to_decimal(x);
        body += "\nv,";
        if (v_integral)
            for (const auto& x : v) body += "," + to_decimal(x);
        else
            body += std::string(static_cast<std::size_t>(max_n), ',');
        body += "\n";
        emit(cfg, body);
    } else {
        std::string body = "source " + source + "\n";
        auto line = [&body](const char* kind, const std::vector<Int>& xs) {
            body += kind;
            for (const auto& x : xs) body += " " + to_decimal(x);
            body += "\n";
        };
        line("h (n = 0..):", h);
        line("u (n = 1..):", u);
        if (v_integral) {
            line("v (n = 1..):", v);
            body += std::string("product form ") + (product_form ? "holds" : "FAILS") + "\n";
        } else {
            body += "v not integral for this source\n";
        }
        for (auto [p, k] : congruences)
            body += "congruence p=" + std::to_string(p) + " k=" + std::to_string(k) + " " +
                    (congruence_check(u, p, k) ? "holds" : "FAILS") + "\n";
        emit(cfg, body);
    }
    return 0;
}

// char table -----------------------------------------------------------------

int run_char_table(const RunConfig& cfg, int max_n) {
    if (cfg.format == "json") {
        Json doc;
        doc["tables"] = Json::array();
        for (int n = 1; n <= max_n; ++n) {
            auto t = character_table(n);
            Json entry;
            entry["n"] = std::to_string(n);
            entry["classes"] = Json::array();
            entry["class_sizes"] = Json::array();
            for (std::size_t c = 0; c < t.classes.size(); ++c) {
                entry["classes"].push_back(t.classes[c].to_string());
                entry["class_sizes"].push_back(to_decimal(t.class_sizes[c]));
            }
            entry["rows"] = Json::array();
            for (std::size_t r = 0; r < t.classes.size(); ++r) {
                Json row;
                row["partition"] = t.classes[r].to_string();
                row["degree"] = to_decimal(t.degrees[r]);
                row["values"] = Json::array();
                for (const auto& x : t.values[r]) row["values"].push_back(to_decimal(x));
                entry["rows"].push_back(row);
            }
            doc["tables"].push_back(entry);
        }
        emit(cfg, dump_json(doc));
    } else if (cfg.format == "csv") {
        std::string body = "n,row_partition,class_partition,class_size,value\n";
        for (int n = 1; n <= max_n; ++n) {
            auto t = character_table(n);
            for (std::size_t r = 0; r < t.classes.size(); ++r)
                for (std::size_t c = 0; c < t.classes.size(); ++c)
                    body += std::to_string(n) + "," + csv_field(t.classes[r].to_string()) +
                            "," + csv_field(t.classes[c].to_string()) + "," +
                            to_decimal(t.class_sizes[c]) + "," + to_decimal(t.values[r][c]) +
                            "\n";
        }
        emit(cfg, body);
    } else {
        std::string body;
        for (int n = 1; n <= max_n; ++n) {
            auto t = character_table(n);
            body += "S" + std::to_string(n) + " character table\n";
            std::vector<std::vector<std::string>> rows;
            std::vector<std::string> head{"row \\ class"};
            for (const auto& mu : t.classes) head.push_back(mu.to_string());
            rows.push_back(std::move(head));
            std::vector<std::string> sizes{"class size"};
            for (const auto& s : t.class_sizes) sizes.push_back(to_decimal(s));
            rows.push_back(std::move(sizes));
            for (std::size_t r = 0; r < t.classes.size(); ++r) {
                std::vector<std::string> row{t.classes[r].to_string()};
                for (const auto& x : t.values[r]) row.push_back(to_decimal(x));
                rows.push_back(std::move(row));
            }
            body += aligned_table(rows);
            if (n < max_n) body += "\n";
        }
        emit(cfg, body);
    }
    return 0;
}

// bs check -------------------------------------------------------------------

int run_bs_check(const RunConfig& cfg, int max_n) {
    if (max_n < 2) throw InvalidSpec("bs check needs --max-n >= 2");
    struct RowOut {
        int degree;
        long long m, n;
        int row;
        Rat lhs, rhs;
    };
    std::vector<RowOut> rows;
    bool all_pass = true;
    for (int d = 2; d <= max_n; ++d)
        for (long long m = 1; m <= 3; ++m)
            for (long long n = 1; n <= 3; ++n) {
                auto report = bs_identity_check(d, m, n, cfg.budget);
                all_pass = all_pass && report.pass;
                for (const auto& r : report.rows)
                    rows.push_back({d, m, n, r.row, r.lhs, r.rhs});
            }

    if (cfg.format == "json") {
        Json doc;
        doc["pass"] = all_pass;
        doc["rows"] = Json::array();
        for (const auto& r : rows) {
            Json row;
            row["degree"] = std::to_string(r.degree);
            row["m"] = std::to_string(r.m);
            row["n"] = std::to_string(r.n);
            row["row"] = std::to_string(r.row);
            row["lhs"] = to_decimal(r.lhs);
            row["rhs"] = to_decimal(r.rhs);
            row["equal"] = r.lhs == r.rhs;
            doc["rows"].push_back(row);
        }
        emit(cfg, dump_json(doc));
    } else if (cfg.format == "csv") {
        std::string body = "degree,m,n,row,lhs,rhs,equal\n";
        for (const auto& r : rows)
            body += std::to_string(r.degree) + "," + std::to_string(r.m) + "," +
                    std::to_string(r.n) + "," + std::to_string(r.row) + "," +
                    to_decimal(r.lhs) + "," + to_decimal(r.rhs) + "," +
                    (r.lhs == r.rhs ? "true" : "false") + "\n";
        emit(cfg, body);
    } else {
        std::vector<std::vector<std::string>> table;
        table.push_back({"degree", "m", "n", "row", "lhs", "rhs", "equal"});
        for (const auto& r : rows)
            table.push_back({std::to_string(r.degree), std::to_string(r.m),
                             std::to_string(r.n), std::to_string(r.row), to_decimal(r.lhs),
                             to_decimal(r.rhs), r.lhs == r.rhs ? "yes" : "NO"});
        emit(cfg, aligned_table(table) +
                      (all_pass ? "all rows agree\n" : "MISMATCH found\n"));
    }
    return all_pass ? 0 : 1;
}

// verify ---------------------------------------------------------------------

int run_verify(const RunConfig& cfg) {
    VerifyOptions vo;
    vo.budget = cfg.budget;
    vo.workers = cfg.workers;
    auto checks = verify_reference_results(vo);
    bool all_pass = true;
    for (const auto& c : checks) all_pass = all_pass && c.pass;

    if (cfg.format == "json") {
        Json doc;
        doc["pass"] = all_pass;
        doc["checks"] = Json::array();
        int index = 0;
        for (const auto& c : checks) {
            Json row;
            row["criterion"] = std::to_string(++index);
            row["name"] = c.name;
            row["pass"] = c.pass;
            row["detail"] = c.detail;
            doc["checks"].push_back(row);
        }
        emit(cfg, dump_json(doc));
    } else if (cfg.format == "csv") {
        std::string body = "criterion,name,pass,detail\n";
        int index = 0;
        for (const auto& c : checks)
            body += std::to_string(++index) + "," + csv_field(c.name) + "," +
                    (c.pass ? "true" : "false") + "," + csv_field(c.detail) + "\n";
        emit(cfg, body);
    } else {
        std::string body;
        int index = 0;
        for (const auto& c : checks)
            body += std::string(c.pass ? "PASS" : "FAIL") + " criterion " +
                    std::to_string(++index) + ", " + c.name + ": " + c.detail + "\n";
        body += std::string(all_pass ? "OK" : "FAILED") + ": " +
                std::to_string(checks.size()) + " checks\n";
        emit(cfg, body);
    }
    return all_pass ? 0 : 1;
}

struct ReasonCode {
    int exit_code;
    std::string reason;
};

ReasonCode classify(const std::exception& e) {
    if (dynamic_cast<const BudgetExceeded*>(&e)) return {3, "budget-exceeded"};
    if (dynamic_cast<const ParseError*>(&e)) return {2, "parse-error"};
    if (dynamic_cast<const InvalidSpec*>(&e)) return {2, "invalid-spec"};
    if (dynamic_cast<const SizeMismatch*>(&e)) return {2, "size-mismatch"};
    if (dynamic_cast<const IndexOutOfRange*>(&e)) return {2, "index-out-of-range"};
    if (dynamic_cast<const BoundExceeded*>(&e)) return {2, "bound-exceeded"};
    if (dynamic_cast<const CayleyValidationFailed*>(&e)) return {2, "cayley-validation-failed"};
    if (dynamic_cast<const SigmaInconsistent*>(&e)) return {2, "sigma-inconsistent"};
    if (dynamic_cast<const NonIntegerResult*>(&e)) return {1, "non-integer-result"};
    if (dynamic_cast<const Error*>(&e)) return {1, "internal-check-failed"};
    return {1, "internal-error"};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"counts homomorphisms from finitely presented groups into finite groups"};
    app.require_subcommand(1);

    CommonFlags flags;
    std::string group_text, pres_text, sigma_text, method_text;
    std::vector<std::string> constraint_texts;
    int max_genus = 5, max_n = 5, genus = 0;

    std::optional<RunConfig> active;
    auto resolve = [&](const Int& default_budget) {
        active = flags.resolve(default_budget);
        return *active;
    };
    const Int enum_default = EnumOptions{}.budget;
    int rc = 0;

    auto* group_cmd = app.add_subcommand("group", "finite group inspection");
    auto* group_info = group_cmd->add_subcommand("info", "order and conjugacy classes");
    group_info->add_option("--group", group_text, "S<n> | C<n> | SL2_<p> | PSL2_<p> | cayley:<path>")
        ->required();
    flags.attach(group_info);
    group_info->callback([&] { rc = run_group_info(resolve(enum_default), group_text); });

    auto* hom_cmd = app.add_subcommand("hom", "homomorphism counting");
    auto* hom_count = hom_cmd->add_subcommand("count", "count all homomorphisms");
    hom_count->add_option("--group", group_text, "target group")->required();
    hom_count->add_option("--pres", pres_text, "source presentation, e.g. \"gens: x, y; rels: [x,y]\"")
        ->required();
    flags.attach(hom_count);
    hom_count->callback([&] {
        rc = run_hom_count(resolve(enum_default), group_text, pres_text, {});
    });

    auto* hom_constrained =
        hom_cmd->add_subcommand("constrained", "count homomorphisms under class constraints");
    hom_constrained->add_option("--group", group_text, "target group")->required();
    hom_constrained->add_option("--pres", pres_text, "source presentation")->required();
    hom_constrained
        ->add_option("--constrain", constraint_texts,
                     "<word>@<class representative>; repeatable")
        ->required();
    flags.attach(hom_constrained);
    hom_constrained->callback([&] {
        rc = run_hom_count(resolve(enum_default), group_text, pres_text, constraint_texts);
    });

    auto* torsor_cmd = app.add_subcommand("torsor", "mapping-torus restriction checks");
    auto* torsor_verify = torsor_cmd->add_subcommand(
        "verify", "check the fiber and quotient laws for one (presentation, sigma, group)");
    torsor_verify->add_option("--group", group_text, "target group")->required();
    torsor_verify->add_option("--pres", pres_text, "source presentation")->required();
    torsor_verify->add_option("--sigma", sigma_text, "\"x -> x^-1; y -> y\"")->required();
    torsor_verify->add_option("--constrain", constraint_texts,
                              "<word>@<class representative>; repeatable");
    flags.attach(torsor_verify);
    torsor_verify->callback([&] {
        rc = run_torsor_verify(resolve(enum_default), group_text, pres_text, sigma_text,
                               constraint_texts);
    });

    auto* surface = app.add_subcommand("surface-table",
                                       "u and v growth tables for surface groups");
    surface->add_option("--max-genus", max_genus, "rows: genus 1..max")->check(CLI::Range(1, 16));
    surface->add_option("--max-n", max_n, "columns: n = 1..max")->check(CLI::Range(1, 30));
    flags.attach(surface);
    surface->callback([&] { rc = run_surface_table(resolve(enum_default), max_genus, max_n); });

    auto* growth = app.add_subcommand("growth", "hom counts and subgroup growth of one source");
    growth->add_option("--pres", pres_text, "source presentation (brute-force counts)");
    growth->add_option("--genus", genus, "surface source of this genus")->check(CLI::Range(1, 16));
    growth->add_option("--max-n", max_n, "compute h_0..h_N, u and v to N")->check(CLI::Range(1, 30));
    growth->add_option("--method", method_text, "brute | character (surface sources only)")
        ->check(CLI::IsMember({"brute", "character"}));
    flags.attach(growth);
    growth->callback([&] {
        rc = run_growth(resolve(enum_default), pres_text, genus, max_n, method_text);
    });

    auto* char_cmd = app.add_subcommand("char", "symmetric group character data");
    auto* char_table = char_cmd->add_subcommand("table", "irreducible character tables of S_n");
    char_table->add_option("--max-n", max_n, "tables for n = 1..max")->check(CLI::Range(1, 10));
    flags.attach(char_table);
    char_table->callback([&] { rc = run_char_table(resolve(enum_default), max_n); });

    auto* bs_cmd = app.add_subcommand("bs", "two-generator one-relator twist checks");
    auto* bs_check = bs_cmd->add_subcommand(
        "check", "degree * s(chi, x^-m y x^n y^-1) vs the transformed inner product");
    bs_check->add_option("--max-n", max_n, "symmetric degrees 2..max")->check(CLI::Range(2, 8));
    flags.attach(bs_check);
    bs_check->callback([&] { rc = run_bs_check(resolve(enum_default), max_n); });

    auto* verify = app.add_subcommand("verify", "run the full verification suite");
    flags.attach(verify);
    verify->callback([&] { rc = run_verify(resolve(VerifyOptions{}.budget)); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        auto rcode = classify(e);
        RunConfig cfg = active.value_or(RunConfig{});
        if (cfg.format == "json") {
            Json doc;
            doc["error"]["reason"] = rcode.reason;
            doc["error"]["message"] = e.what();
            if (const auto* b = dynamic_cast<const BudgetExceeded*>(&e))
                doc["error"]["cost"] = to_decimal(b->cost);
            try {
                emit(cfg, dump_json(doc));
            } catch (const std::exception&) {
                std::cerr << dump_json(doc);
            }
        } else {
            std::cerr << "error (" << rcode.reason << "): " << e.what() << "\n";
        }
        return rcode.exit_code;
    }
    return rc;
}
