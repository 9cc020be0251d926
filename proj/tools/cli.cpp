#include "cli.hpp"

#include "totalparts/crapseval.hpp"
#include "totalparts/exotica.hpp"
#include "totalparts/fairlab.hpp"
#include "totalparts/serialize.hpp"

#include "CLI11.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

namespace totalparts::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fixed(double v, int digits)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

std::string decimal(const CycElem& e, int digits)
{
    return e.is_rational() ? to_decimal(e.to_rational(), digits) : fixed(approx(e), digits);
}

template <class F>
std::string join_values(std::span<const F> values, const std::vector<std::string>& text, int digits)
{
    std::string out;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (i) out += "  ";
        out += text[i];
        if (digits >= 0) out += " (" + decimal(values[i], digits) + ")";
    }
    return out;
}

std::string die_line(const Die<CycElem>& d, int digits)
{
    const int n = common_conductor(d.probs());
    std::string line = join_values<CycElem>(d.probs(), scalar_strings(d.probs(), n), digits);
    if (n > 1) line += "  [z = zeta_" + std::to_string(n) + "]";
    return line;
}

std::string join_ints(const std::vector<int>& v, const char* sep = " ")
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + std::to_string(v[i]);
    return out;
}

void write_text(const std::string& path, const std::string& text)
{
    std::ofstream f(path);
    if (!f) throw UsageError("cannot write " + path);
    f << text;
}

std::vector<Rational> parse_rational_list(const std::string& text)
{
    std::vector<Rational> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        const auto a = item.find_first_not_of(' ');
        const auto b = item.find_last_not_of(' ');
        if (a == std::string::npos) throw ParseError("empty entry in rational list");
        out.push_back(parse_rational(item.substr(a, b - a + 1)));
    }
    return out;
}

// ------------------------------------------------------------- subcommands

struct Options {
    int order = 6;
    std::vector<int> orders;
    std::vector<int> type;
    int kmin = 2;
    int kmax = 0; // 0: the command's default
    int label_min = 1;
    int decimals = -1;
    bool count_only = false;
    bool real_only = false;
    bool reference = false;
    std::string csv;
    std::string totals;
    std::string sack;
    std::string total;
    std::string factors;
};

void cmd_total(const Options& o, const Config& c, std::ostream& out)
{
    const auto sack = sack_from_json(load_json_argument(o.sack));
    const auto total = parts_to_total(sack);
    if (c.output_format == "json") {
        out << total_to_json(total).dump() << '\n';
        return;
    }
    const int n = common_conductor(total.coeffs());
    const auto text = scalar_strings(total.coeffs(), n);
    for (std::size_t t = 0; t < text.size(); ++t) {
        out << t << '\t' << text[t];
        if (o.decimals >= 0) out << '\t' << decimal(total[t], o.decimals);
        out << '\n';
    }
}

void cmd_solve(const Options& o, const Config& c, std::ostream& out)
{
    const auto total = total_from_json(load_json_argument(o.total));
    const SackType type(o.type);
    if (static_cast<int>(total.size()) != type.T() + 1)
        throw InvalidDistribution("total has " + std::to_string(total.size()) + " entries; type needs " +
                                  std::to_string(type.T() + 1));

    FactorMultiset<CycElem> factors;
    if (!o.factors.empty()) {
        factors = factors_from_json(load_json_argument(o.factors));
    } else {
        const auto rational = as_rational(total);
        if (!rational) throw InvalidDistribution("cyclotomic totals need --factors");
        const auto roots = rational_roots(rational->polynomial());
        if (roots.residual.degree() > 0)
            throw InvalidDistribution("total does not split into linear factors over Q; pass --factors");
        for (const Rational& r : roots.roots) factors.push_back(Factor<CycElem>::linear(CycElem(r)));
    }
    const Poly<CycElem> product = factor_product(factors);
    const CycElem sum = product.coefficient_sum();
    if (is_zero(sum) || !(product * (CycElem(1) / sum) == total.polynomial()))
        throw InvalidDistribution("factor product does not match the total");

    const auto sacks = enumerate_fiber(factors, type, c.workers);
    if (o.count_only) {
        out << sacks.size() << '\n';
        return;
    }
    if (c.output_format == "table") {
        for (std::size_t i = 0; i < sacks.size(); ++i) {
            out << "sack " << i + 1 << (sacks[i].is_strict() ? "  strict" : "") << '\n';
            for (const auto& d : sacks[i].dice()) out << "  " << die_line(d, o.decimals) << '\n';
        }
        return;
    }
    Json list = Json::array();
    for (const auto& s : sacks) list.push_back(sack_to_json(s));
    out << list.dump() << '\n';
}

void cmd_fair_enum(const Options& o, const Config& c, std::ostream& out)
{
    if (o.count_only && !o.real_only) {
        out << fair_pair_count(o.order).get_str() << '\n';
        return;
    }
    const auto pairs = enumerate_fair_pairs(o.order, c.workers, o.real_only);
    if (o.count_only) {
        out << pairs.size() << '\n';
        return;
    }
    if (c.output_format == "json") {
        Json list = Json::array();
        for (const auto& p : pairs) {
            list.push_back(Json{{"r", p.r.r},
                                {"real", p.real},
                                {"strict", p.strict},
                                {"palindromic", p.palindromic},
                                {"sack", sack_to_json(Sack<CycElem>({p.d, p.dhat}))}});
        }
        out << list.dump() << '\n';
        return;
    }
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto& p = pairs[i];
        out << i + 1 << "  r = (" << join_ints(p.r.r, ",") << ")" << (p.real ? "  real" : "")
            << (p.strict ? "  strict" : "") << '\n';
        out << "   d     " << die_line(p.d, o.decimals) << '\n';
        out << "   dhat  " << die_line(p.dhat, o.decimals) << '\n';
    }
}

void cmd_ramify(const Options& o, const Config& c, std::ostream& out)
{
    const auto r = ramification_check(o.order, c.workers);
    if (c.output_format == "json") {
        Json counts = Json::array();
        for (const auto& v : r.counts) counts.push_back(v.get_str());
        out << Json{{"k", o.order}, {"counts", counts}, {"lhs", r.lhs.get_str()}, {"rhs", r.rhs.get_str()},
                    {"holds", r.holds()}}
                   .dump()
            << '\n';
        return;
    }
    out << "ell\tcount\tweight\n";
    for (std::size_t l = 0; l < r.counts.size(); ++l)
        out << l << '\t' << r.counts[l].get_str() << "\t2^" << o.order - 1 - 2 * static_cast<int>(l) << '\n';
    out << "sum\t" << r.lhs.get_str() << '\n';
    out << "fiber degree\t" << r.rhs.get_str() << '\n';
    out << (r.holds() ? "holds" : "FAILS") << '\n';
}

void cmd_coin_die(const Options& o, const Config& c, std::ostream& out)
{
    const auto r = coin_die_fair_check(o.order, c.workers);
    if (c.output_format == "json") {
        Json list = Json::array();
        for (const auto& s : r.outcomes) list.push_back(sack_to_json(s));
        out << Json{{"k", r.k}, {"strict", r.strict}, {"strict_nonfair", r.strict_nonfair},
                    {"only_fair_strict", r.only_fair_strict()}, {"outcomes", list}}
                   .dump()
            << '\n';
        return;
    }
    out << "outcomes\t" << r.outcomes.size() << '\n';
    out << "strict\t" << r.strict << '\n';
    out << "strict unfair\t" << r.strict_nonfair << '\n';
    out << (r.only_fair_strict() ? "only the fair coin and die" : "unfair strict outcomes exist") << '\n';
}

void cmd_exotic(const Options& o, const Config& c, std::ostream& out)
{
    if (o.orders.size() != 2) throw UsageError("--orders takes two orders, e.g. 10,10");
    const int k = std::min(o.orders[0], o.orders[1]);
    const int kp = std::max(o.orders[0], o.orders[1]);
    const auto census = o.reference ? exotic_search_reference(k, kp, c.workers) : exotic_search(k, kp, c.workers);
    if (o.count_only) {
        out << census.E() << '\n';
        return;
    }
    if (c.output_format == "json") {
        Json list = Json::array();
        for (const auto& s : census.sacks)
            list.push_back(
                Json{{"swap", s.swap.to_string()}, {"positive", s.positive}, {"sack", sack_to_json(s.sack)}});
        out << Json{{"k", k}, {"kprime", kp}, {"E", census.E()}, {"sacks", list}}.dump() << '\n';
        return;
    }
    out << "E(" << k << "," << kp << ") = " << census.E() << '\n';
    for (const auto& s : census.sacks) {
        out << s.swap.to_string() << (s.positive ? "  positive" : "") << '\n';
        for (const auto& d : s.sack.dice()) out << "  " << die_line(d, o.decimals) << '\n';
    }
}

void cmd_s3scan(const Options& o, const Config& c, std::ostream& out)
{
    const auto records = s_scan_range(3, o.kmin, o.kmax, c.workers);
    const int digits = o.decimals >= 0 ? o.decimals : 7;
    if (!o.csv.empty()) write_text(o.csv, scatter_csv(records, digits));
    if (c.output_format == "csv") {
        if (o.csv.empty()) out << scatter_csv(records, digits);
        return;
    }
    long fallbacks = 0;
    std::optional<Rational> best;
    std::vector<int> at;
    for (const auto& r : records) {
        fallbacks += r.exact_fallbacks;
        if (!r.R) continue;
        if (!best || *r.R > *best) {
            best = *r.R;
            at.clear();
        }
        if (*r.R == *best) at.push_back(r.k);
    }
    out << "k\t" << o.kmin << ".." << o.kmax << '\n';
    if (best) out << "max R3\t" << to_string(*best) << " at k = " << join_ints(at, ",") << '\n';
    out << "R3 > 60/143\t" << r3_bound_violations(records).size() << '\n';
    const auto exceptions = m3_exceptions_from(records);
    out << "M3(k+143) - M3(k) != 60\t" << exceptions.exceptions.size() << " of " << exceptions.checked << '\n';
    for (const auto& e : exceptions.exceptions)
        out << "  k = " << e.k << "\tdifference " << e.difference << "\ta = " << e.a << "\tb = " << e.b << '\n';
    out << "exact fallbacks\t" << fallbacks << '\n';
}

void cmd_s4scan(const Options& o, const Config& c, std::ostream& out)
{
    const auto records = s_scan_range(4, o.kmin, o.kmax, c.workers);
    std::ostringstream csv;
    csv << "k,S4_min,S4_max,size,interval\n";
    for (const auto& r : records) {
        csv << r.k << ',';
        if (r.S.empty()) {
            csv << ",,0,\n";
            continue;
        }
        const bool interval = r.S.back() - r.S.front() + 1 == static_cast<int>(r.S.size());
        csv << r.S.front() << ',' << r.S.back() << ',' << r.S.size() << ',' << (interval ? "yes" : "no") << '\n';
    }
    if (!o.csv.empty()) write_text(o.csv, csv.str());
    else out << csv.str();
}

void cmd_swaps(const Options& o, const Config& c, std::ostream& out)
{
    const auto swaps = swap_census(o.order, c.workers);
    if (c.output_format == "json") {
        Json list = Json::array();
        for (const auto& s : swaps) list.push_back(s.to_string());
        out << Json{{"k", o.order}, {"E", swaps.size()}, {"swaps", list}}.dump() << '\n';
        return;
    }
    out << "E(" << o.order << ") = " << swaps.size() << '\n';
    for (const auto& s : swaps) out << s.to_string() << '\n';
}

void cmd_scatter(const Options& o, const Config& c, std::ostream& out)
{
    const auto csv = scatter_csv(s_scan_range(3, o.kmin, o.kmax, c.workers), o.decimals >= 0 ? o.decimals : 7);
    if (!o.csv.empty()) write_text(o.csv, csv);
    else out << csv;
}

void cmd_craps(const Options& o, const Config& c, std::ostream& out)
{
    if (o.totals.empty() == o.sack.empty()) throw UsageError("craps takes exactly one of --totals or --sack");
    const CrapsReport r = o.totals.empty() ? craps_from_sack(sack_from_json(load_json_argument(o.sack)))
                                           : craps_evaluate(CrapsTotals(parse_rational_list(o.totals)));
    if (c.output_format == "json") {
        auto row = [](const std::array<Rational, 11>& v) { return scalar_strings(std::span<const Rational>(v)); };
        out << Json{{"p_t", row(r.p_t)},
                    {"p_w_given_t", row(r.p_w_given_t)},
                    {"p_t_and_w", row(r.p_t_and_w)},
                    {"p_win", to_string(r.p_win)},
                    {"p_lose", to_string(r.p_lose)},
                    {"undefined_conditionals", r.undefined_conditionals},
                    {"differs_from_printed", r.differs_from_printed}}
                   .dump()
            << '\n';
        return;
    }
    if (o.decimals < 0) {
        out << r.table();
        return;
    }
    out << "t\tP(t)\tP(w|t)\tP(t&w)\tP(t&w)~\n";
    for (int t = 2; t <= 12; ++t) {
        const auto i = static_cast<std::size_t>(t - 2);
        out << t << '\t' << to_string(r.p_t[i]) << '\t' << to_string(r.p_w_given_t[i]) << '\t'
            << to_string(r.p_t_and_w[i]) << '\t' << to_decimal(r.p_t_and_w[i], o.decimals) << '\n';
    }
    out << "P(w)\t" << to_string(r.p_win) << '\t' << to_decimal(r.p_win, o.decimals) << '\n';
    out << "P(l)\t" << to_string(r.p_lose) << '\t' << to_decimal(r.p_lose, o.decimals) << '\n';
    if (r.differs_from_printed) out << "note\tprinted value " << to_string(printed_fair_p_win) << " differs\n";
}

void cmd_sicherman(const Options& o, const Config& c, std::ostream& out)
{
    const auto pairs = sicherman_search(o.order, o.label_min);
    if (c.output_format == "json") {
        Json list = Json::array();
        for (const auto& p : pairs)
            list.push_back(Json{{"first", p.first}, {"second", p.second}, {"standard", p.is_standard()}});
        out << list.dump() << '\n';
        return;
    }
    for (const auto& p : pairs)
        out << join_ints(p.first) << "  |  " << join_ints(p.second) << (p.is_standard() ? "  standard" : "") << '\n';
}

bool selftest(std::ostream& out)
{
    const std::vector<std::pair<std::string, std::function<bool()>>> checks = {
        {"51 fair pairs of order 6", [] { return enumerate_fair_pairs(6).size() == 51; }},
        {"ramification at 6", [] { return ramification_check(6).lhs == 252 && ramification_check(6).holds(); }},
        {"fiber degree (6,6)", [] { return fiber_degree(SackType({6, 6})) == 252; }},
        {"craps only fair", [] { return craps_fair_impossibility().only_fair_is_strict; }},
        {"E(12) = 3", [] { return swap_census(12).size() == 3; }},
        {"no exotic (6,6)", [] { return exotic_search(6, 6).E() == 0; }},
        {"tridecahedral", [] { return verify_tridecahedral().matches(); }},
        {"M3(143) = 60", [] { return s_scan(3, 143).M == 60; }},
        {"craps 244/495", [] { return craps_evaluate(CrapsTotals::fair()).p_win == Rational(244, 495); }},
        {"one Sicherman pair", [] { return sicherman_search(6, 1).size() == 2; }},
    };
    bool ok = true;
    for (const auto& [name, check] : checks) {
        bool pass = false;
        try {
            pass = check();
        } catch (const std::exception& e) {
            out << "error\t" << name << ": " << e.what() << '\n';
        }
        out << (pass ? "ok\t" : "FAIL\t") << name << '\n';
        ok = ok && pass;
    }
    return ok;
}

} // namespace

Config config_from_environment()
{
    Config c;
    if (const char* env = std::getenv("TOTALPARTS_PRECISION")) {
        char* end = nullptr;
        const long bits = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || bits < 32 || bits > c.precision_cap_bits)
            throw std::invalid_argument("TOTALPARTS_PRECISION must be an integer in [32, " +
                                        std::to_string(c.precision_cap_bits) + "]");
        c.precision_start_bits = static_cast<int>(bits);
    }
    return c;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    Config config;
    try {
        config = config_from_environment();
    } catch (const std::invalid_argument& e) {
        err << e.what() << '\n';
        return 2;
    }
    default_sign_policy().start_bits = config.precision_start_bits;
    default_sign_policy().cap_bits = config.precision_cap_bits;

    CLI::App app{"Exact part-to-total computations for sacks of dice"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--workers", config.workers, "Threads for parallel kernels")->check(CLI::Range(1, 1024));

    Options o;
    const auto format_check = CLI::IsMember({"json", "csv", "table"});
    auto order = [&](CLI::App* sub, const char* help = "Order k of the dice") {
        sub->add_option("--order", o.order, help)->check(CLI::Range(2, 100000));
    };
    auto decimals = [&](CLI::App* sub) {
        sub->add_option("--decimal", o.decimals, "Add a rounded display column with N places")
            ->check(CLI::Range(0, 60));
    };
    auto range = [&](CLI::App* sub) {
        sub->add_option("--kmin", o.kmin, "Smallest k")->check(CLI::Range(2, 1000000));
        sub->add_option("--kmax", o.kmax, "Largest k")->check(CLI::Range(2, 1000000));
    };

    std::map<CLI::App*, std::function<void()>> actions;
    auto sub = [&](const char* name, const char* help, const std::string& default_format,
                   std::function<void(CLI::App*)> setup, std::function<void()> action) {
        CLI::App* s = app.add_subcommand(name, help);
        setup(s);
        actions[s] = [&, s, default_format, action] {
            if (s->get_option_no_throw("--format") == nullptr || s->count("--format") == 0)
                config.output_format = default_format;
            action();
        };
    };

    sub("total", "Total distribution of a sack", "json",
        [&](CLI::App* s) {
            s->add_option("--sack", o.sack, "Sack JSON (inline or path)")->required();
            s->add_option("--format", config.output_format, "Output format")->check(format_check);
            decimals(s);
        },
        [&] { cmd_total(o, config, out); });
    sub("solve", "Sacks of a given type with a given total", "json",
        [&](CLI::App* s) {
            s->add_option("--total", o.total, "Total JSON (inline or path)")->required();
            s->add_option("--type", o.type, "Orders of the dice, e.g. 2,3")->required()->delimiter(',');
            s->add_option("--factors", o.factors, "Factor multiset JSON (inline or path)");
            s->add_flag("--count-only", o.count_only, "Print only the fiber size");
            s->add_option("--format", config.output_format, "Output format")->check(format_check);
            decimals(s);
        },
        [&] { cmd_solve(o, config, out); });
    sub("fair-enum", "Totally fair pairs of k-dice", "table",
        [&](CLI::App* s) {
            order(s);
            s->add_flag("--count-only", o.count_only, "Print only the number of pairs");
            s->add_flag("--real-only", o.real_only, "Only pairs with real probabilities");
            s->add_option("--format", config.output_format, "Output format")->check(format_check);
            decimals(s);
        },
        [&] { cmd_fair_enum(o, config, out); });
    sub("ramify", "Ramification identity for fair pairs of k-dice", "table",
        [&](CLI::App* s) {
            order(s);
            s->add_option("--format", config.output_format, "Output format")->check(format_check);
        },
        [&] { cmd_ramify(o, config, out); });
    sub("coin-die", "Totally fair sacks of a coin and a k-die", "table",
        [&](CLI::App* s) {
            order(s);
            s->add_option("--format", config.output_format, "Output format")->check(format_check);
        },
        [&] { cmd_coin_die(o, config, out); });
    sub("exotic", "Exotic pairs of orders k, k'", "table",
        [&](CLI::App* s) {
            s->add_option("--orders", o.orders, "Two orders, e.g. 10,10")->required()->delimiter(',')->check(
                CLI::Range(2, 100000));
            s->add_flag("--count-only", o.count_only, "Print only E");
            s->add_flag("--reference", o.reference, "Decide every candidate exactly");
            s->add_option("--format", config.output_format, "Output format")->check(format_check);
            decimals(s);
        },
        [&] { cmd_exotic(o, config, out); });
    sub("s3scan", "S3(k), M3(k) and R3(k) over a range of k", "table",
        [&](CLI::App* s) {
            range(s);
            s->add_option("--csv", o.csv, "Write the scatter CSV to this path");
            s->add_option("--format", config.output_format, "Output format")->check(format_check);
            decimals(s);
        },
        [&] { cmd_s3scan(o, config, out); });
    sub("s4scan", "S4(k) over a range of k", "csv",
        [&](CLI::App* s) {
            range(s);
            s->add_option("--csv", o.csv, "Write the CSV to this path");
        },
        [&] { cmd_s4scan(o, config, out); });
    sub("swaps", "Exotic swaps of a pair of k-dice", "table",
        [&](CLI::App* s) {
            order(s);
            s->add_option("--format", config.output_format, "Output format")->check(format_check);
        },
        [&] { cmd_swaps(o, config, out); });
    sub("scatter", "Plot-ready CSV of M3 and R3", "csv",
        [&](CLI::App* s) {
            range(s);
            s->add_option("--csv", o.csv, "Write the CSV to this path");
            decimals(s);
        },
        [&] { cmd_scatter(o, config, out); });
    sub("craps", "Exact craps for a total distribution", "table",
        [&](CLI::App* s) {
            s->add_option("--totals", o.totals, "11 comma-separated rationals for totals 2..12");
            s->add_option("--sack", o.sack, "Sack JSON of two 6-dice (inline or path)");
            s->add_option("--format", config.output_format, "Output format")->check(format_check);
            decimals(s);
        },
        [&] { cmd_craps(o, config, out); });
    sub("sicherman", "Relabeled k-dice with the standard sum distribution", "table",
        [&](CLI::App* s) {
            order(s);
            s->add_option("--label-min", o.label_min, "Smallest allowed label")->check(CLI::Range(0, 1000));
            s->add_option("--format", config.output_format, "Output format")->check(format_check);
        },
        [&] { cmd_sicherman(o, config, out); });
    bool selftest_ok = true;
    sub("selftest", "Run the golden checks", "table", [](CLI::App*) {}, [&] { selftest_ok = selftest(out); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }
    if (o.kmax == 0) o.kmax = app.got_subcommand("s4scan") ? 200 : 950;
    if (o.kmin > o.kmax) {
        err << "--kmin must not exceed --kmax\n";
        return 2;
    }
    try {
        for (auto& [s, action] : actions)
            if (s->parsed()) action();
    } catch (const UsageError& e) {
        err << e.what() << '\n';
        return 2;
    } catch (const ParseError& e) {
        err << e.what() << '\n';
        return 2;
    } catch (const DomainError& e) {
        err << e.what() << '\n';
        return 1;
    } catch (const std::logic_error& e) {
        err << e.what() << '\n';
        return 1;
    }
    return selftest_ok ? 0 : 1;
}

} // namespace totalparts::cli
