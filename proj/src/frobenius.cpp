#include "homcount/frobenius.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>

#include "homcount/errors.hpp"
#include "homcount/presentation.hpp"

namespace homcount {

namespace {

Int parse_int_token(const std::string& tok) {
    std::size_t start = (tok.size() > 1 && tok[0] == '-') ? 1 : 0;
    if (start == tok.size()) throw ParseError("bad integer '" + tok + "'");
    for (std::size_t i = start; i < tok.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(tok[i])))
            throw ParseError("bad integer '" + tok + "'");
    return Int(tok);
}

std::vector<Int> parse_int_line(std::istringstream& in) {
    std::vector<Int> out;
    std::string tok;
    while (in >> tok) out.push_back(parse_int_token(tok));
    return out;
}

void validate_loaded(LoadedCharacterTable& t) {
    CharacterData& d = t.data;
    std::size_t k = d.class_sizes.size();
    if (k == 0) throw InvalidSpec("character table has no classes");
    if (d.order < 1) throw InvalidSpec("character table order must be positive");

    Int size_sum = 0;
    for (const Int& s : d.class_sizes) {
        if (s < 1) throw InvalidSpec("class sizes must be positive");
        size_sum += s;
    }
    if (size_sum != d.order)
        throw InvalidSpec("class sizes sum to " + to_decimal(size_sum) +
                          ", declared order is " + to_decimal(d.order));

    if (t.representative_orders.size() != k)
        throw InvalidSpec("need one representative order per class");
    int identity = -1;
    for (std::size_t c = 0; c < k; ++c) {
        if (t.representative_orders[c] < 1)
            throw InvalidSpec("representative orders must be positive");
        if (t.representative_orders[c] == 1) {
            if (identity >= 0) throw InvalidSpec("two classes of order-1 elements");
            identity = static_cast<int>(c);
        }
    }
    if (identity < 0) throw InvalidSpec("no identity class");
    if (d.class_sizes[static_cast<std::size_t>(identity)] != 1)
        throw InvalidSpec("identity class must have size 1");
    d.identity_class = identity;

    if (d.values.size() != k)
        throw InvalidSpec("need as many irreducibles as classes");
    for (const auto& row : d.values)
        if (row.size() != k) throw InvalidSpec("ragged value matrix");

    Int degree_sq = 0;
    for (std::size_t r = 0; r < k; ++r) {
        if (d.degree(r) < 1) throw InvalidSpec("character degrees must be positive");
        degree_sq += d.degree(r) * d.degree(r);
        for (std::size_t s = r; s < k; ++s) {
            Int dot = 0;
            for (std::size_t c = 0; c < k; ++c)
                dot += d.class_sizes[c] * d.values[r][c] * d.values[s][c];
            if (dot != (r == s ? d.order : Int(0)))
                throw InvalidSpec("rows " + std::to_string(r) + "," + std::to_string(s) +
                                  " fail orthogonality");
        }
    }
    if (degree_sq != d.order)
        throw InvalidSpec("squared degrees sum to " + to_decimal(degree_sq) +
                          ", not the group order");

    for (const auto& [m, pm] : t.power_maps) {
        if (pm.size() != k) throw InvalidSpec("power map needs one entry per class");
        for (std::size_t c = 0; c < k; ++c) {
            if (pm[c] < 0 || static_cast<std::size_t>(pm[c]) >= k)
                throw InvalidSpec("power map entry out of range");
            Int o = t.representative_orders[c];
            Int g = gcd(o, Int(m < 0 ? -m : m));
            if (t.representative_orders[static_cast<std::size_t>(pm[c])] != o / g)
                throw InvalidSpec("power map " + std::to_string(m) +
                                  " breaks element orders at class " + std::to_string(c));
        }
    }
}

// Sum over irreducibles of (|G|/deg)^e * value(z), the common shape of the
// genus counting formulas.
Rat power_weighted_column(const CharacterData& T, long long e, int z_class) {
    Rat total = 0;
    for (std::size_t r = 0; r < T.values.size(); ++r)
        total += rat_pow(Rat(T.order, T.degree(r)), e) *
                 Rat(T.values[r][static_cast<std::size_t>(z_class)]);
    return total;
}

Int require_counting_integer(const Rat& value, const char* what) {
    if (!is_integer(value))
        throw NonIntegerResult(std::string(what) + " came out non-integral: " +
                               to_decimal(value));
    Int n = to_integer(value);
    if (n < 0)
        throw NonIntegerResult(std::string(what) + " came out negative: " + to_decimal(n));
    return n;
}

void check_class_index(const CharacterData& T, int c) {
    if (c < 0 || static_cast<std::size_t>(c) >= T.class_count())
        throw IndexOutOfRange("class index " + std::to_string(c) + " out of range");
}

long long mod_pow(long long base, long long e, long long p) {
    long long acc = 1 % p;
    base %= p;
    if (base < 0) base += p;
    while (e > 0) {
        if (e & 1) acc = acc * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return acc;
}

}  // namespace

CharacterData character_data(const CharacterTable& table) {
    CharacterData d;
    d.order = table.group_order();
    d.class_sizes = table.class_sizes;
    d.values = table.values;
    d.identity_class = table.identity_class;
    return d;
}

LoadedCharacterTable parse_character_table(const std::string& text) {
    LoadedCharacterTable t;
    bool have_order = false, have_sizes = false, have_orders = false, in_values = false;
    std::size_t value_rows_wanted = 0;

    std::istringstream lines(text);
    std::string raw;
    while (std::getline(lines, raw)) {
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream line(raw);
        if (in_values) {
            auto row = parse_int_line(line);
            if (row.empty()) continue;
            t.data.values.push_back(std::move(row));
            continue;
        }
        std::string key;
        if (!(line >> key)) continue;
        if (key == "order") {
            std::string tok;
            if (!(line >> tok)) throw ParseError("order needs a value");
            t.data.order = parse_int_token(tok);
            have_order = true;
        } else if (key == "class_sizes") {
            t.data.class_sizes = parse_int_line(line);
            have_sizes = true;
        } else if (key == "representative_orders") {
            t.representative_orders = parse_int_line(line);
            have_orders = true;
        } else if (key == "power_map") {
            auto nums = parse_int_line(line);
            if (nums.empty()) throw ParseError("power_map needs an exponent");
            long long m = nums[0].convert_to<long long>();
            std::vector<int> pm;
            for (std::size_t i = 1; i < nums.size(); ++i)
                pm.push_back(nums[i].convert_to<int>());
            if (!t.power_maps.emplace(m, std::move(pm)).second)
                throw ParseError("duplicate power_map exponent " + std::to_string(m));
        } else if (key == "values") {
            in_values = true;
            value_rows_wanted = t.data.class_sizes.size();
        } else {
            throw ParseError("unknown character table field '" + key + "'");
        }
    }

    if (!have_order || !have_sizes || !have_orders || !in_values)
        throw ParseError("character table needs order, class_sizes, "
                         "representative_orders and values");
    if (t.data.values.size() != value_rows_wanted)
        throw ParseError("expected " + std::to_string(value_rows_wanted) +
                         " value rows, got " + std::to_string(t.data.values.size()));
    validate_loaded(t);
    return t;
}

LoadedCharacterTable load_character_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidSpec("cannot open character table file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_character_table(buf.str());
}

Int commutator_count(const CharacterData& T, int genus, int z_class) {
    if (genus < 0) throw InvalidSpec("genus must be non-negative");
    check_class_index(T, z_class);
    Rat total = power_weighted_column(T, 2LL * genus - 1, z_class);
    return require_counting_integer(total, "commutator product count");
}

Int surface_count(const CharacterData& T, int genus) {
    if (genus < 1) throw InvalidSpec("surface count needs genus >= 1");
    Rat total = 0;
    for (std::size_t r = 0; r < T.values.size(); ++r)
        total += rat_pow(Rat(T.order, T.degree(r)), 2LL * genus - 2);
    total *= Rat(T.order);
    Int n = require_counting_integer(total, "surface tuple count");
    if (n % T.order != 0)
        throw NonIntegerResult("surface tuple count not divisible by the group order");
    return n;
}

Rat f_chi(const CharacterData& T, int chi_index, int class_id) {
    if (chi_index < 0 || static_cast<std::size_t>(chi_index) >= T.values.size())
        throw IndexOutOfRange("character index out of range");
    check_class_index(T, class_id);
    Rat val = Rat(T.class_sizes[static_cast<std::size_t>(class_id)] *
                      T.values[static_cast<std::size_t>(chi_index)][static_cast<std::size_t>(class_id)],
                  T.degree(static_cast<std::size_t>(chi_index)));
    if (!is_integer(val))
        throw NonIntegerResult("f_chi non-integral on an integer table: " + to_decimal(val));
    return val;
}

Int constrained_count(const CharacterData& T, const std::vector<int>& class_ids) {
    if (class_ids.empty()) throw InvalidSpec("constrained count needs at least one class");
    Rat total = 0;
    for (std::size_t r = 0; r < T.values.size(); ++r) {
        Rat term = Rat(T.degree(r) * T.degree(r), T.order);
        for (int c : class_ids) term *= f_chi(T, static_cast<int>(r), c);
        total += term;
    }
    return require_counting_integer(total, "constrained tuple count");
}

Int constrained_tuple_count(const FiniteGroup& G, const std::vector<int>& class_ids,
                            const Int& budget) {
    if (class_ids.empty()) throw InvalidSpec("constrained count needs at least one class");
    const auto& cls = G.classes();
    for (int c : class_ids)
        if (c < 0 || static_cast<std::size_t>(c) >= cls.size())
            throw IndexOutOfRange("class index " + std::to_string(c) + " out of range");

    std::size_t k = class_ids.size();
    Int cost = 1;
    for (std::size_t i = 0; i + 1 < k; ++i)
        cost *= cls[static_cast<std::size_t>(class_ids[i])].size;
    if (cost > budget) throw BudgetExceeded("class tuple walk over budget", cost);

    int last = class_ids[k - 1];
    Int count = 0;
    std::function<void(std::size_t, int)> walk = [&](std::size_t depth, int prefix) {
        if (depth + 1 == k) {
            if (G.class_of(G.inv(prefix)) == last) ++count;
            return;
        }
        for (int z : cls[static_cast<std::size_t>(class_ids[depth])].members)
            walk(depth + 1, G.mul(prefix, z));
    };
    walk(0, G.identity());
    return count;
}

Rat ncycle_ratio(int n, int k) {
    if (n < 2 || k < 2) throw InvalidSpec("ncycle_ratio needs n >= 2 and k >= 2");
    Rat sum = 0;
    for (int r = 0; r < n; ++r) {
        Int base = factorial(static_cast<unsigned>(r)) *
                   factorial(static_cast<unsigned>(n - r - 1));
        if (r % 2 == 1) base = -base;
        sum += rat_pow(Rat(base), k - 2);
    }
    return sum / Rat(Int(n) * n);
}

FourClassRatio sl2_four_class_ratio(const EigenvalueTuple& e) {
    long long p = e.p;
    if (!is_odd_prime(p)) throw InvalidSpec("eigenvalue tuple needs an odd prime");
    std::array<long long, 4> lam{};
    for (std::size_t i = 0; i < 4; ++i) {
        long long l = ((e.lambdas[i] % p) + p) % p;
        if (l == 0 || l == 1 || l == p - 1)
            throw InvalidSpec("eigenvalues must avoid 0 and +-1 mod p");
        lam[i] = l;
    }

    int hits = 0;
    for (int mask = 0; mask < 16; ++mask) {
        long long prod = 1;
        for (int i = 0; i < 4; ++i) {
            long long f = (mask >> i & 1) ? lam[static_cast<std::size_t>(i)]
                                          : mod_pow(lam[static_cast<std::size_t>(i)], p - 2, p);
            prod = prod * f % p;
        }
        if (prod == 1) ++hits;
    }
    if (hits % 2 != 0) throw Error("sign vector count should pair up");

    FourClassRatio out;
    out.a = hits / 2;
    Int q = p;
    out.ratio = Rat(q * q + 4 * q + 1) + Rat(Int(out.a) * q * q, q - 1);
    return out;
}

int sl2_diagonal_class(const FiniteGroup& G, long long lambda) {
    if (G.spec().kind != GroupSpec::Kind::SL2)
        throw InvalidSpec("diagonal classes are defined here for SL2 groups only");
    long long p = G.spec().n;
    long long l = ((lambda % p) + p) % p;
    if (l == 0 || l == 1 || l == p - 1)
        throw InvalidSpec("diagonal eigenvalue must avoid 0 and +-1 mod p");
    long long linv = mod_pow(l, p - 2, p);
    int x = G.element_from_text(std::to_string(l) + ",0,0," + std::to_string(linv));
    return G.class_of(x);
}

std::vector<Int> word_class_histogram(const FiniteGroup& G, const Word& w, int arity,
                                      const Int& budget) {
    if (arity < 0) throw InvalidSpec("tuple arity must be non-negative");
    if (w.max_generator() >= arity)
        throw SizeMismatch("word uses generator " + std::to_string(w.max_generator()) +
                           " but arity is " + std::to_string(arity));
    Int cost = 1;
    for (int i = 0; i < arity; ++i) cost *= G.order();
    cost *= std::max<std::size_t>(w.size(), 1);
    if (cost > budget) throw BudgetExceeded("word histogram sweep over budget", cost);

    const auto& cls = G.classes();
    std::vector<Int> hist(cls.size(), 0);
    std::vector<int> tuple(static_cast<std::size_t>(arity), 0);
    long long n = G.order();
    while (true) {
        hist[static_cast<std::size_t>(G.class_of(evaluate_word(w, tuple, G)))] += 1;
        int pos = arity - 1;
        while (pos >= 0 && tuple[static_cast<std::size_t>(pos)] == n - 1)
            tuple[static_cast<std::size_t>(pos--)] = 0;
        if (pos < 0) break;
        ++tuple[static_cast<std::size_t>(pos)];
    }
    return hist;
}

Rat s_chi(const FiniteGroup& G, const Word& w, const ClassFunction& chi, const Int& budget) {
    if (w.max_generator() > 1)
        throw InvalidSpec("s_chi takes a word in at most two generators");
    const auto& cls = G.classes();
    if (chi.values.size() != cls.size())
        throw SizeMismatch("class function does not match the group's classes");
    auto hist = word_class_histogram(G, w, 2, budget);
    Rat total = 0;
    for (std::size_t c = 0; c < hist.size(); ++c) total += Rat(hist[c]) * chi.values[c];
    return total / Rat(Int(G.order()) * G.order());
}

ClassFunction symmetric_class_function(const FiniteGroup& G, const CharacterTable& table,
                                       int row) {
    if (G.spec().kind != GroupSpec::Kind::Symmetric || G.spec().n != table.n)
        throw SizeMismatch("group and character table have different degrees");
    if (row < 0 || static_cast<std::size_t>(row) >= table.values.size())
        throw IndexOutOfRange("character table row out of range");
    ClassFunction out;
    for (const auto& c : G.classes()) {
        Partition type = permutation_cycle_type(permutation_images(G, c.representative));
        int col = partition_index(table.classes, type);
        out.values.emplace_back(table.values[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)]);
    }
    return out;
}

int symmetric_class_of_type(const FiniteGroup& G, const Partition& mu) {
    if (G.spec().kind != GroupSpec::Kind::Symmetric)
        throw InvalidSpec("cycle types index classes of symmetric groups only");
    if (mu.n() != static_cast<int>(G.spec().n))
        throw SizeMismatch("cycle type " + mu.to_string() + " has the wrong degree");
    for (const auto& c : G.classes())
        if (permutation_cycle_type(permutation_images(G, c.representative)) == mu)
            return c.id;
    throw IndexOutOfRange("no class of type " + mu.to_string());
}

BsIdentityReport bs_identity_check(int symmetric_degree, long long m, long long n,
                                   const Int& budget) {
    FiniteGroup G = build_group(GroupSpec::symmetric(symmetric_degree));
    CharacterTable table = character_table(symmetric_degree);

    Word x = Word::generator(0);
    Word y = Word::generator(1);
    Word w = x.pow(-m) * y * x.pow(n) * y.inverse();
    auto hist = word_class_histogram(G, w, 2, budget);
    Rat order_sq = Rat(Int(G.order()) * G.order());

    BsIdentityReport report;
    report.pass = true;
    for (std::size_t r = 0; r < table.values.size(); ++r) {
        ClassFunction chi_on_G = symmetric_class_function(G, table, static_cast<int>(r));
        Rat sweep = 0;
        for (std::size_t c = 0; c < hist.size(); ++c)
            sweep += Rat(hist[c]) * chi_on_G.values[c];
        BsIdentityRow row;
        row.row = static_cast<int>(r);
        row.lhs = Rat(table.degrees[r]) * sweep / order_sq;
        row.rhs = inner_product(adams_transform(m, table.row(static_cast<int>(r)), table.classes),
                                adams_transform(n, table.row(static_cast<int>(r)), table.classes),
                                table.class_sizes);
        if (row.lhs != row.rhs) report.pass = false;
        report.rows.push_back(std::move(row));
    }
    return report;
}

Int m_stable_class_count(const FiniteGroup& G, long long m, const Int& budget) {
    auto pm = power_class_map(G, m);
    Int fixed = 0;
    for (std::size_t c = 0; c < pm.size(); ++c)
        if (pm[c] == static_cast<int>(c)) ++fixed;

    // Independent route: pairs (x, y) with y x y^-1 = x^m, counted by plain
    // enumeration, must total |G| times the fixed-class count.
    Word x = Word::generator(0);
    Word y = Word::generator(1);
    Presentation P;
    P.generator_names = {"x", "y"};
    P.relators = {x.pow(-m) * y * x * y.inverse()};
    EnumOptions opt;
    opt.budget = budget;
    opt.store = false;
    Int pairs = enumerate_homs(P, G, opt).count;
    if (pairs != fixed * G.order())
        throw Error("power-stable class count disagrees with pair enumeration: " +
                    to_decimal(pairs) + " pairs vs " + to_decimal(fixed) + " classes");
    return fixed;
}

Int sl2_m_stable_closed_form(long long p, long long m) {
    if (!is_odd_prime(p)) throw InvalidSpec("closed form needs an odd prime");
    if (m % 2 != 0) throw InvalidSpec("closed form is stated for even exponents");
    long long r = ((m % p) + p) % p;
    Int delta = 0;
    for (long long t = 0; t <= p / 2; ++t)
        if (t * t % p == r) {
            delta = 2;
            break;
        }
    Int sum = 0;
    for (long long e1 : {-1, 1})
        for (long long e2 : {-1, 1}) {
            long long a = p + e1;
            long long b = m + e2;
            sum += std::gcd(a, b < 0 ? -b : b) - 1;
        }
    if (sum % 2 != 0) throw Error("gcd terms should pair up for even m");
    return 1 + delta + sum / 2;
}

}  // namespace homcount
