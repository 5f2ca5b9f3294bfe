#include "homcount/group.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <mutex>
#include <sstream>
#include <unordered_map>

#include "homcount/errors.hpp"
#include "homcount/numeric.hpp"

namespace homcount {

namespace {

constexpr int kMaxSymmetricDegree = 12;   // 12! still fits comfortably in an int index space
constexpr long long kMaxCyclicOrder = 1000000;
constexpr long long kMaxMatrixPrime = 61;
constexpr long long kMaxClassOrder = 1000000;  // class computation allocates per-element maps

long long checked_order_for_table(long long order) {
    return order * order;  // order is bounded by table_bound (<= 65535) when this is called
}

// Factorial digits pick from the list of unused symbols; identity ranks to 0.
void unrank_perm(long long r, int n, const long long* fact, int* out) {
    int avail[kMaxSymmetricDegree];
    for (int i = 0; i < n; ++i) avail[i] = i;
    int left = n;
    for (int i = 0; i < n; ++i) {
        long long f = fact[n - 1 - i];
        int d = static_cast<int>(r / f);
        r %= f;
        out[i] = avail[d];
        for (int j = d; j + 1 < left; ++j) avail[j] = avail[j + 1];
        --left;
    }
}

long long rank_perm(const int* p, int n, const long long* fact) {
    long long r = 0;
    for (int i = 0; i < n; ++i) {
        int c = 0;
        for (int j = i + 1; j < n; ++j)
            if (p[j] < p[i]) ++c;
        r += c * fact[n - 1 - i];
    }
    return r;
}

std::uint32_t pack_mat(long long a, long long b, long long c, long long d, long long p) {
    return static_cast<std::uint32_t>(((a * p + b) * p + c) * p + d);
}

std::array<long long, 4> unpack_mat(std::uint32_t m, long long p) {
    std::array<long long, 4> e;
    e[3] = m % p; m /= static_cast<std::uint32_t>(p);
    e[2] = m % p; m /= static_cast<std::uint32_t>(p);
    e[1] = m % p; m /= static_cast<std::uint32_t>(p);
    e[0] = m;
    return e;
}

// Sign convention for PSL2: flip the matrix so its first nonzero entry (row
// major) lands in {1, ..., (p-1)/2}; that picks one matrix out of {M, -M}.
std::uint32_t normalize_psl2(std::array<long long, 4> e, long long p) {
    for (long long v : e) {
        if (v == 0) continue;
        if (v > (p - 1) / 2)
            for (auto& x : e) x = (p - x) % p;
        break;
    }
    return pack_mat(e[0], e[1], e[2], e[3], p);
}

}  // namespace

struct FiniteGroup::Impl {
    GroupSpec spec;
    std::string display_name;
    long long order = 0;

    std::vector<std::uint16_t> table;  // dense fast path; empty above the bound
    std::vector<int> inverse;          // filled whenever the table is

    // symmetric
    int degree = 0;
    long long fact[kMaxSymmetricDegree + 1] = {};

    // cyclic
    long long modulus = 0;

    // SL2 / PSL2
    long long p = 0;
    bool projective = false;
    std::vector<std::uint32_t> mats;
    std::unordered_map<std::uint32_t, int> mat_index;

    std::vector<std::string> labels;  // Cayley groups only

    mutable std::once_flag classes_once;
    mutable std::vector<ConjugacyClass> classes;
    mutable std::vector<int> class_index;

    int raw_mul(int a, int b) const {
        switch (spec.kind) {
            case GroupSpec::Kind::Symmetric: {
                int pa[kMaxSymmetricDegree], pb[kMaxSymmetricDegree], pc[kMaxSymmetricDegree];
                unrank_perm(a, degree, fact, pa);
                unrank_perm(b, degree, fact, pb);
                for (int i = 0; i < degree; ++i) pc[i] = pb[pa[i]];  // a first, then b
                return static_cast<int>(rank_perm(pc, degree, fact));
            }
            case GroupSpec::Kind::Cyclic:
                return static_cast<int>((static_cast<long long>(a) + b) % modulus);
            case GroupSpec::Kind::SL2:
            case GroupSpec::Kind::PSL2: {
                auto x = unpack_mat(mats[a], p);
                auto y = unpack_mat(mats[b], p);
                std::array<long long, 4> z = {
                    (x[0] * y[0] + x[1] * y[2]) % p, (x[0] * y[1] + x[1] * y[3]) % p,
                    (x[2] * y[0] + x[3] * y[2]) % p, (x[2] * y[1] + x[3] * y[3]) % p};
                std::uint32_t key = projective ? normalize_psl2(z, p)
                                               : pack_mat(z[0], z[1], z[2], z[3], p);
                return mat_index.at(key);
            }
            case GroupSpec::Kind::Cayley:
                return table[static_cast<std::size_t>(a) * order + b];
        }
        throw Error("unreachable group kind");
    }

    int raw_inv(int a) const {
        switch (spec.kind) {
            case GroupSpec::Kind::Symmetric: {
                int pa[kMaxSymmetricDegree], q[kMaxSymmetricDegree];
                unrank_perm(a, degree, fact, pa);
                for (int i = 0; i < degree; ++i) q[pa[i]] = i;
                return static_cast<int>(rank_perm(q, degree, fact));
            }
            case GroupSpec::Kind::Cyclic:
                return static_cast<int>((modulus - a) % modulus);
            case GroupSpec::Kind::SL2:
            case GroupSpec::Kind::PSL2: {
                auto x = unpack_mat(mats[a], p);
                // det = 1, so the inverse is [[d, -b], [-c, a]]
                std::array<long long, 4> z = {x[3], (p - x[1]) % p, (p - x[2]) % p, x[0]};
                std::uint32_t key = projective ? normalize_psl2(z, p)
                                               : pack_mat(z[0], z[1], z[2], z[3], p);
                return mat_index.at(key);
            }
            case GroupSpec::Kind::Cayley: {
                for (int b = 0; b < order; ++b)
                    if (table[static_cast<std::size_t>(a) * order + b] == 0) return b;
                throw Error("no inverse for element " + std::to_string(a));
            }
        }
        throw Error("unreachable group kind");
    }

    int mul(int a, int b) const {
        if (!table.empty()) return table[static_cast<std::size_t>(a) * order + b];
        return raw_mul(a, b);
    }

    int inv(int a) const {
        if (!inverse.empty()) return inverse[a];
        return raw_inv(a);
    }

    void build_table_if_small(std::size_t bound) {
        if (spec.kind == GroupSpec::Kind::Cayley) return;  // table is the input itself
        if (order > static_cast<long long>(bound) || order > 65535) return;
        table.resize(static_cast<std::size_t>(checked_order_for_table(order)));
        for (int a = 0; a < order; ++a)
            for (int b = 0; b < order; ++b)
                table[static_cast<std::size_t>(a) * order + b] =
                    static_cast<std::uint16_t>(raw_mul(a, b));
        fill_inverses();
    }

    void fill_inverses() {
        inverse.assign(static_cast<std::size_t>(order), -1);
        for (int a = 0; a < order; ++a) inverse[a] = raw_inv(a);
    }

    void compute_classes() const {
        if (order > kMaxClassOrder)
            throw BoundExceeded("conjugacy classes: group order " + std::to_string(order) +
                                " exceeds limit " + std::to_string(kMaxClassOrder));
        class_index.assign(static_cast<std::size_t>(order), -1);
        if (spec.kind == GroupSpec::Kind::Cyclic) {
            // Abelian, so every orbit is a singleton; skip the quadratic scan.
            for (int x = 0; x < order; ++x) {
                class_index[x] = x;
                classes.push_back(ConjugacyClass{x, x, 1, order, {x}});
            }
            return;
        }
        for (int x = 0; x < order; ++x) {
            if (class_index[x] >= 0) continue;
            ConjugacyClass c;
            c.id = static_cast<int>(classes.size());
            c.representative = x;
            for (int g = 0; g < order; ++g) {
                int y = mul(mul(g, x), inv(g));
                if (class_index[y] < 0) {
                    class_index[y] = c.id;
                    c.members.push_back(y);
                }
            }
            std::sort(c.members.begin(), c.members.end());
            c.size = static_cast<long long>(c.members.size());
            if (order % c.size != 0)
                throw Error("orbit size " + std::to_string(c.size) +
                            " does not divide group order " + std::to_string(order));
            c.centralizer_order = order / c.size;
            classes.push_back(std::move(c));
        }
    }
};

GroupSpec GroupSpec::symmetric(long long n) {
    if (n < 1 || n > kMaxSymmetricDegree)
        throw InvalidSpec("symmetric degree must be in 1.." +
                          std::to_string(kMaxSymmetricDegree) + ", got " + std::to_string(n));
    return GroupSpec{Kind::Symmetric, n, {}};
}

GroupSpec GroupSpec::cyclic(long long n) {
    if (n < 1 || n > kMaxCyclicOrder)
        throw InvalidSpec("cyclic order must be in 1.." + std::to_string(kMaxCyclicOrder) +
                          ", got " + std::to_string(n));
    return GroupSpec{Kind::Cyclic, n, {}};
}

GroupSpec GroupSpec::sl2(long long p) {
    if (!is_odd_prime(p) || p > kMaxMatrixPrime)
        throw InvalidSpec("SL2 needs an odd prime p <= " + std::to_string(kMaxMatrixPrime) +
                          ", got " + std::to_string(p));
    return GroupSpec{Kind::SL2, p, {}};
}

GroupSpec GroupSpec::psl2(long long p) {
    if (!is_odd_prime(p) || p > kMaxMatrixPrime)
        throw InvalidSpec("PSL2 needs an odd prime p <= " + std::to_string(kMaxMatrixPrime) +
                          ", got " + std::to_string(p));
    return GroupSpec{Kind::PSL2, p, {}};
}

GroupSpec GroupSpec::cayley(std::string path) {
    return GroupSpec{Kind::Cayley, 0, std::move(path)};
}

GroupSpec GroupSpec::parse(const std::string& text) {
    auto all_digits = [](const std::string& s) {
        return !s.empty() && std::all_of(s.begin(), s.end(),
                                         [](unsigned char c) { return std::isdigit(c); });
    };
    auto to_num = [&](const std::string& s) { return std::stoll(s); };
    if (text.rfind("cayley:", 0) == 0) {
        std::string path = text.substr(7);
        if (path.empty()) throw InvalidSpec("empty path in group spec '" + text + "'");
        return cayley(path);
    }
    if (text.rfind("PSL2_", 0) == 0 && all_digits(text.substr(5))) return psl2(to_num(text.substr(5)));
    if (text.rfind("SL2_", 0) == 0 && all_digits(text.substr(4))) return sl2(to_num(text.substr(4)));
    if (text.size() > 1 && text[0] == 'S' && all_digits(text.substr(1))) return symmetric(to_num(text.substr(1)));
    if (text.size() > 1 && text[0] == 'C' && all_digits(text.substr(1))) return cyclic(to_num(text.substr(1)));
    throw InvalidSpec("cannot parse group spec '" + text +
                      "' (expected S<n>, C<n>, SL2_<p>, PSL2_<p> or cayley:<path>)");
}

std::string GroupSpec::name() const {
    switch (kind) {
        case Kind::Symmetric: return "S" + std::to_string(n);
        case Kind::Cyclic: return "C" + std::to_string(n);
        case Kind::SL2: return "SL2(" + std::to_string(n) + ")";
        case Kind::PSL2: return "PSL2(" + std::to_string(n) + ")";
        case Kind::Cayley: return "cayley:" + path;
    }
    return "?";
}

long long FiniteGroup::order() const { return impl_->order; }
int FiniteGroup::mul(int a, int b) const { return impl_->mul(a, b); }
int FiniteGroup::inv(int a) const { return impl_->inv(a); }
int FiniteGroup::conj(int g, int x) const { return impl_->mul(impl_->mul(g, x), impl_->inv(g)); }

int FiniteGroup::power(int x, long long m) const {
    unsigned long long k;
    int base = x;
    if (m < 0) {
        base = inv(x);
        k = static_cast<unsigned long long>(-(m + 1)) + 1;
    } else {
        k = static_cast<unsigned long long>(m);
    }
    int acc = 0;
    while (k > 0) {
        if (k & 1) acc = mul(acc, base);
        base = mul(base, base);
        k >>= 1;
    }
    return acc;
}

const std::vector<ConjugacyClass>& FiniteGroup::classes() const {
    std::call_once(impl_->classes_once, [this] { impl_->compute_classes(); });
    return impl_->classes;
}

int FiniteGroup::class_of(int x) const {
    classes();
    if (x < 0 || x >= impl_->order)
        throw IndexOutOfRange("element index " + std::to_string(x) + " out of range");
    return impl_->class_index[x];
}

const GroupSpec& FiniteGroup::spec() const { return impl_->spec; }

std::string FiniteGroup::name() const { return impl_->display_name; }

const std::uint16_t* FiniteGroup::table_data() const {
    return impl_->table.empty() ? nullptr : impl_->table.data();
}

std::string FiniteGroup::label(int x) const {
    const Impl& im = *impl_;
    if (x < 0 || x >= im.order)
        throw IndexOutOfRange("element index " + std::to_string(x) + " out of range");
    switch (im.spec.kind) {
        case GroupSpec::Kind::Symmetric: {
            int p[kMaxSymmetricDegree];
            unrank_perm(x, im.degree, im.fact, p);
            std::string out;
            bool seen[kMaxSymmetricDegree] = {};
            for (int i = 0; i < im.degree; ++i) {
                if (seen[i] || p[i] == i) continue;
                out += "(";
                int j = i;
                bool first = true;
                while (!seen[j]) {
                    seen[j] = true;
                    if (!first) out += " ";
                    out += std::to_string(j + 1);
                    first = false;
                    j = p[j];
                }
                out += ")";
            }
            return out.empty() ? "e" : out;
        }
        case GroupSpec::Kind::Cyclic:
            return std::to_string(x);
        case GroupSpec::Kind::SL2:
        case GroupSpec::Kind::PSL2: {
            auto e = unpack_mat(im.mats[x], im.p);
            std::ostringstream os;
            os << "[[" << e[0] << "," << e[1] << "],[" << e[2] << "," << e[3] << "]]";
            return os.str();
        }
        case GroupSpec::Kind::Cayley:
            return im.labels.empty() ? "g" + std::to_string(x) : im.labels[x];
    }
    return "?";
}

int FiniteGroup::element_from_text(const std::string& text) const {
    const Impl& im = *impl_;
    auto trim = [](std::string s) {
        auto issp = [](unsigned char c) { return std::isspace(c); };
        while (!s.empty() && issp(s.front())) s.erase(s.begin());
        while (!s.empty() && issp(s.back())) s.pop_back();
        return s;
    };
    std::string t = trim(text);
    if (t.empty()) throw ParseError("empty element text");
    switch (im.spec.kind) {
        case GroupSpec::Kind::Symmetric: {
            if (t == "e" || t == "()" || t == "id") return 0;
            int perm[kMaxSymmetricDegree];
            bool used[kMaxSymmetricDegree] = {};
            for (int i = 0; i < im.degree; ++i) perm[i] = i;
            std::size_t pos = 0;
            bool any = false;
            while (pos < t.size()) {
                if (std::isspace(static_cast<unsigned char>(t[pos]))) { ++pos; continue; }
                if (t[pos] != '(')
                    throw ParseError("expected '(' in cycle notation: '" + text + "'");
                ++pos;
                std::vector<int> cycle;
                while (pos < t.size() && t[pos] != ')') {
                    if (std::isspace(static_cast<unsigned char>(t[pos])) || t[pos] == ',') { ++pos; continue; }
                    if (!std::isdigit(static_cast<unsigned char>(t[pos])))
                        throw ParseError("bad character in cycle notation: '" + text + "'");
                    int v = 0;
                    while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos])))
                        v = v * 10 + (t[pos++] - '0');
                    if (v < 1 || v > im.degree)
                        throw ParseError("cycle entry " + std::to_string(v) +
                                         " out of range for degree " + std::to_string(im.degree));
                    if (used[v - 1])
                        throw ParseError("repeated entry " + std::to_string(v) + " in cycles");
                    used[v - 1] = true;
                    cycle.push_back(v - 1);
                }
                if (pos >= t.size()) throw ParseError("unterminated cycle in '" + text + "'");
                ++pos;  // ')'
                for (std::size_t i = 0; i < cycle.size(); ++i)
                    perm[cycle[i]] = cycle[(i + 1) % cycle.size()];
                any = true;
            }
            if (!any) throw ParseError("no cycles in '" + text + "'");
            return static_cast<int>(rank_perm(perm, im.degree, im.fact));
        }
        case GroupSpec::Kind::Cyclic: {
            long long v = 0;
            try {
                v = std::stoll(t);
            } catch (const std::exception&) {
                throw ParseError("expected an integer residue, got '" + text + "'");
            }
            long long m = im.modulus;
            return static_cast<int>(((v % m) + m) % m);
        }
        case GroupSpec::Kind::SL2:
        case GroupSpec::Kind::PSL2: {
            // Accept both bare "a,b,c,d" and the bracketed label form.
            std::string flat;
            for (char c : t)
                if (c != '[' && c != ']' && !std::isspace(static_cast<unsigned char>(c))) flat += c;
            std::array<long long, 4> e;
            std::string item;
            std::istringstream is(flat);
            for (int i = 0; i < 4; ++i) {
                if (!std::getline(is, item, ','))
                    throw ParseError("expected 'a,b,c,d' matrix entries, got '" + text + "'");
                try {
                    long long v = std::stoll(trim(item));
                    e[i] = ((v % im.p) + im.p) % im.p;
                } catch (const std::exception&) {
                    throw ParseError("bad matrix entry '" + item + "'");
                }
            }
            if (std::getline(is, item, ','))
                throw ParseError("too many matrix entries in '" + text + "'");
            long long det = ((e[0] * e[3] - e[1] * e[2]) % im.p + im.p) % im.p;
            if (det != 1)
                throw ParseError("matrix determinant is " + std::to_string(det) + ", need 1");
            std::uint32_t key = im.projective ? normalize_psl2(e, im.p)
                                              : pack_mat(e[0], e[1], e[2], e[3], im.p);
            return im.mat_index.at(key);
        }
        case GroupSpec::Kind::Cayley: {
            std::string idx = t;
            if (!idx.empty() && (idx[0] == 'g' || idx[0] == 'G')) idx = idx.substr(1);
            if (!idx.empty() && std::all_of(idx.begin(), idx.end(), [](unsigned char c) {
                    return std::isdigit(c);
                })) {
                long long v = std::stoll(idx);
                if (v < 0 || v >= im.order)
                    throw ParseError("element index " + std::to_string(v) + " out of range");
                return static_cast<int>(v);
            }
            for (int i = 0; i < im.order; ++i)
                if (!im.labels.empty() && im.labels[i] == t) return i;
            throw ParseError("unknown element '" + text + "'");
        }
    }
    throw ParseError("unknown element '" + text + "'");
}

namespace {

void validate_table(const std::vector<std::vector<int>>& rows, const GroupOptions& options) {
    long long n = static_cast<long long>(rows.size());
    for (long long i = 0; i < n; ++i) {
        if (static_cast<long long>(rows[i].size()) != n)
            throw CayleyValidationFailed("row " + std::to_string(i) + " has " +
                                         std::to_string(rows[i].size()) + " entries, expected " +
                                         std::to_string(n));
        for (int v : rows[i])
            if (v < 0 || v >= n)
                throw CayleyValidationFailed("entry " + std::to_string(v) +
                                             " out of range in row " + std::to_string(i));
    }
    for (long long j = 0; j < n; ++j) {
        if (rows[0][j] != j)
            throw CayleyValidationFailed("element 0 is not a left identity");
        if (rows[j][0] != j)
            throw CayleyValidationFailed("element 0 is not a right identity");
    }
    // Rows and columns must be permutations, otherwise inverses cannot exist.
    std::vector<char> seen(static_cast<std::size_t>(n));
    for (long long i = 0; i < n; ++i) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int v : rows[i]) {
            if (seen[v]) throw CayleyValidationFailed("row " + std::to_string(i) + " repeats entry " + std::to_string(v));
            seen[v] = 1;
        }
    }
    for (long long j = 0; j < n; ++j) {
        std::fill(seen.begin(), seen.end(), 0);
        for (long long i = 0; i < n; ++i) {
            int v = rows[i][j];
            if (seen[v]) throw CayleyValidationFailed("column " + std::to_string(j) + " repeats entry " + std::to_string(v));
            seen[v] = 1;
        }
    }
    for (long long a = 0; a < n; ++a) {
        int b = -1;
        for (long long x = 0; x < n; ++x)
            if (rows[a][x] == 0) { b = static_cast<int>(x); break; }
        if (b < 0 || rows[b][a] != 0)
            throw CayleyValidationFailed("element " + std::to_string(a) + " has no two-sided inverse");
    }
    if (options.check_associativity && n <= static_cast<long long>(options.assoc_check_bound)) {
        for (long long a = 0; a < n; ++a)
            for (long long b = 0; b < n; ++b)
                for (long long c = 0; c < n; ++c)
                    if (rows[rows[a][b]][c] != rows[a][rows[b][c]])
                        throw CayleyValidationFailed(
                            "associativity fails at (" + std::to_string(a) + "," +
                            std::to_string(b) + "," + std::to_string(c) + ")");
    }
}

std::shared_ptr<FiniteGroup::Impl> impl_from_table(const std::vector<std::vector<int>>& rows,
                                                   const GroupSpec& spec,
                                                   const std::string& name,
                                                   const std::vector<std::string>& labels,
                                                   const GroupOptions& options) {
    long long n = static_cast<long long>(rows.size());
    if (n < 1) throw CayleyValidationFailed("empty table");
    if (n > 65535) throw InvalidSpec("Cayley table order " + std::to_string(n) + " too large");
    if (!labels.empty() && static_cast<long long>(labels.size()) != n)
        throw InvalidSpec("label count does not match table order");
    validate_table(rows, options);
    auto impl = std::make_shared<FiniteGroup::Impl>();
    impl->spec = spec;
    impl->display_name = name;
    impl->order = n;
    impl->labels = labels;
    impl->table.resize(static_cast<std::size_t>(n) * n);
    for (long long i = 0; i < n; ++i)
        for (long long j = 0; j < n; ++j)
            impl->table[static_cast<std::size_t>(i) * n + j] = static_cast<std::uint16_t>(rows[i][j]);
    impl->fill_inverses();
    return impl;
}

}  // namespace

FiniteGroup build_group(const GroupSpec& spec, const GroupOptions& options) {
    switch (spec.kind) {
        case GroupSpec::Kind::Symmetric: {
            if (spec.n < 1 || spec.n > kMaxSymmetricDegree)
                throw InvalidSpec("symmetric degree out of range: " + std::to_string(spec.n));
            auto impl = std::make_shared<FiniteGroup::Impl>();
            impl->spec = spec;
            impl->display_name = spec.name();
            impl->degree = static_cast<int>(spec.n);
            impl->fact[0] = 1;
            for (int i = 1; i <= impl->degree; ++i) impl->fact[i] = impl->fact[i - 1] * i;
            impl->order = impl->fact[impl->degree];
            impl->build_table_if_small(options.table_bound);
            return FiniteGroup(std::move(impl));
        }
        case GroupSpec::Kind::Cyclic: {
            if (spec.n < 1 || spec.n > kMaxCyclicOrder)
                throw InvalidSpec("cyclic order out of range: " + std::to_string(spec.n));
            auto impl = std::make_shared<FiniteGroup::Impl>();
            impl->spec = spec;
            impl->display_name = spec.name();
            impl->modulus = spec.n;
            impl->order = spec.n;
            impl->build_table_if_small(options.table_bound);
            return FiniteGroup(std::move(impl));
        }
        case GroupSpec::Kind::SL2:
        case GroupSpec::Kind::PSL2: {
            long long p = spec.n;
            if (!is_odd_prime(p) || p > kMaxMatrixPrime)
                throw InvalidSpec("need an odd prime p <= " + std::to_string(kMaxMatrixPrime) +
                                  ", got " + std::to_string(p));
            auto impl = std::make_shared<FiniteGroup::Impl>();
            impl->spec = spec;
            impl->display_name = spec.name();
            impl->p = p;
            impl->projective = spec.kind == GroupSpec::Kind::PSL2;
            for (long long a = 0; a < p; ++a)
                for (long long b = 0; b < p; ++b)
                    for (long long c = 0; c < p; ++c)
                        for (long long d = 0; d < p; ++d) {
                            if (((a * d - b * c) % p + p) % p != 1) continue;
                            std::uint32_t key =
                                impl->projective ? normalize_psl2({a, b, c, d}, p)
                                                 : pack_mat(a, b, c, d, p);
                            if (impl->mat_index.count(key)) continue;
                            impl->mat_index.emplace(key, static_cast<int>(impl->mats.size()));
                            impl->mats.push_back(key);
                        }
            impl->order = static_cast<long long>(impl->mats.size());
            long long expected = impl->projective ? p * (p * p - 1) / 2 : p * (p * p - 1);
            if (impl->order != expected)
                throw Error("matrix group enumeration produced " + std::to_string(impl->order) +
                            " elements, expected " + std::to_string(expected));
            // Move the identity matrix to index 0.
            std::uint32_t id_key = pack_mat(1, 0, 0, 1, p);
            int at = impl->mat_index.at(id_key);
            if (at != 0) {
                std::swap(impl->mats[0], impl->mats[at]);
                impl->mat_index[impl->mats[0]] = 0;
                impl->mat_index[impl->mats[at]] = at;
            }
            impl->build_table_if_small(options.table_bound);
            return FiniteGroup(std::move(impl));
        }
        case GroupSpec::Kind::Cayley: {
            std::ifstream in(spec.path);
            if (!in) throw InvalidSpec("cannot open Cayley table file '" + spec.path + "'");
            long long n = 0;
            if (!(in >> n) || n < 1)
                throw InvalidSpec("Cayley file '" + spec.path + "' must start with a positive order");
            if (n > 65535) throw InvalidSpec("Cayley table order " + std::to_string(n) + " too large");
            std::vector<std::vector<int>> rows(static_cast<std::size_t>(n),
                                               std::vector<int>(static_cast<std::size_t>(n)));
            for (long long i = 0; i < n; ++i)
                for (long long j = 0; j < n; ++j)
                    if (!(in >> rows[i][j]))
                        throw InvalidSpec("Cayley file '" + spec.path + "' truncated at row " +
                                          std::to_string(i));
            return FiniteGroup(impl_from_table(rows, spec, spec.name(), {}, options));
        }
    }
    throw InvalidSpec("unknown group kind");
}

FiniteGroup group_from_table(const std::vector<std::vector<int>>& table, const std::string& name,
                             const std::vector<std::string>& labels, const GroupOptions& options) {
    GroupSpec spec = GroupSpec::cayley("<memory:" + name + ">");
    return FiniteGroup(impl_from_table(table, spec, name, labels, options));
}

const std::vector<ConjugacyClass>& conjugacy_classes(const FiniteGroup& G) { return G.classes(); }

std::vector<int> permutation_images(const FiniteGroup& G, int element) {
    if (G.spec().kind != GroupSpec::Kind::Symmetric)
        throw InvalidSpec("permutation images only exist for symmetric groups");
    if (element < 0 || element >= G.order())
        throw IndexOutOfRange("element index " + std::to_string(element) + " out of range");
    int degree = static_cast<int>(G.spec().n);
    long long fact[kMaxSymmetricDegree + 1];
    fact[0] = 1;
    for (int i = 1; i <= degree; ++i) fact[i] = fact[i - 1] * i;
    int p[kMaxSymmetricDegree];
    unrank_perm(element, degree, fact, p);
    return std::vector<int>(p, p + degree);
}

std::vector<int> power_class_map(const FiniteGroup& G, long long m) {
    const auto& cls = G.classes();
    std::vector<int> out(cls.size());
    for (const auto& c : cls) {
        out[c.id] = G.class_of(G.power(c.representative, m));
        if (c.members.size() > 1) {
            int check = G.class_of(G.power(c.members[1], m));
            if (check != out[c.id])
                throw Error("power map is not constant on class " + std::to_string(c.id));
        }
    }
    return out;
}

}  // namespace homcount
