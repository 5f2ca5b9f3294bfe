#include "homcount/homenum.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <thread>

#include "homcount/errors.hpp"

namespace homcount {

namespace {

// A word to test at the deepest generator it mentions: relators must come out
// as the identity (class_id -1), constraint words must land in their class.
struct Check {
    const Word* word;
    int class_id;
};

struct Schedule {
    std::vector<std::vector<Check>> at_depth;
    bool impossible = false;  // an empty constraint word demands a non-identity class
};

Schedule build_schedule(const Presentation& P, const FiniteGroup& G,
                        const std::vector<ClassConstraint>& constraints) {
    int k = P.generator_count();
    Schedule s;
    s.at_depth.resize(static_cast<std::size_t>(k));
    for (const Word& r : P.relators) {
        if (r.empty()) continue;
        int d = r.max_generator();
        if (d >= k) throw SizeMismatch("relator references generator beyond the presentation");
        s.at_depth[d].push_back({&r, -1});
    }
    if (!constraints.empty()) {
        long long nclasses = static_cast<long long>(G.classes().size());
        for (const ClassConstraint& c : constraints) {
            if (c.words.empty()) throw InvalidSpec("constraint with no words");
            if (c.class_id < 0 || c.class_id >= nclasses)
                throw IndexOutOfRange("constraint class id " + std::to_string(c.class_id) +
                                      " out of range");
            for (const Word& w : c.words) {
                if (w.max_generator() >= k)
                    throw SizeMismatch("constraint word references generator beyond the presentation");
                if (w.empty()) {
                    if (c.class_id != G.class_of(0)) s.impossible = true;
                    continue;
                }
                s.at_depth[w.max_generator()].push_back({&w, c.class_id});
            }
        }
    }
    return s;
}

Int total_letters(const Presentation& P, const std::vector<ClassConstraint>& constraints) {
    Int letters = 0;
    for (const Word& r : P.relators) letters += static_cast<long long>(r.size());
    for (const ClassConstraint& c : constraints)
        for (const Word& w : c.words) letters += static_cast<long long>(w.size());
    return letters;
}

struct Walker {
    const FiniteGroup& G;
    const Schedule& sched;
    int k;
    long long n;
    const std::uint16_t* tbl;
    bool store;

    std::vector<int> images;
    std::vector<int> inv_images;
    std::vector<HomAssignment> found;
    Int count = 0;

    Walker(const FiniteGroup& g, const Schedule& s, int gens, bool keep)
        : G(g), sched(s), k(gens), n(g.order()), tbl(g.table_data()), store(keep) {
        images.assign(static_cast<std::size_t>(k), 0);
        inv_images.assign(static_cast<std::size_t>(k), 0);
    }

    int mul(int a, int b) const {
        return tbl ? tbl[static_cast<std::size_t>(a) * n + b] : G.mul(a, b);
    }

    int evaluate(const Word& w) const {
        int acc = 0;
        for (int v : w.letters)
            acc = mul(acc, v > 0 ? images[static_cast<std::size_t>(v) - 1]
                                 : inv_images[static_cast<std::size_t>(-v) - 1]);
        return acc;
    }

    bool depth_ok(int depth) const {
        for (const Check& c : sched.at_depth[static_cast<std::size_t>(depth)]) {
            int value = evaluate(*c.word);
            if (c.class_id < 0 ? value != 0 : G.class_of(value) != c.class_id) return false;
        }
        return true;
    }

    void descend(int depth) {
        if (depth == k) {
            ++count;
            if (store) found.push_back({images});
            return;
        }
        for (int g = 0; g < n; ++g) {
            images[static_cast<std::size_t>(depth)] = g;
            inv_images[static_cast<std::size_t>(depth)] = G.inv(g);
            if (depth_ok(depth)) descend(depth + 1);
        }
    }

    // Enumerates only the branch with a fixed first image (worker partition).
    void descend_from(int first) {
        images[0] = first;
        inv_images[0] = G.inv(first);
        if (depth_ok(0)) descend(1);
    }
};

HomSet enumerate_impl(const Presentation& P, const FiniteGroup& G,
                      const std::vector<ClassConstraint>& constraints,
                      const EnumOptions& options) {
    Int cost = enumeration_cost(P, G, constraints);
    if (cost > options.budget)
        throw BudgetExceeded("enumeration cost " + to_decimal(cost) + " exceeds budget " +
                                 to_decimal(options.budget),
                             cost);

    HomSet H{P, G, {}, 0, options.store};
    int k = P.generator_count();
    Schedule sched = build_schedule(P, G, constraints);
    if (sched.impossible) return H;

    if (k == 0) {
        // Only the empty assignment; relators are empty words and hold.
        H.count = 1;
        if (options.store) H.assignments.push_back({});
        return H;
    }

    long long n = G.order();
    int workers = options.workers;
    if (workers > n) workers = static_cast<int>(n);
    if (workers <= 1) {
        Walker w(G, sched, k, options.store);
        w.descend(0);
        H.count = w.count;
        H.assignments = std::move(w.found);
        return H;
    }

    // Partition on the first generator's image; stitch results back together
    // in image order so the outcome never depends on the worker count.
    std::vector<Int> counts(static_cast<std::size_t>(n), Int(0));
    std::vector<std::vector<HomAssignment>> blocks(static_cast<std::size_t>(n));
    std::atomic<long long> next{0};
    auto run = [&] {
        Walker w(G, sched, k, options.store);
        for (;;) {
            long long v = next.fetch_add(1);
            if (v >= n) break;
            w.count = 0;
            w.found.clear();
            w.descend_from(static_cast<int>(v));
            counts[static_cast<std::size_t>(v)] = w.count;
            blocks[static_cast<std::size_t>(v)] = std::move(w.found);
        }
    };
    std::vector<std::thread> pool;
    for (int i = 0; i < workers; ++i) pool.emplace_back(run);
    for (auto& t : pool) t.join();
    for (long long v = 0; v < n; ++v) {
        H.count += counts[static_cast<std::size_t>(v)];
        for (auto& a : blocks[static_cast<std::size_t>(v)])
            H.assignments.push_back(std::move(a));
    }
    return H;
}

}  // namespace

Int enumeration_cost(const Presentation& P, const FiniteGroup& G,
                     const std::vector<ClassConstraint>& constraints) {
    Int letters = total_letters(P, constraints);
    if (letters < 1) letters = 1;
    Int space = 1;
    for (int i = 0; i < P.generator_count(); ++i) space *= G.order();
    return space * letters;
}

HomSet enumerate_homs(const Presentation& P, const FiniteGroup& G, const EnumOptions& options) {
    return enumerate_impl(P, G, {}, options);
}

HomSet enumerate_constrained(const Presentation& P, const FiniteGroup& G,
                             const std::vector<ClassConstraint>& constraints,
                             const EnumOptions& options) {
    if (!constraints.empty()) G.classes();  // force the lazy computation before any threads start
    return enumerate_impl(P, G, constraints, options);
}

OrbitDecomposition orbit_decomposition(const HomSet& H) {
    if (!H.stored) throw InvalidSpec("orbit decomposition needs a stored HomSet");
    const FiniteGroup& G = H.group;
    long long n = G.order();
    int k = H.presentation.generator_count();

    std::map<std::vector<int>, std::size_t> where;
    for (std::size_t i = 0; i < H.assignments.size(); ++i)
        where.emplace(H.assignments[i].images, i);

    OrbitDecomposition D;
    std::vector<char> visited(H.assignments.size(), 0);
    std::vector<int> conj(static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < H.assignments.size(); ++i) {
        if (visited[i]) continue;
        const auto& rep = H.assignments[i].images;
        long long stab = 0;
        long long size = 0;
        for (int g = 0; g < n; ++g) {
            for (int j = 0; j < k; ++j) conj[static_cast<std::size_t>(j)] = G.conj(g, rep[static_cast<std::size_t>(j)]);
            auto it = where.find(conj);
            if (it == where.end())
                throw Error("homomorphism set is not closed under conjugation");
            if (!visited[it->second]) {
                visited[it->second] = 1;
                ++size;
            }
            if (conj == rep) ++stab;
        }
        if (stab * size != n)
            throw Error("orbit-stabilizer mismatch: " + std::to_string(size) + " * " +
                        std::to_string(stab) + " != " + std::to_string(n));
        D.orbits.push_back({H.assignments[i], size, stab});
    }
    return D;
}

namespace {

// phi composed with sigma, as a raw image tuple (not necessarily a hom).
std::vector<int> sigma_images(const HomAssignment& phi, const AutomorphismData& sigma,
                              const FiniteGroup& G) {
    std::vector<int> out(sigma.images.size());
    for (std::size_t i = 0; i < sigma.images.size(); ++i)
        out[i] = evaluate_word(sigma.images[i], phi.images, G);
    return out;
}

bool conjugate_tuples(const std::vector<int>& a, const std::vector<int>& b, const FiniteGroup& G) {
    long long n = G.order();
    for (int g = 0; g < n; ++g) {
        bool ok = true;
        for (std::size_t j = 0; j < a.size(); ++j)
            if (G.conj(g, b[j]) != a[j]) {
                ok = false;
                break;
            }
        if (ok) return true;
    }
    return false;
}

}  // namespace

HomSet twisted_fixed_subset(const HomSet& H, const AutomorphismData& sigma) {
    if (!H.stored) throw InvalidSpec("twisted subset needs a stored HomSet");
    if (static_cast<int>(sigma.images.size()) != H.presentation.generator_count())
        throw SizeMismatch("automorphism image count does not match the presentation");
    HomSet out{H.presentation, H.group, {}, 0, true};
    for (const HomAssignment& phi : H.assignments) {
        std::vector<int> psi = sigma_images(phi, sigma, H.group);
        if (conjugate_tuples(psi, phi.images, H.group)) {
            out.assignments.push_back(phi);
            ++out.count;
        }
    }
    return out;
}

TorsorReport verify_torsor(const Presentation& P, const AutomorphismData& sigma,
                           const FiniteGroup& G, const std::vector<ClassConstraint>& constraints,
                           const EnumOptions& options) {
    int k = P.generator_count();
    for (const ClassConstraint& c : constraints)
        for (const Word& w : c.words)
            if (w.max_generator() >= k)
                throw InvalidSpec("torsor constraint words must avoid the stable generator");

    Presentation torus = semidirect_presentation(P, sigma);
    EnumOptions stored = options;
    stored.store = true;

    HomSet down = constraints.empty() ? enumerate_homs(P, G, stored)
                                      : enumerate_constrained(P, G, constraints, stored);
    HomSet up = constraints.empty() ? enumerate_homs(torus, G, stored)
                                    : enumerate_constrained(torus, G, constraints, stored);

    // A bad sigma shows up as some phi whose sigma-composite breaks a relator.
    for (const HomAssignment& phi : down.assignments) {
        std::vector<int> psi = sigma_images(phi, sigma, G);
        for (const Word& r : P.relators)
            if (evaluate_word(r, psi, G) != 0)
                throw SigmaInconsistent(
                    "composing with sigma breaks a relator at a homomorphism; "
                    "sigma is not an automorphism at this image");
    }

    TorsorReport report;
    report.upstairs_count = up.count;

    // Upstairs tuples extend downstairs ones by the image of t, and both lists
    // are lexicographic, so fibers are contiguous runs with matching prefixes.
    std::size_t ui = 0;
    HomSet twisted{P, G, {}, 0, true};
    Int fiber_total = 0;
    for (const HomAssignment& phi : down.assignments) {
        FiberEntry entry;
        entry.base = phi;
        while (ui < up.assignments.size() &&
               std::equal(phi.images.begin(), phi.images.end(), up.assignments[ui].images.begin()) ) {
            ++entry.fiber_size;
            ++ui;
        }
        fiber_total += entry.fiber_size;

        long long stab = 0;
        for (int g = 0; g < G.order(); ++g) {
            bool same = true;
            for (std::size_t j = 0; j < phi.images.size() && same; ++j)
                same = G.conj(g, phi.images[j]) == phi.images[j];
            if (same) ++stab;
        }
        entry.stabilizer_order = stab;

        std::vector<int> psi = sigma_images(phi, sigma, G);
        entry.twisted = conjugate_tuples(psi, phi.images, G);
        if (entry.twisted) {
            twisted.assignments.push_back(phi);
            ++twisted.count;
        }
        report.fibers.push_back(std::move(entry));
    }
    if (ui != up.assignments.size() || fiber_total != up.count)
        throw Error("upstairs assignments did not partition into fibers");

    OrbitDecomposition orbits = orbit_decomposition(twisted);
    report.orbit_count = static_cast<long long>(orbits.orbits.size());
    report.quotient = Rat(up.count, Int(G.order()));

    bool ok = is_integer(report.quotient) && Rat(report.orbit_count) == report.quotient;
    for (const FiberEntry& e : report.fibers) {
        if (e.twisted && e.fiber_size != e.stabilizer_order) ok = false;
        if (!e.twisted && e.fiber_size != 0) ok = false;
    }
    report.pass = ok;
    return report;
}

}  // namespace homcount
