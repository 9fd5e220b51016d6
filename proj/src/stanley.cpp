#include "sqdepth/stanley.hpp"

#include <algorithm>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <unordered_map>

#include "sqdepth/errors.hpp"

namespace sqdepth {

namespace {

using ordered_json = nlohmann::ordered_json;

// Index lookup for poset elements by bit set.
std::unordered_map<std::uint64_t, int> index_of(const Poset& p) {
    std::unordered_map<std::uint64_t, int> idx;
    idx.reserve(p.elements.size() * 2);
    for (int i = 0; i < p.size(); ++i) idx.emplace(p.elements[i].bits, i);
    return idx;
}

}  // namespace

int Poset::min_degree() const {
    return elements.empty() ? 0 : elements.front().degree();
}

int Poset::max_degree() const {
    return elements.empty() ? 0 : elements.back().degree();
}

Poset build_poset(const Instance& inst) {
    Poset p;
    p.n = inst.n;
    p.elements = quotient_monomials(inst);
    // Interval closure: u | w | v with u, v in the poset puts w in I (above
    // u) and outside J (below v).  One-step witnesses suffice.
    std::unordered_map<std::uint64_t, int> idx = index_of(p);
    for (const Monomial& v : p.elements)
        for (const Monomial& u : p.elements) {
            if (u.degree() + 2 > v.degree() || !divides(u, v)) continue;
            for (int t : Monomial{v.bits & ~u.bits}.indices())
                if (!idx.count(v.without_var(t).bits))
                    throw Error("quotient ground set is not interval closed");
        }
    return p;
}

int IntervalPartition::value() const {
    int v = 0;
    for (std::size_t i = 0; i < intervals.size(); ++i) {
        int deg = intervals[i].top.degree();
        if (i == 0 || deg < v) v = deg;
    }
    return v;
}

IntervalPartition parse_partition(const std::string& json_text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError("json_parse", e.what());
    }
    if (!doc.is_object()) throw InputError("format", "partition file must be a JSON object");
    for (const auto& item : doc.items())
        if (item.key() != "intervals")
            throw InputError("unknown_field", "unknown field \"" + item.key() + "\"");
    if (!doc.contains("intervals")) throw InputError("missing_field", "missing intervals");
    if (!doc["intervals"].is_array())
        throw InputError("format", "intervals must be an array");

    auto parse_monomial = [](const ordered_json& arr) {
        if (!arr.is_array()) throw InputError("format", "interval ends must be index arrays");
        std::vector<int> idx;
        int prev = 0;
        for (const auto& v : arr) {
            if (!v.is_number_integer())
                throw InputError("format", "interval indices must be integers");
            int t = v.get<int>();
            if (t <= prev)
                throw InputError("monomial_indices",
                                 "interval monomials must list strictly increasing 1-based "
                                 "indices");
            prev = t;
            idx.push_back(t);
        }
        try {
            return Monomial::from_indices(idx);
        } catch (const std::invalid_argument& e) {
            throw InputError("monomial_indices", e.what());
        }
    };

    IntervalPartition part;
    for (const auto& entry : doc["intervals"]) {
        if (!entry.is_array() || entry.size() != 2)
            throw InputError("format", "each interval must be a [bottom, top] pair");
        part.intervals.push_back({parse_monomial(entry[0]), parse_monomial(entry[1])});
    }
    return part;
}

IntervalPartition load_partition(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("file_open", "cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_partition(buf.str());
}

std::string serialize_partition(const IntervalPartition& p) {
    ordered_json doc;
    ordered_json arr = ordered_json::array();
    for (const Interval& iv : p.intervals) {
        ordered_json pair = ordered_json::array();
        pair.push_back(iv.bottom.indices());
        pair.push_back(iv.top.indices());
        arr.push_back(pair);
    }
    doc["intervals"] = arr;
    return doc.dump();
}

PartitionCheck verify_partition(const Poset& p, const IntervalPartition& part, int k) {
    PartitionCheck check;
    check.value = part.value();
    std::unordered_map<std::uint64_t, int> idx = index_of(p);

    bool bad_interval = false;
    for (std::size_t i = 0; i < part.intervals.size() && !bad_interval; ++i) {
        const Interval& iv = part.intervals[i];
        std::string label = "interval #" + std::to_string(i + 1);
        if (!idx.count(iv.bottom.bits))
            check.violations.push_back(label + " bottom " + to_string(iv.bottom) +
                                       " is not in the poset");
        else if (!idx.count(iv.top.bits))
            check.violations.push_back(label + " top " + to_string(iv.top) +
                                       " is not in the poset");
        else if (!divides(iv.bottom, iv.top))
            check.violations.push_back(label + " bottom " + to_string(iv.bottom) +
                                       " does not divide top " + to_string(iv.top));
        bad_interval = !check.violations.empty();
    }

    bool overlap_found = false, uncovered_found = false;
    for (const Monomial& w : p.elements) {
        int covers = 0;
        std::size_t first = 0, second = 0;
        for (std::size_t i = 0; i < part.intervals.size(); ++i)
            if (divides(part.intervals[i].bottom, w) && divides(w, part.intervals[i].top)) {
                if (covers == 0)
                    first = i;
                else
                    second = i;
                ++covers;
                if (covers == 2) break;
            }
        if (covers >= 2 && !overlap_found) {
            overlap_found = true;
            check.violations.push_back("element " + to_string(w) + " is covered by intervals #" +
                                       std::to_string(first + 1) + " and #" +
                                       std::to_string(second + 1));
        }
        if (covers == 0 && !uncovered_found) {
            uncovered_found = true;
            check.violations.push_back("element " + to_string(w) + " is uncovered");
        }
        if (overlap_found && uncovered_found) break;
    }

    if (!p.elements.empty() && check.value < k)
        check.violations.push_back("value " + std::to_string(check.value) + " is below k = " +
                                   std::to_string(k));
    check.ok = check.violations.empty();
    return check;
}

namespace {

struct DecisionSearch {
    const Poset& p;
    int k;
    long long budget;
    long long nodes = 0;
    std::unordered_map<std::uint64_t, int> idx;
    // tops[i] = candidate interval tops over element i, canonical order.
    std::vector<std::vector<int>> tops;
    std::vector<char> covered;
    std::vector<Interval> chosen;
    bool out_of_budget = false;

    explicit DecisionSearch(const Poset& p_, int k_, long long budget_)
        : p(p_), k(k_), budget(budget_), idx(index_of(p_)), covered(p_.size(), 0) {
        tops.resize(p.size());
        for (int i = 0; i < p.size(); ++i)
            for (int v = i; v < p.size(); ++v)
                if (p.elements[v].degree() >= k && divides(p.elements[i], p.elements[v]))
                    tops[i].push_back(v);
    }

    // Marks the interval [u, v]; every intermediate monomial lies in the
    // poset by interval closure.  Returns false (and unwinds) if some member
    // is already covered.
    bool mark(int u, int v, char value, std::vector<int>& touched) {
        std::uint64_t bottom = p.elements[u].bits;
        std::uint64_t gap = p.elements[v].bits & ~bottom;
        for (std::uint64_t sub = gap;; sub = (sub - 1) & gap) {
            int w = idx.at(bottom | sub);
            if (value && covered[w]) {
                for (int t : touched) covered[t] = 0;
                return false;
            }
            covered[w] = value;
            if (value) touched.push_back(w);
            if (sub == 0) break;
        }
        return true;
    }

    bool solve(int cursor) {
        if (++nodes > budget) {
            out_of_budget = true;
            return false;
        }
        while (cursor < p.size() && covered[cursor]) ++cursor;
        if (cursor == p.size()) return true;
        for (int v : tops[cursor]) {
            std::vector<int> touched;
            if (!mark(cursor, v, 1, touched)) continue;
            chosen.push_back({p.elements[cursor], p.elements[v]});
            if (solve(cursor + 1)) return true;
            chosen.pop_back();
            for (int t : touched) covered[t] = 0;
            if (out_of_budget) return false;
        }
        return false;
    }
};

}  // namespace

DecisionResult sdepth_decision(const Poset& p, int k, long long budget) {
    DecisionResult res;
    if (p.size() == 0) {
        res.status = SearchStatus::Proven;
        res.certificate = IntervalPartition{};
        return res;
    }
    DecisionSearch search(p, k, budget);
    bool found = search.solve(0);
    res.nodes = search.nodes;
    if (found) {
        res.status = SearchStatus::Proven;
        res.certificate = IntervalPartition{std::move(search.chosen)};
    } else if (search.out_of_budget) {
        res.status = SearchStatus::Timeout;
    } else {
        res.status = SearchStatus::Refuted;
    }
    return res;
}

SdepthResult sdepth(const Poset& p, long long budget) {
    if (p.size() == 0) throw InputError("empty_poset", "sdepth needs a nonempty poset");
    SdepthResult res;
    res.value = p.min_degree();
    res.exact = true;
    for (const Monomial& m : p.elements) res.certificate.intervals.push_back({m, m});
    for (int k = p.min_degree() + 1; k <= p.max_degree(); ++k) {
        DecisionResult dec = sdepth_decision(p, k, budget);
        res.nodes += dec.nodes;
        if (dec.status == SearchStatus::Proven) {
            res.value = k;
            res.certificate = std::move(*dec.certificate);
        } else {
            res.exact = dec.status == SearchStatus::Refuted;
            break;
        }
    }
    return res;
}

namespace {

// Branch-and-bound maximization of the partition value, independent of the
// decision search above.
struct BruteSearch {
    const Poset& p;
    std::unordered_map<std::uint64_t, int> idx;
    std::vector<char> covered;
    int best = -1;

    explicit BruteSearch(const Poset& p_) : p(p_), idx(index_of(p_)), covered(p_.size(), 0) {}

    void run(int cursor, int current_min) {
        if (current_min <= best) return;
        while (cursor < p.size() && covered[cursor]) ++cursor;
        if (cursor == p.size()) {
            best = current_min;
            return;
        }
        std::uint64_t bottom = p.elements[cursor].bits;
        for (int v = cursor; v < p.size(); ++v) {
            if (!divides(p.elements[cursor], p.elements[v])) continue;
            std::uint64_t gap = p.elements[v].bits & ~bottom;
            std::vector<int> touched;
            bool clash = false;
            for (std::uint64_t sub = gap;; sub = (sub - 1) & gap) {
                int w = idx.at(bottom | sub);
                if (covered[w]) {
                    clash = true;
                    break;
                }
                covered[w] = 1;
                touched.push_back(w);
                if (sub == 0) break;
            }
            if (!clash)
                run(cursor + 1, std::min(current_min, p.elements[v].degree()));
            for (int t : touched) covered[t] = 0;
        }
    }
};

}  // namespace

int brute_force_sdepth(const Poset& p) {
    if (p.size() > 14)
        throw InputError("poset_too_large", "brute force is limited to 14 elements");
    if (p.size() == 0) return 0;
    BruteSearch search(p);
    search.run(0, p.max_degree());
    return search.best;
}

}  // namespace sqdepth
