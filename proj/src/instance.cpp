#include "sqdepth/instance.hpp"

#include <algorithm>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

namespace sqdepth {

namespace {

using ordered_json = nlohmann::ordered_json;

bool is_prime_u32(long long c) {
    if (c < 2) return false;
    for (long long q = 2; q * q <= c; ++q)
        if (c % q == 0) return false;
    return true;
}

}  // namespace

FieldSpec make_field(long long c) {
    if (c == 0) return FieldSpec{0};
    if (c < 0 || c >= (1LL << 31) || !is_prime_u32(c))
        throw InputError("char_not_prime", "char must be 0 or a prime below 2^31, got " +
                                               std::to_string(c));
    return FieldSpec{static_cast<std::uint32_t>(c)};
}

Instance make_instance(int n, std::vector<Monomial> gensI, std::vector<Monomial> gensJ,
                       FieldSpec field) {
    if (n < 1 || n > Monomial::max_vars)
        throw InputError("n_range", "n must lie in 1..63, got " + std::to_string(n));
    std::uint64_t ground = n == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1;
    for (const auto* list : {&gensI, &gensJ}) {
        for (const Monomial& g : *list) {
            if (g.is_one())
                throw InputError("empty_monomial_generator",
                                 "the unit monomial cannot generate I or J");
            if (g.bits & ~ground)
                throw InputError("monomial_support",
                                 "generator " + to_string(g) + " uses a variable above n");
        }
    }

    Instance inst;
    inst.n = n;
    inst.field = field;
    inst.I = minimalize(n, std::move(gensI));
    inst.J = minimalize(n, std::move(gensJ));
    if (inst.I.is_zero()) throw InputError("I_zero", "I must be nonzero (J is strictly inside I)");

    inst.d = inst.I.min_degree();
    for (const Monomial& g : inst.I.gens)
        (g.degree() == inst.d ? inst.F : inst.E).push_back(g);

    for (const Monomial& g : inst.J.gens)
        if (g.degree() <= inst.d)
            throw InputError("J_degree_normalization",
                             "J generator " + to_string(g) + " has degree <= d = " +
                                 std::to_string(inst.d));
    for (const Monomial& g : inst.J.gens)
        if (!contains(inst.I, g))
            throw InputError("J_subset_of_I",
                             "J generator " + to_string(g) + " does not lie in I");
    // With J generated above degree d, the degree-d generators of I witness
    // J != I; keep the guard for clarity.
    for (const Monomial& f : inst.F)
        if (contains(inst.J, f))
            throw InputError("J_proper_in_I", "generator " + to_string(f) + " of I lies in J");
    return inst;
}

namespace {

std::vector<Monomial> parse_gen_list(const ordered_json& arr, const char* key) {
    if (!arr.is_array()) throw InputError("format", std::string(key) + " must be an array");
    std::vector<Monomial> out;
    for (const auto& entry : arr) {
        if (!entry.is_array())
            throw InputError("format", std::string(key) + " entries must be index arrays");
        std::vector<int> idx;
        int prev = 0;
        for (const auto& v : entry) {
            if (!v.is_number_integer())
                throw InputError("format", std::string(key) + " indices must be integers");
            int t = v.get<int>();
            if (t <= prev)
                throw InputError("monomial_indices",
                                 std::string(key) + " monomials must list strictly increasing "
                                                    "1-based indices");
            prev = t;
            idx.push_back(t);
        }
        try {
            out.push_back(Monomial::from_indices(idx));
        } catch (const std::invalid_argument& e) {
            throw InputError("monomial_indices", e.what());
        }
    }
    return out;
}

}  // namespace

Instance parse_instance(const std::string& json_text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError("json_parse", e.what());
    }
    if (!doc.is_object()) throw InputError("format", "instance file must be a JSON object");
    for (const auto& item : doc.items()) {
        const std::string& key = item.key();
        if (key != "format" && key != "n" && key != "I" && key != "J" && key != "char")
            throw InputError("unknown_field", "unknown field \"" + key + "\"");
    }
    if (doc.contains("format") &&
        (!doc["format"].is_number_integer() || doc["format"].get<int>() != 1))
        throw InputError("format_version", "format must be 1");
    for (const char* key : {"n", "I", "J", "char"})
        if (!doc.contains(key)) throw InputError("missing_field", std::string("missing ") + key);
    if (!doc["n"].is_number_integer()) throw InputError("format", "n must be an integer");
    if (!doc["char"].is_number_integer()) throw InputError("format", "char must be an integer");

    int n = doc["n"].get<int>();
    FieldSpec field = make_field(doc["char"].get<long long>());
    return make_instance(n, parse_gen_list(doc["I"], "I"), parse_gen_list(doc["J"], "J"), field);
}

Instance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("file_open", "cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_instance(buf.str());
}

std::string serialize_instance(const Instance& inst) {
    ordered_json doc;
    doc["format"] = 1;
    doc["n"] = inst.n;
    auto gens_to_json = [](const MonomialIdeal& ideal) {
        ordered_json arr = ordered_json::array();
        for (const Monomial& g : ideal.gens) arr.push_back(g.indices());
        return arr;
    };
    doc["I"] = gens_to_json(inst.I);
    doc["J"] = gens_to_json(inst.J);
    doc["char"] = inst.field.characteristic;
    return doc.dump();
}

std::string instance_digest(const Instance& inst) {
    std::string bytes = serialize_instance(inst);
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

RestrictedInstance restrict_support(const Instance& inst) {
    std::uint64_t used = 0;
    for (const Monomial& g : inst.I.gens) used |= g.bits;
    for (const Monomial& g : inst.J.gens) used |= g.bits;

    RestrictedInstance out;
    std::vector<int> old_to_new(inst.n + 1, 0);
    for (int t = 1; t <= inst.n; ++t)
        if ((used >> (t - 1)) & 1) {
            out.index_map.push_back(t);
            old_to_new[t] = int(out.index_map.size());
        }
    int nn = int(out.index_map.size());
    out.removed = inst.n - nn;

    auto remap = [&](const MonomialIdeal& ideal) {
        std::vector<Monomial> gens;
        for (const Monomial& g : ideal.gens) {
            Monomial m;
            for (int t : g.indices()) m = m.with_var(old_to_new[t]);
            gens.push_back(m);
        }
        return gens;
    };
    out.inst = make_instance(nn, remap(inst.I), remap(inst.J), inst.field);
    return out;
}

std::vector<Monomial> quotient_monomials(const Instance& inst) {
    if (inst.n > 20)
        throw InputError("n_too_large_for_enumeration",
                         "ground-set enumeration is limited to n <= 20");
    std::vector<Monomial> out;
    for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << inst.n); ++bits) {
        Monomial m{bits};
        if (contains(inst.I, m) && !contains(inst.J, m)) out.push_back(m);
    }
    std::sort(out.begin(), out.end(), CanonicalLess{});
    return out;
}

}  // namespace sqdepth
